//! Acceptance suite: every criterion below is exercised at its stated
//! tolerance and prints one pass line. Run with `--nocapture` to see
//! them; any failure fails the corresponding test.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

// The grid criteria assert wall-clock budgets and criterion 8 saturates
// every core; run the suite one criterion at a time.
static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

use fourfold_core::{
    abelianization, apply_surgeries, base_manifold_x, build_presentation, classify_even_indefinite,
    enumerate_candidates, is_even, render_candidate, signature, smith_normal_form,
    standard_surgeries, surgered_model, sw_value_after_surgery, todd_coxeter, z_model, Alphabet,
    Enumeration, EnumerationOutcome, IntegerMatrix, Presentation, TrivialityVerdict, Word,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

const MAX_COSETS: usize = fourfold_core::coset::DEFAULT_MAX_COSETS;

#[test]
fn criterion_1_order_grid() {
    let _guard = serial();
    let grid_start = Instant::now();
    let mut worst = Duration::ZERO;
    for p in 1u64..=6 {
        for n in 1u64..=5 {
            let cell_start = Instant::now();
            let presentation = build_presentation(n, p).unwrap();
            let result = todd_coxeter(&presentation, MAX_COSETS);
            assert_eq!(
                result.outcome,
                EnumerationOutcome::Finished { order: p },
                "n={n} p={p}"
            );
            let inv = abelianization(&presentation);
            assert_eq!(inv.free_rank, 0, "n={n} p={p}");
            if p >= 2 {
                assert_eq!(inv.invariant_factors, vec![BigInt::from(p)], "n={n} p={p}");
            } else {
                assert!(inv.invariant_factors.is_empty(), "n={n} p={p}");
            }
            let cell = cell_start.elapsed();
            worst = worst.max(cell);
            assert!(cell < Duration::from_secs(2), "n={n} p={p} took {cell:?}");
        }
    }
    let grid = grid_start.elapsed();
    assert!(grid < Duration::from_secs(60), "grid took {grid:?}");
    println!(
        "criterion 1: PASS — Finished(p) and H1 = Z/p on the whole grid \
         (worst cell {worst:?}, grid {grid:?})"
    );
}

#[test]
fn criterion_2_p_zero_abelianization() {
    let _guard = serial();
    for n in 1u64..=5 {
        let inv = abelianization(&build_presentation(n, 0).unwrap());
        assert_eq!(inv.free_rank, 1, "n={n}");
        assert!(inv.invariant_factors.is_empty(), "n={n}");
    }
    println!("criterion 2: PASS — H1 = Z at p = 0 for n in 1..=5");
}

#[test]
fn criterion_3_proof_word_replay() {
    let _guard = serial();
    for n in 1u64..=3 {
        let presentation = build_presentation(n, 1).unwrap();
        let alphabet = presentation.alphabet();
        let run = Enumeration::run(&presentation, MAX_COSETS);
        assert_eq!(
            run.result.outcome,
            EnumerationOutcome::Finished { order: 1 },
            "n={n}"
        );
        let mut words: Vec<Word> = vec![
            alphabet.parse_word("b1*b2^2*b1^-1*b2^-2").unwrap(),
            alphabet.parse_word("d1*b2^2*c1*b2^-2").unwrap(),
            alphabet.parse_word("a1").unwrap(),
        ];
        words.extend(alphabet.generators().map(|g| g.word()));
        for w in &words {
            assert_eq!(
                run.word_is_trivial(w).unwrap(),
                TrivialityVerdict::Trivial,
                "n={n}: {w}"
            );
        }
    }
    println!("criterion 3: PASS — intermediate identities and all generators trivial at p = 1");
}

#[test]
fn criterion_4_invariant_bookkeeping() {
    let _guard = serial();
    let base = base_manifold_x();
    let alphabet = base.pi1.alphabet();

    let m = apply_surgeries(&base, &standard_surgeries(alphabet, 1, 1).unwrap()).unwrap();
    assert_eq!((m.euler, m.signature, m.b1, m.b2), (4, 0, 0, 2));

    let z_like = apply_surgeries(&base, &standard_surgeries(alphabet, 1, 0).unwrap()).unwrap();
    assert_eq!(
        (z_like.euler, z_like.signature, z_like.b1, z_like.b2),
        (4, 0, 1, 4)
    );

    println!("criterion 4: PASS — (e,s,b1,b2) = (4,0,0,2) at p = 1 and (4,0,1,4) at p = 0");
}

#[test]
fn criterion_5_form_classification() {
    let _guard = serial();
    for n in [1u64, 3, 5] {
        let m = surgered_model(n, 1).unwrap();
        assert!(is_even(&m.form));
        assert_eq!(signature(&m.form).unwrap(), 0);
        let class = classify_even_indefinite(&m.form).unwrap();
        assert_eq!((class.hyperbolic, class.e8), (1, 0));
    }
    let x = base_manifold_x();
    assert_eq!(signature(&x.form).unwrap(), 0);
    let class = classify_even_indefinite(&x.form).unwrap();
    assert_eq!((class.hyperbolic, class.e8), (7, 0));
    println!("criterion 5: PASS — M(n,1) form is H (even, signature 0); X form is 7H");
}

#[test]
fn criterion_6_sw_enumeration() {
    let _guard = serial();
    let started = Instant::now();

    let z = z_model();
    let z_candidates = enumerate_candidates(&z, &z.surfaces).unwrap();
    let rendered: Vec<String> = z_candidates
        .iter()
        .map(|c| render_candidate(&c.coefficients, &z.dual_labels))
        .collect();
    assert_eq!(rendered, vec!["-2A-2B", "2A+2B"]);
    assert!(z_candidates.iter().all(|c| c.dimension.is_zero()));

    for n in [1u64, 2, 5] {
        let m = surgered_model(n, 1).unwrap();
        let candidates = enumerate_candidates(&m, &m.surfaces).unwrap();
        let rendered: Vec<String> = candidates
            .iter()
            .map(|c| render_candidate(&c.coefficients, &m.dual_labels))
            .collect();
        assert_eq!(rendered, vec!["-2A-2B", "2A+2B"], "n={n}");
    }

    let values: Vec<u64> = (1..=10).map(sw_value_after_surgery).collect();
    assert_eq!(values, (1..=10).collect::<Vec<_>>());
    let distinct: BTreeSet<u64> = values.iter().copied().collect();
    assert_eq!(distinct.len(), 10);

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 6: PASS — candidates exactly (+-)(2A+2B) with dimension 0; \
         values 1..=10 pairwise distinct ({elapsed:?})"
    );
}

// Deterministic splitmix64 for the randomized suites.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

fn random_matrix(rng: &mut SplitMix, rows: usize, cols: usize) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.range(-50, 50)).collect())
        .collect();
    IntegerMatrix::from_rows(&rows)
}

fn random_unimodular(rng: &mut SplitMix, n: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    for _ in 0..8 {
        let a = rng.below(n as u64) as usize;
        let b = rng.below(n as u64) as usize;
        if a == b {
            continue;
        }
        let c = BigInt::from(rng.range(-3, 3));
        for j in 0..n {
            let t = &c * &m[(b, j)];
            m[(a, j)] += t;
        }
    }
    m
}

#[test]
fn criterion_7a_snf_property_suite() {
    let _guard = serial();
    let mut rng = SplitMix(0x5eed_0001);
    let mut checked = 0usize;
    while checked < 1000 {
        let rows = 1 + rng.below(12) as usize;
        let cols = 1 + rng.below(12) as usize;
        let m = random_matrix(&mut rng, rows, cols);

        let snf = smith_normal_form(&m);
        // transform product
        assert_eq!(
            snf.left.mul(&m).mul(&snf.right),
            snf.diagonal_matrix(rows, cols)
        );
        assert!(snf.left.determinant().magnitude().is_one());
        assert!(snf.right.determinant().magnitude().is_one());
        // divisibility chain
        for w in snf.diagonal.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        // determinant agreement on square inputs
        if rows == cols {
            let product = snf.diagonal.iter().fold(BigInt::one(), |acc, d| acc * d);
            assert_eq!(m.determinant().abs(), product);
        }
        // uniqueness under unimodular pre/post multiplication
        let u = random_unimodular(&mut rng, rows);
        let v = random_unimodular(&mut rng, cols);
        let transformed = u.mul(&m).mul(&v);
        assert_eq!(smith_normal_form(&transformed).diagonal, snf.diagonal);

        checked += 1;
    }
    println!("criterion 7a: PASS — SNF transform/determinant/uniqueness on {checked} matrices");
}

#[test]
fn criterion_7b_word_property_suite() {
    let _guard = serial();
    let alphabet = Alphabet::new(&["a", "b", "c"]).unwrap();
    let gens: Vec<_> = alphabet.generators().collect();
    let mut rng = SplitMix(0x5eed_0002);
    let mut checked = 0usize;
    while checked < 1000 {
        let len = rng.below(24) as usize;
        let raw: Vec<(fourfold_core::Generator, BigInt)> = (0..len)
            .map(|_| {
                let g = gens[rng.below(3) as usize].clone();
                (g, BigInt::from(rng.range(-5, 5)))
            })
            .collect();
        let w = Word::reduce(&alphabet, &raw);

        // idempotence
        let again: Vec<_> = w.syllables().map(|(g, e)| (g, e.clone())).collect();
        assert_eq!(Word::reduce(&alphabet, &again), w);
        // inverse cancellation
        assert!(w.concat(&w.inverse()).is_identity());
        // involution
        assert_eq!(w.inverse().inverse(), w);

        checked += 1;
    }
    println!("criterion 7b: PASS — word algebra laws on {checked} random words");
}

type Perm = Vec<usize>;
type Fixture = (
    &'static str,
    Vec<&'static str>,
    Vec<&'static str>,
    Vec<Perm>,
);

fn compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

fn perm_identity(n: usize) -> Perm {
    (0..n).collect()
}

fn perm_inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn closure_order(gens: &[Perm]) -> usize {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut frontier = vec![perm_identity(gens[0].len())];
    seen.insert(frontier[0].clone());
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(&p, g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

fn eval_in_model(w: &Word, images: &[Perm]) -> Perm {
    let mut acc = perm_identity(images[0].len());
    for (gen, positive) in w.letters() {
        let g = if positive {
            images[gen].clone()
        } else {
            perm_inverse(&images[gen])
        };
        acc = compose(&acc, &g);
    }
    acc
}

fn cycle(n: usize, points: &[usize]) -> Perm {
    let mut p = perm_identity(n);
    for w in points.windows(2) {
        p[w[0]] = w[1];
    }
    if points.len() > 1 {
        p[*points.last().unwrap()] = points[0];
    }
    p
}

#[test]
fn criterion_7c_coset_enumeration_oracle_battery() {
    let _guard = serial();
    // presentations of known groups with permutation models; the model
    // order comes from an independent closure computation
    let two_cycles =
        |n: usize, a: &[usize], b: &[usize]| -> Perm { compose(&cycle(n, a), &cycle(n, b)) };
    let battery: Vec<Fixture> = vec![
        ("trivial", vec!["x"], vec!["x"], vec![perm_identity(1)]),
        ("C2", vec!["x"], vec!["x^2"], vec![cycle(2, &[0, 1])]),
        (
            "C5",
            vec!["x"],
            vec!["x^5"],
            vec![cycle(5, &[0, 1, 2, 3, 4])],
        ),
        (
            "C6",
            vec!["x", "y"],
            vec!["x^2", "y^3", "x*y*x^-1*y^-1"],
            vec![cycle(5, &[0, 1]), cycle(5, &[2, 3, 4])],
        ),
        (
            "S3",
            vec!["r", "s"],
            vec!["r^3", "s^2", "r*s*r*s"],
            vec![cycle(3, &[0, 1, 2]), cycle(3, &[0, 1])],
        ),
        (
            "D4",
            vec!["r", "s"],
            vec!["r^4", "s^2", "r*s*r*s"],
            vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[1, 3])],
        ),
        (
            "D6",
            vec!["r", "s"],
            vec!["r^6", "s^2", "r*s*r*s"],
            vec![
                cycle(6, &[0, 1, 2, 3, 4, 5]),
                two_cycles(6, &[1, 5], &[2, 4]),
            ],
        ),
        (
            "A4",
            vec!["a", "b"],
            vec!["a^2", "b^3", "a*b*a*b*a*b"],
            vec![two_cycles(4, &[0, 1], &[2, 3]), cycle(4, &[0, 1, 2])],
        ),
        (
            "S4",
            vec!["a", "b"],
            vec!["a^2", "b^3", "a*b*a*b*a*b*a*b"],
            vec![cycle(4, &[0, 1]), cycle(4, &[1, 2, 3])],
        ),
    ];
    assert!(battery.len() >= 8);
    for (name, gens, relators, images) in &battery {
        let alphabet = Alphabet::new(gens).unwrap();
        let relators: Vec<Word> = relators
            .iter()
            .map(|r| alphabet.parse_word(r).unwrap())
            .collect();
        let presentation = Presentation::new(alphabet, relators);
        for r in presentation.relators() {
            assert_eq!(
                eval_in_model(r, images),
                perm_identity(images[0].len()),
                "{name}: fixture relator fails in the model"
            );
        }
        let oracle = closure_order(images) as u64;
        assert!((1..=24).contains(&oracle));
        let enumerated = todd_coxeter(&presentation, 100_000);
        assert_eq!(
            enumerated.outcome,
            EnumerationOutcome::Finished { order: oracle },
            "{name}"
        );
    }
    println!(
        "criterion 7c: PASS — enumeration agrees with the permutation oracle on {} presentations",
        battery.len()
    );
}

#[test]
fn criterion_8_report_determinism() {
    let _guard = serial();
    let run = || {
        let output = Command::new(env!("CARGO_BIN_EXE_fourfold"))
            .args(["verify", "--n", "1..5", "--p", "1..6", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(
            output.status.success(),
            "verify failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        let mut value: serde_json::Value =
            serde_json::from_slice(&output.stdout).expect("report parses");
        for row in value["rows"].as_array_mut().expect("rows") {
            row["timing_ms"] = serde_json::json!(0);
        }
        serde_json::to_string_pretty(&value).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "reports differ across runs");
    assert!(first.contains("\"all_passed\": true"));
    println!("criterion 8: PASS — full-grid JSON reports byte-identical modulo timing");
}
