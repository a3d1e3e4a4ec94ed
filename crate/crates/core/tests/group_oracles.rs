//! Coset enumeration against an independent permutation-group oracle.
//!
//! Each battery entry is a classical presentation together with a
//! concrete permutation model of the group it presents. The oracle
//! checks that the generator images satisfy the relators (validating the
//! fixture) and computes the model's order by closure; Todd-Coxeter must
//! report exactly that order.

use std::collections::BTreeSet;

use fourfold_core::{todd_coxeter, Alphabet, EnumerationOutcome, Presentation};

type Perm = Vec<usize>;

/// Left-to-right composition: apply `p`, then `q`.
fn compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// Order of the subgroup generated by the images, by breadth-first
/// closure under multiplication.
fn closure_order(gens: &[Perm]) -> usize {
    let n = gens[0].len();
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut frontier = vec![identity(n)];
    seen.insert(identity(n));
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

/// Evaluates a word in the permutation model.
fn eval_word(word: &fourfold_core::Word, images: &[Perm]) -> Perm {
    let n = images[0].len();
    let mut acc = identity(n);
    for (gen, positive) in word.letters() {
        let g = if positive {
            images[gen].clone()
        } else {
            inverse(&images[gen])
        };
        acc = compose(&acc, &g);
    }
    acc
}

fn cycle(n: usize, points: &[usize]) -> Perm {
    let mut p = identity(n);
    for w in points.windows(2) {
        p[w[0]] = w[1];
    }
    if let (Some(&first), Some(&last)) = (points.first(), points.last()) {
        p[last] = first;
    }
    p
}

fn product(n: usize, cycles: &[&[usize]]) -> Perm {
    let mut p = identity(n);
    for c in cycles {
        let one = cycle(n, c);
        p = compose(&p, &one);
    }
    p
}

/// Left-regular permutation representation of the quaternion group on
/// the symbols [1, -1, i, -i, j, -j, k, -k].
fn quaternion_images() -> Vec<Perm> {
    // multiplication table index arithmetic: 0:1, 1:-1, 2:i, 3:-i, 4:j,
    // 5:-j, 6:k, 7:-k
    fn mul(a: usize, b: usize) -> usize {
        let sign = |x: usize| x % 2; // 0 positive, 1 negative
        let axis = |x: usize| x / 2; // 0:1, 1:i, 2:j, 3:k
        let (sa, ea) = (sign(a), axis(a));
        let (sb, eb) = (sign(b), axis(b));
        let (axis_out, extra_sign) = match (ea, eb) {
            (0, e) => (e, 0),
            (e, 0) => (e, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        };
        2 * axis_out + (sa + sb + extra_sign) % 2
    }
    // right multiplication so that left-to-right words compose correctly
    let by = |g: usize| -> Perm { (0..8).map(|x| mul(x, g)).collect() };
    vec![by(2), by(4)] // images of x -> i, y -> j
}

struct Fixture {
    name: &'static str,
    generators: &'static [&'static str],
    relators: &'static [&'static str],
    images: Vec<Perm>,
    order: usize,
}

fn battery() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "trivial",
            generators: &["x"],
            relators: &["x"],
            images: vec![identity(1)],
            order: 1,
        },
        Fixture {
            name: "cyclic 2",
            generators: &["x"],
            relators: &["x^2"],
            images: vec![cycle(2, &[0, 1])],
            order: 2,
        },
        Fixture {
            name: "cyclic 5",
            generators: &["x"],
            relators: &["x^5"],
            images: vec![cycle(5, &[0, 1, 2, 3, 4])],
            order: 5,
        },
        Fixture {
            name: "cyclic 6 as C2 x C3",
            generators: &["x", "y"],
            relators: &["x^2", "y^3", "x*y*x^-1*y^-1"],
            images: vec![cycle(5, &[0, 1]), cycle(5, &[2, 3, 4])],
            order: 6,
        },
        Fixture {
            name: "symmetric S3",
            generators: &["r", "s"],
            relators: &["r^3", "s^2", "r*s*r*s"],
            images: vec![cycle(3, &[0, 1, 2]), cycle(3, &[0, 1])],
            order: 6,
        },
        Fixture {
            name: "dihedral D4",
            generators: &["r", "s"],
            relators: &["r^4", "s^2", "r*s*r*s"],
            images: vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[1, 3])],
            order: 8,
        },
        Fixture {
            name: "quaternion Q8",
            generators: &["x", "y"],
            relators: &["x^4", "x^2*y^-2", "y^-1*x*y*x"],
            images: quaternion_images(),
            order: 8,
        },
        Fixture {
            name: "dihedral D6",
            generators: &["r", "s"],
            relators: &["r^6", "s^2", "r*s*r*s"],
            images: vec![
                cycle(6, &[0, 1, 2, 3, 4, 5]),
                product(6, &[&[1, 5], &[2, 4]]),
            ],
            order: 12,
        },
        Fixture {
            name: "alternating A4",
            generators: &["a", "b"],
            relators: &["a^2", "b^3", "a*b*a*b*a*b"],
            images: vec![product(4, &[&[0, 1], &[2, 3]]), cycle(4, &[0, 1, 2])],
            order: 12,
        },
        Fixture {
            name: "symmetric S4",
            generators: &["a", "b"],
            relators: &["a^2", "b^3", "a*b*a*b*a*b*a*b"],
            images: vec![cycle(4, &[0, 1]), cycle(4, &[1, 2, 3])],
            order: 24,
        },
    ]
}

fn build(f: &Fixture) -> Presentation {
    let alphabet = Alphabet::new(f.generators).unwrap();
    let relators = f
        .relators
        .iter()
        .map(|r| alphabet.parse_word(r).unwrap())
        .collect();
    Presentation::new(alphabet, relators)
}

#[test]
fn oracle_agreement_battery() {
    let battery = battery();
    assert!(battery.len() >= 8);
    for fixture in &battery {
        let presentation = build(fixture);

        // the model satisfies the relators, so the presented group
        // surjects onto it
        let n = fixture.images[0].len();
        for relator in presentation.relators() {
            assert_eq!(
                eval_word(relator, &fixture.images),
                identity(n),
                "{}: relator {relator} does not hold in the model",
                fixture.name
            );
        }

        let model_order = closure_order(&fixture.images);
        assert_eq!(
            model_order, fixture.order,
            "{}: model order mismatch",
            fixture.name
        );

        let result = todd_coxeter(&presentation, 100_000);
        assert_eq!(
            result.outcome,
            EnumerationOutcome::Finished {
                order: fixture.order as u64
            },
            "{}: enumeration disagrees with the oracle",
            fixture.name
        );
    }
}

#[test]
fn oracle_battery_is_deterministic() {
    for fixture in &battery() {
        let presentation = build(fixture);
        let a = todd_coxeter(&presentation, 100_000);
        let b = todd_coxeter(&presentation, 100_000);
        assert_eq!(a, b, "{}", fixture.name);
    }
}
