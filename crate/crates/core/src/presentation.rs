//! Finite group presentations: relator normalization, Tietze
//! simplification (generator elimination plus relator-subword
//! shortening), and abelian invariants via Smith normal form of the
//! relator exponent-sum matrix.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use thiserror::Error;

use crate::intmat::{smith_normal_form, IntegerMatrix};
use crate::word::{Alphabet, Generator, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("word is over a different alphabet than the presentation")]
    AlphabetMismatch,
    #[error("presentation text is missing the `generators:` header")]
    MissingHeader,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A finite presentation: an alphabet plus relators, each interpreted as
/// a word equal to the identity.
///
/// Relators are stored cyclically reduced; identity relators are dropped
/// and duplicates (up to cyclic rotation and inversion) are removed,
/// keeping first occurrences in order.
///
/// Equality is structural — same generator names in the same order, same
/// relators — so presentations from independent runs compare equal.
#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Presentation {
        let mut seen_keys: Vec<Vec<(usize, BigInt)>> = Vec::new();
        let mut kept = Vec::new();
        for r in relators {
            assert!(
                r.alphabet() == &alphabet,
                "relator over a different alphabet"
            );
            let r = r.cyclically_reduced();
            if r.is_identity() {
                continue;
            }
            let key = r.cyclic_canonical_key();
            if seen_keys.contains(&key) {
                continue;
            }
            seen_keys.push(key);
            kept.push(r);
        }
        Presentation {
            alphabet,
            relators: kept,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    /// Sum of relator letter lengths.
    pub fn total_relator_length(&self) -> BigUint {
        self.relators.iter().map(|r| r.letter_len()).sum()
    }

    /// The toolkit's own text format: a `generators:` header followed by
    /// one relator per line in the word grammar. `#` starts a comment.
    pub fn to_text(&self) -> String {
        let mut out = String::from("generators:");
        for g in self.alphabet.generators() {
            out.push(' ');
            out.push_str(g.name());
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str(&r.render());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Presentation, PresentationError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or(PresentationError::MissingHeader)?;
        let names = header
            .strip_prefix("generators:")
            .ok_or(PresentationError::MissingHeader)?;
        let names: Vec<&str> = names.split_whitespace().collect();
        let alphabet = Alphabet::new(&names)?;
        let mut relators = Vec::new();
        for line in lines {
            relators.push(alphabet.parse_word(line)?);
        }
        Ok(Presentation::new(alphabet, relators))
    }

    /// A GAP script defining the same finitely presented group, suitable
    /// for loading into an external GAP session.
    pub fn to_gap_script(&self) -> String {
        let quoted: Vec<String> = self
            .alphabet
            .generators()
            .map(|g| format!("\"{}\"", g.name()))
            .collect();
        let mut out = format!("f := FreeGroup( {} );\n", quoted.join(", "));
        for (i, g) in self.alphabet.generators().enumerate() {
            out.push_str(&format!("{} := f.{};;\n", g.name(), i + 1));
        }
        out.push_str("rels := [\n");
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i + 1 == self.relators.len() {
                ""
            } else {
                ","
            };
            out.push_str(&format!("  {}{}\n", r.render(), sep));
        }
        out.push_str("];\ng := f / rels;\nSize( g );\n");
        out
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        if self.alphabet.len() != other.alphabet.len()
            || self.relators.len() != other.relators.len()
        {
            return false;
        }
        let names_match = self
            .alphabet
            .generators()
            .zip(other.alphabet.generators())
            .all(|(a, b)| a.name() == b.name());
        names_match
            && self
                .relators
                .iter()
                .zip(&other.relators)
                .all(|(a, b)| a.render() == b.render())
    }
}
impl Eq for Presentation {}

/// Turns equations `(L, R)` into cyclically reduced relators `L * R^-1`.
/// Identity relators (from trivial equations) are dropped.
pub fn equations_to_relators(
    alphabet: &Alphabet,
    equations: &[(Word, Word)],
) -> Result<Vec<Word>, PresentationError> {
    let mut relators = Vec::new();
    for (lhs, rhs) in equations {
        if lhs.alphabet() != alphabet || rhs.alphabet() != alphabet {
            return Err(PresentationError::AlphabetMismatch);
        }
        let r = lhs.concat(&rhs.inverse()).cyclically_reduced();
        if !r.is_identity() {
            relators.push(r);
        }
    }
    Ok(relators)
}

/// Abelian invariants of a presented group: `Z^free_rank` plus cyclic
/// torsion factors `d_1 | d_2 | ...`, each greater than 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the abelianization, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut order = BigInt::one();
        for d in &self.invariant_factors {
            order *= d;
        }
        Some(order)
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// The relation matrix: rows are relators, columns are generators,
/// entries are exponent sums.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let gens: Vec<Generator> = p.alphabet().generators().collect();
    let mut m = IntegerMatrix::zero(p.relators().len(), gens.len());
    for (i, r) in p.relators().iter().enumerate() {
        for (j, g) in gens.iter().enumerate() {
            m[(i, j)] = r.exponent_sum(g);
        }
    }
    m
}

/// Computes the abelianization of the presented group from the Smith
/// normal form of its relation matrix.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let m = relation_matrix(p);
    let snf = smith_normal_form(&m);
    AbelianInvariants {
        free_rank: p.generator_count() - snf.rank(),
        invariant_factors: snf.invariant_factors(),
    }
}

/// Measure driving simplification: total relator length, then generator
/// count, compared lexicographically.
fn measure(p: &Presentation) -> (BigUint, usize) {
    (p.total_relator_length(), p.generator_count())
}

fn letter_count(w: &Word, g: &Generator) -> BigUint {
    w.syllables()
        .filter(|(h, _)| h == g)
        .map(|(_, e)| e.magnitude().clone())
        .sum()
}

/// All (generator, relator) pairs where the generator occurs exactly
/// once with exponent +-1, i.e. the relator can be solved for it.
fn elimination_candidates(p: &Presentation) -> Vec<(usize, usize)> {
    let gens: Vec<Generator> = p.alphabet().generators().collect();
    let mut out = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        for (ri, r) in p.relators().iter().enumerate() {
            if letter_count(r, g) == BigUint::one() {
                out.push((gi, ri));
            }
        }
    }
    out
}

/// Performs the Tietze elimination of generator `gi` using relator `ri`:
/// solve the relator for the generator, substitute everywhere, drop
/// both.
fn eliminate_at(p: &Presentation, gi: usize, ri: usize) -> Presentation {
    let gens: Vec<Generator> = p.alphabet().generators().collect();
    let g = &gens[gi];
    let relator = &p.relators()[ri];

    // split relator as u * g^eps * v and solve for g
    let mut prefix = p.alphabet().identity();
    let mut suffix = p.alphabet().identity();
    let mut eps = BigInt::one();
    let mut seen = false;
    for (h, e) in relator.syllables() {
        if &h == g {
            eps = e.clone();
            seen = true;
        } else {
            let syl = Word::reduce(p.alphabet(), &[(h, e.clone())]);
            if seen {
                suffix = suffix.concat(&syl);
            } else {
                prefix = prefix.concat(&syl);
            }
        }
    }
    debug_assert!(seen);
    let solved = prefix.inverse().concat(&suffix.inverse());
    let replacement = if eps.is_negative() {
        solved.inverse()
    } else {
        solved
    };

    // project onto the smaller alphabet
    let remaining: Vec<String> = gens
        .iter()
        .filter(|h| *h != g)
        .map(|h| h.name().to_string())
        .collect();
    let new_alphabet = Alphabet::new(&remaining).expect("shrunken alphabet is valid");
    let translate = |w: &Word| -> Word {
        let raw: Vec<(Generator, BigInt)> = w
            .syllables()
            .map(|(h, e)| {
                let h = new_alphabet
                    .generator(h.name())
                    .expect("generator survives elimination");
                (h, e.clone())
            })
            .collect();
        Word::reduce(&new_alphabet, &raw)
    };

    let new_relators: Vec<Word> = p
        .relators()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != ri)
        .map(|(_, r)| translate(&r.substitute(g, &replacement)))
        .collect();
    Presentation::new(new_alphabet, new_relators)
}

type Letter = (usize, bool);

fn invert_letters(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&(g, s)| (g, !s)).collect()
}

/// One relator-subword rewrite: when at least half of some relator v (up
/// to rotation and inversion) occurs as a cyclic subword of a relator u,
/// substituting the complement may shorten u after free reduction.
/// Returns the rewrite with the shortest resulting relator; only strict
/// reductions are accepted, ties resolved by scan order.
fn shorten_step(p: &Presentation) -> Option<Presentation> {
    let gens: Vec<Generator> = p.alphabet().generators().collect();
    let reduce = |letters: &[Letter]| -> Word {
        let raw: Vec<(Generator, BigInt)> = letters
            .iter()
            .map(|&(g, positive)| {
                let e = if positive {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                (gens[g].clone(), e)
            })
            .collect();
        Word::reduce(p.alphabet(), &raw).cyclically_reduced()
    };

    let letters: Vec<Vec<Letter>> = p.relators().iter().map(|r| r.letters()).collect();
    let mut best: Option<(BigUint, usize, Word)> = None; // (reduction, u, new u)
    for (ui, u) in letters.iter().enumerate() {
        for (vi, v) in letters.iter().enumerate() {
            if ui == vi || v.is_empty() || v.len() > u.len() {
                continue;
            }
            for flip in [false, true] {
                let base = if flip { invert_letters(v) } else { v.clone() };
                for rot in 0..base.len() {
                    let w: Vec<Letter> = base[rot..]
                        .iter()
                        .chain(base[..rot].iter())
                        .copied()
                        .collect();
                    for start in 0..u.len() {
                        if u[start] != w[0] {
                            continue;
                        }
                        // match cyclically in u, capped at one full turn
                        let mut m = 0;
                        while m < w.len() && m < u.len() && u[(start + m) % u.len()] == w[m] {
                            m += 1;
                        }
                        if 2 * m < v.len() {
                            continue;
                        }
                        // rotate u so the match is an initial segment,
                        // then substitute the complement
                        let rotated: Vec<Letter> = u[start..]
                            .iter()
                            .chain(u[..start].iter())
                            .copied()
                            .collect();
                        let mut new_u = Vec::with_capacity(u.len() + v.len() - 2 * m);
                        new_u.extend(invert_letters(&w[m..]));
                        new_u.extend_from_slice(&rotated[m..]);
                        let candidate = reduce(&new_u);
                        let new_len = candidate.letter_len();
                        if new_len >= BigUint::from(u.len()) {
                            continue;
                        }
                        let reduction = BigUint::from(u.len()) - new_len;
                        if best.as_ref().is_none_or(|(r, ..)| reduction > *r) {
                            best = Some((reduction, ui, candidate));
                        }
                    }
                }
            }
        }
    }
    let (_, ui, rewritten) = best?;
    let relators = p
        .relators()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if i == ui {
                rewritten.clone()
            } else {
                r.clone()
            }
        })
        .collect();
    Some(Presentation::new(p.alphabet().clone(), relators))
}

/// Shortens relators until no subword rewrite applies or the step budget
/// runs out.
fn shorten_to_fixpoint(p: &Presentation, budget: &mut usize) -> Presentation {
    let mut current = p.clone();
    while *budget > 0 {
        match shorten_step(&current) {
            Some(next) => {
                current = next;
                *budget -= 1;
            }
            None => break,
        }
    }
    current
}

/// Tietze simplification by relator-subword shortening and generator
/// elimination, up to `budget` committed steps.
///
/// Eliminations are chosen with one step of lookahead: every solvable
/// (generator, relator) pair is tried, the resulting presentation is
/// shortened to a fixpoint, and the branch with the least total relator
/// length wins (ties by candidate order). Deterministic throughout.
/// Returns the best presentation encountered under the (total relator
/// length, generator count) measure — never one lexicographically worse
/// than the input; on budget exhaustion, the best seen so far.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    assert!(budget > 0, "simplification budget must be positive");
    let mut remaining = budget;
    let mut current = shorten_to_fixpoint(p, &mut remaining);
    let mut best = p.clone();
    if measure(&current) < measure(&best) {
        best = current.clone();
    }
    while remaining > 0 {
        let candidates = elimination_candidates(&current);
        if candidates.is_empty() {
            break;
        }
        let mut chosen: Option<(BigUint, Presentation, usize)> = None; // (len, state, steps)
        for &(gi, ri) in &candidates {
            let mut steps = remaining;
            let state = shorten_to_fixpoint(&eliminate_at(&current, gi, ri), &mut steps);
            let used = 1 + (remaining - steps);
            let len = state.total_relator_length();
            if chosen.as_ref().is_none_or(|(l, ..)| len < *l) {
                chosen = Some((len, state, used));
            }
        }
        let (_, state, used) = chosen.expect("candidate list was nonempty");
        current = state;
        remaining = remaining.saturating_sub(used);
        if measure(&current) < measure(&best) {
            best = current.clone();
        }
    }
    best
}
