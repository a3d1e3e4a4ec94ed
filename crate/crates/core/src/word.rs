//! Free-group word algebra over an interned generator alphabet.
//!
//! Words are kept in freely reduced run-length form: an ordered list of
//! (generator, exponent) syllables where adjacent syllables never share a
//! generator and no exponent is zero. The empty list is the identity.
//! Exponents are arbitrary-precision integers.
//!
//! Words from different alphabets must never meet: every binary operation
//! (including equality) panics on an alphabet mismatch rather than silently
//! comparing unequal interned symbols.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Errors from alphabet construction and word parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("generator name is empty")]
    EmptyName,
    #[error("generator name {0:?} is not an identifier ([A-Za-z_][A-Za-z0-9_]*)")]
    InvalidName(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed syllable {0:?} (expected ident or ident^int)")]
    BadSyllable(String),
    #[error("malformed exponent in {0:?}")]
    BadExponent(String),
}

static NEXT_ALPHABET_ID: AtomicU64 = AtomicU64::new(0);

struct AlphabetInner {
    id: u64,
    names: Vec<String>,
}

/// An interned generator alphabet. Cloning is cheap (shared handle).
///
/// Each alphabet gets a process-unique id; generators and words remember
/// which alphabet they belong to.
#[derive(Clone)]
pub struct Alphabet {
    inner: Arc<AlphabetInner>,
}

fn is_ident(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Builds an alphabet from generator names, in order.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Alphabet, WordError> {
        let mut seen: Vec<&str> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if n.is_empty() {
                return Err(WordError::EmptyName);
            }
            if !is_ident(n) || n == "_" {
                return Err(WordError::InvalidName(n.to_string()));
            }
            if seen.contains(&n) {
                return Err(WordError::DuplicateName(n.to_string()));
            }
            seen.push(n);
        }
        Ok(Alphabet {
            inner: Arc::new(AlphabetInner {
                id: NEXT_ALPHABET_ID.fetch_add(1, Ordering::Relaxed),
                names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            }),
        })
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    /// Looks up a generator by name.
    pub fn generator(&self, name: &str) -> Option<Generator> {
        let index = self.inner.names.iter().position(|n| n == name)?;
        Some(Generator {
            alphabet: self.clone(),
            index,
        })
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.len()).map(move |index| Generator {
            alphabet: self.clone(),
            index,
        })
    }

    /// The identity word over this alphabet.
    pub fn identity(&self) -> Word {
        Word {
            alphabet: self.clone(),
            syllables: Vec::new(),
        }
    }

    /// Parses a word in the grammar `ident('^' int)?` joined by `*`.
    ///
    /// `1` (or an all-whitespace string) denotes the identity. Zero
    /// exponents are accepted and reduced away. The parser round-trips
    /// the renderer's output bit-exactly.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(self.identity());
        }
        let mut raw: Vec<(usize, BigInt)> = Vec::new();
        for token in text.split('*') {
            let token = token.trim();
            if token.is_empty() {
                return Err(WordError::BadSyllable(token.to_string()));
            }
            let (name, exp) = match token.split_once('^') {
                None => (token, BigInt::one()),
                Some((name, exp_text)) => {
                    let exp: BigInt = exp_text
                        .trim()
                        .parse()
                        .map_err(|_| WordError::BadExponent(token.to_string()))?;
                    (name.trim(), exp)
                }
            };
            let gen = self
                .generator(name)
                .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            raw.push((gen.index, exp));
        }
        Ok(Word::from_indexed_syllables(self.clone(), raw))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}
impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet#{}{:?}", self.inner.id, self.inner.names)
    }
}

/// One generator of an alphabet.
#[derive(Clone)]
pub struct Generator {
    alphabet: Alphabet,
    index: usize,
}

impl Generator {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        self.alphabet.name(self.index)
    }

    /// The one-letter word `self`.
    pub fn word(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            syllables: vec![(self.index, BigInt::one())],
        }
    }

    /// The one-letter word `self^-1`.
    pub fn inverse_word(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            syllables: vec![(self.index, -BigInt::one())],
        }
    }
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet.id() == other.alphabet.id() && self.index == other.index
    }
}
impl Eq for Generator {}

impl std::hash::Hash for Generator {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.alphabet.id().hash(state);
        self.index.hash(state);
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn assert_same_alphabet(a: &Alphabet, b: &Alphabet, what: &str) {
    assert!(
        a.id() == b.id(),
        "alphabet mismatch in {what}: {a:?} vs {b:?}"
    );
}

/// A freely reduced word: syllables `(generator, exponent)` with adjacent
/// generators distinct and all exponents nonzero. Immutable after
/// construction; all operations return new values.
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    syllables: Vec<(usize, BigInt)>,
}

fn push_reduced(stack: &mut Vec<(usize, BigInt)>, gen: usize, exp: BigInt) {
    if exp.is_zero() {
        return;
    }
    match stack.last_mut() {
        Some((top, top_exp)) if *top == gen => {
            *top_exp += exp;
            if top_exp.is_zero() {
                stack.pop();
            }
        }
        _ => stack.push((gen, exp)),
    }
}

impl Word {
    fn from_indexed_syllables(alphabet: Alphabet, raw: Vec<(usize, BigInt)>) -> Word {
        let mut syllables = Vec::with_capacity(raw.len());
        for (gen, exp) in raw {
            push_reduced(&mut syllables, gen, exp);
        }
        Word {
            alphabet,
            syllables,
        }
    }

    /// Freely reduces a raw syllable list. Zero exponents are permitted in
    /// the input and dropped. Total: the result equals the input in the
    /// free group.
    pub fn reduce(alphabet: &Alphabet, raw: &[(Generator, BigInt)]) -> Word {
        let indexed = raw
            .iter()
            .map(|(gen, exp)| {
                assert_same_alphabet(alphabet, &gen.alphabet, "reduce");
                (gen.index, exp.clone())
            })
            .collect();
        Word::from_indexed_syllables(alphabet.clone(), indexed)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables.
    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Letter length: the sum of exponent magnitudes.
    pub fn letter_len(&self) -> BigUint {
        self.syllables
            .iter()
            .map(|(_, exp)| exp.magnitude().clone())
            .sum()
    }

    pub fn syllables(&self) -> impl Iterator<Item = (Generator, &BigInt)> + '_ {
        self.syllables.iter().map(move |(index, exp)| {
            (
                Generator {
                    alphabet: self.alphabet.clone(),
                    index: *index,
                },
                exp,
            )
        })
    }

    /// Expands the word into single letters as `(generator index, sign)`
    /// pairs. Panics if an exponent magnitude exceeds the address space;
    /// callers expand only presentation-sized words.
    pub fn letters(&self) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        for (gen, exp) in &self.syllables {
            let count = exp
                .magnitude()
                .to_usize()
                .expect("word exponent too large to expand into letters");
            let positive = exp.is_positive();
            out.extend(std::iter::repeat_n((*gen, positive), count));
        }
        out
    }

    /// The inverse word: reversed syllables with negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|(gen, exp)| (*gen, -exp))
                .collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        assert_same_alphabet(&self.alphabet, &other.alphabet, "concat");
        let mut syllables = self.syllables.clone();
        for (gen, exp) in &other.syllables {
            push_reduced(&mut syllables, *gen, exp.clone());
        }
        Word {
            alphabet: self.alphabet.clone(),
            syllables,
        }
    }

    /// `self^k`, reduced. Single-syllable words stay single-syllable for
    /// any exponent; general words are expanded by repetition.
    pub fn pow(&self, k: &BigInt) -> Word {
        if k.is_zero() || self.is_identity() {
            return self.alphabet.identity();
        }
        if self.syllables.len() == 1 {
            let (gen, exp) = &self.syllables[0];
            return Word {
                alphabet: self.alphabet.clone(),
                syllables: vec![(*gen, exp * k)],
            };
        }
        let base = if k.is_negative() {
            self.inverse()
        } else {
            self.clone()
        };
        let reps = k
            .magnitude()
            .to_u64()
            .expect("word power exponent too large to expand");
        let mut out = self.alphabet.identity();
        for _ in 0..reps {
            out = out.concat(&base);
        }
        out
    }

    /// The commutator `[g, h] = g h g^-1 h^-1`, reduced.
    pub fn commutator(g: &Word, h: &Word) -> Word {
        assert_same_alphabet(&g.alphabet, &h.alphabet, "commutator");
        g.concat(h).concat(&g.inverse()).concat(&h.inverse())
    }

    /// Replaces every occurrence `g^k` by `replacement^k`, then reduces.
    pub fn substitute(&self, g: &Generator, replacement: &Word) -> Word {
        assert_same_alphabet(&self.alphabet, &g.alphabet, "substitute");
        assert_same_alphabet(&self.alphabet, &replacement.alphabet, "substitute");
        let mut out = self.alphabet.identity();
        for (gen, exp) in &self.syllables {
            if *gen == g.index {
                out = out.concat(&replacement.pow(exp));
            } else {
                out = out.concat(&Word {
                    alphabet: self.alphabet.clone(),
                    syllables: vec![(*gen, exp.clone())],
                });
            }
        }
        out
    }

    /// Strips mutually inverse letters from the two ends until the first
    /// and last letters are no longer inverse to each other. Plain
    /// `reduce` never does this; relator normalization does.
    pub fn cyclically_reduced(&self) -> Word {
        let mut syl = self.syllables.clone();
        loop {
            if syl.len() < 2 {
                break;
            }
            let first = syl.first().unwrap().clone();
            let last = syl.last().unwrap().clone();
            if first.0 != last.0 || first.1.is_positive() == last.1.is_positive() {
                break;
            }
            // strip min(|first|, |last|) letters from each end
            let k = BigInt::from(first.1.magnitude().min(last.1.magnitude()).clone());
            let step = if first.1.is_positive() { k } else { -k };
            let new_first = &first.1 - &step;
            let new_last = &last.1 + &step;
            if new_last.is_zero() {
                syl.pop();
            } else {
                syl.last_mut().unwrap().1 = new_last;
            }
            if new_first.is_zero() {
                syl.remove(0);
            } else {
                syl[0].1 = new_first;
            }
        }
        Word {
            alphabet: self.alphabet.clone(),
            syllables: syl,
        }
    }

    /// Sum of exponents of `g` in the word (its image in the free
    /// abelianization).
    pub fn exponent_sum(&self, g: &Generator) -> BigInt {
        assert_same_alphabet(&self.alphabet, &g.alphabet, "exponent_sum");
        self.syllables
            .iter()
            .filter(|(gen, _)| *gen == g.index)
            .map(|(_, exp)| exp)
            .sum()
    }

    /// True if the generator occurs in the word.
    pub fn contains(&self, g: &Generator) -> bool {
        assert_same_alphabet(&self.alphabet, &g.alphabet, "contains");
        self.syllables.iter().any(|(gen, _)| *gen == g.index)
    }

    /// Canonical key identifying the relator up to cyclic rotation and
    /// inversion: the lexicographically least syllable rotation of the
    /// cyclic normal form of the word and of its inverse.
    pub fn cyclic_canonical_key(&self) -> Vec<(usize, BigInt)> {
        fn cyclic_form(w: &Word) -> Vec<(usize, BigInt)> {
            let mut syl = w.cyclically_reduced().syllables;
            // merge seam syllables sharing a generator (cyclic adjacency)
            while syl.len() >= 2 && syl.first().unwrap().0 == syl.last().unwrap().0 {
                let (gen, first_exp) = syl.remove(0);
                let last = syl.last_mut().unwrap();
                last.1 += first_exp;
                if last.1.is_zero() {
                    syl.pop();
                }
                let _ = gen;
            }
            syl
        }
        fn min_rotation(syl: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
            if syl.is_empty() {
                return Vec::new();
            }
            let mut best: Option<Vec<(usize, BigInt)>> = None;
            for start in 0..syl.len() {
                let rotated: Vec<(usize, BigInt)> = syl[start..]
                    .iter()
                    .chain(syl[..start].iter())
                    .cloned()
                    .collect();
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
            best.unwrap()
        }
        let forward = min_rotation(&cyclic_form(self));
        let backward = min_rotation(&cyclic_form(&self.inverse()));
        forward.min(backward)
    }

    /// Renders the word in the `ident('^' int)?` grammar joined by `*`;
    /// the identity renders as `1`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        assert_same_alphabet(&self.alphabet, &other.alphabet, "word equality");
        self.syllables == other.syllables
    }
}
impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.alphabet.id().hash(state);
        self.syllables.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (gen, exp) in &self.syllables {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if exp.is_one() {
                write!(f, "{}", self.alphabet.name(*gen))?;
            } else {
                write!(f, "{}^{}", self.alphabet.name(*gen), exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
