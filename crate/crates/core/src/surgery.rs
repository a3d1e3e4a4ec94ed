//! Bookkeeping for the torus-surgery construction: the base manifold X
//! (a genus-2 surface bundle over a genus-2 surface), the six Lagrangian
//! framing triples, the standard surgery list, the surgery-to-relation
//! schemas, and the characteristic numbers of the surgered manifolds.
//!
//! Group-level conventions: the fundamental-group alphabet is
//! `{a1, b1, a2, b2, c1, d1, c2, d2}` where `c2` denotes the half-loop
//! class whose square is the full `c_2` loop. Path composition reads left
//! to right.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coset::{EnumerationOutcome, EnumerationResult};
use crate::intmat::{classify_even_indefinite, is_even, FormClass, IntegerMatrix};
use crate::presentation::{abelianization, equations_to_relators, Presentation, PresentationError};
use crate::word::{Alphabet, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("surgery multiplicity n must be at least 1 (got {0})")]
    InvalidMultiplicity(u64),
    #[error("inconsistent Betti arithmetic: e = {euler} and b1 = {b1} force b2 = {b2}")]
    InconsistentBetti { euler: i64, b1: usize, b2: i64 },
    #[error("hyperbolic form needs even rank, got b2 = {0}")]
    OddHyperbolicRank(usize),
    #[error("intersection form has rank {got}, expected b2 = {expected}")]
    FormRank { expected: usize, got: usize },
    #[error("b2 = {b2} is smaller than |signature| = {signature}")]
    SignatureBound { b2: usize, signature: i64 },
    #[error("surface class {label:?} has a vector of length {got}, expected {expected}")]
    SurfaceVector {
        label: String,
        expected: usize,
        got: usize,
    },
    #[error("unknown torus label {0:?}")]
    UnknownTorus(String),
    #[error("unknown push-off direction {0:?} (expected \"first\" or \"second\")")]
    UnknownDirection(String),
    #[error("integer surgery coefficient must be nonzero")]
    ZeroCoefficient,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Lagrangian framing data for one surgery torus: the two push-offs of
/// its generating curves and its meridian, as based loops in the
/// complement of the six tori.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramingTriple {
    pub torus_label: String,
    pub push_off_1: Word,
    pub push_off_2: Word,
    pub meridian: Word,
}

/// Which push-off of the framing triple is the surgery curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PushOff {
    First,
    Second,
}

/// Surgery coefficient relative to the Lagrangian framing.
///
/// `Integer(n)` is the `-n` surgery (meridian^n = curve at the group
/// level); `Reciprocal(p)` is the `-1/p` surgery (meridian = curve^p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryCoefficient {
    Integer(BigInt),
    Reciprocal(BigInt),
}

/// One torus surgery: a framed torus, the surgery curve, and the
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgerySpec {
    pub triple: FramingTriple,
    pub direction: PushOff,
    pub coefficient: SurgeryCoefficient,
}

impl SurgerySpec {
    pub fn curve(&self) -> &Word {
        match self.direction {
            PushOff::First => &self.triple.push_off_1,
            PushOff::Second => &self.triple.push_off_2,
        }
    }
}

/// An embedded surface class: label, genus, coordinates in the H_2
/// basis, and its self-intersection under the model's form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceClass {
    pub label: String,
    pub genus: u32,
    pub vector: Vec<BigInt>,
    pub self_intersection: BigInt,
}

impl SurfaceClass {
    pub fn new(label: &str, genus: u32, vector: Vec<BigInt>, form: &IntegerMatrix) -> SurfaceClass {
        let self_intersection = form.quadratic(&vector);
        SurfaceClass {
            label: label.to_string(),
            genus,
            vector,
            self_intersection,
        }
    }
}

/// Provenance of a model's surgery list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionKind {
    /// The unsurgered base manifold.
    Base,
    /// The standard six-surgery list with multiplicity n and order p.
    Standard { n: u64, p: u64 },
    /// The five-surgery sublist (all but the first surgery) at p = 1.
    FiveSurgery,
    /// Any other list; invariant bookkeeping is best-effort, unverified.
    Custom,
}

impl ConstructionKind {
    pub fn is_verified(&self) -> bool {
        !matches!(self, ConstructionKind::Custom)
    }
}

/// Characteristic numbers, intersection form, surface classes, and the
/// fundamental-group presentation of a closed oriented 4-manifold model.
#[derive(Clone, Debug)]
pub struct ManifoldModel {
    pub label: String,
    pub euler: i64,
    pub signature: i64,
    pub b1: usize,
    pub b2: usize,
    pub form: IntegerMatrix,
    pub surfaces: Vec<SurfaceClass>,
    /// Display names for the dual basis, used to render candidate
    /// classes (`A`, `B` sit over the fiber and section slots).
    pub dual_labels: Vec<String>,
    pub pi1: Presentation,
    pub construction: ConstructionKind,
}

impl ManifoldModel {
    #[allow(clippy::too_many_arguments)]
    fn new(
        label: &str,
        euler: i64,
        signature: i64,
        b1: usize,
        b2: usize,
        form: IntegerMatrix,
        surfaces: Vec<SurfaceClass>,
        dual_labels: Vec<String>,
        pi1: Presentation,
        construction: ConstructionKind,
    ) -> Result<ManifoldModel, ModelError> {
        // closed oriented: b0 = b4 = 1, b3 = b1
        if euler != 2 - 2 * (b1 as i64) + (b2 as i64) {
            return Err(ModelError::InconsistentBetti {
                euler,
                b1,
                b2: euler - 2 + 2 * (b1 as i64),
            });
        }
        if !form.is_square() || form.rows() != b2 {
            return Err(ModelError::FormRank {
                expected: b2,
                got: form.rows(),
            });
        }
        if (b2 as i64) < signature.abs() {
            return Err(ModelError::SignatureBound { b2, signature });
        }
        for s in &surfaces {
            if s.vector.len() != b2 {
                return Err(ModelError::SurfaceVector {
                    label: s.label.clone(),
                    expected: b2,
                    got: s.vector.len(),
                });
            }
        }
        assert_eq!(dual_labels.len(), b2, "one dual label per basis slot");
        Ok(ManifoldModel {
            label: label.to_string(),
            euler,
            signature,
            b1,
            b2,
            form,
            surfaces,
            dual_labels,
            pi1,
            construction,
        })
    }
}

/// The fundamental-group alphabet of the construction.
pub fn standard_alphabet() -> Alphabet {
    Alphabet::new(&["a1", "b1", "a2", "b2", "c1", "d1", "c2", "d2"])
        .expect("standard alphabet is valid")
}

const FRAMING_TABLE: [(&str, &str, &str, &str); 6] = [
    ("a1'xc1'", "a1", "c1", "b1^-1*d1^-1*b1*d1"),
    ("b1'xc1''", "b1", "d1*c1*d1^-1", "a1^-1*d1*a1*d1^-1"),
    ("a2'xc1'", "a2", "c1", "b2^-1*d1^-1*b2*d1"),
    ("a2''xd1'", "b2*a2*b2^-1", "d1", "b2*c1^-1*b2^-1*c1"),
    (
        "b1''xd2'",
        "a1*b1*a1^-1",
        "d2",
        "c2^-1*a1*a2*c2*a1^-1*a2^-1",
    ),
    (
        "(b1b2)xc2'",
        "c2*b2*b1*c2^-1",
        "c2*b2",
        "a1*c2*d2^-1*c2^-1*a1^-1*c2*d2*c2^-1",
    ),
];

/// The Lagrangian framing bases of the six surgery tori, row for row.
pub fn standard_framings(alphabet: &Alphabet) -> Result<Vec<FramingTriple>, WordError> {
    FRAMING_TABLE
        .iter()
        .map(|(label, po1, po2, meridian)| {
            Ok(FramingTriple {
                torus_label: label.to_string(),
                push_off_1: alphabet.parse_word(po1)?,
                push_off_2: alphabet.parse_word(po2)?,
                meridian: alphabet.parse_word(meridian)?,
            })
        })
        .collect()
}

/// The standard six-surgery list: `-n` on the first torus along its
/// first push-off, `-1/p` on the fifth along its second, `-1` elsewhere.
pub fn standard_surgeries(
    alphabet: &Alphabet,
    n: u64,
    p: u64,
) -> Result<Vec<SurgerySpec>, ModelError> {
    if n < 1 {
        return Err(ModelError::InvalidMultiplicity(n));
    }
    let framings = standard_framings(alphabet)?;
    let one = SurgeryCoefficient::Integer(BigInt::one());
    let plan: [(usize, PushOff, SurgeryCoefficient); 6] = [
        (
            0,
            PushOff::First,
            SurgeryCoefficient::Integer(BigInt::from(n)),
        ),
        (1, PushOff::First, one.clone()),
        (2, PushOff::Second, one.clone()),
        (3, PushOff::Second, one.clone()),
        (
            4,
            PushOff::Second,
            SurgeryCoefficient::Reciprocal(BigInt::from(p)),
        ),
        (5, PushOff::Second, one),
    ];
    Ok(plan
        .into_iter()
        .map(|(idx, direction, coefficient)| SurgerySpec {
            triple: framings[idx].clone(),
            direction,
            coefficient,
        })
        .collect())
}

/// The relator a surgery imposes on the complement's fundamental group:
/// `meridian^n * curve^-1` for an integer coefficient, `meridian *
/// curve^-p` for a reciprocal one (at p = 0 this degenerates to the
/// meridian itself, the relation that regluing the torus trivially
/// imposes).
pub fn surgery_relation(s: &SurgerySpec) -> Word {
    let curve = s.curve();
    match &s.coefficient {
        SurgeryCoefficient::Integer(n) => s.triple.meridian.pow(n).concat(&curve.inverse()),
        SurgeryCoefficient::Reciprocal(p) => s.triple.meridian.concat(&curve.pow(p).inverse()),
    }
}

// Relations holding in the complement of the six tori, independent of
// the surgery coefficients: three conjugation relations along the
// half-loop c2, three d2-commutations, five commutations of disjoint
// loops, and the two genus-2 surface relations.
const CONJUGATION_EQUATIONS: [(&str, &str); 3] = [
    ("a2", "c2^-1*a1*c2"),
    ("b2", "c2^-1*b1*c2"),
    ("b1", "c2^-1*b2*c2"),
];
const D2_COMMUTATION_RELATORS: [&str; 3] = [
    "b2*d2*b2^-1*d2^-1",
    "a1^-1*b1^-1*a2*d2*a2^-1*b1*a1*d2^-1",
    "a2^-1*b2^-1*a1*d2*a1^-1*b2*a2*d2^-1",
];
const AMBIENT_COMMUTATION_RELATORS: [&str; 5] = [
    "a1*c1*a1^-1*c1^-1",
    "b1*c1*b1^-1*c1^-1",
    "a2*c1*a2^-1*c1^-1",
    "a2*d1*a2^-1*d1^-1",
    "b1*d2*b1^-1*d2^-1",
];
const SURFACE_RELATORS: [&str; 2] = [
    "a1*b1*a1^-1*b1^-1*a2*b2*a2^-1*b2^-1",
    "c1*d1*c1^-1*d1^-1*c2*d2*c2^-1*d2^-1",
];

fn parse_equations(
    alphabet: &Alphabet,
    pairs: &[(&str, &str)],
) -> Result<Vec<(Word, Word)>, WordError> {
    pairs
        .iter()
        .map(|(l, r)| Ok((alphabet.parse_word(l)?, alphabet.parse_word(r)?)))
        .collect()
}

fn parse_relator_equations(
    alphabet: &Alphabet,
    relators: &[&str],
) -> Result<Vec<(Word, Word)>, WordError> {
    relators
        .iter()
        .map(|r| Ok((alphabet.parse_word(r)?, alphabet.identity())))
        .collect()
}

/// Builds the presentation of a surgered manifold's fundamental group:
/// conjugation relations, d2-commutations, one relator per surgery, the
/// ambient commutations, and the two surface relations.
pub fn presentation_from_surgeries(
    alphabet: &Alphabet,
    surgeries: &[SurgerySpec],
) -> Result<Presentation, ModelError> {
    let mut equations = parse_equations(alphabet, &CONJUGATION_EQUATIONS)?;
    equations.extend(parse_relator_equations(alphabet, &D2_COMMUTATION_RELATORS)?);
    for s in surgeries {
        equations.push((surgery_relation(s), alphabet.identity()));
    }
    equations.extend(parse_relator_equations(
        alphabet,
        &AMBIENT_COMMUTATION_RELATORS,
    )?);
    equations.extend(parse_relator_equations(alphabet, &SURFACE_RELATORS)?);
    let relators = equations_to_relators(alphabet, &equations)?;
    Ok(Presentation::new(alphabet.clone(), relators))
}

/// The 19-relator presentation of the standard construction with
/// multiplicity `n >= 1` and surgery order `p >= 0`.
pub fn build_presentation(n: u64, p: u64) -> Result<Presentation, ModelError> {
    let alphabet = standard_alphabet();
    let surgeries = standard_surgeries(&alphabet, n, p)?;
    presentation_from_surgeries(&alphabet, &surgeries)
}

/// The base manifold X: a minimal surface of general type fibering as a
/// genus-2 bundle over a genus-2 surface, with e = 4, signature 0,
/// b1 = 6, b2 = 14, and intersection form 7H on seven dual pairs (twelve
/// square-zero tori plus the fiber and the section).
pub fn base_manifold_x() -> ManifoldModel {
    let alphabet = standard_alphabet();
    let relators = equations_to_relators(
        &alphabet,
        &parse_relator_equations(&alphabet, &SURFACE_RELATORS).expect("surface relators parse"),
    )
    .expect("surface relators are over the standard alphabet");
    let pi1 = Presentation::new(alphabet, relators);

    let form = IntegerMatrix::hyperbolic(7);
    let labels = [
        ("a1xc1", 1u32),
        ("-b1xd1", 1),
        ("a1xd1", 1),
        ("b1xc1", 1),
        ("a2xc1", 1),
        ("-b2xd1", 1),
        ("a2xd1", 1),
        ("b2xc1", 1),
        ("(a1a2)xc2", 1),
        ("-b1xd2", 1),
        ("a1xd2", 1),
        ("(b1b2)xc2", 1),
        ("fiber", 2),
        ("section", 2),
    ];
    let surfaces = labels
        .iter()
        .enumerate()
        .map(|(i, (label, genus))| {
            let mut v = vec![BigInt::zero(); 14];
            v[i] = BigInt::one();
            SurfaceClass::new(label, *genus, v, &form)
        })
        .collect();
    let dual_labels = labels.iter().map(|(l, _)| l.to_string()).collect();
    ManifoldModel::new(
        "X",
        4,
        0,
        6,
        14,
        form,
        surfaces,
        dual_labels,
        pi1,
        ConstructionKind::Base,
    )
    .expect("base manifold invariants are consistent")
}

fn recognize_construction(alphabet: &Alphabet, surgeries: &[SurgerySpec]) -> ConstructionKind {
    let template = match standard_surgeries(alphabet, 1, 1) {
        Ok(t) => t,
        Err(_) => return ConstructionKind::Custom,
    };
    let matches_template = |spec: &SurgerySpec, tpl: &SurgerySpec| {
        spec.triple == tpl.triple && spec.direction == tpl.direction
    };
    let int_one =
        |c: &SurgeryCoefficient| matches!(c, SurgeryCoefficient::Integer(n) if n.is_one());
    if surgeries.len() == 6
        && surgeries
            .iter()
            .zip(&template)
            .all(|(s, t)| matches_template(s, t))
    {
        let n = match &surgeries[0].coefficient {
            SurgeryCoefficient::Integer(n) if n.is_positive() => n.to_u64(),
            _ => None,
        };
        let p = match &surgeries[4].coefficient {
            SurgeryCoefficient::Reciprocal(p) if !p.is_negative() => p.to_u64(),
            _ => None,
        };
        let middle_ok = [1, 2, 3, 5]
            .iter()
            .all(|&i| int_one(&surgeries[i].coefficient));
        if let (Some(n), Some(p), true) = (n, p, middle_ok) {
            return ConstructionKind::Standard { n, p };
        }
    }
    if surgeries.len() == 5
        && surgeries
            .iter()
            .zip(&template[1..])
            .all(|(s, t)| matches_template(s, t))
        && [0, 1, 2, 4]
            .iter()
            .all(|&i| int_one(&surgeries[i].coefficient))
        && matches!(&surgeries[3].coefficient, SurgeryCoefficient::Reciprocal(p) if p.is_one())
    {
        return ConstructionKind::FiveSurgery;
    }
    ConstructionKind::Custom
}

/// Performs torus surgeries on the base model.
///
/// Torus surgery preserves the Euler characteristic and, for these
/// Lagrangian surgeries, the signature. b1 is recomputed as the free
/// rank of the abelianized fundamental group rather than asserted, so a
/// nonstandard list degrades to an unverified model instead of a wrong
/// one; b2 then follows from e = 2 - 2 b1 + b2, and the form is the
/// matching hyperbolic sum. An empty list returns the base unchanged.
pub fn apply_surgeries(
    base: &ManifoldModel,
    surgeries: &[SurgerySpec],
) -> Result<ManifoldModel, ModelError> {
    if surgeries.is_empty() {
        return Ok(base.clone());
    }
    let alphabet = base.pi1.alphabet();
    let pi1 = presentation_from_surgeries(alphabet, surgeries)?;
    let b1 = abelianization(&pi1).free_rank;
    let euler = base.euler;
    let signature = base.signature;
    let b2_signed = euler - 2 + 2 * (b1 as i64);
    if b2_signed < 0 {
        return Err(ModelError::InconsistentBetti {
            euler,
            b1,
            b2: b2_signed,
        });
    }
    let b2 = b2_signed as usize;
    if !b2.is_multiple_of(2) {
        return Err(ModelError::OddHyperbolicRank(b2));
    }
    let k = b2 / 2;
    let form = IntegerMatrix::hyperbolic(k);

    let construction = recognize_construction(alphabet, surgeries);
    let label = match &construction {
        ConstructionKind::Standard { n, p } => format!("M(n={n},p={p})"),
        ConstructionKind::FiveSurgery => "Z".to_string(),
        _ => "custom".to_string(),
    };

    // the fiber and section survive every surgery; they occupy the last
    // hyperbolic block
    let mut surfaces = Vec::new();
    let mut dual_labels: Vec<String> = Vec::new();
    for i in 0..k.saturating_sub(1) {
        dual_labels.push(format!("e{}", i + 1));
        dual_labels.push(format!("f{}", i + 1));
    }
    if k >= 1 {
        let mut fiber = vec![BigInt::zero(); b2];
        fiber[b2 - 2] = BigInt::one();
        let mut section = vec![BigInt::zero(); b2];
        section[b2 - 1] = BigInt::one();
        surfaces.push(SurfaceClass::new("fiber", 2, fiber, &form));
        surfaces.push(SurfaceClass::new("section", 2, section, &form));
        dual_labels.push("A".to_string());
        dual_labels.push("B".to_string());
    }

    ManifoldModel::new(
        &label,
        euler,
        signature,
        b1,
        b2,
        form,
        surfaces,
        dual_labels,
        pi1,
        construction,
    )
}

/// The standard surgered manifold M(n, p).
pub fn surgered_model(n: u64, p: u64) -> Result<ManifoldModel, ModelError> {
    let base = base_manifold_x();
    let surgeries = standard_surgeries(base.pi1.alphabet(), n, p)?;
    apply_surgeries(&base, &surgeries)
}

/// The intermediate manifold Z: the five surgeries other than the first,
/// at p = 1. Its form is 2H on the dual pair ([a1xc1], -[b1xd1]) plus
/// the fiber-section pair, with the tori of genus 1.
pub fn z_model() -> ManifoldModel {
    let base = base_manifold_x();
    let surgeries = standard_surgeries(base.pi1.alphabet(), 1, 1)
        .expect("standard surgery list is valid")[1..]
        .to_vec();
    let mut m = apply_surgeries(&base, &surgeries).expect("five-surgery invariants are consistent");
    debug_assert_eq!(m.construction, ConstructionKind::FiveSurgery);
    debug_assert_eq!((m.b1, m.b2), (1, 4));
    let unit = |i: usize| {
        let mut v = vec![BigInt::zero(); 4];
        v[i] = BigInt::one();
        v
    };
    m.surfaces = vec![
        SurfaceClass::new("a1xc1", 1, unit(0), &m.form),
        SurfaceClass::new("-b1xd1", 1, unit(1), &m.form),
        SurfaceClass::new("fiber", 2, unit(2), &m.form),
        SurfaceClass::new("section", 2, unit(3), &m.form),
    ];
    m.dual_labels = vec![
        "u".to_string(),
        "v".to_string(),
        "A".to_string(),
        "B".to_string(),
    ];
    m
}

/// Homeomorphism-type report: the three conditions feeding Freedman's
/// classification, and the verdict when all of them hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeomorphismReport {
    pub simply_connected: bool,
    pub spin: bool,
    pub form_class: Option<FormClass>,
    /// Set iff the model is certified homeomorphic to S^2 x S^2.
    pub s2xs2: bool,
    /// Conditions that failed, empty when `s2xs2` holds.
    pub failed: Vec<String>,
}

impl std::fmt::Display for HomeomorphismReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.s2xs2 {
            write!(f, "homeomorphic to S^2 x S^2 (Freedman)")
        } else {
            write!(f, "no verdict: {} fail", self.failed.join(", "))
        }
    }
}

/// Checks simple connectivity (a closed coset table of order 1), spin
/// (even intersection form), and form type H; concludes homeomorphic to
/// S^2 x S^2 exactly when all three hold, citing Freedman's
/// classification as an axiom.
pub fn homeomorphism_report(m: &ManifoldModel, order: &EnumerationResult) -> HomeomorphismReport {
    let simply_connected = matches!(order.outcome, EnumerationOutcome::Finished { order: 1 });
    let spin = is_even(&m.form);
    let form_class = classify_even_indefinite(&m.form).ok();
    let form_is_h = form_class
        .as_ref()
        .is_some_and(|c| c.hyperbolic == 1 && c.e8 == 0);
    let mut failed = Vec::new();
    if !simply_connected {
        failed.push("simply connected".to_string());
    }
    if !spin {
        failed.push("spin".to_string());
    }
    if !form_is_h {
        failed.push("form H".to_string());
    }
    HomeomorphismReport {
        simply_connected,
        spin,
        form_class,
        s2xs2: failed.is_empty(),
        failed,
    }
}

/// Construction description file: base manifold selector plus a surgery
/// list referencing the standard tori by label.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub base: String,
    pub surgeries: Vec<SurgeryEntry>,
    /// Optional verification toggles consumed by the driver.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SurgeryEntry {
    pub torus: String,
    pub direction: PushOff,
    pub coefficient: CoefficientEntry,
}

/// Surgery coefficient in construction files: `{"int": n}` encodes the
/// `-n` surgery, `{"recip": p}` the `-1/p` surgery.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientEntry {
    Int(i64),
    Recip(u64),
}

impl ConstructionSpec {
    /// The standard six-surgery construction on X.
    pub fn standard(n: u64, p: u64) -> ConstructionSpec {
        let mut entries = Vec::new();
        let directions = [
            PushOff::First,
            PushOff::First,
            PushOff::Second,
            PushOff::Second,
            PushOff::Second,
            PushOff::Second,
        ];
        for (i, (label, ..)) in FRAMING_TABLE.iter().enumerate() {
            let coefficient = match i {
                0 => CoefficientEntry::Int(n as i64),
                4 => CoefficientEntry::Recip(p),
                _ => CoefficientEntry::Int(1),
            };
            entries.push(SurgeryEntry {
                torus: label.to_string(),
                direction: directions[i],
                coefficient,
            });
        }
        ConstructionSpec {
            base: "X".to_string(),
            surgeries: entries,
            checks: None,
        }
    }

    /// Resolves torus labels against the standard framing table.
    pub fn resolve(&self, alphabet: &Alphabet) -> Result<Vec<SurgerySpec>, ModelError> {
        let framings = standard_framings(alphabet)?;
        self.surgeries
            .iter()
            .map(|entry| {
                let triple = framings
                    .iter()
                    .find(|t| t.torus_label == entry.torus)
                    .ok_or_else(|| ModelError::UnknownTorus(entry.torus.clone()))?
                    .clone();
                let coefficient = match entry.coefficient {
                    CoefficientEntry::Int(0) => return Err(ModelError::ZeroCoefficient),
                    CoefficientEntry::Int(n) => SurgeryCoefficient::Integer(BigInt::from(n)),
                    CoefficientEntry::Recip(p) => SurgeryCoefficient::Reciprocal(BigInt::from(p)),
                };
                Ok(SurgerySpec {
                    triple,
                    direction: entry.direction,
                    coefficient,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::todd_coxeter;

    #[test]
    fn framing_table_renders_verbatim() {
        let alphabet = standard_alphabet();
        let framings = standard_framings(&alphabet).unwrap();
        let rendered: Vec<(String, String, String, String)> = framings
            .iter()
            .map(|t| {
                (
                    t.torus_label.clone(),
                    t.push_off_1.render(),
                    t.push_off_2.render(),
                    t.meridian.render(),
                )
            })
            .collect();
        let expected: Vec<(String, String, String, String)> = FRAMING_TABLE
            .iter()
            .map(|(l, a, b, m)| (l.to_string(), a.to_string(), b.to_string(), m.to_string()))
            .collect();
        assert_eq!(rendered, expected);
    }

    #[test]
    fn surgery_relation_schemas() {
        let alphabet = standard_alphabet();
        let framings = standard_framings(&alphabet).unwrap();

        // -3 surgery along the first push-off of the first torus
        let s = SurgerySpec {
            triple: framings[0].clone(),
            direction: PushOff::First,
            coefficient: SurgeryCoefficient::Integer(BigInt::from(3)),
        };
        assert_eq!(
            surgery_relation(&s).render(),
            "b1^-1*d1^-1*b1*d1*b1^-1*d1^-1*b1*d1*b1^-1*d1^-1*b1*d1*a1^-1"
        );

        // -1/2 surgery along the second push-off of the fifth torus
        let s = SurgerySpec {
            triple: framings[4].clone(),
            direction: PushOff::Second,
            coefficient: SurgeryCoefficient::Reciprocal(BigInt::from(2)),
        };
        assert_eq!(
            surgery_relation(&s).render(),
            "c2^-1*a1*a2*c2*a1^-1*a2^-1*d2^-2"
        );

        // -1 surgery along the second push-off of the sixth torus
        let s = SurgerySpec {
            triple: framings[5].clone(),
            direction: PushOff::Second,
            coefficient: SurgeryCoefficient::Integer(BigInt::one()),
        };
        assert_eq!(
            surgery_relation(&s).render(),
            "a1*c2*d2^-1*c2^-1*a1^-1*c2*d2*c2^-1*b2^-1*c2^-1"
        );

        // p = 0 degenerates to the bare meridian
        let s = SurgerySpec {
            triple: framings[4].clone(),
            direction: PushOff::Second,
            coefficient: SurgeryCoefficient::Reciprocal(BigInt::zero()),
        };
        assert_eq!(surgery_relation(&s).render(), "c2^-1*a1*a2*c2*a1^-1*a2^-1");
    }

    #[test]
    fn presentation_has_nineteen_relators() {
        for (n, p) in [(1, 1), (4, 0), (2, 3), (5, 6)] {
            let p = build_presentation(n, p).unwrap();
            assert_eq!(p.relators().len(), 19);
        }
        assert!(matches!(
            build_presentation(0, 1),
            Err(ModelError::InvalidMultiplicity(0))
        ));
    }

    #[test]
    fn relator_seven_carries_the_multiplicity() {
        let pres = build_presentation(2, 3).unwrap();
        assert_eq!(
            pres.relators()[6].render(),
            "b1^-1*d1^-1*b1*d1*b1^-1*d1^-1*b1*d1*a1^-1"
        );
        assert_eq!(
            pres.relators()[10].render(),
            "c2^-1*a1*a2*c2*a1^-1*a2^-1*d2^-3"
        );
        // at p = 0 relator eleven is the bare meridian
        let pres = build_presentation(4, 0).unwrap();
        assert_eq!(pres.relators()[10].render(), "c2^-1*a1*a2*c2*a1^-1*a2^-1");
        assert_eq!(
            pres.relators()[6].render(),
            "b1^-1*d1^-1*b1*d1*b1^-1*d1^-1*b1*d1*b1^-1*d1^-1*b1*d1*b1^-1*d1^-1*b1*d1*a1^-1"
        );
    }

    #[test]
    fn base_manifold_numbers() {
        let x = base_manifold_x();
        assert_eq!(x.euler, 4);
        assert_eq!(x.signature, 0);
        assert_eq!((x.b1, x.b2), (6, 14));
        assert_eq!(x.form, IntegerMatrix::hyperbolic(7));
        assert_eq!(x.surfaces.len(), 14);
        assert!(x.surfaces.iter().all(|s| s.self_intersection.is_zero()));
        // only the two surface relations are claimed for pi_1(X); b1 is
        // stored data, not derived from this partial presentation
        assert_eq!(x.pi1.relators().len(), 2);
    }

    #[test]
    fn surgered_invariants() {
        let m = surgered_model(1, 1).unwrap();
        assert_eq!((m.euler, m.signature, m.b1, m.b2), (4, 0, 0, 2));
        assert_eq!(m.form, IntegerMatrix::hyperbolic(1));
        assert_eq!(m.construction, ConstructionKind::Standard { n: 1, p: 1 });

        let z_like = surgered_model(2, 0).unwrap();
        assert_eq!((z_like.b1, z_like.b2), (1, 4));
        assert_eq!(z_like.form, IntegerMatrix::hyperbolic(2));
    }

    #[test]
    fn empty_surgery_list_is_identity() {
        let x = base_manifold_x();
        let same = apply_surgeries(&x, &[]).unwrap();
        assert_eq!((same.euler, same.b1, same.b2), (x.euler, x.b1, x.b2));
        assert_eq!(same.label, "X");
        assert_eq!(same.surfaces.len(), 14);
    }

    #[test]
    fn z_model_data() {
        let z = z_model();
        assert_eq!((z.euler, z.signature, z.b1, z.b2), (4, 0, 1, 4));
        assert_eq!(z.form, IntegerMatrix::hyperbolic(2));
        assert_eq!(z.label, "Z");
        assert_eq!(z.pi1.relators().len(), 18);
        let genera: Vec<u32> = z.surfaces.iter().map(|s| s.genus).collect();
        assert_eq!(genera, vec![1, 1, 2, 2]);
        assert!(z.surfaces.iter().all(|s| s.self_intersection.is_zero()));
    }

    #[test]
    fn homeomorphism_verdicts() {
        let m = surgered_model(3, 1).unwrap();
        let order = todd_coxeter(&m.pi1, crate::coset::DEFAULT_MAX_COSETS);
        let report = homeomorphism_report(&m, &order);
        assert!(report.s2xs2, "failed: {:?}", report.failed);

        let m2 = surgered_model(1, 2).unwrap();
        let order2 = todd_coxeter(&m2.pi1, crate::coset::DEFAULT_MAX_COSETS);
        let report2 = homeomorphism_report(&m2, &order2);
        assert!(!report2.s2xs2);
        assert!(report2.failed.contains(&"simply connected".to_string()));
    }

    #[test]
    fn construction_spec_round_trip() {
        let spec = ConstructionSpec::standard(3, 2);
        let json = serde_json::to_string_pretty(&spec).unwrap();
        assert!(json.contains("\"int\": 3"));
        assert!(json.contains("\"recip\": 2"));
        let back: ConstructionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);

        let alphabet = standard_alphabet();
        let resolved = spec.resolve(&alphabet).unwrap();
        assert_eq!(resolved, standard_surgeries(&alphabet, 3, 2).unwrap());

        let mut bad = spec.clone();
        bad.surgeries[0].torus = "nope".to_string();
        assert!(matches!(
            bad.resolve(&alphabet),
            Err(ModelError::UnknownTorus(_))
        ));
    }
}
