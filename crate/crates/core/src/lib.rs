//! Exact computational kernels for verifying a torus-surgery
//! construction of small exotic 4-manifolds: free-group word algebra,
//! finite presentations with Tietze simplification and abelian
//! invariants, Todd-Coxeter coset enumeration, integer linear algebra
//! (Smith normal form, signatures, form classification), the surgery
//! bookkeeping itself, and basic-class candidate enumeration.

pub mod coset;
pub mod intmat;
pub mod presentation;
pub mod surgery;
pub mod sw;
pub mod word;

pub use coset::{
    todd_coxeter, todd_coxeter_with_log, word_is_trivial, CosetTable, Enumeration,
    EnumerationOutcome, EnumerationResult, EnumerationStats, TrivialityVerdict,
};
pub use intmat::{
    classify_even_indefinite, is_even, signature, smith_normal_form, FormClass, FormError,
    IntegerMatrix, MatrixParseError, SmithDecomposition,
};
pub use presentation::{
    abelianization, equations_to_relators, relation_matrix, tietze_simplify, AbelianInvariants,
    Presentation, PresentationError,
};
pub use surgery::{
    apply_surgeries, base_manifold_x, build_presentation, homeomorphism_report,
    presentation_from_surgeries, standard_alphabet, standard_framings, standard_surgeries,
    surgered_model, surgery_relation, z_model, CoefficientEntry, ConstructionKind,
    ConstructionSpec, FramingTriple, HomeomorphismReport, ManifoldModel, ModelError, PushOff,
    SurfaceClass, SurgeryCoefficient, SurgeryEntry, SurgerySpec,
};
pub use sw::{
    candidate, enumerate_candidates, enumerate_in_form, irreducibility_verdict, moduli_dimension,
    render_candidate, sw_value_after_surgery, CandidateClass, IrreducibilityVerdict, SwError,
};
pub use word::{Alphabet, Generator, Word, WordError};
