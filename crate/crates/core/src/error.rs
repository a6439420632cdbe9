use thiserror::Error;

/// Errors shared by all modules of the engine. Violation variants carry the
/// offending elements in cycle notation so failures can be replayed by hand.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("element enumeration exceeded the cap of {cap} elements")]
    EnumerationCapExceeded { cap: usize },

    #[error("element {element} does not lie in the ambient group")]
    ElementNotInAmbient { element: String },

    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,

    #[error("permutation degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("generator images do not extend to a homomorphism")]
    NotAHomomorphism,

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("isomorphism test cap of {cap} exceeded by orders {left} and {right}")]
    CapExceeded { cap: usize, left: usize, right: usize },

    #[error("group is not abelian")]
    NotAbelian,

    #[error("word enumeration exceeded the budget of {budget} words")]
    WordBudgetExceeded { budget: u64 },

    #[error("coset enumeration exceeded the cap of {cap} cosets")]
    CosetCapExceeded { cap: usize },

    #[error("subgroup is not normalized: {l} conjugates {m} outside it")]
    NotNormalized { l: String, m: String },

    #[error("precrossed condition fails at l = {l}, m = {m}")]
    PrecrossedViolation { l: String, m: String },

    #[error("Peiffer condition fails at m = {m}, m' = {m_prime}")]
    PeifferViolation { m: String, m_prime: String },

    #[error("morphism is not surjective")]
    NotSurjective,

    #[error("map is not equivariant at l = {l}, m = {m}")]
    NotEquivariant { l: String, m: String },

    #[error("boundary maps do not commute with the morphism")]
    BoundaryMismatch,

    #[error("sequence is not split short exact: {reason}")]
    NotSplitExact { reason: String },

    #[error("crossed module is not perfect: [L,M] has order {commutator_order}, M has order {top_order}")]
    NotPerfect {
        commutator_order: usize,
        top_order: usize,
    },

    #[error("extension is not central: kernel displacement has order {displacement_order}")]
    NotCentral { displacement_order: usize },

    #[error("cannot lift through a non-surjective extension")]
    LiftFailure,

    #[error("crossed module is perfect; no non-perfectness witness exists")]
    IsPerfect,

    #[error("invalid presentation: {reason}")]
    InvalidPresentation { reason: String },

    #[error("invalid cycle notation: {reason}")]
    BadCycleNotation { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
