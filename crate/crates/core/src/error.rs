use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle through {a} and {b}")]
    CycleDetected { a: usize, b: usize },
    #[error("poset has no minimum")]
    NoMinimum,
    #[error("poset has no maximum")]
    NoMaximum,
    #[error("poset is not graded: cover {lower} < {upper} breaks unit rank steps")]
    NotGraded { lower: usize, upper: usize },
    #[error("relation is not a partial order: {0}")]
    InvalidRelation(String),
    #[error("element id {id} out of range for {n} elements")]
    InvalidElement { id: usize, n: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{requested} elements exceeds the configured cap of {cap}")]
    TooLarge { requested: usize, cap: usize },
    #[error("elements {x} and {y} are not comparable")]
    NotComparable { x: usize, y: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("product needs at least one factor")]
    EmptyFactorList,
    #[error("element {id} is not an atom")]
    NotAtoms { id: usize },
    #[error("endofunctions live on different posets")]
    PosetMismatch,
    #[error("generator {index} is not regressive and order preserving (regressive: {regressive}, order preserving: {order_preserving})")]
    NotInOrK {
        index: usize,
        regressive: bool,
        order_preserving: bool,
    },
    #[error("endofunction is not idempotent")]
    NotIdempotent,
    #[error("matching is not special")]
    NotSpecial,
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("poset has fewer than two elements")]
    TooSmall,
    #[error("element {id} is not in the image")]
    NotInImage { id: usize },
    #[error("poset is not Eulerian")]
    NotEulerian,
    #[error("closure exceeded the budget of {budget} elements")]
    ClosureOverflow { budget: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

impl Error {
    /// Variant name, stable across releases; used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CycleDetected { .. } => "CycleDetected",
            Error::NoMinimum => "NoMinimum",
            Error::NoMaximum => "NoMaximum",
            Error::NotGraded { .. } => "NotGraded",
            Error::InvalidRelation(_) => "InvalidRelation",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::BadParameter(_) => "BadParameter",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotComparable { .. } => "NotComparable",
            Error::EmptySubset => "EmptySubset",
            Error::EmptyFactorList => "EmptyFactorList",
            Error::NotAtoms { .. } => "NotAtoms",
            Error::PosetMismatch => "PosetMismatch",
            Error::NotInOrK { .. } => "NotInOrK",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotSpecial => "NotSpecial",
            Error::NotAMatching(_) => "NotAMatching",
            Error::TooSmall => "TooSmall",
            Error::NotInImage { .. } => "NotInImage",
            Error::NotEulerian => "NotEulerian",
            Error::ClosureOverflow { .. } => "ClosureOverflow",
            Error::Invariant(_) => "Invariant",
            Error::Parse(_) => "ParseError",
            Error::UnknownClaim(_) => "UnknownClaim",
        }
    }

    /// Poset elements the error refers to, for labelling.
    pub fn elements(&self) -> Vec<usize> {
        match *self {
            Error::CycleDetected { a, b } => vec![a, b],
            Error::NotGraded { lower, upper } => vec![lower, upper],
            Error::NotComparable { x, y } => vec![x, y],
            Error::NotAtoms { id } | Error::NotInImage { id } => vec![id],
            _ => Vec::new(),
        }
    }
}
