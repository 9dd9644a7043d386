use thiserror::Error;

/// Errors raised by the library.  Every variant names the precondition that
/// failed so front ends can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partial order: the relations contain a cycle")]
    NotPartialOrder,

    #[error("element {id} out of range for a poset on {n} elements")]
    ElementOutOfRange { id: usize, n: usize },

    #[error("relation ({0}, {0}) relates an element to itself")]
    SelfRelation(usize),

    #[error("poset on {n} elements exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("width > 2: the poset cannot be covered by two chains")]
    WidthExceeded,

    #[error("invalid chain partition: {0}")]
    InvalidChainPartition(String),

    #[error("invalid linear extension: {0}")]
    InvalidExtension(String),

    #[error("not an extension path: {0}")]
    NotExtensionPath(String),

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    #[error(
        "elements {x} and {y} lie in different chains of the partition; the q-inequality needs \
         both in the same chain and fails otherwise (e.g. C3+C3 with x = first element of one \
         chain, y = last element of the other, k = 2 gives q^26 - q^25)"
    )]
    NotSameChain { x: usize, y: usize },

    #[error(
        "element {0} is not in the first chain; the multivariate weight only records the \
         first chain and its inequalities are stated there"
    )]
    NotFirstChain(usize),

    #[error("the vanishing window needs {x} < {y} in the poset")]
    NotBelow { x: usize, y: usize },

    #[error("elements must be distinct (got {0} twice)")]
    NotDistinct(usize),

    #[error("step undefined: {0}")]
    StepUndefined(String),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
