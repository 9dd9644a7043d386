use thiserror::Error;

/// Failures that stop a command before it produces a report.  Every variant
/// maps to the input-error exit code; assertion violations are carried by
/// the report itself.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("malformed poset document: {0}")]
    Parse(String),

    #[error("{0}")]
    Input(String),

    #[error("bounds exceeded: {0}")]
    Bounds(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Exit code for a successful run whose assertions all held.
pub const EXIT_OK: i32 = 0;
/// Exit code for a run that completed but observed an assertion violation.
pub const EXIT_VIOLATION: i32 = 2;
/// Exit code for malformed input, refused preconditions and exceeded bounds.
pub const EXIT_INPUT: i32 = 3;

/// Renders a library error with element ids translated to the 1-based ids of
/// poset documents.
pub fn describe(e: &lepaths::Error) -> String {
    use lepaths::Error as E;
    let shifted = match *e {
        E::ElementOutOfRange { id, n } => E::ElementOutOfRange { id: id + 1, n },
        E::SelfRelation(u) => E::SelfRelation(u + 1),
        E::NotSameChain { x, y } => E::NotSameChain { x: x + 1, y: y + 1 },
        E::NotFirstChain(u) => E::NotFirstChain(u + 1),
        E::NotBelow { x, y } => E::NotBelow { x: x + 1, y: y + 1 },
        E::NotDistinct(u) => E::NotDistinct(u + 1),
        _ => e.clone(),
    };
    shifted.to_string()
}

impl From<lepaths::Error> for CliError {
    fn from(e: lepaths::Error) -> CliError {
        CliError::Input(describe(&e))
    }
}
