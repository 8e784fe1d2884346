use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range for {what} of size {len}")]
    OutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("duplicate {what} name `{name}`")]
    DuplicateName { what: &'static str, name: String },
    #[error("incidence matrix has {rows}x{cols} entries, expected {objects}x{attributes}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        objects: usize,
        attributes: usize,
    },
    #[error("context is not clarified: {0}")]
    NotClarified(String),
    #[error("relation is not antisymmetric: `{0}` and `{1}` lie on a cycle")]
    NotAntisymmetric(String, String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("sequence is not a permutation of the poset elements")]
    NotAPermutation,
    #[error("not inverse object orders: `{0}` and `{1}` appear in the same order in both extensions")]
    NotInverseObjectOrders(String, String),
    #[error("label sets do not match: {0}")]
    LabelMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
