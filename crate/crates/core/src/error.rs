use thiserror::Error;

/// Every failure the library reports. Each variant carries a stable short
/// code (see [`Error::code`]) that the command-line front end prints.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not square or has an entry out of range: {0}")]
    MalformedTable(String),
    #[error("not a Latin square: {axis} {index} repeats element {element}")]
    NotLatinSquare { axis: &'static str, index: usize, element: u32 },
    #[error("no identity element: row {row} is not the identity permutation")]
    NoIdentity { row: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: u32, b: u32, c: u32 },
    #[error("group order exceeds cap {cap}")]
    ClosureCapExceeded { cap: usize },
    #[error("subgroup of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("work of {work} tuples exceeds cap {cap}")]
    WorkCapExceeded { work: u128, cap: u128 },
    #[error("subgroup is not normal: {g} conjugates {h} outside it")]
    NotNormal { g: u32, h: u32 },
    #[error("members do not form a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("degenerate pair: H equals Z(H,G)")]
    DegeneratePair,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("witness rejected: {0}")]
    InvalidWitness(String),
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExhausted { nodes: u64 },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedTable(_) => "E_TABLE",
            Error::NotLatinSquare { .. } => "E_LATIN",
            Error::NoIdentity { .. } => "E_IDENTITY",
            Error::NotAssociative { .. } => "E_ASSOC",
            Error::ClosureCapExceeded { .. } => "E_CLOSURE_CAP",
            Error::CapExceeded { .. } => "E_CAP",
            Error::WorkCapExceeded { .. } => "E_WORK_CAP",
            Error::NotNormal { .. } => "E_NOT_NORMAL",
            Error::NotASubgroup(_) => "E_NOT_SUBGROUP",
            Error::ParentMismatch => "E_PARENT",
            Error::InvalidPermutation(_) => "E_PERM",
            Error::Parse { .. } => "E_PARSE",
            Error::UnsupportedParameter(_) => "E_UNSUPPORTED",
            Error::NotNilpotent => "E_NOT_NILPOTENT",
            Error::DegeneratePair => "E_DEGENERATE",
            Error::HypothesisNotMet(_) => "E_HYPOTHESIS",
            Error::DomainMismatch(_) => "E_DOMAIN",
            Error::InvalidWitness(_) => "E_WITNESS",
            Error::BudgetExhausted { .. } => "E_BUDGET",
            Error::Io(_) => "E_IO",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
