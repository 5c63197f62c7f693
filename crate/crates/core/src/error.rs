use thiserror::Error;

pub type Result<T> = std::result::Result<T, KnotError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("operation undefined on pair ({0}, {1})")]
    UndefinedPair(usize, usize),
    #[error("element {0} has no preimage under the action of {1}")]
    NoPreimage(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("birack is partial; a total table is required")]
    NotTotal,
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("bad strand pairing: {0}")]
    BadStrandPairing(String),
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("chain degree {0} is too low for this operation")]
    DegreeTooLow(usize),
    #[error("theory {theory} requires {requirement}")]
    TheoryMismatch { theory: &'static str, requirement: &'static str },
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("colouring does not colour every face")]
    NotWholeColoured,
    #[error("expected the 3-element dihedral quandle, got {0}")]
    WrongTable(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}
