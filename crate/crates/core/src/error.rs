use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cycle detected: the input relation makes `{0}` comparable with itself")]
    CycleDetected(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("element `{0}` does not occur in the chain")]
    ElementNotInChain(String),
    #[error("differential does not square to zero at degree {0}")]
    NotAComplex(i64),
    #[error("the given combination is not a relative cycle")]
    NotARelativeCycle,
    #[error("filtration level {0} differs from the previous one by a non-antichain")]
    NotAntichainInduced(usize),
    #[error("filtration levels are not increasing at level {0}")]
    NotAFiltration(usize),
    #[error("subset is not open (not down-closed): `{0}` is missing")]
    NotOpen(String),
    #[error("subset is not convex: `{0}` is missing")]
    NotConvex(String),
    #[error("image cycle could not be expressed in the target homology basis")]
    ClassExpressionFailed,
    #[error("no quasicellular morphism exists; first obstructed element: `{0}`")]
    NotQuasicellular(String),
    #[error("edge ({0},{1}) is not a Hasse cover")]
    NotACover(String, String),
    #[error("edge ({0},{1}) is not homologically admissible")]
    NotAdmissible(String, String),
    #[error("edge ({0},{1}) violates rho(b) = rho(a) + 1")]
    RhoMismatch(String, String),
    #[error("matching is not a Morse matching")]
    NotAMorseMatching,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("coloring is not admissible: paths from `{0}` to `{1}` disagree ({2} vs {3})")]
    NotAdmissibleColoring(String, String, String, String),
    #[error("coloring is not connected: the covering poset splits into components")]
    NotConnectedColoring,
    #[error("cover is not homology simply connected: H_1 = {0}")]
    NotHomologySimplyConnected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
