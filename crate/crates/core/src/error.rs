use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("no edge between {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("canonical form unsupported: {0}")]
    UnsupportedFamily(String),
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial has no largest root")]
    ZeroPolynomial,
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("polynomial is not real-rooted above the bracket")]
    NotRealRooted,
    #[error("recursive characteristic polynomial needs components with at most one cycle")]
    TooManyCycles,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuipuError {
    #[error("closed quipu cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("malformed parameter lists: {0}")]
    Shape(String),
    #[error("malformed spec literal: {0}")]
    Literal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("lambda must exceed 2")]
    LambdaTooSmall,
    #[error("p vanishes at this lambda")]
    Pole,
    #[error("denominator vanishes at this lambda")]
    ZeroDenominator,
    #[error("rooted graph is empty")]
    EmptyGraph,
    #[error("root {0} out of range")]
    BadRoot(usize),
    #[error("edge-transfer hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("defining identity failed after construction")]
    IdentityFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the budget guard of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("no connected graph with order {n} and diameter {d}")]
    NoCandidates { n: usize, d: usize },
    #[error("time budget exhausted after {examined} candidates in phase {phase}")]
    BudgetExceeded { phase: String, examined: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
