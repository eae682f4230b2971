use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("vertex label `{0}` declared twice")]
    DuplicateLabel(String),
    #[error("invalid vertex label `{0}` (labels must be non-empty and contain no ',')")]
    InvalidLabel(String),
    #[error("hyperedges must be non-empty")]
    EmptyHyperedge,
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{{{simplex}}} is present but its face {{{missing}}} is not")]
    NotSimplicial { simplex: String, missing: String },
    #[error("hyperedge {{{0}}} is not in the host hypergraph")]
    NotSubhypergraph(String),
    #[error("no value given for hyperedge {{{0}}}")]
    MissingValue(String),
    #[error("document has no `morse` block")]
    NoMorseBlock,
    #[error("value given for {{{0}}}, which is not a hyperedge of the associated complex")]
    ExtraValue(String),
    #[error("function is not a discrete Morse function (first violation at {{{0}}})")]
    NotMorse(String),
    #[error("invalid gradient pair ({{{alpha}}}, {{{beta}}}): {reason}")]
    InvalidPair { alpha: String, beta: String, reason: String },
    #[error("gradient field is not proper: {{{0}}} occurs in more than one pair")]
    NotProper(String),
    #[error("gradient field has a closed path through {{{0}}}")]
    NotAcyclic(String),
    #[error(
        "extension search too large: {unknowns} unknown cells, {levels} levels (limits {max_unknowns}, {max_levels})"
    )]
    SizeCap { unknowns: usize, levels: usize, max_unknowns: usize, max_levels: usize },
    #[error("homology of the infimum and supremum complexes differ in degree {degree}")]
    InconsistentHomology { degree: usize },
    #[error("boundary of a basis vector in degree {degree} leaves the subcomplex")]
    MalformedSubcomplex { degree: usize },
    #[error("critical discrepancy classification disagrees with the definition at {{{0}}}")]
    ClassificationMismatch(String),
    #[error("morphism sends hyperedge {{{edge}}} to {{{image}}}, which is not a target hyperedge")]
    InvalidMorphism { edge: String, image: String },
    #[error("morphism does not map vertex `{0}`")]
    IncompleteMorphism(String),
    #[error("chain image in degree {degree} is not contained in the target subcomplex")]
    NotContained { degree: usize },
    #[error("induced map does not commute with the boundary in degree {degree}")]
    ChainMapViolation { degree: usize },
    #[error("induced homology maps need field coefficients (use q or zp:<p>)")]
    NonFieldCoefficients,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("function host is not the associated complex of the hypergraph")]
    HostMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}
