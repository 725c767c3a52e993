use thiserror::Error;

/// Failure modes shared by every module of the core crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("bisector of opposite rays is undefined")]
    DegenerateBisector,
    #[error("query halfplane contains no input point")]
    EmptyRegion,
    #[error("every strip direction is forbidden")]
    NoFeasibleDirection,
    #[error("hull interiors overlap")]
    HullsInterpenetrate,
    #[error("strips are parallel")]
    ParallelStrips,
    #[error("inner lines of the wedge are parallel")]
    ParallelInnerLines,
    #[error("no covering V-shape with the given strips")]
    NoValidVShape,
    #[error("no candidate V-shape found")]
    NoCandidate,
    #[error("split leaves one side empty")]
    EmptySide,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("input of size {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal check failed: {0}")]
    Internal(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
