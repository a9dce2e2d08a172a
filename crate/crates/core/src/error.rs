use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {0} is out of range")]
    BadN(usize),
    #[error("bad window {window:?}: {reason}")]
    Parse { window: String, reason: String },
    #[error("not a wall")]
    NotAWall,
    #[error("wrong edge side")]
    WrongEdgeSide,
    #[error("arc set is not noncrossing")]
    Crossing,
    #[error("arc ({0}, {1}) is longer than one period")]
    ArcTooLong(i64, i64),
    #[error("pair is not a cover relation")]
    NotACover,
    #[error("input is not 312-avoiding")]
    Not312Avoiding,
    #[error("partition is not noncrossing")]
    CrossingPartition,
    #[error("partition is not of type B")]
    NotTypeB,
    #[error("arc set is not closed")]
    NotClosed,
    #[error("operator does not have period {0}")]
    Period(usize),
    #[error("invalid ornamentation: {0}")]
    Ornamentation(String),
    #[error("no regular theta found within the search budget")]
    ThetaSearch,
    #[error("invariant breach: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
