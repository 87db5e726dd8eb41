use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid Milnor index: {0}")]
    InvalidIndex(String),

    #[error("operation needs a slice word; diagram was imported as a PD code")]
    MissingSliceWord,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("crossing budget exceeded: {crossings} crossings > budget {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },

    #[error("not enough attachment sites on component {component}: need {needed}, have {available}")]
    NoRoom {
        component: usize,
        needed: usize,
        available: usize,
    },

    #[error("overlapping attachment corridors at level {level}, position {position}")]
    OverlappingCorridors { level: usize, position: usize },

    #[error("band route has {given} over/under directives but crosses {needed} strands")]
    IncompleteRoute { needed: usize, given: usize },

    #[error("series parameters differ: {0}")]
    SeriesMismatch(String),

    #[error("coefficient overflow in fixed-width arithmetic")]
    Overflow,

    #[error("series is not a unit (constant term {0})")]
    NotUnit(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownLink(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
