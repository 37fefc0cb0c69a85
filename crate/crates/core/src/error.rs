use alloc::string::String;
use core::fmt;

use crate::{Color, Vertex};

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: Vertex,
        n: usize,
    },
    SelfLoop(Vertex),
    DuplicateEdge(Vertex, Vertex),
    ColorOutOfRange {
        color: Color,
        s: usize,
    },
    BudgetAboveCap {
        vertex: Vertex,
        color: Color,
        value: u32,
        cap: u32,
    },
    /// A cover fails the structural rules (matchings must be partial bijections
    /// between lists, and exist only on edges).
    BadCover(String),
    PartialColoring(Vertex),
    ColorNotInList {
        vertex: Vertex,
        color: Color,
    },
    InvalidPrecoloring,
    NoColorAvailable(Vertex),
    DomainOverlap(Vertex),
    InvalidInput(String),
    NotInduced(String),
    BadIndex(String),
    PreconditionViolated(String),
    /// The constructive procedures are proved to succeed; this signals a bug.
    InternalInvariantViolated(String),
    InvalidEmbedding(String),
    NotTwoConnected,
    NotAChord(Vertex, Vertex),
    NotOnOuterCycle(Vertex),
    LimitExceeded {
        limit: usize,
        actual: usize,
    },
    BadSpec(String),
    InfeasibleParameters(String),
    BadBudget(String),
    NotInFamily,
    EmptyList(Vertex),
    BadParameters(String),
    NotAPartition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            Error::ColorOutOfRange { color, s } => write!(f, "color {color} outside 1..={s}"),
            Error::BudgetAboveCap { vertex, color, value, cap } => {
                write!(f, "budget f_{color}({vertex}) = {value} exceeds cap {cap}")
            }
            Error::BadCover(msg) => write!(f, "invalid cover: {msg}"),
            Error::PartialColoring(v) => write!(f, "coloring is not defined on vertex {v}"),
            Error::ColorNotInList { vertex, color } => {
                write!(f, "color {color} is not in the list of vertex {vertex}")
            }
            Error::InvalidPrecoloring => write!(f, "precoloring is not a DP-F-coloring of its domain"),
            Error::NoColorAvailable(v) => write!(f, "no color with positive residual budget at vertex {v}"),
            Error::DomainOverlap(v) => write!(f, "vertex {v} is colored by both parts"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NotInduced(msg) => write!(f, "not an induced subgraph: {msg}"),
            Error::BadIndex(msg) => write!(f, "bad index: {msg}"),
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            Error::InternalInvariantViolated(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::InvalidEmbedding(msg) => write!(f, "invalid embedding: {msg}"),
            Error::NotTwoConnected => write!(f, "plane graph is not 2-connected"),
            Error::NotAChord(u, v) => write!(f, "{u}{v} is not a chord of the outer cycle"),
            Error::NotOnOuterCycle(v) => write!(f, "vertex {v} is not on the outer cycle"),
            Error::LimitExceeded { limit, actual } => write!(f, "size {actual} exceeds limit {limit}"),
            Error::BadSpec(msg) => write!(f, "bad family spec: {msg}"),
            Error::InfeasibleParameters(msg) => write!(f, "infeasible parameters: {msg}"),
            Error::BadBudget(msg) => write!(f, "bad budget: {msg}"),
            Error::NotInFamily => write!(f, "graph is not in the required family"),
            Error::EmptyList(v) => write!(f, "vertex {v} has an empty list"),
            Error::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
            Error::NotAPartition(msg) => write!(f, "not a partition: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
