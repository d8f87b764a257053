use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: usize,
        count: usize,
    },
    EdgeOutOfRange {
        edge: usize,
        count: usize,
    },
    Loop {
        vertex: usize,
    },
    SameVertex {
        vertex: usize,
    },
    TooManyVertices {
        count: usize,
        max: usize,
    },
    EmptyVertexSet,
    InvalidPartition(&'static str),
    Disconnected,
    TooFewVertices {
        count: usize,
        min: usize,
    },
    InvalidPath(&'static str),
    InvalidModulus(u32),
    InvalidBoundary(&'static str),
    InvalidOrientation(&'static str),
    InvalidRotation(&'static str),
    InvalidParameter(&'static str),
    NonPlanar,
    NotContractible,
    /// A search that the theory guarantees to succeed found nothing.
    Unsolvable(&'static str),
    BudgetExhausted,
    /// The reduction engine ran out of candidate steps under its caps.
    NoReduction {
        vertices: usize,
    },
    /// Replaying a reduction trace did not reproduce the recorded step.
    TraceMismatch(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, count } => {
                write!(f, "vertex {vertex} out of range (graph has {count} vertices)")
            }
            Error::EdgeOutOfRange { edge, count } => {
                write!(f, "edge {edge} out of range (graph has {count} edges)")
            }
            Error::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::SameVertex { vertex } => write!(f, "expected two distinct vertices, got {vertex} twice"),
            Error::TooManyVertices { count, max } => {
                write!(f, "{count} vertices exceeds the supported maximum of {max}")
            }
            Error::EmptyVertexSet => f.write_str("vertex set is empty"),
            Error::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::TooFewVertices { count, min } => {
                write!(f, "graph has {count} vertices, at least {min} required")
            }
            Error::InvalidPath(why) => write!(f, "invalid path: {why}"),
            Error::InvalidModulus(k) => write!(f, "modulus {k} must be odd and at least 3"),
            Error::InvalidBoundary(why) => write!(f, "invalid boundary: {why}"),
            Error::InvalidOrientation(why) => write!(f, "invalid orientation: {why}"),
            Error::InvalidRotation(why) => write!(f, "invalid rotation system: {why}"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::NonPlanar => f.write_str("graph is not planar"),
            Error::NotContractible => f.write_str("graph is not S5-contractible"),
            Error::Unsolvable(what) => write!(f, "no solution found: {what}"),
            Error::BudgetExhausted => f.write_str("search budget exhausted"),
            Error::NoReduction { vertices } => {
                write!(f, "no reduction step found for a {vertices}-vertex graph within the search caps")
            }
            Error::TraceMismatch(why) => write!(f, "reduction trace does not replay: {why}"),
        }
    }
}

impl core::error::Error for Error {}
