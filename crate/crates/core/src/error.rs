use thiserror::Error;

use crate::dynsys::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid system: {}", format_violations(.0))]
    InvalidSystem(Vec<Violation>),

    #[error("function is not 0-mesic: orbit {orbit} sums to {sum}")]
    NotZeroMesic { orbit: usize, sum: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("point ({x}, {y}) is outside the Lyness domain: {factor} vanishes")]
    LynessDomain {
        x: String,
        y: String,
        factor: &'static str,
    },

    #[error("point is outside the order polytope: {0}")]
    OutsidePolytope(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
