use thiserror::Error;

use crate::constructors::{BaseDefect, MetricAxiom};
use crate::space::AxiomViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier of size {n} exceeds the cap of {cap}")]
    CarrierTooLarge { n: usize, cap: usize },

    #[error("carrier sizes differ: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("the intersection of an empty family is undefined")]
    EmptyFamilyIntersection,

    #[error("expected at least one space")]
    EmptyList,

    #[error("bitmask {bits:#b} has points outside a carrier of size {n}")]
    OutOfCarrier { bits: u32, n: usize },

    #[error("point {point} is outside a carrier of size {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("not a topology: {}", format_violations(.0))]
    InvalidTopology(Vec<AxiomViolation>),

    #[error("invalid base: {0}")]
    InvalidBase(BaseDefect),

    #[error("sub-base does not cover the carrier")]
    SubbaseDoesNotCover,

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("invalid metric: {axiom} fails at {witness:?}")]
    InvalidMetric { axiom: MetricAxiom, witness: Vec<usize> },

    #[error("map entry {value} at index {index} is outside a codomain of size {cod_n}")]
    MapOutOfRange { index: usize, value: usize, cod_n: usize },

    #[error("point {0} is not a limit point of the domain set")]
    NotALimitPoint(usize),

    #[error("cover is not fundamental")]
    NotFundamental,

    #[error("family does not cover the target set")]
    NotACover,

    #[error("codomain is not a Hausdorff space")]
    CodomainNotHausdorff,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

fn format_violations(v: &[AxiomViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
