use num_bigint::BigInt;
use thiserror::Error;

use crate::exactpoly::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Two computation paths for the same family value returned different polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub family: String,
    pub n: usize,
    pub left_method: String,
    pub left: IntPoly,
    pub right_method: String,
    pub right: IntPoly,
}

impl std::fmt::Display for Disagreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "method disagreement for {} at n = {}: {} gives {}, {} gives {}",
            self.family, self.n, self.left_method, self.left, self.right_method, self.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial of degree {degree} exceeds the bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },
    #[error("stride must be positive")]
    ZeroStride,
    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("enumeration guard exceeded: n = {n} > {limit} (use --allow-large to lift)")]
    GuardExceeded { n: usize, limit: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid signed permutation: {0}")]
    InvalidSignedPermutation(String),
    #[error("not a type-B derangement: positive fixed point {0}")]
    PositiveFixedPoint(i32),
    #[error("malformed permutation sequence: {0}")]
    MalformedSequence(String),
    #[error("{0}")]
    MethodDisagreement(Box<Disagreement>),
    #[error("no symmetric decomposition with respect to n = {n}")]
    NoDecomposition { n: usize },
    #[error("polynomial is not symmetric with respect to degree {n}")]
    NotSymmetric { n: usize },
    #[error("negative coefficient {value} at index {index}")]
    NegativeCoefficient { index: usize, value: BigInt },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("face not present: {0}")]
    FaceNotPresent(String),
    #[error("target complex is not a full simplex")]
    NotASimplex,
    #[error("complex is not pure")]
    NotPure,
    #[error("subdivisions are not composable: {0}")]
    NotComposable(String),
    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
