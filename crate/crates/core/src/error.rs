use thiserror::Error;

use crate::rational::Rational;

/// Errors reported by the kernel. Every operation is exact, so these all
/// signal contract violations or degenerate inputs, never numerical trouble.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("all-zero coordinate triple")]
    ZeroTriple,
    #[error("lines coincide")]
    LinesCoincide,
    #[error("points coincide")]
    PointsCoincide,
    #[error("degenerate basis")]
    DegenerateBasis,
    #[error("point off span")]
    PointOffSpan,
    #[error("basis point has no finite image")]
    BasisPointImage,
    #[error("line component")]
    LineComponent,
    #[error("vertex on curve")]
    VertexOnCurve,
    #[error("indeterminate ratio")]
    IndeterminateRatio,
    #[error("point not on curve")]
    NotOnCurve,
    #[error("singular point")]
    SingularPoint,
    #[error("tangent contained in curve")]
    TangentInCurve,
    #[error("points not on a cubic: ratio product is {0}")]
    PointsNotOnCubic(Rational),
    #[error("pick different six: the chosen points contain a collinear triple")]
    CollinearSix,
    #[error("not a tangential contact")]
    NotTangential,
    #[error("non-flex input point")]
    NotAFlex,
    #[error("conformality bridge violated")]
    ConformalityBridge,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
