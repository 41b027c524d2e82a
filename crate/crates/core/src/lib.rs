//! Exact computational projective geometry.
//!
//! Everything runs over arbitrary-precision rationals: incidence of
//! homogeneous points and lines, algebraic plane curves and their
//! restriction to lines, the characteristic ratio/mapping/number machinery,
//! executable Pascal-type theorem checkers for conics, cubics and higher
//! degree, and the rank computations behind Morgan-Scott spline space
//! singularity. There is no floating point and no tolerance anywhere in a
//! verdict path; every equality is exact.

pub mod curves;
mod error;
pub mod example;
pub mod gen;
pub mod matrix;
pub mod pascal;
pub mod projective;
pub mod rational;
pub mod spline;

pub use curves::{
    char_number, char_ratio_curve_line, char_ratio_points, conic_through_six, fit_curves,
    in_span, BinaryForm, CharRatio, HomCurve,
};
pub use error::{Error, Result};
pub use matrix::RatMatrix;
pub use pascal::{
    char_map, conic_tangency_residuals_collinear, flexes_collinear, pascal_type_cubic,
    pascal_type_general, residual_tangent_collinear, verify_pascal, HexConfig, NinePointConfig,
    PascalCubic, PascalGeneral,
};
pub use projective::{
    collinear, concurrent, cross_ratio, decompose, dualize, join, meet, Decomposition, Figure,
    ProjLine, ProjPoint, TriFrame,
};
pub use rational::{frac, parse_rational, rat, rational, Rational};
pub use spline::{
    conformality_matrix, ms_geometric_check, product_criterion, reduced_matrix, s10_dim,
    spline_dim, MSConfig, MorganScott, SplineDimReport,
};
