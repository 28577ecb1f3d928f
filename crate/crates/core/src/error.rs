//! Error type shared by the geometry kernel and the verification suite.

use thiserror::Error;

/// Everything that can go wrong in the kernel.
///
/// Geometric predicates are tolerance-banded, so most variants fire only when
/// an input is wrong beyond the configured tolerance, not merely ill-conditioned.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("curvature {kappa} is not a finite value <= 0")]
    InvalidCurvature { kappa: f64 },

    #[error("point ({x}, {y}) lies on or outside the unit model disk")]
    PointOutsideModel { x: f64, y: f64 },

    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,

    #[error("degenerate angle: a ray endpoint coincides with the apex")]
    DegenerateAngle,

    #[error("side lengths a={a}, b={b}, c={c} violate the triangle inequality")]
    TriangleInequalityViolated { a: f64, b: f64, c: f64 },

    #[error("polygon needs at least 3 vertices, got {count}")]
    TooFewVertices { count: usize },

    #[error("polygon boundary self-intersects (edge {e1} against edge {e2})")]
    SelfIntersecting { e1: usize, e2: usize },

    #[error("vertices {i} and {j} coincide within tolerance")]
    DuplicateVertex { i: usize, j: usize },

    #[error("zero-area spike at vertex {index}")]
    CollinearDegenerate { index: usize },

    #[error("triangulation failed: {reason}")]
    TriangulationFailed { reason: String },

    #[error("point ({x}, {y}) lies outside the domain")]
    PointOutsideDomain { x: f64, y: f64 },

    #[error("arclength {s} outside [0, {length}]")]
    ArclengthOutOfRange { s: f64, length: f64 },

    #[error("scale {scale} is not below the adjacent side length {limit}")]
    ScaleTooLarge { scale: f64, limit: f64 },

    #[error("invalid scale sequence: {reason}")]
    InvalidScales { reason: String },

    #[error("triangle vertices coincide within tolerance")]
    DegenerateTriangle,
}

impl Error {
    /// Short machine-readable code for structured output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidCurvature { .. } => "InvalidCurvature",
            Error::PointOutsideModel { .. } => "PointOutsideModel",
            Error::DegenerateSegment => "DegenerateSegment",
            Error::DegenerateAngle => "DegenerateAngle",
            Error::TriangleInequalityViolated { .. } => "TriangleInequalityViolated",
            Error::TooFewVertices { .. } => "TooFewVertices",
            Error::SelfIntersecting { .. } => "SelfIntersecting",
            Error::DuplicateVertex { .. } => "DuplicateVertex",
            Error::CollinearDegenerate { .. } => "CollinearDegenerate",
            Error::TriangulationFailed { .. } => "TriangulationFailed",
            Error::PointOutsideDomain { .. } => "PointOutsideDomain",
            Error::ArclengthOutOfRange { .. } => "ArclengthOutOfRange",
            Error::ScaleTooLarge { .. } => "ScaleTooLarge",
            Error::InvalidScales { .. } => "InvalidScales",
            Error::DegenerateTriangle => "DegenerateTriangle",
        }
    }
}
