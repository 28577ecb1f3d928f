//! Constant-curvature planar geometry kernel (kappa <= 0) with shortest-path
//! queries inside simple geodesic polygons and a numerical verification suite
//! for comparison-triangle properties of the induced path metric.
//!
//! The crate is organized around four layers:
//!
//! - [`model`]: closed-form geometry of the flat and hyperbolic model plane
//!   (distances, geodesic interpolation, projections, parallels, angles,
//!   comparison triangles) in Cartesian or Beltrami-Klein coordinates.
//! - [`domain`]: validated simple-polygon domains with point location and an
//!   ear-clipping triangulation whose dual is a tree.
//! - [`geodesic`]: the induced path metric and its unique geodesics via the
//!   funnel algorithm, cross-validated by a visibility-graph oracle.
//! - [`verify`]: sampled certification checks (comparison inequality, hull
//!   containment, angle monotonicity and equality) plus a deterministic,
//!   seedable suite runner over built-in and random domains.
//!
//! All query operations are pure functions over immutable values and are safe
//! to call concurrently.

pub mod domain;
pub mod error;
pub mod geodesic;
pub mod model;
pub mod verify;

pub use domain::{Location, PolygonDomain, Triangulation};
pub use error::Error;
pub use geodesic::{intrinsic_distance, shortest_path, visibility_oracle_path, IntrinsicPath};
pub use model::{
    angle_between_segments, build_comparison_triangle, comparison_angle, distance,
    geodesic_interpolate, outer_angle, parallel_line_at, project_to_line, ComparisonTriangle,
    Curvature, ModelLine, ModelPoint, ModelSegment,
};
pub use verify::{
    alexandrov_angle_estimate, angle_equality_check, angle_triangle_inequality_check,
    build_triangle, cat_check, hull_containment_check, limit_outer_angle_estimate, run_suite,
    AngleEstimate, CheckReport, GeodesicTriangle, SuiteConfig,
};
