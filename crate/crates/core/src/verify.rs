//! Numerical certification of comparison-triangle properties of the induced
//! path metric on polygon domains.
//!
//! Each check samples a concrete geometric statement to a tolerance and
//! reports the largest violation found: the comparison inequality for
//! geodesic triangles, convex-hull containment of triangle traces, the
//! monotone limit of outer angles, agreement of the limit outer angle with
//! the Alexandrov angle, independence of the Alexandrov angle from the
//! comparison curvature, and the triangle inequality for angles.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::domain::{fixtures, Location, PolygonDomain};
use crate::error::Error;
use crate::geodesic::{intrinsic_distance, shortest_path, IntrinsicPath};
use crate::model::{
    build_comparison_triangle, comparison_angle, distance_unchecked, geodesic_interpolate, orient,
    outer_angle, Curvature, ModelPoint,
};

/// Default slack when asserting that outer-angle sequences are nonincreasing.
pub const MONOTONE_SLACK: f64 = 1e-12;

/// Default tolerance for the comparison (CAT) inequality.
pub const CAT_TOLERANCE: f64 = 1e-9;

/// Default tolerance for hull-containment violations.
pub const HULL_TOLERANCE: f64 = 1e-9;

/// Default tolerance when comparing angle estimators against each other.
pub const ANGLE_TOLERANCE: f64 = 1e-3;

/// Default tolerance for curvature independence of Alexandrov estimates.
pub const KAPPA_INDEPENDENCE_TOLERANCE: f64 = 1e-4;

/// Relative arclength window excluded around shared triangle vertices when
/// testing side traces for intersections.
const TRACE_WINDOW_FRACTION: f64 = 1e-3;

/// Distance below which two side traces count as intersecting.
const TRACE_TOLERANCE: f64 = 1e-9;

// ---------------------------------------------------------------------------
// Geodesic triangles
// ---------------------------------------------------------------------------

/// A geodesic triangle inside a domain: three vertices joined pairwise by
/// shortest paths, plus the simplicity flag (whether the union of the side
/// traces is a simple closed curve).
#[derive(Debug, Clone)]
pub struct GeodesicTriangle<'a> {
    domain: &'a PolygonDomain,
    vertices: [ModelPoint; 3],
    sides: [IntrinsicPath; 3],
    simple: bool,
}

impl<'a> GeodesicTriangle<'a> {
    pub fn domain(&self) -> &'a PolygonDomain {
        self.domain
    }

    pub fn vertices(&self) -> &[ModelPoint; 3] {
        &self.vertices
    }

    /// Sides in order: v0 -> v1, v1 -> v2, v2 -> v0.
    pub fn sides(&self) -> &[IntrinsicPath; 3] {
        &self.sides
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// The two sides emanating from vertex `v`, both re-rooted at it.
    pub fn sides_from(&self, v: usize) -> (IntrinsicPath, IntrinsicPath) {
        assert!(v < 3);
        let fwd = self.sides[v].clone();
        let back = self.sides[(v + 2) % 3].reversed();
        (fwd, back)
    }
}

/// Compute the sides of a triangle and classify its simplicity.
pub fn build_triangle<'a>(
    domain: &'a PolygonDomain,
    p: ModelPoint,
    q: ModelPoint,
    r: ModelPoint,
) -> Result<GeodesicTriangle<'a>, Error> {
    let tol = domain.kappa().tolerance();
    if p.coord_dist(q) <= tol || q.coord_dist(r) <= tol || r.coord_dist(p) <= tol {
        return Err(Error::DegenerateTriangle);
    }
    let sides = [
        shortest_path(domain, p, q)?,
        shortest_path(domain, q, r)?,
        shortest_path(domain, r, p)?,
    ];
    let simple = is_simple_triangle(&sides);
    Ok(GeodesicTriangle {
        domain,
        vertices: [p, q, r],
        sides,
        simple,
    })
}

/// Whether the union of three side traces forms a simple closed curve:
/// pairwise intersections are exactly the shared vertices. Shared endpoints
/// are excluded by arclength windows before measuring trace separation.
pub fn is_simple_triangle(sides: &[IntrinsicPath; 3]) -> bool {
    for i in 0..3 {
        let a = &sides[i];
        let b = &sides[(i + 1) % 3];
        // a ends where b starts; trim that end of a and start of b.
        let w = TRACE_WINDOW_FRACTION * a.length().min(b.length());
        let ta = trimmed_polyline(a, 0.0, a.length() - w);
        let tb = trimmed_polyline(b, w, b.length());
        if polyline_min_distance(&ta, &tb) <= TRACE_TOLERANCE {
            return false;
        }
    }
    true
}

/// Waypoints of the sub-path between two arclengths.
fn trimmed_polyline(path: &IntrinsicPath, s0: f64, s1: f64) -> Vec<ModelPoint> {
    let len = path.length();
    let s0 = s0.clamp(0.0, len);
    let s1 = s1.clamp(0.0, len);
    if s1 <= s0 {
        return vec![path.evaluate(s0).unwrap()];
    }
    let mut pts = vec![path.evaluate(s0).unwrap()];
    for (i, &s) in path.cumulative().iter().enumerate() {
        if s > s0 && s < s1 {
            pts.push(path.waypoints()[i]);
        }
    }
    pts.push(path.evaluate(s1).unwrap());
    pts
}

/// A point subtending the same angle at the path start as the point at
/// arclength `t`: within the first segment the far segment endpoint stands
/// in exactly (points on one geodesic ray subtend one angle), which keeps
/// tiny-scale outer angles free of cancellation noise.
fn ray_representative(side: &IntrinsicPath, t: f64) -> Result<ModelPoint, Error> {
    if t <= side.cumulative()[1] {
        Ok(side.waypoints()[1])
    } else {
        side.evaluate(t)
    }
}

fn polyline_min_distance(a: &[ModelPoint], b: &[ModelPoint]) -> f64 {
    let mut best = f64::INFINITY;
    let seg_pairs = |u: &[ModelPoint]| -> Vec<(ModelPoint, ModelPoint)> {
        if u.len() == 1 {
            vec![(u[0], u[0])]
        } else {
            u.windows(2).map(|w| (w[0], w[1])).collect()
        }
    };
    for (a0, a1) in seg_pairs(a) {
        for (b0, b1) in seg_pairs(b) {
            best = best.min(segment_segment_distance(a0, a1, b0, b1));
        }
    }
    best
}

fn segment_segment_distance(
    a0: ModelPoint,
    a1: ModelPoint,
    b0: ModelPoint,
    b1: ModelPoint,
) -> f64 {
    // Proper crossing means distance zero.
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0))
        && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0))
    {
        return 0.0;
    }
    let d1 = crate::domain::point_segment_distance(b0, a0, a1);
    let d2 = crate::domain::point_segment_distance(b1, a0, a1);
    let d3 = crate::domain::point_segment_distance(a0, b0, b1);
    let d4 = crate::domain::point_segment_distance(a1, b0, b1);
    d1.min(d2).min(d3).min(d4)
}

// ---------------------------------------------------------------------------
// Reports and estimates
// ---------------------------------------------------------------------------

/// A labelled scalar carried in a report for post-mortem inspection.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Diagnostic {
    pub label: String,
    pub value: f64,
}

/// Outcome of one verification run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub samples: usize,
    pub max_violation: f64,
    pub pass: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl CheckReport {
    fn new(check: &str, instance: &str, samples: usize, max_violation: f64, tol: f64) -> Self {
        CheckReport {
            check: check.to_string(),
            instance: instance.to_string(),
            samples,
            max_violation,
            pass: max_violation <= tol,
            diagnostics: Vec::new(),
        }
    }

    fn with(mut self, label: &str, value: f64) -> Self {
        self.diagnostics.push(Diagnostic {
            label: label.to_string(),
            value,
        });
        self
    }
}

/// An angle estimated along a decreasing sequence of scales.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AngleEstimate {
    pub scales: Vec<f64>,
    pub values: Vec<f64>,
    pub extrapolated: f64,
    pub monotone: bool,
}

/// Geometric scale sequence t0, t0/2, ..., t0/2^(steps-1).
pub fn geometric_scales(t0: f64, steps: usize) -> Vec<f64> {
    (0..steps).map(|i| t0 / f64::powi(2.0, i as i32)).collect()
}

/// Default scale sequence at a triangle vertex: start at a quarter of the
/// shorter adjacent side, halve `steps` times.
pub fn default_scales(tri: &GeodesicTriangle, vertex: usize, steps: usize) -> Vec<f64> {
    let (a, b) = tri.sides_from(vertex);
    geometric_scales(a.length().min(b.length()) / 4.0, steps)
}

fn validate_scales(scales: &[f64], len_a: f64, len_b: f64) -> Result<(), Error> {
    if scales.is_empty() {
        return Err(Error::InvalidScales {
            reason: "empty scale list".to_string(),
        });
    }
    for w in scales.windows(2) {
        if !(w[1] < w[0]) {
            return Err(Error::InvalidScales {
                reason: format!("scales not strictly decreasing at {} -> {}", w[0], w[1]),
            });
        }
    }
    let limit = len_a.min(len_b);
    for &s in scales {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::InvalidScales {
                reason: format!("scale {s} is not positive"),
            });
        }
        if s >= limit {
            return Err(Error::ScaleTooLarge { scale: s, limit });
        }
    }
    Ok(())
}

fn monotone_nonincreasing(values: &[f64], slack: f64) -> bool {
    values.windows(2).all(|w| w[1] <= w[0] + slack)
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// The comparison inequality: distances from each vertex to points on the
/// opposite side never exceed the matching distances in the comparison
/// triangle built from the intrinsic side lengths.
pub fn cat_check(
    tri: &GeodesicTriangle,
    k: Curvature,
    n_samples: usize,
    tol: f64,
) -> Result<CheckReport, Error> {
    let domain = tri.domain();
    let lengths = [
        tri.sides()[0].length(),
        tri.sides()[1].length(),
        tri.sides()[2].length(),
    ];
    let cmp = build_comparison_triangle(lengths[0], lengths[2], lengths[1], k)?;
    let bars = [cmp.p_bar, cmp.q_bar, cmp.r_bar];

    let mut max_violation = f64::NEG_INFINITY;
    let mut worst = (0usize, 0usize);
    let mut samples = 0usize;
    for side in 0..3 {
        let path = &tri.sides()[side];
        let len = lengths[side];
        let (bar_from, bar_to) = (bars[side], bars[(side + 1) % 3]);
        let opposite = tri.vertices()[(side + 2) % 3];
        let bar_opposite = bars[(side + 2) % 3];
        for j in 1..=n_samples {
            let ratio = j as f64 / (n_samples + 1) as f64;
            let x = path.evaluate(ratio * len)?;
            let x_bar = geodesic_interpolate(bar_from, bar_to, ratio, k)?;
            let intrinsic = intrinsic_distance(domain, opposite, x)?;
            let compared = distance_unchecked(bar_opposite, x_bar, k);
            let violation = intrinsic - compared;
            samples += 1;
            if violation > max_violation {
                max_violation = violation;
                worst = (side, j);
            }
        }
    }
    Ok(
        CheckReport::new("cat", "", samples, max_violation, tol)
            .with("worst_side", worst.0 as f64)
            .with("worst_sample", worst.1 as f64),
    )
}

/// Outer angles measured at matching scales down both sides of a vertex.
/// Monotone (nonincreasing as the scale shrinks) by the convexity of the
/// construction; the finest value is the estimate.
pub fn limit_outer_angle_estimate(
    tri: &GeodesicTriangle,
    vertex: usize,
    scales: &[f64],
) -> Result<AngleEstimate, Error> {
    let (side_a, side_b) = tri.sides_from(vertex);
    validate_scales(scales, side_a.length(), side_b.length())?;
    // The actual ray origin: the vertex after any boundary snapping.
    let apex = side_a.start();
    let kappa = tri.domain().kappa();
    let mut values = Vec::with_capacity(scales.len());
    for &t in scales {
        let u = ray_representative(&side_a, t)?;
        let w = ray_representative(&side_b, t)?;
        values.push(outer_angle(apex, u, w, kappa)?);
    }
    Ok(AngleEstimate {
        scales: scales.to_vec(),
        values: values.clone(),
        extrapolated: *values.last().unwrap(),
        monotone: monotone_nonincreasing(&values, MONOTONE_SLACK),
    })
}

/// Alexandrov angle at a vertex: per scale, the sup of comparison angles of
/// sub-triangles over a grid of arclengths in (0, scale]^2.
pub fn alexandrov_angle_estimate(
    tri: &GeodesicTriangle,
    vertex: usize,
    scales: &[f64],
    grid: usize,
    k_comparison: Curvature,
) -> Result<AngleEstimate, Error> {
    let (side_a, side_b) = tri.sides_from(vertex);
    alexandrov_between(
        tri.domain(),
        &side_a,
        &side_b,
        scales,
        grid,
        k_comparison,
    )
}

/// Alexandrov estimate between two geodesics issuing from a common point.
pub fn alexandrov_between(
    domain: &PolygonDomain,
    side_a: &IntrinsicPath,
    side_b: &IntrinsicPath,
    scales: &[f64],
    grid: usize,
    k_comparison: Curvature,
) -> Result<AngleEstimate, Error> {
    validate_scales(scales, side_a.length(), side_b.length())?;
    if grid == 0 {
        return Err(Error::InvalidScales {
            reason: "grid must be at least 1".to_string(),
        });
    }
    let mut values = Vec::with_capacity(scales.len());
    for &scale in scales {
        let mut sup: f64 = 0.0;
        for i in 1..=grid {
            let t = scale * i as f64 / grid as f64;
            let u = side_a.evaluate(t)?;
            for j in i..=grid {
                let tp = scale * j as f64 / grid as f64;
                let w = side_b.evaluate(tp)?;
                let c = intrinsic_distance(domain, u, w)?;
                sup = sup.max(comparison_angle(t, tp, c, k_comparison)?);
                if j != i {
                    // The grid is symmetric; measure the swapped pair too.
                    let u2 = side_a.evaluate(tp)?;
                    let w2 = side_b.evaluate(t)?;
                    let c2 = intrinsic_distance(domain, u2, w2)?;
                    sup = sup.max(comparison_angle(tp, t, c2, k_comparison)?);
                }
            }
        }
        values.push(sup);
    }
    Ok(AngleEstimate {
        scales: scales.to_vec(),
        values: values.clone(),
        extrapolated: *values.last().unwrap(),
        monotone: monotone_nonincreasing(&values, MONOTONE_SLACK),
    })
}

/// Agreement of the limit outer angle with the Alexandrov angle at a vertex.
pub fn angle_equality_check(
    tri: &GeodesicTriangle,
    vertex: usize,
    scales: &[f64],
    grid: usize,
    tol: f64,
) -> Result<CheckReport, Error> {
    let outer = limit_outer_angle_estimate(tri, vertex, scales)?;
    let alex = alexandrov_angle_estimate(tri, vertex, scales, grid, Curvature::FLAT)?;
    let diff = (outer.extrapolated - alex.extrapolated).abs();
    let samples = scales.len() * (1 + grid * grid);
    Ok(CheckReport::new("angles", "", samples, diff, tol)
        .with("limit_outer", outer.extrapolated)
        .with("alexandrov", alex.extrapolated)
        .with("outer_monotone", outer.monotone as u8 as f64))
}

/// Containment of the triangle trace in the model convex hull of its
/// vertices, via orientation tests in model coordinates. The violation is
/// the farthest any sampled trace point falls outside the hull.
pub fn hull_containment_check(
    tri: &GeodesicTriangle,
    n_samples: usize,
    tol: f64,
) -> Result<CheckReport, Error> {
    let [va, vb, vc] = *tri.vertices();
    let ccw = orient(va, vb, vc);
    let hull: [ModelPoint; 3] = if ccw >= 0.0 { [va, vb, vc] } else { [va, vc, vb] };

    let mut max_violation: f64 = 0.0;
    let mut samples = 0;
    for side in tri.sides() {
        let len = side.length();
        for j in 0..n_samples {
            let s = len * j as f64 / (n_samples.max(2) - 1) as f64;
            let x = side.evaluate(s)?;
            samples += 1;
            max_violation = max_violation.max(hull_excess(&hull, x));
        }
    }
    Ok(CheckReport::new("hull", "", samples, max_violation, tol))
}

/// How far `x` lies outside the (possibly degenerate) triangle hull, as a
/// model-coordinate distance; zero when inside.
fn hull_excess(hull: &[ModelPoint; 3], x: ModelPoint) -> f64 {
    let area2 = orient(hull[0], hull[1], hull[2]).abs();
    let scale = hull[0]
        .coord_dist(hull[1])
        .max(hull[1].coord_dist(hull[2]))
        .max(hull[2].coord_dist(hull[0]));
    if area2 <= 1e-14 * scale * scale {
        // Collinear vertices: the hull is a segment.
        let mut best = f64::INFINITY;
        for i in 0..3 {
            for j in (i + 1)..3 {
                best = best.min(crate::domain::point_segment_distance(x, hull[i], hull[j]));
            }
        }
        return best;
    }
    let mut excess: f64 = 0.0;
    for e in 0..3 {
        let (u, v) = (hull[e], hull[(e + 1) % 3]);
        let d = -orient(u, v, x) / u.coord_dist(v);
        excess = excess.max(d);
    }
    excess.max(0.0)
}

/// The triangle inequality for Alexandrov angles between three geodesics
/// issuing from a common point: each pairwise angle is at most the sum of
/// the other two.
pub fn angle_triangle_inequality_check(
    domain: &PolygonDomain,
    p: ModelPoint,
    targets: [ModelPoint; 3],
    scales: &[f64],
    grid: usize,
    tol: f64,
) -> Result<CheckReport, Error> {
    let paths = [
        shortest_path(domain, p, targets[0])?,
        shortest_path(domain, p, targets[1])?,
        shortest_path(domain, p, targets[2])?,
    ];
    let mut angles = [0.0f64; 3]; // angles[k] between paths (k+1)%3 and (k+2)%3
    for k_idx in 0..3 {
        let a = &paths[(k_idx + 1) % 3];
        let b = &paths[(k_idx + 2) % 3];
        let est = alexandrov_between(domain, a, b, scales, grid, Curvature::FLAT)?;
        angles[k_idx] = est.extrapolated;
    }
    let mut max_violation = f64::NEG_INFINITY;
    for k_idx in 0..3 {
        let lhs = angles[k_idx];
        let rhs = angles[(k_idx + 1) % 3] + angles[(k_idx + 2) % 3];
        max_violation = max_violation.max(lhs - rhs);
    }
    Ok(
        CheckReport::new("angle-triangle", "", scales.len() * grid * grid, max_violation, tol)
            .with("angle_0", angles[0])
            .with("angle_1", angles[1])
            .with("angle_2", angles[2]),
    )
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

/// An explicit domain entry in a suite corpus.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CorpusDomain {
    pub name: String,
    pub kappa: f64,
    pub vertices: Vec<[f64; 2]>,
}

/// Configuration for a full verification run. Deterministic under a fixed
/// seed: the corpus, the sampled triangles and every tolerance are pinned.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Curvatures the built-in and random domains run under.
    pub curvatures: Vec<f64>,
    /// Built-in fixture names: "square", "lshape", "slit".
    pub named: Vec<String>,
    /// Extra explicit domains, each at its own curvature.
    pub domains: Vec<CorpusDomain>,
    /// Number of seeded random polygons per curvature.
    pub random_count: usize,
    pub vertex_range: [usize; 2],
    pub triangles_per_domain: usize,
    /// Checks to run per triangle: "cat", "hull", "monotone", "angles".
    pub checks: Vec<String>,
    pub samples_per_side: usize,
    pub scale_steps: usize,
    pub grid: usize,
    pub cat_tol: f64,
    pub hull_tol: f64,
    pub angle_tol: f64,
    pub monotone_slack: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            curvatures: vec![0.0, -0.5, -1.0],
            named: vec!["square".into(), "lshape".into(), "slit".into()],
            domains: Vec::new(),
            random_count: 4,
            vertex_range: [5, 12],
            triangles_per_domain: 2,
            checks: vec!["cat".into(), "hull".into(), "monotone".into(), "angles".into()],
            samples_per_side: 64,
            scale_steps: 12,
            grid: 8,
            cat_tol: CAT_TOLERANCE,
            hull_tol: HULL_TOLERANCE,
            angle_tol: ANGLE_TOLERANCE,
            monotone_slack: MONOTONE_SLACK,
        }
    }
}

/// Built-in fixture by name, scaled into the unit disk so one vertex set
/// serves every curvature.
pub fn named_fixture(name: &str) -> Option<Vec<ModelPoint>> {
    let raw = match name {
        "square" => fixtures::unit_square(),
        "lshape" => fixtures::lshape(),
        "slit" => fixtures::slit_square(1e-3),
        _ => return None,
    };
    Some(fixtures::fit_to_disk(&raw, 0.8))
}

/// Sample an interior point, preferring points clear of the boundary and of
/// already chosen points. Falls back to looser spacing before giving up.
pub fn sample_interior_point<R: Rng>(
    domain: &PolygonDomain,
    rng: &mut R,
    chosen: &[ModelPoint],
    spacing: f64,
    vertex_clearance: f64,
) -> Option<ModelPoint> {
    let verts = domain.vertices();
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in verts {
        min_x = min_x.min(v.x);
        max_x = max_x.max(v.x);
        min_y = min_y.min(v.y);
        max_y = max_y.max(v.y);
    }
    let mut spacing = spacing;
    let mut clearance = vertex_clearance;
    for round in 0..4 {
        let _ = round;
        for _ in 0..400 {
            let p = ModelPoint::new(rng.gen_range(min_x..max_x), rng.gen_range(min_y..max_y));
            if domain.contains(p) != Location::Interior {
                continue;
            }
            if chosen.iter().any(|c| c.coord_dist(p) < spacing) {
                continue;
            }
            if verts.iter().any(|v| v.coord_dist(p) < clearance) {
                continue;
            }
            return Some(p);
        }
        spacing /= 2.0;
        clearance /= 2.0;
    }
    None
}

fn sample_triangle<R: Rng>(domain: &PolygonDomain, rng: &mut R) -> Option<[ModelPoint; 3]> {
    let diam = domain
        .vertices()
        .iter()
        .map(|v| v.coord_dist(domain.vertices()[0]))
        .fold(0.0f64, f64::max)
        .max(1e-6);
    let mut chosen: Vec<ModelPoint> = Vec::with_capacity(3);
    for _ in 0..3 {
        let p = sample_interior_point(domain, rng, &chosen, 0.15 * diam, 0.05 * diam)?;
        chosen.push(p);
    }
    Some([chosen[0], chosen[1], chosen[2]])
}

fn skipped_report(instance: &str, err: &Error) -> CheckReport {
    CheckReport {
        check: "skipped".to_string(),
        instance: format!("{instance}: {err}"),
        samples: 0,
        max_violation: 0.0,
        pass: true,
        diagnostics: Vec::new(),
    }
}

/// Run every configured check over the corpus. Failures are aggregated, not
/// fatal; invalid corpus entries are reported as skipped.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    // (name, kappa, vertices) triples in a fixed order.
    let mut corpus: Vec<(String, f64, Vec<ModelPoint>)> = Vec::new();
    for &kappa in &config.curvatures {
        for name in &config.named {
            match named_fixture(name) {
                Some(verts) => corpus.push((format!("{name}[k={kappa}]"), kappa, verts)),
                None => reports.push(skipped_report(
                    &format!("{name}[k={kappa}]"),
                    &Error::TriangulationFailed {
                        reason: format!("unknown fixture {name}"),
                    },
                )),
            }
        }
        let lo = config.vertex_range[0].max(3);
        let hi = config.vertex_range[1].max(lo);
        for i in 0..config.random_count {
            let n = rng.gen_range(lo..=hi);
            let verts = fixtures::star_polygon(n, &mut rng);
            corpus.push((format!("random{i}[k={kappa}]"), kappa, verts));
        }
    }
    for dom in &config.domains {
        let verts: Vec<ModelPoint> = dom
            .vertices
            .iter()
            .map(|v| ModelPoint::new(v[0], v[1]))
            .collect();
        corpus.push((format!("{}[k={}]", dom.name, dom.kappa), dom.kappa, verts));
    }

    for (name, kappa, verts) in corpus {
        let k = match Curvature::new(kappa) {
            Ok(k) => k,
            Err(e) => {
                reports.push(skipped_report(&name, &e));
                continue;
            }
        };
        let domain = match PolygonDomain::validate(&verts, k) {
            Ok(d) => d,
            Err(e) => {
                reports.push(skipped_report(&name, &e));
                continue;
            }
        };
        for t_idx in 0..config.triangles_per_domain {
            let instance = format!("{name}#{t_idx}");
            let Some([p, q, r]) = sample_triangle(&domain, &mut rng) else {
                reports.push(skipped_report(
                    &instance,
                    &Error::TriangulationFailed {
                        reason: "could not sample an interior triangle".to_string(),
                    },
                ));
                continue;
            };
            let tri = match build_triangle(&domain, p, q, r) {
                Ok(t) => t,
                Err(e) => {
                    reports.push(skipped_report(&instance, &e));
                    continue;
                }
            };
            for check in &config.checks {
                let outcome = run_one_check(&tri, check, config, &instance);
                match outcome {
                    Ok(mut rs) => reports.append(&mut rs),
                    Err(e) => reports.push(skipped_report(&instance, &e)),
                }
            }
        }
    }
    reports
}

fn run_one_check(
    tri: &GeodesicTriangle,
    check: &str,
    config: &SuiteConfig,
    instance: &str,
) -> Result<Vec<CheckReport>, Error> {
    let k = tri.domain().kappa();
    match check {
        "cat" => {
            let mut r = cat_check(tri, k, config.samples_per_side, config.cat_tol)?;
            r.instance = instance.to_string();
            Ok(vec![r])
        }
        "hull" => {
            // Containment in the vertex hull is a statement about simple
            // triangles; sides that overlap (zero-angle configurations) may
            // legitimately leave the hull.
            let mut r = if tri.is_simple() {
                hull_containment_check(tri, config.samples_per_side, config.hull_tol)?
            } else {
                CheckReport::new("hull", "", 0, 0.0, config.hull_tol).with("non_simple", 1.0)
            };
            r.instance = instance.to_string();
            Ok(vec![r])
        }
        "monotone" => {
            let mut out = Vec::new();
            for v in 0..3 {
                let scales = default_scales(tri, v, config.scale_steps);
                let est = limit_outer_angle_estimate(tri, v, &scales)?;
                let viol = est
                    .values
                    .windows(2)
                    .map(|w| w[1] - w[0])
                    .fold(f64::NEG_INFINITY, f64::max);
                let mut r = CheckReport::new(
                    "monotone",
                    instance,
                    est.values.len(),
                    viol,
                    config.monotone_slack,
                );
                r.instance = format!("{instance}/v{v}");
                out.push(r.with("extrapolated", est.extrapolated));
            }
            Ok(out)
        }
        "angles" => {
            let scales = default_scales(tri, 0, config.scale_steps);
            let mut r = angle_equality_check(tri, 0, &scales, config.grid, config.angle_tol)?;
            r.instance = instance.to_string();
            Ok(vec![r])
        }
        other => Err(Error::InvalidScales {
            reason: format!("unknown check {other}"),
        }),
    }
}
