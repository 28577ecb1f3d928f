//! Exact-formula geometry of the constant-curvature model plane, kappa <= 0.
//!
//! Coordinates are Cartesian for kappa = 0 and Beltrami-Klein unit-disk
//! coordinates for kappa < 0. The Klein model is the one where geodesics are
//! straight chords, so every combinatorial step (triangulation, funnels,
//! point location) runs on ordinary Euclidean segments while distances and
//! angles use the closed hyperbolic forms below. A general kappa < 0 is
//! handled by length rescaling: d_kappa = d_{-1} / sqrt(-kappa) with the disk
//! coordinates held fixed.

use crate::error::Error;

/// Absolute tolerance for geometric predicates in the flat plane.
pub const TOL_FLAT: f64 = 1e-12;

/// Absolute tolerance for predicates routed through transcendental functions.
pub const TOL_CURVED: f64 = 1e-9;

/// Collinearity tolerance in model coordinates (waypoint collapsing etc.).
pub const TOL_COLLINEAR: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Curvature
// ---------------------------------------------------------------------------

/// The curvature parameter of the model plane. Invariant: finite and <= 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature {
    kappa: f64,
}

impl Curvature {
    /// The flat plane.
    pub const FLAT: Curvature = Curvature { kappa: 0.0 };

    pub fn new(kappa: f64) -> Result<Self, Error> {
        if !kappa.is_finite() || kappa > 0.0 {
            return Err(Error::InvalidCurvature { kappa });
        }
        Ok(Curvature { kappa })
    }

    pub fn get(self) -> f64 {
        self.kappa
    }

    pub fn is_flat(self) -> bool {
        self.kappa == 0.0
    }

    /// Length rescaling factor sqrt(-kappa); only meaningful for kappa < 0.
    pub(crate) fn scale(self) -> f64 {
        (-self.kappa).sqrt()
    }

    /// Absolute predicate tolerance appropriate for this curvature.
    pub fn tolerance(self) -> f64 {
        if self.is_flat() {
            TOL_FLAT
        } else {
            TOL_CURVED
        }
    }

    /// Check that a point is valid model input for this curvature.
    pub fn check_point(self, p: ModelPoint) -> Result<(), Error> {
        if !p.x.is_finite() || !p.y.is_finite() {
            return Err(Error::PointOutsideModel { x: p.x, y: p.y });
        }
        if !self.is_flat() && p.x * p.x + p.y * p.y >= 1.0 {
            return Err(Error::PointOutsideModel { x: p.x, y: p.y });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Points, lines, segments
// ---------------------------------------------------------------------------

/// A point in model coordinates. For kappa < 0 these are Klein-disk
/// coordinates before the curvature rescaling, so x^2 + y^2 < 1 must hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelPoint {
    pub x: f64,
    pub y: f64,
}

impl ModelPoint {
    pub fn new(x: f64, y: f64) -> Self {
        ModelPoint { x, y }
    }

    /// Euclidean distance in model coordinates (not the metric distance).
    pub fn coord_dist(self, other: ModelPoint) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub(crate) fn norm2(self) -> f64 {
        self.x * self.x + self.y * self.y
    }
}

/// Twice the signed area of triangle (a, b, c); positive when c lies to the
/// left of the directed segment a -> b.
pub(crate) fn orient(a: ModelPoint, b: ModelPoint, c: ModelPoint) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

pub(crate) fn dot(o: ModelPoint, a: ModelPoint, b: ModelPoint) -> f64 {
    (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)
}

/// A geodesic line, stored as two distinct incident points. For kappa < 0
/// the line is the full chord through the two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelLine {
    pub a: ModelPoint,
    pub b: ModelPoint,
}

impl ModelLine {
    pub fn new(a: ModelPoint, b: ModelPoint, k: Curvature) -> Result<Self, Error> {
        k.check_point(a)?;
        k.check_point(b)?;
        if a.coord_dist(b) <= k.tolerance() {
            return Err(Error::DegenerateSegment);
        }
        Ok(ModelLine { a, b })
    }
}

/// A geodesic line segment between two model points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSegment {
    pub a: ModelPoint,
    pub b: ModelPoint,
}

impl ModelSegment {
    pub fn new(a: ModelPoint, b: ModelPoint) -> Self {
        ModelSegment { a, b }
    }

    pub fn length(&self, k: Curvature) -> Result<f64, Error> {
        distance(self.a, self.b, k)
    }
}

// ---------------------------------------------------------------------------
// Hyperboloid lift (kappa = -1 backing for all kappa < 0)
// ---------------------------------------------------------------------------

type H3 = [f64; 3];

/// Lift a Klein point onto the upper hyperboloid sheet x^2 + y^2 - z^2 = -1.
fn lift(p: ModelPoint) -> H3 {
    let w = (1.0 - p.norm2()).sqrt();
    [p.x / w, p.y / w, 1.0 / w]
}

/// Minkowski inner product with signature (+, +, -).
fn mink(a: H3, b: H3) -> f64 {
    a[0] * b[0] + a[1] * b[1] - a[2] * b[2]
}

/// Minkowski cross product: orthogonal (in the Minkowski sense) to both inputs.
fn mink_cross(a: H3, b: H3) -> H3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        -(a[0] * b[1] - a[1] * b[0]),
    ]
}

fn to_klein(h: H3) -> ModelPoint {
    ModelPoint::new(h[0] / h[2], h[1] / h[2])
}

/// Unit tangent at `from` (lifted) pointing toward `to` (lifted), given their
/// hyperbolic separation d > 0.
fn tangent_toward(from: H3, to: H3, d: f64) -> H3 {
    let (ch, sh) = (d.cosh(), d.sinh());
    [
        (to[0] - ch * from[0]) / sh,
        (to[1] - ch * from[1]) / sh,
        (to[2] - ch * from[2]) / sh,
    ]
}

/// Point at hyperbolic distance `t` from `from` along unit tangent `dir`.
fn exp_map(from: H3, dir: H3, t: f64) -> H3 {
    let (ch, sh) = (t.cosh(), t.sinh());
    [
        ch * from[0] + sh * dir[0],
        ch * from[1] + sh * dir[1],
        ch * from[2] + sh * dir[2],
    ]
}

/// Hyperbolic (kappa = -1) distance between two Klein points.
///
/// Uses sinh^2 d = (|p-q|^2 - (p x q)^2) / ((1-|p|^2)(1-|q|^2)), which avoids
/// the cancellation the acosh form suffers for nearby points.
fn klein_distance(p: ModelPoint, q: ModelPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let cross = p.x * q.y - p.y * q.x;
    let num = (dx * dx + dy * dy - cross * cross).max(0.0);
    let den = (1.0 - p.norm2()) * (1.0 - q.norm2());
    (num / den).sqrt().asinh()
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Metric distance between two model points.
pub fn distance(p: ModelPoint, q: ModelPoint, k: Curvature) -> Result<f64, Error> {
    k.check_point(p)?;
    k.check_point(q)?;
    Ok(distance_unchecked(p, q, k))
}

/// Distance without input validation; callers guarantee validity.
pub(crate) fn distance_unchecked(p: ModelPoint, q: ModelPoint, k: Curvature) -> f64 {
    if k.is_flat() {
        p.coord_dist(q)
    } else {
        klein_distance(p, q) / k.scale()
    }
}

/// Point on the segment p -> q at metric-arclength fraction `t` of the total.
///
/// distance(p, result) = t * distance(p, q) up to rounding. The returned model
/// coordinates are independent of the magnitude of kappa < 0 since rescaling
/// moves both sides of the proportion equally.
pub fn geodesic_interpolate(
    p: ModelPoint,
    q: ModelPoint,
    t: f64,
    k: Curvature,
) -> Result<ModelPoint, Error> {
    k.check_point(p)?;
    k.check_point(q)?;
    if p == q {
        return Err(Error::DegenerateSegment);
    }
    if k.is_flat() {
        return Ok(ModelPoint::new(
            p.x + t * (q.x - p.x),
            p.y + t * (q.y - p.y),
        ));
    }
    let d = klein_distance(p, q);
    if d == 0.0 {
        return Err(Error::DegenerateSegment);
    }
    let hp = lift(p);
    let hq = lift(q);
    let dir = tangent_toward(hp, hq, d);
    Ok(to_klein(exp_map(hp, dir, t * d)))
}

/// Foot of the perpendicular from `p` onto the (full) line.
pub fn project_to_line(p: ModelPoint, line: &ModelLine, k: Curvature) -> Result<ModelPoint, Error> {
    k.check_point(p)?;
    k.check_point(line.a)?;
    k.check_point(line.b)?;
    if k.is_flat() {
        let dx = line.b.x - line.a.x;
        let dy = line.b.y - line.a.y;
        let len2 = dx * dx + dy * dy;
        let t = ((p.x - line.a.x) * dx + (p.y - line.a.y) * dy) / len2;
        return Ok(ModelPoint::new(line.a.x + t * dx, line.a.y + t * dy));
    }
    let ha = lift(line.a);
    let hb = lift(line.b);
    let n = mink_cross(ha, hb);
    let n_norm = mink(n, n).sqrt();
    let n = [n[0] / n_norm, n[1] / n_norm, n[2] / n_norm];
    let hp = lift(p);
    let s = mink(hp, n);
    let denom = (1.0 + s * s).sqrt();
    let foot = [
        (hp[0] - s * n[0]) / denom,
        (hp[1] - s * n[1]) / denom,
        (hp[2] - s * n[2]) / denom,
    ];
    Ok(to_klein(foot))
}

/// The line through `p` perpendicular to the segment from `p` to its closest
/// point on `line`. When `p` lies on the line (within tolerance) the
/// construction degenerates and the input line itself is returned.
pub fn parallel_line_at(line: &ModelLine, p: ModelPoint, k: Curvature) -> Result<ModelLine, Error> {
    let foot = project_to_line(p, line, k)?;
    if distance_unchecked(p, foot, k) <= k.tolerance() {
        return Ok(*line);
    }
    if k.is_flat() {
        let b = ModelPoint::new(p.x + (line.b.x - line.a.x), p.y + (line.b.y - line.a.y));
        return Ok(ModelLine { a: p, b });
    }
    let hp = lift(p);
    let hf = lift(foot);
    let d = klein_distance(p, foot);
    let toward_foot = tangent_toward(hp, hf, d);
    let perp = mink_cross(hp, toward_foot);
    let norm = mink(perp, perp).sqrt();
    let perp = [perp[0] / norm, perp[1] / norm, perp[2] / norm];
    let b = to_klein(exp_map(hp, perp, 0.25));
    Ok(ModelLine { a: p, b })
}

/// Angle at `p` subtended by the points `q` and `r`, computed through the
/// law of cosines on the three pairwise distances. Value in [0, pi].
pub fn outer_angle(
    p: ModelPoint,
    q: ModelPoint,
    r: ModelPoint,
    k: Curvature,
) -> Result<f64, Error> {
    if p == q || p == r {
        return Err(Error::DegenerateAngle);
    }
    let a = distance(p, q, k)?;
    let b = distance(p, r, k)?;
    let c = distance(q, r, k)?;
    comparison_angle(a, b, c, k)
}

/// Angle opposite side `c` in the triangle with adjacent sides `a` and `b`,
/// by the flat or hyperbolic law of cosines. Degenerate inputs within
/// tolerance of c = a + b (resp. c = |a - b|) return exactly pi (resp. 0).
pub fn comparison_angle(a: f64, b: f64, c: f64, k: Curvature) -> Result<f64, Error> {
    if !(a > 0.0 && b > 0.0 && c >= 0.0) || !a.is_finite() || !b.is_finite() || !c.is_finite() {
        return Err(Error::TriangleInequalityViolated { a, b, c });
    }
    // Exactly degenerate inputs keep exact answers.
    if c == a + b {
        return Ok(std::f64::consts::PI);
    }
    if c == (a - b).abs() {
        return Ok(0.0);
    }
    // The error band scales with the side magnitudes so that near-degenerate
    // micro-triangles (sub-triangle estimators) stay on the computed branch;
    // inside the band the cosine is merely clamped. The absolute floor covers
    // coordinate-level rounding in the side lengths themselves.
    let band = k.tolerance() * (a + b + c) + 1e-14;
    if c - (a + b) > band || (a - b).abs() - c > band {
        return Err(Error::TriangleInequalityViolated { a, b, c });
    }
    let cos_angle = if k.is_flat() {
        (a * a + b * b - c * c) / (2.0 * a * b)
    } else {
        // cosh u cosh v - cosh w expressed through cosh x - 1 = 2 sinh^2(x/2)
        // so the small-argument cancellation stays fully accurate.
        let s = k.scale();
        let (u, v, w) = (a * s, b * s, c * s);
        let cu = 2.0 * (u / 2.0).sinh().powi(2);
        let cv = 2.0 * (v / 2.0).sinh().powi(2);
        let cw = 2.0 * (w / 2.0).sinh().powi(2);
        (cu + cv - cw + cu * cv) / (u.sinh() * v.sinh())
    };
    Ok(cos_angle.clamp(-1.0, 1.0).acos())
}

// ---------------------------------------------------------------------------
// Comparison triangles
// ---------------------------------------------------------------------------

/// A triangle in the model plane realizing prescribed side lengths, in the
/// canonical placement: first vertex at the origin, second on the positive
/// x-axis, third in the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonTriangle {
    pub p_bar: ModelPoint,
    pub q_bar: ModelPoint,
    pub r_bar: ModelPoint,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ComparisonTriangle {
    /// Largest absolute deviation of the realized pairwise distances from the
    /// requested side lengths.
    pub fn reconstruction_error(&self, k: Curvature) -> f64 {
        let da = distance_unchecked(self.p_bar, self.q_bar, k);
        let db = distance_unchecked(self.p_bar, self.r_bar, k);
        let dc = distance_unchecked(self.q_bar, self.r_bar, k);
        (da - self.a)
            .abs()
            .max((db - self.b).abs())
            .max((dc - self.c).abs())
    }
}

/// Build the canonical triangle with d(p,q) = a, d(p,r) = b, d(q,r) = c.
pub fn build_comparison_triangle(
    a: f64,
    b: f64,
    c: f64,
    k: Curvature,
) -> Result<ComparisonTriangle, Error> {
    let angle = comparison_angle(a, b, c, k)?;
    let p_bar = ModelPoint::new(0.0, 0.0);
    let (q_bar, r_bar) = if k.is_flat() {
        (
            ModelPoint::new(a, 0.0),
            ModelPoint::new(b * angle.cos(), b * angle.sin()),
        )
    } else {
        let s = k.scale();
        let rq = (a * s).tanh();
        let rr = (b * s).tanh();
        (
            ModelPoint::new(rq, 0.0),
            ModelPoint::new(rr * angle.cos(), rr * angle.sin()),
        )
    };
    Ok(ComparisonTriangle {
        p_bar,
        q_bar,
        r_bar,
        a,
        b,
        c,
    })
}

/// Angle at `p` between the segments p->u and p->v, measured through tangent
/// vectors. Cross-validates the law-of-cosines route in `outer_angle`.
pub fn angle_between_segments(
    p: ModelPoint,
    u: ModelPoint,
    v: ModelPoint,
    k: Curvature,
) -> Result<f64, Error> {
    if p == u || p == v {
        return Err(Error::DegenerateAngle);
    }
    k.check_point(p)?;
    k.check_point(u)?;
    k.check_point(v)?;
    if k.is_flat() {
        let cross = orient(p, u, v).abs();
        let d = dot(p, u, v);
        return Ok(cross.atan2(d));
    }
    let hp = lift(p);
    let hu = lift(u);
    let hv = lift(v);
    let du = klein_distance(p, u);
    let dv = klein_distance(p, v);
    if du == 0.0 || dv == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    let tu = tangent_toward(hp, hu, du);
    let tv = tangent_toward(hp, hv, dv);
    Ok(mink(tu, tv).clamp(-1.0, 1.0).acos())
}
