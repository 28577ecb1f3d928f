//! Simple geodesic polygon domains: validation, point location and
//! triangulation.
//!
//! A domain is a closed, simply connected region bounded by a simple polygon
//! in model coordinates. Because Klein geodesics are straight chords, the
//! boundary is an ordinary Euclidean polygon for every kappa <= 0 and all the
//! combinatorial machinery here is curvature-independent.

use crate::error::Error;
use crate::model::{dot, orient, Curvature, ModelPoint, TOL_COLLINEAR};

/// Default width of the boundary band used by point location.
pub const DEFAULT_POINT_TOLERANCE: f64 = 1e-9;

/// Result of locating a point relative to a domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// A triangulation of the polygon interior. Triangles are CCW triples of
/// vertex indices; `neighbors[t][e]` is the triangle across the directed edge
/// `(triangles[t][e], triangles[t][(e+1)%3])`, or `None` on the boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
    pub neighbors: Vec<[Option<usize>; 3]>,
}

/// A validated simple polygon domain, counterclockwise in model coordinates,
/// with its triangulation computed once at load.
#[derive(Debug, Clone)]
pub struct PolygonDomain {
    kappa: Curvature,
    vertices: Vec<ModelPoint>,
    triangulation: Triangulation,
    point_tol: f64,
    reversed: bool,
    collinear_vertices: Vec<usize>,
}

impl PolygonDomain {
    /// Validate a vertex list and build the domain.
    ///
    /// Clockwise input is reversed to counterclockwise (recorded on the
    /// domain). Collinear boundary vertices are permitted but flagged;
    /// zero-area spikes are rejected.
    pub fn validate(vertices: &[ModelPoint], kappa: Curvature) -> Result<Self, Error> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices { count: n });
        }
        for &v in vertices {
            kappa.check_point(v)?;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if vertices[i].coord_dist(vertices[j]) <= DEFAULT_POINT_TOLERANCE {
                    return Err(Error::DuplicateVertex { i, j });
                }
            }
        }

        // Spikes (the boundary doubling straight back) are orientation-free,
        // so catch them on the input ordering before anything else.
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            if orient(prev, cur, next).abs() <= TOL_COLLINEAR && dot(cur, prev, next) > 0.0 {
                return Err(Error::CollinearDegenerate { index: i });
            }
        }

        // Non-adjacent edges must not touch at all; adjacent edges share
        // exactly their common vertex (spikes were rejected above).
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for j in (i + 1)..n {
                if (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (c, d) = (vertices[j], vertices[(j + 1) % n]);
                if segments_touch(a, b, c, d) {
                    return Err(Error::SelfIntersecting { e1: i, e2: j });
                }
            }
        }

        let mut verts = vertices.to_vec();
        let area2 = shoelace2(&verts);
        if area2.abs() <= TOL_COLLINEAR {
            return Err(Error::CollinearDegenerate { index: 0 });
        }
        let reversed = area2 < 0.0;
        if reversed {
            verts.reverse();
        }

        let mut collinear_vertices = Vec::new();
        for i in 0..n {
            let prev = verts[(i + n - 1) % n];
            let cur = verts[i];
            let next = verts[(i + 1) % n];
            if orient(prev, cur, next).abs() <= TOL_COLLINEAR {
                collinear_vertices.push(i);
            }
        }

        let triangulation = ear_clip(&verts)?;
        Ok(PolygonDomain {
            kappa,
            vertices: verts,
            triangulation,
            point_tol: DEFAULT_POINT_TOLERANCE,
            reversed,
            collinear_vertices,
        })
    }

    pub fn kappa(&self) -> Curvature {
        self.kappa
    }

    pub fn vertices(&self) -> &[ModelPoint] {
        &self.vertices
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    /// Whether the input vertex order was reversed during validation.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    /// Indices of boundary vertices with a straight (angle pi) turn.
    pub fn collinear_vertices(&self) -> &[usize] {
        &self.collinear_vertices
    }

    pub fn point_tolerance(&self) -> f64 {
        self.point_tol
    }

    pub fn with_point_tolerance(mut self, tol: f64) -> Self {
        self.point_tol = tol.max(0.0);
        self
    }

    /// Vertex `i` is reflex when the interior angle there exceeds pi.
    pub fn is_reflex(&self, i: usize) -> bool {
        let n = self.vertices.len();
        let prev = self.vertices[(i + n - 1) % n];
        let next = self.vertices[(i + 1) % n];
        orient(prev, self.vertices[i], next) < -TOL_COLLINEAR
    }

    pub fn reflex_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.is_reflex(i))
            .collect()
    }

    /// Classify a point against the closed domain. Points within the
    /// point-location tolerance of the boundary report `Boundary`; the rest
    /// use a straight-edge crossing test in model coordinates (valid for all
    /// kappa since Klein geodesics are chords).
    pub fn contains(&self, p: ModelPoint) -> Location {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if point_segment_distance(p, a, b) <= self.point_tol {
                return Location::Boundary;
            }
        }
        let mut inside = false;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                let t = (p.y - a.y) / (b.y - a.y);
                let x = a.x + t * (b.x - a.x);
                if x > p.x {
                    inside = !inside;
                }
            }
        }
        if inside {
            Location::Interior
        } else {
            Location::Exterior
        }
    }

    /// Closest point on the boundary, used to snap near-boundary endpoints
    /// before routing.
    pub fn snap_to_boundary(&self, p: ModelPoint) -> ModelPoint {
        let n = self.vertices.len();
        let mut best = self.vertices[0];
        let mut best_d = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let q = closest_on_segment(p, a, b);
            let d = p.coord_dist(q);
            if d < best_d {
                best_d = d;
                best = q;
            }
        }
        best
    }

    /// Triangle of the triangulation containing `p` (tolerance-banded);
    /// prefers the largest-area candidate so degenerate slivers never anchor
    /// a query.
    pub(crate) fn locate_triangle(&self, p: ModelPoint) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (t, tri) in self.triangulation.triangles.iter().enumerate() {
            let (a, b, c) = (
                self.vertices[tri[0]],
                self.vertices[tri[1]],
                self.vertices[tri[2]],
            );
            if point_in_triangle(p, a, b, c, self.point_tol) {
                let area = orient(a, b, c).abs();
                if best.map_or(true, |(_, ba)| area > ba) {
                    best = Some((t, area));
                }
            }
        }
        best.map(|(t, _)| t)
    }
}

/// Signed double area of the polygon (positive for CCW).
pub(crate) fn shoelace2(vertices: &[ModelPoint]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    acc
}

fn closest_on_segment(p: ModelPoint, a: ModelPoint, b: ModelPoint) -> ModelPoint {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return a;
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    ModelPoint::new(a.x + t * dx, a.y + t * dy)
}

pub(crate) fn point_segment_distance(p: ModelPoint, a: ModelPoint, b: ModelPoint) -> f64 {
    p.coord_dist(closest_on_segment(p, a, b))
}

fn point_in_triangle(p: ModelPoint, a: ModelPoint, b: ModelPoint, c: ModelPoint, tol: f64) -> bool {
    // Signed perpendicular distances against each CCW edge.
    let edges = [(a, b), (b, c), (c, a)];
    for (u, v) in edges {
        let len = u.coord_dist(v);
        if len == 0.0 {
            continue;
        }
        if orient(u, v, p) / len < -tol {
            return false;
        }
    }
    true
}

/// True when the closed segments ab and cd share any point (tolerance-banded).
fn segments_touch(a: ModelPoint, b: ModelPoint, c: ModelPoint, d: ModelPoint) -> bool {
    let tol = TOL_COLLINEAR;
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if ((o1 > tol && o2 < -tol) || (o1 < -tol && o2 > tol))
        && ((o3 > tol && o4 < -tol) || (o3 < -tol && o4 > tol))
    {
        return true;
    }
    // Near-collinear endpoint touches.
    for (p, u, v) in [(c, a, b), (d, a, b), (a, c, d), (b, c, d)] {
        if point_segment_distance(p, u, v) <= tol {
            return true;
        }
    }
    false
}

/// O(n^2) ear clipping over a CCW simple polygon. Collinear (flat) vertices
/// are clipped last, as zero-area ears, so the triangle count is always n-2.
fn ear_clip(vertices: &[ModelPoint]) -> Result<Triangulation, Error> {
    let n = vertices.len();
    let mut ring: Vec<usize> = (0..n).collect();
    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(n - 2);

    let blocked = |ring: &[usize], at: usize| -> bool {
        let m = ring.len();
        let ia = ring[(at + m - 1) % m];
        let ib = ring[at];
        let ic = ring[(at + 1) % m];
        let (a, b, c) = (vertices[ia], vertices[ib], vertices[ic]);
        ring.iter().any(|&iw| {
            if iw == ia || iw == ib || iw == ic {
                return false;
            }
            point_in_triangle(vertices[iw], a, b, c, TOL_COLLINEAR)
        })
    };

    while ring.len() > 3 {
        let m = ring.len();
        let mut clipped = None;
        for at in 0..m {
            let a = vertices[ring[(at + m - 1) % m]];
            let b = vertices[ring[at]];
            let c = vertices[ring[(at + 1) % m]];
            if orient(a, b, c) > TOL_COLLINEAR && !blocked(&ring, at) {
                clipped = Some(at);
                break;
            }
        }
        if clipped.is_none() {
            // Only flat ears left along this stretch: clip a forward
            // collinear vertex as a zero-area triangle.
            for at in 0..m {
                let a = vertices[ring[(at + m - 1) % m]];
                let b = vertices[ring[at]];
                let c = vertices[ring[(at + 1) % m]];
                if orient(a, b, c).abs() <= TOL_COLLINEAR
                    && dot(b, a, c) < 0.0
                    && !blocked(&ring, at)
                {
                    clipped = Some(at);
                    break;
                }
            }
        }
        match clipped {
            Some(at) => {
                let ia = ring[(at + m - 1) % m];
                let ib = ring[at];
                let ic = ring[(at + 1) % m];
                triangles.push([ia, ib, ic]);
                ring.remove(at);
            }
            None => {
                return Err(Error::TriangulationFailed {
                    reason: "no clippable ear found".to_string(),
                })
            }
        }
    }
    triangles.push([ring[0], ring[1], ring[2]]);

    let neighbors = build_neighbors(&triangles)?;
    verify_dual_tree(&triangles, &neighbors)?;
    Ok(Triangulation {
        triangles,
        neighbors,
    })
}

fn build_neighbors(triangles: &[[usize; 3]]) -> Result<Vec<[Option<usize>; 3]>, Error> {
    use std::collections::HashMap;
    let mut by_edge: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for (t, tri) in triangles.iter().enumerate() {
        for e in 0..3 {
            let u = tri[e];
            let v = tri[(e + 1) % 3];
            let key = (u.min(v), u.max(v));
            by_edge.entry(key).or_default().push((t, e));
        }
    }
    let mut neighbors = vec![[None; 3]; triangles.len()];
    for (key, owners) in by_edge {
        match owners.len() {
            1 => {}
            2 => {
                let (t0, e0) = owners[0];
                let (t1, e1) = owners[1];
                neighbors[t0][e0] = Some(t1);
                neighbors[t1][e1] = Some(t0);
            }
            _ => {
                return Err(Error::TriangulationFailed {
                    reason: format!("edge {key:?} shared by {} triangles", owners.len()),
                })
            }
        }
    }
    Ok(neighbors)
}

fn verify_dual_tree(
    triangles: &[[usize; 3]],
    neighbors: &[[Option<usize>; 3]],
) -> Result<(), Error> {
    let n = triangles.len();
    let shared: usize = neighbors
        .iter()
        .map(|ns| ns.iter().flatten().count())
        .sum::<usize>()
        / 2;
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut visited = 1;
    while let Some(t) = stack.pop() {
        for nb in neighbors[t].iter().flatten() {
            if !seen[*nb] {
                seen[*nb] = true;
                visited += 1;
                stack.push(*nb);
            }
        }
    }
    if shared != n - 1 || visited != n {
        return Err(Error::TriangulationFailed {
            reason: format!("dual graph is not a tree ({shared} diagonals, {visited}/{n} reached)"),
        });
    }
    Ok(())
}

/// Built-in domain shapes used by the verification suite and the tests.
pub mod fixtures {
    use super::ModelPoint;
    use rand::Rng;

    fn pts(coords: &[(f64, f64)]) -> Vec<ModelPoint> {
        coords.iter().map(|&(x, y)| ModelPoint::new(x, y)).collect()
    }

    /// Axis-aligned unit square.
    pub fn unit_square() -> Vec<ModelPoint> {
        pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    /// The 2x2 L-shape with a reflex corner at (1, 1).
    pub fn lshape() -> Vec<ModelPoint> {
        pts(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ])
    }

    /// Unit square with a thin triangular notch cut from the top edge down to
    /// the tip (0.5, 0.4). `aperture` is the wedge angle at the tip in
    /// radians; the tip is the only reflex vertex.
    pub fn slit_square(aperture: f64) -> Vec<ModelPoint> {
        let half_width = 0.6 * (aperture / 2.0).tan();
        pts(&[
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.5 + half_width, 1.0),
            (0.5, 0.4),
            (0.5 - half_width, 1.0),
            (0.0, 1.0),
        ])
    }

    /// Recenter on the bounding-box midpoint and scale so the farthest vertex
    /// sits at `radius` from the origin; makes any fixture valid Klein input.
    pub fn fit_to_disk(vertices: &[ModelPoint], radius: f64) -> Vec<ModelPoint> {
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in vertices {
            min_x = min_x.min(v.x);
            max_x = max_x.max(v.x);
            min_y = min_y.min(v.y);
            max_y = max_y.max(v.y);
        }
        let cx = (min_x + max_x) / 2.0;
        let cy = (min_y + max_y) / 2.0;
        let mut far: f64 = 0.0;
        for v in vertices {
            far = far.max(((v.x - cx).powi(2) + (v.y - cy).powi(2)).sqrt());
        }
        vertices
            .iter()
            .map(|v| ModelPoint::new((v.x - cx) / far * radius, (v.y - cy) / far * radius))
            .collect()
    }

    /// Random convex polygon: jittered sorted angles on a common circle.
    pub fn convex_polygon<R: Rng>(n: usize, rng: &mut R) -> Vec<ModelPoint> {
        let radius = rng.gen_range(0.3..0.8);
        jittered_ring(n, rng)
            .into_iter()
            .map(|theta| ModelPoint::new(radius * theta.cos(), radius * theta.sin()))
            .collect()
    }

    /// Random simple (star-shaped) polygon with jittered radii, so reflex
    /// vertices appear routinely. All vertices stay inside the unit disk.
    pub fn star_polygon<R: Rng>(n: usize, rng: &mut R) -> Vec<ModelPoint> {
        jittered_ring(n, rng)
            .into_iter()
            .map(|theta| {
                let r = rng.gen_range(0.225..0.765);
                ModelPoint::new(r * theta.cos(), r * theta.sin())
            })
            .collect()
    }

    fn jittered_ring<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
        let step = std::f64::consts::TAU / n as f64;
        (0..n)
            .map(|i| (i as f64 + rng.gen_range(-0.3..0.3)) * step)
            .collect()
    }
}
