//! The induced path metric and its geodesics inside a polygon domain.
//!
//! The primary query runs the funnel (string pulling) algorithm over the
//! sleeve of triangles between the two endpoints. A Dijkstra search over the
//! visibility graph of reflex vertices provides an independent oracle with
//! the same contract; the two algorithms cross-validate each other.
//!
//! Both are valid for every kappa <= 0 because Klein geodesics are straight
//! chords in model coordinates: shortest paths are polylines bending only at
//! reflex vertices, and whether a polyline is taut at a bend is a projective
//! condition that the Klein metric distortion cannot flip.

use crate::domain::{point_segment_distance, Location, PolygonDomain};
use crate::error::Error;
use crate::model::{
    distance_unchecked, geodesic_interpolate, orient, Curvature, ModelPoint, TOL_COLLINEAR,
};

/// A geodesic of the induced path metric: a polyline bending only at reflex
/// vertices, with its metric length and an arclength parameterization.
#[derive(Debug, Clone, PartialEq)]
pub struct IntrinsicPath {
    kappa: Curvature,
    waypoints: Vec<ModelPoint>,
    cumulative: Vec<f64>,
}

impl IntrinsicPath {
    pub(crate) fn from_waypoints(kappa: Curvature, waypoints: Vec<ModelPoint>) -> Self {
        debug_assert!(!waypoints.is_empty());
        let mut cumulative = Vec::with_capacity(waypoints.len());
        let mut acc = 0.0;
        cumulative.push(0.0);
        for w in waypoints.windows(2) {
            acc += distance_unchecked(w[0], w[1], kappa);
            cumulative.push(acc);
        }
        IntrinsicPath {
            kappa,
            waypoints,
            cumulative,
        }
    }

    pub fn kappa(&self) -> Curvature {
        self.kappa
    }

    pub fn waypoints(&self) -> &[ModelPoint] {
        &self.waypoints
    }

    /// Arclength at each waypoint (cumulative[0] = 0).
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// Total metric length.
    pub fn length(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }

    pub fn start(&self) -> ModelPoint {
        self.waypoints[0]
    }

    pub fn end(&self) -> ModelPoint {
        *self.waypoints.last().unwrap()
    }

    /// Point at arclength `s` from the start. Arguments within the curvature
    /// tolerance of the ends are clamped; beyond that the call errors.
    pub fn evaluate(&self, s: f64) -> Result<ModelPoint, Error> {
        let len = self.length();
        let tol = self.kappa.tolerance();
        if !s.is_finite() || s < -tol || s > len + tol {
            return Err(Error::ArclengthOutOfRange { s, length: len });
        }
        let s = s.clamp(0.0, len);
        if s == 0.0 || len == 0.0 {
            return Ok(self.waypoints[0]);
        }
        if s == len {
            return Ok(*self.waypoints.last().unwrap());
        }
        // Last cumulative mark <= s.
        let idx = match self
            .cumulative
            .binary_search_by(|v| v.partial_cmp(&s).unwrap())
        {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let idx = idx.min(self.waypoints.len() - 2);
        let seg_len = self.cumulative[idx + 1] - self.cumulative[idx];
        if seg_len == 0.0 {
            return Ok(self.waypoints[idx]);
        }
        let t = (s - self.cumulative[idx]) / seg_len;
        geodesic_interpolate(self.waypoints[idx], self.waypoints[idx + 1], t, self.kappa)
    }

    /// The same geodesic traversed end to start.
    pub fn reversed(&self) -> Self {
        let mut waypoints = self.waypoints.clone();
        waypoints.reverse();
        IntrinsicPath::from_waypoints(self.kappa, waypoints)
    }
}

/// Shortest path of the induced path metric from `p` to `q`.
pub fn shortest_path(
    domain: &PolygonDomain,
    p: ModelPoint,
    q: ModelPoint,
) -> Result<IntrinsicPath, Error> {
    let (p, q) = admit_endpoints(domain, p, q)?;
    let kappa = domain.kappa();
    if p == q {
        return Ok(IntrinsicPath::from_waypoints(kappa, vec![p]));
    }
    let tri_p = domain.locate_triangle(p).ok_or(Error::PointOutsideDomain {
        x: p.x,
        y: p.y,
    })?;
    let tri_q = domain.locate_triangle(q).ok_or(Error::PointOutsideDomain {
        x: q.x,
        y: q.y,
    })?;
    let waypoints = if tri_p == tri_q {
        vec![p, q]
    } else {
        let sleeve = sleeve_path(domain, tri_p, tri_q)?;
        let portals = collect_portals(domain, &sleeve);
        string_pull(p, &portals, q)?
    };
    Ok(IntrinsicPath::from_waypoints(
        kappa,
        canonicalize(waypoints),
    ))
}

/// Length of the shortest path; the induced path metric itself.
pub fn intrinsic_distance(
    domain: &PolygonDomain,
    p: ModelPoint,
    q: ModelPoint,
) -> Result<f64, Error> {
    Ok(shortest_path(domain, p, q)?.length())
}

/// Independent oracle: Dijkstra over the graph of mutually visible points
/// among {p, q} and the reflex vertices, with metric edge weights. Exists for
/// cross-validation; same contract as `shortest_path`.
pub fn visibility_oracle_path(
    domain: &PolygonDomain,
    p: ModelPoint,
    q: ModelPoint,
) -> Result<IntrinsicPath, Error> {
    let (p, q) = admit_endpoints(domain, p, q)?;
    let kappa = domain.kappa();
    if p == q {
        return Ok(IntrinsicPath::from_waypoints(kappa, vec![p]));
    }

    let mut nodes = vec![p, q];
    for i in domain.reflex_vertices() {
        let v = domain.vertices()[i];
        if nodes.iter().all(|n| n.coord_dist(v) > TOL_COLLINEAR) {
            nodes.push(v);
        }
    }
    let n = nodes.len();
    let mut weights = vec![vec![f64::INFINITY; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if visible(domain, nodes[i], nodes[j]) {
                let w = distance_unchecked(nodes[i], nodes[j], kappa);
                weights[i][j] = w;
                weights[j][i] = w;
            }
        }
    }

    // Dense Dijkstra; the node set is tiny.
    let mut dist = vec![f64::INFINITY; n];
    let mut prev = vec![usize::MAX; n];
    let mut done = vec![false; n];
    dist[0] = 0.0;
    for _ in 0..n {
        let mut u = usize::MAX;
        let mut best = f64::INFINITY;
        for i in 0..n {
            if !done[i] && dist[i] < best {
                best = dist[i];
                u = i;
            }
        }
        if u == usize::MAX {
            break;
        }
        done[u] = true;
        if u == 1 {
            break;
        }
        for v in 0..n {
            if !done[v] && weights[u][v].is_finite() {
                let cand = dist[u] + weights[u][v];
                if cand < dist[v] {
                    dist[v] = cand;
                    prev[v] = u;
                }
            }
        }
    }
    if !dist[1].is_finite() {
        return Err(Error::TriangulationFailed {
            reason: "visibility graph is disconnected".to_string(),
        });
    }
    let mut waypoints = vec![nodes[1]];
    let mut cur = 1;
    while cur != 0 {
        cur = prev[cur];
        waypoints.push(nodes[cur]);
    }
    waypoints.reverse();
    Ok(IntrinsicPath::from_waypoints(
        kappa,
        canonicalize(waypoints),
    ))
}

/// Classify both endpoints, snapping near-boundary points onto the boundary.
fn admit_endpoints(
    domain: &PolygonDomain,
    p: ModelPoint,
    q: ModelPoint,
) -> Result<(ModelPoint, ModelPoint), Error> {
    let admit = |x: ModelPoint| -> Result<ModelPoint, Error> {
        match domain.contains(x) {
            Location::Exterior => Err(Error::PointOutsideDomain { x: x.x, y: x.y }),
            Location::Boundary => Ok(domain.snap_to_boundary(x)),
            Location::Interior => Ok(x),
        }
    };
    Ok((admit(p)?, admit(q)?))
}

/// BFS through the triangulation dual (a tree) from `from` to `to`.
fn sleeve_path(domain: &PolygonDomain, from: usize, to: usize) -> Result<Vec<usize>, Error> {
    let tri = domain.triangulation();
    let n = tri.triangles.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[from] = true;
    queue.push_back(from);
    while let Some(t) = queue.pop_front() {
        if t == to {
            break;
        }
        for nb in tri.neighbors[t].iter().flatten() {
            if !seen[*nb] {
                seen[*nb] = true;
                prev[*nb] = t;
                queue.push_back(*nb);
            }
        }
    }
    if !seen[to] {
        return Err(Error::TriangulationFailed {
            reason: "triangulation dual is disconnected".to_string(),
        });
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}

/// Portals along the sleeve, oriented (left, right) for a traveler crossing
/// from each triangle into the next. Crossing the directed edge u -> v of a
/// CCW triangle puts v on the traveler's left.
fn collect_portals(domain: &PolygonDomain, sleeve: &[usize]) -> Vec<(ModelPoint, ModelPoint)> {
    let tri = domain.triangulation();
    let verts = domain.vertices();
    let mut portals = Vec::with_capacity(sleeve.len().saturating_sub(1));
    for w in sleeve.windows(2) {
        let (cur, next) = (w[0], w[1]);
        for e in 0..3 {
            if tri.neighbors[cur][e] == Some(next) {
                let u = tri.triangles[cur][e];
                let v = tri.triangles[cur][(e + 1) % 3];
                portals.push((verts[v], verts[u]));
                break;
            }
        }
    }
    portals
}

/// Funnel (string pulling) over an ordered portal corridor. Ties on the
/// funnel boundaries resolve toward emitting the portal vertex as a
/// waypoint; collinear waypoints are collapsed afterwards.
fn string_pull(
    start: ModelPoint,
    portals: &[(ModelPoint, ModelPoint)],
    goal: ModelPoint,
) -> Result<Vec<ModelPoint>, Error> {
    let n = portals.len();
    let mut pts = vec![start];
    let mut apex = start;
    let mut left = start;
    let mut right = start;
    let (mut left_i, mut right_i) = (0usize, 0usize);
    let mut apex_i: usize;

    // Generous bound: each restart advances the apex to a strictly later
    // portal vertex, so a quadratic budget can only trip on corrupt input.
    let mut budget = (n + 2) * (n + 2) * 4 + 64;

    let mut i = 1;
    while i <= n + 1 {
        budget -= 1;
        if budget == 0 {
            return Err(Error::TriangulationFailed {
                reason: "funnel failed to converge".to_string(),
            });
        }
        let (pl, pr) = if i <= n { portals[i - 1] } else { (goal, goal) };

        // Tighten the right boundary. Consecutive portals share an endpoint,
        // so an unchanged point is a no-op, not a tie to resolve.
        if pr != right && orient(apex, right, pr) >= 0.0 {
            let valid = apex == right || apex == left || {
                let o = orient(apex, left, pr);
                o < 0.0 || (o == 0.0 && ray_param(apex, left, pr) < 1.0)
            };
            if valid {
                right = pr;
                right_i = i;
            } else {
                // Right swept over left: the left point becomes a corner.
                pts.push(left);
                apex = left;
                apex_i = left_i;
                left = apex;
                right = apex;
                right_i = apex_i;
                i = apex_i + 1;
                continue;
            }
        }

        // Tighten the left boundary.
        if pl != left && orient(apex, left, pl) <= 0.0 {
            let valid = apex == left || apex == right || {
                let o = orient(apex, right, pl);
                o > 0.0 || (o == 0.0 && ray_param(apex, right, pl) < 1.0)
            };
            if valid {
                left = pl;
                left_i = i;
            } else {
                pts.push(right);
                apex = right;
                apex_i = right_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                i = apex_i + 1;
                continue;
            }
        }

        i += 1;
    }
    pts.push(goal);
    Ok(pts)
}

/// Parameter of `p` projected onto the ray `a -> b` (1 at `b`). Used to tell
/// a genuine funnel crossing (at or past the boundary point) from a portal
/// point that is merely collinear with the boundary ray.
fn ray_param(a: ModelPoint, b: ModelPoint, p: ModelPoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)
}

/// Drop consecutive duplicates and waypoints lying on the segment between
/// their neighbors (collinearity tolerance in model coordinates). Keeps
/// waypoint lists canonical so forward and reverse queries compare equal.
fn canonicalize(waypoints: Vec<ModelPoint>) -> Vec<ModelPoint> {
    let mut out: Vec<ModelPoint> = Vec::with_capacity(waypoints.len());
    for w in waypoints {
        if out.last().map_or(false, |l| l.coord_dist(w) <= TOL_COLLINEAR) {
            continue;
        }
        out.push(w);
    }
    let mut changed = true;
    while changed && out.len() > 2 {
        changed = false;
        let mut i = 1;
        while i + 1 < out.len() {
            let (a, w, b) = (out[i - 1], out[i], out[i + 1]);
            if point_segment_distance(w, a, b) <= TOL_COLLINEAR {
                out.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
    }
    out
}

/// Whether the closed segment uv stays inside the closed domain. Collects
/// every parameter where uv meets the boundary and classifies the midpoint of
/// each gap; for a simple polygon this is exact up to the location tolerance.
fn visible(domain: &PolygonDomain, u: ModelPoint, v: ModelPoint) -> bool {
    if u.coord_dist(v) <= TOL_COLLINEAR {
        return true;
    }
    let verts = domain.vertices();
    let n = verts.len();
    let mut ts = vec![0.0, 1.0];
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        segment_hits(u, v, a, b, &mut ts);
    }
    ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    for w in ts.windows(2) {
        let mid = ModelPoint::new(
            u.x + (v.x - u.x) * (w[0] + w[1]) / 2.0,
            u.y + (v.y - u.y) * (w[0] + w[1]) / 2.0,
        );
        if domain.contains(mid) == Location::Exterior {
            return false;
        }
    }
    true
}

/// Parameters t along uv where the segment meets segment ab (0, 1 or, for
/// collinear overlap, 2 values), pushed into `ts`.
fn segment_hits(u: ModelPoint, v: ModelPoint, a: ModelPoint, b: ModelPoint, ts: &mut Vec<f64>) {
    let r = (v.x - u.x, v.y - u.y);
    let s = (b.x - a.x, b.y - a.y);
    let denom = r.0 * s.1 - r.1 * s.0;
    let qp = (a.x - u.x, a.y - u.y);
    let qp_cross_r = qp.0 * r.1 - qp.1 * r.0;
    let r_len = (r.0 * r.0 + r.1 * r.1).sqrt();
    let s_len = (s.0 * s.0 + s.1 * s.1).sqrt();
    let eps = TOL_COLLINEAR;
    if denom.abs() > eps * r_len * s_len {
        let t = (qp.0 * s.1 - qp.1 * s.0) / denom;
        let w = qp_cross_r / denom;
        if (-eps..=1.0 + eps).contains(&t) && (-eps..=1.0 + eps).contains(&w) {
            ts.push(t.clamp(0.0, 1.0));
        }
    } else if qp_cross_r.abs() <= eps * r_len.max(s_len) {
        // Collinear: project the overlap interval onto uv.
        let rr = r.0 * r.0 + r.1 * r.1;
        let ta = (qp.0 * r.0 + qp.1 * r.1) / rr;
        let tb = ((b.x - u.x) * r.0 + (b.y - u.y) * r.1) / rr;
        let (lo, hi) = (ta.min(tb), ta.max(tb));
        if hi >= -eps && lo <= 1.0 + eps {
            ts.push(lo.clamp(0.0, 1.0));
            ts.push(hi.clamp(0.0, 1.0));
        }
    }
}
