//! Acceptance gate: one test per criterion, each printing a pass/fail line
//! with its measured extremes and elapsed time. Tolerances are pinned here,
//! not configurable.

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use catk::domain::{fixtures, PolygonDomain};
use catk::geodesic::{intrinsic_distance, shortest_path, visibility_oracle_path};
use catk::model::{build_comparison_triangle, distance, Curvature, ModelPoint};
use catk::verify::{
    alexandrov_angle_estimate, build_triangle, cat_check, default_scales, geometric_scales,
    hull_containment_check, limit_outer_angle_estimate, sample_interior_point, GeodesicTriangle,
};

fn pt(x: f64, y: f64) -> ModelPoint {
    ModelPoint::new(x, y)
}

fn kappa(k: f64) -> Curvature {
    Curvature::new(k).unwrap()
}

const LSHAPE_LEN: f64 = 1.8027756377319946;

/// Scales for the angle estimators: 12 geometric steps ending at 1e-5.
fn fine_scales() -> Vec<f64> {
    geometric_scales(1e-5 * f64::powi(2.0, 11), 12)
}

fn star_domain(rng: &mut ChaCha8Rng, n: usize, k: Curvature) -> PolygonDomain {
    let verts = fixtures::star_polygon(n, rng);
    PolygonDomain::validate(&verts, k).expect("star polygons are simple by construction")
}

fn domain_diameter(domain: &PolygonDomain) -> f64 {
    let v0 = domain.vertices()[0];
    domain
        .vertices()
        .iter()
        .map(|v| v.coord_dist(v0))
        .fold(0.0f64, f64::max)
        .max(1e-6)
}

/// A triangle of interior points whose sides form a simple closed curve.
/// When `hug_reflex` is set, the first vertex is planted right next to a
/// reflex vertex when possible, so its sides tend to bend within the
/// default scale ladder.
fn sample_simple_triangle(
    domain: &PolygonDomain,
    rng: &mut ChaCha8Rng,
    spacing: f64,
    clearance: f64,
    hug_reflex: bool,
) -> Option<[ModelPoint; 3]> {
    let diam = domain_diameter(domain);
    let reflex = domain.reflex_vertices();
    for attempt in 0..25 {
        let mut chosen: Vec<ModelPoint> = Vec::with_capacity(3);
        if hug_reflex && !reflex.is_empty() && attempt % 2 == 0 {
            let w = domain.vertices()[reflex[rng.gen_range(0..reflex.len())]];
            for _ in 0..40 {
                let r = rng.gen_range(0.008..0.03) * diam;
                let theta = rng.gen_range(0.0..std::f64::consts::TAU);
                let p = pt(w.x + r * theta.cos(), w.y + r * theta.sin());
                if domain.contains(p) == catk::Location::Interior {
                    chosen.push(p);
                    break;
                }
            }
        }
        while chosen.len() < 3 {
            match sample_interior_point(domain, rng, &chosen, spacing * diam, clearance * diam) {
                Some(p) => chosen.push(p),
                None => return None,
            }
        }
        let tri = [chosen[0], chosen[1], chosen[2]];
        if let Ok(t) = build_triangle(domain, tri[0], tri[1], tri[2]) {
            if t.is_simple() {
                return Some(tri);
            }
        }
    }
    None
}

/// The shared corpus for criteria 3, 5 and 7: >= 200 (domain, triangle)
/// instances over kappa in {0, -0.5, -1}.
fn cat_corpus() -> Vec<(PolygonDomain, [ModelPoint; 3])> {
    let mut rng = ChaCha8Rng::seed_from_u64(1203);
    let mut out = Vec::new();
    for k in [0.0, -0.5, -1.0] {
        let k = kappa(k);
        for _ in 0..24 {
            let n = rng.gen_range(5..=12);
            let domain = star_domain(&mut rng, n, k);
            for _ in 0..3 {
                // Loose vertex clearance on purpose: triangles whose sides
                // bend within the scale ladder give criterion 5 genuinely
                // decreasing sequences, not just saturated constants.
                if let Some(tri) = sample_simple_triangle(&domain, &mut rng, 0.15, 0.0, true) {
                    out.push((domain.clone(), tri));
                }
            }
        }
    }
    // Deterministic wrap instances: a vertex planted beside the slit tip
    // with one side crossing the slit, so the default scale ladder straddles
    // the bend at every curvature.
    let slit_fit = fixtures::fit_to_disk(&fixtures::slit_square(1e-3), 0.8);
    let fitmap = |p: ModelPoint| -> ModelPoint {
        let s = 0.8 / (0.5 * std::f64::consts::SQRT_2);
        pt((p.x - 0.5) * s, (p.y - 0.5) * s)
    };
    for k in [0.0, -0.5, -1.0] {
        let domain = PolygonDomain::validate(&slit_fit, kappa(k)).unwrap();
        out.push((
            domain.clone(),
            [
                fitmap(pt(0.48, 0.42)),
                fitmap(pt(0.7, 0.5)),
                fitmap(pt(0.3, 0.15)),
            ],
        ));
        out.push((
            domain,
            [
                fitmap(pt(0.52, 0.42)),
                fitmap(pt(0.3, 0.5)),
                fitmap(pt(0.7, 0.15)),
            ],
        ));
    }
    out
}

/// The corpus for criteria 4, 5 and 6: the slit-square fixture plus 20
/// random instances, with the measured vertex kept clear of bends so the
/// scale ladder ending at 1e-5 stays valid.
fn angle_corpus() -> Vec<(PolygonDomain, [ModelPoint; 3])> {
    let mut out = Vec::new();
    let slit = PolygonDomain::validate(&fixtures::slit_square(1e-3), Curvature::FLAT).unwrap();
    out.push((slit, [pt(0.45, 0.5), pt(0.7, 0.7), pt(0.5, 0.15)]));
    let mut rng = ChaCha8Rng::seed_from_u64(7311);
    for k in [0.0, -1.0] {
        let k = kappa(k);
        let mut found = 0;
        while found < 10 {
            let n = rng.gen_range(5..=12);
            let domain = star_domain(&mut rng, n, k);
            if let Some(tri) = sample_simple_triangle(&domain, &mut rng, 0.2, 0.08, false) {
                out.push((domain, tri));
                found += 1;
            }
        }
    }
    out
}

/// The corpus for criteria 2 and 9: 50 random simple polygons with 10
/// interior pairs each, for kappa in {0, -1}.
fn path_corpus() -> Vec<(PolygonDomain, Vec<(ModelPoint, ModelPoint)>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    let mut out = Vec::new();
    for k in [0.0, -1.0] {
        let k = kappa(k);
        for _ in 0..25 {
            let n = rng.gen_range(5..=12);
            let domain = star_domain(&mut rng, n, k);
            let mut pairs = Vec::with_capacity(10);
            while pairs.len() < 10 {
                let a = sample_interior_point(&domain, &mut rng, &[], 0.0, 0.01);
                let b = sample_interior_point(&domain, &mut rng, &[], 0.0, 0.01);
                if let (Some(a), Some(b)) = (a, b) {
                    if a.coord_dist(b) > 1e-3 {
                        pairs.push((a, b));
                    }
                }
            }
            out.push((domain, pairs));
        }
    }
    out
}

fn build<'a>(domain: &'a PolygonDomain, tri: &[ModelPoint; 3]) -> GeodesicTriangle<'a> {
    build_triangle(domain, tri[0], tri[1], tri[2]).unwrap()
}

#[test]
fn criterion_1_convex_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut worst_flat: f64 = 0.0;
    let mut worst_hyp: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.gen_range(5..=12);
        let verts = fixtures::convex_polygon(n, &mut rng);
        for k_val in [0.0, -1.0] {
            let k = kappa(k_val);
            let domain = PolygonDomain::validate(&verts, k).unwrap();
            let mut done = 0;
            while done < 10 {
                let a = sample_interior_point(&domain, &mut rng, &[], 0.0, 0.005);
                let b = sample_interior_point(&domain, &mut rng, &[], 0.0, 0.005);
                let (Some(a), Some(b)) = (a, b) else { continue };
                let dbar = intrinsic_distance(&domain, a, b).unwrap();
                let d = distance(a, b, k).unwrap();
                let gap = (dbar - d).abs();
                if k.is_flat() {
                    worst_flat = worst_flat.max(gap);
                } else {
                    worst_hyp = worst_hyp.max(gap);
                }
                done += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_flat <= 1e-12 && worst_hyp <= 1e-9 && elapsed < 5.0;
    println!(
        "criterion 1 (convex identity): {} | flat {:.3e} <= 1e-12, hyperbolic {:.3e} <= 1e-9, {:.2}s < 5s",
        if pass { "PASS" } else { "FAIL" },
        worst_flat,
        worst_hyp,
        elapsed
    );
    assert!(worst_flat <= 1e-12, "flat gap {worst_flat}");
    assert!(worst_hyp <= 1e-9, "hyperbolic gap {worst_hyp}");
    assert!(elapsed < 5.0, "took {elapsed}s");
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (domain, pairs) in path_corpus() {
        for (a, b) in pairs {
            let funnel = shortest_path(&domain, a, b).unwrap();
            let oracle = visibility_oracle_path(&domain, a, b).unwrap();
            worst = worst.max((funnel.length() - oracle.length()).abs());
        }
    }
    let lshape = PolygonDomain::validate(&fixtures::lshape(), Curvature::FLAT).unwrap();
    let funnel_len = intrinsic_distance(&lshape, pt(0.5, 1.75), pt(1.75, 0.5)).unwrap();
    let oracle_len = visibility_oracle_path(&lshape, pt(0.5, 1.75), pt(1.75, 0.5))
        .unwrap()
        .length();
    let fixture_gap = (funnel_len - LSHAPE_LEN)
        .abs()
        .max((oracle_len - LSHAPE_LEN).abs());
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst <= 1e-9 && fixture_gap <= 1e-9 && elapsed < 10.0;
    println!(
        "criterion 2 (oracle equivalence): {} | corpus {:.3e} <= 1e-9, lshape {:.3e} <= 1e-9, {:.2}s < 10s",
        if pass { "PASS" } else { "FAIL" },
        worst,
        fixture_gap,
        elapsed
    );
    assert!(worst <= 1e-9, "funnel vs oracle gap {worst}");
    assert!(fixture_gap <= 1e-9, "lshape length gap {fixture_gap}");
    assert!(elapsed < 10.0, "took {elapsed}s");
}

#[test]
fn criterion_3_cat_inequality() {
    let start = Instant::now();
    let corpus = cat_corpus();
    assert!(corpus.len() >= 200, "only {} instances", corpus.len());
    let mut worst = f64::NEG_INFINITY;
    for (domain, tri) in &corpus {
        let t = build(domain, tri);
        let report = cat_check(&t, domain.kappa(), 64, 1e-9).unwrap();
        worst = worst.max(report.max_violation);
        assert!(
            report.pass,
            "violation {} in {:?}",
            report.max_violation, tri
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst <= 1e-9 && elapsed < 30.0;
    println!(
        "criterion 3 (comparison inequality): {} | {} instances, max violation {:.3e} <= 1e-9, {:.2}s < 30s",
        if pass { "PASS" } else { "FAIL" },
        corpus.len(),
        worst,
        elapsed
    );
    assert!(worst <= 1e-9);
    assert!(elapsed < 30.0, "took {elapsed}s");
}

#[test]
fn criterion_4_angle_equality() {
    let start = Instant::now();
    let corpus = angle_corpus();
    assert_eq!(corpus.len(), 21);
    let scales = fine_scales();
    let mut worst: f64 = 0.0;
    for (domain, tri) in &corpus {
        let t = build(domain, tri);
        let outer = limit_outer_angle_estimate(&t, 0, &scales).unwrap();
        let alex = alexandrov_angle_estimate(&t, 0, &scales, 8, Curvature::FLAT).unwrap();
        worst = worst.max((outer.extrapolated - alex.extrapolated).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst <= 1e-3 && elapsed < 10.0;
    println!(
        "criterion 4 (limit outer = Alexandrov): {} | max gap {:.3e} <= 1e-3, {:.2}s < 10s",
        if pass { "PASS" } else { "FAIL" },
        worst,
        elapsed
    );
    assert!(worst <= 1e-3, "angle gap {worst}");
    assert!(elapsed < 10.0, "took {elapsed}s");
}

#[test]
fn criterion_5_outer_angle_monotonicity() {
    let start = Instant::now();
    let mut sequences = 0usize;
    let mut worst_increase = f64::NEG_INFINITY;
    for (domain, tri) in cat_corpus() {
        let t = build(&domain, &tri);
        for v in 0..3 {
            let scales = default_scales(&t, v, 12);
            let est = limit_outer_angle_estimate(&t, v, &scales).unwrap();
            let inc = est
                .values
                .windows(2)
                .map(|w| w[1] - w[0])
                .fold(f64::NEG_INFINITY, f64::max);
            worst_increase = worst_increase.max(inc);
            assert!(est.monotone, "non-monotone sequence {:?}", est.values);
            sequences += 1;
        }
    }
    let scales = fine_scales();
    for (domain, tri) in angle_corpus() {
        let t = build(&domain, &tri);
        for v in 0..3 {
            let est = limit_outer_angle_estimate(&t, v, &scales).unwrap();
            let inc = est
                .values
                .windows(2)
                .map(|w| w[1] - w[0])
                .fold(f64::NEG_INFINITY, f64::max);
            worst_increase = worst_increase.max(inc);
            assert!(est.monotone, "non-monotone sequence {:?}", est.values);
            sequences += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 5 (outer-angle monotonicity): PASS | {} sequences, worst increase {:.3e} <= 1e-12, {:.2}s",
        sequences, worst_increase, elapsed
    );
    assert!(worst_increase <= 1e-12);
}

#[test]
fn criterion_6_comparison_curvature_independence() {
    let start = Instant::now();
    let scales = fine_scales();
    let mut worst: f64 = 0.0;
    for (domain, tri) in angle_corpus() {
        let t = build(&domain, &tri);
        let flat = alexandrov_angle_estimate(&t, 0, &scales, 8, Curvature::FLAT).unwrap();
        let hyp = alexandrov_angle_estimate(&t, 0, &scales, 8, kappa(-1.0)).unwrap();
        worst = worst.max((flat.extrapolated - hyp.extrapolated).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 6 (comparison-curvature independence): {} | max gap {:.3e} <= 1e-4, {:.2}s",
        if worst <= 1e-4 { "PASS" } else { "FAIL" },
        worst,
        elapsed
    );
    assert!(worst <= 1e-4, "kappa dependence {worst}");
}

#[test]
fn criterion_7_hull_containment() {
    let start = Instant::now();
    let corpus = cat_corpus();
    let mut worst: f64 = 0.0;
    for (domain, tri) in &corpus {
        let t = build(domain, tri);
        let report = hull_containment_check(&t, 128, 1e-9).unwrap();
        worst = worst.max(report.max_violation);
        assert!(report.pass, "hull violation {}", report.max_violation);
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 7 (hull containment): PASS | {} instances, max excess {:.3e} <= 1e-9, {:.2}s",
        corpus.len(),
        worst,
        elapsed
    );
    assert!(worst <= 1e-9);
}

#[test]
fn criterion_8_comparison_triangle_reconstruction() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8888);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a: f64 = rng.gen_range(0.1..3.0);
        let b: f64 = rng.gen_range(0.1..3.0);
        let lo: f64 = (a - b).abs();
        let c = lo + rng.gen_range(0.01..0.99) * (a + b - lo);
        let k = match rng.gen_range(0..3) {
            0 => Curvature::FLAT,
            1 => kappa(-0.5),
            _ => kappa(rng.gen_range(-2.0..-0.05)),
        };
        let tri = build_comparison_triangle(a, b, c, k).unwrap();
        worst = worst.max(tri.reconstruction_error(k));
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 8 (comparison reconstruction): {} | 1000 draws, max error {:.3e} <= 1e-10, {:.2}s",
        if worst <= 1e-10 { "PASS" } else { "FAIL" },
        worst,
        elapsed
    );
    assert!(worst <= 1e-10, "reconstruction error {worst}");
}

#[test]
fn criterion_9_uniqueness_under_reversal() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (domain, pairs) in path_corpus() {
        for (a, b) in pairs {
            let fwd = shortest_path(&domain, a, b).unwrap();
            let bwd = shortest_path(&domain, b, a).unwrap();
            assert_eq!(
                fwd.waypoints().len(),
                bwd.waypoints().len(),
                "waypoint counts differ for {a:?} -> {b:?}"
            );
            for (u, v) in fwd.waypoints().iter().zip(bwd.waypoints().iter().rev()) {
                worst = worst.max(u.coord_dist(*v));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 9 (unique geodesics): PASS | max waypoint gap {:.3e} <= 1e-9, {:.2}s",
        worst, elapsed
    );
    assert!(worst <= 1e-9);
}

#[test]
fn criterion_10_zero_angle_instance() {
    let start = Instant::now();
    let domain = PolygonDomain::validate(&fixtures::slit_square(1e-3), Curvature::FLAT).unwrap();
    let tri = build(&domain, &[pt(0.3, 0.8), pt(0.7, 0.85), pt(0.65, 0.55)]);
    let scales = fine_scales();
    let outer = limit_outer_angle_estimate(&tri, 0, &scales).unwrap();
    let alex = alexandrov_angle_estimate(&tri, 0, &scales, 8, Curvature::FLAT).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let pass = outer.extrapolated <= 1e-3 && alex.extrapolated <= 1e-3;
    println!(
        "criterion 10 (zero angle at needle slit): {} | limit outer {:.3e}, Alexandrov {:.3e} <= 1e-3, {:.2}s",
        if pass { "PASS" } else { "FAIL" },
        outer.extrapolated,
        alex.extrapolated,
        elapsed
    );
    assert!(outer.extrapolated <= 1e-3, "outer {}", outer.extrapolated);
    assert!(alex.extrapolated <= 1e-3, "alexandrov {}", alex.extrapolated);
}
