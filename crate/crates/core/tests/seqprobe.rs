#[test]
fn count_decreasing_sequences() {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use catk::domain::{fixtures, PolygonDomain};
    use catk::model::{Curvature, ModelPoint};
    use catk::verify::{build_triangle, default_scales, limit_outer_angle_estimate, sample_interior_point};

    let mut rng = ChaCha8Rng::seed_from_u64(1203);
    let mut total = 0;
    let mut decreasing = 0;
    for k in [0.0f64, -0.5, -1.0] {
        let k = Curvature::new(k).unwrap();
        for _ in 0..24 {
            let n = rng.gen_range(5..=12);
            let verts = fixtures::star_polygon(n, &mut rng);
            let domain = PolygonDomain::validate(&verts, k).unwrap();
            let v0 = domain.vertices()[0];
            let diam = domain.vertices().iter().map(|v| v.coord_dist(v0)).fold(0.0f64, f64::max).max(1e-6);
            for _ in 0..3 {
                let reflex = domain.reflex_vertices();
                let mut tri_found = None;
                for attempt in 0..25 {
                    let mut chosen: Vec<ModelPoint> = vec![];
                    if !reflex.is_empty() && attempt % 2 == 0 {
                        let w = domain.vertices()[reflex[rng.gen_range(0..reflex.len())]];
                        for _ in 0..40 {
                            let r = rng.gen_range(0.008..0.03) * diam;
                            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
                            let p = ModelPoint::new(w.x + r * theta.cos(), w.y + r * theta.sin());
                            if domain.contains(p) == catk::Location::Interior { chosen.push(p); break; }
                        }
                    }
                    let mut ok = true;
                    while chosen.len() < 3 {
                        match sample_interior_point(&domain, &mut rng, &chosen, 0.15 * diam, 0.0) {
                            Some(p) => chosen.push(p),
                            None => { ok = false; break; }
                        }
                    }
                    if !ok { break; }
                    if let Ok(t) = build_triangle(&domain, chosen[0], chosen[1], chosen[2]) {
                        if t.is_simple() { tri_found = Some([chosen[0], chosen[1], chosen[2]]); break; }
                    }
                }
                if let Some(tri) = tri_found {
                    let t = build_triangle(&domain, tri[0], tri[1], tri[2]).unwrap();
                    for v in 0..3 {
                        let scales = default_scales(&t, v, 12);
                        let est = limit_outer_angle_estimate(&t, v, &scales).unwrap();
                        total += 1;
                        if est.values[0] - est.extrapolated > 1e-9 {
                            decreasing += 1;
                        }
                    }
                }
            }
        }
    }
    println!("sequences: {total}, genuinely decreasing: {decreasing}");
}
