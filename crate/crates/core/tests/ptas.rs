mod common;

use common::{noisy_corner, rng, uniform};
use proptest::prelude::*;
use rand::Rng;
use std::f64::consts::PI;
use vshape_core::{
    approx_vshape, beta_gamma, brute_force_optimum, candidate_anchor_pairs, coreset_insert,
    rotated_strip_width, solve_exact, solve_fixed_direction, solve_ptas, AnchorMode, CoresetMode,
    DirectionGrid, DirectionalCoreset, Point, PtasOptions, SolveOptions, Tolerance, TwoStripMode,
    UnitDir,
};

const TOL: Tolerance = Tolerance { tau: 1e-9 };

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn ptas(pts: &[Point], eps: f64, opts: PtasOptions) -> f64 {
    let a = approx_vshape(pts, TwoStripMode::ExactSmall).unwrap();
    let opts = PtasOptions {
        apx_guarantee: a.guarantee,
        ..opts
    };
    let r = solve_ptas(pts, eps, a.vshape.width(), &opts).unwrap();
    assert!(r.report.best.covers(pts, TOL));
    assert!((r.report.best.width() - r.report.width).abs() <= 1e-9);
    r.report.width
}

#[test]
fn beta_gamma_values() {
    let (b, g) = beta_gamma(0.6, 1.0, 1.0, 1.0).unwrap();
    assert!((b - 0.1f64.asin()).abs() < 1e-15);
    assert!((g - (b + PI / 2.0)).abs() < 1e-15);
    let (b, g) = beta_gamma(0.3, 1.0, 2.0, 10.0).unwrap();
    assert!((b - 0.005f64.asin()).abs() < 1e-15);
    assert!((g - (b + 0.2f64.asin())).abs() < 1e-15);
    assert!(beta_gamma(0.0, 1.0, 1.0, 1.0).is_err());
    assert!(beta_gamma(0.1, 0.0, 1.0, 1.0).is_err());
    assert!(beta_gamma(0.1, 1.0, 0.5, 1.0).is_err());
    assert!(beta_gamma(0.1, 1.0, 1.0, 0.0).is_err());
}

#[test]
fn grid_holds_anchor_direction_and_doubles_with_half_eps() {
    let theta = 0.7;
    let (b1, g1) = beta_gamma(0.2, 1.0, 1.5, 100.0).unwrap();
    let (b2, g2) = beta_gamma(0.1, 1.0, 1.5, 100.0).unwrap();
    let a = DirectionGrid::new(theta, b1, g1).unwrap();
    let b = DirectionGrid::new(theta, b2, g2).unwrap();
    for g in [&a, &b] {
        assert!(g.thetas.iter().any(|&t| (t - theta).abs() < 1e-15));
        assert_eq!(g.thetas.len(), 2 * g.steps() + 1);
        assert!(
            g.thetas.first().unwrap() <= &(theta - g.gamma)
                && g.thetas.last().unwrap() >= &(theta + g.gamma)
        );
    }
    let ratio = b.steps() as f64 / a.steps() as f64;
    assert!((1.9..=2.1).contains(&ratio), "ratio {ratio}");
    assert!(DirectionGrid::new(0.0, 0.0, 1.0).is_err());
}

#[test]
fn anchor_pairs() {
    let pts = uniform(12, 4);
    assert_eq!(candidate_anchor_pairs(&pts, AnchorMode::AllPairs).len(), 66);
    let d = candidate_anchor_pairs(&pts, AnchorMode::Diametral);
    assert!(!d.is_empty() && d.len() <= 7);
    let diam = vshape_core::geom::diameter_brute(&pts);
    assert!((d[0].p.dist(d[0].q) - diam).abs() < 1e-12);
    assert!(candidate_anchor_pairs(&[p(1.0, 1.0)], AnchorMode::Diametral).is_empty());
}

#[test]
fn kernel_keeps_directional_width_of_a_fat_polygon() {
    let eps = 0.1;
    let gon: Vec<Point> = (0..64)
        .map(|i| UnitDir::from_angle(2.0 * PI * i as f64 / 64.0).v())
        .collect();
    let mut cs = DirectionalCoreset::kernel(eps, &gon, TOL).unwrap();
    for &q in &gon {
        cs = coreset_insert(cs, q);
    }
    assert!(cs.points().len() <= 2 * DirectionalCoreset::kernel_size(eps));
    for i in 0..720 {
        let d = UnitDir::from_angle(PI * i as f64 / 720.0);
        let full = gon
            .iter()
            .map(|q| d.dot(*q))
            .fold(f64::NEG_INFINITY, f64::max)
            - gon.iter().map(|q| d.dot(*q)).fold(f64::INFINITY, f64::min);
        let w = cs.directional_width(d);
        assert!(
            w >= (1.0 - eps / 3.0) * full && w <= full + 1e-12,
            "direction {i}: {w} vs {full}"
        );
    }
}

#[test]
fn kernel_on_a_thin_set_uses_its_shape() {
    // A long thin rectangle of points: even directions would miss the width.
    let eps = 0.3;
    let mut r = rng(9);
    let pts: Vec<Point> = (0..400)
        .map(|_| p(r.random_range(0.0..100.0), r.random_range(0.0..0.1)))
        .collect();
    let mut cs = DirectionalCoreset::kernel(eps, &pts, TOL).unwrap();
    for &q in &pts {
        cs.insert(q);
    }
    let d = UnitDir::new(0.0, 1.0).unwrap();
    let full = pts.iter().map(|q| q.y).fold(f64::NEG_INFINITY, f64::max)
        - pts.iter().map(|q| q.y).fold(f64::INFINITY, f64::min);
    assert!(cs.directional_width(d) >= (1.0 - eps / 3.0) * full);
}

#[test]
fn exact_coreset_is_the_hull() {
    let pts = uniform(50, 2);
    let mut cs = DirectionalCoreset::exact(TOL);
    for &q in &pts {
        cs.insert(q);
    }
    let h = vshape_core::convex_hull(&pts).unwrap();
    assert_eq!(cs.points(), h.vertices());
}

#[test]
fn all_pairs_within_factor_of_oracle() {
    for eps in [0.5, 0.1] {
        for seed in 0..40 {
            let pts = uniform(8, 300 + seed);
            let o = brute_force_optimum(&pts).unwrap();
            let w = ptas(&pts, eps, PtasOptions::default());
            assert!(
                w <= (1.0 + eps) * o.width + 1e-9,
                "eps {eps} seed {seed}: {w} vs {}",
                o.width
            );
            assert!(
                w >= o.width - 1e-9,
                "eps {eps} seed {seed}: {w} below optimum {}",
                o.width
            );
        }
    }
}

#[test]
fn kernel_coreset_within_factor_of_oracle() {
    let eps = 0.5;
    for seed in 0..30 {
        let pts = uniform(9, 700 + seed);
        let o = brute_force_optimum(&pts).unwrap();
        let opts = PtasOptions {
            coreset: CoresetMode::Kernel,
            ..Default::default()
        };
        let w = ptas(&pts, eps, opts);
        assert!(
            w <= (1.0 + eps) * o.width + 1e-9,
            "seed {seed}: {w} vs {}",
            o.width
        );
    }
}

#[test]
fn diametral_anchors_usually_suffice() {
    let eps = 0.1;
    let mut ok = 0;
    for seed in 0..200 {
        let pts = uniform(24, 5000 + seed);
        let e = solve_exact(&pts, &SolveOptions::default()).unwrap();
        let opts = PtasOptions {
            anchor_mode: AnchorMode::Diametral,
            ..Default::default()
        };
        let w = ptas(&pts, eps, opts);
        if w <= (1.0 + eps) * e.width + 1e-9 {
            ok += 1;
        }
    }
    assert!(ok >= 190, "{ok} of 200");
}

#[test]
fn fixed_direction_along_an_optimal_arm() {
    let eps = 0.3;
    for seed in 0..30 {
        let pts = uniform(8, 900 + seed);
        let o = brute_force_optimum(&pts).unwrap();
        let v = o.witnesses[0];
        for d in [v.dir_left, v.dir_right] {
            for mode in [CoresetMode::Exact, CoresetMode::Kernel] {
                let f = solve_fixed_direction(&pts, d.angle(), eps, mode).unwrap();
                assert!(f.covers(&pts, TOL));
                assert!(
                    f.width() <= (1.0 + eps / 3.0) * o.width + 1e-9,
                    "seed {seed}: {} vs {}",
                    f.width(),
                    o.width
                );
            }
        }
    }
}

#[test]
fn rotating_the_arm_box_costs_little() {
    let eps = 0.3;
    for seed in 0..40 {
        let pts = uniform(8, 1200 + seed);
        let o = brute_force_optimum(&pts).unwrap();
        let w = o.width;
        let diam = vshape_core::geom::diameter_brute(&pts);
        let (beta, _) = beta_gamma(eps, w, w, diam).unwrap();
        for k in -8..=8 {
            let alpha = beta * k as f64 / 8.0;
            let r = rotated_strip_width(&o.witnesses[0], &pts, alpha, TOL).unwrap();
            assert!(
                r <= (1.0 + eps / 3.0) * w + 1e-9,
                "seed {seed} alpha {alpha}: {r} vs {w}"
            );
        }
    }
}

#[test]
fn degenerate_and_invalid_input() {
    let line = [
        p(0.0, 0.0),
        p(1.0, 2.0),
        p(2.0, 4.0),
        p(3.0, 6.0),
        p(5.0, 10.0),
    ];
    let r = solve_ptas(&line, 0.1, 0.0, &PtasOptions::default()).unwrap();
    assert!(r.report.degenerate);
    assert_eq!(r.report.width, 0.0);
    assert!(r.report.best.covers(&line, TOL));
    let pts = uniform(10, 1);
    assert!(solve_ptas(&pts, 0.0, 1.0, &PtasOptions::default()).is_err());
    assert!(solve_ptas(&pts, 0.1, -1.0, &PtasOptions::default()).is_err());
    assert!(solve_ptas(&[], 0.1, 1.0, &PtasOptions::default()).is_err());
    assert!(solve_fixed_direction(&pts[..3], 0.0, 0.1, CoresetMode::Exact).is_err());
}

#[test]
fn points_on_a_v_give_width_zero() {
    let pts = [
        p(-2.0, 2.0),
        p(-1.0, 1.0),
        p(1.0, 1.0),
        p(2.0, 2.0),
        p(3.0, 3.0),
        p(-4.0, 4.0),
    ];
    let r = solve_ptas(&pts, 0.1, 0.0, &PtasOptions::default()).unwrap();
    assert!(r.report.width < 1e-9);
    assert!(r.report.best.covers(&pts, TOL));
}

#[test]
fn inserting_an_inner_point_keeps_widths() {
    let pts = uniform(40, 8);
    for mut cs in [
        DirectionalCoreset::exact(TOL),
        DirectionalCoreset::kernel(0.1, &pts, TOL).unwrap(),
    ] {
        for &q in &pts {
            cs.insert(q);
        }
        let before: Vec<f64> = (0..90)
            .map(|i| cs.directional_width(UnitDir::from_angle(PI * i as f64 / 90.0)))
            .collect();
        let c = cs.points().iter().fold(p(0.0, 0.0), |a, &b| a + b) * (1.0 / cs.points().len() as f64);
        cs.insert(c);
        for (i, w) in before.iter().enumerate() {
            let d = UnitDir::from_angle(PI * i as f64 / 90.0);
            assert_eq!(cs.directional_width(d), *w);
        }
    }
}

#[test]
fn two_points_give_one_pair() {
    let pts = [p(0.0, 0.0), p(1.0, 2.0)];
    for mode in [AnchorMode::AllPairs, AnchorMode::Diametral] {
        assert_eq!(candidate_anchor_pairs(&pts, mode).len(), 1);
    }
}

#[test]
fn thin_strip_along_theta_is_covered() {
    let mut r = rng(31);
    let pts: Vec<Point> = (0..60)
        .map(|_| p(r.random_range(0.0..10.0), r.random_range(0.0..0.05)))
        .collect();
    for mode in [CoresetMode::Exact, CoresetMode::Kernel] {
        let v = solve_fixed_direction(&pts, 0.0, 0.2, mode).unwrap();
        assert!(v.covers(&pts, TOL));
        assert!(v.width() <= 0.05 + 1e-9);
    }
}

#[test]
fn huge_eps_still_covers() {
    let pts = uniform(20, 12);
    let v = solve_fixed_direction(&pts, 0.4, 1e6, CoresetMode::Kernel).unwrap();
    assert!(v.covers(&pts, TOL));
    let a = approx_vshape(&pts, TwoStripMode::ExactSmall).unwrap();
    let r = solve_ptas(&pts, 1e6, a.vshape.width(), &PtasOptions::default()).unwrap();
    assert!(r.report.best.covers(&pts, TOL));
    assert!(r.report.width <= a.vshape.width() + 1e-9);
}

#[test]
fn close_to_exact_on_two_hundred_points() {
    let eps = 0.1;
    for seed in 0..3 {
        let pts = uniform(200, 40 + seed);
        let e = solve_exact(&pts, &SolveOptions::default()).unwrap();
        let opts = PtasOptions {
            anchor_mode: AnchorMode::Diametral,
            ..Default::default()
        };
        let a = approx_vshape(&pts, TwoStripMode::Heuristic).unwrap();
        let opts = PtasOptions {
            apx_guarantee: a.guarantee,
            ..opts
        };
        let w = solve_ptas(&pts, eps, a.vshape.width(), &opts).unwrap().report.width;
        assert!(w <= (1.0 + eps) * e.width + 1e-9, "seed {seed}: {w} vs {}", e.width);
        // The exact optimum itself, re-fed as the approximate width.
        let r = solve_ptas(&pts, eps, e.width, &PtasOptions { apx_guarantee: 1.0, ..opts }).unwrap();
        assert!(r.report.width <= (1.0 + eps) * e.width + 1e-9);
        assert!(r.report.best.covers(&pts, TOL));
    }
}

#[test]
fn approx_within_its_guarantee_of_ptas_on_noisy_corners() {
    let eps = 0.05;
    for seed in 0..3 {
        let pts = noisy_corner(500, 1.1, 0.02, 60 + seed);
        {
            let a = approx_vshape(&pts, TwoStripMode::Heuristic).unwrap();
            let opts = PtasOptions {
                anchor_mode: AnchorMode::Diametral,
                apx_guarantee: a.guarantee,
                ..Default::default()
            };
            let r = solve_ptas(&pts, eps, a.vshape.width(), &opts).unwrap();
            let lower = r.report.width / (1.0 + eps);
            assert!(a.vshape.width() <= a.guarantee * lower + 1e-9);
            assert!(r.report.width <= a.vshape.width() + 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn output_covers_and_respects_factor(seed in 0u64..100_000, n in 5usize..10, eps in 0.05f64..1.0) {
        let pts = uniform(n, seed);
        let o = brute_force_optimum(&pts).unwrap();
        let w = ptas(&pts, eps, PtasOptions::default());
        prop_assert!(w <= (1.0 + eps) * o.width + 1e-9);
    }
}
