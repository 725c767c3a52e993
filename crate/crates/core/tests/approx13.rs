mod common;

use common::{noisy_corner, uniform};
use proptest::prelude::*;
use vshape_core::{
    approx_vshape, brute_force_optimum, brute_force_two_strip, solve_exact, two_strip_cover, Point,
    SolveOptions, Tolerance, TwoStripMode,
};

const TOL: Tolerance = Tolerance { tau: 1e-9 };

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn covers_union(c: &vshape_core::TwoStripCover, pts: &[Point]) -> bool {
    pts.iter()
        .all(|&q| c.s1.contains(q, TOL) || c.s2.contains(q, TOL))
}

#[test]
fn crossing_lines_need_zero_width_strips() {
    let pts = [
        p(-2.0, -2.0),
        p(-1.0, -1.0),
        p(1.0, 1.0),
        p(2.0, 2.0),
        p(-1.0, 1.0),
        p(1.0, -1.0),
        p(3.0, -3.0),
    ];
    let c = two_strip_cover(&pts, TwoStripMode::ExactSmall).unwrap();
    assert!(c.width() < 1e-12);
    assert_eq!(c.factor_c, 1.0);
    assert!(c.verified);
    assert!(covers_union(&c, &pts));
    // The lines cross among the points, so the strips are not a V and the
    // result goes through the two-line solver.
    let a = approx_vshape(&pts, TwoStripMode::ExactSmall).unwrap();
    assert!(!a.early_return);
    assert_eq!(a.guarantee, 3.0);
    assert!(a.vshape.covers(&pts, TOL));
}

#[test]
fn points_on_a_v_return_early() {
    let pts = [
        p(1.0, 1.0),
        p(2.0, 2.0),
        p(3.0, 3.0),
        p(-1.0, 1.0),
        p(-2.0, 2.0),
        p(-3.5, 3.5),
    ];
    let a = approx_vshape(&pts, TwoStripMode::ExactSmall).unwrap();
    assert!(a.early_return);
    assert_eq!(a.guarantee, 1.0);
    assert!(a.vshape.width() < 1e-12);
    assert!(a.vshape.covers(&pts, TOL));
}

#[test]
fn unit_square_corners() {
    let sq = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
    let c = two_strip_cover(&sq, TwoStripMode::ExactSmall).unwrap();
    assert!(c.width() <= 1.0);
    assert!(c.width() <= brute_force_two_strip(&sq).unwrap() + 1e-12);
    assert!(covers_union(&c, &sq));
}

#[test]
fn exact_plug_matches_two_strip_oracle() {
    for seed in 0..60 {
        let pts = uniform(4 + (seed as usize % 7), 300 + seed);
        let c = two_strip_cover(&pts, TwoStripMode::ExactSmall).unwrap();
        let o = brute_force_two_strip(&pts).unwrap();
        assert!(
            (c.width() - o).abs() <= 1e-9,
            "seed {seed}: plug {} vs oracle {o}",
            c.width()
        );
        assert!(covers_union(&c, &pts));
        assert!(
            (c.s1.width() - c.s2.width()).abs() <= 1e-12,
            "strips not congruent"
        );
    }
}

#[test]
fn two_strip_width_is_below_v_width() {
    for seed in 0..40 {
        let pts = uniform(6 + (seed as usize % 20), 700 + seed);
        let c = two_strip_cover(&pts, TwoStripMode::ExactSmall).unwrap();
        let e = solve_exact(&pts, &SolveOptions::default()).unwrap();
        assert!(
            c.width() <= e.width + 1e-9,
            "seed {seed}: {} > {}",
            c.width(),
            e.width
        );
    }
}

#[test]
fn within_three_of_oracle() {
    for seed in 0..120 {
        let n = 5 + (seed as usize % 8);
        let pts = if seed % 2 == 0 {
            uniform(n, 1100 + seed)
        } else {
            noisy_corner(n, 1.1, 0.02, 1100 + seed)
        };
        let a = approx_vshape(&pts, TwoStripMode::ExactSmall).unwrap();
        let o = brute_force_optimum(&pts).unwrap();
        assert!(a.vshape.covers(&pts, TOL), "seed {seed}");
        assert!(
            a.vshape.width() <= 3.0 * o.width + 1e-9,
            "seed {seed}: {} vs oracle {}",
            a.vshape.width(),
            o.width
        );
        let c = a.cover.factor_c;
        assert_eq!(a.guarantee, if a.early_return { c } else { 1.0 + 2.0 * c });
    }
}

#[test]
fn heuristic_plug_covers_and_is_near_the_exact_width() {
    for seed in 0..6 {
        let pts = noisy_corner(400, 0.9 + 0.2 * seed as f64, 0.01, 40 + seed);
        let a = approx_vshape(&pts, TwoStripMode::Heuristic).unwrap();
        assert!(a.vshape.covers(&pts, TOL));
        assert!(!a.cover.verified);
        assert!(covers_union(&a.cover, &pts));
        let e = solve_exact(&pts, &SolveOptions::default()).unwrap();
        assert!(
            a.vshape.width() <= a.guarantee * e.width,
            "seed {seed}: {} vs exact {}",
            a.vshape.width(),
            e.width
        );
    }
}

#[test]
fn rejects_small_input() {
    assert!(approx_vshape(&[p(0.0, 0.0), p(1.0, 0.0)], TwoStripMode::ExactSmall).is_err());
    assert!(two_strip_cover(&[], TwoStripMode::ExactSmall).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn output_always_covers(seed in 0u64..100_000, n in 5usize..14, heuristic in any::<bool>()) {
        let pts = uniform(n, seed);
        let mode = if heuristic { TwoStripMode::Heuristic } else { TwoStripMode::ExactSmall };
        let a = approx_vshape(&pts, mode).unwrap();
        prop_assert!(a.vshape.covers(&pts, TOL));
        prop_assert!(covers_union(&a.cover, &pts));
    }
}
