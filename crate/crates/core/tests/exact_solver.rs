mod common;

use std::collections::BTreeSet;

use common::{in_disk, rng, uniform};
use rand::Rng;
use vshape_core::exact_solver::solve_inner_outer_with_stats;
use vshape_core::oracle::TAU_OPT;
use vshape_core::{
    brute_force_optimum, brute_force_two_strip, build_halfplane_index, enumerate_empty_wedges,
    is_canonical, solve_both_inner, solve_both_outer, solve_exact, solve_inner_outer, Error, Point,
    SolveOptions, Tolerance, Wedge,
};

const TOL: Tolerance = Tolerance { tau: 1e-9 };

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn diam(pts: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for a in pts {
        for b in pts {
            d = d.max(a.dist(*b));
        }
    }
    d
}

fn exact(pts: &[Point]) -> vshape_core::SolveReport {
    solve_exact(pts, &SolveOptions::default()).unwrap()
}

#[test]
fn crossing_lines_give_width_zero() {
    let pts = [
        p(0.0, 0.0),
        p(1.0, 1.0),
        p(2.0, 2.0),
        p(3.0, 3.0),
        p(1.0, -1.0),
        p(2.0, -2.0),
        p(3.0, -3.0),
    ];
    let r = exact(&pts);
    assert!(r.width < 1e-9, "{}", r.width);
    assert!(r.best.covers(&pts, TOL));
}

#[test]
fn collinear_input_is_degenerate() {
    let pts: Vec<Point> = (0..7).map(|i| p(i as f64, 2.0 * i as f64 + 1.0)).collect();
    let r = exact(&pts);
    assert!(r.degenerate);
    assert_eq!(r.width, 0.0);
    assert!(r.best.covers(&pts, TOL));
    assert_eq!(
        solve_exact(&[], &SolveOptions::default()).unwrap_err(),
        Error::EmptyInput
    );
    let one = exact(&[p(3.0, 4.0)]);
    assert!(one.degenerate && one.best.covers(&[p(3.0, 4.0)], TOL));
}

#[test]
fn small_inputs_match_oracle() {
    for seed in 0..30 {
        for n in 2..=4 {
            let pts = uniform(n, 40 + seed);
            let r = exact(&pts);
            let o = brute_force_optimum(&pts).unwrap();
            assert!(r.best.covers(&pts, TOL));
            assert!(
                (r.width - o.width).abs() <= 1e-9,
                "n={n}: {} vs {}",
                r.width,
                o.width
            );
        }
    }
}

#[test]
fn unit_square_with_center() {
    let pts = [
        p(0.0, 0.0),
        p(1.0, 0.0),
        p(1.0, 1.0),
        p(0.0, 1.0),
        p(0.5, 0.5),
    ];
    let r = exact(&pts);
    let o = brute_force_optimum(&pts).unwrap();
    assert!(r.best.covers(&pts, TOL));
    assert!(
        (r.width - o.width).abs() <= 1e-6 * diam(&pts),
        "{} vs oracle {}",
        r.width,
        o.width
    );
    // Best V with both outer rays on hull edges: quarter-square arms.
    let idx = build_halfplane_index(&pts).unwrap();
    let bo = solve_both_outer(&pts, &idx).unwrap();
    assert!(bo.best.covers(&pts, TOL));
    assert!(bo.width >= r.width - 1e-12);
}

#[test]
fn matches_oracle_on_random_instances() {
    let mut r = rng(11);
    let mut count = 0;
    for seed in 0..240u64 {
        let n = 5 + (seed as usize % 8);
        let pts: Vec<Point> = if seed % 3 == 0 {
            in_disk(n, 7000 + seed)
        } else {
            (0..n)
                .map(|_| p(r.random_range(-3.0..3.0), r.random_range(-1.0..1.0)))
                .collect()
        };
        let rep = exact(&pts);
        let o = brute_force_optimum(&pts).unwrap();
        assert!(
            rep.best.covers(&pts, TOL),
            "seed {seed}: best does not cover"
        );
        assert!((rep.best.width() - rep.width).abs() <= 1e-12);
        assert!(
            (rep.width - o.width).abs() <= 1e-6 * diam(&pts),
            "seed {seed} n={n}: exact {} vs oracle {}",
            rep.width,
            o.width
        );
        assert!(
            is_canonical(&rep.best, &pts, TOL).0,
            "seed {seed}: optimum not canonical"
        );
        count += 1;
    }
    assert!(count >= 200);
}

#[test]
fn never_below_two_strip_bound() {
    for seed in 0..40 {
        let pts = uniform(5 + seed as usize % 6, 300 + seed);
        let two = brute_force_two_strip(&pts).unwrap();
        let r = exact(&pts);
        assert!(r.width >= two - 1e-9, "{} < {}", r.width, two);
    }
}

/// Quadrant V with unit arms: arm 1 is `0 <= y <= 1, x >= 0`, arm 2 is
/// `0 <= x <= 1, y >= 0`.
fn planted(pts: &[Point]) {
    let v = vshape_core::VShape::from_outer_lines(
        vshape_core::UnitDir::new(0.0, 1.0).unwrap(),
        0.0,
        1.0,
        vshape_core::UnitDir::new(1.0, 0.0).unwrap(),
        0.0,
        1.0,
    )
    .unwrap();
    assert!(v.covers(pts, TOL));
}

#[test]
fn recovers_both_outer_v() {
    let pts = [
        p(2.0, 0.0),
        p(5.0, 0.0),
        p(3.5, 1.0),
        p(0.0, 2.5),
        p(0.0, 4.0),
        p(1.0, 3.2),
    ];
    planted(&pts);
    let idx = build_halfplane_index(&pts).unwrap();
    let bo = solve_both_outer(&pts, &idx).unwrap();
    assert!(bo.best.covers(&pts, TOL));
    assert!(bo.width <= 1.0 + 1e-9, "{}", bo.width);
    let o = brute_force_optimum(&pts).unwrap();
    assert!((exact(&pts).width - o.width).abs() <= 1e-9);
}

#[test]
fn antiparallel_hull_edges_give_parallel_limit() {
    // (3,0)-(0,2) and (4.5,1)-(0,4) are parallel hull edges; two parallel
    // strips of width 1/sqrt(13) cover, approached by tilted V-shapes.
    let pts = [
        p(2.0, 1.0),
        p(4.5, 1.0),
        p(3.0, 0.0),
        p(0.0, 2.0),
        p(0.0, 4.0),
        p(1.0, 3.0),
    ];
    let r = exact(&pts);
    // The apex sits ~1e7 away, so coverage holds only to ~1e-8.
    assert!(r.best.covers(&pts, Tolerance { tau: 1e-8 }));
    assert!((r.width - 1.0 / 13f64.sqrt()).abs() <= 1e-6, "{}", r.width);
    assert!(r.width >= 1.0 / 13f64.sqrt());
}

#[test]
fn recovers_inner_outer_v() {
    let pts = [
        p(2.0, 1.0),
        p(4.5, 1.0),
        p(3.0, 0.0),
        p(0.0, 2.0),
        p(0.0, 4.3),
        p(1.0, 3.0),
    ];
    planted(&pts);
    let io = solve_inner_outer(&pts).unwrap();
    assert!(io.best.covers(&pts, TOL));
    assert!(io.width <= 1.0 + 1e-9, "{}", io.width);
    let o = brute_force_optimum(&pts).unwrap();
    assert!((exact(&pts).width - o.width).abs() <= 1e-9);
}

#[test]
fn recovers_both_inner_v() {
    let pts = [
        p(2.0, 1.0),
        p(4.0, 1.0),
        p(1.0, 2.0),
        p(1.0, 4.5),
        p(3.0, 0.0),
        p(0.0, 3.0),
    ];
    planted(&pts);
    let idx = build_halfplane_index(&pts).unwrap();
    let bi = solve_both_inner(&pts, &idx).unwrap();
    assert!(bi.best.covers(&pts, TOL));
    assert!(bi.width <= 1.0 + 1e-9, "{}", bi.width);
    let o = brute_force_optimum(&pts).unwrap();
    assert!((exact(&pts).width - o.width).abs() <= 1e-9);
}

#[test]
fn both_outer_candidate_count_is_bounded() {
    let mut pts = Vec::new();
    for i in 0..12 {
        let t = i as f64 * std::f64::consts::TAU / 12.0;
        pts.push(p(0.01 * t.cos(), 0.01 * t.sin()));
    }
    for i in 0..5 {
        pts.push(p(10.0 + 0.1 * i as f64, 0.3 * (i as f64).sin()));
        pts.push(p(0.2 * (i as f64).cos(), 10.0 + 0.1 * i as f64));
    }
    let h = vshape_core::convex_hull(&pts).unwrap().len() as u64;
    let idx = build_halfplane_index(&pts).unwrap();
    let r = solve_both_outer(&pts, &idx).unwrap();
    assert!(
        r.candidates_examined <= h * (h - 1) / 2 * 2,
        "{} > bound for h={h}",
        r.candidates_examined
    );
    assert!(r.best.covers(&pts, TOL));
}

#[test]
fn inner_outer_heap_pushes_stay_below_2n() {
    for seed in 0..20 {
        let pts = uniform(30 + seed as usize * 5, 50 + seed);
        let (rep, stats) = solve_inner_outer_with_stats(&pts).unwrap();
        assert!(rep.best.covers(&pts, TOL));
        assert!(!stats.is_empty());
        for s in stats {
            assert!(
                s.heap_pushes < 2 * pts.len(),
                "{} pushes for n={}",
                s.heap_pushes,
                pts.len()
            );
        }
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// All quadruples (a, b, c, d): Q = points strictly left of a -> b, cd an
/// edge of conv(Q) with Q on its right and a, b strictly on its left.
fn brute_wedges(pts: &[Point]) -> BTreeSet<[u64; 8]> {
    let key =
        |w: &Wedge| [w.a.x, w.a.y, w.b.x, w.b.y, w.c.x, w.c.y, w.d.x, w.d.y].map(f64::to_bits);
    let mut out = BTreeSet::new();
    for &a in pts {
        for &b in pts {
            if a == b {
                continue;
            }
            let q: Vec<Point> = pts
                .iter()
                .copied()
                .filter(|&x| orient(a, b, x) > 0.0)
                .collect();
            for &c in &q {
                for &d in &q {
                    if c == d || orient(c, d, a) <= 0.0 || orient(c, d, b) <= 0.0 {
                        continue;
                    }
                    if q.iter().all(|&x| x == c || x == d || orient(c, d, x) < 0.0) {
                        out.insert(key(&Wedge { a, b, c, d }));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn empty_wedges_match_quadruple_scan() {
    for seed in 0..40 {
        let n = 5 + seed as usize % 6;
        let pts = uniform(n, 1200 + seed);
        let idx = build_halfplane_index(&pts).unwrap();
        let got: BTreeSet<[u64; 8]> = enumerate_empty_wedges(&pts, &idx)
            .iter()
            .map(|w| [w.a.x, w.a.y, w.b.x, w.b.y, w.c.x, w.c.y, w.d.x, w.d.y].map(f64::to_bits))
            .collect();
        assert_eq!(got, brute_wedges(&pts), "seed {seed}");
    }
}

fn wedge_is_empty(w: &Wedge, pts: &[Point]) -> bool {
    // Interior of the region left of a -> b and left of d -> c.
    pts.iter()
        .all(|&x| !(orient(w.a, w.b, x) > 1e-12 && orient(w.c, w.d, x) > 1e-12))
}

#[test]
fn empty_wedges_four_points_in_convex_position() {
    let pts = [p(-2.0, 2.0), p(-1.0, 1.0), p(1.0, 1.0), p(2.0, 2.0)];
    let idx = build_halfplane_index(&pts).unwrap();
    let ws = enumerate_empty_wedges(&pts, &idx);
    let pair =
        |x: Point, y: Point, s: [Point; 2]| (x == s[0] && y == s[1]) || (x == s[1] && y == s[0]);
    assert!(ws
        .iter()
        .any(|w| pair(w.a, w.b, [p(-1.0, 1.0), p(-2.0, 2.0)])
            && pair(w.c, w.d, [p(1.0, 1.0), p(2.0, 2.0)])));
    for w in &ws {
        assert!(wedge_is_empty(w, &pts));
    }
}

#[test]
fn empty_wedges_convex_position() {
    let n = 8;
    let pts: Vec<Point> = (0..n)
        .map(|i| {
            let t = i as f64 * std::f64::consts::TAU / n as f64 + 0.1;
            p(t.cos(), 0.7 * t.sin())
        })
        .collect();
    let idx = build_halfplane_index(&pts).unwrap();
    let ws = enumerate_empty_wedges(&pts, &idx);
    assert!(ws.len() <= 2 * n * n);
    for w in &ws {
        assert!(wedge_is_empty(w, &pts));
    }
    assert_eq!(ws.len(), brute_wedges(&pts).len());
}

#[test]
fn both_inner_on_triangle_with_interior_points() {
    let mut pts = vec![p(0.0, 0.0), p(10.0, 0.0), p(5.0, 9.0)];
    let mut r = rng(5);
    for _ in 0..15 {
        pts.push(p(
            4.0 + r.random::<f64>() * 2.0,
            2.0 + r.random::<f64>() * 2.0,
        ));
    }
    let idx = build_halfplane_index(&pts).unwrap();
    assert!(!enumerate_empty_wedges(&pts, &idx).is_empty());
    let bi = solve_both_inner(&pts, &idx).unwrap();
    assert!(bi.best.covers(&pts, TOL));
}

#[test]
fn balanced_and_optima_options() {
    for seed in 0..30 {
        let pts = uniform(6 + seed as usize % 5, 2000 + seed);
        let plain = exact(&pts);
        let opts = SolveOptions {
            balanced: true,
            enumerate_optima: true,
            ..Default::default()
        };
        let r = solve_exact(&pts, &opts).unwrap();
        assert!((r.width - plain.width).abs() <= 1e-12);
        let w = r.best.widths();
        assert!((w.left - w.right).abs() <= 1e-9, "not balanced: {w:?}");
        assert!(r.best.covers(&pts, TOL));
        let optima = r.optima.unwrap();
        assert!(!optima.is_empty());
        for v in &optima {
            assert!(v.covers(&pts, TOL));
            assert!(v.width() <= r.width + TAU_OPT * diam(&pts).max(1.0) + 1e-12);
        }
    }
}

#[test]
fn invariant_under_similarity() {
    for seed in 0..20 {
        let pts = uniform(40, 3000 + seed);
        let base = exact(&pts).width;
        let (s, c) = (0.3f64.sin(), 0.3f64.cos());
        let moved: Vec<Point> = pts
            .iter()
            .map(|q| {
                p(
                    1e3 + 7.0 * (c * q.x - s * q.y),
                    -50.0 + 7.0 * (s * q.x + c * q.y),
                )
            })
            .collect();
        let w = exact(&moved).width;
        assert!(
            (w - 7.0 * base).abs() <= 1e-6 * 7.0,
            "{w} vs {}",
            7.0 * base
        );
    }
}

#[test]
fn optima_match_oracle_canonical_witnesses_on_symmetric_instance() {
    // Two squares with axis guards; mirror-symmetric, so optima come in pairs.
    let mut pts = Vec::new();
    for cx in [-10.0, 10.0] {
        pts.extend([p(cx + 1.0, 0.0), p(cx, 1.0), p(cx - 1.0, 0.0), p(cx, -1.0)]);
        pts.extend([p(cx, 2f64.sqrt()), p(cx, -(2f64.sqrt()))]);
    }
    let o = brute_force_optimum(&pts).unwrap();
    let canon: Vec<_> = o
        .witnesses
        .iter()
        .filter(|v| is_canonical(v, &pts, TOL).0)
        .collect();
    let r = solve_exact(
        &pts,
        &SolveOptions {
            enumerate_optima: true,
            ..Default::default()
        },
    )
    .unwrap();
    assert!((r.width - o.width).abs() <= 1e-9);
    let optima = r.optima.unwrap();
    assert_eq!(optima.len(), canon.len());
    for c in canon {
        assert!(optima.iter().any(|v| v.approx_eq(c, 1e-6)), "missing {c:?}");
    }
}
