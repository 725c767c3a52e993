#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vshape_core::{Point, UnitDir};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(n: usize, seed: u64) -> Vec<Point> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| Point::new(r.random::<f64>(), r.random::<f64>()))
        .collect()
}

pub fn in_disk(n: usize, seed: u64) -> Vec<Point> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = Point::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
        if p.norm() <= 1.0 {
            out.push(p);
        }
    }
    out
}

pub fn dir(angle: f64) -> UnitDir {
    UnitDir::from_angle(angle)
}

/// Brute-force extreme point with the lexicographic tie rule.
pub fn brute_extreme(pts: &[Point], d: UnitDir, tau: f64) -> Option<Point> {
    let m = pts
        .iter()
        .map(|p| d.dot(*p))
        .fold(f64::NEG_INFINITY, f64::max);
    pts.iter()
        .filter(|p| d.dot(**p) >= m - tau)
        .copied()
        .min_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)))
}

/// Vertex test by definition: p is a hull vertex iff some direction makes
/// it the unique maximizer; checked through the O(n^2) "not inside any
/// triangle, not inside any segment" criterion.
pub fn is_extreme_brute(pts: &[Point], k: usize) -> bool {
    let p = pts[k];
    let n = pts.len();
    let orient =
        |a: Point, b: Point, c: Point| (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if i == k || j == k || l == k {
                    continue;
                }
                let (a, b, c) = (pts[i], pts[j], pts[l]);
                let o1 = orient(a, b, p);
                let o2 = orient(b, c, p);
                let o3 = orient(c, a, p);
                if ((o1 >= 0.0 && o2 >= 0.0 && o3 >= 0.0) || (o1 <= 0.0 && o2 <= 0.0 && o3 <= 0.0))
                    && orient(a, b, c) != 0.0 {
                        return false;
                    }
            }
        }
        for j in 0..n {
            if i == k || j == k {
                continue;
            }
            let (a, b) = (pts[i], pts[j]);
            if orient(a, b, p).abs() < 1e-15 {
                let t = (p - a).dot(b - a) / (b - a).dot(b - a);
                if t > 0.0 && t < 1.0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Balanced width by grid search over the two inward outer-line normals
/// (angles `k * step`); for each pair the outer lines support the set and
/// the width is `max_p min(d1(p), d2(p))`. Returns the best width and the
/// two normal angles.
pub fn grid_search_optimum(pts: &[Point], steps: usize) -> (f64, f64, f64) {
    let m = steps;
    let step = std::f64::consts::TAU / m as f64;
    let table: Vec<Vec<f64>> = (0..m)
        .map(|k| {
            let d = UnitDir::from_angle(k as f64 * step);
            let proj: Vec<f64> = pts.iter().map(|p| d.dot(*p)).collect();
            let lo = proj.iter().copied().fold(f64::INFINITY, f64::min);
            proj.iter().map(|v| v - lo).collect()
        })
        .collect();
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..m {
        let ti = &table[i];
        for j in i + 1..m {
            let tj = &table[j];
            let mut w: f64 = 0.0;
            for (a, b) in ti.iter().zip(tj) {
                w = w.max(a.min(*b));
                if w >= best.0 {
                    break;
                }
            }
            if w < best.0 {
                best = (w, i as f64 * step, j as f64 * step);
            }
        }
    }
    best
}

/// Points along two rays from the origin (angles 0 and `opening`), with
/// Gaussian noise of deviation `sigma` across the ray.
pub fn noisy_corner(n: usize, opening: f64, sigma: f64, seed: u64) -> Vec<Point> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let d = if k % 2 == 0 { dir(0.0) } else { dir(opening) };
        let t: f64 = r.random_range(0.0..1.0);
        // Box-Muller.
        let (u1, u2): (f64, f64) = (r.random_range(f64::EPSILON..1.0), r.random());
        let g = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        out.push(d.v() * t + d.perp().v() * (sigma * g));
    }
    out
}
