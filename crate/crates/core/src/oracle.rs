//! Brute-force ground truth for small instances.
//!
//! [`brute_force_optimum`] enumerates every arm strip spanned by a pair of
//! points plus a third point (or by the pair alone, at width zero) and
//! tries all pairs of such strips with all four cone orientations. Covers
//! by two parallel strips are added as tilted V-shapes.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{dedup_points, diameter_brute, Point, Strip, Tolerance, UnitDir, DEFAULT_TAU};
use crate::hull::{convex_hull, min_width_strip};
use crate::vshape::{tilted_parallel_vshape, VShape};

/// Witnesses within this of the optimum are reported.
pub const TAU_OPT: f64 = 1e-9;

/// Default guard for [`brute_force_optimum`].
pub const ORACLE_MAX_N: usize = 12;

/// Default guard for [`brute_force_two_strip`].
pub const TWO_STRIP_MAX_N: usize = 10;

const MAX_WITNESSES: usize = 64;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub width: f64,
    /// Covering V-shapes of width within [`TAU_OPT`] of `width`, not
    /// necessarily balanced.
    pub witnesses: Vec<VShape>,
}

/// Candidate arm strips: two points on one boundary line, a third (or the
/// same line again) on the other.
fn candidate_strips(pts: &[Point]) -> Vec<Strip> {
    let n = pts.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let Some(nrm) = UnitDir::from_vec((pts[j] - pts[i]).perp()) else {
                continue;
            };
            let c = nrm.dot(pts[i]);
            out.push(Strip::new(nrm, c, c));
            for (k, &p) in pts.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let e = nrm.dot(p);
                if e != c {
                    out.push(Strip::new(nrm, c.min(e), c.max(e)));
                }
            }
        }
    }
    out
}

/// Minimum-width V-shape by exhaustive enumeration, refusing more than
/// [`ORACLE_MAX_N`] distinct points.
pub fn brute_force_optimum(pts: &[Point]) -> Result<OracleResult> {
    brute_force_optimum_with_limit(pts, ORACLE_MAX_N)
}

pub fn brute_force_optimum_with_limit(pts: &[Point], limit: usize) -> Result<OracleResult> {
    let pts = dedup_points(pts);
    let n = pts.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 1 {
        let d = UnitDir::new(1.0, 0.0).unwrap();
        let v = VShape {
            apex_inner: pts[0],
            apex_outer: pts[0],
            dir_left: d.perp(),
            dir_right: d.perp().neg(),
        };
        return Ok(OracleResult {
            width: 0.0,
            witnesses: alloc::vec![v],
        });
    }
    let tol = Tolerance::new(DEFAULT_TAU * diameter_brute(&pts).max(1.0));
    let mut strips = candidate_strips(&pts);
    strips.sort_by(|a, b| a.width().total_cmp(&b.width()));

    let mut acc = Best {
        width: f64::INFINITY,
        found: Vec::new(),
    };
    for (bi, s2) in strips.iter().enumerate() {
        if s2.width() > acc.width + TAU_OPT {
            break;
        }
        for s1 in &strips[..=bi] {
            if s1.normal.cross(s2.normal).abs() <= 1e-12 {
                continue;
            }
            for (n1, c1) in [(s1.normal, s1.lo), (s1.normal.neg(), -s1.hi)] {
                for (n2, c2) in [(s2.normal, s2.lo), (s2.normal.neg(), -s2.hi)] {
                    let Some(v) = VShape::from_outer_lines(n1, c1, s1.width(), n2, c2, s2.width())
                    else {
                        continue;
                    };
                    if v.width() <= acc.width + TAU_OPT && v.covers(&pts, tol) {
                        acc.offer(v);
                    }
                }
            }
        }
    }
    parallel_pass(&pts, tol, &mut acc);
    let Best {
        width: best,
        mut found,
    } = acc;
    if found.is_empty() {
        // All points collinear: a single zero-width line covers them.
        let s = strips
            .first()
            .ok_or(Error::Internal("no candidate strip"))?;
        let d = s.dir();
        let x = pts[0];
        let v = VShape {
            apex_inner: x,
            apex_outer: x,
            dir_left: d,
            dir_right: d.neg(),
        };
        if v.covers(&pts, tol) {
            return Ok(OracleResult {
                width: 0.0,
                witnesses: alloc::vec![v],
            });
        }
        return Err(Error::Internal("oracle found no covering candidate"));
    }
    found.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.apex_cmp(&b.1)));
    Ok(OracleResult {
        width: best,
        witnesses: found.into_iter().map(|(_, v)| v).collect(),
    })
}

struct Best {
    width: f64,
    found: Vec<(f64, VShape)>,
}

impl Best {
    fn offer(&mut self, v: VShape) {
        let w = v.width();
        if w > self.width + TAU_OPT {
            return;
        }
        if w < self.width {
            self.width = w;
            let cut = w + TAU_OPT;
            self.found.retain(|(fw, _)| *fw <= cut);
        }
        if self.found.len() < MAX_WITNESSES
            && !self.found.iter().any(|(_, f)| f.approx_eq(&v, 1e-9))
        {
            self.found.push((w, v));
        }
    }
}

/// Covers by two parallel strips, split by a threshold along a pair
/// normal, realized with one arm slightly tilted. On inputs in general
/// position these never beat the canonical candidates; on degenerate ones
/// (parallel point pairs) they can.
fn parallel_pass(pts: &[Point], tol: Tolerance, acc: &mut Best) {
    let n = pts.len();
    let mut order: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            let Some(m) = UnitDir::from_vec((pts[j] - pts[i]).perp()) else {
                continue;
            };
            order.sort_by(|&a, &b| m.dot(pts[a]).total_cmp(&m.dot(pts[b])));
            let proj: Vec<f64> = order.iter().map(|&k| m.dot(pts[k])).collect();
            for k in 1..n {
                if proj[k] <= proj[k - 1] {
                    continue;
                }
                let w = (proj[k - 1] - proj[0]).max(proj[n - 1] - proj[k]);
                if w > acc.width + TAU_OPT {
                    continue;
                }
                let a: Vec<Point> = order[..k].iter().map(|&q| pts[q]).collect();
                let b: Vec<Point> = order[k..].iter().map(|&q| pts[q]).collect();
                if let Some(v) = tilted_parallel_vshape(m, &a, &b, pts, tol) {
                    acc.offer(v);
                }
            }
        }
    }
}

fn set_width(pts: &[Point]) -> f64 {
    if pts.len() <= 2 {
        return 0.0;
    }
    match convex_hull(pts) {
        Ok(h) => min_width_strip(&h).width(),
        Err(_) => 0.0,
    }
}

/// Narrowest common width of two strips covering `pts`, over all
/// bipartitions, refusing more than [`TWO_STRIP_MAX_N`] points.
pub fn brute_force_two_strip(pts: &[Point]) -> Result<f64> {
    brute_force_two_strip_with_limit(pts, TWO_STRIP_MAX_N)
}

pub fn brute_force_two_strip_with_limit(pts: &[Point], limit: usize) -> Result<f64> {
    let pts = dedup_points(pts);
    let n = pts.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > limit || n >= 63 {
        return Err(Error::TooLarge { n, limit });
    }
    let mut best = f64::INFINITY;
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    // Point 0 always goes to the first set.
    for mask in 0u64..(1u64 << (n - 1)) {
        a.clear();
        b.clear();
        a.push(pts[0]);
        for (i, &p) in pts.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                b.push(p);
            } else {
                a.push(p);
            }
        }
        let w = set_width(&a).max(set_width(&b));
        if w < best {
            best = w;
        }
    }
    Ok(best)
}
