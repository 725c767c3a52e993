//! Constant-factor approximation: cover by two congruent strips, project
//! each point onto the median line of its strip, solve the two-line
//! instance exactly and widen the result by half the strip width.
//!
//! With a two-strip plug of factor `c` the result is within `1 + 2c` of
//! the optimum; the exact plug gives 3.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact_solver::scaled_tol;
use crate::geom::{dedup_points, strip_through, Line, Point, Strip, Tolerance, UnitDir, PI};
use crate::two_line::{min_vshape_two_lines, TwoLineInstance};
use crate::vshape::{strips_to_vshape, VShape};

/// How [`two_strip_cover`] finds its strips.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TwoStripMode {
    /// Every pair of point-pair directions; optimal, roughly `n^5 log n`.
    #[default]
    ExactSmall,
    /// Direction sampling on a subsample, refined on the full set. No
    /// proven factor.
    Heuristic,
}

/// Nominal factor reported for [`TwoStripMode::Heuristic`]: that of the
/// fast plug it stands in for.
pub const HEURISTIC_NOMINAL_FACTOR: f64 = 6.0;

/// Two strips of equal width whose union covers the points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoStripCover {
    pub s1: Strip,
    pub s2: Strip,
    /// Width is at most `factor_c` times the optimal two-strip width.
    pub factor_c: f64,
    /// Whether `factor_c` is proven for the mode that produced the cover.
    pub verified: bool,
}

impl TwoStripCover {
    pub fn width(&self) -> f64 {
        self.s1.width().max(self.s2.width())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ApproxResult {
    pub vshape: VShape,
    /// Width is at most `guarantee` times the optimum (nominal when the
    /// cover is unverified).
    pub guarantee: f64,
    /// The two strips already formed a covering V.
    pub early_return: bool,
    pub cover: TwoStripCover,
}

/// Best split of `pts` between a strip with normal `n1` and one with
/// normal `n2`. Returns the common width and the two strips.
fn cover_for_dirs(
    proj: &mut Vec<(f64, f64)>,
    pts: &[Point],
    n1: UnitDir,
    n2: UnitDir,
    sorted1: bool,
) -> (f64, Strip, Strip) {
    if !sorted1 {
        proj.clear();
        proj.extend(pts.iter().map(|&p| (n1.dot(p), n2.dot(p))));
        proj.sort_by(|a, b| a.0.total_cmp(&b.0));
    } else {
        for (q, &p) in proj.iter_mut().zip(pts) {
            q.1 = n2.dot(p);
        }
    }
    let n = proj.len();
    // Prefix and suffix ranges of the second projection.
    let mut pre = Vec::with_capacity(n + 1);
    let mut suf = alloc::vec![(f64::INFINITY, f64::NEG_INFINITY); n + 1];
    let mut acc = (f64::INFINITY, f64::NEG_INFINITY);
    pre.push(acc);
    for q in proj.iter() {
        acc = (acc.0.min(q.1), acc.1.max(q.1));
        pre.push(acc);
    }
    for k in (0..n).rev() {
        suf[k] = (suf[k + 1].0.min(proj[k].1), suf[k + 1].1.max(proj[k].1));
    }
    let rest = |i: usize, j: usize| {
        let lo = pre[i].0.min(suf[j + 1].0);
        let hi = pre[i].1.max(suf[j + 1].1);
        (lo, hi)
    };
    let cost = |i: usize, j: usize| {
        let (lo, hi) = rest(i, j);
        let w2 = if hi >= lo { hi - lo } else { 0.0 };
        (proj[j].0 - proj[i].0).max(w2)
    };
    let mut best = (f64::INFINITY, 0, 0);
    for i in 0..n {
        // First j with w1 >= w2; w1 grows with j and w2 shrinks.
        let (mut a, mut b) = (i, n - 1);
        while a < b {
            let m = (a + b) / 2;
            let (lo, hi) = rest(i, m);
            let w2 = if hi >= lo { hi - lo } else { 0.0 };
            if proj[m].0 - proj[i].0 >= w2 {
                b = m;
            } else {
                a = m + 1;
            }
        }
        for j in [a.saturating_sub(1).max(i), a] {
            let c = cost(i, j);
            if c < best.0 {
                best = (c, i, j);
            }
        }
    }
    let (w, i, j) = best;
    let s1 = Strip {
        normal: n1,
        lo: proj[i].0,
        hi: proj[j].0,
    };
    let (lo, hi) = rest(i, j);
    let s2 = if hi >= lo {
        Strip { normal: n2, lo, hi }
    } else {
        Strip {
            normal: n2,
            lo: proj[0].1,
            hi: proj[0].1,
        }
    };
    (w, s1, s2)
}

fn congruent(w: f64, s1: Strip, s2: Strip) -> (Strip, Strip) {
    let widen = |s: Strip| {
        if s.width() < w {
            Strip { hi: s.lo + w, ..s }
        } else {
            s
        }
    };
    (widen(s1), widen(s2))
}

fn pair_dirs(pts: &[Point]) -> Vec<UnitDir> {
    let mut dirs: Vec<UnitDir> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if let Some(d) = UnitDir::from_vec((pts[j] - pts[i]).perp()) {
                dirs.push(d.canonical());
            }
        }
    }
    dirs.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
    dirs.dedup_by(|a, b| a.cross(*b).abs() <= 1e-15);
    dirs
}

fn exact_small(pts: &[Point]) -> (f64, Strip, Strip) {
    let dirs = pair_dirs(pts);
    let mut proj = Vec::with_capacity(pts.len());
    let mut best: Option<(f64, Strip, Strip)> = None;
    for &n1 in &dirs {
        // Points in the order of their first projection, reused for
        // every second direction.
        let mut order: Vec<Point> = pts.to_vec();
        order.sort_by(|a, b| n1.dot(*a).total_cmp(&n1.dot(*b)));
        proj.clear();
        proj.extend(order.iter().map(|&p| (n1.dot(p), 0.0)));
        for &n2 in &dirs {
            let c = cover_for_dirs(&mut proj, &order, n1, n2, true);
            if best.is_none_or(|b| c.0 < b.0) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_else(|| {
        let n = UnitDir::new(0.0, 1.0).unwrap();
        let s = Strip {
            normal: n,
            lo: n.dot(pts[0]),
            hi: n.dot(pts[0]),
        };
        (0.0, s, s)
    })
}

const SAMPLE: usize = 512;
const GRID: usize = 48;

fn heuristic(pts: &[Point]) -> (f64, Strip, Strip) {
    let stride = pts.len().div_ceil(SAMPLE).max(1);
    let sample: Vec<Point> = pts.iter().copied().step_by(stride).collect();
    let mut proj = Vec::new();
    let eval = |proj: &mut Vec<(f64, f64)>, set: &[Point], a1: f64, a2: f64| {
        cover_for_dirs(
            proj,
            set,
            UnitDir::from_angle(a1),
            UnitDir::from_angle(a2),
            false,
        )
    };
    let mut seeds: Vec<(f64, f64, f64)> = Vec::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let (a1, a2) = (PI * i as f64 / GRID as f64, PI * j as f64 / GRID as f64);
            seeds.push((eval(&mut proj, &sample, a1, a2).0, a1, a2));
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0));
    let refine = |proj: &mut Vec<(f64, f64)>,
                  set: &[Point],
                  mut s: (f64, f64, f64),
                  mut step: f64,
                  stop: f64| {
        while step > stop {
            let mut moved = false;
            for (d1, d2) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let w = eval(proj, set, s.1 + d1, s.2 + d2).0;
                if w < s.0 {
                    s = (w, s.1 + d1, s.2 + d2);
                    moved = true;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        s
    };
    let step = PI / GRID as f64;
    let mut best: Option<(f64, f64, f64)> = None;
    for &s in seeds.iter().take(4) {
        let r = refine(&mut proj, &sample, s, step, 1e-7);
        if best.is_none_or(|b| r.0 < b.0) {
            best = Some(r);
        }
    }
    let b = best.unwrap();
    let full = (eval(&mut proj, pts, b.1, b.2).0, b.1, b.2);
    let f = if stride > 1 {
        refine(&mut proj, pts, full, 1e-3, 1e-7)
    } else {
        full
    };
    eval(&mut proj, pts, f.1, f.2)
}

/// Two congruent strips covering `pts`.
pub fn two_strip_cover(pts: &[Point], mode: TwoStripMode) -> Result<TwoStripCover> {
    let pts = dedup_points(pts);
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidParameter("non-finite coordinate"));
    }
    let (w, s1, s2) = match mode {
        TwoStripMode::ExactSmall => exact_small(&pts),
        TwoStripMode::Heuristic => heuristic(&pts),
    };
    let (s1, s2) = congruent(w, s1, s2);
    let (factor_c, verified) = match mode {
        TwoStripMode::ExactSmall => (1.0, true),
        TwoStripMode::Heuristic => (HEURISTIC_NOMINAL_FACTOR, false),
    };
    Ok(TwoStripCover {
        s1,
        s2,
        factor_c,
        verified,
    })
}

/// V of width `s.width()` with `s` as one arm, cut off past the points by
/// a perpendicular second arm.
fn single_strip_vshape(s: &Strip, pts: &[Point]) -> Option<VShape> {
    let u = s.normal.perp();
    let far = pts
        .iter()
        .map(|&p| u.dot(p))
        .fold(f64::NEG_INFINITY, f64::max);
    VShape::from_outer_lines(s.normal, s.lo, s.width(), u.neg(), -far, s.width())
}

fn project(p: Point, l: &Line) -> Point {
    p - l.normal.v() * l.eval(p)
}

/// Constant-factor approximate minimum-width V-shape; at least five
/// distinct points.
pub fn approx_vshape(pts: &[Point], mode: TwoStripMode) -> Result<ApproxResult> {
    let pts = dedup_points(pts);
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pts.len() < 5 {
        return Err(Error::InvalidParameter(
            "need at least five distinct points",
        ));
    }
    let tol = scaled_tol(&pts);
    let cover = two_strip_cover(&pts, mode)?;
    let c = cover.factor_c;
    if let Ok(v) = strips_to_vshape(&cover.s1, &cover.s2, &pts, tol) {
        return Ok(ApproxResult {
            vshape: v,
            guarantee: c,
            early_return: true,
            cover,
        });
    }
    let (mut s1, mut s2) = (cover.s1, cover.s2);
    // Parallel strips have no crossing medians: tilt the second one about
    // its own points until they cross.
    let in2: Vec<Point> = pts
        .iter()
        .copied()
        .filter(|&p| s2.contains(p, tol) && !s1.contains(p, tol))
        .collect();
    let mut tilt = 1e-6;
    let mut result = None;
    for _ in 0..8 {
        if s1.normal.cross(s2.normal).abs() > 1e-9 {
            result = via_two_lines(&pts, &s1, &s2, tol)?;
            if result.is_some() {
                break;
            }
        }
        if in2.is_empty() {
            break;
        }
        let n = cover.s2.normal.rotate(tilt);
        s2 = strip_through(n, &in2)?;
        (s1, s2) = congruent(s1.width().max(s2.width()), s1, s2);
        tilt *= 10.0;
    }
    let (v, single) = result.ok_or(Error::Internal("no crossing medians found"))?;
    if !v.covers(&pts, tol) {
        return Err(Error::Internal("approximate V-shape misses a point"));
    }
    let guarantee = if single { c } else { 1.0 + 2.0 * c };
    Ok(ApproxResult {
        vshape: v,
        guarantee,
        early_return: false,
        cover,
    })
}

/// Projects onto the medians, solves the two-line instance and widens.
/// The flag reports a single-strip fallback.
fn via_two_lines(
    pts: &[Point],
    s1: &Strip,
    s2: &Strip,
    tol: Tolerance,
) -> Result<Option<(VShape, bool)>> {
    let w = s1.width().max(s2.width());
    let (m1, m2) = (s1.median(), s2.median());
    let mut proj = Vec::with_capacity(pts.len());
    for &p in pts {
        let mut placed = false;
        for (s, m) in [(s1, &m1), (s2, &m2)] {
            if s.contains(p, tol) {
                let q = project(p, m);
                if q.dist(p) > 0.5 * w + tol.tau {
                    return Err(Error::Internal("projection moved a point too far"));
                }
                proj.push(q);
                placed = true;
            }
        }
        if !placed {
            return Err(Error::Internal("two-strip cover misses a point"));
        }
    }
    let inst = TwoLineInstance::new(m1, m2, &proj, tol)?;
    let r = min_vshape_two_lines(&inst)?;
    if r.degenerate {
        let s = if pts.iter().all(|&p| s1.contains(p, tol)) {
            s1
        } else {
            s2
        };
        return Ok(single_strip_vshape(s, pts)
            .filter(|v| v.covers(pts, tol))
            .map(|v| (v, true)));
    }
    let v = r.best.widen(0.5 * w);
    Ok(v.covers(pts, tol).then_some((v, false)))
}
