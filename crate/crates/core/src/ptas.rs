//! (1 + eps)-approximation. For each candidate anchor pair `p, q` a fan of
//! arm directions around the direction of `pq` is tried; each direction
//! is solved by a sweep that moves the inner boundary of the first arm
//! towards its outer line and keeps a directional-width coreset of the
//! points left over for the second arm.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exact_solver::{degenerate_report, SolveReport};
use crate::geom::{
    all_collinear, dedup_points, fm, Frame, Point, Strip, Tolerance, UnitDir, DEFAULT_TAU, PI,
};
use crate::hull::{
    convex_hull_tol, insert_hull_tol, min_width_strip, min_width_strip_constrained,
    AngularInterval, Hull,
};
use crate::vshape::{classify, strips_to_vshape, VShape};

/// Two points meant to lie in one arm, at least half that arm's
/// point-set diameter apart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnchorCandidate {
    pub p: Point,
    pub q: Point,
}

impl AnchorCandidate {
    pub fn theta(&self) -> f64 {
        fm::atan2(self.q.y - self.p.y, self.q.x - self.p.x)
    }
}

/// Arm directions `theta_pq + i * beta` for `|i| <= ceil(gamma / beta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectionGrid {
    pub beta: f64,
    pub gamma: f64,
    pub thetas: Vec<f64>,
}

impl DirectionGrid {
    pub fn new(theta_pq: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(beta > 0.0 && beta <= PI) || !(gamma > 0.0 && gamma <= PI) {
            return Err(Error::InvalidParameter(
                "beta and gamma must lie in (0, pi]",
            ));
        }
        let k = fm::ceil(gamma / beta) as i64;
        let thetas = (-k..=k).map(|i| theta_pq + i as f64 * beta).collect();
        Ok(DirectionGrid {
            beta,
            gamma,
            thetas,
        })
    }

    /// `ceil(gamma / beta)`.
    pub fn steps(&self) -> usize {
        self.thetas.len() / 2
    }
}

/// Rotation step and half-range for an anchor pair at distance `d_pq`,
/// given bounds `w_lo <= width <= w_hi` on the width of the target V.
pub fn beta_gamma(eps: f64, w_lo: f64, w_hi: f64, d_pq: f64) -> Result<(f64, f64)> {
    if !(eps > 0.0) || !(w_lo > 0.0) || !(w_hi >= w_lo) || !(d_pq > 0.0) || !w_hi.is_finite() {
        return Err(Error::InvalidParameter(
            "beta_gamma needs eps, w_lo, d_pq > 0 and w_hi >= w_lo",
        ));
    }
    let beta = fm::asin((eps * w_lo / (6.0 * d_pq)).min(1.0));
    let gamma = beta + fm::asin((w_hi / d_pq).min(1.0));
    Ok((beta, gamma))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AnchorMode {
    /// Every pair of points; always contains an anchor pair.
    #[default]
    AllPairs,
    /// Farthest pairs of the set and of its halves, two levels deep. At
    /// most seven pairs; a heuristic.
    Diametral,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoresetMode {
    /// The full hull of the inserted points.
    #[default]
    Exact,
    /// Extreme points in a fixed fan of directions.
    Kernel,
}

/// Farthest pair of `pts` by rotating calipers over the hull.
fn farthest_pair(pts: &[Point], tol: Tolerance) -> Option<(Point, Point)> {
    let h = convex_hull_tol(pts, tol).ok()?;
    let v = h.vertices();
    match v.len() {
        0 | 1 => None,
        2 => Some((v[0], v[1])),
        n => {
            let mut best = (v[0], v[1]);
            let mut bd = v[0].dist(v[1]);
            let mut j = 1;
            for i in 0..n {
                let ni = (i + 1) % n;
                let e = v[ni] - v[i];
                while e.cross(v[(j + 1) % n] - v[i]) > e.cross(v[j] - v[i]) {
                    j = (j + 1) % n;
                }
                for a in [v[i], v[ni]] {
                    let d = a.dist(v[j]);
                    if d > bd {
                        bd = d;
                        best = (a, v[j]);
                    }
                }
            }
            Some(best)
        }
    }
}

fn diametral(pts: &[Point], level: u32, tol: Tolerance, out: &mut Vec<AnchorCandidate>) {
    let Some((a, b)) = farthest_pair(pts, tol) else {
        return;
    };
    if !out
        .iter()
        .any(|c| (c.p == a && c.q == b) || (c.p == b && c.q == a))
    {
        out.push(AnchorCandidate { p: a, q: b });
    }
    if level == 2 {
        return;
    }
    let mid = (a + b) * 0.5;
    let u = b - a;
    let (near_a, near_b): (Vec<Point>, Vec<Point>) =
        pts.iter().partition(|&&p| u.dot(p - mid) < 0.0);
    diametral(&near_a, level + 1, tol, out);
    diametral(&near_b, level + 1, tol, out);
}

pub fn candidate_anchor_pairs(pts: &[Point], mode: AnchorMode) -> Vec<AnchorCandidate> {
    let pts = dedup_points(pts);
    let mut out = Vec::new();
    match mode {
        AnchorMode::AllPairs => {
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    out.push(AnchorCandidate {
                        p: pts[i],
                        q: pts[j],
                    });
                }
            }
        }
        AnchorMode::Diametral => {
            let tol = crate::exact_solver::scaled_tol(&pts);
            diametral(&pts, 0, tol, &mut out);
        }
    }
    out
}

/// Points whose directional width approximates that of everything
/// inserted so far.
#[derive(Clone, Debug)]
pub struct DirectionalCoreset {
    mode: CoresetMode,
    dirs: Vec<UnitDir>,
    ext: Vec<Option<(f64, Point)>>,
    hull: Hull,
    tol: Tolerance,
}

impl DirectionalCoreset {
    pub fn exact(tol: Tolerance) -> Self {
        DirectionalCoreset {
            mode: CoresetMode::Exact,
            dirs: Vec::new(),
            ext: Vec::new(),
            hull: Hull::empty(),
            tol,
        }
    }

    /// `ceil(2 / sqrt(eps / 3))`.
    pub fn kernel_size(eps: f64) -> usize {
        fm::ceil(2.0 / fm::sqrt(eps / 3.0)) as usize
    }

    /// Kernel over [`Self::kernel_size`] directions, spread evenly after
    /// an affine map that makes `reference` fat.
    pub fn kernel(eps: f64, reference: &[Point], tol: Tolerance) -> Result<Self> {
        if !(eps > 0.0) {
            return Err(Error::InvalidParameter("eps must be positive"));
        }
        let k = Self::kernel_size(eps).max(2);
        let (m, w, len) = match convex_hull_tol(reference, tol) {
            Ok(h) if h.len() >= 3 => {
                let s = min_width_strip(&h);
                let mp = s.normal.perp();
                let (lo, hi) = h
                    .vertices()
                    .iter()
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &p| {
                        (a.min(mp.dot(p)), b.max(mp.dot(p)))
                    });
                (s.normal, s.width(), hi - lo)
            }
            _ => (UnitDir { dx: 1.0, dy: 0.0 }, 1.0, 1.0),
        };
        let mp = m.perp();
        let mut dirs = Vec::with_capacity(2 * k);
        for j in 0..k {
            let phi = PI * j as f64 / k as f64;
            let d = UnitDir::from_vec(m.v() * (fm::cos(phi) / w) + mp.v() * (fm::sin(phi) / len))
                .unwrap_or_else(|| UnitDir::from_angle(phi));
            dirs.push(d);
            dirs.push(d.neg());
        }
        let ext = alloc::vec![None; dirs.len()];
        Ok(DirectionalCoreset {
            mode: CoresetMode::Kernel,
            dirs,
            ext,
            hull: Hull::empty(),
            tol,
        })
    }

    pub fn mode(&self) -> CoresetMode {
        self.mode
    }

    pub fn insert(&mut self, p: Point) {
        match self.mode {
            CoresetMode::Exact => {
                if !self.hull.contains(p, self.tol) {
                    self.hull = insert_hull_tol(&self.hull, p, self.tol).0;
                }
            }
            CoresetMode::Kernel => {
                let mut changed = false;
                for (d, e) in self.dirs.iter().zip(self.ext.iter_mut()) {
                    let s = d.dot(p);
                    if e.is_none_or(|(b, _)| s > b) {
                        *e = Some((s, p));
                        changed = true;
                    }
                }
                if changed {
                    let pts: Vec<Point> = self.ext.iter().flatten().map(|&(_, q)| q).collect();
                    self.hull = convex_hull_tol(&pts, self.tol).unwrap_or_else(|_| Hull::empty());
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hull.is_empty()
    }

    /// Hull of the kept points.
    pub fn hull(&self) -> &Hull {
        &self.hull
    }

    pub fn points(&self) -> &[Point] {
        self.hull.vertices()
    }

    pub fn directional_width(&self, d: UnitDir) -> f64 {
        if self.hull.is_empty() {
            return 0.0;
        }
        self.hull.support(d) + self.hull.support(d.neg())
    }
}

/// `cs` with `p` inserted.
pub fn coreset_insert(mut cs: DirectionalCoreset, p: Point) -> DirectionalCoreset {
    cs.insert(p);
    cs
}

/// Heap entry: distance from the support line, largest first.
struct Key(f64, Point);

impl PartialEq for Key {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.total_cmp(&o.0).then_with(|| o.1.lex_cmp(&self.1))
    }
}

#[derive(Clone, Copy, Debug)]
struct Cand {
    w: f64,
    s1: Strip,
    s2: Strip,
    n: UnitDir,
    base: f64,
    d: f64,
    theta: f64,
}

struct Sweeper<'a> {
    pts: &'a [Point],
    hull: Hull,
    tol: Tolerance,
    eps: f64,
    proto: DirectionalCoreset,
    examined: u64,
    sweeps: u64,
    far: Vec<Point>,
    cands: Vec<Cand>,
}

impl<'a> Sweeper<'a> {
    fn new(pts: &'a [Point], eps: f64, mode: CoresetMode, tol: Tolerance) -> Result<Self> {
        let hull = convex_hull_tol(pts, tol)?;
        let proto = match mode {
            CoresetMode::Exact => DirectionalCoreset::exact(tol),
            CoresetMode::Kernel => DirectionalCoreset::kernel(eps, pts, tol)?,
        };
        Ok(Sweeper {
            pts,
            hull,
            tol,
            eps,
            proto,
            examined: 0,
            sweeps: 0,
            far: Vec::new(),
            cands: Vec::new(),
        })
    }

    /// Strip normals that would make the second arm cut through or swallow
    /// the first: between the two edges of conv(P) that cross from the
    /// near points to the far ones, on the side away from `n`.
    fn forbidden(&self, n: UnitDir, base: f64, d: f64) -> AngularInterval {
        let v = self.hull.vertices();
        let h = v.len();
        let far = |p: Point| n.dot(p) - base > d;
        let mut ang = [0.0; 2];
        let mut k = 0;
        for i in 0..h {
            let (a, b) = (v[i], v[(i + 1) % h]);
            if far(a) != far(b) && k < 2 {
                if let Some(e) = UnitDir::from_vec((b - a).perp()) {
                    ang[k] = e.angle();
                    k += 1;
                }
            }
        }
        if k < 2 {
            return AngularInterval::EMPTY;
        }
        let iv = AngularInterval::between(ang[0], ang[1]);
        if iv.contains(n) {
            AngularInterval::between(ang[1], ang[0])
        } else {
            iv
        }
    }

    /// Candidates narrower than `bound` with the first arm along `theta`
    /// flush with the lower (or upper) support line.
    fn sweep(&mut self, theta: f64, upper: bool, bound: f64) {
        self.sweeps += 1;
        let mut n = UnitDir::from_angle(theta).perp();
        if upper {
            n = n.neg();
        }
        let base = -self.hull.support(n.neg());
        let mut window = Vec::new();
        self.far.clear();
        for &p in self.pts {
            let d = n.dot(p) - base;
            if d >= bound {
                self.far.push(p);
            } else {
                window.push(Key(d, p));
            }
        }
        let mut cs = self.proto.clone();
        match cs.mode {
            CoresetMode::Exact => {
                if !self.far.is_empty() {
                    cs.hull =
                        convex_hull_tol(&self.far, self.tol).unwrap_or_else(|_| Hull::empty());
                }
            }
            CoresetMode::Kernel => {
                for &p in &self.far {
                    cs.insert(p);
                }
            }
        }
        let mut heap = BinaryHeap::from(window);
        let grow = if cs.mode == CoresetMode::Kernel {
            1.0 + self.eps / 3.0
        } else {
            1.0
        };
        while let Some(top) = heap.peek() {
            let d = top.0;
            if !cs.is_empty() {
                if min_width_strip(cs.hull()).width() >= bound {
                    break;
                }
                self.examined += 1;
                let forb = self.forbidden(n, base, d);
                if let Ok(mut s2) = min_width_strip_constrained(cs.hull(), forb) {
                    if grow > 1.0 {
                        s2 = s2.with_width(s2.width() * grow);
                    }
                    let w = d.max(s2.width());
                    if w < bound {
                        let s1 = Strip::new(n, base, base + d);
                        self.cands.push(Cand {
                            w,
                            s1,
                            s2,
                            n,
                            base,
                            d,
                            theta,
                        });
                    }
                }
            }
            while let Some(t) = heap.peek() {
                if t.0 != d {
                    break;
                }
                let p = t.1;
                heap.pop();
                cs.insert(p);
            }
        }
    }

    fn realize(&self, c: &Cand) -> Option<VShape> {
        if let Ok(v) = strips_to_vshape(&c.s1, &c.s2, self.pts, self.tol) {
            return Some(v);
        }
        if self.proto.mode == CoresetMode::Kernel {
            // The kernel may have under-covered the far points.
            let far: Vec<Point> = self
                .pts
                .iter()
                .copied()
                .filter(|&p| c.n.dot(p) - c.base > c.d)
                .collect();
            let mut out: Option<VShape> = None;
            let mut keep = |v: VShape| {
                if out.as_ref().is_none_or(|o| v.width() < o.width()) {
                    out = Some(v);
                }
            };
            if let Ok(s2) = crate::geom::strip_through(c.s2.normal, &far) {
                let s2 = Strip {
                    lo: s2.lo.min(c.s2.lo),
                    hi: s2.hi.max(c.s2.hi),
                    ..s2
                };
                strips_to_vshape(&c.s1, &s2, self.pts, self.tol)
                    .map(&mut keep)
                    .ok();
            }
            let exact = convex_hull_tol(&far, self.tol)
                .and_then(|h| min_width_strip_constrained(&h, self.forbidden(c.n, c.base, c.d)));
            if let Ok(s2) = exact {
                strips_to_vshape(&c.s1, &s2, self.pts, self.tol)
                    .map(&mut keep)
                    .ok();
            }
            return out;
        }
        None
    }

    /// Tries both support lines for `theta`; returns whether `best`
    /// improved.
    fn direction(&mut self, theta: f64, best: &mut Option<(VShape, f64)>, bound: &mut f64) -> bool {
        self.cands.clear();
        self.sweep(theta, false, *bound);
        self.sweep(theta, true, *bound);
        let mut cands = core::mem::take(&mut self.cands);
        cands.sort_by(|a, b| a.w.total_cmp(&b.w));
        let mut improved = false;
        for c in &cands {
            if c.w >= *bound {
                break;
            }
            if let Some(v) = self.realize(c) {
                let w = v.width();
                if w < *bound {
                    *bound = w;
                    *best = Some((v, c.theta));
                    improved = true;
                }
            }
        }
        self.cands = cands;
        improved
    }
}

/// Narrowest covering V found with one arm along `theta`; with the exact
/// coreset this is the narrowest such V.
pub fn solve_fixed_direction(
    pts: &[Point],
    theta: f64,
    eps: f64,
    coreset: CoresetMode,
) -> Result<VShape> {
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter("eps must be positive"));
    }
    let world = dedup_points(pts);
    if world.len() < 5 {
        return Err(Error::InvalidParameter(
            "need at least five distinct points",
        ));
    }
    let frame = Frame::fit(&world);
    let local = frame.map_in(&world);
    let tol = Tolerance::new(DEFAULT_TAU);
    let mut sw = Sweeper::new(&local, eps.min(3.0), coreset, tol)?;
    let mut best = None;
    let mut bound = f64::INFINITY;
    sw.direction(theta, &mut best, &mut bound);
    best.map(|(v, _)| v.to_world(&frame))
        .ok_or(Error::NoCandidate)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PtasOptions {
    pub anchor_mode: AnchorMode,
    pub coreset: CoresetMode,
    /// Approximation factor `g` of `w_apx`; the fan uses `w_apx / g` as the
    /// lower width bound.
    pub apx_guarantee: f64,
    /// Local search on the best arm direction after the fan.
    pub polish: bool,
    /// Size of the subset whose exact optimum serves as a second lower
    /// bound on the width; 0 turns it off.
    pub lower_bound_sample: usize,
}

impl Default for PtasOptions {
    fn default() -> Self {
        PtasOptions {
            anchor_mode: AnchorMode::AllPairs,
            coreset: CoresetMode::Exact,
            apx_guarantee: 3.0,
            polish: true,
            lower_bound_sample: 512,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PtasReport {
    pub report: SolveReport,
    pub eps: f64,
    pub anchors: usize,
    /// Arm directions in all fans.
    pub directions: usize,
    pub sweeps: u64,
}

/// `(1 + eps)`-approximate minimum-width covering V-shape, given the
/// width `w_apx` of a covering V within `opts.apx_guarantee` of optimal.
pub fn solve_ptas(pts: &[Point], eps: f64, w_apx: f64, opts: &PtasOptions) -> Result<PtasReport> {
    solve_ptas_with_anchors(pts, eps, w_apx, opts, None)
}

/// [`solve_ptas`] over the given anchor pairs instead of those of
/// `opts.anchor_mode`. Splitting the pairs and keeping the narrowest
/// result is the same as one run over all of them.
pub fn solve_ptas_with_anchors(
    pts: &[Point],
    eps: f64,
    w_apx: f64,
    opts: &PtasOptions,
    anchors: Option<&[AnchorCandidate]>,
) -> Result<PtasReport> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter("eps must be positive"));
    }
    if !(w_apx >= 0.0) || !w_apx.is_finite() || !(opts.apx_guarantee >= 1.0) {
        return Err(Error::InvalidParameter(
            "w_apx must be finite and nonnegative, the guarantee at least 1",
        ));
    }
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidParameter("non-finite coordinate"));
    }
    let world = dedup_points(pts);
    if world.is_empty() {
        return Err(Error::EmptyInput);
    }
    let wrap = |report: SolveReport, anchors, directions, sweeps| PtasReport {
        report,
        eps,
        anchors,
        directions,
        sweeps,
    };
    let frame = Frame::fit(&world);
    let local = frame.map_in(&world);
    let tol = Tolerance::new(DEFAULT_TAU);
    if local.len() == 1 {
        let mut r = degenerate_report(&local, UnitDir { dx: 1.0, dy: 0.0 });
        r.best = r.best.to_world(&frame);
        return Ok(wrap(r, 0, 0, 0));
    }
    if let Some(line) = all_collinear(&local, tol) {
        let mut r = degenerate_report(&local, line.dir());
        r.best = r.best.to_world(&frame);
        return Ok(wrap(r, 0, 0, 0));
    }
    // Rotating an arm needs eps <= 3 for (1 + eps/3)^2 <= 1 + eps.
    let eps_run = eps.min(3.0);
    let w_hi = w_apx / frame.scale;
    let mut w_lo = w_hi / opts.apx_guarantee;
    if opts.lower_bound_sample >= 5 && w_lo > 0.0 {
        // Any subset is covered by the optimal V of the whole set.
        let sub = subset(&local, opts.lower_bound_sample);
        if let Ok(r) =
            crate::exact_solver::solve_exact(&sub, &crate::exact_solver::SolveOptions::default())
        {
            w_lo = w_lo.max(r.width / frame.scale * (1.0 - 1e-9)).min(w_hi);
        }
    }
    let anchors = match anchors {
        Some(a) => a
            .iter()
            .map(|a| AnchorCandidate {
                p: frame.to_local(a.p),
                q: frame.to_local(a.q),
            })
            .collect(),
        None => candidate_anchor_pairs(&local, opts.anchor_mode),
    };
    let mut sw = Sweeper::new(&local, eps_run, opts.coreset, tol)?;
    let mut fans: Vec<(f64, DirectionGrid)> = Vec::with_capacity(anchors.len());
    for a in &anchors {
        let d = a.p.dist(a.q);
        if !(d > 0.0) {
            continue;
        }
        let grid = if w_lo > 0.0 {
            let (beta, gamma) = beta_gamma(eps_run, w_lo, w_hi, d)?;
            DirectionGrid::new(a.theta(), beta, gamma)?
        } else {
            // Zero width: the arm runs exactly along an anchor pair.
            DirectionGrid {
                beta: 0.0,
                gamma: 0.0,
                thetas: alloc::vec![a.theta()],
            }
        };
        fans.push((d, grid));
    }
    let directions = fans.iter().map(|(_, g)| g.thetas.len()).sum();
    // A V within (1 + eps/3) of optimal is at most this wide.
    let cap = (1.0 + eps_run) * w_hi + 1e-9;
    let mut best: Option<(VShape, f64)> = None;
    let mut step = 0.0f64;
    for pass_bound in [cap, f64::INFINITY] {
        let mut bound = pass_bound;
        for (_, g) in &fans {
            for &t in &g.thetas {
                if sw.direction(t, &mut best, &mut bound) {
                    step = g.beta;
                }
            }
        }
        if best.is_some() {
            break;
        }
    }
    let (_, mut theta) = best.ok_or(Error::NoCandidate)?;
    if opts.polish {
        let mut bound = best.as_ref().map_or(f64::INFINITY, |b| b.0.width());
        let mut step = if step > 0.0 { step } else { 1e-3 };
        let mut evals = 0;
        while step > 1e-12 && evals < 400 {
            let mut moved = false;
            for t in [theta + step, theta - step] {
                evals += 1;
                if sw.direction(t, &mut best, &mut bound) {
                    theta = t;
                    moved = true;
                    break;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
    }
    let (v, _) = best.ok_or(Error::NoCandidate)?;
    if !v.covers(&local, tol) {
        return Err(Error::Internal("approximate V-shape misses a point"));
    }
    let best = v.to_world(&frame);
    let width = frame.len_to_world(v.width());
    let wtol = Tolerance::new(DEFAULT_TAU * frame.scale.max(f64::MIN_POSITIVE));
    let report = SolveReport {
        best,
        width,
        canonical_type: classify(&best, &world, wtol),
        candidates_examined: sw.examined,
        optima: None,
        degenerate: false,
    };
    Ok(wrap(report, anchors.len(), directions, sw.sweeps))
}

/// Hull vertices plus an evenly strided sample, about `m` points.
fn subset(pts: &[Point], m: usize) -> Vec<Point> {
    if pts.len() <= m {
        return pts.to_vec();
    }
    let mut out: Vec<Point> = match convex_hull_tol(pts, Tolerance::new(DEFAULT_TAU)) {
        Ok(h) => {
            let v = h.vertices();
            let stride = v.len().div_ceil(m / 2).max(1);
            v.iter().step_by(stride).copied().collect()
        }
        Err(_) => Vec::new(),
    };
    let rest = m.saturating_sub(out.len()).max(1);
    out.extend(pts.iter().step_by(pts.len().div_ceil(rest)).copied());
    dedup_points(&out)
}

/// Width of the narrowest strip containing `B ∩ V` whose normal is the
/// left arm's normal rotated by `alpha`. `B` is the shortest piece of the
/// left arm strip that holds the points of `pts` lying in that strip.
pub fn rotated_strip_width(v: &VShape, pts: &[Point], alpha: f64, tol: Tolerance) -> Option<f64> {
    let (s1, _) = v.strips();
    let u = s1.normal.perp();
    let (mut a, mut b) = (f64::INFINITY, f64::NEG_INFINITY);
    for &p in pts.iter().filter(|&&p| s1.contains(p, tol)) {
        a = a.min(u.dot(p));
        b = b.max(u.dot(p));
    }
    if a > b {
        return None;
    }
    let corner = |s: f64, t: f64| s1.normal.v() * s + u.v() * t;
    let rect = [
        corner(s1.lo, a),
        corner(s1.hi, a),
        corner(s1.hi, b),
        corner(s1.lo, b),
    ];
    // Inside the left strip V is cut only by the right arm's outer line.
    let (_, nr) = v.inward_normals();
    let c = nr.dot(v.apex_outer);
    let mut poly: Vec<Point> = Vec::with_capacity(6);
    for i in 0..4 {
        let (p, q) = (rect[i], rect[(i + 1) % 4]);
        let (fp, fq) = (nr.dot(p) - c, nr.dot(q) - c);
        if fp >= 0.0 {
            poly.push(p);
        }
        if (fp >= 0.0) != (fq >= 0.0) {
            poly.push(p + (q - p) * (fp / (fp - fq)));
        }
    }
    let m = s1.normal.rotate(alpha);
    let (lo, hi) = poly
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &p| {
            (l.min(m.dot(p)), h.max(m.dot(p)))
        });
    Some(if hi >= lo { hi - lo } else { 0.0 })
}
