//! Exact minimum-width V-shape: three case solvers (both-outer,
//! inner-outer, both-inner) and the driver [`solve_exact`].
//!
//! Every candidate the case solvers assemble covers the input by
//! construction; coverage is still re-checked, lazily, whenever a
//! candidate would become the incumbent or join the optima list.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::{
    all_collinear, dedup_points, orient, Frame, Point, Tolerance, UnitDir, DEFAULT_TAU,
};
use crate::hull::{
    convex_hull, insert_hull, FilterScanIndex, HalfPlane, HalfplaneExtremeIndex, Hull,
};
use crate::oracle::{brute_force_optimum_with_limit, TAU_OPT};
use crate::vshape::{classify, is_canonical, tilted_parallel_vshape, CanonicalType, VShape, Wedge};

/// Normals closer to parallel than this are treated as parallel.
const PARALLEL_EPS: f64 = 1e-12;

/// Which halfplane-extreme index the both-outer case queries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexTier {
    /// Filter-and-scan, linear per query.
    #[default]
    Scan,
    /// Persistent hulls over the dual arrangement. Not built; selecting
    /// it is an error.
    Persistent,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Widen the narrower arm of the result to the wider one.
    pub balanced: bool,
    /// Collect every candidate within [`TAU_OPT`] of the optimum.
    pub enumerate_optima: bool,
    pub index_tier: IndexTier,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub best: VShape,
    pub width: f64,
    pub canonical_type: CanonicalType,
    pub candidates_examined: u64,
    pub optima: Option<Vec<VShape>>,
    /// Set when the input is all collinear (or has fewer than two
    /// distinct points) and the result is a zero-width ray.
    pub degenerate: bool,
}

/// Running minimum over candidates.
struct Collector<'a> {
    pts: &'a [Point],
    tol: Tolerance,
    keep_optima: bool,
    width: f64,
    best: Option<VShape>,
    optima: Vec<VShape>,
    examined: u64,
}

impl<'a> Collector<'a> {
    fn new(pts: &'a [Point], tol: Tolerance, keep_optima: bool) -> Self {
        Collector {
            pts,
            tol,
            keep_optima,
            width: f64::INFINITY,
            best: None,
            optima: Vec::new(),
            examined: 0,
        }
    }

    /// Upper bound used for pruning: candidates wider than this can't matter.
    fn bound(&self) -> f64 {
        if self.keep_optima {
            self.width + TAU_OPT
        } else {
            self.width
        }
    }

    fn offer(&mut self, v: VShape) {
        self.examined += 1;
        let w = v.width();
        if !w.is_finite() || w > self.bound() {
            return;
        }
        let improves = match &self.best {
            None => true,
            Some(b) => w < self.width || (w == self.width && v.apex_cmp(b).is_lt()),
        };
        if !improves && !self.keep_optima {
            return;
        }
        if !v.covers(self.pts, self.tol) {
            return;
        }
        if improves {
            self.best = Some(v);
            self.width = w;
        }
        if self.keep_optima {
            let cut = self.width + TAU_OPT;
            self.optima.retain(|o| o.width() <= cut);
            if !self.optima.iter().any(|o| o.approx_eq(&v, 1e-9)) {
                self.optima.push(v);
            }
        }
    }

    /// Offer a candidate that already passed the coverage check.
    fn offer_checked(&mut self, v: VShape) {
        let w = v.width();
        if w > self.bound() {
            return;
        }
        let improves = match &self.best {
            None => true,
            Some(b) => w < self.width || (w == self.width && v.apex_cmp(b).is_lt()),
        };
        if improves {
            self.best = Some(v);
            self.width = w;
        }
        if self.keep_optima {
            let cut = self.width + TAU_OPT;
            self.optima.retain(|o| o.width() <= cut);
            if !self.optima.iter().any(|o| o.approx_eq(&v, 1e-9)) {
                self.optima.push(v);
            }
        }
    }

    /// Report; among ties, a canonical witness is preferred as `best`.
    /// The exposed optima are the canonical ties, including slides of the
    /// slack arm; if there are none, the raw ties.
    fn into_report(self, expose_optima: bool) -> Result<SolveReport> {
        let (pts, tol) = (self.pts, self.tol);
        let mut best = self.best.ok_or(Error::NoCandidate)?;
        let mut ties = self.optima;
        ties.sort_by(|a, b| a.width().total_cmp(&b.width()).then(a.apex_cmp(b)));
        let mut canon: Vec<VShape> = Vec::new();
        if expose_optima {
            for v in &ties {
                let mut more = canonical_slides(v, pts, tol, false);
                if is_canonical(v, pts, tol).0 {
                    more.push(*v);
                }
                for c in more {
                    if !canon.iter().any(|o| o.approx_eq(&c, 1e-9)) {
                        canon.push(c);
                    }
                }
            }
            canon.sort_by(|a, b| a.width().total_cmp(&b.width()).then(a.apex_cmp(b)));
        }
        if !is_canonical(&best, pts, tol).0 {
            let found = ties
                .iter()
                .find(|v| is_canonical(v, pts, tol).0)
                .copied()
                .or_else(|| canon.first().copied())
                .or_else(|| {
                    core::iter::once(&best)
                        .chain(ties.iter())
                        .find_map(|v| canonical_slides(v, pts, tol, true).pop())
                });
            if let Some(c) = found {
                best = c;
            }
        }
        Ok(SolveReport {
            canonical_type: classify(&best, pts, tol),
            width: best.width(),
            best,
            candidates_examined: self.examined,
            optima: expose_optima.then_some(if canon.is_empty() { ties } else { canon }),
            degenerate: false,
        })
    }
}

/// Moving the narrower arm's inner line, up to the wider arm's width,
/// keeps the width. Returns the canonical V-shapes among the stops where
/// that inner ray meets a point (nearest stops first).
fn canonical_slides(v: &VShape, pts: &[Point], tol: Tolerance, first_only: bool) -> Vec<VShape> {
    let w = v.widths();
    let (d, narrow, slack, left) = if w.left < w.right {
        (v.dir_left, w.left, w.right - w.left, true)
    } else {
        (v.dir_right, w.right, w.left - w.right, false)
    };
    let mut out = Vec::new();
    if slack <= tol.tau {
        return out;
    }
    let x = v.apex_inner;
    let side = if d.v().cross(v.apex_outer - x) < 0.0 {
        1.0
    } else {
        -1.0
    };
    let mut stops: Vec<f64> = pts
        .iter()
        .map(|&p| side * d.v().cross(p - x))
        .filter(|&s| s.abs() > tol.tau && s >= -narrow && s <= slack + tol.tau)
        .map(|s| s.min(slack))
        .collect();
    stops.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    stops.dedup();
    for s in stops {
        let c = if left {
            v.offset_lines(0.0, 0.0, s, 0.0)
        } else {
            v.offset_lines(0.0, 0.0, 0.0, s)
        };
        if is_canonical(&c, pts, tol).0 && c.covers(pts, tol) {
            out.push(c);
            if first_only {
                break;
            }
        }
    }
    out
}

pub(crate) fn scaled_tol(pts: &[Point]) -> Tolerance {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let d = (hi - lo).norm();
    Tolerance::new(DEFAULT_TAU * if d > 0.0 { d } else { 1.0 })
}

/// Inward unit normal of the counterclockwise hull edge `a -> b`.
fn inward_normal(a: Point, b: Point) -> Option<UnitDir> {
    UnitDir::from_vec((b - a).perp())
}

fn both_outer_into<I: HalfplaneExtremeIndex + ?Sized>(
    hull: &Hull,
    idx: &I,
    tol: Tolerance,
    col: &mut Collector<'_>,
) {
    let edges: Vec<(Point, Point, UnitDir)> = hull
        .edges()
        .filter_map(|(a, b)| inward_normal(a, b).map(|n| (a, b, n)))
        .collect();
    for (i, &(a1, b1, n1)) in edges.iter().enumerate() {
        for &(a2, b2, n2) in &edges[i + 1..] {
            if n1.cross(n2).abs() <= PARALLEL_EPS {
                continue;
            }
            let c1 = n1.dot(a1);
            let c2 = n2.dot(a2);
            let Some(probe) = VShape::from_outer_lines(n1, c1, 0.0, n2, c2, 0.0) else {
                continue;
            };
            let y = probe.apex_outer;
            // Each edge must lie on its ray from y.
            let along = |n: UnitDir, other: UnitDir, p: Point| {
                let mut u = n.perp();
                if other.dot(u.v()) < 0.0 {
                    u = u.neg();
                }
                u.dot(p - y) >= -tol.tau
            };
            if !(along(n1, n2, a1) && along(n1, n2, b1) && along(n2, n1, a2) && along(n2, n1, b2)) {
                continue;
            }
            // Bisector split: d1 <= d2 goes to arm 1.
            let Some(m) = UnitDir::from_vec(n2.v() - n1.v()) else {
                continue;
            };
            let h1 = HalfPlane::new(m, m.dot(y));
            let h2 = HalfPlane::new(m.neg(), -m.dot(y));
            let w1 = idx
                .extreme(&h1, n1)
                .map_or(0.0, |p| (n1.dot(p) - c1).max(0.0));
            let w2 = idx
                .extreme(&h2, n2)
                .map_or(0.0, |p| (n2.dot(p) - c2).max(0.0));
            if let Some(v) = VShape::from_outer_lines(n1, c1, w1, n2, c2, w2) {
                col.offer(v);
            }
        }
    }
}

/// Best V-shape whose outer rays contain two hull edges.
pub fn solve_both_outer<I: HalfplaneExtremeIndex + ?Sized>(
    pts: &[Point],
    idx: &I,
) -> Result<SolveReport> {
    let pts = dedup_points(pts);
    let tol = scaled_tol(&pts);
    let hull = convex_hull(&pts)?;
    let mut col = Collector::new(&pts, tol, false);
    both_outer_into(&hull, idx, tol, &mut col);
    col.into_report(false)
}

#[derive(Clone, Copy, Debug)]
struct HeapKey {
    key: f64,
    edge: (Point, Point),
}

impl PartialEq for HeapKey {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for HeapKey {}
impl PartialOrd for HeapKey {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for HeapKey {
    // Reversed so the std max-heap pops the smallest key.
    fn cmp(&self, o: &Self) -> Ordering {
        o.key
            .total_cmp(&self.key)
            .then_with(|| edge_bits(o.edge).cmp(&edge_bits(self.edge)))
    }
}

fn edge_bits(e: (Point, Point)) -> [u64; 4] {
    [
        e.0.x.to_bits(),
        e.0.y.to_bits(),
        e.1.x.to_bits(),
        e.1.y.to_bits(),
    ]
}

/// Statistics of one inner-outer sweep, for tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub heap_pushes: usize,
}

fn inner_outer_into(
    pts: &[Point],
    hull: &Hull,
    tol: Tolerance,
    col: &mut Collector<'_>,
    stats: &mut Vec<SweepStats>,
    reverse_ties: bool,
) {
    let n = pts.len();
    let edges: Vec<(Point, Point, UnitDir)> = hull
        .edges()
        .filter_map(|(a, b)| inward_normal(a, b).map(|nn| (a, b, nn)))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    for &(ea, _eb, nrm) in &edges {
        let c1 = nrm.dot(ea);
        let dist = |p: Point| nrm.dot(p) - c1;
        // Decreasing distance, ties broken lexicographically.
        order.sort_by(|&i, &j| {
            let t = pts[i].lex_cmp(&pts[j]);
            dist(pts[j])
                .total_cmp(&dist(pts[i]))
                .then(if reverse_ties { t.reverse() } else { t })
        });
        if n < 3 {
            continue;
        }
        // Both arms parallel to e, split by a threshold: only reachable as
        // a limit of tilted V-shapes, and only better on inputs with
        // parallel point pairs.
        let top = dist(pts[order[0]]);
        for k in 1..n {
            let (hi, lo) = (dist(pts[order[k - 1]]), dist(pts[order[k]]));
            if hi <= lo {
                continue;
            }
            let w = lo.max(top - hi);
            if w < col.width - TAU_OPT || (col.keep_optima && w <= col.bound()) {
                let a: Vec<Point> = order[k..].iter().map(|&i| pts[i]).collect();
                let b: Vec<Point> = order[..k].iter().map(|&i| pts[i]).collect();
                col.examined += 1;
                if let Some(v) = tilted_parallel_vshape(nrm, &a, &b, pts, tol) {
                    col.offer_checked(v);
                }
            }
        }
        let mut st = SweepStats::default();
        let mut qh = Hull::empty();
        let mut alive: BTreeSet<[u64; 4]> = BTreeSet::new();
        let mut heap: BinaryHeap<HeapKey> = BinaryHeap::new();
        let add_edges = |es: &[(Point, Point)],
                         alive: &mut BTreeSet<[u64; 4]>,
                         heap: &mut BinaryHeap<HeapKey>,
                         st: &mut SweepStats| {
            for &(p1, p2) in es {
                // Outward normal of the counterclockwise edge of conv(Q').
                let Some(u) = UnitDir::from_vec(p2 - p1).map(|d| d.perp().neg()) else {
                    continue;
                };
                if u.cross(nrm).abs() <= PARALLEL_EPS && u.dot(nrm.v()) > 0.0 {
                    // Same normal as the fixed outer line: no V.
                    continue;
                }
                let key = u.dot(p1) + hull.support(u.neg());
                alive.insert(edge_bits((p1, p2)));
                heap.push(HeapKey {
                    key: key.max(0.0),
                    edge: (p1, p2),
                });
                st.heap_pushes += 1;
            }
        };
        for (k, &qi) in order.iter().enumerate() {
            let q = pts[qi];
            if k >= 2 {
                // Q' = order[..k], Q = order[k..], threshold at q.
                let w1 = dist(q).max(0.0);
                while let Some(top) = heap.peek() {
                    if alive.contains(&edge_bits(top.edge)) {
                        break;
                    }
                    heap.pop();
                }
                if let Some(&top) = heap.peek() {
                    if w1.max(top.key) <= col.bound() {
                        // With ties tracked, every live edge within the bound
                        // is a candidate, not just the minimum.
                        let picks: Vec<HeapKey> = if col.keep_optima {
                            heap.iter()
                                .filter(|h| {
                                    h.key <= col.bound() && alive.contains(&edge_bits(h.edge))
                                })
                                .copied()
                                .collect()
                        } else {
                            alloc::vec![top]
                        };
                        for pick in picks {
                            let (p1, p2) = pick.edge;
                            let u = UnitDir::from_vec(p2 - p1).map(|d| d.perp().neg()).unwrap();
                            if u.cross(nrm).abs() <= PARALLEL_EPS {
                                // Inner line of the other arm parallel to the
                                // fixed outer line: realize the split tilted.
                                let a: Vec<Point> = order[k..].iter().map(|&i| pts[i]).collect();
                                let b: Vec<Point> = order[..k].iter().map(|&i| pts[i]).collect();
                                col.examined += 1;
                                if let Some(v) = tilted_parallel_vshape(nrm, &a, &b, pts, tol) {
                                    col.offer_checked(v);
                                }
                            } else {
                                let c2 = -hull.support(u.neg());
                                if let Some(v) =
                                    VShape::from_outer_lines(nrm, c1, w1, u, c2, pick.key)
                                {
                                    col.offer(v);
                                }
                            }
                        }
                    }
                }
                if w1 <= 0.0 {
                    break;
                }
            }
            let (nh, delta) = insert_hull(&qh, q);
            for e in &delta.removed_edges {
                alive.remove(&edge_bits(*e));
            }
            add_edges(&delta.added_edges, &mut alive, &mut heap, &mut st);
            qh = nh;
        }
        stats.push(st);
    }
}

/// Best V-shape with a hull edge on one outer ray and two points on the
/// other arm's inner ray.
pub fn solve_inner_outer(pts: &[Point]) -> Result<SolveReport> {
    solve_inner_outer_with_stats(pts).map(|(r, _)| r)
}

/// [`solve_inner_outer`] plus per-edge sweep statistics.
pub fn solve_inner_outer_with_stats(pts: &[Point]) -> Result<(SolveReport, Vec<SweepStats>)> {
    let pts = dedup_points(pts);
    let tol = scaled_tol(&pts);
    let hull = convex_hull(&pts)?;
    let mut col = Collector::new(&pts, tol, false);
    let mut stats = Vec::new();
    inner_outer_into(&pts, &hull, tol, &mut col, &mut stats, false);
    Ok((col.into_report(false)?, stats))
}

/// Calls `f(a, b, c, d)` for every empty wedge whose first inner line
/// `ab` has outer extent at most `bound`. `a -> b` has the notch on its
/// left; `c -> d` runs counterclockwise as seen from `a`.
///
/// Around each `a` the window of points left of `a -> b` slides with `b`.
/// Its near chain (the part of its hull facing `a`) is the merge of a
/// front part, scanned backwards once with parent links, and a back part
/// kept as a Graham stack; only chain vertices are touched per query.
fn for_each_wedge(
    pts: &[Point],
    hull: &Hull,
    tol: Tolerance,
    bound: &mut dyn FnMut() -> f64,
    f: &mut dyn FnMut(Point, Point, Point, Point, f64),
) {
    const NONE: usize = usize::MAX;
    let n = pts.len();
    let mut around: Vec<(f64, f64, usize)> = Vec::with_capacity(n);
    let mut cang: Vec<f64> = Vec::with_capacity(n);
    let mut ext: Vec<Point> = Vec::with_capacity(2 * n);
    let mut parent: Vec<usize> = Vec::with_capacity(2 * n);
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut chain: Vec<Point> = Vec::with_capacity(n);
    // Pops while x, y, z fails to turn right (seen in angular order).
    let bad = |x: Point, y: Point, z: Point| orient(x, y, z) >= -tol.tau * z.dist(x);
    for &a in pts {
        let others: Vec<Point> = pts.iter().copied().filter(|&p| p != a).collect();
        around.clear();
        for (k, &p) in others.iter().enumerate() {
            let d = p - a;
            around.push((crate::geom::fm::atan2(d.y, d.x), d.dot(d), k));
        }
        around.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
        // Chain candidates: farther points on the same ray from a are hidden.
        cang.clear();
        ext.clear();
        for &(ang, _, j) in &around {
            if cang.last() == Some(&ang) {
                continue;
            }
            cang.push(ang);
            ext.push(others[j]);
        }
        let mc = ext.len();
        ext.extend_from_within(..);
        parent.clear();
        parent.resize(2 * mc, NONE);
        stack.clear();
        let (mut lo, mut e, mut piv, mut next) = (0usize, 0usize, 0usize, 0usize);
        for &(ang_b, _, jb) in &around {
            let b = others[jb];
            let Some(dir) = UnitDir::from_vec(b - a) else {
                continue;
            };
            let n1 = dir.perp();
            while lo < mc && cang[lo] < ang_b {
                lo += 1;
            }
            let limit = lo + mc;
            let side = |p: Point| n1.dot(p - a);
            let mut s = lo;
            // Skip points on the line through a and b, ahead of a.
            while s < limit && side(ext[s]).abs() <= tol.tau && dir.dot(ext[s] - a) > 0.0 {
                s += 1;
            }
            e = e.max(s);
            while e < limit && side(ext[e]) > tol.tau {
                e += 1;
            }
            if e < s + 2 {
                continue;
            }
            // Arm-1 width: extent of P on the right of a -> b.
            let w1 = n1.dot(a) + hull.support(n1.neg());
            if w1 > bound() {
                continue;
            }
            if s >= piv {
                // Front part exhausted: rescan the whole window backwards.
                piv = e;
                next = e;
                stack.clear();
                for k in (s..e).rev() {
                    while stack.len() >= 2
                        && bad(
                            ext[k],
                            ext[stack[stack.len() - 1]],
                            ext[stack[stack.len() - 2]],
                        )
                    {
                        stack.pop();
                    }
                    parent[k] = stack.last().copied().unwrap_or(NONE);
                    stack.push(k);
                }
                stack.clear();
            } else {
                for k in next..e {
                    while stack.len() >= 2
                        && bad(
                            ext[stack[stack.len() - 2]],
                            ext[stack[stack.len() - 1]],
                            ext[k],
                        )
                    {
                        stack.pop();
                    }
                    stack.push(k);
                }
                next = e;
            }
            chain.clear();
            let push = |p: Point, chain: &mut Vec<Point>| {
                while chain.len() >= 2 && bad(chain[chain.len() - 2], chain[chain.len() - 1], p) {
                    chain.pop();
                }
                chain.push(p);
            };
            let mut k = s;
            while k != NONE {
                push(ext[k], &mut chain);
                k = parent[k];
            }
            for &k in &stack {
                push(ext[k], &mut chain);
            }
            for w in chain.windows(2) {
                let (c, d) = (w[0], w[1]);
                let len = c.dist(d);
                if orient(c, d, a) <= tol.tau * len || orient(c, d, b) <= tol.tau * len {
                    continue;
                }
                f(a, b, c, d, w1);
            }
        }
    }
}

/// The V-shape of an empty wedge: inner lines `ab` and `cd` with the notch
/// left of `a -> b` and on the `a` side of `cd`.
fn wedge_vshape(hull: &Hull, a: Point, b: Point, c: Point, d: Point) -> Option<VShape> {
    let n1 = UnitDir::from_vec((b - a).perp())?;
    let mut n2 = UnitDir::from_vec((d - c).perp())?;
    if n2.dot(a - c) < 0.0 {
        n2 = n2.neg();
    }
    if n1.cross(n2).abs() <= PARALLEL_EPS {
        return None;
    }
    let c1 = -hull.support(n1.neg());
    let c2 = -hull.support(n2.neg());
    VShape::from_outer_lines(
        n1,
        c1,
        (n1.dot(a) - c1).max(0.0),
        n2,
        c2,
        (n2.dot(c) - c2).max(0.0),
    )
}

/// All empty wedges: `a, b` on one inner ray and `c, d` on the other, with
/// no point strictly inside the wedge between them. The index is accepted
/// for interface parity; hulls of `Q(a, b)` are built by an angular scan.
pub fn enumerate_empty_wedges<I: HalfplaneExtremeIndex + ?Sized>(
    pts: &[Point],
    idx: &I,
) -> Vec<Wedge> {
    let _ = idx;
    let pts = dedup_points(pts);
    let mut out = Vec::new();
    if pts.len() < 4 {
        return out;
    }
    let Ok(hull) = convex_hull(&pts) else {
        return out;
    };
    let tol = scaled_tol(&pts);
    for_each_wedge(
        &pts,
        &hull,
        tol,
        &mut || f64::INFINITY,
        &mut |a, b, c, d, _| out.push(Wedge { a, b, c, d }),
    );
    out
}

fn both_inner_into(pts: &[Point], hull: &Hull, tol: Tolerance, col: &mut Collector<'_>) {
    let col = core::cell::RefCell::new(col);
    for_each_wedge(
        pts,
        hull,
        tol,
        &mut || col.borrow().bound(),
        &mut |a, b, c, d, w1| {
            let mut cl = col.borrow_mut();
            if w1 > cl.bound() {
                return;
            }
            if let Some(v) = wedge_vshape(hull, a, b, c, d) {
                cl.offer(v);
            } else {
                cl.examined += 1;
            }
        },
    );
}

/// Best V-shape with two points on each inner ray.
pub fn solve_both_inner<I: HalfplaneExtremeIndex + ?Sized>(
    pts: &[Point],
    idx: &I,
) -> Result<SolveReport> {
    let _ = idx;
    let pts = dedup_points(pts);
    let tol = scaled_tol(&pts);
    let hull = convex_hull(&pts)?;
    let mut col = Collector::new(&pts, tol, false);
    both_inner_into(&pts, &hull, tol, &mut col);
    col.into_report(false)
}

pub(crate) fn degenerate_report(pts: &[Point], dir: UnitDir) -> SolveReport {
    // Zero-width ray from the extreme point backwards along the line.
    let start = pts
        .iter()
        .copied()
        .min_by(|p, q| dir.dot(*p).total_cmp(&dir.dot(*q)).then(p.lex_cmp(q)))
        .unwrap();
    let v = VShape {
        apex_inner: start,
        apex_outer: start,
        dir_left: dir,
        dir_right: dir,
    };
    SolveReport {
        best: v,
        width: 0.0,
        canonical_type: CanonicalType::BothOuter,
        candidates_examined: 0,
        optima: None,
        degenerate: true,
    }
}

/// Minimum-width covering V-shape.
///
/// Inputs with fewer than five distinct points, or all collinear, are
/// handled directly; the rest run the three case solvers in a frame where
/// the bounding box has diameter one.
pub fn solve_exact(pts: &[Point], opts: &SolveOptions) -> Result<SolveReport> {
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidParameter("non-finite coordinate"));
    }
    let world = dedup_points(pts);
    if world.is_empty() {
        return Err(Error::EmptyInput);
    }
    let frame = Frame::fit(&world);
    let local = frame.map_in(&world);
    let tol = Tolerance::new(DEFAULT_TAU);

    if local.len() == 1 {
        let mut r = degenerate_report(&local, UnitDir::new(1.0, 0.0).unwrap());
        r.best = r.best.to_world(&frame);
        return Ok(r);
    }
    if let Some(line) = all_collinear(&local, tol) {
        let mut r = degenerate_report(&local, line.dir());
        r.best = r.best.to_world(&frame);
        if opts.enumerate_optima {
            r.optima = Some(alloc::vec![r.best]);
        }
        return Ok(r);
    }

    // Ties are always tracked so a canonical optimum can be preferred.
    let mut col = Collector::new(&local, tol, true);
    if local.len() < 5 {
        let o = brute_force_optimum_with_limit(&local, 4)?;
        for v in o.witnesses {
            col.offer(v);
        }
    } else {
        let hull = convex_hull(&local)?;
        match opts.index_tier {
            IndexTier::Scan => {
                let idx = FilterScanIndex::new(&local, tol)?;
                both_outer_into(&hull, &idx, tol, &mut col);
            }
            IndexTier::Persistent => {
                return Err(Error::InvalidParameter(
                    "index tier 2 is not available in this build",
                ));
            }
        }
        let mut stats = Vec::new();
        inner_outer_into(&local, &hull, tol, &mut col, &mut stats, false);
        if opts.enumerate_optima {
            // Points tied in distance to the fixed outer line may go to
            // either arm; the mirrored tie order finds the other choices.
            inner_outer_into(&local, &hull, tol, &mut col, &mut stats, true);
        }
        both_inner_into(&local, &hull, tol, &mut col);
    }
    let mut rep = col.into_report(opts.enumerate_optima)?;
    if opts.balanced {
        rep.best = rep.best.balance();
        if let Some(o) = rep.optima.as_mut() {
            for v in o.iter_mut() {
                *v = v.balance();
            }
        }
    }
    rep.best = rep.best.to_world(&frame);
    rep.width = frame.len_to_world(rep.width);
    if let Some(o) = rep.optima.as_mut() {
        for v in o.iter_mut() {
            *v = v.to_world(&frame);
        }
    }
    Ok(rep)
}
