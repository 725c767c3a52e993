//! Exact minimum-width V-shape for points lying on two crossing lines.
//!
//! Every candidate comes from a split line: the points on each side span
//! a hull with at most four vertices, and each arm runs along an edge of
//! its side's hull or along an outer common tangent of the two hulls.
//! Four families of split lines suffice; see [`min_vshape_two_lines`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact_solver::{degenerate_report, scaled_tol, SolveReport};
use crate::geom::{
    all_collinear, dedup_points, dist_point_line, Line, Point, Strip, Tolerance, UnitDir,
};
use crate::hull::{convex_hull_tol, outer_common_tangents_tol};
use crate::vshape::{classify, CanonicalType, VShape};

const PARALLEL_EPS: f64 = 1e-12;

/// Points on `l1 ∪ l2`; `z` is the crossing point.
#[derive(Clone, Debug)]
pub struct TwoLineInstance {
    pub l1: Line,
    pub l2: Line,
    pub pts: Vec<Point>,
    pub z: Point,
}

impl TwoLineInstance {
    /// Checks that the lines cross and that every point lies within
    /// `tol` of one of them. Duplicates are removed.
    pub fn new(l1: Line, l2: Line, pts: &[Point], tol: Tolerance) -> Result<Self> {
        if pts.is_empty() {
            return Err(Error::EmptyInput);
        }
        if l1.normal.cross(l2.normal).abs() <= PARALLEL_EPS {
            return Err(Error::InvalidParameter("lines are parallel"));
        }
        let z = l1
            .intersect(&l2)
            .ok_or(Error::InvalidParameter("lines are parallel"))?;
        if pts.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter("non-finite coordinate"));
        }
        if pts
            .iter()
            .any(|&p| dist_point_line(p, &l1) > tol.tau && dist_point_line(p, &l2) > tol.tau)
        {
            return Err(Error::InvalidParameter("point off both lines"));
        }
        Ok(TwoLineInstance {
            l1,
            l2,
            pts: dedup_points(pts),
            z,
        })
    }
}

/// Points of one line sorted by their parameter along it.
struct OnLine {
    base: Point,
    d: UnitDir,
    t: Vec<f64>,
    /// Parameter of the crossing point.
    tz: f64,
}

impl OnLine {
    fn new(l: &Line, z: Point, mut pts: Vec<Point>) -> Self {
        let d = l.dir();
        let base = pts.first().map_or(z, |&p| p - l.normal.v() * l.eval(p));
        pts.sort_by(|a, b| d.dot(*a - base).total_cmp(&d.dot(*b - base)));
        let t = pts.iter().map(|&p| d.dot(p - base)).collect();
        OnLine {
            base,
            d,
            t,
            tz: d.dot(z - base),
        }
    }

    fn at(&self, i: usize) -> Point {
        self.base + self.d.v() * self.t[i]
    }

    /// Index range of the points with `sign * split.eval(p) >= -tau`.
    fn side(&self, split: &Line, sign: f64, tau: f64) -> (usize, usize) {
        let n = self.t.len();
        if n == 0 {
            return (0, 0);
        }
        let e0 = sign * split.eval(self.base);
        let s = sign * split.normal.dot(self.d.v());
        let span = self.t[n - 1] - self.t[0];
        if s.abs() * span <= tau {
            let mid = 0.5 * (self.t[0] + self.t[n - 1]);
            return if e0 + s * mid >= -tau { (0, n) } else { (0, 0) };
        }
        let thr = (-tau - e0) / s;
        if s > 0.0 {
            (self.t.partition_point(|&t| t < thr), n)
        } else {
            (0, self.t.partition_point(|&t| t <= thr))
        }
    }

    /// Whether every point lies in `Cone(y) \ int Cone(x)` of the V with
    /// inward outer normals `n`, offsets `c` and widths `w`, judged along
    /// the line.
    fn covered(&self, n: [UnitDir; 2], c: [f64; 2], w: [f64; 2], tau: f64) -> bool {
        let m = self.t.len();
        if m == 0 {
            return true;
        }
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        let (mut ilo, mut ihi) = (f64::NEG_INFINITY, f64::INFINITY);
        for k in 0..2 {
            let a = n[k].dot(self.base);
            let s = n[k].dot(self.d.v());
            // Outer: a + s t >= c - tau.
            let b = c[k] - tau - a;
            // Inner, open: a + s t > c + w + tau.
            let bi = c[k] + w[k] + tau - a;
            if s > 0.0 {
                lo = lo.max(b / s);
                ilo = ilo.max(bi / s);
            } else if s < 0.0 {
                hi = hi.min(b / s);
                ihi = ihi.min(bi / s);
            } else {
                if b > 0.0 {
                    return false;
                }
                if bi >= 0.0 {
                    ihi = f64::NEG_INFINITY;
                }
            }
        }
        if self.t[0] < lo || self.t[m - 1] > hi {
            return false;
        }
        if ilo < ihi {
            let i = self.t.partition_point(|&t| t <= ilo);
            if i < m && self.t[i] < ihi {
                return false;
            }
        }
        true
    }
}

struct Prepared<'a> {
    pts: &'a [Point],
    z: Point,
    tol: Tolerance,
    lines: [OnLine; 2],
}

struct Best {
    v: Option<VShape>,
    width: f64,
    examined: u64,
    /// Check coverage against every point instead of along the lines.
    exact: bool,
}

impl Best {
    fn new(exact: bool) -> Self {
        Best {
            v: None,
            width: f64::INFINITY,
            examined: 0,
            exact,
        }
    }
}

fn strip_of(n: UnitDir, pts: &[Point]) -> Strip {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &p in pts {
        let s = n.dot(p);
        lo = lo.min(s);
        hi = hi.max(s);
    }
    Strip { normal: n, lo, hi }
}

fn push_dir(dirs: &mut Vec<UnitDir>, d: UnitDir) {
    if !dirs.iter().any(|e| e.cross(d).abs() <= PARALLEL_EPS) {
        dirs.push(d);
    }
}

impl<'a> Prepared<'a> {
    fn new(inst: &'a TwoLineInstance, tol: Tolerance) -> Self {
        let mut on: [Vec<Point>; 2] = [Vec::new(), Vec::new()];
        for &p in &inst.pts {
            let d1 = dist_point_line(p, &inst.l1);
            let d2 = dist_point_line(p, &inst.l2);
            // The nearer line always; the other one too when within tol.
            if d1 <= d2 || d1 <= tol.tau {
                on[0].push(p);
            }
            if d2 < d1 || d2 <= tol.tau {
                on[1].push(p);
            }
        }
        let [a, b] = on;
        Prepared {
            pts: &inst.pts,
            z: inst.z,
            tol,
            lines: [
                OnLine::new(&inst.l1, inst.z, a),
                OnLine::new(&inst.l2, inst.z, b),
            ],
        }
    }

    /// Hull extremes of the points with `sign * split.eval(p) >= -tau`.
    fn side_extremes(&self, split: &Line, sign: f64) -> Vec<Point> {
        let mut out = Vec::with_capacity(4);
        for l in &self.lines {
            let (a, b) = l.side(split, sign, self.tol.tau);
            if a < b {
                out.push(l.at(a));
                if b - 1 > a {
                    out.push(l.at(b - 1));
                }
            }
        }
        out
    }

    fn covers(&self, n: [UnitDir; 2], c: [f64; 2], w: [f64; 2], v: &VShape, exact: bool) -> bool {
        if exact {
            v.covers(self.pts, self.tol)
        } else {
            self.lines.iter().all(|l| l.covered(n, c, w, self.tol.tau))
        }
    }

    /// Best V with the points on one side of `split` in one arm and the
    /// rest in the other, offered to `best`.
    fn cut(&self, split: &Line, best: &mut Best) -> Result<()> {
        let er = self.side_extremes(split, 1.0);
        let el = self.side_extremes(split, -1.0);
        if er.is_empty() || el.is_empty() {
            return Err(Error::EmptySide);
        }
        let hr = convex_hull_tol(&er, self.tol)?;
        let hl = convex_hull_tol(&el, self.tol)?;
        let mut dr: Vec<UnitDir> = Vec::with_capacity(6);
        let mut dl: Vec<UnitDir> = Vec::with_capacity(6);
        for (h, dirs) in [(&hr, &mut dr), (&hl, &mut dl)] {
            for (a, b) in h.edges() {
                if let Some(d) = UnitDir::from_vec((b - a).perp()) {
                    push_dir(dirs, d);
                }
            }
        }
        if let Ok((t1, t2)) = outer_common_tangents_tol(&hr, &hl, self.tol) {
            for t in [t1, t2] {
                push_dir(&mut dr, t.normal);
                push_dir(&mut dl, t.normal);
            }
        }
        for &nr in &dr {
            let sr = strip_of(nr, &er);
            for &nl in &dl {
                if nr.cross(nl).abs() <= PARALLEL_EPS {
                    continue;
                }
                let sl = strip_of(nl, &el);
                best.examined += 1;
                let w = sr.width().max(sl.width());
                if w >= best.width {
                    continue;
                }
                for (n1, c1) in [(sr.normal, sr.lo), (sr.normal.neg(), -sr.hi)] {
                    for (n2, c2) in [(sl.normal, sl.lo), (sl.normal.neg(), -sl.hi)] {
                        let Some(v) =
                            VShape::from_outer_lines(n1, c1, sr.width(), n2, c2, sl.width())
                        else {
                            continue;
                        };
                        if w < best.width
                            && self.covers(
                                [n1, n2],
                                [c1, c2],
                                [sr.width(), sl.width()],
                                &v,
                                best.exact,
                            )
                        {
                            best.width = w;
                            best.v = Some(v);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The zero-width V along the two lines, if all points of each line
    /// lie on one side of `z`.
    fn zero_width(&self) -> Option<VShape> {
        let tau = self.tol.tau;
        let mut rays = [UnitDir::new(1.0, 0.0)?; 2];
        for (k, l) in self.lines.iter().enumerate() {
            let fwd = l.t.iter().all(|&t| t >= l.tz - tau);
            let back = l.t.iter().all(|&t| t <= l.tz + tau);
            rays[k] = match (fwd, back) {
                (true, _) => l.d,
                (false, true) => l.d.neg(),
                (false, false) => return None,
            };
        }
        let orient = |u: UnitDir, o: UnitDir| {
            let n = u.perp();
            if n.dot(o.v()) >= 0.0 {
                n
            } else {
                n.neg()
            }
        };
        let n1 = orient(rays[0], rays[1]);
        let n2 = orient(rays[1], rays[0]);
        let v = VShape::from_outer_lines(n1, n1.dot(self.z), 0.0, n2, n2.dot(self.z), 0.0)?;
        v.covers(self.pts, self.tol).then_some(v)
    }

    /// Split lines of the four cases.
    fn splits(&self) -> Vec<Line> {
        let tau = self.tol.tau;
        let eta = 10.0 * tau;
        let mut out = Vec::new();
        // Case 1: through every point, parallel to each hull edge.
        let mut ext = Vec::with_capacity(4);
        for l in &self.lines {
            if !l.t.is_empty() {
                ext.push(l.at(0));
                ext.push(l.at(l.t.len() - 1));
            }
        }
        if let Ok(h) = convex_hull_tol(&ext, self.tol) {
            let mut dirs = Vec::new();
            for (a, b) in h.edges() {
                if let Some(d) = UnitDir::from_vec((b - a).perp()) {
                    push_dir(&mut dirs, d);
                }
            }
            for n in dirs {
                let mut offs: Vec<f64> = self.pts.iter().map(|&p| n.dot(p)).collect();
                offs.sort_by(f64::total_cmp);
                offs.dedup_by(|a, b| (*a - *b).abs() <= tau);
                // The point itself may belong to either arm only, so the
                // split is also nudged off it to both sides.
                for c in offs {
                    out.extend([c - eta, c, c + eta].map(|o| Line::new(n, o)));
                }
            }
        }
        // Case 2: just beside each line.
        for l in &self.lines {
            let n = l.d.perp();
            let c = n.dot(l.base);
            out.push(Line::new(n, c + eta));
            out.push(Line::new(n, c - eta));
        }
        // Case 3: the angle bisectors at z.
        let (d1, d2) = (self.lines[0].d.v(), self.lines[1].d.v());
        for s in [d1 + d2, d1 - d2] {
            if let Some(d) = UnitDir::from_vec(s) {
                out.push(Line::with_dir(self.z, d));
            }
        }
        // Case 4: perpendicular bisectors of consecutive points on the
        // same side of z.
        for l in &self.lines {
            for k in 1..l.t.len() {
                let (a, b) = (l.t[k - 1], l.t[k]);
                if a < l.tz - tau && b > l.tz + tau {
                    continue;
                }
                if b - a > tau {
                    out.push(Line::new(l.d, l.d.dot(l.base) + 0.5 * (a + b)));
                }
            }
        }
        out
    }
}

/// Best covering V that puts the points on either side of `split` in
/// different arms (points on `split` go to both).
pub fn cut_candidates(inst: &TwoLineInstance, split: &Line) -> Result<VShape> {
    let tol = scaled_tol(&inst.pts);
    let prep = Prepared::new(inst, tol);
    let mut best = Best::new(true);
    prep.cut(split, &mut best)?;
    best.v.ok_or(Error::NoValidVShape)
}

/// Minimum-width covering V-shape of a two-line instance.
///
/// Returns width zero when the lines themselves form a covering V.
/// Otherwise the minimum over splits of four kinds: through each point
/// parallel to each hull edge, just beside either line, along the angle
/// bisectors at `z`, and along the perpendicular bisectors of consecutive
/// points of a line that `z` does not separate. All points on one line
/// give a degenerate zero-width report.
pub fn min_vshape_two_lines(inst: &TwoLineInstance) -> Result<SolveReport> {
    let pts = &inst.pts;
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let tol = scaled_tol(pts);
    if pts.len() == 1 {
        return Ok(degenerate_report(pts, inst.l1.dir()));
    }
    if let Some(line) = all_collinear(pts, tol) {
        return Ok(degenerate_report(pts, line.dir()));
    }
    let prep = Prepared::new(inst, tol);
    if let Some(v) = prep.zero_width() {
        return Ok(report(v, pts, tol, 1));
    }
    let splits = prep.splits();
    let mut best = Best::new(false);
    for s in &splits {
        let _ = prep.cut(s, &mut best);
    }
    if !best.v.is_some_and(|v| v.covers(pts, tol)) {
        // Judging coverage along the lines missed a point off them.
        let examined = best.examined;
        best = Best::new(true);
        best.examined = examined;
        for s in &splits {
            let _ = prep.cut(s, &mut best);
        }
    }
    let v = best.v.ok_or(Error::NoCandidate)?;
    Ok(report(v, pts, tol, best.examined))
}

fn report(v: VShape, pts: &[Point], tol: Tolerance, examined: u64) -> SolveReport {
    let canonical_type = if v.width() > 0.0 {
        classify(&v, pts, tol)
    } else {
        CanonicalType::BothOuter
    };
    SolveReport {
        best: v,
        width: v.width(),
        canonical_type,
        candidates_examined: examined,
        optima: None,
        degenerate: false,
    }
}
