//! The V-shape model: two half-strips ("arms") sharing the segment between
//! the inner apex `x` and the outer apex `y`.
//!
//! Arm directions are labelled by the side of the directed line `x -> y`
//! they point to: `dir_left` satisfies `cross(y - x, dir_left) > 0`. For a
//! proper V this means `cross(dir_left, dir_right) > 0`, `x - y` lies in the
//! cone spanned by the two directions, and the region equals
//! `Cone(y) \ int Cone(x)`.

use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::{Frame, Line, Point, Ray, Strip, Tolerance, UnitDir};
use crate::hull::Hull;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VShape {
    pub apex_inner: Point,
    pub apex_outer: Point,
    pub dir_left: UnitDir,
    pub dir_right: UnitDir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalType {
    BothOuter,
    InnerOuter,
    BothInner,
}

/// Four points spanning an empty wedge: `a, b` on one inner ray and
/// `c, d` on the other.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Wedge {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Widths {
    pub left: f64,
    pub right: f64,
    pub max: f64,
}

/// Distance from `p` to the half-strip `segment(x, y) ⊕ ray(u)`.
fn dist_to_arm(x: Point, y: Point, u: UnitDir, p: Point) -> f64 {
    let n = u.perp();
    let b = n.dot(y - x);
    let a = n.dot(p - x);
    if b.abs() > 1e-300 {
        let s = a / b;
        if (0.0..=1.0).contains(&s) {
            let q = x + (y - x) * s;
            if u.dot(p - q) >= 0.0 {
                return 0.0;
            }
        }
    }
    let seg = {
        let d = y - x;
        let l2 = d.dot(d);
        let t = if l2 > 0.0 {
            ((p - x).dot(d) / l2).clamp(0.0, 1.0)
        } else {
            0.0
        };
        (x + d * t).dist(p)
    };
    let ray = |o: Point| {
        let t = u.dot(p - o).max(0.0);
        (o + u.v() * t).dist(p)
    };
    seg.min(ray(x)).min(ray(y))
}

fn dist_to_ray(o: Point, u: UnitDir, p: Point) -> f64 {
    let t = u.dot(p - o).max(0.0);
    (o + u.v() * t).dist(p)
}

impl VShape {
    /// The V whose outer apex is the corner of the cone
    /// `{<n1, p> >= c1} ∩ {<n2, p> >= c2}` and whose arms are the strips
    /// `c_i <= <n_i, p> <= c_i + w_i`. `None` when the normals are parallel.
    pub fn from_outer_lines(
        n1: UnitDir,
        c1: f64,
        w1: f64,
        n2: UnitDir,
        c2: f64,
        w2: f64,
    ) -> Option<VShape> {
        let det = n1.cross(n2);
        if det.abs() < 1e-13 {
            return None;
        }
        let solve = |a: f64, b: f64| {
            Point::new((a * n2.dy - b * n1.dy) / det, (n1.dx * b - n2.dx * a) / det)
        };
        let y = solve(c1, c2);
        let x = solve(c1 + w1, c2 + w2);
        let mut u1 = n1.perp();
        if n2.dot(u1.v()) < 0.0 {
            u1 = u1.neg();
        }
        let mut u2 = n2.perp();
        if n1.dot(u2.v()) < 0.0 {
            u2 = u2.neg();
        }
        let (dl, dr) = if u1.cross(u2) > 0.0 {
            (u1, u2)
        } else {
            (u2, u1)
        };
        Some(VShape {
            apex_inner: x,
            apex_outer: y,
            dir_left: dl,
            dir_right: dr,
        })
    }

    pub fn widths(&self) -> Widths {
        let v = self.apex_outer - self.apex_inner;
        let left = self.dir_left.v().cross(v).abs();
        let right = self.dir_right.v().cross(v).abs();
        Widths {
            left,
            right,
            max: left.max(right),
        }
    }

    pub fn width(&self) -> f64 {
        self.widths().max
    }

    /// Distance from `p` to the region (zero inside).
    pub fn dist(&self, p: Point) -> f64 {
        let x = self.apex_inner;
        let y = self.apex_outer;
        dist_to_arm(x, y, self.dir_left, p).min(dist_to_arm(x, y, self.dir_right, p))
    }

    pub fn contains(&self, p: Point, tol: Tolerance) -> bool {
        self.dist(p) <= tol.tau
    }

    pub fn covers(&self, pts: &[Point], tol: Tolerance) -> bool {
        pts.iter().all(|&p| self.contains(p, tol))
    }

    /// Largest distance from a point of `pts` to the region.
    pub fn max_violation(&self, pts: &[Point]) -> f64 {
        pts.iter().map(|&p| self.dist(p)).fold(0.0, f64::max)
    }

    /// The arm strips `(left, right)`.
    pub fn strips(&self) -> (Strip, Strip) {
        let mk = |d: UnitDir| {
            let n = d.perp();
            let a = n.dot(self.apex_inner);
            let b = n.dot(self.apex_outer);
            Strip::new(n, a.min(b), a.max(b))
        };
        (mk(self.dir_left), mk(self.dir_right))
    }

    /// Unit normals of the outer boundary lines pointing into the V.
    pub(crate) fn inward_normals(&self) -> (UnitDir, UnitDir) {
        let x = self.apex_inner;
        let y = self.apex_outer;
        let orient = |d: UnitDir, other: UnitDir| {
            let n = d.perp();
            let s = n.dot(other.v());
            if s.abs() > 1e-12 {
                if s > 0.0 {
                    n
                } else {
                    n.neg()
                }
            } else if n.dot(x - y) >= 0.0 {
                n
            } else {
                n.neg()
            }
        };
        (
            orient(self.dir_left, self.dir_right),
            orient(self.dir_right, self.dir_left),
        )
    }

    /// Same region with the outer lines moved out by `dl` (left arm) and
    /// `dr` (right arm) and the inner lines moved out by `il`, `ir`.
    pub(crate) fn offset_lines(&self, dl: f64, dr: f64, il: f64, ir: f64) -> VShape {
        let (nl, nr) = self.inward_normals();
        let x = self.apex_inner;
        let y = self.apex_outer;
        let det = nl.cross(nr);
        if det.abs() < 1e-13 {
            // Parallel arms share their boundary lines.
            return VShape {
                apex_inner: x + nl.v() * il.max(ir),
                apex_outer: y - nl.v() * dl.max(dr),
                ..*self
            };
        }
        let solve = |a: f64, b: f64| {
            Point::new((a * nr.dy - b * nl.dy) / det, (nl.dx * b - nr.dx * a) / det)
        };
        let ny = solve(nl.dot(y) - dl, nr.dot(y) - dr);
        let nx = solve(nl.dot(x) + il, nr.dot(x) + ir);
        VShape {
            apex_inner: nx,
            apex_outer: ny,
            ..*self
        }
    }

    /// Moves the narrower arm's outer line outward until both arms have
    /// the width of the wider one.
    pub fn balance(&self) -> VShape {
        let w = self.widths();
        if w.left == w.right {
            return *self;
        }
        if w.left < w.right {
            self.offset_lines(w.right - w.left, 0.0, 0.0, 0.0)
        } else {
            self.offset_lines(0.0, w.left - w.right, 0.0, 0.0)
        }
    }

    /// Moves all four boundary lines outward by `delta`.
    pub fn widen(&self, delta: f64) -> VShape {
        if delta == 0.0 {
            return *self;
        }
        self.offset_lines(delta, delta, delta, delta)
    }

    /// Zero-width arm or parallel arm directions.
    pub fn is_degenerate(&self, tol: Tolerance) -> bool {
        let w = self.widths();
        w.left <= tol.tau
            || w.right <= tol.tau
            || self.dir_left.cross(self.dir_right).abs() <= tol.tau
    }

    pub fn to_world(&self, f: &Frame) -> VShape {
        VShape {
            apex_inner: f.to_world(self.apex_inner),
            apex_outer: f.to_world(self.apex_outer),
            ..*self
        }
    }

    pub fn to_local(&self, f: &Frame) -> VShape {
        VShape {
            apex_inner: f.to_local(self.apex_inner),
            apex_outer: f.to_local(self.apex_outer),
            ..*self
        }
    }

    /// Tie-break order: apex coordinates, inner first.
    pub fn apex_cmp(&self, o: &VShape) -> Ordering {
        self.apex_inner
            .lex_cmp(&o.apex_inner)
            .then(self.apex_outer.lex_cmp(&o.apex_outer))
    }

    /// Rays `(X1, Y1, X2, Y2)`: inner and outer boundary rays of the left
    /// and right arm.
    pub fn rays(&self) -> [Ray; 4] {
        [
            Ray {
                origin: self.apex_inner,
                dir: self.dir_left,
            },
            Ray {
                origin: self.apex_outer,
                dir: self.dir_left,
            },
            Ray {
                origin: self.apex_inner,
                dir: self.dir_right,
            },
            Ray {
                origin: self.apex_outer,
                dir: self.dir_right,
            },
        ]
    }

    /// Whether two V-shapes describe the same region up to `tol`.
    pub fn approx_eq(&self, o: &VShape, tol: f64) -> bool {
        self.apex_inner.dist(o.apex_inner) <= tol
            && self.apex_outer.dist(o.apex_outer) <= tol
            && (self.dir_left.v() - o.dir_left.v()).norm() <= tol
            && (self.dir_right.v() - o.dir_right.v()).norm() <= tol
    }
}

/// The covering V-shape formed by two crossing strips, if any.
pub fn strips_to_vshape(s1: &Strip, s2: &Strip, pts: &[Point], tol: Tolerance) -> Result<VShape> {
    if s1.normal.cross(s2.normal).abs() <= tol.tau {
        return Err(Error::ParallelStrips);
    }
    let mut best: Option<VShape> = None;
    for (n1, c1) in [(s1.normal, s1.lo), (s1.normal.neg(), -s1.hi)] {
        for (n2, c2) in [(s2.normal, s2.lo), (s2.normal.neg(), -s2.hi)] {
            let Some(v) = VShape::from_outer_lines(n1, c1, s1.width(), n2, c2, s2.width()) else {
                continue;
            };
            if !v.covers(pts, tol) {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => {
                    let (wv, wb) = (v.width(), b.width());
                    wv < wb || (wv == wb && v.apex_cmp(b).is_lt())
                }
            };
            if better {
                best = Some(v);
            }
        }
    }
    best.ok_or(Error::NoValidVShape)
}

/// The V-shape whose notch is the empty wedge `w`; outer lines support `hull`.
pub fn wedge_to_vshape(w: &Wedge, hull: &Hull, tol: Tolerance) -> Result<VShape> {
    let (Some(l1), Some(l2)) = (Line::through(w.a, w.b), Line::through(w.c, w.d)) else {
        return Err(Error::NoValidVShape);
    };
    let Some(x) = l1.intersect(&l2) else {
        return Err(Error::ParallelInnerLines);
    };
    if l1.normal.cross(l2.normal).abs() <= tol.tau {
        return Err(Error::ParallelInnerLines);
    }
    // Orient each inner-line normal toward the other inner ray.
    let toward = |l: &Line, p: Point, q: Point| {
        let s = if l.eval(p).abs() >= l.eval(q).abs() {
            l.eval(p)
        } else {
            l.eval(q)
        };
        if s >= 0.0 {
            l.normal
        } else {
            l.normal.neg()
        }
    };
    let n1 = toward(&l1, w.c, w.d);
    let n2 = toward(&l2, w.a, w.b);
    let c1 = -hull.support(n1.neg());
    let c2 = -hull.support(n2.neg());
    let w1 = n1.dot(w.a) - c1;
    let w2 = n2.dot(w.c) - c2;
    if w1 < -tol.tau || w2 < -tol.tau {
        return Err(Error::NoValidVShape);
    }
    let v = VShape::from_outer_lines(n1, c1, w1.max(0.0), n2, c2, w2.max(0.0))
        .ok_or(Error::ParallelInnerLines)?;
    // a, b must lie on the inner ray of their arm, c, d on the other.
    let (u1, u2) = if n1.perp().cross(v.dir_left).abs() < n1.perp().cross(v.dir_right).abs() {
        (v.dir_left, v.dir_right)
    } else {
        (v.dir_right, v.dir_left)
    };
    let on_ray = |u: UnitDir, p: Point| u.dot(p - x) >= -tol.tau;
    if !(on_ray(u1, w.a) && on_ray(u1, w.b) && on_ray(u2, w.c) && on_ray(u2, w.d)) {
        return Err(Error::NoValidVShape);
    }
    if !v.covers(hull.vertices(), tol) {
        return Err(Error::NoValidVShape);
    }
    Ok(VShape { apex_inner: x, ..v })
}

/// Canonicality test: each arm's boundary rays carry at least three points,
/// and on positive-width arms a pair on one ray sees a point of the other
/// ray project strictly between them (the acute-angle condition).
pub fn is_canonical(v: &VShape, pts: &[Point], tol: Tolerance) -> (bool, Option<CanonicalType>) {
    #[derive(Clone, Copy, PartialEq)]
    enum Pair {
        Outer,
        Inner,
    }
    let w = v.widths();
    let arm = |d: UnitDir, width: f64| -> Option<Pair> {
        let x = v.apex_inner;
        let y = v.apex_outer;
        let on_x: alloc::vec::Vec<Point> = pts
            .iter()
            .copied()
            .filter(|&p| dist_to_ray(x, d, p) <= tol.tau)
            .collect();
        let on_y: alloc::vec::Vec<Point> = pts
            .iter()
            .copied()
            .filter(|&p| dist_to_ray(y, d, p) <= tol.tau)
            .collect();
        if width <= tol.tau {
            // Both rays lie on one line; a point on both counts twice.
            return if on_x.len() + on_y.len() >= 3 && on_x.len().max(on_y.len()) >= 2 {
                Some(Pair::Outer)
            } else {
                None
            };
        }
        if on_x.len() + on_y.len() < 3 {
            return None;
        }
        let acute = |pair: &[Point], other: &[Point]| {
            if pair.len() < 2 || other.is_empty() {
                return false;
            }
            let lo = pair.iter().map(|p| d.dot(*p)).fold(f64::INFINITY, f64::min);
            let hi = pair
                .iter()
                .map(|p| d.dot(*p))
                .fold(f64::NEG_INFINITY, f64::max);
            other.iter().any(|p| {
                let t = d.dot(*p);
                t >= lo - tol.tau && t <= hi + tol.tau
            })
        };
        if acute(&on_y, &on_x) {
            Some(Pair::Outer)
        } else if acute(&on_x, &on_y) {
            Some(Pair::Inner)
        } else {
            None
        }
    };
    let (Some(l), Some(r)) = (arm(v.dir_left, w.left), arm(v.dir_right, w.right)) else {
        return (false, None);
    };
    let t = match (l, r) {
        (Pair::Outer, Pair::Outer) => CanonicalType::BothOuter,
        (Pair::Inner, Pair::Inner) => CanonicalType::BothInner,
        _ => CanonicalType::InnerOuter,
    };
    (true, Some(t))
}

/// Canonical type from which rays carry at least two points, without the
/// acute-angle requirement; used to label solver outputs.
pub fn classify(v: &VShape, pts: &[Point], tol: Tolerance) -> CanonicalType {
    if let (true, Some(t)) = is_canonical(v, pts, tol) {
        return t;
    }
    let count = |o: Point, d: UnitDir| {
        pts.iter()
            .filter(|&&p| dist_to_ray(o, d, p) <= tol.tau)
            .count()
    };
    let lo = count(v.apex_outer, v.dir_left) >= 2;
    let ro = count(v.apex_outer, v.dir_right) >= 2;
    let li = count(v.apex_inner, v.dir_left) >= 2;
    let ri = count(v.apex_inner, v.dir_right) >= 2;
    if li && ri && !(lo || ro) {
        CanonicalType::BothInner
    } else if (li && ro) || (ri && lo) {
        if lo && ro {
            CanonicalType::BothOuter
        } else {
            CanonicalType::InnerOuter
        }
    } else {
        CanonicalType::BothOuter
    }
}

/// Realizes a cover of `pts` by two parallel strips with normal `m` (the
/// narrowest strips around `a` and `b`) as a V-shape: the wider strip
/// keeps its direction and the narrower one is tilted just enough to make
/// the arms cross far away without exceeding the wider width. When both
/// widths are equal the tilt is tiny and the result is slightly wider.
pub fn tilted_parallel_vshape(
    m: UnitDir,
    a: &[Point],
    b: &[Point],
    pts: &[Point],
    tol: Tolerance,
) -> Option<VShape> {
    use crate::geom::{fm, strip_through};
    let sa = strip_through(m, a).ok()?;
    let sb = strip_through(m, b).ok()?;
    let (wide, narrow, narrow_pts) = if sa.width() >= sb.width() {
        (sa, sb, b)
    } else {
        (sb, sa, a)
    };
    let mut reach: f64 = 0.0;
    for &p in narrow_pts {
        reach = reach.max(fm::hypot(p.x - narrow_pts[0].x, p.y - narrow_pts[0].y));
    }
    let slack = wide.width() - narrow.width();
    let t = if reach > 0.0 {
        (slack / (2.0 * reach)).clamp(1e-7, 0.2)
    } else {
        0.2
    };
    let mut best: Option<VShape> = None;
    for sgn in [1.0, -1.0] {
        let Ok(tilted) = strip_through(m.rotate(sgn * t), narrow_pts) else {
            continue;
        };
        if let Ok(v) = strips_to_vshape(&wide, &tilted, pts, tol) {
            if best.is_none_or(|o| v.width() < o.width()) {
                best = Some(v);
            }
        }
    }
    best
}
