//! Planar primitives, predicates and the numeric policy.
//!
//! All quantities are `f64`. Solvers work on point sets that were first
//! mapped into a frame whose bounding box has diameter 1 (see [`Frame`]),
//! which makes the absolute tolerance [`Tolerance`] meaningful.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub const DEFAULT_TAU: f64 = 1e-9;
pub const TAU_NORM: f64 = 1e-12;

pub(crate) mod fm {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        libm::atan2(y, x)
    }
    #[inline]
    pub fn asin(x: f64) -> f64 {
        libm::asin(x)
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline]
    pub fn ceil(x: f64) -> f64 {
        libm::ceil(x)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        libm::hypot(x, y)
    }
}

pub use core::f64::consts::PI;

/// A point, also used as a free vector.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3d cross product.
    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        fm::hypot(self.x, self.y)
    }

    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise perpendicular.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order on (x, y).
    pub fn lex_cmp(&self, o: &Point) -> Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Signed area of the parallelogram (b - a, c - a); positive for a left turn.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// A direction of unit length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitDir {
    pub dx: f64,
    pub dy: f64,
}

impl UnitDir {
    /// Normalizes `(dx, dy)`; `None` for a (near) zero vector.
    pub fn new(dx: f64, dy: f64) -> Option<Self> {
        let n = fm::hypot(dx, dy);
        if !(n > 1e-300) || !n.is_finite() {
            return None;
        }
        Some(UnitDir {
            dx: dx / n,
            dy: dy / n,
        })
    }

    pub fn from_vec(v: Point) -> Option<Self> {
        Self::new(v.x, v.y)
    }

    pub fn from_angle(theta: f64) -> Self {
        UnitDir {
            dx: fm::cos(theta),
            dy: fm::sin(theta),
        }
    }

    pub fn angle(self) -> f64 {
        fm::atan2(self.dy, self.dx)
    }

    #[inline]
    pub fn v(self) -> Point {
        Point::new(self.dx, self.dy)
    }

    /// Rotated a quarter turn counterclockwise.
    #[inline]
    pub fn perp(self) -> UnitDir {
        UnitDir {
            dx: -self.dy,
            dy: self.dx,
        }
    }

    #[inline]
    pub fn neg(self) -> UnitDir {
        UnitDir {
            dx: -self.dx,
            dy: -self.dy,
        }
    }

    #[inline]
    pub fn dot(self, p: Point) -> f64 {
        self.dx * p.x + self.dy * p.y
    }

    #[inline]
    pub fn cross(self, o: UnitDir) -> f64 {
        self.dx * o.dy - self.dy * o.dx
    }

    pub fn rotate(self, a: f64) -> UnitDir {
        let (s, c) = (fm::sin(a), fm::cos(a));
        UnitDir {
            dx: c * self.dx - s * self.dy,
            dy: s * self.dx + c * self.dy,
        }
    }

    /// True for the representative chosen by the canonical sign rule.
    pub fn is_canonical(self) -> bool {
        self.dy > 0.0 || (self.dy == 0.0 && self.dx > 0.0)
    }

    pub fn canonical(self) -> UnitDir {
        if self.is_canonical() {
            self
        } else {
            self.neg()
        }
    }

    pub fn is_unit(self) -> bool {
        (self.dx * self.dx + self.dy * self.dy - 1.0).abs() <= TAU_NORM
    }
}

/// `{p : <normal, p> = offset}`, stored with the canonical normal sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub normal: UnitDir,
    pub offset: f64,
}

impl Line {
    pub fn new(normal: UnitDir, offset: f64) -> Self {
        if normal.is_canonical() {
            Line { normal, offset }
        } else {
            Line {
                normal: normal.neg(),
                offset: -offset,
            }
        }
    }

    /// Line through `p` and `q`; `None` when they coincide.
    pub fn through(p: Point, q: Point) -> Option<Self> {
        let n = UnitDir::from_vec((q - p).perp())?;
        Some(Line::new(n, n.dot(p)))
    }

    /// Line through `p` with direction `d`.
    pub fn with_dir(p: Point, d: UnitDir) -> Self {
        let n = d.perp();
        Line::new(n, n.dot(p))
    }

    #[inline]
    pub fn eval(&self, p: Point) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn dir(&self) -> UnitDir {
        self.normal.perp().neg()
    }

    /// Intersection point; `None` for (near) parallel lines.
    pub fn intersect(&self, o: &Line) -> Option<Point> {
        let det = self.normal.cross(o.normal);
        if det.abs() < 1e-15 {
            return None;
        }
        let x = (self.offset * o.normal.dy - o.offset * self.normal.dy) / det;
        let y = (self.normal.dx * o.offset - o.normal.dx * self.offset) / det;
        Some(Point::new(x, y))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ray {
    pub origin: Point,
    pub dir: UnitDir,
}

impl Ray {
    pub fn at(&self, t: f64) -> Point {
        self.origin + self.dir.v() * t
    }
}

/// `{p : lo <= <normal, p> <= hi}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Strip {
    pub normal: UnitDir,
    pub lo: f64,
    pub hi: f64,
}

impl Strip {
    /// Builds a strip with the canonical normal sign.
    pub fn new(normal: UnitDir, lo: f64, hi: f64) -> Self {
        if normal.is_canonical() {
            Strip { normal, lo, hi }
        } else {
            Strip {
                normal: normal.neg(),
                lo: -hi,
                hi: -lo,
            }
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, p: Point, tol: Tolerance) -> bool {
        let s = self.normal.dot(p);
        s >= self.lo - tol.tau && s <= self.hi + tol.tau
    }

    pub fn dir(&self) -> UnitDir {
        self.normal.perp()
    }

    pub fn lo_line(&self) -> Line {
        Line::new(self.normal, self.lo)
    }

    pub fn hi_line(&self) -> Line {
        Line::new(self.normal, self.hi)
    }

    pub fn median(&self) -> Line {
        Line::new(self.normal, 0.5 * (self.lo + self.hi))
    }

    /// The strip widened to `w` about its median.
    pub fn with_width(&self, w: f64) -> Strip {
        let m = 0.5 * (self.lo + self.hi);
        Strip {
            normal: self.normal,
            lo: m - 0.5 * w,
            hi: m + 0.5 * w,
        }
    }

    pub fn is_parallel(&self, o: &Strip, tol: Tolerance) -> bool {
        self.normal.cross(o.normal).abs() <= tol.tau
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub tau: f64,
}

impl Tolerance {
    pub const fn new(tau: f64) -> Self {
        Tolerance { tau }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { tau: DEFAULT_TAU }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        self as i8
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

pub fn side_of(l: &Line, p: Point, tol: Tolerance) -> Sign {
    let s = l.normal.dot(p);
    if s > l.offset + tol.tau {
        Sign::Positive
    } else if s < l.offset - tol.tau {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

pub fn dist_point_line(p: Point, l: &Line) -> f64 {
    l.eval(p).abs()
}

pub fn angle_bisector(y: Point, r1: UnitDir, r2: UnitDir) -> Result<Ray> {
    let s = r1.v() + r2.v();
    if s.norm() <= 1e-9 {
        return Err(Error::DegenerateBisector);
    }
    let dir = UnitDir::from_vec(s).ok_or(Error::DegenerateBisector)?;
    Ok(Ray { origin: y, dir })
}

pub fn strip_through(normal: UnitDir, pts: &[Point]) -> Result<Strip> {
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &p in pts {
        let s = normal.dot(p);
        lo = lo.min(s);
        hi = hi.max(s);
    }
    Ok(Strip { normal, lo, hi })
}

/// Similarity map into a frame where the bounding box has diameter 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub center: Point,
    pub scale: f64,
}

impl Frame {
    pub fn identity() -> Self {
        Frame {
            center: Point::new(0.0, 0.0),
            scale: 1.0,
        }
    }

    pub fn fit(pts: &[Point]) -> Self {
        if pts.is_empty() {
            return Self::identity();
        }
        let (mut x0, mut y0, mut x1, mut y1) = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        for p in pts {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let d = fm::hypot(x1 - x0, y1 - y0);
        let scale = if d > 0.0 { d } else { 1.0 };
        Frame {
            center: Point::new(0.5 * (x0 + x1), 0.5 * (y0 + y1)),
            scale,
        }
    }

    #[inline]
    pub fn to_local(&self, p: Point) -> Point {
        (p - self.center) * (1.0 / self.scale)
    }

    #[inline]
    pub fn to_world(&self, p: Point) -> Point {
        p * self.scale + self.center
    }

    pub fn map_in(&self, pts: &[Point]) -> Vec<Point> {
        pts.iter().map(|&p| self.to_local(p)).collect()
    }

    pub fn len_to_world(&self, w: f64) -> f64 {
        w * self.scale
    }

    pub fn strip_to_world(&self, s: &Strip) -> Strip {
        let c = s.normal.dot(self.center);
        Strip {
            normal: s.normal,
            lo: s.lo * self.scale + c,
            hi: s.hi * self.scale + c,
        }
    }

    pub fn strip_to_local(&self, s: &Strip) -> Strip {
        let c = s.normal.dot(self.center);
        Strip {
            normal: s.normal,
            lo: (s.lo - c) / self.scale,
            hi: (s.hi - c) / self.scale,
        }
    }
}

/// Sorts lexicographically and removes exact duplicates.
pub fn dedup_points(pts: &[Point]) -> Vec<Point> {
    let mut v: Vec<Point> = pts.to_vec();
    v.sort_by(|a, b| a.lex_cmp(b));
    v.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    v
}

/// Length of the bounding-box diagonal.
pub fn bbox_diameter(pts: &[Point]) -> f64 {
    let f = Frame::fit(pts);
    if pts.len() < 2 {
        0.0
    } else {
        f.scale
    }
}

/// Maximum pairwise distance, quadratic scan.
pub fn diameter_brute(pts: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d = d.max(pts[i].dist(pts[j]));
        }
    }
    d
}

/// True when every point is within `tau` of the line through the two
/// farthest-apart points.
pub fn all_collinear(pts: &[Point], tol: Tolerance) -> Option<Line> {
    if pts.len() < 2 {
        return None;
    }
    let a = pts[0];
    let mut b = pts[0];
    for &p in pts {
        if p.dist(a) > b.dist(a) {
            b = p;
        }
    }
    let mut c = b;
    for &p in pts {
        if p.dist(b) > c.dist(b) {
            c = p;
        }
    }
    let l = Line::through(b, c)?;
    if pts.iter().all(|&p| dist_point_line(p, &l) <= tol.tau) {
        Some(l)
    } else {
        None
    }
}
