//! Convex hulls, extreme-point queries, calipers widths, outer common
//! tangents and the halfplane-extreme index.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{fm, orient, Line, Point, Strip, Tolerance, UnitDir, PI};

const TWO_PI: f64 = 2.0 * PI;

/// Counterclockwise, strictly convex polygon starting at its
/// lexicographically smallest vertex. One- and two-vertex hulls are legal.
#[derive(Clone, Debug, PartialEq)]
pub struct Hull {
    vertices: Vec<Point>,
    /// Outward normal angle of edge `i` (from vertex `i` to `i + 1`),
    /// unwrapped so the sequence is nondecreasing.
    normal_angles: Vec<f64>,
}

/// Edges removed from and added to a hull by one insertion.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HullDelta {
    pub removed_edges: Vec<(Point, Point)>,
    pub added_edges: Vec<(Point, Point)>,
}

impl HullDelta {
    pub fn is_empty(&self) -> bool {
        self.removed_edges.is_empty() && self.added_edges.is_empty()
    }
}

impl Hull {
    fn from_ccw(mut vertices: Vec<Point>) -> Hull {
        if let Some(k) = (0..vertices.len()).min_by(|&i, &j| vertices[i].lex_cmp(&vertices[j])) {
            vertices.rotate_left(k);
        }
        let normal_angles = edge_normal_angles(&vertices);
        Hull {
            vertices,
            normal_angles,
        }
    }

    pub fn empty() -> Hull {
        Hull {
            vertices: Vec::new(),
            normal_angles: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(v_i, v_{i+1})`; a segment hull yields both directions.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        let m = if n >= 2 { n } else { 0 };
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Index of the extreme vertex in direction `d` with the lexicographic
    /// tie rule applied to values within `tol` of the maximum.
    pub fn extreme_index(&self, d: UnitDir, tol: Tolerance) -> Option<usize> {
        let n = self.vertices.len();
        match n {
            0 => return None,
            1 => return Some(0),
            _ => {}
        }
        let a0 = self.normal_angles[0];
        let mut phi = d.angle();
        while phi < a0 {
            phi += TWO_PI;
        }
        while phi >= a0 + TWO_PI {
            phi -= TWO_PI;
        }
        let mut i = self.normal_angles.partition_point(|&a| a < phi) % n;
        let f = |k: usize| d.dot(self.vertices[k]);
        // Hill-climb to the exact maximum (angles are rounded).
        let mut steps = 0;
        loop {
            let nx = (i + 1) % n;
            let pv = (i + n - 1) % n;
            if f(nx) > f(i) {
                i = nx;
            } else if f(pv) > f(i) {
                i = pv;
            } else {
                break;
            }
            steps += 1;
            if steps > n {
                break;
            }
        }
        let fmax = f(i);
        let mut best = i;
        let mut k = i;
        for _ in 1..n {
            k = (k + 1) % n;
            if f(k) < fmax - tol.tau {
                break;
            }
            if self.vertices[k].lex_cmp(&self.vertices[best]).is_lt() {
                best = k;
            }
        }
        k = i;
        for _ in 1..n {
            k = (k + n - 1) % n;
            if f(k) < fmax - tol.tau {
                break;
            }
            if self.vertices[k].lex_cmp(&self.vertices[best]).is_lt() {
                best = k;
            }
        }
        Some(best)
    }

    /// Support value `max <d, v>` over the vertices.
    pub fn support(&self, d: UnitDir) -> f64 {
        let mut i = match self.extreme_index(d, Tolerance::new(0.0)) {
            Some(i) => i,
            None => return f64::NEG_INFINITY,
        };
        let n = self.vertices.len();
        // The tie rule may pick a vertex slightly below the maximum.
        while n > 1 && d.dot(self.vertices[(i + 1) % n]) > d.dot(self.vertices[i]) {
            i = (i + 1) % n;
        }
        while n > 1 && d.dot(self.vertices[(i + n - 1) % n]) > d.dot(self.vertices[i]) {
            i = (i + n - 1) % n;
        }
        d.dot(self.vertices[i])
    }

    /// True when `p` is inside or within `tol` of the hull.
    pub fn contains(&self, p: Point, tol: Tolerance) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => self.vertices[0].dist(p) <= tol.tau,
            2 => seg_dist(self.vertices[0], self.vertices[1], p) <= tol.tau,
            _ => self
                .edges()
                .all(|(a, b)| orient(a, b, p) >= -tol.tau * a.dist(b)),
        }
    }
}

fn seg_dist(a: Point, b: Point, p: Point) -> f64 {
    let ab = b - a;
    let l2 = ab.dot(ab);
    if l2 == 0.0 {
        return a.dist(p);
    }
    let t = ((p - a).dot(ab) / l2).clamp(0.0, 1.0);
    (a + ab * t).dist(p)
}

fn edge_normal_angles(v: &[Point]) -> Vec<f64> {
    let n = v.len();
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    let mut prev = f64::NEG_INFINITY;
    for i in 0..n {
        let e = v[(i + 1) % n] - v[i];
        let mut a = fm::atan2(-e.x, e.y);
        if i == 0 {
            prev = a;
        } else {
            while a < prev {
                a += TWO_PI;
            }
            prev = a;
        }
        out.push(a);
    }
    out
}

/// Monotone-chain hull; points within `tol` of a hull edge are dropped.
pub fn convex_hull_tol(pts: &[Point], tol: Tolerance) -> Result<Hull> {
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut p: Vec<Point> = pts.to_vec();
    p.sort_by(|a, b| a.lex_cmp(b));
    p.dedup_by(|a, b| a.dist(*b) <= tol.tau);
    if p.len() <= 2 {
        return Ok(Hull::from_ccw(p));
    }
    let turn_ok = |a: Point, b: Point, c: Point| orient(a, b, c) > tol.tau * a.dist(c);
    let mut h: Vec<Point> = Vec::with_capacity(2 * p.len());
    for &q in &p {
        while h.len() >= 2 && !turn_ok(h[h.len() - 2], h[h.len() - 1], q) {
            h.pop();
        }
        h.push(q);
    }
    let lower = h.len() + 1;
    for &q in p.iter().rev().skip(1) {
        while h.len() >= lower && !turn_ok(h[h.len() - 2], h[h.len() - 1], q) {
            h.pop();
        }
        h.push(q);
    }
    h.pop();
    Ok(Hull::from_ccw(h))
}

pub fn convex_hull(pts: &[Point]) -> Result<Hull> {
    convex_hull_tol(pts, Tolerance::default())
}

pub fn extreme_point(h: &Hull, d: UnitDir) -> Point {
    extreme_point_tol(h, d, Tolerance::default())
}

/// # Panics
/// On an empty hull.
pub fn extreme_point_tol(h: &Hull, d: UnitDir, tol: Tolerance) -> Point {
    let i = h
        .extreme_index(d, tol)
        .expect("extreme_point on an empty hull");
    h.vertices[i]
}

pub fn insert_hull(h: &Hull, p: Point) -> (Hull, HullDelta) {
    insert_hull_tol(h, p, Tolerance::default())
}

/// `conv(h ∪ {p})` and the edges it removed and created.
pub fn insert_hull_tol(h: &Hull, p: Point, tol: Tolerance) -> (Hull, HullDelta) {
    let v = &h.vertices;
    let n = v.len();
    if n == 0 {
        return (Hull::from_ccw(alloc::vec![p]), HullDelta::default());
    }
    if n == 1 {
        if v[0].dist(p) <= tol.tau {
            return (h.clone(), HullDelta::default());
        }
        let nh = Hull::from_ccw(alloc::vec![v[0], p]);
        let added = nh.edges().collect();
        return (
            nh,
            HullDelta {
                removed_edges: Vec::new(),
                added_edges: added,
            },
        );
    }
    if n == 2 && orient(v[0], v[1], p).abs() <= tol.tau * v[0].dist(v[1]) {
        // Collinear with a segment hull: maybe extend it.
        let ab = v[1] - v[0];
        let t = (p - v[0]).dot(ab) / ab.dot(ab);
        let len = ab.norm();
        if t * len >= -tol.tau && (t - 1.0) * len <= tol.tau {
            return (h.clone(), HullDelta::default());
        }
        let nh = if t < 0.0 {
            Hull::from_ccw(alloc::vec![p, v[1]])
        } else {
            Hull::from_ccw(alloc::vec![v[0], p])
        };
        let delta = HullDelta {
            removed_edges: h.edges().collect(),
            added_edges: nh.edges().collect(),
        };
        return (nh, delta);
    }
    let visible = |i: usize| {
        let a = v[i];
        let b = v[(i + 1) % n];
        orient(a, b, p) < -tol.tau * a.dist(b)
    };
    // Find one visible edge, first near the extreme vertex toward p.
    let mut seed = None;
    if n >= 3 {
        let c = (v[0] + v[n / 3] + v[(2 * n) / 3]) * (1.0 / 3.0);
        if let Some(d) = UnitDir::from_vec(p - c) {
            if let Some(k) = h.extreme_index(d, Tolerance::new(0.0)) {
                if visible(k) {
                    seed = Some(k);
                } else if visible((k + n - 1) % n) {
                    seed = Some((k + n - 1) % n);
                }
            }
        }
    }
    if seed.is_none() {
        seed = (0..n).find(|&i| visible(i));
    }
    let Some(s) = seed else {
        return (h.clone(), HullDelta::default());
    };
    // Expand the visible range [first, last] of edges.
    let mut first = s;
    let mut count = 1;
    while count < n && visible((first + n - 1) % n) {
        first = (first + n - 1) % n;
        count += 1;
    }
    let mut last = s;
    while count < n && visible((last + 1) % n) {
        last = (last + 1) % n;
        count += 1;
    }
    let mut removed_edges: Vec<(Point, Point)> = (0..count)
        .map(|k| {
            let i = (first + k) % n;
            (v[i], v[(i + 1) % n])
        })
        .collect();
    // Surviving chain runs from v[last+1] to v[first] counterclockwise.
    let mut chain: Vec<Point> = Vec::with_capacity(n + 1 - count);
    let mut i = (last + 1) % n;
    loop {
        chain.push(v[i]);
        if i == first {
            break;
        }
        i = (i + 1) % n;
    }
    // Drop chain ends that became collinear with p.
    while chain.len() >= 2 {
        let k = chain.len();
        let (a, b) = (chain[k - 2], chain[k - 1]);
        if orient(a, b, p) > tol.tau * a.dist(p) {
            break;
        }
        removed_edges.push((a, b));
        chain.pop();
    }
    while chain.len() >= 2 {
        let (a, b) = (chain[0], chain[1]);
        if orient(p, a, b) > tol.tau * p.dist(b) {
            break;
        }
        removed_edges.push((a, b));
        chain.remove(0);
    }
    let tail = *chain.last().unwrap();
    let head = chain[0];
    let added_edges = alloc::vec![(tail, p), (p, head)];
    chain.push(p);
    (
        Hull::from_ccw(chain),
        HullDelta {
            removed_edges,
            added_edges,
        },
    )
}

/// Minimum-width covering strip of `h` by rotating calipers.
pub fn min_width_strip(h: &Hull) -> Strip {
    let v = &h.vertices;
    let n = v.len();
    match n {
        0 => Strip {
            normal: UnitDir { dx: 0.0, dy: 1.0 },
            lo: 0.0,
            hi: 0.0,
        },
        1 => Strip::new(UnitDir { dx: 0.0, dy: 1.0 }, v[0].y, v[0].y),
        2 => {
            let nrm = UnitDir::from_vec((v[1] - v[0]).perp()).unwrap();
            let c = nrm.dot(v[0]);
            Strip::new(nrm, c, c)
        }
        _ => {
            let mut best: Option<Strip> = None;
            for (nrm, lo, hi) in calipers(v) {
                if best.is_none_or(|b| hi - lo < b.width()) {
                    best = Some(Strip::new(nrm, lo, hi));
                }
            }
            best.unwrap()
        }
    }
}

/// For each edge of a hull with at least three vertices: inward unit
/// normal, its offset at the edge, and the farthest vertex offset.
fn calipers(v: &[Point]) -> Vec<(UnitDir, f64, f64)> {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    let mut j = 1;
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let nrm = match UnitDir::from_vec((b - a).perp()) {
            Some(d) => d,
            None => continue,
        };
        let lo = nrm.dot(a);
        if j == i {
            j = (i + 1) % n;
        }
        while nrm.dot(v[(j + 1) % n]) > nrm.dot(v[j]) {
            j = (j + 1) % n;
        }
        out.push((nrm, lo, nrm.dot(v[j])));
    }
    out
}

/// An open interval of unoriented strip-normal angles: `(start, start+len)`
/// taken modulo π. `len == 0` is empty, `len == π` excludes everything but
/// `start`, and `len > π` excludes all directions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngularInterval {
    pub start: f64,
    pub len: f64,
}

fn mod_pi(a: f64) -> f64 {
    let r = a - PI * fm::floor(a / PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

impl AngularInterval {
    pub const EMPTY: AngularInterval = AngularInterval {
        start: 0.0,
        len: 0.0,
    };
    pub const ALL: AngularInterval = AngularInterval {
        start: 0.0,
        len: 4.0,
    };

    /// The open interval from normal angle `a` counterclockwise to `b`.
    pub fn between(a: f64, b: f64) -> Self {
        AngularInterval {
            start: mod_pi(a),
            len: mod_pi(b - a),
        }
    }

    pub fn all_but(a: f64) -> Self {
        AngularInterval {
            start: mod_pi(a),
            len: PI,
        }
    }

    pub fn contains_angle(&self, phi: f64) -> bool {
        if self.len > PI {
            return true;
        }
        let t = mod_pi(phi - self.start);
        t > 0.0 && t < self.len
    }

    pub fn contains(&self, d: UnitDir) -> bool {
        self.contains_angle(d.angle())
    }
}

/// Narrowest covering strip whose normal avoids `forbidden`.
pub fn min_width_strip_constrained(h: &Hull, forbidden: AngularInterval) -> Result<Strip> {
    if forbidden.len > PI {
        return Err(Error::NoFeasibleDirection);
    }
    if h.is_empty() {
        return Err(Error::EmptyInput);
    }
    let v = &h.vertices;
    let mut best: Option<Strip> = None;
    let mut consider = |s: Strip| {
        if best.is_none_or(|b| s.width() < b.width()) {
            best = Some(s);
        }
    };
    let strip_at = |nrm: UnitDir| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &p in v.iter() {
            let s = nrm.dot(p);
            lo = lo.min(s);
            hi = hi.max(s);
        }
        Strip::new(nrm, lo, hi)
    };
    if v.len() >= 3 {
        for (nrm, lo, hi) in calipers(v) {
            if !forbidden.contains(nrm) {
                consider(Strip::new(nrm, lo, hi));
            }
        }
    } else if v.len() == 2 {
        let nrm = UnitDir::from_vec((v[1] - v[0]).perp()).unwrap();
        if !forbidden.contains(nrm) {
            consider(strip_at(nrm));
        }
    }
    if forbidden.len > 0.0 || v.len() == 1 {
        consider(strip_at(UnitDir::from_angle(forbidden.start)));
        consider(strip_at(UnitDir::from_angle(
            forbidden.start + forbidden.len,
        )));
    }
    best.ok_or(Error::NoFeasibleDirection)
}

/// The two outer common tangent lines of hulls with disjoint interiors.
pub fn outer_common_tangents(a: &Hull, b: &Hull) -> Result<(Line, Line)> {
    outer_common_tangents_tol(a, b, Tolerance::default())
}

pub fn outer_common_tangents_tol(a: &Hull, b: &Hull, tol: Tolerance) -> Result<(Line, Line)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !separated(a, b, tol) {
        return Err(Error::HullsInterpenetrate);
    }
    let mut all: Vec<Point> = a.vertices.clone();
    all.extend_from_slice(&b.vertices);
    let u = convex_hull_tol(&all, tol)?;
    let in_a = |p: Point| a.vertices.iter().any(|q| q.dist(p) <= tol.tau);
    let in_b = |p: Point| b.vertices.iter().any(|q| q.dist(p) <= tol.tau);
    let mut bridges: Vec<Line> = Vec::new();
    for (s, t) in u.edges() {
        let st = (in_a(s) && in_b(t)) || (in_b(s) && in_a(t));
        if st {
            if let Some(l) = Line::through(s, t) {
                bridges.push(l);
            }
        }
    }
    if bridges.len() == 1 {
        bridges.push(bridges[0]);
    }
    if bridges.len() < 2 {
        return Err(Error::HullsInterpenetrate);
    }
    Ok((bridges[0], bridges[1]))
}

fn separated(a: &Hull, b: &Hull, tol: Tolerance) -> bool {
    let mut axes: Vec<UnitDir> = Vec::new();
    for h in [a, b] {
        for (s, t) in h.edges() {
            if let Some(d) = UnitDir::from_vec((t - s).perp()) {
                axes.push(d);
            }
        }
    }
    let centroid = |h: &Hull| {
        let mut c = Point::new(0.0, 0.0);
        for &p in &h.vertices {
            c = c + p;
        }
        c * (1.0 / h.vertices.len() as f64)
    };
    if let Some(d) = UnitDir::from_vec(centroid(b) - centroid(a)) {
        axes.push(d);
        axes.push(d.perp());
    }
    let range = |h: &Hull, d: UnitDir| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &p in &h.vertices {
            lo = lo.min(d.dot(p));
            hi = hi.max(d.dot(p));
        }
        (lo, hi)
    };
    axes.iter().any(|&d| {
        let (alo, ahi) = range(a, d);
        let (blo, bhi) = range(b, d);
        ahi <= blo + tol.tau || bhi <= alo + tol.tau
    })
}

/// Closed halfplane `{p : <normal, p> >= offset}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane {
    pub normal: UnitDir,
    pub offset: f64,
}

impl HalfPlane {
    pub fn new(normal: UnitDir, offset: f64) -> Self {
        HalfPlane { normal, offset }
    }

    pub fn whole_plane() -> Self {
        HalfPlane {
            normal: UnitDir { dx: 0.0, dy: 1.0 },
            offset: f64::NEG_INFINITY,
        }
    }

    /// Closed halfplane left of the directed line through `a` with direction `d`.
    pub fn left_of(a: Point, d: UnitDir) -> Self {
        let n = d.perp();
        HalfPlane {
            normal: n,
            offset: n.dot(a),
        }
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        self.normal.dot(p) >= self.offset
    }
}

/// Query contract: an extreme point of `P ∩ h` in direction `d`, ties
/// within the tolerance broken toward the lexicographically smallest point.
pub trait HalfplaneExtremeIndex {
    fn extreme(&self, h: &HalfPlane, d: UnitDir) -> Option<Point>;
    fn points(&self) -> &[Point];
}

/// Query-time filter-and-scan; linear per query, no preprocessing.
#[derive(Clone, Debug)]
pub struct FilterScanIndex {
    pts: Vec<Point>,
    tol: Tolerance,
}

impl FilterScanIndex {
    pub fn new(pts: &[Point], tol: Tolerance) -> Result<Self> {
        if pts.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(FilterScanIndex {
            pts: pts.to_vec(),
            tol,
        })
    }
}

impl HalfplaneExtremeIndex for FilterScanIndex {
    fn extreme(&self, h: &HalfPlane, d: UnitDir) -> Option<Point> {
        let mut fmax = f64::NEG_INFINITY;
        for &p in &self.pts {
            if h.contains(p) {
                fmax = fmax.max(d.dot(p));
            }
        }
        if fmax == f64::NEG_INFINITY {
            return None;
        }
        let mut best: Option<Point> = None;
        for &p in &self.pts {
            if h.contains(p)
                && d.dot(p) >= fmax - self.tol.tau
                && best.is_none_or(|b| p.lex_cmp(&b).is_lt())
            {
                best = Some(p);
            }
        }
        best
    }

    fn points(&self) -> &[Point] {
        &self.pts
    }
}

pub fn build_halfplane_index(pts: &[Point]) -> Result<FilterScanIndex> {
    FilterScanIndex::new(pts, Tolerance::default())
}

pub fn halfplane_extreme<I: HalfplaneExtremeIndex + ?Sized>(
    idx: &I,
    h: &HalfPlane,
    d: UnitDir,
) -> Result<Point> {
    idx.extreme(h, d).ok_or(Error::EmptyRegion)
}
