//! SVG 1.1 plots: points, their hull and the two arms of a V-shape.
//!
//! Arms are unbounded, so each is drawn as its parallelogram up to the
//! plot box (bounding box of the points padded by 20% of its larger side
//! plus twice the V width). The y axis points up.

use std::fmt::Write;

use vshape_core::{convex_hull, Point, VShape};

/// Axis-aligned plot box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotBox {
    pub min: Point,
    pub max: Point,
}

impl PlotBox {
    pub fn around(pts: &[Point], width: f64) -> PlotBox {
        let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in pts {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let ext = (hi.x - lo.x).max(hi.y - lo.y);
        let mut pad = 0.2 * ext + 2.0 * width;
        if pad <= 0.0 {
            pad = 1.0;
        }
        PlotBox {
            min: Point::new(lo.x - pad, lo.y - pad),
            max: Point::new(hi.x + pad, hi.y + pad),
        }
    }

    fn diag(&self) -> f64 {
        self.min.dist(self.max)
    }
}

/// `poly` clipped to `{p : a*p.x + b*p.y <= c}`.
fn clip_half(poly: &[Point], a: f64, b: f64, c: f64) -> Vec<Point> {
    let f = |p: Point| c - (a * p.x + b * p.y);
    let mut out = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let (fp, fq) = (f(p), f(q));
        if fp >= 0.0 {
            out.push(p);
        }
        if (fp >= 0.0) != (fq >= 0.0) {
            out.push(p + (q - p) * (fp / (fp - fq)));
        }
    }
    out
}

fn clip_to_box(poly: &[Point], b: &PlotBox) -> Vec<Point> {
    let mut p = poly.to_vec();
    p = clip_half(&p, 1.0, 0.0, b.max.x);
    p = clip_half(&p, -1.0, 0.0, -b.min.x);
    p = clip_half(&p, 0.0, 1.0, b.max.y);
    clip_half(&p, 0.0, -1.0, -b.min.y)
}

/// The two arms as polygons clipped to `b`, left arm first.
pub fn arm_polygons(v: &VShape, b: &PlotBox) -> [Vec<Point>; 2] {
    let far = b.diag() * 4.0 + v.apex_inner.dist(b.min) + v.apex_outer.dist(b.min);
    let (x, y) = (v.apex_inner, v.apex_outer);
    let arm = |d: vshape_core::UnitDir| {
        let quad = [x, y, y + d.v() * far, x + d.v() * far];
        clip_to_box(&quad, b)
    };
    [arm(v.dir_left), arm(v.dir_right)]
}

fn points_attr(poly: &[Point]) -> String {
    let mut s = String::new();
    for (i, p) in poly.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{},{}", p.x, -p.y);
    }
    s
}

pub fn render(v: Option<&VShape>, pts: &[Point]) -> String {
    let width = v.map_or(0.0, |v| v.width());
    let b = PlotBox::around(pts, width);
    let (w, h) = (b.max.x - b.min.x, b.max.y - b.min.y);
    let unit = w.max(h) / 400.0;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="{}" viewBox="{} {} {} {}">"#,
        (800.0 * h / w).round().max(1.0),
        b.min.x,
        -b.max.y,
        w,
        h
    );
    if let Some(v) = v {
        for (i, arm) in arm_polygons(v, &b).iter().enumerate() {
            let _ = writeln!(
                s,
                r##"  <polygon class="arm" id="arm-{}" points="{}" fill="#4a90d9" fill-opacity="0.3" stroke="#1f5fa0" stroke-width="{}"/>"##,
                if i == 0 { "left" } else { "right" },
                points_attr(arm),
                unit
            );
        }
    }
    if let Ok(hull) = convex_hull(pts) {
        if hull.len() >= 2 {
            let _ = writeln!(
                s,
                r##"  <polygon class="hull" points="{}" fill="none" stroke="#888888" stroke-width="{}" stroke-dasharray="{} {}"/>"##,
                points_attr(hull.vertices()),
                unit,
                4.0 * unit,
                2.0 * unit
            );
        }
    }
    let _ = writeln!(s, r##"  <g class="points" fill="#d0342c">"##);
    for p in pts {
        let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="{}"/>"#, p.x, -p.y, 2.0 * unit);
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, "</svg>");
    s
}
