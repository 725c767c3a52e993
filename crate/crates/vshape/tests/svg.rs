use vshape::core::{solve_exact, Point, SolveOptions, UnitDir, VShape};
use vshape::gen::uniform;
use vshape::svg::render;

fn parse_points(s: &str) -> Vec<Point> {
    s.split_whitespace()
        .map(|xy| {
            let (x, y) = xy.split_once(',').unwrap();
            Point::new(x.parse().unwrap(), -y.parse::<f64>().unwrap())
        })
        .collect()
}

/// Arm polygons as drawn, in input coordinates.
fn arms(svg: &str) -> Vec<Vec<Point>> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed XML");
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    doc.descendants()
        .filter(|n| n.tag_name().name() == "polygon" && n.attribute("class") == Some("arm"))
        .map(|n| parse_points(n.attribute("points").unwrap()))
        .collect()
}

fn extent(poly: &[Point], n: UnitDir) -> f64 {
    let hi = poly.iter().map(|p| n.dot(*p)).fold(f64::NEG_INFINITY, f64::max);
    let lo = poly.iter().map(|p| n.dot(*p)).fold(f64::INFINITY, f64::min);
    hi - lo
}

#[test]
fn well_formed_with_one_polygon_per_arm() {
    let pts = uniform(10, 3).unwrap();
    let r = solve_exact(&pts, &SolveOptions::default()).unwrap();
    let svg = render(Some(&r.best), &pts);
    assert_eq!(arms(&svg).len(), 2);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.tag_name().name() == "circle").count(), 10);
    assert_eq!(doc.descendants().filter(|n| n.attribute("class") == Some("hull")).count(), 1);
}

#[test]
fn points_only() {
    let pts = uniform(5, 1).unwrap();
    let svg = render(None, &pts);
    assert!(arms(&svg).is_empty());
}

#[test]
fn balanced_arms_are_drawn_equally_wide() {
    for seed in 0..10 {
        let pts = uniform(9, 100 + seed).unwrap();
        let opts = SolveOptions {
            balanced: true,
            ..Default::default()
        };
        let v = solve_exact(&pts, &opts).unwrap().best;
        let w = v.widths();
        assert!((w.left - w.right).abs() <= 1e-12);
        let a = arms(&render(Some(&v), &pts));
        let wl = extent(&a[0], v.dir_left.perp());
        let wr = extent(&a[1], v.dir_right.perp());
        assert!((wl - wr).abs() <= 1e-9 * (1.0 + wl), "seed {seed}: {wl} vs {wr}");
        assert!((wl - w.left).abs() <= 1e-9 * (1.0 + wl), "seed {seed}: {wl} vs {}", w.left);
    }
}

#[test]
fn arms_stay_inside_the_plot_box() {
    let pts = [Point::new(0.0, 0.0), Point::new(1.0, 1.0), Point::new(-1.0, 1.0)];
    let v = VShape {
        apex_inner: Point::new(0.0, 0.0),
        apex_outer: Point::new(0.0, -0.1),
        dir_left: UnitDir::from_angle(3.0 * std::f64::consts::FRAC_PI_4),
        dir_right: UnitDir::from_angle(std::f64::consts::FRAC_PI_4),
    };
    let b = vshape::svg::PlotBox::around(&pts, v.width());
    for arm in arms(&render(Some(&v), &pts)) {
        for p in arm {
            assert!(p.x >= b.min.x - 1e-12 && p.x <= b.max.x + 1e-12);
            assert!(p.y >= b.min.y - 1e-12 && p.y <= b.max.y + 1e-12);
        }
    }
}
