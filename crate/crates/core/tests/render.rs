use geopict::polynomial::parse_expression;
use geopict::render::{render_svg, RenderError, RenderOptions};
use geopict::tracing::{extract_picture, GeometricPicture};

const FIG1: &str = "z^13-6z^7+z^4-z^3+5z^2+z+3+2i";

fn picture(expr: &str) -> GeometricPicture {
    extract_picture(&parse_expression(expr).unwrap()).unwrap()
}

fn parse_points(s: &str) -> Vec<(f64, f64)> {
    s.split_whitespace()
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect()
}

#[test]
fn identity_draws_an_axes_cross() {
    let svg = render_svg(&picture("z"), &RenderOptions::default()).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let lines: Vec<_> = doc.descendants().filter(|n| n.has_tag_name("polyline")).collect();
    assert_eq!(lines.len(), 2);
    let mut ends = Vec::new();
    for l in &lines {
        let pts = parse_points(l.attribute("points").unwrap());
        for (x, y) in [pts[0], *pts.last().unwrap()] {
            // back to mathematical orientation
            ends.push((-y).atan2(x).to_degrees().rem_euclid(360.0).round() as i64 % 360);
        }
    }
    ends.sort();
    assert_eq!(ends, [0, 90, 180, 270]);
}

#[test]
fn fig1_has_26_strands_and_13_roots() {
    let pic = picture(FIG1);
    let svg = render_svg(&pic, &RenderOptions::default()).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
    assert_eq!(count("polyline"), 26);
    assert_eq!(count("circle"), 13);
    // every strand appears once, identified by its rays
    let mut ids: Vec<(String, String)> = doc
        .descendants()
        .filter(|n| n.has_tag_name("polyline"))
        .map(|n| (n.attribute("data-start").unwrap().into(), n.attribute("data-end").unwrap().into()))
        .collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 26);
    let root = doc.root_element();
    assert_eq!(root.attribute("version"), Some("1.1"));
    let vb: Vec<f64> = root.attribute("viewBox").unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
    assert_eq!(vb[0], vb[1]);
    assert!((vb[0] + vb[2] / 2.0).abs() < 1e-6, "viewBox is centred");
}

#[test]
fn orientation_arrows_follow_the_axes_for_z() {
    let opts = RenderOptions { show_orientation: true, show_roots: false, ..RenderOptions::default() };
    let svg = render_svg(&picture("z"), &opts).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let arrows: Vec<_> = doc.descendants().filter(|n| n.attribute("class") == Some("arrow")).collect();
    assert_eq!(arrows.len(), 4);
    for a in arrows {
        let pts = parse_points(a.attribute("points").unwrap());
        let tip = pts[0];
        let base = ((pts[1].0 + pts[2].0) / 2.0, (pts[1].1 + pts[2].1) / 2.0);
        let (dx, dy) = (tip.0 - base.0, -(tip.1 - base.1));
        match a.attribute("data-colour").unwrap() {
            "R" => assert!(dx > 0.0 && dy.abs() < 1e-6, "R arrow ({dx}, {dy})"),
            "I" => assert!(dy > 0.0 && dx.abs() < 1e-6, "I arrow ({dx}, {dy})"),
            c => panic!("colour {c}"),
        }
    }
}

#[test]
fn regions_are_tinted_by_quadrant() {
    let pic = picture("z^3-(1/10+i/200)z+1+i/1000");
    let opts = RenderOptions { show_regions: true, ..RenderOptions::default() };
    let svg = render_svg(&pic, &opts).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let quads: Vec<&str> = doc.descendants().filter_map(|n| n.attribute("data-quadrant")).collect();
    // 3d + 1 regions, each quadrant present
    assert_eq!(quads.len(), 10);
    for q in ["A", "B", "C", "D"] {
        assert!(quads.contains(&q));
    }
}

#[test]
fn json_round_trip_renders_identically() {
    let pic = picture("z^2+1+i");
    let again = GeometricPicture::from_json(&pic.to_json()).unwrap();
    let opts = RenderOptions { show_regions: true, show_orientation: true, ..RenderOptions::default() };
    assert_eq!(render_svg(&pic, &opts).unwrap(), render_svg(&again, &opts).unwrap());
}

#[test]
fn degree_zero_is_rejected() {
    let pic = GeometricPicture::new(0, Vec::new(), Vec::new());
    assert_eq!(render_svg(&pic, &RenderOptions::default()), Err(RenderError::EmptyPicture));
}
