//! SVG drawings of traced pictures.
//!
//! Mathematical `y` points up; it is negated at emission. Coordinates are
//! printed with six decimals, so equal pictures give identical documents.

use std::f64::consts::PI;
use std::fmt::Write as _;

use thiserror::Error;

use crate::polynomial::Complex;
use crate::rays::{Colour, Quadrant};
use crate::tracing::{GeometricPicture, Strand};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error("a picture of degree 0 has nothing to draw")]
    EmptyPicture,
    #[error("picture cannot be drawn: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Half-width of the square viewport; `None` fits all strand samples.
    pub half_width: Option<f64>,
    /// Side of the image in pixels.
    pub size_px: f64,
    /// Curve width in pixels.
    pub stroke_px: f64,
    /// Root marker radius in pixels.
    pub root_radius_px: f64,
    pub show_roots: bool,
    /// Tint the regions A, B, C, D where `P` lies in the first .. fourth quadrant.
    pub show_regions: bool,
    /// Arrowheads in the direction of increasing `P` (resp. `P/i`).
    pub show_orientation: bool,
    pub r_colour: String,
    pub i_colour: String,
    /// Fill colours of regions A, B, C, D.
    pub region_colours: [String; 4],
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            half_width: None,
            size_px: 600.0,
            stroke_px: 1.5,
            root_radius_px: 3.0,
            show_roots: true,
            show_regions: false,
            show_orientation: false,
            r_colour: "#1f4fd8".into(),
            i_colour: "#1e9e3e".into(),
            region_colours: ["#fff3c4".into(), "#ffd9d9".into(), "#dde6ff".into(), "#dcf5dc".into()],
        }
    }
}

/// Fixed six-decimal form; negative zero prints as zero.
fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn pt(z: Complex) -> String {
    format!("{},{}", num(z.re), num(-z.im))
}

fn points_attr(points: impl IntoIterator<Item = Complex>) -> String {
    points.into_iter().map(pt).collect::<Vec<_>>().join(" ")
}

/// Index of the sample closest to the strand's root.
fn root_index(pic: &GeometricPicture, s: &Strand) -> Result<usize, RenderError> {
    let c = s.crossings.first().ok_or_else(|| RenderError::Inconsistent("strand without a root".into()))?;
    let root = *pic.roots.get(c.root).ok_or_else(|| RenderError::Inconsistent(format!("unknown root {}", c.root)))?;
    s.points
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - root).norm().total_cmp(&(b.1 - root).norm()))
        .map(|(i, _)| i)
        .ok_or_else(|| RenderError::Inconsistent("strand without samples".into()))
}

/// For every ray `k`, the samples from its root out to the far end, and the root index.
fn half_strands(pic: &GeometricPicture) -> Result<Vec<(Vec<Complex>, usize)>, RenderError> {
    let n = 4 * pic.degree;
    let mut halves: Vec<Option<(Vec<Complex>, usize)>> = vec![None; n];
    for s in &pic.strands {
        let i = root_index(pic, s)?;
        let root = s.crossings[0].root;
        let inward: Vec<Complex> = s.points[..=i].iter().rev().copied().collect();
        let outward: Vec<Complex> = s.points[i..].to_vec();
        for (k, h) in [(s.start_ray.0, inward), (s.end_ray.0, outward)] {
            let slot = halves.get_mut(k).ok_or_else(|| RenderError::Inconsistent(format!("ray {k} out of range")))?;
            *slot = Some((h, root));
        }
    }
    halves
        .into_iter()
        .enumerate()
        .map(|(k, h)| h.ok_or_else(|| RenderError::Inconsistent(format!("no strand ends at ray {k}"))))
        .collect()
}

/// Boundary polygons of the complementary regions, one per region, with the
/// quadrant of its values. A region is walked with its interior on the left:
/// in along one ray's half-strand, out along the clockwise-next half-strand
/// at the root, then along the circle of radius `far` to the following ray.
fn region_polygons(pic: &GeometricPicture, far: f64) -> Result<Vec<(Quadrant, Vec<Complex>)>, RenderError> {
    let n = 4 * pic.degree;
    let halves = half_strands(pic)?;
    let crosses: Vec<[usize; 4]> = (0..pic.degree)
        .map(|r| pic.root_rays(r).map(|rays| rays.map(|x| x.0)))
        .collect::<Option<_>>()
        .ok_or_else(|| RenderError::Inconsistent("root without a cross".into()))?;
    let angle = |k: usize| PI * k as f64 / (2 * pic.degree) as f64;
    let mut visited = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut poly = Vec::new();
        let mut sector = start;
        for _ in 0..n {
            let c = (sector + 1) % n;
            let (half, root) = &halves[c];
            poly.push(Complex::from_polar(far, angle(c)));
            poly.extend(half.iter().rev());
            let cross = &crosses[*root];
            let j = cross.iter().position(|&x| x == c).ok_or_else(|| RenderError::Inconsistent(format!("ray {c} not at its root")))?;
            let b = cross[(j + 3) % 4];
            poly.extend(halves[b].0.iter());
            // arc at infinity from ray b to ray b + 1
            let steps = 8;
            for s in 0..=steps {
                let a = angle(b) + (angle(b + 1) - angle(b)) * s as f64 / steps as f64;
                poly.push(Complex::from_polar(far, a));
            }
            visited[b] = true;
            if b == start {
                break;
            }
            sector = b;
        }
        out.push((Quadrant::of_sector(start), poly));
    }
    Ok(out)
}

/// Arrowhead at `at` pointing along `dir`, sized in user units.
fn arrow(at: Complex, dir: Complex, size: f64) -> [Complex; 3] {
    let u = dir / dir.norm();
    let n = Complex::new(-u.im, u.re);
    [at + u * size, at - u * (0.6 * size) + n * (0.5 * size), at - u * (0.6 * size) - n * (0.5 * size)]
}

fn data_extent(pic: &GeometricPicture) -> f64 {
    pic.strands
        .iter()
        .flat_map(|s| s.points.iter())
        .chain(pic.roots.iter())
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(0.0, f64::max)
}

pub fn render_svg(pic: &GeometricPicture, opts: &RenderOptions) -> Result<String, RenderError> {
    if pic.degree == 0 {
        return Err(RenderError::EmptyPicture);
    }
    let h = match opts.half_width {
        Some(h) if h > 0.0 && h.is_finite() => h,
        Some(h) => return Err(RenderError::Inconsistent(format!("half-width {h} is not positive"))),
        None => 1.02 * data_extent(pic).max(f64::MIN_POSITIVE),
    };
    let px = 2.0 * h / opts.size_px;
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="{1} {1} {2} {2}">"#,
        num(opts.size_px),
        num(-h),
        num(2.0 * h)
    );
    let _ = writeln!(svg, r#"<rect x="{0}" y="{0}" width="{1}" height="{1}" fill="white"/>"#, num(-h), num(2.0 * h));
    if opts.show_regions {
        let _ = writeln!(svg, r#"<g id="regions" stroke="none">"#);
        for (q, poly) in region_polygons(pic, 2.0 * h)? {
            let _ = writeln!(
                svg,
                r#"<polygon class="region" data-quadrant="{}" fill="{}" points="{}"/>"#,
                q.letter(),
                opts.region_colours[q.index()],
                points_attr(poly)
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(
        svg,
        r#"<g id="strands" fill="none" stroke-width="{}" stroke-linejoin="round" stroke-linecap="round">"#,
        num(opts.stroke_px * px)
    );
    for s in &pic.strands {
        let colour = match s.colour {
            Colour::R => &opts.r_colour,
            Colour::I => &opts.i_colour,
        };
        let _ = writeln!(
            svg,
            r#"<polyline class="strand" data-colour="{}" data-start="{}" data-end="{}" stroke="{}" points="{}"/>"#,
            s.colour.letter(),
            s.start_ray.0,
            s.end_ray.0,
            colour,
            points_attr(s.points.iter().copied())
        );
    }
    let _ = writeln!(svg, "</g>");
    if opts.show_orientation {
        let _ = writeln!(svg, r#"<g id="orientation" stroke="none">"#);
        for s in &pic.strands {
            let colour = if s.colour == Colour::R { &opts.r_colour } else { &opts.i_colour };
            let i = root_index(pic, s)?;
            // one arrow on each side of the root, halfway along the samples
            for j in [i / 2, i + (s.points.len() - 1 - i) / 2] {
                if j + 1 >= s.points.len() {
                    continue;
                }
                let dir = s.points[j + 1] - s.points[j];
                if dir.norm() == 0.0 {
                    continue;
                }
                let tri = arrow(s.points[j], dir, 8.0 * px);
                let _ = writeln!(
                    svg,
                    r#"<polygon class="arrow" data-colour="{}" fill="{}" points="{}"/>"#,
                    s.colour.letter(),
                    colour,
                    points_attr(tri)
                );
            }
        }
        let _ = writeln!(svg, "</g>");
    }
    if opts.show_roots {
        let _ = writeln!(svg, r#"<g id="roots" fill="black">"#);
        for z in &pic.roots {
            let _ = writeln!(
                svg,
                r#"<circle class="root" cx="{}" cy="{}" r="{}"/>"#,
                num(z.re),
                num(-z.im),
                num(opts.root_radius_px * px)
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_expression;
    use crate::tracing::extract_picture;

    fn picture(expr: &str) -> GeometricPicture {
        extract_picture(&parse_expression(expr).unwrap()).unwrap()
    }

    #[test]
    fn number_format() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(1.5), "1.500000");
    }

    #[test]
    fn empty_picture() {
        let pic = GeometricPicture::new(0, Vec::new(), Vec::new());
        assert_eq!(render_svg(&pic, &RenderOptions::default()), Err(RenderError::EmptyPicture));
    }

    #[test]
    fn identity_regions_are_quadrants() {
        let pic = picture("z");
        let polys = region_polygons(&pic, 10.0).unwrap();
        assert_eq!(polys.len(), 4);
        for (q, poly) in polys {
            // the mean of the polygon lies in the open quadrant of its values
            let mean = poly.iter().sum::<Complex>() / poly.len() as f64;
            let expected = match q {
                Quadrant::A => (1.0, 1.0),
                Quadrant::B => (-1.0, 1.0),
                Quadrant::C => (-1.0, -1.0),
                Quadrant::D => (1.0, -1.0),
            };
            assert!(mean.re * expected.0 > 0.0 && mean.im * expected.1 > 0.0, "{q:?} {mean}");
        }
    }

    #[test]
    fn region_count_is_3d_plus_1() {
        let pic = picture("z^3-(1/10+i/200)z+1+i/1000");
        assert_eq!(region_polygons(&pic, 20.0).unwrap().len(), 10);
    }
}
