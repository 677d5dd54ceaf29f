//! SVG figure of the disk family `D_rho(x_k, r)` and its envelope.

use std::fmt::Write as _;
use std::path::PathBuf;

use pseudohyp::{Envelope64, GeometryError, Point, PseudoDisk64};

/// Half-width of the square drawing area in model units.
pub const EXTENT: f64 = 1.1;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub r: f64,
    pub n_disks: usize,
    pub show_envelope: bool,
    pub show_cone: bool,
    pub width_px: u32,
    pub output_path: PathBuf,
}

/// Evenly spaced family centres strictly inside `(-1, 1)`.
pub fn family_centers(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| 2.0 * k as f64 / (n + 1) as f64 - 1.0)
        .collect()
}

fn num(x: f64) -> String {
    // Six decimals is far below a pixel at any sane width.
    let s = format!("{:.6}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Builds the SVG document. Model point `x + iy` is drawn at `(x, -y)`.
pub fn render_svg(cfg: &RenderConfig) -> Result<String, GeometryError> {
    let spec = Envelope64::new(cfg.r)?;
    let stroke = 2.0 * EXTENT / cfg.width_px as f64;
    let mut svg = String::new();
    let w = cfg.width_px;
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="{o} {o} {s} {s}">"#,
        o = num(-EXTENT),
        s = num(2.0 * EXTENT)
    );
    let _ = writeln!(
        svg,
        "<title>Pseudohyperbolic disks of radius {} on the real diameter</title>",
        cfg.r
    );
    let _ = writeln!(
        svg,
        r#"<rect x="{o}" y="{o}" width="{s}" height="{s}" fill="white"/>"#,
        o = num(-EXTENT),
        s = num(2.0 * EXTENT)
    );
    let _ = writeln!(
        svg,
        r#"<circle class="unit-circle" cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="{}"/>"#,
        num(1.5 * stroke)
    );
    let _ = writeln!(
        svg,
        r#"<g class="family" fill="steelblue" fill-opacity="0.15" stroke="steelblue" stroke-width="{}">"#,
        num(stroke)
    );
    for x in family_centers(cfg.n_disks) {
        let e = PseudoDisk64::new(Point::new(x, 0.0), cfg.r)?.to_euclidean();
        let _ = writeln!(
            svg,
            r#"<circle class="family-disk" cx="{}" cy="0" r="{}"/>"#,
            num(e.center().re),
            num(e.radius())
        );
    }
    let _ = writeln!(svg, "</g>");
    if cfg.show_envelope {
        let rad = num(spec.circle_upper.radius());
        // Upper arc runs clockwise on screen from (-1, 0) to (1, 0); the lower one counter-clockwise.
        for (class, sweep) in [("envelope-upper", 1), ("envelope-lower", 0)] {
            let _ = writeln!(
                svg,
                r#"<path class="envelope {class}" d="M -1 0 A {rad} {rad} 0 0 {sweep} 1 0" fill="none" stroke="crimson" stroke-width="{}"/>"#,
                num(2.0 * stroke)
            );
        }
    }
    if cfg.show_cone {
        let tan = spec.tan_beta();
        let x_end = -EXTENT;
        let rise = tan * (1.0 - x_end);
        for sign in [1.0, -1.0] {
            let _ = writeln!(
                svg,
                r#"<line class="cone" x1="1" y1="0" x2="{}" y2="{}" stroke="darkgreen" stroke-dasharray="{d} {d}" stroke-width="{}"/>"#,
                num(x_end),
                num(-sign * rise),
                num(stroke),
                d = num(6.0 * stroke)
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
