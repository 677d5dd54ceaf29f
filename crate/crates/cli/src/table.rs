use pseudohyp::{Envelope64, Result};

use crate::format::significant;

pub const HEADER: &str = "r,center_im,radius,beta_rad,tan_beta,arc_length,area";

/// Radii `r_min, ..., r_max` in `steps` evenly spaced values.
pub fn radii(r_min: f64, r_max: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![r_min];
    }
    let span = r_max - r_min;
    (0..steps)
        .map(|k| {
            if k + 1 == steps {
                r_max
            } else {
                r_min + span * k as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

pub fn row(r: f64) -> Result<String> {
    let spec = Envelope64::new(r)?;
    let cols = [
        r,
        spec.circle_upper.center().im,
        spec.circle_upper.radius(),
        spec.beta,
        spec.tan_beta(),
        spec.arc_length(),
        spec.area(),
    ];
    Ok(cols
        .iter()
        .map(|&v| significant(v, 15))
        .collect::<Vec<_>>()
        .join(","))
}

/// Full CSV document, `\n` terminated.
pub fn table(r_min: f64, r_max: f64, steps: usize) -> Result<String> {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in radii(r_min, r_max, steps) {
        out.push_str(&row(r)?);
        out.push('\n');
    }
    Ok(out)
}
