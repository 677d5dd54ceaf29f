//! Grid and Monte Carlo estimates of the area covered by the disk family.

use num_complex::Complex64;
use rayon::prelude::*;

use super::diameter::within_diameter_distance;
use super::sampler::SeededSampler;

/// Tolerance passed to the diameter-distance search for each cell.
pub const CELL_TOL: f64 = 1e-12;

/// Covered cell counts of an `n × n` grid over `[-1, 1]²`, split by half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridCounts {
    pub n: usize,
    pub upper: u64,
    pub lower: u64,
    pub on_axis: u64,
}

impl GridCounts {
    pub fn total(&self) -> u64 {
        self.upper + self.lower + self.on_axis
    }

    pub fn area(&self) -> f64 {
        let h = 2.0 / self.n as f64;
        self.total() as f64 * h * h
    }
}

fn covered(z: Complex64, r: f64) -> bool {
    z.norm_sqr() < 1.0 && within_diameter_distance(z, r, CELL_TOL)
}

/// Counts cell centres `z` with `min_x rho(z, x) < r`. Rows are processed in
/// parallel; integer counts make the result independent of scheduling.
pub fn grid_counts(r: f64, n: usize) -> GridCounts {
    let h = 2.0 / n as f64;
    let center = |k: usize| -1.0 + (k as f64 + 0.5) * h;
    let rows: Vec<(f64, u64)> = (0..n)
        .into_par_iter()
        .map(|j| {
            let im = center(j);
            let hits = (0..n)
                .filter(|&i| covered(Complex64::new(center(i), im), r))
                .count() as u64;
            (im, hits)
        })
        .collect();
    let mut counts = GridCounts {
        n,
        upper: 0,
        lower: 0,
        on_axis: 0,
    };
    for (im, hits) in rows {
        if im > 0.0 {
            counts.upper += hits;
        } else if im < 0.0 {
            counts.lower += hits;
        } else {
            counts.on_axis += hits;
        }
    }
    counts
}

/// Area of the union of `D_rho(x, r)` by counting cell centres of an `n × n` grid.
pub fn grid_area(r: f64, n: usize) -> f64 {
    grid_counts(r, n).area()
}

/// Seeded Monte Carlo area estimate over `[-1, 1]²`; a cross-check only.
pub fn monte_carlo_area(r: f64, samples: usize, sampler: &SeededSampler) -> f64 {
    const CHUNK: usize = 4096;
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut s = sampler.fork(c as u64);
            let len = CHUNK.min(samples - c * CHUNK);
            (0..len)
                .filter(|_| {
                    let z = Complex64::new(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
                    covered(z, r)
                })
                .count() as u64
        })
        .sum();
    4.0 * hits as f64 / samples as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_conjugation_symmetric() {
        let c = grid_counts(0.5, 200);
        assert_eq!(c.upper, c.lower);
        assert_eq!(c.on_axis, 0);
        let odd = grid_counts(0.5, 101);
        assert_eq!(odd.upper, odd.lower);
        assert!(odd.on_axis > 0);
    }

    #[test]
    fn small_radius_area_is_small() {
        assert!(grid_area(0.05, 400) < 0.3);
    }

    #[test]
    fn refinement_converges() {
        let exact = 1.397_797_556_255_038_2;
        let e1 = (grid_area(0.5, 100) - exact).abs();
        let e2 = (grid_area(0.5, 400) - exact).abs();
        assert!(e2 < e1, "{e2} vs {e1}");
    }

    #[test]
    fn monte_carlo_is_reproducible() {
        let s = SeededSampler::new(9);
        let a = monte_carlo_area(0.5, 20_000, &s);
        assert_eq!(a.to_bits(), monte_carlo_area(0.5, 20_000, &s).to_bits());
        assert!((a - 1.3978).abs() < 0.1);
    }
}
