//! Regular grid of the unit ball carrying the discretized spherical
//! uniform reference measure.
//!
//! The grid intersects `k_s` rays from the origin with `k_r` concentric
//! spheres of radius `j / (k_r + 1)` and adds the origin itself, giving
//! `k = k_r * k_s + 1` points. For d = 2 the rays are equispaced angles
//! starting at 0; for d >= 3 they are seeded i.i.d. uniform draws on the
//! unit sphere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{norm, scale, Point};
use crate::kernel::WeightedSample;
use crate::simulate::draw_standard_normal;

/// The reference grid on the unit ball.
///
/// Non-origin points are stored ring-major: index `(j - 1) * k_s + s` is
/// ring `j` (radius `j / (k_r + 1)`), direction `s`. The origin is last.
#[derive(Debug, Clone, Serialize)]
pub struct SphericalGrid {
    d: usize,
    #[serde(rename = "k_R")]
    k_r: usize,
    #[serde(rename = "k_S")]
    k_s: usize,
    seed: u64,
    points: Vec<Point>,
    #[serde(skip)]
    directions: Vec<Point>,
}

impl SphericalGrid {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn ring_count(&self) -> usize {
        self.k_r
    }

    pub fn direction_count(&self) -> usize {
        self.k_s
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Total number of gridpoints, `k_r * k_s + 1`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn directions(&self) -> &[Point] {
        &self.directions
    }

    pub fn origin_index(&self) -> usize {
        self.points.len() - 1
    }

    /// Radius of ring `j` (1-based).
    pub fn ring_radius(&self, j: usize) -> f64 {
        j as f64 / (self.k_r as f64 + 1.0)
    }

    /// Gridpoint index for ring `j` (1-based) and direction `s`.
    pub fn index_of(&self, ring: usize, dir: usize) -> usize {
        (ring - 1) * self.k_s + dir
    }

    /// Inverse of [`index_of`]; `None` for the origin.
    pub fn ring_dir_of(&self, idx: usize) -> Option<(usize, usize)> {
        if idx == self.origin_index() {
            None
        } else {
            Some((idx / self.k_s + 1, idx % self.k_s))
        }
    }

    /// Two grids are interchangeable when their defining parameters match;
    /// construction is deterministic so the points then match too.
    pub fn same_layout(&self, other: &SphericalGrid) -> bool {
        self.d == other.d
            && self.k_r == other.k_r
            && self.k_s == other.k_s
            && (self.d <= 2 || self.seed == other.seed)
    }
}

// Deserialization rebuilds the direction vectors from the stored
// parameters; construction is deterministic so they agree with the
// serialized points.
impl<'de> Deserialize<'de> for SphericalGrid {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            d: usize,
            #[serde(rename = "k_R")]
            k_r: usize,
            #[serde(rename = "k_S")]
            k_s: usize,
            seed: u64,
            points: Vec<Point>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut grid = build_grid(raw.d, raw.k_r, raw.k_s, raw.seed)
            .map_err(serde::de::Error::custom)?;
        if raw.points.len() != grid.points.len() {
            return Err(serde::de::Error::custom("gridpoint count mismatch"));
        }
        grid.points = raw.points;
        Ok(grid)
    }
}

/// Build the reference grid for dimension `d` with `k_r` rings and `k_s`
/// directions. Deterministic given `(d, k_r, k_s, seed)`; the seed only
/// matters for d >= 3.
pub fn build_grid(d: usize, k_r: usize, k_s: usize, seed: u64) -> Result<SphericalGrid> {
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    if k_r < 1 {
        return Err(Error::InvalidCount(format!("k_R must be >= 1, got {k_r}")));
    }
    if k_s < 1 {
        return Err(Error::InvalidCount(format!("k_S must be >= 1, got {k_s}")));
    }
    if d == 1 && k_s != 2 {
        return Err(Error::InvalidCount(format!(
            "d=1 requires k_S=2 (directions +1/-1), got {k_s}"
        )));
    }

    let directions: Vec<Point> = match d {
        1 => vec![vec![1.0], vec![-1.0]],
        2 => (0..k_s)
            .map(|s| {
                let theta = 2.0 * std::f64::consts::PI * s as f64 / k_s as f64;
                vec![theta.cos(), theta.sin()]
            })
            .collect(),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..k_s)
                .map(|_| loop {
                    let g: Vec<f64> = (0..d).map(|_| draw_standard_normal(&mut rng)).collect();
                    let n = norm(&g);
                    if n > 1e-12 {
                        return scale(&g, 1.0 / n);
                    }
                })
                .collect()
        }
    };

    let mut points = Vec::with_capacity(k_r * k_s + 1);
    for j in 1..=k_r {
        let r = j as f64 / (k_r as f64 + 1.0);
        for v in &directions {
            points.push(scale(v, r));
        }
    }
    points.push(vec![0.0; d]);

    Ok(SphericalGrid {
        d,
        k_r,
        k_s,
        seed,
        points,
        directions,
    })
}

/// The uniform empirical measure on the gridpoints, weight `1/k` each.
/// The last weight absorbs the rounding residual so the sum is exact.
pub fn grid_measure(grid: &SphericalGrid) -> WeightedSample {
    WeightedSample::uniform(grid.points().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::dist;

    #[test]
    fn nine_point_grid_matches_layout() {
        let g = build_grid(2, 2, 4, 0).unwrap();
        assert_eq!(g.len(), 9);
        let r = [1.0 / 3.0, 2.0 / 3.0];
        let angles = [0.0f64, 0.5, 1.0, 1.5].map(|a| a * std::f64::consts::PI);
        let mut idx = 0;
        for &radius in &r {
            for &theta in &angles {
                let expect = vec![radius * theta.cos(), radius * theta.sin()];
                assert!(dist(&g.points()[idx], &expect) < 1e-15, "point {idx}");
                idx += 1;
            }
        }
        assert_eq!(g.points()[8], vec![0.0, 0.0]);
    }

    #[test]
    fn minimal_grid() {
        let g = build_grid(2, 1, 1, 0).unwrap();
        assert_eq!(g.len(), 2);
        assert!(dist(&g.points()[0], &[0.5, 0.0]) < 1e-15);
        assert_eq!(g.points()[1], vec![0.0, 0.0]);
    }

    #[test]
    fn seeded_sphere_directions_nearly_balanced() {
        let g = build_grid(3, 2, 100, 7).unwrap();
        let mut mean = vec![0.0; 3];
        for v in g.directions() {
            for (m, x) in mean.iter_mut().zip(v) {
                *m += x / 100.0;
            }
        }
        assert!(norm(&mean) < 0.2, "mean direction norm {}", norm(&mean));
    }

    #[test]
    fn radial_quantization() {
        let g = build_grid(3, 5, 17, 3).unwrap();
        for (idx, p) in g.points().iter().enumerate() {
            if idx == g.origin_index() {
                continue;
            }
            let scaled = (g.ring_count() as f64 + 1.0) * norm(p);
            assert!((scaled - scaled.round()).abs() < 1e-12);
            let ring = scaled.round() as usize;
            assert!(ring >= 1 && ring <= g.ring_count());
        }
        for v in g.directions() {
            assert!((norm(v) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn planar_directions_cancel() {
        for k_s in [2, 3, 4, 7, 16] {
            let g = build_grid(2, 1, k_s, 0).unwrap();
            let mut sum = vec![0.0, 0.0];
            for v in g.directions() {
                sum[0] += v[0];
                sum[1] += v[1];
            }
            assert!(norm(&sum) < 1e-10, "k_s={k_s} sum={:?}", sum);
        }
    }

    #[test]
    fn deterministic_rebuild() {
        let a = build_grid(4, 3, 20, 99).unwrap();
        let b = build_grid(4, 3, 20, 99).unwrap();
        assert_eq!(a.points(), b.points());
        assert_eq!(a.directions(), b.directions());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(build_grid(0, 1, 1, 0), Err(Error::InvalidDimension(0))));
        assert!(matches!(build_grid(2, 0, 4, 0), Err(Error::InvalidCount(_))));
        assert!(matches!(build_grid(2, 4, 0, 0), Err(Error::InvalidCount(_))));
        assert!(matches!(build_grid(1, 4, 3, 0), Err(Error::InvalidCount(_))));
    }

    #[test]
    fn measure_is_uniform_and_normalized() {
        let g = build_grid(2, 2, 4, 0).unwrap();
        let m = grid_measure(&g);
        assert_eq!(m.len(), 9);
        for &w in &m.weights()[..8] {
            assert!((w - 1.0 / 9.0).abs() < 1e-16);
        }
        let total: f64 = m.weights().iter().sum();
        assert_eq!(total, 1.0);

        let g2 = build_grid(2, 1, 1, 0).unwrap();
        let m2 = grid_measure(&g2);
        assert_eq!(m2.weights(), &[0.5, 0.5]);
    }

    #[test]
    fn grid_json_roundtrip() {
        let g = build_grid(3, 2, 9, 11).unwrap();
        let js = serde_json::to_string(&g).unwrap();
        let back: SphericalGrid = serde_json::from_str(&js).unwrap();
        assert_eq!(back.points(), g.points());
        assert_eq!(back.directions(), g.directions());
        assert!(back.same_layout(&g));
    }
}
