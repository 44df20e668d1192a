//! Shared helpers for the integration suites: an independent random source,
//! vector generators, a brute-force direction-grid reference for the two-norm
//! in dimension 2, and a rank helper for span checks.
//!
//! The reference implementations here deliberately avoid the crate's own
//! search and linear-algebra paths.

#![allow(dead_code)]

use gangle::{LpVector64, SpaceConfig64};

/// Multiplicative-congruential random source, unrelated to the crate's
/// generator.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0xD1B5_4A32_D192_ED03))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        self.0
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.unit() * (hi - lo)
    }

    /// Uniform integer in [lo, hi].
    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as usize
    }

    /// Coordinate in [-3, 3].
    pub fn coord(&mut self) -> f64 {
        self.range(-3.0, 3.0)
    }

    /// Coordinate with magnitude in [0.2, 3] and random sign, staying clear
    /// of the kinks of the lp norm.
    pub fn nonzero_coord(&mut self) -> f64 {
        let magnitude = self.range(0.2, 3.0);
        if self.next_u64() & 1 == 0 {
            magnitude
        } else {
            -magnitude
        }
    }

    pub fn vector(&mut self, dim: usize) -> LpVector64 {
        LpVector64::new((0..dim).map(|_| self.coord()).collect()).unwrap()
    }

    pub fn nonzero_vector(&mut self, dim: usize) -> LpVector64 {
        LpVector64::new((0..dim).map(|_| self.nonzero_coord()).collect()).unwrap()
    }

    /// A vector inside the closed unit ball of the given lp norm.
    pub fn ball_vector(&mut self, dim: usize, cfg: &SpaceConfig64) -> LpVector64 {
        let v = self.vector(dim);
        let norm = gangle::space::lp_norm(&v, cfg);
        if norm == 0.0 {
            return v;
        }
        v.scale(self.unit() / norm)
    }
}

/// Mixed absolute/relative closeness: |a - b| <= tol * max(1, |a|, |b|, scale).
pub fn close(a: f64, b: f64, tol: f64, scale: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(scale).max(1.0)
}

/// Relative difference with a floor, for comparing cosine ratios.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-6)
}

/// The duality weight |y|^(p-1) sgn(y) with sgn(0) = 0.
fn dual_weight(y: f64, p: f64) -> f64 {
    if y == 0.0 {
        0.0
    } else if p == 1.0 {
        y.signum()
    } else {
        y.abs().powf(p - 1.0) * y.signum()
    }
}

/// Brute-force reference for the two-norm of a dimension-2 pair: an
/// exhaustive grid of direction pairs on the lp sphere.
///
/// For a unit vector y the semi-inner products (g(y, x1), g(y, x2)) reduce to
/// dual-weight sums, and the two-norm is the largest absolute cross product
/// over pairs of grid images. Written directly from the definitions; shares
/// nothing with the search it checks.
pub fn two_norm_grid_reference(x1: &LpVector64, x2: &LpVector64, p: f64, grid: usize) -> f64 {
    let mut images = Vec::with_capacity(grid);
    for i in 0..grid {
        let alpha = 2.0 * std::f64::consts::PI * i as f64 / grid as f64;
        let (s, c) = alpha.sin_cos();
        let norm = (c.abs().powf(p) + s.abs().powf(p)).powf(1.0 / p);
        let y = [c / norm, s / norm];
        let w = [dual_weight(y[0], p), dual_weight(y[1], p)];
        images.push((
            w[0] * x1.coord(0) + w[1] * x1.coord(1),
            w[0] * x2.coord(0) + w[1] * x2.coord(1),
        ));
    }
    let mut best = 0.0f64;
    for i in 0..grid {
        for j in i + 1..grid {
            let cross = images[i].0 * images[j].1 - images[j].0 * images[i].1;
            best = best.max(cross.abs());
        }
    }
    best
}

/// Rank of a vector list by Gaussian elimination on the coordinate matrix,
/// with a relative pivot threshold.
pub fn rank(vectors: &[LpVector64], tol: f64) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors.iter().map(|v| v.dim()).max().unwrap();
    let mut rows: Vec<Vec<f64>> = vectors
        .iter()
        .map(|v| (0..dim).map(|k| v.coord(k)).collect())
        .collect();
    let scale = rows
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, c| acc.max(c.abs()))
        .max(1.0);
    let mut r = 0usize;
    for col in 0..dim {
        if r >= rows.len() {
            break;
        }
        let mut best = r;
        for row in r + 1..rows.len() {
            if rows[row][col].abs() > rows[best][col].abs() {
                best = row;
            }
        }
        if rows[best][col].abs() <= tol * scale {
            continue;
        }
        rows.swap(r, best);
        for row in 0..rows.len() {
            if row == r {
                continue;
            }
            let factor = rows[row][col] / rows[r][col];
            for k in col..dim {
                rows[row][k] -= factor * rows[r][k];
            }
        }
        r += 1;
    }
    r
}
