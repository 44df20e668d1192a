//! Angles between subspaces through the determinant two-norm.
//!
//! The two-dimensional angle is a ratio of three quantities: the squared
//! two-norm of the projected basis, the squared two-norm of the original
//! basis, and a supremum over all bases of the target subspace of the squared
//! two-norm of the left-orthonormalized pair. The supremum term exists
//! because left orthonormalization is order-dependent away from p = 2, and it
//! is what makes the ratio independent of every basis choice.

use crate::error::{Error, Result};
use crate::gram::{gram_context, left_gram_schmidt, project};
use crate::scalar::Scalar;
use crate::space::{lp_norm, semi_inner_product, LpVector, SpaceConfig};
use crate::twonorm::{det2, two_norm, OptimizerConfig};

/// Grid resolution of the basis-direction sweep over [0, pi).
const THETA_GRID: usize = 360;

/// Width below which the golden-section bracket stops shrinking.
const THETA_REFINE_TOL: f64 = 1e-6;

/// Cosine ratios may exceed 1 by at most this much before the computation is
/// declared inconsistent.
const COS_HARD_LIMIT: f64 = 1e-6;

/// Excesses inside this band are treated as floating-point noise and clamped.
const COS_CLAMP_BAND: f64 = 1e-9;

/// An ordered basis pair spanning a two-dimensional subspace.
#[derive(Debug, Clone)]
pub struct Subspace2<T> {
    b1: LpVector<T>,
    b2: LpVector<T>,
}

impl<T: Scalar> Subspace2<T> {
    /// Builds the subspace, rejecting dependent pairs (largest 2x2
    /// coordinate minor below 1e-10 relative to the coordinate scale).
    pub fn new(b1: LpVector<T>, b2: LpVector<T>) -> Result<Self> {
        let n = b1.dim().max(b2.dim());
        let mut max_minor = T::zero();
        let mut scale = T::zero();
        for i in 0..n {
            scale = scale.max(b1.coord(i).abs()).max(b2.coord(i).abs());
            for j in i + 1..n {
                let minor = b1.coord(i) * b2.coord(j) - b1.coord(j) * b2.coord(i);
                max_minor = max_minor.max(minor.abs());
            }
        }
        if max_minor <= T::c(1e-10) * scale * scale {
            return Err(Error::DependentBasis("subspace basis"));
        }
        Ok(Self { b1, b2 })
    }

    pub fn b1(&self) -> &LpVector<T> {
        &self.b1
    }

    pub fn b2(&self) -> &LpVector<T> {
        &self.b2
    }

    /// The reduced-row-echelon basis of the span: identical for every
    /// presentation of the same subspace (up to roundoff).
    ///
    /// Left orthonormalization, and therefore g-orthogonal projection through
    /// the orthonormalized pair, depends on the basis presentation whenever
    /// the semi-inner product is asymmetric. Pinning computations to this
    /// canonical basis makes every derived quantity a function of the
    /// subspace alone.
    fn canonical(&self) -> Self {
        let n = self.b1.dim().max(self.b2.dim());
        let mut rows = [
            (0..n).map(|k| self.b1.coord(k)).collect::<Vec<T>>(),
            (0..n).map(|k| self.b2.coord(k)).collect::<Vec<T>>(),
        ];
        // noise floor for pivot selection: columns whose entries sit this far
        // below the matrix scale are treated as zero rather than divided by
        let scale = rows
            .iter()
            .flat_map(|r| r.iter())
            .fold(T::zero(), |acc, c| acc.max(c.abs()));
        let floor = T::c(1e-12) * scale;
        let mut pivot_row = 0usize;
        for col in 0..n {
            if pivot_row >= 2 {
                break;
            }
            let mut best = pivot_row;
            for r in pivot_row + 1..2 {
                if rows[r][col].abs() > rows[best][col].abs() {
                    best = r;
                }
            }
            if rows[best][col].abs() <= floor {
                continue;
            }
            rows.swap(pivot_row, best);
            let pivot = rows[pivot_row][col];
            for k in col..n {
                rows[pivot_row][k] = rows[pivot_row][k] / pivot;
            }
            rows[pivot_row][col] = T::one();
            for r in 0..2 {
                if r == pivot_row {
                    continue;
                }
                let factor = rows[r][col];
                if factor == T::zero() {
                    continue;
                }
                for k in col..n {
                    rows[r][k] = rows[r][k] - factor * rows[pivot_row][k];
                }
                rows[r][col] = T::zero();
            }
            pivot_row += 1;
        }
        let [r1, r2] = rows;
        Self {
            b1: LpVector::new(r1).expect("echelon rows stay finite"),
            b2: LpVector::new(r2).expect("echelon rows stay finite"),
        }
    }
}

/// Search counters and convergence flags carried alongside an angle.
#[derive(Debug, Clone, Default)]
pub struct AngleDiagnostics {
    /// Total determinant evaluations across every search involved.
    pub evaluations: u64,
    /// Convergence of the numerator search.
    pub num_converged: bool,
    /// Convergence of the denominator-norm search.
    pub den_converged: bool,
    /// Convergence of the basis-supremum sweep.
    pub sup_converged: bool,
    /// Sweep angles skipped because orthonormalization failed there.
    pub sup_skipped: usize,
}

/// An angle between subspaces, with the three constituents of the defining
/// ratio and the search diagnostics.
#[derive(Debug, Clone)]
pub struct AngleReport<T> {
    /// `num / (den_norm * den_sup)`, clamped into [0, 1] only when the excess
    /// is inside the floating-point band.
    pub cos_sq: T,
    /// `arccos(sqrt(cos_sq))`, in [0, pi/2].
    pub angle_rad: T,
    /// Squared two-norm of the projected pair (1-d case: squared norm of the
    /// projection).
    pub num: T,
    /// Squared two-norm of the original pair (1-d case: squared norm of u).
    pub den_norm: T,
    /// Supremum over bases of the squared two-norm of the left-orthonormal
    /// pair (1 in the 1-d case and at p = 2).
    pub den_sup: T,
    pub diagnostics: AngleDiagnostics,
}

/// Result of the basis sweep behind the supremum term.
#[derive(Debug, Clone)]
pub struct SupResult<T> {
    /// Supremum of the squared two-norm over the swept bases.
    pub value_sq: T,
    /// Sweep parameter attaining it.
    pub best_theta: T,
    pub evaluations: u64,
    pub converged: bool,
    /// Grid angles skipped because orthonormalization failed there.
    pub skipped: usize,
}

/// Angle between the line spanned by `u` and the span of `basis`:
/// the squared cosine is `||u_V||^2 / ||u||^2` with `u_V` the g-orthogonal
/// projection of `u`.
///
/// The ratio is clamped into [0, 1]; the raw numerator and denominator are
/// reported unclamped in `num` and `den_norm`.
pub fn angle_1d<T: Scalar>(
    u: &LpVector<T>,
    basis: &[LpVector<T>],
    cfg: &SpaceConfig<T>,
) -> Result<AngleReport<T>> {
    if u.is_zero() {
        return Err(Error::ZeroVector("the 1-dimensional angle"));
    }
    let ctx = gram_context(basis, cfg)?;
    let projection = project(u, &ctx)?;
    let num = lp_norm(&projection.projected, cfg).powi(2);
    let den_norm = lp_norm(u, cfg).powi(2);
    let cos_sq = (num / den_norm).max(T::zero()).min(T::one());
    Ok(AngleReport {
        cos_sq,
        angle_rad: cos_sq.sqrt().acos(),
        num,
        den_norm,
        den_sup: T::one(),
        diagnostics: AngleDiagnostics::default(),
    })
}

/// Supremum over bases of `v` of the squared two-norm of the
/// left-orthonormalized pair.
///
/// The pair produced by left orthonormalization depends on the basis only
/// through the direction of its first vector: the first output is that
/// vector normalized, and removing its component from any second vector
/// completing the span leaves the same residual up to sign, which the
/// two-norm ignores. The supremum over all bases therefore reduces to a
/// one-parameter sweep over directions `cos(theta) b1 + sin(theta) b2`,
/// theta in [0, pi): evaluate a uniform grid, then golden-section refine
/// around the best grid angle. Grid angles where orthonormalization fails are
/// skipped and counted. The sweep is parametrized over the canonical basis of
/// `v`, so the result depends only on the subspace.
pub fn sup_orthonormal_two_norm<T: Scalar>(
    v: &Subspace2<T>,
    cfg: &SpaceConfig<T>,
    opt: &OptimizerConfig<T>,
) -> Result<SupResult<T>> {
    let v = v.canonical();
    let evaluate = |theta: T| -> Option<(T, u64, bool)> {
        let (sin, cos) = theta.sin_cos();
        let first = v.b1.scale(cos).add(&v.b2.scale(sin));
        let second = v.b1.scale(-sin).add(&v.b2.scale(cos));
        let stars = left_gram_schmidt(&[first, second], cfg).ok()?;
        let r = two_norm(&stars[0], &stars[1], cfg, opt).ok()?;
        Some((r.value, r.evaluations, r.converged))
    };

    let pi = T::PI();
    let grid_step = pi / T::c(THETA_GRID as f64);
    let thetas: Vec<T> = (0..THETA_GRID)
        .map(|i| grid_step * T::c(i as f64))
        .collect();
    let grid = sweep(&thetas, &evaluate);

    let mut evaluations: u64 = 0;
    let mut skipped = 0usize;
    let mut converged = true;
    let mut best: Option<(T, T)> = None; // (theta, value)
    for (theta, outcome) in thetas.iter().zip(&grid) {
        match outcome {
            Some((value, evals, conv)) => {
                evaluations += evals;
                converged &= *conv;
                if best.map_or(true, |(_, b)| *value > b) {
                    best = Some((*theta, *value));
                }
            }
            None => skipped += 1,
        }
    }
    let (mut best_theta, mut best_value) = best.ok_or(Error::DegenerateSubspace)?;

    // golden-section polish around the winning grid angle
    let inv_phi = T::c(0.618_033_988_749_894_9);
    let mut lo = best_theta - grid_step;
    let mut hi = best_theta + grid_step;
    let mut probe = |theta: T, best_theta: &mut T, best_value: &mut T| -> T {
        match evaluate(theta) {
            Some((value, evals, conv)) => {
                evaluations += evals;
                converged &= conv;
                if value > *best_value {
                    *best_value = value;
                    *best_theta = theta;
                }
                value
            }
            None => {
                skipped += 1;
                -T::infinity()
            }
        }
    };
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = probe(c, &mut best_theta, &mut best_value);
    let mut fd = probe(d, &mut best_theta, &mut best_value);
    while hi - lo > T::c(THETA_REFINE_TOL) {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = probe(c, &mut best_theta, &mut best_value);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = probe(d, &mut best_theta, &mut best_value);
        }
    }

    Ok(SupResult {
        value_sq: best_value * best_value,
        best_theta,
        evaluations,
        converged,
        skipped,
    })
}

/// Runs the grid evaluations, splitting the indices over the available
/// threads. Each angle is computed independently and results are merged by
/// index, so the outcome does not depend on the thread count.
fn sweep<T, F>(thetas: &[T], evaluate: &F) -> Vec<Option<(T, u64, bool)>>
where
    T: Scalar,
    F: Fn(T) -> Option<(T, u64, bool)> + Sync,
{
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(thetas.len().max(1));
    if workers <= 1 {
        return thetas.iter().map(|&t| evaluate(t)).collect();
    }
    let mut merged: Vec<Option<(T, u64, bool)>> = vec![None; thetas.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut chunk = Vec::new();
                    let mut i = w;
                    while i < thetas.len() {
                        chunk.push((i, evaluate(thetas[i])));
                        i += workers;
                    }
                    chunk
                })
            })
            .collect();
        for handle in handles {
            for (i, outcome) in handle.join().expect("sweep worker panicked") {
                merged[i] = outcome;
            }
        }
    });
    merged
}

/// Angle between two two-dimensional subspaces.
///
/// Projections onto `v` use the left orthonormalization of its canonical
/// basis: the orthonormalized pair (and with it the projection) varies with
/// the basis presentation when the semi-inner product is asymmetric, so the
/// presentation is fixed first and the reported angle depends only on the
/// subspaces. The pair has Gram determinant 1, so the projection solve is
/// well conditioned. The numerator and denominator two-norms run under the
/// same search configuration so their noise cancels where the structure
/// allows it.
pub fn angle_2d<T: Scalar>(
    u: &Subspace2<T>,
    v: &Subspace2<T>,
    cfg: &SpaceConfig<T>,
    opt: &OptimizerConfig<T>,
) -> Result<AngleReport<T>> {
    let v = &v.canonical();
    let vstars = left_gram_schmidt(&[v.b1.clone(), v.b2.clone()], cfg)?;
    let ctx = gram_context(&vstars, cfg)?;
    let u1v = project(&u.b1, &ctx)?.projected;
    let u2v = project(&u.b2, &ctx)?.projected;

    let num_r = two_norm(&u1v, &u2v, cfg, opt)?;
    let den_r = two_norm(&u.b1, &u.b2, cfg, opt)?;
    let sup_r = sup_orthonormal_two_norm(v, cfg, opt)?;

    let num = num_r.value * num_r.value;
    let den_norm = den_r.value * den_r.value;
    let den_sup = sup_r.value_sq;
    let den = den_norm * den_sup;
    if !(den > T::zero()) || !den.is_finite() {
        return Err(Error::OptimizerInconsistency {
            cos_sq: f64::INFINITY,
        });
    }
    let raw = num / den;
    let cos_sq = clamp_cos_sq(raw)?;

    Ok(AngleReport {
        cos_sq,
        angle_rad: cos_sq.min(T::one()).sqrt().acos(),
        num,
        den_norm,
        den_sup,
        diagnostics: AngleDiagnostics {
            evaluations: num_r.evaluations + den_r.evaluations + sup_r.evaluations,
            num_converged: num_r.converged,
            den_converged: den_r.converged,
            sup_converged: sup_r.converged,
            sup_skipped: sup_r.skipped,
        },
    })
}

/// Clamps floating-point noise at the boundaries of [0, 1]; excesses above
/// the hard limit mean the denominator searches under-converged relative to
/// the numerator and are reported as an error.
fn clamp_cos_sq<T: Scalar>(raw: T) -> Result<T> {
    if raw > T::one() + T::c(COS_HARD_LIMIT) || !raw.is_finite() {
        return Err(Error::OptimizerInconsistency {
            cos_sq: raw.as_f64(),
        });
    }
    if raw > T::one() && raw <= T::one() + T::c(COS_CLAMP_BAND) {
        return Ok(T::one());
    }
    if raw < T::zero() {
        // the numerator is a square, so this can only be noise around zero
        return Ok(T::zero());
    }
    Ok(raw)
}

/// Both sides of the determinant factorization through a left-orthonormal
/// basis pair: for `u1, u2` projected onto the span of `vstar`,
///
/// ```text
/// det [g(y_j, u_iV)] = det [g(v_i*, u_j)] * det [g(y_j, v_i*)]
/// ```
///
/// Returns `(lhs, rhs)`; callers compare them. The pair `vstar` must already
/// be left orthonormal (unit norms, `g(v1*, v2*) = 0`), which is validated to
/// 1e-9 here.
pub fn factorization_check<T: Scalar>(
    u: &Subspace2<T>,
    vstar: &Subspace2<T>,
    y1: &LpVector<T>,
    y2: &LpVector<T>,
    cfg: &SpaceConfig<T>,
) -> Result<(T, T)> {
    let tol = T::c(1e-9);
    let n1 = lp_norm(&vstar.b1, cfg);
    let n2 = lp_norm(&vstar.b2, cfg);
    let g12 = semi_inner_product(&vstar.b1, &vstar.b2, cfg);
    let defect = (n1 - T::one())
        .abs()
        .max((n2 - T::one()).abs())
        .max(g12.abs());
    if defect > tol {
        return Err(Error::NotLeftOrthonormal {
            defect: defect.as_f64(),
        });
    }
    let basis = [vstar.b1.clone(), vstar.b2.clone()];
    let ctx = gram_context(&basis, cfg)?;
    let u1v = project(&u.b1, &ctx)?.projected;
    let u2v = project(&u.b2, &ctx)?.projected;

    let lhs = det2(y1, y2, &u1v, &u2v, cfg);
    let m11 = semi_inner_product(&vstar.b1, &u.b1, cfg);
    let m12 = semi_inner_product(&vstar.b1, &u.b2, cfg);
    let m21 = semi_inner_product(&vstar.b2, &u.b1, cfg);
    let m22 = semi_inner_product(&vstar.b2, &u.b2, cfg);
    let middle = m11 * m22 - m12 * m21;
    let rhs = middle * det2(y1, y2, &vstar.b1, &vstar.b2, cfg);
    Ok((lhs, rhs))
}
