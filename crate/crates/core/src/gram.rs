//! Gram matrices under the semi-inner product, g-orthogonal projection and
//! left orthonormalization.
//!
//! Away from p = 2 the semi-inner product is not symmetric, so the Gram
//! matrix `[g(x_i, x_k)]` is stored and factored without any symmetry
//! assumption, and orthonormalization is one-sided: each earlier output
//! vector annihilates every later one through `g`, not conversely. Swapping
//! the input order genuinely changes the output set.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::{lp_norm, semi_inner_product, LpVector, SpaceConfig};

/// Relative threshold below which a Gram determinant is declared singular:
/// |gamma| <= 1e-10 * prod_i ||x_i||^2, a scale-invariant test.
const SINGULARITY_RELATIVE: f64 = 1e-10;

/// Dependence threshold for orthonormalization: a residual whose norm falls
/// below 1e-12 times the input norm counts as dependent.
const DEPENDENCE_RELATIVE: f64 = 1e-12;

/// An ordered basis with its Gram matrix `[g(x_i, x_k)]` and determinant.
///
/// The diagonal holds the squared norms; off-diagonal entries are generally
/// asymmetric. A zero determinant is representable: it is rejected only when
/// a projection actually needs to invert the matrix.
#[derive(Debug, Clone)]
pub struct GramContext<T> {
    basis: Vec<LpVector<T>>,
    gram: Vec<T>,
    gamma: T,
    norm_sq_product: T,
    cfg: SpaceConfig<T>,
}

impl<T: Scalar> GramContext<T> {
    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LpVector<T>] {
        &self.basis
    }

    /// Entry `g(basis[i], basis[k])`.
    pub fn gram_entry(&self, i: usize, k: usize) -> T {
        self.gram[i * self.n() + k]
    }

    /// Determinant of the Gram matrix.
    pub fn gamma(&self) -> T {
        self.gamma
    }

    fn is_singular(&self) -> bool {
        self.gamma.abs() <= T::c(SINGULARITY_RELATIVE) * self.norm_sq_product.abs()
    }
}

/// A projection split `u = projected + complement` with the expansion of the
/// projected part in the context basis.
///
/// The complement is g-annihilated by every basis vector:
/// `g(x_i, complement) = 0` for all `i`.
#[derive(Debug, Clone)]
pub struct ProjectionResult<T> {
    pub projected: LpVector<T>,
    pub complement: LpVector<T>,
    pub coefficients: Vec<T>,
}

/// Builds the Gram context of a basis: fills `[g(x_i, x_k)]` and computes its
/// determinant by LU factorization with partial pivoting.
pub fn gram_context<T: Scalar>(
    basis: &[LpVector<T>],
    cfg: &SpaceConfig<T>,
) -> Result<GramContext<T>> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let n = basis.len();
    let mut gram = vec![T::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            gram[i * n + k] = semi_inner_product(&basis[i], &basis[k], cfg);
        }
    }
    let gamma = lu_determinant(&mut gram.clone(), n);
    // product of the diagonal g(x_i, x_i) = ||x_i||^2, the scale for the
    // singularity test
    let norm_sq_product = (0..n).fold(T::one(), |acc, i| acc * gram[i * n + i]);
    Ok(GramContext {
        basis: basis.to_vec(),
        gram,
        gamma,
        norm_sq_product,
        cfg: cfg.clone(),
    })
}

/// g-orthogonal projection of `u` onto the span of the context basis.
///
/// The coefficients solve `[g(x_i, x_k)] c = [g(x_i, u)]`, which is exactly
/// the cofactor expansion of the bordered-determinant definition of the
/// projection, done with a pivoted solve instead of symbolic expansion.
pub fn project<T: Scalar>(u: &LpVector<T>, ctx: &GramContext<T>) -> Result<ProjectionResult<T>> {
    if ctx.is_singular() {
        return Err(Error::SingularGram {
            gamma: ctx.gamma.as_f64(),
        });
    }
    let n = ctx.n();
    let mut matrix = ctx.gram.clone();
    let mut rhs: Vec<T> = ctx
        .basis
        .iter()
        .map(|x| semi_inner_product(x, u, &ctx.cfg))
        .collect();
    if lu_solve(&mut matrix, &mut rhs, n).is_none() {
        return Err(Error::SingularGram {
            gamma: ctx.gamma.as_f64(),
        });
    }
    let projected = LpVector::linear_combination(&rhs, &ctx.basis);
    let complement = u.sub(&projected);
    Ok(ProjectionResult {
        projected,
        complement,
        coefficients: rhs,
    })
}

/// Left orthonormalization: the first output is `x_1 / ||x_1||`; each later
/// `x_k` has its projection onto the span of the previous outputs removed and
/// the residual normalized.
///
/// Outputs have unit norm, every prefix spans the same subspace as the input
/// prefix, `g(out_k, out_l) = 0` for `k < l`, and every prefix has Gram
/// determinant 1. Because `g` is one-sided this depends on the input order.
pub fn left_gram_schmidt<T: Scalar>(
    vectors: &[LpVector<T>],
    cfg: &SpaceConfig<T>,
) -> Result<Vec<LpVector<T>>> {
    if vectors.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let mut out: Vec<LpVector<T>> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        let residual = if out.is_empty() {
            v.clone()
        } else {
            let ctx = gram_context(&out, cfg)?;
            match project(v, &ctx) {
                Ok(pr) => pr.complement,
                Err(Error::SingularGram { .. }) => {
                    return Err(Error::OrthonormalizationFailure { index })
                }
                Err(e) => return Err(e),
            }
        };
        let norm = lp_norm(&residual, cfg);
        if norm <= T::c(DEPENDENCE_RELATIVE) * lp_norm(v, cfg) {
            return Err(Error::OrthonormalizationFailure { index });
        }
        out.push(residual.scale(norm.recip()));
    }
    Ok(out)
}

/// Determinant by LU with partial pivoting; consumes the matrix buffer.
fn lu_determinant<T: Scalar>(a: &mut [T], n: usize) -> T {
    let mut det = T::one();
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if a[row * n + col].abs() > a[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if a[pivot * n + col] == T::zero() {
            return T::zero();
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            det = -det;
        }
        det = det * a[col * n + col];
        for row in col + 1..n {
            let factor = a[row * n + col] / a[col * n + col];
            for k in col..n {
                a[row * n + k] = a[row * n + k] - factor * a[col * n + k];
            }
        }
    }
    det
}

/// Solves `a x = b` in place (result left in `b`) by Gaussian elimination
/// with partial pivoting. `None` on an exactly zero pivot.
fn lu_solve<T: Scalar>(a: &mut [T], b: &mut [T], n: usize) -> Option<()> {
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if a[row * n + col].abs() > a[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if a[pivot * n + col] == T::zero() {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            b.swap(col, pivot);
        }
        for row in col + 1..n {
            let factor = a[row * n + col] / a[col * n + col];
            for k in col..n {
                a[row * n + k] = a[row * n + k] - factor * a[col * n + k];
            }
            b[row] = b[row] - factor * b[col];
        }
    }
    for col in (0..n).rev() {
        let mut acc = b[col];
        for k in col + 1..n {
            acc = acc - a[col * n + k] * b[k];
        }
        b[col] = acc / a[col * n + col];
    }
    Some(())
}
