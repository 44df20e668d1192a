//! Finitely supported lp vectors, their norms, one-sided directional
//! derivatives of the norm, and the semi-inner product they induce.
//!
//! The semi-inner product comes in two interchangeable forms:
//!
//! * a closed form, `g(x, y) = ||x||^(2-p) * sum_k |x_k|^(p-1) sgn(x_k) y_k`,
//!   with the convention `sgn(0) = 0` so zero coordinates never contribute
//!   (this also settles the formally ambiguous `|0|^0` term at p = 1), and
//!   `g(0, y) = 0`, which is forced by homogeneity;
//! * a limit form, `g(x, y) = ||x|| (tau_plus + tau_minus) / 2`, built from
//!   the one-sided derivatives of `t -> ||x + t y||` at `t = 0`.
//!
//! The two agree on lp, and the numeric limit route exists precisely to keep
//! the closed form honest.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Smallest gap successive derivative extrapolants must reach (scaled by the
/// direction norm) before an estimate is accepted.
const DERIVATIVE_STABILIZATION: f64 = 1e-7;

/// Recognized exponents with closed-form powers. `powf` is the dominant cost
/// of every search at fractional p, and the common exponents all reduce to
/// multiplications and square/cube roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Exponent {
    One,
    ThreeHalves,
    Two,
    Three,
    General,
}

impl Exponent {
    pub fn of<T: Scalar>(p: T) -> Self {
        if p == T::one() {
            Exponent::One
        } else if p == T::c(1.5) {
            Exponent::ThreeHalves
        } else if p == T::c(2.0) {
            Exponent::Two
        } else if p == T::c(3.0) {
            Exponent::Three
        } else {
            Exponent::General
        }
    }

    /// |x|^p
    #[inline]
    pub fn abs_pow<T: Scalar>(self, x: T, p: T) -> T {
        let a = x.abs();
        match self {
            Exponent::One => a,
            Exponent::ThreeHalves => a * a.sqrt(),
            Exponent::Two => a * a,
            Exponent::Three => a * a * a,
            Exponent::General => a.powf(p),
        }
    }

    /// s^(1/p) for s >= 0
    #[inline]
    pub fn root<T: Scalar>(self, s: T, p: T) -> T {
        match self {
            Exponent::One => s,
            Exponent::ThreeHalves => (s * s).cbrt(),
            Exponent::Two => s.sqrt(),
            Exponent::Three => s.cbrt(),
            Exponent::General => s.powf(p.recip()),
        }
    }

    /// The duality weight |x|^(p-1) sgn(x) for x != 0.
    #[inline]
    pub fn dual_weight<T: Scalar>(self, x: T, p: T) -> T {
        match self {
            Exponent::One => {
                if x > T::zero() {
                    T::one()
                } else {
                    -T::one()
                }
            }
            Exponent::ThreeHalves => {
                let r = x.abs().sqrt();
                if x > T::zero() {
                    r
                } else {
                    -r
                }
            }
            Exponent::Two => x,
            Exponent::Three => x * x.abs(),
            Exponent::General => {
                let r = x.abs().powf(p - T::one());
                if x > T::zero() {
                    r
                } else {
                    -r
                }
            }
        }
    }

    /// norm^(2-p) for norm > 0, the outer factor of the semi-inner product.
    #[inline]
    pub fn norm_prefactor<T: Scalar>(self, norm: T, p: T) -> T {
        match self {
            Exponent::One => norm,
            Exponent::ThreeHalves => norm.sqrt(),
            Exponent::Two => T::one(),
            Exponent::Three => norm.recip(),
            Exponent::General => norm.powf(T::c(2.0) - p),
        }
    }
}

/// A real coordinate vector in an lp space.
///
/// Vectors are finitely supported sequences: trailing zeros carry no meaning,
/// so vectors of different lengths are compared and combined after zero
/// padding. Coordinates are validated finite at construction; downstream code
/// relies on that and never re-checks.
#[derive(Debug, Clone)]
pub struct LpVector<T> {
    coords: Vec<T>,
}

impl<T: Scalar> LpVector<T> {
    /// Builds a vector, rejecting empty coordinate lists and non-finite entries.
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoordinate { index });
        }
        Ok(Self { coords })
    }

    pub fn from_slice(coords: &[T]) -> Result<Self> {
        Self::new(coords.to_vec())
    }

    /// The `k`-th standard basis vector in `dim` coordinates.
    pub fn basis(k: usize, dim: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut coords = vec![T::zero(); dim];
        coords[k] = T::one();
        Self { coords }
    }

    /// The zero vector in `dim` coordinates (`dim >= 1`).
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "vectors need at least one coordinate");
        Self {
            coords: vec![T::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Coordinate access with implicit zero padding past the stored length.
    pub fn coord(&self, k: usize) -> T {
        self.coords.get(k).copied().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == T::zero())
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != T::zero())
            .map(|(k, _)| k)
            .collect()
    }

    /// Scales every coordinate by `a` (which must be finite).
    pub fn scale(&self, a: T) -> Self {
        debug_assert!(a.is_finite());
        Self {
            coords: self.coords.iter().map(|c| *c * a).collect(),
        }
    }

    /// Coordinate-wise sum after zero padding.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.dim().max(other.dim());
        Self {
            coords: (0..n).map(|k| self.coord(k) + other.coord(k)).collect(),
        }
    }

    /// Coordinate-wise difference after zero padding.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.dim().max(other.dim());
        Self {
            coords: (0..n).map(|k| self.coord(k) - other.coord(k)).collect(),
        }
    }

    /// `sum_k coeffs[k] * vectors[k]`, zero-padded to the longest vector.
    pub fn linear_combination(coeffs: &[T], vectors: &[Self]) -> Self {
        assert_eq!(coeffs.len(), vectors.len());
        assert!(!vectors.is_empty());
        let n = vectors.iter().map(Self::dim).max().unwrap_or(1);
        let mut coords = vec![T::zero(); n];
        for (c, v) in coeffs.iter().zip(vectors) {
            for (k, slot) in coords.iter_mut().enumerate() {
                *slot = *slot + *c * v.coord(k);
            }
        }
        Self { coords }
    }
}

impl<T: Scalar> PartialEq for LpVector<T> {
    /// Coordinate-wise equality after zero padding to a common length.
    fn eq(&self, other: &Self) -> bool {
        let n = self.dim().max(other.dim());
        (0..n).all(|k| self.coord(k) == other.coord(k))
    }
}

/// The ambient space: the lp exponent plus the numerical knobs of the limit
/// route for the semi-inner product.
#[derive(Debug, Clone)]
pub struct SpaceConfig<T> {
    p: T,
    eps_g: T,
    tau_steps: Vec<T>,
}

impl<T: Scalar> SpaceConfig<T> {
    /// Space with exponent `p`, default agreement tolerance 1e-6 and step
    /// sequence 1e-2 .. 1e-6. One Richardson level on those steps balances
    /// truncation against cancellation in the difference quotients.
    pub fn new(p: T) -> Result<Self> {
        Self::with_parts(
            p,
            T::c(1e-6),
            vec![T::c(1e-2), T::c(1e-3), T::c(1e-4), T::c(1e-5), T::c(1e-6)],
        )
    }

    pub fn with_parts(p: T, eps_g: T, tau_steps: Vec<T>) -> Result<Self> {
        if !p.is_finite() || p < T::one() {
            return Err(Error::InvalidExponent { p: p.as_f64() });
        }
        if !eps_g.is_finite() || eps_g <= T::zero() {
            return Err(Error::InvalidConfig("eps_g must be positive"));
        }
        if tau_steps.len() < 3 {
            return Err(Error::InvalidConfig(
                "tau_steps needs at least three step sizes",
            ));
        }
        for w in tau_steps.windows(2) {
            if !(w[1] > T::zero() && w[1] < w[0] && w[0].is_finite()) {
                return Err(Error::InvalidConfig(
                    "tau_steps must be strictly decreasing positive reals",
                ));
            }
        }
        Ok(Self { p, eps_g, tau_steps })
    }

    pub fn p(&self) -> T {
        self.p
    }

    /// Tolerance within which the closed-form and limit-form semi-inner
    /// products are expected to agree.
    pub fn eps_g(&self) -> T {
        self.eps_g
    }

    pub fn tau_steps(&self) -> &[T] {
        &self.tau_steps
    }
}

/// One-sided directional derivatives of the norm: the right limit dominates
/// the left one for any convex norm, and both are bounded by the direction's
/// norm in absolute value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneSidedDerivatives<T> {
    /// Limit of the difference quotient as the step decreases to 0 from above.
    pub right: T,
    /// Limit as the step increases to 0 from below.
    pub left: T,
}

/// The lp norm `(sum_k |x_k|^p)^(1/p)`.
///
/// Zero exactly on the zero vector, absolutely homogeneous, subadditive.
pub fn lp_norm<T: Scalar>(x: &LpVector<T>, cfg: &SpaceConfig<T>) -> T {
    let p = cfg.p();
    let kind = Exponent::of(p);
    let sum = x
        .coords()
        .iter()
        .fold(T::zero(), |acc, c| acc + kind.abs_pow(*c, p));
    kind.root(sum, p)
}

/// Semi-inner product in closed form.
///
/// `g(x, y) = ||x||^(2-p) * sum_k |x_k|^(p-1) sgn(x_k) y_k` with `sgn(0) = 0`
/// and `g(0, y) = 0`. Satisfies `g(x, x) = ||x||^2`, `g(ax, by) = ab g(x, y)`,
/// `|g(x, y)| <= ||x|| ||y||`, and is linear in `y`. At p = 2 it is the
/// Euclidean inner product.
pub fn semi_inner_product<T: Scalar>(x: &LpVector<T>, y: &LpVector<T>, cfg: &SpaceConfig<T>) -> T {
    if x.is_zero() {
        return T::zero();
    }
    let p = cfg.p();
    let kind = Exponent::of(p);
    let n = x.dim().max(y.dim());
    if kind == Exponent::Two {
        let mut acc = T::zero();
        for k in 0..n {
            acc = acc + x.coord(k) * y.coord(k);
        }
        return acc;
    }
    // Signed weighted sum over the support of x; the |x_k|^(p-1) weight is 1
    // at p = 1.
    let mut acc = T::zero();
    for k in 0..n {
        let xk = x.coord(k);
        if xk == T::zero() {
            continue;
        }
        acc = acc + kind.dual_weight(xk, p) * y.coord(k);
    }
    kind.norm_prefactor(lp_norm(x, cfg), p) * acc
}

/// One-sided derivatives of `t -> ||x + t y||` at `t = 0`, estimated by
/// difference quotients along `cfg.tau_steps` with one Richardson level.
///
/// An estimate is accepted once two successive extrapolants agree to
/// 1e-7 * (1 + ||y||); the pair with the smallest gap wins. Fails with
/// [`Error::DerivativeUnstable`] when no pair stabilizes, which happens when
/// the quotient has a fractional-order term (p strictly between 1 and 2 with
/// a zero coordinate of `x` crossed by `y`).
pub fn one_sided_derivatives<T: Scalar>(
    x: &LpVector<T>,
    y: &LpVector<T>,
    cfg: &SpaceConfig<T>,
) -> Result<OneSidedDerivatives<T>> {
    if x.is_zero() {
        return Err(Error::ZeroVector("one-sided norm derivative"));
    }
    let norm_x = lp_norm(x, cfg);
    let norm_y = lp_norm(y, cfg);
    let tol = T::c(DERIVATIVE_STABILIZATION) * (T::one() + norm_y);
    let quotient = |t: T| (lp_norm(&x.add(&y.scale(t)), cfg) - norm_x) / t;
    let mut right = extrapolate(cfg.tau_steps(), tol, |s| quotient(s))?;
    let mut left = extrapolate(cfg.tau_steps(), tol, |s| quotient(-s))?;
    if left > right {
        // Convexity forces left <= right, so a crossing is roundoff at a
        // smooth point where both limits coincide; the midpoint preserves
        // their sum. A crossing beyond the stabilization tolerance is not
        // explicable as noise.
        if left - right > tol {
            return Err(Error::DerivativeUnstable {
                spread: (left - right).as_f64(),
            });
        }
        let mid = T::c(0.5) * (left + right);
        right = mid;
        left = mid;
    }
    Ok(OneSidedDerivatives { right, left })
}

/// Richardson extrapolation of a one-sided quotient whose leading error is
/// linear in the step: with ratio r = t_i / t_{i+1},
/// R_i = (r D_{i+1} - D_i) / (r - 1).
fn extrapolate<T: Scalar>(steps: &[T], tol: T, quotient: impl Fn(T) -> T) -> Result<T> {
    let d: Vec<T> = steps.iter().map(|&s| quotient(s)).collect();
    let mut extrapolants = Vec::with_capacity(d.len() - 1);
    for i in 0..d.len() - 1 {
        let r = steps[i] / steps[i + 1];
        extrapolants.push((r * d[i + 1] - d[i]) / (r - T::one()));
    }
    let mut best: Option<(T, T)> = None; // (gap, accepted estimate)
    for w in extrapolants.windows(2) {
        let gap = (w[1] - w[0]).abs();
        if best.map_or(true, |(g, _)| gap < g) {
            best = Some((gap, w[1]));
        }
    }
    match best {
        Some((gap, estimate)) if gap <= tol => Ok(estimate),
        Some((gap, _)) => Err(Error::DerivativeUnstable {
            spread: gap.as_f64(),
        }),
        None => Err(Error::InvalidConfig(
            "tau_steps needs at least three step sizes",
        )),
    }
}

/// Semi-inner product through the limit definition,
/// `g(x, y) = ||x|| (tau_plus + tau_minus) / 2`.
///
/// Returns 0 for `x = 0` (same convention as the closed form) and agrees with
/// [`semi_inner_product`] within `cfg.eps_g()` wherever the derivative
/// estimates stabilize.
pub fn semi_inner_product_numeric<T: Scalar>(
    x: &LpVector<T>,
    y: &LpVector<T>,
    cfg: &SpaceConfig<T>,
) -> Result<T> {
    if x.is_zero() {
        return Ok(T::zero());
    }
    let d = one_sided_derivatives(x, y, cfg)?;
    Ok(T::c(0.5) * lp_norm(x, cfg) * (d.right + d.left))
}
