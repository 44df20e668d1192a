//! The determinant two-norm of a vector pair.
//!
//! For a pair (x1, x2) the value is the supremum, over pairs of unit vectors
//! (y1, y2), of the 2x2 determinant
//!
//! ```text
//! | g(y1, x1)  g(y2, x1) |
//! | g(y1, x2)  g(y2, x2) |
//! ```
//!
//! Writing phi(y) = (g(y, x1), g(y, x2)), the determinant is the planar cross
//! product of phi(y1) and phi(y2), and the closure of the image of the unit
//! ball under phi is a convex symmetric region, so the supremum is attained
//! on hull vertices of any sampled image cloud. The search therefore:
//!
//! 1. samples unit directions (rotation-invariant draws rescaled to the lp
//!    sphere, plus, at p = 1, every sign pattern over the joint support,
//!    because the image there is a zonotope whose vertices are signed sums of
//!    the support columns);
//! 2. maps them through phi together with their reflections;
//! 3. takes the planar convex hull and scans hull-vertex pairs for the
//!    largest cross product;
//! 4. polishes several well-separated hull pairs, first by alternating exact
//!    best responses — for a fixed partner the optimal unit vector is the
//!    normalized combination `z = b_y x1 - b_x x2` determined by the
//!    partner's image `b`, since `g(y, z)` over the unit ball peaks at
//!    `z / ||z||` — then by projected coordinate ascent on the sphere; the
//!    best polished pair wins.
//!
//! The search only ever evaluates feasible pairs, so the reported value is a
//! lower bound on the supremum, up to the refinement tolerance. Sampling is
//! restricted to coordinates where x1 or x2 is supported: mass elsewhere
//! never increases the attainable determinant. Everything is driven by the
//! seed; equal inputs and configuration reproduce results exactly.

use crate::error::{Error, Result};
use crate::hull::{convex_hull, max_cross_pairs, HullPoint};
use crate::rng::GaussianSource;
use crate::scalar::Scalar;
use crate::space::{semi_inner_product, Exponent, LpVector, SpaceConfig};

/// Largest joint support for which the p = 1 search enumerates every sign
/// pattern (2^n extreme candidates) in addition to random samples.
const SIGN_ENUMERATION_LIMIT: usize = 12;

/// Floor below which the coordinate-ascent step is not shrunk further.
const STEP_FLOOR: f64 = 1e-12;

/// Hull pairs taken as independent polishing starts.
const REFINE_STARTS: usize = 4;

/// Sample-independent seeds: directions alpha over [0, pi) from which a
/// best-response pair is grown. These cover the boundary uniformly whatever
/// the random cloud looks like.
const FAN_SEEDS: usize = 16;

/// Starts that graduate from best-response polishing to coordinate ascent.
const ASCENT_FINALISTS: usize = 2;

/// Cap on best-response alternation rounds per start.
const BEST_RESPONSE_ROUNDS: usize = 64;

/// Budgets for the supremum search.
#[derive(Debug, Clone)]
pub struct OptimizerConfig<T> {
    /// Random unit directions drawn per search.
    pub samples: usize,
    /// Passes of coordinate ascent applied to the best hull pair.
    pub refine_iters: usize,
    /// Seed for every random draw the search makes.
    pub seed: u64,
    /// Relative improvement under which the last refinement pass counts as
    /// converged.
    pub tol: T,
    /// Per-axis resolution used by brute-force direction-grid checks.
    pub oracle_grid: usize,
}

impl<T: Scalar> Default for OptimizerConfig<T> {
    fn default() -> Self {
        Self {
            samples: 4096,
            refine_iters: 200,
            seed: 42,
            tol: T::c(1e-7),
            oracle_grid: 720,
        }
    }
}

impl<T: Scalar> OptimizerConfig<T> {
    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1"));
        }
        if !(self.tol > T::zero()) || !self.tol.is_finite() {
            return Err(Error::InvalidConfig("tol must be a positive real"));
        }
        Ok(())
    }
}

/// Outcome of a two-norm search: the value, the witness pair of unit vectors
/// attaining it, and search diagnostics.
#[derive(Debug, Clone)]
pub struct TwoNormResult<T> {
    pub value: T,
    pub argmax_y1: LpVector<T>,
    pub argmax_y2: LpVector<T>,
    pub evaluations: u64,
    pub converged: bool,
}

/// The 2x2 determinant of semi-inner products,
/// `g(y1,x1) g(y2,x2) - g(y2,x1) g(y1,x2)`.
///
/// Antisymmetric under swapping y1 and y2 (exactly, in floating point too)
/// and bilinear in (x1, x2).
pub fn det2<T: Scalar>(
    y1: &LpVector<T>,
    y2: &LpVector<T>,
    x1: &LpVector<T>,
    x2: &LpVector<T>,
    cfg: &SpaceConfig<T>,
) -> T {
    let g11 = semi_inner_product(y1, x1, cfg);
    let g22 = semi_inner_product(y2, x2, cfg);
    let g21 = semi_inner_product(y2, x1, cfg);
    let g12 = semi_inner_product(y1, x2, cfg);
    g11 * g22 - g21 * g12
}

/// The Euclidean Gram-determinant two-norm: the square root of
/// `det [<x1,x1> <x1,x2>; <x2,x1> <x2,x2>]`, always interpreted at p = 2.
///
/// This is the exact value of the determinant two-norm in the inner-product
/// case, which makes it the reference the search is tested against at p = 2.
pub fn two_norm_euclidean<T: Scalar>(x1: &LpVector<T>, x2: &LpVector<T>) -> Result<T> {
    let n = x1.dim().max(x2.dim());
    let dot = |a: &LpVector<T>, b: &LpVector<T>| {
        (0..n).fold(T::zero(), |acc, k| acc + a.coord(k) * b.coord(k))
    };
    let a11 = dot(x1, x1);
    let a12 = dot(x1, x2);
    let a22 = dot(x2, x2);
    let det = a11 * a22 - a12 * a12;
    let scale = (a11 * a22).abs().max(T::one());
    if det < -T::c(1e-12) * scale {
        return Err(Error::NegativeGramDeterminant { det: det.as_f64() });
    }
    Ok(det.max(T::zero()).sqrt())
}

/// Supremum search for the determinant two-norm. See the module docs for the
/// strategy. Dependent or zero inputs are legal and come out as value ~ 0.
pub fn two_norm<T: Scalar>(
    x1: &LpVector<T>,
    x2: &LpVector<T>,
    cfg: &SpaceConfig<T>,
    opt: &OptimizerConfig<T>,
) -> Result<TwoNormResult<T>> {
    opt.validate()?;
    let dim = x1.dim().max(x2.dim());
    let mut support: Vec<usize> = (0..dim)
        .filter(|&k| x1.coord(k) != T::zero() || x2.coord(k) != T::zero())
        .collect();
    support.sort_unstable();
    if support.is_empty() {
        // both inputs zero: the supremum is 0 and any feasible pair attains it
        return Ok(TwoNormResult {
            value: T::zero(),
            argmax_y1: LpVector::zero(dim),
            argmax_y2: LpVector::zero(dim),
            evaluations: 0,
            converged: true,
        });
    }
    let search = Search::new(x1, x2, &support, cfg);
    let mut evaluations: u64 = 0;

    // candidate unit vectors in support coordinates
    let mut candidates: Vec<Vec<T>> = Vec::new();
    if cfg.p() == T::one() && support.len() <= SIGN_ENUMERATION_LIMIT {
        let s = support.len();
        let weight = T::one() / T::c(s as f64);
        for mask in 0u64..(1u64 << s) {
            let y: Vec<T> = (0..s)
                .map(|k| if mask >> k & 1 == 1 { -weight } else { weight })
                .collect();
            candidates.push(y);
        }
    }
    let mut gauss = GaussianSource::<T>::new(opt.seed);
    for i in 0..opt.samples {
        let mut y: Vec<T> = (0..support.len()).map(|_| gauss.next()).collect();
        if !search.normalize(&mut y) {
            // essentially impossible; fall back to an axis direction
            y = vec![T::zero(); support.len()];
            y[i % support.len()] = T::one();
        }
        candidates.push(y);
    }

    // image cloud together with its reflection
    let mut points: Vec<HullPoint<T>> = Vec::with_capacity(2 * candidates.len());
    for (source, y) in candidates.iter().enumerate() {
        let (a, b) = search.phi(y);
        evaluations += 1;
        points.push(HullPoint {
            x: a,
            y: b,
            source,
            negated: false,
        });
        points.push(HullPoint {
            x: -a,
            y: -b,
            source,
            negated: true,
        });
    }
    let hull = convex_hull(points);

    let take = |hp: &HullPoint<T>| {
        let mut y = candidates[hp.source].clone();
        if hp.negated {
            for c in &mut y {
                *c = -*c;
            }
        }
        y
    };

    // polishing starts: well-separated hull pairs plus the direction fan
    let mut starts: Vec<(Vec<T>, Vec<T>)> = Vec::with_capacity(REFINE_STARTS + FAN_SEEDS);
    for (i, j, _) in spread_starts(&hull, REFINE_STARTS) {
        starts.push((take(&hull[i]), take(&hull[j])));
    }
    for s in 0..FAN_SEEDS {
        let alpha = T::PI() * T::c(s as f64) / T::c(FAN_SEEDS as f64);
        let (sin, cos) = alpha.sin_cos();
        let mut seed: Vec<T> = search
            .x1
            .iter()
            .zip(&search.x2)
            .map(|(&a, &b)| cos * b - sin * a)
            .collect();
        if search.normalize(&mut seed) {
            starts.push((seed.clone(), seed));
        }
    }

    let mut outcome: Option<Ascent<T>> = None;
    if starts.is_empty() {
        // degenerate inputs: every candidate image collapsed onto one point
        let y = candidates[0].clone();
        outcome = Some(Ascent {
            y1: y.clone(),
            y2: y,
            value: T::zero(),
            converged: true,
        });
    }
    let mut responded: Vec<Ascent<T>> = starts
        .into_iter()
        .map(|(y1, y2)| best_response(&search, y1, y2, opt, &mut evaluations))
        .collect();
    responded.sort_by(|a, b| {
        b.value
            .partial_cmp(&a.value)
            .expect("objective values are finite")
    });
    for seed in responded.into_iter().take(ASCENT_FINALISTS) {
        let polished = refine(&search, seed.y1, seed.y2, seed.value, opt, &mut evaluations);
        if outcome
            .as_ref()
            .map_or(true, |best| polished.value > best.value)
        {
            outcome = Some(polished);
        }
    }
    let best = outcome.expect("at least one candidate pair exists");

    // report the witnesses in ambient coordinates and the value re-evaluated
    // through the public determinant, so the two are consistent by definition
    let argmax_y1 = search.embed(&best.y1, dim);
    let argmax_y2 = search.embed(&best.y2, dim);
    let value = det2(&argmax_y1, &argmax_y2, x1, x2, cfg).abs();
    Ok(TwoNormResult {
        value,
        argmax_y1,
        argmax_y2,
        evaluations,
        converged: best.converged,
    })
}

struct Ascent<T> {
    y1: Vec<T>,
    y2: Vec<T>,
    value: T,
    converged: bool,
}

/// Ascent starts: the best hull pair plus runners-up whose first vertex sits
/// well away (at least an eighth of the hull) from the ones already chosen,
/// so the polishing phase explores distinct parts of the boundary.
fn spread_starts<T: Scalar>(
    hull: &[crate::hull::HullPoint<T>],
    count: usize,
) -> Vec<(usize, usize, T)> {
    let ranked = max_cross_pairs(hull, hull.len().max(1));
    let h = hull.len();
    let min_gap = (h / 8).max(1);
    let mut picked: Vec<(usize, usize, T)> = Vec::with_capacity(count);
    for entry in ranked {
        let far_enough = picked.iter().all(|&(i, _, _)| {
            let d = entry.0.abs_diff(i);
            d.min(h - d) >= min_gap
        });
        if picked.is_empty() || far_enough {
            picked.push(entry);
            if picked.len() == count {
                break;
            }
        }
    }
    picked
}

/// Alternating exact best responses: each partner in turn is replaced by the
/// unit vector maximizing the signed cross product against the other, which
/// is the normalized dual combination of x1 and x2. Monotone in the signed
/// objective, so it converges; it stops once a full round improves by less
/// than the relative tolerance.
fn best_response<T: Scalar>(
    search: &Search<T>,
    mut y1: Vec<T>,
    mut y2: Vec<T>,
    opt: &OptimizerConfig<T>,
    evaluations: &mut u64,
) -> Ascent<T> {
    let mut phi1 = search.phi(&y1);
    let mut phi2 = search.phi(&y2);
    let mut value = phi1.0 * phi2.1 - phi1.1 * phi2.0;
    if value < T::zero() {
        // orient the pair so the signed cross product is the absolute one
        for c in &mut y2 {
            *c = -*c;
        }
        phi2 = (-phi2.0, -phi2.1);
        value = -value;
    }
    let mut converged = false;
    for _ in 0..BEST_RESPONSE_ROUNDS {
        let before = value;
        // argmax over y of cross(phi(y), phi2) = g(y, phi2.1 x1 - phi2.0 x2)
        let mut z1: Vec<T> = search
            .x1
            .iter()
            .zip(&search.x2)
            .map(|(&a, &b)| phi2.1 * a - phi2.0 * b)
            .collect();
        if search.normalize(&mut z1) {
            y1 = z1;
            phi1 = search.phi(&y1);
            *evaluations += 1;
        }
        // argmax over y of cross(phi1, phi(y)) = g(y, phi1.0 x2 - phi1.1 x1)
        let mut z2: Vec<T> = search
            .x1
            .iter()
            .zip(&search.x2)
            .map(|(&a, &b)| phi1.0 * b - phi1.1 * a)
            .collect();
        if search.normalize(&mut z2) {
            y2 = z2;
            phi2 = search.phi(&y2);
            *evaluations += 1;
        }
        value = phi1.0 * phi2.1 - phi1.1 * phi2.0;
        let denom = if value > T::zero() { value } else { T::one() };
        if (value - before) / denom < opt.tol {
            converged = true;
            break;
        }
    }
    Ascent {
        y1,
        y2,
        value: value.abs(),
        converged,
    }
}

struct AscentState<T> {
    y1: Vec<T>,
    y2: Vec<T>,
    phi1: (T, T),
    phi2: (T, T),
    best: T,
    scratch: Vec<T>,
}

/// One candidate move: perturb the chosen vector by the given coordinate
/// deltas, renormalize, keep if the objective improves.
fn attempt<T: Scalar>(
    search: &Search<T>,
    state: &mut AscentState<T>,
    which: usize,
    deltas: &[(usize, T)],
    evaluations: &mut u64,
) -> bool {
    let base = if which == 0 { &state.y1 } else { &state.y2 };
    state.scratch.copy_from_slice(base);
    for &(k, delta) in deltas {
        state.scratch[k] = state.scratch[k] + delta;
    }
    if !search.normalize(&mut state.scratch) {
        return false;
    }
    let pc = search.phi(&state.scratch);
    *evaluations += 1;
    let value = if which == 0 {
        (pc.0 * state.phi2.1 - pc.1 * state.phi2.0).abs()
    } else {
        (state.phi1.0 * pc.1 - state.phi1.1 * pc.0).abs()
    };
    if value > state.best {
        state.best = value;
        if which == 0 {
            std::mem::swap(&mut state.y1, &mut state.scratch);
            state.phi1 = pc;
        } else {
            std::mem::swap(&mut state.y2, &mut state.scratch);
            state.phi2 = pc;
        }
        return true;
    }
    false
}

/// Projected coordinate ascent on the product of unit spheres: single and
/// paired coordinate moves followed by renormalization, with the step doubled
/// after an improving pass and halved after a stalled one. Paired moves keep
/// the ascent from stalling where an improvement needs two coordinates to
/// move together (common near coordinate zeros for p < 2, where the duality
/// weights have unbounded slope). `converged` records whether the final pass
/// improved by less than the relative tolerance.
fn refine<T: Scalar>(
    search: &Search<T>,
    y1: Vec<T>,
    y2: Vec<T>,
    best: T,
    opt: &OptimizerConfig<T>,
    evaluations: &mut u64,
) -> Ascent<T> {
    let dims = y1.len();
    let mut converged = opt.refine_iters == 0;
    let phi1 = search.phi(&y1);
    let phi2 = search.phi(&y2);
    let mut state = AscentState {
        scratch: vec![T::zero(); dims],
        y1,
        y2,
        phi1,
        phi2,
        best,
    };
    let max_step = T::c(0.25);
    let mut step = max_step;
    let signs = [T::one(), -T::one()];
    for _ in 0..opt.refine_iters {
        let before = state.best;
        let mut improved = false;
        for which in 0..2 {
            for k in 0..dims {
                for dir in signs {
                    improved |=
                        attempt(search, &mut state, which, &[(k, dir * step)], evaluations);
                }
            }
            for k in 0..dims {
                for l in k + 1..dims {
                    for dk in signs {
                        for dl in signs {
                            improved |= attempt(
                                search,
                                &mut state,
                                which,
                                &[(k, dk * step), (l, dl * step)],
                                evaluations,
                            );
                        }
                    }
                }
            }
        }
        let denom = if state.best > T::zero() {
            state.best
        } else {
            T::one()
        };
        converged = (state.best - before) / denom < opt.tol;
        if improved {
            step = (step + step).min(max_step);
        } else {
            step = step * T::c(0.5);
            if step < T::c(STEP_FLOOR) {
                break;
            }
        }
    }
    Ascent {
        y1: state.y1,
        y2: state.y2,
        value: state.best,
        converged,
    }
}

/// The search state: inputs restricted to their joint support.
struct Search<T> {
    p: T,
    kind: Exponent,
    x1: Vec<T>,
    x2: Vec<T>,
    support: Vec<usize>,
}

impl<T: Scalar> Search<T> {
    fn new(x1: &LpVector<T>, x2: &LpVector<T>, support: &[usize], cfg: &SpaceConfig<T>) -> Self {
        Self {
            p: cfg.p(),
            kind: Exponent::of(cfg.p()),
            x1: support.iter().map(|&k| x1.coord(k)).collect(),
            x2: support.iter().map(|&k| x2.coord(k)).collect(),
            support: support.to_vec(),
        }
    }

    fn norm(&self, y: &[T]) -> T {
        let sum = y
            .iter()
            .fold(T::zero(), |acc, c| acc + self.kind.abs_pow(*c, self.p));
        self.kind.root(sum, self.p)
    }

    /// Rescales to the unit sphere; false if the vector is zero.
    fn normalize(&self, y: &mut [T]) -> bool {
        let n = self.norm(y);
        if n == T::zero() || !n.is_finite() {
            return false;
        }
        for c in y.iter_mut() {
            *c = *c / n;
        }
        true
    }

    /// (g(y, x1), g(y, x2)) sharing one pass of duality weights
    /// |y_k|^(p-1) sgn(y_k) and one norm prefactor.
    fn phi(&self, y: &[T]) -> (T, T) {
        if self.kind == Exponent::Two {
            let mut a = T::zero();
            let mut b = T::zero();
            for ((&yk, &x1k), &x2k) in y.iter().zip(&self.x1).zip(&self.x2) {
                a = a + yk * x1k;
                b = b + yk * x2k;
            }
            return (a, b);
        }
        let mut a = T::zero();
        let mut b = T::zero();
        for ((&yk, &x1k), &x2k) in y.iter().zip(&self.x1).zip(&self.x2) {
            if yk == T::zero() {
                continue;
            }
            let w = self.kind.dual_weight(yk, self.p);
            a = a + w * x1k;
            b = b + w * x2k;
        }
        let n = self.norm(y);
        if n == T::zero() {
            return (T::zero(), T::zero());
        }
        let prefactor = self.kind.norm_prefactor(n, self.p);
        (prefactor * a, prefactor * b)
    }

    /// Places support coordinates back into an ambient vector.
    fn embed(&self, y: &[T], dim: usize) -> LpVector<T> {
        let mut coords = vec![T::zero(); dim];
        for (&k, &c) in self.support.iter().zip(y) {
            coords[k] = c;
        }
        LpVector::new(coords).expect("search iterates are finite")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[f64]) -> LpVector<f64> {
        LpVector::from_slice(coords).unwrap()
    }

    fn cfg(p: f64) -> SpaceConfig<f64> {
        SpaceConfig::new(p).unwrap()
    }

    fn opt() -> OptimizerConfig<f64> {
        OptimizerConfig::default()
    }

    #[test]
    fn det2_frozen_values() {
        let c = cfg(2.0);
        // identity Gram
        assert_eq!(
            det2(&v(&[1.0, 0.0]), &v(&[0.0, 1.0]), &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), &c),
            1.0
        );
        // equal columns
        let y = v(&[0.6, 0.8]);
        assert_eq!(det2(&y, &y, &v(&[1.0, 2.0]), &v(&[3.0, 4.0]), &c), 0.0);
        // direct evaluation of the four inner products
        assert_eq!(
            det2(
                &v(&[1.0, 0.0]),
                &v(&[0.0, 1.0]),
                &v(&[1.0, 1.0, 2.0]),
                &v(&[2.0, 1.0, 3.0]),
                &c
            ),
            -1.0
        );
    }

    #[test]
    fn det2_antisymmetry_is_exact() {
        let c = cfg(1.5);
        let y1 = v(&[0.3, -0.7, 0.1]);
        let y2 = v(&[-0.2, 0.5, 0.9]);
        let x1 = v(&[1.0, 2.0, -0.4]);
        let x2 = v(&[0.3, -1.2, 2.2]);
        let a = det2(&y1, &y2, &x1, &x2, &c);
        let b = det2(&y2, &y1, &x1, &x2, &c);
        assert_eq!(a, -b);
    }

    #[test]
    fn euclidean_two_norm_frozen_values() {
        // sqrt(84 - 81) = sqrt(3)
        let s = two_norm_euclidean(&v(&[1.0, 1.0, 2.0]), &v(&[2.0, 1.0, 3.0])).unwrap();
        assert!((s - 3.0f64.sqrt()).abs() < 1e-14);
        // sqrt(10 - 9) = 1
        let s = two_norm_euclidean(&v(&[1.0, 1.0, 0.0, 0.0]), &v(&[2.0, 1.0, 0.0, 0.0])).unwrap();
        assert!((s - 1.0).abs() < 1e-14);
        // dependent pair
        let s = two_norm_euclidean(&v(&[1.0, 2.0]), &v(&[1.0, 2.0])).unwrap();
        assert!(s < 1e-7);
    }

    #[test]
    fn search_matches_euclidean_reference_on_worked_pair() {
        let r = two_norm(&v(&[1.0, 1.0, 2.0, 0.0]), &v(&[2.0, 1.0, 3.0, 0.0]), &cfg(2.0), &opt())
            .unwrap();
        assert!(
            (r.value - 3.0f64.sqrt()).abs() < 1e-4 * 3.0f64.sqrt(),
            "value {}",
            r.value
        );
        assert!(r.converged);
    }

    #[test]
    fn dependent_pair_has_zero_two_norm() {
        let x = v(&[1.0, 2.0]);
        let r = two_norm(&x, &x.scale(3.0), &cfg(2.0), &opt()).unwrap();
        assert!(r.value < 1e-9, "value {}", r.value);
    }

    #[test]
    fn l1_unit_vectors_attain_two() {
        // at p = 1 the image of the ball for (e1, e2) is the square [-1,1]^2,
        // so the best pair of corners has cross product 2
        let r = two_norm(&v(&[1.0, 0.0]), &v(&[0.0, 1.0]), &cfg(1.0), &opt()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9, "value {}", r.value);
    }

    #[test]
    fn zero_inputs_are_legal() {
        let r = two_norm(&LpVector::zero(3), &LpVector::zero(3), &cfg(1.5), &opt()).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
    }

    #[test]
    fn witnesses_are_feasible_and_consistent() {
        let c = cfg(3.0);
        let x1 = v(&[1.0, -0.5, 0.8]);
        let x2 = v(&[0.2, 1.3, -0.4]);
        let r = two_norm(&x1, &x2, &c, &opt()).unwrap();
        let n1 = crate::space::lp_norm(&r.argmax_y1, &c);
        let n2 = crate::space::lp_norm(&r.argmax_y2, &c);
        assert!(n1 <= 1.0 + 1e-12, "||y1|| = {n1}");
        assert!(n2 <= 1.0 + 1e-12, "||y2|| = {n2}");
        let recomputed = det2(&r.argmax_y1, &r.argmax_y2, &x1, &x2, &c).abs();
        assert!((recomputed - r.value).abs() <= 1e-12 * r.value.max(1.0));
    }

    #[test]
    fn same_seed_reproduces_bitwise() {
        let c = cfg(1.5);
        let x1 = v(&[0.9, -1.4, 0.3]);
        let x2 = v(&[-0.2, 0.8, 1.1]);
        let a = two_norm(&x1, &x2, &c, &opt()).unwrap();
        let b = two_norm(&x1, &x2, &c, &opt()).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.argmax_y1, b.argmax_y1);
        assert_eq!(a.evaluations, b.evaluations);
    }
}
