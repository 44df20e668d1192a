//! Computational geometry of finite-dimensional lp spaces under their
//! natural semi-inner product.
//!
//! The crate provides four layers, each building on the previous one:
//!
//! * [`space`] — lp vectors and norms, one-sided directional derivatives of
//!   the norm, and the semi-inner product `g` in closed and limit form;
//! * [`gram`] — Gram matrices under `g`, g-orthogonal projection and
//!   (order-dependent) left orthonormalization;
//! * [`twonorm`] — a two-argument norm obtained by maximizing a 2x2
//!   determinant of `g`-values over pairs of unit vectors, together with the
//!   Euclidean Gram-determinant reference it must match at p = 2;
//! * [`angle`] — angles between subspaces assembled from projections and
//!   two-norms, including the basis supremum that makes the two-dimensional
//!   angle basis-independent.
//!
//! All numeric code is generic over the scalar through [`Scalar`]; the crate
//! root exports `f64` and `f32` aliases for the main types. Every randomized
//! search is seeded and reduces its results in a fixed order, so identical
//! inputs and configuration reproduce identical outputs.

pub mod angle;
pub mod error;
pub mod gram;
mod hull;
mod rng;
pub mod scalar;
pub mod space;
pub mod twonorm;

pub use angle::{AngleDiagnostics, AngleReport, Subspace2, SupResult};
pub use error::{Error, Result};
pub use gram::{GramContext, ProjectionResult};
pub use scalar::Scalar;
pub use space::{LpVector, OneSidedDerivatives, SpaceConfig};
pub use twonorm::{OptimizerConfig, TwoNormResult};

/// Double-precision aliases; the usual instantiation.
pub type LpVector64 = space::LpVector<f64>;
pub type SpaceConfig64 = space::SpaceConfig<f64>;
pub type OptimizerConfig64 = twonorm::OptimizerConfig<f64>;
pub type TwoNormResult64 = twonorm::TwoNormResult<f64>;
pub type Subspace264 = angle::Subspace2<f64>;
pub type AngleReport64 = angle::AngleReport<f64>;

/// Single-precision aliases.
pub type LpVector32 = space::LpVector<f32>;
pub type SpaceConfig32 = space::SpaceConfig<f32>;
pub type OptimizerConfig32 = twonorm::OptimizerConfig<f32>;
