//! Seeded pseudo-random numbers for the sphere sampler.
//!
//! splitmix64 with a Box-Muller Gaussian layer. Self-contained so that equal
//! seeds reproduce search results bit for bit across platforms and releases.

use crate::scalar::Scalar;

pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw strictly inside (0, 1); never 0, so it is log-safe.
    pub fn next_unit(&mut self) -> f64 {
        (((self.next_u64() >> 11) as f64) + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Standard Gaussian draws; Box-Muller produces them in pairs and the spare
/// is cached, so each draw consumes a fixed amount of the underlying stream.
pub(crate) struct GaussianSource<T> {
    rng: SplitMix64,
    spare: Option<T>,
}

impl<T: Scalar> GaussianSource<T> {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::new(seed),
            spare: None,
        }
    }

    pub fn next(&mut self) -> T {
        if let Some(s) = self.spare.take() {
            return s;
        }
        let u1 = self.rng.next_unit();
        let u2 = self.rng.next_unit();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(T::c(radius * angle.sin()));
        T::c(radius * angle.cos())
    }
}
