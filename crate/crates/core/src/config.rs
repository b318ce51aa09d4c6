use num_rational::Ratio;
use thiserror::Error;

use crate::complex::ThreeGraph;

pub type Rational = Ratio<i64>;

pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("density constant C must be positive, got {0}")]
    NonPositiveC(Rational),
    #[error("delta must lie in (0, 1], got {0}")]
    DeltaOutOfRange(Rational),
    #[error("epsilon must lie in (0, delta = {delta}], got {epsilon}")]
    EpsilonOutOfRange { epsilon: Rational, delta: Rational },
    #[error("k threshold {k} is below 3e(H) = {needed}; distinct centres cannot be guaranteed")]
    ThresholdTooSmall { k: usize, needed: usize },
    #[error("retry limit must be positive")]
    ZeroRetries,
}

/// Tunable constants of the search.
///
/// `k_threshold` separates admissible 4-cycles (more than `k` disks) from
/// forbidden ones. `epsilon` overrides the link density exponent; when it is
/// `None` the exponent realized by the chosen link is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub c: Rational,
    pub delta: Rational,
    pub epsilon: Option<Rational>,
    pub k_threshold: usize,
    pub rng_seed: u64,
    pub retry_limit: usize,
}

/// `3 v(H)^3`.
pub fn default_k_threshold(h: &ThreeGraph) -> usize {
    3 * h.vertex_count().pow(3)
}

/// `2000 v(H)^6`.
pub fn default_c(h: &ThreeGraph) -> Rational {
    Rational::from_integer(2000 * (h.vertex_count() as i64).pow(6))
}

impl Config {
    /// The asymptotic constants: `C = 2000 v^6`, `delta = 1/5`, `K = 3 v^3`.
    pub fn asymptotic(h: &ThreeGraph) -> Self {
        Self {
            c: default_c(h).max(Rational::from_integer(1)),
            delta: Rational::new(1, 5),
            epsilon: None,
            k_threshold: default_k_threshold(h),
            rng_seed: 0,
            retry_limit: 64,
        }
    }

    /// Constants small enough for hosts with a few dozen vertices per class:
    /// `C = 2`, so a complete link realizes exponent 0, and `K = 3e(H)`, the
    /// least threshold that still leaves a distinct centre for every disk.
    pub fn desk_scale(h: &ThreeGraph) -> Self {
        Self {
            c: Rational::from_integer(2),
            k_threshold: 3 * h.face_count(),
            ..Self::asymptotic(h)
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn validate(&self, h: &ThreeGraph) -> Result<(), ConfigError> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        if self.c <= zero {
            return Err(ConfigError::NonPositiveC(self.c));
        }
        if self.delta <= zero || self.delta > one {
            return Err(ConfigError::DeltaOutOfRange(self.delta));
        }
        if let Some(eps) = self.epsilon {
            if eps <= zero || eps > self.delta {
                return Err(ConfigError::EpsilonOutOfRange {
                    epsilon: eps,
                    delta: self.delta,
                });
            }
        }
        let needed = 3 * h.face_count();
        if self.k_threshold < needed {
            return Err(ConfigError::ThresholdTooSmall {
                k: self.k_threshold,
                needed,
            });
        }
        if self.retry_limit == 0 {
            return Err(ConfigError::ZeroRetries);
        }
        Ok(())
    }

    pub fn c_f64(&self) -> f64 {
        rational_to_f64(self.c)
    }

    pub fn delta_f64(&self) -> f64 {
        rational_to_f64(self.delta)
    }
}
