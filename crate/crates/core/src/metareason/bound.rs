//! Concentration bound on the probability that `h2` is helpful.
//!
//! Each node where both heuristics are known yields a sample
//! `x = 1 - h1/max(h1, h2)` in `[0, 1]`. At a decision node `h2` is helpful
//! exactly when `x > l` with `l = 1 - h1/(T - g)`. Splitting the event with a
//! union bound at `mu = (1 - a)*mean + a*l` and applying Hoeffding to the
//! first part and Markov to the second gives, for every `a` in `[0, 1]`,
//!
//! ```text
//! p_h <= B(a) = exp(-2N (a (l - mean))^2) + ((1 - a) mean + a l) / l
//! ```
//!
//! Choosing `a* = sqrt(ln(sqrt(2N) l) / 2N) / (l - mean)` yields the closed
//! form `B* = (1 + sqrt(ln(sqrt(2N) l))) / (sqrt(2N) l) + mean / l`.
//!
//! The logarithm is negative while `sqrt(2N) l < 1`; it is clamped at zero
//! there, which leaves `B*` above one, so the estimate fails towards
//! evaluating.

use thiserror::Error;

use crate::search::Cost;

/// The bound carries no information for the given inputs; callers treat the
/// helpfulness probability as 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("concentration bound is uninformative for these inputs")]
pub struct UninformativeBound;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("x-sample {0} lies outside [0, 1]")]
pub struct SampleOutOfRange(pub f64);

/// Running sum of x-samples over a whole search run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SampleHistory {
    count: u64,
    sum: f64,
}

impl SampleHistory {
    pub fn new() -> Self {
        Self::default()
    }

    /// History summarised by its size and sum, e.g. restored from a log.
    pub fn from_parts(count: u64, sum: f64) -> Result<Self, SampleOutOfRange> {
        if !(0.0..=count as f64).contains(&sum) {
            return Err(SampleOutOfRange(sum));
        }
        Ok(SampleHistory { count, sum })
    }

    pub fn record(&mut self, x: f64) -> Result<(), SampleOutOfRange> {
        if !(0.0..=1.0).contains(&x) {
            return Err(SampleOutOfRange(x));
        }
        self.count += 1;
        self.sum += x;
        Ok(())
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }

    /// Sample average; zero while empty.
    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            (self.sum / self.count as f64).clamp(0.0, 1.0)
        }
    }
}

/// `1 - h1/max(h1, h2)`, or `None` when both heuristics are zero.
pub fn sample_x(h1: Cost, h2: Cost) -> Option<f64> {
    let top = h1.max(h2);
    if top == 0 {
        return None;
    }
    Some(1.0 - h1 as f64 / top as f64)
}

/// `1 - h1/(T - g)`: `h2` is helpful iff the node's x-sample exceeds it.
///
/// Defined as 0 when `T == g`.
pub fn helpful_level(h1: Cost, g: Cost, threshold: Cost) -> f64 {
    debug_assert!(g.saturating_add(h1) <= threshold);
    let slack = threshold.saturating_sub(g);
    if slack == 0 {
        return 0.0;
    }
    1.0 - h1 as f64 / slack as f64
}

fn clamped_log(n: u64, l: f64) -> f64 {
    ((2.0 * n as f64).sqrt() * l).ln().max(0.0)
}

/// Near-minimiser `a*` of [`bound_b_of_alpha`], clamped to `[0, 1]`.
pub fn bound_alpha_star(n: u64, l: f64, mean_x: f64) -> Result<f64, UninformativeBound> {
    if n == 0 || l.is_nan() || mean_x.is_nan() || l <= mean_x {
        return Err(UninformativeBound);
    }
    let alpha = (clamped_log(n, l) / (2.0 * n as f64)).sqrt() / (l - mean_x);
    Ok(alpha.clamp(0.0, 1.0))
}

/// Hoeffding-plus-Markov bound `B(a)` for a given split point `a`.
pub fn bound_b_of_alpha(
    alpha: f64,
    n: u64,
    l: f64,
    mean_x: f64,
) -> Result<f64, UninformativeBound> {
    if l.is_nan() || l <= 0.0 {
        return Err(UninformativeBound);
    }
    let spread = alpha * (l - mean_x);
    let hoeffding = (-2.0 * n as f64 * spread * spread).exp();
    let markov = ((1.0 - alpha) * mean_x + alpha * l) / l;
    Ok(hoeffding + markov)
}

/// Closed-form bound `B*` before clamping to a probability.
pub fn bound_b_star(n: u64, l: f64, mean_x: f64) -> Result<f64, UninformativeBound> {
    if n == 0 || l.is_nan() || mean_x.is_nan() || l <= 0.0 || mean_x >= l {
        return Err(UninformativeBound);
    }
    let scale = (2.0 * n as f64).sqrt() * l;
    Ok((1.0 + clamped_log(n, l).sqrt()) / scale + mean_x / l)
}

/// Closed-form estimate `min(1, B*)` of the helpfulness probability.
pub fn bound_p_h(history: &SampleHistory, l: f64) -> f64 {
    bound_b_star(history.len(), l, history.mean()).map_or(1.0, |b| b.clamp(0.0, 1.0))
}
