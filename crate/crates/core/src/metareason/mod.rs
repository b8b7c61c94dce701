//! Deciding whether the expensive heuristic is worth evaluating.
//!
//! Rational Lazy IDA* reaches a decision point at every node whose cheap
//! estimate `g + h1` does not exceed the threshold. Evaluating `h2` there is
//! *helpful* when `g + h2` exceeds the threshold, because the node is then
//! pruned instead of expanded. The two possible mistakes have different
//! costs:
//!
//! | outcome \ decision | compute `h2` | bypass `h2`                  |
//! |--------------------|--------------|------------------------------|
//! | `h2` helpful       | 0            | `t_e + b*t1 + (b - 1)*t2`    |
//! | `h2` not helpful   | `t2`         | 0                            |
//!
//! With `p_h` the probability that `h2` is helpful, evaluation minimises the
//! expected regret exactly when `(1 - p_h*b) * t2 < p_h * (t_e + b*t1)`.
//! When `p_h*b >= 1` the left side is not positive and `h2` should always be
//! computed; otherwise the comparison depends on the timings.
//!
//! `p_h` is either supplied as a constant or bounded from the running history
//! of `x = 1 - h1/max(h1, h2)` samples, see [`bound`].

pub mod bound;
pub mod timing;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use bound::{
    bound_alpha_star, bound_b_of_alpha, bound_b_star, bound_p_h, helpful_level, sample_x,
    SampleHistory, SampleOutOfRange, UninformativeBound,
};
pub use timing::{calibrate, TimingEvent, TimingModel};

/// Default upper cap on the adaptive estimate of `p_h`.
pub const DEFAULT_ADAPTIVE_CAP: f64 = 0.5;

/// How a policy turns an estimate of `p_h` into a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecisionRule {
    /// Evaluate when `p_h*b >= 1`, otherwise compare `t2` with
    /// `p_h / (1 - p_h*b) * (t_e + b*t1)`.
    #[default]
    FullRegret,
    /// Evaluate only when `p_h*b >= 1`; timings are ignored.
    Simplified,
}

/// The "optional condition" guarding evaluation of `h2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecisionPolicy {
    /// Plain Lazy IDA*.
    AlwaysEvaluate,
    /// Never consult `h2` below the root.
    NeverEvaluate,
    /// Rational decision with a fixed helpfulness probability.
    ConstantPh { p_h: f64, rule: DecisionRule },
    /// Rational decision with `p_h = min(B*, cap)`, `B*` bounded online.
    AdaptiveBound { cap: f64, rule: DecisionRule },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolicyError {
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("unrecognised policy `{0}` (expected always, never, const:<p>[:simplified] or adaptive[:<cap>][:simplified])")]
    Syntax(String),
}

impl DecisionPolicy {
    pub fn constant(p_h: f64, rule: DecisionRule) -> Result<Self, PolicyError> {
        check_probability(p_h)?;
        Ok(DecisionPolicy::ConstantPh { p_h, rule })
    }

    pub fn adaptive(cap: f64, rule: DecisionRule) -> Result<Self, PolicyError> {
        check_probability(cap)?;
        Ok(DecisionPolicy::AdaptiveBound { cap, rule })
    }

    /// True for the policies whose decision may depend on timings.
    pub fn uses_timing(&self) -> bool {
        matches!(
            self,
            DecisionPolicy::ConstantPh {
                rule: DecisionRule::FullRegret,
                ..
            } | DecisionPolicy::AdaptiveBound {
                rule: DecisionRule::FullRegret,
                ..
            }
        )
    }
}

fn check_probability(p: f64) -> Result<(), PolicyError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(PolicyError::Probability(p))
    }
}

impl FromStr for DecisionPolicy {
    type Err = PolicyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || PolicyError::Syntax(s.to_string());
        let mut parts = s.trim().split(':');
        let head = parts.next().unwrap_or_default();
        let rest: Vec<&str> = parts.collect();
        let parse_rule = |tok: Option<&&str>| match tok.copied() {
            None | Some("full") => Ok(DecisionRule::FullRegret),
            Some("simplified") => Ok(DecisionRule::Simplified),
            Some(_) => Err(syntax()),
        };
        let parse_p = |tok: &str| tok.parse::<f64>().map_err(|_| syntax());
        match head {
            "always" if rest.is_empty() => Ok(DecisionPolicy::AlwaysEvaluate),
            "never" if rest.is_empty() => Ok(DecisionPolicy::NeverEvaluate),
            "const" if !rest.is_empty() && rest.len() <= 2 => {
                DecisionPolicy::constant(parse_p(rest[0])?, parse_rule(rest.get(1))?)
            }
            "adaptive" if rest.len() <= 2 => match rest.first() {
                None => DecisionPolicy::adaptive(DEFAULT_ADAPTIVE_CAP, DecisionRule::FullRegret),
                Some(&tok) if tok == "simplified" || tok == "full" => {
                    if rest.len() > 1 {
                        return Err(syntax());
                    }
                    DecisionPolicy::adaptive(DEFAULT_ADAPTIVE_CAP, parse_rule(rest.first())?)
                }
                Some(&tok) => DecisionPolicy::adaptive(parse_p(tok)?, parse_rule(rest.get(1))?),
            },
            _ => Err(syntax()),
        }
    }
}

impl fmt::Display for DecisionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = |rule: &DecisionRule| match rule {
            DecisionRule::FullRegret => "",
            DecisionRule::Simplified => ":simplified",
        };
        match self {
            DecisionPolicy::AlwaysEvaluate => f.write_str("always"),
            DecisionPolicy::NeverEvaluate => f.write_str("never"),
            DecisionPolicy::ConstantPh { p_h, rule } => write!(f, "const:{p_h}{}", suffix(rule)),
            DecisionPolicy::AdaptiveBound { cap, rule } => {
                write!(f, "adaptive:{cap}{}", suffix(rule))
            }
        }
    }
}

/// Inputs of the regret table at a single node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegretInputs {
    pub p_h: f64,
    /// Local branching factor after parent pruning.
    pub b: usize,
    pub t1: f64,
    pub t2: f64,
    /// Time to evaluate `h1` and expand the node.
    pub te: f64,
}

/// Expected regret of computing `h2`: wasted `t2` whenever it is not helpful.
pub fn regret_compute(inputs: &RegretInputs) -> f64 {
    (1.0 - inputs.p_h) * inputs.t2
}

/// Expected regret of bypassing `h2`: the needless expansion plus evaluation
/// of all children, less the `t2` that was saved.
pub fn regret_bypass(inputs: &RegretInputs) -> f64 {
    let b = inputs.b as f64;
    inputs.p_h * (inputs.te + b * inputs.t1 + (b - 1.0) * inputs.t2)
}

/// Decide whether to evaluate `h2` at a node with helpfulness estimate `p_h`
/// and local branching factor `b`.
pub fn should_evaluate_h2(
    policy: &DecisionPolicy,
    p_h: f64,
    b: usize,
    timing: &TimingModel,
) -> bool {
    let rule = match policy {
        DecisionPolicy::AlwaysEvaluate => return true,
        DecisionPolicy::NeverEvaluate => return false,
        DecisionPolicy::ConstantPh { rule, .. } | DecisionPolicy::AdaptiveBound { rule, .. } => {
            *rule
        }
    };
    let b = b as f64;
    let weight = p_h * b;
    if weight >= 1.0 {
        return true;
    }
    match rule {
        DecisionRule::Simplified => false,
        DecisionRule::FullRegret => {
            if !timing.is_ready() {
                return true;
            }
            timing.t2 < p_h / (1.0 - weight) * (timing.te + b * timing.t1)
        }
    }
}
