//! Iterative deepening over a [`Domain`], with plain, lazy and rational-lazy
//! use of two admissible heuristics.
//!
//! One iteration is a depth-first probe bounded by a cost threshold. In lazy
//! mode a node is handled as follows:
//!
//! 1. `g > T`: pruned without evaluating anything. A bypassed `h2` may have let
//!    an over-threshold node through, so this guard keeps the goal test from
//!    accepting a suboptimal path.
//! 2. goal test.
//! 3. `g + h1 > T`: pruned, `h2` is never computed.
//! 4. the decision policy is consulted; if it asks for `h2` and `g + h2 > T`
//!    the node is pruned and the evaluation counted as helpful.
//! 5. otherwise the node is expanded.
//!
//! The next threshold is the minimum over-threshold value seen. Values that
//! come from the `g` guard or from `h1` alone are marked lazy: IDA* with
//! `max(h1, h2)` might have seen a larger value at the same node, so an
//! iteration started at a lazy threshold can be redundant.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::metareason::{
    bound_p_h, helpful_level, sample_x, should_evaluate_h2, DecisionPolicy, PolicyError,
    SampleHistory, TimingEvent, TimingModel,
};

/// Path and heuristic costs. Edge costs are positive integers.
pub type Cost = u64;

/// Cost used for "no further threshold". All additions saturate at it.
pub const INFINITE_COST: Cost = Cost::MAX;

/// Recursion bound used unless configured otherwise.
pub const DEFAULT_MAX_DEPTH: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct Successor<S, M> {
    pub state: S,
    pub cost: Cost,
    pub mv: M,
}

/// What the search needs to know about a problem.
pub trait Domain {
    type State: Clone;
    type Move: Copy + PartialEq + fmt::Debug;

    fn initial_state(&self) -> Self::State;

    fn is_goal(&self, state: &Self::State) -> bool;

    /// Append the successors of `state` to `out` in a fixed order, leaving
    /// out the one that undoes `incoming`.
    fn successors(
        &self,
        state: &Self::State,
        incoming: Option<Self::Move>,
        out: &mut Vec<Successor<Self::State, Self::Move>>,
    );

    /// The cheap heuristic.
    fn h1(&self, state: &Self::State) -> Cost;

    /// The expensive, usually better informed heuristic.
    fn h2(&self, state: &Self::State) -> Cost;

    /// Number of successors `successors` would produce.
    fn branching_factor(&self, state: &Self::State, incoming: Option<Self::Move>) -> usize {
        let mut out = Vec::new();
        self.successors(state, incoming, &mut out);
        out.len()
    }

    /// Short names of `h1` and `h2` for reports.
    fn heuristic_names(&self) -> (&'static str, &'static str) {
        ("h1", "h2")
    }
}

/// Which heuristic plain IDA* uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeuristicChoice {
    H1,
    H2,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    /// IDA* evaluating its heuristic(s) at every node.
    Ida(HeuristicChoice),
    /// Lazy IDA*; `AlwaysEvaluate` is plain Lazy IDA*, anything else is
    /// Rational Lazy IDA*.
    Lazy(DecisionPolicy),
}

impl Algorithm {
    pub const LAZY: Algorithm = Algorithm::Lazy(DecisionPolicy::AlwaysEvaluate);

    /// Report label, e.g. `IDA* (MD)` or `RLIDA*, p_h=0.3`.
    pub fn label(&self, names: (&str, &str)) -> String {
        use crate::metareason::DecisionRule::Simplified;
        match self {
            Algorithm::Ida(HeuristicChoice::H1) => format!("IDA* ({})", names.0),
            Algorithm::Ida(HeuristicChoice::H2) => format!("IDA* ({})", names.1),
            Algorithm::Ida(HeuristicChoice::Max) => format!("IDA* (max {},{})", names.0, names.1),
            Algorithm::Lazy(DecisionPolicy::AlwaysEvaluate) => "LIDA*".to_string(),
            Algorithm::Lazy(DecisionPolicy::NeverEvaluate) => "LIDA*, h2 at root only".to_string(),
            Algorithm::Lazy(DecisionPolicy::ConstantPh { p_h, rule }) => {
                let simple = if *rule == Simplified {
                    ", simplified"
                } else {
                    ""
                };
                format!("RLIDA*, p_h={p_h}{simple}")
            }
            Algorithm::Lazy(DecisionPolicy::AdaptiveBound { cap, rule }) => {
                let simple = if *rule == Simplified {
                    ", simplified"
                } else {
                    ""
                };
                format!("RLIDA*, p_h<={cap}{simple}")
            }
        }
    }

    pub fn is_lazy(&self) -> bool {
        matches!(self, Algorithm::Lazy(_))
    }
}

/// Accepts `ida-h1`, `ida-h2`, `ida-max`, `lida` and `rlida:<policy>`.
impl FromStr for Algorithm {
    type Err = PolicyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "ida-h1" => Ok(Algorithm::Ida(HeuristicChoice::H1)),
            "ida-h2" => Ok(Algorithm::Ida(HeuristicChoice::H2)),
            "ida-max" => Ok(Algorithm::Ida(HeuristicChoice::Max)),
            "lida" => Ok(Algorithm::LAZY),
            other => match other.strip_prefix("rlida:") {
                Some(policy) => Ok(Algorithm::Lazy(policy.parse()?)),
                None => Err(PolicyError::Syntax(other.to_string())),
            },
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Ida(HeuristicChoice::H1) => f.write_str("ida-h1"),
            Algorithm::Ida(HeuristicChoice::H2) => f.write_str("ida-h2"),
            Algorithm::Ida(HeuristicChoice::Max) => f.write_str("ida-max"),
            Algorithm::Lazy(DecisionPolicy::AlwaysEvaluate) => f.write_str("lida"),
            Algorithm::Lazy(policy) => write!(f, "rlida:{policy}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Abort once this many nodes have been generated.
    pub node_cap: Option<u64>,
    /// Abort once this much wall-clock time has passed.
    pub time_cap: Option<Duration>,
    pub max_depth: usize,
    /// Initial timing estimates; online models are updated during the run.
    pub timing: TimingModel,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_cap: None,
            time_cap: None,
            max_depth: DEFAULT_MAX_DEPTH,
            timing: TimingModel::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SearchStats {
    /// Nodes visited by the depth-first probes, roots included.
    pub generated: u64,
    pub expanded: u64,
    pub h1_evals: u64,
    pub h2_evals: u64,
    /// `h2` evaluations with `g + h2 > T`.
    pub h2_helpful: u64,
    pub x_samples: u64,
    pub iterations: u64,
    pub wall_time: Duration,
    /// Threshold of each iteration, in order.
    pub thresholds: Vec<Cost>,
    /// Thresholds that were set only by lazy bounds (`g` or `g + h1`).
    pub lazy_thresholds: Vec<Cost>,
}

impl SearchStats {
    /// Fraction of `h2` evaluations that pruned their node.
    pub fn helpful_ratio(&self) -> f64 {
        if self.h2_evals == 0 {
            0.0
        } else {
            self.h2_helpful as f64 / self.h2_evals as f64
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution<M> {
    pub path: Vec<M>,
    pub cost: Cost,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    Nodes(u64),
    Time(Duration),
    Depth(usize),
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Nodes(n) => write!(f, "node cap of {n}"),
            Limit::Time(d) => write!(f, "time cap of {:.3}s", d.as_secs_f64()),
            Limit::Depth(d) => write!(f, "depth bound of {d}"),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum SearchError {
    #[error("no solution exists (threshold became infinite after {} iterations)", .stats.iterations)]
    Unsolvable { stats: Box<SearchStats> },
    #[error("{limit} exceeded after {} generated nodes", .stats.generated)]
    LimitExceeded {
        limit: Limit,
        stats: Box<SearchStats>,
    },
}

impl SearchError {
    pub fn stats(&self) -> &SearchStats {
        match self {
            SearchError::Unsolvable { stats } | SearchError::LimitExceeded { stats, .. } => stats,
        }
    }
}

/// Minimum over-threshold value and whether only lazy sources produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Bound {
    value: Cost,
    lazy: bool,
}

impl Bound {
    const NONE: Bound = Bound {
        value: INFINITE_COST,
        lazy: true,
    };

    fn lazy(value: Cost) -> Self {
        Bound { value, lazy: true }
    }

    fn exact(value: Cost) -> Self {
        Bound { value, lazy: false }
    }

    fn min(self, other: Bound) -> Bound {
        match self.value.cmp(&other.value) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => Bound {
                value: self.value,
                lazy: self.lazy && other.lazy,
            },
        }
    }
}

enum Probe {
    Found(Cost),
    Pruned(Bound),
}

/// `max(h1(root), h2(root))`, counting both evaluations.
pub fn initial_threshold<D: Domain>(domain: &D, stats: &mut SearchStats) -> Cost {
    let root = domain.initial_state();
    stats.h1_evals += 1;
    stats.h2_evals += 1;
    domain.h1(&root).max(domain.h2(&root))
}

/// Run IDA* in the configured flavour until an optimal solution is found, the
/// instance is proven unsolvable, or a resource limit trips.
pub fn ida_star<D: Domain>(
    domain: &D,
    algorithm: &Algorithm,
    config: &SearchConfig,
) -> Result<Solution<D::Move>, SearchError> {
    let started = Instant::now();
    let mut run = Run {
        domain,
        algorithm: *algorithm,
        config,
        threshold: 0,
        root_h: 0,
        root_h1: 0,
        stats: SearchStats::default(),
        history: SampleHistory::new(),
        timing: config.timing,
        online: config.timing.is_online()
            && matches!(algorithm, Algorithm::Lazy(p) if p.uses_timing()),
        path: Vec::new(),
        buffers: Vec::new(),
        deadline: config.time_cap.map(|cap| started + cap),
        last_h1_time: 0.0,
    };
    let root = domain.initial_state();
    run.threshold = run.root_threshold(&root);
    let mut lazy_threshold = false;

    let result = loop {
        run.stats.iterations += 1;
        run.stats.thresholds.push(run.threshold);
        if lazy_threshold {
            run.stats.lazy_thresholds.push(run.threshold);
        }
        run.path.clear();
        match run.lazy_dfs(&root, 0, None, 0) {
            Ok(Probe::Found(cost)) => break Ok(cost),
            Ok(Probe::Pruned(bound)) => {
                if bound.value == INFINITE_COST {
                    break Err(None);
                }
                debug_assert!(bound.value > run.threshold);
                if bound.lazy {
                    log::debug!(
                        "iteration {} ends with a threshold of {} set by h1 alone",
                        run.stats.iterations,
                        bound.value
                    );
                }
                run.threshold = bound.value;
                lazy_threshold = bound.lazy;
            }
            Err(limit) => break Err(Some(limit)),
        }
    };

    let mut stats = run.stats;
    stats.wall_time = started.elapsed();
    match result {
        Ok(cost) => Ok(Solution {
            path: run.path,
            cost,
            stats,
        }),
        Err(None) => Err(SearchError::Unsolvable {
            stats: Box::new(stats),
        }),
        Err(Some(limit)) => Err(SearchError::LimitExceeded {
            limit,
            stats: Box::new(stats),
        }),
    }
}

/// Replay `path` from the initial state; returns the reached state and the
/// summed edge cost, or `None` if some move is not applicable.
pub fn replay<D: Domain>(domain: &D, path: &[D::Move]) -> Option<(D::State, Cost)> {
    let mut state = domain.initial_state();
    let mut cost: Cost = 0;
    let mut incoming = None;
    let mut buffer = Vec::new();
    for &mv in path {
        buffer.clear();
        domain.successors(&state, incoming, &mut buffer);
        let next = buffer.into_iter().find(|s| s.mv == mv)?;
        cost = cost.saturating_add(next.cost);
        state = next.state;
        incoming = Some(mv);
        buffer = Vec::new();
    }
    Some((state, cost))
}

struct Run<'a, D: Domain> {
    domain: &'a D,
    algorithm: Algorithm,
    config: &'a SearchConfig,
    threshold: Cost,
    /// Heuristic value the root was admitted with; never exceeds a threshold.
    root_h: Cost,
    root_h1: Cost,
    stats: SearchStats,
    history: SampleHistory,
    timing: TimingModel,
    online: bool,
    path: Vec<D::Move>,
    buffers: Vec<Vec<Successor<D::State, D::Move>>>,
    deadline: Option<Instant>,
    last_h1_time: f64,
}

impl<D: Domain> Run<'_, D> {
    fn root_threshold(&mut self, root: &D::State) -> Cost {
        let h = match self.algorithm {
            Algorithm::Ida(HeuristicChoice::H1) => {
                self.stats.h1_evals += 1;
                self.root_h1 = self.domain.h1(root);
                self.root_h1
            }
            Algorithm::Ida(HeuristicChoice::H2) => {
                self.stats.h2_evals += 1;
                self.domain.h2(root)
            }
            Algorithm::Ida(HeuristicChoice::Max) | Algorithm::Lazy(_) => {
                let h1 = self.eval_h1(root);
                let h2 = self.eval_h2(root);
                self.root_h1 = h1;
                self.record_sample(h1, h2);
                h1.max(h2)
            }
        };
        self.root_h = h;
        h
    }

    fn eval_h1(&mut self, state: &D::State) -> Cost {
        self.stats.h1_evals += 1;
        if self.online {
            let start = Instant::now();
            let h = self.domain.h1(state);
            self.last_h1_time = start.elapsed().as_secs_f64();
            self.timing.observe(TimingEvent::H1, self.last_h1_time);
            h
        } else {
            self.domain.h1(state)
        }
    }

    fn eval_h2(&mut self, state: &D::State) -> Cost {
        self.stats.h2_evals += 1;
        if self.online {
            let start = Instant::now();
            let h = self.domain.h2(state);
            self.timing
                .observe(TimingEvent::H2, start.elapsed().as_secs_f64());
            h
        } else {
            self.domain.h2(state)
        }
    }

    fn record_sample(&mut self, h1: Cost, h2: Cost) {
        if let Some(x) = sample_x(h1, h2) {
            self.history
                .record(x)
                .expect("x-samples always lie in [0, 1]");
            self.stats.x_samples += 1;
        }
    }

    fn check_limits(&self, depth: usize) -> Result<(), Limit> {
        if let Some(cap) = self.config.node_cap {
            if self.stats.generated > cap {
                return Err(Limit::Nodes(cap));
            }
        }
        if depth > self.config.max_depth {
            return Err(Limit::Depth(self.config.max_depth));
        }
        if let Some(deadline) = self.deadline {
            if self.stats.generated.is_multiple_of(1024) && Instant::now() >= deadline {
                return Err(Limit::Time(self.config.time_cap.unwrap_or_default()));
            }
        }
        Ok(())
    }

    fn wants_h2(
        &self,
        policy: &DecisionPolicy,
        state: &D::State,
        incoming: Option<D::Move>,
        g: Cost,
        h1: Cost,
    ) -> bool {
        let p_h = match *policy {
            DecisionPolicy::AlwaysEvaluate => return true,
            DecisionPolicy::NeverEvaluate => return false,
            DecisionPolicy::ConstantPh { p_h, .. } => p_h,
            DecisionPolicy::AdaptiveBound { cap, .. } => {
                let level = helpful_level(h1, g, self.threshold);
                if level <= 0.0 {
                    return true;
                }
                bound_p_h(&self.history, level).min(cap)
            }
        };
        let b = self.domain.branching_factor(state, incoming);
        should_evaluate_h2(policy, p_h, b, &self.timing)
    }

    fn lazy_dfs(
        &mut self,
        state: &D::State,
        g: Cost,
        incoming: Option<D::Move>,
        depth: usize,
    ) -> Result<Probe, Limit> {
        self.stats.generated += 1;
        self.check_limits(depth)?;
        let threshold = self.threshold;

        match self.algorithm {
            Algorithm::Lazy(policy) => {
                if g > threshold {
                    return Ok(Probe::Pruned(Bound::lazy(g)));
                }
                if self.domain.is_goal(state) {
                    return Ok(Probe::Found(g));
                }
                // the root was admitted with max(h1, h2) <= T
                if depth > 0 {
                    let h1 = self.eval_h1(state);
                    let f1 = g.saturating_add(h1);
                    if f1 > threshold {
                        return Ok(Probe::Pruned(Bound::lazy(f1)));
                    }
                    if self.wants_h2(&policy, state, incoming, g, h1) {
                        let h2 = self.eval_h2(state);
                        self.record_sample(h1, h2);
                        let f2 = g.saturating_add(h2);
                        if f2 > threshold {
                            self.stats.h2_helpful += 1;
                            return Ok(Probe::Pruned(Bound::exact(f2)));
                        }
                    }
                } else {
                    self.last_h1_time = 0.0;
                }
            }
            Algorithm::Ida(choice) => {
                let h = if depth == 0 {
                    self.root_h
                } else {
                    match choice {
                        HeuristicChoice::H1 => {
                            self.stats.h1_evals += 1;
                            self.domain.h1(state)
                        }
                        HeuristicChoice::H2 => {
                            self.stats.h2_evals += 1;
                            self.domain.h2(state)
                        }
                        HeuristicChoice::Max => {
                            let h1 = self.eval_h1(state);
                            let h2 = self.eval_h2(state);
                            self.record_sample(h1, h2);
                            if g.saturating_add(h2) > threshold {
                                self.stats.h2_helpful += 1;
                            }
                            h1.max(h2)
                        }
                    }
                };
                let f = g.saturating_add(h);
                if f > threshold {
                    return Ok(Probe::Pruned(Bound::exact(f)));
                }
                if self.domain.is_goal(state) {
                    return Ok(Probe::Found(g));
                }
            }
        }

        self.expand(state, g, incoming, depth)
    }

    fn expand(
        &mut self,
        state: &D::State,
        g: Cost,
        incoming: Option<D::Move>,
        depth: usize,
    ) -> Result<Probe, Limit> {
        self.stats.expanded += 1;
        if self.buffers.len() <= depth {
            self.buffers.resize_with(depth + 1, Vec::new);
        }
        let mut children = std::mem::take(&mut self.buffers[depth]);
        children.clear();
        if self.online {
            let start = Instant::now();
            self.domain.successors(state, incoming, &mut children);
            let spent = start.elapsed().as_secs_f64() + self.last_h1_time;
            self.timing.observe(TimingEvent::Expand, spent);
        } else {
            self.domain.successors(state, incoming, &mut children);
        }

        let mut best = Bound::NONE;
        let mut outcome = None;
        for child in &children {
            self.path.push(child.mv);
            let child_g = g.saturating_add(child.cost);
            match self.lazy_dfs(&child.state, child_g, Some(child.mv), depth + 1) {
                Ok(Probe::Found(cost)) => {
                    outcome = Some(Ok(Probe::Found(cost)));
                    break;
                }
                Ok(Probe::Pruned(bound)) => {
                    best = best.min(bound);
                    self.path.pop();
                }
                Err(limit) => {
                    outcome = Some(Err(limit));
                    break;
                }
            }
        }
        self.buffers[depth] = children;
        outcome.unwrap_or(Ok(Probe::Pruned(best)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explicit::ExplicitGraph;
    use crate::metareason::DecisionRule;

    fn all_algorithms() -> Vec<Algorithm> {
        vec![
            Algorithm::Ida(HeuristicChoice::H1),
            Algorithm::Ida(HeuristicChoice::H2),
            Algorithm::Ida(HeuristicChoice::Max),
            Algorithm::LAZY,
            Algorithm::Lazy(DecisionPolicy::NeverEvaluate),
            Algorithm::Lazy(DecisionPolicy::constant(0.3, DecisionRule::FullRegret).unwrap()),
            Algorithm::Lazy(DecisionPolicy::adaptive(0.5, DecisionRule::Simplified).unwrap()),
        ]
    }

    #[test]
    fn goal_at_root() {
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 0, 0).set_goal(0);
        for alg in all_algorithms() {
            let sol = ida_star(&g, &alg, &SearchConfig::default()).unwrap();
            assert!(sol.path.is_empty());
            assert_eq!(sol.cost, 0);
            assert_eq!(sol.stats.iterations, 1);
        }
    }

    #[test]
    fn root_threshold_is_max_of_both() {
        let mut stats = SearchStats::default();
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 10, 12);
        assert_eq!(initial_threshold(&g, &mut stats), 12);
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 5, 3);
        assert_eq!(initial_threshold(&g, &mut stats), 5);
        assert_eq!((stats.h1_evals, stats.h2_evals), (2, 2));
    }

    #[test]
    fn unsolvable_graph() {
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 1, 1).add_node(1, 0, 0).add_edge(0, 1, 1);
        for alg in all_algorithms() {
            match ida_star(&g, &alg, &SearchConfig::default()) {
                Err(SearchError::Unsolvable { .. }) => {}
                other => panic!("{alg}: expected unsolvable, got {other:?}"),
            }
        }
    }

    #[test]
    fn node_cap_reports_partial_stats() {
        // a long chain needs more than three visits
        let mut g = ExplicitGraph::new(0);
        for i in 0..10 {
            g.add_node(i, 0, 0);
            if i > 0 {
                g.add_edge(i - 1, i, 1);
            }
        }
        g.set_goal(9);
        let config = SearchConfig {
            node_cap: Some(3),
            ..SearchConfig::default()
        };
        match ida_star(&g, &Algorithm::LAZY, &config) {
            Err(SearchError::LimitExceeded { limit, stats }) => {
                assert_eq!(limit, Limit::Nodes(3));
                assert_eq!(stats.generated, 4);
            }
            other => panic!("{other:?}"),
        }
        let config = SearchConfig {
            max_depth: 4,
            ..SearchConfig::default()
        };
        assert!(matches!(
            ida_star(&g, &Algorithm::LAZY, &config),
            Err(SearchError::LimitExceeded {
                limit: Limit::Depth(4),
                ..
            })
        ));
    }

    // root --1--> a (h1 0, h2 5) --1--> goal, and root --3--> goal.
    // With threshold 3, a has g + h1 = 1 <= 3 but g + h2 = 6 > 3.
    fn bypass_graph() -> ExplicitGraph {
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 3, 3)
            .add_node(1, 0, 5)
            .add_node(2, 0, 0)
            .add_node(3, 0, 0)
            .add_edge(0, 1, 1)
            .add_edge(1, 3, 4)
            .add_edge(0, 2, 3)
            .set_goal(2)
            .set_goal(3);
        g
    }

    #[test]
    fn never_policy_expands_but_stays_optimal() {
        let g = bypass_graph();
        let lazy = ida_star(&g, &Algorithm::LAZY, &SearchConfig::default()).unwrap();
        let never = ida_star(
            &g,
            &Algorithm::Lazy(DecisionPolicy::NeverEvaluate),
            &SearchConfig::default(),
        )
        .unwrap();
        assert_eq!(lazy.cost, 3);
        assert_eq!(never.cost, 3);
        // lazy prunes node 1 with h2; never expands it and meets the g guard
        assert_eq!(lazy.stats.h2_helpful, 1);
        assert_eq!(never.stats.h2_evals, 1);
        assert!(never.stats.generated > lazy.stats.generated);
    }

    #[test]
    fn g_guard_prunes_without_evaluating() {
        // child g = 5 exceeds the root threshold of 1
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 1, 1)
            .add_node(1, 0, 0)
            .add_edge(0, 1, 5)
            .set_goal(1);
        let sol = ida_star(&g, &Algorithm::LAZY, &SearchConfig::default()).unwrap();
        assert_eq!(sol.cost, 5);
        assert_eq!(sol.stats.thresholds, vec![1, 5]);
        // only the root evaluations
        assert_eq!(sol.stats.h1_evals, 1);
        assert_eq!(sol.stats.h2_evals, 1);
        assert_eq!(sol.stats.lazy_thresholds, vec![5]);
    }

    #[test]
    fn h1_prune_skips_h2() {
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 2, 2)
            .add_node(1, 9, 9)
            .add_node(2, 0, 0)
            .add_edge(0, 1, 1)
            .add_edge(0, 2, 2)
            .set_goal(2);
        let sol = ida_star(&g, &Algorithm::LAZY, &SearchConfig::default()).unwrap();
        assert_eq!(sol.cost, 2);
        // node 1 pruned by h1, the goal is never evaluated
        assert_eq!(sol.stats.h1_evals, 2);
        assert_eq!(sol.stats.h2_evals, 1);
    }

    // Threshold T = 4 at the root. Node m has f = 7 from both heuristics,
    // node n has f1 = 5 but f2 = 6. Lazy IDA* sets the next threshold to 5
    // and runs an iteration that IDA* with max(h1, h2) skips.
    #[test]
    fn lazy_extra_iteration_keeps_cost() {
        let mut g = ExplicitGraph::new(0);
        g.add_node(0, 4, 4)
            .add_node(1, 6, 6) // m
            .add_node(2, 4, 5) // n
            .add_node(3, 0, 0)
            .add_edge(0, 1, 1)
            .add_edge(0, 2, 1)
            .add_edge(2, 3, 6)
            .set_goal(3);
        let lazy = ida_star(&g, &Algorithm::LAZY, &SearchConfig::default()).unwrap();
        let max = ida_star(
            &g,
            &Algorithm::Ida(HeuristicChoice::Max),
            &SearchConfig::default(),
        )
        .unwrap();
        assert_eq!(lazy.cost, 7);
        assert_eq!(max.cost, 7);
        assert_eq!(max.stats.thresholds, vec![4, 6, 7]);
        assert_eq!(lazy.stats.thresholds, vec![4, 5, 6, 7]);
        // 7 is reached through the g guard only, but is not redundant
        assert_eq!(lazy.stats.lazy_thresholds, vec![5, 7]);
        assert!(lazy.stats.iterations > max.stats.iterations);
    }

    #[test]
    fn solution_path_replays() {
        let g = bypass_graph();
        for alg in all_algorithms() {
            let sol = ida_star(&g, &alg, &SearchConfig::default()).unwrap();
            let (end, cost) = replay(&g, &sol.path).unwrap();
            assert!(g.is_goal(&end));
            assert_eq!(cost, sol.cost);
            let s = &sol.stats;
            assert!(
                s.h2_helpful <= s.h2_evals && s.h2_evals <= s.generated,
                "{alg}: {s:?}"
            );
            assert!(s.thresholds.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn algorithm_strings() {
        for text in [
            "ida-h1",
            "ida-h2",
            "ida-max",
            "lida",
            "rlida:const:0.3",
            "rlida:adaptive:0.5:simplified",
            "rlida:never",
        ] {
            let alg: Algorithm = text.parse().unwrap();
            assert_eq!(alg.to_string(), text);
        }
        assert_eq!(
            "rlida:always".parse::<Algorithm>().unwrap(),
            Algorithm::LAZY
        );
        assert!("ida".parse::<Algorithm>().is_err());
        assert!("rlida:const:2".parse::<Algorithm>().is_err());
    }

    #[test]
    fn labels() {
        let names = ("MD", "LC");
        assert_eq!(
            Algorithm::Ida(HeuristicChoice::H1).label(names),
            "IDA* (MD)"
        );
        assert_eq!(Algorithm::LAZY.label(names), "LIDA*");
        let alg: Algorithm = "rlida:adaptive:0.5:simplified".parse().unwrap();
        assert_eq!(alg.label(names), "RLIDA*, p_h<=0.5, simplified");
    }
}
