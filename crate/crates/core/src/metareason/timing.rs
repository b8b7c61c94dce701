//! Estimates of the per-node costs `t1`, `t2` and `t_e`.

use std::hint::black_box;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::search::{Domain, Successor};

/// Decay used by the online estimator unless configured otherwise.
pub const DEFAULT_EMA_DECAY: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimingEvent {
    /// One evaluation of `h1`.
    H1,
    /// One evaluation of `h2`.
    H2,
    /// Evaluating `h1` and generating the successors of a node.
    Expand,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Mode {
    Fixed,
    Ema { decay: f64, seen: [bool; 3] },
}

/// Mean costs, in seconds (or any consistent unit), of the work a decision
/// trades off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingModel {
    pub t1: f64,
    pub t2: f64,
    pub te: f64,
    mode: Mode,
}

impl Default for TimingModel {
    fn default() -> Self {
        TimingModel::fixed(1.0, 1.0, 1.0)
    }
}

impl TimingModel {
    /// Constants that never change during a run.
    pub fn fixed(t1: f64, t2: f64, te: f64) -> Self {
        TimingModel {
            t1,
            t2,
            te,
            mode: Mode::Fixed,
        }
    }

    /// Exponential moving averages with no prior; each estimate is taken
    /// verbatim from its first observation.
    pub fn online(decay: f64) -> Self {
        TimingModel {
            t1: 0.0,
            t2: 0.0,
            te: 0.0,
            mode: Mode::Ema {
                decay: decay.clamp(0.0, 1.0),
                seen: [false; 3],
            },
        }
    }

    /// Exponential moving averages starting from the estimates in `prior`.
    pub fn online_from(prior: &TimingModel, decay: f64) -> Self {
        TimingModel {
            t1: prior.t1,
            t2: prior.t2,
            te: prior.te,
            mode: Mode::Ema {
                decay: decay.clamp(0.0, 1.0),
                seen: [true; 3],
            },
        }
    }

    pub fn is_online(&self) -> bool {
        matches!(self.mode, Mode::Ema { .. })
    }

    pub fn decay(&self) -> Option<f64> {
        match self.mode {
            Mode::Fixed => None,
            Mode::Ema { decay, .. } => Some(decay),
        }
    }

    /// Every estimate has a value the decision rule can use.
    pub fn is_ready(&self) -> bool {
        match self.mode {
            Mode::Fixed => true,
            Mode::Ema { seen, .. } => seen.iter().all(|&s| s),
        }
    }

    pub fn observe(&mut self, event: TimingEvent, seconds: f64) {
        let Mode::Ema { decay, seen } = &mut self.mode else {
            return;
        };
        let (slot, estimate) = match event {
            TimingEvent::H1 => (0, &mut self.t1),
            TimingEvent::H2 => (1, &mut self.t2),
            TimingEvent::Expand => (2, &mut self.te),
        };
        let seconds = seconds.max(0.0);
        if seen[slot] {
            *estimate = (1.0 - *decay) * *estimate + *decay * seconds;
        } else {
            *estimate = seconds;
            seen[slot] = true;
        }
    }
}

/// Measure `t1`, `t2` and `t_e` on `samples` states drawn by random walks from
/// the domain's initial state. Each quantity is the fastest of three passes
/// over the sample, divided by the sample size.
pub fn calibrate<D: Domain>(domain: &D, samples: usize, seed: u64) -> TimingModel {
    let states = sample_states(domain, samples.max(1), seed);
    let mut scratch: Vec<Successor<D::State, D::Move>> = Vec::new();
    let per_state = |total: f64| total / states.len() as f64;

    let mut t1 = f64::INFINITY;
    let mut t2 = f64::INFINITY;
    let mut expand = f64::INFINITY;
    for _ in 0..3 {
        let start = Instant::now();
        for s in &states {
            black_box(domain.h1(black_box(s)));
        }
        t1 = t1.min(per_state(start.elapsed().as_secs_f64()));

        let start = Instant::now();
        for s in &states {
            black_box(domain.h2(black_box(s)));
        }
        t2 = t2.min(per_state(start.elapsed().as_secs_f64()));

        let start = Instant::now();
        for s in &states {
            scratch.clear();
            domain.successors(black_box(s), None, &mut scratch);
            black_box(&scratch);
        }
        expand = expand.min(per_state(start.elapsed().as_secs_f64()));
    }
    // sub-resolution timings would otherwise read as zero
    let floor = 1e-10;
    TimingModel::fixed(t1.max(floor), t2.max(floor), (t1 + expand).max(floor))
}

fn sample_states<D: Domain>(domain: &D, count: usize, seed: u64) -> Vec<D::State> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let root = domain.initial_state();
    let mut states = Vec::with_capacity(count);
    let mut current = root.clone();
    let mut incoming = None;
    let mut buffer = Vec::new();
    let mut walk = 0usize;
    while states.len() < count {
        states.push(current.clone());
        buffer.clear();
        domain.successors(&current, incoming, &mut buffer);
        walk += 1;
        match buffer.choose(&mut rng) {
            Some(next) if walk < 64 && !domain.is_goal(&next.state) => {
                current = next.state.clone();
                incoming = Some(next.mv);
            }
            _ => {
                current = root.clone();
                incoming = None;
                walk = 0;
            }
        }
    }
    states
}
