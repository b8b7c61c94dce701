//! Restricted container relocation.
//!
//! Containers `1..=N` sit in `S` stacks of at most `T` tiers and leave in
//! ascending order. Only the top of the stack holding the current target may
//! be relocated; each relocation costs 1 and retrievals are free, so every
//! state seen by the search has the target buried.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::{parse_uint, ParseError};
use crate::search::{Cost, Domain, Successor};

pub const MAX_STACKS: usize = 10;
pub const MAX_TIERS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrpError {
    #[error("{stacks} stacks of {tiers} tiers is not supported (1..={MAX_STACKS} stacks, 1..={MAX_TIERS} tiers)")]
    Geometry { stacks: usize, tiers: usize },
    #[error("{containers} containers do not fit in {stacks} stacks of {tiers} tiers")]
    Capacity {
        stacks: usize,
        tiers: usize,
        containers: usize,
    },
    #[error("layout is not a placement of containers 1..={containers}")]
    Layout { containers: usize },
}

/// One relocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrpMove {
    pub container: u8,
    pub from: u8,
    pub to: u8,
    /// Whether retrievals followed the relocation.
    pub retrieved: bool,
}

impl fmt::Display for CrpMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}", self.container, self.from + 1, self.to + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrpState {
    stacks: u8,
    tiers: u8,
    /// Smallest container still in the yard, 0 once the yard is empty.
    target: u8,
    remaining: u8,
    heights: [u8; MAX_STACKS],
    /// Bottom to top.
    cells: [[u8; MAX_TIERS]; MAX_STACKS],
}

impl fmt::Debug for CrpState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CrpState")
            .field("tiers", &self.tiers)
            .field("target", &self.target)
            .field("stacks", &self.layout())
            .finish()
    }
}

impl CrpState {
    /// Build a state from stacks listed bottom to top. Ids must be distinct
    /// and positive. The result is not normalized.
    pub fn new(tiers: usize, layout: &[Vec<u8>]) -> Result<Self, CrpError> {
        let stacks = layout.len();
        if !(1..=MAX_STACKS).contains(&stacks) || !(1..=MAX_TIERS).contains(&tiers) {
            return Err(CrpError::Geometry { stacks, tiers });
        }
        let total: usize = layout.iter().map(Vec::len).sum();
        if layout.iter().any(|s| s.len() > tiers) {
            return Err(CrpError::Capacity {
                stacks,
                tiers,
                containers: total,
            });
        }
        let mut seen = [false; 256];
        let mut state = CrpState {
            stacks: stacks as u8,
            tiers: tiers as u8,
            target: 0,
            remaining: total as u8,
            heights: [0; MAX_STACKS],
            cells: [[0; MAX_TIERS]; MAX_STACKS],
        };
        for (s, stack) in layout.iter().enumerate() {
            for (h, &c) in stack.iter().enumerate() {
                if c == 0 || std::mem::replace(&mut seen[c as usize], true) {
                    return Err(CrpError::Layout { containers: total });
                }
                state.cells[s][h] = c;
            }
            state.heights[s] = stack.len() as u8;
        }
        state.target = (1..=255u8).find(|&c| seen[c as usize]).unwrap_or(0);
        Ok(state)
    }

    pub fn stacks(&self) -> usize {
        self.stacks as usize
    }

    pub fn tiers(&self) -> usize {
        self.tiers as usize
    }

    /// Smallest container in the yard, if any.
    pub fn target(&self) -> Option<u8> {
        (self.remaining > 0).then_some(self.target)
    }

    pub fn remaining(&self) -> usize {
        self.remaining as usize
    }

    pub fn is_empty(&self) -> bool {
        self.remaining == 0
    }

    pub fn stack(&self, s: usize) -> &[u8] {
        &self.cells[s][..self.heights[s] as usize]
    }

    pub fn layout(&self) -> Vec<Vec<u8>> {
        (0..self.stacks()).map(|s| self.stack(s).to_vec()).collect()
    }

    fn is_full(&self, s: usize) -> bool {
        self.heights[s] == self.tiers
    }

    fn top(&self, s: usize) -> Option<u8> {
        let h = self.heights[s] as usize;
        (h > 0).then(|| self.cells[s][h - 1])
    }

    /// Stack holding the target.
    pub fn target_stack(&self) -> Option<usize> {
        if self.remaining == 0 {
            return None;
        }
        (0..self.stacks()).find(|&s| self.stack(s).contains(&self.target))
    }

    fn next_target(&self) -> u8 {
        (0..self.stacks())
            .flat_map(|s| self.stack(s).iter().copied())
            .min()
            .unwrap_or(0)
    }

    /// Retrieve the target while it is on top of its stack. Returns whether
    /// anything was retrieved.
    fn retrieve_all(&mut self) -> bool {
        let mut any = false;
        while let Some(s) = self.target_stack() {
            if self.top(s) != Some(self.target) {
                break;
            }
            self.heights[s] -= 1;
            self.cells[s][self.heights[s] as usize] = 0;
            self.remaining -= 1;
            self.target = self.next_target();
            any = true;
        }
        any
    }
}

/// Retrieve containers for free while the target is on top of its stack.
pub fn crp_normalize(state: &CrpState) -> CrpState {
    let mut next = *state;
    next.retrieve_all();
    next
}

/// Relocations of the container above the target, one per other stack with
/// room, in ascending stack order. Each successor is normalized. The move
/// that puts the container straight back is skipped unless retrievals
/// happened in between.
pub fn crp_successors(
    state: &CrpState,
    incoming: Option<CrpMove>,
    out: &mut Vec<Successor<CrpState, CrpMove>>,
) {
    let Some(from) = state.target_stack() else {
        return;
    };
    let Some(container) = state.top(from) else {
        return;
    };
    if container == state.target {
        return;
    }
    for to in 0..state.stacks() {
        if to == from || state.is_full(to) {
            continue;
        }
        if let Some(prev) = incoming {
            if !prev.retrieved
                && prev.container == container
                && prev.from as usize == to
                && prev.to as usize == from
            {
                continue;
            }
        }
        let mut next = *state;
        let h = next.heights[from] as usize - 1;
        next.cells[from][h] = 0;
        next.heights[from] = h as u8;
        let dh = next.heights[to] as usize;
        next.cells[to][dh] = container;
        next.heights[to] += 1;
        let retrieved = next.retrieve_all();
        out.push(Successor {
            state: next,
            cost: 1,
            mv: CrpMove {
                container,
                from: from as u8,
                to: to as u8,
                retrieved,
            },
        });
    }
}

/// Containers lying above a smaller container of their own stack.
pub fn lb1(state: &CrpState) -> Cost {
    let mut count = 0;
    for s in 0..state.stacks() {
        let mut min = u8::MAX;
        for &c in state.stack(s) {
            if c > min {
                count += 1;
            }
            min = min.min(c);
        }
    }
    count
}

/// `lb1` plus one for every container above the target whose every possible
/// destination already holds a smaller container, so that it must be
/// relocated twice.
pub fn lb3(state: &CrpState) -> Cost {
    let base = lb1(state);
    let Some(ts) = state.target_stack() else {
        return base;
    };
    let mut mins = [u8::MAX; MAX_STACKS];
    for (s, m) in mins.iter_mut().enumerate().take(state.stacks()) {
        *m = state.stack(s).iter().copied().min().unwrap_or(u8::MAX);
    }
    let stack = state.stack(ts);
    let pos = stack
        .iter()
        .position(|&c| c == state.target)
        .expect("target is in its stack");
    let mut extra = 0;
    for &c in &stack[pos + 1..] {
        let trapped = (0..state.stacks())
            .filter(|&s| s != ts && !state.is_full(s))
            .all(|s| mins[s] < c);
        if trapped {
            extra += 1;
        }
    }
    base + extra
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrpInstance {
    pub stacks: usize,
    pub tiers: usize,
    pub containers: usize,
    /// Bottom to top.
    pub layout: Vec<Vec<u8>>,
    pub seed: Option<u64>,
    /// 1-based line of the header in its file.
    pub line: usize,
}

impl CrpInstance {
    pub fn state(&self) -> CrpState {
        CrpState::new(self.tiers, &self.layout).expect("validated instance")
    }
}

impl fmt::Display for CrpInstance {
    /// The text format read by [`parse_crp_instance`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(seed) = self.seed {
            writeln!(f, "# seed={seed}")?;
        }
        writeln!(f, "{} {} {}", self.stacks, self.tiers, self.containers)?;
        for stack in &self.layout {
            write!(f, "{}", stack.len())?;
            for c in stack {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parse a single instance: a header `S T N`, then `S` lines `k id_1 .. id_k`
/// listing each stack bottom to top. `#` starts a comment.
pub fn parse_crp_instance(text: &str) -> Result<CrpInstance, ParseError> {
    let mut all = parse_crp_file(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(ParseError::Invalid {
            line: text.lines().count().max(1),
            message: "no instance found".into(),
        }),
        _ => Err(ParseError::Invalid {
            line: all[1].line,
            message: "more than one instance".into(),
        }),
    }
}

/// Parse any number of instances written back to back. A `# seed=<n>`
/// comment attaches to the instance that follows it.
pub fn parse_crp_file(text: &str) -> Result<Vec<CrpInstance>, ParseError> {
    let mut lines = Vec::new();
    let mut seed_at = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(c) = comment {
            for pair in c.split_whitespace() {
                if let Some(v) = pair.strip_prefix("seed=") {
                    seed_at.push((lines.len(), parse_uint(v, idx + 1)?));
                }
            }
        }
        if !body.trim().is_empty() {
            lines.push((idx + 1, body));
        }
    }

    let mut instances = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let seed = seed_at
            .iter()
            .rev()
            .find(|&&(at, _)| at == i)
            .map(|&(_, s)| s);
        let (consumed, mut inst) = parse_one(&lines[i..])?;
        inst.seed = seed;
        instances.push(inst);
        i += consumed;
    }
    Ok(instances)
}

fn numbers(line: usize, body: &str) -> Result<Vec<u64>, ParseError> {
    body.split_whitespace()
        .map(|t| parse_uint(t, line))
        .collect()
}

fn parse_one(lines: &[(usize, &str)]) -> Result<(usize, CrpInstance), ParseError> {
    let (hline, header) = lines[0];
    let head = numbers(hline, header)?;
    if head.len() != 3 {
        return Err(ParseError::Count {
            line: hline,
            expected: 3,
            found: head.len(),
        });
    }
    let (stacks, tiers, containers) = (head[0] as usize, head[1] as usize, head[2] as usize);
    if !(1..=MAX_STACKS).contains(&stacks) {
        return Err(ParseError::OutOfRange {
            line: hline,
            value: head[0],
            min: 1,
            max: MAX_STACKS as u64,
        });
    }
    if !(1..=MAX_TIERS).contains(&tiers) {
        return Err(ParseError::OutOfRange {
            line: hline,
            value: head[1],
            min: 1,
            max: MAX_TIERS as u64,
        });
    }
    if containers > stacks * tiers {
        return Err(ParseError::Invalid {
            line: hline,
            message: format!("{containers} containers exceed {stacks} stacks x {tiers} tiers"),
        });
    }

    let mut layout = Vec::with_capacity(stacks);
    let mut seen = vec![false; containers + 1];
    let mut last_line = hline;
    for s in 0..stacks {
        let Some(&(line, body)) = lines.get(s + 1) else {
            return Err(ParseError::Invalid {
                line: last_line,
                message: format!("expected {stacks} stack lines, found {s}"),
            });
        };
        last_line = line;
        let vals = numbers(line, body)?;
        let k = vals[0] as usize;
        let ids = &vals[1..];
        if ids.len() != k {
            return Err(ParseError::Count {
                line,
                expected: k,
                found: ids.len(),
            });
        }
        if k > tiers {
            return Err(ParseError::StackOverflow {
                line,
                stack: s + 1,
                height: k,
                tiers,
            });
        }
        let mut stack = Vec::with_capacity(k);
        for &id in ids {
            if id == 0 || id as usize > containers {
                return Err(ParseError::OutOfRange {
                    line,
                    value: id,
                    min: 1,
                    max: containers as u64,
                });
            }
            if std::mem::replace(&mut seen[id as usize], true) {
                return Err(ParseError::Duplicate { line, value: id });
            }
            stack.push(id as u8);
        }
        layout.push(stack);
    }
    if let Some(id) = (1..=containers).find(|&id| !seen[id]) {
        return Err(ParseError::MissingContainer {
            line: last_line,
            id: id as u64,
        });
    }
    Ok((
        stacks + 1,
        CrpInstance {
            stacks,
            tiers,
            containers,
            layout,
            seed: None,
            line: hline,
        },
    ))
}

/// Render instances in the format read by [`parse_crp_file`].
pub fn write_crp_file(instances: &[CrpInstance]) -> String {
    let mut out = String::new();
    for inst in instances {
        out.push_str(&inst.to_string());
    }
    out
}

/// Shuffle containers `1..=N` into uniformly chosen non-full stacks. At most
/// `(S-1)·T + 1` containers are allowed so that a relocation always has
/// somewhere to go.
pub fn random_crp_instance(
    stacks: usize,
    tiers: usize,
    containers: usize,
    seed: u64,
) -> Result<CrpInstance, CrpError> {
    if !(2..=MAX_STACKS).contains(&stacks) || !(1..=MAX_TIERS).contains(&tiers) {
        return Err(CrpError::Geometry { stacks, tiers });
    }
    if containers > (stacks - 1) * tiers + 1 {
        return Err(CrpError::Capacity {
            stacks,
            tiers,
            containers,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<u8> = (1..=containers as u8).collect();
    ids.shuffle(&mut rng);
    let mut layout = vec![Vec::new(); stacks];
    for id in ids {
        let open: Vec<usize> = (0..stacks).filter(|&s| layout[s].len() < tiers).collect();
        let s = open[rng.gen_range(0..open.len())];
        layout[s].push(id);
    }
    Ok(CrpInstance {
        stacks,
        tiers,
        containers,
        layout,
        seed: Some(seed),
        line: 0,
    })
}

/// A relocation instance as a search domain. The start state is normalized.
#[derive(Debug, Clone)]
pub struct CrpDomain {
    start: CrpState,
}

impl CrpDomain {
    pub fn new(instance: &CrpInstance) -> Self {
        CrpDomain::from_state(instance.state())
    }

    pub fn from_state(state: CrpState) -> Self {
        CrpDomain {
            start: crp_normalize(&state),
        }
    }
}

impl Domain for CrpDomain {
    type State = CrpState;
    type Move = CrpMove;

    fn initial_state(&self) -> CrpState {
        self.start
    }

    fn is_goal(&self, state: &CrpState) -> bool {
        state.is_empty()
    }

    fn successors(
        &self,
        state: &CrpState,
        incoming: Option<CrpMove>,
        out: &mut Vec<Successor<CrpState, CrpMove>>,
    ) {
        crp_successors(state, incoming, out);
    }

    fn h1(&self, state: &CrpState) -> Cost {
        lb1(state)
    }

    fn h2(&self, state: &CrpState) -> Cost {
        lb3(state)
    }

    fn heuristic_names(&self) -> (&'static str, &'static str) {
        ("LB1", "LB3")
    }
}
