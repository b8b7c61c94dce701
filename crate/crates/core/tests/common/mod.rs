//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the crate's own successor and normalisation code.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rlida::metareason::DecisionRule;
use rlida::{Algorithm, DecisionPolicy, HeuristicChoice};

/// Every algorithm and policy the optimality checks run.
pub fn all_algorithms() -> Vec<Algorithm> {
    let c = |p, rule| Algorithm::Lazy(DecisionPolicy::constant(p, rule).unwrap());
    let a = |cap, rule| Algorithm::Lazy(DecisionPolicy::adaptive(cap, rule).unwrap());
    vec![
        Algorithm::Ida(HeuristicChoice::H1),
        Algorithm::Ida(HeuristicChoice::H2),
        Algorithm::Ida(HeuristicChoice::Max),
        Algorithm::LAZY,
        Algorithm::Lazy(DecisionPolicy::NeverEvaluate),
        c(0.3, DecisionRule::FullRegret),
        c(0.3, DecisionRule::Simplified),
        c(0.9, DecisionRule::FullRegret),
        a(0.5, DecisionRule::FullRegret),
        a(1.0, DecisionRule::Simplified),
    ]
}

/// Tiles packed four bits each, reading order.
pub fn pack(cells: &[u8]) -> u64 {
    cells
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &t)| acc | (t as u64) << (4 * i))
}

pub fn unpack(code: u64, len: usize) -> Vec<u8> {
    (0..len).map(|i| ((code >> (4 * i)) & 0xf) as u8).collect()
}

/// Optimal cost to the goal of every board reachable from it, by Dijkstra
/// from the goal. Moves are reversible at equal cost, so distances from the
/// goal are distances to it. Boards of at most 16 cells.
pub fn tile_distances(
    rows: usize,
    cols: usize,
    blank_first: bool,
    weighted: bool,
) -> HashMap<u64, u64> {
    let len = rows * cols;
    assert!(len <= 16);
    let goal: Vec<u8> = if blank_first {
        (0..len as u8).collect()
    } else {
        (1..len as u8).chain([0]).collect()
    };
    let mut dist: HashMap<u64, u64> = HashMap::new();
    let mut heap = BinaryHeap::new();
    let start = pack(&goal);
    dist.insert(start, 0);
    heap.push(Reverse((0u64, start)));
    while let Some(Reverse((d, code))) = heap.pop() {
        if dist[&code] < d {
            continue;
        }
        let cells = unpack(code, len);
        let blank = cells.iter().position(|&t| t == 0).unwrap();
        let (r, c) = (blank / cols, blank % cols);
        let mut near = Vec::with_capacity(4);
        if r > 0 {
            near.push(blank - cols);
        }
        if r + 1 < rows {
            near.push(blank + cols);
        }
        if c > 0 {
            near.push(blank - 1);
        }
        if c + 1 < cols {
            near.push(blank + 1);
        }
        for n in near {
            let tile = cells[n];
            let mut next = cells.clone();
            next.swap(blank, n);
            let nd = d + if weighted { tile as u64 } else { 1 };
            let code = pack(&next);
            if dist.get(&code).is_none_or(|&old| nd < old) {
                dist.insert(code, nd);
                heap.push(Reverse((nd, code)));
            }
        }
    }
    dist
}

pub type Layout = Vec<Vec<u8>>;

fn retrieve(layout: &mut Layout) {
    loop {
        let Some(min) = layout.iter().flatten().copied().min() else {
            return;
        };
        match layout.iter_mut().find(|s| s.last() == Some(&min)) {
            Some(stack) => {
                stack.pop();
            }
            None => return,
        }
    }
}

/// Layout after free retrievals.
pub fn crp_retrieved(layout: &Layout) -> Layout {
    let mut l = layout.clone();
    retrieve(&mut l);
    l
}

/// Minimum relocations to empty the yard, `None` when it cannot be done.
/// Every relocation shrinks the stack holding the smallest container or
/// retrieves something, so the state graph is acyclic and plain memoised
/// recursion finds the optimum.
pub struct CrpOracle {
    pub tiers: usize,
    memo: HashMap<Layout, Option<u64>>,
}

impl CrpOracle {
    pub fn new(tiers: usize) -> Self {
        CrpOracle {
            tiers,
            memo: HashMap::new(),
        }
    }

    pub fn solve(&mut self, layout: &Layout) -> Option<u64> {
        let layout = crp_retrieved(layout);
        if let Some(&v) = self.memo.get(&layout) {
            return v;
        }
        let result = self.solve_retrieved(&layout);
        self.memo.insert(layout, result);
        result
    }

    fn solve_retrieved(&mut self, layout: &Layout) -> Option<u64> {
        let Some(min) = layout.iter().flatten().copied().min() else {
            return Some(0);
        };
        let from = layout.iter().position(|s| s.contains(&min)).unwrap();
        let mut best: Option<u64> = None;
        for to in 0..layout.len() {
            if to == from || layout[to].len() >= self.tiers {
                continue;
            }
            let mut next = layout.clone();
            let c = next[from].pop().unwrap();
            next[to].push(c);
            if let Some(v) = self.solve(&next) {
                best = Some(best.map_or(v + 1, |b| b.min(v + 1)));
            }
        }
        best
    }

    /// Every retrieved layout solved so far, with its optimum.
    pub fn visited(&self) -> impl Iterator<Item = (&Layout, &Option<u64>)> {
        self.memo.iter()
    }
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn heights(stacks: usize, tiers: usize, total: usize) -> Vec<Vec<usize>> {
    if stacks == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for h in 0..=tiers.min(total) {
        for mut rest in heights(stacks - 1, tiers, total - h) {
            rest.insert(0, h);
            out.push(rest);
        }
    }
    out
}

/// All placements of containers `1..=n` into `stacks` stacks of at most
/// `tiers`, listed bottom to top.
pub fn all_crp_layouts(stacks: usize, tiers: usize, n: usize) -> Vec<Layout> {
    let ids: Vec<u8> = (1..=n as u8).collect();
    let perms = permutations(&ids);
    let mut out = Vec::new();
    for hs in heights(stacks, tiers, n) {
        for p in &perms {
            let mut layout = Vec::with_capacity(stacks);
            let mut at = 0;
            for &h in &hs {
                layout.push(p[at..at + h].to_vec());
                at += h;
            }
            out.push(layout);
        }
    }
    out
}
