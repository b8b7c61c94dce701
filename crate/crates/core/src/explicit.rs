//! Small explicitly listed graphs with hand-assigned heuristic values.
//!
//! Handy for building corner cases of the search that the puzzle domains
//! only reach by accident.

use std::collections::BTreeMap;

use crate::search::{Cost, Domain, Successor};

#[derive(Debug, Clone, Default)]
struct Node {
    h1: Cost,
    h2: Cost,
    goal: bool,
    edges: Vec<(usize, Cost)>,
}

/// Directed graph over `usize` node ids. Successors follow edge insertion
/// order; a move is identified by the id of the node it leads to.
#[derive(Debug, Clone, Default)]
pub struct ExplicitGraph {
    root: usize,
    nodes: BTreeMap<usize, Node>,
}

/// Move along the edge `from -> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
}

impl ExplicitGraph {
    pub fn new(root: usize) -> Self {
        ExplicitGraph {
            root,
            nodes: BTreeMap::new(),
        }
    }

    pub fn add_node(&mut self, id: usize, h1: Cost, h2: Cost) -> &mut Self {
        let node = self.nodes.entry(id).or_default();
        node.h1 = h1;
        node.h2 = h2;
        self
    }

    /// Adds a directed edge; both ends are created if missing. Edge costs
    /// must be positive.
    pub fn add_edge(&mut self, from: usize, to: usize, cost: Cost) -> &mut Self {
        assert!(cost > 0, "edge costs must be positive");
        self.nodes.entry(to).or_default();
        self.nodes.entry(from).or_default().edges.push((to, cost));
        self
    }

    pub fn set_goal(&mut self, id: usize) -> &mut Self {
        self.nodes.entry(id).or_default().goal = true;
        self
    }

    fn node(&self, id: usize) -> Option<&Node> {
        self.nodes.get(&id)
    }
}

impl Domain for ExplicitGraph {
    type State = usize;
    type Move = Edge;

    fn initial_state(&self) -> usize {
        self.root
    }

    fn is_goal(&self, state: &usize) -> bool {
        self.node(*state).is_some_and(|n| n.goal)
    }

    fn successors(
        &self,
        state: &usize,
        incoming: Option<Edge>,
        out: &mut Vec<Successor<usize, Edge>>,
    ) {
        let Some(node) = self.node(*state) else {
            return;
        };
        for &(to, cost) in &node.edges {
            if incoming.is_some_and(|e| e.from == to && e.to == *state) {
                continue;
            }
            out.push(Successor {
                state: to,
                cost,
                mv: Edge { from: *state, to },
            });
        }
    }

    fn h1(&self, state: &usize) -> Cost {
        self.node(*state).map_or(0, |n| n.h1)
    }

    fn h2(&self, state: &usize) -> Cost {
        self.node(*state).map_or(0, |n| n.h2)
    }
}
