//! Hamiltonian cycle backtracking with an ordering constraint.
//!
//! The path grows from `order[0]`. Query vertices may only be entered in
//! the order given; other query vertices are off limits until their turn.
//! Pruning per node:
//! - every unvisited vertex keeps at least two usable neighbours (unvisited,
//!   the path head, or the start vertex for the closing edge);
//! - an unvisited neighbour of the head with exactly two usable neighbours
//!   forces the next step, and two such neighbours refute the branch;
//! - at most one unvisited vertex may be forced onto the start vertex;
//! - unvisited vertices stay connected to the head;
//! - the next query vertex is reachable through non-query vertices.

use crate::bits::VertexSet;
use crate::graph::Graph;

use super::{CycleWitness, Outcome, SearchResult};

pub(crate) struct HamiltonianSearch<'a> {
    g: &'a Graph,
    order: &'a [usize],
    query_index: Vec<Option<usize>>,
    start: usize,
    visited: VertexSet,
    path: Vec<usize>,
    next_query: usize,
    nodes: u64,
    limit: Option<u64>,
    exhausted: bool,
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

impl<'a> HamiltonianSearch<'a> {
    /// `order` may be empty, in which case the search starts at vertex 0.
    pub(crate) fn new(g: &'a Graph, order: &'a [usize], limit: Option<u64>) -> Self {
        let mut query_index = vec![None; g.n()];
        for (i, &q) in order.iter().enumerate() {
            query_index[q] = Some(i);
        }
        let start = order.first().copied().unwrap_or(0);
        let mut visited = VertexSet::new(g.n());
        visited.insert(start);
        HamiltonianSearch {
            g,
            order,
            query_index,
            start,
            visited,
            path: vec![start],
            next_query: 1,
            nodes: 0,
            limit,
            exhausted: false,
            seen: vec![0; g.n()],
            stamp: 0,
            queue: Vec::with_capacity(g.n()),
        }
    }

    pub(crate) fn run(mut self) -> SearchResult {
        let found = self.g.n() >= 3 && self.extend(self.start);
        let outcome = if found {
            Outcome::Realized(CycleWitness(self.path))
        } else if self.exhausted {
            Outcome::Inconclusive
        } else {
            Outcome::Refuted
        };
        SearchResult {
            outcome,
            nodes_expanded: self.nodes,
        }
    }

    fn usable(&self, u: usize, head: usize) -> usize {
        self.g
            .neighbors(u)
            .iter()
            .filter(|&&w| !self.visited.contains(w) || w == head || w == self.start)
            .count()
    }

    fn enterable(&self, w: usize) -> bool {
        match self.query_index[w] {
            Some(i) => i == self.next_query,
            None => true,
        }
    }

    /// BFS from `head` through unvisited vertices. Returns the number of
    /// unvisited vertices reached.
    fn reach(&mut self, head: usize, through_queries: bool) -> usize {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(head);
        self.seen[head] = stamp;
        let mut i = 0;
        while i < self.queue.len() {
            let u = self.queue[i];
            i += 1;
            if !through_queries && u != head && self.query_index[u].is_some() {
                continue;
            }
            for &w in self.g.neighbors(u) {
                if self.seen[w] != stamp && !self.visited.contains(w) {
                    self.seen[w] = stamp;
                    self.queue.push(w);
                }
            }
        }
        self.queue.len() - 1
    }

    /// Returns `None` when the branch is dead, otherwise the forced next
    /// vertex if there is one.
    fn prune(&mut self, head: usize) -> Option<Option<usize>> {
        let n = self.g.n();
        let at_start = head == self.start;
        let mut forced_next = None;
        let mut forced_start = 0;
        for u in 0..n {
            if self.visited.contains(u) {
                continue;
            }
            let usable = self.usable(u, head);
            if usable < 2 {
                return None;
            }
            if usable == 2 {
                if at_start {
                    // the start still has both cycle edges free
                    if self.g.has_edge(u, head) {
                        forced_start += 1;
                        if forced_start > 2 {
                            return None;
                        }
                    }
                    continue;
                }
                if self.g.has_edge(u, head) {
                    if forced_next.is_some() {
                        return None;
                    }
                    forced_next = Some(u);
                }
                if self.g.has_edge(u, self.start) {
                    forced_start += 1;
                    if forced_start > 1 {
                        return None;
                    }
                }
            }
        }
        let remaining = n - self.path.len();
        if self.reach(head, true) != remaining {
            return None;
        }
        if let Some(&target) = self.order.get(self.next_query) {
            self.reach(head, false);
            if self.seen[target] != self.stamp {
                return None;
            }
        }
        Some(forced_next)
    }

    fn extend(&mut self, head: usize) -> bool {
        self.nodes += 1;
        if self.limit.is_some_and(|l| self.nodes > l) {
            self.exhausted = true;
            return false;
        }
        if self.path.len() == self.g.n() {
            return self.g.has_edge(head, self.start);
        }
        let forced = match self.prune(head) {
            None => return false,
            Some(f) => f,
        };
        let g = self.g;
        let candidates: &[usize] = match forced {
            Some(ref w) => std::slice::from_ref(w),
            None => g.neighbors(head),
        };
        for &w in candidates {
            if self.visited.contains(w) || !self.enterable(w) {
                continue;
            }
            let advanced = self.query_index[w].is_some();
            self.visited.insert(w);
            self.path.push(w);
            if advanced {
                self.next_query += 1;
            }
            if self.extend(w) {
                return true;
            }
            if advanced {
                self.next_query -= 1;
            }
            self.path.pop();
            self.visited.remove(w);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}
