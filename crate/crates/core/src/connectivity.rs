//! Exact vertex connectivity by counting internally disjoint paths.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Unit-capacity flow network on the split graph: vertex `v` becomes
/// `v_in = 2v` and `v_out = 2v + 1` joined by an arc of capacity one.
struct SplitNetwork {
    // (to, capacity, reverse index)
    arcs: Vec<Vec<(usize, u32, usize)>>,
}

impl SplitNetwork {
    fn new(g: &Graph, source: usize, sink: usize) -> Self {
        let mut net = SplitNetwork {
            arcs: vec![Vec::new(); 2 * g.n()],
        };
        for v in 0..g.n() {
            // terminals are not capacity-limited
            let cap = if v == source || v == sink { g.n() as u32 } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, cap);
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, 1);
            net.add_arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push((to, cap, rev_from));
        self.arcs[to].push((from, 0, rev_to));
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for (i, &(w, cap, _)) in self.arcs[u].iter().enumerate() {
                if cap > 0 && !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((u, i));
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while let Some((u, i)) = prev[v] {
            let (_, _, rev) = self.arcs[u][i];
            self.arcs[u][i].1 -= 1;
            self.arcs[v][rev].1 += 1;
            v = u;
        }
        true
    }
}

/// Maximum number of internally vertex-disjoint paths between two distinct
/// non-adjacent vertices.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    let mut net = SplitNetwork::new(g, u, v);
    let (s, t) = (2 * u + 1, 2 * v);
    let mut flow = 0;
    while net.augment(s, t) {
        flow += 1;
    }
    flow
}

/// Minimum number of vertices whose removal disconnects the graph or leaves
/// a single vertex.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(local_connectivity(g, u, v));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn named_graphs() {
        assert_eq!(vertex_connectivity(&families::complete(4).unwrap()), Ok(3));
        assert_eq!(vertex_connectivity(&families::petersen()), Ok(3));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&path), Ok(1));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&split), Ok(0));
    }

    #[test]
    fn too_small() {
        assert!(vertex_connectivity(&Graph::empty(1)).is_err());
    }
}
