//! Immutable undirected simple graphs on vertices `0..n`.
//!
//! Connectivity is not an invariant of [`Graph`]; operations that need a
//! connected input check it and return [`Error::Disconnected`].

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Result of [`Graph::diameter`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    /// The graph is disconnected.
    Infinite,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adjacency, edge_count })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.adjacency.iter().all(|list| list.len() == r)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut adjacency = vec![Vec::new(); self.n()];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[u]] = list.iter().map(|&v| perm[v]).collect();
            adjacency[perm[u]].sort_unstable();
        }
        Graph {
            adjacency,
            edge_count: self.edge_count,
        }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path edge count between `u` and `v`, `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Diameter; graphs with fewer than two vertices have diameter 0.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Number of vertices at exactly distance `d` from `v`.
    pub fn count_at_distance(&self, v: usize, d: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(v).into_iter().filter(|&x| x == Some(d)).count())
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// For each root, a BFS meeting a non-tree edge `(u, w)` closes a closed
    /// walk of length `d(u) + d(w) + 1` through the root; the minimum over
    /// all roots is the girth.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break 'bfs;
                    }
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .into_iter()
            .any(|(u, v)| self.adjacency[u].iter().any(|&w| w != v && self.has_edge(v, w)))
    }

    /// True iff some pair of distinct vertices has two or more common
    /// neighbors, i.e. the graph contains a (not necessarily induced) 4-cycle.
    pub fn has_square(&self) -> bool {
        let n = self.n();
        for u in 0..n {
            for v in u + 1..n {
                let common = self.adjacency[u].iter().filter(|&&w| self.has_edge(v, w)).count();
                if common >= 2 {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_regular(2));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.degree_sequence(), vec![0]);
        assert_eq!(g.diameter(), Diameter::Finite(0));
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
    }

    #[test]
    fn distances() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance(0, 1).unwrap(), Some(1));
        assert_eq!(g.distance(0, 3).unwrap(), None);
        assert_eq!(g.diameter(), Diameter::Infinite);
        assert!(g.distance(0, 9).is_err());
        assert!(g.count_at_distance(7, 0).is_err());
    }

    #[test]
    fn metric_values_on_named_graphs() {
        let k4 = families::complete(4).unwrap();
        assert_eq!(k4.diameter(), Diameter::Finite(1));
        assert_eq!(k4.girth(), Some(3));

        let petersen = families::petersen();
        assert_eq!(petersen.diameter(), Diameter::Finite(2));
        for v in 0..10 {
            assert_eq!(petersen.count_at_distance(v, 2).unwrap(), 6);
            assert_eq!(petersen.count_at_distance(v, 0).unwrap(), 1);
        }
        assert_eq!(petersen.girth(), Some(5));
        assert!(!petersen.has_triangle());
        assert!(!petersen.has_square());

        let heawood = families::heawood();
        assert_eq!(heawood.diameter(), Diameter::Finite(3));
        assert_eq!(heawood.girth(), Some(6));
        for (u, v) in heawood.edges() {
            assert_eq!(heawood.distance(u, v).unwrap(), Some(1));
        }

        let k33 = families::complete_bipartite(3, 3).unwrap();
        for v in 0..6 {
            assert_eq!(k33.count_at_distance(v, 2).unwrap(), 2);
        }
        assert!(k33.has_square());
        assert!(!k33.has_triangle());
    }

    #[test]
    fn path_is_acyclic() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.girth(), None);
        assert!(p.is_connected());
    }
}
