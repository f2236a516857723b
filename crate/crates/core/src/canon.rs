//! Canonical labeling by colour refinement and individualization.
//!
//! The ordered partition starts from vertex degrees and is refined by the
//! multiset of neighbour colours until stable. Non-discrete partitions are
//! split by individualizing each vertex of the first non-singleton cell in
//! turn; every discrete leaf yields a relabeled edge list and the smallest
//! one is the canonical form. Leaves that reproduce the current best give
//! automorphisms, which prune children lying in an already explored orbit.

use crate::graph::Graph;

/// Label-invariant encoding: equal for two graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Big-endian `n` followed by each edge's endpoints, two bytes apiece.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + 4 * self.edges.len());
        out.extend_from_slice(&(self.n as u16).to_be_bytes());
        for &(u, v) in &self.edges {
            out.extend_from_slice(&(u as u16).to_be_bytes());
            out.extend_from_slice(&(v as u16).to_be_bytes());
        }
        out
    }

    /// The canonically labeled graph itself.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u as usize, v as usize)).collect();
        Graph::from_edges(self.n, &edges).expect("canonical edges are valid")
    }
}

fn rank_dense<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect();
    (ranks, sorted.len())
}

fn cell_count(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// Refines an ordered partition (dense colours) to the coarsest equitable
/// refinement. Cell order depends only on structure and the input order.
pub(crate) fn refine(g: &Graph, colors: Vec<usize>) -> Vec<usize> {
    let mut colors = colors;
    let mut cells = cell_count(&colors);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let (next, count) = rank_dense(&keys);
        colors = next;
        if count == cells {
            return colors;
        }
        cells = count;
    }
}

pub(crate) fn degree_colors(g: &Graph) -> Vec<usize> {
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    rank_dense(&degrees).0
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let cell = colors[v];
    let keys: Vec<usize> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| 2 * c + usize::from(c == cell && u != v))
        .collect();
    rank_dense(&keys).0
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

type EdgeList = Vec<(u32, u32)>;

struct Search<'a> {
    g: &'a Graph,
    /// Smallest relabeled edge list so far and the labeling giving it.
    best: Option<(EdgeList, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn relabeled_edges(&self, labeling: &[usize]) -> Vec<(u32, u32)> {
        let mut edges: Vec<(u32, u32)> = self
            .g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (labeling[u] as u32, labeling[v] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let edges = self.relabeled_edges(&labeling);
        match &self.best {
            None => self.best = Some((edges, labeling)),
            Some((best_edges, best_labeling)) => match edges.cmp(best_edges) {
                std::cmp::Ordering::Less => self.best = Some((edges, labeling)),
                std::cmp::Ordering::Equal => {
                    let mut inverse = vec![0; labeling.len()];
                    for (v, &l) in best_labeling.iter().enumerate() {
                        inverse[l] = v;
                    }
                    let aut: Vec<usize> = labeling.iter().map(|&l| inverse[l]).collect();
                    if aut.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(aut);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    fn same_orbit(&self, fixed: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.n());
        for aut in &self.automorphisms {
            if fixed.iter().all(|&x| aut[x] == x) {
                for (x, &y) in aut.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        let root = uf.find(v);
        explored.iter().any(|&w| uf.find(w) == root)
    }

    fn descend(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) {
        let colors = refine(self.g, colors);
        let n = self.g.n();
        if cell_count(&colors) == n {
            self.leaf(colors);
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).unwrap();
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored = Vec::new();
        for v in members {
            if self.same_orbit(path, &explored, v) {
                continue;
            }
            path.push(v);
            self.descend(individualize(&colors, v), path);
            path.pop();
            explored.push(v);
        }
    }
}

/// Returns `labeling` with `labeling[v]` the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(degree_colors(g), &mut Vec::new());
    search.best.map(|(_, l)| l).unwrap_or_default()
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let labeling = canonical_labeling(g);
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (labeling[u] as u32, labeling[v] as u32);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    CanonicalForm { n: g.n(), edges }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}
