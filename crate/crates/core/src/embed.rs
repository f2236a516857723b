//! Non-induced subgraph embeddings with optional degree-exact vertices.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Injective map from pattern vertices to host vertices. Every pattern
/// edge lands on a host edge, and each vertex of `degree_exact` keeps its
/// pattern degree in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub mapping: Vec<usize>,
    pub degree_exact: BTreeSet<usize>,
}

impl Embedding {
    pub fn image(&self, v: usize) -> usize {
        self.mapping[v]
    }

    /// Checks both embedding invariants against the given graphs.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        let distinct: BTreeSet<_> = self.mapping.iter().collect();
        self.mapping.len() == pattern.n()
            && distinct.len() == pattern.n()
            && self.mapping.iter().all(|&h| h < host.n())
            && pattern
                .edges()
                .into_iter()
                .all(|(u, v)| host.has_edge(self.mapping[u], self.mapping[v]))
            && self
                .degree_exact
                .iter()
                .all(|&p| host.degree(self.mapping[p]) == pattern.degree(p))
    }
}

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    exact: Vec<bool>,
    order: Vec<usize>,
    mapping: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn admissible(&self, p: usize, h: usize) -> bool {
        if self.used[h] {
            return false;
        }
        let (dp, dh) = (self.pattern.degree(p), self.host.degree(h));
        if dh < dp || (self.exact[p] && dh != dp) {
            return false;
        }
        self.pattern.neighbors(p).iter().all(|&q| match self.mapping[q] {
            Some(hq) => self.host.has_edge(h, hq),
            None => true,
        })
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let anchor = self.pattern.neighbors(p).iter().find_map(|&q| self.mapping[q]);
        let candidates: Vec<usize> = match anchor {
            Some(h) => self.host.neighbors(h).to_vec(),
            None => (0..self.host.n()).collect(),
        };
        for h in candidates {
            if !self.admissible(p, h) {
                continue;
            }
            self.mapping[p] = Some(h);
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.mapping[p] = None;
            self.used[h] = false;
        }
        false
    }
}

/// First embedding found when pattern vertices are placed in decreasing
/// degree order (ties by id) and host candidates are tried in ascending id.
pub fn find_embedding(pattern: &Graph, host: &Graph, degree_exact: &BTreeSet<usize>) -> Option<Embedding> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut exact = vec![false; pattern.n()];
    for &v in degree_exact {
        exact[v] = true;
    }
    let mut matcher = Matcher {
        pattern,
        host,
        exact,
        order,
        mapping: vec![None; pattern.n()],
        used: vec![false; host.n()],
    };
    if !matcher.extend(0) {
        return None;
    }
    Some(Embedding {
        mapping: matcher.mapping.into_iter().map(Option::unwrap).collect(),
        degree_exact: degree_exact.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn triangle_into_k4() {
        let host = families::complete(4).unwrap();
        let e = find_embedding(&triangle(), &host, &BTreeSet::new()).unwrap();
        assert_eq!(e.mapping, vec![0, 1, 2]);
        assert!(e.is_valid(&triangle(), &host));
    }

    #[test]
    fn no_triangle_in_petersen() {
        assert!(find_embedding(&triangle(), &families::petersen(), &BTreeSet::new()).is_none());
    }

    #[test]
    fn degree_exact_blocks_embedding() {
        // a path whose middle must have degree exactly 2 cannot sit in K4
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let host = families::complete(4).unwrap();
        assert!(find_embedding(&path, &host, &BTreeSet::from([1])).is_none());
        let cycle = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let e = find_embedding(&path, &cycle, &BTreeSet::from([1])).unwrap();
        assert!(e.is_valid(&path, &cycle));
    }

    #[test]
    fn pattern_larger_than_host() {
        let host = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(find_embedding(&triangle(), &host, &BTreeSet::new()).is_none());
    }
}
