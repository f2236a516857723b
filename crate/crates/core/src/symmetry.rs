//! Automorphism groups, n-route transitivity and cycle orbits.
//!
//! Groups here are small (hundreds of elements), so they are enumerated in
//! full rather than represented by generators.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `0..n`; `image[v]` is where `v` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    pub image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// `None` unless `image` is a bijection on `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Option<Self> {
        let mut hit = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut hit[v], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Permutation { image }
    }

    /// Edges go to edges; being a bijection, non-edges then go to non-edges.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.image.len() == g.n()
            && g.edges()
                .into_iter()
                .all(|(u, v)| g.has_edge(self.image[u], self.image[v]))
    }
}

/// All automorphisms of `g` in lexicographic order of their image lists.
///
/// Vertices are assigned in BFS order; a candidate image must share the
/// vertex's degree and distance profile and preserve distances to every
/// vertex already placed.
pub fn automorphism_group(g: &Graph) -> Vec<Permutation> {
    let n = g.n();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| g.bfs_distances(v)).collect();
    let profile: Vec<Vec<usize>> = dist
        .iter()
        .map(|row| {
            let mut counts = vec![0; n + 1];
            for d in row {
                counts[d.unwrap_or(n)] += 1;
            }
            counts
        })
        .collect();

    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            for &w in g.neighbors(order[i]) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }

    struct State<'a> {
        dist: &'a [Vec<Option<usize>>],
        profile: &'a [Vec<usize>],
        order: &'a [usize],
        image: Vec<usize>,
        used: Vec<bool>,
        out: Vec<Permutation>,
    }

    fn extend(s: &mut State, depth: usize) {
        if depth == s.order.len() {
            s.out.push(Permutation { image: s.image.clone() });
            return;
        }
        let p = s.order[depth];
        for h in 0..s.image.len() {
            if s.used[h] || s.profile[h] != s.profile[p] {
                continue;
            }
            let consistent = s.order[..depth].iter().all(|&q| s.dist[p][q] == s.dist[h][s.image[q]]);
            if !consistent {
                continue;
            }
            s.image[p] = h;
            s.used[h] = true;
            extend(s, depth + 1);
            s.used[h] = false;
        }
    }

    let mut state = State {
        dist: &dist,
        profile: &profile,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        out: Vec::new(),
    };
    extend(&mut state, 0);
    let mut group = state.out;
    group.sort();
    group
}

/// A directed simple path; `vertices[0]` is the initial point and the
/// route has length `vertices.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Route {
    pub vertices: Vec<usize>,
}

impl Route {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn image(&self, p: &Permutation) -> Route {
        Route {
            vertices: self.vertices.iter().map(|&v| p.apply(v)).collect(),
        }
    }
}

/// Every route of the given length, in lexicographic order. Each
/// undirected path appears once per direction.
pub fn enumerate_routes(g: &Graph, length: usize) -> Vec<Route> {
    fn walk(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], length: usize, out: &mut Vec<Route>) {
        if path.len() == length + 1 {
            out.push(Route { vertices: path.clone() });
            return;
        }
        let head = *path.last().unwrap();
        for &w in g.neighbors(head) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, path, on, length, out);
                path.pop();
                on[w] = false;
            }
        }
    }

    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        walk(g, &mut vec![s], &mut on, length, &mut out);
        on[s] = false;
    }
    out
}

/// Sizes of the orbits of `group` acting on `routes`, in order of each
/// orbit's smallest member.
pub fn route_orbit_sizes(routes: &[Route], group: &[Permutation]) -> Vec<usize> {
    let mut seen: HashSet<&Route> = HashSet::with_capacity(routes.len());
    let members: HashSet<&Route> = routes.iter().collect();
    let mut sizes = Vec::new();
    for r in routes {
        if seen.contains(r) {
            continue;
        }
        let orbit: BTreeSet<Route> = group.iter().map(|p| r.image(p)).collect();
        for img in &orbit {
            if let Some(m) = members.get(img) {
                seen.insert(m);
            }
        }
        sizes.push(orbit.len());
    }
    sizes
}

/// Whether the automorphism group is transitive on routes of the given
/// length.
pub fn is_n_transitive(g: &Graph, length: usize) -> Result<bool> {
    if length == 0 {
        return Err(Error::InvalidParameter("route length must be at least 1".into()));
    }
    let routes = enumerate_routes(g, length);
    let Some(first) = routes.first() else {
        return Err(Error::InvalidParameter(format!(
            "graph has no route of length {length}"
        )));
    };
    let group = automorphism_group(g);
    let orbit: HashSet<Route> = group.iter().map(|p| first.image(p)).collect();
    Ok(orbit.len() == routes.len())
}

/// Whether every vertex can be mapped to every other by an automorphism.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let images: HashSet<usize> = automorphism_group(g).iter().map(|p| p.apply(0)).collect();
    images.len() == g.n()
}

/// Cycles of exactly `length`, each as its sorted edge list, in
/// lexicographic order.
pub fn cycles_of_length(g: &Graph, length: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    if length < 3 {
        return Vec::new();
    }
    // rooted at the smallest vertex, second vertex below the last
    fn walk(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], length: usize, out: &mut BTreeSet<Vec<(usize, usize)>>) {
        let (root, head) = (path[0], *path.last().unwrap());
        if path.len() == length {
            if g.has_edge(head, root) && path[1] < head {
                let mut edges: Vec<(usize, usize)> = (0..length)
                    .map(|i| {
                        let (a, b) = (path[i], path[(i + 1) % length]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                edges.sort_unstable();
                out.insert(edges);
            }
            return;
        }
        for &w in g.neighbors(head) {
            if w > root && !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, path, on, length, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        walk(g, &mut vec![s], &mut on, length, &mut out);
        on[s] = false;
    }
    out.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleOrbits {
    pub cycles: usize,
    pub orbits: usize,
}

/// Number of cycles of the given length and the number of orbits they
/// form under the automorphism group. A cycle is identified with its edge
/// set.
pub fn cycle_orbit_count(g: &Graph, length: usize) -> CycleOrbits {
    let cycles = cycles_of_length(g, length);
    let group = automorphism_group(g);
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::with_capacity(cycles.len());
    let mut orbits = 0;
    for c in &cycles {
        if seen.contains(c) {
            continue;
        }
        orbits += 1;
        for p in &group {
            let mut img: Vec<(usize, usize)> = c
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p.apply(u), p.apply(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            img.sort_unstable();
            seen.insert(img);
        }
    }
    CycleOrbits {
        cycles: cycles.len(),
        orbits,
    }
}

/// All simple `u`-`v` paths with exactly `length` edges.
pub fn paths_of_length(g: &Graph, u: usize, v: usize, length: usize) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    on[u] = true;
    let mut path = vec![u];
    fn walk(g: &Graph, v: usize, length: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let head = *path.last().unwrap();
        if path.len() == length {
            if g.has_edge(head, v) {
                let mut p = path.clone();
                p.push(v);
                out.push(p);
            }
            return;
        }
        for &w in g.neighbors(head) {
            if w != v && !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, v, length, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    if length >= 1 && u != v {
        walk(g, v, length, &mut path, &mut on, &mut out);
    }
    Ok(out)
}

/// Maximum number of pairwise internally disjoint `u`-`v` paths of exactly
/// `length` edges, by exhaustive search over the enumerated paths.
pub fn disjoint_paths_of_length(g: &Graph, u: usize, v: usize, length: usize) -> Result<usize> {
    if u == v {
        return Err(Error::InvalidParameter("endpoints must differ".into()));
    }
    let paths = paths_of_length(g, u, v, length)?;
    let interiors: Vec<Vec<usize>> = paths.iter().map(|p| p[1..p.len() - 1].to_vec()).collect();

    fn best(interiors: &[Vec<usize>], from: usize, taken: &mut Vec<bool>, chosen: usize, record: &mut usize) {
        *record = (*record).max(chosen);
        if chosen + (interiors.len() - from) <= *record {
            return;
        }
        for i in from..interiors.len() {
            if interiors[i].iter().any(|&w| taken[w]) {
                continue;
            }
            for &w in &interiors[i] {
                taken[w] = true;
            }
            best(interiors, i + 1, taken, chosen + 1, record);
            for &w in &interiors[i] {
                taken[w] = false;
            }
        }
    }

    let mut record = 0;
    best(&interiors, 0, &mut vec![false; g.n()], 0, &mut record);
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn group_orders() {
        assert_eq!(automorphism_group(&families::complete(4).unwrap()).len(), 24);
        assert_eq!(automorphism_group(&families::petersen()).len(), 120);
        assert_eq!(automorphism_group(&families::heawood()).len(), 336);
        assert_eq!(
            automorphism_group(&families::complete_bipartite(3, 3).unwrap()).len(),
            72
        );
        // disconnected: two triangles, swap and permute within
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(automorphism_group(&two).len(), 72);
    }

    #[test]
    fn group_is_closed() {
        let g = families::petersen();
        let group = automorphism_group(&g);
        let set: HashSet<&Permutation> = group.iter().collect();
        assert!(set.contains(&Permutation::identity(10)));
        for a in &group {
            assert!(a.is_automorphism(&g));
            assert!(set.contains(&a.inverse()));
            for b in group.iter().step_by(7) {
                assert!(set.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn routes() {
        let tri = families::complete(3).unwrap();
        assert_eq!(enumerate_routes(&tri, 1).len(), 6);
        assert_eq!(enumerate_routes(&families::petersen(), 1).len(), 30);
        // the Heawood group acts regularly on 4-routes
        assert_eq!(enumerate_routes(&families::heawood(), 4).len(), 336);
    }

    #[test]
    fn transitivity() {
        let p = families::petersen();
        for len in 1..=3 {
            assert!(is_n_transitive(&p, len).unwrap());
        }
        assert!(!is_n_transitive(&p, 4).unwrap());
        let h = families::heawood();
        for len in 1..=4 {
            assert!(is_n_transitive(&h, len).unwrap());
        }
        assert!(is_vertex_transitive(&h));
        assert!(is_n_transitive(&Graph::empty(3), 1).is_err());
        // K4: every 3-route is a hamiltonian path, all equivalent under S4
        assert!(is_n_transitive(&families::complete(4).unwrap(), 3).unwrap());
    }

    #[test]
    fn cycle_orbits() {
        let p = cycle_orbit_count(&families::petersen(), 5);
        assert_eq!((p.cycles, p.orbits), (12, 1));
        let h = cycle_orbit_count(&families::heawood(), 6);
        assert_eq!((h.cycles, h.orbits), (28, 1));
        let k = cycle_orbit_count(&families::complete_bipartite(3, 3).unwrap(), 4);
        assert_eq!((k.cycles, k.orbits), (9, 1));
    }

    #[test]
    fn disjoint_paths() {
        let h = families::heawood();
        for v in 1..14 {
            if h.distance(0, v).unwrap() == Some(3) {
                assert!(disjoint_paths_of_length(&h, 0, v, 3).unwrap() >= 2);
            }
        }
        assert_eq!(disjoint_paths_of_length(&h, 0, 1, 1).unwrap(), 1);
        let p = families::petersen();
        assert_eq!(disjoint_paths_of_length(&p, 0, 2, 2).unwrap(), 1);
        assert!(disjoint_paths_of_length(&p, 3, 3, 2).is_err());
        // K3,3: three length-2 paths between same-side vertices
        let k33 = families::complete_bipartite(3, 3).unwrap();
        assert_eq!(disjoint_paths_of_length(&k33, 0, 1, 2).unwrap(), 3);
    }
}
