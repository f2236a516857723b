//! Brute-force oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls the searches under test. Graph generation for the
//! exhaustive suites does use `canonical_form` for deduplication, and the
//! resulting class counts are pinned to the known totals.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use kordered::{canonical_form, CanonicalForm, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected graphs on 1..=8 vertices up to isomorphism.
pub const CONNECTED_GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// All graphs on `n` vertices up to isomorphism, by adding a vertex with
/// every possible neighbourhood to each graph on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::from_edges(1, &[]).unwrap()));
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph().edges();
            for mask in 0u32..(1 << (m - 1)) {
                let mut edges = base.clone();
                edges.extend((0..m - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, m - 1)));
                next.insert(canonical_form(&Graph::from_edges(m, &edges).unwrap()));
            }
        }
        level = next;
    }
    level.iter().map(CanonicalForm::to_graph).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every simple cycle once, starting at its smallest vertex with
/// `c[1] < c[last]`.
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                extend(g, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        extend(g, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Representative of a cyclic sequence up to rotation and reversal: the
/// smallest vertex first, then the direction with the smaller second entry.
pub fn canonical_cyclic(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let at = seq.iter().enumerate().min_by_key(|(_, &v)| v).unwrap().0;
    let forward: Vec<usize> = (0..k).map(|i| seq[(at + i) % k]).collect();
    let backward: Vec<usize> = (0..k).map(|i| seq[(at + k - i) % k]).collect();
    forward.min(backward)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Canonical `k`-sequences lying in order on some cycle (hamiltonian ones
/// only when asked).
pub fn realized_sequences(g: &Graph, cycles: &[Vec<usize>], k: usize, hamiltonian: bool) -> HashSet<Vec<usize>> {
    let mut out = HashSet::new();
    let mut positions: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in cycles {
        if c.len() < k || (hamiltonian && c.len() != g.n()) {
            continue;
        }
        let combos = positions.entry(c.len()).or_insert_with(|| combinations(c.len(), k));
        for pos in combos.iter() {
            let sub: Vec<usize> = pos.iter().map(|&i| c[i]).collect();
            out.insert(canonical_cyclic(&sub));
        }
    }
    out
}

/// Every canonical `k`-sequence on `n` vertices.
pub fn all_canonical_sequences(n: usize, k: usize) -> BTreeSet<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if cur.len() == k {
            out.insert(canonical_cyclic(cur));
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether `seq` lies in order on one of `cycles`.
pub fn on_some_cycle(cycles: &[Vec<usize>], seq: &[usize], n: usize, hamiltonian: bool) -> bool {
    let target = canonical_cyclic(seq);
    cycles.iter().filter(|c| !hamiltonian || c.len() == n).any(|c| {
        let sub: Vec<usize> = c.iter().copied().filter(|v| seq.contains(v)).collect();
        sub.len() == seq.len() && canonical_cyclic(&sub) == target
    })
}

/// Number of automorphisms by plain backtracking over images in vertex
/// order, checking adjacency against every earlier vertex.
pub fn automorphism_count(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, map: &mut Vec<usize>, used: &mut [bool]) -> usize {
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for img in 0..g.n() {
            if used[img] || g.degree(img) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], img)) {
                used[img] = true;
                map.push(img);
                total += rec(g, v + 1, map, used);
                map.pop();
                used[img] = false;
            }
        }
        total
    }
    rec(g, 0, &mut Vec::new(), &mut vec![false; g.n()])
}

/// Isomorphism by backtracking, for the census oracle.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn rec(a: &Graph, b: &Graph, v: usize, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if v == a.n() {
            return true;
        }
        for img in 0..b.n() {
            if !used[img] && a.degree(v) == b.degree(img) && (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], img))
            {
                used[img] = true;
                map.push(img);
                if rec(a, b, v + 1, map, used) {
                    return true;
                }
                map.pop();
                used[img] = false;
            }
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && rec(a, b, 0, &mut Vec::new(), &mut vec![false; b.n()])
}

fn invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut per_vertex: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut counts = vec![0; g.n()];
            for d in g.bfs_distances(v).into_iter().flatten() {
                counts[d] += 1;
            }
            let nb = g.neighbors(v);
            let triangles = nb
                .iter()
                .enumerate()
                .map(|(i, &x)| nb[i + 1..].iter().filter(|&&y| g.has_edge(x, y)).count())
                .sum();
            counts.push(triangles);
            counts
        })
        .collect();
    per_vertex.sort();
    per_vertex
}

/// Connected cubic graphs on `n` vertices up to isomorphism: labeled
/// graphs with `N(0) = {1, 2, 3}`, classified by brute-force isomorphism.
pub fn cubic_classes(n: usize) -> Vec<Graph> {
    fn rec(n: usize, adj: &mut Vec<Vec<usize>>, out: &mut Vec<Graph>) {
        let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
            return;
        };
        let need = 3 - adj[v].len();
        let cands: Vec<usize> = (v + 1..n)
            .filter(|&u| adj[u].len() < 3 && !adj[v].contains(&u))
            .collect();
        for combo in combinations(cands.len(), need) {
            for &i in &combo {
                let u = cands[i];
                adj[v].push(u);
                adj[u].push(v);
            }
            rec(n, adj, out);
            for &i in &combo {
                let u = cands[i];
                adj[v].pop();
                adj[u].pop();
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    for u in 1..=3 {
        adj[0].push(u);
        adj[u].push(0);
    }
    let mut labeled = Vec::new();
    rec(n, &mut adj, &mut labeled);

    let mut classes: BTreeMap<Vec<Vec<usize>>, Vec<Graph>> = BTreeMap::new();
    for g in labeled {
        let reps = classes.entry(invariant(&g)).or_default();
        if !reps.iter().any(|r| brute_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    classes.into_values().flatten().collect()
}

pub fn brute_girth(g: &Graph) -> Option<usize> {
    all_cycles(g).iter().map(Vec::len).min()
}

pub fn brute_has_square(g: &Graph) -> bool {
    all_cycles(g).iter().any(|c| c.len() == 4)
}

/// Connected graph: a random tree plus each other pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    relabel(&Graph::from_edges(n, &edges).unwrap(), &random_permutation(rng, n))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random cubic multigraph-free graph from the pairing model with
/// rejection; may be disconnected.
pub fn random_cubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut edges = BTreeSet::new();
        let ok = points.chunks(2).all(|p| {
            let (u, v) = (p[0].min(p[1]), p[0].max(p[1]));
            u != v && edges.insert((u, v))
        });
        if ok {
            return Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).unwrap();
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn relabel(g: &Graph, p: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (p[u], p[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}
