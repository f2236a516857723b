//! Cycle through a vertex sequence in order, built as `k` internally
//! disjoint path segments `seq[i] -> seq[i+1]`.
//!
//! Each node checks that the current and every later segment can still be
//! connected through unused vertices, and that every query vertex ahead
//! keeps two usable neighbours. Candidates are tried nearest-to-target
//! first (ties by id). Failed `(segment, head, used)` states are memoized.

use std::collections::HashSet;

use crate::bits::VertexSet;
use crate::graph::Graph;

use super::{Outcome, SearchResult};

// Failed-state memo entries are capped to bound memory on large hosts.
const MEMO_CAP: usize = 1 << 20;

pub(crate) struct SegmentSearch<'a> {
    g: &'a Graph,
    seq: &'a [usize],
    used: VertexSet,
    path: Vec<usize>,
    nodes: u64,
    limit: Option<u64>,
    exhausted: bool,
    // graphs up to 64 vertices key the memo by a single word
    failed_small: HashSet<(usize, usize, u64)>,
    failed: HashSet<(usize, usize, Vec<u64>)>,
    words: usize,
    // row v holds the neighbourhood of v as a bitset
    nbr: Vec<u64>,
    reached: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
    // dist[j][v]: distance in g from v to seq[j], used to order candidates
    dist: Vec<Vec<usize>>,
}

impl<'a> SegmentSearch<'a> {
    pub(crate) fn new(g: &'a Graph, seq: &'a [usize], limit: Option<u64>) -> Self {
        let mut used = VertexSet::new(g.n());
        for &q in seq {
            used.insert(q);
        }
        let words = used.words().len();
        let mut nbr = vec![0u64; g.n() * words];
        for v in 0..g.n() {
            for &w in g.neighbors(v) {
                nbr[v * words + (w >> 6)] |= 1 << (w & 63);
            }
        }
        SegmentSearch {
            g,
            seq,
            used,
            path: vec![seq[0]],
            nodes: 0,
            limit,
            exhausted: false,
            failed_small: HashSet::new(),
            failed: HashSet::new(),
            words,
            nbr,
            reached: vec![0; words],
            frontier: vec![0; words],
            next: vec![0; words],
            dist: seq
                .iter()
                .map(|&q| {
                    g.bfs_distances(q)
                        .into_iter()
                        .map(|d| d.unwrap_or(usize::MAX))
                        .collect()
                })
                .collect(),
        }
    }

    pub(crate) fn run(mut self) -> SearchResult {
        let found = self.extend(0, self.seq[0]);
        let outcome = if found {
            Outcome::Realized(super::CycleWitness(self.path))
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

    /// Whether `to` can be entered from `from` through unused vertices.
    /// Frontier-at-a-time BFS on bitsets.
    fn connectable(&mut self, from: usize, to: usize) -> bool {
        let w = self.words;
        let target = &self.nbr[to * w..(to + 1) * w];
        self.reached.iter_mut().for_each(|x| *x = 0);
        self.frontier.iter_mut().for_each(|x| *x = 0);
        self.reached[from >> 6] |= 1 << (from & 63);
        self.frontier[from >> 6] |= 1 << (from & 63);
        loop {
            if self.frontier.iter().zip(target).any(|(f, t)| f & t != 0) {
                return true;
            }
            self.next.iter_mut().for_each(|x| *x = 0);
            for (i, &word) in self.frontier.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = i * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for (n, row) in self.next.iter_mut().zip(&self.nbr[v * w..(v + 1) * w]) {
                        *n |= row;
                    }
                }
            }
            let mut any = false;
            for i in 0..w {
                let fresh = self.next[i] & !self.reached[i] & !self.used.words()[i];
                self.frontier[i] = fresh;
                self.reached[i] |= fresh;
                any |= fresh != 0;
            }
            if !any {
                return false;
            }
        }
    }

    fn feasible(&mut self, segment: usize, head: usize) -> bool {
        let k = self.seq.len();
        if !self.connectable(head, self.seq[(segment + 1) % k]) {
            return false;
        }
        if !(segment + 1..k).all(|j| self.degree_ok(segment, head, j)) {
            return false;
        }
        (segment + 1..k).all(|j| self.connectable(self.seq[j], self.seq[(j + 1) % k]))
    }

    /// A query vertex still ahead needs distinct entry and exit neighbours.
    fn degree_ok(&self, segment: usize, head: usize, j: usize) -> bool {
        let k = self.seq.len();
        let prev = (j > segment + 1).then(|| self.seq[j - 1]);
        let next = self.seq[(j + 1) % k];
        let mut usable = 0;
        for &w in self.g.neighbors(self.seq[j]) {
            let ok = !self.used.contains(w) || (j == segment + 1 && w == head) || Some(w) == prev || w == next;
            usable += usize::from(ok);
            if usable >= 2 {
                return true;
            }
        }
        false
    }

    fn extend(&mut self, segment: usize, head: usize) -> bool {
        self.nodes += 1;
        if self.limit.is_some_and(|l| self.nodes > l) {
            self.exhausted = true;
            return false;
        }
        if self.is_failed(segment, head) {
            return false;
        }
        if !self.feasible(segment, head) {
            return false;
        }
        let k = self.seq.len();
        let target = self.seq[(segment + 1) % k];
        let dist = &self.dist[(segment + 1) % k];
        let mut candidates = self.g.neighbors(head).to_vec();
        candidates.sort_by_key(|&w| (dist[w], w));
        for w in candidates {
            if w == target {
                if segment + 1 == k {
                    return true;
                }
                self.path.push(w);
                if self.extend(segment + 1, w) {
                    return true;
                }
                self.path.pop();
            } else if !self.used.contains(w) {
                self.used.insert(w);
                self.path.push(w);
                if self.extend(segment, w) {
                    return true;
                }
                self.path.pop();
                self.used.remove(w);
            }
            if self.exhausted {
                return false;
            }
        }
        self.mark_failed(segment, head);
        false
    }

    fn is_failed(&self, segment: usize, head: usize) -> bool {
        match self.used.words() {
            [word] => self.failed_small.contains(&(segment, head, *word)),
            words => self.failed.contains(&(segment, head, words.to_vec())),
        }
    }

    fn mark_failed(&mut self, segment: usize, head: usize) {
        match self.used.words() {
            [word] if self.failed_small.len() < MEMO_CAP => {
                self.failed_small.insert((segment, head, *word));
            }
            [_] => {}
            words if self.failed.len() < MEMO_CAP => {
                self.failed.insert((segment, head, words.to_vec()));
            }
            _ => {}
        }
    }
}
