use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered tuple of distinct vertices, the query object of
/// k-orderedness.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSequence(Vec<usize>);

impl VertexSequence {
    /// Validates length at least 3, distinctness and range against `n`.
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidSequence(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSequence(format!(
                "vertices must be distinct: {vertices:?}"
            )));
        }
        Ok(VertexSequence(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rotated(&self, by: usize) -> VertexSequence {
        let mut v = self.0.clone();
        let len = v.len();
        v.rotate_left(by % len);
        VertexSequence(v)
    }

    pub fn reversed(&self) -> VertexSequence {
        VertexSequence(self.0.iter().rev().copied().collect())
    }

    /// Representative of the class under rotation and reversal: the
    /// smallest vertex first, then the direction whose second entry is
    /// smaller.
    pub fn canonical(&self) -> VertexSequence {
        let k = self.0.len();
        let pos = (0..k).min_by_key(|&i| self.0[i]).unwrap();
        let mut v = self.0.clone();
        v.rotate_left(pos);
        if v[1] > v[k - 1] {
            v[1..].reverse();
        }
        VertexSequence(v)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }
}

impl std::fmt::Display for VertexSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All canonical `k`-sequences over `0..n` in lexicographic order; there
/// are `C(n,k) * (k-1)! / 2` of them.
pub fn canonical_sequences(n: usize, k: usize) -> Vec<VertexSequence> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<VertexSequence>) {
        if cur.len() == k {
            if cur[1] < cur[k - 1] {
                out.push(VertexSequence(cur.clone()));
            }
            return;
        }
        let lo = if cur.is_empty() { 0 } else { cur[0] + 1 };
        for v in lo..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur.push(v);
            rec(n, k, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    if k >= 3 && k <= n {
        rec(n, k, &mut Vec::with_capacity(k), &mut vec![false; n], &mut out);
    }
    out
}
