//! Cycle witnesses and their standalone validator.
//!
//! The validator only reads adjacency from the host graph and does not use
//! any search routine.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// A cycle listed as its vertices in traversal order, closing edge implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("cycle has {0} vertices, need at least 3")]
    TooShort(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} repeated")]
    Repeated(usize),
    #[error("{0} and {1} are consecutive but not adjacent")]
    NotAdjacent(usize, usize),
    #[error("cycle misses query vertex {0}")]
    MissingQuery(usize),
    #[error("query vertices appear in the wrong cyclic order")]
    WrongOrder,
    #[error("cycle has {len} vertices but the graph has {n}")]
    NotHamiltonian { len: usize, n: usize },
}

/// Checks that `cycle` is a simple cycle of `g` meeting `query` in cyclic
/// order (either direction), and spanning when `hamiltonian` is set.
pub fn validate(g: &Graph, cycle: &[usize], query: &[usize], hamiltonian: bool) -> Result<(), WitnessError> {
    let len = cycle.len();
    if len < 3 {
        return Err(WitnessError::TooShort(len));
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if v >= g.n() {
            return Err(WitnessError::OutOfRange(v));
        }
        if seen[v] {
            return Err(WitnessError::Repeated(v));
        }
        seen[v] = true;
    }
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        if !g.has_edge(a, b) {
            return Err(WitnessError::NotAdjacent(a, b));
        }
    }
    if hamiltonian && len != g.n() {
        return Err(WitnessError::NotHamiltonian { len, n: g.n() });
    }
    if let Some(&q) = query.iter().find(|&&q| q >= g.n() || !seen[q]) {
        return Err(WitnessError::MissingQuery(q));
    }
    if query.is_empty() {
        return Ok(());
    }
    let restricted: Vec<usize> = cycle.iter().copied().filter(|v| query.contains(v)).collect();
    let k = query.len();
    let start = restricted.iter().position(|&v| v == query[0]).unwrap();
    let forward = (0..k).all(|i| restricted[(start + i) % k] == query[i]);
    let backward = (0..k).all(|i| restricted[(start + k - i) % k] == query[i]);
    if forward || backward {
        Ok(())
    } else {
        Err(WitnessError::WrongOrder)
    }
}
