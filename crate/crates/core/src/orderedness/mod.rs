//! Cycles and hamiltonian cycles through vertex sequences in a prescribed
//! cyclic order, and the k-ordered / k-ordered hamiltonian verdicts built
//! on them.
//!
//! A cycle realizes a sequence when deleting the other vertices leaves a
//! rotation of the sequence or of its reversal; traversal direction is
//! free. Consequently `is_k_ordered` only queries canonical sequences (the
//! smallest vertex first, `seq[1] < seq[k-1]`), `(k-1)!/2` per k-set.

mod cycle;
mod hamiltonian;
mod sequence;
mod witness;

use rayon::prelude::*;
use serde::Serialize;

pub use sequence::{canonical_sequences, VertexSequence};
pub use witness::{validate, CycleWitness, WitnessError};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tri-state result of a single search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Realized(CycleWitness),
    /// The search was exhaustive and found nothing.
    Refuted,
    /// The node limit ran out first.
    Inconclusive,
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Realized(_) => "realized",
            Outcome::Refuted => "refuted",
            Outcome::Inconclusive => "inconclusive",
        }
    }

    pub fn witness(&self) -> Option<&CycleWitness> {
        match self {
            Outcome::Realized(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes_expanded: u64,
}

fn search(g: &Graph, seq: &[usize], hamiltonian: bool, node_limit: Option<u64>) -> SearchResult {
    if hamiltonian {
        hamiltonian::HamiltonianSearch::new(g, seq, node_limit).run()
    } else {
        cycle::SegmentSearch::new(g, seq, node_limit).run()
    }
}

fn check_query(g: &Graph, seq: &VertexSequence) -> Result<()> {
    if let Some(&v) = seq.vertices().iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    g.require_connected()
}

/// A cycle of `g` through `seq` in order, or an exhaustive refutation.
pub fn find_cycle_through_in_order(g: &Graph, seq: &VertexSequence, node_limit: Option<u64>) -> Result<SearchResult> {
    check_query(g, seq)?;
    Ok(search(g, seq.vertices(), false, node_limit))
}

/// As [`find_cycle_through_in_order`], but the cycle must be hamiltonian.
pub fn find_hamiltonian_cycle_through_in_order(
    g: &Graph,
    seq: &VertexSequence,
    node_limit: Option<u64>,
) -> Result<SearchResult> {
    check_query(g, seq)?;
    Ok(search(g, seq.vertices(), true, node_limit))
}

/// Exact hamiltonicity test; returns a witness cycle when one exists.
pub fn is_hamiltonian(g: &Graph) -> Result<Option<CycleWitness>> {
    if g.n() < 3 {
        return Err(Error::TooFewVertices { n: g.n(), required: 3 });
    }
    if !g.is_connected() {
        return Ok(None);
    }
    match search(g, &[], true, None).outcome {
        Outcome::Realized(w) => Ok(Some(w)),
        _ => Ok(None),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OrderOptions {
    /// Per-sequence node budget; `None` searches exhaustively.
    pub node_limit: Option<u64>,
    /// Spread sequences over the rayon pool.
    pub parallel: bool,
    /// Keep every realized witness in the verdict.
    pub record_witnesses: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceWitness {
    pub sequence: VertexSequence,
    pub cycle: CycleWitness,
}

/// Verdict of [`is_k_ordered`] or [`is_k_ordered_hamiltonian`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub k: usize,
    pub hamiltonian: bool,
    pub holds: bool,
    /// Lexicographically smallest refuted canonical sequence.
    pub failing_sequence: Option<VertexSequence>,
    /// Canonical sequences examined up to and including the first failure.
    pub sequences_checked: usize,
    pub nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<SequenceWitness>>,
}

const CHUNK: usize = 2048;

fn decide(g: &Graph, k: usize, hamiltonian: bool, opts: OrderOptions) -> Result<OrderVerdict> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    if g.n() < k {
        return Err(Error::TooFewVertices { n: g.n(), required: k });
    }
    g.require_connected()?;

    let sequences = canonical_sequences(g.n(), k);
    let mut verdict = OrderVerdict {
        k,
        hamiltonian,
        holds: true,
        failing_sequence: None,
        sequences_checked: 0,
        nodes_expanded: 0,
        witnesses: opts.record_witnesses.then(Vec::new),
    };
    let run = |s: &VertexSequence| search(g, s.vertices(), hamiltonian, opts.node_limit);
    // chunks are evaluated whole and scanned in order, so the reported
    // failure and the counters do not depend on scheduling
    for chunk in sequences.chunks(CHUNK) {
        let results: Vec<SearchResult> = if opts.parallel {
            chunk.par_iter().map(run).collect()
        } else {
            let mut out = Vec::with_capacity(chunk.len());
            for s in chunk {
                let r = run(s);
                let stop = !matches!(r.outcome, Outcome::Realized(_));
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        };
        for (seq, result) in chunk.iter().zip(results) {
            verdict.sequences_checked += 1;
            verdict.nodes_expanded += result.nodes_expanded;
            match result.outcome {
                Outcome::Realized(cycle) => {
                    if let Some(ws) = verdict.witnesses.as_mut() {
                        ws.push(SequenceWitness {
                            sequence: seq.clone(),
                            cycle,
                        });
                    }
                }
                Outcome::Refuted => {
                    verdict.holds = false;
                    verdict.failing_sequence = Some(seq.clone());
                    return Ok(verdict);
                }
                Outcome::Inconclusive => {
                    return Err(Error::Inconclusive {
                        sequence: seq.vertices().to_vec(),
                        limit: opts.node_limit.unwrap_or(u64::MAX),
                    })
                }
            }
        }
    }
    Ok(verdict)
}

/// Whether every sequence of `k` distinct vertices lies on a cycle in order.
pub fn is_k_ordered(g: &Graph, k: usize, opts: OrderOptions) -> Result<OrderVerdict> {
    decide(g, k, false, opts)
}

/// Whether every sequence of `k` distinct vertices lies on a hamiltonian
/// cycle in order.
pub fn is_k_ordered_hamiltonian(g: &Graph, k: usize, opts: OrderOptions) -> Result<OrderVerdict> {
    decide(g, k, true, opts)
}
