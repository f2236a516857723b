//! Forbidden subgraphs for 4-ordered hamiltonian graphs.
//!
//! The pattern below is a ten-vertex graph whose six saturated vertices
//! (degree 3 in the pattern and required to stay degree 3 in the host) rule
//! out any hamiltonian cycle meeting `D, E, G, H` in that order. Such a
//! cycle cannot use `DG` or `EH`, so saturation forces `CD, DB, BE, EF, IG,
//! GH, HJ`; then `BA` is unusable, `A` needs `IA` and `AJ`, and
//! `A-I-G-H-J-A` closes early.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::embed::find_embedding;
use crate::error::Result;
use crate::graph::Graph;
use crate::orderedness::{find_hamiltonian_cycle_through_in_order, Outcome, VertexSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternMode {
    /// No hamiltonian cycle of the host meets the tuple's image in order.
    NoHamiltonianCycleThroughTuple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenPattern {
    pub pattern: Graph,
    /// Pattern vertices whose host degree must equal their pattern degree.
    pub saturated: BTreeSet<usize>,
    pub tuple: VertexSequence,
    pub mode: PatternMode,
}

/// Vertices `A..J` are `0..9`.
pub fn forbidden_pattern() -> ForbiddenPattern {
    let [a, b, c, d, e, f, g, h, i, j]: [usize; 10] = std::array::from_fn(|v| v);
    let edges = [
        (a, b),
        (a, i),
        (a, j),
        (b, d),
        (b, e),
        (c, d),
        (d, g),
        (e, f),
        (e, h),
        (g, i),
        (g, h),
        (h, j),
    ];
    ForbiddenPattern {
        pattern: Graph::from_edges(10, &edges).unwrap(),
        saturated: BTreeSet::from([a, b, d, e, g, h]),
        tuple: VertexSequence::new(vec![d, e, g, h], 10).unwrap(),
        mode: PatternMode::NoHamiltonianCycleThroughTuple,
    }
}

/// A connected cubic host on 12 vertices containing the pattern with all
/// saturated degrees kept: new vertices `K = 10` and `L = 11`, edges
/// `K-L, K-C, K-F, L-C, L-F, I-J`.
pub fn forbidden_pattern_completion() -> Graph {
    let p = forbidden_pattern().pattern;
    let mut edges = p.edges();
    edges.extend_from_slice(&[(10, 11), (10, 2), (10, 5), (11, 2), (11, 5), (8, 9)]);
    Graph::from_edges(12, &edges).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ForbiddenVerdict {
    /// No saturated embedding of the pattern exists.
    NotApplicable,
    /// The embedded tuple has no ordered hamiltonian cycle, as predicted.
    Refuted {
        embedding: Vec<usize>,
        tuple: Vec<usize>,
        nodes_expanded: u64,
    },
    /// A hamiltonian cycle through the embedded tuple exists, contradicting
    /// the prediction.
    Violated {
        embedding: Vec<usize>,
        tuple: Vec<usize>,
        cycle: Vec<usize>,
    },
    Inconclusive {
        embedding: Vec<usize>,
        tuple: Vec<usize>,
    },
}

/// Embeds the pattern (first embedding in search order) and searches the
/// host for a hamiltonian cycle through the image of the tuple.
pub fn check_forbidden(host: &Graph, pattern: &ForbiddenPattern, node_limit: Option<u64>) -> Result<ForbiddenVerdict> {
    host.require_connected()?;
    if host.n() < pattern.pattern.n() {
        return Ok(ForbiddenVerdict::NotApplicable);
    }
    let Some(emb) = find_embedding(&pattern.pattern, host, &pattern.saturated) else {
        return Ok(ForbiddenVerdict::NotApplicable);
    };
    let tuple: Vec<usize> = pattern.tuple.vertices().iter().map(|&v| emb.image(v)).collect();
    let seq = VertexSequence::new(tuple.clone(), host.n())?;
    let r = find_hamiltonian_cycle_through_in_order(host, &seq, node_limit)?;
    let embedding = emb.mapping;
    Ok(match r.outcome {
        Outcome::Refuted => ForbiddenVerdict::Refuted {
            embedding,
            tuple,
            nodes_expanded: r.nodes_expanded,
        },
        Outcome::Realized(w) => ForbiddenVerdict::Violated {
            embedding,
            tuple,
            cycle: w.0,
        },
        Outcome::Inconclusive => ForbiddenVerdict::Inconclusive { embedding, tuple },
    })
}
