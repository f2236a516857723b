//! Decide k-orderedness and k-ordered hamiltonicity of small graphs.
//!
//! A graph is *k-ordered* (resp. *k-ordered hamiltonian*) when every
//! sequence of `k` distinct vertices lies on some cycle (resp. hamiltonian
//! cycle) in that cyclic order. This crate provides:
//!
//! - [`Graph`] with metric and structural queries, canonical forms,
//!   subgraph embeddings and graph6/DOT I/O;
//! - constructors for the graph families in [`families`];
//! - the exhaustive searches in [`orderedness`];
//! - automorphism groups, route transitivity and cycle orbits in
//!   [`symmetry`];
//! - cubic graph enumeration in [`enumeration`];
//! - a registry of mechanically checked statements in [`claims`].

pub mod bits;
pub mod canon;
pub mod claims;
pub mod connectivity;
pub mod embed;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod orderedness;
pub mod symmetry;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use connectivity::vertex_connectivity;
pub use embed::{find_embedding, Embedding};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Diameter, Graph};
pub use io::{dot_export, graph6_decode, graph6_encode};
