//! Hamiltonian cycles of the Heawood graph, each quoted together with the
//! query tuples it is meant to realize.
//!
//! Labels `A..N` are vertices `0..13` of [`crate::families::heawood`]. A
//! tuple template has at most one `*`, the free vertex; [`Free`] says which
//! vertices it ranges over (never one already in the tuple).

use serde::Serialize;

use crate::families::letter_vertex;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Free {
    /// No free vertex.
    None,
    /// Any vertex except these.
    Except(&'static str),
    /// Only these.
    Only(&'static str),
    /// Any vertex not adjacent to the tuple's fixed vertices, except these.
    NonAdjacentExcept(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeawoodFixture {
    pub tuple: &'static str,
    pub free: Free,
    pub cycle: &'static str,
}

const fn fx(tuple: &'static str, free: Free, cycle: &'static str) -> HeawoodFixture {
    HeawoodFixture { tuple, free, cycle }
}

/// Every quoted (tuple family, cycle) pair, in quotation order. Several
/// cycles are quoted more than once.
pub const HEAWOOD_FIXTURES: [HeawoodFixture; 25] = [
    fx("ABC*", Free::Except(""), "A-B-C-D-E-F-G-H-I-J-K-L-M-N-A"),
    fx("ABD*", Free::Except("C"), "A-B-C-D-E-F-G-H-I-J-K-L-M-N-A"),
    fx("ABDC", Free::None, "A-B-G-H-I-J-K-F-E-D-C-L-M-N-A"),
    fx("ABN*", Free::Except("CML"), "A-B-C-L-M-N-E-D-I-H-G-F-K-J-A"),
    fx("ABN*", Free::Only("CML"), "A-B-G-F-E-N-M-H-I-D-C-L-K-J-A"),
    fx("ABE*", Free::Except("FGHIJK"), "A-B-G-H-I-J-K-F-E-D-C-L-M-N-A"),
    fx("ABE*", Free::Only("FGHIJK"), "A-B-C-D-E-F-G-H-I-J-K-L-M-N-A"),
    fx("A*BC", Free::Only("DEFGHIJK"), "A-J-K-F-E-D-I-H-G-B-C-L-M-N-A"),
    fx("ANBC", Free::None, "A-N-E-F-K-L-M-H-G-B-C-D-I-J-A"),
    fx("ACBD", Free::None, "A-J-K-L-C-B-G-F-E-D-I-H-M-N-A"),
    fx("A*BD", Free::Except("CIJ"), "A-N-E-F-K-L-M-H-G-B-C-D-I-J-A"),
    fx("A*BD", Free::Only("IJ"), "A-J-I-H-M-L-K-F-G-B-C-D-E-N-A"),
    fx("A*BN", Free::Except("EFG"), "A-J-K-L-M-H-I-D-C-B-G-F-E-N-A"),
    fx("A*BN", Free::Only("EFG"), "A-J-K-F-E-D-I-H-G-B-C-L-M-N-A"),
    fx("B*AD", Free::Only("CLMN"), "B-C-L-M-N-A-J-K-F-E-D-I-H-G-B"),
    fx("B*AD", Free::Only("FGJK"), "B-G-F-K-J-A-N-E-D-I-H-M-L-C-B"),
    fx("B*AD", Free::Only("HI"), "B-G-H-I-J-A-N-M-L-K-F-E-D-C-B"),
    fx("BD*N", Free::NonAdjacentExcept(""), "B-C-D-E-F-G-H-I-J-K-L-M-N-A-B"),
    fx("BD*L", Free::NonAdjacentExcept("N"), "B-C-D-E-F-G-H-I-J-K-L-M-N-A-B"),
    fx("BDNL", Free::None, "B-G-F-E-D-I-H-M-N-A-J-K-L-C-B"),
    fx("BDNK", Free::None, "B-C-D-E-N-M-L-K-F-G-H-I-J-A-B"),
    fx("BDMK", Free::None, "B-C-D-E-N-M-L-K-F-G-H-I-J-A-B"),
    fx("BDKM", Free::None, "B-C-D-E-F-G-H-I-J-K-L-M-N-A-B"),
    fx("BKDM", Free::None, "B-A-J-K-F-G-H-I-D-E-N-M-L-C-B"),
    fx("BMDK", Free::None, "B-A-N-M-H-G-F-E-D-I-J-K-L-C-B"),
];

fn letters(s: &str) -> Vec<usize> {
    s.chars()
        .map(|c| letter_vertex(&c.to_string()).expect("fixture labels are letters"))
        .collect()
}

impl HeawoodFixture {
    /// The quoted cycle without its repeated closing vertex.
    pub fn cycle_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycle.split('-').flat_map(letters).collect();
        v.pop();
        v
    }

    /// Every concrete tuple the fixture covers.
    pub fn tuples(&self, g: &Graph) -> Vec<Vec<usize>> {
        let template: Vec<Option<usize>> = self
            .tuple
            .chars()
            .map(|c| (c != '*').then(|| letters(&c.to_string())[0]))
            .collect();
        let fixed: Vec<usize> = template.iter().flatten().copied().collect();
        let Some(slot) = template.iter().position(Option::is_none) else {
            return vec![fixed];
        };
        let allowed = |x: usize| match self.free {
            Free::None => false,
            Free::Except(s) => !letters(s).contains(&x),
            Free::Only(s) => letters(s).contains(&x),
            Free::NonAdjacentExcept(s) => !letters(s).contains(&x) && fixed.iter().all(|&f| !g.has_edge(f, x)),
        };
        (0..g.n())
            .filter(|x| !fixed.contains(x) && allowed(*x))
            .map(|x| {
                let mut t = fixed.clone();
                t.insert(slot, x);
                t
            })
            .collect()
    }
}

/// Least rotation of a cycle as written. Two quoted cycles are one
/// traversal in opposite directions, so the 14 rotation classes cover 13
/// edge sets.
pub fn rotation_class(cycle: &[usize]) -> Vec<usize> {
    (0..cycle.len())
        .map(|r| {
            let mut c = cycle.to_vec();
            c.rotate_left(r);
            c
        })
        .min()
        .unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureFailure {
    pub cycle: String,
    pub tuple: Vec<usize>,
    pub reason: String,
}
