//! Deterministic constructors with fixed labelings.
//!
//! Labels are 0-based throughout. Star-graph and generalized-Petersen
//! indices that are conventionally written from 1 are shifted down by one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Petersen,
    Star { n: usize, k: usize },
    GeneralizedPetersen { n: usize, k: usize },
    Heawood,
    Torus { m: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilySpec::Complete { n } if n < 1 => bad("complete: n must be at least 1".into()),
            FamilySpec::CompleteBipartite { a, b } if a < 1 || b < 1 => {
                bad("complete-bipartite: a and b must be at least 1".into())
            }
            FamilySpec::Star { n, k } if n < 3 || k < 1 || k >= n => {
                bad(format!("star: need n >= 3 and 1 <= k < n, got n={n} k={k}"))
            }
            FamilySpec::GeneralizedPetersen { n, k } if n < 5 || k < 1 || k > (n - 1) / 2 => bad(format!(
                "generalized-petersen: need n >= 5 and 1 <= k <= (n-1)/2, got n={n} k={k}"
            )),
            FamilySpec::Torus { m } if m < 2 => bad(format!("torus: need m >= 2, got m={m}")),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Star { n, k } => star_graph(n, k),
            FamilySpec::GeneralizedPetersen { n, k } => generalized_petersen(n, k),
            FamilySpec::Heawood => Ok(heawood()),
            FamilySpec::Torus { m } => torus_graph(m),
        }
    }

    /// The family id as used on the command line.
    pub fn family_id(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Star { .. } => "star",
            FamilySpec::GeneralizedPetersen { .. } => "generalized-petersen",
            FamilySpec::Heawood => "heawood",
            FamilySpec::Torus { .. } => "torus",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete-bipartite({a},{b})"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Star { n, k } => write!(f, "star({n},{k})"),
            FamilySpec::GeneralizedPetersen { n, k } => write!(f, "generalized-petersen({n},{k})"),
            FamilySpec::Heawood => write!(f, "heawood"),
            FamilySpec::Torus { m } => write!(f, "torus({m})"),
        }
    }
}

/// Family ids accepted by [`FamilySpec::from_parts`].
pub const FAMILY_IDS: [&str; 7] = [
    "complete",
    "complete-bipartite",
    "petersen",
    "star",
    "generalized-petersen",
    "heawood",
    "torus",
];

/// Parameters that may accompany a family id.
#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub m: Option<usize>,
}

impl FamilySpec {
    /// Assembles and validates a spec from an id plus loose parameters.
    pub fn from_parts(id: &str, p: FamilyParams) -> Result<FamilySpec> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidParameter(format!("{id}: missing parameter {name}")))
        };
        let spec = match id {
            "complete" => FamilySpec::Complete { n: need(p.n, "n")? },
            "complete-bipartite" => FamilySpec::CompleteBipartite {
                a: need(p.a, "a")?,
                b: need(p.b, "b")?,
            },
            "petersen" => FamilySpec::Petersen,
            "star" => FamilySpec::Star {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            "generalized-petersen" => FamilySpec::GeneralizedPetersen {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            "heawood" => FamilySpec::Heawood,
            "torus" => FamilySpec::Torus { m: need(p.m, "m")? },
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other:?}; expected one of {}",
                    FAMILY_IDS.join(", ")
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `petersen`, `heawood`, `complete(4)`, `torus(3)`,
    /// `generalized-petersen(7,3)` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (id, args) = match s.find('(') {
            Some(open) if s.ends_with(')') => (&s[..open], &s[open + 1..s.len() - 1]),
            Some(_) => return Err(Error::InvalidParameter(format!("malformed family {s:?}"))),
            None => (s, ""),
        };
        let nums = args
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad family parameter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let at = |i: usize| nums.get(i).copied();
        let params = match id {
            "complete-bipartite" => FamilyParams {
                a: at(0),
                b: at(1),
                ..Default::default()
            },
            "torus" => FamilyParams {
                m: at(0),
                ..Default::default()
            },
            _ => FamilyParams {
                n: at(0),
                k: at(1),
                ..Default::default()
            },
        };
        FamilySpec::from_parts(id, params)
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    FamilySpec::Complete { n }.validate()?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges)
}

/// Classes `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    FamilySpec::CompleteBipartite { a, b }.validate()?;
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges(a + b, &edges)
}

/// Edges `{i, i+k mod n}`; when `2k = n` each edge is produced twice and
/// collapses, giving a perfect matching.
pub fn star_graph(n: usize, k: usize) -> Result<Graph> {
    FamilySpec::Star { n, k }.validate()?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + k) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Outer cycle on `0..n`, inner `star_graph(n, k)` on `n..2n`, spokes `i ~ n+i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    FamilySpec::GeneralizedPetersen { n, k }.validate()?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + k) % n));
        edges.push((i, n + i));
    }
    Graph::from_edges(2 * n, &edges)
}

/// Vertex id of a single-letter label, counting from `A` (or `a`) as 0.
/// Petersen is usually labeled `a..j` and Heawood `A..N`.
pub fn letter_vertex(label: &str) -> Option<usize> {
    let mut chars = label.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_uppercase() => Some(c as usize - 'A' as usize),
        (Some(c), None) if c.is_ascii_lowercase() => Some(c as usize - 'a' as usize),
        _ => None,
    }
}

/// Uppercase letter for `v < 26`.
pub fn vertex_letter(v: usize) -> Option<char> {
    (v < 26).then(|| (b'A' + v as u8) as char)
}

/// Labels `a..j` map to `0..9`: outer cycle 0-1-2-3-4, spokes `i ~ i+5`,
/// inner cycle 5-7-9-6-8.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Chords of [`heawood`] besides the hamiltonian cycle `0-1-...-13`.
pub const HEAWOOD_CHORDS: [(usize, usize); 7] = [(0, 9), (1, 6), (2, 11), (3, 8), (4, 13), (5, 10), (7, 12)];

/// Labels `A..N` map to `0..13`; the 14-cycle in label order plus
/// [`HEAWOOD_CHORDS`].
pub fn heawood() -> Graph {
    let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend_from_slice(&HEAWOOD_CHORDS);
    Graph::from_edges(14, &edges).unwrap()
}

/// Honeycomb on the torus with three horizontal lines of `2m` vertices.
///
/// Vertex `(r, c)` has id `2m*r + c`. Each line is a cycle; verticals are
/// `(0,c)-(1,c)` for even `c`, `(1,c)-(2,c)` for odd `c` and
/// `(2,c)-(0,c+1)` for even `c`, so every vertex carries exactly one.
pub fn torus_graph(m: usize) -> Result<Graph> {
    FamilySpec::Torus { m }.validate()?;
    let width = 2 * m;
    let id = |r: usize, c: usize| width * r + c % width;
    let mut edges = Vec::with_capacity(9 * m);
    for r in 0..3 {
        for c in 0..width {
            edges.push((id(r, c), id(r, c + 1)));
        }
    }
    for c in 0..width {
        if c % 2 == 0 {
            edges.push((id(0, c), id(1, c)));
            edges.push((id(2, c), id(0, c + 1)));
        } else {
            edges.push((id(1, c), id(2, c)));
        }
    }
    Graph::from_edges(3 * width, &edges)
}

/// Row and column of a torus-graph vertex.
pub fn torus_coordinates(m: usize, v: usize) -> (usize, usize) {
    (v / (2 * m), v % (2 * m))
}

/// Point-line incidence graph of the Fano plane: points `0..7`, lines
/// `7..14`, line `i` holding points `{i, i+1, i+3} mod 7`.
pub fn fano_incidence() -> Graph {
    let mut edges = Vec::with_capacity(21);
    for line in 0..7 {
        for offset in [0, 1, 3] {
            edges.push(((line + offset) % 7, 7 + line));
        }
    }
    Graph::from_edges(14, &edges).unwrap()
}
