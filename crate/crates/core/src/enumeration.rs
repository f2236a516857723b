//! Connected cubic graphs up to isomorphism, and the census built on them.
//!
//! Generation grows a graph in BFS order: vertex `i` is completed to
//! degree 3 by joining it to open vertices with larger labels and to
//! freshly created ones. Every labeled output is connected by
//! construction; isomorphic copies are removed by canonical form and the
//! result is sorted by it, so the output does not depend on search order.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{graph6_decode, graph6_encode};
use crate::orderedness::{is_hamiltonian, is_k_ordered, is_k_ordered_hamiltonian, OrderOptions};

pub const MAX_CUBIC_ORDER: usize = 16;

struct Generator {
    n: usize,
    min_girth: usize,
    adj: Vec<Vec<usize>>,
    created: usize,
    found: BTreeSet<CanonicalForm>,
}

impl Generator {
    /// Whether `u` and `v` are within `d` steps of each other.
    fn within(&self, u: usize, v: usize, d: usize) -> bool {
        let mut frontier = vec![u];
        let mut seen = vec![false; self.n];
        seen[u] = true;
        for _ in 0..d {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if y == v {
                        return true;
                    }
                    if !seen[y] {
                        seen[y] = true;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    fn run(&mut self, i: usize) {
        if i == self.n {
            let edges: Vec<(usize, usize)> = (0..self.n)
                .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
                .collect();
            let g = Graph::from_edges(self.n, &edges).expect("generator keeps graphs simple");
            self.found.insert(canonical_form(&g));
            return;
        }
        if i >= self.created {
            // the component closed before reaching n vertices
            return;
        }
        let deficit = 3 - self.adj[i].len();
        if deficit == 0 {
            self.run(i + 1);
            return;
        }
        let open: Vec<usize> = (i + 1..self.created)
            .filter(|&j| self.adj[j].len() < 3 && !self.adj[i].contains(&j))
            .collect();
        let max_new = deficit.min(self.n - self.created);
        for fresh in 0..=max_new {
            self.choose(i, &open, 0, deficit - fresh, fresh);
        }
    }

    /// Joins `i` to `need` more vertices of `open[from..]`, then to `fresh`
    /// new vertices.
    fn choose(&mut self, i: usize, open: &[usize], from: usize, need: usize, fresh: usize) {
        if need == 0 {
            let first = self.created;
            for v in first..first + fresh {
                self.adj[i].push(v);
                self.adj[v].push(i);
            }
            self.created += fresh;
            self.run(i + 1);
            self.created -= fresh;
            for v in first..first + fresh {
                self.adj[i].pop();
                self.adj[v].pop();
            }
            return;
        }
        for idx in from..open.len() {
            if open.len() - idx < need {
                break;
            }
            let j = open[idx];
            // a new edge ij closes a cycle of length dist(i, j) + 1
            if self.min_girth > 3 && self.within(i, j, self.min_girth - 2) {
                continue;
            }
            self.adj[i].push(j);
            self.adj[j].push(i);
            self.choose(i, open, idx + 1, need - 1, fresh);
            self.adj[i].pop();
            self.adj[j].pop();
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n % 2 == 1 || !(4..=MAX_CUBIC_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "cubic graphs need an even order in 4..={MAX_CUBIC_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Connected 3-regular graphs on `n` vertices with girth at least
/// `min_girth`, one per isomorphism class, canonically labeled and sorted
/// by canonical form.
pub fn cubic_graphs(n: usize, min_girth: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut gen = Generator {
        n,
        min_girth,
        adj: vec![Vec::with_capacity(3); n],
        created: 1,
        found: BTreeSet::new(),
    };
    gen.run(0);
    Ok(gen.found.iter().map(CanonicalForm::to_graph).collect())
}

/// Tri-state property flag; `Inconclusive` records an exhausted node
/// budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    True,
    False,
    Unchecked,
    Inconclusive,
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::True
        } else {
            Flag::False
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    /// graph6 of the canonically labeled graph.
    pub graph6: String,
    pub n: usize,
    pub girth: Option<usize>,
    /// Sequence length used for the two orderedness flags.
    pub k: Option<usize>,
    pub hamiltonian: Flag,
    pub k_ordered: Flag,
    pub k_ordered_hamiltonian: Flag,
}

impl CensusEntry {
    pub fn new(g: &Graph) -> Self {
        CensusEntry {
            graph6: graph6_encode(g),
            n: g.n(),
            girth: g.girth(),
            k: None,
            hamiltonian: Flag::Unchecked,
            k_ordered: Flag::Unchecked,
            k_ordered_hamiltonian: Flag::Unchecked,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        graph6_decode(&self.graph6)
    }
}

/// [`cubic_graphs`] wrapped as unclassified census entries.
pub fn enumerate_cubic(n: usize, min_girth: usize) -> Result<Vec<CensusEntry>> {
    Ok(cubic_graphs(n, min_girth)?.iter().map(CensusEntry::new).collect())
}

fn order_flag(r: Result<bool>) -> Result<Flag> {
    match r {
        Ok(b) => Ok(b.into()),
        Err(Error::Inconclusive { .. }) => Ok(Flag::Inconclusive),
        Err(e) => Err(e),
    }
}

/// Fills the three flags of one entry.
pub fn classify_entry(entry: &CensusEntry, k: usize, node_limit: Option<u64>) -> Result<CensusEntry> {
    let g = entry.graph()?;
    let opts = OrderOptions {
        node_limit,
        ..Default::default()
    };
    let hamiltonian = is_hamiltonian(&g)?.is_some();
    let k_ordered = order_flag(is_k_ordered(&g, k, opts).map(|v| v.holds))?;
    let k_ordered_hamiltonian = if hamiltonian {
        order_flag(is_k_ordered_hamiltonian(&g, k, opts).map(|v| v.holds))?
    } else {
        Flag::False
    };
    Ok(CensusEntry {
        k: Some(k),
        hamiltonian: hamiltonian.into(),
        k_ordered,
        k_ordered_hamiltonian,
        ..entry.clone()
    })
}

/// Classifies every entry, in parallel across entries; output order
/// matches input order.
pub fn census_classify(entries: &[CensusEntry], k: usize, node_limit: Option<u64>) -> Result<Vec<CensusEntry>> {
    entries.par_iter().map(|e| classify_entry(e, k, node_limit)).collect()
}

// serialized with `sha256` first, which is how readers recognize it
#[derive(Serialize, Deserialize)]
struct Trailer {
    sha256: String,
    entries: usize,
}

/// Contents of a census file. `complete` is false when the checksum
/// trailer is missing, i.e. the writer stopped early.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusFile {
    pub entries: Vec<CensusEntry>,
    pub complete: bool,
}

/// Reads a census file. A truncated last line is dropped; a trailer whose
/// digest does not match the preceding bytes is an error.
pub fn read_census(path: &Path) -> Result<CensusFile> {
    let reader = BufReader::new(File::open(path)?);
    let mut entries = Vec::new();
    let mut hasher = Sha256::new();
    let mut lines = reader.split(b'\n').peekable();
    while let Some(line) = lines.next() {
        let line = line?;
        let terminated = lines.peek().is_some();
        if line.starts_with(b"{\"sha256\"") {
            let trailer: Trailer =
                serde_json::from_slice(&line).map_err(|e| Error::Census(format!("bad trailer: {e}")))?;
            let digest = hex::encode(hasher.finalize());
            if trailer.sha256 != digest || trailer.entries != entries.len() {
                return Err(Error::Census(format!("checksum mismatch in {}", path.display())));
            }
            return Ok(CensusFile {
                entries,
                complete: true,
            });
        }
        match (serde_json::from_slice::<CensusEntry>(&line), terminated) {
            (Ok(e), true) => {
                hasher.update(&line);
                hasher.update(b"\n");
                entries.push(e);
            }
            // a partial trailing record is what an interrupted writer leaves
            (_, false) => break,
            (Err(e), true) => return Err(Error::Census(format!("line {}: {e}", entries.len() + 1))),
        }
    }
    Ok(CensusFile {
        entries,
        complete: false,
    })
}

fn entry_line(e: &CensusEntry) -> Vec<u8> {
    let mut line = serde_json::to_vec(e).expect("census entries serialize");
    line.push(b'\n');
    line
}

fn trailer_line(hasher: Sha256, entries: usize) -> Vec<u8> {
    let trailer = Trailer {
        sha256: hex::encode(hasher.finalize()),
        entries,
    };
    let mut line = serde_json::to_vec(&trailer).expect("trailer serializes");
    line.push(b'\n');
    line
}

/// Writes `entries` followed by the checksum trailer, replacing `path`.
pub fn write_census(path: &Path, entries: &[CensusEntry]) -> Result<()> {
    let mut file = File::create(path)?;
    let mut hasher = Sha256::new();
    for e in entries {
        let line = entry_line(e);
        hasher.update(&line);
        file.write_all(&line)?;
    }
    file.write_all(&trailer_line(hasher, entries.len()))?;
    file.sync_all()?;
    Ok(())
}

/// Classifies `entries` into `path`, resuming from a partial file left by
/// an earlier run. Records already on disk must be a prefix of `entries`
/// (same graphs, same `k`); they are kept, not recomputed. Each batch is
/// appended as soon as it is classified.
pub fn classify_to_file(
    path: &Path,
    entries: &[CensusEntry],
    k: usize,
    node_limit: Option<u64>,
) -> Result<Vec<CensusEntry>> {
    let mut done = if path.exists() {
        let existing = read_census(path)?;
        let prefix_ok = existing.entries.len() <= entries.len()
            && existing
                .entries
                .iter()
                .zip(entries)
                .all(|(a, b)| a.graph6 == b.graph6 && a.k == Some(k));
        if !prefix_ok {
            return Err(Error::Census(format!(
                "{} holds a different census; remove it to start over",
                path.display()
            )));
        }
        if existing.complete && existing.entries.len() == entries.len() {
            return Ok(existing.entries);
        }
        existing.entries
    } else {
        Vec::new()
    };

    // rewrite the valid prefix so a torn final line disappears
    let mut hasher = Sha256::new();
    let mut file = File::create(path)?;
    for e in &done {
        let line = entry_line(e);
        hasher.update(&line);
        file.write_all(&line)?;
    }
    drop(file);
    let mut file = OpenOptions::new().append(true).open(path)?;
    let batch = rayon::current_num_threads().max(1) * 4;
    while done.len() < entries.len() {
        let end = (done.len() + batch).min(entries.len());
        let classified = census_classify(&entries[done.len()..end], k, node_limit)?;
        for e in classified {
            let line = entry_line(&e);
            hasher.update(&line);
            file.write_all(&line)?;
            done.push(e);
        }
        file.flush()?;
    }
    file.write_all(&trailer_line(hasher, done.len()))?;
    file.sync_all()?;
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families;

    fn count(n: usize, g: usize) -> usize {
        cubic_graphs(n, g).unwrap().len()
    }

    #[test]
    fn known_counts() {
        assert_eq!(count(4, 3), 1);
        assert_eq!(count(6, 3), 2);
        assert_eq!(count(6, 4), 1);
        assert_eq!(count(8, 3), 5);
        assert_eq!(count(10, 3), 19);
        assert_eq!(count(10, 5), 1);
        assert_eq!(count(12, 5), 2);
        assert_eq!(count(14, 6), 1);
    }

    #[test]
    fn small_representatives() {
        let k4 = cubic_graphs(4, 3).unwrap();
        assert!(is_isomorphic(&k4[0], &families::complete(4).unwrap()));
        let k33 = cubic_graphs(6, 4).unwrap();
        assert!(is_isomorphic(&k33[0], &families::complete_bipartite(3, 3).unwrap()));
        let p = cubic_graphs(10, 5).unwrap();
        assert!(is_isomorphic(&p[0], &families::petersen()));
        let h = cubic_graphs(14, 6).unwrap();
        assert!(is_isomorphic(&h[0], &families::heawood()));
    }

    #[test]
    fn bad_orders() {
        assert!(cubic_graphs(7, 3).is_err());
        assert!(cubic_graphs(2, 3).is_err());
        assert!(cubic_graphs(18, 3).is_err());
    }

    #[test]
    fn classify_small() {
        let entries = census_classify(&enumerate_cubic(10, 5).unwrap(), 4, None).unwrap();
        assert_eq!(entries[0].hamiltonian, Flag::False);
        assert_eq!(entries[0].k_ordered, Flag::True);
        assert_eq!(entries[0].k_ordered_hamiltonian, Flag::False);
        let limited = classify_entry(&CensusEntry::new(&families::petersen()), 4, Some(1)).unwrap();
        assert_eq!(limited.k_ordered, Flag::Inconclusive);
    }

    #[test]
    fn flag_serialization() {
        assert_eq!(serde_json::to_string(&Flag::Unchecked).unwrap(), "\"unchecked\"");
        assert_eq!(serde_json::to_string(&Flag::True).unwrap(), "\"true\"");
    }
}
