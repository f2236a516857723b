//! `kordered` command line.
//!
//! Exit codes: 0 success, 1 property refuted or claim failed, 2 a search
//! hit the node limit, 64 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use kordered::claims::{exit_code, verify_claims, ClaimOptions, ClaimStatus};
use kordered::enumeration::{census_classify, classify_to_file, enumerate_cubic, write_census, CensusEntry, Flag};
use kordered::families::{letter_vertex, FamilyParams, FAMILY_IDS};
use kordered::orderedness::{
    find_cycle_through_in_order, find_hamiltonian_cycle_through_in_order, is_k_ordered, is_k_ordered_hamiltonian,
    OrderOptions, Outcome, VertexSequence,
};
use kordered::{dot_export, graph6_decode, graph6_encode, Error, FamilySpec, Graph};
use serde_json::{json, Value};

const EX_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "kordered",
    version,
    about = "Decide k-orderedness and k-ordered hamiltonicity of small graphs",
    after_help = "Vertices are 0-based. Sequences also accept single letters, A (or a) = 0, B = 1 and so on, \
                  so Heawood labels A..N and Petersen labels a..j can be used directly.\n\n\
                  Exit codes: 0 ok, 1 refuted or failed, 2 node limit reached, 64 usage error."
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "KORDERED_WORKERS")]
    workers: Option<usize>,

    /// Node budget per search; reaching it makes the result inconclusive.
    #[arg(long, global = true, env = "KORDERED_NODE_LIMIT")]
    node_limit: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as graph6 (or DOT).
    Family {
        /// One of complete, complete-bipartite, petersen, star,
        /// generalized-petersen, heawood, torus.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether a graph is k-ordered (hamiltonian).
    Check {
        #[command(flatten)]
        source: Source,
        /// Sequence length.
        #[arg(long = "k-ordered", value_name = "K")]
        k: usize,
        /// Require hamiltonian cycles.
        #[arg(long)]
        hamiltonian: bool,
        /// Evaluate sequences on all workers.
        #[arg(long)]
        parallel: bool,
        /// Include a wall_time_s field.
        #[arg(long)]
        timing: bool,
    },
    /// Find a cycle through a vertex sequence in order.
    Witness {
        #[command(flatten)]
        source: Source,
        /// Comma-separated ids or letters, e.g. 0,3,7,9 or A,B,C,L.
        #[arg(long)]
        seq: String,
        /// Require a hamiltonian cycle.
        #[arg(long)]
        hamiltonian: bool,
    },
    /// Enumerate connected cubic graphs, optionally classifying them.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
        /// Classify with this sequence length.
        #[arg(long, value_name = "K")]
        classify: Option<usize>,
        /// Write a checksummed JSONL census here (resuming a partial one)
        /// and print a summary instead of the entries.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the registered claim checks.
    VerifyClaims {
        /// Comma-separated claim ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Also write the reports as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Run claims concurrently; report order is unchanged.
        #[arg(long)]
        parallel: bool,
        /// Add per-claim wall time to the table and the JSON.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// File whose first non-empty line is graph6.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family spec such as petersen, torus(3) or generalized-petersen(7,3).
    #[arg(long)]
    family: Option<String>,
}

enum Failure {
    Usage(String),
    Inconclusive(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconclusive { .. } => Failure::Inconclusive(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type RunResult = Result<(String, u8), Failure>;

impl Source {
    fn load(&self) -> Result<Graph, Failure> {
        if let Some(s) = &self.graph6 {
            return Ok(graph6_decode(s.trim())?);
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            return Ok(graph6_decode(line)?);
        }
        let spec: FamilySpec = self.family.as_deref().unwrap_or_default().parse()?;
        Ok(spec.build()?)
    }
}

fn parse_sequence(text: &str, n: usize) -> Result<VertexSequence, Failure> {
    let vertices = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .ok()
                .or_else(|| letter_vertex(t))
                .ok_or_else(|| Failure::Usage(format!("bad vertex {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexSequence::new(vertices, n)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn run(cli: Cli) -> RunResult {
    let node_limit = cli.node_limit;
    match cli.command {
        Command::Family {
            name,
            n,
            k,
            a,
            b,
            m,
            dot,
        } => {
            if !FAMILY_IDS.contains(&name.as_str()) {
                return Err(Failure::Usage(format!(
                    "unknown family {name:?}; expected one of {}",
                    FAMILY_IDS.join(", ")
                )));
            }
            let g = FamilySpec::from_parts(&name, FamilyParams { n, k, a, b, m })?.build()?;
            let out = if dot {
                dot_export(&g, None)
            } else {
                graph6_encode(&g) + "\n"
            };
            Ok((out, 0))
        }
        Command::Check {
            source,
            k,
            hamiltonian,
            parallel,
            timing,
        } => {
            let g = source.load()?;
            let opts = OrderOptions {
                node_limit,
                parallel,
                record_witnesses: false,
            };
            let start = Instant::now();
            let verdict = if hamiltonian {
                is_k_ordered_hamiltonian(&g, k, opts)?
            } else {
                is_k_ordered(&g, k, opts)?
            };
            let mut v = serde_json::to_value(&verdict).expect("verdicts serialize");
            v["graph6"] = json!(graph6_encode(&g));
            if timing {
                v["wall_time_s"] = json!(start.elapsed().as_secs_f64());
            }
            Ok((pretty(&v), if verdict.holds { 0 } else { 1 }))
        }
        Command::Witness {
            source,
            seq,
            hamiltonian,
        } => {
            let g = source.load()?;
            let seq = parse_sequence(&seq, g.n())?;
            let r = if hamiltonian {
                find_hamiltonian_cycle_through_in_order(&g, &seq, node_limit)?
            } else {
                find_cycle_through_in_order(&g, &seq, node_limit)?
            };
            let v = json!({
                "graph6": graph6_encode(&g),
                "sequence": seq.vertices(),
                "hamiltonian": hamiltonian,
                "status": r.outcome.status(),
                "cycle": r.outcome.witness().map(|w| w.vertices()),
                "nodes_expanded": r.nodes_expanded,
            });
            let code = match r.outcome {
                Outcome::Realized(_) => 0,
                Outcome::Refuted => 1,
                Outcome::Inconclusive => 2,
            };
            Ok((pretty(&v), code))
        }
        Command::Enumerate {
            n,
            min_girth,
            classify,
            out,
        } => {
            let entries = enumerate_cubic(n, min_girth)?;
            let entries = match (classify, &out) {
                (Some(k), Some(path)) => classify_to_file(path, &entries, k, node_limit)?,
                (Some(k), None) => census_classify(&entries, k, node_limit)?,
                (None, Some(path)) => {
                    write_census(path, &entries)?;
                    entries
                }
                (None, None) => entries,
            };
            let inconclusive = entries
                .iter()
                .any(|e| [e.hamiltonian, e.k_ordered, e.k_ordered_hamiltonian].contains(&Flag::Inconclusive));
            let code = if inconclusive { 2 } else { 0 };
            let text = match out {
                Some(path) => pretty(&summary(n, min_girth, classify, &entries, &path)),
                None => entries
                    .iter()
                    .map(|e| serde_json::to_string(e).expect("census entries serialize") + "\n")
                    .collect(),
            };
            Ok((text, code))
        }
        Command::VerifyClaims {
            only,
            json,
            parallel,
            timing,
        } => {
            let opts = ClaimOptions {
                node_limit,
                parallel,
                timing,
            };
            let reports = verify_claims(only.as_deref(), &opts)?;
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n";
                fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let mut table = String::new();
            for r in &reports {
                let status = match r.status {
                    ClaimStatus::Pass => "pass",
                    ClaimStatus::Fail => "FAIL",
                    ClaimStatus::Inconclusive => "inconclusive",
                };
                let time = r.wall_time_s.map(|t| format!("{t:8.2}s  ")).unwrap_or_default();
                table += &format!("{:<10} {:<12} {}{}\n", r.id, status, time, r.statement);
            }
            let passed = reports.iter().filter(|r| r.status == ClaimStatus::Pass).count();
            table += &format!("{passed}/{} claims passed\n", reports.len());
            Ok((table, exit_code(&reports) as u8))
        }
    }
}

fn summary(n: usize, min_girth: usize, k: Option<usize>, entries: &[CensusEntry], path: &std::path::Path) -> Value {
    let count = |f: fn(&CensusEntry) -> Flag| entries.iter().filter(|e| f(e) == Flag::True).count();
    let mut v = json!({
        "n": n,
        "min_girth": min_girth,
        "graphs": entries.len(),
        "out": path.display().to_string(),
    });
    if let Some(k) = k {
        v["k"] = json!(k);
        v["hamiltonian"] = json!(count(|e| e.hamiltonian));
        v["k_ordered"] = json!(count(|e| e.k_ordered));
        v["k_ordered_hamiltonian"] = json!(count(|e| e.k_ordered_hamiltonian));
    }
    v
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EX_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EX_USAGE);
        }
    }
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EX_USAGE)
        }
        Err(Failure::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(2)
        }
    }
}
