//! `splitfree` command-line front end.
//!
//! Exit codes: 0 success, 2 domain or parse error, 3 capacity or precision
//! error, 4 verification failure, 64 usage error.

mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use splitfree::constructions::{book, complete_split, g_ij, turan, y_graph};
use splitfree::graph6;
use splitfree::oracles::{chromatic_number, contains_clique, contains_complete_split};
use splitfree::procedure::{classes_without, run_procedure_with};
use splitfree::search::{compute, verify_theorem, Constraint, ExtremalRecord, Objective, SearchSpec, Status, Theorem, TheoremParams};
use splitfree::spectral::{rotate_edges, spectral_radius, verify_rotation_lemma_detailed, RotationSpec, DEFAULT_TOL};
use splitfree::store::{run_resumable, write_csv};
use splitfree::{bits::Bits, Error, Graph};

use crate::input::{parse_classes, parse_edges, parse_list, parse_range, read_graph};

const STORE_ENV: &str = "SPLITFREE_STORE";

#[derive(Parser)]
#[command(name = "splitfree", version, about = "Extremal and spectral checks for graphs without complete split subgraphs")]
struct Cli {
    /// Omit wall-clock fields so identical runs print identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and print it.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Graph6, global = true)]
        format: Format,
    },
    /// Test for a complete split graph B_{p,q} (or a clique with --clique).
    Contains {
        graph: Option<String>,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        /// Look for K_k instead.
        #[arg(long)]
        clique: Option<usize>,
    },
    /// Exact chromatic number with a certifying colouring.
    Chromatic { graph: Option<String> },
    /// Spectral radius with certified error.
    Spectral {
        graph: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Include the Perron vector.
        #[arg(long)]
        perron: bool,
    },
    /// Move edges v-w to u-w for private neighbours w of v.
    Rotate {
        graph: Option<String>,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Comma-separated private neighbours; default is all of them.
        #[arg(long)]
        private: Option<String>,
        /// Also check that the spectral radius strictly increases.
        #[arg(long)]
        check: bool,
    },
    /// Run the class-typed rewiring procedure and print its trace.
    Procedure {
        graph: Option<String>,
        /// Distinguished vertex (default: a minimum-degree vertex).
        #[arg(long)]
        u0: Option<usize>,
        /// Classes as "0,1;2,3" (default: an optimal colouring of G - u0).
        #[arg(long)]
        classes: Option<String>,
        /// Report B_{p,q}-freeness after each step, as "p,q".
        #[arg(long)]
        split: Option<String>,
    },
    /// Brute-force extremal records.
    Search {
        #[arg(value_enum)]
        objective: ObjectiveArg,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Comma-separated subset of split-free, clique-free, non-partite, connected.
        #[arg(long, default_value = "split-free,non-partite")]
        constraints: String,
        /// JSON-lines record store; completed specs are reused.
        #[arg(long, env = STORE_ENV)]
        store: Option<PathBuf>,
        /// Allow n = 11.
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare brute-force results with a classical statement.
    Verify {
        theorem: String,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Part count r (also p for the split theorems).
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Encode an edge list as graph6.
    Encode {
        #[arg(long)]
        n: usize,
        /// Edges as "0-1,1-2".
        #[arg(long, default_value = "")]
        edges: String,
    },
    /// Decode graph6 into an edge list.
    Decode { graph: Option<String> },
}

#[derive(Args)]
struct SweepArgs {
    /// Vertex count or inclusive range "5..9".
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 2)]
    p: usize,
    #[arg(long, default_value_t = 1)]
    q: usize,
}

#[derive(Subcommand)]
enum Family {
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    Split {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    Y {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    Book {
        #[arg(long)]
        t: usize,
    },
    Gij {
        /// Classes as "0,1;2,3"; u0 is the one vertex they leave out.
        #[arg(long)]
        classes: String,
        #[arg(long)]
        u0: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        ui: usize,
        #[arg(long)]
        uj: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Ex,
    Spex,
}

enum Failure {
    Lib(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn emit(out: &mut impl Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string(v).expect("json values serialise"))?;
    Ok(())
}

fn graph_json(g: &Graph) -> Value {
    json!({ "graph6": graph6::encode(g), "n": g.n(), "edges": g.edge_count() })
}

fn construct(family: Family, format: Format, out: &mut impl Write) -> Outcome {
    let (g, extra) = match family {
        Family::Turan { n, r } => {
            let (g, parts) = turan(n, r)?;
            (g, json!({ "parts": lists(parts.classes()) }))
        }
        Family::Split { p, q } => (complete_split(p, q)?, Value::Null),
        Family::Y { n, p } => {
            let (g, spec) = y_graph(n, p)?;
            let extra = json!({
                "parts": lists(spec.parts.classes()),
                "part_sizes": spec.part_sizes,
                "u0": spec.u0, "u1": spec.u1, "u2": spec.u2,
            });
            (g, extra)
        }
        Family::Book { t } => (book(t)?, Value::Null),
        Family::Gij { classes, u0, i, j, ui, uj } => {
            let parts = parse_classes(&classes, None)?;
            (g_ij(&parts, u0, i, j, ui, uj)?, Value::Null)
        }
    };
    match format {
        Format::Graph6 | Format::Text => writeln!(out, "{}", graph6::encode(&g))?,
        Format::Json | Format::Csv => {
            let mut v = graph_json(&g);
            if let Value::Object(m) = extra {
                v.as_object_mut().unwrap().extend(m);
            }
            emit(out, &v)?;
        }
    }
    Ok(())
}

fn lists(classes: &[u64]) -> Vec<Vec<usize>> {
    classes.iter().map(|&c| Bits(c).collect()).collect()
}

fn procedure(graph: Option<String>, u0: Option<usize>, classes: Option<String>, split: Option<String>, out: &mut impl Write) -> Outcome {
    let g = read_graph(graph)?;
    let u0 = match u0 {
        Some(v) => v,
        None => g.min_degree_vertex().ok_or_else(|| Error::Domain("empty graph".into()))?,
    };
    let classes = match classes {
        Some(s) => parse_classes(&s, Some(g.n()))?,
        None => classes_without(&g, u0)?,
    };
    let split = match split {
        Some(s) => match parse_list(&s)?[..] {
            [p, q] => Some((p, q)),
            _ => return Err(Error::Domain("--split expects \"p,q\"".into()).into()),
        },
        None => None,
    };
    let trace = run_procedure_with(&g, u0, classes, split)?;
    let states: Vec<Value> = trace
        .states
        .iter()
        .map(|s| {
            json!({
                "step": s.step,
                "graph6": graph6::encode(&s.graph),
                "edges": s.graph.edge_count(),
                "active": lists(&s.active),
                "labels": s.labels,
            })
        })
        .collect();
    let terminal = trace.terminal();
    let gij = trace.terminal_g_ij()?.map(|t| {
        json!({ "graph6": graph6::encode(&t), "contains_terminal": terminal.graph.is_subgraph_of(&t) })
    });
    emit(
        out,
        &json!({
            "u0": u0,
            "classes": lists(terminal.classes.classes()),
            "steps": trace.steps(),
            "states": states,
            "moves": trace.moves,
            "terminal_g_ij": gij,
        }),
    )
}

fn search(objective: ObjectiveArg, sweep: SweepArgs, constraints: &str, store: Option<PathBuf>, extended: bool, format: Format, no_timing: bool, out: &mut impl Write) -> Outcome {
    let constraints = constraints
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Constraint>, Error>>()?;
    let objective = match objective {
        ObjectiveArg::Ex => Objective::Edges,
        ObjectiveArg::Spex => Objective::Rho,
    };
    let cap = if extended { splitfree::enumerate::MAX_CAP } else { splitfree::enumerate::DEFAULT_CAP };
    let specs = parse_range(&sweep.n)?
        .map(|n| SearchSpec::new(n, sweep.p, sweep.q, &constraints, objective).and_then(|s| s.with_cap(cap)))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut records: Vec<ExtremalRecord> = match store {
        Some(path) => run_resumable(&path, &specs)?,
        None => specs.iter().map(compute).collect::<Result<_, _>>()?,
    };
    if no_timing {
        for r in &mut records {
            r.elapsed_ms = None;
        }
    }
    match format {
        Format::Csv => write_csv(&records, &mut *out)?,
        Format::Text => {
            for r in &records {
                writeln!(out, "{}\t{:?}\t{} witness(es)", r.spec.key(), r.best_value, r.witnesses.len())?;
            }
        }
        Format::Json | Format::Graph6 => {
            for r in &records {
                emit(out, &serde_json::to_value(r).expect("records serialise"))?;
            }
        }
    }
    Ok(())
}

fn verify(theorem: &str, sweep: SweepArgs, r: usize, format: Format, out: &mut impl Write) -> Outcome {
    let theorem: Theorem = theorem.parse()?;
    let report = verify_theorem(theorem, parse_range(&sweep.n)?, TheoremParams { r, q: sweep.q })?;
    match format {
        Format::Text | Format::Csv | Format::Graph6 => {
            for row in &report.rows {
                writeln!(
                    out,
                    "{} n={} {} expected={} found={} {}",
                    report.theorem,
                    row.n,
                    row.status,
                    row.expected.as_deref().unwrap_or("-"),
                    row.found.as_deref().unwrap_or("-"),
                    row.detail
                )?;
            }
        }
        Format::Json => {
            for row in &report.rows {
                let mut v = serde_json::to_value(row).expect("rows serialise");
                v["theorem"] = json!(report.theorem);
                v["params"] = json!(report.params);
                emit(out, &v)?;
            }
        }
    }
    if report.rows.iter().any(|r| r.status == Status::Fail) {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Construct { family, format } => construct(family, format, out),
        Command::Contains { graph, p, q, clique } => {
            let g = read_graph(graph)?;
            let v = match clique {
                Some(k) => {
                    let w = contains_clique(&g, k)?;
                    json!({ "clique": k, "contains": w.is_some(), "witness": w })
                }
                None => {
                    let w = contains_complete_split(&g, p, q)?;
                    json!({ "p": p, "q": q, "contains": w.is_some(), "witness": w })
                }
            };
            emit(out, &v)
        }
        Command::Chromatic { graph } => {
            let c = chromatic_number(&read_graph(graph)?)?;
            emit(out, &json!(c))
        }
        Command::Spectral { graph, tol, perron } => {
            let g = read_graph(graph)?;
            let r = spectral_radius(&g, tol)?;
            let mut v = json!({ "rho": r.rho, "err": r.err, "iterations": r.iterations });
            if perron {
                v["perron"] = json!(r.perron);
            }
            emit(out, &v)
        }
        Command::Rotate { graph, u, v, private, check } => {
            let g = read_graph(graph)?;
            let private_neighbors = match private {
                Some(s) => parse_list(&s)?,
                None if u < g.n() && v < g.n() && u != v => Bits(g.neighbors(v) & !g.neighbors(u) & !(1u64 << u)).collect(),
                None => Vec::new(),
            };
            let spec = RotationSpec { u, v, private_neighbors };
            let h = rotate_edges(&g, &spec)?;
            let mut res = json!({ "graph6": graph6::encode(&h), "moved": spec.private_neighbors });
            let mut failed = false;
            if check {
                let verdict = verify_rotation_lemma_detailed(&g, &spec)?;
                failed = !verdict.increased;
                res["verdict"] = json!(verdict);
            }
            emit(out, &res)?;
            if failed {
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::Procedure { graph, u0, classes, split } => procedure(graph, u0, classes, split, out),
        Command::Search {
            objective,
            sweep,
            constraints,
            store,
            extended,
            format,
        } => search(objective, sweep, &constraints, store, extended, format, cli.no_timing, out),
        Command::Verify { theorem, sweep, r, format } => verify(&theorem, sweep, r, format, out),
        Command::Encode { n, edges } => {
            let g = Graph::from_edges(n, parse_edges(&edges)?)?;
            writeln!(out, "{}", graph6::encode(&g))?;
            Ok(())
        }
        Command::Decode { graph } => {
            let g = read_graph(graph)?;
            let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a, b]).collect();
            emit(out, &json!({ "n": g.n(), "edge_count": g.edge_count(), "edges": edges }))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Parse { .. } | Error::Io(_) => 2,
        Error::Capacity { .. } | Error::Precision { .. } | Error::Undecidable(_) | Error::Indeterminate(_) => 3,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(64) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(64);
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(4)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
