use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tvs_core::bounds::bound_report;
use tvs_core::constructors::construct;
use tvs_core::families::{generate, parse_lengths, FamilySpec};
use tvs_core::graph::Graph;
use tvs_core::io::{
    emit_dot, emit_edge_list, parse_edge_list, parse_labeling_document, IoError, LabelingDocument,
};
use tvs_core::labeling::{verify, weight_profile, Label};
use tvs_core::oracle::{exact_tvs, OracleStatus, SearchBudget, DEFAULT_MAX_NODES};
use tvs_core::sweep::{format_table, run_sweep, sweep_specs};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Total vertex irregular labelings of graph families.
#[derive(Parser)]
#[command(name = "tvs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family graph as an edge list.
    Gen(FamilyArgs),
    /// Print the constructed optimal labeling of a family graph.
    Label {
        #[command(flatten)]
        family: FamilyArgs,
        /// Emit Graphviz instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Check a labeling document against an edge list.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Print the classical and degree-counting lower bounds.
    Bound {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Compute the exact strength by exhaustive search.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: u64,
        /// Largest label to try; defaults to the vertex count.
        #[arg(long)]
        max_k: Option<Label>,
    },
    /// Construct and check a range of family instances.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// One of cycle, path, prism, wheel, helm, friendship, complete,
    /// complete-bipartite, two-regular.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated cycle lengths, for two-regular.
    #[arg(long)]
    lengths: Option<String>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        let spec = if self.family == "two-regular" {
            let lengths = self
                .lengths
                .as_deref()
                .ok_or_else(|| Failure::usage("two-regular needs --lengths a,b,c"))?;
            FamilySpec::TwoRegular(parse_lengths(lengths).map_err(Failure::usage)?)
        } else {
            let n = self
                .n
                .ok_or_else(|| Failure::usage(format!("{} needs --n", self.family)))?;
            FamilySpec::from_name(&self.family, n).map_err(Failure::usage)?
        };
        spec.validate().map_err(Failure::usage)?;
        Ok(spec)
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn failed(message: impl ToString) -> Self {
        Self {
            code: EXIT_FAILED,
            message: message.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn usage_io(e: IoError) -> Failure {
    Failure::usage(e)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(args) => {
            let (g, _) = generate(&args.spec()?).map_err(Failure::usage)?;
            print!("{}", emit_edge_list(&g));
        }
        Command::Label { family, dot } => {
            let spec = family.spec()?;
            let cert = construct(&spec).map_err(Failure::failed)?;
            if dot {
                let (_, order) = generate(&spec).map_err(Failure::usage)?;
                print!(
                    "{}",
                    emit_dot(&cert.graph, &cert.labeling, Some(&order)).map_err(usage_io)?
                );
            } else {
                print!(
                    "{}",
                    LabelingDocument::from_certificate(&cert)
                        .map_err(usage_io)?
                        .to_text()
                );
            }
        }
        Command::Verify { graph, labeling } => {
            let g = read_graph(&graph)?;
            let doc = parse_labeling_document(&read(&labeling)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", labeling.display())))?;
            let lab = doc.to_labeling(&g).map_err(usage_io)?;
            let report = verify(&g, &lab).map_err(Failure::usage)?;
            let weights = weight_profile(&g, &lab).map_err(Failure::usage)?.weights;
            println!("irregular: {}", report.is_irregular);
            println!("max_label_used: {}", report.max_label_used);
            if let Some((lo, hi)) = report.weight_range {
                println!("weight_range: {lo}..={hi}");
            }
            if let Some((u, v)) = report.duplicate_weight_witness {
                println!("duplicate_weight: vertices {u} and {v}");
            }
            let stored_ok = doc.weights == weights && doc.is_irregular == report.is_irregular;
            if !stored_ok {
                println!("stored_weights: stale");
            }
            if !report.is_irregular || !stored_ok {
                return Err(Failure::failed("verification failed"));
            }
        }
        Command::Bound { graph } => {
            let g = read_graph(&graph)?;
            let r = bound_report(&g).map_err(Failure::usage)?;
            println!("baca: {}", r.baca_bound);
            println!(
                "degree_count: {} (degree {})",
                r.degree_count_bound, r.witness_degree
            );
        }
        Command::Exact {
            graph,
            max_nodes,
            max_k,
        } => {
            let g = read_graph(&graph)?;
            let mut budget = SearchBudget::default_for(&g);
            budget.max_nodes = max_nodes;
            if let Some(k) = max_k {
                budget.max_k = k;
            }
            let budget =
                SearchBudget::new(budget.max_nodes, budget.max_k).map_err(Failure::usage)?;
            let result = exact_tvs(&g, &budget).map_err(Failure::usage)?;
            match result.status {
                OracleStatus::Exact { k, witness } => {
                    eprintln!("exact k = {k} after {} nodes", result.nodes);
                    let doc =
                        LabelingDocument::from_labeling(&g, &witness, None).map_err(usage_io)?;
                    print!("{}", doc.to_text());
                }
                OracleStatus::InfeasibleAt(k) => {
                    println!("infeasible through k = {k} after {} nodes", result.nodes);
                    return Err(Failure::failed("no labeling within --max-k"));
                }
                OracleStatus::BudgetExceeded => {
                    println!("budget exceeded after {} nodes", result.nodes);
                    return Err(Failure {
                        code: EXIT_BUDGET,
                        message: "node budget exceeded".into(),
                    });
                }
            }
        }
        Command::Sweep { family, from, to } => {
            let specs = sweep_specs(&family, from, to).map_err(Failure::usage)?;
            let mut rows = Vec::with_capacity(specs.len());
            let mut errors = Vec::new();
            for (spec, row) in specs.iter().zip(run_sweep(&specs)) {
                match row {
                    Ok(row) => rows.push(row),
                    Err(e) => errors.push(format!("{spec}: {e}")),
                }
            }
            print!("{}", format_table(&rows));
            for e in &errors {
                eprintln!("{e}");
            }
            let failing = rows.iter().filter(|r| !r.passes()).count() + errors.len();
            if failing > 0 {
                return Err(Failure::failed(format!("{failing} instance(s) failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
