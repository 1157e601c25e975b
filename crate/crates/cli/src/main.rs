//! `qbaf`: validate and evaluate argumentation graphs, check postulates and
//! principles, and regenerate the reference tables.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qbaf_bench::examples::reproduce_examples;
use qbaf_bench::graphs::{reference_graph, ReferenceGraph};
use qbaf_bench::histogram::BIN_RULE;
use qbaf_bench::{emit, emit_sweep, histogram_fig7, reproduce_table4, sweep_fig6};
use qbaf_core::aggregators::postulates::{postulate_matrix, SamplingConfig};
use qbaf_core::aggregators::table_catalog;
use qbaf_core::engine::{as_aggregative, evaluate, evaluate_literature};
use qbaf_core::graph::{parse_qbaf, parse_qbaf_unchecked, to_json};
use qbaf_core::principles::{check_principle, resilience_scan, GeneratorConfig, Principle};
use qbaf_core::{validate, AggregativeSemantics, Aggregator, Combiner, Literature, Qbaf};
use serde_json::json;

// A closed stdout (e.g. `| head`) ends output quietly instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "qbaf", version, about = "Aggregative gradual semantics for acyclic QBAFs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file against the model invariants (cycles are allowed).
    Validate { file: PathBuf },
    /// Evaluate a graph file and print per-argument degrees as CSV.
    Eval {
        file: PathBuf,
        #[command(flatten)]
        semantics: SemanticsArgs,
        /// Round printed values to N decimals (half away from zero).
        #[arg(long, value_name = "N")]
        round: Option<u32>,
    },
    /// Print the postulate matrix as CSV.
    Postulates {
        /// Restrict to one aggregator (default: the ten table functions).
        #[arg(long, value_name = "NAME")]
        agg: Option<String>,
        #[arg(long, env = "QBAF_SEED", default_value_t = 7)]
        seed: u64,
        /// Print JSON with witnesses instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Search for counterexamples to the principles; prints JSON verdicts.
    Principles {
        #[command(flatten)]
        semantics: SemanticsArgs,
        /// Check only this principle (A1..A12, A7-strict, A8-strict, A10-strict).
        #[arg(long)]
        principle: Option<Principle>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, env = "QBAF_SEED", default_value_t = 1)]
        seed: u64,
    },
    /// Run the 515-semantics sweep; writes sweep.csv, histogram.csv and histogram.svg.
    Sweep {
        #[arg(long, value_name = "DIR", default_value = ".")]
        out: PathBuf,
    },
    /// Compare the 15 reference semantics with the published values; exit 0 iff all match.
    Table4 {
        /// Also write the cell-by-cell report as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Recompute the worked examples.
    Examples,
    /// Print an embedded reference graph in the file format, or list the ids.
    Graphs {
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Args)]
struct SemanticsArgs {
    /// Literature semantics: dfquad, ebs or qe.
    #[arg(long, conflicts_with_all = ["phi_r", "phi_s", "phi_f"])]
    semantics: Option<String>,
    /// Attacker aggregator.
    #[arg(long, required_unless_present = "semantics")]
    phi_r: Option<String>,
    /// Supporter aggregator.
    #[arg(long, required_unless_present = "semantics")]
    phi_s: Option<String>,
    /// Final combiner: a dedicated name or any catalog aggregator.
    #[arg(long, required_unless_present = "semantics")]
    phi_f: Option<String>,
}

enum Chosen {
    Literature(Literature),
    Triple(AggregativeSemantics),
}

impl Chosen {
    fn aggregative(&self) -> AggregativeSemantics {
        match self {
            Chosen::Literature(l) => as_aggregative(*l),
            Chosen::Triple(s) => s.clone(),
        }
    }
}

/// Failure with its exit code.
struct Fail {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Fail {
    Fail { code: 2, message: message.into() }
}

fn failure(message: impl Into<String>) -> Fail {
    Fail { code: 1, message: message.into() }
}

impl SemanticsArgs {
    fn resolve(&self) -> Result<Chosen, Fail> {
        if let Some(name) = &self.semantics {
            return name
                .parse::<Literature>()
                .map(Chosen::Literature)
                .map_err(|_| usage(format!("--semantics: unknown semantics `{name}` (expected dfquad, ebs or qe)")));
        }
        let pick = |flag: &str, v: &Option<String>| v.clone().ok_or_else(|| usage(format!("{flag} is required")));
        let agg = |flag: &str, name: String| {
            Aggregator::by_name(&name).map_err(|e| usage(format!("{flag}: {e}")))
        };
        let r = agg("--phi-r", pick("--phi-r", &self.phi_r)?)?;
        let s = agg("--phi-s", pick("--phi-s", &self.phi_s)?)?;
        let f_name = pick("--phi-f", &self.phi_f)?;
        let f = Combiner::resolve(&f_name).map_err(|e| usage(format!("--phi-f: {e}")))?;
        AggregativeSemantics::new(r, s, f).map(Chosen::Triple).map_err(|e| usage(e.to_string()))
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| failure(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Qbaf, Fail> {
    parse_qbaf(&read(path)?).map_err(|e| failure(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.command {
        Command::Validate { file } => {
            let g = parse_qbaf_unchecked(&read(&file)?).map_err(|e| failure(format!("{}: {e}", file.display())))?;
            let report = validate(&g);
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            if report.is_valid() {
                outln!("valid: {} arguments, {} attacks, {} supports", g.len(), g.attack_count(), g.support_count());
                Ok(())
            } else {
                let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                Err(failure(lines.join("\n")))
            }
        }
        Command::Eval { file, semantics, round } => {
            let chosen = semantics.resolve()?;
            let g = load(&file)?;
            let d = match &chosen {
                Chosen::Literature(l) => evaluate_literature(*l, &g),
                Chosen::Triple(s) => evaluate(s, &g),
            }
            .map_err(|e| failure(e.to_string()))?;
            out!("{}", d.to_csv(round));
            Ok(())
        }
        Command::Postulates { agg, seed, json } => {
            let aggs = match agg {
                Some(name) => vec![Aggregator::by_name(&name).map_err(|e| usage(format!("--agg: {e}")))?],
                None => table_catalog(),
            };
            let m = postulate_matrix(&aggs, &SamplingConfig { seed, ..SamplingConfig::default() });
            if json {
                outln!("{}", serde_json::to_string_pretty(&m).expect("matrix serializes"));
            } else {
                out!("{}", m.to_csv());
            }
            Ok(())
        }
        Command::Principles { semantics, principle, trials, seed } => {
            let s = semantics.resolve()?.aggregative();
            if s.phi_r().is_ordered() || s.phi_s().is_ordered() {
                return Err(usage("order-sensitive aggregators need ranked edges; random graphs have none"));
            }
            let cfg = GeneratorConfig { seed, trials, ..GeneratorConfig::default() };
            let list: Vec<Principle> = principle.map_or(Principle::ALL.to_vec(), |p| vec![p]);
            let verdicts: Vec<_> = list.iter().map(|&p| check_principle(&s, p, &cfg)).collect();
            let mut out = json!({ "semantics": s.label(), "seed": seed, "trials": trials, "verdicts": verdicts });
            if list.contains(&Principle::A9) {
                out["resilience_scan"] = json!(resilience_scan(s.phi_f(), 0.05));
            }
            outln!("{}", serde_json::to_string_pretty(&out).expect("verdicts serialize"));
            Ok(())
        }
        Command::Sweep { out } => {
            let rows = sweep_fig6();
            let h = histogram_fig7(&rows);
            let paths = emit_sweep(&rows, &h, &out).map_err(|e| failure(e.to_string()))?;
            outln!("{} semantics evaluated; {} counted in {} bins", rows.len(), h.total, h.counts.len());
            outln!("all bins populated: {} (empty bins: {:?})", h.all_bins_populated(), h.empty_bins());
            outln!("bin rule: {BIN_RULE}");
            for p in paths {
                outln!("wrote {}", p.display());
            }
            Ok(())
        }
        Command::Table4 { csv } => {
            let report = reproduce_table4();
            outln!("row  semantics                                         column  computed  rounded  published  pass");
            for c in &report.cells {
                outln!(
                    "{:<4} {:<49} {:<7} {:<9.4} {:<8.2} {:<9.2} {}",
                    c.row, c.semantics, c.column, c.computed, c.rounded, c.published, if c.pass { "yes" } else { "NO" }
                );
            }
            outln!("{}/15 rows match", report.passing_rows());
            if let Some(path) = csv {
                emit::table4_csv(&report, &path).map_err(|e| failure(e.to_string()))?;
            }
            if report.all_pass() {
                Ok(())
            } else {
                let bad: Vec<String> = report.failures().map(|c| format!("{} {}", c.row, c.column)).collect();
                Err(failure(format!("mismatched cells: {}", bad.join(", "))))
            }
        }
        Command::Examples => {
            let report = reproduce_examples();
            out!("{}", report.to_text());
            if report.all_exact() {
                Ok(())
            } else {
                Err(failure("some examples differ from their closed forms"))
            }
        }
        Command::Graphs { id } => {
            match id {
                None => ReferenceGraph::ALL.iter().for_each(|g| outln!("{g}")),
                Some(name) => {
                    let id = name.parse::<ReferenceGraph>().map_err(|e| usage(format!("--id: {e}")))?;
                    out!("{}", to_json(&reference_graph(id)));
                }
            }
            Ok(())
        }
    }
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
