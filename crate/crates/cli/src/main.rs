//! `thdim`: threshold-dimension decompositions and LTF circuits from the
//! command line.
//!
//! Exit codes: 0 success or positive recognition, 1 negative answer or
//! refusal, 2 usage or input error, 3 internal verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use thdim::circuits::{
    compile_circuit, verify_circuit, CircuitVerdict, GraphicFunction, MajorityCircuit,
};
use thdim::decompose::{
    build_desirable_family, decompose_degeneracy, decompose_treewidth, decompose_vertex_cover,
    greedy_vertex_cover, heuristic_tree_decomposition, parse_tree_decomposition, treewidth_layout,
    Decomposition, Method,
};
use thdim::exact::exact_dimension;
use thdim::graph::{
    degeneracy_ordering, minimum_vertex_cover, parse_edge_list, ExactLimits, Graph,
};
use thdim::ltf::VerifyMode;
use thdim::maxdeg::decompose_maxdeg_detailed;
use thdim::randlab::{parse_experiment_spec, run_experiment};
use thdim::report::{dimension_report, ReportConfig};
use thdim::threshold::{recognize_threshold, Recognition};
use thdim::Error;

/// Circuits up to this arity are verified exhaustively by default.
const AUTO_EXHAUSTIVE: usize = 16;

#[derive(Parser)]
#[command(
    name = "thdim",
    version,
    about = "Threshold-dimension decompositions of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is threshold.
    Recognize { graph: PathBuf },
    /// Write a verified intersection of threshold graphs.
    Decompose {
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tree decomposition (PACE `.td`) for the treewidth method.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print intermediate artifacts to stderr.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Exact dimension (small graphs), lower bounds and method factor counts.
    Report {
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        exact_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `kind,name,value` rows instead of aligned text.
        #[arg(long)]
        rows: bool,
    },
    /// Compile a decomposition into an AND of LTF gates and verify it.
    Compile {
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        td: Option<PathBuf>,
        /// Default: exhaustive up to 16 inputs, sampled above.
        #[arg(long, value_enum)]
        verify: Option<VerifyArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a circuit file against a graph's clique indicator.
    Verify {
        graph: PathBuf,
        circuit: PathBuf,
        #[arg(long, value_enum)]
        verify: Option<VerifyArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run `G(n, m)` degeneracy experiments and write a CSV table.
    Experiment {
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Vc,
    Degeneracy,
    Treewidth,
    Maxdeg,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    Exhaustive,
    Sampled,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify_mode(arg: Option<VerifyArg>, n: usize, seed: u64) -> VerifyMode {
    match arg {
        Some(VerifyArg::Exhaustive) => VerifyMode::Exhaustive,
        Some(VerifyArg::Sampled) => VerifyMode::sampled(seed),
        None => VerifyMode::auto(n, AUTO_EXHAUSTIVE, seed),
    }
}

fn decompose(
    g: &Graph,
    method: MethodArg,
    seed: u64,
    td: Option<&Path>,
    diagnostics: bool,
) -> Result<Decomposition> {
    let d = match method {
        MethodArg::Vc => {
            let cover = minimum_vertex_cover(g, &ExactLimits::default())
                .unwrap_or_else(|_| greedy_vertex_cover(g));
            if diagnostics {
                eprintln!("cover {cover:?}");
            }
            decompose_vertex_cover(g, &cover)?
        }
        MethodArg::Degeneracy => {
            if diagnostics && g.n() >= 2 {
                let (k, order) = degeneracy_ordering(g);
                let fam = build_desirable_family(g, k.max(1), &order, seed)?;
                eprintln!("degeneracy {k} order {:?}", order.order());
                eprintln!(
                    "palette {} colorings {} attempts {}",
                    fam.palette(),
                    fam.colorings().len(),
                    fam.attempts()
                );
                for (i, c) in fam.colorings().iter().enumerate() {
                    eprintln!("coloring {i}: {:?}", c.colors());
                }
            }
            decompose_degeneracy(g, seed)?
        }
        MethodArg::Treewidth => {
            let td = match td {
                Some(p) => parse_tree_decomposition(&read(p)?)
                    .with_context(|| format!("parsing {}", p.display()))?,
                None => heuristic_tree_decomposition(g),
            };
            if diagnostics {
                let layout = treewidth_layout(g, &td)?;
                eprintln!("width {} bags {}", td.width(), td.num_bags());
                eprintln!("top bags {:?}", layout.top_bag);
                eprintln!("sigma {:?}", layout.sigma.order());
                eprintln!("theta {:?}", layout.theta.colors());
            }
            decompose_treewidth(g, &td)?
        }
        MethodArg::Maxdeg => {
            let (d, rep) = decompose_maxdeg_detailed(g, seed)?;
            if diagnostics {
                eprintln!("{rep}");
            }
            d
        }
        MethodArg::Exact => {
            let ex = exact_dimension(g)?;
            Decomposition::verified(g, ex.factors, Method::Exact, ex.dimension)?
        }
    };
    if !d.is_verified() {
        return Err(Error::Internal("decomposition was not verified".into()).into());
    }
    Ok(d)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Recognize { graph } => {
            let g = read_graph(&graph)?;
            match recognize_threshold(&g) {
                Recognition::Threshold(t) => {
                    println!("threshold");
                    println!("{}", t.to_line());
                    Ok(ExitCode::SUCCESS)
                }
                Recognition::NotThreshold(w) => {
                    println!("not-threshold");
                    println!("{w}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Decompose {
            graph,
            method,
            seed,
            td,
            out,
            diagnostics,
        } => {
            let g = read_graph(&graph)?;
            let d = decompose(&g, method, seed, td.as_deref(), diagnostics)?;
            emit(out.as_deref(), &d.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report {
            graph,
            exact_cap,
            seed,
            rows,
        } => {
            let g = read_graph(&graph)?;
            let config = ReportConfig {
                exact_cap,
                seed,
                ..ReportConfig::default()
            };
            let r = dimension_report(&g, &config)?;
            if !r.is_consistent() {
                return Err(Error::Internal("report bounds are inconsistent".into()).into());
            }
            if rows {
                print!("{}", r.to_rows());
            } else {
                print!("{r}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compile {
            graph,
            method,
            seed,
            td,
            verify,
            out,
        } => {
            let g = read_graph(&graph)?;
            let d = decompose(&g, method, seed, td.as_deref(), false)?;
            let c = compile_circuit(&g, &d)?;
            let mode = verify_mode(verify, g.n(), seed);
            match verify_circuit(&GraphicFunction::new(g), &c, &mode)? {
                CircuitVerdict::Valid(ch) => {
                    eprintln!(
                        "verified {} gates, {} vectors ({})",
                        c.gates().len(),
                        ch.vectors,
                        mode.name()
                    );
                    emit(out.as_deref(), &c.to_text())?;
                    Ok(ExitCode::SUCCESS)
                }
                CircuitVerdict::Invalid(m) => {
                    Err(Error::Internal(format!("compiled circuit fails on {m}")).into())
                }
            }
        }
        Command::Verify {
            graph,
            circuit,
            verify,
            seed,
        } => {
            let g = read_graph(&graph)?;
            let c = MajorityCircuit::parse(&read(&circuit)?)
                .with_context(|| format!("parsing {}", circuit.display()))?;
            let mode = verify_mode(verify, g.n(), seed);
            match verify_circuit(&GraphicFunction::new(g), &c, &mode)? {
                CircuitVerdict::Valid(ch) => {
                    println!("valid ({}, {} vectors)", mode.name(), ch.vectors);
                    Ok(ExitCode::SUCCESS)
                }
                CircuitVerdict::Invalid(m) => {
                    println!("invalid: counterexample {m}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Experiment { spec, seed, out } => {
            let specs = parse_experiment_spec(&read(&spec)?)
                .with_context(|| format!("parsing {}", spec.display()))?;
            let table = run_experiment(&specs, seed)?;
            emit(out.as_deref(), &table.to_csv())?;
            if table.all_verified() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Error::Internal("an experiment row failed verification".into()).into())
            }
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Internal(_)) => 3,
        Some(Error::Parse { .. }) | None => 2,
        Some(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Internal("x".into()).into()), 3);
        assert_eq!(exit_code(&Error::Contract("x".into()).into()), 1);
        let wrapped = anyhow::Error::from(Error::Parse {
            line: 1,
            msg: "x".into(),
        })
        .context("reading x");
        assert_eq!(exit_code(&wrapped), 2);
        assert_eq!(exit_code(&anyhow::anyhow!("io")), 2);
    }
}
