use std::io::{self, Read as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use cliquecode::formats::{detect_format, parse_graph, GraphFormat};
use cliquecode::oracle::{brute_force_isomorphic, Witness};
use cliquecode::primes::prime_factors;
use cliquecode::verify::run_invariant_suite;
use cliquecode::{
    canonical_polynomial, closed_form_family, code, divisor_graph,
    divisor_graph_polynomial_closed_form, generate_family, minimum_total_coverings,
    realize_sequence, Budget, CodingSequence, Error, Family, Graph, DEFAULT_BUDGET,
};
use serde_json::{json, Value};

mod report;

use report::Report;

/// Exact canonical codes and polynomial representations of simple graphs.
#[derive(Parser, Debug)]
#[command(name = "cliquecode", version)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Options {
    /// Emit one JSON document instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    /// Input graph format: edge-list, dimacs or graph6 (default: detect).
    #[arg(long, global = true)]
    format: Option<GraphFormat>,
    /// Search node limit for the exact searches.
    #[arg(long, global = true, env = "CLIQUECODE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical code of a graph.
    Code { file: PathBuf },
    /// Print the canonical polynomial of a graph.
    Poly { file: PathBuf },
    /// Print the total clique covering number and how many minimum coverings exist.
    Theta { file: PathBuf },
    /// List every minimum total clique covering.
    Covers { file: PathBuf },
    /// Decide isomorphism by comparing codes.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        /// Also run the brute-force permutation search.
        #[arg(long)]
        oracle: bool,
    },
    /// Divisor graph of n: labels, edges, covering number and polynomial.
    Divisor {
        n: u64,
        /// Use the product formula instead of the search.
        #[arg(long)]
        closed_form: bool,
        /// With --closed-form, also run the search and compare.
        #[arg(long, requires = "closed_form")]
        pipeline: bool,
    },
    /// Build the gcd graph of a label sequence.
    Realize {
        #[arg(long)]
        sequence: String,
    },
    /// Generate a complete, path, cycle or empty graph.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Also print the known code and polynomial of the family.
        #[arg(long)]
        closed_form: bool,
    },
    /// Run the invariant suite on one graph.
    Verify { file: PathBuf },
}

/// Exit status for a failed `verify` check or an `iso` disagreement.
const CHECK_FAILED: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let json = cli.opts.json;
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(json));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(CHECK_FAILED)
            }
        }
        Err(e) => {
            let budget = matches!(e.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. }));
            eprintln!("error: {e:#}");
            if json {
                let kind = if budget { "budget" } else { "input" };
                println!("{}", json!({ "error": { "kind": kind, "message": format!("{e:#}") } }));
            }
            ExitCode::from(if budget { 2 } else { 1 })
        }
    }
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> anyhow::Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let name = path.file_name().and_then(|n| n.to_str());
    let format = format.unwrap_or_else(|| detect_format(name, &text));
    parse_graph(&text, format).with_context(|| format!("parsing {}", path.display()))
}

fn edge_lines(g: &Graph) -> Vec<(String, Value)> {
    g.edges().map(|(u, v)| (format!("{u} {v}"), json!([u, v]))).collect()
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let opts = &cli.opts;
    let mut budget = Budget::new(opts.budget);
    let budget = &mut budget;
    let mut r = Report::new();
    match &cli.command {
        Command::Code { file } => {
            let g = read_graph(file, opts.format)?;
            r.text("code", code(&g, budget)?);
        }
        Command::Poly { file } => {
            let g = read_graph(file, opts.format)?;
            r.text("polynomial", canonical_polynomial(&g, budget)?);
        }
        Command::Theta { file } => {
            let g = read_graph(file, opts.format)?;
            let covers = minimum_total_coverings(&g, budget)?;
            let theta = covers.first().map_or(0, |c| c.len());
            r.field("theta_t", theta, json!(theta));
            r.field("minimum_coverings", covers.len(), json!(covers.len()));
        }
        Command::Covers { file } => {
            let g = read_graph(file, opts.format)?;
            let covers = minimum_total_coverings(&g, budget)?;
            let theta = covers.first().map_or(0, |c| c.len());
            r.field("theta_t", theta, json!(theta));
            let items = covers
                .iter()
                .map(|s| {
                    let human = s.cliques().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
                    let cliques: Vec<&[usize]> = s.cliques().iter().map(|c| c.vertices()).collect();
                    (human, json!(cliques))
                })
                .collect();
            r.list("coverings", items);
        }
        Command::Iso { file1, file2, oracle } => {
            let g1 = read_graph(file1, opts.format)?;
            let g2 = read_graph(file2, opts.format)?;
            let c1 = code(&g1, budget)?;
            let c2 = code(&g2, budget)?;
            let verdict = c1 == c2;
            r.field("isomorphic", verdict, json!(verdict));
            r.text("code1", &c1);
            r.text("code2", &c2);
            if *oracle {
                let report = brute_force_isomorphic(&g1, &g2, budget)?;
                r.field("oracle", report.verdict, json!(report.verdict));
                r.field("oracle_nodes", report.nodes_explored, json!(report.nodes_explored));
                match &report.witness {
                    Some(Witness::Permutation(p)) => r.field("witness", joined(p.images()), json!(p.images())),
                    _ => r.field("witness", "none", Value::Null),
                }
                let agree = report.verdict == verdict;
                r.field("agree", agree, json!(agree));
                r.ok = agree;
            }
        }
        Command::Divisor { n, closed_form, pipeline } => {
            let lg = divisor_graph(*n)?;
            r.field("n", n, json!(n));
            let labels: Vec<String> = lg.labels.iter().map(|l| l.to_string()).collect();
            r.field("labels", joined(&labels), json!(labels));
            r.list("edges", edge_lines(&lg.graph));
            let (theta, poly) = if *closed_form {
                let omega = prime_factors(&(*n).into())?.len();
                (omega, divisor_graph_polynomial_closed_form(*n)?)
            } else {
                (cliquecode::theta_t(&lg.graph, budget)?, canonical_polynomial(&lg.graph, budget)?)
            };
            r.field("theta_t", theta, json!(theta));
            r.text("polynomial", &poly);
            if *pipeline {
                let searched_theta = cliquecode::theta_t(&lg.graph, budget)?;
                let searched = canonical_polynomial(&lg.graph, budget)?;
                let agree = searched == poly && searched_theta == theta;
                r.text("pipeline_polynomial", &searched);
                r.field("agree", agree, json!(agree));
                r.ok = agree;
            }
        }
        Command::Realize { sequence } => {
            let seq: CodingSequence = sequence.parse()?;
            let lg = realize_sequence(seq.entries())?;
            r.field("vertices", lg.graph.vertex_count(), json!(lg.graph.vertex_count()));
            let labels: Vec<String> = lg.labels.iter().map(|l| l.to_string()).collect();
            r.field("labels", joined(&labels), json!(labels));
            r.list("edges", edge_lines(&lg.graph));
        }
        Command::Gen { family, n, closed_form } => {
            let g = generate_family(*family, *n)?;
            r.text("family", family);
            r.field("vertices", g.vertex_count(), json!(g.vertex_count()));
            r.list("edges", edge_lines(&g));
            if *closed_form {
                let (seq, poly) = closed_form_family(*family, *n)?;
                r.text("code", &seq);
                r.text("polynomial", &poly);
            }
        }
        Command::Verify { file } => {
            let g = read_graph(file, opts.format)?;
            let checks = run_invariant_suite(&g, budget)?;
            let passed = checks.iter().all(|c| c.passed);
            let items = checks
                .iter()
                .map(|c| {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    let human = if c.detail.is_empty() {
                        format!("{mark} {}", c.name)
                    } else {
                        format!("{mark} {} ({})", c.name, c.detail)
                    };
                    (human, serde_json::to_value(c).expect("check serializes"))
                })
                .collect();
            r.list("checks", items);
            r.field("passed", passed, json!(passed));
            r.ok = passed;
        }
    }
    Ok(r)
}
