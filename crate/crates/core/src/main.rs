use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ddseed::centrality::{Measure, DEFAULT_GREEDY_REPLICATIONS};
use ddseed::diffusion::ICParams;
use ddseed::experiment::{run_experiment, select_seeds, summarize_overlap, ExperimentConfig};
use ddseed::generators::barabasi_albert;
use ddseed::graph::load_edge_list_file;
use ddseed::seedselect::{Method, SelectionConfig, Theta};
use ddseed::Result;

#[derive(Parser)]
#[command(name = "ddseed", version, about = "Influential seed selection on edge-list networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Select, simulate and score every method at every k; writes report.csv.
    Run(RunArgs),
    /// Pairwise seed overlap and coverage; writes overlap.csv.
    Overlap(RunArgs),
    /// Print one centrality score per node.
    Scores {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "degree")]
        measure: Measure,
    },
    /// Print one seed set, one original node id per line.
    Select {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "sidd")]
        method: Method,
        #[arg(long, default_value_t = 50)]
        k: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Write a Barabasi-Albert edge list.
    Synth {
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value_t = 2)]
        attach: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    dataset: PathBuf,
    #[arg(long)]
    directed: bool,
}

#[derive(Args)]
struct Params {
    /// Minimum seed distance.
    #[arg(long, default_value_t = 2)]
    dtd: usize,
    /// Common-neighbour threshold: an integer, `auto` or `inf`.
    #[arg(long, default_value = "auto")]
    theta: Theta,
    #[arg(long, default_value_t = 0.01)]
    beta: f64,
    /// Edge probability for simulation, greedy and degree discount.
    #[arg(long, default_value_t = 0.01)]
    p: f64,
    #[arg(long, default_value_t = 10_000)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_GREEDY_REPLICATIONS)]
    greedy_reps: usize,
}

impl Params {
    fn selection(&self, k: usize) -> SelectionConfig {
        SelectionConfig {
            k,
            d_td: self.dtd,
            theta: self.theta,
            beta: self.beta,
            ..Default::default()
        }
    }

    fn ic(&self) -> ICParams {
        ICParams {
            p: self.p,
            replications: self.reps,
            master_seed: self.seed,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    input: Input,
    /// Comma-separated method names.
    #[arg(long, value_delimiter = ',', default_value = "degree,dd,fidd,sidd,random")]
    methods: Vec<Method>,
    /// Comma-separated seed-set sizes.
    #[arg(long, value_delimiter = ',', default_value = "25,50,75,100")]
    k: Vec<usize>,
    #[command(flatten)]
    params: Params,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

impl RunArgs {
    fn config(self) -> ExperimentConfig {
        let mut k = self.k;
        k.sort_unstable();
        k.dedup();
        ExperimentConfig {
            dataset: self.input.dataset,
            directed: self.input.directed,
            methods: self.methods,
            k_values: k,
            selection: self.params.selection(1),
            ic: self.params.ic(),
            greedy_replications: self.params.greedy_reps,
            out_dir: self.out,
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    match cli.command {
        Command::Run(args) => {
            let config = args.config();
            let report = run_experiment(&config)?;
            let failed = report.rows.iter().filter(|r| r.error.is_some()).count();
            eprintln!(
                "wrote {} rows to {} ({failed} failed)",
                report.rows.len(),
                config.out_dir.join("report.csv").display()
            );
        }
        Command::Overlap(args) => {
            let config = args.config();
            summarize_overlap(&config)?;
            eprintln!("wrote {}", config.out_dir.join("overlap.csv").display());
        }
        Command::Scores { input, measure } => {
            let (g, _) = load_edge_list_file(&input.dataset, input.directed)?;
            let scores = measure.compute(&g)?;
            let mut out = BufWriter::new(stdout.lock());
            for v in 0..g.node_count() {
                writeln!(out, "{} {}", g.original_id(v), scores.score(v))?;
            }
            out.flush()?;
        }
        Command::Select {
            input,
            method,
            k,
            params,
        } => {
            let (g, _) = load_edge_list_file(&input.dataset, input.directed)?;
            let set = select_seeds(&g, method, &params.selection(k), &params.ic(), params.greedy_reps)?;
            if set.is_partial() {
                eprintln!("only {} of {k} seeds satisfy the constraints", set.len());
            }
            set.write_text(&g, stdout.lock())?;
        }
        Command::Synth {
            nodes,
            attach,
            seed,
            out,
        } => {
            let g = barabasi_albert(nodes, attach, seed)?;
            let mut w = BufWriter::new(File::create(out)?);
            for u in 0..g.node_count() {
                for &v in g.neighbors(u) {
                    if u < v {
                        writeln!(w, "{u} {v}")?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
