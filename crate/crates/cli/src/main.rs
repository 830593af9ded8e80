use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use netwitness::epsnet::{certify, Algorithm};
use netwitness::graph::{diameter, read_edge_list_file, EdgeList};
use netwitness::harness::{
    compare_filtrations, graph_stats, run_experiment, select_landmarks, ExperimentConfig,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "netwitness", version, about = "Epsilon-net landmarks and witness persistence on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print vertex and edge counts, diameter and weighting.
    Stats(GraphArgs),
    /// Select landmarks and certify them.
    Net(NetArgs),
    /// Compute Rips and lazy witness diagrams for one landmark set.
    Ph(PhArgs),
    /// Run the full grid of algorithms, eps values and seeds.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file: `u v` per line, or `u v w` with --weighted.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    weighted: bool,
}

#[derive(Args)]
struct NetArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    eps: f64,
    #[arg(long, default_value = "iterative")]
    algo: Algorithm,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhArgs {
    #[command(flatten)]
    net: NetArgs,
    /// Filtration ceiling; defaults to the graph diameter.
    #[arg(long)]
    alpha_max: Option<f64>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Comma-separated eps values; a quantile grid when omitted.
    #[arg(long, value_delimiter = ',')]
    eps: Vec<f64>,
    /// Comma-separated algorithms; all five when omitted.
    #[arg(long, value_delimiter = ',')]
    algo: Vec<Algorithm>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    seed: Vec<u64>,
    #[arg(long)]
    alpha_max: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

fn load(args: &GraphArgs) -> Result<EdgeList> {
    read_edge_list_file(&args.graph, args.weighted)
        .with_context(|| format!("reading {}", args.graph.display()))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn stats(args: &GraphArgs) -> Result<()> {
    let list = load(args)?;
    let s = graph_stats(&list.graph);
    println!("vertices {}", s.vertices);
    println!("edges {}", s.edges);
    match s.diameter {
        Some(d) => println!("diameter {d}"),
        None => {
            println!("diameter undefined");
            bail!("{}", diameter(&list.graph).unwrap_err());
        }
    }
    println!("weights {}", if s.unit_weight { "unit" } else { "weighted" });
    Ok(())
}

fn net(args: &NetArgs) -> Result<()> {
    let list = load(&args.graph)?;
    let set = select_landmarks(&list.graph, args.algo, args.eps, args.seed)?;
    let cert = certify(&list.graph, set.as_slice(), args.eps)?;
    let original: Vec<u64> = set.as_slice().iter().filter_map(|&v| list.ids.original(v)).collect();
    let doc = json!({ "landmarks": set, "original_ids": original, "certificate": cert });
    emit(&serde_json::to_string_pretty(&doc)?, args.out.as_ref())
}

fn ph(args: &PhArgs) -> Result<()> {
    let a = &args.net;
    let list = load(&a.graph)?;
    let graph = &list.graph;
    let alpha_max = match args.alpha_max {
        Some(x) => x,
        None => diameter(graph)?,
    };
    let set = select_landmarks(graph, a.algo, a.eps, a.seed)?;
    let cmp = compare_filtrations(graph, set.as_slice(), a.eps, alpha_max)?;
    match &a.out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            fs::write(dir.join("dgm_rips.csv"), cmp.rips.to_csv())?;
            fs::write(dir.join("dgm_lw.csv"), cmp.lazy_witness.to_csv())?;
        }
        None => {
            print!("# rips\n{}", cmp.rips.to_csv());
            print!("# lazy witness\n{}", cmp.lazy_witness.to_csv());
        }
    }
    println!(
        "landmarks {} bottleneck_d0 {} bottleneck_d1 {} bound_ok {}",
        set.len(),
        cmp.bottleneck_d0,
        cmp.bottleneck_d1,
        cmp.bound_ok()
    );
    Ok(())
}

fn experiment(args: &ExperimentArgs) -> Result<()> {
    let mut cfg = ExperimentConfig::new(&args.graph.graph, &args.out);
    cfg.weighted = args.graph.weighted;
    cfg.eps_values = args.eps.clone();
    if !args.algo.is_empty() {
        cfg.algorithms = args.algo.clone();
    }
    cfg.seeds = args.seed.clone();
    cfg.alpha_max = args.alpha_max;
    let report = run_experiment(&cfg)?;
    let failed = report.rows().iter().filter(|r| !r.bound_ok).count();
    println!(
        "{} rows written to {} ({} outside the bound)",
        report.rows().len(),
        args.out.join("report.csv").display(),
        failed
    );
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Stats(a) => stats(a),
        Command::Net(a) => net(a),
        Command::Ph(a) => ph(a),
        Command::Experiment(a) => experiment(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
