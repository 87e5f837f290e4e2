use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cliquenet::baselines::{connected_er_graph, er_random_graph, ErConfig};
use cliquenet::communicability::{
    adjacency_spectrum_with, communicability_matrix, estrada_index, SpectrumOptions,
};
use cliquenet::edgelist::{read_edge_list, write_edge_list, Provenance};
use cliquenet::experiment::output::{
    write_clustering_spectrum, write_communicability_triplets, write_degree_dist, write_estrada,
    write_summary, EstradaRow,
};
use cliquenet::experiment::{
    run_experiment, table1_report, EnsembleResult, ExperimentSpec, GenerateSpec,
    ER_RESAMPLE_LIMIT,
};
use cliquenet::generator::{evolve, CliqueNetConfig};
use cliquenet::metrics::paths::Sources;
use cliquenet::metrics::{summarize, MeasureOptions, Reachability};
use cliquenet::Graph;

#[derive(Parser, Debug)]
#[command(name = "cliquenet", version, about = "Evolving clique networks: generation, measurement and experiments")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "CLIQUENET_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Grow one graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Degree distribution, clustering spectrum and summary of an edge list.
    Measure(MeasureArgs),
    /// Estrada index of an edge list, optionally with all pairwise
    /// communicabilities.
    Estrada(EstradaArgs),
    /// Run an ensemble experiment described by a TOML file.
    Run(RunArgs),
    /// Render a report from a finished experiment directory.
    Report {
        #[command(subcommand)]
        kind: ReportKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModelArg {
    Cliquenet,
    Er,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum, default_value = "cliquenet")]
    model: ModelArg,
    /// TOML file with `a`, `m`, `p`, `seed` and one of `steps` or `nodes`.
    #[arg(long, env = "CLIQUENET_CONFIG", conflicts_with_all = ["a", "m", "p", "steps"])]
    config: Option<PathBuf>,
    /// Clique size.
    #[arg(short, long)]
    a: Option<usize>,
    /// Attachment nodes per step.
    #[arg(short, long)]
    m: Option<usize>,
    /// Probability of a preferential step.
    #[arg(short, long)]
    p: Option<f64>,
    #[arg(long, conflicts_with = "nodes")]
    steps: Option<usize>,
    /// Target node count (clique nets round up to whole steps).
    #[arg(short, long)]
    nodes: Option<usize>,
    /// ER edge count.
    #[arg(long, conflicts_with = "mean_degree")]
    edges: Option<usize>,
    /// ER mean degree; the edge count is round(N k / 2).
    #[arg(long)]
    mean_degree: Option<f64>,
    /// Redraw ER graphs until connected.
    #[arg(long)]
    connected: bool,
    #[arg(long, env = "CLIQUENET_SEED")]
    seed: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(short, long, env = "CLIQUENET_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MeasureArgs {
    edge_list: PathBuf,
    #[arg(short, long, env = "CLIQUENET_OUT")]
    out: PathBuf,
    /// BFS sources for path length; all nodes when absent.
    #[arg(long, env = "CLIQUENET_SAMPLE_SOURCES")]
    sample_sources: Option<usize>,
    #[arg(long, env = "CLIQUENET_SEED", default_value_t = 0)]
    seed: u64,
    /// Average path length over connected pairs instead of failing on a
    /// disconnected graph.
    #[arg(long)]
    reachable_pairs: bool,
    #[arg(long)]
    no_path_length: bool,
}

#[derive(Args, Debug)]
struct EstradaArgs {
    edge_list: PathBuf,
    #[arg(short, long, env = "CLIQUENET_OUT")]
    out: PathBuf,
    /// Also write communicability.csv (at most 200 nodes).
    #[arg(long)]
    pairwise: bool,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(short, long, env = "CLIQUENET_CONFIG")]
    config: PathBuf,
    /// Overrides `base_seed`.
    #[arg(long, env = "CLIQUENET_SEED")]
    seed: Option<u64>,
    /// Overrides `output_dir`.
    #[arg(short, long, env = "CLIQUENET_OUT")]
    out: Option<PathBuf>,
    /// Overrides `sample_sources`.
    #[arg(long, env = "CLIQUENET_SAMPLE_SOURCES")]
    sample_sources: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum ReportKind {
    /// Clustering and path length of ER and clique nets at p = 0, 0.5, 1.
    Table1 { dir: PathBuf },
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn load_graph(path: &Path) -> Result<(Graph, Provenance)> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_edge_list(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

fn generate(args: GenerateArgs) -> Result<()> {
    let seed = args.seed.unwrap_or(0);
    let (g, provenance) = match args.model {
        ModelArg::Cliquenet => {
            let cfg = match &args.config {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    let mut spec = GenerateSpec::from_toml_str(&text)?;
                    if let Some(n) = args.nodes {
                        spec.nodes = Some(n);
                        spec.steps = None;
                    }
                    if let Some(s) = args.seed {
                        spec.seed = s;
                    }
                    spec.to_config()?
                }
                None => {
                    let (Some(a), Some(m), Some(p)) = (args.a, args.m, args.p) else {
                        bail!("clique nets need -a, -m and -p (or --config)");
                    };
                    let cfg = CliqueNetConfig::new(a, m, p).seed(seed);
                    match (args.steps, args.nodes) {
                        (Some(t), _) => cfg.steps(t),
                        (None, Some(n)) => cfg.target_nodes(n),
                        (None, None) => bail!("give --steps or --nodes"),
                    }
                }
            };
            (evolve(&cfg)?, cfg.provenance())
        }
        ModelArg::Er => {
            let Some(n) = args.nodes else {
                bail!("ER graphs need --nodes");
            };
            let cfg = match (args.edges, args.mean_degree) {
                (Some(e), _) => ErConfig::new(n, e, seed),
                (None, Some(k)) => ErConfig::matched(n, k, seed),
                (None, None) => bail!("ER graphs need --edges or --mean-degree"),
            };
            if args.connected {
                let (g, used) = connected_er_graph(&cfg, ER_RESAMPLE_LIMIT)?;
                let cfg = ErConfig { seed: used, ..cfg };
                (g, cfg.provenance())
            } else {
                (er_random_graph(&cfg)?, cfg.provenance())
            }
        }
    };
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            write_edge_list(&g, &provenance, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            write_edge_list(&g, &provenance, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn measure(args: MeasureArgs) -> Result<()> {
    let (g, _) = load_graph(&args.edge_list)?;
    let sources = match args.sample_sources {
        Some(count) => Sources::Sample {
            count,
            seed: args.seed,
        },
        None => Sources::All,
    };
    let opts = MeasureOptions {
        path_length: !args.no_path_length,
        sources,
        reachability: if args.reachable_pairs {
            Reachability::ReachablePairs
        } else {
            Reachability::Strict
        },
    };
    let summary = summarize(&g, &opts)?;
    fs::create_dir_all(&args.out)?;
    write_degree_dist(&summary.degrees, create(&args.out.join("degree_dist.csv"))?)?;
    write_clustering_spectrum(
        &summary.spectrum,
        create(&args.out.join("clustering_spectrum.csv"))?,
    )?;
    write_summary(&summary, create(&args.out.join("summary.csv"))?)?;
    Ok(())
}

fn parsed<T: std::str::FromStr>(prov: &Provenance, key: &str) -> Option<T> {
    prov.get(key).and_then(|v| v.parse().ok())
}

fn estrada(args: EstradaArgs) -> Result<()> {
    let (g, prov) = load_graph(&args.edge_list)?;
    let spectrum = adjacency_spectrum_with(
        &g,
        SpectrumOptions {
            eigenvectors: args.pairwise,
            ..SpectrumOptions::default()
        },
    )?;
    let row = EstradaRow {
        nodes: g.node_count(),
        a: parsed(&prov, "a"),
        m: parsed(&prov, "m"),
        p: parsed(&prov, "p"),
        seed: parsed(&prov, "seed"),
        result: estrada_index(&spectrum),
    };
    fs::create_dir_all(&args.out)?;
    write_estrada(&[row], create(&args.out.join("estrada.csv"))?)?;
    if args.pairwise {
        let matrix = communicability_matrix(&spectrum)?;
        write_communicability_triplets(&matrix, create(&args.out.join("communicability.csv"))?)?;
    }
    Ok(())
}

fn run(args: RunArgs) -> Result<()> {
    let text = fs::read_to_string(&args.config)
        .with_context(|| format!("reading {}", args.config.display()))?;
    let mut spec = ExperimentSpec::from_toml_str(&text)
        .with_context(|| format!("parsing {}", args.config.display()))?;
    if let Some(seed) = args.seed {
        spec.base_seed = seed;
    }
    if let Some(out) = args.out {
        spec.output_dir = out;
    }
    if args.sample_sources.is_some() {
        spec.sample_sources = args.sample_sources;
    }
    let result = run_experiment(&spec)?;
    eprintln!(
        "{}: {} grid points x {} replicas written to {}",
        spec.name,
        result.points.len(),
        spec.replicas,
        spec.output_dir.display()
    );
    Ok(())
}

fn report(kind: ReportKind) -> Result<()> {
    match kind {
        ReportKind::Table1 { dir } => {
            let path = dir.join("replicas.csv");
            let file = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
            let results = EnsembleResult::from_replicas_csv(BufReader::new(file))?;
            print!("{}", table1_report(&results)?);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Measure(args) => measure(args),
        Command::Estrada(args) => estrada(args),
        Command::Run(args) => run(args),
        Command::Report { kind } => report(kind),
    }
}
