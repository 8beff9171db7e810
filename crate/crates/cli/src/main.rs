use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graphclust::analysis::{self, BenchConfig, Statistic};
use graphclust::cliques::{self, CliqueOptions, DEFAULT_CLIQUE_CAP};
use graphclust::gen::GenSpec;
use graphclust::{census, clustering, ClusteringReport, Error, Graph};

#[derive(Parser)]
#[command(name = "graphclust", version, about = "Generalized clustering coefficients, motif census and clique analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nested motif census (JSON object, or one-row CSV).
    Census {
        file: PathBuf,
        #[arg(long)]
        csv: bool,
    },
    /// C(b) for each requested order.
    Clustering(ClusteringArgs),
    /// Maximal cliques and clique-size statistics.
    Cliques(CliquesArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// C(3), C(4), C(5) and density for every snapshot in a directory.
    Series(SeriesArgs),
    /// Time the closed forms against subset enumeration on dense G(n, p).
    Bench(BenchArgs),
    /// Cross-check the closed-form census against brute force.
    Verify {
        file: PathBuf,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Args)]
struct ClusteringArgs {
    file: PathBuf,
    /// Orders to compute; orders above 5 use subset enumeration.
    #[arg(long, num_args = 1.., default_values_t = [3, 4, 5])]
    b: Vec<usize>,
    /// Use subset enumeration for every order.
    #[arg(long)]
    naive: bool,
    /// One JSON object per line (default).
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CliquesArgs {
    file: PathBuf,
    #[arg(long)]
    distribution: bool,
    #[arg(long)]
    degree_stats: bool,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long, default_value_t = DEFAULT_CLIQUE_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Complete,
    Path,
    Cycle,
    Star,
    Gnp,
    GnpConnected,
    ChainClique,
}

#[derive(Args)]
struct GenArgs {
    #[arg(required_unless_present = "config")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    /// Clique order for chain_clique.
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    max_tries: usize,
    /// JSON generator spec, e.g. {"family": "gnp", "n": 30, "p": 0.5, "seed": 7}.
    #[arg(long, conflicts_with = "family")]
    config: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    dir: PathBuf,
    /// Append the Pearson correlation table.
    #[arg(long)]
    corr: bool,
    #[arg(long, default_value_t = analysis::corr::DEFAULT_PERMUTATIONS)]
    permutations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, num_args = 1.., default_values_t = [10, 20, 30])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.9)]
    p: f64,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, value_delimiter = ',', default_value = "c3,c4,c5")]
    stats: Vec<Statistic>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    max_tries: usize,
    #[arg(long)]
    no_warmup: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// An error that has already been printed, or one still to print.
enum Failure {
    Reported(u8),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UndefinedCoefficient { .. } => 2,
        Error::CliqueCap { .. } | Error::Overflow(_) | Error::Sampling { .. } => 3,
        Error::Io { .. } => 4,
        _ => 1,
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Graph::parse(&text)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run_census(file: &Path, csv: bool) -> Result<(), Error> {
    let counts = census::full_census(&read_graph(file)?)?;
    emit(None, &if csv { counts.to_csv() } else { pretty(&counts) })
}

fn run_clustering(args: &ClusteringArgs) -> Result<(), Failure> {
    let g = read_graph(&args.file)?;
    if !g.is_connected() {
        eprintln!("warning: graph is disconnected; C(b) is computed over all components");
    }
    let mut reports: Vec<ClusteringReport> = Vec::new();
    let mut code = None;
    for &b in &args.b {
        if b > 5 && !args.naive {
            eprintln!("warning: C({b}) has no closed form; enumerating all {b}-node subsets");
        }
        let result = if args.naive {
            clustering::c_general(&g, b)
        } else {
            clustering::coefficient(&g, b)
        };
        match result {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("error: {e}");
                code.get_or_insert(exit_code(&e));
            }
        }
    }
    let mut out = String::new();
    if args.csv {
        out.push_str("b,cliques,spanning_trees,cayley,value_num,value_den,value\n");
        for r in &reports {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.b,
                r.clique_count,
                r.spanning_tree_count,
                r.cayley_factor,
                r.value.numer(),
                r.value.denom(),
                r.value_f64
            ));
        }
    } else {
        for r in &reports {
            out.push_str(&serde_json::to_string(r).expect("serializable"));
            out.push('\n');
        }
    }
    emit(None, &out)?;
    code.map_or(Ok(()), |c| Err(Failure::Reported(c)))
}

/// Distribution and degree statistics are shown when no section is chosen.
fn clique_sections(args: &CliquesArgs) -> (bool, bool, bool) {
    let any = args.distribution || args.degree_stats || args.list;
    (args.distribution || !any, args.degree_stats || !any, args.list)
}

fn run_cliques(args: &CliquesArgs) -> Result<(), Error> {
    let g = read_graph(&args.file)?;
    let opts = CliqueOptions {
        cap: args.cap,
        ..Default::default()
    };
    let r = cliques::maximal_cliques_with(&g, opts)?;
    let (distribution, degree_stats, list) = clique_sections(args);
    let labelled = |c: &Vec<usize>| -> Vec<&str> { c.iter().map(|&v| g.label(v)).collect() };

    if args.csv {
        let mut blocks = Vec::new();
        if distribution {
            blocks.push(r.histogram_csv());
        }
        if degree_stats {
            let mut s = String::from("order,nodes,min,max,mean,median\n");
            for o in &r.degree_stats.per_order {
                s.push_str(&format!("{},{},{},{},{},{}\n", o.order, o.nodes, o.min, o.max, o.mean, o.median));
            }
            blocks.push(s);
        }
        if list {
            let mut s = String::from("size,members\n");
            for c in &r.maximal_cliques {
                s.push_str(&format!("{},{}\n", c.len(), labelled(c).join(" ")));
            }
            blocks.push(s);
        }
        return emit(None, &blocks.join("\n"));
    }

    let mut out = json!({ "clique_number": r.clique_number, "maximal_cliques": r.maximal_cliques.len() });
    if distribution {
        out["size_histogram"] = json!(r.size_histogram);
    }
    if degree_stats {
        out["degree_stats"] = json!(r.degree_stats);
    }
    if list {
        out["cliques"] = Value::from_iter(r.maximal_cliques.iter().map(|c| json!(labelled(c))));
    }
    emit(None, &pretty(&out))
}

fn gen_spec(args: &GenArgs) -> Result<GenSpec, Error> {
    if let Some(path) = &args.config {
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        return serde_json::from_str(&text)
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())));
    }
    let family = args.family.expect("clap requires family without --config");
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParameter(format!("this family needs --{flag}")))
    };
    let n = need(args.n, "n")?;
    let p = || args.p.ok_or_else(|| Error::InvalidParameter("this family needs --p".into()));
    Ok(match family {
        Family::Complete => GenSpec::Complete { n },
        Family::Path => GenSpec::Path { n },
        Family::Cycle => GenSpec::Cycle { n },
        Family::Star => GenSpec::Star { n },
        Family::Gnp => GenSpec::Gnp { n, p: p()?, seed: args.seed },
        Family::GnpConnected => GenSpec::GnpConnected {
            n,
            p: p()?,
            seed: args.seed,
            max_tries: args.max_tries,
        },
        Family::ChainClique => GenSpec::ChainClique { b: need(args.b, "b")?, n },
    })
}

fn run_gen(args: &GenArgs) -> Result<(), Error> {
    let g = gen_spec(args)?.generate()?;
    emit(args.output.as_deref(), &g.to_edge_list())
}

fn run_series(args: &SeriesArgs) -> Result<(), Error> {
    let table = analysis::series_scan(&args.dir)?;
    for e in &table.errors {
        eprintln!("warning: skipped {}: {}", e.file, e.message);
    }
    let corr = args
        .corr
        .then(|| analysis::pearson_matrix(&table, args.permutations, args.seed));
    if args.json {
        let mut out = json!({ "series": table.to_json() });
        if let Some(m) = &corr {
            out["correlation"] = json!(m);
        }
        return emit(None, &pretty(&out));
    }
    let mut out = table.to_csv();
    if let Some(m) = &corr {
        out.push('\n');
        out.push_str(&m.to_csv());
    }
    emit(None, &out)
}

fn run_bench(args: &BenchArgs) -> Result<(), Error> {
    let cfg = BenchConfig {
        sizes: args.sizes.clone(),
        p: args.p,
        reps: args.reps,
        statistics: args.stats.clone(),
        seed: args.seed,
        max_tries: args.max_tries,
        warmup: !args.no_warmup,
    };
    let records = analysis::bench_run(&cfg)?;
    emit(args.output.as_deref(), &analysis::bench::to_csv(&records))?;
    for s in analysis::speedups(&records) {
        eprintln!(
            "{} n={}: analytic {:.3e}s, naive {:.3e}s, speedup {:.1}x{}",
            s.statistic,
            s.n,
            s.median_analytic,
            s.median_naive,
            s.ratio,
            if s.values_agree { "" } else { " (VALUES DIFFER)" }
        );
    }
    Ok(())
}

fn run_verify(file: &Path, b: usize) -> Result<(), Error> {
    let report = analysis::verify(&read_graph(file)?, b)?;
    if !report.matched {
        eprintln!("warning: {} component(s) disagree with the oracle", report.mismatches.len());
    }
    emit(None, &pretty(&report))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Census { file, csv } => run_census(file, *csv)?,
        Command::Clustering(args) => run_clustering(args)?,
        Command::Cliques(args) => run_cliques(args)?,
        Command::Gen(args) => run_gen(args)?,
        Command::Series(args) => run_series(args)?,
        Command::Bench(args) => run_bench(args)?,
        Command::Verify { file, b } => run_verify(file, *b)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported(code)) => ExitCode::from(code),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
