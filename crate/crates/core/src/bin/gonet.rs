use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gonet::report::{
    self, BaselineOptions, BuildOptions, OutputDir, RankAlgorithm, RankOptions, SpectrumOptions,
    StatKind, StatsOptions,
};
use gonet::Geometry;

/// Go game records as a network of 3x3 move patterns.
#[derive(Parser)]
#[command(name = "gonet", version)]
struct Cli {
    /// Output directory [default: $GONET_OUT_DIR or .]
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeometryArg {
    Interior,
    Edge,
    Corner,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Zipf,
    Seq,
    C1,
    C2,
    C3,
    Pd,
    Degrees,
    Cc,
    CcGames,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    Pagerank,
    Cheirank,
    Hits,
}

#[derive(Subcommand)]
enum Command {
    /// Write the census of plaquette classes
    EnumeratePlaquettes {
        #[arg(long, value_enum)]
        geometry: Option<GeometryArg>,
    },
    /// Parse and replay SGF records, write net.json and events.json
    Build {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long, default_value_t = 4)]
        d: u32,
        /// Abort on the first unreadable file or illegal game
        #[arg(long)]
        strict: bool,
    },
    /// Frequency and graph statistics from net.json / events.json
    Stats {
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long)]
        net: Option<PathBuf>,
        #[arg(long)]
        events: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 1)]
        fit_min: usize,
        #[arg(long, default_value_t = 500)]
        fit_max: usize,
    },
    /// PageRank, CheiRank or HITS vectors of a network
    Rank {
        #[arg(long, default_value = "net.json")]
        net: PathBuf,
        #[arg(long, value_enum)]
        alg: AlgArg,
        /// Damping factor; 0.85 is the classical choice
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        /// HITS on the unweighted adjacency
        #[arg(long)]
        unweighted: bool,
    },
    /// Full complex spectrum of the Google matrix
    Spectrum {
        #[arg(long, default_value = "net.json")]
        net: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 7)]
        top: usize,
        #[arg(long, value_delimiter = ',', default_value = "80,90,95,99")]
        percentiles: Vec<f64>,
    },
    /// Network of the corpus with every game's moves shuffled
    Baseline {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long, default_value_t = 4)]
        d: u32,
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 0)]
        shuffle_seed: u64,
    },
}

fn run(cli: Cli) -> gonet::Result<()> {
    let mut out = OutputDir::create(cli.out_dir.unwrap_or_else(report::default_out_dir))?;
    match cli.command {
        Command::EnumeratePlaquettes { geometry } => {
            let geometry = geometry.map(|g| match g {
                GeometryArg::Interior => Geometry::Interior,
                GeometryArg::Edge => Geometry::Edge,
                GeometryArg::Corner => Geometry::Corner,
            });
            println!("{}", report::cmd_enumerate(&mut out, geometry)?);
        }
        Command::Build { input, d, strict } => {
            let built = report::cmd_build(&mut out, &BuildOptions { inputs: input, strict, d })?;
            for w in &built.warnings {
                eprintln!("warning: {w}");
            }
            let net = &built.network;
            println!(
                "{} games, {} moves, {} distinct links, total weight {}",
                net.n_games,
                net.total_moves(),
                net.edges.len(),
                net.total_weight()
            );
        }
        Command::Stats { which, net, events, k, d, fit_min, fit_max } => {
            let which = match which {
                WhichArg::Zipf => StatKind::Zipf,
                WhichArg::Seq => StatKind::Seq,
                WhichArg::C1 => StatKind::C1,
                WhichArg::C2 => StatKind::C2,
                WhichArg::C3 => StatKind::C3,
                WhichArg::Pd => StatKind::Pd,
                WhichArg::Degrees => StatKind::Degrees,
                WhichArg::Cc => StatKind::Cc,
                WhichArg::CcGames => StatKind::CcGames,
            };
            let body = report::cmd_stats(
                &mut out,
                &StatsOptions { which, network: net, events, k, d, fit_min, fit_max },
            )?;
            println!("{body}");
        }
        Command::Rank { net, alg, alpha, tol, max_iter, unweighted } => {
            let alg = match alg {
                AlgArg::Pagerank => RankAlgorithm::PageRank,
                AlgArg::Cheirank => RankAlgorithm::CheiRank,
                AlgArg::Hits => RankAlgorithm::Hits,
            };
            let opts = RankOptions { alpha, tol, max_iter, unweighted, ..RankOptions::new(net, alg) };
            for v in report::cmd_rank(&mut out, &opts)? {
                let top: Vec<String> = v.order.iter().take(10).map(u16::to_string).collect();
                println!("{:?} after {} iterations, top 10: {}", v.kind, v.iterations, top.join(" "));
            }
        }
        Command::Spectrum { net, alpha, top, percentiles } => {
            let opts = SpectrumOptions { alpha, top, percentiles, ..SpectrumOptions::new(net) };
            let body = report::cmd_spectrum(&mut out, &opts)?;
            println!("lambda_c: {}", body["lambda_c"]);
        }
        Command::Baseline { input, d, strict, shuffle_seed } => {
            let body = report::cmd_baseline(
                &mut out,
                &BaselineOptions { inputs: input, strict, d, seed: shuffle_seed },
            )?;
            println!("{body}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
