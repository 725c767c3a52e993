//! The `vshape` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vshape_core::exact_solver::IndexTier;
use vshape_core::{brute_force_optimum, solve_exact, AnchorMode, CoresetMode, SolveOptions, TwoStripMode};

use crate::gen::GenSpec;
use crate::io::{self, Format, InstanceFile, PointSet};
use crate::record::Algorithm;
use crate::run::{self, RunError, SolveConfig};
use crate::svg;

#[derive(Parser, Debug)]
#[command(name = "vshape", version, about = "Minimum-width V-shapes covering planar point sets")]
pub struct Cli {
    /// Worker threads for the PTAS.
    #[arg(long, global = true, env = "VSHAPE_THREADS", default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Write a generated instance.
    Gen(GenArgs),
    /// Certify the exact solver against brute force on a small instance.
    Oracle(OracleArgs),
    /// Time the solvers on generated instances of growing size.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgoArg {
    Exact,
    Approx,
    Ptas,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AnchorArg {
    All,
    Diametral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CoresetArg {
    Exact,
    Kernel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PlugArg {
    ExactSmall,
    Heuristic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum InFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutFormat {
    Json,
    Svg,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Instance file (CSV or JSON).
    pub input: PathBuf,
    /// Input format; defaults to the file extension.
    #[arg(long)]
    pub input_format: Option<InFormat>,
    #[arg(long, value_enum, default_value_t = AlgoArg::Exact)]
    pub algorithm: AlgoArg,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    /// Widen the narrower arm to the wider one.
    #[arg(long)]
    pub balanced: bool,
    /// List every minimum-width V-shape (exact solver).
    #[arg(long)]
    pub all_optima: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub index_tier: u8,
    /// Anchor pairs for the PTAS; by default all pairs for small inputs.
    #[arg(long, value_enum)]
    pub anchor_mode: Option<AnchorArg>,
    #[arg(long, value_enum, default_value_t = CoresetArg::Exact)]
    pub coreset: CoresetArg,
    /// Two-strip plug for approx and ptas; by default picked by size.
    #[arg(long, value_enum)]
    pub plug: Option<PlugArg>,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub format: OutFormat,
    /// Output file; standard output if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
pub enum KindArg {
    Uniform,
    NoisyCorner,
    TwoKgon,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Angle between the rays of a noisy corner, radians.
    #[arg(long, default_value_t = 1.0)]
    pub opening: f64,
    #[arg(long, default_value_t = 0.01)]
    pub sigma: f64,
    #[arg(long, default_value_t = 6)]
    pub k: usize,
    /// Distance between the k-gon centres.
    #[arg(long, default_value_t = 20.0)]
    pub spacing: f64,
    /// Guard distance as a multiple of the k-gon width; 0 for none.
    #[arg(long, default_value_t = 1.5)]
    pub guard: f64,
    #[arg(long, default_value_t = 0.0)]
    pub jitter: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = InFormat::Csv)]
    pub format: InFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl GenArgs {
    pub fn generator(&self) -> GenSpec {
        match self.kind {
            KindArg::Uniform => GenSpec::Uniform { n: self.n },
            KindArg::NoisyCorner => GenSpec::NoisyCorner {
                n: self.n,
                opening: self.opening,
                sigma: self.sigma,
            },
            KindArg::TwoKgon => GenSpec::TwoKgon {
                k: self.k,
                spacing: self.spacing,
                guard: self.guard,
                jitter: self.jitter,
            },
        }
    }
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub input_format: Option<InFormat>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = KindArg::Uniform)]
    pub kind: KindArg,
    /// Instance sizes.
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 200, 400, 800])]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [AlgoArg::Exact, AlgoArg::Approx, AlgoArg::Ptas])]
    pub algorithms: Vec<AlgoArg>,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn in_format(f: Option<InFormat>) -> Option<Format> {
    f.map(|f| match f {
        InFormat::Csv => Format::Csv,
        InFormat::Json => Format::Json,
    })
}

fn algorithm(a: AlgoArg) -> Algorithm {
    match a {
        AlgoArg::Exact => Algorithm::Exact,
        AlgoArg::Approx => Algorithm::Approx,
        AlgoArg::Ptas => Algorithm::Ptas,
    }
}

fn read(path: &Path, f: Option<InFormat>) -> Result<PointSet, RunError> {
    io::parse_points(path, in_format(f)).map_err(|e| RunError::Input(e.to_string()))
}

fn write_out(out: Option<&Path>, bytes: &[u8]) -> Result<(), RunError> {
    match out {
        Some(p) => std::fs::write(p, bytes).map_err(|e| RunError::Input(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| RunError::Input(format!("cannot write output: {e}"))),
    }
}

fn cmd_solve(a: &SolveArgs, threads: usize) -> Result<(), RunError> {
    let ps = read(&a.input, a.input_format)?;
    if ps.duplicates > 0 {
        eprintln!("note: removed {} duplicate points", ps.duplicates);
    }
    let cfg = SolveConfig {
        algorithm: algorithm(a.algorithm),
        eps: a.epsilon,
        balanced: a.balanced,
        all_optima: a.all_optima,
        index_tier: if a.index_tier == 2 {
            IndexTier::Persistent
        } else {
            IndexTier::Scan
        },
        anchor_mode: a.anchor_mode.map(|m| match m {
            AnchorArg::All => AnchorMode::AllPairs,
            AnchorArg::Diametral => AnchorMode::Diametral,
        }),
        coreset: match a.coreset {
            CoresetArg::Exact => CoresetMode::Exact,
            CoresetArg::Kernel => CoresetMode::Kernel,
        },
        plug: a.plug.map(|p| match p {
            PlugArg::ExactSmall => TwoStripMode::ExactSmall,
            PlugArg::Heuristic => TwoStripMode::Heuristic,
        }),
        threads: threads.max(1),
    };
    let s = run::solve(&ps, &cfg)?;
    let bytes = match a.format {
        OutFormat::Json => {
            let mut j = s.record.to_json();
            j.push('\n');
            j.into_bytes()
        }
        OutFormat::Svg => svg::render(Some(&s.vshape), &ps.points).into_bytes(),
    };
    write_out(a.out.as_deref(), &bytes)
}

fn cmd_gen(a: &GenArgs) -> Result<(), RunError> {
    let generator = a.generator();
    let pts = generator.generate(a.seed).map_err(|e| RunError::Input(e.to_string()))?;
    let text = match a.format {
        InFormat::Csv => io::to_csv(&pts),
        InFormat::Json => {
            let mut j = InstanceFile::new(&pts, Some(generator.metadata(a.seed))).to_json();
            j.push('\n');
            j
        }
    };
    write_out(a.out.as_deref(), text.as_bytes())
}

fn cmd_oracle(a: &OracleArgs) -> Result<(), RunError> {
    let ps = read(&a.input, a.input_format)?;
    let o = brute_force_optimum(&ps.points)?;
    let e = solve_exact(&ps.points, &SolveOptions::default())?;
    let diam = vshape_core::geom::diameter_brute(&ps.points);
    let agree = (o.width - e.width).abs() <= 1e-6 * diam.max(f64::MIN_POSITIVE);
    let out = serde_json::json!({
        "n_points": ps.points.len(),
        "oracle_width": o.width,
        "exact_width": e.width,
        "diameter": diam,
        "agree": agree,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    if agree {
        Ok(())
    } else {
        Err(RunError::Internal("exact solver disagrees with the oracle".into()))
    }
}

fn cmd_bench(a: &BenchArgs, threads: usize) -> Result<(), RunError> {
    println!("{:<13} {:>8} {:<7} {:>14} {:>12}", "kind", "n", "algo", "width", "ms");
    for &n in &a.sizes {
        let g = GenArgs {
            kind: a.kind,
            n,
            opening: 1.0,
            sigma: 0.01,
            k: n / 2,
            spacing: 20.0,
            guard: 1.5,
            jitter: 0.0,
            seed: a.seed,
            format: InFormat::Csv,
            out: None,
        };
        let pts = g.generator().generate(a.seed).map_err(|e| RunError::Input(e.to_string()))?;
        let ps = PointSet {
            points: vshape_core::geom::dedup_points(&pts),
            duplicates: 0,
            metadata: None,
        };
        for &al in &a.algorithms {
            let cfg = SolveConfig {
                algorithm: algorithm(al),
                eps: a.epsilon,
                threads,
                ..Default::default()
            };
            let t = Instant::now();
            let s = run::solve(&ps, &cfg)?;
            println!(
                "{:<13} {:>8} {:<7} {:>14.9} {:>12.1}",
                g.generator().name(),
                ps.points.len(),
                format!("{al:?}").to_lowercase(),
                s.record.width,
                t.elapsed().as_secs_f64() * 1e3
            );
        }
    }
    Ok(())
}

/// Runs the command line; returns the process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let r = match &cli.command {
        Command::Solve(a) => cmd_solve(a, cli.threads),
        Command::Gen(a) => cmd_gen(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Bench(a) => cmd_bench(a, cli.threads),
    };
    match r {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("vshape: {e}");
            e.exit_code()
        }
    }
}
