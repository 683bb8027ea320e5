mod bench;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use cubesize::generic::{box_shape_bruteforce_with, lattice_size_bruteforce_with, OracleConfig};
use cubesize::{LatticePolytope, Mode3D};
use num_bigint::BigInt;

use report::{image_points, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("unsupported dimension {0}: only 2 and 3 are handled")]
    Unsupported(usize),
    #[error("oracle budget of {0} nodes exhausted")]
    Budget(u64),
    #[error("oracle disagrees: {0}")]
    Mismatch(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(cubesize::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Budget(_) => 5,
            CliError::Core(cubesize::Error::UnsupportedDimension(_)) => 4,
            CliError::Core(cubesize::Error::BudgetExhausted { .. }) => 5,
            CliError::Core(_) | CliError::Internal(_) => 1,
        }
    }
}

impl From<cubesize::Error> for CliError {
    fn from(e: cubesize::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Lattice size with a map into the cube [0, ls]^d
    Size,
    /// Lattice width (and w2 in 3D)
    Width,
    /// Minimal box [0, w] x [0, ls] or [0, w] x [0, w2] x [0, ls]
    Box,
    /// Lattice size by brute-force enumeration
    Oracle,
    /// Random instances, fast algorithm against the oracle
    Bench,
}

/// Lattice size of lattice polygons and 3D lattice polytopes.
///
/// Input files start with a header line "d n" followed by n rows of d
/// integers.
#[derive(Debug, Parser)]
#[command(name = "cubesize", version)]
pub struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Polytope file (not used by bench)
    path: Option<PathBuf>,
    /// Emit a single JSON object
    #[arg(long)]
    json: bool,
    /// Cross-check against the brute-force oracle
    #[arg(long)]
    verify: bool,
    /// Node cap for the oracle search
    #[arg(long, default_value_t = OracleConfig::default().budget)]
    budget: u64,
    /// Disable the early exit of the 3D loop
    #[arg(long = "naive-3d")]
    naive_3d: bool,
    /// Report all timings as zero, making output byte-identical across runs
    #[arg(long = "no-timing")]
    no_timing: bool,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long = "coord-max", default_value_t = 6)]
    coord_max: i64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl Args {
    fn mode(&self) -> Mode3D {
        if self.naive_3d {
            Mode3D::Naive
        } else {
            Mode3D::Refined
        }
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            budget: self.budget,
        }
    }

    fn ms(&self, start: Instant) -> f64 {
        if self.no_timing {
            0.0
        } else {
            start.elapsed().as_secs_f64() * 1e3
        }
    }
}

fn load(args: &Args) -> Result<LatticePolytope, CliError> {
    let path = args
        .path
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing polytope file".into()))?;
    let p = input::read_polytope(path)?;
    match p.dim() {
        2 | 3 => Ok(p),
        d => Err(CliError::Unsupported(d)),
    }
}

/// Size, width and box reports share one computation; they differ in which
/// certificate is shown and what `--verify` compares.
fn fast_report(args: &Args, p: &LatticePolytope) -> Result<Report, CliError> {
    let start = Instant::now();
    let (size, rect) = match p.dim() {
        2 => (
            cubesize::lattice_size_2d(p)?,
            cubesize::minimal_rectangle_2d(p)?,
        ),
        _ => (
            cubesize::lattice_size_3d_with(p, args.mode())?,
            cubesize::minimal_box_3d_with(p, args.mode())?,
        ),
    };
    let ms = args.ms(start);
    if size.value != rect.shape[p.dim() - 1] {
        return Err(CliError::Internal("size and box disagree".into()));
    }
    let map = match args.command {
        Command::Size => size.map.clone(),
        _ => rect.map.clone(),
    };
    let w2 = (p.dim() == 3).then(|| rect.shape[1].clone());

    let oracle_agrees = if args.verify {
        Some(verify(args, p, &size.value, &rect.shape)?)
    } else {
        None
    };
    Ok(Report {
        dim: p.dim(),
        ls: size.value.clone(),
        w: Some(rect.shape[0].clone()),
        w2,
        image: image_points(p, &map),
        map,
        iterations: size.iterations,
        oracle_agrees,
        nodes: None,
        inconclusive: None,
        ms,
    })
}

fn verify(
    args: &Args,
    p: &LatticePolytope,
    ls: &BigInt,
    shape: &[BigInt],
) -> Result<bool, CliError> {
    Ok(match args.command {
        Command::Size => {
            let run = lattice_size_bruteforce_with(p, &args.oracle())?;
            if !run.conclusive {
                return Err(CliError::Budget(args.budget));
            }
            &run.certificate.value == ls
        }
        _ => box_shape_bruteforce_with(p, &args.oracle())? == shape,
    })
}

fn oracle_report(args: &Args, p: &LatticePolytope) -> Result<Report, CliError> {
    let start = Instant::now();
    let run = lattice_size_bruteforce_with(p, &args.oracle())?;
    let ms = args.ms(start);
    let map = run.certificate.map.clone();
    Ok(Report {
        dim: p.dim(),
        ls: run.certificate.value.clone(),
        w: None,
        w2: None,
        image: image_points(p, &map),
        map,
        iterations: run.certificate.iterations,
        oracle_agrees: None,
        nodes: Some(run.nodes),
        inconclusive: Some(!run.conclusive),
        ms,
    })
}

fn emit(args: &Args, report: &Report) -> Result<(), CliError> {
    report.check()?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn run(args: &Args) -> Result<(), CliError> {
    match args.command {
        Command::Bench => bench::run(args),
        Command::Oracle => {
            let p = load(args)?;
            let report = oracle_report(args, &p)?;
            emit(args, &report)?;
            if report.inconclusive == Some(true) {
                return Err(CliError::Budget(args.budget));
            }
            Ok(())
        }
        Command::Size | Command::Width | Command::Box => {
            let p = load(args)?;
            let report = fast_report(args, &p)?;
            emit(args, &report)?;
            if report.oracle_agrees == Some(false) {
                return Err(CliError::Mismatch(
                    "brute-force result differs from the fast algorithm".into(),
                ));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cubesize: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
