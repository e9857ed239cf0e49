use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;
mod output;

use commands::{AtlasName, GeodesicArgs, Globals, Solver};
use error::CliError;
use output::Report;

/// Geometry of quantum state space: Fubini-Study distances, Bloch-sphere
/// geodesics, circle atlases and geometric phases.
#[derive(Parser)]
#[command(name = "raysphere", version)]
struct Cli {
    /// Seed for the ChaCha8 generator used by sampling commands.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of samples for sampling commands.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Parallelize sampling loops (results are identical).
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Fubini-Study distance between two states (inline JSON or file).
    Fsdist { a: String, b: String },
    /// Geodesic between two points of the Z plane.
    Geodesic {
        #[arg(long, value_parser = commands::parse_point, allow_hyphen_values = true)]
        from: (f64, f64),
        #[arg(long, value_parser = commands::parse_point, allow_hyphen_values = true)]
        to: (f64, f64),
        #[arg(long, default_value_t = 64)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Solver::Minimize)]
        solver: Solver,
        #[arg(long, default_value_t = 100_000)]
        max_iterations: usize,
        /// Also write the sampled curve as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Round-trip, coverage and transition checks of a circle atlas.
    AtlasCheck {
        #[arg(long, value_enum)]
        atlas: AtlasName,
    },
    /// Local coordinates of a circle point in every chart containing it.
    Chart {
        #[arg(long, value_enum)]
        atlas: AtlasName,
        #[arg(long, value_parser = commands::parse_point, allow_hyphen_values = true)]
        point: Option<(f64, f64)>,
        #[arg(long, allow_hyphen_values = true)]
        angle: Option<f64>,
    },
    /// Euclidean and sphere metric residuals at random points.
    MetricCheck {
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Pancharatnam phase and solid angle of a closed loop of states.
    Phase {
        #[arg(long = "loop")]
        loop_file: String,
    },
    /// Level set |Ψ₁,₁|² = k² and its circle manifold.
    Locus {
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, allow_hyphen_values = true)]
        coeff: Option<f64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(Report, Option<PathBuf>), CliError> {
    let g = Globals {
        seed: cli.seed,
        samples: cli.samples,
        parallel: cli.parallel,
    };
    Ok(match cli.command {
        Command::Fsdist { a, b } => (commands::fsdist(&a, &b)?, None),
        Command::Geodesic {
            from,
            to,
            points,
            solver,
            max_iterations,
            csv,
        } => {
            let args = GeodesicArgs {
                from,
                to,
                points,
                solver,
                max_iterations,
            };
            (commands::geodesic(&args)?, csv)
        }
        Command::AtlasCheck { atlas } => (commands::atlas_check(atlas, &g)?, None),
        Command::Chart {
            atlas,
            point,
            angle,
        } => (commands::chart(atlas, point, angle)?, None),
        Command::MetricCheck { csv } => (commands::metric_check(&g)?, csv),
        Command::Phase { loop_file } => (commands::phase(&loop_file)?, None),
        Command::Locus { k, r, coeff, csv } => (commands::locus(k, r, coeff, &g)?, csv),
    })
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.payload());
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            return fail(&CliError::Usage(first.to_owned()));
        }
    };
    let format = cli.output;
    let (report, csv_path) = match run(cli) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if let Some(path) = csv_path {
        let Some(table) = &report.table else {
            return fail(&CliError::Usage("this command has no CSV table".into()));
        };
        if let Err(e) = std::fs::write(&path, table.to_csv()) {
            return fail(&CliError::Io(format!("{}: {e}", path.display())));
        }
    }
    let text = match format {
        Format::Json => report.json(),
        Format::Csv => report.csv(),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
