//! `geopict`: geometric pictures of monic complex polynomials from the shell.
//!
//! Exit codes: 0 success, 2 unparsable input, 3 on or near a wall,
//! 4 numeric failure.

mod commands;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use geopict::polynomial::{parse_coefficients, parse_expression, Polynomial, DEFAULT_TOL};
use geopict::render::RenderOptions;

use commands::{CliError, CountKind, EnumKind, Format};

#[derive(Parser, Debug)]
#[command(name = "geopict", version, about = "Geometric pictures of monic complex polynomials")]
struct Cli {
    /// Relative tolerance for root finding and wall detection.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PolyArg {
    /// Coefficients, lowest degree first, e.g. "1+1i,0,1" for z^2+1+i.
    #[arg(required_unless_present = "expr", conflicts_with = "expr")]
    coefficients: Option<String>,
    /// Power-basis expression instead, e.g. "z^3-z/10+1".
    #[arg(long)]
    expr: Option<String>,
}

impl PolyArg {
    fn parse(&self) -> Result<Polynomial, CliError> {
        let parsed = match (&self.expr, &self.coefficients) {
            (Some(e), _) => parse_expression(e),
            (None, Some(c)) => parse_coefficients(c),
            (None, None) => return Err(CliError::Parse("no polynomial given".into())),
        };
        parsed.map_err(|e| CliError::Parse(e.to_string()))
    }
}

#[derive(Args, Debug)]
struct DrawArgs {
    /// Half-width of the square viewport; fits the picture when omitted.
    #[arg(long)]
    half_width: Option<f64>,
    /// Tint the regions by the quadrant of their values.
    #[arg(long)]
    regions: bool,
    /// Draw arrowheads along increasing values.
    #[arg(long)]
    orientation: bool,
    /// Leave out the root markers.
    #[arg(long)]
    no_roots: bool,
}

impl DrawArgs {
    fn options(&self) -> RenderOptions {
        RenderOptions {
            half_width: self.half_width,
            show_regions: self.regions,
            show_orientation: self.orientation,
            show_roots: !self.no_roots,
            ..RenderOptions::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Codimension of the stratum and the walls the critical values lie on.
    Classify(PolyArg),
    /// Trace the picture of a bi-regular polynomial (JSON, or SVG with --format svg).
    Picture {
        #[command(flatten)]
        poly: PolyArg,
        #[command(flatten)]
        draw: DrawArgs,
    },
    /// Quaternary-tree signature and root labels of a bi-regular polynomial.
    Signature(PolyArg),
    /// Table of exact counts for degrees up to D_MAX.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        d_max: usize,
    },
    /// All signatures of degree D, one per line.
    Enumerate {
        d: usize,
        #[arg(long, value_enum, default_value_t = EnumKind::Biregular)]
        what: EnumKind,
    },
    /// All walls of degree D by canonical encoding, one per line.
    Walls { d: usize },
    /// Histogram of signatures of N random balanced polynomials of degree D.
    Sample { d: usize, n: u64 },
    /// Draw a picture JSON file ("-" reads standard input) as SVG.
    Render {
        input: PathBuf,
        #[command(flatten)]
        draw: DrawArgs,
    },
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let fmt = |default| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Classify(p) => commands::classify_cmd(&p.parse()?, cli.tol, fmt(Format::Text)),
        Command::Picture { poly, draw } => {
            commands::picture_cmd(&poly.parse()?, cli.tol, fmt(Format::Json), &draw.options())
        }
        Command::Signature(p) => commands::signature_cmd(&p.parse()?, cli.tol, fmt(Format::Text)),
        Command::Count { kind, d_max } => Ok(commands::count_cmd(*kind, *d_max)),
        Command::Enumerate { d, what } => Ok(commands::enumerate_cmd(*d, *what)),
        Command::Walls { d } => Ok(commands::enumerate_cmd(*d, EnumKind::Walls)),
        Command::Sample { d, n } => commands::sample_cmd(*d, *n, cli.seed, cli.tol, fmt(Format::Text)),
        Command::Render { input, draw } => {
            let mut text = String::new();
            let read = if input.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(input).map(|s| text = s)
            };
            read.map_err(|source| CliError::Io { path: input.display().to_string(), source })?;
            commands::render_cmd(&text, &draw.options())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|doc| match &cli.out {
        Some(path) => std::fs::write(path, doc).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{doc}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("geopict: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
