use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dirac1d_cli::{
    build_params, gamma_values, spectrum_csv, verification_grid, verify_outputs,
    wavefunction_csv, zeromode_outputs,
};
use dirac1d_core::oracle::VerifyMode;
use dirac1d_core::solution::Region;

/// Bound states of a spin-1/2 particle in a linearly rising scalar potential
/// on a line: closed-form spectrum curves, normalized eigenfunctions,
/// zero-energy solutions, and a finite-difference audit of the formulas.
#[derive(Parser)]
#[command(name = "dirac1d", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PhysicalArgs {
    /// Particle mass m
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Speed of light c
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    /// Reduced Planck constant
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Constant part of the potential
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    v0: f64,
    /// Slope of the potential (nonzero)
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    gamma: f64,
    /// Output file path (default ./out/<command>.csv or .json)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionChoice {
    Both,
    Pos,
    Neg,
}

impl RegionChoice {
    fn regions(self) -> Vec<Region> {
        match self {
            RegionChoice::Both => vec![Region::PositiveX, Region::NegativeX],
            RegionChoice::Pos => vec![Region::PositiveX],
            RegionChoice::Neg => vec![Region::NegativeX],
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energy curves over a slope sweep (CSV)
    Spectrum {
        #[command(flatten)]
        phys: PhysicalArgs,
        /// Smallest slope of the sweep
        #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
        gamma_min: f64,
        /// Largest slope of the sweep
        #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
        gamma_max: f64,
        /// Sweep increment
        #[arg(long, default_value_t = 0.05)]
        gamma_step: f64,
        /// Comma-separated level indices
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        levels: Vec<u32>,
        /// Half-line convention to emit
        #[arg(long, value_enum, default_value = "both")]
        region: RegionChoice,
    },
    /// Normalized bound-state profiles on a symmetric grid (CSV)
    Wavefunction {
        #[command(flatten)]
        phys: PhysicalArgs,
        /// Comma-separated level indices
        #[arg(long = "n", value_delimiter = ',', default_value = "1,2,3")]
        n: Vec<u32>,
        /// Lower end of the sampling range
        #[arg(long, default_value_t = -8.0, allow_hyphen_values = true)]
        zmin: f64,
        /// Upper end of the sampling range
        #[arg(long, default_value_t = 8.0, allow_hyphen_values = true)]
        zmax: f64,
        /// Number of samples
        #[arg(long, default_value_t = 801)]
        points: usize,
    },
    /// Zero-energy solution pair with a normalizability summary (CSV)
    Zeromode {
        #[command(flatten)]
        phys: PhysicalArgs,
        /// Half width of the sampling range
        #[arg(long, default_value_t = 6.0)]
        half_width: f64,
        /// Number of samples
        #[arg(long, default_value_t = 481)]
        points: usize,
    },
    /// Audit the closed-form levels against a finite-difference solver (JSON)
    Verify {
        #[command(flatten)]
        phys: PhysicalArgs,
        /// Highest audited level index
        #[arg(long, default_value_t = 7)]
        nmax: u32,
        /// Finite-difference nodes spanning the box, walls included (odd)
        #[arg(long, default_value_t = 4001)]
        grid_points: usize,
        /// Box half width (default: 15 confinement lengths)
        #[arg(long)]
        half_width: Option<f64>,
        /// Exit with code 3 when the solver flags the box as too small
        #[arg(long)]
        strict: bool,
    },
}

fn write_output(
    out: Option<PathBuf>,
    default_name: &str,
    contents: &str,
) -> std::io::Result<PathBuf> {
    let path = out.unwrap_or_else(|| PathBuf::from("out").join(default_name));
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(&path, contents)?;
    Ok(path)
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Spectrum {
            phys,
            gamma_min,
            gamma_max,
            gamma_step,
            levels,
            region,
        } => {
            let params = build_params(phys.mass, phys.c, phys.hbar, phys.v0, phys.gamma)?;
            let gammas = gamma_values(gamma_min, gamma_max, gamma_step)?;
            let csv = spectrum_csv(&params, &gammas, &levels, &region.regions())?;
            let path = write_output(phys.out, "spectrum.csv", &csv)?;
            println!("wrote {}", path.display());
        }
        Command::Wavefunction {
            phys,
            n,
            zmin,
            zmax,
            points,
        } => {
            let params = build_params(phys.mass, phys.c, phys.hbar, phys.v0, phys.gamma)?;
            let csv = wavefunction_csv(&params, &n, zmin, zmax, points)?;
            let path = write_output(phys.out, "wavefunction.csv", &csv)?;
            println!("wrote {}", path.display());
        }
        Command::Zeromode {
            phys,
            half_width,
            points,
        } => {
            let params = build_params(phys.mass, phys.c, phys.hbar, phys.v0, phys.gamma)?;
            let output = zeromode_outputs(&params, half_width, points)?;
            let path = write_output(phys.out, "zeromode.csv", &output.csv)?;
            println!("wrote {}", path.display());
            print!("{}", output.summary);
        }
        Command::Verify {
            phys,
            nmax,
            grid_points,
            half_width,
            strict,
        } => {
            let params = build_params(phys.mass, phys.c, phys.hbar, phys.v0, phys.gamma)?;
            let grid = verification_grid(&params, half_width, grid_points)?;
            let output = verify_outputs(&params, &grid, nmax, VerifyMode::Formulas)?;
            let path = write_output(phys.out, "verify.json", &output.json)?;
            println!("wrote {}", path.display());
            print!("{}", output.summary);
            if strict && output.domain_warning {
                eprintln!("strict mode: eigenvector amplitude reaches the box wall; enlarge --half-width");
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
