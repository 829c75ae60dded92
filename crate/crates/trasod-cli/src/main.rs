//! Command-line front end for the trajectory outlier miner.
//!
//! Reads trajectories and regions from CSV, runs the pipeline, writes the
//! outlier report (and optionally a GeoJSON dump), and prints one summary
//! line per region pair. Exit codes: 0 on success, 1 for input or output
//! problems, 2 for invalid parameters or usage.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use trasod::io::geojson::write_geojson;
use trasod::io::regions::{project_regions, read_regions};
use trasod::io::report::write_report_csv;
use trasod::io::trajectories::read_trajectories;
use trasod::io::CrsMode;
use trasod::model::{Params, DEFAULT_MAX_STOP_SPEED, DEFAULT_MIN_STOP_DURATION};
use trasod::pipeline::{self, PipelineError};

#[derive(Parser)]
#[command(
    name = "trasod",
    version,
    about = "Mine standard paths and semantic outliers from trajectories \
             traveling between regions of interest"
)]
struct Cli {
    /// Trajectory CSV with header tid,x,y,t
    #[arg(long, value_name = "FILE")]
    trajectories: PathBuf,

    /// Region CSV with header rid,name,wkt
    #[arg(long, value_name = "FILE")]
    regions: PathBuf,

    /// Neighborhood radius between candidates, metres
    #[arg(long, value_name = "METRES")]
    max_dist: f64,

    /// Neighbors every point of a standard must have
    #[arg(long, value_name = "COUNT")]
    min_sup: usize,

    /// Departure-time tolerance for synchronized standards, seconds
    #[arg(long, value_name = "SECONDS")]
    time_tolerance: i64,

    /// Speed at or below which a segment counts as stopped, metres per second
    #[arg(long, value_name = "SPEED", default_value_t = DEFAULT_MAX_STOP_SPEED)]
    max_stop_speed: f64,

    /// Shortest stationary episode that counts as a stop, seconds
    #[arg(long, value_name = "SECONDS", default_value_t = DEFAULT_MIN_STOP_DURATION)]
    min_stop_duration: i64,

    /// How input coordinates are interpreted
    #[arg(long, value_enum, default_value_t = CrsArg::Planar)]
    crs: CrsArg,

    /// Output report CSV
    #[arg(long, value_name = "FILE")]
    out: PathBuf,

    /// Optional GeoJSON dump of regions and classified candidates
    #[arg(long, value_name = "FILE")]
    geojson: Option<PathBuf>,

    /// Worker threads; 0 means one per core
    #[arg(long, value_name = "N", default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CrsArg {
    /// x and y are planar metres
    Planar,
    /// x is longitude, y is latitude; projected around the dataset centroid
    Wgs84Local,
}

enum CliError {
    Input(String),
    Params(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Input(_) => ExitCode::from(1),
            CliError::Params(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Params(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let params = Params {
        max_dist: cli.max_dist,
        min_sup: cli.min_sup,
        time_tolerance: cli.time_tolerance,
        max_stop_speed: cli.max_stop_speed,
        min_stop_duration: cli.min_stop_duration,
    };
    params
        .validate()
        .map_err(|e| CliError::Params(e.to_string()))?;

    let crs = match cli.crs {
        CrsArg::Planar => CrsMode::Planar,
        CrsArg::Wgs84Local => CrsMode::Wgs84Local,
    };
    let file =
        read_trajectories(&cli.trajectories, crs).map_err(|e| CliError::Input(e.to_string()))?;
    let mut regions = read_regions(&cli.regions).map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(projection) = &file.projection {
        regions = project_regions(&regions, projection)
            .map_err(|e| CliError::Input(format!("projected {e}")))?;
    }

    let run =
        pipeline::run(&file.trajectories, &regions, &params, cli.threads).map_err(|e| match e {
            PipelineError::Params(p) => CliError::Params(p.to_string()),
            other => CliError::Input(other.to_string()),
        })?;

    for (a, b) in &run.skipped_pairs {
        eprintln!("warning: regions {a} and {b} overlap; their pair is skipped");
    }

    write_report_csv(&cli.out, &run.reports).map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(path) = &cli.geojson {
        write_geojson(path, &run.results, &regions, file.projection.as_ref())
            .map_err(|e| CliError::Input(e.to_string()))?;
    }

    if run.results.is_empty() {
        println!("no candidates between any region pair");
    }
    for result in &run.results {
        println!(
            "{} -> {}: {} candidates, {} standards, {} outliers",
            result.group.start_region,
            result.group.end_region,
            result.group.candidates.len(),
            result.standards.len(),
            result.outliers.len(),
        );
    }
    println!(
        "report: {} ({} outlier rows)",
        cli.out.display(),
        run.reports.len()
    );
    Ok(())
}
