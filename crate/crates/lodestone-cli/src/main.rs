use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use lodestone::{
    convergence_study, escape_path, monte_carlo_escape, partition_corpus, MagnetizedCurve,
};
use lodestone_cli::output::{bench_row, classify_lines, convergence_rows, escape_row, mc_row};
use lodestone_cli::{run_bench, render_svg, CliError, Scene};

#[derive(Parser)]
#[command(name = "lodestone", version, about = "Magnetized curves: escape a convex forest by walking at its boundary")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the hiker's nearest-magnet row for a scene
    Magnetize {
        scene: PathBuf,
        /// Reject a hiker standing exactly on the origin
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        strict_origin: bool,
    },
    /// Plan the hiker's shortest escape and print its row
    Escape {
        scene: PathBuf,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        strict_origin: bool,
    },
    /// Partition scenes into classes of mutually isomorphic magnetizations
    Classify {
        #[arg(required = true)]
        scenes: Vec<PathBuf>,
    },
    /// Monte Carlo escape-length statistics over random hikers
    Mc {
        scene: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        strict_origin: bool,
    },
    /// Time the grid index against a flat scan
    Bench {
        #[arg(long, default_value_t = 100_000)]
        magnets: usize,
        #[arg(long, default_value_t = 10_000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render the scene (and escape, if a hiker is present) to SVG
    Render {
        scene: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        strict_origin: bool,
    },
    /// Compare sampled escape lengths against the analytic exit
    Convergence {
        scene: PathBuf,
        /// Comma-separated sampling resolutions, strictly increasing
        #[arg(long, value_delimiter = ',', required = true)]
        resolutions: Vec<usize>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        // `magnetize` and `escape` print the same row: an escape plan is the
        // hiker's magnetization read as directions.
        Cmd::Magnetize { scene, strict_origin } | Cmd::Escape { scene, strict_origin } => {
            let scene = Scene::load(&scene)?;
            let mc = scene.magnetized(strict_origin)?;
            let plan = escape_path(&mc, scene.hiker()?)?;
            println!("{}", escape_row(&plan));
        }
        Cmd::Classify { scenes } => {
            let mut names = Vec::with_capacity(scenes.len());
            let mut corpus: Vec<MagnetizedCurve> = Vec::with_capacity(scenes.len());
            let mut tol = f64::NEG_INFINITY;
            for path in &scenes {
                let scene = Scene::load(path)?;
                tol = tol.max(scene.ang_tol());
                corpus.push(scene.magnetized(true)?);
                names.push(path.display().to_string());
            }
            let partition = partition_corpus(&corpus, tol)?;
            print!("{}", classify_lines(&partition, &names));
        }
        Cmd::Mc { scene, trials, seed, strict_origin } => {
            let scene = Scene::load(&scene)?;
            let mc = scene.magnetized(strict_origin)?;
            let stats = monte_carlo_escape(&mc, trials, seed)?;
            println!("{}", mc_row(&stats));
        }
        Cmd::Bench { magnets, queries, seed } => {
            let report = run_bench(magnets, queries, seed)?;
            println!("{}", bench_row(&report));
        }
        Cmd::Render { scene, out, strict_origin } => {
            let scene = Scene::load(&scene)?;
            let mc = scene.magnetized(strict_origin)?;
            let plan = match &scene.hiker {
                Some(hiker) => Some(escape_path(&mc, hiker)?),
                None => None,
            };
            std::fs::write(&out, render_svg(&mc, plan.as_ref()))?;
        }
        Cmd::Convergence { scene, resolutions } => {
            let scene = Scene::load(&scene)?;
            let report = convergence_study(&scene.curve, scene.hiker()?, &resolutions)?;
            print!("{}", convergence_rows(&report));
        }
    }
    Ok(())
}
