//! Command line front end: construct Radon curves from generator arcs, run
//! the verification suites, evaluate norms, and render figures.
//!
//! Exit codes: 0 success / all checks pass, 1 at least one check failed,
//! 2 invalid input, 3 I/O failure.

mod checks;
mod formats;
mod render;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use radon_plane::{GaugeNorm, RadonCurve, Tolerance, Vec2};

use formats::{read_json, write_text, ArcSpec, CurveFile, Report, FORMAT_VERSION};

#[derive(Debug)]
pub enum CliError {
    /// Unparseable or invalid input (exit 2).
    Input(String),
    /// Filesystem failure (exit 3).
    Io(String),
}

#[derive(Parser)]
#[command(name = "radon", version, about = "Construct and verify Radon curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ToleranceArgs {
    /// Geometric predicate slack.
    #[arg(long, default_value_t = 1e-9)]
    eps_geom: f64,
    /// Norm-comparison slack.
    #[arg(long, default_value_t = 1e-9)]
    eps_norm: f64,
    /// Grid resolution for sweeps.
    #[arg(long, default_value_t = 1024)]
    samples: usize,
}

impl ToleranceArgs {
    fn build(&self) -> Result<Tolerance, CliError> {
        Tolerance::new(self.eps_geom, self.eps_norm, self.samples)
            .map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the closed Radon curve from an arc specification.
    Construct {
        /// Arc specification file (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Output curve file.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV of the support profile (lambda, s, bounds).
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        tolerance: ToleranceArgs,
    },
    /// Run verification suites against a curve or body file.
    Verify {
        /// Curve or body file (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated subset of checks (default: all applicable).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Seed for randomized sweeps (enables the norm-antinorm check).
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the report JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Optional CSV of the bisector defect sweep (sample, defect).
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        tolerance: ToleranceArgs,
    },
    /// Evaluate norm values against a curve or body file.
    Eval {
        /// Curve or body file (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Vector as "a,b".
        #[arg(long)]
        vector: String,
        /// norm | antinorm | birkhoff-companion
        #[arg(long)]
        mode: String,
        #[command(flatten)]
        tolerance: ToleranceArgs,
    },
    /// Render curves and overlays to SVG.
    Render {
        /// Curve or body file(s); repeat for multiple.
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        /// Output SVG path.
        #[arg(long)]
        out: PathBuf,
        /// Overlays: anticircle, conjugate-parallelogram, bisector=px,py.
        #[arg(long)]
        overlay: Vec<String>,
        #[command(flatten)]
        tolerance: ToleranceArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Construct {
            input,
            out,
            csv,
            tolerance,
        } => {
            let tol = tolerance.build()?;
            let spec: ArcSpec = read_json(&input)?;
            let arc = spec.build(&tol)?;
            let curve = RadonCurve::assemble(&arc, &tol)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let file = CurveFile::from_curve(&curve);
            let json = serde_json::to_string_pretty(&file)
                .map_err(|e| CliError::Input(e.to_string()))?;
            write_text(&out, &(json + "\n"))?;
            if let Some(csv_path) = csv {
                write_text(&csv_path, &profile_csv(&arc, tol.samples))?;
            }
            Ok(0)
        }
        Command::Verify {
            input,
            checks: requested,
            seed,
            out,
            csv,
            tolerance,
        } => {
            let tol = tolerance.build()?;
            let file: CurveFile = read_json(&input)?;
            file.validate_header()?;
            let records = checks::run_checks(&file, &requested, &tol, seed)?;
            let report = Report {
                format: FORMAT_VERSION,
                input: input
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default(),
                eps_geom: tol.eps_geom,
                eps_norm: tol.eps_norm,
                checks: records,
            };
            let json = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Input(e.to_string()))?;
            println!("{json}");
            if let Some(path) = out {
                write_text(&path, &(json.clone() + "\n"))?;
            }
            if let Some(path) = csv {
                let body = file.to_body(&tol)?;
                let ring = (tol.samples / 16).clamp(8, 256);
                let rows = checks::bisector_defect_rows(&body, ring, &tol)?;
                let mut text = String::from("sample,defect\n");
                for (k, d) in rows {
                    let _ = writeln!(text, "{k},{d:.12}");
                }
                write_text(&path, &text)?;
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Eval {
            input,
            vector,
            mode,
            tolerance,
        } => {
            let tol = tolerance.build()?;
            let file: CurveFile = read_json(&input)?;
            file.validate_header()?;
            let body = file.to_body(&tol)?;
            let x = parse_vector(&vector)?;
            let g = GaugeNorm::new(body);
            match mode.as_str() {
                "norm" => println!("{:.12}", g.norm(x)),
                "antinorm" => println!("{:.12}", g.antinorm(x)),
                "birkhoff-companion" => {
                    if x == Vec2::ZERO {
                        return Err(CliError::Input(
                            "birkhoff-companion requires a nonzero vector".into(),
                        ));
                    }
                    let (din, dout) = g
                        .body()
                        .supporting_cone(x, &tol)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    let mut companions = vec![g
                        .unit_vector(din)
                        .map_err(|e| CliError::Input(e.to_string()))?];
                    let second = g
                        .unit_vector(dout)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    if !(second - companions[0]).is_zero(tol.eps_geom) {
                        companions.push(second);
                    }
                    for y in companions {
                        println!("{:.12} {:.12}", y.a, y.b);
                    }
                }
                other => {
                    return Err(CliError::Input(format!(
                        "unknown mode '{other}' (norm | antinorm | birkhoff-companion)"
                    )))
                }
            }
            Ok(0)
        }
        Command::Render {
            input,
            out,
            overlay,
            tolerance,
        } => {
            let tol = tolerance.build()?;
            let mut opts = render::RenderOptions {
                anticircle: false,
                conjugate_parallelogram: false,
                bisector_at: None,
            };
            for item in &overlay {
                if item == "anticircle" {
                    opts.anticircle = true;
                } else if item == "conjugate-parallelogram" {
                    opts.conjugate_parallelogram = true;
                } else if let Some(rest) = item.strip_prefix("bisector=") {
                    opts.bisector_at = Some(parse_vector(rest)?);
                } else {
                    return Err(CliError::Input(format!("unknown overlay '{item}'")));
                }
            }
            let mut bodies = Vec::with_capacity(input.len());
            for path in &input {
                let file: CurveFile = read_json(path)?;
                file.validate_header()?;
                bodies.push(file.to_body(&tol)?);
            }
            let svg = render::render(&bodies, &opts, &tol)?;
            write_text(&out, &svg)?;
            Ok(0)
        }
    }
}

fn parse_vector(text: &str) -> Result<Vec2, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(CliError::Input(format!(
            "expected a vector as 'a,b', got '{text}'"
        )));
    }
    let a: f64 = parts[0]
        .parse()
        .map_err(|_| CliError::Input(format!("bad coordinate '{}'", parts[0])))?;
    let b: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Input(format!("bad coordinate '{}'", parts[1])))?;
    Vec2::try_new(a, b).map_err(|e| CliError::Input(e.to_string()))
}

fn profile_csv(arc: &radon_plane::GeneratorArc, samples: usize) -> String {
    let grid = samples.max(8);
    let mut text = String::from("lambda,s,lower_bound,upper_bound\n");
    for k in 0..=grid {
        let t = k as f64 / grid as f64;
        let s = arc.support_value(t).expect("t in range");
        let _ = writeln!(text, "{t:.12},{s:.12},{:.12},1.0", (1.0 - t).max(t));
    }
    text
}
