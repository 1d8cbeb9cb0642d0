//! `hookpair`: verify, sweep and inspect the multiset identities.
//!
//! Exit status: 0 when every check passes, 1 when a counterexample is
//! found, 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hookpair::bijections::{check_theorem, phi, psi, Theorem};
use hookpair::diagram::{arm_slice, build_region, Partition, RegionKind};
use hookpair::dyck::{build_dyck, build_sigma, pair_updown};
use hookpair::projective::{check_projective, is_class_b, shift_ti, ClassBPartition, DiagonalKind, DiagonalSpec};
use hookpair::render::render_ascii;
use hookpair::sweep::{run_sweep, SweepConfig, SweepError};

#[derive(Parser)]
#[command(name = "hookpair", version, about = "Check hook and arm/leg multiset identities on skew diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one identity for one partition
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        /// 1, 2, 3 or proj
        #[arg(long)]
        theorem: Theorem,
        /// Print the full JSON report instead of a summary
        #[arg(long)]
        json: bool,
    },
    /// Check identities for every partition within the bounds
    Sweep {
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        max_n: usize,
        /// Also check the diagonal-split identity for class-B inputs with k <= max-k
        #[arg(long)]
        projective: bool,
        /// Worker threads
        #[arg(long, env = "HOOKPAIR_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a region
    Show {
        #[command(flatten)]
        case: CaseArgs,
        /// D, R, T, V, SQ, Tstar, R1, R2, T1star or T2star
        #[arg(long)]
        region: RegionKind,
        /// Draw the diagonal splitting p from q (class-B inputs only)
        #[arg(long)]
        pq: bool,
        /// Mark the cells with arm length I-1
        #[arg(long, value_name = "I")]
        dots: Option<usize>,
        /// Draw the shifted region T^I instead (class-B inputs, region T)
        #[arg(long, value_name = "I")]
        shift: Option<usize>,
    },
    /// Print the labelled word, Dyck path and pairing for arm index I
    Dyck {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_name = "I")]
        i: usize,
        #[arg(long)]
        json: bool,
    },
    /// Dump a cell bijection as JSON
    #[command(group(ArgGroup::new("which").required(true).args(["phi", "psi"])))]
    Map {
        #[command(flatten)]
        case: CaseArgs,
        /// T -> T*
        #[arg(long)]
        phi: bool,
        /// SQ -> R ⊎ D
        #[arg(long)]
        psi: bool,
    },
}

#[derive(Args)]
struct CaseArgs {
    /// Number of parts
    #[arg(long)]
    k: usize,
    /// Bound on the parts
    #[arg(long)]
    n: usize,
    /// Comma-separated parts; missing trailing parts are zero
    #[arg(long, value_delimiter = ',', default_value = "0")]
    alpha: Vec<usize>,
}

impl CaseArgs {
    fn partition(&self) -> Result<Partition, String> {
        Partition::padded(self.alpha.clone(), self.k, self.n).map_err(|e| e.to_string())
    }

    fn class_b(&self) -> Result<ClassBPartition, String> {
        let p = self.partition()?;
        is_class_b(&p)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{p} is not of class B"))
    }
}

enum Failure {
    Usage(String),
    /// Carries the report that shows the failure.
    Counterexample(String),
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn verify(case: &CaseArgs, theorem: Theorem, as_json: bool) -> Result<String, Failure> {
    let (ok, body, problem) = if theorem == Theorem::Projective {
        let report = check_projective(&case.class_b()?);
        (report.passed(), json(&report), report.first_problem())
    } else {
        let report = check_theorem(&case.partition()?, theorem);
        (report.passed(), json(&report), report.first_problem())
    };
    let alpha = case.partition()?;
    let text = match (as_json, &problem) {
        (true, _) => body + "\n",
        (false, None) => format!("pass: theorem {theorem} holds for {alpha}\n"),
        (false, Some(p)) => format!("fail: theorem {theorem} at {alpha}: {p}\n"),
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure::Counterexample(text))
    }
}

fn sweep(cfg: SweepConfig) -> Result<String, Failure> {
    let report = run_sweep(&cfg).map_err(|e| match e {
        SweepError::InvalidConfig(m) => Failure::Usage(m),
        io @ SweepError::Io { .. } => Failure::Usage(io.to_string()),
    })?;
    let mut text = String::new();
    for (theorem, count) in &report.counts {
        let _ = writeln!(text, "theorem {theorem}: {count} cases");
    }
    let _ = match &report.first_counterexample {
        None => writeln!(text, "pass: {} cases in {:.2?}", report.total(), report.duration),
        Some(c) => writeln!(
            text,
            "fail: theorem {} at {:?} (k = {}, n = {}): {}",
            c.theorem,
            c.alpha,
            c.k,
            c.n,
            c.detail.as_deref().unwrap_or("")
        ),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Counterexample(text))
    }
}

fn show(
    case: &CaseArgs,
    region: RegionKind,
    pq: bool,
    dots: Option<usize>,
    shift: Option<usize>,
) -> Result<String, Failure> {
    let g = match shift {
        Some(i) => {
            if region != RegionKind::T {
                return Err(Failure::Usage("--shift applies to region T only".into()));
            }
            shift_ti(&case.class_b()?, i).map_err(|e| e.to_string())?.cells
        }
        None => build_region(&case.partition()?, region),
    };
    if g.is_empty() {
        return Err(Failure::Usage(format!("region {} is empty for this input", region.tag())));
    }
    let diag = if pq {
        let kind = DiagonalKind::try_from(region).map_err(|e| e.to_string())?;
        Some(DiagonalSpec::new(kind, &case.class_b()?))
    } else {
        None
    };
    let marks = match dots {
        Some(i) => Some(arm_slice(&g, i).map_err(|e| e.to_string())?),
        None => None,
    };
    Ok(render_ascii(&g, diag.as_ref(), marks.as_ref()).map_err(|e| e.to_string())?)
}

fn dyck(case: &CaseArgs, i: usize, as_json: bool) -> Result<String, Failure> {
    let p = case.partition()?;
    let sigma = build_sigma(&p, i).map_err(|e| e.to_string())?;
    let path = build_dyck(&sigma).map_err(|e| e.to_string())?;
    let pairing = pair_updown(&path).map_err(|e| e.to_string())?;
    if as_json {
        let value = serde_json::json!({ "sigma": sigma.to_string(), "path": path, "pairing": pairing });
        return Ok(json(&value) + "\n");
    }
    Ok(format!(
        "sigma_{i}: {sigma}\n{}{}P_{i}: {:?}\n",
        path.render_text(),
        path.render_mountain(),
        pairing.as_slice()
    ))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Verify { case, theorem, json } => verify(&case, theorem, json),
        Command::Sweep { max_k, max_n, projective, jobs, out } => {
            let mut theorems = vec![Theorem::Hooks, Theorem::ArmLegs, Theorem::Symmetric];
            if projective {
                theorems.push(Theorem::Projective);
            }
            let mut cfg = SweepConfig::new(max_k, max_n, theorems);
            cfg.jobs = jobs;
            cfg.output = out;
            sweep(cfg)
        }
        Command::Show { case, region, pq, dots, shift } => show(&case, region, pq, dots, shift),
        Command::Dyck { case, i, json } => dyck(&case, i, json),
        Command::Map { case, phi: use_phi, .. } => {
            let p = case.partition()?;
            let map = if use_phi { phi(&p) } else { psi(&p) };
            let line = serde_json::to_string(&map).expect("map serializes");
            Ok(line + "\n")
        }
    }
}

/// A closed pipe (e.g. `| head`) is not an error worth reporting.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    // clap exits with status 2 on its own usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Counterexample(text)) => {
            emit(&text);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
