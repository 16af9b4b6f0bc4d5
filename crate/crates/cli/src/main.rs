mod dump;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use fano35_core::fano35::threefold_checks;
use fano35_core::flagdelta::MIN_SAMPLES;
use fano35_core::ratcore::{int, rat};
use fano35_core::{
    a2_counter_check, build_config, certificate, decompose, validate_config, verify_formula_table,
    volume_profile, ConfigKind, Endpoints, Gate, SurfaceConfig,
};
use serde_json::json;

use output::{Format, Report};

#[derive(Parser)]
#[command(name = "fano35", version, about = "Exact verification of the K-stability certificate")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConfigArg {
    A1,
    #[value(name = "2a1")]
    TwoA1,
    A2,
}

impl From<ConfigArg> for ConfigKind {
    fn from(c: ConfigArg) -> Self {
        match c {
            ConfigArg::A1 => ConfigKind::A1,
            ConfigArg::TwoA1 => ConfigKind::TwoA1,
            ConfigArg::A2 => ConfigKind::A2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EndpointsArg {
    Paper,
    Isolated,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Table {
    Svalues,
    Chambers,
    Profiles,
}

fn parse_samples(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a count: {s}"))?;
    if n < MIN_SAMPLES {
        return Err(format!("at least {MIN_SAMPLES} samples are needed, got {n}"));
    }
    Ok(n)
}

fn parse_grid(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a count: {s}"))?;
    if n < 2 {
        return Err("the grid needs at least 2 points".to_string());
    }
    Ok(n)
}

#[derive(Subcommand)]
enum Command {
    /// Validate a fiber surface and check every transcribed display on it.
    VerifySurface {
        #[arg(long, value_enum)]
        config: ConfigArg,
        /// Samples per validity interval.
        #[arg(long, default_value = "9", value_parser = parse_samples)]
        samples: usize,
    },
    /// Intersection table, S_X of the fiber and continuity checks.
    VerifyThreefold,
    /// Run the full chain and the final inequality.
    Certificate {
        #[arg(long, value_enum, default_value_t = EndpointsArg::Paper)]
        endpoints: EndpointsArg,
        #[arg(long, default_value = "9", value_parser = parse_samples)]
        samples: usize,
    },
    /// Write a CSV table over a u-grid on [1, 2].
    Dump {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, default_value = "9", value_parser = parse_grid)]
        grid: usize,
        /// Restrict to one configuration.
        #[arg(long, value_enum)]
        config: Option<ConfigArg>,
    },
}

/// Zariski invariants on a fixed family of effective classes and shape
/// checks on every volume profile.
fn property_gates(cfg: &SurfaceConfig) -> Result<Vec<Gate>> {
    let ak = cfg.anticanonical();
    let mut count = 0;
    let mut bad = Vec::new();
    for a in 0..3 {
        for ci in &cfg.curves {
            for cj in &cfg.curves {
                let cls = ak
                    .scaled(&rat(a, 2))
                    .add_scaled(&ci.class, &int(1))
                    .add_scaled(&cj.class, &rat(1, 2));
                count += 1;
                match decompose(cfg, &cls) {
                    Ok(z) => {
                        let v = z.violations(cfg, &cls);
                        if !v.is_empty() {
                            bad.push(format!("{} + {}/2: {}", ci.name, cj.name, v.join(", ")));
                        }
                    }
                    Err(e) => bad.push(format!("{} + {}/2: {e}", ci.name, cj.name)),
                }
            }
        }
    }
    let zariski = Gate::new(
        format!("{}.properties.zariski", cfg.kind),
        "Zariski decomposition invariants",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{count} effective classes decomposed with no violation")
        } else {
            bad.join("; ")
        },
    );
    let mut shape = Vec::new();
    for u in [int(1), rat(5, 4), rat(3, 2), rat(7, 4), int(2)] {
        for c in &cfg.curves {
            let vp = volume_profile(cfg, &u, &c.name)?;
            let ok = vp.profile.assert_continuous().is_ok()
                && vp.profile.is_non_increasing()?
                && vp.profile.max_degree() <= 2;
            if !ok {
                shape.push(format!("{} at u = {u}", c.name));
            }
        }
    }
    let profiles = Gate::new(
        format!("{}.properties.profiles", cfg.kind),
        "volume profiles",
        shape.is_empty(),
        if shape.is_empty() {
            "continuous, non-increasing, degree at most 2".to_string()
        } else {
            shape.join("; ")
        },
    );
    Ok(vec![zariski, profiles])
}

fn verify_surface(kind: ConfigKind, samples: usize) -> Result<Report> {
    let cfg = build_config(kind);
    let mut gates: Vec<Gate> = validate_config(&cfg)
        .into_iter()
        .map(|v| Gate::new(format!("{kind}.config.{}", v.check), "surface configuration", false, v.detail))
        .collect();
    if gates.is_empty() {
        gates.push(Gate::new(format!("{kind}.config"), "surface configuration", true, "all checks pass"));
    }
    let table = verify_formula_table(&cfg, samples)?;
    gates.extend(table.gates);
    gates.extend(property_gates(&cfg)?);
    let mut notes = Vec::new();
    if kind == ConfigKind::A2 {
        let r = a2_counter_check()?;
        notes.push(r.note.clone());
    }
    Ok(Report::new(
        json!({ "command": "verify-surface", "config": kind.as_str(), "samples": samples }),
        table.fixtures,
        gates,
        notes,
        None,
    ))
}

fn verify_threefold() -> Result<Report> {
    Ok(Report::new(
        json!({ "command": "verify-threefold" }),
        Vec::new(),
        threefold_checks()?,
        Vec::new(),
        None,
    ))
}

fn run_certificate(endpoints: EndpointsArg, samples: usize) -> Result<Report> {
    let endpoints = match endpoints {
        EndpointsArg::Paper => Endpoints::Paper,
        EndpointsArg::Isolated => Endpoints::Isolated,
    };
    let r = certificate(endpoints, samples)?;
    let details = json!({
        "endpoints": r.endpoints,
        "split": r.split,
        "value": r.value,
        "value_approx": r.value_approx,
        "s_x": r.s_x,
        "root_a": r.root_a,
        "root_b": r.root_b,
        "a2": r.a2,
        "certificate_holds": r.certificate_holds,
        "verdict_text": r.verdict_text,
    });
    Ok(Report::new(
        json!({ "command": "certificate", "samples": samples }),
        r.fixtures,
        r.gates,
        vec![r.verdict_text.clone(), r.a2.note.clone()],
        Some(details),
    ))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let report = match cli.command {
        Command::VerifySurface { config, samples } => verify_surface(config.into(), samples)?,
        Command::VerifyThreefold => verify_threefold()?,
        Command::Certificate { endpoints, samples } => run_certificate(endpoints, samples)?,
        Command::Dump { table, grid, config } => {
            let kinds: Vec<ConfigKind> = match config {
                Some(c) => vec![c.into()],
                None => ConfigKind::ALL.to_vec(),
            };
            let text = dump::dump(table, grid, &kinds)?;
            output::emit(&text, cli.output.as_deref())?;
            return Ok(ExitCode::SUCCESS);
        }
    };
    output::emit(&report.render(cli.format)?, cli.output.as_deref())?;
    Ok(if report.refutations() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
