use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use fanforge::decomposition::{branch_depth, branch_width, node_width, WidthCertificate};
use fanforge::io::{matroid_to_json, parse_bundle, parse_matroid, replay_bundle, Bundle};
use fanforge::lollipop::{find_fan_minor, find_lollipop, Rigor, Strategy};
use fanforge::twisted::twist_of;
use fanforge::verify::{run_suite, Mutant, Suite, SuiteConfig};
use fanforge::{Error, Limits, Matroid, Subset};

#[derive(Parser)]
#[command(name = "fanforge", version, about = "Matroid branch-depth, twisted matroids and fan minors")]
struct Cli {
    /// Raise or lower every enumeration capacity to this ground-set size.
    #[arg(long, global = true, env = "FANFORGE_LIMIT")]
    limit: Option<usize>,
    /// Seed for randomized campaigns.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FanStrategy {
    Direct,
    Constructive,
    Opportunistic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LollipopRigor {
    Certified,
    Opportunistic,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of a subset.
    Rank {
        file: PathBuf,
        /// Comma-separated element labels.
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Connectivity function of a subset.
    Lambda {
        file: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Connected components.
    Components { file: PathBuf },
    /// Exact branch-width with a branch-decomposition.
    BranchWidth {
        file: PathBuf,
        /// Exit 1 unless the value equals this.
        #[arg(long = "assert")]
        expect: Option<usize>,
        /// Write the witness here (DOT for `.dot`, JSON otherwise).
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact branch-depth with a (k, k)-decomposition.
    BranchDepth {
        file: PathBuf,
        #[arg(long = "assert")]
        expect: Option<usize>,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Search for an M(F_n) minor and print a certificate bundle.
    FanMinor {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FanStrategy::Direct)]
        strategy: FanStrategy,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find an (a, b)-lollipop minor of M * B.
    Lollipop {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Branch-width bound; values below 3 are raised to 3.
        #[arg(long, default_value_t = 3)]
        w: usize,
        /// Comma-separated base labels; a greedy base by default.
        #[arg(long)]
        base: Option<String>,
        #[arg(long, value_enum, default_value_t = LollipopRigor::Certified)]
        strategy: LollipopRigor,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property suite, or replay a certificate bundle.
    Verify {
        #[arg(long, required_unless_present = "bundle")]
        suite: Option<String>,
        #[arg(long)]
        cases: Option<usize>,
        /// Corrupt the first instance (`family` or `rank`).
        #[arg(long)]
        mutant: Option<String>,
        #[arg(long, conflicts_with = "suite")]
        bundle: Option<PathBuf>,
    },
    /// Re-emit a matroid file: normalized JSON, a DOT fundamental graph, or a summary.
    Convert { file: PathBuf },
}

/// Exit status and output of a command that ran to completion.
struct Outcome {
    code: u8,
    text: String,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { code: 0, text }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Validation(_) => 2,
        Error::Domain(_) | Error::Precondition(_) | Error::Internal(_) => 3,
        Error::Capacity { .. } => 4,
    }
}

fn load(path: &Path) -> fanforge::Result<Matroid> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_matroid(&text)
}

fn labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect()
}

fn subset_of(m: &Matroid, s: &str) -> fanforge::Result<Subset> {
    m.ground().subset(&labels(s))
}

fn write(path: &Path, text: &str) -> fanforge::Result<()> {
    fs::write(path, text).map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn scalar(format: Format, key: &str, value: usize) -> String {
    match format {
        Format::Json => pretty(&json!({ key: value })),
        _ => value.to_string(),
    }
}

fn width_report(
    m: &Matroid,
    cert: &WidthCertificate,
    key: &str,
    format: Format,
    witness: Option<&Path>,
) -> fanforge::Result<String> {
    let g = m.ground();
    let dot = || -> fanforge::Result<Option<String>> {
        if let Some(d) = cert.decomposition() {
            let widths: Vec<usize> = (0..d.tree().len())
                .map(|v| if d.is_internal(v) { node_width(m, d, v).unwrap_or(0) } else { 0 })
                .collect();
            Ok(Some(d.to_dot(g, |v| widths[v])))
        } else if let Some(d) = cert.branch_decomposition() {
            Ok(Some(d.to_dot(g, |s| m.lambda(s).map(|l| l + 1).unwrap_or(0))))
        } else {
            Ok(None)
        }
    };
    let body = json!({ key: cert.value, "witness": cert.witness, "lower_bound_trace": cert.lower_bound_trace });
    if let Some(path) = witness {
        let text = if path.extension().is_some_and(|e| e == "dot") {
            dot()?.unwrap_or_else(|| "graph empty {\n}\n".into())
        } else {
            pretty(&body)
        };
        write(path, &text)?;
    }
    Ok(match format {
        Format::Json => pretty(&body),
        Format::Dot => dot()?.unwrap_or_else(|| "graph empty {\n}\n".into()),
        Format::Text => cert.value.to_string(),
    })
}

fn asserted(value: usize, expect: Option<usize>, text: String) -> Outcome {
    match expect {
        Some(k) if k != value => Outcome { code: 1, text: format!("{text}\nassertion failed: expected {k}, got {value}") },
        _ => Outcome::ok(text),
    }
}

fn run(cli: &Cli) -> fanforge::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Rank { file, set } => {
            let m = load(file)?;
            let r = m.rank(subset_of(&m, set)?)?;
            Ok(Outcome::ok(scalar(format, "rank", r)))
        }
        Command::Lambda { file, set } => {
            let m = load(file)?;
            let l = m.lambda(subset_of(&m, set)?)?;
            Ok(Outcome::ok(scalar(format, "lambda", l)))
        }
        Command::Components { file } => {
            let m = load(file)?;
            let blocks: Vec<Vec<String>> = m.components().into_iter().map(|b| m.ground().names(b)).collect();
            Ok(Outcome::ok(match format {
                Format::Json => pretty(&json!({ "components": blocks })),
                _ => blocks.iter().map(|b| b.join(",")).collect::<Vec<_>>().join("\n"),
            }))
        }
        Command::BranchWidth { file, expect, witness } => {
            let m = load(file)?;
            let cert = branch_width(&m)?;
            let text = width_report(&m, &cert, "branch_width", format, witness.as_deref())?;
            Ok(asserted(cert.value, *expect, text))
        }
        Command::BranchDepth { file, expect, witness } => {
            let m = load(file)?;
            let cert = branch_depth(&m)?;
            let text = width_report(&m, &cert, "branch_depth", format, witness.as_deref())?;
            Ok(asserted(cert.value, *expect, text))
        }
        Command::FanMinor { file, n, strategy, out } => {
            let m = load(file)?;
            let strategy = match strategy {
                FanStrategy::Direct => Strategy::Direct,
                FanStrategy::Constructive => Strategy::Constructive(Rigor::Certified),
                FanStrategy::Opportunistic => Strategy::Constructive(Rigor::Opportunistic),
            };
            match find_fan_minor(&m, *n, strategy)? {
                Some(c) => {
                    let bundle = Bundle::fan(&m, &c)?;
                    if let Some(p) = out {
                        write(p, &bundle.to_json())?;
                    }
                    Ok(Outcome::ok(match format {
                        Format::Text => {
                            let g = m.ground();
                            let path: Vec<&str> = c.path.iter().map(|&v| g.label(v)).collect();
                            format!("base {}\npath {}", g.names(c.base).join(","), path.join(","))
                        }
                        Format::Dot => m.fundamental_graph(c.base)?.to_dot(),
                        Format::Json => bundle.to_json(),
                    }))
                }
                None => Ok(Outcome { code: 1, text: "none".into() }),
            }
        }
        Command::Lollipop { file, a, b, w, base, strategy, out } => {
            let m = load(file)?;
            let base = match base {
                Some(s) => subset_of(&m, s)?,
                None => m.some_base(),
            };
            if !m.is_base(base) {
                return Err(Error::Domain(format!("{:?} is not a base", m.ground().names(base))));
            }
            let tw = twist_of(&m, base)?;
            let rigor = match strategy {
                LollipopRigor::Certified => Rigor::Certified,
                LollipopRigor::Opportunistic => Rigor::Opportunistic,
            };
            let found = find_lollipop(&tw, *a, *b, *w, rigor)?;
            let bundle = Bundle::lollipop(&m, base, &found, *a, *b, None)?;
            if let Some(p) = out {
                write(p, &bundle.to_json())?;
            }
            Ok(Outcome::ok(match format {
                Format::Json => bundle.to_json(),
                Format::Dot => found.lollipop.twisted.graph().to_dot(tw.universe(), base ^ found.twist),
                Format::Text => {
                    let names = found.lollipop.names();
                    format!(
                        "twist {}\nstick {}\nz {}\ncandy {}",
                        m.ground().names(found.twist).join(","),
                        names.stick.join(","),
                        names.z,
                        names.candy.join(",")
                    )
                }
            }))
        }
        Command::Verify { suite, cases, mutant, bundle } => {
            if let Some(p) = bundle {
                let text = fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                let verdict = replay_bundle(&parse_bundle(&text)?)?;
                let code = u8::from(verdict.is_err());
                let text = match (format, &verdict) {
                    (Format::Text, Ok(())) => "valid".to_string(),
                    (Format::Text, Err(e)) => format!("invalid: {e}"),
                    _ => pretty(&json!({ "bundle": p.display().to_string(), "valid": verdict.is_ok(), "failure": verdict.err() })),
                };
                return Ok(Outcome { code, text });
            }
            let suite: Suite = suite.as_deref().unwrap_or_default().parse()?;
            let mut cfg = SuiteConfig::new(suite, cli.seed);
            if let Some(n) = cases {
                cfg = cfg.cases(*n);
            }
            if let Some(mu) = mutant {
                cfg = cfg.mutant(mu.parse::<Mutant>()?);
            }
            let report = run_suite(&cfg)?;
            let text = match format {
                Format::Text => {
                    let mut lines: Vec<String> = report
                        .checks
                        .iter()
                        .map(|c| format!("{} {} instances, {} violations", c.name, c.instances, c.violations))
                        .collect();
                    lines.extend(report.violations.iter().map(|v| format!("violation {} #{}: {}", v.check, v.instance, v.detail)));
                    lines.push(if report.passed { "pass".into() } else { "FAIL".into() });
                    lines.join("\n")
                }
                _ => report.to_json(),
            };
            Ok(Outcome { code: u8::from(!report.passed), text })
        }
        Command::Convert { file } => {
            let m = load(file)?;
            Ok(Outcome::ok(match format {
                Format::Json => matroid_to_json(&m)?,
                Format::Dot => m.fundamental_graph(m.some_base())?.to_dot(),
                Format::Text => format!(
                    "elements {}\nrank {}\nlabels {}",
                    m.len(),
                    m.rank_of_matroid(),
                    m.ground().labels().join(",")
                ),
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.limit {
        if n == 0 {
            eprintln!("error: --limit must be positive");
            return ExitCode::from(2);
        }
        Limits::install(Limits::uniform(n));
    }
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
