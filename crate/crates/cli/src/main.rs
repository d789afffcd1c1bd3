use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use supermf_core::dsl::{parse_diagram, parse_label, render_diagram, ParseError};
use supermf_core::lr::lr_coeff;
use supermf_core::superalg::{graded_component, is_super_mf, subdiagrams};
use supermf_core::verify::cache::DiskCache;
use supermf_core::verify::{run_suite, SuiteReport, SUITES};
use supermf_core::{
    Engine, Error, FormalChar, MFVerdict, Partition, PowerKind, ProductGroup, RepDiagram, RestrictTarget,
};

#[derive(Parser)]
#[command(
    name = "supermf",
    version,
    about = "Exact decompositions and multiplicity-free checks for super symmetric algebras"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Directory of the persistent decomposition cache.
    #[arg(long, global = true, env = "SUPERMF_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Power {
    Sym,
    Ext,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    So,
    Sp,
}

#[derive(Subcommand)]
enum Command {
    /// S^n or ∧^n of an irreducible, e.g. `decompose sym SL2xSL2 std*std 2`.
    Decompose { kind: Power, group: String, weight: String, n: u32 },
    /// V(w1) ⊗ V(w2).
    Tensor { group: String, w1: String, w2: String },
    /// Restriction of the GL(m) irreducible {λ} to SO(m) or Sp(m).
    Branch { m: usize, target: Target, partition: String },
    /// Littlewood–Richardson coefficient c^λ_{μν}.
    Lr { lambda: String, mu: String, nu: String },
    /// Bounded multiplicity-free check of a diagram file.
    CheckMf {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
        /// Also print the component that contains the witness.
        #[arg(long)]
        witness: bool,
    },
    /// Every connected subdiagram, in canonical text form.
    Subdiagrams { file: PathBuf },
    /// Runs built-in regression suites.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        suite: Option<String>,
        #[arg(long)]
        all: bool,
        /// Writes the JSON report, with timings, to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGroup(_)
            | Error::InvalidWeight(_)
            | Error::InvalidPartition(_)
            | Error::PartitionTooLong { .. }
            | Error::InvalidInput(_)
            | Error::UnknownSuite(_) => Failure::Input(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn parse_error(source: &str, e: &ParseError) -> Failure {
    Failure::Input(format!("{source}:{e}"))
}

fn input<T, E: std::fmt::Display>(what: &str, r: std::result::Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{what}: {e}")))
}

fn engine(g: &Global) -> Engine {
    if g.no_cache {
        return Engine::new();
    }
    let dir = g.cache_dir.clone().or_else(default_cache_dir);
    match dir.map(DiskCache::open) {
        Some(Ok(c)) => Engine::with_disk_cache(c),
        Some(Err(e)) => {
            log::warn!("cache disabled: {e}");
            Engine::new()
        }
        None => Engine::new(),
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
    Some(base.join("supermf"))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output types always serialize")
}

fn char_text(c: &FormalChar) -> String {
    format!("group {}\n{}", c.group(), c.to_text())
}

fn emit_char(format: Format, c: &FormalChar) -> String {
    match format {
        Format::Json => to_json(c),
        Format::Text => char_text(c).trim_end().to_string(),
    }
}

fn read_diagram(path: &Path) -> Result<RepDiagram, Failure> {
    let text = input(&path.display().to_string(), std::fs::read_to_string(path))?;
    parse_diagram(&text).map_err(|e| parse_error(&path.display().to_string(), &e))
}

fn verdict_output(format: Format, d: &RepDiagram, v: &MFVerdict, component: Option<&FormalChar>) -> String {
    match format {
        Format::Json => {
            let mut out = json!({ "diagram": d.name(), "verdict": v });
            if let Some(w) = &v.witness {
                out["witness_index"] = json!(w.multiindex.display_for(d));
            }
            if let Some(c) = component {
                out["component"] = serde_json::to_value(c).expect("characters serialize");
            }
            to_json(&out)
        }
        Format::Text => {
            let mut out = format!("diagram {}\nstatus {}\nbound {}\n", d.name(), status_tag(v), v.bound);
            if let Some(w) = &v.witness {
                let label: Vec<String> = w.label.iter().map(|l| l.to_string()).collect();
                let _ = writeln!(
                    out,
                    "witness {} {} {}·{}",
                    w.multiindex.display_for(d),
                    w.multiindex,
                    w.multiplicity,
                    label.join("⊗")
                );
            }
            if let Some(c) = component {
                out.push_str("component\n");
                out.push_str(&char_text(c));
            }
            out.trim_end().to_string()
        }
    }
}

fn status_tag(v: &MFVerdict) -> &'static str {
    if v.is_mf() {
        "mf_up_to_bound"
    } else {
        "not_mf"
    }
}

fn suite_output(format: Format, reports: &[SuiteReport]) -> String {
    match format {
        Format::Json if reports.len() == 1 => reports[0].to_json(false),
        Format::Json => to_json(&reports.iter().map(|r| r.without_timings()).collect::<Vec<_>>()),
        Format::Text => reports.iter().map(|r| r.summary()).collect::<Vec<_>>().join("\n").trim_end().to_string(),
    }
}

/// Runs one command; `Ok` carries stdout and the exit code.
fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = cli.global.format;
    let eng = || engine(&cli.global);
    match cli.command {
        Command::Decompose { kind, group, weight, n } => {
            let g: ProductGroup = input("group", group.parse())?;
            let w = parse_label(&g, &weight).map_err(|e| parse_error("weight", &e))?;
            let kind = match kind {
                Power::Sym => PowerKind::Sym,
                Power::Ext => PowerKind::Ext,
            };
            let c = eng().power(&FormalChar::irreducible(g, w), n, kind)?;
            Ok((emit_char(format, &c), 0))
        }
        Command::Tensor { group, w1, w2 } => {
            let g: ProductGroup = input("group", group.parse())?;
            let a = parse_label(&g, &w1).map_err(|e| parse_error("w1", &e))?;
            let b = parse_label(&g, &w2).map_err(|e| parse_error("w2", &e))?;
            let c = eng().tensor_product(&g, &a, &b)?;
            Ok((emit_char(format, &c), 0))
        }
        Command::Branch { m, target, partition } => {
            let lambda: Partition = input("partition", partition.parse())?;
            let target = match target {
                Target::So => RestrictTarget::So,
                Target::Sp => RestrictTarget::Sp,
            };
            let c = eng().restrict_classical(m, target, &lambda)?;
            Ok((emit_char(format, &c), 0))
        }
        Command::Lr { lambda, mu, nu } => {
            let l: Partition = input("lambda", lambda.parse())?;
            let m: Partition = input("mu", mu.parse())?;
            let n: Partition = input("nu", nu.parse())?;
            let c = lr_coeff(&l, &m, &n);
            Ok((
                match format {
                    Format::Json => {
                        json!({ "lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string(), "coefficient": c })
                            .to_string()
                    }
                    Format::Text => c.to_string(),
                },
                0,
            ))
        }
        Command::CheckMf { file, max_degree, witness } => {
            let d = read_diagram(&file)?;
            let e = eng();
            let v = is_super_mf(&e, &d, max_degree)?;
            let component = match (&v.witness, witness) {
                (Some(w), true) => Some(graded_component(&e, &d, &w.multiindex)?),
                _ => None,
            };
            let code = if v.is_mf() { 0 } else { 3 };
            Ok((verdict_output(format, &d, &v, component.as_ref()), code))
        }
        Command::Subdiagrams { file } => {
            let d = read_diagram(&file)?;
            let texts: Vec<String> = subdiagrams(&d).iter().map(render_diagram).collect();
            Ok((
                match format {
                    Format::Json => to_json(&texts),
                    Format::Text => texts.join("\n").trim_end().to_string(),
                },
                0,
            ))
        }
        Command::Verify { suite, all, report } => {
            let e = eng();
            let names: Vec<String> =
                if all { SUITES.iter().map(|s| s.to_string()).collect() } else { suite.into_iter().collect() };
            let reports = names.iter().map(|n| run_suite(n, &e)).collect::<supermf_core::Result<Vec<_>>>()?;
            if let Some(path) = report {
                let body = if reports.len() == 1 { reports[0].to_json(true) } else { to_json(&reports) };
                input(&path.display().to_string(), std::fs::write(&path, body + "\n"))?;
            }
            let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
            Ok((suite_output(format, &reports), code))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            log::warn!("--jobs ignored: {e}");
        }
    }
    match run(cli) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
