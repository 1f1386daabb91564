//! The `qcentre` command line: `hilb`, `presentation`, `verify`, `casimir`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::character::{self, global_cache, CentreOptions, TorusInvariantRecord};
use crate::error::{Error, Result};
use crate::monoid::{hilbert_basis, HilbertBasis, HilbertBasisRecord, TypeClass};
use crate::presentation::{self, generation_check, upsilon_rank, PresentationRecord, Report};
use crate::root_system::{Family, RootSystem};
use crate::uq::element::UqElementRecord;
use crate::uq::ratfunc::RationalFunctionRecord;
use crate::uq::casimir::render_powers;
use crate::uq::{casimir, express_in_powers, hc_project};

/// Environment variable overriding `--cache-dir`.
pub const CACHE_DIR_ENV: &str = "QCENTRE_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qcentre", version, about = "Generators and relations of the centre of U_q(g)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Persist character tables as JSON files in this directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Cartan type letter, A to G.
    #[arg(long = "type")]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert basis of M+ with its classification.
    Hilb(TypeArgs),
    /// Generators and binomial relations of C[M+].
    Presentation(TypeArgs),
    /// Run every check available for the type.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        /// Coordinate cap for the generation check and degree cap for independence.
        #[arg(long, default_value_t = 3)]
        bound: u32,
        /// Compare E6 relations on full characters (takes minutes).
        #[arg(long)]
        e6_full_characters: bool,
        /// Expected Hilbert basis or presentation JSON to compare against.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Casimir element C^(k) of the (m+1)-dimensional U_q(sl2)-module.
    Casimir {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
}

/// Resolved settings of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub family: Option<Family>,
    pub rank: Option<usize>,
    pub bound: u32,
    pub m: u32,
    pub k: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub e6_full_characters: bool,
    pub golden: Option<PathBuf>,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Self {
        let mut cfg = RunConfig {
            command: String::new(),
            family: None,
            rank: None,
            bound: 3,
            m: 0,
            k: 1,
            format: cli.format,
            out: cli.out.clone(),
            cache_dir: std::env::var_os(CACHE_DIR_ENV)
                .map(PathBuf::from)
                .or_else(|| cli.cache_dir.clone()),
            jobs: cli.jobs,
            e6_full_characters: false,
            golden: None,
        };
        let set_type = |cfg: &mut RunConfig, t: &TypeArgs| {
            cfg.family = Some(t.family);
            cfg.rank = Some(t.rank);
        };
        match &cli.command {
            Command::Hilb(t) => {
                cfg.command = "hilb".into();
                set_type(&mut cfg, t);
            }
            Command::Presentation(t) => {
                cfg.command = "presentation".into();
                set_type(&mut cfg, t);
            }
            Command::Verify {
                ty,
                bound,
                e6_full_characters,
                golden,
            } => {
                cfg.command = "verify".into();
                set_type(&mut cfg, ty);
                cfg.bound = *bound;
                cfg.e6_full_characters = *e6_full_characters;
                cfg.golden = golden.clone();
            }
            Command::Casimir { m, k } => {
                cfg.command = "casimir".into();
                cfg.m = *m;
                cfg.k = *k;
            }
        }
        cfg
    }

    fn root_system(&self) -> Result<RootSystem> {
        match (self.family, self.rank) {
            (Some(f), Some(n)) => RootSystem::new(f, n),
            _ => Err(Error::Domain("--type and --rank are required".into())),
        }
    }
}

/// Text or JSON rendering plus the exit code of one command.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn class_name(c: TypeClass) -> &'static str {
    match c {
        TypeClass::TypeI => "I",
        TypeClass::TypeII => "II",
    }
}

fn render_basis(rs: &RootSystem, b: &HilbertBasis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{rs}: type {}, {} generators", class_name(b.class()), b.len());
    let sv: Vec<String> = b.s().iter().map(i64::to_string).collect();
    let _ = writeln!(s, "s = ({})", sv.join(", "));
    for (i, mu) in b.self_conjugate() {
        let _ = writeln!(s, "mu{} = {}", i + 1, mu.weight().pretty());
    }
    for (i, nu) in b.scaled_fundamentals().iter().enumerate() {
        let _ = writeln!(s, "nu{} = {}", i + 1, nu.weight().pretty());
    }
    for (l, bar) in b.pairs() {
        let _ = writeln!(s, "pair {} <-> {}", l.weight().pretty(), bar.weight().pretty());
    }
    let _ = writeln!(s, "elements:");
    for m in b.elements() {
        let _ = writeln!(s, "  {}", m.weight().pretty());
    }
    s
}

pub fn cmd_hilb(cfg: &RunConfig) -> Result<Outcome> {
    let rs = cfg.root_system()?;
    let b = hilbert_basis(&rs);
    let output = match cfg.format {
        Format::Json => json(&b.record())?,
        Format::Text => render_basis(&rs, &b),
    };
    Ok(Outcome { output, code: EXIT_OK })
}

pub fn cmd_presentation(cfg: &RunConfig) -> Result<Outcome> {
    let rs = cfg.root_system()?;
    let p = presentation::presentation(&rs)?;
    let output = match cfg.format {
        Format::Json => json(&p.record())?,
        Format::Text => format!("{rs}: type {}\n{p}", class_name(p.basis().class())),
    };
    Ok(Outcome { output, code: EXIT_OK })
}

#[derive(Serialize)]
struct VerifyRecord {
    #[serde(rename = "type")]
    family: Family,
    rank: usize,
    passed: bool,
    checks: Vec<presentation::Check>,
}

/// Compares a golden Hilbert basis or presentation file with the computed one.
fn golden_check(path: &PathBuf, rs: &RootSystem, b: &HilbertBasis) -> Result<Report> {
    let text = fs::read_to_string(path)?;
    let mut report = Report::default();
    if let Ok(expected) = serde_json::from_str::<HilbertBasisRecord>(&text) {
        report.push(format!("golden Hilbert basis {}", path.display()), expected == b.record());
        return Ok(report);
    }
    let expected: PresentationRecord = serde_json::from_str(&text)?;
    let actual = presentation::presentation(rs)?.record();
    report.push(format!("golden presentation {}", path.display()), expected == actual);
    Ok(report)
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let rs = cfg.root_system()?;
    let b = hilbert_basis(&rs);
    let mut report = Report::default();
    match b.class() {
        TypeClass::TypeII => {
            let p = presentation::build_presentation(b.clone())?;
            report.extend(presentation::verify_relations(&p));
            let opts = CentreOptions {
                e6_full_characters: cfg.e6_full_characters,
            };
            report.extend(character::verify_centre_relations(&rs, opts)?);
            report.push(
                format!("Upsilon has rank {}", rs.rank()),
                upsilon_rank(&b) == rs.rank(),
            );
        }
        TypeClass::TypeI => {
            let r = character::independence_check(&rs, cfg.bound)?;
            report.push(
                format!(
                    "independence: {} monomials of degree <= {}, rank {}",
                    r.monomials, r.degree_bound, r.rank
                ),
                r.independent(),
            );
        }
    }
    let g = generation_check(&rs, cfg.bound as i64);
    let unfactored: Vec<String> = g
        .elements
        .iter()
        .filter(|e| e.count == 0)
        .map(|e| e.weight.pretty())
        .collect();
    report.push(
        format!(
            "generation: {} elements with coords <= {} factor over Hilb(M+){}",
            g.elements.len(),
            cfg.bound,
            if unfactored.is_empty() {
                String::new()
            } else {
                format!("; unfactored: {}", unfactored.join(", "))
            }
        ),
        g.all_factor(),
    );
    if let Some(path) = &cfg.golden {
        report.extend(golden_check(path, &rs, &b)?);
    }
    let passed = report.all_passed();
    let output = match cfg.format {
        Format::Json => json(&VerifyRecord {
            family: rs.family(),
            rank: rs.rank(),
            passed,
            checks: report.checks.clone(),
        })?,
        Format::Text => format!("{rs}\n{report}{}\n", if passed { "all checks passed" } else { "FAILED" }),
    };
    Ok(Outcome {
        output,
        code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}

#[derive(Serialize)]
struct CasimirRecord {
    m: u32,
    k: u32,
    element: UqElementRecord,
    central: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    harish_chandra: Option<TorusInvariantRecord>,
    /// Coefficients of `C^(k)` in powers of `C = C^(1)` for the 2-dimensional module.
    #[serde(skip_serializing_if = "Option::is_none")]
    powers_of_c: Option<Vec<RationalFunctionRecord>>,
}

pub fn cmd_casimir(cfg: &RunConfig) -> Result<Outcome> {
    let c = casimir(cfg.m, cfg.k)?;
    let central = c.is_central();
    let hc = if cfg.k == 1 { Some(hc_project(&c)?) } else { None };
    let powers = if cfg.k > 1 && cfg.m == 1 {
        express_in_powers(&c, &casimir(1, 1)?, cfg.k)
    } else {
        None
    };
    let output = match cfg.format {
        Format::Json => json(&CasimirRecord {
            m: cfg.m,
            k: cfg.k,
            element: c.record(),
            central,
            harish_chandra: hc.as_ref().map(|h| h.record()),
            powers_of_c: powers.as_ref().map(|v| v.iter().map(|x| x.record()).collect()),
        })?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "C^({}) for m = {}: {c}", cfg.k, cfg.m);
            let _ = writeln!(s, "central: {}", if central { "yes" } else { "no" });
            if let Some(h) = &hc {
                let _ = writeln!(s, "HC: {}", render_hc(h));
            }
            if let Some(p) = &powers {
                let _ = writeln!(s, "in powers of C: {}", render_powers(p, "C"));
            }
            s
        }
    };
    Ok(Outcome {
        output,
        code: if central { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}

/// `K^b` notation for rank-one torus elements.
fn render_hc(t: &character::TorusInvariant) -> String {
    let parts: Vec<String> = t
        .terms()
        .iter()
        .rev()
        .map(|(w, c)| {
            let b = w.0[0];
            let k = match b {
                0 => "1".to_string(),
                1 => "K".to_string(),
                _ => format!("K^{b}"),
            };
            if c == &1.into() {
                k
            } else {
                format!("{c}·{k}")
            }
        })
        .collect();
    parts.join(" + ")
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Invariant(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    global_cache().set_dir(cfg.cache_dir.clone());
    let run = || match cfg.command.as_str() {
        "hilb" => cmd_hilb(cfg),
        "presentation" => cmd_presentation(cfg),
        "verify" => cmd_verify(cfg),
        "casimir" => cmd_casimir(cfg),
        other => Err(Error::Domain(format!("unknown command {other}"))),
    };
    match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Parses `args`, runs the command and writes to the given streams; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let cfg = RunConfig::from_cli(&cli);
    match execute(&cfg) {
        Ok(outcome) => {
            let written = match &cfg.out {
                Some(path) => fs::write(path, &outcome.output),
                None => stdout.write_all(outcome.output.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
