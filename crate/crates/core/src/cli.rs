//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::classify::{self, Classification};
use crate::corpus::{default_corpus, Family, NamedMonoid};
use crate::decomposition::{self, DecompositionError, DecompositionReport};
use crate::format::{self, FormatError};
use crate::ideal::{self, enumerate_ideals, Ideal, IdealError, IdealLattice};
use crate::localization::{self, LocalizationError, MultiplicativeSet};
use crate::monoid::{FiniteMonoid, MonoidError};
use crate::theorems::{self, SuiteConfig, SuiteError, UserHom};
use crate::{Limits, MAX_ELEMENTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

pub const BUDGET_ENV: &str = "MONOID_IDEALS_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "monoid-ideals",
    version,
    about = "Ideal theory of finite pointed commutative monoids"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: OutputFormat,
    #[arg(long, global = true, default_value_t = MAX_ELEMENTS)]
    pub max_elements: usize,
    #[arg(long, global = true, default_value_t = ideal::DEFAULT_MAX_IDEALS)]
    pub max_ideals: usize,
    /// classify: list every minimal irreducible ideal over each proper
    /// ideal. decompose: decompose every ideal.
    #[arg(long, global = true)]
    pub all: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MonoidArg {
    /// Cayley-table file.
    #[arg(long)]
    pub monoid: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a Cayley table is a pointed commutative monoid.
    Validate(MonoidArg),
    /// List all ideals in canonical order.
    Enumerate(MonoidArg),
    /// Classify one ideal, or every ideal.
    Classify {
        #[command(flatten)]
        input: MonoidArg,
        /// Generators of the ideal, comma separated.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Radical of an ideal.
    Radical {
        #[command(flatten)]
        input: MonoidArg,
        #[arg(long)]
        ideal: String,
    },
    /// Colon (I:S) of an ideal by a set.
    Colon {
        #[command(flatten)]
        input: MonoidArg,
        #[arg(long)]
        ideal: String,
        /// The divisor set S, comma separated.
        #[arg(long)]
        by: String,
    },
    /// Localize at a multiplicatively closed set.
    Localize {
        #[command(flatten)]
        input: MonoidArg,
        /// Members of S, comma separated.
        #[arg(long)]
        set: String,
        /// Append the ideal correspondence reports.
        #[arg(long)]
        check: bool,
    },
    /// Irreducible and primary decompositions.
    Decompose {
        #[command(flatten)]
        input: MonoidArg,
        /// Generators of the ideal; with `--all` instead, every ideal.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Run the theorem suite over the default corpus or given monoids.
    CheckTheorems {
        /// Cayley files replacing the default corpus; repeatable.
        #[arg(long)]
        monoid: Vec<PathBuf>,
        /// Homomorphism files; repeatable.
        #[arg(long)]
        hom: Vec<PathBuf>,
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a generated monoid as a Cayley table.
    Generate {
        #[arg(value_enum)]
        family: GenFamily,
        param: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Zn,
    Chain,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits, CliError> {
    if cli.max_elements == 0 || cli.max_elements > MAX_ELEMENTS {
        return Err(CliError::Usage(format!(
            "--max-elements must be in 1..={MAX_ELEMENTS}"
        )));
    }
    if cli.max_ideals == 0 {
        return Err(CliError::Usage("--max-ideals must be positive".into()));
    }
    let mut limits = Limits {
        max_elements: cli.max_elements,
        max_ideals: cli.max_ideals,
        ..Limits::default()
    };
    if let Ok(v) = std::env::var(BUDGET_ENV) {
        limits.antichain_budget = v.trim().parse().ok().filter(|&b| b > 0).ok_or_else(|| {
            CliError::Usage(format!(
                "{BUDGET_ENV} must be a positive integer, got {v:?}"
            ))
        })?;
    }
    Ok(limits)
}

fn load(path: &Path, limits: &Limits) -> Result<FiniteMonoid, CliError> {
    let m = format::read_cayley(path).map_err(|e| match e {
        FormatError::Io { .. } => CliError::Format(e),
        other => CliError::Input {
            path: path.display().to_string(),
            message: other.to_string(),
        },
    })?;
    if m.size() > limits.max_elements {
        return Err(CliError::Input {
            path: path.display().to_string(),
            message: format!(
                "{} elements exceed --max-elements {}",
                m.size(),
                limits.max_elements
            ),
        });
    }
    Ok(m)
}

/// Comma-separated element indices or labels.
fn parse_elements(m: &FiniteMonoid, text: &str) -> Result<ElemSet, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .filter(|&i| i < m.size())
                .or_else(|| m.index_of(t))
                .ok_or_else(|| CliError::Usage(format!("unknown element {t:?}")))
        })
        .collect()
}

fn parse_ideal(m: &FiniteMonoid, text: &str) -> Result<Ideal, CliError> {
    Ok(ideal::generate(m, parse_elements(m, text)?)?)
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn labelled(m: &FiniteMonoid, s: ElemSet) -> String {
    let names: Vec<&str> = s.iter().map(|a| m.label(a)).collect();
    format!("{{{}}}", names.join(","))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let limits = limits(cli)?;
    let json = cli.format == OutputFormat::Json;
    match &cli.command {
        Command::Validate(input) => {
            let m = load(&input.monoid, &limits)?;
            if json {
                emit_json(
                    out,
                    &json!({
                        "schema": theorems::SCHEMA_VERSION,
                        "valid": true,
                        "size": m.size(),
                        "identity": m.identity(),
                        "zero": m.zero(),
                        "units": m.units().to_vec(),
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "valid: {} elements, identity {}, zero {}, units {}",
                    m.size(),
                    m.label(m.identity()),
                    m.label(m.zero()),
                    labelled(&m, m.units())
                )?;
            }
        }
        Command::Enumerate(input) => {
            let m = load(&input.monoid, &limits)?;
            let lat = enumerate_ideals(&m, limits.max_ideals)?;
            if json {
                emit_json(
                    out,
                    &json!({
                        "schema": theorems::SCHEMA_VERSION,
                        "count": lat.len(),
                        "ideals": lat.ideals(),
                    }),
                )?;
            } else {
                for i in lat.iter() {
                    writeln!(out, "{}", labelled(&m, i.members()))?;
                }
                writeln!(out, "{} ideals", lat.len())?;
            }
        }
        Command::Classify { input, ideal } => {
            let m = load(&input.monoid, &limits)?;
            let lat = enumerate_ideals(&m, limits.max_ideals)?;
            let targets = match ideal {
                Some(text) => vec![parse_ideal(&m, text)?],
                None => lat.ideals().to_vec(),
            };
            let records = targets
                .iter()
                .map(|i| classification_record(&m, i, &lat, cli.all))
                .collect::<Result<Vec<_>, _>>()?;
            if json {
                emit_json(
                    out,
                    &json!({ "schema": theorems::SCHEMA_VERSION, "ideals": records }),
                )?;
            } else {
                for r in &records {
                    write_classification(out, &m, r)?;
                }
            }
        }
        Command::Radical { input, ideal } => {
            let m = load(&input.monoid, &limits)?;
            let i = parse_ideal(&m, ideal)?;
            let r = ideal::radical(&m, &i)?;
            if json {
                emit_json(
                    out,
                    &json!({ "schema": theorems::SCHEMA_VERSION, "ideal": i, "radical": r }),
                )?;
            } else {
                writeln!(
                    out,
                    "rad {} = {}",
                    labelled(&m, i.members()),
                    labelled(&m, r.members())
                )?;
            }
        }
        Command::Colon { input, ideal, by } => {
            let m = load(&input.monoid, &limits)?;
            let i = parse_ideal(&m, ideal)?;
            let s = parse_elements(&m, by)?;
            let c = ideal::colon(&m, &i, s)?;
            if json {
                emit_json(
                    out,
                    &json!({
                        "schema": theorems::SCHEMA_VERSION,
                        "ideal": i,
                        "by": s.to_vec(),
                        "colon": c,
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "({}:{}) = {}",
                    labelled(&m, i.members()),
                    labelled(&m, s),
                    labelled(&m, c.members())
                )?;
            }
        }
        Command::Localize { input, set, check } => {
            let m = load(&input.monoid, &limits)?;
            let s = MultiplicativeSet::new(&m, parse_elements(&m, set)?)?;
            return localize_command(&m, &s, *check, json, &limits, out, err);
        }
        Command::Decompose { input, ideal } => {
            let m = load(&input.monoid, &limits)?;
            let lat = enumerate_ideals(&m, limits.max_ideals)?;
            let targets = match (ideal, cli.all) {
                (Some(text), _) => vec![parse_ideal(&m, text)?],
                (None, true) => lat.ideals().to_vec(),
                (None, false) => {
                    return Err(CliError::Usage("decompose needs --ideal or --all".into()))
                }
            };
            let records = targets
                .iter()
                .map(|i| decomposition_record(&m, i, &lat))
                .collect::<Result<Vec<_>, _>>()?;
            if json {
                emit_json(
                    out,
                    &json!({ "schema": theorems::SCHEMA_VERSION, "decompositions": records }),
                )?;
            } else {
                for r in &records {
                    write_decomposition(out, &m, r)?;
                }
            }
        }
        Command::CheckTheorems {
            monoid,
            hom,
            theorem,
            seed,
        } => {
            return check_theorems(monoid, hom, theorem.clone(), *seed, json, limits, out);
        }
        Command::Generate { family, param } => {
            let family = match family {
                GenFamily::Zn => Family::Zn(*param),
                GenFamily::Chain => Family::Chain(*param),
            };
            let m = family.build()?;
            if json {
                emit_json(
                    out,
                    &json!({
                        "schema": theorems::SCHEMA_VERSION,
                        "name": family.to_string(),
                        "size": m.size(),
                        "identity": m.identity(),
                        "zero": m.zero(),
                        "labels": m.labels(),
                        "table": m.rows(),
                    }),
                )?;
            } else {
                write!(out, "# {family}\n{}", format::write_cayley(&m))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct ClassificationRecord {
    #[serde(flatten)]
    classification: Classification,
    /// Minimal irreducible ideals over a proper ideal: the first, or all
    /// with `--all`.
    minimal_irreducible_over: Vec<Ideal>,
}

fn classification_record(
    m: &FiniteMonoid,
    i: &Ideal,
    lat: &IdealLattice,
    all: bool,
) -> Result<ClassificationRecord, CliError> {
    let minimal_irreducible_over = if classify::is_proper(m, i) {
        let mut over = classify::minimal_irreducibles_over(m, i, lat)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        if !all {
            over.truncate(1);
        }
        over
    } else {
        Vec::new()
    };
    Ok(ClassificationRecord {
        classification: classify::classify(m, i, lat),
        minimal_irreducible_over,
    })
}

fn write_classification(
    out: &mut dyn Write,
    m: &FiniteMonoid,
    r: &ClassificationRecord,
) -> Result<(), CliError> {
    let c = &r.classification;
    let members: ElemSet = c.members.iter().copied().collect();
    let flags = [
        ("proper", c.proper),
        ("prime", c.prime),
        ("semiprime", c.semiprime),
        ("primary", c.primary),
        ("maximal", c.maximal),
        ("irreducible", c.irreducible),
        ("strongly-irreducible", c.strongly_irreducible),
    ];
    let set: Vec<&str> = flags.iter().filter(|(_, v)| *v).map(|(k, _)| *k).collect();
    write!(
        out,
        "{:<16} {:<64} rad={}",
        labelled(m, members),
        set.join(","),
        labelled(m, c.radical.members())
    )?;
    if !r.minimal_irreducible_over.is_empty() {
        let over: Vec<String> = r
            .minimal_irreducible_over
            .iter()
            .map(|i| labelled(m, i.members()))
            .collect();
        write!(out, " min-irr-over={}", over.join(" "))?;
    }
    writeln!(out)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct ClassifiedDecomposition {
    #[serde(flatten)]
    report: DecompositionReport,
    classification: Vec<Classification>,
}

#[derive(Debug, Serialize)]
struct DecompositionRecord {
    ideal: Ideal,
    irreducible: ClassifiedDecomposition,
    primary: ClassifiedDecomposition,
}

fn decomposition_record(
    m: &FiniteMonoid,
    i: &Ideal,
    lat: &IdealLattice,
) -> Result<DecompositionRecord, CliError> {
    let classified = |report: DecompositionReport| {
        let classification = report
            .components
            .iter()
            .map(|c| classify::classify(m, c, lat))
            .collect();
        ClassifiedDecomposition {
            report,
            classification,
        }
    };
    Ok(DecompositionRecord {
        ideal: *i,
        irreducible: classified(decomposition::irreducible_decomposition(m, i, lat)?),
        primary: classified(decomposition::primary_decomposition(m, i, lat)?),
    })
}

fn write_decomposition(
    out: &mut dyn Write,
    m: &FiniteMonoid,
    r: &DecompositionRecord,
) -> Result<(), CliError> {
    let show = |cs: &[Ideal]| -> String {
        if cs.is_empty() {
            return "(empty)".into();
        }
        cs.iter()
            .map(|c| labelled(m, c.members()))
            .collect::<Vec<_>>()
            .join(" ∩ ")
    };
    writeln!(out, "{}", labelled(m, r.ideal.members()))?;
    writeln!(
        out,
        "  irreducible: {}",
        show(&r.irreducible.report.components)
    )?;
    writeln!(out, "  primary:     {}", show(&r.primary.report.components))?;
    Ok(())
}

fn localize_command(
    m: &FiniteMonoid,
    s: &MultiplicativeSet,
    check: bool,
    json: bool,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let loc = localization::localize(m, s)?;
    if loc.is_degenerate() {
        writeln!(err, "warning: 0 is in S; the localization is trivial")?;
    }
    let (correspondence, irreducible) = if check {
        (
            Some(localization::check_ideal_correspondence(
                &loc,
                limits.max_ideals,
            )?),
            Some(localization::check_irreducible_correspondence(
                &loc,
                limits.max_ideals,
            )?),
        )
    } else {
        (None, None)
    };
    let q = loc.quotient();
    let mut classes = Vec::new();
    for a in 0..m.size() {
        for d in s.members() {
            let class = loc.class_of(a, d).expect("d is in S");
            classes.push(json!({ "m": a, "s": d, "class": class }));
        }
    }
    if json {
        let mut report = json!({
            "schema": theorems::SCHEMA_VERSION,
            "set": s.members().to_vec(),
            "degenerate": loc.is_degenerate(),
            "quotient": {
                "size": q.size(),
                "identity": q.identity(),
                "zero": q.zero(),
                "labels": q.labels(),
                "table": q.rows(),
            },
            "representatives": loc.representatives(),
            "classes": classes,
        });
        if let (Some(c), Some(i)) = (&correspondence, &irreducible) {
            report["correspondence"] = json!(c);
            report["irreducible_correspondence"] = json!(i);
        }
        emit_json(out, &report)?;
    } else {
        write!(out, "{}", format::write_cayley(q))?;
        writeln!(out, "# class map: m/s -> class")?;
        for a in 0..m.size() {
            let row: Vec<String> = s
                .members()
                .iter()
                .map(|d| {
                    format!(
                        "{}/{}->{}",
                        m.label(a),
                        m.label(d),
                        q.label(loc.class_of(a, d).expect("d is in S"))
                    )
                })
                .collect();
            writeln!(out, "# {}", row.join(" "))?;
        }
        if let (Some(c), Some(i)) = (&correspondence, &irreducible) {
            emit_json(
                out,
                &json!({ "correspondence": c, "irreducible_correspondence": i }),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn check_theorems(
    monoids: &[PathBuf],
    homs: &[PathBuf],
    theorem: Option<String>,
    seed: u64,
    json: bool,
    limits: Limits,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    // every input is validated before any theorem line is printed
    let corpus = if monoids.is_empty() {
        default_corpus()
    } else {
        monoids
            .iter()
            .map(|p| {
                Ok(NamedMonoid::from_file(
                    &p.display().to_string(),
                    load(p, &limits)?,
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?
    };
    let user_homs = homs
        .iter()
        .map(|p| {
            let spec = format::read_hom(p)?;
            Ok(UserHom {
                name: p.display().to_string(),
                source: NamedMonoid::from_file(
                    &spec.source.display().to_string(),
                    load(&spec.source, &limits)?,
                ),
                target: NamedMonoid::from_file(
                    &spec.target.display().to_string(),
                    load(&spec.target, &limits)?,
                ),
                map: spec.map,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let config = SuiteConfig {
        limits,
        theorem,
        seed,
    };
    let report = theorems::run_theorem_suite(&corpus, &user_homs, &config)?;
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{}", report.to_table())?;
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILURE
    })
}
