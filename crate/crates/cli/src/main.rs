use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use incidence::homology::{min_inj_coresolution, minimal_proj_resolution, profile, HomProfile};
use incidence::lattice::{as_lattice, Lattice};
use incidence::linalg::{Field, FieldSpec, PrimeField, Rationals};
use incidence::module::{PosetModule, ProjTerm};
use incidence::poset::{Poset, DEFAULT_EXTENSION_BUDGET};
use incidence::verify::{fixture_by_name, sweep, verify, verify_fixture, VerificationReport, VerifyOptions};
use incidence::Error;
use serde::Serialize;
use serde_json::{json, Value};

const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "incidence",
    version,
    about = "Homological invariants of incidence algebras of finite posets"
)]
struct Cli {
    /// Scalar field: `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice diagnostics and the full homological profile of a poset.
    Analyze { input: PathBuf },
    /// Minimal projective resolution and injective coresolution of one module.
    Resolve {
        input: PathBuf,
        /// `simple:<label>`, `projective:<label>` or `injective:<label>`.
        #[arg(long)]
        module: String,
    },
    /// Run the verification checklist on a poset file or a named fixture.
    Verify {
        #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
        input: Option<PathBuf>,
        /// One of chain, boolean, diamond, pentagon, l9, l10, p7, p8, b4.
        #[arg(long)]
        fixture: Option<String>,
        #[command(flatten)]
        opts: CheckFlags,
    },
    /// Verify the ideal lattice of every poset up to the given size and
    /// classify every enumerated lattice.
    Sweep {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[command(flatten)]
        opts: CheckFlags,
    },
}

#[derive(clap::Args, Debug)]
struct CheckFlags {
    /// Cap on linear extensions for order-dimension checks.
    #[arg(long, default_value_t = DEFAULT_EXTENSION_BUDGET)]
    budget: usize,
    /// Include per-check timings (makes output non-deterministic).
    #[arg(long)]
    timings: bool,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

/// A message and the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_parse_error() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

fn parse_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_poset(path: &Path) -> Result<Poset, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| parse_failure(format!("cannot read {}: {e}", path.display())))?;
    Ok(Poset::from_json_str(&text)?)
}

struct Rendered {
    text: String,
    json: Value,
    /// Name of the first failing check, if any.
    failed: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.field {
        FieldSpec::Rationals => run(&cli, &Rationals),
        FieldSpec::Prime(p) => match PrimeField::new(p) {
            Ok(f) => run(&cli, &f),
            Err(e) => Err(e.into()),
        },
    };
    match result {
        Ok(r) => {
            let body = match cli.output {
                Output::Text => r.text,
                Output::Json => serde_json::to_string_pretty(&r.json).expect("reports serialize") + "\n",
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            match r.failed {
                Some(name) => {
                    eprintln!("check failed: {name}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run<F: Field>(cli: &Cli, field: &F) -> Result<Rendered, Failure> {
    match &cli.command {
        Command::Analyze { input } => analyze(&read_poset(input)?, field),
        Command::Resolve { input, module } => resolve(&read_poset(input)?, field, module),
        Command::Verify { input, fixture, opts } => {
            let options = VerifyOptions {
                budget: opts.budget,
                ..VerifyOptions::default()
            };
            let report = match (input, fixture) {
                (Some(path), _) => verify(&read_poset(path)?, field, &options)?,
                (None, Some(name)) => {
                    let fixture = fixture_by_name(name)?.ok_or_else(|| Failure {
                        code: 3,
                        message: format!("unknown fixture `{name}`"),
                    })?;
                    verify_fixture(&fixture, field, &options)?
                }
                (None, None) => unreachable!("clap requires an input or a fixture"),
            };
            Ok(render_report("verify", report, opts.timings))
        }
        Command::Sweep { nmax, opts } => {
            let options = VerifyOptions {
                budget: opts.budget,
                ..VerifyOptions::default()
            };
            Ok(render_report("sweep", sweep(*nmax, field, &options)?, opts.timings))
        }
    }
}

fn render_report(command: &str, report: VerificationReport, timings: bool) -> Rendered {
    let report = if timings { report } else { report.without_timings() };
    Rendered {
        text: report.render_text(),
        json: json!({ "schema": SCHEMA, "command": command, "report": report }),
        failed: report.first_failure().map(|c| c.name.clone()),
    }
}

fn labels(p: &Poset, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| p.label(x).to_string()).collect()
}

#[derive(Serialize)]
struct LatticeSummary {
    is_lattice: bool,
    /// Why the poset is not a lattice.
    reason: Option<String>,
    distributive: Option<bool>,
    forbidden_sublattice: Option<Value>,
    join_irreducibles: Option<Vec<String>>,
    meet_irreducibles: Option<Vec<String>>,
    /// `[x, row(x)]` pairs.
    rowmotion: Option<Vec<[String; 2]>>,
}

fn lattice_summary(p: &Poset, lat: &Result<Lattice, Error>) -> Result<LatticeSummary, Failure> {
    let l = match lat {
        Ok(l) => l,
        Err(e) => {
            let reason = match e {
                Error::NotALattice { a, b, reason } => format!("{} and {} {reason}", p.label(*a), p.label(*b)),
                other => other.to_string(),
            };
            return Ok(LatticeSummary {
                is_lattice: false,
                reason: Some(reason),
                distributive: None,
                forbidden_sublattice: None,
                join_irreducibles: None,
                meet_irreducibles: None,
                rowmotion: None,
            });
        }
    };
    let distributive = l.is_distributive();
    let witness = l.find_forbidden_sublattice().map(|w| {
        json!({
            "kind": w.kind,
            "elements": labels(p, w.elements),
            "bottom": p.label(w.bottom),
            "top": p.label(w.top),
            "middle": labels(p, w.middle),
        })
    });
    let rowmotion = if distributive {
        let row = l.rowmotion()?;
        Some(
            row.iter()
                .enumerate()
                .map(|(x, &y)| [p.label(x).to_string(), p.label(y).to_string()])
                .collect(),
        )
    } else {
        None
    };
    Ok(LatticeSummary {
        is_lattice: true,
        reason: None,
        distributive: Some(distributive),
        forbidden_sublattice: witness,
        join_irreducibles: Some(labels(p, l.join_irreducibles().iter())),
        meet_irreducibles: Some(labels(p, l.meet_irreducibles().iter())),
        rowmotion,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze<F: Field>(p: &Poset, field: &F) -> Result<Rendered, Failure> {
    let lat = as_lattice(p);
    let summary = lattice_summary(p, &lat)?;
    let prof = profile(p, field)?;
    let bijection: Option<Vec<[String; 2]>> = prof.grade_bijection.map().map(|m| {
        m.iter()
            .enumerate()
            .map(|(x, &y)| [p.label(x).to_string(), p.label(y).to_string()])
            .collect()
    });

    let mut t = String::new();
    let _ = writeln!(
        t,
        "poset with {} elements over {}{}{}",
        p.len(),
        field.spec(),
        if p.is_connected() {
            ", connected"
        } else {
            ", disconnected"
        },
        if p.is_bounded() { ", bounded" } else { "" }
    );
    match &summary.reason {
        Some(reason) => {
            let _ = writeln!(t, "not a lattice: {reason}");
        }
        None => {
            let _ = writeln!(
                t,
                "lattice, distributive: {}",
                yes_no(summary.distributive == Some(true))
            );
            if let Some(w) = &summary.forbidden_sublattice {
                let _ = writeln!(
                    t,
                    "  forbidden sublattice: {} on {}",
                    w["kind"].as_str().unwrap_or("?"),
                    w["elements"]
                );
            }
            let _ = writeln!(
                t,
                "  join-irreducibles: {}",
                summary.join_irreducibles.as_deref().unwrap_or_default().join(" ")
            );
            let _ = writeln!(
                t,
                "  meet-irreducibles: {}",
                summary.meet_irreducibles.as_deref().unwrap_or_default().join(" ")
            );
            if let Some(row) = &summary.rowmotion {
                let pairs: Vec<String> = row.iter().map(|[a, b]| format!("{a}->{b}")).collect();
                let _ = writeln!(t, "  rowmotion: {}", pairs.join(" "));
            }
        }
    }
    write_profile(&mut t, p, &prof);
    match &bijection {
        Some(pairs) => {
            let pairs: Vec<String> = pairs.iter().map(|[a, b]| format!("S_{a}->S_{b}")).collect();
            let _ = writeln!(t, "grade bijection: {}", pairs.join(" "));
        }
        None => {
            let _ = writeln!(t, "grade bijection: undefined");
        }
    }
    for w in &prof.warnings {
        let _ = writeln!(t, "warning: {w}");
    }

    let json = json!({
        "schema": SCHEMA,
        "command": "analyze",
        "field": field.spec().to_string(),
        "poset": p.to_json(),
        "lattice": summary,
        "profile": prof,
        "grade_bijection": bijection,
    });
    Ok(Rendered {
        text: t,
        json,
        failed: None,
    })
}

fn write_profile(t: &mut String, p: &Poset, prof: &HomProfile) {
    let _ = writeln!(
        t,
        "gldim {}, domdim {}, Gorenstein up to {}, Auslander regular: {}, diagonal: {}",
        prof.gldim,
        prof.domdim,
        prof.gorenstein_upto,
        yes_no(prof.auslander_regular),
        yes_no(prof.diagonal)
    );
    let width = p.labels().iter().map(|l| l.chars().count()).max().unwrap_or(1).max(7);
    let _ = writeln!(
        t,
        "  {:<width$}  pdim S  grade S  idim S  cograde S  pdim I  idim P",
        "element"
    );
    for x in 0..p.len() {
        let _ = writeln!(
            t,
            "  {:<width$}  {:>6}  {:>7}  {:>6}  {:>9}  {:>6}  {:>6}",
            p.label(x),
            prof.pdim_simple[x],
            prof.grade_simple[x].to_string(),
            prof.idim_simple[x],
            prof.cograde_simple[x].to_string(),
            prof.pdim_injective[x],
            prof.idim_projective[x],
        );
    }
    let _ = writeln!(t, "injective coresolution of A:");
    for (i, term) in prof.coresolution.iter().enumerate() {
        let _ = writeln!(t, "  I^{i} = {}", injective_term(p, term));
    }
    if !prof.projective_injective.is_empty() {
        let _ = writeln!(
            t,
            "projective-injective: {}",
            labels(p, prof.projective_injective.iter().copied()).join(" ")
        );
    }
}

/// `P(x)^k ⊕ …` with repeated summands collected.
fn format_term(p: &Poset, term: &ProjTerm, letter: char) -> String {
    if term.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = term
        .multiplicities(p.len())
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(x, &k)| {
            if k == 1 {
                format!("{letter}({})", p.label(x))
            } else {
                format!("{letter}({})^{k}", p.label(x))
            }
        })
        .collect();
    parts.join(" ⊕ ")
}

fn injective_term(p: &Poset, term: &ProjTerm) -> String {
    format_term(p, term, 'I')
}

fn parse_selector<F: Field>(p: &Arc<Poset>, field: &F, selector: &str) -> Result<PosetModule<F>, Failure> {
    let (kind, label) = selector
        .split_once(':')
        .ok_or_else(|| parse_failure(format!("module selector `{selector}` should look like kind:label")))?;
    let x = p
        .index_of(label)
        .ok_or_else(|| Failure::from(Error::UnknownElement(label.to_string())))?;
    match kind {
        "simple" => Ok(PosetModule::simple(p, field, x)),
        "projective" => Ok(PosetModule::projective(p, field, x)),
        "injective" => Ok(PosetModule::injective(p, field, x)),
        _ => Err(parse_failure(format!(
            "unknown module kind `{kind}`, expected simple, projective or injective"
        ))),
    }
}

fn resolve<F: Field>(p: &Poset, field: &F, selector: &str) -> Result<Rendered, Failure> {
    let arc = Arc::new(p.clone());
    let m = parse_selector(&arc, field, selector)?;
    let res = minimal_proj_resolution(&m)?;
    let cores = min_inj_coresolution(&m)?;
    let bass = cores.bass_numbers(p.len());

    let mut t = String::new();
    let _ = writeln!(
        t,
        "module {selector} over {}, dimension vector {}",
        field.spec(),
        m.format_dims()
    );
    let _ = writeln!(t, "minimal projective resolution (pdim {}):", res.length());
    for (r, term) in res.terms().iter().enumerate() {
        let _ = writeln!(t, "  P_{r} = {}", format_term(p, term, 'P'));
    }
    let _ = writeln!(t, "minimal injective coresolution (idim {}):", cores.length());
    for (i, term) in cores.terms.iter().enumerate() {
        let _ = writeln!(t, "  I^{i} = {}", injective_term(p, term));
    }
    let _ = writeln!(t, "Bass numbers mu^i(x):");
    for (i, row) in bass.iter().enumerate() {
        let entries: Vec<String> = row
            .iter()
            .enumerate()
            .filter(|(_, &mu)| mu > 0)
            .map(|(x, mu)| format!("{}:{mu}", p.label(x)))
            .collect();
        let _ = writeln!(t, "  i={i}: {}", entries.join(" "));
    }

    let term_json = |terms: &[ProjTerm]| -> Vec<Value> {
        terms
            .iter()
            .map(|term| {
                let mult = term.multiplicities(p.len());
                let entries: serde_json::Map<String, Value> = mult
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(x, &k)| (p.label(x).to_string(), json!(k)))
                    .collect();
                json!({ "summands": labels(p, term.summands().iter().copied()), "multiplicities": entries })
            })
            .collect()
    };
    let bass_json: Vec<Value> = bass
        .iter()
        .map(|row| {
            let entries: serde_json::Map<String, Value> = row
                .iter()
                .enumerate()
                .filter(|(_, &mu)| mu > 0)
                .map(|(x, &mu)| (p.label(x).to_string(), json!(mu)))
                .collect();
            Value::Object(entries)
        })
        .collect();
    let json = json!({
        "schema": SCHEMA,
        "command": "resolve",
        "field": field.spec().to_string(),
        "module": selector,
        "dimension_vector": m.dims(),
        "pdim": res.length(),
        "projective_resolution": term_json(res.terms()),
        "idim": cores.length(),
        "injective_coresolution": term_json(&cores.terms),
        "bass": bass_json,
    });
    Ok(Rendered {
        text: t,
        json,
        failed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use incidence::verify::{Check, Status};

    #[test]
    fn failing_check_is_reported() {
        let check = |name: &str, status| Check {
            name: name.into(),
            claim: String::new(),
            status,
            witness: None,
            millis: Some(3),
        };
        let report = VerificationReport {
            input: "test".into(),
            field: "q".into(),
            checks: vec![
                check("a", Status::Pass),
                check("b", Status::Fail),
                check("c", Status::Fail),
            ],
            sweep: None,
        };
        let r = render_report("verify", report, false);
        assert_eq!(r.failed.as_deref(), Some("b"));
        assert_eq!(r.json["schema"], 1);
        assert!(r.json["report"]["checks"][0]["millis"].is_null());
    }

    #[test]
    fn selector_parsing() {
        let p = Arc::new(Poset::chain(2).unwrap());
        assert_eq!(parse_selector(&p, &Rationals, "simple:1").unwrap().dims(), &[0, 1]);
        assert_eq!(parse_selector(&p, &Rationals, "projective:0").unwrap().dims(), &[1, 1]);
        assert_eq!(parse_selector(&p, &Rationals, "simple").unwrap_err().code, 2);
        assert_eq!(parse_selector(&p, &Rationals, "simple:7").unwrap_err().code, 3);
    }
}
