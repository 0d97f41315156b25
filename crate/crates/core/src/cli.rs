//! The `hopfdual` command line: argument parsing, dispatch and run reports.
//!
//! Exit codes: 0 when every check passes (or two expressions are equal),
//! 1 on a verification failure or inequality, 2 on input or schema errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog::io::{
    load, load_env, load_module, parse_json, save_hopf, save_module, to_json, Document, EnvDoc, Loaded, ModuleDoc,
    Registry,
};
use crate::catalog::{catalog_build, sl21_by_name, taft_comparison, PRESETS};
use crate::exactmath::CycScalar;
use crate::hopf::{verify_hopf, verify_pairing};
use crate::nichols::{cartan_matrix, hilbert_series, materialize_nichols, rank_one, reflect, DiagonalBraiding};
use crate::partialdual::{braiding_preserved, involutivity_check, partial_dualize, transport_yd_module};
use crate::radford::{check_projection, coinvariants};
use crate::report::Report;
use crate::yd::verify_yd;
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "hopfdual", version, about = "Exact partial dualization of Hopf algebras")]
struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load and verify documents (files or preset specs such as `taft-datum:4,2,2`).
    Verify {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Partially dualize a datum and write the resulting Hopf algebra.
    Dualize {
        datum: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Dualize twice and compare with the input.
        #[arg(long)]
        check_involutive: bool,
        /// A Yetter-Drinfeld module over H to carry across.
        #[arg(long)]
        transport: Option<PathBuf>,
        /// Where to write the transported module.
        #[arg(long, requires = "transport")]
        transport_output: Option<PathBuf>,
    },
    /// Compute the coinvariants of a projection as a Hopf algebra over A.
    Coinvariants {
        datum: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Nichols algebras of diagonal type.
    Nichols(NicholsArgs),
    /// Evaluate a diagram expression.
    Eval {
        expr: String,
        #[arg(long)]
        env: PathBuf,
        /// Compare with a second expression.
        #[arg(long)]
        equals: Option<String>,
    },
    /// Build a preset document.
    #[command(after_help = presets_help())]
    Catalog {
        name: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["qmatrix", "preset"])))]
struct NicholsArgs {
    /// Braiding matrix document.
    #[arg(long)]
    qmatrix: Option<PathBuf>,
    /// `sl21-M`, `sl21-N` or `rank-one`.
    #[arg(long)]
    preset: Option<String>,
    /// Order of the root of unity for presets.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Exponent for `rank-one`: `q = ζ_n^k`.
    #[arg(long, default_value_t = 1)]
    k: i64,
    #[arg(long)]
    max_degree: usize,
    #[arg(long)]
    hilbert: bool,
    #[arg(long)]
    cartan: bool,
    /// Reflect at generator `i` (numbered from 1).
    #[arg(long)]
    reflect: Option<usize>,
    #[arg(long)]
    materialize: bool,
    #[arg(short, long, requires = "materialize")]
    output: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckEntry {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of one command. Checks are sorted by name; `timings` is the only
/// field that varies between identical runs.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct RunReport {
    pub checks: Vec<CheckEntry>,
    pub status: String,
    pub artifact_hashes: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub results: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timings: BTreeMap<String, f64>,
}

impl RunReport {
    fn add(&mut self, prefix: &str, r: &Report) {
        for c in &r.checks {
            self.checks.push(CheckEntry {
                name: format!("{prefix}{}", c.name),
                status: if c.passed { "pass" } else { "fail" },
                witness: c.witness.clone(),
            });
        }
    }

    fn check(&mut self, name: &str, passed: bool, witness: Option<String>) {
        let mut r = Report::new();
        r.push(name, passed, witness);
        self.add("", &r);
    }

    fn result(&mut self, key: &str, v: impl Serialize) {
        self.results
            .insert(key.to_string(), serde_json::to_value(v).expect("results serialize"));
    }

    fn time(&mut self, stage: &str, since: Instant) {
        self.timings
            .insert(stage.to_string(), since.elapsed().as_secs_f64() * 1e3);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    /// Human-readable form: one line per check, then results and status.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{}: {}", c.name, c.status));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" [{w}]"));
            }
            out.push('\n');
        }
        for (k, v) in &self.results {
            match v {
                Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                _ => out.push_str(&format!("{k}: {v}\n")),
            }
        }
        for (k, v) in &self.artifact_hashes {
            out.push_str(&format!("wrote {k} (sha256 {v})\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status));
        out
    }
}

/// What the binary prints and returns.
#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<RunReport>,
}

/// Exit code for an error: 1 when the mathematics failed, 2 when the input did.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_)
        | Error::NoAntipode
        | Error::NotInvertible
        | Error::Degenerate
        | Error::ClosureViolation(_)
        | Error::NotAProjection(_)
        | Error::NotASection(_)
        | Error::DegeneratePairing(_)
        | Error::CutoffReached(_)
        | Error::NotComplete => 1,
        Error::Math(_)
        | Error::Diagram(_)
        | Error::Shape(_)
        | Error::BadParams(_)
        | Error::Schema(_)
        | Error::Incompatible(_) => 2,
    }
}

/// Runs one command line (including the program name).
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return CommandOutput {
                code,
                stdout: if code == 0 { text.clone() } else { String::new() },
                stderr: if code == 0 { String::new() } else { text },
                report: None,
            };
        }
    };
    let start = Instant::now();
    let mut report = RunReport::default();
    let outcome = dispatch(&cli.command, &mut report);
    report.time("total", start);
    report.checks.sort_by(|a, b| a.name.cmp(&b.name));
    let code = match outcome {
        Ok(equal) => {
            if report.passed() && equal {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if let Error::Verification(r) = &e {
                report.add("", r);
                report.checks.sort_by(|a, b| a.name.cmp(&b.name));
            }
            report.error = Some(e.to_string());
            exit_code(&e)
        }
    };
    report.status = match code {
        0 => "pass",
        1 => "fail",
        _ => "error",
    }
    .to_string();
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    CommandOutput {
        code,
        stdout,
        stderr: String::new(),
        report: Some(report),
    }
}

/// `Ok(false)` means an inequality was found (exit 1 without an error).
fn dispatch(cmd: &Command, report: &mut RunReport) -> Result<bool> {
    match cmd {
        Command::Verify { files } => verify_cmd(files, report),
        Command::Dualize {
            datum,
            output,
            check_involutive,
            transport,
            transport_output,
        } => dualize_cmd(
            datum,
            output.as_deref(),
            *check_involutive,
            transport.as_deref(),
            transport_output.as_deref(),
            report,
        ),
        Command::Coinvariants { datum, output } => coinvariants_cmd(datum, output.as_deref(), report),
        Command::Nichols(args) => nichols_cmd(args, report),
        Command::Eval { expr, env, equals } => eval_cmd(expr, env, equals.as_deref(), report),
        Command::Catalog { name, params, output } => {
            let t = Instant::now();
            let doc = catalog_build(name, params)?;
            report.time("build", t);
            report.result("kind", doc.kind());
            write_artifact(output, &doc.to_json(), report)?;
            report.check("catalog: verified on build", true, None);
            Ok(true)
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))
}

fn write_artifact(path: &Path, text: &str, report: &mut RunReport) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Schema(format!("cannot write {}: {e}", path.display())))?;
    let hash = hex::encode(Sha256::digest(text.as_bytes()));
    report.artifact_hashes.insert(path.display().to_string(), hash);
    Ok(())
}

fn presets_help() -> String {
    let mut out = String::from("Presets:\n");
    for (name, params) in PRESETS {
        out.push_str(&format!("  {name} {params}\n"));
    }
    out
}

/// Default parameters for presets used directly as command inputs.
fn preset_defaults(name: &str) -> Vec<String> {
    let v: &[&str] = match name {
        "taft-datum" | "hat-taft" | "check-taft" => &["4", "2", "2"],
        "nichols-datum" => &["sl21-M", "3", "1"],
        "taft" => &["3", "1"],
        "cyclic-pairing" => &["4", "1"],
        "group-algebra" | "function-algebra" => &["s3"],
        "sl21-M" | "sl21-N" => &["3"],
        "rank-one" => &["3", "1"],
        _ => &[],
    };
    v.iter().map(|s| s.to_string()).collect()
}

/// A preset given as `name` or `name:p1,p2,…`.
#[derive(Clone, Debug, PartialEq)]
struct PresetSpec {
    name: String,
    params: Vec<String>,
}

fn parse_preset(spec: &str) -> Option<PresetSpec> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, p.split(',').map(str::to_string).collect()),
        None => (spec, preset_defaults(spec)),
    };
    PRESETS.iter().any(|(p, _)| *p == name).then(|| PresetSpec {
        name: name.to_string(),
        params,
    })
}

/// Reads a file, or builds a preset when no such file exists.
fn read_input(arg: &str) -> Result<(Document, Option<PresetSpec>)> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok((Document::from_json(&read_file(path)?)?, None));
    }
    match parse_preset(arg) {
        Some(p) => Ok((catalog_build(&p.name, &p.params)?, Some(p))),
        None => Err(Error::Schema(format!("{arg} is neither a file nor a preset"))),
    }
}

fn verify_loaded(obj: &Loaded) -> Result<Report> {
    Ok(match obj {
        Loaded::Hopf(h) => verify_hopf(h)?,
        Loaded::Module(m) => verify_yd(m)?,
        Loaded::Datum(d) => {
            let mut r = Report::new();
            r.extend_prefixed("projection: ", check_projection(&d.h, &d.a, &d.pi, &d.iota)?);
            r.extend_prefixed("pairing: ", verify_pairing(&d.omega)?);
            r
        }
        Loaded::Projection { h, a, pi, iota } => check_projection(h, a, pi, iota)?,
        Loaded::Pairing(p) => verify_pairing(p)?,
        Loaded::Braiding(b) => {
            let mut r = Report::new();
            r.push("square bicharacter matrix", b.q.iter().all(|row| row.len() == b.rank()), None);
            r
        }
    })
}

fn verify_cmd(files: &[String], report: &mut RunReport) -> Result<bool> {
    // independent inputs are verified concurrently; output order is fixed by sorting
    let outcomes: Vec<Result<(String, Report)>> = std::thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| {
                s.spawn(move || {
                    let (doc, _) = read_input(f)?;
                    let obj = load(&doc, &Registry::new())?;
                    Ok((doc.kind().to_string(), verify_loaded(&obj)?))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verifier thread")).collect()
    });
    let mut first_err = None;
    for (f, o) in files.iter().zip(outcomes) {
        let prefix = if files.len() > 1 { format!("{f}: ") } else { String::new() };
        match o {
            Ok((kind, r)) => {
                report.result(&format!("{prefix}kind"), kind);
                report.add(&prefix, &r);
            }
            Err(Error::Verification(r)) => report.add(&prefix, &r),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match first_err {
        Some(e) => Err(e),
        None => Ok(true),
    }
}

fn expect_datum(doc: &Document) -> Result<crate::partialdual::PartialDualizationDatum> {
    match load(doc, &Registry::new())? {
        Loaded::Datum(d) => Ok(d),
        _ => Err(Error::Schema(format!("expected a dualization datum, got a {} document", doc.kind()))),
    }
}

fn dualize_cmd(
    datum: &str,
    output: Option<&Path>,
    check_involutive: bool,
    transport: Option<&Path>,
    transport_output: Option<&Path>,
    report: &mut RunReport,
) -> Result<bool> {
    let t = Instant::now();
    let (doc, preset) = read_input(datum)?;
    let d = expect_datum(&doc)?;
    report.time("load", t);

    let t = Instant::now();
    let result = if check_involutive {
        let inv = involutivity_check(&d)?;
        report.check("involutivity", inv.report.passed(), Some(inv.report.summary()));
        report.add("Cor-involutive: ", &inv.report);
        inv.first
    } else {
        partial_dualize(&d)?
    };
    report.time("dualize", t);
    report.add("dualize: ", &result.report);
    report.result("dim", result.rh.dim);
    report.result("basis_labels", &result.rh.labels);
    report.result("provenance", &result.provenance);

    if let Some(PresetSpec { name, params }) = &preset {
        if name == "taft-datum" {
            let p: Vec<usize> = params.iter().filter_map(|x| x.parse().ok()).collect();
            if let [n, dd, c] = p[..] {
                let (_, r) = taft_comparison(n, dd, c, &result)?;
                report.add("Prop-5.5: ", &r);
            }
        }
    }

    if let Some(path) = transport {
        let t = Instant::now();
        let mdoc: ModuleDoc = parse_json(&read_file(path)?)?;
        let mut registry = Registry::new();
        registry.insert("H".into(), d.h.clone());
        registry.insert(d.h.name.clone(), d.h.clone());
        let m = load_module(&mdoc, &registry)?;
        let tm = transport_yd_module(&d, &result, &m)?;
        report.add("transport: ", &tm.report);
        report.add("transport: image: ", &verify_yd(&tm.module)?);
        report.add("transport: ", &braiding_preserved(&d, &result, &m, &m)?);
        report.result("transported_dim", tm.module.dim());
        if let Some(out) = transport_output {
            write_artifact(out, &to_json(&save_module(&tm.module)), report)?;
        }
        report.time("transport", t);
    }

    if let Some(out) = output {
        write_artifact(out, &to_json(&save_hopf(&result.rh)), report)?;
    }
    Ok(true)
}

fn coinvariants_cmd(datum: &str, output: Option<&Path>, report: &mut RunReport) -> Result<bool> {
    let (doc, _) = read_input(datum)?;
    let (h, a, pi, iota) = match load(&doc, &Registry::new())? {
        Loaded::Datum(d) => (d.h, d.a, d.pi, d.iota),
        Loaded::Projection { h, a, pi, iota } => (h, a, pi, iota),
        _ => return Err(Error::Schema(format!("expected a projection, got a {} document", doc.kind()))),
    };
    let t = Instant::now();
    let dec = coinvariants(&h, &a, &pi, &iota)?;
    report.time("coinvariants", t);
    report.add("", &dec.report);
    report.result("dim", dec.k.dim);
    report.result("basis_labels", &dec.k.labels);
    if let Some(out) = output {
        write_artifact(out, &to_json(&save_hopf(&dec.k)), report)?;
    }
    Ok(true)
}

fn scalar_rows(q: &[Vec<CycScalar>]) -> Vec<Vec<String>> {
    q.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn nichols_braiding(args: &NicholsArgs) -> Result<DiagonalBraiding> {
    match (&args.qmatrix, &args.preset) {
        (Some(path), _) => match Document::from_json(&read_file(path)?)? {
            Document::Braiding(b) => crate::catalog::io::load_braiding(&b),
            other => Err(Error::Schema(format!("expected a braiding document, got {}", other.kind()))),
        },
        (None, Some(p)) if p == "rank-one" => rank_one(args.n, args.k),
        (None, Some(p)) => sl21_by_name(p, args.n),
        (None, None) => Err(Error::BadParams("give --qmatrix or --preset".into())),
    }
}

fn nichols_cmd(args: &NicholsArgs, report: &mut RunReport) -> Result<bool> {
    let b = nichols_braiding(args)?;
    report.result("q", scalar_rows(&b.q));
    let t = Instant::now();
    let trunc = hilbert_series(&b, args.max_degree);
    report.time("hilbert", t);
    if args.hilbert {
        report.result("hilbert", trunc.series());
        report.result("hilbert_coefficients", &trunc.hilbert);
        report.result("complete", trunc.complete);
        if trunc.complete {
            report.result("total_dim", trunc.total_dim());
        }
    }
    if args.cartan {
        let t = Instant::now();
        report.result("cartan", cartan_matrix(&b, args.max_degree)?);
        report.time("cartan", t);
    }
    if let Some(i) = args.reflect {
        let i0 = i
            .checked_sub(1)
            .ok_or_else(|| Error::BadParams("generators are numbered from 1".into()))?;
        let r = reflect(&b, i0, args.max_degree)?;
        report.result("reflected_q", scalar_rows(&r.q));
        report.result("reflection_formula", "bicharacter (chosen convention)");
        report.result("reflected_twist_equivalent_to_input", r.twist_equivalent(&b));
        if args.hilbert {
            let rt = hilbert_series(&r, args.max_degree);
            report.result("reflected_hilbert", rt.series());
            report.result("reflected_hilbert_coefficients", &rt.hilbert);
        }
    }
    if args.materialize {
        if !trunc.complete {
            return Err(Error::CutoffReached(args.max_degree));
        }
        let t = Instant::now();
        let alg = materialize_nichols(&trunc)?;
        report.time("materialize", t);
        report.add("materialized: ", &verify_hopf(&alg.hopf)?);
        report.result("materialized_dim", alg.hopf.dim);
        if let Some(out) = &args.output {
            write_artifact(out, &to_json(&save_hopf(&alg.hopf)), report)?;
        }
    }
    Ok(true)
}

fn eval_cmd(expr: &str, env_path: &Path, equals: Option<&str>, report: &mut RunReport) -> Result<bool> {
    let doc: EnvDoc = parse_json(&read_file(env_path)?)?;
    let env = load_env(&doc, &Registry::new())?;
    let m = env.eval(expr)?;
    let names = |v: &[crate::exactmath::Space]| v.iter().map(|s| s.name.to_string()).collect::<Vec<_>>();
    report.result("dom", names(&m.dom));
    report.result("cod", names(&m.cod));
    let mut entries = Vec::new();
    for (j, col) in m.matrix.columns().iter().enumerate() {
        for (i, c) in col.iter() {
            entries.push(json!([i, j, c.to_string()]));
        }
    }
    entries.sort_by_key(|e| (e[0].as_u64(), e[1].as_u64()));
    report.result("entries", entries);
    match equals {
        None => Ok(true),
        Some(rhs) => {
            let eq = env.equal(expr, rhs)?;
            report.result("equal", eq.equal);
            if let Some(w) = &eq.witness {
                report.result("witness", w.to_string());
            }
            Ok(eq.equal)
        }
    }
}
