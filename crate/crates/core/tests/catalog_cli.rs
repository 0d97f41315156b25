//! Document round trips, schema validation, the command-line driver and
//! golden artifacts.

use std::path::{Path, PathBuf};

use hopfdual::catalog::io::*;
use hopfdual::catalog::*;
use hopfdual::cli::{exit_code, run_command, CommandOutput};
use hopfdual::exactmath::*;
use hopfdual::hopf::*;
use hopfdual::Error;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> CommandOutput {
    run_command(std::iter::once("hopfdual").chain(args.iter().copied()))
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

const PRESET_CASES: &[(&str, &[&str])] = &[
    ("group-algebra", &["s3"]),
    ("function-algebra", &["Z3"]),
    ("taft", &["3", "1"]),
    ("hat-taft", &["4", "2", "2"]),
    ("check-taft", &["4", "2", "2"]),
    ("cyclic-pairing", &["4", "1"]),
    ("rank-one", &["5", "1"]),
    ("sl21-M", &["3"]),
    ("sl21-N", &["4"]),
    ("taft-datum", &["4", "2", "2"]),
    ("s3-projection", &[]),
    ("s3-datum", &[]),
    ("nichols-datum", &["sl21-M", "3", "1"]),
];

#[test]
fn every_preset_round_trips_bit_exactly() {
    for (name, params) in PRESET_CASES {
        let doc = catalog_build(name, &strings(params)).unwrap();
        let text = doc.to_json();
        let parsed = Document::from_json(&text).unwrap();
        assert_eq!(parsed.kind(), doc.kind());
        let loaded = load(&parsed, &Registry::new()).unwrap();
        assert_eq!(save(&loaded).to_json(), text, "{name}");
    }
    assert_eq!(PRESETS.len(), PRESET_CASES.len());
}

#[test]
fn preset_parameters_are_validated() {
    assert!(matches!(catalog_build("taft", &strings(&["3"])), Err(Error::BadParams(_))));
    assert!(matches!(catalog_build("hat-taft", &strings(&["4", "3", "1"])), Err(Error::BadParams(_))));
    assert!(matches!(catalog_build("group-algebra", &strings(&["a5"])), Err(Error::BadParams(_))));
    assert!(catalog_build("no-such-preset", &[]).is_err());
}

fn taft_doc() -> Value {
    serde_json::from_str(&catalog_build("taft", &strings(&["2", "1"])).unwrap().to_json()).unwrap()
}

#[test]
fn missing_or_broken_fields_are_schema_errors() {
    let mut v = taft_doc();
    v.as_object_mut().unwrap().remove("eps");
    let err = Document::from_json(&v.to_string()).unwrap_err();
    assert!(matches!(err, Error::Schema(_)), "{err}");
    assert_eq!(exit_code(&err), 2);

    let mut v = taft_doc();
    v["mu"] = json!([[0, 0, 9, "1"]]);
    let doc = Document::from_json(&v.to_string()).unwrap();
    assert!(load(&doc, &Registry::new()).is_err());

    let mut v = taft_doc();
    v["unexpected"] = json!(1);
    assert!(Document::from_json(&v.to_string()).is_err());

    assert!(matches!(Document::from_json("not json"), Err(Error::Schema(_))));
}

#[test]
fn scalar_literals_parse_both_forms() {
    for (text, order) in [("-z^2", 6u64), ("1", 1), ("3/2", 4)] {
        let lit = ScalarLit::Short(text.to_string());
        let x = lit.parse(order).unwrap();
        assert_eq!(ScalarLit::write(&x, order).parse(order).unwrap(), x);
    }
    let z = CycScalar::root_of_unity(5, 2);
    let coeffs = ScalarLit::Coeffs(z.coeff_strings());
    assert_eq!(coeffs.parse(5).unwrap(), z);
}

#[test]
fn cyclotomic_order_cap_is_enforced() {
    let mut v = taft_doc();
    v["cyclotomic_order"] = json!(1_000_000);
    let err = load(&Document::from_json(&v.to_string()).unwrap(), &Registry::new())
        .err()
        .or_else(|| Document::from_json(&v.to_string()).err())
        .expect("order above the cap is rejected");
    assert!(matches!(err, Error::Schema(_)), "{err}");
}

#[test]
fn exit_codes_distinguish_failures_from_bad_input() {
    let ok = run(&["dualize", "taft-datum:3,3,1", "--check-involutive"]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    assert!(ok.stdout.contains("involutivity: pass"));

    let dir = tempfile::tempdir().unwrap();
    let mut v = taft_doc();
    // break coassociativity: Δ(x) gains x⊗x
    v["Delta"].as_array_mut().unwrap().push(json!([2, 2, 2, "1"]));
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, v.to_string()).unwrap();
    let fail = run(&["verify", broken.to_str().unwrap()]);
    assert_eq!(fail.code, 1, "{}", fail.stdout);
    assert!(fail.stdout.contains("fail"));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"dim\": 2}").unwrap();
    assert_eq!(run(&["verify", garbage.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["verify", "/no/such/file.json"]).code, 2);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn verify_accepts_files_and_presets_together() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("taft.json");
    std::fs::write(&path, catalog_build("taft", &strings(&["3", "1"])).unwrap().to_json()).unwrap();
    let out = run(&["--json", "verify", path.to_str().unwrap(), "s3-datum", "hat-taft:3,3,1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(!v["checks"].as_array().unwrap().is_empty());
}

fn without_timings(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn json_reports_are_deterministic_apart_from_timings() {
    let args = ["--json", "nichols", "--preset", "sl21-M", "--n", "3", "--max-degree", "6", "--hilbert", "--cartan"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(without_timings(&a.stdout), without_timings(&b.stdout));
    let v = without_timings(&a.stdout);
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn nichols_command_reports_series_and_reflection() {
    let out = run(&["nichols", "--preset", "sl21-M", "--n", "3", "--max-degree", "6", "--hilbert", "--cartan", "--reflect", "1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("1 + 2t + 2t^2 + 2t^3 + 2t^4 + 2t^5 + t^6"));
    assert!(out.stdout.contains("1 + 2t + 3t^2 + 3t^3 + 2t^4 + t^5"));
    // a cutoff below the top degree is a mathematical failure, not bad input
    let short = run(&["nichols", "--preset", "sl21-M", "--n", "3", "--max-degree", "3", "--materialize", "-o", "/dev/null"]);
    assert_eq!(short.code, 1, "{}", short.stdout);
}

#[test]
fn catalog_writes_artifact_with_hash() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let out = run(&["--json", "catalog", "group-algebra", "s3", "-o", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let text = std::fs::read_to_string(&path).unwrap();
    let report = out.report.unwrap();
    let hash = report.artifact_hashes.get(path.to_str().unwrap()).unwrap();
    assert_eq!(hash, &hex::encode(Sha256::digest(text.as_bytes())));
}

fn env_doc() -> Value {
    let h: Value = serde_json::from_str(&catalog_build("taft", &strings(&["2", "1"])).unwrap().to_json()).unwrap();
    json!({
        "cyclotomic_order": 2,
        "spaces": [{"name": "V", "dim": 2}],
        "hopf": [["H", h]],
        "generators": [{"name": "f", "dom": ["V"], "cod": ["V"], "entries": [[1, 0, "1"], [0, 1, "1"]]}],
        "default_space": "V"
    })
}

#[test]
fn eval_checks_identities_from_an_environment_file() {
    let dir = tempfile::tempdir().unwrap();
    let env = dir.path().join("env.json");
    std::fs::write(&env, env_doc().to_string()).unwrap();
    let env_s = env.to_str().unwrap();
    let antipode = run(&["eval", "mu[H] . (S[H] * id[H]) . Delta[H]", "--env", env_s, "--equals", "eta[H] . eps[H]"]);
    assert_eq!(antipode.code, 0, "{}", antipode.stdout);
    let involution = run(&["eval", "f . f", "--env", env_s, "--equals", "id[V]"]);
    assert_eq!(involution.code, 0, "{}", involution.stdout);
    let unequal = run(&["eval", "f", "--env", env_s, "--equals", "id[V]"]);
    assert_eq!(unequal.code, 1);
    let ill_typed = run(&["eval", "mu[H] . f", "--env", env_s]);
    assert_eq!(ill_typed.code, 2);
}

/// `x^k g^m ↦ x̄^k ḡ^m` from the Taft basis into a dualized algebra whose
/// generators sit at the given indices.
fn taft_map(rh: &HopfAlgebra, n: usize, d: usize, xbar: usize, gbar: usize) -> Matrix {
    let mut cols = Vec::new();
    for k in 0..d {
        for m in 0..n {
            let mut v = rh.unit_vector();
            for _ in 0..k {
                v = rh.mul_vec(&v, &SparseVec::unit(xbar));
            }
            for _ in 0..m {
                v = rh.mul_vec(&v, &SparseVec::unit(gbar));
            }
            cols.push(v);
        }
    }
    Matrix::from_columns(rh.dim, cols)
}

#[test]
fn golden_check_taft_documents_are_stable() {
    for (file, params) in [("check-taft-3-3-1.json", ["3", "3", "1"]), ("check-taft-4-2-2.json", ["4", "2", "2"])] {
        let expected = std::fs::read_to_string(golden(file)).unwrap();
        let built = catalog_build("check-taft", &strings(&params)).unwrap().to_json();
        assert_eq!(built, expected, "{file}");
    }
}

#[test]
fn dualized_taft_matches_the_golden_check_taft() {
    for (file, (n, d)) in [("check-taft-3-3-1.json", (3, 3)), ("check-taft-4-2-2.json", (4, 2))] {
        let dir = tempfile::tempdir().unwrap();
        let out_path = dir.path().join("rh.json");
        let spec = format!("taft-datum:{n},{d},{}", if n == 3 { 1 } else { 2 });
        let out = run(&["dualize", &spec, "-o", out_path.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        let registry = Registry::new();
        let Loaded::Hopf(rh) = load(&Document::from_json(&std::fs::read_to_string(&out_path).unwrap()).unwrap(), &registry).unwrap() else {
            panic!("dualize writes a Hopf algebra");
        };
        let Loaded::Hopf(check) = load(&Document::from_json(&std::fs::read_to_string(golden(file)).unwrap()).unwrap(), &registry).unwrap() else {
            panic!("golden file holds a Hopf algebra");
        };
        // x̄ = x⊗1 and ḡ = 1⊗g in L⊗B
        let phi = taft_map(&rh, n, d, n, 1);
        let r = verify_hopf_morphism(&phi, &check, &rh).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(inverse(&phi).is_ok());
    }
}
