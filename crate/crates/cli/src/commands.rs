use std::collections::BTreeMap;
use std::path::PathBuf;

use bcr_core::diagrams::{self, DiagramSummary};
use bcr_core::invariants::verify_consistency;
use bcr_core::sweep::{run_sweep, SweepConfig, SweepSummary};
use bcr_core::weights::{lambda_bruteforce, lambda_closed, lambda_recursive, BRUTE_FORCE_MAX_K};
use bcr_core::{catalog, validate, InputDocument, InvariantReport, Rat, SeifertData, ValidationReport};
use serde_json::{json, Value};

use crate::Route;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Inconsistent = 1,
    InputError = 2,
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    fn input(message: impl ToString) -> Self {
        CliError {
            status: Status::InputError,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<Status, CliError>;

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn verdict(pass: bool) -> Status {
    if pass {
        Status::Pass
    } else {
        Status::Inconsistent
    }
}

type Rows = BTreeMap<usize, BTreeMap<usize, Rat>>;

fn rows_json(rows: &Rows) -> Value {
    rows.iter()
        .map(|(k, row)| (k.to_string(), row.values().map(|v| Value::String(v.to_string())).collect()))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

pub fn lambda(kmax: usize, route: Route, json: bool) -> Outcome {
    if kmax < 2 {
        return Err(CliError::input(format!("--kmax must be at least 2, got {kmax}")));
    }
    if route == Route::Brute && kmax > BRUTE_FORCE_MAX_K {
        return Err(CliError::input(format!(
            "the brute-force route enumerates (k-1)! permutations and is limited to kmax <= \
             {BRUTE_FORCE_MAX_K}; use --route recursive for kmax = {kmax}"
        )));
    }
    let brute = |upto: usize| -> Result<Rows, CliError> {
        (2..=upto)
            .map(|k| Ok((k, lambda_bruteforce(k).map_err(CliError::input)?)))
            .collect()
    };
    let recursive = || -> Result<Rows, CliError> {
        let table = lambda_recursive(kmax).map_err(CliError::input)?;
        Ok((2..=kmax).map(|k| (k, table.row_map(k))).collect())
    };
    let closed = || lambda_closed(kmax).map_err(CliError::input);

    let (rows, status) = match route {
        Route::Brute => (brute(kmax)?, None),
        Route::Recursive => (recursive()?, None),
        Route::Closed => (closed()?, None),
        Route::All => {
            let rec = recursive()?;
            let brute_rows = brute(kmax.min(BRUTE_FORCE_MAX_K))?;
            let agree = closed()? == rec && brute_rows.iter().all(|(k, row)| rec.get(k) == Some(row));
            (rec, Some(agree))
        }
    };
    let route_name = format!("{route:?}").to_lowercase();
    if json {
        let mut doc = json!({ "kmax": kmax, "route": route_name, "rows": rows_json(&rows) });
        if let Some(agree) = status {
            doc["status"] = json!(if agree { "AGREE" } else { "DISAGREE" });
            doc["brute_force_checked_through"] = json!(kmax.min(BRUTE_FORCE_MAX_K));
        }
        print_json(&doc);
    } else {
        for (k, row) in &rows {
            let entries: Vec<String> = row.values().map(ToString::to_string).collect();
            println!("k={k}: {}", entries.join(" "));
        }
        if let Some(agree) = status {
            let upto = kmax.min(BRUTE_FORCE_MAX_K);
            println!(
                "status: {} (recursive and closed form through k={kmax}, brute force through k={upto})",
                if agree { "AGREE" } else { "DISAGREE" }
            );
        }
    }
    Ok(status.map_or(Status::Pass, verdict))
}

pub enum DataSource {
    File(PathBuf),
    Catalog(String, usize),
}

fn load(source: &DataSource) -> Result<(InputDocument, SeifertData), CliError> {
    match source {
        DataSource::File(path) => {
            let doc = InputDocument::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            let data = doc.to_seifert().map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            Ok((doc, data))
        }
        DataSource::Catalog(name, n) => {
            let entry = catalog::lookup(name, *n).ok_or_else(|| {
                CliError::input(format!(
                    "unknown catalog entry {name:?}; available: {}",
                    catalog::NAMES.join(", ")
                ))
            })?;
            Ok((InputDocument::from_seifert(&entry.data), entry.data))
        }
    }
}

fn validation_json(report: &ValidationReport) -> Value {
    json!({
        "valid": report.is_valid(),
        "violations": report.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "warnings": report.warnings.clone(),
    })
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "NO"
    }
}

fn print_report(report: &InvariantReport, validation: &ValidationReport) {
    println!("n = {}, kmax = {}", report.n, report.kmax);
    for w in &validation.warnings {
        println!("warning: {w}");
    }
    for (i, delta) in report.alexander.iter().enumerate() {
        println!("Delta_{}(t) = {delta}", i + 1);
    }
    println!("torsion T(t) = {}", report.torsion);
    for (k, z) in &report.z_trace {
        let series = report.z_series.coeff(*k);
        let mark = if *z == series { "" } else { "   <- series gives " };
        if mark.is_empty() {
            println!("Z_{k} = {z}");
        } else {
            println!("Z_{k} = {z}{mark}{series}");
        }
    }
    println!("sum Z_k h^k = {}", report.z_series);
    println!("f(e^h) = {}", report.f_series);
    println!("trace route = torsion series: {}", yes_no(report.consistent));
    println!("whole-torsion cross-check: {}", yes_no(report.torsion_cross_check));
    println!("Z_k = 0 for k = n mod 2: {}", yes_no(report.parity_vanishing));
    println!("f(1) = 1, f'(1) = 0: {}", yes_no(report.f_normalized));
    if !report.self_dual() {
        println!(
            "note: Delta_(n+1-d)(t) != Delta_d(1/t) for d in {:?}; the data does not come from a Seifert surface",
            report.duality_defects
        );
    }
    if let Some(caveat) = report.caveat {
        println!("caveat: {caveat}");
    }
    println!("verdict: {}", if report.all_pass() { "CONSISTENT" } else { "INCONSISTENT" });
}

pub fn invariants(source: &DataSource, kmax: usize, json: bool) -> Outcome {
    if kmax < 2 {
        return Err(CliError::input(format!("--kmax must be at least 2, got {kmax}")));
    }
    let (doc, data) = load(source)?;
    let validation = validate(&data);
    if !validation.is_valid() {
        if json {
            print_json(&json!({ "input": doc.to_json(), "validation": validation_json(&validation) }));
        } else {
            print!("invalid Seifert data:\n{validation}");
        }
        return Ok(Status::InputError);
    }
    let report = verify_consistency(&data, kmax).map_err(CliError::input)?;
    if json {
        print_json(&json!({
            "input": doc.to_json(),
            "validation": validation_json(&validation),
            "report": serde_json::to_value(&report).expect("report serializes"),
            "self_dual": report.self_dual(),
            "verdict": if report.all_pass() { "CONSISTENT" } else { "INCONSISTENT" },
        }));
    } else {
        print_report(&report, &validation);
    }
    Ok(verdict(report.all_pass()))
}

fn print_sweep(summary: &SweepSummary) {
    let c = &summary.config;
    println!(
        "sweep: n = {}, sizes = {:?}, instances = {}, seed = {}, bound = {}, kmax = {}",
        c.n, c.sizes, c.instances, c.seed, c.bound, summary.kmax
    );
    for (check, tally) in &summary.tallies {
        println!("  {:<20} {}/{} pass", check.name(), tally.passed, tally.passed + tally.failed);
    }
    let zeros: Vec<String> = summary
        .zero_counts
        .iter()
        .map(|(k, count)| format!("k={k}: {count}/{}", c.instances))
        .collect();
    println!("  Z_k = 0 counts       {}", zeros.join(", "));
    println!("instances passing every check: {}/{}", summary.instances_passed, c.instances);
    match &summary.first_failure {
        None => println!("first counterexample: none"),
        Some(f) => {
            println!(
                "first counterexample: instance {} (seed {}), {}: {}",
                f.instance, f.seed, f.check, f.detail
            );
            println!("{}", serde_json::to_string(&f.data).expect("JSON values serialize"));
        }
    }
}

pub fn verify(config: SweepConfig, kmax: usize, json: bool) -> Outcome {
    if config.instances == 0 {
        return Err(CliError::input("--instances must be at least 1"));
    }
    if config.n == 0 {
        return Err(CliError::input("--n must be at least 1"));
    }
    if config.sizes.len() != config.n {
        return Err(CliError::input(format!(
            "--sizes lists {} block sizes but --n is {}",
            config.sizes.len(),
            config.n
        )));
    }
    let weights = lambda_recursive(kmax).map_err(CliError::input)?;
    let summary = run_sweep(&config, &weights).map_err(CliError::input)?;
    if json {
        print_json(&serde_json::to_value(&summary).expect("summary serializes"));
    } else {
        print_sweep(&summary);
    }
    Ok(verdict(summary.all_pass()))
}

fn print_diagram(s: &DiagramSummary) {
    println!("word {}  |Aut| = {}  numberings = {}", s.word, s.automorphisms, s.numberings);
    let vertices: Vec<String> = s
        .diagram
        .vertices
        .iter()
        .zip(&s.vertex_types)
        .enumerate()
        .map(|(i, (kind, t))| format!("{i}:{}{t}", if *kind == diagrams::VertexKind::External { "e" } else { "i" }))
        .collect();
    println!("  vertices (index:kind type)  {}", vertices.join(" "));
    let edges: Vec<String> = s
        .diagram
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let arrow = if e.kind == diagrams::EdgeKind::Internal { "->" } else { "~>" };
            format!("e{i}={}{arrow}{}", e.from, e.to)
        })
        .collect();
    println!("  edges (-> internal, ~> external)  {}", edges.join(" "));
    let theta: Vec<String> = s.e_theta.iter().map(|p| format!("e{}/e{}", p.edge, p.partner)).collect();
    println!("  E_theta (edge/partner)  {}  (|E_theta| = {})", theta.join(" "), s.e_theta.len());
}

pub fn diagrams(k: usize, json: bool) -> Outcome {
    let classes = diagrams::enumerate_diagrams(k).map_err(CliError::input)?;
    let summaries = classes
        .iter()
        .map(diagrams::summarize)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError {
            status: Status::Inconsistent,
            message: e.to_string(),
        })?;
    let total: u64 = summaries.iter().map(|s| s.numberings).sum();
    let theta_ok = summaries.iter().all(|s| s.e_theta.len() == k);
    if json {
        print_json(&json!({
            "k": k,
            "classes": summaries.len(),
            "total_numberings": total,
            "diagrams": serde_json::to_value(&summaries).expect("summaries serialize"),
        }));
    } else {
        println!("degree {k}: {} classes, {total} numbered diagrams", summaries.len());
        for s in &summaries {
            print_diagram(s);
        }
    }
    Ok(verdict(theta_ok))
}

pub fn catalog(name: Option<&str>, n: usize, json: bool) -> Outcome {
    if n == 0 {
        return Err(CliError::input("--n must be at least 1"));
    }
    match name {
        Some(name) => {
            let entry = catalog::lookup(name, n).ok_or_else(|| {
                CliError::input(format!(
                    "unknown catalog entry {name:?}; available: {}",
                    catalog::NAMES.join(", ")
                ))
            })?;
            print_json(&InputDocument::from_seifert(&entry.data).to_json());
        }
        None if json => {
            let entries: Vec<Value> = catalog::entries(n)
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "description": e.description,
                        "input": InputDocument::from_seifert(&e.data).to_json(),
                    })
                })
                .collect();
            print_json(&Value::Array(entries));
        }
        None => {
            for e in catalog::entries(n) {
                println!("{:<14} {}", e.name, e.description);
            }
        }
    }
    Ok(Status::Pass)
}
