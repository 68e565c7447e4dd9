//! Command-line front end.
//!
//! Exit codes are a total function of the report: 0 when every requested
//! check came out as documented, 1 when a class violation or a trial
//! counterexample appeared, 2 on input or usage errors. `OPCLASS_SEED`
//! overrides the default seed base for everything randomized.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classes::{
    all_classes, check_quasihyponormal_normform, classify_matrix, interior_region, OperatorClass,
    Region, VerdictStatus,
};
use crate::error::{OpClassError, Result};
use crate::generators::{example_2_1, example_2_2, example_3_1, monotone_weights, InstanceBundle};
use crate::linalg::Tolerance;
use crate::matrix::ComplexMatrix;
use crate::report::{
    outcome_str, read_matrix, status_str, to_json, BundleDoc, CheckDoc, ClassifyDoc, ExampleDoc,
    FalsifyDoc, TrialDoc, VerdictDoc, VerifyDoc, VerifySummaryDoc,
};
use crate::theorems::{falsification_suite, registry, run_grid, spec_for, TrialOutcome};

#[derive(Debug, Parser)]
#[command(
    name = "opclass",
    version,
    about = "Classify finite complex matrices into operator classes and stress-test product and sum statements about them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a matrix file into operator classes
    Classify(ClassifyArgs),
    /// Run seeded randomized trials for registered statements
    Verify(VerifyArgs),
    /// Reproduce a worked example and check its documented conclusions
    Example(ExampleArgs),
    /// Run the suite of known counterexamples and sharpness witnesses
    Falsify(FalsifyArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Matrix file: {"rows": n, "cols": m, "entries": [[re, im], ...]}
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated class ids (default: every class)
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<String>,
    /// Grid of exponents p for the power-conditioned families
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.5, 1.0])]
    pub p: Vec<f64>,
    /// Grid of exponents k
    #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2])]
    pub k: Vec<usize>,
    /// Psd and equality tolerance floor
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the JSON report here
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Registry id, or "all"
    #[arg(long)]
    pub theorem: String,
    /// Matrix dimensions to draw instances at
    #[arg(long, value_delimiter = ',', default_values_t = vec![4usize, 6, 8])]
    pub dims: Vec<usize>,
    /// Seeds per (statement, dimension) cell
    #[arg(long, default_value_t = 50)]
    pub seeds: u64,
    /// Psd and equality tolerance floor
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the JSON report here
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// Example name: 2.1, 2.2, or 3.1
    #[arg(long)]
    pub name: String,
    /// Truncation dimension
    #[arg(long, default_value_t = 8)]
    pub dim: usize,
    /// Weight sequence (defaults: 2.2 uses n/(n+1); 3.1 uses (j+1)/(j+2))
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<f64>,
    /// Psd and equality tolerance floor
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the JSON report here
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FalsifyArgs {
    /// Psd and equality tolerance floor
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the JSON report here
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Seed base for randomized commands; `OPCLASS_SEED` overrides zero.
pub fn seed_base() -> u64 {
    std::env::var("OPCLASS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn tolerance_from(tol: Option<f64>) -> Result<Tolerance> {
    match tol {
        Some(t) => Tolerance::new(t, t, Tolerance::default().sample_count),
        None => Ok(Tolerance::default()),
    }
}

fn write_output<T: serde::Serialize>(path: &Option<PathBuf>, doc: &T) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, to_json(doc)?)?;
    }
    Ok(())
}

fn verdict_line(v: &crate::classes::ClassVerdict) -> String {
    format!(
        "{:<40} {:<20} margin {:+.6e}",
        v.describe(),
        crate::report::status_str(v.status),
        v.margin
    )
}

/// Classify one matrix file. Exit 1 when any requested class is violated.
pub fn cmd_classify(args: &ClassifyArgs) -> Result<i32> {
    let matrix = read_matrix(&args.input)?;
    let tol = tolerance_from(args.tol)?;
    let classes: Vec<OperatorClass> = if args.classes.is_empty()
        || args.classes.iter().any(|c| c == "all")
    {
        all_classes()
    } else {
        args.classes
            .iter()
            .map(|c| {
                OperatorClass::parse(c).ok_or_else(|| OpClassError::BadParameter {
                    what: format!(
                        "unknown class {c}; valid: {}",
                        all_classes()
                            .iter()
                            .map(|x| x.id())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                })
            })
            .collect::<Result<_>>()?
    };
    let verdicts = classify_matrix(
        &matrix,
        &classes,
        &args.p,
        &args.k,
        Region::Full,
        &tol,
        seed_base(),
    )?;
    let doc = ClassifyDoc {
        input: args.input.display().to_string(),
        rows: matrix.rows(),
        cols: matrix.cols(),
        verdicts: verdicts.iter().map(VerdictDoc::from_verdict).collect(),
    };
    println!("{} ({}x{})", doc.input, doc.rows, doc.cols);
    for v in &verdicts {
        println!("  {}", verdict_line(v));
    }
    write_output(&args.output, &doc)?;
    let any_violated = verdicts.iter().any(|v| v.violated());
    Ok(if any_violated { 1 } else { 0 })
}

/// Run the trial grid. Exit 1 iff any trial produced a counterexample.
pub fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let tol = tolerance_from(args.tol)?;
    let ids: Vec<&'static str> = if args.theorem == "all" {
        crate::theorems::registry_ids()
    } else {
        vec![spec_for(&args.theorem)?.id]
    };
    let base = seed_base();
    let reports = run_grid(&ids, &args.dims, base, args.seeds, &tol)?;

    let statements: std::collections::BTreeMap<&str, &'static str> =
        registry().into_iter().map(|s| (s.id, s.statement)).collect();
    let mut summaries = Vec::new();
    let mut violations = Vec::new();
    for id in &ids {
        let mut held = 0;
        let mut violated = 0;
        let mut unsatisfiable = 0;
        for r in reports.iter().filter(|r| r.theorem_id == *id) {
            match r.outcome {
                TrialOutcome::ConclusionHeld => held += 1,
                TrialOutcome::ConclusionViolated => {
                    violated += 1;
                    // regeneration is deterministic per (id, dim, seed), so
                    // the dumped instance is exactly the one that failed
                    let mut doc = TrialDoc::from_report(r);
                    if let Ok(bundle) =
                        crate::generators::random_pair_for(id, r.dim, r.seed, &tol)
                    {
                        doc = doc.with_bundle(&bundle);
                    }
                    violations.push(doc);
                }
                TrialOutcome::HypothesesUnsatisfiable => unsatisfiable += 1,
            }
        }
        println!(
            "{id:<8} held {held:>4}  violated {violated:>4}  unsatisfiable {unsatisfiable:>4}",
        );
        summaries.push(VerifySummaryDoc {
            theorem_id: id.to_string(),
            statement: statements.get(id).copied().unwrap_or("").to_string(),
            held,
            violated,
            unsatisfiable,
        });
    }
    let total_violated: usize = summaries.iter().map(|s| s.violated).sum();
    let doc = VerifyDoc {
        dims: args.dims.clone(),
        seed_base: base,
        seeds: args.seeds,
        summaries,
        violations,
    };
    write_output(&args.output, &doc)?;
    println!(
        "{} trials, {} counterexamples",
        reports.len(),
        total_violated
    );
    Ok(if total_violated == 0 { 0 } else { 1 })
}

fn plain_check(name: &str, value: f64, bound: f64, passed: bool) -> CheckDoc {
    CheckDoc {
        name: name.to_string(),
        value,
        bound,
        passed,
        status: None,
        witness: None,
    }
}

fn verdict_check(name: &str, status: VerdictStatus, margin: f64, expected: VerdictStatus) -> CheckDoc {
    CheckDoc {
        name: format!("{name} (expected {})", status_str(expected)),
        value: margin,
        bound: 0.0,
        passed: status == expected,
        status: Some(status_str(status).to_string()),
        witness: None,
    }
}

fn nondecreasing(w: &[f64]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

fn expected_shift_verdict(weights: &[f64]) -> VerdictStatus {
    if nondecreasing(weights) {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    }
}

fn print_bundle_matrices(bundle: &InstanceBundle, keys: &[&str]) {
    for key in keys {
        if let Ok(m) = bundle.get(key) {
            println!("{key} =\n{m}");
        }
    }
}

fn example_2_1_checks(bundle: &InstanceBundle, dim: usize, tol: &Tolerance) -> Result<Vec<CheckDoc>> {
    let window = interior_region(dim, 2);
    let a_ver = check_quasihyponormal_normform(bundle.get("A")?, window, tol)?;
    let b_ver = check_quasihyponormal_normform(bundle.get("B")?, Region::Full, tol)?;
    let ab = bundle.get("AB")?;
    let ab_ver = check_quasihyponormal_normform(ab, window, tol)?;
    let e0 = ComplexMatrix::basis_vector(dim, 0);
    let gram_e0 = (&(&ab.adjoint() * ab) * &e0).norm_fro();
    let sq_e0 = (&(ab * ab) * &e0).norm_fro();
    Ok(vec![
        verdict_check(
            "A quasihyponormal on the interior window",
            a_ver.status,
            a_ver.margin,
            VerdictStatus::Holds,
        ),
        verdict_check("B quasihyponormal", b_ver.status, b_ver.margin, VerdictStatus::Holds),
        verdict_check(
            "AB quasihyponormal on the interior window",
            ab_ver.status,
            ab_ver.margin,
            VerdictStatus::Violated,
        ),
        plain_check(
            "||(AB)*(AB) e_0|| = 1",
            gram_e0,
            1e-14,
            (gram_e0 - 1.0).abs() < 1e-14,
        ),
        plain_check("||(AB)^2 e_0|| = 0", sq_e0, 1e-14, sq_e0 < 1e-14),
    ])
}

fn example_2_2_checks(
    bundle: &InstanceBundle,
    alphas: &[f64],
    dim: usize,
    tol: &Tolerance,
) -> Result<Vec<CheckDoc>> {
    let window = interior_region(dim, 2);
    let mut checks = Vec::new();

    // interior Gram diagonals against the closed-form weights
    let formulas: [(&str, Box<dyn Fn(usize) -> f64>); 4] = [
        ("gram_AB", Box::new(|i: usize| alphas[i] * alphas[i])),
        ("gram2_AB", Box::new(|i: usize| (alphas[i] * alphas[i + 1]).powi(2))),
        ("gram_BA", Box::new(|i: usize| alphas[i + 1] * alphas[i + 1])),
        ("gram2_BA", Box::new(|i: usize| (alphas[i + 1] * alphas[i + 2]).powi(2))),
    ];
    for (key, formula) in &formulas {
        let m = bundle.get(key)?;
        let mut dev: f64 = m.off_diagonal_norm();
        for i in 0..dim - 2 {
            dev = dev.max((m[(i, i)].re - formula(i)).abs());
        }
        checks.push(plain_check(
            &format!("{key} diagonal matches the weight formula"),
            dev,
            1e-12,
            dev <= 1e-12,
        ));
    }

    let ab_ver = check_quasihyponormal_normform(bundle.get("AB")?, window, tol)?;
    let ba_ver = check_quasihyponormal_normform(bundle.get("BA")?, window, tol)?;
    checks.push(verdict_check(
        "AB quasihyponormal on the interior window",
        ab_ver.status,
        ab_ver.margin,
        expected_shift_verdict(&alphas[..dim - 1]),
    ));
    checks.push(verdict_check(
        "BA quasihyponormal on the interior window",
        ba_ver.status,
        ba_ver.margin,
        expected_shift_verdict(&alphas[1..dim]),
    ));

    let gap = (&*bundle.get("AB^2")? - bundle.get("B^2A")?).norm_fro();
    let weights_vary = alphas[..dim]
        .windows(2)
        .any(|p| (p[0] - p[1]).abs() > 1e-9);
    if weights_vary {
        checks.push(plain_check(
            "power products differ: ||A B^2 - B^2 A|| > 0",
            gap,
            1e-12,
            gap > 1e-12,
        ));
    }
    Ok(checks)
}

fn example_3_1_checks(
    bundle: &InstanceBundle,
    weights: &[f64],
    dim: usize,
    tol: &Tolerance,
) -> Result<Vec<CheckDoc>> {
    let window = interior_region(dim, 2);
    let a = bundle.get("A")?;
    let verdict = check_quasihyponormal_normform(a, window, tol)?;
    let mut checks = vec![verdict_check(
        "A quasihyponormal on the interior window",
        verdict.status,
        verdict.margin,
        expected_shift_verdict(&weights[..dim - 1]),
    )];

    // basis-vector inequality ||A*A e_n|| <= ||A^2 e_n|| off the edge
    let gram = &a.adjoint() * a;
    let a2 = a * a;
    let mut worst = f64::NEG_INFINITY;
    for n in 0..dim - 2 {
        let e = ComplexMatrix::basis_vector(dim, n);
        let lhs = (&gram * &e).norm_fro();
        let rhs = (&a2 * &e).norm_fro();
        worst = worst.max(lhs - rhs);
    }
    let expected_sign = nondecreasing(&weights[..dim - 1]);
    checks.push(plain_check(
        "||A*A e_n|| <= ||A^2 e_n|| on interior basis vectors",
        worst,
        1e-14,
        !expected_sign || worst <= 1e-14,
    ));
    Ok(checks)
}

/// Reproduce a worked example. Exit 0 iff every documented conclusion holds.
pub fn cmd_example(args: &ExampleArgs) -> Result<i32> {
    let tol = tolerance_from(args.tol)?;
    let dim = args.dim;
    let (bundle, checks, shown): (InstanceBundle, Vec<CheckDoc>, Vec<&str>) =
        match args.name.as_str() {
            "2.1" => {
                let bundle = example_2_1(dim)?;
                let checks = example_2_1_checks(&bundle, dim, &tol)?;
                (bundle, checks, vec!["A", "B", "AB"])
            }
            "2.2" => {
                let alphas: Vec<f64> = if args.weights.is_empty() {
                    (1..=dim).map(|n| n as f64 / (n as f64 + 1.0)).collect()
                } else {
                    args.weights.clone()
                };
                let bundle = example_2_2(&alphas, dim)?;
                let checks = example_2_2_checks(&bundle, &alphas, dim, &tol)?;
                (
                    bundle,
                    checks,
                    vec!["AB", "BA", "gram_AB", "gram2_AB", "gram_BA", "gram2_BA", "AB^2", "B^2A"],
                )
            }
            "3.1" => {
                let weights: Vec<f64> = if args.weights.is_empty() {
                    monotone_weights(dim)
                } else {
                    args.weights.clone()
                };
                let bundle = example_3_1(&weights, dim)?;
                let checks = example_3_1_checks(&bundle, &weights, dim, &tol)?;
                (bundle, checks, vec!["A"])
            }
            other => {
                return Err(OpClassError::BadParameter {
                    what: format!("unknown example {other}; valid: 2.1, 2.2, 3.1"),
                })
            }
        };

    println!("example {} at dimension {dim}", args.name);
    print_bundle_matrices(&bundle, &shown);
    for c in &checks {
        println!(
            "  [{}] {:<58} value {:+.6e}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.value
        );
    }
    let all_match = checks.iter().all(|c| c.passed);
    let doc = ExampleDoc {
        name: args.name.clone(),
        dim,
        bundle: BundleDoc::from_bundle(&bundle),
        checks,
        all_match,
    };
    write_output(&args.output, &doc)?;
    Ok(if all_match { 0 } else { 1 })
}

/// Run the counterexample suite. Exit 0 iff every entry behaves as
/// documented (violations where violations are claimed).
pub fn cmd_falsify(args: &FalsifyArgs) -> Result<i32> {
    let tol = tolerance_from(args.tol)?;
    let reports = falsification_suite(&tol)?;
    let mut all_behaved = true;
    for report in &reports {
        println!("{:<24} {}", report.theorem_id, outcome_str(report.outcome));
        for record in report.hypotheses.iter().chain(report.conclusions.iter()) {
            println!(
                "  [{}] {:<62} value {:+.6e}",
                if record.passed { "ok" } else { "FAIL" },
                record.name,
                record.value
            );
        }
        all_behaved &= report.outcome == TrialOutcome::ConclusionHeld;
    }
    let doc = FalsifyDoc {
        entries: reports.iter().map(TrialDoc::from_report).collect(),
        all_behaved,
    };
    write_output(&args.output, &doc)?;
    Ok(if all_behaved { 0 } else { 1 })
}

/// Dispatches a parsed command line; the caller turns errors into exit 2.
pub fn run(cli: Cli) -> Result<i32> {
    match &cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Example(args) => cmd_example(args),
        Command::Falsify(args) => cmd_falsify(args),
    }
}
