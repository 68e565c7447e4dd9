//! Randomized trials against the statement registry.
//!
//! Every registered statement has the shape "hypotheses imply conclusions".
//! A trial builds a seeded instance satisfying the hypotheses, then checks
//! the conclusions; a ConclusionViolated outcome would be a counterexample.
//! The example runs one statement in detail, showing each hypothesis and
//! conclusion record, then sweeps a small grid over several statements.

use opclass::{registry_ids, run_grid, run_trial, spec_for, Tolerance};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();

    let spec = spec_for("T2.2")?;
    println!("{}: {}", spec.id, spec.statement);
    let report = run_trial(spec.id, 6, 11, &tol)?;
    println!("dim 6, seed 11 -> {}", opclass::report::outcome_str(report.outcome));
    println!("  hypotheses:");
    for r in &report.hypotheses {
        println!("    [{}] {:<44} value {:+.3e}", if r.passed { "ok" } else { "--" }, r.name, r.value);
    }
    println!("  conclusions:");
    for r in &report.conclusions {
        println!("    [{}] {:<44} value {:+.3e}", if r.passed { "ok" } else { "--" }, r.name, r.value);
    }

    let ids: Vec<&str> = registry_ids()
        .iter()
        .copied()
        .filter(|id| id.starts_with("P2."))
        .collect();
    println!("\ngrid over {} statements, dims {{4, 6}}, 10 seeds each:", ids.len());
    let reports = run_grid(&ids, &[4, 6], 0, 10, &tol)?;
    for id in &ids {
        let held = reports
            .iter()
            .filter(|r| r.theorem_id == *id && !r.violated())
            .count();
        let total = reports.iter().filter(|r| r.theorem_id == *id).count();
        println!("  {id:<8} {held}/{total} trials consistent");
    }
    Ok(())
}
