//! The falsification suite: witnesses that must keep failing.
//!
//! A verification harness that never sees red is indistinguishable from one
//! that checks nothing, so the suite pins known counterexamples and demands
//! the expected failures: the shift-times-idempotent product that leaves
//! the quasihyponormal class, the decreasing-weight product that fails in
//! one order but not the other, and a product pair that is honestly
//! noncommuting while both orders stay in the class.

use opclass::{falsification_suite, Tolerance};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();
    let reports = falsification_suite(&tol)?;
    let mut all_behaved = true;
    for report in &reports {
        println!(
            "{:<24} {}",
            report.theorem_id,
            opclass::report::outcome_str(report.outcome)
        );
        for r in report.hypotheses.iter().chain(&report.conclusions) {
            println!(
                "  [{}] {:<56} value {:+.3e}",
                if r.passed { "ok" } else { "--" },
                r.name,
                r.value
            );
        }
        all_behaved &= !report.violated();
    }
    println!(
        "\nsuite verdict: {}",
        if all_behaved {
            "all counterexamples behaved as documented"
        } else {
            "UNEXPECTED: a pinned counterexample stopped failing"
        }
    );
    Ok(())
}
