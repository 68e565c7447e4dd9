//! Structured random pairs: satisfying theorem hypotheses without
//! collapsing to the trivial case.
//!
//! Generic random matrices almost never satisfy hypotheses like "A normal
//! and B commutes with AA*". Each builder therefore aims at one hypothesis
//! cluster and keeps whatever freedom survives it. In finite dimension
//! that freedom varies: the phase-paired blocks behind the Kaplansky-type
//! statements keep a genuine noncommutation gap, while clusters such as
//! "doubly commuting" or "simultaneously reduced" force AB = BA outright,
//! and there the builders keep the factors non-normal instead, so the
//! conclusions still say something. The example prints, per builder, the
//! noncommutation gap and each factor's distance from normality.

use opclass::{random_pair_for, Tolerance};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();
    for id in ["T2.2", "P2.5", "P2.3", "T2.6", "P2.8a"] {
        let bundle = random_pair_for(id, 6, 17, &tol)?;
        println!("{id}: {}", bundle.provenance.detail);
        if !bundle.params.is_empty() {
            let params: Vec<String> = bundle
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v:.4}"))
                .collect();
            println!("  params: {}", params.join(", "));
        }
        let keys: Vec<&str> = bundle.matrices.keys().map(String::as_str).collect();
        println!("  matrices: {}", keys.join(", "));
        let a = bundle.get("A")?;
        let b = bundle.get("B")?;
        let gap = (&(a * b) - &(b * a)).norm_fro();
        let self_a = (&(&a.adjoint() * a) - &(a * &a.adjoint())).norm_fro();
        let self_b = (&(&b.adjoint() * b) - &(b * &b.adjoint())).norm_fro();
        println!("  ||AB - BA|| = {gap:.4}   ||[A*,A]|| = {self_a:.4}   ||[B*,B]|| = {self_b:.4}");
        println!();
    }
    Ok(())
}
