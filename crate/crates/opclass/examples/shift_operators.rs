//! Truncated weighted shifts and why the verdict window matters.
//!
//! An N-by-N truncation of the unilateral shift A e_n = w_n e_{n+1} kills
//! the last basis vector, so quantified inequalities that pass through
//! A^degree pick up a spurious defect on the trailing `degree` coordinates.
//! Restricting the quantifier to the leading window recovers the verdict
//! the infinite operator would get: quasihyponormal iff the weight
//! sequence is nondecreasing.

use opclass::{
    check_hyponormal, check_pk_quasihyponormal, interior_region, make_shift, monotone_weights,
    BoundaryMode, Region, ShiftKind, ShiftSpec, Tolerance,
};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();
    let dim = 8;

    let specs = [
        ("nondecreasing n/(n+1)", monotone_weights(dim)),
        ("constant", vec![1.0; dim - 1]),
        ("one decreasing step", vec![2.0, 1.0, 3.0, 4.0, 5.0, 6.0, 7.0]),
    ];

    for (label, weights) in specs {
        let spec = ShiftSpec::new(
            weights.clone(),
            dim,
            ShiftKind::Unilateral,
            BoundaryMode::InteriorOnly,
        )?;
        let a = make_shift(&spec);
        println!("shift with {label} weights {weights:?}");

        // degree 1 for the hyponormal window, degree 2 for quasihyponormal
        let full_h = check_hyponormal(&a, false, Region::Full, &tol)?;
        let int_h = check_hyponormal(&a, false, spec.region_for(1), &tol)?;
        let full_q = check_pk_quasihyponormal(&a, 1.0, 1, Region::Full, &tol)?;
        let int_q = check_pk_quasihyponormal(&a, 1.0, 1, interior_region(dim, 2), &tol)?;
        for (window, v) in [
            ("full", &full_h),
            ("interior", &int_h),
            ("full", &full_q),
            ("interior", &int_q),
        ] {
            println!(
                "  {:<30} {:<9} {:<20} margin {:+.3e}",
                v.describe(),
                window,
                opclass::report::status_str(v.status),
                v.margin
            );
        }
        println!();
    }

    // Bilateral truncations keep a wrap-around weight slot but still lose
    // the edge; the interior verdict is the meaningful one.
    let spec = ShiftSpec::new(
        monotone_weights(dim + 1),
        dim,
        ShiftKind::Bilateral,
        BoundaryMode::InteriorOnly,
    )?;
    let a = make_shift(&spec);
    let v = check_pk_quasihyponormal(&a, 1.0, 1, spec.region_for(2), &tol)?;
    println!(
        "bilateral truncation, interior: {} {} margin {:+.3e}",
        v.describe(),
        opclass::report::status_str(v.status),
        v.margin
    );
    Ok(())
}
