//! Classify a handful of small matrices into every supported class.
//!
//! Three inputs make the verdict columns easy to read: a normal matrix
//! (everything holds), a truncated unilateral shift (hyponormal with a
//! boundary defect, so the full-window verdict is Violated while the
//! interior window holds), and the 2x2 nilpotent Jordan block (the
//! standard separator: k-quasihyponormal for k >= 2 with margin exactly
//! zero, yet not hyponormal).

use num_complex::Complex64;
use opclass::{
    all_classes, classify_matrix, interior_region, make_shift, BoundaryMode, ComplexMatrix,
    Region, ShiftKind, ShiftSpec, Tolerance,
};

fn print_verdicts(label: &str, a: &ComplexMatrix, region: Region) -> opclass::Result<()> {
    let tol = Tolerance::default();
    let verdicts = classify_matrix(
        a,
        &all_classes(),
        &[0.5, 1.0],
        &[1, 2],
        region,
        &tol,
        7,
    )?;
    println!("{label} ({}x{}, {:?})", a.rows(), a.cols(), region);
    for v in &verdicts {
        println!(
            "  {:<40} {:<20} margin {:+.3e}",
            v.describe(),
            opclass::report::status_str(v.status),
            v.margin
        );
    }
    println!();
    Ok(())
}

fn main() -> opclass::Result<()> {
    let normal = ComplexMatrix::from_rows(&[
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0)],
        vec![Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.0)],
    ])?;
    print_verdicts("hermitian", &normal, Region::Full)?;

    let spec = ShiftSpec::new(
        vec![0.5, 0.75, 1.0],
        4,
        ShiftKind::Unilateral,
        BoundaryMode::InteriorOnly,
    )?;
    let shift = make_shift(&spec);
    print_verdicts("weighted shift, full window", &shift, Region::Full)?;
    print_verdicts(
        "weighted shift, interior window",
        &shift,
        interior_region(4, 2),
    )?;

    let nilpotent = ComplexMatrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    ])?;
    print_verdicts("nilpotent of order two", &nilpotent, Region::Full)?;
    Ok(())
}
