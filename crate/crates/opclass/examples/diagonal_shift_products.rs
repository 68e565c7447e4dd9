//! Shift-times-diagonal products: when both orders stay quasihyponormal.
//!
//! With A the unweighted shift and B = diag(alpha_0, alpha_1, ...), the two
//! products are again weighted shifts: AB carries (alpha_0, alpha_1, ...)
//! and BA carries (alpha_1, alpha_2, ...). Away from the truncation edge
//! their Gram matrices are diagonal with entries alpha_i^2 and
//! (alpha_i alpha_{i+1})^2, so each order is quasihyponormal exactly when
//! its own weight window is nondecreasing. One decreasing step placed at
//! the front breaks AB while BA never sees it. The pair also shows the
//! products genuinely differ as operators: ||A B^2 - B^2 A|| stays bounded
//! away from zero whenever the diagonal is nonconstant.

use opclass::{check_pk_quasihyponormal, example_2_2, interior_region, Tolerance};

fn report(alphas: &[f64], dim: usize) -> opclass::Result<()> {
    let tol = Tolerance::default();
    let bundle = example_2_2(alphas, dim)?;
    println!("alpha = {alphas:?}");

    for key in ["gram_AB", "gram2_AB", "gram_BA", "gram2_BA"] {
        let g = bundle.get(key)?;
        let diag: Vec<f64> = (0..dim - 2).map(|i| g[(i, i)].re).collect();
        println!("  {key:<9} interior diagonal {diag:.4?}");
    }

    let window = interior_region(dim, 2);
    for key in ["AB", "BA"] {
        let v = check_pk_quasihyponormal(bundle.get(key)?, 1.0, 1, window, &tol)?;
        println!(
            "  {key:<3} {:<28} {:<10} margin {:+.3e}",
            v.describe(),
            opclass::report::status_str(v.status),
            v.margin
        );
    }

    let gap = (bundle.get("AB^2")? - bundle.get("B^2A")?).norm_fro();
    println!("  ||A B^2 - B^2 A|| = {gap:.4}\n");
    Ok(())
}

fn main() -> opclass::Result<()> {
    let dim = 8;
    let increasing: Vec<f64> = (0..dim).map(|n| (n + 1) as f64 / (n + 2) as f64).collect();
    report(&increasing, dim)?;

    let decreasing_step = vec![2.0, 1.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
    report(&decreasing_step, dim)?;
    Ok(())
}
