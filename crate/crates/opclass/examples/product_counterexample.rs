//! Quasihyponormality is not closed under products.
//!
//! The classic witness pair: A the unweighted unilateral shift, B the
//! diagonal idempotent that zeroes the second coordinate. Both factors are
//! quasihyponormal (A on its interior window, B everywhere), yet for the
//! product ||(AB)*(AB) e_0|| = 1 while ||(AB)^2 e_0|| = 0, so the membership
//! inequality fails at a basis vector with the largest possible gap.

use opclass::{check_pk_quasihyponormal, example_2_1, interior_region, Region, Tolerance};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();
    let dim = 8;
    let bundle = example_2_1(dim)?;
    let a = bundle.get("A")?;
    let b = bundle.get("B")?;
    let ab = bundle.get("AB")?;

    println!("A = shift, B = diagonal idempotent, dimension {dim}");
    println!("AB =\n{ab}");

    let window = interior_region(dim, 2);
    for (label, m, region) in [
        ("A", a, window),
        ("B", b, Region::Full),
        ("AB", ab, window),
    ] {
        let v = check_pk_quasihyponormal(m, 1.0, 1, region, &tol)?;
        println!(
            "{label:<3} {:<28} {:<10} margin {:+.3e}",
            v.describe(),
            opclass::report::status_str(v.status),
            v.margin
        );
        if let Some(w) = &v.witness {
            let gram = &(&ab.adjoint() * ab) * w;
            let sq = &(ab * ab) * w;
            println!(
                "    witness x with ||(AB)*(AB)x|| = {:.1} and ||(AB)^2 x|| = {:.1}",
                gram.norm_fro(),
                sq.norm_fro()
            );
        }
    }
    Ok(())
}
