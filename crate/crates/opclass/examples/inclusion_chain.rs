//! Class inclusions, and the matrices that separate them.
//!
//! normal => quasinormal => hyponormal => p-hyponormal =>
//! p-quasihyponormal => (p,k)-quasihyponormal holds pointwise, so a random
//! normal matrix must pass every check in the chain for every power choice.
//! Strict separations need non-normal witnesses, and finite dimension
//! leaves little room: the trace of A*A - AA* vanishes, so a hyponormal
//! matrix is already normal. What survives truncation is the k >= 2 layer,
//! separated by nilpotents: J_2 satisfies every k-quasihyponormality with
//! k >= 2 at margin exactly zero (A^k = 0 kills the form), while failing
//! hyponormality outright.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use opclass::{
    check_hyponormal, check_pk_quasihyponormal, random_normal, ComplexMatrix, Region, Tolerance,
};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();
    let ps = [0.25, 0.5, 1.0];
    let ks = [1, 2, 3];

    let mut worst: f64 = 0.0;
    let trials = 50;
    for seed in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_normal(6, &mut rng);
        for p in ps {
            for k in ks {
                let v = check_pk_quasihyponormal(&a, p, k, Region::Full, &tol)?;
                assert!(
                    !v.violated(),
                    "normal input must pass {} (seed {seed})",
                    v.describe()
                );
                worst = worst.min(v.margin);
            }
        }
    }
    println!(
        "{trials} random normal matrices passed all {} power choices; worst margin {worst:+.3e}",
        ps.len() * ks.len()
    );

    let j2 = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]])?;
    println!("\nJ_2 separates the k-layers:");
    let h = check_hyponormal(&j2, false, Region::Full, &tol)?;
    println!(
        "  {:<32} {:<10} margin {:+.3e}",
        h.describe(),
        opclass::report::status_str(h.status),
        h.margin
    );
    for k in ks {
        let v = check_pk_quasihyponormal(&j2, 1.0, k, Region::Full, &tol)?;
        println!(
            "  {:<32} {:<10} margin {:+.3e}",
            v.describe(),
            opclass::report::status_str(v.status),
            v.margin
        );
    }
    Ok(())
}
