//! Tour of the Hermitian kernel: eigendecomposition, fractional powers,
//! polar factors, and an operator-monotonicity spot check.
//!
//! Everything downstream (class membership, theorem trials) reduces to
//! these three primitives, so the example prints their reconstruction
//! errors on a random instance, then verifies one inequality that only
//! holds because t -> t^alpha is operator monotone: for positive A and a
//! contraction B, (B*AB)^alpha - B*A^alphaB is positive semidefinite.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use opclass::{
    frac_power, hermitian_eig, is_psd, polar, random_gaussian, random_psd, ComplexMatrix,
    Tolerance,
};

fn main() -> opclass::Result<()> {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let n = 8;

    let h = random_psd(n, &mut rng);
    let eig = hermitian_eig(&h, &tol)?;
    let reconstructed = &(&eig.vectors * &ComplexMatrix::diag_real(&eig.values))
        * &eig.vectors.adjoint();
    println!(
        "eigendecomposition: lambda in [{:+.4}, {:+.4}], ||V D V* - H|| = {:.3e}",
        eig.min_value(),
        eig.max_value(),
        (&reconstructed - &h).norm_fro()
    );

    let root = frac_power(&h, 0.5, &tol)?;
    println!(
        "fractional power:   ||(H^0.5)^2 - H|| = {:.3e}",
        (&(&root * &root) - &h).norm_fro()
    );

    let a = random_gaussian(n, n, &mut rng);
    let parts = polar(&a, &tol)?;
    println!(
        "polar:              ||U P - A|| = {:.3e}, unitary factor: {}",
        parts.reconstruction_error, parts.is_unitary
    );

    // contraction: scale a Gaussian below unit operator norm; the Frobenius
    // norm dominates the operator norm, so this is safe
    let g = random_gaussian(n, n, &mut rng);
    let b = g.scale_real(0.9 / g.norm_fro());
    for alpha in [0.3, 0.5, 0.9] {
        let inner = &(&b.adjoint() * &h) * &b;
        let lhs = frac_power(&inner.hermitize(), alpha, &tol)?;
        let rhs = &(&b.adjoint() * &frac_power(&h, alpha, &tol)?) * &b;
        let diff = (&lhs - &rhs).hermitize();
        let (psd, min_eig) = is_psd(&diff, &tol)?;
        println!(
            "monotonicity:       (B*AB)^{alpha} - B*A^{alpha}B psd: {psd} (min eig {min_eig:+.3e})"
        );
    }
    Ok(())
}
