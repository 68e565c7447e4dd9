//! Helpers shared by the integration suites.
//!
//! Each test target compiles its own copy, so helpers a target does not
//! touch are expected.
#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use opclass::{random_gaussian, random_normal, random_unit_vector, ComplexMatrix};

/// Dense-sampling referee for the paranormal inequality
/// ||Ax||^k <= ||A^k x|| ||x||^(k-1) (starred: ||A*x||^k on the left).
///
/// Returns the worst slack over `samples` random unit vectors; a clearly
/// negative value certifies a violation, a nonnegative one is only
/// evidence. Independent of the pencil certificate on purpose: it never
/// calls the eigensolver.
pub fn paranormal_sampling_slack(
    a: &ComplexMatrix,
    k: usize,
    starred: bool,
    samples: usize,
    seed: u64,
) -> f64 {
    assert!(k >= 2, "paranormal family starts at k = 2");
    let n = a.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut powered = a.clone();
    for _ in 1..k {
        powered = &powered * a;
    }
    let adj = a.adjoint();
    let mut worst = f64::INFINITY;
    for _ in 0..samples {
        let x = random_unit_vector(n, &mut rng);
        let lhs = if starred {
            (&adj * &x).norm_fro().powi(k as i32)
        } else {
            (a * &x).norm_fro().powi(k as i32)
        };
        let rhs = (&powered * &x).norm_fro();
        worst = worst.min(rhs - lhs);
    }
    worst
}

/// Mixed instance stream for equivalence sweeps: normal, truncated shift,
/// and generic Gaussian matrices in rotation.
pub fn mixed_instance(index: u64, dim: usize) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_7865_6400 + index);
    match index % 3 {
        0 => random_normal(dim, &mut rng),
        1 => {
            use rand::Rng;
            let weights: Vec<f64> = (0..dim - 1).map(|_| 0.2 + 1.8 * rng.gen::<f64>()).collect();
            let spec = opclass::ShiftSpec::new(
                weights,
                dim,
                opclass::ShiftKind::Unilateral,
                opclass::BoundaryMode::ZeroFill,
            )
            .expect("weights are positive");
            opclass::make_shift(&spec)
        }
        _ => random_gaussian(dim, dim, &mut rng),
    }
}
