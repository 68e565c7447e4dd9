//! Spectral kernel: Hermitian eigendecomposition, fractional matrix powers,
//! polar decomposition, and tolerance-aware positive-semidefinite tests.
//!
//! The eigensolver is a cyclic Jacobi iteration for complex Hermitian
//! matrices. Each rotation first absorbs the phase of the pivot entry, then
//! applies the classical real rotation that annihilates it; unitarity of the
//! accumulated eigenvector matrix is automatic. For the matrix sizes this
//! crate targets (n <= 64, usually n <= 8) Jacobi converges in a handful of
//! sweeps and is accurate to near machine precision, which matters because
//! class verdicts hinge on eigenvalue signs close to zero.

use num_complex::Complex64;

use crate::error::{OpClassError, Result};
use crate::matrix::ComplexMatrix;

/// Hard sweep budget; cyclic Jacobi on n <= 64 Hermitian matrices converges
/// in well under ten sweeps, so running out signals a genuinely bad input.
const MAX_JACOBI_SWEEPS: usize = 64;

/// Off-diagonal mass threshold, relative to the Frobenius norm of the input.
const JACOBI_OFF_THRESHOLD: f64 = 1e-13;

/// Numeric floors used by every check in the crate.
///
/// `psd_floor` scales the acceptance band for "is this Hermitian matrix
/// positive semidefinite"; `equality_rel` scales residual bands for operator
/// identities; `sample_count` is the unit-vector budget for the sampled
/// (paranormal-type) inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub psd_floor: f64,
    pub equality_rel: f64,
    pub sample_count: usize,
}

impl Tolerance {
    pub fn new(psd_floor: f64, equality_rel: f64, sample_count: usize) -> Result<Self> {
        if !(psd_floor >= 0.0 && psd_floor < 1.0) {
            return Err(OpClassError::BadTolerance {
                what: format!("psd_floor {psd_floor} must lie in [0, 1)"),
            });
        }
        if !(equality_rel >= 0.0 && equality_rel < 1.0) {
            return Err(OpClassError::BadTolerance {
                what: format!("equality_rel {equality_rel} must lie in [0, 1)"),
            });
        }
        if sample_count == 0 {
            return Err(OpClassError::BadTolerance {
                what: "sample_count must be positive".to_string(),
            });
        }
        Ok(Self {
            psd_floor,
            equality_rel,
            sample_count,
        })
    }

    /// PSD acceptance floor for a form with Frobenius norm `scale`.
    pub fn psd_bound(&self, form_norm: f64) -> f64 {
        self.psd_floor * (1.0 + form_norm)
    }

    /// Residual acceptance band for an identity whose natural scale is `scale`.
    pub fn eq_bound(&self, scale: f64) -> f64 {
        self.equality_rel * (1.0 + scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            psd_floor: 1e-9,
            equality_rel: 1e-9,
            sample_count: 1000,
        }
    }
}

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// the matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenPair {
    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    pub fn max_value(&self) -> f64 {
        *self.values.last().expect("eigenvalue list is never empty")
    }
}

/// Polar factors A = U P with P positive semidefinite.
///
/// When A is rank-deficient, U is completed by zero on the kernel of P and
/// `is_unitary` records that it is only a partial isometry.
#[derive(Debug, Clone)]
pub struct PolarParts {
    pub isometry: ComplexMatrix,
    pub positive: ComplexMatrix,
    pub reconstruction_error: f64,
    pub is_unitary: bool,
}

fn require_hermitian(h: &ComplexMatrix, tol: &Tolerance) -> Result<()> {
    if !h.is_square() {
        return Err(OpClassError::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let residual = (h - &h.adjoint()).norm_fro();
    let bound = tol.eq_bound(h.norm_fro());
    if residual > bound {
        return Err(OpClassError::NotHermitian { residual, bound });
    }
    Ok(())
}

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is symmetrized once up front so that accumulated floating-point
/// asymmetry cannot push the iteration off the Hermitian manifold.
pub fn hermitian_eig(h: &ComplexMatrix, tol: &Tolerance) -> Result<EigenPair> {
    require_hermitian(h, tol)?;
    let n = h.rows();
    let mut a = h.hermitize();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.norm_fro();
    let off_target = JACOBI_OFF_THRESHOLD * scale;

    if n == 1 {
        return Ok(EigenPair {
            values: vec![a[(0, 0)].re],
            vectors: v,
        });
    }

    let mut converged = a.off_diagonal_norm() <= off_target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_JACOBI_SWEEPS {
            return Err(OpClassError::NoConvergence {
                sweeps,
                off: a.off_diagonal_norm(),
            });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let beta = a[(p, q)];
                let abs_b = beta.norm();
                if abs_b == 0.0 {
                    continue;
                }
                // Phase that turns the pivot real, then the classical
                // rotation angle that annihilates it.
                let phase = beta.conj() / abs_b;
                let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * abs_b);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_phase = phase * s;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * s_phase;
                    a[(k, q)] = akp * s + akq * (phase * c);
                    a[(p, k)] = a[(k, p)].conj();
                    a[(q, k)] = a[(k, q)].conj();
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                a[(p, p)] = Complex64::new(c * c * app - 2.0 * c * s * abs_b + s * s * aqq, 0.0);
                a[(q, q)] = Complex64::new(s * s * app + 2.0 * c * s * abs_b + c * c * aqq, 0.0);
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * s_phase;
                    v[(k, q)] = vkp * s + vkq * (phase * c);
                }
            }
        }
        sweeps += 1;
        converged = a.off_diagonal_norm() <= off_target;
    }

    // Ascending sort; stable so that degenerate eigenvalues keep the
    // lowest-index eigenvector first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(EigenPair { values, vectors })
}

/// P^p for Hermitian positive semidefinite P and exponent p in (0, 1].
///
/// Eigenvalues in the negative tolerance band are clamped to zero before
/// powering; anything below the band is a hard error.
pub fn frac_power(p_mat: &ComplexMatrix, p: f64, tol: &Tolerance) -> Result<ComplexMatrix> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(OpClassError::BadExponent { p });
    }
    let eig = hermitian_eig(p_mat, tol)?;
    let floor = tol.psd_bound(p_mat.norm_fro());
    if eig.min_value() < -floor {
        return Err(OpClassError::NotPsd {
            min_eig: eig.min_value(),
            bound: -floor,
        });
    }
    let powered: Vec<f64> = eig
        .values
        .iter()
        .map(|&lambda| lambda.max(0.0).powf(p))
        .collect();
    let v = &eig.vectors;
    let d = ComplexMatrix::diag_real(&powered);
    Ok((&(v * &d) * &v.adjoint()).hermitize())
}

/// Polar decomposition A = U P with P = (A*A)^{1/2}.
///
/// U is assembled on the range of P from U(Pv) = Av; on the kernel it is
/// zero-extended, which keeps U a partial isometry and makes U P reproduce A
/// exactly for singular inputs.
pub fn polar(a: &ComplexMatrix, tol: &Tolerance) -> Result<PolarParts> {
    if !a.is_square() {
        return Err(OpClassError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let gram = (&a.adjoint() * a).hermitize();
    let eig = hermitian_eig(&gram, tol)?;
    let sigmas: Vec<f64> = eig.values.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let sigma_max = sigmas.last().copied().unwrap_or(0.0);
    let cutoff = tol.eq_bound(sigma_max);

    let v = &eig.vectors;
    let p_mat = {
        let d = ComplexMatrix::diag_real(&sigmas);
        (&(v * &d) * &v.adjoint()).hermitize()
    };

    let mut u_tilde = ComplexMatrix::zeros(n, n);
    let mut full_rank = true;
    for (j, &sigma) in sigmas.iter().enumerate() {
        if sigma > cutoff {
            let av = a * &v.column(j);
            u_tilde.set_column(j, &av.scale_real(1.0 / sigma));
        } else {
            full_rank = false;
        }
    }
    let u = &u_tilde * &v.adjoint();
    let reconstruction_error = (&(&u * &p_mat) - a).norm_fro();
    Ok(PolarParts {
        isometry: u,
        positive: p_mat,
        reconstruction_error,
        is_unitary: full_rank,
    })
}

/// Tolerance-aware PSD test. Returns the verdict together with the minimum
/// eigenvalue, which doubles as the margin reported by class checks.
pub fn is_psd(h: &ComplexMatrix, tol: &Tolerance) -> Result<(bool, f64)> {
    let eig = hermitian_eig(h, tol)?;
    let min_eig = eig.min_value();
    Ok((min_eig >= -tol.psd_bound(h.norm_fro()), min_eig))
}

/// Frobenius distance with shape checking.
pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(OpClassError::ShapeMismatch {
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    Ok((a - b).norm_fro())
}
