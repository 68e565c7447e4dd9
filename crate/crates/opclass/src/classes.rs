//! Operator-class membership checks for finite complex matrices.
//!
//! Each check evaluates the defining inequality of a class and returns a
//! `ClassVerdict`: the status, a margin (minimum eigenvalue of the defining
//! form, or the worst inequality slack found), and a unit witness vector
//! whenever a violation is exhibited.
//!
//! Classes defined by a positive-semidefinite form (normal through
//! (p,k)-quasihyponormal) are decidable and report `Holds` or `Violated`.
//! Classes defined by a norm inequality quantified over all unit vectors
//! (the paranormal family) are checked by candidate sampling plus local
//! descent and report `Violated` or `NoViolationFound`; the single decidable
//! exception is the unstarred k = 2 case, where the quadratic pencil
//! A*^2A^2 - 2t A*A + t^2 I >= 0 (for all t > 0) is an exact certificate and
//! permits `Holds`.
//!
//! Truncating an infinite operator to an N-by-N block manufactures a zero
//! column that can break a class the infinite operator belongs to. The
//! `Region` argument confines the quantified vectors to a leading window
//! so that shift-type examples are judged away from the truncation edge;
//! `Region::Full` is the plain matrix check.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{OpClassError, Result};
use crate::generators::random_unit_vector;
use crate::linalg::{frac_power, hermitian_eig, Tolerance};
use crate::matrix::ComplexMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorClass {
    Normal,
    Hyponormal,
    CoHyponormal,
    Quasinormal,
    Quasihyponormal,
    PHyponormal,
    PQuasihyponormal,
    KQuasihyponormal,
    PKQuasihyponormal,
    Paranormal,
    KParanormal,
    KStarParanormal,
}

impl OperatorClass {
    pub fn id(&self) -> &'static str {
        match self {
            Self::Normal => "normal",
            Self::Hyponormal => "hyponormal",
            Self::CoHyponormal => "co-hyponormal",
            Self::Quasinormal => "quasinormal",
            Self::Quasihyponormal => "quasihyponormal",
            Self::PHyponormal => "p-hyponormal",
            Self::PQuasihyponormal => "p-quasihyponormal",
            Self::KQuasihyponormal => "k-quasihyponormal",
            Self::PKQuasihyponormal => "pk-quasihyponormal",
            Self::Paranormal => "paranormal",
            Self::KParanormal => "k-paranormal",
            Self::KStarParanormal => "k-star-paranormal",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "normal" => Some(Self::Normal),
            "hyponormal" => Some(Self::Hyponormal),
            "co-hyponormal" | "cohyponormal" => Some(Self::CoHyponormal),
            "quasinormal" => Some(Self::Quasinormal),
            "quasihyponormal" => Some(Self::Quasihyponormal),
            "p-hyponormal" => Some(Self::PHyponormal),
            "p-quasihyponormal" => Some(Self::PQuasihyponormal),
            "k-quasihyponormal" => Some(Self::KQuasihyponormal),
            "pk-quasihyponormal" => Some(Self::PKQuasihyponormal),
            "paranormal" => Some(Self::Paranormal),
            "k-paranormal" => Some(Self::KParanormal),
            "k-star-paranormal" | "k-*-paranormal" => Some(Self::KStarParanormal),
            _ => None,
        }
    }

    /// Canonical name for the (p, k) power-conditioned family member.
    pub fn for_powers(p: f64, k: usize) -> Self {
        let p_is_one = p == 1.0;
        match (p_is_one, k) {
            (true, 0) => Self::Hyponormal,
            (false, 0) => Self::PHyponormal,
            (true, 1) => Self::Quasihyponormal,
            (false, 1) => Self::PQuasihyponormal,
            (true, _) => Self::KQuasihyponormal,
            (false, _) => Self::PKQuasihyponormal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    Holds,
    Violated,
    NoViolationFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ClassParams {
    pub p: Option<f64>,
    pub k: Option<usize>,
}

/// Outcome of one class check.
#[derive(Debug, Clone)]
pub struct ClassVerdict {
    pub class: OperatorClass,
    pub params: ClassParams,
    pub status: VerdictStatus,
    pub margin: f64,
    pub witness: Option<ComplexMatrix>,
    pub samples_used: usize,
}

impl ClassVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }

    pub fn violated(&self) -> bool {
        self.status == VerdictStatus::Violated
    }

    /// Class id with whichever power parameters apply, e.g.
    /// `pk-quasihyponormal (p=0.5, k=2)`.
    pub fn describe(&self) -> String {
        let mut label = self.class.id().to_string();
        match (self.params.p, self.params.k) {
            (Some(p), Some(k)) => label.push_str(&format!(" (p={p}, k={k})")),
            (Some(p), None) => label.push_str(&format!(" (p={p})")),
            (None, Some(k)) => label.push_str(&format!(" (k={k})")),
            (None, None) => {}
        }
        label
    }
}

/// Vector window the quantified tests range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Full,
    /// Vectors supported on the first m coordinates only.
    Leading(usize),
}

impl Region {
    fn width(&self, n: usize) -> usize {
        match self {
            Region::Full => n,
            Region::Leading(m) => {
                assert!(*m >= 1 && *m <= n, "window {m} out of range for dimension {n}");
                *m
            }
        }
    }
}

/// Window for a check whose quantified vectors pass through A^degree on an
/// N-by-N truncation: the last `degree` coordinates are contaminated.
pub fn interior_region(dim: usize, degree: usize) -> Region {
    assert!(dim > degree, "dimension {dim} too small for degree {degree}");
    Region::Leading(dim - degree)
}

fn require_square(a: &ComplexMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(OpClassError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(())
}

/// Shared verdict construction for the PSD-form classes: window the form,
/// diagonalize, compare the minimum eigenvalue against the tolerance band.
fn psd_form_verdict(
    class: OperatorClass,
    params: ClassParams,
    form: &ComplexMatrix,
    region: Region,
    tol: &Tolerance,
) -> Result<ClassVerdict> {
    let n = form.rows();
    let m = region.width(n);
    let block = form.leading_block(m).hermitize();
    let eig = hermitian_eig(&block, tol)?;
    let margin = eig.min_value();
    let holds = margin >= -tol.psd_bound(block.norm_fro());
    let (status, witness) = if holds {
        (VerdictStatus::Holds, None)
    } else {
        // witness: eigenvector of the most negative eigenvalue, zero-padded
        // back to the coordinates of the full operator
        let w = eig.vectors.column(0).zero_pad_rows(n);
        (VerdictStatus::Violated, Some(w))
    };
    Ok(ClassVerdict {
        class,
        params,
        status,
        margin,
        witness,
        samples_used: 0,
    })
}

/// Normality: A*A = AA*. Margin is minus the residual norm; a violation
/// witness is the eigenvector of the extreme eigenvalue of the
/// self-commutator, where the two norms ||Ax|| and ||A*x|| differ most.
pub fn check_normal(a: &ComplexMatrix, region: Region, tol: &Tolerance) -> Result<ClassVerdict> {
    require_square(a)?;
    let d = (&(&a.adjoint() * a) - &(a * &a.adjoint())).hermitize();
    let m = region.width(a.rows());
    let block = d.leading_block(m).hermitize();
    let residual = block.norm_fro();
    let scale = a.norm_fro() * a.norm_fro();
    let holds = residual <= tol.eq_bound(scale);
    let (status, witness) = if holds {
        (VerdictStatus::Holds, None)
    } else {
        let eig = hermitian_eig(&block, tol)?;
        let j = if eig.min_value().abs() >= eig.max_value().abs() {
            0
        } else {
            m - 1
        };
        (
            VerdictStatus::Violated,
            Some(eig.vectors.column(j).zero_pad_rows(a.rows())),
        )
    };
    Ok(ClassVerdict {
        class: OperatorClass::Normal,
        params: ClassParams::default(),
        status,
        margin: -residual,
        witness,
        samples_used: 0,
    })
}

/// Hyponormality A*A >= AA*, or co-hyponormality AA* >= A*A.
pub fn check_hyponormal(
    a: &ComplexMatrix,
    co: bool,
    region: Region,
    tol: &Tolerance,
) -> Result<ClassVerdict> {
    require_square(a)?;
    let gram_l = (&a.adjoint() * a).hermitize();
    let gram_r = (a * &a.adjoint()).hermitize();
    let form = if co { &gram_r - &gram_l } else { &gram_l - &gram_r };
    let class = if co {
        OperatorClass::CoHyponormal
    } else {
        OperatorClass::Hyponormal
    };
    psd_form_verdict(class, ClassParams::default(), &form, region, tol)
}

/// Quasinormality: A commutes with A*A. Checked through two algebraically
/// equivalent criteria, the commutator residual A(A*A) - (A*A)A and the Gram
/// identity (A*A)^2 = A*^2A^2; a strong disagreement between them is
/// reported as `CriterionMismatch` (numerical trouble, not class failure).
pub fn check_quasinormal(a: &ComplexMatrix, region: Region, tol: &Tolerance) -> Result<ClassVerdict> {
    require_square(a)?;
    let n = a.rows();
    let m = region.width(n);
    let gram = (&a.adjoint() * a).hermitize();
    let norm_a = a.norm_fro();

    // criterion 1: commutator columns over the window
    let r1 = &(a * &gram) - &(&gram * a);
    let residual1 = r1.leading_columns(m).norm_fro();
    let bound1 = tol.eq_bound(norm_a.powi(3));
    let holds1 = residual1 <= bound1;

    // criterion 2: Gram identity on the window block
    let a2 = a * a;
    let r2 = &(&gram * &gram) - &(&a2.adjoint() * &a2);
    let residual2 = r2.leading_block(m).norm_fro();
    let bound2 = tol.eq_bound(norm_a.powi(4));
    let holds2 = residual2 <= bound2;

    if holds1 != holds2 {
        let strong = (holds1 && residual2 > 10.0 * bound2) || (holds2 && residual1 > 10.0 * bound1);
        if strong {
            return Err(OpClassError::CriterionMismatch {
                primary: -residual1,
                secondary: -residual2,
            });
        }
    }

    let (status, witness) = if holds1 {
        (VerdictStatus::Holds, None)
    } else {
        // top right-singular vector of the windowed commutator: the unit x
        // maximizing ||(A(A*A) - (A*A)A) x||
        let r1w = r1.leading_columns(m);
        let g = (&r1w.adjoint() * &r1w).hermitize();
        let eig = hermitian_eig(&g, tol)?;
        (
            VerdictStatus::Violated,
            Some(eig.vectors.column(m - 1).zero_pad_rows(n)),
        )
    };
    Ok(ClassVerdict {
        class: OperatorClass::Quasinormal,
        params: ClassParams::default(),
        status,
        margin: -residual1,
        witness,
        samples_used: 0,
    })
}

/// (p, k)-quasihyponormality: A*^k ((A*A)^p - (AA*)^p) A^k >= 0 with
/// 0 < p <= 1. k = 0 is p-hyponormality; p = 1, k = 1 is plain
/// quasihyponormality. The fractional powers go through the Hermitian
/// eigendecomposition, so this path is numerically independent of the
/// product-form checks below.
pub fn check_pk_quasihyponormal(
    a: &ComplexMatrix,
    p: f64,
    k: usize,
    region: Region,
    tol: &Tolerance,
) -> Result<ClassVerdict> {
    require_square(a)?;
    let gram_l = (&a.adjoint() * a).hermitize();
    let gram_r = (a * &a.adjoint()).hermitize();
    let d = &frac_power(&gram_l, p, tol)? - &frac_power(&gram_r, p, tol)?;
    let ak = a.pow_int(k)?;
    let form = (&(&ak.adjoint() * &d) * &ak).hermitize();
    psd_form_verdict(
        OperatorClass::for_powers(p, k),
        ClassParams { p: Some(p), k: Some(k) },
        &form,
        region,
        tol,
    )
}

/// Quasihyponormality through the product form A*^2A^2 >= (A*A)^2.
/// Cross-checked against the (p, k) = (1, 1) conjugated form; the two are
/// the same matrix identity evaluated along different floating-point routes.
pub fn check_quasihyponormal_normform(
    a: &ComplexMatrix,
    region: Region,
    tol: &Tolerance,
) -> Result<ClassVerdict> {
    require_square(a)?;
    let gram = (&a.adjoint() * a).hermitize();
    let a2 = a * a;
    let form = (&(&a2.adjoint() * &a2) - &(&gram * &gram)).hermitize();
    let mut verdict = psd_form_verdict(
        OperatorClass::Quasihyponormal,
        ClassParams { p: Some(1.0), k: Some(1) },
        &form,
        region,
        tol,
    )?;
    verdict.params = ClassParams { p: Some(1.0), k: Some(1) };

    let cross = check_pk_quasihyponormal(a, 1.0, 1, region, tol)?;
    if cross.status != verdict.status {
        let band = tol.psd_bound(form.norm_fro());
        let strong = verdict.margin < -10.0 * band || cross.margin < -10.0 * band;
        if strong {
            return Err(OpClassError::CriterionMismatch {
                primary: verdict.margin,
                secondary: cross.margin,
            });
        }
    }
    Ok(verdict)
}

/// k-quasihyponormality through the conjugated self-commutator
/// A*^k (A*A - AA*) A^k >= 0, built purely from products. Cross-checked
/// against the spectral route at p = 1.
pub fn check_k_quasihyponormal_unbounded_form(
    a: &ComplexMatrix,
    k: usize,
    region: Region,
    tol: &Tolerance,
) -> Result<ClassVerdict> {
    require_square(a)?;
    let d = (&(&a.adjoint() * a) - &(a * &a.adjoint())).hermitize();
    let ak = a.pow_int(k)?;
    let form = (&(&ak.adjoint() * &d) * &ak).hermitize();
    let mut verdict = psd_form_verdict(
        OperatorClass::KQuasihyponormal,
        ClassParams { p: Some(1.0), k: Some(k) },
        &form,
        region,
        tol,
    )?;
    verdict.params = ClassParams { p: Some(1.0), k: Some(k) };

    let cross = check_pk_quasihyponormal(a, 1.0, k, region, tol)?;
    if cross.status != verdict.status {
        let band = tol.psd_bound(form.norm_fro());
        let strong = verdict.margin < -10.0 * band || cross.margin < -10.0 * band;
        if strong {
            return Err(OpClassError::CriterionMismatch {
                primary: verdict.margin,
                secondary: cross.margin,
            });
        }
    }
    Ok(verdict)
}

/// Norm-inequality slack of the paranormal family at a unit vector x:
/// ||A^k x|| - ||Ax||^k, or ||A^k x|| - ||A*x||^k for the starred variant.
/// Negative slack certifies a violation.
pub fn paranormal_slack(a: &ComplexMatrix, k: usize, starred: bool, x: &ComplexMatrix) -> f64 {
    let mut acc = x.clone();
    for _ in 0..k {
        acc = a * &acc;
    }
    let high = acc.norm_fro();
    let low = if starred {
        (&a.adjoint() * x).norm_fro()
    } else {
        (a * x).norm_fro()
    };
    high - low.powi(k as i32)
}

/// Slack of the (p, k) form at x via the norm route: with v = A^k x the form
/// value is <((A*A)^p - (AA*)^p) v, v>, which for p = 1 reduces to
/// ||Av||^2 - ||A*v||^2 and needs no eigendecomposition.
pub fn pk_form_slack(
    a: &ComplexMatrix,
    p: f64,
    k: usize,
    x: &ComplexMatrix,
    tol: &Tolerance,
) -> Result<f64> {
    let v = &a.pow_int(k)? * x;
    if p == 1.0 {
        let av = a * &v;
        let asv = &a.adjoint() * &v;
        Ok(av.norm_fro().powi(2) - asv.norm_fro().powi(2))
    } else {
        let gram_l = (&a.adjoint() * a).hermitize();
        let gram_r = (a * &a.adjoint()).hermitize();
        let d = &frac_power(&gram_l, p, tol)? - &frac_power(&gram_r, p, tol)?;
        Ok((&d * &v).inner(&v).re)
    }
}

fn project_to_window(x: &mut ComplexMatrix, m: usize) {
    for i in m..x.rows() {
        x[(i, 0)] = Complex64::new(0.0, 0.0);
    }
}

fn normalize(x: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = x.norm_fro();
    if n < 1e-300 {
        None
    } else {
        Some(x.scale_real(1.0 / n))
    }
}

/// One projected-descent refinement of a candidate: walk against the slack
/// gradient on the unit sphere of the window, with backtracking steps.
fn refine_candidate(
    a: &ComplexMatrix,
    k: usize,
    starred: bool,
    m: usize,
    start: &ComplexMatrix,
    max_steps: usize,
) -> (ComplexMatrix, f64) {
    let ak = a.pow_int(k).expect("square by construction");
    let gram_k = (&ak.adjoint() * &ak).hermitize();
    let gram = (&a.adjoint() * a).hermitize();
    let gram_star = (a * &a.adjoint()).hermitize();

    let mut x = start.clone();
    let mut best = paranormal_slack(a, k, starred, &x);
    let mut step = 0.25;
    for _ in 0..max_steps {
        let akx_norm = (&ak * &x).norm_fro();
        if akx_norm < 1e-300 {
            break; // slack is already -||Ax||^k here; nothing smooth to follow
        }
        let low_vec = if starred { &gram_star * &x } else { &gram * &x };
        let low = if starred {
            (&a.adjoint() * &x).norm_fro()
        } else {
            (a * &x).norm_fro()
        };
        let term1 = (&gram_k * &x).scale_real(1.0 / akx_norm);
        let term2 = low_vec.scale_real(k as f64 * low.powi(k as i32 - 2));
        let mut grad = &term1 - &term2;
        project_to_window(&mut grad, m);
        if grad.norm_fro() < 1e-14 {
            break;
        }
        let mut improved = false;
        let mut eta = step;
        for _ in 0..8 {
            let mut trial = &x - &grad.scale_real(eta);
            project_to_window(&mut trial, m);
            if let Some(t) = normalize(&trial) {
                let s = paranormal_slack(a, k, starred, &t);
                if s < best - 1e-16 {
                    x = t;
                    best = s;
                    improved = true;
                    break;
                }
            }
            eta *= 0.5;
        }
        if !improved {
            break;
        }
        step = (step * 1.5).min(0.5);
    }
    (x, best)
}

/// Minimum eigenvalue of the windowed pencil M - 2t K + t^2 I.
fn pencil_min_eig(
    m_blk: &ComplexMatrix,
    k_blk: &ComplexMatrix,
    t: f64,
    tol: &Tolerance,
) -> Result<f64> {
    let dim = m_blk.rows();
    let id = ComplexMatrix::identity(dim);
    let f = &(m_blk - &k_blk.scale_real(2.0 * t)) + &id.scale_real(t * t);
    Ok(hermitian_eig(&f.hermitize(), tol)?.min_value())
}

/// Paranormal-family check: ||Ax||^k <= ||A^k x|| ||x||^{k-1} for all x
/// (replace ||Ax|| by ||A*x|| for the starred variant), with k >= 2.
///
/// Candidates: window basis vectors, eigenvectors of the windowed Gram
/// blocks of A and A^k, and `sample_count` seeded random unit vectors; every
/// candidate is refined by projected descent. For the unstarred k = 2 case
/// the pencil certificate decides the class exactly, so `Holds` is possible;
/// all other cases report `NoViolationFound` at best.
pub fn check_paranormal_family(
    a: &ComplexMatrix,
    k: usize,
    starred: bool,
    region: Region,
    tol: &Tolerance,
    seed: u64,
) -> Result<ClassVerdict> {
    require_square(a)?;
    if k < 2 {
        return Err(OpClassError::BadParameter {
            what: format!("paranormal family needs k >= 2, got {k}"),
        });
    }
    let n = a.rows();
    let m = region.width(n);
    let class = if starred {
        OperatorClass::KStarParanormal
    } else if k == 2 {
        OperatorClass::Paranormal
    } else {
        OperatorClass::KParanormal
    };
    let params = ClassParams { p: None, k: Some(k) };
    let slack_scale = 1.0 + a.norm_fro().powi(k as i32);
    let slack_band = tol.psd_floor * slack_scale;

    // decidable branch: quadratic pencil certificate for plain paranormality
    if k == 2 && !starred {
        let gram = (&a.adjoint() * a).hermitize().leading_block(m);
        let a2 = a * a;
        let gram2 = (&a2.adjoint() * &a2).hermitize().leading_block(m);
        let gram_eig = hermitian_eig(&gram, tol)?;
        let sigma_max = gram_eig.max_value().max(0.0);
        if sigma_max <= tol.psd_bound(0.0) {
            // A acts as zero on the window; the inequality is an equality
            return Ok(ClassVerdict {
                class,
                params,
                status: VerdictStatus::Holds,
                margin: 0.0,
                witness: None,
                samples_used: 0,
            });
        }
        let lo = (gram_eig.min_value().max(0.0) / 10.0).max(tol.psd_floor * (1.0 + sigma_max));
        let hi = 10.0 * sigma_max;
        let grid = 200usize;
        let ratio = (hi / lo).powf(1.0 / (grid as f64 - 1.0));
        let mut best_t = lo;
        let mut best_val = f64::INFINITY;
        let mut t = lo;
        for _ in 0..grid {
            let v = pencil_min_eig(&gram2, &gram, t, tol)?;
            if v < best_val {
                best_val = v;
                best_t = t;
            }
            t *= ratio;
        }
        // golden-section refinement around the best grid point, in log t
        let mut a_log = (best_t / ratio).ln();
        let mut b_log = (best_t * ratio).ln();
        let phi = 0.618_033_988_749_894_8;
        let mut x1 = b_log - phi * (b_log - a_log);
        let mut x2 = a_log + phi * (b_log - a_log);
        let mut f1 = pencil_min_eig(&gram2, &gram, x1.exp(), tol)?;
        let mut f2 = pencil_min_eig(&gram2, &gram, x2.exp(), tol)?;
        for _ in 0..40 {
            if f1 <= f2 {
                b_log = x2;
                x2 = x1;
                f2 = f1;
                x1 = b_log - phi * (b_log - a_log);
                f1 = pencil_min_eig(&gram2, &gram, x1.exp(), tol)?;
            } else {
                a_log = x1;
                x1 = x2;
                f1 = f2;
                x2 = a_log + phi * (b_log - a_log);
                f2 = pencil_min_eig(&gram2, &gram, x2.exp(), tol)?;
            }
        }
        let (t_min, pencil_min) = if f1 <= f2 {
            (x1.exp(), f1.min(best_val))
        } else {
            (x2.exp(), f2.min(best_val))
        };

        let pencil_scale = gram2.norm_fro() + 2.0 * t_min * gram.norm_fro() + t_min * t_min;
        if pencil_min >= -tol.psd_floor * (1.0 + pencil_scale) {
            return Ok(ClassVerdict {
                class,
                params,
                status: VerdictStatus::Holds,
                margin: pencil_min,
                witness: None,
                samples_used: 0,
            });
        }
        // negative pencil: its bottom eigenvector violates the norm
        // inequality outright (the quadratic in t dips below zero there)
        let id = ComplexMatrix::identity(m);
        let f = &(&gram2 - &gram.scale_real(2.0 * t_min)) + &id.scale_real(t_min * t_min);
        let eig = hermitian_eig(&f.hermitize(), tol)?;
        let w0 = eig.vectors.column(0).zero_pad_rows(n);
        let (w, slack) = refine_candidate(a, k, starred, m, &w0, 50);
        if slack < -slack_band {
            return Ok(ClassVerdict {
                class,
                params,
                status: VerdictStatus::Violated,
                margin: slack,
                witness: Some(w),
                samples_used: 1,
            });
        }
        // pencil negative but slack within band: numerically undecided
        return Ok(ClassVerdict {
            class,
            params,
            status: VerdictStatus::NoViolationFound,
            margin: slack,
            witness: None,
            samples_used: 1,
        });
    }

    // sampled branch
    let mut candidates: Vec<ComplexMatrix> = Vec::new();
    for i in 0..m {
        candidates.push(ComplexMatrix::basis_vector(n, i));
    }
    let gram = (&a.adjoint() * a).hermitize().leading_block(m);
    if let Ok(eig) = hermitian_eig(&gram, tol) {
        for j in 0..m {
            candidates.push(eig.vectors.column(j).zero_pad_rows(n));
        }
    }
    let ak = a.pow_int(k)?;
    let gram_k = (&ak.adjoint() * &ak).hermitize().leading_block(m);
    if let Ok(eig) = hermitian_eig(&gram_k, tol) {
        for j in 0..m {
            candidates.push(eig.vectors.column(j).zero_pad_rows(n));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tol.sample_count {
        let v = random_unit_vector(m, &mut rng);
        candidates.push(v.zero_pad_rows(n));
    }

    let samples_used = candidates.len();
    let mut best_slack = f64::INFINITY;
    let mut best_witness: Option<ComplexMatrix> = None;
    for cand in &candidates {
        let (w, slack) = refine_candidate(a, k, starred, m, cand, 50);
        if slack < best_slack {
            best_slack = slack;
            best_witness = Some(w);
            if best_slack < -slack_band && best_slack < -1e-3 * slack_scale {
                break; // gross violation; no need to keep scanning
            }
        }
    }

    if best_slack < -slack_band {
        Ok(ClassVerdict {
            class,
            params,
            status: VerdictStatus::Violated,
            margin: best_slack,
            witness: best_witness,
            samples_used,
        })
    } else {
        Ok(ClassVerdict {
            class,
            params,
            status: VerdictStatus::NoViolationFound,
            margin: best_slack,
            witness: None,
            samples_used,
        })
    }
}

/// Runs the selected class checks, expanding power-conditioned families
/// over the given grids. Paranormal families use only grid values >= 2 and
/// fall back to k = 2 when the grid offers none.
pub fn classify_matrix(
    a: &ComplexMatrix,
    classes: &[OperatorClass],
    p_grid: &[f64],
    k_grid: &[usize],
    region: Region,
    tol: &Tolerance,
    seed: u64,
) -> Result<Vec<ClassVerdict>> {
    let paranormal_ks = || -> Vec<usize> {
        let ks: Vec<usize> = k_grid.iter().copied().filter(|k| *k >= 2).collect();
        if ks.is_empty() {
            vec![2]
        } else {
            ks
        }
    };
    let mut verdicts = Vec::new();
    for class in classes {
        match class {
            OperatorClass::Normal => verdicts.push(check_normal(a, region, tol)?),
            OperatorClass::Hyponormal => {
                verdicts.push(check_hyponormal(a, false, region, tol)?)
            }
            OperatorClass::CoHyponormal => {
                verdicts.push(check_hyponormal(a, true, region, tol)?)
            }
            OperatorClass::Quasinormal => verdicts.push(check_quasinormal(a, region, tol)?),
            OperatorClass::Quasihyponormal => {
                verdicts.push(check_quasihyponormal_normform(a, region, tol)?)
            }
            OperatorClass::PHyponormal => {
                for &p in p_grid {
                    verdicts.push(check_pk_quasihyponormal(a, p, 0, region, tol)?);
                }
            }
            OperatorClass::PQuasihyponormal => {
                for &p in p_grid {
                    verdicts.push(check_pk_quasihyponormal(a, p, 1, region, tol)?);
                }
            }
            OperatorClass::KQuasihyponormal => {
                for &k in k_grid {
                    verdicts.push(check_k_quasihyponormal_unbounded_form(a, k, region, tol)?);
                }
            }
            OperatorClass::PKQuasihyponormal => {
                for &p in p_grid {
                    for &k in k_grid {
                        verdicts.push(check_pk_quasihyponormal(a, p, k, region, tol)?);
                    }
                }
            }
            OperatorClass::Paranormal => {
                verdicts.push(check_paranormal_family(a, 2, false, region, tol, seed)?)
            }
            OperatorClass::KParanormal => {
                for k in paranormal_ks() {
                    verdicts.push(check_paranormal_family(a, k, false, region, tol, seed)?);
                }
            }
            OperatorClass::KStarParanormal => {
                for k in paranormal_ks() {
                    verdicts.push(check_paranormal_family(a, k, true, region, tol, seed)?);
                }
            }
        }
    }
    Ok(verdicts)
}

/// Every class id, in the order classification reports them.
pub fn all_classes() -> Vec<OperatorClass> {
    vec![
        OperatorClass::Normal,
        OperatorClass::Hyponormal,
        OperatorClass::CoHyponormal,
        OperatorClass::Quasinormal,
        OperatorClass::Quasihyponormal,
        OperatorClass::PHyponormal,
        OperatorClass::PQuasihyponormal,
        OperatorClass::KQuasihyponormal,
        OperatorClass::PKQuasihyponormal,
        OperatorClass::Paranormal,
        OperatorClass::KParanormal,
        OperatorClass::KStarParanormal,
    ]
}
