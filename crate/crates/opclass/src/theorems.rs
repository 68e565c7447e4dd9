//! Registry of product, sum, and transfer statements with a randomized
//! trial harness.
//!
//! Each entry lists hypothesis checks and conclusion checks over the named
//! matrices of an instance bundle. A trial generates a bundle for the entry,
//! re-verifies every hypothesis from scratch, and only then judges the
//! conclusions; a failed hypothesis makes the trial inconclusive rather than
//! a counterexample. Equivalences carry a second list pair that is evaluated
//! on the same bundle with reversed roles.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classes::{
    check_hyponormal, check_k_quasihyponormal_unbounded_form, check_normal,
    check_paranormal_family, check_pk_quasihyponormal, check_quasihyponormal_normform,
    check_quasinormal, interior_region, Region, VerdictStatus,
};
use crate::error::{OpClassError, Result};
use crate::generators::{example_2_1, example_2_2, random_pair_for, random_unit_vector, InstanceBundle};
use crate::linalg::{hermitian_eig, Tolerance};
use crate::matrix::ComplexMatrix;

/// AB - BA.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) - &(b * a)
}

/// A*A - AA*.
pub fn self_commutator(a: &ComplexMatrix) -> ComplexMatrix {
    commutator(&a.adjoint(), a)
}

/// omega A + B.
pub fn span_member(omega: Complex64, a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &a.scale(omega) + b
}

/// One multiplicand in a product expression over bundle keys. `Pow` raises
/// to the bundle exponent k, `PowP1` to k + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    M(&'static str),
    Adj(&'static str),
    Pow(&'static str),
    PowP1(&'static str),
}

/// Class membership demanded of a named matrix. Exponents come from the
/// bundle parameters at evaluation time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassReq {
    Normal,
    Hyponormal,
    CoHyponormal,
    Quasinormal,
    Quasihyponormal,
    PkQuasihyponormal,
    KQuasihyponormal,
    Paranormal { starred: bool },
}

/// A single verifiable condition over an instance bundle.
#[derive(Debug, Clone)]
pub enum CheckSpec {
    /// Frobenius distance of two products within the equality band.
    Equal {
        name: &'static str,
        left: Vec<Factor>,
        right: Vec<Factor>,
    },
    /// Named matrix belongs to the class.
    Member {
        name: &'static str,
        key: &'static str,
        req: ClassReq,
    },
    /// ||M*M - I|| within the equality band.
    Unitary { name: &'static str, key: &'static str },
    /// Smallest eigenvalue of the hermitized matrix above the psd band.
    PsdMatrix { name: &'static str, key: &'static str },
    /// Smallest singular value above a fixed floor.
    MinSingularValue {
        name: &'static str,
        key: &'static str,
        floor: f64,
    },
    /// omega A + B quasihyponormal for the bundle omega and for 1 and i.
    SpanQuasihyponormal { name: &'static str },
    /// ||A^k x||^2 <= ||A^{k+1} x|| ||A^{k-1} x|| on random unit vectors.
    NormInterpolation { name: &'static str },
    /// A*^k (A*^2A^2 - a A*A + a^2 I) A^k psd across a coefficient grid
    /// scaled by the top squared singular value.
    QuadraticFamilyPsd { name: &'static str },
    /// ||A u||^2 <= 2 ||A^2 u|| ||u|| for u = A^k x on random unit x.
    DiscriminantSampled { name: &'static str },
}

impl CheckSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CheckSpec::Equal { name, .. }
            | CheckSpec::Member { name, .. }
            | CheckSpec::Unitary { name, .. }
            | CheckSpec::PsdMatrix { name, .. }
            | CheckSpec::MinSingularValue { name, .. }
            | CheckSpec::SpanQuasihyponormal { name }
            | CheckSpec::NormInterpolation { name }
            | CheckSpec::QuadraticFamilyPsd { name }
            | CheckSpec::DiscriminantSampled { name } => name,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Equivalence,
}

/// Registered statement: hypothesis and conclusion checks, plus the reverse
/// pair for equivalences.
#[derive(Debug, Clone)]
pub struct TheoremSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub direction: Direction,
    pub hypotheses: Vec<CheckSpec>,
    pub conclusions: Vec<CheckSpec>,
    pub reverse_hypotheses: Vec<CheckSpec>,
    pub reverse_conclusions: Vec<CheckSpec>,
}

/// Evaluated condition: the headline scalar, the band it was judged
/// against, and the verdict payload when the condition was a class check.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
    pub status: Option<VerdictStatus>,
    pub witness: Option<ComplexMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialOutcome {
    ConclusionHeld,
    ConclusionViolated,
    HypothesesUnsatisfiable,
}

#[derive(Debug, Clone)]
pub struct TrialReport {
    pub theorem_id: String,
    pub dim: usize,
    pub seed: u64,
    pub outcome: TrialOutcome,
    pub hypotheses: Vec<CheckRecord>,
    pub conclusions: Vec<CheckRecord>,
}

impl TrialReport {
    pub fn violated(&self) -> bool {
        self.outcome == TrialOutcome::ConclusionViolated
    }
}

fn eval_factor(bundle: &InstanceBundle, f: Factor, k: usize) -> Result<ComplexMatrix> {
    match f {
        Factor::M(key) => Ok(bundle.get(key)?.clone()),
        Factor::Adj(key) => Ok(bundle.get(key)?.adjoint()),
        Factor::Pow(key) => bundle.get(key)?.pow_int(k),
        Factor::PowP1(key) => bundle.get(key)?.pow_int(k + 1),
    }
}

fn eval_product(bundle: &InstanceBundle, factors: &[Factor], k: usize) -> Result<ComplexMatrix> {
    let mut acc = eval_factor(bundle, factors[0], k)?;
    for f in &factors[1..] {
        acc = &acc * &eval_factor(bundle, *f, k)?;
    }
    Ok(acc)
}

fn class_verdict(
    req: ClassReq,
    m: &ComplexMatrix,
    bundle: &InstanceBundle,
    tol: &Tolerance,
    seed: u64,
) -> Result<crate::classes::ClassVerdict> {
    match req {
        ClassReq::Normal => check_normal(m, Region::Full, tol),
        ClassReq::Hyponormal => check_hyponormal(m, false, Region::Full, tol),
        ClassReq::CoHyponormal => check_hyponormal(m, true, Region::Full, tol),
        ClassReq::Quasinormal => check_quasinormal(m, Region::Full, tol),
        ClassReq::Quasihyponormal => check_quasihyponormal_normform(m, Region::Full, tol),
        ClassReq::PkQuasihyponormal => {
            check_pk_quasihyponormal(m, bundle.p(), bundle.k(), Region::Full, tol)
        }
        ClassReq::KQuasihyponormal => {
            check_k_quasihyponormal_unbounded_form(m, bundle.k(), Region::Full, tol)
        }
        ClassReq::Paranormal { starred } => {
            check_paranormal_family(m, bundle.k().max(2), starred, Region::Full, tol, seed)
        }
    }
}

fn sampling_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Evaluates one check against a bundle. `seed` feeds the sampled checks.
pub fn evaluate_check(
    check: &CheckSpec,
    bundle: &InstanceBundle,
    tol: &Tolerance,
    seed: u64,
) -> Result<CheckRecord> {
    let k = bundle.k();
    match check {
        CheckSpec::Equal { name, left, right } => {
            let l = eval_product(bundle, left, k)?;
            let r = eval_product(bundle, right, k)?;
            let residual = (&l - &r).norm_fro();
            let bound = tol.eq_bound(0.5 * (l.norm_fro() + r.norm_fro()));
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: residual,
                bound,
                passed: residual <= bound,
                status: None,
                witness: None,
            })
        }
        CheckSpec::Member { name, key, req } => {
            let verdict = class_verdict(*req, bundle.get(key)?, bundle, tol, seed)?;
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: verdict.margin,
                bound: 0.0,
                passed: verdict.status != VerdictStatus::Violated,
                status: Some(verdict.status),
                witness: verdict.witness,
            })
        }
        CheckSpec::Unitary { name, key } => {
            let u = bundle.get(key)?;
            let residual =
                (&(&u.adjoint() * u) - &ComplexMatrix::identity(u.cols())).norm_fro();
            let bound = tol.eq_bound(u.norm_fro().powi(2));
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: residual,
                bound,
                passed: residual <= bound,
                status: None,
                witness: None,
            })
        }
        CheckSpec::PsdMatrix { name, key } => {
            let h = bundle.get(key)?.hermitize();
            let eig = hermitian_eig(&h, tol)?;
            let min = eig.min_value();
            let bound = tol.psd_bound(h.norm_fro());
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: min,
                bound,
                passed: min >= -bound,
                status: None,
                witness: None,
            })
        }
        CheckSpec::MinSingularValue { name, key, floor } => {
            let m = bundle.get(key)?;
            let gram = (&m.adjoint() * m).hermitize();
            let eig = hermitian_eig(&gram, tol)?;
            let sigma = eig.min_value().max(0.0).sqrt();
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: sigma,
                bound: *floor,
                passed: sigma > *floor,
                status: None,
                witness: None,
            })
        }
        CheckSpec::SpanQuasihyponormal { name } => {
            let a = bundle.get("A")?;
            let b = bundle.get("B")?;
            let omegas = [
                Complex64::new(bundle.param_or("omega_re", 1.0), bundle.param_or("omega_im", 0.0)),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
            ];
            let mut min_margin = f64::INFINITY;
            let mut passed = true;
            let mut witness = None;
            for omega in omegas {
                let t = span_member(omega, a, b);
                let verdict = check_quasihyponormal_normform(&t, Region::Full, tol)?;
                if verdict.margin < min_margin {
                    min_margin = verdict.margin;
                    witness = verdict.witness.clone();
                }
                if verdict.status == VerdictStatus::Violated {
                    passed = false;
                }
            }
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: min_margin,
                bound: 0.0,
                passed,
                status: Some(if passed {
                    VerdictStatus::Holds
                } else {
                    VerdictStatus::Violated
                }),
                witness,
            })
        }
        CheckSpec::NormInterpolation { name } => {
            let a = bundle.get("A")?;
            let n = a.rows();
            let ak = a.pow_int(k)?;
            let ak_lo = a.pow_int(k - 1)?;
            let ak_hi = a.pow_int(k + 1)?;
            let band = tol.psd_floor * (1.0 + a.norm_fro().powi(2 * k as i32));
            let mut rng = sampling_rng(seed, 0x4e49);
            let mut min_slack = f64::INFINITY;
            let mut witness = None;
            for _ in 0..tol.sample_count {
                let x = random_unit_vector(n, &mut rng);
                let mid = (&ak * &x).norm_fro();
                let slack = (&ak_hi * &x).norm_fro() * (&ak_lo * &x).norm_fro() - mid * mid;
                if slack < min_slack {
                    min_slack = slack;
                    witness = Some(x);
                }
            }
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: min_slack,
                bound: band,
                passed: min_slack >= -band,
                status: None,
                witness,
            })
        }
        CheckSpec::QuadraticFamilyPsd { name } => {
            let a = bundle.get("A")?;
            let gram = (&a.adjoint() * a).hermitize();
            let gram_eig = hermitian_eig(&gram, tol)?;
            let sigma_max2 = gram_eig.max_value().max(0.0);
            let a2 = a * a;
            let g2 = (&a2.adjoint() * &a2).hermitize();
            let ak = a.pow_int(k)?;
            let eye = ComplexMatrix::identity(a.rows());
            let mut worst_value = f64::INFINITY;
            let mut worst_bound = 0.0;
            let mut passed = true;
            for c in [-10.0, -3.0, -1.0, -0.3, 0.0, 0.3, 1.0, 3.0, 10.0] {
                let coeff = c * sigma_max2;
                let center = &(&g2 - &gram.scale_real(coeff)) + &eye.scale_real(coeff * coeff);
                let form = (&(&ak.adjoint() * &center) * &ak).hermitize();
                let eig = hermitian_eig(&form, tol)?;
                let min = eig.min_value();
                let bound = tol.psd_bound(form.norm_fro());
                if min < -bound {
                    passed = false;
                }
                if min + bound < worst_value + worst_bound {
                    worst_value = min;
                    worst_bound = bound;
                }
            }
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: worst_value,
                bound: worst_bound,
                passed,
                status: None,
                witness: None,
            })
        }
        CheckSpec::DiscriminantSampled { name } => {
            let a = bundle.get("A")?;
            let n = a.rows();
            let ak = a.pow_int(k)?;
            let a2 = a * a;
            let band = tol.psd_floor * (1.0 + a.norm_fro().powi(2));
            let mut rng = sampling_rng(seed, 0xd15c);
            let mut min_slack = f64::INFINITY;
            let mut witness = None;
            for _ in 0..tol.sample_count {
                let x = random_unit_vector(n, &mut rng);
                let u = &ak * &x;
                let nu = u.norm_fro();
                if nu < 1e-14 {
                    continue;
                }
                let u_hat = u.scale_real(1.0 / nu);
                let first = (a * &u_hat).norm_fro();
                let slack = 2.0 * (&a2 * &u_hat).norm_fro() - first * first;
                if slack < min_slack {
                    min_slack = slack;
                    witness = Some(x);
                }
            }
            if !min_slack.is_finite() {
                min_slack = 0.0;
            }
            Ok(CheckRecord {
                name: (*name).to_string(),
                value: min_slack,
                bound: band,
                passed: min_slack >= -band,
                status: None,
                witness,
            })
        }
    }
}

fn eq(name: &'static str, left: &[Factor], right: &[Factor]) -> CheckSpec {
    CheckSpec::Equal {
        name,
        left: left.to_vec(),
        right: right.to_vec(),
    }
}

fn member(name: &'static str, key: &'static str, req: ClassReq) -> CheckSpec {
    CheckSpec::Member { name, key, req }
}

fn forward(
    id: &'static str,
    statement: &'static str,
    hypotheses: Vec<CheckSpec>,
    conclusions: Vec<CheckSpec>,
) -> TheoremSpec {
    TheoremSpec {
        id,
        statement,
        direction: Direction::Forward,
        hypotheses,
        conclusions,
        reverse_hypotheses: Vec::new(),
        reverse_conclusions: Vec::new(),
    }
}

fn equivalence(
    id: &'static str,
    statement: &'static str,
    hypotheses: Vec<CheckSpec>,
    conclusions: Vec<CheckSpec>,
    reverse_hypotheses: Vec<CheckSpec>,
    reverse_conclusions: Vec<CheckSpec>,
) -> TheoremSpec {
    TheoremSpec {
        id,
        statement,
        direction: Direction::Equivalence,
        hypotheses,
        conclusions,
        reverse_hypotheses,
        reverse_conclusions,
    }
}

/// All registered statements in fixed order.
pub fn registry() -> Vec<TheoremSpec> {
    use ClassReq::*;
    use Factor::{Adj, M, Pow, PowP1};

    let b_comm_aas = || {
        eq(
            "B AA* = AA* B",
            &[M("B"), M("A"), Adj("A")],
            &[M("A"), Adj("A"), M("B")],
        )
    };
    let asa_comm_b = || {
        eq(
            "A*A B = B A*A",
            &[Adj("A"), M("A"), M("B")],
            &[M("B"), Adj("A"), M("A")],
        )
    };
    let polar_a = |u: &'static str, pos: &'static str| {
        vec![
            CheckSpec::Unitary { name: "U unitary", key: u },
            CheckSpec::PsdMatrix { name: "modulus psd", key: pos },
            eq("A = U |A|", &[M("A")], &[M(u), M(pos)]),
        ]
    };
    let modulus_comm_bu = |pos: &'static str| {
        eq(
            "|A| BU = BU |A|",
            &[M(pos), M("B"), M("U")],
            &[M("B"), M("U"), M(pos)],
        )
    };
    let span_conditions = || {
        vec![
            eq("B* A = A B*", &[Adj("B"), M("A")], &[M("A"), Adj("B")]),
            eq(
                "A* [B*, B] B = 0",
                &[Adj("A"), Adj("B"), M("B"), M("B")],
                &[Adj("A"), M("B"), Adj("B"), M("B")],
            ),
            eq(
                "B* [A*, A] B = 0",
                &[Adj("B"), Adj("A"), M("A"), M("B")],
                &[Adj("B"), M("A"), Adj("A"), M("B")],
            ),
        ]
    };
    let fourth_span_condition = || {
        eq(
            "A* [B*, B] A = 0",
            &[Adj("A"), Adj("B"), M("B"), M("A")],
            &[Adj("A"), M("B"), Adj("B"), M("A")],
        )
    };

    vec![
        forward(
            "T2.1.1",
            "normal A, hyponormal AB, and B commuting with AA* force BA hyponormal",
            vec![
                member("A normal", "A", Normal),
                member("AB hyponormal", "AB", Hyponormal),
                b_comm_aas(),
            ],
            vec![member("BA hyponormal", "BA", Hyponormal)],
        ),
        forward(
            "T2.1.2",
            "normal A, co-hyponormal AB, and B commuting with AA* force BA co-hyponormal",
            vec![
                member("A normal", "A", Normal),
                member("AB co-hyponormal", "AB", CoHyponormal),
                b_comm_aas(),
            ],
            vec![member("BA co-hyponormal", "BA", CoHyponormal)],
        ),
        equivalence(
            "T2.1.3",
            "with A normal, AB hyponormal, and BA co-hyponormal, B commutes with AA* exactly when AB and BA are normal",
            vec![
                member("A normal", "A", Normal),
                member("AB hyponormal", "AB", Hyponormal),
                member("BA co-hyponormal", "BA", CoHyponormal),
                b_comm_aas(),
            ],
            vec![
                member("AB normal", "AB", Normal),
                member("BA normal", "BA", Normal),
            ],
            vec![
                member("A normal", "A", Normal),
                member("AB normal", "AB", Normal),
                member("BA normal", "BA", Normal),
            ],
            vec![b_comm_aas()],
        ),
        equivalence(
            "T2.2",
            "for normal A and normal AB, A*A commutes with B exactly when BA is normal",
            vec![
                member("A normal", "A", Normal),
                member("AB normal", "AB", Normal),
                asa_comm_b(),
            ],
            vec![member("BA normal", "BA", Normal)],
            vec![
                member("A normal", "A", Normal),
                member("AB normal", "AB", Normal),
                member("BA normal", "BA", Normal),
            ],
            vec![asa_comm_b()],
        ),
        equivalence(
            "T2.3",
            "for A = UH with U unitary and H psd: BU normal with H commuting with BU makes AB and BA normal, and conversely normal AB and BA force the commutation",
            {
                let mut h = polar_a("U", "H");
                h.push(member("BU normal", "BU", Normal));
                h.push(modulus_comm_bu("H"));
                h
            },
            vec![
                member("AB normal", "AB", Normal),
                member("BA normal", "BA", Normal),
            ],
            {
                let mut h = polar_a("U", "H");
                h.push(member("AB normal", "AB", Normal));
                h.push(member("BA normal", "BA", Normal));
                h
            },
            vec![modulus_comm_bu("H")],
        ),
        equivalence(
            "T2.4r",
            "for rectangular A and B, both products are normal exactly when (A*A)B = B(AA*) and A(BB*) = (B*B)A",
            vec![
                eq(
                    "(A*A) B = B (AA*)",
                    &[Adj("A"), M("A"), M("B")],
                    &[M("B"), M("A"), Adj("A")],
                ),
                eq(
                    "A (BB*) = (B*B) A",
                    &[M("A"), M("B"), Adj("B")],
                    &[Adj("B"), M("B"), M("A")],
                ),
            ],
            vec![
                member("AB normal", "AB", Normal),
                member("BA normal", "BA", Normal),
            ],
            vec![
                member("AB normal", "AB", Normal),
                member("BA normal", "BA", Normal),
            ],
            vec![
                eq(
                    "(A*A) B = B (AA*)",
                    &[Adj("A"), M("A"), M("B")],
                    &[M("B"), M("A"), Adj("A")],
                ),
                eq(
                    "A (BB*) = (B*B) A",
                    &[M("A"), M("B"), Adj("B")],
                    &[Adj("B"), M("B"), M("A")],
                ),
            ],
        ),
        forward(
            "P2.1.1",
            "A = U|A| with |A| commuting with BU: hyponormal UB makes AB hyponormal",
            {
                let mut h = polar_a("U", "P");
                h.push(modulus_comm_bu("P"));
                h.push(member("UB hyponormal", "UB", Hyponormal));
                h
            },
            vec![member("AB hyponormal", "AB", Hyponormal)],
        ),
        forward(
            "P2.1.2",
            "A = U|A| with |A| commuting with BU: hyponormal BU makes BA hyponormal",
            {
                let mut h = polar_a("U", "P");
                h.push(modulus_comm_bu("P"));
                h.push(member("BU hyponormal", "BU", Hyponormal));
                h
            },
            vec![member("BA hyponormal", "BA", Hyponormal)],
        ),
        forward(
            "P2.1.3",
            "A = U|A| with |A| commuting with BU: quasihyponormal UB makes AB quasihyponormal",
            {
                let mut h = polar_a("U", "P");
                h.push(modulus_comm_bu("P"));
                h.push(member("UB quasihyponormal", "UB", Quasihyponormal));
                h
            },
            vec![member("AB quasihyponormal", "AB", Quasihyponormal)],
        ),
        forward(
            "P2.1.4",
            "A = U|A| with |A| commuting with BU: quasihyponormal BU makes BA quasihyponormal",
            {
                let mut h = polar_a("U", "P");
                h.push(modulus_comm_bu("P"));
                h.push(member("BU quasihyponormal", "BU", Quasihyponormal));
                h
            },
            vec![member("BA quasihyponormal", "BA", Quasihyponormal)],
        ),
        forward(
            "P2.2",
            "hyponormal A and B with B commuting with A* make AB and BA k-quasihyponormal",
            vec![
                member("A hyponormal", "A", Hyponormal),
                member("B hyponormal", "B", Hyponormal),
                eq("B A* = A* B", &[M("B"), Adj("A")], &[Adj("A"), M("B")]),
            ],
            vec![
                member("AB k-quasihyponormal", "AB", KQuasihyponormal),
                member("BA k-quasihyponormal", "BA", KQuasihyponormal),
            ],
        ),
        forward(
            "P2.3",
            "doubly commuting k-quasihyponormal A and B make AB k-quasihyponormal",
            vec![
                eq("A B = B A", &[M("A"), M("B")], &[M("B"), M("A")]),
                eq("A B* = B* A", &[M("A"), Adj("B")], &[Adj("B"), M("A")]),
                member("A k-quasihyponormal", "A", KQuasihyponormal),
                member("B k-quasihyponormal", "B", KQuasihyponormal),
            ],
            vec![member("AB k-quasihyponormal", "AB", KQuasihyponormal)],
        ),
        forward(
            "P2.4",
            "k-quasihyponormal A and B with power-transfer identities make AB and BA k-quasihyponormal",
            vec![
                member("A k-quasihyponormal", "A", KQuasihyponormal),
                member("B k-quasihyponormal", "B", KQuasihyponormal),
                eq(
                    "A* A^k B = B A* A^k",
                    &[Adj("A"), Pow("A"), M("B")],
                    &[M("B"), Adj("A"), Pow("A")],
                ),
                eq(
                    "B* B^k A = A B* B^k",
                    &[Adj("B"), Pow("B"), M("A")],
                    &[M("A"), Adj("B"), Pow("B")],
                ),
                eq("A^k B^k = (AB)^k", &[Pow("A"), Pow("B")], &[Pow("AB")]),
                eq(
                    "A^{k+1} B^{k+1} = (AB)^{k+1}",
                    &[PowP1("A"), PowP1("B")],
                    &[PowP1("AB")],
                ),
                eq("B^k A^k = (BA)^k", &[Pow("B"), Pow("A")], &[Pow("BA")]),
                eq(
                    "B^{k+1} A^{k+1} = (BA)^{k+1}",
                    &[PowP1("B"), PowP1("A")],
                    &[PowP1("BA")],
                ),
            ],
            vec![
                member("AB k-quasihyponormal", "AB", KQuasihyponormal),
                member("BA k-quasihyponormal", "BA", KQuasihyponormal),
            ],
        ),
        forward(
            "P2.5",
            "normal A, quasinormal AB, and A*A commuting with B force BA quasinormal",
            vec![
                member("A normal", "A", Normal),
                member("AB quasinormal", "AB", Quasinormal),
                asa_comm_b(),
            ],
            vec![member("BA quasinormal", "BA", Quasinormal)],
        ),
        forward(
            "P2.6",
            "quasinormal A = U|A| and B with BU quasinormal and |A| commuting with BU force BA quasinormal",
            {
                let mut h = polar_a("U", "P");
                h.push(member("A quasinormal", "A", Quasinormal));
                h.push(member("B quasinormal", "B", Quasinormal));
                h.push(member("BU quasinormal", "BU", Quasinormal));
                h.push(modulus_comm_bu("P"));
                h
            },
            vec![member("BA quasinormal", "BA", Quasinormal)],
        ),
        forward(
            "P2.7",
            "normal A, paranormal AB, and A*A commuting with B force BA paranormal",
            vec![
                member("A normal", "A", Normal),
                member("AB paranormal", "AB", Paranormal { starred: false }),
                asa_comm_b(),
            ],
            vec![member("BA paranormal", "BA", Paranormal { starred: false })],
        ),
        forward(
            "P2.8a",
            "quasihyponormal A and hyponormal B with vanishing mixed commutators make every omega A + B quasihyponormal",
            {
                let mut h = vec![
                    member("A quasihyponormal", "A", Quasihyponormal),
                    member("B hyponormal", "B", Hyponormal),
                ];
                h.extend(span_conditions());
                h
            },
            vec![CheckSpec::SpanQuasihyponormal {
                name: "omega A + B quasihyponormal",
            }],
        ),
        forward(
            "P2.8b",
            "quasihyponormal A and B with vanishing mixed commutators make every omega A + B quasihyponormal",
            {
                let mut h = vec![
                    member("A quasihyponormal", "A", Quasihyponormal),
                    member("B quasihyponormal", "B", Quasihyponormal),
                ];
                h.extend(span_conditions());
                h.push(fourth_span_condition());
                h
            },
            vec![CheckSpec::SpanQuasihyponormal {
                name: "omega A + B quasihyponormal",
            }],
        ),
        equivalence(
            "T-span",
            "under the four vanishing-commutator conditions, A and B are quasihyponormal exactly when every member of their span is",
            {
                let mut h = span_conditions();
                h.push(fourth_span_condition());
                h.push(member("A quasihyponormal", "A", Quasihyponormal));
                h.push(member("B quasihyponormal", "B", Quasihyponormal));
                h
            },
            vec![CheckSpec::SpanQuasihyponormal {
                name: "omega A + B quasihyponormal",
            }],
            {
                let mut h = span_conditions();
                h.push(fourth_span_condition());
                h.push(CheckSpec::SpanQuasihyponormal {
                    name: "omega A + B quasihyponormal",
                });
                h
            },
            vec![
                member("A quasihyponormal", "A", Quasihyponormal),
                member("B quasihyponormal", "B", Quasihyponormal),
            ],
        ),
        forward(
            "T2.5",
            "normal A, (p,k)-quasihyponormal AB, and B commuting with AA* force BA (p,k)-quasihyponormal",
            vec![
                member("A normal", "A", Normal),
                member("AB (p,k)-quasihyponormal", "AB", PkQuasihyponormal),
                b_comm_aas(),
            ],
            vec![member("BA (p,k)-quasihyponormal", "BA", PkQuasihyponormal)],
        ),
        forward(
            "T2.6",
            "(p,k)-quasihyponormal A times an invertible B commuting with A and A* stays (p,k)-quasihyponormal",
            vec![
                member("A (p,k)-quasihyponormal", "A", PkQuasihyponormal),
                CheckSpec::MinSingularValue {
                    name: "B invertible",
                    key: "B",
                    floor: 1e-6,
                },
                eq("A B = B A", &[M("A"), M("B")], &[M("B"), M("A")]),
                eq("A B* = B* A", &[M("A"), Adj("B")], &[Adj("B"), M("A")]),
            ],
            vec![member("AB (p,k)-quasihyponormal", "AB", PkQuasihyponormal)],
        ),
        forward(
            "L3.1",
            "k-quasihyponormal A interpolates: ||A^k x||^2 <= ||A^{k+1} x|| ||A^{k-1} x||",
            vec![member("A k-quasihyponormal", "A", KQuasihyponormal)],
            vec![CheckSpec::NormInterpolation {
                name: "power norm interpolation",
            }],
        ),
        forward(
            "P3.1",
            "k-quasihyponormal A makes A*^k (A*^2A^2 - a A*A + a^2 I) A^k psd for every real a",
            vec![member("A k-quasihyponormal", "A", KQuasihyponormal)],
            vec![
                CheckSpec::QuadraticFamilyPsd {
                    name: "quadratic coefficient family psd",
                },
                CheckSpec::DiscriminantSampled {
                    name: "discriminant inequality on sampled vectors",
                },
            ],
        ),
        forward(
            "P3.2",
            "invertible k-quasihyponormal A is hyponormal",
            vec![
                member("A k-quasihyponormal", "A", KQuasihyponormal),
                CheckSpec::MinSingularValue {
                    name: "A invertible",
                    key: "A",
                    floor: 1e-6,
                },
            ],
            vec![member("A hyponormal", "A", Hyponormal)],
        ),
        forward(
            "P3.3",
            "hyponormal A and B with B commuting with A* make AB k-quasihyponormal",
            vec![
                member("A hyponormal", "A", Hyponormal),
                member("B hyponormal", "B", Hyponormal),
                eq("B A* = A* B", &[M("B"), Adj("A")], &[Adj("A"), M("B")]),
            ],
            vec![member("AB k-quasihyponormal", "AB", KQuasihyponormal)],
        ),
        forward(
            "P3.4",
            "normal A, k-quasihyponormal AB, and B commuting with AA* force BA k-quasihyponormal",
            vec![
                member("A normal", "A", Normal),
                member("AB k-quasihyponormal", "AB", KQuasihyponormal),
                b_comm_aas(),
            ],
            vec![member("BA k-quasihyponormal", "BA", KQuasihyponormal)],
        ),
        forward(
            "P3.5",
            "k-quasihyponormal A and B with A*A^k commuting with B and matching power products make AB k-quasihyponormal",
            vec![
                member("A k-quasihyponormal", "A", KQuasihyponormal),
                member("B k-quasihyponormal", "B", KQuasihyponormal),
                eq(
                    "A* A^k B = B A* A^k",
                    &[Adj("A"), Pow("A"), M("B")],
                    &[M("B"), Adj("A"), Pow("A")],
                ),
                eq("A^k B^k = (AB)^k", &[Pow("A"), Pow("B")], &[Pow("AB")]),
                eq(
                    "A^{k+1} B^{k+1} = (AB)^{k+1}",
                    &[PowP1("A"), PowP1("B")],
                    &[PowP1("AB")],
                ),
            ],
            vec![member("AB k-quasihyponormal", "AB", KQuasihyponormal)],
        ),
        forward(
            "P3.6a",
            "normal A, k-paranormal AB, and A*A commuting with B force BA k-paranormal",
            vec![
                member("A normal", "A", Normal),
                member("AB k-paranormal", "AB", Paranormal { starred: false }),
                asa_comm_b(),
            ],
            vec![member("BA k-paranormal", "BA", Paranormal { starred: false })],
        ),
        forward(
            "P3.6b",
            "normal A, k-*-paranormal AB, and A*A commuting with B force BA k-*-paranormal",
            vec![
                member("A normal", "A", Normal),
                member("AB k-*-paranormal", "AB", Paranormal { starred: true }),
                asa_comm_b(),
            ],
            vec![member("BA k-*-paranormal", "BA", Paranormal { starred: true })],
        ),
    ]
}

/// Registry ids in registry order.
pub fn registry_ids() -> Vec<&'static str> {
    registry().into_iter().map(|s| s.id).collect()
}

/// Looks up one registered statement by id.
pub fn spec_for(id: &str) -> Result<TheoremSpec> {
    registry()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| OpClassError::UnknownTheorem {
            id: id.to_string(),
            valid: registry_ids().join(", "),
        })
}

/// True when every hypothesis check of both directions passes on the bundle.
pub fn hypotheses_hold(
    spec: &TheoremSpec,
    bundle: &InstanceBundle,
    tol: &Tolerance,
    seed: u64,
) -> Result<bool> {
    for check in spec.hypotheses.iter().chain(spec.reverse_hypotheses.iter()) {
        if !evaluate_check(check, bundle, tol, seed)?.passed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates a spec on an existing bundle: hypotheses first, conclusions
/// only for directions whose hypotheses all hold.
pub fn run_trial_on_bundle(
    spec: &TheoremSpec,
    bundle: &InstanceBundle,
    tol: &Tolerance,
    seed: u64,
) -> Result<TrialReport> {
    bundle.verify_products(tol)?;
    let mut hypotheses = Vec::new();
    let mut conclusions = Vec::new();
    let mut any_satisfied = false;
    let mut any_violation = false;

    let directions: [(&[CheckSpec], &[CheckSpec], &str); 2] = [
        (&spec.hypotheses, &spec.conclusions, ""),
        (&spec.reverse_hypotheses, &spec.reverse_conclusions, "rev: "),
    ];
    for (hyps, concls, prefix) in directions {
        if hyps.is_empty() && concls.is_empty() {
            continue;
        }
        let mut satisfied = true;
        for check in hyps {
            let mut record = evaluate_check(check, bundle, tol, seed)?;
            record.name = format!("{prefix}{}", record.name);
            satisfied &= record.passed;
            hypotheses.push(record);
        }
        if !satisfied {
            continue;
        }
        any_satisfied = true;
        for check in concls {
            let mut record = evaluate_check(check, bundle, tol, seed)?;
            record.name = format!("{prefix}{}", record.name);
            any_violation |= !record.passed;
            conclusions.push(record);
        }
    }

    let outcome = if !any_satisfied {
        TrialOutcome::HypothesesUnsatisfiable
    } else if any_violation {
        TrialOutcome::ConclusionViolated
    } else {
        TrialOutcome::ConclusionHeld
    };
    Ok(TrialReport {
        theorem_id: spec.id.to_string(),
        dim: bundle.provenance.dim,
        seed,
        outcome,
        hypotheses,
        conclusions,
    })
}

/// Generates a bundle for the statement and evaluates it. A generator that
/// cannot satisfy the hypotheses within its budget yields an inconclusive
/// report rather than an error.
pub fn run_trial(theorem_id: &str, dim: usize, seed: u64, tol: &Tolerance) -> Result<TrialReport> {
    let spec = spec_for(theorem_id)?;
    let bundle = match random_pair_for(theorem_id, dim, seed, tol) {
        Ok(b) => b,
        Err(OpClassError::GenerationFailed { .. }) => {
            return Ok(TrialReport {
                theorem_id: theorem_id.to_string(),
                dim,
                seed,
                outcome: TrialOutcome::HypothesesUnsatisfiable,
                hypotheses: Vec::new(),
                conclusions: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    run_trial_on_bundle(&spec, &bundle, tol, seed)
}

/// Runs every (id, dim, seed) combination in parallel, in a deterministic
/// report order. Seeds range over seed_base..seed_base + seeds.
pub fn run_grid(
    ids: &[&str],
    dims: &[usize],
    seed_base: u64,
    seeds: u64,
    tol: &Tolerance,
) -> Result<Vec<TrialReport>> {
    let mut cells = Vec::new();
    for id in ids {
        for &dim in dims {
            for seed in seed_base..seed_base.saturating_add(seeds) {
                cells.push((*id, dim, seed));
            }
        }
    }
    cells
        .par_iter()
        .map(|(id, dim, seed)| run_trial(id, *dim, *seed, tol))
        .collect()
}

fn expectation_record(name: &str, record: CheckRecord, expect_violation: bool) -> CheckRecord {
    let observed_violation = record.status == Some(VerdictStatus::Violated);
    CheckRecord {
        name: name.to_string(),
        value: record.value,
        bound: record.bound,
        passed: if expect_violation {
            observed_violation
        } else {
            !observed_violation
        },
        status: record.status,
        witness: record.witness,
    }
}

fn verdict_record(name: &str, verdict: crate::classes::ClassVerdict) -> CheckRecord {
    CheckRecord {
        name: name.to_string(),
        value: verdict.margin,
        bound: 0.0,
        passed: verdict.status != VerdictStatus::Violated,
        status: Some(verdict.status),
        witness: verdict.witness,
    }
}

fn suite_report(id: &str, dim: usize, hypotheses: Vec<CheckRecord>, conclusions: Vec<CheckRecord>) -> TrialReport {
    let all_passed =
        hypotheses.iter().all(|r| r.passed) && conclusions.iter().all(|r| r.passed);
    TrialReport {
        theorem_id: id.to_string(),
        dim,
        seed: 0,
        outcome: if all_passed {
            TrialOutcome::ConclusionHeld
        } else {
            TrialOutcome::ConclusionViolated
        },
        hypotheses,
        conclusions,
    }
}

/// Known counterexamples and sharpness witnesses. Every entry must come out
/// exactly as expected: violations where violations are claimed, and clean
/// passes elsewhere. A report with outcome `ConclusionHeld` means the entry
/// behaved as documented.
pub fn falsification_suite(tol: &Tolerance) -> Result<Vec<TrialReport>> {
    let mut reports = Vec::new();

    // product of two quasihyponormal factors that is not quasihyponormal
    {
        let dim = 8;
        let bundle = example_2_1(dim)?;
        let window = interior_region(dim, 2);
        let a_ver = check_quasihyponormal_normform(bundle.get("A")?, window, tol)?;
        let b_ver = check_quasihyponormal_normform(bundle.get("B")?, Region::Full, tol)?;
        let ab_ver = check_quasihyponormal_normform(bundle.get("AB")?, window, tol)?;
        reports.push(suite_report(
            "falsify:2.1",
            dim,
            vec![
                verdict_record("A quasihyponormal on the interior window", a_ver),
                verdict_record("B quasihyponormal", b_ver),
            ],
            vec![expectation_record(
                "AB must fail quasihyponormality",
                verdict_record("", ab_ver),
                true,
            )],
        ));
    }

    // decreasing leading weights break one product but not the other
    {
        let dim = 8;
        let alphas = [2.0, 1.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
        let bundle = example_2_2(&alphas, dim)?;
        let window = interior_region(dim, 2);
        let ab_ver = check_quasihyponormal_normform(bundle.get("AB")?, window, tol)?;
        let ba_ver = check_quasihyponormal_normform(bundle.get("BA")?, window, tol)?;
        reports.push(suite_report(
            "falsify:2.2-decreasing",
            dim,
            Vec::new(),
            vec![
                expectation_record(
                    "AB must fail quasihyponormality with a decreasing weight pair",
                    verdict_record("", ab_ver),
                    true,
                ),
                expectation_record("BA stays quasihyponormal", verdict_record("", ba_ver), false),
            ],
        ));
    }

    // both products behave while the power products visibly differ, so the
    // commutation identity in the transfer statements is not redundant
    {
        let dim = 6;
        let alphas: Vec<f64> = (1..=dim).map(|n| n as f64 / (n as f64 + 1.0)).collect();
        let bundle = example_2_2(&alphas, dim)?;
        let window = interior_region(dim, 2);
        let ab_ver = check_quasihyponormal_normform(bundle.get("AB")?, window, tol)?;
        let ba_ver = check_quasihyponormal_normform(bundle.get("BA")?, window, tol)?;
        let gap = (&*bundle.get("AB^2")? - bundle.get("B^2A")?).norm_fro();
        let gap_record = CheckRecord {
            name: "power products must differ: ||A B^2 - B^2 A|| > 0.1".to_string(),
            value: gap,
            bound: 0.1,
            passed: gap > 0.1,
            status: None,
            witness: None,
        };
        reports.push(suite_report(
            "falsify:2.2-power-gap",
            dim,
            vec![
                verdict_record("AB quasihyponormal on the interior window", ab_ver),
                verdict_record("BA quasihyponormal on the interior window", ba_ver),
            ],
            vec![gap_record],
        ));
    }

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Provenance;
    use rand::SeedableRng;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn registry_ids_are_unique_and_lookup_works() {
        let ids = registry_ids();
        assert_eq!(ids.len(), 29);
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "duplicate registry id");
        assert!(spec_for("T2.2").is_ok());
        assert!(matches!(
            spec_for("nope"),
            Err(OpClassError::UnknownTheorem { .. })
        ));
    }

    #[test]
    fn identity_bundle_satisfies_the_kaplansky_equivalence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let b = crate::generators::random_normal(4, &mut rng);
        let mut bundle = InstanceBundle::new(
            "trivial",
            Provenance {
                generator: "test".to_string(),
                seed: 3,
                dim: 4,
                detail: String::new(),
            },
        );
        bundle.insert("A", ComplexMatrix::identity(4));
        bundle.insert("AB", b.clone());
        bundle.insert("BA", b.clone());
        bundle.insert("B", b);
        let spec = spec_for("T2.2").unwrap();
        let report = run_trial_on_bundle(&spec, &bundle, &tol(), 3).unwrap();
        assert_eq!(report.outcome, TrialOutcome::ConclusionHeld);
        // both directions were evaluated
        assert!(report.conclusions.iter().any(|r| r.name.starts_with("rev: ")));
    }

    #[test]
    fn raw_truncated_shift_pair_is_rejected_as_hypothesis_material() {
        let spec = ShiftSpecFixture::unit(4);
        let mut bundle = InstanceBundle::new(
            "shift-pair",
            Provenance {
                generator: "test".to_string(),
                seed: 0,
                dim: 4,
                detail: String::new(),
            },
        );
        bundle.insert("AB", &spec * &spec);
        bundle.insert("BA", &spec * &spec);
        bundle.insert("A", spec.clone());
        bundle.insert("B", spec);
        let report =
            run_trial_on_bundle(&spec_for("P2.2").unwrap(), &bundle, &tol(), 0).unwrap();
        assert_eq!(report.outcome, TrialOutcome::HypothesesUnsatisfiable);
        assert!(report.conclusions.is_empty());
    }

    struct ShiftSpecFixture;
    impl ShiftSpecFixture {
        fn unit(dim: usize) -> ComplexMatrix {
            ComplexMatrix::from_fn(dim, dim, |i, j| {
                if i == j + 1 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
        }
    }

    #[test]
    fn every_registered_statement_survives_a_quick_trial() {
        for spec in registry() {
            let report = run_trial(spec.id, 5, 3, &tol()).unwrap();
            assert_eq!(
                report.outcome,
                TrialOutcome::ConclusionHeld,
                "{} dim 5 seed 3: {:?}",
                spec.id,
                report
                    .hypotheses
                    .iter()
                    .chain(report.conclusions.iter())
                    .filter(|r| !r.passed)
                    .map(|r| (r.name.clone(), r.value))
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn trials_are_deterministic() {
        let r1 = run_trial("P2.2", 6, 11, &tol()).unwrap();
        let r2 = run_trial("P2.2", 6, 11, &tol()).unwrap();
        assert_eq!(r1.outcome, r2.outcome);
        let v1: Vec<f64> = r1.conclusions.iter().map(|c| c.value).collect();
        let v2: Vec<f64> = r2.conclusions.iter().map(|c| c.value).collect();
        assert_eq!(v1, v2, "same seed must reproduce the same margins");
    }

    #[test]
    fn power_product_checks_separate_commuting_from_noncommuting_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let check = eq(
            "A^k B^k = (AB)^k",
            &[Factor::Pow("A"), Factor::Pow("B")],
            &[Factor::Pow("AB")],
        );
        let make_bundle = |a: ComplexMatrix, b: ComplexMatrix| {
            let mut bundle = InstanceBundle::new(
                "pair",
                Provenance {
                    generator: "test".to_string(),
                    seed: 0,
                    dim: a.rows(),
                    detail: String::new(),
                },
            );
            bundle.set_param("k", 2.0);
            bundle.insert("AB", &a * &b);
            bundle.insert("A", a);
            bundle.insert("B", b);
            bundle
        };

        let v = crate::generators::haar_unitary(4, &mut rng);
        let d1 = ComplexMatrix::diag(&[
            Complex64::new(1.0, 0.5),
            Complex64::new(-0.5, 1.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, -1.5),
        ]);
        let d2 = ComplexMatrix::diag(&[
            Complex64::new(0.5, 0.0),
            Complex64::new(1.5, -1.0),
            Complex64::new(-1.0, 0.5),
            Complex64::new(2.5, 1.0),
        ]);
        let commuting = make_bundle(
            &(&v * &d1) * &v.adjoint(),
            &(&v * &d2) * &v.adjoint(),
        );
        assert!(evaluate_check(&check, &commuting, &tol(), 0).unwrap().passed);

        let a = crate::generators::random_normal(4, &mut rng);
        let b = crate::generators::random_normal(4, &mut rng);
        let noncommuting = make_bundle(a, b);
        assert!(!evaluate_check(&check, &noncommuting, &tol(), 0).unwrap().passed);
    }

    #[test]
    fn span_check_accepts_commuting_normals_and_rejects_a_nilpotent_pair() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        let v = crate::generators::haar_unitary(3, &mut rng);
        let d1 = ComplexMatrix::diag(&[
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 2.0),
            Complex64::new(-1.0, 1.0),
        ]);
        let d2 = ComplexMatrix::diag(&[
            Complex64::new(0.5, -0.5),
            Complex64::new(1.0, 1.0),
            Complex64::new(2.0, 0.0),
        ]);
        let mut good = InstanceBundle::new(
            "span",
            Provenance {
                generator: "test".to_string(),
                seed: 0,
                dim: 3,
                detail: String::new(),
            },
        );
        good.insert("A", &(&v * &d1) * &v.adjoint());
        good.insert("B", &(&v * &d2) * &v.adjoint());
        let check = CheckSpec::SpanQuasihyponormal { name: "span" };
        assert!(evaluate_check(&check, &good, &tol(), 0).unwrap().passed);

        // J2 + I is invertible but not quasihyponormal, so the span check
        // must reject the pair (A = J2, B = I)
        let mut j2 = ComplexMatrix::zeros(2, 2);
        j2[(0, 1)] = Complex64::new(1.0, 0.0);
        let mut bad = InstanceBundle::new(
            "span-bad",
            Provenance {
                generator: "test".to_string(),
                seed: 0,
                dim: 2,
                detail: String::new(),
            },
        );
        bad.insert("A", j2);
        bad.insert("B", ComplexMatrix::identity(2));
        let record = evaluate_check(&check, &bad, &tol(), 0).unwrap();
        assert!(!record.passed);
        assert!(record.value < -0.1);
    }

    #[test]
    fn falsification_suite_behaves_as_documented() {
        let reports = falsification_suite(&tol()).unwrap();
        assert_eq!(reports.len(), 3);
        for report in &reports {
            assert_eq!(
                report.outcome,
                TrialOutcome::ConclusionHeld,
                "{} entry must behave as documented",
                report.theorem_id
            );
        }
        // first entry's conclusion really observed a violation
        assert_eq!(
            reports[0].conclusions[0].status,
            Some(VerdictStatus::Violated)
        );
        assert!(reports[2].conclusions[0].value > 0.1);
    }

    #[test]
    fn run_grid_covers_the_requested_cells() {
        let reports = run_grid(&["T2.2", "P2.5"], &[4, 5], 0, 2, &tol()).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.outcome == TrialOutcome::ConclusionHeld));
    }

    #[test]
    fn commutator_helpers_match_their_definitions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let a = crate::generators::random_gaussian(3, 3, &mut rng);
        let b = crate::generators::random_gaussian(3, 3, &mut rng);
        let c = commutator(&a, &b);
        let manual = &(&a * &b) - &(&b * &a);
        assert!((&c - &manual).norm_fro() < 1e-15);
        let sc = self_commutator(&a);
        let manual_sc = &(&a.adjoint() * &a) - &(&a * &a.adjoint());
        assert!((&sc - &manual_sc).norm_fro() < 1e-15);
        let t = span_member(Complex64::new(2.0, -1.0), &a, &b);
        let manual_t = &a.scale(Complex64::new(2.0, -1.0)) + &b;
        assert!((&t - &manual_t).norm_fro() < 1e-15);
    }
}
