//! Instance construction: random primitives, truncated weighted shifts, the
//! worked shift-and-diagonal examples, and seeded structured pairs built to
//! satisfy the hypotheses of each registered statement.
//!
//! Finite dimension is unforgiving here: classes that are distinct for
//! operators on infinite-dimensional space frequently collapse on matrices
//! (a hyponormal matrix is already normal, by the trace of the
//! self-commutator). The structured builders therefore lean on three
//! families that keep hypotheses satisfiable without making pairs commute
//! outright: paired-modulus diagonal blocks against antidiagonal blocks,
//! shared-frame simultaneous diagonalization, and normal-plus-nilpotent
//! direct sums for the k >= 2 classes.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{OpClassError, Result};
use crate::linalg::Tolerance;
use crate::matrix::ComplexMatrix;

/// Matrix with independent complex Gaussian entries of unit variance.
pub fn random_gaussian(rows: usize, cols: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    })
}

/// Uniformly random unit vector (normalized complex Gaussian).
pub fn random_unit_vector(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    loop {
        let v = random_gaussian(n, 1, rng);
        let norm = v.norm_fro();
        if norm > 1e-6 {
            return v.scale_real(1.0 / norm);
        }
    }
}

/// Haar-distributed unitary: Gram-Schmidt on Gaussian columns. Each column
/// gets two projection passes, which keeps U*U - I near machine precision.
pub fn haar_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut q = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        loop {
            let mut v = random_gaussian(n, 1, rng);
            for _ in 0..2 {
                for i in 0..j {
                    let qi = q.column(i);
                    let coef = v.inner(&qi);
                    v = &v - &qi.scale(coef);
                }
            }
            let norm = v.norm_fro();
            if norm > 1e-8 {
                q.set_column(j, &v.scale_real(1.0 / norm));
                break;
            }
        }
    }
    q
}

/// Random positive semidefinite matrix G*G, scaled to O(1) entries.
pub fn random_psd(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = random_gaussian(n, n, rng);
    (&g.adjoint() * &g).scale_real(1.0 / n as f64).hermitize()
}

/// Random normal matrix V diag(lambda) V* with Haar V and Gaussian lambda.
pub fn random_normal(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let v = haar_unitary(n, rng);
    let lambda: Vec<Complex64> = (0..n)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        })
        .collect();
    conjugate_by(&v, &ComplexMatrix::diag(&lambda))
}

fn random_phase(rng: &mut impl Rng) -> Complex64 {
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex64::new(theta.cos(), theta.sin())
}

/// V M V* for unitary V.
pub fn conjugate_by(v: &ComplexMatrix, m: &ComplexMatrix) -> ComplexMatrix {
    &(v * m) * &v.adjoint()
}

fn direct_sum(blocks: &[ComplexMatrix]) -> ComplexMatrix {
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut out = ComplexMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        assert!(b.is_square(), "direct summands must be square");
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out[(offset + i, offset + j)] = b[(i, j)];
            }
        }
        offset += b.rows();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShiftKind {
    Unilateral,
    Bilateral,
}

/// How tests should treat the truncation edge of a shift: judge the raw
/// matrix, or confine quantified vectors to a leading window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryMode {
    ZeroFill,
    InteriorOnly,
}

/// Truncated weighted shift description: A e_n = w_n e_{n+1}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftSpec {
    pub weights: Vec<f64>,
    pub dim: usize,
    pub kind: ShiftKind,
    pub boundary: BoundaryMode,
}

impl ShiftSpec {
    pub fn new(
        weights: Vec<f64>,
        dim: usize,
        kind: ShiftKind,
        boundary: BoundaryMode,
    ) -> Result<Self> {
        if dim < 2 {
            return Err(OpClassError::BadShiftSpec {
                what: format!("dimension {dim} is below 2"),
            });
        }
        let needed = match kind {
            ShiftKind::Unilateral => dim - 1,
            ShiftKind::Bilateral => dim,
        };
        if weights.len() < needed {
            return Err(OpClassError::BadShiftSpec {
                what: format!("{} weights given, {needed} needed for dimension {dim}", weights.len()),
            });
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w <= 0.0) {
            return Err(OpClassError::BadShiftSpec {
                what: format!("weights must be positive and finite, got {w}"),
            });
        }
        Ok(Self {
            weights,
            dim,
            kind,
            boundary,
        })
    }

    /// Test window for a check whose vectors pass through `degree` powers of
    /// the shift; ZeroFill mode always judges the full truncation.
    pub fn region_for(&self, degree: usize) -> crate::classes::Region {
        match self.boundary {
            BoundaryMode::ZeroFill => crate::classes::Region::Full,
            BoundaryMode::InteriorOnly => {
                crate::classes::Region::Leading(self.dim.saturating_sub(degree).max(1))
            }
        }
    }
}

/// N-by-N truncation with (i+1, i) entry w_i.
pub fn make_shift(spec: &ShiftSpec) -> ComplexMatrix {
    ComplexMatrix::from_fn(spec.dim, spec.dim, |i, j| {
        if i == j + 1 {
            Complex64::new(spec.weights[j], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Where a bundle came from: builder name, seed, dimension, free-form note.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: String,
    pub seed: u64,
    pub dim: usize,
    pub detail: String,
}

/// Named matrices plus scalar parameters for one test instance. Composite
/// keys ("AB", "gram_BA", ...) always hold the literal product of the stored
/// factors; `verify_products` re-multiplies and checks that.
#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub label: String,
    pub provenance: Provenance,
    pub params: BTreeMap<String, f64>,
    pub matrices: BTreeMap<String, ComplexMatrix>,
}

impl InstanceBundle {
    pub fn new(label: impl Into<String>, provenance: Provenance) -> Self {
        Self {
            label: label.into(),
            provenance,
            params: BTreeMap::new(),
            matrices: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, key: &str, m: ComplexMatrix) {
        self.matrices.insert(key.to_string(), m);
    }

    pub fn set_param(&mut self, key: &str, value: f64) {
        self.params.insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Result<&ComplexMatrix> {
        self.matrices.get(key).ok_or_else(|| OpClassError::MissingMatrix {
            key: key.to_string(),
        })
    }

    pub fn param(&self, key: &str) -> Result<f64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| OpClassError::MissingParameter {
                key: key.to_string(),
            })
    }

    pub fn param_or(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    /// Exponent parameters with the conventional defaults.
    pub fn k(&self) -> usize {
        self.param_or("k", 1.0).round() as usize
    }

    pub fn p(&self) -> f64 {
        self.param_or("p", 1.0)
    }

    fn recompute(&self, key: &str) -> Option<ComplexMatrix> {
        let m = |k: &str| self.matrices.get(k);
        let gram = |x: &ComplexMatrix| -> ComplexMatrix { &x.adjoint() * x };
        match key {
            "AB" => Some(&*m("A")? * m("B")?),
            "BA" => Some(&*m("B")? * m("A")?),
            "UB" => Some(&*m("U")? * m("B")?),
            "BU" => Some(&*m("B")? * m("U")?),
            "A" if m("U").is_some() && m("P").is_some() => Some(&*m("U")? * m("P")?),
            "A" if m("U").is_some() && m("H").is_some() => Some(&*m("U")? * m("H")?),
            "gram_AB" => Some(gram(&(&*m("A")? * m("B")?))),
            "gram_BA" => Some(gram(&(&*m("B")? * m("A")?))),
            "gram2_AB" => {
                let ab = &*m("A")? * m("B")?;
                Some(gram(&(&ab * &ab)))
            }
            "gram2_BA" => {
                let ba = &*m("B")? * m("A")?;
                Some(gram(&(&ba * &ba)))
            }
            "AB^2" => Some(&(&*m("A")? * m("B")?) * m("B")?),
            "B^2A" => Some(&(&*m("B")? * m("B")?) * m("A")?),
            _ => None,
        }
    }

    /// Re-multiplies every composite entry from its factors and demands
    /// agreement within the equality band.
    pub fn verify_products(&self, tol: &Tolerance) -> Result<()> {
        for (key, stored) in &self.matrices {
            if let Some(expected) = self.recompute(key) {
                let distance = (stored - &expected).norm_fro();
                if distance > tol.eq_bound(expected.norm_fro()) {
                    return Err(OpClassError::BundleMismatch {
                        key: key.clone(),
                        distance,
                    });
                }
            }
        }
        Ok(())
    }
}

fn unit_shift(dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Right shift times a diagonal idempotent with a single gap: both factors
/// are quasihyponormal, their product is not. The gap sits at basis index 1
/// (0-indexed), which pins the witness values at e_0:
/// ||(AB)*(AB) e_0|| = 1 while (AB)^2 e_0 = 0.
pub fn example_2_1(dim: usize) -> Result<InstanceBundle> {
    if dim < 3 {
        return Err(OpClassError::BadParameter {
            what: format!("dimension {dim} is below 3"),
        });
    }
    let a = unit_shift(dim);
    let b = ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j && i != 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let ab = &a * &b;
    let mut bundle = InstanceBundle::new(
        "2.1",
        Provenance {
            generator: "example-2.1".to_string(),
            seed: 0,
            dim,
            detail: "unit right shift against a diagonal idempotent with one gap".to_string(),
        },
    );
    bundle.set_param("window", (dim - 2) as f64);
    bundle.insert("A", a);
    bundle.insert("B", b);
    bundle.insert("AB", ab);
    Ok(bundle)
}

/// Unit right shift A against B = diag(alpha_1, ..., alpha_N). With these
/// roles both products are weighted shifts assembled by literal
/// multiplication: AB carries weights (alpha_1, alpha_2, ...) and BA carries
/// (alpha_2, alpha_3, ...), so the four Gram matrices come out diagonal with
/// entries alpha_i^2, (alpha_i alpha_{i+1})^2, alpha_{i+1}^2,
/// (alpha_{i+1} alpha_{i+2})^2 away from the truncation edge. Either product
/// is quasihyponormal on the interior exactly when its own weight sequence
/// is nondecreasing.
pub fn example_2_2(alphas: &[f64], dim: usize) -> Result<InstanceBundle> {
    if dim < 3 {
        return Err(OpClassError::BadParameter {
            what: format!("dimension {dim} is below 3"),
        });
    }
    if alphas.len() < dim {
        return Err(OpClassError::BadParameter {
            what: format!("{} weights given, {dim} needed", alphas.len()),
        });
    }
    if let Some(a) = alphas[..dim].iter().find(|a| !a.is_finite() || **a <= 0.0) {
        return Err(OpClassError::BadParameter {
            what: format!("weights must be positive and finite, got {a}"),
        });
    }
    let a = unit_shift(dim);
    let b = ComplexMatrix::diag_real(&alphas[..dim]);
    let ab = &a * &b;
    let ba = &b * &a;
    let ab2 = &ab * &ab;
    let ba2 = &ba * &ba;
    let mut bundle = InstanceBundle::new(
        "2.2",
        Provenance {
            generator: "example-2.2".to_string(),
            seed: 0,
            dim,
            detail: format!("unit right shift against diag({:?})", &alphas[..dim]),
        },
    );
    bundle.set_param("window", (dim - 2) as f64);
    bundle.insert("gram_AB", &ab.adjoint() * &ab);
    bundle.insert("gram2_AB", &ab2.adjoint() * &ab2);
    bundle.insert("gram_BA", &ba.adjoint() * &ba);
    bundle.insert("gram2_BA", &ba2.adjoint() * &ba2);
    bundle.insert("AB^2", &ab * &b);
    bundle.insert("B^2A", &(&b * &b) * &a);
    bundle.insert("AB", ab);
    bundle.insert("BA", ba);
    bundle.insert("A", a);
    bundle.insert("B", b);
    Ok(bundle)
}

/// Default weight prefix for the monotone weighted shift: w_j = (j+1)/(j+2),
/// strictly increasing and bounded by 1.
pub fn monotone_weights(dim: usize) -> Vec<f64> {
    (0..dim.saturating_sub(1))
        .map(|j| (j + 1) as f64 / (j + 2) as f64)
        .collect()
}

/// Truncated monotone weighted shift; quasihyponormal on its interior
/// window because the weights increase.
pub fn example_3_1(weights: &[f64], dim: usize) -> Result<InstanceBundle> {
    let spec = ShiftSpec::new(weights.to_vec(), dim, ShiftKind::Unilateral, BoundaryMode::InteriorOnly)?;
    let a = make_shift(&spec);
    let mut bundle = InstanceBundle::new(
        "3.1",
        Provenance {
            generator: "example-3.1".to_string(),
            seed: 0,
            dim,
            detail: format!("weighted shift, weights {:?}", &weights[..dim - 1]),
        },
    );
    bundle.set_param("window", (dim - 2) as f64);
    bundle.insert("A", a);
    Ok(bundle)
}

const GENERATION_BUDGET: usize = 1000;

fn k_for_seed(seed: u64) -> usize {
    [1usize, 2, 3][(seed % 3) as usize]
}

fn p_for_seed(seed: u64) -> f64 {
    [0.25, 0.5, 0.75, 1.0][((seed / 3) % 4) as usize]
}

fn paranormal_k_for_seed(seed: u64) -> usize {
    [2usize, 3][(seed % 2) as usize]
}

/// A = V (sum of r_j diag(e1, e2)) V*, B = V (sum of antidiagonal blocks
/// with equal moduli) V*. A is normal with paired singular values, B
/// commutes with A*A = AA*, both products are normal, and A, B do not
/// commute whenever the phases inside a block differ.
fn phase_block_pair(dim: usize, rng: &mut impl Rng) -> (ComplexMatrix, ComplexMatrix) {
    let v = haar_unitary(dim, rng);
    let mut a_blocks = Vec::new();
    let mut b_blocks = Vec::new();
    let pairs = dim / 2;
    for j in 0..pairs {
        let rho = 0.5 + 0.45 * j as f64 + 0.1 * rng.gen::<f64>();
        let (e1, e2) = (random_phase(rng), random_phase(rng));
        a_blocks.push(ComplexMatrix::diag(&[e1 * rho, e2 * rho]));
        let mag = 0.5 + 0.5 * rng.gen::<f64>();
        let (f1, f2) = (random_phase(rng), random_phase(rng));
        let mut nb = ComplexMatrix::zeros(2, 2);
        nb[(0, 1)] = f1 * mag;
        nb[(1, 0)] = f2 * mag;
        b_blocks.push(nb);
    }
    if dim % 2 == 1 {
        let rho = 0.5 + 0.45 * pairs as f64;
        a_blocks.push(ComplexMatrix::diag(&[random_phase(rng) * rho]));
        b_blocks.push(ComplexMatrix::diag(&[random_phase(rng) * (0.5 + 0.5 * rng.gen::<f64>())]));
    }
    (
        conjugate_by(&v, &direct_sum(&a_blocks)),
        conjugate_by(&v, &direct_sum(&b_blocks)),
    )
}

/// Unitary U with one phase per 2-block, positive P with one modulus per
/// 2-block, and B block-diagonal with normal 2-by-2 blocks. P commutes with
/// BU and with B, the products UB, BU, AB, BA are all normal, and A = UP.
fn polar_frame(dim: usize, rng: &mut impl Rng) -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let v = haar_unitary(dim, rng);
    let mut u_blocks = Vec::new();
    let mut p_blocks = Vec::new();
    let mut b_blocks = Vec::new();
    let pairs = dim / 2;
    for j in 0..pairs {
        let theta = random_phase(rng);
        u_blocks.push(ComplexMatrix::diag(&[theta, theta]));
        let r = 0.4 + 0.5 * j as f64 + 0.1 * rng.gen::<f64>();
        p_blocks.push(ComplexMatrix::diag_real(&[r, r]));
        b_blocks.push(random_normal(2, rng));
    }
    if dim % 2 == 1 {
        u_blocks.push(ComplexMatrix::diag(&[random_phase(rng)]));
        p_blocks.push(ComplexMatrix::diag_real(&[0.4 + 0.5 * pairs as f64]));
        b_blocks.push(random_normal(1, rng));
    }
    (
        conjugate_by(&v, &direct_sum(&u_blocks)),
        conjugate_by(&v, &direct_sum(&p_blocks)),
        conjugate_by(&v, &direct_sum(&b_blocks)),
    )
}

/// Simultaneously diagonalized normal pair in a shared Haar frame.
fn commuting_normal_pair(
    dim: usize,
    invertible_b: bool,
    rng: &mut impl Rng,
) -> (ComplexMatrix, ComplexMatrix) {
    let v = haar_unitary(dim, rng);
    let da: Vec<Complex64> = (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        })
        .collect();
    let db: Vec<Complex64> = (0..dim)
        .map(|_| {
            if invertible_b {
                random_phase(rng) * (0.3 + rng.gen::<f64>())
            } else {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im)
            }
        })
        .collect();
    (
        conjugate_by(&v, &ComplexMatrix::diag(&da)),
        conjugate_by(&v, &ComplexMatrix::diag(&db)),
    )
}

fn nilpotent_block(weight: Complex64) -> ComplexMatrix {
    let mut j = ComplexMatrix::zeros(2, 2);
    j[(0, 1)] = weight;
    j
}

fn random_scalar(invertible: bool, rng: &mut impl Rng) -> Complex64 {
    if invertible {
        random_phase(rng) * (0.3 + rng.gen::<f64>())
    } else {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    }
}

/// Doubly commuting pair where each factor is k-quasihyponormal for the
/// requested k. For k = 1 both are commuting normals; for k >= 2 each gets a
/// 2-nilpotent block against a scalar block of the partner, so neither is
/// normal yet A^k kills its own nilpotent part.
fn slot_pair(
    dim: usize,
    k: usize,
    invertible_b: bool,
    rng: &mut impl Rng,
) -> (ComplexMatrix, ComplexMatrix) {
    if k < 2 {
        return commuting_normal_pair(dim, invertible_b, rng);
    }
    let v = haar_unitary(dim, rng);
    let mut a_blocks = Vec::new();
    let mut b_blocks = Vec::new();
    let mut remaining = dim;
    if remaining >= 2 {
        a_blocks.push(nilpotent_block(random_phase(rng) * (0.5 + rng.gen::<f64>())));
        let mu = random_scalar(invertible_b, rng);
        b_blocks.push(ComplexMatrix::diag(&[mu, mu]));
        remaining -= 2;
    }
    if !invertible_b && remaining >= 2 {
        let nu = random_scalar(false, rng);
        a_blocks.push(ComplexMatrix::diag(&[nu, nu]));
        b_blocks.push(nilpotent_block(random_phase(rng) * (0.5 + rng.gen::<f64>())));
        remaining -= 2;
    }
    for _ in 0..remaining {
        a_blocks.push(ComplexMatrix::diag(&[random_scalar(false, rng)]));
        b_blocks.push(ComplexMatrix::diag(&[random_scalar(invertible_b, rng)]));
    }
    (
        conjugate_by(&v, &direct_sum(&a_blocks)),
        conjugate_by(&v, &direct_sum(&b_blocks)),
    )
}

/// Single matrix that is k-quasihyponormal: normal for k = 1 or when
/// invertibility is demanded, normal plus a 2-nilpotent block otherwise.
fn single_kqh(dim: usize, k: usize, invertible: bool, rng: &mut impl Rng) -> ComplexMatrix {
    let v = haar_unitary(dim, rng);
    let mut blocks = Vec::new();
    let mut remaining = dim;
    if k >= 2 && !invertible && remaining >= 2 {
        blocks.push(nilpotent_block(random_phase(rng) * (0.5 + rng.gen::<f64>())));
        remaining -= 2;
    }
    for _ in 0..remaining {
        let z = if invertible {
            random_phase(rng) * (0.3 + rng.gen::<f64>())
        } else {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        };
        blocks.push(ComplexMatrix::diag(&[z]));
    }
    conjugate_by(&v, &direct_sum(&blocks))
}

/// Rectangular pair in shared singular frames: A = W Sigma V* with paired
/// singular values, B = V Btilde W* with matching normal 2-by-2 blocks on
/// top and zero rows below. Both products are normal and both transfer
/// identities (A*A)B = B(AA*) and A(BB*) = (B*B)A hold.
fn rect_frame(m: usize, n: usize, rng: &mut impl Rng) -> (ComplexMatrix, ComplexMatrix) {
    assert!(n >= m, "wide side second");
    let w = haar_unitary(m, rng);
    let v = haar_unitary(n, rng);
    let pairs = m / 2;
    let lone = m % 2;
    let mut sigma = ComplexMatrix::zeros(m, n);
    let mut btilde = ComplexMatrix::zeros(n, m);
    for j in 0..pairs {
        let s = 0.4 + 0.5 * j as f64 + 0.1 * rng.gen::<f64>();
        sigma[(2 * j, 2 * j)] = Complex64::new(s, 0.0);
        sigma[(2 * j + 1, 2 * j + 1)] = Complex64::new(s, 0.0);
        let blk = random_normal(2, rng);
        for i in 0..2 {
            for l in 0..2 {
                btilde[(2 * j + i, 2 * j + l)] = blk[(i, l)];
            }
        }
    }
    if lone == 1 {
        let s = 0.4 + 0.5 * pairs as f64;
        sigma[(m - 1, m - 1)] = Complex64::new(s, 0.0);
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        btilde[(m - 1, m - 1)] = Complex64::new(re, im);
    }
    let a = &(&w * &sigma) * &v.adjoint();
    let b = &(&v * &btilde) * &w.adjoint();
    (a, b)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn builder_rng(theorem_id: &str, seed: u64, attempt: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed ^ fnv1a(theorem_id.as_bytes()) ^ ((attempt as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)),
    )
}

fn base_bundle(theorem_id: &str, detail: &str, dim: usize, seed: u64) -> InstanceBundle {
    InstanceBundle::new(
        theorem_id,
        Provenance {
            generator: format!("random-pair:{theorem_id}"),
            seed,
            dim,
            detail: detail.to_string(),
        },
    )
}

fn insert_pair_products(bundle: &mut InstanceBundle, a: ComplexMatrix, b: ComplexMatrix) {
    bundle.insert("AB", &a * &b);
    bundle.insert("BA", &b * &a);
    bundle.insert("A", a);
    bundle.insert("B", b);
}

fn build_candidate(
    theorem_id: &str,
    dim: usize,
    seed: u64,
    attempt: usize,
) -> Result<InstanceBundle> {
    let mut rng = builder_rng(theorem_id, seed, attempt);
    let mut bundle;
    match theorem_id {
        "T2.1.1" | "T2.1.2" | "T2.1.3" | "T2.2" | "P2.5" | "P2.7" => {
            let (a, b) = phase_block_pair(dim, &mut rng);
            bundle = base_bundle(theorem_id, "phase-paired blocks against antidiagonal blocks", dim, seed);
            if theorem_id == "P2.7" {
                bundle.set_param("k", 2.0);
            }
            insert_pair_products(&mut bundle, a, b);
        }
        "T2.5" => {
            let (a, b) = phase_block_pair(dim, &mut rng);
            bundle = base_bundle(theorem_id, "phase-paired blocks against antidiagonal blocks", dim, seed);
            bundle.set_param("p", p_for_seed(seed));
            bundle.set_param("k", k_for_seed(seed) as f64);
            insert_pair_products(&mut bundle, a, b);
        }
        "P3.4" => {
            let (a, b) = phase_block_pair(dim, &mut rng);
            bundle = base_bundle(theorem_id, "phase-paired blocks against antidiagonal blocks", dim, seed);
            bundle.set_param("k", k_for_seed(seed) as f64);
            insert_pair_products(&mut bundle, a, b);
        }
        "P3.6a" | "P3.6b" => {
            let (a, b) = phase_block_pair(dim, &mut rng);
            bundle = base_bundle(theorem_id, "phase-paired blocks against antidiagonal blocks", dim, seed);
            bundle.set_param("k", paranormal_k_for_seed(seed) as f64);
            insert_pair_products(&mut bundle, a, b);
        }
        "T2.3" => {
            let (u, h, b) = polar_frame(dim, &mut rng);
            bundle = base_bundle(theorem_id, "unitary and positive factors scalar on shared blocks", dim, seed);
            let a = &u * &h;
            bundle.insert("BU", &b * &u);
            bundle.insert("AB", &a * &b);
            bundle.insert("BA", &b * &a);
            bundle.insert("A", a);
            bundle.insert("B", b);
            bundle.insert("U", u);
            bundle.insert("H", h);
        }
        "P2.1.1" | "P2.1.2" | "P2.1.3" | "P2.1.4" | "P2.6" => {
            let (u, p, b) = polar_frame(dim, &mut rng);
            bundle = base_bundle(theorem_id, "unitary and positive factors scalar on shared blocks", dim, seed);
            let a = &u * &p;
            bundle.insert("UB", &u * &b);
            bundle.insert("BU", &b * &u);
            bundle.insert("AB", &a * &b);
            bundle.insert("BA", &b * &a);
            bundle.insert("A", a);
            bundle.insert("B", b);
            bundle.insert("U", u);
            bundle.insert("P", p);
        }
        "P2.2" | "P3.3" => {
            let (a, b) = commuting_normal_pair(dim, false, &mut rng);
            bundle = base_bundle(theorem_id, "simultaneously diagonalized normal pair", dim, seed);
            bundle.set_param("k", k_for_seed(seed) as f64);
            insert_pair_products(&mut bundle, a, b);
        }
        "P2.3" | "P2.4" | "P3.5" => {
            let k = k_for_seed(seed);
            let (a, b) = slot_pair(dim, k, false, &mut rng);
            bundle = base_bundle(theorem_id, "doubly commuting slots, nilpotent against scalar", dim, seed);
            bundle.set_param("k", k as f64);
            insert_pair_products(&mut bundle, a, b);
        }
        "T2.6" => {
            let k = k_for_seed(seed);
            let (a, b) = slot_pair(dim, k, true, &mut rng);
            bundle = base_bundle(theorem_id, "slot pair with invertible partner", dim, seed);
            bundle.set_param("p", p_for_seed(seed));
            bundle.set_param("k", k as f64);
            insert_pair_products(&mut bundle, a, b);
        }
        "P2.8a" | "P2.8b" | "T-span" => {
            let (a, b) = commuting_normal_pair(dim, false, &mut rng);
            bundle = base_bundle(theorem_id, "simultaneously diagonalized normal pair", dim, seed);
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            bundle.set_param("omega_re", re);
            bundle.set_param("omega_im", im);
            bundle.insert("A", a);
            bundle.insert("B", b);
        }
        "L3.1" | "P3.1" => {
            let k = k_for_seed(seed);
            let a = single_kqh(dim, k, false, &mut rng);
            bundle = base_bundle(theorem_id, "normal plus nilpotent block", dim, seed);
            bundle.set_param("k", k as f64);
            bundle.insert("A", a);
        }
        "P3.2" => {
            let k = k_for_seed(seed);
            let a = single_kqh(dim, k, true, &mut rng);
            bundle = base_bundle(theorem_id, "invertible normal", dim, seed);
            bundle.set_param("k", k as f64);
            bundle.insert("A", a);
        }
        "T2.4r" => {
            let (a, b) = rect_frame(dim, dim + 2, &mut rng);
            bundle = base_bundle(theorem_id, "shared singular frames with paired singular values", dim, seed);
            bundle.insert("AB", &a * &b);
            bundle.insert("BA", &b * &a);
            bundle.insert("A", a);
            bundle.insert("B", b);
        }
        _ => {
            return Err(OpClassError::UnknownTheorem {
                id: theorem_id.to_string(),
                valid: crate::theorems::registry_ids().join(", "),
            })
        }
    }
    Ok(bundle)
}

/// Seeded instance bundle satisfying the hypotheses of the named statement.
///
/// Hypothesis satisfaction is verified against the registered checks, not
/// assumed from the construction; a failing draw is resampled up to the
/// generation budget.
pub fn random_pair_for(
    theorem_id: &str,
    dim: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<InstanceBundle> {
    let spec = crate::theorems::spec_for(theorem_id)?;
    for attempt in 0..GENERATION_BUDGET {
        let bundle = build_candidate(theorem_id, dim, seed, attempt)?;
        bundle.verify_products(tol)?;
        if crate::theorems::hypotheses_hold(&spec, &bundle, tol, seed)? {
            return Ok(bundle);
        }
    }
    Err(OpClassError::GenerationFailed {
        theorem: theorem_id.to_string(),
        attempts: GENERATION_BUDGET,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::Region;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn commutator_norm(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
        (&(a * b) - &(b * a)).norm_fro()
    }

    fn normal_residual(a: &ComplexMatrix) -> f64 {
        (&(&a.adjoint() * a) - &(a * &a.adjoint())).norm_fro()
    }

    #[test]
    fn make_shift_places_weights_on_the_subdiagonal() {
        let spec = ShiftSpec::new(vec![1.0, 1.0, 1.0], 4, ShiftKind::Unilateral, BoundaryMode::ZeroFill).unwrap();
        let s = make_shift(&spec);
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j + 1 { 1.0 } else { 0.0 };
                assert_eq!(s[(i, j)].re, expected);
                assert_eq!(s[(i, j)].im, 0.0);
            }
        }

        let spec2 = ShiftSpec::new(vec![1.0, 2.0, 3.0], 4, ShiftKind::Unilateral, BoundaryMode::ZeroFill).unwrap();
        let a = make_shift(&spec2);
        let gram = &a.adjoint() * &a;
        let expected = ComplexMatrix::diag_real(&[1.0, 4.0, 9.0, 0.0]);
        assert!((&gram - &expected).norm_fro() < 1e-15);
    }

    #[test]
    fn shift_adjoint_carries_weights_to_the_superdiagonal() {
        let weights = vec![0.5, 1.5, 2.5, 3.5];
        let spec = ShiftSpec::new(weights.clone(), 5, ShiftKind::Unilateral, BoundaryMode::InteriorOnly).unwrap();
        let a = make_shift(&spec);
        let adj = a.adjoint();
        for (j, w) in weights.iter().enumerate() {
            assert_eq!(adj[(j, j + 1)].re, *w);
        }
        // ||A*A e_n|| = w_n^2 away from the last column
        let gram = &a.adjoint() * &a;
        for (n, w) in weights.iter().enumerate() {
            let e = ComplexMatrix::basis_vector(5, n);
            let val = (&gram * &e).norm_fro();
            assert!((val - w * w).abs() < 1e-14, "index {n}");
        }
    }

    #[test]
    fn shift_spec_validates_inputs() {
        assert!(ShiftSpec::new(vec![1.0], 1, ShiftKind::Unilateral, BoundaryMode::ZeroFill).is_err());
        assert!(ShiftSpec::new(vec![1.0], 4, ShiftKind::Unilateral, BoundaryMode::ZeroFill).is_err());
        assert!(ShiftSpec::new(vec![1.0, -1.0, 1.0], 4, ShiftKind::Unilateral, BoundaryMode::ZeroFill).is_err());
        assert!(ShiftSpec::new(vec![1.0, 1.0, 1.0], 4, ShiftKind::Bilateral, BoundaryMode::ZeroFill).is_err());
        assert!(ShiftSpec::new(vec![1.0, 1.0, 1.0, 1.0], 4, ShiftKind::Bilateral, BoundaryMode::ZeroFill).is_ok());
    }

    #[test]
    fn interior_region_trims_by_degree_and_zero_fill_does_not() {
        let spec = ShiftSpec::new(vec![1.0; 7], 8, ShiftKind::Unilateral, BoundaryMode::InteriorOnly).unwrap();
        assert_eq!(spec.region_for(2), Region::Leading(6));
        let raw = ShiftSpec::new(vec![1.0; 7], 8, ShiftKind::Unilateral, BoundaryMode::ZeroFill).unwrap();
        assert_eq!(raw.region_for(2), Region::Full);
    }

    #[test]
    fn haar_unitary_columns_are_orthonormal_and_seeded_draws_repeat() {
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = haar_unitary(6, &mut rng);
            let gram = &u.adjoint() * &u;
            assert!(
                (&gram - &ComplexMatrix::identity(6)).norm_fro() < 1e-12,
                "seed {seed}"
            );
        }
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        let u1 = haar_unitary(5, &mut r1);
        let u2 = haar_unitary(5, &mut r2);
        assert_eq!(u1.entries(), u2.entries(), "same seed must give identical draws");
    }

    #[test]
    fn random_primitives_have_their_defining_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let p = random_psd(6, &mut rng);
        let eig = crate::linalg::hermitian_eig(&p, &tol()).unwrap();
        assert!(eig.min_value() >= -1e-12);

        let n = random_normal(5, &mut rng);
        assert!(normal_residual(&n) < 1e-12 * (1.0 + n.norm_fro().powi(2)));

        let v = random_unit_vector(7, &mut rng);
        assert!((v.norm_fro() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn example_2_1_reproduces_the_witness_values_exactly() {
        for dim in [3usize, 8] {
            let bundle = example_2_1(dim).unwrap();
            bundle.verify_products(&tol()).unwrap();
            let ab = bundle.get("AB").unwrap();
            let e0 = ComplexMatrix::basis_vector(dim, 0);
            let gram_e0 = (&(&ab.adjoint() * ab) * &e0).norm_fro();
            let sq_e0 = (&(ab * ab) * &e0).norm_fro();
            assert_eq!(gram_e0, 1.0, "dim {dim}");
            assert_eq!(sq_e0, 0.0, "dim {dim}");
        }
        assert!(example_2_1(2).is_err());
    }

    #[test]
    fn example_2_2_gram_diagonals_match_the_weight_formulas() {
        let dim = 8;
        let alphas: Vec<f64> = (1..=dim).map(|n| n as f64 / (n as f64 + 1.0)).collect();
        let bundle = example_2_2(&alphas, dim).unwrap();
        bundle.verify_products(&tol()).unwrap();

        let checks: [(&str, Box<dyn Fn(usize) -> f64 + '_>); 4] = [
            ("gram_AB", Box::new(|i| alphas[i] * alphas[i])),
            ("gram2_AB", Box::new(|i| (alphas[i] * alphas[i + 1]).powi(2))),
            ("gram_BA", Box::new(|i| alphas[i + 1] * alphas[i + 1])),
            ("gram2_BA", Box::new(|i| (alphas[i + 1] * alphas[i + 2]).powi(2))),
        ];
        for (key, formula) in &checks {
            let m = bundle.get(key).unwrap();
            assert!(m.off_diagonal_norm() < 1e-14, "{key} must be diagonal");
            // interior block: the last two diagonal entries feel the edge
            for i in 0..dim - 2 {
                assert!(
                    (m[(i, i)].re - formula(i)).abs() < 1e-12,
                    "{key} diagonal entry {i}"
                );
            }
        }
    }

    #[test]
    fn example_2_2_validates_weights() {
        assert!(example_2_2(&[1.0, 2.0], 4).is_err());
        assert!(example_2_2(&[1.0, -2.0, 3.0, 4.0], 4).is_err());
        assert!(example_2_2(&[1.0, 2.0, 3.0, 4.0], 4).is_ok());
    }

    #[test]
    fn example_2_2_power_products_differ() {
        let dim = 6;
        let alphas: Vec<f64> = (1..=dim).map(|n| n as f64 / (n as f64 + 1.0)).collect();
        let bundle = example_2_2(&alphas, dim).unwrap();
        let d = (&*bundle.get("AB^2").unwrap() - bundle.get("B^2A").unwrap()).norm_fro();
        assert!(d > 0.1, "distance {d}");
    }

    #[test]
    fn verify_products_catches_a_corrupted_entry() {
        let mut bundle = example_2_1(4).unwrap();
        bundle.insert("AB", ComplexMatrix::identity(4));
        assert!(matches!(
            bundle.verify_products(&tol()),
            Err(OpClassError::BundleMismatch { .. })
        ));
    }

    #[test]
    fn phase_block_pairs_are_noncommuting_with_normal_products() {
        for seed in 0..10u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b) = phase_block_pair(6, &mut rng);
            let scale = 1.0 + a.norm_fro() * b.norm_fro();
            assert!(normal_residual(&a) < 1e-12 * scale, "A normal, seed {seed}");
            assert!(
                normal_residual(&(&a * &b)) < 1e-11 * scale,
                "AB normal, seed {seed}"
            );
            assert!(
                normal_residual(&(&b * &a)) < 1e-11 * scale,
                "BA normal, seed {seed}"
            );
            // B commutes with AA* but not with A
            let aas = &a * &a.adjoint();
            assert!(commutator_norm(&b, &aas) < 1e-11 * scale, "seed {seed}");
            assert!(commutator_norm(&a, &b) > 1e-2, "pair must not commute, seed {seed}");
        }
    }

    #[test]
    fn polar_frame_factors_satisfy_their_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let (u, p, b) = polar_frame(6, &mut rng);
        assert!((&(&u.adjoint() * &u) - &ComplexMatrix::identity(6)).norm_fro() < 1e-12);
        let eig = crate::linalg::hermitian_eig(&p.hermitize(), &tol()).unwrap();
        assert!(eig.min_value() > 0.0);
        let bu = &b * &u;
        assert!(commutator_norm(&p, &bu) < 1e-12 * (1.0 + p.norm_fro() * bu.norm_fro()));
        assert!(normal_residual(&bu) < 1e-12 * (1.0 + bu.norm_fro().powi(2)));
    }

    #[test]
    fn rect_frame_products_are_normal_and_identities_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let (a, b) = rect_frame(4, 6, &mut rng);
        assert_eq!((a.rows(), a.cols()), (4, 6));
        assert_eq!((b.rows(), b.cols()), (6, 4));
        let scale = 1.0 + a.norm_fro() * b.norm_fro();
        assert!(normal_residual(&(&a * &b)) < 1e-11 * scale);
        assert!(normal_residual(&(&b * &a)) < 1e-11 * scale);
        let lhs1 = &(&a.adjoint() * &a) * &b;
        let rhs1 = &b * &(&a * &a.adjoint());
        assert!((&lhs1 - &rhs1).norm_fro() < 1e-11 * scale);
        let lhs2 = &a * &(&b * &b.adjoint());
        let rhs2 = &(&b.adjoint() * &b) * &a;
        assert!((&lhs2 - &rhs2).norm_fro() < 1e-11 * scale);
    }

    #[test]
    fn slot_pairs_doubly_commute_and_stay_nonnormal_for_higher_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (a, b) = slot_pair(6, 2, false, &mut rng);
        let scale = 1.0 + a.norm_fro() * b.norm_fro();
        assert!(commutator_norm(&a, &b) < 1e-12 * scale);
        assert!(commutator_norm(&a, &b.adjoint()) < 1e-12 * scale);
        // neither factor is normal: the nilpotent blocks are real
        assert!(normal_residual(&a) > 0.1);
        assert!(normal_residual(&b) > 0.1);
        // but A^2 kills the nilpotent slot of A
        let a2 = &a * &a;
        let d = (&(&a.adjoint() * &a) - &(&a * &a.adjoint())).hermitize();
        let form = (&(&a2.adjoint() * &d) * &a2).hermitize();
        assert!(form.norm_fro() < 1e-11 * (1.0 + a.norm_fro().powi(6)));
    }

    #[test]
    fn random_pair_for_is_deterministic_and_rejects_unknown_ids() {
        let b1 = random_pair_for("T2.2", 6, 9, &tol()).unwrap();
        let b2 = random_pair_for("T2.2", 6, 9, &tol()).unwrap();
        for key in ["A", "B", "AB", "BA"] {
            assert_eq!(
                b1.get(key).unwrap().entries(),
                b2.get(key).unwrap().entries(),
                "{key} must be bitwise reproducible"
            );
        }
        assert!(matches!(
            random_pair_for("T9.9", 4, 0, &tol()),
            Err(OpClassError::UnknownTheorem { .. })
        ));
    }

    #[test]
    fn monotone_weights_increase_toward_one() {
        let w = monotone_weights(8);
        assert_eq!(w.len(), 7);
        assert!((w[0] - 0.5).abs() < 1e-15);
        for pair in w.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        let bundle = example_3_1(&w, 8).unwrap();
        assert_eq!(bundle.get("A").unwrap().rows(), 8);
    }
}
