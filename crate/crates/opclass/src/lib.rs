//! Numerical laboratory for operator classes of finite complex matrices.
//!
//! The crate classifies a matrix into normality-adjacent classes (normal,
//! hyponormal, quasinormal, (p,k)-quasihyponormal, paranormal and their
//! relatives), each verdict carrying a margin and a witness vector, and
//! stress-tests a registry of product, sum, and transfer statements about
//! those classes by seeded randomized trials.
//!
//! Organization:
//! - [`matrix`]: dense complex matrices with the handful of operations the
//!   rest of the crate needs.
//! - [`linalg`]: Hermitian eigendecomposition, fractional powers, polar
//!   decomposition, and the tolerance policy.
//! - [`classes`]: membership predicates returning margins and witnesses.
//! - [`generators`]: random primitives, truncated shifts, the worked
//!   shift-and-diagonal examples, and per-statement instance builders.
//! - [`theorems`]: the statement registry, trial harness, and the
//!   falsification suite of known counterexamples.
//! - [`report`]: JSON documents for verdicts, trials, and the on-disk
//!   matrix file format.
//! - [`cli`]: the `opclass` command line (classify / verify / example /
//!   falsify) built on the above.

pub mod classes;
pub mod cli;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod theorems;

pub use classes::{
    all_classes, check_hyponormal, check_k_quasihyponormal_unbounded_form, check_normal,
    check_paranormal_family, check_pk_quasihyponormal, check_quasihyponormal_normform,
    check_quasinormal, classify_matrix, interior_region, ClassParams, ClassVerdict,
    OperatorClass, Region, VerdictStatus,
};
pub use error::{OpClassError, Result};
pub use generators::{
    conjugate_by, example_2_1, example_2_2, example_3_1, haar_unitary, make_shift,
    monotone_weights, random_gaussian, random_normal, random_pair_for, random_psd,
    random_unit_vector, BoundaryMode, InstanceBundle, Provenance, ShiftKind, ShiftSpec,
};
pub use linalg::{frac_power, hermitian_eig, is_psd, polar, EigenPair, PolarParts, Tolerance};
pub use matrix::ComplexMatrix;
pub use report::{read_matrix, write_matrix, MatrixFile};
pub use theorems::{
    falsification_suite, registry, registry_ids, run_grid, run_trial, run_trial_on_bundle,
    spec_for, CheckRecord, CheckSpec, TheoremSpec, TrialOutcome, TrialReport,
};
