//! Matrix file format and report documents.
//!
//! Matrices travel as `{"rows": n, "cols": m, "entries": [[re, im], ...]}`
//! in row-major order. Numbers are printed as shortest round-trip decimals,
//! so a written matrix re-reads to a bitwise-identical entry sequence; that
//! makes both formats diffable and suitable for golden files.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classes::{ClassParams, ClassVerdict, VerdictStatus};
use crate::error::Result;
use crate::generators::{InstanceBundle, Provenance};
use crate::matrix::ComplexMatrix;
use crate::theorems::{CheckRecord, TrialOutcome, TrialReport};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let entries: Vec<Complex64> = self
            .entries
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        ComplexMatrix::new(self.rows, self.cols, entries)
    }
}

/// Reads a matrix file, validating shape and finiteness.
pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path)?;
    let file: MatrixFile = serde_json::from_str(&text)?;
    file.to_matrix()
}

/// Writes a matrix in the interchange format.
pub fn write_matrix(path: &Path, m: &ComplexMatrix) -> Result<()> {
    let doc = serde_json::to_string_pretty(&MatrixFile::from_matrix(m))?;
    std::fs::write(path, doc)?;
    Ok(())
}

pub fn status_str(s: VerdictStatus) -> &'static str {
    match s {
        VerdictStatus::Holds => "holds",
        VerdictStatus::Violated => "violated",
        VerdictStatus::NoViolationFound => "no-violation-found",
    }
}

pub fn outcome_str(o: TrialOutcome) -> &'static str {
    match o {
        TrialOutcome::ConclusionHeld => "conclusion-held",
        TrialOutcome::ConclusionViolated => "conclusion-violated",
        TrialOutcome::HypothesesUnsatisfiable => "hypotheses-unsatisfiable",
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub status: String,
    pub margin: f64,
    pub samples_used: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MatrixFile>,
}

impl VerdictDoc {
    pub fn from_verdict(v: &ClassVerdict) -> Self {
        let ClassParams { p, k } = v.params;
        Self {
            class: v.class.id().to_string(),
            p,
            k,
            status: status_str(v.status).to_string(),
            margin: v.margin,
            samples_used: v.samples_used,
            witness: v.witness.as_ref().map(MatrixFile::from_matrix),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MatrixFile>,
}

impl CheckDoc {
    pub fn from_record(r: &CheckRecord) -> Self {
        Self {
            name: r.name.clone(),
            value: r.value,
            bound: r.bound,
            passed: r.passed,
            status: r.status.map(|s| status_str(s).to_string()),
            witness: r.witness.as_ref().map(MatrixFile::from_matrix),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialDoc {
    pub theorem_id: String,
    pub dim: usize,
    pub seed: u64,
    pub outcome: String,
    pub hypotheses: Vec<CheckDoc>,
    pub conclusions: Vec<CheckDoc>,
    /// Full instance dump, attached to counterexample trials so they can be
    /// inspected without regenerating.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleDoc>,
}

impl TrialDoc {
    pub fn from_report(r: &TrialReport) -> Self {
        Self {
            theorem_id: r.theorem_id.clone(),
            dim: r.dim,
            seed: r.seed,
            outcome: outcome_str(r.outcome).to_string(),
            hypotheses: r.hypotheses.iter().map(CheckDoc::from_record).collect(),
            conclusions: r.conclusions.iter().map(CheckDoc::from_record).collect(),
            bundle: None,
        }
    }

    pub fn with_bundle(mut self, bundle: &InstanceBundle) -> Self {
        self.bundle = Some(BundleDoc::from_bundle(bundle));
        self
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleDoc {
    pub label: String,
    pub provenance: Provenance,
    pub params: std::collections::BTreeMap<String, f64>,
    pub matrices: std::collections::BTreeMap<String, MatrixFile>,
}

impl BundleDoc {
    pub fn from_bundle(b: &InstanceBundle) -> Self {
        Self {
            label: b.label.clone(),
            provenance: b.provenance.clone(),
            params: b.params.clone(),
            matrices: b
                .matrices
                .iter()
                .map(|(k, m)| (k.clone(), MatrixFile::from_matrix(m)))
                .collect(),
        }
    }
}

/// Classification run over one input matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub input: String,
    pub rows: usize,
    pub cols: usize,
    pub verdicts: Vec<VerdictDoc>,
}

/// Aggregated verify run: per-statement outcome counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifySummaryDoc {
    pub theorem_id: String,
    pub statement: String,
    pub held: usize,
    pub violated: usize,
    pub unsatisfiable: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub dims: Vec<usize>,
    pub seed_base: u64,
    pub seeds: u64,
    pub summaries: Vec<VerifySummaryDoc>,
    /// Full records only for trials that went wrong.
    pub violations: Vec<TrialDoc>,
}

/// Worked-example reproduction: displayed matrices plus expected-verdict
/// checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExampleDoc {
    pub name: String,
    pub dim: usize,
    pub bundle: BundleDoc,
    pub checks: Vec<CheckDoc>,
    pub all_match: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FalsifyDoc {
    pub entries: Vec<TrialDoc>,
    pub all_behaved: bool,
}

/// Serializes any document to pretty JSON text.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(doc)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matrix_file_round_trips_bitwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let m = crate::generators::random_gaussian(3, 5, &mut rng);
        let text = serde_json::to_string(&MatrixFile::from_matrix(&m)).unwrap();
        let back: MatrixFile = serde_json::from_str(&text).unwrap();
        let m2 = back.to_matrix().unwrap();
        assert_eq!(m.entries(), m2.entries());
        assert_eq!((m2.rows(), m2.cols()), (3, 5));
    }

    #[test]
    fn matrix_file_validates_entry_count_and_finiteness() {
        let short = MatrixFile {
            rows: 2,
            cols: 2,
            entries: vec![[1.0, 0.0]],
        };
        assert!(short.to_matrix().is_err());
        let bad = MatrixFile {
            rows: 1,
            cols: 1,
            entries: vec![[f64::NAN, 0.0]],
        };
        assert!(bad.to_matrix().is_err());
    }

    #[test]
    fn file_io_round_trips_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = crate::generators::random_gaussian(4, 4, &mut rng);
        write_matrix(&path, &m).unwrap();
        let back = read_matrix(&path).unwrap();
        assert_eq!(m.entries(), back.entries());
    }

    #[test]
    fn malformed_file_reports_a_parse_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, "{\"rows\": 2").unwrap();
        assert!(matches!(
            read_matrix(&path),
            Err(crate::error::OpClassError::Document(_))
        ));
    }

    #[test]
    fn verdict_and_trial_docs_serialize_with_stable_labels() {
        let tol = crate::linalg::Tolerance::default();
        let m = ComplexMatrix::identity(3);
        let verdict = crate::classes::check_normal(&m, crate::classes::Region::Full, &tol).unwrap();
        let doc = VerdictDoc::from_verdict(&verdict);
        assert_eq!(doc.class, "normal");
        assert_eq!(doc.status, "holds");

        let report = crate::theorems::run_trial("T2.2", 4, 1, &tol).unwrap();
        let tdoc = TrialDoc::from_report(&report);
        assert_eq!(tdoc.outcome, "conclusion-held");
        assert!(!tdoc.hypotheses.is_empty());
        let text = to_json(&tdoc).unwrap();
        assert!(text.contains("\"theorem_id\": \"T2.2\""));
    }

    #[test]
    fn trial_docs_embed_the_instance_only_when_attached() {
        let tol = crate::linalg::Tolerance::default();
        let report = crate::theorems::run_trial("T2.2", 4, 1, &tol).unwrap();
        let bare = to_json(&TrialDoc::from_report(&report)).unwrap();
        assert!(!bare.contains("\"bundle\""), "absent bundles must not serialize");

        let bundle = crate::generators::random_pair_for("T2.2", 4, 1, &tol).unwrap();
        let doc = TrialDoc::from_report(&report).with_bundle(&bundle);
        let text = to_json(&doc).unwrap();
        assert!(text.contains("\"bundle\""));
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let matrices = parsed["bundle"]["matrices"].as_object().unwrap();
        assert!(matrices.contains_key("A") && matrices.contains_key("B"));
    }
}
