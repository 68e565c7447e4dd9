//! Acceptance gate: one test per criterion, each asserting the stated
//! figures at the stated tolerances and printing a single PASS line with
//! the measured numbers (visible under `--nocapture`).

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use opclass::{
    check_hyponormal, check_k_quasihyponormal_unbounded_form, check_paranormal_family,
    check_pk_quasihyponormal, check_quasihyponormal_normform, example_2_1, example_2_2,
    falsification_suite, frac_power, hermitian_eig, interior_region, polar, random_gaussian,
    random_normal, random_psd, registry_ids, run_grid, ComplexMatrix, Region, Tolerance,
    TrialOutcome,
};

#[test]
fn criterion_1_shift_idempotent_product_counterexample() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let dim = 8;
    let bundle = example_2_1(dim).expect("bundle builds");
    let window = interior_region(dim, 2);

    let a = check_pk_quasihyponormal(bundle.get("A").unwrap(), 1.0, 1, window, &tol).unwrap();
    let b = check_pk_quasihyponormal(bundle.get("B").unwrap(), 1.0, 1, Region::Full, &tol).unwrap();
    let ab_m = bundle.get("AB").unwrap();
    let ab = check_pk_quasihyponormal(ab_m, 1.0, 1, window, &tol).unwrap();
    assert!(a.holds(), "factor A must hold: margin {}", a.margin);
    assert!(b.holds(), "factor B must hold: margin {}", b.margin);
    assert!(ab.violated(), "product must fail: margin {}", ab.margin);

    let e0 = ComplexMatrix::basis_vector(dim, 0);
    let gram_e0 = (&(&ab_m.adjoint() * ab_m) * &e0).norm_fro();
    let sq_e0 = (&(ab_m * ab_m) * &e0).norm_fro();
    assert!((gram_e0 - 1.0).abs() < 1e-14, "||(AB)*(AB)e_0|| = {gram_e0}");
    assert!(sq_e0 < 1e-14, "||(AB)^2 e_0|| = {sq_e0}");

    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(1), "took {dt:?}");
    println!(
        "criterion 1 PASS: factors hold, product violated (margin {:+.1}), \
         ||(AB)*(AB)e_0|| - 1 = {:+.1e}, ||(AB)^2 e_0|| = {:.1e}, in {dt:?}",
        ab.margin,
        gram_e0 - 1.0,
        sq_e0
    );
}

#[test]
fn criterion_2_diagonal_shift_products_reproduction() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let dim = 8;

    let increasing: Vec<f64> = (0..dim).map(|n| (n + 1) as f64 / (n + 2) as f64).collect();
    let bundle = example_2_2(&increasing, dim).expect("bundle builds");

    // interior rows i <= dim-3 are clean for all four Gram matrices
    let mut worst_dev: f64 = 0.0;
    for i in 0..dim - 2 {
        let al = &increasing;
        let expected = [
            ("gram_AB", al[i] * al[i]),
            ("gram2_AB", (al[i] * al[i + 1]).powi(2)),
            ("gram_BA", al[i + 1] * al[i + 1]),
            ("gram2_BA", (al[i + 1] * al[i + 2]).powi(2)),
        ];
        for (key, want) in expected {
            let got = bundle.get(key).unwrap()[(i, i)].re;
            worst_dev = worst_dev.max((got - want).abs());
        }
    }
    assert!(worst_dev < 1e-12, "worst diagonal deviation {worst_dev}");

    let window = interior_region(dim, 2);
    let ab = check_pk_quasihyponormal(bundle.get("AB").unwrap(), 1.0, 1, window, &tol).unwrap();
    let ba = check_pk_quasihyponormal(bundle.get("BA").unwrap(), 1.0, 1, window, &tol).unwrap();
    assert!(ab.holds() && ba.holds(), "nondecreasing weights must hold");

    // one decreasing step lands in AB's weight window but not BA's
    let dec = [2.0, 1.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
    let bundle = example_2_2(&dec, dim).unwrap();
    let ab_dec = check_pk_quasihyponormal(bundle.get("AB").unwrap(), 1.0, 1, window, &tol).unwrap();
    let ba_dec = check_pk_quasihyponormal(bundle.get("BA").unwrap(), 1.0, 1, window, &tol).unwrap();
    assert!(ab_dec.violated(), "decreasing step must break AB");
    assert!(ba_dec.holds(), "BA never sees the decreasing step");

    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(1), "took {dt:?}");
    println!(
        "criterion 2 PASS: Gram diagonals within {worst_dev:.1e}, verdicts follow the \
         weight windows (AB {:+.1e} / {:+.1e}, BA {:+.1e} / {:+.1e}), in {dt:?}",
        ab.margin, ab_dec.margin, ba.margin, ba_dec.margin
    );
}

#[test]
fn criterion_3_normal_matrices_pass_the_inclusion_chain() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let ps = [0.25, 0.5, 1.0];
    let ks = [1usize, 2, 3];
    let trials = 200;

    let mut checks = 0usize;
    let mut worst: f64 = 0.0;
    for seed in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_normal(6, &mut rng);
        let h = check_hyponormal(&a, false, Region::Full, &tol).unwrap();
        assert!(!h.violated(), "hyponormal failed at seed {seed}");
        checks += 1;
        for p in ps {
            for k in [0usize, 1, 2, 3] {
                if k == 0 || ks.contains(&k) {
                    let v = check_pk_quasihyponormal(&a, p, k, Region::Full, &tol).unwrap();
                    assert!(
                        !v.violated(),
                        "{} failed at seed {seed}: margin {}",
                        v.describe(),
                        v.margin
                    );
                    worst = worst.min(v.margin);
                    checks += 1;
                }
            }
        }
    }

    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(30), "took {dt:?}");
    println!(
        "criterion 3 PASS: {trials} normal matrices x {} checks, zero failures, \
         worst margin {worst:+.1e}, in {dt:?}",
        checks / trials as usize
    );
}

#[test]
fn criterion_4_conjugation_respects_fractional_powers() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let n = 8;
    let alphas = [0.3, 0.5, 0.9];

    let mut worst = f64::INFINITY;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_psd(n, &mut rng);
        let g = random_gaussian(n, n, &mut rng);
        // operator norm of g via its Gram spectrum, then shrink below 1
        let g_norm = hermitian_eig(&(&g.adjoint() * &g).hermitize(), &tol)
            .unwrap()
            .max_value()
            .max(0.0)
            .sqrt();
        let shrink: f64 = 0.3 + 0.69 * rng.gen::<f64>();
        let b = g.scale_real(shrink / g_norm);
        let alpha = alphas[(seed % 3) as usize];

        let inner = (&(&b.adjoint() * &a) * &b).hermitize();
        let lhs = frac_power(&inner, alpha, &tol).unwrap();
        let rhs = &(&b.adjoint() * &frac_power(&a, alpha, &tol).unwrap()) * &b;
        let diff = (&lhs - &rhs).hermitize();
        let min_eig = hermitian_eig(&diff, &tol).unwrap().min_value();
        let a_norm = hermitian_eig(&a, &tol).unwrap().max_value();
        assert!(
            min_eig >= -1e-8 * (1.0 + a_norm),
            "seed {seed}, alpha {alpha}: min eig {min_eig}"
        );
        worst = worst.min(min_eig);
    }

    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(10), "took {dt:?}");
    println!(
        "criterion 4 PASS: 100 (psd, contraction, alpha) triples, worst min eig \
         {worst:+.1e}, in {dt:?}"
    );
}

#[test]
fn criterion_5_registry_grid_produces_no_counterexamples() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let ids = registry_ids();
    let reports = run_grid(&ids, &[4, 6, 8], 0, 50, &tol).expect("grid runs");
    assert_eq!(reports.len(), ids.len() * 3 * 50);

    let violated = reports.iter().filter(|r| r.violated()).count();
    assert_eq!(violated, 0, "counterexample reports: {violated}");

    // counted trials must have one direction with every hypothesis green;
    // anything else would mean conclusions were scored off-hypothesis
    let mut counted = 0usize;
    let mut unsatisfiable = 0usize;
    for r in &reports {
        match r.outcome {
            TrialOutcome::HypothesesUnsatisfiable => unsatisfiable += 1,
            _ => {
                counted += 1;
                let fwd_ok = r
                    .hypotheses
                    .iter()
                    .filter(|c| !c.name.starts_with("rev: "))
                    .all(|c| c.passed);
                let rev: Vec<_> = r
                    .hypotheses
                    .iter()
                    .filter(|c| c.name.starts_with("rev: "))
                    .collect();
                let rev_ok = !rev.is_empty() && rev.iter().all(|c| c.passed);
                assert!(
                    fwd_ok || rev_ok,
                    "{} dim {} seed {}: counted without satisfied hypotheses",
                    r.theorem_id,
                    r.dim,
                    r.seed
                );
            }
        }
    }
    assert_eq!(
        unsatisfiable, 0,
        "every builder must satisfy its hypotheses on every cell"
    );

    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(300), "took {dt:?}");
    println!(
        "criterion 5 PASS: {} statements x dims {{4,6,8}} x 50 seeds = {counted} counted \
         trials, 0 violations, 0 unsatisfiable, in {dt:?}",
        ids.len()
    );
}

#[test]
fn criterion_6_membership_criteria_agree_in_status() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let dim = 6;
    let total = 500u64;

    let mut agreements = 0usize;
    for i in 0..total {
        let a = common::mixed_instance(i, dim);
        let k = 1 + (i % 3) as usize;

        let normform = check_quasihyponormal_normform(&a, Region::Full, &tol).unwrap();
        let pk11 = check_pk_quasihyponormal(&a, 1.0, 1, Region::Full, &tol).unwrap();
        assert_eq!(
            normform.status, pk11.status,
            "norm-form vs (1,1) form split at instance {i}"
        );

        let unbounded = check_k_quasihyponormal_unbounded_form(&a, k, Region::Full, &tol).unwrap();
        let pk1k = check_pk_quasihyponormal(&a, 1.0, k, Region::Full, &tol).unwrap();
        assert_eq!(
            unbounded.status, pk1k.status,
            "unbounded form vs (1,{k}) form split at instance {i}"
        );
        agreements += 1;
    }

    let dt = t0.elapsed();
    println!(
        "criterion 6 PASS: {agreements}/{total} mixed instances with agreeing statuses, in {dt:?}"
    );
}

#[test]
fn criterion_7_kernel_reconstruction_and_pencil_vs_sampling() {
    let t0 = Instant::now();
    let tol = Tolerance::default();
    let n = 8;

    let mut worst_rel: f64 = 0.0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let h = random_gaussian(n, n, &mut rng).hermitize();
        let eig = hermitian_eig(&h, &tol).unwrap();
        let rebuilt = &(&eig.vectors * &ComplexMatrix::diag_real(&eig.values)) * &eig.vectors.adjoint();
        let rel = (&rebuilt - &h).norm_fro() / (1.0 + h.norm_fro());
        worst_rel = worst_rel.max(rel);

        let a = random_gaussian(n, n, &mut rng);
        let parts = polar(&a, &tol).unwrap();
        worst_rel = worst_rel.max(parts.reconstruction_error / (1.0 + a.norm_fro()));

        let p = random_psd(n, &mut rng);
        let root = frac_power(&p, 0.5, &tol).unwrap();
        let rel = (&(&root * &root) - &p).norm_fro() / (1.0 + p.norm_fro());
        worst_rel = worst_rel.max(rel);
    }
    assert!(worst_rel < 1e-9, "worst relative reconstruction {worst_rel}");

    // decidable paranormal pencil vs a sampler that never touches the
    // eigensolver
    let mut disagreements = 0usize;
    for i in 0..50u64 {
        let a = common::mixed_instance(i, 4);
        let pencil = check_paranormal_family(&a, 2, false, Region::Full, &tol, i).unwrap();
        let slack = common::paranormal_sampling_slack(&a, 2, false, 100_000, 1000 + i);
        let band = tol.psd_floor * (1.0 + a.norm_fro().powi(2));
        let sampler_violated = slack < -band;
        if pencil.violated() != sampler_violated {
            disagreements += 1;
            eprintln!(
                "instance {i}: pencil margin {:+.3e} vs sampled slack {slack:+.3e}",
                pencil.margin
            );
        }
    }
    assert_eq!(disagreements, 0);

    let dt = t0.elapsed();
    println!(
        "criterion 7 PASS: worst kernel reconstruction {worst_rel:.1e}, pencil vs \
         sampling 50/50 agreement, in {dt:?}"
    );
}

#[test]
fn criterion_8_falsification_suite_and_exit_codes() {
    let t0 = Instant::now();
    let tol = Tolerance::default();

    let reports = falsification_suite(&tol).expect("suite runs");
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert!(
            !r.violated() && r.outcome == TrialOutcome::ConclusionHeld,
            "{}: counterexample stopped behaving",
            r.theorem_id
        );
        for c in r.hypotheses.iter().chain(&r.conclusions) {
            assert!(c.passed, "{}: {} did not behave", r.theorem_id, c.name);
        }
    }

    // exit code discipline through the real binary
    let bin = env!("CARGO_BIN_EXE_opclass");
    let dir = tempfile::tempdir().unwrap();

    let falsify = std::process::Command::new(bin).arg("falsify").output().unwrap();
    assert_eq!(falsify.status.code(), Some(0), "falsify must exit 0");

    let bundle = example_2_1(8).unwrap();
    let ab = bundle.get("AB").unwrap();
    let ab_path = dir.path().join("ab.json");
    opclass::write_matrix(&ab_path, ab).unwrap();
    let classify = std::process::Command::new(bin)
        .args(["classify", "--input"])
        .arg(&ab_path)
        .args(["--classes", "quasihyponormal"])
        .output()
        .unwrap();
    assert_eq!(classify.status.code(), Some(1), "violation must exit 1");

    let bad_path = dir.path().join("bad.json");
    std::fs::write(&bad_path, "{\"rows\": 3").unwrap();
    let bad = std::process::Command::new(bin)
        .args(["classify", "--input"])
        .arg(&bad_path)
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2), "unreadable input must exit 2");

    let dt = t0.elapsed();
    println!(
        "criterion 8 PASS: 3 pinned counterexamples still fail as documented, exit \
         codes 0/1/2 verified, in {dt:?}"
    );
}
