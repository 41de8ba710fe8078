//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`; a failing criterion panics,
//! so `cargo test` reports it either way).
//!
//! Every comparison here is exact — integer and rational arithmetic only.

use std::time::Instant;

use symprod::hodge::{projective_line, projective_space};
use symprod::macdonald::{
    chi_y_series, e_series, sym_hodge_numbers, sym_wedge_dims, SeriesForm, TriGradedDims,
};
use symprod::oracle::DEFAULT_DIM_BOUND;
use symprod::pairing::{
    diagonal_library, odd_pair, random_library, series_int_coeffs, single_block,
    single_degree_library, GradedPairing, PairingError,
};
use symprod::linalg::QMatrix;
use symprod::ring::rat;
use symprod::verify::{random_hodge_tables, run_suite, Suite, VerifyConfig};

fn report(criterion: &str, start: Instant, cases: u64) {
    println!(
        "{criterion}: pass ({cases} cases, {:.2?})",
        start.elapsed()
    );
}

fn full_library(seed: u64) -> Vec<GradedPairing> {
    let mut lib = single_degree_library();
    lib.extend(random_library(50, seed));
    lib
}

/// The product and exponential expansions of the E-polynomial series agree
/// coefficientwise for 50 fixed-seed random tables at order 6.
#[test]
fn criterion_1_two_form_series_identity() {
    let start = Instant::now();
    let tables = random_hodge_tables(50, 0, 4);
    assert!(tables.len() >= 50);
    for (idx, h) in tables.iter().enumerate() {
        let product = e_series(h, 6, SeriesForm::Product);
        let exponential = e_series(h, 6, SeriesForm::Exponential);
        assert_eq!(
            product, exponential,
            "criterion 1: fail (table #{idx}: expansions differ)"
        );
        // The genus series is the x = 1 specialization; check it the same way.
        let genus_product = chi_y_series(h, 6, SeriesForm::Product);
        let genus_exponential = chi_y_series(h, 6, SeriesForm::Exponential);
        assert_eq!(
            genus_product, genus_exponential,
            "criterion 1: fail (table #{idx}: genus expansions differ)"
        );
    }
    report("criterion 1 (two-form series identity)", start, 100);
}

/// The series route to the symmetric-product dimensions agrees with the
/// direct symmetric/exterior count for the same 50 tables and n <= 4, and
/// both agree with the projector-rank oracle on small spaces.
#[test]
fn criterion_2_dimension_cross_derivation() {
    let start = Instant::now();
    let mut cases = 0u64;
    for (idx, h) in random_hodge_tables(50, 0, 4).iter().enumerate() {
        let tri = TriGradedDims::from_hodge(h);
        for n in 0..=4 {
            let from_series = TriGradedDims::from_hodge(
                &sym_hodge_numbers(h, n)
                    .unwrap_or_else(|e| panic!("criterion 2: fail (table #{idx}, n = {n}: {e})")),
            );
            let direct = sym_wedge_dims(&tri, n);
            assert_eq!(
                from_series, direct,
                "criterion 2: fail (table #{idx}, n = {n}: series vs direct count)"
            );
            cases += 1;
        }
    }
    // Projector-rank oracle over every graded space of total dim <= 3 with
    // degrees |k| <= 2, n <= 3, both characters; delegated to the suite
    // runner, which compares all three counts.
    let reports = run_suite(
        Suite::Dimensions,
        VerifyConfig {
            max_n: 3,
            seed: 0,
            dim_bound: DEFAULT_DIM_BOUND,
        },
    );
    let ranks = reports
        .iter()
        .find(|r| r.name == "counts_vs_projector_rank")
        .expect("suite includes the projector-rank check");
    assert!(
        ranks.passed(),
        "criterion 2: fail ({})",
        ranks.failure.clone().unwrap_or_default()
    );
    report(
        "criterion 2 (dimension cross-derivation)",
        start,
        cases + ranks.cases,
    );
}

/// From the two-entry input table, the n-th symmetric product reproduces
/// the full diamond `h^{p,p,2p} = 1`, `0 <= p <= n`, for n = 2, 3, 4.
#[test]
fn criterion_3_projective_line_chain() {
    let start = Instant::now();
    let line = projective_line();
    for n in 2..=4 {
        let table = sym_hodge_numbers(&line, n)
            .unwrap_or_else(|e| panic!("criterion 3: fail (n = {n}: {e})"));
        assert_eq!(
            table,
            projective_space(n as i64),
            "criterion 3: fail (n = {n}: wrong diamond)"
        );
    }
    report("criterion 3 (projective-line chain)", start, 3);
}

/// Closed-form signature series versus the brute-force induced pairing for
/// the whole pairing library at n <= 4, plus the four anchored series.
#[test]
fn criterion_4_signature_series_end_to_end() {
    let start = Instant::now();
    let mut cases = 0u64;
    for (idx, phi) in full_library(0).iter().enumerate() {
        let series = phi
            .hz_series(4)
            .unwrap_or_else(|e| panic!("criterion 4: fail (pairing #{idx}: {e})"));
        let closed = series_int_coeffs(&series);
        for n in 0..=4 {
            match phi.brute_signature(n, DEFAULT_DIM_BOUND) {
                Ok(brute) => {
                    assert_eq!(
                        brute, closed[n],
                        "criterion 4: fail (pairing #{idx} dims {:?}, n = {n})",
                        phi.dims()
                    );
                    cases += 1;
                }
                Err(PairingError::BoundExceeded { .. }) => {}
                Err(e) => panic!("criterion 4: fail (pairing #{idx}, n = {n}: {e})"),
            }
        }
    }

    let anchor = |phi: &GradedPairing, expected: [i64; 5], label: &str| {
        let series = phi.hz_series(4).expect("anchored series");
        assert_eq!(
            series_int_coeffs(&series),
            expected.to_vec(),
            "criterion 4: fail (anchor {label})"
        );
        for (n, &value) in expected.iter().enumerate() {
            assert_eq!(
                phi.brute_signature(n, DEFAULT_DIM_BOUND).unwrap(),
                value,
                "criterion 4: fail (anchor {label} brute, n = {n})"
            );
        }
    };
    let positive_line = single_block(0, QMatrix::identity(1)).unwrap();
    let negative_line = single_block(0, QMatrix::identity(1).scale(&rat(-1))).unwrap();
    let even_pair = single_block(2, QMatrix::identity(1)).unwrap();
    anchor(&positive_line, [1, 1, 1, 1, 1], "positive line");
    anchor(&negative_line, [1, -1, 1, -1, 1], "negative line");
    anchor(&odd_pair(), [1, 0, -1, 0, 0], "odd hyperbolic pair");
    anchor(&even_pair, [1, 0, 1, 0, 1], "even off-zero pair");
    cases += 20;

    report("criterion 4 (signature series end-to-end)", start, cases);
}

/// The cocycle law and the five-term interchange identity hold exhaustively
/// for n <= 4, and the chain-map property holds for every two-degree
/// complex with dims <= 2 and n <= 3.
#[test]
fn criterion_5_sign_identity_suites() {
    let start = Instant::now();
    let reports = run_suite(
        Suite::Signs,
        VerifyConfig {
            max_n: 4,
            seed: 0,
            dim_bound: DEFAULT_DIM_BOUND,
        },
    );
    let mut cases = 0u64;
    for name in ["cocycle", "interchange", "chain_map"] {
        let check = reports
            .iter()
            .find(|r| r.name == name)
            .unwrap_or_else(|| panic!("suite must include {name}"));
        assert!(
            check.passed(),
            "criterion 5: fail ({name}: {})",
            check.failure.clone().unwrap_or_default()
        );
        cases += check.cases;
    }
    report("criterion 5 (sign-identity suites)", start, cases);
}

/// Cohomology of random tensor products equals the graded convolution of
/// the factor cohomologies for 100 fixed-seed tuples.
#[test]
fn criterion_6_kunneth() {
    let start = Instant::now();
    let reports = run_suite(
        Suite::Kunneth,
        VerifyConfig {
            max_n: 3,
            seed: 0,
            dim_bound: DEFAULT_DIM_BOUND,
        },
    );
    let check = &reports[0];
    assert_eq!(check.cases, 100);
    assert!(
        check.passed(),
        "criterion 6: fail ({})",
        check.failure.clone().unwrap_or_default()
    );
    report("criterion 6 (kunneth)", start, check.cases);
}

/// Every pairing in the library has mirror-symmetric ranks and integral
/// series exponents; dropping mirror-unbalanced multi-indices preserves the
/// brute-force signature on aligned (diagonal-block) bases.
#[test]
fn criterion_7_invariant_structure() {
    let start = Instant::now();
    let mut cases = 0u64;
    for (idx, phi) in full_library(0).iter().enumerate() {
        let inv = phi.invariants();
        for (&i, &r) in &inv.rho {
            assert_eq!(
                inv.rho.get(&-i).copied().unwrap_or(0),
                r,
                "criterion 7: fail (pairing #{idx}: rho asymmetric at {i})"
            );
        }
        assert_eq!(
            (inv.sigma - inv.chi).rem_euclid(2),
            0,
            "criterion 7: fail (pairing #{idx}: sigma, chi parity)"
        );
        cases += 1;
    }
    for (idx, phi) in diagonal_library().iter().enumerate() {
        for n in 0..=3 {
            let full = phi.brute_signature(n, DEFAULT_DIM_BOUND).unwrap();
            let dropped = phi
                .brute_signature_mirror_fixed(n, DEFAULT_DIM_BOUND)
                .unwrap();
            assert_eq!(
                full, dropped,
                "criterion 7: fail (diagonal pairing #{idx}, n = {n}: dropping changed the \
                 signature)"
            );
            cases += 1;
        }
    }
    report("criterion 7 (invariant structure)", start, cases);
}
