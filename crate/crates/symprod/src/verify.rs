//! Named verification suites: each check sweeps an identity over a family
//! of inputs and reports the case count plus the first counterexample, if
//! any. The CLI `verify` subcommand and the acceptance tests both run
//! these.

use itertools::Itertools;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hodge::HodgeNumbers;
use crate::macdonald::{sym_hodge_numbers, sym_wedge_dims, SeriesForm, TriGradedDims};
use crate::oracle::{
    chain_map_commutes, check_cocycle, check_composition_law, check_interchange_identity,
    check_invariant_dims, check_projectors, kunneth_check, random_complex, two_degree_complexes,
    GradedSpace, Permutation,
};
use crate::pairing::{
    check_index_count, diagonal_library, random_library, series_int_coeffs, single_degree_library,
    PairingError,
};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: u64,
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// One machine-readable line: `name cases=N result=pass|fail [counterexample=...]`.
    pub fn render_line(&self) -> String {
        match &self.failure {
            None => format!("{} cases={} result=pass", self.name, self.cases),
            Some(ce) => format!(
                "{} cases={} result=fail counterexample={:?}",
                self.name, self.cases, ce
            ),
        }
    }
}

/// Settings shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub dim_bound: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            seed: 0,
            dim_bound: crate::oracle::DEFAULT_DIM_BOUND,
        }
    }
}

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Sign identities: cocycle law, block interchange, composition of
    /// actions, projectors, chain maps.
    Signs,
    /// Cohomology of tensor products versus graded convolution.
    Kunneth,
    /// Dimension counts: generating series versus direct counts versus
    /// projector ranks, and the two closed forms of the genus series.
    Dimensions,
    /// The signature series versus the brute-force induced pairing.
    Signature,
    /// Everything above.
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "signs" => Some(Suite::Signs),
            "kunneth" => Some(Suite::Kunneth),
            // The older names for these two suites are kept as aliases.
            "dimensions" | "prop22" => Some(Suite::Dimensions),
            "signature" | "theorem2" => Some(Suite::Signature),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

/// Runs a suite and collects its reports.
pub fn run_suite(suite: Suite, config: VerifyConfig) -> Vec<CheckReport> {
    match suite {
        Suite::Signs => signs_suite(config),
        Suite::Kunneth => kunneth_suite(config),
        Suite::Dimensions => dimensions_suite(config),
        Suite::Signature => signature_suite(config),
        Suite::All => {
            let mut all = signs_suite(config);
            all.extend(kunneth_suite(config));
            all.extend(dimensions_suite(config));
            all.extend(signature_suite(config));
            all
        }
    }
}

/// Fixed-seed random Hodge tables: up to `max_entries` support points with
/// `|p|, |q| <= 2`, `|k| <= 3`, `1 <= h <= 2`.
pub fn random_hodge_tables(count: usize, seed: u64, max_entries: usize) -> Vec<HodgeNumbers> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let entries = rng.random_range(1..=max_entries);
        let mut map = std::collections::BTreeMap::new();
        for _ in 0..entries {
            let p = rng.random_range(-2..=2i64);
            let q = rng.random_range(-2..=2i64);
            let k = rng.random_range(-3..=3i64);
            let h = rng.random_range(1..=2i64);
            map.entry((p, q, k)).or_insert(h);
        }
        out.push(HodgeNumbers::new(map).expect("generated entries are valid"));
    }
    out
}

/// All graded spaces (single grading) with degrees in `[-2, 2]` and total
/// dimension between 1 and `max_total`.
fn small_spaces(max_total: usize) -> Vec<GradedSpace> {
    let degrees = [-2i64, -1, 0, 1, 2];
    let mut out = Vec::new();
    for total in 1..=max_total {
        for combo in degrees.iter().combinations_with_replacement(total) {
            let mut dims = std::collections::BTreeMap::new();
            for &&d in &combo {
                *dims.entry(d).or_insert(0usize) += 1;
            }
            out.push(GradedSpace::from_dims(dims));
        }
    }
    out
}

fn signs_suite(config: VerifyConfig) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let n_max = config.max_n.min(4);

    // Cocycle law over all pairs of permutations and parity patterns.
    let mut cases = 0u64;
    let mut failure = None;
    for n in 0..=n_max {
        let group_size = (1..=n as u64).product::<u64>().max(1);
        cases += group_size * group_size * (1u64 << n);
        if failure.is_none() {
            failure = check_cocycle(n);
        }
    }
    reports.push(CheckReport {
        name: "cocycle",
        cases,
        failure,
    });

    // Interchange identity over all permutations and parity-pattern pairs.
    let mut cases = 0u64;
    let mut failure = None;
    for n in 0..=n_max {
        let group_size = (1..=n as u64).product::<u64>().max(1);
        cases += group_size * (1u64 << n) * (1u64 << n);
        if failure.is_none() {
            failure = check_interchange_identity(n);
        }
    }
    reports.push(CheckReport {
        name: "interchange",
        cases,
        failure,
    });

    // Matrix composition law on a fixed mixed-parity space.
    let space = GradedSpace::from_dims([(0, 1), (1, 1)]);
    let mut cases = 0u64;
    let mut failure = None;
    for n in 0..=n_max.min(3) {
        let group_size = (1..=n as u64).product::<u64>().max(1);
        cases += group_size * group_size;
        if failure.is_none() {
            failure = check_composition_law(&space, n, config.dim_bound)
                .unwrap_or_else(|e| Some(e.to_string()));
        }
    }
    reports.push(CheckReport {
        name: "action_composition",
        cases,
        failure,
    });

    // Projector idempotence and orthogonality.
    let mut cases = 0u64;
    let mut failure = None;
    for n in 0..=n_max.min(3) {
        cases += 1;
        if failure.is_none() {
            failure = check_projectors(&space, n, config.dim_bound)
                .unwrap_or_else(|e| Some(e.to_string()));
        }
    }
    reports.push(CheckReport {
        name: "projectors",
        cases,
        failure,
    });

    // Chain-map property over every two-degree complex with dims <= 2.
    let mut cases = 0u64;
    let mut failure = None;
    let complexes: Vec<_> = [0i64, 1]
        .iter()
        .flat_map(|&offset| two_degree_complexes(offset, 2))
        .collect();
    for k in &complexes {
        for n in 1..=n_max.min(3) {
            for sigma in Permutation::all(n) {
                cases += 1;
                if failure.is_none() {
                    failure = chain_map_commutes(k, n, &sigma, config.dim_bound)
                        .unwrap_or_else(|e| Some(e.to_string()));
                }
            }
        }
    }
    reports.push(CheckReport {
        name: "chain_map",
        cases,
        failure,
    });

    reports
}

fn kunneth_suite(config: VerifyConfig) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cases = 0u64;
    let mut failure = None;
    for _ in 0..100 {
        let factors: Vec<_> = (0..rng.random_range(1..=3usize))
            .map(|_| random_complex(&mut rng, -1..=1, 2))
            .collect();
        cases += 1;
        if failure.is_none() {
            failure = kunneth_check(&factors, config.dim_bound)
                .unwrap_or_else(|e| Some(e.to_string()));
        }
    }
    vec![CheckReport {
        name: "kunneth_random",
        cases,
        failure,
    }]
}

fn dimensions_suite(config: VerifyConfig) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let tables = random_hodge_tables(50, config.seed, 4);

    // The two closed forms of the E-polynomial series agree.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for (idx, h) in tables.iter().enumerate() {
        cases += 1;
        if failure.is_none() {
            let product = crate::macdonald::e_series(h, 6, SeriesForm::Product);
            let exponential = crate::macdonald::e_series(h, 6, SeriesForm::Exponential);
            if product != exponential {
                failure = Some(format!(
                    "table #{idx}: product and exponential expansions differ: {product} vs \
                     {exponential}"
                ));
            }
        }
    }
    reports.push(CheckReport {
        name: "e_series_two_forms",
        cases,
        failure,
    });

    // Same for the genus series.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for (idx, h) in tables.iter().enumerate() {
        cases += 1;
        if failure.is_none() {
            let product = crate::macdonald::chi_y_series(h, 6, SeriesForm::Product);
            let exponential = crate::macdonald::chi_y_series(h, 6, SeriesForm::Exponential);
            if product != exponential {
                failure = Some(format!("table #{idx}: genus series forms differ"));
            }
        }
    }
    reports.push(CheckReport {
        name: "chi_y_series_two_forms",
        cases,
        failure,
    });

    // Series route equals the direct symmetric/exterior count.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for (idx, h) in tables.iter().enumerate() {
        let tri = TriGradedDims::from_hodge(h);
        for n in 0..=config.max_n.min(4) {
            cases += 1;
            if failure.is_none() {
                match sym_hodge_numbers(h, n) {
                    Ok(table) => {
                        let from_series = TriGradedDims::from_hodge(&table);
                        let direct = sym_wedge_dims(&tri, n);
                        if from_series != direct {
                            failure = Some(format!(
                                "table #{idx}, n = {n}: series gives {from_series:?}, direct \
                                 count gives {direct:?}"
                            ));
                        }
                    }
                    Err(e) => failure = Some(format!("table #{idx}, n = {n}: {e}")),
                }
            }
        }
    }
    reports.push(CheckReport {
        name: "series_vs_direct_count",
        cases,
        failure,
    });

    // Both counts equal projector ranks on small spaces, both characters.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for space in small_spaces(3) {
        for n in 0..=config.max_n.min(3) {
            cases += 1;
            if failure.is_none() {
                failure = check_invariant_dims(&space, n, config.dim_bound)
                    .unwrap_or_else(|e| Some(e.to_string()));
            }
        }
    }
    reports.push(CheckReport {
        name: "counts_vs_projector_rank",
        cases,
        failure,
    });

    reports
}

fn signature_suite(config: VerifyConfig) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let mut library = single_degree_library();
    library.extend(random_library(50, config.seed));
    let n_max = config.max_n.min(4);

    // Closed form versus brute force, the end-to-end check.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for (idx, phi) in library.iter().enumerate() {
        let series = match phi.hz_series(n_max) {
            Ok(s) => s,
            Err(e) => {
                failure.get_or_insert(format!("pairing #{idx}: {e}"));
                continue;
            }
        };
        let closed = series_int_coeffs(&series);
        for n in 0..=n_max {
            cases += 1;
            if failure.is_some() {
                continue;
            }
            match phi.brute_signature(n, config.dim_bound) {
                Ok(brute) => {
                    if brute != closed[n] {
                        failure = Some(format!(
                            "pairing #{idx} (dims {:?}), n = {n}: closed form {} vs brute {brute}",
                            phi.dims(),
                            closed[n]
                        ));
                    }
                }
                Err(PairingError::BoundExceeded { .. }) => {}
                Err(e) => failure = Some(format!("pairing #{idx}, n = {n}: {e}")),
            }
        }
    }
    reports.push(CheckReport {
        name: "series_vs_brute",
        cases,
        failure,
    });

    // Rank symmetry and integrality of the series exponents.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for (idx, phi) in library.iter().enumerate() {
        cases += 1;
        if failure.is_some() {
            continue;
        }
        let inv = phi.invariants();
        let asym = inv.rho.iter().find(|&(&i, &r)| {
            inv.rho.get(&-i).copied().unwrap_or(0) != r && phi.dim_in(-i) > 0
        });
        if let Some((&i, &r)) = asym {
            failure = Some(format!(
                "pairing #{idx}: rho_{i} = {r} but rho_{} = {}",
                -i,
                inv.rho.get(&-i).copied().unwrap_or(0)
            ));
        } else if (inv.sigma - inv.chi).rem_euclid(2) != 0 {
            failure = Some(format!(
                "pairing #{idx}: sigma = {} and chi = {} differ in parity",
                inv.sigma, inv.chi
            ));
        }
    }
    reports.push(CheckReport {
        name: "invariant_structure",
        cases,
        failure,
    });

    // Dropping mirror-unbalanced indices preserves the signature for
    // pairings with diagonal blocks (the aligned-basis setting).
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    for (idx, phi) in diagonal_library().iter().enumerate() {
        for n in 0..=n_max.min(3) {
            cases += 1;
            if failure.is_some() {
                continue;
            }
            let full = phi.brute_signature(n, config.dim_bound);
            let dropped = phi.brute_signature_mirror_fixed(n, config.dim_bound);
            match (full, dropped) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => {
                    failure = Some(format!(
                        "diagonal pairing #{idx}, n = {n}: full {a} vs dropped {b}"
                    ));
                }
                (Err(PairingError::BoundExceeded { .. }), _)
                | (_, Err(PairingError::BoundExceeded { .. })) => {}
                (Err(e), _) | (_, Err(e)) => failure = Some(format!("pairing #{idx}: {e}")),
            }
        }
    }
    reports.push(CheckReport {
        name: "mirror_dropping_diagonal",
        cases,
        failure,
    });

    // Orthogonal direct sums multiply the series.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
    for _ in 0..25 {
        let a = &library[rng.random_range(0..library.len())];
        let b = &library[rng.random_range(0..library.len())];
        cases += 1;
        if failure.is_some() {
            continue;
        }
        let sum = a.direct_sum(b);
        let lhs = sum.hz_series(n_max);
        let rhs = a
            .hz_series(n_max)
            .and_then(|sa| b.hz_series(n_max).map(|sb| &sa * &sb));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                if l != r {
                    failure = Some(format!(
                        "direct sum of {:?} and {:?}: series {l} vs product {r}",
                        a.dims(),
                        b.dims()
                    ));
                }
            }
            (Err(e), _) | (_, Err(e)) => failure = Some(e.to_string()),
        }
    }
    reports.push(CheckReport {
        name: "direct_sum_multiplicative",
        cases,
        failure,
    });

    // The symmetrizer is self-adjoint for the induced pairing.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(2));
    for _ in 0..10 {
        let phi = &library[rng.random_range(0..library.len())];
        for n in 1..=n_max.min(3) {
            cases += 1;
            if failure.is_some() {
                continue;
            }
            match phi.check_symmetrizer_self_adjoint(n, config.dim_bound) {
                Ok(f) => failure = f,
                Err(PairingError::BoundExceeded { .. }) => {}
                Err(e) => failure = Some(e.to_string()),
            }
        }
    }
    reports.push(CheckReport {
        name: "symmetrizer_self_adjoint",
        cases,
        failure,
    });

    // Multi-index count agrees with the projector rank in degree 0.
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(3));
    for _ in 0..15 {
        let phi = &library[rng.random_range(0..library.len())];
        for n in 0..=n_max.min(3) {
            cases += 1;
            if failure.is_some() {
                continue;
            }
            match check_index_count(phi, n, config.dim_bound) {
                Ok(f) => failure = f,
                Err(PairingError::BoundExceeded { .. }) => {}
                Err(e) => failure = Some(e.to_string()),
            }
        }
    }
    reports.push(CheckReport {
        name: "index_count_vs_rank",
        cases,
        failure,
    });

    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        assert_eq!(Suite::parse("signs"), Some(Suite::Signs));
        assert_eq!(Suite::parse("kunneth"), Some(Suite::Kunneth));
        assert_eq!(Suite::parse("dimensions"), Some(Suite::Dimensions));
        assert_eq!(Suite::parse("prop22"), Some(Suite::Dimensions));
        assert_eq!(Suite::parse("signature"), Some(Suite::Signature));
        assert_eq!(Suite::parse("theorem2"), Some(Suite::Signature));
        assert_eq!(Suite::parse("all"), Some(Suite::All));
        assert_eq!(Suite::parse("bogus"), None);
    }

    #[test]
    fn random_tables_are_deterministic() {
        let a = random_hodge_tables(5, 42, 4);
        let b = random_hodge_tables(5, 42, 4);
        assert_eq!(a, b);
        let c = random_hodge_tables(5, 43, 4);
        assert_ne!(a, c);
    }

    #[test]
    fn small_space_sweep_counts() {
        // Multisets of size 1..3 over 5 degrees: 5 + 15 + 35.
        assert_eq!(small_spaces(3).len(), 55);
    }

    #[test]
    fn report_lines_render() {
        let ok = CheckReport {
            name: "demo",
            cases: 3,
            failure: None,
        };
        assert_eq!(ok.render_line(), "demo cases=3 result=pass");
        let bad = CheckReport {
            name: "demo",
            cases: 3,
            failure: Some("broken".into()),
        };
        assert!(bad.render_line().contains("result=fail"));
        assert!(bad.render_line().contains("broken"));
    }
}
