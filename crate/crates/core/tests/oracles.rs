mod common;

use aomt_contract::baselines::{complete_info_contract, social_welfare_contract};
use aomt_contract::contract::{
    bunching_and_ironing, check_feasibility, design_contract, grid_search_bandwidth,
    optimal_rewards, per_type_objective, GridSpec, ObjectiveTable,
};
use aomt_contract::economics::{e_coefficients, msp_expected_utility, TypeSpectrum};
use aomt_contract::experiments::{parse_scenario, run_feasibility_matrix};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn per_type_objective_matches_recomputation() {
    let sc = reference_params(100.0 * MB);
    let s = default_spectrum();
    for n in 0..4 {
        for b in [7e5, 1e6, 1.6e6, 3e6, 1e7] {
            let got = per_type_objective(b, n, &s, &sc).unwrap();
            let want = oracle_objective(b, n, &s, &sc);
            assert!(close(got, want, 1e-12), "type {n} b {b}: {got} vs {want}");
        }
    }
}

#[test]
fn grid_search_matches_exhaustive_scan() {
    let s = default_spectrum();
    let grid = GridSpec::default();
    let points = oracle_grid(&grid);
    assert_eq!(points.len(), grid.len());
    let fine = GridSpec::new(grid.b_min, grid.b_max, grid.step / 2.0).unwrap();
    for d in default_sweep() {
        let sc = reference_params(d);
        let got = grid_search_bandwidth(&grid, &s, &sc).unwrap();
        let halved = grid_search_bandwidth(&fine, &s, &sc).unwrap();
        for n in 0..4 {
            let want = points[argmax(&points, |b| oracle_objective(b, n, &s, &sc))];
            assert_eq!(got[n], want, "D {d} type {n}");
            assert!(
                (halved[n] - got[n]).abs() <= grid.step,
                "argmax moved under refinement"
            );
        }
    }
}

#[test]
fn two_type_design_matches_brute_force() {
    let grid = GridSpec::new(6e5, 2.6e6, 4e4).unwrap();
    let points = oracle_grid(&grid);
    assert_eq!(points.len(), 50);
    for (thetas, qs) in [
        (vec![1e10, 3e10], vec![0.5, 0.5]),
        (vec![2e10, 2.1e10], vec![0.2, 0.8]),
        (vec![1e10, 4e10], vec![0.9, 0.1]),
    ] {
        let s = TypeSpectrum::from_parts(&thetas, &qs, 10).unwrap();
        for d in [100.0 * MB, 150.0 * MB, 200.0 * MB] {
            let sc = reference_params(d);
            let design = design_contract(&grid, &s, &sc).unwrap();
            let (best_b, best_u) = brute_force_design(&points, &s, &sc).unwrap();
            assert!(
                close(design.msp_utility, best_u, 1e-9),
                "{} vs {best_u}",
                design.msp_utility
            );
            for (a, b) in design.contract.bandwidths().iter().zip(&best_b) {
                assert!((a - b).abs() <= grid.step);
            }
        }
    }
}

#[test]
fn expected_utility_matches_resummation() {
    let s = default_spectrum();
    let (thetas, qs, m) = parts(&s);
    for d in default_sweep() {
        let sc = reference_params(d);
        let design = design_contract(&GridSpec::default(), &s, &sc).unwrap();
        let b = design.contract.bandwidths();
        let r = design.contract.rewards();
        let oracle = oracle_msp_utility(&b, &r, &qs, m, &sc).unwrap();
        assert!(close(design.msp_utility, oracle, 1e-12));
        let oracle_r = oracle_rewards(&b, &thetas);
        for (x, y) in r.iter().zip(&oracle_r) {
            assert!(close(*x, *y, 1e-12));
        }
        let direct = msp_expected_utility(&design.contract, &s, &sc).unwrap();
        assert_eq!(direct, design.msp_utility);
    }
}

#[test]
fn e_coefficients_match_direct_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let mut thetas: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..10.0)).collect();
        thetas.sort_by(f64::total_cmp);
        let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let qs: Vec<f64> = raw.iter().map(|q| q / total).collect();
        let Ok(s) = TypeSpectrum::from_parts(&thetas, &qs, 1) else {
            continue;
        };
        let got = e_coefficients(&s);
        for (a, b) in got.iter().zip(oracle_e(&thetas, &qs)) {
            assert!(close(*a, b, 1e-12));
            assert!(*a > 0.0);
        }
    }
}

#[test]
fn two_type_e_via_substitution() {
    // With theta = (1, 2), Q = (1/2, 1/2): sum Q_n R_n = e_1 b_1^2 + e_2 b_2^2
    // for every monotone b; picking b = (1, 0) is not monotone, so use (1, 1)
    // and (0, 1) to solve for e.
    let s = TypeSpectrum::uniform(&[1.0, 2.0], 1).unwrap();
    let r_11 = optimal_rewards(&[1.0, 1.0], &s).unwrap();
    let r_01 = optimal_rewards(&[0.0, 1.0], &s).unwrap();
    let e2 = 0.5 * r_01[0] + 0.5 * r_01[1];
    let e1 = 0.5 * r_11[0] + 0.5 * r_11[1] - e2;
    assert!((e1 - 0.75).abs() < 1e-15 && (e2 - 0.25).abs() < 1e-15);
    assert_eq!(e_coefficients(&s), vec![e1, e2]);
}

#[test]
fn ironing_small_cases_match_enumeration() {
    let sc = reference_params(100.0 * MB);
    let grid = GridSpec::new(6e5, 2.1e6, 5e4).unwrap();
    let points = oracle_grid(&grid);
    assert_eq!(points.len(), 30);
    let s = TypeSpectrum::uniform(&[1e10, 2e10, 3e10], 10).unwrap();
    let table = ObjectiveTable::information_rent(&grid, &s, &sc).unwrap();
    let own = points[argmax(&points, |b| oracle_objective(b, 0, &s, &sc))];
    let raw = [own, 2.0e6, 1.2e6];
    let out = bunching_and_ironing(&raw, &s, &sc, &grid).unwrap();
    assert_eq!(out[0], own);
    assert_eq!(out[1], out[2]);
    let obj = |b: f64, n: usize| oracle_objective(b, n, &s, &sc);
    let (_, family_best) = bunching_family_best(&raw, &points, &obj);
    let got = table.total(&out).unwrap();
    assert!(close(got, family_best, 1e-9));
}

#[test]
fn feasibility_matrix_entries_match_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let mut thetas: Vec<f64> = (0..3).map(|_| rng.gen_range(0.5e10..5e10)).collect();
        thetas.sort_by(f64::total_cmp);
        let text = format!(
            r#"
[channel]
transmit_power_dbm = 23.0
noise_density_dbm_hz = -174.0
path_loss_exponent = 2.0
distance_m = 500.0
[task]
data_bits = 1.2e9
fixed_time_s = 5.0
max_aomt_s = 50.0
[economics]
beta = 200.0
population = 10
theta = [{}, {}, {}]
"#,
            thetas[0], thetas[1], thetas[2]
        );
        let scenario = parse_scenario(&text).unwrap();
        let m = run_feasibility_matrix(&scenario).unwrap();
        let items = &m.design.contract.items;
        for (n, row) in m.utilities().iter().enumerate() {
            for (j, u) in row.iter().enumerate() {
                let b = items[j].bandwidth_hz;
                let direct = items[j].reward - b * b / thetas[n];
                assert!(close(*u, direct, 1e-12));
            }
        }
        assert!(m.ir_holds() && m.ic_holds() && m.own_utilities_nondecreasing());
    }
}

#[test]
fn single_type_baselines_coincide() {
    let s = TypeSpectrum::uniform(&[2e10], 10).unwrap();
    let grid = GridSpec::default();
    let points = oracle_grid(&grid);
    for d in [100.0 * MB, 200.0 * MB] {
        let sc = reference_params(d);
        let complete = complete_info_contract(&grid, &s, &sc).unwrap();
        let social = social_welfare_contract(&grid, &s, &sc).unwrap();
        let want = points[argmax(&points, |b| {
            oracle_satisfaction(b, &sc).map_or(f64::NEG_INFINITY, |v| v - b * b / 2e10)
        })];
        assert_eq!(complete.contract.bandwidths(), vec![want]);
        assert_eq!(social.contract, complete.contract);
        assert_eq!(social.mrp_utilities, vec![0.0]);
    }
}

#[test]
fn random_monotone_rewards_agree_with_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let mut thetas: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..10.0)).collect();
        thetas.sort_by(f64::total_cmp);
        let mut b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..10.0)).collect();
        b.sort_by(f64::total_cmp);
        let s = TypeSpectrum::uniform(&thetas, 1).unwrap();
        let r = optimal_rewards(&b, &s).unwrap();
        for (x, y) in r.iter().zip(oracle_rewards(&b, &thetas)) {
            assert!(close(*x, y, 1e-12));
        }
        let c = aomt_contract::economics::Contract::from_parts(&b, &r).unwrap();
        assert!(check_feasibility(&c, &s).unwrap().is_feasible());
    }
}
