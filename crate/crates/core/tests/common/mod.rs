//! Independent reference computations. Nothing here calls into the solver;
//! only crate constructors and plain accessors are used.
#![allow(dead_code)]

use aomt_contract::channel::{ChannelParams, MigrationTask};
use aomt_contract::contract::GridSpec;
use aomt_contract::economics::{ScenarioParams, TypeSpectrum};

pub const MB: f64 = 8.0e6;

pub fn reference_channel() -> ChannelParams {
    ChannelParams {
        transmit_power_dbm: 23.0,
        unit_gain: 1.0,
        distance_m: 500.0,
        path_loss_exponent: 2.0,
        noise_density_dbm_hz: -174.0,
    }
}

pub fn reference_params(data_bits: f64) -> ScenarioParams {
    ScenarioParams::new(
        MigrationTask::new(data_bits, 5.0, 50.0).unwrap(),
        reference_channel().to_link().unwrap(),
        200.0,
    )
    .unwrap()
}

/// The default four-type spectrum: theta_n = 1e10 n, uniform, M = 10.
pub fn default_spectrum() -> TypeSpectrum {
    TypeSpectrum::uniform(&[1e10, 2e10, 3e10, 4e10], 10).unwrap()
}

pub fn default_sweep() -> Vec<f64> {
    (0..6).map(|k| 100.0 * MB + 20.0 * MB * k as f64).collect()
}

/// `beta ln(K - D / rate + 1 - T)` computed from scratch; `None` past the tolerance.
pub fn oracle_satisfaction(b: f64, sc: &ScenarioParams) -> Option<f64> {
    let link = &sc.link;
    let snr = link.transmit_power_w() * link.gain() / (link.noise_density_w_hz() * b);
    let rate = b * (1.0 + snr).ln() / std::f64::consts::LN_2;
    let age = sc.task.data_bits / rate + sc.task.fixed_time_s;
    if age > sc.task.max_aomt_s {
        None
    } else {
        Some(sc.beta * (sc.task.max_aomt_s - age + 1.0).ln())
    }
}

/// Rewards in closed form: `b_1^2/theta_1 + sum_{i=2}^n (b_i^2 - b_{i-1}^2)/theta_i`.
pub fn oracle_rewards(b: &[f64], thetas: &[f64]) -> Vec<f64> {
    (0..b.len())
        .map(|n| {
            let mut r = b[0] * b[0] / thetas[0];
            for i in 1..=n {
                r += (b[i] * b[i] - b[i - 1] * b[i - 1]) / thetas[i];
            }
            r
        })
        .collect()
}

/// Virtual cost coefficients by direct summation over the tail.
pub fn oracle_e(thetas: &[f64], qs: &[f64]) -> Vec<f64> {
    let n = thetas.len();
    (0..n)
        .map(|i| {
            if i + 1 == n {
                qs[i] / thetas[i]
            } else {
                let tail: f64 = qs[i + 1..].iter().sum();
                qs[i] / thetas[i] + (1.0 / thetas[i] - 1.0 / thetas[i + 1]) * tail
            }
        })
        .collect()
}

/// `sum M Q (S - R)`; `None` if any bandwidth is inadmissible.
pub fn oracle_msp_utility(
    b: &[f64],
    r: &[f64],
    qs: &[f64],
    m: f64,
    sc: &ScenarioParams,
) -> Option<f64> {
    let mut total = 0.0;
    for i in 0..b.len() {
        total += m * qs[i] * (oracle_satisfaction(b[i], sc)? - r[i]);
    }
    Some(total)
}

pub fn parts(spectrum: &TypeSpectrum) -> (Vec<f64>, Vec<f64>, f64) {
    (
        spectrum.thetas().collect(),
        spectrum.probabilities().collect(),
        f64::from(spectrum.population()),
    )
}

/// Grid points from the loop `while b < b_max`.
pub fn oracle_grid(grid: &GridSpec) -> Vec<f64> {
    let mut out = Vec::new();
    let mut z = 0usize;
    loop {
        let b = grid.b_min + grid.step * z as f64;
        if b >= grid.b_max - 1e-9 * grid.step {
            break;
        }
        out.push(b);
        z += 1;
    }
    out
}

/// Every non-decreasing length-`n` vector of grid indices.
pub fn monotone_index_vectors(points: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(
        start: usize,
        points: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..points {
            cur.push(k);
            rec(k, points, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, points, n, &mut Vec::new(), &mut out);
    out
}

/// Best MSP utility over all monotone grid vectors with closed-form rewards.
pub fn brute_force_design(
    grid: &[f64],
    spectrum: &TypeSpectrum,
    sc: &ScenarioParams,
) -> Option<(Vec<f64>, f64)> {
    let (thetas, qs, m) = parts(spectrum);
    let mut best: Option<(Vec<f64>, f64)> = None;
    for idx in monotone_index_vectors(grid.len(), thetas.len()) {
        let b: Vec<f64> = idx.iter().map(|&k| grid[k]).collect();
        let r = oracle_rewards(&b, &thetas);
        if let Some(u) = oracle_msp_utility(&b, &r, &qs, m, sc) {
            if best.as_ref().is_none_or(|(_, bu)| u > *bu) {
                best = Some((b, u));
            }
        }
    }
    best
}

/// Per-type objective `M (Q_n S - e_n b^2)` from the oracle pieces.
pub fn oracle_objective(b: f64, n: usize, spectrum: &TypeSpectrum, sc: &ScenarioParams) -> f64 {
    let (thetas, qs, m) = parts(spectrum);
    let e = oracle_e(&thetas, &qs);
    match oracle_satisfaction(b, sc) {
        Some(s) => m * (qs[n] * s - e[n] * b * b),
        None => f64::NEG_INFINITY,
    }
}

/// Grid argmax of a function, ties to the smaller index.
pub fn argmax(grid: &[f64], f: impl Fn(f64) -> f64) -> usize {
    let mut best = 0;
    let mut best_v = f64::NEG_INFINITY;
    for (k, &b) in grid.iter().enumerate() {
        let v = f(b);
        if v > best_v {
            best = k;
            best_v = v;
        }
    }
    best
}

/// Best summed objective over the bunching family: every partition of the
/// types into contiguous groups, each group placed at the grid argmax of its
/// summed objective (singletons keep their raw value), kept only if the
/// resulting vector is monotone.
pub fn bunching_family_best(
    raw: &[f64],
    grid: &[f64],
    objective: &dyn Fn(f64, usize) -> f64,
) -> (Vec<f64>, f64) {
    let n = raw.len();
    let mut best: Option<(Vec<f64>, f64)> = None;
    for mask in 0u32..(1 << (n - 1)) {
        // Bit i set means a cut between types i and i+1.
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 0..n {
            if i == n - 1 || mask & (1 << i) != 0 {
                groups.push((start, i));
                start = i + 1;
            }
        }
        let mut b = vec![0.0; n];
        for &(lo, hi) in &groups {
            let v = if lo == hi {
                raw[lo]
            } else {
                grid[argmax(grid, |x| (lo..=hi).map(|t| objective(x, t)).sum())]
            };
            b[lo..=hi].iter_mut().for_each(|x| *x = v);
        }
        if b.windows(2).any(|w| w[1] < w[0]) {
            continue;
        }
        let total: f64 = (0..n).map(|t| objective(b[t], t)).sum();
        if best.as_ref().is_none_or(|(_, bt)| total > *bt) {
            best = Some((b, total));
        }
    }
    best.expect("the single full bunch is always monotone")
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
