//! Analytic periods checked against simulation over many inputs.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symreg_core::engine::minimal_period;
use symreg_core::simulator::orbit_period;
use symreg_core::{BitString, RegisterParams};

/// An input whose analytic and simulated periods disagree, or that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub bits: String,
    pub k: usize,
    pub p: usize,
    pub analytic: Option<u64>,
    pub simulated: Option<u64>,
}

/// Per-length statistics; `ratio` is the largest period over `n³`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub inputs: u64,
    pub max_period: u64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub inputs: u64,
    pub mismatches: Vec<Mismatch>,
    pub census: Vec<CensusRow>,
}

impl SweepSummary {
    pub fn to_text(&self) -> String {
        let mut out = String::from("n\tinputs\tmax period\tmax period / n^3\n");
        for row in &self.census {
            out.push_str(&format!(
                "{}\t{}\t{}\t{:.4}\n",
                row.n, row.inputs, row.max_period, row.ratio
            ));
        }
        for m in &self.mismatches {
            out.push_str(&format!(
                "MISMATCH A={} k={} p={} analytic={:?} simulated={:?}\n",
                m.bits, m.k, m.p, m.analytic, m.simulated
            ));
        }
        out.push_str(&format!("{} inputs, {} mismatches\n", self.inputs, self.mismatches.len()));
        out
    }
}

struct Outcome {
    n: usize,
    period: u64,
    mismatch: Option<Mismatch>,
}

fn check(a: &BitString, params: RegisterParams) -> Outcome {
    let analytic = minimal_period(a, params).ok().map(|r| r.minimal_period);
    let simulated = orbit_period(a, params).ok();
    let mismatch = (analytic.is_none() || analytic != simulated).then(|| Mismatch {
        bits: a.to_string(),
        k: params.k,
        p: params.p,
        analytic,
        simulated,
    });
    Outcome {
        n: params.n,
        period: analytic.or(simulated).unwrap_or(0),
        mismatch,
    }
}

fn summarize(n_max: usize, outcomes: Vec<Outcome>) -> SweepSummary {
    let mut census: Vec<CensusRow> = (1..=n_max)
        .map(|n| CensusRow { n, inputs: 0, max_period: 0, ratio: 0.0 })
        .collect();
    let mut mismatches = Vec::new();
    for o in &outcomes {
        let row = &mut census[o.n - 1];
        row.inputs += 1;
        row.max_period = row.max_period.max(o.period);
        if let Some(m) = &o.mismatch {
            mismatches.push(m.clone());
        }
    }
    census.retain(|r| r.inputs > 0);
    for row in &mut census {
        row.ratio = row.max_period as f64 / (row.n as f64).powi(3);
    }
    SweepSummary {
        inputs: outcomes.len() as u64,
        mismatches,
        census,
    }
}

/// Every `n <= n_max`, every valid `(k, p)` and every `A` with `k <= w(A) <= k + p + 1`.
pub fn exhaustive(n_max: usize) -> SweepSummary {
    let tasks: Vec<RegisterParams> = (1..=n_max)
        .flat_map(|n| (0..n).flat_map(move |k| (0..n - k).map(move |p| (k, p, n))))
        .map(|(k, p, n)| RegisterParams::new(k, p, n).expect("k + p < n by construction"))
        .collect();
    let outcomes = tasks
        .par_iter()
        .flat_map_iter(|&params| {
            (0..1u64 << params.n).filter_map(move |s| {
                let a = BitString::from_packed(s, params.n).expect("n <= 64");
                params.in_band(a.weight()).then(|| check(&a, params))
            })
        })
        .collect();
    summarize(n_max, outcomes)
}

/// `samples` random in-band inputs for each `n` in `1..=n_max`, reproducible from `seed`.
pub fn sampled(n_max: usize, samples: usize, seed: u64) -> SweepSummary {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut inputs = Vec::with_capacity(n_max * samples);
    for n in 1..=n_max {
        for _ in 0..samples {
            let k = rng.random_range(0..n);
            let p = rng.random_range(0..n - k);
            let params = RegisterParams::new(k, p, n).expect("k + p < n by construction");
            let ones = rng.random_range(k..=(k + p + 1).min(n));
            let mut bits = vec![0u8; n];
            bits[..ones].fill(1);
            for i in (1..n).rev() {
                bits.swap(i, rng.random_range(0..=i));
            }
            inputs.push((BitString::from_bits(bits).expect("non-empty"), params));
        }
    }
    let outcomes = inputs.par_iter().map(|(a, params)| check(a, *params)).collect();
    summarize(n_max, outcomes)
}
