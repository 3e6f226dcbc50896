//! Exact minimal periods without simulation.
//!
//! For a main-case start `Q = V(A_r) ∈ M_p^+` the chain `Q_p, Q_{p-1} = π(Q_p),
//! ..., Q_0` is built by contraction. The least even vector period `j_0` of
//! the level-0 stream and its sum `ζ_0` come from the cyclic parameters of
//! `Q_0*`; each later level either adds `j` to `ζ` (empty distance vector) or
//! combines the previous level through `ω`. The period of `A` is `ζ_p`.

use alloc::vec::Vec;

use crate::bits::BitString;
use crate::contraction::{contract, distance_vector, DistanceVector};
use crate::error::{Error, Result};
use crate::progression::{least_progression_parameters, omega, LeastProgressionParams, OmegaStep};
use crate::runvec::{cyclic_parameters, extension, RunVector};
use crate::simulator::{orbit_period, weight_trace, RegisterParams, Register};

/// Incremental generator of the shift symmetric vector `C_p^∞(Q)`.
///
/// With `Q = (q_1, ..., q_J, e_0)` and `λ_0 = p + 1`, each step `j` computes
/// `s_{j+1}`, `λ_{j+1}`, `e_{j+1}` from `q_{j+1}` and appends
/// `q_{J+j+1} = e_j + s_{j+1}`.
#[derive(Clone, Debug)]
pub struct ShiftSymmetric {
    p: u64,
    odd_len: usize,
    q: Vec<u64>,
    s: Vec<u64>,
    e: Vec<u64>,
    lambda: Vec<u64>,
}

impl ShiftSymmetric {
    /// Seeds the generator with `Q ∈ M`.
    pub fn new(q: &RunVector, p: usize) -> Self {
        let entries = q.entries();
        let odd_len = q.odd_len();
        ShiftSymmetric {
            p: p as u64,
            odd_len,
            q: entries[..odd_len].to_vec(),
            s: Vec::new(),
            e: alloc::vec![entries[odd_len]],
            lambda: alloc::vec![p as u64 + 1],
        }
    }

    fn advance(&mut self) -> Result<()> {
        let j = self.s.len();
        let qj = self.q[j];
        let lambda = self.lambda[j];
        let (s, next_lambda) = if j % 2 == 0 {
            let s = qj.min(lambda);
            (s, lambda - s)
        } else {
            let s = qj.min(self.p + 1 - lambda);
            (s, lambda + s)
        };
        let produced = self.e[j].checked_add(s).ok_or(Error::ArithmeticOverflow)?;
        self.s.push(s);
        self.lambda.push(next_lambda);
        self.e.push(qj - s);
        self.q.push(produced);
        let bounds_hold = if (j + 1) % 2 == 0 {
            (1..=self.p + 1).contains(&next_lambda)
        } else {
            next_lambda <= self.p
        };
        assert!(bounds_hold, "λ_{} = {next_lambda} out of range", j + 1);
        assert!(s > 0 && produced > 0, "non-positive entry at step {j}");
        Ok(())
    }

    /// Generates until at least `len` entries of `q` exist.
    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.q.len() < len {
            self.advance()?;
        }
        Ok(())
    }

    /// `q_1, q_2, ...` generated so far.
    pub fn q(&self) -> &[u64] {
        &self.q
    }

    /// `s_1, s_2, ...` generated so far.
    pub fn s(&self) -> &[u64] {
        &self.s
    }

    /// `e_0, e_1, ...` generated so far.
    pub fn e(&self) -> &[u64] {
        &self.e
    }

    /// `λ_0, λ_1, ...` generated so far.
    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    /// `J`.
    pub fn odd_len(&self) -> usize {
        self.odd_len
    }
}

/// The first `length` entries of `C_p^∞(Q)`.
pub fn shift_symmetric_prefix(q: &RunVector, p: usize, length: usize) -> Result<Vec<u64>> {
    let mut gen = ShiftSymmetric::new(q, p);
    gen.extend_to(length)?;
    Ok(gen.q()[..length].to_vec())
}

/// The register start `A(Q)` with `k = w(A(Q)) - (p + 1)` and `n = |A(Q)|`,
/// whose stream is `A_p^∞(Q)`. Requires `Q ∈ M_p`.
pub fn shift_symmetric_register(q: &RunVector, p: usize) -> Result<(BitString, RegisterParams)> {
    if !q.in_m_p(p) {
        return Err(Error::NotInM("fewer than p + 1 ones"));
    }
    let a = BitString::from_run_vector(q)?;
    let params = RegisterParams::new(a.weight() - (p + 1), p, a.len())?;
    Ok((a, params))
}

/// `Q_p, Q_{p-1} = π(Q_p), ..., Q_0`, stored by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionChain {
    levels: Vec<RunVector>,
}

impl ReductionChain {
    /// `Q_i`.
    pub fn level(&self, i: usize) -> Option<&RunVector> {
        self.levels.get(i)
    }

    /// `Q_0, Q_1, ..., Q_p` in level order.
    pub fn levels(&self) -> &[RunVector] {
        &self.levels
    }

    /// `p`, the top level.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Contracts `Q ∈ M_p^+` down to level 0.
pub fn reduction_chain(q: &RunVector, p: usize) -> Result<ReductionChain> {
    if !q.in_m_p_plus(p) {
        return Err(Error::NotInMpPlus { p });
    }
    let mut levels = alloc::vec![q.clone()];
    for _ in 0..p {
        let next = contract(levels.last().expect("chain is non-empty"))?;
        levels.push(next);
    }
    levels.reverse();
    Ok(ReductionChain { levels })
}

/// Per-level quantities of the period computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDynamics {
    /// `D(Q_i)` and `α_i`; absent at level 0.
    pub distance: Option<DistanceVector>,
    /// `(m*, α_i*, γ_i*)` when `D(Q_i) ≠ ∅`.
    pub progression: Option<LeastProgressionParams>,
    /// `(x, y)` of `x·α_i* = y·ζ_{i-1}` and the resulting `ω` when `D(Q_i) ≠ ∅`.
    pub solution: Option<OmegaStep>,
    /// `j_i`, the least even vector period of the level-`i` stream.
    pub j: u64,
    /// `ζ_i`, the minimal period of the level-`i` bit stream.
    pub zeta: u64,
}

/// `(j_0, ζ_0), ..., (j_p, ζ_p)` with the intermediate data of every level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicalParams {
    /// Indexed by level.
    pub levels: Vec<LevelDynamics>,
}

impl DynamicalParams {
    /// `j_0, ..., j_p`.
    pub fn j(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.j).collect()
    }

    /// `ζ_0, ..., ζ_p`.
    pub fn zeta(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.zeta).collect()
    }

    /// `ζ_p`.
    pub fn period(&self) -> u64 {
        self.levels.last().expect("at least level 0").zeta
    }

    /// `j_p`.
    pub fn least_even_vector_period(&self) -> u64 {
        self.levels.last().expect("at least level 0").j
    }
}

/// Runs the level recurrence over a reduction chain.
pub fn dynamical_parameters(chain: &ReductionChain) -> Result<DynamicalParams> {
    let base = cyclic_parameters(extension(&chain.levels[0])?.entries())?;
    let mut levels = Vec::with_capacity(chain.levels.len());
    levels.push(LevelDynamics {
        distance: None,
        progression: None,
        solution: None,
        j: base.j,
        zeta: base.zeta,
    });
    for q in &chain.levels[1..] {
        let prev = levels.last().expect("level 0 pushed");
        let (prev_j, prev_zeta) = (prev.j, prev.zeta);
        let dv = distance_vector(q)?;
        let level = if dv.is_empty() {
            LevelDynamics {
                distance: Some(dv),
                progression: None,
                solution: None,
                j: prev_j,
                zeta: prev_zeta.checked_add(prev_j).ok_or(Error::ArithmeticOverflow)?,
            }
        } else {
            let lp = least_progression_parameters(&dv.d, dv.alpha)?;
            let step = omega(lp.alpha_star, lp.gamma_star, prev_j, prev_zeta)?;
            LevelDynamics {
                distance: Some(dv),
                progression: Some(lp),
                solution: Some(step),
                j: step.r,
                zeta: step.zeta,
            }
        };
        levels.push(level);
    }
    Ok(DynamicalParams { levels })
}

/// Chain and dynamics of `Q ∈ M_p^+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// `Q_p, ..., Q_0`.
    pub chain: ReductionChain,
    /// `(j_i, ζ_i)` per level.
    pub dynamics: DynamicalParams,
}

/// Builds the chain and its dynamical parameters in one go.
pub fn reduce(q: &RunVector, p: usize) -> Result<Reduction> {
    let chain = reduction_chain(q, p)?;
    let dynamics = dynamical_parameters(&chain)?;
    Ok(Reduction { chain, dynamics })
}

/// Tightens `(k, p)` to the weights actually visited by the orbit of `A`.
///
/// With `x` and `y` the least and largest `w_i` for `0 <= i <= 2n`, returns
/// `(k + x, y - x - 1)`; the generated sequence is unchanged.
pub fn normalize_parameters(a: &BitString, params: RegisterParams) -> Result<RegisterParams> {
    let weight = a.weight();
    if !params.in_band(weight) {
        return Err(Error::WeightOutOfBand {
            weight,
            low: params.k,
            high: params.k + params.p + 1,
        });
    }
    let trace = weight_trace(a, params, 2 * params.n)?;
    let x = *trace.w.iter().min().expect("trace is non-empty");
    let y = *trace.w.iter().max().expect("trace is non-empty");
    if x == y {
        return Err(Error::ConstantWeight);
    }
    RegisterParams::new(params.k + x as usize, (y - x - 1) as usize, params.n)
}

/// A shift `r` and state `A_r` in the main case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainCaseStart {
    /// `r < 3n`.
    pub shift: usize,
    /// `A_r`: starts with 1, has weight `k + p + 1` and `V(A_r) ∈ M_p^+`.
    pub state: BitString,
}

/// Locates a main-case state on the orbit of `A` for normalized parameters.
///
/// `s` is the first index with `w_s = p + 1`, `t > s` the first later index
/// with `w_t = 0`, and `r` the last index in `[s, t)` with `w_r = p + 1`.
pub fn find_main_case_start(a: &BitString, params: RegisterParams) -> Result<MainCaseStart> {
    let n = params.n;
    let top = params.p as i64 + 1;
    let trace = weight_trace(a, params, 3 * n)?;
    let w = &trace.w;
    let s = w[..=2 * n].iter().position(|&x| x == top).ok_or(Error::NotNormalized)?;
    let t = (s + 1..=3 * n).find(|&i| w[i] == 0).ok_or(Error::NotNormalized)?;
    let r = (s..t).rev().find(|&i| w[i] == top).expect("w_s = p + 1");
    assert!(t <= s + n && r < 3 * n, "start search bounds violated");
    assert!(w[r + 1..t].iter().all(|&x| 0 < x && x < top));

    let mut reg = Register::new(a, params)?;
    for _ in 0..r {
        reg.step();
    }
    let state = reg.state();
    assert_eq!(state.weight(), params.k + params.p + 1);
    assert_eq!(state.bit(1), Some(1));
    assert!(state.run_vector()?.in_m_p_plus(params.p));
    Ok(MainCaseStart { shift: r, state })
}

/// How a [`PeriodReport`] obtained its period.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodMethod {
    /// Main-case reduction.
    Analytic,
    /// The weight is outside `[k, k + p + 1]`, so feedback never fires and
    /// the sequence is a pure rotation of `A`.
    RotationOnly,
    /// The orbit never reached both weight extremes; simulated directly.
    Simulated,
}

/// Intermediate results of the analytic path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticTrace {
    /// `(k*, p*, n)` after normalization.
    pub normalized: RegisterParams,
    /// `r` and `A_r`.
    pub start: MainCaseStart,
    /// `Q_{p*}, ..., Q_0` with `Q_{p*} = V(A_r)`.
    pub chain: ReductionChain,
    /// `(j_i, ζ_i)` per level.
    pub dynamics: DynamicalParams,
}

/// Everything computed for one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    /// `A`.
    pub bits: BitString,
    /// `(k, p, n)` as given.
    pub params: RegisterParams,
    /// Which path produced the period.
    pub method: PeriodMethod,
    /// Present when `method` is [`PeriodMethod::Analytic`].
    pub analytic: Option<AnalyticTrace>,
    /// The minimal period of the generated sequence.
    pub minimal_period: u64,
}

impl PeriodReport {
    /// `j_p` on the analytic path.
    pub fn least_even_vector_period(&self) -> Option<u64> {
        self.analytic.as_ref().map(|t| t.dynamics.least_even_vector_period())
    }
}

/// The exact minimal period of the sequence generated from `A`.
pub fn minimal_period(a: &BitString, params: RegisterParams) -> Result<PeriodReport> {
    if a.len() != params.n {
        return Err(Error::LengthMismatch { expected: params.n, found: a.len() });
    }
    let report = |method, analytic, minimal_period| PeriodReport {
        bits: a.clone(),
        params,
        method,
        analytic,
        minimal_period,
    };
    if !params.in_band(a.weight()) {
        let period = a.minimal_rotation_period() as u64;
        return Ok(report(PeriodMethod::RotationOnly, None, period));
    }
    let normalized = match normalize_parameters(a, params) {
        Ok(normalized) => normalized,
        Err(Error::ConstantWeight) => {
            let period = orbit_period(a, params)?;
            assert!(period <= 2 * params.n as u64);
            return Ok(report(PeriodMethod::Simulated, None, period));
        }
        Err(e) => return Err(e),
    };
    let start = find_main_case_start(a, normalized)?;
    let Reduction { chain, dynamics } = reduce(&start.state.run_vector()?, normalized.p)?;
    let period = dynamics.period();
    let trace = AnalyticTrace { normalized, start, chain, dynamics };
    Ok(report(PeriodMethod::Analytic, Some(trace), period))
}
