//! Direct simulation of the register `θ`.
//!
//! `θ(a_1 ... a_n) = a_2 ... a_{n+1}` where `a_{n+1} = a_1'` when
//! `k <= a_2 + ... + a_n <= k + p` and `a_{n+1} = a_1` otherwise.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitString;
use crate::error::{Error, Result};

/// Default ceiling for [`cycle_structure`].
pub const DEFAULT_CYCLE_LIMIT: usize = 20;

/// `(k, p, n)` with `0 <= k <= k + p < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegisterParams {
    /// Lower end of the feedback band.
    pub k: usize,
    /// Width of the band minus one.
    pub p: usize,
    /// Register length.
    pub n: usize,
}

impl RegisterParams {
    /// Validates `k + p < n`.
    pub fn new(k: usize, p: usize, n: usize) -> Result<Self> {
        match k.checked_add(p) {
            Some(top) if top < n => Ok(RegisterParams { k, p, n }),
            _ => Err(Error::InvalidParams { k, p, n }),
        }
    }

    /// Whether the window weight `a_2 + ... + a_n` triggers complementation.
    pub fn fires(&self, window_weight: usize) -> bool {
        self.k <= window_weight && window_weight <= self.k + self.p
    }

    /// `k <= w <= k + p + 1`, the range in which the weight parameters stay in `[0, p + 1]`.
    pub fn in_band(&self, weight: usize) -> bool {
        self.k <= weight && weight <= self.k + self.p + 1
    }

    fn check_len(&self, a: &BitString) -> Result<()> {
        if a.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.n, found: a.len() })
        }
    }
}

/// A running register holding `A_r = a_{r+1} ... a_{r+n}` in a ring buffer.
#[derive(Clone, Debug)]
pub struct Register {
    params: RegisterParams,
    buf: Vec<u8>,
    head: usize,
    weight: usize,
    shift: u64,
}

impl Register {
    /// Starts at `A_0 = a`.
    pub fn new(a: &BitString, params: RegisterParams) -> Result<Self> {
        params.check_len(a)?;
        Ok(Register {
            params,
            buf: a.as_slice().to_vec(),
            head: 0,
            weight: a.weight(),
            shift: 0,
        })
    }

    /// Applies `θ` once and returns the new symbol `a_{r+n+1}`.
    #[inline]
    pub fn step(&mut self) -> u8 {
        let first = self.buf[self.head];
        let window = self.weight - usize::from(first);
        let next = if self.params.fires(window) { 1 - first } else { first };
        self.buf[self.head] = next;
        self.head += 1;
        if self.head == self.buf.len() {
            self.head = 0;
        }
        self.weight = window + usize::from(next);
        self.shift += 1;
        next
    }

    /// `w(A_r)`.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `w_r = w(A_r) - k`.
    pub fn weight_parameter(&self) -> i64 {
        self.weight as i64 - self.params.k as i64
    }

    /// Number of steps taken so far.
    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// `a_{r+1}`, the symbol about to leave.
    pub fn first(&self) -> u8 {
        self.buf[self.head]
    }

    /// The current state `A_r`.
    pub fn state(&self) -> BitString {
        let mut bits = Vec::with_capacity(self.buf.len());
        bits.extend_from_slice(&self.buf[self.head..]);
        bits.extend_from_slice(&self.buf[..self.head]);
        BitString::from_bits(bits).expect("register state is a valid bit string")
    }
}

/// `θ(A)`.
pub fn step(a: &BitString, params: RegisterParams) -> Result<BitString> {
    let mut reg = Register::new(a, params)?;
    reg.step();
    Ok(reg.state())
}

/// `a_1 ... a_length` of the sequence generated from `A`.
pub fn generate(a: &BitString, params: RegisterParams, length: usize) -> Result<BitString> {
    if length < params.n {
        return Err(Error::LengthMismatch { expected: params.n, found: length });
    }
    let mut reg = Register::new(a, params)?;
    let mut bits = Vec::with_capacity(length);
    bits.extend_from_slice(a.as_slice());
    while bits.len() < length {
        bits.push(reg.step());
    }
    BitString::from_bits(bits)
}

/// Least `r >= 1` with `θ^r(A) = A`, using a budget of `2^n` steps.
pub fn orbit_period(a: &BitString, params: RegisterParams) -> Result<u64> {
    let budget = 1u64.checked_shl(params.n as u32).unwrap_or(u64::MAX);
    orbit_period_with_budget(a, params, budget)
}

/// Like [`orbit_period`] with an explicit cap on the number of steps.
///
/// The generated stream `a_2 a_3 ...` is matched against `A` with a
/// Knuth-Morris-Pratt automaton, so the first occurrence of `A` at offset
/// `r` costs amortized O(1) work per step.
pub fn orbit_period_with_budget(a: &BitString, params: RegisterParams, budget: u64) -> Result<u64> {
    let mut reg = Register::new(a, params)?;
    let pattern = a.as_slice();
    let n = pattern.len();
    let failure = failure_table(pattern);
    let mut matched = 0usize;
    let feed = |symbol: u8, matched: &mut usize| -> bool {
        while *matched > 0 && (*matched == n || pattern[*matched] != symbol) {
            *matched = failure[*matched - 1];
        }
        if pattern[*matched] == symbol {
            *matched += 1;
        }
        *matched == n
    };
    for &symbol in &pattern[1..] {
        feed(symbol, &mut matched);
    }
    while reg.shift() < budget {
        let symbol = reg.step();
        if feed(symbol, &mut matched) {
            return Ok(reg.shift());
        }
    }
    Err(Error::IterationBudgetExceeded(budget))
}

/// `f[i]` is the length of the longest proper border of `pattern[..=i]`.
fn failure_table(pattern: &[u8]) -> Vec<usize> {
    let mut f = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = f[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        f[i] = k;
    }
    f
}

/// Weight parameters `w_r = w(A_r) - k` and `w_r* = p + 1 - w_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTrace {
    /// `w_0, ..., w_length`.
    pub w: Vec<i64>,
    /// `w_0*, ..., w_length*`.
    pub w_mod: Vec<i64>,
    /// Register length, used by [`WeightTrace::b`].
    pub n: usize,
}

impl WeightTrace {
    /// `b_r = w_r + w_{r+n}` when both are in the trace.
    pub fn b(&self, r: usize) -> Option<i64> {
        Some(self.w.get(r)? + self.w.get(r + self.n)?)
    }
}

/// Computes `w_r` for `r = 0..=length` with `w_{r+1} = w_r + a_{r+n+1} - a_{r+1}`.
pub fn weight_trace(a: &BitString, params: RegisterParams, length: usize) -> Result<WeightTrace> {
    let mut reg = Register::new(a, params)?;
    let top = params.p as i64 + 1;
    let mut w = Vec::with_capacity(length + 1);
    w.push(reg.weight_parameter());
    let mut history: Vec<u8> = if cfg!(debug_assertions) { a.as_slice().to_vec() } else { Vec::new() };
    for r in 0..length {
        let before = reg.weight_parameter();
        let leaving = reg.first();
        let entering = reg.step();
        let after = reg.weight_parameter();
        debug_assert_eq!(after, before + i64::from(entering) - i64::from(leaving));
        if (0..=top).contains(&before) {
            debug_assert_eq!(case_table(before, leaving, top), (after, entering));
        }
        if cfg!(debug_assertions) {
            history.push(entering);
            if (r + 1) % 1000 == 0 {
                let window = &history[r + 1..r + 1 + params.n];
                debug_assert_eq!(crate::bits::weight(window), reg.weight());
            }
        }
        w.push(after);
    }
    let w_mod = w.iter().map(|&x| top - x).collect();
    Ok(WeightTrace { w, w_mod, n: params.n })
}

/// The four in-band transitions `(w_r, a_{r+1}) -> (w_{r+1}, a_{r+n+1})`.
fn case_table(w: i64, leaving: u8, top: i64) -> (i64, u8) {
    match (leaving, w) {
        (1, 0) => (0, 1),
        (1, _) => (w - 1, 0),
        (_, w) if w == top => (w, 0),
        _ => (w + 1, 1),
    }
}

/// `θ` on a state packed into the low `n` bits of a word, `a_1` in bit 0.
#[inline]
pub fn step_packed(state: u64, params: RegisterParams) -> u64 {
    let first = state & 1;
    let rest = state >> 1;
    let next = if params.fires(rest.count_ones() as usize) { first ^ 1 } else { first };
    rest | (next << (params.n - 1))
}

/// Cycle-length histogram `(length, number of cycles)` of `θ` on `{0,1}^n`,
/// sorted by length. Limited to `n <= 20`.
pub fn cycle_structure(params: RegisterParams) -> Result<Vec<(u64, u64)>> {
    cycle_structure_with_limit(params, DEFAULT_CYCLE_LIMIT)
}

/// Like [`cycle_structure`] with an explicit ceiling on `n` (at most 40).
pub fn cycle_structure_with_limit(params: RegisterParams, limit: usize) -> Result<Vec<(u64, u64)>> {
    let limit = limit.min(40);
    if params.n > limit {
        return Err(Error::StateSpaceTooLarge { n: params.n, limit });
    }
    let states = 1u64 << params.n;
    let mut visited = vec![0u64; (states as usize).div_ceil(64)];
    let mut histogram: Vec<(u64, u64)> = Vec::new();
    for start in 0..states {
        if visited[(start / 64) as usize] >> (start % 64) & 1 == 1 {
            continue;
        }
        let mut len = 0u64;
        let mut s = start;
        loop {
            visited[(s / 64) as usize] |= 1 << (s % 64);
            s = step_packed(s, params);
            len += 1;
            if s == start {
                break;
            }
        }
        match histogram.binary_search_by_key(&len, |&(l, _)| l) {
            Ok(i) => histogram[i].1 += 1,
            Err(i) => histogram.insert(i, (len, 1)),
        }
    }
    Ok(histogram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn params(k: usize, p: usize, n: usize) -> RegisterParams {
        RegisterParams::new(k, p, n).unwrap()
    }

    /// One step straight from the definition, with no shared state.
    fn step_literal(a: &[u8], pr: RegisterParams) -> Vec<u8> {
        let window: usize = a[1..].iter().map(|&b| b as usize).sum();
        let next = if pr.k <= window && window <= pr.k + pr.p { 1 - a[0] } else { a[0] };
        let mut out = a[1..].to_vec();
        out.push(next);
        out
    }

    /// Period by iterating the literal step and comparing whole states.
    fn period_literal(a: &BitString, pr: RegisterParams) -> u64 {
        let start = a.as_slice().to_vec();
        let mut s = step_literal(&start, pr);
        let mut r = 1;
        while s != start {
            s = step_literal(&s, pr);
            r += 1;
        }
        r
    }

    #[test]
    fn params_validation() {
        assert!(RegisterParams::new(0, 0, 1).is_ok());
        assert!(RegisterParams::new(2, 2, 4).is_err());
        assert!(RegisterParams::new(usize::MAX, 1, 4).is_err());
        assert!(params(3, 2, 14).in_band(6));
        assert!(!params(3, 2, 14).in_band(7));
    }

    #[test]
    fn single_steps() {
        assert_eq!(step(&bs("100000"), params(0, 0, 6)).unwrap(), bs("000000"));
        assert_eq!(step(&bs("111"), params(0, 2, 3)).unwrap(), bs("110"));
        // window weight 3 is above the band [0, 1]
        assert_eq!(step(&bs("1111"), params(0, 1, 4)).unwrap(), bs("1111"));
        assert!(matches!(step(&bs("11"), params(0, 0, 3)), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn generation() {
        assert_eq!(generate(&bs("100000"), params(0, 0, 6), 14).unwrap(), bs("10000001000000"));
        assert_eq!(generate(&bs("110"), params(0, 2, 3), 12).unwrap(), bs("110001110001"));
        assert_eq!(generate(&bs("110"), params(0, 2, 3), 3).unwrap(), bs("110"));
        assert!(generate(&bs("110"), params(0, 2, 3), 2).is_err());
    }

    #[test]
    fn periods() {
        assert_eq!(orbit_period(&bs("100000"), params(0, 0, 6)).unwrap(), 7);
        assert_eq!(orbit_period(&bs("110100001101000"), params(5, 0, 15)).unwrap(), 8);
        assert_eq!(orbit_period(&bs("111000011000"), params(2, 2, 12)).unwrap(), 94);
        assert_eq!(orbit_period(&bs("11100001100001"), params(3, 2, 14)).unwrap(), 982);
        assert_eq!(orbit_period(&bs("110"), params(0, 2, 3)).unwrap(), 6);
        assert_eq!(
            orbit_period_with_budget(&bs("11100001100001"), params(3, 2, 14), 100),
            Err(Error::IterationBudgetExceeded(100))
        );
    }

    #[test]
    fn periods_match_literal_iteration() {
        for n in 1..=9usize {
            for k in 0..n {
                for p in 0..n - k {
                    let pr = params(k, p, n);
                    for s in 0..1u64 << n {
                        let a = BitString::from_packed(s, n).unwrap();
                        assert_eq!(orbit_period(&a, pr).unwrap(), period_literal(&a, pr));
                    }
                }
            }
        }
    }

    #[test]
    fn weight_traces() {
        let t = weight_trace(&bs("110"), params(0, 2, 3), 6).unwrap();
        assert_eq!(t.w, [2, 1, 0, 1, 2, 3, 2]);
        assert_eq!(t.w_mod, [1, 2, 3, 2, 1, 0, 1]);
        assert_eq!(t.b(0), Some(3));
        assert_eq!(t.b(4), None);
        let t = weight_trace(&bs("11100001100001"), params(3, 2, 14), 0).unwrap();
        assert_eq!(t.w, [3]);
        let t = weight_trace(&bs("11100001100001"), params(3, 2, 14), 5000).unwrap();
        assert!(t.w.iter().all(|&w| (0..=3).contains(&w)));
    }

    #[test]
    fn theta_is_bijective() {
        for n in 1..=8usize {
            for k in 0..n {
                for p in 0..n - k {
                    let pr = params(k, p, n);
                    let images: BTreeSet<u64> = (0..1u64 << n).map(|s| step_packed(s, pr)).collect();
                    assert_eq!(images.len(), 1 << n);
                    for s in 0..1u64 << n {
                        let a = BitString::from_packed(s, n).unwrap();
                        let literal = step_literal(a.as_slice(), pr);
                        assert_eq!(step_packed(s, pr), BitString::from_bits(literal).unwrap().to_packed().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_structures() {
        let pr = params(0, 0, 6);
        let h = cycle_structure(pr).unwrap();
        assert_eq!(h.iter().map(|&(l, c)| l * c).sum::<u64>(), 64);
        let seven = orbit_period(&bs("100000"), pr).unwrap();
        assert!(h.iter().any(|&(l, _)| l == seven));
        assert!(matches!(
            cycle_structure(params(0, 0, 21)),
            Err(Error::StateSpaceTooLarge { n: 21, limit: 20 })
        ));
        for n in 1..=10usize {
            for k in 0..n {
                for p in 0..n - k {
                    let h = cycle_structure(params(k, p, n)).unwrap();
                    assert_eq!(h.iter().map(|&(l, c)| l * c).sum::<u64>(), 1 << n);
                }
            }
        }
    }

    /// Main-case inputs: `A` starts with 1, `w(A) = k + p + 1`, `V(A) ∈ M_p^+`.
    fn main_case_inputs(n: usize) -> Vec<(BitString, RegisterParams)> {
        let mut out = Vec::new();
        for k in 0..n {
            for p in 0..n - k {
                for s in 0..1u64 << n {
                    let a = BitString::from_packed(s, n).unwrap();
                    if a.bit(1) != Some(1) || a.weight() != k + p + 1 {
                        continue;
                    }
                    if a.run_vector().unwrap().in_m_p_plus(p) {
                        out.push((a, params(k, p, n)));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn period_boundaries_in_main_case() {
        for n in 2..=9 {
            for (a, pr) in main_case_inputs(n) {
                let r = orbit_period(&a, pr).unwrap() as usize;
                let seq = generate(&a, pr, r + pr.n).unwrap();
                assert_eq!(seq.bit(r), Some(0), "{a} {pr:?}");
                assert_eq!(seq.bit(r + 1), Some(1));
                let ar = BitString::from_bits(seq.as_slice()[r..r + pr.n].to_vec()).unwrap();
                assert_eq!(ar.weight(), pr.k + pr.p + 1);
            }
        }
    }

    fn arb_in_band() -> impl Strategy<Value = (BitString, RegisterParams)> {
        (2usize..24)
            .prop_flat_map(|n| (Just(n), 0..n))
            .prop_flat_map(|(n, k)| (Just(n), Just(k), 0..n - k))
            .prop_flat_map(|(n, k, p)| {
                let ones = k..=(k + p + 1).min(n);
                (Just(params(k, p, n)), ones, any::<u64>())
            })
            .prop_map(|(pr, ones, seed)| {
                let mut bits = vec![0u8; pr.n];
                bits[..ones].fill(1);
                let mut x = seed | 1;
                for i in (1..pr.n).rev() {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    bits.swap(i, (x % (i as u64 + 1)) as usize);
                }
                (BitString::from_bits(bits).unwrap(), pr)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn run_blocks_follow_weight((a, pr) in arb_in_band()) {
            let length = 6 * pr.n;
            let seq = generate(&a, pr, length + pr.n).unwrap();
            let trace = weight_trace(&a, pr, length).unwrap();
            let bits = seq.as_slice();
            let top = pr.p as i64 + 1;
            prop_assert!(trace.w.iter().all(|w| (0..=top).contains(w)));
            for (r, window) in bits.windows(pr.n).enumerate().take(length + 1) {
                prop_assert_eq!(trace.w[r], crate::bits::weight(window) as i64 - pr.k as i64);
            }
            let mut r = 0;
            while r < length {
                let symbol = bits[r];
                let q = (r..length).find(|&j| bits[j] != symbol).unwrap_or(length) - r;
                if r + q > length {
                    break;
                }
                let wr = trace.w[r];
                let out = &bits[r + pr.n..r + pr.n + q];
                if symbol == 1 {
                    let s = (q as i64).min(wr) as usize;
                    prop_assert_eq!(trace.w[r + q], wr - s as i64);
                    prop_assert!(out[..s].iter().all(|&b| b == 0));
                    prop_assert!(out[s..].iter().all(|&b| b == 1));
                } else {
                    let s = (q as i64).min(top - wr) as usize;
                    prop_assert_eq!(trace.w[r + q], wr + s as i64);
                    prop_assert!(out[..s].iter().all(|&b| b == 1));
                    prop_assert!(out[s..].iter().all(|&b| b == 0));
                }
                r += q;
            }
        }
    }
}
