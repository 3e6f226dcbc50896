//! Run vectors and the elementary calculus on them.
//!
//! A run vector `V = (v_1, ..., v_J, v_{J+1})` has odd `J`, `v_i >= 1` for
//! `i <= J` and `v_{J+1} >= 0`; it lists the alternating run lengths of a
//! string that starts with a run of ones. The set of all run vectors is `M`;
//! `M*` adds `v_1 > 1`; `M_p` asks for at least `p + 1` ones in total; and
//! `M_p^+` asks for an admissible start vector (see [`admissible_start`]).

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// An element of `M`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RunVector(Vec<u64>);

impl RunVector {
    /// Validates the constraints of `M`.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::NotInM("needs at least two entries"));
        }
        if entries.len() % 2 == 1 {
            return Err(Error::NotInM("length must be even"));
        }
        if entries[..entries.len() - 1].contains(&0) {
            return Err(Error::NotInM("only the last entry may be zero"));
        }
        Ok(RunVector(entries))
    }

    /// `(v_1, ..., v_{J+1})`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Consumes the vector and returns its entries.
    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    /// `J`, the odd index of the last run of ones.
    pub fn odd_len(&self) -> usize {
        self.0.len() - 1
    }

    /// `v_i` for 1-indexed `i`.
    pub fn get(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// Sum of all entries (the length of `A(V)`).
    pub fn sum(&self) -> Result<u64> {
        checked_sum(&self.0)
    }

    /// `v_1 > 1`.
    pub fn in_m_star(&self) -> bool {
        self.0[0] > 1
    }

    /// `v_1 + v_3 + ... + v_J >= p + 1`, i.e. `A(V)` has at least `p + 1` ones.
    pub fn in_m_p(&self, p: usize) -> bool {
        let ones: u128 = self.0.iter().step_by(2).map(|&v| u128::from(v)).sum();
        ones > p as u128
    }

    /// Whether `p` is an admissible value for this vector.
    pub fn in_m_p_plus(&self, p: usize) -> bool {
        admissible_start(self, p).is_some()
    }
}

impl fmt::Display for RunVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for RunVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RunVector{self}")
    }
}

impl FromStr for RunVector {
    type Err = Error;

    /// Accepts `"(a,b,c,d)"` and bare `"a,b,c,d"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        RunVector::new(parse_tuple(s)?)
    }
}

/// Writes `(a,b,c)`.
pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Parses a comma-separated list of unsigned integers, optionally parenthesized.
pub fn parse_tuple(s: &str) -> Result<Vec<u64>> {
    let trimmed = s.trim();
    let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(Error::Parse("unbalanced parentheses")),
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse("entries must be non-negative integers"))
        })
        .collect()
}

pub(crate) fn checked_sum(xs: &[u64]) -> Result<u64> {
    xs.iter()
        .try_fold(0u64, |acc, &x| acc.checked_add(x))
        .ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::ArithmeticOverflow)
}

/// The distance measure `δ(V) = sum(V) - #V`; `δ(∅) = 0`.
pub fn delta(v: &[u64]) -> Result<i64> {
    let sum = to_i64(checked_sum(v)?)?;
    let len = i64::try_from(v.len()).map_err(|_| Error::ArithmeticOverflow)?;
    sum.checked_sub(len).ok_or(Error::ArithmeticOverflow)
}

/// The distance function: `τ(0) = 0`, `τ(r) = δ(v_1, ..., v_r)` for `1 <= r <= J + 1`.
pub fn tau(v: &RunVector, r: usize) -> Result<i64> {
    let max = v.0.len();
    if r > max {
        return Err(Error::IndexOutOfRange { index: r, max });
    }
    delta(&v.0[..r])
}

/// All values `τ(0), ..., τ(J + 1)`.
pub fn tau_table(v: &RunVector) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(v.0.len() + 1);
    let mut acc = 0i64;
    out.push(acc);
    for &x in &v.0 {
        acc = acc
            .checked_add(to_i64(x)? - 1)
            .ok_or(Error::ArithmeticOverflow)?;
        out.push(acc);
    }
    Ok(out)
}

/// The extension `V*`: the last entry incremented by one.
pub fn extension(v: &RunVector) -> Result<RunVector> {
    let mut entries = v.0.clone();
    let last = entries.last_mut().expect("run vectors are non-empty");
    *last = last.checked_add(1).ok_or(Error::ArithmeticOverflow)?;
    Ok(RunVector(entries))
}

/// Signed prefix sums `ρ_0 = 0`, `ρ_{i+1} = ρ_i ± v_{i+1}` (plus for even `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingParams(Vec<i64>);

impl AlternatingParams {
    /// `ρ_0, ..., ρ_{J+1}`.
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `ρ_i`.
    pub fn get(&self, i: usize) -> Option<i64> {
        self.0.get(i).copied()
    }
}

/// Computes `ρ_0, ..., ρ_{J+1}`.
pub fn alternating_params(v: &RunVector) -> Result<AlternatingParams> {
    let mut rho = Vec::with_capacity(v.0.len() + 1);
    let mut acc = 0i64;
    rho.push(acc);
    for (i, &x) in v.0.iter().enumerate() {
        let x = to_i64(x)?;
        acc = if i % 2 == 0 { acc.checked_add(x) } else { acc.checked_sub(x) }
            .ok_or(Error::ArithmeticOverflow)?;
        rho.push(acc);
    }
    Ok(AlternatingParams(rho))
}

/// Least odd `t <= J` with `ρ_i > 0` for `1 <= i <= t` and `ρ_t >= p + 1`.
///
/// `(v_1, ..., v_t)` is then an admissible start vector and `V ∈ M_p^+`.
/// Returns `None` when `p` is not admissible.
pub fn admissible_start(v: &RunVector, p: usize) -> Option<usize> {
    let target = i128::from(p as u64) + 1;
    let mut rho: i128 = 0;
    for (i, &x) in v.0[..v.odd_len()].iter().enumerate() {
        let t = i + 1;
        rho += if i % 2 == 0 { i128::from(x) } else { -i128::from(x) };
        if rho <= 0 {
            return None;
        }
        if t % 2 == 1 && rho >= target {
            return Some(t);
        }
    }
    None
}

/// Cyclic parameters of an even-length vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicParams {
    /// Least even `j > 0` with `ψ^j(V) = V`, where `ψ` rotates left by one.
    pub j: u64,
    /// `v_1 + ... + v_j`.
    pub zeta: u64,
}

/// Least even rotation fixing `v`, and the sum of the first `j` entries.
pub fn cyclic_parameters(v: &[u64]) -> Result<CyclicParams> {
    let r = v.len();
    if r == 0 || r % 2 == 1 {
        return Err(Error::OddLength(r));
    }
    let j = (2..=r)
        .step_by(2)
        .filter(|j| r % j == 0)
        .find(|&j| (0..r).all(|i| v[i] == v[(i + j) % r]))
        .expect("j = r always fixes the vector");
    let zeta = checked_sum(&v[..j])?;
    Ok(CyclicParams { j: j as u64, zeta })
}
