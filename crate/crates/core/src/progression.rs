//! Progression coefficients of distance vectors and the integer equations
//! that combine them into periods.

use alloc::vec::Vec;
use num_integer::Integer;

use crate::error::{Error, Result};

/// `(m*, α*, γ*)`: the maximal progression coefficient and the least
/// progression parameters `α / m*`, `γ / m*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeastProgressionParams {
    /// `m*`.
    pub m_star: u64,
    /// `α*`.
    pub alpha_star: u64,
    /// `γ*`.
    pub gamma_star: u64,
}

/// Whether `m` is a progression coefficient of `d` with respect to `alpha`.
///
/// With `E = (D, D + α)`, `β = α / m` and `r = γ / m`, this checks
/// `e_{r+i} = d_i + β` for `1 <= i <= γ`.
pub fn is_progression_coefficient(d: &[u64], alpha: u64, m: u64) -> Result<bool> {
    let gamma = d.len() as u64;
    let g = alpha.gcd(&gamma);
    if m == 0 || g % m != 0 {
        return Err(Error::NotADivisor { m, gcd: g });
    }
    let beta = alpha / m;
    let r = (gamma / m) as usize;
    let e = |i: usize| -> Option<u64> {
        if i < d.len() {
            Some(d[i])
        } else {
            d[i - d.len()].checked_add(alpha)
        }
    };
    for (i, &di) in d.iter().enumerate() {
        let lhs = e(r + i).ok_or(Error::ArithmeticOverflow)?;
        let rhs = di.checked_add(beta).ok_or(Error::ArithmeticOverflow)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Divisors of `g` in descending order.
fn divisors_descending(g: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= g {
        if g % i == 0 {
            small.push(i);
            if i != g / i {
                large.push(g / i);
            }
        }
        i += 1;
    }
    large.into_iter().chain(small.into_iter().rev()).collect()
}

/// Tests the divisors of `gcd(α, γ)` from largest to smallest and returns
/// the first progression coefficient found.
pub fn least_progression_parameters(d: &[u64], alpha: u64) -> Result<LeastProgressionParams> {
    if d.is_empty() {
        return Err(Error::EmptyDistanceVector);
    }
    if alpha == 0 {
        return Err(Error::ZeroArgument("alpha"));
    }
    let gamma = d.len() as u64;
    for m in divisors_descending(alpha.gcd(&gamma)) {
        if is_progression_coefficient(d, alpha, m)? {
            return Ok(LeastProgressionParams {
                m_star: m,
                alpha_star: alpha / m,
                gamma_star: gamma / m,
            });
        }
    }
    unreachable!("m = 1 is always a progression coefficient")
}

/// The least positive `(x, y)` with `x·α = y·β`: `x = β / g`, `y = α / g`.
pub fn least_positive_solution(alpha: u64, beta: u64) -> Result<(u64, u64)> {
    if alpha == 0 {
        return Err(Error::ZeroArgument("alpha"));
    }
    if beta == 0 {
        return Err(Error::ZeroArgument("beta"));
    }
    let g = alpha.gcd(&beta);
    Ok((beta / g, alpha / g))
}

/// Result of `ω(α*, γ*, j*, ζ*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaStep {
    /// Least positive solution of `x·α* = y·ζ*`.
    pub x: u64,
    /// See `x`.
    pub y: u64,
    /// `r = 2xγ* + yj*`.
    pub r: u64,
    /// `ζ = yζ* + r`.
    pub zeta: u64,
}

/// `ω(α*, γ*, j*, ζ*) = (2xγ* + yj*, yζ* + 2xγ* + yj*)`.
pub fn omega(alpha_star: u64, gamma_star: u64, j_star: u64, zeta_star: u64) -> Result<OmegaStep> {
    if gamma_star == 0 {
        return Err(Error::ZeroArgument("gamma_star"));
    }
    if j_star == 0 {
        return Err(Error::ZeroArgument("j_star"));
    }
    let (x, y) = least_positive_solution(alpha_star, zeta_star)?;
    let overflow = || Error::ArithmeticOverflow;
    let r = 2u64
        .checked_mul(x)
        .and_then(|v| v.checked_mul(gamma_star))
        .and_then(|v| y.checked_mul(j_star).and_then(|w| v.checked_add(w)))
        .ok_or_else(overflow)?;
    let zeta = y
        .checked_mul(zeta_star)
        .and_then(|v| v.checked_add(r))
        .ok_or_else(overflow)?;
    Ok(OmegaStep { x, y, r, zeta })
}
