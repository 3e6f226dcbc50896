//! Proper odd components, the contraction `π`, and the distance vector `D`.
//!
//! An odd component is a block `(g_1, ..., g_{2t+1})` whose even positions
//! are all `1`. It is proper when it ends the vector, is followed by exactly
//! one coordinate, or is followed by a coordinate `> 1`. Every `V ∈ M*` splits
//! uniquely into proper odd components `G_1, ..., G_{I+1}`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::runvec::{delta, tau_table, write_tuple, RunVector};

fn require_m_star(v: &RunVector) -> Result<()> {
    if v.in_m_star() {
        Ok(())
    } else {
        Err(Error::NotInMStar)
    }
}

/// `next(r) = r + 2t + 1` with `t` maximal such that `v_{r+2i} = 1` for
/// `1 <= i <= t` and `r + 2t <= J`.
pub fn next_index(v: &RunVector, r: usize) -> Result<usize> {
    let j = v.odd_len();
    if r > j {
        return Err(Error::IndexOutOfRange { index: r, max: j });
    }
    let e = v.entries();
    let mut t = 0;
    while r + 2 * (t + 1) <= j && e[r + 2 * (t + 1) - 1] == 1 {
        t += 1;
    }
    Ok(r + 2 * t + 1)
}

/// The component decomposition `(G_1, ..., G_{I+1})` of some `V ∈ M*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// `r_0 = 0 < r_1 < ... < r_{I+1} = J + 1`.
    pub r_indexes: Vec<usize>,
    /// `G_{m+1} = (v_{r_m + 1}, ..., v_{r_{m+1}})`.
    pub components: Vec<Vec<u64>>,
}

impl ComponentDecomposition {
    /// Zero-based index ranges of the components within the entry slice.
    pub fn ranges(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        self.r_indexes.windows(2).map(|w| w[0]..w[1])
    }

    /// `I + 1`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Always false; a decomposition has at least one component.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for ComponentDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_tuple(f, g)?;
        }
        f.write_str(")")
    }
}

/// Splits `V ∈ M*` into proper odd components following the r-indexes.
pub fn component_decomposition(v: &RunVector) -> Result<ComponentDecomposition> {
    require_m_star(v)?;
    let end = v.odd_len() + 1;
    let mut r_indexes = alloc::vec![0];
    let mut r = 0;
    while r < end {
        r = next_index(v, r)?;
        r_indexes.push(r);
    }
    let components = r_indexes
        .windows(2)
        .map(|w| v.entries()[w[0]..w[1]].to_vec())
        .collect();
    Ok(ComponentDecomposition { r_indexes, components })
}

fn to_entry(x: i64) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::NotInM("contraction produced a negative entry"))
}

/// `π(V) = (δ(G_1), ..., δ(G_I), δ(G_{I+1}) + 1)`.
pub fn contract(v: &RunVector) -> Result<RunVector> {
    let dec = component_decomposition(v)?;
    let last = dec.components.len() - 1;
    let entries = dec
        .components
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let d = delta(g)?;
            to_entry(if i == last { d + 1 } else { d })
        })
        .collect::<Result<Vec<_>>>()?;
    RunVector::new(entries)
}

/// `π(V)` through the distance function: `τ(r_{j+1}) - τ(r_j)`, and
/// `α - τ(r_I)` for the last entry.
pub fn contract_by_r_indexes(v: &RunVector) -> Result<RunVector> {
    let dec = component_decomposition(v)?;
    let tau = tau_table(v)?;
    let r = &dec.r_indexes;
    let alpha = tau[v.odd_len() + 1] + 1;
    let i_max = r.len() - 2;
    let mut entries = Vec::with_capacity(i_max + 1);
    for j in 0..i_max {
        entries.push(to_entry(tau[r[j + 1]] - tau[r[j]])?);
    }
    entries.push(to_entry(alpha - tau[r[i_max]])?);
    RunVector::new(entries)
}

/// `D(V) = (τ(c_1), ..., τ(c_γ))` together with `α = δ(V) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceVector {
    /// `d_1 <= ... <= d_γ`; empty when no interior odd-length entry equals one.
    pub d: Vec<u64>,
    /// `δ(V) + 1`.
    pub alpha: u64,
    /// Positive c-indexes `c_1 < ... < c_γ` (1-indexed).
    pub c_indexes: Vec<usize>,
}

impl DistanceVector {
    /// `D(V) = ∅`.
    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// `γ = #D(V)`.
    pub fn gamma(&self) -> usize {
        self.d.len()
    }
}

/// The c-indexes and distance vector of `V ∈ M*`.
///
/// `c_{i+1}` is the least index `> c_i + 1` carrying a `1`, so a `1` right
/// after a c-index is skipped.
pub fn distance_vector(v: &RunVector) -> Result<DistanceVector> {
    require_m_star(v)?;
    let tau = tau_table(v)?;
    let j = v.odd_len();
    let alpha = u64::try_from(tau[j + 1] + 1).map_err(|_| Error::ArithmeticOverflow)?;
    let e = v.entries();
    let mut c_indexes = Vec::new();
    if e[1..j].contains(&1) {
        let mut c = 0usize;
        let mut i = 2;
        while i <= j {
            if i > c + 1 && e[i - 1] == 1 {
                c = i;
                c_indexes.push(c);
            }
            i += 1;
        }
    }
    let d = c_indexes
        .iter()
        .map(|&c| u64::try_from(tau[c]).map_err(|_| Error::ArithmeticOverflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(DistanceVector { d, alpha, c_indexes })
}
