//! Finite binary strings and their run-length representation.
//!
//! A [`BitString`] is the register state `a_1 ... a_n`. Its text form is an
//! ASCII word over `{'0', '1'}` with `a_1` first.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::runvec::RunVector;

/// A non-empty word over `{0, 1}`.
///
/// Symbols are stored one per byte; every byte is `0` or `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    /// Builds a string from symbols, rejecting empty input and values other than 0/1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyBitString);
        }
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidBit {
                position: pos + 1,
                found: char::from(b'0'.wrapping_add(bits[pos])),
            });
        }
        Ok(BitString(bits))
    }

    /// `1_len`, the all-ones word.
    pub fn ones(len: usize) -> Result<Self> {
        Self::from_bits(alloc::vec![1; len])
    }

    /// `0_len`, the all-zeros word.
    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(alloc::vec![0; len])
    }

    /// Decodes the low `len` bits of `state`, bit 0 becoming `a_1`.
    pub fn from_packed(state: u64, len: usize) -> Result<Self> {
        if len > 64 {
            return Err(Error::IndexOutOfRange { index: len, max: 64 });
        }
        Self::from_bits((0..len).map(|i| ((state >> i) & 1) as u8).collect())
    }

    /// Packs the string into a `u64` with `a_1` in bit 0. Needs `len() <= 64`.
    pub fn to_packed(&self) -> Option<u64> {
        if self.0.len() > 64 {
            return None;
        }
        Some(
            self.0
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i)),
        )
    }

    /// The symbols, `a_1` first.
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Consumes the string and returns its symbols.
    pub fn into_inner(self) -> Vec<u8> {
        self.0
    }

    /// Number of symbols.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `a_i` for 1-indexed `i`.
    pub fn bit(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// `w(A)`, the number of ones.
    pub fn weight(&self) -> usize {
        weight(&self.0)
    }

    /// Number of ones minus number of zeros.
    pub fn positive_weight(&self) -> i64 {
        positive_weight(&self.0)
    }

    /// Flips every symbol.
    pub fn complement(&self) -> BitString {
        BitString(self.0.iter().map(|&b| 1 - b).collect())
    }

    /// Cyclic left rotation by `r` positions: `a_{r+1} ... a_n a_1 ... a_r`.
    pub fn rotate_left(&self, r: usize) -> BitString {
        let mut bits = self.0.clone();
        let len = bits.len();
        bits.rotate_left(r % len);
        BitString(bits)
    }

    /// The even vector representation `V(A)`.
    ///
    /// `A` decomposes as `1_{v_1} 0_{v_2} ... 1_{v_J} 0_{v_{J+1}}` with odd `J`,
    /// `v_i >= 1` for `i <= J` and `v_{J+1} >= 0`. A string ending in `1` gets a
    /// trailing `0` entry, so the all-ones word of length `n` maps to `(n, 0)`.
    pub fn run_vector(&self) -> Result<RunVector> {
        if self.0[0] == 0 {
            return Err(Error::StartsWithZero);
        }
        let mut runs: Vec<u64> = Vec::new();
        let mut current = self.0[0];
        let mut len = 0u64;
        for &b in &self.0 {
            if b == current {
                len += 1;
            } else {
                runs.push(len);
                current = b;
                len = 1;
            }
        }
        runs.push(len);
        if runs.len() % 2 == 1 {
            runs.push(0);
        }
        RunVector::new(runs)
    }

    /// `A(V) = 1_{v_1} 0_{v_2} ... 1_{v_J} 0_{v_{J+1}}`.
    pub fn from_run_vector(v: &RunVector) -> Result<BitString> {
        let total = v.sum()?;
        let total = usize::try_from(total).map_err(|_| Error::ArithmeticOverflow)?;
        let mut bits = Vec::with_capacity(total);
        for (i, &run) in v.entries().iter().enumerate() {
            let symbol = if i % 2 == 0 { 1 } else { 0 };
            bits.extend(core::iter::repeat(symbol).take(run as usize));
        }
        BitString::from_bits(bits)
    }

    /// Least `r >= 1` dividing `n` such that rotating by `r` fixes the string.
    pub fn minimal_rotation_period(&self) -> usize {
        let n = self.0.len();
        (1..=n)
            .filter(|r| n % r == 0)
            .find(|&r| (0..n).all(|i| self.0[i] == self.0[(i + r) % n]))
            .unwrap_or(n)
    }
}

/// Number of ones in a symbol slice.
pub fn weight(bits: &[u8]) -> usize {
    bits.iter().filter(|&&b| b == 1).count()
}

/// Ones minus zeros; `0` for the empty slice.
pub fn positive_weight(bits: &[u8]) -> i64 {
    let ones = weight(bits) as i64;
    2 * ones - bits.len() as i64
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// Parses `'0'`/`'1'` characters; ASCII whitespace and `_` are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                c if c.is_ascii_whitespace() || c == '_' => {}
                found => return Err(Error::InvalidBit { position: i + 1, found }),
            }
        }
        BitString::from_bits(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn rv(entries: &[u64]) -> RunVector {
        RunVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(bs("11100001100001").weight(), 6);
        assert_eq!(bs("000").weight(), 0);
        assert_eq!(bs("110011100").weight(), 5);
        assert_eq!(bs("1").positive_weight(), 1);
        assert_eq!(bs("0").positive_weight(), -1);
        assert_eq!(bs("1100").positive_weight(), 0);
        assert_eq!(positive_weight(&[]), 0);
    }

    #[test]
    fn complement_flips() {
        assert_eq!(bs("110").complement(), bs("001"));
        assert_eq!(bs("0").complement(), bs("1"));
    }

    #[test]
    fn run_vectors() {
        assert_eq!(bs("110011100").run_vector().unwrap(), rv(&[2, 2, 3, 2]));
        assert_eq!(bs("111100111").run_vector().unwrap(), rv(&[4, 2, 3, 0]));
        assert_eq!(bs("1").run_vector().unwrap(), rv(&[1, 0]));
        assert_eq!(bs("1111").run_vector().unwrap(), rv(&[4, 0]));
        assert_eq!(bs("0110").run_vector(), Err(Error::StartsWithZero));
    }

    #[test]
    fn from_run_vectors() {
        assert_eq!(BitString::from_run_vector(&rv(&[3, 4, 2, 0])).unwrap(), bs("111000011"));
        assert_eq!(BitString::from_run_vector(&rv(&[2, 3, 1, 3])).unwrap(), bs("110001000"));
        assert_eq!(BitString::from_run_vector(&rv(&[1, 0])).unwrap(), bs("1"));
    }

    fn rotation_period_brute(a: &BitString) -> usize {
        (1..=a.len())
            .find(|&r| a.len() % r == 0 && a.rotate_left(r) == *a)
            .unwrap()
    }

    #[test]
    fn rotation_periods() {
        assert_eq!(bs("101010").minimal_rotation_period(), 2);
        assert_eq!(bs("111").minimal_rotation_period(), 1);
        let a = bs("110110");
        assert_eq!(rotation_period_brute(&a), 3);
        assert_eq!(a.minimal_rotation_period(), 3);
        assert_eq!(bs("1101").minimal_rotation_period(), 4);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(bs(" 1100 0_1 ").to_string(), "110001");
        assert!(matches!(
            "10a1".parse::<BitString>(),
            Err(Error::InvalidBit { position: 3, found: 'a' })
        ));
        assert_eq!("".parse::<BitString>(), Err(Error::EmptyBitString));
        assert!(BitString::from_bits(alloc::vec![0, 2]).is_err());
    }

    #[test]
    fn packing() {
        let a = bs("1101");
        assert_eq!(a.to_packed(), Some(0b1011));
        assert_eq!(BitString::from_packed(0b1011, 4).unwrap(), a);
    }

    fn arb_bits() -> impl Strategy<Value = BitString> {
        proptest::collection::vec(0u8..2, 1..40).prop_map(|v| BitString::from_bits(v).unwrap())
    }

    proptest! {
        #[test]
        fn run_vector_round_trip(a in arb_bits()) {
            let mut bits = a.into_inner();
            bits[0] = 1;
            let a = BitString::from_bits(bits).unwrap();
            let v = a.run_vector().unwrap();
            prop_assert_eq!(BitString::from_run_vector(&v).unwrap(), a);
        }

        #[test]
        fn weight_identities(a in arb_bits()) {
            prop_assert_eq!(a.weight() + a.complement().weight(), a.len());
            prop_assert_eq!(a.positive_weight(), 2 * a.weight() as i64 - a.len() as i64);
            prop_assert_eq!(a.complement().complement(), a.clone());
            prop_assert_eq!(a.minimal_rotation_period(), rotation_period_brute(&a));
        }
    }
}
