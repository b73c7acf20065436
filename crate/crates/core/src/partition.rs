//! Integer partitions, the binary-sequence construction and pointwise addition.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::frobenius::FrobeniusSymbol;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {index} is zero")]
    ZeroPart { index: usize },
    #[error("parts are not weakly decreasing at index {index}")]
    NotDecreasing { index: usize },
    #[error("overlined parts are not strictly decreasing at index {index}")]
    OverlinedNotStrict { index: usize },
    #[error("cannot align {longer} parts against a sequence of length {shorter}")]
    LengthMismatch { longer: usize, shorter: usize },
    #[error("binary sequence is empty")]
    EmptyBinarySequence,
    #[error("binary sequence entry {index} is {value}, expected 0 or 1")]
    NotBinary { index: usize, value: u8 },
    #[error("invalid Frobenius symbol: {0}")]
    Frobenius(String),
    #[error("malformed partition at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing { index: index + 1 });
            }
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart { index });
        }
        Ok(Partition(parts))
    }

    /// Sorts into canonical order and drops zero entries.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Parts in increasing order.
    pub fn increasing(&self) -> Vec<u32> {
        self.0.iter().rev().copied().collect()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn is_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Transpose of the Ferrers graph: `λ'_i = #{j : λ_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest() as usize);
        let mut j = self.0.len();
        for i in 1..=self.largest() {
            while j > 0 && self.0[j - 1] < i {
                j -= 1;
            }
            out.push(j as u32);
        }
        Partition(out)
    }

    /// Side of the Durfee square: the number of parts with `λ_j >= j`.
    pub fn diagonal(&self) -> usize {
        self.0.iter().enumerate().take_while(|&(j, &p)| p as usize > j).count()
    }

    pub fn frobenius(&self) -> FrobeniusSymbol {
        FrobeniusSymbol::of(self)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Frobenius top row exceeds the bottom row by one in every column.
    /// The empty partition (no columns) is not almost self-conjugate.
    pub fn is_almost_self_conjugate(&self) -> bool {
        let f = self.frobenius();
        !f.is_empty() && f.top().iter().zip(f.bottom()).all(|(a, b)| *a == b + 1)
    }

    /// `m_i(λ)`, the multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the decreasing part sequence.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::overpartition::write_parts(f, &self.0, &[])
    }
}

impl std::str::FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let op: crate::overpartition::Overpartition = s.parse()?;
        if !op.overlined().is_empty() {
            return Err(PartitionError::Parse {
                column: s.find('~').map_or(1, |i| i + 1),
                message: "overlined part in an ordinary partition".into(),
            });
        }
        Ok(op.into_parts().0)
    }
}

/// A nonempty sequence over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySequence(Vec<u8>);

impl BinarySequence {
    pub fn new(bits: Vec<u8>) -> Result<Self, PartitionError> {
        if bits.is_empty() {
            return Err(PartitionError::EmptyBinarySequence);
        }
        if let Some((index, &value)) = bits.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(PartitionError::NotBinary { index, value });
        }
        Ok(BinarySequence(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// The least-weight gapfree sequence with the same parities:
    /// `t_1 = b_1`, then `t_j` repeats `t_{j-1}` when the bit repeats and
    /// steps up by one when it flips.
    pub fn t_sequence(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut t = self.0[0] as u32;
        out.push(t);
        for w in self.0.windows(2) {
            if w[0] != w[1] {
                t += 1;
            }
            out.push(t);
        }
        out
    }
}

pub fn t_of_binary(b: &BinarySequence) -> Vec<u32> {
    b.t_sequence()
}

/// Adds `v` to `u` entrywise after aligning both smallest-to-smallest and
/// padding `v` with zeros at its small end. `u` may be given in either
/// monotone order and may contain zeros; the sum is returned canonically.
pub fn pointwise_add(u: &[u32], v: &Partition) -> Result<Partition, PartitionError> {
    if v.len() > u.len() {
        return Err(PartitionError::LengthMismatch {
            longer: v.len(),
            shorter: u.len(),
        });
    }
    let mut small_first = u.to_vec();
    small_first.sort_unstable();
    let pad = u.len() - v.len();
    let sum = small_first
        .iter()
        .enumerate()
        .map(|(i, &x)| if i < pad { x } else { x + v.0[v.len() - 1 - (i - pad)] })
        .collect();
    Ok(Partition::from_unsorted(sum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing { index: 1 })
        );
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart { index: 1 }));
        assert_eq!(Partition::from_unsorted(vec![0, 1, 3, 0, 2]), p(&[3, 2, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(p(&[3, 2, 1]).diagonal(), 2);
        assert_eq!(Partition::empty().diagonal(), 0);
        for n in 1..10 {
            assert_eq!(p(&[n]).diagonal(), 1);
        }
    }

    #[test]
    fn conjugacy_predicates() {
        assert!(p(&[4, 3, 3, 1]).is_self_conjugate());
        assert!(p(&[3, 3]).is_almost_self_conjugate());
        assert!(!p(&[3, 3]).is_self_conjugate());
        assert!(Partition::empty().is_self_conjugate());
        assert!(!Partition::empty().is_almost_self_conjugate());
    }

    #[test]
    fn weights() {
        assert_eq!(p(&[3]).weight(), 3);
        assert_eq!(Partition::empty().weight(), 0);
    }

    #[test]
    fn t_sequence_examples() {
        let b = BinarySequence::new(vec![0, 1, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(t_of_binary(&b), [0, 1, 1, 2, 3, 4, 4]);
        let b = BinarySequence::new(vec![0, 0, 0]).unwrap();
        assert_eq!(t_of_binary(&b), [0, 0, 0]);
        let b = BinarySequence::new(vec![1]).unwrap();
        assert_eq!(t_of_binary(&b), [1]);
        assert_eq!(BinarySequence::new(vec![]), Err(PartitionError::EmptyBinarySequence));
        assert!(BinarySequence::new(vec![0, 2]).is_err());
    }

    #[test]
    fn pointwise_add_examples() {
        let v = p(&[2, 2, 1, 1]);
        assert_eq!(
            pointwise_add(&[1, 2, 3, 4, 11, 12], &v).unwrap(),
            p(&[14, 13, 5, 4, 2, 1])
        );
        assert_eq!(pointwise_add(&[5], &Partition::empty()).unwrap(), p(&[5]));
        let v = p(&[5, 5, 4, 4, 3, 2, 1]);
        assert_eq!(
            pointwise_add(&[15, 13, 11, 9, 7, 5, 3, 1], &v).unwrap(),
            p(&[20, 18, 15, 13, 10, 7, 4, 1])
        );
        assert_eq!(
            pointwise_add(&[3], &p(&[1, 1])),
            Err(PartitionError::LengthMismatch { longer: 2, shorter: 1 })
        );
    }
}
