//! Frobenius symbols `(a_1 > ... > a_d ; b_1 > ... > b_d)`.
//!
//! Arms are `a_i = λ_i - i` and legs are `b_i = λ'_i - i` along the Durfee
//! diagonal of length `d`.

use std::fmt;

use crate::partition::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FrobeniusSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, PartitionError> {
        if top.len() != bottom.len() {
            return Err(PartitionError::Frobenius(format!(
                "rows have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(PartitionError::Frobenius(format!(
                    "{name} row is not strictly decreasing"
                )));
            }
        }
        Ok(FrobeniusSymbol { top, bottom })
    }

    pub fn of(lambda: &Partition) -> Self {
        let d = lambda.diagonal();
        let conj = lambda.conjugate();
        let top = (0..d).map(|i| lambda.parts()[i] - (i as u32 + 1)).collect();
        let bottom = (0..d).map(|i| conj.parts()[i] - (i as u32 + 1)).collect();
        FrobeniusSymbol { top, bottom }
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Length of the diagonal.
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.len() as u64
            + self.top.iter().map(|&a| a as u64).sum::<u64>()
            + self.bottom.iter().map(|&b| b as u64).sum::<u64>()
    }

    pub fn contains_zero(&self) -> bool {
        self.top.contains(&0) || self.bottom.contains(&0)
    }

    /// Rebuilds the partition: rows `i <= d` have length `a_i + i`, and a row
    /// `i > d` counts the diagonal columns whose length `b_j + j` reaches it.
    pub fn to_partition(&self) -> Partition {
        let d = self.len();
        let cols: Vec<u32> = self.bottom.iter().enumerate().map(|(j, &b)| b + j as u32 + 1).collect();
        let mut parts: Vec<u32> = self.top.iter().enumerate().map(|(i, &a)| a + i as u32 + 1).collect();
        let depth = cols.first().copied().unwrap_or(0);
        for row in (d as u32 + 1)..=depth {
            parts.push(cols.iter().filter(|&&c| c >= row).count() as u32);
        }
        Partition::from_sorted_unchecked(parts)
    }
}

pub fn partition_from_frobenius(f: &FrobeniusSymbol) -> Partition {
    f.to_partition()
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "({} | {})", row(&self.top), row(&self.bottom))
    }
}
