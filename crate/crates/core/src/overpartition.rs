//! Overpartitions and the comma-separated text syntax shared by the CLI.
//!
//! A partition prints as its parts in decreasing order, `"4,2,1"`. An
//! overpartition appends its overlined parts, each suffixed with `~`:
//! `"15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~"`. The empty partition is the empty
//! string. Printing always emits this canonical form and parsing it back
//! gives the same value.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::partition::{Partition, PartitionError};

/// A partition of non-overlined parts together with a strictly decreasing
/// list of overlined magnitudes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Overpartition {
    nonoverlined: Partition,
    overlined: Vec<u32>,
}

impl Overpartition {
    pub fn new(nonoverlined: Partition, overlined: Vec<u32>) -> Result<Self, PartitionError> {
        for (index, w) in overlined.windows(2).enumerate() {
            if w[0] <= w[1] {
                return Err(PartitionError::OverlinedNotStrict { index: index + 1 });
            }
        }
        if let Some(index) = overlined.iter().position(|&v| v == 0) {
            return Err(PartitionError::ZeroPart { index });
        }
        Ok(Overpartition {
            nonoverlined,
            overlined,
        })
    }

    pub fn plain(nonoverlined: Partition) -> Self {
        Overpartition {
            nonoverlined,
            overlined: Vec::new(),
        }
    }

    pub fn nonoverlined(&self) -> &Partition {
        &self.nonoverlined
    }

    /// Overlined magnitudes, strictly decreasing.
    pub fn overlined(&self) -> &[u32] {
        &self.overlined
    }

    /// The overlined magnitudes viewed as a partition with distinct parts.
    pub fn overlined_partition(&self) -> Partition {
        Partition::from_sorted_unchecked(self.overlined.clone())
    }

    pub fn into_parts(self) -> (Partition, Vec<u32>) {
        (self.nonoverlined, self.overlined)
    }

    pub fn weight(&self) -> u64 {
        self.nonoverlined.weight() + self.overlined.iter().map(|&v| v as u64).sum::<u64>()
    }

    /// Number of non-overlined parts.
    pub fn r(&self) -> usize {
        self.nonoverlined.len()
    }
}

impl PartialOrd for Overpartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Overpartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nonoverlined
            .cmp(&other.nonoverlined)
            .then_with(|| self.overlined.cmp(&other.overlined))
    }
}

pub(crate) fn write_parts(f: &mut fmt::Formatter<'_>, plain: &[u32], over: &[u32]) -> fmt::Result {
    let mut first = true;
    for p in plain {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        write!(f, "{p}")?;
    }
    for v in over {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        write!(f, "{v}~")?;
    }
    Ok(())
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.nonoverlined.parts(), &self.overlined)
    }
}

impl FromStr for Overpartition {
    type Err = PartitionError;

    /// Accepts the canonical syntax. Overlined tokens may be interleaved with
    /// plain ones, but each group must already be in decreasing order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut plain: Vec<u32> = Vec::new();
        let mut over: Vec<u32> = Vec::new();
        if s.trim().is_empty() {
            return Ok(Overpartition::default());
        }
        let mut column = 1;
        for token in s.split(',') {
            let err = |message: &str| PartitionError::Parse {
                column,
                message: message.to_string(),
            };
            let body = token.trim();
            let (digits, overlined) = match body.strip_suffix('~') {
                Some(d) => (d, true),
                None => (body, false),
            };
            if digits.is_empty() {
                return Err(err("expected a part"));
            }
            if !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("parts must be decimal integers optionally followed by '~'"));
            }
            let value: u32 = digits.parse().map_err(|_| err("part is too large"))?;
            if value == 0 {
                return Err(err("parts must be positive"));
            }
            if overlined {
                if over.last().is_some_and(|&last| last <= value) {
                    return Err(err("overlined parts must be strictly decreasing"));
                }
                over.push(value);
            } else {
                if plain.last().is_some_and(|&last| last < value) {
                    return Err(err("parts must be weakly decreasing"));
                }
                plain.push(value);
            }
            column += token.chars().count() + 1;
        }
        Ok(Overpartition {
            nonoverlined: Partition::from_sorted_unchecked(plain),
            overlined: over,
        })
    }
}
