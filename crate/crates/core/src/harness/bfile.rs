//! OEIS b-files: lines `n a(n)`, `#` comments and blank lines ignored.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: index {index} does not follow {previous}")]
    NotContiguous { line: usize, index: i64, previous: i64 },
}

/// A parsed b-file: contiguous indices `first..first + values.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    pub first: i64,
    pub values: Vec<BigInt>,
}

impl BFile {
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let i = index.checked_sub(self.first)?;
        usize::try_from(i).ok().and_then(|i| self.values.get(i))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last_index(&self) -> Option<i64> {
        (!self.values.is_empty()).then(|| self.first + self.values.len() as i64 - 1)
    }
}

pub fn parse_bfile(text: &str) -> Result<BFile, BFileError> {
    let mut out = BFile::default();
    let mut previous: Option<i64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let malformed = |message: &str| BFileError::Malformed {
            line,
            message: message.to_string(),
        };
        if fields.len() != 2 {
            return Err(malformed("expected two fields \"n a(n)\""));
        }
        let index: i64 = fields[0].parse().map_err(|_| malformed("index is not an integer"))?;
        let value: BigInt = fields[1].parse().map_err(|_| malformed("value is not an integer"))?;
        match previous {
            None => out.first = index,
            Some(p) if index == p + 1 => {}
            Some(p) => {
                return Err(BFileError::NotContiguous {
                    line,
                    index,
                    previous: p,
                })
            }
        }
        previous = Some(index);
        out.values.push(value);
    }
    Ok(out)
}

/// Outcome of aligning `values[n]` with the b-file entry at `n + offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileMatch {
    /// Number of `n` where both sequences have a value.
    pub compared: usize,
    /// First `n` with differing values, with the two values.
    pub first_mismatch: Option<(u64, BigInt, BigInt)>,
}

impl BFileMatch {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn compare_with_bfile(values: &[BigInt], bfile: &BFile, offset: i64) -> BFileMatch {
    let mut compared = 0;
    for (n, v) in values.iter().enumerate() {
        let Some(entry) = bfile.get(n as i64 + offset) else {
            continue;
        };
        compared += 1;
        if entry != v {
            return BFileMatch {
                compared,
                first_mismatch: Some((n as u64, v.clone(), entry.clone())),
            };
        }
    }
    BFileMatch {
        compared,
        first_mismatch: None,
    }
}
