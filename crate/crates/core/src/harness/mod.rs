//! Registered identities, each with two or more independently computed
//! sides, and the machinery that evaluates and compares them.

pub mod bfile;
pub mod registry;
pub mod report;
pub mod terms;
pub mod verify;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bijection::{BijectionError, MapId};
use crate::classes::{lookup_class, ClassMember};
use crate::enumerate::{count_stembridge_pairs_upto, StembridgeVariant};
use crate::series::{LaurentSeries, ProductSpec, SeriesError};

pub use bfile::{compare_with_bfile, parse_bfile, BFile, BFileError, BFileMatch};
pub use registry::{builtin_identities, identity_ids, lookup_identity, lookup_series, SERIES_IDS};
pub use report::{render_summary, Format, Mismatch, SideReport, Status, VerificationReport};
pub use terms::{FactorTemplate, Quadratic, TermFamily};
pub use verify::{verify, verify_all, verify_record, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    BFile(#[from] BFileError),
    #[error("unknown class id {0:?}")]
    UnknownClass(String),
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("series has a nonzero coefficient at q^{0} after summation")]
    NegativeExponent(i64),
    #[error("scaled value {value} at n = {n} is not an integer")]
    NonIntegral { n: u64, value: String },
    #[error("map {map} sent {input} to {image}, outside {target}")]
    ImageOutsideTarget {
        map: String,
        input: String,
        image: String,
        target: String,
    },
    #[error("map {map} sent {input} to {image} of a different weight")]
    WeightChanged { map: String, input: String, image: String },
    #[error("class {0} does not contain partitions")]
    NotAPartitionClass(String),
}

/// One way of producing a sequence `a(0), a(1), ...`.
#[derive(Debug, Clone, PartialEq)]
pub enum Side {
    /// Enumerated size of a registered class.
    Count(String),
    /// Stembridge-type pairs of partitions.
    Pairs(StembridgeVariant),
    /// Coefficients of a summed family of terms.
    Sum(TermFamily),
    /// Coefficients of a finite or infinite product.
    Product(ProductSpec),
    /// `sum c_i * side_i`.
    Linear(Vec<(i64, Side)>),
    /// The constant series `c`.
    Constant(i64),
    /// `factor * side`, required to stay integral.
    Scaled(Box<Side>, BigRational),
    /// `a(n) = side(n + shift)`.
    Shifted(Box<Side>, u64),
    /// Entries of an OEIS-style b-file with `a(n) = entry(n + offset)`.
    BFile {
        name: String,
        contents: &'static str,
        offset: i64,
    },
    /// Number of distinct images of `source` under `map` that land in
    /// `target`.
    Image { map: MapId, source: String, target: String },
}

impl Side {
    pub fn count(class: &str) -> Side {
        Side::Count(class.to_string())
    }

    /// Short tag for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Side::Count(_) => "count",
            Side::Pairs(_) => "pairs",
            Side::Sum(_) => "sum",
            Side::Product(_) => "product",
            Side::Linear(_) => "linear",
            Side::Constant(_) => "constant",
            Side::Scaled(..) => "scaled",
            Side::Shifted(..) => "shifted",
            Side::BFile { .. } => "bfile",
            Side::Image { .. } => "image",
        }
    }

    /// True when every leaf is a series computation.
    pub fn is_series(&self) -> bool {
        match self {
            Side::Sum(_) | Side::Product(_) | Side::Constant(_) => true,
            Side::Linear(parts) => parts.iter().all(|(_, s)| s.is_series()),
            Side::Scaled(s, _) | Side::Shifted(s, _) => s.is_series(),
            _ => false,
        }
    }

    /// The largest `n` this side is evaluated to under `limits`.
    pub fn reach(&self, max_n: u64, limits: &Limits) -> u64 {
        match self {
            Side::Count(_) => max_n.min(limits.enumeration),
            Side::Pairs(_) => max_n.min(limits.pairs),
            Side::Image { .. } => max_n.min(limits.bijection),
            Side::Linear(parts) => parts.iter().map(|(_, s)| s.reach(max_n, limits)).min().unwrap_or(max_n),
            Side::Scaled(s, _) => s.reach(max_n, limits),
            Side::Shifted(s, k) => s.reach(max_n + k, limits).saturating_sub(*k),
            _ => max_n,
        }
    }

    /// `a(0..=k)` where `k = self.reach(max_n, limits)`. B-file sides may
    /// return fewer values when the file is shorter.
    pub fn values(&self, max_n: u64, limits: &Limits) -> Result<Vec<BigInt>, HarnessError> {
        let k = self.reach(max_n, limits);
        match self {
            Side::Count(id) => {
                let class = lookup_class(id).ok_or_else(|| HarnessError::UnknownClass(id.clone()))?;
                Ok(class.counts_upto(k).into_iter().map(BigInt::from).collect())
            }
            Side::Pairs(v) => Ok(count_stembridge_pairs_upto(k, *v)
                .into_iter()
                .map(BigInt::from)
                .collect()),
            Side::Sum(family) => series_values(&family.sum(k as i64)?, k),
            Side::Product(spec) => series_values(&spec.expand(k as i64)?, k),
            Side::Constant(c) => {
                let mut out = vec![BigInt::zero(); k as usize + 1];
                out[0] = BigInt::from(*c);
                Ok(out)
            }
            Side::Linear(parts) => {
                let mut out = vec![BigInt::zero(); k as usize + 1];
                for (c, side) in parts {
                    let vals = side.values(k, limits)?;
                    for (acc, v) in out.iter_mut().zip(vals) {
                        *acc += v * c;
                    }
                }
                Ok(out)
            }
            Side::Scaled(side, factor) => side
                .values(k, limits)?
                .into_iter()
                .enumerate()
                .map(|(n, v)| {
                    let scaled = BigRational::from_integer(v) * factor;
                    if scaled.denom().is_one() {
                        Ok(scaled.to_integer())
                    } else {
                        Err(HarnessError::NonIntegral {
                            n: n as u64,
                            value: scaled.to_string(),
                        })
                    }
                })
                .collect(),
            Side::Shifted(side, shift) => {
                let vals = side.values(k + shift, limits)?;
                Ok(vals.into_iter().skip(*shift as usize).collect())
            }
            Side::BFile { contents, offset, .. } => {
                let file = parse_bfile(contents)?;
                Ok((0..=k as i64).map_while(|n| file.get(n + offset).cloned()).collect())
            }
            Side::Image { map, source, target } => image_counts(*map, source, target, k),
        }
    }
}

fn series_values(s: &LaurentSeries, k: u64) -> Result<Vec<BigInt>, HarnessError> {
    if let Some(v) = s.valuation().filter(|&v| v < 0) {
        return Err(HarnessError::NegativeExponent(v));
    }
    Ok(s.coefficients(0, k as i64)?)
}

fn image_counts(map: MapId, source: &str, target: &str, k: u64) -> Result<Vec<BigInt>, HarnessError> {
    let src = lookup_class(source).ok_or_else(|| HarnessError::UnknownClass(source.into()))?;
    let tgt = lookup_class(target).ok_or_else(|| HarnessError::UnknownClass(target.into()))?;
    let mut out = Vec::with_capacity(k as usize + 1);
    for n in 0..=k {
        let mut images = HashSet::new();
        for member in src.enumerate(n) {
            let ClassMember::Partition(lambda) = member else {
                return Err(HarnessError::NotAPartitionClass(source.into()));
            };
            let image = map.forward(&lambda)?;
            if image.weight() != n {
                return Err(HarnessError::WeightChanged {
                    map: map.to_string(),
                    input: lambda.to_string(),
                    image: image.to_string(),
                });
            }
            if !tgt.contains_overpartition(&image) {
                return Err(HarnessError::ImageOutsideTarget {
                    map: map.to_string(),
                    input: lambda.to_string(),
                    image: image.to_string(),
                    target: target.into(),
                });
            }
            images.insert(image);
        }
        out.push(BigInt::from(images.len()));
    }
    Ok(out)
}

/// A labelled side. `claim` marks sides stating an unproven interpretation:
/// their disagreement is reported as FLAGGED rather than FAIL.
#[derive(Debug, Clone, PartialEq)]
pub struct SideSpec {
    pub label: String,
    pub side: Side,
    pub claim: bool,
}

impl SideSpec {
    pub fn new(label: impl Into<String>, side: Side) -> Self {
        SideSpec {
            label: label.into(),
            side,
            claim: false,
        }
    }

    pub fn claim(mut self) -> Self {
        self.claim = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    Proven,
    PaperClaim,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::Proven => "PROVEN",
            Expectation::PaperClaim => "PAPER_CLAIM",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRecord {
    pub id: String,
    pub statement: String,
    pub sides: Vec<SideSpec>,
    pub notes: Vec<String>,
}

impl IdentityRecord {
    pub fn new(id: impl Into<String>, statement: impl Into<String>) -> Self {
        IdentityRecord {
            id: id.into(),
            statement: statement.into(),
            sides: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn side(mut self, label: impl Into<String>, side: Side) -> Self {
        self.sides.push(SideSpec::new(label, side));
        self
    }

    pub fn claim(mut self, label: impl Into<String>, side: Side) -> Self {
        self.sides.push(SideSpec::new(label, side).claim());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn expectation(&self) -> Expectation {
        if self.sides.iter().any(|s| s.claim) {
            Expectation::PaperClaim
        } else {
            Expectation::Proven
        }
    }

    /// True when no side needs enumeration.
    pub fn is_series_only(&self) -> bool {
        self.sides.iter().all(|s| s.side.is_series())
    }
}
