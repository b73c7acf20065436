//! Truncated formal Laurent series in `q` with exact integer coefficients.
//!
//! Every series carries an explicit truncation order `N`: coefficients of
//! exponents above `N` are discarded. Series with different orders never mix;
//! combining them is an [`SeriesError::OrderMismatch`].
//!
//! Negative exponents are allowed (the sums use factors such as
//! `(-q^{-1};q^2)_n`). A product only stays exact up to `N` when every
//! operand with negative exponents is multiplied against a series whose
//! stored coefficients are complete, so each series records whether anything
//! nonzero was dropped by truncation and [`LaurentSeries::mul`] refuses
//! products that would silently lose coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Lowest exponent a series may carry.
pub const MIN_OFFSET: i64 = -1024;

/// Consecutive non-growing terms tolerated by [`sum_terms`] before it gives up.
pub const DEFAULT_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: i64, right: i64 },
    #[error("coefficient of q^{exponent} is unknown past truncation order {order}")]
    BeyondOrder { exponent: i64, order: i64 },
    #[error("factor (1 {sign} q^{exponent}) has no power-series inverse")]
    NonUnitInverse { sign: char, exponent: i64 },
    #[error("series family is not converging: minimum exponent stuck at {exponent} after {terms} terms")]
    Divergent { exponent: i64, terms: usize },
    #[error(
        "product would lose coefficients: a factor with negative exponents meets a truncated series at order {order}"
    )]
    PrecisionLoss { order: i64 },
    #[error("exponent offset {offset} is below the supported minimum {MIN_OFFSET}")]
    OffsetOutOfRange { offset: i64 },
    #[error("negative q-Pochhammer length {0}")]
    NegativeLength(i64),
    #[error("q-Pochhammer step must be positive")]
    ZeroStep,
    #[error("exponent {numerator}/{denominator} is not an integer")]
    NonIntegralExponent { numerator: i64, denominator: i64 },
}

/// Sign of a binomial factor: `Plus` is `1 + q^e`, `Minus` is `1 - q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorSign {
    Plus,
    Minus,
}

impl FactorSign {
    fn as_int(self) -> i64 {
        match self {
            FactorSign::Plus => 1,
            FactorSign::Minus => -1,
        }
    }

    fn as_char(self) -> char {
        match self {
            FactorSign::Plus => '+',
            FactorSign::Minus => '-',
        }
    }
}

/// A dense truncated Laurent series `sum_{i} coeffs[i] q^{offset + i}`.
///
/// Stored normalized: the first stored coefficient is nonzero (so `offset`
/// is the valuation) and trailing zeros are trimmed. The zero series has no
/// coefficients and reports `offset = order + 1`.
#[derive(Clone, Debug)]
pub struct LaurentSeries {
    offset: i64,
    coeffs: Vec<BigInt>,
    order: i64,
    exact: bool,
}

impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.offset == other.offset && self.coeffs == other.coeffs
    }
}

impl Eq for LaurentSeries {}

impl LaurentSeries {
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            offset: order + 1,
            coeffs: Vec::new(),
            order,
            exact: true,
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^e` truncated at `order`. An exponent above the order gives the
    /// zero series (flagged inexact when `c != 0`).
    pub fn monomial(c: impl Into<BigInt>, e: i64, order: i64) -> Self {
        let c = c.into();
        if e > order {
            let mut z = Self::zero(order);
            z.exact = c.is_zero();
            return z;
        }
        Self::normalized(e, vec![c], order, true)
    }

    /// Builds a series whose coefficient of `q^{offset + i}` is `coeffs[i]`.
    /// Entries past `order` are dropped and mark the series inexact.
    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>, order: i64) -> Result<Self, SeriesError> {
        if offset < MIN_OFFSET {
            return Err(SeriesError::OffsetOutOfRange { offset });
        }
        let mut coeffs = coeffs;
        let mut exact = true;
        let keep = (order - offset + 1).max(0) as usize;
        if coeffs.len() > keep {
            exact = coeffs[keep..].iter().all(Zero::is_zero);
            coeffs.truncate(keep);
        }
        Ok(Self::normalized(offset, coeffs, order, exact))
    }

    /// Convenience constructor for power series given as machine integers.
    pub fn from_i64s(offset: i64, coeffs: &[i64], order: i64) -> Result<Self, SeriesError> {
        Self::from_coeffs(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    fn normalized(mut offset: i64, mut coeffs: Vec<BigInt>, order: i64, exact: bool) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                let mut z = Self::zero(order);
                z.exact = exact;
                z
            }
            Some(lead) => {
                coeffs.drain(..lead);
                offset += lead as i64;
                while coeffs.last().is_some_and(Zero::is_zero) {
                    coeffs.pop();
                }
                LaurentSeries {
                    offset,
                    coeffs,
                    order,
                    exact,
                }
            }
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent with a nonzero coefficient, or `order + 1` for zero.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.offset)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when truncation has not discarded any nonzero coefficient, i.e. the
    /// stored terms are the whole Laurent polynomial.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Exact coefficient of `q^n`. Asking past the order is an error because
    /// that coefficient was truncated away.
    pub fn coeff(&self, n: i64) -> Result<BigInt, SeriesError> {
        if n > self.order {
            return Err(SeriesError::BeyondOrder {
                exponent: n,
                order: self.order,
            });
        }
        Ok(self.raw(n))
    }

    fn raw(&self, n: i64) -> BigInt {
        if n < self.offset {
            return BigInt::zero();
        }
        self.coeffs.get((n - self.offset) as usize).cloned().unwrap_or_default()
    }

    fn raw_ref(&self, n: i64) -> Option<&BigInt> {
        if n < self.offset {
            return None;
        }
        self.coeffs.get((n - self.offset) as usize)
    }

    /// Coefficients of `q^lo ..= q^hi`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Result<Vec<BigInt>, SeriesError> {
        if hi > self.order {
            return Err(SeriesError::BeyondOrder {
                exponent: hi,
                order: self.order,
            });
        }
        Ok((lo..=hi).map(|n| self.raw(n)).collect())
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let offset = self.offset;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (offset + i as i64, c))
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let exact = self.exact && other.exact;
        if other.is_zero() {
            let mut out = self.clone();
            out.exact = exact;
            return Ok(out);
        }
        if self.is_zero() {
            let mut out = if subtract { other.neg() } else { other.clone() };
            out.exact = exact;
            return Ok(out);
        }
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(other.offset + other.coeffs.len() as i64);
        let mut coeffs = Vec::with_capacity((hi - lo) as usize);
        for n in lo..hi {
            let a = self.raw(n);
            let b = other.raw(n);
            coeffs.push(if subtract { a - b } else { a + b });
        }
        Ok(Self::normalized(lo, coeffs, self.order, exact))
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
            exact: self.exact,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        LaurentSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
            exact: self.exact,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if k < 0 && !self.exact {
            return Err(SeriesError::PrecisionLoss { order: self.order });
        }
        let offset = self.offset + k;
        if offset < MIN_OFFSET {
            return Err(SeriesError::OffsetOutOfRange { offset });
        }
        Self::from_coeffs(offset, self.coeffs.clone(), self.order).map(|mut s| {
            s.exact &= self.exact;
            s
        })
    }

    /// The same series truncated at a lower order.
    pub fn truncate(&self, order: i64) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: order,
            });
        }
        if self.is_zero() {
            let mut z = Self::zero(order);
            z.exact = self.exact;
            return Ok(z);
        }
        let mut out = Self::from_coeffs(self.offset, self.coeffs.clone(), order)?;
        out.exact &= self.exact;
        Ok(out)
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        if (self.offset < 0 && !other.exact) || (other.offset < 0 && !self.exact) {
            return Err(SeriesError::PrecisionLoss { order: self.order });
        }
        if self.is_zero() || other.is_zero() {
            let mut z = Self::zero(self.order);
            z.exact = self.exact && other.exact;
            return Ok(z);
        }
        let offset = self.offset + other.offset;
        if offset < MIN_OFFSET {
            return Err(SeriesError::OffsetOutOfRange { offset });
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let keep = ((self.order - offset + 1).max(0) as usize).min(len);
        let mut out = vec![BigInt::zero(); keep];
        let mut dropped = false;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= keep {
                    dropped |= !b.is_zero();
                    continue;
                }
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        // conservative: cancellation past the cut is not tracked
        let exact = self.exact && other.exact && !dropped;
        Ok(Self::normalized(offset, out, self.order, exact))
    }

    /// Multiplies by the binomial `1 + q^e` (sign `Plus`) or `1 - q^e`.
    pub fn mul_binomial(&self, sign: FactorSign, e: i64) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if e < 0 && !self.exact {
            return Err(SeriesError::PrecisionLoss { order: self.order });
        }
        let s = sign.as_int();
        if e == 0 {
            return Ok(self.scale(&BigInt::from(1 + s)));
        }
        let lo = self.offset.min(self.offset + e);
        if lo < MIN_OFFSET {
            return Err(SeriesError::OffsetOutOfRange { offset: lo });
        }
        let top = self.offset + self.coeffs.len() as i64 - 1;
        let hi = self.order.min(top.max(top + e));
        let mut coeffs = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        for n in lo..=hi {
            let mut c = self.raw(n);
            if let Some(b) = self.raw_ref(n - e) {
                if s > 0 {
                    c += b;
                } else {
                    c -= b;
                }
            }
            coeffs.push(c);
        }
        let exact = self.exact && top + e <= self.order;
        Ok(Self::normalized(lo, coeffs, self.order, exact))
    }

    /// Divides by `1 + q^e` (or `1 - q^e`) via the truncated geometric
    /// expansion. Requires `e >= 1` so the factor has constant term 1.
    pub fn div_binomial(&self, sign: FactorSign, e: i64) -> Result<Self, SeriesError> {
        if e < 1 {
            return Err(SeriesError::NonUnitInverse {
                sign: sign.as_char(),
                exponent: e,
            });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let s = sign.as_int();
        let lo = self.offset;
        let len = (self.order - lo + 1).max(0) as usize;
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        let step = e as usize;
        for i in 0..len {
            let mut c = self.raw(lo + i as i64);
            if i >= step {
                let prev = &out[i - step];
                if s > 0 {
                    c -= prev;
                } else {
                    c += prev;
                }
            }
            out.push(c);
        }
        let mut result = Self::normalized(lo, out, self.order, false);
        // a finite quotient can only arise from the zero series
        result.exact = false;
        Ok(result)
    }

    /// Multiplies by every factor of `spec`, inverting the factors with power
    /// `-1` through their geometric expansions.
    pub fn apply_inverse_factors(&self, spec: &ProductSpec) -> Result<Self, SeriesError> {
        let mut acc = self.clone();
        for factor in spec.factors.iter().filter(|f| f.power == Power::Direct) {
            acc = factor.pochhammer.multiply_into(acc)?;
        }
        for factor in spec.factors.iter().filter(|f| f.power == Power::Inverse) {
            acc = factor.pochhammer.divide_into(acc)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Number of factors in a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

/// `(∓q^shift; q^step)_length`: the product of `1 ± q^{shift + j*step}` for
/// `j` in `0..length`. Sign `Plus` gives `(-q^s;q^m)_n`, `Minus` gives
/// `(q^s;q^m)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochhammerSpec {
    pub sign: FactorSign,
    pub shift: i64,
    pub step: u64,
    pub length: Length,
}

impl PochhammerSpec {
    /// `(-q^shift; q^step)_length`
    pub fn plus(shift: i64, step: u64, length: Length) -> Self {
        PochhammerSpec {
            sign: FactorSign::Plus,
            shift,
            step,
            length,
        }
    }

    /// `(q^shift; q^step)_length`
    pub fn minus(shift: i64, step: u64, length: Length) -> Self {
        PochhammerSpec {
            sign: FactorSign::Minus,
            shift,
            step,
            length,
        }
    }

    /// Exponents of the factors that can affect `acc` up to its order, in
    /// increasing order (negative ones first).
    fn exponents(&self, order: i64, floor: i64) -> Result<Vec<i64>, SeriesError> {
        if self.step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        let step = self.step as i64;
        let mut out = Vec::new();
        let mut low = floor.min(0);
        let mut j: u64 = 0;
        loop {
            if let Length::Finite(n) = self.length {
                if j >= n {
                    break;
                }
            }
            let e = self.shift + j as i64 * step;
            if e < 0 {
                low += e;
            }
            // a factor 1 ± q^e with e beyond order - low is 1 after truncation
            if e > order - low {
                break;
            }
            out.push(e);
            j += 1;
        }
        Ok(out)
    }

    fn multiply_into(&self, mut acc: LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        let order = acc.order;
        for e in self.exponents(order, acc.offset())? {
            acc = acc.mul_binomial(self.sign, e)?;
        }
        Ok(acc)
    }

    fn divide_into(&self, mut acc: LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        let order = acc.order;
        for e in self.exponents(order, acc.offset())? {
            acc = acc.div_binomial(self.sign, e)?;
        }
        Ok(acc)
    }

    /// The expanded product truncated at `order`. `(a;q)_0 = 1`.
    pub fn expand(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        self.multiply_into(LaurentSeries::one(order))
    }
}

/// Convenience wrapper for [`PochhammerSpec::expand`].
pub fn pochhammer(spec: &PochhammerSpec, order: i64) -> Result<LaurentSeries, SeriesError> {
    spec.expand(order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Power {
    Direct,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductFactor {
    pub pochhammer: PochhammerSpec,
    pub power: Power,
}

/// A finite list of q-Pochhammer factors, each raised to `+1` or `-1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    pub factors: Vec<ProductFactor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn times(mut self, pochhammer: PochhammerSpec) -> Self {
        self.factors.push(ProductFactor {
            pochhammer,
            power: Power::Direct,
        });
        self
    }

    pub fn over(mut self, pochhammer: PochhammerSpec) -> Self {
        self.factors.push(ProductFactor {
            pochhammer,
            power: Power::Inverse,
        });
        self
    }

    /// `1 / prod_{r in residues} (q^r; q^modulus)_inf`, the generating
    /// function for partitions into parts congruent to one of `residues`.
    pub fn congruence_parts(residues: &[u64], modulus: u64) -> Self {
        residues.iter().fold(Self::new(), |spec, &r| {
            spec.over(PochhammerSpec::minus(r as i64, modulus, Length::Infinite))
        })
    }

    pub fn expand(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        LaurentSeries::one(order).apply_inverse_factors(self)
    }
}

/// Sums `term(0) + term(1) + ...` until the first term lying entirely above
/// the truncation order. The terms' minimum exponents must grow without
/// bound; `guard` consecutive terms that fail to raise it abort the sum.
pub fn sum_terms<F>(order: i64, guard: usize, mut term: F) -> Result<LaurentSeries, SeriesError>
where
    F: FnMut(u64) -> Result<LaurentSeries, SeriesError>,
{
    let mut acc = LaurentSeries::zero(order);
    let mut best = i64::MIN;
    let mut stalled = 0usize;
    let mut n = 0u64;
    loop {
        let t = term(n)?;
        acc.check_order(&t)?;
        if t.offset() > order {
            break;
        }
        if t.offset() > best {
            best = t.offset();
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= guard {
                return Err(SeriesError::Divergent {
                    exponent: best,
                    terms: n as usize + 1,
                });
            }
        }
        acc = acc.add(&t)?;
        n += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries, lo: i64, hi: i64) -> Vec<i64> {
        s.coefficients(lo, hi)
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn poly(offset: i64, c: &[i64], order: i64) -> LaurentSeries {
        LaurentSeries::from_i64s(offset, c, order).unwrap()
    }

    #[test]
    fn monomial_cases() {
        let one = LaurentSeries::monomial(1, 0, 10);
        assert_eq!(ints(&one, 0, 10), [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let m = LaurentSeries::monomial(2, -1, 10);
        assert_eq!(m.coeff(-1).unwrap(), BigInt::from(2));
        assert_eq!(m.offset(), -1);
        let z = LaurentSeries::monomial(5, 11, 10);
        assert!(z.is_zero());
        assert!(!z.is_exact());
    }

    #[test]
    fn add_and_identity() {
        let a = poly(1, &[1, 1], 10);
        let b = poly(1, &[1], 10);
        assert_eq!(a.add(&b).unwrap(), poly(1, &[2, 1], 10));
        assert_eq!(a.add(&LaurentSeries::zero(10)).unwrap(), a);
        assert_eq!(a.sub(&a).unwrap(), LaurentSeries::zero(10));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = LaurentSeries::one(5);
        let b = LaurentSeries::one(6);
        assert_eq!(a.add(&b), Err(SeriesError::OrderMismatch { left: 5, right: 6 }));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn mul_cases() {
        let a = poly(0, &[1, 1], 10);
        assert_eq!(a.mul(&a).unwrap(), poly(0, &[1, 2, 1], 10));
        let laurent = poly(-1, &[1, 1], 10);
        let q = LaurentSeries::monomial(1, 1, 10);
        assert_eq!(laurent.mul(&q).unwrap(), poly(0, &[1, 1], 10));
    }

    #[test]
    fn laurent_times_truncated_series_is_refused() {
        let geometric = LaurentSeries::one(5).div_binomial(FactorSign::Minus, 1).unwrap();
        let laurent = poly(-1, &[1, 1], 5);
        assert_eq!(laurent.mul(&geometric), Err(SeriesError::PrecisionLoss { order: 5 }));
    }

    #[test]
    fn pochhammer_examples() {
        let p = PochhammerSpec::plus(1, 2, Length::Finite(2)).expand(10).unwrap();
        assert_eq!(ints(&p, 0, 5), [1, 1, 0, 1, 1, 0]);
        let p = PochhammerSpec::plus(-1, 2, Length::Finite(1)).expand(10).unwrap();
        assert_eq!(ints(&p, -1, 1), [1, 1, 0]);
        for n in 1..5 {
            let p = PochhammerSpec::plus(0, 2, Length::Finite(n)).expand(10).unwrap();
            assert_eq!(p.coeff(0).unwrap(), BigInt::from(2));
        }
        let empty = PochhammerSpec::minus(3, 1, Length::Finite(0)).expand(4).unwrap();
        assert_eq!(empty, LaurentSeries::one(4));
    }

    #[test]
    fn distinct_parts_product() {
        let p = PochhammerSpec::plus(1, 1, Length::Infinite).expand(9).unwrap();
        assert_eq!(ints(&p, 0, 9), [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
        let p10 = PochhammerSpec::plus(1, 1, Length::Infinite).expand(10).unwrap();
        assert_eq!(p10.coeff(3).unwrap(), BigInt::from(2));
        assert!(p10.coeff(11).is_err());
        assert_eq!(LaurentSeries::zero(10).coeff(5).unwrap(), BigInt::zero());
    }

    #[test]
    fn laurent_pochhammer_times_prefactor_is_exact() {
        let p = PochhammerSpec::plus(-1, 2, Length::Finite(3)).expand(6).unwrap();
        let t = LaurentSeries::monomial(1, 2, 6).mul(&p).unwrap();
        // (1+q^-1)(1+q)(1+q^3) = q^-1 + 2 + q + q^2 + 2q^3 + q^4
        assert_eq!(ints(&t, 0, 6), [0, 1, 2, 1, 1, 2, 1]);
    }

    #[test]
    fn inverse_factor_examples() {
        let g = ProductSpec::new()
            .over(PochhammerSpec::minus(1, 1, Length::Finite(1)))
            .expand(6)
            .unwrap();
        assert_eq!(ints(&g, 0, 6), [1; 7]);
        let spec = ProductSpec::new().over(PochhammerSpec::minus(0, 1, Length::Finite(1)));
        assert!(matches!(spec.expand(4), Err(SeriesError::NonUnitInverse { .. })));
    }

    #[test]
    fn sum_terms_single_and_divergent() {
        let s = sum_terms(5, DEFAULT_GUARD, |n| {
            Ok(if n == 0 {
                LaurentSeries::one(5)
            } else {
                LaurentSeries::zero(5)
            })
        })
        .unwrap();
        assert_eq!(s, LaurentSeries::one(5));
        let err = sum_terms(5, 4, |_| Ok(LaurentSeries::one(5))).unwrap_err();
        assert!(matches!(err, SeriesError::Divergent { .. }));
    }

    #[test]
    fn display_shows_truncation() {
        let s = poly(0, &[1, 0, 3], 4);
        assert_eq!(s.to_string(), "1 + 3*q^2 + O(q^5)");
    }
}
