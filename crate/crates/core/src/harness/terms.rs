//! Term families `sum_{n >= start} c * q^{e(n)} * prod_i (a_i; q^{m_i})_{len_i(n)}^{±p_i}`
//! where `e(n)` is a quadratic with rational coefficients and each length is
//! affine in `n`.

use std::fmt;

use crate::series::{
    sum_terms, FactorSign, LaurentSeries, Length, PochhammerSpec, ProductSpec, SeriesError, DEFAULT_GUARD,
};

/// `(a n^2 + b n + c) / den`, required to be an integer for every `n` used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadratic {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub den: i64,
}

impl Quadratic {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Quadratic { a, b, c, den: 1 }
    }

    pub const fn halved(a: i64, b: i64, c: i64) -> Self {
        Quadratic { a, b, c, den: 2 }
    }

    pub fn at(&self, n: i64) -> Result<i64, SeriesError> {
        let num = self.a * n * n + self.b * n + self.c;
        if num % self.den != 0 {
            return Err(SeriesError::NonIntegralExponent {
                numerator: num,
                denominator: self.den,
            });
        }
        Ok(num / self.den)
    }
}

/// `(∓q^shift; q^step)_{slope*n + intercept}` raised to `±power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorTemplate {
    pub sign: FactorSign,
    pub shift: i64,
    pub step: u64,
    pub slope: i64,
    pub intercept: i64,
    pub power: u32,
    pub inverse: bool,
}

impl FactorTemplate {
    /// `(-q^shift; q^step)_{slope*n + intercept}`
    pub const fn plus(shift: i64, step: u64, slope: i64, intercept: i64) -> Self {
        FactorTemplate {
            sign: FactorSign::Plus,
            shift,
            step,
            slope,
            intercept,
            power: 1,
            inverse: false,
        }
    }

    /// `(q^shift; q^step)_{slope*n + intercept}`
    pub const fn minus(shift: i64, step: u64, slope: i64, intercept: i64) -> Self {
        FactorTemplate {
            sign: FactorSign::Minus,
            shift,
            step,
            slope,
            intercept,
            power: 1,
            inverse: false,
        }
    }

    pub const fn inverted(mut self) -> Self {
        self.inverse = true;
        self
    }

    pub const fn squared(mut self) -> Self {
        self.power = 2;
        self
    }

    fn length(&self, n: i64) -> Result<u64, SeriesError> {
        let len = self.slope * n + self.intercept;
        u64::try_from(len).map_err(|_| SeriesError::NegativeLength(len))
    }

    /// Total of the negative exponents this factor can contribute at `n`.
    fn negative_reach(&self, n: i64) -> Result<i64, SeriesError> {
        if self.inverse {
            return Ok(0);
        }
        let len = self.length(n)? as i64;
        let reach: i64 = (0..len)
            .map(|j| self.shift + j * self.step as i64)
            .take_while(|&e| e < 0)
            .map(|e| -e)
            .sum();
        Ok(reach * self.power as i64)
    }
}

/// A summable family of terms. `scale` multiplies every term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermFamily {
    pub start: u64,
    pub scale: i64,
    pub exponent: Quadratic,
    pub factors: Vec<FactorTemplate>,
}

impl TermFamily {
    pub fn new(exponent: Quadratic) -> Self {
        TermFamily {
            start: 0,
            scale: 1,
            exponent,
            factors: Vec::new(),
        }
    }

    pub fn from(mut self, start: u64) -> Self {
        self.start = start;
        self
    }

    pub fn times(mut self, factor: FactorTemplate) -> Self {
        self.factors.push(factor);
        self
    }

    pub fn over(self, factor: FactorTemplate) -> Self {
        self.times(factor.inverted())
    }

    fn product(&self, n: i64) -> Result<ProductSpec, SeriesError> {
        let mut direct: Vec<&FactorTemplate> = self.factors.iter().filter(|f| !f.inverse).collect();
        // factors reaching below q^0 go first, while nothing has been truncated
        direct.sort_by_key(|f| f.shift);
        let inverse = self.factors.iter().filter(|f| f.inverse);
        let mut spec = ProductSpec::new();
        for f in direct.into_iter().chain(inverse) {
            let poch = PochhammerSpec {
                sign: f.sign,
                shift: f.shift,
                step: f.step,
                length: Length::Finite(f.length(n)?),
            };
            for _ in 0..f.power {
                spec = if f.inverse { spec.over(poch) } else { spec.times(poch) };
            }
        }
        Ok(spec)
    }

    /// Term `n` at truncation order `order`.
    pub fn term(&self, n: u64, order: i64) -> Result<LaurentSeries, SeriesError> {
        let n = n as i64;
        let e = self.exponent.at(n)?;
        LaurentSeries::monomial(self.scale, e, order).apply_inverse_factors(&self.product(n)?)
    }

    /// The sum truncated at `order`. Terms are expanded with enough headroom
    /// that negative exponents inside the factors cannot pull dropped
    /// coefficients back into range.
    pub fn sum(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        let mut headroom = 0i64;
        let mut n = self.start as i64;
        // the reach is nondecreasing in n and bounded once lengths pass the
        // negative factors, so probing a few terms ahead is enough
        loop {
            let reach: i64 = self
                .factors
                .iter()
                .map(|f| f.negative_reach(n))
                .sum::<Result<i64, _>>()?;
            if reach <= headroom && n > self.start as i64 + 4 {
                break;
            }
            headroom = headroom.max(reach);
            n += 1;
        }
        let work = order + headroom;
        let start = self.start;
        sum_terms(work, DEFAULT_GUARD, |i| self.term(start + i, work))?.truncate(order)
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("n^2".to_string()),
            a => parts.push(format!("{a}n^2")),
        }
        match self.b {
            0 => {}
            1 => parts.push("n".to_string()),
            -1 => parts.push("-n".to_string()),
            b => parts.push(format!("{b}n")),
        }
        if self.c != 0 || parts.is_empty() {
            parts.push(self.c.to_string());
        }
        let body = parts.join("+").replace("+-", "-");
        if self.den == 1 {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

impl fmt::Display for FactorTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match (self.sign, self.shift) {
            (FactorSign::Plus, 0) => "-1".to_string(),
            (FactorSign::Minus, 0) => "1".to_string(),
            (FactorSign::Plus, 1) => "-q".to_string(),
            (FactorSign::Minus, 1) => "q".to_string(),
            (FactorSign::Plus, s) => format!("-q^{s}"),
            (FactorSign::Minus, s) => format!("q^{s}"),
        };
        let q = if self.step == 1 {
            "q".to_string()
        } else {
            format!("q^{}", self.step)
        };
        let len = match (self.slope, self.intercept) {
            (0, c) => c.to_string(),
            (1, 0) => "n".to_string(),
            (s, 0) => format!("{s}n"),
            (1, c) if c > 0 => format!("n+{c}"),
            (1, c) => format!("n{c}"),
            (s, c) if c > 0 => format!("{s}n+{c}"),
            (s, c) => format!("{s}n{c}"),
        };
        let len = if len.len() > 1 { format!("{{{len}}}") } else { len };
        write!(f, "({a};{q})_{len}")?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

impl fmt::Display for TermFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale != 1 {
            write!(f, "{} * ", self.scale)?;
        }
        write!(f, "sum_{{n>={}}} q^{{{}}}", self.start, self.exponent)?;
        for factor in self.factors.iter().filter(|x| !x.inverse) {
            write!(f, " {factor}")?;
        }
        let denominators: Vec<String> = self
            .factors
            .iter()
            .filter(|x| x.inverse)
            .map(ToString::to_string)
            .collect();
        if !denominators.is_empty() {
            write!(f, " / {}", denominators.join(" "))?;
        }
        Ok(())
    }
}

/// Shorthand for `(q^shift; q^step)_{slope*n + intercept}`, the usual
/// denominator.
pub fn qpoch(shift: i64, step: u64, slope: i64, intercept: i64) -> FactorTemplate {
    FactorTemplate::minus(shift, step, slope, intercept)
}

/// Shorthand for `(-q^shift; q^step)_{slope*n + intercept}`.
pub fn neg_qpoch(shift: i64, step: u64, slope: i64, intercept: i64) -> FactorTemplate {
    FactorTemplate::plus(shift, step, slope, intercept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(s: &LaurentSeries, hi: i64) -> Vec<i64> {
        s.coefficients(0, hi)
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn rogers_ramanujan_sums() {
        let rr1 = TermFamily::new(Quadratic::new(1, 0, 0)).over(qpoch(1, 1, 1, 0));
        assert_eq!(small(&rr1.sum(8).unwrap(), 8), [1, 1, 1, 1, 2, 2, 3, 3, 4]);
        let rr2 = TermFamily::new(Quadratic::new(1, 1, 0)).over(qpoch(1, 1, 1, 0));
        assert_eq!(small(&rr2.sum(8).unwrap(), 8), [1, 0, 1, 1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn laurent_family_has_no_negative_part() {
        // sum q^{n(n+1)} (-q^{-1};q^2)_n / (q^2;q^2)_n
        let lg1 = TermFamily::new(Quadratic::new(1, 1, 0))
            .times(neg_qpoch(-1, 2, 1, 0))
            .over(qpoch(2, 2, 1, 0));
        let s = lg1.sum(12).unwrap();
        assert!(s.offset() >= 0);
        // a term q^{N+1}(1 + q^{-1}) still reaches q^N
        let at_edge = lg1.sum(2).unwrap();
        assert_eq!(small(&at_edge, 2), small(&s, 2));
    }

    #[test]
    fn rejects_non_integral_exponents() {
        let bad = TermFamily::new(Quadratic::halved(1, 0, 0));
        assert!(matches!(bad.sum(4), Err(SeriesError::NonIntegralExponent { .. })));
    }

    #[test]
    fn display_is_readable() {
        let f = TermFamily::new(Quadratic::new(1, 1, 0))
            .times(neg_qpoch(-1, 2, 1, 0))
            .over(qpoch(2, 2, 1, 0));
        assert_eq!(f.to_string(), "sum_{n>=0} q^{n^2+n} (-q^-1;q^2)_n / (q^2;q^2)_n");
    }
}
