//! The built-in identities and the named series catalog.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::terms::{neg_qpoch, qpoch, Quadratic, TermFamily};
use super::{IdentityRecord, Side};
use crate::bijection::{GVariant, HVariant, MapId};
use crate::enumerate::StembridgeVariant;
use crate::series::{Length, PochhammerSpec, ProductSpec};

const B027349: &str = include_str!("../../data/b027349.txt");

fn sum(family: TermFamily) -> Side {
    Side::Sum(family)
}

fn product(spec: ProductSpec) -> Side {
    Side::Product(spec)
}

fn count(class: &str) -> Side {
    Side::count(class)
}

fn inf_plus(shift: i64, step: u64) -> PochhammerSpec {
    PochhammerSpec::plus(shift, step, Length::Infinite)
}

fn inf_minus(shift: i64, step: u64) -> PochhammerSpec {
    PochhammerSpec::minus(shift, step, Length::Infinite)
}

fn congruence(modulus: u64, residues: &[u64]) -> Side {
    product(ProductSpec::congruence_parts(residues, modulus))
}

/// `sum q^{n^2} / (q;q)_n`
fn rr1_sum() -> TermFamily {
    TermFamily::new(Quadratic::new(1, 0, 0)).over(qpoch(1, 1, 1, 0))
}

/// `sum q^{n^2 + b n} (-q;q)_n / (q^2;q^2)_n`
fn rr_over_sum(b: i64) -> TermFamily {
    TermFamily::new(Quadratic::new(1, b, 0))
        .times(neg_qpoch(1, 1, 1, 0))
        .over(qpoch(2, 2, 1, 0))
}

/// `sum q^{kn + n(n-1)/2} / (q;q)_n`
fn distinct_min_sum(k: i64) -> TermFamily {
    TermFamily::new(Quadratic::halved(1, 2 * k - 1, 0)).over(qpoch(1, 1, 1, 0))
}

/// `sum q^{n^2 + b n} (-q;q^2)_n / (q^2;q^2)_n`
fn gg_sum(b: i64) -> TermFamily {
    TermFamily::new(Quadratic::new(1, b, 0))
        .times(neg_qpoch(1, 2, 1, 0))
        .over(qpoch(2, 2, 1, 0))
}

/// `sum q^{n(n+1)} (-q^k;q^2)_n (-q^{beta+2};q^4)_alpha / (q^2;q^2)_n`
fn lebesgue_sum(alpha: i64, beta: i64) -> TermFamily {
    let k = 4 * alpha + beta;
    TermFamily::new(Quadratic::new(1, 1, 0))
        .times(neg_qpoch(k, 2, 1, 0))
        .times(neg_qpoch(beta + 2, 4, 0, alpha))
        .over(qpoch(2, 2, 1, 0))
}

/// `sum q^{n(n+1)} (-q^{k-2};q^2)_{n+1} (-q^{beta+2};q^4)_{alpha-1} / (q^2;q^2)_n`
fn lebesgue_shifted_sum(alpha: i64, beta: i64) -> TermFamily {
    let k = 4 * alpha + beta;
    TermFamily::new(Quadratic::new(1, 1, 0))
        .times(neg_qpoch(k - 2, 2, 1, 1))
        .times(neg_qpoch(beta + 2, 4, 0, alpha - 1))
        .over(qpoch(2, 2, 1, 0))
}

/// `(-q^2;q^2)_inf (-q^{beta+2};q^4)_inf`
fn lebesgue_product(beta: i64) -> ProductSpec {
    ProductSpec::new().times(inf_plus(2, 2)).times(inf_plus(beta + 2, 4))
}

/// The closed form for each residue of `k` modulo 4.
fn lebesgue_case_product(beta: i64) -> ProductSpec {
    match beta {
        -1 => ProductSpec::congruence_parts(&[1, 5, 6], 8),
        0 => ProductSpec::new().times(inf_plus(2, 4)).over(inf_minus(2, 4)),
        1 => ProductSpec::congruence_parts(&[2, 3, 7], 8),
        _ => ProductSpec::congruence_parts(&[2, 4, 6], 8),
    }
}

/// `sum q^{2n^2 + b n} (-q^s;q^4)_n / (q^2;q^2)_{2n}`
fn qgauss_sum(b: i64, s: i64) -> TermFamily {
    TermFamily::new(Quadratic::new(2, b, 0))
        .times(neg_qpoch(s, 4, 1, 0))
        .over(qpoch(2, 2, 2, 0))
}

/// `sum q^{n(n+1)} (-q^{4 alpha + c};q^2)_n (-q^d;q^4)_alpha / (q^2;q^2)_n`
fn lebesgue_gauss_sum(alpha: i64, c: i64, d: i64) -> TermFamily {
    TermFamily::new(Quadratic::new(1, 1, 0))
        .times(neg_qpoch(4 * alpha + c, 2, 1, 0))
        .times(neg_qpoch(d, 4, 0, alpha))
        .over(qpoch(2, 2, 1, 0))
}

/// `sum_{n>=1} q^{n^2} (-q^2;q^2)_{n-1} / (q;q)_{2n}` plus the constant 1.
fn slater121_series() -> Side {
    Side::Linear(vec![
        (
            1,
            sum(TermFamily::new(Quadratic::new(1, 0, 0))
                .from(1)
                .times(neg_qpoch(2, 2, 1, -1))
                .over(qpoch(1, 1, 2, 0))),
        ),
        (1, Side::Constant(1)),
    ])
}

/// `sum q^{n^2 + 2n} (q;q^2)_n / (q;q)_{2n}`
fn a027349_left() -> TermFamily {
    TermFamily::new(Quadratic::new(1, 2, 0))
        .times(qpoch(1, 2, 1, 0))
        .over(qpoch(1, 1, 2, 0))
}

/// `sum q^{n^2} (q;q^2)_{n+1} / (q;q)_{2n}`
fn a027349_right() -> TermFamily {
    TermFamily::new(Quadratic::new(1, 0, 0))
        .times(qpoch(1, 2, 1, 1))
        .over(qpoch(1, 1, 2, 0))
}

fn image(map: MapId, source: &str, target: &str) -> Side {
    Side::Image {
        map,
        source: source.to_string(),
        target: target.to_string(),
    }
}

fn bijection_record(id: &str, statement: &str, map: MapId, source: &str, target: &str) -> IdentityRecord {
    IdentityRecord::new(id, statement)
        .side(source, count(source))
        .side(target, count(target))
        .side(format!("{map}({source}) in {target}"), image(map, source, target))
}

/// Every registered identity in a fixed order; ids are unique.
pub fn builtin_identities() -> Vec<IdentityRecord> {
    let mut out = Vec::new();

    out.push(
        IdentityRecord::new("euler", "distinct parts, odd parts and (-q;q)_inf agree")
            .side("distinct", count("distinct"))
            .side("odd", count("odd"))
            .side("(-q;q)_inf", product(ProductSpec::new().times(inf_plus(1, 1)))),
    );
    for k in 1..=5i64 {
        out.push(
            IdentityRecord::new(
                format!("distinct-over-k{k}"),
                format!(
                    "distinct parts equal overpartitions with distinct non-overlined parts >= {k} \
                     and overlined parts <= {}",
                    k - 1
                ),
            )
            .side("distinct", count("distinct"))
            .side(format!("distinct-over:k={k}"), count(&format!("distinct-over:k={k}")))
            .side(
                "sum*(-q;q)_{k-1}",
                sum(distinct_min_sum(k).times(neg_qpoch(1, 1, 0, k - 1))),
            ),
        );
        out.push(
            IdentityRecord::new(
                format!("distinct-min-k{k}"),
                format!("generating function of distinct parts >= {k}"),
            )
            .side(format!("distinct-min:k={k}"), count(&format!("distinct-min:k={k}")))
            .side("sum", sum(distinct_min_sum(k))),
        );
    }
    out.push(
        IdentityRecord::new(
            "d",
            "distinct parts equal overpartitions with alternating-parity non-overlined parts \
             (smallest odd) and overlined parts <= r",
        )
        .side("distinct", count("distinct"))
        .side("e-over", count("e-over")),
    );
    out.push(
        IdentityRecord::new("frr", "first Rogers-Ramanujan identity, overpartition form")
            .side("rr1", count("rr1"))
            .side("rr1-over", count("rr1-over"))
            .side("sum", sum(rr_over_sum(0)))
            .side("1/(q,q^4;q^5)_inf", congruence(5, &[1, 4])),
    );
    out.push(
        IdentityRecord::new(
            "frr2",
            "gap-2 partitions equal overpartitions with even distinct non-overlined parts and \
             overlined parts <= r + 1",
        )
        .side("rr1", count("rr1"))
        .side("rr1-star-over", count("rr1-star-over"))
        .side("sum", sum(rr1_sum())),
    );
    out.push(
        IdentityRecord::new("srr", "second Rogers-Ramanujan identity, overpartition form")
            .side("rr2", count("rr2"))
            .side("rr2-over", count("rr2-over"))
            .side("sum", sum(rr_over_sum(1)))
            .side("1/(q^2,q^3;q^5)_inf", congruence(5, &[2, 3])),
    );
    out.push(
        IdentityRecord::new(
            "rr2-difference",
            "gap-2 partitions without 1 as a difference of two sums",
        )
        .side("rr2", count("rr2"))
        .side(
            "sum q^{n^2}/(q)_n - sum q^{n^2+2n+1}/(q)_n",
            Side::Linear(vec![
                (1, sum(rr1_sum())),
                (
                    -1,
                    sum(TermFamily::new(Quadratic::new(1, 2, 1)).over(qpoch(1, 1, 1, 0))),
                ),
            ]),
        )
        .claim(
            "sum q^{n^2}(-q;q)_n(1-q^{n+1})/(q^2;q^2)_n",
            Side::Linear(vec![
                (1, sum(rr_over_sum(0))),
                (
                    -1,
                    sum(TermFamily::new(Quadratic::new(1, 1, 1))
                        .times(neg_qpoch(1, 1, 1, 0))
                        .over(qpoch(2, 2, 1, 0))),
                ),
            ]),
        )
        .note("the intermediate form with (1-q^{n+1}) only agrees once the factor is (1-q^{2n+1})")
        .side(
            "sum q^{n^2}(-q;q)_n(q;q^2)_{n+1}/(q;q)_{2n}",
            sum(TermFamily::new(Quadratic::new(1, 0, 0))
                .times(neg_qpoch(1, 1, 1, 0))
                .times(qpoch(1, 2, 1, 1))
                .over(qpoch(1, 1, 2, 0))),
        ),
    );
    out.push(
        IdentityRecord::new(
            "a027349",
            "two sums for partitions of n+1 into distinct odd parts, the least being 1",
        )
        .side("sum q^{n^2+2n}(q;q^2)_n/(q;q)_{2n}", sum(a027349_left()))
        .side("sum q^{n^2}(q;q^2)_{n+1}/(q;q)_{2n}", sum(a027349_right()))
        .side(
            "distinct-odd-with-1(n+1)",
            Side::Shifted(Box::new(count("distinct-odd-with-1")), 1),
        ),
    );
    out.push(
        IdentityRecord::new("a027349-bfile", "series against the vendored A027349 b-file")
            .side("sum q^{n^2}(q;q^2)_{n+1}/(q;q)_{2n}", sum(a027349_right()))
            .side(
                "b027349",
                Side::BFile {
                    name: "b027349.txt".into(),
                    contents: B027349,
                    offset: 0,
                },
            )
            .note("b-file generated locally; a(n) counts partitions of n+1"),
    );
    out.push(
        IdentityRecord::new("fgg", "first Goellnitz-Gordon identity, overpartition and pair forms")
            .side("gg1", count("gg1"))
            .side("gg1-over", count("gg1-over"))
            .side("1/(q,q^4,q^7;q^8)_inf", congruence(8, &[1, 4, 7]))
            .side("stembridge:gg1", Side::Pairs(StembridgeVariant::Gg1)),
    );
    out.push(
        IdentityRecord::new("fgg-sum", "first Goellnitz-Gordon sum")
            .side("gg1", count("gg1"))
            .side("sum", sum(gg_sum(0))),
    );
    out.push(
        IdentityRecord::new("sgg", "second Goellnitz-Gordon identity, overpartition and pair forms")
            .side("gg2", count("gg2"))
            .side("gg2-over", count("gg2-over"))
            .side("1/(q^3,q^4,q^5;q^8)_inf", congruence(8, &[3, 4, 5]))
            .side("stembridge:gg2", Side::Pairs(StembridgeVariant::Gg2)),
    );
    out.push(
        IdentityRecord::new("sgg-sum", "second Goellnitz-Gordon sum")
            .side("gg2", count("gg2"))
            .side("sum", sum(gg_sum(2))),
    );
    out.push(
        IdentityRecord::new("dgg", "Goellnitz-Gordon partitions with smallest part 1 or 2")
            .side("dgg12", count("dgg12"))
            .side("dgg12-over", count("dgg12-over"))
            .side(
                "gg1 sum - gg2 sum",
                Side::Linear(vec![(1, sum(gg_sum(0))), (-1, sum(gg_sum(2)))]),
            )
            .side(
                "sum_{n>=1} q^{n^2}(-q;q^2)_n/(q^2;q^2)_{n-1}",
                sum(TermFamily::new(Quadratic::new(1, 0, 0))
                    .from(1)
                    .times(neg_qpoch(1, 2, 1, 0))
                    .over(qpoch(2, 2, 1, -1))),
            ),
    );
    out.push(
        IdentityRecord::new("lg", "first little Goellnitz identity, overpartition and pair forms")
            .side("lg1", count("lg1"))
            .side("lg1-over", count("lg1-over"))
            .side("(-q^2;q^2)_inf(-q;q^4)_inf", product(lebesgue_product(-1)))
            .side("stembridge:lg1", Side::Pairs(StembridgeVariant::Lg1))
            .side(
                "sum q^{n(n+1)}(-q^-1;q^2)_n/(q^2;q^2)_n",
                sum(TermFamily::new(Quadratic::new(1, 1, 0))
                    .times(neg_qpoch(-1, 2, 1, 0))
                    .over(qpoch(2, 2, 1, 0))),
            )
            .side(
                "sum q^{n(n+1)}(-q;q^2)_{n+1}/(q^2;q^2)_n",
                sum(TermFamily::new(Quadratic::new(1, 1, 0))
                    .times(neg_qpoch(1, 2, 1, 1))
                    .over(qpoch(2, 2, 1, 0))),
            ),
    );
    out.push(
        IdentityRecord::new("slg", "second little Goellnitz identity, overpartition and pair forms")
            .side("lg2", count("lg2"))
            .side("lg2-over", count("lg2-over"))
            .side("1/(q^2,q^3,q^7;q^8)_inf", congruence(8, &[2, 3, 7]))
            .side("stembridge:lg2", Side::Pairs(StembridgeVariant::Lg2))
            .side("sum", sum(gg_sum(1))),
    );
    for (id, class, classes) in [
        ("classical-rr1", "rr1", &["rr1-product"][..]),
        ("classical-rr2", "rr2", &["rr2-product"][..]),
        ("classical-gg1", "gg1", &["gg1-product"][..]),
        ("classical-gg2", "gg2", &["gg2-product"][..]),
        ("classical-lg1", "lg1", &["lg1-product", "lg1-distinct-mod4"][..]),
        ("classical-lg2", "lg2", &["lg2-product", "lg2-distinct-mod4"][..]),
    ] {
        let mut r =
            IdentityRecord::new(id, format!("{class} against its congruence-class forms")).side(class, count(class));
        for c in classes {
            r = r.side(*c, count(c));
        }
        out.push(r);
    }
    for alpha in 0..=3i64 {
        for beta in -1..=2i64 {
            let k = 4 * alpha + beta;
            if k == 0 {
                continue;
            }
            let class = format!("lebesgue:a={alpha},b={beta}");
            let mut r = IdentityRecord::new(class.clone(), format!("Lebesgue family with k = {k}"))
                .side("sum", sum(lebesgue_sum(alpha, beta)));
            if alpha >= 1 {
                r = r.side("shifted sum", sum(lebesgue_shifted_sum(alpha, beta)));
            }
            r = r
                .side("(-q^2;q^2)_inf(-q^{b+2};q^4)_inf", product(lebesgue_product(beta)))
                .side("case product", product(lebesgue_case_product(beta)))
                .claim(class.clone(), count(&class));
            if k < 0 {
                r = r.note("k = -1 gives the first little Goellnitz sum, whose overpartitions are lg1-over");
            }
            out.push(r);
        }
    }
    let k0_twice = Side::Linear(vec![
        (1, Side::Constant(1)),
        (
            1,
            Side::Scaled(
                Box::new(sum(TermFamily::new(Quadratic::new(1, 1, 0))
                    .from(1)
                    .times(neg_qpoch(2, 2, 1, -1))
                    .over(qpoch(2, 2, 1, 0)))),
                BigRational::from_integer(BigInt::from(2)),
            ),
        ),
    ]);
    out.push(
        IdentityRecord::new("lebesgue-k0", "Lebesgue family with k = 0 as twice a sum")
            .side("sum", sum(lebesgue_sum(0, 0)))
            .side("1 + 2*sum_{n>=1}", k0_twice)
            .side("(-q^2;q^2)_inf(-q^2;q^4)_inf", product(lebesgue_product(0)))
            .note("(-1;q^2)_n = 2(-q^2;q^2)_{n-1} only for n >= 1; the n = 0 term is the constant 1"),
    );
    out.push(
        IdentityRecord::new("lebesgue-k0-over", "overpartition reading of the halved k = 0 sum")
            .side(
                "1 + sum_{n>=1}",
                Side::Linear(vec![
                    (
                        1,
                        sum(TermFamily::new(Quadratic::new(1, 1, 0))
                            .from(1)
                            .times(neg_qpoch(2, 2, 1, -1))
                            .over(qpoch(2, 2, 1, 0))),
                    ),
                    (1, Side::Constant(1)),
                ]),
            )
            .claim("k0-over", count("k0-over"))
            .note("the halved sum starts at n = 1 and the constant 1 counts the empty overpartition"),
    );
    out.push(
        IdentityRecord::new("qgauss1", "q-Gauss specialization H(-q,q^2;q^4)")
            .side("sum", sum(qgauss_sum(-1, 1)))
            .side("1/(q,q^5,q^6;q^8)_inf", congruence(8, &[1, 5, 6])),
    );
    out.push(
        IdentityRecord::new("qgauss2", "q-Gauss specialization H(-q^-1,q^2;q^4)")
            .side("sum", sum(qgauss_sum(1, -1)))
            .side("1/(q^2,q^3,q^7;q^8)_inf", congruence(8, &[2, 3, 7])),
    );
    out.push(
        IdentityRecord::new("qgauss3", "q-Gauss specialization H(-1,q^2;q^4)")
            .side("sum", sum(qgauss_sum(0, 0)))
            .side(
                "(-q^2;q^4)_inf/(q^2;q^4)_inf",
                product(ProductSpec::new().times(inf_plus(2, 4)).over(inf_minus(2, 4))),
            )
            .side("over-mod4-2", count("over-mod4-2")),
    );
    out.push(
        IdentityRecord::new("qgauss4", "q-Gauss specialization H(-q^-2,q^2;q^4)")
            .side("sum", sum(qgauss_sum(2, -2)))
            .side("1/(q^2,q^4,q^6;q^8)_inf", congruence(8, &[2, 4, 6])),
    );
    out.push(
        IdentityRecord::new("qgauss5", "q-Gauss specialization H(-q^2,q^4;q^4)")
            .side(
                "sum",
                sum(TermFamily::new(Quadratic::new(2, 0, 0))
                    .times(neg_qpoch(2, 4, 1, 0))
                    .over(qpoch(4, 4, 1, 0).squared())),
            )
            .side("1/(q^2,q^6,q^8;q^8)_inf", congruence(8, &[2, 6, 8])),
    );
    for alpha in 0..=3i64 {
        out.push(
            IdentityRecord::new(
                format!("qgauss3-lebesgue-a{alpha}"),
                format!("H(-1,q^2;q^4) against the Lebesgue sum with k = {}", 4 * alpha),
            )
            .side("sum q^{2n^2}(-1;q^4)_n/(q^2;q^2)_{2n}", sum(qgauss_sum(0, 0)))
            .side("Lebesgue sum with (-q^2;q^4)_a", sum(lebesgue_gauss_sum(alpha, 0, 2)))
            .claim("Lebesgue sum with (-q^4;q^4)_a", sum(lebesgue_gauss_sum(alpha, 0, 4)))
            .note("the finite factor must be (-q^2;q^4)_a, i.e. (-q^{b+2};q^4)_a with b = 0"),
        );
        out.push(
            IdentityRecord::new(
                format!("qgauss4-lebesgue-a{alpha}"),
                format!("H(-q^-2,q^2;q^4) against the Lebesgue sum with k = {}", 4 * alpha + 2),
            )
            .side("sum q^{2n^2+2n}(-q^-2;q^4)_n/(q^2;q^2)_{2n}", sum(qgauss_sum(2, -2)))
            .side("Lebesgue sum with (-q^4;q^4)_a", sum(lebesgue_gauss_sum(alpha, 2, 4))),
        );
    }
    out.push(
        IdentityRecord::new("slater47", "Slater's sum with (-1;q^2)_n over (q;q)_{2n}")
            .side(
                "sum",
                sum(TermFamily::new(Quadratic::new(1, 0, 0))
                    .times(neg_qpoch(0, 2, 1, 0))
                    .over(qpoch(1, 1, 2, 0))),
            )
            .side(
                "(-q;q^2)_inf/(q;q^2)_inf",
                product(ProductSpec::new().times(inf_plus(1, 2)).over(inf_minus(1, 2))),
            )
            .side(
                "(-q;q^2)(q^2,q^6;q^8)(q^4;q^4)/(q;q)",
                product(
                    ProductSpec::new()
                        .times(inf_plus(1, 2))
                        .times(inf_minus(2, 8))
                        .times(inf_minus(6, 8))
                        .times(inf_minus(4, 4))
                        .over(inf_minus(1, 1)),
                ),
            ),
    );
    out.push(
        IdentityRecord::new("slater121", "Slater's sum with (-q^2;q^2)_{n-1} over (q;q)_{2n}")
            .side("1 + sum_{n>=1}", slater121_series())
            .side(
                "(q^2,q^14,q^16;q^16)(q^12,q^20;q^32)/(q;q)",
                product(
                    ProductSpec::new()
                        .times(inf_minus(2, 16))
                        .times(inf_minus(14, 16))
                        .times(inf_minus(16, 16))
                        .times(inf_minus(12, 32))
                        .times(inf_minus(20, 32))
                        .over(inf_minus(1, 1)),
                ),
            )
            .side(
                "(q^2,q^12,q^14,q^16,q^18,q^20,q^30,q^32;q^32)/(q;q)",
                product(
                    [2, 12, 14, 16, 18, 20, 30, 32]
                        .into_iter()
                        .fold(ProductSpec::new(), |p, r| p.times(inf_minus(r, 32)))
                        .over(inf_minus(1, 1)),
                ),
            )
            .claim("slater121-over", count("slater121-over"))
            .note("the n = 0 term is taken as the constant 1"),
    );
    out.push(
        IdentityRecord::new(
            "almost-self-conjugate",
            "distinct even parts equal almost-self-conjugate partitions",
        )
        .side("distinct-even", count("distinct-even"))
        .side(
            "almost-self-conjugate + [n=0]",
            Side::Linear(vec![(1, count("almost-self-conjugate")), (1, Side::Constant(1))]),
        )
        .side("(-q^2;q^2)_inf", product(ProductSpec::new().times(inf_plus(2, 2))))
        .note("the empty partition is not almost-self-conjugate, so n = 0 is supplied as 1"),
    );
    for (id, statement, map, source, target) in [
        (
            "bij-f",
            "f maps distinct parts onto e-over",
            MapId::F,
            "distinct",
            "e-over",
        ),
        (
            "bij-h-oe",
            "h (odd-even) maps rr1 onto rr1-over",
            MapId::H(HVariant::Oe),
            "rr1",
            "rr1-over",
        ),
        (
            "bij-h-eo",
            "h (even-odd) maps rr1 onto rr1-star-over",
            MapId::H(HVariant::Eo),
            "rr1",
            "rr1-star-over",
        ),
        (
            "bij-h-eo-rr2",
            "h (even-odd) maps rr2 onto rr2-over",
            MapId::H(HVariant::Eo),
            "rr2",
            "rr2-over",
        ),
        (
            "bij-g-gg1",
            "g maps gg1 onto gg1-over",
            MapId::G(GVariant::Gg),
            "gg1",
            "gg1-over",
        ),
        (
            "bij-g-gg2",
            "g maps gg2 onto gg2-over",
            MapId::G(GVariant::Gg),
            "gg2",
            "gg2-over",
        ),
        (
            "bij-g-dgg",
            "g maps dgg12 onto dgg12-over",
            MapId::G(GVariant::Gg),
            "dgg12",
            "dgg12-over",
        ),
        (
            "bij-g-lg1",
            "g (odd parity) maps lg1 onto lg1-over",
            MapId::G(GVariant::Lg),
            "lg1",
            "lg1-over",
        ),
        (
            "bij-g-lg2",
            "g (odd parity) maps lg2 onto lg2-over",
            MapId::G(GVariant::Lg),
            "lg2",
            "lg2-over",
        ),
    ] {
        out.push(bijection_record(id, statement, map, source, target));
    }
    out
}

pub fn identity_ids() -> Vec<String> {
    builtin_identities().into_iter().map(|r| r.id).collect()
}

pub fn lookup_identity(id: &str) -> Option<IdentityRecord> {
    builtin_identities().into_iter().find(|r| r.id == id)
}

/// Named series for coefficient extraction.
pub const SERIES_IDS: &[&str] = &[
    "distinct-product",
    "rr1-sum",
    "rr2-sum",
    "rr1-over-sum",
    "rr2-over-sum",
    "rr1-product",
    "rr2-product",
    "gg1-sum",
    "gg2-sum",
    "gg1-product",
    "gg2-product",
    "dgg12-sum",
    "lg1-sum",
    "lg1-product",
    "lg2-sum",
    "lg2-product",
    "a027349",
    "a027349-left",
    "qgauss1-sum",
    "qgauss2-sum",
    "qgauss3-sum",
    "qgauss4-sum",
    "qgauss5-sum",
    "slater47-sum",
    "slater121-sum",
    "k0-sum",
];

pub fn lookup_series(id: &str) -> Option<Side> {
    let side = match id {
        "distinct-product" => product(ProductSpec::new().times(inf_plus(1, 1))),
        "rr1-sum" => sum(rr1_sum()),
        "rr2-sum" => sum(TermFamily::new(Quadratic::new(1, 1, 0)).over(qpoch(1, 1, 1, 0))),
        "rr1-over-sum" => sum(rr_over_sum(0)),
        "rr2-over-sum" => sum(rr_over_sum(1)),
        "rr1-product" => congruence(5, &[1, 4]),
        "rr2-product" => congruence(5, &[2, 3]),
        "gg1-sum" => sum(gg_sum(0)),
        "gg2-sum" => sum(gg_sum(2)),
        "gg1-product" => congruence(8, &[1, 4, 7]),
        "gg2-product" => congruence(8, &[3, 4, 5]),
        "dgg12-sum" => sum(TermFamily::new(Quadratic::new(1, 0, 0))
            .from(1)
            .times(neg_qpoch(1, 2, 1, 0))
            .over(qpoch(2, 2, 1, -1))),
        "lg1-sum" => sum(TermFamily::new(Quadratic::new(1, 1, 0))
            .times(neg_qpoch(-1, 2, 1, 0))
            .over(qpoch(2, 2, 1, 0))),
        "lg1-product" => product(lebesgue_product(-1)),
        "lg2-sum" => sum(gg_sum(1)),
        "lg2-product" => congruence(8, &[2, 3, 7]),
        "a027349" => sum(a027349_right()),
        "a027349-left" => sum(a027349_left()),
        "qgauss1-sum" => sum(qgauss_sum(-1, 1)),
        "qgauss2-sum" => sum(qgauss_sum(1, -1)),
        "qgauss3-sum" => sum(qgauss_sum(0, 0)),
        "qgauss4-sum" => sum(qgauss_sum(2, -2)),
        "qgauss5-sum" => sum(TermFamily::new(Quadratic::new(2, 0, 0))
            .times(neg_qpoch(2, 4, 1, 0))
            .over(qpoch(4, 4, 1, 0).squared())),
        "slater47-sum" => sum(TermFamily::new(Quadratic::new(1, 0, 0))
            .times(neg_qpoch(0, 2, 1, 0))
            .over(qpoch(1, 1, 2, 0))),
        "slater121-sum" => slater121_series(),
        "k0-sum" => sum(lebesgue_sum(0, 0)),
        _ => return None,
    };
    Some(side)
}
