//! Named partition and overpartition classes, addressed by stable string ids.

use std::fmt;

use crate::enumerate::{
    count_stembridge_pairs_upto, stembridge_pairs, OverlineRule, OverpartitionClass, Parity, PartitionClass,
    StembridgeVariant,
};
use crate::overpartition::Overpartition;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    Partitions(PartitionClass),
    Overpartitions(OverpartitionClass),
    /// Partitions equal to their conjugate.
    SelfConjugate,
    /// Partitions whose Frobenius top row is the bottom row plus one.
    AlmostSelfConjugate,
    Stembridge(StembridgeVariant),
}

/// One enumerated object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassMember {
    Partition(Partition),
    Overpartition(Overpartition),
    Pair(Partition, Partition),
}

impl fmt::Display for ClassMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassMember::Partition(p) => write!(f, "{p}"),
            ClassMember::Overpartition(o) => write!(f, "{o}"),
            ClassMember::Pair(s, t) => write!(f, "{s}|{t}"),
        }
    }
}

impl ClassSpec {
    pub fn enumerate(&self, n: u64) -> Vec<ClassMember> {
        match self {
            ClassSpec::Partitions(c) => c.enumerate(n).into_iter().map(ClassMember::Partition).collect(),
            ClassSpec::Overpartitions(c) => c.enumerate(n).into_iter().map(ClassMember::Overpartition).collect(),
            ClassSpec::SelfConjugate => PartitionClass::unrestricted()
                .enumerate(n)
                .into_iter()
                .filter(Partition::is_self_conjugate)
                .map(ClassMember::Partition)
                .collect(),
            ClassSpec::AlmostSelfConjugate => PartitionClass::unrestricted()
                .enumerate(n)
                .into_iter()
                .filter(Partition::is_almost_self_conjugate)
                .map(ClassMember::Partition)
                .collect(),
            ClassSpec::Stembridge(v) => stembridge_pairs(n, *v)
                .into_iter()
                .map(|(s, t)| ClassMember::Pair(s, t))
                .collect(),
        }
    }

    pub fn count(&self, n: u64) -> u64 {
        match self {
            ClassSpec::Partitions(c) => c.count(n),
            ClassSpec::Overpartitions(c) => c.count(n),
            ClassSpec::Stembridge(v) => count_stembridge_pairs_upto(n, *v)[n as usize],
            _ => self.enumerate(n).len() as u64,
        }
    }

    /// Counts for every weight `0..=max_n`.
    pub fn counts_upto(&self, max_n: u64) -> Vec<u64> {
        match self {
            ClassSpec::Stembridge(v) => count_stembridge_pairs_upto(max_n, *v),
            _ => (0..=max_n).map(|n| self.count(n)).collect(),
        }
    }

    pub fn contains_partition(&self, p: &Partition) -> bool {
        match self {
            ClassSpec::Partitions(c) => c.contains(p),
            ClassSpec::Overpartitions(c) => c.contains(&Overpartition::plain(p.clone())),
            ClassSpec::SelfConjugate => p.is_self_conjugate(),
            ClassSpec::AlmostSelfConjugate => p.is_almost_self_conjugate(),
            ClassSpec::Stembridge(_) => false,
        }
    }

    pub fn contains_overpartition(&self, o: &Overpartition) -> bool {
        match self {
            ClassSpec::Overpartitions(c) => c.contains(o),
            _ => o.overlined().is_empty() && self.contains_partition(o.nonoverlined()),
        }
    }
}

fn gap2() -> PartitionClass {
    PartitionClass::unrestricted().with_min_gap(2)
}

fn distinct_odd() -> PartitionClass {
    PartitionClass::distinct().with_parity(Parity::AllOdd)
}

fn distinct_even() -> PartitionClass {
    PartitionClass::distinct().with_parity(Parity::AllEven)
}

fn over(base: PartitionClass, rules: Vec<OverlineRule>) -> ClassSpec {
    ClassSpec::Overpartitions(OverpartitionClass::new(base, rules))
}

fn parts(c: PartitionClass) -> ClassSpec {
    ClassSpec::Partitions(c)
}

fn congruence(modulus: u32, residues: &[u32]) -> ClassSpec {
    parts(PartitionClass::unrestricted().with_residues(modulus, residues))
}

/// Overpartitions with distinct even non-overlined parts whose overlined
/// parts at or above `k` share the parity of `k` and are at most `2r + k - 2`,
/// and whose overlined parts below `k` are congruent to `beta + 2` mod 4.
pub fn lebesgue_class(alpha: u32, beta: i64) -> ClassSpec {
    let k = 4 * alpha as i64 + beta;
    let low = k.max(1) as u32;
    let upper = OverlineRule::within(low, None)
        .with_residues(2, &[k.rem_euclid(2) as u32])
        .capped(2, k - 2);
    let mut rules = vec![upper];
    if k > 1 {
        rules.push(OverlineRule::within(1, Some(k as u32 - 1)).with_residues(4, &[(beta + 2).rem_euclid(4) as u32]));
    }
    over(distinct_even(), rules)
}

/// Static class ids; parameterized families are listed with a sample value.
pub const CLASS_IDS: &[&str] = &[
    "unrestricted",
    "unrestricted-over",
    "distinct",
    "odd",
    "distinct-odd",
    "distinct-even",
    "distinct-min:k=2",
    "distinct-over:k=2",
    "e-over",
    "rr1",
    "rr1-over",
    "rr1-star-over",
    "rr2",
    "rr2-over",
    "rr1-product",
    "rr2-product",
    "gg1",
    "gg1-over",
    "gg2",
    "gg2-over",
    "gg1-product",
    "gg2-product",
    "dgg12",
    "dgg12-over",
    "lg1",
    "lg1-over",
    "lg2",
    "lg2-over",
    "lg1-product",
    "lg2-product",
    "lg1-distinct-mod4",
    "lg2-distinct-mod4",
    "lebesgue:a=1,b=-1",
    "k0-over",
    "slater121-over",
    "distinct-odd-with-1",
    "over-mod4-2",
    "self-conjugate",
    "almost-self-conjugate",
    "stembridge:gg1",
    "stembridge:gg2",
    "stembridge:lg1",
    "stembridge:lg2",
];

fn parse_k(rest: &str) -> Option<u32> {
    rest.strip_prefix("k=")?.parse().ok().filter(|&k| k >= 1)
}

fn parse_lebesgue(rest: &str) -> Option<(u32, i64)> {
    let (a, b) = rest.split_once(',')?;
    let alpha: u32 = a.strip_prefix("a=")?.parse().ok()?;
    let beta: i64 = b.strip_prefix("b=")?.parse().ok()?;
    ((-1..=2).contains(&beta)).then_some((alpha, beta))
}

/// Resolves a class id such as `"rr1-over"` or `"lebesgue:a=1,b=-1"`.
pub fn lookup_class(id: &str) -> Option<ClassSpec> {
    if let Some(rest) = id.strip_prefix("distinct-min:") {
        let k = parse_k(rest)?;
        return Some(parts(PartitionClass::distinct().with_min_part(k)));
    }
    if let Some(rest) = id.strip_prefix("distinct-over:") {
        let k = parse_k(rest)?;
        return Some(over(
            PartitionClass::distinct().with_min_part(k),
            vec![OverlineRule::any().capped(0, k as i64 - 1)],
        ));
    }
    if let Some(rest) = id.strip_prefix("lebesgue:") {
        let (alpha, beta) = parse_lebesgue(rest)?;
        return Some(lebesgue_class(alpha, beta));
    }
    if let Some(rest) = id.strip_prefix("stembridge:") {
        return StembridgeVariant::from_id(rest).map(ClassSpec::Stembridge);
    }
    let spec = match id {
        "unrestricted" => parts(PartitionClass::unrestricted()),
        "unrestricted-over" => over(PartitionClass::unrestricted(), vec![OverlineRule::any()]),
        "distinct" => parts(PartitionClass::distinct()),
        "odd" => parts(PartitionClass::unrestricted().with_parity(Parity::AllOdd)),
        "distinct-odd" => parts(distinct_odd()),
        "distinct-even" => parts(distinct_even()),
        "e-over" => over(
            PartitionClass::distinct().with_parity(Parity::AlternatingFromOddSmallest),
            vec![OverlineRule::any().capped(1, 0)],
        ),
        "rr1" => parts(gap2()),
        "rr1-over" => over(distinct_odd(), vec![OverlineRule::any().capped(1, 0)]),
        "rr1-star-over" => over(distinct_even(), vec![OverlineRule::any().capped(1, 1)]),
        "rr2" => parts(gap2().with_min_part(2)),
        "rr2-over" => over(distinct_even(), vec![OverlineRule::any().capped(1, 0)]),
        "rr1-product" => congruence(5, &[1, 4]),
        "rr2-product" => congruence(5, &[2, 3]),
        "gg1" => parts(gap2().no_consecutive_evens()),
        "gg1-over" => over(distinct_odd(), vec![odd_capped(2, -1)]),
        "gg2" => parts(gap2().no_consecutive_evens().with_min_part(3)),
        "gg2-over" => over(distinct_odd().with_min_part(3), vec![odd_capped(2, -1)]),
        "gg1-product" => congruence(8, &[1, 4, 7]),
        "gg2-product" => congruence(8, &[3, 4, 5]),
        "dgg12" => parts(gap2().no_consecutive_evens().with_smallest_in(&[1, 2])),
        "dgg12-over" => over(distinct_odd().containing(&[1]), vec![odd_capped(2, -1)]),
        "lg1" => parts(gap2().no_consecutive_odds()),
        "lg1-over" => over(distinct_even(), vec![odd_capped(2, 1)]),
        "lg2" => parts(gap2().no_consecutive_odds().with_min_part(2)),
        "lg2-over" => over(distinct_even(), vec![odd_capped(2, 0)]),
        "lg1-product" => congruence(8, &[1, 5, 6]),
        "lg2-product" => congruence(8, &[2, 3, 7]),
        "lg1-distinct-mod4" => parts(PartitionClass::distinct().with_residues(4, &[0, 1, 2])),
        "lg2-distinct-mod4" => parts(PartitionClass::distinct().with_residues(4, &[0, 2, 3])),
        "k0-over" => over(
            distinct_even(),
            vec![OverlineRule::any().with_residues(2, &[0]).capped(2, -2)],
        ),
        "slater121-over" => over(
            PartitionClass::unrestricted().with_parity(Parity::Slater121Pattern),
            vec![OverlineRule::any().with_residues(2, &[0]).capped(2, -1)],
        ),
        "distinct-odd-with-1" => parts(distinct_odd().containing(&[1])),
        "over-mod4-2" => over(
            PartitionClass::unrestricted().with_residues(4, &[2]),
            vec![OverlineRule::any().with_residues(4, &[2])],
        ),
        "self-conjugate" => ClassSpec::SelfConjugate,
        "almost-self-conjugate" => ClassSpec::AlmostSelfConjugate,
        _ => return None,
    };
    Some(spec)
}

fn odd_capped(slope: i64, intercept: i64) -> OverlineRule {
    OverlineRule::any().with_residues(2, &[1]).capped(slope, intercept)
}
