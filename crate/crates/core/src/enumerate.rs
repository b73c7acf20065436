//! Exhaustive enumeration of constrained partition and overpartition classes.
//!
//! A [`PartitionClass`] is a declarative list of constraints on the parts of
//! an ordinary partition; an [`OverpartitionClass`] adds [`OverlineRule`]s for
//! the overlined magnitudes. Both expose a generator (parts chosen largest
//! first with constraint pruning) and an independent post-hoc predicate.
//!
//! Enumeration order is descending lexicographic on the decreasing part
//! sequence, with the overlined list as a tie-break, so `(4)` precedes
//! `(3,1)` and `3,1` precedes `3,1~`.

use crate::overpartition::Overpartition;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Parity {
    #[default]
    Any,
    AllOdd,
    AllEven,
    /// In increasing order the `j`-th part is congruent to `j` mod 2.
    AlternatingFromOddSmallest,
    /// `λ_1 > λ_2 >= λ_3 > λ_4 >= ...`: strict drop into every even index.
    Slater121Pattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueFilter {
    pub modulus: u32,
    pub residues: Vec<u32>,
}

impl ResidueFilter {
    pub fn new(modulus: u32, residues: &[u32]) -> Self {
        ResidueFilter {
            modulus,
            residues: residues.iter().map(|r| r % modulus).collect(),
        }
    }

    pub fn admits(&self, part: u32) -> bool {
        self.residues.contains(&(part % self.modulus))
    }
}

/// Constraints on the parts of an ordinary partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionClass {
    pub distinct: bool,
    pub parity: Parity,
    pub min_part: u32,
    /// Lower bound on the difference of adjacent parts.
    pub min_gap: u32,
    /// No two parts `2a` and `2a + 2`.
    pub forbid_consecutive_evens: bool,
    /// No two parts `2a - 1` and `2a + 1`.
    pub forbid_consecutive_odds: bool,
    pub smallest_part_in: Option<Vec<u32>>,
    pub must_contain: Option<Vec<u32>>,
    pub residue_filter: Option<ResidueFilter>,
}

impl Default for PartitionClass {
    fn default() -> Self {
        PartitionClass {
            distinct: false,
            parity: Parity::Any,
            min_part: 1,
            min_gap: 0,
            forbid_consecutive_evens: false,
            forbid_consecutive_odds: false,
            smallest_part_in: None,
            must_contain: None,
            residue_filter: None,
        }
    }
}

impl PartitionClass {
    pub fn unrestricted() -> Self {
        Self::default()
    }

    pub fn distinct() -> Self {
        PartitionClass {
            distinct: true,
            ..Self::default()
        }
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn with_min_part(mut self, min_part: u32) -> Self {
        self.min_part = min_part.max(1);
        self
    }

    pub fn with_min_gap(mut self, gap: u32) -> Self {
        self.min_gap = gap;
        self
    }

    pub fn no_consecutive_evens(mut self) -> Self {
        self.forbid_consecutive_evens = true;
        self
    }

    pub fn no_consecutive_odds(mut self) -> Self {
        self.forbid_consecutive_odds = true;
        self
    }

    pub fn with_smallest_in(mut self, allowed: &[u32]) -> Self {
        self.smallest_part_in = Some(allowed.to_vec());
        self
    }

    pub fn containing(mut self, parts: &[u32]) -> Self {
        self.must_contain = Some(parts.to_vec());
        self
    }

    pub fn with_residues(mut self, modulus: u32, residues: &[u32]) -> Self {
        self.residue_filter = Some(ResidueFilter::new(modulus, residues));
        self
    }

    fn effective_gap(&self) -> u32 {
        self.min_gap.max(self.distinct as u32)
    }

    fn part_allowed(&self, p: u32) -> bool {
        if p < self.min_part {
            return false;
        }
        match self.parity {
            Parity::AllOdd if p.is_multiple_of(2) => return false,
            Parity::AllEven if p % 2 == 1 => return false,
            _ => {}
        }
        self.residue_filter.as_ref().is_none_or(|f| f.admits(p))
    }

    /// Predicate check, written directly from the constraint definitions
    /// without reference to the generator.
    pub fn contains(&self, lambda: &Partition) -> bool {
        let parts = lambda.parts();
        if !parts.iter().all(|&p| self.part_allowed(p)) {
            return false;
        }
        for w in parts.windows(2) {
            let diff = w[0] - w[1];
            if (self.distinct && diff == 0) || diff < self.min_gap {
                return false;
            }
        }
        let has = |v: u32| parts.contains(&v);
        if self.forbid_consecutive_evens && parts.iter().any(|&p| p % 2 == 0 && has(p + 2)) {
            return false;
        }
        if self.forbid_consecutive_odds && parts.iter().any(|&p| p % 2 == 1 && has(p + 2)) {
            return false;
        }
        match self.parity {
            Parity::AlternatingFromOddSmallest => {
                let inc = lambda.increasing();
                if inc.iter().enumerate().any(|(j, &p)| p % 2 != (j as u32 + 1) % 2) {
                    return false;
                }
            }
            Parity::Slater121Pattern => {
                // 1-based index i >= 2: λ_{i-1} > λ_i when i is even
                for (i, w) in parts.windows(2).enumerate() {
                    if (i + 2) % 2 == 0 && w[0] <= w[1] {
                        return false;
                    }
                }
            }
            _ => {}
        }
        if let Some(allowed) = &self.smallest_part_in {
            match lambda.smallest() {
                Some(s) if allowed.contains(&s) => {}
                _ => return false,
            }
        }
        if let Some(required) = &self.must_contain {
            if !required.iter().all(|&v| has(v)) {
                return false;
            }
        }
        true
    }

    /// Calls `visit` with every member of weight `n`, largest first in
    /// descending lexicographic order.
    pub fn for_each<F: FnMut(&[u32])>(&self, n: u64, mut visit: F) {
        let mut parts = Vec::new();
        let n = u32::try_from(n).expect("weight fits in u32");
        self.descend(n, n, &mut parts, &mut visit);
    }

    fn descend<F: FnMut(&[u32])>(&self, remaining: u32, max: u32, parts: &mut Vec<u32>, visit: &mut F) {
        if remaining == 0 {
            if self.final_check(parts) {
                visit(parts);
            }
            return;
        }
        let mut p = max.min(remaining);
        while p >= self.min_part {
            if self.part_allowed(p) && self.extends(parts, p) {
                parts.push(p);
                let next_max = self.next_max(parts, p);
                if let Some(next_max) = next_max {
                    self.descend(remaining - p, next_max, parts, visit);
                } else if remaining == p && self.final_check(parts) {
                    visit(parts);
                }
                parts.pop();
            }
            p -= 1;
        }
    }

    fn extends(&self, parts: &[u32], p: u32) -> bool {
        if self.forbid_consecutive_evens && p.is_multiple_of(2) && parts.contains(&(p + 2)) {
            return false;
        }
        if self.forbid_consecutive_odds && p % 2 == 1 && parts.contains(&(p + 2)) {
            return false;
        }
        if self.parity == Parity::AlternatingFromOddSmallest {
            if let Some(&last) = parts.last() {
                if last % 2 == p % 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Largest admissible next part after pushing `p`, or `None` when no
    /// further part can follow.
    fn next_max(&self, parts: &[u32], p: u32) -> Option<u32> {
        let mut gap = self.effective_gap();
        if self.parity == Parity::Slater121Pattern && (parts.len() + 1).is_multiple_of(2) {
            gap = gap.max(1);
        }
        p.checked_sub(gap).filter(|&m| m >= self.min_part)
    }

    fn final_check(&self, parts: &[u32]) -> bool {
        if self.parity == Parity::AlternatingFromOddSmallest && parts.last().is_some_and(|&s| s % 2 == 0) {
            return false;
        }
        if let Some(allowed) = &self.smallest_part_in {
            match parts.last() {
                Some(s) if allowed.contains(s) => {}
                _ => return false,
            }
        }
        if let Some(required) = &self.must_contain {
            if !required.iter().all(|v| parts.contains(v)) {
                return false;
            }
        }
        true
    }

    pub fn enumerate(&self, n: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        self.for_each(n, |parts| out.push(Partition::from_sorted_unchecked(parts.to_vec())));
        out
    }

    pub fn count(&self, n: u64) -> u64 {
        let mut c = 0;
        self.for_each(n, |_| c += 1);
        c
    }
}

/// Upper bound `slope * r + intercept` on overlined magnitudes, where `r` is
/// the number of non-overlined parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineCap {
    pub slope: i64,
    pub intercept: i64,
}

impl AffineCap {
    pub fn new(slope: i64, intercept: i64) -> Self {
        AffineCap { slope, intercept }
    }

    pub fn bound(&self, r: usize) -> i64 {
        self.slope * r as i64 + self.intercept
    }
}

/// A rule for overlined magnitudes within `[low, high]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OverlineRule {
    pub low: u32,
    pub high: Option<u32>,
    pub residue: Option<ResidueFilter>,
    pub cap: Option<AffineCap>,
}

impl OverlineRule {
    /// A rule covering every positive magnitude.
    pub fn any() -> Self {
        OverlineRule {
            low: 1,
            high: None,
            residue: None,
            cap: None,
        }
    }

    pub fn within(low: u32, high: Option<u32>) -> Self {
        OverlineRule {
            low: low.max(1),
            high,
            residue: None,
            cap: None,
        }
    }

    pub fn with_residues(mut self, modulus: u32, residues: &[u32]) -> Self {
        self.residue = Some(ResidueFilter::new(modulus, residues));
        self
    }

    pub fn capped(mut self, slope: i64, intercept: i64) -> Self {
        self.cap = Some(AffineCap::new(slope, intercept));
        self
    }

    pub fn covers(&self, v: u32) -> bool {
        v >= self.low && self.high.is_none_or(|h| v <= h)
    }

    pub fn satisfied(&self, v: u32, r: usize) -> bool {
        self.residue.as_ref().is_none_or(|f| f.admits(v)) && self.cap.is_none_or(|c| v as i64 <= c.bound(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OverpartitionClass {
    pub base: PartitionClass,
    pub rules: Vec<OverlineRule>,
}

impl OverpartitionClass {
    pub fn new(base: PartitionClass, rules: Vec<OverlineRule>) -> Self {
        OverpartitionClass { base, rules }
    }

    /// An overlined magnitude is admissible when some rule covers it and
    /// every covering rule is satisfied.
    pub fn admits_overline(&self, v: u32, r: usize) -> bool {
        let mut covered = false;
        for rule in self.rules.iter().filter(|rule| rule.covers(v)) {
            covered = true;
            if !rule.satisfied(v, r) {
                return false;
            }
        }
        covered
    }

    pub fn contains(&self, op: &Overpartition) -> bool {
        let r = op.r();
        self.base.contains(op.nonoverlined()) && op.overlined().iter().all(|&v| self.admits_overline(v, r))
    }

    /// Visits every member of weight `n` as `(non-overlined, overlined)`,
    /// unordered across different non-overlined weights.
    pub fn for_each<F: FnMut(&[u32], &[u32])>(&self, n: u64, mut visit: F) {
        for m in (0..=n).rev() {
            let rest = (n - m) as u32;
            self.base.for_each(m, |plain| {
                let admissible: Vec<u32> = (1..=rest)
                    .rev()
                    .filter(|&v| self.admits_overline(v, plain.len()))
                    .collect();
                let mut chosen = Vec::new();
                distinct_subsets(&admissible, rest, &mut chosen, &mut |over| visit(plain, over));
            });
        }
    }

    /// Members of weight `n` in descending lexicographic order.
    pub fn enumerate(&self, n: u64) -> Vec<Overpartition> {
        let mut out = Vec::new();
        self.for_each(n, |plain, over| {
            out.push(
                Overpartition::new(Partition::from_sorted_unchecked(plain.to_vec()), over.to_vec())
                    .expect("generated overlines are strictly decreasing"),
            )
        });
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn count(&self, n: u64) -> u64 {
        let mut c = 0;
        self.for_each(n, |_, _| c += 1);
        c
    }
}

/// Subsets of the decreasing list `pool` summing to `target`, emitted with
/// larger elements chosen first.
fn distinct_subsets<F: FnMut(&[u32])>(pool: &[u32], target: u32, chosen: &mut Vec<u32>, visit: &mut F) {
    if target == 0 {
        visit(chosen);
        return;
    }
    for (i, &v) in pool.iter().enumerate() {
        if v > target {
            continue;
        }
        // remaining elements are all <= v; their total bounds what is reachable
        let reachable: u64 = pool[i..].iter().map(|&x| x as u64).sum();
        if reachable < target as u64 {
            break;
        }
        chosen.push(v);
        distinct_subsets(&pool[i + 1..], target - v, chosen, visit);
        chosen.pop();
    }
}

/// Pair families `(σ, τ)` counted by the sum sides of the Göllnitz–Gordon
/// and little Göllnitz identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StembridgeVariant {
    /// σ, τ self-conjugate, largest(σ) <= d(τ).
    Gg1,
    /// As `Gg1`, and the Frobenius symbol of τ has no zero entry.
    Gg2,
    /// σ self-conjugate, τ almost self-conjugate, largest(σ) <= d(τ) + 1.
    Lg1,
    /// σ self-conjugate, τ almost self-conjugate, largest(σ) <= d(τ).
    Lg2,
}

impl StembridgeVariant {
    pub const ALL: [StembridgeVariant; 4] = [
        StembridgeVariant::Gg1,
        StembridgeVariant::Gg2,
        StembridgeVariant::Lg1,
        StembridgeVariant::Lg2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            StembridgeVariant::Gg1 => "gg1",
            StembridgeVariant::Gg2 => "gg2",
            StembridgeVariant::Lg1 => "lg1",
            StembridgeVariant::Lg2 => "lg2",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.id() == id)
    }

    /// Whether τ may appear as the second member of a pair. For the little
    /// Göllnitz variants the empty partition is admitted: its Frobenius
    /// symbol has no columns, so the "top = bottom + 1" condition holds
    /// vacuously there even though [`Partition::is_almost_self_conjugate`]
    /// reports `false` for it.
    fn admits_tau(self, tau: &Partition) -> bool {
        match self {
            StembridgeVariant::Gg1 => tau.is_self_conjugate(),
            StembridgeVariant::Gg2 => tau.is_self_conjugate() && !tau.frobenius().contains_zero(),
            StembridgeVariant::Lg1 | StembridgeVariant::Lg2 => tau.is_empty() || tau.is_almost_self_conjugate(),
        }
    }

    fn slack(self) -> usize {
        match self {
            StembridgeVariant::Lg1 => 1,
            _ => 0,
        }
    }
}

/// Every partition of each weight `0..=max_n`, from the unrestricted generator.
fn all_partitions_upto(max_n: u64) -> Vec<Vec<Partition>> {
    let all = PartitionClass::unrestricted();
    (0..=max_n).map(|m| all.enumerate(m)).collect()
}

/// All pairs of total weight `n`, σ ordered before τ by weight of σ.
pub fn stembridge_pairs(n: u64, variant: StembridgeVariant) -> Vec<(Partition, Partition)> {
    let table = all_partitions_upto(n);
    let mut out = Vec::new();
    for m in 0..=n as usize {
        let sigmas = table[m].iter().filter(|s| s.is_self_conjugate());
        let taus: Vec<&Partition> = table[n as usize - m].iter().filter(|t| variant.admits_tau(t)).collect();
        for sigma in sigmas {
            for tau in &taus {
                if sigma.largest() as usize <= tau.diagonal() + variant.slack() {
                    out.push((sigma.clone(), (*tau).clone()));
                }
            }
        }
    }
    out
}

/// Pair counts for every total weight `0..=max_n`.
pub fn count_stembridge_pairs_upto(max_n: u64, variant: StembridgeVariant) -> Vec<u64> {
    let table = all_partitions_upto(max_n);
    let sigma_largest: Vec<Vec<usize>> = table
        .iter()
        .map(|row| {
            row.iter()
                .filter(|s| s.is_self_conjugate())
                .map(|s| s.largest() as usize)
                .collect()
        })
        .collect();
    let tau_diag: Vec<Vec<usize>> = table
        .iter()
        .map(|row| {
            row.iter()
                .filter(|t| variant.admits_tau(t))
                .map(|t| t.diagonal())
                .collect()
        })
        .collect();
    (0..=max_n as usize)
        .map(|n| {
            (0..=n)
                .map(|m| {
                    let mut c = 0u64;
                    for &l in &sigma_largest[m] {
                        c += tau_diag[n - m].iter().filter(|&&d| l <= d + variant.slack()).count() as u64;
                    }
                    c
                })
                .sum()
        })
        .collect()
}

pub fn count_stembridge_pairs(n: u64, variant: StembridgeVariant) -> u64 {
    count_stembridge_pairs_upto(n, variant)[n as usize]
}
