//! Explicit bijections from ordinary partition classes onto overpartition
//! classes, with their inverses.
//!
//! * `f`: distinct parts onto `Ē` (non-overlined parts alternate in parity
//!   from an odd smallest part, overlined parts at most `r`). Works on the
//!   increasing view of the partition.
//! * `h`: gap-2 partitions onto odd distinct (`OE`) or even distinct (`EO`)
//!   non-overlined parts. Works on the decreasing view.
//! * `g`: Göllnitz–Gordon (`GG`) or little Göllnitz (`LG`) partitions onto
//!   overpartitions with odd overlined parts. Works on the decreasing view.
//!
//! Here `r` is the number of non-overlined parts. Where a forward map
//! produces a zero non-overlined part it is dropped; the inverse restores it
//! when the largest overlined part exceeds what `r` surviving parts allow.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::classes::{lookup_class, ClassSpec};
use crate::overpartition::Overpartition;
use crate::partition::{pointwise_add, BinarySequence, Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{input} is not in the source class {class}")]
    NotInSource { input: String, class: &'static str },
    #[error("{input} is not in the target class {class}")]
    NotInTarget { input: String, class: &'static str },
    #[error("internal invariant violated for {input}: {detail}")]
    Invariant { input: String, detail: String },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Which adjacent-pair statistic drives `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HVariant {
    /// Pairs (odd, even); image has odd distinct non-overlined parts.
    Oe,
    /// Pairs (even, odd); image has even distinct non-overlined parts.
    Eo,
}

/// Parity function for `g`: `T(k) = 1` iff `k` is even (`Gg`) or odd (`Lg`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GVariant {
    Gg,
    Lg,
}

impl GVariant {
    fn t(self, k: u32) -> u32 {
        match self {
            GVariant::Gg => k.is_multiple_of(2) as u32,
            GVariant::Lg => (k % 2 == 1) as u32,
        }
    }
}

/// The maps exposed to the CLI and the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapId {
    F,
    H(HVariant),
    G(GVariant),
}

impl MapId {
    pub const ALL: [MapId; 5] = [
        MapId::F,
        MapId::H(HVariant::Oe),
        MapId::H(HVariant::Eo),
        MapId::G(GVariant::Gg),
        MapId::G(GVariant::Lg),
    ];

    pub fn id(self) -> &'static str {
        match self {
            MapId::F => "f",
            MapId::H(HVariant::Oe) => "h-oe",
            MapId::H(HVariant::Eo) => "h-eo",
            MapId::G(GVariant::Gg) => "g-gg",
            MapId::G(GVariant::Lg) => "g-lg",
        }
    }

    /// Class ids of the full source and target of the map.
    pub fn classes(self) -> (&'static str, &'static str) {
        match self {
            MapId::F => ("distinct", "e-over"),
            MapId::H(HVariant::Oe) => ("rr1", "rr1-over"),
            MapId::H(HVariant::Eo) => ("rr1", "rr1-star-over"),
            MapId::G(GVariant::Gg) => ("gg1", "gg1-over"),
            MapId::G(GVariant::Lg) => ("lg1", "lg1-over"),
        }
    }

    pub fn forward(self, lambda: &Partition) -> Result<Overpartition, BijectionError> {
        match self {
            MapId::F => map_f(lambda),
            MapId::H(v) => map_h(lambda, v),
            MapId::G(v) => map_g(lambda, v),
        }
    }

    pub fn inverse(self, image: &Overpartition) -> Result<Partition, BijectionError> {
        match self {
            MapId::F => inverse_f(image),
            MapId::H(v) => inverse_h(image, v),
            MapId::G(v) => inverse_g(image, v),
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MapId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapId::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| format!("unknown map {s:?}"))
    }
}

fn class(id: &'static str) -> ClassSpec {
    lookup_class(id).expect("built-in class id")
}

fn require_source(lambda: &Partition, id: &'static str) -> Result<(), BijectionError> {
    if class(id).contains_partition(lambda) {
        Ok(())
    } else {
        Err(BijectionError::NotInSource {
            input: lambda.to_string(),
            class: id,
        })
    }
}

fn require_target(op: &Overpartition, id: &'static str) -> Result<(), BijectionError> {
    if class(id).contains_overpartition(op) {
        Ok(())
    } else {
        Err(BijectionError::NotInTarget {
            input: op.to_string(),
            class: id,
        })
    }
}

fn overpartition(plain: Vec<u32>, overlined: &Partition) -> Result<Overpartition, BijectionError> {
    Ok(Overpartition::new(
        Partition::from_unsorted(plain),
        overlined.parts().to_vec(),
    )?)
}

/// Distinct parts onto `Ē`.
pub fn map_f(lambda: &Partition) -> Result<Overpartition, BijectionError> {
    require_source(lambda, "distinct")?;
    if lambda.is_empty() {
        return Ok(Overpartition::default());
    }
    let inc = lambda.increasing();
    let alternating = inc[0] % 2 == 1 && inc.windows(2).all(|w| w[0] % 2 != w[1] % 2);
    // A = (λ - B_k) mod 2 with B_k = (1, 0, 1, 0, ...)
    let a: Vec<u8> = inc
        .iter()
        .enumerate()
        .map(|(j, &p)| ((p + (j as u32 % 2) + 1) % 2) as u8)
        .collect();
    if alternating {
        if a.iter().any(|&b| b != 0) {
            return Err(BijectionError::Invariant {
                input: lambda.to_string(),
                detail: "alternating input produced a nonzero parity sequence".into(),
            });
        }
        return Ok(Overpartition::plain(lambda.clone()));
    }
    let t = BinarySequence::new(a)?.t_sequence();
    let plain: Vec<u32> = inc.iter().zip(&t).map(|(p, t)| p - t).collect();
    let overlined = Partition::from_unsorted(t).conjugate();
    overpartition(plain, &overlined)
}

/// `U + V'` with `V'` padded by zeros at its small end.
pub fn inverse_f(gamma: &Overpartition) -> Result<Partition, BijectionError> {
    require_target(gamma, "e-over")?;
    let u = gamma.nonoverlined().parts();
    let v = gamma.overlined_partition().conjugate();
    Ok(pointwise_add(u, &v)?)
}

/// Gap-2 partitions onto `RR̄₁` (`Oe`) or `RR̄₁*` (`Eo`).
pub fn map_h(lambda: &Partition, variant: HVariant) -> Result<Overpartition, BijectionError> {
    require_source(lambda, "rr1")?;
    let parts = lambda.parts();
    let k = parts.len();
    let (first_odd, wrong_parity) = match variant {
        HVariant::Oe => (1, 0),
        HVariant::Eo => (0, 1),
    };
    // pair (λ_i, λ_{i+1}) matches when λ_i has parity `first_odd` and the
    // next part the other parity
    let matches: Vec<bool> = parts
        .windows(2)
        .map(|w| w[0] % 2 == first_odd && w[1] % 2 != first_odd)
        .collect();
    // ℓ_j = number of matching pairs at positions i >= j
    let mut ell = vec![0u32; k];
    let mut running = 0;
    for j in (0..k).rev() {
        if j < matches.len() && matches[j] {
            running += 1;
        }
        ell[j] = running;
    }
    let pi: Vec<u32> = parts
        .iter()
        .zip(&ell)
        .map(|(&l, &e)| l - 2 * e - (l % 2 == wrong_parity) as u32)
        .collect();
    let v_star: Vec<u32> = parts.iter().zip(&pi).map(|(l, p)| l - p).collect();
    if v_star.windows(2).any(|w| w[0] < w[1]) {
        return Err(BijectionError::Invariant {
            input: lambda.to_string(),
            detail: format!("v* = {v_star:?} is not weakly decreasing"),
        });
    }
    let overlined = Partition::from_unsorted(v_star).conjugate();
    let r = pi.iter().filter(|&&p| p > 0).count();
    let cap = match variant {
        HVariant::Oe => r,
        HVariant::Eo => r + 1,
    };
    if !overlined.is_distinct() || overlined.largest() as usize > cap {
        return Err(BijectionError::Invariant {
            input: lambda.to_string(),
            detail: format!("conjugate of v* is {overlined}, expected distinct parts <= {cap}"),
        });
    }
    overpartition(pi, &overlined)
}

fn h_target(variant: HVariant) -> &'static str {
    match variant {
        HVariant::Oe => "rr1-over",
        HVariant::Eo => "rr1-star-over",
    }
}

/// `U + V'`, with one phantom zero part restored when the largest overlined
/// part is `r + 1` (only possible for `Eo`).
pub fn inverse_h(pi: &Overpartition, variant: HVariant) -> Result<Partition, BijectionError> {
    require_target(pi, h_target(variant))?;
    let mut u = pi.nonoverlined().parts().to_vec();
    let largest = pi.overlined().first().copied().unwrap_or(0) as usize;
    if largest > u.len() {
        u.push(0);
    }
    let v = pi.overlined_partition().conjugate();
    Ok(pointwise_add(&u, &v)?)
}

/// `τ_j = λ_j - (T(λ_j) + 2 Σ_{i>j} T(λ_i))`, overlining `2j - 1` whenever
/// `T(λ_j) = 1`.
pub fn map_g(lambda: &Partition, variant: GVariant) -> Result<Overpartition, BijectionError> {
    let source = match variant {
        GVariant::Gg => "gg1",
        GVariant::Lg => "lg1",
    };
    require_source(lambda, source)?;
    let parts = lambda.parts();
    let t: Vec<u32> = parts.iter().map(|&p| variant.t(p)).collect();
    let mut tau = vec![0u32; parts.len()];
    let mut below = 0;
    for j in (0..parts.len()).rev() {
        tau[j] = parts[j] - (t[j] + 2 * below);
        below += t[j];
    }
    let positive: Vec<u32> = tau.iter().copied().filter(|&x| x > 0).collect();
    let want = match variant {
        GVariant::Gg => 1,
        GVariant::Lg => 0,
    };
    if positive.windows(2).any(|w| w[0] <= w[1]) || positive.iter().any(|&x| x % 2 != want) {
        return Err(BijectionError::Invariant {
            input: lambda.to_string(),
            detail: format!("τ = {tau:?} is not strictly decreasing with uniform parity"),
        });
    }
    let overlined: Vec<u32> = (0..parts.len())
        .rev()
        .filter(|&j| t[j] == 1)
        .map(|j| 2 * j as u32 + 1)
        .collect();
    Ok(Overpartition::new(
        Partition::from_sorted_unchecked(positive),
        overlined,
    )?)
}

fn g_target(variant: GVariant) -> &'static str {
    match variant {
        GVariant::Gg => "gg1-over",
        GVariant::Lg => "lg1-over",
    }
}

/// `λ_j = τ_j + v_j + 2 Σ_{i>j} v_i` where `v_j = 1` iff `2j - 1` is
/// overlined. A phantom zero slot is restored when the largest overlined
/// part is `2r + 1`.
pub fn inverse_g(image: &Overpartition, variant: GVariant) -> Result<Partition, BijectionError> {
    require_target(image, g_target(variant))?;
    let mut tau = image.nonoverlined().parts().to_vec();
    let largest = image.overlined().first().copied().unwrap_or(0) as usize;
    if largest > 2 * tau.len() {
        tau.push(0);
    }
    let v: Vec<u32> = (0..tau.len())
        .map(|j| image.overlined().contains(&(2 * j as u32 + 1)) as u32)
        .collect();
    let mut lambda = vec![0u32; tau.len()];
    let mut below = 0;
    for j in (0..tau.len()).rev() {
        lambda[j] = tau[j] + v[j] + 2 * below;
        below += v[j];
    }
    Ok(Partition::new(lambda)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassMember;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    #[test]
    fn f_fixed_point_and_rejection() {
        assert_eq!(map_f(&p(&[1])).unwrap(), op("1"));
        assert!(matches!(map_f(&p(&[2, 2])), Err(BijectionError::NotInSource { .. })));
        assert_eq!(inverse_f(&op("3,2,1")).unwrap(), p(&[3, 2, 1]));
        assert!(inverse_f(&op("2")).is_err());
    }

    #[test]
    fn h_rejects_small_gaps() {
        assert!(map_h(&p(&[3, 2]), HVariant::Oe).is_err());
        assert_eq!(inverse_h(&op("5,3,1"), HVariant::Oe).unwrap(), p(&[5, 3, 1]));
    }

    #[test]
    fn g_little_goellnitz_singleton() {
        let image = map_g(&p(&[1]), GVariant::Lg).unwrap();
        assert_eq!(image, op("1~"));
        assert_eq!(inverse_g(&image, GVariant::Lg).unwrap(), p(&[1]));
    }

    #[test]
    fn map_ids_parse() {
        for m in MapId::ALL {
            assert_eq!(m.id().parse::<MapId>().unwrap(), m);
        }
        assert!("h".parse::<MapId>().is_err());
    }

    #[test]
    fn f_worked_example() {
        let lambda = p(&[14, 13, 5, 4, 2, 1]);
        let image = map_f(&lambda).unwrap();
        assert_eq!(image, op("12,11,4,3,2,1,4~,2~"));
        assert_eq!(inverse_f(&image).unwrap(), lambda);
    }

    #[test]
    fn h_worked_examples() {
        let lambda = p(&[20, 18, 15, 13, 10, 7, 4, 1]);
        let oe = map_h(&lambda, HVariant::Oe).unwrap();
        assert_eq!(oe, op("15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~"));
        assert_eq!(inverse_h(&oe, HVariant::Oe).unwrap(), lambda);
        let eo = map_h(&lambda, HVariant::Eo).unwrap();
        assert_eq!(eo, op("14,12,10,8,6,4,2,8~,7~,6~,5~,4~,2~"));
        assert_eq!(inverse_h(&eo, HVariant::Eo).unwrap(), lambda);
        let lambda = p(&[20, 18, 15, 13, 10, 7, 4]);
        let eo = map_h(&lambda, HVariant::Eo).unwrap();
        assert_eq!(eo, op("16,14,12,10,8,6,4,6~,5~,4~,2~"));
        assert_eq!(inverse_h(&eo, HVariant::Eo).unwrap(), lambda);
    }

    #[test]
    fn g_worked_examples() {
        let lambda = p(&[20, 17, 15, 12, 9, 7, 4, 1]);
        let image = map_g(&lambda, GVariant::Gg).unwrap();
        assert_eq!(image, op("15,13,11,9,7,5,3,1,13~,7~,1~"));
        assert_eq!(inverse_g(&image, GVariant::Gg).unwrap(), lambda);
        let lambda = p(&[20, 17, 15, 12, 9, 7, 4]);
        let image = map_g(&lambda, GVariant::Gg).unwrap();
        assert_eq!(image, op("15,13,11,9,7,5,3,13~,7~,1~"));
        assert_eq!(inverse_g(&image, GVariant::Gg).unwrap(), lambda);
    }

    #[test]
    fn every_map_round_trips_small_sources() {
        for m in MapId::ALL {
            let (source, target) = m.classes();
            let (source, target) = (class(source), class(target));
            for n in 0..=14 {
                let members = source.enumerate(n);
                assert_eq!(members.len() as u64, target.count(n), "{m} n={n}");
                for member in members {
                    let ClassMember::Partition(lambda) = member else {
                        panic!("source of {m} is not a partition class")
                    };
                    let image = m.forward(&lambda).unwrap();
                    assert!(target.contains_overpartition(&image), "{m}: {lambda} -> {image}");
                    assert_eq!(m.inverse(&image).unwrap(), lambda);
                }
            }
        }
    }
}
