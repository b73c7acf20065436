mod common;

use std::collections::BTreeSet;

use overpartition::classes::{ClassMember, CLASS_IDS};
use overpartition::{lookup_class, Overpartition, Partition};

const MAX_N: u32 = 16;

/// Every overpartition of `n`: a partition of `m` plus a distinct partition of `n - m`.
fn all_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for m in 0..=n {
        for plain in common::all_partitions(m) {
            for over in common::all_partitions(n - m)
                .into_iter()
                .filter(|p| common::is_distinct(p))
            {
                out.push(Overpartition::new(Partition::new(plain.clone()).unwrap(), over).unwrap());
            }
        }
    }
    out
}

fn ids() -> Vec<String> {
    let mut ids: Vec<String> = CLASS_IDS
        .iter()
        .filter(|id| !id.starts_with("stembridge:") && !id.contains(' '))
        .map(|id| id.to_string())
        .collect();
    for k in 1..=4 {
        ids.push(format!("distinct-min:k={k}"));
        ids.push(format!("distinct-over:k={k}"));
    }
    for a in 0..=3 {
        for b in -1..=2 {
            ids.push(format!("lebesgue:a={a},b={b}"));
        }
    }
    ids
}

#[test]
fn generators_agree_with_filtered_brute_force() {
    let overs: Vec<Vec<Overpartition>> = (0..=MAX_N).map(all_overpartitions).collect();
    for id in ids() {
        let class = lookup_class(&id).unwrap_or_else(|| panic!("{id} does not resolve"));
        for n in 0..=MAX_N {
            let oracle = overs[n as usize]
                .iter()
                .filter(|o| class.contains_overpartition(o))
                .count() as u64;
            assert_eq!(class.count(n as u64), oracle, "{id} n={n}");
        }
    }
}

#[test]
fn enumerated_members_are_distinct_members_of_the_right_weight() {
    for id in ids() {
        let class = lookup_class(&id).unwrap_or_else(|| panic!("{id} does not resolve"));
        for n in 0..=MAX_N as u64 {
            let members = class.enumerate(n);
            let mut seen = BTreeSet::new();
            for m in &members {
                let (weight, ok) = match m {
                    ClassMember::Partition(p) => (p.weight(), class.contains_partition(p)),
                    ClassMember::Overpartition(o) => (o.weight(), class.contains_overpartition(o)),
                    ClassMember::Pair(..) => unreachable!("pairs are excluded"),
                };
                assert_eq!(weight, n, "{id}: {m}");
                assert!(ok, "{id}: {m} rejected by its own predicate");
                assert!(seen.insert(m.to_string()), "{id}: {m} enumerated twice");
            }
            assert_eq!(members.len() as u64, class.count(n), "{id} n={n}");
        }
    }
}

#[test]
fn malformed_parameters_do_not_resolve() {
    assert!(ids().len() > 40);
    assert!(lookup_class("lebesgue:a=1,b=3").is_none());
    assert!(lookup_class("distinct-min:k=x").is_none());
}
