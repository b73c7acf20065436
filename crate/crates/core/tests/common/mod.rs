//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! library's generators: partitions come from a plain recursive walk and
//! membership is a predicate on the part list.

#![allow(dead_code)]

/// Every partition of `n`, parts in nonincreasing order.
pub fn all_partitions(n: u32) -> Vec<Vec<u32>> {
    fn walk(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            walk(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn count_where(n: u32, pred: impl Fn(&[u32]) -> bool) -> u64 {
    all_partitions(n).iter().filter(|p| pred(p)).count() as u64
}

pub fn is_distinct(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] > w[1])
}

pub fn gaps_at_least_two(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1] + 2)
}

pub fn is_rr1(p: &[u32]) -> bool {
    gaps_at_least_two(p)
}

pub fn is_rr2(p: &[u32]) -> bool {
    gaps_at_least_two(p) && p.iter().all(|&x| x >= 2)
}

/// Gap at least two, and two even parts never differ by exactly two.
pub fn is_gg1(p: &[u32]) -> bool {
    gaps_at_least_two(p) && p.windows(2).all(|w| !(w[0] % 2 == 0 && w[0] - w[1] == 2))
}

/// Partitions of `m` into distinct odd parts whose least part is 1.
pub fn distinct_odd_with_one(m: u32) -> u64 {
    count_where(m, |p| {
        is_distinct(p) && p.iter().all(|x| x % 2 == 1) && p.last() == Some(&1)
    })
}

/// Column lengths of the diagram.
pub fn conjugate(p: &[u32]) -> Vec<u32> {
    let largest = p.first().copied().unwrap_or(0);
    (1..=largest)
        .map(|j| p.iter().filter(|&&x| x >= j).count() as u32)
        .collect()
}
