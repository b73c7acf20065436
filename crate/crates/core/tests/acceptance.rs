//! Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails. Built with `harness = false`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use overpartition::classes::ClassMember;
use overpartition::enumerate::{stembridge_pairs, StembridgeVariant};
use overpartition::harness::{
    builtin_identities, compare_with_bfile, lookup_series, parse_bfile, verify_record, Expectation, Status, SERIES_IDS,
};
use overpartition::partition::{t_of_binary, BinarySequence};
use overpartition::{lookup_class, verify_all, Limits, MapId, Overpartition, Partition};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const B027349: &str = include_str!("../data/b027349.txt");

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn worked_examples() -> Outcome {
    let cases = [
        ("f", "14,13,5,4,2,1", 39, "12,11,4,3,2,1,4~,2~"),
        ("h-oe", "20,18,15,13,10,7,4,1", 88, "15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~"),
        ("h-eo", "20,18,15,13,10,7,4,1", 88, "14,12,10,8,6,4,2,8~,7~,6~,5~,4~,2~"),
        ("h-eo", "20,18,15,13,10,7,4", 87, "16,14,12,10,8,6,4,6~,5~,4~,2~"),
        ("g-gg", "20,17,15,12,9,7,4,1", 85, "15,13,11,9,7,5,3,1,13~,7~,1~"),
        ("g-gg", "20,17,15,12,9,7,4", 84, "15,13,11,9,7,5,3,13~,7~,1~"),
    ];
    for (map, input, weight, expected) in cases {
        let m: MapId = map.parse().map_err(|_| format!("unknown map {map}"))?;
        let lambda = part(input);
        ensure(lambda.weight() == weight, || {
            format!("{input} has weight {}", lambda.weight())
        })?;
        let image = m.forward(&lambda).map_err(|e| format!("{map}({input}): {e}"))?;
        ensure(image.to_string() == expected, || {
            format!("{map}({input}) = {image}, expected {expected}")
        })?;
        let back = m.inverse(&image).map_err(|e| format!("{map}^-1({image}): {e}"))?;
        ensure(back == lambda, || format!("{map}^-1({image}) = {back}"))?;
    }
    let b = BinarySequence::new(vec![0, 1, 1, 0, 1, 0, 0]).map_err(|e| e.to_string())?;
    let t = t_of_binary(&b);
    ensure(t == [0, 1, 1, 2, 3, 4, 4], || format!("t(0110100) = {t:?}"))?;
    Ok(format!("{} bijection examples and t(B) reproduced", cases.len()))
}

fn proven_identities_pass() -> Outcome {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let start = Instant::now();
    let reports = verify_all(40, &Limits::default(), jobs);
    let elapsed = start.elapsed();
    let records = builtin_identities();
    let mut proven = 0;
    for (record, report) in records.iter().zip(&reports) {
        ensure(record.id == report.id, || {
            format!("report order: {} vs {}", record.id, report.id)
        })?;
        if record.expectation() == Expectation::Proven {
            proven += 1;
            ensure(report.status == Status::Pass, || {
                format!(
                    "{} is {} at N=40: {:?}",
                    report.id, report.status, report.first_mismatch
                )
            })?;
        }
    }
    ensure(elapsed < Duration::from_secs(300), || {
        format!("verify_all(40) took {elapsed:?}")
    })?;

    let mut slowest = Duration::ZERO;
    for id in SERIES_IDS {
        let side = lookup_series(id).ok_or_else(|| format!("series {id} missing"))?;
        let t = Instant::now();
        let values = side
            .values(200, &Limits::unbounded())
            .map_err(|e| format!("{id}: {e}"))?;
        let dt = t.elapsed();
        ensure(values.len() == 201, || {
            format!("{id} gave {} coefficients", values.len())
        })?;
        ensure(dt < Duration::from_secs(10), || format!("{id} to N=200 took {dt:?}"))?;
        slowest = slowest.max(dt);
    }
    let mut series_only = 0;
    for record in records
        .iter()
        .filter(|r| r.is_series_only() && r.expectation() == Expectation::Proven)
    {
        let t = Instant::now();
        let report = verify_record(record, 200, &Limits::unbounded());
        ensure(report.status == Status::Pass, || {
            format!("{} at N=200: {:?}", record.id, report.first_mismatch)
        })?;
        ensure(t.elapsed() < Duration::from_secs(10), || {
            format!("{} at N=200 took {:?}", record.id, t.elapsed())
        })?;
        series_only += 1;
    }
    Ok(format!(
        "{proven} PROVEN records pass at N=40 in {:.1}s; {} series and {series_only} series-only records at N=200, slowest series {:.2}s",
        elapsed.as_secs_f64(),
        SERIES_IDS.len(),
        slowest.as_secs_f64()
    ))
}

fn bijections_exhaustive() -> Outcome {
    let mut checked = 0u64;
    for m in MapId::ALL {
        let (source_id, target_id) = m.classes();
        let source = lookup_class(source_id).ok_or("source class missing")?;
        let target = lookup_class(target_id).ok_or("target class missing")?;
        for n in 0..=35 {
            let mut images: BTreeSet<Overpartition> = BTreeSet::new();
            let members = source.enumerate(n);
            for member in members {
                let ClassMember::Partition(lambda) = member else {
                    return Err(format!("{m}: source member is not a partition"));
                };
                let image = m.forward(&lambda).map_err(|e| format!("{m}({lambda}): {e}"))?;
                ensure(image.weight() == n, || {
                    format!("{m}({lambda}) = {image} changes weight")
                })?;
                ensure(target.contains_overpartition(&image), || {
                    format!("{m}({lambda}) = {image} outside {target_id}")
                })?;
                let back = m.inverse(&image).map_err(|e| format!("{m}^-1({image}): {e}"))?;
                ensure(back == lambda, || format!("{m}: {lambda} -> {image} -> {back}"))?;
                images.insert(image);
                checked += 1;
            }
            let target_count = target.count(n);
            ensure(images.len() as u64 == target_count, || {
                format!("{m} n={n}: {} distinct images, {target_count} targets", images.len())
            })?;
        }
    }
    Ok(format!(
        "{} maps, {checked} sources up to n=35, all round trips exact",
        MapId::ALL.len()
    ))
}

fn oracle_prefixes() -> Outcome {
    type Row = (&'static str, fn(&[u32]) -> bool, &'static [u64]);
    let table: [Row; 4] = [
        ("distinct", common::is_distinct, &[1, 1, 1, 2, 2, 3, 4, 5, 6, 8]),
        ("rr1", common::is_rr1, &[1, 1, 1, 1, 2, 2, 3, 3, 4]),
        ("rr2", common::is_rr2, &[1, 0, 1, 1, 1, 1, 2, 2, 3]),
        ("gg1", common::is_gg1, &[1, 1, 1, 1, 2, 2, 2, 3, 4]),
    ];
    for (id, pred, prefix) in table {
        let class = lookup_class(id).ok_or("class missing")?;
        for n in 0..=25u32 {
            let oracle = common::count_where(n, pred);
            if let Some(&want) = prefix.get(n as usize) {
                ensure(oracle == want, || {
                    format!("oracle {id}({n}) = {oracle}, prefix says {want}")
                })?;
            }
            let got = class.count(n as u64);
            ensure(got == oracle, || format!("{id}({n}) = {got}, oracle {oracle}"))?;
        }
    }
    Ok("D, RR1, RR2, GG1 prefixes regenerated by oracle; generators agree to n=25".into())
}

fn stembridge_pairs_match_series() -> Outcome {
    for (variant, series) in [
        (StembridgeVariant::Gg1, "gg1-sum"),
        (StembridgeVariant::Gg2, "gg2-sum"),
        (StembridgeVariant::Lg1, "lg1-sum"),
        (StembridgeVariant::Lg2, "lg2-sum"),
    ] {
        let pairs = lookup_class(&format!("stembridge:{}", variant.id())).ok_or("pair class missing")?;
        let coeffs = lookup_series(series)
            .ok_or("series missing")?
            .values(30, &Limits::unbounded())
            .map_err(|e| e.to_string())?;
        for (n, c) in coeffs.iter().enumerate() {
            let count = BigInt::from(pairs.count(n as u64));
            ensure(&count == c, || {
                format!("{} pairs at n={n}: {count}, {series} gives {c}", variant.id())
            })?;
        }
    }
    let found: BTreeSet<(Vec<u32>, Vec<u32>)> = stembridge_pairs(7, StembridgeVariant::Gg1)
        .into_iter()
        .map(|(s, t)| (s.into_parts(), t.into_parts()))
        .collect();
    let expected: BTreeSet<(Vec<u32>, Vec<u32>)> = [
        (vec![], vec![4, 1, 1, 1]),
        (vec![1], vec![3, 2, 1]),
        (vec![2, 1], vec![2, 2]),
    ]
    .into();
    ensure(found == expected, || format!("GG1 pairs at n=7: {found:?}"))?;
    Ok("gg1, gg2, lg1, lg2 pairs equal series to n=30; GG1 pairs at n=7 are the 3 listed".into())
}

fn almost_self_conjugate() -> Outcome {
    let start = Instant::now();
    let asc = lookup_class("almost-self-conjugate").ok_or("class missing")?;
    let even = lookup_class("distinct-even").ok_or("class missing")?;
    ensure(asc.count(0) == 0 && even.count(0) == 1, || {
        "n=0 convention changed".into()
    })?;
    for n in 1..=60 {
        let (a, e) = (asc.count(n), even.count(n));
        ensure(a == e, || {
            format!("n={n}: {a} almost-self-conjugate, {e} distinct even")
        })?;
    }
    for n in 1..=20u32 {
        let oracle = common::count_where(n, |p| {
            let c = common::conjugate(p);
            let d = p.iter().enumerate().filter(|&(i, &x)| x as usize > i).count();
            d >= 1 && (0..d).all(|i| p[i] as usize - i == (c[i] as usize - i) + 1)
        });
        ensure(asc.count(n as u64) == oracle, || {
            format!("n={n}: oracle gives {oracle}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "equal for 1 <= n <= 60 (n=0 by convention) in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn a027349_bfile() -> Outcome {
    let bfile = parse_bfile(B027349).map_err(|e| e.to_string())?;
    let oracle: Vec<u64> = (0..=30).map(|n| common::distinct_odd_with_one(n + 1)).collect();
    let offsets: Vec<i64> = (-3..=3)
        .filter(|&o| {
            oracle
                .iter()
                .enumerate()
                .all(|(n, &v)| bfile.get(n as i64 + o).is_none_or(|e| *e == BigInt::from(v)))
        })
        .collect();
    let [offset] = offsets[..] else {
        return Err(format!("oracle fixes no unique offset: {offsets:?}"));
    };
    let last = bfile.last_index().ok_or("empty b-file")?;
    let max_n = (last - offset) as u64;
    let values = lookup_series("a027349")
        .ok_or("series missing")?
        .values(max_n, &Limits::unbounded())
        .map_err(|e| e.to_string())?;
    let result = compare_with_bfile(&values, &bfile, offset);
    if let Some((n, got, entry)) = result.first_mismatch {
        return Err(format!("n={n}: computed {got}, b-file {entry}"));
    }
    ensure(result.compared as u64 == max_n + 1, || {
        format!("only {} entries compared", result.compared)
    })?;
    Ok(format!(
        "offset {offset} fixed by oracle; {} entries match",
        result.compared
    ))
}

fn claims_are_flagged() -> Outcome {
    let claims: Vec<_> = builtin_identities()
        .into_iter()
        .filter(|r| r.expectation() == Expectation::PaperClaim)
        .collect();
    let mut flagged = Vec::new();
    for record in &claims {
        let report = catch_unwind(AssertUnwindSafe(|| verify_record(record, 40, &Limits::default())))
            .map_err(|_| format!("{} panicked", record.id))?;
        ensure(report.status != Status::Fail, || {
            format!("{} FAILs: {:?}", record.id, report.first_mismatch)
        })?;
        ensure(report.scope.contains("q^40"), || {
            format!("{} does not state its truncation", record.id)
        })?;
        if report.status == Status::Flagged {
            let m = report
                .first_mismatch
                .as_ref()
                .ok_or_else(|| format!("{} flagged without n", record.id))?;
            flagged.push(format!("{}@{}", record.id, m.n));
        }
    }
    ensure(claims.iter().any(|r| r.id == "slater121"), || {
        "slater121 is not a claim record".into()
    })?;
    let lebesgue = claims.iter().filter(|r| r.id.starts_with("lebesgue")).count();
    ensure(lebesgue >= 15, || format!("only {lebesgue} Lebesgue claim records"))?;
    Ok(format!(
        "{} claim records evaluated to n=40; FLAGGED: {}",
        claims.len(),
        flagged.join(" ")
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("worked examples", worked_examples),
        ("proven identities", proven_identities_pass),
        ("bijection suite", bijections_exhaustive),
        ("oracle prefixes", oracle_prefixes),
        ("stembridge pairs", stembridge_pairs_match_series),
        ("almost self-conjugate", almost_self_conjugate),
        ("A027349 b-file", a027349_bfile),
        ("unproven claims", claims_are_flagged),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
