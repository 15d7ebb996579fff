//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails. Runs without the UI or the HTTP server.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use psp_core::{cover3, Basis};
use psp_formulas::{approx, key1p_limit, maximal_set, mopt, osg1, pp_bound, pp_limit, theoretical_a2, Q, PP_LIMIT};
use psp_search::golden::{KEY1P_COUNTS, PP_PRINTOUT, T501, T502, T503, T700};
use psp_search::{best_osg, brute_m3, enumerate_key1p, enumerate_sg_in, Guard};
use psp_stride::invariants::{check_breaks, check_series, check_underlying};
use psp_stride::{classify, sg_series, StrideGenerator};

type Outcome = Result<String, String>;

fn b(a2: i64, a3: i64) -> Basis {
    Basis { a2, a3 }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    ensure(start.elapsed() < limit, || format!("{what} took {:?}, limit {limit:?}", start.elapsed()))
}

fn table_700() -> Outcome {
    let t = Instant::now();
    for &(s, m, sets) in T700 {
        let r = brute_m3(s, &Guard::default()).map_err(|e| e.to_string())?;
        let want: Vec<Basis> = sets.iter().map(|&(a2, a3)| b(a2, a3)).collect::<BTreeSet<_>>().into_iter().collect();
        ensure(r.m == m && r.bases == want, || format!("s={s}: M={} {:?}, table M={m} {want:?}", r.m, r.bases))?;
    }
    within(t, Duration::from_secs(60), "s = 1..22")?;
    Ok(format!("{} rows (22 s-values, ties at s=11 and 22) in {:?}", T700.iter().map(|r| r.2.len()).sum::<usize>(), t.elapsed()))
}

fn formula_vs_brute() -> Outcome {
    let t = Instant::now();
    for s in 23..=50 {
        let r = brute_m3(s, &Guard::default()).map_err(|e| e.to_string())?;
        let x = mopt(s).map_err(|e| e.to_string())?.x_opt;
        let set = maximal_set(s).map_err(|e| e.to_string())?.basis();
        ensure(r.m == x, || format!("s={s}: brute M={} vs X_opt={x}", r.m))?;
        ensure(r.bases.contains(&set), || format!("s={s}: {set} not among {:?}", r.bases))?;
    }
    within(t, Duration::from_secs(15 * 60), "s = 23..50")?;
    Ok(format!("s = 23..50 exact in {:?}", t.elapsed()))
}

fn worked_covers() -> Outcome {
    for (a2, a3, s, x) in [(3, 6, 3, 10), (6, 13, 6, 47), (39, 520, 54, 9852), (55, 954, 54, 108)] {
        let got = cover3(&b(a2, a3), s).map_err(|e| e.to_string())?.x;
        ensure(got == x, || format!("C({{1,{a2},{a3}}},3,{s}) = {got}, expected {x}"))?;
    }
    Ok("4 covers".into())
}

fn sg(a2: i64, a3: i64, n: i64) -> Result<StrideGenerator, String> {
    classify(&b(a2, a3), n).ok_or_else(|| format!("{{1,{a2},{a3}}} not an SG at n={n}"))
}

fn ys(sg: &StrideGenerator) -> Vec<i64> {
    sg.breaks.iter().map(|x| x.y).collect()
}

fn orders(sg: &StrideGenerator) -> Vec<(i64, Option<i64>)> {
    sg.breaks.iter().map(|x| (x.y, x.order.finite())).collect()
}

/// `(a3, n, p, breaks with fundamental flag)`; a3 = 35, 36 follow a pattern.
const THIRTY_FOUR: &[(i64, i64, i64, &[(i64, bool)])] = &[
    (35, 1, 32, &[]),
    (36, 2, 16, &[]),
    (37, 3, 10, &[(3, true), (6, false), (9, false), (12, false), (15, false), (18, false), (21, false), (24, false), (27, false), (30, false), (33, false), (36, false)]),
    (38, 3, 16, &[(5, true), (9, false), (13, false), (17, false), (21, false), (25, false), (29, false), (33, false), (37, false)]),
    (42, 5, 16, &[(9, true), (17, false), (25, false), (33, false), (41, false)]),
    (45, 11, 2, &[(11, true), (22, false), (33, false), (44, false)]),
    (49, 6, 8, &[(15, true), (18, true), (30, false), (33, false), (45, false), (48, false)]),
    (50, 9, 16, &[(17, true), (33, false), (49, false)]),
    (51, 17, 1, &[(33, true), (50, false)]),
    (61, 9, 4, &[(27, true), (33, true), (54, false), (60, false)]),
    (63, 9, 6, &[(29, true), (33, true), (58, false), (62, false)]),
    (66, 17, 16, &[(33, true), (65, false)]),
];

fn sg_goldens() -> Outcome {
    let s = sg(6, 13, 4)?;
    ensure(s.p == 2 && orders(&s) == [(9, None), (10, None)] && s.is_canonical(), || format!("{{1,6,13}}: {s} {:?}", orders(&s)))?;
    let s = sg(14, 33, 8)?;
    ensure(s.p == 2 && orders(&s) == [(22, Some(4))], || format!("{{1,14,33}}: {s} {:?}", orders(&s)))?;
    let s = sg(30, 82, 12)?;
    ensure(s.p == 3 && ys(&s) == [53, 59], || format!("{{1,30,82}}: {s} {:?}", ys(&s)))?;

    let ser = sg_series(&b(30, 38));
    let np: Vec<_> = ser.iter().map(|s| (s.n, s.p)).collect();
    ensure(np == [(8, 3), (6, 6), (4, 10)], || format!("{{1,30,38}} series {np:?}"))?;
    ensure(orders(&ser[0]) == [(13, Some(6)), (21, Some(5))], || format!("{{1,30,38}} SG(8,3) {:?}", orders(&ser[0])))?;
    ensure(orders(&ser[1]) == [(11, Some(10)), (19, Some(9)), (27, Some(8))], || format!("{{1,30,38}} SG(6,6) {:?}", orders(&ser[1])))?;
    ensure(ys(&ser[2]) == [9, 11, 17, 19, 25, 27, 33, 35] && ser[2].is_canonical(), || format!("{{1,30,38}} SG(4,10) {:?}", orders(&ser[2])))?;

    let ser = sg_series(&b(38, 97));
    let got: Vec<_> = ser.iter().map(|s| (s.n, s.p, orders(s))).collect();
    let want = vec![(19, 2, vec![(71, Some(4))]), (15, 4, vec![(67, Some(6))]), (14, 6, vec![(67, None)])];
    ensure(got == want, || format!("{{1,38,97}} series {got:?}"))?;

    for &(a3, n, p, expect) in THIRTY_FOUR {
        let s = sg(34, a3, n)?;
        let got: Vec<(i64, bool)> = s.breaks.iter().map(|x| (x.y, x.fundamental)).collect();
        let expect: Vec<(i64, bool)> = match a3 {
            35 => (1..=34).map(|y| (y, y == 1)).collect(),
            36 => (3..=35).step_by(2).map(|y| (y, y == 3)).collect(),
            _ => expect.to_vec(),
        };
        ensure(s.p == p && got == expect, || format!("{{1,34,{a3}}}: {s} {got:?}"))?;
    }

    let s = sg(95, 100, 5)?;
    ensure(s.p == 18 && s.first_break().y == 9, || format!("{{1,95,100}}: {s} first break {}", s.first_break().y))?;
    Ok("5 single/series bases, 12 {1,34,a3} lines, {1,95,100}".into())
}

fn table_503(n_max: i64, limit: Duration) -> Outcome {
    let t = Instant::now();
    let mut rows = 0;
    for row in T503.iter().take_while(|r| r.n <= n_max) {
        for (i, sets) in row.orders.iter().enumerate() {
            let p = i as i64 + 1;
            let got: BTreeSet<Basis> =
                best_osg(row.n, p).map_err(|e| e.to_string())?.map(|o| o.bases.iter().map(|x| x.0).collect()).unwrap_or_default();
            let want: BTreeSet<Basis> = sets.iter().map(|&(a2, a3)| b(a2, a3)).collect();
            ensure(got == want, || format!("n={} p={p}: got {got:?}, table {want:?}", row.n))?;
            rows += 1;
        }
    }
    within(t, limit, "table 503")?;
    Ok(format!("{rows} (n,p) rows, n <= {n_max}, in {:?}", t.elapsed()))
}

fn key_tables() -> Outcome {
    let best = |n, p| -> Result<(Vec<Basis>, Vec<Basis>), String> {
        let c = enumerate_key1p(n, p).map_err(|e| e.to_string())?;
        Ok((c.best_key1(), c.best_keyp()))
    };
    let (k1, kp) = best(2, 3)?;
    let top = k1.iter().chain(&kp).map(|x| x.a3).max();
    ensure(k1.is_empty() && top == Some(11), || format!("n=2: {k1:?} {kp:?}"))?;
    let (k1, kp) = best(37, 3)?;
    ensure(k1 == [b(78, 525)] && kp == [b(84, 521)], || format!("n=37: {k1:?} {kp:?}"))?;
    let (k1, _) = best(60, 3)?;
    ensure(k1 == [b(131, 1275)], || format!("n=60: {k1:?}"))?;
    for &(n, counts) in KEY1P_COUNTS {
        let got = enumerate_key1p(n, 3).map_err(|e| e.to_string())?.counts();
        ensure(got == counts, || format!("n={n}: case counts {got:?}, table {counts:?}"))?;
    }
    let mut rows = 0;
    for (p, table) in [(3, T501), (7, T502)] {
        for &(n, key1, keyp, theo, limit) in table {
            let (k1, kp) = best(n, p)?;
            let fmt = |v: &[Basis]| v.first().map_or((0, 0), |x| (x.a2, x.a3));
            ensure(fmt(&k1) == key1 && fmt(&kp) == keyp, || format!("p={p} n={n}: {k1:?} {kp:?}"))?;
            let got = format!("{:.2} {:.2}", approx(theoretical_a2(n, p)), approx(key1p_limit(n, p).map_err(|e| e.to_string())?));
            ensure(got == format!("{theo:.2} {limit:.2}"), || format!("p={p} n={n}: theoretical {got}"))?;
            rows += 1;
        }
    }
    Ok(format!("spot rows, counts n=2..10, {rows} best/limit rows at p=3 and p=7"))
}

fn osg1_self_consistency() -> Outcome {
    for n in 4..=60 {
        let o = osg1(n).map_err(|e| e.to_string())?;
        let s = sg(o.a2, o.a3, n)?;
        ensure(s.p == 1 && s.first_break().y == o.y, || format!("n={n}: {s} first break {}", s.first_break().y))?;
        let longer = enumerate_sg_in(n, 1, 1, o.a3 + 1, i64::MAX).map_err(|e| e.to_string())?;
        ensure(longer.is_empty(), || format!("n={n}: longer SG(n,1) {}", longer[0].basis))?;
    }
    Ok("n = 4..60".into())
}

fn pp() -> Outcome {
    let mut worst: f64 = 0.0;
    for (i, &want) in PP_PRINTOUT.iter().enumerate() {
        let s = 40 + i as i64;
        let got = pp_bound(s).map_err(|e| e.to_string())?;
        worst = worst.max((got - want).abs());
        ensure((got - want).abs() < 1e-5, || format!("pp({s}) = {got}, printout {want}"))?;
    }
    ensure(pp_limit() == Q::new(4633, 1296), || format!("limit {}", pp_limit()))?;
    ensure((PP_LIMIT - 4633.0 / 1296.0).abs() < 1e-9, || format!("limit constant {PP_LIMIT}"))?;
    Ok(format!("s = 40..58 max error {worst:.1e}, limit 4633/1296"))
}

const PROPERTY_CASES: u32 = 10_000;

fn one_case(a2: i64, a3: i64, s: i64) -> Result<(), String> {
    let basis = b(a2, a3);
    let c = cover3(&basis, s).map_err(|e| e.to_string())?;
    ensure(c.y < a3 - 1, || format!("{basis} s={s}: Y = {} not below a3-1", c.y))?;
    check_underlying(&basis, s)?;
    let series = sg_series(&basis);
    check_series(&basis, &series)?;
    for g in &series {
        check_breaks(g)?;
        psp_threads::invariants::check_all(g)?;
    }
    Ok(())
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() });
    let strat = (3i64..=400).prop_flat_map(|a3| (2..a3, Just(a3), 1i64..=30));
    let t = Instant::now();
    runner
        .run(&strat, |(a2, a3, s)| one_case(a2, a3, s).map_err(TestCaseError::fail))
        .map_err(|e| e.to_string())?;
    Ok(format!("{PROPERTY_CASES} random bases, every series member checked, in {:?}", t.elapsed()))
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("table-700-reproduction", Box::new(table_700)),
        ("formula-equals-brute-force", Box::new(formula_vs_brute)),
        ("worked-covers", Box::new(worked_covers)),
        ("sg-goldens", Box::new(sg_goldens)),
        ("table-503-reproduction", Box::new(|| table_503(60, Duration::from_secs(300)))),
        ("tables-501-502-spot-rows", Box::new(key_tables)),
        ("formula-self-consistency", Box::new(osg1_self_consistency)),
        ("pp-bound", Box::new(pp)),
        ("property-suites", Box::new(properties)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    // Optional extension of the table-503 criterion; reported, not counted.
    match table_503(133, Duration::from_secs(600)) {
        Ok(detail) => println!("INFO table-503-extended: pass, {detail}"),
        Err(why) => println!("INFO table-503-extended: mismatch, {why}"),
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
