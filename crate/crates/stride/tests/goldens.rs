//! Worked classifications checked break by break.

use psp_core::Basis;
use psp_stride::*;

fn b(a2: i64, a3: i64) -> Basis {
    Basis::new(a2, a3).unwrap()
}

fn orders(sg: &StrideGenerator) -> Vec<(i64, Option<i64>)> {
    sg.breaks.iter().map(|br| (br.y, br.order.finite())).collect()
}

#[test]
fn single_classifications() {
    let sg = classify(&b(6, 13), 4).unwrap();
    assert_eq!((sg.n, sg.p), (4, 2));
    assert_eq!(orders(&sg), vec![(9, None), (10, None)]);
    assert!(sg.is_canonical());

    let sg = classify(&b(14, 33), 8).unwrap();
    assert_eq!(sg.p, 2);
    assert_eq!(orders(&sg), vec![(22, Some(4))]);
    assert!(!sg.is_canonical());

    let sg = classify(&b(30, 82), 12).unwrap();
    assert_eq!(sg.p, 3);
    assert_eq!(sg.breaks.iter().map(|x| x.y).collect::<Vec<_>>(), vec![53, 59]);

    let sg = classify(&b(34, 51), 17).unwrap();
    assert_eq!(sg.p, 1);
    assert_eq!(sg.breaks.iter().map(|x| x.y).collect::<Vec<_>>(), vec![33, 50]);

    assert!(classify(&b(6, 13), 3).is_none());
}

#[test]
fn break_orders() {
    assert_eq!(break_order(&b(14, 33), 8, 2, 22).unwrap().order, BreakOrder::Finite(4));
    assert_eq!(break_order(&b(6, 13), 4, 2, 9).unwrap().order, BreakOrder::Canonical);
    assert_eq!(break_order(&b(30, 38), 8, 3, 13).unwrap().order, BreakOrder::Finite(6));
}

/// The twelve `{1,34,a3}` lines: (a3, n, p, breaks with fundamental flag).
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

#[test]
fn thirty_four_family() {
    for &(a3, n, p, expect) in THIRTY_FOUR {
        let sg = classify(&b(34, a3), n).unwrap_or_else(|| panic!("{{1,34,{a3}}} not SG at n={n}"));
        assert_eq!(sg.p, p, "{{1,34,{a3}}}");
        let got: Vec<(i64, bool)> = sg.breaks.iter().map(|x| (x.y, x.fundamental)).collect();
        let expect: Vec<(i64, bool)> = match a3 {
            // 1*, 2, ..., 34 and 3*, 5, ..., 35 are listed by pattern
            35 => (1..=34).map(|y| (y, y == 1)).collect(),
            36 => (3..=35).step_by(2).map(|y| (y, y == 3)).collect(),
            _ => expect.to_vec(),
        };
        assert_eq!(got, expect, "{{1,34,{a3}}} = SG({n},{p})");
    }
}

#[test]
fn order_zero_thirty_four() {
    let ys = |a3, n| classify(&b(34, a3), n).map(|sg| (sg.p, sg.breaks.iter().map(|x| x.y).collect::<Vec<_>>()));
    assert_eq!(ys(67, 33), Some((0, vec![33, 66])));
    assert_eq!(ys(68, 34), Some((0, vec![67])));
    assert_eq!(ys(101, 34), Some((0, vec![67, 100])));
    assert_eq!(ys(102, 35), Some((0, vec![101])));
}

#[test]
fn long_sg() {
    let a = construct_long_sg(5, 20).unwrap();
    assert_eq!(a, b(95, 100));
    let sg = classify(&a, 5).unwrap();
    assert_eq!((sg.n, sg.p, sg.first_break().y), (5, 18, 9));
    let a = construct_long_sg(4, 3).unwrap();
    assert_eq!(a, b(8, 12));
    assert!(classify(&a, 4).unwrap().p <= 2);
    assert_eq!(classify(&b(34, 148), 19).unwrap().p, 4);
}

#[test]
fn series() {
    let s = sg_series(&b(38, 97));
    let summary: Vec<_> = s.iter().map(|sg| (sg.n, sg.p, orders(sg)[0])).collect();
    assert_eq!(summary, vec![(19, 2, (71, Some(4))), (15, 4, (67, Some(6))), (14, 6, (67, None))]);

    let s = sg_series(&b(30, 38));
    assert_eq!(s.iter().map(|sg| (sg.n, sg.p)).collect::<Vec<_>>(), vec![(8, 3), (6, 6), (4, 10)]);
    assert_eq!(orders(&s[0]), vec![(13, Some(6)), (21, Some(5))]);
    assert_eq!(orders(&s[1]), vec![(11, Some(10)), (19, Some(9)), (27, Some(8))]);
    assert_eq!(s[2].breaks.iter().map(|x| x.y).collect::<Vec<_>>(), vec![9, 11, 17, 19, 25, 27, 33, 35]);
    assert!(s[2].is_canonical());

    let s = sg_series(&b(8, 11));
    assert_eq!(s.iter().map(|sg| (sg.n, sg.p, sg.is_canonical())).collect::<Vec<_>>(), vec![(3, 2, false), (2, 4, true)]);
}

#[test]
fn underlying() {
    let (sg, k) = underlying_sg(&b(6, 13), 6).unwrap();
    assert_eq!((sg.n, sg.p, k), (4, 2, 2));
    let (sg, _) = underlying_sg(&b(8, 11), 7).unwrap();
    assert_eq!((sg.n, sg.p), (2, 4));
    let (sg, k) = underlying_sg(&b(39, 520), 54).unwrap();
    assert_eq!((sg.n, sg.p, k), (37, 1, 17));
    assert!(underlying_sg(&b(55, 954), 54).is_err());
    // canonical underlying SG persists for every larger budget
    for s in 7..=15 {
        let (sg, _) = underlying_sg(&b(8, 11), s).unwrap();
        assert_eq!((sg.n, sg.p), (2, 4), "s={s}");
    }
}

#[test]
fn potential_covers() {
    let sg = classify(&b(39, 520), 37).unwrap();
    assert_eq!(potential_cover(&sg, 54).unwrap(), 9852);
    let sg = classify(&b(55, 954), 51).unwrap();
    assert_eq!(potential_cover(&sg, 54).unwrap(), 4730);
    assert_eq!(potential_cover(&sg, 51).unwrap(), 954 + sg.first_break().y - 1);
}

/// Resolves the disputed SG1(37,1) row: its true first break.
#[test]
fn sg1_37_first_break() {
    let sg = classify(&b(42, 519), 37).unwrap();
    assert_eq!(sg.p, 1);
    assert_eq!(sg.first_break().y, 488);
    assert_eq!(potential_cover(&sg, 54).unwrap(), 18 * 519 + 487);
}
