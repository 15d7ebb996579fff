use num_rational::Ratio;
use psp_core::Basis;
use psp_formulas::*;
use psp_stride::{classify, potential_cover};

#[test]
fn osg_rows() {
    assert_eq!(osg0(1).unwrap(), vec![OsgRow { n: 1, a2: 2, a3: 3, y: 1 }]);
    let r = osg0(8).unwrap();
    assert_eq!(r.iter().map(|r| (r.a2, r.a3)).collect::<Vec<_>>(), vec![(5, 29), (6, 29)]);
    let r = osg0(9).unwrap();
    assert_eq!((r[0].a2, r[0].a3), (6, 35));
    let r = osg1(30).unwrap();
    assert_eq!((r.a2, r.a3), (34, 352));
    assert_eq!(osg1(37).unwrap(), OsgRow { n: 37, a2: 39, a3: 520, y: 493 });
    let r = osg1(10).unwrap();
    assert_eq!((r.a2, r.a3), (12, 52));
    let r = sg1_1(37).unwrap();
    assert_eq!(r.iter().map(|r| (r.a2, r.a3, r.y)).collect::<Vec<_>>(), vec![(42, 519, 488)]);
    assert_eq!(sg1_1(2).unwrap().iter().map(|r| (r.a2, r.a3)).collect::<Vec<_>>(), vec![(4, 6)]);
    assert!(sg1_1(35).unwrap().is_empty());
    assert!(sg1_1(1).unwrap().is_empty());
}

#[test]
fn mopt_rows() {
    let m = mopt(54).unwrap();
    assert_eq!((m.k_opt, m.n_opt, m.x_opt), (17, 37, 9852));
    assert_eq!(mopt(81).unwrap().x_opt, 30816);
    assert_eq!(mopt(44).unwrap().x_opt, 5606);
    assert!(mopt(17).is_err());
    for s in 18..200 {
        let m = mopt(s).unwrap();
        assert_eq!(m.n_opt, s - m.k_opt);
        assert_eq!(m.s, 9 * m.t + m.r);
    }
}

#[test]
fn maximal_sets() {
    let m = maximal_set(54).unwrap();
    assert_eq!((m.a2, m.a3, m.x_opt), (39, 520, 9852));
    let m = maximal_set(45).unwrap();
    assert_eq!((m.a2, m.a3), (33, 374));
    let m = maximal_set(81).unwrap();
    assert_eq!((m.a2, m.a3, m.x_opt), (57, 1102, 30816));
    assert!(maximal_set(10).is_err());
    for s in 18..=400 {
        maximal_set(s).unwrap();
    }
}

#[test]
fn maximal_set_potential_cover() {
    for s in 18..=120 {
        let m = maximal_set(s).unwrap();
        let k = mopt(s).unwrap().k_opt;
        let sg = classify(&m.basis(), s - k).unwrap_or_else(|| panic!("s={s}: not an SG"));
        assert_eq!(sg.p, 1);
        assert_eq!(potential_cover(&sg, s).unwrap(), m.x_opt, "s={s}");
    }
}

#[test]
fn optimal_sg_is_osg1() {
    for t in 2..=12 {
        for r in 0..9 {
            let s = 9 * t + r;
            let (n, a2, a3) = optimal_sg(s).unwrap();
            let o = osg1(n).unwrap();
            assert_eq!((o.a2, o.a3), (a2, a3), "s={s}");
        }
    }
}

#[test]
fn x_opt_growth() {
    for s in 81..=150 {
        let t = s / 9;
        assert!(mopt(s + 1).unwrap().x_opt - mopt(s).unwrap().x_opt >= 12 * t * t + 14 * t + 4, "s={s}");
    }
}

#[test]
fn closed_forms_classify() {
    for n in 1..=60 {
        let o = osg1(n).unwrap();
        let sg = classify(&o.basis(), n).unwrap_or_else(|| panic!("osg1({n})"));
        assert_eq!((sg.p, sg.first_break().y), (1, o.y), "osg1({n})");
        for r in sg1_1(n).unwrap() {
            let sg = classify(&r.basis(), n).unwrap_or_else(|| panic!("sg1_1({n})"));
            assert_eq!((sg.p, sg.first_break().y), (1, r.y), "sg1_1({n}) {:?}", r);
            assert_eq!(r.a3, o.a3 - 1);
        }
        for r in osg0(n).unwrap() {
            let sg = classify(&r.basis(), n).unwrap_or_else(|| panic!("osg0({n})"));
            assert_eq!((sg.p, sg.first_break().y), (0, r.y), "osg0({n}) {:?}", r);
        }
    }
}

#[test]
fn bounds() {
    let (lo, hi) = a2_bounds(2, 3, 11).unwrap();
    assert_eq!(hi, 9);
    assert!(lo <= Ratio::from_integer(9));
    let (lo, hi) = a2_bounds(8, 2, 33).unwrap();
    assert_eq!((lo, hi), (Ratio::from_integer(9), 25));
    let (lo, _) = a2_bounds(5, 0, 17).unwrap();
    assert_eq!(lo, Ratio::new(17, 6));
    assert_eq!(a3_upper(4, 2).unwrap(), Ratio::new(91, 3));
    assert_eq!(a3_upper(1, 0).unwrap(), Ratio::from_integer(4));
    assert_eq!(a3_upper(12, 3).unwrap(), Ratio::from_integer(196));
    let basis = Basis::new(6, 13).unwrap();
    assert!(Ratio::from_integer(basis.a3) <= a3_upper(4, 2).unwrap());
}

fn two_dp(q: Ratio<i64>) -> f64 {
    (*q.numer() as f64 / *q.denom() as f64 * 100.0).round() / 100.0
}

#[test]
fn key_limits() {
    assert_eq!(key1p_limit(2, 3).unwrap(), Ratio::new(1056, 52));
    assert_eq!(two_dp(key1p_limit(2, 3).unwrap()), 20.31);
    assert_eq!(two_dp(key1p_limit(60, 3).unwrap()), 1367.69);
    assert_eq!(two_dp(key1p_limit(2, 7).unwrap()), 61.02);
    assert_eq!(two_dp(key1p_limit(27, 7).unwrap()), 466.28);
    assert_eq!(two_dp(key1p_limit(4, 2).unwrap()), 24.29);
    assert_eq!(two_dp(key1p_limit(60, 2).unwrap()), 1356.29);
    assert_eq!(theoretical_a2(2, 3), Ratio::from_integer(8));
    assert_eq!(theoretical_a2(7, 7), Ratio::from_integer(36));
}

const PP_PRINTOUT: [f64; 19] = [
    3.89587147, 3.886196467, 3.877084829, 3.868488896, 3.860366224, 3.852678896, 3.84539293, 3.838477784,
    3.831905935, 3.825652509, 3.819694975, 3.814012876, 3.808587592, 3.803402143, 3.798441011, 3.793689985,
    3.789136026, 3.784767153, 3.780572334,
];

/// Fully expanded PP(s) in terms of the square root G.
fn pp_expanded(s: f64) -> f64 {
    let p = |c: &[f64]| c.iter().fold(0.0, |acc, &k| acc * s + k);
    let g = p(&[16.0, 124.0, -1062.0, -13968.0, -45846.0, -57024.0, 0.0]).sqrt();
    let p1 = p(&[5929.0, 78418.0, 401394.0, 986922.0, 1120203.0, 299700.0, -315414.0]);
    let p2 = p(&[5184.0, 79056.0, 50544.0, -6313140.0, -54447552.0, -215988120.0, -467038224.0, -533094372.0, -249422976.0]);
    let p3 = p(&[8.0, 87.0, 463.0, 1455.0, 2583.0, 2646.0, 1782.0]);
    let p4 = p(&[32.0, 472.0, 92.0, -38796.0, -316872.0, -1194048.0, -2425140.0, -2535948.0, -1026432.0]);
    (g * p1 - s * p2) / (81.0 * (g * p3 + s * p4))
}

#[test]
fn pp_values() {
    for (idx, want) in PP_PRINTOUT.iter().enumerate() {
        let s = 40 + idx as i64;
        let got = pp_bound(s).unwrap();
        assert!((got - want).abs() < 1e-5, "pp({s}) = {got}, printout {want}");
        assert!((got - pp_expanded(s as f64)).abs() < 1e-9, "pp({s}) vs expanded");
    }
    assert!(pp_bound(5).is_err());
}

#[test]
fn pp_stationary_point() {
    // the closed-form a32 from the expanded derivation
    let s: f64 = 40.0;
    let x = (16.0 * s.powi(6) + 124.0 * s.powi(5) - 1062.0 * s.powi(4) - 13968.0 * s.powi(3) - 45846.0 * s * s - 57024.0 * s).sqrt();
    let y = 4.0 * s.powi(5) - 11.0 * s.powi(4) - 222.0 * s.powi(3) - 747.0 * s * s - 864.0 * s;
    let w = 85.0 * s.powi(4) + 548.0 * s.powi(3) + 1201.0 * s * s + 936.0 * s + 198.0;
    let a32 = s * (s + 3.0) / (s + 1.0) + s * ((s * s + 4.0 * s + 3.0) * x + y) / w;
    assert!((a32 - 175.061965).abs() < 1e-5);
    assert!((pp_of(s, a32) - pp_bound(40).unwrap()).abs() < 1e-9);
    let h = 1e-4;
    assert!((pp_of(s, a32 + h) - pp_of(s, a32 - h)).abs() < 1e-9);
}

#[test]
fn pp_decreasing_below_four() {
    let mut prev = f64::INFINITY;
    for s in 40..=200 {
        let v = pp_bound(s).unwrap();
        assert!(v < prev && v < 4.0, "s={s}: {v}");
        prev = v;
    }
    assert!(pp_bound(59).unwrap() < 4.0);
}

#[test]
fn pp_limit_constant() {
    assert_eq!(pp_limit(), Ratio::new(4633, 1296));
    assert!((PP_LIMIT - 4633.0 / 1296.0).abs() < 1e-12);
    let far = pp_bound(10_000_000).unwrap();
    assert!((far - PP_LIMIT).abs() < 1e-4, "{far}");
}

mod props {
    use psp_formulas::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn tables_agree(s in 18i64..5000) {
            // maximal_set cross-checks itself against mopt / optimal_sg / osg1
            let m = maximal_set(s).unwrap();
            let o = osg1(mopt(s).unwrap().n_opt).unwrap();
            prop_assert_eq!((o.a2, o.a3), (m.a2, m.a3));
        }

        #[test]
        fn osg1_within_bounds(n in 1i64..2000) {
            let o = osg1(n).unwrap();
            let (lo, hi) = a2_bounds(n, 1, o.a3).unwrap();
            prop_assert!(Q::from_integer(o.a2) >= lo && o.a2 <= hi);
            prop_assert!(Q::from_integer(o.a3) <= a3_upper(n, 1).unwrap());
            prop_assert!(0 < o.y && o.y < o.a3);
        }
    }
}
