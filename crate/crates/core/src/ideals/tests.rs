use super::*;
use crate::parse::parse_ideal;

fn sr(s: &str) -> Arc<Semiring> {
    Arc::new(s.parse().unwrap())
}

fn fg(s: &Arc<Semiring>, gens: &[&str]) -> FinGenIdeal {
    let els = gens.iter().map(|g| Element::parse(g, s).unwrap()).collect();
    FinGenIdeal::new(s.clone(), els).unwrap()
}

fn val(s: &Arc<Semiring>, x: &str) -> Value {
    Element::parse(x, s).unwrap().into_value()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn membership_in_nat() {
    let nat = sr("nat");
    let i = fg(&nat, &["2", "3"]);
    assert!(!i.contains(&val(&nat, "1")).unwrap());
    assert!(i.contains(&val(&nat, "5")).unwrap());
    assert!(i.contains(&val(&nat, "0")).unwrap());
    let sum = ideal_sum(&fg(&nat, &["4"]), &fg(&nat, &["6"])).unwrap();
    assert!(!sum.contains(&val(&nat, "2")).unwrap());
    assert!(sum.contains(&val(&nat, "10")).unwrap());
    let p = ideal_product(&fg(&nat, &["2"]), &fg(&nat, &["3"])).unwrap();
    assert_eq!(p.to_string(), "ideal[6]");
}

#[test]
fn ideals_of_integers_are_principal() {
    let z = sr("ideals-z");
    assert_eq!(
        ideal_sum(&fg(&z, &["4"]), &fg(&z, &["6"]))
            .unwrap()
            .to_string(),
        "ideal[2]"
    );
    assert_eq!(
        ideal_product(&fg(&z, &["4"]), &fg(&z, &["6"]))
            .unwrap()
            .to_string(),
        "ideal[24]"
    );
    let i = fg(&z, &["6", "10"]);
    assert!(i.contains(&val(&z, "2")).unwrap());
    assert!(!i.contains(&val(&z, "3")).unwrap());
}

#[test]
fn bool_poly_shift_covers() {
    let b = sr("bool-poly");
    let i = fg(&b, &["X"]);
    assert!(i.contains(&val(&b, "X + X^3")).unwrap());
    assert!(!i.contains(&val(&b, "1 + X")).unwrap());
    let j = fg(&b, &["1 + X"]);
    assert!(j.contains(&val(&b, "1 + X + X^2")).unwrap());
    assert!(!j.contains(&val(&b, "X^2")).unwrap());
    let sum = ideal_sum(&i, &j).unwrap();
    assert_eq!(sum.generators().len(), 2);
}

#[test]
fn bool_poly_generators_are_incomparable() {
    let b = sr("bool-poly");
    let spec = SampleSpec::default();
    let r = ideals_comparable(
        &Ideal::FinGen(fg(&b, &["X"])),
        &Ideal::FinGen(fg(&b, &["X + 1"])),
        &spec,
    )
    .unwrap();
    assert_eq!(r.witness().unwrap().rendered(), vec!["X", "1 + X"]);
}

#[test]
fn valuation_semiring_membership() {
    let s = sr("sv(qnn, vp:5)");
    let i = fg(&s, &["50", "15"]);
    assert!(i.contains(&val(&s, "5/3")).unwrap());
    assert!(!i.contains(&val(&s, "2")).unwrap());
    assert_eq!(i.normalized().to_string(), "ideal[15]");
    let d = sr("sv(fractions(poly(nat)), deg-frac)");
    let x = fg(&d, &["X"]);
    assert!(x.contains(&val(&d, "(1 + X)/(1)")).unwrap());
    assert!(!x.contains(&val(&d, "1")).unwrap());
}

#[test]
fn semifield_and_order_oracles() {
    let qnn = sr("qnn");
    assert!(fg(&qnn, &["2"]).is_whole().unwrap());
    assert!(!fg(&qnn, &["0"]).contains(&val(&qnn, "1")).unwrap());
    let f = sr("fuzzy");
    let i = fg(&f, &["1/3", "1/2"]);
    assert!(i.contains(&val(&f, "1/2")).unwrap());
    assert!(!i.contains(&val(&f, "2/3")).unwrap());
    let t = sr("tropical-nat");
    let i = fg(&t, &["3"]);
    assert!(i.contains(&val(&t, "7")).unwrap());
    assert!(i.contains(&val(&t, "inf")).unwrap());
    assert!(!i.contains(&val(&t, "2")).unwrap());
    assert!(matches!(
        fg(&sr("poly(nat)"), &["X"]).contains(&val(&sr("poly(nat)"), "X")),
        Err(Error::NoOracle(_))
    ));
}

#[test]
fn intervals() {
    let closed = IntervalIdeal::new(q(1, 2), true).unwrap();
    let open = IntervalIdeal::new(q(1, 2), false).unwrap();
    assert!(open.is_subset(&closed));
    assert_eq!(open.subset_witness(&open), None);
    assert_eq!(closed.subset_witness(&open), Some(q(1, 2)));
    let r = ideals_comparable(
        &Ideal::Interval(closed.clone()),
        &Ideal::Interval(open),
        &SampleSpec::default(),
    )
    .unwrap();
    assert!(r.is_holds());
    assert!(IntervalIdeal::new(q(3, 2), true).is_err());
    assert!(IntervalIdeal::new(q(0, 1), false).unwrap().closed());
    assert_eq!(
        fuzzy_ideal_classify(&[(q(1, 3), true), (q(1, 2), true)]).unwrap(),
        closed
    );
    let whole = fuzzy_ideal_classify(&[(q(1, 1), true)]).unwrap();
    assert!(whole.contains(&q(1, 1)));
    assert_eq!(whole.to_string(), "fuzzy[0,1]");
}

#[test]
fn interval_subset_matches_dense_oracle() {
    let grid: Vec<BigRational> = (0..=24).map(|n| q(n, 24)).collect();
    let ideals: Vec<IntervalIdeal> = (0..=12)
        .flat_map(|n| [true, false].map(|c| IntervalIdeal::new(q(n, 12), c).unwrap()))
        .collect();
    for a in &ideals {
        for b in &ideals {
            let dense = grid.iter().all(|p| !a.contains(p) || b.contains(p));
            assert_eq!(a.is_subset(b), dense, "{a} {b}");
            assert_eq!(a.is_subset(b), a.order_key() <= b.order_key());
        }
    }
}

#[test]
fn subtractive_examples() {
    let spec = SampleSpec::new(1, 2000, 50);
    let qnn5 = Valuation::parse(&sr("qnn"), "vp:5").unwrap();
    let r = is_subtractive_bounded(&Ideal::Level(LevelIdeal::pv(&qnn5)), &spec).unwrap();
    assert!(r.is_holds(), "{r}");
    let deg = Valuation::parse(&sr("fractions(poly(nat))"), "deg-frac").unwrap();
    let r = is_subtractive_bounded(&Ideal::Level(LevelIdeal::pv(&deg)), &spec).unwrap();
    assert_eq!(r.witness().unwrap().rendered(), vec!["X", "1"]);
    let nat = sr("nat");
    let z = is_subtractive_bounded(&Ideal::FinGen(FinGenIdeal::zero(nat.clone())), &spec).unwrap();
    assert!(z.is_holds());
    let two = is_subtractive_bounded(&Ideal::FinGen(fg(&nat, &["2", "3"])), &spec).unwrap();
    assert!(!two.is_holds());
}

#[test]
fn prime_examples() {
    let spec = SampleSpec::new(1, 2000, 50);
    let nat = sr("nat");
    let r = is_prime_bounded(&Ideal::FinGen(fg(&nat, &["4"])), &spec).unwrap();
    assert!(!r.is_holds());
    let z = sr("ideals-z");
    assert!(is_prime_bounded(&Ideal::FinGen(fg(&z, &["5"])), &spec)
        .unwrap()
        .is_holds());
    for (s, rule) in [
        ("qnn", "vp:5"),
        ("fractions(poly(nat))", "deg-frac"),
        ("tropical-int", "tropical-id"),
    ] {
        let v = Valuation::parse(&sr(s), rule).unwrap();
        let r = is_prime_bounded(&Ideal::Level(LevelIdeal::pv(&v)), &spec).unwrap();
        assert!(r.is_holds(), "{r}");
    }
    assert!(matches!(
        is_prime_bounded(&Ideal::FinGen(fg(&nat, &["1"])), &spec),
        Err(Error::WholeIdeal)
    ));
}

#[test]
fn parsed_ideals() {
    let nat = sr("nat");
    let Ideal::FinGen(i) = parse_ideal("ideal[2, 3]", &nat).unwrap() else {
        panic!()
    };
    assert_eq!(i, fg(&nat, &["2", "3"]));
}

#[test]
fn level_chain_is_strict() {
    let v = Valuation::parse(&sr("qnn"), "vp:5").unwrap();
    let s = Arc::new(v.sv());
    // With integer values J_(α+1) = I_α, so strictness needs β >= α + 2.
    for (a, b) in [(0i64, 2i64), (1, 3), (2, 5)] {
        let (qa, qb) = (q(a, 1), q(b, 1));
        let chain = [
            LevelIdeal::new(&v, qb.clone(), true).unwrap(),
            LevelIdeal::new(&v, qb, false).unwrap(),
            LevelIdeal::new(&v, qa.clone(), true).unwrap(),
            LevelIdeal::new(&v, qa, false).unwrap(),
        ];
        let powers: Vec<Value> = (0..=6).map(|k| val(&s, &format!("5^{k}"))).collect();
        for w in chain.windows(2) {
            assert!(powers.iter().all(|x| !w[0].contains(x) || w[1].contains(x)));
            assert!(powers.iter().any(|x| w[1].contains(x) && !w[0].contains(x)));
        }
    }
}

#[test]
fn adjacent_levels_coincide_for_integer_values() {
    let v = Valuation::parse(&sr("qnn"), "vp:5").unwrap();
    let s = Arc::new(v.sv());
    let i0 = LevelIdeal::new(&v, q(0, 1), true).unwrap();
    let j1 = LevelIdeal::j(&v, q(1, 1)).unwrap();
    for k in 0..6 {
        let x = val(&s, &format!("2*5^{k}/3"));
        assert_eq!(i0.contains(&x), j1.contains(&x));
    }
}
