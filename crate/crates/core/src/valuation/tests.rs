use super::*;
use crate::report::SampleSpec;

fn sr(s: &str) -> Arc<Semiring> {
    Arc::new(s.parse().unwrap())
}

fn val(source: &str, rule: &str) -> Valuation {
    Valuation::parse(&sr(source), rule).unwrap()
}

fn at(v: &Valuation, x: &str) -> String {
    let e = Element::parse(x, v.source_arc()).unwrap();
    valuate(v, &e).unwrap().to_string()
}

/// Independent oracle: repeated division by `p` on machine integers.
fn vp_oracle(mut n: u64, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    Some(k)
}

#[test]
fn rule_strings_round_trip() {
    for r in [
        "trivial",
        "vp:5",
        "low-order",
        "deg-high",
        "tropical-id",
        "deg-frac",
        "vm-idz:5",
        "ext(vp:5)",
        "value-group(vp:5)",
    ] {
        assert_eq!(r.parse::<Rule>().unwrap().to_string(), r);
    }
    assert!(matches!(
        "vp:4".parse::<Rule>(),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!("deg".parse::<Rule>(), Err(Error::UnknownRule(_))));
}

#[test]
fn valuate_examples() {
    let v = val("nat", "vp:5");
    assert_eq!(at(&v, "50"), "2");
    assert_eq!(at(&v, "0"), "inf");
    assert_eq!(at(&val("laurent(nat)", "low-order"), "X^-2 + 3*X"), "-2");
    assert_eq!(at(&val("laurent(nat)", "deg-high"), "X^-2 + 3*X"), "1");
    assert_eq!(at(&val("qnn", "vp:5"), "50/3"), "2");
    assert_eq!(at(&val("qnn", "vp:5"), "3/25"), "-2");
    assert_eq!(at(&val("tropical-int", "tropical-id"), "-7"), "-7");
    assert_eq!(
        at(&val("fractions(poly(nat))", "deg-frac"), "(X^3)/(1 + X)"),
        "2"
    );
    assert_eq!(at(&val("fractions(ideals-z)", "vm-idz:5"), "(50)/(3)"), "2");
}

#[test]
fn vp_agrees_with_division_oracle() {
    let v = val("nat", "vp:3");
    for n in 0..2000u64 {
        let e = Element::parse(&n.to_string(), v.source_arc()).unwrap();
        let expected = vp_oracle(n, 3).map_or("inf".to_string(), |k| k.to_string());
        assert_eq!(valuate(&v, &e).unwrap().to_string(), expected);
    }
}

#[test]
fn inapplicable_rules_are_rejected() {
    assert!(Valuation::parse(&sr("nat"), "deg-frac").is_err());
    assert!(Valuation::parse(&sr("fuzzy"), "vp:5").is_err());
    assert!(Valuation::parse(&sr("poly(nat)"), "tropical-id").is_err());
    assert!(Valuation::parse(&sr("nat"), "value-group(vp:5)").is_err());
}

#[test]
fn foreign_elements_are_rejected() {
    let v = val("nat", "vp:5");
    let x = Element::parse("5", &sr("qnn")).unwrap();
    assert!(matches!(
        valuate(&v, &x),
        Err(Error::InstanceMismatch { .. })
    ));
}

#[test]
fn uniformizers() {
    assert_eq!(val("qnn", "vp:5").uniformizer().unwrap().to_string(), "5");
    assert_eq!(
        val("tropical-int", "tropical-id")
            .uniformizer()
            .unwrap()
            .to_string(),
        "1"
    );
    assert_eq!(
        val("fractions(poly(nat))", "deg-frac")
            .uniformizer()
            .unwrap()
            .to_string(),
        "X"
    );
}

#[test]
fn value_group_matches_the_rule() {
    let spec = SampleSpec::new(3, 300, 50);
    for (source, rule) in [("qnn", "vp:5"), ("fractions(poly(nat))", "deg-frac")] {
        let v = val(source, rule);
        let g = val(source, &format!("value-group({rule})"));
        let mut rng = spec.rng("vg");
        for _ in 0..spec.count {
            let x = v.source().sample(&mut rng, spec.sampler());
            assert_eq!(
                v.eval(&x).value,
                g.eval(&x).value,
                "{}",
                v.source().fmt_value(&x)
            );
        }
    }
}

#[test]
fn axioms_hold_for_every_rule() {
    let spec = SampleSpec::new(1, 2000, 50);
    for (source, rule) in [
        ("nat", "trivial"),
        ("bool-poly", "low-order"),
        ("bool-poly", "deg-high"),
        ("nat", "vp:5"),
        ("qnn", "vp:5"),
        ("laurent(nat)", "low-order"),
        ("laurent(nat)", "deg-high"),
        ("monoid(nat, Q)", "low-order"),
        ("tropical-int", "tropical-id"),
        ("tropical-nat", "tropical-id"),
        ("fractions(poly(nat))", "deg-frac"),
        ("ideals-z", "vm-idz:5"),
        ("fractions(ideals-z)", "vm-idz:5"),
        ("fractions(nat)", "ext(vp:5)"),
        ("qnn", "value-group(vp:5)"),
    ] {
        let r = check_valuation_axioms(&val(source, rule), &spec);
        assert!(r.is_holds(), "{r}");
    }
}

#[test]
fn low_order_over_non_mc_coefficients() {
    let v = val("laurent(fuzzy)", "low-order");
    let r = check_valuation_axioms(&v, &SampleSpec::new(1, 500, 50));
    assert!(r.is_holds(), "{r}");
}

#[test]
fn min_property_examples() {
    let spec = SampleSpec::new(1, 2000, 50);
    let deg = val("fractions(poly(nat))", "deg-frac");
    let r = check_min_property(&deg, &spec);
    let MinPropertyReport::Counterexample {
        x, y, vx, vy, vxy, ..
    } = &r
    else {
        panic!("deg-frac has the min-property?")
    };
    assert_eq!((x.to_string(), y.to_string()), ("1".into(), "X".into()));
    assert_eq!(
        (vx.to_string(), vy.to_string(), vxy.to_string()),
        ("0".into(), "1".into(), "1".into())
    );
    assert!(r.reverify(&deg));
    assert!(check_min_property(&val("qnn", "vp:5"), &spec).holds());
    assert!(check_min_property(&val("monoid(nat, N0)", "low-order"), &spec).holds());
}

#[test]
fn level_sets() {
    let v = val("nat", "vp:5");
    let z = |n| ExtendedValue::fin_int(Tomonoid::N0, n).unwrap();
    let two = Element::parse("2", v.source_arc()).unwrap();
    assert!(level_membership(&v, &two, &z(0), false, true).unwrap());
    assert!(!level_membership(&v, &two, &z(0), true, true).unwrap());
    let zero = Element::parse("0", v.source_arc()).unwrap();
    for a in 0..20 {
        assert!(level_membership(&v, &zero, &z(a), true, true).unwrap());
    }
    let d = val("fractions(poly(nat))", "deg-frac");
    let x = Element::parse("X", d.source_arc()).unwrap();
    let zz = ExtendedValue::fin_int(Tomonoid::Z, 0).unwrap();
    assert!(level_membership(&d, &x, &zz, true, false).unwrap());
    let inv = Element::parse("(1)/(X)", d.source_arc()).unwrap();
    assert!(!level_membership(
        &d,
        &inv,
        &ExtendedValue::fin_int(Tomonoid::Z, -3).unwrap(),
        false,
        true
    )
    .unwrap());
}

#[test]
fn units_against_zero_values() {
    let spec = SampleSpec::new(1, 2000, 50);
    assert!(units_vs_zeroset(&val("qnn", "vp:5"), &spec)
        .unwrap()
        .is_holds());
    assert!(units_vs_zeroset(&val("tropical-int", "tropical-id"), &spec)
        .unwrap()
        .is_holds());
    assert!(units_vs_zeroset(&val("qnn", "trivial"), &spec)
        .unwrap()
        .is_holds());
    let r = units_vs_zeroset(&val("laurent(nat)", "low-order"), &spec).unwrap();
    assert_eq!(r.witness().unwrap().rendered(), vec!["1 + X".to_string()]);
}
