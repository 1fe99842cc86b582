use super::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sr(s: &str) -> Arc<Semiring> {
    Arc::new(s.parse().unwrap())
}

fn el(s: &Arc<Semiring>, x: &str) -> Element {
    Element::parse(x, s).unwrap()
}

fn ops(s: &str, a: &str, b: &str) -> (String, String) {
    let s = sr(s);
    let (a, b) = (el(&s, a), el(&s, b));
    (
        sr_add(&a, &b).unwrap().to_string(),
        sr_mul(&a, &b).unwrap().to_string(),
    )
}

#[test]
fn arithmetic_examples() {
    assert_eq!(ops("tropical-int", "3", "5"), ("3".into(), "8".into()));
    assert_eq!(ops("tropical-nat", "inf", "5"), ("5".into(), "inf".into()));
    assert_eq!(ops("ideals-z", "4", "6"), ("2".into(), "24".into()));
    assert_eq!(ops("fuzzy", "1/2", "3/4"), ("3/4".into(), "1/2".into()));
    assert_eq!(ops("bool-poly", "X", "X").0, "X");
    assert_eq!(ops("bool-poly", "1 + X", "1 + X").1, "1 + X + X^2");
    assert_eq!(ops("nat", "2", "3"), ("5".into(), "6".into()));
    assert_eq!(ops("monoid(nat, Z)", "X^-1", "X").1, "1");
}

#[test]
fn fraction_equality_is_cross_multiplication() {
    let f = sr("fractions(nat)");
    assert_eq!(el(&f, "(2)/(4)"), el(&f, "1/2"));
    assert!(sr_eq(&el(&f, "(2)/(4)"), &el(&f, "(1)/(2)")).unwrap());
    let fp = sr("fractions(poly(nat))");
    assert!(sr_eq(&el(&fp, "(2 + 2*X)/(2*X)"), &el(&fp, "(1 + X)/(X)")).unwrap());
}

#[test]
fn units() {
    assert!(is_unit(&el(&sr("nat"), "1")));
    assert!(!is_unit(&el(&sr("nat"), "2")));
    assert!(is_unit(&el(&sr("qnn"), "2/3")));
    assert!(is_unit(&el(&sr("tropical-int"), "-4")));
    assert!(!is_unit(&el(&sr("tropical-nat"), "4")));
    assert!(is_unit(&el(&sr("tropical-nat"), "0")));
    assert!(is_unit(&el(&sr("laurent(nat)"), "X^-3")));
    assert!(!is_unit(&el(&sr("poly(nat)"), "X")));
    assert!(!is_unit(&el(&sr("sv(qnn, vp:5)"), "5")));
    assert!(is_unit(&el(&sr("sv(qnn, vp:5)"), "2/3")));
}

#[test]
fn carrier_checks() {
    assert!(Element::parse("X^-1", &sr("poly(nat)")).is_err());
    assert!(Element::parse("3/2", &sr("fuzzy")).is_err());
    assert!(Element::parse("inf", &sr("nat")).is_err());
    assert!(Element::parse("1/5", &sr("sv(qnn, vp:5)")).is_err());
    assert!(Element::parse("X^(1/2)", &sr("monoid(nat, Q)")).is_ok());
    assert!(sr_add(&el(&sr("nat"), "1"), &el(&sr("qnn"), "1")).is_err());
}

#[test]
fn descriptors_round_trip() {
    for d in [
        "nat",
        "qnn",
        "bool-poly",
        "fuzzy",
        "tropical-nat",
        "tropical-int",
        "ideals-z",
        "poly(nat)",
        "laurent(fuzzy)",
        "monoid(qnn, Q)",
        "fractions(poly(nat))",
        "sv(qnn, vp:5)",
    ] {
        assert_eq!(sr(d).to_string(), d);
    }
    assert!("poly(poly(nat))".parse::<Semiring>().is_err());
    assert!("fractions(fuzzy)".parse::<Semiring>().is_err());
    assert!("integers".parse::<Semiring>().is_err());
}

#[test]
fn semifield_flags_imply_mc_and_entire() {
    for d in [
        "nat",
        "qnn",
        "bool-poly",
        "fuzzy",
        "tropical-nat",
        "tropical-int",
        "ideals-z",
        "poly(nat)",
        "laurent(fuzzy)",
        "fractions(nat)",
        "sv(qnn, vp:5)",
    ] {
        let c = sr(d).capabilities();
        assert!(!c.semifield || c.mc, "{d}");
        assert!(!c.mc || c.entire, "{d}");
    }
}

const SAMPLED: &[&str] = &[
    "nat",
    "qnn",
    "bool-poly",
    "fuzzy",
    "tropical-nat",
    "tropical-int",
    "ideals-z",
    "poly(nat)",
    "laurent(qnn)",
    "monoid(nat, Q)",
    "fractions(nat)",
    "fractions(poly(nat))",
    "fractions(ideals-z)",
    "sv(qnn, vp:5)",
];

proptest! {
    #[test]
    fn canonical_is_idempotent_and_printable(seed in any::<u64>(), idx in 0..SAMPLED.len()) {
        let s = sr(SAMPLED[idx]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = s.sample(&mut rng, Sampler::new(20));
        let c = s.canonical(&x);
        prop_assert_eq!(&s.canonical(&c), &c);
        prop_assert!(s.check(&c).is_ok());
        let back = Element::parse(&s.fmt_value(&c), &s).unwrap();
        prop_assert!(s.equals(back.value(), &c));
    }

    #[test]
    fn semifield_inverses(seed in any::<u64>(), idx in 0..4usize) {
        let s = sr(["qnn", "tropical-int", "fractions(nat)", "fractions(poly(nat))"][idx]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = s.sample(&mut rng, Sampler::new(20));
        match s.inverse(&x) {
            Some(inv) => prop_assert!(s.is_one(&s.mul(&x, &inv))),
            None => prop_assert!(s.is_zero(&x)),
        }
    }
}
