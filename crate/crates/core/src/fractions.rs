//! Semifields of fractions, groups of differences and the extension of a
//! valuation to fractions.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instances::{same_instance, Element, Semiring, Value};
use crate::tomonoid::{fmt_rational, Tomonoid};
use crate::valuation::{Rule, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FracOp {
    Add,
    Mul,
    Inv,
}

/// `add`, `mul` (binary) or `inv` (unary) on elements of a fraction semifield.
pub fn frac_arith(op: FracOp, a: &Element, b: Option<&Element>) -> Result<Element> {
    let s = a.semiring_arc();
    if !matches!(s.as_ref(), Semiring::Fractions(_)) {
        return Err(Error::InvalidArgument(format!(
            "{s} is not a fraction semifield"
        )));
    }
    let binary = |b: Option<&Element>| -> Result<Value> {
        let b = b.ok_or_else(|| Error::InvalidArgument("missing second operand".into()))?;
        same_instance(s, b.semiring())?;
        Ok(b.value().clone())
    };
    let value = match op {
        FracOp::Add => s.add(a.value(), &binary(b)?),
        FracOp::Mul => s.mul(a.value(), &binary(b)?),
        FracOp::Inv => {
            if a.is_zero() {
                return Err(Error::ZeroElement);
            }
            s.inverse(a.value())
                .expect("nonzero fractions are invertible")
        }
    };
    Element::new(s.clone(), s.canonical(&value))
}

/// The fraction `z/1`.
pub fn embed(fractions: &Arc<Semiring>, z: &Element) -> Result<Element> {
    let Semiring::Fractions(base) = fractions.as_ref() else {
        return Err(Error::InvalidArgument(format!(
            "{fractions} is not a fraction semifield"
        )));
    };
    same_instance(base, z.semiring().ambient())?;
    let v = Value::Frac(Box::new(z.value().clone()), Box::new(base.one()));
    Element::new(fractions.clone(), fractions.canonical(&v))
}

/// A formal difference `pos - neg` in `gp(M)`.
#[derive(Debug, Clone)]
pub struct DifferencePair {
    pub domain: Tomonoid,
    pub pos: BigRational,
    pub neg: BigRational,
}

impl DifferencePair {
    pub fn new(domain: Tomonoid, pos: BigRational, neg: BigRational) -> Result<DifferencePair> {
        if !domain.is_cancellative() {
            return Err(Error::InvalidArgument(format!(
                "{domain} is not cancellative"
            )));
        }
        for m in [&pos, &neg] {
            if !domain.contains(m) {
                return Err(Error::InvalidArgument(format!(
                    "{} is not an element of {domain}",
                    fmt_rational(m)
                )));
            }
        }
        Ok(DifferencePair { domain, pos, neg })
    }

    /// `m ↦ (m - 0)`.
    pub fn embed(domain: Tomonoid, m: BigRational) -> Result<DifferencePair> {
        DifferencePair::new(domain, m, BigRational::zero())
    }

    fn check(&self, other: &DifferencePair) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain.to_string(),
                right: other.domain.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DifferencePair) -> Result<DifferencePair> {
        self.check(other)?;
        Ok(DifferencePair {
            domain: self.domain.clone(),
            pos: &self.pos + &other.pos,
            neg: &self.neg + &other.neg,
        })
    }

    /// `(x1 - x2) <= (y1 - y2)` iff `x1 + y2 <= x2 + y1`.
    pub fn leq(&self, other: &DifferencePair) -> Result<bool> {
        self.check(other)?;
        Ok(&self.pos + &other.neg <= &self.neg + &other.pos)
    }

    /// `(x1 - x2) = (y1 - y2)` iff `x1 + y2 = x2 + y1`.
    pub fn equals(&self, other: &DifferencePair) -> Result<bool> {
        self.check(other)?;
        Ok(&self.pos + &other.neg == &self.neg + &other.pos)
    }

    pub fn cmp(&self, other: &DifferencePair) -> Result<Ordering> {
        self.check(other)?;
        Ok((&self.pos + &other.neg).cmp(&(&self.neg + &other.pos)))
    }

    /// The rational `pos - neg`; every registered tomonoid embeds in `Q`.
    pub fn normalize(&self) -> BigRational {
        &self.pos - &self.neg
    }
}

impl fmt::Display for DifferencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} - {})",
            fmt_rational(&self.pos),
            fmt_rational(&self.neg)
        )
    }
}

/// `v'(x/y) = v(x) - v(y)` on the fraction semifield, valued in `gp(M)`.
pub fn extend_valuation(v: &Valuation) -> Result<Valuation> {
    let source = v.source();
    if !source.capabilities().mc {
        return Err(Error::InvalidArgument(format!(
            "{source} is not multiplicatively cancellative"
        )));
    }
    if !v.codomain().is_cancellative() {
        return Err(Error::InvalidArgument(format!(
            "{} is not cancellative",
            v.codomain()
        )));
    }
    Valuation::new(
        Arc::new(Semiring::fractions(source.clone())),
        Rule::Extended(Box::new(v.rule().clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::valuate;
    use proptest::prelude::*;

    fn sr(s: &str) -> Arc<Semiring> {
        Arc::new(s.parse().unwrap())
    }

    fn el(s: &Arc<Semiring>, x: &str) -> Element {
        Element::parse(x, s).unwrap()
    }

    fn n0(a: i64, b: i64) -> DifferencePair {
        DifferencePair::new(
            Tomonoid::N0,
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f = sr("fractions(nat)");
        let sum = frac_arith(FracOp::Add, &el(&f, "1/2"), Some(&el(&f, "1/3"))).unwrap();
        assert_eq!(sum, el(&f, "(5)/(6)"));
        assert_eq!(sum.to_string(), "(5)/(6)");
        let fp = sr("fractions(poly(nat))");
        let inv = frac_arith(FracOp::Inv, &el(&fp, "(X)/(1+X)"), None).unwrap();
        assert_eq!(inv, el(&fp, "(1+X)/(X)"));
        let fz = sr("fractions(ideals-z)");
        assert_eq!(el(&fz, "(4)/(6)").to_string(), "(2)/(3)");
        assert!(matches!(
            frac_arith(FracOp::Inv, &el(&f, "0"), None),
            Err(Error::ZeroElement)
        ));
        assert!(frac_arith(FracOp::Add, &el(&f, "1"), Some(&el(&fz, "1"))).is_err());
    }

    #[test]
    fn zero_over_anything_is_zero() {
        let fp = sr("fractions(poly(nat))");
        let z = el(&fp, "(0)/(1+X)");
        assert!(z.is_zero());
        assert_eq!(z, el(&fp, "0"));
    }

    #[test]
    fn difference_examples() {
        assert!(n0(2, 5).leq(&n0(4, 1)).unwrap());
        assert!(n0(3, 1).equals(&n0(5, 3)).unwrap());
        let e = |m: i64| {
            DifferencePair::embed(Tomonoid::N0, BigRational::from_integer(m.into())).unwrap()
        };
        assert!(e(4).add(&e(1)).unwrap().equals(&n0(5, 0)).unwrap());
        assert!(DifferencePair::new(
            Tomonoid::N0,
            BigRational::from_integer((-1).into()),
            BigRational::zero()
        )
        .is_err());
    }

    #[test]
    fn extension_examples() {
        let v = Valuation::parse(&sr("nat"), "vp:5").unwrap();
        let w = extend_valuation(&v).unwrap();
        assert_eq!(w.codomain(), &Tomonoid::N0.gp());
        let f = w.source_arc().clone();
        assert_eq!(valuate(&w, &el(&f, "(2)/(5)")).unwrap().to_string(), "-1");
        assert_eq!(valuate(&w, &el(&f, "(10)/(2)")).unwrap().to_string(), "1");
        assert_eq!(valuate(&w, &el(&f, "0")).unwrap().to_string(), "inf");
        let lo = Valuation::parse(&sr("poly(nat)"), "low-order").unwrap();
        let lw = extend_valuation(&lo).unwrap();
        let x = el(lw.source_arc(), "(X^2)/(1+X)");
        assert_eq!(valuate(&lw, &x).unwrap().to_string(), "2");
        let fz = Valuation::parse(&sr("fuzzy"), "trivial").unwrap();
        assert!(extend_valuation(&fz).is_err());
    }

    #[test]
    fn embedded_elements_keep_their_value() {
        let v = Valuation::parse(&sr("nat"), "vp:5").unwrap();
        let w = extend_valuation(&v).unwrap();
        for n in 0..300u32 {
            let z = el(v.source_arc(), &n.to_string());
            let e = embed(w.source_arc(), &z).unwrap();
            assert_eq!(
                valuate(&v, &z).unwrap().embed_gp(),
                valuate(&w, &e).unwrap()
            );
        }
    }

    proptest! {
        #[test]
        fn gp_n0_is_ordered_like_z(a in 0i64..100, b in 0i64..100, c in 0i64..100, d in 0i64..100) {
            let (x, y) = (n0(a, b), n0(c, d));
            prop_assert_eq!(x.leq(&y).unwrap(), a - b <= c - d);
            prop_assert_eq!(x.equals(&y).unwrap(), a - b == c - d);
            let s = x.add(&y).unwrap().normalize();
            prop_assert_eq!(s, BigRational::from_integer((a - b + c - d).into()));
            let zero = n0(0, 0);
            let ea = DifferencePair::embed(Tomonoid::N0, BigRational::from_integer(a.into())).unwrap();
            prop_assert!(zero.leq(&ea).unwrap());
        }

        #[test]
        fn fraction_ops_respect_equivalence(a in 0u32..30, b in 1u32..30, c in 0u32..30, d in 1u32..30, k in 1u32..6) {
            let f = sr("fractions(poly(nat))");
            let x = el(&f, &format!("({a} + X)/({b})"));
            let x2 = el(&f, &format!("({k}*({a} + X))/({k}*{b})"));
            let y = el(&f, &format!("({c})/({d} + X)"));
            prop_assert_eq!(&x, &x2);
            for op in [FracOp::Add, FracOp::Mul] {
                prop_assert_eq!(frac_arith(op, &x, Some(&y)).unwrap(), frac_arith(op, &x2, Some(&y)).unwrap());
            }
            prop_assert_eq!(frac_arith(FracOp::Inv, &x, None).unwrap(), frac_arith(FracOp::Inv, &x2, None).unwrap());
        }
    }
}
