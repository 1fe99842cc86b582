//! The concrete semiring catalogue.
//!
//! A [`Semiring`] is a descriptor naming one registered instance (possibly
//! built from other instances). Payloads are plain [`Value`]s kept in
//! canonical form; the descriptor supplies the operations. [`Element`] pairs a
//! value with its descriptor and checks instance agreement.

pub(crate) mod bits;
pub(crate) mod monoid;
mod sample;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::tomonoid::{fmt_rational, Tomonoid};
use crate::valuation::{self, Rule};

pub use bits::BitPoly;
pub use monoid::Terms;
pub use sample::Sampler;

/// Exponent monoid of a monoid semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentMonoid {
    N0,
    Z,
    Q,
}

impl ExponentMonoid {
    pub fn contains(self, e: &BigRational) -> bool {
        match self {
            ExponentMonoid::N0 => e.is_integer() && !e.is_negative(),
            ExponentMonoid::Z => e.is_integer(),
            ExponentMonoid::Q => true,
        }
    }

    pub fn is_group(self) -> bool {
        !matches!(self, ExponentMonoid::N0)
    }

    pub fn tomonoid(self) -> Tomonoid {
        match self {
            ExponentMonoid::N0 => Tomonoid::N0,
            ExponentMonoid::Z => Tomonoid::Z,
            ExponentMonoid::Q => Tomonoid::Q,
        }
    }
}

impl fmt::Display for ExponentMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExponentMonoid::N0 => "N0",
            ExponentMonoid::Z => "Z",
            ExponentMonoid::Q => "Q",
        })
    }
}

/// Semiring descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// `(N0, +, *)`
    Nat,
    /// Nonnegative rationals.
    Qnn,
    /// `B[X]`
    BoolPoly,
    /// `([0,1] ∩ Q, max, min)`
    Fuzzy,
    /// `(N0 ∪ {inf}, min, +)`
    TropicalNat,
    /// `(Z ∪ {inf}, min, +)`
    TropicalInt,
    /// `Id(Z)`, an ideal stored by its nonnegative generator: `(N0, gcd, *)`.
    IdealsZ,
    Poly(Box<Semiring>),
    Laurent(Box<Semiring>),
    Monoid(Box<Semiring>, ExponentMonoid),
    /// Semifield of fractions of an MC semiring.
    Fractions(Box<Semiring>),
    /// The valuation subsemiring `{x : v(x) >= 0}` of an ambient semiring.
    Sv(Box<Semiring>, Rule),
}

/// Capability flags. `semifield ⇒ mc ⇒ entire` holds for every entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub mc: bool,
    pub entire: bool,
    pub zerosumfree: bool,
    pub semifield: bool,
    pub has_unit_test: bool,
    pub has_ideal_membership_oracle: bool,
}

/// Canonical payload of an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    /// `nat` and `ideals-z`.
    Nat(BigUint),
    /// `qnn` and `fuzzy`.
    Rat(BigRational),
    Bits(BitPoly),
    /// Tropical values; `None` is `inf`.
    Trop(Option<BigInt>),
    Poly(Terms),
    Frac(Box<Value>, Box<Value>),
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Semiring {
    pub fn poly(base: Semiring) -> Semiring {
        Semiring::Poly(Box::new(base))
    }

    pub fn laurent(base: Semiring) -> Semiring {
        Semiring::Laurent(Box::new(base))
    }

    pub fn monoid(base: Semiring, exponents: ExponentMonoid) -> Semiring {
        Semiring::Monoid(Box::new(base), exponents)
    }

    pub fn fractions(base: Semiring) -> Semiring {
        Semiring::Fractions(Box::new(base))
    }

    pub fn sv(ambient: Semiring, rule: Rule) -> Semiring {
        Semiring::Sv(Box::new(ambient), rule)
    }

    /// Base and exponent monoid when this is a monoid semiring over a registry base.
    pub fn as_monoid(&self) -> Option<(&Semiring, ExponentMonoid)> {
        match self {
            Semiring::Poly(b) => Some((b, ExponentMonoid::N0)),
            Semiring::Laurent(b) => Some((b, ExponentMonoid::Z)),
            Semiring::Monoid(b, m) => Some((b, *m)),
            _ => None,
        }
    }

    /// The semiring whose operations this one uses (`S_v` delegates to its ambient).
    pub fn ambient(&self) -> &Semiring {
        match self {
            Semiring::Sv(k, _) => k.ambient(),
            other => other,
        }
    }

    fn has_indeterminate(&self) -> bool {
        match self {
            Semiring::BoolPoly
            | Semiring::Poly(_)
            | Semiring::Laurent(_)
            | Semiring::Monoid(..) => true,
            Semiring::Fractions(b) | Semiring::Sv(b, _) => b.has_indeterminate(),
            _ => false,
        }
    }

    /// Subsemiring of a commutative ring (hence MC, and so are its monoid semirings).
    fn ring_embeddable(&self) -> bool {
        match self {
            Semiring::Nat | Semiring::Qnn => true,
            Semiring::Poly(b)
            | Semiring::Laurent(b)
            | Semiring::Monoid(b, _)
            | Semiring::Fractions(b)
            | Semiring::Sv(b, _) => b.ring_embeddable(),
            _ => false,
        }
    }

    /// `S_v` equal to its source: the rule never takes negative values.
    pub(crate) fn is_whole_source(&self) -> bool {
        match self {
            Semiring::Sv(k, rule) => matches!(
                valuation::codomain(k, rule),
                Ok(Tomonoid::Trivial | Tomonoid::N0)
            ),
            _ => false,
        }
    }

    /// Rejects descriptors that do not name a registered instance.
    pub fn validate(&self) -> Result<()> {
        let invalid = |reason: &str| Error::InvalidDescriptor {
            descriptor: self.to_string(),
            reason: reason.to_string(),
        };
        match self {
            Semiring::Poly(b) | Semiring::Laurent(b) | Semiring::Monoid(b, _) => {
                b.validate()?;
                if b.has_indeterminate() {
                    return Err(invalid("nested indeterminates are not supported"));
                }
                Ok(())
            }
            Semiring::Fractions(b) => {
                b.validate()?;
                if !b.capabilities().mc {
                    return Err(invalid("the base is not multiplicatively cancellative"));
                }
                Ok(())
            }
            Semiring::Sv(k, rule) => {
                k.validate()?;
                valuation::codomain(k, rule)?;
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn capabilities(&self) -> Capabilities {
        let caps = |mc, entire, semifield, oracle| Capabilities {
            mc,
            entire,
            zerosumfree: true,
            semifield,
            has_unit_test: true,
            has_ideal_membership_oracle: oracle,
        };
        match self {
            Semiring::Nat | Semiring::IdealsZ | Semiring::TropicalNat => {
                caps(true, true, false, true)
            }
            Semiring::Qnn | Semiring::TropicalInt => caps(true, true, true, true),
            Semiring::BoolPoly | Semiring::Fuzzy => caps(false, true, false, true),
            Semiring::Poly(b) | Semiring::Laurent(b) | Semiring::Monoid(b, _) => {
                caps(b.ring_embeddable(), b.capabilities().entire, false, false)
            }
            Semiring::Fractions(_) => caps(true, true, true, true),
            Semiring::Sv(k, rule) => {
                let kc = k.capabilities();
                let semifield = kc.semifield && *rule == Rule::Trivial;
                let oracle =
                    kc.semifield || (kc.has_ideal_membership_oracle && self.is_whole_source());
                caps(kc.mc, kc.entire, semifield, oracle)
            }
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            Semiring::Nat | Semiring::IdealsZ => Value::Nat(BigUint::zero()),
            Semiring::Qnn | Semiring::Fuzzy => Value::Rat(BigRational::zero()),
            Semiring::BoolPoly => Value::Bits(BitPoly::new()),
            Semiring::TropicalNat | Semiring::TropicalInt => Value::Trop(None),
            Semiring::Poly(_) | Semiring::Laurent(_) | Semiring::Monoid(..) => {
                Value::Poly(Terms::new())
            }
            Semiring::Fractions(b) => Value::Frac(Box::new(b.zero()), Box::new(b.one())),
            Semiring::Sv(k, _) => k.zero(),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Semiring::Nat | Semiring::IdealsZ => Value::Nat(BigUint::one()),
            Semiring::Qnn | Semiring::Fuzzy => Value::Rat(BigRational::one()),
            Semiring::BoolPoly => Value::Bits(BTreeSet::from([0])),
            Semiring::TropicalNat | Semiring::TropicalInt => Value::Trop(Some(BigInt::zero())),
            Semiring::Poly(b) | Semiring::Laurent(b) | Semiring::Monoid(b, _) => {
                Value::Poly(Terms::from([(BigRational::zero(), b.one())]))
            }
            Semiring::Fractions(b) => Value::Frac(Box::new(b.one()), Box::new(b.one())),
            Semiring::Sv(k, _) => k.one(),
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Semiring::Nat, Value::Nat(x), Value::Nat(y)) => Value::Nat(x + y),
            (Semiring::IdealsZ, Value::Nat(x), Value::Nat(y)) => Value::Nat(x.gcd(y)),
            (Semiring::Qnn, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            (Semiring::Fuzzy, Value::Rat(x), Value::Rat(y)) => Value::Rat(x.max(y).clone()),
            (Semiring::BoolPoly, Value::Bits(x), Value::Bits(y)) => Value::Bits(bits::add(x, y)),
            (Semiring::TropicalNat | Semiring::TropicalInt, Value::Trop(x), Value::Trop(y)) => {
                Value::Trop(match (x, y) {
                    (None, other) | (other, None) => other.clone(),
                    (Some(x), Some(y)) => Some(x.min(y).clone()),
                })
            }
            (Semiring::Fractions(base), Value::Frac(an, ad), Value::Frac(bn, bd)) => {
                let num = base.add(&base.mul(an, bd), &base.mul(ad, bn));
                self.reduce(num, base.mul(ad, bd))
            }
            (Semiring::Sv(k, _), _, _) => k.add(a, b),
            (s, Value::Poly(x), Value::Poly(y)) => {
                let (base, _) = s
                    .as_monoid()
                    .expect("polynomial payload on a monoid semiring");
                Value::Poly(monoid::add(base, x, y))
            }
            _ => panic!("payload does not belong to {self}"),
        }
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Semiring::Nat | Semiring::IdealsZ, Value::Nat(x), Value::Nat(y)) => Value::Nat(x * y),
            (Semiring::Qnn, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            (Semiring::Fuzzy, Value::Rat(x), Value::Rat(y)) => Value::Rat(x.min(y).clone()),
            (Semiring::BoolPoly, Value::Bits(x), Value::Bits(y)) => Value::Bits(bits::mul(x, y)),
            (Semiring::TropicalNat | Semiring::TropicalInt, Value::Trop(x), Value::Trop(y)) => {
                Value::Trop(match (x, y) {
                    (Some(x), Some(y)) => Some(x + y),
                    _ => None,
                })
            }
            (Semiring::Fractions(base), Value::Frac(an, ad), Value::Frac(bn, bd)) => {
                self.reduce(base.mul(an, bn), base.mul(ad, bd))
            }
            (Semiring::Sv(k, _), _, _) => k.mul(a, b),
            (s, Value::Poly(x), Value::Poly(y)) => {
                let (base, _) = s
                    .as_monoid()
                    .expect("polynomial payload on a monoid semiring");
                Value::Poly(monoid::mul(base, x, y))
            }
            _ => panic!("payload does not belong to {self}"),
        }
    }

    /// Semantic equality: canonical forms, cross-multiplication for fractions.
    pub fn equals(&self, a: &Value, b: &Value) -> bool {
        match (self, a, b) {
            (Semiring::Fractions(base), Value::Frac(an, ad), Value::Frac(bn, bd)) => {
                base.equals(&base.mul(an, bd), &base.mul(ad, bn))
            }
            (Semiring::Sv(k, _), _, _) => k.equals(a, b),
            (s, Value::Poly(x), Value::Poly(y)) => match s.as_monoid() {
                Some((base, _)) => monoid::eq(base, x, y),
                None => false,
            },
            _ => a == b,
        }
    }

    pub fn is_zero(&self, a: &Value) -> bool {
        match (self, a) {
            (Semiring::Fractions(base), Value::Frac(n, _)) => base.is_zero(n),
            (Semiring::Sv(k, _), _) => k.is_zero(a),
            _ => self.equals(a, &self.zero()),
        }
    }

    pub fn is_one(&self, a: &Value) -> bool {
        self.equals(a, &self.one())
    }

    /// Builds `num/den`, reducing by the integer gcd when the base is `nat` or `ideals-z`.
    fn reduce(&self, num: Value, den: Value) -> Value {
        let Semiring::Fractions(base) = self else {
            unreachable!("reduce on a non-fraction semiring")
        };
        if base.is_zero(&num) {
            return Value::Frac(Box::new(base.zero()), Box::new(base.one()));
        }
        match (base.as_ref(), &num, &den) {
            (Semiring::Nat | Semiring::IdealsZ, Value::Nat(n), Value::Nat(d)) => {
                let g = n.gcd(d);
                Value::Frac(Box::new(Value::Nat(n / &g)), Box::new(Value::Nat(d / &g)))
            }
            _ => Value::Frac(Box::new(num), Box::new(den)),
        }
    }

    /// Canonical form of a payload; idempotent.
    pub fn canonical(&self, a: &Value) -> Value {
        match (self, a) {
            (Semiring::Fractions(base), Value::Frac(n, d)) => {
                self.reduce(base.canonical(n), base.canonical(d))
            }
            (Semiring::Sv(k, _), _) => k.canonical(a),
            (s, Value::Poly(t)) => match s.as_monoid() {
                Some((base, _)) => Value::Poly(monoid::canonical(base, t)),
                None => a.clone(),
            },
            _ => a.clone(),
        }
    }

    /// Multiplicative inverse inside this semiring, when it exists.
    pub fn inverse(&self, a: &Value) -> Option<Value> {
        match (self, a) {
            (Semiring::Nat | Semiring::IdealsZ, Value::Nat(n)) => n.is_one().then(|| a.clone()),
            (Semiring::Qnn, Value::Rat(q)) => (!q.is_zero()).then(|| Value::Rat(q.recip())),
            (Semiring::Fuzzy, Value::Rat(q)) => q.is_one().then(|| a.clone()),
            (Semiring::BoolPoly, Value::Bits(b)) => {
                (b.len() == 1 && b.contains(&0)).then(|| a.clone())
            }
            (Semiring::TropicalNat, Value::Trop(t)) => {
                t.as_ref().filter(|x| x.is_zero()).map(|_| a.clone())
            }
            (Semiring::TropicalInt, Value::Trop(t)) => t.as_ref().map(|x| Value::Trop(Some(-x))),
            (Semiring::Fractions(base), Value::Frac(n, d)) => {
                (!base.is_zero(n)).then(|| self.reduce((**d).clone(), (**n).clone()))
            }
            (Semiring::Sv(k, rule), _) => {
                let inv = k.inverse(a)?;
                valuation::evaluate(k, rule, &inv)
                    .is_nonnegative()
                    .then_some(inv)
            }
            (s, Value::Poly(t)) => {
                let (base, exps) = s.as_monoid()?;
                if t.len() != 1 {
                    return None;
                }
                let (e, c) = t.iter().next()?;
                if !exps.is_group() && !e.is_zero() {
                    return None;
                }
                let ci = base.inverse(c)?;
                Some(Value::Poly(Terms::from([(-e, ci)])))
            }
            _ => None,
        }
    }

    pub fn is_unit(&self, a: &Value) -> bool {
        self.inverse(a).is_some()
    }

    /// Interprets a numeric literal.
    pub fn literal(&self, q: &BigRational) -> Result<Value> {
        let reject = |reason: &str| Error::NotInCarrier {
            value: fmt_rational(q),
            semiring: self.to_string(),
            reason: reason.to_string(),
        };
        match self {
            Semiring::Nat | Semiring::IdealsZ => {
                if !q.is_integer() || q.is_negative() {
                    return Err(reject("expected a nonnegative integer"));
                }
                Ok(Value::Nat(
                    q.to_integer().to_biguint().expect("nonnegative"),
                ))
            }
            Semiring::Qnn => {
                if q.is_negative() {
                    return Err(reject("expected a nonnegative rational"));
                }
                Ok(Value::Rat(q.clone()))
            }
            Semiring::Fuzzy => {
                if q.is_negative() || *q > BigRational::one() {
                    return Err(reject("expected a rational in [0, 1]"));
                }
                Ok(Value::Rat(q.clone()))
            }
            Semiring::BoolPoly => {
                if q.is_zero() {
                    Ok(self.zero())
                } else if q.is_one() {
                    Ok(self.one())
                } else {
                    Err(reject("boolean coefficients are 0 or 1"))
                }
            }
            Semiring::TropicalNat => {
                if !q.is_integer() || q.is_negative() {
                    return Err(reject("expected a nonnegative integer or inf"));
                }
                Ok(Value::Trop(Some(q.to_integer())))
            }
            Semiring::TropicalInt => {
                if !q.is_integer() {
                    return Err(reject("expected an integer or inf"));
                }
                Ok(Value::Trop(Some(q.to_integer())))
            }
            Semiring::Poly(b) | Semiring::Laurent(b) | Semiring::Monoid(b, _) => {
                Ok(self.constant(b.literal(q)?, b))
            }
            Semiring::Fractions(b) => match b.literal(q) {
                Ok(v) => Ok(self.reduce(v, b.one())),
                Err(err) if !q.is_integer() => {
                    let num = b
                        .literal(&BigRational::from_integer(q.numer().clone()))
                        .map_err(|_| err.clone())?;
                    let den = b
                        .literal(&BigRational::from_integer(q.denom().clone()))
                        .map_err(|_| err)?;
                    Ok(self.reduce(num, den))
                }
                Err(err) => Err(err),
            },
            Semiring::Sv(k, _) => {
                let v = k.literal(q)?;
                self.check_in_sv(v)
            }
        }
    }

    fn constant(&self, c: Value, base: &Semiring) -> Value {
        if base.is_zero(&c) {
            Value::Poly(Terms::new())
        } else {
            Value::Poly(Terms::from([(BigRational::zero(), c)]))
        }
    }

    fn check_in_sv(&self, v: Value) -> Result<Value> {
        if let Semiring::Sv(k, rule) = self {
            if !valuation::evaluate(k, rule, &v).is_nonnegative() {
                return Err(Error::NotInCarrier {
                    value: k.fmt_value(&v),
                    semiring: self.to_string(),
                    reason: "negative valuation".into(),
                });
            }
        }
        Ok(v)
    }

    /// The literal `inf`, available where the carrier includes it.
    pub fn infinity(&self) -> Result<Value> {
        match self {
            Semiring::TropicalNat | Semiring::TropicalInt => Ok(Value::Trop(None)),
            Semiring::Fractions(b) => Ok(self.reduce(b.infinity()?, b.one())),
            Semiring::Poly(b) | Semiring::Laurent(b) | Semiring::Monoid(b, _) => {
                Ok(self.constant(b.infinity()?, b))
            }
            Semiring::Sv(k, _) => k.infinity(),
            _ => Err(Error::NotInCarrier {
                value: "inf".into(),
                semiring: self.to_string(),
                reason: "the carrier has no infinity".into(),
            }),
        }
    }

    /// The monomial `X^e`.
    pub fn monomial(&self, e: &BigRational) -> Result<Value> {
        let reject = |reason: String| Error::NotInCarrier {
            value: format!("X^{}", fmt_rational(e)),
            semiring: self.to_string(),
            reason,
        };
        match self {
            Semiring::BoolPoly => {
                if !ExponentMonoid::N0.contains(e) {
                    return Err(reject("exponents must be nonnegative integers".into()));
                }
                let e = e
                    .to_integer()
                    .to_u32()
                    .ok_or_else(|| reject("exponent too large".into()))?;
                Ok(Value::Bits(BTreeSet::from([e])))
            }
            Semiring::Poly(b) | Semiring::Laurent(b) | Semiring::Monoid(b, _) => {
                let (_, exps) = self.as_monoid().expect("monoid semiring");
                if !exps.contains(e) {
                    return Err(reject(format!("exponent not in {exps}")));
                }
                Ok(Value::Poly(Terms::from([(e.clone(), b.one())])))
            }
            Semiring::Fractions(b) => match b.monomial(e) {
                Ok(m) => Ok(self.reduce(m, b.one())),
                Err(err) if e.is_negative() => {
                    let m = b.monomial(&-e).map_err(|_| err)?;
                    Ok(self.reduce(b.one(), m))
                }
                Err(err) => Err(err),
            },
            Semiring::Sv(k, _) => {
                let v = k.monomial(e)?;
                self.check_in_sv(v)
            }
            _ => Err(reject("the semiring has no indeterminate X".into())),
        }
    }

    /// Checks that a payload has the shape and constraints of this carrier.
    pub fn check(&self, v: &Value) -> Result<()> {
        let bad = |reason: &str| Error::NotInCarrier {
            value: format!("{v:?}"),
            semiring: self.to_string(),
            reason: reason.to_string(),
        };
        match (self, v) {
            (Semiring::Nat | Semiring::IdealsZ, Value::Nat(_)) => Ok(()),
            (Semiring::Qnn, Value::Rat(q)) if !q.is_negative() => Ok(()),
            (Semiring::Fuzzy, Value::Rat(q)) if !q.is_negative() && *q <= BigRational::one() => {
                Ok(())
            }
            (Semiring::BoolPoly, Value::Bits(_)) => Ok(()),
            (Semiring::TropicalNat, Value::Trop(t)) => match t {
                Some(x) if x.is_negative() => Err(bad("negative tropical-nat value")),
                _ => Ok(()),
            },
            (Semiring::TropicalInt, Value::Trop(_)) => Ok(()),
            (Semiring::Fractions(b), Value::Frac(n, d)) => {
                b.check(n)?;
                b.check(d)?;
                if b.is_zero(d) {
                    return Err(bad("zero denominator"));
                }
                Ok(())
            }
            (Semiring::Sv(k, rule), _) => {
                k.check(v)?;
                if !valuation::evaluate(k, rule, v).is_nonnegative() {
                    return Err(bad("negative valuation"));
                }
                Ok(())
            }
            (s, Value::Poly(t)) => {
                let Some((base, exps)) = s.as_monoid() else {
                    return Err(bad("unexpected polynomial payload"));
                };
                for (e, c) in t {
                    if !exps.contains(e) {
                        return Err(bad("exponent outside the exponent monoid"));
                    }
                    base.check(c)?;
                    if base.is_zero(c) {
                        return Err(bad("zero coefficient stored"));
                    }
                }
                Ok(())
            }
            _ => Err(bad("payload of the wrong kind")),
        }
    }

    /// Small finite carriers (up to `bound`), for exhaustive checks.
    pub fn enumerate(&self, bound: u64) -> Option<Vec<Value>> {
        match self {
            Semiring::Nat | Semiring::IdealsZ => {
                Some((0..=bound).map(|n| Value::Nat(BigUint::from(n))).collect())
            }
            Semiring::TropicalNat => Some(
                (0..=bound)
                    .map(|n| Value::Trop(Some(BigInt::from(n))))
                    .chain([Value::Trop(None)])
                    .collect(),
            ),
            Semiring::TropicalInt => {
                let b = bound as i64;
                Some(
                    (-b..=b)
                        .map(|n| Value::Trop(Some(BigInt::from(n))))
                        .chain([Value::Trop(None)])
                        .collect(),
                )
            }
            _ => None,
        }
    }

    /// A short list of simple elements searched before random samples.
    pub fn landmarks(&self) -> Vec<Value> {
        let mut out: Vec<Value> = vec![self.zero(), self.one()];
        let x = self.monomial(&BigRational::one()).ok();
        if let Some(x) = &x {
            out.push(x.clone());
            out.push(self.add(&self.one(), x));
        }
        for q in [rat(1, 2), rat(3, 4), rat(2, 1), rat(3, 1), rat(5, 1)] {
            if let Ok(v) = self.literal(&q) {
                out.push(v);
            }
        }
        let mut unique: Vec<Value> = Vec::new();
        for v in out {
            if !unique.iter().any(|u| self.equals(u, &v)) {
                unique.push(v);
            }
        }
        unique
    }

    /// Grammar rendering of a payload; `parse_element` reads it back.
    pub fn fmt_value(&self, v: &Value) -> String {
        match (self, v) {
            (Semiring::Nat | Semiring::IdealsZ, Value::Nat(n)) => n.to_string(),
            (Semiring::Qnn | Semiring::Fuzzy, Value::Rat(q)) => fmt_rational(q),
            (Semiring::BoolPoly, Value::Bits(b)) => {
                if b.is_empty() {
                    return "0".into();
                }
                b.iter()
                    .map(|&e| match e {
                        0 => "1".to_string(),
                        1 => "X".to_string(),
                        e => format!("X^{e}"),
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
            (Semiring::TropicalNat | Semiring::TropicalInt, Value::Trop(t)) => match t {
                None => "inf".into(),
                Some(x) => x.to_string(),
            },
            (Semiring::Fractions(b), Value::Frac(n, d)) => {
                if b.is_one(d) {
                    b.fmt_value(n)
                } else {
                    format!("({})/({})", b.fmt_value(n), b.fmt_value(d))
                }
            }
            (Semiring::Sv(k, _), _) => k.fmt_value(v),
            (s, Value::Poly(t)) => {
                let Some((base, _)) = s.as_monoid() else {
                    return format!("{v:?}");
                };
                if t.is_empty() {
                    return "0".into();
                }
                t.iter()
                    .map(|(e, c)| fmt_term(base, e, c))
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
            _ => format!("{v:?}"),
        }
    }

    /// Compares two semiring elements of an ordered carrier by their numeric payload.
    pub(crate) fn numeric(&self, v: &Value) -> Option<BigRational> {
        match v {
            Value::Nat(n) => Some(BigRational::from_integer(BigInt::from(n.clone()))),
            Value::Rat(q) => Some(q.clone()),
            Value::Trop(Some(x)) => Some(BigRational::from_integer(x.clone())),
            _ => None,
        }
    }
}

fn fmt_term(base: &Semiring, e: &BigRational, c: &Value) -> String {
    let coef = base.fmt_value(c);
    let coef = if coef.contains(' ') || coef.contains('+') {
        format!("({coef})")
    } else {
        coef
    };
    if e.is_zero() {
        return coef;
    }
    let x = if e.is_one() {
        "X".to_string()
    } else if e.is_integer() {
        format!("X^{}", e.numer())
    } else {
        format!("X^({})", fmt_rational(e))
    };
    if base.is_one(c) {
        x
    } else {
        format!("{coef}*{x}")
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semiring::Nat => write!(f, "nat"),
            Semiring::Qnn => write!(f, "qnn"),
            Semiring::BoolPoly => write!(f, "bool-poly"),
            Semiring::Fuzzy => write!(f, "fuzzy"),
            Semiring::TropicalNat => write!(f, "tropical-nat"),
            Semiring::TropicalInt => write!(f, "tropical-int"),
            Semiring::IdealsZ => write!(f, "ideals-z"),
            Semiring::Poly(b) => write!(f, "poly({b})"),
            Semiring::Laurent(b) => write!(f, "laurent({b})"),
            Semiring::Monoid(b, m) => write!(f, "monoid({b}, {m})"),
            Semiring::Fractions(b) => write!(f, "fractions({b})"),
            Semiring::Sv(k, r) => write!(f, "sv({k}, {r})"),
        }
    }
}

/// A value tagged with the instance it belongs to.
#[derive(Debug, Clone)]
pub struct Element {
    semiring: Arc<Semiring>,
    value: Value,
}

impl Element {
    pub fn new(semiring: Arc<Semiring>, value: Value) -> Result<Element> {
        semiring.check(&value)?;
        Ok(Element { semiring, value })
    }

    pub(crate) fn trusted(semiring: Arc<Semiring>, value: Value) -> Element {
        debug_assert!(
            semiring.check(&value).is_ok(),
            "{value:?} not in {semiring}"
        );
        Element { semiring, value }
    }

    pub fn parse(input: &str, semiring: &Arc<Semiring>) -> Result<Element> {
        crate::parse::parse_element(input, semiring)
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn semiring_arc(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.semiring.is_zero(&self.value)
    }

    fn with(&self, value: Value) -> Element {
        Element {
            semiring: self.semiring.clone(),
            value,
        }
    }
}

pub(crate) fn same_instance(a: &Semiring, b: &Semiring) -> Result<()> {
    if a != b {
        return Err(Error::InstanceMismatch {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(())
}

pub fn sr_add(a: &Element, b: &Element) -> Result<Element> {
    same_instance(&a.semiring, &b.semiring)?;
    Ok(a.with(a.semiring.add(&a.value, &b.value)))
}

pub fn sr_mul(a: &Element, b: &Element) -> Result<Element> {
    same_instance(&a.semiring, &b.semiring)?;
    Ok(a.with(a.semiring.mul(&a.value, &b.value)))
}

pub fn sr_eq(a: &Element, b: &Element) -> Result<bool> {
    same_instance(&a.semiring, &b.semiring)?;
    Ok(a.semiring.equals(&a.value, &b.value))
}

pub fn is_unit(a: &Element) -> bool {
    a.semiring.is_unit(&a.value)
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.semiring == other.semiring && self.semiring.equals(&self.value, &other.value)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.semiring.fmt_value(&self.value))
    }
}

#[cfg(test)]
mod tests;
