//! Valuation maps `v: S -> M ∪ {+inf}` and their checkers.
//!
//! Each [`Rule`] is a closed-form evaluation on one family of sources; a
//! [`Valuation`] binds a rule to a concrete source after checking that the rule
//! applies there.

mod checks;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::instances::{monoid, Element, ExponentMonoid, Semiring, Value};
use crate::tomonoid::{Ext, ExtendedValue, Tomonoid};

pub use checks::{
    check_min_property, check_valuation_axioms, level_membership, units_vs_zeroset,
    MinPropertyReport,
};

/// Named evaluation rules; the string forms are stable CLI identifiers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `0` on nonzero elements, `inf` on zero (`trivial`).
    Trivial,
    /// Exponent of a prime `p` (`vp:p`).
    PAdic(u64),
    /// Least exponent of a monoid-semiring element (`low-order`).
    LowOrder,
    /// Greatest exponent (`deg-high`).
    DegHigh,
    /// Identity on a tropical semiring (`tropical-id`).
    TropicalId,
    /// `deg f - deg g` on fractions of polynomials (`deg-frac`).
    DegFrac,
    /// Exponent of the maximal ideal `(p)` in `Id(Z)` and its fractions (`vm-idz:p`).
    IdealAdic(u64),
    /// `v'(x/y) = v(x) - v(y)` on the fraction semifield (`ext(rule)`).
    Extended(Box<Rule>),
    /// `x ↦ n` where `x = u·t^n` with `u` a unit of the valuation semiring
    /// (`value-group(rule)`).
    ValueGroup(Box<Rule>),
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Trivial => write!(f, "trivial"),
            Rule::PAdic(p) => write!(f, "vp:{p}"),
            Rule::LowOrder => write!(f, "low-order"),
            Rule::DegHigh => write!(f, "deg-high"),
            Rule::TropicalId => write!(f, "tropical-id"),
            Rule::DegFrac => write!(f, "deg-frac"),
            Rule::IdealAdic(p) => write!(f, "vm-idz:{p}"),
            Rule::Extended(r) => write!(f, "ext({r})"),
            Rule::ValueGroup(r) => write!(f, "value-group({r})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn parse_prime(s: &str, whole: &str) -> Result<u64> {
    let p: u64 = s
        .trim()
        .parse()
        .map_err(|_| Error::UnknownRule(whole.to_string()))?;
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime")));
    }
    Ok(p)
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rule> {
        let t = s.trim();
        let wrapped = |prefix: &str| {
            t.strip_prefix(prefix)
                .and_then(|rest| rest.strip_suffix(')'))
        };
        if let Some(inner) = wrapped("ext(") {
            return Ok(Rule::Extended(Box::new(inner.parse()?)));
        }
        if let Some(inner) = wrapped("value-group(") {
            return Ok(Rule::ValueGroup(Box::new(inner.parse()?)));
        }
        if let Some(p) = t.strip_prefix("vp:") {
            return Ok(Rule::PAdic(parse_prime(p, t)?));
        }
        if let Some(p) = t.strip_prefix("vm-idz:") {
            return Ok(Rule::IdealAdic(parse_prime(p, t)?));
        }
        match t {
            "trivial" => Ok(Rule::Trivial),
            "low-order" => Ok(Rule::LowOrder),
            "deg-high" => Ok(Rule::DegHigh),
            "tropical-id" => Ok(Rule::TropicalId),
            "deg-frac" => Ok(Rule::DegFrac),
            _ => Err(Error::UnknownRule(t.to_string())),
        }
    }
}

fn not_applicable(rule: &Rule, source: &Semiring) -> Error {
    Error::RuleNotApplicable {
        rule: rule.to_string(),
        semiring: source.to_string(),
    }
}

fn exponent_monoid(s: &Semiring) -> Option<ExponentMonoid> {
    match s {
        Semiring::BoolPoly => Some(ExponentMonoid::N0),
        other => other.as_monoid().map(|(_, m)| m),
    }
}

/// Value domain of `rule` on `source`, or an error when the rule does not apply.
pub fn codomain(source: &Semiring, rule: &Rule) -> Result<Tomonoid> {
    let na = || not_applicable(rule, source);
    if let Semiring::Sv(k, _) = source {
        return codomain(k, rule);
    }
    match rule {
        Rule::Trivial => {
            if source.capabilities().entire {
                Ok(Tomonoid::Trivial)
            } else {
                Err(na())
            }
        }
        Rule::PAdic(_) => match source {
            Semiring::Nat => Ok(Tomonoid::N0),
            Semiring::Qnn => Ok(Tomonoid::Z),
            _ => Err(na()),
        },
        Rule::LowOrder | Rule::DegHigh => {
            let m = exponent_monoid(source).ok_or_else(na)?;
            if let Some((base, _)) = source.as_monoid() {
                if !base.capabilities().entire {
                    return Err(na());
                }
            }
            Ok(m.tomonoid())
        }
        Rule::TropicalId => match source {
            Semiring::TropicalNat => Ok(Tomonoid::N0),
            Semiring::TropicalInt => Ok(Tomonoid::Z),
            _ => Err(na()),
        },
        Rule::DegFrac => match source {
            Semiring::Fractions(base) => match base.as_monoid() {
                Some((_, ExponentMonoid::Q)) => Ok(Tomonoid::Q),
                Some(_) => Ok(Tomonoid::Z),
                None => Err(na()),
            },
            _ => Err(na()),
        },
        Rule::IdealAdic(_) => match source {
            Semiring::IdealsZ => Ok(Tomonoid::N0),
            Semiring::Fractions(base) if **base == Semiring::IdealsZ => Ok(Tomonoid::Z),
            _ => Err(na()),
        },
        Rule::Extended(inner) => match source {
            Semiring::Fractions(base) => Ok(codomain(base, inner)?.gp()),
            _ => Err(na()),
        },
        Rule::ValueGroup(inner) => {
            let m = codomain(source, inner)?;
            if !source.capabilities().semifield || !is_discrete(&m) {
                return Err(na());
            }
            uniformizer_value(source, inner).ok_or_else(na)?;
            Ok(Tomonoid::Z)
        }
    }
}

fn is_discrete(m: &Tomonoid) -> bool {
    match m {
        Tomonoid::Z => true,
        Tomonoid::Gp(inner) => matches!(inner.as_ref(), Tomonoid::N0 | Tomonoid::Z),
        _ => false,
    }
}

fn vp_uint(n: &BigUint, p: u64) -> Ext {
    if n.is_zero() {
        return Ext::Inf;
    }
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut k = 0i64;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        n = q;
        k += 1;
    }
    Ext::Fin(BigRational::from_integer(k.into()))
}

fn vp_int(n: &BigInt, p: u64) -> Ext {
    vp_uint(n.magnitude(), p)
}

fn sub(a: Ext, b: Ext) -> Ext {
    match (a, b) {
        (Ext::Fin(x), Ext::Fin(y)) => Ext::Fin(x - y),
        // Only reachable for zero numerators, which are handled by callers.
        _ => Ext::Inf,
    }
}

/// Evaluates `rule` on a payload of `source`. The pair must have passed [`codomain`].
pub fn evaluate(source: &Semiring, rule: &Rule, x: &Value) -> Ext {
    if let Semiring::Sv(k, _) = source {
        return evaluate(k, rule, x);
    }
    if source.is_zero(x) {
        return Ext::Inf;
    }
    match (rule, x) {
        (Rule::Trivial, _) => Ext::Fin(BigRational::zero()),
        (Rule::PAdic(p), Value::Nat(n)) => vp_uint(n, *p),
        (Rule::PAdic(p), Value::Rat(q)) => sub(vp_int(q.numer(), *p), vp_int(q.denom(), *p)),
        (Rule::LowOrder, Value::Bits(b)) => Ext::Fin(BigRational::from_integer(
            (*b.iter().next().expect("nonzero")).into(),
        )),
        (Rule::DegHigh, Value::Bits(b)) => Ext::Fin(BigRational::from_integer(
            (*b.iter().next_back().expect("nonzero")).into(),
        )),
        (Rule::LowOrder, Value::Poly(t)) => Ext::Fin(monoid::low(t).expect("nonzero").clone()),
        (Rule::DegHigh, Value::Poly(t)) => Ext::Fin(monoid::high(t).expect("nonzero").clone()),
        (Rule::TropicalId, Value::Trop(Some(t))) => Ext::Fin(BigRational::from_integer(t.clone())),
        (Rule::DegFrac, Value::Frac(n, d)) => {
            let Semiring::Fractions(base) = source else {
                unreachable!()
            };
            sub(
                evaluate(base, &Rule::DegHigh, n),
                evaluate(base, &Rule::DegHigh, d),
            )
        }
        (Rule::IdealAdic(p), Value::Nat(n)) => vp_uint(n, *p),
        (Rule::IdealAdic(p), Value::Frac(n, d)) => match (n.as_ref(), d.as_ref()) {
            (Value::Nat(n), Value::Nat(d)) => sub(vp_uint(n, *p), vp_uint(d, *p)),
            _ => unreachable!("ideals-z payloads are naturals"),
        },
        (Rule::Extended(inner), Value::Frac(n, d)) => {
            let Semiring::Fractions(base) = source else {
                unreachable!()
            };
            sub(evaluate(base, inner, n), evaluate(base, inner, d))
        }
        (Rule::ValueGroup(inner), _) => Ext::Fin(BigRational::from_integer(
            normal_form_exponent(source, inner, x).into(),
        )),
        _ => panic!("rule {rule} applied to a foreign payload {x:?}"),
    }
}

/// An element with valuation exactly one.
pub(crate) fn uniformizer_value(source: &Semiring, rule: &Rule) -> Option<Value> {
    let one = BigRational::one();
    let mut candidates = Vec::new();
    let mut r = rule;
    loop {
        match r {
            Rule::PAdic(p) | Rule::IdealAdic(p) => {
                candidates.push(source.literal(&BigRational::from_integer((*p).into())).ok())
            }
            Rule::Extended(inner) | Rule::ValueGroup(inner) => {
                r = inner;
                continue;
            }
            _ => {}
        }
        break;
    }
    candidates.push(source.literal(&one).ok());
    candidates.push(source.monomial(&one).ok());
    let inner = match rule {
        Rule::ValueGroup(inner) => inner.as_ref(),
        other => other,
    };
    candidates
        .into_iter()
        .flatten()
        .find(|t| evaluate(source, inner, t).cmp_fin(&one).is_eq())
}

/// Largest `n` with `x·t^-n` in the valuation semiring, found by galloping on
/// membership only; the remaining cofactor is then a unit.
fn normal_form_exponent(source: &Semiring, rule: &Rule, x: &Value) -> i64 {
    let t = uniformizer_value(source, rule).expect("checked by codomain");
    let t_inv = source.inverse(&t).expect("semifield");
    let in_s = |y: &Value| evaluate(source, rule, y).is_nonnegative();
    let pow = |base: &Value, k: u64| {
        let mut acc = source.one();
        for _ in 0..k {
            acc = source.mul(&acc, base);
        }
        acc
    };
    // Shift x into S first.
    let mut shift = 0i64;
    let mut y = x.clone();
    let mut step = 1u64;
    while !in_s(&y) {
        y = source.mul(&y, &pow(&t, step));
        shift -= step as i64;
        step *= 2;
    }
    // Now remove factors of t while staying in S.
    let mut step = 1u64;
    loop {
        let candidate = source.mul(&y, &pow(&t_inv, step));
        if in_s(&candidate) {
            y = candidate;
            shift += step as i64;
            step *= 2;
        } else if step > 1 {
            step = 1;
        } else {
            break;
        }
    }
    shift
}

/// A valuation rule bound to its source semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    source: Arc<Semiring>,
    rule: Rule,
    codomain: Tomonoid,
}

impl Valuation {
    pub fn new(source: Arc<Semiring>, rule: Rule) -> Result<Valuation> {
        source.validate()?;
        let codomain = codomain(&source, &rule)?;
        Ok(Valuation {
            source,
            rule,
            codomain,
        })
    }

    pub fn parse(source: &Arc<Semiring>, rule: &str) -> Result<Valuation> {
        Valuation::new(source.clone(), rule.parse()?)
    }

    pub fn source(&self) -> &Semiring {
        &self.source
    }

    pub fn source_arc(&self) -> &Arc<Semiring> {
        &self.source
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn codomain(&self) -> &Tomonoid {
        &self.codomain
    }

    /// Whether the rule is onto its codomain.
    pub fn surjective(&self) -> bool {
        !matches!(self.source.as_ref(), Semiring::Sv(..))
    }

    /// Raw evaluation on a payload of the source.
    pub fn eval(&self, x: &Value) -> ExtendedValue {
        ExtendedValue {
            domain: self.codomain.clone(),
            value: evaluate(&self.source, &self.rule, x),
        }
    }

    /// The valuation subsemiring `S_v` as a descriptor.
    pub fn sv(&self) -> Semiring {
        Semiring::sv(self.source.as_ref().clone(), self.rule.clone())
    }

    /// An element `t` with `v(t) = 1`, when one exists among the simple candidates.
    pub fn uniformizer(&self) -> Option<Element> {
        uniformizer_value(&self.source, &self.rule)
            .map(|t| Element::trusted(self.source.clone(), t))
    }

    /// Accepts elements of the source or of a valuation subsemiring of it.
    pub(crate) fn accepts(&self, s: &Semiring) -> bool {
        s == self.source.as_ref() || s.ambient() == self.source.ambient()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.rule, self.source)
    }
}

/// `v(x)`; the element must belong to the source (or a subsemiring view of it).
pub fn valuate(v: &Valuation, x: &Element) -> Result<ExtendedValue> {
    if !v.accepts(x.semiring()) {
        return Err(Error::InstanceMismatch {
            left: v.source().to_string(),
            right: x.semiring().to_string(),
        });
    }
    Ok(v.eval(x.value()))
}

/// Sign helper shared by the level-set code.
pub(crate) fn ext_ge(e: &Ext, q: &BigRational) -> bool {
    !e.cmp_fin(q).is_lt()
}

pub(crate) fn ext_gt(e: &Ext, q: &BigRational) -> bool {
    e.cmp_fin(q).is_gt()
}

#[cfg(test)]
mod tests;
