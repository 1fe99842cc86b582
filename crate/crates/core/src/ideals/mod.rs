//! Ideals with per-instance membership oracles.
//!
//! Oracles: `nat` (numerical semigroups), `ideals-z` (divisibility by the gcd),
//! `bool-poly` (shift covers), `fuzzy` and `tropical-nat` (order tests),
//! semifields (only `0` and the whole semiring), and valuation subsemirings of
//! semifields (constructive: `x = (x/g)·g` with `x/g` of nonnegative value).

mod dvs;
mod numerical;

use std::cell::RefCell;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::instances::{bits, same_instance, BitPoly, Element, Sampler, Semiring, Value};
use crate::laws::Search;
use crate::report::{Bound, LawReport, Method, SampleSpec, Witness};
use crate::tomonoid::fmt_rational;
use crate::valuation::{self, Rule, Valuation};

pub use dvs::{
    dvs_ideal_of, dvs_normal_form, escape_index, euclidean_divide, int_value, integral_check,
    intersection_probe, normal_form_round_trips, sample_nonzero, value_group_valuation,
    DvsStructure,
};
pub(crate) use numerical::NumericalMonoid;

/// A finitely generated ideal `(g1, ..., gk)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FinGenIdeal {
    semiring: Arc<Semiring>,
    generators: Vec<Value>,
}

/// Precomputed membership test for one generator list.
enum Oracle<'a> {
    Numerical(NumericalMonoid),
    Divisor(BigUint),
    /// Semifield: `(0)` or everything.
    Trivial {
        whole: bool,
    },
    Shifts(&'a [Value]),
    FuzzyMax(BigRational),
    /// Tropical-nat: `x >= min generator`; `None` when every generator is `inf`.
    TropMin(Option<num_bigint::BigInt>),
    Valuation {
        field: &'a Semiring,
        rule: &'a Rule,
        gens: &'a [Value],
    },
}

fn nat_payload(v: &Value) -> &BigUint {
    match v {
        Value::Nat(n) => n,
        _ => unreachable!("natural payload expected"),
    }
}

fn bits_payload(v: &Value) -> &BitPoly {
    match v {
        Value::Bits(b) => b,
        _ => unreachable!("boolean polynomial payload expected"),
    }
}

impl<'a> Oracle<'a> {
    fn build(s: &'a Semiring, gens: &'a [Value]) -> Result<Oracle<'a>> {
        let nonzero = gens.iter().any(|g| !s.is_zero(g));
        Ok(match s {
            Semiring::Nat => {
                let g: Vec<BigUint> = gens.iter().map(|g| nat_payload(g).clone()).collect();
                Oracle::Numerical(NumericalMonoid::new(&g))
            }
            Semiring::IdealsZ => Oracle::Divisor(
                gens.iter()
                    .fold(BigUint::zero(), |acc, g| acc.gcd(nat_payload(g))),
            ),
            Semiring::BoolPoly => Oracle::Shifts(gens),
            Semiring::Fuzzy => Oracle::FuzzyMax(
                gens.iter()
                    .map(|g| match g {
                        Value::Rat(q) => q.clone(),
                        _ => unreachable!(),
                    })
                    .max()
                    .unwrap_or_else(BigRational::zero),
            ),
            Semiring::TropicalNat => Oracle::TropMin(
                gens.iter()
                    .filter_map(|g| match g {
                        Value::Trop(t) => t.clone(),
                        _ => unreachable!(),
                    })
                    .min(),
            ),
            Semiring::Sv(k, _) if s.is_whole_source() => Oracle::build(k, gens)?,
            Semiring::Sv(k, rule) if k.capabilities().semifield => Oracle::Valuation {
                field: k,
                rule,
                gens,
            },
            s if s.capabilities().semifield => Oracle::Trivial { whole: nonzero },
            _ => return Err(Error::NoOracle(s.to_string())),
        })
    }

    fn contains(&self, s: &Semiring, x: &Value) -> bool {
        if s.is_zero(x) {
            return true;
        }
        match self {
            Oracle::Numerical(m) => m.contains(nat_payload(x)),
            Oracle::Divisor(d) => !d.is_zero() && (nat_payload(x) % d).is_zero(),
            Oracle::Trivial { whole } => *whole,
            Oracle::Shifts(gens) => shift_cover(gens, bits_payload(x)),
            Oracle::FuzzyMax(a) => match x {
                Value::Rat(q) => q <= a,
                _ => unreachable!(),
            },
            Oracle::TropMin(min) => match (x, min) {
                (Value::Trop(Some(x)), Some(m)) => x >= m,
                _ => false,
            },
            Oracle::Valuation { field, rule, gens } => {
                let vx = valuation::evaluate(field, rule, x);
                gens.iter().any(|g| {
                    if field.is_zero(g) || valuation::evaluate(field, rule, g) > vx {
                        return false;
                    }
                    let Some(g_inv) = field.inverse(g) else {
                        return false;
                    };
                    let cofactor = field.mul(x, &g_inv);
                    valuation::evaluate(field, rule, &cofactor).is_nonnegative()
                        && field.equals(&field.mul(&cofactor, g), x)
                })
            }
        }
    }
}

/// In `B[X]`, `x` lies in `(g_i)` iff `x` is the union of the shifts
/// `X^e·g_i` that fit inside it.
fn shift_cover(gens: &[Value], x: &BitPoly) -> bool {
    let mut covered = BitPoly::new();
    let top = bits::degree(x).unwrap_or(0);
    for g in gens {
        let g = bits_payload(g);
        let Some(g_top) = bits::degree(g) else {
            continue;
        };
        for e in 0..=top.saturating_sub(g_top) {
            let shifted = bits::shift(g, e);
            if shifted.is_subset(x) {
                covered.extend(shifted);
            }
        }
    }
    covered == *x
}

impl FinGenIdeal {
    pub fn new(semiring: Arc<Semiring>, generators: Vec<Element>) -> Result<FinGenIdeal> {
        let mut values = Vec::with_capacity(generators.len());
        for g in generators {
            same_instance(&semiring, g.semiring())?;
            values.push(g.into_value());
        }
        FinGenIdeal::from_values(semiring, values)
    }

    pub fn from_values(semiring: Arc<Semiring>, generators: Vec<Value>) -> Result<FinGenIdeal> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "an ideal needs at least one generator".into(),
            ));
        }
        for g in &generators {
            semiring.check(g)?;
        }
        Ok(FinGenIdeal {
            semiring,
            generators,
        })
    }

    pub fn principal(x: &Element) -> FinGenIdeal {
        FinGenIdeal {
            semiring: x.semiring_arc().clone(),
            generators: vec![x.value().clone()],
        }
    }

    pub fn zero(semiring: Arc<Semiring>) -> FinGenIdeal {
        let z = semiring.zero();
        FinGenIdeal {
            semiring,
            generators: vec![z],
        }
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn generators(&self) -> &[Value] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<Element> {
        self.generators
            .iter()
            .map(|g| Element::trusted(self.semiring.clone(), g.clone()))
            .collect()
    }

    pub fn has_oracle(&self) -> bool {
        Oracle::build(&self.semiring, &self.generators).is_ok()
    }

    pub fn contains(&self, x: &Value) -> Result<bool> {
        let oracle = Oracle::build(&self.semiring, &self.generators)?;
        Ok(oracle.contains(&self.semiring, x))
    }

    /// Membership for many values with one precomputed oracle.
    pub fn contains_all<'v>(
        &self,
        xs: impl IntoIterator<Item = &'v Value>,
    ) -> Result<Option<&'v Value>> {
        let oracle = Oracle::build(&self.semiring, &self.generators)?;
        Ok(xs.into_iter().find(|x| !oracle.contains(&self.semiring, x)))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(|g| self.semiring.is_zero(g))
    }

    pub fn is_whole(&self) -> Result<bool> {
        self.contains(&self.semiring.one())
    }

    /// Same ideal with a smaller generator list where the instance allows it.
    pub fn normalized(&self) -> FinGenIdeal {
        let s = self.semiring.as_ref();
        let nonzero: Vec<Value> = self
            .generators
            .iter()
            .filter(|g| !s.is_zero(g))
            .cloned()
            .collect();
        if nonzero.is_empty() {
            return FinGenIdeal::zero(self.semiring.clone());
        }
        let generators = match s {
            Semiring::IdealsZ => vec![Value::Nat(
                nonzero
                    .iter()
                    .fold(BigUint::zero(), |acc, g| acc.gcd(nat_payload(g))),
            )],
            Semiring::Nat => {
                let g: Vec<BigUint> = nonzero.iter().map(|g| nat_payload(g).clone()).collect();
                NumericalMonoid::new(&g)
                    .generators()
                    .iter()
                    .map(|g| Value::Nat(g.clone()))
                    .collect()
            }
            Semiring::Fuzzy | Semiring::TropicalNat => {
                let best = nonzero
                    .iter()
                    .max_by(|a, b| {
                        let (a, b) = (s.numeric(a), s.numeric(b));
                        if *s == Semiring::Fuzzy {
                            a.cmp(&b)
                        } else {
                            b.cmp(&a)
                        }
                    })
                    .expect("nonempty");
                vec![best.clone()]
            }
            Semiring::Sv(k, rule) if k.capabilities().semifield => {
                let best = nonzero
                    .iter()
                    .min_by_key(|g| valuation::evaluate(k, rule, g))
                    .expect("nonempty");
                vec![best.clone()]
            }
            s if s.capabilities().semifield => vec![s.one()],
            _ => {
                let mut out: Vec<Value> = Vec::new();
                for g in nonzero {
                    if !out.iter().any(|o| s.equals(o, &g)) {
                        out.push(g);
                    }
                }
                out
            }
        };
        FinGenIdeal {
            semiring: self.semiring.clone(),
            generators,
        }
    }

    /// An ideal with at most `max_gens` sampled generators.
    pub fn sample<R: Rng + ?Sized>(
        semiring: &Arc<Semiring>,
        rng: &mut R,
        sampler: Sampler,
        max_gens: usize,
    ) -> FinGenIdeal {
        let k = rng.gen_range(1..=max_gens.max(1));
        let generators = (0..k).map(|_| semiring.sample(rng, sampler)).collect();
        FinGenIdeal {
            semiring: semiring.clone(),
            generators,
        }
    }
}

impl fmt::Display for FinGenIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| self.semiring.fmt_value(g))
            .collect();
        write!(f, "ideal[{}]", gens.join(", "))
    }
}

/// The fuzzy-semiring ideal `[0, a]` (closed) or `[0, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalIdeal {
    endpoint: BigRational,
    closed: bool,
}

impl IntervalIdeal {
    /// `[0, 0)` is empty and so not an ideal; it is read as the zero ideal `[0, 0]`.
    pub fn new(endpoint: BigRational, closed: bool) -> Result<IntervalIdeal> {
        if endpoint.is_negative() || endpoint > BigRational::one() {
            return Err(Error::InvalidArgument(format!(
                "interval endpoint {} outside [0, 1]",
                fmt_rational(&endpoint)
            )));
        }
        let closed = closed || endpoint.is_zero();
        Ok(IntervalIdeal { endpoint, closed })
    }

    pub fn endpoint(&self) -> &BigRational {
        &self.endpoint
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        if self.closed {
            *q <= self.endpoint
        } else {
            *q < self.endpoint
        }
    }

    /// Exact inclusion, decided by membership of three critical points.
    pub fn subset_witness(&self, other: &IntervalIdeal) -> Option<BigRational> {
        let two = BigRational::from_integer(2.into());
        let mid = (&self.endpoint + &other.endpoint) / two;
        [self.endpoint.clone(), other.endpoint.clone(), mid]
            .into_iter()
            .find(|p| self.contains(p) && !other.contains(p))
    }

    pub fn is_subset(&self, other: &IntervalIdeal) -> bool {
        self.subset_witness(other).is_none()
    }

    /// Lexicographic `(endpoint, closed)` order, which is inclusion.
    pub fn order_key(&self) -> (&BigRational, bool) {
        (&self.endpoint, self.closed)
    }

    pub fn sample<R: Rng + ?Sized>(rng: &mut R, sampler: Sampler) -> IntervalIdeal {
        let Value::Rat(a) = Semiring::Fuzzy.sample(rng, sampler) else {
            unreachable!()
        };
        IntervalIdeal::new(a, rng.gen_bool(0.5)).expect("fuzzy sample in [0, 1]")
    }
}

impl fmt::Display for IntervalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let close = if self.closed { ']' } else { ')' };
        write!(f, "fuzzy[0,{}{close}", fmt_rational(&self.endpoint))
    }
}

/// Canonical interval of a finite description: a union of `[0, a]` (closed)
/// and `[0, a)` pieces. Its endpoint is the supremum; it is closed when some
/// closed piece attains it.
pub fn fuzzy_ideal_classify(pieces: &[(BigRational, bool)]) -> Result<IntervalIdeal> {
    let Some(sup) = pieces.iter().map(|(a, _)| a).max() else {
        return IntervalIdeal::new(BigRational::zero(), true);
    };
    let closed = pieces.iter().any(|(a, c)| a == sup && *c);
    IntervalIdeal::new(sup.clone(), closed)
}

/// A level set `{x in S_v : v(x) > α}` (`strict`) or `{x in S_v : v(x) >= α}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelIdeal {
    valuation: Valuation,
    carrier: Arc<Semiring>,
    alpha: BigRational,
    strict: bool,
}

impl LevelIdeal {
    pub fn new(valuation: &Valuation, alpha: BigRational, strict: bool) -> Result<LevelIdeal> {
        if alpha.is_negative() {
            return Err(Error::InvalidArgument("level ideals need α >= 0".into()));
        }
        Ok(LevelIdeal {
            carrier: Arc::new(valuation.sv()),
            valuation: valuation.clone(),
            alpha,
            strict,
        })
    }

    /// The prime ideal `P_v = {v > 0}` of `S_v`.
    pub fn pv(valuation: &Valuation) -> LevelIdeal {
        LevelIdeal::new(valuation, BigRational::zero(), true).expect("α = 0")
    }

    /// `J_α = {x in S_v : v(x) >= α}`.
    pub fn j(valuation: &Valuation, alpha: BigRational) -> Result<LevelIdeal> {
        LevelIdeal::new(valuation, alpha, false)
    }

    pub fn carrier(&self) -> &Arc<Semiring> {
        &self.carrier
    }

    pub fn contains(&self, x: &Value) -> bool {
        let vx = self.valuation.eval(x).value;
        let above = if self.strict {
            valuation::ext_gt(&vx, &self.alpha)
        } else {
            valuation::ext_ge(&vx, &self.alpha)
        };
        above && vx.is_nonnegative()
    }
}

impl fmt::Display for LevelIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.strict { ">" } else { ">=" };
        write!(
            f,
            "{{x in S_v : v(x) {op} {}}} for {}",
            fmt_rational(&self.alpha),
            self.valuation
        )
    }
}

/// Any ideal the checkers accept.
#[derive(Debug, Clone, PartialEq)]
pub enum Ideal {
    FinGen(FinGenIdeal),
    Interval(IntervalIdeal),
    Level(LevelIdeal),
}

impl Ideal {
    pub fn semiring(&self) -> Arc<Semiring> {
        match self {
            Ideal::FinGen(i) => i.semiring.clone(),
            Ideal::Interval(_) => Arc::new(Semiring::Fuzzy),
            Ideal::Level(l) => l.carrier.clone(),
        }
    }

    pub fn contains(&self, x: &Value) -> Result<bool> {
        match (self, x) {
            (Ideal::FinGen(i), _) => i.contains(x),
            (Ideal::Interval(i), Value::Rat(q)) => Ok(i.contains(q)),
            (Ideal::Interval(_), _) => Err(Error::InvalidArgument("fuzzy value expected".into())),
            (Ideal::Level(l), _) => Ok(l.contains(x)),
        }
    }

    /// A nonzero member, used to steer searches into the ideal.
    fn nonzero_member(&self) -> Option<Value> {
        let s = self.semiring();
        match self {
            Ideal::FinGen(i) => i.generators.iter().find(|g| !s.is_zero(g)).cloned(),
            Ideal::Interval(i) => {
                let two = BigRational::from_integer(2.into());
                let p = if i.closed {
                    i.endpoint.clone()
                } else {
                    &i.endpoint / two
                };
                (!p.is_zero()).then_some(Value::Rat(p))
            }
            Ideal::Level(l) => {
                let t = l.valuation.uniformizer()?.into_value();
                let mut acc = s.one();
                for _ in 0..64 {
                    if l.contains(&acc) && !s.is_zero(&acc) {
                        return Some(acc);
                    }
                    acc = s.mul(&acc, &t);
                }
                None
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::FinGen(i) => i.fmt(f),
            Ideal::Interval(i) => i.fmt(f),
            Ideal::Level(l) => l.fmt(f),
        }
    }
}

/// `x ∈ I`.
pub fn ideal_member(ideal: &FinGenIdeal, x: &Element) -> Result<bool> {
    same_instance(&ideal.semiring, x.semiring())?;
    ideal.contains(x.value())
}

/// `I + J`: the union of generator lists, normalized.
pub fn ideal_sum(i: &FinGenIdeal, j: &FinGenIdeal) -> Result<FinGenIdeal> {
    same_instance(&i.semiring, &j.semiring)?;
    let mut generators = i.generators.clone();
    generators.extend(j.generators.iter().cloned());
    Ok(FinGenIdeal {
        semiring: i.semiring.clone(),
        generators,
    }
    .normalized())
}

/// `IJ`: pairwise generator products, normalized.
pub fn ideal_product(i: &FinGenIdeal, j: &FinGenIdeal) -> Result<FinGenIdeal> {
    same_instance(&i.semiring, &j.semiring)?;
    let s = &i.semiring;
    let generators = i
        .generators
        .iter()
        .flat_map(|a| j.generators.iter().map(move |b| s.mul(a, b)))
        .collect();
    Ok(FinGenIdeal {
        semiring: s.clone(),
        generators,
    }
    .normalized())
}

/// `I = J` by mutual generator membership; returns a generator of one side missing
/// from the other.
pub(crate) fn fingen_difference(i: &FinGenIdeal, j: &FinGenIdeal) -> Result<Option<(bool, Value)>> {
    if let Some(x) = j.contains_all(&i.generators)? {
        return Ok(Some((true, x.clone())));
    }
    if let Some(x) = i.contains_all(&j.generators)? {
        return Ok(Some((false, x.clone())));
    }
    Ok(None)
}

/// Some `x in I` with `x not in J`, or `None` when `I ⊆ J` (up to `spec` for level ideals).
fn subset_witness(i: &Ideal, j: &Ideal, spec: &SampleSpec) -> Result<(Option<Value>, Bound)> {
    let exact = |checked: u64| Bound::sampled(spec, checked).with_method(Method::Exhaustive);
    same_instance(i.semiring().ambient(), j.semiring().ambient())?;
    match (i, j) {
        (Ideal::FinGen(a), _) => {
            let s = a.semiring.clone();
            let mut missing = None;
            for g in &a.generators {
                if !j.contains(g)? {
                    missing = Some(g.clone());
                    break;
                }
            }
            let _ = s;
            Ok((missing, exact(a.generators.len() as u64)))
        }
        (Ideal::Interval(a), Ideal::Interval(b)) => {
            Ok((a.subset_witness(b).map(Value::Rat), exact(3)))
        }
        _ => {
            let carrier = i.semiring();
            let steer = i.nonzero_member();
            let search = Search::new(&carrier, spec, "subset");
            let hit = RefCell::new(None);
            let (found, bound) = search.run(1, |t| {
                let mut cands = vec![t[0].clone()];
                if let Some(m) = &steer {
                    cands.push(carrier.mul(&t[0], m));
                }
                for x in cands {
                    if i.contains(&x).unwrap_or(false) && !j.contains(&x).unwrap_or(true) {
                        *hit.borrow_mut() = Some(x);
                        return Some(String::new());
                    }
                }
                None
            });
            Ok((found.and(hit.into_inner()), bound))
        }
    }
}

/// `I ⊆ J`. Exact for finitely generated and interval ideals.
pub fn ideal_subset(i: &Ideal, j: &Ideal, spec: &SampleSpec) -> Result<LawReport> {
    let law = format!("{i} is contained in {j}");
    let (w, bound) = subset_witness(i, j, spec)?;
    Ok(match w {
        None => LawReport::holds(law, bound),
        Some(x) => LawReport::counterexample(
            law,
            Witness::elements(
                vec![Element::trusted(i.semiring(), x)],
                "member of the first ideal missing from the second",
            ),
            bound,
        ),
    })
}

/// `I ⊆ J` or `J ⊆ I`; incomparable pairs report one witness from each side.
pub fn ideals_comparable(i: &Ideal, j: &Ideal, spec: &SampleSpec) -> Result<LawReport> {
    let law = format!("{i} and {j} are comparable");
    let (wi, bi) = subset_witness(i, j, spec)?;
    if wi.is_none() {
        return Ok(LawReport::holds(law, bi));
    }
    let (wj, bj) = subset_witness(j, i, spec)?;
    let bound = Bound {
        checked: bi.checked + bj.checked,
        ..bi
    };
    Ok(match (wi, wj) {
        (_, None) => LawReport::holds(law, bound),
        (Some(x), Some(y)) => LawReport::counterexample(
            law,
            Witness::elements(
                vec![
                    Element::trusted(i.semiring(), x),
                    Element::trusted(j.semiring(), y),
                ],
                "first lies only in the first ideal, second only in the second",
            ),
            bound,
        ),
        (None, Some(_)) => unreachable!(),
    })
}

/// Sampled search for two incomparable finitely generated ideals (at most three
/// generators each).
pub fn ideals_totally_ordered(semiring: &Arc<Semiring>, spec: &SampleSpec) -> Result<LawReport> {
    Oracle::build(semiring, &[semiring.one()])?;
    let mut rng = spec.rng(&format!("total-order|{semiring}"));
    let law = format!("finitely generated ideals of {semiring} are totally ordered");
    for checked in 1..=spec.count {
        let i = FinGenIdeal::sample(semiring, &mut rng, spec.sampler(), 3);
        let j = FinGenIdeal::sample(semiring, &mut rng, spec.sampler(), 3);
        if let (Some(x), Some(y)) = (
            j.contains_all(&i.generators)?,
            i.contains_all(&j.generators)?,
        ) {
            let (x, y) = (x.clone(), y.clone());
            return Ok(LawReport::counterexample(
                law,
                Witness::elements(
                    [i.generators.clone(), j.generators.clone(), vec![x, y]]
                        .concat()
                        .into_iter()
                        .map(|v| Element::trusted(semiring.clone(), v))
                        .collect(),
                    format!(
                        "{i} and {j} are incomparable; the last two elements each lie in only one of them"
                    ),
                ),
                Bound::sampled(spec, checked),
            ));
        }
    }
    Ok(LawReport::holds(law, Bound::sampled(spec, spec.count)))
}

/// Sampled search for `a ∈ I`, `a + b ∈ I`, `b ∉ I`.
pub fn is_subtractive_bounded(ideal: &Ideal, spec: &SampleSpec) -> Result<LawReport> {
    let s = ideal.semiring();
    ideal.contains(&s.zero())?;
    let steer = ideal.nonzero_member();
    let hit = RefCell::new(None);
    let search = Search::new(&s, spec, "subtractive");
    let (found, bound) = search.run(2, |t| {
        let b = &t[1];
        if ideal.contains(b).unwrap_or(true) {
            return None;
        }
        let mut cands = vec![t[0].clone()];
        if let Some(m) = &steer {
            cands.push(s.mul(&t[0], m));
        }
        for a in cands {
            if ideal.contains(&a).unwrap_or(false) && ideal.contains(&s.add(&a, b)).unwrap_or(false)
            {
                *hit.borrow_mut() = Some((a, b.clone()));
                return Some(String::new());
            }
        }
        None
    });
    let law = format!("{ideal} is subtractive");
    Ok(match found.and(hit.into_inner()) {
        None => LawReport::holds(law, bound),
        Some((a, b)) => LawReport::counterexample(
            law,
            Witness::elements(
                vec![
                    Element::trusted(s.clone(), a),
                    Element::trusted(s.clone(), b),
                ],
                "a and a + b lie in the ideal but b does not",
            ),
            bound,
        ),
    })
}

/// Sampled search for `ab ∈ I` with `a, b ∉ I`.
pub fn is_prime_bounded(ideal: &Ideal, spec: &SampleSpec) -> Result<LawReport> {
    let s = ideal.semiring();
    if ideal.contains(&s.one())? {
        return Err(Error::WholeIdeal);
    }
    let search = Search::new(&s, spec, "prime");
    Ok(search.report(format!("{ideal} is prime"), 2, |t| {
        let (a, b) = (&t[0], &t[1]);
        let out = |x: &Value| !ideal.contains(x).unwrap_or(true);
        (out(a) && out(b) && ideal.contains(&s.mul(a, b)).unwrap_or(false))
            .then(|| "a*b lies in the ideal but neither a nor b does".to_string())
    }))
}

#[cfg(test)]
mod tests;
