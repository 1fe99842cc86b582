//! Discrete valuation semirings: a valuation semiring `S_v` of a semifield `K`
//! whose valuation is onto `Z` and has a uniformizer `t` with `v(t) = 1`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{fingen_difference, FinGenIdeal};
use crate::error::{Error, Result};
use crate::instances::{same_instance, Element, Semiring, Value};
use crate::report::{Bound, LawReport, Method, SampleSpec, Witness};
use crate::tomonoid::{Ext, Tomonoid};
use crate::valuation::{uniformizer_value, Rule, Valuation};

#[derive(Debug, Clone, PartialEq)]
pub struct DvsStructure {
    carrier: Arc<Semiring>,
    field: Arc<Semiring>,
    valuation: Valuation,
    uniformizer: Value,
}

impl DvsStructure {
    /// The DVS `S_v` of a discrete valuation on a semifield.
    pub fn new(valuation: Valuation) -> Result<DvsStructure> {
        let carrier = Arc::new(valuation.sv());
        DvsStructure::with_carrier(valuation, carrier)
    }

    fn with_carrier(valuation: Valuation, carrier: Arc<Semiring>) -> Result<DvsStructure> {
        let field = valuation.source_arc().clone();
        let not_dvs = || Error::RuleNotApplicable {
            rule: valuation.rule().to_string(),
            semiring: field.to_string(),
        };
        if !field.capabilities().semifield || valuation.codomain() != &Tomonoid::Z {
            return Err(not_dvs());
        }
        let uniformizer = uniformizer_value(&field, valuation.rule()).ok_or_else(not_dvs)?;
        Ok(DvsStructure {
            carrier,
            field,
            valuation,
            uniformizer,
        })
    }

    /// `(N0 ∪ {inf}, min, +)` viewed as the valuation semiring of the identity
    /// valuation on `tropical-int`.
    pub fn tropical_nat() -> DvsStructure {
        let v = Valuation::new(Arc::new(Semiring::TropicalInt), Rule::TropicalId)
            .expect("tropical-id applies to tropical-int");
        DvsStructure::with_carrier(v, Arc::new(Semiring::TropicalNat)).expect("discrete")
    }

    /// Accepts `tropical-nat` and `sv(K, rule)` descriptors.
    pub fn from_descriptor(s: &Semiring) -> Result<DvsStructure> {
        match s {
            Semiring::TropicalNat => Ok(DvsStructure::tropical_nat()),
            Semiring::Sv(k, rule) => {
                DvsStructure::new(Valuation::new(Arc::new((**k).clone()), rule.clone())?)
            }
            other => Err(Error::InvalidArgument(format!(
                "{other} is not a discrete valuation semiring descriptor"
            ))),
        }
    }

    pub fn carrier(&self) -> &Arc<Semiring> {
        &self.carrier
    }

    pub fn field(&self) -> &Arc<Semiring> {
        &self.field
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn uniformizer(&self) -> Element {
        Element::trusted(self.carrier.clone(), self.uniformizer.clone())
    }

    /// Integer value of a nonzero payload.
    pub fn order(&self, x: &Value) -> Result<i64> {
        match self.valuation.eval(x).value {
            Ext::Inf => Err(Error::ZeroElement),
            Ext::Fin(q) => Ok(q.to_integer().to_i64().expect("valuation fits in i64")),
        }
    }

    /// `t^n` in the semifield, for any integer `n`.
    pub fn t_pow(&self, n: i64) -> Value {
        let k = &self.field;
        let base = if n < 0 {
            k.inverse(&self.uniformizer)
                .expect("uniformizer is nonzero")
        } else {
            self.uniformizer.clone()
        };
        let mut acc = k.one();
        for _ in 0..n.unsigned_abs() {
            acc = k.mul(&acc, &base);
        }
        acc
    }

    fn accepts(&self, x: &Element) -> Result<()> {
        if same_instance(&self.carrier, x.semiring()).is_ok() {
            return Ok(());
        }
        same_instance(&self.field, x.semiring())
    }

    /// Wraps a payload as a carrier element when it lies in `S_v`, else as a field element.
    fn element(&self, v: Value) -> Element {
        let v = self.field.canonical(&v);
        if self.valuation.eval(&v).value.is_nonnegative() {
            Element::trusted(self.carrier.clone(), v)
        } else {
            Element::trusted(self.field.clone(), v)
        }
    }
}

/// `x = u·t^n` with `v(u) = 0` and `n = v(x)`.
pub fn dvs_normal_form(d: &DvsStructure, x: &Element) -> Result<(Element, i64)> {
    d.accepts(x)?;
    let n = d.order(x.value())?;
    let u = d.field.mul(x.value(), &d.t_pow(-n));
    Ok((d.element(u), n))
}

/// The `n` with `I = (t^n)`, confirmed by mutual generator membership.
pub fn dvs_ideal_of(d: &DvsStructure, ideal: &FinGenIdeal) -> Result<i64> {
    same_instance(&d.carrier, ideal.semiring())?;
    let n = ideal
        .generators()
        .iter()
        .filter(|g| !d.field.is_zero(g))
        .map(|g| d.order(g))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or(Error::ZeroIdeal)?;
    let tn = FinGenIdeal::from_values(d.carrier.clone(), vec![d.t_pow(n)])?;
    if let Some((_, x)) = fingen_difference(ideal, &tn)? {
        return Err(Error::InvalidArgument(format!(
            "{ideal} differs from (t^{n}) at {}",
            d.carrier.fmt_value(&x)
        )));
    }
    Ok(n)
}

/// `a = q·b + r` with `r = 0` or `v(r) < v(b)`; ties take `q = a·b^-1`.
pub fn euclidean_divide(d: &DvsStructure, a: &Element, b: &Element) -> Result<(Element, Element)> {
    d.accepts(a)?;
    d.accepts(b)?;
    let k = &d.field;
    if b.is_zero() {
        return Err(Error::ZeroElement);
    }
    let zero = || d.element(k.zero());
    if a.is_zero() {
        return Ok((zero(), zero()));
    }
    if d.order(a.value())? < d.order(b.value())? {
        return Ok((zero(), d.element(a.value().clone())));
    }
    let b_inv = k.inverse(b.value()).expect("nonzero in a semifield");
    Ok((d.element(k.mul(a.value(), &b_inv)), zero()))
}

/// Finds the least `n <= bound` with `x ∉ (t^n)`; the report's law names it.
pub fn intersection_probe(d: &DvsStructure, x: &Element, bound: u64) -> Result<LawReport> {
    d.accepts(x)?;
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let shown = d.field.fmt_value(x.value());
    let mut checked = 0;
    for n in 1..=bound {
        checked += 1;
        let ideal = FinGenIdeal::from_values(d.carrier.clone(), vec![d.t_pow(n as i64)])?;
        if !ideal.contains(x.value())? {
            return Ok(LawReport::holds(
                format!("{shown} escapes (t^{n})"),
                probe_bound(bound, checked),
            ));
        }
    }
    Ok(LawReport::counterexample(
        format!("{shown} escapes (t^n) for some n <= {bound}"),
        Witness::elements(vec![x.clone()], "member of every (t^n) checked"),
        probe_bound(bound, checked),
    ))
}

fn probe_bound(bound: u64, checked: u64) -> Bound {
    Bound {
        seed: 0,
        samples: bound,
        size_bound: 0,
        checked,
        method: Method::Exhaustive,
    }
}

/// The escape index recorded by [`intersection_probe`], parsed back from its law.
pub fn escape_index(report: &LawReport) -> Option<u64> {
    let rest = report.law.rsplit_once("(t^")?.1;
    rest.strip_suffix(')')?.parse().ok()
}

/// Bounded search for `u^n + a1 u^(n-1) + ... + an = b1 u^(n-1) + ... + bn` with
/// `n <= degree_bound` and coefficients from `pool`. When `u` lies in `S_v` it is
/// added to the pool, so the degree-one equation `u + 0 = u` is reachable.
///
/// `Holds` means no equation was found.
pub fn integral_check(
    d: &DvsStructure,
    u: &Element,
    degree_bound: u32,
    pool: &[Element],
) -> Result<LawReport> {
    if degree_bound == 0 {
        return Err(Error::InvalidArgument(
            "degree_bound must be at least 1".into(),
        ));
    }
    d.accepts(u)?;
    let k = &d.field;
    let mut coeffs: Vec<Value> = Vec::new();
    for c in pool {
        same_instance(&d.carrier, c.semiring())?;
        coeffs.push(k.canonical(c.value()));
    }
    let u_val = k.canonical(u.value());
    if d.valuation.eval(&u_val).value.is_nonnegative()
        && !coeffs.iter().any(|c| k.equals(c, &u_val))
    {
        coeffs.push(u_val.clone());
    }
    let shown = k.fmt_value(&u_val);
    let law = format!(
        "{shown} is not integral over {} (degree <= {degree_bound})",
        d.carrier
    );
    let hashable = canonical_is_unique(k);
    let mut checked = 0u64;
    let mut powers = vec![k.one()];
    for n in 1..=degree_bound as usize {
        powers.push(k.mul(&powers[n - 1], &u_val));
        // Lower-degree part sum_{i=1..n} c_i u^(n-i), for every coefficient tuple.
        let lower = combinations(k, &coeffs, &powers[..n]);
        let lead = &powers[n];
        let lhs: Vec<Value> = lower
            .iter()
            .map(|(s, _)| k.canonical(&k.add(lead, s)))
            .collect();
        checked += (lhs.len() * lower.len()) as u64;
        let hit = if hashable {
            let index: HashMap<&Value, usize> =
                lower.iter().enumerate().map(|(j, (s, _))| (s, j)).collect();
            lhs.iter()
                .enumerate()
                .find_map(|(i, l)| index.get(l).map(|&j| (i, j)))
        } else {
            lhs.iter().enumerate().find_map(|(i, l)| {
                lower
                    .iter()
                    .position(|(s, _)| k.equals(l, s))
                    .map(|j| (i, j))
            })
        };
        if let Some((i, j)) = hit {
            let a = &lower[i].1;
            let b = &lower[j].1;
            let els = a
                .iter()
                .chain(b)
                .map(|&c| Element::trusted(d.carrier.clone(), coeffs[c].clone()))
                .collect();
            return Ok(LawReport::counterexample(
                law,
                Witness::elements(
                    els,
                    format!("degree {n}: a1..a{n} then b1..b{n} satisfy the integral equation"),
                ),
                integral_bound(degree_bound, coeffs.len(), checked),
            ));
        }
    }
    Ok(LawReport::holds(
        law,
        integral_bound(degree_bound, coeffs.len(), checked),
    ))
}

fn integral_bound(degree_bound: u32, pool: usize, checked: u64) -> Bound {
    Bound {
        seed: 0,
        samples: pool as u64,
        size_bound: degree_bound as u64,
        checked,
        method: Method::Exhaustive,
    }
}

/// Whether equal elements of `k` always have identical canonical payloads.
fn canonical_is_unique(k: &Semiring) -> bool {
    match k.ambient() {
        Semiring::Fractions(base) => matches!(base.as_ref(), Semiring::Nat | Semiring::IdealsZ),
        _ => true,
    }
}

/// All sums `c_1 u^(n-1) + ... + c_n u^0` over coefficient index tuples, with
/// `powers = [u^0, ..., u^(n-1)]`.
fn combinations(k: &Semiring, coeffs: &[Value], powers: &[Value]) -> Vec<(Value, Vec<usize>)> {
    let n = powers.len();
    let mut out = vec![(k.zero(), Vec::with_capacity(n))];
    for i in 1..=n {
        let p = &powers[n - i];
        let terms: Vec<Value> = coeffs.iter().map(|c| k.mul(c, p)).collect();
        out = out
            .into_iter()
            .flat_map(|(s, idx)| {
                terms.iter().enumerate().map(move |(c, t)| {
                    let mut idx = idx.clone();
                    idx.push(c);
                    (k.canonical(&k.add(&s, t)), idx)
                })
            })
            .collect();
    }
    out
}

/// `x ↦ n` where `x = u·t^n`, as a valuation on the semifield.
pub fn value_group_valuation(d: &DvsStructure) -> Result<Valuation> {
    Valuation::new(
        d.field.clone(),
        Rule::ValueGroup(Box::new(d.valuation.rule().clone())),
    )
}

/// `n` as an integer value, for callers comparing against [`DvsStructure::order`].
pub fn int_value(n: i64) -> Ext {
    Ext::Fin(BigRational::from_integer(BigInt::from(n)))
}

/// Whether `unit·t^n` reproduces `x` exactly with `v(unit) = 0` and `n = v(x)`.
pub fn normal_form_round_trips(d: &DvsStructure, x: &Element) -> Result<bool> {
    let (u, n) = dvs_normal_form(d, x)?;
    let back = d.field.mul(u.value(), &d.t_pow(n));
    Ok(d.field.equals(&back, x.value())
        && d.valuation.eval(u.value()).value == int_value(0)
        && n == d.order(x.value())?)
}

/// Sampled nonzero elements of the carrier.
pub fn sample_nonzero(d: &DvsStructure, spec: &SampleSpec, tag: &str, count: u64) -> Vec<Element> {
    let mut rng = spec.rng(tag);
    let mut out = Vec::with_capacity(count as usize);
    while (out.len() as u64) < count {
        let x = d.carrier.sample(&mut rng, spec.sampler());
        if !d.carrier.is_zero(&x) {
            out.push(Element::trusted(d.carrier.clone(), x));
        }
    }
    out
}
