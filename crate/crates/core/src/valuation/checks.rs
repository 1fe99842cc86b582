use std::cmp::Ordering;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::{ext_ge, ext_gt, valuate, Valuation};
use crate::error::{Error, Result};
use crate::instances::{Element, Value};
use crate::laws::Search;
use crate::report::{Bound, LawReport, SampleSpec, Witness};
use crate::tomonoid::{ext_add, ext_compare, Ext, ExtendedValue};

/// Multiplicativity, the min inequality, `v(1) = 0`, `v(0) = inf`, and (on
/// entire sources) `v(x) = inf` only at zero.
pub fn check_valuation_axioms(v: &Valuation, spec: &SampleSpec) -> LawReport {
    let s = v.source();
    let law = format!("valuation axioms of {v}");
    let single = |x: Value, detail: &str| {
        LawReport::counterexample(
            law.clone(),
            Witness::elements(vec![Element::trusted(v.source_arc().clone(), x)], detail),
            Bound::sampled(spec, 1),
        )
    };
    if v.eval(&s.one()).value != Ext::Fin(BigRational::zero()) {
        return single(s.one(), "v(1) != 0");
    }
    if !v.eval(&s.zero()).is_inf() {
        return single(s.zero(), "v(0) != inf");
    }
    let entire = s.capabilities().entire;
    let search =
        Search::new(v.source_arc(), spec, format!("axioms:{}", v.rule())).exhaustive_up_to(128);
    search.report(law, 2, |t| {
        let (x, y) = (&t[0], &t[1]);
        let (vx, vy) = (v.eval(x), v.eval(y));
        let vxy = v.eval(&s.mul(x, y));
        let sum = ext_add(&vx, &vy).expect("same domain");
        if vxy != sum {
            return Some(format!("v(xy) = {vxy} but v(x) + v(y) = {sum}"));
        }
        let vs = v.eval(&s.add(x, y));
        let min = ExtendedValue::min(&vx, &vy).expect("same domain");
        if ext_compare(&vs, &min).expect("same domain") == Ordering::Less {
            return Some(format!("v(x + y) = {vs} < min(v(x), v(y)) = {min}"));
        }
        if entire && vx.is_inf() && !s.is_zero(x) {
            return Some(format!("v(x) = inf for nonzero x = {}", s.fmt_value(x)));
        }
        None
    })
}

/// Outcome of a min-property search.
#[derive(Debug, Clone, PartialEq)]
pub enum MinPropertyReport {
    Holds(Bound),
    Counterexample {
        x: Element,
        y: Element,
        vx: ExtendedValue,
        vy: ExtendedValue,
        vxy: ExtendedValue,
        bound: Bound,
    },
}

impl MinPropertyReport {
    pub fn holds(&self) -> bool {
        matches!(self, MinPropertyReport::Holds(_))
    }

    pub fn bound(&self) -> &Bound {
        match self {
            MinPropertyReport::Holds(b) | MinPropertyReport::Counterexample { bound: b, .. } => b,
        }
    }

    /// Re-evaluates a counterexample; `true` when the violation reproduces.
    pub fn reverify(&self, v: &Valuation) -> bool {
        match self {
            MinPropertyReport::Holds(_) => false,
            MinPropertyReport::Counterexample { x, y, .. } => {
                violates_min_property(v, x.value(), y.value())
            }
        }
    }

    pub fn to_law_report(&self, v: &Valuation) -> LawReport {
        let law = format!("min-property of {v}");
        match self {
            MinPropertyReport::Holds(b) => LawReport::holds(law, *b),
            MinPropertyReport::Counterexample {
                x,
                y,
                vx,
                vy,
                vxy,
                bound,
            } => LawReport::counterexample(
                law,
                Witness::elements(
                    vec![x.clone(), y.clone()],
                    format!("v(x) = {vx}, v(y) = {vy}, v(x + y) = {vxy}"),
                ),
                *bound,
            ),
        }
    }
}

fn violates_min_property(v: &Valuation, x: &Value, y: &Value) -> bool {
    let (vx, vy) = (v.eval(x), v.eval(y));
    if vx == vy {
        return false;
    }
    let vxy = v.eval(&v.source().add(x, y));
    vxy != ExtendedValue::min(&vx, &vy).expect("same domain")
}

/// Searches for `v(x) != v(y)` with `v(x + y) != min(v(x), v(y))`.
pub fn check_min_property(v: &Valuation, spec: &SampleSpec) -> MinPropertyReport {
    let search =
        Search::new(v.source_arc(), spec, format!("min:{}", v.rule())).exhaustive_up_to(128);
    let (found, bound) = search.run(2, |t| {
        violates_min_property(v, &t[0], &t[1]).then(String::new)
    });
    match found {
        None => MinPropertyReport::Holds(bound),
        Some(f) => {
            let s = v.source();
            let (x, y) = (f.tuple[0].clone(), f.tuple[1].clone());
            let vxy = v.eval(&s.add(&x, &y));
            MinPropertyReport::Counterexample {
                vx: v.eval(&x),
                vy: v.eval(&y),
                vxy,
                x: Element::trusted(v.source_arc().clone(), x),
                y: Element::trusted(v.source_arc().clone(), y),
                bound,
            }
        }
    }
}

/// Level sets: `K_α = {v > α}`, `L_α = {v >= α}` (`strict` picks `K`), and
/// their intersections `I_α`, `J_α` with `S_v` when `within_sv`.
pub fn level_membership(
    v: &Valuation,
    x: &Element,
    alpha: &ExtendedValue,
    strict: bool,
    within_sv: bool,
) -> Result<bool> {
    let a = alpha
        .finite()
        .ok_or_else(|| Error::InvalidArgument("level sets need a finite α".into()))?;
    let vx = valuate(v, x)?;
    let above = if strict {
        ext_gt(&vx.value, a)
    } else {
        ext_ge(&vx.value, a)
    };
    Ok(above && (!within_sv || vx.value.is_nonnegative()))
}

/// Compares "unit of `S_v`" with "`v(x) = 0`" over sampled nonzero elements of `S_v`.
pub fn units_vs_zeroset(v: &Valuation, spec: &SampleSpec) -> Result<LawReport> {
    let s = v.source();
    if !s.capabilities().entire {
        return Err(Error::RuleNotApplicable {
            rule: v.rule().to_string(),
            semiring: s.to_string(),
        });
    }
    let sv = Arc::new(v.sv());
    let search = Search::new(&sv, spec, format!("units:{}", v.rule()));
    Ok(
        search.report(format!("units of S_v are exactly v = 0 for {v}"), 1, |t| {
            let x = &t[0];
            if sv.is_zero(x) {
                return None;
            }
            let unit = sv.is_unit(x);
            let zero_value = v.eval(x).value == Ext::Fin(BigRational::zero());
            match (unit, zero_value) {
                (true, false) => Some(format!("unit with v(x) = {}", v.eval(x))),
                (false, true) => Some("v(x) = 0 but x is not a unit of S_v".into()),
                _ => None,
            }
        }),
    )
}
