//! Monoid semirings `T[M]`: finitely supported maps from exponents to nonzero
//! coefficients of a base semiring. Covers `T[X]`, `T[X, X^-1]` and `T[Q>=0]`-style
//! exponent monoids uniformly.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::{Semiring, Value};

pub type Terms = BTreeMap<BigRational, Value>;

pub fn add(base: &Semiring, a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (e, c) in b {
        match out.get(e) {
            Some(existing) => {
                let sum = base.add(existing, c);
                if base.is_zero(&sum) {
                    out.remove(e);
                } else {
                    out.insert(e.clone(), sum);
                }
            }
            None => {
                out.insert(e.clone(), c.clone());
            }
        }
    }
    out
}

pub fn mul(base: &Semiring, a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let prod = base.mul(ca, cb);
            if base.is_zero(&prod) {
                continue;
            }
            let e = ea + eb;
            let next = match out.remove(&e) {
                Some(existing) => base.add(&existing, &prod),
                None => prod,
            };
            if !base.is_zero(&next) {
                out.insert(e, next);
            }
        }
    }
    out
}

pub fn eq(base: &Semiring, a: &Terms, b: &Terms) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|((ea, ca), (eb, cb))| ea == eb && base.equals(ca, cb))
}

pub fn canonical(base: &Semiring, a: &Terms) -> Terms {
    a.iter()
        .filter(|(_, c)| !base.is_zero(c))
        .map(|(e, c)| (e.clone(), base.canonical(c)))
        .collect()
}

pub fn low(a: &Terms) -> Option<&BigRational> {
    a.keys().next()
}

pub fn high(a: &Terms) -> Option<&BigRational> {
    a.keys().next_back()
}
