//! Polynomials in a fresh indeterminate `Y` over an instance, their content
//! ideals, the Dedekind–Mertens identity and the Gaussian property.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::Result;
use crate::ideals::{fingen_difference, FinGenIdeal};
use crate::instances::{same_instance, Element, Semiring, Value};
use crate::parse::parse_content;
use crate::report::{Bound, LawReport, Method, SampleSpec, Witness};

/// Coefficients indexed by the exponent of `Y`; trailing zeros are stripped.
#[derive(Debug, Clone, PartialEq)]
pub struct ContentPolynomial {
    semiring: Arc<Semiring>,
    coeffs: Vec<Value>,
}

impl ContentPolynomial {
    pub fn new(semiring: Arc<Semiring>, coeffs: Vec<Element>) -> Result<ContentPolynomial> {
        let mut values = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            same_instance(&semiring, c.semiring())?;
            values.push(c.into_value());
        }
        Ok(ContentPolynomial::from_values(semiring, values))
    }

    pub(crate) fn from_values(
        semiring: Arc<Semiring>,
        mut coeffs: Vec<Value>,
    ) -> ContentPolynomial {
        while coeffs.last().is_some_and(|c| semiring.is_zero(c)) {
            coeffs.pop();
        }
        let coeffs = coeffs.iter().map(|c| semiring.canonical(c)).collect();
        ContentPolynomial { semiring, coeffs }
    }

    /// Reads an expression in `Y` whose coefficients use the instance grammar.
    pub fn parse(input: &str, semiring: &Arc<Semiring>) -> Result<ContentPolynomial> {
        let coeffs = parse_content(input, semiring)?;
        Ok(ContentPolynomial::from_values(semiring.clone(), coeffs))
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn coeffs(&self) -> &[Value] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `Y`; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &ContentPolynomial) -> Result<ContentPolynomial> {
        same_instance(&self.semiring, &other.semiring)?;
        let s = &self.semiring;
        if self.is_zero() || other.is_zero() {
            return Ok(ContentPolynomial::from_values(s.clone(), Vec::new()));
        }
        let mut out = vec![s.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = s.add(&out[i + j], &s.mul(a, b));
            }
        }
        Ok(ContentPolynomial::from_values(s.clone(), out))
    }

    /// A polynomial of degree at most `max_deg` with sampled coefficients.
    pub fn sample<R: Rng + ?Sized>(
        semiring: &Arc<Semiring>,
        rng: &mut R,
        spec: &SampleSpec,
        max_deg: usize,
    ) -> ContentPolynomial {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| semiring.sample(rng, spec.sampler()))
            .collect();
        ContentPolynomial::from_values(semiring.clone(), coeffs)
    }
}

impl fmt::Display for ContentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.semiring;
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !s.is_zero(c))
            .map(|(e, c)| {
                let coef = s.fmt_value(c);
                let y = match e {
                    0 => return coef,
                    1 => "Y".to_string(),
                    e => format!("Y^{e}"),
                };
                if s.is_one(c) {
                    y
                } else if coef.contains([' ', '/', '^']) {
                    format!("({coef})*{y}")
                } else {
                    format!("{coef}*{y}")
                }
            })
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}

/// The ideal generated by the nonzero coefficients; `(0)` for the zero polynomial.
pub fn content(f: &ContentPolynomial) -> FinGenIdeal {
    let gens: Vec<Value> = f
        .coeffs
        .iter()
        .filter(|c| !f.semiring.is_zero(c))
        .cloned()
        .collect();
    if gens.is_empty() {
        return FinGenIdeal::zero(f.semiring.clone());
    }
    FinGenIdeal::from_values(f.semiring.clone(), gens).expect("coefficients lie in the instance")
}

fn power(i: &FinGenIdeal, k: usize) -> Result<FinGenIdeal> {
    let mut acc = FinGenIdeal::from_values(i.semiring().clone(), vec![i.semiring().one()])?;
    for _ in 0..k {
        acc = crate::ideals::ideal_product(&acc, i)?;
    }
    Ok(acc)
}

/// `c(f)^(m+1) c(g) = c(f)^m c(fg)` with `m = deg g`, by mutual generator membership.
pub fn dedekind_mertens_check(f: &ContentPolynomial, g: &ContentPolynomial) -> Result<LawReport> {
    same_instance(&f.semiring, &g.semiring)?;
    let m = g.deg().unwrap_or(0);
    let cf = content(f);
    let cfm = power(&cf, m)?;
    let lhs = crate::ideals::ideal_product(&crate::ideals::ideal_product(&cfm, &cf)?, &content(g))?;
    let rhs = crate::ideals::ideal_product(&cfm, &content(&f.mul(g)?))?;
    let law = format!("c(f)^{} c(g) = c(f)^{m} c(fg) for f = {f}, g = {g}", m + 1);
    let bound = Bound {
        seed: 0,
        samples: 1,
        size_bound: 0,
        checked: (lhs.generators().len() + rhs.generators().len()) as u64,
        method: Method::Exhaustive,
    };
    Ok(match fingen_difference(&lhs, &rhs)? {
        None => LawReport::holds(law, bound),
        Some((left_side, x)) => {
            let side = if left_side { "left" } else { "right" };
            LawReport::counterexample(
                law,
                Witness {
                    elements: vec![Element::trusted(f.semiring.clone(), x)],
                    polynomials: vec![f.clone(), g.clone()],
                    detail: format!("generator of the {side} side missing from the other side"),
                },
                bound,
            )
        }
    })
}

/// Runs [`dedekind_mertens_check`] over `spec.count` sampled pairs of degree at most 4,
/// stopping at the first failure.
pub fn dedekind_mertens_sampled(instance: &Arc<Semiring>, spec: &SampleSpec) -> Result<LawReport> {
    let mut rng = spec.rng(&format!("dedekind-mertens|{instance}"));
    let law = format!("Dedekind-Mertens identity over {instance}");
    for checked in 1..=spec.count {
        let f = ContentPolynomial::sample(instance, &mut rng, spec, 4);
        let g = ContentPolynomial::sample(instance, &mut rng, spec, 4);
        let r = dedekind_mertens_check(&f, &g)?;
        if let Some(w) = r.witness() {
            return Ok(LawReport::counterexample(
                law,
                w.clone(),
                Bound::sampled(spec, checked),
            ));
        }
    }
    Ok(LawReport::holds(law, Bound::sampled(spec, spec.count)))
}

/// `Some` generator side when `c(fg) != c(f)c(g)`.
pub fn gaussian_defect(f: &ContentPolynomial, g: &ContentPolynomial) -> Result<Option<Value>> {
    let lhs = content(&f.mul(g)?);
    let rhs = crate::ideals::ideal_product(&content(f), &content(g))?;
    Ok(fingen_difference(&lhs, &rhs)?.map(|(_, x)| x))
}

/// Searches for `c(fg) != c(f)c(g)`: linear polynomials over the landmarks first,
/// then `spec.count` sampled pairs of degree at most 4.
pub fn gaussian_check(instance: &Arc<Semiring>, spec: &SampleSpec) -> Result<LawReport> {
    let s = instance;
    let law = format!("c(fg) = c(f)c(g) over {s}");
    let marks = s.landmarks();
    let linear: Vec<ContentPolynomial> = marks
        .iter()
        .flat_map(|a| {
            marks
                .iter()
                .map(move |b| ContentPolynomial::from_values(s.clone(), vec![a.clone(), b.clone()]))
        })
        .filter(|p| p.deg() == Some(1))
        .collect();
    let mut checked = 0u64;
    let found = |f: &ContentPolynomial, g: &ContentPolynomial, x: Value, checked: u64| {
        LawReport::counterexample(
            law.clone(),
            Witness {
                elements: vec![Element::trusted(s.clone(), x)],
                polynomials: vec![f.clone(), g.clone()],
                detail: "generator on one side missing from the other".into(),
            },
            Bound::sampled(spec, checked),
        )
    };
    for f in &linear {
        for g in &linear {
            checked += 1;
            if let Some(x) = gaussian_defect(f, g)? {
                return Ok(found(f, g, x, checked));
            }
        }
    }
    let mut rng = spec.rng(&format!("gaussian|{s}"));
    for _ in 0..spec.count {
        let f = ContentPolynomial::sample(s, &mut rng, spec, 4);
        let g = ContentPolynomial::sample(s, &mut rng, spec, 4);
        checked += 1;
        if let Some(x) = gaussian_defect(&f, &g)? {
            return Ok(found(&f, &g, x, checked));
        }
    }
    Ok(LawReport::holds(law, Bound::sampled(spec, checked)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sr(s: &str) -> Arc<Semiring> {
        Arc::new(s.parse().unwrap())
    }

    fn poly(s: &Arc<Semiring>, x: &str) -> ContentPolynomial {
        ContentPolynomial::parse(x, s).unwrap()
    }

    #[test]
    fn contents() {
        let z = sr("ideals-z");
        assert_eq!(
            content(&poly(&z, "4 + 6*Y")).normalized().to_string(),
            "ideal[2]"
        );
        let nat = sr("nat");
        assert_eq!(content(&poly(&nat, "2 + 3*Y")).to_string(), "ideal[2, 3]");
        assert!(content(&poly(&nat, "0")).is_zero_ideal());
        assert!(poly(&nat, "0*Y^3 + 1").deg() == Some(0));
    }

    #[test]
    fn display_round_trips() {
        for (s, x) in [
            ("nat", "2 + 3*Y + Y^4"),
            ("poly(nat)", "X + (1 + X)*Y"),
            ("fractions(poly(nat))", "(1)/(X) + ((X)/(1 + X))*Y^2"),
        ] {
            let s = sr(s);
            let p = poly(&s, x);
            assert_eq!(poly(&s, &p.to_string()), p, "{p}");
        }
    }

    #[test]
    fn dedekind_mertens_examples() {
        let nat = sr("nat");
        let f = poly(&nat, "2 + 3*Y");
        assert!(dedekind_mertens_check(&f, &f).unwrap().is_holds());
        let z = sr("ideals-z");
        let zero = poly(&z, "0");
        assert!(dedekind_mertens_check(&zero, &poly(&z, "4 + 6*Y"))
            .unwrap()
            .is_holds());
        let r = dedekind_mertens_sampled(&z, &SampleSpec::new(1, 200, 50)).unwrap();
        assert!(r.is_holds(), "{r}");
    }

    #[test]
    fn dedekind_mertens_fails_over_nat() {
        let nat = sr("nat");
        let r = dedekind_mertens_check(&poly(&nat, "2 + Y"), &poly(&nat, "1 + 2*Y")).unwrap();
        assert!(!r.is_holds());
    }

    #[test]
    fn gaussian_examples() {
        let spec = SampleSpec::new(1, 300, 50);
        assert!(gaussian_check(&sr("sv(qnn, vp:5)"), &spec)
            .unwrap()
            .is_holds());
        assert!(gaussian_check(&sr("ideals-z"), &spec).unwrap().is_holds());
        let d = sr("sv(fractions(poly(nat)), deg-frac)");
        let r = gaussian_check(&d, &spec).unwrap();
        let w = r.witness().expect("deg-frac is not Gaussian");
        let (f, g) = (&w.polynomials[0], &w.polynomials[1]);
        assert!(gaussian_defect(f, g).unwrap().is_some());
    }

    #[test]
    fn content_of_product_is_inside_product_of_contents() {
        let spec = SampleSpec::new(4, 100, 30);
        for s in ["nat", "ideals-z", "sv(qnn, vp:5)", "bool-poly", "fuzzy"] {
            let s = sr(s);
            let mut rng = spec.rng("monotone");
            for _ in 0..spec.count {
                let f = ContentPolynomial::sample(&s, &mut rng, &spec, 3);
                let g = ContentPolynomial::sample(&s, &mut rng, &spec, 3);
                let prod = crate::ideals::ideal_product(&content(&f), &content(&g)).unwrap();
                let fg = f.mul(&g).unwrap();
                assert_eq!(prod.contains_all(fg.coeffs()).unwrap(), None, "{f} {g}");
            }
        }
    }
}
