//! Bounded checkers for the semiring axioms, multiplicative cancellation and
//! entirety, plus the shared search loop used by every sampled law.
//!
//! A search visits all tuples of the instance's landmarks first, then either
//! every tuple of a small enumerable carrier or `spec.count` random tuples.

use std::sync::Arc;

use crate::instances::{Element, Semiring, Value};
use crate::report::{Bound, LawReport, Method, SampleSpec, Witness};

/// Result of a search: the first failing tuple with its explanation, and the bound reached.
pub(crate) struct Found {
    pub tuple: Vec<Value>,
    pub detail: String,
}

pub(crate) struct Search<'a> {
    pub semiring: &'a Arc<Semiring>,
    pub spec: &'a SampleSpec,
    pub tag: String,
    /// Enumerate every tuple when the carrier has at most this many elements.
    pub exhaustive_limit: usize,
    pub landmarks: bool,
}

impl<'a> Search<'a> {
    pub fn new(semiring: &'a Arc<Semiring>, spec: &'a SampleSpec, tag: impl Into<String>) -> Self {
        Search {
            semiring,
            spec,
            tag: tag.into(),
            exhaustive_limit: 0,
            landmarks: true,
        }
    }

    pub fn exhaustive_up_to(mut self, limit: usize) -> Self {
        self.exhaustive_limit = limit;
        self
    }

    fn enumerated(&self) -> Option<Vec<Value>> {
        self.semiring
            .enumerate(self.spec.size_bound)
            .filter(|all| all.len() <= self.exhaustive_limit)
    }

    /// Runs `f` over tuples of length `arity` until it reports a failure.
    pub fn run<F>(&self, arity: usize, mut f: F) -> (Option<Found>, Bound)
    where
        F: FnMut(&[Value]) -> Option<String>,
    {
        let s = self.semiring.as_ref();
        let mut checked = 0u64;
        let mut bound = Bound::sampled(self.spec, 0);
        let mut visit = |tuple: &[Value], checked: &mut u64| -> Option<Found> {
            *checked += 1;
            f(tuple).map(|detail| Found {
                tuple: tuple.to_vec(),
                detail,
            })
        };
        if self.landmarks {
            let marks = s.landmarks();
            if let Some(found) = for_each_tuple(&marks, arity, &mut |t| visit(t, &mut checked)) {
                bound.checked = checked;
                return (Some(found), bound);
            }
        }
        if let Some(all) = self.enumerated() {
            bound.method = Method::Exhaustive;
            let found = for_each_tuple(&all, arity, &mut |t| visit(t, &mut checked));
            bound.checked = checked;
            return (found, bound);
        }
        let mut rng = self.spec.rng(&format!("{}|{}", self.tag, s));
        let sampler = self.spec.sampler();
        for _ in 0..self.spec.count {
            let tuple: Vec<Value> = (0..arity).map(|_| s.sample(&mut rng, sampler)).collect();
            if let Some(found) = visit(&tuple, &mut checked) {
                bound.checked = checked;
                return (Some(found), bound);
            }
        }
        bound.checked = checked;
        (None, bound)
    }

    /// Runs the search and packages the outcome as a report.
    pub fn report<F>(&self, law: impl Into<String>, arity: usize, f: F) -> LawReport
    where
        F: FnMut(&[Value]) -> Option<String>,
    {
        let (found, bound) = self.run(arity, f);
        let law = law.into();
        match found {
            None => LawReport::holds(law, bound),
            Some(found) => LawReport::counterexample(law, self.witness(found), bound),
        }
    }

    pub fn witness(&self, found: Found) -> Witness {
        let elements = found
            .tuple
            .into_iter()
            .map(|v| Element::trusted(self.semiring.clone(), v))
            .collect();
        Witness::elements(elements, found.detail)
    }
}

fn for_each_tuple<F>(pool: &[Value], arity: usize, f: &mut F) -> Option<Found>
where
    F: FnMut(&[Value]) -> Option<Found>,
{
    let n = pool.len();
    if n == 0 {
        return None;
    }
    let mut idx = vec![0usize; arity];
    let mut tuple: Vec<Value> = vec![pool[0].clone(); arity];
    loop {
        for (slot, &i) in tuple.iter_mut().zip(&idx) {
            *slot = pool[i].clone();
        }
        if let Some(found) = f(&tuple) {
            return Some(found);
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Commutativity, associativity, identities, distributivity and `a·0 = 0` on
/// sampled triples.
pub fn check_semiring_axioms(instance: &Arc<Semiring>, spec: &SampleSpec) -> LawReport {
    let s = instance.as_ref();
    let law = format!("semiring axioms of {s}");
    let (zero, one) = (s.zero(), s.one());
    if s.equals(&zero, &one) {
        let w = Witness::elements(vec![Element::trusted(instance.clone(), one)], "1 = 0");
        return LawReport::counterexample(law, w, Bound::sampled(spec, 1));
    }
    let search = Search::new(instance, spec, "axioms").exhaustive_up_to(24);
    search.report(law, 3, |t| {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        let eq = |x: &Value, y: &Value| s.equals(x, y);
        if !eq(&s.add(a, b), &s.add(b, a)) {
            return Some("a + b != b + a".into());
        }
        if !eq(&s.mul(a, b), &s.mul(b, a)) {
            return Some("a * b != b * a".into());
        }
        if !eq(&s.add(&s.add(a, b), c), &s.add(a, &s.add(b, c))) {
            return Some("(a + b) + c != a + (b + c)".into());
        }
        if !eq(&s.mul(&s.mul(a, b), c), &s.mul(a, &s.mul(b, c))) {
            return Some("(a * b) * c != a * (b * c)".into());
        }
        if !eq(&s.add(a, &zero), a) {
            return Some("a + 0 != a".into());
        }
        if !eq(&s.mul(a, &one), a) {
            return Some("a * 1 != a".into());
        }
        if !s.is_zero(&s.mul(a, &zero)) {
            return Some("a * 0 != 0".into());
        }
        if !eq(&s.mul(a, &s.add(b, c)), &s.add(&s.mul(a, b), &s.mul(a, c))) {
            return Some("a * (b + c) != a * b + a * c".into());
        }
        None
    })
}

/// Searches for `ab = ac` with `a != 0`, `b != c` (first report) and for zero
/// divisors (second report). Semifields are answered analytically.
pub fn probe_mc_entire(instance: &Arc<Semiring>, spec: &SampleSpec) -> (LawReport, LawReport) {
    let s = instance.as_ref();
    let mc_law = format!("multiplicative cancellation in {s}");
    let entire_law = format!("no zero divisors in {s}");
    if s.capabilities().semifield {
        let bound = Bound::sampled(spec, 0).with_method(Method::Analytic);
        return (
            LawReport::holds(mc_law, bound),
            LawReport::holds(entire_law, bound),
        );
    }
    let mc = Search::new(instance, spec, "mc")
        .exhaustive_up_to(64)
        .report(mc_law, 3, |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            (!s.is_zero(a) && !s.equals(b, c) && s.equals(&s.mul(a, b), &s.mul(a, c)))
                .then(|| "a*b = a*c with a != 0 and b != c".to_string())
        });
    let entire = Search::new(instance, spec, "entire")
        .exhaustive_up_to(256)
        .report(entire_law, 2, |t| {
            let (a, b) = (&t[0], &t[1]);
            (!s.is_zero(a) && !s.is_zero(b) && s.is_zero(&s.mul(a, b)))
                .then(|| "a*b = 0 with a, b != 0".to_string())
        });
    (mc, entire)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sr(s: &str) -> Arc<Semiring> {
        Arc::new(s.parse().unwrap())
    }

    #[test]
    fn registry_instances_are_semirings() {
        let spec = SampleSpec::new(1, 1000, 50);
        for d in [
            "nat",
            "qnn",
            "bool-poly",
            "fuzzy",
            "tropical-nat",
            "tropical-int",
            "ideals-z",
            "poly(nat)",
            "laurent(nat)",
            "monoid(qnn, Q)",
            "fractions(nat)",
            "fractions(poly(nat))",
            "fractions(ideals-z)",
            "sv(qnn, vp:5)",
        ] {
            let r = check_semiring_axioms(&sr(d), &spec);
            assert!(r.is_holds(), "{r}");
        }
    }

    #[test]
    fn fuzzy_is_entire_but_not_mc() {
        let spec = SampleSpec::new(1, 1000, 50);
        let (mc, entire) = probe_mc_entire(&sr("fuzzy"), &spec);
        let w = mc.witness().expect("fuzzy is not MC");
        let f = sr("fuzzy");
        let [a, b, c] = [&w.elements[0], &w.elements[1], &w.elements[2]].map(|e| e.value().clone());
        assert!(!f.is_zero(&a) && b != c);
        assert_eq!(f.mul(&a, &b), f.mul(&a, &c));
        assert!(entire.is_holds());
    }

    #[test]
    fn qnn_is_analytic_and_tropical_nat_exhaustive() {
        let spec = SampleSpec::new(1, 1000, 50);
        let (mc, entire) = probe_mc_entire(&sr("qnn"), &spec);
        assert!(mc.is_holds() && entire.is_holds());
        assert_eq!(mc.bound.method, Method::Analytic);
        let (mc, entire) = probe_mc_entire(&sr("tropical-nat"), &spec);
        assert!(mc.is_holds() && entire.is_holds());
        assert_eq!(mc.bound.method, Method::Exhaustive);
    }

    #[test]
    fn bool_poly_is_not_mc() {
        let spec = SampleSpec::new(1, 2000, 50);
        let (mc, _) = probe_mc_entire(&sr("bool-poly"), &spec);
        assert!(!mc.is_holds());
    }
}
