//! Fixed workloads shared by the benchmarks.

use std::sync::Arc;

use valsemi::{ContentPolynomial, Element, FinGenIdeal, SampleSpec, Semiring};

pub fn semiring(descriptor: &str) -> Arc<Semiring> {
    Arc::new(descriptor.parse().expect("registered descriptor"))
}

pub fn ideal(s: &Arc<Semiring>, gens: &[&str]) -> FinGenIdeal {
    let gens = gens
        .iter()
        .map(|g| Element::parse(g, s).expect("valid element"))
        .collect();
    FinGenIdeal::new(s.clone(), gens).expect("valid ideal")
}

pub fn elements(s: &Arc<Semiring>, spec: &SampleSpec, n: usize) -> Vec<Element> {
    let mut rng = spec.rng("bench");
    (0..n)
        .map(|_| Element::new(s.clone(), s.sample(&mut rng, spec.sampler())).expect("sampled"))
        .collect()
}

pub fn polynomial(s: &Arc<Semiring>, input: &str) -> ContentPolynomial {
    ContentPolynomial::parse(input, s).expect("valid polynomial")
}
