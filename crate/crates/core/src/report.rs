//! Bounded-check reports and deterministic sample streams.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::content::ContentPolynomial;
use crate::instances::{Element, Sampler};

/// Seed, stream length and per-element size bound of a sampled check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: u64,
    pub size_bound: u64,
}

fn fnv1a(tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

impl SampleSpec {
    pub fn new(seed: u64, count: u64, size_bound: u64) -> SampleSpec {
        SampleSpec {
            seed,
            count,
            size_bound,
        }
    }

    /// Independent stream per `tag`; the same spec and tag always replay the same stream.
    pub fn rng(&self, tag: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(tag))
    }

    pub fn sampler(&self) -> Sampler {
        Sampler::new(self.size_bound)
    }

    pub fn with_count(self, count: u64) -> SampleSpec {
        SampleSpec { count, ..self }
    }
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec::new(1, 1000, 50)
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Sampled,
    Exhaustive,
    /// Known by construction (e.g. subsemirings of a semifield are MC).
    Analytic,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sampled => "sampled",
            Method::Exhaustive => "exhaustive",
            Method::Analytic => "analytic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub seed: u64,
    pub samples: u64,
    pub size_bound: u64,
    /// Number of cases actually examined.
    pub checked: u64,
    pub method: Method,
}

impl Bound {
    pub fn sampled(spec: &SampleSpec, checked: u64) -> Bound {
        Bound {
            seed: spec.seed,
            samples: spec.count,
            size_bound: spec.size_bound,
            checked,
            method: Method::Sampled,
        }
    }

    pub fn with_method(self, method: Method) -> Bound {
        Bound { method, ..self }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (seed={}, samples={}, size_bound={}, checked={})",
            self.method, self.seed, self.samples, self.size_bound, self.checked
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub elements: Vec<Element>,
    pub polynomials: Vec<ContentPolynomial>,
    pub detail: String,
}

impl Witness {
    pub fn elements(elements: Vec<Element>, detail: impl Into<String>) -> Witness {
        Witness {
            elements,
            polynomials: Vec::new(),
            detail: detail.into(),
        }
    }

    pub fn polynomials(polynomials: Vec<ContentPolynomial>, detail: impl Into<String>) -> Witness {
        Witness {
            elements: Vec::new(),
            polynomials,
            detail: detail.into(),
        }
    }

    /// Grammar strings of every witness value, elements first.
    pub fn rendered(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(ToString::to_string)
            .chain(self.polynomials.iter().map(ToString::to_string))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Holds,
    Counterexample(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Counterexample(w) => Some(w),
        }
    }
}

/// Outcome of a bounded law check. `Holds` always means "holds up to `bound`".
#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: String,
    pub verdict: Verdict,
    pub bound: Bound,
}

impl LawReport {
    pub fn holds(law: impl Into<String>, bound: Bound) -> LawReport {
        LawReport {
            law: law.into(),
            verdict: Verdict::Holds,
            bound,
        }
    }

    pub fn counterexample(law: impl Into<String>, witness: Witness, bound: Bound) -> LawReport {
        LawReport {
            law: law.into(),
            verdict: Verdict::Counterexample(witness),
            bound,
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.verdict.witness()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Holds => write!(f, "{}: holds up to {}", self.law, self.bound),
            Verdict::Counterexample(w) => write!(
                f,
                "{}: counterexample [{}] {} after {}",
                self.law,
                w.rendered().join(", "),
                w.detail,
                self.bound
            ),
        }
    }
}
