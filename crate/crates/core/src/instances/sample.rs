//! Deterministic bounded element generators.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;

use super::{monoid::Terms, BitPoly, ExponentMonoid, Semiring, Value};
use crate::valuation;

/// Magnitude and degree bounds for generated elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampler {
    pub size_bound: u64,
    pub max_degree: u32,
}

impl Sampler {
    pub fn new(size_bound: u64) -> Sampler {
        Sampler {
            size_bound: size_bound.max(1),
            max_degree: size_bound.min(4) as u32,
        }
    }

    pub fn with_max_degree(self, max_degree: u32) -> Sampler {
        Sampler { max_degree, ..self }
    }

    fn inside_fraction(self) -> Sampler {
        self.with_max_degree(self.max_degree.min(2))
    }
}

fn nat<R: Rng + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    match rng.gen_range(0..16) {
        0 => 0,
        1 => 1,
        _ => rng.gen_range(0..=bound),
    }
}

impl Semiring {
    /// Draws one element; identical RNG state yields an identical value.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, s: Sampler) -> Value {
        let b = s.size_bound;
        match self {
            Semiring::Nat | Semiring::IdealsZ => Value::Nat(BigUint::from(nat(rng, b))),
            Semiring::Qnn => {
                let n = nat(rng, b);
                let d = rng.gen_range(1..=b);
                Value::Rat(BigRational::new(n.into(), d.into()))
            }
            Semiring::Fuzzy => {
                let d = rng.gen_range(1..=b.min(12));
                let n = rng.gen_range(0..=d);
                Value::Rat(BigRational::new(n.into(), d.into()))
            }
            Semiring::BoolPoly => {
                if rng.gen_range(0..16) == 0 {
                    return self.zero();
                }
                let deg = rng.gen_range(0..=s.max_degree);
                let mut out = BitPoly::new();
                for e in 0..=deg {
                    if e == deg || rng.gen_bool(0.5) {
                        out.insert(e);
                    }
                }
                Value::Bits(out)
            }
            Semiring::TropicalNat => {
                if rng.gen_range(0..10) == 0 {
                    Value::Trop(None)
                } else {
                    Value::Trop(Some(BigInt::from(nat(rng, b))))
                }
            }
            Semiring::TropicalInt => {
                if rng.gen_range(0..10) == 0 {
                    Value::Trop(None)
                } else {
                    let b = b as i64;
                    Value::Trop(Some(BigInt::from(rng.gen_range(-b..=b))))
                }
            }
            Semiring::Poly(base) | Semiring::Laurent(base) | Semiring::Monoid(base, _) => {
                let (_, exps) = self.as_monoid().expect("monoid semiring");
                if rng.gen_range(0..16) == 0 {
                    return self.zero();
                }
                let d = s.max_degree as i64;
                let mut terms = Terms::new();
                let count = rng.gen_range(1..=(s.max_degree + 1));
                for _ in 0..count {
                    let e = match exps {
                        ExponentMonoid::N0 => {
                            BigRational::from_integer(rng.gen_range(0..=d).into())
                        }
                        ExponentMonoid::Z => {
                            BigRational::from_integer(rng.gen_range(-d..=d).into())
                        }
                        ExponentMonoid::Q => {
                            let den = rng.gen_range(1..=3i64);
                            BigRational::new(rng.gen_range(-d * den..=d * den).into(), den.into())
                        }
                    };
                    let c = base.sample(rng, s);
                    if !base.is_zero(&c) {
                        terms.insert(e, c);
                    }
                }
                if terms.is_empty() {
                    return self.one();
                }
                Value::Poly(terms)
            }
            Semiring::Fractions(base) => {
                let inner = s.inside_fraction();
                let num = base.sample(rng, inner);
                let den = loop {
                    let d = base.sample(rng, inner);
                    if !base.is_zero(&d) {
                        break d;
                    }
                };
                self.canonical(&Value::Frac(Box::new(num), Box::new(den)))
            }
            Semiring::Sv(k, rule) => {
                for _ in 0..64 {
                    let x = k.sample(rng, s);
                    if valuation::evaluate(k, rule, &x).is_nonnegative() {
                        return x;
                    }
                    if let Some(inv) = k.inverse(&x) {
                        return inv;
                    }
                }
                k.one()
            }
        }
    }
}
