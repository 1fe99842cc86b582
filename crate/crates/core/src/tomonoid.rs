//! Totally ordered commutative monoids with a greatest element adjoined.
//!
//! Every registered tomonoid embeds in the rationals, so finite values are
//! stored as exact [`BigRational`]s tagged with the domain they live in.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// The closed registry of value domains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tomonoid {
    /// The trivial monoid `{0}`.
    Trivial,
    /// Nonnegative integers.
    N0,
    /// Integers.
    Z,
    /// Rationals.
    Q,
    /// Group of differences of a cancellative tomonoid.
    Gp(Box<Tomonoid>),
}

impl Tomonoid {
    pub fn gp(self) -> Tomonoid {
        Tomonoid::Gp(Box::new(self))
    }

    /// Whether `q` is an element of this domain.
    pub fn contains(&self, q: &BigRational) -> bool {
        match self {
            Tomonoid::Trivial => q.is_zero(),
            Tomonoid::N0 => q.is_integer() && !q.is_negative(),
            Tomonoid::Z => q.is_integer(),
            Tomonoid::Q => true,
            Tomonoid::Gp(inner) => match inner.as_ref() {
                Tomonoid::Trivial => q.is_zero(),
                Tomonoid::N0 | Tomonoid::Z => q.is_integer(),
                Tomonoid::Q => true,
                Tomonoid::Gp(_) => inner.contains(q),
            },
        }
    }

    /// Abelian group domains (every element has a negative).
    pub fn is_group(&self) -> bool {
        !matches!(self, Tomonoid::N0)
    }

    pub fn is_cancellative(&self) -> bool {
        true
    }
}

impl fmt::Display for Tomonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tomonoid::Trivial => write!(f, "trivial"),
            Tomonoid::N0 => write!(f, "N0"),
            Tomonoid::Z => write!(f, "Z"),
            Tomonoid::Q => write!(f, "Q"),
            Tomonoid::Gp(inner) => write!(f, "gp({inner})"),
        }
    }
}

/// Finite value or `+inf`. The derived order puts every `Fin` below `Inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ext {
    Fin(BigRational),
    Inf,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedValue {
    pub domain: Tomonoid,
    pub value: Ext,
}

impl ExtendedValue {
    pub fn fin(domain: Tomonoid, value: BigRational) -> Result<Self> {
        if !domain.contains(&value) {
            return Err(Error::InvalidArgument(format!(
                "{} is not an element of {domain}",
                fmt_rational(&value)
            )));
        }
        Ok(ExtendedValue {
            domain,
            value: Ext::Fin(value),
        })
    }

    pub fn fin_int(domain: Tomonoid, value: i64) -> Result<Self> {
        Self::fin(domain, BigRational::from_integer(value.into()))
    }

    pub fn inf(domain: Tomonoid) -> Self {
        ExtendedValue {
            domain,
            value: Ext::Inf,
        }
    }

    pub fn zero(domain: Tomonoid) -> Self {
        ExtendedValue {
            domain,
            value: Ext::Fin(BigRational::zero()),
        }
    }

    pub fn is_inf(&self) -> bool {
        self.value == Ext::Inf
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match &self.value {
            Ext::Fin(q) => Some(q),
            Ext::Inf => None,
        }
    }

    /// Image under the canonical embedding `M -> gp(M)`.
    pub fn embed_gp(&self) -> ExtendedValue {
        ExtendedValue {
            domain: self.domain.clone().gp(),
            value: self.value.clone(),
        }
    }

    /// Additive inverse of a finite value in a group domain.
    pub fn neg(&self) -> Result<ExtendedValue> {
        match &self.value {
            Ext::Inf => Err(Error::InvalidArgument("+inf has no negative".into())),
            Ext::Fin(q) => {
                if !self.domain.is_group() && !q.is_zero() {
                    return Err(Error::InvalidArgument(format!(
                        "{} has no negative in {}",
                        fmt_rational(q),
                        self.domain
                    )));
                }
                Ok(ExtendedValue {
                    domain: self.domain.clone(),
                    value: Ext::Fin(-q),
                })
            }
        }
    }

    pub fn min(a: &ExtendedValue, b: &ExtendedValue) -> Result<ExtendedValue> {
        Ok(match ext_compare(a, b)? {
            Ordering::Greater => b.clone(),
            _ => a.clone(),
        })
    }
}

impl Ext {
    pub(crate) fn is_nonnegative(&self) -> bool {
        match self {
            Ext::Inf => true,
            Ext::Fin(q) => !q.is_negative(),
        }
    }

    pub(crate) fn cmp_fin(&self, q: &BigRational) -> Ordering {
        match self {
            Ext::Inf => Ordering::Greater,
            Ext::Fin(x) => x.cmp(q),
        }
    }
}

fn same_domain(a: &ExtendedValue, b: &ExtendedValue) -> Result<()> {
    if a.domain != b.domain {
        return Err(Error::DomainMismatch {
            left: a.domain.to_string(),
            right: b.domain.to_string(),
        });
    }
    Ok(())
}

/// Monoid addition on `M ∪ {+inf}`; `+inf` absorbs.
pub fn ext_add(a: &ExtendedValue, b: &ExtendedValue) -> Result<ExtendedValue> {
    same_domain(a, b)?;
    let value = match (&a.value, &b.value) {
        (Ext::Fin(x), Ext::Fin(y)) => Ext::Fin(x + y),
        _ => Ext::Inf,
    };
    Ok(ExtendedValue {
        domain: a.domain.clone(),
        value,
    })
}

pub fn ext_compare(a: &ExtendedValue, b: &ExtendedValue) -> Result<Ordering> {
    same_domain(a, b)?;
    Ok(a.value.cmp(&b.value))
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Ext::Inf => write!(f, "inf"),
            Ext::Fin(q) => write!(f, "{}", fmt_rational(q)),
        }
    }
}
