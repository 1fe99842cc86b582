//! Exact valuation theory for commutative semirings.
//!
//! The crate provides a catalogue of concrete semirings ([`Semiring`]), valuation
//! maps into totally ordered monoids with `+inf` adjoined ([`Valuation`],
//! [`ExtendedValue`]), fraction semifields, finitely generated ideals with
//! per-instance membership oracles, discrete valuation semiring structure and
//! polynomial content. Every law is checked by a bounded, seeded search that
//! reports the bound it ran at ([`LawReport`]).
//!
//! ```
//! use std::sync::Arc;
//! use valsemi::{valuate, Element, Semiring, Valuation};
//!
//! let nat = Arc::new(Semiring::Nat);
//! let v = Valuation::parse(&nat, "vp:5").unwrap();
//! let x = Element::parse("50", &nat).unwrap();
//! assert_eq!(valuate(&v, &x).unwrap().to_string(), "2");
//! ```

pub mod content;
pub mod error;
pub mod fractions;
pub mod ideals;
pub mod instances;
pub mod laws;
pub mod parse;
pub mod report;
pub mod suite;
pub mod tomonoid;
pub mod valuation;

pub use content::{
    content, dedekind_mertens_check, dedekind_mertens_sampled, gaussian_check, gaussian_defect,
    ContentPolynomial,
};
pub use error::{Error, Result};
pub use fractions::{extend_valuation, frac_arith, DifferencePair, FracOp};
pub use ideals::{
    fuzzy_ideal_classify, ideal_member, ideal_product, ideal_subset, ideal_sum, ideals_comparable,
    ideals_totally_ordered, is_prime_bounded, is_subtractive_bounded, DvsStructure, FinGenIdeal,
    Ideal, IntervalIdeal, LevelIdeal,
};
pub use instances::{
    is_unit, sr_add, sr_eq, sr_mul, Capabilities, Element, ExponentMonoid, Sampler, Semiring, Value,
};
pub use laws::{check_semiring_axioms, probe_mc_entire};
pub use parse::{parse_element, parse_ideal, ParseError};
pub use report::{Bound, LawReport, Method, SampleSpec, Verdict, Witness};
pub use tomonoid::{ext_add, ext_compare, Ext, ExtendedValue, Tomonoid};
pub use valuation::{
    check_min_property, check_valuation_axioms, level_membership, units_vs_zeroset, valuate,
    MinPropertyReport, Rule, Valuation,
};
