//! The acceptance matrix: twelve criteria, each a batch of law checks at fixed
//! seeds and sample counts.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::content::{content, dedekind_mertens_sampled, gaussian_check, gaussian_defect};
use crate::error::Result;
use crate::fractions::{embed, extend_valuation};
use crate::ideals::{
    dvs_ideal_of, escape_index, euclidean_divide, ideal_product, ideal_subset, ideals_comparable,
    integral_check, intersection_probe, is_subtractive_bounded, normal_form_round_trips,
    sample_nonzero, DvsStructure, FinGenIdeal, Ideal, IntervalIdeal, LevelIdeal,
};
use crate::instances::{Element, Semiring, Value};
use crate::laws::probe_mc_entire;
use crate::report::SampleSpec;
use crate::tomonoid::{fmt_rational, Ext};
use crate::valuation::{
    check_min_property, check_valuation_axioms, units_vs_zeroset, valuate, MinPropertyReport,
    Valuation,
};

pub const SEED: u64 = 1;
pub const SAMPLES: u64 = 10_000;
pub const SIZE_BOUND: u64 = 50;

/// Every registered rule, each on a source it applies to.
pub const RULES: &[(&str, &str)] = &[
    ("nat", "trivial"),
    ("qnn", "trivial"),
    ("nat", "vp:5"),
    ("qnn", "vp:5"),
    ("bool-poly", "low-order"),
    ("bool-poly", "deg-high"),
    ("poly(nat)", "low-order"),
    ("laurent(nat)", "low-order"),
    ("laurent(nat)", "deg-high"),
    ("monoid(nat, Q)", "low-order"),
    ("tropical-int", "tropical-id"),
    ("tropical-nat", "tropical-id"),
    ("fractions(poly(nat))", "deg-frac"),
    ("ideals-z", "vm-idz:5"),
    ("fractions(ideals-z)", "vm-idz:5"),
    ("fractions(nat)", "ext(vp:5)"),
    ("fractions(poly(nat))", "ext(low-order)"),
    ("qnn", "value-group(vp:5)"),
    ("fractions(poly(nat))", "value-group(deg-frac)"),
];

/// The four discrete valuation semirings of the DVS criteria.
pub const DVS_INSTANCES: &[&str] = &[
    "sv(qnn, vp:5)",
    "tropical-nat",
    "sv(fractions(poly(nat)), deg-frac)",
    "sv(fractions(ideals-z), vm-idz:5)",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CriterionOutcome {
    fn new(id: u8, title: &'static str) -> CriterionOutcome {
        CriterionOutcome {
            id,
            title,
            passed: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        self.passed &= ok;
        self.details
            .push(format!("{} {detail}", if ok { "ok  " } else { "FAIL" }));
    }

    fn run(&mut self, step: impl FnOnce(&mut CriterionOutcome) -> Result<()>) {
        if let Err(e) = step(self) {
            self.check(false, format!("error: {e}"));
        }
    }

    /// One summary line.
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title
        )
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.line())?;
        for d in &self.details {
            writeln!(f, "    {d}")?;
        }
        Ok(())
    }
}

pub fn spec() -> SampleSpec {
    SampleSpec::new(SEED, SAMPLES, SIZE_BOUND)
}

fn sr(s: &str) -> Result<Arc<Semiring>> {
    Ok(Arc::new(s.parse()?))
}

fn val(source: &str, rule: &str) -> Result<Valuation> {
    Valuation::parse(&sr(source)?, rule)
}

fn dvs(descriptor: &str) -> Result<DvsStructure> {
    DvsStructure::from_descriptor(&descriptor.parse()?)
}

pub const TITLES: [&str; 12] = [
    "valuation axioms for every rule",
    "min-property dichotomy",
    "subtractive P_v iff min-property",
    "units of S_v versus v = 0",
    "extension to the fraction semifield",
    "discrete valuation semiring characterization",
    "incomparable ideals in B[X]",
    "fuzzy semiring",
    "Gaussian iff subtractive",
    "Dedekind-Mertens identity",
    "integral closure probe",
    "principal ideals as level ideals",
];

/// Runs one criterion by number (1 to 12).
pub fn run(id: u8) -> Option<CriterionOutcome> {
    let f: fn(&mut CriterionOutcome) -> Result<()> = match id {
        1 => c1,
        2 => c2,
        3 => c3,
        4 => c4,
        5 => c5,
        6 => c6,
        7 => c7,
        8 => c8,
        9 => c9,
        10 => c10,
        11 => c11,
        12 => c12,
        _ => return None,
    };
    let mut out = CriterionOutcome::new(id, TITLES[id as usize - 1]);
    out.run(f);
    Some(out)
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=12).filter_map(run).collect()
}

fn c1(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    for (source, rule) in RULES {
        let r = check_valuation_axioms(&val(source, rule)?, &spec);
        out.check(r.is_holds(), r.to_string());
    }
    Ok(())
}

fn c2(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    for (source, rule) in [
        ("qnn", "vp:5"),
        ("monoid(nat, N0)", "low-order"),
        ("fractions(ideals-z)", "vm-idz:5"),
        ("tropical-int", "tropical-id"),
    ] {
        let v = val(source, rule)?;
        let r = check_min_property(&v, &spec);
        out.check(r.holds(), r.to_law_report(&v).to_string());
    }
    let v = val("fractions(poly(nat))", "deg-frac")?;
    let r = check_min_property(&v, &spec);
    let witness_ok = match &r {
        MinPropertyReport::Counterexample { x, y, .. } => {
            x.to_string() == "1" && y.to_string() == "X"
        }
        MinPropertyReport::Holds(_) => false,
    };
    out.check(witness_ok, r.to_law_report(&v).to_string());
    out.check(r.reverify(&v), "recorded witness re-verifies");
    Ok(())
}

/// Semifield sources with surjective rules, and the expected shared verdict.
pub const SUBTRACTIVE_CASES: &[(&str, &str, bool)] = &[
    ("qnn", "vp:5", true),
    ("tropical-int", "tropical-id", true),
    ("fractions(ideals-z)", "vm-idz:5", true),
    ("fractions(poly(nat))", "ext(low-order)", true),
    ("fractions(poly(nat))", "deg-frac", false),
];

fn c3(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    for &(source, rule, expected) in SUBTRACTIVE_CASES {
        let v = val(source, rule)?;
        let sub = is_subtractive_bounded(&Ideal::Level(LevelIdeal::pv(&v)), &spec)?;
        let min = check_min_property(&v, &spec);
        out.check(
            sub.is_holds() == min.holds() && min.holds() == expected,
            format!(
                "{v}: subtractive P_v {}, min-property {}",
                verdict(sub.is_holds()),
                verdict(min.holds())
            ),
        );
        if let Some(w) = sub.witness() {
            out.details.push(format!(
                "     P_v witness (a, b) = [{}]",
                w.rendered().join(", ")
            ));
        }
    }
    Ok(())
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "counterexample"
    }
}

fn c4(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    for (source, rule) in [("qnn", "vp:5"), ("tropical-int", "tropical-id")] {
        let r = units_vs_zeroset(&val(source, rule)?, &spec)?;
        out.check(r.is_holds(), r.to_string());
    }
    let r = units_vs_zeroset(&val("poly(nat)", "low-order")?, &spec)?;
    let w = r.witness().map(|w| w.rendered());
    out.check(w == Some(vec!["1 + X".to_string()]), r.to_string());
    Ok(())
}

fn c5(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    let v = val("nat", "vp:5")?;
    let w = extend_valuation(&v)?;
    let r = check_valuation_axioms(&w, &spec);
    out.check(r.is_holds(), r.to_string());
    let mut rng = spec.rng("extension-agreement");
    let mut agree = 0;
    for _ in 0..1000 {
        let z = Element::new(
            v.source_arc().clone(),
            v.source().sample(&mut rng, spec.sampler()),
        )?;
        let e = embed(w.source_arc(), &z)?;
        if valuate(&v, &z)?.embed_gp() == valuate(&w, &e)? {
            agree += 1;
        }
    }
    out.check(
        agree == 1000,
        format!("{agree}/1000 embedded elements z/1 agree with {v}"),
    );
    Ok(())
}

fn c6(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    for name in DVS_INSTANCES {
        let d = dvs(name)?;
        let carrier = d.carrier().clone();
        let small = spec.with_count(1000);

        // (a) comparability, and (b) principal form of the same ideals.
        let mut rng = small.rng(&format!("dvs-ideals|{name}"));
        let (mut comparable, mut principal) = (0u64, 0u64);
        let mut failures = Vec::new();
        for _ in 0..small.count {
            let i = FinGenIdeal::sample(&carrier, &mut rng, small.sampler(), 3);
            let j = FinGenIdeal::sample(&carrier, &mut rng, small.sampler(), 3);
            let r = ideals_comparable(&Ideal::FinGen(i.clone()), &Ideal::FinGen(j), &small)?;
            comparable += r.is_holds() as u64;
            if !r.is_holds() && failures.len() < 3 {
                failures.push(r.to_string());
            }
            if i.is_zero_ideal() {
                principal += 1;
                continue;
            }
            match dvs_ideal_of(&d, &i) {
                Ok(n) => {
                    principal += FinGenIdeal::from_values(carrier.clone(), vec![d.t_pow(n)])?
                        .contains_all(i.generators())?
                        .is_none() as u64
                }
                Err(e) => failures.push(e.to_string()),
            }
        }
        out.check(
            comparable == small.count,
            format!(
                "{name}: {comparable}/{} sampled ideal pairs comparable",
                small.count
            ),
        );
        out.check(
            principal == small.count,
            format!(
                "{name}: {principal}/{} ideals equal (t^n) by mutual membership",
                small.count
            ),
        );
        out.details
            .extend(failures.into_iter().map(|f| format!("     {f}")));

        // (c) normal form.
        let xs = sample_nonzero(&d, &spec, &format!("dvs-normal|{name}"), spec.count);
        let mut round = 0;
        for x in &xs {
            round += normal_form_round_trips(&d, x)? as u64;
        }
        out.check(
            round == spec.count,
            format!("{name}: {round}/{} normal forms round-trip", spec.count),
        );

        // (d) Euclidean division.
        let bs = sample_nonzero(&d, &spec, &format!("dvs-divisor|{name}"), spec.count);
        let mut rng = spec.rng(&format!("dvs-dividend|{name}"));
        let k = d.field();
        let mut good = 0;
        for b in &bs {
            let a = Element::new(carrier.clone(), carrier.sample(&mut rng, spec.sampler()))?;
            let (q, r) = euclidean_divide(&d, &a, b)?;
            let exact = k.equals(&k.add(&k.mul(q.value(), b.value()), r.value()), a.value());
            let smaller = r.is_zero() || d.order(r.value())? < d.order(b.value())?;
            good += (exact && smaller) as u64;
        }
        out.check(
            good == spec.count,
            format!("{name}: {good}/{} divisions satisfy a = qb + r", spec.count),
        );

        // (e) escape from (t^n).
        let mut escaped = 0;
        for x in xs.iter().take(1000) {
            let n = d.order(x.value())?;
            let bound = (n + 1) as u64;
            let r = intersection_probe(&d, x, bound)?;
            escaped += (r.is_holds() && escape_index(&r) == Some(bound)) as u64;
        }
        out.check(
            escaped == 1000,
            format!("{name}: {escaped}/1000 elements escape (t^(v(x)+1))"),
        );
    }
    Ok(())
}

fn c7(out: &mut CriterionOutcome) -> Result<()> {
    let b = sr("bool-poly")?;
    let x = FinGenIdeal::new(b.clone(), vec![Element::parse("X", &b)?])?;
    let x1 = FinGenIdeal::new(b.clone(), vec![Element::parse("X + 1", &b)?])?;
    let r = ideals_comparable(&Ideal::FinGen(x), &Ideal::FinGen(x1), &spec())?;
    let w = r.witness().map(|w| w.rendered());
    out.check(w == Some(vec!["X".into(), "1 + X".into()]), r.to_string());
    Ok(())
}

fn c8(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    let f = sr("fuzzy")?;
    let (mc, entire) = probe_mc_entire(&f, &spec);
    out.check(!mc.is_holds(), mc.to_string());
    out.check(entire.is_holds(), entire.to_string());
    let mut rng = spec.rng("fuzzy-intervals");
    let mut comparable = 0;
    for _ in 0..1000 {
        let i = IntervalIdeal::sample(&mut rng, spec.sampler());
        let j = IntervalIdeal::sample(&mut rng, spec.sampler());
        comparable +=
            ideals_comparable(&Ideal::Interval(i), &Ideal::Interval(j), &spec)?.is_holds() as u64;
    }
    out.check(
        comparable == 1000,
        format!("{comparable}/1000 interval ideal pairs comparable"),
    );
    Ok(())
}

fn c9(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec().with_count(1000);
    for name in ["sv(qnn, vp:5)", "ideals-z"] {
        let r = gaussian_check(&sr(name)?, &spec)?;
        out.check(r.is_holds(), r.to_string());
    }
    let s = sr("sv(fractions(poly(nat)), deg-frac)")?;
    let r = gaussian_check(&s, &spec)?;
    out.check(!r.is_holds(), r.to_string());
    if let Some(w) = r.witness() {
        let (f, g) = (&w.polynomials[0], &w.polynomials[1]);
        out.check(
            gaussian_defect(f, g)?.is_some(),
            "witness re-verifies by recomputing c(f), c(g), c(fg)",
        );
        // c(f)c(g) is generated by a product of minimal-value coefficients; c(fg) is not.
        let v = val("fractions(poly(nat))", "deg-frac")?;
        let min_v = |p: &crate::content::ContentPolynomial| {
            p.coeffs()
                .iter()
                .map(|c| v.eval(c).value)
                .min()
                .unwrap_or(Ext::Inf)
        };
        let fg = f.mul(g)?;
        let lhs = min_v(&fg);
        let rhs = match (min_v(f), min_v(g)) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
            _ => Ext::Inf,
        };
        out.check(
            lhs != rhs,
            format!(
                "min v over c(fg) = {}, min v(c(f)) + min v(c(g)) = {}",
                show(&lhs),
                show(&rhs)
            ),
        );
        let prod = ideal_product(&content(f), &content(g))?;
        out.check(
            prod.contains_all(fg.coeffs())?.is_none(),
            "every coefficient of fg lies in c(f)c(g)",
        );
    }
    Ok(())
}

fn show(e: &Ext) -> String {
    match e {
        Ext::Fin(q) => fmt_rational(q),
        Ext::Inf => "inf".into(),
    }
}

fn c10(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec().with_count(1000);
    for name in ["nat", "ideals-z"] {
        let r = dedekind_mertens_sampled(&sr(name)?, &spec)?;
        out.check(r.is_holds(), r.to_string());
    }
    Ok(())
}

/// Coefficient pool of the integral-closure probe.
pub const INTEGRAL_POOL: &[&str] = &["0", "1", "2", "5", "1/2", "2/3"];

fn c11(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    let d = dvs("sv(qnn, vp:5)")?;
    let k = d.field().clone();
    let pool = INTEGRAL_POOL
        .iter()
        .map(|x| Element::parse(x, d.carrier()))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = spec.rng("integral");
    let (mut outside, mut inside) = (Vec::new(), Vec::new());
    while outside.len() < 100 || inside.len() < 100 {
        let u = k.sample(&mut rng, spec.sampler());
        if k.is_zero(&u) {
            continue;
        }
        let in_s = d.valuation().eval(&u).value >= Ext::Fin(BigRational::zero());
        let bucket = if in_s { &mut inside } else { &mut outside };
        if bucket.len() < 100 {
            bucket.push(Element::new(k.clone(), u)?);
        }
    }
    let mut none = 0;
    for u in &outside {
        none += integral_check(&d, u, 3, &pool)?.is_holds() as u64;
    }
    out.check(
        none == 100,
        format!("{none}/100 sampled u outside S_v have no integral equation (degree <= 3)"),
    );
    let mut trivial = 0;
    for u in &inside {
        let r = integral_check(&d, u, 3, &pool)?;
        trivial += r
            .witness()
            .is_some_and(|w| w.detail.starts_with("degree 1")) as u64;
    }
    out.check(
        trivial == 100,
        format!("{trivial}/100 sampled u in S_v have the degree-one witness"),
    );
    Ok(())
}

fn c12(out: &mut CriterionOutcome) -> Result<()> {
    let spec = spec();
    let d = dvs("sv(qnn, vp:5)")?;
    let v = d.valuation().clone();
    let inner = spec.with_count(50);
    let mut equal = 0;
    for (i, x) in sample_nonzero(&d, &spec, "cyclic", 1000).iter().enumerate() {
        let n = d.order(x.value())?;
        let j = LevelIdeal::j(&v, BigRational::from_integer(n.into()))?;
        let px = FinGenIdeal::principal(x);
        // Generators both ways, then a sampled search for members of J_v(x) outside (x).
        let tn = d.t_pow(n);
        let mutual = j.contains(x.value()) && px.contains(&tn)? && j.contains(&tn);
        let inner = SampleSpec::new(SEED + i as u64, inner.count, inner.size_bound);
        let sub = ideal_subset(&Ideal::Level(j), &Ideal::FinGen(px), &inner)?;
        equal += (mutual && sub.is_holds()) as u64;
    }
    out.check(
        equal == 1000,
        format!("{equal}/1000 sampled x satisfy (x) = J_v(x)"),
    );

    let nat = sr("nat")?;
    let vp = Valuation::parse(&nat, "vp:5")?;
    let two = Element::parse("2", &nat)?;
    let n2 = valuate(&vp, &two)?
        .finite()
        .and_then(|q| q.to_integer().to_i64())
        .unwrap_or(-1);
    let j = LevelIdeal::j(&vp, BigRational::from_integer(n2.into()))?;
    let three = Value::Nat(3u32.into());
    let p2 = FinGenIdeal::principal(&two);
    out.check(
        n2 == 0 && j.contains(two.value()) && j.contains(&three) && !p2.contains(&three)?,
        "nat, vp:5: 2 and 3 lie in J_v(2) = J_0 but 3 is not in (2)",
    );
    Ok(())
}
