//! `valsemi`: batch front end for valuations, ideals and law checks.
//!
//! Exit codes: 0 success or law holds, 1 counterexample found, 2 usage or parse error.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use valsemi::ideals::{dvs_normal_form, euclidean_divide};
use valsemi::{
    check_min_property, check_semiring_axioms, check_valuation_axioms, dedekind_mertens_sampled,
    extend_valuation, gaussian_check, ideal_product, ideal_sum, ideals_comparable,
    ideals_totally_ordered, is_prime_bounded, is_subtractive_bounded, parse_ideal, probe_mc_entire,
    suite, units_vs_zeroset, valuate, DvsStructure, Element, Error, Ideal, LawReport, LevelIdeal,
    SampleSpec, Semiring, Valuation,
};

#[derive(Parser)]
#[command(
    name = "valsemi",
    version,
    about = "Exact valuation theory for commutative semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print v(x).
    Valuate {
        #[command(flatten)]
        instance: Instance,
        element: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Print the normal form x = u·t^n of a discrete valuation semiring as (u, n).
    Factor {
        #[command(flatten)]
        instance: Instance,
        element: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Print (q, r) with a = qb + r and r = 0 or v(r) < v(b).
    Divmod {
        #[command(flatten)]
        instance: Instance,
        a: String,
        b: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Ideal arithmetic and checks. Ideals are `ideal[a, b, ...]`, `fuzzy[0,a]`,
    /// `fuzzy[0,a)`, or with --valuation `P_v` and `J_<alpha>`.
    Ideal {
        #[command(flatten)]
        instance: Instance,
        op: IdealOp,
        first: String,
        /// Second ideal, or the element for `contains`.
        second: Option<String>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run one bounded law check.
    Check {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum)]
        property: Property,
        /// Ideal for `subtractive` and `prime` (defaults to P_v).
        #[arg(long)]
        ideal: Option<String>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run the acceptance matrix (all twelve criteria, or one).
    Suite {
        #[arg(long)]
        criterion: Option<u8>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Args)]
struct Instance {
    /// Semiring descriptor, e.g. `nat`, `fractions(poly(nat))`, `sv(qnn, vp:5)`.
    #[arg(long)]
    semiring: String,
    /// Valuation rule, e.g. `vp:5`, `low-order`, `deg-frac`, `ext(vp:5)`.
    #[arg(long)]
    valuation: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    size_bound: u64,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

impl ReportArgs {
    fn spec(&self) -> SampleSpec {
        SampleSpec::new(self.seed, self.samples, self.size_bound)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealOp {
    Sum,
    Product,
    Contains,
    Comparable,
    Subtractive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Axioms,
    Mc,
    Entire,
    MinProperty,
    Subtractive,
    Prime,
    TotalOrder,
    Gaussian,
    DedekindMertens,
    UnitsZeroset,
    ExtensionAxioms,
}

impl Property {
    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Serialize)]
struct BoundJson {
    seed: u64,
    samples: u64,
    size_bound: u64,
    checked: u64,
    method: String,
}

#[derive(Serialize)]
struct CriterionJson {
    id: u8,
    title: String,
    passed: bool,
    details: Vec<String>,
}

#[derive(Serialize)]
struct Report {
    command: String,
    instance: Option<String>,
    valuation: Option<String>,
    property: Option<String>,
    verdict: String,
    bound: Option<BoundJson>,
    witness: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    criteria: Vec<CriterionJson>,
    elapsed_ms: u128,
}

impl Report {
    fn new(command: &str, instance: Option<&Instance>) -> Report {
        Report {
            command: command.into(),
            instance: instance.map(|i| i.semiring.clone()),
            valuation: instance.and_then(|i| i.valuation.clone()),
            property: None,
            verdict: "ok".into(),
            bound: None,
            witness: Vec::new(),
            result: None,
            detail: None,
            criteria: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn result(mut self, r: impl Into<String>) -> Report {
        self.result = Some(r.into());
        self
    }

    fn law(mut self, law: &LawReport) -> Report {
        let b = &law.bound;
        self.bound = Some(BoundJson {
            seed: b.seed,
            samples: b.samples,
            size_bound: b.size_bound,
            checked: b.checked,
            method: b.method.to_string(),
        });
        match law.witness() {
            None => {
                self.verdict = "holds".into();
                self.detail = Some(law.law.clone());
            }
            Some(w) => {
                self.verdict = "counterexample".into();
                self.witness = w.rendered();
                self.detail = Some(format!("{}: {}", law.law, w.detail));
            }
        }
        self
    }

    fn exit_code(&self) -> u8 {
        match self.verdict.as_str() {
            "counterexample" => 1,
            _ => 0,
        }
    }

    fn render(&self, output: Output) -> String {
        if output == Output::Json {
            return serde_json::to_string_pretty(self).expect("serializable");
        }
        let mut lines = Vec::new();
        if !self.criteria.is_empty() {
            for c in &self.criteria {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                lines.push(format!("criterion {:>2} {mark}: {}", c.id, c.title));
                lines.extend(c.details.iter().map(|d| format!("    {d}")));
            }
            return lines.join("\n");
        }
        if let Some(r) = &self.result {
            return r.clone();
        }
        lines.push(self.verdict.clone());
        if let Some(d) = &self.detail {
            lines.push(format!("law: {d}"));
        }
        if !self.witness.is_empty() {
            lines.push(format!("witness: {}", self.witness.join(", ")));
        }
        if let Some(b) = &self.bound {
            lines.push(format!(
                "bound: {} (seed={}, samples={}, size_bound={}, checked={})",
                b.method, b.seed, b.samples, b.size_bound, b.checked
            ));
        }
        lines.join("\n")
    }
}

fn semiring(i: &Instance) -> Result<Arc<Semiring>, Error> {
    Ok(Arc::new(i.semiring.parse()?))
}

fn valuation(i: &Instance, s: &Arc<Semiring>) -> Result<Valuation, Error> {
    let rule = i
        .valuation
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--valuation is required here".into()))?;
    Valuation::parse(s, rule)
}

/// The DVS named by the descriptor, or `S_v` for a semifield with `--valuation`.
fn dvs(i: &Instance) -> Result<DvsStructure, Error> {
    let s = semiring(i)?;
    match &i.valuation {
        Some(_) if s.capabilities().semifield => DvsStructure::new(valuation(i, &s)?),
        _ => DvsStructure::from_descriptor(&s),
    }
}

fn dvs_element(d: &DvsStructure, text: &str) -> Result<Element, Error> {
    Element::parse(text, d.carrier()).or_else(|_| Element::parse(text, d.field()))
}

fn ideal(i: &Instance, s: &Arc<Semiring>, text: &str) -> Result<Ideal, Error> {
    let text = text.trim();
    if text == "P_v" {
        return Ok(Ideal::Level(LevelIdeal::pv(&valuation(i, s)?)));
    }
    if let Some(alpha) = text.strip_prefix("J_") {
        let alpha: BigRational = alpha
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad level {alpha}")))?;
        return Ok(Ideal::Level(LevelIdeal::j(&valuation(i, s)?, alpha)?));
    }
    parse_ideal(text, s)
}

fn fingen(i: Ideal) -> Result<valsemi::FinGenIdeal, Error> {
    match i {
        Ideal::FinGen(f) => Ok(f),
        other => Err(Error::InvalidArgument(format!(
            "{other} is not a finitely generated ideal"
        ))),
    }
}

fn second(arg: &Option<String>) -> Result<&str, Error> {
    arg.as_deref()
        .ok_or_else(|| Error::InvalidArgument("a second operand is required".into()))
}

fn run(command: &Command) -> Result<Report, Error> {
    Ok(match command {
        Command::Valuate {
            instance, element, ..
        } => {
            let s = semiring(instance)?;
            let v = valuation(instance, &s)?;
            let x = Element::parse(element, &s)?;
            Report::new("valuate", Some(instance)).result(valuate(&v, &x)?.to_string())
        }
        Command::Factor {
            instance, element, ..
        } => {
            let d = dvs(instance)?;
            let (u, n) = dvs_normal_form(&d, &dvs_element(&d, element)?)?;
            Report::new("factor", Some(instance)).result(format!("({u}, {n})"))
        }
        Command::Divmod { instance, a, b, .. } => {
            let d = dvs(instance)?;
            let (q, r) = euclidean_divide(&d, &dvs_element(&d, a)?, &dvs_element(&d, b)?)?;
            Report::new("divmod", Some(instance)).result(format!("({q}, {r})"))
        }
        Command::Ideal {
            instance,
            op,
            first,
            second: other,
            report,
        } => {
            let s = semiring(instance)?;
            let spec = report.spec();
            let i = ideal(instance, &s, first)?;
            let out = Report::new("ideal", Some(instance));
            match op {
                IdealOp::Sum | IdealOp::Product => {
                    let j = fingen(ideal(instance, &s, second(other)?)?)?;
                    let i = fingen(i)?;
                    let r = match op {
                        IdealOp::Sum => ideal_sum(&i, &j)?,
                        _ => ideal_product(&i, &j)?,
                    };
                    out.result(r.to_string())
                }
                IdealOp::Contains => {
                    let x = Element::parse(second(other)?, &i.semiring())?;
                    out.result(i.contains(x.value())?.to_string())
                }
                IdealOp::Comparable => {
                    let j = ideal(instance, &s, second(other)?)?;
                    out.law(&ideals_comparable(&i, &j, &spec)?)
                }
                IdealOp::Subtractive => out.law(&is_subtractive_bounded(&i, &spec)?),
            }
        }
        Command::Check {
            instance,
            property,
            ideal: ideal_arg,
            report,
        } => {
            let spec = report.spec();
            let s = semiring(instance)?;
            let v = || valuation(instance, &s);
            // Properties of ideals and content refer to S_v when a valuation is given.
            let target = || -> Result<Arc<Semiring>, Error> {
                match &instance.valuation {
                    Some(_) => Ok(Arc::new(v()?.sv())),
                    None => Ok(s.clone()),
                }
            };
            let chosen = || -> Result<Ideal, Error> {
                match ideal_arg {
                    Some(text) => ideal(instance, &s, text),
                    None => Ok(Ideal::Level(LevelIdeal::pv(&v()?))),
                }
            };
            let law = match property {
                Property::Axioms => match &instance.valuation {
                    Some(_) => check_valuation_axioms(&v()?, &spec),
                    None => check_semiring_axioms(&s, &spec),
                },
                Property::Mc => probe_mc_entire(&s, &spec).0,
                Property::Entire => probe_mc_entire(&s, &spec).1,
                Property::MinProperty => {
                    let v = v()?;
                    check_min_property(&v, &spec).to_law_report(&v)
                }
                Property::Subtractive => is_subtractive_bounded(&chosen()?, &spec)?,
                Property::Prime => is_prime_bounded(&chosen()?, &spec)?,
                Property::TotalOrder => ideals_totally_ordered(&target()?, &spec)?,
                Property::Gaussian => gaussian_check(&target()?, &spec)?,
                Property::DedekindMertens => dedekind_mertens_sampled(&target()?, &spec)?,
                Property::UnitsZeroset => units_vs_zeroset(&v()?, &spec)?,
                Property::ExtensionAxioms => {
                    check_valuation_axioms(&extend_valuation(&v()?)?, &spec)
                }
            };
            let mut out = Report::new("check", Some(instance)).law(&law);
            out.property = Some(property.name());
            out
        }
        Command::Suite { criterion, .. } => {
            let outcomes = match criterion {
                Some(id) => vec![suite::run(*id).ok_or_else(|| {
                    Error::InvalidArgument(format!("no criterion {id}; choose 1 to 12"))
                })?],
                None => suite::run_all(),
            };
            let mut out = Report::new("suite", None);
            out.bound = Some(BoundJson {
                seed: suite::SEED,
                samples: suite::SAMPLES,
                size_bound: suite::SIZE_BOUND,
                checked: outcomes.len() as u64,
                method: "sampled".into(),
            });
            let failed: Vec<String> = outcomes
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.line())
                .collect();
            out.verdict = if failed.is_empty() {
                "holds"
            } else {
                "counterexample"
            }
            .into();
            out.witness = failed;
            out.criteria = outcomes
                .into_iter()
                .map(|c| CriterionJson {
                    id: c.id,
                    title: c.title.into(),
                    passed: c.passed,
                    details: c.details,
                })
                .collect();
            out
        }
    })
}

fn output_of(command: &Command) -> Output {
    match command {
        Command::Valuate { report, .. }
        | Command::Factor { report, .. }
        | Command::Divmod { report, .. }
        | Command::Ideal { report, .. }
        | Command::Check { report, .. } => report.output,
        Command::Suite { output, .. } => *output,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis();
            println!("{}", report.render(output_of(&cli.command)));
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
