use std::process::{Command, Output};

fn valsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valsemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    serde_json::from_slice(&valsemi(&all).stdout).expect("json report")
}

#[test]
fn valuate_prints_the_value() {
    let o = valsemi(&["valuate", "--semiring", "nat", "--valuation", "vp:5", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2");
    let o = valsemi(&["valuate", "--semiring", "nat", "--valuation", "vp:5", "0"]);
    assert_eq!(stdout(&o), "inf");
}

#[test]
fn deg_frac_min_property_counterexample() {
    let args = [
        "check",
        "--semiring",
        "fractions(poly(nat))",
        "--valuation",
        "deg-frac",
        "--property",
        "min-property",
    ];
    let o = valsemi(&args);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&args);
    assert_eq!(r["verdict"], "counterexample");
    assert_eq!(r["witness"], serde_json::json!(["1", "X"]));
}

#[test]
fn qnn_is_gaussian() {
    let args = [
        "check",
        "--semiring",
        "qnn",
        "--valuation",
        "vp:5",
        "--property",
        "gaussian",
    ];
    assert_eq!(valsemi(&args).status.code(), Some(0));
    let r = json(&args);
    assert_eq!(r["verdict"], "holds");
    assert_eq!(r["bound"]["seed"], 1);
    assert_eq!(r["bound"]["samples"], 1000);
    assert_eq!(r["bound"]["size_bound"], 50);
    for key in [
        "command",
        "instance",
        "valuation",
        "property",
        "witness",
        "elapsed_ms",
    ] {
        assert!(r.get(key).is_some(), "{key}");
    }
}

#[test]
fn reports_are_reproducible() {
    let args = [
        "check",
        "--semiring",
        "fuzzy",
        "--property",
        "mc",
        "--seed",
        "7",
        "--samples",
        "300",
    ];
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(json(&args)), strip(json(&args)));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let bad_element = valsemi(&[
        "valuate",
        "--semiring",
        "poly(nat)",
        "--valuation",
        "low-order",
        "X^-1",
    ]);
    assert_eq!(bad_element.status.code(), Some(2));
    assert_eq!(
        valsemi(&["check", "--semiring", "nat", "--property", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        valsemi(&[
            "valuate",
            "--semiring",
            "integers",
            "--valuation",
            "vp:5",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        valsemi(&["valuate", "--semiring", "nat", "--valuation", "vp:6", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dvs_commands() {
    let o = valsemi(&["factor", "--semiring", "sv(qnn, vp:5)", "50/3"]);
    assert_eq!(stdout(&o), "(2/3, 2)");
    let o = valsemi(&["factor", "--semiring", "tropical-nat", "7"]);
    assert_eq!(stdout(&o), "(0, 7)");
    let o = valsemi(&[
        "divmod",
        "--semiring",
        "qnn",
        "--valuation",
        "vp:5",
        "10/3",
        "2/7",
    ]);
    assert_eq!(stdout(&o), "(35/3, 0)");
    let o = valsemi(&[
        "divmod",
        "--semiring",
        "qnn",
        "--valuation",
        "vp:5",
        "2",
        "5",
    ]);
    assert_eq!(stdout(&o), "(0, 2)");
}

#[test]
fn ideal_commands() {
    let o = valsemi(&[
        "ideal",
        "--semiring",
        "ideals-z",
        "sum",
        "ideal[4]",
        "ideal[6]",
    ]);
    assert_eq!(stdout(&o), "ideal[2]");
    let o = valsemi(&[
        "ideal",
        "--semiring",
        "nat",
        "product",
        "ideal[2]",
        "ideal[3]",
    ]);
    assert_eq!(stdout(&o), "ideal[6]");
    let o = valsemi(&["ideal", "--semiring", "nat", "contains", "ideal[2, 3]", "1"]);
    assert_eq!(stdout(&o), "false");
    let r = json(&[
        "ideal",
        "--semiring",
        "bool-poly",
        "comparable",
        "ideal[X]",
        "ideal[X + 1]",
    ]);
    assert_eq!(r["witness"], serde_json::json!(["X", "1 + X"]));
    let o = valsemi(&[
        "ideal",
        "--semiring",
        "fuzzy",
        "comparable",
        "fuzzy[0,1/2]",
        "fuzzy[0,1/2)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&[
        "ideal",
        "--semiring",
        "fractions(poly(nat))",
        "--valuation",
        "deg-frac",
        "subtractive",
        "P_v",
    ]);
    assert_eq!(r["witness"], serde_json::json!(["X", "1"]));
}

#[test]
fn printed_witnesses_reverify() {
    let r = json(&["check", "--semiring", "fuzzy", "--property", "mc"]);
    let w: Vec<String> = r["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(w.len(), 3);
    // a*b = a*c with b != c, recomputed with min.
    let q = |s: &str| -> (i64, i64) {
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        (n.parse().unwrap(), d.parse().unwrap())
    };
    let lt = |x: (i64, i64), y: (i64, i64)| x.0 * y.1 < y.0 * x.1;
    let min = |x, y| if lt(x, y) { x } else { y };
    let (a, b, c) = (q(&w[0]), q(&w[1]), q(&w[2]));
    let eq = |x: (i64, i64), y: (i64, i64)| x.0 * y.1 == y.0 * x.1;
    assert!(eq(min(a, b), min(a, c)) && !eq(b, c));
}

#[test]
fn other_properties_run() {
    for (s, v, p, code) in [
        ("nat", None, "axioms", 0),
        ("nat", Some("vp:5"), "axioms", 0),
        ("nat", Some("vp:5"), "extension-axioms", 0),
        ("fuzzy", None, "entire", 0),
        ("qnn", Some("vp:5"), "units-zeroset", 0),
        ("poly(nat)", Some("low-order"), "units-zeroset", 1),
        ("qnn", Some("vp:5"), "subtractive", 0),
        ("qnn", Some("vp:5"), "prime", 0),
        ("qnn", Some("vp:5"), "total-order", 0),
        ("bool-poly", None, "total-order", 1),
        ("ideals-z", None, "dedekind-mertens", 0),
    ] {
        let mut args = vec![
            "check",
            "--semiring",
            s,
            "--property",
            p,
            "--samples",
            "300",
        ];
        if let Some(v) = v {
            args.extend(["--valuation", v]);
        }
        assert_eq!(valsemi(&args).status.code(), Some(code), "{args:?}");
    }
}

#[test]
fn suite_runs_a_single_criterion() {
    let o = valsemi(&["suite", "--criterion", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("criterion  7 PASS"));
    assert_eq!(
        valsemi(&["suite", "--criterion", "13"]).status.code(),
        Some(2)
    );
}
