use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyeuler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn value_examples() {
    for (args, expected) in [
        (&["value", "poly-euler2", "--k", "-3", "--n", "5"][..], "2741670\n"),
        (&["value", "comp-euler", "--n", "0"][..], "1\n"),
        (&["value", "poly-euler2", "--k", "5", "--n", "7"][..], "763114237/2315250\n"),
        (&["value", "hyper-euler2", "--N", "1", "--n", "2"][..], "-1/10\n"),
        (&["value", "bernoulli", "--n", "1"][..], "-1/2\n"),
        (&["value", "poly-bernoulli", "--k", "1", "--n", "1"][..], "1/2\n"),
    ] {
        let o = run(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn table_one_markdown() {
    let o = run(&["seq", "poly-euler2", "--k", "1..5", "--n", "1..7", "--format", "md"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "| n \\ k | 1 | 2 | 3 | 4 | 5 |");
    assert_eq!(lines[5], "| 4 | 7/15 | -679/225 | -12737/3375 | 245789/50625 | 12383617/759375 |");
    assert_eq!(lines[8], "| 7 | 0 | 31/3 | -45853/210 | -1250393/132300 | 763114237/2315250 |");
}

#[test]
fn table_two_markdown() {
    let o = run(&["seq", "poly-euler2", "--k", "-4..0", "--n", "1..7", "--format", "md"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("| n \\ k | -4 | -3 | -2 | -1 | 0 |\n"));
    assert!(out.contains("| 7 | 11615023034 | 628464090 | 23819306 | 450834 | 1094 |\n"));
}

#[test]
fn csv_and_json() {
    let o = run(&["seq", "comp-euler", "--n", "24..26", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "n,value\n24,1982765468311237/1365\n25,0\n26,-286994504449393/3\n"
    );
    let o = run(&["seq", "hyper-euler", "--N", "0..1", "--n", "0..2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["col_labels"], serde_json::json!(["0", "1"]));
    assert_eq!(v["cells"][2], serde_json::json!(["-1", "-1/6"]));
}

#[test]
fn output_is_deterministic() {
    let args = ["seq", "poly-bernoulli", "--k", "-3..3", "--n", "0..10", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["seq", "zeta", "--n", "1"][..],
        &["seq", "poly-euler2", "--n", "1"][..],
        &["seq", "poly-euler2", "--k", "65", "--n", "1"][..],
        &["seq", "comp-euler", "--n", "-1"][..],
        &["value", "hyper-euler", "--n", "2"][..],
        &["value", "comp-euler", "--n", "9999"][..],
        &["verify", "riemann"][..],
        &["verify", "recurrence-e2", "--nmax", "5000"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

fn reports(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn verify_single_theorems() {
    let o = run(&["verify", "denominator", "--nmax", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let r = reports(&o);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["theorem_id"], "denominator");
    assert_eq!(r[0]["passed"], true);

    let o = run(&["verify", "duality", "--nmax", "12", "--kmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_all_defaults() {
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let r = reports(&o);
    let ids: Vec<&str> = r.iter().map(|v| v["theorem_id"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        [
            "recurrence-e2",
            "denominator",
            "sum1",
            "duality",
            "pb-expansion",
            "positivity",
            "congruences",
            "products",
            "oracle"
        ]
    );
    for v in &r {
        for key in ["theorem_id", "range", "passed", "expected_fail", "counterexample", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key} missing");
        }
        assert_eq!(v["passed"], true);
        assert!(v["counterexample"].is_null());
    }
    let xf = r[6]["expected_fail"].as_array().unwrap();
    assert!(xf.iter().any(|e| e["claim"] == "e2-even" && e["counterexample"]["lhs"].as_str().unwrap().starts_with("5 ")));
    assert!(r.iter().filter(|v| v["theorem_id"] != "congruences").all(|v| v["expected_fail"] == serde_json::json!([])));
}
