use std::process::{Command, Output};

use serde_json::Value;

const M016: &str = "<a,b | (a^3 b)^2 b^-3, (a^-1 b^3)^2 a^3>";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su2abelian")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => format!("{:.16e}", n.as_f64().unwrap()),
        Value::Array(xs) => format!("[{}]", xs.iter().map(render).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// The text report rebuilt from the JSON object.
fn text_from_json(v: &Value) -> String {
    let mut s = format!("verdict: {}\n", render(&v["verdict"]));
    if !v["certificate"].is_null() {
        s += &format!("certificate: {}\n", render(&v["certificate"]));
    }
    if !v["residual"].is_null() {
        s += &format!("residual: {}\n", render(&v["residual"]));
    }
    if let Value::Array(w) = &v["witness"] {
        s += "witness:\n";
        for e in w {
            s += &format!("  {} -> {}\n", render(&e["generator"]), render(&e["image"]));
        }
    }
    for (k, x) in v["extras"].as_object().unwrap() {
        s += &format!("{k}: {}\n", render(x));
    }
    s
}

#[test]
fn text_and_json_carry_the_same_content() {
    let cases: &[&[&str]] = &[
        &["classify", "sfs(S2; 2/1, 4/1, 4/-3)"],
        &["classify", "sfs(S2; 3/1, 3/1, 3/1)"],
        &["classify", "tbundle[-3,-1;1,0]"],
        &["classify", "tbundle[2,1;1,1]"],
        &["classify", "nun[1,0;0,1]"],
        &["search", "<a,b|>", "--restarts", "5"],
        &["search", "<a | a^3>", "--restarts", "5", "--seed", "3"],
        &["forms", "--disc", "12"],
        &["forms", "--trace", "-4"],
        &["mg", "--g", "3", "--unverified"],
        &["h1", "sfs(RP2; 3/1)"],
        &["geometry", "sfs(S2; 3/1, 3/1, 3/1)"],
        &["cfrac", "[3,2]"],
        &["lens-eq", "7", "2", "7", "4"],
        &["splice-h1", "2", "3", "2", "5"],
        &["verify-rep", "<a,b | a^2 b^-2>", "0,1,0,0; 0,0,1,0"],
    ];
    for args in cases {
        let text = run(args);
        assert_eq!(text.status.code(), Some(0), "{args:?}");
        let v = json(args);
        assert_eq!(stdout(&text), text_from_json(&v), "{args:?}");
        let mut keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        keys.sort();
        assert_eq!(keys, ["certificate", "extras", "residual", "verdict", "witness"]);
    }
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "sfs(S2; 2/1, 4/1, 4/-3)"]);
    assert_eq!(v["verdict"], "abelian");
    assert_eq!(v["certificate"], "Base244");
    assert_eq!(v["extras"]["geometry"], "Euclidean");

    assert_eq!(json(&["classify", "tbundle[-3,-1;1,0]"])["verdict"], "abelian");

    let v = json(&["classify", "nun[1,0;0,1]"]);
    assert_eq!(v["verdict"], "nonabelian");
    assert_eq!(v["certificate"], "Q8Surjection");
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    assert!(v["residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn witnesses_come_with_small_residuals() {
    for m in ["sfs(S2; 3/1, 3/1, 3/1)", "sfs(T2; 1/3)", "sfs(RP2; 5/2)", "sfs(N2)", "tbundle[3,1;2,1]"] {
        let v = json(&["classify", m]);
        assert_eq!(v["verdict"], "nonabelian", "{m}");
        assert!(v["residual"].as_f64().unwrap() < 1e-10, "{m}");
        for e in v["witness"].as_array().unwrap() {
            let q: Vec<f64> = e["image"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
            assert!((q.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn search_examples() {
    let v = json(&["search", M016, "--restarts", "1000", "--seed", "7"]);
    assert_eq!(v["verdict"], "none-found-after-1000");
    assert_eq!(v["extras"]["caveat"], "no non-abelian representation found after 1000 restarts");
    assert_eq!(v["extras"]["seed"], 7);

    let v = json(&["search", "<a,b|>"]);
    assert_eq!(v["verdict"], "nonabelian-found");
    assert_eq!(v["extras"]["seed"], 0);
    assert_eq!(v["extras"]["restarts"], 300);

    let v = json(&["search", "<c1,c2,c3 | c1^3, c2^3, c3^4, c1 c2 c3>", "--restarts", "50"]);
    assert_eq!(v["verdict"], "nonabelian-found");
}

#[test]
fn search_is_reproducible_from_the_seed() {
    let args = ["--json", "search", "<a,b | a^3 b^-2>", "--restarts", "20", "--seed", "11"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn floats_have_17_significant_digits() {
    let out = stdout(&run(&["--json", "search", "<a,b|>", "--restarts", "1"]));
    let reals = out
        .split(|c: char| !(c.is_ascii_digit() || c == '.' || c == 'e' || c == '-'))
        .filter(|t| t.contains('e') && t.contains('.'))
        .collect::<Vec<_>>();
    assert!(!reals.is_empty());
    for t in reals {
        let mantissa = t.split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17, "{t}");
    }
}

#[test]
fn forms_examples() {
    let v = json(&["forms", "--disc", "12"]);
    assert_eq!(v["verdict"], "2 classes");
    let v = json(&["forms", "--trace", "-4"]);
    assert_eq!(v["extras"]["class_count"], 2);
    assert_eq!(
        v["extras"]["representatives"],
        serde_json::json!(["A_-4 = [[-3, 1], [2, -1]]", "A_-4^T = [[-3, 2], [1, -1]]"])
    );
}

#[test]
fn mg_examples() {
    let v = json(&["mg", "--g", "1"]);
    assert_eq!(v["verdict"], "cross-checks-passed");
    assert_eq!(v["extras"]["r_2"], "L(7,2)");
    assert_eq!(v["extras"]["r_11"], "L(14,11)");
    assert_eq!(v["extras"]["r_13"], "L(21,13)");
    assert!(v["extras"]["r_T"].as_str().unwrap().starts_with("Y(T(2,3), T(2,3))"));

    let v = json(&["mg-table", "--g", "2"]);
    assert_eq!(v["extras"]["r_2"], "L(9,2)");
    assert!(v["extras"].get("unverified_lens").is_none());
    assert!(json(&["mg", "--g", "2", "--unverified"])["extras"]["unverified_lens"].is_array());
}

#[test]
fn misc_examples() {
    let v = json(&["h1", "sfs(S2; 3/1,3/1,3/-2)"]);
    assert_eq!(v["extras"]["rank"], 1);
    assert_eq!(json(&["cfrac", "[3,2]"])["verdict"], "7/2");
    assert_eq!(json(&["lens-eq", "7", "2", "7", "4"])["verdict"], "homeomorphic");
    assert_eq!(json(&["lens-eq", "7", "1", "7", "2"])["verdict"], "not-homeomorphic");
    assert_eq!(json(&["splice-h1", "2", "3", "2", "3"])["verdict"], "Z/35");
    assert_eq!(json(&["geometry", "sfs(S2; 2/1, 3/1, 5/1)"])["verdict"], "Spherical");
    assert_eq!(json(&["verify-rep", "<a | a^2>", "0,1,0,0"])["verdict"], "not-a-representation");
}

#[test]
fn exit_codes() {
    let ok = run(&["cfrac", "[1]"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stderr.is_empty());

    for args in [&["search", "<a | a^2"][..], &["classify", "sfs(S3)"], &["cfrac", "[1,"], &["bogus"], &["forms"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    for args in [
        &["forms", "--disc", "9"][..],
        &["forms", "--trace", "2"],
        &["mg", "--g", "0"],
        &["classify", "tbundle[2,1;1,1]x"],
        &["classify", "tbundle[1,1;0,1]"],
        &["splice-h1", "1", "3", "2", "5"],
        &["search", "<a|>", "--restarts", "0"],
    ] {
        let out = run(args);
        let code = out.status.code();
        assert!(code == Some(1) || code == Some(2), "{args:?}");
        assert_ne!(code, Some(0));
    }
    assert_eq!(run(&["forms", "--disc", "9"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "tbundle[1,1;0,1]"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_errors_are_objects() {
    let out = run(&["--json", "forms", "--disc", "9"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["kind"], "precondition");
    let out = run(&["--json", "search", "<a | a^2"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["kind"], "parse");
}
