//! Exit codes and output of the subcommands, in-process and through the
//! built binary.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::{cli, write_temp};
use evenpair::generators::named_instance;
use evenpair::io::{parse_dimacs, write_dimacs, write_edge_list};
use serde_json::{json, Value};

const C6: &str = "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n";

fn named_file(dir: &tempfile::TempDir, name: &str) -> String {
    let g = named_instance(name).unwrap();
    write_temp(dir.path(), &format!("{name}.col"), &write_dimacs(&g)).to_str().unwrap().to_string()
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("{e}: {s}"))
}

#[test]
fn evenpair_on_c6_returns_the_end_pair() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_temp(dir.path(), "c6.col", C6);
    let (code, out, _) = cli(&["evenpair", "--audit", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["command"], "evenpair");
    assert_eq!(v["outcome"]["result"]["pair"], json!([2, 6]));
    assert_eq!(v["outcome"]["result"]["case"], "Case2OuterPath");
    assert_eq!(v["outcome"]["audit"]["special"], true);
    assert_eq!(v["outcome"]["audit"]["structural"], true);
}

#[test]
fn classify_reports_witnesses_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    for (name, kind) in [("odd-prism-c6bar", "Prism"), ("even-prism-9", "Prism"), ("c5", "OddHole"), ("c7bar", "Antihole")] {
        let (code, out, err) = cli(&["classify", &named_file(&dir, name)]);
        assert_eq!(code, 1, "{name}");
        let v = json_of(&out);
        assert_eq!(v["outcome"]["in_class"], false);
        assert_eq!(v["outcome"]["witness"]["kind"], kind, "{name}");
        assert!(err.contains(kind), "{err}");
    }
    for name in ["c4", "c6", "p3", "k4", "snake-improper"] {
        let (code, out, _) = cli(&["classify", &named_file(&dir, name)]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(json_of(&out)["outcome"]["in_class"], true);
    }
}

#[test]
fn color_uses_omega_colours() {
    let dir = tempfile::tempdir().unwrap();
    for (name, omega) in [("c4", 2), ("c6", 2), ("p3", 2), ("k4", 4), ("snake-improper", 3)] {
        let (code, out, _) = cli(&["color", &named_file(&dir, name)]);
        assert_eq!(code, 0, "{name}");
        let v = json_of(&out);
        assert_eq!(v["outcome"]["omega"], omega, "{name}");
        assert_eq!(v["outcome"]["coloring"]["num_colors"], omega, "{name}");
        assert_eq!(v["outcome"]["chromatic_number"], omega, "{name}");
        assert_eq!(v["outcome"]["trace_verified"], true);
    }
}

#[test]
fn outside_the_class_is_a_negative_answer() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = named_file(&dir, "c5");
    let (code, out, err) = cli(&["evenpair", &c5]);
    assert_eq!(code, 1);
    let v = json_of(&out);
    assert_eq!(v["outcome"]["kind"], "Diagnostic");
    assert_eq!(v["outcome"]["code"], "not-in-class");
    assert!(!err.is_empty());
    let (code, out, _) = cli(&["color", &c5]);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["outcome"]["code"], "not-in-class");
    let (code, out, _) = cli(&["evenpair", &named_file(&dir, "k4")]);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["outcome"]["code"], "clique");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("nohead.col", "e 1 2\n"),
        ("range.col", "p edge 3 1\ne 1 4\n"),
        ("loop.col", "p edge 3 1\ne 2 2\n"),
        ("junk.col", "p edge 3 1\ne one two\n"),
    ];
    for (name, body) in cases {
        let f = write_temp(dir.path(), name, body);
        let (code, out, err) = cli(&["--format", "dimacs", "classify", f.to_str().unwrap()]);
        assert_eq!(code, 2, "{name}");
        assert!(out.is_empty(), "{name}");
        assert!(err.starts_with("error:"), "{name}: {err}");
    }
    let (code, _, err) = cli(&["classify", "/nonexistent/graph.col"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent"));
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["classify"]).0, 2);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("evenpair"));
}

#[test]
fn edge_list_input_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    let g = parse_dimacs(C6).unwrap();
    let f = write_temp(dir.path(), "c6.txt", &write_edge_list(&g));
    let (code, out, _) = cli(&["evenpair", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    let via_edges = json_of(&out);
    let d = write_temp(dir.path(), "c6.col", C6);
    let (_, out, _) = cli(&["evenpair", d.to_str().unwrap()]);
    assert_eq!(via_edges, json_of(&out));
}

#[test]
fn verify_accepts_genuine_and_rejects_tampered_results() {
    let dir = tempfile::tempdir().unwrap();
    let snake = named_file(&dir, "snake-improper");
    let result = dir.path().join("r.json");
    let r = result.to_str().unwrap();
    for cmd in ["evenpair", "color", "classify"] {
        let (_, out, _) = cli(&[cmd, &snake]);
        std::fs::write(&result, &out).unwrap();
        let (code, vout, _) = cli(&["verify", &snake, r]);
        assert_eq!(code, 0, "{cmd}");
        assert_eq!(json_of(&vout)["outcome"]["valid"], true);
    }

    let (_, out, _) = cli(&["color", &snake]);
    let mut v = json_of(&out);
    let colors = v["outcome"]["coloring"]["colors"].as_object_mut().unwrap();
    let (k1, k2) = {
        let g = named_instance("snake-improper").unwrap();
        let (a, b) = g.edges()[0];
        (a.to_string(), b.to_string())
    };
    let c = colors[&k1].clone();
    colors.insert(k2, c);
    std::fs::write(&result, serde_json::to_string(&v).unwrap()).unwrap();
    let (code, vout, err) = cli(&["verify", &snake, r]);
    assert_eq!(code, 1);
    assert_eq!(json_of(&vout)["outcome"]["valid"], false);
    assert!(err.contains("not proper"), "{err}");

    let c6 = write_temp(dir.path(), "c6.col", C6);
    let c6 = c6.to_str().unwrap();
    let (_, out, _) = cli(&["evenpair", c6]);
    let mut v = json_of(&out);
    v["outcome"]["result"]["pair"] = json!([1, 3]);
    std::fs::write(&result, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(cli(&["verify", c6, r]).0, 1);

    // A result for a different graph fails on the digest.
    let (_, out, _) = cli(&["evenpair", &snake]);
    std::fs::write(&result, out).unwrap();
    let (code, _, err) = cli(&["verify", c6, r]);
    assert_eq!(code, 1);
    assert!(err.contains("digest"), "{err}");

    std::fs::write(&result, "{ not json").unwrap();
    assert_eq!(cli(&["verify", c6, r]).0, 2);
}

#[test]
fn gen_writes_files_and_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_temp(dir.path(), "spec.json", r#"{"family": "RejectionClassA", "n": 9, "p": 0.4, "seed": 5}"#);
    let spec = spec.to_str().unwrap();
    let out = dir.path().join("g.col");
    let (code, stdout, _) = cli(&["gen", spec, "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&out).unwrap();
    let g = parse_dimacs(&written).unwrap();
    assert_eq!(g.n(), 9);
    assert!(evenpair::oracles::class_a_witness(&g).unwrap().is_none());
    let (_, again, _) = cli(&["gen", spec]);
    assert_eq!(again, written);
    let (_, other, _) = cli(&["gen", spec, "--seed", "6"]);
    assert_ne!(other, written);
    let (code, el, _) = cli(&["gen", spec, "--out-format", "edgelist"]);
    assert_eq!(code, 0);
    assert!(el.starts_with("9\n"));

    let named = write_temp(dir.path(), "named.json", r#"{"family": "NamedInstance", "name": "odd-prism-8"}"#);
    let (code, body, _) = cli(&["gen", named.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(body, write_dimacs(&named_instance("odd-prism-10").unwrap()));

    for bad in [r#"{"family": "NamedInstance", "name": "petersen"}"#, r#"{"family": "Bipartite", "n": 4, "p": 2.0}"#, r#"{"family": "X"}"#] {
        let f = write_temp(dir.path(), "bad.json", bad);
        assert_eq!(cli(&["gen", f.to_str().unwrap()]).0, 2, "{bad}");
    }
    let hopeless = write_temp(dir.path(), "hopeless.json", r#"{"family": "RejectionClassA", "n": 12, "p": 0.5, "seed": 1, "max_tries": 0}"#);
    assert_eq!(cli(&["gen", hopeless.to_str().unwrap()]).0, 1);
}

#[test]
fn oracle_ops() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_temp(dir.path(), "c6.col", C6);
    let c6 = c6.to_str().unwrap();
    let result = |args: &[&str]| {
        let (code, out, err) = cli(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        json_of(&out)["outcome"]["result"].clone()
    };
    assert_eq!(result(&["oracle", "--op", "even-pair", c6, "1", "3"]), json!(true));
    assert_eq!(result(&["oracle", "--op", "even-pair", c6, "1", "4"]), json!(false));
    assert_eq!(result(&["oracle", "--op", "two-pair", c6, "1", "3"]), json!(false));
    assert_eq!(result(&["oracle", "--op", "special-even-pair", c6, "2", "6"]), json!(true));
    assert_eq!(result(&["oracle", "--op", "chordless-paths", c6, "1", "4"]).as_array().unwrap().len(), 2);
    assert_eq!(result(&["oracle", "--op", "max-clique", c6]).as_array().unwrap().len(), 2);
    assert_eq!(result(&["oracle", "--op", "chromatic-number", c6]), json!(2));
    assert_eq!(result(&["oracle", "--op", "odd-hole", c6]), Value::Null);
    assert_eq!(result(&["oracle", "--op", "weakly-triangulated", c6]), json!(false));
    assert_eq!(result(&["oracle", "--op", "class-a", c6]), Value::Null);
    assert_eq!(result(&["oracle", "--op", "parity-lemma", c6, "--path", "2,3,4,5,6", "--set", "1"]), json!(true));

    let snake = named_file(&dir, "snake-proper");
    let g = named_instance("snake-proper").unwrap();
    let a = g.vertex_by_label("a").unwrap().to_string();
    let b = g.vertex_by_label("b").unwrap().to_string();
    let s = result(&["oracle", "--op", "proper-snake", &snake, &a, &b]);
    assert_eq!(s["s1"].as_array().unwrap().len(), 2);

    for bad in [
        vec!["oracle", "--op", "nope", c6],
        vec!["oracle", "--op", "even-pair", c6, "1"],
        vec!["oracle", "--op", "even-pair", c6, "1", "2"],
        vec!["oracle", "--op", "even-pair", c6, "1", "9"],
        vec!["oracle", "--op", "odd-hole", c6, "1"],
        vec!["oracle", "--op", "parity-lemma", c6],
    ] {
        assert_eq!(cli(&bad).0, 2, "{bad:?}");
    }
}

#[test]
fn oracle_bounds_are_reported_not_hung() {
    let dir = tempfile::tempdir().unwrap();
    let g = evenpair::generators::random_bipartite(40, 0.2, 3).unwrap();
    let f = write_temp(dir.path(), "big.col", &write_dimacs(&g));
    let f = f.to_str().unwrap();
    let (code, out, _) = cli(&["oracle", "--op", "chromatic-number", f]);
    assert_eq!(code, 2);
    assert_eq!(json_of(&out)["outcome"]["code"], "oracle-bound");
    let (code, out, err) = cli(&["evenpair", "--audit", f]);
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["outcome"]["audit"]["structural"], true);
    assert!(v["outcome"]["audit"]["skipped"].is_string());
    assert!(err.contains("skipped"));
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_evenpair");
    let run = |args: &[&str], input: &str| {
        let mut child = Command::new(bin)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
        let out = child.wait_with_output().unwrap();
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
    };
    let (code, out) = run(&["evenpair", "-"], C6);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["outcome"]["result"]["pair"], json!([2, 6]));
    let prism = write_dimacs(&named_instance("odd-prism-c6bar").unwrap());
    let (code, out) = run(&["classify", "-"], &prism);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["outcome"]["witness"]["kind"], "Prism");
    assert_eq!(run(&["classify", "-"], "garbage\n").0, 2);
    let (a, _) = run(&["color", "-"], C6);
    assert_eq!(a, 0);
    assert_eq!(run(&["color", "-"], C6).1, run(&["color", "-"], C6).1);
}
