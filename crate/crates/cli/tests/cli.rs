use std::io::Write;
use std::process::{Command, Stdio};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn rmis(args: &[&str], stdin: &str) -> Out {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rmis"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Out {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend(args);
    let out = rmis(&full, "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    out.stdout
}

const BULL: &str = "0 1\n1 2\n1 3\n2 3\n2 4\n";

#[test]
fn triangle_has_no_robust_mis() {
    let out = rmis(&["find", "-"], &gen(&["triangle"]));
    assert_eq!(out.stdout, "NO-RMIS\n");
    assert_eq!(out.code, 1);
}

#[test]
fn find_on_gk_returns_one_of_the_two_sets() {
    let meta: serde_json::Value =
        serde_json::from_str(&gen(&["gk", "--k", "2", "--json"])).unwrap();
    let m1: Vec<u64> = meta["m1"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let m2: Vec<u64> = meta["m2"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(meta["edges"].as_str().unwrap(), gen(&["gk", "--k", "2"]));
    let out = rmis(&["find", "-"], &gen(&["gk", "--k", "2"]));
    assert_eq!(out.code, 0);
    let found: Vec<u64> = out
        .stdout
        .trim()
        .split(',')
        .map(|t| t.parse().unwrap())
        .collect();
    assert!(found == m1 || found == m2, "{found:?}");
}

#[test]
fn find_json_and_trace() {
    let out = rmis(&["find", "-", "--json"], BULL);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["exists"], true);
    assert_eq!(v["set"], serde_json::json!([0, 3, 4]));
    let root = &v["labels"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["node"] == "C {1,2,3}")
        .unwrap()["labels"];
    assert_eq!(root, &serde_json::json!([{"tag": "E", "set": [0, 3, 4]}]));

    let out = rmis(&["find", "-", "--trace"], BULL);
    assert!(out.stdout.starts_with("C {1,2,3}  (E,{0,3,4})\n"));
    assert!(out.stdout.contains("      P 0  (PI,{0}) (PE,{})\n"));
    assert!(out.stdout.ends_with("\n0,3,4\n"));
}

#[test]
fn verify_exit_codes() {
    for brute in [false, true] {
        let mut args = vec!["verify", "-", "--set", "0,3,4"];
        if brute {
            args.push("--brute");
        }
        let out = rmis(&args, BULL);
        assert_eq!((out.code, out.stdout.as_str()), (0, "ROBUST\n"));
    }
    let out = rmis(&["verify", "-", "--set", "1,4"], BULL);
    assert_eq!((out.code, out.stdout.as_str()), (1, "NOT-ROBUST\n"));
    let out = rmis(&["verify", "-", "--set", "1"], BULL);
    assert_eq!((out.code, out.stdout.as_str()), (1, "NOT-MIS\n"));
    let out = rmis(&["verify", "-", "--set", "0,9"], BULL);
    assert_eq!(out.code, 2);
    let out = rmis(
        &[
            "verify",
            "-",
            "--set",
            "0,3,4",
            "--brute",
            "--max-removable-edges",
            "1",
        ],
        BULL,
    );
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cap"), "{}", out.stderr);
}

#[test]
fn oracle_lists_every_robust_mis() {
    let square = gen(&["square"]);
    for brute in [&[][..], &["--brute"][..]] {
        let mut args = vec!["oracle", "-"];
        args.extend(brute);
        let out = rmis(&args, &square);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().count(), 2);
    }
    let out = rmis(&["oracle", "-"], &gen(&["triangle"]));
    assert_eq!((out.code, out.stdout.as_str()), (1, "NO-RMIS\n"));
}

#[test]
fn classify_emits_verdict() {
    let out = rmis(&["classify", "-"], &gen(&["complete-bipartite", "2", "3"]));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(out.code, 0);
    assert_eq!(v["complete_bipartite"], true);
    assert_eq!(v["rmis_forall"], true);
    assert_eq!(v["bipartition"]["first"], serde_json::json!([0, 1]));
    let out = rmis(&["classify", "-"], BULL);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v.get("bipartition").is_none());
}

#[test]
fn abc_text_and_dot() {
    let out = rmis(&["abc", "-"], BULL);
    assert_eq!(
        out.stdout,
        "C {1,2,3}\n  A 1\n    B {0,1}\n      P 0\n  A 2\n    B {2,4}\n      P 4\n"
    );
    let out = rmis(&["abc", "-", "--dot"], BULL);
    assert!(out.stdout.starts_with("graph "));
    assert!(out.stdout.contains("shape=diamond"));
}

#[test]
fn simulate_outputs_json() {
    let sputnik = gen(&["random-sputnik", "--size", "10", "--seed", "3"]);
    let out = rmis(&["simulate", "-", "--ids", "random:7"], &sputnik);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let outputs = v["outputs"].as_object().unwrap();
    assert!(outputs.values().all(|d| d == "IN" || d == "OUT"));
    assert_eq!(
        v["per_node_rounds"].as_object().unwrap().len(),
        outputs.len()
    );
    assert!(v["rounds_total"].as_u64().unwrap() >= 3);

    let out = rmis(&["simulate", "-", "--max-rounds", "1"], BULL);
    assert_eq!(out.code, 2);
    let out = rmis(&["simulate", "-", "--ids", "random"], BULL);
    assert_eq!(out.code, 2);
}

#[test]
fn generated_graphs_parse_back() {
    for args in [
        &["gk", "--k", "3"][..],
        &["cycle", "5"],
        &["path", "4"],
        &["lollipop", "3", "4"],
        &["random-connected", "--n", "12", "--p", "0.2", "--seed", "1"],
    ] {
        let text = gen(args);
        let out = rmis(&["abc", "-"], &text);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    }
    assert_eq!(
        gen(&["random-connected", "--n", "12", "--p", "0.2", "--seed", "1"]),
        gen(&["random-connected", "--n", "12", "--p", "0.2", "--seed", "1"])
    );
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(rmis(&["find", "-"], "0 x\n").code, 2);
    assert_eq!(rmis(&["find", "-"], "0 1\n2 3\n").code, 2);
    assert_eq!(rmis(&["find", "/nonexistent/graph"], "").code, 2);
    assert_eq!(rmis(&["find", "-", "--bogus"], BULL).code, 2);
    assert_eq!(rmis(&["gen", "random-sputnik", "--size", "5"], "").code, 2);
    assert_eq!(rmis(&["gen", "cycle", "2"], "").code, 2);
}
