use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-theta")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn theta_exact_and_float() {
    assert_eq!(ok(&["theta", "--group", "sym:4", "--connection", "efp:1", "--exact"]), "theta = 6 (exact)\n");
    assert_eq!(ok(&["theta", "--group", "sym:7", "--connection", "efp:3", "--exact"]), "theta = 360/11 (exact)\n");
    assert_eq!(ok(&["theta", "--group", "cyclic:5", "--connection", "elements:{1,4}"]), "theta ≈ 2.2360680\n");
}

#[test]
fn theta_lp_dump() {
    let dir = tempfile::tempdir().unwrap();
    let lp = dir.path().join("s3.lp");
    ok(&["theta", "--group", "sym:3", "--connection", "efp:1", "--exact", "--lp-out", path_str(&lp)]);
    assert_eq!(fs::read_to_string(lp).unwrap(), "lp exact 2 3\nmax 1 0 0\n1 4 1 = 6\n1 -2 1 = 0\n");
}

#[test]
fn json_report_is_deterministic_apart_from_runtime() {
    let dir = tempfile::tempdir().unwrap();
    let reports: Vec<Value> = (0..2)
        .map(|i| {
            let p = dir.path().join(format!("r{i}.json"));
            ok(&["--json", path_str(&p), "theta", "--group", "sym:5", "--connection", "efp:2", "--exact"]);
            let mut v: Value = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
            assert!(v["runtime_ms"].is_u64());
            v.as_object_mut().unwrap().remove("runtime_ms");
            v["command"].as_array_mut().unwrap()[1] = Value::Null;
            v
        })
        .collect();
    assert_eq!(reports[0], reports[1]);
    let r = &reports[0];
    assert_eq!(r["schema"], 1);
    assert_eq!(r["mode"], "exact");
    assert_eq!(r["seed"], 0);
    assert_eq!(r["results"]["rigorous"], true);
}

#[test]
fn exact_rationals_round_trip_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    ok(&["--json", path_str(&p), "theta", "--group", "sym:7", "--connection", "efp:3", "--exact"]);
    let v: Value = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
    let theta = v["results"]["theta"].as_str().unwrap();
    assert_eq!(theta, "360/11");
    let (num, den) = theta.split_once('/').unwrap();
    assert_eq!(num.parse::<u64>().unwrap(), 360);
    assert_eq!(den.parse::<u64>().unwrap(), 11);
    // the weights a are exact rationals too
    for (_, a) in v["results"]["a"].as_object().unwrap() {
        let s = a.as_str().unwrap();
        assert!(s.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-'), "{s}");
    }
}

#[test]
fn report_records_input_hashes() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("s3.json");
    let report = dir.path().join("r.json");
    fs::write(&table, ok(&["chartable", "--group", "sym:3"])).unwrap();
    ok(&["--json", path_str(&report), "theta", "--group", "sym:3", "--connection", "efp:1", "--chartable", path_str(&table)]);
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let input = &v["inputs"][0];
    assert_eq!(input["path"], path_str(&table));
    assert_eq!(input["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn alpha_outputs() {
    assert_eq!(ok(&["alpha", "--group", "gl:2,2", "--connection", "gl-rank:1"]), "alpha = 2\n");
    assert_eq!(ok(&["alpha", "--group", "sym:4", "--connection", "efp:1"]), "alpha = 6\n");
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.txt");
    fs::write(&graph, "vertices 5 edges 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    assert_eq!(ok(&["alpha", "--graph", path_str(&graph)]), "alpha = 2\n");
}

#[test]
fn exhausted_budgets_exit_with_three() {
    let out = run(&["alpha", "--group", "sym:5", "--connection", "efp:2", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("budget exhausted"));
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    let out = run(&["--json", path_str(&p), "efp-table", "--nmax", "4", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains('?'));
    assert!(p.exists(), "a partial report is still written");
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["theta", "--group", "sym:3", "--connection", "classes:9"][..],
        &["theta", "--group", "nosuch:3", "--connection", "efp:1"],
        &["theta", "--group", "sym:3", "--connection", "efp:7"],
        &["theta", "--group", "gl:2,2", "--connection", "gl-rank:1"],
        &["theta", "--group", "sym:3", "--connection", "elements:{(0 1)}"],
        &["theta", "--group", "sym:3"],
        &["alpha", "--graph", "/nonexistent/graph.txt"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn efp_table_grid_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let grid = ok(&["efp-table", "--nmax", "5", "--csv", path_str(&csv), "--jobs", "2"]);
    assert!(grid.starts_with("k\\n"));
    assert_eq!(grid.matches('✓').count(), 15);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,theta,conjectured_max,checkmark,lp_rows,lp_cols,runtime_ms"));
    assert_eq!(lines.count(), 15);
    assert!(text.contains("\n4,1,6,6,"));
}

#[test]
fn chartable_validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("s4.json");
    ok(&["chartable", "--group", "sym:4", "--out", path_str(&good)]);
    assert_eq!(
        ok(&["chartable", "validate", path_str(&good), "--group", "sym:4"]),
        "valid character table: 5 irreps, group order 24, matches the group\n"
    );
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&good).unwrap()).unwrap();
    v["entries"][1][1] = Value::from("2");
    let bad = dir.path().join("bad.json");
    fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["chartable", "validate", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["chartable", "validate", path_str(&good), "--group", "sym:3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_sdpa_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("cyclic:5", "elements:{1,4}", "A", "[5]", 6),
        ("cyclic:5", "elements:{1,4}", "C", "[1, 1, 1, 1, 1]", 3),
        ("sym:3", "efp:1", "A", "[6]", 7),
        ("sym:3", "efp:1", "C", "[1, 2, 1]", 2),
    ];
    for (group, conn, form, blocks, count) in cases {
        let out = dir.path().join(format!("{form}.sdpa"));
        let msg = ok(&["export-sdpa", "--group", group, "--connection", conn, "--formulation", form, "--out", path_str(&out)]);
        assert!(msg.contains(&format!("formulation {form}, blocks {blocks}, {count} constraints")), "{msg}");
        let text = fs::read_to_string(&out).unwrap();
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('"')).collect();
        assert_eq!(body[0].trim(), count.to_string());
    }
    let out = run(&["export-sdpa", "--group", "sym:4", "--connection", "efp:1", "--formulation", "C", "--out", "/dev/null"]);
    assert_eq!(out.status.code(), Some(2), "S_4 needs explicit irreps for C");
}

#[test]
fn bochner_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let yes = dir.path().join("yes.json");
    let no = dir.path().join("no.json");
    // the regular character is positive; the sign character's negative is not
    fs::write(&yes, r#"{"class_values": ["6", "0", "0"]}"#).unwrap();
    fs::write(&no, r#"{"class_values": ["-1", "1", "-1"]}"#).unwrap();
    assert_eq!(ok(&["bochner", "--group", "sym:3", "--function", path_str(&yes)]), "positive type: yes\n");
    let verdict = ok(&["bochner", "--group", "sym:3", "--function", path_str(&no)]);
    assert!(verdict.starts_with("positive type: no (irrep [1,1,1]: "), "{verdict}");
    let z = dir.path().join("z.json");
    fs::write(&z, r#"{"values": [[2, 0], [0, 1], [0, 0], [0, -1]]}"#).unwrap();
    assert_eq!(ok(&["bochner", "--group", "cyclic:4", "--function", path_str(&z)]), "positive type: yes\n");
}

#[test]
fn blowup_of_the_five_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.txt");
    let action = dir.path().join("z5.txt");
    fs::write(&graph, "vertices 5 edges 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    fs::write(&action, "generators 1 5\n1 2 3 4 0\n").unwrap();
    let out = ok(&["blowup", "--graph", path_str(&graph), "--action", path_str(&action), "--alpha"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("connection set (2 elements): {"), "{out}");
    assert_eq!(&lines[1..], ["alpha(Cay) = 2", "alpha(graph) = 2"]);
    let dihedral = dir.path().join("d5.txt");
    fs::write(&dihedral, "generators 2 5\n1 2 3 4 0\n0 4 3 2 1\n").unwrap();
    let out = ok(&["blowup", "--graph", path_str(&graph), "--action", path_str(&dihedral), "--alpha"]);
    assert!(out.contains("alpha(Cay) = 4\n") && out.ends_with("alpha(graph) = 2\n"), "{out}");
}

#[test]
fn help_documents_formats_and_exit_codes() {
    let help = ok(&["--help"]);
    for needle in ["sym:n", "efp:k", "SDPA", "Exit codes"] {
        assert!(help.contains(needle), "{needle}");
    }
    assert_eq!(run(&["theta", "--bogus"]).status.code(), Some(2));
}
