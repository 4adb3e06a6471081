use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn graphcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generated_board_verifies_against_its_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let (g, c) = (dir.path().join("q33.col"), dir.path().join("q33.txt"));
    assert_eq!(
        code(&graphcert(&[
            "gen",
            "--family",
            "queen",
            "--m",
            "3",
            "--n",
            "3",
            "--out",
            path(&g)
        ])),
        0
    );
    assert_eq!(
        code(&graphcert(&["color", "--m", "3", "--n", "3", "--out", path(&c)])),
        0
    );
    let o = graphcert(&[
        "--json",
        "verify",
        "coloring",
        "--graph",
        path(&g),
        "--coloring",
        path(&c),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["colors"], 8);
}

#[test]
fn corrupted_coloring_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let (g, c) = (dir.path().join("q.col"), dir.path().join("q.txt"));
    graphcert(&["gen", "--family", "queen", "--m", "3", "--n", "5", "--out", path(&g)]);
    graphcert(&["color", "--m", "3", "--n", "5", "--out", path(&c)]);
    let text = std::fs::read_to_string(&c).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let edges: Vec<usize> = (0..lines.len()).filter(|&i| !lines[i].starts_with('c')).collect();
    let color_of = |l: &str| l.split_whitespace().nth(2).unwrap().to_string();
    let first = color_of(&lines[edges[0]]);
    let mut f = lines[edges[1]].split_whitespace().map(String::from).collect::<Vec<_>>();
    f[2] = first;
    lines[edges[1]] = f.join(" ");
    std::fs::write(&c, lines.join("\n") + "\n").unwrap();
    let o = graphcert(&[
        "--json",
        "verify",
        "coloring",
        "--graph",
        path(&g),
        "--coloring",
        path(&c),
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["ok"], false);
}

#[test]
fn q_3_13_is_class_two_with_nineteen_colors() {
    let o = graphcert(&["--json", "queen", "color", "--m", "3", "--n", "13"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["class"], 2);
    assert_eq!(v["colors"], 19);
    assert_eq!(v["construction"], "overfull");
}

#[test]
fn json_result_has_stable_keys() {
    let o = graphcert(&["--json", "color", "--m", "4", "--n", "6"]);
    let v = json(&o);
    for key in ["ok", "family", "params", "class", "colors", "construction", "seed"] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
    assert_eq!(v["params"]["m"], 4);
}

#[test]
fn fixture_table_one_verifies() {
    let o = graphcert(&["--json", "keller", "verify-fixture", "--table", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["size"], 17);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&graphcert(&["color", "--m", "0", "--n", "3"])), 2);
    assert_eq!(code(&graphcert(&["color", "--m", "3"])), 2);
    assert_eq!(code(&graphcert(&["keller", "build", "--d", "6"])), 2);
    let o = graphcert(&["--json", "conjecture", "3"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["ok"], false);
}

#[test]
fn starved_kempe_search_exits_three() {
    let args = [
        "--budget-switches",
        "10",
        "--restarts",
        "1",
        "color",
        "--m",
        "5",
        "--n",
        "29",
        "--construction",
        "kempe",
    ];
    assert_eq!(code(&graphcert(&args)), 3);
}

#[test]
fn kempe_search_is_seeded() {
    let run = || {
        graphcert(&[
            "--json",
            "--seed",
            "7",
            "color",
            "--m",
            "5",
            "--n",
            "29",
            "--construction",
            "kempe",
        ])
    };
    let (a, b) = (run(), run());
    assert_eq!(code(&a), 0);
    assert_eq!(json(&a)["seed"], 7);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn survey_output_does_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let out = |jobs: &str| {
        let p = dir.path().join(format!("s{jobs}.csv"));
        let o = graphcert(&[
            "--jobs",
            jobs,
            "multicycle",
            "survey",
            "--m-max",
            "7",
            "--n-max",
            "25",
            "--out",
            path(&p),
        ]);
        assert_eq!(code(&o), 0);
        std::fs::read_to_string(p).unwrap()
    };
    let one = out("1");
    assert!(one.starts_with("m,n,sigma,"));
    assert_eq!(one, out("4"));
}

#[test]
fn conjecture_harnesses_pass_at_desk_scale() {
    for which in ["2", "4", "5", "9"] {
        let o = graphcert(&["--json", "conjecture", which, "--m-max", "7", "--n-max", "21"]);
        assert_eq!(
            code(&o),
            0,
            "conjecture {which}: {}",
            String::from_utf8_lossy(&o.stdout)
        );
    }
}

#[test]
fn mycielski_path_names_match() {
    let o = graphcert(&[
        "--json",
        "mycielski",
        "hampath",
        "--n",
        "9",
        "--from",
        "y1",
        "--to",
        "y6",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["path"][0], "y1");
    assert_eq!(v["path"][18], "y6");
}

#[test]
fn parity_witness_reports_no_path() {
    let o = graphcert(&["--json", "mycielski", "witness", "--n", "6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["path_exists"], false);
}

#[test]
fn doubled_cover_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (g, c) = (dir.path().join("g4.col"), dir.path().join("c.txt"));
    let o = graphcert(&["--json", "keller", "double-cover", "--table", "5", "--out", path(&c)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["size"], 26);
    graphcert(&["gen", "--family", "keller", "--d", "4", "--out", path(&g)]);
    let o = graphcert(&[
        "--json",
        "verify",
        "cover",
        "--graph",
        path(&g),
        "--cover",
        path(&c),
        "--keller-d",
        "4",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn g4_decomposition_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (g, c, pm) = (
        dir.path().join("g4.col"),
        dir.path().join("cycles.txt"),
        dir.path().join("pm.txt"),
    );
    graphcert(&["gen", "--family", "keller", "--d", "4", "--out", path(&g)]);
    let o = graphcert(&[
        "--json",
        "--long-run",
        "keller",
        "decompose",
        "--d",
        "4",
        "--out",
        path(&c),
        "--matching-out",
        path(&pm),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["size"], 85);
    let args = [
        "--json",
        "verify",
        "decomposition",
        "--graph",
        path(&g),
        "--cycles",
        path(&c),
        "--matching",
        path(&pm),
    ];
    let o = graphcert(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}
