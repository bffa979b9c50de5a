use std::path::{Path, PathBuf};
use std::process::Command;

use colorconn_cli::document::GraphDocument;
use colorconn_cli::report::ResultDocument;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn report(&self) -> ResultDocument {
        serde_json::from_str(&self.stdout).expect("stdout holds a result document")
    }
}

fn colorconn(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_colorconn"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    Run {
        code: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn path_doc(n: usize, colors: Option<&[u32]>) -> String {
    let vertices: Vec<String> = (0..n).map(|i| format!("\"{i}\"")).collect();
    let edges: Vec<String> = (1..n)
        .map(|i| match colors {
            Some(c) => format!("[\"{}\", \"{i}\", {}]", i - 1, c[i - 1]),
            None => format!("[\"{}\", \"{i}\"]", i - 1),
        })
        .collect();
    format!(
        r#"{{"version": "colorconn-graph/1", "vertices": [{}], "edges": [{}]}}"#,
        vertices.join(", "),
        edges.join(", ")
    )
}

const STAR3: &str = r#"{"version": "colorconn-graph/1", "vertices": ["c", "a", "b", "d"],
  "edges": [["c", "a"], ["c", "b"], ["c", "d"]]}"#;
const STAR4: &str = r#"{"version": "colorconn-graph/1", "vertices": ["c", "a", "b", "d", "e"],
  "edges": [["c", "a"], ["c", "b"], ["c", "d"], ["c", "e"]]}"#;
const C5: &str = r#"{"version": "colorconn-graph/1", "vertices": ["a", "b", "c", "d", "e"],
  "edges": [["a", "b", 1], ["b", "c", 1], ["c", "d", 1], ["d", "e", 1], ["e", "a", 2]]}"#;

#[test]
fn reduce_sizes() {
    let dir = TempDir::new().unwrap();
    file(&dir, "f.cnf", "c one clause\np cnf 3 1\n1 2 3 0\n");
    for (kind, n) in [("mc", 39), ("cfc", 48)] {
        let run = colorconn(dir.path(), &["reduce", kind, "f.cnf", "g.json"]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        let doc =
            GraphDocument::parse(&std::fs::read_to_string(dir.path().join("g.json")).unwrap())
                .unwrap();
        assert_eq!(doc.vertices.len(), n);
        assert!(!doc.is_colored());
        assert!(doc.meta.is_some());
    }
}

#[test]
fn reduce_rejects_repeated_variables() {
    let dir = TempDir::new().unwrap();
    file(&dir, "f.cnf", "p cnf 3 1\n1 1 2 0\n");
    for kind in ["pc", "cfc", "mc"] {
        let run = colorconn(dir.path(), &["reduce", kind, "f.cnf", "g.json"]);
        assert_eq!(run.code, 2);
        assert!(run.stderr.contains("repeats"), "{}", run.stderr);
    }
    assert!(!dir.path().join("g.json").exists());
}

#[test]
fn reduce_rejects_malformed_cnf() {
    let dir = TempDir::new().unwrap();
    for text in ["p cnf 3 2\n1 2 3 0\n", "p cnf 3 1\n1 2 0\n", "garbage\n"] {
        file(&dir, "f.cnf", text);
        assert_eq!(
            colorconn(dir.path(), &["reduce", "pc", "f.cnf", "g.json"]).code,
            2
        );
    }
    assert_eq!(
        colorconn(dir.path(), &["reduce", "pc", "missing.cnf", "g.json"]).code,
        2
    );
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    file(&dir, "p121.json", &path_doc(4, Some(&[1, 2, 1])));
    file(&dir, "p111.json", &path_doc(4, Some(&[1, 1, 1])));
    file(&dir, "c5.json", C5);

    let run = colorconn(dir.path(), &["verify", "proper", "p121.json"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.report().verdict, Some(true));

    let run = colorconn(dir.path(), &["verify", "cfc", "p111.json"]);
    assert_eq!(run.code, 1);
    let report = run.report();
    assert_eq!(report.verdict, Some(false));
    assert_eq!(report.failing_pair, Some(("0".into(), "2".into())));

    let run = colorconn(dir.path(), &["verify", "mono", "c5.json", "--witnesses"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.report().witnesses.len(), 10);
}

#[test]
fn verify_cck_needs_k() {
    let dir = TempDir::new().unwrap();
    file(&dir, "p.json", &path_doc(4, Some(&[1, 2, 3])));
    assert_eq!(colorconn(dir.path(), &["verify", "cck", "p.json"]).code, 2);
    assert_eq!(
        colorconn(dir.path(), &["verify", "cck", "p.json", "--k", "3"]).code,
        0
    );
    let run = colorconn(dir.path(), &["verify", "cck", "p.json", "--k", "2"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.report().failing_pair, Some(("0".into(), "3".into())));
    assert_eq!(
        colorconn(dir.path(), &["verify", "mono", "p.json", "--k", "2"]).code,
        2
    );
}

#[test]
fn verify_errors() {
    let dir = TempDir::new().unwrap();
    file(&dir, "plain.json", &path_doc(3, None));
    file(
        &dir,
        "split.json",
        r#"{"version": "colorconn-graph/1", "vertices": ["a", "b", "c"], "edges": [["a", "b", 1]]}"#,
    );
    file(&dir, "junk.json", "{\"version\": 3}");
    for name in ["plain.json", "split.json", "junk.json", "none.json"] {
        assert_eq!(
            colorconn(dir.path(), &["verify", "mono", name]).code,
            2,
            "{name}"
        );
    }
}

#[test]
fn solve_examples() {
    let dir = TempDir::new().unwrap();
    file(&dir, "c5.json", C5);
    file(&dir, "p4.json", &path_doc(4, None));
    file(&dir, "p6.json", &path_doc(6, None));
    for (args, value, edges) in [
        (vec!["solve", "mc", "c5.json"], 2, 5),
        (vec!["solve", "cfc", "p4.json"], 2, 3),
        (vec!["solve", "cck", "p6.json", "--k", "3"], 3, 5),
        (vec!["solve", "pc", "p4.json"], 2, 3),
    ] {
        let run = colorconn(dir.path(), &args);
        assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
        let report = run.report();
        assert_eq!(report.value, Some(value), "{args:?}");
        assert!(report.verdict.is_none());
        assert_eq!(report.coloring.unwrap().len(), edges);
    }
}

#[test]
fn solve_writes_the_coloring() {
    let dir = TempDir::new().unwrap();
    file(&dir, "p4.json", &path_doc(4, None));
    assert_eq!(
        colorconn(
            dir.path(),
            &["solve", "cfc", "p4.json", "--out", "best.json"]
        )
        .code,
        0
    );
    assert_eq!(
        colorconn(dir.path(), &["verify", "cfc", "best.json"]).code,
        0
    );
}

#[test]
fn solve_reports_capacity() {
    let dir = TempDir::new().unwrap();
    file(&dir, "p30.json", &path_doc(30, None));
    let run = colorconn(dir.path(), &["solve", "pc", "p30.json"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("bound"), "{}", run.stderr);
}

#[test]
fn tree_cck_examples() {
    let dir = TempDir::new().unwrap();
    file(&dir, "p5.json", &path_doc(5, None));
    file(&dir, "k13.json", STAR3);
    file(&dir, "k14.json", STAR4);
    for (name, k, value) in [
        ("p5.json", "3", 3),
        ("k14.json", "1", 1),
        ("k13.json", "2", 3),
    ] {
        let run = colorconn(dir.path(), &["tree-cck", name, k]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        let report = run.report();
        assert_eq!(report.value, Some(value), "{name}");
        assert_eq!(
            report.details["witness_valid"],
            serde_json::Value::Bool(true)
        );
    }
}

#[test]
fn tree_cck_rejects_cycles() {
    let dir = TempDir::new().unwrap();
    file(&dir, "c5.json", C5);
    let run = colorconn(dir.path(), &["tree-cck", "c5.json", "2"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("tree"));
}

#[test]
fn export_dot() {
    let dir = TempDir::new().unwrap();
    file(&dir, "p3.json", &path_doc(3, None));
    file(&dir, "c5.json", C5);
    assert_eq!(
        colorconn(dir.path(), &["export-dot", "p3.json", "p3.dot"]).code,
        0
    );
    let dot = std::fs::read_to_string(dir.path().join("p3.dot")).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 2);
    assert_eq!(
        dot.lines()
            .filter(|l| l.starts_with("  \"") && !l.contains("--"))
            .count(),
        3
    );

    assert_eq!(
        colorconn(dir.path(), &["export-dot", "c5.json", "c5.dot"]).code,
        0
    );
    let dot = std::fs::read_to_string(dir.path().join("c5.dot")).unwrap();
    assert_eq!(dot.matches("color=").count(), 5);

    file(&dir, "f.cnf", "p cnf 3 1\n1 -2 3 0\n");
    assert_eq!(
        colorconn(dir.path(), &["reduce", "cfc", "f.cnf", "g.json"]).code,
        0
    );
    assert_eq!(
        colorconn(dir.path(), &["export-dot", "g.json", "g.dot"]).code,
        0
    );
    let dot = std::fs::read_to_string(dir.path().join("g.dot")).unwrap();
    let doc =
        GraphDocument::parse(&std::fs::read_to_string(dir.path().join("g.json")).unwrap()).unwrap();
    for v in &doc.vertices {
        assert!(dot.contains(&format!("\"{v}\"")), "{v}");
    }

    assert_eq!(
        colorconn(dir.path(), &["export-dot", "p3.json", "no/such/dir/p3.dot"]).code,
        2
    );
}

#[test]
fn reduce_then_verify() {
    let dir = TempDir::new().unwrap();
    file(&dir, "f.cnf", "p cnf 4 2\n1 -2 3 0\n-1 2 4 0\n");
    for (kind, check) in [("pc", "proper"), ("cfc", "cfc"), ("mc", "mono")] {
        let run = colorconn(
            dir.path(),
            &["reduce", kind, "f.cnf", "g.json", "--certify"],
        );
        assert_eq!(run.code, 0, "{kind}: {}", run.stderr);
        let run = colorconn(dir.path(), &["verify", check, "g.json"]);
        assert_eq!(run.code, 0, "{kind}: {}", run.stdout);
    }
}

#[test]
fn certify_reports_unsatisfiable_formulas() {
    let dir = TempDir::new().unwrap();
    // Every sign pattern on three variables: no satisfying assignment at all.
    let clauses: Vec<String> = (0..8)
        .map(|mask| {
            let lit = |i: i32| if mask >> (i - 1) & 1 == 1 { -i } else { i };
            format!("{} {} {} 0", lit(1), lit(2), lit(3))
        })
        .collect();
    file(
        &dir,
        "f.cnf",
        &format!("p cnf 3 8\n{}\n", clauses.join("\n")),
    );
    let run = colorconn(
        dir.path(),
        &["reduce", "pc", "f.cnf", "g.json", "--certify"],
    );
    assert_eq!(run.code, 1);
    assert!(!dir.path().join("g.json").exists());
}

#[test]
fn documents_round_trip_through_solve() {
    let dir = TempDir::new().unwrap();
    file(&dir, "f.cnf", "p cnf 3 1\n1 2 3 0\n");
    assert_eq!(
        colorconn(dir.path(), &["reduce", "mc", "f.cnf", "g.json"]).code,
        0
    );
    let text = std::fs::read_to_string(dir.path().join("g.json")).unwrap();
    assert_eq!(GraphDocument::parse(&text).unwrap().to_json(), text);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(colorconn(dir.path(), &[]).code, 2);
    assert_eq!(colorconn(dir.path(), &["frobnicate"]).code, 2);
    assert_eq!(
        colorconn(dir.path(), &["verify", "rainbow", "x.json"]).code,
        2
    );
    assert_eq!(colorconn(dir.path(), &["--help"]).code, 0);
}
