use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_c2crystal"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("c2crystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_vector_crystal_as_dot() {
    let (code, out, _) = bin(&["generate", "--shape", "1,0", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "digraph crystal {\n  n0 [label=\"1\"];\n  n1 [label=\"2\"];\n  n2 [label=\"-2\"];\n  n3 [label=\"-1\"];\n  \
         n0 -> n1 [label=\"1\"];\n  n1 -> n2 [label=\"2\"];\n  n2 -> n3 [label=\"1\"];\n}\n"
    );
}

#[test]
fn generate_trivial_crystal_as_json() {
    let (code, out, _) = bin(&["generate", "--shape", "0,0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);
    assert_eq!(v["source"], 0);
}

#[test]
fn generate_rejects_bad_shapes() {
    assert_eq!(bin(&["generate", "--shape", "1,2"]).0, 2);
    assert_eq!(bin(&["generate", "--shape", "x"]).0, 2);
    assert_eq!(bin(&["generate"]).0, 2);
}

#[test]
fn generate_writes_to_file() {
    let path = temp_path("g.dot");
    let (code, out, _) = bin(&[
        "generate",
        "--shape",
        "1,1",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph crystal {"));
}

#[test]
fn stats_of_worked_example() {
    let (code, out, _) = bin(&["stats", "1 1 2 -2 -2 -1 / 2 -2 -2 -1"]);
    assert_eq!(code, 0);
    assert!(out.contains("stats: A=2 B=2 C=1 D=2"), "{out}");
    assert!(out.contains("e1 acts on the right block"), "{out}");
    assert!(out.contains("e2 acts on the left block"), "{out}");
}

#[test]
fn stats_classifies_degree_seven() {
    let (code, out, _) = bin(&["stats", "2 -2 -1 / -2"]);
    assert_eq!(code, 0);
    assert!(out.contains("relation: degree 7 (C=D, A=B)"), "{out}");

    let (code, out, _) = bin(&["stats", "2 -2 -1 / -2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["relation"]["degree"], 7);
    assert_eq!(v["stats"], serde_json::json!({ "a": 1, "b": 1, "c": 1, "d": 1 }));
}

#[test]
fn stats_rejects_invalid_tableaux() {
    let (code, out, err) = bin(&["stats", "1 / -1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("condition 3"), "{err}");
    assert_eq!(bin(&["stats", "1 3"]).0, 2);
}

#[test]
fn apply_chain() {
    let (code, out, _) = bin(&["apply", "1", "f1", "f2", "f1", "f1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "start: 1\nf1: 2\nf2: -2\nf1: -1\nf1: 0\n");
    let (code, out, _) = bin(&["apply", "-1", "e1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "-2");
    assert_eq!(bin(&["apply", "1", "e3"]).0, 2);
}

#[test]
fn verify_vacuous_shape() {
    let (code, out, _) = bin(&["verify", "--shape", "1,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 applicable vertices"), "{out}");
}

#[test]
fn verify_shape_with_all_degrees() {
    let (code, out, _) = bin(&["verify", "--shape", "4,1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let counts = &v["shapes"][0]["e_side"]["degree_counts"];
    for d in ["2", "4", "5", "7"] {
        assert!(counts[d].as_u64().unwrap() > 0, "{counts}");
    }
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_range_with_seed() {
    let (code, out, _) = bin(&["verify", "--max-l1", "4", "--seed", "11"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("shape ")).count(), 15);
    assert!(
        out.contains("confluence: 10000 random words, 0 disagreements (seed 11)"),
        "{out}"
    );
    assert!(out.trim_end().ends_with("15 shapes: pass"));
}

#[test]
fn verify_needs_a_shape() {
    assert_eq!(bin(&["verify"]).0, 2);
    assert_eq!(bin(&["verify", "--shape", "1,0", "--max-l1", "2"]).0, 2);
}

#[test]
fn audit_round_trip_is_clean() {
    for shape in ["0,0", "1,0", "2,1", "3,2", "5,5"] {
        let path = temp_path(&format!("g{}.json", shape.replace(',', "_")));
        assert_eq!(
            bin(&["generate", "--shape", shape, "--out", path.to_str().unwrap()]).0,
            0
        );
        let (code, out, _) = bin(&["audit", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{shape}: {out}");
        assert!(out.trim_end().ends_with("clean"));
    }
}

#[test]
fn audit_flags_a_recolored_edge() {
    let (_, json, _) = bin(&["generate", "--shape", "2,1"]);
    let mut doc: Value = serde_json::from_str(&json).unwrap();
    let color = doc["edges"][0]["color"].as_u64().unwrap();
    doc["edges"][0]["color"] = Value::from(3 - color);
    let path = temp_path("recolored.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let (code, out, _) = bin(&["audit", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("not a doubly laced crystal"), "{out}");
    let (code, out, _) = bin(&["audit", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["clean"], false);
}

#[test]
fn audit_bare_graphs() {
    let path = temp_path("single.json");
    std::fs::write(&path, r#"{"vertices":[{"id":7}],"edges":[],"source":7}"#).unwrap();
    assert_eq!(bin(&["audit", path.to_str().unwrap()]).0, 0);

    // a two-colored square is a degree-2 relation
    let path = temp_path("square.json");
    std::fs::write(
        &path,
        r#"{"vertices":[{"id":0},{"id":1},{"id":2},{"id":3}],
            "edges":[{"from":0,"to":1,"color":1},{"from":0,"to":2,"color":2},
                     {"from":1,"to":3,"color":2},{"from":2,"to":3,"color":1}],
            "source":0}"#,
    )
    .unwrap();
    let (code, out, _) = bin(&["audit", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("1 applicable vertices"));
}

#[test]
fn audit_schema_errors() {
    let path = temp_path("bad.json");
    std::fs::write(
        &path,
        r#"{"vertices":[{"id":0}],"edges":[{"from":0,"to":5,"color":1}],"source":0}"#,
    )
    .unwrap();
    assert_eq!(bin(&["audit", path.to_str().unwrap()]).0, 2);
    std::fs::write(
        &path,
        r#"{"vertices":[{"id":0}],"edges":[{"from":0,"to":0,"color":3}],"source":0}"#,
    )
    .unwrap();
    assert_eq!(bin(&["audit", path.to_str().unwrap()]).0, 2);
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(bin(&["audit", path.to_str().unwrap()]).0, 2);
    assert_eq!(bin(&["audit", "/nonexistent/graph.json"]).0, 2);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bin(&["--help"]).0, 0);
    assert_eq!(bin(&["--version"]).0, 0);
    assert_eq!(bin(&["nonsense"]).0, 2);
}
