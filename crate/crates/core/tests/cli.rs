use std::path::PathBuf;
use std::process::{Command, Output};

fn wfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wfs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_worked_example() {
    let o = wfs(&[
        "solve",
        &fixture("worked_example.lp"),
        "--algorithm",
        "topdown",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "true: a b c\nfalse: d e f g h i j k\nunknown:\n"
    );
}

#[test]
fn solve_two_cycle_json() {
    for alg in ["vg", "alg2", "topdown"] {
        let o = wfs(&[
            "solve",
            &fixture("two_cycle.lp"),
            "--algorithm",
            alg,
            "--format",
            "json",
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            stdout(&o),
            "{\"true\":[],\"false\":[],\"unknown\":[\"a\",\"b\"]}\n"
        );
    }
}

#[test]
fn solve_non_lp1() {
    let o = wfs(&["solve", &fixture("nonlp1.lp"), "--algorithm", "topdown"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wfs(&[
        "solve",
        &fixture("nonlp1.lp"),
        "--algorithm",
        "topdown",
        "--fallback",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true: a b c\nfalse: d\nunknown:\n");
}

#[test]
fn parse_errors_exit_one() {
    let dir = std::env::temp_dir().join(format!("wfs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad: PathBuf = dir.join("bad.lp");
    std::fs::write(&bad, "x :- not.").unwrap();
    let o = wfs(&["solve", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column 9"));
    assert_eq!(
        wfs(&["solve", "/nonexistent/file.lp"]).status.code(),
        Some(1)
    );
}

#[test]
fn trace_json_lines() {
    let dir = std::env::temp_dir().join(format!("wfs-trace-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("trace.jsonl");
    let o = wfs(&[
        "solve",
        &fixture("worked_example.lp"),
        "--trace-json",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&trace).unwrap();
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines
        .iter()
        .any(|v| v["event"] == "merge" && v["members"] == serde_json::json!(["g", "h", "j", "k"])));
    assert!(lines
        .iter()
        .any(|v| v["event"] == "report" && v["v"] == serde_json::json!(["g", "h", "j", "k"])));
    let first_iter = lines.iter().find(|v| v["event"] == "iter").unwrap();
    assert_eq!(first_iter["i"], 1);
    assert_eq!(first_iter["dt"], serde_json::json!(["a", "b", "c"]));
}

#[test]
fn check_command() {
    assert_eq!(wfs(&["check", "--count", "0"]).status.code(), Some(0));
    let o = wfs(&[
        "check",
        "--count",
        "100",
        "--max-atoms",
        "12",
        "--seed",
        "7",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn bench_and_gen() {
    let o = wfs(&[
        "bench",
        "--family",
        "guarded_chain+ballast",
        "--sizes",
        "4,8",
        "--algorithms",
        "vg,topdown",
        "--reps",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "family,n,algorithm,atoms,size,iterations,wall_time_ns,in_list_inspections"
    );
    assert_eq!(lines.len(), 1 + 2 * 2 * 2);
    let o = wfs(&["gen", "--family", "pos_loop_chain", "--n", "3"]);
    assert_eq!(stdout(&o), "a1 :- a2.\na2 :- a3.\na3 :- a1.\n");
}

#[test]
fn usage_errors() {
    assert_eq!(wfs(&["solve"]).status.code(), Some(64));
    assert_eq!(
        wfs(&["solve", "x.lp", "--algorithm", "fast"]).status.code(),
        Some(64)
    );
    assert_eq!(wfs(&["--help"]).status.code(), Some(0));
}
