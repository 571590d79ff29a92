use std::path::PathBuf;

use plane_alexander::cli::{run_command, CommandOutput};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn run(args: &[&str]) -> CommandOutput {
    let mut argv = vec!["plane-alexander"];
    argv.extend_from_slice(args);
    run_command(argv)
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

const CORPUS: [&str; 9] = [
    "node",
    "tacnode",
    "three-lines",
    "cusp-tangent-line",
    "cusp-transverse-line",
    "tangent-cusps",
    "cusp",
    "two-pairs",
    "smooth",
];

#[test]
fn node_alexander() {
    let out = run(&["alexander", &data("node")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1\t0,0\n");
    assert_eq!(
        run(&["alexander", "--via", "poincare", &data("node")]).stdout,
        out.stdout
    );
}

#[test]
fn three_pipelines_agree_byte_for_byte() {
    for name in CORPUS {
        let outs: Vec<String> = ["graph", "poincare", "fibers"]
            .iter()
            .map(|via| {
                let o = run(&["alexander", "--via", via, &data(name)]);
                assert_eq!(o.code, 0, "{name} via {via}: {}", o.stderr);
                o.stdout
            })
            .collect();
        assert_eq!(outs[0], outs[1], "{name}");
        assert_eq!(outs[0], outs[2], "{name}");
    }
}

#[test]
fn output_is_sorted_lexicographically() {
    let out = run(&["alexander", &data("tangent-cusps")]);
    let exps: Vec<Vec<i64>> = out
        .stdout
        .lines()
        .map(|l| {
            l.split('\t')
                .nth(1)
                .unwrap()
                .split(',')
                .map(|x| x.parse().unwrap())
                .collect()
        })
        .collect();
    assert!(exps.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(out.stdout.lines().next(), Some("1\t0,0"));
}

#[test]
fn resolve_then_alexander_from_graph() {
    for name in CORPUS {
        let dir = tempfile::tempdir().unwrap();
        let graph = dir.path().join("graph.json");
        let out = run(&["resolve", &data(name), "--out", graph.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.is_empty());
        let from_graph = run(&["alexander", graph.to_str().unwrap()]);
        let from_curve = run(&["alexander", &data(name)]);
        assert_eq!(from_graph.code, 0, "{}", from_graph.stderr);
        assert_eq!(from_graph.stdout, from_curve.stdout, "{name}");
        assert_eq!(
            run(&["resolve", &data(name)]).stdout,
            std::fs::read_to_string(&graph).unwrap()
        );
    }
}

#[test]
fn poincare_fibers_and_semigroup() {
    let out = run(&["poincare", &data("three-lines")]);
    assert_eq!(out.stdout, "1\t0,0,0\n-1\t1,1,1\n");
    let out = run(&["fibers", &data("node")]);
    assert_eq!(out.stdout, "0,0\t1\n0,1\t0\n1,0\t0\n1,1\t0\n");
    let out = run(&["semigroup", &data("cusp")]);
    assert_eq!(
        out.stdout,
        "conductor\t2\ngenerators\t2,3\nmember\t0\nmember\t2\n"
    );
    let out = run(&["semigroup", &data("node")]);
    assert_eq!(out.stdout, "conductor\t1,1\nmember\t0,0\nmember\t1,1\n");
    let out = run(&["alexander", "--bound", "5", &data("cusp")]);
    assert_eq!(out.stdout, "1\t0\n1\t2\n1\t3\n1\t4\n1\t5\n");
}

#[test]
fn verify_reports() {
    let out = run(&["verify", &data("tacnode")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 6);
    assert!(out.stdout.lines().all(|l| l.starts_with("PASS\t")));
    let out = run(&["verify", &data("cusp")]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout
            .lines()
            .filter(|l| l.starts_with("SKIP\t"))
            .count(),
        1
    );
}

#[test]
fn windows() {
    let out = run(&["poincare", "--window", "9,9", &data("tacnode")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1\t0,0\n1\t1,1\n");
    let out = run(&["poincare", "--window", "3,3", &data("tacnode")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("WindowTooSmall"));
}

#[test]
fn exit_codes() {
    let bad_json = temp_file("{\"branches\": [");
    assert_eq!(
        run(&["alexander", bad_json.path().to_str().unwrap()]).code,
        2
    );
    let non_primitive = temp_file(r#"{"branches":[{"x":[[2,"1"]],"y":[[4,"1"]]}]}"#);
    let out = run(&["alexander", non_primitive.path().to_str().unwrap()]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("NonPrimitive"));
    let cycle = temp_file(
        r#"{"r":1,"vertices":[{"id":1,"m":[1]},{"id":2,"m":[2]},{"id":3,"m":[3]}],
            "edges":[[1,2],[2,3],[1,3]],"arrows":[{"vertex":3,"branch":1}],"root":1}"#,
    );
    let out = run(&["alexander", cycle.path().to_str().unwrap()]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("NotATree"));
    let same_germ =
        temp_file(r#"{"branches":[{"x":[[2,"1"]],"y":[[3,"1"]]},{"x":[[2,"1"]],"y":[[3,"-1"]]}]}"#);
    let out = run(&[
        "alexander",
        "--budget",
        "10",
        same_germ.path().to_str().unwrap(),
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("BudgetExceeded"));
    assert_eq!(run(&["transmogrify", &data("node")]).code, 64);
}

#[test]
fn binary_matches_in_process_run() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_plane-alexander"))
        .args(["alexander", "--via", "fibers", &data("cusp-tangent-line")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let expected = run(&["alexander", &data("cusp-tangent-line")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected.stdout);
    assert_eq!(expected.stdout, "1\t0,0\n1\t2,1\n1\t4,2\n");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_plane-alexander"))
        .arg("nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
}
