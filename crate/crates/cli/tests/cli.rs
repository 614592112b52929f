use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use szeged_cli::GraphDocument;
use szeged_core::index::{ti_direct, IndexDescriptor};
use szeged_core::rational::to_exact_string;
use tempfile::TempDir;

fn szeged(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szeged")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_graph(dir: &TempDir, name: &str, n: usize, edges: &[(usize, usize)]) -> PathBuf {
    let vertices: Vec<String> = (0..n).map(|i| format!(r#"{{"id":{i}}}"#)).collect();
    let edges: Vec<String> = edges.iter().map(|(u, v)| format!(r#"{{"u":{u},"v":{v}}}"#)).collect();
    let path = dir.path().join(name);
    std::fs::write(&path, format!(r#"{{"vertices":[{}],"edges":[{}]}}"#, vertices.join(","), edges.join(","))).unwrap();
    path
}

fn cycle(dir: &TempDir, n: usize) -> PathBuf {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    write_graph(dir, &format!("c{n}.json"), n, &edges)
}

fn path_graph(dir: &TempDir, n: usize) -> PathBuf {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    write_graph(dir, &format!("p{n}.json"), n, &edges)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn value_line(text: &str) -> &str {
    text.lines().find_map(|l| l.strip_prefix("value")).unwrap().trim()
}

#[test]
fn compute_on_c6_and_p3() {
    let dir = TempDir::new().unwrap();
    let c6 = cycle(&dir, 6);
    assert_eq!(value_line(&stdout(&szeged(&["compute", s(&c6), "--index", "Sz", "--method", "direct"]))), "54");
    let cut = stdout(&szeged(&["compute", s(&c6), "--index", "Sz", "--method", "cut", "--partition", "theta"]));
    assert_eq!(value_line(&cut), "54");
    assert!(cut.contains("decimal 54.0000000000"));
    let p3 = path_graph(&dir, 3);
    assert_eq!(value_line(&stdout(&szeged(&["compute", s(&p3), "--index", "Sz", "--method", "tree"]))), "4");
}

#[test]
fn custom_expression_matches_catalog() {
    let dir = TempDir::new().unwrap();
    let c6 = cycle(&dir, 6);
    let named = stdout(&szeged(&["compute", s(&c6), "--index", "w+Sz_e*"]));
    let custom =
        stdout(&szeged(&["compute", s(&c6), "--index", "expr:(x3+x6/2)*(x4+x6/2)", "--weights", "degree-sum"]));
    assert_eq!(value_line(&named), value_line(&custom));
}

#[test]
fn json_format_carries_numerator_and_denominator() {
    let dir = TempDir::new().unwrap();
    let k2 = write_graph(&dir, "k2.json", 2, &[(0, 1)]);
    let out = stdout(&szeged(&["compute", s(&k2), "--index", "w+Sz_e*", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "1/2");
    assert_eq!((v["p"].as_str(), v["q"].as_str()), (Some("1"), Some("2")));
}

#[test]
fn classes_output() {
    let dir = TempDir::new().unwrap();
    assert_eq!(stdout(&szeged(&["classes", s(&cycle(&dir, 6))])), "[[0,3],[1,4],[2,5]]\n");
    assert_eq!(stdout(&szeged(&["classes", s(&cycle(&dir, 5))])), "[[0,1,2,3,4]]\n");
    assert_eq!(stdout(&szeged(&["classes", s(&path_graph(&dir, 4))])), "[[0],[1],[2]]\n");
}

fn read_doc(text: &str) -> GraphDocument {
    serde_json::from_str(text).unwrap()
}

fn weights_of(doc: &GraphDocument) -> (Vec<String>, Vec<String>, Vec<String>, Vec<String>) {
    let g = doc.to_graph(szeged_core::WeightMode::Stored).unwrap();
    let f = |xs: &[szeged_core::Rational]| xs.iter().map(to_exact_string).collect::<Vec<_>>();
    (f(g.vertex_weight()), f(g.vertex_strength()), f(g.edge_weight()), f(g.edge_strength()))
}

#[test]
fn quotients() {
    let dir = TempDir::new().unwrap();
    let doc = read_doc(&stdout(&szeged(&["quotient", s(&cycle(&dir, 6)), "--group", "0"])));
    let (wv, sv, we, se) = weights_of(&doc);
    assert_eq!(
        (wv, sv, we, se),
        (vec!["3".into(), "3".into()], vec!["2".into(), "2".into()], vec!["2".into()], vec!["2".into()])
    );

    let k2 = write_graph(&dir, "k2.json", 2, &[(0, 1)]);
    let doc = read_doc(&stdout(&szeged(&["quotient", s(&k2), "--group", "0"])));
    assert_eq!(weights_of(&doc).0, vec!["1", "1"]);

    let co1 = dir.path().join("co1.json");
    stdout(&szeged(&["generate", "coronoid", "--n", "1", "--out", s(&co1)]));
    let groups = stdout(&szeged(&["classes", s(&co1)]));
    let count = serde_json::from_str::<Vec<Vec<usize>>>(&groups).unwrap().len();
    let found = (0..count).any(|i| {
        let doc = read_doc(&stdout(&szeged(&["quotient", s(&co1), "--group", &i.to_string()])));
        weights_of(&doc).0 == ["24", "24"]
    });
    assert!(found, "no Co_1 class cuts the coronoid into halves of 24");
}

#[test]
fn generated_sizes() {
    for (args, n, m) in [
        (vec!["phenylene-star", "--n", "2"], 42, 54),
        (vec!["coronoid", "--n", "1"], 48, 60),
        (vec!["linear-chain", "--h", "3"], 14, 16),
    ] {
        let mut full = vec!["generate"];
        full.extend(args);
        let doc = read_doc(&stdout(&szeged(&full)));
        assert_eq!((doc.vertices.len(), doc.edges.len()), (n, m));
    }
}

#[test]
fn generate_from_cell_file() {
    let dir = TempDir::new().unwrap();
    let cells = dir.path().join("cells.json");
    std::fs::write(&cells, "[[0,0],[1,0],[0,1]]").unwrap();
    let doc = read_doc(&stdout(&szeged(&["generate", "benzenoid", "--cells", s(&cells)])));
    assert_eq!((doc.vertices.len(), doc.edges.len()), (13, 15));
    assert_eq!(szeged(&["generate", "phenylene", "--cells", s(&cells)]).status.code(), Some(2));

    std::fs::write(&cells, "[[0,0],[1,0],[1,1]]").unwrap();
    let doc = read_doc(&stdout(&szeged(&["generate", "phenylene", "--cells", s(&cells)])));
    assert_eq!((doc.vertices.len(), doc.edges.len()), (18, 22));

    std::fs::write(&cells, "[[0,0],[5,5]]").unwrap();
    assert_eq!(szeged(&["generate", "benzenoid", "--cells", s(&cells)]).status.code(), Some(2));
}

fn family_values(args: &[&str]) -> Vec<String> {
    let mut full = vec!["family"];
    full.extend(args);
    let text = stdout(&szeged(&full));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,p,q"));
    lines.map(|l| l.split(',').skip(1).collect::<Vec<_>>().join("/").trim_end_matches("/1").to_string()).collect()
}

#[test]
fn family_sweeps() {
    assert_eq!(
        family_values(&["--kind", "phenylene-star", "--index", "w+Sz_e*", "--from", "1", "--to", "3"]),
        ["25020", "143904", "430980"]
    );
    assert_eq!(family_values(&["--kind", "coronoid", "--index", "PI_v^s", "--to", "1"]), ["83040"]);
    assert_eq!(family_values(&["--kind", "coronoid", "--index", "w+Sz_e*", "--to", "1"]), ["216792"]);
    let json =
        stdout(&szeged(&["family", "--kind", "coronoid", "--index", "w+Sz_e*", "--to", "2", "--format", "json"]));
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows[1]["p"], "1726902");
    assert_eq!(rows[1]["q"], "1");
}

#[test]
fn verify_reports() {
    let dir = TempDir::new().unwrap();
    let c6 = cycle(&dir, 6);
    let out = szeged(&["verify", s(&c6), "--index", "Sz"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("agree\n"));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "[[0,1],[2,5],[3,4]]").unwrap();
    let out = szeged(&["verify", s(&c6), "--index", "Sz", "--partition", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("split"));

    let tree = write_graph(&dir, "t.json", 6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
    let text = stdout(&szeged(&["verify", s(&tree), "--index", "Mo_t"]));
    assert!(text.contains("tree") && text.ends_with("agree\n"));

    let ph = dir.path().join("ph.json");
    let part = dir.path().join("ph.partition.json");
    stdout(&szeged(&["generate", "phenylene-star", "--n", "2", "--out", s(&ph), "--partition-out", s(&part)]));
    let out = szeged(&["verify", s(&ph), "--index", "PI_v^s", "--partition", s(&part)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let split = write_graph(&dir, "split.json", 4, &[(0, 1), (2, 3)]);
    assert_eq!(szeged(&["compute", s(&split), "--index", "Sz"]).status.code(), Some(3));
    assert_eq!(szeged(&["classes", s(&split)]).status.code(), Some(3));
    let c6 = cycle(&dir, 6);
    assert_eq!(szeged(&["compute", s(&c6), "--index", "Sz", "--method", "tree"]).status.code(), Some(3));
    assert_eq!(szeged(&["compute", s(&c6), "--index", "nope"]).status.code(), Some(2));
    assert_eq!(szeged(&["compute", s(&c6), "--index", "expr:x1-x2"]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(szeged(&["compute", s(&missing), "--index", "Sz"]).status.code(), Some(2));
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, r#"{"vertices":[{"id":0}],"edges":[{"u":0,"v":0}]}"#).unwrap();
    assert_eq!(szeged(&["compute", s(&garbage), "--index", "Sz"]).status.code(), Some(2));
}

#[test]
fn generated_documents_round_trip() {
    let dir = TempDir::new().unwrap();
    for (kind, flag, param) in [("phenylene-star", "--n", "2"), ("coronoid", "--n", "1"), ("linear-chain", "--h", "4")]
    {
        let file = dir.path().join(format!("{kind}.json"));
        stdout(&szeged(&["generate", kind, flag, param, "--out", s(&file)]));
        let g = GraphDocument::read(&file).unwrap().to_graph(szeged_core::WeightMode::Unit).unwrap();
        for name in ["w+Sz_e*", "PI_v^s", "Sz*"] {
            let idx = IndexDescriptor::catalog(name).unwrap();
            let expected = to_exact_string(&ti_direct(&g, &idx).unwrap());
            let out = stdout(&szeged(&["compute", s(&file), "--index", name]));
            assert_eq!(value_line(&out), expected, "{kind} {name}");
            let cut = stdout(&szeged(&["compute", s(&file), "--index", name, "--method", "cut"]));
            assert_eq!(value_line(&cut), expected, "{kind} {name} cut");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let runs = |args: &[&str]| (szeged(args).stdout, szeged(args).stdout);
    let c6 = cycle(&dir, 6);
    for args in [
        vec!["generate", "coronoid", "--n", "2"],
        vec!["classes", s(&c6)],
        vec!["quotient", s(&c6), "--group", "1"],
        vec!["compute", s(&c6), "--index", "Sz_t", "--method", "cut"],
        vec!["family", "--kind", "phenylene-star", "--index", "Mo", "--to", "3", "--format", "json"],
    ] {
        let (a, b) = runs(&args);
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}
