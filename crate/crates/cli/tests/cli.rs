use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn thdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thdim"))
        .args(args)
        .output()
        .expect("run thdim")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("p {n} {}\n", edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn cycle(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn factor_count(out: &str) -> usize {
    let header: Vec<&str> = out.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header[0], "td-decomp");
    header[2].parse().unwrap()
}

#[test]
fn recognize_answers_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let k4 = write(
        &dir,
        "k4.txt",
        &edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    );
    let o = thdim(&["recognize", s(&k4)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("threshold\nts 4"));

    let p4 = write(&dir, "p4.txt", &edge_list(4, &[(0, 1), (1, 2), (2, 3)]));
    let o = thdim(&["recognize", s(&p4)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not-threshold\nP4 on 0 1 2 3\n");

    let c4 = write(&dir, "c4.txt", &edge_list(4, &cycle(4)));
    let o = thdim(&["recognize", s(&c4)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("C4"));
}

#[test]
fn decompose_examples() {
    let dir = TempDir::new().unwrap();
    let star = write(
        &dir,
        "star.txt",
        &edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    );
    let o = thdim(&["decompose", s(&star), "--method", "vc"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(factor_count(&stdout(&o)), 1);

    let c10 = write(&dir, "c10.txt", &edge_list(10, &cycle(10)));
    let o = thdim(&[
        "decompose",
        s(&c10),
        "--method",
        "degeneracy",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(factor_count(&stdout(&o)) <= 60);

    let tree = write(
        &dir,
        "tree.txt",
        &edge_list(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
    );
    let o = thdim(&["decompose", s(&tree), "--method", "treewidth"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(factor_count(&stdout(&o)) <= 4);
}

#[test]
fn decompose_is_deterministic_and_writes_files() {
    let dir = TempDir::new().unwrap();
    let c9 = write(&dir, "c9.txt", &edge_list(9, &cycle(9)));
    let a = dir.path().join("a.dec");
    let b = dir.path().join("b.dec");
    for out in [&a, &b] {
        let o = thdim(&[
            "decompose",
            s(&c9),
            "--method",
            "maxdeg",
            "--seed",
            "3",
            "--out",
            s(out),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn decompose_with_supplied_tree_decomposition() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", &edge_list(4, &[(0, 1), (1, 2), (2, 3)]));
    let td = write(
        &dir,
        "p4.td",
        "s td 3 2 4\nb 1 0 1\nb 2 1 2\nb 3 2 3\n1 2\n2 3\n",
    );
    let o = thdim(&[
        "decompose",
        s(&p4),
        "--method",
        "treewidth",
        "--td",
        s(&td),
        "--diagnostics",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(factor_count(&stdout(&o)) <= 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("width 1"));

    let bad = write(&dir, "bad.td", "s td 1 2 4\nb 1 0 1\n");
    let o = thdim(&[
        "decompose",
        s(&p4),
        "--method",
        "treewidth",
        "--td",
        s(&bad),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn refusals_and_input_errors() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.txt", &edge_list(2, &[(0, 1)]));
    let o = thdim(&["decompose", s(&p2), "--method", "maxdeg"]);
    assert_eq!(o.status.code(), Some(1));

    let big = write(&dir, "c9.txt", &edge_list(9, &cycle(9)));
    let o = thdim(&["decompose", s(&big), "--method", "exact"]);
    assert_eq!(o.status.code(), Some(1));

    let broken = write(&dir, "broken.txt", "p 3 1\n0 7\n");
    let o = thdim(&["recognize", s(&broken)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = thdim(&["recognize", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));
    let o = thdim(&["decompose", s(&p2), "--method", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_examples() {
    let dir = TempDir::new().unwrap();
    let two_k3 = write(
        &dir,
        "2k3.txt",
        &edge_list(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]),
    );
    let o = thdim(&["report", s(&two_k3), "--rows"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exact,dimension,3\n"));

    let k5: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .collect();
    let k5 = write(&dir, "k5.txt", &edge_list(5, &k5));
    let o = thdim(&["report", s(&k5), "--rows"]);
    assert!(stdout(&o).contains("exact,dimension,1\n"));

    let c5 = write(&dir, "c5.txt", &edge_list(5, &cycle(5)));
    let o = thdim(&["report", s(&c5)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let exact = text.lines().find(|l| l.starts_with("exact")).unwrap();
    assert!(exact.ends_with(" 3"));

    let o = thdim(&["report", s(&c5), "--exact-cap", "4"]);
    assert!(stdout(&o).contains("not computed"));
}

#[test]
fn compile_and_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let two_k2 = write(&dir, "2k2.txt", &edge_list(4, &[(0, 1), (2, 3)]));
    let circ = dir.path().join("2k2.circ");
    let o = thdim(&[
        "compile",
        s(&two_k2),
        "--method",
        "exact",
        "--out",
        s(&circ),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exhaustive"));
    let text = fs::read_to_string(&circ).unwrap();
    assert!(text.starts_with("ltf-and 4 2\n"));

    let o = thdim(&["verify", s(&two_k2), s(&circ)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid (exhaustive"));

    let k3 = write(&dir, "k3.txt", &edge_list(3, &[(0, 1), (0, 2), (1, 2)]));
    let o = thdim(&["compile", s(&k3), "--method", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ltf-and 3 1\n"));

    // a bound large enough to accept every vector breaks the circuit
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut tok: Vec<String> = lines[1].split_whitespace().map(String::from).collect();
    tok[1] = "1000000".into();
    lines[1] = tok.join(" ");
    let mut lines2: Vec<String> = lines[2].split_whitespace().map(String::from).collect();
    lines2[1] = "1000000".into();
    lines[2] = lines2.join(" ");
    let corrupt = write(&dir, "bad.circ", &(lines.join("\n") + "\n"));
    let o = thdim(&["verify", s(&two_k2), s(&corrupt)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample"));
}

#[test]
fn compile_large_graph_uses_sampling() {
    let dir = TempDir::new().unwrap();
    let c20 = write(&dir, "c20.txt", &edge_list(20, &cycle(20)));
    let o = thdim(&["compile", s(&c20), "--method", "treewidth"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sampled"));
}

#[test]
fn experiment_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.txt", "# n m trials\n12 20 3\n");
    let a = thdim(&["experiment", s(&spec), "--seed", "5"]);
    let b = thdim(&["experiment", s(&spec), "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("row,n,m,trial,seed,k,d_av,factors,bound,ratio,status,note\n"));
}
