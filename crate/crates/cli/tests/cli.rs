use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn specx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specx")).args(args).env_remove("SPECX_WORKERS").output().expect("spawn specx")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Vec<&'a str> {
    let prefix = format!("{key}=");
    text.lines().filter_map(|l| l.strip_prefix(prefix.as_str())).collect()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn construct(dir: &Path, family: &str) -> (String, String) {
    let out = dir.join("family.txt");
    let o = specx(&["construct", "--family", family, "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    let comment = lines.next().unwrap().to_string();
    (comment, lines.next().unwrap().to_string())
}

#[test]
fn analyze_complete_graph_has_no_essential_cut() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "k4.g6", "C~\n");
    let o = specx(&["analyze", &path, "--format", "kv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "kappa"), ["3"]);
    assert_eq!(field(&text, "essential_connectivity"), ["none"]);
    assert_eq!(field(&text, "rho"), ["3.000000000"]);
}

#[test]
fn analyze_path_edge_list_reports_certificate() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p6.txt", "# path\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    let text = stdout(&specx(&["analyze", &path, "--format", "kv"]));
    assert_eq!(field(&text, "essential_connectivity"), ["1"]);
    let cert = field(&text, "certificate")[0];
    assert!(cert.starts_with("S=("), "{cert}");
    // rho(P_6) = 2 cos(pi / 7)
    let rho: f64 = field(&text, "rho")[0].parse().unwrap();
    assert!((rho - 2.0 * (std::f64::consts::PI / 7.0).cos()).abs() < 1e-8);
}

#[test]
fn analyze_reads_every_graph6_line() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "many.g6", "A_\nBw\n\nC~\n");
    let text = stdout(&specx(&["analyze", &path, "--format", "kv"]));
    assert_eq!(field(&text, "n"), ["2", "3", "4"]);
}

#[test]
fn constructed_digraph_round_trips_through_analyze() {
    let dir = TempDir::new().unwrap();
    let (comment, encoding) = construct(dir.path(), "dg(5,1,2)");
    assert!(comment.starts_with("# family=dg(5,1,2)"), "{comment}");
    assert!(comment.contains("arcs=16"));
    let path = write(&dir, "d.d6", &format!("{comment}\n{encoding}\n"));
    let text = stdout(&specx(&["analyze", &path, "--format", "kv"]));
    assert_eq!(field(&text, "kind"), ["digraph"]);
    assert_eq!(field(&text, "rho"), ["3.000000000"]);
    assert_eq!(field(&text, "essential_connectivity"), ["1"]);
}

#[test]
fn construct_digraph_matches_closed_form() {
    let o = specx(&["construct", "--family", "dg(8,1,2)", "--format", "kv"]);
    let text = stdout(&o);
    let expected = 3.0 + 6f64.sqrt();
    for key in ["rho", "closed_form_rho"] {
        let v: f64 = field(&text, key)[0].parse().unwrap();
        assert!((v - expected).abs() < 1e-8, "{key} = {v}");
    }
}

#[test]
fn construct_graph_rho_agrees_with_analyze() {
    let dir = TempDir::new().unwrap();
    let (comment, encoding) = construct(dir.path(), "g(8,2,3)");
    let path = write(&dir, "g.g6", &format!("{encoding}\n"));
    let text = stdout(&specx(&["analyze", &path, "--format", "kv"]));
    assert_eq!(field(&text, "min_degree"), ["3"]);
    assert_eq!(field(&text, "essential_connectivity"), ["2"]);
    let rho = field(&text, "rho")[0];
    assert!(comment.contains(&format!("rho={rho}")), "{comment} vs {rho}");
}

#[test]
fn construct_join_case_is_k1_join_k2_union_k3() {
    let dir = TempDir::new().unwrap();
    let (_, encoding) = construct(dir.path(), "g(6,1,2)");
    let path = write(&dir, "g.g6", &format!("{encoding}\n"));
    let text = stdout(&specx(&["analyze", &path, "--format", "kv"]));
    // K_1 join (K_2 union K_3): 1 + 3 + 5 edges, degrees 2..5
    assert_eq!(field(&text, "edges"), ["9"]);
    assert_eq!(field(&text, "min_degree"), ["2"]);
    assert_eq!(field(&text, "max_degree"), ["5"]);
    let cert = field(&text, "certificate")[0];
    let pieces = cert.split("pieces=").nth(1).unwrap();
    let mut sizes: Vec<usize> = pieces.split('|').map(|p| p.split(',').count()).collect();
    sizes.sort();
    assert!(cert.starts_with("S=(0);"), "{cert}");
    assert_eq!(sizes, [2, 3]);
}

#[test]
fn infeasible_family_is_a_usage_error() {
    assert_eq!(specx(&["construct", "--family", "g(6,3,1)"]).status.code(), Some(1));
    assert_eq!(specx(&["construct", "--family", "dg(5,2,1)"]).status.code(), Some(1));
    assert_eq!(specx(&["construct", "--family", "h(1)"]).status.code(), Some(1));
}

#[test]
fn verify_t1_confirms() {
    let o = specx(&["verify", "t1", "n=7", "delta=2", "kappa=2", "--format", "kv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "verdict"), ["confirmed"]);
    assert_eq!(field(&text, "space_size"), ["853"]);
}

#[test]
fn verify_t2_exhaustive_confirms() {
    let o = specx(&["verify", "t2", "n=5", "k=1", "--format", "kv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "verdict"), ["confirmed"]);
    assert_eq!(field(&text, "max_rho"), ["3.000000000"]);
    assert_eq!(field(&text, "space_size"), ["1048576"]);
}

#[test]
fn sweep_t1_confirms_every_class() {
    let o = specx(&["sweep", "t1", "n=5..7", "--format", "kv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let verdicts = field(&text, "verdict");
    assert_eq!(verdicts.len(), 17);
    assert!(verdicts.iter().all(|v| *v == "confirmed"));
}

#[test]
fn sampled_runs_are_inconclusive_and_reproducible() {
    let args = ["verify", "t2", "n=6", "k=1", "--mode", "sampled", "--trials", "3000", "--seed", "9", "--format", "kv"];
    let a = specx(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(field(&stdout(&a), "verdict"), ["inconclusive-sampled"]);
    let b = Command::new(env!("CARGO_BIN_EXE_specx")).args(args).env("SPECX_WORKERS", "1").output().unwrap();
    let c = specx(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.g6", "C~\nzz!\n");
    let o = specx(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
    assert_eq!(specx(&["verify", "t9", "n=5"]).status.code(), Some(1));
    assert_eq!(specx(&["verify", "t1", "n=7"]).status.code(), Some(1));
    assert_eq!(specx(&["--tol", "0", "verify", "t2", "n=5", "k=1"]).status.code(), Some(1));
    assert_eq!(specx(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(specx(&["--help"]).status.code(), Some(0));
}
