use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_shellob"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    ok(&full, "")
}

#[test]
fn lex_order_of_m5_is_not_a_shelling() {
    let m5 = gen(&["m-cycle", "5"]);
    let out = ok(&["shell", "check", "--order", "lex"], &m5);
    assert!(out.starts_with("not a shelling: step "), "{out}");
    assert!(out.contains("is not pure of dimension"));
    let machine = ok(&["--machine", "shell", "check", "--order", "lex"], &m5);
    assert!(machine.starts_with("result=not-a-shelling\n"), "{machine}");
    assert!(machine.contains("step="));
}

#[test]
fn m6_is_an_obstruction() {
    let m6 = gen(&["m-cycle", "6"]);
    assert_eq!(ok(&["obstruction", "test"], &m6), "obstruction: true\n");
    let w = ok(&["--machine", "obstruction", "witness"], &m6);
    assert!(w.contains("witness=1 2 3 4 5 6\n"), "{w}");
}

#[test]
fn shell_find_returns_replayable_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let k = "1 2 3\n3 4\n4 5\n";
    let out = ok(&["shell", "find", "--decreasing-dim"], k);
    assert!(out.starts_with("# shellable\n"), "{out}");
    let order = dir.path().join("order");
    std::fs::write(&order, out.lines().skip(1).collect::<Vec<_>>().join("\n")).unwrap();
    let check = ok(&["shell", "check", "--order-file", order.to_str().unwrap()], k);
    assert_eq!(check, "shelling: valid\n");
    assert_eq!(ok(&["shell", "find"], &gen(&["m-cycle", "5"])), "not shellable\n");
}

#[test]
fn diamond_betti_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("diamond.poset");
    std::fs::write(&file, gen(&["diamond"])).unwrap();
    let out = ok(&["poset", "betti", "--file", file.to_str().unwrap()], "");
    assert_eq!(out, "beta[0] = 1\n");
    let out = ok(&["--machine", "poset", "check-interval", "--file", file.to_str().unwrap()], "");
    assert!(out.contains("interval_order=true"), "{out}");
}

#[test]
fn betti_numbers_match_falling_chain_counts() {
    for seed in 0..5 {
        let s = seed.to_string();
        let p = ok(&["--seed", &s, "gen", "interval-order", "6"], "");
        let betti = ok(&["--machine", "poset", "betti"], &p);
        let chains = ok(&["--machine", "poset", "falling-chains"], &p);
        for line in betti.lines().filter(|l| l.starts_with("beta[")) {
            let (k, v) = line.split_once('=').unwrap();
            let d: usize = k[5..k.len() - 1].parse().unwrap();
            let want = format!("count[{}]={}", d + 2, v);
            assert!(v == "0" || chains.contains(&want), "{betti} vs {chains}");
        }
        let order = ok(&["--machine", "poset", "shelling"], &p);
        assert!(order.starts_with("order="), "{order}");
    }
}

#[test]
fn two_plus_two_is_reported() {
    let p = "elements: a b c d\na < b\nc < d\n";
    let out = ok(&["--machine", "poset", "check-interval"], p);
    assert!(out.contains("interval_order=false"), "{out}");
    assert!(out.contains("two_plus_two="), "{out}");
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let a = gen(&["random", "7", "2", "--density", "0.4"]);
    assert_eq!(a, gen(&["random", "7", "2", "--density", "0.4"]));
    let h1 = ok(&["homology"], &a);
    assert_eq!(h1, ok(&["homology"], &a));
    for fam in [&["m-cycle", "7"][..], &["prop1-obstruction", "3"], &["rp2"], &["five-vertex"]] {
        let text = gen(fam);
        assert!(!ok(&["homology"], &text).is_empty());
        assert_eq!(ok(&["shell", "find"], &text), ok(&["shell", "find"], &text));
    }
}

#[test]
fn rp2_has_torsion() {
    let out = ok(&["homology"], &gen(&["rp2"]));
    assert!(out.contains("torsion[1] = (2)"), "{out}");
}

#[test]
fn exit_codes() {
    let m5 = gen(&["m-cycle", "5"]);
    let out = run(&["--budget-facets", "3", "shell", "find"], &m5);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("undecided"));
    assert_eq!(run(&["shell", "find"], "1 2\n1 x\n").status.code(), Some(1));
    assert_eq!(run(&["no-such-command"], "").status.code(), Some(1));
    let out = run(&["obstruction", "enumerate", "--dim", "2", "--vertices", "6"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn enumeration_writes_a_report_directory() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = ok(&["--machine", "obstruction", "enumerate", "--dim", "2", "--vertices", "5", "--out-dir", d], "");
    assert!(out.contains("classes=14\n"), "{out}");
    assert!(out.contains("provenance=exhaustive\n"));
    let index = std::fs::read_to_string(dir.path().join("index.txt")).unwrap();
    assert_eq!(index.lines().count(), 15);
    for line in index.lines().skip(1) {
        let digest = line.split(' ').next().unwrap();
        let text = std::fs::read_to_string(dir.path().join(format!("{digest}.complex"))).unwrap();
        assert_eq!(ok(&["obstruction", "test"], &text), "obstruction: true\n");
    }
}

#[test]
fn sampled_enumeration_is_reproducible() {
    let args = ["--seed", "9", "--machine", "obstruction", "enumerate", "--dim", "2", "--vertices", "6", "--samples", "80"];
    let a = ok(&args, "");
    assert_eq!(a, ok(&args, ""));
    assert!(a.contains("provenance=sampled"));
}

#[test]
fn purity_commands() {
    let p = gen(&["purity-obstruction", "2"]);
    assert_eq!(ok(&["purity", "test"], &p), "purity obstruction: true\n");
    let out = ok(&["--machine", "purity", "enumerate", "--dim", "2", "--vertices", "4"], "");
    assert!(out.contains("classes=3\n"), "{out}");
}
