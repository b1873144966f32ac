use std::process::{Command, Output};

use flagweyl::{Diagram, SparsePolynomial};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagweyl")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn poly(s: &str) -> SparsePolynomial {
    s.trim().parse().unwrap()
}

#[test]
fn chi_of_the_example() {
    let out = run(&["chi", "1,3;2,3;"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        poly(lines.next().unwrap()),
        poly("x1*x2*x3^2 + 2*x1^2*x2*x3 + x1^2*x3^2 + x1*x2^2*x3 + x1^2*x2^2")
    );
    assert_eq!(lines.next(), Some("principal: 6"));
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&run(&["schubert", "321"])).trim(), "x1^2*x2");
    assert_eq!(stdout(&run(&["rank", ";;"])).trim(), "0");
    assert_eq!(stdout(&run(&["rank", "1,3;2,3;"])).trim(), "3");
    assert_eq!(stdout(&run(&["count-below", "1,3;2,3;"])).trim(), "6");
    assert_eq!(poly(&stdout(&run(&["key", "0,1"]))), poly("x1 + x2"));
}

#[test]
fn printed_diagrams_reparse() {
    for w in ["31542", "1432", "1", "4,2,3,1"] {
        let printed = stdout(&run(&["rothe", w]));
        let d = Diagram::parse_inline(printed.trim()).unwrap();
        assert_eq!(d, w.parse::<flagweyl::Permutation>().unwrap().rothe());
        let json = stdout(&run(&["rothe", w, "--json"]));
        assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), d);
    }
    let printed = stdout(&run(&["skyline", "3,2,0,1,1"]));
    let d = Diagram::parse_inline(printed.trim()).unwrap();
    assert_eq!(d, "3,2,0,1,1".parse::<flagweyl::Composition>().unwrap().skyline());
}

#[test]
fn chi_agrees_with_schubert_and_key() {
    for w in ["31542", "2143", "1432"] {
        let rothe = stdout(&run(&["rothe", w]));
        let chi = stdout(&run(&["chi", rothe.trim()]));
        let s = stdout(&run(&["schubert", w]));
        assert_eq!(poly(chi.lines().next().unwrap()), poly(&s), "{w}");
    }
    let sky = stdout(&run(&["skyline", "3,2,0,1,1"]));
    let chi = stdout(&run(&["chi", sky.trim()]));
    assert_eq!(poly(chi.lines().next().unwrap()), poly(&stdout(&run(&["key", "3,2,0,1,1"]))));
}

#[test]
fn diagram_files() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("d.txt");
    std::fs::write(&grid, "#..\n.#.\n##.\n").unwrap();
    let json = dir.path().join("d.json");
    std::fs::write(&json, r#"{"n": 3, "columns": [[1, 3], [2, 3], []]}"#).unwrap();
    for path in [&grid, &json] {
        let arg = format!("@{}", path.display());
        let out = run(&["chi", &arg]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert!(stdout(&out).ends_with("principal: 6\n"));
    }
}

#[test]
fn malformed_input_names_the_token() {
    let cases: [(&[&str], &str); 4] = [
        (&["chi", "1,x;2"], "`x`"),
        (&["schubert", "3125"], "3125"),
        (&["key", "1,-2"], "-2"),
        (&["sweep", "lower-bound", "cube:3"], "cube:3"),
    ];
    for (args, token) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(token), "{args:?}: {}", stderr(&out));
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["chi"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "@/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let out = run(&["chi", "3;3;3;3", "--cap", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["sweep", "lower-bound", "all:3:9", "--cap", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("TRUNCATED"));
}

#[test]
fn sweep_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out =
        run(&["sweep", "lower-bound", "all:3:9", "--workers", "3", "--json", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["checked"], 512);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
    assert_eq!(report["truncated"], false);
}

#[test]
fn sweep_exit_codes_distinguish_conjecture_findings() {
    let dir = tempfile::tempdir().unwrap();
    // all-free pattern: the proven direction fails on zero-one diagrams
    let free = dir.path().join("free.pat");
    std::fs::write(&free, "columnswap: false\n.\n").unwrap();
    let out = run(&["sweep", "zero-one-characterization", "all:2:4", "--patterns", free.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // unmatchable pattern: only conjecture-direction candidates, which do not fail
    let never = dir.path().join("never.pat");
    std::fs::write(&never, "columnswap: false\n#x\nx#\n#x\nx#\n##\n").unwrap();
    let out = run(&["sweep", "zero-one-characterization", "all:3:9", "--patterns", never.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("candidate"));
    // no patterns at all is a usage error
    assert_eq!(run(&["sweep", "zero-one-characterization", "all:2:4"]).status.code(), Some(2));
}

#[test]
fn sweep_with_checkpoint_and_family_file() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("family.txt");
    std::fs::write(&list, "// example and empty\n1,3;2,3;\n;;\n").unwrap();
    let cp = dir.path().join("cp.json");
    let fam = format!("@{}", list.display());
    let out = run(&["sweep", "upper-bound", &fam, "--checkpoint", cp.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["checked"], 2);
    assert_eq!(report["tallies"]["equality"], 2);
    assert!(cp.exists());
}
