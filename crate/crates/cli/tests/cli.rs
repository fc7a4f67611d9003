use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dbe(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dbe"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PENTAGON: &str = "0 1 2 2 1\n1 0 1 2 2\n2 1 0 1 2\n2 2 1 0 1\n1 2 2 1 0\n";

#[test]
fn dbe_report_as_json() {
    let o = dbe(&["lines", "dbe", "--in", "-", "--format", "matrix", "--json"], PENTAGON);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with(r#"{"dbe_holds":true,"has_universal":false,"n":5,"num_lines":10,"#),
        "{out}"
    );
}

#[test]
fn enumerate_lists_every_line() {
    let o = dbe(
        &["lines", "enumerate", "--in", "-", "--format", "matrix", "--json"],
        PENTAGON,
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains(r#""universal":null"#), "{out}");
}

#[test]
fn chordal_certificates() {
    // C5, then the path 0-1-2
    let o = dbe(
        &["graph", "chordal", "--in", "-", "--format", "g6", "--json"],
        "Dhc\nBg\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let docs: Vec<&str> = out.lines().collect();
    assert_eq!(docs.len(), 2);
    assert!(docs[0].contains(r#""chordal":false"#));
    assert!(docs[1].contains(r#""chordal":true"#));
}

#[test]
fn edge_list_input() {
    let o = dbe(
        &["lines", "dbe", "--in", "-", "--format", "edges"],
        "# path\n3 2\n0 1\n1 2\n",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("universal"));
}

#[test]
fn malformed_records_skipped_unless_strict() {
    let input = "Dhc\nnot graph6\nBg\n";
    let args = ["verify", "--claim", "logbound", "--in", "-", "--format", "g6"];
    let lenient = dbe(&args, input);
    assert_eq!(lenient.status.code(), Some(2));
    assert!(stdout(&lenient).contains("instances: 2"), "{}", stdout(&lenient));
    assert!(String::from_utf8_lossy(&lenient.stderr).contains("skipping"));

    let strict = dbe(&[&args[..], &["--strict"]].concat(), input);
    assert_eq!(strict.status.code(), Some(2));
    assert!(stdout(&strict).is_empty());
}

#[test]
fn clean_stream_exits_zero() {
    let o = dbe(
        &[
            "verify", "--claim", "theorem1", "--claim", "dirac", "--in", "-", "--format", "g6",
        ],
        "Bg\nCF\n",
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn bad_input_is_exit_two() {
    assert_eq!(
        dbe(&["lines", "dbe", "--in", "-", "--format", "matrix"], "0 1\n2 0\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dbe(&["lines", "dbe", "--in", "/nonexistent", "--format", "g6"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dbe(&["gen", "chordal", "--n", "63", "--kmax", "2", "--seed", "1"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dbe(&["verify", "exhaustive", "--claim", "dbe", "--nmax", "8"], "")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_count_uses_consecutive_seeds() {
    let batch = stdout(&dbe(
        &[
            "gen", "chordal", "--n", "20", "--kmax", "3", "--seed", "41", "--count", "3",
        ],
        "",
    ));
    let lines: Vec<&str> = batch.lines().collect();
    assert_eq!(lines.len(), 3);
    for (i, seed) in ["41", "42", "43"].iter().enumerate() {
        let single = stdout(&dbe(
            &["gen", "chordal", "--n", "20", "--kmax", "3", "--seed", seed],
            "",
        ));
        assert_eq!(single.trim_end(), lines[i]);
    }
}

#[test]
fn exhaustive_distance_12_family() {
    let o = dbe(
        &[
            "verify",
            "exhaustive",
            "--claim",
            "dbe",
            "--nmax",
            "4",
            "--family",
            "distance12",
            "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""total":74"#), "{}", stdout(&o));
}
