use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_trisect");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("TRISECT_CATALOG_DIR").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Vec<&'a str> {
    let prefix = format!("{key} = ");
    text.lines().filter_map(|l| l.strip_prefix(&prefix).or_else(|| (l == format!("{key} =")).then_some(""))).collect()
}

#[test]
fn export_then_validate_from_stdin() {
    let o = run(&["catalog", "export", "CP2"]);
    assert_eq!(o.status.code(), Some(0));
    let td = stdout(&o);
    assert!(td.starts_with("td 1\n"));
    let v = run_stdin(&["validate", "-"], &td);
    assert_eq!(v.status.code(), Some(0), "{}", String::from_utf8_lossy(&v.stderr));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let o = run_stdin(&["validate", "-"], "td 1\nbad\n");
    assert_eq!(o.status.code(), Some(2));
    // Batch validation reports per-input parse errors inline.
    assert!(stdout(&o).contains("line 2, column 1"));
    assert_eq!(run(&["invariants", "NO_SUCH_ENTRY"]).status.code(), Some(2));
}

#[test]
fn strict_rejects_window_violation_at_read() {
    let td = "td 1\nname bad\nsurface 1 1\nparams 1 3 0 1\nalpha 1 0\nbeta 0 1\ngamma 1 1\n";
    let strict = run_stdin(&["--strict", "invariants", "-"], td);
    assert_eq!(strict.status.code(), Some(1));
    assert!(stdout(&strict).contains("WINDOW"));
    let lax = run_stdin(&["validate", "-"], td);
    assert_eq!(lax.status.code(), Some(1));
    assert!(stdout(&lax).contains("WINDOW"));
}

#[test]
fn batch_invariants_keep_input_order() {
    let names = ["S2xS2", "CP2", "NCP2(3)", "CP2BAR", "S1xS3", "E2_A", "S4"];
    let mut args = vec!["invariants", "--format", "structured"];
    args.extend(names);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "name").len(), names.len());
    assert_eq!(field(&text, "signature"), ["0", "1", "3", "-1", "0", "2", "0"]);
    assert_eq!(field(&text, "parity"), ["even", "odd", "odd", "odd", "even", "odd", "even"]);
}

#[test]
fn distinguish_exit_codes() {
    let same = run(&["distinguish", "CP2", "CP2", "--expect-distinct"]);
    assert_eq!(same.status.code(), Some(1));
    assert!(stdout(&same).starts_with("INCONCLUSIVE"));
    assert_eq!(run(&["distinguish", "CP2", "CP2"]).status.code(), Some(0));
    let o = run(&["distinguish", "S2xD2_A", "S2xD2_B", "--expect-distinct", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "verdict"), ["DISTINCT"]);
    assert_eq!(field(&text, "witness"), ["parity"]);
}

#[test]
fn catalog_dir_fallback() {
    let dir = std::env::temp_dir().join(format!("trisect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let td = "td 1\nname MINE\nsurface 1 0\nparams 1 1 0 0\nalpha 1 0\nbeta 1 0\ngamma 1 0\n";
    std::fs::write(dir.join("MINE.td"), td).unwrap();
    let o = Command::new(BIN)
        .args(["invariants", "--format", "structured", "MINE"])
        .env("TRISECT_CATALOG_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(field(&stdout(&o), "b1"), ["1"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_to_directory_and_read_back() {
    let dir = std::env::temp_dir().join(format!("trisect-export-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    assert_eq!(run(&["catalog", "export", "--dir", d, "DPLUS", "CORK_A"]).status.code(), Some(0));
    let path = dir.join("CORK_A.td");
    let o = run(&["cap", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("params 3 0 0 0"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cap_and_sum_failures() {
    assert_eq!(run(&["cap", "W01_B"]).status.code(), Some(1));
    assert_eq!(run(&["cap", "--component", "9", "DPLUS"]).status.code(), Some(1));
    let ok = run(&["bsum", "TRIVIAL(2)", "DPLUS", "--claim", "1,2,0,3"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["bsum", "TRIVIAL(2)", "DPLUS", "--claim", "1,1,0,3"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("# euler audit"));
    assert_eq!(run(&["sum", "CP2", "TRIVIAL(3)", "--claim", "1,0,0,3"]).status.code(), Some(1));
    assert_eq!(run(&["sum", "CP2", "TRIVIAL(3)", "--claim", "1,2,0,3"]).status.code(), Some(0));
}

#[test]
fn stabilize_and_audit() {
    let o = run(&["stabilize", "--params", "2,1,0,1", "--type", "II"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["stabilize", "--params", "2,1,0,2", "--type", "II"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(4,2;1,1)"), "{}", stdout(&o));
    let a = run(&["audit-moves", "--start", "2,1,0,1", "--end", "2,1,0,1"]);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn catalog_list_names_everything() {
    let o = run(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in trisect::catalog::catalog_names() {
        assert!(text.contains(&name), "{name}");
    }
}
