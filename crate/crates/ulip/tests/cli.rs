use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ulip(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ulip"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prove_exit_codes() {
    let yes = ulip(&["prove", "--logic", "EC", "[](~q & r), [](p & q) => []false"], None);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("provable in EC"));
    let no = ulip(&["prove", "--logic", "K", "p =>"], None);
    assert_eq!(no.status.code(), Some(1));
    let bad = ulip(&["prove", "--logic", "K", "p & =>"], None);
    assert_eq!(bad.status.code(), Some(2));
    let j = ulip(&["--json", "prove", "--logic", "K", "p & =>"], None);
    assert_eq!(j.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(stdout(&j).trim()).unwrap();
    assert_eq!(v["status"], 2);
    let unknown = ulip(&["prove", "--logic", "Q", "p => p"], None);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn prove_reads_stdin_and_emits_json() {
    let o = ulip(&["--json", "prove", "--logic", "CK", "-"], Some("p > q, p > r => p > (q & r)\n"));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["provable"], true);
}

#[test]
fn proof_json_checks_and_cut_free_output() {
    let o = ulip(&["--json", "prove", "--logic", "M", "[](p & q) => []p"], None);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let proof = v["proof"].to_string();
    let c = ulip(&["check", "--logic", "M", &proof], None);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(stdout(&c).trim(), "valid");
    let e = ulip(&["check", "--logic", "E", &proof], None);
    assert_eq!(e.status.code(), Some(1));
    let cut = ulip(&["cutelim", "--logic", "M", &proof], None);
    assert_eq!(cut.status.code(), Some(0));
}

#[test]
fn interpolation_commands() {
    let o = ulip(&["interp", "--logic", "K", "--atom", "p", "--quant", "exists", "[](p & q)"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations"));
    let lyndon_on_cem = ulip(&["interp", "--logic", "CKCEM", "--atom", "p", "--pol", "pos", "p > q"], None);
    assert_eq!(lyndon_on_cem.status.code(), Some(2));
    let plain = ulip(&["interp", "--logic", "CKCEM", "--atom", "p", "--pol", "plain", "p > q"], None);
    assert_eq!(plain.status.code(), Some(0));
}

#[test]
fn craig_search() {
    let query = "[](~q & r) => [](p & q) -> []false";
    let k = ulip(&["craig", "--logic", "K", "--atoms", "q", "--bound", "4", query], None);
    assert_eq!(k.status.code(), Some(0));
    let ec = ulip(&["craig", "--logic", "EC", "--atoms", "q", "--bound", "4", query], None);
    assert_eq!(ec.status.code(), Some(1));
}

#[test]
fn selftest_subset() {
    let o = ulip(&["selftest", "--only", "1,6"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("criterion 1 axiom-matrix: PASS"));
    assert!(out.contains("criterion 6 ckcem-no-ulip: PASS"));
    assert_eq!(ulip(&["selftest", "--only", "12"], None).status.code(), Some(2));
}
