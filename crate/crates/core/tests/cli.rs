use std::path::PathBuf;
use std::process::{Command, Output};

fn cdc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdc")).args(args).output().expect("cdc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cdc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const TOY: &[&str] = &[
    "--n1", "4", "--n2", "4", "--k", "4", "--delta", "2", "--t1-set", "4", "--t2-set", "4", "--t1", "2", "--t2", "2",
    "--a1", "2", "--a2", "2", "--b1", "1", "--b2", "1",
];

#[test]
fn bound_c_2_12() {
    let o = cdc(&["bound", "--id", "c-2-12", "--h", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("19748694"));
    assert!(out.contains("BOUND 2 12 4 4 19748694 OK"), "{out}");
}

#[test]
fn table_new_and_table_agree() {
    let a = cdc(&["bound", "--id", "table-new"]);
    let b = cdc(&["table"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let lines: Vec<String> = stdout(&a).lines().filter(|l| l.starts_with("BOUND ")).map(String::from).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"BOUND 3 12 4 4 288652606436 PASS".to_string()), "{lines:?}");
    assert_eq!(lines.iter().filter(|l| l.ends_with("PENDING-SOURCE")).count(), 3);
}

#[test]
fn guard_failure_exits_2() {
    let consts = scratch("saturated.txt");
    std::fs::write(&consts, "A 2 8 4 4 200787 whole-grassmannian\n").unwrap();
    let o = cdc(&["--constants", consts.to_str().unwrap(), "bound", "--id", "c-q-12", "--q", "2", "--delta", "2", "--h", "0"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("error"), "{}", stderr(&o));
}

#[test]
fn bad_constants_file_exits_3() {
    let consts = scratch("broken.txt");
    std::fs::write(&consts, "A 2 8 4 x 5 src\n").unwrap();
    let o = cdc(&["--constants", consts.to_str().unwrap(), "bound", "--id", "c-2-12", "--h", "0"]);
    assert_eq!(o.status.code(), Some(3));
    let missing = cdc(&["--constants", "/nonexistent/constants.txt", "table"]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn unknown_recipe_exits_2() {
    assert_eq!(cdc(&["bound", "--id", "no-such-recipe"]).status.code(), Some(2));
    assert_eq!(cdc(&["construct", "--recipe", "no-such-recipe"]).status.code(), Some(2));
}

#[test]
fn construct_verify_round_trip() {
    let file = scratch("lifted.code");
    let path = file.to_str().unwrap();
    let o = cdc(&["construct", "--recipe", "lifted-mrd", "--k", "3", "--n", "3", "--d", "2", "--out", path]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("CDC q=2 n=6 count=64"), "{}", &text[..40]);

    let again = scratch("lifted-again.code");
    cdc(&["construct", "--recipe", "lifted-mrd", "--k", "3", "--n", "3", "--d", "2", "--out", again.to_str().unwrap()]);
    assert_eq!(std::fs::read(&file).unwrap(), std::fs::read(&again).unwrap());

    let ok = cdc(&["verify", "--input", path, "--d", "4"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("VERIFY verdict PASS"), "{}", stdout(&ok));

    let bad = cdc(&["verify", "--input", path, "--d", "6"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("VERIFY witness"), "{}", stdout(&bad));
}

#[test]
fn truncated_code_file_exits_3() {
    let file = scratch("truncated.code");
    let o = cdc(&["construct", "--recipe", "lifted-mrd", "--k", "2", "--n", "2", "--d", "2"]);
    let text = stdout(&o);
    std::fs::write(&file, &text[..text.len() / 2]).unwrap();
    let v = cdc(&["verify", "--input", file.to_str().unwrap(), "--d", "4"]);
    assert_eq!(v.status.code(), Some(3), "{}", stderr(&v));
    assert!(stderr(&v).contains("line"), "{}", stderr(&v));
}

#[test]
fn insert_c3_passes_insertion_check() {
    let file = scratch("c3.code");
    let mut args = vec!["construct", "--recipe", "insert-c3", "--out", file.to_str().unwrap()];
    args.extend_from_slice(TOY);
    let o = cdc(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut v = vec!["verify", "--input", file.to_str().unwrap(), "--d", "4", "--insertion"];
    v.extend_from_slice(TOY);
    let r = cdc(&v);
    assert_eq!(r.status.code(), Some(0), "{}{}", stdout(&r), stderr(&r));

    let base = scratch("c3-base.code");
    let mut args = vec!["construct", "--recipe", "insert-c3", "--with-base", "--out", base.to_str().unwrap()];
    args.extend_from_slice(TOY);
    assert_eq!(cdc(&args).status.code(), Some(0));
    let r = cdc(&["verify", "--input", base.to_str().unwrap(), "--d", "4"]);
    assert_eq!(r.status.code(), Some(0), "{}", stdout(&r));
    assert!(stdout(&r).contains("VERIFY words 4686"), "{}", stdout(&r));
}

#[test]
fn count_only_multilevel_example() {
    let idents = scratch("family.txt");
    std::fs::write(
        &idents,
        "001100111100000000\n001100001111000000\n001100000011110000\n001100000000111100\n001100000000001111\n",
    )
    .unwrap();
    let o = cdc(&["construct", "--recipe", "multilevel", "--d", "2", "--prefix", "5", "--idents", idents.to_str().unwrap(), "--count-only"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "17043473");
}

#[test]
fn rankdist_matches_closed_form() {
    let o = cdc(&["rankdist", "--q", "2", "--m", "3", "--n", "3", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(!stdout(&o).is_empty());
    let big = cdc(&["rankdist", "--q", "3", "--m", "6", "--n", "6", "--d", "1"]);
    assert_eq!(big.status.code(), Some(0), "{}", stderr(&big));
}
