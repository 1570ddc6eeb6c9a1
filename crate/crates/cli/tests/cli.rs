use std::process::{Command, Output};

fn posetcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetcode")).args(args).env_remove("POSETCODE_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("posetcode-cli-{}-{name}", std::process::id()))
}

#[test]
fn ie_check_finds_the_witness() {
    let o = posetcode(&["ie-check", "--poset", "builtin:single_relation"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "ie-check");
    assert_eq!(v["results"]["holds"], false);
    let o = posetcode(&["ie-check", "--poset", "builtin:tree_2_2", "--mode", "fe", "--format", "text"]);
    assert!(stdout(&o).contains("results.holds: false"), "{}", stdout(&o));
}

#[test]
fn poset_files_with_bare_keys() {
    let path = temp_path("n.json");
    std::fs::write(&path, "{n:4, covers:[[1,3],[2,3],[2,4]]}").unwrap();
    let o = posetcode(&["analyze", "--poset", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("\"self_dual\": true"));
    std::fs::write(&path, "{n:3, covers:[[1,2],[2,3],[3,1]]}").unwrap();
    let o = posetcode(&["analyze", "--poset", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn scheme_csv_has_matrix_blocks() {
    let o = posetcode(&["scheme", "--poset", "builtin:chain_2", "--p", "2", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("command,version\nscheme,"));
    assert!(text.contains("\nresults.p_mat,0,1,2\n"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(posetcode(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(posetcode(&["scheme", "--poset", "builtin:chain_2"]).status.code(), Some(2));
    assert_eq!(posetcode(&["scheme", "--poset", "builtin:chain_2", "--p", "4"]).status.code(), Some(2));
    assert_eq!(posetcode(&["ie-check", "--poset", "builtin:antichain_8", "--cap", "10"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_posetcode"))
        .args(["ie-check", "--poset", "builtin:antichain_8"])
        .env("POSETCODE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn out_flag_writes_the_report() {
    let path = temp_path("out.json");
    let o = posetcode(&["tree-label", "--degrees", "2,2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "tree-label");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn output_is_reproducible() {
    let args = ["macwilliams", "--poset", "builtin:v", "--p", "3", "--gen", "1,1,0"];
    assert_eq!(stdout(&posetcode(&args)), stdout(&posetcode(&args)));
}
