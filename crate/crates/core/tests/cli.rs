use std::process::{Command, Output};

fn bwl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwl")).args(args).env_remove("BWL_CACHE_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_code_contract() {
    assert_eq!(bwl(&["kissing", "-m", "3", "--which", "L"]).status.code(), Some(0));
    assert_eq!(bwl(&["construct", "-m", "0"]).status.code(), Some(2));
    assert_eq!(bwl(&["theta", "-m", "1", "--max-norm", "x/y"]).status.code(), Some(2));
    assert_eq!(bwl(&["group", "-m", "3", "--validate"]).status.code(), Some(2));
    // the element list of C_3 is larger than the closure cap
    let o = bwl(&["group", "-m", "3", "--molien", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("capacity"));
}

#[test]
fn documented_outputs() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&bwl(&["kissing", "-m", "3", "--which", "L"]))).unwrap();
    assert_eq!(v["kissing"], 240);
    let v: serde_json::Value = serde_json::from_str(&stdout(&bwl(&["group", "-m", "3", "--order"]))).unwrap();
    assert_eq!(v["order"], "5160960");
    let h8 = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/h8.txt");
    let v: serde_json::Value = serde_json::from_str(&stdout(&bwl(&["cwe", "--code", h8, "-m", "1"]))).unwrap();
    assert_eq!(v["polynomial"], "x0^8 + 14*x0^4*x1^4 + x1^8");
    let v: serde_json::Value = serde_json::from_str(&stdout(&bwl(&["codes", "classify", "-n", "8"]))).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["certified"], true);
}

#[test]
fn output_is_independent_of_threads_and_cache() {
    let args = ["theta", "-m", "3", "--which", "L", "--shells", "3"];
    let one = bwl(&[&args[..], &["--threads", "1"]].concat());
    let four = bwl(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);

    let dir = std::env::temp_dir().join(format!("bwl-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bwl")).args(args).env("BWL_CACHE_DIR", &dir).output().unwrap().stdout
    };
    assert_eq!(run(), one.stdout);
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    assert_eq!(run(), one.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reproduce_passes() {
    let o = bwl(&["reproduce", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",true")));
}
