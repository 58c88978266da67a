use std::path::Path;
use std::process::{Command, Output};

fn schubert(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_schubert"));
    cmd.args(args).env_remove("SCHUBERT_CACHE");
    if let Some(path) = cache {
        cmd.env("SCHUBERT_CACHE", path);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let out = schubert(&["gwdeg", "--r", "2", "--l", "2", "--lams", "[2,2];[2,1];[1];[1]"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");

    let out = schubert(
        &["rank", "--r", "3", "--l", "3", "--level", "3", "--lams", "[2,2,1];[2,1];[2,2];[2,2]"],
        None,
    );
    // (2,2,1) has three rows, so it only fits a box with r = 3
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), "4");

    let out = schubert(&["sweep", "--r", "2", "--l", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 mismatches"));

    let out = schubert(&["lr", "--nu", "[2,1]", "--lams", "[1];[1];[1]"], None);
    assert_eq!(stdout(&out).trim(), "2");

    let out = schubert(&["qlr", "--k", "2", "--m", "4", "--d", "1", "--nu", "[2]", "--lams", "[2,1];[2,1]"], None);
    assert_eq!(stdout(&out).trim(), "1");

    let out = schubert(&["cbdeg", "--r", "2", "--l", "2", "--lams", "[2,2];[2,1];[1];[1]"], None);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn exit_codes() {
    let out = schubert(&["gwdeg", "--r", "2", "--l", "2", "--lams", "[2,2];[2,1];[1];[x]"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = schubert(&["gwdeg", "--r", "2", "--l", "2", "--lams", "[3];[2,1];[1];[1]"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = schubert(&["nonsense"], None);
    assert_eq!(out.status.code(), Some(2));
    // strictly below the column condition: nothing to certify
    let out = schubert(&["certify", "--r", "2", "--l", "2", "--lams", "[2,2];[2,2];[1];[]"], None);
    assert_eq!(out.status.code(), Some(1));
    let out = schubert(&["certify", "--r", "1", "--l", "1", "--lams", "[1];[1];[1];[1]"], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let runs: [&[&str]; 5] = [
        &["--json", "gwdeg", "--r", "2", "--l", "2", "--lams", "[2,2];[2,1];[1];[1]"],
        &["--json", "fcurve", "--r", "2", "--l", "2", "--lams", "[2,2];[2,1];[1];[];[1]", "--blocks", "{1|2|3|4,5}"],
        &["--json", "sweep", "--r", "1", "--l", "2"],
        &["--json", "certify", "--r", "1", "--l", "1", "--lams", "[1];[1];[1];[1]"],
        &["--json", "rank", "--r", "2", "--l", "2", "--level", "2", "--lams", "[2,2];[2,1];[1];[1]"],
    ];
    for args in runs {
        let out = schubert(args, None);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout(&out);
        let line = text.trim_end();
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), line, "{args:?}");
    }
}

#[test]
fn warm_cache_matches_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("coefficients.jsonl");
    let strip_elapsed = |out: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(stdout(out).trim()).unwrap();
        v.as_object_mut().unwrap().remove("elapsed");
        v
    };
    let args = ["--json", "sweep", "--r", "2", "--l", "2"];
    let uncached = schubert(&args, None);
    let cold = schubert(&args, Some(&cache));
    let lines = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert!(lines > 0);
    let warm = schubert(&args, Some(&cache));
    assert_eq!(strip_elapsed(&cold), strip_elapsed(&uncached));
    assert_eq!(strip_elapsed(&warm), strip_elapsed(&cold));
    // a warm run hits the cache instead of appending
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), lines);
}

#[test]
fn poisoned_cache_is_served() {
    // the cache is trusted: a planted value comes back verbatim, which is
    // what makes warm runs cheap
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    std::fs::write(
        &cache,
        "{\"kind\":\"lr\",\"key\":\"nu=[2,1];[1];[1];[1]\",\"value\":\"99\"}\n",
    )
    .unwrap();
    let out = schubert(&["lr", "--nu", "[2,1]", "--lams", "[1];[1];[1]"], Some(&cache));
    assert_eq!(stdout(&out).trim(), "99");
}
