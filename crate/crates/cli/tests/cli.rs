use std::path::Path;
use std::process::{Command, Output};

fn rswb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rswb")).args(args).output().expect("run rswb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

const RS73: [&str; 4] = ["--m", "3", "--k", "3"];

fn with(base: &[&str], extra: &[&str]) -> Vec<String> {
    base.iter().chain(extra).map(|s| s.to_string()).collect()
}

fn run(args: Vec<String>) -> Output {
    rswb(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

fn encode_rs73(dir: &Path, msgs: &str) -> String {
    let (m, c) = (path(dir, "msg.txt"), path(dir, "cw.txt"));
    std::fs::write(&m, msgs).unwrap();
    let mut args = vec!["encode".to_string()];
    args.extend(with(&RS73, &["-i", &m, "-o", &c]));
    assert!(run(args).status.success());
    c
}

#[test]
fn clean_codeword_decodes_with_no_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cw = encode_rs73(dir.path(), "5 0 1\n");
    let mut args = vec!["decode".to_string()];
    args.extend(with(&RS73, &["--decoder", "gao", "-i", &cw]));
    let out = run(args);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(v["message"], "5 0 1");
    assert_eq!(v["errors"].as_array().unwrap().len(), 0);
    assert!(v["steps"].as_array().unwrap().len() == 3);
}

#[test]
fn tables_reproduce_syndrome_total() {
    let out = rswb(&["tables", "--n", "255", "--k", "223", "--m", "8", "--trials", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l.starts_with("syndrome.total.overall,248272,")));
}

#[test]
fn errors_and_erasures_verify_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let cw = encode_rs73(dir.path(), "1 2 3\n0 0 0\n7 0 7\n4 4 1\n");
    let (rx, truth) = (path(dir.path(), "rx.txt"), path(dir.path(), "truth.jsonl"));
    let mut args = vec!["corrupt".to_string()];
    args.extend(with(&RS73, &["-i", &cw, "-o", &rx, "--seed", "11", "--errors", "1", "--erasures", "2", "--truth", &truth]));
    assert!(run(args).status.success());
    for decoder in ["gao", "gao-mod", "syndrome"] {
        for imp in ["direct", "fast"] {
            let mut args = vec!["decode".to_string()];
            args.extend(with(&RS73, &["--decoder", decoder, "--impl", imp, "-i", &rx, "--verify", &truth]));
            let out = run(args);
            assert_eq!(out.status.code(), Some(0), "{decoder} {imp}");
            assert!(stdout(&out).lines().all(|l| l.contains("\"verify\":\"recovered\"")));
        }
    }
}

#[test]
fn three_errors_fail_or_report_miscorrection() {
    let dir = tempfile::tempdir().unwrap();
    let cw = encode_rs73(dir.path(), "1 2 3\n");
    for seed in 0..12 {
        let (rx, truth) = (path(dir.path(), "rx.txt"), path(dir.path(), "truth.jsonl"));
        let mut args = vec!["corrupt".to_string()];
        args.extend(with(&RS73, &["-i", &cw, "-o", &rx, "--seed", &seed.to_string(), "--errors", "3", "--truth", &truth]));
        assert!(run(args).status.success());
        let mut args = vec!["decode".to_string()];
        args.extend(with(&RS73, &["--decoder", "gao", "-i", &rx, "--verify", &truth]));
        let out = run(args);
        let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        match out.status.code() {
            Some(1) => assert_eq!(v["verify"], "failure"),
            Some(0) => {
                assert_eq!(v["verify"], "miscorrected");
                assert_ne!(v["message"], "1 2 3");
            }
            other => panic!("seed {seed}: exit {other:?}"),
        }
    }
}

#[test]
fn same_seed_same_bytes() {
    let args = ["bench", "--m", "4", "--k", "7", "--trials", "30", "--both", "--seed", "3", "--format", "json"];
    let a = rswb(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_rswb")).args(args).env("RSWB_THREADS", "1").output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let cw = encode_rs73(dir.path(), "1 2 3\n3 2 1\n");
    let corrupt = |out: &str| {
        let mut args = vec!["corrupt".to_string()];
        args.extend(with(&RS73, &["-i", &cw, "-o", out, "--seed", "8", "--errors", "2"]));
        assert!(run(args).status.success());
        std::fs::read(out).unwrap()
    };
    assert_eq!(corrupt(&path(dir.path(), "a")), corrupt(&path(dir.path(), "b")));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let w = path(dir.path(), "w.txt");
    std::fs::write(&w, "1 2 3 4\n").unwrap();
    let out = rswb(&["decode", "--m", "3", "--n", "4", "--k", "2", "--points", "1,2,3,4", "--decoder", "syndrome", "-i", &w]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gao-mod"));
    assert_eq!(rswb(&["decode", "--m", "3", "--k", "3", "--decoder", "bch", "-i", &w]).status.code(), Some(2));
    assert_eq!(rswb(&["decode", "--m", "3", "--k", "3", "-i", &w]).status.code(), Some(2));
}

#[test]
fn report_subcommands_run() {
    let hw = rswb(&["hwmodel", "--n", "511", "--k", "447", "--format", "json"]);
    assert!(hw.status.success());
    let v: serde_json::Value = serde_json::from_slice(&hw.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let th = rswb(&["thresholds"]);
    assert_eq!(th.status.code(), Some(0));
    assert!(stdout(&th).lines().skip(1).all(|l| l.ends_with(",true")));
}
