use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_surfacecodes")).args(args).env_remove("SURFACECODES_THREADS").output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn build_summaries() {
    let (c, out, _) = run(&["build", "--preset", "elliptic-quadric", "--q", "8", "--m", "5"]);
    assert_eq!(c, 0);
    let v = json(&out);
    assert_eq!((v["schema"].as_u64(), v["length"].as_u64(), v["dual_dimension"].as_u64()), (Some(1), Some(64), Some(28)));
    let (_, out, _) = run(&["build", "--preset", "p2", "--q", "4", "--m", "0"]);
    assert_eq!(json(&out)["dimension"], 1);
    let (c, _, err) = run(&["build", "--preset", "elliptic-quadric", "--q", "4", "--m", "3"]);
    assert_ne!(c, 0);
    assert!(err.contains("out of range"));
}

#[test]
fn distance_from_file_and_preset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.txt");
    let p = path.to_str().unwrap();
    run(&["build", "--preset", "hyperbolic-quadric", "--q", "4", "--m", "2", "--dual-out", p]);
    let (c, out, _) = run(&["distance", p, "--engine", "exhaustive", "--no-timing"]);
    assert_eq!(c, 0);
    let v = json(&out);
    assert_eq!((v["value"].as_u64(), v["certainty"]["kind"].as_str()), (Some(4), Some("exact")));
    let (_, again, _) = run(&["distance", p, "--engine", "exhaustive", "--no-timing", "--workers", "3"]);
    assert_eq!(out, again);
    let (_, out, _) = run(&["distance", "--preset", "p2", "--q", "4", "--m", "1", "--dual"]);
    assert_eq!(json(&out)["value"], 3);
    let (_, out, _) = run(&["distance", "--preset", "elliptic-quadric", "--q", "8", "--m", "5", "--dual", "--target", "24"]);
    let v = json(&out);
    assert_eq!((v["value"].as_u64(), v["certainty"]["kind"].as_str()), (Some(24), Some("upper-bound-only")));
}

#[test]
fn bounds_reports() {
    for (m, want) in [("9", 48), ("10", 64)] {
        let (_, out, _) = run(&["bounds", "--preset", "elliptic-quadric", "--q", "16", "--m", m, "--improved"]);
        assert_eq!(json(&out)["bound"], want);
    }
    let (_, out, _) = run(&["bounds", "--preset", "cubic-no-lines", "--q", "9", "--m", "6", "--improved"]);
    assert_eq!(json(&out)["bound"], 30);
    let (_, out, _) = run(&["bounds", "--preset", "hyperbolic-quadric", "--q", "8", "--m", "3", "--classes", "1,0;0,1;1,1"]);
    assert_eq!(json(&out)["bound"], 5);
    let (_, out, _) = run(&["bounds", "--preset", "elliptic-quadric", "--q", "8", "--m", "6", "--classes", "1;2;3;4;5", "--subset", "4"]);
    let v = json(&out);
    assert_eq!((v["bound"].as_i64(), v["certified"].as_bool()), (Some(32), Some(false)));
}

#[test]
fn reproduce_is_deterministic() {
    let (c, a, _) = run(&["reproduce", "q4-quadrics"]);
    assert_eq!(c, 0);
    assert!(a.starts_with("q,m,length,dual_dimension,hyperbolic,"));
    assert!(a.contains("4,1,16,12,=3,3,basic,true"));
    let out = Command::new(env!("CARGO_BIN_EXE_surfacecodes"))
        .args(["reproduce", "q4-quadrics"])
        .env("SURFACECODES_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(a, String::from_utf8(out.stdout).unwrap());
    let (c, _, err) = run(&["reproduce", "q9-cubic"]);
    assert_ne!(c, 0);
    assert!(err.contains("surface file"));
}

#[test]
fn cubic_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic.txt");
    let p = path.to_str().unwrap();
    let (c, out, _) = run(&["find-cubic", "--q", "9", "--seed", "3", "--out", p]);
    assert_eq!(c, 0);
    assert_eq!(json(&out)["points"], 100);
    let (c, out, _) = run(&["validate-surface", p, "--expect", "cubic-no-lines"]);
    assert_eq!(c, 0);
    assert_eq!(json(&out)["lines"], 0);
    let (c, _, _) = run(&["validate-surface", p, "--expect", "elliptic-quadric"]);
    assert_eq!(c, 2);
    let (c, csv, _) = run(&["reproduce", "q9-cubic", "--surface", p, "--distances", "none"]);
    assert_eq!(c, 0);
    let bounds: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(5).unwrap()).collect();
    assert_eq!(bounds, ["6", "9", "12", "30"]);
}
