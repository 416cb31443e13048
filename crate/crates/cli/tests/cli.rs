use std::fs;
use std::process::Command;

use lrp_cli::exit;
use lrp_cli::record::RecordJson;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["lrp"];
    full.extend_from_slice(args);
    let code = lrp_cli::run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn binary(args: &[&str], jobs: Option<&str>) -> std::process::Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lrp"));
    cmd.args(args).env_remove("LRP_JOBS");
    if let Some(j) = jobs {
        cmd.env("LRP_JOBS", j);
    }
    cmd.output().unwrap()
}

#[test]
fn classify_small_range() {
    let (code, out, _) = run(&["classify", "--max-index", "3"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out, "l=1 n=16 self_dual=4\nl=3 n=1 self_dual=1\n");
}

#[test]
fn tables_match_published_rows() {
    let (code, out, _) = run(&["tables", "--which", "self-dual", "--max-index", "9"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out, "l,1,3,5,7,9\ns(l),4,1,4,3,1\n");

    let (_, out, _) = run(&["tables", "--which", "orders", "--max-index", "13"]);
    assert!(out.starts_with("l,o_P\n1,\"1\"\n"));
    assert!(out.ends_with("13,\"3,4,5,7\"\n"));

    let (_, out, _) = run(&["tables", "--which", "hexagon-i", "--max-index", "39"]);
    assert_eq!(out.lines().last(), Some("13,\"1,4,16\""));
    assert_eq!(out.lines().count(), 8);

    let (_, out, _) = run(&["tables", "--which", "3k", "--max-index", "57"]);
    assert_eq!(
        out,
        "k,1,3,5,7,9,11,13,15,17,19\nn(3k),1,1,1,2,2,2,3,2,3,4\n"
    );

    let (_, out, _) = run(&["tables", "--which", "n", "--max-index", "59"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "n(l),16,1,12,29,1,61,81,1,113,131,2,163,50,2,215");
    assert_eq!(
        lines[3],
        "n(l),233,2,34,285,3,317,335,2,367,182,3,419,72,4,469"
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["tables", "--which", "nope"]).0, exit::USAGE);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, exit::USAGE);
    assert_eq!(run(&["classify", "--max-index", "61"]).0, exit::USAGE);
    assert_eq!(run(&["classify", "--max-index", "0"]).0, exit::USAGE);
    assert_eq!(
        run(&["classify", "--max-index", "201", "--extended"]).0,
        exit::USAGE
    );
    assert_eq!(run(&["dim3"]).0, exit::USAGE);
    assert_eq!(run(&[]).0, exit::USAGE);
    assert_eq!(run(&["--help"]).0, exit::OK);
    assert_eq!(
        binary(&["classify", "--max-index", "3"], Some("zero"))
            .status
            .code(),
        Some(exit::USAGE)
    );
}

#[test]
fn output_is_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    let many = dir.path().join("many.json");
    let a = binary(
        &[
            "classify",
            "--max-index",
            "31",
            "--jobs",
            "1",
            "--out",
            one.to_str().unwrap(),
        ],
        None,
    );
    // LRP_JOBS wins over --jobs
    let b = binary(
        &[
            "classify",
            "--max-index",
            "31",
            "--jobs",
            "1",
            "--out",
            many.to_str().unwrap(),
        ],
        Some("4"),
    );
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(fs::read(&one).unwrap(), fs::read(&many).unwrap());
}

#[test]
fn json_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        run(&["classify", "--max-index", "15", "--out", p]).0,
        exit::OK
    );

    let records: Vec<RecordJson> =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(records.len(), 16 + 1 + 12 + 29 + 1 + 61 + 81 + 1);
    let p3 = records.iter().find(|r| r.l == 3).unwrap();
    assert_eq!(
        (p3.b, p3.b_dual, p3.self_dual, p3.order, p3.hstar),
        (6, 6, true, 2, [1, 10, 7])
    );
    for r in &records {
        assert_eq!(r.to_record().unwrap().index, r.l);
    }

    for suite in ["twelve", "duality", "lattice", "ehrhart", "loops"] {
        let (code, out, _) = run(&["verify", "--suite", suite, "--input", p]);
        assert_eq!(code, exit::OK, "{suite}: {out}");
    }

    let mut tampered = records.clone();
    tampered[5].b += 1;
    fs::write(&path, serde_json::to_string(&tampered).unwrap()).unwrap();
    assert_eq!(
        run(&["verify", "--suite", "twelve", "--input", p]).0,
        exit::VERIFY_FAILED
    );

    fs::write(&path, "[{").unwrap();
    assert_eq!(
        run(&["verify", "--suite", "twelve", "--input", p]).0,
        exit::USAGE
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(&[
            "verify",
            "--suite",
            "twelve",
            "--input",
            missing.to_str().unwrap()
        ])
        .0,
        exit::IO
    );
}

#[test]
fn verify_suites_pass() {
    for suite in ["twelve", "odd", "dim3"] {
        let (code, out, _) = run(&["verify", "--suite", suite, "--max-index", "29"]);
        assert_eq!(code, exit::OK);
        assert!(out.trim_end().ends_with("0 failures: pass"), "{out}");
    }
}

#[test]
fn oracle16_writes_sixteen_entries() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.json");
    let (code, out, _) = run(&["oracle16", "--out", path.to_str().unwrap()]);
    assert_eq!(code, exit::OK);
    assert_eq!(out, "16 reflexive polygons\n");
    let entries: Vec<serde_json::Value> =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(entries.len(), 16);
    for e in &entries {
        assert!(e["normalized_vertices"]
            .as_array()
            .unwrap()
            .contains(&serde_json::json!([0, 1])));
    }
}

#[test]
fn loop_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.json");
    let p = path.to_str().unwrap();

    fs::write(
        &path,
        r#"{"l": 3, "points": [[3,2],[0,1],[-3,-4],[-3,-3],[-3,-2],[0,-1],[3,4],[3,3]]}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["loop", "--check", p]);
    assert_eq!(code, exit::OK);
    assert!(out.contains("length=0 winding=1"));
    assert!(out.contains("dual points=12 dual length=12"));

    fs::write(&path, r#"{"l": 2, "points": [[1,0],[0,1],[-1,0],[0,-1]]}"#).unwrap();
    let (code, out, _) = run(&["loop", "--check", p]);
    assert_eq!(code, exit::VERIFY_FAILED);
    assert!(out.contains("condition (2)"));

    fs::write(&path, r#"{"l": 1}"#).unwrap();
    assert_eq!(run(&["loop", "--check", p]).0, exit::USAGE);
    assert_eq!(
        run(&["loop", "--check", "/nonexistent/loop.json"]).0,
        exit::IO
    );
}

#[test]
fn dim3_examples() {
    let (code, out, _) = run(&["dim3", "--examples"]);
    assert_eq!(code, exit::OK);
    assert!(out.contains("P: vertices=[(-9,-4,-8), (1,0,0), (3,4,0), (5,0,8)] index=2 sum=24 edge_lattice=4 vertex_lattice=32"));
    assert!(out.contains("S: "));
    assert!(out.contains("sum=28"));
}
