use std::process::{Command, Output};

use chroma::io::from_dot;

fn chroma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chroma"))
        .args(args)
        .env_remove("CHROMA_GUARD_LMAX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn embody_dot_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let o = chroma(&[
        "embody",
        "--cluster",
        "5,4,3,3",
        "--kind",
        "type1",
        "--complete",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "order=15 size=17 chi=4\n");
    let g = from_dot(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((g.graph().order(), g.graph().size()), (15, 17));
}

#[test]
fn dot_round_trip_through_binary() {
    for kind in ["type1", "type2", "thorn", "multipartite", "path_type"] {
        let o = chroma(&[
            "embody",
            "--cluster",
            "3,3,2",
            "--kind",
            kind,
            "--format",
            "dot",
        ]);
        assert_eq!(o.status.code(), Some(0), "{kind}");
        let text = stdout(&o);
        let (dot, summary) = text.rsplit_once("}\n").unwrap();
        let g = from_dot(&format!("{dot}}}\n")).unwrap();
        let built = chroma::embodiment::build(
            kind_of(kind),
            &chroma::cluster::ColourCluster::new(vec![3, 3, 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(g, built, "{kind}");
        assert!(summary.starts_with("order=8 "), "{summary}");
    }
}

fn kind_of(name: &str) -> chroma::embodiment::EmbodimentKind {
    use chroma::embodiment::EmbodimentKind::*;
    match name {
        "type1" => Type1Tree,
        "type2" => Type2Tree,
        "thorn" => Thorn,
        "multipartite" => MultipartiteMax,
        _ => PathType,
    }
}

#[test]
fn null_json() {
    let o = chroma(&[
        "embody",
        "--cluster",
        "1",
        "--kind",
        "null",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let json = text
        .rsplit_once("}\n")
        .map(|(a, _)| format!("{a}}}"))
        .unwrap();
    let g = chroma::io::from_json(&json).unwrap();
    assert_eq!(g.graph().order(), 1);
    assert!(text.ends_with("order=1 size=0 chi=1\n"));
}

#[test]
fn construction_errors_exit_one() {
    let o = chroma(&["embody", "--cluster", "5,1", "--kind", "path_type"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("path-type construction failed"));
    assert_eq!(
        chroma(&["embody", "--cluster", "3", "--kind", "type1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        chroma(&["embody", "--cluster", "x", "--kind", "type1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(chroma(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(chroma(&["--help"]).status.code(), Some(0));
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn indices_examples() {
    let k3 = json(&chroma(&[
        "indices",
        "--cluster",
        "1,1,1",
        "--kind",
        "type2",
        "--complete",
    ]));
    assert_eq!(
        k3["indices"],
        serde_json::json!({"m1": 14, "m2": 11, "m3": 4})
    );

    let star = json(&chroma(&[
        "indices",
        "--cluster",
        "3,1",
        "--kind",
        "type1",
        "--extremal",
    ]));
    assert_eq!(star["extremal"]["m1"]["min"]["value"], 7);
    assert_eq!(star["extremal"]["m1"]["max"]["value"], 13);

    let path = json(&chroma(&["indices", "--cluster", "2,1", "--kind", "type1"]));
    assert_eq!(path["indices"]["m2"], 4);
}

#[test]
fn factorial_guard_env_and_flag() {
    let run = |limit_env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_chroma"));
        c.args([
            "indices",
            "--cluster",
            "1,1,1,1",
            "--kind",
            "type1",
            "--extremal",
        ]);
        if let Some(f) = flag {
            c.args(["--limit", f]);
        }
        match limit_env {
            Some(v) => c.env("CHROMA_GUARD_LMAX", v),
            None => c.env_remove("CHROMA_GUARD_LMAX"),
        };
        c.output().unwrap().status.code()
    };
    assert_eq!(run(None, None), Some(0));
    assert_eq!(run(Some("3"), None), Some(1));
    assert_eq!(run(Some("3"), Some("4")), Some(0));
    assert_eq!(run(None, Some("3")), Some(1));
    assert_eq!(run(Some("many"), None), Some(1));
}

#[test]
fn verify_examples() {
    let two = json(&chroma(&[
        "verify", "--suites", "p33", "--r-max", "2", "--n-max", "1",
    ]));
    let records = two["records"].as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r["status"] == "match"));

    let o = chroma(&["verify", "--suites", "p33", "--r-max", "3", "--n-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let three = json(&o);
    assert!(three["records"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["formula_id"] == "P33_M3" && r["status"] == "mismatch"));
}

#[test]
fn strict_exit_codes() {
    let clean = chroma(&[
        "verify",
        "--suites",
        "structure",
        "--l-max",
        "4",
        "--r-max",
        "3",
        "--strict",
    ]);
    assert_eq!(clean.status.code(), Some(0));
    for fault in ["drop-tree-edge", "miscolour"] {
        let o = chroma(&[
            "verify",
            "--suites",
            "structure",
            "--l-max",
            "4",
            "--r-max",
            "3",
            "--strict",
            "--inject-fault",
            fault,
        ]);
        assert_eq!(o.status.code(), Some(2), "{fault}");
        let lax = chroma(&[
            "verify",
            "--suites",
            "structure",
            "--l-max",
            "4",
            "--r-max",
            "3",
            "--inject-fault",
            fault,
        ]);
        assert_eq!(lax.status.code(), Some(0), "{fault}");
    }
    // formula mismatches never trip --strict
    let p33 = chroma(&["verify", "--suites", "p33,l34", "--strict"]);
    assert_eq!(p33.status.code(), Some(0));
}

#[test]
fn verify_bad_config() {
    assert_eq!(
        chroma(&["verify", "--suites", "p99"]).status.code(),
        Some(1)
    );
    assert_eq!(chroma(&["verify", "--l-max", "0"]).status.code(), Some(1));
    assert_eq!(
        chroma(&["verify", "--suites", "type1", "--l-max", "9"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        chroma(&["verify", "--inject-fault", "nope"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_is_byte_deterministic() {
    let args = [
        "verify",
        "--suites",
        "tree,type1,structure",
        "--l-max",
        "4",
        "--r-max",
        "3",
        "--seed",
        "11",
    ];
    let a = chroma(&args);
    let b = chroma(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_examples() {
    let o = chroma(&[
        "sweep",
        "--sequence",
        "s1",
        "--l-max",
        "3",
        "--kinds",
        "type1_complete",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let headers = rows.headers().unwrap().clone();
    let recs: Vec<_> = rows.records().map(Result::unwrap).collect();
    assert_eq!(recs.len(), 3);
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    assert_eq!(&recs[1][col("l")], "2");
    assert_eq!(&recs[1][col("m1_min")], "6");

    let fib = stdout(&chroma(&["sweep", "--sequence", "s2", "--l-max", "4"]));
    assert!(fib
        .lines()
        .filter(|l| l.starts_with("s2,4,"))
        .all(|l| l.contains(",3;2;1;1,")));
    assert_eq!(fib.lines().filter(|l| l.starts_with("s2,4,")).count(), 4);

    assert_eq!(
        chroma(&["sweep", "--sequence", "s1", "--l-max", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        chroma(&["sweep", "--sequence", "s3", "--l-max", "2"])
            .status
            .code(),
        Some(1)
    );

    let help = stdout(&chroma(&["sweep", "--help"]));
    assert!(help.contains("m1_min_formula"));
}

#[test]
fn csv_edge_list() {
    let o = chroma(&[
        "embody",
        "--cluster",
        "2,1",
        "--kind",
        "type1",
        "--format",
        "csv",
    ]);
    assert!(stdout(&o).starts_with("u,v,colour_u,colour_v\nv_1_1,v_2_1,1,2\n"));
}
