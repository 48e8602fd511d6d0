use std::fs;
use std::process::Command;

use subdivide_cli::{run_cli, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("subdivide").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn bell_report_json() {
    let doc = json(&["analyze", "bell", "--n", "1", "--format", "json"]);
    assert_eq!(doc["scheme"]["points"], 4);
    let bell = &doc["rows"][2];
    assert_eq!(bell["label"], "bell");
    let interval = &bell["intervals"][0];
    assert_eq!(interval["lo"]["decimal"], "-1.555555556");
    assert_eq!(interval["lo"]["exact"], "-14/9");
    assert_eq!(interval["hi"]["decimal"], "-0.6666666667");
    assert_eq!(interval["hi"]["exact"], "-2/3");
}

#[test]
fn interpolatory_mask_json() {
    let doc = json(&["mask", "--n", "1", "--alpha", "0", "--format", "json"]);
    let symbol: Vec<&str> = doc["symbol"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(symbol, ["-1/16", "0", "9/16", "1", "9/16", "0", "-1/16"]);
}

#[test]
fn symbolic_mask_text() {
    let (code, out, _) = run(&["mask", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 + 3/8*alpha"), "{out}");
}

#[test]
fn continuity_report_rows() {
    let doc = json(&[
        "--format",
        "json",
        "analyze",
        "continuity",
        "--n",
        "1",
        "--L",
        "1",
    ]);
    assert_eq!(doc["parameters"]["L"], 1);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows[0]["intervals"][0]["lo"]["exact"], "-4");
    assert_eq!(rows[4]["note"], "alpha=-1 only");
    let (code, out, _) = run(&["analyze", "continuity", "--n", "1", "--alpha", "-1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().last().unwrap().contains("C4"), "{out}");
}

#[test]
fn irrational_endpoints_carry_enclosures() {
    let doc = json(&[
        "analyze",
        "continuity",
        "--n",
        "1",
        "--L",
        "2",
        "--format",
        "json",
        "--tolerance",
        "1e-15",
    ]);
    let lo = &doc["rows"][1]["intervals"][0]["lo"];
    assert_eq!(lo["decimal"], "-3.581520882");
    assert!(lo.get("exact").is_none());
    let a: f64 = lo["lo"]
        .as_str()
        .unwrap()
        .split('/')
        .map(|s| s.parse::<f64>().unwrap())
        .reduce(|p, q| p / q)
        .unwrap();
    assert!((a + 3.581520882).abs() < 1e-9);
}

#[test]
fn degree_and_gibbs_reports() {
    let (_, out, _) = run(&["analyze", "generation", "--n", "3"]);
    assert!(
        out.contains("all alpha  7") && out.contains("alpha=-1   13"),
        "{out}"
    );
    let (_, out, _) = run(&["analyze", "reproduction", "--n", "4"]);
    assert!(out.contains("alpha=0    9"), "{out}");
    let doc = json(&[
        "analyze", "gibbs", "--n", "1", "--k", "0", "--format", "json",
    ]);
    assert_eq!(doc["rows"][0]["intervals"][0]["lo"]["decimal"], "-inf");
    assert_eq!(doc["rows"][0]["intervals"][0]["hi"]["exact"], "0");
    let (code, out, _) = run(&["analyze", "shape", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(-1.200000000, -0.5882352941)"), "{out}");
}

#[test]
fn refine_curve_to_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("square.csv");
    fs::write(&input, "# topology: closed\nx,y\n0,0\n1,0\n1,1\n0,1\n").unwrap();
    let csv = dir.path().join("out.csv");
    let (code, _, err) = run(&[
        "refine",
        "curve",
        "--n",
        "1",
        "--alpha",
        "0",
        "--levels",
        "1",
        "--input",
        input.to_str().unwrap(),
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let text = fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], "0,0");
    assert_eq!(rows[1], "1/2,-1/8");
    assert_eq!(rows[2], "1,0");

    let svg = dir.path().join("out.svg");
    let (code, _, _) = run(&[
        "refine",
        "curve",
        "--n",
        "1",
        "--alpha",
        "-1/2",
        "--levels",
        "3",
        "--mode",
        "double",
        "--input",
        input.to_str().unwrap(),
        "--output",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let picture = fs::read_to_string(&svg).unwrap();
    assert!(picture.contains("<polyline") && picture.contains("viewBox"));
}

#[test]
fn refine_surface_to_obj() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("grid.csv");
    let mut text = String::from("# grid: 4x4\n# topology: closed\nx,y,z\n");
    for r in 0..4 {
        for c in 0..4 {
            text.push_str(&format!("{c},{r},{}\n", (r * c) % 2));
        }
    }
    fs::write(&input, text).unwrap();
    let obj = dir.path().join("out.obj");
    let (code, _, err) = run(&[
        "refine",
        "surface",
        "--n",
        "1",
        "--alpha",
        "-0.25",
        "--levels",
        "1",
        "--input",
        input.to_str().unwrap(),
        "--output",
        obj.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let body = fs::read_to_string(&obj).unwrap();
    assert_eq!(body.lines().filter(|l| l.starts_with("v ")).count(), 64);
    assert_eq!(body.lines().filter(|l| l.starts_with("f ")).count(), 64);
}

#[test]
fn basis_samples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("phi.csv");
    let (code, _, _) = run(&[
        "basis",
        "--n",
        "1",
        "--alpha",
        "0",
        "--levels",
        "2",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.lines().any(|l| l == "0,1"), "{text}");
    assert!(text.lines().any(|l| l == "1,0"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.csv");
    fs::write(&tri, "x,y\n0,0\n1,0\n0,1\n").unwrap();
    let out = dir.path().join("o.csv");
    let (code, _, err) = run(&[
        "refine",
        "curve",
        "--n",
        "1",
        "--alpha",
        "0",
        "--levels",
        "1",
        "--input",
        tri.to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(
        err.contains("needs at least 4") || err.to_lowercase().contains("points"),
        "{err}"
    );
    assert_eq!(err.lines().count(), 1);

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "x,y\n0,0\n1,,2\n").unwrap();
    let (code, _, err) = run(&[
        "refine",
        "curve",
        "--n",
        "1",
        "--alpha",
        "0",
        "--input",
        bad.to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("line 3"), "{err}");

    let (code, _, _) = run(&["analyze", "bogus"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["mask", "--n", "1", "--alpha", "abc"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["analyze", "bell", "--n", "0"]);
    assert_eq!(code, EXIT_DOMAIN);
    let sq = dir.path().join("sq.csv");
    fs::write(&sq, "x,y\n0,0\n1,0\n1,1\n0,1\n").unwrap();
    let obj = dir.path().join("o.obj");
    let (code, _, _) = run(&[
        "refine",
        "curve",
        "--n",
        "1",
        "--alpha",
        "0",
        "--input",
        sq.to_str().unwrap(),
        "--output",
        obj.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "analyze",
        "continuity",
        "--n",
        "2",
        "--L",
        "2",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn binary_exit_status() {
    let status = Command::new(env!("CARGO_BIN_EXE_subdivide"))
        .args(["analyze", "bell", "--n", "0"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_DOMAIN));
    let ok = Command::new(env!("CARGO_BIN_EXE_subdivide"))
        .args(["analyze", "bell", "--n", "2"])
        .output()
        .unwrap();
    assert!(ok.status.success());
}
