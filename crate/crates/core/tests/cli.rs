mod common;

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use common::samples_dir;

fn plutchik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plutchik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sample(name: &str) -> String {
    samples_dir().join(name).display().to_string()
}

fn assert_svg(path: &Path) -> String {
    let svg = std::fs::read_to_string(path).unwrap();
    roxmltree::Document::parse(&svg).expect("well-formed SVG");
    svg
}

#[test]
fn render_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("wheel.svg");
    let o = plutchik(&["render", &sample("scores.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let svg = assert_svg(&out);
    assert!(svg.contains("id=\"petal-joy\""));
}

#[test]
fn render_to_stdout_and_from_stdin() {
    let o = plutchik(&["render", &sample("intensity.json"), "--intensity-labels", "joy"]);
    assert_eq!(o.status.code(), Some(0));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("score-joy-mild"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_plutchik"))
        .args(["render", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read(samples_dir().join("primary.json")).unwrap();
    child.stdin.take().unwrap().write_all(&text).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().contains("center-label"));
}

#[test]
fn dyad_row_from_several_inputs() {
    let files = ["basic.json", "primary.json", "secondary.json", "tertiary.json", "opposite.json"];
    let mut args = vec!["render".to_string()];
    args.extend(files.iter().map(|f| sample(f)));
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let o = plutchik(&args);
    assert_eq!(o.status.code(), Some(0));
    let svg = String::from_utf8(o.stdout).unwrap();
    for k in 0..5 {
        assert!(svg.contains(&format!("id=\"cell-{k}\"")));
    }
}

#[test]
fn compare_highlights_three_petals() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp.svg");
    let o = plutchik(&[
        "compare", &sample("amazon.jsonl"), "--group-by", "stars",
        "--highlight", "anger,disgust,fear", "-o", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = assert_svg(&out);
    for k in 0..5 {
        assert!(svg.contains(&format!("id=\"cell-{k}-title\"")));
        let ghosted = common::attr_of(&svg, &format!("cell-{k}-petal-joy-body"), "fill").unwrap();
        assert_eq!(ghosted, "#d9d9d9");
        let lit = common::attr_of(&svg, &format!("cell-{k}-petal-anger-body"), "fill").unwrap();
        assert_ne!(lit, "#d9d9d9");
    }
}

#[test]
fn grid_hides_coordinates_when_large() {
    let o = plutchik(&["grid", &sample("genres.jsonl"), "--group-by", "genre"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = String::from_utf8(o.stdout).unwrap();
    assert!(svg.contains("cell-19-petal-joy") && !svg.contains("cell-20"));
    assert!(!svg.contains("-grid-0.2"));

    let o = plutchik(&["grid", &sample("genres.jsonl"), "--group-by", "genre", "--coordinates"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains("cell-0-grid-0.2"));

    let o = plutchik(&["grid", &sample("amazon.jsonl"), "--group-by", "stars", "--rows", "2", "--cols", "2"]);
    assert_eq!(o.status.code(), Some(40));

    let dir = tempfile::tempdir().unwrap();
    let small = dir.path().join("small.jsonl");
    std::fs::write(&small, "{\"joy\": 1}\n{\"fear\": 0.5}\n").unwrap();
    let o = plutchik(&["grid", small.to_str().unwrap()]);
    let svg = String::from_utf8(o.stdout).unwrap();
    assert!(svg.contains("cell-1-grid-0.2"), "two cells keep coordinates");
}

#[test]
fn documented_error_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let basic = |over: &str| {
        let mut m: serde_json::Map<String, serde_json::Value> = common::BASIC
            .iter()
            .map(|k| (k.to_string(), serde_json::json!(0.5)))
            .collect();
        let extra: serde_json::Map<String, serde_json::Value> = serde_json::from_str(over).unwrap();
        m.extend(extra);
        serde_json::Value::Object(m).to_string()
    };
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["render".into(), "/nonexistent/x.json".into()], 3),
        (vec!["render".into(), write("bad.json", "{\"joy\": ")], 4),
        (vec!["render".into(), write("unk.json", &basic("{\"glee\": 1}"))], 10),
        (vec!["render".into(), write("dup.json", &basic("{\"JOY\": 1}"))], 11),
        (vec!["render".into(), sample("mixed.json")], 12),
        (vec!["render".into(), write("bv.json", &basic("{\"joy\": \"x\"}"))], 13),
        (vec!["render".into(), write("ar.json", "{\"joy\": 1}")], 14),
        (vec!["render".into(), write("or.json", &basic("{\"joy\": 1.5}"))], 15),
        (vec!["render".into(), write("to.json", &basic(r#"{"joy": [0.5,0.5,0.5], "trust": [0,0,0], "fear": [0,0,0], "surprise": [0,0,0], "sadness": [0,0,0], "disgust": [0,0,0], "anger": [0,0,0], "anticipation": [0,0,0]}"#))], 16),
        (vec!["render".into(), write("empty.json", "{}")], 17),
        (vec!["compare".into(), write("ec.jsonl", "\n"), "--group-by".into(), "g".into()], 20),
        (vec!["grid".into(), write("het.jsonl", "{\"joy\": 1}\n{\"love\": 1}\n")], 21),
        (vec!["compare".into(), sample("amazon.jsonl"), "--group-by".into(), "genre".into()], 22),
        (vec!["compare".into(), write("eg.jsonl", "{\"joy\": 1, \"g\": \"\"}\n"), "--group-by".into(), "g".into()], 23),
        (vec!["render".into(), sample("scores.json"), "--highlight".into(), "glee".into()], 30),
        (vec!["render".into(), sample("scores.json"), "--intensity-labels".into(), "joy".into()], 31),
        (vec!["render".into(), sample("scores.json"), "--ratio".into(), "0".into()], 32),
        (vec!["grid".into(), sample("amazon.jsonl"), "--group-by".into(), "stars".into(), "--rows".into(), "1".into(), "--cols".into(), "1".into()], 40),
        (vec!["render".into(), sample("scores.json"), "--ratio".into(), "abc".into()], 2),
        (vec!["render".into()], 2),
        (vec!["render".into(), sample("scores.json"), "-o".into(), "/nonexistent/dir/out.svg".into()], 3),
    ];
    for (args, code) in cases {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = plutchik(&argv);
        assert_eq!(o.status.code(), Some(code), "{argv:?}: {}", String::from_utf8_lossy(&o.stderr));
        if code != 2 {
            let stderr = String::from_utf8(o.stderr).unwrap();
            assert_eq!(stderr.lines().count(), 1, "one-line diagnostic: {stderr}");
            assert!(o.stdout.is_empty());
        }
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["compare", &sample("amazon.jsonl"), "--group-by", "stars"];
    let first = plutchik(&args).stdout;
    for _ in 0..3 {
        assert_eq!(plutchik(&args).stdout, first);
    }
}
