use std::path::{Path, PathBuf};

use eulerdim::cli::{run, run_with_hooks, Hooks};
use eulerdim::io::read_context;
use eulerdim::json::{parse_json, Diagram};
use eulerdim_core::context::clarify;
use eulerdim_core::euler1d::{is_conceptual, verify_chi, verify_correspondence_1d};
use eulerdim_core::euler2d::verify_correspondence_2d;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn euler_dim(args: &[&str]) -> (i32, String, String) {
    euler_dim_with(args, &Hooks::default())
}

fn euler_dim_with(args: &[&str], hooks: &Hooks) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("euler-dim").chain(args.iter().copied());
    let code = run_with_hooks(argv, hooks, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--report", "json"]);
    let (code, out, _) = euler_dim(&full);
    (code, serde_json::from_str(&out).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn check_verdicts() {
    let (code, r) = json_report(&["check", &data("europe.cxt")]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("realizable-2d-only")));
    let (code, r) = json_report(&["check", &data("europe-minus-croatia.cxt")]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("realizable-1d")));
    let (code, r) = json_report(&["check", &data("fig5.cxt")]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("realizable-2d-only")));
    assert_eq!(r["poset_sizes"]["euler"], 9);
    assert!(r["timings_ms"]["euler1d"].is_number());
}

#[test]
fn check_refuses_contranominal_five() {
    let dir = tempfile::tempdir().unwrap();
    let rows: String = (0..5).map(|i| (0..5).map(|j| if i == j { '.' } else { 'X' }).collect::<String>() + "\n").collect();
    let names: String = (1..=5).map(|i| format!("g{i}\n")).chain((1..=5).map(|i| format!("m{i}\n"))).collect();
    let path = write(dir.path(), "c5.cxt", &format!("B\n\n5\n5\n\n{names}{rows}"));
    let (code, r) = json_report(&["check", &path]);
    assert_eq!((code, r["verdict"].as_str()), (2, Some("not-realizable-2d")));
    assert!(r["obstruction"]["certificate"].as_str().unwrap().contains("exhausted"));
    assert_eq!(r["obstruction"]["standard_example"][0].as_array().unwrap().len(), 5);
    let (code, r) = json_report(&["check", &path, "--budget", "1"]);
    assert_eq!((code, r["verdict"].as_str()), (3, Some("unknown")));
}

#[test]
fn draw_interval_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("d.svg");
    let json = dir.path().join("d.json");
    let input = data("europe-minus-croatia.cxt");
    let (code, r) = json_report(&[
        "draw", &input, "--dim", "1", "--svg", svg.to_str().unwrap(), "--json", json.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["self_check"], true);
    assert_eq!(r["drawn_dimension"], 1);
    let text = std::fs::read_to_string(&json).unwrap();
    let Diagram::One(d) = parse_json(&text).unwrap().0 else { panic!("not an interval diagram") };
    let ctx = read_context(Path::new(&input)).unwrap();
    let ctx = clarify(&ctx).into_context();
    assert!(verify_correspondence_1d(&d, &ctx).unwrap() && is_conceptual(&d) && verify_chi(&d, &ctx).unwrap());
    assert_eq!(std::fs::read_to_string(&svg).unwrap().matches("class=\"bar\"").count(), 5);
}

#[test]
fn draw_refuses_intervals_for_europe() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("d.svg");
    let (code, r) = json_report(&["draw", &data("europe.cxt"), "--dim", "1", "--svg", svg.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r["verdict"], "not-realizable-1d");
    assert!(!svg.exists());
    let (objs, atts) = (&r["obstruction"]["standard_example"][0], &r["obstruction"]["standard_example"][1]);
    let sorted = |v: &Value| {
        let mut s: Vec<String> = v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
        s.sort();
        s
    };
    assert_eq!(sorted(objs), ["Bulgaria", "Croatia", "Norway"]);
    assert_eq!(sorted(atts), ["EEA", "European U.", "Schengen A."]);
    let (_, text, _) = euler_dim(&["draw", &data("europe.cxt"), "--dim", "1"]);
    assert!(text.contains("standard example S3"));
}

#[test]
fn draw_rectangles_for_europe() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("d.svg");
    let json = dir.path().join("d.json");
    let args = ["draw", &data("europe.cxt"), "--svg", svg.to_str().unwrap(), "--json", json.to_str().unwrap()];
    let (code, r) = json_report(&args);
    assert_eq!((code, r["verdict"].as_str(), r["drawn_dimension"].as_u64()), (0, Some("realizable-2d-only"), Some(2)));
    assert_eq!(std::fs::read_to_string(&svg).unwrap().matches("class=\"rectangle\"").count(), 5);
    let first = std::fs::read(&json).unwrap();
    let Diagram::Two(d) = parse_json(std::str::from_utf8(&first).unwrap()).unwrap().0 else { panic!() };
    assert!(verify_correspondence_2d(&d, &read_context(Path::new(&data("europe.cxt"))).unwrap()).unwrap());
    // same input, budget and seed: same bytes
    json_report(&args);
    assert_eq!(std::fs::read(&json).unwrap(), first);
}

#[test]
fn self_check_catches_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("d.json");
    let hooks = Hooks {
        corrupt: Some(Box::new(|d: &mut Diagram| match d {
            Diagram::One(d) => d.points[0] = d.intervals.iter().map(|iv| iv.end).max().unwrap() + 7,
            Diagram::Two(d) => d.x.points[0] += 1000,
        })),
    };
    for (input, dim) in [("europe-minus-croatia.cxt", "1"), ("europe.cxt", "2")] {
        let (code, out, err) = euler_dim_with(
            &["draw", &data(input), "--dim", dim, "--json", json.to_str().unwrap(), "--report", "json"],
            &hooks,
        );
        let r: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(code, 1);
        assert_eq!(r["self_check"], false);
        assert!(err.contains("self-check failed"));
        assert!(!json.exists());
    }
}

#[test]
fn dim_reports() {
    let (code, r) = json_report(&["dim", &data("europe.cxt")]);
    assert_eq!((code, r["dimension"].as_u64(), r["two_realizable"].as_bool()), (0, Some(3), Some(false)));
    let (_, r) = json_report(&["dim", &data("fig5.cxt"), "--poset", "lattice"]);
    assert_eq!((r["two_realizable"].as_bool(), r["dimension"].as_u64()), (Some(true), Some(2)));
    let (_, r) = json_report(&["dim", &data("fig5.cxt")]);
    assert_eq!(r["dimension"], 3);
    // past the brute-force limit the k-realizer decides
    let (_, r) = json_report(&["dim", &data("fig5.cxt"), "--poset", "extended"]);
    assert_eq!((r["poset_sizes"]["extended"].as_u64(), r["dimension"].as_u64()), (Some(27), Some(4)));
    let (_, r) = json_report(&["dim", &data("europe.cxt"), "--exact-max", "0"]);
    assert_eq!(r["dimension"], 3);
    let dir = tempfile::tempdir().unwrap();
    let chain = write(dir.path(), "chain.cxt", "B\n\n1\n1\n\ng\nm\nX\n");
    let (_, r) = json_report(&["dim", &chain]);
    assert_eq!(r["dimension"], 1);
}

#[test]
fn concept_listing() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.cxt", "B\n\n1\n1\n\ng\nm\nX\n");
    let (code, text, _) = euler_dim(&["concepts", &one]);
    assert_eq!(code, 0);
    assert!(text.contains("{g} | {m}") && text.contains("1 concepts"));
    let c3 = write(dir.path(), "c3.csv", "o,a,b,c\nx,0,1,1\ny,1,0,1\nz,1,1,0\n");
    let (_, r) = json_report(&["concepts", &c3]);
    assert_eq!(r["concept_count"], 8);
    assert_eq!(r["concepts"].as_array().unwrap().len(), 8);
    let (_, r) = json_report(&["concepts", &data("europe.cxt")]);
    let ctx = read_context(Path::new(&data("europe.cxt"))).unwrap();
    assert_eq!(r["concept_count"].as_u64().unwrap() as usize, eulerdim_core::context::concepts(&ctx).len());
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.cxt", "B\n\n1\n1\n\ng\nm\nQ\n");
    let (code, _, err) = euler_dim(&["check", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("line 8"), "{err}");
    let (code, _, _) = euler_dim(&["check", &dir.path().join("missing.cxt").display().to_string()]);
    assert_eq!(code, 1);
    let other = write(dir.path(), "x.txt", "");
    assert_eq!(euler_dim(&["check", &other]).0, 1);
    assert_eq!(euler_dim(&["frobnicate"]).0, 1);
    assert_eq!(euler_dim(&["draw", &data("europe.cxt"), "--dim", "3"]).0, 1);
    assert_eq!(euler_dim(&["--help"]).0, 0);
}

#[test]
fn run_writes_text_reports() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["euler-dim", "check", &data("europe-minus-croatia.cxt")], &mut out, &mut err);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().starts_with("verdict: realizable-1d\n"));
}
