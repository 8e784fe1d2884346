#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::PathBuf;

use common::{random_context, rng};
use eulerdim::io::{parse_csv, parse_cxt, read_context, write_cxt};
use eulerdim::Error;
use eulerdim_core::context::clarify;
use eulerdim_core::FormalContext;
use rand::Rng;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

#[test]
fn europe_file() {
    let ctx = read_context(&data("europe.cxt")).unwrap();
    assert_eq!((ctx.n_objects(), ctx.n_attributes()), (7, 5));
    assert_eq!(ctx.incidence_count(), 20);
    let text = write_cxt(&ctx);
    assert!(text.lines().any(|l| l == "X.XXX"));
    let germany = ctx.object_index("Germany").unwrap();
    let row: String = (0..5).map(|m| if ctx.incident(germany, m) { 'X' } else { '.' }).collect();
    assert_eq!(row, "X.XXX");
    // the shipped file is already canonical
    assert_eq!(std::fs::read_to_string(data("europe.cxt")).unwrap(), text);

    let att = |n: &str| ctx.attribute_index(n).unwrap();
    let obj = |n: &str| ctx.object_index(n).unwrap();
    let names = |bits: eulerdim_core::BitSet, list: &[String]| bits.iter().map(|i| list[i].clone()).collect::<Vec<_>>();
    let eu_sa = ctx.extent_of(&[att("European U."), att("Schengen A.")]).unwrap();
    assert_eq!(names(eu_sa, ctx.objects()), ["Croatia", "Germany", "Sweden"]);
    let no_ch = ctx.intent_of(&[obj("Norway"), obj("Switzerland")]).unwrap();
    assert_eq!(names(no_ch, ctx.attributes()), ["EFTA", "Schengen A."]);

    let c = clarify(&ctx);
    assert_eq!(c.context(), &ctx);
    assert!(c.object_groups().iter().chain(c.attribute_groups()).all(|g| g.len() == 1));
}

#[test]
fn cxt_round_trip() {
    let mut r = rng(61);
    for _ in 0..200 {
        let ng = r.gen_range(0..10);
        let nm = r.gen_range(0..10);
        let density = r.gen_range(0.0..1.0);
        let ctx = random_context(&mut r, ng, nm, density);
        let text = write_cxt(&ctx);
        let back = parse_cxt(&text).unwrap();
        assert_eq!(back, ctx);
        assert_eq!(write_cxt(&back), text);
    }
}

#[test]
fn lowercase_crosses_and_loose_blank_lines() {
    let strict = parse_cxt("B\n\n2\n2\n\ng\nh\na\nb\nX.\n.X\n").unwrap();
    let loose = parse_cxt("B\n\n\n2\n2\n\n\ng\nh\na\nb\nx.\n.x\n\n").unwrap();
    assert_eq!(strict, loose);
}

#[test]
fn csv_matches_cxt() {
    let mut r = rng(62);
    for _ in 0..50 {
        let ctx = random_context(&mut r, 5, 4, 0.5);
        let mut csv = String::from("object");
        for a in ctx.attributes() {
            csv.push(',');
            csv.push_str(a);
        }
        csv.push('\n');
        for g in 0..ctx.n_objects() {
            csv.push_str(&ctx.objects()[g]);
            for m in 0..ctx.n_attributes() {
                csv.push_str(if ctx.incident(g, m) { ",1" } else { ",0" });
            }
            csv.push('\n');
        }
        assert_eq!(parse_csv(&csv).unwrap(), ctx);
    }
}

#[test]
fn files_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    std::fs::write(&csv, "o,a\ng,1\n").unwrap();
    let ctx = read_context(&csv).unwrap();
    assert_eq!(ctx, FormalContext::new(vec!["g".into()], vec!["a".into()], &[vec![true]]).unwrap());
    let txt = dir.path().join("t.txt");
    std::fs::write(&txt, "").unwrap();
    assert!(matches!(read_context(&txt), Err(Error::Format(_))));
    assert!(matches!(read_context(&dir.path().join("missing.cxt")), Err(Error::File { .. })));
}

#[test]
fn duplicate_names_are_parse_errors() {
    assert!(matches!(parse_cxt("B\n\n2\n0\n\ng\ng\n\n\n"), Err(Error::Parse { .. })));
}
