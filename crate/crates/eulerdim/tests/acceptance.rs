//! Acceptance criteria 1-9. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::{random_clarified, random_dag, rng, Sketch2D};
use eulerdim::cli::{run_with_hooks, Hooks};
use eulerdim::io::read_context;
use eulerdim::json::Diagram;
use eulerdim_core::context::{clarify, make_contranominal, ClarifiedContext, FormalContext};
use eulerdim_core::dimension::{brute_force_dimension, k_realizer, two_dim_realizer, Phase, SearchOptions, Verdict};
use eulerdim_core::euler1d::{euler1d, is_conceptual, verify_chi, verify_correspondence_1d, OneDimOutcome};
use eulerdim_core::euler2d::{euler2d, synthesize_four_extensions, verify_correspondence_2d, TwoDimOutcome};
use eulerdim_core::poset::{
    concept_lattice_poset, euler_poset, extended_euler_poset, make_standard_example, ExtendedLayout, Poset,
};
use rand::Rng;

/// Writes past the test harness's output capture, so the lines show up in a
/// plain `cargo test` run.
macro_rules! say {
    ($($arg:tt)*) => {{
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, $($arg)*);
        let _ = out.flush();
    }};
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn load(name: &str) -> ClarifiedContext {
    clarify(&read_context(&data(name)).unwrap())
}

fn check_1d(c: &ClarifiedContext, out: &OneDimOutcome) {
    let d = out.diagram().expect("interval diagram");
    let ctx = c.context();
    assert!(verify_correspondence_1d(d, ctx).unwrap());
    assert!(is_conceptual(d));
    assert!(verify_chi(d, ctx).unwrap());
}

fn europe_golden() {
    // a: no interval diagram, Euler-poset of dimension exactly 3
    let europe = load("europe.cxt");
    assert!(!euler1d(&europe).unwrap().is_realizable());
    let p = euler_poset(europe.context()).unwrap();
    assert_eq!(p.len(), 12);
    assert_eq!(brute_force_dimension(&p, 6).unwrap().value(), Some(3));
    // b: without Croatia it has one
    let minus = clarify(&europe.context().without_object("Croatia"));
    assert_eq!(minus.context(), load("europe-minus-croatia.cxt").context());
    check_1d(&minus, &euler1d(&minus).unwrap());
    // c: a rectangle diagram, L_i the only extension with b_i below a_i
    let TwoDimOutcome::Diagram { diagram, extensions, .. } = euler2d(&europe, SearchOptions::default()).unwrap() else {
        panic!("no rectangle diagram for the full context");
    };
    assert!(verify_correspondence_2d(&diagram, europe.context()).unwrap());
    let lay = ExtendedLayout { ng: 7, nm: 5 };
    for i in 1..=4 {
        let flips: Vec<usize> = (0..4)
            .filter(|&j| {
                let pos = extensions[j].positions();
                pos[lay.frame_b(i)] < pos[lay.frame_a(i)]
            })
            .collect();
        assert_eq!(flips, [i - 1]);
    }
}

fn fig5_tightness() {
    let c = load("fig5.cxt");
    let lattice = concept_lattice_poset(c.context());
    let (l1, l2) = two_dim_realizer(&lattice).unwrap().expect("lattice of dimension 2");
    assert!(lattice.realizes(&eulerdim_core::Realizer::new(vec![l1, l2])).unwrap());
    assert!(lattice.incomparable_pairs().len() > 0);
    let p = euler_poset(c.context()).unwrap();
    assert!(two_dim_realizer(&p).unwrap().is_none());
    assert_eq!(brute_force_dimension(&p, 4).unwrap().value(), Some(3));
}

fn contranominal_tightness() {
    for n in 2..=4 {
        let p = euler_poset(&make_contranominal(n).unwrap()).unwrap();
        let s = make_standard_example(n).unwrap();
        // g_i to a_i and m_i to b_i
        for x in 0..2 * n {
            for y in 0..2 * n {
                assert_eq!(p.leq(x, y), s.leq(x, y));
            }
        }
        assert_eq!(brute_force_dimension(&p, n + 1).unwrap().value(), Some(n));
    }
}

fn one_dim_equivalence() {
    let mut r = rng(1001);
    let mut realizable = 0;
    for _ in 0..500 {
        let c = random_clarified(&mut r, 9);
        let p = euler_poset(c.context()).unwrap();
        let oracle = brute_force_dimension(&p, 9).unwrap().value().unwrap();
        let out = euler1d(&c).unwrap();
        assert_eq!(out.is_realizable(), oracle <= 2, "{:?}", c.context().to_matrix());
        if out.is_realizable() {
            realizable += 1;
            check_1d(&c, &out);
        }
    }
    say!("    {realizable}/500 contexts had an interval diagram");
}

fn two_dim_round_trip() {
    let mut r = rng(1002);
    let mut max_nodes = 0;
    for _ in 0..200 {
        let ng = r.gen_range(1..=6);
        let nm = r.gen_range(1..=6);
        let (c, sketch) = Sketch2D::anchored(&mut r, ng, nm, 10).clarified();
        let ctx = c.context();
        match euler2d(&c, SearchOptions::default()).unwrap() {
            TwoDimOutcome::Diagram { diagram, nodes, .. } => {
                assert!(verify_correspondence_2d(&diagram, ctx).unwrap());
                max_nodes = max_nodes.max(nodes);
            }
            other => panic!("{other:?} on {:?}", ctx.to_matrix()),
        }
        let [l1, l2, l3, l4] = sketch.decompose(ctx);
        let realizer = synthesize_four_extensions((&l1, &l2), (&l3, &l4), ctx).unwrap();
        assert!(extended_euler_poset(ctx).unwrap().realizes(&realizer).unwrap());
    }
    say!("    largest exact search: {max_nodes} nodes");
}

fn random_poset(r: &mut impl Rng) -> Poset {
    let n = r.gen_range(0..=8);
    let density = r.gen_range(0.05..0.6);
    Poset::from_relation(common::names("x", n), &random_dag(r, n, density)).unwrap()
}

fn dimension_engine() {
    let mut r = rng(1003);
    for _ in 0..1000 {
        let p = random_poset(&mut r);
        let oracle = brute_force_dimension(&p, 4).unwrap().value().unwrap();
        assert_eq!(two_dim_realizer(&p).unwrap().is_some(), oracle <= 2, "{p}");
        let w = k_realizer(&p, 3, SearchOptions { exact_only: true, ..SearchOptions::default() }).unwrap();
        match w.verdict {
            Verdict::Realizable => assert!(oracle <= 3 && p.realizes(w.realizer.as_ref().unwrap()).unwrap()),
            Verdict::NotRealizable => assert!(oracle > 3),
            Verdict::Unknown => panic!("exact search ran out of budget on {} elements", p.len()),
        }
    }
}

fn standard_example_four() {
    let s4 = make_standard_example(4).unwrap();
    let yes = k_realizer(&s4, 4, SearchOptions::default()).unwrap();
    assert_eq!(yes.verdict, Verdict::Realizable);
    assert!(s4.realizes(yes.realizer.as_ref().unwrap()).unwrap());
    let no = k_realizer(&s4, 3, SearchOptions::default()).unwrap();
    assert_eq!((no.verdict, no.phase), (Verdict::NotRealizable, Phase::Exact));
    assert!(no.certificate.is_some());
}

/// Objects `g_0..g_n`, attributes with `m_j' = {g_0..g_j}`.
fn nested_chain(n: usize) -> ClarifiedContext {
    let rows: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
    let ctx = FormalContext::new(common::names("g", n), common::names("m", n), &rows).unwrap();
    ClarifiedContext::from_clarified(ctx).unwrap()
}

fn quadratic_smoke() {
    let mut times = Vec::new();
    for n in [500, 1000, 2000] {
        let c = nested_chain(n);
        // best of three damps scheduler noise
        let mut best = Duration::MAX;
        for _ in 0..3 {
            let start = Instant::now();
            let out = euler1d(&c).unwrap();
            best = best.min(start.elapsed());
            assert!(out.is_realizable());
        }
        say!("    {n} attributes: {:.3} s", best.as_secs_f64());
        times.push(best);
    }
    for w in times.windows(2) {
        let growth = w[1].as_secs_f64() / w[0].as_secs_f64().max(1e-6);
        say!("    growth per doubling: {growth:.2}");
        assert!(growth <= 5.5, "growth {growth:.2}");
    }
    assert!(times[2] < Duration::from_secs(30));
}

fn self_check_discipline() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let draw = |input: &Path, hooks: &Hooks| -> (i32, serde_json::Value) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = [
            "euler-dim",
            "draw",
            input.to_str().unwrap(),
            "--json",
            json.to_str().unwrap(),
            "--report",
            "json",
        ];
        let code = run_with_hooks(args, hooks, &mut out, &mut err);
        (code, serde_json::from_slice(&out).unwrap())
    };
    let corrupt = Hooks {
        corrupt: Some(Box::new(|d: &mut Diagram| match d {
            Diagram::One(d) => d.points[0] += 2 * d.points.len() as i64 + 100,
            Diagram::Two(d) => d.y.points[0] -= 1000,
        })),
    };
    for name in ["europe.cxt", "europe-minus-croatia.cxt", "fig5.cxt"] {
        let _ = std::fs::remove_file(&json);
        let (code, report) = draw(&data(name), &Hooks::default());
        assert_eq!(code, 0);
        assert_eq!(report["self_check"], true);
        assert!(json.exists());
        std::fs::remove_file(&json).unwrap();
        let (code, report) = draw(&data(name), &corrupt);
        assert_eq!(code, 1, "{name}: corrupted diagram not caught");
        assert_eq!(report["self_check"], false);
        assert!(!json.exists());
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 9] = [
        ("1 Europe golden tests", europe_golden),
        ("2 lattice dimension 2, Euler-poset dimension 3", fig5_tightness),
        ("3 contranominal scales give S2, S3, S4", contranominal_tightness),
        ("4 interval diagrams iff Euler-poset dimension <= 2 (500 contexts)", one_dim_equivalence),
        ("5 rectangle round trip and synthesized realizers (200 contexts)", two_dim_round_trip),
        ("6 dimension engine against the brute-force oracle (1000 posets)", dimension_engine),
        ("7 S4 has dimension exactly 4", standard_example_four),
        ("8 nested chains of 500/1000/2000 attributes", quadratic_smoke),
        ("9 draw self-check and fault injection", self_check_discipline),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        say!("criterion {name}: {} ({:.2} s)", if ok { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
