//! The `euler-dim` command line: `check`, `draw`, `dim` and `concepts`.
//!
//! Exit codes: 0 realizable (or the command succeeded), 1 input or internal
//! error, 2 proven not realizable, 3 undecided within the node budget.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerdim_core::context::{clarify, concepts};
use eulerdim_core::euler1d::{is_conceptual, verify_chi, verify_correspondence_1d};
use eulerdim_core::euler2d::verify_correspondence_2d;
use eulerdim_core::poset::{concept_lattice_poset, euler_poset, extended_euler_poset, find_standard_example};
use eulerdim_core::{
    brute_force_dimension, euler1d, euler2d, k_realizer, two_dim_realizer, ClarifiedContext, FormalContext,
    OneDimOutcome, Poset, SearchOptions, TwoDimOutcome, DEFAULT_BUDGET,
};
use indexmap::IndexMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::read_context;
use crate::json::{emit_json, parse_json, Diagram, Groups};
use crate::render::{render_svg_1d, render_svg_2d, RenderStyle};

/// Posets up to this size get an exhaustive standard-example search when a
/// diagram is refused.
pub const OBSTRUCTION_MAX_ELEMENTS: usize = 30;

#[derive(Parser, Debug)]
#[command(name = "euler-dim", version, about = "Decide, draw and render interval and rectangle Euler diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the context has an interval or a rectangle diagram.
    Check(SearchArgs),
    /// Build, self-check and write a diagram.
    Draw(DrawArgs),
    /// Order dimension of a poset derived from the context.
    Dim(DimArgs),
    /// List the formal concepts in lectic order.
    Concepts(InputArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Context file (.cxt or .csv).
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Node budget for the exact realizer search.
    #[arg(long, env = "EULERDIM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Tie-break seed; different seeds may give different diagrams.
    #[arg(long, env = "EULERDIM_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct DrawArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// Diagram dimension; `auto` draws intervals when possible, rectangles otherwise.
    #[arg(long, value_enum, default_value_t = DimChoice::Auto)]
    pub dim: DimChoice,
    /// Write the rendered diagram here
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write the interchange document here
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DimArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, value_enum, default_value_t = PosetChoice::Euler)]
    pub poset: PosetChoice,
    /// Largest poset handed to the brute-force dimension oracle (at most 12).
    #[arg(long, default_value_t = 12)]
    pub exact_max: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimChoice {
    Auto,
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetChoice {
    Euler,
    Extended,
    Lattice,
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    #[serde(rename = "realizable-1d")]
    Realizable1d,
    #[serde(rename = "realizable-2d-only")]
    Realizable2dOnly,
    #[serde(rename = "not-realizable-1d")]
    NotRealizable1d,
    #[serde(rename = "not-realizable-2d")]
    NotRealizable2d,
    #[serde(rename = "unknown")]
    Unknown,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Realizable1d | Verdict::Realizable2dOnly => 0,
            Verdict::NotRealizable1d | Verdict::NotRealizable2d => 2,
            Verdict::Unknown => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Realizable1d => "realizable-1d",
            Verdict::Realizable2dOnly => "realizable-2d-only",
            Verdict::NotRealizable1d => "not-realizable-1d",
            Verdict::NotRealizable2d => "not-realizable-2d",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq)]
pub struct Obstruction {
    /// Embedded standard example, `(lower, upper)` element names.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_example: Option<(Vec<String>, Vec<String>)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub forcing_cycle: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct ConceptLine {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    pub exit_code: i32,
    pub timings_ms: IndexMap<String, f64>,
    pub poset_sizes: IndexMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drawn_dimension: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_check: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_realizable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension_lower_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concept_count: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub concepts: Vec<ConceptLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    fn new(command: &str, input: &Path) -> Self {
        Self { command: command.into(), input: input.display().to_string(), ..Self::default() }
    }

    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(phase.into(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    fn finish(&mut self, verdict: Verdict) {
        self.verdict = Some(verdict);
        self.exit_code = verdict.exit_code();
    }

    fn render_text(&self) -> String {
        let mut lines = Vec::new();
        if let Some(v) = self.verdict {
            lines.push(format!("verdict: {}", v.label()));
        }
        for (k, v) in &self.poset_sizes {
            lines.push(format!("{k} poset: {v} elements"));
        }
        if let Some(t) = self.two_realizable {
            lines.push(format!("2-realizable: {}", if t { "yes" } else { "no" }));
        }
        match (self.dimension, self.dimension_lower_bound) {
            (Some(d), _) => lines.push(format!("dimension: {d}")),
            (None, Some(lb)) => lines.push(format!("dimension: at least {lb} (search budget exhausted)")),
            _ => {}
        }
        if let Some(o) = &self.obstruction {
            if let Some((a, b)) = &o.standard_example {
                lines.push(format!(
                    "obstruction: standard example S{} on {{{}}} x {{{}}}",
                    a.len(),
                    a.join(", "),
                    b.join(", ")
                ));
            }
            if !o.forcing_cycle.is_empty() {
                let cycle: Vec<String> = o.forcing_cycle.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                lines.push(format!("forcing cycle: {}", cycle.join(" ")));
            }
            if let Some(c) = &o.certificate {
                lines.push(format!("certificate: {c}"));
            }
        }
        if let Some(d) = self.drawn_dimension {
            lines.push(format!("drawn: {d}-dimensional"));
        }
        if let Some(ok) = self.self_check {
            lines.push(format!("self-check: {}", if ok { "passed" } else { "FAILED" }));
        }
        for path in &self.outputs {
            lines.push(format!("wrote {path}"));
        }
        for c in &self.concepts {
            lines.push(format!("{{{}}} | {{{}}}", c.extent.join(", "), c.intent.join(", ")));
        }
        if let Some(n) = self.concept_count {
            lines.push(format!("{n} concepts"));
        }
        for (k, v) in &self.timings_ms {
            lines.push(format!("time {k}: {v:.2} ms"));
        }
        lines.join("\n") + "\n"
    }
}

/// Test hooks; `corrupt` runs on the diagram right before it is re-verified.
#[derive(Default)]
pub struct Hooks {
    pub corrupt: Option<Box<dyn Fn(&mut Diagram)>>,
}

impl std::fmt::Debug for Hooks {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hooks").field("corrupt", &self.corrupt.is_some()).finish()
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_hooks(args, &Hooks::default(), stdout, stderr)
}

pub fn run_with_hooks<I, T>(args: I, hooks: &Hooks, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            // help and version are not errors; everything else is bad input
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let (format, input) = match &cli.command {
        Command::Check(a) => (a.input.report, &a.input.input),
        Command::Draw(a) => (a.search.input.report, &a.search.input.input),
        Command::Dim(a) => (a.search.input.report, &a.search.input.input),
        Command::Concepts(a) => (a.report, &a.input),
    };
    let name = match &cli.command {
        Command::Check(_) => "check",
        Command::Draw(_) => "draw",
        Command::Dim(_) => "dim",
        Command::Concepts(_) => "concepts",
    };
    let mut report = RunReport::new(name, input);
    let outcome = match &cli.command {
        Command::Check(a) => check(a, &mut report),
        Command::Draw(a) => draw(a, hooks, &mut report),
        Command::Dim(a) => dim(a, &mut report),
        Command::Concepts(a) => list_concepts(a, &mut report),
    };
    if let Err(e) = outcome {
        let _ = writeln!(stderr, "error: {e}");
        report.error = Some(e.to_string());
        report.exit_code = 1;
    }
    let text = match format {
        ReportFormat::Text => report.render_text(),
        ReportFormat::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
    };
    let _ = stdout.write_all(text.as_bytes());
    report.exit_code
}

fn load(path: &Path, report: &mut RunReport) -> Result<ClarifiedContext> {
    let ctx = report.time("parse", || read_context(path))?;
    Ok(report.time("clarify", || clarify(&ctx)))
}

fn options(a: &SearchArgs) -> SearchOptions {
    SearchOptions { budget: a.budget, seed: a.seed, exact_only: false }
}

/// Names of an embedded `S_k` when `p` is small enough to search exhaustively.
fn standard_example(p: &Poset, k: usize) -> Option<(Vec<String>, Vec<String>)> {
    if p.len() > OBSTRUCTION_MAX_ELEMENTS {
        return None;
    }
    let (a, b) = find_standard_example(p, k)?;
    let names = |v: Vec<usize>| v.into_iter().map(|x| p.name(x).to_string()).collect();
    Some((names(a), names(b)))
}

fn one_dim_obstruction(ctx: &FormalContext, outcome: &OneDimOutcome) -> Result<Obstruction> {
    let OneDimOutcome::NotRealizable { forcing_cycle, .. } = outcome else {
        return Ok(Obstruction::default());
    };
    Ok(Obstruction {
        standard_example: standard_example(&euler_poset(ctx)?, 3),
        forcing_cycle: forcing_cycle.clone(),
        certificate: None,
    })
}

/// Adds the search certificate and, on small posets, an embedded `S_5` in
/// the extended Euler-poset.
fn two_dim_obstruction(ctx: &FormalContext, certificate: String, report: &mut RunReport) -> Result<()> {
    let ext = extended_euler_poset(ctx)?;
    let s5 = report.time("obstruction", || standard_example(&ext, 5));
    let o = report.obstruction.get_or_insert_with(Obstruction::default);
    o.certificate = Some(certificate);
    if s5.is_some() {
        o.standard_example = s5;
    }
    Ok(())
}

fn check(a: &SearchArgs, report: &mut RunReport) -> Result<()> {
    let c = load(&a.input.input, report)?;
    let ctx = c.context();
    report.poset_sizes.insert("euler".into(), ctx.n_objects() + ctx.n_attributes());
    report.poset_sizes.insert("extended".into(), 3 * ctx.n_objects() + ctx.n_attributes() + 8);
    let one = report.time("euler1d", || euler1d(&c))?;
    if one.is_realizable() {
        report.finish(Verdict::Realizable1d);
        return Ok(());
    }
    report.obstruction = Some(one_dim_obstruction(ctx, &one)?);
    let two = report.time("euler2d", || euler2d(&c, options(a)))?;
    let verdict = match two {
        TwoDimOutcome::Diagram { nodes, .. } => {
            report.nodes = Some(nodes);
            Verdict::Realizable2dOnly
        }
        TwoDimOutcome::NotRealizable { certificate, nodes } => {
            report.nodes = Some(nodes);
            two_dim_obstruction(ctx, certificate, report)?;
            Verdict::NotRealizable2d
        }
        TwoDimOutcome::Unknown { nodes } => {
            report.nodes = Some(nodes);
            Verdict::Unknown
        }
    };
    report.finish(verdict);
    Ok(())
}

/// Re-reads the emitted document and checks it against the context.
fn self_check(text: &str, ctx: &FormalContext) -> Result<bool> {
    Ok(match parse_json(text)?.0 {
        Diagram::One(d) => verify_correspondence_1d(&d, ctx)? && is_conceptual(&d) && verify_chi(&d, ctx)?,
        Diagram::Two(d) => verify_correspondence_2d(&d, ctx)?,
    })
}

fn draw(a: &DrawArgs, hooks: &Hooks, report: &mut RunReport) -> Result<()> {
    let c = load(&a.search.input.input, report)?;
    let ctx = c.context();
    let one = report.time("euler1d", || euler1d(&c))?;
    let mut diagram = match (&one, a.dim) {
        (OneDimOutcome::Diagram(d), DimChoice::Auto | DimChoice::One) => {
            report.finish(Verdict::Realizable1d);
            Diagram::One(d.clone())
        }
        (OneDimOutcome::NotRealizable { .. }, DimChoice::One) => {
            report.obstruction = Some(one_dim_obstruction(ctx, &one)?);
            report.finish(Verdict::NotRealizable1d);
            return Ok(());
        }
        _ => {
            let two = report.time("euler2d", || euler2d(&c, options(&a.search)))?;
            let realizable_1d = one.is_realizable();
            if !realizable_1d {
                report.obstruction = Some(one_dim_obstruction(ctx, &one)?);
            }
            match two {
                TwoDimOutcome::Diagram { diagram, nodes, .. } => {
                    report.nodes = Some(nodes);
                    report.finish(if realizable_1d { Verdict::Realizable1d } else { Verdict::Realizable2dOnly });
                    Diagram::Two(diagram)
                }
                TwoDimOutcome::NotRealizable { certificate, nodes } => {
                    report.nodes = Some(nodes);
                    two_dim_obstruction(ctx, certificate, report)?;
                    report.finish(Verdict::NotRealizable2d);
                    return Ok(());
                }
                TwoDimOutcome::Unknown { nodes } => {
                    report.nodes = Some(nodes);
                    report.finish(Verdict::Unknown);
                    return Ok(());
                }
            }
        }
    };
    if let Some(corrupt) = &hooks.corrupt {
        corrupt(&mut diagram);
    }
    let groups = Groups::from_clarified(&c);
    let json = emit_json(&diagram, &groups);
    let ok = report.time("self-check", || self_check(&json, ctx))?;
    report.self_check = Some(ok);
    report.drawn_dimension = Some(diagram.dimension());
    if !ok {
        return Err(Error::Document("self-check failed: the drawn diagram does not match the context".into()));
    }
    let style = RenderStyle::default();
    if let Some(path) = &a.svg {
        let svg = match &diagram {
            Diagram::One(d) => render_svg_1d(d, &style),
            Diagram::Two(d) => render_svg_2d(d, &style),
        };
        write_file(path, &svg)?;
        report.outputs.push(path.display().to_string());
    }
    if let Some(path) = &a.json {
        write_file(path, &json)?;
        report.outputs.push(path.display().to_string());
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::File { path: path.to_path_buf(), source })
}

fn dim(a: &DimArgs, report: &mut RunReport) -> Result<()> {
    let c = load(&a.search.input.input, report)?;
    let ctx = c.context();
    let (label, p) = match a.poset {
        PosetChoice::Euler => ("euler", euler_poset(ctx)?),
        PosetChoice::Extended => ("extended", extended_euler_poset(ctx)?),
        PosetChoice::Lattice => ("lattice", concept_lattice_poset(ctx)),
    };
    report.poset_sizes.insert(label.into(), p.len());
    let two = report.time("two-realizer", || two_dim_realizer(&p))?;
    report.two_realizable = Some(two.is_some());
    let chain = p.incomparable_pairs().is_empty();
    if p.len() <= a.exact_max.min(eulerdim_core::dimension::BRUTE_FORCE_MAX_ELEMENTS) {
        let k_max = (p.len() / 2).max(2);
        report.dimension = report.time("brute-force", || brute_force_dimension(&p, k_max))?.value();
        return Ok(());
    }
    if two.is_some() {
        report.dimension = Some(if chain { 1 } else { 2 });
        return Ok(());
    }
    let mut k = 3;
    loop {
        let w = report.time(&format!("k-realizer-{k}"), || k_realizer(&p, k, options(&a.search)))?;
        report.nodes = Some(report.nodes.unwrap_or(0) + w.nodes);
        match w.verdict {
            eulerdim_core::Verdict::Realizable => {
                report.dimension = Some(k);
                return Ok(());
            }
            eulerdim_core::Verdict::NotRealizable => k += 1,
            eulerdim_core::Verdict::Unknown => {
                report.dimension_lower_bound = Some(k);
                report.exit_code = 3;
                return Ok(());
            }
        }
    }
}

fn list_concepts(a: &InputArgs, report: &mut RunReport) -> Result<()> {
    let ctx = report.time("parse", || read_context(&a.input))?;
    let cs = report.time("concepts", || concepts(&ctx));
    report.concept_count = Some(cs.len());
    report.concepts = cs
        .iter()
        .map(|c| ConceptLine {
            extent: c.extent.iter().map(|g| ctx.objects()[g].clone()).collect(),
            intent: c.intent.iter().map(|m| ctx.attributes()[m].clone()).collect(),
        })
        .collect();
    Ok(())
}
