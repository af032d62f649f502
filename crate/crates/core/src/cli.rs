//! Front end shared by the `trisurf` binary and the tests: argument
//! parsing, report assembly and rendering.
//!
//! Exit codes: 0 success, 1 input error, 2 validation failure, 3 internal
//! invariant breach.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complex::{build_one_vertex_complex, CellComplex, GqReport};
use crate::cover::{build_cover_complex, cyclic_triple_cover_with, SheetOrder};
use crate::cycles::{two_cycles, Method, TwoCycle};
use crate::error::Error;
use crate::geometry::{Certifier, SurfaceCertificate, Verdict};
use crate::gf2::DEFAULT_ENUM_CAP;
use crate::presentation::{
    builtin_fixture, fixture_names, parse_named, validate, Fixture, LabelSpace,
    PolygonalPresentation, ValidationReport,
};

pub const SCHEMA_VERSION: &str = "trisurf.report/1";
/// Overrides the kernel enumeration cap.
pub const CAP_ENV: &str = "TRISURF_ENUM_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "trisurf",
    version,
    about = "Mod-2 2-cycles and surface certificates of triangle polyhedra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct InputArgs {
    /// Presentation file (`i j k` per line).
    pub file: Option<PathBuf>,
    /// Bundled fixture instead of a file.
    #[arg(long, conflicts_with = "file")]
    pub fixture: Option<String>,
    /// Do not require every generator to occur exactly three times.
    #[arg(long)]
    pub lenient: bool,
}

#[derive(clap::Args, Debug, Clone)]
pub struct CoverArgs {
    /// Work on the 3-fold cyclic cover.
    #[arg(long)]
    pub cover: bool,
    #[arg(long, value_enum, default_value_t = SheetOrderArg::Ascending)]
    pub sheet_order: SheetOrderArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Thickness and link check.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        /// Write the link graph(s) in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// List all mod-2 2-cycles.
    Cycles {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cover: CoverArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Kernel)]
        method: MethodArg,
        /// Link vertex for `--method link`.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Table2)]
        format: FormatArg,
    },
    /// Certify which 2-cycles carry locally isometric surfaces.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cover: CoverArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Kernel)]
        method: MethodArg,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        /// Structured output.
        #[arg(long)]
        json: bool,
        /// Worker threads for certification (0 = rayon default).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List bundled fixtures.
    Fixtures,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SheetOrderArg {
    Ascending,
    Descending,
}

impl From<SheetOrderArg> for SheetOrder {
    fn from(a: SheetOrderArg) -> Self {
        match a {
            SheetOrderArg::Ascending => SheetOrder::Ascending,
            SheetOrderArg::Descending => SheetOrder::Descending,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Brute,
    Backtrack,
    Kernel,
    Link,
}

impl MethodArg {
    fn with_vertex(self, vertex: usize) -> Method {
        match self {
            MethodArg::Brute => Method::Brute,
            MethodArg::Backtrack => Method::Backtrack,
            MethodArg::Kernel => Method::Kernel,
            MethodArg::Link => Method::Link { vertex },
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Table2,
    Structured,
}

/// What a command produced: exit code, stdout and stderr text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::NotACycle { .. } => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn enumeration_cap() -> std::result::Result<u64, String> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{CAP_ENV}={v} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn load_presentation(input: &InputArgs) -> std::result::Result<PolygonalPresentation, Outcome> {
    let input_err = |e: Error| Outcome::fail(error_code(&e), format!("error: {e}\n"));
    match (&input.file, &input.fixture) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Outcome::fail(EXIT_INPUT, format!("error: {}: {e}\n", path.display()))
            })?;
            let name = path
                .file_stem()
                .map_or("presentation".into(), |s| s.to_string_lossy().into_owned());
            parse_named(&text, &name).map_err(input_err)
        }
        (None, Some(name)) => match builtin_fixture(name).map_err(input_err)? {
            Fixture::Presentation(p) => Ok(p),
            Fixture::Triangles(t) if t.labels == LabelSpace::Generators => {
                t.to_presentation().map_err(input_err)
            }
            Fixture::Triangles(t) => Err(Outcome::fail(
                EXIT_INPUT,
                format!(
                    "error: fixture `{}` lists cover triangles, not a presentation\n",
                    t.name
                ),
            )),
        },
        (None, None) => Err(Outcome::fail(
            EXIT_INPUT,
            "error: give a presentation file or --fixture NAME\n",
        )),
    }
}

pub fn input_digest(p: &PolygonalPresentation) -> String {
    hex::encode(Sha256::digest(p.to_text().as_bytes()))
}

#[derive(Serialize)]
struct PresentationSummary {
    name: String,
    generator_count: u32,
    triangle_count: usize,
    input_digest: String,
}

#[derive(Serialize)]
struct ComplexSummary {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sheet_order: Option<SheetOrder>,
    vertices: usize,
    edges: usize,
    faces: usize,
}

#[derive(Serialize)]
struct CoverSection {
    sheet_order: SheetOrder,
    /// Integer-labelled cover triangles, in face order.
    triangles: Vec<[u32; 3]>,
}

#[derive(Serialize)]
struct Summary {
    cycles: usize,
    certified: usize,
}

/// Structured report; identical inputs and flags give identical bytes.
#[derive(Serialize)]
pub struct AnalysisReport {
    schema: &'static str,
    tool_version: &'static str,
    presentation: PresentationSummary,
    validation: ValidationReport,
    complex: ComplexSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover: Option<CoverSection>,
    links: Vec<GqReport>,
    method: &'static str,
    cycles: Vec<TwoCycle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<Vec<SurfaceCertificate>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<Summary>,
}

struct Prepared {
    presentation: PolygonalPresentation,
    validation: ValidationReport,
    complex: CellComplex,
    cover: Option<CoverSection>,
}

fn prepare(input: &InputArgs, cover: &CoverArgs) -> std::result::Result<Prepared, Outcome> {
    let presentation = load_presentation(input)?;
    let validation = validate(&presentation, true);
    let (complex, cover_section) = if cover.cover {
        let order: SheetOrder = cover.sheet_order.into();
        let cp = cyclic_triple_cover_with(&presentation, order);
        let section = CoverSection {
            sheet_order: order,
            triangles: cp.triangles().iter().map(|t| t.codes()).collect(),
        };
        (build_cover_complex(&cp), Some(section))
    } else {
        (build_one_vertex_complex(&presentation), None)
    };
    Ok(Prepared {
        presentation,
        validation,
        complex,
        cover: cover_section,
    })
}

fn write_dot(path: &PathBuf, certifier: &Certifier) -> std::result::Result<(), Outcome> {
    let dot: String = certifier.links().iter().map(|l| l.to_dot()).collect();
    std::fs::write(path, dot)
        .map_err(|e| Outcome::fail(EXIT_INPUT, format!("error: {}: {e}\n", path.display())))
}

fn complex_line(p: &Prepared) -> String {
    let x = &p.complex;
    let kind = match &p.cover {
        Some(c) => format!("3-fold cover ({:?} sheets)", c.sheet_order).to_lowercase(),
        None => "1-vertex polyhedron".to_string(),
    };
    format!(
        "{kind}: {} vertices, {} edges, {} faces\n",
        x.vertex_count(),
        x.edge_count(),
        x.face_count()
    )
}

fn gq_lines(reports: &[GqReport]) -> String {
    reports
        .iter()
        .map(|r| {
            let verdict = if r.smallest_gq {
                "smallest generalized quadrangle incidence graph"
            } else {
                "not the smallest generalized quadrangle incidence graph"
            };
            format!("link v{}: {r}; {verdict}\n", r.vertex)
        })
        .collect()
}

/// "Triangles in the 2-cycle" rows followed by the link circles per vertex.
pub fn render_block(
    x: &CellComplex,
    cert: Option<&SurfaceCertificate>,
    cycle: &TwoCycle,
) -> String {
    let mut out = String::from(" Triangles in the 2-cycle:\n");
    for f in cycle.faces() {
        let [a, b, c] = x.face_labels(f);
        let _ = writeln!(out, " {a:>3} {b:>3} {c:>3}");
    }
    if let Some(cert) = cert {
        out.push_str(" Cycles in the link:\n");
        for link in &cert.links {
            for labels in &link.circle_labels {
                let row: Vec<String> = labels.iter().map(|l| format!("{l:>3}")).collect();
                let _ = writeln!(out, "  v{}: {}", link.vertex, row.join(""));
            }
        }
    }
    out
}

fn verdict_text(cert: &SurfaceCertificate) -> String {
    let lengths: Vec<String> = cert
        .links
        .iter()
        .map(|l| format!("v{} {:?}", l.vertex, l.lengths))
        .collect();
    let status = match &cert.verdict {
        Verdict::Certified => "certified".to_string(),
        Verdict::Rejected { reason } => match reason {
            crate::geometry::RejectReason::CircleLengths { vertex, lengths } => {
                format!("rejected (circle lengths {lengths:?} at vertex {vertex})")
            }
            crate::geometry::RejectReason::Shortcut { vertex, path } => {
                format!("rejected (shortcut {} at vertex {vertex})", path.join("-"))
            }
        },
    };
    format!(
        "{} {status} chi={} {} links: {}",
        cert.cycle,
        cert.euler_characteristic,
        if cert.orientable {
            "orientable"
        } else {
            "non-orientable"
        },
        lengths.join(", ")
    )
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn run_validate(input: &InputArgs, cover: &CoverArgs, dot: Option<&PathBuf>) -> Outcome {
    let p = match prepare(input, cover) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let certifier = match Certifier::new(&p.complex) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(error_code(&e), format!("error: {e}\n")),
    };
    if let Some(path) = dot {
        if let Err(o) = write_dot(path, &certifier) {
            return o;
        }
    }
    let mut out = format!(
        "presentation {}: {} generators, {} triangles\n",
        p.presentation.name(),
        p.presentation.generator_count(),
        p.presentation.triangles().len()
    );
    let thick = p.validation.is_valid();
    if thick {
        out.push_str("thickness: every generator occurs 3 times\n");
    } else {
        let off: Vec<String> = p
            .validation
            .off_thickness
            .iter()
            .map(|g| format!("{g}:{}", p.validation.multiplicities[g.offset()]))
            .collect();
        let _ = writeln!(out, "thickness: off for {}", off.join(" "));
    }
    out.push_str(&complex_line(&p));
    for r in certifier.gq_reports() {
        let _ = writeln!(
            out,
            "GQ link: {} nodes, girth {}, diameter {}",
            r.nodes,
            r.girth.map_or("-".into(), |g| g.to_string()),
            r.diameter.map_or("-".into(), |g| g.to_string())
        );
    }
    out.push_str(&gq_lines(certifier.gq_reports()));
    let gq_ok = certifier.gq_reports().iter().all(|r| r.smallest_gq);
    let strict_ok = thick || input.lenient;
    Outcome {
        code: if strict_ok && gq_ok {
            EXIT_OK
        } else {
            EXIT_VALIDATION
        },
        stdout: out,
        stderr: String::new(),
    }
}

fn enumerate(p: &Prepared, method: Method) -> std::result::Result<Vec<TwoCycle>, Outcome> {
    let cap = enumeration_cap().map_err(|m| Outcome::fail(EXIT_INPUT, format!("error: {m}\n")))?;
    two_cycles(&p.complex, method, cap)
        .map_err(|e| Outcome::fail(error_code(&e), format!("error: {e}\n")))
}

fn run_cycles(input: &InputArgs, cover: &CoverArgs, method: Method, format: FormatArg) -> Outcome {
    let p = match prepare(input, cover) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let cycles = match enumerate(&p, method) {
        Ok(c) => c,
        Err(o) => return o,
    };
    match format {
        FormatArg::Structured => {
            let links = Certifier::new(&p.complex)
                .map(|c| c.gq_reports().to_vec())
                .unwrap_or_default();
            let digest = input_digest(&p.presentation);
            let report = AnalysisReport {
                schema: SCHEMA_VERSION,
                tool_version: env!("CARGO_PKG_VERSION"),
                presentation: PresentationSummary {
                    name: p.presentation.name().to_string(),
                    generator_count: p.presentation.generator_count(),
                    triangle_count: p.presentation.triangles().len(),
                    input_digest: digest,
                },
                complex: complex_summary(&p),
                validation: p.validation,
                cover: p.cover,
                links,
                method: method.name(),
                cycles,
                certificates: None,
                summary: None,
            };
            Outcome::ok(to_json(&report))
        }
        FormatArg::Table2 => {
            let mut out = String::new();
            for c in &cycles {
                let _ = writeln!(out, "{c}");
            }
            if p.cover.is_some() {
                for c in &cycles {
                    out.push('\n');
                    out.push_str(&render_block(&p.complex, None, c));
                }
            }
            Outcome::ok(out)
        }
    }
}

fn complex_summary(p: &Prepared) -> ComplexSummary {
    ComplexSummary {
        kind: if p.cover.is_some() {
            "cover"
        } else {
            "one_vertex"
        },
        sheet_order: p.cover.as_ref().map(|c| c.sheet_order),
        vertices: p.complex.vertex_count(),
        edges: p.complex.edge_count(),
        faces: p.complex.face_count(),
    }
}

/// Certificates in cycle order; `jobs` worker threads (0 = default pool).
pub fn certify_all(
    certifier: &Certifier,
    cycles: &[TwoCycle],
    jobs: usize,
) -> crate::error::Result<Vec<SurfaceCertificate>> {
    let work = || cycles.par_iter().map(|c| certifier.certify(c)).collect();
    if jobs == 0 {
        return work();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(work)
}

fn run_certify(
    input: &InputArgs,
    cover: &CoverArgs,
    method: Method,
    json: bool,
    jobs: usize,
    dot: Option<&PathBuf>,
) -> Outcome {
    let p = match prepare(input, cover) {
        Ok(p) => p,
        Err(o) => return o,
    };
    if !p.validation.is_valid() && !input.lenient {
        return Outcome::fail(
            EXIT_VALIDATION,
            "error: presentation is not of thickness 3 (pass --lenient to certify anyway)\n",
        );
    }
    let certifier = match Certifier::new(&p.complex) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(error_code(&e), format!("error: {e}\n")),
    };
    if let Some(path) = dot {
        if let Err(o) = write_dot(path, &certifier) {
            return o;
        }
    }
    let cycles = match enumerate(&p, method) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let certificates = match certify_all(&certifier, &cycles, jobs) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(error_code(&e), format!("error: {e}\n")),
    };
    let certified = certificates
        .iter()
        .filter(|c| c.verdict.is_certified())
        .count();
    if json {
        let report = AnalysisReport {
            schema: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            presentation: PresentationSummary {
                name: p.presentation.name().to_string(),
                generator_count: p.presentation.generator_count(),
                triangle_count: p.presentation.triangles().len(),
                input_digest: input_digest(&p.presentation),
            },
            complex: complex_summary(&p),
            validation: p.validation,
            cover: p.cover,
            links: certifier.gq_reports().to_vec(),
            method: method.name(),
            summary: Some(Summary {
                cycles: cycles.len(),
                certified,
            }),
            cycles,
            certificates: Some(certificates),
        };
        return Outcome::ok(to_json(&report));
    }
    let mut out = format!(
        "presentation {}: {} generators, {} triangles\n",
        p.presentation.name(),
        p.presentation.generator_count(),
        p.presentation.triangles().len()
    );
    out.push_str(&complex_line(&p));
    out.push_str(&gq_lines(certifier.gq_reports()));
    let _ = writeln!(out, "cycles: {} ({})", cycles.len(), method.name());
    for cert in &certificates {
        let _ = writeln!(out, "{}", verdict_text(cert));
    }
    let _ = writeln!(out, "certified surfaces: {certified} of {}", cycles.len());
    for cert in certificates.iter().filter(|c| c.verdict.is_certified()) {
        out.push('\n');
        out.push_str(&render_block(&p.complex, Some(cert), &cert.cycle));
    }
    Outcome::ok(out)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    match &cli.command {
        Command::Validate { input, dot, cover } => run_validate(input, cover, dot.as_ref()),
        Command::Cycles {
            input,
            cover,
            method,
            vertex,
            format,
        } => run_cycles(input, cover, method.with_vertex(*vertex), *format),
        Command::Certify {
            input,
            cover,
            method,
            vertex,
            json,
            jobs,
            dot,
        } => run_certify(
            input,
            cover,
            method.with_vertex(*vertex),
            *json,
            *jobs,
            dot.as_ref(),
        ),
        Command::Fixtures => Outcome::ok(fixture_names().into_iter().map(|n| n + "\n").collect()),
    }
}
