#![allow(clippy::result_large_err)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dpf_core::planar::{
    check_family, gen_planar_triangulation, gen_random_budget, gen_random_cover, Family, PlaneGraph,
};
use dpf_core::reductions::{
    budget_forest, budget_list, budget_mixed, canonicalize_lists, check_partition, color_classes, identity_cover,
};
use dpf_core::solvers::{
    extend_precolored_triangle, solve_exact_with, solve_planar_dpg52, ExactOptions, DEFAULT_EXACT_LIMIT,
};
use dpf_core::verify::{check_order, verify_coloring};
use dpf_core::{Budget, Color, Cover, Error, SimpleGraph, WitnessedColoring};

use crate::formats::{
    emit_budget, emit_coloring, emit_cover, emit_order, emit_plane, parse_budget, parse_coloring, parse_cover,
    parse_graph, parse_plane, parse_symbol_lists,
};
use crate::report::{exit, Report};

#[derive(Debug, Parser)]
#[command(name = "dpf", version, about = "DP-F-coloring: verification, solvers, reductions and generators")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Record wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Instance {
    /// Graph file (a plane graph file also works).
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub cover: PathBuf,
    #[arg(long)]
    pub budget: PathBuf,
}

#[derive(Debug, Args)]
pub struct PlaneInstance {
    /// Plane graph file.
    #[arg(long)]
    pub plane: PathBuf,
    #[arg(long)]
    pub cover: PathBuf,
    #[arg(long)]
    pub budget: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a coloring is a DP-F-coloring and print a witness order.
    Verify {
        #[command(flatten)]
        instance: Instance,
        /// Coloring file; an `order` line in it is checked as well.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exhaustive search for a DP-F-coloring.
    SolveExact {
        #[command(flatten)]
        instance: Instance,
        /// Coloring file with vertices that keep their colors.
        #[arg(long)]
        precolor: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
        /// Treat the instance as an instance of a theorem: if its hypotheses
        /// hold and no coloring exists, report a theorem violation.
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
        /// Forbidden cycle lengths for `--expect no-cycle-lengths`.
        #[arg(long, value_delimiter = ',', default_value = "4,6,7,9")]
        lengths: Vec<usize>,
    },
    /// Constructive coloring of a plane graph with `|f(v)| >= 5` and `f <= 2`.
    SolvePlanar {
        #[command(flatten)]
        instance: PlaneInstance,
    },
    /// Extend a coloring of a triangle to a graph without pairwise adjacent
    /// 3-, 4- and 5-cycles, with `|f(v)| >= 4`.
    ExtendTriangle {
        #[command(flatten)]
        instance: PlaneInstance,
        /// The three vertices of the precolored triangle.
        #[arg(long, num_args = 3, required = true)]
        triangle: Vec<usize>,
        /// Coloring file for the triangle.
        #[arg(long)]
        precolor: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Encode list, list-forested or mixed coloring as DP-F-coloring.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// File of `list <v> <symbol> ...` lines.
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, value_enum)]
        kind: ReductionKind,
        /// List size for `--kind mixed`.
        #[arg(long)]
        d: Option<usize>,
        /// Target `|f(v)|` for `--kind mixed`.
        #[arg(long)]
        k: Option<usize>,
        /// Where to write the identity cover.
        #[arg(long)]
        cover_out: PathBuf,
        /// Where to write the budget.
        #[arg(long)]
        budget_out: PathBuf,
        /// Also solve the encoded instance and check its color classes.
        #[arg(long)]
        solve: bool,
    },
    /// Test membership in one of the graph families.
    CheckFamily {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Forbidden cycle lengths for `no-cycle-lengths`.
        #[arg(long, value_delimiter = ',', default_value = "4,6,7,9")]
        lengths: Vec<usize>,
    },
    /// Seeded generators.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Debug, Subcommand)]
pub enum Gen {
    /// Stacked triangulation on `n` vertices.
    Triangulation {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random cover of a graph.
    Cover {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        list_size: usize,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random budget on the listed colors of a cover.
    Budget {
        #[arg(long)]
        cover: PathBuf,
        /// Exact `|f(v)|` at every vertex.
        #[arg(long)]
        sum_min: u32,
        #[arg(long, default_value_t = 2)]
        cap: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    /// Planar graphs without cycles of the lengths in `--lengths`, `|f| >= 3`, `f <= 2`.
    NoCycleLengths,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReductionKind {
    List,
    Forest,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    NoAdjacent34,
    FamilyA,
    NoCycleLengths,
}

/// A failure that ends the command early with a report.
type Step<T> = Result<T, Report>;

fn read(path: &Path) -> Step<String> {
    std::fs::read_to_string(path).map_err(|e| Report::error(exit::USAGE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Step<()> {
    std::fs::write(path, text).map_err(|e| Report::error(exit::USAGE, format!("{}: {e}", path.display())))
}

fn load<T, E: std::fmt::Display>(path: &Path, parse: impl FnOnce(&str) -> Result<T, E>) -> Step<T> {
    let text = read(path)?;
    parse(&text).map_err(|e| Report::error(exit::USAGE, format!("{}: {e}", path.display())))
}

/// Maps a library error to a report: malformed inputs are usage errors,
/// unmet preconditions are negative answers, broken invariants are theorem
/// violations.
fn from_core(e: Error) -> Report {
    let code = match e {
        Error::InternalInvariantViolated(_) => exit::THEOREM_VIOLATION,
        Error::VertexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::ColorOutOfRange { .. }
        | Error::BudgetAboveCap { .. }
        | Error::BadCover(_)
        | Error::InvalidEmbedding(_)
        | Error::BadSpec(_)
        | Error::BadParameters(_)
        | Error::InvalidInput(_)
        | Error::EmptyList(_) => exit::USAGE,
        _ => exit::NEGATIVE,
    };
    Report::error(code, e.to_string())
}

fn load_instance(i: &Instance) -> Step<(SimpleGraph, Cover, Budget)> {
    let g = load(&i.graph, parse_graph)?;
    let h = load(&i.cover, parse_cover)?;
    let f = load(&i.budget, parse_budget)?;
    h.validate(&g).map_err(from_core)?;
    Ok((g, h, f))
}

fn load_plane_instance(i: &PlaneInstance) -> Step<(PlaneGraph, Cover, Budget)> {
    let pg = load(&i.plane, parse_plane)?;
    let h = load(&i.cover, parse_cover)?;
    let f = load(&i.budget, parse_budget)?;
    h.validate(pg.graph()).map_err(from_core)?;
    Ok((pg, h, f))
}

fn found(r: &WitnessedColoring) -> Report {
    let mut report = Report::new("found", exit::OK).with_witness(&r.order);
    report.output = format!("{}{}", emit_coloring(&r.coloring), emit_order(&r.order));
    report
}

fn forbidden(lengths: &[usize]) -> Family {
    Family::NoCycleLengths(lengths.iter().copied().collect())
}

fn verify(instance: &Instance, coloring: &Path) -> Step<Report> {
    let (g, h, f) = load_instance(instance)?;
    let (r, order) = load(coloring, parse_coloring)?;
    let Some(witness) = verify_coloring(&g, &h, &f, &r).map_err(from_core)? else {
        return Ok(
            Report::new("invalid", exit::NEGATIVE).with_diagnostic("the induced pair graph is not strictly degenerate")
        );
    };
    if let Some(order) = order {
        if !check_order(&g, &h, &f, &order).map_err(from_core)? {
            return Ok(Report::new("invalid", exit::NEGATIVE)
                .with_diagnostic("the coloring is valid but the given order is not a witness"));
        }
    }
    let mut report = Report::new("valid", exit::OK).with_witness(&witness);
    report.output = emit_order(&witness);
    Ok(report)
}

/// Hypotheses of the theorem behind `expect`, or the reason they fail.
fn theorem_hypotheses(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    expect: Expectation,
    lengths: &[usize],
) -> Step<Option<String>> {
    match expect {
        Expectation::NoCycleLengths => {
            if !check_family(g, &forbidden(lengths)).map_err(from_core)? {
                return Ok(Some(format!("the graph has a cycle of a length in {lengths:?}")));
            }
            if let Some((v, c, x)) = f.iter().find(|&(_, _, x)| x > 2) {
                return Ok(Some(format!("f_{c}({v}) = {x} exceeds 2")));
            }
            if let Some(v) = g.vertices().find(|&v| f.usable_total(v, h.list(v)) < 3) {
                return Ok(Some(format!("|f({v})| is below 3")));
            }
            Ok(None)
        }
    }
}

fn solve_exact_cmd(
    instance: &Instance,
    precolor: Option<&Path>,
    limit: usize,
    expect: Option<Expectation>,
    lengths: &[usize],
) -> Step<Report> {
    let (g, h, f) = load_instance(instance)?;
    let pre = precolor.map(|p| load(p, parse_coloring)).transpose()?.map(|(r, _)| r);
    let hypotheses = match expect {
        Some(e) => theorem_hypotheses(&g, &h, &f, e, lengths)?,
        None => None,
    };
    let (r, stats) = solve_exact_with(&g, &h, &f, pre.as_ref(), &ExactOptions { limit }).map_err(from_core)?;
    let mut report = match (&r, expect, hypotheses) {
        (Some(r), _, _) => found(r),
        (None, Some(_), None) => Report::error(
            exit::THEOREM_VIOLATION,
            "the hypotheses hold (planarity is assumed, not checked) but no coloring exists",
        ),
        (None, Some(_), Some(why)) => {
            Report::new("absent", exit::NEGATIVE).with_diagnostic(format!("theorem hypotheses fail: {why}"))
        }
        (None, None, _) => Report::new("absent", exit::NEGATIVE),
    };
    report.stats.nodes = Some(stats.nodes);
    report.stats.backtracks = Some(stats.backtracks);
    Ok(report)
}

fn solve_planar_cmd(instance: &PlaneInstance) -> Step<Report> {
    let (pg, h, f) = load_plane_instance(instance)?;
    let r = solve_planar_dpg52(&pg, &h, &f).map_err(from_core)?;
    if verify_coloring(pg.graph(), &h, &f, &r.coloring).map_err(from_core)?.is_none() {
        return Err(Report::error(
            exit::THEOREM_VIOLATION,
            "the planar solver returned a coloring that fails verification",
        ));
    }
    Ok(found(&r))
}

fn extend_triangle_cmd(instance: &PlaneInstance, triangle: &[usize], precolor: &Path, limit: usize) -> Step<Report> {
    let (pg, h, f) = load_plane_instance(instance)?;
    let (pre, _) = load(precolor, parse_coloring)?;
    let c0 = [triangle[0], triangle[1], triangle[2]];
    match extend_precolored_triangle(&pg, &h, &f, c0, &pre, limit).map_err(from_core)? {
        Some(r) => Ok(found(&r)),
        None => Err(Report::error(
            exit::THEOREM_VIOLATION,
            "the graph is in the family and the triangle coloring is valid, but it does not extend",
        )),
    }
}

/// Canonical lists: numeric symbols sort as numbers, anything else as text.
fn canonical_lists(raw: &[Vec<String>]) -> (Vec<BTreeSet<Color>>, Vec<String>) {
    let numeric: Option<Vec<Vec<u64>>> = raw.iter().map(|l| l.iter().map(|t| t.parse().ok()).collect()).collect();
    match numeric {
        Some(nums) => {
            let (lists, symbols) = canonicalize_lists(&nums);
            (lists, symbols.iter().map(|x| x.to_string()).collect())
        }
        None => canonicalize_lists(raw),
    }
}

#[allow(clippy::too_many_arguments)]
fn reduce_cmd(
    graph: &Path,
    lists: &Path,
    kind: ReductionKind,
    d: Option<usize>,
    k: Option<usize>,
    cover_out: &Path,
    budget_out: &Path,
    solve: bool,
) -> Step<Report> {
    let g = load(graph, parse_graph)?;
    let raw = load(lists, |t| parse_symbol_lists(t, g.n()))?;
    let (lists, symbols) = canonical_lists(&raw);
    let s = symbols.len();
    let h = identity_cover(&g, &lists, s).map_err(from_core)?;
    let (f, caps): (Budget, Box<dyn Fn(Color) -> u32>) = match kind {
        ReductionKind::List => (budget_list(&lists, s).map_err(from_core)?, Box::new(|_| 1)),
        ReductionKind::Forest => (budget_forest(&lists, s).map_err(from_core)?, Box::new(|_| 2)),
        ReductionKind::Mixed => {
            let (Some(d), Some(k)) = (d, k) else {
                return Err(Report::error(exit::USAGE, "--kind mixed needs --d and --k"));
            };
            let independent = (2 * d).saturating_sub(k);
            (budget_mixed(&lists, s, d, k).map_err(from_core)?, Box::new(move |c| if c <= independent { 1 } else { 2 }))
        }
    };
    let mut output = String::new();
    for (i, sym) in symbols.iter().enumerate() {
        output.push_str(&format!("# color {} = {sym}\n", i + 1));
    }
    write(cover_out, &emit_cover(&h))?;
    write(budget_out, &emit_budget(&f))?;
    if !solve {
        let mut report = Report::new("ok", exit::OK);
        report.output = output;
        return Ok(report);
    }
    let (r, stats) = solve_exact_with(&g, &h, &f, None, &ExactOptions::default()).map_err(from_core)?;
    let mut report = match r {
        None => Report::new("absent", exit::NEGATIVE),
        Some(r) => {
            let classes = color_classes(&g, &r.coloring).map_err(from_core)?;
            let cap_map: BTreeMap<Color, u32> = classes.keys().map(|&c| (c, caps(c))).collect();
            if !check_partition(&g, &classes, &cap_map).map_err(from_core)? {
                return Err(Report::error(exit::THEOREM_VIOLATION, "a color class breaks its degeneracy cap"));
            }
            for (c, members) in &classes {
                let vs: Vec<String> = members.iter().map(|v| v.to_string()).collect();
                output.push_str(&format!("# class {} (cap {}): {}\n", symbols[c - 1], cap_map[c], vs.join(" ")));
            }
            output.push_str(&emit_coloring(&r.coloring));
            output.push_str(&emit_order(&r.order));
            Report::new("found", exit::OK).with_witness(&r.order)
        }
    };
    report.stats.nodes = Some(stats.nodes);
    report.stats.backtracks = Some(stats.backtracks);
    report.output = output;
    Ok(report)
}

fn check_family_cmd(graph: &Path, family: FamilyName, lengths: &[usize]) -> Step<Report> {
    let g = load(graph, parse_graph)?;
    let family = match family {
        FamilyName::NoAdjacent34 => Family::NoAdjacent34,
        FamilyName::FamilyA => Family::FamilyA,
        FamilyName::NoCycleLengths => forbidden(lengths),
    };
    Ok(if check_family(&g, &family).map_err(from_core)? {
        Report::new("true", exit::OK)
    } else {
        Report::new("false", exit::NEGATIVE)
    })
}

fn gen_cmd(gen: &Gen) -> Step<Report> {
    let (output, seed) = match gen {
        Gen::Triangulation { n, seed } => (emit_plane(&gen_planar_triangulation(*n, *seed).map_err(from_core)?), *seed),
        Gen::Cover { graph, s, list_size, density, seed } => {
            let g = load(graph, parse_graph)?;
            (emit_cover(&gen_random_cover(&g, *s, *list_size, *density, *seed).map_err(from_core)?), *seed)
        }
        Gen::Budget { cover, sum_min, cap, seed } => {
            let h = load(cover, parse_cover)?;
            (emit_budget(&gen_random_budget(&h, *sum_min, *cap, *seed).map_err(from_core)?), *seed)
        }
    };
    let mut report = Report::new("ok", exit::OK);
    report.seed = Some(seed);
    report.output = output;
    Ok(report)
}

/// Runs one command and returns its report; the caller prints it and exits
/// with `report.code`.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let result = match &cli.command {
        Command::Verify { instance, coloring } => verify(instance, coloring),
        Command::SolveExact { instance, precolor, limit, expect, lengths } => {
            solve_exact_cmd(instance, precolor.as_deref(), *limit, *expect, lengths)
        }
        Command::SolvePlanar { instance } => solve_planar_cmd(instance),
        Command::ExtendTriangle { instance, triangle, precolor, limit } => {
            extend_triangle_cmd(instance, triangle, precolor, *limit)
        }
        Command::Reduce { graph, lists, kind, d, k, cover_out, budget_out, solve } => {
            reduce_cmd(graph, lists, *kind, *d, *k, cover_out, budget_out, *solve)
        }
        Command::CheckFamily { graph, family, lengths } => check_family_cmd(graph, *family, lengths),
        Command::Gen(gen) => gen_cmd(gen),
    };
    let mut report = result.unwrap_or_else(|r| r);
    if cli.timing {
        report.stats.millis = Some(start.elapsed().as_millis() as u64);
    }
    report
}

/// Output for a finished report: JSON if requested, otherwise text. Plain
/// generator output is printed bare so it can be redirected into a file.
pub fn render(cli: &Cli, report: &Report) -> String {
    if cli.json {
        report.to_json()
    } else if matches!(cli.command, Command::Gen(_)) && report.code == exit::OK {
        report.output.clone()
    } else {
        report.to_text()
    }
}
