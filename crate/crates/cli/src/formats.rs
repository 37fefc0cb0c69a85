//! Line-oriented text formats for graphs, plane graphs, covers, budgets,
//! colorings and witness orders.
//!
//! Every format is UTF-8 with one record per line. `#` starts a comment and
//! blank lines are ignored. Vertices are 0-indexed, colors 1-indexed.
//!
//! - graph: `graph <n>`, then `edge <u> <v>` with `u < v`, ascending;
//! - plane graph: the graph lines, `rot <v> <u1> <u2> ...` per vertex and one `outer <v1> ... <vp>`;
//! - cover: `cover <s>`, `list <v> <c1> <c2> ...` per vertex, `match <u> <v> <cu> <cv>` with `u < v`;
//! - budget: `budget <s> <cap>`, then `f <v> <i> <value>`; missing entries are 0;
//! - coloring: `color <v> <c>` lines and an optional witness `order (v,c) (v,c) ...`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use dpf_core::planar::PlaneGraph;
use dpf_core::{Budget, Color, Coloring, Cover, DegenerateOrder, Pair, SimpleGraph, Vertex};

/// A parse failure at a 1-based line; line 0 refers to the file as a whole.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

type Parsed<T> = Result<T, ParseError>;

/// Largest vertex count the parsers accept.
pub const MAX_VERTICES: usize = 1 << 20;

fn vertex_count(line: usize, n: usize) -> Parsed<usize> {
    if n <= MAX_VERTICES {
        Ok(n)
    } else {
        err(line, format!("{n} vertices exceed the limit of {MAX_VERTICES}"))
    }
}

/// Nonempty records as `(line number, tokens)`.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Parsed<T> {
    token.parse().or_else(|_| err(line, format!("expected {what}, found `{token}`")))
}

fn arity(line: usize, tokens: &[&str], expected: usize) -> Parsed<()> {
    if tokens.len() == expected {
        Ok(())
    } else {
        err(line, format!("`{}` takes {} arguments, found {}", tokens[0], expected - 1, tokens.len() - 1))
    }
}

fn header<'a>(text: &'a str, keyword: &str) -> Parsed<(usize, Vec<&'a str>)> {
    match records(text).next() {
        Some((line, tokens)) if tokens[0] == keyword => Ok((line, tokens)),
        Some((line, tokens)) => err(line, format!("expected `{keyword}` header, found `{}`", tokens[0])),
        None => err(0, format!("empty file, expected `{keyword}` header")),
    }
}

/// Parses a graph file. The `rot` and `outer` lines of a plane graph file
/// are skipped, so plane graph files are graph files too.
pub fn parse_graph(text: &str) -> Parsed<SimpleGraph> {
    let (first, head) = header(text, "graph")?;
    arity(first, &head, 2)?;
    let n = vertex_count(first, number(first, head[1], "a vertex count")?)?;
    let mut g = SimpleGraph::new(n);
    for (line, tokens) in records(text).skip(1) {
        match tokens[0] {
            "edge" => {
                arity(line, &tokens, 3)?;
                let u = number(line, tokens[1], "a vertex")?;
                let v = number(line, tokens[2], "a vertex")?;
                g.add_edge(u, v).or_else(|e| err(line, e.to_string()))?;
            }
            "rot" | "outer" => {}
            other => return err(line, format!("unknown record `{other}` in a graph file")),
        }
    }
    Ok(g)
}

pub fn emit_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}

pub fn parse_plane(text: &str) -> Parsed<PlaneGraph> {
    let g = parse_graph(text)?;
    let mut rotation: Vec<Option<Vec<Vertex>>> = vec![None; g.n()];
    let mut outer: Option<Vec<Vertex>> = None;
    let mut last = 0;
    for (line, tokens) in records(text).skip(1) {
        last = line;
        match tokens[0] {
            "rot" => {
                if tokens.len() < 2 {
                    return err(line, "`rot` needs a vertex");
                }
                let v: Vertex = number(line, tokens[1], "a vertex")?;
                let slot = rotation.get_mut(v).map_or_else(|| err(line, format!("vertex {v} out of range")), Ok)?;
                if slot.is_some() {
                    return err(line, format!("second rotation for vertex {v}"));
                }
                *slot = Some(tokens[2..].iter().map(|t| number(line, t, "a vertex")).collect::<Parsed<_>>()?);
            }
            "outer" => {
                if outer.is_some() {
                    return err(line, "second `outer` line");
                }
                outer = Some(tokens[1..].iter().map(|t| number(line, t, "a vertex")).collect::<Parsed<_>>()?);
            }
            _ => {}
        }
    }
    let rotation: Vec<Vec<Vertex>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| match r {
            Some(r) => Ok(r),
            None if g.degree(v) == 0 => Ok(Vec::new()),
            None => err(0, format!("no rotation for vertex {v}")),
        })
        .collect::<Parsed<_>>()?;
    let outer = outer.map_or_else(|| err(0, "missing `outer` line"), Ok)?;
    PlaneGraph::new(g, rotation, outer).or_else(|e| err(last, e.to_string()))
}

pub fn emit_plane(pg: &PlaneGraph) -> String {
    let mut out = emit_graph(pg.graph());
    for v in 0..pg.n() {
        let rot: Vec<String> = pg.rotation(v).iter().map(|u| u.to_string()).collect();
        writeln!(out, "rot {v} {}", rot.join(" ")).unwrap();
    }
    let outer: Vec<String> = pg.outer().iter().map(|u| u.to_string()).collect();
    writeln!(out, "outer {}", outer.join(" ")).unwrap();
    out
}

/// Parses a cover file. The number of fibers is one more than the largest
/// vertex with a `list` line.
pub fn parse_cover(text: &str) -> Parsed<Cover> {
    let (first, head) = header(text, "cover")?;
    arity(first, &head, 2)?;
    let s: usize = number(first, head[1], "a color count")?;
    let mut lists: BTreeMap<Vertex, (usize, Vec<Color>)> = BTreeMap::new();
    let mut matches = Vec::new();
    for (line, tokens) in records(text).skip(1) {
        match tokens[0] {
            "list" => {
                if tokens.len() < 2 {
                    return err(line, "`list` needs a vertex");
                }
                let v: Vertex = number(line, tokens[1], "a vertex")?;
                vertex_count(line, v + 1)?;
                let colors = tokens[2..].iter().map(|t| number(line, t, "a color")).collect::<Parsed<Vec<Color>>>()?;
                if lists.insert(v, (line, colors)).is_some() {
                    return err(line, format!("second list for vertex {v}"));
                }
            }
            "match" => {
                arity(line, &tokens, 5)?;
                let vals: Vec<usize> =
                    tokens[1..].iter().map(|t| number(line, t, "a number")).collect::<Parsed<_>>()?;
                if vals[0] >= vals[1] {
                    return err(line, format!("match endpoints must satisfy u < v, found {} {}", vals[0], vals[1]));
                }
                matches.push((line, vals));
            }
            other => return err(line, format!("unknown record `{other}` in a cover file")),
        }
    }
    let n = lists.keys().next_back().map_or(0, |&v| v + 1);
    let mut h = Cover::new(n, s);
    for (v, (line, colors)) in lists {
        h.set_list(v, colors).or_else(|e| err(line, e.to_string()))?;
    }
    for (line, m) in matches {
        h.add_match(m[0], m[1], m[2], m[3]).or_else(|e| err(line, e.to_string()))?;
    }
    Ok(h)
}

pub fn emit_cover(h: &Cover) -> String {
    let mut out = format!("cover {}\n", h.s());
    for v in 0..h.n() {
        write!(out, "list {v}").unwrap();
        for c in h.list(v) {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    for (u, v, cu, cv) in h.matches() {
        writeln!(out, "match {u} {v} {cu} {cv}").unwrap();
    }
    out
}

pub fn parse_budget(text: &str) -> Parsed<Budget> {
    let (first, head) = header(text, "budget")?;
    arity(first, &head, 3)?;
    let s: usize = number(first, head[1], "a color count")?;
    let cap: u32 = number(first, head[2], "a cap")?;
    let mut f = Budget::new(s, cap);
    let mut seen = std::collections::BTreeSet::new();
    for (line, tokens) in records(text).skip(1) {
        if tokens[0] != "f" {
            return err(line, format!("unknown record `{}` in a budget file", tokens[0]));
        }
        arity(line, &tokens, 4)?;
        let v: Vertex = number(line, tokens[1], "a vertex")?;
        let c: Color = number(line, tokens[2], "a color")?;
        let x: u32 = number(line, tokens[3], "a budget value")?;
        if !seen.insert((v, c)) {
            return err(line, format!("second value for f_{c}({v})"));
        }
        f.set(v, c, x).or_else(|e| err(line, e.to_string()))?;
    }
    Ok(f)
}

pub fn emit_budget(f: &Budget) -> String {
    let mut out = format!("budget {} {}\n", f.s(), f.cap());
    for (v, c, x) in f.iter() {
        writeln!(out, "f {v} {c} {x}").unwrap();
    }
    out
}

fn parse_pair(line: usize, token: &str) -> Parsed<Pair> {
    let inner = token.strip_prefix('(').and_then(|t| t.strip_suffix(')'));
    let Some((v, c)) = inner.and_then(|t| t.split_once(',')) else {
        return err(line, format!("expected `(v,c)`, found `{token}`"));
    };
    Ok(Pair::new(number(line, v.trim(), "a vertex")?, number(line, c.trim(), "a color")?))
}

/// Parses a coloring file: `color` lines plus at most one `order` line.
/// Returns the coloring and the order if one was given; the order must
/// color exactly the vertices the `color` lines do, with the same colors.
pub fn parse_coloring(text: &str) -> Parsed<(Coloring, Option<DegenerateOrder>)> {
    let mut r = Coloring::new();
    let mut order: Option<(usize, Vec<Pair>)> = None;
    for (line, tokens) in records(text) {
        match tokens[0] {
            "color" => {
                arity(line, &tokens, 3)?;
                let v: Vertex = number(line, tokens[1], "a vertex")?;
                let c: Color = number(line, tokens[2], "a color")?;
                if r.contains(v) {
                    return err(line, format!("vertex {v} colored twice"));
                }
                r.set(v, c);
            }
            "order" => {
                if order.is_some() {
                    return err(line, "second `order` line");
                }
                let pairs = tokens[1..].iter().map(|t| parse_pair(line, t)).collect::<Parsed<_>>()?;
                order = Some((line, pairs));
            }
            other => return err(line, format!("unknown record `{other}` in a coloring file")),
        }
    }
    let order = match order {
        None => None,
        Some((line, pairs)) => {
            let as_coloring: Coloring = pairs.iter().map(|p| (p.vertex, p.color)).collect();
            if as_coloring.len() != pairs.len() || as_coloring != r {
                return err(line, "order does not list the colored pairs exactly once");
            }
            Some(DegenerateOrder(pairs))
        }
    };
    Ok((r, order))
}

pub fn emit_coloring(r: &Coloring) -> String {
    let mut out = String::new();
    for p in r.pairs() {
        writeln!(out, "color {} {}", p.vertex, p.color).unwrap();
    }
    out
}

/// `order (v,c) (v,c) ...` on one line.
pub fn emit_order(order: &DegenerateOrder) -> String {
    let mut out = String::from("order");
    for p in order.pairs() {
        write!(out, " ({},{})", p.vertex, p.color).unwrap();
    }
    out.push('\n');
    out
}

/// Parses `list <v> <symbol> ...` lines for `n` vertices; symbols are
/// arbitrary tokens. Every vertex needs exactly one line.
pub fn parse_symbol_lists(text: &str, n: usize) -> Parsed<Vec<Vec<String>>> {
    let mut lists: Vec<Option<Vec<String>>> = vec![None; n];
    for (line, tokens) in records(text) {
        if tokens[0] != "list" || tokens.len() < 2 {
            return err(line, "expected `list <v> <symbol> ...`");
        }
        let v: Vertex = number(line, tokens[1], "a vertex")?;
        let slot = lists.get_mut(v).map_or_else(|| err(line, format!("vertex {v} out of range")), Ok)?;
        if slot.replace(tokens[2..].iter().map(|t| t.to_string()).collect()).is_some() {
            return err(line, format!("second list for vertex {v}"));
        }
    }
    lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.map_or_else(|| err(0, format!("no list for vertex {v}")), Ok))
        .collect()
}
