//! Plain-text graph and topology files.
//!
//! Graph file:
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! ```
//!
//! Topology file:
//!
//! ```text
//! n area_side radius seed
//! id x y     (n lines, coordinates with 9 fractional digits)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use cds_core::topology::{GeometricTopology, Point};
use cds_core::Graph;

use crate::error::{BenchError, Result};

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> BenchError {
    BenchError::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn fields<'a, const N: usize>(path: &Path, line: usize, text: &'a str) -> Result<[&'a str; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    parts.try_into().map_err(|p: Vec<&'a str>| {
        parse_error(
            path,
            line,
            format!("expected {N} fields, found {}", p.len()),
        )
    })
}

fn number<T: FromStr>(path: &Path, line: usize, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| parse_error(path, line, format!("invalid number '{s}'")))
}

pub fn parse_graph(text: &str, path: &Path) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_error(path, 1, "missing 'n m' header"))?;
    let [n, m] = fields::<2>(path, line, header)?;
    let n: usize = number(path, line, n)?;
    let m: usize = number(path, line, m)?;

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        let [u, v] = fields::<2>(path, line, text)?;
        let (u, v): (usize, usize) = (number(path, line, u)?, number(path, line, v)?);
        if u >= n || v >= n {
            return Err(parse_error(path, line, format!("node out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_error(path, line, format!("self-loop on {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(path, line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_error(
            path,
            text.lines().count(),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_error(
            path,
            line,
            "unexpected content after the edge list",
        ));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_topology(text: &str, path: &Path) -> Result<GeometricTopology> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_error(path, 1, "missing 'n area_side radius seed' header"))?;
    let [n, area, radius, seed] = fields::<4>(path, line, header)?;
    let n: usize = number(path, line, n)?;
    let area_side: f64 = number(path, line, area)?;
    let radius: f64 = number(path, line, radius)?;
    let seed: u64 = number(path, line, seed)?;

    let mut points = vec![None; n];
    for (line, text) in lines {
        let [id, x, y] = fields::<3>(path, line, text)?;
        let id: usize = number(path, line, id)?;
        let slot = points
            .get_mut(id)
            .ok_or_else(|| parse_error(path, line, format!("node id {id} out of range 0..{n}")))?;
        if slot.is_some() {
            return Err(parse_error(path, line, format!("duplicate node id {id}")));
        }
        *slot = Some(Point::new(number(path, line, x)?, number(path, line, y)?));
    }
    let points = points
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| parse_error(path, 0, format!("missing node {i}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeometricTopology {
        points,
        area_side,
        radius,
        seed,
    })
}

pub fn format_topology(t: &GeometricTopology) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        t.node_count(),
        t.area_side,
        t.radius,
        t.seed
    );
    for (i, p) in t.points.iter().enumerate() {
        let _ = writeln!(out, "{i} {:.9} {:.9}", p.x, p.y);
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
    parse_graph(&text, path)
}

pub fn read_topology(path: &Path) -> Result<GeometricTopology> {
    let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
    parse_topology(&text, path)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| BenchError::io(path, e))
}
