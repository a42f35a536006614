//! Text formats: DIMACS-style instances and per-vertex coloring files.
//!
//! Vertex ids are 1-based on disk and 0-based in memory; the conversion
//! happens only here.
//!
//! ```text
//! p edge 3 3
//! c scheme 2 2
//! e 1 2
//! e 2 3
//! e 1 3
//! ```
//!
//! `c scheme k r` is required. `c multigraph` switches edge lines to
//! `e u v t` with multiplicity `t`. Any other `c` line is a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet, Graph, Multigraph};

/// Either kind of graph an instance file can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceGraph {
    Simple(Graph),
    Multi(Multigraph),
}

impl InstanceGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            InstanceGraph::Simple(g) => g.vertex_count(),
            InstanceGraph::Multi(g) => g.vertex_count(),
        }
    }

    /// Total edge count, with multiplicity.
    pub fn total_edges(&self) -> u64 {
        match self {
            InstanceGraph::Simple(g) => g.total_edges(),
            InstanceGraph::Multi(g) => g.total_edges(),
        }
    }

    /// The simple graph, if this is one (or a multigraph with all
    /// multiplicities 1).
    pub fn as_simple(&self) -> Option<Graph> {
        match self {
            InstanceGraph::Simple(g) => Some(g.clone()),
            InstanceGraph::Multi(g) => g.to_simple(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: InstanceGraph,
    pub scheme: ColorScheme,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<'a>(line: usize, fields: impl Iterator<Item = &'a str>) -> Result<Vec<u64>> {
    fields
        .map(|f| {
            f.parse::<u64>()
                .map_err(|_| parse_err(line, format!("expected a nonnegative integer, found `{f}`")))
        })
        .collect()
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut scheme: Option<(usize, usize, usize)> = None;
    let mut multigraph = false;
    let mut records: Vec<(usize, Vec<u64>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second `p` line"));
                }
                if fields.next() != Some("edge") {
                    return Err(parse_err(line, "expected `p edge n m`"));
                }
                let nums = numbers(line, fields)?;
                let [n, m] = nums[..] else {
                    return Err(parse_err(line, "expected `p edge n m`"));
                };
                header = Some((n as usize, m as usize, line));
            }
            Some("c") => match fields.next() {
                Some("scheme") => {
                    if scheme.is_some() {
                        return Err(parse_err(line, "second `c scheme` line"));
                    }
                    let nums = numbers(line, fields)?;
                    let [k, r] = nums[..] else {
                        return Err(parse_err(line, "expected `c scheme k r`"));
                    };
                    scheme = Some((k as usize, r as usize, line));
                }
                Some("multigraph") => {
                    if fields.next().is_some() {
                        return Err(parse_err(line, "unexpected text after `c multigraph`"));
                    }
                    multigraph = true;
                }
                _ => {}
            },
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(line, "edge line before the `p` line"));
                }
                let nums = numbers(line, fields)?;
                if !(2..=3).contains(&nums.len()) {
                    return Err(parse_err(line, "expected `e u v` or `e u v t`"));
                }
                records.push((line, nums));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let (n, m, p_line) = header.ok_or_else(|| parse_err(last, "missing `p edge n m` line"))?;
    let (k, r, s_line) = scheme.ok_or_else(|| parse_err(p_line, "missing `c scheme k r` line"))?;
    let scheme = ColorScheme::new(r, k).map_err(|e| parse_err(s_line, e.to_string()))?;
    if records.len() != m {
        return Err(parse_err(
            p_line,
            format!("header declares {m} edges, found {}", records.len()),
        ));
    }

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(records.len());
    for (line, nums) in records {
        let (u, v) = (nums[0] as usize, nums[1] as usize);
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse_err(line, format!("vertex out of range 1..={n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop on vertex {u}")));
        }
        let t = match nums.get(2) {
            Some(_) if !multigraph => return Err(parse_err(line, "multiplicity given but `c multigraph` is not set")),
            Some(&0) => return Err(parse_err(line, "multiplicity must be positive")),
            Some(&t) => t,
            None => 1,
        };
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u - 1, v - 1, t));
    }
    let graph = if multigraph {
        InstanceGraph::Multi(Multigraph::new(n, edges)?)
    } else {
        InstanceGraph::Simple(Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))?)
    };
    Ok(Instance { graph, scheme })
}

/// Canonical text form: edges sorted, multiplicities written only for
/// multigraphs.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let s = inst.scheme;
    match &inst.graph {
        InstanceGraph::Simple(g) => {
            let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
            let _ = writeln!(out, "c scheme {} {}", s.k(), s.r());
            for &(u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
        InstanceGraph::Multi(g) => {
            let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.pair_count());
            let _ = writeln!(out, "c scheme {} {}", s.k(), s.r());
            out.push_str("c multigraph\n");
            for &(u, v, t) in g.edges() {
                let _ = writeln!(out, "e {} {} {t}", u + 1, v + 1);
            }
        }
    }
    out
}

/// Reads `v color` lines (1-based vertex, 0-based color), one per vertex
/// in any order. Blank lines and `c` comments are skipped.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let nums = numbers(line, trimmed.split_whitespace())?;
        let [v, color] = nums[..] else {
            return Err(parse_err(line, "expected `v color`"));
        };
        let v = v as usize;
        if v == 0 || v > n {
            return Err(parse_err(line, format!("vertex out of range 1..={n}")));
        }
        if colors[v - 1].replace(color as usize).is_some() {
            return Err(parse_err(line, format!("vertex {v} colored twice")));
        }
    }
    let missing = colors.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: n - missing,
        });
    }
    Ok(Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
}

pub fn serialize_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, color) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{} {color}", v + 1);
    }
    out
}
