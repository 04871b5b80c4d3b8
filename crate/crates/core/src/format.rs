//! Text formats for complexes, posets and squarefree ideals.
//!
//! Facet lists: one facet per line, vertex ids separated by spaces. A line
//! holding only `*` is the empty facet. An optional `ground N` header
//! declares the ground set `{1..N}`; `vertices v1 v2 …` declares an
//! arbitrary one. Without a header the ground set is the union of the listed
//! vertices. A file with no facets is the void complex.
//!
//! Posets: a header `elements a b c …` followed by cover lines `a < b`.
//!
//! Ideals: one generator support per line with the facet-list syntax.
//!
//! Lines starting with `#` are comments everywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::poset::FinitePoset;
use crate::sr::SquarefreeIdeal;

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(b, t)| (line[..b].chars().count() + 1, t)).collect()
}

/// Numbered content lines with comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim_start();
        !t.is_empty() && !t.starts_with('#')
    })
}

fn parse_vertex(lineno: usize, col: usize, tok: &str) -> Result<u32, ParseError> {
    tok.parse::<u32>().map_err(|_| err(lineno, col, format!("expected a vertex id, found `{tok}`")))
}

/// Ground set declaration and supports shared by facet lists and ideals.
fn parse_supports(text: &str) -> Result<(Option<Vec<u32>>, Vec<Face>), ParseError> {
    let mut ground: Option<Vec<u32>> = None;
    let mut supports = Vec::new();
    for (lineno, line) in content_lines(text) {
        let toks = tokens(line);
        let (col0, head) = toks[0];
        match head {
            "ground" | "vertices" => {
                if ground.is_some() {
                    return Err(err(lineno, col0, "ground set declared twice"));
                }
                if !supports.is_empty() {
                    return Err(err(lineno, col0, "ground set must be declared before the first face"));
                }
                if head == "ground" {
                    if toks.len() != 2 {
                        return Err(err(lineno, col0, "expected `ground N`"));
                    }
                    let (c, t) = toks[1];
                    let n = t.parse::<u32>().map_err(|_| err(lineno, c, format!("expected a vertex count, found `{t}`")))?;
                    ground = Some((1..=n).collect());
                } else {
                    let vs = toks[1..].iter().map(|&(c, t)| parse_vertex(lineno, c, t)).collect::<Result<Vec<_>, _>>()?;
                    ground = Some(vs);
                }
            }
            "*" => {
                if toks.len() != 1 {
                    return Err(err(lineno, toks[1].0, "`*` must stand alone"));
                }
                supports.push(Face::empty());
            }
            _ => {
                let mut vs = Vec::with_capacity(toks.len());
                for &(c, t) in &toks {
                    let v = parse_vertex(lineno, c, t)?;
                    if let Some(g) = &ground {
                        if !g.contains(&v) {
                            return Err(err(lineno, c, format!("vertex {v} is outside the declared ground set")));
                        }
                    }
                    if vs.contains(&v) {
                        return Err(err(lineno, c, format!("vertex {v} repeated")));
                    }
                    vs.push(v);
                }
                supports.push(Face::new(vs));
            }
        }
    }
    Ok((ground, supports))
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex, ParseError> {
    let (ground, facets) = parse_supports(text)?;
    Ok(match ground {
        Some(g) => SimplicialComplex::from_facets(facets, g).expect("vertices checked against the ground set"),
        None => SimplicialComplex::from_facets_auto(facets),
    })
}

fn write_ground(out: &mut String, ground: &[u32], implied: &BTreeSet<u32>) {
    let standard = ground.iter().enumerate().all(|(i, &v)| v == i as u32 + 1);
    if standard && !ground.is_empty() && ground.iter().copied().collect::<BTreeSet<_>>() != *implied {
        let _ = writeln!(out, "ground {}", ground.len());
    } else if !standard && ground.iter().copied().collect::<BTreeSet<_>>() != *implied {
        out.push_str("vertices");
        for v in ground {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
}

fn write_supports(out: &mut String, supports: &[Face]) {
    for f in supports {
        if f.is_empty() {
            out.push_str("*\n");
        } else {
            let vs: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", vs.join(" "));
        }
    }
}

/// Inverse of [`parse_facets`]; the ground header is written only when needed.
pub fn write_facets(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    let implied: BTreeSet<u32> = complex.facets().iter().flat_map(|f| f.vertices().iter().copied()).collect();
    write_ground(&mut out, complex.ground(), &implied);
    write_supports(&mut out, complex.facets());
    out
}

pub fn parse_ideal(text: &str) -> Result<SquarefreeIdeal, ParseError> {
    let (ground, gens) = parse_supports(text)?;
    let ground = ground.unwrap_or_else(|| gens.iter().flat_map(|g| g.vertices().iter().copied()).collect::<BTreeSet<_>>().into_iter().collect());
    Ok(SquarefreeIdeal::new(ground, gens).expect("vertices checked against the ground set"))
}

pub fn write_ideal(ideal: &SquarefreeIdeal) -> String {
    let mut out = String::new();
    let implied: BTreeSet<u32> = ideal.generators().iter().flat_map(|f| f.vertices().iter().copied()).collect();
    write_ground(&mut out, ideal.ground(), &implied);
    write_supports(&mut out, ideal.generators());
    out
}

pub fn parse_poset(text: &str) -> Result<FinitePoset, ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut relations: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for (lineno, line) in content_lines(text) {
        last_line = lineno;
        let toks = tokens(line);
        let (col0, head) = toks[0];
        if head == "elements" {
            if labels.is_some() {
                return Err(err(lineno, col0, "`elements` declared twice"));
            }
            let mut seen = BTreeSet::new();
            for &(c, t) in &toks[1..] {
                if !seen.insert(t) {
                    return Err(err(lineno, c, format!("duplicate element `{t}`")));
                }
            }
            labels = Some(toks[1..].iter().map(|&(_, t)| t.to_string()).collect());
            continue;
        }
        let Some(ls) = &labels else {
            return Err(err(lineno, col0, "expected `elements …` header before relations"));
        };
        if toks.len() != 3 || toks[1].1 != "<" {
            return Err(err(lineno, col0, "expected a cover line `a < b`"));
        }
        let find = |(c, t): (usize, &str)| {
            ls.iter().position(|l| l == t).ok_or_else(|| err(lineno, c, format!("unknown element `{t}`")))
        };
        let a = find(toks[0])?;
        let b = find(toks[2])?;
        if a == b {
            return Err(err(lineno, toks[2].0, format!("`{}` cannot be below itself", ls[a])));
        }
        relations.push((a, b));
    }
    let labels = labels.ok_or_else(|| err(last_line.max(1), 1, "missing `elements …` header"))?;
    FinitePoset::from_relations(labels, relations).map_err(|e| err(last_line.max(1), 1, e.to_string()))
}

pub fn write_poset(poset: &FinitePoset) -> String {
    let mut s = poset.to_string();
    s.push('\n');
    s
}
