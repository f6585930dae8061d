//! PORTA-style `.ieq`/`.poi` text and JSON records.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{parse_rat, Rat};
use super::types::{HPolyhedron, Halfspace, VPolytope};
use crate::error::{Error, Result};

fn term(c: &Rat, var: usize, first: bool) -> String {
    let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
    let mag = c.abs();
    if mag.is_one() {
        format!("{sign}x{var}")
    } else {
        format!("{sign}{mag}x{var}")
    }
}

fn lhs(a: &[Rat]) -> String {
    let mut s = String::new();
    for (i, c) in a.iter().enumerate() {
        if !c.is_zero() {
            s.push_str(&term(c, i + 1, s.is_empty()));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// `.ieq` text: one line per equation (`==`) then per inequality (`<=`).
pub fn write_ieq(h: &HPolyhedron) -> String {
    let mut out = format!("DIM = {}\n\nINEQUALITIES_SECTION\n", h.dim());
    let mut n = 0;
    for (rows, op) in [(&h.eqs, "=="), (&h.ineqs, "<=")] {
        for r in rows.iter() {
            n += 1;
            let _ = writeln!(out, "({n}) {} {op} {}", lhs(&r.a), r.b);
        }
    }
    out.push_str("END\n");
    out
}

/// `.poi` text; an empty polytope is written with an `INFEASIBLE` line.
pub fn write_poi(v: &VPolytope) -> String {
    let mut out = format!("DIM = {}\n\n", v.dim());
    if v.is_empty() {
        out.push_str("INFEASIBLE\nEND\n");
        return out;
    }
    let line = |p: &Vec<Rat>| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    out.push_str("CONV_SECTION\n");
    for p in &v.vertices {
        out.push_str(&line(p));
        out.push('\n');
    }
    if !v.rays.is_empty() || !v.lineality.is_empty() {
        out.push_str("CONE_SECTION\n");
        for r in &v.rays {
            out.push_str(&line(r));
            out.push('\n');
        }
        for l in &v.lineality {
            out.push_str(&line(l));
            out.push('\n');
            let neg: Vec<Rat> = l.iter().map(|x| -x).collect();
            out.push_str(&line(&neg));
            out.push('\n');
        }
    }
    out.push_str("END\n");
    out
}

fn parse_dim(text: &str) -> Result<usize> {
    for line in text.lines() {
        let t = line.trim();
        if let Some(rest) = t.strip_prefix("DIM") {
            let rest = rest.trim_start().trim_start_matches('=').trim();
            return rest.parse().map_err(|_| Error::Parse(format!("bad DIM line: {t}")));
        }
    }
    Err(Error::Parse("missing DIM line".into()))
}

/// Parses `c1x1+c2x2-...` into a coefficient vector.
fn parse_linear(expr: &str, dim: usize) -> Result<Vec<Rat>> {
    let mut a = vec![Rat::zero(); dim];
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "0" {
        return Ok(a);
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    for t in terms {
        let (coef, var) = t
            .split_once('x')
            .ok_or_else(|| Error::Parse(format!("bad term: {t}")))?;
        let c = match coef {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            c => parse_rat(c.trim_start_matches('+'))?,
        };
        let idx: usize = var.parse().map_err(|_| Error::Parse(format!("bad variable: x{var}")))?;
        if idx == 0 || idx > dim {
            return Err(Error::Parse(format!("variable x{idx} outside DIM = {dim}")));
        }
        a[idx - 1] += c;
    }
    Ok(a)
}

/// Reads a `.ieq` file. Accepts `<=`, `>=` and `==` rows with a constant
/// right-hand side and optional `(n)` labels.
pub fn parse_ieq(text: &str) -> Result<HPolyhedron> {
    let dim = parse_dim(text)?;
    let mut h = HPolyhedron::new(dim);
    let mut in_section = false;
    for line in text.lines() {
        let mut t = line.trim();
        if t == "INEQUALITIES_SECTION" {
            in_section = true;
            continue;
        }
        if t == "END" {
            break;
        }
        if !in_section || t.is_empty() {
            continue;
        }
        if t.starts_with('(') {
            t = t.split_once(')').map(|(_, r)| r).unwrap_or(t).trim();
        }
        let (op, pos) = ["<=", ">=", "=="]
            .iter()
            .find_map(|op| t.find(op).map(|p| (*op, p)))
            .ok_or_else(|| Error::Parse(format!("no relation in: {t}")))?;
        let a = parse_linear(&t[..pos], dim)?;
        let b = parse_rat(t[pos + 2..].trim())?;
        match op {
            "<=" => h.ineqs.push(Halfspace::new(a, b)),
            ">=" => h.ineqs.push(Halfspace::new(a.iter().map(|x| -x).collect(), -b)),
            _ => h.eqs.push(Halfspace::new(a, b)),
        }
    }
    Ok(h)
}

/// Reads a `.poi` file (`CONV_SECTION` points, `CONE_SECTION` rays).
pub fn parse_poi(text: &str) -> Result<VPolytope> {
    let dim = parse_dim(text)?;
    let mut verts = Vec::new();
    let mut rays = Vec::new();
    let mut section = "";
    for line in text.lines() {
        let t = line.trim();
        match t {
            "CONV_SECTION" | "CONE_SECTION" => section = if t == "CONV_SECTION" { "conv" } else { "cone" },
            "INFEASIBLE" => return Ok(VPolytope::new(dim, Vec::new())),
            "END" => break,
            _ if t.is_empty() || t.starts_with("DIM") || section.is_empty() => {}
            _ => {
                let body = if t.starts_with('(') {
                    t.split_once(')').map(|(_, r)| r).unwrap_or(t)
                } else {
                    t
                };
                let p = body
                    .split_whitespace()
                    .map(parse_rat)
                    .collect::<Result<Vec<Rat>>>()?;
                if p.len() != dim {
                    return Err(Error::DimMismatch {
                        expected: dim,
                        found: p.len(),
                    });
                }
                if section == "conv" {
                    verts.push(p);
                } else {
                    rays.push(p);
                }
            }
        }
    }
    Ok(VPolytope::with_rays(dim, verts, rays))
}

/// One row `a·x ≤ b` (or `= b`) with exact fractions as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub a: Vec<String>,
    pub b: String,
}

/// JSON-friendly view of a polyhedron in either or both representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronRecord {
    pub dim: usize,
    pub ineqs: Vec<RowRecord>,
    pub eqs: Vec<RowRecord>,
    pub vertices: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn row_record(r: &Halfspace) -> RowRecord {
    RowRecord {
        a: strings(&r.a),
        b: r.b.to_string(),
    }
}

impl PolyhedronRecord {
    pub fn new(h: Option<&HPolyhedron>, v: Option<&VPolytope>) -> Self {
        let dim = h.map(|h| h.dim()).or(v.map(|v| v.dim())).unwrap_or(0);
        let mut rays: Vec<Vec<String>> = Vec::new();
        if let Some(v) = v {
            rays.extend(v.rays.iter().map(|r| strings(r)));
            for l in &v.lineality {
                rays.push(strings(l));
                rays.push(l.iter().map(|x| (-x).to_string()).collect());
            }
        }
        PolyhedronRecord {
            dim,
            ineqs: h.map(|h| h.ineqs.iter().map(row_record).collect()).unwrap_or_default(),
            eqs: h.map(|h| h.eqs.iter().map(row_record).collect()).unwrap_or_default(),
            vertices: v.map(|v| v.vertices.iter().map(|p| strings(p)).collect()).unwrap_or_default(),
            rays,
        }
    }
}

pub fn polyhedron_json(h: &HPolyhedron) -> PolyhedronRecord {
    PolyhedronRecord::new(Some(h), None)
}

pub fn polytope_json(v: &VPolytope) -> PolyhedronRecord {
    PolyhedronRecord::new(None, Some(v))
}
