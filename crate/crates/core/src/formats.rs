//! Line-oriented text formats for graphs, hypergraphs, weight tables, CSPs
//! and codes. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::arith::{fmt_rational, parse_rational, Rational};
use crate::code::LinearCode;
use crate::csp::{CompiledCsp, Constraint, CspInstance, WeightedCspInstance};
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::hom::WeightTable;

/// Non-empty records with their 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn ratio(line: usize, tok: &str) -> Result<Rational> {
    parse_rational(tok).map_err(|e| Error::parse(line, e))
}

fn header<'a>(
    recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<usize>)> {
    let (line, toks) = recs
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    if toks[0] != keyword || toks.len() != arity + 1 {
        return Err(Error::parse(line, format!("expected `{keyword}` header with {arity} fields")));
    }
    let vals = toks[1..].iter().map(|t| num(line, t)).collect::<Result<_>>()?;
    Ok((line, vals))
}

fn expect_count(line: usize, what: &str, declared: usize, found: usize) -> Result<()> {
    if declared != found {
        return Err(Error::parse(line, format!("header declares {declared} {what}, found {found}")));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut recs = records(text);
    let (hline, hv) = header(&mut recs, "graph", 2)?;
    let (n, m) = (hv[0], hv[1]);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line, toks) in recs {
        if toks[0] != "e" || toks.len() != 3 {
            return Err(Error::parse(line, "expected `e <u> <v>`"));
        }
        let (u, v): (usize, usize) = (num(line, toks[1])?, num(line, toks[2])?);
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(line, "self-loop"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, "duplicate edge"));
        }
        edges.push((u, v));
    }
    expect_count(hline, "edges", m, edges.len())?;
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut recs = records(text);
    let (hline, hv) = header(&mut recs, "hypergraph", 2)?;
    let (n, m) = (hv[0], hv[1]);
    let mut edges = Vec::new();
    for (line, toks) in recs {
        if toks[0] != "h" || toks.len() < 2 {
            return Err(Error::parse(line, "expected `h <k> <v1> .. <vk>`"));
        }
        let k: usize = num(line, toks[1])?;
        if toks.len() != k + 2 {
            return Err(Error::parse(line, format!("hyperedge declares {k} vertices, found {}", toks.len() - 2)));
        }
        let f: Vec<usize> = toks[2..].iter().map(|t| num(line, t)).collect::<Result<_>>()?;
        Hypergraph::new(n, [f.clone()]).map_err(|e| Error::parse(line, e.to_string()))?;
        edges.push(f);
    }
    expect_count(hline, "hyperedges", m, edges.len())?;
    Hypergraph::new(n, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph {} {}\n", h.n(), h.m());
    for f in h.edges() {
        let vs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "h {} {}", f.len(), vs.join(" "));
    }
    out
}

pub fn parse_weights(text: &str) -> Result<WeightTable> {
    let mut recs = records(text);
    let (hline, hv) = header(&mut recs, "weights", 2)?;
    let (n, h) = (hv[0], hv[1]);
    let mut rows: Vec<Option<Vec<Rational>>> = vec![None; n];
    for (line, toks) in recs {
        if toks[0] != "w" || toks.len() != h + 2 {
            return Err(Error::parse(line, format!("expected `w <v>` followed by {h} weights")));
        }
        let v: usize = num(line, toks[1])?;
        if v >= n {
            return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
        }
        if rows[v].is_some() {
            return Err(Error::parse(line, format!("second row for vertex {v}")));
        }
        rows[v] = Some(toks[2..].iter().map(|t| ratio(line, t)).collect::<Result<_>>()?);
    }
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::parse(hline, format!("no row for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    WeightTable::new(h, rows)
}

pub fn write_weights(w: &WeightTable) -> String {
    let mut out = format!("weights {} {}\n", w.n(), w.h());
    for (v, row) in w.rows().iter().enumerate() {
        let vals: Vec<String> = row.iter().map(fmt_rational).collect();
        let _ = writeln!(out, "w {v} {}", vals.join(" "));
    }
    out
}

/// A CSP file; `weights` is present when any `wt` line is given, with
/// missing variables weighted `(1, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CspFile {
    pub csp: CspInstance,
    pub weights: Option<Vec<[Rational; 2]>>,
}

impl CspFile {
    pub fn weighted(&self) -> Result<WeightedCspInstance> {
        match &self.weights {
            Some(w) => WeightedCspInstance::new(self.csp.clone(), w.clone()),
            None => Ok(WeightedCspInstance::unweighted(self.csp.clone())),
        }
    }
}

pub fn parse_csp(text: &str) -> Result<CspFile> {
    let mut recs = records(text);
    let (hline, hv) = header(&mut recs, "csp", 2)?;
    let (nvars, nc) = (hv[0], hv[1]);
    let mut constraints = Vec::new();
    let mut weights: Option<Vec<[Rational; 2]>> = None;
    let var = |line: usize, tok: &str| -> Result<usize> {
        let x: usize = num(line, tok)?;
        if x >= nvars {
            return Err(Error::parse(line, format!("variable out of range 0..{nvars}")));
        }
        Ok(x)
    };
    for (line, toks) in recs {
        match (toks[0], toks.len()) {
            ("imp", 3) => constraints.push(Constraint::Imp(var(line, toks[1])?, var(line, toks[2])?)),
            ("pin0", 2) => constraints.push(Constraint::Pin0(var(line, toks[1])?)),
            ("pin1", 2) => constraints.push(Constraint::Pin1(var(line, toks[1])?)),
            ("wt", 4) => {
                let x = var(line, toks[1])?;
                let w = weights.get_or_insert_with(|| vec![[Rational::from_integer(1.into()), Rational::from_integer(1.into())]; nvars]);
                w[x] = [ratio(line, toks[2])?, ratio(line, toks[3])?];
            }
            _ => return Err(Error::parse(line, "expected `imp x y`, `pin0 x`, `pin1 x` or `wt x g0 g1`")),
        }
    }
    expect_count(hline, "constraints", nc, constraints.len())?;
    Ok(CspFile {
        csp: CspInstance::new(nvars, constraints)?,
        weights,
    })
}

/// Writes a CSP; `wt` lines are emitted only for weights other than `(1, 1)`.
pub fn write_csp(csp: &CspInstance, weights: Option<&[[Rational; 2]]>) -> String {
    let mut out = format!("csp {} {}\n", csp.nvars(), csp.constraints().len());
    for c in csp.constraints() {
        let _ = writeln!(out, "{c}");
    }
    if let Some(ws) = weights {
        let one = Rational::from_integer(1.into());
        for (x, [g0, g1]) in ws.iter().enumerate() {
            if g0 != &one || g1 != &one {
                let _ = writeln!(out, "wt {x} {} {}", fmt_rational(g0), fmt_rational(g1));
            }
        }
    }
    out
}

/// A compiled instance preceded by a comment block naming each variable's role.
pub fn write_compiled(c: &CompiledCsp) -> String {
    let mut out = String::new();
    for (v, role) in c.roles.iter().enumerate() {
        let _ = writeln!(out, "# {v}: {role}");
    }
    out + &write_csp(&c.csp, None)
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut recs = records(text);
    let (hline, hv) = header(&mut recs, "code", 3)?;
    let (p, r, cols) = (hv[0] as u64, hv[1], hv[2]);
    let mut rows = Vec::new();
    for (line, toks) in recs {
        if toks.len() != cols {
            return Err(Error::parse(line, format!("expected {cols} entries, found {}", toks.len())));
        }
        let row: Vec<u64> = toks.iter().map(|t| num(line, t)).collect::<Result<_>>()?;
        if let Some(x) = row.iter().find(|&&x| x >= p) {
            return Err(Error::parse(line, format!("entry {x} is not below {p}")));
        }
        rows.push(row);
    }
    expect_count(hline, "rows", r, rows.len())?;
    LinearCode::new(p, cols, rows).map_err(|e| Error::parse(hline, e.to_string()))
}

pub fn write_code(c: &LinearCode) -> String {
    let mut out = format!("code {} {} {}\n", c.p(), c.rows().len(), c.len());
    for row in c.rows() {
        let vals: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", vals.join(" "));
    }
    out
}
