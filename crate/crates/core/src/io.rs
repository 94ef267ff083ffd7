//! Text and JSON input formats.
//!
//! Line-oriented formats ignore blank lines and everything after `#`.
//! Every parse failure carries a 1-based line and column.

use serde::Deserialize;

use crate::algebraic::{CatalyticEquation, Cfg, PolySystem, Symbol};
use crate::arith::parse::parse_poly;
use crate::arith::rat::parse_rat;
use crate::arith::{MPoly, Rat, Var};
use crate::error::{GfError, ParseError, Result};
use crate::posets::{HalfspaceSystem, NaturalPoset};
use crate::rational::{Nfa, WeightedDigraph};

/// Non-empty lines with comments stripped, as `(line number, column of first char, text)`.
fn content_lines(src: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let col = body.len() - trimmed.len() + 1;
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some((i + 1, col, trimmed))
    })
}

fn perr(line: usize, column: usize, msg: impl Into<String>) -> GfError {
    GfError::Parse(ParseError::new(line, column, msg))
}

/// Shifts an expression error to its place in the file.
fn relocate(e: ParseError, line: usize, col: usize) -> GfError {
    GfError::Parse(ParseError::new(line, col + e.column - 1, e.message))
}

fn expr_at(src: &str, line: usize, col: usize) -> Result<MPoly> {
    parse_poly(src).map_err(|e| relocate(e, line, col))
}

fn semantic(line: usize, e: GfError) -> GfError {
    match e {
        GfError::Parse(_) => e,
        other => perr(line, 1, other.to_string()),
    }
}

/// Coefficients as `p/q` or integers, separated by whitespace or commas.
///
/// Optional headers, before any value: `order N` (the last index, checked) and
/// `start K` (the first value is the coefficient of `t^K`; lower ones are zero).
pub fn read_series(src: &str) -> Result<Vec<Rat>> {
    let mut order = None;
    let mut start = 0;
    let mut out = Vec::new();
    let mut last_line = 1;
    for (ln, col, text) in content_lines(src) {
        last_line = ln;
        let header = ["order", "start"]
            .into_iter()
            .find_map(|h| text.strip_prefix(h).map(|rest| (h, rest)));
        if let Some((h, rest)) = header {
            if !out.is_empty() {
                return Err(perr(ln, col, format!("{h} header must come before the coefficients")));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| perr(ln, col + h.len(), "expected a non-negative integer"))?;
            if h == "order" {
                order = Some((n, ln));
            } else {
                start = n;
            }
            continue;
        }
        let mut from = 0;
        for field in text.split(|c: char| c == ',' || c.is_whitespace()) {
            let at = from;
            from += field.len() + 1;
            if field.is_empty() {
                continue;
            }
            let r = parse_rat(field)
                .ok_or_else(|| perr(ln, col + at, format!("bad coefficient '{field}'")))?;
            out.push(r);
        }
    }
    let mut coeffs = vec![Rat::from_integer(0.into()); start];
    coeffs.extend(out);
    if let Some((n, ln)) = order {
        if coeffs.len() != n + 1 {
            return Err(perr(
                ln.max(last_line),
                1,
                format!("header says order {n} but there are {} coefficients", coeffs.len()),
            ));
        }
    }
    Ok(coeffs)
}

pub fn write_series(coeffs: &[Rat]) -> String {
    let mut s = format!("order {}\n", coeffs.len().saturating_sub(1));
    for c in coeffs {
        s.push_str(&c.to_string());
        s.push('\n');
    }
    s
}

fn json<T: for<'de> Deserialize<'de>>(src: &str) -> Result<T> {
    serde_json::from_str(src).map_err(|e| perr(e.line().max(1), e.column().max(1), e.to_string()))
}

fn default_weight() -> String {
    "1".into()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRec {
    from: usize,
    to: usize,
    #[serde(default = "default_weight")]
    weight: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphRec {
    vertices: usize,
    edges: Vec<EdgeRec>,
    #[serde(default)]
    start: Option<usize>,
    #[serde(default)]
    targets: Option<Vec<usize>>,
}

/// A digraph file, with the optional default query `start`/`targets`.
#[derive(Clone, Debug)]
pub struct DigraphFile {
    pub graph: WeightedDigraph,
    pub start: Option<usize>,
    pub targets: Option<Vec<usize>>,
}

/// `{"vertices": p, "edges": [{"from", "to", "weight"}], "start"?, "targets"?}`.
pub fn read_digraph(src: &str) -> Result<DigraphFile> {
    let rec: DigraphRec = json(src)?;
    let mut g = WeightedDigraph::new(rec.vertices);
    for (k, e) in rec.edges.iter().enumerate() {
        let w = parse_poly(&e.weight)
            .map_err(|pe| GfError::Invalid(format!("edge {k}: weight '{}': {pe}", e.weight)))?;
        g.add_edge(e.from, e.to, w)
            .map_err(|err| GfError::Invalid(format!("edge {k}: {err}")))?;
    }
    Ok(DigraphFile {
        graph: g,
        start: rec.start,
        targets: rec.targets,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransitionRec {
    from: usize,
    letter: String,
    to: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonRec {
    #[serde(alias = "states")]
    vertices: usize,
    alphabet: Vec<String>,
    transitions: Vec<TransitionRec>,
    initial: usize,
    finals: Vec<usize>,
}

/// `{"vertices", "alphabet", "transitions": [{"from", "letter", "to"}], "initial", "finals"}`.
pub fn read_automaton(src: &str) -> Result<Nfa> {
    let rec: AutomatonRec = json(src)?;
    let trans: Vec<(usize, &str, usize)> = rec
        .transitions
        .iter()
        .map(|t| (t.from, t.letter.as_str(), t.to))
        .collect();
    Nfa::new(rec.vertices, rec.alphabet, &trans, rec.initial, &rec.finals)
}

fn ints<T: std::str::FromStr>(text: &str, line: usize, col: usize) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in text.split_whitespace() {
        let at = text[offset..].find(tok).unwrap() + offset;
        offset = at + tok.len();
        out.push(
            tok.parse()
                .map_err(|_| perr(line, col + at, format!("expected an integer, found '{tok}'")))?,
        );
    }
    Ok(out)
}

/// First line `k`, then one covering pair `i j` (meaning `i < j`) per line.
pub fn read_poset(src: &str) -> Result<NaturalPoset> {
    let mut lines = content_lines(src);
    let (ln, col, head) = lines.next().ok_or_else(|| perr(1, 1, "missing element count"))?;
    let k = match ints::<usize>(head, ln, col)?.as_slice() {
        [k] => *k,
        _ => return Err(perr(ln, col, "first line must be the element count")),
    };
    let mut rel = Vec::new();
    for (ln, col, text) in lines {
        match ints::<usize>(text, ln, col)?.as_slice() {
            [i, j] => {
                NaturalPoset::new(k, &[(*i, *j)]).map_err(|e| semantic(ln, e))?;
                rel.push((*i, *j));
            }
            _ => return Err(perr(ln, col, "expected a pair 'i j'")),
        }
    }
    NaturalPoset::new(k, &rel)
}

/// First line `m`, then rows of `m` integers `c` meaning `c . alpha >= 0`.
pub fn read_halfspaces(src: &str) -> Result<HalfspaceSystem> {
    let mut lines = content_lines(src);
    let (ln, col, head) = lines.next().ok_or_else(|| perr(1, 1, "missing dimension"))?;
    let m = match ints::<usize>(head, ln, col)?.as_slice() {
        [m] => *m,
        _ => return Err(perr(ln, col, "first line must be the dimension")),
    };
    let mut rows = Vec::new();
    for (ln, col, text) in lines {
        let r = ints::<i64>(text, ln, col)?;
        if r.len() != m {
            return Err(perr(ln, col, format!("expected {m} coefficients, found {}", r.len())));
        }
        rows.push(r);
    }
    HalfspaceSystem::new(m, rows)
}

fn is_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

/// `start S`, `letters a b`, and rules `S -> a b | a S b S`.
///
/// Nonterminals are the left-hand sides, the start symbol first, then in order of appearance.
pub fn read_grammar(src: &str) -> Result<Cfg> {
    let mut start: Option<String> = None;
    let mut letters: Option<Vec<String>> = None;
    let mut rules: Vec<(usize, String, Vec<String>)> = Vec::new();
    for (ln, col, text) in content_lines(src) {
        if let Some(rest) = text.strip_prefix("start ") {
            start = Some(rest.trim().to_string());
            continue;
        }
        if let Some(rest) = text.strip_prefix("letters ") {
            letters = Some(rest.split_whitespace().map(String::from).collect());
            continue;
        }
        let arrow = text
            .find("->")
            .ok_or_else(|| perr(ln, col, "expected 'start', 'letters' or a rule 'S -> ...'"))?;
        let lhs = text[..arrow].trim();
        if !is_name(lhs) {
            return Err(perr(ln, col, format!("bad nonterminal '{lhs}'")));
        }
        let mut offset = arrow + 2;
        for alt in text[arrow + 2..].split('|') {
            let words: Vec<String> = alt.split_whitespace().map(String::from).collect();
            if words.is_empty() {
                return Err(perr(ln, col + offset, "empty alternative"));
            }
            if let Some(bad) = words.iter().find(|w| !is_name(w)) {
                return Err(perr(ln, col + offset, format!("bad symbol '{bad}'")));
            }
            rules.push((ln, lhs.to_string(), words));
            offset += alt.len() + 1;
        }
    }
    let letters = letters.ok_or_else(|| perr(1, 1, "missing 'letters' line"))?;
    let first = rules.first().ok_or_else(|| perr(1, 1, "no rules"))?;
    let start = start.unwrap_or_else(|| first.1.clone());
    let mut symbols = vec![start.clone()];
    for (_, lhs, _) in &rules {
        if !symbols.contains(lhs) {
            symbols.push(lhs.clone());
        }
    }
    let mut converted = Vec::new();
    for (ln, lhs, words) in &rules {
        let head = symbols.iter().position(|s| s == lhs).unwrap();
        let mut body = Vec::new();
        for w in words {
            if let Some(i) = symbols.iter().position(|s| s == w) {
                body.push(Symbol::Var(i));
            } else if let Some(i) = letters.iter().position(|s| s == w) {
                body.push(Symbol::Letter(i));
            } else {
                return Err(perr(*ln, 1, format!("'{w}' is neither a nonterminal nor a letter")));
            }
        }
        if let [Symbol::Var(j)] = body.as_slice() {
            return Err(perr(*ln, 1, format!("unit rule {lhs} -> {}", symbols[*j])));
        }
        converted.push((*ln, head, body));
    }
    if !rules.iter().any(|(_, l, _)| *l == start) {
        return Err(perr(1, 1, format!("start symbol '{start}' has no rules")));
    }
    let line_of = converted.iter().map(|(l, ..)| *l).collect::<Vec<_>>();
    Cfg::new(
        symbols,
        letters,
        converted.into_iter().map(|(_, h, b)| (h, b)).collect(),
    )
    .map_err(|e| semantic(*line_of.first().unwrap_or(&1), e))
}

/// Lines `X = P(t, X, ...)`; unknowns are the left-hand sides in file order.
pub fn read_system(src: &str) -> Result<PolySystem> {
    let mut names = Vec::new();
    let mut eqs = Vec::new();
    let mut first_line = 1;
    for (ln, col, text) in content_lines(src) {
        if names.is_empty() {
            first_line = ln;
        }
        let eq = text.find('=').ok_or_else(|| perr(ln, col, "expected 'X = ...'"))?;
        let lhs = text[..eq].trim();
        if !is_name(lhs) || lhs == "t" {
            return Err(perr(ln, col, format!("bad unknown '{lhs}'")));
        }
        if names.iter().any(|v: &Var| v.name() == lhs) {
            return Err(perr(ln, col, format!("unknown '{lhs}' defined twice")));
        }
        names.push(Var::new(lhs));
        eqs.push(expr_at(&text[eq + 1..], ln, col + eq + 1)?);
    }
    if names.is_empty() {
        return Err(perr(1, 1, "no equations"));
    }
    PolySystem::new(names, eqs).map_err(|e| semantic(first_line, e))
}

/// A single equation `G(u) = ...`, possibly spread over several lines.
pub fn read_catalytic(src: &str) -> Result<CatalyticEquation> {
    let lines: Vec<_> = content_lines(src).collect();
    match lines.as_slice() {
        [] => Err(perr(1, 1, "empty file")),
        [(ln, col, text)] => CatalyticEquation::parse(text).map_err(|e| match e {
            GfError::Parse(pe) => relocate(pe, *ln, *col),
            other => semantic(*ln, other),
        }),
        _ => {
            let joined = lines.iter().map(|l| l.2).collect::<Vec<_>>().join(" ");
            CatalyticEquation::parse(&joined).map_err(|e| semantic(lines[0].0, e))
        }
    }
}

/// An optional `var A` line followed by a polynomial `P(t, A)` (default variable `A`).
pub fn read_equation(src: &str) -> Result<(MPoly, Var)> {
    let mut var = None;
    let mut parts = Vec::new();
    for (ln, col, text) in content_lines(src) {
        if let Some(rest) = text.strip_prefix("var ") {
            let name = rest.trim();
            if !is_name(name) || name == "t" {
                return Err(perr(ln, col + 4, format!("bad variable '{name}'")));
            }
            var = Some(Var::new(name));
        } else {
            parts.push((ln, col, text));
        }
    }
    let p = match parts.as_slice() {
        [] => return Err(perr(1, 1, "missing polynomial")),
        [(ln, col, text)] => expr_at(text, *ln, *col)?,
        _ => {
            let joined = parts.iter().map(|l| l.2).collect::<Vec<_>>().join(" ");
            expr_at(&joined, parts[0].0, 1)?
        }
    };
    Ok((p, var.unwrap_or_else(|| Var::new("A"))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, ratio};
    use crate::rational::transfer_gf;

    fn loc(e: GfError) -> (usize, usize) {
        match e {
            GfError::Parse(p) => (p.line, p.column),
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn series_roundtrip() {
        let v = vec![rat(1), ratio(-3, 4), rat(0)];
        assert_eq!(read_series(&write_series(&v)).unwrap(), v);
        assert_eq!(read_series("1\n# note\n\n2").unwrap(), vec![rat(1), rat(2)]);
        assert_eq!(loc(read_series("order 2\n1\n2\n1/x\n").unwrap_err()), (4, 1));
        assert!(read_series("order 3\n1\n").is_err());
        assert_eq!(read_series("start 2\n5, 7\n").unwrap(), vec![rat(0), rat(0), rat(5), rat(7)]);
        assert_eq!(loc(read_series("1, 2,  x\n").unwrap_err()), (1, 8));
    }

    #[test]
    fn digraph_json() {
        let src = r#"{"vertices": 2, "edges": [{"from": 1, "to": 1, "weight": "x"},
                      {"from": 1, "to": 2}], "start": 1, "targets": [2]}"#;
        let d = read_digraph(src).unwrap();
        let f = transfer_gf(&d.graph, 1, &[2]).unwrap();
        assert_eq!(f.to_string(), "t/(1 - t*x)");
        let e = read_digraph("{\"vertices\": 2,\n \"edges\": [}").unwrap_err();
        assert_eq!(loc(e).0, 2);
    }

    #[test]
    fn automaton_json() {
        let src = r#"{"states": 1, "alphabet": ["a", "b"],
            "transitions": [{"from": 1, "letter": "a", "to": 1}, {"from": 1, "letter": "b", "to": 1}],
            "initial": 1, "finals": [1]}"#;
        let a = read_automaton(src).unwrap();
        assert!(a.is_deterministic());
        assert!(a.accepts(&["a", "b", "b"]));
    }

    #[test]
    fn poset_and_halfspaces() {
        let p = read_poset("4\n1 3\n2 3\n2 4\n").unwrap();
        assert!(p.less(1, 3) && !p.less(1, 4));
        assert_eq!(loc(read_poset("3\n1 2\n3 2\n").unwrap_err()).0, 3);
        assert_eq!(loc(read_poset("3\n1 x\n").unwrap_err()), (2, 3));
        let h = read_halfspaces("2\n2 -1\n-1 2\n").unwrap();
        assert_eq!(h.dimension(), 2);
        assert_eq!(loc(read_halfspaces("2\n1 2 3\n").unwrap_err()), (2, 1));
    }

    #[test]
    fn grammar_file() {
        let g = read_grammar("start S\nletters a b\nS -> a b | a b S | a S b | a S b S\n").unwrap();
        assert_eq!(g.to_string(), crate::fixtures::dyck_grammar().to_string());
        let e = read_grammar("letters a\nS -> a |  | S S\n").unwrap_err();
        assert_eq!(loc(e), (2, 9));
        assert!(read_grammar("letters a\nS -> a | T\nT -> a\n").is_err_and(|e| loc(e).0 == 2));
    }

    #[test]
    fn system_file() {
        let s = read_system("A1 = t^2 + A1*A2\nA2 = 2*t*A1^3\n").unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(loc(read_system("A = t + A^2\nB = t * (\n").unwrap_err()).0, 2);
        assert!(read_system("A = A + t\n").is_err());
    }

    #[test]
    fn catalytic_and_equation_files() {
        let c = read_catalytic("# maps\nG(u) = 1 + t*u^2*G(u)^2 + t*u*DD\n").unwrap();
        assert_eq!(c.to_string(), crate::fixtures::general_maps_catalytic().to_string());
        let (p, v) = read_equation("var G\n-1 + 16*t + (1 - 18*t)*G + 27*t^2*G^2\n").unwrap();
        assert_eq!(v.name(), "G");
        assert_eq!(p, crate::fixtures::general_maps_equation());
        assert_eq!(loc(read_equation("var V\n  V + * t\n").unwrap_err()).0, 2);
    }
}
