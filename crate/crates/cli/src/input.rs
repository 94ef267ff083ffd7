//! Resolving `--file`, `--fixture` and inline expressions into engine inputs.

use std::fs;
use std::path::Path;

use gfkit_core::algebraic::{CatalyticEquation, Cfg, PolySystem};
use gfkit_core::arith::parse::{parse_frac, parse_poly};
use gfkit_core::arith::{MPoly, RatFun, Var};
use gfkit_core::fixtures::{fixture, fixture_names, Fixture};
use gfkit_core::io;
use gfkit_core::rational::{Nfa, WeightedDigraph};
use gfkit_core::{GfError, ParseError};

use crate::CliError;

/// Where an object comes from: a file on disk or a built-in fixture.
pub enum Source {
    Text(String),
    Builtin(String, Fixture),
}

fn unknown(name: &str) -> CliError {
    CliError::Usage(format!(
        "'{name}' is neither a readable file nor a fixture (fixtures: {})",
        fixture_names().join(", ")
    ))
}

fn builtin(name: &str) -> Result<Source, CliError> {
    fixture(name)
        .map(|f| Source::Builtin(name.to_string(), f))
        .ok_or_else(|| unknown(name))
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

/// `--file` falls back to a fixture of the same name when no such file exists.
pub fn resolve(file: Option<&str>, fixture_name: Option<&str>) -> Result<Source, CliError> {
    match (file, fixture_name) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --file or --fixture, not both".into())),
        (None, Some(name)) => builtin(name),
        (Some(path), None) if Path::new(path).exists() => Ok(Source::Text(read_text(path)?)),
        (Some(name), None) => builtin(name),
        (None, None) => Err(CliError::Usage("an input is required (--file or --fixture)".into())),
    }
}

fn mismatch(name: &str, wanted: &str) -> CliError {
    CliError::Usage(format!("fixture '{name}' is not {wanted}"))
}

/// A digraph with its default start vertex and targets, when the input names them.
pub type DigraphInput = (WeightedDigraph, Option<usize>, Option<Vec<usize>>);

pub fn digraph(src: Source) -> Result<DigraphInput, CliError> {
    match src {
        Source::Text(s) => {
            let d = io::read_digraph(&s)?;
            Ok((d.graph, d.start, d.targets))
        }
        Source::Builtin(_, Fixture::Digraph { graph, start, targets }) => Ok((graph, Some(start), Some(targets))),
        Source::Builtin(n, _) => Err(mismatch(&n, "a digraph")),
    }
}

pub fn automaton(src: Source) -> Result<Nfa, CliError> {
    match src {
        Source::Text(s) => Ok(io::read_automaton(&s)?),
        Source::Builtin(_, Fixture::Automaton(a)) => Ok(a),
        Source::Builtin(n, _) => Err(mismatch(&n, "an automaton")),
    }
}

pub fn grammar(src: Source) -> Result<Cfg, CliError> {
    match src {
        Source::Text(s) => Ok(io::read_grammar(&s)?),
        Source::Builtin(_, Fixture::Grammar(g)) => Ok(g),
        Source::Builtin(n, _) => Err(mismatch(&n, "a grammar")),
    }
}

pub fn system(src: Source) -> Result<PolySystem, CliError> {
    match src {
        Source::Text(s) => Ok(io::read_system(&s)?),
        Source::Builtin(_, Fixture::System(s)) => Ok(s),
        Source::Builtin(n, _) => Err(mismatch(&n, "a system")),
    }
}

pub fn catalytic(src: Source) -> Result<CatalyticEquation, CliError> {
    match src {
        Source::Text(s) => Ok(io::read_catalytic(&s)?),
        Source::Builtin(_, Fixture::Catalytic(c)) => Ok(c),
        Source::Builtin(n, _) => Err(mismatch(&n, "a catalytic equation")),
    }
}

/// An equation `P(t, a) = 0`; `var` overrides the variable named in the file.
pub fn equation(src: Source, var: Option<&str>) -> Result<(MPoly, Var), CliError> {
    let (p, v) = match src {
        Source::Text(s) => io::read_equation(&s)?,
        Source::Builtin(_, Fixture::Equation { poly, var }) => (poly, var),
        Source::Builtin(n, _) => return Err(mismatch(&n, "an equation")),
    };
    Ok((p, var.map(Var::new).unwrap_or(v)))
}

/// Either an equation (algebraic) or a rational function.
pub enum Analysable {
    Rational(RatFun),
    Equation(MPoly, Var),
}

pub fn analysable(expr: Option<&str>, src: Option<Source>, var: Option<&str>) -> Result<Analysable, CliError> {
    match (expr, src) {
        (Some(e), None) => Ok(Analysable::Rational(ratfun_expr(e)?)),
        (None, Some(Source::Builtin(_, Fixture::Rational(f)))) => Ok(Analysable::Rational(f)),
        (None, Some(s)) => {
            let (p, v) = equation(s, var)?;
            Ok(Analysable::Equation(p, v))
        }
        (Some(_), Some(_)) => Err(CliError::Usage("give an expression or an input, not both".into())),
        (None, None) => Err(CliError::Usage("an expression, --file or --fixture is required".into())),
    }
}

/// A rational function given inline or as a `Rational` fixture.
pub fn ratfun(expr: Option<&str>, fixture_name: Option<&str>) -> Result<RatFun, CliError> {
    match (expr, fixture_name) {
        (Some(e), None) => ratfun_expr(e),
        (None, Some(name)) => match builtin(name)? {
            Source::Builtin(_, Fixture::Rational(f)) => Ok(f),
            _ => Err(mismatch(name, "a rational function")),
        },
        (Some(_), Some(_)) => Err(CliError::Usage("give an expression or --fixture, not both".into())),
        (None, None) => Err(CliError::Usage("an expression or --fixture is required".into())),
    }
}

fn arg_error(what: &str, e: ParseError) -> CliError {
    CliError::Parse(format!("{what}: column {}: {}", e.column, e.message))
}

pub fn ratfun_expr(src: &str) -> Result<RatFun, CliError> {
    let f = parse_frac(src).map_err(|e| arg_error("expression", e))?;
    Ok(RatFun::from_mpolys(&f.num, &f.den)?)
}

pub fn poly_expr(src: &str) -> Result<MPoly, CliError> {
    parse_poly(src).map_err(|e| arg_error("polynomial", e))
}

pub fn frac_expr(src: &str) -> Result<(MPoly, MPoly), CliError> {
    let f = parse_frac(src).map_err(|e| arg_error("expression", e))?;
    Ok((f.num, f.den))
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> CliError {
        match e {
            GfError::Parse(p) => CliError::Parse(p.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}
