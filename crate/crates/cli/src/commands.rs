use std::time::Instant;

use gfkit_core::algebraic::{
    algebraic_asymptotics, brute_language_count, canonical_solution, grammar_to_system, lagrange_coeff,
    laurent_slice, normalize_system, series_roots, solve_catalytic, verify_algebraic, BiRatFun, NormalForm,
    SliceMode,
};
use gfkit_core::arith::parse::parse_constant;
use gfkit_core::arith::resultant::{discriminant, resultant};
use gfkit_core::arith::{Coeff, MPoly, RSeries, Rat, RatFun, TSeries, Var};
use gfkit_core::fixtures::{fixture, fixture_names, Fixture};
use gfkit_core::guessing::{guess_algebraic, guess_rational, GuessResult};
use gfkit_core::io;
use gfkit_core::posets::{
    brute_p_partitions, cone_points_bruteforce, linear_extensions, p_partition_gf, sigma_data, NaturalPoset,
};
use gfkit_core::rational::{
    automaton_gf, determinize, rational_asymptotics, section, soittola_check, transfer_gf, viennot_gf,
    AsymptoticEstimate, Nfa,
};
use gfkit_core::GfError;
use gfkit_corpus::{list_suites, run_all, run_suite, Scale, SuiteReport};
use num_traits::Zero;

use crate::doc::Doc;
use crate::input::{self, Analysable};
use crate::{Cli, CliError, Command, CorpusAction, GuessKind, Input, Method, NormalMode, SeriesOp};

const DEFAULT_ORDER: usize = 10;
const DEFAULT_FIT: usize = 500;

type Out = Result<Doc, CliError>;

fn src(i: &Input) -> Result<input::Source, CliError> {
    input::resolve(i.file.as_deref(), i.fixture.as_deref())
}

fn coeff_list<C: Coeff>(s: &TSeries<C>) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn execute(cli: Cli) -> Out {
    let order = cli.order;
    let n = order.unwrap_or(DEFAULT_ORDER);
    match cli.command {
        Command::Walks {
            input,
            start,
            targets,
            method,
            coeffs,
        } => walks(&input, start, targets, method, coeffs),
        Command::Automaton {
            input,
            coeffs,
            determinize,
        } => automaton(&input, coeffs, determinize),
        Command::Grammar { input, check } => grammar(&input, n, check),
        Command::System { input, normalize } => system(&input, n, normalize),
        Command::Catalytic { input } => catalytic(&input, n),
        Command::Roots { input, var } => roots(&input, var.as_deref(), n),
        Command::Verify { input, coeffs, var } => verify(&input, &coeffs, var.as_deref()),
        Command::Guess {
            kind,
            coeffs,
            max_deg,
            var,
        } => guess(kind, &coeffs, &max_deg, &var),
        Command::Asymptotics {
            expr,
            input,
            var,
            branch,
        } => asymptotics(expr.as_deref(), &input, var.as_deref(), branch.as_deref(), order),
        Command::Soittola {
            expr,
            fixture,
            pmax,
            precision,
        } => soittola(expr.as_deref(), fixture.as_deref(), pmax, precision),
        Command::Section { expr, fixture, r, p } => {
            let f = input::ratfun(expr.as_deref(), fixture.as_deref())?;
            let s = section(&f, r, p)?;
            let mut d = Doc::new();
            d.text("input", &f).text("section", &s).list("coefficients", coeff_list(&s.expand_rat(n)?));
            Ok(d)
        }
        Command::Expand { expr, fixture } => {
            let f = input::ratfun(expr.as_deref(), fixture.as_deref())?;
            let mut d = Doc::new();
            d.text("input", &f).list("coefficients", coeff_list(&f.expand(n)?));
            Ok(d)
        }
        Command::Series { op, a, b } => series(op, &a, b.as_deref(), n),
        Command::Slice { expr, k } => slice(&expr, Some(k), n),
        Command::Diagonal { expr } => slice(&expr, None, n),
        Command::Poset {
            file,
            size,
            relations,
            check,
        } => poset(file.as_deref(), size, relations.as_deref(), check, n),
        Command::Cone { file } => {
            let h = io::read_halfspaces(&input::read_text(&file)?)?;
            let s = cone_points_bruteforce(&h, n)?;
            let mut d = Doc::new();
            d.text("dimension", h.dimension()).list("coefficients", coeff_list(&s));
            Ok(d)
        }
        Command::Lagrange { phi, psi, n: k, var } => lagrange(&phi, psi.as_deref(), k, &var),
        Command::Resultant { p, q, var } => {
            let r = resultant(&input::poly_expr(&p)?, &input::poly_expr(&q)?, &Var::new(&var))?;
            let mut d = Doc::new();
            d.text("resultant", r);
            Ok(d)
        }
        Command::Discriminant { p, var } => {
            let r = discriminant(&input::poly_expr(&p)?, &Var::new(&var))?;
            let mut d = Doc::new();
            d.text("discriminant", r);
            Ok(d)
        }
        Command::Corpus { action } => corpus(action),
        Command::Fixtures => {
            let mut d = Doc::new();
            let items = fixture_names()
                .into_iter()
                .map(|name| {
                    let kind = match fixture(name).expect("listed fixture") {
                        Fixture::Digraph { .. } => "digraph",
                        Fixture::Automaton(_) => "automaton",
                        Fixture::Grammar(_) => "grammar",
                        Fixture::Equation { .. } => "equation",
                        Fixture::System(_) => "system",
                        Fixture::Catalytic(_) => "catalytic",
                        Fixture::Rational(_) => "rational",
                    };
                    let mut e = Doc::new();
                    e.text("name", name).text("kind", kind);
                    e
                })
                .collect();
            d.items("fixtures", items);
            Ok(d)
        }
    }
}

fn walks(input: &Input, start: Option<usize>, targets: Option<Vec<usize>>, method: Method, coeffs: Option<usize>) -> Out {
    let (g, s0, t0) = input::digraph(src(input)?)?;
    let i = start
        .or(s0)
        .ok_or_else(|| CliError::Usage("no start vertex (use --start)".into()))?;
    let targets = targets
        .or(t0)
        .ok_or_else(|| CliError::Usage("no target vertices (use --targets)".into()))?;
    let f = match method {
        Method::Transfer => transfer_gf(&g, i, &targets)?,
        Method::Viennot => viennot_gf(&g, i, &targets)?,
        Method::Both => {
            let a = transfer_gf(&g, i, &targets)?;
            let b = viennot_gf(&g, i, &targets)?;
            if !a.equals(&b) {
                return Err(CliError::Compute(format!("methods disagree: {a} vs {b}")));
            }
            a
        }
    };
    let mut d = Doc::new();
    d.text("vertices", g.vertex_count())
        .text("start", i)
        .list("targets", &targets)
        .text("gf", &f);
    if method == Method::Both {
        d.text("methods", "transfer matrix and cycle configurations agree");
    }
    if let Some(k) = coeffs {
        d.list("coefficients", first_coeffs(&f, k)?);
    }
    Ok(d)
}

fn first_coeffs(f: &RatFun, k: usize) -> Result<Vec<String>, CliError> {
    if k == 0 {
        return Ok(Vec::new());
    }
    Ok(coeff_list(&f.expand(k - 1)?))
}

fn describe_automaton(a: &Nfa) -> Doc {
    let mut d = Doc::new();
    d.text("states", a.state_count())
        .text("initial", a.initial())
        .list("finals", a.finals())
        .list("transitions", a.transitions().map(|(p, l, q)| format!("{p}-{l}->{q}")));
    d
}

fn automaton(input: &Input, coeffs: Option<usize>, det: bool) -> Out {
    let a = input::automaton(src(input)?)?;
    let f = automaton_gf(&a)?;
    let mut d = Doc::new();
    d.text("states", a.state_count())
        .text("deterministic", if a.is_deterministic() { "yes" } else { "no" })
        .text("gf", &f);
    if det {
        d.section("determinized", describe_automaton(&determinize(&a)));
    }
    if let Some(k) = coeffs {
        d.list("coefficients", first_coeffs(&f, k)?);
    }
    Ok(d)
}

fn solutions(unknowns: &[Var], sols: &[TSeries]) -> Vec<Doc> {
    unknowns
        .iter()
        .zip(sols)
        .map(|(x, s)| {
            let mut e = Doc::new();
            e.text("unknown", x).list("coefficients", coeff_list(s));
            e
        })
        .collect()
}

fn grammar(input: &Input, n: usize, check: Option<usize>) -> Out {
    let g = input::grammar(src(input)?)?;
    let s = grammar_to_system(&g)?;
    let sols = canonical_solution(&s, n)?;
    let mut d = Doc::new();
    d.text("grammar", &g).text("system", &s).items("solution", solutions(s.unknowns(), &sols));
    if let Some(m) = check {
        let words = brute_language_count(&g, m)?;
        let derivations = canonical_solution(&s, m)?;
        let agree = derivations[0].coeffs().iter().zip(words.coeffs()).all(|(a, b)| a.as_rat().as_ref() == Some(b));
        d.list("words", coeff_list(&words))
            .text("unambiguous up to length", if agree { format!("{m}: yes") } else { format!("{m}: no") });
    }
    Ok(d)
}

fn system(input: &Input, n: usize, normalize: Option<NormalMode>) -> Out {
    let s = input::system(src(input)?)?;
    let sols = canonical_solution(&s, n)?;
    let mut d = Doc::new();
    d.text("system", &s).items("solution", solutions(s.unknowns(), &sols));
    if let Some(mode) = normalize {
        let mode = match mode {
            NormalMode::Quadratic => NormalForm::Quadratic,
            NormalMode::LeadingT => NormalForm::LeadingT,
        };
        let q = normalize_system(&s, mode)?;
        let qs = canonical_solution(&q, n)?;
        if qs[0] != sols[0] {
            return Err(CliError::Compute("normalized system changed the first solution".into()));
        }
        d.text("normalized", &q).text("first unknown", "same solution");
    }
    Ok(d)
}

fn catalytic(input: &Input, n: usize) -> Out {
    let eq = input::catalytic(src(input)?)?;
    let sol = solve_catalytic(&eq, n)?;
    let mut d = Doc::new();
    d.text("equation", &eq)
        .text("where", "G = G(u), G1 = G(1), DD = (u G(u) - G(1))/(u - 1)")
        .list("G(1)", coeff_list(&sol.at_one))
        .list("G(u)", coeff_list(&sol.full));
    Ok(d)
}

fn roots(input: &Input, var: Option<&str>, n: usize) -> Out {
    let (p, v) = input::equation(src(input)?, var)?;
    let rep = series_roots(&p, &v, n)?;
    let branches = rep
        .branches
        .iter()
        .map(|b| {
            let mut e = Doc::new();
            e.text("constant term", &b.constant_term)
                .text("verified to order", b.residual_order)
                .list("coefficients", coeff_list(&b.series));
            e
        })
        .collect();
    let mut d = Doc::new();
    d.text("equation", format!("{p} = 0"))
        .text("unknown", &v)
        .items("branches", branches)
        .list("ramified", rep.ramified.iter().map(|(r, m)| format!("{r} (multiplicity {m})")))
        .text("irrational constant terms", rep.irrational_degree)
        .text("branches with a pole at 0", rep.singular_degree);
    Ok(d)
}

fn read_coeffs(path: &str) -> Result<Vec<Rat>, CliError> {
    Ok(io::read_series(&input::read_text(path)?)?)
}

fn verify(input: &Input, coeffs: &str, var: Option<&str>) -> Out {
    let (p, v) = input::equation(src(input)?, var)?;
    let a = RSeries::from_coeffs(read_coeffs(coeffs)?);
    let m = verify_algebraic(&a, &p, &v)?;
    let mut d = Doc::new();
    d.text("equation", format!("{p} = 0")).text("order", a.order());
    if m < 0 {
        d.text("verified", "no: the constant term is not a root");
    } else {
        d.text("verified to order", m);
    }
    Ok(d)
}

fn guess_doc(g: &GuessResult) -> Doc {
    let mut d = Doc::new();
    d.text("guess", g).text("used", g.used).text("validated", g.validated);
    d
}

fn guess(kind: GuessKind, path: &str, max_deg: &[usize], var: &str) -> Out {
    let coeffs = read_coeffs(path)?;
    let (dmax, emax) = match max_deg {
        [a, b] => (*a, *b),
        _ => (4, 4),
    };
    match kind {
        GuessKind::Rational => {
            let g = guess_rational(&coeffs, dmax, emax)?
                .ok_or_else(|| GfError::NoCandidate(format!("no rational function with degrees up to ({dmax}, {emax})")))?;
            Ok(guess_doc(&g))
        }
        GuessKind::Algebraic => {
            let v = Var::new(var);
            // Smallest ansatz first, skipping bidegrees the data cannot determine.
            let mut grid: Vec<(usize, usize)> = (0..=dmax).flat_map(|d| (1..=emax).map(move |e| (d, e))).collect();
            grid.sort_by_key(|&(d, e)| ((d + 1) * (e + 1), e, d));
            for (d, e) in grid {
                match guess_algebraic(&coeffs, d, e, &v) {
                    Ok(Some(g)) => {
                        let mut doc = guess_doc(&g);
                        doc.text("bidegree", format!("({d}, {e})"));
                        return Ok(doc);
                    }
                    Ok(None) | Err(GfError::InsufficientData(_)) => continue,
                    Err(other) => return Err(other.into()),
                }
            }
            Err(GfError::NoCandidate(format!("no equation with bidegree up to ({dmax}, {emax})")).into())
        }
    }
}

fn estimate_doc(e: &AsymptoticEstimate) -> Doc {
    let mut d = Doc::new();
    d.text("rho", format!("{:.15}", e.rho()))
        .text("rho enclosure", format!("[{:.17e}, {:.17e}]", to_f64(&e.rho_lo), to_f64(&e.rho_hi)))
        .text("rho is a root of", &e.rho_poly)
        .text("d", format!("{:.6}", e.d))
        .text("d interval", format!("[{:.6}, {:.6}]", e.d_lo, e.d_hi));
    if let Some((lo, hi)) = e.kappa {
        d.text("kappa", format!("[{lo:.12e}, {hi:.12e}]"));
    }
    d.text("alternating", if e.alternating { "yes" } else { "no" });
    d
}

fn to_f64(r: &Rat) -> f64 {
    gfkit_core::arith::rat::rat_to_f64(r)
}

fn asymptotics(expr: Option<&str>, input: &Input, var: Option<&str>, branch: Option<&str>, order: Option<usize>) -> Out {
    let source = if input.file.is_some() || input.fixture.is_some() {
        Some(src(input)?)
    } else {
        None
    };
    match input::analysable(expr, source, var)? {
        Analysable::Rational(f) => {
            let mut d = Doc::new();
            d.text("gf", &f);
            let e = estimate_doc(&rational_asymptotics(&f)?);
            d.section("estimate", e);
            Ok(d)
        }
        Analysable::Equation(p, v) => {
            let n = order.unwrap_or(DEFAULT_FIT);
            let rep = series_roots(&p, &v, n)?;
            let c0 = match branch {
                Some(b) => parse_constant(b).map_err(|e| CliError::Parse(format!("--branch: {}", e.message)))?,
                None => Rat::zero(),
            };
            let b = rep
                .branches
                .iter()
                .find(|b| b.constant_term == c0)
                .ok_or_else(|| CliError::Compute(format!("no series branch with constant term {c0}")))?;
            let start = Instant::now();
            let e = algebraic_asymptotics(&p, &v, b, n)?;
            eprintln!("asymptotics: fitted {n} coefficients in {:.2?}", start.elapsed());
            let mut d = Doc::new();
            d.text("equation", format!("{p} = 0"))
                .text("branch", format!("{v}(0) = {c0}"))
                .text("coefficients used", n + 1)
                .section("estimate", estimate_doc(&e));
            Ok(d)
        }
    }
}

fn soittola(expr: Option<&str>, fixture: Option<&str>, pmax: usize, precision: f64) -> Out {
    let f = input::ratfun(expr, fixture)?;
    let rep = soittola_check(&f, pmax, precision)?;
    let sections = rep
        .sections
        .iter()
        .map(|s| {
            let mut e = Doc::new();
            e.text("p", s.p).text("r", s.r).text("section", &s.section).text("dominant poles", s.dominant);
            if let Some(m) = s.min_modulus {
                e.text("modulus", format!("{m:.12e}"));
            }
            e
        })
        .collect();
    let mut d = Doc::new();
    d.text("gf", &f).text("precision", format!("{precision:e}")).items("sections", sections);
    Ok(d)
}

fn series(op: SeriesOp, a: &str, b: Option<&str>, n: usize) -> Out {
    let sa = input::ratfun_expr(a)?.expand(n)?;
    let needs_b = matches!(op, SeriesOp::Add | SeriesOp::Sub | SeriesOp::Mul | SeriesOp::Compose);
    let sb = match (needs_b, b) {
        (true, Some(b)) => Some(input::ratfun_expr(b)?.expand(n)?),
        (true, None) => return Err(CliError::Usage("this operation takes two series".into())),
        (false, Some(_)) => return Err(CliError::Usage("this operation takes one series".into())),
        (false, None) => None,
    };
    let r = match (op, sb) {
        (SeriesOp::Add, Some(b)) => sa.add(&b),
        (SeriesOp::Sub, Some(b)) => sa.sub(&b),
        (SeriesOp::Mul, Some(b)) => sa.mul(&b),
        (SeriesOp::Compose, Some(b)) => sa.compose(&b)?,
        (SeriesOp::Invert, _) => sa.invert()?,
        (SeriesOp::Sqrt, _) => sa.sqrt()?,
        (SeriesOp::Derive, _) => sa.derive()?,
        _ => unreachable!("arity checked above"),
    };
    let mut d = Doc::new();
    d.text("order", r.order()).list("coefficients", coeff_list(&r));
    Ok(d)
}

fn slice(expr: &str, k: Option<i32>, n: usize) -> Out {
    let (num, den) = input::frac_expr(expr)?;
    let f = BiRatFun::new(num, den)?;
    let (mode, k) = match k {
        Some(k) => (SliceMode::Slice, k),
        None => (SliceMode::Diagonal, 0),
    };
    let s = laurent_slice(&f, k, n, mode)?;
    let mut d = Doc::new();
    d.text("input", &f);
    if mode == SliceMode::Slice {
        d.text("k", k);
    }
    d.list("coefficients", coeff_list(&s));
    Ok(d)
}

fn parse_relations(size: usize, rel: &str) -> Result<NaturalPoset, CliError> {
    let mut pairs = Vec::new();
    for part in rel.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = part
            .split_once('<')
            .ok_or_else(|| CliError::Parse(format!("--relations: expected i<j, found '{part}'")))?;
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("--relations: '{s}' is not an element")))
        };
        pairs.push((num(a)?, num(b)?));
    }
    Ok(NaturalPoset::new(size, &pairs)?)
}

fn poset(file: Option<&str>, size: Option<usize>, relations: Option<&str>, check: Option<usize>, n: usize) -> Out {
    let p = match (file, size) {
        (Some(f), None) if relations.is_none() => io::read_poset(&input::read_text(f)?)?,
        (None, Some(k)) => parse_relations(k, relations.unwrap_or(""))?,
        _ => return Err(CliError::Usage("give either --file, or --size with optional --relations".into())),
    };
    let exts = linear_extensions(&p)?;
    let mut items = Vec::new();
    for sigma in &exts {
        let (e, lambda) = sigma_data(sigma)?;
        let mut it = Doc::new();
        it.list("sigma", sigma).text("e", e).list("lambda0", lambda);
        items.push(it);
    }
    let f = p_partition_gf(&p)?;
    let mut d = Doc::new();
    d.text("size", p.size())
        .items("linear extensions", items)
        .text("gf", &f)
        .list("coefficients", coeff_list(&f.expand_rat(n)?));
    if let Some(m) = check {
        let brute = brute_p_partitions(&p, m)?;
        if brute != f.expand_rat(m)? {
            return Err(CliError::Compute("enumeration disagrees with the generating function".into()));
        }
        d.text("enumeration", format!("agrees up to weight {m}"));
    }
    Ok(d)
}

fn in_t(src: &str, var: &str, n: usize) -> Result<RSeries, CliError> {
    let (num, den) = input::frac_expr(src)?;
    let v = Var::new(var);
    let t = MPoly::var("t");
    let sub = |p: &MPoly| {
        p.substitute(&v, &t)
            .ok_or_else(|| CliError::Usage(format!("negative powers of {var} in '{src}'")))
    };
    let f = RatFun::from_mpolys(&sub(&num)?, &sub(&den)?)?;
    Ok(f.expand_rat(n)?)
}

fn lagrange(phi: &str, psi: Option<&str>, n: usize, var: &str) -> Out {
    let phi_s = in_t(phi, var, n)?;
    let psi_s = in_t(psi.unwrap_or(var), var, n)?;
    let c = lagrange_coeff(&phi_s, &psi_s, n)?;
    let mut d = Doc::new();
    d.text("n", n).text("coefficient", c);
    Ok(d)
}

fn scale_of(s: &str) -> Result<Scale, CliError> {
    s.parse().map_err(CliError::Usage)
}

fn report_doc(r: &SuiteReport) -> Doc {
    let checks = r
        .checks
        .iter()
        .map(|c| {
            let mut e = Doc::new();
            e.text("description", &c.description)
                .text("expected", &c.expected)
                .text("computed", &c.computed)
                .text("pass", c.pass);
            e
        })
        .collect();
    let mut d = Doc::new();
    d.text("suite", &r.suite)
        .text("scale", r.scale)
        .text("status", if r.passed() { "PASS" } else { "FAIL" })
        .items("checks", checks);
    d
}

fn corpus(action: CorpusAction) -> Out {
    match action {
        CorpusAction::List => {
            let mut d = Doc::new();
            d.list("suites", list_suites());
            Ok(d)
        }
        CorpusAction::Run { names, all, scale } => {
            let scale = scale_of(&scale)?;
            let reports: Vec<SuiteReport> = match (all, names.is_empty()) {
                (true, true) => run_all(scale),
                (false, false) => {
                    let mut v = Vec::new();
                    for name in &names {
                        v.push(run_suite(name, scale).map_err(|e| CliError::Usage(e.to_string()))?);
                    }
                    v
                }
                (true, false) => return Err(CliError::Usage("give suite names or --all, not both".into())),
                (false, true) => return Err(CliError::Usage("name a suite or pass --all".into())),
            };
            for r in &reports {
                eprintln!("{}: {} ms", r.suite, r.elapsed_ms);
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut d = Doc::new();
            d.items("reports", reports.iter().map(report_doc).collect())
                .text("passed", format!("{} of {}", reports.len() - failed, reports.len()));
            if failed > 0 {
                Err(CliError::SuiteFailure(d))
            } else {
                Ok(d)
            }
        }
    }
}
