//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gfkit_core::algebraic::{algebraic_asymptotics, series_roots, verify_algebraic};
use gfkit_core::arith::matrix::det_bareiss;
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::{Coeff, MPoly, Rat, RatFun, UPoly, Var};
use gfkit_core::fixtures;
use gfkit_core::guessing::{guess_algebraic, guess_rational, Guess};
use gfkit_core::posets::{brute_p_partitions, p_partition_gf, NaturalPoset};
use gfkit_core::rational::digraph::viennot_data;
use gfkit_core::rational::{automaton_gf, soittola_check, transfer_gf, viennot_gf, WeightedDigraph};
use gfkit_corpus::oracles::column_convex_counts;
use gfkit_corpus::properties::property_report;
use gfkit_corpus::{run_suite, Scale};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, time limit in seconds, and the check itself.
type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(s: &str) -> MPoly {
    parse_poly(s).unwrap()
}

fn ratfun(num: &str, den: &str) -> RatFun {
    RatFun::from_mpolys(&poly(num), &poly(den)).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&k| Rat::from_integer(k.into())).collect()
}

fn suite(name: &str) -> Outcome {
    let rep = run_suite(name, Scale::Default).map_err(|e| e.to_string())?;
    if rep.passed() {
        Ok(format!("{} checks", rep.checks.len()))
    } else {
        let bad: Vec<String> = rep.failures().map(|c| c.description.clone()).collect();
        Err(format!("failed: {}", bad.join("; ")))
    }
}

fn c1_ccpoly() -> Outcome {
    let f = automaton_gf(&fixtures::ccpoly_automaton()).map_err(|e| e.to_string())?;
    let expect = ratfun("t*(1 - t)^3", "1 - 5*t + 7*t^2 - 4*t^3");
    ensure(f.equals(&expect), || format!("got {f}"))?;
    let coeffs = f.expand_rat(10).map_err(|e| e.to_string())?.into_coeffs();
    let listed = ints(&[0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727]);
    ensure(coeffs == listed, || format!("coefficients {coeffs:?}"))?;
    let oracle: Vec<Rat> = column_convex_counts(10).into_iter().map(|k| Rat::from_integer(k.into())).collect();
    ensure(coeffs == oracle, || format!("oracle {oracle:?}"))?;
    Ok(format!("{f}"))
}

fn random_digraph(rng: &mut ChaCha8Rng) -> WeightedDigraph {
    let p = rng.gen_range(1..=6);
    let mut g = WeightedDigraph::new(p);
    for a in 1..=p {
        for b in 1..=p {
            if rng.gen_bool(0.35) {
                g.add_edge(a, b, MPoly::int(rng.gen_range(1..=3))).unwrap();
            }
        }
    }
    g
}

fn c2_walks() -> Outcome {
    let g = fixtures::xy_digraph();
    let num = "t*(1 - t)^2*(1 + t - x*t)";
    let den = "1 - (3 + x)*t + (1 + 3*x)*t^2 - 2*x*t^3 + (x - y)*t^4";
    let expect = ratfun(num, den);
    let a = transfer_gf(&g, 1, &[2, 3]).map_err(|e| e.to_string())?;
    let b = viennot_gf(&g, 1, &[2, 3]).map_err(|e| e.to_string())?;
    ensure(a.equals(&expect), || format!("transfer gave {a}"))?;
    ensure(b.equals(&expect), || format!("viennot gave {b}"))?;
    let data = viennot_data(&g, 1, &[2, 3]).map_err(|e| e.to_string())?;
    ensure(data.denominator == poly(den), || format!("cycle sum {}", data.denominator))?;
    ensure(det_bareiss(&g.kernel_matrix()) == poly(den), || "det(I - tX) differs".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for case in 0..100 {
        let g = random_digraph(&mut rng);
        let p = g.vertex_count();
        let i = rng.gen_range(1..=p);
        let targets: Vec<usize> = (1..=p).filter(|_| rng.gen_bool(0.5)).collect();
        let a = transfer_gf(&g, i, &targets).map_err(|e| e.to_string())?;
        let b = viennot_gf(&g, i, &targets).map_err(|e| e.to_string())?;
        ensure(a.equals(&b), || format!("random case {case}: {a} vs {b}"))?;
    }
    Ok("xy-digraph exact, 100 random digraphs agree".into())
}

fn c3_poset() -> Outcome {
    let p = NaturalPoset::new(4, &[(1, 3), (2, 3), (2, 4)]).map_err(|e| e.to_string())?;
    let f = p_partition_gf(&p).map_err(|e| e.to_string())?;
    let expect = ratfun("1 + t + t^2 + t^3 + t^4", "(1 - t)*(1 - t^2)*(1 - t^3)*(1 - t^4)");
    ensure(f.equals(&expect), || format!("got {f}"))?;
    let brute = brute_p_partitions(&p, 20).map_err(|e| e.to_string())?;
    ensure(f.expand_rat(20).map_err(|e| e.to_string())? == brute, || "brute count differs".into())?;
    Ok(format!("{f}"))
}

fn eval_f64(p: &UPoly<Rat>, x: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut scale = 0.0;
    for c in p.coeffs().iter().rev() {
        let c = c.to_f64().unwrap();
        v = v * x + c;
        scale = scale * x.abs() + c.abs();
    }
    (v, scale)
}

// f(v) = v(1 - 2v)(1 - 3v + 3v^2), so P = f(V) - t.
fn f(v: f64) -> f64 {
    v * (1.0 - 2.0 * v) * (1.0 - 3.0 * v + 3.0 * v * v)
}

fn df(v: f64) -> f64 {
    1.0 - 10.0 * v + 27.0 * v * v - 24.0 * v * v * v
}

// The discriminant of f(V) - t in V vanishes exactly at the critical values of f.
fn smallest_positive_critical_value() -> Option<f64> {
    let steps = 40_000;
    let mut best: Option<f64> = None;
    for k in 0..steps {
        let (mut a, mut b) = (-2.0 + 4.0 * k as f64 / steps as f64, -2.0 + 4.0 * (k + 1) as f64 / steps as f64);
        if df(a).signum() == df(b).signum() {
            continue;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if df(a).signum() == df(m).signum() {
                a = m;
            } else {
                b = m;
            }
        }
        let c = f(0.5 * (a + b));
        if c > 0.0 && best.is_none_or(|x| c < x) {
            best = Some(c);
        }
    }
    best
}

fn c11_asymptotics() -> Outcome {
    let v = Var::new("V");
    let p = fixtures::parametrization_equation();
    let rep = series_roots(&p, &v, 500).map_err(|e| e.to_string())?;
    let branch = rep
        .branches
        .iter()
        .find(|b| b.constant_term.is_zero())
        .ok_or("no branch through 0")?;
    let est = algebraic_asymptotics(&p, &v, branch, 500).map_err(|e| e.to_string())?;
    let width = est.rho_width();
    ensure(width < 1e-8, || format!("enclosure width {width:e}"))?;
    let crit = smallest_positive_critical_value().ok_or("f has no positive critical value")?;
    let lo = est.rho_lo.to_f64().unwrap();
    let hi = est.rho_hi.to_f64().unwrap();
    ensure(lo - 1e-12 <= crit && crit <= hi + 1e-12, || {
        format!("critical value {crit} outside [{lo}, {hi}]")
    })?;
    let (r, scale) = eval_f64(&est.rho_poly, est.rho());
    let residual = r.abs() / scale;
    ensure(residual < 1e-12, || format!("residual {residual:e}"))?;
    ensure((-1.65..=-1.35).contains(&est.d), || format!("d = {}", est.d))?;
    Ok(format!("rho = {:.12}, d = {:.4}, residual {residual:.1e}", est.rho(), est.d))
}

fn c12_guessing() -> Outcome {
    let values = ints(&[1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727]);
    // The listed values start at t^1.
    let mut coeffs = vec![Rat::zero()];
    coeffs.extend(values);
    let g = guess_rational(&coeffs, 4, 4).map_err(|e| e.to_string())?.ok_or("no rational guess")?;
    let Guess::Rational(r) = &g.guess else { return Err("not rational".into()) };
    let expect = ratfun("t*(1 - t)^3", "1 - 5*t + 7*t^2 - 4*t^3");
    ensure(r.equals(&expect), || format!("guessed {r}"))?;

    let v = Var::new("V");
    let p = fixtures::parametrization_equation();
    let rep = series_roots(&p, &v, 11).map_err(|e| e.to_string())?;
    let branch = rep.branches.iter().find(|b| b.constant_term.is_zero()).ok_or("no branch")?;
    let window = &branch.series.coeffs()[..12];
    let h = guess_algebraic(window, 1, 4, &v).map_err(|e| e.to_string())?.ok_or("no algebraic guess")?;
    let Guess::Algebraic(q) = &h.guess else { return Err("not algebraic".into()) };
    let cleared = poly("V*(1 - 2*V)*(1 - 3*V + 3*V^2) - t");
    let same = match q.div_exact(&cleared) {
        Some(c) => c.as_rat().is_some_and(|c| !c.is_zero()),
        None => false,
    };
    ensure(same, || format!("guessed {q} = 0"))?;
    // The recovered equation must also hold far beyond the window.
    let long = series_roots(&p, &v, 60).map_err(|e| e.to_string())?;
    let long_branch = long.branches.iter().find(|b| b.constant_term.is_zero()).ok_or("no branch")?;
    ensure(verify_algebraic(&long_branch.series, q, &v).map_err(|e| e.to_string())? == 60, || {
        "guess fails beyond the window".into()
    })?;
    Ok(format!("{r}; {q} = 0"))
}

fn c13_soittola() -> Outcome {
    let f = fixtures::cos_squared_gf();
    let rep = soittola_check(&f, 1, 1e-6).map_err(|e| e.to_string())?;
    let n = rep.count(1, 0).ok_or("no p = 1 section")?;
    ensure(n == 3, || format!("{n} dominant poles"))?;
    // Independent oracle: poles are 1/25 and 1/(25 e^{+-i alpha}) with cos alpha = 3/5.
    let sec = &rep.sections[0];
    let m = sec.min_modulus.ok_or("no modulus")?;
    ensure((m - 1.0 / 25.0).abs() < 1e-9, || format!("min modulus {m}"))?;
    // And the coefficients really are 25^n cos^2(n alpha) = (25^n + Re((-7+24i)^n)) / 2, since (3+4i)^2 = -7+24i.
    let series = f.expand_rat(30).map_err(|e| e.to_string())?;
    let (mut re, mut im) = (num_bigint::BigInt::from(1), num_bigint::BigInt::from(0));
    let mut pow25 = num_bigint::BigInt::from(1);
    for k in 0..=30 {
        let expect = Rat::new(&pow25 + &re, 2.into());
        ensure(*series.coeff(k) == expect, || format!("coefficient {k}"))?;
        let (r2, i2) = (&im * -24 - &re * 7, &re * 24 - &im * 7);
        re = r2;
        im = i2;
        pow25 *= 25;
    }
    Ok("3 dominant poles of modulus 1/25".into())
}

fn c14_properties() -> Outcome {
    let rep = property_report();
    if rep.passed() {
        Ok(format!("{} checks", rep.checks.len()))
    } else {
        let bad: Vec<String> = rep.failures().map(|c| c.description.clone()).collect();
        Err(format!("failed: {}", bad.join("; ")))
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("automaton to GF (ccpoly)", 1, Box::new(c1_ccpoly)),
        ("transfer matrix = cycle configurations", 10, Box::new(c2_walks)),
        ("P-partitions of the example poset", 5, Box::new(c3_poset)),
        ("lecture hall partitions", 30, Box::new(|| suite("lecture_hall"))),
        ("planar maps", 30, Box::new(|| suite("planar_maps"))),
        ("directed animals", 60, Box::new(|| suite("directed_animals"))),
        ("Dyck path area", 10, Box::new(|| suite("dyck_area"))),
        ("Kreweras walks", 60, Box::new(|| suite("kreweras"))),
        ("slit plane walks", 60, Box::new(|| suite("slit_plane"))),
        ("embedded trees", 60, Box::new(|| suite("embedded_trees"))),
        ("asymptotics of V", 10, Box::new(c11_asymptotics)),
        ("guessing", 5, Box::new(c12_guessing)),
        ("Soittola evidence (cos^2)", 5, Box::new(c13_soittola)),
        ("property suites", 120, Box::new(c14_properties)),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panic: {msg}"))
            });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit} s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
