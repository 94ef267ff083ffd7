use gfkit_core::algebraic::{canonical_solution_rat, series_roots, solve_catalytic, PolySystem};
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::{RSeries, Rat, Var};
use gfkit_core::fixtures;
use num_bigint::BigInt;

use super::ints;
use crate::series::binom;
use crate::{Recorder, Scale};

fn r(n: u64) -> Rat {
    Rat::from_integer(n.into())
}

/// `2 * 3^n * C(2n, n) / ((n + 1)(n + 2))`.
fn general_maps(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(2) * BigInt::from(3).pow(n as u32)) * binom(2 * n, n) / (r(n + 1) * r(n + 2))
}

/// The branch with constant term 1, which must be the only power-series branch.
fn unique_branch(rec: &mut Recorder, label: &str, p: &gfkit_core::arith::MPoly, var: &str, n: usize) -> Option<RSeries> {
    let rep = rec.ok(label, series_roots(p, &Var::new(var), n))?;
    let consts: Vec<String> = rep.branches.iter().map(|b| b.constant_term.to_string()).collect();
    rec.eq(format!("{label}: power-series branches"), vec!["1".to_string()], consts);
    rep.branches.into_iter().find(|b| b.constant_term == r(1)).map(|b| b.series)
}

pub fn planar_maps(scale: Scale, rec: &mut Recorder) {
    let n = scale.pick(15, 30);
    let nc = scale.pick(10, 15);
    let expect: Vec<Rat> = (0..=n as u64).map(general_maps).collect();

    let branch = unique_branch(rec, "quadratic equation", &fixtures::general_maps_equation(), "G", n);
    if let Some(g) = &branch {
        rec.eq(format!("algebraic branch = closed form, n <= {n}"), expect.clone(), ints(g));
    }

    if let Some(sol) = rec.ok("catalytic iteration", solve_catalytic(&fixtures::general_maps_catalytic(), nc)) {
        let at_one = sol.at_one.to_rat().map(|s| ints(&s));
        rec.eq(format!("G(1, t) from the catalytic equation, n <= {nc}"), Some(expect[..=nc].to_vec()), at_one);
    }

    // B = 3t(1 + B)^2, then (1 + B) - t(1 + B)^3.
    let sys = PolySystem::new(vec![Var::new("B")], vec![parse_poly("3*t*(1 + B)^2").unwrap()]);
    let Some(sys) = rec.ok("B system", sys) else { return };
    let Some(b) = rec.ok("B series", canonical_solution_rat(&sys, n)) else { return };
    let one_b = RSeries::one(n).add(&b[0]);
    let g = one_b.sub(&one_b.pow(3).shift(1).truncate(n));
    let b_expect: Vec<Rat> = (1..=n as u64)
        .map(|k| Rat::from_integer(BigInt::from(3).pow(k as u32)) * binom(2 * k, k) / r(k + 1))
        .collect();
    rec.eq("B = sum 3^n C(2n,n)/(n+1) t^n", b_expect, ints(&b[0])[1..].to_vec());
    if let Some(branch) = branch {
        rec.eq(format!("(1+B) - t(1+B)^3 = algebraic branch mod t^{}", n + 1), ints(&branch), ints(&g));
    }
}

pub fn triangulations(scale: Scale, rec: &mut Recorder) {
    let n = scale.pick(12, 25);
    let t_expect: Vec<Rat> = (0..=n as u64)
        .map(|k| Rat::from_integer(BigInt::from(2).pow(k as u32)) * binom(3 * k, k) / (r(k + 1) * r(2 * k + 1)))
        .collect();
    if let Some(t) = unique_branch(rec, "cubic T equation", &fixtures::loopless_triangulations_equation(), "T", n) {
        rec.eq(format!("T branch = 2^n C(3n,n)/((n+1)(2n+1)), n <= {n}"), t_expect, ints(&t));
    }
    let m_expect: Vec<Rat> = (0..=n as u64)
        .map(|k| r(2) * binom(4 * k + 1, k) / (r(k + 1) * r(3 * k + 2)))
        .collect();
    if let Some(m) = unique_branch(rec, "quartic M equation", &fixtures::three_connected_triangulations_equation(), "M", n) {
        rec.eq(format!("M branch = 2 C(4n+1,n)/((n+1)(3n+2)), n <= {n}"), m_expect, ints(&m));
    }
}
