use gfkit_core::algebraic::{canonical_solution, PolySystem};
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::{MPoly, Monomial, Rat, TSeries, Var};
use num_bigint::BigInt;

use crate::oracles::{dyck_area_sum, kreweras_walks, slit_plane_walks, square_quarter_walks, WalkTable};
use crate::series::{binom, catalan, invert_with_lead, poly};
use crate::{Recorder, Scale};

fn r(n: u64) -> Rat {
    Rat::from_integer(n.into())
}

fn pow4(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(4).pow(n as u32))
}

fn count(table: &WalkTable, len: usize, at: (i64, i64)) -> Rat {
    r(table[len].get(&at).copied().unwrap_or(0))
}

/// `sum_{i,j} count(n, i, j) u^i v^j`.
fn endpoint_poly(table: &WalkTable, n: usize) -> MPoly {
    let (u, v) = (Var::new("u"), Var::new("v"));
    MPoly::from_terms(table[n].iter().map(|(&(i, j), &c)| {
        let pairs = [(u.clone(), i as i32), (v.clone(), j as i32)]
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .collect();
        (Monomial::from_pairs(pairs), r(c))
    }))
}

/// Compares every `t^n` coefficient of `series` with the oracle endpoint polynomial.
fn compare_refined(rec: &mut Recorder, label: &str, series: &TSeries, table: &WalkTable, n: usize) {
    let mismatch = (0..=n).find(|&k| *series.coeff(k) != endpoint_poly(table, k));
    rec.check(
        format!("{label}: every (i, j) cell agrees up to t^{n}"),
        "all agree",
        match mismatch {
            Some(k) => format!("t^{k}: series {} vs oracle {}", series.coeff(k), endpoint_poly(table, k)),
            None => "all agree".into(),
        },
        mismatch.is_none(),
    );
}

pub fn dyck_area(scale: Scale, rec: &mut Recorder) {
    let n_max = scale.pick(7, 9) as u64;
    let computed: Vec<Rat> = (0..=n_max).map(|n| r(dyck_area_sum(n as usize))).collect();
    let expect: Vec<Rat> = (0..=n_max).map(pow4).collect();
    rec.eq(format!("area sums over Dyck paths = 4^n, n <= {n_max}"), expect, computed);
}

/// `4^n (2i+1) / ((n+i+1)(2n+2i+1)) * C(2i, i) * C(3n+2i, n)`.
fn kreweras_closed(i: u64, n: u64) -> Rat {
    pow4(n) * r(2 * i + 1) / (r(n + i + 1) * r(2 * n + 2 * i + 1)) * binom(2 * i, i) * binom(3 * n + 2 * i, n)
}

/// `L(u, v; t)` from `W = t(2 + W^3)`, to order `n`.
fn kreweras_series(n: usize) -> gfkit_core::Result<TSeries> {
    let sys = PolySystem::new(vec![Var::new("W")], vec![parse_poly("2*t + t*W^3").unwrap()])?;
    let w = canonical_solution(&sys, n + 2)?.remove(0);
    let m = n + 1;
    let t_over_w = w.unshift(1)?.invert()?.truncate(m);
    let w2 = w.mul(&w).truncate(m);
    let root = |var: &str| poly("1", m).sub(&w2.mul_coeff(&MPoly::var(var))).sqrt();
    let left = t_over_w.sub(&poly("t/u", m)).mul(&root("u")?);
    let right = t_over_w.sub(&poly("t/v", m)).mul(&root("v")?);
    let uv = Monomial::from_pairs(vec![(Var::new("u"), 1), (Var::new("v"), 1)]);
    let kernel = invert_with_lead(&poly("u*v - t*(u + v + u^2*v^2)", m), &uv)?;
    let x = left.add(&right).mul(&kernel).sub(&poly("1/(u*v)", m));
    x.truncate(m).unshift(1)
}

pub fn kreweras(scale: Scale, rec: &mut Recorder) {
    let len = scale.pick(12, 18);
    let table = kreweras_walks(len);
    for i in 0..=3u64 {
        let ns: Vec<u64> = (0..).take_while(|n| 3 * n + 2 * i <= len as u64).collect();
        let oracle: Vec<Rat> = ns.iter().map(|&n| count(&table, (3 * n + 2 * i) as usize, (i as i64, 0))).collect();
        let closed: Vec<Rat> = ns.iter().map(|&n| kreweras_closed(i, n)).collect();
        rec.eq(format!("l_({i},0)(3n+2i) closed form vs oracle, length <= {len}"), closed, oracle);
    }

    let n = scale.pick(6, 10);
    if let Some(l) = rec.ok("L(u, v; t)", kreweras_series(n)) {
        compare_refined(rec, "L(u, v; t)", &l, &table, n);
    }

    let nq = scale.pick(5, 7);
    let sq = square_quarter_walks(2 * nq);
    let oracle: Vec<Rat> = (0..=nq).map(|k| count(&sq, 2 * k, (0, 0))).collect();
    let closed: Vec<Rat> = (0..=nq as u64)
        .map(|k| {
            let c = binom(2 * k + 2, k + 1);
            &c * &c / (r(2 * k + 1) * r(2 * k + 4))
        })
        .collect();
    rec.eq(format!("square-lattice quarter-plane returns, n <= {nq}"), closed, oracle);
}

/// `S(u, v; t)` with the square roots normalized to constant term 1.
fn slit_series(n: usize) -> gfkit_core::Result<TSeries> {
    let half = Rat::new(1.into(), 2.into());
    let a = poly("1 - 2*t*(1 + 1/u)", n).add(&poly("1 - 4*t", n).sqrt()?).scale(&half);
    let b = poly("1 + 2*t*(1 - 1/u)", n).add(&poly("1 + 4*t", n).sqrt()?).scale(&half);
    let den = poly("1 - t*(u + 1/u + v + 1/v)", n).invert()?;
    Ok(a.sqrt()?.mul(&b.sqrt()?).mul(&den))
}

pub fn slit_plane(scale: Scale, rec: &mut Recorder) {
    let n_max = scale.pick(5, 7) as u64;
    let table = slit_plane_walks(2 * n_max as usize + 1);
    let pick = |f: &dyn Fn(u64) -> (usize, (i64, i64))| -> Vec<Rat> {
        (0..=n_max).map(|k| {
            let (len, at) = f(k);
            count(&table, len, at)
        }).collect()
    };
    rec.eq(
        format!("s_(1,0)(2n+1) = C_(2n+1), n <= {n_max}"),
        (0..=n_max).map(|k| catalan(2 * k + 1)).collect(),
        pick(&|k| (2 * k as usize + 1, (1, 0))),
    );
    rec.eq(
        format!("s_(0,1)(2n+1) = 4^n C_n, n <= {n_max}"),
        (0..=n_max).map(|k| pow4(k) * catalan(k)).collect(),
        pick(&|k| (2 * k as usize + 1, (0, 1))),
    );
    // Half the Catalan number: at n = 1 only N then W avoids the slit.
    rec.eq(
        format!("s_(-1,1)(2n) = C_(2n)/2, 1 <= n <= {n_max}"),
        (1..=n_max).map(|k| catalan(2 * k) / r(2)).collect(),
        pick(&|k| (2 * k as usize, (-1, 1)))[1..].to_vec(),
    );
    let n = scale.pick(6, 10);
    if let Some(s) = rec.ok("S(u, v; t)", slit_series(n)) {
        let table = slit_plane_walks(n);
        compare_refined(rec, "S(u, v; t)", &s, &table, n);
    }
}
