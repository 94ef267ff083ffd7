use gfkit_core::algebraic::{canonical_solution, PolySystem};
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::{MPoly, Rat, TSeries, Var};

use crate::oracles::{abscissa_distribution, binary_trees_by_abscissa};
use crate::series::{constant, poly};
use crate::{Recorder, Scale};

struct Pieces {
    t: TSeries,
    z: TSeries,
    mu: TSeries,
}

fn one_plus(x: &TSeries) -> TSeries {
    constant(1, x.order()).add(x)
}

fn pieces(n: usize) -> gfkit_core::Result<Pieces> {
    // T = 1 + T1 with T1 = t (1 + T1)^2.
    let sys = PolySystem::new(vec![Var::new("T1")], vec![parse_poly("t*(1 + T1)^2").unwrap()])?;
    let t = one_plus(&canonical_solution(&sys, n)?.remove(0));
    let tt = poly("t", n);

    // Z = t (1 + Z^2)^2 / (1 - Z + Z^2); each pass fixes one more coefficient.
    let mut z = TSeries::zero(n);
    for _ in 0..=n {
        let z2 = z.mul(&z);
        let den = constant(1, n).sub(&z).add(&z2);
        z = tt.mul(&one_plus(&z2).pow(2)).mul(&den.invert()?);
    }

    // mu = (u - 1) Z (1 + mu Z)^2 (1 + mu Z^2)(1 + mu Z^6)
    //      / ((1 + Z)^2 (1 + Z + Z^2)(1 - Z)^3 (1 - mu^2 Z^5))
    let zp = |k: u32| z.pow(k);
    let fixed = one_plus(&z).pow(2).mul(&one_plus(&z).add(&zp(2))).mul(&constant(1, n).sub(&z).pow(3));
    let u1 = &MPoly::var("u") - &MPoly::one();
    let mut mu = TSeries::zero(n);
    for _ in 0..=n {
        let num = z
            .mul(&one_plus(&mu.mul(&z)).pow(2))
            .mul(&one_plus(&mu.mul(&zp(2))))
            .mul(&one_plus(&mu.mul(&zp(6))))
            .mul_coeff(&u1);
        let den = fixed.mul(&constant(1, n).sub(&mu.mul(&mu).mul(&zp(5))));
        mu = num.mul(&den.invert()?);
    }
    Ok(Pieces { t, z, mu })
}

/// `S_j = T (1 + mu Z^j)(1 + mu Z^{j+5}) / ((1 + mu Z^{j+2})(1 + mu Z^{j+3}))`.
fn s_j(p: &Pieces, j: u32) -> gfkit_core::Result<TSeries> {
    let f = |k: u32| one_plus(&p.mu.mul(&p.z.pow(k)));
    let den = f(j + 2).mul(&f(j + 3));
    Ok(p.t.mul(&f(j)).mul(&f(j + 5)).mul(&den.invert()?))
}

pub fn embedded_trees(scale: Scale, rec: &mut Recorder) {
    let n = scale.pick(8, 11);
    let trees = binary_trees_by_abscissa(n);
    let Some(p) = rec.ok("T, Z and mu", pieces(n)) else { return };
    for j in 0..=4i8 {
        let Some(s) = rec.ok("S_j", s_j(&p, j as u32)) else { continue };
        let dist = abscissa_distribution(&trees, j);
        let oracle: Vec<MPoly> = dist
            .iter()
            .map(|d| {
                d.iter().fold(MPoly::zero(), |acc, (&k, &c)| {
                    &acc + &MPoly::var_pow("u", k as i32).scale(&Rat::from_integer(c.into()))
                })
            })
            .collect();
        let computed: Vec<MPoly> = (0..=n).map(|k| s.coeff(k).clone()).collect();
        let first_bad = (0..=n).find(|&k| computed[k] != oracle[k]);
        rec.check(
            format!("S_{j}: nodes at abscissa {j}, up to t^{n}"),
            "all agree",
            match first_bad {
                Some(k) => format!("t^{k}: series {} vs oracle {}", computed[k], oracle[k]),
                None => "all agree".into(),
            },
            first_bad.is_none(),
        );
    }
}
