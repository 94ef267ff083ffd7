use gfkit_core::arith::{rat, Rat, RatFun, UPoly};
use gfkit_core::fixtures;
use gfkit_core::posets::{cone_points_bruteforce, HalfspaceSystem, MAX_CONE_DIM};
use gfkit_core::rational::automaton_gf;

use super::{ints, u64s};
use crate::oracles::{column_convex_counts, lecture_hall_counts};
use crate::{Recorder, Scale};

pub fn cc_polyominoes(scale: Scale, r: &mut Recorder) {
    let n = scale.pick(8, 10);
    let Some(f) = r.ok("automaton_gf", automaton_gf(&fixtures::ccpoly_automaton())) else { return };
    r.check("GF of the automaton", fixtures::ccpoly_gf(), &f, f.equals(&fixtures::ccpoly_gf()));
    let Some(s) = r.ok("expansion", f.expand_rat(n)) else { return };
    r.eq(format!("coefficients vs column oracle, n <= {n}"), u64s(&column_convex_counts(n)), ints(&s));
    let published = [0u64, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727];
    r.eq("coefficients vs published list", u64s(&published[..=n]), ints(&s));
}

/// `1 / prod (1 - t^e)` over the given exponents.
fn product_inverse(exps: impl IntoIterator<Item = usize>) -> UPoly<Rat> {
    exps.into_iter().fold(UPoly::one(), |acc, e| {
        let mut c = vec![rat(0); e + 1];
        c[0] = rat(1);
        c[e] = rat(-1);
        acc.mul(&UPoly::new(c))
    })
}

pub fn lecture_hall(scale: Scale, r: &mut Recorder) {
    let k_max = scale.pick(4, 5);
    let w = scale.pick(15, 25);
    for k in 1..=k_max {
        let den = product_inverse((1..=k).map(|i| 2 * i - 1));
        let Some(f) = r.ok("product formula", RatFun::from_rat(UPoly::one(), den)) else { continue };
        let Some(s) = r.ok("expansion", f.expand_rat(w)) else { continue };
        let brute = u64s(&lecture_hall_counts(k, w));
        r.eq(format!("k = {k}: enumeration vs product formula, weight <= {w}"), brute.clone(), ints(&s));
        if k <= MAX_CONE_DIM {
            // i * l_{i+1} - (i + 1) * l_i >= 0
            let rows: Vec<Vec<i64>> = (1..k)
                .map(|i| {
                    let mut row = vec![0i64; k];
                    row[i - 1] = -(i as i64 + 1);
                    row[i] = i as i64;
                    row
                })
                .collect();
            let cone = HalfspaceSystem::new(k, rows).and_then(|h| cone_points_bruteforce(&h, w));
            if let Some(c) = r.ok("cone enumeration", cone) {
                r.eq(format!("k = {k}: cone points vs enumeration"), brute, ints(&c));
            }
        }
    }
}

pub fn interval_parts(scale: Scale, r: &mut Recorder) {
    let order = scale.pick(100, 200);
    let cases = [1usize, 3, 5, 7].into_iter().map(|k| (k, 2 * k - 1))
        .chain([2usize, 4, 6].into_iter().map(|k| (k, 2 * k + 1)));
    for (k, top) in cases {
        // q + (1 - q) / prod_{i=k..top} (1 - q^i)
        let den = product_inverse(k..=top);
        let num = UPoly::from_ints(&[1, -1]).add(&UPoly::from_ints(&[0, 1]).mul(&den));
        let Some(f) = r.ok("series", RatFun::from_rat(num, den)) else { continue };
        let Some(s) = r.ok("expansion", f.expand_rat(order)) else { continue };
        let first_negative = s.coeffs().iter().position(|c| c < &rat(0));
        r.check(
            format!("parts in [{k}, {top}]: coefficients >= 0 to order {order}"),
            "none negative",
            match first_negative {
                Some(i) => format!("negative at {i}: {}", s.coeff(i)),
                None => "none negative".into(),
            },
            first_negative.is_none(),
        );
    }
}
