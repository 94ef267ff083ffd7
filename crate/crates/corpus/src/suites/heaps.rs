use gfkit_core::algebraic::canonical_solution_rat;
use gfkit_core::arith::{RSeries, Rat};
use gfkit_core::fixtures;
use num_bigint::BigInt;

use super::{ints, u64s};
use crate::oracles::{compact_source_animals, single_source_animals};
use crate::{Recorder, Scale};

pub fn directed_animals(scale: Scale, r: &mut Recorder) {
    let order = scale.pick(30, 49);
    let n_max = scale.pick(6, 8);
    let three_pow = |n: usize| Rat::from_integer(BigInt::from(3).pow(n as u32 - 1));

    let Some(sol) = r.ok("heap system", canonical_solution_rat(&fixtures::heap_system(), order)) else { return };
    let (p, h) = (&sol[0], &sol[1]);
    if let Some(q) = r.ok("P / (1 - H)", p.div(&RSeries::one(order).sub(h))) {
        let expect: Vec<Rat> = (0..=order).map(|n| if n == 0 { Rat::from_integer(0.into()) } else { three_pow(n) }).collect();
        r.eq(format!("P/(1-H) = t/(1-3t) mod t^{}", order + 1), expect, ints(&q));
    }

    let compact = compact_source_animals(n_max);
    let expect: Vec<Rat> = (1..=n_max).map(three_pow).collect();
    r.eq(format!("compact-source oracle = 3^(n-1), n <= {n_max}"), expect, u64s(&compact[1..]));

    let single = single_source_animals(n_max);
    r.eq(
        format!("single-source oracle = pyramid series, n <= {n_max}"),
        ints(p)[..=n_max].to_vec(),
        u64s(&single),
    );
}
