use gfkit_core::arith::rat::factorial;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Recorder, Scale};

/// `f_n = prod (a_i n)! / prod (b_j n)!`.
const TRIPLES: [(&[u64], &[u64]); 3] = [
    (&[6, 1], &[3, 2, 2]),
    (&[10, 1], &[5, 4, 2]),
    (&[20, 1], &[10, 7, 4]),
];

pub fn hypergeometric(scale: Scale, rec: &mut Recorder) {
    let n_max = scale.pick(10, 20) as u64;
    for (a, b) in TRIPLES {
        let label = format!("{a:?}/{b:?}");
        let (sa, sb): (u64, u64) = (a.iter().sum(), b.iter().sum());
        rec.check(format!("{label}: sum a = sum b"), sa, sb, sa == sb);
        rec.check(format!("{label}: e = d + 1"), a.len() + 1, b.len(), b.len() == a.len() + 1);
        let bad = (0..=n_max).find(|&n| {
            let num: BigInt = a.iter().map(|&x| factorial(x * n)).product();
            let den: BigInt = b.iter().map(|&x| factorial(x * n)).product();
            !(num % den).is_zero()
        });
        rec.check(
            format!("{label}: f_n integral for n <= {n_max}"),
            "all integral",
            bad.map_or("all integral".to_string(), |n| format!("not integral at n = {n}")),
            bad.is_none(),
        );
    }
}
