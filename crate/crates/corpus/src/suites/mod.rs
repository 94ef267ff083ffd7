pub mod heaps;
pub mod hypergeometric;
pub mod maps;
pub mod rational;
pub mod trees;
pub mod walks;

use gfkit_core::arith::{RSeries, Rat};

pub(crate) fn ints(s: &RSeries) -> Vec<Rat> {
    s.coeffs().to_vec()
}

pub(crate) fn u64s(v: &[u64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(x.into())).collect()
}
