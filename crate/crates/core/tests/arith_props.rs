use gfkit_core::arith::matrix::det_bareiss;
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::resultant::resultant;
use gfkit_core::arith::{rat, MPoly, RSeries, Rat, RatFun, UPoly, Var};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 12;

fn series() -> impl Strategy<Value = RSeries> {
    prop::collection::vec((-9i64..=9, 1i64..=4), N + 1)
        .prop_map(|v| RSeries::from_coeffs(v.into_iter().map(|(a, b)| Rat::new(a.into(), b.into())).collect()))
}

fn with_constant(c: i64) -> impl Strategy<Value = RSeries> {
    series().prop_map(move |s| {
        let mut v = s.into_coeffs();
        v[0] = rat(c);
        RSeries::from_coeffs(v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_associates(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn product_distributes(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn product_commutes(a in series(), b in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn inverse_is_inverse(a in with_constant(3)) {
        let prod = a.mul(&a.invert().unwrap());
        prop_assert_eq!(prod, RSeries::one(N));
    }

    #[test]
    fn sqrt_squares_back(a in with_constant(1)) {
        let r = a.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r), a);
    }

    #[test]
    fn expansion_follows_denominator_recurrence(
        num in prop::collection::vec(-5i64..=5, 1..4),
        tail in prop::collection::vec(-5i64..=5, 1..4),
    ) {
        let mut den = vec![1i64];
        den.extend(tail);
        let f = RatFun::from_rat(UPoly::from_ints(&num), UPoly::from_ints(&den)).unwrap();
        let (fn_, fd) = f.rat_parts().unwrap();
        let a = f.expand_rat(30).unwrap();
        let dn = fn_.degree().unwrap_or(0);
        let dd = fd.degree().unwrap_or(0);
        for n in dn + 1..=30 {
            let mut acc = Rat::zero();
            for k in 0..=dd.min(n) {
                acc += fd.coeff(k) * a.coeff(n - k);
            }
            prop_assert!(acc.is_zero(), "recurrence fails at {}", n);
        }
    }
}

fn cofactor(m: &[Vec<Rat>]) -> Rat {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = Rat::zero();
    for (j, x) in m[0].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = x * cofactor(&sub);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..100 {
        let n = 1 + case % 5;
        let m: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-6..=6))).collect())
            .collect();
        assert_eq!(det_bareiss(&m), cofactor(&m), "case {case}");
    }
}

#[test]
fn bareiss_on_polynomial_entries() {
    let p = |s: &str| parse_poly(s).unwrap();
    let m = vec![
        vec![p("1 - t"), p("x"), p("0")],
        vec![p("t"), p("1"), p("y*t")],
        vec![p("0"), p("t^2"), p("1 + x")],
    ];
    // Expanded along the first row by hand.
    let expect = &(&p("1 - t") * &(&p("1 + x") - &p("y*t^3"))) - &(&p("x") * &p("t*(1 + x)"));
    assert_eq!(det_bareiss(&m), expect);
}

#[test]
fn resultant_detects_planted_common_factor() {
    let a = Var::new("a");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let rand_poly = |rng: &mut ChaCha8Rng, deg: i32| {
        let mut p = MPoly::var_pow("a", deg);
        for k in 0..deg {
            let c: i64 = rng.gen_range(-4..=4);
            let ct: i64 = rng.gen_range(-2..=2);
            p = &p + &(&MPoly::var_pow("a", k) * &parse_poly(&format!("{c} + {ct}*t")).unwrap());
        }
        p
    };
    for _ in 0..20 {
        let common = rand_poly(&mut rng, 1);
        let p = &common * &rand_poly(&mut rng, 2);
        let q = &common * &rand_poly(&mut rng, 1);
        assert!(resultant(&p, &q, &a).unwrap().is_zero());
    }
    // Coprime: distinct constant roots.
    let p = parse_poly("a - 1").unwrap();
    let q = parse_poly("a^2 - 4").unwrap();
    assert!(!resultant(&p, &q, &a).unwrap().is_zero());
    assert!(resultant(&parse_poly("a - t").unwrap(), &parse_poly("a + t").unwrap(), &a)
        .unwrap()
        .as_constant()
        .is_none());
}
