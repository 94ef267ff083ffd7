use gfkit_core::algebraic::{series_roots, verify_algebraic};
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::{RatFun, UPoly, Var};
use gfkit_core::guessing::{guess_algebraic, guess_rational, Guess};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn rational_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for case in 0..50 {
        let num: Vec<i64> = (0..=rng.gen_range(0..=4)).map(|_| rng.gen_range(-5..=5)).collect();
        let mut den = vec![1i64];
        den.extend((0..rng.gen_range(0..=4)).map(|_| rng.gen_range(-5..=5)));
        let f = RatFun::from_rat(UPoly::from_ints(&num), UPoly::from_ints(&den)).unwrap();
        let coeffs = f.expand_rat(15).unwrap().into_coeffs();
        let g = guess_rational(&coeffs, 4, 4).unwrap().expect("a guess");
        assert_eq!(g.used + g.validated, coeffs.len());
        match g.guess {
            Guess::Rational(r) => assert!(r.equals(&f), "case {case}: {r} vs {f}"),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn algebraic_roundtrip() {
    let a = Var::new("a");
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut done = 0;
    while done < 10 {
        let (r1, r2) = (rng.gen_range(-2..=0), rng.gen_range(1..=2));
        let c: Vec<i64> = (0..6).map(|_| rng.gen_range(-2..=2)).collect();
        let p = parse_poly(&format!(
            "(a - {r1})*(a - {r2}) + t*({} + {}*a + {}*a^2) + t^2*({} + {}*a + {}*a^2)",
            c[0], c[1], c[2], c[3], c[4], c[5]
        ))
        .unwrap();
        let window = 3 * 3 + 2;
        let Ok(rep) = series_roots(&p, &a, 3 * window) else { continue };
        let Some(branch) = rep.branches.first() else { continue };
        let coeffs = &branch.series.coeffs()[..window + 3];
        let g = guess_algebraic(coeffs, 2, 2, &a).unwrap().expect("a relation");
        let Guess::Algebraic(q) = g.guess else { panic!() };
        assert_eq!(verify_algebraic(&branch.series, &q, &a).unwrap(), 3 * window as i64, "{q} vs {p}");
        assert!(p.div_exact(&q).is_some(), "{q} does not divide {p}");
        done += 1;
    }
}
