use gfkit_core::algebraic::{
    brute_language_count, canonical_solution, canonical_solution_rat, grammar_to_system, lagrange_coeff,
    normalize_system, series_roots, solve_catalytic, verify_algebraic, NormalForm, PolySystem,
};
use gfkit_core::algebraic::system::system_residuals;
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::rat::binomial;
use gfkit_core::arith::{rat, MPoly, RSeries, Rat, Var};
use gfkit_core::fixtures;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_system(rng: &mut ChaCha8Rng) -> PolySystem {
    let k = rng.gen_range(1..=3);
    let names: Vec<String> = (1..=k).map(|i| format!("A{i}")).collect();
    let mut eqs = Vec::new();
    for i in 0..k {
        let mut p = if i == 0 || rng.gen_bool(0.5) {
            parse_poly(&format!("{}*t", rng.gen_range(1..=2))).unwrap()
        } else {
            MPoly::zero()
        };
        for _ in 0..rng.gen_range(1..=3) {
            let mut mono = String::from("1");
            let mut deg = 0;
            for n in &names {
                let e = rng.gen_range(0..=2);
                if deg + e <= 3 && e > 0 {
                    mono.push_str(&format!("*{n}^{e}"));
                    deg += e;
                }
            }
            let te = if deg >= 2 { rng.gen_range(0..=1) } else { 1 };
            let c = rng.gen_range(1..=3);
            p = &p + &parse_poly(&format!("{c}*t^{te}*{mono}")).unwrap();
        }
        eqs.push(p);
    }
    PolySystem::new(names.iter().map(|n| Var::new(n)).collect(), eqs).unwrap()
}

#[test]
fn normal_forms_keep_the_first_component() {
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    for case in 0..30 {
        let s = random_system(&mut rng);
        let base = canonical_solution_rat(&s, 20).unwrap();
        for mode in [NormalForm::Quadratic, NormalForm::LeadingT] {
            let n = normalize_system(&s, mode).unwrap();
            match mode {
                NormalForm::Quadratic => assert!(n.is_quadratic(), "case {case}"),
                NormalForm::LeadingT => assert!(n.is_leading_t(), "case {case}"),
            }
            assert!(n.is_positive());
            let sol = canonical_solution_rat(&n, 20).unwrap();
            assert_eq!(sol[0], base[0], "case {case}, {mode:?}\n{s}\n{n}");
        }
    }
}

#[test]
fn canonical_solution_is_a_fixed_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut systems: Vec<PolySystem> = (0..10).map(|_| random_system(&mut rng)).collect();
    systems.push(fixtures::quadratic_example_system());
    systems.push(fixtures::excursion_system());
    for s in systems {
        let sol = canonical_solution(&s, 15).unwrap();
        for r in system_residuals(&s, &sol, 15).unwrap() {
            assert!(r.is_zero(), "{s}");
        }
    }
}

#[test]
fn unambiguous_grammars_count_words() {
    for g in [fixtures::dyck_grammar(), fixtures::meander_grammar()] {
        let sol = canonical_solution_rat(&grammar_to_system(&g).unwrap(), 12).unwrap();
        assert_eq!(sol[0], brute_language_count(&g, 12).unwrap(), "{g}");
    }
}

#[test]
fn ambiguous_grammar_overcounts() {
    let g = fixtures::ambiguous_grammar();
    let trees = canonical_solution_rat(&grammar_to_system(&g).unwrap(), 12).unwrap();
    let words = brute_language_count(&g, 12).unwrap();
    let mut strict = false;
    for n in 0..=12 {
        assert!(trees[0].coeff(n) >= words.coeff(n));
        strict |= trees[0].coeff(n) > words.coeff(n);
    }
    assert!(strict);
}

fn horner(phi: &[Rat], u: &RSeries) -> RSeries {
    let n = u.order();
    phi.iter()
        .rev()
        .fold(RSeries::zero(n), |acc, c| acc.mul(u).add(&RSeries::constant(c.clone(), n)))
}

#[test]
fn lagrange_matches_fixed_point_iteration() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..20 {
        let deg = rng.gen_range(1..=3);
        let mut phi: Vec<Rat> = (0..=deg).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if phi[0].is_zero() {
            phi[0] = rat(1);
        }
        let n = 10;
        let mut u = RSeries::zero(n);
        for _ in 0..=n {
            u = horner(&phi, &u).shift(1);
        }
        let phi_s = RSeries::new(phi.clone(), n);
        let id = RSeries::t(n);
        for k in 1..=n {
            assert_eq!(lagrange_coeff(&phi_s, &id, k).unwrap(), *u.coeff(k), "phi {phi:?}, n {k}");
        }
    }
}

#[test]
fn every_branch_verifies() {
    let mut polys: Vec<(MPoly, Var)> = vec![
        (fixtures::hard_particle_equation(), Var::new("A")),
        (fixtures::parametrization_equation(), Var::new("V")),
        (fixtures::general_maps_equation(), Var::new("G")),
        (fixtures::loopless_triangulations_equation(), Var::new("T")),
        (fixtures::three_connected_triangulations_equation(), Var::new("M")),
        (parse_poly("a - t - a^2").unwrap(), Var::new("a")),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let (r1, r2) = (rng.gen_range(-3..=0), rng.gen_range(1..=3));
        let extra: Vec<i64> = (0..6).map(|_| rng.gen_range(-2..=2)).collect();
        let src = format!(
            "(a - {r1})*(a - {r2}) + t*({} + {}*a + {}*a^2) + t^2*({} + {}*a + {}*a^2)",
            extra[0], extra[1], extra[2], extra[3], extra[4], extra[5]
        );
        polys.push((parse_poly(&src).unwrap(), Var::new("a")));
    }
    let mut checked = 0;
    for (p, v) in polys {
        let Ok(rep) = series_roots(&p, &v, 40) else { continue };
        for b in &rep.branches {
            assert_eq!(verify_algebraic(&b.series, &p, &v).unwrap(), 40, "{p}");
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} branches");
}

#[test]
fn catalytic_iteration_matches_algebraic_branch() {
    let sol = solve_catalytic(&fixtures::general_maps_catalytic(), 15).unwrap();
    let rep = series_roots(&fixtures::general_maps_equation(), &Var::new("G"), 15).unwrap();
    assert_eq!(rep.branches.len(), 1);
    assert_eq!(sol.at_one.to_rat().unwrap(), rep.branches[0].series);
}

/// Walks with steps +1/-1 from 0 back to 0.
fn bridge_counts(max_len: usize) -> Vec<u64> {
    let mut out = vec![0u64; max_len + 1];
    let off = max_len;
    let mut cur = vec![0u64; 2 * max_len + 1];
    cur[off] = 1;
    out[0] = 1;
    for len in 1..=max_len {
        let mut next = vec![0u64; cur.len()];
        for (h, &c) in cur.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if h + 1 < next.len() {
                next[h + 1] += c;
            }
            if h > 0 {
                next[h - 1] += c;
            }
        }
        cur = next;
        out[len] = cur[off];
    }
    out
}

#[test]
fn excursion_system_counts_bridges() {
    let sol = canonical_solution_rat(&fixtures::excursion_system(), 16).unwrap();
    let dp = bridge_counts(16);
    for n in 1..=8 {
        assert_eq!(*sol[0].coeff(2 * n), rat(dp[2 * n] as i64));
        assert_eq!(*sol[0].coeff(2 * n), Rat::from_integer(binomial(2 * n as u64, n as u64)));
        assert!(sol[0].coeff(2 * n - 1).is_zero());
    }
}

#[test]
fn pyramids_over_half_pyramids() {
    let sol = canonical_solution_rat(&fixtures::heap_system(), 50).unwrap();
    let (p, h) = (&sol[0], &sol[1]);
    let q = p.div(&RSeries::one(50).sub(h)).unwrap();
    let expect = RSeries::from_coeffs((0..=50).map(|n| if n == 0 { rat(0) } else { Rat::from_integer(num_bigint::BigInt::from(3).pow(n as u32 - 1)) }).collect());
    assert_eq!(q, expect);
}
