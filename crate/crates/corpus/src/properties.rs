//! Randomized invariants of the engines, bundled as one report.

use gfkit_core::algebraic::system::system_residuals;
use gfkit_core::algebraic::{
    brute_language_count, canonical_solution, canonical_solution_rat, grammar_to_system, normalize_system,
    series_roots, verify_algebraic, NormalForm, PolySystem,
};
use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::{rat, MPoly, RSeries, Rat, Var};
use gfkit_core::fixtures;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{timed, Recorder, Scale, SuiteReport};

const ORDER: usize = 12;

fn random_series(rng: &mut ChaCha8Rng, c0: Option<i64>) -> RSeries {
    let mut v: Vec<Rat> = (0..=ORDER)
        .map(|_| Rat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
        .collect();
    if let Some(c) = c0 {
        v[0] = rat(c);
    }
    RSeries::from_coeffs(v)
}

/// A proper positive system with at most three unknowns and degree at most three.
pub fn random_system(rng: &mut ChaCha8Rng) -> PolySystem {
    let k = rng.gen_range(1..=3);
    let names: Vec<String> = (1..=k).map(|i| format!("A{i}")).collect();
    let mut eqs = Vec::new();
    for i in 0..k {
        let mut terms = Vec::new();
        if i == 0 || rng.gen_bool(0.5) {
            terms.push(format!("{}*t", rng.gen_range(1..=2)));
        }
        for _ in 0..rng.gen_range(1..=3) {
            let mut mono = String::from("1");
            let mut deg = 0;
            for n in &names {
                let e = rng.gen_range(0..=2);
                if e > 0 && deg + e <= 3 {
                    mono.push_str(&format!("*{n}^{e}"));
                    deg += e;
                }
            }
            let te = if deg >= 2 { rng.gen_range(0..=1) } else { 1 };
            terms.push(format!("{}*t^{te}*{mono}", rng.gen_range(1..=3)));
        }
        eqs.push(parse_poly(&terms.join(" + ")).unwrap());
    }
    PolySystem::new(names.iter().map(|n| Var::new(n)).collect(), eqs).unwrap()
}

fn ring_laws(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let mut bad = 0;
    for _ in 0..20 {
        let (a, b, c) = (random_series(rng, None), random_series(rng, None), random_series(rng, None));
        bad += (a.add(&b).add(&c) != a.add(&b.add(&c))) as usize;
        bad += (a.mul(&b.add(&c)) != a.mul(&b).add(&a.mul(&c))) as usize;
    }
    rec.check("ring laws on 20 random triples", 0, bad, bad == 0);
    let mut bad = 0;
    for _ in 0..20 {
        let a = random_series(rng, Some(2));
        bad += a.invert().map_or(true, |i| a.mul(&i) != RSeries::one(ORDER)) as usize;
        let b = random_series(rng, Some(1));
        bad += b.sqrt().map_or(true, |r| r.mul(&r) != b) as usize;
    }
    rec.check("invert and sqrt on 20 random series", 0, bad, bad == 0);
}

fn systems(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let mut bad = Vec::new();
    for case in 0..10 {
        let s = random_system(rng);
        let ok = canonical_solution(&s, 15)
            .and_then(|sol| system_residuals(&s, &sol, 15))
            .map(|res| res.iter().all(|r| r.is_zero()))
            .unwrap_or(false);
        if !ok {
            bad.push(case);
        }
    }
    rec.eq("canonical solutions leave zero residuals", Vec::<usize>::new(), bad);

    let mut bad = Vec::new();
    for case in 0..30 {
        let s = random_system(rng);
        let base = canonical_solution_rat(&s, 20).ok().map(|v| v[0].clone());
        for mode in [NormalForm::Quadratic, NormalForm::LeadingT] {
            let other = normalize_system(&s, mode)
                .and_then(|n| canonical_solution_rat(&n, 20))
                .ok()
                .map(|v| v[0].clone());
            if base.is_none() || other != base {
                bad.push((case as usize, mode));
            }
        }
    }
    rec.eq("normal forms agree to order 20 on 30 random systems", Vec::new(), bad);
}

fn grammars(rec: &mut Recorder) {
    for (name, g) in [("Dyck", fixtures::dyck_grammar()), ("meander", fixtures::meander_grammar())] {
        let trees = grammar_to_system(&g).and_then(|s| canonical_solution_rat(&s, 12));
        let words = brute_language_count(&g, 12);
        match (trees, words) {
            (Ok(t), Ok(w)) => rec.eq(format!("{name} grammar: trees = words to length 12"), w, t[0].clone()),
            (t, w) => rec.check(format!("{name} grammar"), "success", format!("{:?} / {:?}", t.err(), w.err()), false),
        }
    }
    let g = fixtures::ambiguous_grammar();
    let trees = grammar_to_system(&g).and_then(|s| canonical_solution_rat(&s, 12));
    let words = brute_language_count(&g, 12);
    if let (Ok(t), Ok(w)) = (trees, words) {
        let ge = (0..=12).all(|n| t[0].coeff(n) >= w.coeff(n));
        let gt = (0..=12).any(|n| t[0].coeff(n) > w.coeff(n));
        rec.check("ambiguous grammar: trees >= words, strictly somewhere", "true", ge && gt, ge && gt);
    } else {
        rec.check("ambiguous grammar", "success", "error", false);
    }
}

fn branches(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let mut polys: Vec<(MPoly, &str)> = vec![
        (fixtures::hard_particle_equation(), "A"),
        (fixtures::parametrization_equation(), "V"),
        (fixtures::general_maps_equation(), "G"),
        (fixtures::loopless_triangulations_equation(), "T"),
        (fixtures::three_connected_triangulations_equation(), "M"),
    ];
    for _ in 0..10 {
        let (r1, r2) = (rng.gen_range(-3..=0), rng.gen_range(1..=3));
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-2..=2)).collect();
        let src = format!("(a - {r1})*(a - {r2}) + t*({} + {}*a) + t^2*({} + {}*a^2)", c[0], c[1], c[2], c[3]);
        polys.push((parse_poly(&src).unwrap(), "a"));
    }
    let mut total = 0;
    let mut bad = Vec::new();
    for (p, v) in &polys {
        let var = Var::new(v);
        let Ok(rep) = series_roots(p, &var, 30) else { continue };
        for b in rep.branches {
            total += 1;
            if verify_algebraic(&b.series, p, &var).ok() != Some(30) {
                bad.push(p.to_string());
            }
        }
    }
    rec.eq(format!("all {total} lifted branches verify at full order"), Vec::<String>::new(), bad);
}

/// Ring laws, series inverses, canonical solutions, normal forms, grammar duality and branch verification.
pub fn property_report() -> SuiteReport {
    timed("properties", Scale::Default, |_, rec| {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        ring_laws(rec, &mut rng);
        systems(rec, &mut rng);
        grammars(rec);
        branches(rec, &mut rng);
    })
}
