use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::RatFun;
use gfkit_core::posets::{
    brute_p_partitions, cone_points_bruteforce, for_each_p_partition, is_compatible, linear_extensions,
    p_partition_gf, sigma_data, HalfspaceSystem, NaturalPoset,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn example() -> NaturalPoset {
    NaturalPoset::new(4, &[(1, 3), (2, 3), (2, 4)]).unwrap()
}

fn random_posets() -> Vec<NaturalPoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    (0..20)
        .map(|_| {
            let k = rng.gen_range(1..=5);
            let mut rel = Vec::new();
            for i in 1..=k {
                for j in i + 1..=k {
                    if rng.gen_bool(0.3) {
                        rel.push((i, j));
                    }
                }
            }
            NaturalPoset::new(k, &rel).unwrap()
        })
        .collect()
}

fn ratfun(num: &str, den: &str) -> RatFun {
    RatFun::from_mpolys(&parse_poly(num).unwrap(), &parse_poly(den).unwrap()).unwrap()
}

#[test]
fn example_poset_generating_function() {
    let p = example();
    let f = p_partition_gf(&p).unwrap();
    let expect = ratfun("1 + t + t^2 + t^3 + t^4", "(1 - t)*(1 - t^2)*(1 - t^3)*(1 - t^4)");
    assert!(f.equals(&expect), "{f}");
    assert_eq!(f.expand_rat(20).unwrap(), brute_p_partitions(&p, 20).unwrap());
}

#[test]
fn every_p_partition_has_exactly_one_compatible_extension() {
    let mut posets = random_posets();
    posets.push(example());
    for p in posets {
        let exts = linear_extensions(&p).unwrap();
        let mut per_sigma = vec![0u64; exts.len()];
        let mut total = 0u64;
        for_each_p_partition(&p, 15, |lambda| {
            total += 1;
            let hits: Vec<usize> = (0..exts.len()).filter(|&s| is_compatible(lambda, &exts[s])).collect();
            assert_eq!(hits.len(), 1, "{lambda:?}");
            per_sigma[hits[0]] += 1;
        })
        .unwrap();
        assert_eq!(per_sigma.iter().sum::<u64>(), total);
    }
}

#[test]
fn generating_function_matches_enumeration_on_random_posets() {
    for p in random_posets() {
        let f = p_partition_gf(&p).unwrap();
        assert_eq!(f.expand_rat(20).unwrap(), brute_p_partitions(&p, 20).unwrap());
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k);
            out.push(q);
        }
    }
    out
}

#[test]
fn descent_weight_equals_minimal_compatible_partition() {
    for k in 1..=7 {
        for sigma in permutations(k) {
            let (e, lambda) = sigma_data(&sigma).unwrap();
            assert_eq!(e, lambda.iter().sum::<u64>(), "{sigma:?}");
            assert!(is_compatible(&lambda, &sigma));
            // Lowering any part breaks compatibility.
            for i in 0..k {
                if lambda[i] > 0 {
                    let mut l = lambda.clone();
                    l[i] -= 1;
                    assert!(!is_compatible(&l, &sigma), "{sigma:?} not minimal at {i}");
                }
            }
        }
    }
}

#[test]
fn two_dimensional_cone() {
    let h = HalfspaceSystem::new(2, vec![vec![2, -1], vec![-1, 2]]).unwrap();
    let f = ratfun("1 - t + t^2", "(1 - t)*(1 - t^3)");
    assert_eq!(cone_points_bruteforce(&h, 40).unwrap(), f.expand_rat(40).unwrap());
}

#[test]
fn three_dimensional_cone() {
    let h = HalfspaceSystem::new(3, vec![vec![1, 1, -1]]).unwrap();
    let f = ratfun("1 + t + t^2", "(1 - t)*(1 - t^2)^2");
    assert_eq!(cone_points_bruteforce(&h, 30).unwrap(), f.expand_rat(30).unwrap());
}
