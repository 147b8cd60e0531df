use num_integer::Integer;
use proptest::prelude::*;
use qgauss::exactnum::*;
use qgauss::qform::*;
use qgauss::subsum::*;
use qgauss::verify::{random_even_sym, random_subgroup, random_unit, random_w};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

struct Instance {
    g: EvenSymMatrix,
    a: i64,
    c: i64,
    w: Vec<Rational>,
    h: SubgroupModC,
}

fn instance(seed: u64, max_c: i64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..4);
    let definite = rng.gen_bool(0.6);
    let g = random_even_sym(&mut rng, n, definite, 30);
    let c = rng.gen_range(1..=max_c);
    let a = random_unit(&mut rng, c, 12);
    let w = random_w(&mut rng, &g, true);
    let h = random_subgroup(&mut rng, n, c);
    Instance { g, a, c, w, h }
}

fn element_set(h: &SubgroupModC) -> BTreeSet<Vec<i64>> {
    h.elements().iter().cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_sizes_multiply_to_full_group(seed in any::<u64>()) {
        let t = instance(seed, 12);
        let perp = orthogonal_complement(&t.h).unwrap();
        prop_assert_eq!((t.h.order() * perp.order()) as u64, (t.c as u64).pow(t.g.dim() as u32));
        let back = orthogonal_complement(&perp).unwrap();
        prop_assert_eq!(element_set(&back), element_set(&t.h));
        for x in t.h.elements() {
            for y in perp.elements() {
                let dot: i64 = x.iter().zip(y).map(|(p, q)| p * q).sum();
                prop_assert_eq!(dot.rem_euclid(t.c), 0);
            }
        }
    }

    #[test]
    fn duality_matches_enumeration(seed in any::<u64>()) {
        let t = instance(seed, 12);
        let lhs = gauss_subsum_brute(&t.g, t.a, t.c, &t.w, &t.h).unwrap();
        let level = t.g.level();
        if level.gcd(&t.c) == 1 {
            prop_assert_eq!(lhs, duality_coprime_rhs(&t.g, t.a, t.c, &t.w, &t.h).unwrap());
        } else if t.c % level == 0 && t.g.is_positive_definite() {
            prop_assert_eq!(lhs, duality_divides_rhs(&t.g, t.a, t.c, &t.w, &t.h).unwrap());
        }
    }

    #[test]
    fn poisson_matches_enumeration(seed in any::<u64>()) {
        let t = instance(seed, 8);
        let perp = orthogonal_complement(&t.h).unwrap();
        prop_assume!(perp.order() <= 64);
        let lhs = gauss_subsum_brute(&t.g, t.a, t.c, &t.w, &t.h).unwrap();
        prop_assert_eq!(lhs, poisson_subsum_rhs(&t.g, t.a, t.c, &t.w, &t.h).unwrap());
    }

    #[test]
    fn hyperplane_closed_form_matches_enumeration(seed in any::<u64>()) {
        let t = instance(seed, 14);
        prop_assume!(t.g.level().gcd(&t.c) == 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let hv: Vec<i64> = (0..t.g.dim()).map(|_| rng.gen_range(0..t.c)).collect();
        let plane = orthogonal_complement(&SubgroupModC::generate(t.c as u64, t.g.dim(), &[hv.clone()]).unwrap()).unwrap();
        let want = gauss_subsum_brute(&t.g, t.a, t.c, &t.w, &plane).unwrap();
        let got = hyperplane_subsum_closed(&t.g, t.a, t.c, &t.w, &hv).unwrap();
        prop_assert_eq!(want, got.value, "route {:?}", got.route);
    }
}

#[test]
fn hyperplane_routes_are_all_reached() {
    let mut seen = BTreeSet::new();
    for seed in 0..3000u64 {
        let t = instance(seed, 14);
        if t.g.level().gcd(&t.c) != 1 {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let hv: Vec<i64> = (0..t.g.dim()).map(|_| rng.gen_range(0..t.c)).collect();
        let got = hyperplane_subsum_closed(&t.g, t.a, t.c, &t.w, &hv).unwrap();
        seen.insert(format!("{:?}", got.route));
    }
    for route in ["Full", "Vanishing", "OddModulus", "DividesModulus"] {
        assert!(seen.contains(route), "route {route} never taken; saw {seen:?}");
    }
}

#[test]
fn full_group_subsum_is_the_plain_sum() {
    use qgauss::gauss::{brute_gauss, GaussSpec};
    for seed in 0..40u64 {
        let t = instance(seed, 10);
        let full = SubgroupModC::full(t.c as u64, t.g.dim()).unwrap();
        let spec = GaussSpec::new(&t.g, t.a, t.c).unwrap().with_w(t.w.clone()).unwrap();
        assert_eq!(gauss_subsum_brute(&t.g, t.a, t.c, &t.w, &full).unwrap(), brute_gauss(&spec));
    }
}

#[test]
fn sums_vanish_when_the_shift_is_not_scaled_into_the_lattice() {
    let lattices = [make_even_sym(&[vec![2]]).unwrap(), an_matrix(2), scalar_matrix(2, 2).unwrap(), an_matrix(3)];
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut predicted = 0;
    for g in &lattices {
        let n = g.dim();
        for k in 1..4 {
            let c = g.level() * k;
            let dual = dual_lattice_subgroup(g, c).unwrap();
            for _ in 0..6 {
                let a = random_unit(&mut rng, c, 9);
                let w = random_w(&mut rng, g, true);
                let mut gens = dual.gens().to_vec();
                gens.push((0..n).map(|_| rng.gen_range(0..c)).collect());
                let h = SubgroupModC::generate(c as u64, n, &gens).unwrap();
                if let Ok(zero) = vanishing_criterion(g, a, c, &w, &h) {
                    assert_eq!(gauss_subsum_brute(g, a, c, &w, &h).unwrap(), zero, "{:?} a={a} c={c} w={w:?}", g.rows());
                    let x: Vec<i64> = (0..n).map(|_| rng.gen_range(0..c)).collect();
                    assert_eq!(coset_subsum_brute(g, a, c, &w, &x).unwrap(), vanishing_coset(g, a, c, &w, &x).unwrap());
                    predicted += 1;
                }
            }
        }
    }
    assert!(predicted > 10, "only {predicted} vanishing cases generated");
}

#[test]
fn subgroup_json_round_trip_and_validation() {
    let h = SubgroupModC::generate(6, 2, &[vec![2, 3], vec![0, 3]]).unwrap();
    let back = SubgroupModC::from_json(&h.to_json(), 2).unwrap();
    assert_eq!(element_set(&back), element_set(&h));
    assert!(h.contains(&[4, 0]));
    assert!(!h.contains(&[1, 0]));
    assert!(SubgroupModC::generate(6, 2, &[vec![1, 2, 3]]).is_err());
    let g = an_matrix(2);
    assert!(gauss_subsum_brute(&g, 1, 5, &zero_vec(2), &h).is_err());
}
