use num_bigint::BigInt;
use qgauss::exactnum::*;
use qgauss::hecke::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn quadratic_fields_match_enumeration() {
    let (mut checked, mut explicit) = (0, 0);
    for d in [2i64, 3, 5, -1, -2, -3, 7] {
        for c1 in 1..=12 {
            for v0 in -6..=6 {
                for v1 in -6..=6 {
                    let Ok(s) = QuadHeckeSpec::new(d, v0, v1, c1) else { continue };
                    let Ok(h) = hecke_quadratic(&s) else { continue };
                    assert_eq!(h.value, hecke_quadratic_brute(&s, 1 << 20).unwrap(), "d={d} v=({v0},{v1}) c1={c1}");
                    if let Ok(x) = hecke_quadratic_explicit(&s) {
                        assert_eq!(h.value, Cyclotomic::from_rational(&x), "explicit d={d} v=({v0},{v1}) c1={c1}");
                        explicit += 1;
                    }
                    assert_eq!(*s.g.det(), BigInt::from(4 * s.disc * s.numerator_norm() / (s.a1 * s.a1)));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 5000 && explicit > 100, "checked {checked} explicit {explicit}");
}

#[test]
fn cyclotomic_fields_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut routes = [0usize; 2];
    let mut k = 0;
    while k < 60 {
        let p = [3u64, 5][rng.gen_range(0..2)];
        let v: Vec<i64> = (0..p - 1).map(|_| rng.gen_range(-3..4)).collect();
        let c1 = rng.gen_range(1..if p == 3 { 30 } else { 8 });
        let Ok(s) = CycHeckeSpec::new(p, v.clone(), c1) else { continue };
        let Ok(h) = hecke_cyclotomic(&s, 1 << 24) else { continue };
        routes[usize::from(h.route == HeckeRoute::Brute)] += 1;
        assert_eq!(h.value, hecke_cyclotomic_brute(&s, 1 << 24).unwrap(), "p={p} v={v:?} c1={c1}");
        k += 1;
    }
    assert!(routes[0] > 0, "closed route never taken: {routes:?}");
}

#[test]
fn thirteenth_roots_with_modulus_thirty_seven() {
    let s = CycHeckeSpec::new(13, (1..=12).collect(), 37).unwrap();
    assert_eq!(s.g.det().clone(), BigInt::from(2).pow(12) * BigInt::from(13).pow(10));
    let h = hecke_cyclotomic(&s, 0).unwrap();
    assert_eq!(h.route, HeckeRoute::Closed);
    assert_eq!(h.value.to_bigint(), Some(BigInt::from(2_565_726_409u64)));
    assert!(matches!(hecke_cyclotomic_brute(&s, 1 << 20), Err(HeckeError::Budget { .. })));
}

#[test]
fn cyclotomic_norm_is_the_product_of_conjugates() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for p in [3u64, 5, 7] {
        for _ in 0..20 {
            let v: Vec<i64> = (0..p - 1).map(|_| rng.gen_range(-4..5)).collect();
            let mut prod = Cyclotomic::one();
            for k in 1..p {
                let conj: Cyclotomic =
                    v.iter().enumerate().map(|(j, c)| Cyclotomic::root_of_unity(k * (j as u64 + 1) % p, p).scale(&rat(*c, 1))).sum();
                prod = prod * conj;
            }
            assert_eq!(prod.to_bigint(), Some(cyclotomic_norm(p, &v)), "p={p} v={v:?}");
        }
    }
}

#[test]
fn invalid_fields_are_rejected() {
    assert!(QuadHeckeSpec::new(4, 1, 0, 3).is_err());
    assert!(QuadHeckeSpec::new(1, 1, 0, 3).is_err());
    assert!(QuadHeckeSpec::new(2, 0, 0, 3).is_err());
    assert!(CycHeckeSpec::new(4, vec![1, 0, 0], 3).is_err());
    assert!(CycHeckeSpec::new(5, vec![1, 0], 3).is_err());
}
