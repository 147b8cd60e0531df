use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use qgauss::arith::factor_u64;
use qgauss::exactnum::*;
use qgauss::qform::*;
use qgauss::verify::random_even_sym;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn form() -> impl Strategy<Value = EvenSymMatrix> {
    (any::<u64>(), 1usize..5, any::<bool>())
        .prop_map(|(seed, n, definite)| random_even_sym(&mut ChaCha8Rng::seed_from_u64(seed), n, definite, 60))
}

/// `k G^{-1}` has integer entries and even diagonal.
fn scales_inverse_to_even(g: &EvenSymMatrix, k: i64) -> bool {
    let inv = g.inverse();
    let kr = rat_int(k);
    (0..g.dim()).all(|i| {
        (0..g.dim()).all(|j| {
            let v = &inv[i][j] * &kr;
            v.is_integer() && (i != j || v.to_integer().is_even())
        })
    })
}

fn primes_of(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

proptest! {
    #[test]
    fn level_is_the_least_even_scaling(g in form()) {
        let n = g.level();
        prop_assert!(n > 0);
        prop_assert!(scales_inverse_to_even(&g, n));
        for k in 1..n {
            prop_assert!(!scales_inverse_to_even(&g, k), "smaller level {k} for {:?}", g.rows());
        }
    }

    #[test]
    fn level_and_det_share_primes(g in form()) {
        let d = g.det().abs().to_u64().unwrap();
        prop_assert_eq!(primes_of(g.level() as u64), primes_of(d));
    }

    #[test]
    fn discriminant_group_has_order_abs_det(g in form()) {
        let disc = g.discriminant();
        prop_assert_eq!(disc.order(), g.det().abs().to_u128().unwrap());
        prop_assert_eq!(disc.invariants().iter().map(|&s| s as u128).product::<u128>(), disc.order());
        for w in disc.invariants().windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        prop_assert_eq!(disc.exponent() as i64 * 2 % g.level(), 0);
        // index and representatives are mutually inverse, and the form is non-degenerate
        let size = disc.order() as usize;
        for i in 0..size {
            let y = disc.rep(i);
            prop_assert!(g.maps_to_integers(&y));
            prop_assert_eq!(disc.index_of(&y), Some(i));
            if i != 0 {
                let pairs_trivially = (0..size).all(|j| g.bilinear(&y, &disc.rep(j)).is_integer());
                prop_assert!(!pairs_trivially, "radical element {i} in {:?}", g.rows());
            }
        }
    }

    #[test]
    fn signature_matches_det_sign(g in form()) {
        let (p, q) = g.inertia();
        prop_assert_eq!(p + q, g.dim());
        prop_assert_eq!(q % 2 == 1, g.det().is_negative());
        prop_assert_eq!(g.signature(), p as i64 - q as i64);
    }

    #[test]
    fn discriminant_module_is_valid(g in form()) {
        let m = g.discriminant().fqm();
        prop_assert!(m.validate().is_ok());
        prop_assert_eq!(m.size(), g.discriminant().order());
    }
}

#[test]
fn named_forms() {
    for n in 1..12 {
        let a = an_matrix(n);
        assert_eq!(*a.det(), BigInt::from(n as i64 + 1));
        assert!(a.is_positive_definite());
        assert_eq!(a.signature(), n as i64);
    }
    let u = hyperbolic_plane();
    assert_eq!(*u.det(), BigInt::from(-1));
    assert_eq!(u.signature(), 0);
    assert_eq!(u.level(), 1);
    assert_eq!(an_matrix(2).level(), 3);
    assert_eq!(make_even_sym(&[vec![2]]).unwrap().level(), 4);
    let s = direct_sum(&u, &an_matrix(2));
    assert_eq!(s.dim(), 4);
    assert_eq!(*s.det(), BigInt::from(-3));
}

#[test]
fn invalid_matrices_are_rejected() {
    assert!(make_even_sym(&[vec![1]]).is_err());
    assert!(make_even_sym(&[vec![2, 1], vec![0, 2]]).is_err());
    assert!(make_even_sym(&[vec![2, 2], vec![2, 2]]).is_err());
    assert!(make_even_sym(&[]).is_err());
    assert!(parse_matrix("[[2,1],[1]]").is_err());
    assert!(parse_matrix("2\n2 1\n1").is_err());
    assert_eq!(*parse_matrix("3\n2 -1 0\n-1 2 -1\n0 -1 2\n").unwrap().det(), BigInt::from(4));
    assert_eq!(*parse_matrix("[[2,1],[1,2]]").unwrap().det(), BigInt::from(3));
}

#[test]
fn quadratic_form_values() {
    let g = an_matrix(2);
    let v = vec![rat(1, 3), rat(2, 3)];
    let rows = g.rows();
    let mut by_hand = rat(0, 1);
    for i in 0..2 {
        for j in 0..2 {
            by_hand += &v[i] * rat_int(rows[i][j]) * &v[j];
        }
    }
    assert_eq!(g.quad(&v), by_hand / rat_int(2));
    assert_eq!(g.bilinear(&v, &v), g.quad(&v) * rat_int(2));
    // Q(G^{-1} k) agrees with the inverse form at k
    let k = vec![rat_int(1), rat_int(-2)];
    assert_eq!(g.quad(&g.apply_inv(&k)) * rat_int(2), g.inv_form(&k));
    assert!(!g.inv_form(&k).is_zero());
}
