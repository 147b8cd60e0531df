use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use qgauss::arith::*;

fn legendre_by_euler(a: i64, p: i64) -> i32 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    let mut r = 1i64;
    let (mut b, mut e) = (a, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 { 1 } else { -1 }
}

#[test]
fn legendre_tables_match_euler_criterion() {
    for p in (3..100).filter(|&p| is_prime(p as u64)) {
        for a in -2 * p..2 * p {
            assert_eq!(kronecker(a, p), legendre_by_euler(a, p), "({a}/{p})");
        }
    }
}

#[test]
fn kronecker_at_two_and_minus_one() {
    for a in -200i64..200 {
        let want = match a.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
        assert_eq!(kronecker(a, 2), want, "({a}/2)");
        assert_eq!(kronecker(a, -1), if a < 0 { -1 } else { 1 }, "({a}/-1)");
    }
}

proptest! {
    #[test]
    fn kronecker_is_multiplicative_in_both_slots(a in -300i64..300, b in -300i64..300, n in -300i64..300) {
        prop_assume!(n != 0);
        prop_assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        prop_assume!(a != 0 && b != 0);
        prop_assert_eq!(kronecker(n, a * b), kronecker(n, a) * kronecker(n, b));
    }

    #[test]
    fn reciprocity_for_odd_positive(m in 1i64..500, n in 1i64..500) {
        let (m, n) = (2 * m + 1, 2 * n + 1);
        prop_assume!(gcd(m, n) == 1);
        let sign = if (m % 4 == 3) && (n % 4 == 3) { -1 } else { 1 };
        prop_assert_eq!(kronecker(m, n) * kronecker(n, m), sign);
    }

    #[test]
    fn big_and_small_kronecker_agree(m in -10_000i64..10_000, n in -500i64..500) {
        prop_assert_eq!(kronecker_big(&BigInt::from(m), n), kronecker(m, n));
    }

    #[test]
    fn modular_inverse(a in -1000i64..1000, m in 1i64..500) {
        match inv_mod(a, m) {
            Ok(x) => {
                prop_assert_eq!(gcd(a, m), 1);
                prop_assert_eq!((a * x).rem_euclid(m), 1 % m);
            }
            Err(_) => prop_assert!(gcd(a, m) != 1),
        }
    }

    #[test]
    fn smith_form_diagonal_product_is_abs_det(rows in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 3)) {
        let m = int_matrix(&rows);
        let (u, s, v) = smith_normal_form(&m);
        prop_assert_eq!(mat_mul(&mat_mul(&u, &m), &v), s.clone());
        let prod: BigInt = (0..3).map(|i| s[i][i].clone()).product();
        prop_assert_eq!(prod, det(&m).abs());
        for i in 0..2 {
            if !s[i][i].is_zero() {
                prop_assert!((&s[i + 1][i + 1] % &s[i][i]) == BigInt::from(0));
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    prop_assert_eq!(s[i][j].clone(), BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn inertia_sign_is_sign_of_det(d in prop::collection::vec(-5i64..6, 3), off in prop::collection::vec(-4i64..5, 3)) {
        let rows = vec![
            vec![d[0], off[0], off[1]],
            vec![off[0], d[1], off[2]],
            vec![off[1], off[2], d[2]],
        ];
        let m = int_matrix(&rows);
        let dt = det(&m);
        prop_assume!(dt != BigInt::from(0));
        let inv = inverse(&m).unwrap();
        let rm: RatMatrix = rows
            .iter()
            .map(|r| r.iter().map(|&x| num_rational::BigRational::from_integer(x.into())).collect())
            .collect();
        let (pos, neg) = rational_inertia(&rm).unwrap();
        prop_assert_eq!(pos + neg, 3);
        prop_assert_eq!(neg % 2 == 1, dt.is_negative());
        // the inverse has the same inertia
        prop_assert_eq!(rational_inertia(&inv).unwrap(), (pos, neg));
    }
}

#[test]
fn factorisation_and_odd_part() {
    for n in 1u64..3000 {
        let f = factor_u64(n);
        assert_eq!(f.iter().map(|(p, e)| p.pow(*e)).product::<u64>(), n);
        assert!(f.iter().all(|(p, _)| is_prime(*p)));
        assert_eq!(is_squarefree(n as i64), f.iter().all(|(_, e)| *e == 1));
        let o = odd_part(n as i64);
        assert_eq!(o.odd % 2, 1);
        assert_eq!(o.odd << o.two_exp, n as i64);
    }
}
