//! Elementary number theory and integer linear algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("{a} is not invertible modulo {m}")]
    NotCoprime { a: i64, m: i64 },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
}

/// Kronecker symbol `(m/n)`.
///
/// Extends the Jacobi symbol by `(m/2)` (0 for even `m`, otherwise
/// `(-1)^{(m^2-1)/8}`), `(m/-1)` (the sign of `m`, with `(0/-1) = 1`), and
/// `(m/0)`, which is 1 for `m = ±1` and 0 otherwise.
pub fn kronecker(m: i64, n: i64) -> i32 {
    kronecker_i128(m as i128, n as i128)
}

pub fn kronecker_i128(m: i128, n: i128) -> i32 {
    if n == 0 {
        return i32::from(m == 1 || m == -1);
    }
    let mut result = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if m < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if m % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(m.rem_euclid(8), 3 | 5) {
            result = -result;
        }
        n >>= twos;
    }
    result * jacobi(m.rem_euclid(n), n)
}

/// Kronecker symbol with an arbitrary-precision top argument.
pub fn kronecker_big(m: &BigInt, n: i64) -> i32 {
    if n == 0 {
        return i32::from(m.abs().is_one());
    }
    // (m/n) for n != 0 depends on m mod 8|n| and on the sign of m when n < 0.
    let modulus = BigInt::from(8i128 * n.unsigned_abs() as i128);
    let r = m.mod_floor(&modulus).to_i128().unwrap();
    let mut k = kronecker_i128(r, n.unsigned_abs() as i128);
    if n < 0 && m.is_negative() {
        k = -k;
    }
    k
}

fn jacobi(mut a: i128, mut n: i128) -> i32 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Least non-negative inverse of `a` modulo `m`; `inv_mod(a, 1) = 0`.
pub fn inv_mod(a: i64, m: i64) -> Result<i64, ArithError> {
    if m <= 0 {
        return Err(ArithError::BadModulus(m));
    }
    if m == 1 {
        return Ok(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return Err(ArithError::NotCoprime { a, m });
    }
    Ok(e.x.rem_euclid(m as i128) as i64)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// An integer split as `2^k · odd`, where the sign travels with the odd part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddPart {
    pub two_exp: u32,
    pub odd: i64,
}

/// `odd_part(-12) = 2^2 · (-3)`. Panics on zero.
pub fn odd_part(c: i64) -> OddPart {
    assert!(c != 0, "odd_part(0)");
    let k = c.trailing_zeros();
    OddPart { two_exp: k, odd: c >> k }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorisation by trial division, stopping early once the cofactor is prime.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        if n > 1 && is_prime(n) {
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Squarefree test.
pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factor_u64(n.unsigned_abs()).iter().all(|(_, e)| *e == 1)
}

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| (0..k).fold(BigInt::zero(), |acc, t| acc + &row[t] * &b[t][j]))
                .collect()
        })
        .collect()
}

/// Smith normal form: returns `(U, S, V)` with `U·M·V = S`, `U` and `V`
/// unimodular, `S` diagonal with non-negative entries `s_1 | s_2 | …`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest non-zero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (u, a, v);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in 0..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                for j in 0..rows {
                    let d = &q * &u[t][j];
                    u[i][j] -= d;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in 0..rows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                for i in 0..cols {
                    let d = &q * &v[i][t];
                    v[i][j] -= d;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let mut bad_row = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        bad_row = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad_row {
                Some(i) => {
                    for j in 0..cols {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                    for j in 0..rows {
                        let x = u[i][j].clone();
                        u[t][j] += x;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for j in 0..cols {
                a[t][j] = -std::mem::take(&mut a[t][j]);
            }
            for j in 0..rows {
                u[t][j] = -std::mem::take(&mut u[t][j]);
            }
        }
    }
    (u, a, v)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub type RatMatrix = Vec<Vec<BigRational>>;

/// Inverse over the rationals by Gauss-Jordan elimination.
pub fn inverse(m: &IntMatrix) -> Result<RatMatrix, ArithError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(ArithError::NotSquare);
    }
    let mut a: RatMatrix =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut inv: RatMatrix = identity(n)
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(ArithError::Singular)?;
        a.swap(k, p);
        inv.swap(k, p);
        let piv = a[k][k].clone();
        for j in 0..n {
            a[k][j] = &a[k][j] / &piv;
            inv[k][j] = &inv[k][j] / &piv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
                let d = &f * &inv[k][j];
                inv[i][j] -= d;
            }
        }
    }
    Ok(inv)
}

/// Signature `(n_+, n_-)` of a non-degenerate symmetric rational matrix,
/// found by symmetric Gaussian elimination.
pub fn rational_inertia(m: &RatMatrix) -> Result<(usize, usize), ArithError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(ArithError::NotSquare);
    }
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // add row/column j to row/column k; the new pivot is 2·a[k][j]
                for c in 0..n {
                    let x = a[j][c].clone();
                    a[k][c] += x;
                }
                for r in 0..n {
                    let x = a[r][j].clone();
                    a[r][k] += x;
                }
            } else {
                return Err(ArithError::Singular);
            }
        }
        let piv = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for c in 0..n {
                let d = &f * &a[k][c];
                a[i][c] -= d;
            }
            for r in 0..n {
                let d = &f * &a[r][k];
                a[r][i] -= d;
            }
        }
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    Ok((pos, neg))
}

/// Converts a matrix of machine integers.
pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|x| BigInt::from(*x)).collect()).collect()
}
