//! Point counts on affine quadrics modulo `c` and on Markoff-type cubic surfaces modulo `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{self, kronecker, kronecker_big, odd_part};
use crate::exactnum::{rat, rat_int, Cyclotomic, Rational};
use crate::gauss::{c_half_power, quad_counts};
use crate::qform::{make_even_sym, EvenSymMatrix, QformError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("modulus must be positive")]
    BadModulus,
    #[error("vector length does not match the matrix")]
    Dimension,
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("closed form produced a non-integer: {0}")]
    NonInteger(String),
    #[error(transparent)]
    Qform(#[from] QformError),
}

fn quadric_vector(g: &EvenSymMatrix, v: &[i64]) -> Result<(), CountError> {
    if v.len() != g.dim() {
        return Err(CountError::Dimension);
    }
    Ok(())
}

/// `#{x ∈ (Z/cZ)^n : x^T G x / 2 + v^T x ≡ m mod c}` by enumeration.
pub fn count_quadric_brute(g: &EvenSymMatrix, v: &[i64], m: i64, c: u64) -> Result<u64, CountError> {
    if c == 0 {
        return Err(CountError::BadModulus);
    }
    quadric_vector(g, v)?;
    let n = g.dim();
    let qa: Vec<Vec<i128>> = g.rows().iter().map(|r| r.iter().map(|x| *x as i128).collect()).collect();
    let lin: Vec<i128> = v.iter().map(|x| *x as i128).collect();
    let counts = quad_counts(&qa, &lin, -(m as i128), &vec![c; n], c);
    Ok(counts[0])
}

/// `v^T G^{-1} v`.
fn inv_form_int(g: &EvenSymMatrix, v: &[i64]) -> Rational {
    let vr: Vec<Rational> = v.iter().map(|x| rat_int(*x)).collect();
    g.inv_form(&vr)
}

/// Exact count for `gcd(D, c) = 1` as a sum over `a mod c` of closed Gauss sums.
/// The result is checked to be an integer.
pub fn count_quadric_closed_general(g: &EvenSymMatrix, v: &[i64], m: i64, c: u64) -> Result<BigInt, CountError> {
    count_quadric_closed_shifted(g, v, m, c, 0)
}

/// [`count_quadric_closed_general`] with each per-term inverse `c̃'` of `c̃`
/// modulo `ã N` replaced by `c̃' + shift · ã N`. Any inverse gives the same count.
pub fn count_quadric_closed_shifted(g: &EvenSymMatrix, v: &[i64], m: i64, c: u64, shift: i64) -> Result<BigInt, CountError> {
    if c == 0 {
        return Err(CountError::BadModulus);
    }
    quadric_vector(g, v)?;
    let ci = c as i64;
    let d = g.det();
    if d.gcd(&BigInt::from(ci)) != BigInt::one() {
        return Err(CountError::Precondition("gcd(D, c) must be 1".into()));
    }
    let n = g.dim();
    let level = g.level();
    let vgv = inv_form_int(g, v);
    let mut total = Cyclotomic::zero();
    for a0 in 0..ci {
        let a = if a0 == 0 { ci } else { a0 };
        let gg = a.gcd(&ci);
        let (at, ct) = (a / gg, ci / gg);
        let ct0 = odd_part(ct).odd;
        let modulus = at * level;
        let ctp = arith::inv_mod(ct.rem_euclid(modulus), modulus).expect("c~ is a unit mod a~N") + shift * modulus;
        let sign = kronecker(at, ct).pow(n as u32) * kronecker_big(d, gg);
        let phase = rat(n as i64 * (1 - ct0), 8)
            + rat(a, ci) * (Rational::new(BigInt::from(ct * ctp - 1), BigInt::from(2)) * &vgv - rat_int(m));
        let term = (c_half_power(gg, n) * Cyclotomic::e(&phase)).scale_int(&BigInt::from(sign));
        total += &term;
    }
    // prefactor c^{n/2 - 1} (D/c)
    let pre = c_half_power(ci, n).scale(&rat(kronecker_big(d, ci) as i64, ci));
    let r = pre * total;
    r.to_bigint().ok_or_else(|| CountError::NonInteger(r.pretty()))
}

/// `N m + v^T G^⊥ v / 2` as an integer.
fn shifted_target(g: &EvenSymMatrix, v: &[i64], m: i64) -> BigInt {
    let gp = g.adjoint_form();
    let n = g.dim();
    let mut s = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            s += BigInt::from(v[i]) * gp[i][j] * v[j];
        }
    }
    BigInt::from(g.level()) * m + s / 2
}

/// Closed count modulo a prime `p ∤ D`.
pub fn count_quadric_prime(g: &EvenSymMatrix, v: &[i64], m: i64, p: u64) -> Result<BigInt, CountError> {
    quadric_vector(g, v)?;
    if !arith::is_prime(p) {
        return Err(CountError::NotPrime(p as i64));
    }
    let pi = p as i64;
    let d = g.det();
    if (d % pi).is_zero() {
        return Err(CountError::Precondition("p divides D".into()));
    }
    let n = g.dim() as u32;
    let pb = BigInt::from(p);
    let target = shifted_target(g, v, m);
    if n % 2 == 0 {
        let main = pb.pow(n - 1);
        let half = pb.pow(n / 2 - 1);
        if p == 2 {
            let sign = if target.is_odd() { -1 } else { 1 };
            return Ok(main + half * (kronecker_big(d, 2) * sign));
        }
        let delta = i64::from((&target % &pb).is_zero());
        let unit = Cyclotomic::e(&rat(n as i64 * (1 - pi), 8)).to_bigint().expect("real unit");
        Ok(main + half * unit * kronecker_big(d, pi) * (delta * pi - 1))
    } else {
        let level = g.level();
        let ninv = arith::inv_mod(level.rem_euclid(pi), pi).map_err(|_| CountError::Precondition("p divides N".into()))?;
        let tm = (target * ninv).mod_floor(&pb).to_i64().unwrap();
        let unit = Cyclotomic::e(&rat((n as i64 + 1) * (1 - pi), 8)).to_bigint().expect("real unit");
        let two_d = d * 2;
        let sign = kronecker_big(&two_d, pi) * kronecker(-tm, pi);
        Ok(pb.pow(n - 1) + pb.pow((n - 1) / 2) * unit * sign)
    }
}

/// Count for the singular binary form `G = [[2 g11, g12], [g12, 2 g22]]` modulo
/// an odd prime `p` dividing `det G` but not `g11`.
pub fn singular_binary_count(g11: i64, g12: i64, g22: i64, v: [i64; 2], m: i64, p: u64) -> Result<i64, CountError> {
    if p == 2 {
        return Err(CountError::Precondition("p must be odd".into()));
    }
    if !arith::is_prime(p) {
        return Err(CountError::NotPrime(p as i64));
    }
    let pi = p as i64;
    let det = 4 * g11 * g22 - g12 * g12;
    if det % pi != 0 || g11 % pi == 0 {
        return Err(CountError::Precondition("need p | det G and p ∤ g11".into()));
    }
    if (g12 * v[0] - 2 * g11 * v[1]) % pi != 0 {
        Ok(pi)
    } else {
        Ok(pi * (1 + kronecker(4 * g11 * m + v[0] * v[0], pi) as i64))
    }
}

/// `#{x mod p : Q(x) + v^T x ≡ m}` for the binary form above, by enumeration.
pub fn singular_binary_brute(g11: i64, g12: i64, g22: i64, v: [i64; 2], m: i64, p: u64) -> u64 {
    let pi = p as i64;
    let mut count = 0;
    for x in 0..pi {
        for y in 0..pi {
            let val = g11 * x * x + g12 * x * y + g22 * y * y + v[0] * x + v[1] * y - m;
            if val.rem_euclid(pi) == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Coefficients of `a11 x² + a22 y² + a33 z² + a12 xy + a13 xz + a23 yz = d xyz`
/// with the derived Gram matrix and adjugate entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkoffCoeffs {
    pub a11: i64,
    pub a22: i64,
    pub a33: i64,
    pub a12: i64,
    pub a13: i64,
    pub a23: i64,
    pub d: i64,
    /// `[[2a11, a12, a13], [a12, 2a22, a23], [a13, a23, 2a33]]`
    pub gram: [[i64; 3]; 3],
    /// Adjugate `A` with `G A = D I`.
    pub adj: [[i64; 3]; 3],
    pub det: i64,
}

pub fn markoff_coeffs(c: [i64; 7]) -> MarkoffCoeffs {
    let [a11, a22, a33, a12, a13, a23, d] = c;
    let gram = [[2 * a11, a12, a13], [a12, 2 * a22, a23], [a13, a23, 2 * a33]];
    let aa11 = 4 * a22 * a33 - a23 * a23;
    let aa22 = 4 * a11 * a33 - a13 * a13;
    let aa33 = 4 * a11 * a22 - a12 * a12;
    let aa12 = -2 * a12 * a33 + a13 * a23;
    let aa13 = a12 * a23 - 2 * a22 * a13;
    let aa23 = -2 * a11 * a23 + a12 * a13;
    let adj = [[aa11, aa12, aa13], [aa12, aa22, aa23], [aa13, aa23, aa33]];
    let det = 2 * a11 * aa11 + a12 * aa12 + a13 * aa13;
    for i in 0..3 {
        for j in 0..3 {
            let s: i64 = (0..3).map(|k| gram[i][k] * adj[k][j]).sum();
            assert_eq!(s, if i == j { det } else { 0 }, "G A = D I");
        }
    }
    // The cofactors of A are D times the entries of G.
    for i in 0..3 {
        for j in 0..3 {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            let cof = adj[r0][c0] * adj[r1][c1] - adj[r0][c1] * adj[r1][c0];
            assert_eq!(cof, det * gram[i][j], "cofactor identity");
        }
    }
    MarkoffCoeffs { a11, a22, a33, a12, a13, a23, d, gram, adj, det }
}

impl MarkoffCoeffs {
    pub fn evaluate(&self, x: i64, y: i64, z: i64) -> i64 {
        self.a11 * x * x + self.a22 * y * y + self.a33 * z * z + self.a12 * x * y + self.a13 * x * z
            + self.a23 * y * z
            - self.d * x * y * z
    }

    pub fn gram_matrix(&self) -> Result<EvenSymMatrix, QformError> {
        make_even_sym(&self.gram.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }
}

/// Affine solutions in `F_p^3`, by enumeration.
pub fn markoff_count_brute(c: &MarkoffCoeffs, p: u64) -> Result<u64, CountError> {
    if !arith::is_prime(p) {
        return Err(CountError::NotPrime(p as i64));
    }
    let pi = p as i64;
    let r = |v: i64| v.rem_euclid(pi);
    let red = MarkoffCoeffs {
        a11: r(c.a11),
        a22: r(c.a22),
        a33: r(c.a33),
        a12: r(c.a12),
        a13: r(c.a13),
        a23: r(c.a23),
        d: r(c.d),
        ..c.clone()
    };
    Ok((0..pi)
        .into_par_iter()
        .map(|z| {
            let mut k = 0u64;
            for x in 0..pi {
                for y in 0..pi {
                    if red.evaluate(x, y, z).rem_euclid(pi) == 0 {
                        k += 1;
                    }
                }
            }
            k
        })
        .sum())
}

/// Which closed formula applies to a Markoff-type count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkoffCase {
    /// `p ∤ D`
    Nonsingular = 1,
    /// `2 < p | D` with at least two `A_jj ≡ 0`
    TwoVanishing = 2,
    /// `2 < p | D` with at most one `A_jj ≡ 0`
    OneVanishing = 3,
    /// `p = 2 | D`
    Even = 4,
}

/// Closed count for a prime `p ∤ a11 a22 a33 d`.
pub fn markoff_count_closed(c: &MarkoffCoeffs, p: u64) -> Result<(i64, MarkoffCase), CountError> {
    if !arith::is_prime(p) {
        return Err(CountError::NotPrime(p as i64));
    }
    let pi = p as i64;
    if (c.a11 * c.a22 * c.a33 * c.d) % pi == 0 {
        return Err(CountError::Precondition("p divides a11 a22 a33 d".into()));
    }
    let leg: Vec<i64> = (0..3).map(|j| kronecker(-c.adj[j][j], pi) as i64).collect();
    let sum: i64 = leg.iter().sum();
    let p2 = pi * pi;
    if c.det % pi != 0 {
        return Ok((p2 + sum * pi + 1, MarkoffCase::Nonsingular));
    }
    if pi == 2 {
        let evens = [c.a12, c.a13, c.a23].iter().filter(|v| *v % 2 == 0).count();
        let value = match evens {
            3 => 5,
            0 => 1,
            _ => 3,
        };
        return Ok((value, MarkoffCase::Even));
    }
    let vanishing = (0..3).filter(|&j| c.adj[j][j] % pi == 0).count();
    if vanishing >= 2 {
        return Ok((p2 + 1, MarkoffCase::TwoVanishing));
    }
    let j = (0..3).find(|&j| c.adj[j][j] % pi != 0).unwrap();
    Ok((p2 + (sum - leg[j]) * pi + 1, MarkoffCase::OneVanishing))
}

/// The classical equation `x² + y² + z² = 3xyz` has `p² + 3 (-1/p) p + 1` points.
pub fn baragar_count(p: u64) -> i64 {
    let pi = p as i64;
    pi * pi + 3 * kronecker(-1, pi) as i64 * pi + 1
}
