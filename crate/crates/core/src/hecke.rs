//! Hecke Gauss sums over quadratic fields and prime cyclotomic fields, expressed
//! through matrix Gauss sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, kronecker_big, odd_part};
use crate::exactnum::{rat_int, Cyclotomic, Rational};
use crate::gauss::{brute_gauss, closed_gauss_coprime, GaussError, GaussSpec};
use crate::qform::{make_even_sym, zero_vec, EvenSymMatrix, QformError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("norm of the denominator ideal is not determined by the coprime norm formula; unsupported")]
    Unsupported,
    #[error("enumeration budget exceeded: {needed} > {cap}")]
    Budget { needed: u128, cap: u128 },
    #[error(transparent)]
    Gauss(#[from] GaussError),
    #[error(transparent)]
    Qform(#[from] QformError),
}

/// Which evaluator produced a Hecke Gauss sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeckeRoute {
    Closed,
    Brute,
}

#[derive(Debug, Clone)]
pub struct HeckeValue {
    pub value: Cyclotomic,
    pub route: HeckeRoute,
}

/// `ω = (v0 + v1 √d) / c1` in `Q(√d)` with the derived matrix data.
#[derive(Debug, Clone)]
pub struct QuadHeckeSpec {
    pub d: i64,
    pub v0: i64,
    pub v1: i64,
    pub c1: i64,
    pub a1: i64,
    pub a: i64,
    pub c: i64,
    pub g: EvenSymMatrix,
    /// Field discriminant.
    pub disc: i64,
}

impl QuadHeckeSpec {
    pub fn new(d: i64, v0: i64, v1: i64, c1: i64) -> Result<Self, HeckeError> {
        if d == 0 || d == 1 || !arith::is_squarefree(d.abs()) {
            return Err(HeckeError::Invalid(format!("d = {d} must be square-free and not 0 or 1")));
        }
        if c1 < 1 {
            return Err(HeckeError::Invalid("c1 must be positive".into()));
        }
        if v0 == 0 && v1 == 0 {
            return Err(HeckeError::Invalid("omega must be nonzero".into()));
        }
        if c1.gcd(&v0).gcd(&v1) != 1 {
            return Err(HeckeError::Invalid("gcd(c1, v0, v1) must be 1".into()));
        }
        let one_mod_four = d.rem_euclid(4) == 1;
        let (a1, rows, disc) = if one_mod_four {
            let a1 = (2 * v0).gcd(&(2 * v1 * d)).gcd(&(v0 + v1 * d));
            let rows = vec![
                vec![4 * v0 / a1, 2 * (v0 + v1 * d) / a1],
                vec![2 * (v0 + v1 * d) / a1, (v0 * d + v0 + 2 * v1 * d) / a1],
            ];
            (a1, rows, d)
        } else {
            let a1 = (2 * v0).gcd(&(4 * v1 * d));
            let rows = vec![vec![4 * v0 / a1, 4 * v1 * d / a1], vec![4 * v1 * d / a1, 4 * v0 * d / a1]];
            (a1, rows, 4 * d)
        };
        assert!(a1 != 0, "a1 vanishes only for omega = 0");
        let g = make_even_sym(&rows)?;
        let gg = a1.gcd(&c1);
        Ok(QuadHeckeSpec { d, v0, v1, c1, a1, a: a1 / gg, c: c1 / gg, g, disc })
    }

    /// `N(v0 + v1 √d)`.
    pub fn numerator_norm(&self) -> i64 {
        self.v0 * self.v0 - self.v1 * self.v1 * self.d
    }

    fn require_norm_regime(&self) -> Result<(), HeckeError> {
        if self.c1.gcd(&self.numerator_norm()) != 1 {
            return Err(HeckeError::Unsupported);
        }
        Ok(())
    }

    /// `(c1, a1)^2 / (c1^2, Δ)`.
    fn prefactor(&self) -> Rational {
        let g = self.c1.gcd(&self.a1);
        Rational::new(BigInt::from(g * g), BigInt::from((self.c1 * self.c1).gcd(&self.disc)))
    }
}

/// `𝔊_G(a/c; 0)`, closed when `gcd(c, det G) = 1`, otherwise by enumeration.
fn matrix_sum(g: &EvenSymMatrix, a: i64, c: i64) -> Result<HeckeValue, HeckeError> {
    let n = g.dim();
    if g.det().gcd(&BigInt::from(c)).is_one() {
        let z = zero_vec(n);
        let value = closed_gauss_coprime(g, a, c, &z, &z)?;
        Ok(HeckeValue { value, route: HeckeRoute::Closed })
    } else {
        Ok(HeckeValue { value: brute_gauss(&GaussSpec::new(g, a, c)?), route: HeckeRoute::Brute })
    }
}

/// `C(ω)` for `ω ∈ Q(√d)` in the regime `gcd(c1, v0² − v1² d) = 1`.
pub fn hecke_quadratic(spec: &QuadHeckeSpec) -> Result<HeckeValue, HeckeError> {
    spec.require_norm_regime()?;
    let inner = matrix_sum(&spec.g, spec.a, spec.c)?;
    Ok(HeckeValue { value: inner.value.scale(&spec.prefactor()), route: inner.route })
}

/// Fully explicit value, available when `gcd(c, det G) = 1`.
pub fn hecke_quadratic_explicit(spec: &QuadHeckeSpec) -> Result<Rational, HeckeError> {
    spec.require_norm_regime()?;
    let det = BigInt::from(4 * spec.disc * spec.numerator_norm()) / BigInt::from(spec.a1 * spec.a1);
    if !det.gcd(&BigInt::from(spec.c)).is_one() {
        return Err(HeckeError::Invalid("gcd(c, det G) must be 1".into()));
    }
    let c0 = odd_part(spec.c).odd;
    let sign = if ((1 - c0) / 2).is_odd() { -1 } else { 1 };
    let norm_a = Rational::new(BigInt::from(spec.c1 * spec.c1), BigInt::from((spec.c1 * spec.c1).gcd(&spec.disc)));
    Ok(norm_a / rat_int(spec.c) * rat_int(sign * kronecker_big(&det, spec.c) as i64))
}

/// `C(ω)` by summing `e(tr(μ² ω))` over `μ ∈ O / c1 O` and dividing by `|𝔞 / c1 O|`.
pub fn hecke_quadratic_brute(spec: &QuadHeckeSpec, cap: u128) -> Result<Cyclotomic, HeckeError> {
    spec.require_norm_regime()?;
    let c1 = spec.c1;
    let needed = (c1 as u128) * (c1 as u128);
    if needed > cap {
        return Err(HeckeError::Budget { needed, cap });
    }
    let d = spec.d;
    let one_mod_four = d.rem_euclid(4) == 1;
    // μ = (p + q √d) / 2, and tr(μ² ω) = ((p² + d q²) v0 + 2 p q d v1) / (2 c1).
    let l = 2 * c1;
    let mut counts = vec![0i64; l as usize];
    for x in 0..c1 {
        for y in 0..c1 {
            let (p, q) = if one_mod_four { (2 * x + y, y) } else { (2 * x, 2 * y) };
            let num = ((p * p + d * q * q) * spec.v0 + 2 * p * q * d * spec.v1) as i128;
            let k = num.rem_euclid(l as i128) as usize;
            counts[k] += 1;
        }
    }
    let total = Cyclotomic::from_counts(l as u64, &counts);
    let index = (c1 * c1).gcd(&spec.disc);
    Ok(total.scale(&Rational::new(BigInt::one(), BigInt::from(index))))
}

/// `ω = c1⁻¹ Σ v_k ζ_p^k` in `Q(ζ_p)` with the derived matrix data.
#[derive(Debug, Clone)]
pub struct CycHeckeSpec {
    pub p: u64,
    pub v: Vec<i64>,
    pub c1: i64,
    pub a1: i64,
    pub a: i64,
    pub c: i64,
    pub g: EvenSymMatrix,
    /// `N(Σ v_k ζ_p^k)`
    pub norm: BigInt,
}

/// `T_k[i1, i2] = p − 1` if `i1 + i2 ≡ −k mod p`, else `−1`; indices start at 1.
pub fn t_matrix(p: u64, k: u64) -> Vec<Vec<i64>> {
    let n = (p - 1) as usize;
    let pi = p as i64;
    (1..=n as i64)
        .map(|i1| {
            (1..=n as i64).map(|i2| if (i1 + i2 + k as i64).rem_euclid(pi) == 0 { pi - 1 } else { -1 }).collect()
        })
        .collect()
}

/// `∏_j f(ζ_p^j)` for `f(x) = Σ v_k x^k`.
pub fn cyclotomic_norm(p: u64, v: &[i64]) -> BigInt {
    let mut prod = Cyclotomic::one();
    for j in 1..p {
        let mut counts = vec![0i64; p as usize];
        for (idx, vk) in v.iter().enumerate() {
            let k = (idx as u64 + 1) * j % p;
            counts[k as usize] += vk;
        }
        prod = prod * Cyclotomic::from_counts(p, &counts);
    }
    prod.to_bigint().expect("the norm is a rational integer")
}

impl CycHeckeSpec {
    pub fn new(p: u64, v: Vec<i64>, c1: i64) -> Result<Self, HeckeError> {
        if p < 3 || !arith::is_prime(p) {
            return Err(HeckeError::Invalid(format!("p = {p} must be an odd prime")));
        }
        let n = (p - 1) as usize;
        if v.len() != n {
            return Err(HeckeError::Invalid(format!("v must have {n} entries")));
        }
        if c1 < 1 {
            return Err(HeckeError::Invalid("c1 must be positive".into()));
        }
        if v.iter().fold(c1, |acc, x| acc.gcd(x)) != 1 {
            return Err(HeckeError::Invalid("gcd(c1, v) must be 1".into()));
        }
        let mut sum = vec![vec![0i64; n]; n];
        for (idx, vk) in v.iter().enumerate() {
            let t = t_matrix(p, idx as u64 + 1);
            for i in 0..n {
                for j in 0..n {
                    sum[i][j] += vk * t[i][j];
                }
            }
        }
        let mut a1 = 0i64;
        for i in 0..n {
            a1 = a1.gcd(&sum[i][i]);
            for j in i + 1..n {
                a1 = a1.gcd(&(2 * sum[i][j]));
            }
        }
        if a1 == 0 {
            return Err(HeckeError::Invalid("omega must be nonzero".into()));
        }
        let rows: Vec<Vec<i64>> = sum.iter().map(|r| r.iter().map(|x| 2 * x / a1).collect()).collect();
        let g = make_even_sym(&rows)?;
        let gg = a1.gcd(&c1);
        let norm = cyclotomic_norm(p, &v);
        Ok(CycHeckeSpec { p, v, c1, a1, a: a1 / gg, c: c1 / gg, g, norm })
    }

    fn require_norm_regime(&self) -> Result<(), HeckeError> {
        if !self.norm.gcd(&BigInt::from(self.c1)).is_one() {
            return Err(HeckeError::Unsupported);
        }
        Ok(())
    }

    fn dim(&self) -> u32 {
        (self.p - 1) as u32
    }

    /// `gcd(c1^{p−1}, p^{p−2})`, the index `|𝔞 / c1 O|`.
    fn index(&self) -> BigInt {
        BigInt::from(self.c1).pow(self.dim()).gcd(&BigInt::from(self.p).pow(self.dim() - 1))
    }
}

/// `C(ω)` for `ω ∈ Q(ζ_p)` when `gcd(c1, N(Σ v_k ζ^k)) = 1`. The matrix sum is
/// closed when `gcd(c, det G) = 1`; otherwise it is enumerated if `c^{p−1} ≤ cap`.
pub fn hecke_cyclotomic(spec: &CycHeckeSpec, cap: u128) -> Result<HeckeValue, HeckeError> {
    spec.require_norm_regime()?;
    let n = spec.dim();
    if !spec.g.det().gcd(&BigInt::from(spec.c)).is_one() {
        let needed = (spec.c as u128).checked_pow(n).unwrap_or(u128::MAX);
        if needed > cap {
            return Err(HeckeError::Budget { needed, cap });
        }
    }
    let inner = matrix_sum(&spec.g, spec.a, spec.c)?;
    let gg = BigInt::from(spec.c1.gcd(&spec.a1)).pow(n);
    Ok(HeckeValue { value: inner.value.scale(&Rational::new(gg, spec.index())), route: inner.route })
}

/// `C(ω)` from the sum over `O / c1 O`, realised as the matrix sum with `t = (c1, …, c1)`.
pub fn hecke_cyclotomic_brute(spec: &CycHeckeSpec, cap: u128) -> Result<Cyclotomic, HeckeError> {
    spec.require_norm_regime()?;
    let n = spec.dim();
    let needed = (spec.c1 as u128).checked_pow(n).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(HeckeError::Budget { needed, cap });
    }
    let gs = GaussSpec::new(&spec.g, spec.a, spec.c)?.with_t(vec![spec.c1 as u64; n as usize])?;
    Ok(brute_gauss(&gs).scale(&Rational::new(BigInt::one(), spec.index())))
}

/// Exponent of the prime `p` in `x`.
pub fn prime_exponent(x: &BigInt, p: u64) -> u32 {
    let mut x = x.abs();
    let pb = BigInt::from(p);
    let mut e = 0;
    while !x.is_zero() && (&x % &pb).is_zero() {
        x /= &pb;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_examples() {
        let s = QuadHeckeSpec::new(2, 1, 0, 3).unwrap();
        assert_eq!(hecke_quadratic(&s).unwrap().value, Cyclotomic::from_integer(3));
        assert_eq!(hecke_quadratic_explicit(&s).unwrap(), rat_int(3));
        assert_eq!(hecke_quadratic_brute(&s, 1000).unwrap(), Cyclotomic::from_integer(3));
        let t = QuadHeckeSpec::new(-1, 1, 0, 1).unwrap();
        assert_eq!(hecke_quadratic_brute(&t, 1000).unwrap(), Cyclotomic::one());
        let u = QuadHeckeSpec::new(5, 1, 0, 2).unwrap();
        assert_eq!(hecke_quadratic_brute(&u, 1000).unwrap(), hecke_quadratic(&u).unwrap().value);
    }

    #[test]
    fn cyclotomic_examples() {
        let s = CycHeckeSpec::new(13, (1..=12).collect(), 37).unwrap();
        assert_eq!((s.a1, s.a, s.c), (13, 13, 37));
        assert_eq!(prime_exponent(s.g.det(), 2), 12);
        assert_eq!(prime_exponent(s.g.det(), 13), 10);
        assert_eq!(s.g.det().abs(), BigInt::from(2).pow(12) * BigInt::from(13).pow(10));
        let v = hecke_cyclotomic(&s, 0).unwrap();
        assert_eq!(v.route, HeckeRoute::Closed);
        assert_eq!(v.value, Cyclotomic::from_bigint(BigInt::from(37).pow(6)));
        let small = CycHeckeSpec::new(3, vec![1, 0], 2).unwrap();
        assert_eq!(hecke_cyclotomic(&small, 1 << 20).unwrap().value, hecke_cyclotomic_brute(&small, 1 << 20).unwrap());
        let trivial = CycHeckeSpec::new(3, vec![1, 1], 1).unwrap();
        assert_eq!(hecke_cyclotomic(&trivial, 1 << 20).unwrap().value, Cyclotomic::one());
    }
}
