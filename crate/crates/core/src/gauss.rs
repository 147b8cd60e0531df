//! Quadratic Gauss sums: brute-force enumeration and closed forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{self, kronecker, kronecker_big, kronecker_i128, odd_part};
use crate::exactnum::{inv_sqrt_int, rat, rat_int, sqrt_big, sqrt_int, Cyclotomic, Rational};
use crate::qform::{
    common_denominator, is_integral, zero_vec, EvenSymMatrix, FiniteQuadraticModule,
    Indecomposable,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    #[error("modulus c must be positive, got {0}")]
    BadModulus(i64),
    #[error("a = {a} and c = {c} are not coprime")]
    NotCoprime { a: i64, c: i64 },
    #[error("level {level} is not coprime to c = {c}")]
    LevelNotCoprime { level: i64, c: i64 },
    #[error("level {level} does not divide c = {c}")]
    LevelNotDividing { level: i64, c: i64 },
    #[error("this closed form needs a positive definite matrix")]
    Indefinite,
    #[error("parameters are not integral-parametric: {0}")]
    NotIntegralParametric(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Parameters of `𝔊_G(r, t; w, x) = Σ_{0 <= v_j < t_j} e(r (Q(v + w) + (v + w)^T x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussSpec {
    pub g: EvenSymMatrix,
    pub a: i64,
    pub c: i64,
    pub t: Vec<u64>,
    pub w: Vec<Rational>,
    pub x: Vec<Rational>,
}

impl GaussSpec {
    /// `r = a/c`, `t = (c, …, c)`, `w = x = 0`.
    pub fn new(g: &EvenSymMatrix, a: i64, c: i64) -> Result<Self, GaussError> {
        if c <= 0 {
            return Err(GaussError::BadModulus(c));
        }
        let n = g.dim();
        Ok(GaussSpec { g: g.clone(), a, c, t: vec![c as u64; n], w: zero_vec(n), x: zero_vec(n) })
    }

    pub fn with_w(mut self, w: Vec<Rational>) -> Result<Self, GaussError> {
        if w.len() != self.g.dim() {
            return Err(GaussError::Dimension(format!("w has length {}", w.len())));
        }
        self.w = w;
        Ok(self)
    }

    pub fn with_x(mut self, x: Vec<Rational>) -> Result<Self, GaussError> {
        if x.len() != self.g.dim() {
            return Err(GaussError::Dimension(format!("x has length {}", x.len())));
        }
        self.x = x;
        Ok(self)
    }

    pub fn with_t(mut self, t: Vec<u64>) -> Result<Self, GaussError> {
        if t.len() != self.g.dim() || t.contains(&0) {
            return Err(GaussError::Dimension("t must have one positive entry per coordinate".into()));
        }
        self.t = t;
        Ok(self)
    }

    pub fn r(&self) -> Rational {
        rat(self.a, self.c)
    }

    /// `r t ∈ Z^n`, `G w ∈ Z^n` and `a x ∈ Z^n`, where `a/c` is `r` in lowest terms.
    pub fn integral_parametric(&self) -> bool {
        let r = self.r();
        let a = rat_int(r.numer().clone());
        self.t.iter().all(|t| (&r * rat_int(*t)).is_integer())
            && self.g.maps_to_integers(&self.w)
            && self.x.iter().all(|x| (x * &a).is_integer())
    }
}

/// Counts of `E(t) mod modulus` over the box `0 <= t_j < dims[j]`, where
/// `E(t) = t^T A t / 2 + b·t + k` and `A` is symmetric with even diagonal.
///
/// The outermost coordinate is split across the rayon pool; the counts are
/// exact integers, so the result does not depend on the thread count.
pub fn quad_counts(a: &[Vec<i128>], b: &[i128], k: i128, dims: &[u64], modulus: u64) -> Vec<u64> {
    let l = modulus as i128;
    let n = dims.len();
    let mut counts = vec![0u64; modulus as usize];
    if n == 0 {
        counts[k.rem_euclid(l) as usize] += 1;
        return counts;
    }
    let halves: Vec<i128> = (0..n).map(|i| (a[i][i] / 2).rem_euclid(l)).collect();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|x| x.rem_euclid(l)).collect()).collect();
    let b: Vec<i128> = b.iter().map(|x| x.rem_euclid(l)).collect();
    let last = n - 1;
    let half_diag = |i: usize| halves[i];
    let inner = |prefix: &[u64], acc: &mut Vec<u64>| {
        // E restricted to the prefix, and the linear coefficient of the last coordinate
        let mut base = k;
        let mut lin = b[last];
        for i in 0..last {
            let ti = prefix[i] as i128;
            if ti == 0 {
                continue;
            }
            base += b[i] * ti + half_diag(i) * ti % l * ti;
            for j in 0..i {
                base += a[i][j] * ti % l * prefix[j] as i128;
            }
            lin += a[last][i] * ti;
            base %= l;
            lin %= l;
        }
        let q = half_diag(last);
        let mut e = base.rem_euclid(l);
        let mut d = (lin + q) % l;
        let step = (2 * q) % l;
        for _ in 0..dims[last] {
            acc[e as usize] += 1;
            e += d;
            if e >= l {
                e -= l;
            }
            d += step;
            if d >= l {
                d -= l;
            }
        }
    };
    let walk = |first: u64, acc: &mut Vec<u64>| {
        let mut prefix = vec![0u64; last];
        if last > 0 {
            prefix[0] = first;
        }
        loop {
            inner(&prefix, acc);
            // odometer over coordinates 1..last
            let mut i = last;
            loop {
                if i <= 1 {
                    return;
                }
                i -= 1;
                prefix[i] += 1;
                if prefix[i] < dims[i] {
                    break;
                }
                prefix[i] = 0;
            }
        }
    };
    if n == 1 {
        walk(0, &mut counts);
        return counts;
    }
    (0..dims[0])
        .into_par_iter()
        .fold(
            || vec![0u64; modulus as usize],
            |mut acc, first| {
                walk(first, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![0u64; modulus as usize],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        )
}

fn to_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("value exceeds i128")
}

/// Direct evaluation of `𝔊_G(r, t; w, x)`.
pub fn brute_gauss(spec: &GaussSpec) -> Cyclotomic {
    let g = &spec.g;
    let n = g.dim();
    let r = spec.r();
    let (rn, rd) = (r.numer().clone(), r.denom().clone());
    let wden = common_denominator(&spec.w);
    let xden = common_denominator(&spec.x);
    let u0: Vec<BigInt> = spec.w.iter().map(|v| (v * rat_int(wden.clone())).to_integer()).collect();
    let y: Vec<BigInt> = spec.x.iter().map(|v| (v * rat_int(xden.clone())).to_integer()).collect();
    let gu0: Vec<BigInt> = (0..n)
        .map(|i| (0..n).fold(BigInt::zero(), |acc, j| acc + BigInt::from(g.entry(i, j)) * &u0[j]))
        .collect();
    let w2 = &wden * &wden;
    let modulus = &rd * &w2 * &xden;
    let qa: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| to_i128(&(&rn * &xden * &w2 * g.entry(i, j)).mod_floor(&(&modulus * 2)))).collect())
        .collect();
    let lin: Vec<i128> = (0..n)
        .map(|i| to_i128(&(&rn * (&xden * &wden * &gu0[i] + &w2 * &y[i])).mod_floor(&modulus)))
        .collect();
    let half_u0gu0: BigInt = u0.iter().zip(&gu0).fold(BigInt::zero(), |acc: BigInt, (a, b)| acc + a * b) / 2;
    let u0y: BigInt = u0.iter().zip(&y).fold(BigInt::zero(), |acc: BigInt, (a, b)| acc + a * b);
    let k = to_i128(&(&rn * (&xden * half_u0gu0 + &wden * u0y)).mod_floor(&modulus));
    let modulus = modulus.to_u64().expect("modulus too large");
    let counts = quad_counts(&qa, &lin, k, &spec.t, modulus);
    Cyclotomic::from_counts(modulus, &counts)
}

/// `𝔊(r, t) = (∏ t_j / c^n) · 𝔊(r; c)` for integral-parametric input.
pub fn scale_t_to_c(spec: &GaussSpec) -> Result<Cyclotomic, GaussError> {
    if !spec.integral_parametric() {
        return Err(GaussError::NotIntegralParametric("t-to-c reduction".into()));
    }
    let c = spec.r().denom().to_u64().unwrap();
    let n = spec.g.dim();
    let mut reduced = spec.clone();
    reduced.t = vec![c; n];
    let num: BigInt = spec.t.iter().fold(BigInt::one(), |acc, t| acc * BigInt::from(*t));
    let den = BigInt::from(c).pow(n as u32);
    Ok(brute_gauss(&reduced).scale(&Rational::new(num, den)))
}

/// `c^{n/2}` for `c > 0`.
pub fn c_half_power(c: i64, n: usize) -> Cyclotomic {
    let int_part = Cyclotomic::from_bigint(BigInt::from(c).pow((n / 2) as u32));
    if n % 2 == 1 {
        &int_part * &sqrt_int(c)
    } else {
        int_part
    }
}

fn check_common(g: &EvenSymMatrix, a: i64, c: i64, w: &[Rational], x: &[Rational]) -> Result<(), GaussError> {
    if c <= 0 {
        return Err(GaussError::BadModulus(c));
    }
    if a.gcd(&c) != 1 {
        return Err(GaussError::NotCoprime { a, c });
    }
    if w.len() != g.dim() || x.len() != g.dim() {
        return Err(GaussError::Dimension("w and x must match the matrix".into()));
    }
    if !g.maps_to_integers(w) {
        return Err(GaussError::NotIntegralParametric("G w is not integral".into()));
    }
    if !x.iter().all(|v| (v * rat_int(a)).is_integer()) {
        return Err(GaussError::NotIntegralParametric("a x is not integral".into()));
    }
    Ok(())
}

/// Closed form of `𝔊_G(a/c; w, x)` when `gcd(N, c) = 1`. Works for indefinite `G`.
pub fn closed_gauss_coprime(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    x: &[Rational],
) -> Result<Cyclotomic, GaussError> {
    check_common(g, a, c, w, x)?;
    if a == 0 {
        return Err(GaussError::Unsupported("a = 0 with gcd(N, c) = 1".into()));
    }
    let level = g.level();
    if level.gcd(&c) != 1 {
        return Err(GaussError::LevelNotCoprime { level, c });
    }
    let n = g.dim();
    let sign = kronecker(a.abs(), c).pow(n as u32) * kronecker_big(g.det(), c);
    let c0 = odd_part(c).odd;
    let n_i = n as i64;
    let m = (a.unsigned_abs() as i128 * level as i128) as i64;
    let c_inv = arith::inv_mod(c.rem_euclid(m), m).expect("c is a unit mod |a|N");
    let ginv_x = g.apply_inv(x);
    let shifted: Vec<Rational> = w.iter().zip(&ginv_x).map(|(p, q)| p + q).collect();
    let phase = -(rat(a, 2 * c) * g.inv_form(x)) + rat_int(a) * rat_int(c_inv) * g.quad(&shifted)
        + rat(n_i * a.signum() * (1 - c0), 8);
    Ok((c_half_power(c, n) * Cyclotomic::e(&phase)).scale_int(&BigInt::from(sign)))
}

/// The root-of-unity factor `μ_G(a, c)` used when `N | c`.
pub fn mu_g(g: &EvenSymMatrix, a: i64, c: i64) -> Cyclotomic {
    let n = g.dim() as u32;
    let d = g.det();
    if a % 2 != 0 {
        let s = kronecker(-a.signum() * c, a.abs()).pow(n) * kronecker_big(d, a);
        Cyclotomic::e(&rat(n as i64 * a.signum() * (1 - a), 8)).scale_int(&BigInt::from(s))
    } else {
        Cyclotomic::from_integer(kronecker_i128(a as i128, to_i128(d)) as i64)
    }
}

/// Closed form of `𝔊_G(a/c; w, x)` for positive definite `G` and `N | c`.
pub fn closed_gauss_divides(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    x: &[Rational],
) -> Result<Cyclotomic, GaussError> {
    check_common(g, a, c, w, x)?;
    if !g.is_positive_definite() {
        return Err(GaussError::Indefinite);
    }
    let level = g.level();
    if c % level != 0 {
        return Err(GaussError::LevelNotDividing { level, c });
    }
    let ginv_x = g.apply_inv(x);
    let delta = w.iter().zip(&ginv_x).all(|(p, q)| ((p + q) * rat_int(a)).is_integer());
    if !delta {
        return Ok(Cyclotomic::zero());
    }
    let n = g.dim();
    let m = c * level;
    let a_inv = arith::inv_mod(a.rem_euclid(m), m).expect("a is a unit mod cN");
    let phase = -(rat_int(a_inv) * rat_int(a) * rat_int(a) * g.inv_form(x) / rat_int(2 * c))
        + rat(n as i64, 8);
    Ok(c_half_power(c, n) * sqrt_big(g.det()) * mu_g(g, a, c) * Cyclotomic::e(&phase))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Auto,
    Coprime,
    Divides,
}

/// Closed evaluation of a full [`GaussSpec`] through the `t → c` reduction.
pub fn closed_gauss(spec: &GaussSpec, branch: Branch) -> Result<Cyclotomic, GaussError> {
    if !spec.integral_parametric() {
        return Err(GaussError::NotIntegralParametric("closed form".into()));
    }
    let (a, c) = (spec.a / spec.a.gcd(&spec.c), spec.c / spec.a.gcd(&spec.c));
    let level = spec.g.level();
    let chosen = match branch {
        Branch::Auto if level.gcd(&c) == 1 => Branch::Coprime,
        Branch::Auto if c % level == 0 => Branch::Divides,
        Branch::Auto => {
            return Err(GaussError::Unsupported(format!(
                "no closed form when gcd(N, c) is neither 1 nor N (N = {level}, c = {c})"
            )))
        }
        b => b,
    };
    let base = match chosen {
        Branch::Coprime => closed_gauss_coprime(&spec.g, a, c, &spec.w, &spec.x)?,
        _ => closed_gauss_divides(&spec.g, a, c, &spec.w, &spec.x)?,
    };
    let n = spec.g.dim() as u32;
    let num: BigInt = spec.t.iter().fold(BigInt::one(), |acc, t| acc * BigInt::from(*t));
    Ok(base.scale(&Rational::new(num, BigInt::from(c).pow(n))))
}

/// Number of `y` with `c y = 0` in the module.
pub fn torsion_size(m: &FiniteQuadraticModule, c: i64) -> u128 {
    m.orders.iter().map(|&e| c.unsigned_abs().gcd(&e) as u128).product()
}

/// Unnormalised `Σ_y e(c Q(y) + B(x, y))`.
pub fn fqm_gauss_raw(m: &FiniteQuadraticModule, c: i64, x: &[i64]) -> Cyclotomic {
    let (l, gram) = m.scaled_gram();
    let k = m.orders.len();
    let lin: Vec<i128> = (0..k).map(|j| (0..k).map(|i| 2 * gram[i][j] as i128 * x[i] as i128).sum()).collect();
    let qa: Vec<Vec<i128>> =
        gram.iter().map(|r| r.iter().map(|v| 2 * c as i128 * *v as i128).collect()).collect();
    let counts = quad_counts(&qa, &lin, 0, &m.orders, l as u64);
    Cyclotomic::from_counts(l as u64, &counts)
}

/// `𝒢_M(c, x) = (|M| |M[c]|)^{-1/2} Σ_y e(c Q(y) + B(x, y))`.
pub fn fqm_gauss(m: &FiniteQuadraticModule, c: i64, x: &[i64]) -> Cyclotomic {
    let kernel = (0..m.size())
        .filter(|&i| {
            let y = m.coords(i);
            y.iter().zip(&m.orders).all(|(v, e)| (c as i128 * *v as i128).rem_euclid(*e as i128) == 0)
        })
        .count() as u128;
    debug_assert_eq!(kernel, torsion_size(m, c));
    let norm = (m.size() * kernel) as i64;
    fqm_gauss_raw(m, c, x) * inv_sqrt_int(norm)
}

/// `𝒢_M(c, 0)` for an indecomposable module, in closed form.
pub fn fqm_gauss_indecomposable_closed(kind: Indecomposable, c: i64) -> Cyclotomic {
    match kind {
        Indecomposable::AOdd { p, r, a } => {
            let q = p.pow(r) as i64;
            let g = q.gcd(&c);
            let s = kronecker(2 * a * (c / g), q / g);
            Cyclotomic::e(&rat(1 - q / g, 8)).scale_int(&BigInt::from(s))
        }
        Indecomposable::ATwo { r, a } => {
            let q = 1i64 << r;
            if c % (2 * q) == 0 {
                Cyclotomic::one()
            } else if c % q == 0 {
                Cyclotomic::zero()
            } else {
                let g = q.gcd(&c);
                let ac = a * (c / g);
                Cyclotomic::e(&rat(ac, 8)).scale_int(&BigInt::from(kronecker(ac, q / g)))
            }
        }
        Indecomposable::B { r } => {
            let q = 1i64 << r;
            Cyclotomic::from_integer(kronecker(3, q / q.gcd(&c)) as i64)
        }
        Indecomposable::C { .. } => Cyclotomic::one(),
    }
}

/// `Σ_{v ∈ L♯/L} e(c Q(v))` by enumeration of the discriminant group.
pub fn discriminant_sum(g: &EvenSymMatrix, c: i64) -> Cyclotomic {
    fqm_gauss_raw(&g.discriminant().fqm(), c, &vec![0; g.discriminant().invariants().len()])
}

/// `√|D| (|D|/c) e(σ c_0 / 8)` for `gcd(c, D) = 1`, with `c_0` the signed odd part of `c`.
pub fn milgram_value(abs_d: u64, sigma: i64, c: i64) -> Result<Cyclotomic, GaussError> {
    if c == 0 || (abs_d as i64).gcd(&c) != 1 {
        return Err(GaussError::NotCoprime { a: abs_d as i64, c });
    }
    let c0 = odd_part(c).odd;
    let s = kronecker(abs_d as i64, c);
    Ok((sqrt_int(abs_d as i64) * Cyclotomic::e(&rat(sigma * c0, 8))).scale_int(&BigInt::from(s)))
}

pub fn milgram_extended(g: &EvenSymMatrix, c: i64) -> Result<Cyclotomic, GaussError> {
    milgram_value(g.det().abs().to_u64().unwrap(), g.signature(), c)
}

/// `𝔊_L(b/d; w) = |d|^{-n/2} Σ_{v ∈ Z^n/dZ^n} e((b/d) Q(w + v))`.
pub fn lattice_gauss_brute(g: &EvenSymMatrix, b: i64, d: i64, w: &[Rational]) -> Result<Cyclotomic, GaussError> {
    if d == 0 {
        return Err(GaussError::BadModulus(d));
    }
    if !g.maps_to_integers(w) {
        return Err(GaussError::NotIntegralParametric("w must lie in the dual lattice".into()));
    }
    let n = g.dim();
    let (bb, dd) = if d < 0 { (-b, -d) } else { (b, d) };
    let spec = GaussSpec::new(g, bb, dd)?.with_w(w.to_vec())?;
    let raw = brute_gauss(&spec);
    let mut norm = Cyclotomic::from_rational(&Rational::new(BigInt::one(), BigInt::from(dd).pow((n / 2) as u32)));
    if n % 2 == 1 {
        norm = norm * inv_sqrt_int(dd);
    }
    Ok(raw * norm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeBranch {
    Auto,
    /// `N | d`, `b = ±1`
    DividesLevel,
    /// `gcd(N, d) = 1`
    CoprimeLevel,
}

/// Closed forms of `𝔊_L(b/d; 0)`.
pub fn lattice_gauss_closed(g: &EvenSymMatrix, b: i64, d: i64, branch: LatticeBranch) -> Result<Cyclotomic, GaussError> {
    if d == 0 {
        return Err(GaussError::BadModulus(d));
    }
    if b.gcd(&d) != 1 {
        return Err(GaussError::NotCoprime { a: b, c: d });
    }
    let level = g.level();
    let sigma = g.signature();
    let abs_d = g.det().abs();
    let chosen = match branch {
        LatticeBranch::Auto if level.gcd(&d) == 1 => LatticeBranch::CoprimeLevel,
        LatticeBranch::Auto if d % level == 0 => LatticeBranch::DividesLevel,
        LatticeBranch::Auto => {
            return Err(GaussError::Unsupported("gcd(N, d) is neither 1 nor N".into()))
        }
        other => other,
    };
    match chosen {
        LatticeBranch::DividesLevel => {
            if d % level != 0 {
                return Err(GaussError::LevelNotDividing { level, c: d });
            }
            if b.abs() != 1 {
                return Err(GaussError::Unsupported("the N | d closed form needs b = ±1".into()));
            }
            Ok(sqrt_big(&abs_d) * Cyclotomic::e(&rat(sigma * (b * d).signum(), 8)))
        }
        _ => {
            if level.gcd(&d) != 1 {
                return Err(GaussError::LevelNotCoprime { level, c: d });
            }
            let d0 = odd_part(d).odd;
            let top = BigInt::from(b.abs()).pow(g.dim() as u32) * abs_d;
            let s = kronecker_big(&top, d);
            Ok(Cyclotomic::e(&rat(sigma * b.signum() * (d.signum() - d0), 8)).scale_int(&BigInt::from(s)))
        }
    }
}

/// `true` when `v` is integral after multiplying by `a`.
pub fn scaled_integral(v: &[Rational], a: i64) -> bool {
    is_integral(&v.iter().map(|x| x * rat_int(a)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qform::{an_matrix, fqm_indecomposable, hyperbolic_plane, make_even_sym};

    fn two() -> EvenSymMatrix {
        make_even_sym(&[vec![2]]).unwrap()
    }

    #[test]
    fn spec_examples() {
        let g = two();
        assert_eq!(brute_gauss(&GaussSpec::new(&g, 1, 5).unwrap()), sqrt_int(5));
        assert_eq!(brute_gauss(&GaussSpec::new(&hyperbolic_plane(), 1, 3).unwrap()), Cyclotomic::from_integer(3));
        let half = vec![rat(1, 2)];
        assert_eq!(brute_gauss(&GaussSpec::new(&g, 1, 3).unwrap().with_w(half.clone()).unwrap()), sqrt_int(3));
        assert_eq!(brute_gauss(&GaussSpec::new(&an_matrix(2), 1, 5).unwrap()), Cyclotomic::from_integer(-5));
        let want = sqrt_int(8) * Cyclotomic::e_frac(1, 8);
        assert_eq!(brute_gauss(&GaussSpec::new(&g, 1, 4).unwrap()), want);
        assert!(brute_gauss(&GaussSpec::new(&g, 1, 4).unwrap().with_w(half).unwrap()).is_zero());
    }

    #[test]
    fn closed_forms_on_examples() {
        let g = two();
        let z = zero_vec(1);
        assert_eq!(closed_gauss_coprime(&g, 1, 5, &z, &z).unwrap(), sqrt_int(5));
        assert_eq!(closed_gauss_divides(&g, 1, 4, &z, &z).unwrap(), sqrt_int(8) * Cyclotomic::e_frac(1, 8));
        let a2 = an_matrix(2);
        let z2 = zero_vec(2);
        assert_eq!(closed_gauss_coprime(&a2, 1, 5, &z2, &z2).unwrap(), Cyclotomic::from_integer(-5));
        assert_eq!(closed_gauss_divides(&hyperbolic_plane(), 1, 3, &z2, &z2), Err(GaussError::Indefinite));
    }

    #[test]
    fn fqm_examples() {
        let m = an_matrix(2).discriminant().fqm();
        assert_eq!(fqm_gauss(&m, 1, &[0]), Cyclotomic::e_frac(1, 4));
        let a = fqm_indecomposable(Indecomposable::ATwo { r: 1, a: 1 }).unwrap();
        assert!(fqm_gauss(&a, 2, &[0]).is_zero());
        assert_eq!(fqm_gauss(&a, 4, &[0]), Cyclotomic::one());
    }

    #[test]
    fn milgram_examples() {
        let g = two();
        assert_eq!(milgram_extended(&g, 1).unwrap(), sqrt_int(2) * Cyclotomic::e_frac(1, 8));
        assert_eq!(milgram_extended(&g, 3).unwrap(), sqrt_int(2) * Cyclotomic::e_frac(7, 8));
        assert_eq!(discriminant_sum(&g, 3), milgram_extended(&g, 3).unwrap());
    }

    #[test]
    fn lattice_examples() {
        let g = two();
        assert_eq!(lattice_gauss_closed(&g, 1, 5, LatticeBranch::Auto).unwrap(), Cyclotomic::one());
        assert_eq!(
            lattice_gauss_closed(&g, 1, 4, LatticeBranch::Auto).unwrap(),
            sqrt_int(2) * Cyclotomic::e_frac(1, 8)
        );
        assert_eq!(lattice_gauss_brute(&g, 1, 5, &zero_vec(1)).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn t_to_c_scaling() {
        let spec = GaussSpec::new(&two(), 1, 3).unwrap().with_t(vec![9]).unwrap();
        assert_eq!(brute_gauss(&spec), scale_t_to_c(&spec).unwrap());
    }
}
