//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is stored as `(num_0 + num_1 ζ + … ) / den` with
//! `ζ = e(1/L)` and `L` the conductor. The numerator vector is always reduced
//! modulo the cyclotomic polynomial `Φ_L`, so only the first `φ(L)` slots can
//! be non-zero and two values at the same conductor are equal exactly when
//! their stored data is equal. Conductors congruent to 2 mod 4 are folded to
//! `L/2`, and values that turn out to be rational are stored at conductor 1.

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::LazyLock;
use serde_json::{json, Value};

use crate::arith;

/// Exact rationals used throughout the crate.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("malformed cyclotomic value: {0}")]
    Malformed(String),
}

/// Sparse `Φ_L`: its degree and the non-zero coefficients below the leading term.
struct Phi {
    degree: usize,
    low: Vec<(usize, i64)>,
}

static PHI_CACHE: LazyLock<Mutex<HashMap<u64, Arc<Phi>>>> = LazyLock::new(|| Mutex::new(HashMap::new()));
static SQRT_PRIME_CACHE: LazyLock<Mutex<HashMap<u64, Cyclotomic>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn phi_poly(l: u64) -> Arc<Phi> {
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&l) {
        return p.clone();
    }
    let dense = cyclotomic_dense(l);
    let degree = dense.len() - 1;
    let low = dense[..degree]
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i, i64::try_from(*c).expect("cyclotomic coefficient overflow")))
        .collect();
    let phi = Arc::new(Phi { degree, low });
    PHI_CACHE.lock().unwrap().insert(l, phi.clone());
    phi
}

/// Dense coefficients of `Φ_l`, constant term first.
fn cyclotomic_dense(l: u64) -> Vec<i128> {
    let fac = arith::factor_u64(l);
    let rad: u64 = fac.iter().map(|(p, _)| *p).product();
    let stretch = (l / rad) as usize;
    let primes: Vec<u64> = fac.iter().map(|(p, _)| *p).collect();
    // Φ_rad = ∏_{d | rad} (x^d - 1)^{μ(rad/d)}; multiply first, divide after.
    let mut ups = Vec::new();
    let mut downs = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let mut d = 1u64;
        let mut removed = 0;
        for (i, p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                removed += 1;
            } else {
                d *= p;
            }
        }
        if removed % 2 == 0 {
            ups.push(d as usize);
        } else {
            downs.push(d as usize);
        }
    }
    let mut poly: Vec<i128> = vec![1];
    for d in ups {
        let mut next = vec![0i128; poly.len() + d];
        for (k, c) in poly.iter().enumerate() {
            next[k + d] += c;
            next[k] -= c;
        }
        poly = next;
    }
    for d in downs {
        // poly = q * (x^d - 1)  =>  q_k = q_{k-d} - p_k
        let qlen = poly.len() - d;
        let mut q = vec![0i128; qlen];
        for k in 0..qlen {
            let prev = if k >= d { q[k - d] } else { 0 };
            q[k] = prev - poly[k];
        }
        poly = q;
    }
    if stretch == 1 {
        return poly;
    }
    let mut out = vec![0i128; (poly.len() - 1) * stretch + 1];
    for (k, c) in poly.into_iter().enumerate() {
        out[k * stretch] = c;
    }
    out
}

/// An exact element of `Q(ζ_L)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Cyclotomic { conductor: 1, num: vec![v], den: BigInt::one() }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::build(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// `e(r) = exp(2πi r)`.
    pub fn e(r: &Rational) -> Self {
        let q = r.denom().to_u64().expect("denominator of e(r) too large");
        let p = r.numer().mod_floor(r.denom()).to_u64().unwrap();
        Self::root_of_unity(p, q)
    }

    /// `e(p/q)` for machine integers, `q > 0`.
    pub fn e_frac(p: i64, q: i64) -> Self {
        assert!(q > 0, "e_frac needs a positive denominator");
        Self::root_of_unity(p.rem_euclid(q) as u64, q as u64)
    }

    /// `ζ_l^k`.
    pub fn root_of_unity(k: u64, l: u64) -> Self {
        assert!(l > 0);
        let mut v = vec![BigInt::zero(); l as usize];
        v[(k % l) as usize] = BigInt::one();
        Self::build(l, v, BigInt::one())
    }

    /// `Σ counts[k] ζ_l^k`. This is the natural constructor for brute-force sums.
    pub fn from_counts<T: Copy + Into<i128>>(l: u64, counts: &[T]) -> Self {
        assert_eq!(counts.len() as u64, l);
        let v = counts.iter().map(|c| BigInt::from((*c).into())).collect();
        Self::build(l, v, BigInt::one())
    }

    /// `Σ coeffs[k] ζ_l^k` with arbitrary-precision integer coefficients.
    pub fn from_big_counts(l: u64, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len() as u64, l);
        Self::build(l, coeffs, BigInt::one())
    }

    fn build(l: u64, mut v: Vec<BigInt>, den: BigInt) -> Self {
        assert!(l > 0, "conductor must be positive");
        debug_assert_eq!(v.len() as u64, l);
        let mut l = l;
        if l % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m.
            let m = l / 2;
            let h = (m + 1) / 2;
            let mut w = vec![BigInt::zero(); m as usize];
            for (k, c) in v.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let idx = ((k as u64 * h) % m) as usize;
                if k % 2 == 0 {
                    w[idx] += c;
                } else {
                    w[idx] -= c;
                }
            }
            v = w;
            l = m;
        }
        if l > 1 {
            let phi = phi_poly(l);
            let deg = phi.degree;
            for k in (deg..l as usize).rev() {
                if v[k].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut v[k]);
                for &(j, pj) in &phi.low {
                    v[k - deg + j] -= &c * pj;
                }
            }
        }
        let mut out = Cyclotomic { conductor: l, num: v, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.den /= &g;
            for c in &mut self.num {
                if !c.is_zero() {
                    *c /= &g;
                }
            }
        }
        if self.conductor > 1 && self.num[1..].iter().all(Zero::is_zero) {
            let c0 = std::mem::take(&mut self.num[0]);
            self.num = vec![c0];
            self.conductor = 1;
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.num[0].is_zero()
    }

    /// Non-zero coefficients `(k, q_k)` so that the value is `Σ q_k e(k/L)`.
    pub fn coeffs(&self) -> Vec<(u64, Rational)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u64, Rational::new(c.clone(), self.den.clone())))
            .collect()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.conductor == 1 {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Raw vector at a multiple `m` of the conductor, scaled to denominator `den`.
    fn spread(&self, m: u64, den: &BigInt) -> Vec<BigInt> {
        let step = (m / self.conductor) as usize;
        let scale = den / &self.den;
        let mut v = vec![BigInt::zero(); m as usize];
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[k * step] = c * &scale;
            }
        }
        v
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        let l = self.conductor as usize;
        let mut v = vec![BigInt::zero(); l];
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[(l - k) % l] = c.clone();
            }
        }
        Self::build(self.conductor, v, self.den.clone())
    }

    /// Multiply by `e(k/l)`.
    pub fn mul_root(&self, k: i64, l: u64) -> Self {
        let m = self.conductor.lcm(&l);
        let step = m / self.conductor;
        let shift = (k.rem_euclid(l as i64) as u64) * (m / l);
        let mut v = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[((i as u64 * step + shift) % m) as usize] = c.clone();
            }
        }
        Self::build(m, v, self.den.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::build(self.conductor, num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * k).collect();
        Self::build(self.conductor, num, self.den.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Floating-point value `(re, im)`.
    ///
    /// Each coefficient is converted to `f64` before summation with Neumaier
    /// compensation, so the result carries roughly 15 significant digits
    /// relative to the largest term.
    pub fn approx(&self) -> (f64, f64) {
        let l = self.conductor as f64;
        let mut re = Neumaier::default();
        let mut im = Neumaier::default();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = Rational::new(c.clone(), self.den.clone()).to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / l;
            re.add(q * ang.cos());
            im.add(q * ang.sin());
        }
        (re.value(), im.value())
    }

    /// Squared absolute value `|z|^2 = z · conj(z)`, which lies in the real subfield.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs()
            .into_iter()
            .map(|(k, q)| json!([k, q.to_string()]))
            .collect();
        let (re, im) = self.approx();
        json!({ "conductor": self.conductor, "coeffs": coeffs, "approx": [re, im] })
    }

    pub fn from_json(v: &Value) -> Result<Self, ExactError> {
        let bad = |m: &str| ExactError::Malformed(m.to_string());
        let l = v.get("conductor").and_then(Value::as_u64).ok_or_else(|| bad("conductor"))?;
        if l == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let list = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("coeffs"))?;
        let mut acc = Cyclotomic::zero();
        for item in list {
            let pair = item.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("coeff pair"))?;
            let k = pair[0].as_u64().ok_or_else(|| bad("coeff index"))?;
            let s = pair[1].as_str().ok_or_else(|| bad("coeff value"))?;
            let q = Rational::from_str(s).map_err(|_| bad(s))?;
            acc += &Cyclotomic::root_of_unity(k, l).scale(&q);
        }
        Ok(acc)
    }

    /// Human-readable rendering such as `2·e(1/8) - 1/3·e(3/4) + 5`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut terms = self.coeffs();
        // constant term last reads more naturally
        let lead = usize::from(terms.first().map(|t| t.0 == 0).unwrap_or(false));
        terms.rotate_left(lead);
        for (i, (k, q)) in terms.iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if *k == 0 {
                out.push_str(&mag.to_string());
            } else {
                let f = Rational::new(BigInt::from(*k), BigInt::from(self.conductor));
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('·');
                }
                out.push_str(&format!("e({f})"));
            }
        }
        out
    }
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        (self - other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let den = self.den.lcm(&rhs.den);
        if self.conductor == rhs.conductor {
            let sa = &den / &self.den;
            let sb = &den / &rhs.den;
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a * &sa + b * &sb).collect();
            let mut out = Cyclotomic { conductor: self.conductor, num, den };
            out.normalize();
            return out;
        }
        let m = self.conductor.lcm(&rhs.conductor);
        let mut v = self.spread(m, &den);
        for (x, y) in v.iter_mut().zip(rhs.spread(m, &den)) {
            if !y.is_zero() {
                *x += y;
            }
        }
        Cyclotomic::build(m, v, den)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if self.conductor == 1 {
            return rhs.scale(&Rational::new(self.num[0].clone(), self.den.clone()));
        }
        if rhs.conductor == 1 {
            return self.scale(&Rational::new(rhs.num[0].clone(), rhs.den.clone()));
        }
        let m = self.conductor.lcm(&rhs.conductor);
        let sa = m / self.conductor;
        let sb = m / rhs.conductor;
        let a: Vec<(u64, &BigInt)> = nonzero(&self.num, sa);
        let b: Vec<(u64, &BigInt)> = nonzero(&rhs.num, sb);
        let mut v = vec![BigInt::zero(); m as usize];
        for (i, x) in &a {
            for (j, y) in &b {
                v[((i + j) % m) as usize] += *x * *y;
            }
        }
        Cyclotomic::build(m, v, &self.den * &rhs.den)
    }
}

fn nonzero(v: &[BigInt], step: u64) -> Vec<(u64, &BigInt)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u64 * step, c))
        .collect()
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Cyclotomic {
    fn add_assign(&mut self, rhs: Cyclotomic) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

/// Principal square root of an integer as an exact cyclotomic value.
///
/// Square roots of primes come from the quadratic Gauss sum, so `sqrt_int(m)`
/// has conductor dividing `4|m|` (or `8|m|` when 2 divides the squarefree part).
pub fn sqrt_int(m: i64) -> Cyclotomic {
    if m == 0 {
        return Cyclotomic::zero();
    }
    let mut square = BigInt::one();
    let mut acc = Cyclotomic::one();
    for (p, e) in arith::factor_u64(m.unsigned_abs()) {
        square *= BigInt::from(p).pow(e / 2);
        if e % 2 == 1 {
            acc = &acc * &sqrt_prime(p);
        }
    }
    let mut out = acc.scale_int(&square);
    if m < 0 {
        out = out.mul_root(1, 4);
    }
    out
}

/// `sqrt_int` for arbitrary-precision arguments that fit in an `i64`.
pub fn sqrt_big(m: &BigInt) -> Cyclotomic {
    sqrt_int(m.to_i64().expect("sqrt_big: argument exceeds i64"))
}

/// `1/sqrt(m)` for `m != 0`.
pub fn inv_sqrt_int(m: i64) -> Cyclotomic {
    assert!(m != 0, "inv_sqrt_int(0)");
    sqrt_int(m).scale(&Rational::new(BigInt::one(), BigInt::from(m)))
}

fn sqrt_prime(p: u64) -> Cyclotomic {
    if let Some(v) = SQRT_PRIME_CACHE.lock().unwrap().get(&p) {
        return v.clone();
    }
    let v = if p == 2 {
        &Cyclotomic::root_of_unity(1, 8) + &Cyclotomic::root_of_unity(7, 8)
    } else {
        let mut counts = vec![0i64; p as usize];
        for j in 0..p {
            counts[((j * j) % p) as usize] += 1;
        }
        let g = Cyclotomic::from_counts(p, &counts);
        if p % 4 == 3 {
            g.mul_root(-1, 4)
        } else {
            g
        }
    };
    SQRT_PRIME_CACHE.lock().unwrap().insert(p, v.clone());
    v
}

/// Convenience constructor for rationals from machine integers.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a `BigInt`.
pub fn rat_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}
