//! Gauss sums restricted to subgroups of `(Z/cZ)^n` and their duality.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{self, kronecker, kronecker_big, odd_part};
use crate::exactnum::{rat, rat_int, sqrt_big, Cyclotomic, Rational};
use crate::gauss::{
    brute_gauss, c_half_power, closed_gauss_coprime, closed_gauss_divides, mu_g, GaussError, GaussSpec,
};
use crate::qform::{common_denominator, is_integral, make_even_sym, zero_vec, EvenSymMatrix};

/// Largest subgroup the enumerating routines will materialise.
pub const SUBGROUP_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubsumError {
    #[error("subgroup has more than {SUBGROUP_CAP} elements")]
    TooLarge,
    #[error("modulus must be positive")]
    BadModulus,
    #[error("generator has the wrong length")]
    Dimension,
    #[error("subgroup modulus {0} differs from c = {1}")]
    ModulusMismatch(u64, i64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Gauss(#[from] GaussError),
    #[error("malformed subgroup: {0}")]
    Malformed(String),
}

/// A subgroup of `(Z/cZ)^n` given by generators, with its elements listed in
/// lexicographic order of their representatives in `[0, c)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupModC {
    c: u64,
    n: usize,
    gens: Vec<Vec<i64>>,
    elements: Vec<Vec<i64>>,
}

impl SubgroupModC {
    pub fn generate(c: u64, n: usize, gens: &[Vec<i64>]) -> Result<Self, SubsumError> {
        if c == 0 {
            return Err(SubsumError::BadModulus);
        }
        let ci = c as i64;
        let gens: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| {
                if g.len() != n {
                    Err(SubsumError::Dimension)
                } else {
                    Ok(g.iter().map(|x| x.rem_euclid(ci)).collect())
                }
            })
            .collect::<Result<_, _>>()?;
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        set.insert(vec![0; n]);
        for g in &gens {
            if set.contains(g) {
                continue;
            }
            let current: Vec<Vec<i64>> = set.iter().cloned().collect();
            let mut mult = g.clone();
            while mult.iter().any(|x| *x != 0) {
                for s in &current {
                    set.insert(s.iter().zip(&mult).map(|(a, b)| (a + b) % ci).collect());
                }
                if set.len() > SUBGROUP_CAP {
                    return Err(SubsumError::TooLarge);
                }
                mult = mult.iter().zip(g).map(|(a, b)| (a + b) % ci).collect();
            }
        }
        let mut elements: Vec<Vec<i64>> = set.into_iter().collect();
        elements.sort();
        Ok(SubgroupModC { c, n, gens, elements })
    }

    /// All of `(Z/cZ)^n`.
    pub fn full(c: u64, n: usize) -> Result<Self, SubsumError> {
        let gens: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Self::generate(c, n, &gens)
    }

    pub fn modulus(&self) -> u64 {
        self.c
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Vec<i64>] {
        &self.gens
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let r: Vec<i64> = v.iter().map(|x| x.rem_euclid(self.c as i64)).collect();
        self.elements.binary_search(&r).is_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({ "c": self.c, "gens": self.gens })
    }

    /// Reads `{"c": c, "gens": [[…], …]}`; the dimension is the generator length.
    pub fn from_json(v: &Value, n: usize) -> Result<Self, SubsumError> {
        let c = v.get("c").and_then(Value::as_u64).ok_or_else(|| SubsumError::Malformed("c".into()))?;
        let gens: Vec<Vec<i64>> = v
            .get("gens")
            .and_then(Value::as_array)
            .ok_or_else(|| SubsumError::Malformed("gens".into()))?
            .iter()
            .map(|g| {
                g.as_array()
                    .ok_or_else(|| SubsumError::Malformed("generator".into()))?
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| SubsumError::Malformed("entry".into())))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Self::generate(c, n, &gens)
    }
}

/// `H^⊥ = {v : v^T h ≡ 0 mod c for all h ∈ H}`, computed from the Smith form of
/// the generator matrix.
pub fn orthogonal_complement(h: &SubgroupModC) -> Result<SubgroupModC, SubsumError> {
    let (c, n) = (h.c as i64, h.n);
    if h.gens.is_empty() {
        return SubgroupModC::full(h.c, n);
    }
    let a = arith::int_matrix(&h.gens);
    let (_, s, v) = arith::smith_normal_form(&a);
    let m = h.gens.len();
    let mut gens = Vec::new();
    for i in 0..n {
        let step = if i < m {
            let si = s[i][i].mod_floor(&BigInt::from(c)).to_i64().unwrap();
            c / si.gcd(&c)
        } else {
            1
        };
        gens.push((0..n).map(|r| (&v[r][i] * step).mod_floor(&BigInt::from(c)).to_i64().unwrap()).collect());
    }
    SubgroupModC::generate(h.c, n, &gens)
}

/// `Σ_{v ∈ elems} e(r · (v + s)^T M (v + s) / 2)` for an even symmetric integer `M`.
pub fn shifted_quadratic_sum(m: &[Vec<i64>], r: &Rational, shift: &[Rational], elems: &[Vec<i64>]) -> Cyclotomic {
    let n = m.len();
    let wden = common_denominator(shift);
    let w2 = &wden * &wden;
    let modulus = (r.denom() * &w2).to_u64().expect("modulus too large");
    let scale = r.numer().mod_floor(&BigInt::from(modulus)).to_i128().unwrap();
    let u0: Vec<i128> = shift.iter().map(|x| (x * rat_int(wden.clone())).to_integer().to_i128().unwrap()).collect();
    let wd = wden.to_i128().unwrap();
    let l = modulus as i128;
    let counts = elems
        .par_iter()
        .fold(
            || vec![0u64; modulus as usize],
            |mut acc, v| {
                let u: Vec<i128> = v.iter().zip(&u0).map(|(a, b)| wd * *a as i128 + b).collect();
                let mut q = 0i128;
                for i in 0..n {
                    q += m[i][i] as i128 / 2 * u[i] % (2 * l) * u[i];
                    for j in 0..i {
                        q += m[i][j] as i128 * u[i] % (2 * l) * u[j];
                    }
                    q %= 2 * l;
                }
                acc[(scale * q).rem_euclid(l) as usize] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; modulus as usize],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        );
    Cyclotomic::from_counts(modulus, &counts)
}

fn check_subgroup(g: &EvenSymMatrix, c: i64, h: &SubgroupModC) -> Result<(), SubsumError> {
    if c <= 0 {
        return Err(SubsumError::BadModulus);
    }
    if h.c as i64 != c {
        return Err(SubsumError::ModulusMismatch(h.c, c));
    }
    if h.n != g.dim() {
        return Err(SubsumError::Dimension);
    }
    Ok(())
}

fn check_w(g: &EvenSymMatrix, w: &[Rational]) -> Result<(), SubsumError> {
    if w.len() != g.dim() {
        return Err(SubsumError::Dimension);
    }
    if !g.maps_to_integers(w) {
        return Err(SubsumError::Precondition("G w must be integral".into()));
    }
    Ok(())
}

/// `𝔊^H_G(a/c; w) = Σ_{v ∈ H} e((a/c) Q(v + w))`.
pub fn gauss_subsum_brute(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    h: &SubgroupModC,
) -> Result<Cyclotomic, SubsumError> {
    check_subgroup(g, c, h)?;
    check_w(g, w)?;
    Ok(shifted_quadratic_sum(g.rows(), &rat(a, c), w, &h.elements))
}

/// `a^⊥` with `a^⊥ a N ≡ -1 mod c`, in `[0, c)`.
pub fn a_perp(a: i64, level: i64, c: i64) -> Result<i64, SubsumError> {
    let an = (a as i128 * level as i128).rem_euclid(c as i128) as i64;
    let inv = arith::inv_mod(an, c).map_err(|_| SubsumError::Precondition("aN must be a unit mod c".into()))?;
    Ok((-inv).rem_euclid(c))
}

fn neg_a_g_w(g: &EvenSymMatrix, a: i64, w: &[Rational]) -> Vec<Rational> {
    g.apply(w).into_iter().map(|x| -(x * rat_int(a))).collect()
}

/// Right-hand side of the subgroup duality for `gcd(N, c) = 1`, scaled so that
/// it equals `𝔊^H_G(a/c; w)`.
pub fn duality_coprime_rhs(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    h: &SubgroupModC,
) -> Result<Cyclotomic, SubsumError> {
    check_subgroup(g, c, h)?;
    check_w(g, w)?;
    if a.gcd(&c) != 1 {
        return Err(GaussError::NotCoprime { a, c }.into());
    }
    let level = g.level();
    if level.gcd(&c) != 1 {
        return Err(GaussError::LevelNotCoprime { level, c }.into());
    }
    let n = g.dim();
    let ap = a_perp(a, level, c)?;
    let hp = orthogonal_complement(h)?;
    let inner = shifted_quadratic_sum(&g.adjoint_form(), &rat(ap, c), &neg_a_g_w(g, a, w), &hp.elements);
    let sign = kronecker(a.abs(), c).pow(n as u32) * kronecker_big(g.det(), c);
    let c0 = odd_part(c).odd;
    let phase = rat(n as i64 * a.signum() * (1 - c0), 8) + rat(a, 2 * c) * g.bilinear(w, w);
    let gamma = Cyclotomic::e(&phase).scale_int(&BigInt::from(sign));
    Ok((gamma * c_half_power(c, n) * inner).scale(&rat(1, hp.order() as i64)))
}

/// Right-hand side of the subgroup duality for positive definite `G` with `N | c`.
pub fn duality_divides_rhs(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    h: &SubgroupModC,
) -> Result<Cyclotomic, SubsumError> {
    check_subgroup(g, c, h)?;
    check_w(g, w)?;
    if !g.is_positive_definite() {
        return Err(GaussError::Indefinite.into());
    }
    if a.gcd(&c) != 1 {
        return Err(GaussError::NotCoprime { a, c }.into());
    }
    let level = g.level();
    if c % level != 0 {
        return Err(GaussError::LevelNotDividing { level, c }.into());
    }
    let n = g.dim();
    let m = c * level;
    let a_inv = arith::inv_mod(a.rem_euclid(m), m).unwrap();
    let hp = orthogonal_complement(h)?;
    let aw: Vec<Rational> = w.iter().map(|x| x * rat_int(a)).collect();
    let support: Vec<Vec<i64>> = hp
        .elements
        .iter()
        .filter(|v| {
            let vr: Vec<Rational> = v.iter().map(|x| rat_int(*x)).collect();
            g.apply_inv(&vr).iter().zip(&aw).all(|(p, q)| (p - q).is_integer())
        })
        .cloned()
        .collect();
    let inner = shifted_quadratic_sum(&g.adjoint_form(), &rat(-a_inv, level * c), &neg_a_g_w(g, a, w), &support);
    let phase = rat(n as i64, 8) + rat(a, 2 * c) * g.bilinear(w, w);
    let gamma = Cyclotomic::e(&phase) * mu_g(g, a, c);
    Ok((gamma * sqrt_big(g.det()) * c_half_power(c, n) * inner).scale(&rat(1, hp.order() as i64)))
}

/// Poisson-summation form of `𝔊^H_G(a/c; w)`, valid for every `c`:
/// `|H^⊥|^{-1} Σ_{y ∈ H^⊥} e(w^T y / c) 𝔊_G(a/c; w, -y/a)`.
pub fn poisson_subsum_rhs(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    h: &SubgroupModC,
) -> Result<Cyclotomic, SubsumError> {
    check_subgroup(g, c, h)?;
    check_w(g, w)?;
    if a == 0 || a.gcd(&c) != 1 {
        return Err(GaussError::NotCoprime { a, c }.into());
    }
    let hp = orthogonal_complement(h)?;
    let mut total = Cyclotomic::zero();
    for y in hp.elements() {
        total += &poisson_term(g, a, c, w, y)?;
    }
    Ok(total.scale(&rat(1, hp.order() as i64)))
}

/// One summand `e(w^T y / c) 𝔊_G(a/c; w, -y/a)` of the Poisson form. It only
/// depends on `y mod c`.
pub fn poisson_term(g: &EvenSymMatrix, a: i64, c: i64, w: &[Rational], y: &[i64]) -> Result<Cyclotomic, SubsumError> {
    let x: Vec<Rational> = y.iter().map(|v| rat(-*v, a)).collect();
    let spec = GaussSpec::new(g, a, c)?.with_w(w.to_vec())?.with_x(x)?;
    let wy = w.iter().zip(y).fold(Rational::zero(), |acc, (p, q)| acc + p * rat_int(*q));
    Ok(Cyclotomic::e(&(wy / rat_int(c))) * brute_gauss(&spec))
}

/// Which evaluation path the hyperplane formula took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperplaneRoute {
    /// `h^T G^⊥ h ≡ 0 mod 2c` and `h ⊥ N w`: the correction factor is 1.
    Full,
    /// `h^T G^⊥ h ≡ 0 mod 2c` but `h` is not orthogonal to `N w`: the sum vanishes.
    Vanishing,
    /// One-variable sum with odd reduced modulus, evaluated in closed form.
    OddModulus,
    /// One-variable sum with reduced modulus divisible by 4, evaluated in closed form.
    DividesModulus,
    /// Reduced modulus `2 mod 4` with a vanishing inner sum.
    TwoModFourZero,
    /// Reduced modulus `2 mod 4` evaluated as a short one-variable sum.
    TwoModFourDirect,
    /// The one-variable sum is not integral-parametric; no closed form is
    /// known, so the whole subgroup sum was enumerated.
    FallbackBrute,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneOutcome {
    pub value: Cyclotomic,
    pub route: HyperplaneRoute,
}

/// `𝔊^H_G(a/c; w)` for `H = {v : v^T h ≡ 0 mod c}` when `gcd(N, c) = 1`.
pub fn hyperplane_subsum_closed(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    h: &[i64],
) -> Result<HyperplaneOutcome, SubsumError> {
    if c <= 0 {
        return Err(SubsumError::BadModulus);
    }
    check_w(g, w)?;
    if h.len() != g.dim() {
        return Err(SubsumError::Dimension);
    }
    let level = g.level();
    if level.gcd(&c) != 1 {
        return Err(GaussError::LevelNotCoprime { level, c }.into());
    }
    if a.gcd(&c) != 1 || a == 0 {
        return Err(GaussError::NotCoprime { a, c }.into());
    }
    let n = g.dim();
    let prefactor = closed_gauss_coprime(g, a, c, w, &zero_vec(n))?;
    let gp = g.adjoint_form();
    let q: i128 = (0..n)
        .map(|i| (0..n).map(|j| h[i] as i128 * gp[i][j] as i128 * h[j] as i128).sum::<i128>())
        .sum();
    let nw: Vec<Rational> = w.iter().map(|x| x * rat_int(level)).collect();
    debug_assert!(is_integral(&nw));
    let s: i128 = nw.iter().zip(h).map(|(x, y)| x.to_integer().to_i128().unwrap() * *y as i128).sum();
    let c128 = c as i128;
    if q.rem_euclid(2 * c128) == 0 {
        return Ok(if s.rem_euclid(c128) == 0 {
            HyperplaneOutcome { value: prefactor, route: HyperplaneRoute::Full }
        } else {
            HyperplaneOutcome { value: Cyclotomic::zero(), route: HyperplaneRoute::Vanishing }
        });
    }
    let hg = h.iter().fold(0i64, |acc, x| acc.gcd(x));
    let u = (c / c.gcd(&hg)) as i128;
    debug_assert_eq!((u * q) % (2 * c128), 0);
    let uq = u * q / (2 * c128);
    let gg = u.gcd(&uq);
    let ap = a_perp(a, level, c)? as i128;
    let a1 = ap * uq / gg;
    let c1 = u / gg;
    // α = a1/c1 and the inner sum is Σ_{v < u} e(α (v^2 + x v)) with x = -2 a s / q
    let x = Rational::new(BigInt::from(-2 * a as i128 * s), BigInt::from(q));
    let ax = &x * rat_int(BigInt::from(a1));
    if !ax.is_integer() {
        let hgrp = SubgroupModC::generate(c as u64, n, &[h.to_vec()])?;
        let hperp = orthogonal_complement(&hgrp)?;
        let value = gauss_subsum_brute(g, a, c, w, &hperp)?;
        return Ok(HyperplaneOutcome { value, route: HyperplaneRoute::FallbackBrute });
    }
    let two = make_even_sym(&[vec![2]]).unwrap();
    let (a1, c1) = (a1 as i64, c1 as i64);
    let zero = zero_vec(1);
    let xs = vec![x.clone()];
    let (inner, route) = if c1 % 2 == 1 {
        (closed_gauss_coprime(&two, a1, c1, &zero, &xs)?, HyperplaneRoute::OddModulus)
    } else if c1 % 4 == 0 {
        (closed_gauss_divides(&two, a1, c1, &zero, &xs)?, HyperplaneRoute::DividesModulus)
    } else if (a as i128 * s).rem_euclid(q.abs()) == 0 {
        (Cyclotomic::zero(), HyperplaneRoute::TwoModFourZero)
    } else {
        let spec = GaussSpec::new(&two, a1, c1)?.with_x(xs)?;
        (brute_gauss(&spec), HyperplaneRoute::TwoModFourDirect)
    };
    let value = (prefactor * inner).scale(&rat(1, c1));
    Ok(HyperplaneOutcome { value, route })
}

/// The subgroup `c G^{-1} Z^n / c Z^n`, defined when `N | c`.
pub fn dual_lattice_subgroup(g: &EvenSymMatrix, c: i64) -> Result<SubgroupModC, SubsumError> {
    let n = g.dim();
    let cr = rat_int(c);
    let cols: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let v = &g.inverse()[i][j] * &cr;
                    if v.is_integer() {
                        Ok(v.to_integer().to_i64().unwrap())
                    } else {
                        Err(SubsumError::Precondition("c G^{-1} is not integral".into()))
                    }
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    SubgroupModC::generate(c as u64, n, &cols)
}

fn vanishing_hypotheses(g: &EvenSymMatrix, a: i64, c: i64, w: &[Rational]) -> Result<(), SubsumError> {
    check_w(g, w)?;
    if !g.is_positive_definite() {
        return Err(GaussError::Indefinite.into());
    }
    if c <= 0 || c % g.level() != 0 {
        return Err(GaussError::LevelNotDividing { level: g.level(), c }.into());
    }
    if a.gcd(&c) != 1 {
        return Err(GaussError::NotCoprime { a, c }.into());
    }
    if w.iter().all(|x| (x * rat_int(a)).is_integer()) {
        return Err(SubsumError::Precondition("a w is integral".into()));
    }
    Ok(())
}

/// Predicts `𝔊^H_G(a/c; w) = 0` for positive definite `G`, `N | c`, `a w ∉ Z^n`
/// and `H ⊇ c G^{-1} Z^n / c Z^n`. Errors when a hypothesis fails.
pub fn vanishing_criterion(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    h: &SubgroupModC,
) -> Result<Cyclotomic, SubsumError> {
    check_subgroup(g, c, h)?;
    vanishing_hypotheses(g, a, c, w)?;
    let k = dual_lattice_subgroup(g, c)?;
    if !k.gens().iter().all(|v| h.contains(v)) {
        return Err(SubsumError::Precondition("H does not contain c G^{-1} Z^n".into()));
    }
    Ok(Cyclotomic::zero())
}

/// `Σ_{v ∈ (x + c G^{-1} Z^n)/c Z^n} e((a/c) Q(v + w))` by enumeration.
pub fn coset_subsum_brute(
    g: &EvenSymMatrix,
    a: i64,
    c: i64,
    w: &[Rational],
    x: &[i64],
) -> Result<Cyclotomic, SubsumError> {
    check_w(g, w)?;
    let k = dual_lattice_subgroup(g, c)?;
    let shift: Vec<Rational> = w.iter().zip(x).map(|(p, q)| p + rat_int(*q)).collect();
    Ok(shifted_quadratic_sum(g.rows(), &rat(a, c), &shift, k.elements()))
}

/// The coset form of the vanishing statement; same hypotheses as [`vanishing_criterion`].
pub fn vanishing_coset(g: &EvenSymMatrix, a: i64, c: i64, w: &[Rational], x: &[i64]) -> Result<Cyclotomic, SubsumError> {
    vanishing_hypotheses(g, a, c, w)?;
    if x.len() != g.dim() {
        return Err(SubsumError::Dimension);
    }
    Ok(Cyclotomic::zero())
}
