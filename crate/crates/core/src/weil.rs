//! The Weil representation of `Mp_2(Z)` attached to an even lattice.
//!
//! Matrices act on the group ring of the discriminant group, with
//! `ρ(g) e_x = Σ_y e_y ρ(g)_{y,x}`; in [`WeilMatrix::entries`] the row is `y`
//! and the column is `x`. Elements are ordered as in
//! [`DiscriminantGroup`](crate::qform::DiscriminantGroup).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{self, kronecker, kronecker_big, kronecker_i128, odd_part};
use crate::exactnum::{inv_sqrt_int, rat, rat_int, Cyclotomic, Rational};
use crate::gauss::{c_half_power, quad_counts};
use crate::qform::{DiscriminantGroup, EvenSymMatrix, QformError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeilError {
    #[error("matrix {0:?} does not have determinant 1")]
    NotSl2([i64; 4]),
    #[error("sign must be +1 or -1")]
    BadSign,
    #[error("cocycle evaluation is numerically ambiguous (δ = {0})")]
    Cocycle(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Qform(#[from] QformError),
}

/// `(A, ε)` standing for the branch `ε √(cτ + d)` of the square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mp2Element {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub eps: i8,
}

impl Mp2Element {
    pub fn new(a: i64, b: i64, c: i64, d: i64, eps: i8) -> Result<Self, WeilError> {
        if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
            return Err(WeilError::NotSl2([a, b, c, d]));
        }
        if eps != 1 && eps != -1 {
            return Err(WeilError::BadSign);
        }
        Ok(Mp2Element { a, b, c, d, eps })
    }

    pub fn s() -> Self {
        Mp2Element { a: 0, b: -1, c: 1, d: 0, eps: 1 }
    }

    pub fn t() -> Self {
        Mp2Element { a: 1, b: 1, c: 0, d: 1, eps: 1 }
    }

    pub fn identity() -> Self {
        Mp2Element { a: 1, b: 0, c: 0, d: 1, eps: 1 }
    }

    /// `(I, -1)`, the non-trivial central element above the identity.
    pub fn minus_one() -> Self {
        Mp2Element { a: 1, b: 0, c: 0, d: 1, eps: -1 }
    }

    pub fn matrix(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Product in `Mp_2(Z)`. The cocycle sign is read off numerically at `τ = i`
/// and must be within `0.01` of `±1`.
pub fn mp2_mul(x: &Mp2Element, y: &Mp2Element) -> Result<Mp2Element, WeilError> {
    let tau = Complex64::new(0.0, 1.0);
    let f = |a: i64, b: i64| Complex64::new(a as f64, 0.0) * tau + Complex64::new(b as f64, 0.0);
    let inner = f(y.a, y.b) / f(y.c, y.d);
    let lhs = (Complex64::new(x.c as f64, 0.0) * inner + Complex64::new(x.d as f64, 0.0)).sqrt() * f(y.c, y.d).sqrt();
    let c3 = x.c * y.a + x.d * y.c;
    let d3 = x.c * y.b + x.d * y.d;
    let delta = lhs / f(c3, d3).sqrt();
    let sign = if (delta - 1.0).norm() < 0.01 {
        1
    } else if (delta + 1.0).norm() < 0.01 {
        -1
    } else {
        return Err(WeilError::Cocycle(format!("{delta}")));
    };
    Mp2Element::new(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, c3, d3, x.eps * y.eps * sign)
}

pub type CMatrix = Vec<Vec<Cyclotomic>>;

pub fn cmat_identity(k: usize) -> CMatrix {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() }).collect())
        .collect()
}

pub fn cmat_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let k = b.len();
    a.iter()
        .map(|row| {
            (0..k)
                .map(|j| {
                    let mut s = Cyclotomic::zero();
                    for t in 0..k {
                        if !row[t].is_zero() && !b[t][j].is_zero() {
                            s += &(&row[t] * &b[t][j]);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn cmat_adjoint(a: &CMatrix) -> CMatrix {
    let k = a.len();
    (0..k).map(|i| (0..k).map(|j| a[j][i].conj()).collect()).collect()
}

/// `ρ(g)` as an exact matrix together with the ordering of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilMatrix {
    pub invariants: Vec<u64>,
    pub entries: CMatrix,
}

impl WeilMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &WeilMatrix) -> WeilMatrix {
        WeilMatrix { invariants: self.invariants.clone(), entries: cmat_mul(&self.entries, &other.entries) }
    }

    pub fn adjoint(&self) -> WeilMatrix {
        WeilMatrix { invariants: self.invariants.clone(), entries: cmat_adjoint(&self.entries) }
    }

    pub fn scale(&self, k: i64) -> WeilMatrix {
        let b = BigInt::from(k);
        WeilMatrix {
            invariants: self.invariants.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(|x| x.scale_int(&b)).collect()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries == cmat_identity(self.size())
    }

    /// Largest absolute entry difference, as a floating-point diagnostic.
    pub fn max_diff(&self, other: &WeilMatrix) -> f64 {
        let mut m: f64 = 0.0;
        for (r1, r2) in self.entries.iter().zip(&other.entries) {
            for (x, y) in r1.iter().zip(r2) {
                let (a, b) = (x - y).approx();
                m = m.max(a.hypot(b));
            }
        }
        m
    }

    pub fn to_json(&self, disc: &DiscriminantGroup) -> Value {
        let rows: Vec<Value> =
            self.entries.iter().map(|r| Value::from(r.iter().map(Cyclotomic::to_json).collect::<Vec<_>>())).collect();
        json!({
            "convention": "entries[y][x] is the coefficient of e_y in rho(g) e_x",
            "ordering": disc.legend(),
            "entries": rows,
        })
    }
}

/// Precomputed discriminant data: representatives scaled by the exponent `E`,
/// together with `E^2 Q(x)` and `E^2 B(x, y)` as integers.
#[derive(Debug, Clone)]
pub struct WeilContext {
    pub g: EvenSymMatrix,
    pub disc: DiscriminantGroup,
    pub exp: i64,
    pub reps: Vec<Vec<i64>>,
    /// `G X` for each scaled representative `X`.
    greps: Vec<Vec<i128>>,
}

impl WeilContext {
    pub fn new(g: &EvenSymMatrix) -> Result<Self, WeilError> {
        let disc = g.discriminant();
        let (exp, reps) = disc.scaled_reps()?;
        let n = g.dim();
        let greps = reps
            .iter()
            .map(|x| (0..n).map(|i| (0..n).map(|j| g.entry(i, j) as i128 * x[j] as i128).sum()).collect())
            .collect();
        Ok(WeilContext { g: g.clone(), disc, exp, reps, greps })
    }

    pub fn size(&self) -> usize {
        self.reps.len()
    }

    /// `Q(x_i)` as an exact rational.
    pub fn q(&self, i: usize) -> Rational {
        let v: i128 = self.reps[i].iter().zip(&self.greps[i]).map(|(a, b)| *a as i128 * b).sum();
        Rational::new(BigInt::from(v), BigInt::from(2 * self.exp as i128 * self.exp as i128))
    }

    /// `B(x_i, x_j)` as an exact rational.
    pub fn b(&self, i: usize, j: usize) -> Rational {
        let v: i128 = self.reps[i].iter().zip(&self.greps[j]).map(|(a, b)| *a as i128 * b).sum();
        Rational::new(BigInt::from(v), BigInt::from(self.exp as i128 * self.exp as i128))
    }

    fn wrap(&self, entries: CMatrix) -> WeilMatrix {
        WeilMatrix { invariants: self.disc.invariants().to_vec(), entries }
    }

    fn abs_det(&self) -> i64 {
        self.g.det_i64().abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    S,
    T,
    SInv,
    TInv,
}

/// `ρ(S̃)` or `ρ(T̃)` (and their inverses).
pub fn weil_generator(ctx: &WeilContext, gen: Generator) -> WeilMatrix {
    let k = ctx.size();
    match gen {
        Generator::T | Generator::TInv => {
            let sign = if gen == Generator::T { 1 } else { -1 };
            let mut m: CMatrix = vec![vec![Cyclotomic::zero(); k]; k];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = Cyclotomic::e(&(ctx.q(i) * rat_int(sign)));
            }
            ctx.wrap(m)
        }
        Generator::S => {
            let sigma = ctx.g.signature();
            let scalar = Cyclotomic::e(&rat(-sigma, 8)) * inv_sqrt_int(ctx.abs_det());
            let m = (0..k)
                .map(|y| (0..k).map(|x| &scalar * &Cyclotomic::e(&-ctx.b(x, y))).collect())
                .collect();
            ctx.wrap(m)
        }
        Generator::SInv => weil_generator(ctx, Generator::S).adjoint(),
    }
}

fn generator_element(gen: Generator) -> Result<Mp2Element, WeilError> {
    Ok(match gen {
        Generator::S => Mp2Element::s(),
        Generator::T => Mp2Element::t(),
        Generator::TInv => Mp2Element::new(1, -1, 0, 1, 1)?,
        Generator::SInv => {
            let mut acc = Mp2Element::s();
            for _ in 0..6 {
                acc = mp2_mul(&acc, &Mp2Element::s())?;
            }
            acc
        }
    })
}

/// Evaluates a word `g_1 g_2 … g_k` both in `Mp_2(Z)` and under `ρ`.
pub fn weil_word(ctx: &WeilContext, word: &[Generator]) -> Result<(Mp2Element, WeilMatrix), WeilError> {
    let mut elem = Mp2Element::identity();
    let mut mat = ctx.wrap(cmat_identity(ctx.size()));
    let s = weil_generator(ctx, Generator::S);
    let t = weil_generator(ctx, Generator::T);
    let (si, ti) = (s.adjoint(), t.adjoint());
    for g in word {
        elem = mp2_mul(&elem, &generator_element(*g)?)?;
        let m = match g {
            Generator::S => &s,
            Generator::T => &t,
            Generator::SInv => &si,
            Generator::TInv => &ti,
        };
        mat = mat.mul(m);
    }
    Ok((elem, mat))
}

/// A word in `S`, `T`, `T^{-1}` whose image in `SL_2(Z)` is the given matrix.
pub fn sl2_word(m: [i64; 4]) -> Result<Vec<Generator>, WeilError> {
    let [mut a, mut b, mut c, mut d] = m;
    if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
        return Err(WeilError::NotSl2(m));
    }
    // Left-multiply by T^{-q} and S^{-1} until c = 0, recording the inverses.
    let mut word = Vec::new();
    while c != 0 {
        let q = Integer::div_floor(&a, &c);
        a -= q * c;
        b -= q * d;
        push_power(&mut word, q);
        // S^{-1} (a, b; c, d) = (c, d; -a, -b)
        let (na, nb, nc, nd) = (c, d, -a, -b);
        a = na;
        b = nb;
        c = nc;
        d = nd;
        word.push(Generator::S);
    }
    if a == -1 {
        word.push(Generator::S);
        word.push(Generator::S);
        b = -b;
    }
    push_power(&mut word, b);
    Ok(word)
}

fn push_power(word: &mut Vec<Generator>, k: i64) {
    let g = if k >= 0 { Generator::T } else { Generator::TInv };
    for _ in 0..k.unsigned_abs() {
        word.push(g);
    }
}

/// `ρ(g)` for any `g ∈ Mp_2(Z)` via a generator word; the branch is fixed up
/// with `ρ(I, -1) = (-1)^n`.
pub fn weil_via_word(ctx: &WeilContext, g: &Mp2Element) -> Result<WeilMatrix, WeilError> {
    let word = sl2_word(g.matrix())?;
    let (elem, mat) = weil_word(ctx, &word)?;
    debug_assert_eq!(elem.matrix(), g.matrix());
    if elem.eps == g.eps || ctx.g.dim() % 2 == 0 {
        Ok(mat)
    } else {
        Ok(mat.scale(-1))
    }
}

/// Shintani's formula for `ρ(A, ε)` when `c != 0`:
/// `ρ_{y,x} = e(-sgn(c) n/8) |D|^{-1/2} |c|^{-n/2} Σ_{t mod c} e((a Q(y+t) - B(y+t, x) + d Q(x)) / c)`.
pub fn weil_shintani(ctx: &WeilContext, g: &Mp2Element) -> Result<WeilMatrix, WeilError> {
    let Mp2Element { a, c, d, .. } = *g;
    if c == 0 {
        return Err(WeilError::Precondition("Shintani's formula needs c != 0".into()));
    }
    let n = ctx.g.dim();
    let k = ctx.size();
    let e = ctx.exp as i128;
    let sgn = c.signum() as i128;
    let modulus = (c.unsigned_abs() as i128 * e * e) as u64;
    let gm: Vec<Vec<i128>> = ctx.g.rows().iter().map(|r| r.iter().map(|v| *v as i128).collect()).collect();
    let qa: Vec<Vec<i128>> = gm.iter().map(|r| r.iter().map(|v| sgn * a as i128 * e * e * v).collect()).collect();
    let norm = Cyclotomic::e(&rat(-c.signum() * ctx.g.signature(), 8))
        * inv_sqrt_int(ctx.abs_det())
        * c_half_power(c.abs(), n);
    let denom = Cyclotomic::from_rational(&Rational::new(1.into(), BigInt::from(c.unsigned_abs()).pow(n as u32)));
    let norm = norm * denom;
    let dot = |u: &[i64], v: &[i128]| -> i128 { u.iter().zip(v).map(|(p, q)| *p as i128 * q).sum() };
    let mut entries = vec![vec![Cyclotomic::zero(); k]; k];
    for y in 0..k {
        for x in 0..k {
            let (yv, xv) = (&ctx.reps[y], &ctx.reps[x]);
            let (gy, gx) = (&ctx.greps[y], &ctx.greps[x]);
            let lin: Vec<i128> = (0..n).map(|i| sgn * (a as i128 * e * gy[i] - e * gx[i])).collect();
            let k0 = sgn * (a as i128 * dot(yv, gy) / 2 - dot(yv, gx) + d as i128 * dot(xv, gx) / 2);
            let dims = vec![c.unsigned_abs(); n];
            let counts = quad_counts(&qa, &lin, k0, &dims, modulus);
            entries[y][x] = &norm * &Cyclotomic::from_counts(modulus, &counts);
        }
    }
    let mut m = ctx.wrap(entries);
    if g.eps == -1 && n % 2 == 1 {
        m = m.scale(-1);
    }
    Ok(m)
}

fn require_eps_one(g: &Mp2Element) -> Result<(), WeilError> {
    if g.eps != 1 {
        return Err(WeilError::Precondition("closed forms are stated for ε = 1".into()));
    }
    Ok(())
}

/// Closed form for `c > 0`, `a != 0`, `gcd(N, c) = 1`.
pub fn weil_closed_coprime(ctx: &WeilContext, g: &Mp2Element) -> Result<WeilMatrix, WeilError> {
    require_eps_one(g)?;
    let Mp2Element { a, b, c, .. } = *g;
    let level = ctx.g.level();
    if c <= 0 || a == 0 || level.gcd(&c) != 1 {
        return Err(WeilError::Precondition("need c > 0, a != 0 and gcd(N, c) = 1".into()));
    }
    let n = ctx.g.dim() as i64;
    let m = a.abs() * level;
    let cp = arith::inv_mod(c.rem_euclid(m), m).expect("c is a unit mod |a|N");
    debug_assert_eq!((b + cp) % a, 0);
    let t = (b + cp) / a;
    let sign = kronecker(a.abs(), c).pow(n as u32) * kronecker_big(ctx.g.det(), c);
    let c0 = odd_part(c).odd;
    let sigma = ctx.g.signature();
    let gamma = (Cyclotomic::e(&(rat(-sigma, 8) + rat(n * a.signum() * (1 - c0), 8))) * inv_sqrt_int(ctx.abs_det()))
        .scale_int(&BigInt::from(sign));
    let k = ctx.size();
    let entries = (0..k)
        .map(|w| {
            (0..k)
                .map(|v| {
                    let ph = rat_int(t) * ctx.q(v) - rat_int(cp) * ctx.b(w, v) + rat_int(a * cp) * ctx.q(w);
                    &gamma * &Cyclotomic::e(&ph)
                })
                .collect()
        })
        .collect();
    Ok(ctx.wrap(entries))
}

/// `μ` with `D = |L♯/L|`.
fn mu_disc(abs_d: i64, n: u32, a: i64, c: i64) -> Cyclotomic {
    if a % 2 != 0 {
        let s = kronecker(-a.signum() * c, a.abs()).pow(n) * kronecker(abs_d, a);
        Cyclotomic::e(&rat(n as i64 * a.signum() * (1 - a), 8)).scale_int(&BigInt::from(s))
    } else {
        Cyclotomic::from_integer(kronecker_i128(a as i128, abs_d as i128) as i64)
    }
}

/// Closed form for `c > 0` and `N | c`: a monomial matrix supported on `v = a w`.
pub fn weil_closed_divides(ctx: &WeilContext, g: &Mp2Element) -> Result<WeilMatrix, WeilError> {
    require_eps_one(g)?;
    let Mp2Element { a, b, c, .. } = *g;
    let level = ctx.g.level();
    if c <= 0 || c % level != 0 {
        return Err(WeilError::Precondition("need c > 0 and N | c".into()));
    }
    if !ctx.g.is_positive_definite() {
        return Err(WeilError::Precondition("the N | c closed form needs a positive definite form".into()));
    }
    let n = ctx.g.dim() as u32;
    let mu = mu_disc(ctx.abs_det(), n, a, c);
    let k = ctx.size();
    let inv = ctx.disc.invariants().to_vec();
    let mut entries = vec![vec![Cyclotomic::zero(); k]; k];
    for w in 0..k {
        let coords = ctx.disc.coords(w);
        let aw: Vec<u64> = coords
            .iter()
            .zip(&inv)
            .map(|(x, s)| (a as i128 * *x as i128).rem_euclid(*s as i128) as u64)
            .collect();
        let v = ctx.disc.index_of_coords(&aw);
        entries[w][v] = &mu * &Cyclotomic::e(&(rat_int(a * b) * ctx.q(w)));
    }
    Ok(ctx.wrap(entries))
}

/// Outcome of checking the defining relations of `Mp_2(Z)` under `ρ`.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub s8: bool,
    pub st3_s2: bool,
    pub s4t_ts4: bool,
    pub s2_is_minus_i: bool,
    pub unitary_s: bool,
    pub unitary_t: bool,
}

impl RelationReport {
    pub fn all(&self) -> bool {
        self.s8 && self.st3_s2 && self.s4t_ts4 && self.s2_is_minus_i && self.unitary_s && self.unitary_t
    }
}

pub fn check_relations(ctx: &WeilContext) -> Result<RelationReport, WeilError> {
    use Generator::*;
    let s = weil_generator(ctx, S);
    let t = weil_generator(ctx, T);
    let s2 = s.mul(&s);
    let s4 = s2.mul(&s2);
    let s8 = s4.mul(&s4);
    let st = s.mul(&t);
    let st3 = st.mul(&st).mul(&st);
    let (e_s2, _) = weil_word(ctx, &[S, S])?;
    let (e_s8, _) = weil_word(ctx, &[S, S, S, S, S, S, S, S])?;
    let (e_st3, _) = weil_word(ctx, &[S, T, S, T, S, T])?;
    Ok(RelationReport {
        s8: s8.is_identity() && e_s8 == Mp2Element::identity(),
        st3_s2: st3 == s2 && e_st3 == e_s2,
        s4t_ts4: s4.mul(&t) == t.mul(&s4),
        s2_is_minus_i: e_s2 == Mp2Element { a: -1, b: 0, c: 0, d: -1, eps: 1 },
        unitary_s: s.mul(&s.adjoint()).is_identity(),
        unitary_t: t.mul(&t.adjoint()).is_identity(),
    })
}

/// Both sides of the theta transformation law for the component `t`, evaluated
/// numerically on the box `|k_i| <= radius` of lattice offsets.
#[derive(Debug, Clone, Copy)]
pub struct ThetaCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

fn cexp2pi(z: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z).exp()
}

/// Partial theta series `Σ_{|k|_∞ <= R} e(τ Q(x + k) + (x + k)^T G z)`.
fn theta_partial(g: &EvenSymMatrix, x: &[f64], tau: Complex64, z: &[Complex64], radius: i64) -> Complex64 {
    let n = g.dim();
    let gz: Vec<Complex64> =
        (0..n).map(|i| (0..n).map(|j| z[j] * g.entry(i, j) as f64).sum()).collect();
    let mut k = vec![-radius; n];
    let mut total = Complex64::zero();
    loop {
        let v: Vec<f64> = (0..n).map(|i| x[i] + k[i] as f64).collect();
        let mut q = 0.0;
        for i in 0..n {
            for j in 0..n {
                q += v[i] * g.entry(i, j) as f64 * v[j];
            }
        }
        let lin: Complex64 = v.iter().zip(&gz).map(|(a, b)| b * *a).sum();
        total += cexp2pi(tau * (q / 2.0) + lin);
        let mut i = 0;
        loop {
            if i == n {
                return total;
            }
            k[i] += 1;
            if k[i] <= radius {
                break;
            }
            k[i] = -radius;
            i += 1;
        }
    }
}

/// Residual of the transformation law of the vector-valued theta series under
/// `A = (a, b; c, d)` with `c > 0`, `a != 0`, `gcd(N, c) = 1`, for positive definite `G`.
pub fn theta_transform_residual(
    ctx: &WeilContext,
    t: usize,
    m: [i64; 4],
    tau: Complex64,
    z: &[Complex64],
    radius: i64,
) -> Result<ThetaCheck, WeilError> {
    let g = &ctx.g;
    if !g.is_positive_definite() {
        return Err(WeilError::Precondition("theta series need a positive definite form".into()));
    }
    if tau.im <= 0.0 {
        return Err(WeilError::Precondition("τ must lie in the upper half-plane".into()));
    }
    if t >= ctx.size() || z.len() != g.dim() {
        return Err(WeilError::Precondition("index or vector length out of range".into()));
    }
    let elem = Mp2Element::new(m[0], m[1], m[2], m[3], 1)?;
    let rho = weil_closed_coprime(ctx, &elem)?;
    let n = g.dim();
    let cd = tau * m[2] as f64 + m[3] as f64;
    let tau2 = (tau * m[0] as f64 + m[1] as f64) / cd;
    let z2: Vec<Complex64> = z.iter().map(|v| v / cd).collect();
    let qz: Complex64 = (0..n)
        .map(|i| (0..n).map(|j| z[i] * z[j] * g.entry(i, j) as f64).sum::<Complex64>())
        .sum::<Complex64>()
        / 2.0;
    let e = ctx.exp as f64;
    let rep = |i: usize| -> Vec<f64> { ctx.reps[i].iter().map(|v| *v as f64 / e).collect() };
    let lhs = cd.sqrt().powi(-(n as i32))
        * cexp2pi(-(qz * m[2] as f64) / cd)
        * theta_partial(g, &rep(t), tau2, &z2, radius);
    let mut rhs = Complex64::zero();
    for x in 0..ctx.size() {
        let (re, im) = rho.entries[t][x].approx();
        if re == 0.0 && im == 0.0 {
            continue;
        }
        rhs += Complex64::new(re, im) * theta_partial(g, &rep(x), tau, z, radius);
    }
    Ok(ThetaCheck { lhs, rhs, residual: (lhs - rhs).norm() })
}

/// Converts an exact value to a complex float.
pub fn to_complex(z: &Cyclotomic) -> Complex64 {
    let (re, im) = z.approx();
    Complex64::new(re, im)
}

/// `|c|` as the `u64` used by enumeration, rejecting zero.
pub fn nonzero_c(c: i64) -> Option<u64> {
    (c != 0).then(|| c.unsigned_abs()).filter(|v| v.to_i64().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qform::{an_matrix, make_even_sym};

    #[test]
    fn relations_hold_for_small_lattices() {
        for g in [make_even_sym(&[vec![2]]).unwrap(), an_matrix(2)] {
            let ctx = WeilContext::new(&g).unwrap();
            assert!(check_relations(&ctx).unwrap().all());
        }
    }

    #[test]
    fn s_squared_in_mp2() {
        let s2 = mp2_mul(&Mp2Element::s(), &Mp2Element::s()).unwrap();
        assert_eq!(s2.matrix(), [-1, 0, 0, -1]);
        assert_eq!(s2.eps, 1);
        let s4 = mp2_mul(&s2, &s2).unwrap();
        assert_eq!(s4, Mp2Element::minus_one());
    }

    #[test]
    fn word_reproduces_matrix() {
        for m in [[2, 1, 5, 3], [1, 0, 1, 1], [-3, 2, 7, -5], [0, -1, 1, 0], [-1, 0, 0, -1]] {
            let w = sl2_word(m).unwrap();
            let ctx = WeilContext::new(&make_even_sym(&[vec![2]]).unwrap()).unwrap();
            let (e, _) = weil_word(&ctx, &w).unwrap();
            assert_eq!(e.matrix(), m);
        }
    }
}
