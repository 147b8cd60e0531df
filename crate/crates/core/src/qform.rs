//! Even symmetric Gram matrices, discriminant groups and finite quadratic modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::arith::{self, IntMatrix, RatMatrix};
use crate::exactnum::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QformError {
    #[error("matrix is empty or not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("diagonal entry {0} is odd")]
    OddDiagonal(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse matrix: {0}")]
    Parse(String),
    #[error("invalid finite quadratic module: {0}")]
    BadModule(String),
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(u128),
}

/// A non-degenerate even symmetric integer matrix `G`, i.e. the Gram matrix of
/// the even lattice `(Z^n, Q(v) = v^T G v / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSymMatrix {
    rows: Vec<Vec<i64>>,
    big: IntMatrix,
    det: BigInt,
    inv: RatMatrix,
    level: i64,
    inertia: (usize, usize),
}

pub fn make_even_sym(rows: &[Vec<i64>]) -> Result<EvenSymMatrix, QformError> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(QformError::NotSquare);
    }
    for i in 0..n {
        for j in 0..i {
            if rows[i][j] != rows[j][i] {
                return Err(QformError::NotSymmetric);
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| rows[i][i] % 2 != 0) {
        return Err(QformError::OddDiagonal(i));
    }
    let big = arith::int_matrix(rows);
    let det = arith::det(&big);
    if det.is_zero() {
        return Err(QformError::Singular);
    }
    let inv = arith::inverse(&big).map_err(|_| QformError::Singular)?;
    let mut level = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            let v = if i == j { &inv[i][i] / rat_int(2) } else { inv[i][j].clone() };
            level = level.lcm(v.denom());
        }
    }
    let ratg: RatMatrix = big.iter().map(|r| r.iter().map(|x| rat_int(x.clone())).collect()).collect();
    let inertia = arith::rational_inertia(&ratg).map_err(|_| QformError::Singular)?;
    Ok(EvenSymMatrix {
        rows: rows.to_vec(),
        big,
        det,
        inv,
        level: level.to_i64().expect("level exceeds i64"),
        inertia,
    })
}

/// Cartan matrix of the root lattice `A_n`.
pub fn an_matrix(n: usize) -> EvenSymMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    make_even_sym(&rows).expect("A_n is even and non-degenerate")
}

/// The hyperbolic plane `U = [[0,1],[1,0]]`.
pub fn hyperbolic_plane() -> EvenSymMatrix {
    make_even_sym(&[vec![0, 1], vec![1, 0]]).unwrap()
}

/// `a·I_n` for even `a`.
pub fn scalar_matrix(n: usize, a: i64) -> Result<EvenSymMatrix, QformError> {
    let rows: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { a } else { 0 }).collect()).collect();
    make_even_sym(&rows)
}

/// Orthogonal direct sum of Gram matrices.
pub fn direct_sum(a: &EvenSymMatrix, b: &EvenSymMatrix) -> EvenSymMatrix {
    let (n, m) = (a.dim(), b.dim());
    let mut rows = vec![vec![0i64; n + m]; n + m];
    for i in 0..n {
        rows[i][..n].copy_from_slice(&a.rows[i]);
    }
    for i in 0..m {
        rows[n + i][n..].copy_from_slice(&b.rows[i]);
    }
    make_even_sym(&rows).unwrap()
}

impl EvenSymMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn big(&self) -> &IntMatrix {
        &self.big
    }

    /// Signed determinant.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    pub fn det_i64(&self) -> i64 {
        self.det.to_i64().expect("determinant exceeds i64")
    }

    pub fn inverse(&self) -> &RatMatrix {
        &self.inv
    }

    /// Smallest `N > 0` with `N G^{-1}` even.
    pub fn level(&self) -> i64 {
        self.level
    }

    /// `G^⊥ = N G^{-1}` as an integer matrix.
    pub fn adjoint_form(&self) -> Vec<Vec<i64>> {
        let n = rat_int(self.level);
        self.inv
            .iter()
            .map(|r| r.iter().map(|x| (x * &n).to_integer().to_i64().unwrap()).collect())
            .collect()
    }

    /// The level-scaled inverse as an even symmetric matrix.
    pub fn perp(&self) -> EvenSymMatrix {
        make_even_sym(&self.adjoint_form()).expect("N G^{-1} is even and non-degenerate")
    }

    pub fn inertia(&self) -> (usize, usize) {
        self.inertia
    }

    /// Signature `n_+ - n_-`.
    pub fn signature(&self) -> i64 {
        self.inertia.0 as i64 - self.inertia.1 as i64
    }

    pub fn is_positive_definite(&self) -> bool {
        self.inertia.1 == 0
    }

    /// `G v` for a rational vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).fold(Rational::zero(), |acc, (g, x)| acc + x * rat_int(*g)))
            .collect()
    }

    /// `G^{-1} x`.
    pub fn apply_inv(&self, x: &[Rational]) -> Vec<Rational> {
        self.inv.iter().map(|r| r.iter().zip(x).fold(Rational::zero(), |acc, (g, y)| acc + g * y)).collect()
    }

    /// Bilinear form `v^T G w`.
    pub fn bilinear(&self, v: &[Rational], w: &[Rational]) -> Rational {
        dot(v, &self.apply(w))
    }

    /// Quadratic form `v^T G v / 2`.
    pub fn quad(&self, v: &[Rational]) -> Rational {
        self.bilinear(v, v) / rat_int(2)
    }

    /// `x^T G^{-1} x`.
    pub fn inv_form(&self, x: &[Rational]) -> Rational {
        dot(x, &self.apply_inv(x))
    }

    /// Whether `G v` is integral.
    pub fn maps_to_integers(&self, v: &[Rational]) -> bool {
        self.apply(v).iter().all(|x| x.is_integer())
    }

    pub fn scaled(&self, k: i64) -> Result<EvenSymMatrix, QformError> {
        let rows: Vec<Vec<i64>> = self.rows.iter().map(|r| r.iter().map(|x| x * k).collect()).collect();
        make_even_sym(&rows)
    }

    /// Discriminant group `G^{-1}Z^n / Z^n` in Smith coordinates.
    pub fn discriminant(&self) -> DiscriminantGroup {
        DiscriminantGroup::new(self)
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Parses a Gram matrix given either as a JSON array of rows or as text whose
/// first line is `n`, followed by `n` whitespace-separated rows.
pub fn parse_matrix(text: &str) -> Result<EvenSymMatrix, QformError> {
    let t = text.trim();
    let rows: Vec<Vec<i64>> = if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| QformError::Parse(e.to_string()))?;
        v.as_array()
            .ok_or_else(|| QformError::Parse("expected an array of rows".into()))?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| QformError::Parse("row is not an array".into()))?
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| QformError::Parse(format!("bad entry {x}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    } else {
        let mut lines = t.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| QformError::Parse("missing dimension line".into()))?;
        let rows: Vec<Vec<i64>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|x| x.parse().map_err(|_| QformError::Parse(format!("bad entry {x}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        if rows.len() != n {
            return Err(QformError::Parse(format!("expected {n} rows, found {}", rows.len())));
        }
        rows
    };
    make_even_sym(&rows)
}

/// `L♯/L` for `L = (Z^n, G)`, with elements indexed by Smith coordinates.
///
/// From `U G V = S`, generator `i` is the column `V e_i / s_i` and an element
/// `y` has coordinates `(U G y)_i mod s_i`. Only invariants `s_i > 1` are kept,
/// smallest first, and elements are listed lexicographically in these
/// coordinates with the first coordinate most significant.
#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    dim: usize,
    invariants: Vec<u64>,
    generators: Vec<Vec<Rational>>,
    coord_rows: Vec<Vec<BigInt>>,
    gram: Vec<Vec<i64>>,
}

impl DiscriminantGroup {
    fn new(g: &EvenSymMatrix) -> Self {
        let (u, s, v) = arith::smith_normal_form(g.big());
        let n = g.dim();
        let mut invariants = Vec::new();
        let mut generators = Vec::new();
        let mut coord_rows = Vec::new();
        for i in 0..n {
            let si = s[i][i].to_u64().expect("invariant exceeds u64");
            if si > 1 {
                invariants.push(si);
                generators.push(
                    (0..n).map(|r| Rational::new(v[r][i].clone(), BigInt::from(si))).collect(),
                );
                coord_rows.push(u[i].clone());
            }
        }
        DiscriminantGroup { dim: n, invariants, generators, coord_rows, gram: g.rows().to_vec() }
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn order(&self) -> u128 {
        self.invariants.iter().map(|&s| s as u128).product()
    }

    /// Exponent of the group, which is also a common denominator for representatives.
    pub fn exponent(&self) -> u64 {
        self.invariants.iter().fold(1u64, |a, &b| a.lcm(&b))
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// Coordinates of the element with the given index.
    pub fn coords(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.invariants.len()];
        for i in (0..self.invariants.len()).rev() {
            let s = self.invariants[i] as usize;
            out[i] = (index % s) as u64;
            index /= s;
        }
        out
    }

    pub fn index_of_coords(&self, coords: &[u64]) -> usize {
        coords.iter().zip(&self.invariants).fold(0usize, |acc, (k, s)| acc * *s as usize + *k as usize)
    }

    /// Representative in `[0,1)^n` of the element with the given coordinates.
    pub fn rep_of_coords(&self, coords: &[u64]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.dim];
        for (k, gen) in coords.iter().zip(&self.generators) {
            for (xi, gi) in x.iter_mut().zip(gen) {
                *xi += gi * rat_int(*k);
            }
        }
        x.into_iter().map(|v| &v - v.floor()).collect()
    }

    pub fn rep(&self, index: usize) -> Vec<Rational> {
        self.rep_of_coords(&self.coords(index))
    }

    /// Smith coordinates of `y ∈ G^{-1}Z^n`, or `None` if `y` is not in the dual lattice.
    pub fn coords_of(&self, y: &[Rational]) -> Option<Vec<u64>> {
        let gy: Vec<Rational> = self
            .gram
            .iter()
            .map(|r| r.iter().zip(y).fold(Rational::zero(), |acc, (g, x)| acc + x * rat_int(*g)))
            .collect();
        if !gy.iter().all(|v| v.is_integer()) {
            return None;
        }
        let z: Vec<BigInt> = gy.into_iter().map(|v| v.to_integer()).collect();
        Some(
            self.coord_rows
                .iter()
                .zip(&self.invariants)
                .map(|(row, s)| {
                    let t = row.iter().zip(&z).fold(BigInt::zero(), |acc, (a, b)| acc + a * b);
                    t.mod_floor(&BigInt::from(*s)).to_u64().unwrap()
                })
                .collect(),
        )
    }

    pub fn index_of(&self, y: &[Rational]) -> Option<usize> {
        self.coords_of(y).map(|c| self.index_of_coords(&c))
    }

    /// All representatives scaled by the exponent `E`, as integer vectors.
    pub fn scaled_reps(&self) -> Result<(i64, Vec<Vec<i64>>), QformError> {
        let order = self.order();
        if order > 4_000_000 {
            return Err(QformError::TooLarge(order));
        }
        let e = self.exponent() as i64;
        let reps = (0..order as usize)
            .map(|i| {
                self.rep(i)
                    .iter()
                    .map(|x| (x * rat_int(e)).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        Ok((e, reps))
    }

    /// The finite quadratic module `(L♯/L, Q mod 1)` in these coordinates.
    pub fn fqm(&self) -> FiniteQuadraticModule {
        let k = self.generators.len();
        let images: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|y| {
                self.gram
                    .iter()
                    .map(|r| r.iter().zip(y).fold(Rational::zero(), |acc, (g, x)| acc + x * rat_int(*g)))
                    .collect()
            })
            .collect();
        let qgram = (0..k)
            .map(|i| (0..k).map(|j| dot(&self.generators[i], &images[j]) / rat_int(2)).collect())
            .collect();
        FiniteQuadraticModule { orders: self.invariants.clone(), qgram }
    }

    pub fn legend(&self) -> Value {
        let elems: Vec<Value> = (0..self.order().min(100_000) as usize)
            .map(|i| Value::from(self.coords(i)))
            .collect();
        serde_json::json!({ "invariants": self.invariants, "elements": elems })
    }
}

/// A finite quadratic module `⊕ Z/e_i` with `Q(k) = k^T M k mod 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticModule {
    pub orders: Vec<u64>,
    pub qgram: Vec<Vec<Rational>>,
}

/// The indecomposable Jordan components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indecomposable {
    /// `Z/p^r` with `Q(x) = a x^2 / p^r`, `p` odd.
    AOdd { p: u64, r: u32, a: i64 },
    /// `Z/2^r` with `Q(x) = a x^2 / 2^{r+1}`, `a` odd.
    ATwo { r: u32, a: i64 },
    /// `(Z/2^r)^2` with `Q(x, y) = (x^2 + xy + y^2) / 2^r`.
    B { r: u32 },
    /// `(Z/2^r)^2` with `Q(x, y) = xy / 2^r`.
    C { r: u32 },
}

pub fn fqm_indecomposable(kind: Indecomposable) -> Result<FiniteQuadraticModule, QformError> {
    let bad = |m: &str| Err(QformError::BadModule(m.to_string()));
    match kind {
        Indecomposable::AOdd { p, r, a } => {
            if p % 2 == 0 || !arith::is_prime(p) {
                return bad("A component needs an odd prime");
            }
            if r == 0 || a.rem_euclid(p as i64) == 0 {
                return bad("need r >= 1 and p not dividing a");
            }
            let q = p.pow(r);
            Ok(FiniteQuadraticModule {
                orders: vec![q],
                qgram: vec![vec![Rational::new(a.into(), q.into())]],
            })
        }
        Indecomposable::ATwo { r, a } => {
            if r == 0 || a % 2 == 0 {
                return bad("need r >= 1 and odd a");
            }
            Ok(FiniteQuadraticModule {
                orders: vec![1 << r],
                qgram: vec![vec![Rational::new(a.into(), BigInt::from(1u64 << (r + 1)))]],
            })
        }
        Indecomposable::B { r } | Indecomposable::C { r } => {
            if r == 0 {
                return bad("need r >= 1");
            }
            let q = BigInt::from(1u64 << r);
            let half = Rational::new(BigInt::one(), &q * 2);
            let diag = if matches!(kind, Indecomposable::B { .. }) {
                Rational::new(BigInt::one(), q.clone())
            } else {
                Rational::zero()
            };
            Ok(FiniteQuadraticModule {
                orders: vec![1 << r, 1 << r],
                qgram: vec![vec![diag.clone(), half.clone()], vec![half, diag]],
            })
        }
    }
}

pub fn fqm_direct_sum(a: &FiniteQuadraticModule, b: &FiniteQuadraticModule) -> FiniteQuadraticModule {
    let (n, m) = (a.orders.len(), b.orders.len());
    let mut q = vec![vec![Rational::zero(); n + m]; n + m];
    for i in 0..n {
        q[i][..n].clone_from_slice(&a.qgram[i]);
    }
    for i in 0..m {
        q[n + i][n..].clone_from_slice(&b.qgram[i]);
    }
    FiniteQuadraticModule { orders: a.orders.iter().chain(&b.orders).copied().collect(), qgram: q }
}

impl FiniteQuadraticModule {
    pub fn size(&self) -> u128 {
        self.orders.iter().map(|&e| e as u128).product()
    }

    /// Common denominator `L` and the integer matrix `L·M`.
    pub fn scaled_gram(&self) -> (i64, Vec<Vec<i64>>) {
        let l = self
            .qgram
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let lr = Rational::from_integer(l.clone());
        let m = self
            .qgram
            .iter()
            .map(|r| r.iter().map(|x| (x * &lr).to_integer().to_i64().unwrap()).collect())
            .collect();
        (l.to_i64().unwrap(), m)
    }

    pub fn coords(&self, mut index: u128) -> Vec<i64> {
        let mut out = vec![0i64; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let s = self.orders[i] as u128;
            out[i] = (index % s) as i64;
            index /= s;
        }
        out
    }

    /// `Q(k) mod 1`.
    pub fn q(&self, k: &[i64]) -> Rational {
        let (l, m) = self.scaled_gram();
        let v = quad_scaled(&m, k).rem_euclid(l as i128);
        Rational::new(BigInt::from(v), BigInt::from(l))
    }

    /// Checks that `Q` is well defined on the quotient and that `B` is non-degenerate.
    pub fn validate(&self) -> Result<(), QformError> {
        let k = self.orders.len();
        if self.qgram.len() != k || self.qgram.iter().any(|r| r.len() != k) {
            return Err(QformError::BadModule("gram shape".into()));
        }
        for i in 0..k {
            let e = rat_int(self.orders[i]);
            if !(&self.qgram[i][i] * &e * &e).is_integer() {
                return Err(QformError::BadModule(format!("Q not well defined on generator {i}")));
            }
            for j in 0..k {
                if self.qgram[i][j] != self.qgram[j][i] {
                    return Err(QformError::BadModule("gram not symmetric".into()));
                }
                if i != j && !(&self.qgram[i][j] * rat_int(2) * &e).is_integer() {
                    return Err(QformError::BadModule(format!("B not well defined on generator {i}")));
                }
            }
        }
        let size = self.size();
        if size > 200_000 {
            return Ok(());
        }
        let (l, m) = self.scaled_gram();
        // B(x, e_j) = 0 for all generators forces x = 0
        let mut radical = 0;
        for idx in 0..size {
            let x = self.coords(idx);
            let all_zero = (0..k).all(|j| {
                let b: i128 = (0..k).map(|i| 2 * m[i][j] as i128 * x[i] as i128).sum();
                b.rem_euclid(l as i128) == 0
            });
            if all_zero {
                radical += 1;
            }
        }
        if radical != 1 {
            return Err(QformError::BadModule("bilinear form is degenerate".into()));
        }
        Ok(())
    }
}

/// `k^T M k` with `M` given as the scaled integer matrix.
pub(crate) fn quad_scaled(m: &[Vec<i64>], k: &[i64]) -> i128 {
    let mut s = 0i128;
    for i in 0..k.len() {
        if k[i] == 0 {
            continue;
        }
        for j in 0..k.len() {
            s += m[i][j] as i128 * k[i] as i128 * k[j] as i128;
        }
    }
    s
}

/// Parses a rational vector from strings such as `1/2,0,-3/4`.
pub fn parse_rational_vec(s: &str) -> Result<Vec<Rational>, QformError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Rational>().map_err(|_| QformError::Parse(format!("bad rational {t}")))
        })
        .collect()
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// Least common multiple of the denominators of a rational vector.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn abs_det_u64(g: &EvenSymMatrix) -> u64 {
    g.det().abs().to_u64().expect("determinant exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_and_det_examples() {
        let g = make_even_sym(&[vec![2]]).unwrap();
        assert_eq!((g.det_i64(), g.level()), (2, 4));
        let a2 = an_matrix(2);
        assert_eq!((a2.det_i64(), a2.level()), (3, 3));
        let u = hyperbolic_plane();
        assert_eq!((u.det_i64(), u.level()), (-1, 1));
        let a3 = an_matrix(3);
        assert_eq!((a3.det_i64(), a3.level()), (4, 8));
    }

    #[test]
    fn a5_inverse_first_row() {
        let a5 = an_matrix(5);
        let row: Vec<Rational> = a5.inverse()[0].iter().map(|x| x * rat_int(6)).collect();
        let want: Vec<Rational> = [5, 4, 3, 2, 1].iter().map(|x| rat_int(*x)).collect();
        assert_eq!(row, want);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(make_even_sym(&[vec![2, 1], vec![0, 2]]), Err(QformError::NotSymmetric));
        assert_eq!(make_even_sym(&[vec![1]]), Err(QformError::OddDiagonal(0)));
        assert_eq!(make_even_sym(&[vec![2, 2], vec![2, 2]]), Err(QformError::Singular));
    }

    #[test]
    fn discriminant_coordinates_round_trip() {
        for g in [an_matrix(2), an_matrix(3), scalar_matrix(2, 2).unwrap(), an_matrix(1)] {
            let d = g.discriminant();
            assert_eq!(d.order(), g.det().abs().to_u64().unwrap() as u128);
            for i in 0..d.order() as usize {
                let x = d.rep(i);
                assert_eq!(d.index_of(&x), Some(i));
                assert!(g.maps_to_integers(&x));
            }
        }
    }

    #[test]
    fn indecomposables_are_nondegenerate() {
        for kind in [
            Indecomposable::AOdd { p: 3, r: 2, a: 2 },
            Indecomposable::ATwo { r: 3, a: 5 },
            Indecomposable::B { r: 2 },
            Indecomposable::C { r: 1 },
        ] {
            fqm_indecomposable(kind).unwrap().validate().unwrap();
        }
        assert!(fqm_indecomposable(Indecomposable::AOdd { p: 9, r: 1, a: 1 }).is_err());
    }

    #[test]
    fn parse_both_matrix_formats() {
        assert_eq!(parse_matrix("[[2,-1],[-1,2]]").unwrap(), an_matrix(2));
        assert_eq!(parse_matrix("2\n2 -1\n-1 2\n").unwrap(), an_matrix(2));
    }
}
