//! Exact arithmetic in GL(N,Z) and the arithmetic predicates every other
//! module consumes.
//!
//! All entries are arbitrary-precision integers; products, inverses and
//! powers are computed exactly. Ergodicity is decided symbolically through
//! cyclotomic gcds, never through floating-point modulus checks, and
//! hyperbolicity through an exact self-inversive/Sturm count of
//! unit-circle roots.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;

/// Square integer matrix with determinant +1 or -1.
///
/// Row-major storage. Construction checks unimodularity; every value of
/// this type is a genuine automorphism of the torus `T^N` (and, through
/// [`IntMatrix::dual_map`], of the dual lattice `Z^N`). Immutable after
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}[", self.dim, self.dim)?;
        for r in 0..self.dim {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl IntMatrix {
    /// Builds a matrix from rows of machine integers, rejecting any input
    /// whose determinant is not +1 or -1.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension(format!(
                "expected a nonempty square row list, got {} rows",
                dim
            )));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::from_bigint_entries(dim, entries)
    }

    /// Builds a matrix from row-major `BigInt` entries, with the same
    /// determinant check.
    pub fn from_bigint_entries(dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let det = det_raw(dim, &entries);
        if det != BigInt::one() && det != -BigInt::one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Exact determinant (always +1 or -1 for constructed values).
    pub fn det(&self) -> BigInt {
        det_raw(self.dim, &self.entries)
    }

    /// Exact product. Errors on dimension mismatch.
    pub fn mat_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        let entries = mul_raw(self.dim, &self.entries, &other.entries);
        Ok(IntMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = vec![BigInt::zero(); self.dim * self.dim];
        for r in 0..self.dim {
            for c in 0..self.dim {
                entries[c * self.dim + r] = self.entry(r, c).clone();
            }
        }
        IntMatrix {
            dim: self.dim,
            entries,
        }
    }

    /// Exact inverse via Cayley-Hamilton; integer because det = +-1.
    pub fn inverse(&self) -> IntMatrix {
        let p = self.char_poly();
        let c = p.coeffs();
        // p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0, c_0 = +-1, and
        // M^{-1} = -(M^{n-1} + c_{n-1} M^{n-2} + ... + c_1 I) / c_0.
        let n = self.dim;
        let mut acc = vec![BigInt::zero(); n * n];
        for i in 0..n {
            acc[i * n + i] = BigInt::one();
        }
        // Horner: acc = M^{n-1} + c_{n-1} M^{n-2} + ... + c_1 I
        for k in (1..n).rev() {
            acc = mul_raw(n, &acc, &self.entries);
            for i in 0..n {
                acc[i * n + i] += &c[k];
            }
        }
        let c0 = &c[0];
        let entries = acc
            .into_iter()
            .map(|e| if c0.is_one() { -e } else { e })
            .collect();
        IntMatrix {
            dim: self.dim,
            entries,
        }
    }

    /// Exact integer power, negative exponents through the inverse.
    pub fn pow(&self, exp: i64) -> IntMatrix {
        if exp == 0 {
            return Self::identity(self.dim);
        }
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut result = Self::identity(self.dim);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mat_mul(&sq).expect("same dim");
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mat_mul(&sq).expect("same dim");
            }
        }
        result
    }

    /// Inverse transpose: the induced map on the dual lattice `Z^N`.
    pub fn dual_map(&self) -> IntMatrix {
        self.transpose().inverse()
    }

    /// Exact monic characteristic polynomial det(xI - M) via
    /// Faddeev-LeVerrier (all intermediate divisions are exact).
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // m_k = M (m_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(m_k)/k
        let mut mk = self.entries.clone();
        let mut ck = -trace_raw(n, &mk);
        coeffs[n - 1] = ck.clone();
        for k in 2..=n {
            let mut shifted = mk;
            for i in 0..n {
                shifted[i * n + i] += &ck;
            }
            mk = mul_raw(n, &self.entries, &shifted);
            let t = trace_raw(n, &mk);
            let kk = BigInt::from(k as i64);
            debug_assert!((&t % &kk).is_zero());
            ck = -(t / kk);
            coeffs[n - k] = ck.clone();
        }
        IntPolynomial::new(coeffs)
    }

    /// True iff no eigenvalue is a root of unity, decided by cyclotomic
    /// gcds: gcd(char_poly, Phi_d) must be constant for every d with
    /// phi(d) <= N.
    pub fn is_ergodic(&self) -> bool {
        let p = self.char_poly();
        for d in crate::intpoly::cyclotomic_indices(self.dim) {
            let phi = IntPolynomial::cyclotomic(d);
            if p.gcd(&phi).degree() > 0 {
                return false;
            }
        }
        true
    }

    /// Unipotency test: returns `(true, j)` with the least j such that
    /// `(M - I)^j = 0`, or `(false, 0)`.
    pub fn is_unipotent(&self) -> (bool, usize) {
        let n = self.dim;
        let mut nilpart = self.entries.clone();
        for i in 0..n {
            nilpart[i * n + i] -= BigInt::one();
        }
        if nilpart.iter().all(|e| e.is_zero()) {
            return (true, 1);
        }
        let mut power = nilpart.clone();
        for j in 2..=n {
            power = mul_raw(n, &power, &nilpart);
            if power.iter().all(|e| e.is_zero()) {
                return (true, j);
            }
        }
        (false, 0)
    }

    /// True iff no root of the characteristic polynomial has modulus 1.
    ///
    /// Unit-circle roots are exactly the circle roots of
    /// gcd(p, x^n p(1/x)), which is self-inversive; those are counted
    /// exactly with the z + 1/z substitution and a Sturm chain on (-2,2),
    /// plus explicit checks at z = +-1.
    pub fn is_hyperbolic(&self) -> bool {
        let p = self.char_poly().squarefree_part();
        let g = p.gcd(&p.reversed());
        g.count_unit_circle_roots() == 0
    }

    /// Applies the matrix to an integer vector, exactly.
    pub fn apply_bigint(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| self.entry(r, c) * &v[c])
                    .sum::<BigInt>()
            })
            .collect()
    }

    /// Applies the matrix to an `i64` frequency vector with overflow checks.
    pub fn apply_i64(&self, v: &[i64]) -> Result<Vec<i64>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.apply_bigint(&big)
            .into_iter()
            .map(|b| {
                i64::try_from(&b).map_err(|_| {
                    Error::Unsupported(format!("frequency component {b} exceeds i64 range"))
                })
            })
            .collect()
    }

    /// Entries as f64 (desk matrices are small; may lose precision for
    /// very large powers, which callers avoid).
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|e| bigint_to_f64(e))
            .collect()
    }

    /// Max-row-sum (infinity) operator norm.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| bigint_to_f64(&self.entry(r, c).abs()))
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// Spectral (2-) operator norm, estimated in f64 via the power method
    /// on M^T M. Used only for size gates and report ledgers.
    pub fn norm_2(&self) -> f64 {
        let n = self.dim;
        let m = self.to_f64();
        let mut v = vec![1.0_f64; n];
        let mut prev = 0.0;
        for _ in 0..200 {
            // w = M v, u = M^T w
            let mut w = vec![0.0; n];
            for r in 0..n {
                for c in 0..n {
                    w[r] += m[r * n + c] * v[c];
                }
            }
            let mut u = vec![0.0; n];
            for r in 0..n {
                for c in 0..n {
                    u[c] += m[r * n + c] * w[r];
                }
            }
            let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                return 0.0;
            }
            for x in u.iter_mut() {
                *x /= norm;
            }
            if (norm.sqrt() - prev).abs() < 1e-13 * norm.sqrt() {
                return norm.sqrt();
            }
            prev = norm.sqrt();
            v = u;
        }
        prev
    }

    /// D_1(x, y) = x^{-1} y^{-1} x y.
    pub fn commutator(x: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
        x.inverse()
            .mat_mul(&y.inverse())?
            .mat_mul(x)?
            .mat_mul(y)
    }

    /// Rational kernel of (M - I): the fixed space p_1(M), returned as a
    /// basis of integer vectors (denominators cleared).
    pub fn fixed_space(&self) -> Vec<Vec<BigInt>> {
        let n = self.dim;
        let mut shifted = self.entries.clone();
        for i in 0..n {
            shifted[i * n + i] -= BigInt::one();
        }
        rational_kernel(n, &shifted)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.mat_mul(rhs).expect("matrix dimension mismatch")
    }
}

pub(crate) fn bigint_to_f64(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::INFINITY)
}

fn trace_raw(dim: usize, entries: &[BigInt]) -> BigInt {
    (0..dim).map(|i| entries[i * dim + i].clone()).sum()
}

pub(crate) fn mul_raw(dim: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim * dim];
    for r in 0..dim {
        for k in 0..dim {
            let ark = &a[r * dim + k];
            if ark.is_zero() {
                continue;
            }
            for c in 0..dim {
                let prod = ark * &b[k * dim + c];
                out[r * dim + c] += prod;
            }
        }
    }
    out
}

/// Exact determinant via fraction-free Bareiss elimination.
pub(crate) fn det_raw(dim: usize, entries: &[BigInt]) -> BigInt {
    let mut m: Vec<BigInt> = entries.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..dim {
        // pivot
        if m[k * dim + k].is_zero() {
            let swap = (k + 1..dim).find(|&r| !m[r * dim + k].is_zero());
            match swap {
                Some(r) => {
                    for c in 0..dim {
                        m.swap(k * dim + c, r * dim + c);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in k + 1..dim {
            for c in k + 1..dim {
                let num = &m[r * dim + c] * &m[k * dim + k] - &m[r * dim + k] * &m[k * dim + c];
                debug_assert!((&num % &prev).is_zero());
                m[r * dim + c] = num / &prev;
            }
            m[r * dim + k] = BigInt::zero();
        }
        prev = m[k * dim + k].clone();
    }
    let det = m[(dim - 1) * dim + (dim - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Rational kernel of a general square integer matrix, as integer basis
/// vectors with denominators cleared. Exact Gaussian elimination over Q.
pub(crate) fn rational_kernel(dim: usize, entries: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| BigRational::from(entries[r * dim + c].clone()))
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let piv = (row..dim).find(|&r| !m[r][col].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(row, piv);
        let lead = m[row][col].clone();
        for c in 0..dim {
            m[row][c] = &m[row][c] / &lead;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..dim {
                    let sub = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..dim).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![BigRational::zero(); dim];
        v[fc] = BigRational::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[i][fc].clone();
        }
        // clear denominators
        let lcm = v
            .iter()
            .map(|x| x.denom().clone())
            .fold(BigInt::one(), |acc, d| num_integer::lcm(acc, d));
        let iv: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        basis.push(iv);
    }
    basis
}

/// Intersection of rational subspaces given by integer spanning sets:
/// returns a basis of the intersection (denominators cleared).
pub fn intersect_spans(dim: usize, a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    // Solve [A | -B] x = 0; intersection vectors are A * x_A.
    let ka = a.len();
    let kb = b.len();
    if ka == 0 || kb == 0 {
        return Vec::new();
    }
    let cols = ka + kb;
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    if c < ka {
                        BigRational::from(a[c][r].clone())
                    } else {
                        -BigRational::from(b[c - ka][r].clone())
                    }
                })
                .collect()
        })
        .collect();
    // Gaussian elimination on a dim x cols system
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let piv = (row..dim).find(|&r| !m[r][col].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(row, piv);
        let lead = m[row][col].clone();
        for c in 0..cols {
            m[row][c] = &m[row][c] / &lead;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let sub = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut x = vec![BigRational::zero(); cols];
        x[fc] = BigRational::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -m[i][fc].clone();
        }
        // vector = A * x[..ka]
        let mut v = vec![BigRational::zero(); dim];
        for (j, xa) in x[..ka].iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for r in 0..dim {
                let add = xa * BigRational::from(a[j][r].clone());
                v[r] = &v[r] + &add;
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        let lcm = v
            .iter()
            .map(|x| x.denom().clone())
            .fold(BigInt::one(), |acc, d| num_integer::lcm(acc, d));
        basis.push(
            v.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect::<Vec<BigInt>>(),
        );
    }
    // prune linearly dependent vectors
    prune_dependent(dim, basis)
}

fn prune_dependent(dim: usize, vecs: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    let mut echelon: Vec<Vec<BigRational>> = Vec::new();
    for v in vecs {
        let mut w: Vec<BigRational> = v.iter().map(|x| BigRational::from(x.clone())).collect();
        for e in &echelon {
            let lead = e.iter().position(|x| !x.is_zero()).unwrap();
            if !w[lead].is_zero() {
                let f = &w[lead] / &e[lead];
                for c in 0..dim {
                    let sub = &f * &e[c];
                    w[c] = &w[c] - &sub;
                }
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            echelon.push(w);
            kept.push(v);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> IntMatrix {
        IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).is_err());
        assert!(IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).is_err());
    }

    #[test]
    fn identity_multiplication_is_neutral() {
        let m = cat();
        let id = IntMatrix::identity(2);
        assert_eq!(id.mat_mul(&m).unwrap(), m);
        assert_eq!(m.mat_mul(&id).unwrap(), m);
    }

    #[test]
    fn cat_map_squared() {
        let m = cat();
        let sq = m.mat_mul(&m).unwrap();
        let expected = IntMatrix::from_rows(&[vec![5, 3], vec![3, 2]]).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn inverse_round_trip() {
        let m = cat();
        assert!(m.mat_mul(&m.inverse()).unwrap().is_identity());
        let shear = IntMatrix::from_rows(&[vec![1, 7], vec![0, 1]]).unwrap();
        assert!(shear.inverse().mat_mul(&shear).unwrap().is_identity());
    }

    #[test]
    fn char_poly_examples() {
        // cat map: x^2 - 3x + 1
        assert_eq!(
            cat().char_poly(),
            IntPolynomial::from_i64(&[1, -3, 1])
        );
        // identity 3x3: (x-1)^3 = x^3 - 3x^2 + 3x - 1
        assert_eq!(
            IntMatrix::identity(3).char_poly(),
            IntPolynomial::from_i64(&[-1, 3, -3, 1])
        );
        // rotation [[0,-1],[1,0]]: x^2 + 1
        let rot = IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(rot.char_poly(), IntPolynomial::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn ergodicity_examples() {
        assert!(cat().is_ergodic());
        assert!(!IntMatrix::identity(2).is_ergodic());
        let shear = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(!shear.is_ergodic());
        let rot = IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert!(!rot.is_ergodic());
    }

    #[test]
    fn unipotency_examples() {
        let shear = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(shear.is_unipotent(), (true, 2));
        assert_eq!(IntMatrix::identity(2).is_unipotent(), (true, 1));
        assert_eq!(cat().is_unipotent(), (false, 0));
    }

    #[test]
    fn hyperbolicity_examples() {
        assert!(cat().is_hyperbolic());
        let rot = IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert!(!rot.is_hyperbolic());
        let shear = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(!shear.is_hyperbolic());
    }

    #[test]
    fn dual_map_examples() {
        assert!(IntMatrix::identity(3).dual_map().is_identity());
        let expected = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 2]]).unwrap();
        assert_eq!(cat().dual_map(), expected);
        assert_eq!(cat().dual_map().dual_map(), cat());
    }

    #[test]
    fn commutator_of_shears() {
        let x = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let y = IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]).unwrap();
        let d1 = IntMatrix::commutator(&x, &y).unwrap();
        let expected = IntMatrix::from_rows(&[vec![3, 1], vec![-1, 0]]).unwrap();
        assert_eq!(d1, expected);
        assert!(!d1.is_identity());
    }

    #[test]
    fn fixed_space_of_block_unipotent() {
        // [[I,I],[0,I]] on Z^4 fixes exactly {(u, 0)}
        let a2 = IntMatrix::from_rows(&[
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        let fs = a2.fixed_space();
        assert_eq!(fs.len(), 2);
        for v in &fs {
            assert!(v[2].is_zero() && v[3].is_zero());
        }
    }

    #[test]
    fn unipotent_implies_not_ergodic() {
        for rows in [
            vec![vec![1, 1], vec![0, 1]],
            vec![vec![1, 0], vec![3, 1]],
            vec![vec![1, -2], vec![0, 1]],
        ] {
            let m = IntMatrix::from_rows(&rows).unwrap();
            let (uni, idx) = m.is_unipotent();
            assert!(uni && idx >= 1);
            assert!(!m.is_ergodic());
        }
    }
}
