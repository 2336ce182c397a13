//! Exact integer polynomials: characteristic-polynomial carrier, cyclotomic
//! tests, unit-circle root counting, and a desk-scale factorization into
//! irreducibles over Z.
//!
//! Unit-circle roots are counted exactly: they all divide the self-inversive
//! polynomial gcd(p, x^n p(1/x)); after stripping roots at +-1 the remaining
//! palindromic part is pushed through the z + 1/z substitution, and real
//! roots of the image in (-2, 2) are counted with a Sturm chain over exact
//! rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients ordered by ascending degree.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x_pow(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        IntPolynomial { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::intmat::bigint_to_f64(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i as i64))
                .collect(),
        )
    }

    /// Exact division; `None` when `other` does not divide `self` over Z.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = other.degree();
        let lead = other.leading();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (j, oc) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * oc;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Content: gcd of coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading().is_negative() {
            content = -content;
        }
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Polynomial gcd over Z, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let mut a: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let mut b: Vec<BigRational> = other
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        loop {
            if b.iter().all(|c| c.is_zero()) {
                break;
            }
            let r = rational_rem(&a, &b);
            a = b;
            b = r;
        }
        // clear denominators of a, primitivize
        let trimmed: Vec<BigRational> = {
            let mut t = a;
            while t.last().map_or(false, |c| c.is_zero()) {
                t.pop();
            }
            t
        };
        if trimmed.is_empty() {
            return Self::zero();
        }
        let lcm = trimmed
            .iter()
            .map(|x| x.denom().clone())
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let ints: Vec<BigInt> = trimmed
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        Self::new(ints).normalized()
    }

    /// Squarefree part p / gcd(p, p').
    pub fn squarefree_part(&self) -> Self {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.normalized();
        }
        self.div_exact(&g)
            .map(|q| q.normalized())
            .unwrap_or_else(|| self.normalized())
    }

    /// x^n p(1/x): coefficient reversal.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && self.reversed() == *self
    }

    pub fn is_anti_palindromic(&self) -> bool {
        !self.is_zero() && self.reversed() == self.neg()
    }

    /// The d-th cyclotomic polynomial, by recursive division of x^d - 1.
    pub fn cyclotomic(d: usize) -> Self {
        assert!(d > 0);
        if d == 1 {
            return Self::from_i64(&[-1, 1]);
        }
        let mut num = Self::x_pow(d).sub(&Self::one());
        for e in 1..d {
            if d % e == 0 {
                let phi_e = Self::cyclotomic(e);
                num = num.div_exact(&phi_e).expect("cyclotomic division is exact");
            }
        }
        num
    }

    /// Exact count of distinct roots on the unit circle.
    pub fn count_unit_circle_roots(&self) -> usize {
        let mut p = self.squarefree_part();
        if p.degree() == 0 {
            return 0;
        }
        // strip roots at zero (not on the circle)
        while p.coeff(0).is_zero() && p.degree() > 0 {
            p = p.div_exact(&Self::x_pow(1)).unwrap();
        }
        if p.degree() == 0 {
            return 0;
        }
        // all circle roots divide the self-inversive gcd(p, p*)
        let mut g = p.gcd(&p.reversed());
        if g.degree() == 0 {
            return 0;
        }
        let mut count = 0;
        let one = BigInt::one();
        if g.eval_bigint(&one).is_zero() {
            count += 1;
            g = g.div_exact(&Self::from_i64(&[-1, 1])).unwrap();
        }
        if g.eval_bigint(&(-&one)).is_zero() {
            count += 1;
            g = g.div_exact(&Self::from_i64(&[1, 1])).unwrap();
        }
        if g.degree() == 0 {
            return count;
        }
        debug_assert!(g.is_palindromic(), "residual self-inversive part must be palindromic");
        debug_assert!(g.degree() % 2 == 0);
        let q = g.palindromic_transform();
        count += 2 * q.sturm_count_open(
            &BigRational::from(BigInt::from(-2)),
            &BigRational::from(BigInt::from(2)),
        );
        count
    }

    /// For palindromic p of even degree 2m, returns q with
    /// p(z) = z^m q(z + 1/z). Roots of q in (-2, 2) correspond to
    /// conjugate pairs of p on the unit circle.
    pub fn palindromic_transform(&self) -> Self {
        assert!(self.is_palindromic() && self.degree() % 2 == 0);
        let m = self.degree() / 2;
        // s_k(t) = z^k + z^{-k}: s_0 = 2, s_1 = t, s_k = t s_{k-1} - s_{k-2}
        let mut s_prev = Self::from_i64(&[2]);
        let mut s_cur = Self::from_i64(&[0, 1]);
        let mut q = Self::new(vec![self.coeff(m)]);
        for k in 1..=m {
            let sk = if k == 1 {
                s_cur.clone()
            } else {
                let next = Self::from_i64(&[0, 1]).mul(&s_cur).sub(&s_prev);
                s_prev = std::mem::replace(&mut s_cur, next);
                s_cur.clone()
            };
            let term = sk.mul(&Self::new(vec![self.coeff(m + k)]));
            q = q.add(&term);
        }
        q
    }

    /// Number of distinct real roots in the open interval (a, b);
    /// endpoints must not be roots.
    pub fn sturm_count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let p = self.squarefree_part();
        if p.degree() == 0 {
            return 0;
        }
        assert!(
            !p.eval_rational(a).is_zero() && !p.eval_rational(b).is_zero(),
            "Sturm interval endpoints must not be roots"
        );
        let mut chain: Vec<Vec<BigRational>> = Vec::new();
        chain.push(p.coeffs.iter().map(|c| BigRational::from(c.clone())).collect());
        chain.push(
            p.derivative()
                .coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        );
        loop {
            let last = chain.last().unwrap();
            if last.iter().all(|c| c.is_zero()) {
                chain.pop();
                break;
            }
            let prev = &chain[chain.len() - 2];
            let mut r = rational_rem(prev, last);
            for c in r.iter_mut() {
                *c = -c.clone();
            }
            if r.iter().all(|c| c.is_zero()) {
                break;
            }
            chain.push(r);
        }
        let variations = |x: &BigRational| -> usize {
            let mut signs = Vec::new();
            for poly in &chain {
                let mut acc = BigRational::zero();
                for c in poly.iter().rev() {
                    acc = acc * x + c;
                }
                if !acc.is_zero() {
                    signs.push(acc.is_positive());
                }
            }
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(a).saturating_sub(variations(b))
    }

    /// Factorization of a monic polynomial into monic irreducibles over Z
    /// with multiplicities, by a bounded deterministic divisor search
    /// (constant terms divide p(0), inner coefficients Mignotte-bounded).
    /// Errors when the search space exceeds the desk-scale cap.
    pub fn factor_monic(&self) -> Result<Vec<(IntPolynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::FactorOutOfRange("zero polynomial".into()));
        }
        let mut p = self.clone();
        if p.leading() == -BigInt::one() {
            p = p.neg();
        }
        if !p.is_monic() {
            return Err(Error::FactorOutOfRange(format!(
                "factor_monic requires a monic input, leading coefficient {}",
                self.leading()
            )));
        }
        let mut factors: Vec<(IntPolynomial, usize)> = Vec::new();
        // roots at zero
        let mut work = p.clone();
        let mut x_mult = 0;
        while work.coeff(0).is_zero() && work.degree() > 0 {
            work = work.div_exact(&Self::x_pow(1)).unwrap();
            x_mult += 1;
        }
        if x_mult > 0 {
            factors.push((Self::from_i64(&[0, 1]), x_mult));
        }
        let sq = work.squarefree_part();
        let mut irreducibles = Vec::new();
        factor_squarefree_monic(&sq, &mut irreducibles)?;
        irreducibles.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs.cmp(&b.coeffs))
        });
        for f in irreducibles {
            let mut mult = 0;
            let mut rem = work.clone();
            while let Some(q) = rem.div_exact(&f) {
                mult += 1;
                rem = q;
            }
            debug_assert!(mult >= 1);
            factors.push((f, mult));
        }
        factors.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        Ok(factors)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        let f = self.factor_monic()?;
        Ok(f.len() == 1 && f[0].1 == 1)
    }

    /// L2 norm of the coefficient vector, in f64.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| {
                let x = crate::intmat::bigint_to_f64(c);
                x * x
            })
            .sum::<f64>()
            .sqrt()
    }
}

/// Remainder of rational-coefficient polynomial division.
fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let deg = |p: &[BigRational]| -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    };
    let Some(db) = deg(b) else {
        return a.to_vec();
    };
    let mut rem = a.to_vec();
    loop {
        let Some(da) = deg(&rem) else { break };
        if da < db {
            break;
        }
        let factor = &rem[da] / &b[db];
        let shift = da - db;
        for (j, bc) in b.iter().enumerate().take(db + 1) {
            let sub = &factor * bc;
            rem[j + shift] = &rem[j + shift] - &sub;
        }
        rem[da] = BigRational::zero();
    }
    rem
}

fn factor_squarefree_monic(p: &IntPolynomial, out: &mut Vec<IntPolynomial>) -> Result<()> {
    if p.degree() == 0 {
        return Ok(());
    }
    if p.degree() == 1 {
        out.push(p.clone());
        return Ok(());
    }
    match find_monic_factor(p)? {
        Some(f) => {
            let q = p.div_exact(&f).expect("found factor must divide");
            factor_squarefree_monic(&f, out)?;
            factor_squarefree_monic(&q, out)?;
        }
        None => out.push(p.clone()),
    }
    Ok(())
}

const FACTOR_TRIAL_CAP: u64 = 50_000_000;

/// Deterministic bounded search for a proper monic factor.
fn find_monic_factor(p: &IntPolynomial) -> Result<Option<IntPolynomial>> {
    let n = p.degree();
    let p0 = p.coeff(0);
    debug_assert!(!p0.is_zero());
    let divisors = bounded_divisors(&p0)?;
    let p_at_1 = p.eval_bigint(&BigInt::one());
    let p_at_m1 = p.eval_bigint(&(-BigInt::one()));
    let bound_f = (2f64).powi(n as i32 / 2) * p.l2_norm();
    if bound_f > 1e9 {
        return Err(Error::FactorOutOfRange(format!(
            "Mignotte bound {bound_f:.1e} too large"
        )));
    }
    let bound = bound_f.ceil() as i64;
    for d in 1..=n / 2 {
        // candidate h = x^d + a_{d-1} x^{d-1} + ... + a_1 x + c0
        let inner = d.saturating_sub(1);
        let span = 2 * bound as u64 + 1;
        let total = (divisors.len() as u64 * 2)
            .saturating_mul(span.saturating_pow(inner as u32));
        if total > FACTOR_TRIAL_CAP {
            return Err(Error::FactorOutOfRange(format!(
                "degree-{d} factor search needs {total} trials"
            )));
        }
        for c0 in divisors_signed(&divisors) {
            let mut odometer = vec![-bound; inner];
            loop {
                let mut coeffs = Vec::with_capacity(d + 1);
                coeffs.push(c0.clone());
                for &a in &odometer {
                    coeffs.push(BigInt::from(a));
                }
                coeffs.push(BigInt::one());
                let h = IntPolynomial::new(coeffs);
                if h.degree() == d && factor_filter(&h, &p_at_1, &p_at_m1) {
                    if p.div_exact(&h).is_some() {
                        return Ok(Some(h));
                    }
                }
                // advance odometer
                let mut idx = 0;
                loop {
                    if idx == inner {
                        break;
                    }
                    odometer[idx] += 1;
                    if odometer[idx] <= bound {
                        break;
                    }
                    odometer[idx] = -bound;
                    idx += 1;
                }
                if idx == inner {
                    break;
                }
            }
        }
    }
    Ok(None)
}

fn factor_filter(h: &IntPolynomial, p1: &BigInt, pm1: &BigInt) -> bool {
    let h1 = h.eval_bigint(&BigInt::one());
    if !p1.is_zero() && (h1.is_zero() || !(p1 % &h1).is_zero()) {
        return false;
    }
    let hm1 = h.eval_bigint(&(-BigInt::one()));
    if !pm1.is_zero() && (hm1.is_zero() || !(pm1 % &hm1).is_zero()) {
        return false;
    }
    true
}

fn bounded_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let abs = n.abs();
    let cap = BigInt::from(1_000_000_000_000i64);
    if abs > cap {
        return Err(Error::FactorOutOfRange(format!(
            "constant term {n} too large for divisor enumeration"
        )));
    }
    let nn: i64 = i64::try_from(&abs).expect("bounded above");
    let mut divs = Vec::new();
    let mut i = 1i64;
    while i * i <= nn {
        if nn % i == 0 {
            divs.push(BigInt::from(i));
            if i != nn / i {
                divs.push(BigInt::from(nn / i));
            }
        }
        i += 1;
        if divs.len() > 6400 {
            return Err(Error::FactorOutOfRange(format!(
                "constant term {n} has too many divisors"
            )));
        }
    }
    divs.sort();
    Ok(divs)
}

fn divisors_signed(divs: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

pub fn euler_phi(d: usize) -> usize {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All d with phi(d) <= n (finite: phi(d) >= sqrt(d/2)).
pub fn cyclotomic_indices(n: usize) -> Vec<usize> {
    (1..=2 * n * n + 1).filter(|&d| euler_phi(d) <= n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_basics() {
        assert_eq!(IntPolynomial::cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(4), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(
            IntPolynomial::cyclotomic(6),
            IntPolynomial::from_i64(&[1, -1, 1])
        );
        assert_eq!(
            IntPolynomial::cyclotomic(12),
            IntPolynomial::from_i64(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn phi_indices() {
        assert_eq!(cyclotomic_indices(2), vec![1, 2, 3, 4, 6]);
        assert!(cyclotomic_indices(4).contains(&5));
        assert!(cyclotomic_indices(4).contains(&12));
        assert!(!cyclotomic_indices(4).contains(&7));
    }

    #[test]
    fn gcd_and_division() {
        let a = IntPolynomial::from_i64(&[-1, 0, 1]); // x^2-1
        let b = IntPolynomial::from_i64(&[-1, 1]); // x-1
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.div_exact(&b).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        assert!(a.div_exact(&IntPolynomial::from_i64(&[1, 1, 1])).is_none());
    }

    #[test]
    fn circle_root_counts() {
        // cat map x^2-3x+1: no circle roots
        assert_eq!(IntPolynomial::from_i64(&[1, -3, 1]).count_unit_circle_roots(), 0);
        // x^2+1: both roots on circle
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 1]).count_unit_circle_roots(), 2);
        // (x-1)^2: squarefree part x-1, one circle root
        assert_eq!(IntPolynomial::from_i64(&[1, -2, 1]).count_unit_circle_roots(), 1);
        // Salem sextic x^6-x^4-x^3-x^2+1: 4 roots on the circle
        let salem = IntPolynomial::from_i64(&[1, 0, -1, -1, -1, 0, 1]);
        assert_eq!(salem.count_unit_circle_roots(), 4);
        // x^2 - x - 1 (golden): real roots off circle
        assert_eq!(IntPolynomial::from_i64(&[-1, -1, 1]).count_unit_circle_roots(), 0);
    }

    #[test]
    fn factoring_products() {
        let p = IntPolynomial::from_i64(&[1, -3, 1]) // x^2-3x+1
            .mul(&IntPolynomial::from_i64(&[1, 0, 1])) // x^2+1
            .mul(&IntPolynomial::from_i64(&[-1, 1])); // x-1
        let f = p.factor_monic().unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|(_, m)| *m == 1));
        let degs: Vec<usize> = f.iter().map(|(p, _)| p.degree()).collect();
        assert_eq!(degs, vec![1, 2, 2]);
    }

    #[test]
    fn factoring_multiplicity() {
        let p = IntPolynomial::from_i64(&[-1, 1]);
        let cube = p.mul(&p).mul(&p);
        let f = cube.factor_monic().unwrap();
        assert_eq!(f, vec![(IntPolynomial::from_i64(&[-1, 1]), 3)]);
    }

    #[test]
    fn salem_sextic_is_irreducible() {
        let salem = IntPolynomial::from_i64(&[1, 0, -1, -1, -1, 0, 1]);
        assert!(salem.is_irreducible().unwrap());
        let phi7 = IntPolynomial::cyclotomic(7);
        assert!(phi7.is_irreducible().unwrap());
    }

    #[test]
    fn sturm_counts_roots() {
        // (x-1)(x+1)x = x^3 - x has roots -1, 0, 1
        let p = IntPolynomial::from_i64(&[0, -1, 0, 1]);
        let c = p.sturm_count_open(
            &BigRational::from(BigInt::from(-2)),
            &BigRational::from(BigInt::from(2)),
        );
        assert_eq!(c, 3);
    }
}
