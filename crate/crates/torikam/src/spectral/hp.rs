//! Elevated-precision projection norms for tie-breaking.
//!
//! Eigenvalues are algebraic; near-ties between projection norms of an
//! integer vector are resolved by polishing each root of the exact
//! characteristic factors with rational-complex Newton steps (rounded to a
//! controlled denominator so sizes stay bounded) and re-solving the basis
//! system in exact rational arithmetic at the elevated working precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::intpoly::IntPolynomial;
use crate::spectral::SubspaceClass;

/// Complex number with exact rational components.
#[derive(Clone, Debug, PartialEq)]
pub struct RatC {
    pub re: BigRational,
    pub im: BigRational,
}

impl RatC {
    pub fn zero() -> Self {
        RatC {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        RatC {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(RatC {
            re: BigRational::from_float(re)?,
            im: BigRational::from_float(im)?,
        })
    }

    pub fn from_int(n: &BigInt) -> Self {
        RatC {
            re: BigRational::from(n.clone()),
            im: BigRational::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatC {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatC {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatC {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn neg(&self) -> Self {
        RatC {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        RatC {
            re: (&self.re * &o.re + &self.im * &o.im) / &d,
            im: (&self.im * &o.re - &self.re * &o.im) / &d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Rounds both components to denominator 10^digits (nearest).
    pub fn rounded(&self, digits: u32) -> Self {
        RatC {
            re: round_rational(&self.re, digits),
            im: round_rational(&self.im, digits),
        }
    }
}

pub fn round_rational(x: &BigRational, digits: u32) -> BigRational {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * BigRational::from(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let shifted = if scaled.is_negative() {
        scaled - half
    } else {
        scaled + half
    };
    BigRational::new(shifted.to_integer(), scale)
}

fn eval_poly(p: &IntPolynomial, z: &RatC) -> RatC {
    let mut acc = RatC::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&RatC::from_int(c));
    }
    acc
}

/// Newton-polishes an f64 root seed of an exact polynomial to the target
/// number of decimal digits, rounding after each step.
pub fn polish_root(p: &IntPolynomial, seed: (f64, f64), digits: u32) -> Result<RatC> {
    let dp = p.derivative();
    let mut z = RatC::from_f64(seed.0, seed.1)
        .ok_or_else(|| Error::Precondition("non-finite root seed".into()))?;
    let work = 2 * digits + 10;
    let target = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits + 3).pow(2));
    for _ in 0..12 {
        let pv = eval_poly(p, &z);
        if pv.norm_sqr() < target {
            return Ok(z);
        }
        let dv = eval_poly(&dp, &z);
        if dv.is_zero() {
            break;
        }
        z = z.sub(&pv.div(&dv)).rounded(work);
    }
    let pv = eval_poly(p, &z);
    if pv.norm_sqr() < target {
        Ok(z)
    } else {
        Err(Error::PrecisionExhaustion(format!(
            "Newton polish stalled at residual^2 {:.3e}",
            crate::intmat::bigint_to_f64(&pv.norm_sqr().to_integer())
        )))
    }
}

/// Exact-rational squared projection norms (|pi_1 v|^2, |pi_2 v|^2,
/// |pi_3 v|^2) at the elevated working precision. Used to break ties the
/// f64 path cannot resolve.
pub fn projection_norms_sq_hp(
    m: &IntMatrix,
    v: &[i64],
    digits: u32,
) -> Result<[BigRational; 3]> {
    let n = m.dim();
    if v.len() != n {
        return Err(Error::Dimension("vector/matrix dimension mismatch".into()));
    }
    let factors = m.char_poly().factor_monic()?;
    // columns of the basis matrix with their class
    let mut columns: Vec<(Vec<RatC>, SubspaceClass)> = Vec::new();
    for (factor, mult) in &factors {
        let deg = factor.degree();
        let on_circle = factor.count_unit_circle_roots();
        let roots = crate::spectral::complex_roots(factor)?;
        let margin = 1e-8;
        let n_on = roots
            .iter()
            .filter(|r| (r.norm() - 1.0).abs() <= margin)
            .count();
        if n_on != on_circle {
            return Err(Error::PrecisionExhaustion(
                "circle count mismatch in hp basis".into(),
            ));
        }
        let _ = deg;
        for r in &roots {
            let class = if (r.norm() - 1.0).abs() <= margin {
                SubspaceClass::Neutral
            } else if r.norm() > 1.0 {
                SubspaceClass::Expanding
            } else {
                SubspaceClass::Contracting
            };
            let lambda = polish_root(factor, (r.re, r.im), digits)?;
            let kernel = kernel_hp(m, &lambda, *mult, digits)?;
            if kernel.len() != *mult {
                return Err(Error::PrecisionExhaustion(format!(
                    "hp kernel dimension {} != multiplicity {}",
                    kernel.len(),
                    mult
                )));
            }
            for k in kernel {
                columns.push((k, class));
            }
        }
    }
    if columns.len() != n {
        return Err(Error::PrecisionExhaustion(format!(
            "hp basis has {} columns, expected {}",
            columns.len(),
            n
        )));
    }
    // solve P c = v
    let rhs: Vec<RatC> = v.iter().map(|&x| RatC::from_int(&BigInt::from(x))).collect();
    let coeffs = solve_hp(n, &columns, &rhs, digits)?;
    let mut out = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    for class in [
        SubspaceClass::Expanding,
        SubspaceClass::Neutral,
        SubspaceClass::Contracting,
    ] {
        let mut proj = vec![RatC::zero(); n];
        for (j, (col, c)) in columns.iter().enumerate() {
            if *c != class {
                continue;
            }
            for (i, e) in col.iter().enumerate() {
                proj[i] = proj[i].add(&e.mul(&coeffs[j]));
            }
        }
        out[class.index() - 1] = proj.iter().map(|z| z.norm_sqr()).sum();
    }
    Ok(out)
}

/// Kernel of (M - lambda I)^mult in rational-complex arithmetic with a
/// precision-scaled zero threshold.
fn kernel_hp(m: &IntMatrix, lambda: &RatC, mult: usize, digits: u32) -> Result<Vec<Vec<RatC>>> {
    let n = m.dim();
    let mut shifted: Vec<RatC> = m.entries().iter().map(RatC::from_int).collect();
    for i in 0..n {
        shifted[i * n + i] = shifted[i * n + i].sub(lambda);
    }
    let mut power = shifted.clone();
    for _ in 1..mult {
        power = cmul_hp(n, &power, &shifted);
    }
    // zero threshold: squared magnitude below 10^{-2(digits-8)}
    let thr_digits = digits.saturating_sub(8).max(4);
    let thr = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(2 * thr_digits));
    let mut rows: Vec<Vec<RatC>> = (0..n)
        .map(|r| (0..n).map(|c| power[r * n + c].clone()).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let mut best = (row, BigRational::zero());
        for r in row..n {
            let mag = rows[r][col].norm_sqr();
            if mag > best.1 {
                best = (r, mag);
            }
        }
        if best.1 <= thr {
            continue;
        }
        rows.swap(row, best.0);
        let lead = rows[row][col].clone();
        for c in 0..n {
            rows[row][c] = rows[row][c].div(&lead);
        }
        for r in 0..n {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..n {
                    let sub = f.mul(&rows[row][c]);
                    rows[r][c] = rows[r][c].sub(&sub);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![RatC::zero(); n];
        v[fc] = RatC::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = rows[i][fc].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}

fn cmul_hp(n: usize, a: &[RatC], b: &[RatC]) -> Vec<RatC> {
    let mut out = vec![RatC::zero(); n * n];
    for r in 0..n {
        for k in 0..n {
            if a[r * n + k].is_zero() {
                continue;
            }
            for c in 0..n {
                let add = a[r * n + k].mul(&b[k * n + c]);
                out[r * n + c] = out[r * n + c].add(&add);
            }
        }
    }
    out
}

fn solve_hp(
    n: usize,
    columns: &[(Vec<RatC>, SubspaceClass)],
    rhs: &[RatC],
    digits: u32,
) -> Result<Vec<RatC>> {
    let thr_digits = digits.saturating_sub(8).max(4);
    let thr = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(2 * thr_digits));
    // augmented [P | rhs]
    let mut aug: Vec<Vec<RatC>> = (0..n)
        .map(|r| {
            let mut row: Vec<RatC> = columns.iter().map(|(col, _)| col[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for col in 0..n {
        let mut best = (col, BigRational::zero());
        for r in col..n {
            let mag = aug[r][col].norm_sqr();
            if mag > best.1 {
                best = (r, mag);
            }
        }
        if best.1 <= thr {
            return Err(Error::PrecisionExhaustion(
                "hp basis matrix numerically singular at working precision".into(),
            ));
        }
        aug.swap(col, best.0);
        let lead = aug[col][col].clone();
        for c in 0..=n {
            aug[col][c] = aug[col][c].div(&lead);
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=n {
                    let sub = f.mul(&aug[col][c]);
                    aug[r][c] = aug[r][c].sub(&sub);
                }
            }
        }
    }
    Ok((0..n).map(|r| aug[r][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polish_improves_golden_ratio_root() {
        // x^2 - x - 1, root phi
        let p = IntPolynomial::from_i64(&[-1, -1, 1]);
        let z = polish_root(&p, (1.618, 0.0), 40).unwrap();
        let res = eval_poly(&p, &z).norm_sqr();
        let bound = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(80));
        assert!(res < bound);
    }

    #[test]
    fn hp_projection_matches_f64_for_cat() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let split = crate::spectral::split(&m, 18).unwrap();
        let v = [3i64, -1];
        let hp = projection_norms_sq_hp(&m, &v, 40).unwrap();
        let f = split.projection_norms(&v);
        for i in 0..3 {
            use num_traits::ToPrimitive;
            let hp_f = hp[i].to_f64().unwrap_or(f64::NAN);
            let diff = (hp_f.sqrt() - f[i]).abs();
            assert!(diff < 1e-9, "class {} differs: hp {} vs f64 {}", i + 1, hp_f.sqrt(), f[i]);
        }
    }

    #[test]
    fn hp_confirms_symmetric_tie() {
        // block diag(cat, cat^{-1}) swaps expanding and contracting lines
        // between the blocks, so v = (1,0,1,0) loads both sides equally:
        // |pi_1 v|^2 = |pi_3 v|^2 = 1 exactly.
        let m = IntMatrix::from_rows(&[
            vec![2, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, -1],
            vec![0, 0, -1, 2],
        ])
        .unwrap();
        let v = [1i64, 0, 1, 0];
        let hp = projection_norms_sq_hp(&m, &v, 40).unwrap();
        let diff = (&hp[0] - &hp[2]).abs();
        let margin = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(30));
        assert!(
            diff < margin,
            "tie must persist at 40 digits, diff {}",
            diff
        );
        // and both are 1 to elevated precision
        let one_dev = (&hp[0] - BigRational::one()).abs();
        assert!(one_dev < margin);
    }
}
