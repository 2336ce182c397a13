//! Spectral data for unimodular integer matrices: the expanding / neutral /
//! contracting splitting with projections, growth rates, and fitted growth
//! constants.
//!
//! Membership of a direction in the neutral subspace is decided
//! structurally, never by floating-point modulus: the characteristic
//! polynomial is factored exactly and each factor's unit-circle root count
//! comes from the exact Sturm machinery in [`crate::intpoly`]. Numeric
//! eigenvectors then fill in the bases, and the construction certifies its
//! own invariance residual against the requested precision.

pub mod hp;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::intpoly::IntPolynomial;

/// Which of the three invariant subspaces a direction belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SubspaceClass {
    /// V1: eigenvalue modulus > 1.
    Expanding,
    /// V2: eigenvalue modulus = 1 (certified symbolically).
    Neutral,
    /// V3: eigenvalue modulus < 1.
    Contracting,
}

impl SubspaceClass {
    pub fn index(self) -> usize {
        match self {
            SubspaceClass::Expanding => 1,
            SubspaceClass::Neutral => 2,
            SubspaceClass::Contracting => 3,
        }
    }

    pub fn from_index(i: usize) -> Self {
        match i {
            1 => SubspaceClass::Expanding,
            2 => SubspaceClass::Neutral,
            3 => SubspaceClass::Contracting,
            _ => panic!("subspace index must be 1, 2 or 3"),
        }
    }
}

/// One eigenvalue's contribution to the splitting.
#[derive(Clone, Debug)]
pub struct SpectralBlock {
    pub eigenvalue: Complex64,
    pub class: SubspaceClass,
    pub factor: IntPolynomial,
    /// Real dimension contributed (multiplicity, doubled for conjugate pairs).
    pub real_dim: usize,
}

/// The V1 (+) V2 (+) V3 decomposition of R^N for an integer matrix, with
/// projections and the fitted growth constant.
#[derive(Clone, Debug)]
pub struct SpectralSplit {
    matrix: IntMatrix,
    dim: usize,
    blocks: Vec<SpectralBlock>,
    /// Full real basis, one column per entry, grouped V1, V2, V3.
    basis: Vec<Vec<f64>>,
    class_of_basis: Vec<SubspaceClass>,
    /// Projection matrices onto V1, V2, V3 (row-major N x N).
    proj: [Vec<f64>; 3],
    rho: Option<f64>,
    c_const: f64,
    precision: u32,
    achieved_residual: f64,
}

impl SpectralSplit {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &[SpectralBlock] {
        &self.blocks
    }

    pub fn subspace_dim(&self, class: SubspaceClass) -> usize {
        self.class_of_basis.iter().filter(|&&c| c == class).count()
    }

    pub fn basis_of(&self, class: SubspaceClass) -> Vec<Vec<f64>> {
        self.basis
            .iter()
            .zip(&self.class_of_basis)
            .filter(|(_, c)| **c == class)
            .map(|(b, _)| b.clone())
            .collect()
    }

    /// Smallest expanding eigenvalue modulus; `None` when V1 is empty.
    pub fn rho(&self) -> Option<f64> {
        self.rho
    }

    pub fn c_const(&self) -> f64 {
        self.c_const
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn achieved_residual(&self) -> f64 {
        self.achieved_residual
    }

    /// pi_i(v) for an integer vector v, i in {1,2,3}.
    pub fn project(&self, v: &[i64], class: SubspaceClass) -> Vec<f64> {
        let vf: Vec<f64> = v.iter().map(|&x| x as f64).collect();
        self.project_f64(&vf, class)
    }

    pub fn project_f64(&self, v: &[f64], class: SubspaceClass) -> Vec<f64> {
        let p = &self.proj[class.index() - 1];
        mat_vec(self.dim, p, v)
    }

    /// Norms of the three projections of v: (|pi_1 v|, |pi_2 v|, |pi_3 v|).
    pub fn projection_norms(&self, v: &[i64]) -> [f64; 3] {
        let vf: Vec<f64> = v.iter().map(|&x| x as f64).collect();
        [
            norm(&self.project_f64(&vf, SubspaceClass::Expanding)),
            norm(&self.project_f64(&vf, SubspaceClass::Neutral)),
            norm(&self.project_f64(&vf, SubspaceClass::Contracting)),
        ]
    }

    /// The paper's frequency norm: max of the three projection norms.
    pub fn projection_max_norm(&self, v: &[i64]) -> f64 {
        let n = self.projection_norms(v);
        n[0].max(n[1]).max(n[2])
    }

    /// Largest C for which the three growth inequalities hold on the
    /// integer ball of the given radius with |i| <= radius.
    pub fn fit_growth_constant(&self, sample_radius: i64) -> f64 {
        growth_constant_fit(self, sample_radius)
    }
}

/// Computes the spectral splitting at the requested certification level
/// (decimal digits). Errors with `PrecisionExhaustion` when the f64-backed
/// residual cannot meet `10^{-precision/2}`.
pub fn split(m: &IntMatrix, precision: u32) -> Result<SpectralSplit> {
    let n = m.dim();
    let char_poly = m.char_poly();
    let factors = char_poly.factor_monic()?;
    let mut blocks: Vec<SpectralBlock> = Vec::new();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut class_of_basis: Vec<SubspaceClass> = Vec::new();
    let mut per_class: [Vec<(Vec<Vec<f64>>, SpectralBlock)>; 3] =
        [Vec::new(), Vec::new(), Vec::new()];

    for (factor, mult) in &factors {
        let deg = factor.degree();
        let on_circle = factor.count_unit_circle_roots();
        if on_circle == deg {
            // entire factor subspace is neutral; exact rational basis
            let sub = factor_subspace_exact(m, factor, *mult);
            debug_assert_eq!(sub.len(), deg * mult);
            let block = SpectralBlock {
                eigenvalue: representative_root(factor),
                class: SubspaceClass::Neutral,
                factor: factor.clone(),
                real_dim: deg * mult,
            };
            per_class[1].push((sub, block));
            continue;
        }
        // mixed or hyperbolic factor: numeric roots, exact on-circle count
        let roots = complex_roots(factor)?;
        let margin = 1e-8;
        let n_on = roots
            .iter()
            .filter(|r| (r.norm() - 1.0).abs() <= margin)
            .count();
        if n_on != on_circle {
            return Err(Error::PrecisionExhaustion(format!(
                "factor {:?}: symbolic circle count {} but {} numeric roots within margin",
                factor.coeffs(),
                on_circle,
                n_on
            )));
        }
        for r in &roots {
            if r.im < -1e-12 {
                continue; // conjugate partner handles it
            }
            let class = if (r.norm() - 1.0).abs() <= margin {
                SubspaceClass::Neutral
            } else if r.norm() > 1.0 {
                SubspaceClass::Expanding
            } else {
                SubspaceClass::Contracting
            };
            let vecs = generalized_eigenvectors(m, *r, *mult)?;
            let real_dim = vecs.len();
            let block = SpectralBlock {
                eigenvalue: *r,
                class,
                factor: factor.clone(),
                real_dim,
            };
            per_class[class.index() - 1].push((vecs, block));
        }
    }

    for class_idx in 0..3 {
        for (vecs, block) in per_class[class_idx].drain(..) {
            for v in vecs {
                basis.push(normalize(v));
                class_of_basis.push(SubspaceClass::from_index(class_idx + 1));
            }
            blocks.push(block);
        }
    }

    if basis.len() != n {
        return Err(Error::PrecisionExhaustion(format!(
            "assembled basis has dimension {} != {}",
            basis.len(),
            n
        )));
    }

    // projections: P selector P^{-1}
    let mut p_mat = vec![0.0; n * n];
    for (j, col) in basis.iter().enumerate() {
        for i in 0..n {
            p_mat[i * n + j] = col[i];
        }
    }
    let p_inv = invert_f64(n, &p_mat).ok_or_else(|| {
        Error::PrecisionExhaustion("spectral basis matrix is numerically singular".into())
    })?;
    let mut proj = [vec![0.0; n * n], vec![0.0; n * n], vec![0.0; n * n]];
    for (j, class) in class_of_basis.iter().enumerate() {
        let target = &mut proj[class.index() - 1];
        for r in 0..n {
            for c in 0..n {
                target[r * n + c] += p_mat[r * n + j] * p_inv[j * n + c];
            }
        }
    }

    let rho = blocks
        .iter()
        .filter(|b| b.class == SubspaceClass::Expanding)
        .map(|b| b.eigenvalue.norm())
        .fold(None, |acc: Option<f64>, x| {
            Some(acc.map_or(x, |a: f64| a.min(x)))
        });

    let mut out = SpectralSplit {
        matrix: m.clone(),
        dim: n,
        blocks,
        basis,
        class_of_basis,
        proj,
        rho,
        c_const: 1.0,
        precision,
        achieved_residual: f64::INFINITY,
    };

    // certify invariance: each basis vector's image must stay in its class
    let mf = m.to_f64();
    let mut residual: f64 = 0.0;
    for (b, class) in out.basis.iter().zip(&out.class_of_basis) {
        let img = mat_vec(n, &mf, b);
        let back = mat_vec(n, &out.proj[class.index() - 1], &img);
        let r: f64 = img
            .iter()
            .zip(&back)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
            / norm(&img).max(1e-300);
        residual = residual.max(r);
    }
    out.achieved_residual = residual;
    let required = 10f64.powf(-(precision as f64) / 2.0);
    if residual > required {
        return Err(Error::PrecisionExhaustion(format!(
            "invariance residual {residual:.3e} exceeds 10^-{precision}/2 = {required:.3e} (f64 backend)"
        )));
    }
    out.c_const = growth_constant_fit(&out, 4);
    Ok(out)
}

/// Exact rational basis of ker p(M)^mult, denominators cleared.
fn factor_subspace_exact(m: &IntMatrix, factor: &IntPolynomial, mult: usize) -> Vec<Vec<f64>> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let n = m.dim();
    let mf = m.entries().to_vec();
    let mut acc = vec![BigInt::zero(); n * n];
    for c in factor.coeffs().iter().rev() {
        // acc = acc * M + c I
        acc = crate::intmat::mul_raw(n, &acc, &mf);
        for i in 0..n {
            acc[i * n + i] += c;
        }
    }
    let mut pow = acc.clone();
    for _ in 1..mult {
        pow = crate::intmat::mul_raw(n, &pow, &acc);
    }
    crate::intmat::rational_kernel(n, &pow)
        .into_iter()
        .map(|iv| iv.iter().map(crate::intmat::bigint_to_f64).collect())
        .collect()
}

fn representative_root(factor: &IntPolynomial) -> Complex64 {
    complex_roots(factor)
        .ok()
        .and_then(|r| r.into_iter().next())
        .unwrap_or(Complex64::new(1.0, 0.0))
}

/// Durand-Kerner roots of a squarefree monic integer polynomial, Newton
/// polished, sorted by (re, im) for determinism.
pub fn complex_roots(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    let deg = p.degree();
    if deg == 0 {
        return Ok(vec![]);
    }
    let coeffs: Vec<f64> = p.coeffs().iter().map(crate::intmat::bigint_to_f64).collect();
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let deriv = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in monic.iter().enumerate().skip(1).rev() {
            acc = acc * z + Complex64::new(c * i as f64, 0.0);
        }
        acc
    };
    let bound = 1.0 + monic.iter().take(deg).map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|k| seed.powu(k as u32 + 1) * bound)
        .collect();
    for _ in 0..400 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 * bound {
            break;
        }
    }
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let d = deriv(*r);
            if d.norm() < 1e-300 {
                break;
            }
            *r -= eval(*r) / d;
        }
        if r.im.abs() < 1e-11 * bound.max(1.0) {
            r.im = 0.0;
        }
    }
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(roots)
}

/// Real basis of the generalized eigenspace of lambda: nullspace of
/// (M - lambda I)^mult. For complex lambda (Im > 0) returns the real/imag
/// pairs of the complex nullspace.
fn generalized_eigenvectors(
    m: &IntMatrix,
    lambda: Complex64,
    mult: usize,
) -> Result<Vec<Vec<f64>>> {
    let n = m.dim();
    let mf = m.to_f64();
    let mut shifted: Vec<Complex64> = mf.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    for i in 0..n {
        shifted[i * n + i] -= lambda;
    }
    let mut power = shifted.clone();
    for _ in 1..mult {
        power = cmat_mul(n, &power, &shifted);
    }
    let ns = complex_nullspace(n, &power, 1e-7);
    if ns.is_empty() {
        return Err(Error::PrecisionExhaustion(format!(
            "no numeric eigenvector found for eigenvalue {lambda}"
        )));
    }
    let mut out = Vec::new();
    if lambda.im.abs() < 1e-11 {
        for v in ns {
            let re: Vec<f64> = v.iter().map(|z| z.re).collect();
            let im: Vec<f64> = v.iter().map(|z| z.im).collect();
            if norm(&re) >= norm(&im) {
                out.push(re);
            } else {
                out.push(im);
            }
        }
    } else {
        for v in ns {
            out.push(v.iter().map(|z| z.re).collect());
            out.push(v.iter().map(|z| z.im).collect());
        }
    }
    Ok(out)
}

fn cmat_mul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark.norm() == 0.0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += ark * b[k * n + c];
            }
        }
    }
    out
}

/// Nullspace basis via complex Gaussian elimination with a relative pivot
/// threshold, Gram-Schmidt orthonormalized.
fn complex_nullspace(n: usize, mat: &[Complex64], rel_tol: f64) -> Vec<Vec<Complex64>> {
    let scale = mat.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    let tol = rel_tol * scale;
    let mut m: Vec<Vec<Complex64>> = (0..n)
        .map(|r| (0..n).map(|c| mat[r * n + c]).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let (pr, pv) = (row..n)
            .map(|r| (r, m[r][col].norm()))
            .fold((row, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if pv <= tol {
            continue;
        }
        m.swap(row, pr);
        let lead = m[row][col];
        for c in 0..n {
            m[row][c] /= lead;
        }
        for r in 0..n {
            if r != row && m[r][col].norm() > 0.0 {
                let f = m[r][col];
                for c in 0..n {
                    let sub = f * m[row][c];
                    m[r][c] -= sub;
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
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[fc] = Complex64::new(1.0, 0.0);
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[i][fc];
        }
        basis.push(v);
    }
    let mut ortho: Vec<Vec<Complex64>> = Vec::new();
    for mut v in basis {
        for u in &ortho {
            let dot: Complex64 = v.iter().zip(u.iter()).map(|(a, b)| a * b.conj()).sum();
            for (x, y) in v.iter_mut().zip(u.iter()) {
                *x -= dot * y;
            }
        }
        let nv = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if nv > 1e-12 {
            for x in v.iter_mut() {
                *x /= nv;
            }
            ortho.push(v);
        }
    }
    ortho
}

fn invert_f64(n: usize, mat: &[f64]) -> Option<Vec<f64>> {
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|r| (0..n).map(|c| mat[r * n + c]).collect())
        .collect();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { 1.0 } else { 0.0 }).collect())
        .collect();
    for col in 0..n {
        let (pr, pv) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .fold((col, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if pv < 1e-13 {
            return None;
        }
        a.swap(col, pr);
        inv.swap(col, pr);
        let lead = a[col][col];
        for c in 0..n {
            a[col][c] /= lead;
            inv[col][c] /= lead;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0.0 {
                let f = a[r][col];
                for c in 0..n {
                    a[r][c] -= f * a[col][c];
                    inv[r][c] -= f * inv[col][c];
                }
            }
        }
    }
    Some(inv.into_iter().flatten().collect())
}

pub(crate) fn mat_vec(n: usize, m: &[f64], v: &[f64]) -> Vec<f64> {
    (0..n)
        .map(|r| (0..n).map(|c| m[r * n + c] * v[c]).sum())
        .collect()
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn normalize(v: Vec<f64>) -> Vec<f64> {
    let n = norm(&v);
    if n == 0.0 {
        v
    } else {
        v.into_iter().map(|x| x / n).collect()
    }
}

/// Outcome of the pair growth-rate minimax.
#[derive(Clone, Debug)]
pub enum GrowthRate {
    /// Positive rate tau = f(t0)/2 with the minimax value attained at t0.
    Tau { tau: f64, f_min: f64, t0: (f64, f64) },
    /// A unit direction on which every Lyapunov exponent vanishes.
    Degenerate { direction: (f64, f64) },
}

/// Per-eigenline Lyapunov exponents of commuting generators.
#[derive(Clone, Debug)]
pub struct LyapunovTable {
    /// (complex eigenvector, one exponent per generator)
    pub rows: Vec<(Vec<Complex64>, Vec<f64>)>,
}

/// Shared eigenlines of a commuting pair with simple spectrum on the first:
/// (eigenvector, exponent of a, exponent of b).
pub fn shared_eigen_data(
    a: &IntMatrix,
    b: &IntMatrix,
) -> Result<Vec<(Vec<Complex64>, f64, f64)>> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension("pair must share a dimension".into()));
    }
    let ab = a.mat_mul(b)?;
    let ba = b.mat_mul(a)?;
    if ab != ba {
        return Err(Error::Unsupported(
            "shared eigenline computation requires exactly commuting generators".into(),
        ));
    }
    let pa = a.char_poly();
    if pa.gcd(&pa.derivative()).degree() > 0 {
        return Err(Error::Unsupported(
            "shared eigenline computation requires simple spectrum on the first generator".into(),
        ));
    }
    let n = a.dim();
    let roots = complex_roots(&pa)?;
    let bf: Vec<Complex64> = b.to_f64().iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let af: Vec<Complex64> = a.to_f64().iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut out = Vec::new();
    for lambda in roots {
        let mut shifted = af.clone();
        for i in 0..n {
            shifted[i * n + i] -= lambda;
        }
        let ns = complex_nullspace(n, &shifted, 1e-8);
        let v = ns
            .into_iter()
            .next()
            .ok_or_else(|| Error::PrecisionExhaustion(format!("no eigenvector for {lambda}")))?;
        let bv: Vec<Complex64> = (0..n)
            .map(|r| (0..n).map(|c| bf[r * n + c] * v[c]).sum())
            .collect();
        let vv: Complex64 = v.iter().map(|z| z * z.conj()).sum();
        let mu: Complex64 = v
            .iter()
            .zip(&bv)
            .map(|(z, w)| w * z.conj())
            .sum::<Complex64>()
            / vv;
        let res: f64 = bv
            .iter()
            .zip(&v)
            .map(|(w, z)| (w - mu * z).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if res > 1e-6 * (1.0 + mu.norm()) {
            return Err(Error::PrecisionExhaustion(format!(
                "shared eigenline residual {res:.2e} for eigenvalue {lambda}"
            )));
        }
        out.push((v, lambda.norm().ln(), mu.norm().max(1e-300).ln()));
    }
    Ok(out)
}

pub fn lyapunov_table(gens: &[IntMatrix]) -> Result<LyapunovTable> {
    let Some(first) = gens.first() else {
        return Err(Error::Precondition("empty generator list".into()));
    };
    let mut rows: Vec<(Vec<Complex64>, Vec<f64>)> = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        let data = shared_eigen_data(first, g)?;
        if gi == 0 {
            for (v, chi_a, _) in &data {
                rows.push((v.clone(), vec![*chi_a]));
            }
            continue;
        }
        for (i, (_, _, chi_b)) in data.iter().enumerate() {
            rows[i].1.push(*chi_b);
        }
    }
    Ok(LyapunovTable { rows })
}

/// Minimax growth rate of a commuting pair: minimum over the unit circle of
/// the largest directional Lyapunov exponent, evaluated on a 4096-point
/// grid and refined by golden section. A degenerate pair is reported with
/// its vanishing direction instead of a clamped rate.
pub fn pair_growth_rate(a: &IntMatrix, b: &IntMatrix) -> Result<GrowthRate> {
    let data = shared_eigen_data(a, b)?;
    let exps: Vec<(f64, f64)> = data.iter().map(|(_, x, y)| (*x, *y)).collect();
    let f = |theta: f64| -> f64 {
        let (s, c) = theta.sin_cos();
        exps.iter()
            .map(|(xa, xb)| c * xa + s * xb)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    const GRID: usize = 4096;
    let mut best = (0usize, f64::INFINITY);
    for k in 0..GRID {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / GRID as f64;
        let val = f(theta);
        if val < best.1 {
            best = (k, val);
        }
    }
    let step = 2.0 * std::f64::consts::PI / GRID as f64;
    let center = best.0 as f64 * step;
    let (mut lo, mut hi) = (center - step, center + step);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (hi - phi * (hi - lo), lo + phi * (hi - lo));
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let t_star = 0.5 * (lo + hi);
    let f_min = f(t_star);
    if f_min <= 1e-9 {
        // locate the direction where even max_i |chi_i| vanishes
        let g = |theta: f64| -> f64 {
            let (s, c) = theta.sin_cos();
            exps.iter()
                .map(|(xa, xb)| (c * xa + s * xb).abs())
                .fold(0.0, f64::max)
        };
        let mut bd = (0.0, f64::INFINITY);
        for k in 0..GRID {
            let theta = std::f64::consts::PI * k as f64 / GRID as f64;
            let val = g(theta);
            if val < bd.1 {
                bd = (theta, val);
            }
        }
        return Ok(GrowthRate::Degenerate {
            direction: (bd.0.cos(), bd.0.sin()),
        });
    }
    Ok(GrowthRate::Tau {
        tau: f_min / 2.0,
        f_min,
        t0: (t_star.cos(), t_star.sin()),
    })
}

/// Largest C such that the expanding/contracting/neutral growth
/// inequalities hold on the integer ball of the given radius for all
/// |i| <= radius; vacuous constraints contribute 1.
pub fn growth_constant_fit(split: &SpectralSplit, sample_radius: i64) -> f64 {
    let n = split.dim;
    let rho = split.rho.unwrap_or(1.0);
    let mut powers: Vec<Vec<f64>> = Vec::new();
    for i in -sample_radius..=sample_radius {
        powers.push(split.matrix.pow(i).to_f64());
    }
    let at = |i: i64| -> &Vec<f64> { &powers[(i + sample_radius) as usize] };
    let mut c1 = f64::INFINITY;
    let mut c2 = f64::INFINITY;
    let mut c3 = f64::INFINITY;
    let mut coords = vec![-sample_radius; n];
    loop {
        let v: Vec<i64> = coords.clone();
        let nv: f64 = (v.iter().map(|&x| (x * x) as f64).sum::<f64>()).sqrt();
        if nv > 1e-12 && nv <= sample_radius as f64 {
            let p1 = split.project(&v, SubspaceClass::Expanding);
            let p2 = split.project(&v, SubspaceClass::Neutral);
            let p3 = split.project(&v, SubspaceClass::Contracting);
            if norm(&p1) > 1e-9 {
                for i in 0..=sample_radius {
                    let img = mat_vec(n, at(i), &p1);
                    c1 = c1.min(norm(&img) / (rho.powi(i as i32) * norm(&p1)));
                }
            }
            if norm(&p3) > 1e-9 {
                for i in -sample_radius..=0 {
                    let img = mat_vec(n, at(i), &p3);
                    c3 = c3.min(norm(&img) / (rho.powi((-i) as i32) * norm(&p3)));
                }
            }
            if norm(&p2) > 1e-9 {
                for i in -sample_radius..=sample_radius {
                    if i == 0 {
                        continue;
                    }
                    let img = mat_vec(n, at(i), &p2);
                    let weight = (i.abs() as f64).powi(-(n as i32));
                    c2 = c2.min(norm(&img) / (weight * norm(&p2)));
                }
            }
        }
        let mut idx = 0;
        loop {
            if idx == n {
                break;
            }
            coords[idx] += 1;
            if coords[idx] <= sample_radius {
                break;
            }
            coords[idx] = -sample_radius;
            idx += 1;
        }
        if idx == n {
            break;
        }
    }
    let fix = |c: f64| if c.is_finite() { c } else { 1.0 };
    fix(c1).min(fix(c2)).min(fix(c3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cat() -> IntMatrix {
        IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn cat_split_dimensions_and_rate() {
        let s = split(&cat(), 18).unwrap();
        assert_eq!(s.subspace_dim(SubspaceClass::Expanding), 1);
        assert_eq!(s.subspace_dim(SubspaceClass::Neutral), 0);
        assert_eq!(s.subspace_dim(SubspaceClass::Contracting), 1);
        // rho = (3+sqrt 5)/2 from the quadratic formula on x^2-3x+1
        let expected = (3.0 + 5f64.sqrt()) / 2.0;
        assert_abs_diff_eq!(s.rho().unwrap(), expected, epsilon = 1e-12);
    }

    #[test]
    fn unipotent_split_is_all_neutral() {
        let shear = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let s = split(&shear, 18).unwrap();
        assert_eq!(s.subspace_dim(SubspaceClass::Neutral), 2);
        assert_eq!(s.subspace_dim(SubspaceClass::Expanding), 0);
        assert_eq!(s.subspace_dim(SubspaceClass::Contracting), 0);
        assert!(s.rho().is_none());
    }

    #[test]
    fn block_cat_rotation_dimensions() {
        let m = IntMatrix::from_rows(&[
            vec![2, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, 1, 0],
        ])
        .unwrap();
        let s = split(&m, 18).unwrap();
        assert_eq!(s.subspace_dim(SubspaceClass::Expanding), 1);
        assert_eq!(s.subspace_dim(SubspaceClass::Neutral), 2);
        assert_eq!(s.subspace_dim(SubspaceClass::Contracting), 1);
    }

    #[test]
    fn projections_are_complete_and_accurate() {
        let s = split(&cat(), 18).unwrap();
        // independent oracle: eigenvector of the symmetric cat map by the
        // quadratic formula; phi = (1+sqrt5)/2, u1 = (phi, 1)/|.|
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let v = [1i64, 0];
        let p1 = s.project(&v, SubspaceClass::Expanding);
        let scale = phi / (phi * phi + 1.0);
        assert_abs_diff_eq!(p1[0], scale * phi, epsilon = 1e-10);
        assert_abs_diff_eq!(p1[1], scale, epsilon = 1e-10);
        for v in [[3i64, -2], [1, 1], [-4, 7]] {
            let p1 = s.project(&v, SubspaceClass::Expanding);
            let p2 = s.project(&v, SubspaceClass::Neutral);
            let p3 = s.project(&v, SubspaceClass::Contracting);
            for i in 0..2 {
                assert_abs_diff_eq!(p1[i] + p2[i] + p3[i], v[i] as f64, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn precision_exhaustion_is_reported() {
        assert!(matches!(
            split(&cat(), 40),
            Err(Error::PrecisionExhaustion(_))
        ));
    }

    #[test]
    fn dependent_pair_is_degenerate() {
        let a = cat();
        let b = a.pow(2);
        match pair_growth_rate(&a, &b).unwrap() {
            GrowthRate::Degenerate { direction } => {
                // exponents of A^2 are doubled: the line t1 + 2 t2 = 0
                let (t1, t2) = direction;
                assert_abs_diff_eq!(t1 + 2.0 * t2, 0.0, epsilon = 1e-3);
            }
            other => panic!("expected degenerate pair, got {other:?}"),
        }
    }

    #[test]
    fn growth_rate_is_symmetric() {
        let a = IntMatrix::from_rows(&[vec![0, 0, -1], vec![1, 0, 3], vec![0, 1, 0]]).unwrap();
        let b = crate::search::independent_unit_partner(&a, 3).expect("unit partner exists");
        let t_ab = match pair_growth_rate(&a, &b).unwrap() {
            GrowthRate::Tau { tau, .. } => tau,
            other => panic!("expected positive rate, got {other:?}"),
        };
        let t_ba = match pair_growth_rate(&b, &a).unwrap() {
            GrowthRate::Tau { tau, .. } => tau,
            other => panic!("expected positive rate, got {other:?}"),
        };
        assert!(t_ab > 0.0);
        assert_abs_diff_eq!(t_ab, t_ba, epsilon = 1e-6);
    }

    #[test]
    fn growth_constant_positive_for_cat() {
        let s = split(&cat(), 18).unwrap();
        let c = growth_constant_fit(&s, 10);
        assert!(c > 0.0, "fitted constant must be positive, got {c}");
    }

    #[test]
    fn exponent_additivity_on_words() {
        let a = IntMatrix::from_rows(&[vec![0, 0, -1], vec![1, 0, 3], vec![0, 1, 0]]).unwrap();
        let b = crate::search::independent_unit_partner(&a, 3).unwrap();
        let data = shared_eigen_data(&a, &b).unwrap();
        for k1 in -5i64..=5 {
            for k2 in -5i64..=5 {
                if (k1, k2) == (0, 0) {
                    continue;
                }
                let w = a.pow(k1).mat_mul(&b.pow(k2)).unwrap();
                let Ok(wd) = shared_eigen_data(&w, &w) else {
                    continue;
                };
                let mut measured: Vec<f64> = wd.iter().map(|(_, x, _)| *x).collect();
                let mut predicted: Vec<f64> = data
                    .iter()
                    .map(|(_, xa, xb)| k1 as f64 * xa + k2 as f64 * xb)
                    .collect();
                measured.sort_by(|x, y| x.partial_cmp(y).unwrap());
                predicted.sort_by(|x, y| x.partial_cmp(y).unwrap());
                for (m, p) in measured.iter().zip(&predicted) {
                    assert_abs_diff_eq!(m, p, epsilon = 1e-6);
                }
            }
        }
    }
}
