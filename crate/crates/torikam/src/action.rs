//! Words, commutators, nilpotency structure, and the higher-rank /
//! genuinely-partially-hyperbolic predicates over finite generator sets.
//!
//! Nilpotency is verified up to configurable word and depth bounds; the
//! verdicts always state the bound they were established under.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intmat::{intersect_spans, IntMatrix};
use crate::spectral::{self, GrowthRate};

/// Named generators of a matrix group acting on T^N, plus verified
/// structural facts.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    pub dim: usize,
    generators: Vec<(String, IntMatrix)>,
    pub nilpotency_length: Option<usize>,
    pub ergodic_witnesses: Vec<String>,
    /// Derived chain d_j = D_j(g1, d0) when the spec names g1 and d0.
    pub d_chain: Option<Vec<IntMatrix>>,
}

impl ActionSpec {
    pub fn new(generators: Vec<(String, IntMatrix)>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::Precondition("an action needs generators".into()));
        };
        let dim = first.1.dim();
        if generators.iter().any(|(_, g)| g.dim() != dim) {
            return Err(Error::Dimension(
                "all generators must share a dimension".into(),
            ));
        }
        let mut names = BTreeSet::new();
        for (n, _) in &generators {
            if !names.insert(n.clone()) {
                return Err(Error::Precondition(format!("duplicate generator name {n}")));
            }
        }
        let ergodic_witnesses = generators
            .iter()
            .filter(|(_, g)| g.is_ergodic())
            .map(|(n, _)| n.clone())
            .collect();
        Ok(ActionSpec {
            dim,
            generators,
            nilpotency_length: None,
            ergodic_witnesses,
            d_chain: None,
        })
    }

    pub fn generators(&self) -> &[(String, IntMatrix)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&IntMatrix> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Builds the commutator chain d_j = D_j(g1, d0) and stores it.
    pub fn with_d_chain(mut self, g1: &str, d0: &str, depth: usize) -> Result<Self> {
        let x = self
            .generator(g1)
            .ok_or_else(|| Error::Precondition(format!("no generator {g1}")))?
            .clone();
        let y = self
            .generator(d0)
            .ok_or_else(|| Error::Precondition(format!("no generator {d0}")))?
            .clone();
        self.d_chain = Some(commutator_chain(&x, &y, depth)?);
        Ok(self)
    }
}

/// A formal word in the generators with exponents +-1 per letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    pub letters: Vec<(String, i8)>,
}

impl Word {
    pub fn eval(&self, spec: &ActionSpec) -> Result<IntMatrix> {
        let mut acc = IntMatrix::identity(spec.dim);
        for (name, e) in &self.letters {
            let g = spec
                .generator(name)
                .ok_or_else(|| Error::Precondition(format!("no generator {name}")))?;
            let m = if *e >= 0 { g.clone() } else { g.inverse() };
            acc = acc.mat_mul(&m)?;
        }
        Ok(acc)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// All freely reduced words of length 1..=max_len, lexicographic within
/// each length (deterministic witness order).
pub fn word_ball(spec: &ActionSpec, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let letters: Vec<(String, i8)> = spec
        .generators
        .iter()
        .flat_map(|(n, _)| [(n.clone(), 1i8), (n.clone(), -1i8)])
        .collect();
    let mut frontier: Vec<Word> = vec![Word { letters: vec![] }];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in &letters {
                if let Some(last) = w.letters.last() {
                    if last.0 == l.0 && last.1 == -l.1 {
                        continue; // immediate cancellation
                    }
                }
                let mut nw = w.clone();
                nw.letters.push(l.clone());
                next.push(nw);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The iterated commutators D_1 = x^{-1} y^{-1} x y,
/// D_{i+1} = x^{-1} D_i^{-1} x D_i, computed exactly.
pub fn commutator_chain(x: &IntMatrix, y: &IntMatrix, depth: usize) -> Result<Vec<IntMatrix>> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension("commutator of unequal dimensions".into()));
    }
    let mut out = Vec::with_capacity(depth);
    let mut d = IntMatrix::commutator(x, y)?;
    out.push(d.clone());
    for _ in 1..depth {
        d = IntMatrix::commutator(x, &d)?;
        out.push(d.clone());
    }
    Ok(out)
}

/// Report of the bounded lower-central-series scan.
#[derive(Clone, Debug)]
pub struct LcsReport {
    /// Non-identity commutator generating sets per depth (depth 1 first).
    pub levels: Vec<Vec<IntMatrix>>,
    /// Least depth at which the commutator set vanishes, if within bounds.
    pub nilpotency_length: Option<usize>,
    pub word_bound: usize,
    pub max_depth: usize,
    /// Set when a level hit the size cap (verdict is then conservative).
    pub truncated: bool,
}

const LCS_LEVEL_CAP: usize = 512;

/// Scans the lower central series up to `max_depth`, forming depth-1
/// commutators from the word ball of radius `word_bound` and deeper levels
/// by commutating with generators. Returns the least depth at which the
/// set collapses to the identity, or None ("not nilpotent within bounds").
pub fn lower_central_series(
    spec: &ActionSpec,
    max_depth: usize,
    word_bound: usize,
) -> Result<LcsReport> {
    let ball = word_ball(spec, word_bound);
    let mats: Vec<IntMatrix> = ball
        .iter()
        .map(|w| w.eval(spec))
        .collect::<Result<Vec<_>>>()?;
    let mut truncated = false;
    let mut level: Vec<IntMatrix> = Vec::new();
    let mut seen = BTreeSet::new();
    'outer: for a in &mats {
        for b in &mats {
            let c = IntMatrix::commutator(a, b)?;
            if c.is_identity() {
                continue;
            }
            if seen.insert(c.entries().to_vec()) {
                level.push(c);
                if level.len() >= LCS_LEVEL_CAP {
                    truncated = true;
                    break 'outer;
                }
            }
        }
    }
    let gens: Vec<IntMatrix> = spec
        .generators
        .iter()
        .flat_map(|(_, g)| [g.clone(), g.inverse()])
        .collect();
    let mut levels = vec![level];
    let mut nilpotency = None;
    if levels[0].is_empty() {
        nilpotency = Some(1);
    }
    for depth in 2..=max_depth {
        if nilpotency.is_some() {
            break;
        }
        let prev = levels.last().unwrap().clone();
        let mut next = Vec::new();
        let mut seen = BTreeSet::new();
        'lvl: for g in &gens {
            for t in &prev {
                let c = IntMatrix::commutator(g, t)?;
                if c.is_identity() {
                    continue;
                }
                if seen.insert(c.entries().to_vec()) {
                    next.push(c);
                    if next.len() >= LCS_LEVEL_CAP {
                        truncated = true;
                        break 'lvl;
                    }
                }
            }
        }
        if next.is_empty() {
            nilpotency = Some(depth);
        }
        levels.push(next);
    }
    Ok(LcsReport {
        levels,
        nilpotency_length: nilpotency,
        word_bound,
        max_depth,
        truncated,
    })
}

/// Verdict of the two-part higher-rank check: exact ergodicity of all
/// mixed powers up to the bound, plus the exponent-line minimax. Neither
/// part alone is conclusive; both are reported.
#[derive(Clone, Debug)]
pub struct HigherRankVerdict {
    /// First k (ordered by |k|_inf, then lexicographic) whose power word
    /// A^{k1} B^{k2} fails to be ergodic.
    pub failing_k: Option<(i64, i64)>,
    pub k_bound: i64,
    pub growth: Option<GrowthRate>,
}

impl HigherRankVerdict {
    pub fn passed(&self) -> bool {
        self.failing_k.is_none()
            && matches!(self.growth, Some(GrowthRate::Tau { tau, .. }) if tau > 0.0)
    }
}

pub fn is_higher_rank(a: &IntMatrix, b: &IntMatrix, k_bound: i64) -> Result<HigherRankVerdict> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension("pair must share a dimension".into()));
    }
    let mut failing = None;
    'search: for radius in 1..=k_bound {
        for k1 in -radius..=radius {
            for k2 in -radius..=radius {
                if k1.abs().max(k2.abs()) != radius {
                    continue;
                }
                let w = a.pow(k1).mat_mul(&b.pow(k2))?;
                if !w.is_ergodic() {
                    failing = Some((k1, k2));
                    break 'search;
                }
            }
        }
    }
    let growth = if failing.is_none() {
        Some(spectral::pair_growth_rate(a, b)?)
    } else {
        match spectral::pair_growth_rate(a, b) {
            Ok(g) => Some(g),
            Err(_) => None,
        }
    };
    Ok(HigherRankVerdict {
        failing_k: failing,
        k_bound,
        growth,
    })
}

/// Witness for the invariant neutral direction of a candidate genuinely
/// partially hyperbolic action.
#[derive(Clone, Debug)]
pub enum NeutralWitness {
    /// A common invariant rational subspace on which every generator has
    /// all eigenvalues of modulus 1 (integer basis, denominators cleared).
    RationalSubspace(Vec<Vec<BigInt>>),
    /// No rational witness within reach; per-generator real neutral
    /// dimensions are reported instead.
    RealOnly { neutral_dims: Vec<usize> },
    None,
}

#[derive(Clone, Debug)]
pub struct GphVerdict {
    /// First ergodic word in the ball, if any.
    pub ergodic_word: Option<Word>,
    /// First hyperbolic (Anosov) word in the ball, if any: a disqualifier.
    pub hyperbolic_word: Option<Word>,
    pub neutral_witness: NeutralWitness,
    pub word_ball: usize,
}

impl GphVerdict {
    pub fn passed(&self) -> bool {
        self.ergodic_word.is_some() && self.hyperbolic_word.is_none()
    }
}

/// Checks, over the word ball: (1) some word is ergodic, (2) no word is
/// hyperbolic, (3) searches for a common invariant rational subspace with
/// unimodular restricted spectra as the candidate invariant foliation.
pub fn is_genuinely_partially_hyperbolic(
    spec: &ActionSpec,
    word_ball_radius: usize,
) -> Result<GphVerdict> {
    let words = word_ball(spec, word_ball_radius);
    let mut ergodic_word = None;
    let mut hyperbolic_word = None;
    for w in &words {
        let m = w.eval(spec)?;
        if ergodic_word.is_none() && m.is_ergodic() {
            ergodic_word = Some(w.clone());
        }
        if hyperbolic_word.is_none() && m.is_hyperbolic() {
            hyperbolic_word = Some(w.clone());
        }
        if ergodic_word.is_some() && hyperbolic_word.is_some() {
            break;
        }
    }
    let neutral_witness = rational_neutral_witness(spec)?;
    Ok(GphVerdict {
        ergodic_word,
        hyperbolic_word,
        neutral_witness,
        word_ball: word_ball_radius,
    })
}

/// Intersection over generators of the exact all-unimodular factor
/// subspaces, checked for invariance under every generator.
fn rational_neutral_witness(spec: &ActionSpec) -> Result<NeutralWitness> {
    use num_traits::Zero;
    let n = spec.dim;
    let mut candidate: Option<Vec<Vec<BigInt>>> = None;
    let mut neutral_dims = Vec::new();
    for (_, g) in &spec.generators {
        let factors = g.char_poly().factor_monic()?;
        let mut span: Vec<Vec<BigInt>> = Vec::new();
        let mut dim_neutral = 0;
        for (f, mult) in &factors {
            let on = f.count_unit_circle_roots();
            dim_neutral += on * mult; // distinct-count times multiplicity is a lower bound
            if on == f.degree() {
                // exact neutral subspace of this factor
                let mut pm = vec![BigInt::zero(); n * n];
                for i in 0..n {
                    pm[i * n + i] = BigInt::from(1);
                }
                // p(g)^mult
                let gf = g.entries().to_vec();
                let mut acc = vec![BigInt::zero(); n * n];
                for c in f.coeffs().iter().rev() {
                    acc = crate::intmat::mul_raw(n, &acc, &gf);
                    for i in 0..n {
                        acc[i * n + i] += c;
                    }
                }
                let mut pw = acc.clone();
                for _ in 1..*mult {
                    pw = crate::intmat::mul_raw(n, &pw, &acc);
                }
                let _ = pm;
                span.extend(crate::intmat::rational_kernel(n, &pw));
            }
        }
        neutral_dims.push(dim_neutral);
        candidate = Some(match candidate {
            None => span,
            Some(prev) => intersect_spans(n, &prev, &span),
        });
        if candidate.as_ref().map_or(true, |c| c.is_empty()) {
            break;
        }
    }
    match candidate {
        Some(basis) if !basis.is_empty() => {
            // invariance of the intersection under every generator
            for (_, g) in &spec.generators {
                for b in &basis {
                    let img = g.apply_bigint(b);
                    let joined = intersect_spans(n, &basis, &[img.clone()]);
                    let contains = !joined.is_empty()
                        || img.iter().all(|x| x.is_zero());
                    if !contains {
                        return Ok(NeutralWitness::RealOnly { neutral_dims });
                    }
                }
            }
            Ok(NeutralWitness::RationalSubspace(basis))
        }
        _ => {
            if neutral_dims.iter().all(|&d| d > 0) {
                Ok(NeutralWitness::RealOnly { neutral_dims })
            } else {
                Ok(NeutralWitness::None)
            }
        }
    }
}

/// Ergodicity propagates from y to xy for x in the commutator subgroup;
/// x's membership is certified by the caller (lower_central_series).
/// Errors when y is not ergodic.
pub fn conjugate_ergodicity_check(x: &IntMatrix, y: &IntMatrix) -> Result<bool> {
    if !y.is_ergodic() {
        return Err(Error::Precondition(
            "conjugate_ergodicity_check requires an ergodic y".into(),
        ));
    }
    Ok(x.mat_mul(y)?.is_ergodic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> IntMatrix {
        IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap()
    }

    fn heisenberg_spec() -> ActionSpec {
        // integer Heisenberg group: upper unitriangular 3x3
        let x = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let y = IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        ActionSpec::new(vec![("x".into(), x), ("y".into(), y)]).unwrap()
    }

    #[test]
    fn commutator_chain_basics() {
        let id = IntMatrix::identity(2);
        let chain = commutator_chain(&cat(), &cat().pow(3), 3).unwrap();
        assert!(chain.iter().all(|d| *d == id), "commuting pair has trivial chain");

        let x = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let y = IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]).unwrap();
        let chain = commutator_chain(&x, &y, 2).unwrap();
        assert_eq!(
            chain[0],
            IntMatrix::from_rows(&[vec![3, 1], vec![-1, 0]]).unwrap()
        );
        // defining recursion: D_{i+1}(x,y) = D_1(x, D_i(x,y))
        assert_eq!(chain[1], IntMatrix::commutator(&x, &chain[0]).unwrap());
    }

    #[test]
    fn lcs_abelian_is_length_one() {
        let spec = ActionSpec::new(vec![
            ("a".into(), cat()),
            ("b".into(), cat().pow(2)),
        ])
        .unwrap();
        let report = lower_central_series(&spec, 4, 2).unwrap();
        assert_eq!(report.nilpotency_length, Some(1));
    }

    #[test]
    fn lcs_heisenberg_is_length_two() {
        let report = lower_central_series(&heisenberg_spec(), 4, 2).unwrap();
        assert_eq!(report.nilpotency_length, Some(2));
    }

    #[test]
    fn lcs_hyperbolic_pair_not_nilpotent() {
        // cat map and a shear-conjugate of it: free-looking hyperbolic pair
        let s = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let b = s.mat_mul(&cat()).unwrap().mat_mul(&s.inverse()).unwrap();
        let spec = ActionSpec::new(vec![("a".into(), cat()), ("b".into(), b)]).unwrap();
        let report = lower_central_series(&spec, 3, 1).unwrap();
        assert_eq!(report.nilpotency_length, None);
    }

    #[test]
    fn higher_rank_fails_for_dependent_pair() {
        let a = cat();
        let v = is_higher_rank(&a, &a.pow(2), 3).unwrap();
        assert!(!v.passed());
        let k = v.failing_k.expect("a failing k exists on the line k1+2k2=0");
        assert_eq!(k.0 + 2 * k.1, 0, "failing k must kill the word: {k:?}");
    }

    #[test]
    fn higher_rank_fails_with_identity() {
        let v = is_higher_rank(&cat(), &IntMatrix::identity(2), 2).unwrap();
        assert!(!v.passed());
        assert_eq!(v.failing_k, Some((0, -1)));
    }

    #[test]
    fn higher_rank_passes_for_unit_pair() {
        let a = IntMatrix::from_rows(&[vec![0, 0, -1], vec![1, 0, 3], vec![0, 1, 0]]).unwrap();
        let b = crate::search::independent_unit_partner(&a, 3).unwrap();
        let v = is_higher_rank(&a, &b, 4).unwrap();
        assert!(v.passed(), "unit pair should pass: {v:?}");
    }

    #[test]
    fn gph_rejects_single_cat() {
        let spec = ActionSpec::new(vec![("a".into(), cat())]).unwrap();
        let v = is_genuinely_partially_hyperbolic(&spec, 2).unwrap();
        assert!(!v.passed());
        assert!(v.hyperbolic_word.is_some());
    }

    #[test]
    fn gph_rejects_unipotent_only() {
        let spec = heisenberg_spec();
        let v = is_genuinely_partially_hyperbolic(&spec, 2).unwrap();
        assert!(!v.passed());
        assert!(v.ergodic_word.is_none());
    }

    #[test]
    fn gph_accepts_salem_companion() {
        // irreducible reciprocal sextic with exactly two roots off the circle
        let salem = crate::intpoly::IntPolynomial::from_i64(&[1, 0, -1, -1, -1, 0, 1]);
        let m = crate::search::companion_matrix(&salem).unwrap();
        let spec = ActionSpec::new(vec![("s".into(), m)]).unwrap();
        let v = is_genuinely_partially_hyperbolic(&spec, 2).unwrap();
        assert!(v.passed(), "Salem companion is ergodic and non-hyperbolic");
        assert!(matches!(
            v.neutral_witness,
            NeutralWitness::RealOnly { .. }
        ));
    }

    #[test]
    fn conjugate_ergodicity_examples() {
        // x = identity
        assert!(conjugate_ergodicity_check(&IntMatrix::identity(2), &cat()).unwrap());
        // precondition: y must be ergodic
        assert!(conjugate_ergodicity_check(&cat(), &IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn word_ball_is_reduced_and_deterministic() {
        let spec = heisenberg_spec();
        let b1 = word_ball(&spec, 2);
        let b2 = word_ball(&spec, 2);
        assert_eq!(b1, b2);
        // length-1: 4 letters; length-2: 4*3 = 12 reduced
        assert_eq!(b1.len(), 4 + 12);
    }

    #[test]
    fn reordering_price_is_polynomial() {
        // Lemma-style check: for nilpotent generators, the reordering
        // defect of random words grows at most polynomially; the slope of
        // log-norm vs log-n stays below fitted degree + 0.5.
        use rand::Rng;
        use rand::SeedableRng;
        let spec = heisenberg_spec();
        let x = spec.generator("x").unwrap().clone();
        let y = spec.generator("y").unwrap().clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut points = Vec::new();
        for n in (4..=12).step_by(2) {
            let mut worst: f64 = 1.0;
            for _ in 0..20 {
                let mut prod = IntMatrix::identity(3);
                let mut count_x = 0i64;
                let mut count_y = 0i64;
                for _ in 0..n {
                    if rng.gen_bool(0.5) {
                        prod = prod.mat_mul(&x).unwrap();
                        count_x += 1;
                    } else {
                        prod = prod.mat_mul(&y).unwrap();
                        count_y += 1;
                    }
                }
                let reordered = x.pow(count_x).mat_mul(&y.pow(count_y)).unwrap();
                let defect = reordered.mat_mul(&prod.inverse()).unwrap();
                worst = worst.max(defect.norm_inf());
            }
            points.push(((n as f64).ln(), worst.ln()));
        }
        // least-squares slope
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert!(
            slope <= 2.5,
            "reordering defect grows super-polynomially: slope {slope}"
        );
    }

    #[test]
    fn unimodular_spectrum_products_grow_subexponentially() {
        // all-unimodular generator set: products of n letters satisfy
        // log |prod| / n decreasing over n <= 20
        let spec = heisenberg_spec();
        let x = spec.generator("x").unwrap().clone();
        let y = spec.generator("y").unwrap().clone();
        let mut prod = IntMatrix::identity(3);
        let mut ratios = Vec::new();
        for n in 1..=20 {
            prod = prod.mat_mul(if n % 2 == 0 { &x } else { &y }).unwrap();
            ratios.push(prod.norm_inf().ln() / n as f64);
        }
        // sub-exponential: the per-letter log norm keeps shrinking
        assert!(ratios[19] < ratios[9] + 1e-12);
        assert!(ratios[19] < 0.75 * ratios[4]);
    }

    #[test]
    fn commutator_subgroup_words_are_non_ergodic_with_unit_spectrum() {
        // nilpotent spec: every commutator-ball element has all eigenvalue
        // moduli 1 (checked exactly via circle count) and is not ergodic
        let spec = heisenberg_spec();
        let report = lower_central_series(&spec, 3, 2).unwrap();
        for level in &report.levels {
            for z in level {
                let p = z.char_poly();
                assert_eq!(
                    p.squarefree_part().count_unit_circle_roots(),
                    p.squarefree_part().degree(),
                    "commutator {z:?} must have all eigenvalues on the circle"
                );
                assert!(!z.is_ergodic());
            }
        }
    }
}
