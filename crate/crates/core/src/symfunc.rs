//! Exact Schur and skew Schur polynomials.
//!
//! The combinatorial evaluation uses the branching rule
//! `s_λ(x_1..x_k) = Σ_{μ ≺ λ} s_μ(x_1..x_{k-1}) x_k^{|λ|-|μ|}` over partitions
//! `μ` interlacing `λ`, which is the sum over semistandard tableaux organised by
//! the position of the largest letter. The bialternant
//! `det(x_i^{λ_j+k-j}) / det(x_i^{k-j})` is available for distinct points.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::tableaux::{partitions, Partition};

/// Exact rational number.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow(q: &Rational, e: u32) -> Rational {
    num_traits::pow(q.clone(), e as usize)
}

/// Nearest binary64, computed from the exact ratio.
pub fn to_f64(q: &Rational) -> f64 {
    // rescale to keep both parts in range when they are huge
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = q.numer().bits().max(q.denom().bits()) as i64 - 900;
            let n = (q.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// `x^α = Π x_i^{α_i}`.
pub fn monomial(x: &[Rational], alpha: &[u32]) -> Rational {
    x.iter().zip(alpha).map(|(xi, &a)| pow(xi, a)).product()
}

/// Partitions `μ` with `λ_{i+1} ≤ μ_i ≤ λ_i`, i.e. `λ/μ` a horizontal strip.
fn interlacing_below(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts.len());
    fn go(parts: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        for v in lo..=parts[i] {
            cur.push(v);
            go(parts, i + 1, cur, out);
            cur.pop();
        }
    }
    go(parts, 0, &mut cur, &mut out);
    out
}

/// `s_λ(x)` by the branching rule.
pub fn schur(lambda: &Partition, x: &[Rational]) -> Rational {
    let mut memo = BTreeMap::new();
    schur_memo(lambda, x, &mut memo)
}

fn schur_memo(lambda: &Partition, x: &[Rational], memo: &mut BTreeMap<(Partition, usize), Rational>) -> Rational {
    let k = x.len();
    if lambda.len() > k {
        return Rational::zero();
    }
    if lambda.is_empty() {
        return Rational::one();
    }
    if k == 1 {
        return pow(&x[0], lambda.size());
    }
    let key = (lambda.clone(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut sum = Rational::zero();
    for mu in interlacing_below(lambda) {
        if mu.len() < k {
            let inner = schur_memo(&mu, &x[..k - 1], memo);
            if !inner.is_zero() {
                sum += inner * pow(&x[k - 1], lambda.size() - mu.size());
            }
        }
    }
    memo.insert(key, sum.clone());
    sum
}

/// `s_λ(x)` as a ratio of alternants. Needs pairwise distinct coordinates.
pub fn schur_bialternant(lambda: &Partition, x: &[Rational]) -> Result<Rational> {
    let k = x.len();
    if lambda.len() > k {
        return Ok(Rational::zero());
    }
    let l = lambda.padded(k);
    let num = determinant((0..k).map(|i| (0..k).map(|j| pow(&x[i], l[j] + (k - 1 - j) as u32)).collect()).collect());
    let den = determinant((0..k).map(|i| (0..k).map(|j| pow(&x[i], (k - 1 - j) as u32)).collect()).collect());
    if den.is_zero() {
        return Err(Error::SingularBialternant);
    }
    Ok(num / den)
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if pivot != c {
            m.swap(pivot, c);
            det = -det;
        }
        let p = m[c][c].clone();
        det *= &p;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &p;
            for j in c..n {
                let v = &f * &m[c][j];
                m[r][j] -= v;
            }
        }
    }
    det
}

/// Skew Schur polynomial `s_{λ/d}(x)`; errors unless `d ⊆ λ`.
pub fn skew_schur(lambda: &Partition, d: &Partition, x: &[Rational]) -> Result<Rational> {
    if !lambda.contains(d) {
        return Err(Error::NotContained);
    }
    let mut memo = BTreeMap::new();
    Ok(skew_memo(lambda, d, x, &mut memo))
}

fn skew_memo(
    lambda: &Partition,
    d: &Partition,
    x: &[Rational],
    memo: &mut BTreeMap<(Partition, usize), Rational>,
) -> Rational {
    let k = x.len();
    if k == 0 {
        return if lambda == d { Rational::one() } else { Rational::zero() };
    }
    let key = (lambda.clone(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut sum = Rational::zero();
    for mu in interlacing_below(lambda) {
        if mu.contains(d) {
            let inner = skew_memo(&mu, d, &x[..k - 1], memo);
            if !inner.is_zero() {
                sum += inner * pow(&x[k - 1], lambda.size() - mu.size());
            }
        }
    }
    memo.insert(key, sum.clone());
    sum
}

/// `h_r(x) = p^{-x} s_{x*}(r)` on the Weyl chamber, zero off it.
pub fn harmonic_h(p: &[Rational], r: &[Rational], x: &[u32]) -> Result<Rational> {
    if p.len() != x.len() || r.len() != x.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), found: p.len().min(r.len()) });
    }
    let Ok(lambda) = Partition::from_chamber(x) else {
        return Ok(Rational::zero());
    };
    let mut px = Rational::one();
    for (pi, &xi) in p.iter().zip(x) {
        if xi > 0 && pi.is_zero() {
            return Err(Error::InvalidArgument("zero weight raised to a negative power"));
        }
        px *= pow(pi, xi);
    }
    if px.is_zero() {
        return Ok(schur(&lambda, r));
    }
    Ok(schur(&lambda, r) / px)
}

/// Checks that `p` is a probability vector with positive entries.
pub fn check_distribution(p: &[Rational]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::NotDistribution("empty"));
    }
    if p.iter().any(|q| !q.is_positive()) {
        return Err(Error::NotDistribution("entries must be positive"));
    }
    if p.iter().cloned().sum::<Rational>() != Rational::one() {
        return Err(Error::NotDistribution("entries must sum to 1"));
    }
    Ok(())
}

/// `s_λ(p)` for every partition with at most `k = |p|` rows and `|λ| ≤ max_size`.
#[derive(Clone, Debug)]
pub struct SchurTable {
    p: Vec<Rational>,
    max_size: u32,
    values: BTreeMap<Partition, Rational>,
}

impl SchurTable {
    pub fn new(p: &[Rational], max_size: u32) -> Self {
        let mut memo = BTreeMap::new();
        let mut values = BTreeMap::new();
        for n in 0..=max_size {
            for lambda in partitions(n, p.len()) {
                let v = schur_memo(&lambda, p, &mut memo);
                values.insert(lambda, v);
            }
        }
        SchurTable { p: p.to_vec(), max_size, values }
    }

    pub fn point(&self) -> &[Rational] {
        &self.p
    }

    pub fn max_size(&self) -> u32 {
        self.max_size
    }

    /// `s_λ(p)`; zero for more than `k` rows, computed afresh beyond the table.
    pub fn get(&self, lambda: &Partition) -> Rational {
        if lambda.len() > self.p.len() {
            return Rational::zero();
        }
        match self.values.get(lambda) {
            Some(v) => v.clone(),
            None => schur(lambda, &self.p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| rational(a, 1)).collect()
    }

    #[test]
    fn schur_examples() {
        let x = vec![rational(1, 3), rational(2, 5)];
        assert_eq!(schur(&part(&[1]), &x), &x[0] + &x[1]);
        assert_eq!(schur(&part(&[2, 1]), &ints(&[1, 1, 1])), rational(8, 1));
        let half = vec![rational(1, 2), rational(1, 2)];
        assert_eq!(schur(&part(&[2]), &half), rational(3, 4));
        assert_eq!(schur(&part(&[1, 1, 1]), &half), Rational::zero());
        assert_eq!(schur(&Partition::empty(), &half), Rational::one());
    }

    #[test]
    fn bialternant_agrees() {
        let x = vec![rational(1, 6), rational(1, 3), rational(1, 2)];
        for n in 0..7 {
            for lambda in partitions(n, 3) {
                assert_eq!(schur_bialternant(&lambda, &x).unwrap(), schur(&lambda, &x));
            }
        }
        let rep = vec![rational(1, 2), rational(1, 2)];
        assert_eq!(schur_bialternant(&part(&[1]), &rep), Err(Error::SingularBialternant));
    }

    #[test]
    fn skew_examples() {
        let x = ints(&[1, 1]);
        assert_eq!(skew_schur(&part(&[2, 1]), &part(&[2, 1]), &x).unwrap(), Rational::one());
        // fillings of the skew shape (2,1)/(1): two disconnected cells, 2 * 2 = 4
        assert_eq!(skew_schur(&part(&[2, 1]), &part(&[1]), &x).unwrap(), rational(4, 1));
        assert_eq!(skew_schur(&part(&[2, 1]), &Partition::empty(), &x).unwrap(), schur(&part(&[2, 1]), &x));
        assert_eq!(skew_schur(&part(&[1]), &part(&[2]), &x), Err(Error::NotContained));
    }

    #[test]
    fn harmonic_examples() {
        let p = vec![rational(1, 3), rational(2, 3)];
        assert_eq!(harmonic_h(&p, &p, &[0, 0]).unwrap(), Rational::one());
        assert_eq!(harmonic_h(&p, &p, &[1, 0]).unwrap(), Rational::zero());
        // harmonic at (0,1): successors (1,1) and (0,2)
        let h = |x: &[u32]| harmonic_h(&p, &p, x).unwrap();
        assert_eq!(&p[0] * h(&[1, 1]) + &p[1] * h(&[0, 2]), h(&[0, 1]));
    }

    #[test]
    fn table_matches_direct() {
        let p = vec![rational(1, 6), rational(1, 3), rational(1, 2)];
        let t = SchurTable::new(&p, 5);
        assert_eq!(t.get(&part(&[3, 1, 1])), schur(&part(&[3, 1, 1]), &p));
        assert_eq!(t.get(&part(&[4, 3])), schur(&part(&[4, 3]), &p));
        assert_eq!(t.get(&part(&[1, 1, 1, 1])), Rational::zero());
    }

    #[test]
    fn large_rationals_convert() {
        let q = Rational::new(BigInt::from(10).pow(400) + 1, BigInt::from(10).pow(400) * 3);
        assert!((to_f64(&q) - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(to_f64(&rational(-1, 4)), -0.25);
    }
}
