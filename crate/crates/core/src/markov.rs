//! Exact transition matrices and kernels of the walk, the conditioned walk and
//! the shape chain, plus seeded samplers.
//!
//! States are vectors of length `k`: lattice points for `P`, points of the
//! Weyl chamber `x_1 ≤ ... ≤ x_k` for `P̂`, and padded partitions for `Q`.
//! Rows are computed on demand from a [`SchurTable`] built eagerly for the
//! sizes requested at construction, so matrices are immutable and `Sync`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::lattice::{word_to_walk, Letter, Word};
use crate::symfunc::{check_distribution, monomial, to_f64, Rational, SchurTable};
use crate::tableaux::{kostka, num_standard, partitions, Partition};
use crate::transform::{gmap, GOutput};

/// A row `x ↦ [(y, M(x, y))]`.
pub type Row = Vec<(Vec<u32>, Rational)>;

/// A Markov transition matrix on an infinite state space, evaluated row by row.
pub trait Chain {
    fn dim(&self) -> usize;
    fn row(&self, x: &[u32]) -> Result<Row>;
}

fn unit_steps(x: &[u32]) -> impl Iterator<Item = (usize, Vec<u32>)> + '_ {
    (0..x.len()).map(move |i| {
        let mut y = x.to_vec();
        y[i] += 1;
        (i, y)
    })
}

fn in_chamber(x: &[u32]) -> bool {
    x.windows(2).all(|w| w[0] <= w[1])
}

fn is_partition(x: &[u32]) -> bool {
    x.windows(2).all(|w| w[0] >= w[1])
}

/// `P(x, y) = p^{y-x}` when `y - x` is a unit vector.
#[derive(Clone, Debug)]
pub struct WalkMatrix {
    p: Vec<Rational>,
}

pub fn walk_matrix(p: &[Rational]) -> Result<WalkMatrix> {
    check_distribution(p)?;
    Ok(WalkMatrix { p: p.to_vec() })
}

impl WalkMatrix {
    pub fn p(&self) -> &[Rational] {
        &self.p
    }
}

impl Chain for WalkMatrix {
    fn dim(&self) -> usize {
        self.p.len()
    }

    fn row(&self, x: &[u32]) -> Result<Row> {
        if x.len() != self.p.len() {
            return Err(Error::DimensionMismatch { expected: self.p.len(), found: x.len() });
        }
        Ok(unit_steps(x).map(|(i, y)| (y, self.p[i].clone())).collect())
    }
}

/// `P̂(x, y) = s_{y*}(p) / s_{x*}(p)` on the chamber.
#[derive(Clone, Debug)]
pub struct ConditionedMatrix {
    schur: SchurTable,
}

/// `P̂` with Schur values tabulated up to `|x| = max_size + 1`.
pub fn conditioned_matrix(p: &[Rational], max_size: u32) -> Result<ConditionedMatrix> {
    check_distribution(p)?;
    Ok(ConditionedMatrix { schur: SchurTable::new(p, max_size + 1) })
}

impl Chain for ConditionedMatrix {
    fn dim(&self) -> usize {
        self.schur.point().len()
    }

    fn row(&self, x: &[u32]) -> Result<Row> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        let from = Partition::from_chamber(x).map_err(|_| Error::OutsideStateSpace)?;
        let base = self.schur.get(&from);
        Ok(unit_steps(x)
            .filter(|(_, y)| in_chamber(y))
            .map(|(_, y)| {
                let to = Partition::from_chamber(&y).expect("in chamber");
                let v = self.schur.get(&to) / &base;
                (y, v)
            })
            .collect())
    }
}

/// `Q(x, y) = s_y(p) / s_x(p)` for `y = x + e_i` a partition.
#[derive(Clone, Debug)]
pub struct ShapeMatrix {
    schur: SchurTable,
}

pub fn shape_matrix(p: &[Rational], max_size: u32) -> Result<ShapeMatrix> {
    check_distribution(p)?;
    Ok(ShapeMatrix { schur: SchurTable::new(p, max_size + 1) })
}

impl ShapeMatrix {
    pub fn schur(&self) -> &SchurTable {
        &self.schur
    }
}

impl Chain for ShapeMatrix {
    fn dim(&self) -> usize {
        self.schur.point().len()
    }

    fn row(&self, x: &[u32]) -> Result<Row> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        if !is_partition(x) {
            return Err(Error::OutsideStateSpace);
        }
        let base = self.schur.get(&Partition::new(x.to_vec())?);
        Ok(unit_steps(x)
            .filter(|(_, y)| is_partition(y))
            .map(|(_, y)| {
                let v = self.schur.get(&Partition::new(y.clone()).expect("checked")) / &base;
                (y, v)
            })
            .collect())
    }
}

/// Compositions of `n` into `k` non-negative parts.
pub fn compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=rest {
            cur.push(v);
            go(rest - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// A Markov kernel stored as explicit rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Kernel {
    rows: BTreeMap<Vec<u32>, Row>,
}

impl Kernel {
    pub fn from_rows(rows: BTreeMap<Vec<u32>, Row>) -> Self {
        Kernel { rows }
    }

    pub fn row(&self, x: &[u32]) -> Option<&Row> {
        self.rows.get(x)
    }

    pub fn rows(&self) -> &BTreeMap<Vec<u32>, Row> {
        &self.rows
    }

    pub fn rows_mut(&mut self) -> &mut BTreeMap<Vec<u32>, Row> {
        &mut self.rows
    }
}

/// `K(x, y) = p^y κ_{xy} / s_x(p)` for partitions `|x| ≤ max_size`.
pub fn kernel_k(p: &[Rational], max_size: u32) -> Result<Kernel> {
    check_distribution(p)?;
    let k = p.len();
    let schur = SchurTable::new(p, max_size);
    let mut rows = BTreeMap::new();
    for n in 0..=max_size {
        let weights = compositions(n, k);
        for lambda in partitions(n, k) {
            let s = schur.get(&lambda);
            let row = weights
                .iter()
                .filter_map(|y| {
                    let kappa = kostka(&lambda, y).expect("sizes agree");
                    (!kappa.is_zero()).then(|| (y.clone(), monomial(p, y) * big(kappa) / &s))
                })
                .collect();
            rows.insert(lambda.padded(k), row);
        }
    }
    Ok(Kernel { rows })
}

/// `J(x, y) = K(x*, y)` for chamber points.
pub fn kernel_j(p: &[Rational], max_size: u32) -> Result<Kernel> {
    let k = kernel_k(p, max_size)?;
    Ok(Kernel {
        rows: k
            .rows
            .into_iter()
            .map(|(x, row)| {
                let mut x = x;
                x.reverse();
                (x, row)
            })
            .collect(),
    })
}

fn big(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Outcome of an exact comparison of two matrix products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwiningReport {
    pub checked_rows: usize,
    /// First `(x, z)` where the two products differ.
    pub witness: Option<(Vec<u32>, Vec<u32>)>,
}

impl IntertwiningReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn accumulate(target: &mut BTreeMap<Vec<u32>, Rational>, y: Vec<u32>, v: Rational) {
    *target.entry(y).or_insert_with(Rational::zero) += v;
}

/// Check `upper · kernel = kernel · lower` on every kernel row with `|x| ≤ max_size`.
pub fn check_intertwining(upper: &dyn Chain, kernel: &Kernel, lower: &dyn Chain, max_size: u32) -> Result<IntertwiningReport> {
    let mut checked = 0;
    for (x, krow) in &kernel.rows {
        if x.iter().sum::<u32>() > max_size {
            continue;
        }
        let mut left = BTreeMap::new();
        for (y, a) in upper.row(x)? {
            let row = kernel.row(&y).ok_or(Error::InvalidArgument("kernel table too small"))?;
            for (z, b) in row {
                accumulate(&mut left, z.clone(), &a * b);
            }
        }
        let mut right = BTreeMap::new();
        for (y, a) in krow {
            for (z, b) in lower.row(y)? {
                accumulate(&mut right, z, a * &b);
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        checked += 1;
        if left != right {
            let z = left
                .iter()
                .find(|(z, v)| right.get(*z) != Some(v))
                .map(|(z, _)| z.clone())
                .or_else(|| right.keys().find(|z| !left.contains_key(*z)).cloned())
                .expect("maps differ");
            return Ok(IntertwiningReport { checked_rows: checked, witness: Some((x.clone(), z)) });
        }
    }
    Ok(IntertwiningReport { checked_rows: checked, witness: None })
}

/// `QK = KP` and `P̂J = JP` up to `|x| ≤ max_size`.
pub fn verify_intertwining(p: &[Rational], max_size: u32) -> Result<(IntertwiningReport, IntertwiningReport)> {
    let walk = walk_matrix(p)?;
    let q = shape_matrix(p, max_size)?;
    let kk = kernel_k(p, max_size + 1)?;
    let first = check_intertwining(&q, &kk, &walk, max_size)?;
    let phat = conditioned_matrix(p, max_size)?;
    let j = kernel_j(p, max_size + 1)?;
    let second = check_intertwining(&phat, &j, &walk, max_size)?;
    Ok((first, second))
}

/// Whether every row of `chain` over `states` sums to one.
pub fn rows_stochastic<'a>(chain: &dyn Chain, states: impl IntoIterator<Item = &'a Vec<u32>>) -> Result<bool> {
    for x in states {
        let total: Rational = chain.row(x)?.into_iter().map(|(_, v)| v).sum();
        if total != Rational::one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P(λ(n) = x) = s_x(p) f_x`.
pub fn exact_shape_dist(p: &[Rational], n: u32) -> Result<BTreeMap<Partition, Rational>> {
    check_distribution(p)?;
    let schur = SchurTable::new(p, n);
    Ok(partitions(n, p.len())
        .into_iter()
        .map(|l| {
            let v = schur.get(&l) * big(num_standard(&l));
            (l, v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

/// Law of the shape after `n` steps of `Q` from the empty shape.
pub fn shape_pushforward(q: &ShapeMatrix, n: u32) -> Result<BTreeMap<Partition, Rational>> {
    let k = q.dim();
    let mut cur: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    cur.insert(alloc::vec![0; k], Rational::one());
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (x, m) in &cur {
            for (y, v) in q.row(x)? {
                accumulate(&mut next, y, m * &v);
            }
        }
        cur = next;
    }
    Ok(cur.into_iter().map(|(x, v)| (Partition::new(x).expect("shape states"), v)).collect())
}

/// Law of the path `(x(1), ..., x(n))` of a chain started at `start`.
pub fn path_law(chain: &dyn Chain, start: &[u32], n: usize) -> Result<BTreeMap<Vec<Vec<u32>>, Rational>> {
    let mut cur: BTreeMap<Vec<Vec<u32>>, Rational> = BTreeMap::new();
    cur.insert(alloc::vec![start.to_vec()], Rational::one());
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (path, m) in &cur {
            for (y, v) in chain.row(path.last().expect("non-empty"))? {
                if v.is_zero() {
                    continue;
                }
                let mut longer = path.clone();
                longer.push(y);
                accumulate_path(&mut next, longer, m * &v);
            }
        }
        cur = next;
    }
    Ok(cur)
}

fn accumulate_path(target: &mut BTreeMap<Vec<Vec<u32>>, Rational>, key: Vec<Vec<u32>>, v: Rational) {
    *target.entry(key).or_insert_with(Rational::zero) += v;
}

/// Checks that `chain` grows one box at a time starting from a single box.
pub fn validate_chain(chain: &[Partition]) -> Result<()> {
    let mut prev = Partition::empty();
    for s in chain {
        if crate::tableaux::grown_row(&prev, s).is_none() {
            return Err(Error::InvalidChain("consecutive shapes must differ by one box"));
        }
        prev = s.clone();
    }
    Ok(())
}

/// `P(λ(1) = l(1), ..., λ(n) = l(n)) = s_{l(n)}(p)`.
pub fn exact_joint_shape_path(p: &[Rational], chain: &[Partition]) -> Result<Rational> {
    check_distribution(p)?;
    validate_chain(chain)?;
    Ok(match chain.last() {
        Some(l) => crate::symfunc::schur(l, p),
        None => Rational::one(),
    })
}

/// `P(X(n) = y | λ(m), m ≤ n) = K(λ(n), y)`.
pub fn conditional_given_shapes(p: &[Rational], chain: &[Partition], y: &[u32]) -> Result<Rational> {
    check_distribution(p)?;
    validate_chain(chain)?;
    let k = p.len();
    if y.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: y.len() });
    }
    let lambda = chain.last().cloned().unwrap_or_default();
    if lambda.len() > k {
        return Err(Error::ZeroProbability);
    }
    let s = crate::symfunc::schur(&lambda, p);
    if s.is_zero() {
        return Err(Error::ZeroProbability);
    }
    let total: u32 = y.iter().sum();
    if total != lambda.size() {
        return Ok(Rational::zero());
    }
    Ok(monomial(p, y) * big(kostka(&lambda, y)?) / s)
}

/// `φ_q(y) = p^{-y} Σ_z κ^{-1}_{yz} q^z s_z(p)` on partitions of `n`, so that
/// `(K φ_q)(x) = q^x`.
pub fn phi_q(p: &[Rational], q: &[Rational], n: u32) -> Result<BTreeMap<Partition, Rational>> {
    check_distribution(p)?;
    let k = p.len();
    if q.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: q.len() });
    }
    let shapes = partitions(n, k);
    let m = shapes.len();
    // κ restricted to partitions is unitriangular in dominance order; solve κ a = b
    let kappa: Vec<Vec<Rational>> = shapes
        .iter()
        .map(|y| shapes.iter().map(|z| big(kostka(y, &z.padded(k)).expect("same size"))).collect())
        .collect();
    let schur = SchurTable::new(p, n);
    let b: Vec<Rational> = shapes.iter().map(|z| monomial(q, &z.padded(k)) * schur.get(z)).collect();
    let inv = invert(kappa).ok_or(Error::InvalidArgument("Kostka matrix is singular"))?;
    let mut out = BTreeMap::new();
    for (yi, y) in shapes.iter().enumerate() {
        let s: Rational = (0..m).map(|zi| &inv[yi][zi] * &b[zi]).sum();
        out.insert(y.clone(), s / monomial(p, &y.padded(k)));
    }
    Ok(out)
}

/// `(K φ)(x)` for a function supported on partitions.
pub fn apply_kernel(kernel: &Kernel, x: &[u32], phi: &BTreeMap<Partition, Rational>) -> Option<Rational> {
    let row = kernel.row(x)?;
    Some(
        row.iter()
            .filter_map(|(y, v)| Partition::new(y.clone()).ok().and_then(|l| phi.get(&l)).map(|f| v * f))
            .sum(),
    )
}

fn invert(mut a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for c in 0..n {
        let pivot = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(pivot, c);
        inv.swap(pivot, c);
        let p = a[c][c].clone();
        for j in 0..n {
            a[c][j] /= &p;
            inv[c][j] /= &p;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..n {
                let (u, v) = (&f * &a[c][j], &f * &inv[c][j]);
                a[r][j] -= u;
                inv[r][j] -= v;
            }
        }
    }
    Some(inv)
}

/// Sampler for `{0, ..., k-1}` comparing one 64-bit draw against fixed thresholds.
#[derive(Clone, Debug)]
pub struct Categorical {
    thresholds: Vec<u64>,
}

impl Categorical {
    /// From floating-point weights summing to one.
    pub fn new(p: &[f64]) -> Self {
        let mut acc = 0.0;
        let mut thresholds: Vec<u64> = p
            .iter()
            .map(|&q| {
                acc += q;
                (acc.min(1.0) * 18_446_744_073_709_551_616.0) as u64
            })
            .collect();
        if let Some(last) = thresholds.last_mut() {
            *last = u64::MAX;
        }
        Categorical { thresholds }
    }

    /// From exact weights; thresholds are `⌊2^64 (p_1 + ... + p_i)⌋`.
    pub fn from_rationals(p: &[Rational]) -> Self {
        let mut acc = Rational::zero();
        let mut thresholds: Vec<u64> = p
            .iter()
            .map(|q| {
                acc += q;
                let scaled = (acc.numer() << 64usize) / acc.denom();
                scaled.to_u64().unwrap_or(u64::MAX)
            })
            .collect();
        if let Some(last) = thresholds.last_mut() {
            *last = u64::MAX;
        }
        Categorical { thresholds }
    }

    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> usize {
        let u = rng.next_u64();
        self.thresholds.iter().position(|&t| u < t).unwrap_or(self.thresholds.len() - 1)
    }
}

/// A random word of length `n` with i.i.d. letters of law `p`.
pub fn sample_walk<R: RngCore + ?Sized>(p: &[Rational], n: usize, rng: &mut R) -> Result<Word> {
    check_distribution(p)?;
    let cat = Categorical::from_rationals(p);
    let letters = (0..n).map(|_| (cat.sample(rng) + 1) as Letter).collect();
    Word::new(letters, p.len())
}

/// `G^(k)(X)` for a sampled walk `X`.
pub fn sample_g<R: RngCore + ?Sized>(p: &[Rational], n: usize, rng: &mut R) -> Result<GOutput> {
    Ok(gmap(&word_to_walk(&sample_walk(p, n, rng)?)))
}

/// Exact law of `P̂` at time `n` from the origin.
pub fn conditioned_law(p: &[Rational], n: u32) -> Result<BTreeMap<Vec<u32>, Rational>> {
    let chain = conditioned_matrix(p, n)?;
    let k = p.len();
    let mut cur: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    cur.insert(alloc::vec![0; k], Rational::one());
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (x, m) in &cur {
            for (y, v) in chain.row(x)? {
                accumulate(&mut next, y, m * &v);
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Number of `paths` walks from `x` that stay in the chamber for `horizon` steps.
pub fn survival_count<R: RngCore + ?Sized>(p: &Categorical, x: &[u32], horizon: usize, paths: u64, rng: &mut R) -> u64 {
    let k = x.len();
    let mut alive = 0;
    let mut cur = alloc::vec![0i64; k];
    'outer: for _ in 0..paths {
        for (c, &v) in cur.iter_mut().zip(x) {
            *c = i64::from(v);
        }
        for _ in 0..horizon {
            let i = p.sample(rng);
            cur[i] += 1;
            // only the coordinate that moved can break x_i ≤ x_{i+1}
            if i + 1 < k && cur[i] > cur[i + 1] {
                continue 'outer;
            }
        }
        alive += 1;
    }
    alive
}

/// Monte Carlo survival ratio against `h(x') / h(x)` with `h(x) = p^{-x} s_{x*}(p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurvivalReport {
    pub target: f64,
    pub ratio: f64,
    pub stderr: f64,
    pub survival: (f64, f64),
}

impl SurvivalReport {
    pub fn from_counts(target: f64, alive: (u64, u64), paths: u64) -> Self {
        let a = alive.0 as f64 / paths as f64;
        let b = alive.1 as f64 / paths as f64;
        let ra = libm::sqrt((1.0 - a) / (a * paths as f64));
        let rb = libm::sqrt((1.0 - b) / (b * paths as f64));
        let ratio = b / a;
        SurvivalReport { target, ratio, stderr: ratio * libm::sqrt(ra * ra + rb * rb), survival: (a, b) }
    }

    /// Whether the target lies within `z` standard errors of the estimate.
    pub fn agrees(&self, z: f64) -> bool {
        (self.ratio - self.target).abs() <= z * self.stderr
    }
}

/// `h(x') / h(x)`, requiring `p_1 < ... < p_k` and both points in the chamber.
pub fn survival_target(p: &[Rational], x: &[u32], x2: &[u32]) -> Result<Rational> {
    check_distribution(p)?;
    if p.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnorderedDrift);
    }
    if !in_chamber(x) || !in_chamber(x2) {
        return Err(Error::OutsideStateSpace);
    }
    let h = |y: &[u32]| crate::symfunc::harmonic_h(p, p, y);
    Ok(h(x2)? / h(x)?)
}

/// Sequential survival-ratio experiment from one seeded generator.
pub fn survival_ratio_check<R: RngCore + ?Sized>(
    p: &[Rational],
    x: &[u32],
    x2: &[u32],
    horizon: usize,
    paths: u64,
    rng: &mut R,
) -> Result<SurvivalReport> {
    let target = to_f64(&survival_target(p, x, x2)?);
    let cat = Categorical::from_rationals(p);
    let a = survival_count(&cat, x, horizon, paths, rng);
    let b = survival_count(&cat, x2, horizon, paths, rng);
    Ok(SurvivalReport::from_counts(target, (a, b), paths))
}

/// Empirical law of `G^(k)(X)(n)` over `runs` samples.
pub fn empirical_g_law<R: Rng + ?Sized>(p: &[Rational], n: usize, runs: u64, rng: &mut R) -> Result<BTreeMap<Vec<u32>, f64>> {
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for _ in 0..runs {
        *counts.entry(sample_g(p, n, rng)?.at(n)).or_insert(0) += 1;
    }
    Ok(counts.into_iter().map(|(x, c)| (x, c as f64 / runs as f64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rational;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn half() -> Vec<Rational> {
        vec![rational(1, 2), rational(1, 2)]
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn entry(row: &Row, y: &[u32]) -> Rational {
        row.iter().find(|(s, _)| s == y).map(|(_, v)| v.clone()).unwrap_or_else(Rational::zero)
    }

    #[test]
    fn walk_rows() {
        let p = walk_matrix(&half()).unwrap();
        assert_eq!(entry(&p.row(&[0, 0]).unwrap(), &[1, 0]), rational(1, 2));
        let q = walk_matrix(&[rational(1, 3), rational(2, 3)]).unwrap();
        assert_eq!(entry(&q.row(&[1, 2]).unwrap(), &[1, 3]), rational(2, 3));
        assert!(walk_matrix(&[rational(1, 2), rational(1, 3)]).is_err());
    }

    #[test]
    fn conditioned_rows() {
        let m = conditioned_matrix(&half(), 4).unwrap();
        assert_eq!(m.row(&[0, 0]).unwrap(), vec![(vec![0, 1], Rational::one())]);
        assert_eq!(entry(&m.row(&[0, 1]).unwrap(), &[0, 2]), rational(3, 4));
        assert_eq!(m.row(&[1, 0]), Err(Error::OutsideStateSpace));
        let a = conditioned_matrix(&[rational(1, 3), rational(2, 3)], 4).unwrap();
        let b = conditioned_matrix(&[rational(2, 3), rational(1, 3)], 4).unwrap();
        for x in [[0u32, 0], [0, 1], [1, 1], [1, 3], [2, 2]] {
            assert_eq!(a.row(&x).unwrap(), b.row(&x).unwrap());
        }
    }

    #[test]
    fn shape_rows() {
        let q = shape_matrix(&half(), 4).unwrap();
        let row = q.row(&[1, 0]).unwrap();
        assert_eq!(entry(&row, &[2, 0]), rational(3, 4));
        assert_eq!(entry(&row, &[1, 1]), rational(1, 4));
        assert_eq!(q.row(&[0, 1]), Err(Error::OutsideStateSpace));
    }

    #[test]
    fn kernel_rows() {
        let k = kernel_k(&half(), 3).unwrap();
        assert_eq!(entry(k.row(&[1, 1]).unwrap(), &[1, 1]), Rational::one());
        assert_eq!(entry(k.row(&[1, 0]).unwrap(), &[1, 0]), rational(1, 2));
        let k = kernel_k(&[rational(1, 3), rational(2, 3)], 3).unwrap();
        let total: Rational = k.row(&[2, 1]).unwrap().iter().map(|(_, v)| v.clone()).sum();
        assert_eq!(total, Rational::one());
    }

    #[test]
    fn intertwining_small() {
        let (a, b) = verify_intertwining(&half(), 4).unwrap();
        assert!(a.passed() && b.passed());
        let p = vec![rational(1, 6), rational(1, 3), rational(1, 2)];
        let (a, b) = verify_intertwining(&p, 3).unwrap();
        assert!(a.passed() && b.passed());
    }

    #[test]
    fn perturbed_kernel_fails() {
        let p = half();
        let mut k = kernel_k(&p, 4).unwrap();
        let row = k.rows_mut().get_mut(&vec![2, 1]).unwrap();
        row[0].1 += rational(1, 100);
        row[1].1 -= rational(1, 100);
        let report = check_intertwining(&shape_matrix(&p, 3).unwrap(), &k, &walk_matrix(&p).unwrap(), 3).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn shape_distribution() {
        let d = exact_shape_dist(&half(), 2).unwrap();
        assert_eq!(d.get(&part(&[2])), Some(&rational(3, 4)));
        assert_eq!(d.get(&part(&[1, 1])), Some(&rational(1, 4)));
        assert_eq!(exact_shape_dist(&half(), 1).unwrap().get(&part(&[1])), Some(&Rational::one()));
        let q = shape_matrix(&half(), 5).unwrap();
        assert_eq!(shape_pushforward(&q, 5).unwrap(), exact_shape_dist(&half(), 5).unwrap());
    }

    #[test]
    fn chain_probabilities() {
        let p = vec![rational(1, 3), rational(2, 3)];
        let c = [part(&[1]), part(&[2])];
        assert_eq!(exact_joint_shape_path(&p, &c).unwrap(), crate::symfunc::schur(&part(&[2]), &p));
        assert!(exact_joint_shape_path(&p, &[part(&[2])]).is_err());
        assert_eq!(conditional_given_shapes(&half(), &c, &[2, 0]).unwrap(), rational(1, 3));
        let col = [part(&[1]), part(&[1, 1])];
        assert_eq!(conditional_given_shapes(&half(), &col, &[1, 1]).unwrap(), Rational::one());
    }

    #[test]
    fn phi_identity() {
        let p = vec![rational(1, 3), rational(2, 3)];
        let q = vec![rational(2, 1), rational(3, 1)];
        let k = kernel_k(&p, 3).unwrap();
        let phi = phi_q(&p, &q, 3).unwrap();
        for x in partitions(3, 2) {
            let x = x.padded(2);
            assert_eq!(apply_kernel(&k, &x, &phi).unwrap(), monomial(&q, &x));
        }
    }

    #[test]
    fn samplers_are_seeded() {
        let p = vec![rational(1, 3), rational(2, 3)];
        let a = sample_walk(&p, 20, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        let b = sample_walk(&p, 20, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        assert_eq!(a, b);
        assert!(sample_g(&p, 20, &mut ChaCha8Rng::seed_from_u64(5)).unwrap().in_chamber());
    }

    #[test]
    fn categorical_thresholds() {
        let c = Categorical::from_rationals(&[rational(1, 4), rational(3, 4)]);
        assert_eq!(c.thresholds, vec![1u64 << 62, u64::MAX]);
    }

    #[test]
    fn survival_target_values() {
        let p = vec![rational(1, 4), rational(3, 4)];
        assert_eq!(survival_target(&p, &[0, 0], &[0, 1]).unwrap(), rational(4, 3));
        assert_eq!(survival_target(&p, &[0, 1], &[0, 1]).unwrap(), Rational::one());
        assert_eq!(survival_target(&[rational(3, 4), rational(1, 4)], &[0, 0], &[0, 1]), Err(Error::UnorderedDrift));
    }
}
