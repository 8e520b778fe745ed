//! Tandem queues driven by words or by Poisson clocks, and the transient
//! distribution of the departure counts.
//!
//! In the first series the queue at station 1 is inexhaustible; a service at
//! station `i` moves a customer from queue `i` to queue `i + 1` if queue `i`
//! is non-empty. Departures and unused services of a series drive the next
//! one, which is how the triangular array `d^(j)_i` evolves one letter at a
//! time.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Letter, Word};
use crate::markov::Categorical;
use crate::symfunc::{to_f64, Rational};
use crate::tableaux::{self, Partition};

/// One series of `m` stations: departure counts `d_1..d_m` and the counts
/// `t_1..t_{m-1}` that drive the following series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    departures: Vec<u32>,
    carried: Vec<u32>,
}

impl Series {
    fn new(m: usize) -> Self {
        Series { departures: alloc::vec![0; m], carried: alloc::vec![0; m - 1] }
    }

    pub fn departures(&self) -> &[u32] {
        &self.departures
    }

    pub fn carried(&self) -> &[u32] {
        &self.carried
    }

    /// Contents of the queues in front of stations 2..m.
    pub fn queues(&self) -> Vec<u32> {
        self.departures.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// Serve station `i` (1-based); returns the coordinate of the next series
    /// that receives a service, if any.
    fn serve(&mut self, i: usize) -> Option<usize> {
        let m = self.departures.len();
        if i == 1 {
            self.departures[0] += 1;
        } else if self.departures[i - 2] > self.departures[i - 1] {
            self.departures[i - 1] += 1;
        } else {
            // unused service
            self.carried[i - 2] += 1;
            return Some(i - 1);
        }
        if i < m {
            self.carried[i - 1] += 1;
            Some(i)
        } else {
            None
        }
    }
}

/// `k` series of tandem queues with `k, k-1, ..., 1` stations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TandemNetwork {
    series: Vec<Series>,
}

impl TandemNetwork {
    pub fn new(k: usize) -> Self {
        TandemNetwork { series: (0..k).map(|j| Series::new(k - j)).collect() }
    }

    pub fn k(&self) -> usize {
        self.series.len()
    }

    pub fn series(&self) -> &[Series] {
        &self.series
    }

    /// A service at station `a` of the first series, propagated downstream.
    pub fn serve(&mut self, a: Letter) {
        let mut next = Some(usize::from(a));
        for s in &mut self.series {
            match next {
                Some(i) => next = s.serve(i),
                None => break,
            }
        }
    }

    pub fn state(&self) -> TandemState {
        TandemState {
            departures: self.series.iter().map(|s| s.departures.clone()).collect(),
            queues: self.series[..self.k() - 1].iter().map(Series::queues).collect(),
        }
    }
}

/// Snapshot `(D(n), Q(n))`: row `j` holds `d^(j+1)` and `q^(j+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TandemState {
    pub departures: Vec<Vec<u32>>,
    pub queues: Vec<Vec<u32>>,
}

/// States at times `0..=|w|`.
pub fn simulate_word(w: &Word) -> Vec<TandemState> {
    let mut net = TandemNetwork::new(w.alphabet());
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(net.state());
    for &a in w.letters() {
        net.serve(a);
        out.push(net.state());
    }
    out
}

/// Departure counts of the first series only, `(D_1, ..., D_k)`.
pub fn departures_after(letters: &[Letter], k: usize) -> Vec<u32> {
    let mut d = alloc::vec![0u32; k];
    for &a in letters {
        let i = usize::from(a);
        if i == 1 || d[i - 2] > d[i - 1] {
            d[i - 1] += 1;
        }
    }
    d
}

/// Service intensities `μ_1, ..., μ_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonDrive {
    mu: Vec<f64>,
}

impl PoissonDrive {
    pub fn new(mu: Vec<f64>) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::DimensionTooSmall { required: 1, found: 0 });
        }
        if mu.iter().any(|&m| !(m > 0.0 && m.is_finite())) {
            return Err(Error::InvalidArgument("intensities must be positive and finite"));
        }
        Ok(PoissonDrive { mu })
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn total(&self) -> f64 {
        self.mu.iter().sum()
    }

    /// `p = μ / |μ|`.
    pub fn normalized(&self) -> Vec<f64> {
        let s = self.total();
        self.mu.iter().map(|m| m / s).collect()
    }
}

/// Result of one continuous-time run up to time `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonRun {
    pub events: usize,
    pub departures: Vec<u32>,
    pub queues: Vec<u32>,
}

/// Run the first series up to time `t` with superposed exponential clocks.
pub fn simulate_poisson<R: Rng + ?Sized>(drive: &PoissonDrive, t: f64, rng: &mut R) -> PoissonRun {
    let k = drive.mu.len();
    let rate = drive.total();
    let pick = Categorical::new(&drive.normalized());
    let mut d = alloc::vec![0u32; k];
    let mut clock = 0.0;
    let mut events = 0;
    loop {
        let u: f64 = rng.gen();
        clock += -libm::log(1.0 - u) / rate;
        if clock > t {
            break;
        }
        events += 1;
        let i = pick.sample(rng) + 1;
        if i == 1 || d[i - 2] > d[i - 1] {
            d[i - 1] += 1;
        }
    }
    let queues = d.windows(2).map(|w| w[0] - w[1]).collect();
    PoissonRun { events, departures: d, queues }
}

/// `β(τ)`: number of `i`s in row `i`.
pub fn beta(t: &tableaux::Tableau) -> Vec<u32> {
    let k = t.alphabet();
    (0..k)
        .map(|i| t.rows().get(i).map_or(0, |r| r.iter().filter(|&&a| usize::from(a) == i + 1).count() as u32))
        .collect()
}

/// Exact law of `δ(n) = D^(k)(X)(n)` as `Σ_τ p^τ f_{sh τ}` over tableaux with `β(τ) = d`.
pub fn depoissonized_dist(p: &[Rational], n: u32) -> Vec<(Vec<u32>, Rational)> {
    let k = p.len();
    let mut out: alloc::collections::BTreeMap<Vec<u32>, Rational> = alloc::collections::BTreeMap::new();
    for lambda in tableaux::partitions(n, k) {
        let f = Rational::from_integer(tableaux::num_standard(&lambda).into());
        for t in tableaux::semistandard(&lambda, k) {
            let mut w = f.clone();
            for (i, &c) in t.weight().iter().enumerate() {
                w *= crate::symfunc::pow(&p[i], c);
            }
            *out.entry(beta(&t)).or_insert_with(Rational::zero) += w;
        }
    }
    out.into_iter().collect()
}

/// `P(δ(n) = d)` for every `n ≤ n_max`, by forward recursion on the departure vector.
fn depoissonized_table(p: &[f64], n_max: usize, d: &[u32]) -> Vec<f64> {
    use alloc::collections::BTreeMap;
    let k = p.len();
    let mut cur: BTreeMap<Vec<u32>, f64> = BTreeMap::new();
    cur.insert(alloc::vec![0; k], 1.0);
    let mut out = Vec::with_capacity(n_max + 1);
    for _ in 0..=n_max {
        out.push(cur.get(d).copied().unwrap_or(0.0));
        let mut next = BTreeMap::new();
        for (state, mass) in &cur {
            for (i, &pi) in p.iter().enumerate() {
                let mut s = state.clone();
                if i == 0 || s[i - 1] > s[i] {
                    s[i] += 1;
                }
                // states that overshoot d in any coordinate never return
                if s.iter().zip(d).any(|(a, b)| a > b) {
                    continue;
                }
                *next.entry(s).or_insert(0.0) += mass * pi;
            }
        }
        cur = next;
    }
    out
}

/// A value with a rigorous bound on the neglected series tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounded {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

/// Poisson weights `e^{-t} t^n / n!` for `n ≤ n_max`.
fn poisson_weights(t: f64, n_max: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(n_max + 1);
    // log-space start avoids underflow of e^{-t} for large t
    let mut log_w = -t;
    for n in 0..=n_max {
        if n > 0 {
            log_w += libm::log(t) - libm::log(n as f64);
        }
        w.push(libm::exp(log_w));
    }
    w
}

/// Upper bound on `P(N > n)` for `N ~ Poisson(t)` given the last weight at `n`.
fn poisson_tail(t: f64, n: usize, last: f64) -> f64 {
    let r = t / (n as f64 + 2.0);
    if r >= 1.0 {
        return f64::INFINITY;
    }
    last * t / (n as f64 + 1.0) / (1.0 - r)
}

/// `P(D(t) = d)` as the Poisson mixture `e^{-t} Σ t^n/n! P(δ(n) = d)` with
/// time rescaled so that `|μ| = 1`. Errors if `max_terms` terms cannot push the
/// tail below `tolerance`.
pub fn transient_dist(drive: &PoissonDrive, t: f64, d: &[u32], tolerance: f64, max_terms: usize) -> Result<Bounded> {
    if d.len() != drive.mu.len() {
        return Err(Error::DimensionMismatch { expected: drive.mu.len(), found: d.len() });
    }
    let p = drive.normalized();
    let tt = t * drive.total();
    let n_max = required_terms(tt, tolerance, max_terms)?;
    let probs = depoissonized_table(&p, n_max, d);
    let w = poisson_weights(tt, n_max);
    let value = w.iter().zip(&probs).map(|(a, b)| a * b).sum();
    Ok(Bounded { value, tail_bound: poisson_tail(tt, n_max, w[n_max]), terms: n_max + 1 })
}

fn required_terms(t: f64, tolerance: f64, max_terms: usize) -> Result<usize> {
    let w = poisson_weights(t, max_terms);
    for n in 0..max_terms {
        if (n as f64) > t && poisson_tail(t, n, w[n]) < tolerance {
            return Ok(n);
        }
    }
    let last = max_terms - 1;
    Err(Error::Truncation { terms: max_terms, tail: poisson_tail(t, last, w[last]), tolerance })
}

fn check_k2(mu: &[f64]) -> Result<(f64, f64)> {
    if mu.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: mu.len() });
    }
    PoissonDrive::new(mu.to_vec())?;
    let s = mu[0] + mu[1];
    Ok((mu[0] / s, mu[1] / s))
}

/// `P(D(t) = d)` for two stations:
/// `e^{-t} Σ_{n ≥ d1+d2} t^n μ1^{d1} μ2^{n-d1} (n-2d2+1)/((n-d2+1)! d2!)`
/// (time in units of `1/|μ|`). Zero when `d2 > d1`.
pub fn transient_k2(mu: &[f64], t: f64, d: [u32; 2]) -> Result<f64> {
    let (m1, m2) = check_k2(mu)?;
    let t = t * (mu[0] + mu[1]);
    let [d1, d2] = d;
    if d2 > d1 {
        return Ok(0.0);
    }
    if t == 0.0 {
        return Ok(if d1 == 0 { 1.0 } else { 0.0 });
    }
    let lt = libm::log(t);
    let mut sum = 0.0;
    let mut n = d1 + d2;
    loop {
        let nf = f64::from(n);
        let log_term = -t + nf * lt + f64::from(d1) * libm::log(m1) + (nf - f64::from(d1)) * libm::log(m2)
            + libm::log(nf - 2.0 * f64::from(d2) + 1.0)
            - libm::lgamma(nf - f64::from(d2) + 2.0)
            - libm::lgamma(f64::from(d2) + 1.0);
        let term = libm::exp(log_term);
        sum += term;
        if nf > t && term <= 1e-17 * sum.max(f64::MIN_POSITIVE) {
            break;
        }
        if n > d1 + d2 + 100_000 {
            break;
        }
        n += 1;
    }
    Ok(sum)
}

/// Modified Bessel function `I_ν(z)` by its ascending series.
pub fn bessel_i(order: u32, z: f64) -> f64 {
    if z == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    let half = z / 2.0;
    let nu = f64::from(order);
    let mut term = libm::exp(nu * libm::log(half) - libm::lgamma(nu + 1.0));
    let mut sum = term;
    let q = half * half;
    let mut m = 0.0;
    loop {
        m += 1.0;
        term *= q / (m * (m + nu));
        sum += term;
        if term < 1e-17 * sum && m > half {
            break;
        }
    }
    sum
}

/// `P(Q(t) = q)` for the queue between two stations:
/// `(μ1/μ2)^q e^{-t} Σ_{m≥q} (m+1) (μ2 t)^m I_{m+1}(2√(μ1μ2) t) / (√(μ1μ2) t)^{m+1}`,
/// time in units of `1/|μ|`.
pub fn queuelen_k2(mu: &[f64], t: f64, q: u32) -> Result<f64> {
    let (m1, m2) = check_k2(mu)?;
    let t = t * (mu[0] + mu[1]);
    if t == 0.0 {
        return Ok(if q == 0 { 1.0 } else { 0.0 });
    }
    let g = libm::sqrt(m1 * m2);
    let z = 2.0 * g * t;
    let mut sum = 0.0;
    let mut m = q;
    loop {
        let mf = f64::from(m);
        let bes = bessel_i(m + 1, z);
        if bes == 0.0 {
            break;
        }
        let log_term = libm::log(mf + 1.0) + mf * libm::log(m2 * t) + libm::log(bes) - (mf + 1.0) * libm::log(g * t);
        let term = libm::exp(log_term);
        sum += term;
        if mf > 2.0 * t && term <= 1e-17 * sum.max(f64::MIN_POSITIVE) {
            break;
        }
        if m > q + 100_000 {
            break;
        }
        m += 1;
    }
    Ok(libm::exp(f64::from(q) * libm::log(m1 / m2) - t) * sum)
}

fn f_over_factorial(d: &Partition) -> Rational {
    let n: u32 = d.size();
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    Rational::new(tableaux::num_standard(d).into(), fact.into())
}

/// Three stations with `μ2 = μ3`: the closed form
/// `e^{-p1 t} p^d t^{|d|} f_d / |d|!` for the event `{D1 = d1, D2 ≥ d2, D3 = d3}`,
/// taken verbatim from the skew-Cauchy summation. `d` must be a partition.
///
/// The summation behind it runs over all shapes rather than those with at
/// most three rows, so this is not the probability of that event (nor of
/// `D(t) = d`); compare with [`transient_dist`] and simulation.
pub fn transient_k3_special(mu: &[f64], t: f64, d: [u32; 3]) -> Result<f64> {
    if mu.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: mu.len() });
    }
    let drive = PoissonDrive::new(mu.to_vec())?;
    let p = drive.normalized();
    if (p[1] - p[2]).abs() > 1e-12 * p[1] {
        return Err(Error::UnequalRates);
    }
    let part = Partition::new(d.to_vec())?;
    let t = t * drive.total();
    let comb = to_f64(&f_over_factorial(&part));
    let mut log = -p[0] * t + f64::from(part.size()) * libm::log(t.max(f64::MIN_POSITIVE));
    for (i, &di) in d.iter().enumerate() {
        log += f64::from(di) * libm::log(p[i]);
    }
    if part.size() == 0 {
        return Ok(libm::exp(-p[0] * t));
    }
    Ok(comb * libm::exp(log))
}

/// `G(n) = Π_{i ≤ n} Γ(i) = Π_{j < n} j!`, with `G(0) = 1`.
pub fn barnes_g(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    let mut fact = BigUint::one();
    for j in 1..n {
        fact *= BigUint::from(j);
        acc *= &fact;
    }
    acc
}

/// `f_d / |d|!` for `d = (m, ..., m)` with `k` parts, as `G(k) G(m) / G(k+m)`.
pub fn barnes_factor(k: u32, m: u32) -> Rational {
    if m == 0 {
        return Rational::one();
    }
    let num = barnes_g(k) * barnes_g(m);
    Rational::new(num.into(), barnes_g(k + m).into())
}

/// `f_d / |d|!` for `d = (m, ..., m)` via the hook-length formula.
pub fn constant_factor_hook(k: u32, m: u32) -> Rational {
    f_over_factorial(&Partition::new(alloc::vec![m; k as usize]).expect("constant parts"))
}

/// Constant departures `d = (m, ..., m)`:
/// `e^{-p1 t} Π p_i^m t^{mk} G(k) G(m) / G(k+m)`, time in units of `1/|μ|`.
/// Subject to the same caveat as [`transient_k3_special`].
pub fn transient_constant(mu: &[f64], t: f64, m: u32) -> Result<f64> {
    let drive = PoissonDrive::new(mu.to_vec())?;
    let k = mu.len();
    if k < 2 {
        return Err(Error::DimensionTooSmall { required: 2, found: k });
    }
    let p = drive.normalized();
    let t = t * drive.total();
    if m == 0 {
        return Ok(libm::exp(-p[0] * t));
    }
    let mut log = -p[0] * t + f64::from(m) * k as f64 * libm::log(t);
    for pi in &p {
        log += f64::from(m) * libm::log(*pi);
    }
    Ok(to_f64(&barnes_factor(k as u32, m)) * libm::exp(log))
}

/// Monte Carlo estimate with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
}

impl Estimate {
    /// Bernoulli estimate from `hits` out of `runs`.
    pub fn from_counts(hits: u64, runs: u64) -> Self {
        let p = hits as f64 / runs as f64;
        Estimate { value: p, stderr: libm::sqrt(p * (1.0 - p) / runs as f64) }
    }

    /// Whether `target` lies within `z` standard errors.
    pub fn agrees(&self, target: f64, z: f64) -> bool {
        (self.value - target).abs() <= z * self.stderr
    }
}

/// Fraction of `runs` simulations up to time `t` whose outcome satisfies `event`.
pub fn estimate_event<R, F>(drive: &PoissonDrive, t: f64, runs: u64, rng: &mut R, mut event: F) -> Estimate
where
    R: Rng + ?Sized,
    F: FnMut(&PoissonRun) -> bool,
{
    let mut hits = 0;
    for _ in 0..runs {
        if event(&simulate_poisson(drive, t, rng)) {
            hits += 1;
        }
    }
    Estimate::from_counts(hits, runs)
}

/// Total mass of the exact depoissonized law (should be 1).
pub fn total_mass(dist: &[(Vec<u32>, Rational)]) -> Rational {
    dist.iter().map(|(_, m)| m.clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn worked_example_states() {
        let states = simulate_word(&Word::from_digits("3112322", 3).unwrap());
        let d: Vec<_> = states.iter().map(|s| s.departures.clone()).collect();
        assert_eq!(d[1], vec![vec![0, 0, 0], vec![0, 0], vec![1]]);
        assert_eq!(d[2], vec![vec![1, 0, 0], vec![1, 0], vec![2]]);
        assert_eq!(d[5], vec![vec![2, 1, 1], vec![2, 1], vec![3]]);
        assert_eq!(states[6].queues, vec![vec![0, 1], vec![0]]);
        assert_eq!(states[7].queues, vec![vec![0, 1], vec![1]]);
    }

    #[test]
    fn empty_and_monotone_words() {
        let s = simulate_word(&Word::new(vec![], 3).unwrap());
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].departures, vec![vec![0, 0, 0], vec![0, 0], vec![0]]);
        let s = simulate_word(&Word::from_digits("1111", 3).unwrap());
        assert_eq!(s[4].departures[0], vec![4, 0, 0]);
    }

    #[test]
    fn depoissonized_two_letters() {
        let half = rat(1, 2);
        let dist = depoissonized_dist(&[half.clone(), half], 2);
        // 22 -> (0,0); 21 -> (1,0); 12 -> (1,1); 11 -> (2,0)
        let q = rat(1, 4);
        assert_eq!(
            dist,
            vec![(vec![0, 0], q.clone()), (vec![1, 0], q.clone()), (vec![1, 1], q.clone()), (vec![2, 0], q)]
        );
        let third = rat(1, 3);
        let d3 = depoissonized_dist(&[third.clone(), third.clone(), third], 4);
        assert_eq!(total_mass(&d3), Rational::one());
        assert_eq!(depoissonized_dist(&[rat(1, 2), rat(1, 2)], 0), vec![(vec![0, 0], Rational::one())]);
    }

    #[test]
    fn bessel_values() {
        assert_eq!(bessel_i(0, 0.0), 1.0);
        assert_eq!(bessel_i(1, 0.0), 0.0);
        assert!((bessel_i(0, 1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
        assert!((bessel_i(1, 1.0) - 0.565_159_103_992_485_1).abs() < 1e-15);
    }

    #[test]
    fn k2_closed_form_matches_mixture() {
        let drive = PoissonDrive::new(vec![0.5, 0.5]).unwrap();
        for d in [[0, 0], [1, 0], [1, 1], [3, 1], [2, 2]] {
            let a = transient_k2(&[0.5, 0.5], 1.0, d).unwrap();
            let b = transient_dist(&drive, 1.0, &d, 1e-14, 500).unwrap();
            assert!((a - b.value).abs() < 1e-12, "{d:?}: {a} vs {}", b.value);
        }
        assert!((transient_k2(&[0.5, 0.5], 1.0, [0, 0]).unwrap() - libm::exp(-0.5)).abs() < 1e-15);
    }

    #[test]
    fn k2_normalizes() {
        let mut total = 0.0;
        for d1 in 0..40 {
            for d2 in 0..=d1 {
                total += transient_k2(&[0.3, 0.7], 1.0, [d1, d2]).unwrap();
            }
        }
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn queue_length_distribution() {
        assert_eq!(queuelen_k2(&[1.0, 1.0], 0.0, 0).unwrap(), 1.0);
        let mut total = 0.0;
        for q in 0..60 {
            total += queuelen_k2(&[0.5, 0.5], 2.0, q).unwrap();
        }
        assert!((total - 1.0).abs() < 1e-12);
        // direct sum over d of the two-station law
        let direct: f64 = (0..60).map(|d2| transient_k2(&[0.4, 0.6], 1.5, [d2 + 2, d2]).unwrap()).sum();
        assert!((queuelen_k2(&[0.4, 0.6], 1.5, 2).unwrap() - direct).abs() < 1e-13);
        let a = queuelen_k2(&[0.3, 0.7], 3.0, 1).unwrap();
        let b = queuelen_k2(&[0.3, 0.7], 3.0, 2).unwrap();
        assert!(a > b);
    }

    #[test]
    fn barnes_values() {
        assert_eq!(barnes_g(4), BigUint::from(12u32));
        for k in 2..6 {
            for m in 0..5 {
                assert_eq!(barnes_factor(k, m), constant_factor_hook(k, m));
            }
        }
        assert!((transient_constant(&[1.0, 1.0, 1.0], 2.0, 0).unwrap() - libm::exp(-2.0)).abs() < 1e-15);
    }

    #[test]
    fn k3_special_form() {
        assert!(matches!(transient_k3_special(&[0.5, 0.3, 0.2], 1.0, [0, 0, 0]), Err(Error::UnequalRates)));
        let v = transient_k3_special(&[0.5, 0.25, 0.25], 1.0, [0, 0, 0]).unwrap();
        assert!((v - libm::exp(-0.5)).abs() < 1e-15);
    }

    #[test]
    fn poisson_runs_are_reproducible() {
        let drive = PoissonDrive::new(vec![1.0, 2.0, 0.5]).unwrap();
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        assert_eq!(simulate_poisson(&drive, 3.0, &mut a), simulate_poisson(&drive, 3.0, &mut b));
        let r = simulate_poisson(&drive, 0.0, &mut a);
        assert_eq!(r.departures, vec![0, 0, 0]);
    }

    #[test]
    fn truncation_is_reported() {
        let drive = PoissonDrive::new(vec![1.0, 1.0]).unwrap();
        assert!(matches!(transient_dist(&drive, 50.0, &[1, 0], 1e-12, 20), Err(Error::Truncation { .. })));
    }
}
