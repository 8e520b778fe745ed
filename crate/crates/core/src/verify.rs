//! Exhaustive and seeded verification suites.
//!
//! Every suite returns a [`SuiteReport`] counting the cases it checked and
//! keeping the first discrepancy it met. Exact suites compare rationals or
//! integers with no tolerance.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::continuous::{
    cinf, csup, csup_fold, gamma, gc_phi, random_path, sup_integration_by_parts, word_from_phi_rho, PiecewiseLinear,
    PiecewiseLinearPath,
};
use crate::error::Result;
use crate::lattice::{inf_conv, sup_conv, word_to_walk, MultiPath, Path, Word};
use crate::markov::{
    compositions, conditional_given_shapes, conditioned_matrix, exact_shape_dist, path_law, shape_matrix,
    shape_pushforward, survival_ratio_check, verify_intertwining, SurvivalReport,
};
use crate::queueing::{
    barnes_factor, constant_factor_hook, estimate_event, queuelen_k2, simulate_word, transient_dist,
    transient_k2, transient_k3_special, Estimate, PoissonDrive,
};
use crate::symfunc::{monomial, Rational};
use crate::tableaux::{greene, rs, tableau_from_array, Insertion, Partition, Tableau};
use crate::transform::{dmap, gmap, queue_coupling, reconstruct, sup_fold, tmap, triangular, triangular_incremental};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport { name: name.into(), checked: 0, failures: 0, first_failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Record one case; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    /// Record an error raised while preparing a case.
    pub fn error(&mut self, e: &crate::Error) {
        self.check(false, || format!("error: {e}"));
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

impl core::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}: {} checked, {} failed", self.name, self.checked, self.failures)?;
        if let Some(d) = &self.first_failure {
            write!(f, " (first: {d})")?;
        }
        Ok(())
    }
}

/// All words of length `n` over `1..=k`, in lexicographic order.
pub fn words(k: usize, n: usize) -> impl Iterator<Item = Word> {
    sequences(k, n, 1).map(move |v| Word::new(v, k).expect("letters in range"))
}

/// All paths in `Λ_k` of length `n`, as move sequences over `0..=k`.
pub fn lambda_paths(k: usize, n: usize) -> impl Iterator<Item = MultiPath> {
    sequences(k + 1, n, 0).map(move |v| MultiPath::from_moves(&v, k).expect("moves in range"))
}

fn sequences(base: usize, n: usize, offset: u8) -> impl Iterator<Item = Vec<u8>> {
    let total = (base as u64).pow(n as u32);
    (0..total).map(move |code| {
        let mut c = code;
        let mut v = alloc::vec![0u8; n];
        for slot in v.iter_mut().rev() {
            *slot = (c % base as u64) as u8 + offset;
            c /= base as u64;
        }
        v
    })
}

fn digits(w: &Word) -> String {
    w.letters().iter().map(|&a| char::from(b'0' + a)).collect()
}

// ---------------------------------------------------------------------------
// worked example

/// The word `3112322` with `k = 3`: rows of `D(n)`, rows of `Q(n)` and the
/// column-insertion tableau for `n = 1..7`.
pub struct WorkedExample;

impl WorkedExample {
    pub const WORD: &'static str = "3112322";
    pub const D: [[[u32; 3]; 3]; 7] = [
        [[0, 0, 0], [0, 0, 0], [1, 0, 0]],
        [[1, 0, 0], [1, 0, 0], [2, 0, 0]],
        [[2, 0, 0], [2, 0, 0], [3, 0, 0]],
        [[2, 1, 0], [2, 1, 0], [3, 0, 0]],
        [[2, 1, 1], [2, 1, 0], [3, 0, 0]],
        [[2, 2, 1], [2, 2, 0], [3, 0, 0]],
        [[2, 2, 1], [3, 2, 0], [4, 0, 0]],
    ];
    pub const Q: [[u32; 3]; 7] = [
        [0, 0, 0],
        [1, 0, 1],
        [2, 0, 2],
        [1, 1, 1],
        [1, 0, 1],
        [0, 1, 0],
        [0, 1, 1],
    ];
    pub const TABLEAUX: [&'static str; 7] =
        ["3", "13", "113", "113/2", "113/2/3", "113/22/3", "1123/22/3"];
}

fn tableau_string(t: &Tableau) -> String {
    let rows: Vec<String> =
        t.rows().iter().filter(|r| !r.is_empty()).map(|r| r.iter().map(|&a| char::from(b'0' + a)).collect()).collect();
    rows.join("/")
}

/// The seven fixtures of the worked example, through the fold-based array,
/// the tandem simulation and column insertion.
pub fn worked_example() -> SuiteReport {
    let mut r = SuiteReport::new("worked example");
    let w = Word::from_digits(WorkedExample::WORD, 3).expect("valid word");
    let arr = triangular(&word_to_walk(&w));
    let states = simulate_word(&w);
    for n in 1..=7 {
        let expect_d: Vec<Vec<u32>> = (0..3).map(|i| WorkedExample::D[n - 1][i][..3 - i].to_vec()).collect();
        let q = WorkedExample::Q[n - 1];
        let expect_q = alloc::vec![alloc::vec![q[0], q[1]], alloc::vec![q[2]]];
        let got_d = arr.rows_at(n);
        r.check(got_d == expect_d, || format!("D({n}) = {got_d:?}"));
        let got_q = arr.queues_at(n);
        r.check(got_q == expect_q, || format!("Q({n}) = {got_q:?}"));
        let sim = &states[n];
        r.check(sim.departures == expect_d && sim.queues == expect_q, || format!("simulated state at {n}: {sim:?}"));
        let (p, _) = rs(&w.prefix(n), Insertion::Column);
        let got = tableau_string(&p);
        r.check(got == WorkedExample::TABLEAUX[n - 1], || format!("tableau({n}) = {got}"));
        match tableau_from_array(&arr, n) {
            Ok(t) => r.check(t == p, || format!("array tableau({n}) = {}", tableau_string(&t))),
            Err(e) => r.error(&e),
        }
    }
    r
}

// ---------------------------------------------------------------------------
// tableaux from the triangular array

/// The tableau read off the triangular array equals the column-insertion
/// tableau, and the fold-based and queue-based arrays agree, for every word of
/// length `≤ max_n` over at most `max_k` letters.
pub fn array_tableau(max_k: usize, max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("array tableau = column insertion");
    for k in 1..=max_k {
        for n in 0..=max_n {
            for w in words(k, n) {
                let arr = triangular(&word_to_walk(&w));
                let (p, _) = rs(&w, Insertion::Column);
                match tableau_from_array(&arr, n) {
                    Ok(t) => r.check(t == p, || format!("word {} (k={k})", digits(&w))),
                    Err(e) => r.error(&e),
                }
                if arr != triangular_incremental(&w) {
                    r.check(false, || format!("fold and queue arrays differ on {} (k={k})", digits(&w)));
                }
            }
        }
    }
    r
}

// ---------------------------------------------------------------------------
// Greene invariants

fn longest_increasing(v: &[u8]) -> usize {
    let mut best = alloc::vec![1usize; v.len()];
    for j in 0..v.len() {
        for i in 0..j {
            if v[i] < v[j] && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Largest union of `i` disjoint non-increasing subsequences, by brute force
/// over subsets: a subset splits into `i` such subsequences exactly when its
/// longest strictly increasing subsequence has length `≤ i`.
pub fn greene_brute(w: &Word, i: usize) -> u32 {
    let letters = w.letters();
    let n = letters.len();
    let mut best = 0;
    let mut sub = Vec::with_capacity(n);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        sub.clear();
        sub.extend((0..n).filter(|&j| mask >> j & 1 == 1).map(|j| letters[j]));
        if longest_increasing(&sub) <= i {
            best = size;
        }
    }
    best
}

/// Brute-force Greene invariants, the flow-based ones, the partial sums of
/// the column-insertion shape and the top components of `G` all agree.
pub fn greene_suite(max_k: usize, max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("Greene invariants");
    for k in 1..=max_k {
        for n in 0..=max_n {
            for w in words(k, n) {
                let (p, _) = rs(&w, Insertion::Column);
                let shape = p.shape().padded(k);
                let g = gmap(&word_to_walk(&w)).at(n);
                for i in 1..=k {
                    let brute = greene_brute(&w, i);
                    let flow = greene(&w, i);
                    let partial: u32 = shape[..i].iter().sum();
                    let top: u32 = g[k - i..].iter().sum();
                    r.check(brute == flow && flow == partial && partial == top, || {
                        format!("word {} i={i}: brute {brute}, flow {flow}, shape {partial}, G {top}", digits(&w))
                    });
                }
            }
        }
    }
    r
}

// ---------------------------------------------------------------------------
// path identities

fn add(a: &Path, b: &Path) -> Path {
    a.checked_add(b).expect("shared horizon")
}

fn inf(a: &Path, b: &Path) -> Path {
    inf_conv(a, b).expect("shared horizon")
}

fn sup(a: &Path, b: &Path) -> Path {
    sup_conv(a, b).expect("shared horizon")
}

fn pair_identities(r: &mut SuiteReport, x: &Path, y: &Path) {
    let (lo, hi) = (inf(x, y), sup(y, x));
    r.check(add(&lo, &hi) == add(x, y), || format!("x ⊲ y + y ⊳ x ≠ x + y for {:?}, {:?}", x.values(), y.values()));
    let n = x.horizon();
    let mut s = 0i64;
    let ok = (0..=n).all(|l| {
        let z = i64::from(y.value(l)) - i64::from(x.value(l));
        s = s.max(z);
        i64::from(hi.value(l)) - i64::from(lo.value(l)) == 2 * s - z
    });
    r.check(ok, || format!("2S - Z fails for {:?}, {:?}", x.values(), y.values()));
}

fn multipath_identities(r: &mut SuiteReport, x: &MultiPath) {
    let k = x.dim();
    let n = x.horizon();
    let g = gmap(x);
    r.check((0..=n).all(|l| g.at(l).iter().sum::<u32>() == x.total(l)), || format!("|G| ≠ |x| for {:?}", x.at(n)));
    r.check(sup_fold(x) == *g.path().component(k - 1), || format!("sup fold ≠ G_k at {:?}", x.at(n)));
    let d = dmap(x);
    if k >= 2 {
        let t = tmap(x).expect("k ≥ 2");
        let ok = (0..=n).all(|l| {
            let dl = d.at(l);
            let tl = t.at(l);
            (1..k).all(|i| x.component(i).value(l) + dl[i - 1] == dl[i] + tl[i - 1])
                && x.component(0).value(l) == dl[0]
        });
        r.check(ok, || format!("x_i = D_i - D_(i-1) + T_(i-1) fails at {:?}", x.at(n)));
    }
}

fn triple_identities(r: &mut SuiteReport, a: &Path, b: &Path, c: &Path) {
    let left = sup(&sup(a, &inf(c, b)), &sup(b, c));
    r.check(left == sup(&sup(a, b), c), || format!("sup identity fails for {:?} {:?} {:?}", a.values(), b.values(), c.values()));
    let left = inf(&inf(a, &sup(c, b)), &inf(b, c));
    r.check(left == inf(&inf(a, b), c), || format!("inf identity fails for {:?} {:?} {:?}", a.values(), b.values(), c.values()));
    let coupling = queue_coupling(a, b, c);
    r.check(coupling.is_ok(), || format!("coupling {coupling:?} for {:?} {:?} {:?}", a.values(), b.values(), c.values()));
}

/// Pair identities on `Λ_2`, triple identities and the queue coupling on
/// `Λ_3`, mass conservation, the sup fold and the `D`/`T` relation on both,
/// for every path of length `n`. All operations are causal, so length `n`
/// covers every shorter length.
pub fn path_identities(n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("path identities");
    for x in lambda_paths(2, n) {
        pair_identities(&mut r, x.component(0), x.component(1));
        multipath_identities(&mut r, &x);
    }
    for x in lambda_paths(3, n) {
        let [a, b, c] = [x.component(0), x.component(1), x.component(2)];
        triple_identities(&mut r, a, b, c);
        multipath_identities(&mut r, &x);
    }
    r
}

/// Recovery from `G` is correct wherever it is certified, for every word of
/// length `≤ max_n` over at most `max_k` letters. Also reports how many
/// coordinates were certified.
pub fn recovery(max_k: usize, max_n: usize) -> (SuiteReport, u64) {
    let mut r = SuiteReport::new("recovery on certified coordinates");
    let mut certified = 0;
    for k in 2..=max_k {
        for w in words(k, max_n) {
            let x = word_to_walk(&w);
            let rec = reconstruct(&gmap(&x));
            for n in 0..=max_n {
                let got = rec.at(n);
                let truth = x.at(n);
                for i in 0..k {
                    if got.certified[i] {
                        certified += 1;
                        r.check(got.values[i] == i64::from(truth[i]), || {
                            format!("word {} n={n} coordinate {}: {} ≠ {}", digits(&w), i + 1, got.values[i], truth[i])
                        });
                    }
                }
            }
        }
    }
    (r, certified)
}

// ---------------------------------------------------------------------------
// Markov chains

fn nonzero<K: Ord>(m: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
    m.into_iter().filter(|(_, v)| !num_traits::Zero::is_zero(v)).collect()
}

fn p_string(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|q| format!("{q}")).collect();
    parts.join(",")
}

/// Law of the shape at time `m ≤ n` three ways: `s_λ(p) f_λ`, the push-forward
/// of `Q` from the empty shape, and enumeration of words.
pub fn shape_law(p: &[Rational], n: usize) -> SuiteReport {
    let mut r = SuiteReport::new(&format!("shape law p=({})", p_string(p)));
    let k = p.len();
    let q = match shape_matrix(p, n as u32) {
        Ok(q) => q,
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    for m in 0..=n {
        let mut enumerated: BTreeMap<Partition, Rational> = BTreeMap::new();
        for w in words(k, m) {
            let (t, _) = rs(&w, Insertion::Column);
            *enumerated.entry(t.shape()).or_default() += monomial(p, &w.weight());
        }
        let formula = exact_shape_dist(p, m as u32);
        let pushed = shape_pushforward(&q, m as u32);
        match (formula, pushed) {
            (Ok(a), Ok(b)) => {
                let (a, b, c) = (nonzero(a), nonzero(b), nonzero(enumerated));
                r.check(a == b && b == c, || format!("n={m}: formula {a:?}, chain {b:?}, words {c:?}"));
            }
            (Err(e), _) | (_, Err(e)) => r.error(&e),
        }
    }
    r
}

/// `QK = KP` and `P̂J = JP` on every state of size `≤ max_size`.
pub fn intertwining(p: &[Rational], max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new(&format!("intertwining p=({})", p_string(p)));
    match verify_intertwining(p, max_size) {
        Ok((qk, pj)) => {
            r.checked += (qk.checked_rows + pj.checked_rows) as u64 - 2;
            r.check(qk.passed(), || format!("QK ≠ KP at {:?}", qk.witness));
            r.check(pj.passed(), || format!("P̂J ≠ JP at {:?}", pj.witness));
        }
        Err(e) => r.error(&e),
    }
    r
}

/// The law of `(G(0), ..., G(m))` for `X` with law `p` equals the law of the
/// `P̂` chain from the origin, for `m ≤ n`.
pub fn g_law(p: &[Rational], n: usize) -> SuiteReport {
    let mut r = SuiteReport::new(&format!("law of G(X) p=({})", p_string(p)));
    let k = p.len();
    let chain = match conditioned_matrix(p, n as u32) {
        Ok(c) => c,
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    for m in 0..=n {
        let mut enumerated: BTreeMap<Vec<Vec<u32>>, Rational> = BTreeMap::new();
        for w in words(k, m) {
            let g = gmap(&word_to_walk(&w));
            let key: Vec<Vec<u32>> = (0..=m).map(|l| g.at(l)).collect();
            *enumerated.entry(key).or_default() += monomial(p, &w.weight());
        }
        match path_law(&chain, &alloc::vec![0; k], m) {
            Ok(law) => {
                let (a, b) = (nonzero(law), nonzero(enumerated));
                r.check(a == b, || {
                    let bad = b.iter().find(|(key, v)| a.get(*key) != Some(*v)).map(|(key, _)| key.clone());
                    format!("n={m}: laws differ, e.g. at {bad:?}")
                });
            }
            Err(e) => r.error(&e),
        }
    }
    r
}

/// Conditional law of `X(m)` given the recording chain `λ(1..m)`, by
/// enumeration, equals `K(λ(m), ·)` for every chain of positive probability.
pub fn conditional_law(p: &[Rational], n: usize) -> SuiteReport {
    let mut r = SuiteReport::new(&format!("conditional law p=({})", p_string(p)));
    let k = p.len();
    for m in 0..=n {
        let mut groups: BTreeMap<Vec<Partition>, BTreeMap<Vec<u32>, Rational>> = BTreeMap::new();
        for w in words(k, m) {
            let (_, q) = rs(&w, Insertion::Column);
            let chain = q.shapes();
            *groups.entry(chain).or_default().entry(w.weight()).or_default() += monomial(p, &w.weight());
        }
        for (chain, joint) in groups {
            let total: Rational = joint.values().sum();
            for y in compositions(m as u32, k) {
                let brute = joint.get(&y).cloned().unwrap_or_default() / &total;
                match conditional_given_shapes(p, &chain, &y) {
                    Ok(v) => r.check(v == brute, || format!("chain {chain:?}, y={y:?}: K gives {v}, enumeration {brute}")),
                    Err(e) => r.error(&e),
                }
            }
        }
    }
    r
}

// ---------------------------------------------------------------------------
// continuous paths

fn integer_points(f: &PiecewiseLinearPath, n: usize) -> Result<Vec<Vec<Rational>>> {
    (0..=n).map(|l| f.eval(&Rational::from_integer((l as i64).into()))).collect()
}

fn as_rationals(v: &[u32]) -> Vec<Rational> {
    v.iter().map(|&a| Rational::from_integer(i64::from(a).into())).collect()
}

/// Interpolated integer paths: `Γ` matches `G` and `⊲`/`⊳` match their
/// discrete versions at integer times, for every word of length `≤ max_n`
/// over at most `max_k` letters; `(φ, ρ)` recovers words of length `≤ max_rt`.
pub fn continuous_embedding(max_k: usize, max_n: usize, max_rt: usize) -> SuiteReport {
    let mut r = SuiteReport::new("continuous embedding");
    for k in 1..=max_k {
        for n in 1..=max_n {
            for w in words(k, n) {
                let x = word_to_walk(&w);
                let f = PiecewiseLinearPath::interpolate(&x);
                let g = gmap(&x);
                let res = gamma(&f).and_then(|gf| integer_points(&gf, n));
                match res {
                    Ok(pts) => {
                        let ok = (0..=n).all(|l| pts[l] == as_rationals(&g.at(l)));
                        r.check(ok, || format!("Γ ≠ G on word {} (k={k})", digits(&w)));
                    }
                    Err(e) => r.error(&e),
                }
                if k >= 2 {
                    let (a, b) = (&f.coords()[0], &f.coords()[1]);
                    let (pa, pb) = (x.component(0), x.component(1));
                    let lo = cinf(a, b);
                    let hi = csup(a, b);
                    match (lo, hi) {
                        (Ok(lo), Ok(hi)) => {
                            let (dlo, dhi) = (inf(pa, pb), sup(pa, pb));
                            let ok = (0..=n).all(|l| {
                                let t = Rational::from_integer((l as i64).into());
                                lo.eval(&t).ok() == Some(Rational::from_integer(i64::from(dlo.value(l)).into()))
                                    && hi.eval(&t).ok() == Some(Rational::from_integer(i64::from(dhi.value(l)).into()))
                            });
                            r.check(ok, || format!("continuous ⊲/⊳ ≠ discrete on word {} (k={k})", digits(&w)));
                        }
                        (Err(e), _) | (_, Err(e)) => r.error(&e),
                    }
                }
                if n <= max_rt {
                    match word_from_phi_rho(&f.rescaled(), n) {
                        Ok(back) => r.check(back == w, || format!("(φ, ρ) gives {} for {}", digits(&back), digits(&w))),
                        Err(e) => r.error(&e),
                    }
                }
            }
        }
    }
    r
}

/// Random piecewise-linear paths: `|Γ(f)| = |f|`, the top component of `Γ` is
/// the sup fold, `φ` interlaces, and sup-integration by parts holds.
pub fn continuous_random(cases: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("continuous properties");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let k = 2 + case % 3;
        let f = random_path(k, 2 + case % 4, &mut rng);
        let out = (|| -> Result<(bool, bool, bool, (Rational, Rational))> {
            let g = gamma(&f)?;
            let mass = same_function(&g.total()?, &f.total()?)?;
            let top = same_function(&g.coords()[k - 1], &csup_fold(&f)?)?;
            let inter = gc_phi(&f)?.interlaces();
            let ibp = sup_integration_by_parts(&f.coords()[0], &f.coords()[1])?;
            Ok((mass, top, inter, ibp))
        })();
        match out {
            Ok((mass, top, inter, (lhs, rhs))) => {
                r.check(mass, || format!("case {case}: |Γ(f)| ≠ |f|"));
                r.check(top, || format!("case {case}: Γ_k ≠ sup fold"));
                r.check(inter, || format!("case {case}: φ does not interlace"));
                r.check(lhs == rhs, || format!("case {case}: sup-integration by parts {lhs} ≠ {rhs}"));
            }
            Err(e) => r.error(&e),
        }
    }
    r
}

/// Equality as functions: compare at the union of both breakpoint sets.
fn same_function(a: &PiecewiseLinear, b: &PiecewiseLinear) -> Result<bool> {
    let mut times: Vec<Rational> = a.times().iter().chain(b.times()).cloned().collect();
    times.sort();
    times.dedup();
    for t in &times {
        if a.eval(t)? != b.eval(t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// tandem queue formulas

/// `transient_k2` against the Poisson mixture at `points` random `(t, d)`.
pub fn k2_vs_mixture(points: usize, seed: u64, tolerance: f64) -> SuiteReport {
    use rand::Rng;
    let mut r = SuiteReport::new("two-station closed form vs Poisson mixture");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let m1: f64 = rng.gen_range(0.1..0.9);
        let mu = [m1, 1.0 - m1];
        let t: f64 = rng.gen_range(0.1..4.0);
        let d1: u32 = rng.gen_range(0..5);
        let d2: u32 = rng.gen_range(0..=d1);
        let drive = PoissonDrive::new(mu.to_vec()).expect("positive rates");
        match (transient_k2(&mu, t, [d1, d2]), transient_dist(&drive, t, &[d1, d2], tolerance * 1e-3, 10_000)) {
            (Ok(a), Ok(b)) => r.check((a - b.value).abs() <= tolerance, || {
                format!("mu={mu:?} t={t} d=({d1},{d2}): {a} vs {}", b.value)
            }),
            (Err(e), _) | (_, Err(e)) => r.error(&e),
        }
    }
    r
}

/// Three-station special form against the Poisson mixture for the event
/// `{D1 = d1, D2 >= d2, D3 = d3}`, at random `μ = (a, b, b)`, `t` and `d`.
pub fn k3_vs_mixture(points: usize, seed: u64, tolerance: f64) -> SuiteReport {
    use rand::Rng;
    let mut r = SuiteReport::new("three-station special form vs Poisson mixture");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let a: f64 = rng.gen_range(0.1..0.9);
        let mu = [a, (1.0 - a) / 2.0, (1.0 - a) / 2.0];
        let t: f64 = rng.gen_range(0.1..3.0);
        let d1: u32 = rng.gen_range(0..5);
        let d2: u32 = rng.gen_range(0..=d1);
        let d3: u32 = rng.gen_range(0..=d2);
        let drive = PoissonDrive::new(mu.to_vec()).expect("positive rates");
        let mixture: Result<f64> =
            (d2..=d1).map(|e| transient_dist(&drive, t, &[d1, e, d3], tolerance * 1e-3, 10_000).map(|b| b.value)).sum();
        match (transient_k3_special(&mu, t, [d1, d2, d3]), mixture) {
            (Ok(a), Ok(b)) => r.check((a - b).abs() <= tolerance, || {
                format!("mu={mu:?} t={t} d=({d1},{d2},{d3}): {a} vs {b}")
            }),
            (Err(e), _) | (_, Err(e)) => r.error(&e),
        }
    }
    r
}

/// A closed-form value against a Monte Carlo estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct McComparison {
    pub label: String,
    pub formula: f64,
    pub estimate: Estimate,
}

impl McComparison {
    pub fn agrees(&self, z: f64) -> bool {
        self.estimate.agrees(self.formula, z)
    }
}

/// `queuelen_k2` at `μ = (1/2, 1/2)`, `t = 2`, `q = 0, 1, 2` against simulation.
pub fn queuelen_mc(runs: u64, seed: u64) -> Result<Vec<McComparison>> {
    let mu = [0.5, 0.5];
    let t = 2.0;
    let drive = PoissonDrive::new(mu.to_vec())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..3u32)
        .map(|q| {
            let formula = queuelen_k2(&mu, t, q)?;
            let estimate = estimate_event(&drive, t, runs, &mut rng, |run| run.queues[0] == q);
            Ok(McComparison { label: format!("P(Q(2)={q}), mu=(1/2,1/2)"), formula, estimate })
        })
        .collect()
}

/// The three-station special form at `μ = (1/2, 1/4, 1/4)`, `t = 1`,
/// `d = (1, 1, 0)` against the simulated frequency of
/// `{D1 = 1, D2 ≥ 1, D3 = 0}`.
pub fn k3_mc(runs: u64, seed: u64) -> Result<McComparison> {
    let mu = [0.5, 0.25, 0.25];
    let drive = PoissonDrive::new(mu.to_vec())?;
    let formula = transient_k3_special(&mu, 1.0, [1, 1, 0])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let estimate = estimate_event(&drive, 1.0, runs, &mut rng, |run| {
        run.departures[0] == 1 && run.departures[1] >= 1 && run.departures[2] == 0
    });
    Ok(McComparison { label: "P(D1=1, D2>=1, D3=0), mu=(1/2,1/4,1/4), t=1".into(), formula, estimate })
}

/// `G(k)G(m)/G(k+m)` against the hook-length value of `f_d/|d|!`.
pub fn barnes_suite(max_k: u32, max_m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("Barnes factor");
    for k in 2..=max_k {
        for m in 0..=max_m {
            let (a, b) = (barnes_factor(k, m), constant_factor_hook(k, m));
            r.check(a == b, || format!("k={k} m={m}: {a} vs {b}"));
        }
    }
    r
}

/// Survival ratio experiment for `k = 2`, `p = (1/4, 3/4)`, from the origin
/// and from `(0, 1)`.
pub fn survival(horizon: usize, paths: u64, seed: u64) -> Result<SurvivalReport> {
    let p = [crate::symfunc::rational(1, 4), crate::symfunc::rational(3, 4)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    survival_ratio_check(&p, &[0, 0], &[0, 1], horizon, paths, &mut rng)
}

/// Merge several reports into one.
pub fn merge(name: &str, reports: impl IntoIterator<Item = SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(name);
    for r in reports {
        out.absorb(r);
    }
    out
}
