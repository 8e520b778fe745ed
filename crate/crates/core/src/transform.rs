//! The path transformation `G^(k)` and its building blocks.
//!
//! `D^(k)(x) = (x_1, x_1 ⊲ x_2, ..., x_1 ⊲ ... ⊲ x_k)` collects the departure
//! processes of `k` queues in series driven by `x`, and
//! `T^(k)_{i-1} = x_i ⊳ D^(k)_{i-1}` the departures plus unused services that
//! drive the next series. Iterating gives the triangular array
//! `d^(i) = D(t^(i-1))`, `t^(i) = T(t^(i-1))`, and
//! `G^(k) = (d^(1)_k, d^(2)_{k-1}, ..., d^(k)_1)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{inf_conv, sup_conv, sup_fold_paths, MultiPath, Path, Word};
use crate::queueing::TandemNetwork;

/// Output of [`gmap`]. For Π_k inputs the values lie in the chamber
/// `x_1 ≤ ... ≤ x_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GOutput(MultiPath);

impl GOutput {
    pub fn new(path: MultiPath) -> Self {
        GOutput(path)
    }

    pub fn path(&self) -> &MultiPath {
        &self.0
    }

    pub fn into_path(self) -> MultiPath {
        self.0
    }

    pub fn at(&self, n: usize) -> Vec<u32> {
        self.0.at(n)
    }

    pub fn in_chamber(&self) -> bool {
        self.0.in_chamber()
    }
}

/// `D^(k)`. `D^(1)` is the identity.
pub fn dmap(x: &MultiPath) -> MultiPath {
    let mut out = Vec::with_capacity(x.dim());
    let mut acc = x.component(0).clone();
    out.push(acc.clone());
    for c in &x.components()[1..] {
        acc = inf_conv(&acc, c).expect("components share a horizon");
        out.push(acc.clone());
    }
    MultiPath::new(out).expect("non-empty")
}

/// `T^(k)`, defined for `k ≥ 2`.
pub fn tmap(x: &MultiPath) -> Result<MultiPath> {
    if x.dim() < 2 {
        return Err(Error::DimensionTooSmall { required: 2, found: x.dim() });
    }
    let d = dmap(x);
    let comps = (1..x.dim())
        .map(|i| sup_conv(x.component(i), d.component(i - 1)).expect("shared horizon"))
        .collect();
    MultiPath::new(comps)
}

/// `G^(k)` by its recursive definition
/// `G^(k)(x) = (x_1 ⊲ ... ⊲ x_k, G^(k-1)(T^(k)(x)))`.
pub fn gmap(x: &MultiPath) -> GOutput {
    GOutput(MultiPath::new(gmap_components(x)).expect("non-empty"))
}

fn gmap_components(x: &MultiPath) -> Vec<Path> {
    if x.dim() == 1 {
        return x.components().to_vec();
    }
    let first = dmap(x).component(x.dim() - 1).clone();
    let mut rest = gmap_components(&tmap(x).expect("dim ≥ 2"));
    rest.insert(0, first);
    rest
}

/// `x_k ⊳ x_{k-1} ⊳ ... ⊳ x_1`, the last coordinate of `G^(k)(x)`.
pub fn sup_fold(x: &MultiPath) -> Path {
    sup_fold_paths(x.components().iter().rev()).expect("non-empty")
}

/// Triangular array of departure processes. `d[i]` is `d^(i+1)` with `k - i`
/// coordinates; `t[i]` is `t^(i+1)` with `k - i - 1` coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangularArray {
    d: Vec<MultiPath>,
    t: Vec<MultiPath>,
}

impl TriangularArray {
    pub fn k(&self) -> usize {
        self.d.len()
    }

    pub fn horizon(&self) -> usize {
        self.d[0].horizon()
    }

    pub fn d(&self) -> &[MultiPath] {
        &self.d
    }

    pub fn t(&self) -> &[MultiPath] {
        &self.t
    }

    /// Rows `[d^(1)(n), d^(2)(n), ..., d^(k)(n)]`.
    pub fn rows_at(&self, n: usize) -> Vec<Vec<u32>> {
        self.d.iter().map(|row| row.at(n)).collect()
    }

    /// Queue contents `q^(j)_i(n) = d^(j)_i(n) - d^(j)_{i+1}(n)`, one row per series.
    pub fn queues_at(&self, n: usize) -> Vec<Vec<u32>> {
        self.d[..self.k().saturating_sub(1)]
            .iter()
            .map(|row| {
                let v = row.at(n);
                v.windows(2).map(|w| w[0] - w[1]).collect()
            })
            .collect()
    }

    /// `G^(k) = (d^(1)_k, ..., d^(k)_1)`.
    pub fn g(&self) -> GOutput {
        let k = self.k();
        let comps = (0..k).map(|i| self.d[i].component(k - 1 - i).clone()).collect();
        GOutput(MultiPath::new(comps).expect("non-empty"))
    }
}

/// Triangular array by direct evaluation of the ⊲/⊳ folds.
pub fn triangular(x: &MultiPath) -> TriangularArray {
    let mut d = Vec::with_capacity(x.dim());
    let mut t = Vec::with_capacity(x.dim().saturating_sub(1));
    let mut drive = x.clone();
    loop {
        d.push(dmap(&drive));
        if drive.dim() == 1 {
            break;
        }
        let next = tmap(&drive).expect("dim ≥ 2");
        t.push(next.clone());
        drive = next;
    }
    TriangularArray { d, t }
}

/// Triangular array by the event-driven queueing recursion, one letter at a time.
pub fn triangular_incremental(w: &Word) -> TriangularArray {
    let k = w.alphabet();
    let n = w.len();
    let mut net = TandemNetwork::new(k);
    let mut d_hist: Vec<Vec<Vec<u32>>> = (0..k).map(|j| alloc::vec![alloc::vec![0; n + 1]; k - j]).collect();
    let mut t_hist: Vec<Vec<Vec<u32>>> =
        (0..k.saturating_sub(1)).map(|j| alloc::vec![alloc::vec![0; n + 1]; k - j - 1]).collect();
    for (time, &a) in w.letters().iter().enumerate() {
        net.serve(a);
        for (j, series) in net.series().iter().enumerate() {
            for (i, &v) in series.departures().iter().enumerate() {
                d_hist[j][i][time + 1] = v;
            }
            for (i, &v) in series.carried().iter().enumerate() {
                t_hist[j][i][time + 1] = v;
            }
        }
    }
    let to_multi = |rows: Vec<Vec<u32>>| {
        MultiPath::new(rows.into_iter().map(Path::from_values_unchecked).collect()).expect("non-empty")
    };
    TriangularArray {
        d: d_hist.into_iter().map(to_multi).collect(),
        t: t_hist.into_iter().map(to_multi).collect(),
    }
}

/// Reconstruction of a path from its image under `G^(k)`.
///
/// `values[i][n]` is the reconstructed `x_{i+1}(n)`; it is exact for
/// `n ≤ exact_until[i]` and a best guess beyond.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reconstruction {
    pub values: Vec<Vec<i64>>,
    pub exact_until: Vec<usize>,
}

impl Reconstruction {
    pub fn at(&self, n: usize) -> Recovered {
        Recovered {
            values: self.values.iter().map(|c| c[n]).collect(),
            certified: self.exact_until.iter().map(|&e| n <= e).collect(),
        }
    }
}

/// `x(n)` recovered from `G^(k)(x)`, with a per-coordinate certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Recovered {
    pub values: Vec<i64>,
    pub certified: Vec<bool>,
}

impl Recovered {
    pub fn fully_certified(&self) -> bool {
        self.certified.iter().all(|&c| c)
    }
}

/// Recover `x(n)` from `g = G^(k)(x)` observed on `0..=horizon`.
///
/// Each `G^(2)` layer `(d, t) = (a ⊲ s, s ⊳ a)` is undone by tracking the hidden
/// queue `q = a - d`. It satisfies `q(0) = 0`, the reverse Lindley relation
/// `q(l-1) = max(0, q(l) + Δd(l) - Δt(l))`, and forward steps that are forced
/// except when an empty queue sees a `t` step. Interval bounds are propagated
/// both ways until they stop moving; a coordinate is certified at `n` only
/// when the bounds on every hidden queue it depends on have closed there.
pub fn recover(g: &GOutput, n: usize) -> Result<Recovered> {
    let h = g.path().horizon();
    if n > h {
        return Err(Error::InvalidWindow { from: n, to: n, horizon: h });
    }
    Ok(reconstruct(g).at(n))
}

/// Full reconstruction over the observed horizon.
pub fn reconstruct(g: &GOutput) -> Reconstruction {
    let comps: Vec<Vec<i64>> =
        g.path().components().iter().map(|c| c.values().iter().map(|&v| i64::from(v)).collect()).collect();
    let horizon = g.path().horizon();
    let (values, exact_until) = invert_g(&comps, horizon);
    Reconstruction { values, exact_until }
}

fn invert_g(g: &[Vec<i64>], exact: usize) -> (Vec<Vec<i64>>, Vec<usize>) {
    let k = g.len();
    if k == 1 {
        return (g.to_vec(), alloc::vec![exact]);
    }
    let (t, t_exact) = invert_g(&g[1..], exact);
    let mut xs: Vec<Vec<i64>> = alloc::vec![Vec::new(); k];
    let mut x_exact = alloc::vec![0usize; k];
    let mut d = g[0].clone();
    let mut d_exact = exact;
    for i in (1..k).rev() {
        // (D_{i+1}, T_i) = G^(2)(D_i, x_{i+1}) in 1-based terms
        let window = d_exact.min(t_exact[i - 1]);
        let (a, s, c) = invert_stage(&d, &t[i - 1], window);
        xs[i] = s;
        x_exact[i] = c;
        d = a;
        d_exact = c;
    }
    xs[0] = d;
    x_exact[0] = d_exact;
    (xs, x_exact)
}

/// Undo one `G^(2)` layer. Inputs are trusted on `0..=window`. Returns
/// `(a, s, c)` with `(d, t) = G^(2)(a, s)` exact on `0..=c`.
fn invert_stage(d: &[i64], t: &[i64], window: usize) -> (Vec<i64>, Vec<i64>, usize) {
    let len = d.len();
    let mut lo = alloc::vec![0i64; window + 1];
    let mut hi: Vec<i64> = t[..=window].iter().map(|&v| v.max(0)).collect();
    hi[0] = 0;
    loop {
        let mut changed = false;
        for l in 1..=window {
            let (dd, dt) = (d[l] - d[l - 1], t[l] - t[l - 1]);
            let (flo, fhi) = if dd > 0 {
                (lo[l - 1] - 1, hi[l - 1] - 1)
            } else if dt > 0 {
                (if lo[l - 1] > 0 { lo[l - 1] + 1 } else { 0 }, hi[l - 1] + 1)
            } else {
                (lo[l - 1], hi[l - 1])
            };
            if flo > lo[l] {
                lo[l] = flo;
                changed = true;
            }
            if fhi < hi[l] {
                hi[l] = fhi;
                changed = true;
            }
        }
        for l in (1..=window).rev() {
            let step = (d[l] - d[l - 1]) - (t[l] - t[l - 1]);
            let blo = (lo[l] + step).max(0);
            let bhi = (hi[l] + step).max(0);
            if blo > lo[l - 1] {
                lo[l - 1] = blo;
                changed = true;
            }
            if bhi < hi[l - 1] {
                hi[l - 1] = bhi;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            // inconsistent input, e.g. not the image of any path
            break;
        }
    }
    let c = (0..=window).rev().find(|&l| lo[l] == hi[l]).unwrap_or(0);
    let mut q = Vec::with_capacity(len);
    q.extend_from_slice(&lo);
    for l in window + 1..len {
        let prev = q[l - 1];
        let next = if d[l] > d[l - 1] { (prev - 1).max(0) } else if t[l] > t[l - 1] && prev > 0 { prev + 1 } else { prev };
        q.push(next);
    }
    let a = d.iter().zip(&q).map(|(x, y)| x + y).collect();
    let s = t.iter().zip(&q).map(|(x, y)| x - y).collect();
    (a, s, c)
}

/// Weight of the column-insertion tableau at time `n` recovered from the
/// shape sequence alone. Shapes are partitions (non-increasing); the result is
/// in natural letter order `(#1s, #2s, ...)`.
pub fn recover_weight_from_shapes(shapes: &[Vec<u32>], n: usize) -> Result<Recovered> {
    let k = shapes.first().map(Vec::len).ok_or(Error::InvalidArgument("empty shape sequence"))?;
    let mut comps = alloc::vec![Vec::with_capacity(shapes.len()); k];
    for s in shapes {
        if s.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: s.len() });
        }
        for (i, c) in comps.iter_mut().enumerate() {
            c.push(s[k - 1 - i]);
        }
    }
    let paths = comps.into_iter().map(Path::new).collect::<Result<Vec<_>>>()?;
    recover(&GOutput(MultiPath::new(paths)?), n)
}

/// Step-by-step record of the two-queue comparison used to prove
/// `w ⊲ (y ⊳ x) ⊲ (x ⊲ y) = w ⊲ x ⊲ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingTrace {
    /// Which of the cases (a)-(e) drove each step.
    pub cases: Vec<char>,
    /// `q_1 + q_2` at every time.
    pub total: Vec<u32>,
}

/// The coupling hypothesis failed at some step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingViolation {
    pub time: usize,
    pub case: char,
}

/// Run the tandem queues driven by `(w, x, y)` and `(w, x + u, y - u)` side by side,
/// where `u` counts unused services of the queue `(x, y)`, checking after every
/// step that `q_1 + q_2 = q̃_1 + q̃_2` and that either `q̃_2 ≥ q_2, q = q_2` or
/// `q̃_2 = q_2, q ≥ q_2`.
pub fn queue_coupling(w: &Path, x: &Path, y: &Path) -> core::result::Result<CouplingTrace, CouplingViolation> {
    let n = w.horizon();
    assert!(x.horizon() == n && y.horizon() == n, "horizons must agree");
    let d = inf_conv(x, y).expect("shared horizon");
    // u = y - d, q = x - d
    let u: Vec<i64> = (0..=n).map(|l| i64::from(y.value(l)) - i64::from(d.value(l))).collect();
    let xu = Path::new((0..=n).map(|l| (i64::from(x.value(l)) + u[l]) as u32).collect()).expect("Λ_1");
    let yu = Path::new((0..=n).map(|l| (i64::from(y.value(l)) - u[l]) as u32).collect()).expect("Λ_1");
    let d1 = inf_conv(w, x).expect("shared horizon");
    let d2 = inf_conv(&d1, y).expect("shared horizon");
    let e1 = inf_conv(w, &xu).expect("shared horizon");
    let e2 = inf_conv(&e1, &yu).expect("shared horizon");
    let mut trace = CouplingTrace { cases: Vec::with_capacity(n), total: Vec::with_capacity(n + 1) };
    for l in 0..=n {
        let q = i64::from(x.value(l)) - i64::from(d.value(l));
        let q1 = i64::from(w.value(l)) - i64::from(d1.value(l));
        let q2 = i64::from(d1.value(l)) - i64::from(d2.value(l));
        let r1 = i64::from(w.value(l)) - i64::from(e1.value(l));
        let r2 = i64::from(e1.value(l)) - i64::from(e2.value(l));
        let case = if l == 0 {
            '-'
        } else if w.steps_at(l) {
            'b'
        } else if x.steps_at(l) {
            'c'
        } else if yu.steps_at(l) {
            'd'
        } else if u[l] > u[l - 1] {
            'e'
        } else {
            'a'
        };
        let sums_agree = q1 + q2 == r1 + r2;
        let branch_i = r2 - q2 >= 0 && q - q2 == 0;
        let branch_ii = r2 - q2 == 0 && q - q2 >= 0;
        if !(sums_agree && (branch_i || branch_ii)) {
            return Err(CouplingViolation { time: l, case });
        }
        if l > 0 {
            trace.cases.push(case);
        }
        trace.total.push((q1 + q2) as u32);
    }
    Ok(trace)
}
