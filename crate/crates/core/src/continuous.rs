//! Continuous ⊲/⊳ on piecewise-linear paths and the transformation `Γ^(k)`.
//!
//! All arithmetic is exact over the rationals. For piecewise-linear `f, g`,
//! `(f ⊲ g)(t) = g(t) + min_{s≤t} (f - g)(s)`, and the running minimum of a
//! piecewise-linear function is again piecewise linear with extra breakpoints
//! only where a decreasing piece crosses the level reached so far.

use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Letter, MultiPath, Word};
use crate::symfunc::Rational;
use crate::tableaux::{rs_inverse, Insertion, Partition, StandardTableau, Tableau};

/// A continuous piecewise-linear function on `[0, horizon]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecewiseLinear {
    times: Vec<Rational>,
    values: Vec<Rational>,
}

impl PiecewiseLinear {
    /// Breakpoints must start at 0 and increase strictly; the value at 0 must be 0.
    pub fn new(times: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if times.is_empty() || times.len() != values.len() {
            return Err(Error::InvalidPiecewisePath("one value per breakpoint, at least one breakpoint"));
        }
        if !times[0].is_zero() {
            return Err(Error::InvalidPiecewisePath("first breakpoint must be 0"));
        }
        if !values[0].is_zero() {
            return Err(Error::InvalidPiecewisePath("path must start at 0"));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPiecewisePath("breakpoints must increase strictly"));
        }
        Ok(PiecewiseLinear { times, values })
    }

    /// The zero function on `[0, horizon]`.
    pub fn zero(horizon: Rational) -> Self {
        if horizon.is_zero() {
            return PiecewiseLinear { times: alloc::vec![Rational::zero()], values: alloc::vec![Rational::zero()] };
        }
        PiecewiseLinear { times: alloc::vec![Rational::zero(), horizon], values: alloc::vec![Rational::zero(); 2] }
    }

    pub fn times(&self) -> &[Rational] {
        &self.times
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn horizon(&self) -> &Rational {
        self.times.last().expect("non-empty")
    }

    /// Value at `t`, for `0 ≤ t ≤ horizon`.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if *t < Rational::zero() || t > self.horizon() {
            return Err(Error::InvalidPiecewisePath("time outside the horizon"));
        }
        let i = self.times.partition_point(|s| s <= t);
        if i == self.times.len() {
            return Ok(self.values[i - 1].clone());
        }
        let (a, b) = (&self.times[i - 1], &self.times[i]);
        let (fa, fb) = (&self.values[i - 1], &self.values[i]);
        Ok(fa + (fb - fa) * (t - a) / (b - a))
    }

    fn same_horizon(&self, other: &Self) -> Result<()> {
        if self.horizon() != other.horizon() {
            return Err(Error::InvalidPiecewisePath("horizons differ"));
        }
        Ok(())
    }

    /// Pointwise `op(f, g)` for an affine `op`, on the union of breakpoints.
    fn combine(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        self.same_horizon(other)?;
        let mut times: Vec<Rational> = self.times.iter().chain(&other.times).cloned().collect();
        times.sort();
        times.dedup();
        let values = times
            .iter()
            .map(|t| Ok(op(&self.eval(t)?, &other.eval(t)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PiecewiseLinear { times, values }.simplified())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        PiecewiseLinear { times: self.times.clone(), values: self.values.iter().map(|v| -v).collect() }
    }

    /// Drops breakpoints where the slope does not change.
    pub fn simplified(mut self) -> Self {
        let mut keep_t = Vec::with_capacity(self.times.len());
        let mut keep_v: Vec<Rational> = Vec::with_capacity(self.times.len());
        for i in 0..self.times.len() {
            if keep_t.len() >= 2 {
                let n = keep_t.len();
                let s1 = (&keep_v[n - 1] - &keep_v[n - 2]) / (&keep_t[n - 1] - &keep_t[n - 2]);
                let s2 = (&self.values[i] - &keep_v[n - 1]) / (&self.times[i] - &keep_t[n - 1]);
                if s1 == s2 {
                    keep_t.pop();
                    keep_v.pop();
                }
            }
            keep_t.push(core::mem::take(&mut self.times[i]));
            keep_v.push(core::mem::take(&mut self.values[i]));
        }
        PiecewiseLinear { times: keep_t, values: keep_v }
    }

    /// `t ↦ min_{s ≤ t} f(s)`.
    pub fn running_min(&self) -> Self {
        let mut times = alloc::vec![self.times[0].clone()];
        let mut values = alloc::vec![self.values[0].clone()];
        let mut m = self.values[0].clone();
        for i in 1..self.times.len() {
            let (a, b) = (&self.times[i - 1], &self.times[i]);
            let (ha, hb) = (&self.values[i - 1], &self.values[i]);
            if *hb >= m {
                times.push(b.clone());
                values.push(m.clone());
                continue;
            }
            if *ha > m {
                let c = a + (&m - ha) * (b - a) / (hb - ha);
                times.push(c);
                values.push(m.clone());
            }
            times.push(b.clone());
            values.push(hb.clone());
            m = hb.clone();
        }
        PiecewiseLinear { times, values }.simplified()
    }

    /// `t ↦ max_{s ≤ t} f(s)`.
    pub fn running_max(&self) -> Self {
        self.neg().running_min().neg()
    }

    /// Maximum over `[0, horizon]`.
    pub fn sup(&self) -> Rational {
        self.values.iter().max().expect("non-empty").clone()
    }

    /// Restriction of time to `[0, 1]` by `t ↦ t / horizon`.
    pub fn rescaled(&self) -> Self {
        let h = self.horizon().clone();
        if h.is_zero() {
            return self.clone();
        }
        PiecewiseLinear { times: self.times.iter().map(|t| t / &h).collect(), values: self.values.clone() }
    }
}

/// `(f ⊲ g)(t) = inf_{s ≤ t} [f(s) + g(t) - g(s)]`.
pub fn cinf(f: &PiecewiseLinear, g: &PiecewiseLinear) -> Result<PiecewiseLinear> {
    g.add(&f.sub(g)?.running_min())
}

/// `(f ⊳ g)(t) = sup_{s ≤ t} [f(s) + g(t) - g(s)]`.
pub fn csup(f: &PiecewiseLinear, g: &PiecewiseLinear) -> Result<PiecewiseLinear> {
    g.add(&f.sub(g)?.running_max())
}

/// A `k`-dimensional piecewise-linear path with coordinates sharing a horizon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecewiseLinearPath {
    coords: Vec<PiecewiseLinear>,
}

impl PiecewiseLinearPath {
    pub fn new(coords: Vec<PiecewiseLinear>) -> Result<Self> {
        let first = coords.first().ok_or(Error::DimensionTooSmall { required: 1, found: 0 })?;
        for c in &coords[1..] {
            first.same_horizon(c)?;
        }
        Ok(PiecewiseLinearPath { coords })
    }

    /// From shared breakpoints and one value vector per breakpoint.
    pub fn from_points(breakpoints: Vec<Rational>, points: Vec<Vec<Rational>>) -> Result<Self> {
        let k = points.first().map(Vec::len).ok_or(Error::InvalidPiecewisePath("no breakpoints"))?;
        if k == 0 {
            return Err(Error::DimensionTooSmall { required: 1, found: 0 });
        }
        if points.iter().any(|p| p.len() != k) {
            return Err(Error::InvalidPiecewisePath("every breakpoint needs k values"));
        }
        let coords = (0..k)
            .map(|i| PiecewiseLinear::new(breakpoints.clone(), points.iter().map(|p| p[i].clone()).collect()))
            .collect::<Result<Vec<_>>>()?;
        PiecewiseLinearPath::new(coords)
    }

    /// Linear interpolation of an integer path at times `0, 1, ..., N`.
    pub fn interpolate(x: &MultiPath) -> Self {
        let times: Vec<Rational> = (0..=x.horizon()).map(|n| Rational::from_integer((n as i64).into())).collect();
        let coords = x
            .components()
            .iter()
            .map(|c| {
                let values = c.values().iter().map(|&v| Rational::from_integer(i64::from(v).into())).collect();
                PiecewiseLinear { times: times.clone(), values }.simplified()
            })
            .collect();
        PiecewiseLinearPath { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[PiecewiseLinear] {
        &self.coords
    }

    pub fn horizon(&self) -> &Rational {
        self.coords[0].horizon()
    }

    pub fn eval(&self, t: &Rational) -> Result<Vec<Rational>> {
        self.coords.iter().map(|c| c.eval(t)).collect()
    }

    /// Union of the breakpoints of all coordinates.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut all: Vec<Rational> = self.coords.iter().flat_map(|c| c.times.iter().cloned()).collect();
        all.sort();
        all.dedup();
        all
    }

    /// Values at the shared breakpoints, one vector per breakpoint.
    pub fn points(&self) -> Result<(Vec<Rational>, Vec<Vec<Rational>>)> {
        let times = self.breakpoints();
        let points = times.iter().map(|t| self.eval(t)).collect::<Result<Vec<_>>>()?;
        Ok((times, points))
    }

    pub fn rescaled(&self) -> Self {
        PiecewiseLinearPath { coords: self.coords.iter().map(PiecewiseLinear::rescaled).collect() }
    }

    /// `|f(t)|` as a function.
    pub fn total(&self) -> Result<PiecewiseLinear> {
        let mut acc = self.coords[0].clone();
        for c in &self.coords[1..] {
            acc = acc.add(c)?;
        }
        Ok(acc)
    }
}

fn fold(paths: &[PiecewiseLinear], op: fn(&PiecewiseLinear, &PiecewiseLinear) -> Result<PiecewiseLinear>) -> Result<PiecewiseLinear> {
    let mut acc = paths[0].clone();
    for p in &paths[1..] {
        acc = op(&acc, p)?;
    }
    Ok(acc)
}

/// `Γ^(k)(f) = (f_1 ⊲ ... ⊲ f_k, Γ^(k-1)(f_2 ⊳ f_1, f_3 ⊳ (f_1 ⊲ f_2), ...))`,
/// with `Γ^(1)` the identity.
pub fn gamma(f: &PiecewiseLinearPath) -> Result<PiecewiseLinearPath> {
    Ok(PiecewiseLinearPath { coords: gamma_coords(&f.coords)? })
}

fn gamma_coords(f: &[PiecewiseLinear]) -> Result<Vec<PiecewiseLinear>> {
    if f.len() == 1 {
        return Ok(f.to_vec());
    }
    let mut d = f[0].clone();
    let mut t = Vec::with_capacity(f.len() - 1);
    for fi in &f[1..] {
        t.push(csup(fi, &d)?);
        d = cinf(&d, fi)?;
    }
    let mut out = alloc::vec![d];
    out.extend(gamma_coords(&t)?);
    Ok(out)
}

/// `f_k ⊳ f_{k-1} ⊳ ... ⊳ f_1`.
pub fn csup_fold(f: &PiecewiseLinearPath) -> Result<PiecewiseLinear> {
    let rev: Vec<_> = f.coords.iter().rev().cloned().collect();
    fold(&rev, csup)
}

/// `f_1 ⊲ ... ⊲ f_k`.
pub fn cinf_fold(f: &PiecewiseLinearPath) -> Result<PiecewiseLinear> {
    fold(&f.coords, cinf)
}

/// Interlacing triangular array; `rows[i]` has `i + 1` entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GelfandCetlinPoint {
    rows: Vec<Vec<Rational>>,
}

impl GelfandCetlinPoint {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.iter().enumerate().any(|(i, r)| r.len() != i + 1) {
            return Err(Error::InvalidArgument("row i of a Gelfand-Cetlin pattern has i entries"));
        }
        Ok(GelfandCetlinPoint { rows })
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// `x^(i)_j ≥ x^(i-1)_j ≥ x^(i)_{j+1}` throughout.
    pub fn interlaces(&self) -> bool {
        self.rows.windows(2).all(|w| (0..w[0].len()).all(|j| w[1][j] >= w[0][j] && w[0][j] >= w[1][j + 1]))
    }
}

fn require_unit_horizon(f: &PiecewiseLinearPath) -> Result<()> {
    if !f.horizon().is_one() {
        return Err(Error::InvalidPiecewisePath("horizon must be 1; rescale first"));
    }
    Ok(())
}

/// `φ(f)`: row `i` is `(Γ^(i)_i, ..., Γ^(i)_1)(f_1, ..., f_i)` at time 1.
pub fn gc_phi(f: &PiecewiseLinearPath) -> Result<GelfandCetlinPoint> {
    require_unit_horizon(f)?;
    let one = Rational::one();
    let mut rows = Vec::with_capacity(f.dim());
    for i in 1..=f.dim() {
        let g = gamma_coords(&f.coords[..i])?;
        let mut row = g.iter().map(|c| c.eval(&one)).collect::<Result<Vec<_>>>()?;
        row.reverse();
        rows.push(row);
    }
    let point = GelfandCetlinPoint::new(rows)?;
    assert!(point.interlaces(), "Γ produced a non-interlacing pattern");
    Ok(point)
}

/// `ρ(f) = Γ^(k)(f)` on `[0, 1]`.
pub fn gc_rho(f: &PiecewiseLinearPath) -> Result<PiecewiseLinearPath> {
    require_unit_horizon(f)?;
    gamma(f)
}

/// Inverts the discrete embedding: reads the tableau off `φ(f)` and the
/// recording chain off `ρ(f)` at times `m / n`, then undoes column insertion.
pub fn word_from_phi_rho(f: &PiecewiseLinearPath, n: usize) -> Result<Word> {
    let k = f.dim();
    let to_u32 = |q: &Rational| -> Result<u32> {
        if !q.is_integer() || q.is_negative() {
            return Err(Error::InvalidPiecewisePath("not the embedding of an integer path"));
        }
        q.to_integer().to_u32().ok_or(Error::Overflow)
    };
    let phi = gc_phi(f)?;
    let mut rows: Vec<Vec<Letter>> = alloc::vec![Vec::new(); k];
    let mut prev = alloc::vec![0u32; k];
    for (i, row) in phi.rows().iter().enumerate() {
        for (r, v) in row.iter().enumerate() {
            let v = to_u32(v)?;
            let extra = v.checked_sub(prev[r]).ok_or(Error::InvalidPiecewisePath("not the embedding of an integer path"))?;
            rows[r].extend(core::iter::repeat_n((i + 1) as Letter, extra as usize));
            prev[r] = v;
        }
    }
    let p = Tableau::new(rows, k)?;
    let rho = gc_rho(f)?;
    let nn = Rational::from_integer((n as i64).into());
    let chain = (1..=n)
        .map(|m| {
            let at = rho.eval(&(Rational::from_integer((m as i64).into()) / &nn))?;
            let parts = at.iter().rev().map(to_u32).collect::<Result<Vec<_>>>()?;
            Partition::new(parts)
        })
        .collect::<Result<Vec<_>>>()?;
    let q = StandardTableau::from_shapes(&chain)?;
    rs_inverse(&p, &q, Insertion::Column)
}

/// Both sides of `sup_s[sup_{r≤s} u(r) + v(s)] ∨ sup_s[u(s) + sup_{r≤s} v(r)] = sup u + sup v`.
pub fn sup_integration_by_parts(u: &PiecewiseLinear, v: &PiecewiseLinear) -> Result<(Rational, Rational)> {
    let left = u.running_max().add(v)?.sup();
    let right = u.add(&v.running_max())?.sup();
    Ok((left.max(right), u.sup() + v.sup()))
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(lo * den..=hi * den).into(), den.into())
}

/// Random path on `[0, 1]` with `pieces` pieces and small rational data.
pub fn random_path<R: Rng + ?Sized>(k: usize, pieces: usize, rng: &mut R) -> PiecewiseLinearPath {
    let den = 12;
    let mut cuts: Vec<i64> = (1..den * pieces as i64).collect();
    // choose pieces-1 distinct interior breakpoints
    for i in 0..pieces.saturating_sub(1) {
        let j = rng.gen_range(i..cuts.len());
        cuts.swap(i, j);
    }
    let mut inner: Vec<i64> = cuts[..pieces.saturating_sub(1)].to_vec();
    inner.sort_unstable();
    let scale = den * pieces as i64;
    let mut times = alloc::vec![Rational::zero()];
    times.extend(inner.iter().map(|&c| Rational::new(c.into(), scale.into())));
    times.push(Rational::one());
    let coords = (0..k)
        .map(|_| {
            let mut values = alloc::vec![Rational::zero()];
            let mut acc = Rational::zero();
            for _ in 1..times.len() {
                acc += small_rational(rng, -3, 3, 4);
                values.push(acc.clone());
            }
            PiecewiseLinear { times: times.clone(), values }
        })
        .collect();
    PiecewiseLinearPath { coords }
}
