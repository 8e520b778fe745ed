//! Integer lattice paths and the two path convolutions.
//!
//! A [`Path`] is a non-decreasing integer path started at zero whose steps are
//! 0 or 1. Values are stored cumulatively so that increments `x(l) - x(n)` are
//! O(1). The binary operations
//!
//! ```text
//! (x ⊲ y)(n) = min_{0≤m≤n} [x(m) + y(n) - y(m)]
//! (x ⊳ y)(n) = max_{0≤m≤n} [x(m) + y(n) - y(m)]
//! ```
//!
//! are evaluated with a running extremum of `x - y`, which makes them linear
//! in the horizon. Neither is associative; folds are left to right.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Letter of a word over `{1, ..., k}`.
pub type Letter = u8;

/// A path in Λ_1: `values[0] == 0` and each step is 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    values: Vec<u32>,
}

impl Path {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        match values.first() {
            None => return Err(Error::InvalidArgument("path needs at least the value at time 0")),
            Some(&v) if v != 0 => return Err(Error::NonZeroStart),
            _ => {}
        }
        for n in 1..values.len() {
            let step = values[n].wrapping_sub(values[n - 1]);
            if step > 1 {
                return Err(Error::InvalidStep { time: n });
            }
        }
        Ok(Path { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Path::new(values.clone()).is_ok());
        Path { values }
    }

    /// The zero path on `0..=horizon`.
    pub fn zero(horizon: usize) -> Self {
        Path { values: alloc::vec![0; horizon + 1] }
    }

    /// Build from a step sequence of 0/1 values.
    pub fn from_steps(steps: &[bool]) -> Self {
        let mut values = Vec::with_capacity(steps.len() + 1);
        values.push(0u32);
        let mut acc = 0u32;
        for &s in steps {
            acc += u32::from(s);
            values.push(acc);
        }
        Path { values }
    }

    /// Last time index.
    pub fn horizon(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, n: usize) -> u32 {
        self.values[n]
    }

    pub fn last(&self) -> u32 {
        *self.values.last().expect("paths are non-empty")
    }

    /// Whether the path steps up at time `n >= 1`.
    pub fn steps_at(&self, n: usize) -> bool {
        self.values[n] != self.values[n - 1]
    }

    /// Increment `x(n, l) = x(l) - x(n)`.
    pub fn increment(&self, n: usize, l: usize) -> Result<u32> {
        if n > l || l > self.horizon() {
            return Err(Error::InvalidWindow { from: n, to: l, horizon: self.horizon() });
        }
        Ok(self.values[l] - self.values[n])
    }

    /// Restriction to `0..=horizon`.
    pub fn truncate(&self, horizon: usize) -> Path {
        Path { values: self.values[..=horizon.min(self.horizon())].to_vec() }
    }

    /// Pointwise sum, which must again lie in Λ_1.
    pub fn checked_add(&self, other: &Path) -> Result<Path> {
        same_horizon(self, other)?;
        Path::new(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect())
    }

    /// Pointwise difference, which must again lie in Λ_1.
    pub fn checked_sub(&self, other: &Path) -> Result<Path> {
        same_horizon(self, other)?;
        let mut out = Vec::with_capacity(self.values.len());
        for (a, b) in self.values.iter().zip(&other.values) {
            out.push(a.checked_sub(*b).ok_or(Error::InvalidStep { time: out.len() })?);
        }
        Path::new(out)
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.values)
    }
}

fn same_horizon(x: &Path, y: &Path) -> Result<()> {
    if x.horizon() != y.horizon() {
        return Err(Error::HorizonMismatch { left: x.horizon(), right: y.horizon() });
    }
    Ok(())
}

/// `x ⊲ y`: departures from a queue with arrivals `x` and services `y`.
pub fn inf_conv(x: &Path, y: &Path) -> Result<Path> {
    same_horizon(x, y)?;
    let mut out = Vec::with_capacity(x.values.len());
    let mut running = i64::MAX;
    for (&a, &b) in x.values.iter().zip(&y.values) {
        running = running.min(i64::from(a) - i64::from(b));
        out.push((i64::from(b) + running) as u32);
    }
    Ok(Path::from_values_unchecked(out))
}

/// `x ⊳ y`.
pub fn sup_conv(x: &Path, y: &Path) -> Result<Path> {
    same_horizon(x, y)?;
    let mut out = Vec::with_capacity(x.values.len());
    let mut running = i64::MIN;
    for (&a, &b) in x.values.iter().zip(&y.values) {
        running = running.max(i64::from(a) - i64::from(b));
        out.push((i64::from(b) + running) as u32);
    }
    Ok(Path::from_values_unchecked(out))
}

/// Queue contents `q(n) = max_{m≤n} [x(m,n) - y(m,n)]` of the single queue with
/// arrivals `x` and services `y`. Equal to `x - (x ⊲ y)`.
pub fn queue_length(x: &Path, y: &Path) -> Result<Vec<u32>> {
    same_horizon(x, y)?;
    let mut q = Vec::with_capacity(x.values.len());
    q.push(0u32);
    for n in 1..x.values.len() {
        // Lindley: q(n) = max(q(n-1) + ε(n), 0)
        let eps = i64::from(x.values[n]) - i64::from(x.values[n - 1]) - i64::from(y.values[n])
            + i64::from(y.values[n - 1]);
        q.push((i64::from(q[n - 1]) + eps).max(0) as u32);
    }
    Ok(q)
}

/// Left fold `x_1 ⊲ x_2 ⊲ ... ⊲ x_m`.
pub fn inf_fold<'a, I>(paths: I) -> Result<Path>
where
    I: IntoIterator<Item = &'a Path>,
{
    fold(paths, inf_conv)
}

/// Left fold `x_1 ⊳ x_2 ⊳ ... ⊳ x_m`.
pub fn sup_fold_paths<'a, I>(paths: I) -> Result<Path>
where
    I: IntoIterator<Item = &'a Path>,
{
    fold(paths, sup_conv)
}

fn fold<'a, I>(paths: I, op: fn(&Path, &Path) -> Result<Path>) -> Result<Path>
where
    I: IntoIterator<Item = &'a Path>,
{
    let mut it = paths.into_iter();
    let first = it.next().ok_or(Error::InvalidArgument("empty fold"))?.clone();
    it.try_fold(first, |acc, p| op(&acc, p))
}

/// Word over the alphabet `{1, ..., k}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<Letter>,
    k: usize,
}

impl Word {
    pub fn new(letters: Vec<Letter>, k: usize) -> Result<Self> {
        if k == 0 || k > usize::from(Letter::MAX) {
            return Err(Error::InvalidArgument("alphabet size must be in 1..=255"));
        }
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || usize::from(a) > k) {
            return Err(Error::InvalidLetter { letter: u32::from(bad), k });
        }
        Ok(Word { letters, k })
    }

    /// Parse a string of decimal digits such as `"3112322"`.
    pub fn from_digits(digits: &str, k: usize) -> Result<Self> {
        let mut letters = Vec::with_capacity(digits.len());
        for c in digits.chars() {
            let d = c.to_digit(10).ok_or(Error::InvalidArgument("word must consist of digits"))?;
            letters.push(d as Letter);
        }
        Word::new(letters, k)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, k: self.k }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word { letters: self.letters[..n].to_vec(), k: self.k }
    }

    /// Number of occurrences of each letter.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = alloc::vec![0u32; self.k];
        for &a in &self.letters {
            w[usize::from(a) - 1] += 1;
        }
        w
    }
}

/// A `k`-dimensional path; each coordinate is a [`Path`] and all share a horizon.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPath {
    components: Vec<Path>,
}

impl MultiPath {
    pub fn new(components: Vec<Path>) -> Result<Self> {
        let first = components.first().ok_or(Error::DimensionTooSmall { required: 1, found: 0 })?;
        for c in &components[1..] {
            same_horizon(first, c)?;
        }
        Ok(MultiPath { components })
    }

    /// Λ_k path from a sequence over `{0, 1, ..., k}` where 0 is an idle step.
    pub fn from_moves(moves: &[u8], k: usize) -> Result<Self> {
        let mut comps = alloc::vec![alloc::vec![0u32; moves.len() + 1]; k];
        for (t, &m) in moves.iter().enumerate() {
            if usize::from(m) > k {
                return Err(Error::InvalidLetter { letter: u32::from(m), k });
            }
            for (i, c) in comps.iter_mut().enumerate() {
                c[t + 1] = c[t] + u32::from(usize::from(m) == i + 1);
            }
        }
        Ok(MultiPath { components: comps.into_iter().map(Path::from_values_unchecked).collect() })
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn horizon(&self) -> usize {
        self.components[0].horizon()
    }

    pub fn components(&self) -> &[Path] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Path {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Path> {
        self.components
    }

    /// `x(n)` as a vector.
    pub fn at(&self, n: usize) -> Vec<u32> {
        self.components.iter().map(|c| c.value(n)).collect()
    }

    /// `|x(n)|`.
    pub fn total(&self, n: usize) -> u32 {
        self.components.iter().map(|c| c.value(n)).sum()
    }

    /// Exactly one coordinate moves at every step.
    pub fn is_pi(&self) -> bool {
        (1..=self.horizon()).all(|n| self.movers(n) == 1)
    }

    /// At most one coordinate moves at every step.
    pub fn is_lambda(&self) -> bool {
        (1..=self.horizon()).all(|n| self.movers(n) <= 1)
    }

    fn movers(&self, n: usize) -> usize {
        self.components.iter().filter(|c| c.steps_at(n)).count()
    }

    /// Values lie in the Weyl chamber `x_1 ≤ ... ≤ x_k` at every time.
    pub fn in_chamber(&self) -> bool {
        (0..=self.horizon()).all(|n| self.components.windows(2).all(|w| w[0].value(n) <= w[1].value(n)))
    }

    /// The letter `i` with `x(n) - x(n-1) = e_i`, if exactly one coordinate moved.
    pub fn letter_at(&self, n: usize) -> Option<Letter> {
        let mut found = None;
        for (i, c) in self.components.iter().enumerate() {
            if c.steps_at(n) {
                if found.is_some() {
                    return None;
                }
                found = Some((i + 1) as Letter);
            }
        }
        found
    }

    /// The word read off a Π_k path.
    pub fn to_word(&self) -> Result<Word> {
        let letters = (1..=self.horizon())
            .map(|n| self.letter_at(n).ok_or(Error::InvalidStep { time: n }))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, self.dim())
    }

    pub fn truncate(&self, horizon: usize) -> MultiPath {
        MultiPath { components: self.components.iter().map(|c| c.truncate(horizon)).collect() }
    }
}

/// The walk `X_i(n) = #{m ≤ n : a_m = i}` of a word.
pub fn word_to_walk(w: &Word) -> MultiPath {
    let n = w.len();
    let mut comps = alloc::vec![alloc::vec![0u32; n + 1]; w.alphabet()];
    for (t, &a) in w.letters().iter().enumerate() {
        for (i, c) in comps.iter_mut().enumerate() {
            c[t + 1] = c[t] + u32::from(usize::from(a) == i + 1);
        }
    }
    MultiPath { components: comps.into_iter().map(Path::from_values_unchecked).collect() }
}

/// `x(n, l)` for a one-dimensional path.
pub fn increments(x: &Path, n: usize, l: usize) -> Result<u32> {
    x.increment(n, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn walk(digits: &str, k: usize) -> MultiPath {
        word_to_walk(&Word::from_digits(digits, k).unwrap())
    }

    // Direct O(N^2) evaluation of the defining min/max.
    fn brute(x: &Path, y: &Path, take_min: bool) -> Vec<i64> {
        (0..=x.horizon())
            .map(|n| {
                let it = (0..=n).map(|m| i64::from(x.value(m)) + i64::from(y.value(n)) - i64::from(y.value(m)));
                if take_min { it.min().unwrap() } else { it.max().unwrap() }
            })
            .collect()
    }

    #[test]
    fn walk_of_worked_example() {
        let x = walk("3112322", 3);
        assert_eq!(x.at(7), vec![2, 3, 2]);
        assert!(x.is_pi());
        assert_eq!(walk("", 3).horizon(), 0);
        assert_eq!(walk("111", 3).at(3), vec![3, 0, 0]);
    }

    #[test]
    fn bad_letter_rejected() {
        assert_eq!(Word::from_digits("14", 3), Err(Error::InvalidLetter { letter: 4, k: 3 }));
        assert!(Word::from_digits("0", 3).is_err());
    }

    #[test]
    fn path_validation() {
        assert_eq!(Path::new(vec![1, 1]), Err(Error::NonZeroStart));
        assert_eq!(Path::new(vec![0, 2]), Err(Error::InvalidStep { time: 1 }));
        assert_eq!(Path::new(vec![0, 1, 0]), Err(Error::InvalidStep { time: 2 }));
    }

    #[test]
    fn inf_conv_examples() {
        let x = walk("3112322", 3);
        assert_eq!(inf_conv(x.component(0), x.component(1)).unwrap().value(7), 2);
        let x = walk("1122", 2);
        assert_eq!(inf_conv(x.component(0), x.component(1)).unwrap().values(), &[0, 0, 0, 1, 2]);
        let p = x.component(0);
        assert_eq!(&inf_conv(p, p).unwrap(), p);
    }

    #[test]
    fn sup_conv_examples() {
        let x = walk("3112322", 3);
        assert_eq!(sup_conv(x.component(1), x.component(0)).unwrap().value(7), 3);
        let y = x.component(2);
        assert_eq!(&sup_conv(y, y).unwrap(), y);
        let zero = Path::zero(7);
        assert_eq!(sup_conv(&zero, y).unwrap(), *y);
    }

    #[test]
    fn queue_examples() {
        let x = walk("3112322", 3);
        let d1 = x.component(0).clone();
        let d2 = inf_conv(&d1, x.component(1)).unwrap();
        assert_eq!(queue_length(&d1, x.component(1)).unwrap()[7], 0);
        assert_eq!(queue_length(&d2, x.component(2)).unwrap()[7], 1);
        let x = walk("1122", 2);
        assert_eq!(queue_length(x.component(0), x.component(1)).unwrap(), vec![0, 1, 2, 1, 0]);
        assert!(queue_length(x.component(0), x.component(0)).unwrap().iter().all(|&q| q == 0));
    }

    #[test]
    fn increments_examples() {
        let x = walk("3112322", 3);
        assert_eq!(increments(x.component(1), 0, 7), Ok(3));
        assert_eq!(increments(x.component(1), 4, 4), Ok(0));
        assert_eq!(increments(x.component(2), 2, 5), Ok(1));
        assert!(increments(x.component(2), 5, 2).is_err());
    }

    #[test]
    fn horizon_mismatch() {
        let a = Path::zero(3);
        let b = Path::zero(4);
        assert_eq!(inf_conv(&a, &b), Err(Error::HorizonMismatch { left: 3, right: 4 }));
        assert!(sup_conv(&a, &b).is_err());
        assert!(queue_length(&a, &b).is_err());
    }

    #[test]
    fn linear_time_matches_definition() {
        for code in 0..(3u32.pow(7)) {
            let mut c = code;
            let mut moves = vec![];
            for _ in 0..7 {
                moves.push((c % 3) as u8);
                c /= 3;
            }
            let x = MultiPath::from_moves(&moves, 2).unwrap();
            let (a, b) = (x.component(0), x.component(1));
            let inf: Vec<i64> = inf_conv(a, b).unwrap().values().iter().map(|&v| i64::from(v)).collect();
            let sup: Vec<i64> = sup_conv(a, b).unwrap().values().iter().map(|&v| i64::from(v)).collect();
            assert_eq!(inf, brute(a, b, true));
            assert_eq!(sup, brute(a, b, false));
            let q = queue_length(a, b).unwrap();
            for n in 0..=7 {
                assert_eq!(i64::from(q[n]), i64::from(a.value(n)) - inf[n]);
            }
        }
    }
}
