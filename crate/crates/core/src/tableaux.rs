//! Partitions, Young tableaux and Robinson–Schensted insertion.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Letter, Word};
use crate::transform::TriangularArray;

/// An integer partition. Trailing zeros are dropped, so equality ignores padding.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Non-zero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `k` (longer partitions are not truncated).
    pub fn padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        v
    }

    /// `λ*`: the padded parts in reverse order, a point of the Weyl chamber.
    pub fn star(&self, k: usize) -> Vec<u32> {
        let mut v = self.padded(k);
        v.reverse();
        v
    }

    /// Inverse of [`Partition::star`]; fails off the chamber.
    pub fn from_chamber(x: &[u32]) -> Result<Self> {
        let mut v = x.to_vec();
        v.reverse();
        Partition::new(v)
    }

    /// `μ ⊆ λ` cell-wise.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Shapes obtained by adding one box, with the row index of the new box,
    /// restricted to at most `k` rows.
    pub fn add_box(&self, k: usize) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for i in 0..k.min(self.len() + 1) {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut p = self.padded(i + 1);
                p[i] += 1;
                out.push((i, Partition { parts: p }));
            }
        }
        out
    }

    /// Hook lengths row by row.
    pub fn hooks(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j) + (conj.part(j as usize) - i as u32) - 1).collect())
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition { parts: (0..first).map(|j| self.parts.iter().filter(|&&r| r > j).count() as u32).collect() }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Partitions of `n` with at most `k` parts, in reverse lexicographic order.
pub fn partitions(n: u32, k: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for v in (1..=max.min(rest)).rev() {
            cur.push(v);
            go(rest - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, k, &mut Vec::new(), &mut out);
    out
}

/// Semistandard tableau with entries in `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
    k: usize,
}

impl Tableau {
    pub fn empty(k: usize) -> Self {
        Tableau { rows: Vec::new(), k }
    }

    pub fn new(rows: Vec<Vec<Letter>>, k: usize) -> Result<Self> {
        let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must be non-increasing"));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.iter().any(|&a| a == 0 || usize::from(a) > k) {
                return Err(Error::InvalidTableau("entry outside the alphabet"));
            }
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau("rows must be weakly increasing"));
            }
            if i > 0 && r.iter().zip(&rows[i - 1]).any(|(b, a)| a >= b) {
                return Err(Error::InvalidTableau("columns must be strictly increasing"));
            }
        }
        Ok(Tableau { rows, k })
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn alphabet(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len() as u32).collect() }
    }

    /// Multiplicities of `1, ..., k`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = alloc::vec![0u32; self.k];
        for &a in self.rows.iter().flatten() {
            w[usize::from(a) - 1] += 1;
        }
        w
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for a in r {
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

fn check_letter(a: Letter, k: usize) -> Result<()> {
    if a == 0 || usize::from(a) > k {
        return Err(Error::InvalidLetter { letter: u32::from(a), k });
    }
    Ok(())
}

/// Column insertion; returns the tableau and the row of the new box.
pub fn column_insert(t: &Tableau, a: Letter) -> Result<(Tableau, usize)> {
    check_letter(a, t.k)?;
    let mut rows = t.rows.clone();
    let mut carry = a;
    let mut j = 0;
    loop {
        let h = rows.iter().take_while(|r| r.len() > j).count();
        match (0..h).find(|&i| rows[i][j] >= carry) {
            Some(i) => {
                core::mem::swap(&mut rows[i][j], &mut carry);
                j += 1;
            }
            None => {
                if h == rows.len() {
                    rows.push(Vec::new());
                }
                rows[h].push(carry);
                return Ok((Tableau { rows, k: t.k }, h));
            }
        }
    }
}

/// Row insertion; returns the tableau and the row of the new box.
pub fn row_insert(t: &Tableau, a: Letter) -> Result<(Tableau, usize)> {
    check_letter(a, t.k)?;
    let mut rows = t.rows.clone();
    let mut carry = a;
    for i in 0.. {
        if i == rows.len() {
            rows.push(alloc::vec![carry]);
            return Ok((Tableau { rows, k: t.k }, i));
        }
        match rows[i].iter().position(|&b| b > carry) {
            Some(j) => core::mem::swap(&mut rows[i][j], &mut carry),
            None => {
                rows[i].push(carry);
                return Ok((Tableau { rows, k: t.k }, i));
            }
        }
    }
    unreachable!()
}

/// Insertion direction for [`rs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Insertion {
    Column,
    Row,
}

/// Standard tableau recording the order in which boxes were added.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = alloc::vec![false; n];
        for &v in rows.iter().flatten() {
            if v == 0 || v as usize > n || core::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidTableau("entries must be 1..n, each once"));
            }
        }
        let t = StandardTableau { rows };
        if t.rows.windows(2).any(|w| w[0].len() < w[1].len())
            || t.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1]))
            || t.rows.windows(2).any(|w| w[1].iter().zip(&w[0]).any(|(b, a)| a >= b))
        {
            return Err(Error::InvalidTableau("rows and columns must increase strictly"));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len() as u32).collect() }
    }

    /// Growth chain `l(1) ↗ ... ↗ l(n)`.
    pub fn shapes(&self) -> Vec<Partition> {
        let n = self.size();
        let mut row_of = alloc::vec![0usize; n];
        for (i, r) in self.rows.iter().enumerate() {
            for &v in r {
                row_of[v as usize - 1] = i;
            }
        }
        let mut cur = Vec::<u32>::new();
        row_of
            .into_iter()
            .map(|i| {
                if i == cur.len() {
                    cur.push(0);
                }
                cur[i] += 1;
                Partition { parts: cur.clone() }
            })
            .collect()
    }

    /// Inverse of [`StandardTableau::shapes`].
    pub fn from_shapes(chain: &[Partition]) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut prev = Partition::empty();
        for (m, s) in chain.iter().enumerate() {
            let row = grown_row(&prev, s).ok_or(Error::InvalidChain("consecutive shapes must differ by one box"))?;
            if row == rows.len() {
                rows.push(Vec::new());
            }
            rows[row].push(m as u32 + 1);
            prev = s.clone();
        }
        Ok(StandardTableau { rows })
    }
}

/// Row `i` such that `to = from + e_i`, if any.
pub fn grown_row(from: &Partition, to: &Partition) -> Option<usize> {
    if to.size() != from.size() + 1 {
        return None;
    }
    let len = to.len();
    let diff: Vec<usize> = (0..len).filter(|&i| to.part(i) != from.part(i)).collect();
    match diff.as_slice() {
        [i] if to.part(*i) == from.part(*i) + 1 => Some(*i),
        _ => None,
    }
}

/// Recording chain of a standard tableau.
pub fn recording_shapes(q: &StandardTableau) -> Vec<Partition> {
    q.shapes()
}

/// Robinson–Schensted: insertion tableau `P` and recording tableau `Q`.
pub fn rs(w: &Word, mode: Insertion) -> (Tableau, StandardTableau) {
    let mut p = Tableau::empty(w.alphabet());
    let mut q = StandardTableau::default();
    for (m, &a) in w.letters().iter().enumerate() {
        let (next, row) = match mode {
            Insertion::Column => column_insert(&p, a),
            Insertion::Row => row_insert(&p, a),
        }
        .expect("letters of a word are in range");
        p = next;
        if row == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[row].push(m as u32 + 1);
    }
    (p, q)
}

/// Inverse of [`rs`]: recovers the word from `(P, Q)`.
pub fn rs_inverse(p: &Tableau, q: &StandardTableau, mode: Insertion) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau("P and Q must have the same shape"));
    }
    let n = q.size();
    let mut pos = alloc::vec![0usize; n];
    for (i, r) in q.rows.iter().enumerate() {
        for &v in r {
            pos[v as usize - 1] = i;
        }
    }
    let mut rows = p.rows.clone();
    let mut letters = alloc::vec![0 as Letter; n];
    for m in (0..n).rev() {
        let r = pos[m];
        let mut carry = rows[r].pop().expect("shapes agree");
        match mode {
            Insertion::Column => {
                for j in (0..rows[r].len()).rev() {
                    let i = (0..rows.len())
                        .take_while(|&i| rows[i].len() > j)
                        .filter(|&i| rows[i][j] <= carry)
                        .last()
                        .ok_or(Error::InvalidTableau("not a column-insertion tableau"))?;
                    core::mem::swap(&mut rows[i][j], &mut carry);
                }
            }
            Insertion::Row => {
                for i in (0..r).rev() {
                    let j = rows[i]
                        .iter()
                        .rposition(|&b| b < carry)
                        .ok_or(Error::InvalidTableau("not a row-insertion tableau"))?;
                    core::mem::swap(&mut rows[i][j], &mut carry);
                }
            }
        }
        if rows[r].is_empty() && r + 1 == rows.len() {
            rows.pop();
        }
        letters[m] = carry;
    }
    Word::new(letters, p.k)
}

/// The tableau `τ(n)` read off the triangular array: row `i` holds
/// `d^(1)_i(n)` copies of `i`, then `d^(j+1)_i(n) - d^(j)_i(n)` copies of `i + j`.
pub fn tableau_from_array(arr: &TriangularArray, n: usize) -> Result<Tableau> {
    let k = arr.k();
    let d = arr.rows_at(n);
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::new();
        let mut prev = 0u32;
        for (j, dj) in d.iter().enumerate().take(k - i) {
            let cur = dj[i];
            let count = cur.checked_sub(prev).ok_or(Error::InvalidTableau("array differences are negative"))?;
            row.extend(core::iter::repeat_n((i + j + 1) as Letter, count as usize));
            prev = cur;
        }
        rows.push(row);
    }
    Tableau::new(rows, k)
}

/// Number of standard tableaux of shape `λ`, by the hook-length formula.
pub fn num_standard(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut num: BigUint = (1..=n).map(BigUint::from).product();
    let den: BigUint = lambda.hooks().into_iter().flatten().map(BigUint::from).product();
    num /= den;
    num
}

/// Semistandard tableaux of shape `λ` with entries in `1..=k`.
pub fn semistandard(lambda: &Partition, k: usize) -> Vec<Tableau> {
    let shape = lambda.parts().to_vec();
    let mut rows: Vec<Vec<Letter>> = shape.iter().map(|&r| alloc::vec![0; r as usize]).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, k, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], idx: usize, rows: &mut Vec<Vec<Letter>>, k: usize, out: &mut Vec<Tableau>) {
    if idx == cells.len() {
        out.push(Tableau { rows: rows.clone(), k });
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = 1u8;
    if j > 0 {
        lo = lo.max(rows[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(rows[i - 1][j] + 1);
    }
    // leave room for the cells below in this column
    let below = rows.iter().skip(i + 1).take_while(|r| r.len() > j).count();
    let hi = k.saturating_sub(below);
    for a in lo..=(hi as u8) {
        rows[i][j] = a;
        fill(cells, idx + 1, rows, k, out);
    }
}

/// Kostka number `κ_{λμ}`: semistandard tableaux of shape `λ` and weight `μ`.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> Result<BigUint> {
    let total: u64 = mu.iter().map(|&m| u64::from(m)).sum();
    if u64::from(lambda.size()) != total {
        return Err(Error::SizeMismatch { shape: u64::from(lambda.size()), weight: total });
    }
    Ok(kostka_rec(lambda, mu))
}

fn kostka_rec(lambda: &Partition, mu: &[u32]) -> BigUint {
    let Some((&last, rest)) = mu.split_last() else {
        return if lambda.is_empty() { BigUint::one() } else { BigUint::zero() };
    };
    if lambda.len() > mu.len() {
        return BigUint::zero();
    }
    // remove a horizontal strip of size `last` holding the largest letter
    horizontal_strips_below(lambda, last).iter().map(|nu| kostka_rec(nu, rest)).sum()
}

/// Shapes `ν ⊆ λ` with `λ/ν` a horizontal strip of `size` boxes.
pub fn horizontal_strips_below(lambda: &Partition, size: u32) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts.len());
    strips(parts, 0, size, &mut cur, &mut out);
    out
}

fn strips(parts: &[u32], i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == parts.len() {
        if rest == 0 {
            out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
        }
        return;
    }
    let lo = parts.get(i + 1).copied().unwrap_or(0);
    let hi = parts[i];
    for v in lo..=hi {
        let removed = hi - v;
        if removed > rest {
            continue;
        }
        cur.push(v);
        strips(parts, i + 1, rest - removed, cur, out);
        cur.pop();
    }
}

/// Greene invariant `m_i`: the largest total length of `i` disjoint
/// non-decreasing subsequences of the reversed word, via min-cost flow.
pub fn greene(w: &Word, i: usize) -> u32 {
    let a = w.letters();
    let n = a.len();
    if n == 0 || i == 0 {
        return 0;
    }
    let mut g = FlowGraph::new(2 * n + 2);
    let (s, t) = (2 * n, 2 * n + 1);
    for j in 0..n {
        g.add(s, 2 * j, 1, 0);
        g.add(2 * j, 2 * j + 1, 1, -1);
        g.add(2 * j + 1, t, 1, 0);
        for l in j + 1..n {
            if a[j] >= a[l] {
                g.add(2 * j + 1, 2 * l, 1, 0);
            }
        }
    }
    g.add(s, t, i as i32, 0);
    let mut cost = 0;
    for _ in 0..i {
        match g.augment(s, t) {
            Some(c) => cost += c,
            None => break,
        }
    }
    (-cost) as u32
}

struct FlowGraph {
    to: Vec<usize>,
    cap: Vec<i32>,
    cost: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowGraph {
    fn new(nodes: usize) -> Self {
        FlowGraph { to: Vec::new(), cap: Vec::new(), cost: Vec::new(), adj: alloc::vec![Vec::new(); nodes] }
    }

    fn add(&mut self, u: usize, v: usize, cap: i32, cost: i32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.cost.push(cost);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
        self.cost.push(-cost);
    }

    /// Push one unit along a cheapest path; returns its cost.
    fn augment(&mut self, s: usize, t: usize) -> Option<i32> {
        let nodes = self.adj.len();
        let mut dist = alloc::vec![i32::MAX; nodes];
        let mut via = alloc::vec![usize::MAX; nodes];
        dist[s] = 0;
        for _ in 0..nodes {
            let mut changed = false;
            for u in 0..nodes {
                if dist[u] == i32::MAX {
                    continue;
                }
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && dist[u] + self.cost[e] < dist[v] {
                        dist[v] = dist[u] + self.cost[e];
                        via[v] = e;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[t] == i32::MAX {
            return None;
        }
        let mut v = t;
        while v != s {
            let e = via[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        Some(dist[t])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::word_to_walk;
    use crate::transform::triangular;
    use alloc::vec;

    fn word(s: &str, k: usize) -> Word {
        Word::from_digits(s, k).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inverse_rs_round_trip() {
        for mode in [Insertion::Column, Insertion::Row] {
            for code in 0..3usize.pow(6) {
                let mut c = code;
                let letters: Vec<u8> = (0..6)
                    .map(|_| {
                        let a = (c % 3) as u8 + 1;
                        c /= 3;
                        a
                    })
                    .collect();
                let w = Word::new(letters, 3).unwrap();
                let (p, q) = rs(&w, mode);
                assert_eq!(rs_inverse(&p, &q, mode).unwrap(), w);
            }
        }
    }

    #[test]
    fn worked_example_sequence() {
        let w = word("3112322", 3);
        let expected: [&[&[u8]]; 7] = [
            &[&[3]],
            &[&[1, 3]],
            &[&[1, 1, 3]],
            &[&[1, 1, 3], &[2]],
            &[&[1, 1, 3], &[2], &[3]],
            &[&[1, 1, 3], &[2, 2], &[3]],
            &[&[1, 1, 2, 3], &[2, 2], &[3]],
        ];
        for (n, rows) in expected.iter().enumerate() {
            let (p, _) = rs(&w.prefix(n + 1), Insertion::Column);
            let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
            assert_eq!(p.rows(), rows.as_slice(), "n = {}", n + 1);
        }
        let (p, q) = rs(&w, Insertion::Column);
        assert_eq!(p.shape(), part(&[4, 2, 1]));
        assert_eq!(p.weight(), vec![2, 3, 2]);
        let chain: Vec<Vec<u32>> = q.shapes().iter().map(|s| s.parts().to_vec()).collect();
        assert_eq!(chain, vec![vec![1], vec![2], vec![3], vec![3, 1], vec![3, 1, 1], vec![3, 2, 1], vec![4, 2, 1]]);
    }

    #[test]
    fn insertion_examples() {
        let t = Tableau::new(vec![vec![2]], 2).unwrap();
        assert_eq!(column_insert(&t, 1).unwrap().0.rows(), &[vec![1, 2]]);
        assert_eq!(column_insert(&Tableau::empty(2), 2).unwrap().0.rows(), &[vec![2]]);
        assert_eq!(rs(&word("12", 2), Insertion::Row).0.rows(), &[vec![1, 2]]);
        assert_eq!(rs(&word("21", 2), Insertion::Row).0.rows(), &[vec![1], vec![2]]);
        assert_eq!(rs(&word("3112322", 3), Insertion::Row).0, rs(&word("2232113", 3), Insertion::Column).0);
        assert!(column_insert(&t, 3).is_err());
        let (p, q) = rs(&Word::new(vec![], 3).unwrap(), Insertion::Column);
        assert_eq!(p.size() + q.size(), 0);
    }

    #[test]
    fn array_tableau() {
        let arr = triangular(&word_to_walk(&word("3112322", 3)));
        let t = tableau_from_array(&arr, 7).unwrap();
        assert_eq!(t.rows(), &[vec![1, 1, 2, 3], vec![2, 2], vec![3]]);
        assert_eq!(tableau_from_array(&arr, 0).unwrap().size(), 0);
        let arr = triangular(&word_to_walk(&word("1122", 2)));
        assert_eq!(tableau_from_array(&arr, 4).unwrap(), rs(&word("1122", 2), Insertion::Column).0);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(num_standard(&part(&[2, 1])), BigUint::from(2u32));
        assert_eq!(num_standard(&part(&[5])), BigUint::one());
        assert_eq!(num_standard(&part(&[2, 2])), BigUint::from(2u32));
        assert_eq!(num_standard(&part(&[4, 2, 1])), BigUint::from(35u32));
        assert_eq!(num_standard(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part(&[2, 1]), &[1, 1, 1]).unwrap(), BigUint::from(2u32));
        assert_eq!(kostka(&part(&[3, 1]), &[3, 1]).unwrap(), BigUint::one());
        assert_eq!(kostka(&part(&[1, 1]), &[2, 0]).unwrap(), BigUint::zero());
        assert!(kostka(&part(&[1, 1]), &[1, 0]).is_err());
        for lambda in partitions(5, 3) {
            let by_enum = semistandard(&lambda, 3).iter().filter(|t| t.weight() == vec![2, 2, 1]).count();
            assert_eq!(kostka(&lambda, &[2, 2, 1]).unwrap(), BigUint::from(by_enum));
        }
    }

    #[test]
    fn greene_examples() {
        let w = word("3112322", 3);
        assert_eq!([greene(&w, 1), greene(&w, 2), greene(&w, 3)], [4, 6, 7]);
        assert_eq!(greene(&word("111", 3), 1), 3);
        assert_eq!(greene(&word("321", 3), 1), 3);
        assert_eq!(greene(&word("123", 3), 1), 1);
    }

    #[test]
    fn chains_round_trip() {
        let q = rs(&word("3112322", 3), Insertion::Column).1;
        assert_eq!(StandardTableau::from_shapes(&q.shapes()).unwrap(), q);
        assert_eq!(StandardTableau::from_shapes(&[part(&[1])]).unwrap().shapes(), vec![part(&[1])]);
        assert!(StandardTableau::from_shapes(&[part(&[1]), part(&[3])]).is_err());
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[2, 1, 0, 0]), part(&[2, 1]));
        assert!(Tableau::new(vec![vec![1, 1], vec![1]], 2).is_err());
        assert!(Tableau::new(vec![vec![2, 1]], 2).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5, 5).len(), 7);
        assert_eq!(partitions(5, 2).len(), 3);
        assert_eq!(partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(semistandard(&part(&[2, 1]), 3).len(), 8);
    }
}
