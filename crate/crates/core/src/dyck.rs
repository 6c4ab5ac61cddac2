//! Dyck paths and the statistics the enumeration relies on: peak and valley
//! data, the first/last-peak cells `D_n(i, j)`, the dominance order, the
//! reversal involution and the minimal member of a cell.
//!
//! Paths are words over `r` (rise) and `f` (fall). Everything that returns a
//! list of paths returns it in lexicographic word order with `f < r`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A single step. `Fall` sorts before `Rise`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Fall,
    Rise,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Rise => 'r',
            Step::Fall => 'f',
        }
    }

    fn flipped(self) -> Step {
        match self {
            Step::Rise => Step::Fall,
            Step::Fall => Step::Rise,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Peak and valley data of a path. Points are `(x, height)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    pub first_peak: usize,
    pub last_peak: usize,
    pub peak_xs: Vec<(usize, usize)>,
    pub valley_xs: Vec<(usize, usize)>,
    /// height -> number of valleys at that height
    pub v_count_by_height: BTreeMap<usize, usize>,
    /// `i -> number of peaks of height >= i + 1`, for `i` in `1..=n`
    pub p_at_least: BTreeMap<usize, usize>,
}

impl DyckPath {
    /// Validates a step sequence.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let word = || steps.iter().map(|s| s.letter()).collect::<String>();
        if steps.is_empty() {
            return Err(Error::InvalidPath { word: String::new(), reason: "empty word" });
        }
        if steps.len() % 2 == 1 {
            return Err(Error::InvalidPath { word: word(), reason: "odd length" });
        }
        let mut h: i64 = 0;
        for s in &steps {
            h += if *s == Step::Rise { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidPath { word: word(), reason: "prefix with more falls than rises" });
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath { word: word(), reason: "unbalanced rises and falls" });
        }
        Ok(DyckPath { steps })
    }

    pub fn parse(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'r' => Ok(Step::Rise),
                'f' => Ok(Step::Fall),
                _ => Err(Error::InvalidPath { word: word.to_string(), reason: "letters must be 'r' or 'f'" }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(steps)
    }

    /// The maximum path `r^n f^n`.
    pub fn top(n: usize) -> Self {
        assert!(n >= 1);
        let mut steps = vec![Step::Rise; n];
        steps.extend(std::iter::repeat_n(Step::Fall, n));
        DyckPath { steps }
    }

    /// The minimum path `(rf)^n`.
    pub fn staircase(n: usize) -> Self {
        assert!(n >= 1);
        DyckPath { steps: (0..n).flat_map(|_| [Step::Rise, Step::Fall]).collect() }
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Height profile `h(0), ..., h(2n)`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        let mut y = 0usize;
        h.push(0);
        for s in &self.steps {
            match s {
                Step::Rise => y += 1,
                Step::Fall => y -= 1,
            }
            h.push(y);
        }
        h
    }

    pub fn peaks(&self) -> Vec<(usize, usize)> {
        let h = self.heights();
        (1..self.steps.len()).filter(|&x| h[x - 1] < h[x] && h[x] > h[x + 1]).map(|x| (x, h[x])).collect()
    }

    pub fn valleys(&self) -> Vec<(usize, usize)> {
        let h = self.heights();
        (1..self.steps.len()).filter(|&x| h[x - 1] > h[x] && h[x] < h[x + 1]).map(|x| (x, h[x])).collect()
    }

    pub fn first_peak_height(&self) -> usize {
        let mut y = 0;
        for w in self.steps.windows(2) {
            y += 1;
            if w[0] == Step::Rise && w[1] == Step::Fall {
                return y;
            }
            if w[0] == Step::Fall {
                y -= 2;
            }
        }
        unreachable!("a Dyck path always has a peak")
    }

    pub fn last_peak_height(&self) -> usize {
        self.star().first_peak_height()
    }

    /// `(first peak height, last peak height)`.
    pub fn cell(&self) -> (usize, usize) {
        (self.first_peak_height(), self.last_peak_height())
    }

    pub fn valley_count(&self) -> usize {
        self.valleys().len()
    }

    /// x-coordinates of the valleys at height `h`.
    pub fn valley_xs_at(&self, h: usize) -> BTreeSet<usize> {
        self.valleys().into_iter().filter(|&(_, y)| y == h).map(|(x, _)| x).collect()
    }

    /// Number of peaks of height at least `i + 1`.
    pub fn peaks_above(&self, i: usize) -> usize {
        self.peaks().iter().filter(|&&(_, y)| y > i).count()
    }

    pub fn stats(&self) -> PathStats {
        let peak_xs = self.peaks();
        let valley_xs = self.valleys();
        let mut v_count_by_height = BTreeMap::new();
        for &(_, y) in &valley_xs {
            *v_count_by_height.entry(y).or_insert(0) += 1;
        }
        let p_at_least =
            (1..=self.semilength()).map(|i| (i, peak_xs.iter().filter(|&&(_, y)| y > i).count())).collect();
        PathStats {
            first_peak: peak_xs[0].1,
            last_peak: peak_xs[peak_xs.len() - 1].1,
            peak_xs,
            valley_xs,
            v_count_by_height,
            p_at_least,
        }
    }

    /// Reverse the word and swap rises with falls.
    pub fn star(&self) -> DyckPath {
        DyckPath { steps: self.steps.iter().rev().map(|s| s.flipped()).collect() }
    }

    /// Dominance order: `self <= other` iff `other` never goes below `self`.
    pub fn leq(&self, other: &DyckPath) -> Result<bool> {
        if self.semilength() != other.semilength() {
            return Err(Error::SemilengthMismatch { left: self.semilength(), right: other.semilength() });
        }
        Ok(self.heights().iter().zip(other.heights()).all(|(a, b)| *a <= b))
    }

    /// Removes the leftmost `rf`.
    pub fn delete_first_peak(&self) -> Result<DyckPath> {
        if self.semilength() < 2 {
            return Err(Error::Precondition("delete_first_peak needs semilength >= 2".into()));
        }
        let pos = self.steps.windows(2).position(|w| w == [Step::Rise, Step::Fall]).expect("path has a peak");
        let mut steps = self.steps.clone();
        steps.drain(pos..pos + 2);
        Ok(DyckPath { steps })
    }

    /// Inserts `rf` directly after the first `i - 1` rises.
    pub fn insert_peak_after_rises(&self, i: usize) -> Result<DyckPath> {
        if i == 0 {
            return Err(Error::Precondition("insert_peak_after_rises needs i >= 1".into()));
        }
        let mut pos = 0;
        let mut seen = 0;
        while seen < i - 1 {
            if pos >= self.steps.len() {
                return Err(Error::Precondition(format!("path {self} has fewer than {} rises", i - 1)));
            }
            if self.steps[pos] == Step::Rise {
                seen += 1;
            }
            pos += 1;
        }
        let mut steps = self.steps.clone();
        steps.splice(pos..pos, [Step::Rise, Step::Fall]);
        Ok(DyckPath { steps })
    }

    /// The minimal path of the reflected cell `D_n(n - j, n - i)` where
    /// `p ∈ D_n(i, j)`; the cell `(0, 0)` is read as `(1, 1)`.
    pub fn bar(&self) -> DyckPath {
        let n = self.semilength();
        let (i, j) = self.cell();
        let (a, b) = match (n - j, n - i) {
            (0, 0) => (1, 1),
            ab => ab,
        };
        min_of_cell(n, a, b).expect("reflected cell of a path is never empty")
    }

    /// The set `m(p)` of even interior x-coordinates `x` such that one of
    /// `x - 2, x, x + 2` is neither a height-0 valley nor an endpoint.
    pub fn m_set(&self) -> BTreeSet<usize> {
        let n = self.semilength();
        let mut excluded = self.valley_xs_at(0);
        excluded.insert(0);
        excluded.insert(2 * n);
        (1..n)
            .map(|m| 2 * m)
            .filter(|&x| [x - 2, x, x + 2].iter().any(|y| !excluded.contains(y)))
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({})", self.word())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.word())
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = String::deserialize(d)?;
        DyckPath::parse(&word).map_err(serde::de::Error::custom)
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `f < r`.
pub fn enumerate(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, rises: usize, falls: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if rises == n && falls == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if falls < rises {
            cur.push(Step::Fall);
            go(n, rises, falls + 1, cur, out);
            cur.pop();
        }
        if rises < n {
            cur.push(Step::Rise);
            go(n, rises + 1, falls, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    }
    out
}

/// Paths of `D_n(i, j)`: first peak of height `i`, last peak of height `j`.
/// Cells with `i = 0` or `j = 0` are empty.
pub fn enumerate_cell(n: usize, i: usize, j: usize) -> Vec<DyckPath> {
    if i == 0 || j == 0 {
        return Vec::new();
    }
    enumerate(n).into_iter().filter(|p| p.cell() == (i, j)).collect()
}

pub fn cell_is_nonempty(n: usize, i: usize, j: usize) -> bool {
    n >= 1 && (1..=n).contains(&i) && (1..=n).contains(&j) && ((i < n && j < n) || (i == n && j == n))
}

/// The unique dominance-minimal path of `D_n(a, b)`.
///
/// Built directly: `r^a f^a (rf)^(n-a-b) r^b f^b` when `a + b <= n`,
/// otherwise `r^a f^(a-c) r^(b-c) f^b` with `c = a + b - n`.
pub fn min_of_cell(n: usize, a: usize, b: usize) -> Result<DyckPath> {
    if !cell_is_nonempty(n, a, b) {
        return Err(Error::EmptyCell { n, i: a, j: b });
    }
    if a == n {
        return Ok(DyckPath::top(n));
    }
    let mut w = String::with_capacity(2 * n);
    let push = |w: &mut String, c: char, k: usize| w.extend(std::iter::repeat_n(c, k));
    if a + b <= n {
        push(&mut w, 'r', a);
        push(&mut w, 'f', a);
        for _ in 0..n - a - b {
            w.push_str("rf");
        }
        push(&mut w, 'r', b);
        push(&mut w, 'f', b);
    } else {
        let c = a + b - n;
        push(&mut w, 'r', a);
        push(&mut w, 'f', a - c);
        push(&mut w, 'r', b - c);
        push(&mut w, 'f', b);
    }
    DyckPath::parse(&w)
}

/// Pointwise minimum over the enumerated cell, checked to be a member.
pub fn min_of_cell_exhaustive(n: usize, a: usize, b: usize) -> Result<DyckPath> {
    let members = enumerate_cell(n, a, b);
    if members.is_empty() {
        return Err(Error::EmptyCell { n, i: a, j: b });
    }
    let mut low = members[0].heights();
    for p in &members[1..] {
        for (l, h) in low.iter_mut().zip(p.heights()) {
            *l = (*l).min(h);
        }
    }
    members
        .into_iter()
        .find(|p| p.heights() == low)
        .ok_or_else(|| Error::Precondition(format!("pointwise minimum of D_{n}({a},{b}) is not a member")))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

pub fn catalan_number(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Entry `c_{i,j} = (i+j)! (i-j+1) / (j! (i+1)!)` of the Catalan triangle.
pub fn catalan_triangle(i: u64, j: u64) -> Result<BigUint> {
    if j > i {
        return Err(Error::Precondition(format!("catalan_triangle needs j <= i (got {i}, {j})")));
    }
    Ok(binomial(i + j, j) * (i - j + 1) / (i + 1))
}

/// Closed form for `|D_n(i, j)|` when `1 <= i, j <= n - 1`:
/// `C(a+b, a) - C(a+b, n-i-j-1)` with `a = n-1-i`, `b = n-1-j`; the second
/// term vanishes when its lower index is negative.
pub fn cell_count_closed(n: u64, i: u64, j: u64) -> Result<BigUint> {
    if n < 2 || !(1..n).contains(&i) || !(1..n).contains(&j) {
        return Err(Error::Precondition(format!("cell_count_closed needs 1 <= i, j <= n-1 (got n={n}, {i}, {j})")));
    }
    let (a, b) = (n - 1 - i, n - 1 - j);
    let lower = n as i64 - i as i64 - j as i64 - 1;
    let second = if lower < 0 { BigUint::zero() } else { binomial(a + b, lower as u64) };
    let diff = BigInt::from(binomial(a + b, a)) - BigInt::from(second);
    diff.to_biguint().ok_or_else(|| Error::Overflow(format!("negative cell count at ({n},{i},{j})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &str) -> DyckPath {
        DyckPath::parse(w).unwrap()
    }

    #[test]
    fn parse_accepts_and_rejects() {
        assert_eq!(p("rrrffrfrff").semilength(), 5);
        assert_eq!(p("rf").semilength(), 1);
        assert!(matches!(DyckPath::parse("fr"), Err(Error::InvalidPath { .. })));
        assert!(DyckPath::parse("rrf").is_err());
        assert!(DyckPath::parse("rrfr").is_err());
        assert!(DyckPath::parse("rxf").is_err());
        assert!(DyckPath::parse("").is_err());
    }

    #[test]
    fn reference_path_statistics() {
        let s = p("rrrffrfrff").stats();
        assert_eq!((s.first_peak, s.last_peak), (3, 2));
        assert_eq!(s.valley_xs, vec![(5, 1), (7, 1)]);
        assert_eq!(s.v_count_by_height.get(&1), Some(&2));
        assert_eq!(s.p_at_least[&1], 3);
        assert_eq!(s.p_at_least[&2], 1);

        let q = DyckPath::staircase(3).stats();
        assert_eq!(q.valley_xs, vec![(2, 0), (4, 0)]);

        let s = p("rrfrff").stats();
        assert_eq!((s.first_peak, s.last_peak), (2, 2));
        assert_eq!(s.valley_xs, vec![(3, 1)]);
    }

    #[test]
    fn star_examples() {
        assert_eq!(p("rrrfrrffff").star(), p("rrrrffrfff"));
        for q in enumerate(6) {
            assert_eq!(q.star().star(), q);
        }
        assert_eq!(DyckPath::top(4).star(), DyckPath::top(4));
    }

    #[test]
    fn dominance_examples() {
        for n in 1..=5 {
            let (top, stair) = (DyckPath::top(n), DyckPath::staircase(n));
            assert!(stair.leq(&top).unwrap());
            assert_eq!(top.leq(&stair).unwrap(), n == 1);
        }
        let x = p("rfrrff");
        assert!(x.leq(&x).unwrap());
        assert!(x.leq(&p("rrfrff")).unwrap());
        assert!(!p("rrffrf").leq(&x).unwrap() && !x.leq(&p("rrffrf")).unwrap());
        assert!(!p("rrfrff").leq(&x).unwrap());
        assert!(x.leq(&p("rrrfff")).unwrap());
        assert!(!p("rrrfff").leq(&x).unwrap());
        assert!(matches!(x.leq(&p("rf")), Err(Error::SemilengthMismatch { .. })));
    }

    #[test]
    fn enumeration_sizes_and_order() {
        let sizes: Vec<usize> = (1..=8).map(|n| enumerate(n).len()).collect();
        assert_eq!(sizes, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
        let e = enumerate(3);
        let words: Vec<String> = e.iter().map(|p| p.word()).collect();
        assert_eq!(words, vec!["rfrfrf", "rfrrff", "rrffrf", "rrfrff", "rrrfff"]);
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_cell(4, 1, 1).len(), 2);
        assert!(enumerate_cell(3, 2, 3).is_empty());
        assert!(enumerate_cell(3, 0, 1).is_empty());
    }

    #[test]
    fn peak_deletion_and_insertion() {
        assert_eq!(p("rrfrff").delete_first_peak().unwrap(), p("rrff"));
        assert_eq!(p("rrff").insert_peak_after_rises(2).unwrap(), p("rrfrff"));
        assert_eq!(p("rrff").insert_peak_after_rises(1).unwrap(), p("rfrrff"));
        assert!(p("rf").delete_first_peak().is_err());
        assert!(p("rf").insert_peak_after_rises(3).is_err());
        assert!(p("rf").insert_peak_after_rises(0).is_err());
    }

    #[test]
    fn insertion_inverts_deletion_on_cells() {
        // G(F(x)) = x with G inserting after i-1 rises, for x in D_n(i, j)
        for n in 2..=7 {
            for x in enumerate(n) {
                let (i, _) = x.cell();
                assert_eq!(x.delete_first_peak().unwrap().insert_peak_after_rises(i).unwrap(), x);
            }
        }
    }

    #[test]
    fn min_of_cell_examples() {
        assert_eq!(min_of_cell(2, 2, 2).unwrap(), DyckPath::top(2));
        for n in 2..=6 {
            assert_eq!(DyckPath::top(n).bar(), DyckPath::staircase(n));
        }
        assert_eq!(p("rfrrff").bar(), p("rfrrff"));
        assert!(matches!(min_of_cell(3, 2, 3), Err(Error::EmptyCell { .. })));
        assert!(min_of_cell(3, 0, 1).is_err());
    }

    #[test]
    fn closed_min_matches_exhaustive_minimum() {
        for n in 1..=8 {
            for a in 1..=n {
                for b in 1..=n {
                    match min_of_cell_exhaustive(n, a, b) {
                        Ok(m) => {
                            assert_eq!(min_of_cell(n, a, b).unwrap(), m, "cell ({n},{a},{b})");
                            for q in enumerate_cell(n, a, b) {
                                assert!(m.leq(&q).unwrap());
                            }
                        }
                        Err(_) => assert!(min_of_cell(n, a, b).is_err()),
                    }
                }
            }
        }
    }

    #[test]
    fn m_set_examples() {
        assert_eq!(DyckPath::top(3).m_set(), BTreeSet::from([2, 4]));
        for n in 1..=6 {
            assert!(DyckPath::staircase(n).m_set().is_empty());
        }
        for q in enumerate(6) {
            assert!(q.m_set().iter().all(|&x| x % 2 == 0 && (2..=10).contains(&x)));
        }
    }

    #[test]
    fn triangle_and_closed_form() {
        assert_eq!(catalan_triangle(4, 3).unwrap(), BigUint::from(14u32));
        let row4: Vec<BigUint> = (0..=4).map(|j| catalan_triangle(4, j).unwrap()).collect();
        assert_eq!(row4, [1u32, 4, 9, 14, 14].map(BigUint::from).to_vec());
        assert_eq!(cell_count_closed(5, 1, 2).unwrap(), BigUint::from(5u32));
        assert!(catalan_triangle(1, 2).is_err());
        assert!(cell_count_closed(5, 5, 1).is_err());
    }

    #[test]
    fn serde_uses_words() {
        let x = p("rrfrff");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"rrfrff\"");
        assert_eq!(serde_json::from_str::<DyckPath>(&json).unwrap(), x);
        assert!(serde_json::from_str::<DyckPath>("\"ff\"").is_err());
    }
}
