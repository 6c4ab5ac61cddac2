//! Basic ideals of the affine Borel subalgebra of `sl_n^`.
//!
//! A basic ideal is stored through its two root sets: `s_plus`, the positive
//! roots `α` in the support, and `s_minus`, the positive roots `β` for which
//! `−β + δ` is in the support. Positive roots of `A_{n-1}` are intervals
//! `[i, j]` standing for `α_i + ... + α_j`.
//!
//! The grid model puts `[i, j]` in box `(i, j+1)` and `−[i, j]` in box
//! `(j+1, i)` of an `n × n` grid. The path `p` separates `s_plus` from the
//! rest (rises are horizontal steps), and `q` separates `s_minus` below the
//! diagonal (rises are vertical steps).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyck::{enumerate, DyckPath, Step};
use crate::error::{Error, Result};
use crate::matrices::{catalan_matrix, dot, omega};
use crate::rootsys::{FiniteRootSystem, WindowPoset, WindowRoot};
use crate::truncation::{self, interval_coroot, LoopElement, Truncation};

/// `α_i + ... + α_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub i: usize,
    pub j: usize,
}

impl Interval {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(1 <= i && i <= j);
        Interval { i, j }
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.i <= other.i && other.j <= self.j
    }

    pub fn disjoint(&self, other: &Interval) -> bool {
        self.j < other.i || other.j < self.i
    }

    /// The sum as a root, if it is one.
    pub fn join(&self, other: &Interval) -> Option<Interval> {
        if self.j + 1 == other.i {
            Some(Interval::new(self.i, other.j))
        } else if other.j + 1 == self.i {
            Some(Interval::new(other.i, self.j))
        } else {
            None
        }
    }

    /// `self − other` when it is a root: `Ok(Some(sign, interval))`, or
    /// `Err(())` when the difference is zero.
    fn difference(&self, other: &Interval) -> std::result::Result<Option<(i8, Interval)>, ()> {
        if self == other {
            return Err(());
        }
        if self.contains(other) {
            if self.i == other.i {
                return Ok(Some((1, Interval::new(other.j + 1, self.j))));
            }
            if self.j == other.j {
                return Ok(Some((1, Interval::new(self.i, other.i - 1))));
            }
        } else if other.contains(self) {
            if self.i == other.i {
                return Ok(Some((-1, Interval::new(self.j + 1, other.j))));
            }
            if self.j == other.j {
                return Ok(Some((-1, Interval::new(other.i, self.i - 1))));
            }
        }
        Ok(None)
    }

    pub fn all(n: usize) -> impl Iterator<Item = Interval> {
        (1..n).flat_map(move |i| (i..n).map(move |j| Interval::new(i, j)))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [i, j] = <[usize; 2]>::deserialize(d)?;
        if i == 0 || i > j {
            return Err(serde::de::Error::custom(format!("bad interval [{i},{j}]")));
        }
        Ok(Interval { i, j })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicIdeal {
    n: usize,
    s_plus: BTreeSet<Interval>,
    s_minus: BTreeSet<Interval>,
}

impl BasicIdeal {
    /// Validates that the window support is a coideal containing `δ`.
    pub fn new(n: usize, s_plus: BTreeSet<Interval>, s_minus: BTreeSet<Interval>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIdeal("n must be at least 1".into()));
        }
        for x in s_plus.iter().chain(&s_minus) {
            if x.i == 0 || x.i > x.j || x.j >= n {
                return Err(Error::InvalidIdeal(format!("interval {x} out of range for n = {n}")));
            }
        }
        for a in &s_plus {
            for b in Interval::all(n) {
                if b.contains(a) && !s_plus.contains(&b) {
                    return Err(Error::InvalidIdeal(format!("s_plus has {a} but not {b}")));
                }
                if a.disjoint(&b) && !s_minus.contains(&b) {
                    return Err(Error::InvalidIdeal(format!("s_plus has {a} but s_minus lacks {b}")));
                }
            }
        }
        for a in &s_minus {
            for b in Interval::all(n) {
                if a.contains(&b) && !s_minus.contains(&b) {
                    return Err(Error::InvalidIdeal(format!("s_minus has {a} but not {b}")));
                }
            }
        }
        Ok(BasicIdeal { n, s_plus, s_minus })
    }

    /// The ideal generated by `δ`.
    pub fn delta_only(n: usize) -> Self {
        BasicIdeal { n, s_plus: BTreeSet::new(), s_minus: BTreeSet::new() }
    }

    /// The whole window.
    pub fn full(n: usize) -> Self {
        let all: BTreeSet<Interval> = Interval::all(n).collect();
        BasicIdeal { n, s_plus: all.clone(), s_minus: all }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s_plus(&self) -> &BTreeSet<Interval> {
        &self.s_plus
    }

    pub fn s_minus(&self) -> &BTreeSet<Interval> {
        &self.s_minus
    }

    pub fn is_delta_only(&self) -> bool {
        self.s_plus.is_empty() && self.s_minus.is_empty()
    }

    /// Union of supports.
    pub fn join(&self, other: &BasicIdeal) -> Result<BasicIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        BasicIdeal::new(
            self.n,
            self.s_plus.union(&other.s_plus).copied().collect(),
            self.s_minus.union(&other.s_minus).copied().collect(),
        )
    }

    /// The window part of the support, shifted up by `k δ`.
    pub fn shifted_support(&self, k: u32) -> BTreeSet<ShiftedRoot> {
        let mut out: BTreeSet<ShiftedRoot> = self.s_plus.iter().map(|&a| ShiftedRoot { root: SlnRoot::Pos(a), shift: k }).collect();
        out.insert(ShiftedRoot { root: SlnRoot::Delta, shift: k });
        out.extend(self.s_minus.iter().map(|&a| ShiftedRoot { root: SlnRoot::NegShift(a), shift: k }));
        out
    }
}

/// A pair of Dyck paths of equal semilength.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPair {
    pub p: DyckPath,
    pub q: DyckPath,
}

/// The path cutting off `s_plus`: the `r`-th fall happens at x-offset
/// `L_r`, the first column filled in row `r` minus one (or `n`).
pub fn path_of_s_plus(n: usize, s_plus: &BTreeSet<Interval>) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * n);
    let mut x = 0;
    for r in 1..=n {
        let first = (r + 1..=n).find(|&c| s_plus.contains(&Interval::new(r, c - 1)));
        let l = first.map_or(n, |c| c - 1);
        steps.extend(std::iter::repeat_n(Step::Rise, l - x));
        steps.push(Step::Fall);
        x = l;
    }
    DyckPath::from_steps(steps).expect("grid staircase is a Dyck path")
}

pub fn s_plus_of_path(p: &DyckPath) -> BTreeSet<Interval> {
    let n = p.semilength();
    let mut out = BTreeSet::new();
    let mut rises = 0;
    let mut row = 0;
    for s in p.steps() {
        match s {
            Step::Rise => rises += 1,
            Step::Fall => {
                row += 1;
                if row < n {
                    out.extend((rises + 1..=n).map(|c| Interval::new(row, c - 1)));
                }
            }
        }
    }
    out
}

/// The path cutting off `s_minus`: before the `r`-th rise it has made `R_r`
/// falls, the first filled column in row `r` minus one (or `r − 1`).
pub fn path_of_s_minus(n: usize, s_minus: &BTreeSet<Interval>) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * n);
    let mut x = 0;
    for r in 1..=n {
        let first = (1..r).find(|&c| s_minus.contains(&Interval::new(c, r - 1)));
        let rr = first.map_or(r - 1, |c| c - 1);
        steps.extend(std::iter::repeat_n(Step::Fall, rr - x));
        steps.push(Step::Rise);
        x = rr;
    }
    steps.extend(std::iter::repeat_n(Step::Fall, n - x));
    DyckPath::from_steps(steps).expect("grid staircase is a Dyck path")
}

pub fn s_minus_of_path(q: &DyckPath) -> BTreeSet<Interval> {
    let mut out = BTreeSet::new();
    let mut falls = 0;
    let mut row = 0;
    for s in q.steps() {
        match s {
            Step::Fall => falls += 1,
            Step::Rise => {
                row += 1;
                out.extend((falls + 1..row).map(|c| Interval::new(c, row - 1)));
            }
        }
    }
    out
}

pub fn phi(b: &BasicIdeal) -> DyckPair {
    DyckPair { p: path_of_s_plus(b.n, &b.s_plus), q: path_of_s_minus(b.n, &b.s_minus) }
}

pub fn phi_inv(pair: &DyckPair) -> Result<BasicIdeal> {
    if !is_admissible(&pair.p, &pair.q)? {
        return Err(Error::Inadmissible { p: pair.p.word(), q: pair.q.word() });
    }
    BasicIdeal::new(pair.p.semilength(), s_plus_of_path(&pair.p), s_minus_of_path(&pair.q))
}

/// Peak thresholds: with `k, m` the first and last peak heights of `p`,
/// the first peak of `q` reaches `n − m` and its last peak reaches `n − k`.
pub fn is_admissible(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    let n = p.semilength();
    if q.semilength() != n {
        return Err(Error::SemilengthMismatch { left: n, right: q.semilength() });
    }
    let (k, m) = p.cell();
    let (c, d) = q.cell();
    Ok(c + m >= n && d + k >= n)
}

/// Precomputed paths and heights of one semilength.
struct PathTable {
    paths: Vec<DyckPath>,
    heights: Vec<Vec<usize>>,
    cells: Vec<(usize, usize)>,
}

impl PathTable {
    fn new(n: usize) -> Self {
        let paths = enumerate(n);
        let heights = paths.iter().map(|p| p.heights()).collect();
        let cells = paths.iter().map(|p| p.cell()).collect();
        PathTable { paths, heights, cells }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.heights[a].iter().zip(&self.heights[b]).all(|(x, y)| x <= y)
    }

    fn admissible(&self, n: usize, a: usize, b: usize) -> bool {
        let (k, m) = self.cells[a];
        let (c, d) = self.cells[b];
        c + m >= n && d + k >= n
    }
}

/// All admissible pairs, ordered by `(p, q)` words.
pub fn enumerate_pairs(n: usize) -> Vec<DyckPair> {
    let t = PathTable::new(n);
    (0..t.paths.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let t = &t;
            (0..t.paths.len())
                .filter(move |&b| t.admissible(n, a, b))
                .map(move |b| DyckPair { p: t.paths[a].clone(), q: t.paths[b].clone() })
        })
        .collect()
}

/// Every basic ideal for `sl_n^`, ordered by `(p, q)` words.
pub fn enumerate_basic(n: usize) -> Vec<BasicIdeal> {
    enumerate_pairs(n).par_iter().map(|pr| phi_inv(pr).expect("admissible by construction")).collect()
}

/// Number of admissible pairs, without materializing them.
pub fn count_admissible_pairs(n: usize) -> u64 {
    let t = PathTable::new(n);
    (0..t.paths.len()).into_par_iter().map(|a| (0..t.paths.len()).filter(|&b| t.admissible(n, a, b)).count() as u64).sum()
}

/// `C_n · ω C_n`.
pub fn b_count_formula(n: usize) -> Result<BigUint> {
    let c = catalan_matrix(n)?;
    dot(&c, &omega(&c))
}

/// The explicit quadruple sum
/// `Σ_{i,j} c_{i,j} Σ_{k=n-i}^{n} Σ_{m=n-j}^{n} c_{k,m}` with zero-index terms 0.
pub fn b_count_cor22(n: usize) -> Result<BigUint> {
    let c = catalan_matrix(n)?;
    let mut total = BigUint::zero();
    for i in 1..=n {
        for j in 1..=n {
            let cij = c.get(i, j);
            if cij.is_zero() {
                continue;
            }
            let mut inner = BigUint::zero();
            for k in n - i..=n {
                for m in n - j..=n {
                    inner += c.get_or_zero(k, m);
                }
            }
            total += cij * inner;
        }
    }
    Ok(total)
}

/// Generator count from the paths, with each peak correction applied only
/// when the coinciding peak has height at least 2.
pub fn generators_formula(b: &BasicIdeal) -> usize {
    let v = generators_formula_with(b, true);
    usize::try_from(v).expect("guarded count is never negative")
}

/// The same count with the corrections applied unconditionally. This can
/// go negative, e.g. for `s_plus = {[1,2]}`, `s_minus = ∅` at `n = 3`.
pub fn generators_formula_literal(b: &BasicIdeal) -> i64 {
    generators_formula_with(b, false)
}

fn generators_formula_with(b: &BasicIdeal, guarded: bool) -> i64 {
    if b.is_delta_only() {
        return 1;
    }
    let n = b.n;
    let DyckPair { p, q } = phi(b);
    let (a, bb) = p.cell();
    let (c, d) = q.cell();
    let mut g = p.valley_count() as i64 + q.peaks_above(1) as i64;
    if d + a == n && (!guarded || n - a >= 2) {
        g -= 1;
    }
    if c + bb == n && (!guarded || n - bb >= 2) {
        g -= 1;
    }
    g
}

pub fn is_quasi_abelian_pair(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    Ok(p.bar().leq(q)? && q.leq(p)?)
}

/// `bar(p) ≤ q ≤ p` for `(p, q) = phi(b)`.
pub fn is_quasi_abelian(b: &BasicIdeal) -> bool {
    let DyckPair { p, q } = phi(b);
    is_quasi_abelian_pair(&p, &q).expect("phi yields equal semilengths")
}

pub fn quasi_abelian_count(n: usize) -> u64 {
    let t = PathTable::new(n);
    let bars: Vec<usize> = t.paths.iter().map(|p| t.paths.binary_search(&p.bar()).expect("bar is a path")).collect();
    (0..t.paths.len())
        .into_par_iter()
        .map(|a| (0..t.paths.len()).filter(|&b| t.leq(bars[a], b) && t.leq(b, a)).count() as u64)
        .sum()
}

/// Supports of the lower central series of the ideal spanned by `s_plus`
/// inside `n_+`: entry `k` is `supp(I^k)`, ending with the empty set.
pub fn plus_series(s_plus: &BTreeSet<Interval>) -> Vec<BTreeSet<Interval>> {
    let mut out = vec![s_plus.clone()];
    while !out.last().expect("nonempty").is_empty() {
        let cur = out.last().expect("nonempty");
        let next = cur.iter().flat_map(|a| s_plus.iter().filter_map(move |b| a.join(b))).collect();
        out.push(next);
    }
    out
}

/// Nilpotency degree of the finite part `i_+`.
pub fn nd_plus(b: &BasicIdeal) -> usize {
    plus_series(&b.s_plus).len() - 1
}

/// Quasi-nilpotency degree from the lower central series modulo the tail.
///
/// Each term is tracked as positive roots at level 0, negative roots at
/// level 1 (stored as intervals `β` for `−β + δ`) and whether its `δ`
/// component is nonzero. The `δ` component is central in the quotient.
/// It starts nonzero for every `n`, including `n = 1` where the Cartan part
/// is read as one-dimensional.
pub fn qnd_direct(b: &BasicIdeal) -> usize {
    let mut level0 = b.s_plus.clone();
    let mut level1 = b.s_minus.clone();
    let mut delta = true;
    let mut m = 0;
    while !level0.is_empty() || !level1.is_empty() || delta {
        m += 1;
        let mut next0 = BTreeSet::new();
        let mut next1 = BTreeSet::new();
        let mut next_delta = false;
        for a in &level0 {
            next0.extend(b.s_plus.iter().filter_map(|x| a.join(x)));
            for beta in &b.s_minus {
                match a.difference(beta) {
                    Err(()) => next_delta = true,
                    Ok(Some((-1, r))) => {
                        next1.insert(r);
                    }
                    _ => {}
                }
            }
        }
        for beta in &level1 {
            for a in &b.s_plus {
                match a.difference(beta) {
                    Err(()) => next_delta = true,
                    Ok(Some((-1, r))) => {
                        next1.insert(r);
                    }
                    _ => {}
                }
            }
        }
        level0 = next0;
        level1 = next1;
        delta = next_delta;
    }
    m
}

/// `m` or `m + 1` with `m = nd(i_+)`: `m + 1` exactly when some `β ∈ s_minus`
/// has `β ∈ supp(i_+^(m-1))`; and 1 when `m = 0`.
pub fn qnd_prop31(b: &BasicIdeal) -> usize {
    let series = plus_series(&b.s_plus);
    let m = series.len() - 1;
    if m == 0 {
        return 1;
    }
    if b.s_minus.iter().any(|beta| series[m - 1].contains(beta)) {
        m + 1
    } else {
        m
    }
}

/// Spanning vectors of the ideal in the one-window quotient: root vectors
/// for the window support plus the whole Cartan part in degree 1.
pub fn basic_span(b: &BasicIdeal) -> Vec<LoopElement> {
    let n = b.n;
    let mut v: Vec<LoopElement> = b.s_plus.iter().map(|x| LoopElement::unit(0, x.i, x.j + 1)).collect();
    v.extend((1..n).map(|i| LoopElement::diagonal(1, &interval_coroot(n, i, i))));
    v.extend(b.s_minus.iter().map(|x| LoopElement::unit(1, x.j + 1, x.i)));
    v
}

/// Checks with explicit matrices that the span of the ideal is stable under
/// the affine Borel in the one-window quotient.
pub fn verify_basic_in_truncation(b: &BasicIdeal) -> Result<bool> {
    verify_window_span(b.n, &basic_span(b))
}

pub fn verify_window_span(n: usize, vectors: &[LoopElement]) -> Result<bool> {
    truncation::is_borel_stable(n, Truncation::Window, vectors)
}

/// Abelianity of the image modulo the tail, by explicit brackets.
pub fn quasi_abelian_by_brackets(b: &BasicIdeal) -> Result<bool> {
    truncation::brackets_vanish(Truncation::Window, &basic_span(b))
}

/// Length of the lower central series modulo the tail, by explicit brackets.
pub fn qnd_by_brackets(b: &BasicIdeal) -> Result<usize> {
    truncation::lower_central_length(b.n, Truncation::Window, &basic_span(b))
}

/// Window roots of type `A_{n-1}` with interval labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlnRoot {
    Pos(Interval),
    Delta,
    NegShift(Interval),
}

/// `root + shift·δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedRoot {
    pub root: SlnRoot,
    pub shift: u32,
}

/// Brings a uniformly shifted window support back to its basic
/// representative. Roots above the lowest occupied layer are part of the
/// tail and do not affect the result.
pub fn normalize_support(n: usize, support: &BTreeSet<ShiftedRoot>) -> Result<BasicIdeal> {
    let k = support.iter().map(|r| r.shift).min().ok_or_else(|| Error::InvalidIdeal("empty support".into()))?;
    let layer: Vec<SlnRoot> = support.iter().filter(|r| r.shift == k).map(|r| r.root).collect();
    if !layer.contains(&SlnRoot::Delta) {
        return Err(Error::InvalidIdeal(format!("lowest layer (shift {k}) lacks delta")));
    }
    let s_plus = layer.iter().filter_map(|r| if let SlnRoot::Pos(a) = r { Some(*a) } else { None }).collect();
    let s_minus = layer.iter().filter_map(|r| if let SlnRoot::NegShift(a) = r { Some(*a) } else { None }).collect();
    BasicIdeal::new(n, s_plus, s_minus)
}

/// The type-A window poset together with the interval labelling of its
/// elements.
pub struct SlnWindow {
    n: usize,
    rs: FiniteRootSystem,
    poset: WindowPoset,
    intervals: Vec<Interval>,
    by_interval: HashMap<Interval, usize>,
}

impl SlnWindow {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let rs = FiniteRootSystem::type_a(n - 1);
        let poset = WindowPoset::new(&rs);
        let intervals: Vec<Interval> = rs
            .positive_roots()
            .iter()
            .map(|r| {
                let i = r.iter().position(|&c| c != 0).expect("nonzero root") + 1;
                let j = r.iter().rposition(|&c| c != 0).expect("nonzero root") + 1;
                Interval::new(i, j)
            })
            .collect();
        let by_interval = intervals.iter().enumerate().map(|(k, x)| (*x, k)).collect();
        SlnWindow { n, rs, poset, intervals, by_interval }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root_system(&self) -> &FiniteRootSystem {
        &self.rs
    }

    pub fn poset(&self) -> &WindowPoset {
        &self.poset
    }

    pub fn to_sln(&self, x: WindowRoot) -> SlnRoot {
        match x {
            WindowRoot::Pos(a) => SlnRoot::Pos(self.intervals[a]),
            WindowRoot::Delta => SlnRoot::Delta,
            WindowRoot::NegShift(a) => SlnRoot::NegShift(self.intervals[a]),
        }
    }

    pub fn to_window(&self, x: SlnRoot) -> WindowRoot {
        match x {
            SlnRoot::Pos(a) => WindowRoot::Pos(self.by_interval[&a]),
            SlnRoot::Delta => WindowRoot::Delta,
            SlnRoot::NegShift(a) => WindowRoot::NegShift(self.by_interval[&a]),
        }
    }

    /// Poset indices of `supp ∩ D`, including `δ`.
    pub fn support_indices(&self, b: &BasicIdeal) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let pos = |x: WindowRoot| self.poset.position(x).expect("window element");
        out.extend(b.s_plus.iter().map(|a| pos(WindowRoot::Pos(self.by_interval[a]))));
        out.insert(self.poset.delta_index());
        out.extend(b.s_minus.iter().map(|a| pos(WindowRoot::NegShift(self.by_interval[a]))));
        out
    }

    fn ideal_of_indices(&self, u: &BTreeSet<usize>) -> Result<BasicIdeal> {
        let mut s_plus = BTreeSet::new();
        let mut s_minus = BTreeSet::new();
        for &k in u {
            match self.to_sln(self.poset.elements()[k]) {
                SlnRoot::Pos(a) => {
                    s_plus.insert(a);
                }
                SlnRoot::NegShift(a) => {
                    s_minus.insert(a);
                }
                SlnRoot::Delta => {}
            }
        }
        BasicIdeal::new(self.n, s_plus, s_minus)
    }

    /// The ideal whose window support is the coideal generated by `a`.
    pub fn from_antichain(&self, a: &BTreeSet<SlnRoot>) -> Result<BasicIdeal> {
        if a.is_empty() {
            return Err(Error::NotAntichain("empty set".into()));
        }
        let idx: BTreeSet<usize> =
            a.iter().map(|&x| self.poset.position(self.to_window(x)).expect("window element")).collect();
        self.ideal_of_indices(&self.poset.coideal_of(&idx)?)
    }

    pub fn antichain_of(&self, b: &BasicIdeal) -> BTreeSet<SlnRoot> {
        let u = self.support_indices(b);
        self.poset
            .minimal_elements(&u)
            .expect("support of a basic ideal is a coideal")
            .into_iter()
            .map(|k| self.to_sln(self.poset.elements()[k]))
            .collect()
    }

    pub fn principal(&self, x: SlnRoot) -> BasicIdeal {
        self.from_antichain(&BTreeSet::from([x])).expect("a singleton is an antichain")
    }

    /// Every basic ideal, one per nonempty antichain of the window.
    pub fn ideals_from_antichains(&self) -> Vec<BasicIdeal> {
        self.poset
            .antichains()
            .iter()
            .map(|s| self.ideal_of_indices(&self.poset.coideal_of(s).expect("antichain")).expect("coideal"))
            .collect()
    }

    /// `⪯`-minimal elements of `supp ∩ D` other than `δ`; 1 when nothing else is there.
    pub fn generators_direct(&self, b: &BasicIdeal) -> usize {
        if b.is_delta_only() {
            return 1;
        }
        let d = self.poset.delta_index();
        let u: Vec<usize> = self.support_indices(b).into_iter().filter(|&k| k != d).collect();
        u.iter().filter(|&&x| !u.iter().any(|&y| y != x && self.poset.preceq(y, x))).count()
    }

    pub fn record(&self, b: &BasicIdeal) -> IdealRecord {
        let DyckPair { p, q } = phi(b);
        IdealRecord {
            n: b.n,
            p,
            q,
            s_plus: b.s_plus.iter().copied().collect(),
            s_minus: b.s_minus.iter().copied().collect(),
            generators: self.generators_direct(b),
            quasi_abelian: is_quasi_abelian(b),
            nd_plus: nd_plus(b),
            qnd: qnd_direct(b),
        }
    }
}

/// Serialized form of one basic ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub n: usize,
    pub p: DyckPath,
    pub q: DyckPath,
    pub s_plus: Vec<Interval>,
    pub s_minus: Vec<Interval>,
    pub generators: usize,
    pub quasi_abelian: bool,
    pub nd_plus: usize,
    pub qnd: usize,
}

impl IdealRecord {
    pub fn ideal(&self) -> Result<BasicIdeal> {
        BasicIdeal::new(self.n, self.s_plus.iter().copied().collect(), self.s_minus.iter().copied().collect())
    }
}
