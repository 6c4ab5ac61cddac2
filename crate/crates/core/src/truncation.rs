//! Finite truncations of the loop algebra `sl_n ⊗ C[t]`, used as an
//! independent bracket oracle for ideal and support computations.
//!
//! An element is a sparse combination of `E_{i,j} ⊗ t^d` (indices 1-based).
//! Brackets follow `[X t^a, Y t^b] = [X, Y] t^(a+b)`, after which every term
//! outside the kept part of the quotient is dropped.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `(t-degree, row, column)`.
pub type Term = (u32, usize, usize);

/// Which quotient of the positive loop algebra is materialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// Degree 0 strictly upper triangular, degree 1 lower triangular with
    /// diagonal. Everything at or above the first shifted window is dropped.
    Window,
    /// Two windows: degree 0 strictly upper, all of degree 1, and degree 2
    /// lower triangular with diagonal.
    TwoWindows,
}

impl Truncation {
    pub fn keeps(self, (d, i, j): Term) -> bool {
        match (self, d) {
            (_, 0) => i < j,
            (Truncation::Window, 1) => i >= j,
            (Truncation::TwoWindows, 1) => true,
            (Truncation::TwoWindows, 2) => i >= j,
            _ => false,
        }
    }

    fn basis(self, n: usize) -> Vec<Term> {
        let mut out = Vec::new();
        for d in 0..=2 {
            for i in 1..=n {
                for j in 1..=n {
                    if self.keeps((d, i, j)) {
                        out.push((d, i, j));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoopElement {
    terms: BTreeMap<Term, i64>,
}

impl LoopElement {
    pub fn zero() -> Self {
        LoopElement::default()
    }

    /// `E_{i,j} ⊗ t^d`.
    pub fn unit(d: u32, i: usize, j: usize) -> Self {
        LoopElement { terms: BTreeMap::from([((d, i, j), 1)]) }
    }

    /// `diag(c_1, ..., c_n) ⊗ t^d`.
    pub fn diagonal(d: u32, coeffs: &[i64]) -> Self {
        let terms = coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| ((d, i + 1, i + 1), *c)).collect();
        LoopElement { terms }
    }

    pub fn scaled(mut self, c: i64) -> Self {
        if c == 0 {
            return LoopElement::zero();
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &i64)> {
        self.terms.iter()
    }

    fn add_term(&mut self, t: Term, c: i64) -> Result<()> {
        let e = self.terms.entry(t).or_insert(0);
        *e = e.checked_add(c).ok_or_else(|| Error::Overflow("loop algebra coefficient".into()))?;
        if *e == 0 {
            self.terms.remove(&t);
        }
        Ok(())
    }

    /// Bracket in the given truncation.
    pub fn bracket(&self, other: &LoopElement, kind: Truncation) -> Result<LoopElement> {
        let mut out = LoopElement::zero();
        for (&(a, i, j), &x) in &self.terms {
            for (&(b, k, l), &y) in &other.terms {
                let c = x.checked_mul(y).ok_or_else(|| Error::Overflow("loop algebra coefficient".into()))?;
                let d = a + b;
                if j == k && kind.keeps((d, i, l)) {
                    out.add_term((d, i, l), c)?;
                }
                if l == i && kind.keeps((d, k, j)) {
                    out.add_term((d, k, j), -c)?;
                }
            }
        }
        Ok(out)
    }
}

/// Diagonal `e_i - e_{j+1}`: the coroot of the interval root `[i, j]`.
pub fn interval_coroot(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] += 1;
    v[j] -= 1;
    v
}

/// `n (e_1 + ... + e_m) - m I`, an integer multiple of the fundamental
/// coweight dual to `α_m`.
pub fn scaled_fundamental_coweight(n: usize, m: usize) -> Vec<i64> {
    (1..=n).map(|k| if k <= m { (n - m) as i64 } else { -(m as i64) }).collect()
}

/// Chevalley generators of the affine Borel: Cartan `h_i`, `e_i ⊗ 1` and
/// `f_θ ⊗ t`.
pub fn borel_generators(n: usize) -> Vec<LoopElement> {
    let mut g = Vec::new();
    for i in 1..n {
        g.push(LoopElement::diagonal(0, &interval_coroot(n, i, i)));
        g.push(LoopElement::unit(0, i, i + 1));
    }
    if n >= 2 {
        g.push(LoopElement::unit(1, n, 1));
    }
    g
}

/// A subspace of a truncated quotient, kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Span {
    kind: Truncation,
    index: HashMap<Term, usize>,
    dim: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(n: usize, kind: Truncation) -> Self {
        let basis = kind.basis(n);
        let dim = basis.len();
        let index = basis.into_iter().enumerate().map(|(k, t)| (t, k)).collect();
        Span { kind, index, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(n: usize, kind: Truncation, vectors: &[LoopElement]) -> Self {
        let mut s = Span::new(n, kind);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn kind(&self) -> Truncation {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn coords(&self, x: &LoopElement) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim];
        for (t, c) in x.terms() {
            if let Some(&k) = self.index.get(t) {
                v[k] = BigRational::from_integer(BigInt::from(*c));
            }
        }
        v
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, x: &LoopElement) -> bool {
        self.reduce(self.coords(x)).iter().all(Zero::is_zero)
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, x: &LoopElement) -> bool {
        let mut v = self.reduce(self.coords(x));
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / v[p].clone();
        for c in v.iter_mut() {
            *c *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (r, x) in row.iter_mut().zip(&v) {
                    *r -= &f * x;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// True iff `[g, x]` stays in the span of `vectors` for every Borel
/// generator `g` and every spanning vector `x`.
pub fn is_borel_stable(n: usize, kind: Truncation, vectors: &[LoopElement]) -> Result<bool> {
    let span = Span::spanned_by(n, kind, vectors);
    for g in borel_generators(n) {
        for x in vectors {
            if !span.contains(&g.bracket(x, kind)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether all pairwise brackets of the spanning vectors vanish in the quotient.
pub fn brackets_vanish(kind: Truncation, vectors: &[LoopElement]) -> Result<bool> {
    for (a, x) in vectors.iter().enumerate() {
        for y in &vectors[a + 1..] {
            if !x.bracket(y, kind)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Least `m` with `I^m = 0` in the quotient, where `I^0 = I` and
/// `I^(m+1) = [I^m, I]`. Returns 0 for the zero span.
pub fn lower_central_length(n: usize, kind: Truncation, vectors: &[LoopElement]) -> Result<usize> {
    let base: Vec<LoopElement> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut current = base.clone();
    let mut m = 0;
    loop {
        let span = Span::spanned_by(n, kind, &current);
        if span.rank() == 0 {
            return Ok(m);
        }
        m += 1;
        let mut next_span = Span::new(n, kind);
        let mut next = Vec::new();
        for x in &current {
            for y in &base {
                let z = x.bracket(y, kind)?;
                if next_span.insert(&z) {
                    next.push(z);
                }
            }
        }
        current = next;
    }
}
