//! Exact square matrices over the non-negative integers, the column operator
//! `tau`, the block-sum operator `omega`, the entrywise dot product and the
//! recursively defined Catalan-cell matrices `C_n`.
//!
//! Entries are arbitrary precision, so nothing here can overflow.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An `n x n` matrix of exact non-negative integers.
///
/// Indices in the public API are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigUint>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix { n, entries: vec![BigUint::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.set(i, i, 1u32);
        }
        m
    }

    /// Builds a matrix from rows. Fails unless the rows form a square.
    pub fn from_rows<T: Into<BigUint> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(ExactMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index ({i},{j}) out of range 1..={}", self.n);
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Entry `(i, j)` or zero when either index falls outside `1..=n`.
    pub fn get_or_zero(&self, i: usize, j: usize) -> BigUint {
        if (1..=self.n).contains(&i) && (1..=self.n).contains(&j) {
            self.get(i, j).clone()
        } else {
            BigUint::zero()
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigUint>) {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + (j - 1)] = value.into();
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn total(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                t.set(i, j, self.get(j, i).clone());
            }
        }
        t
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { n: self.n, entries })
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())).finish()
    }
}

/// Rows on separate lines, columns right-aligned to a common width.
impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.n.max(1)).take(self.n) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// `(tau A)_{i,j} = sum_{s = i-1}^{n} a_{s,j}` with `a_{0,j} = 0`.
pub fn tau(a: &ExactMatrix) -> ExactMatrix {
    let n = a.size();
    let mut out = ExactMatrix::zero(n);
    for j in 1..=n {
        // suffix[s] = sum of rows s..=n in column j
        let mut suffix = vec![BigUint::zero(); n + 2];
        for s in (1..=n).rev() {
            suffix[s] = &suffix[s + 1] + a.get(s, j);
        }
        for i in 1..=n {
            out.set(i, j, suffix[i.saturating_sub(1).max(1)].clone());
        }
    }
    out
}

/// `(omega A)_{i,j}` is the sum of the bottom-right block of `A` with rows
/// `max(1, n-j)..=n` and columns `max(1, n-i)..=n`.
///
/// This orientation reproduces the worked 3x3 example; the other one gives
/// its transpose. The two agree on symmetric input, in particular on every `C_n`.
pub fn omega(a: &ExactMatrix) -> ExactMatrix {
    let n = a.size();
    // block[k][m] = sum of a over rows k..=n, columns m..=n
    let mut block = vec![vec![BigUint::zero(); n + 2]; n + 2];
    for k in (1..=n).rev() {
        for m in (1..=n).rev() {
            let v = a.get(k, m) + &block[k + 1][m] + &block[k][m + 1];
            block[k][m] = v - &block[k + 1][m + 1];
        }
    }
    let mut out = ExactMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            out.set(i, j, block[(n - j).max(1)][(n - i).max(1)].clone());
        }
    }
    out
}

/// `A . B = sum_{i,j} a_{i,j} b_{i,j}`.
pub fn dot(a: &ExactMatrix, b: &ExactMatrix) -> Result<BigUint> {
    a.check_same_size(b)?;
    Ok(a.entries.iter().zip(&b.entries).map(|(x, y)| x * y).sum())
}

/// Block-diagonal composition `A ⊕ B`.
pub fn direct_sum(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (na, nb) = (a.size(), b.size());
    let mut out = ExactMatrix::zero(na + nb);
    for i in 1..=na {
        for j in 1..=na {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 1..=nb {
        for j in 1..=nb {
            out.set(na + i, na + j, b.get(i, j).clone());
        }
    }
    out
}

/// `C_1 = (1)`, `C_{n+1} = (tau C_n) ⊕ C_1`.
///
/// Entry `(i, j)` counts Dyck paths of semilength `n` whose first peak has
/// height `i` and whose last peak has height `j`.
pub fn catalan_matrix(n: usize) -> Result<ExactMatrix> {
    if n == 0 {
        return Err(Error::Precondition("catalan_matrix needs n >= 1".into()));
    }
    let one = ExactMatrix::identity(1);
    let mut c = one.clone();
    for _ in 1..n {
        c = direct_sum(&tau(&c), &one);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> ExactMatrix {
        ExactMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    // Nested-loop evaluation of the omega double sum, kept separate from the
    // suffix-sum implementation above.
    fn omega_oracle(a: &ExactMatrix) -> ExactMatrix {
        let n = a.size();
        let mut out = ExactMatrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                let mut s = BigUint::zero();
                for k in (n - j)..=n {
                    for l in (n - i)..=n {
                        s += a.get_or_zero(k, l);
                    }
                }
                out.set(i, j, s);
            }
        }
        out
    }

    #[test]
    fn tau_display_example() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(tau(&a), m(&[&[12, 15, 18], &[12, 15, 18], &[11, 13, 15]]));
        assert_eq!(tau(&ExactMatrix::zero(1)), ExactMatrix::zero(1));
        assert_eq!(tau(&m(&[&[1]])), m(&[&[1]]));
    }

    #[test]
    fn omega_display_example() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(omega(&a), m(&[&[28, 33, 33], &[39, 45, 45], &[39, 45, 45]]));
        assert_eq!(omega(&ExactMatrix::identity(2)), omega_oracle(&ExactMatrix::identity(2)));
        assert_eq!(omega(&ExactMatrix::identity(2)), m(&[&[2, 2], &[2, 2]]));
        assert_eq!(omega(&m(&[&[17]])), m(&[&[17]]));
    }

    #[test]
    fn omega_commutes_with_transpose() {
        let a = m(&[&[1, 0, 4, 2], &[3, 3, 0, 1], &[0, 5, 2, 2], &[7, 1, 1, 0]]);
        assert_eq!(omega(&a.transpose()), omega(&a).transpose());
        assert_eq!(omega(&a), omega_oracle(&a));
    }

    #[test]
    fn omega_matches_oracle_on_catalan_matrices() {
        for n in 1..=9 {
            let c = catalan_matrix(n).unwrap();
            assert_eq!(omega(&c), omega_oracle(&c), "n = {n}");
        }
    }

    #[test]
    fn dot_examples() {
        let i2 = ExactMatrix::identity(2);
        assert_eq!(dot(&i2, &m(&[&[2, 2], &[2, 2]])).unwrap(), BigUint::from(4u32));
        assert_eq!(dot(&i2, &ExactMatrix::zero(2)).unwrap(), BigUint::zero());
        let c1 = catalan_matrix(1).unwrap();
        assert_eq!(dot(&c1, &omega(&c1)).unwrap(), BigUint::from(1u32));
        assert_eq!(dot(&i2, &ExactMatrix::zero(3)), Err(Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn direct_sum_examples() {
        let one = m(&[&[1]]);
        assert_eq!(direct_sum(&one, &one), ExactMatrix::identity(2));
        let c2 = catalan_matrix(2).unwrap();
        assert_eq!(direct_sum(&tau(&c2), &one), catalan_matrix(3).unwrap());
        assert_eq!(direct_sum(&ExactMatrix::zero(1), &ExactMatrix::zero(1)), ExactMatrix::zero(2));
    }

    #[test]
    fn printed_small_matrices() {
        assert_eq!(catalan_matrix(1).unwrap(), m(&[&[1]]));
        assert_eq!(catalan_matrix(3).unwrap(), m(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(
            catalan_matrix(5).unwrap(),
            m(&[&[5, 5, 3, 1, 0], &[5, 5, 3, 1, 0], &[3, 3, 2, 1, 0], &[1, 1, 1, 1, 0], &[0, 0, 0, 0, 1]])
        );
        assert!(catalan_matrix(0).is_err());
    }

    #[test]
    fn last_row_and_column_are_unit_vectors() {
        for n in 2..=12 {
            let c = catalan_matrix(n).unwrap();
            assert_eq!(c.get(n, n), &BigUint::from(1u32));
            for k in 1..n {
                assert!(c.get(k, n).is_zero() && c.get(n, k).is_zero());
            }
        }
    }

    #[test]
    fn display_is_right_aligned() {
        let c = catalan_matrix(3).unwrap();
        assert_eq!(c.to_string(), "1 1 0\n1 1 0\n0 0 1\n");
        let a = m(&[&[10, 2], &[3, 4]]);
        assert_eq!(a.to_string(), "10  2\n 3  4\n");
    }

    #[test]
    fn handles_values_beyond_u64() {
        let c = catalan_matrix(40).unwrap();
        let big = dot(&c, &c).unwrap();
        assert!(big > BigUint::from(u64::MAX));
        assert!(c.is_symmetric());
    }
}
