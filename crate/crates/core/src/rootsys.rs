//! Finite root systems built from Cartan data, and the window
//! `D = Δ₊ ∪ {δ} ∪ (−Δ₊ + δ)` of the untwisted affinization with its two
//! partial orders.
//!
//! Roots are coordinate vectors over the simple roots. Cartan entries follow
//! `a_ij = <α_i^∨, α_j>`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Root = Vec<i64>;

const MAX_ROOTS: usize = 10_000;

#[derive(Clone, Debug)]
pub struct FiniteRootSystem {
    label: String,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    highest_root: Root,
}

/// Parses labels like `A5`, `B3`, `G2`, `E6`.
pub fn cartan_for_label(label: &str) -> Result<Vec<Vec<i64>>> {
    let unknown = || Error::UnknownType(label.to_string());
    let mut chars = label.chars();
    let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let chain = |k: usize| {
        let mut a = vec![vec![0i64; k]; k];
        for i in 0..k {
            a[i][i] = 2;
            if i + 1 < k {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    let exceptional_e = |k: usize| {
        let mut a = vec![vec![0i64; k]; k];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        link(&mut a, 1, 3);
        link(&mut a, 2, 4);
        for i in 3..k {
            link(&mut a, i, i + 1);
        }
        a
    };
    match (family, rank) {
        ('A', k) if k >= 1 => Ok(chain(k)),
        ('B', k) if k >= 2 => {
            let mut a = chain(k);
            a[k - 1][k - 2] = -2;
            Ok(a)
        }
        ('C', k) if k >= 2 => {
            let mut a = chain(k);
            a[k - 2][k - 1] = -2;
            Ok(a)
        }
        ('D', k) if k >= 4 => {
            let mut a = chain(k);
            a[k - 2][k - 1] = 0;
            a[k - 1][k - 2] = 0;
            link(&mut a, k - 2, k);
            Ok(a)
        }
        ('E', 6) => Ok(exceptional_e(6)),
        #[cfg(feature = "e7e8")]
        ('E', 7) => Ok(exceptional_e(7)),
        #[cfg(feature = "e7e8")]
        ('E', 8) => Ok(exceptional_e(8)),
        ('F', 4) => {
            let mut a = chain(4);
            a[2][1] = -2;
            Ok(a)
        }
        ('G', 2) => Ok(vec![vec![2, -3], vec![-1, 2]]),
        _ => Err(unknown()),
    }
}

/// Number of positive roots for a label, from the classification tables.
pub fn expected_positive_root_count(label: &str) -> Option<usize> {
    let family = label.chars().next()?.to_ascii_uppercase();
    let k: usize = label[1..].parse().ok()?;
    match (family, k) {
        ('A', k) => Some(k * (k + 1) / 2),
        ('B', k) | ('C', k) => Some(k * k),
        ('D', k) => Some(k * (k - 1)),
        ('E', 6) => Some(36),
        ('E', 7) => Some(63),
        ('E', 8) => Some(120),
        ('F', 4) => Some(24),
        ('G', 2) => Some(6),
        _ => None,
    }
}

fn check_cartan(a: &[Vec<i64>]) -> Result<()> {
    let k = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != k {
            return Err(Error::NotFiniteType(format!("row {} has length {}, expected {k}", i + 1, row.len())));
        }
        if row[i] != 2 {
            return Err(Error::NotFiniteType(format!("diagonal entry ({0},{0}) is {1}", i + 1, row[i])));
        }
        for j in 0..k {
            if i != j && (row[j] > 0 || (row[j] == 0) != (a[j][i] == 0)) {
                return Err(Error::NotFiniteType(format!("off-diagonal entries ({},{}) are not a Cartan pattern", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

impl FiniteRootSystem {
    pub fn from_label(label: &str) -> Result<Self> {
        let mut rs = Self::from_cartan(cartan_for_label(label)?)?;
        rs.label = label.to_ascii_uppercase();
        Ok(rs)
    }

    /// Type `A_k`, also accepting `k = 0` (no roots at all).
    pub fn type_a(k: usize) -> Self {
        if k == 0 {
            return FiniteRootSystem {
                label: "A0".into(),
                cartan: Vec::new(),
                positive_roots: Vec::new(),
                root_index: HashMap::new(),
                highest_root: Vec::new(),
            };
        }
        Self::from_label(&format!("A{k}")).expect("type A is always finite")
    }

    /// Closes the simple roots under root strings. Roots are produced by
    /// height, ties broken lexicographically.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        check_cartan(&cartan)?;
        let k = cartan.len();
        if k == 0 {
            return Err(Error::NotFiniteType("empty Cartan matrix".into()));
        }
        let unit = |i: usize| {
            let mut v = vec![0i64; k];
            v[i] = 1;
            v
        };
        let mut roots: Vec<Root> = (0..k).map(unit).collect();
        let mut known: BTreeSet<Root> = roots.iter().cloned().collect();
        let mut layer = roots.clone();
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for beta in &layer {
                for i in 0..k {
                    let pairing: i64 = (0..k).map(|j| cartan[i][j] * beta[j]).sum();
                    let mut down = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains(&probe) {
                            down += 1;
                        } else {
                            break;
                        }
                    }
                    if down - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            if known.len() + next.len() > MAX_ROOTS {
                return Err(Error::NotFiniteType(format!("root closure exceeded {MAX_ROOTS} roots")));
            }
            known.extend(next.iter().cloned());
            roots.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        let highest_root = roots.last().cloned().expect("at least the simple roots");
        if !roots.iter().all(|r| r.iter().zip(&highest_root).all(|(a, b)| a <= b)) {
            return Err(Error::NotFiniteType("no unique highest root (reducible input?)".into()));
        }
        let root_index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(FiniteRootSystem { label: "custom".into(), cartan, positive_roots: roots, root_index, highest_root })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v)
    }

    /// True when `v` is a root, positive or negative.
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.is_positive_root(v) {
            return true;
        }
        let neg: Root = v.iter().map(|x| -x).collect();
        self.is_positive_root(&neg)
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }
}

/// Elements of the window `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WindowRoot {
    /// `α` for a positive root, by index into the positive root list
    Pos(usize),
    Delta,
    /// `−α + δ`
    NegShift(usize),
}

impl WindowRoot {
    /// `(finite part, δ-coefficient)`.
    pub fn coords(&self, rs: &FiniteRootSystem) -> (Root, i64) {
        match *self {
            WindowRoot::Pos(a) => (rs.positive_roots[a].clone(), 0),
            WindowRoot::Delta => (vec![0; rs.rank()], 1),
            WindowRoot::NegShift(a) => (rs.positive_roots[a].iter().map(|x| -x).collect(), 1),
        }
    }

    pub fn label(&self, rs: &FiniteRootSystem) -> String {
        let vec = |a: usize| rs.positive_roots[a].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match *self {
            WindowRoot::Pos(a) => format!("({})", vec(a)),
            WindowRoot::Delta => "delta".into(),
            WindowRoot::NegShift(a) => format!("-({})+delta", vec(a)),
        }
    }
}

/// Square boolean relation; `get(a, b)` means `a R b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<FixedBitSet>,
}

impl Relation {
    pub fn empty(size: usize) -> Self {
        Relation { rows: vec![FixedBitSet::with_capacity(size); size] }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        self.rows[a].set(b, value);
    }

    /// Reflexive-transitive closure (Warshall, row-wise bit unions).
    pub fn closure(&self) -> Relation {
        let mut r = self.clone();
        let n = r.size();
        for a in 0..n {
            r.rows[a].insert(a);
        }
        for k in 0..n {
            let row_k = r.rows[k].clone();
            for a in 0..n {
                if r.rows[a].contains(k) {
                    r.rows[a].union_with(&row_k);
                }
            }
        }
        r
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| self.get(a, a))
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.get(a, b) && self.get(b, a))))
            && (0..n).all(|a| self.rows[a].ones().all(|b| self.rows[b].is_subset(&self.rows[a])))
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }
}

/// The window `D` with the natural order `≤` and the closure order `⪯`.
///
/// Elements are listed as `Pos` (root order), then `Delta`, then `NegShift`.
#[derive(Clone, Debug)]
pub struct WindowPoset {
    elements: Vec<WindowRoot>,
    leq: Relation,
    preceq: Relation,
}

impl WindowPoset {
    pub fn new(rs: &FiniteRootSystem) -> Self {
        let m = rs.positive_roots().len();
        let mut elements: Vec<WindowRoot> = (0..m).map(WindowRoot::Pos).collect();
        elements.push(WindowRoot::Delta);
        elements.extend((0..m).map(WindowRoot::NegShift));
        let coords: Vec<(Root, i64)> = elements.iter().map(|e| e.coords(rs)).collect();
        let theta = rs.highest_root();
        let size = elements.len();
        let mut leq = Relation::empty(size);
        let mut step = Relation::empty(size);
        for a in 0..size {
            for b in 0..size {
                let w: Root = coords[b].0.iter().zip(&coords[a].0).map(|(y, x)| y - x).collect();
                let e = coords[b].1 - coords[a].1;
                // y - x = Σ c_i α_i + e α_0 with α_0 = δ - θ
                if e >= 0 && w.iter().zip(theta).all(|(wi, ti)| wi + e * ti >= 0) {
                    leq.set(a, b, true);
                }
                let affine_positive = match e {
                    0 => rs.is_positive_root(&w),
                    1 => w.iter().all(|x| *x == 0) || rs.is_root(&w),
                    _ => false,
                };
                if affine_positive {
                    step.set(a, b, true);
                }
            }
        }
        WindowPoset { elements, leq: leq.closure(), preceq: step.closure() }
    }

    /// Assembles a poset from explicit tables; both must match the element count.
    pub fn from_tables(elements: Vec<WindowRoot>, leq: Relation, preceq: Relation) -> Result<Self> {
        if leq.size() != elements.len() || preceq.size() != elements.len() {
            return Err(Error::DimensionMismatch { left: elements.len(), right: leq.size().max(preceq.size()) });
        }
        Ok(WindowPoset { elements, leq, preceq })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WindowRoot] {
        &self.elements
    }

    pub fn position(&self, x: WindowRoot) -> Option<usize> {
        self.elements.iter().position(|e| *e == x)
    }

    pub fn delta_index(&self) -> usize {
        self.position(WindowRoot::Delta).expect("window always contains delta")
    }

    pub fn leq_table(&self) -> &Relation {
        &self.leq
    }

    pub fn preceq_table(&self) -> &Relation {
        &self.preceq
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    pub fn preceq(&self, a: usize, b: usize) -> bool {
        self.preceq.get(a, b)
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.preceq(a, b) || self.preceq(b, a)
    }

    pub fn is_antichain(&self, s: &BTreeSet<usize>) -> bool {
        s.iter().all(|&a| s.iter().all(|&b| a == b || !self.comparable(a, b)))
    }

    /// All nonempty `⪯`-antichains, each as a sorted index set.
    pub fn antichains(&self) -> Vec<BTreeSet<usize>> {
        let n = self.len();
        // later[a] = elements after a that are incomparable to a
        let incomparable: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(n);
                for b in a + 1..n {
                    if !self.comparable(a, b) {
                        s.insert(b);
                    }
                }
                s
            })
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        fn go(
            candidates: &FixedBitSet,
            incomparable: &[FixedBitSet],
            current: &mut Vec<usize>,
            out: &mut Vec<BTreeSet<usize>>,
        ) {
            for a in candidates.ones() {
                current.push(a);
                out.push(current.iter().copied().collect());
                let mut next = candidates.clone();
                next.intersect_with(&incomparable[a]);
                go(&next, incomparable, current, out);
                current.pop();
            }
        }
        go(&all, &incomparable, &mut current, &mut out);
        out
    }

    /// `{β : α ⪯ β for some α ∈ s}`.
    pub fn coideal_of(&self, s: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        if !self.is_antichain(s) {
            return Err(Error::NotAntichain(format!("{s:?}")));
        }
        Ok((0..self.len()).filter(|&b| s.iter().any(|&a| self.preceq(a, b))).collect())
    }

    pub fn is_upward_closed(&self, u: &BTreeSet<usize>) -> bool {
        u.iter().all(|&a| (0..self.len()).all(|b| !self.preceq(a, b) || u.contains(&b)))
    }

    pub fn minimal_elements(&self, u: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        if !self.is_upward_closed(u) {
            return Err(Error::NotUpwardClosed(format!("{u:?}")));
        }
        Ok(u.iter().copied().filter(|&b| !u.iter().any(|&a| a != b && self.preceq(a, b))).collect())
    }

    /// Cover relations of `⪯` as adjacency lists.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| {
                        a != b && self.preceq(a, b) && !(0..n).any(|c| c != a && c != b && self.preceq(a, c) && self.preceq(c, b))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn covers_json(&self, rs: &FiniteRootSystem) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            element: String,
            covered_by: Vec<String>,
        }
        let labels: Vec<String> = self.elements.iter().map(|e| e.label(rs)).collect();
        let covers: Vec<Entry> = self
            .covers()
            .into_iter()
            .enumerate()
            .map(|(a, up)| Entry { element: labels[a].clone(), covered_by: up.into_iter().map(|b| labels[b].clone()).collect() })
            .collect();
        serde_json::json!({ "system": rs.label(), "elements": labels, "covers": covers })
    }
}

/// True iff the two orders agree on every pair.
pub fn order_coincidence_check(p: &WindowPoset) -> bool {
    p.leq == p.preceq
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDecomposition {
    pub xi: Root,
    pub zeta: Root,
    pub eta: Root,
}

impl fmt::Display for RootDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi={:?} zeta={:?} eta={:?}", self.xi, self.zeta, self.eta)
    }
}

/// Decompositions `θ = ξ + ζ + η` with `ξ, ζ ∈ Δ₊`, `ξ + ζ ∉ Δ₊`, `η` a
/// nonzero non-negative combination of simple roots, and `ξ + α_i ∉ Δ₊`,
/// `ζ + α_i ∉ Δ₊` for every simple `α_i` occurring in `η`.
pub fn lemma6_search(rs: &FiniteRootSystem) -> Vec<RootDecomposition> {
    let roots = rs.positive_roots();
    let theta = rs.highest_root();
    let k = rs.rank();
    let plus_simple = |r: &Root, i: usize| {
        let mut v = r.clone();
        v[i] += 1;
        rs.is_positive_root(&v)
    };
    roots
        .par_iter()
        .flat_map_iter(|xi| {
            roots.iter().filter_map(move |zeta| {
                let eta: Root = (0..k).map(|i| theta[i] - xi[i] - zeta[i]).collect();
                if eta.iter().any(|&c| c < 0) || eta.iter().all(|&c| c == 0) {
                    return None;
                }
                let sum: Root = xi.iter().zip(zeta).map(|(a, b)| a + b).collect();
                if rs.is_positive_root(&sum) {
                    return None;
                }
                let blocked = (0..k).filter(|&i| eta[i] > 0).all(|i| !plus_simple(xi, i) && !plus_simple(zeta, i));
                blocked.then(|| RootDecomposition { xi: xi.clone(), zeta: zeta.clone(), eta })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts_and_highest_roots() {
        let cases: &[(&str, &[i64])] = &[
            ("A2", &[1, 1]),
            ("A5", &[1, 1, 1, 1, 1]),
            ("B3", &[1, 2, 2]),
            ("C3", &[2, 2, 1]),
            ("D4", &[1, 2, 1, 1]),
            ("G2", &[3, 2]),
            ("F4", &[2, 3, 4, 2]),
            ("E6", &[1, 2, 2, 3, 2, 1]),
        ];
        for (label, theta) in cases {
            let rs = FiniteRootSystem::from_label(label).unwrap();
            assert_eq!(rs.highest_root(), &theta.to_vec(), "{label}");
            assert_eq!(Some(rs.positive_roots().len()), expected_positive_root_count(label), "{label}");
        }
        for k in 1..=7 {
            assert_eq!(FiniteRootSystem::from_label(&format!("A{k}")).unwrap().positive_roots().len(), k * (k + 1) / 2);
        }
    }

    #[cfg(feature = "e7e8")]
    #[test]
    fn e7_e8_tables() {
        let e7 = FiniteRootSystem::from_label("E7").unwrap();
        assert_eq!(e7.positive_roots().len(), 63);
        assert_eq!(e7.highest_root(), &vec![2, 2, 3, 4, 3, 2, 1]);
        let e8 = FiniteRootSystem::from_label("E8").unwrap();
        assert_eq!(e8.positive_roots().len(), 120);
        assert_eq!(e8.highest_root(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FiniteRootSystem::from_label("Q3"), Err(Error::UnknownType(_))));
        assert!(FiniteRootSystem::from_label("B1").is_err());
        let affine_a1 = vec![vec![2, -2], vec![-2, 2]];
        assert!(matches!(FiniteRootSystem::from_cartan(affine_a1), Err(Error::NotFiniteType(_))));
        assert!(FiniteRootSystem::from_cartan(vec![vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn window_sizes_and_delta_maximum() {
        for label in ["A1", "A2", "A4", "B3", "C3", "G2"] {
            let rs = FiniteRootSystem::from_label(label).unwrap();
            let w = WindowPoset::new(&rs);
            assert_eq!(w.len(), 2 * rs.positive_roots().len() + 1);
            let d = w.delta_index();
            assert!((0..w.len()).all(|a| w.preceq(a, d)));
            assert!(w.leq_table().is_partial_order() && w.preceq_table().is_partial_order());
            assert!(w.preceq_table().is_subset(w.leq_table()));
        }
    }

    #[test]
    fn one_step_through_affine_simple_root() {
        let rs = FiniteRootSystem::from_label("A2").unwrap();
        let w = WindowPoset::new(&rs);
        let a1 = rs.index_of(&[1, 0]).unwrap();
        let a2 = rs.index_of(&[0, 1]).unwrap();
        let x = w.position(WindowRoot::Pos(a1)).unwrap();
        let y = w.position(WindowRoot::NegShift(a2)).unwrap();
        assert!(w.preceq(x, y));
        let z = w.position(WindowRoot::NegShift(a1)).unwrap();
        assert!(!w.preceq(x, z));
    }

    #[test]
    fn antichains_and_coideals() {
        let rs = FiniteRootSystem::from_label("A1").unwrap();
        let w = WindowPoset::new(&rs);
        assert_eq!(w.antichains().len(), 4);
        let d = BTreeSet::from([w.delta_index()]);
        assert_eq!(w.coideal_of(&d).unwrap(), d);
        for label in ["A2", "A3"] {
            let w = WindowPoset::new(&FiniteRootSystem::from_label(label).unwrap());
            for s in w.antichains() {
                assert_eq!(w.minimal_elements(&w.coideal_of(&s).unwrap()).unwrap(), s);
            }
        }
        let bad: BTreeSet<usize> = BTreeSet::from([0, w.delta_index()]);
        assert!(matches!(w.coideal_of(&bad), Err(Error::NotAntichain(_))));
        assert!(matches!(w.minimal_elements(&BTreeSet::from([0])), Err(Error::NotUpwardClosed(_))));
    }

    #[test]
    fn orders_coincide_and_corruption_is_caught() {
        for label in ["A1", "A3", "B3", "C3", "G2"] {
            let w = WindowPoset::new(&FiniteRootSystem::from_label(label).unwrap());
            assert!(order_coincidence_check(&w), "{label}");
        }
        let w = WindowPoset::new(&FiniteRootSystem::from_label("A2").unwrap());
        let mut preceq = w.preceq_table().clone();
        preceq.set(0, w.len() - 1, !preceq.get(0, w.len() - 1));
        let broken = WindowPoset::from_tables(w.elements().to_vec(), w.leq_table().clone(), preceq).unwrap();
        assert!(!order_coincidence_check(&broken));
    }

    #[test]
    fn no_forbidden_decompositions() {
        for label in ["A4", "D4", "F4", "G2", "B3", "C4"] {
            let rs = FiniteRootSystem::from_label(label).unwrap();
            assert!(lemma6_search(&rs).is_empty(), "{label}");
        }
    }

    #[test]
    fn cover_json_shape() {
        let rs = FiniteRootSystem::from_label("A1").unwrap();
        let w = WindowPoset::new(&rs);
        let v = w.covers_json(&rs);
        assert_eq!(v["elements"], serde_json::json!(["(1)", "delta", "-(1)+delta"]));
        assert_eq!(v["covers"][0]["covered_by"], serde_json::json!(["delta"]));
        assert_eq!(v["covers"][1]["covered_by"], serde_json::json!([]));
    }
}
