//! Supports of arbitrary nonzero ideals of the affine Borel of `sl_n^`
//! inside its nilradical.
//!
//! An ideal of level `l` has support determined by four root sets,
//! recorded as Dyck paths through the grid model of [`crate::ideals`]:
//! `p` for positive roots at `(l-1)δ`, `q` for negative roots at `lδ`,
//! `p'` for positive roots at `lδ` and `q'` for negative roots at `(l+1)δ`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyck::{enumerate, DyckPath};
use crate::error::{Error, Result};
use crate::ideals::{phi, s_minus_of_path, s_plus_of_path, BasicIdeal, Interval};
use crate::truncation::{interval_coroot, is_borel_stable, scaled_fundamental_coweight, LoopElement, Truncation};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SupportQuadruple {
    pub p: DyckPath,
    pub q: DyckPath,
    pub p_prime: DyckPath,
    pub q_prime: DyckPath,
}

impl SupportQuadruple {
    pub fn new(p: DyckPath, q: DyckPath, p_prime: DyckPath, q_prime: DyckPath) -> Result<Self> {
        let n = p.semilength();
        for x in [&q, &p_prime, &q_prime] {
            if x.semilength() != n {
                return Err(Error::SemilengthMismatch { left: n, right: x.semilength() });
            }
        }
        Ok(SupportQuadruple { p, q, p_prime, q_prime })
    }

    pub fn parse(words: [&str; 4]) -> Result<Self> {
        let [a, b, c, d] = words.map(DyckPath::parse);
        Self::new(a?, b?, c?, d?)
    }

    pub fn n(&self) -> usize {
        self.p.semilength()
    }

    /// The quadruple of the level-1 ideal with the same support as a basic ideal.
    pub fn of_basic(b: &BasicIdeal) -> Self {
        let pair = phi(b);
        let n = b.n();
        SupportQuadruple { p: pair.p, q: pair.q, p_prime: DyckPath::staircase(n), q_prime: DyckPath::top(n) }
    }
}

impl fmt::Display for SupportQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.p, self.q, self.p_prime, self.q_prime)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SupportCase {
    I,
    II,
    III,
    IV,
    /// The single class at `n = 1`.
    #[serde(rename = "trivial")]
    Trivial,
}

impl SupportCase {
    pub const ALL: [SupportCase; 4] = [SupportCase::I, SupportCase::II, SupportCase::III, SupportCase::IV];
}

impl fmt::Display for SupportCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SupportCase::I => "I",
            SupportCase::II => "II",
            SupportCase::III => "III",
            SupportCase::IV => "IV",
            SupportCase::Trivial => "trivial",
        };
        f.write_str(s)
    }
}

fn valley0_mask(p: &DyckPath) -> u64 {
    p.valley_xs_at(0).into_iter().fold(0, |m, x| m | (1u64 << x))
}

fn m_mask(p: &DyckPath) -> u64 {
    p.m_set().into_iter().fold(0, |m, x| m | (1u64 << x))
}

/// Per-path data used by the classifier, indexed like `enumerate(n)`.
struct Table {
    n: usize,
    paths: Vec<DyckPath>,
    heights: Vec<Vec<u8>>,
    v0: Vec<u64>,
    m: Vec<u64>,
    bar: Vec<usize>,
    top: usize,
    stair: usize,
}

impl Table {
    fn new(n: usize) -> Self {
        let paths = enumerate(n);
        let find = |p: &DyckPath| paths.binary_search(p).expect("path of semilength n");
        Table {
            n,
            heights: paths.iter().map(|p| p.heights().into_iter().map(|h| h as u8).collect()).collect(),
            v0: paths.iter().map(valley0_mask).collect(),
            m: paths.iter().map(m_mask).collect(),
            bar: paths.iter().map(|p| find(&p.bar())).collect(),
            top: find(&DyckPath::top(n)),
            stair: find(&DyckPath::staircase(n)),
            paths,
        }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.heights[a].iter().zip(&self.heights[b]).all(|(x, y)| x <= y)
    }

    fn ends_mask(&self) -> u64 {
        (1u64 << 2) | (1u64 << (2 * self.n - 2))
    }

    /// Conditions (i)-(iv) for the quadruple of indices.
    fn conditions(&self, p: usize, q: usize, pp: usize, qq: usize) -> [bool; 4] {
        let (top, stair) = (self.top, self.stair);
        let v0pp = self.v0[pp];
        let count = v0pp.count_ones();
        let subset = |a: u64, b: u64| a & !b == 0;
        let c1 = p == top && qq == top && q == stair && count == 1;
        let c2 = p == top && q == stair && count > 1 && self.leq(self.bar[pp], qq);
        let ends_in_q = subset(self.ends_mask(), self.v0[q]);
        let c3 = p == top
            && q != stair
            && subset(self.m[q], v0pp)
            && self.leq(self.bar[pp], qq)
            && (qq == top || ends_in_q);
        let c4 = p != top && self.leq(self.bar[p], q) && subset(self.m[q] | self.ends_mask(), v0pp) && qq == top;
        [c1, c2, c3, c4]
    }

    fn index(&self, x: &DyckPath) -> usize {
        self.paths.binary_search(x).expect("path of semilength n")
    }
}

/// Truth values of conditions (i)-(iv). Requires `n >= 2`.
pub fn conditions(t: &SupportQuadruple) -> Result<[bool; 4]> {
    let n = t.n();
    if n < 2 {
        return Err(Error::Precondition("the four conditions are stated for n >= 2".into()));
    }
    let table = Table::new(n);
    let [a, b, c, d] = [&t.p, &t.q, &t.p_prime, &t.q_prime].map(|x| table.index(x));
    Ok(table.conditions(a, b, c, d))
}

fn case_of(flags: [bool; 4]) -> Option<SupportCase> {
    flags.iter().position(|&f| f).map(|k| SupportCase::ALL[k])
}

/// The case of an accepted quadruple, or `None` for a rejected one.
pub fn classify(t: &SupportQuadruple) -> Option<SupportCase> {
    if t.n() == 1 {
        return Some(SupportCase::Trivial);
    }
    case_of(conditions(t).expect("n >= 2"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedQuadruple {
    pub quadruple: SupportQuadruple,
    pub case: SupportCase,
}

/// Every accepted quadruple, ordered by the four words.
///
/// The loops follow the shape of the conditions: `p = 𝐩` splits on whether
/// `q` is the staircase, and `p ≠ 𝐩` forces `q' = 𝐩` and `q ≥ bar(p)`.
pub fn enumerate_classes(n: usize) -> Vec<ClassifiedQuadruple> {
    assert!(n >= 1);
    if n == 1 {
        let top = DyckPath::top(1);
        return vec![ClassifiedQuadruple {
            quadruple: SupportQuadruple { p: top.clone(), q: top.clone(), p_prime: top.clone(), q_prime: top },
            case: SupportCase::Trivial,
        }];
    }
    let t = Table::new(n);
    let len = t.paths.len();
    let indices: Vec<[usize; 4]> = (0..len)
        .into_par_iter()
        .flat_map_iter(|p| {
            let t = &t;
            let mut out = Vec::new();
            for q in 0..len {
                if p == t.top {
                    for pp in 0..len {
                        if q != t.stair && t.m[q] & !t.v0[pp] != 0 {
                            continue;
                        }
                        for qq in 0..len {
                            if t.conditions(p, q, pp, qq).iter().any(|&c| c) {
                                out.push([p, q, pp, qq]);
                            }
                        }
                    }
                } else if t.leq(t.bar[p], q) {
                    let need = t.m[q] | t.ends_mask();
                    for pp in 0..len {
                        if need & !t.v0[pp] == 0 {
                            out.push([p, q, pp, t.top]);
                        }
                    }
                }
            }
            out
        })
        .collect();
    indices
        .into_iter()
        .map(|[a, b, c, d]| {
            let case = case_of(t.conditions(a, b, c, d)).expect("generated quadruples are accepted");
            ClassifiedQuadruple {
                quadruple: SupportQuadruple {
                    p: t.paths[a].clone(),
                    q: t.paths[b].clone(),
                    p_prime: t.paths[c].clone(),
                    q_prime: t.paths[d].clone(),
                },
                case,
            }
        })
        .collect()
}

/// Exhaustive scan of all quadruples: per-case counts and the number of
/// quadruples meeting more than one condition. Requires `n >= 2`.
pub fn exhaustive_case_scan(n: usize) -> ([u64; 4], u64) {
    assert!(n >= 2);
    let t = Table::new(n);
    let len = t.paths.len();
    (0..len)
        .into_par_iter()
        .map(|p| {
            let mut counts = [0u64; 4];
            let mut overlaps = 0u64;
            for q in 0..len {
                for pp in 0..len {
                    for qq in 0..len {
                        let flags = t.conditions(p, q, pp, qq);
                        let hits = flags.iter().filter(|&&f| f).count();
                        if hits > 1 {
                            overlaps += 1;
                        }
                        if let Some(k) = flags.iter().position(|&f| f) {
                            counts[k] += 1;
                        }
                    }
                }
            }
            (counts, overlaps)
        })
        .reduce(
            || ([0; 4], 0),
            |(a, x), (b, y)| ([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], x + y),
        )
}

/// Number of accepted quadruples per case, in the order I, II, III, IV.
pub fn case_counts(classes: &[ClassifiedQuadruple]) -> [usize; 4] {
    let mut c = [0; 4];
    for x in classes {
        if let Some(k) = SupportCase::ALL.iter().position(|&s| s == x.case) {
            c[k] += 1;
        }
    }
    c
}

/// Translated necessary conditions, clause by clause:
/// (a) `p ≠ 𝐩 ⇒ q' = 𝐩`; (b) `p' ≠ 𝐩` and `q' ≠ 𝐪`;
/// (c) no height-0 valley in `q` ⇒ `p' = 𝐪`;
/// (d) `p = 𝐪 ⇒ q ∈ {𝐩, corner}` and `p' = 𝐪 ⇒ q' ∈ {𝐩, corner}`, where
/// the corner path `r^(n-1) f r f^(n-1)` omits only the lowest root.
pub fn restriction_clauses(t: &SupportQuadruple) -> [bool; 4] {
    let n = t.n();
    if n == 1 {
        return [true; 4];
    }
    let top = DyckPath::top(n);
    let stair = DyckPath::staircase(n);
    let corner = corner_path(n);
    let near_top = |x: &DyckPath| *x == top || *x == corner;
    [
        t.p == top || t.q_prime == top,
        t.p_prime != top && t.q_prime != stair,
        !t.q.valley_xs_at(0).is_empty() || t.p_prime == stair,
        (t.p != stair || near_top(&t.q)) && (t.p_prime != stair || near_top(&t.q_prime)),
    ]
}

pub fn prop45_check(t: &SupportQuadruple) -> bool {
    restriction_clauses(t).iter().all(|&c| c)
}

/// `r^(n-1) f r f^(n-1)`.
pub fn corner_path(n: usize) -> DyckPath {
    assert!(n >= 1);
    DyckPath::parse(&format!("{}fr{}", "r".repeat(n - 1), "f".repeat(n - 1))).expect("corner path is a Dyck path")
}

/// Finite part of an affine root of `sl_n^`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FinitePart {
    Pos(Interval),
    Zero,
    Neg(Interval),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineRoot {
    pub finite: FinitePart,
    pub delta: u32,
}

impl AffineRoot {
    /// The `k` with the root in `D_k = D + kδ`.
    pub fn window_index(&self) -> u32 {
        match self.finite {
            FinitePart::Pos(_) => self.delta,
            FinitePart::Zero | FinitePart::Neg(_) => self.delta - 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelledSupport {
    pub level: u32,
    pub quadruple: SupportQuadruple,
}

/// Explicit roots plus the tail `⋃_{i ≥ tail_from} D_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssembledSupport {
    pub explicit: BTreeSet<AffineRoot>,
    pub tail_from: u32,
}

impl LevelledSupport {
    pub fn new(level: u32, quadruple: SupportQuadruple) -> Result<Self> {
        if level == 0 {
            return Err(Error::Level(0));
        }
        Ok(LevelledSupport { level, quadruple })
    }

    pub fn assemble(&self) -> AssembledSupport {
        let l = self.level;
        let t = &self.quadruple;
        let mut explicit = BTreeSet::from([
            AffineRoot { finite: FinitePart::Zero, delta: l },
            AffineRoot { finite: FinitePart::Zero, delta: l + 1 },
        ]);
        let pos = |set: BTreeSet<Interval>, delta: u32| set.into_iter().map(move |a| AffineRoot { finite: FinitePart::Pos(a), delta });
        let neg = |set: BTreeSet<Interval>, delta: u32| set.into_iter().map(move |a| AffineRoot { finite: FinitePart::Neg(a), delta });
        explicit.extend(pos(s_plus_of_path(&t.p), l - 1));
        explicit.extend(neg(s_minus_of_path(&t.q), l));
        explicit.extend(pos(s_plus_of_path(&t.p_prime), l));
        explicit.extend(neg(s_minus_of_path(&t.q_prime), l + 1));
        AssembledSupport { explicit, tail_from: l + 1 }
    }
}

pub fn assemble_support(ls: &LevelledSupport) -> AssembledSupport {
    ls.assemble()
}

/// Moves the support by `k δ`.
pub fn shift_level(ls: &LevelledSupport, k: i64) -> Result<LevelledSupport> {
    let level = ls.level as i64 + k;
    if level < 1 {
        return Err(Error::Level(level));
    }
    Ok(LevelledSupport { level: level as u32, quadruple: ls.quadruple.clone() })
}

/// A candidate ideal in the two-window quotient.
#[derive(Clone, Debug)]
pub struct Witness {
    pub case: SupportCase,
    /// Cartan vectors (as diagonals) placed in degree 1.
    pub delta_part: Vec<Vec<i64>>,
    pub vectors: Vec<LoopElement>,
}

fn layer_vectors(t: &SupportQuadruple) -> Vec<LoopElement> {
    let n = t.n();
    let mut v: Vec<LoopElement> = s_plus_of_path(&t.p).iter().map(|a| LoopElement::unit(0, a.i, a.j + 1)).collect();
    v.extend(s_minus_of_path(&t.q).iter().map(|a| LoopElement::unit(1, a.j + 1, a.i)));
    v.extend(s_plus_of_path(&t.p_prime).iter().map(|a| LoopElement::unit(1, a.i, a.j + 1)));
    v.extend(s_minus_of_path(&t.q_prime).iter().map(|a| LoopElement::unit(2, a.j + 1, a.i)));
    v.extend((1..n).map(|i| LoopElement::diagonal(2, &interval_coroot(n, i, i))));
    v
}

fn with_delta_part(t: &SupportQuadruple, case: SupportCase, delta_part: Vec<Vec<i64>>) -> Witness {
    let mut vectors = layer_vectors(t);
    vectors.extend(delta_part.iter().map(|h| LoopElement::diagonal(1, h)));
    Witness { case, delta_part, vectors }
}

/// The span realizing an accepted quadruple: the four root layers, the
/// whole Cartan part at `2δ`, and a case-specific Cartan part at `δ`.
pub fn build_witness(t: &SupportQuadruple) -> Result<Witness> {
    let n = t.n();
    let case = classify(t).ok_or(Error::Unclassifiable)?;
    let coroots = |set: BTreeSet<Interval>| set.into_iter().map(|a| interval_coroot(n, a.i, a.j)).collect::<Vec<_>>();
    let valleys: Vec<usize> = t.p_prime.valley_xs_at(0).into_iter().map(|x| x / 2).collect();
    let delta_part = match case {
        SupportCase::Trivial => Vec::new(),
        SupportCase::I => vec![scaled_fundamental_coweight(n, valleys[0])],
        SupportCase::II => {
            let (a, b) = (scaled_fundamental_coweight(n, valleys[0]), scaled_fundamental_coweight(n, valleys[1]));
            vec![a.iter().zip(&b).map(|(x, y)| x - y).collect()]
        }
        SupportCase::III => coroots(s_minus_of_path(&t.q)),
        SupportCase::IV => {
            let mut h = coroots(s_minus_of_path(&t.q));
            h.extend(coroots(s_plus_of_path(&t.p)));
            h
        }
    };
    Ok(with_delta_part(t, case, delta_part))
}

/// The same layers for any quadruple, with the coroots of the first two
/// layers (or the whole Cartan part if those are empty) at `δ`.
pub fn naive_span(t: &SupportQuadruple) -> Vec<LoopElement> {
    let n = t.n();
    let mut h: Vec<Vec<i64>> =
        s_plus_of_path(&t.p).union(&s_minus_of_path(&t.q)).map(|a| interval_coroot(n, a.i, a.j)).collect();
    if h.is_empty() {
        h = (1..n).map(|i| interval_coroot(n, i, i)).collect();
    }
    with_delta_part(t, SupportCase::Trivial, h).vectors
}

/// Builds the witness and checks it is a level-1 ideal in the two-window
/// quotient.
pub fn verify_witness(t: &SupportQuadruple) -> Result<bool> {
    let w = build_witness(t)?;
    if t.n() == 1 {
        return Ok(true);
    }
    let nonzero = w.delta_part.iter().any(|h| h.iter().any(|&x| x != 0));
    Ok(nonzero && is_borel_stable(t.n(), Truncation::TwoWindows, &w.vectors)?)
}

/// Serialized form of one support class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub n: usize,
    pub level: u32,
    pub p: DyckPath,
    pub q: DyckPath,
    pub p_prime: DyckPath,
    pub q_prime: DyckPath,
    pub case: SupportCase,
}

impl ClassRecord {
    pub fn new(level: u32, c: &ClassifiedQuadruple) -> Self {
        let t = &c.quadruple;
        ClassRecord {
            n: t.n(),
            level,
            p: t.p.clone(),
            q: t.q.clone(),
            p_prime: t.p_prime.clone(),
            q_prime: t.q_prime.clone(),
            case: c.case,
        }
    }
}
