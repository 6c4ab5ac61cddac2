//! Self-verification suites. Each check is a pure function producing one
//! report line; checks run on the current rayon pool and are reported in a
//! fixed order, so the output does not depend on the worker count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::dyck::{self, catalan_number, catalan_triangle, cell_count_closed, enumerate, enumerate_cell};
use crate::error::{Error, Result};
use crate::ideals::{self, BasicIdeal, SlnWindow};
use crate::matrices::{catalan_matrix, dot, omega, tau, ExactMatrix};
use crate::rootsys::{lemma6_search, order_coincidence_check, FiniteRootSystem, WindowPoset};
use crate::supports::{self, SupportQuadruple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Matrices,
    Dyck,
    Rootsys,
    Ideals,
    Supports,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Matrices => "matrices",
            Suite::Dyck => "dyck",
            Suite::Rootsys => "rootsys",
            Suite::Ideals => "ideals",
            Suite::Supports => "supports",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Matrices, Suite::Dyck, Suite::Rootsys, Suite::Ideals, Suite::Supports],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Matrices, Suite::Dyck, Suite::Rootsys, Suite::Ideals, Suite::Supports, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{status} {}/{}: {}", self.suite.name(), self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        writeln!(f, "{} checks, {} failed", self.lines.len(), self.failures())
    }
}

type Check = (Suite, &'static str, Box<dyn Fn(usize) -> Result<(bool, String)> + Send + Sync>);

fn seq<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn check(suite: Suite, name: &'static str, f: impl Fn(usize) -> Result<(bool, String)> + Send + Sync + 'static) -> Check {
    (suite, name, Box::new(f))
}

fn matrices_checks() -> Vec<Check> {
    let s = Suite::Matrices;
    vec![
        check(s, "printed-c5", |_| {
            let c5 = catalan_matrix(5)?;
            let rows: Vec<Vec<u32>> =
                vec![vec![5, 5, 3, 1, 0], vec![5, 5, 3, 1, 0], vec![3, 3, 2, 1, 0], vec![1, 1, 1, 1, 0], vec![0, 0, 0, 0, 1]];
            let ok = c5 == ExactMatrix::from_rows(&rows)?;
            Ok((ok, "C_5 matches the printed display".into()))
        }),
        check(s, "symmetry-and-sum", |_| {
            let ok = (1..=12).all(|n| {
                let c = catalan_matrix(n).expect("n >= 1");
                c.is_symmetric() && c.total() == catalan_number(n as u64)
            });
            Ok((ok, "C_n symmetric with entry sum Catalan(n), n <= 12".into()))
        }),
        check(s, "operator-examples", |_| {
            let a = ExactMatrix::from_rows(&[vec![1u32, 2, 3], vec![4, 5, 6], vec![7, 8, 9]])?;
            let t = ExactMatrix::from_rows(&[vec![12u32, 15, 18], vec![12, 15, 18], vec![11, 13, 15]])?;
            let w = ExactMatrix::from_rows(&[vec![28u32, 33, 33], vec![39, 45, 45], vec![39, 45, 45]])?;
            Ok((tau(&a) == t && omega(&a) == w, "tau and omega on the 3x3 example".into()))
        }),
        check(s, "linearity", |_| {
            let a = ExactMatrix::from_rows(&[vec![3u32, 0, 1, 2], vec![1, 4, 1, 0], vec![0, 2, 2, 5], vec![7, 1, 0, 3]])?;
            let b = catalan_matrix(4)?;
            let sum = a.add(&b)?;
            let ok = tau(&sum) == tau(&a).add(&tau(&b))?
                && omega(&sum) == omega(&a).add(&omega(&b))?
                && dot(&a, &b)? == dot(&b, &a)?
                && dot(&sum, &a)? == dot(&a, &a)? + dot(&b, &a)?;
            Ok((ok, "tau, omega linear; dot symmetric and bilinear".into()))
        }),
    ]
}

fn dyck_checks() -> Vec<Check> {
    let s = Suite::Dyck;
    vec![
        check(s, "cell-counts", |max_n| {
            let top = max_n.max(2);
            let mut ok = true;
            for n in 1..=top {
                let c = catalan_matrix(n)?;
                let mut counts = vec![vec![0u32; n + 1]; n + 1];
                for p in enumerate(n) {
                    let (i, j) = p.cell();
                    counts[i][j] += 1;
                }
                ok &= (1..=n).all(|i| (1..=n).all(|j| *c.get(i, j) == BigUint::from(counts[i][j])));
            }
            Ok((ok, format!("brute-force cell sizes equal C_n entries, n <= {top}")))
        }),
        check(s, "closed-form-and-identities", |_| {
            let mut ok = true;
            for n in 2..=12usize {
                let c = catalan_matrix(n)?;
                let e = |i: usize, j: usize| c.get_or_zero(i, j);
                for i in 1..n {
                    for j in 1..n {
                        ok &= cell_count_closed(n as u64, i as u64, j as u64)? == *c.get(i, j);
                    }
                }
                for j in 1..n {
                    ok &= *c.get(1, j) == catalan_triangle(n as u64 - 2, (n - 1 - j) as u64)?;
                }
                // both identities break down only in the bottom-right corner block
                for i in 1..=n {
                    for j in 1..=n {
                        if i < n {
                            let lhs: BigUint = e(i, j) + (1..=n).map(|t| e(t, i + j + 1)).sum::<BigUint>();
                            let rhs: BigUint = (i..=n).map(|t| e(t, j + 1)).sum();
                            ok &= lhs == rhs;
                        }
                        if i + 1 < n || j + 1 < n {
                            ok &= e(i, j) + e(1, i + j) == e(i + 1, j) + e(i, j + 1);
                        }
                    }
                }
            }
            Ok((ok, "closed form, first-row triangle, and both Pascal-type identities, n <= 12".into()))
        }),
        check(s, "star-symmetry", |max_n| {
            let top = max_n.min(8);
            let ok = (1..=top).all(|n| {
                enumerate(n).iter().all(|p| {
                    let (i, j) = p.cell();
                    p.star().cell() == (j, i) && p.star().star() == *p
                })
            });
            Ok((ok, format!("star maps D_n(i,j) onto D_n(j,i), n <= {top}")))
        }),
        check(s, "cell-minimum", |max_n| {
            let top = max_n.min(8);
            let mut ok = true;
            for n in 1..=top {
                for a in 1..=n {
                    for b in 1..=n {
                        let members = enumerate_cell(n, a, b);
                        match dyck::min_of_cell(n, a, b) {
                            Ok(m) => ok &= members.contains(&m) && members.iter().all(|x| m.leq(x).unwrap_or(false)),
                            Err(_) => ok &= members.is_empty(),
                        }
                    }
                }
            }
            Ok((ok, format!("closed cell minimum is the unique minimum, n <= {top}")))
        }),
        check(s, "peak-bijection", |max_n| {
            let top = max_n.min(8);
            let ok = (2..=top).all(|n| {
                enumerate(n).iter().all(|p| {
                    let (i, _) = p.cell();
                    p.delete_first_peak().and_then(|x| x.insert_peak_after_rises(i)).ok().as_ref() == Some(p)
                })
            });
            Ok((ok, format!("first-peak deletion inverted by insertion, n <= {top}")))
        }),
    ]
}

fn rootsys_checks() -> Vec<Check> {
    let s = Suite::Rootsys;
    vec![
        check(s, "root-counts", |_| {
            let labels = ["A1", "A5", "B3", "C4", "D4", "D5", "G2", "F4", "E6"];
            let ok = labels.iter().all(|l| {
                FiniteRootSystem::from_label(l).map(|rs| Some(rs.positive_roots().len()) == crate::rootsys::expected_positive_root_count(l)).unwrap_or(false)
            });
            Ok((ok, format!("positive root counts for {}", labels.join(" "))))
        }),
        check(s, "order-coincidence", |max_n| {
            let mut labels: Vec<String> = (1..max_n.max(2)).map(|k| format!("A{k}")).collect();
            labels.extend(["B3", "C3", "G2"].map(String::from));
            let mut ok = true;
            for l in &labels {
                let w = WindowPoset::new(&FiniteRootSystem::from_label(l)?);
                ok &= order_coincidence_check(&w)
                    && w.leq_table().is_partial_order()
                    && w.preceq_table().is_partial_order();
            }
            Ok((ok, format!("both orders agree on the window for {}", labels.join(" "))))
        }),
        check(s, "root-decompositions", |_| {
            let mut labels = vec!["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "E6"];
            if cfg!(feature = "e7e8") {
                labels.extend(["E7", "E8"]);
            }
            let mut found = 0;
            for l in &labels {
                found += lemma6_search(&FiniteRootSystem::from_label(l)?).len();
            }
            Ok((found == 0, format!("{found} decompositions found across {}", labels.join(" "))))
        }),
        check(s, "antichain-count", |max_n| {
            let counts: Vec<usize> = (1..=max_n).map(|n| SlnWindow::new(n).poset().antichains().len()).collect();
            let ok = counts.iter().enumerate().all(|(k, &c)| {
                ideals::b_count_formula(k + 1).map(|b| b == BigUint::from(c)).unwrap_or(false)
            });
            Ok((ok, format!("antichains {}", seq(&counts))))
        }),
    ]
}

fn ideals_checks() -> Vec<Check> {
    let s = Suite::Ideals;
    vec![
        check(s, "b-sequence", |max_n| {
            let top = max_n.max(10);
            let mut ok = true;
            let mut vals = Vec::new();
            for n in 1..=top {
                let b = ideals::b_count_formula(n)?;
                ok &= b == ideals::b_count_cor22(n)?;
                if n <= max_n + 2 {
                    ok &= b == BigUint::from(ideals::count_admissible_pairs(n));
                }
                vals.push(b);
            }
            Ok((ok, format!("b_n {}", seq(&vals))))
        }),
        check(s, "phi-round-trip", |max_n| {
            let mut ok = true;
            for n in 1..=max_n {
                let w = SlnWindow::new(n);
                let via_antichains: BTreeSet<BasicIdeal> = w.ideals_from_antichains().into_iter().collect();
                let via_pairs = ideals::enumerate_basic(n);
                ok &= via_pairs.len() == via_antichains.len();
                for b in &via_pairs {
                    let pair = ideals::phi(b);
                    ok &= via_antichains.contains(b)
                        && ideals::phi_inv(&pair).as_ref() == Ok(b)
                        && w.from_antichain(&w.antichain_of(b)).as_ref() == Ok(b);
                }
            }
            Ok((ok, format!("pairs, antichains and phi agree, n <= {max_n}")))
        }),
        check(s, "generators", |max_n| {
            let top = max_n + 1;
            let mut bad = 0;
            for n in 1..=top {
                let w = SlnWindow::new(n);
                bad += ideals::enumerate_basic(n).par_iter().filter(|b| w.generators_direct(b) != ideals::generators_formula(b)).count();
            }
            let example = BasicIdeal::new(3, BTreeSet::from([ideals::Interval::new(1, 2)]), BTreeSet::new())?;
            let literal = ideals::generators_formula_literal(&example);
            let direct = SlnWindow::new(3).generators_direct(&example);
            Ok((bad == 0 && literal == -1 && direct == 1, format!("{bad} mismatches n <= {top}; literal {literal} vs direct {direct} at n=3")))
        }),
        check(s, "quasi-abelian", |max_n| {
            let top = max_n + 2;
            let counts: Vec<u64> = (1..=top).map(ideals::quasi_abelian_count).collect();
            let expected = [1u64, 3, 11, 44, 183, 774, 3294, 14034, 59711, 253430];
            let ok = counts.iter().zip(expected).all(|(a, b)| *a == b);
            Ok((ok, format!("counts {}", seq(&counts))))
        }),
        check(s, "quasi-abelian-brackets", |max_n| {
            let top = max_n.min(5);
            let mut ok = true;
            for n in 2..=top {
                for b in ideals::enumerate_basic(n) {
                    ok &= ideals::quasi_abelian_by_brackets(&b)? == ideals::is_quasi_abelian(&b);
                }
            }
            Ok((ok, format!("path criterion matches explicit brackets, n <= {top}")))
        }),
        check(s, "qnd", |max_n| {
            let mut bad = 0;
            for n in 1..=max_n {
                for b in ideals::enumerate_basic(n) {
                    let (m, q) = (ideals::nd_plus(&b), ideals::qnd_direct(&b));
                    let agree = q == ideals::qnd_prop31(&b) && (q == m || q == m + 1) && (m != 0 || q == 1);
                    if !agree || (q == 1) != ideals::is_quasi_abelian(&b) {
                        bad += 1;
                    }
                }
            }
            Ok((bad == 0, format!("{bad} violations of the m / m+1 rule, n <= {max_n}")))
        }),
        check(s, "truncation", |max_n| {
            let top = max_n.min(5);
            let mut ok = true;
            for n in 1..=top {
                for b in ideals::enumerate_basic(n) {
                    ok &= ideals::verify_basic_in_truncation(&b)?;
                }
            }
            use crate::truncation::LoopElement;
            let alone = ideals::verify_window_span(3, &[LoopElement::unit(0, 1, 2)])?;
            let no_delta = ideals::verify_window_span(2, &[LoopElement::unit(0, 1, 2), LoopElement::unit(1, 2, 1)])?;
            Ok((ok && !alone && !no_delta, format!("all ideals stable, n <= {top}; both negative controls rejected")))
        }),
    ]
}

fn supports_checks() -> Vec<Check> {
    let s = Suite::Supports;
    vec![
        check(s, "class-counts", |max_n| {
            let top = max_n.min(5);
            let counts: Vec<usize> = (1..=top).map(|n| supports::enumerate_classes(n).len()).collect();
            let expected = [1usize, 4, 21, 100, 455];
            Ok((counts.iter().zip(expected).all(|(a, b)| *a == b), format!("classes {}", seq(&counts))))
        }),
        check(s, "exclusivity", |max_n| {
            let top = max_n.min(5);
            let mut ok = true;
            let mut parts = Vec::new();
            for n in 2..=top {
                let (counts, overlaps) = supports::exhaustive_case_scan(n);
                let structured = supports::case_counts(&supports::enumerate_classes(n)).map(|c| c as u64);
                ok &= overlaps == 0 && counts == structured;
                parts.push(format!("n={n} {}", seq(&counts)));
            }
            Ok((ok, format!("no overlaps; per case {}", parts.join(", "))))
        }),
        check(s, "necessary-conditions", |max_n| {
            let ok = (1..=max_n).all(|n| supports::enumerate_classes(n).iter().all(|c| supports::prop45_check(&c.quadruple)));
            Ok((ok, format!("accepted quadruples pass the restriction checks, n <= {max_n}")))
        }),
        check(s, "witnesses", |max_n| {
            let top = max_n.min(4);
            let mut ok = true;
            for n in 1..=top {
                for c in supports::enumerate_classes(n) {
                    ok &= supports::verify_witness(&c.quadruple)?;
                }
            }
            let bad = SupportQuadruple::parse(["rfrf", "rfrf", "rfrf", "rfrf"])?;
            let control = crate::truncation::is_borel_stable(2, crate::truncation::Truncation::TwoWindows, &supports::naive_span(&bad))?;
            Ok((ok && !control, format!("witnesses stable, n <= {top}; rejected control unstable")))
        }),
        check(s, "levels-and-embedding", |max_n| {
            let top = max_n.min(4);
            let mut ok = true;
            for n in 1..=top {
                let classes = supports::enumerate_classes(n);
                for l in 1..=3 {
                    let distinct: BTreeSet<_> = classes
                        .iter()
                        .map(|c| supports::LevelledSupport::new(l, c.quadruple.clone()).map(|x| x.assemble()))
                        .collect::<Result<_>>()?;
                    ok &= distinct.len() == classes.len();
                }
                ok &= ideals::enumerate_basic(n).iter().all(|b| supports::classify(&SupportQuadruple::of_basic(b)).is_some());
            }
            Ok((ok, format!("class counts equal at levels 1..3; basic ideals embed, n <= {top}")))
        }),
    ]
}

/// Runs the requested suites with the given size bound.
pub fn run_suite(suite: Suite, max_n: usize) -> Report {
    let checks: Vec<Check> = suite
        .members()
        .into_iter()
        .flat_map(|s| match s {
            Suite::Matrices => matrices_checks(),
            Suite::Dyck => dyck_checks(),
            Suite::Rootsys => rootsys_checks(),
            Suite::Ideals => ideals_checks(),
            Suite::Supports => supports_checks(),
            Suite::All => unreachable!(),
        })
        .collect();
    let lines = checks
        .par_iter()
        .map(|(suite, name, f)| {
            let (passed, detail) = f(max_n.max(1)).unwrap_or_else(|e| (false, format!("error: {e}")));
            CheckLine { suite: *suite, name: name.to_string(), passed, detail }
        })
        .collect();
    Report { lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Matrices, Suite::Dyck, Suite::Rootsys] {
            let r = run_suite(s, 4);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("supports".parse::<Suite>().unwrap(), Suite::Supports);
        assert!("nope".parse::<Suite>().is_err());
    }
}
