//! Quasi-abelian ideals and the quasi-nilpotency degree.

use std::collections::BTreeMap;

use affine_ideals::ideals;

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for n in 1..=top {
        println!("n={n}: {} quasi-abelian", ideals::quasi_abelian_count(n));
    }

    let n = top.min(6);
    let mut hist = BTreeMap::<usize, usize>::new();
    for b in ideals::enumerate_basic(n) {
        let q = ideals::qnd_direct(&b);
        assert_eq!(q, ideals::qnd_prop31(&b));
        assert_eq!(q == 1, ideals::is_quasi_abelian(&b));
        *hist.entry(q).or_default() += 1;
    }
    println!("qnd distribution at n={n}: {hist:?}");
}
