//! Basic ideals for `sl_n` as admissible pairs of Dyck paths, with their
//! supports, generators and the count `b_n` computed three ways.

use affine_ideals::ideals::{self, SlnWindow};
use num_bigint::BigUint;

fn main() -> affine_ideals::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let w = SlnWindow::new(n);
    let all = ideals::enumerate_basic(n);

    for b in &all {
        let pair = ideals::phi(b);
        let plus: Vec<String> = b.s_plus().iter().map(|x| x.to_string()).collect();
        let minus: Vec<String> = b.s_minus().iter().map(|x| x.to_string()).collect();
        println!(
            "p={} q={}  S+={{{}}} S-={{{}}}  generators={}",
            pair.p,
            pair.q,
            plus.join(","),
            minus.join(","),
            w.generators_direct(b)
        );
    }

    let formula = ideals::b_count_formula(n)?;
    assert_eq!(formula, ideals::b_count_cor22(n)?);
    assert_eq!(formula, BigUint::from(all.len()));
    assert_eq!(w.poset().antichains().len(), all.len());
    println!("b_{n} = {formula}");
    Ok(())
}
