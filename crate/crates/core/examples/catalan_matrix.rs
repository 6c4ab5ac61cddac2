//! Builds the Catalan matrices and checks that `b_n = C_n · ω(C_n)`.
//!
//! Run with `cargo run --example catalan_matrix -- 6`.

use affine_ideals::dyck::catalan_number;
use affine_ideals::ideals::b_count_formula;
use affine_ideals::matrices::{catalan_matrix, dot, omega, tau};

fn main() -> affine_ideals::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let c = catalan_matrix(n)?;
    println!("C_{n} =\n{c}\n");
    println!("tau(C_{n}) =\n{}\n", tau(&c));
    println!("entry sum {} = Catalan({n}) = {}", c.total(), catalan_number(n as u64));
    println!("symmetric: {}", c.is_symmetric());

    let b = dot(&c, &omega(&c))?;
    println!("C_{n} . omega(C_{n}) = {b}");
    assert_eq!(b, b_count_formula(n)?);
    Ok(())
}
