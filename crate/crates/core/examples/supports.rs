//! Support classes of ideals at level one: enumerate the quadruples, split
//! them by case and check one witness ideal in the truncated loop algebra.

use affine_ideals::supports::{self, build_witness, verify_witness, SupportCase};

fn main() -> affine_ideals::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let classes = supports::enumerate_classes(n);
    let counts = supports::case_counts(&classes);
    println!("n={n}: {} classes", classes.len());
    for (case, c) in SupportCase::ALL.iter().zip(counts) {
        println!("  case {case:<3} {c}");
    }

    for c in classes.iter().take(8) {
        println!("{:<3} {}", c.case.to_string(), c.quadruple);
    }

    if let Some(c) = classes.last() {
        let w = build_witness(&c.quadruple)?;
        println!("witness for {} spans {} vectors; stable: {}", c.quadruple, w.vectors.len(), verify_witness(&c.quadruple)?);
    }
    Ok(())
}
