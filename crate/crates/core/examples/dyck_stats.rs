//! Statistics of Dyck paths: peaks, valleys, cells and the cell minimum.

use affine_ideals::dyck::{enumerate_cell, min_of_cell};
use affine_ideals::DyckPath;

fn main() -> affine_ideals::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "rrfrfrrffrff".to_string());
    let p: DyckPath = word.parse()?;
    let n = p.semilength();
    let s = p.stats();

    println!("path      {p}  (semilength {n})");
    println!("heights   {:?}", p.heights());
    println!("peaks     {:?}", s.peak_xs);
    println!("valleys   {:?}", s.valley_xs);
    println!("by height {:?}", s.v_count_by_height);
    println!("cell      {:?}", p.cell());
    println!("star      {}", p.star());
    println!("bar       {}", p.bar());

    let (i, j) = p.cell();
    let members = enumerate_cell(n, i, j);
    let m = min_of_cell(n, i, j)?;
    println!("cell ({i},{j}) has {} paths; minimum {m}", members.len());
    for q in &members {
        assert!(m.leq(q)?);
    }
    Ok(())
}
