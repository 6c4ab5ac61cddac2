//! The window of affine positive roots for a finite root system, with its
//! cover relations and the search for forbidden decompositions of the
//! highest root.
//!
//! `cargo run --example root_window -- G2`

use affine_ideals::rootsys::{lemma6_search, order_coincidence_check, FiniteRootSystem, WindowPoset};

fn main() -> affine_ideals::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "B3".to_string());
    let rs = FiniteRootSystem::from_label(&label)?;
    println!("{label}: rank {}, {} positive roots, highest root {:?}", rs.rank(), rs.positive_roots().len(), rs.highest_root());

    let w = WindowPoset::new(&rs);
    println!("window has {} elements", w.len());
    for (k, up) in w.covers().iter().enumerate() {
        let names: Vec<String> = up.iter().map(|&u| w.elements()[u].label(&rs)).collect();
        println!("  {:<16} < {}", w.elements()[k].label(&rs), names.join(", "));
    }
    println!("orders coincide: {}", order_coincidence_check(&w));
    println!("antichains: {}", w.antichains().len());
    println!("forbidden decompositions: {}", lemma6_search(&rs).len());
    Ok(())
}
