//! Indispensable binomials and monomials across the three regimes: a pure
//! part of rank two or more leaves only the monomial 1, rank one forces a
//! single binomial, and the positively graded case follows the fiber graphs.
//!
//! Run with `cargo run --example indispensable`.

use latmark::binomial::format_monomial;
use latmark::ivec::from_i64s;
use latmark::synthesis::indispensables_general;
use latmark::Lattice;

fn main() {
    let cases = vec![
        (
            "pure part of rank 2",
            Lattice::canonicalize(
                &[
                    from_i64s(&[3, 0, 1, -1, 0]),
                    from_i64s(&[0, 1, 6, 0, -1]),
                    from_i64s(&[1, 1, 0, 0, 0]),
                    from_i64s(&[5, 0, 0, 0, 0]),
                ],
                5,
            )
            .unwrap(),
        ),
        (
            "pure lattice of rank 1",
            Lattice::canonicalize(&[from_i64s(&[1, 1])], 2).unwrap(),
        ),
        (
            "positively graded, forced two-element fiber",
            Lattice::canonicalize(&[from_i64s(&[1, -1])], 2).unwrap(),
        ),
        (
            "positively graded, three-element fiber (nothing forced)",
            Lattice::canonicalize(&[from_i64s(&[1, -1, 0]), from_i64s(&[0, 1, -1])], 3).unwrap(),
        ),
    ];
    for (name, l) in &cases {
        let (bins, mons) = indispensables_general(l).unwrap();
        println!("{name}:");
        if bins.is_empty() {
            println!("  indispensable binomials: none");
        } else {
            let list: Vec<String> = bins.iter().map(|b| b.to_string()).collect();
            println!("  indispensable binomials: {}", list.join(", "));
        }
        let list: Vec<String> = mons.iter().map(|m| format_monomial(m)).collect();
        println!("  indispensable monomials: {}", list.join(", "));
    }
}
