//! Markov bases of lattice ideals, their cardinality mu, and the invariant
//! multiset of fiber classes, for a pure, a mixed and a positively graded
//! lattice.
//!
//! Run with `cargo run --example markov_basis`.

use latmark::ivec::from_i64s;
use latmark::synthesis::markov_basis_general;
use latmark::Lattice;

fn main() {
    let cases = vec![
        (
            "plane lattice <(1,1),(5,0)>",
            Lattice::canonicalize(&[from_i64s(&[1, 1]), from_i64s(&[5, 0])], 2).unwrap(),
        ),
        (
            "rank-4 lattice in Z^5 with a rank-2 pure part",
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
            "Macaulay curve kernel (positively graded)",
            Lattice::canonicalize(
                &[from_i64s(&[1, -1, -1, 1]), from_i64s(&[1, -2, 2, -1])],
                4,
            )
            .unwrap(),
        ),
    ];
    for (name, l) in cases {
        println!("=== {name} ===");
        let report = markov_basis_general(&l).unwrap();
        print!("{}", latmark::io::render_markov(&report));
        println!();
    }
}
