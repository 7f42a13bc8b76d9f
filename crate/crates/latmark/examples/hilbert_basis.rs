//! The Hilbert basis of the monoid of nonnegative lattice points, with the
//! witness of full support it provides.
//!
//! Run with `cargo run --example hilbert_basis`.

use latmark::decompose::pure_witness;
use latmark::ivec::{fmt_vec, from_i64s};
use latmark::{hilbert_basis_positive, support_sigma, Lattice};

fn main() {
    for (name, l) in [
        (
            "rank-4 lattice in Z^5",
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
            "plane lattice <(1,1),(5,0)>",
            Lattice::canonicalize(&[from_i64s(&[1, 1]), from_i64s(&[5, 0])], 2).unwrap(),
        ),
        (
            "Macaulay curve kernel (positively graded)",
            Lattice::canonicalize(
                &[from_i64s(&[1, -1, -1, 1]), from_i64s(&[1, -2, 2, -1])],
                4,
            )
            .unwrap(),
        ),
    ] {
        println!("{name}:");
        println!("  sigma = {}", support_sigma(&l));
        let basis = hilbert_basis_positive(&l).unwrap();
        if basis.is_empty() {
            println!("  no nonzero nonnegative elements");
        } else {
            for h in &basis {
                println!("  hilbert element {}", fmt_vec(h));
            }
            println!("  witness {}", fmt_vec(&pure_witness(&l).unwrap()));
        }
    }
}
