//! Pure decomposition of a lattice: the support of its nonnegative
//! elements, a witness, the Hilbert basis, and the pure/projected split.
//!
//! Run with `cargo run --example decompose`.

use latmark::ivec::from_i64s;
use latmark::{decomposition_report, Lattice};

fn main() {
    let l = Lattice::canonicalize(
        &[
            from_i64s(&[3, 0, 1, -1, 0]),
            from_i64s(&[0, 1, 6, 0, -1]),
            from_i64s(&[1, 1, 0, 0, 0]),
            from_i64s(&[5, 0, 0, 0, 0]),
        ],
        5,
    )
    .unwrap();
    let report = decomposition_report(&l).unwrap();
    print!("{}", latmark::io::render_decomposition(&report));

    // A positively graded lattice decomposes trivially: sigma is empty and
    // the projection is the lattice itself.
    let macaulay = Lattice::canonicalize(
        &[from_i64s(&[1, -1, -1, 1]), from_i64s(&[1, -2, 2, -1])],
        4,
    )
    .unwrap();
    let report = decomposition_report(&macaulay).unwrap();
    println!();
    print!("{}", latmark::io::render_decomposition(&report));
}
