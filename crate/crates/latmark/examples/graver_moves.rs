//! The Graver basis of a positively graded lattice, and fiber connectivity
//! under subsets of moves.
//!
//! Run with `cargo run --example graver_moves`.

use latmark::graded::{enumerate_fiber, graver_basis, markov_basis_graded, spath_connected};
use latmark::ivec::{fmt_vec, from_i64s};
use latmark::Lattice;

fn main() {
    let l = Lattice::canonicalize(
        &[from_i64s(&[1, -1, -1, 1]), from_i64s(&[1, -2, 2, -1])],
        4,
    )
    .unwrap();
    let graver = graver_basis(&l).unwrap();
    println!("graver basis ({} moves up to sign):", graver.moves.len());
    for g in &graver.moves {
        println!("  {}", fmt_vec(g));
    }

    let (basis, betti) = markov_basis_graded(&l).unwrap();
    println!("\nmarkov basis ({} binomials):", basis.len());
    for b in &basis {
        println!("  {b}");
    }
    println!("\nbetti fibers and connectivity:");
    for f in &betti {
        println!(
            "  fiber of {} with {} elements: connected under the basis: {}",
            fmt_vec(&f.representative),
            f.len(),
            spath_connected(f, &basis)
        );
    }

    // a fiber stays connected even after forgetting moves it never uses
    let f = enumerate_fiber(&l, &from_i64s(&[2, 0, 1, 0])).unwrap();
    println!(
        "\nfiber of (2,0,1,0) has {} elements; connected under the basis: {}",
        f.len(),
        spath_connected(&f, &basis)
    );
    println!(
        "connected under no moves at all: {}",
        spath_connected(&f, &[])
    );
}
