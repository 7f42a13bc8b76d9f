//! Minimal monomial generators of a fiber ideal, their grouping by equal
//! projection, and the class-graph components that drive the Markov count.
//!
//! Run with `cargo run --example fiber_staircase`.

use latmark::ivec::from_i64s;
use latmark::synthesis::fiber_descriptor;
use latmark::Lattice;

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
    for rep in [
        from_i64s(&[0, 0, 0, 1, 0]), // the x4 fiber: three minimal generators
        from_i64s(&[0, 0, 0, 0, 1]), // the x5 fiber: fourteen, eight projected
        from_i64s(&[0, 0, 0, 2, 0]), // a fiber needing no generator (t = 1)
    ] {
        let d = fiber_descriptor(&l, &rep).unwrap();
        print!("{}", latmark::io::render_fiber(&d));
        println!();
    }
}
