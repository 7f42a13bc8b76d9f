//! Fiber equivalence classes: their common cardinality, the partial order
//! between classes, and the chain visible in the worked example.
//!
//! Run with `cargo run --example equivalence_classes`.

use latmark::binomial::format_monomial;
use latmark::ivec::from_i64s;
use latmark::synthesis::{class_cardinality, class_leq, fiber_descriptor};
use latmark::Lattice;

fn main() {
    for (name, l) in [
        (
            "plane lattice <(1,1),(5,0)>",
            Lattice::canonicalize(&[from_i64s(&[1, 1]), from_i64s(&[5, 0])], 2).unwrap(),
        ),
        (
            "diagonal lattice <(1,1)>",
            Lattice::canonicalize(&[from_i64s(&[1, 1])], 2).unwrap(),
        ),
        (
            "Macaulay curve kernel",
            Lattice::canonicalize(
                &[from_i64s(&[1, -1, -1, 1]), from_i64s(&[1, -2, 2, -1])],
                4,
            )
            .unwrap(),
        ),
    ] {
        println!("{name}: every fiber class has cardinality {}", class_cardinality(&l));
    }

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
    println!("\nchain of classes in the rank-4 example:");
    let chain = [
        from_i64s(&[0, 0, 0, 0, 0]),
        from_i64s(&[0, 0, 0, 1, 0]),
        from_i64s(&[0, 0, 0, 2, 0]),
        from_i64s(&[0, 0, 0, 3, 0]),
        from_i64s(&[0, 0, 0, 5, 0]),
        from_i64s(&[0, 0, 0, 0, 1]),
    ];
    let ds: Vec<_> = chain
        .iter()
        .map(|u| fiber_descriptor(&l, u).unwrap())
        .collect();
    for w in ds.windows(2) {
        let below = class_leq(&l, &w[0], &w[1]);
        let above = class_leq(&l, &w[1], &w[0]);
        println!(
            "  class of {} <= class of {}: {below}; converse: {above}",
            format_monomial(&w[0].representative),
            format_monomial(&w[1].representative),
        );
    }
}
