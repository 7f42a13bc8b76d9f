//! The binomial complete-intersection decision, the mixed dominating
//! certificate, and the block presentation of a witnessing basis.
//!
//! Run with `cargo run --example complete_intersection`.

use latmark::ci::is_binomial_ci;
use latmark::ivec::from_i64s;
use latmark::{ci_certificate_check, Lattice};

fn main() {
    let cases = vec![
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
            "Macaulay curve kernel",
            Lattice::canonicalize(
                &[from_i64s(&[1, -1, -1, 1]), from_i64s(&[1, -2, 2, -1])],
                4,
            )
            .unwrap(),
        ),
        (
            "pure plane lattice <(1,1),(5,0)>",
            Lattice::canonicalize(&[from_i64s(&[1, 1]), from_i64s(&[5, 0])], 2).unwrap(),
        ),
    ];
    for (name, l) in &cases {
        println!("=== {name} ===");
        let report = is_binomial_ci(l).unwrap();
        print!("{}", latmark::io::render_ci(&report));
        println!();
    }

    // checking a user-supplied certificate against the first lattice
    let l = &cases[0].1;
    let candidate = vec![from_i64s(&[1, -1, 0]), from_i64s(&[6, 0, -1])];
    println!(
        "candidate certificate rows (1,-1,0), (6,0,-1): {}",
        if ci_certificate_check(l, &candidate).unwrap() { "accepted" } else { "rejected" }
    );
    let doubled = vec![from_i64s(&[2, -2, 0]), from_i64s(&[6, 0, -1])];
    println!(
        "candidate with a doubled row: {}",
        if ci_certificate_check(l, &doubled).unwrap() { "accepted" } else { "rejected" }
    );
}
