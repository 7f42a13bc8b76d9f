//! Verifying user-supplied binomial sets, as Markov bases or as generating
//! sets, with diagnostics explaining each rejection. Exponent size does not
//! matter: every check is exact lattice algebra.
//!
//! Run with `cargo run --example verify_sets`.

use latmark::graded::SynthOptions;
use latmark::ivec::from_i64s;
use latmark::synthesis::{verify_generating_detailed, verify_markov_detailed};
use latmark::{Binomial, Lattice};

fn bin(plus: &[i64], minus: &[i64]) -> Binomial {
    Binomial::from_terms(from_i64s(plus), from_i64s(minus)).unwrap()
}

fn main() {
    let l = Lattice::canonicalize(&[from_i64s(&[1, 1]), from_i64s(&[5, 0])], 2).unwrap();
    let opt = SynthOptions::default();
    let sets: Vec<(&str, Vec<Binomial>)> = vec![
        ("{1 - x1*x2, 1 - x1^5}", vec![bin(&[0, 0], &[1, 1]), bin(&[0, 0], &[5, 0])]),
        ("{1 - x1*x2, x1^3 - x2^2}", vec![bin(&[0, 0], &[1, 1]), bin(&[3, 0], &[0, 2])]),
        (
            "{1 - x1^2012*x2^2017, x2^4 - x1^2013*x2^2022}",
            vec![bin(&[0, 0], &[2012, 2017]), bin(&[0, 4], &[2013, 2022])],
        ),
        (
            "{1 - (x1*x2)^2, 1 - (x1*x2)^3, 1 - x1^5}",
            vec![bin(&[0, 0], &[2, 2]), bin(&[0, 0], &[3, 3]), bin(&[0, 0], &[5, 0])],
        ),
        ("{1 - x1*x2}", vec![bin(&[0, 0], &[1, 1])]),
    ];
    for (name, s) in &sets {
        let markov = verify_markov_detailed(&l, s, &opt).unwrap();
        let generating = verify_generating_detailed(&l, s, &opt).unwrap();
        println!("{name}");
        println!("  markov basis:   {}", if markov.ok { "yes" } else { "no" });
        for d in &markov.diagnostics {
            println!("    - {d}");
        }
        println!("  generating set: {}", if generating.ok { "yes" } else { "no" });
        for d in &generating.diagnostics {
            println!("    - {d}");
        }
    }
}
