//! Markov bases of lattice ideals with exact integer arithmetic.
//!
//! Given an integer generator matrix of a lattice `L` in `Z^n`, this crate
//! computes the pure decomposition of `L` (the support `sigma` of its
//! nonnegative elements, the pure sublattice `L_pure`, the projected lattice
//! `L^sigma`, the Hilbert basis of `L+`), Markov bases of the lattice ideal
//! `I_L` together with the invariant `mu(I_L)`, the multiset of fiber
//! equivalence classes behind any Markov basis, indispensable binomials and
//! monomials, and the binomial complete-intersection decision with a
//! mixed-dominating certificate. It also verifies user-supplied binomial
//! sets, either as generating sets or as Markov bases.
//!
//! Everything is computed over arbitrary-precision integers; there is no
//! floating point anywhere. See the `examples/` directory for one runnable
//! example per capability, and the `latmark` binary for the file-based
//! command line interface.

pub mod binomial;
pub mod ci;
pub mod decompose;
pub mod diophantine;
pub mod error;
pub mod fm;
pub mod graded;
pub mod hnf;
pub mod io;
pub mod ivec;
pub mod lattice;
pub mod synthesis;

pub use binomial::Binomial;
pub use ci::{ci_certificate_check, is_binomial_ci, is_mixed_dominating, is_mixed_row, CIReport};
pub use decompose::{
    decomposition_report, hilbert_basis_positive, projected_lattice, pure_markov_basis,
    pure_positive_basis, pure_sublattice, pure_witness, support_sigma, verify_pure_markov,
    DecompositionReport, Support,
};
pub use error::{Error, Result};
pub use graded::{
    enumerate_fiber, graver_basis, indispensables_graded, markov_basis_graded, spath_connected,
    Fiber, FiberGraph, GraverBasis, SynthOptions,
};
pub use ivec::IntVec;
pub use lattice::{
    extend_to_basis, lattices_equal, primitive_scale, smith_invariants, Lattice, SmithInvariants,
};
pub use synthesis::{
    class_cardinality, class_leq, fiber_descriptor, indispensables_general, lift_binomial,
    markov_basis_general, universal_markov_finite, verify_generating_set, verify_markov_general,
    ClassCount, ClassDescriptor, FiberDescriptor, MarkovReport,
};

/// Default cap on the size of any single fiber enumeration; the CLI overrides
/// it from the `LATMARK_MAX_FIBER` environment variable.
pub const DEFAULT_MAX_FIBER: usize = 100_000;

#[cfg(test)]
pub(crate) mod testfix {
    use crate::ivec::{from_i64s, IntVec};
    use crate::lattice::Lattice;

    pub fn mat(rows: &[&[i64]]) -> Vec<IntVec> {
        rows.iter().map(|r| from_i64s(r)).collect()
    }

    /// `<(1,1), (5,0)>` in `Z^2`: pure of rank 2, quotient of order 5.
    pub fn intro_lattice() -> Lattice {
        Lattice::canonicalize(&mat(&[&[1, 1], &[5, 0]]), 2).unwrap()
    }

    /// The rank-4 worked-example lattice in `Z^5`.
    pub fn sec6_lattice() -> Lattice {
        Lattice::canonicalize(
            &mat(&[
                &[3, 0, 1, -1, 0],
                &[0, 1, 6, 0, -1],
                &[1, 1, 0, 0, 0],
                &[5, 0, 0, 0, 0],
            ]),
            5,
        )
        .unwrap()
    }

    /// Kernel lattice of the Macaulay curve matrix: positively graded.
    pub fn macaulay_lattice() -> Lattice {
        Lattice::canonicalize(&mat(&[&[1, -1, -1, 1], &[1, -2, 2, -1]]), 4).unwrap()
    }

    /// `<(1,1)>` in `Z^2`: pure of rank 1.
    pub fn pure_rank1_lattice() -> Lattice {
        Lattice::canonicalize(&mat(&[&[1, 1]]), 2).unwrap()
    }
}
