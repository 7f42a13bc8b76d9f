//! Lattices in `Z^n` in canonical Hermite form: membership, equality,
//! primitive vectors, basis extension and quotient invariants.

use crate::error::{Error, Result};
use crate::hnf;
use crate::ivec::{self, IntVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sublattice of `Z^n`, stored as the unique row Hermite normal form of
/// any generating set. Values are immutable once constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<IntVec>,
    pivots: Vec<usize>,
}

impl Lattice {
    /// Canonicalizes an arbitrary generating set.
    pub fn canonicalize(generators: &[IntVec], ambient: usize) -> Result<Lattice> {
        for g in generators {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: g.len() });
            }
        }
        let basis = hnf::hnf(generators, ambient);
        let pivots = hnf::pivot_columns(&basis);
        Ok(Lattice { ambient, basis, pivots })
    }

    pub fn zero(ambient: usize) -> Lattice {
        Lattice { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The canonical HNF basis rows.
    pub fn basis_rows(&self) -> &[IntVec] {
        &self.basis
    }

    fn check_dim(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    /// Exact membership test via the canonical form.
    pub fn is_member(&self, v: &[BigInt]) -> Result<bool> {
        self.check_dim(v)?;
        Ok(hnf::solve_in_span(&self.basis, &self.pivots, v).is_some())
    }

    /// Integer coefficients of `v` over the canonical basis, if `v` is a
    /// member.
    pub fn coefficients_of(&self, v: &[BigInt]) -> Result<Option<IntVec>> {
        self.check_dim(v)?;
        Ok(hnf::solve_in_span(&self.basis, &self.pivots, v))
    }

    /// Canonical representative of `v + L`; members reduce to zero.
    pub fn reduce(&self, v: &[BigInt]) -> Result<IntVec> {
        self.check_dim(v)?;
        Ok(hnf::reduce_mod_span(&self.basis, &self.pivots, v))
    }

    /// The lattice vector with the given coefficients over the canonical
    /// basis.
    pub fn linear_combination(&self, coeffs: &[BigInt]) -> IntVec {
        debug_assert_eq!(coeffs.len(), self.rank());
        let mut out = ivec::zeros(self.ambient);
        for (c, row) in coeffs.iter().zip(&self.basis) {
            for k in 0..self.ambient {
                out[k] += c * &row[k];
            }
        }
        out
    }
}

/// Two lattices are equal iff their canonical bases coincide.
pub fn lattices_equal(a: &Lattice, b: &Lattice) -> Result<bool> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    Ok(a.basis == b.basis)
}

/// The primitive vector `u` of the lattice with `v = lambda * u` for a
/// positive integer `lambda`.
pub fn primitive_scale(l: &Lattice, v: &[BigInt]) -> Result<IntVec> {
    l.check_dim(v)?;
    if ivec::is_zero(v) {
        return Err(Error::ZeroVector);
    }
    let Some(coeffs) = hnf::solve_in_span(&l.basis, &l.pivots, v) else {
        return Err(Error::NotInLattice);
    };
    let mut g = BigInt::zero();
    for c in &coeffs {
        g = g.gcd(c);
    }
    debug_assert!(g.is_positive());
    let reduced: IntVec = coeffs.iter().map(|c| c / &g).collect();
    Ok(l.linear_combination(&reduced))
}

/// Extends a primitive lattice vector to a full basis of the lattice.
pub fn extend_to_basis(l: &Lattice, u: &[BigInt]) -> Result<Vec<IntVec>> {
    l.check_dim(u)?;
    if ivec::is_zero(u) {
        return Err(Error::ZeroVector);
    }
    let Some(coeffs) = hnf::solve_in_span(&l.basis, &l.pivots, u) else {
        return Err(Error::NotInLattice);
    };
    let mut g = BigInt::zero();
    for c in &coeffs {
        g = g.gcd(c);
    }
    if !g.is_one() {
        return Err(Error::NotPrimitive);
    }
    let w = hnf::complete_primitive_row(&coeffs);
    let rows: Vec<IntVec> = w.iter().map(|row| l.linear_combination(row)).collect();
    debug_assert_eq!(rows[0], u.to_vec());
    Ok(rows)
}

/// Invariant factors of `Z^s` modulo a row span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithInvariants {
    /// Nonzero invariant factors `d_1 | d_2 | ...`.
    pub factors: Vec<BigInt>,
    /// Rank of the free part of the quotient.
    pub free_rank: usize,
}

impl SmithInvariants {
    /// Cardinality of the quotient group, or `None` when it is infinite.
    pub fn quotient_order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut p = BigInt::one();
        for d in &self.factors {
            p *= d;
        }
        Some(p)
    }
}

/// Smith invariants of `Z^ambient` modulo the span of `rows`.
pub fn smith_invariants(rows: &[IntVec], ambient: usize) -> Result<SmithInvariants> {
    for r in rows {
        if r.len() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, found: r.len() });
        }
    }
    let factors = hnf::snf_nonzero_diagonal(rows, ambient);
    let free_rank = ambient - factors.len();
    Ok(SmithInvariants { factors, free_rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec::from_i64s;
    use crate::testfix::{intro_lattice, macaulay_lattice, mat};

    #[test]
    fn canonical_basis_of_intro_lattice() {
        let l = intro_lattice();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.basis_rows(), &mat(&[&[1, 1], &[0, 5]])[..]);
    }

    #[test]
    fn empty_generators_give_zero_lattice() {
        let l = Lattice::canonicalize(&[], 3).unwrap();
        assert_eq!(l.rank(), 0);
        assert!(l.is_zero());
        assert!(l.is_member(&from_i64s(&[0, 0, 0])).unwrap());
        assert!(!l.is_member(&from_i64s(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn dependent_rows_collapse() {
        let l = Lattice::canonicalize(&mat(&[&[2, 4], &[1, 2]]), 2).unwrap();
        assert_eq!(l.rank(), 1);
        assert_eq!(l.basis_rows(), &mat(&[&[1, 2]])[..]);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let got = Lattice::canonicalize(&mat(&[&[1, 1], &[1, 0, 0]]), 2);
        assert!(matches!(got, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn membership_in_macaulay_kernel() {
        let l = macaulay_lattice();
        assert!(l.is_member(&from_i64s(&[2, -3, 1, 0])).unwrap());
        assert!(l.is_member(&from_i64s(&[0, 0, 0, 0])).unwrap());
        assert!(!l.is_member(&from_i64s(&[1, 0, 0, 0])).unwrap());
    }

    #[test]
    fn membership_in_intro_lattice() {
        let l = intro_lattice();
        assert!(l.is_member(&from_i64s(&[2012, 2017])).unwrap());
        assert!(!l.is_member(&from_i64s(&[1, 0])).unwrap());
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = intro_lattice();
        let b = Lattice::canonicalize(
            &mat(&[&[2012, 2017], &[-2013, -2018]]),
            2,
        )
        .unwrap();
        assert!(lattices_equal(&a, &b).unwrap());
        let c = Lattice::canonicalize(&mat(&[&[1, 1]]), 2).unwrap();
        let d = Lattice::canonicalize(&mat(&[&[2, 2]]), 2).unwrap();
        assert!(!lattices_equal(&c, &d).unwrap());
        assert!(lattices_equal(&c, &c).unwrap());
    }

    #[test]
    fn primitive_scaling() {
        let full = Lattice::canonicalize(&mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap();
        assert_eq!(
            primitive_scale(&full, &from_i64s(&[2, 4, 6])).unwrap(),
            from_i64s(&[1, 2, 3])
        );
        let l = intro_lattice();
        assert_eq!(primitive_scale(&l, &from_i64s(&[2, 2])).unwrap(), from_i64s(&[1, 1]));
        let r1 = Lattice::canonicalize(&mat(&[&[2, 2]]), 2).unwrap();
        assert_eq!(primitive_scale(&r1, &from_i64s(&[2, 2])).unwrap(), from_i64s(&[2, 2]));
        assert!(matches!(
            primitive_scale(&l, &from_i64s(&[0, 0])),
            Err(Error::ZeroVector)
        ));
        assert!(matches!(
            primitive_scale(&l, &from_i64s(&[1, 0])),
            Err(Error::NotInLattice)
        ));
    }

    #[test]
    fn primitive_scale_is_idempotent() {
        let l = intro_lattice();
        let u = primitive_scale(&l, &from_i64s(&[3, 3])).unwrap();
        assert_eq!(primitive_scale(&l, &u).unwrap(), u);
    }

    #[test]
    fn basis_extension() {
        let full = Lattice::canonicalize(&mat(&[&[1, 0], &[0, 1]]), 2).unwrap();
        let b = extend_to_basis(&full, &from_i64s(&[1, 1])).unwrap();
        assert_eq!(b.len(), 2);
        let rebuilt = Lattice::canonicalize(&b, 2).unwrap();
        assert!(lattices_equal(&full, &rebuilt).unwrap());

        let l = intro_lattice();
        let b = extend_to_basis(&l, &from_i64s(&[1, 1])).unwrap();
        assert_eq!(b[0], from_i64s(&[1, 1]));
        let rebuilt = Lattice::canonicalize(&b, 2).unwrap();
        assert!(lattices_equal(&l, &rebuilt).unwrap());
        let det = crate::hnf::determinant(&b);
        assert_eq!(det.abs(), BigInt::from(5));

        let r1 = Lattice::canonicalize(&mat(&[&[3, -1]]), 2).unwrap();
        assert_eq!(extend_to_basis(&r1, &from_i64s(&[3, -1])).unwrap(), mat(&[&[3, -1]]));

        // (2,2) is in the intro lattice but is not primitive there
        assert!(matches!(
            extend_to_basis(&l, &from_i64s(&[2, 2])),
            Err(Error::NotPrimitive)
        ));
    }

    #[test]
    fn smith_invariants_of_quotients() {
        let s = smith_invariants(&mat(&[&[1, 1], &[5, 0]]), 2).unwrap();
        assert_eq!(s.factors, vec![BigInt::one(), BigInt::from(5)]);
        assert_eq!(s.free_rank, 0);
        assert_eq!(s.quotient_order(), Some(BigInt::from(5)));

        let s = smith_invariants(&mat(&[&[1, 1]]), 2).unwrap();
        assert_eq!(s.factors, vec![BigInt::one()]);
        assert_eq!(s.free_rank, 1);
        assert_eq!(s.quotient_order(), None);

        let s = smith_invariants(&[], 1).unwrap();
        assert_eq!(s.free_rank, 1);
    }
}
