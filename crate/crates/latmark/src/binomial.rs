//! Binomials `x^plus - x^minus` with nonnegative exponent vectors.

use crate::error::{Error, Result};
use crate::ivec::{self, IntVec};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// A difference of two monomials. The canonical internal form has coprime
/// terms (disjoint supports); user input may carry a common monomial factor,
/// which every consumer that needs coprime terms strips via [`Binomial::reduced`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: IntVec,
    minus: IntVec,
}

impl Binomial {
    /// The coprime binomial of a lattice vector: `x^{u+} - x^{u-}`.
    pub fn from_vector(u: &[BigInt]) -> Binomial {
        Binomial { plus: ivec::positive_part(u), minus: ivec::negative_part(u) }
    }

    /// Builds a binomial from explicit terms, which must be nonnegative and
    /// of equal length.
    pub fn from_terms(plus: IntVec, minus: IntVec) -> Result<Binomial> {
        if plus.len() != minus.len() {
            return Err(Error::DimensionMismatch { expected: plus.len(), found: minus.len() });
        }
        if !ivec::is_nonneg(&plus) || !ivec::is_nonneg(&minus) {
            return Err(Error::Parse("binomial terms must be nonnegative".into()));
        }
        Ok(Binomial { plus, minus })
    }

    pub fn plus(&self) -> &IntVec {
        &self.plus
    }

    pub fn minus(&self) -> &IntVec {
        &self.minus
    }

    pub fn ambient_dim(&self) -> usize {
        self.plus.len()
    }

    /// The lattice vector `plus - minus`.
    pub fn difference(&self) -> IntVec {
        ivec::sub(&self.plus, &self.minus)
    }

    /// True when the two terms have disjoint supports.
    pub fn is_coprime(&self) -> bool {
        self.plus
            .iter()
            .zip(&self.minus)
            .all(|(p, m)| p.is_zero() || m.is_zero())
    }

    /// Strips the common monomial factor of the two terms.
    pub fn reduced(&self) -> Binomial {
        let common = ivec::min(&self.plus, &self.minus);
        Binomial {
            plus: ivec::sub(&self.plus, &common),
            minus: ivec::sub(&self.minus, &common),
        }
    }

    /// True when both terms are the same monomial (the zero polynomial).
    pub fn is_trivial(&self) -> bool {
        self.plus == self.minus
    }

    /// Swaps the terms so that `plus` is lexicographically largest.
    pub fn normalized(&self) -> Binomial {
        if self.plus >= self.minus {
            self.clone()
        } else {
            self.flipped()
        }
    }

    pub fn flipped(&self) -> Binomial {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }
}

/// Formats an exponent vector as a monomial in `x1..xn`; the zero vector is
/// the monomial `1`.
pub fn format_monomial(v: &[BigInt]) -> String {
    let coords: Vec<usize> = (0..v.len()).collect();
    format_monomial_in(v, &coords)
}

/// Formats an exponent vector over a subset of the ambient coordinates,
/// naming each variable by its original (0-based) index.
pub fn format_monomial_in(v: &[BigInt], coords: &[usize]) -> String {
    debug_assert_eq!(v.len(), coords.len());
    let mut parts = Vec::new();
    for (e, &c) in v.iter().zip(coords) {
        if e.is_zero() {
            continue;
        }
        if e.is_one() {
            parts.push(format!("x{}", c + 1));
        } else {
            parts.push(format!("x{}^{}", c + 1, e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", format_monomial(&self.plus), format_monomial(&self.minus))
    }
}
