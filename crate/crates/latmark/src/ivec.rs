//! Arbitrary-precision integer vectors and small helpers used everywhere.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A lattice-coordinate vector with arbitrary-precision entries.
pub type IntVec = Vec<BigInt>;

pub fn zeros(n: usize) -> IntVec {
    vec![BigInt::zero(); n]
}

pub fn from_i64s(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn is_nonneg(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntVec {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntVec {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[BigInt]) -> IntVec {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[BigInt], k: &BigInt) -> IntVec {
    a.iter().map(|x| x * k).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Indices of the nonzero entries, ascending.
pub fn support(v: &[BigInt]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Componentwise `a <= b`.
pub fn leq(a: &[BigInt], b: &[BigInt]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn positive_part(v: &[BigInt]) -> IntVec {
    v.iter()
        .map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() })
        .collect()
}

pub fn negative_part(v: &[BigInt]) -> IntVec {
    v.iter()
        .map(|x| if x.is_negative() { -x } else { BigInt::zero() })
        .collect()
}

/// Componentwise minimum.
pub fn min(a: &[BigInt], b: &[BigInt]) -> IntVec {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.min(y).clone()).collect()
}

/// `h` is conformal to `g` and componentwise no larger: `h ⊑ g`.
pub fn conformal_leq(h: &[BigInt], g: &[BigInt]) -> bool {
    debug_assert_eq!(h.len(), g.len());
    h.iter().zip(g).all(|(x, y)| {
        (x.sign() == y.sign() || x.is_zero()) && x.abs() <= y.abs()
    })
}

/// Picks the entries at `indices`, in order.
pub fn select(v: &[BigInt], indices: &[usize]) -> IntVec {
    indices.iter().map(|&i| v[i].clone()).collect()
}

/// Scatters `values` into a zero vector of length `n` at `indices`.
pub fn scatter(values: &[BigInt], indices: &[usize], n: usize) -> IntVec {
    debug_assert_eq!(values.len(), indices.len());
    let mut out = zeros(n);
    for (val, &i) in values.iter().zip(indices) {
        out[i] = val.clone();
    }
    out
}

pub fn fmt_vec(v: &[BigInt]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(", "))
}
