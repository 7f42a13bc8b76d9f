//! Exact Fourier-Motzkin elimination over the rationals, with integer
//! constraint rows throughout. Used for feasibility of rational cones, for
//! extracting a rational point, and for enumerating the integer points of a
//! bounded polyhedron.

use crate::error::{Error, Result};
use crate::ivec::{self, IntVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::HashSet;

/// A system of inequalities `a . x >= b` over `nvars` rational variables.
#[derive(Clone, Debug)]
pub struct IneqSystem {
    pub rows: Vec<(IntVec, BigInt)>,
    pub nvars: usize,
}

fn normalize(coeffs: &mut IntVec, rhs: &mut BigInt) {
    let mut g = BigInt::zero();
    for c in coeffs.iter() {
        g = g.gcd(c);
    }
    g = g.gcd(rhs);
    if g > BigInt::from(1) {
        for c in coeffs.iter_mut() {
            *c /= &g;
        }
        *rhs /= &g;
    }
}

impl IneqSystem {
    pub fn new(nvars: usize) -> Self {
        IneqSystem { rows: Vec::new(), nvars }
    }

    pub fn geq(&mut self, coeffs: IntVec, rhs: BigInt) {
        debug_assert_eq!(coeffs.len(), self.nvars);
        let mut c = coeffs;
        let mut r = rhs;
        normalize(&mut c, &mut r);
        self.rows.push((c, r));
    }

    pub fn eq(&mut self, coeffs: IntVec, rhs: BigInt) {
        self.geq(coeffs.clone(), rhs.clone());
        self.geq(ivec::neg(&coeffs), -rhs);
    }

    /// Eliminates the last variable, producing a system over `nvars - 1`
    /// variables with the same projection.
    fn eliminate_last(&self) -> IneqSystem {
        let k = self.nvars - 1;
        let mut out = IneqSystem::new(k);
        let mut seen: HashSet<(IntVec, BigInt)> = HashSet::new();
        let mut lowers: Vec<&(IntVec, BigInt)> = Vec::new();
        let mut uppers: Vec<&(IntVec, BigInt)> = Vec::new();
        for row in &self.rows {
            let c = &row.0[k];
            if c.is_zero() {
                let mut coeffs = row.0[..k].to_vec();
                let mut rhs = row.1.clone();
                normalize(&mut coeffs, &mut rhs);
                if seen.insert((coeffs.clone(), rhs.clone())) {
                    out.rows.push((coeffs, rhs));
                }
            } else if c.is_positive() {
                lowers.push(row);
            } else {
                uppers.push(row);
            }
        }
        for (lc, lb) in &lowers {
            let p = &lc[self.nvars - 1];
            for (uc, ub) in &uppers {
                let q = &uc[self.nvars - 1]; // negative
                // (-q) * lower + p * upper eliminates the variable.
                let mq = -q;
                let mut coeffs: IntVec = (0..k)
                    .map(|i| &mq * &lc[i] + p * &uc[i])
                    .collect();
                let mut rhs = &mq * lb + p * ub;
                normalize(&mut coeffs, &mut rhs);
                if seen.insert((coeffs.clone(), rhs.clone())) {
                    out.rows.push((coeffs, rhs));
                }
            }
        }
        out
    }

    fn consistent_constants(&self) -> bool {
        debug_assert_eq!(self.nvars, 0);
        self.rows.iter().all(|(_, b)| !b.is_positive())
    }

    /// Rational bounds on the last variable once the first `nvars - 1`
    /// variables are fixed to `prefix`. `None` means unbounded on that side.
    fn last_var_bounds(
        &self,
        prefix: &[BigRational],
    ) -> Option<(Option<BigRational>, Option<BigRational>)> {
        let k = self.nvars - 1;
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for (c, b) in &self.rows {
            let mut rest = BigRational::from(b.clone());
            for i in 0..k {
                rest -= BigRational::from(c[i].clone()) * &prefix[i];
            }
            let ck = &c[k];
            if ck.is_zero() {
                if rest.is_positive() {
                    return None;
                }
            } else {
                let bound = rest / BigRational::from(ck.clone());
                if ck.is_positive() {
                    if lo.as_ref().map(|l| bound > *l).unwrap_or(true) {
                        lo = Some(bound);
                    }
                } else if hi.as_ref().map(|h| bound < *h).unwrap_or(true) {
                    hi = Some(bound);
                }
            }
        }
        Some((lo, hi))
    }

    /// A rational point satisfying every inequality, if one exists.
    pub fn feasible_point(&self) -> Option<Vec<BigRational>> {
        if self.nvars == 0 {
            return if self.consistent_constants() {
                Some(Vec::new())
            } else {
                None
            };
        }
        let reduced = self.eliminate_last();
        let prefix = reduced.feasible_point()?;
        let (lo, hi) = self.last_var_bounds(&prefix)?;
        let value = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => BigRational::zero(),
        };
        let mut point = prefix;
        point.push(value);
        Some(point)
    }

    /// All integer points of the polyhedron. Errors if the polyhedron is
    /// unbounded, or once more than `cap` points (at any projection level)
    /// have been materialized.
    pub fn integer_points(&self, cap: usize) -> Result<Vec<IntVec>> {
        let mut count = 0usize;
        self.integer_points_inner(cap, &mut count)
    }

    fn integer_points_inner(&self, cap: usize, count: &mut usize) -> Result<Vec<IntVec>> {
        if self.nvars == 0 {
            return if self.consistent_constants() {
                Ok(vec![Vec::new()])
            } else {
                Ok(Vec::new())
            };
        }
        let reduced = self.eliminate_last();
        let prefixes = reduced.integer_points_inner(cap, count)?;
        let mut out = Vec::new();
        for prefix in prefixes {
            let rational: Vec<BigRational> = prefix
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect();
            let Some((lo, hi)) = self.last_var_bounds(&rational) else {
                continue;
            };
            let (Some(lo), Some(hi)) = (lo, hi) else {
                return Err(Error::NotPositivelyGraded);
            };
            let mut v = lo.ceil().to_integer();
            let top = hi.floor().to_integer();
            while v <= top {
                *count += 1;
                if *count > cap {
                    return Err(Error::ResourceLimit { what: "fiber enumeration", limit: cap });
                }
                let mut point = prefix.clone();
                point.push(v.clone());
                out.push(point);
                v += 1;
            }
        }
        Ok(out)
    }
}
