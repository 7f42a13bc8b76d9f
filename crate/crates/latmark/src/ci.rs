//! The binomial complete-intersection decision. The ideal of a lattice is a
//! binomial complete intersection exactly when the projected lattice needs
//! as few generators as its rank; a basis of the projected lattice forming
//! a mixed dominating matrix certifies it.

use crate::binomial::Binomial;
use crate::decompose::{decompose, pure_positive_basis, Support};
use crate::error::{Error, Result};
use crate::graded::SynthOptions;
use crate::ivec::{self, IntVec};
use crate::lattice::{lattices_equal, Lattice};
use crate::synthesis::{context, lift_vector};
use num_traits::{Signed, Zero};
use std::collections::{HashSet, VecDeque};

/// A row is mixed when it carries both a positive and a negative entry.
pub fn is_mixed_row(v: &[num_bigint::BigInt]) -> bool {
    v.iter().any(|x| x.is_positive()) && v.iter().any(|x| x.is_negative())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Every row mixed, and no square submatrix with every row mixed.
pub fn is_mixed_dominating(rows: &[IntVec]) -> bool {
    if rows.is_empty() {
        return true;
    }
    let ncols = rows[0].len();
    if rows.iter().any(|r| r.len() != ncols) {
        return false;
    }
    if rows.iter().any(|r| !is_mixed_row(r)) {
        return false;
    }
    let m = rows.len();
    for k in 1..=m.min(ncols) {
        for row_set in combinations(m, k) {
            for col_set in combinations(ncols, k) {
                let all_mixed = row_set.iter().all(|&i| {
                    let sub = ivec::select(&rows[i], &col_set);
                    is_mixed_row(&sub)
                });
                if all_mixed {
                    return false;
                }
            }
        }
    }
    true
}

fn canonical_state(rows: &[IntVec]) -> Vec<IntVec> {
    let mut out: Vec<IntVec> = rows
        .iter()
        .map(|r| match r.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => ivec::neg(r),
            _ => r.clone(),
        })
        .collect();
    out.sort();
    out
}

const CERT_DEPTH: usize = 6;
const CERT_QUEUE: usize = 5_000;

/// Bounded search for a basis of the lattice that is mixed dominating:
/// breadth-first over elementary row operations from the canonical basis.
/// Mixed dominance is invariant under row order and row signs, so states
/// are deduplicated up to both.
fn certificate_search(l: &Lattice) -> Option<Vec<IntVec>> {
    if l.rank() == 0 {
        return Some(Vec::new());
    }
    let start = canonical_state(l.basis_rows());
    let mut seen: HashSet<Vec<IntVec>> = HashSet::new();
    let mut queue: VecDeque<(Vec<IntVec>, usize)> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start, 0));
    while let Some((rows, depth)) = queue.pop_front() {
        if is_mixed_dominating(&rows) {
            return Some(rows);
        }
        if depth == CERT_DEPTH || seen.len() >= CERT_QUEUE {
            continue;
        }
        let m = rows.len();
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let mut next = rows.clone();
                    let delta = ivec::scale(&rows[j], &num_bigint::BigInt::from(sign));
                    next[i] = ivec::add(&next[i], &delta);
                    if ivec::is_zero(&next[i]) {
                        continue;
                    }
                    let canon = canonical_state(&next);
                    if seen.insert(canon.clone()) {
                        queue.push_back((canon, depth + 1));
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CiMethod {
    /// Decided by comparing the projected Markov number with the rank.
    MuRank,
    /// Additionally certified by a mixed dominating basis.
    Certificate,
}

/// The block form `[A M; C 0]` of a lattice basis witnessing a complete
/// intersection, over the coordinate order `sigma` ascending then the
/// complement ascending.
#[derive(Clone, Debug)]
pub struct BlockPresentation {
    pub a: Vec<IntVec>,
    pub m: Vec<IntVec>,
    pub c: Vec<IntVec>,
}

#[derive(Clone, Debug)]
pub struct CIReport {
    pub is_ci: bool,
    pub method: CiMethod,
    pub mu_projected: usize,
    pub rank_projected: usize,
    pub certificate_matrix: Option<Vec<IntVec>>,
    pub block_presentation: Option<BlockPresentation>,
}

pub fn is_binomial_ci(l: &Lattice) -> Result<CIReport> {
    is_binomial_ci_opt(l, &SynthOptions::default())
}

pub fn is_binomial_ci_opt(l: &Lattice, opt: &SynthOptions) -> Result<CIReport> {
    let ctx = context(l, opt)?;
    let mu_projected = ctx.synth.mu();
    let rank_projected = ctx.dec.projected.rank();
    let is_ci = mu_projected == rank_projected;
    let mut certificate_matrix = None;
    let mut block_presentation = None;
    if is_ci {
        if let Some(cert) = certificate_search(&ctx.dec.projected) {
            let mut a = Vec::new();
            for row in &cert {
                let lifted = lift_vector(l, &ctx.dec.sigma, row)?;
                a.push(ctx.dec.sigma.inside(&lifted));
            }
            let c = if ctx.dec.pure.rank() > 0 {
                pure_positive_basis(&ctx.dec.pure, &ctx.dec.sigma)?
                    .iter()
                    .map(|u| ctx.dec.sigma.inside(u))
                    .collect()
            } else {
                Vec::new()
            };
            block_presentation = Some(BlockPresentation { a, m: cert.clone(), c });
            certificate_matrix = Some(cert);
        }
    }
    let method = if certificate_matrix.is_some() {
        CiMethod::Certificate
    } else {
        CiMethod::MuRank
    };
    Ok(CIReport {
        is_ci,
        method,
        mu_projected,
        rank_projected,
        certificate_matrix,
        block_presentation,
    })
}

/// True iff the rows form a basis of the projected lattice and a mixed
/// dominating matrix.
pub fn ci_certificate_check(l: &Lattice, rows: &[IntVec]) -> Result<bool> {
    let dec = decompose(l);
    let want = l.ambient_dim() - dec.sigma.len();
    for r in rows {
        if r.len() != want {
            return Err(Error::DimensionMismatch { expected: want, found: r.len() });
        }
    }
    let span = Lattice::canonicalize(rows, want)?;
    Ok(lattices_equal(&span, &dec.projected)? && is_mixed_dominating(rows))
}

/// The binomials of the block presentation rows, mainly for display.
pub fn block_binomials(sigma: &Support, block: &BlockPresentation, n: usize) -> Vec<Binomial> {
    let comp: Vec<usize> = sigma.complement(n);
    let mut out = Vec::new();
    for (a_row, m_row) in block.a.iter().zip(&block.m) {
        let mut full = ivec::scatter(a_row, sigma.indices(), n);
        for (val, &i) in m_row.iter().zip(&comp) {
            full[i] = val.clone();
        }
        out.push(Binomial::from_vector(&full));
    }
    for c_row in &block.c {
        let full = ivec::scatter(c_row, sigma.indices(), n);
        out.push(Binomial::from_vector(&full));
    }
    out
}
