//! Minimal solutions of homogeneous linear systems over the naturals, by
//! the Contejean-Devie completion: breadth-first growth from the unit
//! vectors, extending `x` by `e_j` only while `<Ax, Ae_j> < 0`, pruning
//! anything that dominates a solution already found.

use crate::error::{Error, Result};
use crate::ivec::{self, IntVec};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashSet;

/// `rows * x = 0`, `x` ranging over `N^nvars`, with optional per-variable
/// upper bounds.
pub struct DioSystem {
    pub rows: Vec<IntVec>,
    pub nvars: usize,
    pub bounds: Vec<Option<u64>>,
}

impl DioSystem {
    pub fn new(rows: Vec<IntVec>, nvars: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), nvars);
        }
        DioSystem { rows, nvars, bounds: vec![None; nvars] }
    }

    fn column(&self, j: usize) -> IntVec {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// All minimal nonzero solutions. `node_cap` bounds the total number of
    /// search nodes.
    pub fn minimal_solutions(&self, node_cap: usize) -> Result<Vec<IntVec>> {
        let q = self.nvars;
        let m = self.rows.len();
        let cols: Vec<IntVec> = (0..q).map(|j| self.column(j)).collect();
        let mut solutions: Vec<IntVec> = Vec::new();
        let mut frontier: Vec<(IntVec, IntVec)> = Vec::new();
        let mut seen: HashSet<IntVec> = HashSet::new();
        for j in 0..q {
            if self.bounds[j] == Some(0) {
                continue;
            }
            let mut x = vec![BigInt::zero(); q];
            x[j] = BigInt::from(1);
            if seen.insert(x.clone()) {
                frontier.push((x, cols[j].clone()));
            }
        }
        let mut nodes = 0usize;
        while !frontier.is_empty() {
            let mut next: Vec<(IntVec, IntVec)> = Vec::new();
            for (x, ax) in frontier.drain(..) {
                nodes += 1;
                if nodes > node_cap {
                    return Err(Error::ResourceLimit { what: "completion search", limit: node_cap });
                }
                // Re-check at pop time: a solution found earlier in this level
                // may dominate a node that was generated before it appeared.
                if solutions.iter().any(|s| ivec::leq(s, &x)) {
                    continue;
                }
                if ax.iter().all(|v| v.is_zero()) {
                    // Minimal: any dominating pair differs in norm, and the
                    // lower-norm solution is found first and prunes the other.
                    solutions.push(x);
                    continue;
                }
                for j in 0..q {
                    if let Some(b) = self.bounds[j] {
                        if x[j] >= BigInt::from(b) {
                            continue;
                        }
                    }
                    let d: BigInt = (0..m).map(|i| &ax[i] * &cols[j][i]).sum();
                    if d >= BigInt::zero() {
                        continue;
                    }
                    let mut x2 = x.clone();
                    x2[j] += 1;
                    if seen.contains(&x2) {
                        continue;
                    }
                    if solutions.iter().any(|s| ivec::leq(s, &x2)) {
                        continue;
                    }
                    seen.insert(x2.clone());
                    let ax2 = ivec::add(&ax, &cols[j]);
                    next.push((x2, ax2));
                }
            }
            frontier = next;
        }
        Ok(solutions)
    }
}

/// Discards the elements that strictly dominate another element.
pub fn minimal_filter(mut vecs: Vec<IntVec>) -> Vec<IntVec> {
    vecs.sort();
    vecs.dedup();
    let keep: Vec<bool> = vecs
        .iter()
        .map(|v| !vecs.iter().any(|w| w != v && ivec::leq(w, v)))
        .collect();
    vecs.into_iter()
        .zip(keep)
        .filter_map(|(v, k)| if k { Some(v) } else { None })
        .collect()
}
