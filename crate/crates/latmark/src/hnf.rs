//! Hermite and Smith normal forms over the integers, with the solve,
//! reduce and kernel routines built on top of them.
//!
//! Convention: matrices are row-major `Vec<IntVec>`, lattices are row spans.
//! The Hermite normal form used here is the row-style one: pivots positive,
//! zero below each pivot, entries above a pivot reduced into `[0, pivot)`.

use crate::ivec::{self, IntVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub struct HnfResult {
    /// `m` rows: the nonzero HNF rows first, then zero rows.
    pub h: Vec<IntVec>,
    /// `m x m` unimodular transform with `u * input = h`.
    pub u: Vec<IntVec>,
    pub rank: usize,
}

/// Row Hermite normal form together with the unimodular row transform.
pub fn hnf_with_transform(rows: &[IntVec], n: usize) -> HnfResult {
    let m = rows.len();
    let mut h: Vec<IntVec> = rows.to_vec();
    for r in &h {
        assert_eq!(r.len(), n, "row length must equal the ambient dimension");
    }
    let mut u: Vec<IntVec> = (0..m)
        .map(|i| {
            let mut row = ivec::zeros(m);
            row[i] = BigInt::one();
            row
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == m {
            break;
        }
        // Euclidean elimination below the current pivot row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..m {
                if !h[i][col].is_zero() {
                    match best {
                        None => best = Some(i),
                        Some(b) => {
                            if h[i][col].abs() < h[b][col].abs() {
                                best = Some(i);
                            }
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut others = false;
            for i in (pivot_row + 1)..m {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = h[i][col].div_floor(&h[pivot_row][col]);
                if !q.is_zero() {
                    for k in 0..n {
                        let t = &h[pivot_row][k] * &q;
                        h[i][k] -= t;
                    }
                    for k in 0..m {
                        let t = &u[pivot_row][k] * &q;
                        u[i][k] -= t;
                    }
                }
                if !h[i][col].is_zero() {
                    others = true;
                }
            }
            if !others {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            for k in 0..n {
                h[pivot_row][k] = -&h[pivot_row][k];
            }
            for k in 0..m {
                u[pivot_row][k] = -&u[pivot_row][k];
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = h[i][col].div_floor(&h[pivot_row][col]);
            if !q.is_zero() {
                for k in 0..n {
                    let t = &h[pivot_row][k] * &q;
                    h[i][k] -= t;
                }
                for k in 0..m {
                    let t = &u[pivot_row][k] * &q;
                    u[i][k] -= t;
                }
            }
        }
        pivot_row += 1;
    }
    HnfResult { h, u, rank: pivot_row }
}

/// Nonzero rows of the row Hermite normal form.
pub fn hnf(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    let res = hnf_with_transform(rows, n);
    res.h.into_iter().take(res.rank).collect()
}

/// Pivot column of each nonzero HNF row.
pub fn pivot_columns(h: &[IntVec]) -> Vec<usize> {
    h.iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

/// Exact coefficients of `v` over the HNF rows, or `None` if `v` is outside
/// the row span.
pub fn solve_in_span(h: &[IntVec], pivots: &[usize], v: &[BigInt]) -> Option<IntVec> {
    let mut residual = v.to_vec();
    let mut coeffs = Vec::with_capacity(h.len());
    for (row, &p) in h.iter().zip(pivots) {
        let (q, rem) = residual[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for k in 0..residual.len() {
                let t = &row[k] * &q;
                residual[k] -= t;
            }
        }
        coeffs.push(q);
    }
    if ivec::is_zero(&residual) {
        Some(coeffs)
    } else {
        None
    }
}

/// Canonical coset representative of `v` modulo the row span: the pivot
/// coordinates land in `[0, pivot)`, so two vectors are congruent iff their
/// reductions are equal.
pub fn reduce_mod_span(h: &[IntVec], pivots: &[usize], v: &[BigInt]) -> IntVec {
    let mut residual = v.to_vec();
    for (row, &p) in h.iter().zip(pivots) {
        let q = residual[p].div_floor(&row[p]);
        if !q.is_zero() {
            for k in 0..residual.len() {
                let t = &row[k] * &q;
                residual[k] -= t;
            }
        }
    }
    residual
}

/// Basis (in HNF) of `{ lambda : lambda * rows = 0 }`.
pub fn left_kernel(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    let m = rows.len();
    let res = hnf_with_transform(rows, n);
    let kernel: Vec<IntVec> = res.u.into_iter().skip(res.rank).collect();
    hnf(&kernel, m)
}

pub fn transpose(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Basis (in HNF) of `{ c in Z^n : rows * c = 0 }`, returned as row vectors.
pub fn right_kernel(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    left_kernel(&transpose(rows, n), rows.len())
}

/// Smith normal form diagonal of the matrix together with the right
/// transform `v` (`n x n`, unimodular): there is a unimodular `u` with
/// `u * rows * v` diagonal. Diagonal entries are nonnegative and form a
/// divisibility chain.
pub fn snf_with_right_transform(rows: &[IntVec], n: usize) -> (Vec<BigInt>, Vec<IntVec>) {
    let m = rows.len();
    let mut a: Vec<IntVec> = rows.to_vec();
    for r in &a {
        assert_eq!(r.len(), n);
    }
    let mut v: Vec<IntVec> = (0..n)
        .map(|i| {
            let mut row = ivec::zeros(n);
            row[i] = BigInt::one();
            row
        })
        .collect();
    // Column operation helpers keep `v` in sync; `v` is stored row-major, so
    // a column op on `a` is the same column op on `v`.
    let dim = m.min(n);
    let mut t = 0;
    while t < dim {
        // Find a pivot: the nonzero entry of least magnitude in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero()
                    && pivot
                        .map(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }
        // Clear row t and column t.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in (t + 1)..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for k in 0..n {
                        let s = &a[t][k] * &q;
                        a[i][k] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in (t + 1)..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                    for row in v.iter_mut() {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
        }
        if a[t][t].is_negative() {
            for k in 0..n {
                a[t][k] = -&a[t][k];
            }
        }
        // Divisibility fix: fold any bad entry's column into column t and redo.
        let mut bad = None;
        'scan: for i in (t + 1)..m {
            for j in (t + 1)..n {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    bad = Some(j);
                    break 'scan;
                }
            }
        }
        if let Some(j) = bad {
            for row in a.iter_mut() {
                let s = row[j].clone();
                row[t] += s;
            }
            for row in v.iter_mut() {
                let s = row[j].clone();
                row[t] += s;
            }
            continue;
        }
        t += 1;
    }
    let diag: Vec<BigInt> = (0..dim).map(|i| a[i][i].abs()).collect();
    (diag, v)
}

/// Nonzero Smith invariant factors of the row span inside `Z^n`.
pub fn snf_nonzero_diagonal(rows: &[IntVec], n: usize) -> Vec<BigInt> {
    let (diag, _) = snf_with_right_transform(rows, n);
    diag.into_iter().filter(|d| !d.is_zero()).collect()
}

/// Exact determinant of a square matrix by fraction-free elimination.
pub fn determinant(rows: &[IntVec]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    for r in &a {
        assert_eq!(r.len(), n, "determinant needs a square matrix");
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Extends a row `c` with `gcd(c) = 1` to a unimodular matrix whose first
/// row is `c`.
pub fn complete_primitive_row(c: &[BigInt]) -> Vec<IntVec> {
    let r = c.len();
    assert!(r > 0);
    // Reduce `c` to e_1 by elementary column operations while keeping a
    // matrix `t` with `c = e_1 * t` under the same inverse row operations.
    let mut cur = c.to_vec();
    let mut t: Vec<IntVec> = (0..r)
        .map(|i| {
            let mut row = ivec::zeros(r);
            row[i] = BigInt::one();
            row
        })
        .collect();
    loop {
        // Position of the entry of least magnitude among nonzero entries.
        let mut best: Option<usize> = None;
        for j in 0..r {
            if !cur[j].is_zero()
                && best.map(|b| cur[j].abs() < cur[b].abs()).unwrap_or(true)
            {
                best = Some(j);
            }
        }
        let b = best.expect("gcd of a primitive row is 1, so a nonzero entry exists");
        let mut done = true;
        for j in 0..r {
            if j == b || cur[j].is_zero() {
                continue;
            }
            let q = cur[j].div_floor(&cur[b]);
            // column op: col_j -= q * col_b  =>  row op on t: row_b += q * row_j
            let step = &q * &cur[b];
            cur[j] -= step;
            let add: IntVec = t[j].iter().map(|x| x * &q).collect();
            for k in 0..r {
                t[b][k] += &add[k];
            }
            if !cur[j].is_zero() {
                done = false;
            }
        }
        if done {
            if b != 0 {
                // column swap 0 <-> b; inverse row op is the same swap
                cur.swap(0, b);
                t.swap(0, b);
            }
            if cur[0].is_negative() {
                cur[0] = -&cur[0];
                for k in 0..r {
                    t[0][k] = -&t[0][k];
                }
            }
            assert!(cur[0].is_one(), "row is not primitive");
            return t;
        }
    }
}
