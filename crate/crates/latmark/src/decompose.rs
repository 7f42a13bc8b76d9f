//! Pure decomposition of a lattice: the support `sigma` of its nonnegative
//! elements, a witness of full `sigma`-support, the Hilbert basis of the
//! monoid of nonnegative lattice points, the pure sublattice, the projected
//! lattice, and Markov bases of pure lattices.

use crate::binomial::Binomial;
use crate::diophantine::{minimal_filter, DioSystem};
use crate::error::{Error, Result};
use crate::fm::IneqSystem;
use crate::hnf;
use crate::ivec::{self, IntVec};
use crate::lattice::{
    extend_to_basis, lattices_equal, primitive_scale, smith_invariants, Lattice, SmithInvariants,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A sorted set of coordinate indices (0-based internally; displayed 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    indices: Vec<usize>,
}

impl Support {
    pub fn new(mut indices: Vec<usize>) -> Support {
        indices.sort_unstable();
        indices.dedup();
        Support { indices }
    }

    pub fn empty() -> Support {
        Support { indices: Vec::new() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// The coordinates of `[0, n)` not in the support, ascending.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|i| !self.contains(*i)).collect()
    }

    /// Entries of `v` at the support coordinates.
    pub fn inside(&self, v: &[BigInt]) -> IntVec {
        ivec::select(v, &self.indices)
    }

    /// Entries of `v` away from the support coordinates.
    pub fn outside(&self, v: &[BigInt]) -> IntVec {
        ivec::select(v, &self.complement(v.len()))
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Feasibility system for "some lattice element is nonnegative everywhere
/// and at least 1 on each coordinate of `ones`", over the rational basis
/// coefficients.
fn positivity_system(l: &Lattice, ones: &[usize]) -> IneqSystem {
    let n = l.ambient_dim();
    let r = l.rank();
    let mut sys = IneqSystem::new(r);
    for k in 0..n {
        let col: IntVec = l.basis_rows().iter().map(|row| row[k].clone()).collect();
        let rhs = if ones.contains(&k) { BigInt::one() } else { BigInt::zero() };
        sys.geq(col, rhs);
    }
    sys
}

/// The set of coordinates attainable as support positions of nonnegative
/// lattice elements. Decided one coordinate at a time by exact rational
/// feasibility; a rational solution scales to a lattice point.
pub fn support_sigma(l: &Lattice) -> Support {
    let n = l.ambient_dim();
    let mut indices = Vec::new();
    for i in 0..n {
        if positivity_system(l, &[i]).feasible_point().is_some() {
            indices.push(i);
        }
    }
    Support::new(indices)
}

fn rational_to_lattice_point(l: &Lattice, point: &[BigRational]) -> IntVec {
    let mut lcm = BigInt::one();
    for x in point {
        lcm = lcm.lcm(x.denom());
    }
    let coeffs: IntVec = point.iter().map(|x| (x * BigRational::from(lcm.clone())).to_integer()).collect();
    l.linear_combination(&coeffs)
}

fn witness_for(l: &Lattice, sigma: &Support) -> Result<IntVec> {
    let sys = positivity_system(l, sigma.indices());
    let point = sys.feasible_point().ok_or(Error::EmptySigma)?;
    let w = rational_to_lattice_point(l, &point);
    primitive_scale(l, &w)
}

/// A nonnegative lattice element whose support is exactly `sigma`.
pub fn pure_witness(l: &Lattice) -> Result<IntVec> {
    let sigma = support_sigma(l);
    if sigma.is_empty() {
        return Err(Error::EmptySigma);
    }
    witness_for(l, &sigma)
}

/// Membership in the lattice expressed as equality functionals plus
/// congruence functionals, both with small entries; this is the system the
/// completion solver runs on.
pub(crate) struct LatticeSystem {
    pub equalities: Vec<IntVec>,
    pub congruences: Vec<(IntVec, BigInt)>,
}

fn balanced_mod(x: &BigInt, d: &BigInt) -> BigInt {
    let r = x.mod_floor(d);
    if &r + &r > *d {
        r - d
    } else {
        r
    }
}

pub(crate) fn lattice_system(l: &Lattice) -> LatticeSystem {
    let n = l.ambient_dim();
    let equalities = hnf::right_kernel(l.basis_rows(), n);
    let (diag, v) = hnf::snf_with_right_transform(l.basis_rows(), n);
    let mut congruences = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d > &BigInt::one() {
            let col: IntVec = (0..n).map(|k| balanced_mod(&v[k][i], d)).collect();
            congruences.push((col, d.clone()));
        }
    }
    LatticeSystem { equalities, congruences }
}

pub(crate) const COMPLETION_NODE_CAP: usize = 5_000_000;

/// The Hilbert basis of the monoid of nonnegative lattice points: the unique
/// minimal generating set, empty iff the lattice is positively graded.
pub fn hilbert_basis_positive(l: &Lattice) -> Result<Vec<IntVec>> {
    let n = l.ambient_dim();
    if l.is_zero() || n == 0 {
        return Ok(Vec::new());
    }
    let sys = lattice_system(l);
    let c = sys.congruences.len();
    let q = n + 2 * c;
    let mut rows = Vec::new();
    for a in &sys.equalities {
        let mut row = a.clone();
        row.extend(ivec::zeros(2 * c));
        rows.push(row);
    }
    for (j, (b, d)) in sys.congruences.iter().enumerate() {
        let mut row = b.clone();
        row.extend(ivec::zeros(2 * c));
        row[n + j] = -d.clone();
        row[n + c + j] = d.clone();
        rows.push(row);
    }
    let dio = DioSystem::new(rows, q);
    let sols = dio.minimal_solutions(COMPLETION_NODE_CAP)?;
    let vs: Vec<IntVec> = sols
        .into_iter()
        .map(|s| s[..n].to_vec())
        .filter(|v| !ivec::is_zero(v))
        .collect();
    Ok(minimal_filter(vs))
}

/// The minimal points of the coset `(u + L)` intersected with the
/// nonnegative orthant, by the same completion solver with a homogenizing
/// variable. `u` may have negative entries.
pub(crate) fn min_coset_points(l: &Lattice, u: &[BigInt], node_cap: usize) -> Result<Vec<IntVec>> {
    let n = l.ambient_dim();
    debug_assert_eq!(u.len(), n);
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let sys = lattice_system(l);
    let c = sys.congruences.len();
    let q = n + 2 * c + 1;
    let mut rows = Vec::new();
    for a in &sys.equalities {
        let mut row = a.clone();
        row.extend(ivec::zeros(2 * c));
        row.push(-ivec::dot(a, u));
        rows.push(row);
    }
    for (j, (b, d)) in sys.congruences.iter().enumerate() {
        let mut row = b.clone();
        row.extend(ivec::zeros(2 * c));
        row[n + j] = -d.clone();
        row[n + c + j] = d.clone();
        row.push(-balanced_mod(&ivec::dot(b, u), d));
        rows.push(row);
    }
    let mut dio = DioSystem::new(rows, q);
    dio.bounds[q - 1] = Some(1);
    let sols = dio.minimal_solutions(node_cap)?;
    let mut homogeneous = Vec::new();
    let mut coset = Vec::new();
    for s in sols {
        let v = s[..n].to_vec();
        if s[q - 1].is_zero() {
            if !ivec::is_zero(&v) {
                homogeneous.push(v);
            }
        } else {
            coset.push(v);
        }
    }
    let hilbert = minimal_filter(homogeneous);
    let mut out: Vec<IntVec> = coset
        .into_iter()
        .filter(|v| !hilbert.iter().any(|h| ivec::leq(h, v)))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The sublattice of elements vanishing outside `sigma`.
pub fn pure_sublattice(l: &Lattice, sigma: &Support) -> Lattice {
    let n = l.ambient_dim();
    let comp = sigma.complement(n);
    let restricted: Vec<IntVec> = l
        .basis_rows()
        .iter()
        .map(|row| ivec::select(row, &comp))
        .collect();
    let kernel = hnf::left_kernel(&restricted, comp.len());
    let gens: Vec<IntVec> = kernel
        .iter()
        .map(|coeffs| l.linear_combination(coeffs))
        .collect();
    Lattice::canonicalize(&gens, n).expect("dimensions agree")
}

/// The lattice of projections onto the coordinates outside `sigma`; always
/// positively graded.
pub fn projected_lattice(l: &Lattice, sigma: &Support) -> Lattice {
    let n = l.ambient_dim();
    let comp = sigma.complement(n);
    let gens: Vec<IntVec> = l
        .basis_rows()
        .iter()
        .map(|row| ivec::select(row, &comp))
        .collect();
    Lattice::canonicalize(&gens, comp.len()).expect("dimensions agree")
}

/// Everything the later stages need from a lattice, computed once.
pub(crate) struct Decomposition {
    pub sigma: Support,
    pub complement: Vec<usize>,
    pub pure: Lattice,
    pub projected: Lattice,
}

pub(crate) fn decompose(l: &Lattice) -> Decomposition {
    let sigma = support_sigma(l);
    let complement = sigma.complement(l.ambient_dim());
    let pure = pure_sublattice(l, &sigma);
    let projected = projected_lattice(l, &sigma);
    Decomposition { sigma, complement, pure, projected }
}

/// A basis of a pure lattice whose vectors are all nonnegative with support
/// exactly `sigma`. The first vector is the primitive witness; the others
/// are shifted by the least multiple of it that makes them strictly
/// positive on `sigma`.
pub fn pure_positive_basis(l_pure: &Lattice, sigma: &Support) -> Result<Vec<IntVec>> {
    let r = l_pure.rank();
    if r == 0 {
        return Err(Error::RankZero);
    }
    let w = witness_for(l_pure, sigma)?;
    let u1 = w;
    let ext = extend_to_basis(l_pure, &u1)?;
    let mut out = vec![u1.clone()];
    for u in ext.iter().skip(1) {
        let mut shift = BigInt::zero();
        for &j in sigma.indices() {
            let need = BigInt::one() - &u[j];
            if need.is_positive() {
                let k = need.div_ceil(&u1[j]);
                if k > shift {
                    shift = k;
                }
            }
        }
        out.push(ivec::add(u, &ivec::scale(&u1, &shift)));
    }
    Ok(out)
}

/// A Markov basis of the ideal of a pure lattice: one binomial per basis
/// vector, led by `x^w - 1` for the primitive witness `w`.
pub fn pure_markov_basis(l_pure: &Lattice, sigma: &Support) -> Result<Vec<Binomial>> {
    let r = l_pure.rank();
    if r == 0 {
        return Ok(Vec::new());
    }
    let u1 = witness_for(l_pure, sigma)?;
    let ext = extend_to_basis(l_pure, &u1)?;
    let n = l_pure.ambient_dim();
    let first = Binomial::from_terms(u1, ivec::zeros(n)).expect("nonnegative witness");
    let mut rest: Vec<Binomial> = ext
        .iter()
        .skip(1)
        .map(|u| Binomial::from_vector(u).normalized())
        .collect();
    rest.sort();
    let mut out = vec![first];
    out.extend(rest);
    Ok(out)
}

/// Generation test for pure lattice ideals: the difference vectors must span
/// the lattice, every term must live inside `sigma`, and the set must admit
/// an ordering that starts at a monomial-minus-one binomial and keeps each
/// trailing term inside the support already reached. With `exact_rank` the
/// cardinality must equal the rank, which upgrades "spans" to "is a basis".
pub(crate) fn pure_generation_check(l_pure: &Lattice, s: &[Binomial], exact_rank: bool) -> bool {
    let n = l_pure.ambient_dim();
    let r = l_pure.rank();
    if exact_rank && s.len() != r {
        return false;
    }
    if s.iter().any(|b| b.ambient_dim() != n) {
        return false;
    }
    let diffs: Vec<IntVec> = s.iter().map(|b| b.difference()).collect();
    let span = Lattice::canonicalize(&diffs, n).expect("checked ambient");
    if !lattices_equal(&span, l_pure).unwrap_or(false) {
        return false;
    }
    let sigma = support_sigma(l_pure);
    for b in s {
        let mut supp = ivec::support(b.plus());
        supp.extend(ivec::support(b.minus()));
        if supp.iter().any(|&i| !sigma.contains(i)) {
            return false;
        }
    }
    // Search for a valid ordering with sign flips.
    fn search(s: &[Binomial], used: &mut [bool], reached: &mut [bool]) -> bool {
        if used.iter().all(|&u| u) {
            return true;
        }
        for i in 0..s.len() {
            if used[i] {
                continue;
            }
            for flip in [false, true] {
                let (plus, minus) = if flip {
                    (s[i].minus(), s[i].plus())
                } else {
                    (s[i].plus(), s[i].minus())
                };
                if ivec::support(minus).iter().any(|&j| !reached[j]) {
                    continue;
                }
                let added: Vec<usize> = ivec::support(plus)
                    .into_iter()
                    .filter(|&j| !reached[j])
                    .collect();
                used[i] = true;
                for &j in &added {
                    reached[j] = true;
                }
                if search(s, used, reached) {
                    return true;
                }
                used[i] = false;
                for &j in &added {
                    reached[j] = false;
                }
            }
        }
        false
    }
    let mut used = vec![false; s.len()];
    let mut reached = vec![false; n];
    search(s, &mut used, &mut reached)
}

/// True iff `s` is a Markov basis of the ideal of the pure lattice: right
/// cardinality plus a rearrangement passing the three structural conditions.
pub fn verify_pure_markov(l_pure: &Lattice, s: &[Binomial]) -> bool {
    pure_generation_check(l_pure, s, true)
}

/// The full decomposition report for a lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport {
    pub ambient_dim: usize,
    pub rank: usize,
    pub sigma: Support,
    pub witness: Option<IntVec>,
    pub pure_basis: Vec<IntVec>,
    pub projected_basis: Vec<IntVec>,
    pub rank_pure: usize,
    pub rank_projected: usize,
    /// Invariants of `Z^{|sigma|}` modulo the sigma-restriction of the pure
    /// sublattice; its order is the common cardinality of all fiber classes.
    pub quotient: SmithInvariants,
    pub hilbert: Vec<IntVec>,
}

pub fn decomposition_report(l: &Lattice) -> Result<DecompositionReport> {
    let dec = decompose(l);
    let witness = if dec.sigma.is_empty() {
        None
    } else {
        Some(witness_for(l, &dec.sigma)?)
    };
    let restricted: Vec<IntVec> = dec
        .pure
        .basis_rows()
        .iter()
        .map(|row| dec.sigma.inside(row))
        .collect();
    let quotient = smith_invariants(&restricted, dec.sigma.len())?;
    let hilbert = hilbert_basis_positive(l)?;
    Ok(DecompositionReport {
        ambient_dim: l.ambient_dim(),
        rank: l.rank(),
        sigma: dec.sigma,
        witness,
        pure_basis: dec.pure.basis_rows().to_vec(),
        projected_basis: dec.projected.basis_rows().to_vec(),
        rank_pure: dec.pure.rank(),
        rank_projected: dec.projected.rank(),
        quotient,
        hilbert,
    })
}
