//! The positively graded engine: finite fiber enumeration, the Graver basis
//! by completion, fiber graphs, Markov basis synthesis and indispensability.
//!
//! Everything here requires `L` with no nonzero nonnegative element; general
//! lattices are handled by projecting away `sigma` first (see `synthesis`).

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::fm::IneqSystem;
use crate::ivec::{self, IntVec};
use crate::lattice::Lattice;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, VecDeque};

/// Knobs for the synthesis loop. `seed` permutes the tie-break order among
/// incomparable fibers and among candidate connecting pairs; the computed
/// invariants do not depend on it.
#[derive(Clone, Debug)]
pub struct SynthOptions {
    pub max_fiber: usize,
    pub seed: Option<u64>,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions { max_fiber: crate::DEFAULT_MAX_FIBER, seed: None }
    }
}

/// A finite fiber: every nonnegative vector congruent to the representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fiber {
    pub representative: IntVec,
    /// All elements, sorted lexicographically.
    pub elements: Vec<IntVec>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, v: &[BigInt]) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_slice().cmp(v)).ok()
    }
}

/// A strictly positive integer vector orthogonal to the lattice, which
/// exists iff the lattice is positively graded; it grades all fibers.
pub(crate) fn positive_grading(l: &Lattice) -> Option<IntVec> {
    let n = l.ambient_dim();
    let mut sys = IneqSystem::new(n);
    for i in 0..n {
        let mut row = ivec::zeros(n);
        row[i] = BigInt::one();
        sys.geq(row, BigInt::one());
    }
    for row in l.basis_rows() {
        sys.eq(row.clone(), BigInt::zero());
    }
    let point = sys.feasible_point()?;
    let mut lcm = BigInt::one();
    for x in &point {
        lcm = lcm.lcm(x.denom());
    }
    Some(
        point
            .iter()
            .map(|x| (x * BigRational::from(lcm.clone())).to_integer())
            .collect(),
    )
}

pub(crate) fn enumerate_fiber_inner(l: &Lattice, u: &[BigInt], cap: usize) -> Result<Fiber> {
    let n = l.ambient_dim();
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.len() });
    }
    let r = l.rank();
    let mut sys = IneqSystem::new(r);
    for k in 0..n {
        let col: IntVec = l.basis_rows().iter().map(|row| row[k].clone()).collect();
        sys.geq(col, -u[k].clone());
    }
    let coeffs = sys.integer_points(cap)?;
    let mut elements: Vec<IntVec> = coeffs
        .into_iter()
        .map(|lambda| ivec::add(u, &l.linear_combination(&lambda)))
        .collect();
    elements.sort();
    Ok(Fiber { representative: u.to_vec(), elements })
}

/// The complete finite set of nonnegative vectors congruent to `u` modulo a
/// positively graded lattice.
pub fn enumerate_fiber(l: &Lattice, u: &[BigInt]) -> Result<Fiber> {
    if !ivec::is_nonneg(u) {
        return Err(Error::Parse("fiber representative must be nonnegative".into()));
    }
    enumerate_fiber_inner(l, u, crate::DEFAULT_MAX_FIBER)
}

/// The set of conformally minimal nonzero lattice vectors, one representative
/// per sign pair (the lexicographically positive one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraverBasis {
    pub moves: Vec<IntVec>,
}

impl GraverBasis {
    pub fn contains_up_to_sign(&self, v: &[BigInt]) -> bool {
        let rep = sign_normalize(v);
        self.moves.binary_search(&rep).is_ok()
    }
}

fn sign_normalize(v: &[BigInt]) -> IntVec {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => ivec::neg(v),
        _ => v.to_vec(),
    }
}

fn conformal_normal_form(mut s: IntVec, basis: &[IntVec]) -> IntVec {
    'outer: loop {
        if ivec::is_zero(&s) {
            return s;
        }
        for h in basis {
            if !ivec::is_zero(h) && ivec::conformal_leq(h, &s) {
                s = ivec::sub(&s, h);
                continue 'outer;
            }
        }
        return s;
    }
}

pub(crate) fn graver_inner(l: &Lattice) -> GraverBasis {
    let mut set: Vec<IntVec> = Vec::new();
    for row in l.basis_rows() {
        set.push(row.clone());
        set.push(ivec::neg(row));
    }
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..set.len() {
        for j in (i + 1)..set.len() {
            queue.push_back((i, j));
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        let s = ivec::add(&set[i], &set[j]);
        let nf = conformal_normal_form(s, &set);
        if ivec::is_zero(&nf) {
            continue;
        }
        let neg = ivec::neg(&nf);
        for w in [nf, neg] {
            let idx = set.len();
            for k in 0..idx {
                queue.push_back((k, idx));
            }
            set.push(w);
        }
    }
    // Keep the conformally minimal ones, one representative per sign pair.
    let mut moves: Vec<IntVec> = set
        .iter()
        .filter(|v| {
            !ivec::is_zero(v)
                && !set
                    .iter()
                    .any(|h| h != *v && !ivec::is_zero(h) && ivec::conformal_leq(h, v))
        })
        .map(|v| sign_normalize(v))
        .collect();
    moves.sort();
    moves.dedup();
    GraverBasis { moves }
}

/// The Graver basis of a positively graded lattice, by completion from the
/// canonical basis.
pub fn graver_basis(l: &Lattice) -> Result<GraverBasis> {
    if positive_grading(l).is_none() {
        return Err(Error::NotPositivelyGraded);
    }
    Ok(graver_inner(l))
}

/// The move graph of a fiber: vertices are the fiber elements, and a move
/// `x^b - x^c` joins `e` to `e - b + c` whenever both are in the fiber.
#[derive(Clone, Debug)]
pub struct FiberGraph {
    pub fiber: Fiber,
    /// `(i, j, k)`: elements `i` and `j` joined by move `k`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl FiberGraph {
    pub fn build(fiber: &Fiber, moves: &[Binomial]) -> FiberGraph {
        let mut edges = Vec::new();
        for (k, b) in moves.iter().enumerate() {
            if b.ambient_dim() != fiber.representative.len() || b.is_trivial() {
                continue;
            }
            for (i, e) in fiber.elements.iter().enumerate() {
                if !ivec::leq(b.plus(), e) {
                    continue;
                }
                let partner = ivec::add(&ivec::sub(e, b.plus()), b.minus());
                if let Some(j) = fiber.position(&partner) {
                    if i < j {
                        edges.push((i, j, k));
                    } else if j < i {
                        edges.push((j, i, k));
                    }
                }
            }
        }
        edges.sort();
        edges.dedup();
        FiberGraph { fiber: fiber.clone(), edges }
    }

    /// Connected components as sorted lists of element indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.fiber.len();
        let mut uf = UnionFind::new(n);
        for &(i, j, _) in &self.edges {
            uf.union(i, j);
        }
        uf.components()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let (a, b) = (self.find(i), self.find(j));
        if a == b {
            return false;
        }
        self.parent[a] = b;
        true
    }

    pub fn components(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..n {
            let r = self.find(i);
            map.entry(r).or_default().push(i);
        }
        let mut comps: Vec<Vec<usize>> = map.into_values().collect();
        comps.sort();
        comps
    }
}

/// True iff the move graph of the fiber under `moves` is connected.
pub fn spath_connected(fiber: &Fiber, moves: &[Binomial]) -> bool {
    FiberGraph::build(fiber, moves).is_connected()
}

/// A fiber that forces generators: its move graph over the binomials of all
/// strictly smaller fibers is disconnected.
#[derive(Clone, Debug)]
pub struct BettiFiber {
    pub fiber: Fiber,
    /// Components of the fiber under the moves of strictly smaller fibers.
    pub components: Vec<Vec<usize>>,
    /// The binomials selected to join those components.
    pub added: Vec<Binomial>,
}

impl BettiFiber {
    pub fn t_value(&self) -> usize {
        self.components.len()
    }
}

/// The outcome of the graded synthesis: a Markov basis plus the Betti fibers
/// it came from.
#[derive(Clone, Debug)]
pub struct GradedSynthesis {
    pub basis: Vec<Binomial>,
    pub betti: Vec<BettiFiber>,
    pub grading: IntVec,
}

impl GradedSynthesis {
    pub fn mu(&self) -> usize {
        self.basis.len()
    }
}

/// Synthesizes a Markov basis of a positively graded lattice: fibers of
/// Graver moves are processed in increasing grading degree, and each fiber
/// that the smaller moves leave disconnected contributes one spanning tree
/// of connecting binomials.
pub fn synthesize_graded(l: &Lattice, opt: &SynthOptions) -> Result<GradedSynthesis> {
    let Some(grading) = positive_grading(l) else {
        return Err(Error::NotPositivelyGraded);
    };
    if l.rank() == 0 {
        return Ok(GradedSynthesis { basis: Vec::new(), betti: Vec::new(), grading });
    }
    let graver = graver_inner(l);
    let mut seen: HashMap<IntVec, IntVec> = HashMap::new();
    for g in &graver.moves {
        let rep = ivec::positive_part(g);
        let key = l.reduce(&rep)?;
        seen.entry(key).or_insert(rep);
    }
    let mut candidates: Vec<(BigInt, IntVec, IntVec)> = seen
        .into_iter()
        .map(|(key, rep)| (ivec::dot(&grading, &rep), key, rep))
        .collect();
    candidates.sort();
    let mut rng = opt.seed.map(ChaCha8Rng::seed_from_u64);
    if let Some(rng) = rng.as_mut() {
        // Shuffle within equal-degree groups; such fibers are incomparable,
        // so the processing order among them is immaterial.
        let mut i = 0;
        while i < candidates.len() {
            let mut j = i + 1;
            while j < candidates.len() && candidates[j].0 == candidates[i].0 {
                j += 1;
            }
            candidates[i..j].shuffle(rng);
            i = j;
        }
    }
    let mut selected: Vec<Binomial> = Vec::new();
    let mut betti: Vec<BettiFiber> = Vec::new();
    for (_, _, rep) in candidates {
        let fiber = enumerate_fiber_inner(l, &rep, opt.max_fiber)?;
        let graph = FiberGraph::build(&fiber, &selected);
        let components = graph.components();
        let t = components.len();
        if t < 2 {
            continue;
        }
        let mut comp_of = vec![0usize; fiber.len()];
        for (c, comp) in components.iter().enumerate() {
            for &i in comp {
                comp_of[i] = c;
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..fiber.len() {
            for j in (i + 1)..fiber.len() {
                if comp_of[i] != comp_of[j] {
                    pairs.push((i, j));
                }
            }
        }
        if let Some(rng) = rng.as_mut() {
            pairs.shuffle(rng);
        }
        let mut uf = UnionFind::new(t);
        let mut added = Vec::new();
        for (i, j) in pairs {
            if uf.union(comp_of[i], comp_of[j]) {
                let a = &fiber.elements[i];
                let b = &fiber.elements[j];
                let bin = Binomial::from_vector(&ivec::sub(a, b)).normalized();
                debug_assert!(bin.is_coprime());
                added.push(bin);
            }
        }
        debug_assert_eq!(added.len(), t - 1);
        selected.extend(added.iter().cloned());
        betti.push(BettiFiber { fiber, components, added });
    }
    Ok(GradedSynthesis { basis: selected, betti, grading })
}

/// A Markov basis of a positively graded lattice together with its Betti
/// (Markov) fibers.
pub fn markov_basis_graded(l: &Lattice) -> Result<(Vec<Binomial>, Vec<Fiber>)> {
    let synth = synthesize_graded(l, &SynthOptions::default())?;
    let fibers = synth.betti.iter().map(|b| b.fiber.clone()).collect();
    Ok((synth.basis, fibers))
}

/// Indispensable binomials and monomials of a positively graded lattice: a
/// two-element disconnected fiber forces its binomial, and a singleton
/// component of any Betti fiber forces its monomial.
pub fn indispensables_graded(l: &Lattice) -> Result<(Vec<Binomial>, Vec<IntVec>)> {
    let n = l.ambient_dim();
    if l.rank() == 0 {
        return Ok((Vec::new(), vec![ivec::zeros(n)]));
    }
    let synth = synthesize_graded(l, &SynthOptions::default())?;
    let mut binomials = Vec::new();
    let mut monomials = Vec::new();
    for bf in &synth.betti {
        if bf.fiber.len() == 2 && bf.t_value() == 2 {
            let d = ivec::sub(&bf.fiber.elements[0], &bf.fiber.elements[1]);
            binomials.push(Binomial::from_vector(&d).normalized());
        }
        for comp in &bf.components {
            if comp.len() == 1 {
                monomials.push(bf.fiber.elements[comp[0]].clone());
            }
        }
    }
    binomials.sort();
    binomials.dedup();
    monomials.sort();
    monomials.dedup();
    Ok((binomials, monomials))
}
