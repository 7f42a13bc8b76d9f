//! The general-lattice layer. Fibers of an arbitrary lattice ideal fall
//! into equivalence classes keyed by their projection away from `sigma`;
//! everything here reduces to the pure part (handled in `decompose`) plus
//! the positively graded projection (handled in `graded`), then lifts back.

use crate::binomial::Binomial;
use crate::decompose::{
    decompose, min_coset_points, pure_generation_check, pure_markov_basis, Decomposition,
    Support, COMPLETION_NODE_CAP,
};
use crate::error::{Error, Result};
use crate::graded::{
    enumerate_fiber_inner, indispensables_graded, synthesize_graded, BettiFiber, Fiber,
    FiberGraph, GradedSynthesis, SynthOptions, UnionFind,
};
use crate::hnf;
use crate::ivec::{self, IntVec};
use crate::lattice::{lattices_equal, smith_invariants, Lattice};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// The cardinality shared by every fiber equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassCount {
    Finite(BigInt),
    Infinite,
}

impl std::fmt::Display for ClassCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassCount::Finite(n) => write!(f, "{n}"),
            ClassCount::Infinite => write!(f, "infinite"),
        }
    }
}

/// Everything the general layer needs, computed once per lattice.
pub(crate) struct GeneralContext {
    pub dec: Decomposition,
    /// The sigma-restriction of the pure sublattice, inside `Z^{|sigma|}`.
    pub sigma_lattice: Lattice,
    /// Graded synthesis of the projected lattice.
    pub synth: GradedSynthesis,
}

pub(crate) fn context(l: &Lattice, opt: &SynthOptions) -> Result<GeneralContext> {
    let dec = decompose(l);
    let restricted: Vec<IntVec> = dec
        .pure
        .basis_rows()
        .iter()
        .map(|row| dec.sigma.inside(row))
        .collect();
    let sigma_lattice = Lattice::canonicalize(&restricted, dec.sigma.len())?;
    let synth = synthesize_graded(&dec.projected, opt)?;
    Ok(GeneralContext { dec, sigma_lattice, synth })
}

fn class_cardinality_of(ctx: &GeneralContext) -> ClassCount {
    if ctx.dec.pure.rank() == 0 {
        return ClassCount::Finite(BigInt::one());
    }
    let inv = smith_invariants(ctx.sigma_lattice.basis_rows(), ctx.dec.sigma.len())
        .expect("dimensions agree");
    match inv.quotient_order() {
        Some(o) => ClassCount::Finite(o),
        None => ClassCount::Infinite,
    }
}

/// The cardinality of every equivalence class of fibers: the order of
/// `Z^{|sigma|}` modulo the restricted pure sublattice, or 1 when the pure
/// part is trivial (classes are then singletons).
pub fn class_cardinality(l: &Lattice) -> ClassCount {
    let dec = decompose(l);
    if dec.pure.rank() == 0 {
        return ClassCount::Finite(BigInt::one());
    }
    let restricted: Vec<IntVec> = dec
        .pure
        .basis_rows()
        .iter()
        .map(|row| dec.sigma.inside(row))
        .collect();
    let inv = smith_invariants(&restricted, dec.sigma.len()).expect("dimensions agree");
    match inv.quotient_order() {
        Some(o) => ClassCount::Finite(o),
        None => ClassCount::Infinite,
    }
}

/// Solves `w = (combination of basis rows) restricted to the complement
/// coordinates`, returning the full lattice element.
fn lift_projection(l: &Lattice, complement: &[usize], w: &[BigInt]) -> Result<IntVec> {
    let restricted: Vec<IntVec> = l
        .basis_rows()
        .iter()
        .map(|row| ivec::select(row, complement))
        .collect();
    let res = hnf::hnf_with_transform(&restricted, complement.len());
    let h: Vec<IntVec> = res.h[..res.rank].to_vec();
    let pivots = hnf::pivot_columns(&h);
    let Some(d) = hnf::solve_in_span(&h, &pivots, w) else {
        return Err(Error::NotInLattice);
    };
    let r = l.rank();
    let mut coeffs = ivec::zeros(r);
    for (i, di) in d.iter().enumerate() {
        for j in 0..r {
            coeffs[j] += di * &res.u[i][j];
        }
    }
    Ok(l.linear_combination(&coeffs))
}

fn interleave(sigma: &Support, inside: &[BigInt], outside: &[BigInt], n: usize) -> IntVec {
    let mut out = ivec::scatter(inside, sigma.indices(), n);
    let comp = sigma.complement(n);
    for (val, &i) in outside.iter().zip(&comp) {
        out[i] = val.clone();
    }
    out
}

/// The canonical lattice element over a projected vector `w`: the unique
/// lift whose sigma block is the canonical residue modulo the restricted
/// pure sublattice.
pub(crate) fn lift_vector(l: &Lattice, sigma: &Support, w: &[BigInt]) -> Result<IntVec> {
    let n = l.ambient_dim();
    let comp = sigma.complement(n);
    if w.len() != comp.len() {
        return Err(Error::DimensionMismatch { expected: comp.len(), found: w.len() });
    }
    let u0 = lift_projection(l, &comp, w)?;
    let pure = crate::decompose::pure_sublattice(l, sigma);
    let restricted: Vec<IntVec> = pure.basis_rows().iter().map(|r| sigma.inside(r)).collect();
    let sigma_lattice = Lattice::canonicalize(&restricted, sigma.len())?;
    let reduced = sigma_lattice.reduce(&sigma.inside(&u0))?;
    Ok(interleave(sigma, &reduced, w, n))
}

/// The coprime binomial of a canonical lift of `w` (an element of the
/// projected lattice); its two terms project to the positive and negative
/// parts of `w`.
pub fn lift_binomial(l: &Lattice, sigma: &Support, w: &[BigInt]) -> Result<Binomial> {
    Ok(Binomial::from_vector(&lift_vector(l, sigma, w)?))
}

/// A fiber described through its projection: the finite projected fiber,
/// the minimal generators of the fiber's monomial ideal, their grouping by
/// equal projection, and the components of the class graph.
#[derive(Clone, Debug)]
pub struct FiberDescriptor {
    pub representative: IntVec,
    pub projected_fiber: Fiber,
    /// The original (0-based) coordinates the projected fiber lives on.
    pub projected_coordinates: Vec<usize>,
    /// Exponents of the minimal monomial generators, sorted.
    pub min_generators: Vec<IntVec>,
    /// `sim_classes[k]` lists the `min_generators` indices projecting to
    /// `projected_fiber.elements[k]`.
    pub sim_classes: Vec<Vec<usize>>,
    /// Partition of the sim-class indices into connected components of the
    /// class graph over strictly smaller fibers.
    pub gamma_components: Vec<Vec<usize>>,
}

impl FiberDescriptor {
    pub fn t_value(&self) -> usize {
        self.gamma_components.len()
    }
}

fn betti_key_map(ctx: &GeneralContext) -> Result<BTreeMap<IntVec, &BettiFiber>> {
    let mut map = BTreeMap::new();
    for bf in &ctx.synth.betti {
        let key = ctx.dec.projected.reduce(&bf.fiber.representative)?;
        map.insert(key, bf);
    }
    Ok(map)
}

/// Components of a projected fiber under the synthesized moves of strictly
/// smaller fibers. Moves from the fiber's own class are excluded; moves
/// from incomparable or larger classes never apply, so the remaining ones
/// generate exactly the ideal below this class.
fn projected_components(
    ctx: &GeneralContext,
    fiber: &Fiber,
) -> Result<Vec<Vec<usize>>> {
    let own_key = ctx.dec.projected.reduce(&fiber.representative)?;
    let mut moves = Vec::new();
    for b in &ctx.synth.basis {
        let key = ctx.dec.projected.reduce(b.plus())?;
        if key != own_key {
            moves.push(b.clone());
        }
    }
    Ok(FiberGraph::build(fiber, &moves).components())
}

pub fn fiber_descriptor(l: &Lattice, u: &[BigInt]) -> Result<FiberDescriptor> {
    fiber_descriptor_opt(l, u, &SynthOptions::default())
}

pub fn fiber_descriptor_opt(
    l: &Lattice,
    u: &[BigInt],
    opt: &SynthOptions,
) -> Result<FiberDescriptor> {
    let n = l.ambient_dim();
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.len() });
    }
    if !ivec::is_nonneg(u) {
        return Err(Error::Parse("fiber representative must be nonnegative".into()));
    }
    let ctx = context(l, opt)?;
    descriptor_with_context(l, &ctx, u, opt)
}

fn descriptor_with_context(
    l: &Lattice,
    ctx: &GeneralContext,
    u: &[BigInt],
    opt: &SynthOptions,
) -> Result<FiberDescriptor> {
    let n = l.ambient_dim();
    let up = ctx.dec.sigma.outside(u);
    let projected_fiber = enumerate_fiber_inner(&ctx.dec.projected, &up, opt.max_fiber)?;
    let gamma_components = projected_components(ctx, &projected_fiber)?;
    let mut min_generators: Vec<IntVec> = Vec::new();
    let mut groups: Vec<Vec<IntVec>> = Vec::new();
    for p in &projected_fiber.elements {
        let shift = lift_projection(l, &ctx.dec.complement, &ivec::sub(p, &up))?;
        let base = ivec::add(u, &shift);
        let sigma_part = ctx.dec.sigma.inside(&base);
        let lifts = min_coset_points(&ctx.sigma_lattice, &sigma_part, COMPLETION_NODE_CAP)?;
        let full: Vec<IntVec> = lifts
            .iter()
            .map(|m| interleave(&ctx.dec.sigma, m, p, n))
            .collect();
        min_generators.extend(full.iter().cloned());
        groups.push(full);
    }
    min_generators.sort();
    let sim_classes: Vec<Vec<usize>> = groups
        .iter()
        .map(|g| {
            g.iter()
                .map(|v| min_generators.binary_search(v).expect("member"))
                .collect()
        })
        .collect();
    Ok(FiberDescriptor {
        representative: u.to_vec(),
        projected_fiber,
        projected_coordinates: ctx.dec.complement.clone(),
        min_generators,
        sim_classes,
        gamma_components,
    })
}

/// The class order: one class sits below another iff some projected
/// representative of the first divides one of the second.
pub fn class_leq(_l: &Lattice, f: &FiberDescriptor, g: &FiberDescriptor) -> bool {
    f.projected_fiber.elements.iter().any(|p| {
        g.projected_fiber
            .elements
            .iter()
            .any(|q| p.len() == q.len() && ivec::leq(p, q))
    })
}

/// One equivalence class of Markov fibers: its canonical projected fiber,
/// the common class cardinality, and the number of class-graph components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDescriptor {
    pub projected_fiber: Fiber,
    pub cardinality: ClassCount,
    pub t_value: usize,
}

/// A Markov basis of a general lattice ideal together with its invariants.
#[derive(Clone, Debug)]
pub struct MarkovReport {
    pub basis: Vec<Binomial>,
    pub mu: usize,
    /// One descriptor per distinct non-identity Markov fiber class, sorted
    /// by projected fiber; each contributes `t - 1` basis elements.
    pub class_multiset: Vec<ClassDescriptor>,
    /// The original (0-based) coordinates the projected fibers live on.
    pub projected_coordinates: Vec<usize>,
    pub pure_part: Vec<Binomial>,
    pub indispensable_binomials: Vec<Binomial>,
    pub indispensable_monomials: Vec<IntVec>,
    pub universal_markov_finite: bool,
}

pub fn markov_basis_general(l: &Lattice) -> Result<MarkovReport> {
    markov_basis_general_opt(l, &SynthOptions::default())
}

pub fn markov_basis_general_opt(l: &Lattice, opt: &SynthOptions) -> Result<MarkovReport> {
    let ctx = context(l, opt)?;
    let pure_part = pure_markov_basis(&ctx.dec.pure, &ctx.dec.sigma)?;
    let mut basis = pure_part.clone();
    for b in &ctx.synth.basis {
        basis.push(lift_binomial(l, &ctx.dec.sigma, &b.difference())?);
    }
    let mu = ctx.dec.pure.rank() + ctx.synth.mu();
    debug_assert_eq!(mu, basis.len());
    let cardinality = class_cardinality_of(&ctx);
    let mut class_multiset: Vec<ClassDescriptor> = ctx
        .synth
        .betti
        .iter()
        .map(|bf| ClassDescriptor {
            projected_fiber: bf.fiber.clone(),
            cardinality: cardinality.clone(),
            t_value: bf.t_value(),
        })
        .collect();
    class_multiset.sort_by(|a, b| a.projected_fiber.cmp(&b.projected_fiber));
    let (indispensable_binomials, indispensable_monomials) = indispensables_with(l, &ctx)?;
    let universal_markov_finite = universal_flag(l, &ctx);
    Ok(MarkovReport {
        basis,
        mu,
        class_multiset,
        projected_coordinates: ctx.dec.complement.clone(),
        pure_part,
        indispensable_binomials,
        indispensable_monomials,
        universal_markov_finite,
    })
}

fn indispensables_with(l: &Lattice, ctx: &GeneralContext) -> Result<(Vec<Binomial>, Vec<IntVec>)> {
    let n = l.ambient_dim();
    match ctx.dec.pure.rank() {
        0 => indispensables_graded(l),
        1 => {
            let u = &ctx.dec.pure.basis_rows()[0];
            debug_assert!(ivec::is_nonneg(u));
            let b = Binomial::from_terms(u.clone(), ivec::zeros(n)).expect("nonnegative");
            Ok((vec![b], vec![u.clone(), ivec::zeros(n)]))
        }
        _ => Ok((Vec::new(), vec![ivec::zeros(n)])),
    }
}

/// Indispensable binomials and monomials: beyond the positively graded case
/// there is at most one indispensable binomial, coming from a rank-one pure
/// part.
pub fn indispensables_general(l: &Lattice) -> Result<(Vec<Binomial>, Vec<IntVec>)> {
    let ctx = context(l, &SynthOptions::default())?;
    indispensables_with(l, &ctx)
}

fn universal_flag(l: &Lattice, ctx: &GeneralContext) -> bool {
    match ctx.dec.pure.rank() {
        0 => true,
        1 => lattices_equal(l, &ctx.dec.pure).unwrap_or(false),
        _ => false,
    }
}

/// Whether the union of all Markov bases is finite: true exactly when the
/// pure part is trivial, or has rank one and is the whole lattice.
pub fn universal_markov_finite(l: &Lattice) -> bool {
    let dec = decompose(l);
    match dec.pure.rank() {
        0 => true,
        1 => lattices_equal(l, &dec.pure).unwrap_or(false),
        _ => false,
    }
}

/// The outcome of a verification, with one line per failed condition.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

struct Classified {
    pure_part: Vec<Binomial>,
    trivial: usize,
    classes: BTreeMap<IntVec, Vec<(Binomial, IntVec, IntVec)>>,
}

fn classify(l: &Lattice, ctx: &GeneralContext, s: &[Binomial]) -> Result<Classified> {
    let n = l.ambient_dim();
    let mut out = Classified { pure_part: Vec::new(), trivial: 0, classes: BTreeMap::new() };
    for b in s {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
        }
        if !l.is_member(&b.difference())? {
            return Err(Error::NotInLattice);
        }
        if b.is_trivial() {
            out.trivial += 1;
            continue;
        }
        let pp = ctx.dec.sigma.outside(b.plus());
        let pm = ctx.dec.sigma.outside(b.minus());
        if ivec::is_zero(&pp) && ivec::is_zero(&pm) {
            out.pure_part.push(b.clone());
        } else {
            debug_assert!(!ivec::is_zero(&pp) && !ivec::is_zero(&pm));
            let key = ctx.dec.projected.reduce(&pp)?;
            out.classes.entry(key).or_default().push((b.clone(), pp, pm));
        }
    }
    Ok(out)
}

pub fn verify_markov_detailed(
    l: &Lattice,
    s: &[Binomial],
    opt: &SynthOptions,
) -> Result<VerifyOutcome> {
    let ctx = context(l, opt)?;
    let cls = classify(l, &ctx, s)?;
    let mut diagnostics = Vec::new();
    if cls.trivial > 0 {
        diagnostics.push("the set contains a binomial with equal terms".to_string());
    }
    let rank_pure = ctx.dec.pure.rank();
    if cls.pure_part.len() != rank_pure {
        diagnostics.push(format!(
            "cardinality of the pure part is {}, must equal rank {} of the pure sublattice",
            cls.pure_part.len(),
            rank_pure
        ));
    } else if !pure_generation_check(&ctx.dec.pure, &cls.pure_part, true) {
        diagnostics
            .push("the pure part is not a Markov basis of the pure sublattice ideal".to_string());
    }
    let betti = betti_key_map(&ctx)?;
    for (key, group) in &cls.classes {
        let Some(bf) = betti.get(key) else {
            diagnostics.push(format!(
                "{} lies in a fiber class that needs no generator",
                group[0].0
            ));
            continue;
        };
        let t = bf.t_value();
        if group.len() != t - 1 {
            diagnostics.push(format!(
                "fiber class of {} carries {} binomials, needs {}",
                crate::binomial::format_monomial_in(&bf.fiber.representative, &ctx.dec.complement),
                group.len(),
                t - 1
            ));
            continue;
        }
        let mut comp_of = vec![0usize; bf.fiber.len()];
        for (c, comp) in bf.components.iter().enumerate() {
            for &i in comp {
                comp_of[i] = c;
            }
        }
        let mut uf = UnionFind::new(t);
        for (b, pp, pm) in group {
            let (Some(i), Some(j)) = (bf.fiber.position(pp), bf.fiber.position(pm)) else {
                diagnostics.push(format!("{b} has a term outside its projected fiber"));
                continue;
            };
            if comp_of[i] == comp_of[j] {
                diagnostics.push(format!(
                    "{b} joins fiber elements already connected below the class"
                ));
            } else if !uf.union(comp_of[i], comp_of[j]) {
                diagnostics.push(format!("{b} closes a cycle on the class graph"));
            }
        }
    }
    for (key, bf) in &betti {
        if !cls.classes.contains_key(key) {
            diagnostics.push(format!(
                "no binomial covers the Markov fiber class of {}",
                crate::binomial::format_monomial_in(&bf.fiber.representative, &ctx.dec.complement)
            ));
        }
    }
    Ok(VerifyOutcome { ok: diagnostics.is_empty(), diagnostics })
}

/// True iff `s` is a Markov basis of the lattice ideal: the pure part is a
/// Markov basis of the pure sublattice ideal, and within every Markov fiber
/// class the binomials form a spanning tree on the class-graph components.
pub fn verify_markov_general(l: &Lattice, s: &[Binomial]) -> Result<bool> {
    Ok(verify_markov_detailed(l, s, &SynthOptions::default())?.ok)
}

pub fn verify_generating_detailed(
    l: &Lattice,
    s: &[Binomial],
    opt: &SynthOptions,
) -> Result<VerifyOutcome> {
    let ctx = context(l, opt)?;
    let cls = classify(l, &ctx, s)?;
    let mut diagnostics = Vec::new();
    if !pure_generation_check(&ctx.dec.pure, &cls.pure_part, false) {
        diagnostics
            .push("the pure part does not generate the pure sublattice ideal".to_string());
    }
    let betti = betti_key_map(&ctx)?;
    for (key, bf) in &betti {
        let t = bf.t_value();
        let mut comp_of = vec![0usize; bf.fiber.len()];
        for (c, comp) in bf.components.iter().enumerate() {
            for &i in comp {
                comp_of[i] = c;
            }
        }
        let mut uf = UnionFind::new(t);
        let mut joined = 1usize;
        if let Some(group) = cls.classes.get(key) {
            for (_, pp, pm) in group {
                if let (Some(i), Some(j)) = (bf.fiber.position(pp), bf.fiber.position(pm)) {
                    if uf.union(comp_of[i], comp_of[j]) {
                        joined += 1;
                    }
                }
            }
        }
        if joined < t {
            diagnostics.push(format!(
                "the fiber class of {} stays disconnected",
                crate::binomial::format_monomial_in(&bf.fiber.representative, &ctx.dec.complement)
            ));
        }
    }
    Ok(VerifyOutcome { ok: diagnostics.is_empty(), diagnostics })
}

/// True iff `s` generates the lattice ideal: the pure part generates the
/// pure sublattice ideal and every Markov fiber class becomes connected.
pub fn verify_generating_set(l: &Lattice, s: &[Binomial]) -> Result<bool> {
    Ok(verify_generating_detailed(l, s, &SynthOptions::default())?.ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec::from_i64s;
    use crate::testfix::{intro_lattice, macaulay_lattice, mat, pure_rank1_lattice, sec6_lattice};

    fn bin(plus: &[i64], minus: &[i64]) -> Binomial {
        Binomial::from_terms(from_i64s(plus), from_i64s(minus)).unwrap()
    }

    #[test]
    fn class_cardinalities() {
        assert_eq!(class_cardinality(&intro_lattice()), ClassCount::Finite(BigInt::from(5)));
        assert_eq!(class_cardinality(&pure_rank1_lattice()), ClassCount::Infinite);
        assert_eq!(class_cardinality(&macaulay_lattice()), ClassCount::Finite(BigInt::one()));
        assert_eq!(class_cardinality(&sec6_lattice()), ClassCount::Finite(BigInt::from(5)));
    }

    #[test]
    fn descriptor_of_the_x4_fiber() {
        let l = sec6_lattice();
        let d = fiber_descriptor(&l, &from_i64s(&[0, 0, 0, 1, 0])).unwrap();
        assert_eq!(
            d.min_generators,
            mat(&[&[0, 0, 0, 1, 0], &[0, 2, 1, 0, 0], &[3, 0, 1, 0, 0]])
        );
        assert_eq!(d.projected_fiber.elements, mat(&[&[0, 1, 0], &[1, 0, 0]]));
        assert_eq!(d.t_value(), 2);
        // the x4 vertex is alone in its sim class; the two x3 lifts share one
        let sizes: Vec<usize> = d.sim_classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn descriptor_of_the_x5_fiber() {
        let l = sec6_lattice();
        let d = fiber_descriptor(&l, &from_i64s(&[0, 0, 0, 0, 1])).unwrap();
        let expected_proj = mat(&[
            &[0, 0, 1],
            &[0, 6, 0],
            &[1, 5, 0],
            &[2, 4, 0],
            &[3, 3, 0],
            &[4, 2, 0],
            &[5, 1, 0],
            &[6, 0, 0],
        ]);
        assert_eq!(d.projected_fiber.elements, expected_proj);
        assert_eq!(d.min_generators.len(), 14);
        assert!(d.min_generators.contains(&from_i64s(&[0, 0, 0, 0, 1])));
        assert!(d.min_generators.contains(&from_i64s(&[4, 0, 6, 0, 0])));
        assert!(d.min_generators.contains(&from_i64s(&[0, 1, 6, 0, 0])));
        assert!(d.min_generators.contains(&from_i64s(&[0, 0, 3, 3, 0])));
        assert_eq!(d.t_value(), 2);
    }

    #[test]
    fn descriptor_on_graded_lattice_is_the_fiber() {
        let l = macaulay_lattice();
        let u = from_i64s(&[2, 0, 1, 0]);
        let d = fiber_descriptor(&l, &u).unwrap();
        let f = crate::graded::enumerate_fiber(&l, &u).unwrap();
        assert_eq!(d.min_generators, f.elements);
        assert_eq!(d.projected_fiber.elements, f.elements);
        assert!(d.sim_classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn descriptor_agrees_with_direct_coset_minimization() {
        // two routes to the minimal generators: sigma-blockwise lifting of
        // the projected fiber, and one completion run over the full lattice
        let l = sec6_lattice();
        for u in [from_i64s(&[0, 0, 0, 1, 0]), from_i64s(&[0, 0, 0, 0, 1])] {
            let d = fiber_descriptor(&l, &u).unwrap();
            let direct = min_coset_points(&l, &u, COMPLETION_NODE_CAP).unwrap();
            assert_eq!(d.min_generators, direct);
        }
        // on a positively graded lattice both collapse to the whole fiber
        let g = macaulay_lattice();
        let u = from_i64s(&[2, 0, 1, 0]);
        let fiber = crate::graded::enumerate_fiber(&g, &u).unwrap();
        assert_eq!(min_coset_points(&g, &u, COMPLETION_NODE_CAP).unwrap(), fiber.elements);
    }

    #[test]
    fn descriptor_invariants() {
        let l = sec6_lattice();
        let d = fiber_descriptor(&l, &from_i64s(&[0, 0, 0, 0, 1])).unwrap();
        let sigma = &crate::decompose::support_sigma(&l);
        // projections of the minimal generators, deduplicated, equal the
        // projected fiber
        let mut projs: Vec<IntVec> =
            d.min_generators.iter().map(|g| sigma.outside(g)).collect();
        projs.sort();
        projs.dedup();
        assert_eq!(projs, d.projected_fiber.elements);
        // within a sim class all projections are equal, across they are
        // incomparable
        for (k, class) in d.sim_classes.iter().enumerate() {
            for &i in class {
                assert_eq!(sigma.outside(&d.min_generators[i]), d.projected_fiber.elements[k]);
            }
        }
        for p in &d.projected_fiber.elements {
            for q in &d.projected_fiber.elements {
                if p != q {
                    assert!(!ivec::leq(p, q));
                }
            }
        }
    }

    #[test]
    fn class_order_on_the_running_example() {
        let l = sec6_lattice();
        let e4 = |k: i64| {
            let mut v = vec![0i64; 5];
            v[3] = k;
            fiber_descriptor(&l, &from_i64s(&v)).unwrap()
        };
        let one = fiber_descriptor(&l, &from_i64s(&[0, 0, 0, 0, 0])).unwrap();
        let f1 = e4(1);
        let f2 = e4(2);
        assert!(class_leq(&l, &one, &f1));
        assert!(class_leq(&l, &f1, &f2));
        assert!(!class_leq(&l, &f2, &f1));
        assert!(class_leq(&l, &f1, &f1));
        let x5 = fiber_descriptor(&l, &from_i64s(&[0, 0, 0, 0, 1])).unwrap();
        assert!(class_leq(&l, &e4(5), &x5));
        assert!(!class_leq(&l, &x5, &e4(5)));
    }

    #[test]
    fn lifting_binomials() {
        let l = sec6_lattice();
        let sigma = crate::decompose::support_sigma(&l);
        let b = lift_binomial(&l, &sigma, &from_i64s(&[1, -1, 0])).unwrap();
        assert!(l.is_member(&b.difference()).unwrap());
        assert_eq!(sigma.outside(b.plus()), from_i64s(&[1, 0, 0]));
        assert_eq!(sigma.outside(b.minus()), from_i64s(&[0, 1, 0]));
        let b = lift_binomial(&l, &sigma, &from_i64s(&[-3, -3, 1])).unwrap();
        assert_eq!(sigma.outside(b.plus()), from_i64s(&[0, 0, 1]));
        assert_eq!(sigma.outside(b.minus()), from_i64s(&[3, 3, 0]));
        // sigma empty: the binomial of the vector itself
        let g = macaulay_lattice();
        let sigma = crate::decompose::support_sigma(&g);
        let b = lift_binomial(&g, &sigma, &from_i64s(&[2, -3, 1, 0])).unwrap();
        assert_eq!(b, Binomial::from_vector(&from_i64s(&[2, -3, 1, 0])));
        // vectors outside the projected lattice are rejected
        assert!(matches!(
            lift_binomial(&g, &sigma, &from_i64s(&[1, 0, 0, 0])),
            Err(Error::NotInLattice)
        ));
    }

    #[test]
    fn markov_report_of_sec6() {
        let rep = markov_basis_general(&sec6_lattice()).unwrap();
        assert_eq!(rep.mu, 4);
        assert_eq!(rep.pure_part.len(), 2);
        assert_eq!(rep.class_multiset.len(), 2);
        for c in &rep.class_multiset {
            assert_eq!(c.t_value, 2);
            assert_eq!(c.cardinality, ClassCount::Finite(BigInt::from(5)));
        }
        assert!(rep.indispensable_binomials.is_empty());
        assert_eq!(rep.indispensable_monomials, vec![from_i64s(&[0, 0, 0, 0, 0])]);
        assert!(!rep.universal_markov_finite);
        // self-consistency through both verifiers
        assert!(verify_markov_general(&sec6_lattice(), &rep.basis).unwrap());
        assert!(verify_generating_set(&sec6_lattice(), &rep.basis).unwrap());
    }

    #[test]
    fn markov_report_of_intro() {
        let rep = markov_basis_general(&intro_lattice()).unwrap();
        assert_eq!(rep.mu, 2);
        assert!(rep.class_multiset.is_empty());
        assert!(!rep.universal_markov_finite);
        assert!(verify_markov_general(&intro_lattice(), &rep.basis).unwrap());
    }

    #[test]
    fn markov_report_of_zero_lattice() {
        let rep = markov_basis_general(&Lattice::zero(3)).unwrap();
        assert_eq!(rep.mu, 0);
        assert!(rep.basis.is_empty());
        assert!(rep.class_multiset.is_empty());
        assert!(rep.universal_markov_finite);
    }

    #[test]
    fn intro_verification_fixtures() {
        let l = intro_lattice();
        let one_xy = bin(&[0, 0], &[1, 1]);
        let one_x5 = bin(&[0, 0], &[5, 0]);
        let x3_y2 = bin(&[3, 0], &[0, 2]);
        assert!(verify_markov_general(&l, &[one_xy.clone(), one_x5.clone()]).unwrap());
        assert!(verify_markov_general(&l, &[one_xy.clone(), x3_y2.clone()]).unwrap());
        let big = vec![bin(&[0, 0], &[2012, 2017]), bin(&[0, 4], &[2013, 2022])];
        assert!(verify_markov_general(&l, &big).unwrap());
        let three = vec![
            bin(&[0, 0], &[2, 2]),
            bin(&[0, 0], &[3, 3]),
            bin(&[0, 0], &[5, 0]),
        ];
        assert!(!verify_markov_general(&l, &three).unwrap());
        assert!(verify_generating_set(&l, &three).unwrap());
        assert!(!verify_generating_set(&l, &[one_xy.clone()]).unwrap());
        // a difference outside the lattice is an error, not a false
        assert!(matches!(
            verify_markov_general(&l, &[bin(&[0, 1], &[1, 0])]),
            Err(Error::NotInLattice)
        ));
    }

    #[test]
    fn sec6_verification_fixtures() {
        let l = sec6_lattice();
        let pure1 = bin(&[0, 0, 0, 0, 0], &[5, 0, 0, 0, 0]);
        let pure2 = bin(&[0, 0, 0, 0, 0], &[1, 1, 0, 0, 0]);
        let b3 = bin(&[2, 0, 0, 1, 0], &[0, 0, 1, 0, 0]);
        let b10 = bin(&[0, 0, 3, 3, 0], &[0, 0, 0, 0, 1]);
        let s = vec![pure1.clone(), pure2.clone(), b3.clone(), b10.clone()];
        assert!(verify_markov_general(&l, &s).unwrap());
        // b16 replaces b3; b12 replaces b10
        let b16 = bin(&[2, 0, 1, 0, 0], &[0, 1, 0, 1, 0]);
        let b12 = bin(&[0, 0, 0, 6, 0], &[0, 1, 0, 0, 1]);
        assert!(verify_markov_general(&l, &[pure1.clone(), pure2.clone(), b16, b12]).unwrap());
        // missing the x5 class: not even generating
        let short = vec![pure1.clone(), pure2.clone(), b3.clone()];
        assert!(!verify_markov_general(&l, &short).unwrap());
        assert!(!verify_generating_set(&l, &short).unwrap());
        // doubled binomial on the x4 class
        let b6 = bin(&[0, 1, 1, 0, 0], &[1, 0, 0, 1, 0]);
        let five = vec![pure1.clone(), pure2.clone(), b3.clone(), b6, b10.clone()];
        assert!(!verify_markov_general(&l, &five).unwrap());
        assert!(verify_generating_set(&l, &five).unwrap());
        // a binomial whose class needs no generator is rejected as Markov
        let b8 = bin(&[0, 0, 5, 0, 0], &[0, 0, 0, 5, 0]);
        let with_b8 = vec![pure1, pure2, b3, b8, b10];
        assert!(!verify_markov_general(&l, &with_b8).unwrap());
        assert!(verify_generating_set(&l, &with_b8).unwrap());
    }

    #[test]
    fn indispensables_per_pure_rank() {
        let (b, m) = indispensables_general(&sec6_lattice()).unwrap();
        assert!(b.is_empty());
        assert_eq!(m, vec![from_i64s(&[0, 0, 0, 0, 0])]);
        let (b, m) = indispensables_general(&pure_rank1_lattice()).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x1*x2 - 1");
        assert_eq!(m, mat(&[&[1, 1], &[0, 0]]));
        // positively graded delegates to the graded engine
        let l = Lattice::canonicalize(&mat(&[&[1, -1]]), 2).unwrap();
        let (b, m) = indispensables_general(&l).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn repeated_runs_are_identical() {
        let l = sec6_lattice();
        let a = markov_basis_general(&l).unwrap();
        let b = markov_basis_general(&l).unwrap();
        assert_eq!(a.basis, b.basis);
        assert_eq!(a.class_multiset, b.class_multiset);
        assert_eq!(a.pure_part, b.pure_part);
    }

    #[test]
    fn universal_markov_flags() {
        assert!(!universal_markov_finite(&intro_lattice()));
        assert!(universal_markov_finite(&pure_rank1_lattice()));
        assert!(universal_markov_finite(&macaulay_lattice()));
        assert!(!universal_markov_finite(&sec6_lattice()));
        // rank-one pure part inside a larger lattice
        let l = Lattice::canonicalize(&mat(&[&[1, 1, 0, 0], &[0, 0, 1, -1]]), 4).unwrap();
        assert!(!universal_markov_finite(&l));
    }
}
