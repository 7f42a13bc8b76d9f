//! File formats and report serialization for the command line front end.
//!
//! A lattice file is a header line `n m` followed by `m` rows of `n` signed
//! integers; `#` starts a comment line. A binomial set file is either one
//! binomial per line as `u+ | u-` (two exponent vectors), or a JSON array of
//! objects with `plus` and `minus` arrays. All JSON reports carry
//! `"schema": 1` and serialize big integers as strings.

use crate::binomial::{format_monomial, format_monomial_in, Binomial};
use crate::ci::{CIReport, CiMethod};
use crate::decompose::DecompositionReport;
use crate::error::{Error, Result};
use crate::ivec::{fmt_vec, IntVec};
use crate::synthesis::{ClassCount, ClassDescriptor, FiberDescriptor, MarkovReport};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;

fn parse_int(tok: &str) -> Result<BigInt> {
    BigInt::from_str(tok).map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a lattice file into its ambient dimension and generator rows.
pub fn parse_lattice_file(text: &str) -> Result<(usize, Vec<IntVec>)> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty lattice file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("header must be \"n m\", got {header:?}")));
    }
    let n: usize = parts[0]
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension {:?}", parts[0])))?;
    let m: usize = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad row count {:?}", parts[1])))?;
    let mut rows = Vec::with_capacity(m);
    for line in lines {
        let row: Result<IntVec> = line.split_whitespace().map(parse_int).collect();
        let row = row?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {:?} has {} entries, expected {}",
                line,
                row.len(),
                n
            )));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(Error::Parse(format!("expected {m} rows, found {}", rows.len())));
    }
    Ok((n, rows))
}

#[derive(Serialize, Deserialize)]
struct BinomialFileEntry {
    plus: Vec<serde_json::Value>,
    minus: Vec<serde_json::Value>,
}

fn json_value_to_int(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => parse_int(&n.to_string()),
        serde_json::Value::String(s) => parse_int(s),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

fn parse_exponents(tok: &str) -> Result<IntVec> {
    tok.split_whitespace().map(parse_int).collect()
}

/// Parses a binomial set file against the ambient dimension `n`.
pub fn parse_binomial_file(text: &str, n: usize) -> Result<Vec<Binomial>> {
    let trimmed = text.trim_start();
    let mut out = Vec::new();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let entries: Vec<BinomialFileEntry> = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("bad binomial JSON: {e}")))?;
        for e in entries {
            let plus: Result<IntVec> = e.plus.iter().map(json_value_to_int).collect();
            let minus: Result<IntVec> = e.minus.iter().map(json_value_to_int).collect();
            out.push(checked_binomial(plus?, minus?, n)?);
        }
        return Ok(out);
    }
    for line in content_lines(text) {
        let Some((lhs, rhs)) = line.split_once('|') else {
            return Err(Error::Parse(format!("binomial line {line:?} needs a '|'")));
        };
        out.push(checked_binomial(parse_exponents(lhs)?, parse_exponents(rhs)?, n)?);
    }
    Ok(out)
}

fn checked_binomial(plus: IntVec, minus: IntVec, n: usize) -> Result<Binomial> {
    if plus.len() != n || minus.len() != n {
        return Err(Error::Parse(format!(
            "binomial terms must have {n} entries, got {} and {}",
            plus.len(),
            minus.len()
        )));
    }
    Binomial::from_terms(plus, minus)
}

/// Parses `--monomial` style comma-separated exponents.
pub fn parse_monomial(arg: &str, n: usize) -> Result<IntVec> {
    let v: Result<IntVec> = arg.split(',').map(|t| parse_int(t.trim())).collect();
    let v = v?;
    if v.len() != n {
        return Err(Error::Parse(format!("monomial needs {n} exponents, got {}", v.len())));
    }
    if v.iter().any(|x| x < &BigInt::from(0)) {
        return Err(Error::Parse("monomial exponents must be nonnegative".into()));
    }
    Ok(v)
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn strings2(rows: &[IntVec]) -> Vec<Vec<String>> {
    rows.iter().map(|r| strings(r)).collect()
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BinomialJson {
    pub plus: Vec<String>,
    pub minus: Vec<String>,
    pub display: String,
}

impl From<&Binomial> for BinomialJson {
    fn from(b: &Binomial) -> Self {
        BinomialJson {
            plus: strings(b.plus()),
            minus: strings(b.minus()),
            display: b.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct QuotientJson {
    pub factors: Vec<String>,
    pub free_rank: usize,
    pub order: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DecompositionJson {
    pub schema: u32,
    pub kind: String,
    pub ambient_dim: usize,
    pub rank: usize,
    pub sigma: Vec<usize>,
    pub witness: Option<Vec<String>>,
    pub pure_basis: Vec<Vec<String>>,
    pub projected_basis: Vec<Vec<String>>,
    pub rank_pure: usize,
    pub rank_projected: usize,
    pub quotient: QuotientJson,
    pub hilbert_basis: Vec<Vec<String>>,
}

impl From<&DecompositionReport> for DecompositionJson {
    fn from(r: &DecompositionReport) -> Self {
        DecompositionJson {
            schema: SCHEMA_VERSION,
            kind: "decomposition".into(),
            ambient_dim: r.ambient_dim,
            rank: r.rank,
            sigma: one_based(r.sigma.indices()),
            witness: r.witness.as_ref().map(|w| strings(w)),
            pure_basis: strings2(&r.pure_basis),
            projected_basis: strings2(&r.projected_basis),
            rank_pure: r.rank_pure,
            rank_projected: r.rank_projected,
            quotient: QuotientJson {
                factors: strings(&r.quotient.factors),
                free_rank: r.quotient.free_rank,
                order: r.quotient.quotient_order().map(|o| o.to_string()),
            },
            hilbert_basis: strings2(&r.hilbert),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassJson {
    pub projected_fiber: Vec<Vec<String>>,
    /// `None` encodes an infinite class.
    pub cardinality: Option<String>,
    pub t_value: usize,
}

impl From<&ClassDescriptor> for ClassJson {
    fn from(c: &ClassDescriptor) -> Self {
        ClassJson {
            projected_fiber: strings2(&c.projected_fiber.elements),
            cardinality: match &c.cardinality {
                ClassCount::Finite(n) => Some(n.to_string()),
                ClassCount::Infinite => None,
            },
            t_value: c.t_value,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MarkovJson {
    pub schema: u32,
    pub kind: String,
    pub mu: usize,
    pub basis: Vec<BinomialJson>,
    pub pure_part: Vec<BinomialJson>,
    pub class_multiset: Vec<ClassJson>,
    /// 1-based coordinates the projected fibers live on.
    pub projected_coordinates: Vec<usize>,
    pub indispensable_binomials: Vec<BinomialJson>,
    pub indispensable_monomials: Vec<Vec<String>>,
    pub universal_markov_finite: bool,
}

impl From<&MarkovReport> for MarkovJson {
    fn from(r: &MarkovReport) -> Self {
        MarkovJson {
            schema: SCHEMA_VERSION,
            kind: "markov".into(),
            mu: r.mu,
            basis: r.basis.iter().map(BinomialJson::from).collect(),
            pure_part: r.pure_part.iter().map(BinomialJson::from).collect(),
            class_multiset: r.class_multiset.iter().map(ClassJson::from).collect(),
            projected_coordinates: one_based(&r.projected_coordinates),
            indispensable_binomials: r
                .indispensable_binomials
                .iter()
                .map(BinomialJson::from)
                .collect(),
            indispensable_monomials: strings2(&r.indispensable_monomials),
            universal_markov_finite: r.universal_markov_finite,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FiberJson {
    pub schema: u32,
    pub kind: String,
    pub representative: Vec<String>,
    pub min_generators: Vec<Vec<String>>,
    pub projected_fiber: Vec<Vec<String>>,
    /// 1-based coordinates the projected fiber lives on.
    pub projected_coordinates: Vec<usize>,
    pub sim_classes: Vec<Vec<usize>>,
    pub gamma_components: Vec<Vec<usize>>,
    pub t_value: usize,
}

impl From<&FiberDescriptor> for FiberJson {
    fn from(d: &FiberDescriptor) -> Self {
        FiberJson {
            schema: SCHEMA_VERSION,
            kind: "fiber".into(),
            representative: strings(&d.representative),
            min_generators: strings2(&d.min_generators),
            projected_fiber: strings2(&d.projected_fiber.elements),
            projected_coordinates: one_based(&d.projected_coordinates),
            sim_classes: d.sim_classes.clone(),
            gamma_components: d.gamma_components.clone(),
            t_value: d.t_value(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BlockJson {
    pub a: Vec<Vec<String>>,
    pub m: Vec<Vec<String>>,
    pub c: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CiJson {
    pub schema: u32,
    pub kind: String,
    pub is_ci: bool,
    pub method: String,
    pub mu_projected: usize,
    pub rank_projected: usize,
    pub certificate: Option<Vec<Vec<String>>>,
    pub block_presentation: Option<BlockJson>,
}

impl From<&CIReport> for CiJson {
    fn from(r: &CIReport) -> Self {
        CiJson {
            schema: SCHEMA_VERSION,
            kind: "ci".into(),
            is_ci: r.is_ci,
            method: match r.method {
                CiMethod::MuRank => "mu-rank".into(),
                CiMethod::Certificate => "certificate".into(),
            },
            mu_projected: r.mu_projected,
            rank_projected: r.rank_projected,
            certificate: r.certificate_matrix.as_ref().map(|m| strings2(m)),
            block_presentation: r.block_presentation.as_ref().map(|b| BlockJson {
                a: strings2(&b.a),
                m: strings2(&b.m),
                c: strings2(&b.c),
            }),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IndispensableJson {
    pub schema: u32,
    pub kind: String,
    pub binomials: Vec<BinomialJson>,
    pub monomials: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct HilbertJson {
    pub schema: u32,
    pub kind: String,
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyJson {
    pub schema: u32,
    pub kind: String,
    pub mode: String,
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

pub fn render_decomposition(r: &DecompositionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("ambient dimension: {}\n", r.ambient_dim));
    out.push_str(&format!("rank: {}\n", r.rank));
    out.push_str(&format!("sigma: {}\n", r.sigma));
    match &r.witness {
        Some(w) => out.push_str(&format!("witness: {}\n", fmt_vec(w))),
        None => out.push_str("witness: none (no nonzero nonnegative element)\n"),
    }
    out.push_str(&format!("rank of pure sublattice: {}\n", r.rank_pure));
    for row in &r.pure_basis {
        out.push_str(&format!("  pure basis row: {}\n", fmt_vec(row)));
    }
    out.push_str(&format!("rank of projected lattice: {}\n", r.rank_projected));
    for row in &r.projected_basis {
        out.push_str(&format!("  projected basis row: {}\n", fmt_vec(row)));
    }
    let factors: Vec<String> = r.quotient.factors.iter().map(|f| f.to_string()).collect();
    out.push_str(&format!(
        "quotient invariant factors: [{}], free rank {}\n",
        factors.join(", "),
        r.quotient.free_rank
    ));
    match r.quotient.quotient_order() {
        Some(o) => out.push_str(&format!("fiber class cardinality: {o}\n")),
        None => out.push_str("fiber class cardinality: infinite\n"),
    }
    out.push_str(&format!("hilbert basis ({} elements):\n", r.hilbert.len()));
    for h in &r.hilbert {
        out.push_str(&format!("  {}\n", fmt_vec(h)));
    }
    out
}

pub fn render_markov(r: &MarkovReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("mu: {}\n", r.mu));
    out.push_str(&format!("markov basis ({} binomials):\n", r.basis.len()));
    for b in &r.basis {
        out.push_str(&format!("  {b}\n"));
    }
    out.push_str(&format!("pure part ({} binomials):\n", r.pure_part.len()));
    for b in &r.pure_part {
        out.push_str(&format!("  {b}\n"));
    }
    out.push_str(&format!(
        "markov fiber classes beyond the identity class: {}\n",
        r.class_multiset.len()
    ));
    for c in &r.class_multiset {
        let reps: Vec<String> = c
            .projected_fiber
            .elements
            .iter()
            .map(|e| format_monomial_in(e, &r.projected_coordinates))
            .collect();
        out.push_str(&format!(
            "  class with t = {}, cardinality {}, projected fiber {{{}}}\n",
            c.t_value,
            c.cardinality,
            reps.join(", ")
        ));
    }
    out.push_str("indispensable binomials:");
    if r.indispensable_binomials.is_empty() {
        out.push_str(" none\n");
    } else {
        out.push('\n');
        for b in &r.indispensable_binomials {
            out.push_str(&format!("  {b}\n"));
        }
    }
    let mons: Vec<String> = r
        .indispensable_monomials
        .iter()
        .map(|m| format_monomial(m))
        .collect();
    out.push_str(&format!("indispensable monomials: {}\n", mons.join(", ")));
    out.push_str(&format!(
        "universal markov basis finite: {}\n",
        if r.universal_markov_finite { "yes" } else { "no" }
    ));
    out
}

pub fn render_fiber(d: &FiberDescriptor) -> String {
    let coords = &d.projected_coordinates;
    let mut out = String::new();
    out.push_str(&format!(
        "fiber of {}\n",
        format_monomial(&d.representative)
    ));
    out.push_str(&format!(
        "minimal generators ({}):\n",
        d.min_generators.len()
    ));
    for g in &d.min_generators {
        out.push_str(&format!("  {}\n", format_monomial(g)));
    }
    let proj: Vec<String> = d
        .projected_fiber
        .elements
        .iter()
        .map(|e| format_monomial_in(e, coords))
        .collect();
    out.push_str(&format!("projected fiber: {{{}}}\n", proj.join(", ")));
    out.push_str("equal-projection classes of generators:\n");
    for (k, class) in d.sim_classes.iter().enumerate() {
        let members: Vec<String> = class
            .iter()
            .map(|&i| format_monomial(&d.min_generators[i]))
            .collect();
        out.push_str(&format!(
            "  [{}] projection {}: {{{}}}\n",
            k,
            format_monomial_in(&d.projected_fiber.elements[k], coords),
            members.join(", ")
        ));
    }
    out.push_str(&format!(
        "class graph components (t = {}):\n",
        d.t_value()
    ));
    for comp in &d.gamma_components {
        let members: Vec<String> = comp
            .iter()
            .map(|&k| format_monomial_in(&d.projected_fiber.elements[k], coords))
            .collect();
        out.push_str(&format!("  {{{}}}\n", members.join(", ")));
    }
    out
}

pub fn render_ci(r: &CIReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "binomial complete intersection: {}\n",
        if r.is_ci { "yes" } else { "no" }
    ));
    out.push_str(&format!(
        "projected markov number {} vs projected rank {}\n",
        r.mu_projected, r.rank_projected
    ));
    match &r.certificate_matrix {
        Some(cert) if cert.is_empty() => {
            out.push_str("certificate: empty matrix (projected lattice is zero)\n")
        }
        Some(cert) => {
            out.push_str("mixed dominating certificate rows:\n");
            for row in cert {
                out.push_str(&format!("  {}\n", fmt_vec(row)));
            }
        }
        None => out.push_str("certificate: none found within the search bound\n"),
    }
    if let Some(block) = &r.block_presentation {
        out.push_str("block presentation rows [A M] then [C 0]:\n");
        for (a, m) in block.a.iter().zip(&block.m) {
            out.push_str(&format!("  {} | {}\n", fmt_vec(a), fmt_vec(m)));
        }
        for c in &block.c {
            out.push_str(&format!("  {} | 0\n", fmt_vec(c)));
        }
    }
    out
}

pub fn render_verify(mode: &str, ok: bool, diagnostics: &[String]) -> String {
    let mut out = String::new();
    if ok {
        out.push_str("OK\n");
    } else {
        out.push_str(&format!("verification failed (mode {mode})\n"));
        for d in diagnostics {
            out.push_str(&format!("  {d}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec::from_i64s;

    #[test]
    fn lattice_file_round_trip() {
        let text = "# comment\n2 2\n1 1\n5 0\n";
        let (n, rows) = parse_lattice_file(text).unwrap();
        assert_eq!(n, 2);
        assert_eq!(rows, vec![from_i64s(&[1, 1]), from_i64s(&[5, 0])]);
    }

    #[test]
    fn lattice_file_errors() {
        assert!(parse_lattice_file("").is_err());
        assert!(parse_lattice_file("2\n1 1\n").is_err());
        assert!(parse_lattice_file("2 1\n1 x\n").is_err());
        assert!(parse_lattice_file("2 2\n1 1\n").is_err());
        assert!(parse_lattice_file("2 1\n1 1 1\n").is_err());
    }

    #[test]
    fn binomial_file_text_and_json() {
        let text = "0 0 | 1 1\n3 0 | 0 2\n";
        let bins = parse_binomial_file(text, 2).unwrap();
        assert_eq!(bins.len(), 2);
        assert_eq!(bins[0].to_string(), "1 - x1*x2");
        let json = r#"[{"plus": [0, 0], "minus": ["2012", "2017"]}]"#;
        let bins = parse_binomial_file(json, 2).unwrap();
        assert_eq!(bins[0].minus(), &from_i64s(&[2012, 2017]));
        assert!(parse_binomial_file("1 1\n", 2).is_err());
        assert!(parse_binomial_file("1 | 1 1\n", 2).is_err());
        assert!(parse_binomial_file("-1 0 | 0 0\n", 2).is_err());
    }

    #[test]
    fn monomial_parsing() {
        assert_eq!(parse_monomial("0,0,0,1,0", 5).unwrap(), from_i64s(&[0, 0, 0, 1, 0]));
        assert!(parse_monomial("1,2", 3).is_err());
        assert!(parse_monomial("-1,2,0", 3).is_err());
    }

    #[test]
    fn decomposition_json_round_trip() {
        let rep = crate::decompose::decomposition_report(&crate::testfix::sec6_lattice()).unwrap();
        let json = DecompositionJson::from(&rep);
        let text = serde_json::to_string_pretty(&json).unwrap();
        let back: DecompositionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, back);
        assert_eq!(back.schema, 1);
        assert_eq!(back.sigma, vec![1, 2]);
    }

    #[test]
    fn markov_json_round_trip() {
        let rep = crate::synthesis::markov_basis_general(&crate::testfix::sec6_lattice()).unwrap();
        let json = MarkovJson::from(&rep);
        let text = serde_json::to_string(&json).unwrap();
        let back: MarkovJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, back);
        assert_eq!(back.mu, 4);
    }

    #[test]
    fn ci_json_round_trip() {
        let rep = crate::ci::is_binomial_ci(&crate::testfix::sec6_lattice()).unwrap();
        let json = CiJson::from(&rep);
        let text = serde_json::to_string(&json).unwrap();
        let back: CiJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, back);
        assert!(back.is_ci);
    }

    #[test]
    fn remaining_json_round_trips() {
        let l = crate::testfix::sec6_lattice();
        let d = crate::synthesis::fiber_descriptor(&l, &from_i64s(&[0, 0, 0, 1, 0])).unwrap();
        let json = FiberJson::from(&d);
        let back: FiberJson = serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
        assert_eq!(json, back);

        let (bins, mons) = crate::synthesis::indispensables_general(&l).unwrap();
        let json = IndispensableJson {
            schema: SCHEMA_VERSION,
            kind: "indispensable".into(),
            binomials: bins.iter().map(BinomialJson::from).collect(),
            monomials: strings2(&mons),
        };
        let back: IndispensableJson =
            serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
        assert_eq!(json, back);

        let json = HilbertJson {
            schema: SCHEMA_VERSION,
            kind: "hilbert".into(),
            basis: strings2(&crate::decompose::hilbert_basis_positive(&l).unwrap()),
        };
        let back: HilbertJson =
            serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
        assert_eq!(json, back);

        let json = VerifyJson {
            schema: SCHEMA_VERSION,
            kind: "verify".into(),
            mode: "markov".into(),
            ok: false,
            diagnostics: vec!["cardinality of the pure part is 3".into()],
        };
        let back: VerifyJson =
            serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
        assert_eq!(json, back);
    }
}
