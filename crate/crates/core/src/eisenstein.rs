//! Kostant weights `μ_w = w(λ+ρ) − ρ`, evaluation points
//! `λ_w = −w(λ+ρ)|_{𝔞}`, the holomorphy criterion and the degree supports
//! of regular Eisenstein classes for the two maximal parabolics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forms::LinearForm;
use crate::hasse::{length_histogram, HasseDiagram};
use crate::rootsys::Weight;
use crate::scalar::Scalar;
use crate::so_n2::{GroupSpec, LeviSubgroup, ParabolicId, Parity, VanishingBounds};
use crate::weyl::{apply_word, apply_word_to_root, WeylWord};

fn as_text<T: Display, Z: Serializer>(value: &T, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
    s.collect_str(value)
}

/// Fails unless `w⁻¹` maps every Levi simple root to a positive root.
pub fn check_minimal(g: &GroupSpec, p: ParabolicId, w: &WeylWord) -> Result<()> {
    let d = g.datum();
    w.validate(d)?;
    let inverse = w.inverse();
    for j in g.parabolic(p).levi() {
        let mut r = vec![0; d.rank()];
        r[j - 1] = 1;
        apply_word_to_root(d, inverse.letters(), &mut r);
        if r.iter().any(|&x| x < 0) {
            return Err(Error::NotMinimal { word: w.to_string() });
        }
    }
    Ok(())
}

fn shifted<S: Scalar>(g: &GroupSpec, w: &WeylWord, lambda: &Weight<LinearForm<S>>) -> Result<Weight<LinearForm<S>>> {
    let vars = lambda.0.first().map_or(g.k(), |f| f.vars());
    let rho = g.datum().rho().to_forms::<S>(vars);
    apply_word(g.datum(), w, &lambda.try_add(&rho)?)
}

/// `μ_w|_{𝔟}` for `w ∈ W^P`.
pub fn kostant_mu<S: Scalar>(
    g: &GroupSpec,
    p: ParabolicId,
    w: &WeylWord,
    lambda: &Weight<LinearForm<S>>,
) -> Result<Vec<LinearForm<S>>> {
    check_minimal(g, p, w)?;
    let vars = lambda.0.first().map_or(g.k(), |f| f.vars());
    let rho = g.datum().rho().to_forms::<S>(vars);
    let mu = shifted(g, w, lambda)?.try_sub(&rho)?;
    Ok(g.restrict(p, &mu)?.b_coords)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct EvaluationPoint<S: Scalar> {
    /// `a_i` in `λ_w = a_i ρ_i`
    pub normalized: LinearForm<S>,
    /// Coefficient of `ϖ_{i1}` in `λ_w`.
    pub raw: LinearForm<S>,
}

pub fn evaluation_point<S: Scalar>(
    g: &GroupSpec,
    p: ParabolicId,
    w: &WeylWord,
    lambda: &Weight<LinearForm<S>>,
) -> Result<EvaluationPoint<S>> {
    check_minimal(g, p, w)?;
    let raw = -g.restrict(p, &shifted(g, w, lambda)?)?.a_coefficient;
    let normalized = raw.scale(&(S::one() / g.rho_i::<S>(p)));
    Ok(EvaluationPoint { normalized, raw })
}

/// `2·l(w) ≥ dim N_P`.
pub fn holomorphy_flag(g: &GroupSpec, p: ParabolicId, w: &WeylWord) -> bool {
    2 * w.len() >= g.dim_nilradical(p)
}

/// Lengths whose Kostant weights never carry a cohomological type.
pub fn excluded_lengths(g: &GroupSpec, p: ParabolicId) -> BTreeSet<usize> {
    match (g.parity(), p) {
        (Parity::Even, ParabolicId::P1) => BTreeSet::from([g.k() - 1]),
        _ => BTreeSet::new(),
    }
}

pub fn even_case_constraint(g: &GroupSpec, p: ParabolicId) -> bool {
    g.parity() == Parity::Even && p == ParabolicId::P1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationTerm {
    /// cuspidal degree
    pub d: usize,
    /// length of `w`
    pub l: usize,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSupport {
    pub parabolic: ParabolicId,
    pub q_min: usize,
    pub q_max: usize,
    pub generation: Vec<GenerationTerm>,
    pub even_case_constraint_needed: bool,
}

impl DegreeSupport {
    /// The generated degrees cover `[q_min, q_max]` without gaps.
    pub fn tiles(&self) -> bool {
        let got: BTreeSet<usize> = self.generation.iter().map(|t| t.q).collect();
        got == (self.q_min..=self.q_max).collect()
    }

    pub fn lengths(&self) -> BTreeSet<usize> {
        self.generation.iter().map(|t| t.l).collect()
    }
}

/// Pairs `(d, l)` with `d` a cuspidal degree and `l` an occurring length
/// such that `d + l` reaches the lower vanishing bound `q_0`.
pub fn degree_support_from(g: &GroupSpec, p: ParabolicId, histogram: &BTreeMap<usize, usize>) -> DegreeSupport {
    let q0 = g.vanishing_bounds().q0 as usize;
    let excluded = excluded_lengths(g, p);
    let mut generation = Vec::new();
    for d in g.cuspidal_degrees(p) {
        for (&l, &count) in histogram {
            if count > 0 && !excluded.contains(&l) && d + l >= q0 {
                generation.push(GenerationTerm { d, l, q: d + l });
            }
        }
    }
    generation.sort_by_key(|t| (t.q, t.d, t.l));
    let q_min = generation.iter().map(|t| t.q).min().unwrap_or(q0);
    let q_max = generation.iter().map(|t| t.q).max().unwrap_or(q0);
    DegreeSupport {
        parabolic: p,
        q_min,
        q_max,
        generation,
        even_case_constraint_needed: even_case_constraint(g, p),
    }
}

pub fn degree_support(g: &GroupSpec, p: ParabolicId) -> DegreeSupport {
    degree_support_from(g, p, &length_histogram(&g.hasse(p)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct KostantRecord<S: Scalar> {
    pub node: usize,
    pub word: WeylWord,
    #[serde(serialize_with = "as_text")]
    pub word_text: WeylWord,
    pub length: usize,
    pub mu_restricted: Vec<LinearForm<S>>,
    pub a_coefficient: LinearForm<S>,
    pub raw_a_coefficient: LinearForm<S>,
    pub holomorphy_guaranteed: bool,
    pub even_case_constraint_needed: bool,
    pub excluded_from_generation: bool,
}

/// One record per node of the diagram, sorted by length and then word.
pub fn kostant_records<S: Scalar>(
    g: &GroupSpec,
    p: ParabolicId,
    h: &HasseDiagram,
    lambda: &Weight<LinearForm<S>>,
) -> Result<Vec<KostantRecord<S>>> {
    let excluded = excluded_lengths(g, p);
    let mut out = h
        .nodes()
        .iter()
        .map(|node| {
            let point = evaluation_point(g, p, &node.word, lambda)?;
            Ok(KostantRecord {
                node: node.id,
                word: node.word.clone(),
                word_text: node.word.clone(),
                length: node.length,
                mu_restricted: kostant_mu(g, p, &node.word, lambda)?,
                a_coefficient: point.normalized,
                raw_a_coefficient: point.raw,
                holomorphy_guaranteed: holomorphy_flag(g, p, &node.word),
                even_case_constraint_needed: even_case_constraint(g, p),
                excluded_from_generation: excluded.contains(&node.length),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCount {
    pub length: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviEntry {
    pub index: usize,
    pub name: String,
    pub factors: Vec<crate::so_n2::LeviFactor>,
}

impl From<&LeviSubgroup> for LeviEntry {
    fn from(l: &LeviSubgroup) -> Self {
        Self {
            index: l.index,
            name: l.to_string(),
            factors: l.factors.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct ParabolicReport<S: Scalar> {
    pub parabolic: ParabolicId,
    pub crossed: Vec<usize>,
    pub dim_nilradical: usize,
    #[serde(serialize_with = "as_text")]
    pub rho_i: S,
    pub coset_count: usize,
    pub counts: Vec<LengthCount>,
    pub levi: Vec<LeviEntry>,
    pub cuspidal_degrees: Vec<usize>,
    pub pi_label: String,
    pub support: DegreeSupport,
    pub records: Vec<KostantRecord<S>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Report<S: Scalar> {
    pub n: i64,
    pub k: usize,
    pub parity: Parity,
    pub root_type: String,
    pub bounds: VanishingBounds,
    /// `[q0, vcd]`
    pub nonvanishing_range: [i64; 2],
    pub lambda: Vec<LinearForm<S>>,
    pub parabolics: Vec<ParabolicReport<S>>,
}

/// `λ` as linear forms: symbolic when `numeric` is `None`, otherwise the
/// given values, which must form a regular dominant weight.
pub fn highest_weight<S: Scalar>(g: &GroupSpec, numeric: Option<&[S]>) -> Result<Weight<LinearForm<S>>> {
    let k = g.k();
    match numeric {
        None => Ok(Weight::symbolic(k)),
        Some(values) => {
            if values.len() != k {
                return Err(Error::DimensionMismatch {
                    left: k,
                    right: values.len(),
                });
            }
            let w = Weight::<LinearForm<S>>::from_scalars(values);
            if !crate::rootsys::is_regular_dominant(&w)? {
                return Err(Error::NotRegular { weight: w.to_string() });
            }
            Ok(w)
        }
    }
}

pub fn parabolic_report<S: Scalar>(
    g: &GroupSpec,
    p: ParabolicId,
    lambda: &Weight<LinearForm<S>>,
) -> Result<ParabolicReport<S>> {
    let h = g.hasse(p);
    let hist = length_histogram(&h);
    Ok(ParabolicReport {
        parabolic: p,
        crossed: g.crossed_set(p).into_iter().collect(),
        dim_nilradical: g.dim_nilradical(p),
        rho_i: g.rho_i::<S>(p),
        coset_count: h.len(),
        counts: hist
            .iter()
            .map(|(&length, &count)| LengthCount { length, count })
            .collect(),
        levi: g.levi_list(p).iter().map(LeviEntry::from).collect(),
        cuspidal_degrees: g.cuspidal_degrees(p).into_iter().collect(),
        pi_label: g.pi_label(p).to_string(),
        support: degree_support_from(g, p, &hist),
        records: kostant_records(g, p, &h, lambda)?,
    })
}

pub fn full_report<S: Scalar>(g: &GroupSpec, numeric: Option<&[S]>) -> Result<Report<S>> {
    let lambda = highest_weight(g, numeric)?;
    let bounds = g.vanishing_bounds();
    Ok(Report {
        n: g.n(),
        k: g.k(),
        parity: g.parity(),
        root_type: format!("{:?}{}", g.datum().kind(), g.k()),
        bounds,
        nonvanishing_range: [bounds.q0, bounds.vcd],
        lambda: lambda.0.clone(),
        parabolics: ParabolicId::ALL
            .iter()
            .map(|&p| parabolic_report(g, p, &lambda))
            .collect::<Result<Vec<_>>>()?,
    })
}
