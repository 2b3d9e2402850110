//! Minimal coset representatives as the orbit of `δ_P`.
//!
//! Starting from `δ_P` (the sum of the fundamental weights on the crossed
//! nodes), the diagram is grown breadth first. From the node of `w`, whose
//! orbit weight is `w⁻¹(δ_P)`, the letter `s_α` is followed when
//!
//! * `α ∉ Φ_{w⁻¹}`, i.e. `w·s_α` is longer than `w`, and
//! * `s_α` moves the orbit weight, i.e. its `α`-coordinate is nonzero.
//!
//! The target node is `w·s_α` with orbit weight `s_α(w⁻¹(δ_P))`. Nodes are
//! identified by their orbit weight, so different paths to one weight merge.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootDatum, RootKind, Weight};
use crate::weyl::{apply_word_to_root, WeylWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicChoice {
    datum: RootDatum,
    crossed: BTreeSet<usize>,
}

impl ParabolicChoice {
    pub fn new(datum: RootDatum, crossed: impl IntoIterator<Item = usize>) -> Result<Self> {
        let crossed: BTreeSet<usize> = crossed.into_iter().collect();
        for &j in &crossed {
            datum.check_letter(j)?;
        }
        Ok(Self { datum, crossed })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn crossed(&self) -> &BTreeSet<usize> {
        &self.crossed
    }

    /// Simple roots of the Levi factor.
    pub fn levi(&self) -> Vec<usize> {
        (1..=self.datum.rank())
            .filter(|j| !self.crossed.contains(j))
            .collect()
    }
}

pub fn delta_p(p: &ParabolicChoice) -> Weight<i64> {
    Weight(
        (1..=p.datum.rank())
            .map(|i| i64::from(p.crossed.contains(&i)))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseNode {
    pub id: usize,
    pub word: WeylWord,
    pub length: usize,
    /// `w⁻¹(δ_P)`
    pub weight: Weight<i64>,
    #[serde(skip)]
    pub inversions: Vec<Vec<i64>>,
    #[serde(skip)]
    pub inverse_inversions: Vec<Vec<i64>>,
    #[serde(skip)]
    rho_image: Weight<i64>,
}

impl HasseNode {
    /// `Φ_w` in simple-root coordinates, in order of discovery along the word.
    pub fn inversion_set(&self) -> &[Vec<i64>] {
        &self.inversions
    }

    /// `w⁻¹(ρ)`, which determines `w`.
    pub fn rho_image(&self) -> &Weight<i64> {
        &self.rho_image
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// The simple reflection `s_α` with `to = from · s_α`.
    pub label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub from: usize,
    pub to: usize,
    /// Positive root `β` with `to = s_β · from`, in simple-root coordinates.
    pub root: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    choice: ParabolicChoice,
    nodes: Vec<HasseNode>,
    algo_edges: Vec<Edge>,
    cover_edges: Option<Vec<CoverEdge>>,
}

fn unit(k: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; k];
    v[j - 1] = 1;
    v
}

pub fn build_hasse(p: &ParabolicChoice) -> HasseDiagram {
    let d = &p.datum;
    let k = d.rank();
    let root = HasseNode {
        id: 0,
        word: WeylWord::identity(),
        length: 0,
        weight: delta_p(p),
        inversions: Vec::new(),
        inverse_inversions: Vec::new(),
        rho_image: d.rho(),
    };
    let mut index: HashMap<Weight<i64>, usize> = HashMap::from([(root.weight.clone(), 0)]);
    let mut nodes = vec![root];
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &id in &frontier {
            for alpha in 1..=k {
                let node = &nodes[id];
                if node.weight.0[alpha - 1] == 0 {
                    continue;
                }
                let simple = unit(k, alpha);
                if node.inverse_inversions.contains(&simple) {
                    continue;
                }
                let mut target = node.weight.clone();
                d.reflect_in_place(alpha, &mut target.0);
                let to = match index.get(&target) {
                    Some(&to) => {
                        debug_assert_eq!(nodes[to].length, node.length + 1);
                        to
                    }
                    None => {
                        let to = nodes.len();
                        let mut w_alpha = simple.clone();
                        apply_word_to_root(d, node.word.letters(), &mut w_alpha);
                        let mut inversions = node.inversions.clone();
                        inversions.push(w_alpha);
                        let mut inverse_inversions = vec![simple];
                        inverse_inversions.extend(node.inverse_inversions.iter().map(|r| {
                            let mut r = r.clone();
                            d.reflect_root(alpha, &mut r);
                            r
                        }));
                        let mut rho_image = node.rho_image.clone();
                        d.reflect_in_place(alpha, &mut rho_image.0);
                        let child = HasseNode {
                            id: to,
                            word: node.word.then(alpha),
                            length: node.length + 1,
                            weight: target.clone(),
                            inversions,
                            inverse_inversions,
                            rho_image,
                        };
                        index.insert(target, to);
                        nodes.push(child);
                        next.push(to);
                        to
                    }
                };
                edges.push(Edge {
                    from: id,
                    to,
                    label: alpha,
                });
            }
        }
        frontier = next;
    }
    HasseDiagram {
        choice: p.clone(),
        nodes,
        algo_edges: edges,
        cover_edges: None,
    }
}

impl HasseDiagram {
    pub fn choice(&self) -> &ParabolicChoice {
        &self.choice
    }

    pub fn nodes(&self) -> &[HasseNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &HasseNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn algo_edges(&self) -> &[Edge] {
        &self.algo_edges
    }

    /// Covers, once [`bruhat_covers`] has run.
    pub fn cover_edges(&self) -> Option<&[CoverEdge]> {
        self.cover_edges.as_deref()
    }

    pub fn max_length(&self) -> usize {
        self.nodes.iter().map(|n| n.length).max().unwrap_or(0)
    }

    pub fn find_weight(&self, w: &Weight<i64>) -> Option<&HasseNode> {
        self.nodes.iter().find(|n| &n.weight == w)
    }

    /// The node equal to `w` as a group element, if `w ∈ W^P`.
    pub fn find_element(&self, w: &WeylWord) -> Result<Option<&HasseNode>> {
        let rho = crate::weyl::apply_word(self.choice.datum(), &w.inverse(), &self.choice.datum().rho())?;
        Ok(self.nodes.iter().find(|n| n.rho_image == rho))
    }

    /// Unique node of maximal length.
    pub fn longest(&self) -> &HasseNode {
        let top = self.max_length();
        self.nodes.iter().find(|n| n.length == top).expect("diagram has a node")
    }

    pub fn cover_only_edges(&self) -> Vec<&CoverEdge> {
        let algo: BTreeSet<(usize, usize)> = self.algo_edges.iter().map(|e| (e.from, e.to)).collect();
        self.cover_edges
            .iter()
            .flatten()
            .filter(|c| !algo.contains(&(c.from, c.to)))
            .collect()
    }
}

/// `N(l)` for every length that occurs.
pub fn length_histogram(h: &HasseDiagram) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for n in &h.nodes {
        *out.entry(n.length).or_insert(0) += 1;
    }
    out
}

/// Adds every Bruhat cover `w' → w = s_β w'` inside `W^P`.
///
/// With `r_w = w⁻¹(ρ)` one has `r_{s_β w'} = s_γ(r_{w'})` for
/// `γ = w'⁻¹(β)`, so candidates are found by reflecting `r_{w'}` in every
/// positive root and looking the result up.
pub fn bruhat_covers(h: &HasseDiagram) -> Result<HasseDiagram> {
    let d = h.choice.datum();
    if d.kind() == RootKind::Custom {
        return Err(Error::UnsupportedKind { op: "bruhat_covers" });
    }
    let roots = d.positive_roots()?;
    let by_rho: HashMap<&Weight<i64>, usize> = h.nodes.iter().map(|n| (&n.rho_image, n.id)).collect();
    let mut covers = Vec::new();
    for node in &h.nodes {
        let r = &node.rho_image;
        let mut found: Vec<(usize, Vec<i64>)> = Vec::new();
        for gamma in &roots {
            let c = gamma.pair(r);
            let image = Weight(
                r.0.iter()
                    .zip(&gamma.weight.0)
                    .map(|(x, g)| x - c * g)
                    .collect(),
            );
            let Some(&to) = by_rho.get(&image) else { continue };
            if h.nodes[to].length != node.length + 1 {
                continue;
            }
            let mut beta = gamma.simple.clone();
            apply_word_to_root(d, node.word.letters(), &mut beta);
            if beta.iter().all(|&x| x <= 0) {
                beta.iter_mut().for_each(|x| *x = -*x);
            }
            found.push((to, beta));
        }
        found.sort();
        found.dedup_by_key(|(to, _)| *to);
        covers.extend(found.into_iter().map(|(to, root)| CoverEdge {
            from: node.id,
            to,
            root,
        }));
    }
    let mut out = h.clone();
    out.cover_edges = Some(covers);
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Also draw covers that the algorithm did not produce, dashed.
    pub covers: bool,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(h: &HasseDiagram, options: DotOptions) -> String {
    let mut out = String::from("digraph WP {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    for n in &h.nodes {
        let _ = writeln!(
            out,
            "  n{} [label=\"{}\", tooltip=\"{}\"];",
            n.id,
            dot_escape(&n.weight.to_string()),
            dot_escape(&n.word.to_string())
        );
    }
    for e in &h.algo_edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"s{}\"];", e.from, e.to, e.label);
    }
    if options.covers {
        for c in h.cover_only_edges() {
            let _ = writeln!(out, "  n{} -> n{} [style=\"dashed\"];", c.from, c.to);
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonDiagram<'a> {
    crossed: Vec<usize>,
    nodes: &'a [HasseNode],
    algo_edges: &'a [Edge],
    cover_edges: &'a [CoverEdge],
}

/// `{crossed, nodes, algo_edges, cover_edges}`; `cover_edges` is empty until
/// covers are computed.
pub fn to_json(h: &HasseDiagram) -> serde_json::Value {
    serde_json::to_value(JsonDiagram {
        crossed: h.choice.crossed.iter().copied().collect(),
        nodes: &h.nodes,
        algo_edges: &h.algo_edges,
        cover_edges: h.cover_edges.as_deref().unwrap_or(&[]),
    })
    .expect("diagram serializes")
}
