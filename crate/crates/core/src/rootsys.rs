//! Root data given by a Cartan pairing matrix, with the B_k and D_k series
//! built in.
//!
//! Convention: `pairing(j, i) = ⟨α_j, α_i^∨⟩`, indices 1-based. With this
//! order the simple reflection acts on fundamental-weight coordinates as
//!
//! ```text
//! c_i(s_j λ) = c_i(λ) - c_j(λ) · pairing(j, i)
//! ```
//!
//! so the ϖ-coordinates of the simple root `α_j` are row `j` of the matrix.
//! Both index orders are common in the literature; everything in this crate
//! uses the one above.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::LinearForm;
use crate::scalar::{Coord, Scalar};

/// Coordinates relative to the fundamental weights ϖ_1, …, ϖ_k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight<T>(pub Vec<T>);

impl<T> Weight<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    /// Coordinate `c_i`, 1-based.
    pub fn coord(&self, i: usize) -> &T {
        &self.0[i - 1]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Weight<U> {
        Weight(self.0.iter().map(f).collect())
    }
}

impl Weight<i64> {
    /// Integer weight as constant linear forms in `vars` variables.
    pub fn to_forms<S: Scalar>(&self, vars: usize) -> Weight<LinearForm<S>> {
        self.map(|&c| LinearForm::from_int(vars, c))
    }
}

impl<S: Scalar> Weight<LinearForm<S>> {
    /// The symbolic weight `(λ_1, …, λ_k)`.
    pub fn symbolic(rank: usize) -> Self {
        Weight(
            (1..=rank)
                .map(|i| LinearForm::var(rank, i).expect("index in range"))
                .collect(),
        )
    }

    /// A numeric weight as constant forms.
    pub fn from_scalars(values: &[S]) -> Self {
        Weight(
            values
                .iter()
                .map(|v| LinearForm::constant(values.len(), v.clone()))
                .collect(),
        )
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank(), other.rank())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank(), other.rank())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn eval(&self, assignment: &[S]) -> Result<Weight<S>> {
        self.0
            .iter()
            .map(|f| f.eval(assignment))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    /// Substitutes the assignment and keeps the result as constant forms.
    pub fn substitute(&self, assignment: &[S]) -> Result<Self> {
        let vars = self.0.first().map_or(assignment.len(), |f| f.vars());
        Ok(self.eval(assignment)?.map(|v| LinearForm::constant(vars, v.clone())))
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

impl<T: fmt::Display> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Coordinates relative to the functionals ε_1, …, ε_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsWeight<T>(pub Vec<T>);

impl<T: fmt::Display> fmt::Display for EpsWeight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&Weight(self.0.iter().collect::<Vec<_>>()), f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootKind {
    B,
    D,
    Custom,
}

impl RootKind {
    fn name(self) -> &'static str {
        match self {
            RootKind::B => "B",
            RootKind::D => "D",
            RootKind::Custom => "custom",
        }
    }
}

/// A positive root with its simple-root and simple-coroot expansions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    /// `β = Σ n_i α_i`
    pub simple: Vec<i64>,
    /// `β^∨ = Σ m_i α_i^∨`
    pub coroot: Vec<i64>,
    /// ϖ-coordinates `c_i(β) = ⟨β, α_i^∨⟩`
    pub weight: Weight<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    /// `⟨x, β^∨⟩` for a weight in ϖ-coordinates.
    pub fn pair(&self, x: &Weight<i64>) -> i64 {
        x.0.iter().zip(&self.coroot).map(|(c, m)| c * m).sum()
    }

    /// Renders the simple-root expansion, e.g. `α1+2α2`.
    pub fn label(&self) -> String {
        let mut out = String::new();
        for (i, &n) in self.simple.iter().enumerate() {
            if n == 0 {
                continue;
            }
            if n < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if n.abs() != 1 {
                out.push_str(&n.abs().to_string());
            }
            out.push_str(&format!("α{}", i + 1));
        }
        out
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

const ROOT_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootDatum {
    kind: RootKind,
    rank: usize,
    pairing: Vec<Vec<i64>>,
}

impl RootDatum {
    /// The standard datum of type B_k (k ≥ 3) or D_k (k ≥ 4), Bourbaki labelling.
    pub fn new(kind: RootKind, rank: usize) -> Result<Self> {
        let min = match kind {
            RootKind::B => 3,
            RootKind::D => 4,
            RootKind::Custom => return Err(Error::UnsupportedKind { op: "make_datum" }),
        };
        if rank < min {
            return Err(Error::UnsupportedRank {
                kind: kind.name(),
                rank,
                min,
            });
        }
        let mut a = vec![vec![0i64; rank]; rank];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match kind {
            RootKind::B => {
                for i in 0..rank - 1 {
                    link(i, i + 1);
                }
                // α_k is short: ⟨α_{k-1}, α_k^∨⟩ = -2
                a[rank - 2][rank - 1] = -2;
            }
            RootKind::D => {
                for i in 0..rank - 2 {
                    link(i, i + 1);
                }
                link(rank - 3, rank - 1);
            }
            RootKind::Custom => unreachable!(),
        }
        Ok(Self {
            kind,
            rank,
            pairing: a,
        })
    }

    pub fn b(rank: usize) -> Result<Self> {
        Self::new(RootKind::B, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(RootKind::D, rank)
    }

    /// A custom datum; `rows[j][i] = ⟨α_{j+1}, α_{i+1}^∨⟩`.
    pub fn custom(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidPairing("empty matrix".into()));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidPairing(format!("row {} has length {}", j + 1, row.len())));
            }
            for (i, &v) in row.iter().enumerate() {
                if i == j && v != 2 {
                    return Err(Error::InvalidPairing(format!("diagonal entry {} is {v}", j + 1)));
                }
                if i != j && !(-3..=0).contains(&v) {
                    return Err(Error::InvalidPairing(format!("entry ({}, {}) is {v}", j + 1, i + 1)));
                }
                if i != j && (v == 0) != (rows[i][j] == 0) {
                    return Err(Error::InvalidPairing(format!(
                        "entries ({}, {}) and ({}, {}) disagree on zero",
                        j + 1,
                        i + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            kind: RootKind::Custom,
            rank,
            pairing: rows,
        })
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `⟨α_j, α_i^∨⟩`, 1-based.
    pub fn pairing(&self, j: usize, i: usize) -> i64 {
        self.pairing[j - 1][i - 1]
    }

    pub fn pairing_rows(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    pub fn check_letter(&self, j: usize) -> Result<()> {
        if (1..=self.rank).contains(&j) {
            Ok(())
        } else {
            Err(Error::BadLetter {
                index: j,
                rank: self.rank,
            })
        }
    }

    pub fn simple_reflection<T: Coord>(&self, j: usize, w: &Weight<T>) -> Result<Weight<T>> {
        self.check_letter(j)?;
        check_rank(self.rank, w.rank())?;
        let mut out = w.clone();
        self.reflect_in_place(j, &mut out.0);
        Ok(out)
    }

    /// Unchecked reflection on raw coordinates; `j` is 1-based.
    pub(crate) fn reflect_in_place<T: Coord>(&self, j: usize, coords: &mut [T]) {
        let cj = coords[j - 1].clone();
        if cj.is_zero_coord() {
            return;
        }
        for (i, c) in coords.iter_mut().enumerate() {
            let a = self.pairing[j - 1][i];
            if a != 0 {
                *c = c.add_scaled(&cj, -a);
            }
        }
    }

    /// `s_j` on a root given by simple-root coordinates.
    pub(crate) fn reflect_root(&self, j: usize, simple: &mut [i64]) {
        let shift: i64 = simple
            .iter()
            .enumerate()
            .map(|(i, &n)| n * self.pairing[i][j - 1])
            .sum();
        simple[j - 1] -= shift;
    }

    fn reflect_coroot(&self, j: usize, coroot: &mut [i64]) {
        let shift: i64 = coroot
            .iter()
            .enumerate()
            .map(|(i, &m)| m * self.pairing[j - 1][i])
            .sum();
        coroot[j - 1] -= shift;
    }

    /// ϖ-coordinates of `Σ n_i α_i`.
    pub fn root_weight(&self, simple: &[i64]) -> Weight<i64> {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| simple[j] * self.pairing[j][i]).sum())
                .collect(),
        )
    }

    pub fn simple_root(&self, j: usize) -> Weight<i64> {
        Weight(self.pairing[j - 1].clone())
    }

    pub fn rho(&self) -> Weight<i64> {
        Weight(vec![1; self.rank])
    }

    /// Positive roots sorted by height, then by simple-root coordinates.
    ///
    /// Generated by closing the simple roots under simple reflections, so
    /// any pairing matrix of finite type works; other matrices are reported
    /// once the root count passes a fixed limit.
    pub fn positive_roots(&self) -> Result<Vec<Root>> {
        let k = self.rank;
        let unit = |j: usize| {
            let mut v = vec![0i64; k];
            v[j] = 1;
            v
        };
        let mut seen: std::collections::HashMap<Vec<i64>, Vec<i64>> =
            (0..k).map(|j| (unit(j), unit(j))).collect();
        let mut queue: std::collections::VecDeque<(Vec<i64>, Vec<i64>)> =
            (0..k).map(|j| (unit(j), unit(j))).collect();
        while let Some((simple, coroot)) = queue.pop_front() {
            for j in 1..=k {
                if simple == unit(j - 1) {
                    continue;
                }
                let mut s = simple.clone();
                let mut c = coroot.clone();
                self.reflect_root(j, &mut s);
                self.reflect_coroot(j, &mut c);
                if s.iter().all(|&n| n >= 0) && !seen.contains_key(&s) {
                    seen.insert(s.clone(), c.clone());
                    queue.push_back((s, c));
                    if seen.len() > ROOT_LIMIT {
                        return Err(Error::NotFiniteType { limit: ROOT_LIMIT });
                    }
                }
            }
        }
        let mut roots: Vec<Root> = seen
            .into_iter()
            .map(|(simple, coroot)| Root {
                weight: self.root_weight(&simple),
                simple,
                coroot,
            })
            .collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.simple.cmp(&b.simple)));
        Ok(roots)
    }

    /// ϖ-coordinates to ε-coordinates.
    pub fn to_epsilon<S: Scalar>(&self, w: &Weight<LinearForm<S>>) -> Result<EpsWeight<LinearForm<S>>> {
        check_rank(self.rank, w.rank())?;
        let k = self.rank;
        let c = &w.0;
        let half = S::half();
        let tail = |from: usize, to: usize| -> LinearForm<S> {
            c[from..to]
                .iter()
                .fold(LinearForm::zero(c[0].vars()), |acc, f| &acc + f)
        };
        let eps = match self.kind {
            RootKind::B => (0..k)
                .map(|m| &tail(m, k - 1) + &c[k - 1].scale(&half))
                .collect(),
            RootKind::D => {
                let spin = (&c[k - 2] + &c[k - 1]).scale(&half);
                let mut eps: Vec<_> = (0..k - 1).map(|m| &tail(m, k - 2) + &spin).collect();
                eps.push((&c[k - 1] - &c[k - 2]).scale(&half));
                eps
            }
            RootKind::Custom => return Err(Error::UnsupportedKind { op: "to_epsilon" }),
        };
        Ok(EpsWeight(eps))
    }

    /// ε-coordinates to ϖ-coordinates: `c_i = ⟨x, α_i^∨⟩`.
    pub fn from_epsilon<S: Scalar>(&self, x: &EpsWeight<LinearForm<S>>) -> Result<Weight<LinearForm<S>>> {
        check_rank(self.rank, x.0.len())?;
        let k = self.rank;
        let e = &x.0;
        let mut c: Vec<_> = (0..k - 1).map(|i| &e[i] - &e[i + 1]).collect();
        c.push(match self.kind {
            RootKind::B => e[k - 1].scale(&S::from_int(2)),
            RootKind::D => &e[k - 2] + &e[k - 1],
            RootKind::Custom => return Err(Error::UnsupportedKind { op: "from_epsilon" }),
        });
        Ok(Weight(c))
    }
}

/// True iff every coordinate is a positive constant.
pub fn is_regular_dominant<S: Scalar>(w: &Weight<LinearForm<S>>) -> Result<bool> {
    let mut regular = true;
    for (i, f) in w.0.iter().enumerate() {
        match f.as_constant() {
            Some(c) => regular &= c.is_positive(),
            None => return Err(Error::NeedsAssignment { index: i + 1 }),
        }
    }
    Ok(regular)
}
