//! Data attached to SO(n,2) of ℚ-rank 2 and its two standard maximal
//! parabolics: root datum, crossed nodes, restriction of weights to
//! `𝔞_i ⊕ 𝔟_i`, `ρ_i`, nilradical dimensions, Levi subgroups and degrees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::LinearForm;
use crate::hasse::{build_hasse, HasseDiagram, ParabolicChoice};
use crate::rootsys::{RootDatum, Weight};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ParabolicId {
    P1,
    P2,
}

impl ParabolicId {
    pub const ALL: [ParabolicId; 2] = [ParabolicId::P1, ParabolicId::P2];

    /// The crossed simple root.
    pub fn node(self) -> usize {
        match self {
            ParabolicId::P1 => 1,
            ParabolicId::P2 => 2,
        }
    }
}

impl fmt::Display for ParabolicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.node())
    }
}

impl FromStr for ParabolicId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "P1" | "1" => Ok(ParabolicId::P1),
            "P2" | "2" => Ok(ParabolicId::P2),
            _ => Err(Error::Parse {
                what: "parabolic",
                input: s.to_string(),
                reason: "expected P1 or P2".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    n: i64,
    parity: Parity,
    k: usize,
    datum: RootDatum,
}

pub fn group_spec(n: i64) -> Result<GroupSpec> {
    if n < 5 {
        return Err(Error::OutOfRegime(n));
    }
    let (parity, k) = if n % 2 == 1 {
        (Parity::Odd, ((n + 1) / 2) as usize)
    } else {
        (Parity::Even, ((n + 2) / 2) as usize)
    };
    let datum = match parity {
        Parity::Odd => RootDatum::b(k)?,
        Parity::Even => RootDatum::d(k)?,
    };
    Ok(GroupSpec { n, parity, k, datum })
}

/// `λ|_{𝔞_i} = a · ϖ_{i1}` and `λ|_{𝔟_i} = Σ_j b_j ϖ_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RestrictionData<S: Scalar> {
    pub a_coefficient: LinearForm<S>,
    pub b_coords: Vec<LinearForm<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum LeviFactor {
    /// `SO(2)^power`
    Torus { power: usize },
    /// `SO(p,q)^+`
    Indefinite { p: usize, q: usize },
    /// `SL_2(ℝ)`
    Sl2,
    /// `SO(m)`
    Compact { m: usize },
}

impl fmt::Display for LeviFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LeviFactor::Torus { power: 1 } => f.write_str("SO(2)"),
            LeviFactor::Torus { power } => write!(f, "SO(2)^{power}"),
            LeviFactor::Indefinite { p, q } => write!(f, "SO({p},{q})^+"),
            LeviFactor::Sl2 => f.write_str("SL2(R)"),
            LeviFactor::Compact { m } => write!(f, "SO({m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviSubgroup {
    pub index: usize,
    pub factors: Vec<LeviFactor>,
}

impl LeviSubgroup {
    fn new(index: usize, factors: Vec<LeviFactor>) -> Self {
        Self {
            index,
            factors: factors
                .into_iter()
                .filter(|f| !matches!(f, LeviFactor::Torus { power: 0 }))
                .collect(),
        }
    }
}

impl fmt::Display for LeviSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("×")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingBounds {
    pub l0: i64,
    pub q0: i64,
    pub vcd: i64,
}

impl GroupSpec {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn crossed_set(&self, p: ParabolicId) -> BTreeSet<usize> {
        BTreeSet::from([p.node()])
    }

    pub fn parabolic(&self, p: ParabolicId) -> ParabolicChoice {
        ParabolicChoice::new(self.datum.clone(), self.crossed_set(p)).expect("node 1 and 2 exist")
    }

    pub fn hasse(&self, p: ParabolicId) -> HasseDiagram {
        build_hasse(&self.parabolic(p))
    }

    /// Weights of `ϖ_i` in `λ|_{𝔞}`: 1 except for the halved tail nodes
    /// and, for `P_2`, the halved first node.
    fn a_weights<S: Scalar>(&self, p: ParabolicId) -> Vec<S> {
        let k = self.k;
        let half = S::half();
        (1..=k)
            .map(|i| {
                let tail = match self.parity {
                    Parity::Odd => i == k,
                    Parity::Even => i >= k - 1,
                };
                if tail || (p == ParabolicId::P2 && i == 1) {
                    half.clone()
                } else {
                    S::one()
                }
            })
            .collect()
    }

    /// Indices of `λ` kept in `λ|_{𝔟_i}` in the order of `ϖ_{i2}, …, ϖ_{ik}`.
    pub fn b_indices(&self, p: ParabolicId) -> Vec<usize> {
        (1..=self.k).filter(|&i| i != p.node()).collect()
    }

    pub fn restrict<S: Scalar>(&self, p: ParabolicId, w: &Weight<LinearForm<S>>) -> Result<RestrictionData<S>> {
        if w.rank() != self.k {
            return Err(Error::DimensionMismatch {
                left: self.k,
                right: w.rank(),
            });
        }
        let vars = w.0[0].vars();
        let mut a = LinearForm::zero(vars);
        for (c, weight) in w.0.iter().zip(self.a_weights::<S>(p)) {
            a = a.try_add(&c.scale(&weight))?;
        }
        let b_coords = self.b_indices(p).into_iter().map(|i| w.0[i - 1].clone()).collect();
        Ok(RestrictionData {
            a_coefficient: a,
            b_coords,
        })
    }

    /// `ϖ_{i1}, ϖ_{i2}, …, ϖ_{ik}` in ϖ-coordinates.
    pub fn restriction_basis<S: Scalar>(&self, p: ParabolicId) -> Vec<Vec<S>> {
        let k = self.k;
        let h = S::half();
        let unit = |i: usize| -> Vec<S> {
            let mut v = vec![S::zero(); k];
            v[i - 1] = S::one();
            v
        };
        let with = |i: usize, at: usize, value: S| -> Vec<S> {
            let mut v = unit(i);
            v[at - 1] = value;
            v
        };
        let mut basis = vec![unit(p.node())];
        match (self.parity, p) {
            (Parity::Odd, ParabolicId::P1) => {
                for j in 2..k {
                    basis.push(with(j, 1, -S::one()));
                }
                basis.push(with(k, 1, -h.clone()));
            }
            (Parity::Even, ParabolicId::P1) => {
                for j in 2..k - 1 {
                    basis.push(with(j, 1, -S::one()));
                }
                basis.push(with(k - 1, 1, -h.clone()));
                basis.push(with(k, 1, -h.clone()));
            }
            (Parity::Odd, ParabolicId::P2) => {
                basis.push(with(1, 2, -h.clone()));
                for j in 3..k {
                    basis.push(with(j, 2, -S::one()));
                }
                basis.push(with(k, 2, -h.clone()));
            }
            (Parity::Even, ParabolicId::P2) => {
                basis.push(with(1, 2, -h.clone()));
                for j in 3..k - 1 {
                    basis.push(with(j, 2, -S::one()));
                }
                basis.push(with(k - 1, 2, -h.clone()));
                basis.push(with(k, 2, -h.clone()));
            }
        }
        basis
    }

    /// `a · ϖ_{i1} + Σ_j b_j ϖ_{ij}`.
    pub fn recombine<S: Scalar>(&self, p: ParabolicId, r: &RestrictionData<S>) -> Result<Weight<LinearForm<S>>> {
        let basis = self.restriction_basis::<S>(p);
        let vars = r.a_coefficient.vars();
        let mut out = vec![LinearForm::zero(vars); self.k];
        let coeffs = std::iter::once(&r.a_coefficient).chain(&r.b_coords);
        for (coeff, vector) in coeffs.zip(&basis) {
            for (slot, entry) in out.iter_mut().zip(vector) {
                *slot = slot.try_add(&coeff.scale(entry))?;
            }
        }
        Ok(Weight(out))
    }

    /// `ϖ_{i1}`-coefficient of `ρ_i = ρ|_{𝔞_i}`.
    pub fn rho_i<S: Scalar>(&self, p: ParabolicId) -> S {
        match p {
            ParabolicId::P1 => S::from_int(self.n) * S::half(),
            ParabolicId::P2 => S::from_int(self.n - 1) * S::half(),
        }
    }

    pub fn dim_nilradical(&self, p: ParabolicId) -> usize {
        match p {
            ParabolicId::P1 => self.n as usize,
            ParabolicId::P2 => (2 * self.n - 3) as usize,
        }
    }

    /// `|W^P|` as predicted by the closed formulas.
    pub fn coset_count(&self, p: ParabolicId) -> usize {
        let n = self.n as usize;
        match (self.parity, p) {
            (Parity::Odd, ParabolicId::P1) => n + 1,
            (Parity::Even, ParabolicId::P1) => n + 2,
            (Parity::Odd, ParabolicId::P2) => (n + 1) * (n - 1) / 2,
            (Parity::Even, ParabolicId::P2) => (n + 2) * n / 2,
        }
    }

    pub fn levi_list(&self, p: ParabolicId) -> Vec<LeviSubgroup> {
        let k = self.k;
        match (self.parity, p) {
            (Parity::Odd, ParabolicId::P1) => {
                let mut out: Vec<_> = (0..=k - 2)
                    .map(|i| {
                        LeviSubgroup::new(
                            i,
                            vec![
                                LeviFactor::Torus { power: i },
                                LeviFactor::Indefinite { p: 2 * (k - i - 1), q: 1 },
                            ],
                        )
                    })
                    .collect();
                out.push(LeviSubgroup::new(k - 1, vec![LeviFactor::Torus { power: k - 1 }]));
                out
            }
            (Parity::Even, ParabolicId::P1) => (0..=k - 2)
                .map(|i| {
                    LeviSubgroup::new(
                        i,
                        vec![
                            LeviFactor::Torus { power: i },
                            LeviFactor::Indefinite { p: 2 * k - 2 * i - 3, q: 1 },
                        ],
                    )
                })
                .collect(),
            (_, ParabolicId::P2) => vec![
                LeviSubgroup::new(
                    0,
                    vec![LeviFactor::Sl2, LeviFactor::Compact { m: (self.n - 2) as usize }],
                ),
                LeviSubgroup::new(k - 1, vec![LeviFactor::Torus { power: k - 1 }]),
            ],
        }
    }

    /// Degrees of the cuspidal cohomology of the Levi factor at regular weight.
    pub fn cuspidal_degrees(&self, p: ParabolicId) -> BTreeSet<usize> {
        match (self.parity, p) {
            (Parity::Odd, ParabolicId::P1) => BTreeSet::from([self.k - 1]),
            (Parity::Even, ParabolicId::P1) => BTreeSet::from([self.k - 2, self.k - 1]),
            (_, ParabolicId::P2) => BTreeSet::from([1]),
        }
    }

    /// Name of the cohomological representation type.
    pub fn pi_label(&self, p: ParabolicId) -> &'static str {
        match (self.parity, p) {
            (Parity::Even, ParabolicId::P1) => "π_{k−2}(μ)",
            _ => "π_{k−1}(μ)",
        }
    }

    pub fn vanishing_bounds(&self) -> VanishingBounds {
        VanishingBounds {
            l0: 0,
            q0: self.n,
            vcd: 2 * self.n - 2,
        }
    }
}
