//! Words in the simple reflections, their action on weights, inversion sets,
//! and a brute-force enumeration of the whole group for small ranks.
//!
//! A word `s_{i1}·s_{i2}·…·s_{im}` denotes the product in that order, so the
//! rightmost letter acts first on a weight.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootDatum, RootKind, Weight};
use crate::scalar::Coord;

/// Largest rank accepted by [`enumerate_group`] and friends.
pub const RANK_GUARD: usize = 7;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `self · s_j`
    pub fn then(&self, j: usize) -> Self {
        let mut letters = self.0.clone();
        letters.push(j);
        Self(letters)
    }

    pub fn validate(&self, d: &RootDatum) -> Result<()> {
        self.0.iter().try_for_each(|&j| d.check_letter(j))
    }

    /// Parses `s2·s1·s3`, `s2s1s3`, `2,1,3` or `1` (the identity).
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "word",
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        if t.is_empty() || t == "1" || t == "e" {
            return Ok(Self::identity());
        }
        let cleaned: String = t
            .chars()
            .map(|c| match c {
                '·' | '*' | ',' | ' ' | '_' => ' ',
                c => c,
            })
            .collect();
        let mut letters = Vec::new();
        if cleaned.contains('s') {
            for part in cleaned.split('s').map(str::trim) {
                if part.is_empty() {
                    continue;
                }
                letters.push(part.parse::<usize>().map_err(|_| err("expected s<index>"))?);
            }
        } else {
            for part in cleaned.split_whitespace() {
                letters.push(part.parse::<usize>().map_err(|_| err("expected an index"))?);
            }
        }
        if letters.contains(&0) {
            return Err(err("indices start at 1"));
        }
        Ok(Self(letters))
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "s{j}")?;
        }
        Ok(())
    }
}

/// `w(x)` for the group element spelled by `w`.
pub fn apply_word<T: Coord>(d: &RootDatum, w: &WeylWord, x: &Weight<T>) -> Result<Weight<T>> {
    w.validate(d)?;
    if x.rank() != d.rank() {
        return Err(Error::DimensionMismatch {
            left: d.rank(),
            right: x.rank(),
        });
    }
    let mut out = x.clone();
    for &j in w.0.iter().rev() {
        d.reflect_in_place(j, &mut out.0);
    }
    Ok(out)
}

/// `w(β)` for a root in simple-root coordinates.
pub(crate) fn apply_word_to_root(d: &RootDatum, w: &[usize], simple: &mut [i64]) {
    for &j in w.iter().rev() {
        d.reflect_root(j, simple);
    }
}

/// Integer matrix `M` acting on ϖ-coordinates as `x ↦ M·x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rank: usize,
    entries: Vec<i64>,
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        Self { rank, entries }
    }

    pub fn reflection(d: &RootDatum, j: usize) -> Result<Self> {
        d.check_letter(j)?;
        let k = d.rank();
        let mut m = Self::identity(k);
        for i in 0..k {
            m.entries[i * k + (j - 1)] -= d.pairing(j, i + 1);
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.rank + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.rank;
        let mut entries = vec![0; k * k];
        for i in 0..k {
            for l in 0..k {
                let a = self.entries[i * k + l];
                if a == 0 {
                    continue;
                }
                for j in 0..k {
                    entries[i * k + j] += a * other.entries[l * k + j];
                }
            }
        }
        Self { rank: k, entries }
    }

    pub fn apply(&self, x: &Weight<i64>) -> Weight<i64> {
        let k = self.rank;
        Weight(
            (0..k)
                .map(|i| (0..k).map(|j| self.entries[i * k + j] * x.0[j]).sum())
                .collect(),
        )
    }
}

pub fn word_action_matrix(d: &RootDatum, w: &WeylWord) -> Result<GroupElement> {
    let mut m = GroupElement::identity(d.rank());
    for &j in &w.0 {
        m = m.mul(&GroupElement::reflection(d, j)?);
    }
    Ok(m)
}

/// `Φ_w = {β > 0 : w⁻¹(β) < 0}`, in the order of [`RootDatum::positive_roots`].
pub fn inversion_set(d: &RootDatum, w: &WeylWord) -> Result<Vec<Root>> {
    if d.kind() == RootKind::Custom {
        return Err(Error::UnsupportedKind { op: "inversion_set" });
    }
    w.validate(d)?;
    let inverse = w.inverse();
    Ok(d.positive_roots()?
        .into_iter()
        .filter(|r| {
            let mut s = r.simple.clone();
            apply_word_to_root(d, &inverse.0, &mut s);
            s.iter().all(|&n| n <= 0)
        })
        .collect())
}

/// `|W|` for the supported series, as a decimal string.
pub fn group_order_estimate(d: &RootDatum) -> String {
    let k = d.rank() as u32;
    let fact: u128 = (1..=k as u128).product();
    match d.kind() {
        RootKind::B => (fact << k).to_string(),
        RootKind::D => (fact << (k - 1)).to_string(),
        RootKind::Custom => "unknown".to_string(),
    }
}

fn check_guard(d: &RootDatum) -> Result<()> {
    if d.rank() > RANK_GUARD {
        return Err(Error::RankGuard {
            rank: d.rank(),
            guard: RANK_GUARD,
            estimate: group_order_estimate(d),
        });
    }
    Ok(())
}

/// Every element of `W` with a reduced word, sorted by length and then by
/// word. The word is the lexicographically smallest reduced one.
pub fn enumerate_group(d: &RootDatum) -> Result<Vec<(GroupElement, WeylWord)>> {
    check_guard(d)?;
    let gens = (1..=d.rank())
        .map(|j| GroupElement::reflection(d, j))
        .collect::<Result<Vec<_>>>()?;
    let id = GroupElement::identity(d.rank());
    let mut seen: HashMap<GroupElement, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut out = vec![(id, WeylWord::identity())];
    let mut cursor = 0;
    while cursor < out.len() {
        let (g, w) = out[cursor].clone();
        for (j, s) in gens.iter().enumerate() {
            let h = g.mul(s);
            if seen.insert(h.clone(), ()).is_none() {
                out.push((h, w.then(j + 1)));
            }
        }
        cursor += 1;
    }
    Ok(out)
}

/// `W^P = {w : w⁻¹(α_j) > 0 for every uncrossed j}`, by testing every
/// element of the group.
pub fn minimal_reps_bruteforce(
    d: &RootDatum,
    crossed: &BTreeSet<usize>,
) -> Result<Vec<(GroupElement, WeylWord)>> {
    for &j in crossed {
        d.check_letter(j)?;
    }
    let levi: Vec<usize> = (1..=d.rank()).filter(|j| !crossed.contains(j)).collect();
    Ok(enumerate_group(d)?
        .into_iter()
        .filter(|(_, w)| {
            let inverse = w.inverse();
            levi.iter().all(|&j| {
                let mut s = vec![0; d.rank()];
                s[j - 1] = 1;
                apply_word_to_root(d, &inverse.0, &mut s);
                s.iter().all(|&n| n >= 0)
            })
        })
        .collect())
}

/// Length of every element of `W`.
pub fn length_table(d: &RootDatum) -> Result<HashMap<GroupElement, usize>> {
    Ok(enumerate_group(d)?
        .into_iter()
        .map(|(g, w)| (g, w.len()))
        .collect())
}

/// Queue-based orbit of a weight under the simple reflections.
pub fn orbit(d: &RootDatum, x: &Weight<i64>) -> Vec<Weight<i64>> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    let mut out = vec![x.clone()];
    while let Some(y) = queue.pop_front() {
        for j in 1..=d.rank() {
            let mut z = y.clone();
            d.reflect_in_place(j, &mut z.0);
            if seen.insert(z.clone()) {
                out.push(z.clone());
                queue.push_back(z);
            }
        }
    }
    out
}
