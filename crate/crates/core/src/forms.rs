//! Affine-linear forms `c_0 + Σ c_i λ_i` in the highest-weight variables.
//!
//! Forms carry the size `k` of their variable universe so that adding forms
//! from different ranks is caught. Coefficients are stored sparsely in a
//! `BTreeMap`, so iteration and rendering are always in ascending variable
//! order and a stored coefficient is never zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Coord, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm<S: Scalar> {
    vars: usize,
    constant: S,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> LinearForm<S> {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            constant: S::zero(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: S) -> Self {
        Self {
            vars,
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_int(vars: usize, c: i64) -> Self {
        Self::constant(vars, S::from_int(c))
    }

    /// The form `λ_index`.
    pub fn var(vars: usize, index: usize) -> Result<Self> {
        Self::from_terms(vars, S::zero(), [(index, S::one())])
    }

    /// Builds a form from a constant and `(index, coefficient)` pairs; repeated
    /// indices accumulate.
    pub fn from_terms<I>(vars: usize, constant: S, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, S)>,
    {
        let mut form = Self::constant(vars, constant);
        for (index, c) in terms {
            if index == 0 || index > vars {
                return Err(Error::VariableOutOfRange { index, vars });
            }
            form.accumulate(index, c);
        }
        Ok(form)
    }

    fn accumulate(&mut self, index: usize, c: S) {
        let entry = self.coeffs.entry(index).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn constant_term(&self) -> &S {
        &self.constant
    }

    pub fn coeff(&self, index: usize) -> S {
        self.coeffs.get(&index).cloned().unwrap_or_else(S::zero)
    }

    /// Non-zero terms in ascending variable order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<&S> {
        self.is_constant().then_some(&self.constant)
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.constant = out.constant.clone() + other.constant.clone();
        for (i, c) in &other.coeffs {
            out.accumulate(*i, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            constant: self.constant.clone() * c.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, v)| (*i, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, assignment: &[S]) -> Result<S> {
        if assignment.len() != self.vars {
            return Err(Error::DimensionMismatch {
                left: self.vars,
                right: assignment.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .fold(self.constant.clone(), |acc, (i, c)| {
                acc + c.clone() * assignment[i - 1].clone()
            }))
    }

    /// Same form viewed in a larger (or equal) variable universe.
    pub fn widen(&self, vars: usize) -> Result<Self> {
        match self.coeffs.keys().next_back() {
            Some(&max) if max > vars => Err(Error::VariableOutOfRange { index: max, vars }),
            _ => Ok(Self {
                vars,
                ..self.clone()
            }),
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.vars,
                right: other.vars,
            })
        }
    }
}

impl<S: Scalar + FromStr> LinearForm<S> {
    /// Parses the rendering produced by `Display`, e.g. `-(2/5)λ1-λ2+3`.
    ///
    /// `l` is accepted as an ASCII spelling of `λ`.
    pub fn parse(text: &str, vars: usize) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "linear form",
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == 'l' { 'λ' } else { c })
            .collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }

        let mut form = Self::zero(vars);
        for (negative, body) in split_terms(&compact).ok_or_else(|| err("unbalanced parentheses"))? {
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff_text, index) = match body.split_once('λ') {
                Some((c, idx)) => {
                    let index: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                    (c, Some(index))
                }
                None => (body, None),
            };
            let coeff_text = coeff_text
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(coeff_text);
            let mut value = match (coeff_text.is_empty(), index) {
                (true, Some(_)) => S::one(),
                (true, None) => return Err(err("missing constant")),
                (false, _) => coeff_text
                    .parse::<S>()
                    .map_err(|_| err("bad coefficient"))?,
            };
            if negative {
                value = -value;
            }
            match index {
                Some(i) if i == 0 || i > vars => return Err(Error::VariableOutOfRange { index: i, vars }),
                Some(i) => form.accumulate(i, value),
                None => form.constant = form.constant.clone() + value,
            }
        }
        Ok(form)
    }
}

/// Splits at top-level `+`/`-` signs into `(negative, body)` pieces.
fn split_terms(s: &str) -> Option<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (pos, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            '+' | '-' if depth == 0 => {
                if pos > start {
                    out.push((negative, &s[start..pos]));
                } else if pos != 0 {
                    // sign directly after a sign
                    out.push((negative, ""));
                }
                negative = ch == '-';
                start = pos + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    out.push((negative, &s[start..]));
    Some(out)
}

impl<S: Scalar> fmt::Display for LinearForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let sign = |f: &mut fmt::Formatter<'_>, negative: bool, first: &mut bool| {
            let res = match (negative, *first) {
                (true, _) => f.write_str("-"),
                (false, false) => f.write_str("+"),
                (false, true) => Ok(()),
            };
            *first = false;
            res
        };
        for (i, c) in &self.coeffs {
            sign(f, c.is_negative(), &mut first)?;
            let abs = c.abs();
            if abs.is_integral() && !abs.is_one() {
                write!(f, "{abs}")?;
            } else if !abs.is_integral() {
                write!(f, "({abs})")?;
            }
            write!(f, "λ{i}")?;
        }
        if !self.constant.is_zero() {
            sign(f, self.constant.is_negative(), &mut first)?;
            write!(f, "{}", self.constant.abs())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> Serialize for LinearForm<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        serializer.collect_str(self)
    }
}

impl<S: Scalar> Neg for &LinearForm<S> {
    type Output = LinearForm<S>;

    fn neg(self) -> LinearForm<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Neg for LinearForm<S> {
    type Output = LinearForm<S>;

    fn neg(self) -> LinearForm<S> {
        -&self
    }
}

/// Panics when the variable universes differ; use [`LinearForm::try_add`] to
/// get an error instead.
impl<S: Scalar> Add for &LinearForm<S> {
    type Output = LinearForm<S>;

    fn add(self, rhs: Self) -> LinearForm<S> {
        self.try_add(rhs).expect("linear forms over different variable sets")
    }
}

impl<S: Scalar> Add for LinearForm<S> {
    type Output = LinearForm<S>;

    fn add(self, rhs: Self) -> LinearForm<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &LinearForm<S> {
    type Output = LinearForm<S>;

    fn sub(self, rhs: Self) -> LinearForm<S> {
        self.try_sub(rhs).expect("linear forms over different variable sets")
    }
}

impl<S: Scalar> Sub for LinearForm<S> {
    type Output = LinearForm<S>;

    fn sub(self, rhs: Self) -> LinearForm<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Coord for LinearForm<S> {
    fn is_zero_coord(&self) -> bool {
        self.is_zero()
    }

    fn add_scaled(&self, other: &Self, m: i64) -> Self {
        self + &other.scale(&S::from_int(m))
    }
}
