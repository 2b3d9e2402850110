//! Self-checks over a range of `n`: the orbit algorithm against brute force,
//! inversion-set sizes, the back-or-forth alternative, coset counts,
//! palindromic length counts, restriction recombination and the antipodal
//! sign flip of the evaluation points.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::eisenstein::evaluation_point;
use crate::forms::LinearForm;
use crate::hasse::HasseDiagram;
use crate::rootsys::{RootDatum, Weight};
use crate::so_n2::{group_spec, GroupSpec, ParabolicId};
use crate::weyl::{enumerate_group, inversion_set, minimal_reps_bruteforce, word_action_matrix, GroupElement, WeylWord};
use crate::Rational;

/// Largest rank for the brute-force comparison.
pub const ORACLE_RANK: usize = 6;
/// Largest rank for the back-or-forth check over the whole group.
pub const FULL_GROUP_RANK: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Oracle,
    InversionLength,
    BackOrForth,
    Counts,
    Palindromic,
    Recombination,
    Antipodal,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Oracle,
        Check::InversionLength,
        Check::BackOrForth,
        Check::Counts,
        Check::Palindromic,
        Check::Recombination,
        Check::Antipodal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::InversionLength => "inversions",
            Check::BackOrForth => "back-forth",
            Check::Counts => "counts",
            Check::Palindromic => "palindromic",
            Check::Recombination => "recombine",
            Check::Antipodal => "antipodal",
        }
    }
}

/// Deliberate corruption of the algorithm output, to show the harness bites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Forget the last discovered node.
    DropLastNode,
    /// Replace the longest word by its last letter removed.
    TruncateLongestWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub n: i64,
    pub check: Check,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|r| matches!(r.outcome, Outcome::Fail(_)))
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| matches!(r.outcome, Outcome::Fail(_)))
    }

    pub fn skipped(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| matches!(r.outcome, Outcome::Skipped(_)))
    }

    /// One row per `n`, one column per check.
    pub fn matrix(&self) -> String {
        let mut ns: Vec<i64> = self.results.iter().map(|r| r.n).collect();
        ns.dedup();
        let mut out = format!("{:>4}", "n");
        for c in Check::ALL {
            let _ = write!(out, " {:>12}", c.name());
        }
        out.push('\n');
        for n in ns {
            let _ = write!(out, "{n:>4}");
            for c in Check::ALL {
                let cell = self
                    .results
                    .iter()
                    .find(|r| r.n == n && r.check == c)
                    .map_or("-", |r| match r.outcome {
                        Outcome::Pass => "pass",
                        Outcome::Fail(_) => "FAIL",
                        Outcome::Skipped(_) => "skip",
                    });
                let _ = write!(out, " {cell:>12}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.matrix())?;
        for r in self.skipped() {
            if let Outcome::Skipped(why) = &r.outcome {
                writeln!(f, "skipped n={} {}: {why}", r.n, r.check.name())?;
            }
        }
        if let Some(r) = self.first_failure() {
            if let Outcome::Fail(why) = &r.outcome {
                writeln!(f, "first failure n={} {}: {why}", r.n, r.check.name())?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_min: i64,
    pub n_max: i64,
    pub mutation: Option<Mutation>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n_min: 5,
            n_max: 11,
            mutation: None,
        }
    }
}

fn mutate(h: &HasseDiagram, m: Option<Mutation>) -> Vec<(WeylWord, usize)> {
    let mut words: Vec<(WeylWord, usize)> = h.nodes().iter().map(|n| (n.word.clone(), n.length)).collect();
    match m {
        None => {}
        Some(Mutation::DropLastNode) => {
            words.pop();
        }
        Some(Mutation::TruncateLongestWord) => {
            if let Some(last) = words.iter_mut().max_by_key(|(w, _)| w.len()) {
                let mut letters = last.0.letters().to_vec();
                letters.pop();
                last.0 = WeylWord::new(letters);
            }
        }
    }
    words
}

type Outcomes = Vec<(Check, Outcome)>;

fn fail(msg: String) -> Outcome {
    Outcome::Fail(msg)
}

fn combine(results: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut skipped = None;
    for r in results {
        match r {
            Outcome::Fail(_) => return r,
            Outcome::Skipped(_) => skipped = Some(r),
            Outcome::Pass => {}
        }
    }
    skipped.unwrap_or(Outcome::Pass)
}

fn oracle(g: &GroupSpec, p: ParabolicId, words: &[(WeylWord, usize)]) -> Outcome {
    let d = g.datum();
    if d.rank() > ORACLE_RANK {
        return Outcome::Skipped(format!("rank {} above oracle guard {ORACLE_RANK}", d.rank()));
    }
    let oracle = match minimal_reps_bruteforce(d, &g.crossed_set(p)) {
        Ok(v) => v,
        Err(e) => return fail(e.to_string()),
    };
    let mine: BTreeSet<GroupElement> = words
        .iter()
        .filter_map(|(w, _)| word_action_matrix(d, w).ok())
        .collect();
    let theirs: BTreeSet<GroupElement> = oracle.iter().map(|(g, _)| g.clone()).collect();
    if mine == theirs && mine.len() == words.len() {
        return Outcome::Pass;
    }
    let missing = oracle.iter().find(|(m, _)| !mine.contains(m));
    match missing {
        Some((_, w)) => fail(format!("{p}: {w} is a minimal representative missing from the diagram")),
        None => fail(format!("{p}: diagram has {} words, brute force {}", words.len(), theirs.len())),
    }
}

/// `w⁻¹` on the root lattice in simple-root coordinates, column by column.
fn inverse_on_roots(d: &RootDatum, w: &WeylWord) -> Vec<Vec<i64>> {
    let k = d.rank();
    (0..k)
        .map(|j| {
            let mut v = vec![0; k];
            v[j] = 1;
            for &l in w.letters() {
                d.reflect_root(l, &mut v);
            }
            v
        })
        .collect()
}

fn inversion_length(g: &GroupSpec, p: ParabolicId, words: &[(WeylWord, usize)]) -> Outcome {
    let d = g.datum();
    let roots = match d.positive_roots() {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    for (w, length) in words {
        let cols = inverse_on_roots(d, w);
        let count = roots
            .iter()
            .filter(|r| {
                let mut image = vec![0i64; d.rank()];
                for (j, &n) in r.simple.iter().enumerate() {
                    if n != 0 {
                        for (slot, c) in image.iter_mut().zip(&cols[j]) {
                            *slot += n * c;
                        }
                    }
                }
                image.iter().all(|&x| x <= 0)
            })
            .count();
        if count != *length || w.len() != *length {
            return fail(format!("{p}: |Φ_w| = {count} but l(w) = {length} for {w}"));
        }
    }
    Outcome::Pass
}

fn back_or_forth(d: &RootDatum, cache: &mut HashMap<RootDatum, Outcome>) -> Outcome {
    if d.rank() > FULL_GROUP_RANK {
        return Outcome::Skipped(format!("rank {} above full-group guard {FULL_GROUP_RANK}", d.rank()));
    }
    if let Some(o) = cache.get(d) {
        return o.clone();
    }
    let outcome = (|| {
        let all = enumerate_group(d).map_err(|e| e.to_string())?;
        let lengths: HashMap<&GroupElement, usize> = all.iter().map(|(g, w)| (g, w.len())).collect();
        for (g, w) in &all {
            let inv: Vec<Vec<i64>> = inversion_set(d, w)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|r| r.simple)
                .collect();
            if inv.len() != w.len() {
                return Err(format!("|Φ_w| ≠ l(w) for {w}"));
            }
            for j in 1..=d.rank() {
                let s = GroupElement::reflection(d, j).map_err(|e| e.to_string())?;
                let left = s.mul(g);
                let mut unit = vec![0; d.rank()];
                unit[j - 1] = 1;
                let expected = if inv.contains(&unit) { w.len() - 1 } else { w.len() + 1 };
                if lengths[&left] != expected {
                    return Err(format!("l(s{j}·{w}) = {} but expected {expected}", lengths[&left]));
                }
            }
        }
        Ok(())
    })();
    let outcome = match outcome {
        Ok(()) => Outcome::Pass,
        Err(msg) => fail(msg),
    };
    cache.insert(d.clone(), outcome.clone());
    outcome
}

fn counts(g: &GroupSpec, p: ParabolicId, words: &[(WeylWord, usize)]) -> Outcome {
    let expected = g.coset_count(p);
    if words.len() != expected {
        return fail(format!("{p}: |W^P| = {} but the closed formula gives {expected}", words.len()));
    }
    let top = words.iter().map(|(_, l)| *l).max().unwrap_or(0);
    if top != g.dim_nilradical(p) {
        return fail(format!("{p}: longest word has length {top}, dim N = {}", g.dim_nilradical(p)));
    }
    Outcome::Pass
}

fn palindromic(p: ParabolicId, words: &[(WeylWord, usize)]) -> Outcome {
    let mut hist = std::collections::BTreeMap::new();
    for (_, l) in words {
        *hist.entry(*l).or_insert(0usize) += 1;
    }
    let top = hist.keys().next_back().copied().unwrap_or(0);
    for l in 0..=top {
        let a = hist.get(&l).copied().unwrap_or(0);
        let b = hist.get(&(top - l)).copied().unwrap_or(0);
        if a != b {
            return fail(format!("{p}: N({l}) = {a} but N({}) = {b}", top - l));
        }
    }
    if hist.get(&top) != Some(&1) {
        return fail(format!("{p}: {} elements of maximal length", hist.get(&top).copied().unwrap_or(0)));
    }
    Outcome::Pass
}

fn recombination(g: &GroupSpec, p: ParabolicId, h: &HasseDiagram) -> Outcome {
    let lambda = Weight::<LinearForm<Rational>>::symbolic(g.k());
    let rho = g.datum().rho().to_forms::<Rational>(g.k());
    for node in h.nodes() {
        let shifted = crate::weyl::apply_word(g.datum(), &node.word, &lambda.try_add(&rho).expect("same rank"))
            .and_then(|x| x.try_sub(&rho));
        let Ok(mu) = shifted else {
            return fail(format!("{p}: cannot evaluate {}", node.word));
        };
        let back = g.restrict(p, &mu).and_then(|r| g.recombine(p, &r));
        if back.as_ref() != Ok(&mu) {
            return fail(format!("{p}: recombination differs for μ_w with w = {}", node.word));
        }
    }
    Outcome::Pass
}

fn antipodal(g: &GroupSpec, p: ParabolicId, h: &HasseDiagram) -> Outcome {
    let lambda = Weight::<LinearForm<Rational>>::symbolic(g.k());
    let first = evaluation_point(g, p, &WeylWord::identity(), &lambda);
    let last = evaluation_point(g, p, &h.longest().word, &lambda);
    match (first, last) {
        (Ok(a), Ok(b)) if b.normalized == -a.normalized.clone() => Outcome::Pass,
        (Ok(a), Ok(b)) => fail(format!("{p}: a(w_max) = {} but a(1) = {}", b.normalized, a.normalized)),
        (Err(e), _) | (_, Err(e)) => fail(e.to_string()),
    }
}

/// Runs every check for one `n`.
pub fn verify_n(n: i64, mutation: Option<Mutation>, cache: &mut HashMap<RootDatum, Outcome>) -> Outcomes {
    let g = match group_spec(n) {
        Ok(g) => g,
        Err(e) => return Check::ALL.iter().map(|&c| (c, fail(e.to_string()))).collect(),
    };
    let diagrams: Vec<(ParabolicId, HasseDiagram)> = ParabolicId::ALL.iter().map(|&p| (p, g.hasse(p))).collect();
    let words: Vec<Vec<(WeylWord, usize)>> = diagrams.iter().map(|(_, h)| mutate(h, mutation)).collect();
    let per = |f: &dyn Fn(ParabolicId, &HasseDiagram, &[(WeylWord, usize)]) -> Outcome| {
        combine(diagrams.iter().zip(&words).map(|((p, h), w)| f(*p, h, w)))
    };
    vec![
        (Check::Oracle, per(&|p, _, w| oracle(&g, p, w))),
        (Check::InversionLength, per(&|p, _, w| inversion_length(&g, p, w))),
        (Check::BackOrForth, back_or_forth(g.datum(), cache)),
        (Check::Counts, per(&|p, _, w| counts(&g, p, w))),
        (Check::Palindromic, per(&|p, _, w| palindromic(p, w))),
        (Check::Recombination, per(&|p, h, _| recombination(&g, p, h))),
        (Check::Antipodal, per(&|p, h, _| antipodal(&g, p, h))),
    ]
}

pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut cache = HashMap::new();
    let mut report = VerifyReport::default();
    for n in opts.n_min..=opts.n_max {
        for (check, outcome) in verify_n(n, opts.mutation, &mut cache) {
            report.results.push(CheckResult { n, check, outcome });
        }
    }
    report
}
