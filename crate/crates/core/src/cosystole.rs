//! Weighted cosystole `sys*` and 3-cosystole `sys3*` of binary matroids.
//!
//! For a weight function `mu` the weighted invariants are normalised by
//! `mu(E)`. The starred invariants maximise over the probability simplex by
//! linear programming and come with a lower certificate (optimal weights) and
//! an upper certificate (dual multipliers averaging cocircuits or triples).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::exactnum::Rational;
use crate::lp::{self, LinearProgram, LpOutcome, Relation, VarKind};
use crate::matroid::{BinaryMatroid, ElementSet, MatroidError};
use crate::par::{self, ExecMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosystoleError {
    #[error("matroid has no cocircuits")]
    NoCocircuits,
    #[error("no triple of cocircuits has the non-inclusion property")]
    NoAdmissibleTriple,
    #[error("total weight is zero")]
    ZeroTotalWeight,
    #[error("negative weight {value} on element {label:?}")]
    NegativeWeight { label: String, value: Rational },
    #[error("weight vector has {got} entries, ground set has {expected}")]
    GroundSetMismatch { expected: usize, got: usize },
    #[error("not an admissible triple of cocircuits: {0}")]
    NotAdmissible(String),
    #[error("multipliers must be non-negative and sum to 1, got sum {0}")]
    NotNormalized(Rational),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("linear program ended without an optimum")]
    LpFailure,
}

/// Non-negative weights indexed by element position, with positive total.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self, CosystoleError> {
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| w.is_negative()) {
            return Err(CosystoleError::NegativeWeight { label: i.to_string(), value: w.clone() });
        }
        if weights.iter().all(Rational::is_zero) {
            return Err(CosystoleError::ZeroTotalWeight);
        }
        Ok(WeightVector { weights })
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform weights need a nonempty ground set");
        let w = Rational::new(1, n as i64).expect("n > 0");
        WeightVector { weights: vec![w; n] }
    }

    /// Weights from `(label, value)` pairs; unlisted elements get 0.
    pub fn from_labels<S: AsRef<str>>(m: &BinaryMatroid, pairs: &[(S, Rational)]) -> Result<Self, CosystoleError> {
        let mut weights = vec![Rational::zero(); m.len()];
        for (label, value) in pairs {
            let i = m.index_of(label.as_ref())?;
            if value.is_negative() {
                return Err(CosystoleError::NegativeWeight { label: label.as_ref().to_string(), value: value.clone() });
            }
            weights[i] = value.clone();
        }
        WeightVector::new(weights)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Rescaled to total 1.
    pub fn normalized(&self) -> WeightVector {
        let t = self.total();
        WeightVector { weights: self.weights.iter().map(|w| w / &t).collect() }
    }

    pub fn scaled(&self, c: &Rational) -> Result<WeightVector, CosystoleError> {
        WeightVector::new(self.weights.iter().map(|w| w * c).collect())
    }

    pub fn labelled<'a>(&'a self, m: &'a BinaryMatroid) -> impl Iterator<Item = (&'a str, &'a Rational)> {
        m.labels().iter().map(String::as_str).zip(&self.weights)
    }

    fn check(&self, m: &BinaryMatroid) -> Result<(), CosystoleError> {
        if self.weights.len() == m.len() {
            Ok(())
        } else {
            Err(CosystoleError::GroundSetMismatch { expected: m.len(), got: self.weights.len() })
        }
    }

    /// Parses `<label> <p/q>` lines; `#` starts a comment.
    pub fn parse(m: &BinaryMatroid, text: &str) -> Result<Self, CosystoleError> {
        let mut pairs: Vec<(String, Rational)> = Vec::new();
        for (ln, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            pairs.push(parse_label_value(line, ln)?);
        }
        let mut seen = std::collections::HashSet::new();
        for (label, _) in &pairs {
            if !seen.insert(label.as_str()) {
                return Err(CosystoleError::Parse { line: 0, msg: format!("duplicate label {label:?}") });
            }
        }
        WeightVector::from_labels(m, &pairs)
    }

    pub fn to_text(&self, m: &BinaryMatroid) -> String {
        self.labelled(m).map(|(l, w)| format!("{l} {w}\n")).collect()
    }
}

fn parse_label_value(line: &str, ln: usize) -> Result<(String, Rational), CosystoleError> {
    let perr = |msg: String| CosystoleError::Parse { line: ln, msg };
    let mut parts = line.split_whitespace();
    let (Some(label), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(perr("expected `<label> <p/q>`".into()));
    };
    let value: Rational = value.parse().map_err(|e| perr(format!("{e}")))?;
    Ok((label.to_string(), value))
}

/// `mu(X)`.
pub fn weight_of(mu: &WeightVector, x: ElementSet) -> Rational {
    x.iter().filter(|&i| i < mu.len()).map(|i| &mu.weights[i]).sum()
}

/// [`weight_of`] with the ground set checked against `m`.
pub fn weight_of_checked(m: &BinaryMatroid, mu: &WeightVector, x: ElementSet) -> Result<Rational, CosystoleError> {
    mu.check(m)?;
    if !x.is_subset(m.ground_set()) {
        return Err(CosystoleError::GroundSetMismatch { expected: m.len(), got: 64 - x.0.leading_zeros() as usize });
    }
    Ok(weight_of(mu, x))
}

/// Three distinct cocircuit positions, ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleTriple(pub [usize; 3]);

impl AdmissibleTriple {
    pub fn sets(self, cocircuits: &[ElementSet]) -> [ElementSet; 3] {
        self.0.map(|i| cocircuits[i])
    }

    /// How many of the triple's cocircuits contain element `e`.
    pub fn multiplicity(self, cocircuits: &[ElementSet], e: usize) -> usize {
        self.sets(cocircuits).iter().filter(|c| c.contains(e)).count()
    }
}

/// Pairwise distinct, and no set is inside the union of the other two.
pub fn is_admissible(a: ElementSet, b: ElementSet, c: ElementSet) -> bool {
    a != b
        && b != c
        && a != c
        && !a.is_subset(b.union(c))
        && !b.is_subset(a.union(c))
        && !c.is_subset(a.union(b))
}

/// All admissible triples in lexicographic order of cocircuit positions.
pub fn admissible_triples(m: &BinaryMatroid) -> Vec<AdmissibleTriple> {
    admissible_triples_with(m, ExecMode::default())
}

pub fn admissible_triples_with(m: &BinaryMatroid, mode: ExecMode) -> Vec<AdmissibleTriple> {
    let cs = m.cocircuits();
    let n = cs.len();
    par::map(n, mode, |i| {
        let mut out = Vec::new();
        for j in i + 1..n {
            for k in j + 1..n {
                if is_admissible(cs[i], cs[j], cs[k]) {
                    out.push(AdmissibleTriple([i, j, k]));
                }
            }
        }
        out
    })
    .concat()
}

/// `min mu(C) / mu(E)` over cocircuits `C`.
pub fn sys_weighted(m: &BinaryMatroid, mu: &WeightVector) -> Result<Rational, CosystoleError> {
    mu.check(m)?;
    let total = mu.total();
    if total.is_zero() {
        return Err(CosystoleError::ZeroTotalWeight);
    }
    let min = m
        .cocircuits()
        .iter()
        .map(|&c| weight_of(mu, c))
        .min()
        .ok_or(CosystoleError::NoCocircuits)?;
    Ok(&min / &total)
}

/// `min (mu(C1) + mu(C2) + mu(C3)) / mu(E)` over admissible triples.
pub fn sys3_weighted(m: &BinaryMatroid, mu: &WeightVector) -> Result<Rational, CosystoleError> {
    let triples = admissible_triples(m);
    sys3_weighted_over(m, &triples, mu, ExecMode::default()).map(|(v, _)| v)
}

fn sys3_weighted_over(
    m: &BinaryMatroid,
    triples: &[AdmissibleTriple],
    mu: &WeightVector,
    mode: ExecMode,
) -> Result<(Rational, usize), CosystoleError> {
    mu.check(m)?;
    if m.cocircuits().is_empty() {
        return Err(CosystoleError::NoCocircuits);
    }
    let total = mu.total();
    if total.is_zero() {
        return Err(CosystoleError::ZeroTotalWeight);
    }
    let (min, at) = separate(m, triples, mu, mode).ok_or(CosystoleError::NoAdmissibleTriple)?;
    Ok((&min / &total, at))
}

/// The triple of least total weight, lowest position on ties.
fn separate(
    m: &BinaryMatroid,
    triples: &[AdmissibleTriple],
    mu: &WeightVector,
    mode: ExecMode,
) -> Option<(Rational, usize)> {
    let cw: Vec<Rational> = m.cocircuits().iter().map(|&c| weight_of(mu, c)).collect();
    par::argmin(triples.len(), mode, |t| {
        let [i, j, k] = triples[t].0;
        &(&cw[i] + &cw[j]) + &cw[k]
    })
}

/// An optimum of `sys*` or `sys3*` with both certificates. `K` identifies a
/// dual constraint: a cocircuit position or an [`AdmissibleTriple`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult<K> {
    pub value: Rational,
    pub optimal_weights: WeightVector,
    /// Non-zero multipliers only; they sum to 1.
    pub dual_multipliers: Vec<(K, Rational)>,
    pub active_constraints: usize,
}

pub type SysResult = InvariantResult<usize>;
pub type Sys3Result = InvariantResult<AdmissibleTriple>;

/// `max t` s.t. `sum mu = 1`, `mu >= 0`, `t <= a_k . mu` for each row `a_k`.
fn max_min_program(n: usize, rows: &[Vec<i64>]) -> LinearProgram {
    let mut kinds = vec![VarKind::NonNegative; n];
    kinds.push(VarKind::Free);
    let mut objective = vec![Rational::zero(); n];
    objective.push(Rational::one());
    let mut p = LinearProgram::new(objective, kinds);
    let mut simplex = vec![Rational::one(); n];
    simplex.push(Rational::zero());
    p.add_constraint(simplex, Relation::Eq, Rational::one());
    for a in rows {
        let mut coeffs: Vec<Rational> = a.iter().map(|&x| Rational::from(-x)).collect();
        coeffs.push(Rational::one());
        p.add_constraint(coeffs, Relation::Le, Rational::zero());
    }
    p
}

struct MaxMinSolution {
    value: Rational,
    weights: Vec<Rational>,
    /// One multiplier per row of the program, excluding the simplex row.
    multipliers: Vec<Rational>,
}

fn solve_max_min(n: usize, rows: &[Vec<i64>]) -> Result<MaxMinSolution, CosystoleError> {
    let p = max_min_program(n, rows);
    match lp::solve(&p) {
        LpOutcome::Optimal { value, mut primal, dual } => {
            primal.truncate(n);
            Ok(MaxMinSolution { value, weights: primal, multipliers: dual[1..].to_vec() })
        }
        _ => Err(CosystoleError::LpFailure),
    }
}

fn indicator(c: ElementSet, n: usize) -> Vec<i64> {
    (0..n).map(|e| c.contains(e) as i64).collect()
}

fn triple_row(cs: &[ElementSet], t: AdmissibleTriple, n: usize) -> Vec<i64> {
    (0..n).map(|e| t.multiplicity(cs, e) as i64).collect()
}

/// `sys*(M)`: one LP with a row per cocircuit.
pub fn sys_star(m: &BinaryMatroid) -> Result<SysResult, CosystoleError> {
    let cs = m.cocircuits();
    if cs.is_empty() {
        return Err(CosystoleError::NoCocircuits);
    }
    let n = m.len();
    let rows: Vec<Vec<i64>> = cs.iter().map(|&c| indicator(c, n)).collect();
    let sol = solve_max_min(n, &rows)?;
    Ok(InvariantResult {
        value: sol.value,
        optimal_weights: WeightVector::new(sol.weights).map_err(|_| CosystoleError::LpFailure)?,
        dual_multipliers: sol.multipliers.into_iter().enumerate().filter(|(_, y)| !y.is_zero()).collect(),
        active_constraints: rows.len(),
    })
}

/// `sys3*(M)` by constraint generation.
pub fn sys3_star(m: &BinaryMatroid) -> Result<Sys3Result, CosystoleError> {
    sys3_star_with(m, ExecMode::default())
}

pub fn sys3_star_with(m: &BinaryMatroid, mode: ExecMode) -> Result<Sys3Result, CosystoleError> {
    if m.cocircuits().is_empty() {
        return Err(CosystoleError::NoCocircuits);
    }
    let triples = admissible_triples_with(m, mode);
    sys3_star_over(m, &triples, mode)
}

/// Constraint generation over a precomputed triple list.
pub fn sys3_star_over(
    m: &BinaryMatroid,
    triples: &[AdmissibleTriple],
    mode: ExecMode,
) -> Result<Sys3Result, CosystoleError> {
    let cs = m.cocircuits();
    let n = m.len();
    if triples.is_empty() {
        return Err(CosystoleError::NoAdmissibleTriple);
    }
    // Seed: least total cardinality.
    let (_, seed) = separate(m, triples, &WeightVector { weights: vec![Rational::one(); n] }, mode)
        .ok_or(CosystoleError::NoAdmissibleTriple)?;
    let mut active = vec![seed];
    let mut rows = vec![triple_row(cs, triples[seed], n)];
    loop {
        let sol = solve_max_min(n, &rows)?;
        let mu = WeightVector::new(sol.weights).map_err(|_| CosystoleError::LpFailure)?;
        let (true_min, at) = separate(m, triples, &mu, mode).ok_or(CosystoleError::NoAdmissibleTriple)?;
        if true_min >= sol.value {
            let mut dual: Vec<(AdmissibleTriple, Rational)> = active
                .iter()
                .zip(sol.multipliers)
                .filter(|(_, y)| !y.is_zero())
                .map(|(&t, y)| (triples[t], y))
                .collect();
            dual.sort_by_key(|d| d.0);
            return Ok(InvariantResult {
                value: sol.value,
                optimal_weights: mu,
                dual_multipliers: dual,
                active_constraints: active.len(),
            });
        }
        debug_assert!(!active.contains(&at), "separation returned an active triple");
        active.push(at);
        rows.push(triple_row(cs, triples[at], n));
    }
}

/// `sys3*(M)` from one LP over every admissible triple, solved in its dual
/// form `min s` s.t. `sum_T lambda_T a_T <= s` elementwise, `sum lambda = 1`.
/// The element rows' duals are the optimal weights.
pub fn sys3_star_whole_lp(m: &BinaryMatroid) -> Result<Sys3Result, CosystoleError> {
    let cs = m.cocircuits();
    if cs.is_empty() {
        return Err(CosystoleError::NoCocircuits);
    }
    let triples = admissible_triples(m);
    if triples.is_empty() {
        return Err(CosystoleError::NoAdmissibleTriple);
    }
    let n = m.len();
    let nt = triples.len();
    let mut kinds = vec![VarKind::NonNegative; nt];
    kinds.push(VarKind::Free);
    let mut objective = vec![Rational::zero(); nt];
    objective.push(-Rational::one());
    let mut p = LinearProgram::new(objective, kinds);
    for e in 0..n {
        let mut coeffs: Vec<Rational> = triples.iter().map(|t| Rational::from(t.multiplicity(cs, e))).collect();
        coeffs.push(-Rational::one());
        p.add_constraint(coeffs, Relation::Le, Rational::zero());
    }
    let mut simplex = vec![Rational::one(); nt];
    simplex.push(Rational::zero());
    p.add_constraint(simplex, Relation::Eq, Rational::one());
    let LpOutcome::Optimal { value, primal, dual } = lp::solve(&p) else {
        return Err(CosystoleError::LpFailure);
    };
    let dual_multipliers = triples
        .iter()
        .zip(&primal[..nt])
        .filter(|(_, l)| !l.is_zero())
        .map(|(&t, l)| (t, l.clone()))
        .collect();
    Ok(InvariantResult {
        value: -value,
        optimal_weights: WeightVector::new(dual[..n].to_vec()).map_err(|_| CosystoleError::LpFailure)?,
        dual_multipliers,
        active_constraints: nt,
    })
}

/// The full `sys3*` program over `triples` (variables `mu_e`, then `t`;
/// rows: the simplex equation, then one row per triple) together with the
/// optimal outcome that `r` claims for it, for [`lp::verify_certificates`].
pub fn sys3_full_program(
    m: &BinaryMatroid,
    triples: &[AdmissibleTriple],
    r: &Sys3Result,
) -> (LinearProgram, LpOutcome) {
    let cs = m.cocircuits();
    let n = m.len();
    let rows: Vec<Vec<i64>> = triples.iter().map(|&t| triple_row(cs, t, n)).collect();
    let multipliers: HashMap<AdmissibleTriple, &Rational> = r.dual_multipliers.iter().map(|(t, l)| (*t, l)).collect();
    let mut dual = vec![r.value.clone()];
    dual.extend(triples.iter().map(|t| multipliers.get(t).map_or_else(Rational::zero, |&l| l.clone())));
    full_outcome(n, &rows, r.value.clone(), r.optimal_weights.as_slice(), dual)
}

/// Like [`sys3_full_program`] for `sys*`, one row per cocircuit.
pub fn sys_full_program(m: &BinaryMatroid, r: &SysResult) -> (LinearProgram, LpOutcome) {
    let n = m.len();
    let rows: Vec<Vec<i64>> = m.cocircuits().iter().map(|&c| indicator(c, n)).collect();
    let mut dual = vec![r.value.clone()];
    dual.extend(std::iter::repeat_n(Rational::zero(), rows.len()));
    for (i, l) in &r.dual_multipliers {
        dual[1 + i] = l.clone();
    }
    full_outcome(n, &rows, r.value.clone(), r.optimal_weights.as_slice(), dual)
}

fn full_outcome(
    n: usize,
    rows: &[Vec<i64>],
    value: Rational,
    weights: &[Rational],
    dual: Vec<Rational>,
) -> (LinearProgram, LpOutcome) {
    let p = max_min_program(n, rows);
    let mut primal = weights.to_vec();
    primal.push(value.clone());
    (p, LpOutcome::Optimal { value, primal, dual })
}

/// True iff `sys3(M, mu) >= bound`.
pub fn check_lower_certificate(m: &BinaryMatroid, mu: &WeightVector, bound: &Rational) -> Result<bool, CosystoleError> {
    Ok(sys3_weighted(m, mu)? >= *bound)
}

/// True iff `sys(M, mu) >= bound`.
pub fn check_lower_certificate_sys(
    m: &BinaryMatroid,
    mu: &WeightVector,
    bound: &Rational,
) -> Result<bool, CosystoleError> {
    Ok(sys_weighted(m, mu)? >= *bound)
}

fn check_normalized<'a>(values: impl Iterator<Item = &'a Rational>) -> Result<(), CosystoleError> {
    let mut sum = Rational::zero();
    let mut negative = false;
    for v in values {
        negative |= v.is_negative();
        sum += v;
    }
    if negative || sum != Rational::one() {
        return Err(CosystoleError::NotNormalized(sum));
    }
    Ok(())
}

/// Weak-duality bound `max_e sum_T lambda_T * #{i : e in C_i}`, an upper
/// bound on `sys3*(M)`.
pub fn check_upper_certificate(
    m: &BinaryMatroid,
    lambda: &[(AdmissibleTriple, Rational)],
) -> Result<Rational, CosystoleError> {
    let cs = m.cocircuits();
    for (t, _) in lambda {
        let ok = t.0.iter().all(|&i| i < cs.len()) && {
            let [a, b, c] = t.sets(cs);
            is_admissible(a, b, c)
        };
        if !ok {
            return Err(CosystoleError::NotAdmissible(format!("{:?}", t.0)));
        }
    }
    check_normalized(lambda.iter().map(|(_, l)| l))?;
    let mut load = vec![Rational::zero(); m.len()];
    for (t, l) in lambda {
        for c in t.sets(cs) {
            for e in c.iter() {
                load[e] += l;
            }
        }
    }
    Ok(load.into_iter().max().unwrap_or_default())
}

/// `max_e sum_C lambda_C [e in C]`, an upper bound on `sys*(M)`.
pub fn check_upper_certificate_sys(m: &BinaryMatroid, lambda: &[(usize, Rational)]) -> Result<Rational, CosystoleError> {
    let cs = m.cocircuits();
    if let Some((i, _)) = lambda.iter().find(|(i, _)| *i >= cs.len()) {
        return Err(CosystoleError::NotAdmissible(format!("cocircuit {i}")));
    }
    check_normalized(lambda.iter().map(|(_, l)| l))?;
    let mut load = vec![Rational::zero(); m.len()];
    for (i, l) in lambda {
        for e in cs[*i].iter() {
            load[e] += l;
        }
    }
    Ok(load.into_iter().max().unwrap_or_default())
}

/// Which invariant a certificate is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    Sys,
    Sys3,
}

impl Invariant {
    pub fn json_name(self) -> &'static str {
        match self {
            Invariant::Sys => "sys_star",
            Invariant::Sys3 => "sys3_star",
        }
    }
}

/// A labelled, self-contained certificate: the weights prove `value` from
/// below and the dual terms prove it from above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub invariant: Invariant,
    pub value: Rational,
    pub weights: WeightVector,
    pub dual: Vec<(Vec<ElementSet>, Rational)>,
}

impl Certificate {
    pub fn from_sys3(m: &BinaryMatroid, r: &Sys3Result) -> Self {
        let cs = m.cocircuits();
        Certificate {
            invariant: Invariant::Sys3,
            value: r.value.clone(),
            weights: r.optimal_weights.clone(),
            dual: r.dual_multipliers.iter().map(|(t, l)| (t.sets(cs).to_vec(), l.clone())).collect(),
        }
    }

    pub fn from_sys(m: &BinaryMatroid, r: &SysResult) -> Self {
        let cs = m.cocircuits();
        Certificate {
            invariant: Invariant::Sys,
            value: r.value.clone(),
            weights: r.optimal_weights.clone(),
            dual: r.dual_multipliers.iter().map(|(i, l)| (vec![cs[*i]], l.clone())).collect(),
        }
    }

    /// Checks both bounds against `m`; `Ok(true)` means `value` is proven.
    pub fn verify(&self, m: &BinaryMatroid) -> Result<bool, CosystoleError> {
        let cs = m.cocircuits();
        let index: HashMap<ElementSet, usize> = cs.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let position = |c: &ElementSet| {
            index.get(c).copied().ok_or_else(|| CosystoleError::NotAdmissible(m.format_set(*c)))
        };
        match self.invariant {
            Invariant::Sys3 => {
                let mut lambda = Vec::with_capacity(self.dual.len());
                for (sets, l) in &self.dual {
                    let [a, b, c] = sets[..] else {
                        return Err(CosystoleError::NotAdmissible("expected three cocircuits".into()));
                    };
                    let mut t = [position(&a)?, position(&b)?, position(&c)?];
                    t.sort_unstable();
                    lambda.push((AdmissibleTriple(t), l.clone()));
                }
                let upper = check_upper_certificate(m, &lambda)?;
                Ok(upper == self.value && check_lower_certificate(m, &self.weights, &self.value)?)
            }
            Invariant::Sys => {
                let mut lambda = Vec::with_capacity(self.dual.len());
                for (sets, l) in &self.dual {
                    let [c] = sets[..] else {
                        return Err(CosystoleError::NotAdmissible("expected one cocircuit".into()));
                    };
                    lambda.push((position(&c)?, l.clone()));
                }
                let upper = check_upper_certificate_sys(m, &lambda)?;
                Ok(upper == self.value && check_lower_certificate_sys(m, &self.weights, &self.value)?)
            }
        }
    }

    /// `value`, a `weights` block and a `dual` block of `triple {A} {B} {C} p/q`
    /// (or `cocircuit {A} p/q`) lines.
    pub fn to_text(&self, m: &BinaryMatroid) -> String {
        let mut s = format!("value {}\nweights\n", self.value);
        s.push_str(&self.weights.to_text(m));
        s.push_str("dual\n");
        let word = match self.invariant {
            Invariant::Sys => "cocircuit",
            Invariant::Sys3 => "triple",
        };
        for (sets, l) in &self.dual {
            let body: Vec<String> = sets.iter().map(|&c| m.format_set(c)).collect();
            s.push_str(&format!("{word} {} {l}\n", body.join(" ")));
        }
        s
    }

    pub fn parse(m: &BinaryMatroid, text: &str) -> Result<Self, CosystoleError> {
        #[derive(PartialEq)]
        enum Block {
            Head,
            Weights,
            Dual,
        }
        let mut block = Block::Head;
        let mut value = None;
        let mut weight_pairs: Vec<(String, Rational)> = Vec::new();
        let mut dual = Vec::new();
        let mut invariant = None;
        for (ln, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            let perr = |msg: String| CosystoleError::Parse { line: ln, msg };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(v) = line.strip_prefix("value ") {
                value = Some(v.trim().parse::<Rational>().map_err(|e| perr(format!("{e}")))?);
                continue;
            }
            match line {
                "weights" => {
                    block = Block::Weights;
                    continue;
                }
                "dual" => {
                    block = Block::Dual;
                    continue;
                }
                _ => {}
            }
            match block {
                Block::Head => return Err(perr(format!("unexpected line {line:?}"))),
                Block::Weights => weight_pairs.push(parse_label_value(line, ln)?),
                Block::Dual => {
                    let (word, rest) = line.split_once(' ').ok_or_else(|| perr("malformed dual line".into()))?;
                    let kind = match word {
                        "triple" => Invariant::Sys3,
                        "cocircuit" => Invariant::Sys,
                        _ => return Err(perr(format!("unknown dual entry {word:?}"))),
                    };
                    if invariant.is_some_and(|k| k != kind) {
                        return Err(perr("mixed dual entry kinds".into()));
                    }
                    invariant = Some(kind);
                    let (sets_text, mult) = rest.rsplit_once(' ').ok_or_else(|| perr("missing multiplier".into()))?;
                    let mult: Rational = mult.parse().map_err(|e| perr(format!("{e}")))?;
                    let sets = parse_sets(m, sets_text).map_err(perr)?;
                    dual.push((sets, mult));
                }
            }
        }
        let value = value.ok_or(CosystoleError::Parse { line: 0, msg: "missing `value` line".into() })?;
        Ok(Certificate {
            invariant: invariant.unwrap_or(Invariant::Sys3),
            value,
            weights: WeightVector::from_labels(m, &weight_pairs)?,
            dual,
        })
    }
}

/// Parses `{a,b} {c}` into element sets of `m`.
pub fn parse_sets(m: &BinaryMatroid, text: &str) -> Result<Vec<ElementSet>, String> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_end = rest.find('}').ok_or("unterminated set")?;
        let inner = rest
            .get(..inner_end)
            .and_then(|s| s.strip_prefix('{'))
            .ok_or("expected `{`")?;
        let labels: Vec<&str> = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        out.push(m.set_of(&labels).map_err(|e| e.to_string())?);
        rest = rest[inner_end + 1..].trim_start();
    }
    Ok(out)
}

impl fmt::Display for AdmissibleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}
