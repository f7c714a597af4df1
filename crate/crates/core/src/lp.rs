//! Exact linear programming: a dense two-phase simplex over [`Rational`]
//! with Bland's rule, returning certificates for every outcome.
//!
//! Programs are always maximisations. For a program
//! `max c.x  s.t.  a_i.x (<=|=|>=) b_i`, with some variables free and the
//! rest non-negative, the dual vector `y` of an optimal outcome satisfies
//! `y_i >= 0` on `<=` rows, `y_i <= 0` on `>=` rows, `(A^T y)_j >= c_j` for
//! non-negative variables, `(A^T y)_j = c_j` for free ones, and `b.y = c.x`.

use std::fmt;

use crate::exactnum::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
            Relation::Eq => Relation::Eq,
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Maximise `objective . x` subject to `constraints`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub kinds: Vec<VarKind>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, primal: Vec<Rational>, dual: Vec<Rational> },
    /// `farkas` has the dual sign pattern, `A^T y >= 0` (`= 0` on free
    /// variables) and `b.y < 0`, so no feasible point exists.
    Infeasible { farkas: Vec<Rational> },
    /// `point` is feasible and `point + s * ray` stays feasible for all
    /// `s >= 0` while the objective grows without bound.
    Unbounded { point: Vec<Rational>, ray: Vec<Rational> },
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>, kinds: Vec<VarKind>) -> Self {
        assert_eq!(objective.len(), kinds.len(), "one kind per variable");
        LinearProgram { objective, kinds, constraints: Vec::new() }
    }

    pub fn var_count(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.var_count(), "coefficient vector length");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn with_constraint(mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        self.add_constraint(coeffs, relation, rhs);
        self
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.var_count()
            && x.iter().zip(&self.kinds).all(|(v, k)| *k == VarKind::Free || !v.is_negative())
            && self.constraints.iter().all(|c| c.relation.holds(&dot(&c.coeffs, x), &c.rhs))
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    /// `A^T y`.
    fn transpose_times(&self, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.var_count()];
        for (c, yi) in self.constraints.iter().zip(y) {
            if yi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(&c.coeffs) {
                if !a.is_zero() {
                    *o += &(a * yi);
                }
            }
        }
        out
    }

    fn dual_signs_ok(&self, y: &[Rational]) -> bool {
        y.len() == self.constraints.len()
            && self.constraints.iter().zip(y).all(|(c, yi)| match c.relation {
                Relation::Le => !yi.is_negative(),
                Relation::Ge => !yi.is_positive(),
                Relation::Eq => true,
            })
    }
}

impl fmt::Display for LinearProgram {
    /// Debug dump; not a stable format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "max {}", join(&self.objective))?;
        let kinds: Vec<&str> = self
            .kinds
            .iter()
            .map(|k| if *k == VarKind::Free { "free" } else { "nonneg" })
            .collect();
        writeln!(f, "vars {}", kinds.join(" "))?;
        for c in &self.constraints {
            let rel = match c.relation {
                Relation::Le => "<=",
                Relation::Eq => "=",
                Relation::Ge => ">=",
            };
            writeln!(f, "{} {rel} {}", join(&c.coeffs), c.rhs)?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Re-checks an outcome against the program using only exact arithmetic on
/// the program data and the certificate.
pub fn verify_certificates(p: &LinearProgram, outcome: &LpOutcome) -> bool {
    match outcome {
        LpOutcome::Optimal { value, primal, dual } => {
            if !p.is_feasible(primal) || p.objective_value(primal) != *value || !p.dual_signs_ok(dual) {
                return false;
            }
            let aty = p.transpose_times(dual);
            let reduced_ok = aty.iter().zip(&p.objective).zip(&p.kinds).all(|((a, c), k)| match k {
                VarKind::NonNegative => a >= c,
                VarKind::Free => a == c,
            });
            let rhs: Vec<Rational> = p.constraints.iter().map(|c| c.rhs.clone()).collect();
            reduced_ok && dot(&rhs, dual) == *value
        }
        LpOutcome::Infeasible { farkas } => {
            if !p.dual_signs_ok(farkas) {
                return false;
            }
            let aty = p.transpose_times(farkas);
            let combo_ok = aty.iter().zip(&p.kinds).all(|(a, k)| match k {
                VarKind::NonNegative => !a.is_negative(),
                VarKind::Free => a.is_zero(),
            });
            let rhs: Vec<Rational> = p.constraints.iter().map(|c| c.rhs.clone()).collect();
            combo_ok && dot(&rhs, farkas).is_negative()
        }
        LpOutcome::Unbounded { point, ray } => {
            if !p.is_feasible(point) || ray.len() != p.var_count() {
                return false;
            }
            let signs_ok = ray.iter().zip(&p.kinds).all(|(d, k)| *k == VarKind::Free || !d.is_negative());
            let rows_ok = p.constraints.iter().all(|c| {
                let ad = dot(&c.coeffs, ray);
                match c.relation {
                    Relation::Le => !ad.is_positive(),
                    Relation::Ge => !ad.is_negative(),
                    Relation::Eq => ad.is_zero(),
                }
            });
            signs_ok && rows_ok && p.objective_value(ray).is_positive()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural { var: usize, negated: bool },
    Slack,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    columns: Vec<ColumnKind>,
    /// Reduced costs `c_j - z_j` for the active objective.
    reduced: Vec<Rational>,
    value: Rational,
    /// Column that formed the identity in row `i` initially.
    initial: Vec<usize>,
    /// +1 or -1: the factor applied to original row `i`.
    row_sign: Vec<i64>,
}

enum SimplexEnd {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn build(p: &LinearProgram) -> Tableau {
        let mut columns = Vec::new();
        for (var, k) in p.kinds.iter().enumerate() {
            columns.push(ColumnKind::Structural { var, negated: false });
            if *k == VarKind::Free {
                columns.push(ColumnKind::Structural { var, negated: true });
            }
        }
        let m = p.constraints.len();
        let mut normalised = Vec::with_capacity(m);
        for c in &p.constraints {
            // Keep every rhs non-negative; a zero-rhs `>=` row becomes `<=` so
            // it starts with a slack instead of an artificial.
            let flip = c.rhs.is_negative() || (c.rhs.is_zero() && c.relation == Relation::Ge);
            let rel = if flip { c.relation.flipped() } else { c.relation };
            normalised.push((if flip { -1 } else { 1 }, rel));
        }
        let structural = columns.len();
        let mut extra: Vec<(usize, Rational, ColumnKind)> = Vec::new();
        let mut initial = vec![0; m];
        for (i, &(_, rel)) in normalised.iter().enumerate() {
            match rel {
                Relation::Le => {
                    initial[i] = structural + extra.len();
                    extra.push((i, Rational::one(), ColumnKind::Slack));
                }
                Relation::Ge => {
                    extra.push((i, -Rational::one(), ColumnKind::Slack));
                    initial[i] = structural + extra.len();
                    extra.push((i, Rational::one(), ColumnKind::Artificial));
                }
                Relation::Eq => {
                    initial[i] = structural + extra.len();
                    extra.push((i, Rational::one(), ColumnKind::Artificial));
                }
            }
        }
        columns.extend(extra.iter().map(|e| e.2));
        let ncols = columns.len();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for (i, c) in p.constraints.iter().enumerate() {
            let sign = Rational::from_integer(normalised[i].0);
            let mut row = vec![Rational::zero(); ncols];
            for (j, col) in columns[..structural].iter().enumerate() {
                if let ColumnKind::Structural { var, negated } = *col {
                    let a = &c.coeffs[var];
                    if !a.is_zero() {
                        row[j] = if negated { -(a * &sign) } else { a * &sign };
                    }
                }
            }
            rows.push(row);
            rhs.push(&c.rhs * &sign);
        }
        for (k, (i, v, _)) in extra.into_iter().enumerate() {
            rows[i][structural + k] = v;
        }
        Tableau {
            rows,
            rhs,
            basis: initial.clone(),
            columns,
            reduced: vec![Rational::zero(); ncols],
            value: Rational::zero(),
            initial,
            row_sign: normalised.iter().map(|n| n.0).collect(),
        }
    }

    /// Installs a cost vector and prices it against the current basis.
    fn set_costs(&mut self, costs: &[Rational]) {
        let mut reduced = costs.to_vec();
        let mut value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            value += &(cb * &self.rhs[i]);
            for (j, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    reduced[j] -= &(cb * a);
                }
            }
        }
        self.reduced = reduced;
        self.value = value;
    }

    fn pivot(&mut self, r: usize, s: usize) {
        let inv = self.rows[r][s].recip().expect("pivot element is nonzero");
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a = &*a * &inv;
            }
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        let nz: Vec<usize> = (0..self.rows[r].len()).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][s].is_zero() {
                continue;
            }
            let f = self.rows[i][s].clone();
            for &j in &nz {
                self.rows[i][j] -= &(&f * &pivot_row[j]);
            }
            if !pivot_rhs.is_zero() {
                self.rhs[i] -= &(&f * &pivot_rhs);
            }
        }
        let f = self.reduced[s].clone();
        if !f.is_zero() {
            for &j in &nz {
                self.reduced[j] -= &(&f * &pivot_row[j]);
            }
            self.value += &(&f * &pivot_rhs);
        }
        self.rows[r] = pivot_row;
        self.basis[r] = s;
    }

    /// Bland's rule: lowest-index improving column enters; among tied
    /// ratios the row whose basic column has the lowest index leaves.
    fn run(&mut self, allow_artificial: bool) -> SimplexEnd {
        loop {
            let entering = (0..self.columns.len()).find(|&j| {
                self.reduced[j].is_positive() && (allow_artificial || self.columns[j] != ColumnKind::Artificial)
            });
            let Some(s) = entering else {
                return SimplexEnd::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][s];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, s),
                None => return SimplexEnd::Unbounded(s),
            }
        }
    }

    fn costs_for(&self, p: &LinearProgram) -> Vec<Rational> {
        self.columns
            .iter()
            .map(|c| match *c {
                ColumnKind::Structural { var, negated } => {
                    if negated {
                        -&p.objective[var]
                    } else {
                        p.objective[var].clone()
                    }
                }
                _ => Rational::zero(),
            })
            .collect()
    }

    /// Row duals in the original row orientation, for the given costs.
    fn duals(&self, costs: &[Rational]) -> Vec<Rational> {
        self.initial
            .iter()
            .zip(&self.row_sign)
            .map(|(&j, &sign)| {
                let y = &costs[j] - &self.reduced[j];
                if sign < 0 {
                    -y
                } else {
                    y
                }
            })
            .collect()
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.columns.len()];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[i].clone();
        }
        x
    }

    fn to_original(&self, p: &LinearProgram, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); p.var_count()];
        for (j, c) in self.columns.iter().enumerate() {
            if let ColumnKind::Structural { var, negated } = *c {
                if x[j].is_zero() {
                    continue;
                }
                if negated {
                    out[var] -= &x[j];
                } else {
                    out[var] += &x[j];
                }
            }
        }
        out
    }
}

/// Solves `p` exactly. Deterministic: the same program always yields the
/// same outcome. The returned certificate has passed [`verify_certificates`].
pub fn solve(p: &LinearProgram) -> LpOutcome {
    let out = solve_unchecked(p);
    assert!(verify_certificates(p, &out), "simplex produced an invalid certificate");
    out
}

fn solve_unchecked(p: &LinearProgram) -> LpOutcome {
    let mut t = Tableau::build(p);

    if t.columns.contains(&ColumnKind::Artificial) {
        let phase_one: Vec<Rational> = t
            .columns
            .iter()
            .map(|c| if *c == ColumnKind::Artificial { -Rational::one() } else { Rational::zero() })
            .collect();
        t.set_costs(&phase_one);
        // Phase one is bounded above by zero.
        let _ = t.run(true);
        if t.value.is_negative() {
            return LpOutcome::Infeasible { farkas: t.duals(&phase_one) };
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..t.rows.len() {
            if t.columns[t.basis[r]] != ColumnKind::Artificial {
                continue;
            }
            if let Some(s) = (0..t.columns.len())
                .find(|&j| t.columns[j] != ColumnKind::Artificial && !t.rows[r][j].is_zero())
            {
                t.pivot(r, s);
            }
        }
    }

    let costs = t.costs_for(p);
    t.set_costs(&costs);
    match t.run(false) {
        SimplexEnd::Optimal => {
            let primal = t.to_original(p, &t.column_values());
            LpOutcome::Optimal { value: t.value.clone(), primal, dual: t.duals(&costs) }
        }
        SimplexEnd::Unbounded(s) => {
            let point = t.to_original(p, &t.column_values());
            let mut dir = vec![Rational::zero(); t.columns.len()];
            dir[s] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                if !t.rows[i][s].is_zero() {
                    dir[b] = -&t.rows[i][s];
                }
            }
            LpOutcome::Unbounded { point, ray: t.to_original(p, &dir) }
        }
    }
}
