//! Dense primal simplex for `max c.x` subject to `A x = b`, `x >= 0`.
//!
//! The same code runs over exact rationals and over `f64`. Phase I minimizes
//! the sum of artificial variables, Phase II optimizes `c`; both use Bland's
//! rule (lowest-index entering column, ties in the ratio test broken by the
//! lowest basic variable index), so exact runs always terminate. Float runs
//! treat magnitudes below [`FLOAT_EPS`] as zero and stop with a numerical
//! failure after `10 (m + n)^2` pivots.
//!
//! Duals `y` come from solving `B^T y = c_B` on the rows that survive Phase I
//! (redundant rows get multiplier 0), so an optimal solution carries a
//! certificate that [`verify_certificate`] re-checks from scratch.
//!
//! LP dump format, one line per row:
//!
//! ```text
//! lp exact 2 3
//! max 1 0 0
//! 1 1 4 = 6
//! 1 1 -2 = 0
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::parse_rational;

/// Zero threshold for float-mode pivoting and comparisons.
pub const FLOAT_EPS: f64 = 1e-9;

/// Scalars the simplex can run over.
pub trait LpNumber: Clone + fmt::Debug + PartialEq + Num + Neg<Output = Self> {
    const EXACT: bool;

    /// Sign with the mode's zero threshold.
    fn sign(&self) -> Ordering;

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn abs_value(&self) -> Self;

    fn to_text(&self) -> String;

    fn parse_text(text: &str) -> Result<Self>;

    fn is_zero_eps(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    fn is_positive_eps(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_negative_eps(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl LpNumber for BigRational {
    const EXACT: bool = true;

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }

    fn to_f64(&self) -> f64 {
        crate::scalar::rational_to_f64(self)
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(text: &str) -> Result<Self> {
        parse_rational(text)
    }
}

impl LpNumber for f64 {
    const EXACT: bool = false;

    fn sign(&self) -> Ordering {
        if *self > FLOAT_EPS {
            Ordering::Greater
        } else if *self < -FLOAT_EPS {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn to_text(&self) -> String {
        format!("{self:?}")
    }

    fn parse_text(text: &str) -> Result<Self> {
        text.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .or_else(|| parse_rational(text).ok().map(|r| crate::scalar::rational_to_f64(&r)))
            .ok_or_else(|| Error::invalid(format!("bad number {text:?}")))
    }
}

/// `max objective . x` subject to `matrix x = rhs`, `x >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpInstance<T> {
    pub objective: Vec<T>,
    pub matrix: Vec<Vec<T>>,
    pub rhs: Vec<T>,
}

pub type ExactLp = LpInstance<BigRational>;
pub type FloatLp = LpInstance<f64>;

impl<T: LpNumber> LpInstance<T> {
    pub fn new(objective: Vec<T>, matrix: Vec<Vec<T>>, rhs: Vec<T>) -> Result<Self> {
        let lp = LpInstance {
            objective,
            matrix,
            rhs,
        };
        lp.check_dimensions()?;
        Ok(lp)
    }

    pub fn variable_count(&self) -> usize {
        self.objective.len()
    }

    pub fn row_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_exact(&self) -> bool {
        T::EXACT
    }

    pub fn check_dimensions(&self) -> Result<()> {
        let n = self.objective.len();
        if n == 0 || self.matrix.is_empty() {
            return Err(Error::invalid("LP needs at least one variable and one row"));
        }
        if self.rhs.len() != self.matrix.len() {
            return Err(Error::invalid(format!(
                "{} rows but {} right-hand sides",
                self.matrix.len(),
                self.rhs.len()
            )));
        }
        if let Some(r) = self.matrix.iter().position(|row| row.len() != n) {
            return Err(Error::invalid(format!("row {r} does not have {n} entries")));
        }
        Ok(())
    }

    /// The plain-text dump described in the module docs.
    pub fn dump(&self) -> String {
        let mode = if T::EXACT { "exact" } else { "float" };
        let join = |v: &[T]| v.iter().map(T::to_text).collect::<Vec<_>>().join(" ");
        let mut out = format!(
            "lp {mode} {} {}\nmax {}\n",
            self.row_count(),
            self.variable_count(),
            join(&self.objective)
        );
        for (row, b) in self.matrix.iter().zip(&self.rhs) {
            out.push_str(&format!("{} = {}\n", join(row), b.to_text()));
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty LP dump"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let ["lp", mode, m, n] = fields[..] else {
            return Err(Error::parse(line, "expected `lp <exact|float> <rows> <cols>`"));
        };
        if (mode == "exact") != T::EXACT || !matches!(mode, "exact" | "float") {
            return Err(Error::parse(line, format!("mode {mode:?} does not match the requested arithmetic")));
        }
        let m: usize = m.parse().map_err(|_| Error::parse(line, "bad row count"))?;
        let n: usize = n.parse().map_err(|_| Error::parse(line, "bad column count"))?;
        let numbers = |line: usize, items: &[&str]| -> Result<Vec<T>> {
            items
                .iter()
                .map(|t| T::parse_text(t).map_err(|e| Error::parse(line, e.to_string())))
                .collect()
        };
        let (line, obj) = lines.next().ok_or_else(|| Error::parse(line, "missing objective"))?;
        let obj: Vec<&str> = obj.split_whitespace().collect();
        if obj.first() != Some(&"max") || obj.len() != n + 1 {
            return Err(Error::parse(line, format!("expected `max` and {n} coefficients")));
        }
        let objective = numbers(line, &obj[1..])?;
        let mut matrix = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, row) = lines.next().ok_or_else(|| Error::parse(line, "LP dump ends early"))?;
            let items: Vec<&str> = row.split_whitespace().collect();
            if items.len() != n + 2 || items[n] != "=" {
                return Err(Error::parse(line, format!("expected {n} coefficients, `=`, and a value")));
            }
            matrix.push(numbers(line, &items[..n])?);
            rhs.push(numbers(line, &items[n + 1..])?.remove(0));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "trailing content after LP"));
        }
        Self::new(objective, matrix, rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl fmt::Display for LpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LpStatus::Optimal => "optimal",
            LpStatus::Infeasible => "infeasible",
            LpStatus::Unbounded => "unbounded",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution<T> {
    pub status: LpStatus,
    /// Primal point (optimal only; empty otherwise).
    pub x: Vec<T>,
    pub objective_value: T,
    /// One multiplier per original row (optimal only; empty otherwise).
    pub dual: Vec<T>,
    /// Basic column per surviving row.
    pub basis: Vec<usize>,
    /// Rows found redundant in Phase I.
    pub dropped_rows: Vec<usize>,
    pub pivots: usize,
}

struct Tableau<T> {
    /// `rows[i]` has `n + m` columns (originals, then artificials).
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    /// Original row index of each tableau row.
    origin: Vec<usize>,
    /// Reduced-cost row `c_j - c_B B^{-1} A_j` and current objective.
    cost: Vec<T>,
    value: T,
    pivots: usize,
    limit: Option<usize>,
}

enum PhaseOutcome {
    Optimal,
    Unbounded,
}

impl<T: LpNumber> Tableau<T> {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        self.rhs[r] = self.rhs[r].clone() / p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.clone() - factor.clone() * pv.clone();
                }
            }
            self.rows[i][col] = T::zero();
            self.rhs[i] = self.rhs[i].clone() - factor * pivot_rhs.clone();
        }
        let factor = self.cost[col].clone();
        if !factor.is_zero() {
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.clone() - factor.clone() * pv.clone();
                }
            }
            self.cost[col] = T::zero();
            self.value = self.value.clone() + factor * pivot_rhs;
        }
        self.basis[r] = col;
        self.pivots += 1;
    }

    /// Installs `costs` as the objective and prices out the basis.
    fn set_objective(&mut self, costs: &[T]) {
        self.cost = costs.to_vec();
        self.value = T::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = costs[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (v, a) in self.cost.iter_mut().zip(&self.rows[i]) {
                *v = v.clone() - cb.clone() * a.clone();
            }
            self.value = self.value.clone() + cb * self.rhs[i].clone();
        }
    }

    /// Bland's rule over columns `0..allowed`.
    fn run(&mut self, allowed: usize) -> Result<PhaseOutcome> {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.cost[j].is_positive_eps()) else {
                return Ok(PhaseOutcome::Optimal);
            };
            if let Some(limit) = self.limit {
                if self.pivots >= limit {
                    return Err(Error::NumericalFailure(format!(
                        "simplex made no final progress within {limit} pivots"
                    )));
                }
            }
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive_eps() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => match (ratio.clone() - br.clone()).sign() {
                        Ordering::Less => Some((i, ratio)),
                        Ordering::Equal if self.basis[i] < self.basis[bi] => Some((i, ratio)),
                        _ => Some((bi, br)),
                    },
                };
            }
            let Some((r, _)) = best else {
                return Ok(PhaseOutcome::Unbounded);
            };
            self.pivot(r, col);
        }
    }
}

/// Solves the LP; deterministic for a given instance.
pub fn solve<T: LpNumber>(lp: &LpInstance<T>) -> Result<LpSolution<T>> {
    lp.check_dimensions()?;
    let m = lp.row_count();
    let n = lp.variable_count();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for i in 0..m {
        let negate = lp.rhs[i].sign() == Ordering::Less;
        let mut row: Vec<T> = lp.matrix[i]
            .iter()
            .map(|v| if negate { -v.clone() } else { v.clone() })
            .collect();
        row.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        rows.push(row);
        rhs.push(if negate { -lp.rhs[i].clone() } else { lp.rhs[i].clone() });
    }
    let limit = (!T::EXACT).then(|| 10 * (m + n) * (m + n));
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n..n + m).collect(),
        origin: (0..m).collect(),
        cost: Vec::new(),
        value: T::zero(),
        pivots: 0,
        limit,
    };

    // Phase I: maximize -(sum of artificials)
    let mut phase1: Vec<T> = vec![T::zero(); n];
    phase1.extend((0..m).map(|_| -T::one()));
    t.set_objective(&phase1);
    t.run(n + m)?;
    if t.value.is_negative_eps() {
        return Ok(LpSolution {
            status: LpStatus::Infeasible,
            x: Vec::new(),
            objective_value: T::zero(),
            dual: Vec::new(),
            basis: Vec::new(),
            dropped_rows: Vec::new(),
            pivots: t.pivots,
        });
    }

    // drive artificials out of the basis; rows where that is impossible are
    // linear combinations of the others
    let mut dropped = Vec::new();
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] < n {
            r += 1;
            continue;
        }
        match (0..n).find(|&j| !t.rows[r][j].is_zero_eps()) {
            Some(j) => {
                t.pivot(r, j);
                r += 1;
            }
            None => {
                dropped.push(t.origin[r]);
                t.rows.remove(r);
                t.rhs.remove(r);
                t.basis.remove(r);
                t.origin.remove(r);
            }
        }
    }
    dropped.sort_unstable();

    // Phase II
    let mut costs = lp.objective.clone();
    costs.extend((0..m).map(|_| T::zero()));
    t.set_objective(&costs);
    if let PhaseOutcome::Unbounded = t.run(n)? {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            x: Vec::new(),
            objective_value: T::zero(),
            dual: Vec::new(),
            basis: t.basis,
            dropped_rows: dropped,
            pivots: t.pivots,
        });
    }

    let mut x = vec![T::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        x[b] = t.rhs[i].clone();
    }
    let objective_value = lp
        .objective
        .iter()
        .zip(&x)
        .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone());

    // B^T y = c_B on surviving rows
    let kept: Vec<usize> = {
        let mut k = t.origin.clone();
        k.sort_unstable();
        k
    };
    let size = kept.len();
    let bt: Vec<Vec<T>> = t
        .basis
        .iter()
        .map(|&col| kept.iter().map(|&row| lp.matrix[row][col].clone()).collect())
        .collect();
    let cb: Vec<T> = t.basis.iter().map(|&col| lp.objective[col].clone()).collect();
    let y_kept = solve_square(bt, cb, size)?;
    let mut dual = vec![T::zero(); m];
    for (k, &row) in kept.iter().enumerate() {
        dual[row] = y_kept[k].clone();
    }

    let solution = LpSolution {
        status: LpStatus::Optimal,
        x,
        objective_value,
        dual,
        basis: t.basis,
        dropped_rows: dropped,
        pivots: t.pivots,
    };
    if !T::EXACT {
        if let Err(v) = verify_certificate(lp, &solution) {
            return Err(Error::NumericalFailure(format!("float solution fails certificate check: {v}")));
        }
    }
    Ok(solution)
}

/// Gaussian elimination with partial pivoting (largest magnitude; exact
/// mode takes the first nonzero).
fn solve_square<T: LpNumber>(mut a: Vec<Vec<T>>, mut b: Vec<T>, n: usize) -> Result<Vec<T>> {
    for col in 0..n {
        let pivot = if T::EXACT {
            (col..n).find(|&r| !a[r][col].is_zero())
        } else {
            (col..n)
                .filter(|&r| !a[r][col].is_zero_eps())
                .max_by(|&p, &q| {
                    a[p][col]
                        .to_f64()
                        .abs()
                        .partial_cmp(&a[q][col].to_f64().abs())
                        .unwrap_or(Ordering::Equal)
                })
        };
        let Some(p) = pivot else {
            return Err(Error::NumericalFailure("singular basis matrix".into()));
        };
        a.swap(col, p);
        b.swap(col, p);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for c in col..n {
                let v = a[r][c].clone() - factor.clone() * a[col][c].clone();
                a[r][c] = v;
            }
            b[r] = b[r].clone() - factor * b[col].clone();
        }
    }
    Ok((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

/// A certificate condition that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    NotOptimal,
    DimensionMismatch,
    PrimalInfeasible,
    DualInfeasible,
    ComplementarySlackness,
    DualityGap,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::NotOptimal => "not optimal",
            Violation::DimensionMismatch => "dimension mismatch",
            Violation::PrimalInfeasible => "primal infeasible",
            Violation::DualInfeasible => "dual infeasible",
            Violation::ComplementarySlackness => "complementary slackness",
            Violation::DualityGap => "duality gap",
        })
    }
}

/// Re-checks an optimal solution from the instance data alone: `A x = b`,
/// `x >= 0`, `c - A^T y <= 0` with equality on basic columns, and
/// `c.x = objective_value = b.y`. Float checks use tolerance `1e-9` scaled
/// by the data magnitude.
pub fn verify_certificate<T: LpNumber>(
    lp: &LpInstance<T>,
    solution: &LpSolution<T>,
) -> std::result::Result<(), Violation> {
    if solution.status != LpStatus::Optimal {
        return Err(Violation::NotOptimal);
    }
    let m = lp.matrix.len();
    let n = lp.objective.len();
    if solution.x.len() != n || solution.dual.len() != m || lp.rhs.len() != m {
        return Err(Violation::DimensionMismatch);
    }
    let scale = lp
        .matrix
        .iter()
        .flatten()
        .chain(&lp.rhs)
        .chain(&lp.objective)
        .chain(&solution.x)
        .chain(&solution.dual)
        .map(|v| v.to_f64().abs())
        .fold(1.0, f64::max)
        * (m + n) as f64;
    let zero = |v: &T| {
        if T::EXACT {
            v.is_zero()
        } else {
            v.to_f64().abs() <= FLOAT_EPS * scale
        }
    };
    let negative = |v: &T| {
        if T::EXACT {
            v.sign() == Ordering::Less
        } else {
            v.to_f64() < -FLOAT_EPS * scale
        }
    };
    let positive = |v: &T| negative(&-v.clone());
    if solution.x.iter().any(negative) {
        return Err(Violation::PrimalInfeasible);
    }
    for (row, b) in lp.matrix.iter().zip(&lp.rhs) {
        let ax = row
            .iter()
            .zip(&solution.x)
            .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
        if !zero(&(ax - b.clone())) {
            return Err(Violation::PrimalInfeasible);
        }
    }
    for j in 0..n {
        let aty = (0..m).fold(T::zero(), |acc, i| acc + lp.matrix[i][j].clone() * solution.dual[i].clone());
        let reduced = lp.objective[j].clone() - aty;
        if positive(&reduced) {
            return Err(Violation::DualInfeasible);
        }
        if solution.basis.contains(&j) && !zero(&reduced) {
            return Err(Violation::ComplementarySlackness);
        }
    }
    let cx = lp
        .objective
        .iter()
        .zip(&solution.x)
        .fold(T::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
    let by = lp
        .rhs
        .iter()
        .zip(&solution.dual)
        .fold(T::zero(), |acc, (b, y)| acc + b.clone() * y.clone());
    if !zero(&(cx.clone() - by)) || !zero(&(cx - solution.objective_value.clone())) {
        return Err(Violation::DualityGap);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    fn exact(c: &[i64], a: &[&[i64]], b: &[i64]) -> ExactLp {
        LpInstance::new(
            c.iter().map(|&v| q(v)).collect(),
            a.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
            b.iter().map(|&v| q(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn simple_optimum() {
        let lp = exact(&[1, 0], &[&[1, 1]], &[1]);
        let s = solve(&lp).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.objective_value, q(1));
        assert_eq!(s.x, vec![q(1), q(0)]);
        assert!(verify_certificate(&lp, &s).is_ok());
    }

    #[test]
    fn negative_rhs_is_infeasible() {
        let s = solve(&exact(&[1, 0], &[&[1, 1]], &[-1])).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn s3_theta_lp() {
        let lp = exact(&[1, 0, 0], &[&[1, 1, 4], &[1, 1, -2]], &[6, 0]);
        let s = solve(&lp).unwrap();
        assert_eq!(s.objective_value, q(2));
        assert_eq!(s.x, vec![q(2), q(0), q(1)]);
        assert!(verify_certificate(&lp, &s).is_ok());
    }

    #[test]
    fn unbounded() {
        let s = solve(&exact(&[1, 0], &[&[1, -1]], &[0])).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn redundant_and_degenerate_rows() {
        let lp = exact(&[1, 1, 0], &[&[1, 1, 1], &[2, 2, 2], &[0, 0, 0]], &[3, 6, 0]);
        let s = solve(&lp).unwrap();
        assert_eq!(s.objective_value, q(3));
        assert_eq!(s.dropped_rows.len(), 2);
        assert!(verify_certificate(&lp, &s).is_ok());
    }

    #[test]
    fn certificate_tampering() {
        let lp = exact(&[1, 0, 0], &[&[1, 1, 4], &[1, 1, -2]], &[6, 0]);
        let s = solve(&lp).unwrap();
        let mut bad = s.clone();
        bad.x[0] = -bad.x[0].clone();
        assert_eq!(verify_certificate(&lp, &bad), Err(Violation::PrimalInfeasible));
        let mut bad = s.clone();
        bad.objective_value += q(1);
        assert_eq!(verify_certificate(&lp, &bad), Err(Violation::DualityGap));
        let mut bad = s;
        bad.dual = vec![q(0), q(0)];
        assert_eq!(verify_certificate(&lp, &bad), Err(Violation::DualInfeasible));
    }

    #[test]
    fn float_mode_matches() {
        let lp = FloatLp::new(vec![1.0, 0.0, 0.0], vec![vec![1.0, 1.0, 4.0], vec![1.0, 1.0, -2.0]], vec![6.0, 0.0])
            .unwrap();
        let s = solve(&lp).unwrap();
        assert!((s.objective_value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn dump_round_trip() {
        let lp = exact(&[1, 0, 0], &[&[1, 1, 4], &[1, 1, -2]], &[6, 0]);
        let text = lp.dump();
        assert_eq!(text, "lp exact 2 3\nmax 1 0 0\n1 1 4 = 6\n1 1 -2 = 0\n");
        assert_eq!(ExactLp::parse_dump(&text).unwrap(), lp);
        assert!(FloatLp::parse_dump(&text).is_err());
    }

    #[test]
    fn dimension_errors() {
        assert!(ExactLp::new(vec![q(1)], vec![vec![q(1), q(2)]], vec![q(1)]).is_err());
        assert!(ExactLp::new(vec![q(1)], vec![], vec![]).is_err());
    }
}
