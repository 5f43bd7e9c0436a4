use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::characters::{symmetric_table_for, CharacterTable};
use crate::error::{Error, Result};
use crate::graphs::ConnectionSet;
use crate::groups::{make_symmetric, FiniteGroup, GroupKind, Partition};
use crate::scalar::Scalar;
use crate::theta::{solve_theta, CayleyGraphSpec};

fn check_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// Number of parts equal to 1.
pub fn fixed_points_count(cycle_type: &Partition) -> usize {
    cycle_type.multiplicity(1)
}

/// `X_{n,k}`: permutations with fewer than `k` fixed points, as a union of
/// classes of the given symmetric group.
pub fn efp_connection(group: &FiniteGroup, k: usize) -> Result<ConnectionSet> {
    let GroupKind::Symmetric { n } = group.kind() else {
        return Err(Error::invalid("efp connection sets need a symmetric group"));
    };
    check_range(n, k)?;
    let classes: Vec<usize> = group
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let perm = group.permutation(c.representative).expect("symmetric group element");
            perm.iter().enumerate().filter(|&(i, &p)| i == p).count() < k
        })
        .map(|(i, _)| i)
        .collect();
    ConnectionSet::from_classes(group, &classes)
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i as i128 + 1))
}

/// Permutations of `r` letters fixing none of `u` marked letters.
fn avoiding(r: usize, u: usize) -> i128 {
    (0..=u.min(r))
        .map(|j| {
            let term = binomial(u, j) * factorial(r - j);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `#{sigma in S_n : sigma fixes at least m of 1..s}`.
pub(crate) fn at_least_fixed(n: usize, s: usize, m: usize) -> i128 {
    (m..=s).map(|t| binomial(s, t) * avoiding(n - t, s - t)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjecturedMax {
    pub value: u64,
    /// Every `i` attaining the maximum.
    pub maximizing_i: Vec<usize>,
    /// The count for each `i = 0..=(n-k)/2`.
    pub terms: Vec<u64>,
}

/// `max_i #{sigma : sigma fixes at least k+i points of 1..k+2i}` over
/// `0 <= i <= (n-k)/2`.
pub fn efp_conjectured_max(n: usize, k: usize) -> Result<ConjecturedMax> {
    check_range(n, k)?;
    if n > 20 {
        return Err(Error::invalid(format!("n = {n} is too large for 64-bit counts")));
    }
    let terms: Vec<u64> = (0..=(n - k) / 2)
        .map(|i| at_least_fixed(n, k + 2 * i, k + i) as u64)
        .collect();
    let value = *terms.iter().max().expect("at least one term");
    let maximizing_i = (0..terms.len()).filter(|&i| terms[i] == value).collect();
    Ok(ConjecturedMax {
        value,
        maximizing_i,
        terms,
    })
}

#[derive(Clone, Debug)]
pub struct EfpCell {
    pub n: usize,
    pub k: usize,
    /// `None` when the time budget ran out before the cell was computed.
    pub theta: Option<Scalar>,
    pub conjectured_max: u64,
    pub maximizing_i: Vec<usize>,
    /// Set only on exact equality of theta and the conjectured maximum.
    pub checkmark: bool,
    pub lp_rows: usize,
    pub lp_cols: usize,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug)]
pub struct EfpTableOptions {
    pub n_max: usize,
    pub exact: bool,
    pub jobs: usize,
    /// Cells not started before the budget expires are left as gaps.
    pub budget: Option<Duration>,
}

impl Default for EfpTableOptions {
    fn default() -> Self {
        EfpTableOptions {
            n_max: 8,
            exact: true,
            jobs: 1,
            budget: None,
        }
    }
}

fn compute_cell(table: &CharacterTable, n: usize, k: usize, exact: bool, deadline: Option<Instant>) -> Result<EfpCell> {
    let conjectured = efp_conjectured_max(n, k)?;
    let mut cell = EfpCell {
        n,
        k,
        theta: None,
        conjectured_max: conjectured.value,
        maximizing_i: conjectured.maximizing_i,
        checkmark: false,
        lp_rows: 0,
        lp_cols: 0,
        runtime_ms: 0,
    };
    if deadline.is_some_and(|d| Instant::now() >= d) {
        return Ok(cell);
    }
    let start = Instant::now();
    let group = table.group();
    let spec = CayleyGraphSpec::new(group, efp_connection(group, k)?)?;
    let cert = if exact {
        solve_theta(&spec, table)?
    } else {
        solve_theta(&spec, &table.to_approx())?
    };
    cell.checkmark = cert.exact && cert.objective == Scalar::int(conjectured.value as i64);
    cell.theta = Some(cert.objective);
    cell.lp_rows = cert.lp_rows;
    cell.lp_cols = cert.lp_cols;
    cell.runtime_ms = start.elapsed().as_millis();
    Ok(cell)
}

/// All cells `1 <= k <= n <= n_max`, ordered by `n` then `k`.
pub fn efp_table(options: &EfpTableOptions) -> Result<Vec<EfpCell>> {
    if options.n_max == 0 || options.n_max > 10 {
        return Err(Error::invalid(format!("n_max must be in 1..=10, got {}", options.n_max)));
    }
    let deadline = options.budget.map(|b| Instant::now() + b);
    let tables: Vec<CharacterTable> = (1..=options.n_max)
        .map(|n| symmetric_table_for(&make_symmetric(n)?))
        .collect::<Result<_>>()?;
    let cells: Vec<(usize, usize)> = (1..=options.n_max)
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect();
    let run = |&(n, k): &(usize, usize)| compute_cell(&tables[n - 1], n, k, options.exact, deadline);
    if options.jobs <= 1 {
        return cells.iter().map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| cells.par_iter().map(run).collect())
}

fn theta_text(theta: &Option<Scalar>) -> String {
    match theta {
        Some(Scalar::Exact(r)) => r.to_string(),
        Some(Scalar::Approx(z)) => format!("{:.7}", z.re),
        None => String::new(),
    }
}

pub fn efp_csv(cells: &[EfpCell]) -> String {
    let mut out = String::from("n,k,theta,conjectured_max,checkmark,lp_rows,lp_cols,runtime_ms\n");
    for c in cells {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            c.n,
            c.k,
            theta_text(&c.theta),
            c.conjectured_max,
            c.checkmark,
            c.lp_rows,
            c.lp_cols,
            c.runtime_ms
        );
    }
    out
}

/// Rows `k`, columns `n`; `✓` marks a checkmark, `?` a gap, blank otherwise.
pub fn efp_grid(cells: &[EfpCell]) -> String {
    let n_max = cells.iter().map(|c| c.n).max().unwrap_or(0);
    let mut out = String::from("k\\n");
    for n in 1..=n_max {
        let _ = write!(out, " {n:>2}");
    }
    out.push('\n');
    for k in 1..=n_max {
        let _ = write!(out, "{k:>3}");
        for n in 1..=n_max {
            let mark = match cells.iter().find(|c| c.n == n && c.k == k) {
                Some(c) if c.theta.is_none() => "?",
                Some(c) if c.checkmark => "✓",
                _ => "",
            };
            let _ = write!(out, " {mark:>2}");
        }
        out.push('\n');
    }
    out
}
