//! Reference implementations used only as test oracles. None of them share
//! code with the library routines they check.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Character value by repeated rim-hook removal on beta-sets, with no
/// memoization: removing an `r`-hook moves one bead from `b` to `b - r`,
/// with sign `(-1)^(beads strictly between)`.
pub fn mn_beta(lambda: &[usize], mu: &[usize]) -> i64 {
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    beta_recurse(&beta, mu)
}

fn beta_recurse(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        // the empty partition has beta-set {len-1, ..., 0}
        let mut sorted = beta.to_vec();
        sorted.sort_unstable();
        return i64::from(sorted.iter().enumerate().all(|(i, &b)| b == i));
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * beta_recurse(&next, rest);
    }
    total
}

/// `z_mu = prod_i i^{m_i} m_i!`, the centralizer order of cycle type `mu`.
pub fn centralizer(mu: &[usize]) -> u64 {
    let mut z = 1u64;
    for i in 1..=mu.iter().copied().max().unwrap_or(0) {
        let m = mu.iter().filter(|&&p| p == i).count();
        z *= (i as u64).pow(m as u32) * factorial(m);
    }
    z
}

/// Unique solution of `A_S x = b` over the rationals, if `A_S` has full
/// column rank and the system is consistent.
fn solve_subset(a: &[Vec<BigRational>], b: &[BigRational], cols: &[usize]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let k = cols.len();
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|&j| a[i][j].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut row = 0;
    for col in 0..k {
        let pivot = (row..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(row, pivot);
        let p = aug[row][col].clone();
        for c in 0..=k {
            aug[row][c] = &aug[row][c] / &p;
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=k {
                    let v = &aug[row][c] * &f;
                    aug[r][c] = &aug[r][c] - v;
                }
            }
        }
        row += 1;
    }
    if aug[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| aug[i][k].clone()).collect())
}

/// Basic feasible solutions of `A x = b, x >= 0` by trying every column
/// subset with independent columns.
fn basic_feasible(a: &[Vec<BigRational>], b: &[BigRational], n: usize) -> Vec<Vec<BigRational>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let cols: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        if let Some(xs) = solve_subset(a, b, &cols) {
            if xs.iter().all(|v| !v.is_negative()) {
                let mut x = vec![q(0); n];
                for (&j, v) in cols.iter().zip(xs) {
                    x[j] = v;
                }
                out.push(x);
            }
        }
    }
    out
}

#[derive(Debug, PartialEq)]
pub enum OracleOutcome {
    Infeasible,
    Unbounded,
    Optimal(BigRational),
}

fn dot(c: &[BigRational], x: &[BigRational]) -> BigRational {
    c.iter().zip(x).fold(q(0), |acc, (a, b)| acc + a * b)
}

/// `max c x s.t. A x = b, x >= 0` by enumeration. Unboundedness is decided
/// on the vertices of `{d >= 0, A d = 0, sum d = 1}`: the LP is unbounded
/// iff it is feasible and one of them has `c d > 0`.
pub fn lp_oracle(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> OracleOutcome {
    let n = c.len();
    let vertices = basic_feasible(a, b, n);
    if vertices.is_empty() {
        return OracleOutcome::Infeasible;
    }
    let mut ray_rows = a.to_vec();
    ray_rows.push(vec![q(1); n]);
    let mut ray_rhs = vec![q(0); a.len()];
    ray_rhs.push(q(1));
    if basic_feasible(&ray_rows, &ray_rhs, n)
        .iter()
        .any(|d| dot(c, d).is_positive())
    {
        return OracleOutcome::Unbounded;
    }
    OracleOutcome::Optimal(vertices.iter().map(|x| dot(c, x)).max().expect("nonempty"))
}

/// `#{sigma in S_n : sigma fixes at least m of the first s letters}` by
/// walking all permutations.
pub fn brute_at_least_fixed(n: usize, s: usize, m: usize) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if (0..s).filter(|&i| perm[i] == i).count() >= m {
            count += 1;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return count;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Exact determinant-free PSD check: all principal minors of a symmetric
/// rational matrix are nonnegative (only usable for tiny matrices).
pub fn psd_by_minors(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<BigRational>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect();
        if determinant(sub).is_negative() {
            return false;
        }
    }
    true
}

pub fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return q(0);
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let v = &a[col][c] * &f;
                a[r][c] = &a[r][c] - v;
            }
        }
    }
    det
}
