//! Symmetric groups.
//!
//! Elements are the permutations of `0..n` indexed by lexicographic rank
//! (the Lehmer code read as a factorial-base number), so the identity has
//! index 0. Products compose right to left: `(a * b)(i) = a(b(i))`.

use std::collections::HashMap;

use super::partition::{factorial, Partition};
use super::{ClassAssignment, FiniteGroup, GroupKind, GroupLaw};
use crate::error::{Error, Result};

pub const SYMMETRIC_MAX_N: usize = 10;

struct SymmetricLaw {
    n: usize,
    order: usize,
    factorials: Vec<usize>,
}

impl SymmetricLaw {
    fn unrank(&self, mut r: usize) -> Vec<usize> {
        let n = self.n;
        let mut pool: Vec<usize> = (0..n).collect();
        let mut perm = Vec::with_capacity(n);
        for i in 0..n {
            let f = self.factorials[n - 1 - i];
            let digit = r / f;
            r %= f;
            perm.push(pool.remove(digit));
        }
        perm
    }

    fn rank(&self, perm: &[usize]) -> usize {
        let n = self.n;
        let mut r = 0;
        for i in 0..n {
            let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
            r += smaller * self.factorials[n - 1 - i];
        }
        r
    }
}

pub(crate) fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl GroupLaw for SymmetricLaw {
    fn kind(&self) -> GroupKind {
        GroupKind::Symmetric { n: self.n }
    }

    fn order(&self) -> usize {
        self.order
    }

    fn multiply(&self, a: usize, b: usize) -> usize {
        let pa = self.unrank(a);
        let pb = self.unrank(b);
        let prod: Vec<usize> = pb.iter().map(|&i| pa[i]).collect();
        self.rank(&prod)
    }

    fn invert(&self, a: usize) -> usize {
        let p = self.unrank(a);
        let mut inv = vec![0; self.n];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        self.rank(&inv)
    }

    /// Cycle notation on the letters `1..=n`; the identity is `()`.
    fn element_label(&self, a: usize) -> String {
        let p = self.unrank(a);
        let mut seen = vec![false; self.n];
        let mut out = String::new();
        for start in 0..self.n {
            if seen[start] || p[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = p[i];
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    fn analytic_classes(&self) -> Option<ClassAssignment> {
        let partitions = Partition::all(self.n);
        let index: HashMap<Vec<usize>, usize> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts().to_vec(), i))
            .collect();
        let mut class_of = Vec::with_capacity(self.order);
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            class_of.push(index[&cycle_type(&perm)]);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Some(ClassAssignment {
            labels: partitions.iter().map(Partition::to_string).collect(),
            class_of,
        })
    }

    fn permutation(&self, a: usize) -> Option<Vec<usize>> {
        Some(self.unrank(a))
    }
}

/// Symmetric group on `n` letters, `1 <= n <= SYMMETRIC_MAX_N`.
pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=SYMMETRIC_MAX_N).contains(&n) {
        return Err(Error::invalid(format!(
            "symmetric group degree must be in 1..={SYMMETRIC_MAX_N}, got {n}"
        )));
    }
    let factorials = (0..=n).map(|k| factorial(k) as usize).collect::<Vec<_>>();
    FiniteGroup::from_law(SymmetricLaw {
        n,
        order: factorials[n],
        factorials,
    })
}

/// Index of a permutation of `0..n` in [`make_symmetric`]'s numbering.
pub fn permutation_rank(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        r += smaller * factorial(n - 1 - i) as usize;
    }
    r
}
