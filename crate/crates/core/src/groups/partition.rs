use std::fmt;

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Centralizer order `z = prod_i i^{m_i} m_i!` of the cycle type.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let max = self.parts.first().copied().unwrap_or(0);
        for i in 1..=max {
            let m = self.multiplicity(i);
            for k in 1..=m {
                z *= (i as u128) * (k as u128);
            }
        }
        z
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Degree of the irreducible character via the hook-length formula.
    pub fn hook_length_degree(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(self.n()) / hooks
    }

    /// All partitions of `n` in ascending lexicographic order, so `(1^n)`
    /// comes first and `(n)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        generate_descending(n, n, &mut current, &mut out);
        out.reverse();
        out
    }
}

// Emits partitions in descending lexicographic order.
fn generate_descending(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        generate_descending(rest - p, p, current, out);
        current.pop();
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn ordering_of_four() {
        let labels: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(labels, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }

    #[test]
    fn hook_lengths() {
        let p = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(p.hook_length_degree(), 2);
        let p = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(p.hook_length_degree(), 5);
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.hook_length_degree(), 35);
    }

    #[test]
    fn centralizers() {
        // class sizes of S_4: 24 / z
        let sizes: Vec<u128> = Partition::all(4)
            .iter()
            .map(|p| 24 / p.centralizer_order())
            .collect();
        assert_eq!(sizes, vec![1, 6, 3, 8, 6]);
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![1, 3]).unwrap().parts(), &[3, 1]);
    }
}
