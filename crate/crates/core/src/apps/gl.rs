use std::time::Duration;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::graphs::{alpha_with_budget, build_cayley, ConnectionSet};
use crate::groups::{FiniteField, FiniteGroup, FqMatrix, GroupKind};
use crate::scalar::Scalar;
use crate::theta::{solve_theta, CayleyGraphSpec};

fn gl_params(group: &FiniteGroup) -> Result<(usize, usize)> {
    match group.kind() {
        GroupKind::GeneralLinear { q, n } => Ok((q, n)),
        _ => Err(Error::invalid("rank connection sets need a general linear group")),
    }
}

fn matrix_of(group: &FiniteGroup, a: usize) -> FqMatrix {
    group.matrix(a).expect("general linear group element")
}

/// `X_{q,n,k} = {A : rank(A - I) > n - k}`, with conjugation and inverse
/// closure verified.
pub fn gl_connection(group: &FiniteGroup, k: usize) -> Result<ConnectionSet> {
    let (q, n) = gl_params(group)?;
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n = {n}, got k = {k}")));
    }
    let field = FiniteField::new(q)?;
    let identity = FqMatrix::identity(n);
    let elements: Vec<usize> = group
        .elements()
        .filter(|&a| matrix_of(group, a).sub(&identity, &field).rank(&field) > n - k)
        .collect();
    let set = ConnectionSet::new(group, elements)?;
    if !set.is_conjugation_closed() {
        return Err(Error::Internal("rank connection set is not conjugation-closed".into()));
    }
    Ok(set)
}

/// `prod_{i=k}^{n-1} (q^n - q^i)`; 1 when `k = n`.
pub fn gl_lower_bound(q: usize, n: usize, k: usize) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (k..n).map(|i| qn - (q as u128).pow(i as u32)).product()
}

/// Matrices fixing `e_1, ..., e_k`, an independent set of size
/// [`gl_lower_bound`].
pub fn gl_witness_family(group: &FiniteGroup, k: usize) -> Result<Vec<usize>> {
    let (_, n) = gl_params(group)?;
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n = {n}, got k = {k}")));
    }
    Ok(group
        .elements()
        .filter(|&a| {
            let m = matrix_of(group, a);
            (0..k).all(|j| (0..n).all(|i| m.get(i, j) == u8::from(i == j)))
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct GlCell {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub alpha_lower: u128,
    pub alpha_exact: Option<usize>,
    /// Float-mode theta from an imported table; not rigorous.
    pub theta: Option<Scalar>,
}

/// Exact alpha by branch and bound (when it finishes within the budget) and
/// theta from `table` when one is supplied.
pub fn gl_cell(
    group: &FiniteGroup,
    k: usize,
    budget: Option<Duration>,
    table: Option<&CharacterTable>,
) -> Result<GlCell> {
    let (q, n) = gl_params(group)?;
    let x = gl_connection(group, k)?;
    let graph = build_cayley(group, &x)?;
    let alpha = alpha_with_budget(&graph, budget);
    let theta = match table {
        Some(t) => {
            let spec = CayleyGraphSpec::new(group, x)?;
            Some(solve_theta(&spec, &t.to_approx())?.objective)
        }
        None => None,
    };
    Ok(GlCell {
        q,
        n,
        k,
        alpha_lower: gl_lower_bound(q, n, k),
        alpha_exact: alpha.exact(),
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::make_general_linear;

    #[test]
    fn connection_sizes() {
        let g = make_general_linear(2, 2).unwrap();
        assert_eq!(gl_connection(&g, 1).unwrap().len(), 2);
        assert_eq!(gl_connection(&g, 2).unwrap().len(), 5);
        let g = make_general_linear(3, 2).unwrap();
        // matrices without eigenvalue 1, counted by enumerating all 81 matrices
        assert_eq!(gl_connection(&g, 1).unwrap().len(), 27);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(gl_lower_bound(2, 2, 1), 2);
        assert_eq!(gl_lower_bound(3, 2, 1), 6);
        assert_eq!(gl_lower_bound(5, 3, 3), 1);
    }

    #[test]
    fn witness_is_independent() {
        for q in [2, 3] {
            let g = make_general_linear(q, 2).unwrap();
            let x = gl_connection(&g, 1).unwrap();
            let graph = build_cayley(&g, &x).unwrap();
            let family = gl_witness_family(&g, 1).unwrap();
            assert_eq!(family.len() as u128, gl_lower_bound(q, 2, 1));
            assert!(graph.is_independent(&family));
        }
    }
}
