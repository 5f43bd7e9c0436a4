use super::ThetaCertificate;
use crate::characters::GroupFunction;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Largest group for which the dense `|G| x |G|` matrix is built.
pub const MATRIX_LIMIT: usize = 2000;

/// `A(b, c) = f(b c^{-1}) / |G|`: trace 1, entry sum theta, zero on edges.
pub fn extract_matrix_solution(cert: &ThetaCertificate) -> Result<Matrix<Scalar>> {
    let group = cert.group();
    let n = group.order();
    if n > MATRIX_LIMIT {
        return Err(Error::SizeLimit {
            what: "group order for the matrix solution",
            actual: n,
            limit: MATRIX_LIMIT,
        });
    }
    let scale = Scalar::int(n as i64);
    Ok(Matrix::from_fn(n, n, |b, c| {
        cert.f.at(group.multiply(b, group.invert(c))).clone() / scale.clone()
    }))
}

/// Sum of all entries.
pub fn matrix_objective(a: &Matrix<Scalar>) -> Scalar {
    Scalar::sum(a.iter())
}

/// Averages a Hermitian `|G| x |G|` matrix over the group:
/// `f(g) = sum_b A(g b, b)`. This inverts [`extract_matrix_solution`].
pub fn symmetrize_matrix(a: &Matrix<Scalar>, group: &FiniteGroup) -> Result<GroupFunction> {
    let n = group.order();
    if a.rows() != n || a.cols() != n {
        return Err(Error::invalid(format!(
            "matrix is {}x{}, group has order {n}",
            a.rows(),
            a.cols()
        )));
    }
    for i in 0..n {
        for j in i..n {
            if !a.get(i, j).approx_eq(&a.get(j, i).conj(), 1e-9) {
                return Err(Error::invalid(format!("matrix is not Hermitian at ({i}, {j})")));
            }
        }
    }
    Ok(GroupFunction::from_fn(group, |g| {
        group
            .elements()
            .fold(Scalar::zero(), |acc, b| acc + a.get(group.multiply(g, b), b).clone())
    }))
}
