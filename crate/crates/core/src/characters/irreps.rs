//! Explicit unitary irreducible representations.
//!
//! File format (JSON): one object per irrep, each matrix given row-major as
//! nested `[re, im]` pairs, one matrix per group element in element order.
//!
//! ```json
//! {"irreps": [{"label": "triv", "degree": 1, "matrices": [[[[1, 0]]], ...]}]}
//! ```

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{CharacterTable, GroupFunction};
use crate::error::{read_file, Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;

/// Tolerance for the homomorphism and unitarity checks.
pub const IRREP_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: String,
    pub degree: usize,
    /// `matrices[g]` is `pi(g)`.
    pub matrices: Vec<Matrix<Complex64>>,
}

impl Irrep {
    pub fn character(&self, g: usize) -> Complex64 {
        (0..self.degree).map(|i| self.matrices[g].get(i, i)).sum()
    }

    /// True when every matrix is real within the tolerance.
    pub fn is_real(&self) -> bool {
        self.matrices
            .iter()
            .all(|m| m.iter().all(|z| z.im.abs() <= IRREP_TOL))
    }
}

#[derive(Clone, Debug)]
pub struct IrrepMatrices {
    group: FiniteGroup,
    irreps: Vec<Irrep>,
}

#[derive(Serialize, Deserialize)]
struct IrrepFile {
    irreps: Vec<IrrepEntry>,
}

#[derive(Serialize, Deserialize)]
struct IrrepEntry {
    label: String,
    degree: usize,
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

impl IrrepMatrices {
    /// Checks shapes, `pi(e) = I`, unitarity, the homomorphism law,
    /// irreducibility (`sum |chi|^2 = |G|`), pairwise inequivalence, and
    /// completeness (`sum d^2 = |G|`).
    pub fn new(group: &FiniteGroup, irreps: Vec<Irrep>) -> Result<Self> {
        let n = group.order();
        for rep in &irreps {
            let d = rep.degree;
            if d == 0 || rep.matrices.len() != n {
                return Err(Error::invalid(format!(
                    "irrep {}: expected {n} matrices of positive degree",
                    rep.label
                )));
            }
            if rep.matrices.iter().any(|m| m.rows() != d || m.cols() != d) {
                return Err(Error::invalid(format!("irrep {}: matrix of wrong size", rep.label)));
            }
            let identity = identity(d);
            if max_diff(&rep.matrices[group.identity()], &identity) > IRREP_TOL {
                return Err(Error::invalid(format!("irrep {}: pi(e) is not the identity", rep.label)));
            }
            for (g, m) in rep.matrices.iter().enumerate() {
                if max_diff(&mul(m, &adjoint(m)), &identity) > IRREP_TOL {
                    return Err(Error::invalid(format!("irrep {}: pi({g}) is not unitary", rep.label)));
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let prod = mul(&rep.matrices[a], &rep.matrices[b]);
                    if max_diff(&prod, &rep.matrices[group.multiply(a, b)]) > IRREP_TOL {
                        return Err(Error::invalid(format!(
                            "irrep {}: pi({a}) pi({b}) != pi({a} {b})",
                            rep.label
                        )));
                    }
                }
            }
        }
        let tol = IRREP_TOL * n as f64;
        for (i, p) in irreps.iter().enumerate() {
            for (j, q) in irreps.iter().enumerate().skip(i) {
                let inner: Complex64 = (0..n).map(|g| p.character(g) * q.character(g).conj()).sum();
                let expected = if i == j { n as f64 } else { 0.0 };
                if (inner - expected).norm() > tol {
                    let what = if i == j { "is reducible" } else { "are equivalent" };
                    return Err(Error::invalid(format!(
                        "irreps {} and {} {what}",
                        p.label, q.label
                    )));
                }
            }
        }
        let sum_sq: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
        if sum_sq != n {
            return Err(Error::invalid(format!(
                "degrees squared sum to {sum_sq}, group order is {n}"
            )));
        }
        Ok(IrrepMatrices {
            group: group.clone(),
            irreps,
        })
    }

    /// The 1x1 representations of a table whose irreps all have degree 1.
    pub fn from_linear_characters(table: &CharacterTable) -> Result<Self> {
        if table.degrees().iter().any(|&d| d != 1) {
            return Err(Error::NeedsIrreps);
        }
        let group = table.group();
        let irreps = (0..table.irrep_count())
            .map(|i| Irrep {
                label: table.irrep_label(i).to_string(),
                degree: 1,
                matrices: group
                    .elements()
                    .map(|g| Matrix::filled(1, 1, table.entry_complex(i, group.class_of(g))))
                    .collect(),
            })
            .collect();
        Self::new(group, irreps)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    /// Index of the trivial representation.
    pub fn trivial_index(&self) -> Option<usize> {
        self.irreps.iter().position(|r| {
            r.degree == 1 && r.matrices.iter().all(|m| (m.get(0, 0) - 1.0).norm() <= IRREP_TOL)
        })
    }

    /// `f^(pi) = sum_g f(g) pi(g)`
    pub fn fourier(&self, f: &GroupFunction, irrep: usize) -> Result<Matrix<Complex64>> {
        if !f.group().same_as(&self.group) {
            return Err(Error::invalid("function and representations use different groups"));
        }
        let rep = &self.irreps[irrep];
        let d = rep.degree;
        let mut out = Matrix::filled(d, d, Complex64::new(0.0, 0.0));
        for (g, m) in rep.matrices.iter().enumerate() {
            let v = f.value(g).to_complex();
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            for i in 0..d {
                for j in 0..d {
                    out.set(i, j, out.get(i, j) + v * m.get(i, j));
                }
            }
        }
        Ok(out)
    }

    pub fn parse(text: &str, group: &FiniteGroup) -> Result<Self> {
        let file: IrrepFile =
            serde_json::from_str(text).map_err(|e| Error::Schema(format!("irrep JSON: {e}")))?;
        let irreps = file
            .irreps
            .into_iter()
            .map(|e| {
                let matrices = e
                    .matrices
                    .iter()
                    .map(|rows| {
                        if rows.len() != e.degree || rows.iter().any(|r| r.len() != e.degree) {
                            return Err(Error::Schema(format!("irrep {}: matrix of wrong size", e.label)));
                        }
                        Ok(Matrix::from_fn(e.degree, e.degree, |i, j| {
                            let [re, im] = rows[i][j];
                            Complex64::new(re, im)
                        }))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Irrep {
                    label: e.label,
                    degree: e.degree,
                    matrices,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, irreps)
    }

    pub fn load(path: &Path, group: &FiniteGroup) -> Result<Self> {
        Self::parse(&read_file(path)?, group)
    }

    pub fn to_json(&self) -> String {
        let file = IrrepFile {
            irreps: self
                .irreps
                .iter()
                .map(|r| IrrepEntry {
                    label: r.label.clone(),
                    degree: r.degree,
                    matrices: r
                        .matrices
                        .iter()
                        .map(|m| {
                            (0..r.degree)
                                .map(|i| (0..r.degree).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect())
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("irrep data serializes")
    }
}

fn identity(d: usize) -> Matrix<Complex64> {
    Matrix::from_fn(d, d, |i, j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
}

fn mul(a: &Matrix<Complex64>, b: &Matrix<Complex64>) -> Matrix<Complex64> {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).map(|k| a.get(i, k) * b.get(k, j)).sum()
    })
}

fn adjoint(a: &Matrix<Complex64>) -> Matrix<Complex64> {
    Matrix::from_fn(a.cols(), a.rows(), |i, j| a.get(j, i).conj())
}

fn max_diff(a: &Matrix<Complex64>, b: &Matrix<Complex64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Unitary irreps of `S_3` (trivial, sign, standard) on the element order of
/// [`crate::groups::make_symmetric`], for tests and examples.
pub fn s3_irreps(group: &FiniteGroup) -> Result<IrrepMatrices> {
    let c = |re: f64| Complex64::new(re, 0.0);
    let mut triv = Vec::new();
    let mut sign = Vec::new();
    let mut std = Vec::new();
    for g in group.elements() {
        let perm = group
            .permutation(g)
            .filter(|p| p.len() == 3)
            .ok_or_else(|| Error::invalid("S_3 irreps need the symmetric group on 3 points"))?;
        triv.push(Matrix::filled(1, 1, c(1.0)));
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        sign.push(Matrix::filled(1, 1, c(if inversions % 2 == 0 { 1.0 } else { -1.0 })));
        // permutation action on the plane x + y + z = 0, orthonormal basis
        // u = (e0 - e1)/sqrt2, v = (e0 + e1 - 2 e2)/sqrt6
        let basis = [
            [1.0 / 2f64.sqrt(), -1.0 / 2f64.sqrt(), 0.0],
            [1.0 / 6f64.sqrt(), 1.0 / 6f64.sqrt(), -2.0 / 6f64.sqrt()],
        ];
        let image = |b: &[f64; 3]| {
            let mut out = [0.0; 3];
            for i in 0..3 {
                out[perm[i]] = b[i];
            }
            out
        };
        let m = Matrix::from_fn(2, 2, |i, j| {
            let img = image(&basis[j]);
            c((0..3).map(|t| basis[i][t] * img[t]).sum())
        });
        std.push(m);
    }
    IrrepMatrices::new(
        group,
        vec![
            Irrep { label: "[3]".into(), degree: 1, matrices: triv },
            Irrep { label: "[2,1]".into(), degree: 2, matrices: std },
            Irrep { label: "[1,1,1]".into(), degree: 1, matrices: sign },
        ],
    )
}
