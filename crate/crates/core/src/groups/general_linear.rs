//! General linear groups `GL(n, F_q)` for small `q` and `n`.
//!
//! Index 0 is the identity matrix. The remaining invertible matrices follow
//! in increasing order of their row-major code, where the code reads the
//! entries as base-`q` digits with the top-left entry most significant (field
//! elements encoded as in [`FiniteField`]).

use std::fmt;

use super::field::FiniteField;
use super::{FiniteGroup, GroupKind, GroupLaw};
use crate::error::{Error, Result};

pub const GL_ORDER_LIMIT: usize = 10_000;

/// A square matrix over `F_q`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    pub n: usize,
    pub entries: Vec<u8>,
}

impl FqMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FqMatrix { n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &FqMatrix, field: &FiniteField) -> FqMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = field.add(acc, field.mul(self.get(i, k), other.get(k, j)));
                }
                entries[i * n + j] = acc;
            }
        }
        FqMatrix { n, entries }
    }

    pub fn sub(&self, other: &FqMatrix, field: &FiniteField) -> FqMatrix {
        FqMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn rank(&self, field: &FiniteField) -> usize {
        let n = self.n;
        let mut rows: Vec<Vec<u8>> = self.entries.chunks(n).map(<[u8]>::to_vec).collect();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..n).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = field.inv(rows[rank][c]);
            for r in 0..n {
                if r != rank && rows[r][c] != 0 {
                    let factor = field.mul(rows[r][c], inv);
                    for k in c..n {
                        let v = field.sub(rows[r][k], field.mul(factor, rows[rank][k]));
                        rows[r][k] = v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self, field: &FiniteField) -> Option<FqMatrix> {
        let n = self.n;
        let mut aug: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut row = self.entries[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| u8::from(i == j)));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| aug[r][c] != 0)?;
            aug.swap(c, p);
            let inv = field.inv(aug[c][c]);
            for v in aug[c].iter_mut() {
                *v = field.mul(*v, inv);
            }
            for r in 0..n {
                if r != c && aug[r][c] != 0 {
                    let factor = aug[r][c];
                    for k in 0..2 * n {
                        let v = field.sub(aug[r][k], field.mul(factor, aug[c][k]));
                        aug[r][k] = v;
                    }
                }
            }
        }
        Some(FqMatrix {
            n,
            entries: aug.into_iter().flat_map(|row| row[n..].to_vec()).collect(),
        })
    }

    fn code(&self, q: usize) -> usize {
        self.entries.iter().fold(0, |acc, &e| acc * q + e as usize)
    }

    fn from_code(mut code: usize, n: usize, q: usize) -> FqMatrix {
        let mut entries = vec![0; n * n];
        for slot in entries.iter_mut().rev() {
            *slot = (code % q) as u8;
            code /= q;
        }
        FqMatrix { n, entries }
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.n)
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u8::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

struct GeneralLinearLaw {
    q: usize,
    n: usize,
    field: FiniteField,
    elements: Vec<FqMatrix>,
    index_of_code: Vec<u32>,
    inverses: Vec<usize>,
}

impl GroupLaw for GeneralLinearLaw {
    fn kind(&self) -> GroupKind {
        GroupKind::GeneralLinear {
            q: self.q,
            n: self.n,
        }
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn multiply(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].mul(&self.elements[b], &self.field);
        self.index_of_code[prod.code(self.q)] as usize
    }

    fn invert(&self, a: usize) -> usize {
        self.inverses[a]
    }

    fn element_label(&self, a: usize) -> String {
        self.elements[a].to_string()
    }

    fn matrix(&self, a: usize) -> Option<FqMatrix> {
        Some(self.elements[a].clone())
    }
}

/// `prod_{i=0}^{n-1} (q^n - q^i)`, or `None` on overflow.
pub fn general_linear_order(q: usize, n: usize) -> Option<usize> {
    let qn = q.checked_pow(n as u32)?;
    (0..n).try_fold(1usize, |acc, i| acc.checked_mul(qn - q.pow(i as u32)))
}

pub fn make_general_linear(q: usize, n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::invalid("matrix size must be positive"));
    }
    let field = FiniteField::new(q)?;
    let order = general_linear_order(q, n)
        .filter(|&o| o <= GL_ORDER_LIMIT)
        .ok_or_else(|| {
            Error::invalid(format!("GL({n}, {q}) exceeds the order limit {GL_ORDER_LIMIT}"))
        })?;
    let codes = q.pow((n * n) as u32);
    let identity = FqMatrix::identity(n);
    let mut elements = vec![identity.clone()];
    for code in 0..codes {
        let m = FqMatrix::from_code(code, n, q);
        if m != identity && m.rank(&field) == n {
            elements.push(m);
        }
    }
    if elements.len() != order {
        return Err(Error::Internal(format!(
            "enumerated {} invertible matrices, expected {order}",
            elements.len()
        )));
    }
    let mut index_of_code = vec![u32::MAX; codes];
    for (i, m) in elements.iter().enumerate() {
        index_of_code[m.code(q)] = i as u32;
    }
    let inverses = elements
        .iter()
        .map(|m| {
            let inv = m.inverse(&field).expect("invertible by construction");
            index_of_code[inv.code(q)] as usize
        })
        .collect();
    FiniteGroup::from_law(GeneralLinearLaw {
        q,
        n,
        field,
        elements,
        index_of_code,
        inverses,
    })
}
