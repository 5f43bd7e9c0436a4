//! Character tables, class functions, and Fourier analysis on finite groups.
//!
//! A [`CharacterTable`] always lists its columns in the conjugacy-class order
//! of its group. Tables are either entirely exact (rational entries) or
//! entirely approximate (complex `f64` pairs).

mod abelian;
mod bochner;
mod functions;
mod io;
mod irreps;
mod symmetric;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use abelian::abelian_character_table;
pub use bochner::{is_positive_type, is_positive_type_class, PositivityVerdict, Spectrum};
pub use functions::{convolve, fourier_class_scalars, involute, ClassFunction, GroupFunction};
pub use io::{
    attach_to_group, export_character_table, import_character_table, parse_character_table,
    table_to_json, JsonEntries, JsonScalar, TableFile,
};
pub use irreps::{s3_irreps, Irrep, IrrepMatrices, IRREP_TOL};
pub use symmetric::{murnaghan_nakayama, symmetric_character_table, symmetric_table_for};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::scalar::{rational_to_f64, Scalar};

/// Tolerance for orthogonality checks on approximate tables, per unit of
/// group order.
pub const ORTHOGONALITY_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub enum TableEntries {
    Exact(Matrix<BigRational>),
    Approx(Matrix<Complex64>),
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    irrep_labels: Vec<String>,
    degrees: Vec<usize>,
    entries: TableEntries,
    trivial_index: usize,
}

impl CharacterTable {
    /// Validates every table invariant before returning.
    pub fn new(
        group: FiniteGroup,
        irrep_labels: Vec<String>,
        degrees: Vec<usize>,
        entries: TableEntries,
    ) -> Result<Self> {
        let (rows, cols) = match &entries {
            TableEntries::Exact(m) => (m.rows(), m.cols()),
            TableEntries::Approx(m) => (m.rows(), m.cols()),
        };
        if cols != group.class_count() {
            return Err(Error::Schema(format!(
                "table has {cols} columns, group has {} classes",
                group.class_count()
            )));
        }
        if rows != cols || degrees.len() != rows || irrep_labels.len() != rows {
            return Err(Error::Schema(format!(
                "table is {rows}x{cols} with {} degrees and {} labels",
                degrees.len(),
                irrep_labels.len()
            )));
        }
        let mut table = CharacterTable {
            group,
            irrep_labels,
            degrees,
            entries,
            trivial_index: 0,
        };
        table.trivial_index = table.validate()?;
        Ok(table)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn irrep_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn class_count(&self) -> usize {
        self.group.class_count()
    }

    pub fn degree(&self, irrep: usize) -> usize {
        self.degrees[irrep]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn irrep_label(&self, irrep: usize) -> &str {
        &self.irrep_labels[irrep]
    }

    pub fn irrep_labels(&self) -> &[String] {
        &self.irrep_labels
    }

    pub fn irrep_index(&self, label: &str) -> Option<usize> {
        self.irrep_labels.iter().position(|l| l == label)
    }

    pub fn trivial_index(&self) -> usize {
        self.trivial_index
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, TableEntries::Exact(_))
    }

    pub fn entries(&self) -> &TableEntries {
        &self.entries
    }

    /// `chi_irrep` on the given class.
    pub fn entry(&self, irrep: usize, class: usize) -> Scalar {
        match &self.entries {
            TableEntries::Exact(m) => Scalar::Exact(m.get(irrep, class).clone()),
            TableEntries::Approx(m) => Scalar::Approx(*m.get(irrep, class)),
        }
    }

    pub fn entry_complex(&self, irrep: usize, class: usize) -> Complex64 {
        match &self.entries {
            TableEntries::Exact(m) => Complex64::new(rational_to_f64(m.get(irrep, class)), 0.0),
            TableEntries::Approx(m) => *m.get(irrep, class),
        }
    }

    /// `chi_irrep(g)` for an element.
    pub fn character_value(&self, irrep: usize, element: usize) -> Scalar {
        self.entry(irrep, self.group.class_of(element))
    }

    /// The same table with every entry converted to floating point.
    pub fn to_approx(&self) -> CharacterTable {
        let entries = match &self.entries {
            TableEntries::Exact(m) => {
                TableEntries::Approx(m.map(|r| Complex64::new(rational_to_f64(r), 0.0)))
            }
            TableEntries::Approx(m) => TableEntries::Approx(m.clone()),
        };
        CharacterTable {
            entries,
            ..self.clone()
        }
    }

    /// Index of the irrep whose character is the complex conjugate of
    /// `irrep`'s.
    pub fn conjugate_irrep(&self, irrep: usize) -> usize {
        let tol = ORTHOGONALITY_TOL;
        (0..self.irrep_count())
            .find(|&other| {
                (0..self.class_count()).all(|c| {
                    self.entry(other, c)
                        .approx_eq(&self.entry(irrep, c).conj(), tol)
                })
            })
            .unwrap_or(irrep)
    }

    /// Checks degrees, the trivial row, and both orthogonality relations;
    /// returns the trivial irrep's index.
    pub fn validate(&self) -> Result<usize> {
        let order = self.group.order();
        let sizes: Vec<usize> = self.group.classes().iter().map(|c| c.size).collect();
        check_table(&self.entries, &self.degrees, &sizes, order)
    }
}

/// Invariant checks shared by construction and import. Column 0 must be the
/// identity class.
pub(crate) fn check_table(
    entries: &TableEntries,
    degrees: &[usize],
    class_sizes: &[usize],
    order: usize,
) -> Result<usize> {
    let k = degrees.len();
    let sum_sq: usize = degrees.iter().map(|d| d * d).sum();
    if sum_sq != order {
        return Err(Error::CorruptTable {
            relation: "sum of squared degrees",
            pair: (0, 0),
            deviation: sum_sq as f64 - order as f64,
        });
    }
    let value = |i: usize, c: usize| match entries {
        TableEntries::Exact(m) => Scalar::Exact(m.get(i, c).clone()),
        TableEntries::Approx(m) => Scalar::Approx(*m.get(i, c)),
    };
    let tol = ORTHOGONALITY_TOL * order as f64;
    for (i, &d) in degrees.iter().enumerate() {
        let dev = value(i, 0) - Scalar::int(d as i64);
        if !dev.is_zero_tol(tol) {
            return Err(Error::CorruptTable {
                relation: "identity column equals degrees",
                pair: (i, 0),
                deviation: dev.abs_f64(),
            });
        }
    }
    let trivial = (0..k)
        .find(|&i| (0..k).all(|c| value(i, c).approx_eq(&Scalar::one(), tol)))
        .ok_or(Error::CorruptTable {
            relation: "trivial character present",
            pair: (0, 0),
            deviation: 1.0,
        })?;
    let ord = Scalar::int(order as i64);
    for i in 0..k {
        for j in i..k {
            let mut s = Scalar::zero();
            for (c, &size) in class_sizes.iter().enumerate() {
                s = s + Scalar::int(size as i64) * value(i, c) * value(j, c).conj();
            }
            let expected = if i == j { ord.clone() } else { Scalar::zero() };
            let dev = s - expected;
            if !dev.is_zero_tol(tol) {
                return Err(Error::CorruptTable {
                    relation: "row orthogonality",
                    pair: (i, j),
                    deviation: dev.abs_f64(),
                });
            }
        }
    }
    for c in 0..k {
        for e in c..k {
            let mut s = Scalar::zero();
            for i in 0..k {
                s = s + value(i, c) * value(i, e).conj();
            }
            let expected = if c == e {
                Scalar::Exact(BigRational::new(order.into(), class_sizes[c].into()))
            } else {
                Scalar::zero()
            };
            let dev = s - expected;
            if !dev.is_zero_tol(tol) {
                return Err(Error::CorruptTable {
                    relation: "column orthogonality",
                    pair: (c, e),
                    deviation: dev.abs_f64(),
                });
            }
        }
    }
    Ok(trivial)
}

pub(crate) fn exact_int(v: i64) -> BigRational {
    if v == 1 {
        BigRational::one()
    } else if v == 0 {
        BigRational::zero()
    } else {
        BigRational::from_integer(v.into())
    }
}
