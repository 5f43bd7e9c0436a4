//! Positive-type certification through the Fourier transform.
//!
//! A function is of positive type iff every Fourier matrix
//! `f^(pi) = sum_g f(g) pi(g)` is positive semidefinite. For class functions
//! these matrices are `c_pi I`, so it suffices that every scalar `c_pi` is
//! real and nonnegative; on abelian groups the same holds with
//! `f^(chi) = sum_g f(g) chi(g)`.

use num_complex::Complex64;

use super::{fourier_class_scalars, CharacterTable, ClassFunction, GroupFunction, IrrepMatrices};
use crate::error::{Error, Result};
use crate::linalg::{psd_approx, PsdOutcome};
use crate::scalar::{Scalar, APPROX_TOL};

/// Representation data for a positivity test.
#[derive(Clone, Copy, Debug)]
pub enum Spectrum<'a> {
    Characters(&'a CharacterTable),
    Irreps(&'a IrrepMatrices),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PositivityVerdict {
    pub positive: bool,
    /// Offending irrep (index and label) and a violating value: a negative
    /// or non-real scalar, or a negative eigenvalue.
    pub witness: Option<(usize, String, Scalar)>,
}

impl PositivityVerdict {
    fn accept() -> Self {
        PositivityVerdict {
            positive: true,
            witness: None,
        }
    }

    fn reject(irrep: usize, label: &str, value: Scalar) -> Self {
        PositivityVerdict {
            positive: false,
            witness: Some((irrep, label.to_string(), value)),
        }
    }
}

/// Tolerance for approximate data, scaled by the function's total mass.
fn tolerance(values: &[Scalar], weights: impl Iterator<Item = usize>) -> f64 {
    let mass: f64 = values
        .iter()
        .zip(weights)
        .map(|(v, w)| v.abs_f64() * w as f64)
        .sum();
    APPROX_TOL * mass.max(1.0)
}

fn check_scalars(scalars: &[Scalar], labels: &[String], tol: f64) -> PositivityVerdict {
    for (i, c) in scalars.iter().enumerate() {
        if !c.is_real_tol(tol) || c.sign_tol(tol) == std::cmp::Ordering::Less {
            return PositivityVerdict::reject(i, &labels[i], c.clone());
        }
    }
    PositivityVerdict::accept()
}

pub fn is_positive_type_class(f: &ClassFunction, table: &CharacterTable) -> Result<PositivityVerdict> {
    let scalars = fourier_class_scalars(f, table)?;
    let tol = tolerance(f.values(), f.group().classes().iter().map(|c| c.size));
    Ok(check_scalars(&scalars, table.irrep_labels(), tol))
}

pub fn is_positive_type(f: &GroupFunction, spectrum: Spectrum<'_>) -> Result<PositivityVerdict> {
    match spectrum {
        Spectrum::Characters(table) => {
            if !f.group().same_as(table.group()) {
                return Err(Error::invalid("function and character table use different groups"));
            }
            if let Some(cf) = f.to_class_function() {
                return is_positive_type_class(&cf, table);
            }
            if table.degrees().iter().any(|&d| d != 1) {
                return Err(Error::NeedsIrreps);
            }
            let group = f.group();
            let scalars: Vec<Scalar> = (0..table.irrep_count())
                .map(|i| {
                    group.elements().fold(Scalar::zero(), |acc, g| {
                        acc + f.value(g).clone() * table.character_value(i, g)
                    })
                })
                .collect();
            let tol = tolerance(f.values(), std::iter::repeat(1));
            Ok(check_scalars(&scalars, table.irrep_labels(), tol))
        }
        Spectrum::Irreps(reps) => {
            let tol = tolerance(f.values(), std::iter::repeat(1));
            for (i, rep) in reps.irreps().iter().enumerate() {
                let m = reps.fourier(f, i)?;
                match psd_approx(&m, tol) {
                    PsdOutcome::Psd => {}
                    PsdOutcome::Negative(v) => return Ok(PositivityVerdict::reject(i, &rep.label, v)),
                    PsdOutcome::NotHermitian(a, b) => {
                        let gap: Complex64 = m.get(a, b) - m.get(b, a).conj();
                        return Ok(PositivityVerdict::reject(i, &rep.label, Scalar::Approx(gap)));
                    }
                }
            }
            Ok(PositivityVerdict::accept())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{abelian_character_table, s3_irreps, symmetric_character_table};
    use crate::groups::{make_abelian_product, make_symmetric};

    #[test]
    fn point_mass_is_positive() {
        let t = symmetric_character_table(4).unwrap();
        let v = is_positive_type_class(&ClassFunction::delta_identity(t.group()), &t).unwrap();
        assert!(v.positive);
    }

    #[test]
    fn cyclic_two_shift_is_not_positive() {
        let g = make_abelian_product(&[2]).unwrap();
        let t = abelian_character_table(&g).unwrap();
        let f = GroupFunction::delta(&g, 1);
        let v = is_positive_type(&f, Spectrum::Characters(&t)).unwrap();
        assert!(!v.positive);
        let (irrep, _, value) = v.witness.unwrap();
        assert_eq!(irrep, 1);
        assert_eq!(value, Scalar::int(-1));
    }

    #[test]
    fn constant_on_s3() {
        let t = symmetric_character_table(3).unwrap();
        let f = ClassFunction::constant(t.group(), Scalar::one());
        assert!(is_positive_type_class(&f, &t).unwrap().positive);
    }

    #[test]
    fn non_class_function_needs_irreps() {
        let g = make_symmetric(3).unwrap();
        let t = symmetric_character_table(3).unwrap();
        let f = GroupFunction::delta(&g, 1);
        assert!(matches!(
            is_positive_type(&f, Spectrum::Characters(&t)),
            Err(Error::NeedsIrreps)
        ));
        let reps = s3_irreps(&g).unwrap();
        // a point mass off the identity is never of positive type
        assert!(!is_positive_type(&f, Spectrum::Irreps(&reps)).unwrap().positive);
        let e = GroupFunction::delta(&g, 0);
        assert!(is_positive_type(&e, Spectrum::Irreps(&reps)).unwrap().positive);
    }
}
