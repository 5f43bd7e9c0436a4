//! Lovász theta of Cayley graphs.
//!
//! For a connection set closed under conjugation, theta is the optimum of
//! the character LP
//!
//! ```text
//! max a_1  s.t.  sum_pi d_pi^2 a_pi = |G|,
//!                sum_pi d_pi a_pi chi_pi(x) = 0   (x in X),   a >= 0,
//! ```
//!
//! with one constraint per class of `X`, one class per inverse pair, complex
//! rows split into real and imaginary parts, and zero or proportional rows
//! removed. The optimal `a` induces the class function
//! `f = (1/|G|) sum_pi d_pi a_pi chi_pi`, which is of positive type, equals 1
//! at the identity, vanishes on `X`, and sums to theta.
//!
//! Connection sets that are not conjugation-closed can only be exported as
//! SDPs ([`build_sdp_a`], [`build_sdp_c`]).

mod certificate;
mod matrix;
mod sdp;

use std::cmp::Ordering;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use certificate::{certificate_json, validate_certificate};
pub use matrix::{extract_matrix_solution, matrix_objective, symmetrize_matrix, MATRIX_LIMIT};
pub use sdp::{
    build_sdp_a, build_sdp_c, export_sdpa, parse_sdpa, read_sdpa, write_sdpa, SdpEntry, SdpInstance,
    SDP_LIMIT,
};

use crate::characters::{CharacterTable, ClassFunction, TableEntries};
use crate::error::{Error, Result};
use crate::graphs::ConnectionSet;
use crate::groups::FiniteGroup;
use crate::scalar::Scalar;
use crate::simplex::{solve, ExactLp, FloatLp, LpInstance, LpNumber, LpSolution, LpStatus};

/// Threshold for zero and duplicate detection of float LP rows.
pub const ROW_TOL: f64 = 1e-12;

/// `Cay(group, connection)`.
#[derive(Clone, Debug)]
pub struct CayleyGraphSpec {
    group: FiniteGroup,
    connection: ConnectionSet,
}

impl CayleyGraphSpec {
    pub fn new(group: &FiniteGroup, connection: ConnectionSet) -> Result<Self> {
        if !connection.group().same_as(group) {
            return Err(Error::invalid("connection set belongs to a different group"));
        }
        connection.validate()?;
        Ok(CayleyGraphSpec {
            group: group.clone(),
            connection,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn connection(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn conjugation_closed(&self) -> bool {
        self.connection.is_conjugation_closed()
    }
}

/// What an LP row encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOrigin {
    Normalization,
    /// Real part of the constraint for a class.
    Real(usize),
    /// Imaginary part of the constraint for a class.
    Imag(usize),
}

#[derive(Clone, Debug)]
pub enum ThetaLpData {
    Exact(ExactLp),
    Float(FloatLp),
}

/// The character LP with its row and column meaning.
#[derive(Clone, Debug)]
pub struct ThetaLp {
    pub data: ThetaLpData,
    /// One entry per LP row.
    pub rows: Vec<RowOrigin>,
    /// Column `i` is irrep `i` of the table.
    pub irrep_labels: Vec<String>,
    pub trivial_index: usize,
}

impl ThetaLp {
    pub fn is_exact(&self) -> bool {
        matches!(self.data, ThetaLpData::Exact(_))
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.irrep_labels.len()
    }

    pub fn dump(&self) -> String {
        match &self.data {
            ThetaLpData::Exact(lp) => lp.dump(),
            ThetaLpData::Float(lp) => lp.dump(),
        }
    }
}

/// Classes of `X` keeping one of each inverse pair.
pub fn retained_classes(group: &FiniteGroup, connection: &ConnectionSet) -> Result<Vec<usize>> {
    let classes = connection.classes().ok_or(Error::WrongFormulation)?;
    Ok(classes
        .iter()
        .copied()
        .filter(|&c| c <= group.classes()[c].inverse_class)
        .collect())
}

pub fn build_lp_d(spec: &CayleyGraphSpec, table: &CharacterTable) -> Result<ThetaLp> {
    if !table.group().same_as(&spec.group) {
        return Err(Error::invalid("character table belongs to a different group"));
    }
    let retained = retained_classes(&spec.group, &spec.connection)?;
    let k = table.irrep_count();
    let order = spec.group.order() as i64;
    let degrees = table.degrees();
    let trivial = table.trivial_index();
    let labels = table.irrep_labels().to_vec();
    let mut rows = vec![RowOrigin::Normalization];
    let data = match table.entries() {
        TableEntries::Exact(m) => {
            let int = |v: i64| BigRational::from_integer(v.into());
            let mut matrix = vec![degrees.iter().map(|&d| int((d * d) as i64)).collect::<Vec<_>>()];
            let mut rhs = vec![int(order)];
            let mut seen: Vec<Vec<BigRational>> = Vec::new();
            for &c in &retained {
                let row: Vec<BigRational> =
                    (0..k).map(|i| int(degrees[i] as i64) * m.get(i, c)).collect();
                if row.iter().all(Zero::is_zero) {
                    continue;
                }
                let pivot = row.iter().find(|v| !v.is_zero()).expect("nonzero row").clone();
                let normalized: Vec<BigRational> = row.iter().map(|v| v / &pivot).collect();
                if seen.contains(&normalized) {
                    continue;
                }
                seen.push(normalized);
                matrix.push(row);
                rhs.push(int(0));
                rows.push(RowOrigin::Real(c));
            }
            let mut objective = vec![int(0); k];
            objective[trivial] = int(1);
            ThetaLpData::Exact(LpInstance::new(objective, matrix, rhs)?)
        }
        TableEntries::Approx(m) => {
            let mut matrix = vec![degrees.iter().map(|&d| (d * d) as f64).collect::<Vec<_>>()];
            let mut rhs = vec![order as f64];
            let mut seen: Vec<Vec<f64>> = Vec::new();
            for &c in &retained {
                let values: Vec<Complex64> = (0..k).map(|i| m.get(i, c) * degrees[i] as f64).collect();
                for (part, origin) in [
                    (values.iter().map(|z| z.re).collect::<Vec<f64>>(), RowOrigin::Real(c)),
                    (values.iter().map(|z| z.im).collect::<Vec<f64>>(), RowOrigin::Imag(c)),
                ] {
                    let scale = part.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
                    if scale <= ROW_TOL {
                        continue;
                    }
                    let pivot = *part.iter().find(|v| v.abs() > ROW_TOL * scale).expect("nonzero row");
                    let normalized: Vec<f64> = part.iter().map(|v| v / pivot).collect();
                    let duplicate = seen.iter().any(|s| {
                        s.iter().zip(&normalized).all(|(a, b)| (a - b).abs() <= ROW_TOL.max(1e-12 * b.abs()) * 1e3)
                    });
                    if duplicate {
                        continue;
                    }
                    seen.push(normalized);
                    matrix.push(part);
                    rhs.push(0.0);
                    rows.push(origin);
                }
            }
            let mut objective = vec![0.0; k];
            objective[trivial] = 1.0;
            ThetaLpData::Float(LpInstance::new(objective, matrix, rhs)?)
        }
    };
    Ok(ThetaLp {
        data,
        rows,
        irrep_labels: labels,
        trivial_index: trivial,
    })
}

/// Optimal LP point with the induced positive-type class function.
#[derive(Clone, Debug)]
pub struct ThetaCertificate {
    pub objective: Scalar,
    /// `a_pi`, one per irrep in table order.
    pub a: Vec<Scalar>,
    pub irrep_labels: Vec<String>,
    pub f: ClassFunction,
    pub exact: bool,
    /// LP dual multipliers, one per LP row.
    pub dual: Vec<Scalar>,
    pub lp_rows: usize,
    pub lp_cols: usize,
}

impl ThetaCertificate {
    pub fn group(&self) -> &FiniteGroup {
        self.f.group()
    }

    /// Theta as `p/q` (exact) or a decimal.
    pub fn theta_text(&self) -> String {
        match &self.objective {
            Scalar::Exact(r) => r.to_string(),
            Scalar::Approx(z) => format!("{:.7}", z.re),
        }
    }
}

fn lp_solution<T: LpNumber>(lp: &LpInstance<T>) -> Result<LpSolution<T>> {
    let solution = solve(lp)?;
    match solution.status {
        LpStatus::Optimal => Ok(solution),
        status => Err(Error::Internal(format!("character LP reported {status}"))),
    }
}

/// Solves the character LP in the table's arithmetic and returns a
/// certificate that has passed [`validate_certificate`].
pub fn solve_theta(spec: &CayleyGraphSpec, table: &CharacterTable) -> Result<ThetaCertificate> {
    let lp = build_lp_d(spec, table)?;
    let (mut a, dual): (Vec<Scalar>, Vec<Scalar>) = match &lp.data {
        ThetaLpData::Exact(inst) => {
            let s = lp_solution(inst)?;
            (
                s.x.into_iter().map(Scalar::Exact).collect(),
                s.dual.into_iter().map(Scalar::Exact).collect(),
            )
        }
        ThetaLpData::Float(inst) => {
            let s = lp_solution(inst)?;
            (
                s.x.into_iter().map(Scalar::real).collect(),
                s.dual.into_iter().map(Scalar::real).collect(),
            )
        }
    };
    // average over complex conjugation so that f is real
    let k = table.irrep_count();
    let conj: Vec<usize> = (0..k).map(|i| table.conjugate_irrep(i)).collect();
    if conj.iter().enumerate().any(|(i, &j)| i != j) {
        let half = Scalar::ratio(1, 2);
        a = (0..k)
            .map(|i| (a[i].clone() + a[conj[i]].clone()) * half.clone())
            .collect();
    }
    let group = spec.group.clone();
    let order = Scalar::int(group.order() as i64);
    let mut values: Vec<Scalar> = (0..group.class_count())
        .map(|c| {
            (0..k).fold(Scalar::zero(), |acc, i| {
                acc + Scalar::int(table.degree(i) as i64) * a[i].clone() * table.entry(i, c)
            }) / order.clone()
        })
        .collect();
    if !table.is_exact() {
        // f(g) and f(g^{-1}) are conjugate; keep the common real part
        values = (0..values.len())
            .map(|c| {
                let inv = group.classes()[c].inverse_class;
                Scalar::real((values[c].to_complex() + values[inv].to_complex()).re / 2.0)
            })
            .collect();
    }
    let certificate = ThetaCertificate {
        objective: a[lp.trivial_index].clone(),
        a,
        irrep_labels: lp.irrep_labels.clone(),
        f: ClassFunction::new(&group, values)?,
        exact: lp.is_exact(),
        dual,
        lp_rows: lp.row_count(),
        lp_cols: lp.column_count(),
    };
    if let Err(violation) = validate_certificate(spec, table, &certificate) {
        return Err(if certificate.exact {
            Error::Internal(format!("certificate check failed: {violation}"))
        } else {
            Error::NumericalFailure(format!("certificate check failed: {violation}"))
        });
    }
    Ok(certificate)
}

/// Sign of an exact or approximate real value with tolerance.
pub(crate) fn sign_of(value: &Scalar, tol: f64) -> Ordering {
    match value {
        Scalar::Exact(r) => {
            if r.is_zero() {
                Ordering::Equal
            } else if r.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        other => other.sign_tol(tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{abelian_character_table, symmetric_character_table};
    use crate::groups::make_abelian_product;

    #[test]
    fn s3_lp_shape() {
        let t = symmetric_character_table(3).unwrap();
        let x = ConnectionSet::from_classes(t.group(), &[2]).unwrap();
        let spec = CayleyGraphSpec::new(t.group(), x).unwrap();
        let lp = build_lp_d(&spec, &t).unwrap();
        // columns (trivial, standard, sign); rows normalization and the 3-cycle class
        assert_eq!(lp.dump(), "lp exact 2 3\nmax 1 0 0\n1 4 1 = 6\n1 -2 1 = 0\n");
        let cert = solve_theta(&spec, &t).unwrap();
        assert_eq!(cert.objective, Scalar::int(2));
        assert_eq!(cert.a, vec![Scalar::int(2), Scalar::int(1), Scalar::int(0)]);
        // f = (1, 1/3, 0) on identity, transpositions, 3-cycles
        assert_eq!(cert.f.values(), &[Scalar::one(), Scalar::ratio(1, 3), Scalar::zero()]);
    }

    #[test]
    fn empty_and_complete() {
        let t = symmetric_character_table(3).unwrap();
        let g = t.group();
        let empty = CayleyGraphSpec::new(g, ConnectionSet::empty(g)).unwrap();
        assert_eq!(solve_theta(&empty, &t).unwrap().objective, Scalar::int(6));
        let full = CayleyGraphSpec::new(g, ConnectionSet::all_nonidentity(g)).unwrap();
        assert_eq!(solve_theta(&full, &t).unwrap().objective, Scalar::int(1));
    }

    #[test]
    fn five_cycle_is_sqrt_five() {
        let g = make_abelian_product(&[5]).unwrap();
        let t = abelian_character_table(&g).unwrap();
        let spec = CayleyGraphSpec::new(&g, ConnectionSet::new(&g, vec![1, 4]).unwrap()).unwrap();
        let cert = solve_theta(&spec, &t).unwrap();
        assert!((cert.objective.re() - 5f64.sqrt()).abs() < 1e-9);
        assert_eq!(cert.theta_text(), "2.2360680");
    }

    #[test]
    fn non_closed_connection_is_rejected() {
        let t = symmetric_character_table(3).unwrap();
        let g = t.group();
        let x = ConnectionSet::new(g, vec![g.classes()[1].members[0]]).unwrap();
        let spec = CayleyGraphSpec::new(g, x).unwrap();
        assert!(matches!(build_lp_d(&spec, &t), Err(Error::WrongFormulation)));
    }
}
