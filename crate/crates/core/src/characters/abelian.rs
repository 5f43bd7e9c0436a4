//! Characters of abelian products `Z_{m_1} x ... x Z_{m_r}`.
//!
//! Irreps are indexed by tuples `j` encoded in the same mixed radix as the
//! elements, with `chi_j(x) = exp(2 pi i sum_t j_t x_t / m_t)`. Values are
//! exact only when every modulus is 2; otherwise they are stored as
//! approximate complex numbers, with the quarter-turn values `1, i, -1, -i`
//! placed exactly on the axes.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;

use super::{exact_int, CharacterTable, TableEntries};
use crate::error::{Error, Result};
use crate::groups::{abelian_digits, FiniteGroup, GroupKind};
use crate::linalg::Matrix;

pub fn abelian_character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    let GroupKind::AbelianProduct { moduli } = group.kind() else {
        return Err(Error::invalid(format!(
            "abelian character table needs an abelian-product group, got {}",
            group.kind().name()
        )));
    };
    let n = group.order();
    let lcm = moduli.iter().fold(1usize, |acc, &m| acc.lcm(&m));
    // phase(j, x) in units of 1/lcm
    let digits: Vec<Vec<usize>> = (0..n).map(|a| abelian_digits(&moduli, a)).collect();
    let phase = |j: usize, x: usize| -> usize {
        digits[j]
            .iter()
            .zip(&digits[x])
            .zip(&moduli)
            .map(|((&jt, &xt), &m)| (jt * xt % m) * (lcm / m))
            .sum::<usize>()
            % lcm
    };
    let entries = if moduli.iter().all(|&m| m == 2) {
        TableEntries::Exact(Matrix::from_fn(n, n, |j, x| {
            exact_int(if phase(j, x) == 0 { 1 } else { -1 })
        }))
    } else {
        TableEntries::Approx(Matrix::from_fn(n, n, |j, x| root_of_unity(phase(j, x), lcm)))
    };
    let labels = (0..n)
        .map(|j| {
            let parts: Vec<String> = digits[j].iter().map(usize::to_string).collect();
            format!("chi({})", parts.join(","))
        })
        .collect();
    CharacterTable::new(group.clone(), labels, vec![1; n], entries)
}

/// `exp(2 pi i k / m)` with exact axis values.
fn root_of_unity(k: usize, m: usize) -> Complex64 {
    if 4 * k % m == 0 {
        return match 4 * k / m {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, TAU * k as f64 / m as f64)
}
