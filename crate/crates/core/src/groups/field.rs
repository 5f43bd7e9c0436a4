//! Small finite fields by lookup table.
//!
//! An element of `F_{p^d}` is encoded as the integer `c_0 + c_1 p + ... +
//! c_{d-1} p^{d-1}` for the polynomial `c_0 + c_1 x + ... + c_{d-1} x^{d-1}`
//! reduced modulo a fixed Conway polynomial:
//!
//! | q | modulus         |
//! |---|-----------------|
//! | 4 | x^2 + x + 1     |
//! | 8 | x^3 + x + 1     |
//! | 9 | x^2 + 2x + 2    |
//!
//! Prime fields use ordinary residues.

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Low-to-high coefficients of the monic modulus.
fn conway_polynomial(p: usize, degree: usize) -> Option<&'static [usize]> {
    match (p, degree) {
        (2, 2) => Some(&[1, 1, 1]),
        (2, 3) => Some(&[1, 1, 0, 1]),
        (3, 2) => Some(&[2, 2, 1]),
        _ => None,
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut degree = 0;
    while rest % p == 0 {
        rest /= p;
        degree += 1;
    }
    (rest == 1).then_some((p, degree))
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, degree) =
            prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(Error::invalid(format!(
                "field order {q} unsupported (supported: {SUPPORTED_ORDERS:?})"
            )));
        }
        let to_poly = |mut a: usize| {
            let mut c = vec![0; degree];
            for slot in c.iter_mut() {
                *slot = a % p;
                a /= p;
            }
            c
        };
        let from_poly = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
        let modulus = if degree == 1 {
            None
        } else {
            Some(conway_polynomial(p, degree).expect("supported order"))
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (pa, pb) = (to_poly(a), to_poly(b));
                let sum: Vec<usize> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = from_poly(&sum) as u8;

                let mut prod = vec![0; 2 * degree - 1];
                for (i, x) in pa.iter().enumerate() {
                    for (j, y) in pb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if let Some(m) = modulus {
                    // x^degree = -(m_0 + ... + m_{d-1} x^{d-1})
                    for k in (degree..prod.len()).rev() {
                        let lead = prod[k];
                        if lead == 0 {
                            continue;
                        }
                        prod[k] = 0;
                        for (t, &mt) in m[..degree].iter().enumerate() {
                            let idx = k - degree + t;
                            prod[idx] = (prod[idx] + p * p - lead * mt % p) % p;
                        }
                    }
                }
                mul[a * q + b] = from_poly(&prod[..degree]) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).expect("additive inverse") as u8)
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| Error::Internal(format!("no inverse of {a} in F_{q}")))?
                as u8;
        }
        Ok(FiniteField {
            q,
            p,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            let q8 = q as u8;
            for a in 0..q8 {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q8 {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q8 {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_for_conway_moduli() {
        // x (encoded as p) is primitive for Conway polynomials
        for q in [4usize, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            let x = f.characteristic() as u8;
            let mut power = 1u8;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..q - 1 {
                seen.insert(power);
                power = f.mul(power, x);
            }
            assert_eq!(seen.len(), q - 1);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 11, 12] {
            assert!(FiniteField::new(q).is_err(), "{q}");
        }
    }
}
