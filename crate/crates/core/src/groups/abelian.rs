use super::{ClassAssignment, FiniteGroup, GroupKind, GroupLaw};
use crate::error::{Error, Result};

/// `Z_{m_1} x ... x Z_{m_r}` with mixed-radix element indices: the first
/// coordinate is the most significant digit.
struct AbelianLaw {
    moduli: Vec<usize>,
    order: usize,
}

impl AbelianLaw {
    fn decode(&self, a: usize) -> Vec<usize> {
        abelian_digits(&self.moduli, a)
    }

    fn encode(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&d, &m)| acc * m + d)
    }
}

impl GroupLaw for AbelianLaw {
    fn kind(&self) -> GroupKind {
        GroupKind::AbelianProduct {
            moduli: self.moduli.clone(),
        }
    }

    fn order(&self) -> usize {
        self.order
    }

    fn multiply(&self, a: usize, b: usize) -> usize {
        let x = self.decode(a);
        let y = self.decode(b);
        let sum: Vec<usize> = x
            .iter()
            .zip(&y)
            .zip(&self.moduli)
            .map(|((&p, &q), &m)| (p + q) % m)
            .collect();
        self.encode(&sum)
    }

    fn invert(&self, a: usize) -> usize {
        let neg: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.moduli)
            .map(|(&d, &m)| (m - d) % m)
            .collect();
        self.encode(&neg)
    }

    fn element_label(&self, a: usize) -> String {
        let digits = self.decode(a);
        if digits.len() == 1 {
            return digits[0].to_string();
        }
        let parts: Vec<String> = digits.iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    }

    fn class_label(&self, _index: usize, representative: usize) -> String {
        self.element_label(representative)
    }

    fn analytic_classes(&self) -> Option<ClassAssignment> {
        Some(ClassAssignment {
            labels: (0..self.order).map(|a| self.element_label(a)).collect(),
            class_of: (0..self.order).collect(),
        })
    }
}

/// Element coordinates of an abelian-product group element.
pub(crate) fn abelian_digits(moduli: &[usize], mut a: usize) -> Vec<usize> {
    let mut digits = vec![0; moduli.len()];
    for (d, &m) in digits.iter_mut().zip(moduli).rev() {
        *d = a % m;
        a /= m;
    }
    digits
}

pub fn make_abelian_product(moduli: &[usize]) -> Result<FiniteGroup> {
    if moduli.is_empty() {
        return Err(Error::invalid("at least one modulus required"));
    }
    if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
        return Err(Error::invalid(format!("modulus {m} < 2")));
    }
    let order = moduli
        .iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m))
        .filter(|&o| o <= 1 << 20)
        .ok_or_else(|| Error::invalid("abelian group too large"))?;
    FiniteGroup::from_law(AbelianLaw {
        moduli: moduli.to_vec(),
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four() {
        let g = make_abelian_product(&[2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.elements().all(|a| g.multiply(a, a) == 0));
        assert_eq!(g.element_label(2), "(1,0)");
    }

    #[test]
    fn mixed_radix_addition() {
        let g = make_abelian_product(&[2, 3]).unwrap();
        // (1,2) + (1,2) = (0,1)
        assert_eq!(g.multiply(5, 5), 1);
        assert_eq!(g.invert(1), 2);
    }

    #[test]
    fn z2_times_z3_is_cyclic() {
        // brute-force isomorphism search: some element generates the group
        let g = make_abelian_product(&[2, 3]).unwrap();
        let c6 = make_abelian_product(&[6]).unwrap();
        let generator = g
            .elements()
            .find(|&x| {
                let mut p = x;
                let mut k = 1;
                while p != 0 {
                    p = g.multiply(p, x);
                    k += 1;
                }
                k == 6
            })
            .expect("an element of order 6");
        let mut image = vec![0; 6];
        let mut p = 0;
        for slot in image.iter_mut() {
            *slot = p;
            p = g.multiply(p, generator);
        }
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(image[c6.multiply(a, b)], g.multiply(image[a], image[b]));
            }
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(make_abelian_product(&[]).is_err());
        assert!(make_abelian_product(&[3, 1]).is_err());
    }
}
