//! Complex-valued functions on a group and on its conjugacy classes.

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::scalar::{Scalar, APPROX_TOL};

use super::CharacterTable;

/// Largest group order for the quadratic convolution.
pub const CONVOLVE_LIMIT: usize = 5000;

/// A function constant on conjugacy classes, one value per class in the
/// group's class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: FiniteGroup,
    values: Vec<Scalar>,
}

impl ClassFunction {
    pub fn new(group: &FiniteGroup, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::invalid(format!(
                "class function has {} values for {} classes",
                values.len(),
                group.class_count()
            )));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    /// 1 on the identity class, 0 elsewhere.
    pub fn delta_identity(group: &FiniteGroup) -> Self {
        let mut values = vec![Scalar::zero(); group.class_count()];
        values[group.class_of(group.identity())] = Scalar::one();
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn constant(group: &FiniteGroup, value: Scalar) -> Self {
        ClassFunction {
            group: group.clone(),
            values: vec![value; group.class_count()],
        }
    }

    pub fn indicator(group: &FiniteGroup, classes: &[usize]) -> Result<Self> {
        let mut values = vec![Scalar::zero(); group.class_count()];
        for &c in classes {
            *values
                .get_mut(c)
                .ok_or_else(|| Error::invalid(format!("class index {c} out of range")))? = Scalar::one();
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Scalar {
        &self.values[class]
    }

    /// Value at an element.
    pub fn at(&self, element: usize) -> &Scalar {
        &self.values[self.group.class_of(element)]
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(Scalar::is_exact)
    }

    /// `sum_g f(g) = sum_C |C| f(C)`
    pub fn total(&self) -> Scalar {
        self.group
            .classes()
            .iter()
            .zip(&self.values)
            .fold(Scalar::zero(), |acc, (c, v)| acc + Scalar::int(c.size as i64) * v.clone())
    }

    pub fn to_group_function(&self) -> GroupFunction {
        GroupFunction {
            values: self.group.elements().map(|g| self.at(g).clone()).collect(),
            group: self.group.clone(),
        }
    }
}

/// A function on group elements, indexed by element.
#[derive(Clone, Debug)]
pub struct GroupFunction {
    group: FiniteGroup,
    values: Vec<Scalar>,
}

impl GroupFunction {
    pub fn new(group: &FiniteGroup, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::invalid(format!(
                "group function has {} values for a group of order {}",
                values.len(),
                group.order()
            )));
        }
        Ok(GroupFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn from_fn(group: &FiniteGroup, f: impl FnMut(usize) -> Scalar) -> Self {
        GroupFunction {
            values: group.elements().map(f).collect(),
            group: group.clone(),
        }
    }

    /// Point mass at `element`.
    pub fn delta(group: &FiniteGroup, element: usize) -> Self {
        Self::from_fn(group, |g| if g == element { Scalar::one() } else { Scalar::zero() })
    }

    pub fn indicator(group: &FiniteGroup, elements: &[usize]) -> Self {
        Self::from_fn(group, |g| {
            if elements.contains(&g) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, element: usize) -> &Scalar {
        &self.values[element]
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(Scalar::is_exact)
    }

    pub fn total(&self) -> Scalar {
        Scalar::sum(&self.values)
    }

    /// `sum_g f(g) conj(g(g))`
    pub fn inner(&self, other: &GroupFunction) -> Result<Scalar> {
        same_group(&self.group, &other.group)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a.clone() * b.conj()))
    }

    /// The class function with the same values, if `self` is constant on
    /// classes (exactly, or within the default tolerance for approximate
    /// values).
    pub fn to_class_function(&self) -> Option<ClassFunction> {
        let mut values = Vec::with_capacity(self.group.class_count());
        for class in self.group.classes() {
            let first = &self.values[class.members[0]];
            if class
                .members
                .iter()
                .any(|&m| !self.values[m].approx_eq(first, APPROX_TOL))
            {
                return None;
            }
            values.push(first.clone());
        }
        Some(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }
}

fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::invalid("functions live on different groups"))
    }
}

/// `c_pi = (1/d_pi) sum_C |C| f(C) chi_pi(C)`, the scalar by which the
/// Fourier transform of a class function acts on each irrep.
pub fn fourier_class_scalars(f: &ClassFunction, table: &CharacterTable) -> Result<Vec<Scalar>> {
    if !f.group.same_as(table.group()) {
        return Err(Error::invalid("class function and character table use different groups"));
    }
    let classes = f.group.classes();
    Ok((0..table.irrep_count())
        .map(|pi| {
            let sum = classes
                .iter()
                .enumerate()
                .fold(Scalar::zero(), |acc, (c, class)| {
                    acc + Scalar::int(class.size as i64) * f.values[c].clone() * table.entry(pi, c)
                });
            sum / Scalar::int(table.degree(pi) as i64)
        })
        .collect())
}

/// `(f * g)(x) = sum_b f(b) g(b^{-1} x)`
pub fn convolve(f: &GroupFunction, g: &GroupFunction) -> Result<GroupFunction> {
    same_group(&f.group, &g.group)?;
    let group = &f.group;
    let n = group.order();
    if n > CONVOLVE_LIMIT {
        return Err(Error::SizeLimit {
            what: "group order for convolution",
            actual: n,
            limit: CONVOLVE_LIMIT,
        });
    }
    let mut out = vec![Scalar::zero(); n];
    for b in 0..n {
        if f.values[b].is_zero_tol(0.0) {
            continue;
        }
        // b y = x, so g(b^{-1} x) = g(y)
        for y in 0..n {
            let x = group.multiply(b, y);
            out[x] = std::mem::replace(&mut out[x], Scalar::zero()) + f.values[b].clone() * g.values[y].clone();
        }
    }
    Ok(GroupFunction {
        group: group.clone(),
        values: out,
    })
}

/// `f*(x) = conj(f(x^{-1}))`
pub fn involute(f: &GroupFunction) -> GroupFunction {
    GroupFunction::from_fn(&f.group, |x| f.values[f.group.invert(x)].conj())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::symmetric_character_table;
    use crate::groups::make_abelian_product;

    #[test]
    fn transposition_indicator_on_s3() {
        let t = symmetric_character_table(3).unwrap();
        let f = ClassFunction::indicator(t.group(), &[1]).unwrap();
        let c = fourier_class_scalars(&f, &t).unwrap();
        assert_eq!(c, vec![Scalar::int(3), Scalar::zero(), Scalar::int(-3)]);
    }

    #[test]
    fn point_mass_and_constant() {
        let t = symmetric_character_table(4).unwrap();
        let delta = ClassFunction::delta_identity(t.group());
        assert!(fourier_class_scalars(&delta, &t).unwrap().iter().all(|c| *c == Scalar::one()));
        let one = ClassFunction::constant(t.group(), Scalar::one());
        let c = fourier_class_scalars(&one, &t).unwrap();
        assert_eq!(c[t.trivial_index()], Scalar::int(24));
        assert_eq!(c.iter().filter(|v| **v == Scalar::zero()).count(), 4);
    }

    #[test]
    fn cyclic_three_convolution() {
        let g = make_abelian_product(&[3]).unwrap();
        let e1 = GroupFunction::delta(&g, 1);
        let sq = convolve(&e1, &e1).unwrap();
        assert_eq!(sq.values(), GroupFunction::delta(&g, 2).values());
        let e = GroupFunction::delta(&g, 0);
        assert_eq!(convolve(&sq, &e).unwrap().values(), sq.values());
    }

    #[test]
    fn involution_twice_is_identity() {
        let g = make_abelian_product(&[6]).unwrap();
        let f = GroupFunction::from_fn(&g, |x| Scalar::complex(x as f64, 1.0 - x as f64));
        assert_eq!(involute(&involute(&f)).values(), f.values());
    }

    #[test]
    fn group_mismatch() {
        let a = make_abelian_product(&[3]).unwrap();
        let b = make_abelian_product(&[4]).unwrap();
        assert!(convolve(&GroupFunction::delta(&a, 0), &GroupFunction::delta(&b, 0)).is_err());
    }
}
