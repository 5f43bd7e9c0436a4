//! Concrete finite groups with indexed elements.
//!
//! Every group model implements [`GroupLaw`]; [`FiniteGroup`] wraps a law
//! together with its conjugacy classes, which are computed once at
//! construction. Element `0` is always the identity.

mod abelian;
mod action;
mod field;
mod general_linear;
mod partition;
mod symmetric;
mod table;

use std::fmt;
use std::sync::Arc;

pub use abelian::make_abelian_product;
pub(crate) use abelian::abelian_digits;
pub use action::{load_action, parse_action, GroupAction};
pub use field::FiniteField;
pub use general_linear::{general_linear_order, make_general_linear, FqMatrix, GL_ORDER_LIMIT};
pub use partition::Partition;
pub use symmetric::{make_symmetric, permutation_rank, SYMMETRIC_MAX_N};
pub use table::{
    export_cayley_table, format_cayley_table, import_cayley_table, make_from_table,
    parse_cayley_table,
};

use crate::error::{Error, Result};

/// Groups up to this order get an exhaustive axiom check at construction.
pub const EXHAUSTIVE_CHECK_LIMIT: usize = 200;

/// Upper bound for the generic orbit computation of conjugacy classes.
pub const ORBIT_CLASS_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    AbelianProduct { moduli: Vec<usize> },
    Symmetric { n: usize },
    GeneralLinear { q: usize, n: usize },
    Table,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::AbelianProduct { .. } => "abelian-product",
            GroupKind::Symmetric { .. } => "symmetric",
            GroupKind::GeneralLinear { .. } => "general-linear",
            GroupKind::Table => "table",
        }
    }
}

/// Class assignment supplied by a law that knows its classes analytically.
pub struct ClassAssignment {
    pub labels: Vec<String>,
    pub class_of: Vec<usize>,
}

/// Multiplication, inversion, and labelling on element indices `0..order`.
pub trait GroupLaw: Send + Sync {
    fn kind(&self) -> GroupKind;
    fn order(&self) -> usize;
    fn multiply(&self, a: usize, b: usize) -> usize;
    fn invert(&self, a: usize) -> usize;
    fn element_label(&self, a: usize) -> String;

    /// Label for the class with the given index and smallest member.
    fn class_label(&self, index: usize, _representative: usize) -> String {
        format!("C{index}")
    }

    /// Analytic class data, when available. Classes must be listed with the
    /// identity class first.
    fn analytic_classes(&self) -> Option<ClassAssignment> {
        None
    }

    /// Symmetric-group hook: the permutation of `0..n` behind an element.
    fn permutation(&self, _a: usize) -> Option<Vec<usize>> {
        None
    }

    /// General-linear hook: the matrix behind an element.
    fn matrix(&self, _a: usize) -> Option<FqMatrix> {
        None
    }

    /// Underlying Cayley table, for table-backed laws.
    fn table(&self) -> Option<&[Vec<usize>]> {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub label: String,
    pub inverse_class: usize,
}

struct GroupInner {
    law: Box<dyn GroupLaw>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

/// An immutable finite group with precomputed conjugacy classes.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("kind", &self.kind())
            .field("order", &self.order())
            .field("classes", &self.class_count())
            .finish()
    }
}

impl FiniteGroup {
    /// Wraps a law, computing conjugacy classes and checking the group
    /// axioms exhaustively for orders up to [`EXHAUSTIVE_CHECK_LIMIT`].
    pub fn from_law(law: impl GroupLaw + 'static) -> Result<Self> {
        let law: Box<dyn GroupLaw> = Box::new(law);
        if law.order() == 0 {
            return Err(Error::invalid("group order must be positive"));
        }
        if law.order() <= EXHAUSTIVE_CHECK_LIMIT {
            check_axioms_exhaustive(law.as_ref())?;
        }
        let (classes, class_of) = compute_classes(law.as_ref())?;
        let total: usize = classes.iter().map(|c| c.size).sum();
        if total != law.order() {
            return Err(Error::Internal(format!(
                "class equation fails: {total} != {}",
                law.order()
            )));
        }
        Ok(FiniteGroup {
            inner: Arc::new(GroupInner {
                law,
                classes,
                class_of,
            }),
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.inner.law.kind()
    }

    pub fn order(&self) -> usize {
        self.inner.law.order()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.inner.law.multiply(a, b)
    }

    pub fn invert(&self, a: usize) -> usize {
        self.inner.law.invert(a)
    }

    /// `g a g^{-1}`
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.multiply(self.multiply(g, a), self.invert(g))
    }

    pub fn element_label(&self, a: usize) -> String {
        self.inner.law.element_label(a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.inner.classes
    }

    pub fn class_count(&self) -> usize {
        self.inner.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.inner.class_of[a]
    }

    pub fn law(&self) -> &dyn GroupLaw {
        self.inner.law.as_ref()
    }

    pub fn permutation(&self, a: usize) -> Option<Vec<usize>> {
        self.inner.law.permutation(a)
    }

    pub fn matrix(&self, a: usize) -> Option<FqMatrix> {
        self.inner.law.matrix(a)
    }

    pub fn is_abelian(&self) -> bool {
        self.class_count() == self.order()
    }

    /// Same underlying group: the same allocation, the same built-in model,
    /// or identical Cayley tables.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        match (self.kind(), other.kind()) {
            (GroupKind::Table, GroupKind::Table) => self.law().table() == other.law().table(),
            (a, b) => a == b,
        }
    }

    /// Dense Cayley table. Intended for small groups.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|a| (0..n).map(|b| self.multiply(a, b)).collect())
            .collect()
    }

    /// Exhaustive identity / inverse / associativity check.
    pub fn verify_axioms(&self) -> Result<()> {
        check_axioms_exhaustive(self.law())
    }
}

fn check_axioms_exhaustive(law: &dyn GroupLaw) -> Result<()> {
    let n = law.order();
    for g in 0..n {
        if law.multiply(0, g) != g || law.multiply(g, 0) != g {
            return Err(Error::NotAGroup {
                axiom: "identity",
                witness: vec![0, g],
            });
        }
        let inv = law.invert(g);
        if inv >= n || law.multiply(g, inv) != 0 || law.multiply(inv, g) != 0 {
            return Err(Error::NotAGroup {
                axiom: "inverse",
                witness: vec![g, inv],
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = law.multiply(a, b);
            for c in 0..n {
                if law.multiply(ab, c) != law.multiply(a, law.multiply(b, c)) {
                    return Err(Error::NotAGroup {
                        axiom: "associativity",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    Ok(())
}

fn compute_classes(law: &dyn GroupLaw) -> Result<(Vec<ConjugacyClass>, Vec<usize>)> {
    let n = law.order();
    let (labels, class_of) = match law.analytic_classes() {
        Some(assign) => (Some(assign.labels), assign.class_of),
        None => {
            if n > ORBIT_CLASS_LIMIT {
                return Err(Error::SizeLimit {
                    what: "group order for orbit class computation",
                    actual: n,
                    limit: ORBIT_CLASS_LIMIT,
                });
            }
            (None, orbit_classes(law))
        }
    };
    let count = class_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); count];
    for (g, &c) in class_of.iter().enumerate() {
        members[c].push(g);
    }
    if members.iter().any(Vec::is_empty) || class_of[0] != 0 {
        return Err(Error::Internal("malformed class assignment".into()));
    }
    let classes = members
        .into_iter()
        .enumerate()
        .map(|(i, members)| {
            let representative = members[0];
            let label = match &labels {
                Some(l) => l[i].clone(),
                None => law.class_label(i, representative),
            };
            ConjugacyClass {
                representative,
                size: members.len(),
                inverse_class: class_of[law.invert(representative)],
                members,
                label,
            }
        })
        .collect();
    Ok((classes, class_of))
}

/// Orbits under conjugation, numbered by smallest member.
fn orbit_classes(law: &dyn GroupLaw) -> Vec<usize> {
    let n = law.order();
    let inverses: Vec<usize> = (0..n).map(|g| law.invert(g)).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        for g in 0..n {
            let c = law.multiply(law.multiply(g, a), inverses[g]);
            class_of[c] = next;
        }
        next += 1;
    }
    class_of
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_five_classes_and_inverse_pairs() {
        let g = make_abelian_product(&[5]).unwrap();
        assert_eq!(g.class_count(), 5);
        let inv: Vec<usize> = g.classes().iter().map(|c| c.inverse_class).collect();
        assert_eq!(inv, vec![0, 4, 3, 2, 1]);
    }

    #[test]
    fn s3_class_sizes() {
        let g = make_symmetric(3).unwrap();
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn gl22_classes() {
        let g = make_general_linear(2, 2).unwrap();
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn inverse_class_is_involution() {
        for g in [
            make_symmetric(4).unwrap(),
            make_abelian_product(&[3, 4]).unwrap(),
            make_general_linear(3, 2).unwrap(),
        ] {
            for (i, c) in g.classes().iter().enumerate() {
                assert_eq!(g.classes()[c.inverse_class].inverse_class, i);
            }
        }
    }

    #[test]
    fn members_are_conjugate_to_representative() {
        let g = make_general_linear(3, 2).unwrap();
        for c in g.classes() {
            for &m in &c.members {
                assert!(g.elements().any(|h| g.conjugate(c.representative, h) == m));
            }
        }
    }
}
