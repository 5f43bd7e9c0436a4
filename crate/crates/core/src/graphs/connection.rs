use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// An identity-free, inverse-closed subset `X` of a group. When `X` is a
/// union of conjugacy classes, those classes are recorded.
#[derive(Clone, Debug)]
pub struct ConnectionSet {
    group: FiniteGroup,
    elements: Vec<usize>,
    classes: Option<Vec<usize>>,
}

impl ConnectionSet {
    /// Sorts and deduplicates `elements`, then checks the invariants.
    pub fn new(group: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= group.order()) {
            return Err(Error::invalid(format!("element {x} out of range")));
        }
        let classes = union_of_classes(group, &elements);
        let set = ConnectionSet {
            group: group.clone(),
            elements,
            classes,
        };
        set.validate()?;
        Ok(set)
    }

    /// Union of the given conjugacy classes.
    pub fn from_classes(group: &FiniteGroup, classes: &[usize]) -> Result<Self> {
        let mut elements = Vec::new();
        for &c in classes {
            let class = group
                .classes()
                .get(c)
                .ok_or_else(|| Error::invalid(format!("class index {c} out of range")))?;
            elements.extend_from_slice(&class.members);
        }
        Self::new(group, elements)
    }

    pub fn empty(group: &FiniteGroup) -> Self {
        ConnectionSet {
            group: group.clone(),
            elements: Vec::new(),
            classes: Some(Vec::new()),
        }
    }

    /// Every non-identity element (the complete graph).
    pub fn all_nonidentity(group: &FiniteGroup) -> Self {
        Self::new(group, (1..group.order()).collect()).expect("non-identity elements form a connection set")
    }

    /// Identity-freeness, inverse-closure, and (when recorded) the class
    /// decomposition.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        if self.contains(g.identity()) {
            return Err(Error::invalid("connection set contains the identity"));
        }
        if let Some(&x) = self.elements.iter().find(|&&x| !self.contains(g.invert(x))) {
            return Err(Error::invalid(format!(
                "connection set is not inverse-closed: {} is in X but its inverse is not",
                g.element_label(x)
            )));
        }
        if let Some(classes) = &self.classes {
            let total: usize = classes.iter().map(|&c| g.classes()[c].size).sum();
            let whole = classes
                .iter()
                .all(|&c| g.classes()[c].members.iter().all(|&m| self.contains(m)));
            if total != self.elements.len() || !whole {
                return Err(Error::invalid("recorded classes do not match the elements"));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Class indices, when `X` is closed under conjugation.
    pub fn classes(&self) -> Option<&[usize]> {
        self.classes.as_deref()
    }

    pub fn is_conjugation_closed(&self) -> bool {
        self.classes.is_some()
    }

    /// Membership mask over the group's elements.
    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.group.order()];
        for &x in &self.elements {
            mask[x] = true;
        }
        mask
    }
}

/// The classes making up `elements` (sorted), if it is a union of classes.
fn union_of_classes(group: &FiniteGroup, elements: &[usize]) -> Option<Vec<usize>> {
    let mut count = vec![0usize; group.class_count()];
    for &x in elements {
        count[group.class_of(x)] += 1;
    }
    let mut classes = Vec::new();
    for (c, &k) in count.iter().enumerate() {
        if k == group.classes()[c].size {
            classes.push(c);
        } else if k != 0 {
            return None;
        }
    }
    Some(classes)
}
