//! Finite group actions on `0..point_count`.
//!
//! Action files are plain text. Either a full table
//!
//! ```text
//! action <group_order> <point_count>
//! <image of point 0> ... <image of point m-1>    # one line per element
//! ```
//!
//! whose rows must form a permutation group (row 0 the identity), or a
//! generator list whose closure is computed:
//!
//! ```text
//! generators <count> <point_count>
//! <image of point 0> ... <image of point m-1>    # one line per generator
//! ```
//!
//! Lines starting with `#` are ignored.

use std::collections::HashMap;
use std::path::Path;

use super::{make_from_table, FiniteGroup};
use crate::error::{read_file, Error, Result};

/// Closure bound when generating permutation groups.
pub const CLOSURE_LIMIT: usize = 10_000;

#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteGroup,
    point_count: usize,
    /// `images[g][p]` is `g . p`.
    images: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Checks `e . p = p` and `g . (h . p) = (g h) . p` for every triple.
    pub fn new(group: FiniteGroup, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::invalid(format!(
                "action table has {} rows for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        let point_count = images.first().map_or(0, Vec::len);
        if point_count == 0 {
            return Err(Error::invalid("action on an empty set"));
        }
        for (g, row) in images.iter().enumerate() {
            if row.len() != point_count || !is_permutation(row) {
                return Err(Error::invalid(format!("row {g} is not a permutation of the points")));
            }
        }
        if images[0].iter().enumerate().any(|(p, &q)| p != q) {
            return Err(Error::invalid("identity does not act trivially"));
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.multiply(g, h);
                for p in 0..point_count {
                    if images[g][images[h][p]] != images[gh][p] {
                        return Err(Error::invalid(format!(
                            "not an action: g={g}, h={h}, point {p}"
                        )));
                    }
                }
            }
        }
        Ok(GroupAction {
            group,
            point_count,
            images,
        })
    }

    /// The permutation group generated by `generators` acting on its points.
    /// Elements are the distinct permutations in lexicographic order, so the
    /// identity is element 0; products compose right to left.
    pub fn from_generators(point_count: usize, generators: &[Vec<usize>]) -> Result<Self> {
        if point_count == 0 {
            return Err(Error::invalid("action on an empty set"));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != point_count || !is_permutation(g) {
                return Err(Error::invalid(format!("generator {i} is not a permutation")));
            }
        }
        let identity: Vec<usize> = (0..point_count).collect();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut frontier = vec![identity];
        let mut all = frontier.clone();
        while let Some(p) = frontier.pop() {
            for g in generators {
                let next: Vec<usize> = p.iter().map(|&x| g[x]).collect();
                if seen.insert(next.clone(), ()).is_none() {
                    if seen.len() > CLOSURE_LIMIT {
                        return Err(Error::SizeLimit {
                            what: "generated permutation group",
                            actual: seen.len(),
                            limit: CLOSURE_LIMIT,
                        });
                    }
                    all.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        all.sort();
        Self::from_permutations(all)
    }

    /// Builds the group on the given list of permutations, which must be
    /// closed under composition and start with the identity.
    pub fn from_permutations(perms: Vec<Vec<usize>>) -> Result<Self> {
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        if index.len() != perms.len() {
            return Err(Error::invalid("repeated permutation in action table"));
        }
        let mut table = vec![vec![0; perms.len()]; perms.len()];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let prod: Vec<usize> = pb.iter().map(|&x| pa[x]).collect();
                table[a][b] = *index.get(prod.as_slice()).ok_or_else(|| {
                    Error::invalid(format!(
                        "permutations not closed under composition ({a} * {b})"
                    ))
                })?;
            }
        }
        let group = make_from_table(table)?;
        Self::new(group, perms)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn act(&self, g: usize, p: usize) -> usize {
        self.images[g][p]
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.point_count];
        let mut orbits = Vec::new();
        for start in 0..self.point_count {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = Vec::new();
            for g in self.group.elements() {
                let p = self.images[g][start];
                if !seen[p] {
                    seen[p] = true;
                    orbit.push(p);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }
}

fn is_permutation(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter().all(|&p| p < row.len() && !std::mem::replace(&mut seen[p], true))
}

pub fn parse_action(text: &str) -> Result<GroupAction> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty action file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [keyword, count, points] = fields[..] else {
        return Err(Error::parse(line, "expected `action <order> <points>` or `generators <count> <points>`"));
    };
    let count: usize = count.parse().map_err(|_| Error::parse(line, "bad count"))?;
    let points: usize = points.parse().map_err(|_| Error::parse(line, "bad point count"))?;
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, text) = lines.next().ok_or_else(|| Error::parse(line, "action file ends early"))?;
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("bad point {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != points {
            return Err(Error::parse(line, format!("expected {points} images")));
        }
        rows.push(row);
    }
    match keyword {
        "action" => GroupAction::from_permutations(rows),
        "generators" => GroupAction::from_generators(points, &rows),
        other => Err(Error::parse(line, format!("unknown action kind {other:?}"))),
    }
}

pub fn load_action(path: &Path) -> Result<GroupAction> {
    parse_action(&read_file(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation(n: usize) -> Vec<usize> {
        (0..n).map(|i| (i + 1) % n).collect()
    }

    fn reflection(n: usize) -> Vec<usize> {
        (0..n).map(|i| (n - i) % n).collect()
    }

    #[test]
    fn dihedral_closure() {
        let a = GroupAction::from_generators(5, &[rotation(5), reflection(5)]).unwrap();
        assert_eq!(a.group().order(), 10);
        assert!(a.is_transitive());
        // D_5 has 4 classes: identity, two rotation classes, reflections
        assert_eq!(a.group().class_count(), 4);
    }

    #[test]
    fn intransitive_orbits() {
        let g = vec![1, 0, 2, 3];
        let a = GroupAction::from_generators(4, &[g]).unwrap();
        assert_eq!(a.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn parse_both_forms() {
        let a = parse_action("# rotations\ngenerators 1 5\n1 2 3 4 0\n").unwrap();
        assert_eq!(a.group().order(), 5);
        let b = parse_action("action 2 3\n0 1 2\n1 0 2\n").unwrap();
        assert_eq!(b.group().order(), 2);
        assert_eq!(b.act(1, 0), 1);
        assert!(parse_action("action 2 3\n0 1 2\n1 2 0\n").is_err());
        assert!(parse_action("orbit 1 2\n0 1\n").is_err());
    }
}
