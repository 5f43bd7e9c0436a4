//! JSON import and export of character tables.
//!
//! ```json
//! {
//!   "group_order": 6,
//!   "class_sizes": [1, 3, 2],
//!   "class_labels": ["(1,1,1)", "(2,1)", "(3)"],
//!   "degrees": [1, 2, 1],
//!   "exact": true,
//!   "irrep_labels": ["[3]", "[2,1]", "[1,1,1]"],
//!   "entries": [["1", "1", "1"], ["2", "0", "-1"], ["1", "-1", "1"]]
//! }
//! ```
//!
//! `entries` is row-major (one row per irrep), either nested or flat. Exact
//! tables use rational strings `"p/q"`; approximate tables use `[re, im]`
//! pairs. `irrep_labels` is optional.
//!
//! On import the file's columns are matched to the group's classes: the
//! candidate correspondence must preserve class sizes, labels are tried
//! first, and the result is confirmed by comparing class structure constants
//! computed from the table with those counted in the group.

use std::path::Path;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{check_table, CharacterTable, TableEntries, ORTHOGONALITY_TOL};
use crate::error::{read_file, write_file, Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::scalar::{parse_rational, Scalar};

/// Largest group order for which class structure constants are counted.
pub const STRUCTURE_CHECK_LIMIT: usize = 50_000;

/// Upper bound on candidate class correspondences explored during import.
pub const MATCH_SEARCH_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Rational(String),
    Pair([f64; 2]),
}

impl JsonScalar {
    pub fn from_scalar(s: &Scalar) -> Self {
        match s {
            Scalar::Exact(r) => JsonScalar::Rational(r.to_string()),
            Scalar::Approx(c) => JsonScalar::Pair([c.re, c.im]),
        }
    }

    pub fn to_scalar(&self) -> Result<Scalar> {
        match self {
            JsonScalar::Rational(s) => Ok(Scalar::Exact(parse_rational(s)?)),
            JsonScalar::Pair([re, im]) => Ok(Scalar::complex(*re, *im)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonEntries {
    Nested(Vec<Vec<JsonScalar>>),
    Flat(Vec<JsonScalar>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub group_order: usize,
    pub class_sizes: Vec<usize>,
    pub class_labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irrep_labels: Option<Vec<String>>,
    pub entries: JsonEntries,
}

impl TableFile {
    /// Decodes and checks the entry matrix against the file's own metadata.
    fn decode(&self) -> Result<TableEntries> {
        let k = self.class_sizes.len();
        if self.class_labels.len() != k || self.degrees.len() != k {
            return Err(Error::Schema(format!(
                "{k} class sizes, {} class labels, {} degrees",
                self.class_labels.len(),
                self.degrees.len()
            )));
        }
        if let Some(labels) = &self.irrep_labels {
            if labels.len() != k {
                return Err(Error::Schema(format!("{} irrep labels for {k} irreps", labels.len())));
            }
        }
        if self.class_sizes.iter().sum::<usize>() != self.group_order {
            return Err(Error::Schema("class sizes do not sum to the group order".into()));
        }
        let flat: Vec<&JsonScalar> = match &self.entries {
            JsonEntries::Nested(rows) => {
                if rows.len() != k || rows.iter().any(|r| r.len() != k) {
                    return Err(Error::Schema(format!("entries must form a {k}x{k} matrix")));
                }
                rows.iter().flatten().collect()
            }
            JsonEntries::Flat(items) => {
                if items.len() != k * k {
                    return Err(Error::Schema(format!(
                        "{} entries for a {k}x{k} table",
                        items.len()
                    )));
                }
                items.iter().collect()
            }
        };
        if self.exact {
            let mut values = Vec::with_capacity(flat.len());
            for item in flat {
                match item {
                    JsonScalar::Rational(s) => values.push(parse_rational(s)?),
                    JsonScalar::Pair(_) => {
                        return Err(Error::Schema("exact table contains a decimal pair".into()))
                    }
                }
            }
            Ok(TableEntries::Exact(Matrix::from_fn(k, k, |i, j| values[i * k + j].clone())))
        } else {
            let mut values = Vec::with_capacity(flat.len());
            for item in flat {
                match item {
                    JsonScalar::Pair([re, im]) if re.is_finite() && im.is_finite() => {
                        values.push(Complex64::new(*re, *im))
                    }
                    JsonScalar::Pair(_) => return Err(Error::Schema("non-finite entry".into())),
                    JsonScalar::Rational(_) => {
                        return Err(Error::Schema(
                            "approximate table contains a rational string".into(),
                        ))
                    }
                }
            }
            Ok(TableEntries::Approx(Matrix::from_fn(k, k, |i, j| values[i * k + j])))
        }
    }

    /// Validates the table on its own terms (no group needed). Returns the
    /// entries with the identity class moved to column 0, plus the column
    /// order used.
    pub fn validate(&self) -> Result<(TableEntries, Vec<usize>)> {
        let entries = self.decode()?;
        let k = self.degrees.len();
        let tol = ORTHOGONALITY_TOL * self.group_order as f64;
        let value = |i: usize, c: usize| entry_of(&entries, i, c);
        let identity = (0..k)
            .find(|&c| {
                self.class_sizes[c] == 1
                    && (0..k).all(|i| value(i, c).approx_eq(&Scalar::int(self.degrees[i] as i64), tol))
            })
            .ok_or(Error::CorruptTable {
                relation: "identity column equals degrees",
                pair: (0, 0),
                deviation: f64::NAN,
            })?;
        let mut order: Vec<usize> = vec![identity];
        order.extend((0..k).filter(|&c| c != identity));
        let permuted = permute_columns(&entries, &order);
        let sizes: Vec<usize> = order.iter().map(|&c| self.class_sizes[c]).collect();
        check_table(&permuted, &self.degrees, &sizes, self.group_order)?;
        Ok((permuted, order))
    }
}

fn entry_of(entries: &TableEntries, i: usize, c: usize) -> Scalar {
    match entries {
        TableEntries::Exact(m) => Scalar::Exact(m.get(i, c).clone()),
        TableEntries::Approx(m) => Scalar::Approx(*m.get(i, c)),
    }
}

/// Column `j` of the result is column `order[j]` of the input.
fn permute_columns(entries: &TableEntries, order: &[usize]) -> TableEntries {
    match entries {
        TableEntries::Exact(m) => {
            TableEntries::Exact(Matrix::from_fn(m.rows(), order.len(), |i, j| m.get(i, order[j]).clone()))
        }
        TableEntries::Approx(m) => {
            TableEntries::Approx(Matrix::from_fn(m.rows(), order.len(), |i, j| *m.get(i, order[j])))
        }
    }
}

pub fn table_to_json(table: &CharacterTable) -> TableFile {
    let group = table.group();
    let k = table.class_count();
    TableFile {
        group_order: group.order(),
        class_sizes: group.classes().iter().map(|c| c.size).collect(),
        class_labels: group.classes().iter().map(|c| c.label.clone()).collect(),
        degrees: table.degrees().to_vec(),
        exact: table.is_exact(),
        irrep_labels: Some(table.irrep_labels().to_vec()),
        entries: JsonEntries::Nested(
            (0..table.irrep_count())
                .map(|i| (0..k).map(|c| JsonScalar::from_scalar(&table.entry(i, c))).collect())
                .collect(),
        ),
    }
}

pub fn export_character_table(table: &CharacterTable, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&table_to_json(table))?;
    write_file(path, &(text + "\n"))
}

pub fn import_character_table(path: &Path, group: &FiniteGroup) -> Result<CharacterTable> {
    parse_character_table(&read_file(path)?, group)
}

pub fn parse_character_table(text: &str, group: &FiniteGroup) -> Result<CharacterTable> {
    let file: TableFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("character table JSON: {e}")))?;
    attach_to_group(&file, group)
}

/// Validates `file` and re-indexes its columns in `group`'s class order.
pub fn attach_to_group(file: &TableFile, group: &FiniteGroup) -> Result<CharacterTable> {
    if file.group_order != group.order() {
        return Err(Error::Schema(format!(
            "table is for a group of order {}, group has order {}",
            file.group_order,
            group.order()
        )));
    }
    if file.class_sizes.len() != group.class_count() {
        return Err(Error::Schema(format!(
            "table has {} classes, group has {}",
            file.class_sizes.len(),
            group.class_count()
        )));
    }
    let (entries, order) = file.validate()?;
    let sizes: Vec<usize> = order.iter().map(|&c| file.class_sizes[c]).collect();
    let labels: Vec<&str> = order.iter().map(|&c| file.class_labels[c].as_str()).collect();
    let mapping = match_classes(&entries, file.degrees.as_slice(), &sizes, &labels, group)?;
    // column j of `entries` belongs to group class mapping[j]
    let mut inverse = vec![0; mapping.len()];
    for (j, &c) in mapping.iter().enumerate() {
        inverse[c] = j;
    }
    let reordered = permute_columns(&entries, &inverse);
    let irrep_labels = file
        .irrep_labels
        .clone()
        .unwrap_or_else(|| (0..file.degrees.len()).map(|i| format!("X{}", i + 1)).collect());
    CharacterTable::new(group.clone(), irrep_labels, file.degrees.clone(), reordered)
}

fn match_classes(
    entries: &TableEntries,
    degrees: &[usize],
    sizes: &[usize],
    labels: &[&str],
    group: &FiniteGroup,
) -> Result<Vec<usize>> {
    let k = sizes.len();
    let classes = group.classes();
    let mut group_sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
    let mut file_sizes = sizes.to_vec();
    group_sizes.sort_unstable();
    file_sizes.sort_unstable();
    if group_sizes != file_sizes {
        return Err(Error::Schema("class sizes do not match the group's classes".into()));
    }
    // candidate group classes per file column, label matches first
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|j| {
            if j == 0 {
                return vec![0];
            }
            let mut c: Vec<usize> = (1..k).filter(|&g| classes[g].size == sizes[j]).collect();
            c.sort_by_key(|&g| classes[g].label != labels[j]);
            c
        })
        .collect();
    if group.order() > STRUCTURE_CHECK_LIMIT {
        let by_label: Option<Vec<usize>> = (0..k)
            .map(|j| {
                if j == 0 {
                    Some(0)
                } else {
                    candidates[j].first().copied().filter(|&g| classes[g].label == labels[j])
                }
            })
            .collect();
        let unique_sizes = candidates.iter().all(|c| c.len() == 1);
        return match by_label {
            Some(m) if is_permutation(&m) => Ok(m),
            _ if unique_sizes => Ok(candidates.iter().map(|c| c[0]).collect()),
            _ => Err(Error::Schema(
                "class labels do not identify the group's classes and the group is too large to match by structure constants".into(),
            )),
        };
    }
    let group_constants = group_structure_constants(group);
    let table_constants = table_structure_constants(entries, degrees, sizes);
    let mut search = MatchSearch {
        candidates: &candidates,
        group_constants: &group_constants,
        table_constants: &table_constants,
        mapping: vec![usize::MAX; k],
        used: vec![false; k],
        visited: 0,
    };
    if search.extend(0) {
        Ok(search.mapping)
    } else if search.visited > MATCH_SEARCH_LIMIT {
        Err(Error::Schema("class correspondence search exceeded its limit".into()))
    } else {
        Err(Error::Schema(
            "no class correspondence reproduces the group's class structure constants".into(),
        ))
    }
}

fn is_permutation(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter().all(|&g| g < m.len() && !std::mem::replace(&mut seen[g], true))
}

/// `n[i][j][k]` = number of pairs `(x, y)` with `x in C_i`, `y in C_j`,
/// `x y = z_k` for a fixed `z_k in C_k`.
fn group_structure_constants(group: &FiniteGroup) -> Vec<Vec<Vec<i64>>> {
    let k = group.class_count();
    let mut n = vec![vec![vec![0i64; k]; k]; k];
    for (c, class) in group.classes().iter().enumerate() {
        let z = class.representative;
        for x in group.elements() {
            let y = group.multiply(group.invert(x), z);
            n[group.class_of(x)][group.class_of(y)][c] += 1;
        }
    }
    n
}

/// `|C_i||C_j|/|G| sum_pi chi(C_i) chi(C_j) conj(chi(C_k)) / chi(1)`
fn table_structure_constants(
    entries: &TableEntries,
    degrees: &[usize],
    sizes: &[usize],
) -> Vec<Vec<Vec<Scalar>>> {
    let k = sizes.len();
    let order: usize = sizes.iter().sum();
    let values: Vec<Vec<Scalar>> = (0..k)
        .map(|i| (0..k).map(|c| entry_of(entries, i, c)).collect())
        .collect();
    let mut out = vec![vec![vec![Scalar::zero(); k]; k]; k];
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let mut s = Scalar::zero();
                for (i, row) in values.iter().enumerate() {
                    s = s + row[a].clone() * row[b].clone() * row[c].conj()
                        / Scalar::int(degrees[i] as i64);
                }
                let factor = Scalar::Exact(BigRational::new(
                    ((sizes[a] * sizes[b]) as i64).into(),
                    (order as i64).into(),
                ));
                out[a][b][c] = s * factor;
            }
        }
    }
    out
}

struct MatchSearch<'a> {
    candidates: &'a [Vec<usize>],
    group_constants: &'a [Vec<Vec<i64>>],
    table_constants: &'a [Vec<Vec<Scalar>>],
    mapping: Vec<usize>,
    used: Vec<bool>,
    visited: usize,
}

impl MatchSearch<'_> {
    fn extend(&mut self, t: usize) -> bool {
        if t == self.mapping.len() {
            return true;
        }
        for &g in &self.candidates[t] {
            if self.used[g] {
                continue;
            }
            self.visited += 1;
            if self.visited > MATCH_SEARCH_LIMIT {
                return false;
            }
            self.mapping[t] = g;
            self.used[g] = true;
            if self.consistent(t) && self.extend(t + 1) {
                return true;
            }
            self.used[g] = false;
        }
        self.mapping[t] = usize::MAX;
        false
    }

    /// Checks every triple of assigned columns that involves column `t`.
    fn consistent(&self, t: usize) -> bool {
        for a in 0..=t {
            for b in 0..=t {
                for c in 0..=t {
                    if a != t && b != t && c != t {
                        continue;
                    }
                    let expected = self.group_constants[self.mapping[a]][self.mapping[b]][self.mapping[c]];
                    let got = &self.table_constants[a][b][c];
                    let tol = 1e-6 * (expected.unsigned_abs() as f64).max(1.0);
                    if !got.approx_eq(&Scalar::int(expected), tol) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::symmetric_character_table;
    use crate::groups::make_general_linear;

    #[test]
    fn round_trip_s4() {
        let t = symmetric_character_table(4).unwrap();
        let text = serde_json::to_string(&table_to_json(&t)).unwrap();
        let back = parse_character_table(&text, t.group()).unwrap();
        assert_eq!(back.entries(), t.entries());
        assert_eq!(back.irrep_labels(), t.irrep_labels());
    }

    #[test]
    fn perturbed_entry_is_corrupt() {
        let t = symmetric_character_table(4).unwrap();
        let mut file = table_to_json(&t);
        let perturbed = t.entry(1, 2) + Scalar::one();
        if let JsonEntries::Nested(rows) = &mut file.entries {
            rows[1][2] = JsonScalar::from_scalar(&perturbed);
        }
        let err = attach_to_group(&file, t.group()).unwrap_err();
        assert!(
            matches!(err, Error::CorruptTable { relation: "row orthogonality", .. }),
            "{err}"
        );
    }

    #[test]
    fn s3_table_attaches_to_gl22() {
        let t = symmetric_character_table(3).unwrap();
        let gl = make_general_linear(2, 2).unwrap();
        let table = attach_to_group(&table_to_json(&t), &gl).unwrap();
        // the sign character is -1 exactly on the class of size 3
        let sign = table.irrep_index("[1,1,1]").unwrap();
        for (c, class) in gl.classes().iter().enumerate() {
            let expected = if class.size == 3 { -1 } else { 1 };
            assert_eq!(table.entry(sign, c), Scalar::int(expected));
        }
    }

    #[test]
    fn shuffled_columns_are_matched() {
        let t = symmetric_character_table(4).unwrap();
        let mut file = table_to_json(&t);
        let order = [3, 0, 4, 2, 1];
        file.class_sizes = order.iter().map(|&c| file.class_sizes[c]).collect();
        file.class_labels = vec!["a".into(), "b".into(), "c".into(), "d".into(), "e".into()];
        if let JsonEntries::Nested(rows) = &mut file.entries {
            for row in rows.iter_mut() {
                *row = order.iter().map(|&c| row[c].clone()).collect();
            }
        }
        let back = attach_to_group(&file, t.group()).unwrap();
        // without labels the match is only determined up to table
        // automorphisms, which permute rows
        let rows = |t: &CharacterTable| {
            let mut rows: Vec<Vec<String>> = (0..t.irrep_count())
                .map(|i| (0..t.class_count()).map(|c| t.entry(i, c).to_string()).collect())
                .collect();
            rows.sort();
            rows
        };
        assert_eq!(rows(&back), rows(&t));

        // with labels the original correspondence is recovered
        let mut labelled = table_to_json(&t);
        let labels = labelled.class_labels.clone();
        labelled.class_sizes = order.iter().map(|&c| labelled.class_sizes[c]).collect();
        labelled.class_labels = order.iter().map(|&c| labels[c].clone()).collect();
        if let JsonEntries::Nested(rows) = &mut labelled.entries {
            for row in rows.iter_mut() {
                *row = order.iter().map(|&c| row[c].clone()).collect();
            }
        }
        assert_eq!(attach_to_group(&labelled, t.group()).unwrap().entries(), t.entries());
    }

    #[test]
    fn schema_errors() {
        let t = symmetric_character_table(3).unwrap();
        let s4 = crate::groups::make_symmetric(4).unwrap();
        assert!(matches!(attach_to_group(&table_to_json(&t), &s4), Err(Error::Schema(_))));
        let mut file = table_to_json(&t);
        file.exact = false;
        assert!(matches!(attach_to_group(&file, t.group()), Err(Error::Schema(_))));
        assert!(parse_character_table("{\"group_order\": 1}", t.group()).is_err());
    }

    #[test]
    fn approximate_round_trip() {
        let t = symmetric_character_table(3).unwrap().to_approx();
        let text = serde_json::to_string(&table_to_json(&t)).unwrap();
        assert!(text.contains("[2.0,0.0]"));
        let back = parse_character_table(&text, t.group()).unwrap();
        assert!(!back.is_exact());
        assert_eq!(back.entries(), t.entries());
    }
}
