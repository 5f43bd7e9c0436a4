//! Groups given by an explicit Cayley table.
//!
//! File format: the first line holds the order `N`, followed by `N` lines of
//! `N` whitespace-separated element indices; row `a`, column `b` holds the
//! index of `a * b`. Element 0 must be the identity.

use std::path::Path;

use super::{FiniteGroup, GroupKind, GroupLaw, EXHAUSTIVE_CHECK_LIMIT};
use crate::error::{read_file, write_file, Error, Result};

struct TableLaw {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl GroupLaw for TableLaw {
    fn kind(&self) -> GroupKind {
        GroupKind::Table
    }

    fn order(&self) -> usize {
        self.table.len()
    }

    fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn invert(&self, a: usize) -> usize {
        self.inverses[a]
    }

    fn element_label(&self, a: usize) -> String {
        format!("g{a}")
    }

    fn table(&self) -> Option<&[Vec<usize>]> {
        Some(&self.table)
    }
}

/// Builds a group from a Latin-square Cayley table after checking identity,
/// inverses, and associativity (exhaustively for small orders, by Light's
/// generator test otherwise).
pub fn make_from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::invalid("empty Cayley table"));
    }
    if let Some(r) = table.iter().position(|row| row.len() != n) {
        return Err(Error::invalid(format!("row {r} has the wrong length")));
    }
    let mut seen = vec![0usize; n];
    for (a, row) in table.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::invalid(format!("entry ({a}, {b}) = {v} out of range")));
            }
        }
        seen.fill(0);
        for &v in row {
            seen[v] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(Error::invalid(format!("row {a} is not a permutation (not a Latin square)")));
        }
    }
    for b in 0..n {
        seen.fill(0);
        for row in &table {
            seen[row[b]] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(Error::invalid(format!("column {b} is not a permutation (not a Latin square)")));
        }
    }
    for g in 0..n {
        if table[0][g] != g || table[g][0] != g {
            return Err(Error::NotAGroup {
                axiom: "identity",
                witness: vec![0, g],
            });
        }
    }
    let mut inverses = vec![0; n];
    for a in 0..n {
        let b = table[a].iter().position(|&v| v == 0).expect("Latin row contains 0");
        if table[b][a] != 0 {
            return Err(Error::NotAGroup {
                axiom: "inverse",
                witness: vec![a, b],
            });
        }
        inverses[a] = b;
    }
    if n > EXHAUSTIVE_CHECK_LIMIT {
        light_associativity_test(&table)?;
    }
    FiniteGroup::from_law(TableLaw { table, inverses })
}

/// The set of `a` with `(x a) y = x (a y)` for all `x, y` is closed under
/// products, so checking a generating set suffices.
fn light_associativity_test(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    let mut in_closure = vec![false; n];
    let mut closure = Vec::new();
    let mut generators = Vec::new();
    while closure.len() < n {
        let g = (0..n).find(|&g| !in_closure[g]).expect("element outside closure");
        generators.push(g);
        in_closure[g] = true;
        closure.push(g);
        let mut i = 0;
        while i < closure.len() {
            let a = closure[i];
            for j in 0..=i {
                let b = closure[j];
                for p in [table[a][b], table[b][a]] {
                    if !in_closure[p] {
                        in_closure[p] = true;
                        closure.push(p);
                    }
                }
            }
            i += 1;
        }
    }
    for &a in &generators {
        for x in 0..n {
            let xa = table[x][a];
            for y in 0..n {
                if table[xa][y] != table[x][table[a][y]] {
                    return Err(Error::NotAGroup {
                        axiom: "associativity",
                        witness: vec![x, a, y],
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn parse_cayley_table(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or_else(|| Error::parse(1, "missing order line"))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::parse(line, format!("bad order {first:?}")))?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, row) = lines
            .next()
            .ok_or_else(|| Error::parse(line, "table ends early"))?;
        let parsed = row
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("bad index {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parsed.len() != n {
            return Err(Error::parse(line, format!("expected {n} entries, found {}", parsed.len())));
        }
        table.push(parsed);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after table"));
    }
    Ok(table)
}

pub fn import_cayley_table(path: &Path) -> Result<FiniteGroup> {
    make_from_table(parse_cayley_table(&read_file(path)?)?)
}

pub fn format_cayley_table(group: &FiniteGroup) -> String {
    let mut out = format!("{}\n", group.order());
    for row in group.cayley_table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn export_cayley_table(group: &FiniteGroup, path: &Path) -> Result<()> {
    write_file(path, &format_cayley_table(group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::make_symmetric;

    #[test]
    fn trivial_table() {
        let g = make_from_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.class_count(), 1);
    }

    #[test]
    fn s3_round_trip() {
        let s3 = make_symmetric(3).unwrap();
        let text = format_cayley_table(&s3);
        let g = make_from_table(parse_cayley_table(&text).unwrap()).unwrap();
        assert_eq!(g.cayley_table(), s3.cayley_table());
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    // Reduced Latin squares of order 5 by backtracking; the non-associative
    // ones are loops that are not groups.
    fn reduced_latin_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn fill(t: &mut Vec<Vec<usize>>, pos: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
            if pos == n * n {
                out.push(t.clone());
                return;
            }
            let (r, c) = (pos / n, pos % n);
            if r == 0 || c == 0 {
                return fill(t, pos + 1, n, out);
            }
            for v in 0..n {
                if (0..c).any(|k| t[r][k] == v) || (0..r).any(|k| t[k][c] == v) {
                    continue;
                }
                t[r][c] = v;
                fill(t, pos + 1, n, out);
            }
            t[r][c] = usize::MAX;
        }
        let mut t = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            t[0][i] = i;
            t[i][0] = i;
        }
        let mut out = Vec::new();
        fill(&mut t, 0, n, &mut out);
        out
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        let squares = reduced_latin_squares(5);
        let loops: Vec<_> = squares
            .into_iter()
            .filter(|t| (0..5).all(|a| (0..5).any(|b| t[a][b] == 0 && t[b][a] == 0)))
            .collect();
        let mut rejected = 0;
        for t in loops {
            match make_from_table(t) {
                Err(Error::NotAGroup { axiom: "associativity", witness }) => {
                    assert_eq!(witness.len(), 3);
                    rejected += 1;
                }
                Err(e) => panic!("unexpected error {e}"),
                Ok(g) => assert_eq!(g.order(), 5),
            }
        }
        assert!(rejected > 0);
    }

    #[test]
    fn light_test_agrees_with_exhaustive_check() {
        let s5 = make_symmetric(5).unwrap();
        let mut table = s5.cayley_table();
        assert!(light_associativity_test(&table).is_ok());
        // swapping entries in two rows breaks associativity (and the Latin
        // property, which Light's test does not rely on)
        let (a, b) = (7, 11);
        let (x, y) = (table[a][3], table[a][4]);
        table[a][3] = y;
        table[a][4] = x;
        let (x, y) = (table[b][3], table[b][4]);
        table[b][3] = y;
        table[b][4] = x;
        let exhaustive_fails = (0..120).any(|p| {
            (0..120).any(|q| (0..120).any(|r| table[table[p][q]][r] != table[p][table[q][r]]))
        });
        assert_eq!(light_associativity_test(&table).is_err(), exhaustive_fails);
    }

    #[test]
    fn malformed_files() {
        assert!(parse_cayley_table("2\n0 1\n1").is_err());
        assert!(parse_cayley_table("2\n0 1\n1 x\n").is_err());
        assert!(make_from_table(vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(matches!(
            make_from_table(vec![vec![1, 0], vec![0, 1]]),
            Err(Error::NotAGroup { axiom: "identity", .. })
        ));
    }
}
