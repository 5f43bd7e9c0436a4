//! Characters of symmetric groups by the Murnaghan–Nakayama rule.
//!
//! Irreps are indexed by partitions `lambda` in descending lexicographic
//! order (so the trivial `(n)` comes first) and labelled `[..]`; columns are
//! the cycle-type classes of [`make_symmetric`] in ascending lexicographic
//! order.

use std::collections::HashMap;

use num_rational::BigRational;

use super::{exact_int, CharacterTable, TableEntries};
use crate::error::{Error, Result};
use crate::groups::{make_symmetric, FiniteGroup, GroupKind, Partition};
use crate::linalg::Matrix;

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// `chi_lambda(mu)` by recursive border-strip removal, memoized per call.
pub fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> i64 {
    let mut memo = Memo::new();
    mn(lambda.parts(), mu.parts(), &mut memo)
}

fn mn(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for_each_rim_hook(lambda, r, |shape, height| {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(shape, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `f(shape, leg)` for every border strip of length `r`; each strip is
/// the rim hook of a cell with hook length `r`.
fn for_each_rim_hook(lambda: &[usize], r: usize, mut f: impl FnMut(&[usize], usize)) {
    let columns: Vec<usize> = (0..lambda.first().copied().unwrap_or(0))
        .map(|j| lambda.iter().filter(|&&p| p > j).count())
        .collect();
    let mut shape = Vec::with_capacity(lambda.len());
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = columns[j] - i - 1;
            if arm + leg + 1 != r {
                continue;
            }
            shape.clear();
            shape.extend_from_slice(&lambda[..i]);
            for t in i..i + leg {
                shape.push(lambda[t + 1] - 1);
            }
            shape.push(j);
            shape.extend_from_slice(&lambda[i + leg + 1..]);
            while shape.last() == Some(&0) {
                shape.pop();
            }
            f(&shape, leg);
        }
    }
}

/// Character table of an existing symmetric group.
pub fn symmetric_table_for(group: &FiniteGroup) -> Result<CharacterTable> {
    let GroupKind::Symmetric { n } = group.kind() else {
        return Err(Error::invalid("symmetric character table needs a symmetric group"));
    };
    let classes = Partition::all(n);
    let mut irreps = Partition::all(n);
    irreps.reverse();
    let mut memo = Memo::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(irreps.len());
    let mut degrees = Vec::with_capacity(irreps.len());
    for lambda in &irreps {
        let row: Vec<i64> = classes
            .iter()
            .map(|mu| mn(lambda.parts(), mu.parts(), &mut memo))
            .collect();
        let degree = row[0];
        if degree <= 0 || degree as u128 != lambda.hook_length_degree() {
            return Err(Error::Internal(format!(
                "degree {degree} of {lambda} disagrees with the hook-length formula"
            )));
        }
        degrees.push(degree as usize);
        rows.push(row.into_iter().map(exact_int).collect());
    }
    let labels = irreps
        .iter()
        .map(|p| {
            let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    CharacterTable::new(
        group.clone(),
        labels,
        degrees,
        TableEntries::Exact(Matrix::from_rows(rows)),
    )
}

pub fn symmetric_character_table(n: usize) -> Result<CharacterTable> {
    symmetric_table_for(&make_symmetric(n)?)
}
