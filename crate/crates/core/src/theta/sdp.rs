//! SDP exports: the `|G| x |G|` formulation (A) and the block-diagonal
//! Fourier formulation (C), written in the SDPA sparse format.
//!
//! Instances are stored in the form
//! `max <F0, Y>  s.t.  <Fi, Y> = ci,  Y PSD`, which is the dual problem of
//! an SDPA file whose objective vector is `c` and whose matrices are `F0, Fi`.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;

use super::CayleyGraphSpec;
use crate::characters::IrrepMatrices;
use crate::error::{read_file, write_file, Error, Result};
use crate::graphs::build_cayley;
use crate::linalg::Matrix;

/// Largest group order for formulation (A).
pub const SDP_LIMIT: usize = 2000;

/// Entries with smaller magnitude are dropped.
const ENTRY_TOL: f64 = 1e-14;

/// One upper-triangular entry (`row <= col`, 0-based) of a symmetric block.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SdpEntry {
    pub block: usize,
    pub row: usize,
    pub col: usize,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SdpInstance {
    pub block_sizes: Vec<usize>,
    pub objective: Vec<SdpEntry>,
    pub constraints: Vec<Vec<SdpEntry>>,
    pub rhs: Vec<f64>,
}

fn canonical(block_sizes: &[usize], mut entries: Vec<SdpEntry>) -> Result<Vec<SdpEntry>> {
    for e in &mut entries {
        if e.row > e.col {
            std::mem::swap(&mut e.row, &mut e.col);
        }
        match block_sizes.get(e.block) {
            Some(&size) if e.col < size => {}
            _ => {
                return Err(Error::invalid(format!(
                    "entry ({}, {}, {}) lies outside the block structure",
                    e.block, e.row, e.col
                )))
            }
        }
    }
    entries.sort_by_key(|e| (e.block, e.row, e.col));
    let mut merged: Vec<SdpEntry> = Vec::with_capacity(entries.len());
    for e in entries {
        match merged.last_mut() {
            Some(last) if (last.block, last.row, last.col) == (e.block, e.row, e.col) => {
                last.value += e.value
            }
            _ => merged.push(e),
        }
    }
    merged.retain(|e| e.value.abs() > ENTRY_TOL);
    Ok(merged)
}

impl SdpInstance {
    /// Sorts entries, merges duplicates, and drops zeros.
    pub fn new(
        block_sizes: Vec<usize>,
        objective: Vec<SdpEntry>,
        constraints: Vec<Vec<SdpEntry>>,
        rhs: Vec<f64>,
    ) -> Result<Self> {
        if constraints.len() != rhs.len() {
            return Err(Error::invalid(format!(
                "{} constraints but {} right-hand sides",
                constraints.len(),
                rhs.len()
            )));
        }
        if block_sizes.iter().any(|&s| s == 0) {
            return Err(Error::invalid("block sizes must be positive"));
        }
        let objective = canonical(&block_sizes, objective)?;
        let constraints = constraints
            .into_iter()
            .map(|c| canonical(&block_sizes, c))
            .collect::<Result<_>>()?;
        Ok(SdpInstance {
            block_sizes,
            objective,
            constraints,
            rhs,
        })
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// `<F, Y>` for a block-diagonal `Y` given by its blocks.
    pub fn pair(entries: &[SdpEntry], y: &[Matrix<f64>]) -> f64 {
        entries
            .iter()
            .map(|e| {
                let b = &y[e.block];
                if e.row == e.col {
                    e.value * b.get(e.row, e.row)
                } else {
                    e.value * (b.get(e.row, e.col) + b.get(e.col, e.row))
                }
            })
            .sum()
    }

    /// Objective value and constraint residuals `<Fi, Y> - ci`.
    pub fn evaluate(&self, y: &[Matrix<f64>]) -> Result<(f64, Vec<f64>)> {
        if y.len() != self.block_sizes.len()
            || y.iter().zip(&self.block_sizes).any(|(m, &s)| m.rows() != s || m.cols() != s)
        {
            return Err(Error::invalid("blocks do not match the block structure"));
        }
        let residuals = self
            .constraints
            .iter()
            .zip(&self.rhs)
            .map(|(c, &r)| Self::pair(c, y) - r)
            .collect();
        Ok((Self::pair(&self.objective, y), residuals))
    }
}

fn upper_entries(block: usize, m: &Matrix<f64>, scale: f64) -> Vec<SdpEntry> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in i..m.cols() {
            let value = scale * (m.get(i, j) + m.get(j, i)) / 2.0;
            if value.abs() > ENTRY_TOL {
                out.push(SdpEntry { block, row: i, col: j, value });
            }
        }
    }
    out
}

/// Formulation (A): one `|G| x |G|` block, objective `<J, Y>`, trace 1, and
/// `Y_uv = 0` for every edge.
pub fn build_sdp_a(spec: &CayleyGraphSpec) -> Result<SdpInstance> {
    let n = spec.group().order();
    if n > SDP_LIMIT {
        return Err(Error::SizeLimit {
            what: "group order for formulation A",
            actual: n,
            limit: SDP_LIMIT,
        });
    }
    let graph = build_cayley(spec.group(), spec.connection())?;
    let entry = |row, col| SdpEntry { block: 0, row, col, value: 1.0 };
    let objective = (0..n).flat_map(|i| (i..n).map(move |j| entry(i, j))).collect();
    let mut constraints = vec![(0..n).map(|i| entry(i, i)).collect::<Vec<_>>()];
    let mut rhs = vec![1.0];
    for (u, v) in graph.edges() {
        constraints.push(vec![entry(u, v)]);
        rhs.push(0.0);
    }
    SdpInstance::new(vec![n], objective, constraints, rhs)
}

enum BlockKind {
    Scalar,
    Real,
    Embedded,
}

/// Formulation (C): one block per irrep with `<A, M> = Tr(M* A)`.
///
/// Degree-1 irreps give `1 x 1` blocks, real irreps a real `d x d` block,
/// and complex irreps the real `2d x 2d` embedding `[[R, -S], [S, R]]` of
/// `A = R + iS`. Each retained `x` (one of `x, x^{-1}`) contributes the real
/// and imaginary parts of `sum_pi d_pi <A_pi, pi(x)> = 0`; empty rows are
/// dropped. The objective is the trivial block.
pub fn build_sdp_c(spec: &CayleyGraphSpec, irreps: &IrrepMatrices) -> Result<SdpInstance> {
    let group = spec.group();
    if !irreps.group().same_as(group) {
        return Err(Error::invalid("irreps belong to a different group"));
    }
    let trivial = irreps
        .trivial_index()
        .ok_or_else(|| Error::invalid("irreps do not include the trivial representation"))?;
    let kinds: Vec<BlockKind> = irreps
        .irreps()
        .iter()
        .map(|r| match (r.degree, r.is_real()) {
            (1, _) => BlockKind::Scalar,
            (_, true) => BlockKind::Real,
            _ => BlockKind::Embedded,
        })
        .collect();
    let sizes: Vec<usize> = irreps
        .irreps()
        .iter()
        .zip(&kinds)
        .map(|(r, k)| match k {
            BlockKind::Embedded => 2 * r.degree,
            _ => r.degree,
        })
        .collect();

    let mut normalization = Vec::new();
    for (b, (rep, kind)) in irreps.irreps().iter().zip(&kinds).enumerate() {
        let d = rep.degree as f64;
        let value = if matches!(kind, BlockKind::Embedded) { d / 2.0 } else { d };
        normalization.extend((0..sizes[b]).map(|i| SdpEntry { block: b, row: i, col: i, value }));
    }
    let mut constraints = vec![normalization];
    let mut rhs = vec![group.order() as f64];

    for &x in spec.connection().elements() {
        if group.invert(x) < x {
            continue;
        }
        let mut re_row = Vec::new();
        let mut im_row = Vec::new();
        for (b, (rep, kind)) in irreps.irreps().iter().zip(&kinds).enumerate() {
            let d = rep.degree;
            let m = &rep.matrices[x];
            let p = m.map(|z: &Complex64| z.re);
            let q = m.map(|z: &Complex64| z.im);
            let scale = d as f64;
            match kind {
                BlockKind::Scalar => {
                    re_row.extend(upper_entries(b, &p, scale));
                    im_row.extend(upper_entries(b, &q, -scale));
                }
                BlockKind::Real => re_row.extend(upper_entries(b, &p, scale)),
                BlockKind::Embedded => {
                    // Re Tr(M* A) = <R, P> + <S, Q>, Im Tr(M* A) = <S, P> - <R, Q>
                    let re_block = Matrix::from_fn(2 * d, 2 * d, |i, j| {
                        let (bi, bj) = (i / d, j / d);
                        let (pi, pj) = (i % d, j % d);
                        let v = match (bi, bj) {
                            (0, 0) | (1, 1) => *p.get(pi, pj),
                            (0, 1) => -q.get(pi, pj),
                            _ => *q.get(pi, pj),
                        };
                        v / 2.0
                    });
                    let im_block = Matrix::from_fn(2 * d, 2 * d, |i, j| {
                        let (bi, bj) = (i / d, j / d);
                        let (pi, pj) = (i % d, j % d);
                        let v = match (bi, bj) {
                            (0, 0) | (1, 1) => *q.get(pi, pj),
                            (0, 1) => *p.get(pi, pj),
                            _ => -p.get(pi, pj),
                        };
                        -v / 2.0
                    });
                    re_row.extend(upper_entries(b, &re_block, scale));
                    im_row.extend(upper_entries(b, &im_block, scale));
                }
            }
        }
        for row in [re_row, im_row] {
            let row = canonical(&sizes, row)?;
            if !row.is_empty() {
                constraints.push(row);
                rhs.push(0.0);
            }
        }
    }
    let objective = vec![SdpEntry { block: trivial, row: 0, col: 0, value: 1.0 }];
    SdpInstance::new(sizes, objective, constraints, rhs)
}

fn number(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:?}")
    }
}

/// SDPA sparse text. Values use the shortest round-trip representation.
pub fn write_sdpa(inst: &SdpInstance) -> String {
    let mut out = String::new();
    out.push_str("\"SDPA sparse format (cayley-theta)\n");
    out.push_str("\"maximize <F0, Y> subject to <Fi, Y> = ci for i = 1..m, Y positive semidefinite\n");
    out.push_str("\"lines: matrix block row col value, upper triangle, 1-based\n");
    let _ = writeln!(out, "{}", inst.constraints.len());
    let _ = writeln!(out, "{}", inst.block_sizes.len());
    let sizes: Vec<String> = inst.block_sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "{}", sizes.join(" "));
    let c: Vec<String> = inst.rhs.iter().map(|&v| number(v)).collect();
    let _ = writeln!(out, "{}", c.join(" "));
    let matrices = std::iter::once(&inst.objective).chain(&inst.constraints);
    for (k, entries) in matrices.enumerate() {
        for e in entries {
            let _ = writeln!(
                out,
                "{k} {} {} {} {}",
                e.block + 1,
                e.row + 1,
                e.col + 1,
                number(e.value)
            );
        }
    }
    out
}

/// Reads the subset of SDPA sparse files written by [`write_sdpa`]:
/// comment lines start with `"` or `*`; `{ } ( ) ,` count as spaces.
pub fn parse_sdpa(text: &str) -> Result<SdpInstance> {
    let mut tokens: Vec<(usize, String)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('"') || line.starts_with('*') {
            continue;
        }
        let cleaned: String = line
            .chars()
            .map(|c| if "{}(),".contains(c) { ' ' } else { c })
            .collect();
        tokens.extend(cleaned.split_whitespace().map(|t| (n + 1, t.to_string())));
    }
    let mut it = tokens.into_iter();
    let last_line = text.lines().count();
    let mut next = |what: &str| {
        it.next()
            .ok_or_else(|| Error::parse(last_line, format!("missing {what}")))
    };
    fn int(tok: (usize, String)) -> Result<usize> {
        tok.1
            .parse()
            .map_err(|_| Error::parse(tok.0, format!("expected a nonnegative integer, found {}", tok.1)))
    }
    fn float(tok: (usize, String)) -> Result<f64> {
        tok.1
            .parse()
            .map_err(|_| Error::parse(tok.0, format!("expected a number, found {}", tok.1)))
    }
    let m = int(next("constraint count")?)?;
    let nblocks = int(next("block count")?)?;
    let mut sizes = Vec::with_capacity(nblocks);
    for _ in 0..nblocks {
        let tok = next("block size")?;
        let line = tok.0;
        let size = int(tok)?;
        if size == 0 {
            return Err(Error::parse(line, "block sizes must be positive"));
        }
        sizes.push(size);
    }
    let mut rhs = Vec::with_capacity(m);
    for _ in 0..m {
        rhs.push(float(next("objective vector entry")?)?);
    }
    let mut matrices = vec![Vec::new(); m + 1];
    while let Ok(tok) = next("") {
        let line = tok.0;
        let k = int(tok)?;
        let block = int(next("block index")?)?;
        let row = int(next("row index")?)?;
        let col = int(next("column index")?)?;
        let value = float(next("value")?)?;
        if k > m || block == 0 || block > nblocks || row == 0 || col == 0 {
            return Err(Error::parse(line, "entry index out of range"));
        }
        matrices[k].push(SdpEntry {
            block: block - 1,
            row: row - 1,
            col: col - 1,
            value,
        });
    }
    let objective = matrices.remove(0);
    SdpInstance::new(sizes, objective, matrices, rhs)
}

pub fn export_sdpa(inst: &SdpInstance, path: &Path) -> Result<()> {
    write_file(path, &write_sdpa(inst))
}

pub fn read_sdpa(path: &Path) -> Result<SdpInstance> {
    parse_sdpa(&read_file(path)?)
}
