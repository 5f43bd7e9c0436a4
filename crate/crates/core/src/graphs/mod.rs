//! Connection sets, Cayley graphs, independence numbers, and blowups.
//!
//! Graph file format: a header `vertices <m> edges <k>` followed by `k`
//! lines `u v` with 0-based endpoints. Blank lines and lines starting with
//! `#` are ignored.

mod alpha;
mod blowup;
mod connection;

use std::path::Path;

pub use alpha::{alpha, alpha_with_budget, AlphaResult};
pub use blowup::blowup_connection;
pub use connection::ConnectionSet;

use crate::error::{read_file, write_file, Error, Result};
use crate::groups::FiniteGroup;

/// Largest group order for [`build_cayley`].
pub const CAYLEY_LIMIT: usize = 5000;

/// Simple undirected graph on `0..vertex_count` with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    words: usize,
    adjacency: Vec<Vec<u64>>,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        let words = vertex_count.div_ceil(64);
        Graph {
            vertex_count,
            words,
            adjacency: vec![vec![0; words]; vertex_count],
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut g = Self::empty(vertex_count);
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(vertex_count: usize) -> Result<Self> {
        if vertex_count < 3 {
            return Err(Error::invalid("a cycle needs at least 3 vertices"));
        }
        Self::from_edges(vertex_count, (0..vertex_count).map(|i| (i, (i + 1) % vertex_count)))
    }

    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("Petersen edges are valid")
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::invalid(format!("edge {{{u}, {v}}} out of range")));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at {u}")));
        }
        self.link(u, v);
        Ok(())
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adjacency[u][v / 64] |= 1 << (v % 64);
        self.adjacency[v][u / 64] |= 1 << (u % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(move |&u| self.has_edge(v, u))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adjacency[v]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Returns a violated edge if `perm` is not an automorphism.
    pub fn automorphism_violation(&self, perm: &[usize]) -> Option<(usize, usize)> {
        self.edges()
            .into_iter()
            .find(|&(u, v)| !self.has_edge(perm[u], perm[v]))
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.vertex_count {
            return Err(Error::invalid("relabelling has the wrong length"));
        }
        Graph::from_edges(self.vertex_count, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("vertices {} edges {}\n", self.vertex_count, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let ["vertices", m, "edges", k] = fields[..] else {
            return Err(Error::parse(line, "expected `vertices <m> edges <k>`"));
        };
        let m: usize = m.parse().map_err(|_| Error::parse(line, "bad vertex count"))?;
        let k: usize = k.parse().map_err(|_| Error::parse(line, "bad edge count"))?;
        let mut g = Graph::empty(m);
        for _ in 0..k {
            let (line, text) = lines.next().ok_or_else(|| Error::parse(line, "edge list ends early"))?;
            let ends: Vec<usize> = text
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad vertex {t:?}"))))
                .collect::<Result<_>>()?;
            let [u, v] = ends[..] else {
                return Err(Error::parse(line, "expected `u v`"));
            };
            g.add_edge(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "more edges than declared"));
        }
        Ok(g)
    }

    pub fn load(path: &Path) -> Result<Graph> {
        Self::parse(&read_file(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write_file(path, &self.to_text())
    }
}

/// `Cay(G, X)`: vertices are elements, `x ~ y` iff `y^{-1} x` is in `X`.
pub fn build_cayley(group: &FiniteGroup, connection: &ConnectionSet) -> Result<Graph> {
    if !connection.group().same_as(group) {
        return Err(Error::invalid("connection set belongs to a different group"));
    }
    let n = group.order();
    if n > CAYLEY_LIMIT {
        return Err(Error::SizeLimit {
            what: "group order for Cayley graph",
            actual: n,
            limit: CAYLEY_LIMIT,
        });
    }
    connection.validate()?;
    let mut g = Graph::empty(n);
    // y^{-1} x = s  <=>  x = y s
    for y in 0..n {
        for &s in connection.elements() {
            let x = group.multiply(y, s);
            g.link(x, y);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_abelian_product, make_symmetric};

    #[test]
    fn five_cycle_from_z5() {
        let g = make_abelian_product(&[5]).unwrap();
        let x = ConnectionSet::new(&g, vec![1, 4]).unwrap();
        let c = build_cayley(&g, &x).unwrap();
        assert_eq!(c, Graph::cycle(5).unwrap());
    }

    #[test]
    fn s3_three_cycles_give_two_triangles() {
        let g = make_symmetric(3).unwrap();
        let x = ConnectionSet::from_classes(&g, &[2]).unwrap();
        let c = build_cayley(&g, &x).unwrap();
        assert_eq!(c.edge_count(), 6);
        assert!((0..6).all(|v| c.degree(v) == 2));
        // components: each vertex's closed neighbourhood is a triangle
        for v in 0..6 {
            let n: Vec<usize> = c.neighbors(v).collect();
            assert!(c.has_edge(n[0], n[1]));
        }
    }

    #[test]
    fn empty_connection() {
        let g = make_symmetric(3).unwrap();
        let c = build_cayley(&g, &ConnectionSet::empty(&g)).unwrap();
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn text_round_trip() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(Graph::parse(&p.to_text()).unwrap(), p);
        assert!(Graph::parse("vertices 2 edges 1\n0 0\n").is_err());
        assert!(Graph::parse("vertices 2 edges 2\n0 1\n").is_err());
        assert!(Graph::parse("# c\nvertices 3 edges 1\n\n0 2\n").is_ok());
    }
}
