//! Maximum independent set by branch and bound.
//!
//! Each node first applies the degree-0/1 rule (a vertex with at most one
//! remaining neighbour lies in some maximum independent set), then prunes
//! with a greedy clique cover of the candidates, then branches on a vertex of
//! maximum remaining degree (ties: lowest index). The include branch runs
//! first; the exclude branch also drops the vertex's mirrors, vertices `u` at
//! distance two whose non-neighbours in `N(v)` form a clique. Some maximum
//! independent set either contains `v` or avoids `v` and all its mirrors.

use std::time::{Duration, Instant};

use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaResult {
    Exact { value: usize, witness: Vec<usize> },
    /// Budget ran out: `lower` is attained by `witness`; `upper` is the
    /// clique-cover bound of the whole graph.
    Bounds { lower: usize, upper: usize, witness: Vec<usize> },
}

impl AlphaResult {
    pub fn is_exact(&self) -> bool {
        matches!(self, AlphaResult::Exact { .. })
    }

    pub fn lower(&self) -> usize {
        match self {
            AlphaResult::Exact { value, .. } => *value,
            AlphaResult::Bounds { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> usize {
        match self {
            AlphaResult::Exact { value, .. } => *value,
            AlphaResult::Bounds { upper, .. } => *upper,
        }
    }

    pub fn witness(&self) -> &[usize] {
        match self {
            AlphaResult::Exact { witness, .. } | AlphaResult::Bounds { witness, .. } => witness,
        }
    }

    /// The exact value, if the search finished.
    pub fn exact(&self) -> Option<usize> {
        match self {
            AlphaResult::Exact { value, .. } => Some(*value),
            AlphaResult::Bounds { .. } => None,
        }
    }
}

pub fn alpha(graph: &Graph) -> AlphaResult {
    alpha_with_budget(graph, None)
}

pub fn alpha_with_budget(graph: &Graph, budget: Option<Duration>) -> AlphaResult {
    let n = graph.vertex_count();
    let mut all = vec![0u64; graph.words()];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut solver = Solver {
        graph,
        best: Vec::new(),
        deadline: budget.map(|b| Instant::now() + b),
        nodes: 0,
        expired: false,
    };
    let root_bound = solver.clique_cover(&all);
    let mut current = Vec::new();
    solver.search(all, &mut current);
    let mut witness = solver.best;
    witness.sort_unstable();
    if solver.expired {
        AlphaResult::Bounds {
            lower: witness.len(),
            upper: root_bound.max(witness.len()),
            witness,
        }
    } else {
        AlphaResult::Exact {
            value: witness.len(),
            witness,
        }
    }
}

struct Solver<'a> {
    graph: &'a Graph,
    best: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
    expired: bool,
}

fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

fn first(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn remove(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

impl Solver<'_> {
    fn search(&mut self, mut cand: Vec<u64>, current: &mut Vec<usize>) {
        if self.expired {
            return;
        }
        self.nodes += 1;
        if self.nodes % 256 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.expired = true;
                    return;
                }
            }
        }
        let depth = current.len();
        // degree-0/1 rule to a fixed point
        loop {
            let low = members(&cand).find(|&v| count_and(self.graph.row(v), &cand) <= 1);
            let Some(v) = low else { break };
            current.push(v);
            self.take(&mut cand, v);
        }
        if cand.iter().all(|&w| w == 0) {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(depth);
            return;
        }
        if current.len() + self.clique_cover(&cand) <= self.best.len() {
            current.truncate(depth);
            return;
        }
        let v = members(&cand)
            .map(|v| (count_and(self.graph.row(v), &cand), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("nonempty candidates");

        let mut with = cand.clone();
        current.push(v);
        self.take(&mut with, v);
        self.search(with, current);
        current.pop();

        let mirrors = self.mirrors(v, &cand);
        remove(&mut cand, v);
        for u in mirrors {
            remove(&mut cand, u);
        }
        self.search(cand, current);
        current.truncate(depth);
    }

    /// Removes `v` and its neighbours from `cand`.
    fn take(&self, cand: &mut [u64], v: usize) {
        for (c, a) in cand.iter_mut().zip(self.graph.row(v)) {
            *c &= !a;
        }
        remove(cand, v);
    }

    fn mirrors(&self, v: usize, cand: &[u64]) -> Vec<usize> {
        let g = self.graph;
        let nv: Vec<u64> = g.row(v).iter().zip(cand).map(|(a, c)| a & c).collect();
        let mut second = vec![0u64; cand.len()];
        for w in members(&nv) {
            for (s, a) in second.iter_mut().zip(g.row(w)) {
                *s |= a;
            }
        }
        for ((s, c), a) in second.iter_mut().zip(cand).zip(&nv) {
            *s &= c & !a;
        }
        remove(&mut second, v);
        members(&second)
            .filter(|&u| {
                let rest: Vec<usize> = members(&nv).filter(|&w| !g.has_edge(u, w)).collect();
                rest.iter()
                    .enumerate()
                    .all(|(i, &a)| rest[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .collect()
    }

    /// Number of cliques in a greedy cover of `cand`; bounds alpha of the
    /// induced subgraph.
    fn clique_cover(&self, cand: &[u64]) -> usize {
        let mut remaining = cand.to_vec();
        let mut count = 0;
        while let Some(u) = first(&remaining) {
            remove(&mut remaining, u);
            let mut grow: Vec<u64> = remaining.iter().zip(self.graph.row(u)).map(|(r, a)| r & a).collect();
            while let Some(w) = first(&grow) {
                remove(&mut remaining, w);
                for (gw, a) in grow.iter_mut().zip(self.graph.row(w)) {
                    *gw &= a;
                }
                remove(&mut grow, w);
            }
            count += 1;
        }
        count
    }
}
