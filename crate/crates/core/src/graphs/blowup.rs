use super::{ConnectionSet, Graph};
use crate::error::{Error, Result};
use crate::groups::GroupAction;

/// `X = { g : {x0, g . x0} is an edge }` for a transitive action by
/// automorphisms. Then `alpha(G) |Gamma| = |V| alpha(Cay(Gamma, X))`.
pub fn blowup_connection(action: &GroupAction, graph: &Graph, base: usize) -> Result<ConnectionSet> {
    let n = graph.vertex_count();
    if action.point_count() != n {
        return Err(Error::invalid(format!(
            "action is on {} points but the graph has {n} vertices",
            action.point_count()
        )));
    }
    if base >= n {
        return Err(Error::invalid(format!("base vertex {base} out of range")));
    }
    let group = action.group();
    let edges = graph.edges();
    for g in group.elements() {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| !graph.has_edge(action.act(g, u), action.act(g, v)))
        {
            return Err(Error::NotAutomorphism {
                element: g,
                edge: (u, v),
            });
        }
    }
    if !action.is_transitive() {
        return Err(Error::NotTransitive {
            orbits: action.orbits(),
        });
    }
    let elements: Vec<usize> = group
        .elements()
        .filter(|&g| graph.has_edge(base, action.act(g, base)))
        .collect();
    ConnectionSet::new(group, elements)
}
