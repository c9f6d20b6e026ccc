//! Reachability-preserving minimum labelings of DAGs.

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Edge, Vertex};
use crate::temporal::{Labeling, TemporalGraph, Time};

/// Canonical layering: `layers[0]` are the sources, and each later layer is
/// the source set of what remains after peeling the earlier ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<Vertex>>,
    /// Layer index of every vertex.
    pub index: Vec<usize>,
}

impl Layering {
    /// Number of layers minus one.
    pub fn depth(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }
}

/// In-degree peeling in O(n + m).
pub fn canonical_layering(d: &DirectedGraph) -> Result<Layering> {
    let n = d.n();
    let mut seen_in = vec![0usize; n];
    let mut index = vec![usize::MAX; n];
    let mut current: Vec<Vertex> = (0..n).filter(|&v| d.in_neighbors(v).is_empty()).collect();
    let mut layers = Vec::new();
    let mut placed = 0;
    while !current.is_empty() {
        let level = layers.len();
        let mut next = Vec::new();
        for &u in &current {
            index[u] = level;
            for &v in d.out_neighbors(u) {
                seen_in[v] += 1;
                if seen_in[v] == d.in_neighbors(v).len() {
                    next.push(v);
                }
            }
        }
        placed += current.len();
        next.sort_unstable();
        layers.push(std::mem::replace(&mut current, next));
    }
    if placed != n {
        return Err(Error::NotADag);
    }
    Ok(Layering { layers, index })
}

/// Arcs `(u, v)` with no other directed path from `u` to `v`: the transitive
/// reduction of the DAG.
pub fn shortcut_free_arcs(d: &DirectedGraph) -> Result<Vec<Edge>> {
    canonical_layering(d)?;
    Ok(d.arcs()
        .filter(|&a| !d.reachable_from(a.0, Some(a))[a.1])
        .collect())
}

/// Labels each shortcut-free arc `(u, v)` with the layer index of `v`.
pub fn min_labeling(d: &DirectedGraph) -> Result<TemporalGraph> {
    let layering = canonical_layering(d)?;
    let mut lab = Labeling::new();
    for a in shortcut_free_arcs(d)? {
        lab.add(a, layering.index[a.1] as Time);
    }
    TemporalGraph::directed(d.clone(), lab)
}
