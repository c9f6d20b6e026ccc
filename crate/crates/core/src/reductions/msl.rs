//! Vertex Cover to MSL.
//!
//! Layout: `n0 = 0`, `n1 = 1`, then one vertex per source vertex, one per
//! source edge (ascending edge order), then dummies in creation order.

use crate::error::{Error, Result};
use crate::graph::{Edge, StaticGraph, Vertex};
use crate::reductions::{add_path, label_path};
use crate::temporal::{Labeling, Time};

#[derive(Clone, Debug)]
pub struct MslInstance {
    pub graph: StaticGraph,
    pub terminals: Vec<Vertex>,
    /// Target label count `k*`.
    pub budget: usize,
    pub k: usize,
    pub source: StaticGraph,
    pub n0: Vertex,
    pub n1: Vertex,
    pub vertex_vertices: Vec<Vertex>,
    pub edge_vertices: Vec<Vertex>,
    /// `n1 .. u_v` for every source vertex `v`.
    pub hub_paths: Vec<Vec<Vertex>>,
    /// For the `i`-th source edge `vw` (v < w): `[u_e .. u_v, u_e .. u_w]`.
    pub edge_paths: Vec<[Vec<Vertex>; 2]>,
}

impl MslInstance {
    pub fn dummy_count(&self) -> usize {
        self.graph.n() - 2 - self.source.n() - self.source.m()
    }
}

pub fn msl_budget(m: usize, k: usize) -> usize {
    6 * k + 2 * m * (6 * k + 1) + 1
}

pub fn build_msl_instance(g: &StaticGraph, k: usize) -> Result<MslInstance> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "cover size k must be at least 1".into(),
        ));
    }
    let (n, m) = (g.n(), g.m());
    let mut h = StaticGraph::empty(2 + n + m);
    h.add_edge(0, 1)?;
    let vertex_vertices: Vec<Vertex> = (2..2 + n).collect();
    let edge_vertices: Vec<Vertex> = (2 + n..2 + n + m).collect();
    let hub_paths = vertex_vertices
        .iter()
        .map(|&u| add_path(&mut h, 1, u, 2))
        .collect();
    let edge_paths = g
        .edges()
        .zip(&edge_vertices)
        .map(|(Edge(v, w), &ue)| {
            [
                add_path(&mut h, ue, vertex_vertices[v], 6 * k),
                add_path(&mut h, ue, vertex_vertices[w], 6 * k),
            ]
        })
        .collect();
    let mut terminals = vec![0];
    terminals.extend_from_slice(&edge_vertices);
    Ok(MslInstance {
        graph: h,
        terminals,
        budget: msl_budget(m, k),
        k,
        source: g.clone(),
        n0: 0,
        n1: 1,
        vertex_vertices,
        edge_vertices,
        hub_paths,
        edge_paths,
    })
}

/// Forwarding paths `u_e -> u_v -> n1 -> n0` use labels `1 ..= 6k+5`, the
/// returning paths `n1 -> u_v -> u_e` continue up to `12k + 9`. Each edge
/// routes through its smallest endpoint in the cover.
pub fn certificate_msl_labeling(inst: &MslInstance, cover: &[Vertex]) -> Result<Labeling> {
    let mut s = cover.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != inst.k {
        return Err(Error::InvalidInput(format!(
            "cover has {} vertices, expected {}",
            s.len(),
            inst.k
        )));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= inst.source.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: inst.source.n(),
        });
    }
    let k = inst.k as Time;
    let mut lab = Labeling::new();
    for (i, Edge(v, w)) in inst.source.edges().enumerate() {
        let side = if s.contains(&v) {
            0
        } else if s.contains(&w) {
            1
        } else {
            return Err(Error::InvalidInput(format!("edge {v}-{w} is not covered")));
        };
        label_path(&mut lab, &inst.edge_paths[i][side], |j| {
            [j, 12 * k + 10 - j]
        });
    }
    for &v in &s {
        // hub path runs n1 -> u_v
        label_path(&mut lab, &inst.hub_paths[v], |j| {
            [6 * k + 5 - j, 6 * k + 5 + j]
        });
    }
    lab.add(Edge::undirected(inst.n0, inst.n1), 6 * k + 5);
    Ok(lab)
}
