//! Multicolored Clique to MASL.
//!
//! Layout: color vertices `c_0 .. c_{k-1}`, vertex-vertices, edge-vertices
//! (ascending edge order), color-combination vertices `c_ij` for `i < j` in
//! lexicographic order, then dummies in creation order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, StaticGraph, Vertex};
use crate::reductions::{add_path, label_path};
use crate::temporal::{Labeling, Time};

pub const MASL_AGE: Time = 12;

#[derive(Clone, Debug)]
pub struct MaslInstance {
    pub graph: StaticGraph,
    pub terminals: Vec<Vertex>,
    pub age: Time,
    pub budget: usize,
    pub k: usize,
    pub source: StaticGraph,
    /// Color of each source vertex, in `0..k`.
    pub coloring: Vec<usize>,
    pub color_vertices: Vec<Vertex>,
    pub vertex_vertices: Vec<Vertex>,
    pub edge_vertices: Vec<Vertex>,
    /// `c_ij` keyed by `(i, j)`, `i < j`.
    pub combo_vertices: BTreeMap<(usize, usize), Vertex>,
    /// `c_i .. u_v` per source vertex.
    pub color_paths: Vec<Vec<Vertex>>,
    /// Per source edge `vw` (v < w): `[u_v .. u_e, u_w .. u_e]`.
    pub incidence_paths: Vec<[Vec<Vertex>; 2]>,
    /// `u_e .. c_ij` per source edge.
    pub combo_paths: Vec<Vec<Vertex>>,
    /// Length-12 paths between terminal pairs, keyed by endpoints.
    pub direct_paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

fn poly(k: usize) -> (usize, usize) {
    let k = k as i64;
    let quartic = k.pow(4) - 2 * k.pow(3) - k * k + 2 * k;
    let cubic = k.pow(3) - 3 * k * k + 2 * k;
    (quartic as usize, cubic as usize)
}

pub fn masl_budget(k: usize) -> usize {
    let (quartic, cubic) = poly(k);
    6 * k + 6 * (k * k - k) + 6 * (k * k - k) + 3 * quartic + 12 * cubic
}

/// Dummy count of the construction in closed form.
pub fn masl_dummy_formula(n: usize, m: usize, k: usize) -> usize {
    let (quartic, cubic) = poly(k);
    2 * n + 4 * m + 5 * m + 11 * quartic / 8 + 11 * cubic / 2
}

impl MaslInstance {
    pub fn dummy_count(&self) -> usize {
        self.graph.n() - self.k - self.source.n() - self.source.m() - self.combo_vertices.len()
    }
}

pub fn build_masl_instance(g: &StaticGraph, k: usize, coloring: &[usize]) -> Result<MaslInstance> {
    if k < 2 {
        return Err(Error::InvalidInput("at least two colors are needed".into()));
    }
    if coloring.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "coloring has {} entries for {} vertices",
            coloring.len(),
            g.n()
        )));
    }
    if let Some(c) = coloring.iter().find(|&&c| c >= k) {
        return Err(Error::InvalidInput(format!("color {c} outside 0..{k}")));
    }
    if let Some(Edge(v, w)) = g.edges().find(|e| coloring[e.0] == coloring[e.1]) {
        return Err(Error::InvalidInput(format!(
            "edge {v}-{w} is monochromatic"
        )));
    }
    let (n, m) = (g.n(), g.m());
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let mut h = StaticGraph::empty(k + n + m + pairs.len());
    let color_vertices: Vec<Vertex> = (0..k).collect();
    let vertex_vertices: Vec<Vertex> = (k..k + n).collect();
    let edge_vertices: Vec<Vertex> = (k + n..k + n + m).collect();
    let combo_vertices: BTreeMap<(usize, usize), Vertex> = pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, k + n + m + i))
        .collect();

    let color_paths = (0..n)
        .map(|v| add_path(&mut h, color_vertices[coloring[v]], vertex_vertices[v], 2))
        .collect();
    let mut incidence_paths = Vec::with_capacity(m);
    let mut combo_paths = Vec::with_capacity(m);
    for (Edge(v, w), &ue) in g.edges().zip(&edge_vertices) {
        incidence_paths.push([
            add_path(&mut h, vertex_vertices[v], ue, 2),
            add_path(&mut h, vertex_vertices[w], ue, 2),
        ]);
        let (ci, cj) = (coloring[v].min(coloring[w]), coloring[v].max(coloring[w]));
        combo_paths.push(add_path(&mut h, ue, combo_vertices[&(ci, cj)], 5));
    }
    let mut direct_paths = BTreeMap::new();
    for (a, &p) in pairs.iter().enumerate() {
        for &q in &pairs[a + 1..] {
            let (x, y) = (combo_vertices[&p], combo_vertices[&q]);
            direct_paths.insert((x, y), add_path(&mut h, x, y, 11));
        }
    }
    for (i, &x) in color_vertices.iter().enumerate() {
        for &(a, b) in &pairs {
            if i != a && i != b {
                let y = combo_vertices[&(a, b)];
                direct_paths.insert((x, y), add_path(&mut h, x, y, 11));
            }
        }
    }
    let mut terminals = color_vertices.clone();
    terminals.extend(combo_vertices.values());
    Ok(MaslInstance {
        graph: h,
        terminals,
        age: MASL_AGE,
        budget: masl_budget(k),
        k,
        source: g.clone(),
        coloring: coloring.to_vec(),
        color_vertices,
        vertex_vertices,
        edge_vertices,
        combo_vertices,
        color_paths,
        incidence_paths,
        combo_paths,
        direct_paths,
    })
}

/// Builds the certificate from a clique with one vertex per color.
pub fn certificate_masl_labeling(inst: &MaslInstance, clique: &[Vertex]) -> Result<Labeling> {
    let mut by_color = vec![None; inst.k];
    for &v in clique {
        if v >= inst.source.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: inst.source.n(),
            });
        }
        if by_color[inst.coloring[v]].replace(v).is_some() {
            return Err(Error::InvalidInput(format!(
                "two clique vertices of color {}",
                inst.coloring[v]
            )));
        }
    }
    let chosen: Vec<Vertex> = by_color
        .iter()
        .enumerate()
        .map(|(c, v)| {
            v.ok_or_else(|| Error::InvalidInput(format!("no clique vertex of color {c}")))
        })
        .collect::<Result<_>>()?;
    let edge_index: BTreeMap<Edge, usize> = inst
        .source
        .edges()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();

    let mut lab = Labeling::new();
    for &v in &chosen {
        // c_i -> u_v on 1,2,3 and u_v -> c_i on 10,11,12
        label_path(&mut lab, &inst.color_paths[v], |j| [j, 13 - j]);
    }
    for (a, &v) in chosen.iter().enumerate() {
        for &w in &chosen[a + 1..] {
            let e = Edge::undirected(v, w);
            let Some(&i) = edge_index.get(&e) else {
                return Err(Error::InvalidInput(format!("{v} and {w} are not adjacent")));
            };
            for side in &inst.incidence_paths[i] {
                // u_v -> u_e on 4,5,6 and back on 7,8,9
                label_path(&mut lab, side, |j| [3 + j, 10 - j]);
            }
            // u_e -> c_ij on 7..12, c_ij -> u_e on 1..6
            label_path(&mut lab, &inst.combo_paths[i], |j| [6 + j, 7 - j]);
        }
    }
    for path in inst.direct_paths.values() {
        label_path(&mut lab, path, |j| [j, 13 - j]);
    }
    Ok(lab)
}
