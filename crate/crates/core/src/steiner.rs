//! Minimum Steiner Labeling via Steiner trees.
//!
//! A minimum R-connecting labeling either labels a Steiner tree (`2k* - 1`
//! labels, `k*` the Steiner tree size) or a tree of the same size that
//! contains three edges of some 4-cycle, closed by the fourth edge
//! (`2k* - 2` labels). The second case applies exactly when some C4 has
//! `steiner(R ∪ V(C4)) = k*`, so the optimum is found with one Steiner
//! computation per 4-vertex cycle set.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, StaticGraph, Vertex};
use crate::ml;
use crate::temporal::{Labeling, TemporalGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerResult {
    pub cost: usize,
    pub edges: BTreeSet<Edge>,
}

#[derive(Clone, Copy)]
enum Step {
    Path(Vertex),
    Grow { via: Vertex, split: usize },
}

/// Minimum-edge Steiner tree by Dreyfus–Wagner subset DP over
/// (terminal subset, vertex) states. Exponential only in the number of
/// distinct terminals. Ties resolve to the smallest vertex / subset index.
pub fn steiner_tree(g: &StaticGraph, terminals: &[Vertex]) -> Result<SteinerResult> {
    let mut ts: Vec<Vertex> = terminals.to_vec();
    ts.sort_unstable();
    ts.dedup();
    if ts.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    if let Some(&v) = ts.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let k = ts.len();
    let dist = g.distance_matrix()?;
    let parents: Vec<Vec<Option<Vertex>>> = (0..n).map(|s| g.bfs_parents(s)).collect();

    let full = (1usize << k) - 1;
    let mut dp = vec![vec![usize::MAX; n]; full + 1];
    let mut step = vec![vec![Step::Path(0); n]; full + 1];
    for (i, &t) in ts.iter().enumerate() {
        for v in 0..n {
            dp[1 << i][v] = dist[t][v];
            step[1 << i][v] = Step::Path(t);
        }
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let low = mask & mask.wrapping_neg();
        // best merge of two disjoint sub-trees rooted at u
        let mut merge = vec![(usize::MAX, 0usize); n];
        for (u, slot) in merge.iter_mut().enumerate() {
            let mut sub = (mask - 1) & mask;
            while sub > 0 {
                if sub & low != 0 {
                    let c = dp[sub][u] + dp[mask ^ sub][u];
                    if c < slot.0 {
                        *slot = (c, sub);
                    }
                }
                sub = (sub - 1) & mask;
            }
        }
        for v in 0..n {
            let mut best = (usize::MAX, 0, 0);
            for (u, &(c, split)) in merge.iter().enumerate() {
                let total = c + dist[u][v];
                if total < best.0 {
                    best = (total, u, split);
                }
            }
            dp[mask][v] = best.0;
            step[mask][v] = Step::Grow {
                via: best.1,
                split: best.2,
            };
        }
    }

    let mut edges = BTreeSet::new();
    let mut stack = vec![(full, ts[0])];
    let walk = |from: Vertex, to: Vertex, edges: &mut BTreeSet<Edge>| {
        let mut x = to;
        while x != from {
            let p = parents[from][x].unwrap();
            edges.insert(Edge::undirected(p, x));
            x = p;
        }
    };
    while let Some((mask, v)) = stack.pop() {
        match step[mask][v] {
            Step::Path(t) => walk(t, v, &mut edges),
            Step::Grow { via, split } => {
                walk(via, v, &mut edges);
                stack.push((split, via));
                stack.push((mask ^ split, via));
            }
        }
    }
    let cost = dp[full][ts[0]];
    debug_assert_eq!(cost, edges.len());
    Ok(SteinerResult { cost, edges })
}

/// What an optimal MSL labeling is built on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MslPlan {
    /// Steiner tree size for the terminals alone.
    pub steiner_cost: usize,
    /// The certificate cycle when a C4 keeps the tree size unchanged.
    pub c4: Option<[Vertex; 4]>,
    pub optimum: usize,
}

fn check_terminals(g: &StaticGraph, terminals: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut ts = terminals.to_vec();
    ts.sort_unstable();
    ts.dedup();
    if let Some(&v) = ts.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(ts)
}

pub fn msl_plan(g: &StaticGraph, terminals: &[Vertex]) -> Result<MslPlan> {
    let ts = check_terminals(g, terminals)?;
    if ts.len() <= 1 {
        return Ok(MslPlan {
            steiner_cost: 0,
            c4: None,
            optimum: 0,
        });
    }
    let base = steiner_tree(g, &ts)?.cost;
    let costs: Vec<Result<(usize, [Vertex; 4])>> = g
        .c4_cycles()
        .into_par_iter()
        .map(|cyc| {
            let mut ext = ts.clone();
            ext.extend_from_slice(&cyc);
            Ok((steiner_tree(g, &ext)?.cost, cyc))
        })
        .collect();
    let mut c4 = None;
    for r in costs {
        let (cost, cyc) = r?;
        if cost == base {
            c4 = Some(cyc);
            break;
        }
    }
    let optimum = if c4.is_some() {
        2 * base - 2
    } else {
        2 * base - 1
    };
    Ok(MslPlan {
        steiner_cost: base,
        c4,
        optimum,
    })
}

/// Minimum number of labels making `terminals` pairwise temporally connected.
pub fn msl_optimum_size(g: &StaticGraph, terminals: &[Vertex]) -> Result<usize> {
    Ok(msl_plan(g, terminals)?.optimum)
}

/// Edges of the subgraph an optimal labeling uses: a Steiner tree, or a
/// tree through three edges of the certificate C4 plus its closing edge.
pub fn msl_support(
    g: &StaticGraph,
    terminals: &[Vertex],
    plan: &MslPlan,
) -> Result<BTreeSet<Edge>> {
    let ts = check_terminals(g, terminals)?;
    if ts.len() <= 1 {
        return Ok(BTreeSet::new());
    }
    let Some([a, b, c, d]) = plan.c4 else {
        return Ok(steiner_tree(g, &ts)?.edges);
    };
    let mut ext = ts.clone();
    ext.extend_from_slice(&[a, b, c, d]);
    let tree = steiner_tree(g, &ext)?;
    // re-span the tree's vertex set so that it runs along a-b-c-d
    let mut uf: Vec<usize> = (0..g.n()).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let nx = uf[y];
            uf[y] = r;
            y = nx;
        }
        r
    }
    let path = [
        Edge::undirected(a, b),
        Edge::undirected(b, c),
        Edge::undirected(c, d),
    ];
    let mut support = BTreeSet::new();
    for e in path.iter().chain(tree.edges.iter()) {
        let (ra, rb) = (find(&mut uf, e.0), find(&mut uf, e.1));
        if ra != rb {
            uf[ra] = rb;
            support.insert(*e);
        }
    }
    support.insert(Edge::undirected(d, a));
    Ok(support)
}

/// An optimal R-connecting labeling, checked by the engine.
pub fn msl_label(g: &StaticGraph, terminals: &[Vertex]) -> Result<Labeling> {
    let plan = msl_plan(g, terminals)?;
    let support = msl_support(g, terminals, &plan)?;
    if support.is_empty() {
        return Ok(Labeling::new());
    }
    let h = g.edge_subgraph(&support)?;
    let lab = match plan.c4 {
        Some(cyc) => ml::c4_schedule(&h, cyc),
        None => {
            let root = support.iter().next().unwrap().0;
            ml::tree_schedule(&h, root)
        }
    };
    let tg = TemporalGraph::new(g.clone(), lab)?;
    let report = tg.verify(Some(terminals), None, Some(plan.optimum))?;
    if !report.r_connected || report.label_count != plan.optimum {
        return Err(Error::NotTemporallyConnected);
    }
    Ok(tg.into_parts().1)
}

/// Whether the labeled edges form a tree whose leaves are terminals, or
/// such a tree plus one edge closing a 4-cycle.
pub fn check_structure_lemma(g: &StaticGraph, terminals: &[Vertex], labeling: &Labeling) -> bool {
    let edges: Vec<Edge> = labeling.edges().collect();
    if edges.is_empty() {
        return terminals.len() <= 1;
    }
    let n = g.n();
    let Ok(h) = g.edge_subgraph(&edges) else {
        return false;
    };
    let verts: Vec<Vertex> = (0..n).filter(|&v| h.degree(v) > 0).collect();
    let dist = h.bfs_distances(verts[0]);
    if verts.iter().any(|&v| dist[v].is_none()) {
        return false;
    }
    let is_terminal = |v: Vertex| terminals.contains(&v);
    if edges.len() + 1 == verts.len() {
        return verts.iter().all(|&v| h.degree(v) > 1 || is_terminal(v));
    }
    if edges.len() != verts.len() {
        return false;
    }
    // unicyclic: peel leaves to expose the cycle
    let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut stack: Vec<Vertex> = verts.iter().copied().filter(|&v| deg[v] == 1).collect();
    let mut alive = vec![false; n];
    for &v in &verts {
        alive[v] = true;
    }
    while let Some(v) = stack.pop() {
        alive[v] = false;
        for &w in h.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let cycle: Vec<Vertex> = verts.iter().copied().filter(|&v| alive[v]).collect();
    if cycle.len() != 4 {
        return false;
    }
    if !verts.iter().all(|&v| h.degree(v) > 1 || is_terminal(v)) {
        return false;
    }
    // some cycle edge can be dropped without exposing a non-terminal leaf
    let ok_end = |v: Vertex| h.degree(v) > 2 || is_terminal(v);
    edges
        .iter()
        .any(|e| alive[e.0] && alive[e.1] && ok_end(e.0) && ok_end(e.1))
}
