//! Minimum Labeling (no age bound): optimum size, optimal constructions and
//! the correspondence with the gossip (telephone) problem.
//!
//! The optimum is `2n - 4` when the graph contains a 4-cycle and `2n - 3`
//! otherwise. Both constructions follow an accumulate / fire / broadcast
//! schedule on a spanning forest:
//!
//! * tree case: BFS tree from vertex 0, split at the edge from 0 to its
//!   smallest child. Both halves accumulate into their roots, the split edge
//!   fires once, then both roots broadcast back down.
//! * C4 case: a multi-source BFS forest rooted at the four cycle vertices.
//!   Roots accumulate, the cycle fires in two rounds (ab, cd then bc, da),
//!   and the roots broadcast.
//!
//! Every emitted labeling is checked by the reachability engine before it is
//! returned.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, StaticGraph, Vertex};
use crate::temporal::{Labeling, TemporalGraph, Time};

/// Smallest |λ| making `g` temporally connected.
pub fn optimum_size(g: &StaticGraph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(match g.n() {
        0 | 1 => 0,
        n if g.find_c4().is_some() => 2 * n - 4,
        n => 2 * n - 3,
    })
}

/// An optimal temporally connecting labeling of `g`.
pub fn label(g: &StaticGraph) -> Result<Labeling> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() <= 1 {
        return Ok(Labeling::new());
    }
    let labeling = match g.find_c4() {
        Some(c4) => c4_schedule(g, c4),
        None => tree_schedule(g, 0),
    };
    let tg = TemporalGraph::new(g.clone(), labeling)?;
    if !tg.is_temporally_connected() {
        return Err(Error::NotTemporallyConnected);
    }
    Ok(tg.into_parts().1)
}

/// Spanning forest of the component(s) containing `roots`, grown by a
/// multi-source BFS with ascending neighbor order.
struct Forest {
    roots: Vec<Vertex>,
    parent: Vec<Option<Vertex>>,
    depth: Vec<usize>,
    /// Non-root vertices in BFS order.
    order: Vec<Vertex>,
}

impl Forest {
    fn grow(g: &StaticGraph, roots: &[Vertex]) -> Forest {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for &r in roots {
            seen[r] = true;
            queue.push_back(r);
        }
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        Forest {
            roots: roots.to_vec(),
            parent,
            depth,
            order,
        }
    }

    /// Height of each vertex inside its own tree (0 for leaves).
    fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.parent.len()];
        for &x in self.order.iter().rev() {
            let p = self.parent[x].unwrap();
            h[p] = h[p].max(h[x] + 1);
        }
        h
    }

    /// Accumulate into the roots, fire `rounds` of root edges, broadcast.
    fn schedule(&self, rounds: &[Vec<Edge>]) -> Labeling {
        let h = self.heights();
        let peak = self.roots.iter().map(|&r| h[r]).max().unwrap_or(0) as Time;
        let mut lab = Labeling::new();
        for &x in &self.order {
            let e = Edge::undirected(x, self.parent[x].unwrap());
            lab.add(e, h[x] as Time + 1);
            lab.add(e, peak + rounds.len() as Time + self.depth[x] as Time);
        }
        for (i, round) in rounds.iter().enumerate() {
            for &e in round {
                lab.add(e, peak + 1 + i as Time);
            }
        }
        lab
    }
}

/// Two-sided accumulate/broadcast schedule on the BFS tree of `root`'s
/// component: `2k - 1` labels for a tree with `k` edges.
pub(crate) fn tree_schedule(g: &StaticGraph, root: Vertex) -> Labeling {
    let Some(&child) = g.neighbors(root).first() else {
        return Labeling::new();
    };
    // BFS from root, then detach child's subtree as a second tree
    let mut forest = Forest::grow(g, &[root]);
    forest.parent[child] = None;
    forest.depth[child] = 0;
    forest.order.retain(|&x| x != child);
    let mut stack = vec![child];
    let mut kids: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    for &x in &forest.order {
        kids[forest.parent[x].unwrap()].push(x);
    }
    while let Some(x) = stack.pop() {
        for &y in &kids[x] {
            forest.depth[y] = forest.depth[x] + 1;
            stack.push(y);
        }
    }
    forest.roots = vec![root, child];
    forest.schedule(&[vec![Edge::undirected(root, child)]])
}

/// Four-root schedule around the cycle `a b c d`: each cycle edge gets one
/// label, each forest edge two.
pub(crate) fn c4_schedule(g: &StaticGraph, [a, b, c, d]: [Vertex; 4]) -> Labeling {
    let forest = Forest::grow(g, &[a, b, c, d]);
    forest.schedule(&[
        vec![Edge::undirected(a, b), Edge::undirected(c, d)],
        vec![Edge::undirected(b, c), Edge::undirected(d, a)],
    ])
}

/// A totally ordered list of calls; call `i` (1-based) is label `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CallSequence {
    pub calls: Vec<Edge>,
}

impl CallSequence {
    pub fn len(&self) -> usize {
        self.calls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.calls.is_empty()
    }

    /// Simulates the telephone protocol on `n` agents and reports whether
    /// every agent ends up knowing every secret.
    pub fn completes_gossip(&self, n: usize) -> bool {
        let mut known: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect();
        for e in &self.calls {
            if e.0 >= n || e.1 >= n {
                return false;
            }
            let merged: Vec<bool> = known[e.0]
                .iter()
                .zip(&known[e.1])
                .map(|(p, q)| *p || *q)
                .collect();
            known[e.0] = merged.clone();
            known[e.1] = merged;
        }
        known.iter().all(|k| k.iter().all(|&b| b))
    }
}

/// Serializes a temporally connected labeling into calls: empty time steps
/// vanish and equal-time edges are ordered by edge id.
pub fn labeling_to_calls(tg: &TemporalGraph) -> Result<CallSequence> {
    if tg.is_directed() {
        return Err(Error::InvalidInput(
            "gossip needs an undirected graph".into(),
        ));
    }
    if !tg.is_temporally_connected() {
        return Err(Error::NotTemporallyConnected);
    }
    let mut slots: Vec<(Time, Edge)> = tg.labeling().time_edges().map(|(e, t)| (t, e)).collect();
    slots.sort_unstable();
    Ok(CallSequence {
        calls: slots.into_iter().map(|(_, e)| e).collect(),
    })
}

pub fn calls_to_labeling(g: &StaticGraph, calls: &CallSequence) -> Result<TemporalGraph> {
    let mut lab = Labeling::new();
    for (i, e) in calls.calls.iter().enumerate() {
        if !g.has_edge(e.0, e.1) {
            return Err(Error::CallOnNonEdge(e.0, e.1));
        }
        lab.add(Edge::undirected(e.0, e.1), i as Time + 1);
    }
    TemporalGraph::new(g.clone(), lab)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> StaticGraph {
        StaticGraph::new(2, [(0, 1)]).unwrap()
    }

    fn path3() -> StaticGraph {
        StaticGraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> StaticGraph {
        StaticGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn e(u: Vertex, v: Vertex) -> Edge {
        Edge::undirected(u, v)
    }

    #[test]
    fn optimum_examples() {
        assert_eq!(optimum_size(&c4()), Ok(4));
        assert_eq!(optimum_size(&k2()), Ok(1));
        assert_eq!(optimum_size(&path3()), Ok(3));
        assert_eq!(optimum_size(&StaticGraph::empty(1)), Ok(0));
        assert_eq!(
            optimum_size(&StaticGraph::new(3, [(0, 1)]).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn constructions() {
        let l = label(&k2()).unwrap();
        assert_eq!(l.labels(e(0, 1)), &[1]);

        let l = label(&path3()).unwrap();
        assert_eq!(l.labels(e(0, 1)), &[2]);
        assert_eq!(l.labels(e(1, 2)), &[1, 3]);

        let l = label(&c4()).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.age(), 2);
        for (_, ts) in l.iter() {
            assert_eq!(ts.len(), 1);
        }
        assert!(label(&StaticGraph::empty(1)).unwrap().is_empty());
    }

    #[test]
    fn per_edge_counts_with_pendant_trees() {
        // C4 with a path hanging off vertex 2 and a leaf on vertex 0
        let g =
            StaticGraph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (0, 6)]).unwrap();
        let l = label(&g).unwrap();
        assert_eq!(l.len(), 2 * 7 - 4);
        for c in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            assert_eq!(l.labels(e(c.0, c.1)).len(), 1);
        }
        for t in [(2, 4), (4, 5), (0, 6)] {
            assert_eq!(l.labels(e(t.0, t.1)).len(), 2);
        }
    }

    #[test]
    fn calls_roundtrip_examples() {
        let tg = TemporalGraph::new(k2(), label(&k2()).unwrap()).unwrap();
        assert_eq!(labeling_to_calls(&tg).unwrap().calls, vec![e(0, 1)]);

        let tg = TemporalGraph::new(path3(), label(&path3()).unwrap()).unwrap();
        let cs = labeling_to_calls(&tg).unwrap();
        assert_eq!(cs.calls, vec![e(1, 2), e(0, 1), e(1, 2)]);
        assert!(cs.completes_gossip(3));

        let tg = TemporalGraph::new(c4(), label(&c4()).unwrap()).unwrap();
        let cs = labeling_to_calls(&tg).unwrap();
        assert_eq!(cs.len(), 4);
        let first: Vec<Edge> = cs.calls[..2].to_vec();
        assert!(first.iter().all(|x| tg.labeling().labels(*x) == [1]));
        assert!(cs.completes_gossip(4));
        let back = calls_to_labeling(&c4(), &cs).unwrap();
        assert!(back.is_temporally_connected());
        assert_eq!(back.labeling().len(), 4);
    }

    #[test]
    fn calls_errors() {
        let empty = calls_to_labeling(&k2(), &CallSequence::default()).unwrap();
        assert!(empty.labeling().is_empty());
        assert!(!empty.is_temporally_connected());
        assert_eq!(
            labeling_to_calls(&empty),
            Err(Error::NotTemporallyConnected)
        );
        let bad = CallSequence {
            calls: vec![e(0, 2)],
        };
        assert_eq!(
            calls_to_labeling(&path3(), &bad),
            Err(Error::CallOnNonEdge(0, 2))
        );
    }
}
