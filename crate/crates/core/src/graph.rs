//! Static substrate graphs: undirected [`StaticGraph`] and [`DirectedGraph`].
//!
//! Vertices are the ids `0..n`. Edge sets are kept in ordered sets so that
//! every traversal in the crate is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An ordered vertex pair. Undirected edges are stored normalized with
/// `0 < 1`; arcs keep their orientation (tail, head).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    /// Normalized undirected edge.
    pub fn undirected(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn arc(tail: Vertex, head: Vertex) -> Self {
        Edge(tail, head)
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

fn check_pair(n: usize, u: Vertex, v: Vertex) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaticGraph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl StaticGraph {
    pub fn empty(n: usize) -> Self {
        StaticGraph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = StaticGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        check_pair(self.n, u, v)?;
        let e = Edge::undirected(u, v);
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
        Ok(())
    }

    /// Adds the edge unless it is already present. Returns whether it was new.
    pub fn ensure_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        check_pair(self.n, u, v)?;
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.add_edge(u, v)?;
        Ok(true)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&Edge::undirected(u, v))
    }

    /// Neighbors in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// The subgraph on the same vertex ids keeping only `edges`.
    pub fn edge_subgraph<'a, I>(&self, edges: I) -> Result<StaticGraph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut h = StaticGraph::empty(self.n);
        for e in edges {
            if !self.has_edge(e.0, e.1) {
                return Err(Error::UnknownEdge(e.0, e.1));
            }
            h.add_edge(e.0, e.1)?;
        }
        Ok(h)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// BFS parent pointers from `source`, scanning neighbors in ascending order.
    pub fn bfs_parents(&self, source: Vertex) -> Vec<Option<Vertex>> {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// All-pairs shortest path lengths. Errors when the graph is disconnected.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.n)
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Lexicographically least `(a, b, c, d)` with edges ab, bc, cd, da.
    pub fn find_c4(&self) -> Option<[Vertex; 4]> {
        for a in 0..self.n {
            for &b in &self.adj[a] {
                for &c in &self.adj[b] {
                    if c == a {
                        continue;
                    }
                    for &d in &self.adj[c] {
                        if d != a && d != b && self.has_edge(d, a) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// One representative cycle per 4-vertex set spanning a C4, keyed by the
    /// sorted vertex set. The representative is the lexicographically least
    /// tuple for that set.
    pub fn c4_cycles(&self) -> Vec<[Vertex; 4]> {
        let mut by_set: BTreeMap<[Vertex; 4], [Vertex; 4]> = BTreeMap::new();
        for a in 0..self.n {
            for &b in &self.adj[a] {
                if b < a {
                    continue;
                }
                for &c in &self.adj[b] {
                    if c <= a {
                        continue;
                    }
                    for &d in &self.adj[c] {
                        if d <= a || d == b || !self.has_edge(d, a) {
                            continue;
                        }
                        let mut key = [a, b, c, d];
                        key.sort_unstable();
                        by_set.entry(key).or_insert([a, b, c, d]);
                    }
                }
            }
        }
        by_set.into_values().collect()
    }
}

fn insert_sorted(list: &mut Vec<Vertex>, x: Vertex) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

/// Simple digraph on vertices `0..n`. Acyclicity is not enforced here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    arcs: BTreeSet<Edge>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
}

impl DirectedGraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = DirectedGraph {
            n,
            arcs: BTreeSet::new(),
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
        };
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        check_pair(self.n, u, v)?;
        if !self.arcs.insert(Edge::arc(u, v)) {
            return Err(Error::DuplicateEdge(u, v));
        }
        insert_sorted(&mut self.out[u], v);
        insert_sorted(&mut self.inn[v], u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_set(&self) -> &BTreeSet<Edge> {
        &self.arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arcs.contains(&Edge::arc(u, v))
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    /// Vertices reachable from `source` by directed paths (including itself),
    /// optionally ignoring one arc.
    pub fn reachable_from(&self, source: Vertex, skip: Option<Edge>) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if skip == Some(Edge::arc(x, y)) || seen[y] {
                    continue;
                }
                seen[y] = true;
                stack.push(y);
            }
        }
        seen
    }
}
