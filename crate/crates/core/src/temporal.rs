//! Time-labelings, temporal graphs and the foremost-arrival engine.
//!
//! Reachability is computed by scanning time-edges in ascending time order and
//! relaxing `arrival[y] = t` whenever `arrival[x] < t`. A strictly increasing
//! walk never needs to revisit a vertex: cutting out the loop between two
//! visits keeps the times increasing and does not delay the arrival. So the
//! scan answers reachability by strict temporal paths exactly, and the
//! predecessor pointers it records always spell out a simple path.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Edge, StaticGraph, Vertex};

pub type Time = u32;

/// Edge (or arc) -> strictly ascending list of positive time-labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labeling {
    map: BTreeMap<Edge, Vec<Time>>,
}

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a labeling from explicit lists. Lists must be strictly ascending
    /// and positive; empty lists are dropped.
    pub fn from_lists<I>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, Vec<Time>)>,
    {
        let mut map = BTreeMap::new();
        for (e, times) in lists {
            if times.first() == Some(&0) {
                return Err(Error::InvalidLabels(e.0, e.1, "label 0".into()));
            }
            if times.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidLabels(
                    e.0,
                    e.1,
                    "labels must be strictly ascending".into(),
                ));
            }
            if times.is_empty() {
                continue;
            }
            if map.insert(e, times).is_some() {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Labeling { map })
    }

    /// Adds `t` to the labels of `e`. Returns false if it was already there.
    pub fn add(&mut self, e: Edge, t: Time) -> bool {
        assert!(t >= 1, "time-labels start at 1");
        let list = self.map.entry(e).or_default();
        match list.binary_search(&t) {
            Ok(_) => false,
            Err(pos) => {
                list.insert(pos, t);
                true
            }
        }
    }

    pub fn add_all<I: IntoIterator<Item = Time>>(&mut self, e: Edge, times: I) {
        for t in times {
            self.add(e, t);
        }
    }

    pub fn remove(&mut self, e: Edge, t: Time) -> bool {
        let Some(list) = self.map.get_mut(&e) else {
            return false;
        };
        let Ok(pos) = list.binary_search(&t) else {
            return false;
        };
        list.remove(pos);
        if list.is_empty() {
            self.map.remove(&e);
        }
        true
    }

    pub fn labels(&self, e: Edge) -> &[Time] {
        self.map.get(&e).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn has(&self, e: Edge, t: Time) -> bool {
        self.labels(e).binary_search(&t).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &[Time])> + '_ {
        self.map.iter().map(|(e, l)| (*e, l.as_slice()))
    }

    /// Labeled edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.map.keys().copied()
    }

    /// Every (edge, time) pair, edge-major.
    pub fn time_edges(&self) -> impl Iterator<Item = (Edge, Time)> + '_ {
        self.map
            .iter()
            .flat_map(|(e, l)| l.iter().map(move |&t| (*e, t)))
    }

    /// Total number of labels, |λ|.
    pub fn len(&self) -> usize {
        self.map.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Largest label, 0 for the empty labeling.
    pub fn age(&self) -> Time {
        self.map
            .values()
            .filter_map(|l| l.last().copied())
            .max()
            .unwrap_or(0)
    }

    /// Union of two labelings.
    pub fn merge(&mut self, other: &Labeling) {
        for (e, t) in other.time_edges() {
            self.add(e, t);
        }
    }
}

/// The static graph underneath a temporal graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Host {
    Undirected(StaticGraph),
    Directed(DirectedGraph),
}

impl Host {
    pub fn n(&self) -> usize {
        match self {
            Host::Undirected(g) => g.n(),
            Host::Directed(d) => d.n(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, Host::Directed(_))
    }

    fn contains(&self, e: Edge) -> bool {
        match self {
            Host::Undirected(g) => e.0 < e.1 && g.has_edge(e.0, e.1),
            Host::Directed(d) => d.has_arc(e.0, e.1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    host: Host,
    labeling: Labeling,
}

impl TemporalGraph {
    pub fn new(graph: StaticGraph, labeling: Labeling) -> Result<Self> {
        Self::with_host(Host::Undirected(graph), labeling)
    }

    pub fn directed(graph: DirectedGraph, labeling: Labeling) -> Result<Self> {
        Self::with_host(Host::Directed(graph), labeling)
    }

    pub fn with_host(host: Host, labeling: Labeling) -> Result<Self> {
        if let Some(e) = labeling.edges().find(|e| !host.contains(*e)) {
            return Err(Error::UnknownEdge(e.0, e.1));
        }
        Ok(TemporalGraph { host, labeling })
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    pub fn host(&self) -> &Host {
        &self.host
    }

    /// The undirected host graph, if any.
    pub fn graph(&self) -> Option<&StaticGraph> {
        match &self.host {
            Host::Undirected(g) => Some(g),
            Host::Directed(_) => None,
        }
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn into_parts(self) -> (Host, Labeling) {
        (self.host, self.labeling)
    }

    pub fn is_directed(&self) -> bool {
        self.host.is_directed()
    }

    /// Directed time-edges `(t, from, to)` sorted ascending; undirected
    /// edges contribute both orientations.
    pub fn directed_time_edges(&self) -> Vec<(Time, Vertex, Vertex)> {
        let mut out = Vec::with_capacity(2 * self.labeling.len());
        for (e, t) in self.labeling.time_edges() {
            out.push((t, e.0, e.1));
            if !self.is_directed() {
                out.push((t, e.1, e.0));
            }
        }
        out.sort_unstable();
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn foremost_arrivals(&self, source: Vertex) -> Result<ReachReport> {
        self.check_vertex(source)?;
        Ok(scan(self.n(), &self.directed_time_edges(), source))
    }

    pub fn is_temporally_connected(&self) -> bool {
        let all: Vec<Vertex> = (0..self.n()).collect();
        self.connects(&all)
    }

    /// Whether every ordered pair of distinct terminals is joined by a
    /// temporal path. Intermediate vertices are unrestricted.
    pub fn is_r_connected(&self, terminals: &[Vertex]) -> Result<bool> {
        for &r in terminals {
            self.check_vertex(r)?;
        }
        Ok(self.connects(terminals))
    }

    fn connects(&self, terminals: &[Vertex]) -> bool {
        if terminals.len() <= 1 {
            return true;
        }
        let edges = self.directed_time_edges();
        terminals.iter().all(|&r| {
            let report = scan(self.n(), &edges, r);
            terminals.iter().all(|&s| report.arrival[s].is_some())
        })
    }

    /// Checks the YES-instance conditions shared by ML, MAL, MSL and MASL.
    /// `terminals = None` means all vertices.
    pub fn verify(
        &self,
        terminals: Option<&[Vertex]>,
        age_bound: Option<Time>,
        budget: Option<usize>,
    ) -> Result<VerifyReport> {
        let r_connected = match terminals {
            Some(r) => self.is_r_connected(r)?,
            None => self.is_temporally_connected(),
        };
        let age = self.labeling.age();
        let label_count = self.labeling.len();
        Ok(VerifyReport {
            r_connected,
            age,
            label_count,
            age_ok: age_bound.is_none_or(|a| age <= a),
            budget_ok: budget.is_none_or(|k| label_count <= k),
        })
    }
}

fn scan(n: usize, sorted_edges: &[(Time, Vertex, Vertex)], source: Vertex) -> ReachReport {
    let mut arrival = vec![None; n];
    let mut pred = vec![None; n];
    arrival[source] = Some(0);
    for &(t, x, y) in sorted_edges {
        // equal-time edges never chain: a vertex reached at t has arrival t, not < t
        if matches!(arrival[x], Some(ax) if ax < t) && arrival[y].is_none() {
            arrival[y] = Some(t);
            pred[y] = Some((x, t));
        }
    }
    ReachReport {
        source,
        arrival,
        pred,
    }
}

/// Foremost arrival times from one source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachReport {
    pub source: Vertex,
    /// `Some(0)` at the source, `None` when unreached.
    pub arrival: Vec<Option<Time>>,
    pred: Vec<Option<(Vertex, Time)>>,
}

impl ReachReport {
    pub fn reached(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.arrival
            .iter()
            .enumerate()
            .filter_map(|(v, a)| a.map(|_| v))
    }

    pub fn reaches_all(&self) -> bool {
        self.arrival.iter().all(Option::is_some)
    }

    /// A foremost temporal path to `target`, rebuilt from predecessors.
    pub fn witness(&self, target: Vertex, directed: bool) -> Option<TemporalPath> {
        self.arrival.get(target)?.as_ref()?;
        let mut steps = Vec::new();
        let mut v = target;
        while v != self.source {
            let (x, t) = self.pred[v]?;
            let e = if directed {
                Edge::arc(x, v)
            } else {
                Edge::undirected(x, v)
            };
            steps.push((e, t));
            v = x;
        }
        steps.reverse();
        Some(TemporalPath {
            start: self.source,
            steps,
        })
    }
}

/// A strictly time-increasing simple path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalPath {
    pub start: Vertex,
    pub steps: Vec<(Edge, Time)>,
}

impl TemporalPath {
    /// Vertex sequence, or `None` if consecutive steps do not chain.
    pub fn vertices(&self) -> Option<Vec<Vertex>> {
        let mut seq = vec![self.start];
        for (e, _) in &self.steps {
            let cur = *seq.last().unwrap();
            if !e.touches(cur) {
                return None;
            }
            seq.push(e.other(cur));
        }
        Some(seq)
    }

    pub fn arrival(&self) -> Time {
        self.steps.last().map_or(0, |s| s.1)
    }

    /// Checks the path against the host labeling.
    pub fn validate(&self, tg: &TemporalGraph) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidInput(format!("temporal path: {msg}")));
        let Some(seq) = self.vertices() else {
            return bad("steps do not chain");
        };
        if tg.is_directed() {
            for (i, (e, _)) in self.steps.iter().enumerate() {
                if e.0 != seq[i] {
                    return bad("arc traversed backwards");
                }
            }
        }
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return bad("vertex repeated");
        }
        if self.steps.windows(2).any(|w| w[0].1 >= w[1].1) {
            return bad("times not strictly increasing");
        }
        if let Some((e, t)) = self.steps.iter().find(|(e, t)| !tg.labeling().has(*e, *t)) {
            return bad(&format!("({e}, {t}) is not a time-edge"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub r_connected: bool,
    pub age: Time,
    pub label_count: usize,
    pub age_ok: bool,
    pub budget_ok: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.r_connected && self.age_ok && self.budget_ok
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "connected = {}", self.r_connected)?;
        writeln!(f, "age = {}", self.age)?;
        writeln!(f, "labels = {}", self.label_count)?;
        writeln!(f, "age_ok = {}", self.age_ok)?;
        write!(f, "budget_ok = {}", self.budget_ok)
    }
}
