//! Exhaustive oracles for tiny MAL / MASL instances, and the cycle results.
//!
//! The oracle enumerates sets of (edge, time) slots by iterative deepening on
//! the label count. Slots are ordered time-major, so a depth-first search over
//! increasing slot indices visits each k-subset once in lexicographic order.
//! Three cuts keep it small:
//!
//! * compression: the used times must form a prefix `1..=j`. Deleting an
//!   empty time step and shifting later labels down preserves every temporal
//!   path and only lowers slot indices, so the least witness is compressed.
//! * a slot that changes no reachability state at the moment it is added can
//!   be dropped from the witness, so at the minimum count it never occurs.
//! * each slot touches two vertices, so `c` unfinished terminals need at
//!   least `ceil(c / 2)` more slots, and each needs one that touches it.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, StaticGraph, Vertex};
use crate::temporal::{Labeling, TemporalGraph, Time};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Cap on `|E| * a`.
    pub max_slots: usize,
    /// Starting label count. The search descends from here while feasible.
    pub budget_hint: Option<usize>,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_slots: 24,
            budget_hint: None,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub k_min: usize,
    pub witness: Labeling,
}

struct Search<'a> {
    edges: &'a [Edge],
    m: usize,
    terminals: &'a [Vertex],
    full: u64,
    init: Vec<u64>,
    total: usize,
    last_touch: Vec<Option<usize>>,
    prune_useless: bool,
}

impl Search<'_> {
    fn unfinished(&self, cur: &[u64]) -> usize {
        self.terminals
            .iter()
            .filter(|&&r| cur[r] != self.full)
            .count()
    }

    fn admissible(&self, next: usize, left: usize, cur: &[u64]) -> bool {
        let mut open = 0usize;
        for &r in self.terminals {
            if cur[r] != self.full {
                open += 1;
                if self.last_touch[r].is_none_or(|s| s < next) {
                    return false;
                }
            }
        }
        open.div_ceil(2) <= left
    }

    /// Applies slot `s` on top of state `(cur_t, prev, cur)`.
    fn step(&self, s: usize, cur_t: Time, prev: &[u64], cur: &[u64]) -> (Time, Vec<u64>, Vec<u64>) {
        let t = (s / self.m) as Time + 1;
        let prev = if t > cur_t {
            cur.to_vec()
        } else {
            prev.to_vec()
        };
        let mut next = cur.to_vec();
        let e = self.edges[s % self.m];
        next[e.1] |= prev[e.0];
        next[e.0] |= prev[e.1];
        (t, prev, next)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        next: usize,
        left: usize,
        max_t: Time,
        cur_t: Time,
        prev: &[u64],
        cur: &[u64],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if left == 0 {
            return self.unfinished(cur) == 0;
        }
        if !self.admissible(next, left, cur) {
            return false;
        }
        for s in next..=self.total - left {
            let t = (s / self.m) as Time + 1;
            if t > max_t + 1 {
                break;
            }
            let (t, p, c) = self.step(s, cur_t, prev, cur);
            if self.prune_useless && c == cur {
                continue;
            }
            chosen.push(s);
            if self.dfs(s + 1, left - 1, max_t.max(t), t, &p, &c, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Lexicographically least compressed witness with exactly `k` slots.
    fn run(&self, k: usize, workers: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return (self.unfinished(&self.init) == 0).then(Vec::new);
        }
        if k > self.total {
            return None;
        }
        let branch = |s: usize| -> Option<Vec<usize>> {
            let (t, p, c) = self.step(s, 0, &self.init, &self.init);
            if self.prune_useless && c == self.init {
                return None;
            }
            let mut chosen = vec![s];
            self.dfs(s + 1, k - 1, t, t, &p, &c, &mut chosen)
                .then_some(chosen)
        };
        // compression forces the first slot to time 1
        let first = self.m.min(self.total + 1 - k);
        if workers <= 1 {
            return (0..first).find_map(branch);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| (0..first).into_par_iter().find_map_first(branch))
    }
}

/// Minimum number of labels making `terminals` pairwise temporally connected
/// with every label at most `age`. `age = None` bounds the age by the label
/// count itself, which loses nothing since labels can always be compressed.
pub fn exact_min_labels(
    g: &StaticGraph,
    terminals: &[Vertex],
    age: Option<Time>,
    cfg: &SearchConfig,
) -> Result<ExactResult> {
    let mut ts = terminals.to_vec();
    ts.sort_unstable();
    ts.dedup();
    if let Some(&v) = ts.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if ts.len() > 64 {
        return Err(Error::Unsupported(
            "exact oracle supports at most 64 terminals".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let m = edges.len();
    if let Some(a) = age {
        let slots = m * a as usize;
        if slots > cfg.max_slots {
            return Err(Error::TooLarge {
                slots,
                cap: cfg.max_slots,
            });
        }
        let mut all = Labeling::new();
        for &e in &edges {
            all.add_all(e, 1..=a);
        }
        if !TemporalGraph::new(g.clone(), all)?.is_r_connected(&ts)? {
            return Err(Error::Infeasible(a));
        }
    }

    let mut init = vec![0u64; g.n()];
    for (i, &r) in ts.iter().enumerate() {
        init[r] = 1 << i;
    }
    let full = if ts.is_empty() {
        0
    } else {
        u64::MAX >> (64 - ts.len())
    };
    let ceiling = match age {
        Some(a) => m * a as usize,
        // the attempt itself reports TooLarge once |E| * k passes the cap
        None => usize::MAX - 1,
    };
    let lower = if ts.len() <= 1 {
        0
    } else {
        ts.len().div_ceil(2)
    };

    let attempt = |k: usize, prune_useless: bool| -> Result<Option<Vec<usize>>> {
        let a_eff = match age {
            Some(a) => (a as usize).min(k),
            None => {
                if m * k > cfg.max_slots {
                    return Err(Error::TooLarge {
                        slots: m * k,
                        cap: cfg.max_slots,
                    });
                }
                k
            }
        };
        let total = m * a_eff;
        let mut last_touch = vec![None; g.n()];
        for s in 0..total {
            let e = edges[s % m];
            last_touch[e.0] = Some(s);
            last_touch[e.1] = Some(s);
        }
        let search = Search {
            edges: &edges,
            m,
            terminals: &ts,
            full,
            init: init.clone(),
            total,
            last_touch,
            prune_useless,
        };
        Ok(search.run(k, cfg.workers))
    };

    let to_labeling = |slots: &[usize]| {
        let mut lab = Labeling::new();
        for &s in slots {
            lab.add(edges[s % m], (s / m) as Time + 1);
        }
        lab
    };

    let found = match cfg.budget_hint {
        Some(hint) if hint >= lower && hint <= ceiling => {
            if attempt(hint, false)?.is_some() {
                let mut k = hint;
                while k > lower && attempt(k - 1, false)?.is_some() {
                    k -= 1;
                }
                attempt(k, true)?.map(|w| (k, w))
            } else {
                ascend(hint + 1, ceiling, &attempt)?
            }
        }
        _ => ascend(lower, ceiling, &attempt)?,
    };
    let Some((k_min, slots)) = found else {
        return Err(Error::Infeasible(age.unwrap_or(0)));
    };
    let witness = to_labeling(&slots);
    let tg = TemporalGraph::new(g.clone(), witness)?;
    let report = tg.verify(Some(&ts), age, Some(k_min))?;
    assert!(
        report.passed() && report.label_count == k_min,
        "oracle witness failed to verify"
    );
    Ok(ExactResult {
        k_min,
        witness: tg.into_parts().1,
    })
}

type Attempt<'a> = dyn Fn(usize, bool) -> Result<Option<Vec<usize>>> + 'a;

fn ascend(
    from: usize,
    ceiling: usize,
    attempt: &Attempt<'_>,
) -> Result<Option<(usize, Vec<usize>)>> {
    for k in from..=ceiling {
        if let Some(w) = attempt(k, true)? {
            return Ok(Some((k, w)));
        }
    }
    Ok(None)
}

fn cycle_graph(n: usize) -> StaticGraph {
    StaticGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

fn check_cycle_order(n: usize) -> Result<()> {
    match n {
        0..=2 => Err(Error::InvalidInput(format!(
            "a cycle needs at least 3 vertices, got {n}"
        ))),
        4 => Err(Error::Unsupported(
            "no closed form for n = 4; use the exact oracle or the ML solver".into(),
        )),
        _ => Ok(()),
    }
}

/// Minimum label count for temporal connectivity of `C_n` at age `floor(n/2)`.
pub fn kappa_cycle(n: usize) -> Result<usize> {
    check_cycle_order(n)?;
    let d = n / 2;
    Ok(if n.is_multiple_of(2) {
        d * d
    } else {
        2 * d * d + d
    })
}

/// Optimal labeling of `C_n` at age `d = floor(n/2)`. Odd cycles label every
/// edge with `1..=d`; even cycles alternate even and odd labels up to `d`.
pub fn cycle_labeling(n: usize) -> Result<TemporalGraph> {
    check_cycle_order(n)?;
    let d = (n / 2) as Time;
    let mut lab = Labeling::new();
    for i in 0..n {
        let e = Edge::undirected(i, (i + 1) % n);
        if n % 2 == 1 {
            lab.add_all(e, 1..=d);
        } else {
            let parity = if i % 2 == 0 { 0 } else { 1 };
            lab.add_all(e, (1..=d).filter(|t| t % 2 == parity));
        }
    }
    TemporalGraph::new(cycle_graph(n), lab)
}

/// Union over all roots `v` of the BFS tree of `v`, each tree edge labeled
/// with the distance from `v` to its child endpoint.
pub fn bfs_union_upper_bound(g: &StaticGraph) -> Result<TemporalGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut lab = Labeling::new();
    for v in 0..g.n() {
        let dist = g.bfs_distances(v);
        for (x, p) in g.bfs_parents(v).into_iter().enumerate() {
            if let Some(p) = p {
                lab.add(Edge::undirected(x, p), dist[x].unwrap() as Time);
            }
        }
    }
    TemporalGraph::new(g.clone(), lab)
}
