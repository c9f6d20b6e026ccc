//! Monotone Max XOR(3) to MAL.
//!
//! Every variable owns an 11-vertex base and has three forks, one per clause
//! it occurs in. Each clause contributes one 9-vertex fork, shared by its two
//! variables with sides swapped: the first variable's unbarred side is the
//! second variable's barred side.
//!
//! Layout: the base of variable `i` occupies `11i .. 11i + 11` as
//! `s, a..e, a'..e'`. The fork of clause `c` follows at `11n + 9c` as
//! `t, f_A, g_A, h_A, m_A, f_B, g_B, h_B, m_B`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, StaticGraph, Vertex};
use crate::temporal::{Labeling, Time};

pub const MAL_AGE: Time = 10;

/// Clauses are unordered pairs of distinct variables in `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xor3Formula {
    n: usize,
    clauses: Vec<(usize, usize)>,
}

impl Xor3Formula {
    pub fn new(n: usize, clauses: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "variable count must be even and positive, got {n}"
            )));
        }
        if clauses.len() != 3 * n / 2 {
            return Err(Error::InvalidInput(format!(
                "{} clauses, expected {}",
                clauses.len(),
                3 * n / 2
            )));
        }
        let mut count = vec![0; n];
        for &(x, y) in &clauses {
            if x >= n || y >= n {
                return Err(Error::InvalidInput(format!(
                    "clause ({x}, {y}) names an unknown variable"
                )));
            }
            if x == y {
                return Err(Error::InvalidInput(format!(
                    "clause ({x}, {x}) repeats a variable"
                )));
            }
            count[x] += 1;
            count[y] += 1;
        }
        if let Some(v) = count.iter().position(|&c| c != 3) {
            return Err(Error::InvalidInput(format!(
                "variable {v} occurs {} times, expected 3",
                count[v]
            )));
        }
        Ok(Xor3Formula { n, clauses })
    }

    /// Uniform pairing of three copies of each variable, resampled until no
    /// clause repeats a variable.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "variable count must be even and positive, got {n}"
            )));
        }
        let mut slots: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        loop {
            slots.shuffle(rng);
            if slots.chunks(2).all(|c| c[0] != c[1]) {
                let clauses = slots.chunks(2).map(|c| (c[0], c[1])).collect();
                return Xor3Formula::new(n, clauses);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[(usize, usize)] {
        &self.clauses
    }

    /// Number of clauses whose two variables differ under `tau`.
    pub fn satisfied(&self, tau: &TruthAssignment) -> usize {
        self.clauses
            .iter()
            .filter(|&&(x, y)| tau.0[x] != tau.0[y])
            .count()
    }

    /// Clause indices of each variable, in order of appearance.
    fn occurrences(&self) -> Vec<[usize; 3]> {
        let mut occ = vec![Vec::with_capacity(3); self.n];
        for (c, &(x, y)) in self.clauses.iter().enumerate() {
            occ[x].push(c);
            occ[y].push(c);
        }
        occ.into_iter().map(|o| [o[0], o[1], o[2]]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthAssignment(pub Vec<bool>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Unbarred,
    Barred,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Unbarred => Side::Barred,
            Side::Barred => Side::Unbarred,
        }
    }

    fn of(value: bool) -> Side {
        if value {
            Side::Unbarred
        } else {
            Side::Barred
        }
    }
}

#[derive(Clone, Debug)]
pub struct MalInstance {
    pub graph: StaticGraph,
    pub formula: Xor3Formula,
    pub age: Time,
    occurrences: Vec<[usize; 3]>,
}

/// `13n²/2 + 99n/2 - 8 k_sat`.
pub fn mal_budget(n: usize, k_sat: usize) -> i64 {
    let n = n as i64;
    (13 * n * n + 99 * n) / 2 - 8 * k_sat as i64
}

impl MalInstance {
    pub fn n_vars(&self) -> usize {
        self.formula.n
    }

    pub fn budget(&self, k_sat: usize) -> i64 {
        mal_budget(self.formula.n, k_sat)
    }

    pub fn start(&self, i: usize) -> Vertex {
        11 * i
    }

    /// Base path of variable `i` on one side: `s, a, b, c, d, e`.
    pub fn base_path(&self, i: usize, side: Side) -> [Vertex; 6] {
        let off = match side {
            Side::Unbarred => 0,
            Side::Barred => 5,
        };
        let b = 11 * i;
        [
            b,
            b + off + 1,
            b + off + 2,
            b + off + 3,
            b + off + 4,
            b + off + 5,
        ]
    }

    fn fork_base(&self, clause: usize) -> Vertex {
        11 * self.formula.n + 9 * clause
    }

    /// Side of clause `clause`'s fork that variable `i` sees as `side`.
    fn fork_half(&self, i: usize, clause: usize, side: Side) -> usize {
        let (x, _) = self.formula.clauses[clause];
        // A is the first variable's unbarred half
        let first = if i == x { side } else { side.flip() };
        match first {
            Side::Unbarred => 1,
            Side::Barred => 5,
        }
    }

    /// Fork path of variable `i` for its `l`-th occurrence: `f, g, h, m, t`.
    pub fn fork_path(&self, i: usize, l: usize, side: Side) -> [Vertex; 5] {
        let c = self.occurrences[i][l];
        let b = self.fork_base(c);
        let h = b + self.fork_half(i, c, side);
        [h, h + 1, h + 2, h + 3, b]
    }

    pub fn ending(&self, i: usize, l: usize) -> Vertex {
        self.fork_base(self.occurrences[i][l])
    }

    /// Forks (by clause index) of `i` that are not shared with `j`.
    fn private_forks(&self, i: usize, j: usize) -> Vec<usize> {
        let shared = &self.occurrences[j];
        self.occurrences[i]
            .iter()
            .copied()
            .filter(|c| !shared.contains(c))
            .collect()
    }

    fn fork_f(&self, i: usize, clause: usize, side: Side) -> Vertex {
        self.fork_base(clause) + self.fork_half(i, clause, side)
    }

    /// Human-readable role of a vertex.
    pub fn role(&self, v: Vertex) -> String {
        let n = self.formula.n;
        if v < 11 * n {
            let (i, r) = (v / 11, v % 11);
            return match r {
                0 => format!("s{i}"),
                1..=5 => format!("{}{i}", (b'a' + r as u8 - 1) as char),
                _ => format!("{}'{i}", (b'a' + r as u8 - 6) as char),
            };
        }
        let (c, r) = ((v - 11 * n) / 9, (v - 11 * n) % 9);
        const NAMES: [&str; 9] = ["t", "fA", "gA", "hA", "mA", "fB", "gB", "hB", "mB"];
        format!("{}C{c}", NAMES[r])
    }
}

pub fn build_mal_instance(phi: &Xor3Formula) -> Result<MalInstance> {
    let n = phi.n;
    let m = phi.clauses.len();
    let mut inst = MalInstance {
        graph: StaticGraph::empty(11 * n + 9 * m),
        formula: phi.clone(),
        age: MAL_AGE,
        occurrences: phi.occurrences(),
    };
    let mut g = StaticGraph::empty(11 * n + 9 * m);
    for i in 0..n {
        let (l, r) = (
            inst.base_path(i, Side::Unbarred),
            inst.base_path(i, Side::Barred),
        );
        for w in 0..5 {
            g.add_edge(l[w], l[w + 1])?;
            g.add_edge(r[w], r[w + 1])?;
            g.add_edge(l[w + 1], r[w + 1])?;
        }
    }
    for c in 0..m {
        let b = inst.fork_base(c);
        for half in [1, 5] {
            // t - m - h - g - f
            g.add_edge(b, b + half + 3)?;
            for w in 0..3 {
                g.add_edge(b + half + w, b + half + w + 1)?;
            }
        }
        for w in 0..4 {
            g.add_edge(b + 1 + w, b + 5 + w)?;
        }
    }
    for i in 0..n {
        for side in [Side::Unbarred, Side::Barred] {
            let e = inst.base_path(i, side)[5];
            for &c in &inst.occurrences[i] {
                g.ensure_edge(e, inst.fork_f(i, c, side))?;
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for si in [Side::Unbarred, Side::Barred] {
                let (di, ei) = (inst.base_path(i, si)[4], inst.base_path(i, si)[5]);
                for sj in [Side::Unbarred, Side::Barred] {
                    let (dj, ej) = (inst.base_path(j, sj)[4], inst.base_path(j, sj)[5]);
                    g.ensure_edge(di, dj)?;
                    for c in inst.private_forks(j, i) {
                        g.ensure_edge(ei, inst.fork_f(j, c, sj))?;
                    }
                    for c in inst.private_forks(i, j) {
                        g.ensure_edge(ej, inst.fork_f(i, c, si))?;
                    }
                }
            }
        }
    }
    inst.graph = g;
    Ok(inst)
}

/// Aligns every variable to the side of its truth value (unbarred for
/// true). Each `s`-to-`t` path on the aligned side carries `1..=10` in both
/// directions, connecting edges carry `{1, 10}`, and every variable pair gets
/// label 5 on its aligned `d`-`d` edge and `{4, 5, 6}` on the aligned
/// `e`-to-`f` edges into private forks. Label 4 carries `e` into the other
/// base, 5 carries fork vertices out through `f`, and 6 carries the base into
/// the other forks.
pub fn certificate_mal_labeling(inst: &MalInstance, tau: &TruthAssignment) -> Result<Labeling> {
    let n = inst.formula.n;
    if tau.0.len() != n {
        return Err(Error::InvalidInput(format!(
            "assignment has {} values for {n} variables",
            tau.0.len()
        )));
    }
    let mut lab = Labeling::new();
    let pair = |t: Time| [t, 11 - t];
    for i in 0..n {
        let side = Side::of(tau.0[i]);
        let base = inst.base_path(i, side);
        for w in 0..5 {
            lab.add_all(Edge::undirected(base[w], base[w + 1]), pair(w as Time + 1));
        }
        let (l, r) = (
            inst.base_path(i, Side::Unbarred),
            inst.base_path(i, Side::Barred),
        );
        for w in 1..6 {
            lab.add_all(Edge::undirected(l[w], r[w]), [1, 10]);
        }
        for fork in 0..3 {
            let path = inst.fork_path(i, fork, side);
            lab.add_all(Edge::undirected(base[5], path[0]), pair(6));
            for w in 0..4 {
                lab.add_all(Edge::undirected(path[w], path[w + 1]), pair(w as Time + 7));
            }
            let (fl, fr) = (
                inst.fork_path(i, fork, Side::Unbarred),
                inst.fork_path(i, fork, Side::Barred),
            );
            for w in 0..4 {
                lab.add_all(Edge::undirected(fl[w], fr[w]), [1, 10]);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let (si, sj) = (Side::of(tau.0[i]), Side::of(tau.0[j]));
            let (bi, bj) = (inst.base_path(i, si), inst.base_path(j, sj));
            lab.add(Edge::undirected(bi[4], bj[4]), 5);
            for c in inst.private_forks(j, i) {
                lab.add_all(Edge::undirected(bi[5], inst.fork_f(j, c, sj)), [4, 5, 6]);
            }
            for c in inst.private_forks(i, j) {
                lab.add_all(Edge::undirected(bj[5], inst.fork_f(i, c, si)), [4, 5, 6]);
            }
        }
    }
    Ok(lab)
}
