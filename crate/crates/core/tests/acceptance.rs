//! Acceptance criteria 1-10, one test each. Every test prints a single
//! `PASS criterion N` or `FAIL criterion N` line (run with `--nocapture`).

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::*;
use rand::Rng;
use templab::exact::{self, SearchConfig};
use templab::ml::{self, CallSequence};
use templab::reductions::mal::{self, TruthAssignment, Xor3Formula};
use templab::reductions::masl::{self, MASL_AGE};
use templab::reductions::msl;
use templab::{
    dag, steiner, DirectedGraph, Edge, Labeling, StaticGraph, TemporalGraph, Time, Vertex,
};

fn cycle(n: usize) -> StaticGraph {
    StaticGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

#[test]
fn criterion_01_ml_optimum_matches_exact() {
    let start = Instant::now();
    let all: usize = (1..=5).map(|n| graphs_up_to_isomorphism(n).len()).sum();
    let mut checked = 0;
    let mut misses = Vec::new();
    for n in 2..=5 {
        for g in graphs_up_to_isomorphism(n).into_iter().filter(is_connected) {
            let age = (2 * n - 3) as Time;
            let cfg = SearchConfig {
                max_slots: g.m() * age as usize,
                workers: 4,
                ..SearchConfig::default()
            };
            let vs: Vec<Vertex> = (0..n).collect();
            let res = exact::exact_min_labels(&g, &vs, Some(age), &cfg).unwrap();
            let expected = 2 * n - 3 - usize::from(has_c4(&g));
            let formula = ml::optimum_size(&g).unwrap();
            if res.k_min != formula || formula != expected {
                misses.push(format!(
                    "{:?}: exact {} formula {}",
                    g.edge_set(),
                    res.k_min,
                    formula
                ));
            }
            checked += 1;
        }
    }
    let ok = all == 52 && checked == 30 && misses.is_empty();
    report(
        1,
        ok,
        &format!(
            "{checked} connected graphs on 2-5 vertices ({all} graphs on 1-5 vertices), {} mismatches, {:.1?}",
            misses.len(),
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_02_ml_constructions() {
    let start = Instant::now();
    let mut r = rng(2);
    let mut bad = Vec::new();
    let mut with_c4 = 0;
    for i in 0..200 {
        let n = r.gen_range(2..=12);
        let p = r.gen_range(0.0..0.5);
        let g = random_connected(&mut r, n, p);
        let lab = ml::label(&g).unwrap();
        let c4 = has_c4(&g);
        with_c4 += usize::from(c4);
        let want = 2 * n - 3 - usize::from(c4);
        let tg = TemporalGraph::new(g, lab).unwrap();
        if tg.labeling().len() != want || !connects_all(&tg) {
            bad.push(i);
        }
    }
    report(
        2,
        bad.is_empty(),
        &format!(
            "200 random graphs ({with_c4} with a C4), failures {bad:?}, {:.1?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_03_cycle_formula() {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, age, want) in [(5usize, 2, 10usize), (6, 3, 9)] {
        let vs: Vec<Vertex> = (0..n).collect();
        let cfg = SearchConfig {
            workers: 4,
            ..SearchConfig::default()
        };
        let res = exact::exact_min_labels(&cycle(n), &vs, Some(age), &cfg).unwrap();
        let formula = exact::kappa_cycle(n).unwrap();
        ok &= res.k_min == want && formula == want;
        notes.push(format!("C{n}: exact {} formula {formula}", res.k_min));
    }
    for n in [3usize, 5, 6, 7, 8] {
        let tg = exact::cycle_labeling(n).unwrap();
        let d = (n / 2) as Time;
        let good = connects_all(&tg)
            && tg.labeling().len() == exact::kappa_cycle(n).unwrap()
            && age(tg.labeling()) == d;
        ok &= good;
        if !good {
            notes.push(format!("cycle_labeling({n}) wrong"));
        }
    }
    report(
        3,
        ok,
        &format!(
            "{}; constructions n in {{3,5,6,7,8}}, {:.1?}",
            notes.join(", "),
            start.elapsed()
        ),
    );
}

fn check_dag(d: &DirectedGraph) -> Result<(), String> {
    let tg = dag::min_labeling(d).map_err(|e| e.to_string())?;
    let closure = closure(d);
    if temporal_reach(&tg) != closure {
        return Err("reachability differs from closure".into());
    }
    if tg.labeling().len() != transitive_reduction_size(d) {
        return Err(format!(
            "{} labels, reduction has {}",
            tg.labeling().len(),
            transitive_reduction_size(d)
        ));
    }
    for (e, t) in tg.labeling().time_edges() {
        let mut lab = tg.labeling().clone();
        lab.remove(e, t);
        let smaller = TemporalGraph::directed(d.clone(), lab).unwrap();
        if temporal_reach(&smaller) == closure {
            return Err(format!("label {t} on {e} is redundant"));
        }
    }
    let layers = dag::canonical_layering(d).unwrap().layers.len();
    if age(tg.labeling()) as usize != layers.saturating_sub(1)
        || layers.saturating_sub(1) != longest_path(d)
    {
        return Err("age is not the layer count minus one".into());
    }
    Ok(())
}

#[test]
fn criterion_04_dag_labeling() {
    let start = Instant::now();
    let mut exhaustive = 0;
    let mut failures = Vec::new();
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let arcs = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a);
            let d = DirectedGraph::new(n, arcs).unwrap();
            let cl = closure(&d);
            if (0..n).any(|u| (0..n).any(|v| u != v && cl[u][v] && cl[v][u])) {
                assert!(dag::canonical_layering(&d).is_err());
                continue;
            }
            exhaustive += 1;
            if let Err(e) = check_dag(&d) {
                failures.push(format!("{:?}: {e}", d.arc_set()));
            }
        }
    }
    let mut r = rng(4);
    for _ in 0..200 {
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.1..0.7);
        let d = random_dag(&mut r, n, p);
        if let Err(e) = check_dag(&d) {
            failures.push(format!("{:?}: {e}", d.arc_set()));
        }
    }
    report(
        4,
        failures.is_empty(),
        &format!(
            "{exhaustive} labeled DAGs with n <= 4 and 200 random DAGs, {} failures {:?}, {:.1?}",
            failures.len(),
            failures.first(),
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_05_msl_fpt() {
    const CAP: usize = 48;
    let start = Instant::now();
    let mut r = rng(5);
    let mut failures = Vec::new();
    let mut done = 0;
    let mut skipped = 0;
    while done < 100 {
        let n = r.gen_range(2..=6);
        let p = r.gen_range(0.0..0.6);
        let g = random_connected(&mut r, n, p);
        let size = r.gen_range(1..=n.min(4));
        let mut ts: Vec<Vertex> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(ts.as_mut_slice(), &mut r);
        ts.truncate(size);
        ts.sort_unstable();
        let cfg = SearchConfig {
            max_slots: CAP,
            workers: 4,
            ..SearchConfig::default()
        };
        let res = match exact::exact_min_labels(&g, &ts, None, &cfg) {
            Ok(res) => res,
            Err(templab::Error::TooLarge { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        done += 1;
        let opt = steiner::msl_optimum_size(&g, &ts).unwrap();
        let lab = steiner::msl_label(&g, &ts).unwrap();
        let tg = TemporalGraph::new(g.clone(), lab.clone()).unwrap();
        let witness_ok = connects(
            &TemporalGraph::new(g.clone(), res.witness.clone()).unwrap(),
            &ts,
        );
        let structure = steiner::check_structure_lemma(&g, &ts, &res.witness)
            || steiner::check_structure_lemma(&g, &ts, &lab);
        if opt != res.k_min || lab.len() != opt || !connects(&tg, &ts) || !witness_ok || !structure
        {
            failures.push(format!(
                "{:?} R={ts:?}: exact {} fpt {opt} emitted {} structure {structure}",
                g.edge_set(),
                res.k_min,
                lab.len()
            ));
        }
    }
    report(
        5,
        failures.is_empty(),
        &format!(
            "100 instances within {CAP} slots ({skipped} oversized draws resampled), failures {failures:?}, {:.1?}",
            start.elapsed()
        ),
    );
}

/// Knowledge sets merged call by call, written independently of the crate.
fn gossip_completes(n: usize, calls: &CallSequence) -> bool {
    let mut know: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for e in &calls.calls {
        let merged = know[e.0] | know[e.1];
        know[e.0] = merged;
        know[e.1] = merged;
    }
    know.iter().all(|&k| k == (1u64 << n) - 1)
}

#[test]
fn criterion_06_gossip_roundtrip() {
    let start = Instant::now();
    let mut r = rng(6);
    let mut failures = Vec::new();
    for i in 0..200 {
        let n = r.gen_range(2..=10);
        let p = r.gen_range(0.0..0.5);
        let g = random_connected(&mut r, n, p);
        let mut lab: Labeling = if r.gen_bool(0.5) {
            ml::label(&g).unwrap()
        } else {
            exact::bfs_union_upper_bound(&g).unwrap().into_parts().1
        };
        let edges: Vec<Edge> = g.edges().collect();
        for _ in 0..r.gen_range(0..5) {
            let e = edges[r.gen_range(0..edges.len())];
            lab.add(e, r.gen_range(1..=2 * n as Time));
        }
        let tg = TemporalGraph::new(g.clone(), lab).unwrap();
        assert!(connects_all(&tg));
        let calls = ml::labeling_to_calls(&tg).unwrap();
        let back = ml::calls_to_labeling(&g, &calls).unwrap();
        let ok = calls.len() == tg.labeling().len()
            && back.labeling().len() == tg.labeling().len()
            && connects_all(&back)
            && gossip_completes(n, &calls)
            && calls.completes_gossip(n);
        if !ok {
            failures.push(i);
        }
    }
    report(
        6,
        failures.is_empty(),
        &format!(
            "200 labeled graphs, failures {failures:?}, {:.1?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_07_mal_reduction() {
    let start = Instant::now();
    let mut r = rng(7);
    let mut diameter_ok = 0;
    let mut connected = 0;
    let mut age_ok = 0;
    let mut count_ok = 0;
    let mut misses: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..20 {
        let n = [2, 4, 6][i % 3];
        let phi = Xor3Formula::random(n, &mut r).unwrap();
        let inst = mal::build_mal_instance(&phi).unwrap();
        let tau = TruthAssignment((0..n).map(|_| r.gen_bool(0.5)).collect());
        let k_sat = phi.satisfied(&tau);
        let lab = mal::certificate_mal_labeling(&inst, &tau).unwrap();
        let want = mal::mal_budget(n, k_sat);
        let tg = TemporalGraph::new(inst.graph.clone(), lab).unwrap();
        let diam = diameter(&inst.graph);
        let conn = connects_all(&tg);
        let count = tg.labeling().len() as i64;
        diameter_ok += usize::from(diam == 10);
        connected += usize::from(conn);
        age_ok += usize::from(age(tg.labeling()) <= mal::MAL_AGE);
        count_ok += usize::from(count == want);
        if diam != 10 || !conn || count != want {
            misses.entry(n).or_default().push(format!(
                "diam {diam} connected {conn} labels {count} vs {want} (k_sat {k_sat})"
            ));
        }
    }
    let ok = misses.is_empty();
    report(
        7,
        ok,
        &format!(
            "20 formulas: diameter 10 in {diameter_ok}, connected in {connected}, age <= 10 in {age_ok}, \
             exact count in {count_ok}; misses by n {misses:?}; {:.1?}",
            start.elapsed()
        ),
    );
}

/// All vertex covers of `g` with exactly `k` vertices.
fn covers(g: &StaticGraph, k: usize) -> Vec<Vec<Vertex>> {
    (0u32..1 << g.n())
        .filter(|m| m.count_ones() as usize == k)
        .filter(|m| g.edges().all(|e| m >> e.0 & 1 == 1 || m >> e.1 & 1 == 1))
        .map(|m| (0..g.n()).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

#[test]
fn criterion_08_msl_reduction() {
    let start = Instant::now();
    let graphs = [
        ("K3", StaticGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()),
        ("P4", StaticGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()),
        ("C5", cycle(5)),
    ];
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let tau = (0..=g.n()).find(|&k| !covers(g, k).is_empty()).unwrap();
        for k in [tau, tau + 1] {
            let inst = msl::build_msl_instance(g, k).unwrap();
            let want = 6 * k + 2 * g.m() * (6 * k + 1) + 1;
            for s in covers(g, k) {
                let lab = msl::certificate_msl_labeling(&inst, &s).unwrap();
                let tg = TemporalGraph::new(inst.graph.clone(), lab).unwrap();
                checked += 1;
                if !connects(&tg, &inst.terminals)
                    || tg.labeling().len() != want
                    || inst.budget != want
                {
                    failures.push(format!("{name} S={s:?}"));
                }
            }
        }
    }
    report(
        8,
        failures.is_empty(),
        &format!(
            "{checked} covers of K3, P4, C5, failures {failures:?}, {:.1?}",
            start.elapsed()
        ),
    );
}

/// Name, source graph, color count, coloring and a multicolored clique.
type MaslCase = (&'static str, StaticGraph, usize, Vec<usize>, Vec<Vertex>);

fn masl_cases() -> Vec<MaslCase> {
    vec![
        (
            "K2",
            StaticGraph::new(2, [(0, 1)]).unwrap(),
            2,
            vec![0, 1],
            vec![0, 1],
        ),
        (
            "P4",
            StaticGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
            2,
            vec![0, 1, 0, 1],
            vec![1, 2],
        ),
        (
            "K3",
            StaticGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
            3,
            vec![0, 1, 2],
            vec![0, 1, 2],
        ),
        (
            "K3+pendants",
            StaticGraph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (1, 5)]).unwrap(),
            3,
            vec![0, 1, 2, 1, 2, 0],
            vec![0, 1, 2],
        ),
    ]
}

#[test]
fn criterion_09_masl_reduction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, g, k, coloring, clique) in masl_cases() {
        let inst = masl::build_masl_instance(&g, k, &coloring).unwrap();
        let ts = &inst.terminals;
        let all_12 = ts.iter().enumerate().all(|(i, &x)| {
            ts[i + 1..]
                .iter()
                .all(|&y| distance(&inst.graph, x, y) == Some(12))
        });
        let lab = masl::certificate_masl_labeling(&inst, &clique).unwrap();
        let tg = TemporalGraph::new(inst.graph.clone(), lab).unwrap();
        let want = masl::masl_budget(k);
        let ok = all_12
            && connects(&tg, ts)
            && age(tg.labeling()) <= MASL_AGE
            && tg.labeling().len() == want;
        if !ok {
            failures.push(format!(
                "{name}: distances {all_12}, labels {} vs {want}",
                tg.labeling().len()
            ));
        }
    }
    report(
        9,
        failures.is_empty(),
        &format!(
            "k in {{2,3}} on 4 colored graphs, failures {failures:?}, {:.1?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_10_bfs_union_bound() {
    let start = Instant::now();
    let mut r = rng(10);
    let mut failures = Vec::new();
    for i in 0..200 {
        let n = r.gen_range(1..=15);
        let p = r.gen_range(0.0..0.6);
        let g = random_connected(&mut r, n, p);
        let tg = exact::bfs_union_upper_bound(&g).unwrap();
        let ok = connects_all(&tg)
            && tg.labeling().len() <= n * (n - 1)
            && age(tg.labeling()) as usize <= diameter(&g);
        if !ok {
            failures.push(i);
        }
    }
    report(
        10,
        failures.is_empty(),
        &format!(
            "200 random graphs, failures {failures:?}, {:.1?}",
            start.elapsed()
        ),
    );
}
