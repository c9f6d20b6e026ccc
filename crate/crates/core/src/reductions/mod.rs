//! Gadget instance generators for the three hardness reductions, each with
//! the certificate labeling built from a YES-witness of the source problem.

pub mod mal;
pub mod masl;
pub mod msl;

use crate::graph::{Edge, StaticGraph, Vertex};
use crate::temporal::{Labeling, Time};

pub use mal::{
    build_mal_instance, certificate_mal_labeling, MalInstance, TruthAssignment, Xor3Formula,
};
pub use masl::{build_masl_instance, certificate_masl_labeling, MaslInstance};
pub use msl::{build_msl_instance, certificate_msl_labeling, MslInstance};

/// Connects `from` and `to` by a path through `inner` fresh vertices and
/// returns the whole vertex sequence.
pub(crate) fn add_path(g: &mut StaticGraph, from: Vertex, to: Vertex, inner: usize) -> Vec<Vertex> {
    let mut path = vec![from];
    for _ in 0..inner {
        path.push(g.add_vertex());
    }
    path.push(to);
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]).expect("fresh path edge");
    }
    path
}

/// Gives the `j`-th edge of `path` (1-based, from the front) the labels
/// `times(j)`.
pub(crate) fn label_path<F, I>(lab: &mut Labeling, path: &[Vertex], times: F)
where
    F: Fn(Time) -> I,
    I: IntoIterator<Item = Time>,
{
    for (j, w) in path.windows(2).enumerate() {
        lab.add_all(Edge::undirected(w[0], w[1]), times(j as Time + 1));
    }
}
