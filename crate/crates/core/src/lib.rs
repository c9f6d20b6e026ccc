//! Minimum time-labelings of temporal graphs.
//!
//! The [`temporal`] engine computes foremost arrivals under strictly
//! increasing labels and backs every verifier in the crate. Solvers:
//! [`ml`] (unrestricted minimum labeling and gossip), [`dag`] (reachability
//! preserving labelings), [`steiner`] (Steiner variant), [`exact`]
//! (exhaustive oracles for tiny instances) and [`reductions`] (gadget
//! instance generators with certificate labelings). [`cli`] holds the text
//! format and the command-line front end.

pub mod cli;
pub mod dag;
pub mod error;
pub mod exact;
pub mod graph;
pub mod ml;
pub mod reductions;
pub mod steiner;
pub mod temporal;

pub use error::{Error, Result};
pub use graph::{DirectedGraph, Edge, StaticGraph, Vertex};
pub use temporal::{Labeling, TemporalGraph, Time};
