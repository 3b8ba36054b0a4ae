//! Desk-scale laboratory for the chromatic number of binomial random graphs.
//!
//! The crate is organized around four layers:
//!
//! * graph core — bitset-backed simple graphs, seeded `G(n,p)` sampling and
//!   elementary queries ([`graph`], [`sample`]);
//! * coloring engine — greedy independent sets, degeneracy peeling and the
//!   two-phase regime procedures, all registered behind the
//!   [`registry::ColoringStrategy`] trait ([`greedy`], [`degeneracy`],
//!   [`procedures`], [`events`], [`regime`]);
//! * dense-regime analysis — maximum matching in the complement, independent
//!   set counts, the chromatic sandwich and the isolated-edge closed forms
//!   ([`matching`], [`dense`], [`forms`]), with brute-force ground truth in
//!   [`oracle`];
//! * experiment harness — reproducible parallel Monte Carlo sweeps with
//!   named statistics, concentration summaries and CSV output ([`harness`],
//!   [`statistic`], [`profiles`], [`config`]).
//!
//! Every algorithm is a deterministic function of its inputs: randomness is
//! driven by counter-based streams keyed on explicit seeds, and all ties are
//! broken by smallest vertex index.

pub mod bits;
pub mod coloring;
pub mod config;
pub mod degeneracy;
pub mod dense;
pub mod events;
pub mod forms;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod matching;
pub mod oracle;
pub mod procedures;
pub mod profiles;
pub mod regime;
pub mod registry;
pub mod sample;
pub mod statistic;

pub use coloring::Coloring;
pub use graph::{Graph, GraphError, VertexSet};
pub use regime::{RegimeParams, RegimeTag};
pub use sample::SampleSpec;
