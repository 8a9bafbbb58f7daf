//! Short closed geodesics on random surfaces glued from `2N` ideal triangles.
//!
//! A random surface is a uniformly random perfect matching of the `6N`
//! triangle sides ([`gluing`]). Closed geodesics correspond to closed
//! left/right traversals of the triangulation; their turn sequences are words
//! in the matrices `L` and `R` ([`words`]), and the trace of the word matrix
//! gives the hyperbolic length. [`spectrum`] counts those traversals per word
//! class, [`poisson`] compares the resulting count vectors to independent
//! Poisson laws, [`bounds`] evaluates the explicit Chen-Stein error bounds and
//! [`oracle`] computes everything exactly for the smallest `N` by exhausting
//! all gluings. [`harness`] runs seeded, parallel Monte Carlo experiments and
//! serializes reports; the `randsurf` binary is a thin front end over it.
//!
//! Runnable walkthroughs of every capability live in `examples/`:
//!
//! ```bash
//! cargo run --release -p randsurf --example word_census
//! cargo run --release -p randsurf --example surface_topology
//! cargo run --release -p randsurf --example count_geodesics
//! cargo run --release -p randsurf --example poisson_fit
//! cargo run --release -p randsurf --example bound_report
//! cargo run --release -p randsurf --example exact_small_surfaces
//! cargo run --release -p randsurf --example admissible_traces
//! cargo run --release -p randsurf --example monte_carlo_stats
//! ```

pub mod bounds;
pub mod error;
pub mod gluing;
pub mod harness;
pub mod oracle;
pub mod poisson;
pub mod spectrum;
pub mod words;

pub use error::{Error, Result};
pub use gluing::{Gluing, SideLabel, TopologyReport, Turn};
pub use spectrum::{SpectrumReport, TraversalCycle};
pub use words::{Letter, Word, WordClass, WordMatrix};
