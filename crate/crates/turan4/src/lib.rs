//! A construction laboratory and verification engine for Turán-type
//! problems on 4-uniform hypergraphs.
//!
//! The crate builds a family of extremal 4-graph constructions (parity
//! two-part graphs, blow-up expansions, circular products, a rainbow
//! coloring construction, and a cyclic construction over `Z_m ⊕ Z_2^6`),
//! certifies their independence numbers exactly with a bitset
//! branch-and-bound solver, and derives upper and lower bounds on Turán
//! densities `t(k,4)` and their rescaled form `t_*(k,4)` in exact
//! rational arithmetic.
//!
//! Entry points:
//! - [`hypergraph::FourGraph`] - canonical 4-uniform hypergraph value.
//! - [`solver::alpha_exact`] - certified independence number.
//! - [`constructions`] - deterministic generators, one per construction.
//! - [`bounds`] - exact-rational density bounds and the summary report.
//! - [`optimize`] - part-size optimization over the probability simplex.
//!
//! Every runnable capability also has an example under `examples/`, and
//! the `t4` binary exposes the same operations as subcommands.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod hypergraph;
pub mod optimize;
pub mod rational;
pub mod solver;
pub mod verify;

pub use hypergraph::{FourGraph, Label, LabeledFourGraph};
pub use rational::Rat;
pub use solver::{AlphaResult, SolveBudget, SolveStatus};
