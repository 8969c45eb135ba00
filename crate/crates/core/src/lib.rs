//! Structured decomposition of the Collatz (3x+1) problem over odd integers.
//!
//! Odd integers are classified as starters (odd multiples of 3) or
//! intermediaries (`6m + 1`, `6m + 5`). Every intermediary's predecessor set
//! is one row of two closed-form tables whose cells are linked by
//! `x -> 4x + 1`, which gives a second, formula-free route to trajectories
//! and a way to grow the Collatz tree layer by layer from its root 1.
//!
//! All arithmetic is arbitrary precision.

pub mod analysis;
pub mod arith;
pub mod cli;
pub mod error;
pub mod scan;
pub mod tables;
pub mod trajectory;
pub mod tree;

pub use arith::{
    alpha_of, classify, is_terminal, pre_terminal, reverse_to_starter, syracuse_step, terminal,
    Classification, Kind, OddInt, SyracuseResult,
};
pub use error::{Error, Result};
pub use tables::{
    locate, predecessor_row, row_iterate, table_entry, PredecessorRow, TableCoordinate, TableId,
};
pub use trajectory::{
    trajectory_direct, trajectory_lookup, trajectory_stats, TrajectoryRecord, TrajectoryStats,
};
pub use tree::{build_layers, export_tree, predecessors_of, ExportFormat, TreeLayer, TreeNode};
