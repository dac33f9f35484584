//! Random instances, connected orders and seeded sweeps.

pub mod generate;
pub mod order;
pub mod sweep;

pub use generate::{random_bounded, random_cactus, random_k1t_free, random_tree, GenerateError};
pub use order::{connected_order_with, random_connected_order, OrderPolicy};
pub use sweep::{
    exact_opt, generate_member, run_one, sweep, sweep_runs, Aggregate, CsvRow, ExperimentConfig, RatioReport,
    RunOutcome, RunRecord, SweepError, CSV_COLUMNS,
};
