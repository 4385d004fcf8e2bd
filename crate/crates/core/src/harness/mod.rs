//! Seeded campaigns, statistics, CSV/JSON output and fold drawings.

mod campaign;
mod render;
mod stats;

pub use campaign::{
    read_csv, run_experiment, run_shard, write_csv, write_json, Experiment, ExperimentConfig, ExperimentStats,
    RunRow, Shard, DEFAULT_SAMPLE_SIZE,
};
pub use render::{render_ascii, render_conformation, render_svg, Conformation};
pub use stats::{median, summarize, Summary};
