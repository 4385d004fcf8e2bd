//! Multi-seed campaigns over one HP instance.

use std::collections::BTreeSet;
use std::io::{Read, Write};
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{self, SearchConfig, SearchMode, SearchResult};
use crate::error::{Error, Result};
use crate::harness::stats::{summarize, Summary};
use crate::hpfold::{HpProblem, InstanceSpec};
use crate::rng;

pub const DEFAULT_SAMPLE_SIZE: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub instance: InstanceSpec,
    pub sample_size: usize,
    pub base_seed: u64,
    pub probe_limit: u64,
    pub buffer_capacity: usize,
    /// Worker threads; 0 uses the global rayon pool.
    pub parallelism: usize,
    pub mode: SearchMode,
}

impl ExperimentConfig {
    pub fn new(instance: InstanceSpec) -> Self {
        let search = SearchConfig::default();
        ExperimentConfig {
            instance,
            sample_size: DEFAULT_SAMPLE_SIZE,
            base_seed: rng::DEFAULT_BASE_SEED,
            probe_limit: search.probe_limit,
            buffer_capacity: search.buffer_capacity,
            parallelism: 0,
            mode: SearchMode::FixedTarget,
        }
    }

    pub fn with_sample_size(mut self, n: usize) -> Self {
        self.sample_size = n;
        self
    }

    pub fn with_base_seed(mut self, seed: u64) -> Self {
        self.base_seed = seed;
        self
    }

    pub fn with_probe_limit(mut self, limit: u64) -> Self {
        self.probe_limit = limit;
        self
    }

    pub fn with_buffer_capacity(mut self, capacity: usize) -> Self {
        self.buffer_capacity = capacity;
        self
    }

    pub fn with_parallelism(mut self, threads: usize) -> Self {
        self.parallelism = threads;
        self
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn search_config(&self, index: u64) -> SearchConfig {
        SearchConfig {
            seed: rng::run_seed(self.base_seed, index),
            probe_limit: self.probe_limit,
            buffer_capacity: self.buffer_capacity,
            mode: self.mode,
        }
    }

    fn validate(&self) -> Result<HpProblem> {
        if self.sample_size == 0 {
            return Err(Error::Config("sample size must be at least 1".into()));
        }
        if self.buffer_capacity == 0 {
            return Err(Error::Config("buffer capacity must be at least 1".into()));
        }
        if self.probe_limit == 0 {
            return Err(Error::Config("probe limit must be at least 1".into()));
        }
        self.instance.build()
    }
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRow {
    pub seed: u64,
    #[serde(rename = "coordB")]
    pub coord_b: String,
    #[serde(rename = "coordT")]
    pub coord_t: String,
    pub value: i64,
    #[serde(rename = "cntProbe")]
    pub cnt_probe: u64,
    #[serde(rename = "walkLength")]
    pub walk_length: u64,
    /// `cntProbe / walkLength`, or `cntProbe` when the walk is empty.
    #[serde(rename = "probesPerStep")]
    pub probes_per_step: f64,
    #[serde(rename = "isCensored", with = "bool_as_int")]
    pub is_censored: bool,
}

mod bool_as_int {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &bool, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(u8::from(*v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(serde::de::Error::custom(format!("isCensored must be 0 or 1, got {other}"))),
        }
    }
}

impl RunRow {
    pub fn from_result(problem: &HpProblem, r: &SearchResult) -> RunRow {
        let (coord_b, coord_t) = problem.split(&r.best);
        RunRow {
            seed: r.seed,
            coord_b,
            coord_t,
            value: r.best_value,
            cnt_probe: r.probes,
            walk_length: r.walk_length,
            probes_per_step: r.probes_per_step(),
            is_censored: r.censored,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub sample_size: usize,
    pub completed: usize,
    pub walk_length: Summary,
    pub cnt_probe: Summary,
    /// Over runs with a non-empty walk; `None` if there are none.
    pub probes_per_step: Option<Summary>,
    pub unique_solutions: usize,
    pub beyond_target: usize,
    pub censored_count: usize,
}

impl ExperimentStats {
    /// Aggregates rows; censored rows count toward the metric summaries
    /// but not toward solution accounting.
    pub fn from_rows(rows: &[RunRow], energy_target: i64) -> Result<ExperimentStats> {
        let walk: Vec<f64> = rows.iter().map(|r| r.walk_length as f64).collect();
        let probes: Vec<f64> = rows.iter().map(|r| r.cnt_probe as f64).collect();
        let per_step: Vec<f64> = rows
            .iter()
            .filter(|r| r.walk_length > 0)
            .map(|r| r.probes_per_step)
            .collect();
        let solved = || rows.iter().filter(|r| !r.is_censored);
        let unique: BTreeSet<(&str, &str)> = solved().map(|r| (r.coord_b.as_str(), r.coord_t.as_str())).collect();
        Ok(ExperimentStats {
            sample_size: rows.len(),
            completed: solved().count(),
            walk_length: summarize(&walk)?,
            cnt_probe: summarize(&probes)?,
            probes_per_step: if per_step.is_empty() { None } else { Some(summarize(&per_step)?) },
            unique_solutions: unique.len(),
            beyond_target: solved().filter(|r| r.value < energy_target).count(),
            censored_count: rows.len() - solved().count(),
        })
    }
}

/// Rows of a contiguous run-index range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Shard {
    pub start: u64,
    pub rows: Vec<RunRow>,
}

impl Shard {
    /// Concatenates shards in run-index order; fails on gaps or overlaps.
    /// Empty shards are ignored.
    pub fn merge(mut shards: Vec<Shard>) -> Result<Shard> {
        shards.retain(|s| !s.rows.is_empty());
        shards.sort_by_key(|s| s.start);
        let start = shards.first().map_or(0, |s| s.start);
        let mut rows = Vec::new();
        for s in shards {
            if s.start != start + rows.len() as u64 {
                return Err(Error::Config(format!(
                    "shard starting at {} does not continue at {}",
                    s.start,
                    start + rows.len() as u64
                )));
            }
            rows.extend(s.rows);
        }
        Ok(Shard { start, rows })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Experiment {
    pub config: ExperimentConfig,
    pub stats: ExperimentStats,
    pub rows: Vec<RunRow>,
}

fn with_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(pool.install(job))
}

/// Runs indices `range` of the campaign.
pub fn run_shard(config: &ExperimentConfig, range: Range<u64>) -> Result<Shard> {
    let problem = config.validate()?;
    let start = range.start;
    let rows = with_pool(config.parallelism, || {
        range
            .into_par_iter()
            .map(|i| {
                let search = config.search_config(i);
                let mut stream = rng::stream(search.seed);
                RunRow::from_result(&problem, &engine::run_search(&search, &problem, &mut stream))
            })
            .collect()
    })?;
    Ok(Shard { start, rows })
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<Experiment> {
    let problem = config.validate()?;
    let shard = run_shard(config, 0..config.sample_size as u64)?;
    let stats = ExperimentStats::from_rows(&shard.rows, problem.energy_target)?;
    Ok(Experiment {
        config: config.clone(),
        stats,
        rows: shard.rows,
    })
}

pub fn write_csv<W: Write>(rows: &[RunRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<RunRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

pub fn write_json<W: Write>(experiment: &Experiment, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, experiment)?;
    Ok(())
}
