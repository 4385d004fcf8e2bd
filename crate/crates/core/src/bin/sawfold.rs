use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sawfold::engine::{self, SearchConfig, SearchMode};
use sawfold::harness::{self, ExperimentConfig, RunRow};
use sawfold::hpfold::{self, HpProblem, InstanceSpec, Plan};
use sawfold::mixedradix::{self, DEFAULT_ENUMERATION_CAP};
use sawfold::oracle::{self, DEFAULT_DOMAIN_CAP};
use sawfold::{rng, Error, Result};

#[derive(Parser)]
#[command(name = "sawfold", version, about = "Self-avoiding walks on mixed-radix spaces, applied to HP folding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single search run.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = rng::DEFAULT_BASE_SEED)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Multi-seed campaign.
    Experiment {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = harness::DEFAULT_SAMPLE_SIZE)]
        seeds: usize,
        #[arg(long, default_value_t = rng::DEFAULT_BASE_SEED)]
        base_seed: u64,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive enumeration of a small instance.
    Oracle {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = DEFAULT_DOMAIN_CAP)]
        domain_cap: u128,
        /// Also print the number of pairs valued at or below this threshold.
        #[arg(long, allow_hyphen_values = true)]
        threshold: Option<i64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hasse graph of a mixed-radix space: statistics, or DOT with --dot.
    Hasse {
        /// Segments as base^len, comma separated, e.g. 2^2,3^2.
        #[arg(long)]
        radix: String,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a feasible fold as ASCII, or SVG with --svg.
    Render {
        #[arg(long)]
        coord_b: String,
        #[arg(long)]
        coord_t: String,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Read the instance from the first record of a key=value file.
    #[arg(long, conflicts_with_all = ["plan", "length"])]
    instance: Option<PathBuf>,
    #[arg(long, value_parser = parse_plan)]
    plan: Option<Plan>,
    #[arg(long)]
    length: Option<usize>,
    #[arg(long)]
    weight: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    target: Option<i64>,
    #[arg(long)]
    coord_b: Option<String>,
    #[arg(long)]
    coord_t: Option<String>,
    #[arg(long)]
    weight_cap: Option<usize>,
    /// Freeze the first bond (first ternary digit forward).
    #[arg(long)]
    anchored: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = engine::DEFAULT_PROBE_LIMIT)]
    probe_limit: u64,
    #[arg(long, default_value_t = engine::DEFAULT_BUFFER_CAPACITY)]
    buffer_capacity: usize,
    /// Stop on any value strictly below this bound instead of the target.
    #[arg(long, allow_hyphen_values = true)]
    upper_bound: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn parse_plan(s: &str) -> std::result::Result<Plan, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl InstanceArgs {
    fn spec(&self) -> Result<InstanceSpec> {
        let mut spec = match &self.instance {
            Some(path) => hpfold::read_instances(path)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Config(format!("{}: no instance records", path.display())))?,
            None => {
                let plan = self.plan.ok_or_else(|| Error::Config("--plan is required".into()))?;
                let n = self
                    .length
                    .or(self.coord_b.as_ref().map(|b| b.trim().len()))
                    .or(self.coord_t.as_ref().map(|t| t.trim().len() + 1))
                    .ok_or_else(|| Error::Config("--length is required".into()))?;
                InstanceSpec::new(plan, n)
            }
        };
        if let Some(w) = self.weight {
            spec.weight = Some(w);
        }
        if let Some(t) = self.target {
            spec.energy_target = Some(t);
        }
        if let Some(b) = &self.coord_b {
            spec.coord_b = Some(b.clone());
        }
        if let Some(t) = &self.coord_t {
            spec.coord_t = Some(t.clone());
        }
        if let Some(c) = self.weight_cap {
            spec.weight_cap = Some(c);
        }
        spec.anchored |= self.anchored;
        Ok(spec)
    }
}

impl SearchArgs {
    fn mode(&self) -> SearchMode {
        match self.upper_bound {
            Some(upper_bound) => SearchMode::BoundImproving { upper_bound },
            None => SearchMode::FixedTarget,
        }
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Error::Io { path: path.clone(), source: e })?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn finish(mut w: Box<dyn Write>, out: &Option<PathBuf>) -> Result<()> {
    w.flush().map_err(|e| Error::Io {
        path: out.clone().unwrap_or_else(|| "<stdout>".into()),
        source: e,
    })
}

fn write_text(out: &Option<PathBuf>, text: &str) -> Result<()> {
    let mut w = sink(out)?;
    w.write_all(text.as_bytes()).map_err(|e| Error::Io {
        path: out.clone().unwrap_or_else(|| "<stdout>".into()),
        source: e,
    })?;
    finish(w, out)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve { instance, search, seed, output } => {
            let problem = instance.spec()?.build()?;
            let config = SearchConfig::default()
                .with_seed(seed)
                .with_probe_limit(search.probe_limit)
                .with_buffer_capacity(search.buffer_capacity)
                .with_mode(search.mode());
            let result = engine::run_search(&config, &problem, &mut rng::stream(seed));
            let row = RunRow::from_result(&problem, &result);
            let mut w = sink(&output.out)?;
            match output.format {
                Format::Csv => harness::write_csv(std::slice::from_ref(&row), &mut w)?,
                Format::Json => serde_json::to_writer_pretty(&mut w, &row)?,
            }
            finish(w, &output.out)?;
            if !row.is_censored && row.value <= 0 {
                eprint!("{}", harness::render_ascii(&row.coord_b, &row.coord_t)?);
            }
        }
        Command::Experiment { instance, search, seeds, base_seed, parallelism, output } => {
            let config = ExperimentConfig::new(instance.spec()?)
                .with_sample_size(seeds)
                .with_base_seed(base_seed)
                .with_probe_limit(search.probe_limit)
                .with_buffer_capacity(search.buffer_capacity)
                .with_parallelism(parallelism)
                .with_mode(search.mode());
            let experiment = harness::run_experiment(&config)?;
            let mut w = sink(&output.out)?;
            match output.format {
                Format::Csv => harness::write_csv(&experiment.rows, &mut w)?,
                Format::Json => harness::write_json(&experiment, &mut w)?,
            }
            finish(w, &output.out)?;
            eprintln!("{}", serde_json::to_string_pretty(&experiment.stats)?);
        }
        Command::Oracle { instance, domain_cap, threshold, output } => {
            let problem: HpProblem = instance.spec()?.build()?;
            let report = oracle::enumerate_optimum(&problem, domain_cap)?;
            match output.format {
                Format::Csv => write_text(&output.out, &report.to_text(Some(&problem)))?,
                Format::Json => write_text(&output.out, &serde_json::to_string_pretty(&report)?)?,
            }
            if let Some(t) = threshold {
                eprintln!("at_or_below {t}: {}", report.count_at_or_below(t));
            }
        }
        Command::Hasse { radix, cap, dot, out } => {
            let spec = mixedradix::parse_spec(&radix)?;
            let text = if dot {
                mixedradix::hasse_dot(&spec, cap, None)?
            } else {
                let stats = mixedradix::hasse_stats(&spec, cap)?;
                let mut s = format!("space {spec}\nvertices {}\nedges {}\n", stats.vertex_count, stats.edge_count);
                for (degree, count) in &stats.degree_histogram {
                    s.push_str(&format!("degree {degree}: {count}\n"));
                }
                s
            };
            write_text(&out, &text)?;
        }
        Command::Render { coord_b, coord_t, svg, out } => {
            let text = if svg {
                harness::render_svg(&coord_b, &coord_t)?
            } else {
                harness::render_ascii(&coord_b, &coord_t)?
            };
            write_text(&out, &text)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sawfold: {e}");
            ExitCode::FAILURE
        }
    }
}
