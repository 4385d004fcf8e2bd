//! Self-avoiding walk search over mixed-radix coordinate spaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`mixedradix`]: coordinates, rank distance, neighborhoods, Hasse graphs
//! - [`hpfold`]: the 2D square-lattice HP folding objective and its search plans
//! - [`engine`]: the self-avoiding walk with trapped restarts and censoring
//! - [`oracle`]: exhaustive enumeration for small instances
//! - [`harness`]: multi-seed campaigns, statistics, CSV/JSON output, rendering
//!
//! ```
//! use sawfold::hpfold::{Plan, HpProblem};
//! use sawfold::engine::{run_search, SearchConfig};
//!
//! let problem = HpProblem::builder(Plan::A, 10)
//!     .fixed_binary("1001001001")
//!     .energy_target(-4)
//!     .build()
//!     .unwrap();
//! let config = SearchConfig::default();
//! let result = run_search(&config, &problem, &mut sawfold::rng::stream(config.seed));
//! assert_eq!(result.best_value, -4);
//! ```

pub mod engine;
pub mod error;
pub mod harness;
pub mod hpfold;
pub mod mixedradix;
pub mod oracle;
pub mod rng;

pub use error::{Error, Result};
