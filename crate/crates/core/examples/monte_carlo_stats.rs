//! Runs a seeded, parallel Monte Carlo experiment through the harness and
//! prints the JSON report the `randsurf stats` command would produce.
//!
//! ```bash
//! cargo run --release -p randsurf --example monte_carlo_stats
//! ```

use randsurf::harness::{render_stats, run_stats, ClassSelection, ExperimentConfig, OutputFormat};

fn main() -> randsurf::Result<()> {
    let mut cfg = ExperimentConfig::new("stats", ClassSelection::MaxTrace(5));
    cfg.n = Some(500);
    cfg.samples = Some(5000);
    cfg.seed = Some(2024);
    cfg.workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_stats(&cfg)?;
    println!("{}", render_stats(&report, OutputFormat::Json)?);
    Ok(())
}
