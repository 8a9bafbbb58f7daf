//! For each surface size, finds the largest trace cutoff whose main bound is
//! still below 1. The cutoff grows very slowly with N.
//!
//! ```bash
//! cargo run --release -p randsurf --example admissible_traces
//! ```

use randsurf::bounds::{admissible_trace_for_n, main_bound};
use randsurf::words::enumerate_classes_by_trace;

fn main() -> randsurf::Result<()> {
    for j in (3..=36).step_by(3) {
        let n = 10u128.pow(j);
        match admissible_trace_for_n(n, 1.0)? {
            Some(k) => {
                let census = enumerate_classes_by_trace(k)?;
                println!(
                    "N = 1e{j:<2}: trace <= {k:>2}, {:>2} classes, bound {}",
                    census.count(),
                    main_bound(&census.classes, n)?
                );
            }
            None => println!("N = 1e{j:<2}: no cutoff gives a bound below 1"),
        }
    }
    Ok(())
}
