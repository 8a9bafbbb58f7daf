//! Counts closed left/right traversals on one random surface, grouped by word
//! class, and prints a few of the cycles themselves.
//!
//! ```bash
//! cargo run --release -p randsurf --example count_geodesics
//! ```

use randsurf::gluing::sample_uniform_gluing;
use randsurf::spectrum::{count_cycles, enumerate_cycles};

fn main() -> randsurf::Result<()> {
    let g = sample_uniform_gluing(200, 42, 0)?;
    let report = count_cycles(&g, 6)?;
    println!("N = {}, words up to length {}", report.n, report.max_word_length);
    if let Some(len) = report.shortest_geodesic_length {
        println!("shortest closed geodesic found: {len:.6}");
    }
    for (class, count) in &report.counts {
        let kind = if class.is_parabolic() { "cusp" } else { "geodesic" };
        println!("  {:<8} {:>3}  ({kind}, mean {:.3})", class.canonical.to_string(), count, class.lambda_f64());
    }

    println!("\nsome cycles of length 3:");
    for cycle in enumerate_cycles(&g, 3)?.iter().filter(|c| c.len() == 3).take(5) {
        let sides: Vec<u32> = cycle.entered_sides.iter().map(|s| s.0).collect();
        println!("  {} via sides {sides:?}", cycle.word());
    }
    Ok(())
}
