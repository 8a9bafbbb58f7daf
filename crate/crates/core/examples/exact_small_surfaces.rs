//! Enumerates every gluing of 2 and 4 triangles, computes the exact joint law
//! of the counts of [LR] and [LLR], and compares the exact mean of several
//! classes with the weighted sum over labelled cycle sequences.
//!
//! ```bash
//! cargo run --release -p randsurf --example exact_small_surfaces
//! ```

use randsurf::oracle::{exact_joint_distribution, gluing_count, representation_check};
use randsurf::words::canonicalize;
use randsurf::Word;

fn main() -> randsurf::Result<()> {
    let classes = vec![canonicalize(&"LR".parse()?), canonicalize(&"LLR".parse()?)];
    for n in [1usize, 2] {
        let sys = exact_joint_distribution(&classes, n)?;
        println!("N = {n}: {} gluings", gluing_count(n));
        for (v, count) in &sys.tallies {
            println!("  counts {v}: {count}/{}", sys.gluing_count);
        }
        let means: Vec<String> = sys.exact_means.iter().map(|m| m.to_string()).collect();
        println!("  exact means {means:?}, distance to Poisson {:.6}", sys.exact_mtv_f64());
    }

    println!("\nexact means against the sequence representation:");
    for w in ["L", "LR", "LLR", "LLRR", "LRLR"] {
        let word: Word = w.parse()?;
        for n in [1usize, 2] {
            let r = representation_check(&word, n)?;
            println!(
                "  {w:<5} N={n}: direct {:<8} representation {:<8} difference {}",
                r.direct_mean.to_string(),
                r.representation_mean.to_string(),
                r.difference
            );
        }
    }
    Ok(())
}
