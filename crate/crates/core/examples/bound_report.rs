//! Evaluates the explicit total variation bounds for a small set of classes
//! across surface sizes: the per-class error terms, their sum and the coarse
//! closed-form bound.
//!
//! ```bash
//! cargo run --release -p randsurf --example bound_report
//! ```

use randsurf::bounds::{bound_report, main_bound_exact, univariate_main_bound};
use randsurf::words::canonicalize;

fn main() -> randsurf::Result<()> {
    let classes = vec![canonicalize(&"LR".parse()?), canonicalize(&"LLR".parse()?)];
    println!("main bound for one class of length 1 at N = 1: {}", main_bound_exact(1, 1, 1)?);

    for n in [10u128, 1000, 100_000, 10u128.pow(12)] {
        let r = bound_report(&classes, n)?;
        println!("\nN = {n}");
        for c in &r.per_class {
            let s = &c.class_scaled;
            println!(
                "  {:<5} log10 terms: {:.3} {:.3} {:.3} {:.3}",
                c.class.canonical.to_string(),
                s.sigma1.log10(),
                s.sigma2.log10(),
                s.sigma3.log10(),
                s.sigma4.log10()
            );
        }
        println!("  refined {}  main {}  chain holds: {}", r.refined_mtv_bound, r.main_bound, r.chain_holds());
        println!("  univariate bound for [LR]: {}", univariate_main_bound(&classes[0], n)?);
    }
    Ok(())
}
