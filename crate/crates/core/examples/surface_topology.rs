//! Samples a few random gluings and prints their topology: components, cusps,
//! Euler characteristic and genus. The genus of a large random surface sits
//! close to N/2.
//!
//! ```bash
//! cargo run --release -p randsurf --example surface_topology
//! ```

use randsurf::gluing::sample_uniform_gluing;
use randsurf::Gluing;

fn main() -> randsurf::Result<()> {
    let torus = Gluing::from_pairs(1, &[(1, 4), (2, 5), (3, 6)])?;
    let sphere = Gluing::from_pairs(1, &[(1, 2), (3, 4), (5, 6)])?;
    for (name, g) in [("torus", &torus), ("sphere", &sphere)] {
        let t = g.topology();
        println!("{name}: cusps {} genus {} chi {}", t.cusp_count, t.total_genus, t.euler_characteristic);
    }

    println!("\n{:>6} {:>9} {:>6} {:>6} {:>8}", "N", "connected", "cusps", "genus", "g/(N/2)");
    for (i, n) in [10usize, 100, 1000, 10_000].into_iter().enumerate() {
        let t = sample_uniform_gluing(n, 7, i as u64)?.topology();
        println!(
            "{n:>6} {:>9} {:>6} {:>6} {:>8.4}",
            t.connected,
            t.cusp_count,
            t.total_genus,
            t.total_genus as f64 / (n as f64 / 2.0)
        );
    }
    Ok(())
}
