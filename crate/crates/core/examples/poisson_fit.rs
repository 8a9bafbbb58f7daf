//! Samples count vectors for [LR] and [LLR] and measures how far their joint
//! law is from independent Poisson variables with the predicted means.
//!
//! ```bash
//! cargo run --release -p randsurf --example poisson_fit
//! ```

use randsurf::gluing::sample_uniform_gluing;
use randsurf::poisson::{
    empirical_distribution, individual_probability_bound, plug_in_tv_standard_error, tv_to_product_poisson,
    CountVector, PoissonSpec,
};
use randsurf::spectrum::ClassMatcher;
use randsurf::words::canonicalize;

fn main() -> randsurf::Result<()> {
    let classes = vec![canonicalize(&"LR".parse()?), canonicalize(&"LLR".parse()?)];
    let spec = PoissonSpec::for_classes(&classes);
    let matcher = ClassMatcher::new(&classes)?;

    for n in [5usize, 25, 125] {
        let samples = (0..20_000u64)
            .map(|i| Ok(CountVector(matcher.count(&sample_uniform_gluing(n, 1, i)?))))
            .collect::<randsurf::Result<Vec<_>>>()?;
        let empirical = empirical_distribution(&samples)?;
        let tv = tv_to_product_poisson(&empirical, &spec)?;
        let se = plug_in_tv_standard_error(&empirical, &spec)?;
        let zero = CountVector(vec![0, 0]);
        let interval = individual_probability_bound(tv, &zero, &spec)?;
        println!(
            "N={n:>4}: TV {tv:.4} +- {se:.4}; P[(0,0)] empirical {:.4}, Poisson {:.4}, band [{:.4}, {:.4}]",
            empirical.prob(&zero),
            spec.pmf(&zero)?,
            interval.lower,
            interval.upper
        );
    }
    Ok(())
}
