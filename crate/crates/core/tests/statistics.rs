//! Seeded Monte Carlo checks against exact answers. Every test uses a fixed
//! seed, so results are reproducible.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use randsurf::gluing::sample_uniform_gluing;
use randsurf::harness::{run_stats, ClassSelection, ExperimentConfig};
use randsurf::oracle::{enumerate_all_gluings, exact_joint_distribution};
use randsurf::poisson::CountVector;
use randsurf::spectrum::ClassMatcher;
use randsurf::words::canonicalize;
use randsurf::Gluing;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn chi_square_uniform(n: usize, samples: u64, seed: u64) -> (f64, f64) {
    let index: BTreeMap<Vec<(u32, u32)>, usize> = enumerate_all_gluings(n)
        .unwrap()
        .enumerate()
        .map(|(i, g)| (g.pairs(), i))
        .collect();
    let mut observed = vec![0u64; index.len()];
    for i in 0..samples {
        observed[index[&sample_uniform_gluing(n, seed, i).unwrap().pairs()]] += 1;
    }
    let expected = samples as f64 / index.len() as f64;
    let stat = observed.iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    let critical = ChiSquared::new((index.len() - 1) as f64).unwrap().inverse_cdf(0.999);
    (stat, critical)
}

#[test]
fn sampler_is_uniform_on_one_triangle_pair() {
    let (stat, critical) = chi_square_uniform(1, 150_000, 2024);
    assert!((critical - 36.12).abs() < 0.01);
    assert!(stat < critical, "chi-square {stat} >= {critical}");
}

#[test]
fn sampler_is_uniform_on_two_triangle_pairs() {
    let (stat, critical) = chi_square_uniform(2, 1_000_000, 7);
    assert!(stat < critical, "chi-square {stat} >= {critical}");
}

fn config(n: u128, samples: u64, seed: u64, classes: &[&str]) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new("stats", ClassSelection::Classes(classes.iter().map(|s| s.to_string()).collect()));
    cfg.n = Some(n);
    cfg.samples = Some(samples);
    cfg.seed = Some(seed);
    cfg.workers = 4;
    cfg
}

fn num(x: &randsurf::harness::Num) -> f64 {
    x.0
}

#[test]
fn sample_mean_matches_exact_mean() {
    let report = run_stats(&config(1, 150_000, 11, &["LR"])).unwrap();
    let lr = canonicalize(&"LR".parse().unwrap());
    let exact = exact_joint_distribution(&[lr], 1).unwrap().means_f64()[0];
    let stats = &report.classes[0];
    assert!((num(&stats.mean) - exact).abs() <= 3.0 * num(&stats.mean_standard_error));
}

#[test]
fn empirical_law_matches_exact_law_atomwise() {
    for (n, words) in [(1usize, vec!["LR"]), (2, vec!["LR", "LLR"])] {
        let classes: Vec<_> = words.iter().map(|w| canonicalize(&w.parse().unwrap())).collect();
        let exact = exact_joint_distribution(&classes, n).unwrap();
        let matcher = ClassMatcher::new(&classes).unwrap();
        let samples = 1_000_000u64;
        let mut tallies: BTreeMap<CountVector, u64> = BTreeMap::new();
        for i in 0..samples {
            let g: Gluing = sample_uniform_gluing(n, 99, i).unwrap();
            *tallies.entry(CountVector(matcher.count(&g))).or_default() += 1;
        }
        for (k, p) in &exact.joint_law.atoms {
            let p = p.to_f64().unwrap();
            let hat = tallies.get(k).copied().unwrap_or(0) as f64 / samples as f64;
            let se = (p * (1.0 - p) / samples as f64).sqrt();
            assert!((hat - p).abs() <= 3.0 * se, "N = {n}, atom {k}: {hat} vs {p}");
        }
        assert!(tallies.keys().all(|k| exact.joint_law.atoms.contains_key(k)));
    }
}

#[test]
fn connectivity_increases_with_size() {
    let mut previous: Option<(f64, f64)> = None;
    for n in [2u128, 5, 20, 100] {
        let report = run_stats(&config(n, 2_000, 5, &["LR"])).unwrap();
        let frac = num(&report.topology.connected_fraction);
        let se = num(&report.topology.connected_standard_error);
        if let Some((p, pse)) = previous {
            assert!(frac + 2.0 * (se * se + pse * pse).sqrt() >= p, "N = {n}: {frac} after {p}");
        }
        previous = Some((frac, se));
    }
    assert!(previous.unwrap().0 > 0.95);
}
