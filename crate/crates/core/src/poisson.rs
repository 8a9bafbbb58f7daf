//! Poisson and product-Poisson laws, finite distributions over count vectors
//! and total-variation distances between them.
//!
//! Total variation is computed as half the L1 distance, which equals the
//! supremum over events for discrete laws. Truncated laws carry their omitted
//! tail mass, and that mass is counted in full, so distances against a
//! truncated law are upper estimates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use statrs::function::factorial::ln_factorial;

use crate::error::{Error, Result};
use crate::words::WordClass;

/// Tail mass a truncated product law may omit.
pub const MAX_TAIL_MASS: f64 = 1e-10;
/// Guard on the number of atoms of an explicit product law.
pub const MAX_PRODUCT_ATOMS: usize = 10_000_000;

/// A vector of class counts, indexed like the class list it was built for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CountVector(pub Vec<u64>);

impl CountVector {
    pub fn zeros(dimension: usize) -> Self {
        CountVector(vec![0; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u64>> for CountVector {
    fn from(v: Vec<u64>) -> Self {
        CountVector(v)
    }
}

pub fn ln_poisson_pmf(lambda: f64, k: u64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::NonPositiveMean(lambda));
    }
    Ok(k as f64 * lambda.ln() - lambda - ln_factorial(k))
}

/// `lambda^k e^(-lambda) / k!`, evaluated in log space.
pub fn poisson_pmf(lambda: f64, k: u64) -> Result<f64> {
    ln_poisson_pmf(lambda, k).map(f64::exp)
}

/// `P[Z > k]` for `Z ~ Po(lambda)`, summed upward from `k + 1` so that tiny
/// tails keep full relative precision.
pub fn poisson_upper_tail(lambda: f64, k: u64) -> Result<f64> {
    let mut total = 0.0;
    let mut j = k + 1;
    let mut term = poisson_pmf(lambda, j)?;
    while term > 0.0 && (term > total * 1e-17 || (j as f64) < lambda) {
        total += term;
        j += 1;
        term *= lambda / j as f64;
    }
    Ok(total)
}

/// Means of independent Poisson coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonSpec {
    lambdas: Vec<Ratio<u64>>,
}

impl PoissonSpec {
    pub fn new(lambdas: Vec<Ratio<u64>>) -> Result<Self> {
        if let Some(bad) = lambdas.iter().find(|l| l.is_zero()) {
            return Err(Error::NonPositiveMean(ratio_f64(bad)));
        }
        Ok(PoissonSpec { lambdas })
    }

    /// Limiting means `|[w]| / (2|w|)` of the given classes.
    pub fn for_classes(classes: &[WordClass]) -> Self {
        PoissonSpec {
            lambdas: classes.iter().map(|c| c.lambda).collect(),
        }
    }

    pub fn lambdas(&self) -> &[Ratio<u64>] {
        &self.lambdas
    }

    pub fn lambdas_f64(&self) -> Vec<f64> {
        self.lambdas.iter().map(ratio_f64).collect()
    }

    pub fn dimension(&self) -> usize {
        self.lambdas.len()
    }

    pub fn total_mean(&self) -> f64 {
        self.lambdas_f64().iter().sum()
    }

    /// Product pmf at `k`.
    pub fn pmf(&self, k: &CountVector) -> Result<f64> {
        if k.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch(k.dimension(), self.dimension()));
        }
        let mut ln = 0.0;
        for (lambda, &kk) in self.lambdas_f64().into_iter().zip(&k.0) {
            ln += ln_poisson_pmf(lambda, kk)?;
        }
        Ok(ln.exp())
    }
}

fn ratio_f64(r: &Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// A law on count vectors with finitely many atoms, plus a tail mass that
/// lies outside the listed atoms (nonzero only for truncated laws).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiniteDistribution {
    pub dimension: usize,
    pub atoms: BTreeMap<CountVector, f64>,
    pub tail_mass: f64,
    /// Number of observations behind an empirical law.
    pub sample_count: Option<u64>,
}

impl FiniteDistribution {
    pub fn point_mass(v: CountVector) -> Self {
        FiniteDistribution {
            dimension: v.dimension(),
            atoms: BTreeMap::from([(v, 1.0)]),
            tail_mass: 0.0,
            sample_count: None,
        }
    }

    pub fn prob(&self, v: &CountVector) -> f64 {
        self.atoms.get(v).copied().unwrap_or(0.0)
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.values().sum::<f64>() + self.tail_mass
    }

    /// Law of the vector with coordinate `coord` removed.
    pub fn marginalize_out(&self, coord: usize) -> Result<FiniteDistribution> {
        if coord >= self.dimension {
            return Err(Error::DimensionMismatch(coord, self.dimension));
        }
        let mut atoms = BTreeMap::new();
        for (v, &p) in &self.atoms {
            let mut w = v.0.clone();
            w.remove(coord);
            *atoms.entry(CountVector(w)).or_insert(0.0) += p;
        }
        Ok(FiniteDistribution {
            dimension: self.dimension - 1,
            atoms,
            tail_mass: self.tail_mass,
            sample_count: self.sample_count,
        })
    }

    /// Marginal law of one coordinate.
    pub fn marginal(&self, coord: usize) -> Result<FiniteDistribution> {
        if coord >= self.dimension {
            return Err(Error::DimensionMismatch(coord, self.dimension));
        }
        let mut atoms = BTreeMap::new();
        for (v, &p) in &self.atoms {
            *atoms.entry(CountVector(vec![v.0[coord]])).or_insert(0.0) += p;
        }
        Ok(FiniteDistribution {
            dimension: 1,
            atoms,
            tail_mass: self.tail_mass,
            sample_count: self.sample_count,
        })
    }
}

/// Independent Poisson coordinates on `{0..=truncation}^d`.
pub fn product_poisson(spec: &PoissonSpec, truncation: u32) -> Result<FiniteDistribution> {
    let d = spec.dimension();
    let lambdas = spec.lambdas_f64();
    let side = truncation as usize + 1;
    if side.checked_pow(d as u32).is_none_or(|n| n > MAX_PRODUCT_ATOMS) {
        return Err(Error::out_of_range("product atoms (truncation+1)^d", format!("{side}^{d}"), "<= 1e7"));
    }
    let mut inside = 1.0;
    let mut tail = 0.0;
    let mut marginals = Vec::with_capacity(d);
    for &lambda in &lambdas {
        let t = poisson_upper_tail(lambda, truncation as u64)?;
        // P[outside] = 1 - prod(1 - t_i), accumulated without cancellation
        tail += inside * t;
        inside *= 1.0 - t;
        let pmf = (0..=truncation as u64)
            .map(|k| poisson_pmf(lambda, k))
            .collect::<Result<Vec<_>>>()?;
        marginals.push(pmf);
    }
    if tail >= MAX_TAIL_MASS {
        return Err(Error::TailTooLarge { truncation, tail });
    }
    let mut atoms = BTreeMap::new();
    let mut idx = vec![0u64; d];
    loop {
        let p: f64 = idx.iter().zip(&marginals).map(|(&k, m)| m[k as usize]).product();
        atoms.insert(CountVector(idx.clone()), p);
        // odometer increment
        let mut pos = 0;
        while pos < d {
            idx[pos] += 1;
            if idx[pos] <= truncation as u64 {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == d {
            break;
        }
    }
    Ok(FiniteDistribution {
        dimension: d,
        atoms,
        tail_mass: tail,
        sample_count: None,
    })
}

/// Half-L1 distance over the union of supports, with both tail masses added
/// in full. Clamped to `[0, 1]`.
pub fn tv_distance(p: &FiniteDistribution, q: &FiniteDistribution) -> Result<f64> {
    if p.dimension != q.dimension {
        return Err(Error::DimensionMismatch(p.dimension, q.dimension));
    }
    let keys: BTreeSet<&CountVector> = p.atoms.keys().chain(q.atoms.keys()).collect();
    let l1: f64 = keys.into_iter().map(|k| (p.prob(k) - q.prob(k)).abs()).sum();
    Ok((0.5 * (l1 + p.tail_mass + q.tail_mass)).clamp(0.0, 1.0))
}

/// Total variation between a finitely supported law and the untruncated
/// product Poisson law: `1/2 (sum_{supp p} |p - q| + 1 - sum_{supp p} q)`.
pub fn tv_to_product_poisson(p: &FiniteDistribution, spec: &PoissonSpec) -> Result<f64> {
    if p.dimension != spec.dimension() {
        return Err(Error::DimensionMismatch(p.dimension, spec.dimension()));
    }
    let mut l1 = 0.0;
    let mut covered = 0.0;
    for (k, &pk) in &p.atoms {
        let qk = spec.pmf(k)?;
        l1 += (pk - qk).abs();
        covered += qk;
    }
    Ok((0.5 * (l1 + (1.0 - covered).max(0.0) + p.tail_mass)).clamp(0.0, 1.0))
}

/// Delta-method standard error of the plug-in distance from
/// [`tv_to_product_poisson`]: with the signs `s = sign(p_hat - q)` held fixed
/// the estimate is `1/2 E_hat[s] + const`, whose variance is `Var(s) / (4M)`.
pub fn plug_in_tv_standard_error(p: &FiniteDistribution, spec: &PoissonSpec) -> Result<f64> {
    let m = p.sample_count.ok_or(Error::EmptySample)? as f64;
    let mut mean = 0.0;
    let mut second = 0.0;
    for (k, &pk) in &p.atoms {
        let s = (pk - spec.pmf(k)?).signum();
        mean += pk * s;
        second += pk * s * s;
    }
    Ok(0.5 * ((second - mean * mean).max(0.0) / m).sqrt())
}

/// Relative frequencies of the observed vectors.
pub fn empirical_distribution(samples: &[CountVector]) -> Result<FiniteDistribution> {
    let first = samples.first().ok_or(Error::EmptySample)?;
    let d = first.dimension();
    let mut tallies: BTreeMap<CountVector, u64> = BTreeMap::new();
    for s in samples {
        if s.dimension() != d {
            return Err(Error::DimensionMismatch(s.dimension(), d));
        }
        *tallies.entry(s.clone()).or_default() += 1;
    }
    Ok(from_tallies(d, tallies, samples.len() as u64))
}

pub(crate) fn from_tallies(dimension: usize, tallies: BTreeMap<CountVector, u64>, total: u64) -> FiniteDistribution {
    FiniteDistribution {
        dimension,
        atoms: tallies
            .into_iter()
            .map(|(k, c)| (k, c as f64 / total as f64))
            .collect(),
        tail_mass: 0.0,
        sample_count: Some(total),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProbabilityInterval {
    pub center: f64,
    pub lower: f64,
    pub upper: f64,
}

/// `P[W = k]` lies within `2 tv` of the product Poisson pmf at `k`.
pub fn individual_probability_bound(tv: f64, k: &CountVector, spec: &PoissonSpec) -> Result<ProbabilityInterval> {
    if !(0.0..=1.0).contains(&tv) {
        return Err(Error::out_of_range("total variation", tv, "[0, 1]"));
    }
    let center = spec.pmf(k)?;
    Ok(ProbabilityInterval {
        center,
        lower: (center - 2.0 * tv).max(0.0),
        upper: (center + 2.0 * tv).min(1.0),
    })
}

// ---------------------------------------------------------------------------
// Exact mode

/// A finitely supported law with exact rational probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactDistribution {
    pub dimension: usize,
    pub atoms: BTreeMap<CountVector, BigRational>,
}

impl ExactDistribution {
    pub fn from_counts(dimension: usize, tallies: &BTreeMap<CountVector, u64>) -> Self {
        let total: u64 = tallies.values().sum();
        ExactDistribution {
            dimension,
            atoms: tallies
                .iter()
                .map(|(k, &c)| (k.clone(), BigRational::new(c.into(), total.into())))
                .collect(),
        }
    }

    pub fn total_mass(&self) -> BigRational {
        self.atoms.values().fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn to_f64(&self) -> FiniteDistribution {
        FiniteDistribution {
            dimension: self.dimension,
            atoms: self
                .atoms
                .iter()
                .map(|(k, p)| (k.clone(), p.to_f64().unwrap_or(f64::NAN)))
                .collect(),
            tail_mass: 0.0,
            sample_count: None,
        }
    }

    /// Exact mean of each coordinate.
    pub fn means(&self) -> Vec<BigRational> {
        (0..self.dimension)
            .map(|i| {
                self.atoms
                    .iter()
                    .fold(BigRational::zero(), |acc, (k, p)| acc + p * BigRational::from_integer(k.0[i].into()))
            })
            .collect()
    }
}

/// Exact half-L1 distance between two rational laws.
pub fn exact_tv_distance(p: &ExactDistribution, q: &ExactDistribution) -> Result<BigRational> {
    if p.dimension != q.dimension {
        return Err(Error::DimensionMismatch(p.dimension, q.dimension));
    }
    let zero = BigRational::zero();
    let keys: BTreeSet<&CountVector> = p.atoms.keys().chain(q.atoms.keys()).collect();
    let mut l1 = BigRational::zero();
    for k in keys {
        let a = p.atoms.get(k).unwrap_or(&zero);
        let b = q.atoms.get(k).unwrap_or(&zero);
        l1 += (a - b).abs();
    }
    Ok(l1 / BigRational::from_integer(2.into()))
}

/// `e^(-x)` for rational `x >= 0`, as a rational within `10^-digits`.
pub fn exp_neg_rational(x: &BigRational, digits: u32) -> BigRational {
    // e^x by its Taylor series (all terms positive), then invert
    let scale = BigInt::from(10u32).pow(digits + 10);
    let eps = BigRational::new(BigInt::one(), scale.clone());
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut n = 1u32;
    while term > eps || BigRational::from_integer(n.into()) <= *x {
        term = term * x / BigRational::from_integer(n.into());
        sum += &term;
        n += 1;
    }
    let inv = sum.recip();
    // round to a fixed denominator so later sums stay small
    let rounded = (inv * BigRational::from_integer(scale.clone())).round();
    BigRational::new(rounded.to_integer(), scale)
}

/// Product Poisson pmf at `k` with `exp` evaluated to `digits` digits.
pub fn exact_product_pmf(spec: &PoissonSpec, k: &CountVector, digits: u32) -> Result<BigRational> {
    if k.dimension() != spec.dimension() {
        return Err(Error::DimensionMismatch(k.dimension(), spec.dimension()));
    }
    let mut out = BigRational::one();
    for (lambda, &kk) in spec.lambdas().iter().zip(&k.0) {
        let l = BigRational::new((*lambda.numer()).into(), (*lambda.denom()).into());
        let mut factorial = BigUint::one();
        for i in 2..=kk {
            factorial *= i;
        }
        out = out * exp_neg_rational(&l, digits) * num_traits::pow(l, kk as usize)
            / BigRational::from_integer(BigInt::from(factorial));
    }
    Ok(out)
}

/// Distance from an exact law to the untruncated product Poisson law, with
/// the Poisson side accurate to about `digits` digits.
pub fn exact_tv_to_product_poisson(p: &ExactDistribution, spec: &PoissonSpec, digits: u32) -> Result<BigRational> {
    if p.dimension != spec.dimension() {
        return Err(Error::DimensionMismatch(p.dimension, spec.dimension()));
    }
    let mut l1 = BigRational::zero();
    let mut covered = BigRational::zero();
    for (k, pk) in &p.atoms {
        let qk = exact_product_pmf(spec, k, digits)?;
        l1 += (pk - &qk).abs();
        covered += qk;
    }
    Ok((l1 + BigRational::one() - covered) / BigRational::from_integer(2.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(v: &[u64]) -> CountVector {
        CountVector(v.to_vec())
    }

    #[test]
    fn pmf_values() {
        for lambda in [0.1, 0.5, 1.0, 7.5] {
            assert!((poisson_pmf(lambda, 0).unwrap() - (-lambda).exp()).abs() < 1e-15);
        }
        assert!((poisson_pmf(1.0, 1).unwrap() - 0.367_879_4).abs() < 1e-7);
        assert!((poisson_pmf(2.0, 2).unwrap() - 2.0 * (-2.0f64).exp()).abs() < 1e-15);
        assert!((poisson_pmf(2.0, 2).unwrap() - 0.270_670_6).abs() < 1e-7);
        assert!(poisson_pmf(0.0, 1).is_err());
        assert!(poisson_pmf(-1.0, 1).is_err());
        assert!(poisson_pmf(f64::NAN, 1).is_err());
    }

    #[test]
    fn upper_tail_matches_complement() {
        for lambda in [0.5, 1.0, 3.0] {
            for k in 0..6 {
                let head: f64 = (0..=k).map(|j| poisson_pmf(lambda, j).unwrap()).sum();
                assert!((poisson_upper_tail(lambda, k).unwrap() - (1.0 - head)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn product_law_basics() {
        let half = PoissonSpec::new(vec![Ratio::new(1, 2)]).unwrap();
        let law = product_poisson(&half, 20).unwrap();
        assert!(law.tail_mass < 1e-10);
        assert!(law.tail_mass > 0.0);
        assert!((law.total_mass() - 1.0).abs() < 1e-12);
        assert!(matches!(product_poisson(&half, 3), Err(Error::TailTooLarge { .. })));

        let two = PoissonSpec::new(vec![Ratio::new(1, 2), Ratio::new(1, 1)]).unwrap();
        let law = product_poisson(&two, 20).unwrap();
        assert!((law.prob(&cv(&[0, 0])) - (-1.5f64).exp()).abs() < 1e-15);
        assert!((law.prob(&cv(&[1, 1])) - 0.5 * (-1.5f64).exp()).abs() < 1e-15);
        assert!(PoissonSpec::new(vec![Ratio::new(0, 1)]).is_err());
    }

    #[test]
    fn product_law_marginalizes() {
        let spec = PoissonSpec::new(vec![Ratio::new(1, 2), Ratio::new(1, 1), Ratio::new(3, 4)]).unwrap();
        let law = product_poisson(&spec, 22).unwrap();
        for drop in 0..3 {
            let mut rest = spec.lambdas().to_vec();
            rest.remove(drop);
            let smaller = product_poisson(&PoissonSpec::new(rest).unwrap(), 22).unwrap();
            let summed = law.marginalize_out(drop).unwrap();
            for (k, p) in &smaller.atoms {
                assert!((summed.prob(k) - p).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn tv_examples() {
        let p = FiniteDistribution::point_mass(cv(&[0]));
        assert_eq!(tv_distance(&p, &p).unwrap(), 0.0);
        let q = FiniteDistribution::point_mass(cv(&[3]));
        assert_eq!(tv_distance(&p, &q).unwrap(), 1.0);
        // point mass at 0 vs Po(ln 2): 1 - e^(-ln 2) = 1/2
        let ln2 = 2f64.ln();
        let mut atoms = BTreeMap::new();
        for k in 0..40 {
            atoms.insert(cv(&[k]), poisson_pmf(ln2, k).unwrap());
        }
        let po = FiniteDistribution {
            dimension: 1,
            atoms,
            tail_mass: 0.0,
            sample_count: None,
        };
        assert!((tv_distance(&p, &po).unwrap() - 0.5).abs() < 1e-12);
        let mut empirical = p.clone();
        empirical.sample_count = Some(1);
        let spec = PoissonSpec::new(vec![Ratio::new(1, 2)]).unwrap();
        let direct = tv_to_product_poisson(&empirical, &spec).unwrap();
        assert!((direct - (1.0 - (-0.5f64).exp())).abs() < 1e-15);
        assert!(tv_distance(&p, &FiniteDistribution::point_mass(cv(&[0, 0]))).is_err());
    }

    #[test]
    fn empirical_laws() {
        let single = empirical_distribution(&[cv(&[2, 1])]).unwrap();
        assert_eq!(single.atoms, BTreeMap::from([(cv(&[2, 1]), 1.0)]));
        let law = empirical_distribution(&[cv(&[0]), cv(&[0]), cv(&[1]), cv(&[1])]).unwrap();
        assert_eq!(law.atoms, BTreeMap::from([(cv(&[0]), 0.5), (cv(&[1]), 0.5)]));
        assert_eq!(law.sample_count, Some(4));
        assert!(empirical_distribution(&[]).is_err());
        assert!(empirical_distribution(&[cv(&[0]), cv(&[0, 1])]).is_err());
    }

    #[test]
    fn individual_bounds() {
        let spec = PoissonSpec::new(vec![Ratio::new(1, 2), Ratio::new(1, 1)]).unwrap();
        let at0 = individual_probability_bound(0.0, &cv(&[0, 0]), &spec).unwrap();
        assert!((at0.center - (-1.5f64).exp()).abs() < 1e-15);
        assert_eq!(at0.lower, at0.center);
        assert_eq!(at0.upper, at0.center);
        let wide = individual_probability_bound(0.6, &cv(&[0, 0]), &spec).unwrap();
        assert_eq!((wide.lower, wide.upper), (0.0, 1.0));
        assert!(individual_probability_bound(1.5, &cv(&[0, 0]), &spec).is_err());
    }

    #[test]
    fn exact_exp_is_accurate() {
        let half = BigRational::new(1.into(), 2.into());
        let e = exp_neg_rational(&half, 60);
        assert!((e.to_f64().unwrap() - (-0.5f64).exp()).abs() < 1e-16);
        let three = BigRational::from_integer(3.into());
        let e3 = exp_neg_rational(&three, 60);
        // e^-3 * e^3 == 1 to 55 digits
        let prod = e3 * exp_pos(&three);
        let err = (prod - BigRational::one()).abs();
        assert!(err < BigRational::new(1.into(), BigInt::from(10u32).pow(55)));
    }

    fn exp_pos(x: &BigRational) -> BigRational {
        let mut term = BigRational::one();
        let mut sum = BigRational::one();
        for n in 1..200u32 {
            term = term * x / BigRational::from_integer(n.into());
            sum += &term;
        }
        sum
    }

    #[test]
    fn exact_and_float_tv_agree() {
        let tallies = BTreeMap::from([(cv(&[0]), 7u64), (cv(&[1]), 5), (cv(&[3]), 3)]);
        let exact = ExactDistribution::from_counts(1, &tallies);
        assert_eq!(exact.total_mass(), BigRational::one());
        let spec = PoissonSpec::new(vec![Ratio::new(1, 2)]).unwrap();
        let tv = exact_tv_to_product_poisson(&exact, &spec, 50).unwrap();
        let float = tv_to_product_poisson(&exact.to_f64(), &spec).unwrap();
        assert!((tv.to_f64().unwrap() - float).abs() < 1e-14);
        assert_eq!(exact_tv_distance(&exact, &exact).unwrap(), BigRational::zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn law() -> impl Strategy<Value = FiniteDistribution> {
            prop::collection::vec((0u64..4, 0u64..3, 1u32..20), 1..8).prop_map(|entries| {
                let mut atoms = BTreeMap::new();
                for (a, b, w) in entries {
                    *atoms.entry(CountVector(vec![a, b])).or_insert(0.0) += w as f64;
                }
                let total: f64 = atoms.values().sum();
                atoms.values_mut().for_each(|p| *p /= total);
                FiniteDistribution {
                    dimension: 2,
                    atoms,
                    tail_mass: 0.0,
                    sample_count: None,
                }
            })
        }

        proptest! {
            #[test]
            fn tv_is_a_metric(p in law(), q in law(), r in law()) {
                let pq = tv_distance(&p, &q).unwrap();
                let qp = tv_distance(&q, &p).unwrap();
                prop_assert!((pq - qp).abs() < 1e-15);
                prop_assert!((0.0..=1.0).contains(&pq));
                prop_assert!(tv_distance(&p, &p).unwrap() < 1e-15);
                let pr = tv_distance(&p, &r).unwrap();
                let rq = tv_distance(&r, &q).unwrap();
                prop_assert!(pq <= pr + rq + 1e-12);
                if pq < 1e-12 {
                    for (k, v) in &p.atoms {
                        prop_assert!((q.prob(k) - v).abs() < 1e-9);
                    }
                }
            }
        }
    }
}
