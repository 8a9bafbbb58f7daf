//! Exact answers by exhausting every gluing of a tiny surface.
//!
//! For `N = 1` there are 15 gluings and for `N = 2` there are 10 395, so the
//! joint law of any class counts can be tabulated exactly. `N = 3`
//! (34 459 425 gluings) is available behind the `n3-oracle` feature.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{p_k_n_exact, a_int};
use crate::error::{Error, Result};
use crate::gluing::{next_index, Gluing, Turn};
use crate::poisson::{exact_tv_to_product_poisson, CountVector, ExactDistribution, PoissonSpec};
use crate::spectrum::{count_vector, ClassMatcher};
use crate::words::{canonicalize, Word, WordClass};

/// Largest word length accepted by [`exact_joint_distribution`].
pub const MAX_ORACLE_WORD_LENGTH: usize = 6;
/// Largest word length accepted by [`representation_check`].
pub const MAX_REPRESENTATION_WORD_LENGTH: usize = 5;
/// Decimal digits used for `exp` when comparing with Poisson laws.
pub const POISSON_DIGITS: u32 = 60;

fn max_oracle_n() -> usize {
    if cfg!(feature = "n3-oracle") {
        3
    } else {
        2
    }
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        let range = if max == 3 { "1..=3" } else { "1..=2 (3 needs the n3-oracle feature)" };
        return Err(Error::out_of_range("N", n, range));
    }
    Ok(())
}

/// `(6N - 1)!!`, the number of perfect matchings of `6N` labels.
pub fn gluing_count(n: usize) -> u64 {
    (1..6 * n as u64).step_by(2).product()
}

/// Every perfect matching of `6N` labels, each once: the smallest unmatched
/// label is paired with each larger unmatched label in increasing order,
/// recursively.
#[derive(Clone, Debug)]
pub struct GluingIter {
    n: usize,
    partner: Vec<u32>,
    stack: Vec<(u32, u32)>,
    fixed: usize,
    started: bool,
    done: bool,
}

const FREE: u32 = u32::MAX;

impl GluingIter {
    fn with_prefix(n: usize, prefix: &[(u32, u32)]) -> Self {
        let mut it = GluingIter {
            n,
            partner: vec![FREE; 6 * n],
            stack: Vec::new(),
            fixed: prefix.len(),
            started: false,
            done: false,
        };
        for &(a, b) in prefix {
            it.link(a, b);
        }
        it
    }

    fn link(&mut self, a: u32, b: u32) {
        self.partner[a as usize] = b;
        self.partner[b as usize] = a;
        self.stack.push((a, b));
    }

    fn fill(&mut self) {
        while let Some(a) = self.partner.iter().position(|&p| p == FREE) {
            let b = (a + 1..self.partner.len())
                .find(|&j| self.partner[j] == FREE)
                .expect("even number of labels");
            self.link(a as u32, b as u32);
        }
    }

    fn advance(&mut self) -> bool {
        while self.stack.len() > self.fixed {
            let (a, b) = self.stack.pop().expect("non-empty");
            self.partner[a as usize] = FREE;
            self.partner[b as usize] = FREE;
            if let Some(c) = (b as usize + 1..self.partner.len()).find(|&j| self.partner[j] == FREE) {
                self.link(a, c as u32);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for GluingIter {
    type Item = Gluing;

    fn next(&mut self) -> Option<Gluing> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Gluing::from_partner(self.n, self.partner.clone()))
    }
}

/// All `(6N - 1)!!` gluings in a fixed order.
pub fn enumerate_all_gluings(n: usize) -> Result<GluingIter> {
    check_n(n, max_oracle_n())?;
    Ok(GluingIter::with_prefix(n, &[]))
}

/// The gluings split by the partner of label 1; concatenated in order they
/// give [`enumerate_all_gluings`].
pub fn gluing_partitions(n: usize) -> Result<Vec<GluingIter>> {
    check_n(n, max_oracle_n())?;
    Ok((1..6 * n as u32).map(|b| GluingIter::with_prefix(n, &[(0, b)])).collect())
}

/// Exact law of `(Z_[w])_{[w] in W}` under the uniform gluing of size `N`.
#[derive(Clone, Debug, Serialize)]
pub struct ExactSystem {
    pub n: usize,
    pub gluing_count: u64,
    pub classes: Vec<WordClass>,
    /// Number of gluings producing each count vector.
    pub tallies: BTreeMap<CountVector, u64>,
    #[serde(skip)]
    pub joint_law: ExactDistribution,
    #[serde(serialize_with = "ser_rationals")]
    pub exact_means: Vec<BigRational>,
    /// Total variation to the product Poisson law, with the Poisson pmf
    /// accurate to [`POISSON_DIGITS`] digits.
    #[serde(serialize_with = "ser_rational")]
    pub exact_mtv: BigRational,
}

impl ExactSystem {
    pub fn exact_mtv_f64(&self) -> f64 {
        self.exact_mtv.to_f64().unwrap_or(f64::NAN)
    }

    pub fn means_f64(&self) -> Vec<f64> {
        self.exact_means.iter().map(|m| m.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_rationals<S: serde::Serializer>(rs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(|r| r.to_string()))
}

/// Tallies of count vectors over every gluing, computed per partition in
/// parallel and merged by addition.
pub fn exact_tallies(classes: &[WordClass], n: usize) -> Result<BTreeMap<CountVector, u64>> {
    let matcher = ClassMatcher::new(classes)?;
    let parts = gluing_partitions(n)?;
    let partials: Vec<BTreeMap<CountVector, u64>> = parts
        .into_par_iter()
        .map(|part| {
            let mut t = BTreeMap::new();
            for g in part {
                *t.entry(CountVector(matcher.count(&g))).or_insert(0u64) += 1;
            }
            t
        })
        .collect();
    let mut total = BTreeMap::new();
    for part in partials {
        for (k, c) in part {
            *total.entry(k).or_insert(0) += c;
        }
    }
    Ok(total)
}

pub fn exact_joint_distribution(classes: &[WordClass], n: usize) -> Result<ExactSystem> {
    check_n(n, max_oracle_n())?;
    if classes.is_empty() {
        return Err(Error::out_of_range("class count", 0, ">= 1"));
    }
    if let Some(c) = classes.iter().find(|c| c.word_length > MAX_ORACLE_WORD_LENGTH) {
        return Err(Error::out_of_range("word length", c.word_length, "1..=6"));
    }
    let tallies = exact_tallies(classes, n)?;
    let joint_law = ExactDistribution::from_counts(classes.len(), &tallies);
    let exact_means = joint_law.means();
    let spec = PoissonSpec::for_classes(classes);
    let exact_mtv = exact_tv_to_product_poisson(&joint_law, &spec, POISSON_DIGITS)?;
    Ok(ExactSystem {
        n,
        gluing_count: gluing_count(n),
        classes: classes.to_vec(),
        tallies,
        joint_law,
        exact_means,
        exact_mtv,
    })
}

/// The two sides of the representation of `E[Z_[w]]` as a weighted sum over
/// labelled cycle sequences.
#[derive(Clone, Debug, Serialize)]
pub struct RepresentationReport {
    pub word: Word,
    pub class: WordClass,
    pub n: usize,
    /// Average class count over all gluings.
    #[serde(serialize_with = "ser_rational")]
    pub direct_mean: BigRational,
    /// `|[w]| / (2|w|)` times the sum of `P[alpha in omega]` over all
    /// labelled sequences `alpha` reading `w`.
    #[serde(serialize_with = "ser_rational")]
    pub representation_mean: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub difference: BigRational,
    /// Number of labelled sequences reading `w`, `(6N)^|w|`.
    pub sequence_count: u64,
    /// Number of those on pairwise distinct triangles.
    pub distinct_triangle_count: u64,
    /// `a_{|w|,N}` for comparison with `distinct_triangle_count`.
    pub distinct_triangle_formula: u64,
    /// Whether every distinct-triangle sequence has probability `p_{|w|,N}`.
    pub distinct_probability_matches: bool,
}

/// One labelled sequence: entry labels (0-based) for each letter of `w`.
/// Returns the side pairs a gluing must contain, or `None` when the
/// requirements contradict each other.
pub(crate) fn required_pairs(entries: &[usize], turns: &[Turn]) -> Option<BTreeSet<(usize, usize)>> {
    let k = entries.len();
    let mut need: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..k {
        let exit = next_index(entries[i], turns[i]);
        let next_entry = entries[(i + 1) % k];
        if exit == next_entry {
            return None;
        }
        for (x, y) in [(exit, next_entry), (next_entry, exit)] {
            match need.get(&x) {
                Some(&z) if z != y => return None,
                _ => {
                    need.insert(x, y);
                }
            }
        }
    }
    Some(need.into_iter().filter(|(x, y)| x < y).collect())
}

pub fn representation_check(w: &Word, n: usize) -> Result<RepresentationReport> {
    check_n(n, 2)?;
    let k = w.len();
    if k == 0 || k > MAX_REPRESENTATION_WORD_LENGTH {
        return Err(Error::out_of_range("word length", k, "1..=5"));
    }
    let class = canonicalize(w);
    let turns: Vec<Turn> = w.letters().iter().map(|&l| Turn::from_letter(l)).collect();
    let sides = 6 * n;
    // only needed for distinct-triangle sequences, which force k <= 2N
    let p_k = if k <= 2 * n { p_k_n_exact(k as u64, n as u128)? } else { BigRational::zero() };

    let mut sum = BigRational::zero();
    let mut distinct_triangle_count = 0u64;
    let mut distinct_probability_matches = true;
    let mut entries = vec![0usize; k];
    let sequence_count = (sides as u64).pow(k as u32);
    for code in 0..sequence_count {
        let mut c = code;
        for e in entries.iter_mut() {
            *e = (c % sides as u64) as usize;
            c /= sides as u64;
        }
        let prob = match required_pairs(&entries, &turns) {
            Some(pairs) => p_k_n_exact(pairs.len() as u64, n as u128)?,
            None => BigRational::zero(),
        };
        let triangles: BTreeSet<usize> = entries.iter().map(|e| e / 3).collect();
        if triangles.len() == k {
            distinct_triangle_count += 1;
            distinct_probability_matches &= prob == p_k;
        }
        sum += prob;
    }
    let scale = BigRational::new(BigInt::from(class.class_size), BigInt::from(2 * k));
    let representation_mean = scale * sum;

    let mut total = 0u64;
    for g in enumerate_all_gluings(n)? {
        total += count_vector(&g, std::slice::from_ref(&class))?[0];
    }
    let direct_mean = BigRational::new(BigInt::from(total), BigInt::from(gluing_count(n)));
    let difference = &direct_mean - &representation_mean;
    Ok(RepresentationReport {
        word: w.clone(),
        class,
        n,
        direct_mean,
        representation_mean,
        difference,
        sequence_count,
        distinct_triangle_count,
        distinct_triangle_formula: a_int(k as u64, n as u128).to_u64().unwrap_or(u64::MAX),
        distinct_probability_matches,
    })
}
