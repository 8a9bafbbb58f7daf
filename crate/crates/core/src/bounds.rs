//! Explicit Chen-Stein error bounds for the class counts.
//!
//! Every bound is a sum of non-negative terms built from two combinatorial
//! quantities:
//!
//! * `p_{k,N} = 1 / ((6N-1)(6N-3)...(6N-2k+1))`, the chance that `k` given
//!   side pairs all occur in a uniform gluing of `N` triangles;
//! * `a_{k,N} = 3^k 2N(2N-1)...(2N-k+1)`, the number of ways to choose `k`
//!   distinct labelled triangles, in order, with a marked side on each.
//!
//! The sums are written once, generically over [`BoundScalar`], and evaluated
//! either in log space ([`LogNumber`], any size) or exactly ([`BigRational`],
//! small inputs only). The exact mode is the reference the log-space mode is
//! tested against.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{enumerate_classes_by_trace, WordClass, MAX_CENSUS_TRACE};

/// Largest `N` accepted by the exact evaluators.
pub const MAX_EXACT_N: u128 = 1000;
/// Largest word length accepted by the exact evaluators.
pub const MAX_EXACT_WORD_LENGTH: usize = 6;

/// A non-negative real stored as its natural logarithm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogNumber {
    log_magnitude: f64,
    is_zero: bool,
}

impl LogNumber {
    pub const ZERO: LogNumber = LogNumber {
        log_magnitude: f64::NEG_INFINITY,
        is_zero: true,
    };
    pub const ONE: LogNumber = LogNumber {
        log_magnitude: 0.0,
        is_zero: false,
    };

    pub fn from_ln(ln: f64) -> Self {
        if ln == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogNumber {
                log_magnitude: ln,
                is_zero: false,
            }
        }
    }

    /// Panics on negative or NaN input; bound terms are never negative.
    pub fn from_f64(x: f64) -> Self {
        assert!(x >= 0.0, "LogNumber holds non-negative values, got {x}");
        if x == 0.0 {
            Self::ZERO
        } else {
            Self::from_ln(x.ln())
        }
    }

    pub fn from_u128(x: u128) -> Self {
        if x == 0 {
            Self::ZERO
        } else {
            Self::from_ln((x as f64).ln())
        }
    }

    /// Panics on a negative rational.
    pub fn from_rational(x: &BigRational) -> Self {
        assert!(*x >= <BigRational as Zero>::zero(), "LogNumber holds non-negative values");
        if x.is_zero() {
            return Self::ZERO;
        }
        let n = x.numer().magnitude();
        let d = x.denom().magnitude();
        Self::from_ln(ln_biguint(n) - ln_biguint(d))
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    pub fn ln(&self) -> f64 {
        self.log_magnitude
    }

    pub fn log10(&self) -> f64 {
        self.log_magnitude / std::f64::consts::LN_10
    }

    /// Linear value; `inf` once it leaves the f64 range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero {
            0.0
        } else {
            self.log_magnitude.exp()
        }
    }

    /// `min(1, x)`, the useful value of a total-variation bound.
    pub fn clamped_to_one(&self) -> f64 {
        self.to_f64().min(1.0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero || other.is_zero {
            Self::ZERO
        } else {
            Self::from_ln(self.log_magnitude + other.log_magnitude)
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero, "LogNumber division by zero");
        if self.is_zero {
            Self::ZERO
        } else {
            Self::from_ln(self.log_magnitude - other.log_magnitude)
        }
    }

    pub fn powu(&self, e: u32) -> Self {
        if e == 0 {
            Self::ONE
        } else if self.is_zero {
            Self::ZERO
        } else {
            Self::from_ln(self.log_magnitude * e as f64)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::sum([*self, *other])
    }

    /// Log-sum-exp with Neumaier-compensated accumulation of the scaled terms.
    pub fn sum<I: IntoIterator<Item = LogNumber>>(terms: I) -> Self {
        let terms: Vec<LogNumber> = terms.into_iter().filter(|t| !t.is_zero).collect();
        let Some(max) = terms.iter().map(|t| t.log_magnitude).reduce(f64::max) else {
            return Self::ZERO;
        };
        let mut sum = 0.0f64;
        let mut carry = 0.0f64;
        for t in &terms {
            let x = (t.log_magnitude - max).exp();
            let s = sum + x;
            if sum.abs() >= x.abs() {
                carry += (sum - s) + x;
            } else {
                carry += (x - s) + sum;
            }
            sum = s;
        }
        Self::from_ln(max + (sum + carry).ln())
    }
}

impl PartialOrd for LogNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.is_zero, other.is_zero) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => self.log_magnitude.partial_cmp(&other.log_magnitude),
        }
    }
}

impl fmt::Display for LogNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            write!(f, "0")
        } else if self.log10().abs() < 15.0 {
            write!(f, "{:.6e}", self.to_f64())
        } else {
            write!(f, "10^{:.6}", self.log10())
        }
    }
}

impl Serialize for LogNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LogNumber", 3)?;
        st.serialize_field("log10", &(!self.is_zero).then(|| self.log10()))?;
        st.serialize_field("is_zero", &self.is_zero)?;
        st.serialize_field("clamped", &self.clamped_to_one())?;
        st.end()
    }
}

fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().map_or(f64::INFINITY, f64::ln)
    } else {
        let shift = bits - 64;
        let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Arithmetic the bound sums need, shared by the log-space and exact modes.
pub trait BoundScalar: Clone {
    fn zero() -> Self;
    fn from_u128(x: u128) -> Self;
    fn from_biguint(x: &BigUint) -> Self;
    fn ratio(num: u128, den: u128) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn powu(&self, e: u32) -> Self;
    fn recip(&self) -> Self;
    fn sum(terms: Vec<Self>) -> Self;
}

impl BoundScalar for LogNumber {
    fn zero() -> Self {
        LogNumber::ZERO
    }
    fn from_u128(x: u128) -> Self {
        LogNumber::from_u128(x)
    }
    fn from_biguint(x: &BigUint) -> Self {
        if x.is_zero() {
            LogNumber::ZERO
        } else {
            LogNumber::from_ln(ln_biguint(x))
        }
    }
    fn ratio(num: u128, den: u128) -> Self {
        LogNumber::from_u128(num).div(&LogNumber::from_u128(den))
    }
    fn add(&self, other: &Self) -> Self {
        LogNumber::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LogNumber::mul(self, other)
    }
    fn powu(&self, e: u32) -> Self {
        LogNumber::powu(self, e)
    }
    fn recip(&self) -> Self {
        LogNumber::ONE.div(self)
    }
    fn sum(terms: Vec<Self>) -> Self {
        LogNumber::sum(terms)
    }
}

impl BoundScalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_u128(x: u128) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn from_biguint(x: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(x.clone()))
    }
    fn ratio(num: u128, den: u128) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn powu(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }
    fn recip(&self) -> Self {
        num_traits::Inv::inv(self.clone())
    }
    fn sum(terms: Vec<Self>) -> Self {
        terms.into_iter().fold(Zero::zero(), |a, b| a + b)
    }
}

fn check_p(k: u64, n: u128) -> Result<()> {
    if n == 0 || k as u128 > 3 * n {
        return Err(Error::out_of_range("k for p_{k,N}", k, format!("0..=3N = 0..={}", 3 * n)));
    }
    Ok(())
}

fn check_a(k: u64, n: u128) -> Result<()> {
    if n == 0 || k as u128 > 2 * n {
        return Err(Error::out_of_range("k for a_{k,N}", k, format!("0..=2N = 0..={}", 2 * n)));
    }
    Ok(())
}

pub fn p_k_n(k: u64, n: u128) -> Result<LogNumber> {
    check_p(k, n)?;
    // direct log sum: k may reach 3N on the inequality grids
    let ln: f64 = (1..=k as u128).map(|i| ((6 * n - 2 * i + 1) as f64).ln()).sum();
    Ok(LogNumber::from_ln(-ln))
}

pub fn p_k_n_exact(k: u64, n: u128) -> Result<BigRational> {
    check_p(k, n)?;
    let mut d = BigUint::one();
    for i in 1..=k as u128 {
        d *= 6 * n - 2 * i + 1;
    }
    Ok(BigRational::new(BigInt::one(), BigInt::from(d)))
}

pub fn a_k_n(k: u64, n: u128) -> Result<LogNumber> {
    check_a(k, n)?;
    let ln: f64 = (0..k as u128).map(|i| ((2 * n - i) as f64).ln()).sum::<f64>() + k as f64 * 3f64.ln();
    Ok(LogNumber::from_ln(ln))
}

pub fn a_k_n_exact(k: u64, n: u128) -> Result<BigRational> {
    check_a(k, n)?;
    Ok(BigRational::from_integer(a_int(k, n)))
}

/// `a_{k,N}` as an integer.
pub(crate) fn a_int(k: u64, n: u128) -> BigInt {
    if k as u128 > 2 * n {
        // a falling factor reaches zero
        return BigInt::zero();
    }
    let mut acc = BigUint::from(3u32).pow(k as u32);
    for i in 0..k as u128 {
        acc *= 2 * n - i;
    }
    BigInt::from(acc)
}

/// The four Stein error terms for one word or one class.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SigmaTerms<T> {
    pub sigma1: T,
    pub sigma2: T,
    pub sigma3: T,
    pub sigma4: T,
}

impl<T: BoundScalar> SigmaTerms<T> {
    pub fn total(&self) -> T {
        T::sum(vec![
            self.sigma1.clone(),
            self.sigma2.clone(),
            self.sigma3.clone(),
            self.sigma4.clone(),
        ])
    }

    fn as_array(&self) -> [&T; 4] {
        [&self.sigma1, &self.sigma2, &self.sigma3, &self.sigma4]
    }
}

/// Bounds for one class: the per-word sums and their class-level scalings
/// (`s = |[w]| / (2|w|)` for the first term, `s^2` for the other three).
#[derive(Clone, Debug, Serialize)]
pub struct ClassSigmas<T> {
    pub class: WordClass,
    pub word: SigmaTerms<T>,
    pub class_scaled: SigmaTerms<T>,
}

fn big_pow(base: u64, e: u64) -> BigUint {
    BigUint::from(base).pow(e as u32)
}

fn pw<T: BoundScalar>(base: u64, e: u64) -> T {
    T::from_biguint(&big_pow(base, e))
}

/// `p_{j,N}` and `a_{j,N}` for `j <= 2 m_W`, and the class data grouped by
/// word length (every sum depends on a word only through its length).
struct Tables<T> {
    p: Vec<T>,
    a: Vec<T>,
    // length -> (number of classes, total class size)
    by_length: BTreeMap<u64, (u64, u64)>,
}

impl<T: BoundScalar> Tables<T> {
    fn new(classes: &[WordClass], max_len: u64, n: u128) -> Self {
        // m_W <= N keeps every index within p's range (3N) and a's range (2N)
        let top = 2 * max_len;
        let mut p = vec![T::from_u128(1)];
        let mut a = vec![T::from_u128(1)];
        for j in 1..=top as u128 {
            let next_p = p[j as usize - 1].mul(&T::from_u128(6 * n - 2 * j + 1).recip());
            let next_a = a[j as usize - 1].mul(&T::from_u128(3 * (2 * n - j + 1)));
            p.push(next_p);
            a.push(next_a);
        }
        let mut by_length = BTreeMap::new();
        for c in classes {
            let e = by_length.entry(c.word_length as u64).or_insert((0, 0));
            e.0 += 1;
            e.1 += c.class_size as u64;
        }
        Tables { p, a, by_length }
    }

    fn p(&self, j: u64) -> &T {
        &self.p[j as usize]
    }

    fn a(&self, j: u64) -> &T {
        &self.a[j as usize]
    }

    /// `sum_{i=1}^{l-2} 3^i (l-i)^l a_{l-i} p_{l-i}^e`
    fn overlap_tail(&self, l: u64, e: u32) -> Vec<T> {
        (1..l.saturating_sub(1))
            .map(|i| {
                let coeff = T::from_biguint(&(big_pow(3, i) * big_pow(l - i, l)));
                coeff.mul(self.a(l - i)).mul(&self.p(l - i).powu(e))
            })
            .collect()
    }

    /// `a_l p_l^2 + sum_{i=1}^{l-2} 3^i (l-i)^l a_{l-i} p_{l-i}^2`, overlaps
    /// of a cycle with itself.
    fn sigma1(&self, l: u64) -> T {
        let mut terms = vec![self.a(l).mul(&self.p(l).powu(2))];
        terms.extend(self.overlap_tail(l, 2));
        T::sum(terms)
    }

    /// Pairs of cycles, of lengths `l` and `l2`, sharing side pairs. The
    /// integer coefficients are grouped by the index of `a` first.
    fn sigma2_pair(&self, l: u64, l2: u64) -> T {
        let mut groups: BTreeMap<u64, BigUint> = BTreeMap::new();
        for i in 1..=2 * l {
            let choose = binomial(BigUint::from(2 * l), BigUint::from(i));
            for j in 0..=l {
                for k in 0..=l2 {
                    let Some(idx) = (l + l2).checked_sub(i + j + k) else {
                        continue;
                    };
                    let coeff = &choose * big_pow(3, i + j + k) * big_pow(l - j, l) * big_pow(l2 - k, l2);
                    *groups.entry(idx).or_default() += coeff;
                }
            }
        }
        let terms = groups
            .iter()
            .map(|(&idx, c)| T::from_biguint(c).mul(self.a(idx)))
            .collect();
        T::sum(terms).mul(self.p(l)).mul(self.p(l2))
    }

    /// Pairs of cycles sharing vertices; `i` shared pairs force at least
    /// `i + 1` shared vertices, hence the extra `-1` in the index of `a`.
    fn sigma3_pair(&self, l: u64, l2: u64) -> T {
        let mut groups: BTreeMap<(u64, u64), BigUint> = BTreeMap::new();
        for i in 1..=l {
            let choose = binomial(BigUint::from(l), BigUint::from(i));
            for j in 0..=l {
                for k in 0..=l2 {
                    let Some(idx) = (l + l2).checked_sub(i + j + k + 1) else {
                        continue;
                    };
                    let coeff = &choose * big_pow(3, i + j + k) * big_pow(l - j, l) * big_pow(l2 - k, l2);
                    *groups.entry((i, idx)).or_default() += coeff;
                }
            }
        }
        let terms = groups
            .iter()
            .map(|(&(i, idx), c)| T::from_biguint(c).mul(self.a(idx)).mul(self.p(l + l2 - i)))
            .collect();
        T::sum(terms)
    }

    /// Weighted by the class sizes of the partner classes.
    fn sigma2(&self, l: u64) -> T {
        T::sum(
            self.by_length
                .iter()
                .map(|(&l2, &(_, size))| T::from_u128(size as u128).mul(&self.sigma2_pair(l, l2)))
                .collect(),
        )
    }

    fn sigma3(&self, l: u64) -> T {
        T::sum(
            self.by_length
                .iter()
                .map(|(&l2, &(_, size))| T::from_u128(size as u128).mul(&self.sigma3_pair(l, l2)))
                .collect(),
        )
    }

    /// Pairs of cycles with no label in common, controlled through
    /// `p_{k+l} - p_k p_l <= 2(k+l)^2 / (6N - 2(k+l) + 1) p_k p_l`.
    fn sigma4(&self, max_len: u64, n: u128) -> T {
        let mut inner = Vec::new();
        for (&l, &(count, _)) in &self.by_length {
            let mut terms = vec![self.a(l).mul(self.p(l))];
            terms.extend(self.overlap_tail(l, 1));
            inner.push(T::from_u128(count as u128).mul(&T::sum(terms)));
        }
        T::ratio(max_len as u128 * max_len as u128, n).mul(&T::sum(inner).powu(2))
    }
}

fn validate(classes: &[WordClass], n: u128) -> Result<u64> {
    let max_len = classes.iter().map(|c| c.word_length).max().unwrap_or(0);
    if n == 0 || max_len as u128 > n {
        return Err(Error::LengthExceedsN { max_len, n });
    }
    if let Some(c) = classes.iter().find(|c| c.word_length == 0) {
        return Err(Error::out_of_range("word length", c.word_length, ">= 1"));
    }
    Ok(max_len as u64)
}

fn sigma_generic<T: BoundScalar>(classes: &[WordClass], n: u128) -> Result<Vec<ClassSigmas<T>>> {
    let max_len = validate(classes, n)?;
    let tables = Tables::<T>::new(classes, max_len, n);
    let s4 = tables.sigma4(max_len, n);
    let per_length: BTreeMap<u64, SigmaTerms<T>> = tables
        .by_length
        .keys()
        .map(|&l| {
            let terms = SigmaTerms {
                sigma1: tables.sigma1(l),
                sigma2: tables.sigma2(l),
                sigma3: tables.sigma3(l),
                sigma4: s4.clone(),
            };
            (l, terms)
        })
        .collect();
    Ok(classes
        .iter()
        .map(|c| {
            let l = c.word_length as u64;
            let word = per_length[&l].clone();
            let s = T::ratio(c.class_size as u128, 2 * l as u128);
            let s2 = s.powu(2);
            let class_scaled = SigmaTerms {
                sigma1: word.sigma1.mul(&s),
                sigma2: word.sigma2.mul(&s2),
                sigma3: word.sigma3.mul(&s2),
                sigma4: word.sigma4.mul(&s2),
            };
            ClassSigmas {
                class: c.clone(),
                word,
                class_scaled,
            }
        })
        .collect())
}

/// Per-class Stein sums, in log space.
pub fn sigma_bounds(classes: &[WordClass], n: u128) -> Result<Vec<ClassSigmas<LogNumber>>> {
    sigma_generic(classes, n)
}

fn check_exact(classes: &[WordClass], n: u128) -> Result<()> {
    if n > MAX_EXACT_N {
        return Err(Error::out_of_range("N for exact bounds", n, format!("<= {MAX_EXACT_N}")));
    }
    if let Some(c) = classes.iter().find(|c| c.word_length > MAX_EXACT_WORD_LENGTH) {
        return Err(Error::out_of_range(
            "word length for exact bounds",
            c.word_length,
            format!("<= {MAX_EXACT_WORD_LENGTH}"),
        ));
    }
    Ok(())
}

/// Per-class Stein sums as exact rationals (`N <= 1000`, words of length at
/// most 6).
pub fn sigma_bounds_exact(classes: &[WordClass], n: u128) -> Result<Vec<ClassSigmas<BigRational>>> {
    check_exact(classes, n)?;
    sigma_generic(classes, n)
}

fn refined_generic<T: BoundScalar>(sigmas: &[ClassSigmas<T>]) -> T {
    let total = T::sum(sigmas.iter().map(|s| s.class_scaled.total()).collect());
    T::from_u128(3).mul(&total)
}

/// Three times the sum of all class-scaled Stein terms.
pub fn refined_mtv_bound(classes: &[WordClass], n: u128) -> Result<LogNumber> {
    Ok(refined_generic(&sigma_bounds(classes, n)?))
}

pub fn refined_mtv_bound_exact(classes: &[WordClass], n: u128) -> Result<BigRational> {
    Ok(refined_generic(&sigma_bounds_exact(classes, n)?))
}

fn check_main(count: usize, max_len: usize, n: u128) -> Result<()> {
    if n == 0 || max_len as u128 > n {
        return Err(Error::LengthExceedsN { max_len, n });
    }
    if count == 0 || max_len == 0 {
        return Err(Error::out_of_range("class count and word length", format!("({count}, {max_len})"), ">= 1"));
    }
    Ok(())
}

/// `18 |W|^3 (6 m)^(3m + 4) / N` for `|W| = count` classes of maximal length `m`.
pub fn main_bound_for(count: usize, max_len: usize, n: u128) -> Result<LogNumber> {
    check_main(count, max_len, n)?;
    let m = max_len as f64;
    let ln = 18f64.ln() + 3.0 * (count as f64).ln() + (3.0 * m + 4.0) * (6.0 * m).ln() - (n as f64).ln();
    Ok(LogNumber::from_ln(ln))
}

pub fn main_bound_exact(count: usize, max_len: usize, n: u128) -> Result<BigRational> {
    check_main(count, max_len, n)?;
    let num = BigUint::from(18u32)
        * BigUint::from(count).pow(3)
        * BigUint::from(6 * max_len).pow(3 * max_len as u32 + 4);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(n)))
}

pub fn main_bound(classes: &[WordClass], n: u128) -> Result<LogNumber> {
    let max_len = validate(classes, n)?;
    main_bound_for(classes.len(), max_len as usize, n)
}

/// The single-class variant, whose leading constant is 6 instead of 18.
pub fn univariate_main_bound(class: &WordClass, n: u128) -> Result<LogNumber> {
    validate(std::slice::from_ref(class), n)?;
    let m = class.word_length as f64;
    Ok(LogNumber::from_ln(6f64.ln() + (3.0 * m + 4.0) * (6.0 * m).ln() - (n as f64).ln()))
}

/// `min(1, 1/lambda)`.
pub fn univariate_bound_scale(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::NonPositiveMean(lambda));
    }
    Ok(1f64.min(1.0 / lambda))
}

/// Simplified per-word bounds in terms of `|W|`, `m_W` and `c_W` only.
pub fn closed_form_sigma_bounds<T: BoundScalar>(count: usize, max_len: usize, max_class_size: u64, n: u128) -> SigmaTerms<T> {
    let m = max_len as u64;
    let w = count as u128;
    let six_fifths_over_n = T::ratio(6, 5 * n);
    let sigma1 = six_fifths_over_n.mul(&T::from_u128(1).add(&pw(3 * m, m + 1)));
    let front = six_fifths_over_n.mul(&T::from_u128(w * max_class_size as u128));
    let sigma2 = front.mul(&pw(6 * m, 3 * m + 3));
    let sigma3 = front.mul(&pw(3 * m, 3 * m + 3));
    let base = T::from_u128(w * m as u128).add(&pw(3 * m, m));
    let sigma4 = T::ratio(36, 25 * n).mul(&base.powu(2));
    SigmaTerms {
        sigma1,
        sigma2,
        sigma3,
        sigma4,
    }
}

impl SigmaTerms<BigRational> {
    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.as_array().iter().zip(other.as_array()).all(|(a, b)| *a <= b)
    }
}

/// Everything known about the bounds for one class list and one `N`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub classes: Vec<WordClass>,
    pub n: u128,
    pub max_word_length: usize,
    pub max_class_size: u64,
    pub per_class: Vec<ClassSigmas<LogNumber>>,
    pub refined_mtv_bound: LogNumber,
    pub main_bound: LogNumber,
}

impl BoundReport {
    /// Whether the refined bound sits below the headline bound, as it must.
    pub fn chain_holds(&self) -> bool {
        self.refined_mtv_bound <= self.main_bound
    }
}

pub fn bound_report(classes: &[WordClass], n: u128) -> Result<BoundReport> {
    let per_class = sigma_bounds(classes, n)?;
    let max_word_length = classes.iter().map(|c| c.word_length).max().unwrap_or(0);
    Ok(BoundReport {
        classes: classes.to_vec(),
        n,
        max_word_length,
        max_class_size: classes.iter().map(|c| c.class_size as u64).max().unwrap_or(0),
        refined_mtv_bound: refined_generic(&per_class),
        main_bound: if classes.is_empty() {
            LogNumber::ZERO
        } else {
            main_bound(classes, n)?
        },
        per_class,
    })
}

/// Largest trace cutoff `k >= 3` whose full census `W(k)` has headline bound
/// at most `tol` for this `N`, or `None` when even `k = 3` fails.
///
/// The census is searched up to trace [`MAX_CENSUS_TRACE`]; an answer equal
/// to that cap means "at least the cap".
pub fn admissible_trace_for_n(n: u128, tol: f64) -> Result<Option<u64>> {
    if n < 2 {
        return Err(Error::out_of_range("N", n, ">= 2"));
    }
    if !(tol > 0.0 && tol <= 1.0) {
        return Err(Error::out_of_range("tol", tol, "(0, 1]"));
    }
    let mut best = None;
    for k in 3..=MAX_CENSUS_TRACE {
        let census = enumerate_classes_by_trace(k)?;
        let m = census.max_word_length();
        if m as u128 > n {
            break;
        }
        if main_bound_for(census.count(), m, n)?.to_f64() <= tol {
            best = Some(k);
        } else {
            break;
        }
    }
    Ok(best)
}
