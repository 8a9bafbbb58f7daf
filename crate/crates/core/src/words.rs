//! Words in the letters `L` and `R`, their matrices and equivalence classes.
//!
//! A word is read as a product of the matrices `L = [[1,1],[0,1]]` and
//! `R = [[1,0],[1,1]]`. Two words are equivalent when one is a cyclic rotation
//! of the other, or of the other read backwards with `L` and `R` swapped.
//! Equivalent words have the same trace, so the trace (and the hyperbolic
//! length `2 arccosh(tr/2)`) is a class invariant.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest word length accepted by [`enumerate_classes_by_length`].
pub const MAX_ENUMERATION_LENGTH: usize = 30;
/// Largest trace accepted by [`enumerate_classes_by_trace`].
pub const MAX_CENSUS_TRACE: u64 = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

/// A nonempty word over `{L, R}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord(String::new()));
        }
        Ok(Word(letters))
    }

    /// Word of length `len` whose `i`-th letter is `R` iff bit `i` of `bits` is set.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!((1..=64).contains(&len));
        Word(
            (0..len)
                .map(|i| if bits >> i & 1 == 1 { Letter::R } else { Letter::L })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Rotate left by `k` letters.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        v.rotate_left(k % self.len());
        Word(v)
    }

    /// The word read backwards with `L` and `R` interchanged; on matrices this
    /// is the transpose.
    pub fn reverse_swap(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    /// Letterwise `L <-> R` swap (no reversal).
    pub fn mirror(&self) -> Word {
        Word(self.0.iter().map(|l| l.swap()).collect())
    }

    pub fn pow(&self, n: usize) -> Word {
        assert!(n >= 1);
        Word(self.0.repeat(n))
    }

    /// True when only one of the two letters occurs, i.e. the word is `L^n` or
    /// `R^n`. These are exactly the parabolic words (trace 2).
    pub fn uses_one_letter(&self) -> bool {
        self.0.iter().all(|&l| l == self.0[0])
    }

    /// All distinct words equivalent to `self`.
    pub fn orbit(&self) -> BTreeSet<Word> {
        let rs = self.reverse_swap();
        (0..self.len())
            .flat_map(|k| [self.rotate(k), rs.rotate(k)])
            .collect()
    }

    /// Smallest `p >= 1` such that rotating by `p` gives the word back.
    pub fn rotation_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&p| n.is_multiple_of(p) && (p..n).all(|i| self.0[i] == self.0[i - p]))
            .unwrap_or(n)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Letter::L),
                'R' | 'r' => Ok(Letter::R),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters).map_err(|_| Error::InvalidWord(s.to_string()))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A 2x2 matrix with non-negative integer entries `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordMatrix {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub d: BigUint,
}

impl WordMatrix {
    pub fn identity() -> Self {
        WordMatrix {
            a: BigUint::one(),
            b: BigUint::zero(),
            c: BigUint::zero(),
            d: BigUint::one(),
        }
    }

    /// Right-multiply in place by the matrix of `letter`.
    pub fn push(&mut self, letter: Letter) {
        match letter {
            // [[a,b],[c,d]] * [[1,1],[0,1]] = [[a, a+b], [c, c+d]]
            Letter::L => {
                self.b += &self.a;
                self.d += &self.c;
            }
            // [[a,b],[c,d]] * [[1,0],[1,1]] = [[a+b, b], [c+d, d]]
            Letter::R => {
                self.a += &self.b;
                self.c += &self.d;
            }
        }
    }

    pub fn trace(&self) -> BigUint {
        &self.a + &self.d
    }

    pub fn is_unimodular(&self) -> bool {
        &self.a * &self.d == &self.b * &self.c + BigUint::one()
    }

    pub fn transpose(&self) -> Self {
        WordMatrix {
            a: self.a.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.d.clone(),
        }
    }
}

pub fn matrix_of_word(w: &Word) -> WordMatrix {
    let mut m = WordMatrix::identity();
    for &l in w.letters() {
        m.push(l);
    }
    m
}

pub fn trace_of_word(w: &Word) -> BigUint {
    matrix_of_word(w).trace()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HyperbolicLength {
    pub length: f64,
    /// Set when the trace is 2: the word is a cusp loop, not a geodesic.
    pub parabolic: bool,
}

/// `2 arccosh(trace / 2)`.
pub fn length_from_trace(trace: &BigUint) -> HyperbolicLength {
    let two = BigUint::from(2u32);
    if *trace <= two {
        return HyperbolicLength {
            length: 0.0,
            parabolic: true,
        };
    }
    let length = if trace.bits() <= 50 {
        2.0 * (trace.to_f64().unwrap() / 2.0).acosh()
    } else {
        // arccosh(t/2) = ln(t) + O(t^-2); the correction is below f64 resolution here.
        2.0 * ln_big(trace)
    };
    HyperbolicLength {
        length,
        parabolic: false,
    }
}

fn ln_big(x: &BigUint) -> f64 {
    let shift = x.bits().saturating_sub(60);
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn hyperbolic_length(w: &Word) -> HyperbolicLength {
    length_from_trace(&trace_of_word(w))
}

/// An equivalence class `[w]` together with its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordClass {
    /// Lexicographically smallest member (`L < R`).
    pub canonical: Word,
    /// Number of distinct words in the class.
    pub class_size: usize,
    pub word_length: usize,
    pub trace: BigUint,
    /// Limiting Poisson mean `class_size / (2 word_length)`.
    pub lambda: Ratio<u64>,
}

impl WordClass {
    pub fn is_parabolic(&self) -> bool {
        self.canonical.uses_one_letter()
    }

    pub fn hyperbolic_length(&self) -> HyperbolicLength {
        length_from_trace(&self.trace)
    }

    pub fn lambda_f64(&self) -> f64 {
        *self.lambda.numer() as f64 / *self.lambda.denom() as f64
    }

    /// The class of the letterwise mirror image.
    pub fn mirror(&self) -> WordClass {
        canonicalize(&self.canonical.mirror())
    }
}

impl Ord for WordClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word_length, &self.canonical).cmp(&(other.word_length, &other.canonical))
    }
}

impl PartialOrd for WordClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical)
    }
}

/// Smallest rotation of `w` (its necklace representative).
pub fn min_rotation(w: &Word) -> Word {
    (0..w.len()).map(|k| w.rotate(k)).min().unwrap()
}

/// Lexicographic minimum of the orbit of `w`.
pub fn canonical_word(w: &Word) -> Word {
    min_rotation(w).min(min_rotation(&w.reverse_swap()))
}

pub fn canonicalize(w: &Word) -> WordClass {
    let necklace = min_rotation(w);
    let rs_necklace = min_rotation(&w.reverse_swap());
    let period = w.rotation_period();
    let class_size = if necklace == rs_necklace { period } else { 2 * period };
    let canonical = necklace.min(rs_necklace);
    let word_length = w.len();
    WordClass {
        trace: trace_of_word(&canonical),
        class_size,
        word_length,
        lambda: Ratio::new(class_size as u64, 2 * word_length as u64),
        canonical,
    }
}

/// Binary necklaces of length exactly `n` in lexicographic order
/// (Fredricksen-Kessler-Maiorana).
fn necklaces(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut a = vec![0u8; n + 1];
    visit(&a[1..]);
    loop {
        let mut i = n;
        while i > 0 && a[i] == 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        a[i] += 1;
        for j in i + 1..=n {
            a[j] = a[j - i];
        }
        if n.is_multiple_of(i) {
            visit(&a[1..]);
        }
    }
}

/// One class per equivalence class of words of length `1..=max_len`, sorted by
/// `(word_length, canonical)`. Parabolic classes are included.
pub fn enumerate_classes_by_length(max_len: usize) -> Result<Vec<WordClass>> {
    if !(1..=MAX_ENUMERATION_LENGTH).contains(&max_len) {
        return Err(Error::out_of_range("max word length", max_len, "1..=30"));
    }
    let mut out = Vec::new();
    for n in 1..=max_len {
        necklaces(n, |digits| {
            let w = Word(
                digits
                    .iter()
                    .map(|&d| if d == 0 { Letter::L } else { Letter::R })
                    .collect(),
            );
            // `w` is already its own smallest rotation.
            if w <= min_rotation(&w.reverse_swap()) {
                out.push(canonicalize(&w));
            }
        });
    }
    Ok(out)
}

/// The set `W(k)` of hyperbolic classes with trace at most `max_trace`.
#[derive(Clone, Debug)]
pub struct TraceCensus {
    pub max_trace: u64,
    pub classes: Vec<WordClass>,
}

impl TraceCensus {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn max_word_length(&self) -> usize {
        self.classes.iter().map(|c| c.word_length).max().unwrap_or(0)
    }
}

/// Enumerate `W(k)`: every class with `3 <= trace <= k`. Parabolic classes
/// (trace 2) are not geodesics and are left out.
///
/// Appending a letter never decreases the trace of a non-negative matrix, so
/// the search walks prefixes and stops as soon as the trace exceeds `k`. Mixed
/// words of length `n` have trace at least `n + 1`, so lengths stay below `k`.
pub fn enumerate_classes_by_trace(max_trace: u64) -> Result<TraceCensus> {
    if !(3..=MAX_CENSUS_TRACE).contains(&max_trace) {
        return Err(Error::out_of_range("max trace", max_trace, "3..=25"));
    }
    let max_len = (max_trace - 1) as usize;
    let mut classes = BTreeSet::new();
    let mut stack = vec![(Vec::<Letter>::new(), [1u64, 0, 0, 1])];
    while let Some((prefix, [a, b, c, d])) = stack.pop() {
        if !prefix.is_empty() {
            let w = Word(prefix.clone());
            let tr = a + d;
            if tr >= 3 && canonical_word(&w) == w {
                classes.insert(canonicalize(&w));
            }
        }
        if prefix.len() == max_len {
            continue;
        }
        for (letter, m) in [(Letter::L, [a, a + b, c, c + d]), (Letter::R, [a + b, b, c + d, d])] {
            if m[0] + m[3] <= max_trace {
                let mut next = prefix.clone();
                next.push(letter);
                stack.push((next, m));
            }
        }
    }
    Ok(TraceCensus {
        max_trace,
        classes: classes.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn m(a: u32, b: u32, c: u32, d: u32) -> WordMatrix {
        WordMatrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    // Plain 2x2 product, kept separate from `WordMatrix::push`.
    fn naive_product(word: &str) -> [u64; 4] {
        word.chars().fold([1, 0, 0, 1], |[a, b, c, d], ch| {
            let [e, f, g, h] = if ch == 'L' { [1, 1, 0, 1] } else { [1, 0, 1, 1] };
            [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h]
        })
    }

    #[test]
    fn matrices_of_short_words() {
        assert_eq!(matrix_of_word(&w("L")), m(1, 1, 0, 1));
        assert_eq!(matrix_of_word(&w("R")), m(1, 0, 1, 1));
        assert_eq!(matrix_of_word(&w("LR")), m(2, 1, 1, 1));
        assert_eq!(matrix_of_word(&w("LLR")), m(3, 2, 1, 1));
        assert_eq!(naive_product("LLR"), [3, 2, 1, 1]);
    }

    #[test]
    fn traces_of_powers_and_mixed_blocks() {
        for n in 1..40 {
            assert_eq!(trace_of_word(&w(&"L".repeat(n))), BigUint::from(2u32));
        }
        assert_eq!(trace_of_word(&w("LR")), BigUint::from(3u32));
        for a in 1..=20usize {
            for b in 1..=20usize {
                let s = "L".repeat(a) + &"R".repeat(b);
                let [ma, mb, mc, md] = naive_product(&s);
                assert_eq!([ma, mb, mc, md], [1 + (a * b) as u64, a as u64, b as u64, 1]);
                assert_eq!(trace_of_word(&w(&s)), BigUint::from(2 + a * b));
            }
        }
    }

    #[test]
    fn lengths() {
        let l = hyperbolic_length(&w("L"));
        assert!(l.parabolic);
        assert_eq!(l.length, 0.0);
        // 2 arccosh(3/2) = 4 ln(golden ratio); 2 arccosh(2) = 2 ln(2 + sqrt 3).
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let lr = hyperbolic_length(&w("LR"));
        assert!(!lr.parabolic);
        assert!((lr.length - 4.0 * golden.ln()).abs() < 1e-14);
        assert!((lr.length - 1.924_847_3).abs() < 1e-7);
        let llr = hyperbolic_length(&w("LLR"));
        assert!((llr.length - 2.0 * (2.0 + 3f64.sqrt()).ln()).abs() < 1e-14);
        assert!((llr.length - 2.633_915_8).abs() < 1e-7);
    }

    #[test]
    fn long_words_use_the_log_branch() {
        let long = w(&"LR".repeat(60));
        let tr = trace_of_word(&long);
        assert!(tr.bits() > 64);
        let got = hyperbolic_length(&long).length;
        // tr((LR)^n) grows like phi^(2n), so the length is 60 * 4 ln(phi).
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((got - 240.0 * golden.ln()).abs() < 1e-9);
    }

    #[test]
    fn canonical_classes() {
        let c = canonicalize(&w("RL"));
        assert_eq!(c.canonical, w("LR"));
        assert_eq!(c.class_size, 2);
        assert_eq!(c.lambda, Ratio::new(1, 2));

        let c = canonicalize(&w("LLR"));
        assert_eq!(c.canonical, w("LLR"));
        assert_eq!(c.class_size, 6);
        assert_eq!(c.lambda, Ratio::new(1, 1));
        assert_eq!(
            w("LLR").orbit(),
            ["LLR", "LRL", "RLL", "LRR", "RRL", "RLR"].iter().map(|s| w(s)).collect()
        );

        let c = canonicalize(&w("LLRR"));
        assert_eq!(c.class_size, 4);
        assert_eq!(c.lambda, Ratio::new(1, 2));

        assert_eq!(canonicalize(&w("R")).canonical, w("L"));
        assert_eq!(canonicalize(&w("R")).class_size, 2);
    }

    #[test]
    fn parse_rejects_bad_letters() {
        assert!("LXR".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
        assert_eq!("lr".parse::<Word>().unwrap(), w("LR"));
    }

    #[test]
    fn small_length_enumerations() {
        let names = |v: &[WordClass]| v.iter().map(|c| c.canonical.to_string()).collect::<Vec<_>>();
        let one = enumerate_classes_by_length(1).unwrap();
        assert_eq!(names(&one), ["L"]);
        assert_eq!(one[0].class_size, 2);
        assert!(one[0].is_parabolic());
        assert_eq!(names(&enumerate_classes_by_length(2).unwrap()), ["L", "LL", "LR"]);
        let three: Vec<_> = enumerate_classes_by_length(3)
            .unwrap()
            .into_iter()
            .filter(|c| c.word_length == 3)
            .collect();
        assert_eq!(names(&three), ["LLL", "LLR"]);
        assert!(enumerate_classes_by_length(0).is_err());
        assert!(enumerate_classes_by_length(31).is_err());
    }

    /// Brute force: canonicalize every word and collect distinct classes.
    fn brute_force_classes(max_len: usize) -> BTreeSet<WordClass> {
        (1..=max_len)
            .flat_map(|n| (0..1u64 << n).map(move |bits| canonicalize(&Word::from_bits(bits, n))))
            .collect()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=12 {
            let fast: Vec<_> = enumerate_classes_by_length(n).unwrap();
            let slow: Vec<_> = brute_force_classes(n).into_iter().collect();
            assert_eq!(fast, slow, "max_len {n}");
            // class sizes agree with explicit orbits
            for c in &fast {
                assert_eq!(c.class_size, c.canonical.orbit().len());
            }
        }
    }

    #[test]
    fn trace_census_small_cases() {
        let names = |c: &TraceCensus| c.classes.iter().map(|c| c.canonical.to_string()).collect::<Vec<_>>();
        let w3 = enumerate_classes_by_trace(3).unwrap();
        assert_eq!(names(&w3), ["LR"]);
        assert_eq!(w3.count(), 1);
        let w4 = enumerate_classes_by_trace(4).unwrap();
        assert_eq!(names(&w4), ["LR", "LLR"]);
        assert_eq!(trace_of_word(&w("LLRR")), BigUint::from(6u32));
        let w12 = enumerate_classes_by_trace(12).unwrap();
        assert_eq!(w12.max_word_length(), 11);
        let longest: Vec<_> = w12.classes.iter().filter(|c| c.word_length == 11).collect();
        assert!(longest.iter().any(|c| c.canonical == w(&("L".repeat(10) + "R"))));
        assert!(enumerate_classes_by_trace(2).is_err());
        assert!(enumerate_classes_by_trace(26).is_err());
    }

    #[test]
    fn trace_census_matches_length_filter() {
        for k in 3..=14u64 {
            let fast = enumerate_classes_by_trace(k).unwrap().classes;
            let slow: Vec<_> = enumerate_classes_by_length(k as usize - 1)
                .unwrap()
                .into_iter()
                .filter(|c| c.trace >= BigUint::from(3u32) && c.trace <= BigUint::from(k))
                .collect();
            assert_eq!(fast, slow, "k = {k}");
        }
    }

    #[test]
    fn census_grows_and_longest_word_is_k_minus_one() {
        let mut prev = 0;
        for k in 3..=20 {
            let census = enumerate_classes_by_trace(k).unwrap();
            assert!(census.count() >= prev);
            prev = census.count();
            assert_eq!(census.max_word_length(), k as usize - 1);
            for c in &census.classes {
                assert!(c.class_size <= 2 * c.word_length);
            }
        }
    }

    #[test]
    fn trace_is_a_class_invariant() {
        for n in 1..=12 {
            for bits in 0..1u64 << n {
                let word = Word::from_bits(bits, n);
                let tr = trace_of_word(&word);
                for other in word.orbit() {
                    assert_eq!(trace_of_word(&other), tr);
                }
                assert_eq!(matrix_of_word(&word.reverse_swap()), matrix_of_word(&word).transpose());
            }
        }
    }

    #[test]
    fn matrices_are_unimodular_and_mixed_words_hyperbolic() {
        let two = BigUint::from(2u32);
        for n in 1..=14 {
            for bits in 0..1u64 << n {
                let word = Word::from_bits(bits, n);
                let mat = matrix_of_word(&word);
                assert!(mat.is_unimodular());
                let tr = mat.trace();
                if word.uses_one_letter() {
                    assert_eq!(tr, two);
                } else {
                    assert!(tr >= BigUint::from(3u32));
                }
            }
        }
    }

    #[test]
    fn mirror_is_a_class_bijection() {
        let classes = enumerate_classes_by_length(10).unwrap();
        let set: BTreeSet<_> = classes.iter().cloned().collect();
        let mut images = BTreeSet::new();
        for c in &classes {
            let m = c.mirror();
            assert!(set.contains(&m));
            assert_eq!(
                (m.class_size, m.word_length, &m.trace, m.lambda),
                (c.class_size, c.word_length, &c.trace, c.lambda)
            );
            images.insert(m);
        }
        assert_eq!(images, set);
    }

    #[test]
    fn class_size_at_most_twice_length() {
        for c in enumerate_classes_by_length(14).unwrap() {
            assert!(c.class_size <= 2 * c.word_length);
            assert_eq!(c.lambda, Ratio::new(c.class_size as u64, 2 * c.word_length as u64));
            assert_eq!(canonicalize(&c.canonical), c);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word() -> impl Strategy<Value = Word> {
            prop::collection::vec(prop::bool::ANY, 1..40)
                .prop_map(|v| Word(v.into_iter().map(|b| if b { Letter::R } else { Letter::L }).collect()))
        }

        proptest! {
            #[test]
            fn canonicalization_is_idempotent(x in word(), k in 0usize..40) {
                let c = canonicalize(&x);
                prop_assert_eq!(canonicalize(&c.canonical), c.clone());
                prop_assert_eq!(canonicalize(&x.rotate(k)), c.clone());
                prop_assert_eq!(canonicalize(&x.reverse_swap()), c.clone());
                prop_assert!(c.canonical <= x);
            }
        }
    }
}
