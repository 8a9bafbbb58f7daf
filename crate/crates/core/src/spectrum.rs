//! Closed traversal cycles of a gluing and the counts `Z_[w]`.
//!
//! A traversal cycle is a cyclic sequence of `(entered side, turn)` pairs with
//! `s_{j+1} = step(s_j, t_j)`. Traversing the same closed curve from another
//! starting triangle rotates the sequence; traversing it backwards reverses
//! it, swaps entry and exit sides and flips every turn. `Z_[w]` counts the
//! cycles up to these moves whose turn word lies in `[w]`.
//!
//! The search runs depth-first from every `(start side, first turn)` and keeps
//! only sequences whose first pair is no larger than any pair a rotation or
//! reversal could start with, then checks full canonicity when the cycle
//! closes. Each cycle class is therefore produced exactly once.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gluing::{next_index, topology, Gluing, SideLabel, TopologyReport, Turn};
use crate::words::{canonical_word, canonicalize, Letter, Word, WordClass};

/// Largest combinatorial length accepted by the counters.
pub const MAX_CYCLE_LENGTH: usize = 16;

/// Which cyclic neighbour of a side a left turn exits through.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TurnConvention {
    /// Left exits through the cyclic label successor.
    #[default]
    LeftIsSuccessor,
    /// Left exits through the cyclic label predecessor.
    LeftIsPredecessor,
}

impl TurnConvention {
    #[inline]
    fn geometric(self, recorded: Turn) -> Turn {
        match self {
            TurnConvention::LeftIsSuccessor => recorded,
            TurnConvention::LeftIsPredecessor => recorded.flip(),
        }
    }
}

/// One closed traversal, as found in a gluing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraversalCycle {
    pub entered_sides: Vec<SideLabel>,
    pub turns: Vec<Turn>,
}

impl TraversalCycle {
    pub fn word(&self) -> Word {
        Word::new(self.turns.iter().map(|t| t.letter()).collect()).expect("cycles are nonempty")
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.turns.len()
    }

    /// Whether consecutive entries are linked by `step` in `g`, cyclically.
    pub fn closes_in(&self, g: &Gluing) -> bool {
        let k = self.len();
        k >= 1
            && self.entered_sides.len() == k
            && (0..k).all(|j| g.step(self.entered_sides[j], self.turns[j]) == self.entered_sides[(j + 1) % k])
    }
}

type Pair = (u32, Turn);

/// True when `seq` is the lexicographic minimum over its rotations and the
/// rotations of its reversal. `exits[j]` is the exit side of pair `j`.
fn is_canonical(seq: &[Pair], exits: &[u32]) -> bool {
    let k = seq.len();
    let rev: Vec<Pair> = (0..k)
        .rev()
        .map(|j| (exits[j], seq[j].1.flip()))
        .collect();
    for r in 1..k {
        if rotated_less(seq, r, seq) {
            return false;
        }
    }
    for r in 0..k {
        if rotated_less(&rev, r, seq) {
            return false;
        }
    }
    true
}

/// Is `a` rotated left by `r` strictly smaller than `b`?
fn rotated_less(a: &[Pair], r: usize, b: &[Pair]) -> bool {
    let k = a.len();
    for i in 0..k {
        let x = a[(i + r) % k];
        match x.cmp(&b[i]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

/// Depth-first enumeration of canonical closed cycles of length `<= max_len`.
/// `follow` decides whether a turn may extend the current word (given the
/// state returned for the prefix); `on_cycle` receives each canonical cycle.
fn walk_cycles<S: Copy>(
    g: &Gluing,
    max_len: usize,
    convention: TurnConvention,
    root: S,
    mut follow: impl FnMut(S, Turn) -> Option<S>,
    mut on_cycle: impl FnMut(S, &[Pair], &[u32]),
) {
    let sides = g.side_count();
    let mut seq: Vec<Pair> = Vec::with_capacity(max_len);
    let mut exits: Vec<u32> = Vec::with_capacity(max_len);
    // (state after the pair at this depth, next turn to try)
    let mut stack: Vec<(S, u8)> = Vec::with_capacity(max_len + 1);
    for start in 0..sides {
        let first_entry = start as u32;
        stack.clear();
        seq.clear();
        exits.clear();
        stack.push((root, 0));
        let mut current = start;
        while let Some(&mut (state, ref mut next_turn)) = stack.last_mut() {
            if *next_turn == 2 || seq.len() == max_len {
                stack.pop();
                // back to the side the popped pair was entered through
                if let Some((entered, _)) = seq.pop() {
                    exits.pop();
                    current = entered as usize;
                }
                continue;
            }
            let turn = if *next_turn == 0 { Turn::Left } else { Turn::Right };
            *next_turn += 1;
            let Some(child) = follow(state, turn) else { continue };
            let exit = next_index(current, convention.geometric(turn)) as u32;
            let pair = (current as u32, turn);
            // Pruning: the first pair must not exceed any potential starting pair.
            let rev_start = (exit, turn.flip());
            let first = if seq.is_empty() { pair } else { seq[0] };
            if pair < first || rev_start < first {
                continue;
            }
            seq.push(pair);
            exits.push(exit);
            let entered_next = g.partner_index(exit as usize);
            if entered_next as u32 == first_entry && is_canonical(&seq, &exits) {
                on_cycle(child, &seq, &exits);
            }
            current = entered_next;
            stack.push((child, 0));
        }
    }
}

fn check_length(m: usize) -> Result<()> {
    if !(1..=MAX_CYCLE_LENGTH).contains(&m) {
        return Err(Error::out_of_range("max word length", m, "1..=16"));
    }
    Ok(())
}

/// Every canonical closed traversal of length `<= max_len`, one per class.
pub fn enumerate_cycles(g: &Gluing, max_len: usize) -> Result<Vec<TraversalCycle>> {
    check_length(max_len)?;
    let mut out = Vec::new();
    walk_cycles(
        g,
        max_len,
        TurnConvention::LeftIsSuccessor,
        (),
        |_, _| Some(()),
        |_, seq, _| {
            out.push(TraversalCycle {
                entered_sides: seq.iter().map(|&(s, _)| SideLabel::from_index(s as usize)).collect(),
                turns: seq.iter().map(|&(_, t)| t).collect(),
            })
        },
    );
    Ok(out)
}

/// Counts keyed by canonical word, for every class with at least one cycle.
pub fn count_by_canonical_word(g: &Gluing, max_len: usize, convention: TurnConvention) -> Result<HashMap<Word, u64>> {
    check_length(max_len)?;
    let mut counts: HashMap<Word, u64> = HashMap::new();
    walk_cycles(
        g,
        max_len,
        convention,
        (),
        |_, _| Some(()),
        |_, seq, _| {
            let word = Word::new(seq.iter().map(|&(_, t)| t.letter()).collect()).unwrap();
            *counts.entry(canonical_word(&word)).or_default() += 1;
        },
    );
    Ok(counts)
}

/// `Z_[w](g)` for every class of length `<= max_len` together with topology
/// data for the surface.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub max_word_length: usize,
    /// Classes with a positive count; absent classes have count 0.
    pub counts: BTreeMap<WordClass, u64>,
    /// Shortest hyperbolic length among counted non-parabolic classes.
    pub shortest_geodesic_length: Option<f64>,
    pub topology: TopologyReport,
}

impl SpectrumReport {
    pub fn count(&self, class: &WordClass) -> u64 {
        self.counts.get(class).copied().unwrap_or(0)
    }

    pub fn count_word(&self, w: &Word) -> u64 {
        self.count(&canonicalize(w))
    }
}

impl Serialize for WordClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.canonical)
    }
}

pub fn count_cycles(g: &Gluing, max_len: usize) -> Result<SpectrumReport> {
    count_cycles_with_convention(g, max_len, TurnConvention::LeftIsSuccessor)
}

pub fn count_cycles_with_convention(g: &Gluing, max_len: usize, convention: TurnConvention) -> Result<SpectrumReport> {
    let raw = count_by_canonical_word(g, max_len, convention)?;
    let counts: BTreeMap<WordClass, u64> = raw.into_iter().map(|(w, c)| (canonicalize(&w), c)).collect();
    let shortest_geodesic_length = counts
        .keys()
        .filter(|c| !c.is_parabolic())
        .map(|c| c.hyperbolic_length().length)
        .min_by(f64::total_cmp);
    Ok(SpectrumReport {
        n: g.n(),
        max_word_length: max_len,
        counts,
        shortest_geodesic_length,
        topology: topology(g),
    })
}

/// Counts cycles of a fixed list of classes, following only turn sequences
/// that are prefixes of some word in one of the classes. Build once and reuse
/// across many gluings.
#[derive(Clone, Debug)]
pub struct ClassMatcher {
    classes: Vec<WordClass>,
    // trie over letters; node 0 is the root
    children: Vec<[u32; 2]>,
    terminal: Vec<Option<u32>>,
    max_len: usize,
}

const NO_CHILD: u32 = u32::MAX;

impl ClassMatcher {
    pub fn new(classes: &[WordClass]) -> Result<Self> {
        let mut m = ClassMatcher {
            classes: classes.to_vec(),
            children: vec![[NO_CHILD; 2]],
            terminal: vec![None],
            max_len: 0,
        };
        for (idx, class) in classes.iter().enumerate() {
            if class.word_length > MAX_CYCLE_LENGTH {
                return Err(Error::out_of_range("class word length", class.word_length, "1..=16"));
            }
            m.max_len = m.max_len.max(class.word_length);
            for word in class.canonical.orbit() {
                let mut node = 0usize;
                for &l in word.letters() {
                    let slot = (l == Letter::R) as usize;
                    if m.children[node][slot] == NO_CHILD {
                        m.children[node][slot] = m.children.len() as u32;
                        m.children.push([NO_CHILD; 2]);
                        m.terminal.push(None);
                    }
                    node = m.children[node][slot] as usize;
                }
                // duplicated classes in the input map to the first occurrence
                m.terminal[node].get_or_insert(idx as u32);
            }
        }
        Ok(m)
    }

    pub fn classes(&self) -> &[WordClass] {
        &self.classes
    }

    /// Counts aligned with [`ClassMatcher::classes`].
    pub fn count(&self, g: &Gluing) -> Vec<u64> {
        let mut counts = vec![0u64; self.classes.len()];
        if self.max_len == 0 {
            return counts;
        }
        walk_cycles(
            g,
            self.max_len,
            TurnConvention::LeftIsSuccessor,
            0u32,
            |node, turn| {
                let c = self.children[node as usize][(turn == Turn::Right) as usize];
                (c != NO_CHILD).then_some(c)
            },
            |node, _, _| {
                if let Some(idx) = self.terminal[node as usize] {
                    counts[idx as usize] += 1;
                }
            },
        );
        // copy counts to repeated classes
        for i in 0..self.classes.len() {
            if let Some(j) = self.classes[..i].iter().position(|c| *c == self.classes[i]) {
                counts[i] = counts[j];
            }
        }
        counts
    }
}

/// `(Z_[w](g))` for the requested classes, in input order.
pub fn count_vector(g: &Gluing, classes: &[WordClass]) -> Result<Vec<u64>> {
    Ok(ClassMatcher::new(classes)?.count(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere() -> Gluing {
        Gluing::from_pairs(1, &[(1, 2), (3, 4), (5, 6)]).unwrap()
    }

    fn torus() -> Gluing {
        Gluing::from_pairs(1, &[(1, 4), (2, 5), (3, 6)]).unwrap()
    }

    fn class(s: &str) -> WordClass {
        canonicalize(&s.parse().unwrap())
    }

    #[test]
    fn torus_has_three_lr_cycles() {
        let report = count_cycles(&torus(), 2).unwrap();
        assert_eq!(report.count(&class("LR")), 3);
        assert_eq!(report.count(&class("L")), 0);
        let cycles = enumerate_cycles(&torus(), 2).unwrap();
        let lr: Vec<_> = cycles.iter().filter(|c| c.len() == 2).collect();
        assert_eq!(lr.len(), 3);
        let starts: Vec<_> = lr.iter().map(|c| (c.entered_sides[0].0, c.turns[0])).collect();
        // ((3,L),(4,R)) reversed is ((1,R),(6,L)), which is its smallest form
        assert_eq!(starts, [(1, Turn::Left), (1, Turn::Right), (2, Turn::Left)]);
        assert_eq!(lr[0].entered_sides, [SideLabel(1), SideLabel(5)]);
        assert_eq!(lr[1].entered_sides, [SideLabel(1), SideLabel(6)]);
        for c in &cycles {
            assert!(c.closes_in(&torus()));
        }
    }

    #[test]
    fn sphere_has_two_cusp_loops() {
        let report = count_cycles(&sphere(), 1).unwrap();
        assert_eq!(report.count(&class("L")), 2);
        let cycles = enumerate_cycles(&sphere(), 1).unwrap();
        let firsts: Vec<_> = cycles.iter().map(|c| (c.entered_sides[0].0, c.turns[0])).collect();
        assert_eq!(firsts, [(1, Turn::Left), (5, Turn::Left)]);
        assert_eq!(report.shortest_geodesic_length, None);
    }

    #[test]
    fn no_length_one_cycles_without_self_glued_triangles() {
        assert_eq!(count_cycles(&torus(), 1).unwrap().counts.len(), 0);
    }

    #[test]
    fn count_vector_restricts_count_cycles() {
        assert_eq!(count_vector(&torus(), &[class("LR")]).unwrap(), vec![3]);
        assert!(count_vector(&torus(), &[]).unwrap().is_empty());
        let classes = crate::words::enumerate_classes_by_length(5).unwrap();
        for index in 0..40 {
            let g = crate::gluing::sample_uniform_gluing(1 + index as usize % 4, 5, index).unwrap();
            let report = count_cycles(&g, 5).unwrap();
            let vector = count_vector(&g, &classes).unwrap();
            for (c, v) in classes.iter().zip(vector) {
                assert_eq!(report.count(c), v, "{c} on {g:?}");
            }
        }
    }

    #[test]
    fn matcher_handles_duplicates_and_mixed_lengths() {
        let g = crate::gluing::sample_uniform_gluing(3, 1, 2).unwrap();
        let cs = [class("LLR"), class("LR"), class("RL"), class("L")];
        let got = count_vector(&g, &cs).unwrap();
        let report = count_cycles(&g, 3).unwrap();
        assert_eq!(got, cs.iter().map(|c| report.count(c)).collect::<Vec<_>>());
        assert_eq!(got[1], got[2]);
    }

    #[test]
    fn rejects_out_of_range_lengths() {
        assert!(count_cycles(&torus(), 0).is_err());
        assert!(count_cycles(&torus(), 17).is_err());
        let long = class(&"LR".repeat(9));
        assert!(count_vector(&torus(), &[long]).is_err());
    }

    #[test]
    fn shortest_length_ignores_parabolic_classes() {
        let report = count_cycles(&torus(), 3).unwrap();
        let expected = class("LR").hyperbolic_length().length;
        assert_eq!(report.shortest_geodesic_length, Some(expected));
    }
}
