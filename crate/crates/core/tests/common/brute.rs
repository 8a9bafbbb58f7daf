//! Reference cycle counter: tries every start side and every turn sequence,
//! then removes duplicates by materialising each cycle's full orbit under
//! rotation and reversal.

use std::collections::{BTreeSet, HashMap, HashSet};

use randsurf::gluing::{next_side, Gluing, SideLabel, Turn};
use randsurf::words::{canonical_word, Word};

type Cycle = Vec<(u32, Turn)>;

fn turns_from_bits(bits: u32, len: usize) -> Vec<Turn> {
    (0..len)
        .map(|i| if bits >> i & 1 == 0 { Turn::Left } else { Turn::Right })
        .collect()
}

fn orbit(cycle: &Cycle) -> BTreeSet<Cycle> {
    let k = cycle.len();
    let exits: Vec<u32> = cycle
        .iter()
        .map(|&(e, t)| next_side(SideLabel(e), t).0)
        .collect();
    let reversed: Cycle = (0..k).rev().map(|i| (exits[i], cycle[i].1.flip())).collect();
    let mut out = BTreeSet::new();
    for base in [cycle, &reversed] {
        for r in 0..k {
            let mut c = base.clone();
            c.rotate_left(r);
            out.insert(c);
        }
    }
    out
}

/// Every closed traversal of length `len`, one representative per orbit.
pub fn cycles_of_length(g: &Gluing, len: usize) -> Vec<Cycle> {
    let mut seen: HashSet<Cycle> = HashSet::new();
    let mut reps = Vec::new();
    for start in 1..=g.side_count() as u32 {
        for bits in 0..1u32 << len {
            let turns = turns_from_bits(bits, len);
            let mut entered = SideLabel(start);
            let mut cycle = Vec::with_capacity(len);
            for &t in &turns {
                cycle.push((entered.0, t));
                entered = g.partner(next_side(entered, t));
            }
            if entered.0 != start || seen.contains(&cycle) {
                continue;
            }
            let orb = orbit(&cycle);
            reps.push(orb.iter().next().unwrap().clone());
            seen.extend(orb);
        }
    }
    reps
}

/// Cycle classes by canonical word, for all lengths `1..=max_len`.
pub fn brute_counts(g: &Gluing, max_len: usize) -> HashMap<Word, u64> {
    let mut counts = HashMap::new();
    for len in 1..=max_len {
        for c in cycles_of_length(g, len) {
            let w = Word::new(c.iter().map(|&(_, t)| t.letter()).collect()).unwrap();
            *counts.entry(canonical_word(&w)).or_insert(0) += 1;
        }
    }
    counts
}
