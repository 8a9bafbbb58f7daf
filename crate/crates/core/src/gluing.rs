//! Random gluings of `2N` ideal triangles.
//!
//! Sides carry the labels `1..=6N`; triangle `i` (1-based) has sides
//! `3i-2, 3i-1, 3i` in cyclic order. A gluing is a perfect matching of the
//! labels. Crossing into a triangle through side `s` and turning left leaves it
//! through the cyclic successor of `s`, turning right through the predecessor.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Letter;

/// A side label in `1..=6N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SideLabel(pub u32);

impl SideLabel {
    /// 1-based triangle index `ceil(label / 3)`.
    pub fn triangle(self) -> u32 {
        self.0.div_ceil(3)
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) fn from_index(i: usize) -> Self {
        SideLabel(i as u32 + 1)
    }
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn flip(self) -> Turn {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }

    pub fn letter(self) -> Letter {
        match self {
            Turn::Left => Letter::L,
            Turn::Right => Letter::R,
        }
    }

    pub fn from_letter(l: Letter) -> Turn {
        match l {
            Letter::L => Turn::Left,
            Letter::R => Turn::Right,
        }
    }
}

/// Exit side when entering a triangle through side index `i` (0-based).
#[inline]
pub(crate) fn next_index(i: usize, turn: Turn) -> usize {
    let base = i - i % 3;
    match turn {
        Turn::Left => base + (i + 1) % 3,
        Turn::Right => base + (i + 2) % 3,
    }
}

pub fn next_side(s: SideLabel, turn: Turn) -> SideLabel {
    SideLabel::from_index(next_index(s.index(), turn))
}

/// A perfect matching of the side labels `1..=6N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gluing {
    n: usize,
    // 0-based involution
    partner: Vec<u32>,
}

impl Gluing {
    /// Build from 1-based pairs; every label `1..=6N` must occur exactly once.
    pub fn from_pairs(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::out_of_range("N", n, ">= 1"));
        }
        let size = 6 * n;
        if pairs.len() != 3 * n {
            return Err(Error::InvalidGluing(format!(
                "expected {} pairs, got {}",
                3 * n,
                pairs.len()
            )));
        }
        let mut partner = vec![u32::MAX; size];
        for &(x, y) in pairs {
            for v in [x, y] {
                if v == 0 || v as usize > size {
                    return Err(Error::InvalidGluing(format!("label {v} outside 1..={size}")));
                }
            }
            let (i, j) = (x as usize - 1, y as usize - 1);
            if i == j || partner[i] != u32::MAX || partner[j] != u32::MAX {
                return Err(Error::InvalidGluing(format!("label repeated in pair ({x}, {y})")));
            }
            partner[i] = j as u32;
            partner[j] = i as u32;
        }
        Ok(Gluing { n, partner })
    }

    /// From a 0-based involution without fixed points. Unchecked outside debug builds.
    pub(crate) fn from_partner(n: usize, partner: Vec<u32>) -> Self {
        debug_assert_eq!(partner.len(), 6 * n);
        debug_assert!(partner
            .iter()
            .enumerate()
            .all(|(i, &j)| j as usize != i && partner[j as usize] as usize == i));
        Gluing { n, partner }
    }

    /// `N`: the gluing has `2N` triangles and `6N` sides.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side_count(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, s: SideLabel) -> SideLabel {
        SideLabel::from_index(self.partner[s.index()] as usize)
    }

    #[inline]
    pub(crate) fn partner_index(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    /// Side through which the next triangle is entered.
    pub fn step(&self, s: SideLabel, turn: Turn) -> SideLabel {
        SideLabel::from_index(self.step_index(s.index(), turn))
    }

    #[inline]
    pub(crate) fn step_index(&self, i: usize, turn: Turn) -> usize {
        self.partner[next_index(i, turn)] as usize
    }

    /// Sorted 1-based pairs `(x, y)` with `x < y`.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j as usize)
            .map(|(i, &j)| (i as u32 + 1, j + 1))
            .collect()
    }

    pub fn is_perfect_matching(&self) -> bool {
        self.partner.len() == 6 * self.n
            && self.partner.iter().enumerate().all(|(i, &j)| {
                (j as usize) < self.partner.len() && j as usize != i && self.partner[j as usize] as usize == i
            })
    }

    pub fn topology(&self) -> TopologyReport {
        topology(self)
    }
}

impl fmt::Debug for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gluing(N={}, {:?})", self.n, self.pairs())
    }
}

impl Serialize for Gluing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            pairs: Vec<(u32, u32)>,
        }
        Repr {
            n: self.n,
            pairs: self.pairs(),
        }
        .serialize(s)
    }
}

/// The random stream for sample `index` under `seed`. Streams for different
/// indices are independent and can be generated in any order.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform perfect matching: shuffle the labels, pair consecutive entries.
pub fn sample_uniform_gluing(n: usize, seed: u64, index: u64) -> Result<Gluing> {
    if n == 0 {
        return Err(Error::out_of_range("N", n, ">= 1"));
    }
    let mut rng = sample_rng(seed, index);
    let mut perm: Vec<u32> = (0..6 * n as u32).collect();
    perm.shuffle(&mut rng);
    let mut partner = vec![0u32; 6 * n];
    for pair in perm.chunks_exact(2) {
        partner[pair[0] as usize] = pair[1];
        partner[pair[1] as usize] = pair[0];
    }
    Ok(Gluing::from_partner(n, partner))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub connected: bool,
    pub component_count: usize,
    /// Number of cusps `n` (vertices of the triangulation).
    pub cusp_count: usize,
    /// `V - E + F = n - 3N + 2N`.
    pub euler_characteristic: i64,
    /// Sum of the genera of the components.
    pub total_genus: u64,
    pub component_genera: Vec<u64>,
    /// Orbit sizes of the vertex permutation, sorted descending.
    pub cusp_degrees: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Components, cusps and genus.
///
/// Cusps are the orbits of `v(s) = next_side(partner(s), Left)`: going around
/// a vertex crosses a glued side and then turns to the next side of the same
/// triangle. Each component is a closed surface with `V` cusps, `3T/2` edges
/// and `T` faces, so its genus is `(2 - V + T/2) / 2`.
pub fn topology(g: &Gluing) -> TopologyReport {
    let sides = g.side_count();
    let triangles = sides / 3;
    let mut uf = UnionFind::new(triangles);
    for i in 0..sides {
        uf.union(i / 3, g.partner_index(i) / 3);
    }
    let mut root_slot = vec![usize::MAX; triangles];
    let mut comp_triangles = Vec::new();
    for t in 0..triangles {
        let r = uf.find(t);
        if root_slot[r] == usize::MAX {
            root_slot[r] = comp_triangles.len();
            comp_triangles.push(0usize);
        }
        comp_triangles[root_slot[r]] += 1;
    }
    let mut comp_vertices = vec![0usize; comp_triangles.len()];
    let mut seen = vec![false; sides];
    let mut cusp_degrees = Vec::new();
    for start in 0..sides {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            len += 1;
            s = next_index(g.partner_index(s), Turn::Left);
        }
        cusp_degrees.push(len);
        let slot = root_slot[uf.find(start / 3)];
        comp_vertices[slot] += 1;
    }
    cusp_degrees.sort_unstable_by(|a, b| b.cmp(a));
    let component_genera: Vec<u64> = comp_triangles
        .iter()
        .zip(&comp_vertices)
        .map(|(&t, &v)| {
            let chi = v as i64 - (t / 2) as i64;
            debug_assert!(t % 2 == 0 && chi <= 2 && chi % 2 == 0);
            ((2 - chi) / 2) as u64
        })
        .collect();
    let cusp_count = cusp_degrees.len();
    TopologyReport {
        connected: comp_triangles.len() == 1,
        component_count: comp_triangles.len(),
        cusp_count,
        euler_characteristic: cusp_count as i64 - g.n() as i64,
        total_genus: component_genera.iter().sum(),
        component_genera,
        cusp_degrees,
    }
}
