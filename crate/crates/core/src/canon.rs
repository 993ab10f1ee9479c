//! Canonical labeling of trigraphs.
//!
//! The search individualizes vertices of the first non-singleton cell of an
//! equitable ordered partition and keeps the lexicographically smallest
//! adjacency bitstring among the leaves. Cells are ordered by refinement
//! signatures only, so the set of leaves reached, and with it the minimum,
//! does not depend on the input labeling. Two vertices of the same cell with
//! identical colored neighborhoods are exchanged by an automorphism, so only
//! one of them is expanded.

use std::fmt;

use crate::trigraph::{Bits, EdgeColor, Trigraph};

/// Labeling-independent fingerprint of a trigraph. Equal keys mean the two
/// trigraphs are isomorphic by a map that preserves both edge colors.
///
/// Keys order by vertex count, then by the black upper-triangle bitstring,
/// then by the red one. Bits follow graph6 order, (0,1), (0,2), (1,2), (0,3), ...,
/// packed most significant bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    bits: Vec<u64>,
}

impl CanonicalKey {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    fn words_per_color(n: usize) -> usize {
        (n * n.saturating_sub(1) / 2).div_ceil(64)
    }

    pub fn black_bits(&self) -> &[u64] {
        &self.bits[..Self::words_per_color(self.vertex_count())]
    }

    pub fn red_bits(&self) -> &[u64] {
        &self.bits[Self::words_per_color(self.vertex_count())..]
    }

    /// Whether any red bit is set.
    pub fn has_red(&self) -> bool {
        self.red_bits().iter().any(|&w| w != 0)
    }

    /// The canonically labeled trigraph this key describes.
    pub fn to_trigraph(&self) -> Trigraph {
        let n = self.vertex_count();
        let mut g = Trigraph::edgeless(n).expect("keys describe non-empty trigraphs");
        let (black, red) = (self.black_bits(), self.red_bits());
        let get = |words: &[u64], k: usize| words[k / 64] >> (63 - k % 64) & 1 == 1;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if get(black, k) {
                    g.set_edge_slots(i, j, Some(EdgeColor::Black));
                } else if get(red, k) {
                    g.set_edge_slots(i, j, Some(EdgeColor::Red));
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(n={}", self.n)?;
        for w in &self.bits {
            write!(f, " {w:016x}")?;
        }
        f.write_str(")")
    }
}

pub fn canonical_form(g: &Trigraph) -> CanonicalKey {
    canonical_labeling(g).0
}

/// Canonical key plus the labeling that produces it: `order[i]` is the slot
/// of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Trigraph) -> (CanonicalKey, Vec<usize>) {
    let slots: Vec<usize> = g.slots().collect();
    let k = slots.len();
    let mut local_index = [usize::MAX; 64];
    for (i, &s) in slots.iter().enumerate() {
        local_index[s] = i;
    }
    let remap = |row: u64| Bits(row & g.live_mask()).fold(0u64, |acc, s| acc | 1 << local_index[s]);
    let black: Vec<u64> = slots.iter().map(|&s| remap(g.black_row(s))).collect();
    let red: Vec<u64> = slots.iter().map(|&s| remap(g.red_row(s))).collect();

    let mut search = Search { k, black, red, best: None };
    search.explore(vec![(0..k).collect()]);
    let (bits, local_order) = search.best.expect("at least one leaf");
    let order = local_order.into_iter().map(|i| slots[i]).collect();
    (CanonicalKey { n: k as u8, bits }, order)
}

struct Search {
    k: usize,
    black: Vec<u64>,
    red: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

type Partition = Vec<Vec<usize>>;

impl Search {
    fn explore(&mut self, partition: Partition) {
        let partition = self.refine(partition);
        let Some(target) = partition.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = partition.into_iter().map(|c| c[0]).collect();
            let bits = self.key_bits(&order);
            if self.best.as_ref().map_or(true, |(b, _)| bits < *b) {
                self.best = Some((bits, order));
            }
            return;
        };
        let cell = &partition[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| self.interchangeable(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(partition.len() + 1);
            child.extend_from_slice(&partition[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&x| x != v).collect());
            child.extend_from_slice(&partition[target + 1..]);
            self.explore(child);
        }
    }

    /// The transposition (u v) is an automorphism.
    fn interchangeable(&self, u: usize, v: usize) -> bool {
        let rest = !(1u64 << u | 1u64 << v);
        self.black[u] & rest == self.black[v] & rest && self.red[u] & rest == self.red[v] & rest
    }

    /// Splits cells by their (black, red) neighbor counts into every cell
    /// until the partition is equitable.
    fn refine(&self, mut partition: Partition) -> Partition {
        loop {
            let masks: Vec<u64> = partition.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
            let mut next = Vec::with_capacity(self.k);
            let mut split = false;
            for cell in &partition {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(u32, u32)>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks
                            .iter()
                            .map(|&m| ((self.black[v] & m).count_ones(), (self.red[v] & m).count_ones()))
                            .collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let before = next.len();
                for (i, (sig, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != *sig {
                        next.push(Vec::new());
                    }
                    next.last_mut().unwrap().push(*v);
                }
                split |= next.len() - before > 1;
            }
            if !split {
                return next;
            }
            partition = next;
        }
    }

    fn key_bits(&self, order: &[usize]) -> Vec<u64> {
        let words = CanonicalKey::words_per_color(self.k);
        let mut bits = vec![0u64; 2 * words];
        let mut pos = 0;
        for j in 1..self.k {
            let vj = order[j];
            for &vi in &order[..j] {
                let mask = 1u64 << (63 - pos % 64);
                if self.black[vi] >> vj & 1 == 1 {
                    bits[pos / 64] |= mask;
                } else if self.red[vi] >> vj & 1 == 1 {
                    bits[words + pos / 64] |= mask;
                }
                pos += 1;
            }
        }
        bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VertexLabel;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Trigraph {
        Trigraph::from_graph(n, edges).unwrap()
    }

    #[test]
    fn c4_relabeling_invariant() {
        let a = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let b = graph(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn p4_differs_from_claw() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&p4), canonical_form(&claw));
    }

    #[test]
    fn red_edges_distinguish() {
        let c5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let g = graph(5, &c5);
        let s = VertexLabel::singleton;
        let a = g.contract(s(0), s(1)).unwrap();
        let b = g.contract(s(1), s(2)).unwrap();
        let c = g.contract(s(0), s(2)).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&c));
        assert!(canonical_form(&a).has_red());
    }

    #[test]
    fn key_round_trips_to_trigraph() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let h = g.contract(VertexLabel::singleton(0), VertexLabel::singleton(2)).unwrap();
        let key = canonical_form(&h);
        let t = key.to_trigraph();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(canonical_form(&t), key);
        assert_eq!(t.red_edge_count(), h.red_edge_count());
    }

    #[test]
    fn labeling_maps_slots_to_positions() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let (key, order) = canonical_labeling(&g);
        let mut perm = vec![0; 4];
        for (pos, &slot) in order.iter().enumerate() {
            perm[slot] = pos;
        }
        assert_eq!(g.permuted(&perm), key.to_trigraph());
    }

    #[test]
    fn symmetric_graphs_finish() {
        // complete, empty, matching and Petersen graphs stress the twin pruning
        let k10: Vec<_> = (0..10).flat_map(|i| (i + 1..10).map(move |j| (i, j))).collect();
        assert_eq!(canonical_form(&graph(10, &k10)).to_trigraph().edge_count(), 45);
        assert_eq!(canonical_form(&graph(10, &[])).to_trigraph().edge_count(), 0);
        let matching: Vec<_> = (0..5).map(|i| (2 * i, 2 * i + 1)).collect();
        assert_eq!(canonical_form(&graph(10, &matching)).to_trigraph().edge_count(), 5);
        let mut petersen: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        petersen.extend((0..5).map(|i| (i, i + 5)));
        petersen.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let p = graph(10, &petersen);
        let q = p.permuted(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert_eq!(canonical_form(&p), canonical_form(&q));
    }
}
