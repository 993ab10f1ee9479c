//! Trigraphs: graphs whose edges are colored black or red, and the
//! contraction operation that merges two vertices.
//!
//! Vertices are stored in *slots* indexed by original vertex number. A live
//! vertex occupies the slot of its smallest member, so the label of a merged
//! vertex is always recoverable from its slot and vice versa. Adjacency is
//! kept as two bitmask rows per slot (black and red).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest number of original vertices a trigraph can hold.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrigraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("{0} vertices requested, at most {MAX_ORDER} are supported")]
    TooLarge(usize),
    #[error("vertex index {index} out of range for {order} vertices")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("no live vertex is labeled {0}")]
    UnknownVertex(VertexLabel),
    #[error("cannot contract vertex {0} with itself")]
    SameVertex(VertexLabel),
    #[error("operation requires a plain graph but red edges are present")]
    RedEdgesPresent,
}

/// The set of original vertices merged into one trigraph vertex.
///
/// Ordered as the ascending member lists compare lexicographically, so
/// `0+3 < 1 < 1+2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel(u64);

impl VertexLabel {
    pub fn singleton(index: usize) -> Self {
        assert!(index < MAX_ORDER, "vertex index {index} out of range");
        VertexLabel(1 << index)
    }

    /// Builds a label from member indices. Returns `None` for an empty set or
    /// an index at or above [`MAX_ORDER`].
    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Option<Self> {
        let mut mask = 0u64;
        for m in members {
            if m >= MAX_ORDER {
                return None;
            }
            mask |= 1 << m;
        }
        (mask != 0).then_some(VertexLabel(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Smallest member; also the slot this vertex occupies.
    pub fn smallest(self) -> usize {
        self.0.trailing_zeros() as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_ORDER && self.0 >> index & 1 == 1
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        Bits(self.0)
    }

    pub fn union(self, other: VertexLabel) -> VertexLabel {
        VertexLabel(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: VertexLabel) -> bool {
        self.0 & other.0 == 0
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members().cmp(other.members())
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexLabel({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex label {0:?}")]
pub struct LabelParseError(pub String);

impl FromStr for VertexLabel {
    type Err = LabelParseError;

    /// Parses `+`-joined member indices in strictly ascending order, e.g. `0+3+5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(s.to_string());
        let mut mask = 0u64;
        let mut prev: Option<usize> = None;
        for part in s.split('+') {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let m: usize = part.parse().map_err(|_| err())?;
            if m >= MAX_ORDER || prev.is_some_and(|p| p >= m) {
                return Err(err());
            }
            prev = Some(m);
            mask |= 1 << m;
        }
        Ok(VertexLabel(mask))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    Black,
    Red,
}

/// One merge in a contraction sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContractionStep {
    pub left: VertexLabel,
    pub right: VertexLabel,
}

impl ContractionStep {
    pub fn new(left: VertexLabel, right: VertexLabel) -> Self {
        ContractionStep { left, right }
    }
}

impl fmt::Display for ContractionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// Iterator over set bit positions, ascending.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trigraph {
    order: usize,
    live: u64,
    members: Vec<u64>,
    black: Vec<u64>,
    red: Vec<u64>,
}

impl Trigraph {
    /// Lifts a simple graph on `order` vertices into a trigraph with no red
    /// edges. Duplicate pairs collapse.
    pub fn from_graph(order: usize, edges: &[(usize, usize)]) -> Result<Self, TrigraphError> {
        let mut g = Self::edgeless(order)?;
        for &(i, j) in edges {
            for index in [i, j] {
                if index >= order {
                    return Err(TrigraphError::IndexOutOfRange { index, order });
                }
            }
            if i == j {
                return Err(TrigraphError::SelfLoop(i));
            }
            g.set_edge_slots(i, j, Some(EdgeColor::Black));
        }
        Ok(g)
    }

    pub fn edgeless(order: usize) -> Result<Self, TrigraphError> {
        if order == 0 {
            return Err(TrigraphError::Empty);
        }
        if order > MAX_ORDER {
            return Err(TrigraphError::TooLarge(order));
        }
        Ok(Trigraph {
            order,
            live: low_mask(order),
            members: (0..order).map(|i| 1u64 << i).collect(),
            black: vec![0; order],
            red: vec![0; order],
        })
    }

    /// Number of original vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of live vertices.
    pub fn vertex_count(&self) -> usize {
        self.live.count_ones() as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        Bits(self.live).map(|s| VertexLabel(self.members[s]))
    }

    pub fn edge_count(&self) -> usize {
        self.slots().map(|s| (self.neighbors_slot(s)).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn red_edge_count(&self) -> usize {
        self.slots().map(|s| self.red[s].count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_plain(&self) -> bool {
        self.red.iter().all(|&r| r == 0)
    }

    /// All edges as `(u, v, color)` with `u < v` by slot, in slot order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexLabel, VertexLabel, EdgeColor)> + '_ {
        self.slots().flat_map(move |s| {
            Bits(self.neighbors_slot(s) & !low_mask(s + 1)).map(move |t| {
                let color = self.color_slots(s, t).expect("neighbor has a color");
                (VertexLabel(self.members[s]), VertexLabel(self.members[t]), color)
            })
        })
    }

    pub fn edge(&self, u: VertexLabel, v: VertexLabel) -> Result<Option<EdgeColor>, TrigraphError> {
        let (a, b) = (self.slot_of(u)?, self.slot_of(v)?);
        Ok(if a == b { None } else { self.color_slots(a, b) })
    }

    /// Whether `label` names a live vertex.
    pub fn is_live(&self, label: VertexLabel) -> bool {
        self.slot_of(label).is_ok()
    }

    /// Merges `u` and `v` into a vertex labeled `u ∪ v`.
    ///
    /// A third vertex `x` gets a black edge to the merged vertex iff both `ux`
    /// and `vx` are black; any other adjacency of `x` to `u` or `v` becomes
    /// red. Edges away from `u` and `v` are untouched.
    pub fn contract(&self, u: VertexLabel, v: VertexLabel) -> Result<Trigraph, TrigraphError> {
        let a = self.slot_of(u)?;
        let b = self.slot_of(v)?;
        if a == b {
            return Err(TrigraphError::SameVertex(u));
        }
        Ok(self.contract_slots(a, b))
    }

    pub fn red_degree(&self, v: VertexLabel) -> Result<usize, TrigraphError> {
        Ok(self.red_degree_slot(self.slot_of(v)?))
    }

    pub fn black_degree(&self, v: VertexLabel) -> Result<usize, TrigraphError> {
        Ok(self.black[self.slot_of(v)?].count_ones() as usize)
    }

    /// Largest red degree over live vertices; 0 for a single vertex.
    pub fn max_red_degree(&self) -> usize {
        self.slots().map(|s| self.red_degree_slot(s)).max().unwrap_or(0)
    }

    /// Complement of a plain graph on the same vertex set.
    pub fn complement(&self) -> Result<Trigraph, TrigraphError> {
        if !self.is_plain() {
            return Err(TrigraphError::RedEdgesPresent);
        }
        let mut h = self.clone();
        for s in self.slots() {
            h.black[s] = self.live & !self.black[s] & !(1 << s);
        }
        Ok(h)
    }

    /// Partition of the live vertices into connected components, using edges
    /// of either color. Components are ordered by their smallest slot and each
    /// lists its vertices in slot order.
    pub fn connected_components(&self) -> Vec<Vec<VertexLabel>> {
        self.component_masks()
            .into_iter()
            .map(|m| Bits(m).map(|s| VertexLabel(self.members[s])).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() == 1
    }

    /// Induced subtrigraph on the live vertices other than `v`. The original
    /// vertex numbering is kept, so labels stay valid.
    pub fn remove_vertex(&self, v: VertexLabel) -> Result<Trigraph, TrigraphError> {
        let s = self.slot_of(v)?;
        if self.vertex_count() == 1 {
            return Err(TrigraphError::Empty);
        }
        let mut h = self.clone();
        h.kill_slot(s);
        Ok(h)
    }

    /// Renumbers live vertices to `0..k` in slot order and forgets merge
    /// history. Each new vertex is a singleton.
    pub fn compacted(&self) -> Trigraph {
        let slots: Vec<usize> = self.slots().collect();
        let k = slots.len();
        let mut h = Trigraph::edgeless(k).expect("at least one live vertex");
        for (i, &s) in slots.iter().enumerate() {
            for (j, &t) in slots.iter().enumerate().skip(i + 1) {
                h.set_edge_slots(i, j, self.color_slots(s, t));
            }
        }
        h
    }

    /// Relabels a compact trigraph: original vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Trigraph {
        assert_eq!(perm.len(), self.order);
        assert_eq!(self.vertex_count(), self.order, "permuted needs an uncontracted trigraph");
        let mut h = Trigraph::edgeless(self.order).expect("order checked at construction");
        for (s, t, c) in self.edges() {
            h.set_edge_slots(perm[s.smallest()], perm[t.smallest()], Some(c));
        }
        h
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Trigraph) -> Result<Trigraph, TrigraphError> {
        let (a, b) = (self.compacted(), other.compacted());
        let mut h = Trigraph::edgeless(a.order + b.order)?;
        for (s, t, c) in a.edges() {
            h.set_edge_slots(s.smallest(), t.smallest(), Some(c));
        }
        for (s, t, c) in b.edges() {
            h.set_edge_slots(a.order + s.smallest(), a.order + t.smallest(), Some(c));
        }
        Ok(h)
    }

    // ---- slot-level access used by the search code ----

    pub(crate) fn live_mask(&self) -> u64 {
        self.live
    }

    pub(crate) fn slots(&self) -> Bits {
        Bits(self.live)
    }

    pub(crate) fn label_of_slot(&self, s: usize) -> VertexLabel {
        VertexLabel(self.members[s])
    }

    pub(crate) fn black_row(&self, s: usize) -> u64 {
        self.black[s]
    }

    pub(crate) fn red_row(&self, s: usize) -> u64 {
        self.red[s]
    }

    pub(crate) fn neighbors_slot(&self, s: usize) -> u64 {
        self.black[s] | self.red[s]
    }

    pub(crate) fn red_degree_slot(&self, s: usize) -> usize {
        self.red[s].count_ones() as usize
    }

    pub(crate) fn color_slots(&self, s: usize, t: usize) -> Option<EdgeColor> {
        if self.black[s] >> t & 1 == 1 {
            Some(EdgeColor::Black)
        } else if self.red[s] >> t & 1 == 1 {
            Some(EdgeColor::Red)
        } else {
            None
        }
    }

    pub(crate) fn slot_of(&self, label: VertexLabel) -> Result<usize, TrigraphError> {
        let s = label.smallest();
        if s < self.order && self.live >> s & 1 == 1 && self.members[s] == label.0 {
            Ok(s)
        } else {
            Err(TrigraphError::UnknownVertex(label))
        }
    }

    pub(crate) fn set_edge_slots(&mut self, s: usize, t: usize, color: Option<EdgeColor>) {
        let (bs, bt) = (1u64 << s, 1u64 << t);
        self.black[s] &= !bt;
        self.black[t] &= !bs;
        self.red[s] &= !bt;
        self.red[t] &= !bs;
        match color {
            Some(EdgeColor::Black) => {
                self.black[s] |= bt;
                self.black[t] |= bs;
            }
            Some(EdgeColor::Red) => {
                self.red[s] |= bt;
                self.red[t] |= bs;
            }
            None => {}
        }
    }

    fn kill_slot(&mut self, s: usize) {
        let keep = !(1u64 << s);
        for t in Bits(self.live) {
            self.black[t] &= keep;
            self.red[t] &= keep;
        }
        self.live &= keep;
        self.members[s] = 0;
        self.black[s] = 0;
        self.red[s] = 0;
    }

    /// Contraction on slots `a != b`, both live. The merged vertex takes the
    /// smaller slot.
    pub(crate) fn contract_slots(&self, a: usize, b: usize) -> Trigraph {
        debug_assert!(a != b && self.live >> a & 1 == 1 && self.live >> b & 1 == 1);
        let (w, gone) = if a < b { (a, b) } else { (b, a) };
        let pair = (1u64 << a) | (1u64 << b);
        let others = self.live & !pair;
        let both_black = self.black[a] & self.black[b] & others;
        let adjacent = (self.black[a] | self.red[a] | self.black[b] | self.red[b]) & others;
        let red = adjacent & !both_black;

        let mut h = self.clone();
        h.members[w] = self.members[a] | self.members[b];
        h.kill_slot(gone);
        let wbit = 1u64 << w;
        for x in Bits(others) {
            h.black[x] &= !wbit;
            h.red[x] &= !wbit;
            if both_black >> x & 1 == 1 {
                h.black[x] |= wbit;
            } else if red >> x & 1 == 1 {
                h.red[x] |= wbit;
            }
        }
        h.black[w] = both_black;
        h.red[w] = red;
        h
    }

    fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in self.slots() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for t in Bits(frontier) {
                    next |= self.neighbors_slot(t);
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vertices: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v, c)| match c {
                EdgeColor::Black => format!("{u}-{v}"),
                EdgeColor::Red => format!("{u}~{v}"),
            })
            .collect();
        f.debug_struct("Trigraph")
            .field("vertices", &vertices)
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}
