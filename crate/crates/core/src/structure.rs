//! Named graph families and recognizers for graph classes with a known
//! twin-width bound.

use std::fmt;

use thiserror::Error;

use crate::trigraph::{Bits, Trigraph, TrigraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    /// `Star(k)` is K_{1,k}: a center with `k` leaves.
    Star(usize),
    /// A center with one path of each given length hanging off it.
    Spider(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("invalid parameters for {0}")]
    BadParameters(&'static str),
    #[error(transparent)]
    Graph(#[from] TrigraphError),
}

/// Builds the standard graph of a family, vertices numbered from 0.
pub fn make_named(family: &NamedGraph) -> Result<Trigraph, StructureError> {
    let pairs = |n: usize| (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
    let (n, edges): (usize, Vec<(usize, usize)>) = match *family {
        NamedGraph::Complete(n) if n >= 1 => (n, pairs(n).collect()),
        NamedGraph::CompleteBipartite(a, b) if a >= 1 && b >= 1 => {
            (a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
        }
        NamedGraph::Cycle(n) if n >= 3 => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
        NamedGraph::Path(n) if n >= 1 => (n, (1..n).map(|i| (i - 1, i)).collect()),
        NamedGraph::Star(k) if k >= 1 => (k + 1, (1..=k).map(|i| (0, i)).collect()),
        NamedGraph::Spider(ref legs) if !legs.is_empty() && legs.iter().all(|&l| l >= 1) => {
            let mut edges = Vec::new();
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            (next, edges)
        }
        NamedGraph::Complete(_) => return Err(StructureError::BadParameters("complete graph")),
        NamedGraph::CompleteBipartite(..) => return Err(StructureError::BadParameters("complete bipartite graph")),
        NamedGraph::Cycle(_) => return Err(StructureError::BadParameters("cycle")),
        NamedGraph::Path(_) => return Err(StructureError::BadParameters("path")),
        NamedGraph::Star(_) => return Err(StructureError::BadParameters("star")),
        NamedGraph::Spider(_) => return Err(StructureError::BadParameters("spider")),
    };
    Ok(Trigraph::from_graph(n, &edges)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    CompleteOrBipartite,
    DominantVertex,
    AtMostOneCyclePerComponent,
    Caterpillar,
    PathGraph,
    /// The complement satisfies one of the other rules.
    ComplementReduction,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StructuralBound {
    pub rule: Rule,
    pub kind: BoundKind,
    pub value: u32,
}

impl StructuralBound {
    fn upper(rule: Rule, value: u32) -> Self {
        StructuralBound { rule, kind: BoundKind::UpperBound, value }
    }
}

impl fmt::Display for StructuralBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule={} bound<={}", self.rule, self.value)
    }
}

/// Every rule that applies to `g`, in [`Rule`] order.
pub fn recognize(g: &Trigraph) -> Result<Vec<StructuralBound>, TrigraphError> {
    let mut bounds = direct_rules(g)?;
    if let Some(value) = direct_rules(&g.complement()?)?.iter().map(|b| b.value).min() {
        bounds.push(StructuralBound::upper(Rule::ComplementReduction, value));
    }
    Ok(bounds)
}

/// Smallest bound any rule gives, if one fires.
pub fn best_bound(g: &Trigraph) -> Result<Option<u32>, TrigraphError> {
    Ok(recognize(g)?.iter().map(|b| b.value).min())
}

fn direct_rules(g: &Trigraph) -> Result<Vec<StructuralBound>, TrigraphError> {
    let mut out = Vec::new();
    if is_complete(g)? || is_complete_bipartite(g)? {
        out.push(StructuralBound { rule: Rule::CompleteOrBipartite, kind: BoundKind::Exact, value: 0 });
    }
    if has_dominant_vertex(g)? {
        out.push(StructuralBound::upper(Rule::DominantVertex, 2));
    }
    if at_most_one_cycle_per_component(g)? {
        out.push(StructuralBound::upper(Rule::AtMostOneCyclePerComponent, 2));
    }
    if is_caterpillar(g)? {
        out.push(StructuralBound::upper(Rule::Caterpillar, 1));
    }
    if is_path(g)? {
        out.push(StructuralBound::upper(Rule::PathGraph, 1));
    }
    Ok(out)
}

fn require_plain(g: &Trigraph) -> Result<(), TrigraphError> {
    if g.is_plain() {
        Ok(())
    } else {
        Err(TrigraphError::RedEdgesPresent)
    }
}

fn degrees(g: &Trigraph) -> Vec<usize> {
    g.slots().map(|s| g.neighbors_slot(s).count_ones() as usize).collect()
}

pub fn is_complete(g: &Trigraph) -> Result<bool, TrigraphError> {
    require_plain(g)?;
    let k = g.vertex_count();
    Ok(g.edge_count() == k * (k - 1) / 2)
}

/// Exactly K_{a,b} with a, b >= 1: connected, two-colorable, and every pair
/// across the two sides adjacent.
pub fn is_complete_bipartite(g: &Trigraph) -> Result<bool, TrigraphError> {
    require_plain(g)?;
    if g.vertex_count() < 2 || !g.is_connected() {
        return Ok(false);
    }
    let first = g.slots().next().unwrap();
    let side = g.neighbors_slot(first);
    let other = g.live_mask() & !side;
    let full = g.slots().all(|s| {
        let expected = if side >> s & 1 == 1 { other } else { side };
        g.neighbors_slot(s) == expected
    });
    Ok(full)
}

pub fn has_dominant_vertex(g: &Trigraph) -> Result<bool, TrigraphError> {
    require_plain(g)?;
    let k = g.vertex_count();
    Ok(degrees(g).iter().any(|&d| d + 1 == k))
}

/// Every connected component has no more edges than vertices.
pub fn at_most_one_cycle_per_component(g: &Trigraph) -> Result<bool, TrigraphError> {
    require_plain(g)?;
    Ok(g.connected_components().iter().all(|comp| {
        let mask = comp.iter().fold(0u64, |m, v| m | 1 << v.smallest());
        let edges: usize = comp.iter().map(|v| (g.neighbors_slot(v.smallest()) & mask).count_ones() as usize).sum::<usize>() / 2;
        edges <= comp.len()
    }))
}

pub fn is_tree(g: &Trigraph) -> Result<bool, TrigraphError> {
    require_plain(g)?;
    Ok(g.is_connected() && g.edge_count() + 1 == g.vertex_count())
}

/// A tree whose non-leaf vertices induce a path (possibly empty).
pub fn is_caterpillar(g: &Trigraph) -> Result<bool, TrigraphError> {
    if !is_tree(g)? {
        return Ok(false);
    }
    // removing the leaves of a tree leaves a tree, which is a path iff its
    // degrees are at most 2
    let spine = Bits(g.live_mask()).filter(|&s| g.neighbors_slot(s).count_ones() >= 2).fold(0u64, |m, s| m | 1 << s);
    Ok(Bits(spine).all(|s| (g.neighbors_slot(s) & spine).count_ones() <= 2))
}

pub fn is_path(g: &Trigraph) -> Result<bool, TrigraphError> {
    if !is_tree(g)? {
        return Ok(false);
    }
    Ok(degrees(g).iter().all(|&d| d <= 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(g: &Trigraph) -> Vec<Rule> {
        recognize(g).unwrap().iter().map(|b| b.rule).collect()
    }

    #[test]
    fn family_sizes() {
        assert_eq!(make_named(&NamedGraph::Complete(6)).unwrap().edge_count(), 15);
        let c5 = make_named(&NamedGraph::Cycle(5)).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.black_degree(v).unwrap() == 2));
        let spider = make_named(&NamedGraph::Spider(vec![2, 2, 2])).unwrap();
        assert_eq!((spider.order(), spider.edge_count()), (7, 6));
        assert_eq!(make_named(&NamedGraph::Star(3)).unwrap().order(), 4);
        assert_eq!(make_named(&NamedGraph::CompleteBipartite(2, 3)).unwrap().edge_count(), 6);
        assert_eq!(make_named(&NamedGraph::Path(1)).unwrap().edge_count(), 0);
    }

    #[test]
    fn bad_parameters() {
        for f in [
            NamedGraph::Complete(0),
            NamedGraph::Cycle(2),
            NamedGraph::Path(0),
            NamedGraph::Star(0),
            NamedGraph::CompleteBipartite(0, 3),
            NamedGraph::Spider(vec![]),
            NamedGraph::Spider(vec![1, 0]),
        ] {
            assert!(matches!(make_named(&f), Err(StructureError::BadParameters(_))), "{f:?}");
        }
        assert!(matches!(make_named(&NamedGraph::Complete(65)), Err(StructureError::Graph(_))));
    }

    #[test]
    fn k6_minus_edge_has_dominant_vertex() {
        // case 2: K_6 without the edge ae
        let edges: Vec<_> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).filter(|&e| e != (0, 4)).collect();
        let g = Trigraph::from_graph(6, &edges).unwrap();
        assert!(rules(&g).contains(&Rule::DominantVertex));
        assert!(!rules(&g).contains(&Rule::CompleteOrBipartite));
    }

    #[test]
    fn caterpillar_figure() {
        // a-b-c-e spine, d on c, f..k on e
        let (a, b, c, d, e, f, gg, h, i, j, k) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10);
        let t = Trigraph::from_graph(
            11,
            &[(a, b), (b, c), (c, d), (c, e), (e, f), (e, gg), (e, h), (e, i), (e, j), (e, k)],
        )
        .unwrap();
        assert!(is_caterpillar(&t).unwrap());
        assert!(rules(&t).contains(&Rule::Caterpillar));
    }

    #[test]
    fn spider_is_not_a_caterpillar() {
        let s = make_named(&NamedGraph::Spider(vec![2, 2, 2])).unwrap();
        assert!(!is_caterpillar(&s).unwrap());
        let r = rules(&s);
        assert!(r.contains(&Rule::AtMostOneCyclePerComponent));
        assert!(!r.contains(&Rule::Caterpillar));
    }

    #[test]
    fn paths_and_small_trees() {
        for n in 1..=6 {
            let p = make_named(&NamedGraph::Path(n)).unwrap();
            assert!(is_caterpillar(&p).unwrap());
            assert!(is_path(&p).unwrap());
        }
        let star = make_named(&NamedGraph::Star(4)).unwrap();
        assert!(is_caterpillar(&star).unwrap());
        assert!(!is_path(&star).unwrap());
        assert!(!is_caterpillar(&make_named(&NamedGraph::Cycle(4)).unwrap()).unwrap());
    }

    #[test]
    fn bipartite_recognition() {
        let k33 = make_named(&NamedGraph::CompleteBipartite(3, 3)).unwrap();
        let b = recognize(&k33).unwrap();
        assert!(b.contains(&StructuralBound { rule: Rule::CompleteOrBipartite, kind: BoundKind::Exact, value: 0 }));
        assert!(is_complete_bipartite(&make_named(&NamedGraph::Cycle(4)).unwrap()).unwrap());
        assert!(!is_complete_bipartite(&make_named(&NamedGraph::Cycle(6)).unwrap()).unwrap());
        assert!(!is_complete_bipartite(&make_named(&NamedGraph::Path(4)).unwrap()).unwrap());
        assert!(!is_complete_bipartite(&Trigraph::from_graph(2, &[]).unwrap()).unwrap());
    }

    #[test]
    fn complement_rule() {
        // complement of C_4 is 2K_2, which has at most one cycle per component
        let c4 = make_named(&NamedGraph::Cycle(4)).unwrap();
        assert!(rules(&c4).contains(&Rule::ComplementReduction));
        // the edgeless graph is the complement of K_n
        let e = Trigraph::from_graph(5, &[]).unwrap();
        let b = recognize(&e).unwrap();
        assert!(b.contains(&StructuralBound::upper(Rule::ComplementReduction, 0)));
    }

    #[test]
    fn display_format() {
        assert_eq!(StructuralBound::upper(Rule::DominantVertex, 2).to_string(), "rule=DominantVertex bound<=2");
    }

    #[test]
    fn red_edges_rejected() {
        let g = make_named(&NamedGraph::Path(3)).unwrap();
        let h = g.contract(crate::VertexLabel::singleton(0), crate::VertexLabel::singleton(1)).unwrap();
        assert_eq!(recognize(&h), Err(TrigraphError::RedEdgesPresent));
        assert_eq!(is_caterpillar(&h), Err(TrigraphError::RedEdgesPresent));
    }
}
