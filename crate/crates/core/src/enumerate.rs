//! One representative per isomorphism class of simple graphs on `n` vertices.
//!
//! Up to [`BRUTE_FORCE_MAX_ORDER`] vertices every labeled graph is generated
//! and deduplicated by canonical key. Above that, classes on `n` vertices are
//! grown from the classes on `n - 1` vertices by attaching a new vertex with
//! every possible neighborhood; every graph has a vertex-deleted subgraph, so
//! nothing is missed. Representatives are the canonically relabeled graphs,
//! emitted in ascending key order.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::canon::{canonical_form, CanonicalKey};
use crate::par::{self, Execution};
use crate::trigraph::{EdgeColor, Trigraph};

pub const DEFAULT_MAX_ORDER: usize = 10;
pub const BRUTE_FORCE_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot enumerate graphs on {order} vertices (supported: 1..={max})")]
pub struct EnumerationError {
    pub order: usize,
    pub max: usize,
}

pub fn enumerate_graphs(order: usize, connected_only: bool) -> Result<Vec<Trigraph>, EnumerationError> {
    enumerate_graphs_with(order, connected_only, DEFAULT_MAX_ORDER, Execution::default())
}

pub fn enumerate_graphs_with(
    order: usize,
    connected_only: bool,
    max_order: usize,
    exec: Execution,
) -> Result<Vec<Trigraph>, EnumerationError> {
    if order == 0 || order > max_order {
        return Err(EnumerationError { order, max: max_order });
    }
    let keys = if order <= BRUTE_FORCE_MAX_ORDER { brute_force_keys(order, exec) } else { orderly_keys(order, exec) };
    Ok(keys
        .into_iter()
        .map(|k| k.to_trigraph())
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

/// Canonical keys of all labeled graphs on `order` vertices.
pub fn brute_force_keys(order: usize, exec: Execution) -> Vec<CanonicalKey> {
    let pairs: Vec<(usize, usize)> = (1..order).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let labeled = 1u64 << pairs.len();
    let keys: Vec<CanonicalKey> = par::map_collect(exec, 0..labeled, |bits| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &p)| p).collect();
        canonical_form(&Trigraph::from_graph(order, &edges).expect("valid pairs"))
    });
    keys.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Canonical keys on `order` vertices grown from the classes one size down.
pub fn orderly_keys(order: usize, exec: Execution) -> Vec<CanonicalKey> {
    if order == 1 {
        return brute_force_keys(1, exec);
    }
    let parents = if order - 1 <= BRUTE_FORCE_MAX_ORDER {
        brute_force_keys(order - 1, exec)
    } else {
        orderly_keys(order - 1, exec)
    };
    let children: Vec<Vec<CanonicalKey>> = par::map_collect(exec, parents.into_iter(), |parent| {
        let base = parent.to_trigraph();
        let mut seen = BTreeSet::new();
        for nbhd in 0u64..1 << (order - 1) {
            seen.insert(canonical_form(&extend(&base, nbhd)));
        }
        seen.into_iter().collect()
    });
    children.into_iter().flatten().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Adds a vertex adjacent to the vertices in `nbhd`.
fn extend(g: &Trigraph, nbhd: u64) -> Trigraph {
    let n = g.order();
    let mut h = Trigraph::edgeless(n + 1).expect("order below the limit");
    for (u, v, _) in g.edges() {
        h.set_edge_slots(u.smallest(), v.smallest(), Some(EdgeColor::Black));
    }
    for i in (0..n).filter(|i| nbhd >> i & 1 == 1) {
        h.set_edge_slots(i, n, Some(EdgeColor::Black));
    }
    h
}
