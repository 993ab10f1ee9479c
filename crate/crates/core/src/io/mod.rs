//! Graph exchange formats: graph6, a plain edge-list text format, and DOT
//! export for drawing trigraphs.

mod dot;
mod edgelist;
mod graph6;

pub use dot::emit_dot;
pub use edgelist::{emit_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{emit_graph6, emit_graph6_canonical, parse_graph6, Graph6Error, GRAPH6_MAX_ORDER};
