use std::collections::BTreeMap;

use thiserror::Error;

use super::{canonical_form, canonical_labeling, to_graph6, Graph};

/// Largest order [`generate_connected`] will produce; larger orders come from graph6 files.
pub const MAX_BUILTIN_ORDER: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error(
        "built-in enumeration covers orders 1..={MAX_BUILTIN_ORDER}, got {0}; \
         for larger orders generate a graph6 file (e.g. `geng -c {0}`) and pass it with --file"
    )]
    OrderOutOfRange(usize),
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
///
/// Representatives are in canonical labelling and sorted by graph6 string.
///
/// Each order is grown from the previous one: deleting a non-cut vertex
/// (a leaf of any spanning tree) from a connected graph leaves it connected,
/// so attaching a new vertex to every nonempty neighbour set of every
/// smaller class reaches every class. Duplicates are removed by canonical form.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(EnumerationError::OrderOutOfRange(n));
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for order in 2..=n {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for g in &level {
            for nbrs in 1u64..(1u64 << (order - 1)) {
                let grown = extend(g, nbrs);
                next.entry(canonical_form(&grown)).or_insert_with(|| canonical_labeling(&grown));
            }
        }
        level = next.into_values().collect();
    }
    level.sort_by_cached_key(to_graph6);
    Ok(level)
}

fn extend(g: &Graph, nbrs: u64) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n + 1).expect("within vertex limit");
    for (u, v) in g.edges() {
        out.add_edge(u, v).expect("valid edge");
    }
    for u in 0..n {
        if nbrs >> u & 1 == 1 {
            out.add_edge(u, n).expect("valid edge");
        }
    }
    out
}
