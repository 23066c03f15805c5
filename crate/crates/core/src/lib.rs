//! Bigraded multidegrees of binomial edge ideals of simple graphs.
//!
//! For a simple graph `G` on `n` vertices the binomial edge ideal `J_G` is
//! generated by `x_i y_j - x_j y_i` over the edges `{i, j}`. Its bigraded
//! multidegree is computed here from purely combinatorial data (the vertex
//! subsets whose primes have minimum height) and cross-checked against a
//! Gröbner basis / Hilbert series computation.
//!
//! * [`graph`] graphs, families, graph6, enumeration up to isomorphism
//! * [`bipoly`] exact polynomials in `t1, t2`
//! * [`minsets`] minimum-height subsets `M(G)`
//! * [`engine`] the multidegree and closed forms for named families
//! * [`oracle`] the independent Gröbner-based computation
//! * [`census`] statistics over all connected graphs of an order

pub mod bipoly;
pub mod census;
pub mod engine;
pub mod graph;
pub mod minsets;
pub mod oracle;

pub use bipoly::BiPoly;
pub use engine::{family_multidegree, multidegree, MultidegreeResult};
pub use graph::{Family, Graph, VertexSet};
pub use minsets::{min_sets, min_sets_bruteforce, MinSetReport};
