//! Minimum-height prime components of a binomial edge ideal.
//!
//! Every vertex subset `S` indexes a prime `P_S(G)` containing `J_G`, of
//! height `|S| + n - c(G - S)`. Only the subsets of minimum height matter
//! for the multidegree. The search here skips subsets that provably never
//! attain the minimum:
//!
//! * a subset containing a simplicial vertex `v` is beaten by `S - v`;
//! * a nonempty minimizer leaves at least `|S| + 1` components, so it is a
//!   separating set;
//! * since at most `n - |S|` components can remain, `|S| <= (n - 1) / 2`.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Vertex limit for [`min_sets_bruteforce`].
pub const BRUTEFORCE_GUARD: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinSetError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected; combine its components with the product rule")]
    Disconnected,
    #[error("brute-force scan is limited to {guard} vertices, got {n}")]
    TooLarge { n: usize, guard: usize },
}

/// Sizes of the components of `G - S`, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComponentSizeMultiset {
    pub sizes: Vec<usize>,
}

impl ComponentSizeMultiset {
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `(size, multiplicity)` pairs, largest size first.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.sizes.iter().copied().dedup_with_count().map(|(c, s)| (s, c)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSetMember {
    pub set: VertexSet,
    pub sizes: ComponentSizeMultiset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSetReport {
    /// `min_S |S| - c(G - S)`.
    pub h_min: i64,
    /// `n + h_min`, the smallest height of a prime `P_S(G)`.
    pub height_min: i64,
    /// Minimizing subsets ordered by size, then by their sorted vertex lists.
    pub members: Vec<MinSetMember>,
}

impl MinSetReport {
    pub fn sets(&self) -> Vec<VertexSet> {
        self.members.iter().map(|m| m.set).collect()
    }

    /// JSON-ready view with 1-indexed vertex labels.
    pub fn labelled(&self) -> LabelledReport {
        LabelledReport {
            h_min: self.h_min,
            height_min: self.height_min,
            members: self
                .members
                .iter()
                .map(|m| LabelledMember {
                    set: m.set.iter().map(|v| v + 1).collect(),
                    sizes: m.sizes.sizes.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelledReport {
    pub h_min: i64,
    pub height_min: i64,
    pub members: Vec<LabelledMember>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelledMember {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    #[serde(rename = "L")]
    pub sizes: Vec<usize>,
}

/// `|S| + n - c(G - S)`.
pub fn prime_height(g: &Graph, s: VertexSet) -> i64 {
    let rest = g.vertices().difference(s);
    (s.len() + g.order()) as i64 - g.component_count(rest) as i64
}

pub fn component_size_multiset(g: &Graph, s: VertexSet) -> ComponentSizeMultiset {
    let mut sizes = g.connected_components(g.vertices().difference(s)).sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    ComponentSizeMultiset { sizes }
}

fn score(g: &Graph, s: VertexSet) -> i64 {
    s.len() as i64 - g.component_count(g.vertices().difference(s)) as i64
}

fn check_connected(g: &Graph) -> Result<(), MinSetError> {
    if g.order() == 0 {
        Err(MinSetError::EmptyGraph)
    } else if !g.is_connected() {
        Err(MinSetError::Disconnected)
    } else {
        Ok(())
    }
}

/// Collects minimizers of `|S| - c(G - S)` over `candidates`.
struct Tracker<'g> {
    g: &'g Graph,
    best: i64,
    sets: Vec<VertexSet>,
}

impl<'g> Tracker<'g> {
    fn new(g: &'g Graph) -> Self {
        Tracker { g, best: i64::MAX, sets: Vec::new() }
    }

    fn offer(&mut self, s: VertexSet, value: i64) {
        if value < self.best {
            self.best = value;
            self.sets.clear();
        }
        if value == self.best {
            self.sets.push(s);
        }
    }

    fn finish(mut self) -> MinSetReport {
        self.sets.sort_by_key(|s| (s.len(), s.to_vec()));
        let members = self
            .sets
            .into_iter()
            .map(|set| MinSetMember { set, sizes: component_size_multiset(self.g, set) })
            .collect();
        MinSetReport {
            h_min: self.best,
            height_min: self.g.order() as i64 + self.best,
            members,
        }
    }
}

/// The family of minimum-height subsets of a connected graph, using the pruning rules.
pub fn min_sets(g: &Graph) -> Result<MinSetReport, MinSetError> {
    check_connected(g)?;
    let n = g.order();
    let candidates = g.vertices().difference(g.simplicial_vertices()).to_vec();
    let max_size = (n - 1) / 2;

    let mut tracker = Tracker::new(g);
    tracker.offer(VertexSet::EMPTY, score(g, VertexSet::EMPTY));
    for k in 1..=max_size.min(candidates.len()) {
        for combo in candidates.iter().copied().combinations(k) {
            let s = VertexSet::from_vertices(combo);
            let c = g.component_count(g.vertices().difference(s));
            if c < 2 {
                continue;
            }
            tracker.offer(s, k as i64 - c as i64);
        }
    }
    Ok(tracker.finish())
}

/// Scans all `2^n` subsets with no pruning.
pub fn min_sets_bruteforce(g: &Graph) -> Result<MinSetReport, MinSetError> {
    check_connected(g)?;
    let n = g.order();
    if n > BRUTEFORCE_GUARD {
        return Err(MinSetError::TooLarge { n, guard: BRUTEFORCE_GUARD });
    }
    let mut tracker = Tracker::new(g);
    for mask in 0..(1u64 << n) {
        let s = VertexSet(mask);
        tracker.offer(s, score(g, s));
    }
    Ok(tracker.finish())
}

/// `codim(T / J_G)`: the minimum prime height, summed over connected components.
pub fn codimension(g: &Graph) -> Result<i64, MinSetError> {
    if g.order() == 0 {
        return Err(MinSetError::EmptyGraph);
    }
    g.connected_components(g.vertices())
        .blocks
        .into_iter()
        .map(|block| min_sets(&g.induced_subgraph(block)).map(|r| r.height_min))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn heights() {
        let s6 = Family::Star(6).build().unwrap();
        assert_eq!(prime_height(&s6, VertexSet::EMPTY), 5);
        assert_eq!(prime_height(&s6, vs(&[0])), 2);
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(prime_height(&k3, VertexSet::EMPTY), 2);
    }

    #[test]
    fn star() {
        for n in 4..10 {
            let r = min_sets(&Family::Star(n).build().unwrap()).unwrap();
            assert_eq!(r.sets(), vec![vs(&[0])]);
            assert_eq!(r.height_min, 2);
        }
    }

    #[test]
    fn p4_by_hand() {
        // {1,2} leaves two singletons: 2 - 2 = 0 > -1
        let p4 = Family::Path(4).build().unwrap();
        let r = min_sets_bruteforce(&p4).unwrap();
        assert_eq!(r.h_min, -1);
        assert_eq!(r.sets(), vec![VertexSet::EMPTY, vs(&[1]), vs(&[2])]);
        assert_eq!(min_sets(&p4).unwrap(), r);
    }

    #[test]
    fn wheel_and_complete() {
        let w6 = Family::Wheel(6).build().unwrap();
        assert_eq!(min_sets_bruteforce(&w6).unwrap().sets(), vec![VertexSet::EMPTY]);
        let k5 = Family::Complete(5).build().unwrap();
        assert_eq!(min_sets_bruteforce(&k5).unwrap().sets(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn size_multisets() {
        for n in 2..6usize {
            let h = Family::HornedComplete(n).build().unwrap();
            let u = VertexSet::full(n);
            assert_eq!(component_size_multiset(&h, u).sizes, vec![1; 2 * n]);
            let l = component_size_multiset(&h, u.remove(0));
            assert_eq!(l.counts(), vec![(3, 1), (1, 2 * n - 2)]);
            let f = Family::Friendship(n).build().unwrap();
            assert_eq!(component_size_multiset(&f, vs(&[0])).sizes, vec![2; n]);
        }
    }

    #[test]
    fn labelled_json_view() {
        let r = min_sets(&Family::Star(5).build().unwrap()).unwrap().labelled();
        assert_eq!(r.members[0].set, vec![1]);
        assert_eq!(r.members[0].sizes, vec![1, 1, 1, 1]);
    }

    #[test]
    fn errors() {
        let two = Graph::empty(2).unwrap();
        assert_eq!(min_sets(&two), Err(MinSetError::Disconnected));
        assert_eq!(min_sets(&Graph::empty(0).unwrap()), Err(MinSetError::EmptyGraph));
        let big = Family::Path(21).build().unwrap();
        assert_eq!(min_sets_bruteforce(&big), Err(MinSetError::TooLarge { n: 21, guard: 20 }));
        assert!(min_sets(&big).is_ok());
    }

    #[test]
    fn single_vertex() {
        let r = min_sets(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((r.h_min, r.height_min), (-1, 0));
        assert_eq!(r.sets(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn codimension_adds_over_components() {
        let k2 = Family::Complete(2).build().unwrap();
        let g = k2.disjoint_union(&Graph::empty(1).unwrap()).unwrap().disjoint_union(&k2).unwrap();
        assert_eq!(codimension(&g), Ok(2));
    }
}
