//! Multidegree of `J_G` from the minimum-height subsets of `G`:
//!
//! ```text
//! C(G) = sum_{S in M(G)} (t1 t2)^|S| * prod_{m in L(S;G)} (t1^m - t2^m) / (t1 - t2)
//! ```
//!
//! Disconnected graphs multiply the multidegrees of their components.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::bipoly::{binomial, BiPoly};
use crate::graph::{Family, FamilyError, Graph};
use crate::minsets::{min_sets, MinSetError, MinSetReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    MinSets(#[from] MinSetError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultidegreeResult {
    pub poly: BiPoly,
    pub h_min: i64,
    /// `n + h_min`; also the total degree of every term of `poly`.
    pub codim: i64,
    /// Number of minimum-height primes (product over components).
    pub witness_count: u64,
}

/// Contribution of one minimum-height subset: `(t1 t2)^|S| * prod h(m)`.
fn member_term(set_size: usize, sizes: &[usize]) -> BiPoly {
    let mut term = BiPoly::monomial(1, set_size as u32, set_size as u32);
    for &m in sizes {
        term = &term * &BiPoly::h_poly(m as i64).expect("component sizes are positive");
    }
    term
}

/// Sums the member terms of a report for a connected graph.
pub fn multidegree_from_report(report: &MinSetReport) -> BiPoly {
    report.members.iter().map(|m| member_term(m.set.len(), &m.sizes.sizes)).sum()
}

pub fn multidegree(g: &Graph) -> Result<MultidegreeResult, EngineError> {
    if g.order() == 0 {
        return Err(EngineError::EmptyGraph);
    }
    let mut poly = BiPoly::one();
    let mut h_min = 0;
    let mut witness_count = 1u64;
    for block in g.connected_components(g.vertices()).blocks {
        let report = min_sets(&g.induced_subgraph(block))?;
        poly = &poly * &multidegree_from_report(&report);
        h_min += report.h_min;
        witness_count *= report.members.len() as u64;
    }
    Ok(MultidegreeResult { poly, h_min, codim: g.order() as i64 + h_min, witness_count })
}

/// `C(G)(1, 1)`, the sum of all coefficients.
pub fn multiplicity(g: &Graph) -> Result<BigInt, EngineError> {
    Ok(multidegree(g)?.poly.eval(1, 1))
}

fn path_md(n: usize) -> BiPoly {
    let d = n as u32 - 1;
    BiPoly::from_terms((0..=d).map(|i| (i, d - i, binomial(d, i))))
}

fn h(n: usize) -> BiPoly {
    BiPoly::h_poly(n as i64).expect("positive order")
}

/// `m` copies of `K_n` through one hub. The hub beats the empty set only
/// once it splits off three or more blades; with two blades they tie.
fn windmill_md(n: usize, m: usize) -> BiPoly {
    let hub = &BiPoly::monomial(1, 1, 1) * &h(n - 1).pow(m as u32);
    match m {
        1 => h(n),
        2 => &h(2 * n - 1) + &hub,
        _ => hub,
    }
}

/// Closed-form multidegree of a named family, without subset enumeration.
pub fn family_multidegree(family: Family) -> Result<BiPoly, EngineError> {
    // re-validate: the enum can be built directly with out-of-range values
    family.build()?;
    let poly = match family {
        Family::Path(n) => path_md(n),
        Family::Star(n) if n <= 3 => path_md(n),
        Family::Star(_) => BiPoly::monomial(1, 1, 1),
        Family::Cycle(n) | Family::Wheel(n) | Family::Complete(n) => h(n),
        Family::Barbell(n) => {
            let d = 2 * n as u32 - 1;
            BiPoly::from_terms((0..=d).map(|i| (i, d - i, 1 + 2 * i.min(d - i))))
        }
        Family::HornedComplete(n) => {
            let k = n as u32;
            BiPoly::from_terms([(k + 1, k - 1, k), (k, k, k + 1), (k - 1, k + 1, k)])
        }
        Family::Friendship(n) if n >= 3 => {
            let k = n as u32;
            BiPoly::from_terms((0..=k).map(|i| (i + 1, k - i + 1, binomial(k, i))))
        }
        Family::Friendship(n) => windmill_md(3, n),
        Family::Windmill(n, m) => windmill_md(n, m),
    };
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn p(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    fn md(f: Family) -> MultidegreeResult {
        multidegree(&f.build().unwrap()).unwrap()
    }

    #[test]
    fn named_examples() {
        assert_eq!(md(Family::Star(6)).poly, p(&[(1, 1, 1)]));
        for n in 3..10 {
            assert_eq!(md(Family::Cycle(n)).poly, h(n));
        }
        for n in 4..10 {
            assert_eq!(md(Family::Wheel(n)).poly, h(n));
        }
        let b3 = p(&[(5, 0, 1), (4, 1, 3), (3, 2, 5), (2, 3, 5), (1, 4, 3), (0, 5, 1)]);
        assert_eq!(md(Family::Barbell(3)).poly, b3);
    }

    #[test]
    fn disjoint_edges_multiply() {
        let k2 = Family::Complete(2).build().unwrap();
        let r = multidegree(&k2.disjoint_union(&k2).unwrap()).unwrap();
        assert_eq!(r.poly, (BiPoly::t1() + BiPoly::t2()).pow(2));
        assert_eq!(r.codim, 2);
    }

    #[test]
    fn isolated_vertices_are_neutral() {
        let r = multidegree(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((r.poly, r.codim), (BiPoly::one(), 0));
        let r = multidegree(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!((r.poly, r.codim, r.witness_count), (BiPoly::one(), 0, 1));
        assert_eq!(multidegree(&Graph::empty(0).unwrap()), Err(EngineError::EmptyGraph));
    }

    #[test]
    fn multiplicities() {
        for n in 1..9 {
            assert_eq!(multiplicity(&Family::Complete(n).build().unwrap()), Ok(BigInt::from(n)));
        }
        assert_eq!(multiplicity(&Family::Star(6).build().unwrap()), Ok(BigInt::from(1)));
        assert_eq!(multiplicity(&Family::Barbell(3).build().unwrap()), Ok(BigInt::from(18)));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            family_multidegree(Family::Path(4)).unwrap(),
            p(&[(3, 0, 1), (2, 1, 3), (1, 2, 3), (0, 3, 1)])
        );
        assert_eq!(
            family_multidegree(Family::HornedComplete(4)).unwrap(),
            p(&[(5, 3, 4), (4, 4, 5), (3, 5, 4)])
        );
        assert_eq!(
            family_multidegree(Family::Friendship(3)).unwrap(),
            p(&[(4, 1, 1), (3, 2, 3), (2, 3, 3), (1, 4, 1)])
        );
        // two triangles sharing a vertex: the hub ties with the empty set,
        // so h(5) joins t1 t2 (t1 + t2)^2
        assert_eq!(
            family_multidegree(Family::Friendship(2)).unwrap(),
            p(&[(4, 0, 1), (3, 1, 2), (2, 2, 3), (1, 3, 2), (0, 4, 1)])
        );
        assert_eq!(family_multidegree(Family::Friendship(1)).unwrap(), h(3));
        assert_eq!(family_multidegree(Family::Star(3)).unwrap(), path_md(3));
        assert!(family_multidegree(Family::Wheel(3)).is_err());
    }

    #[test]
    fn witness_counts() {
        assert_eq!(md(Family::Barbell(4)).witness_count, 3);
        assert_eq!(md(Family::HornedComplete(3)).witness_count, 4);
        let r = min_sets(&Family::Barbell(4).build().unwrap()).unwrap();
        assert_eq!(r.sets(), vec![VertexSet::EMPTY, VertexSet::singleton(0), VertexSet::singleton(4)]);
    }
}
