//! Multidegree straight from the definition, as an independent check on
//! [`crate::engine`].
//!
//! `J_G` is completed to a Gröbner basis, its initial monomial ideal has the
//! same bigraded Hilbert series, and the multidegree is the lowest-degree
//! part of that ideal's K-polynomial after `t -> 1 - t`.

mod groebner;
mod kpoly;
mod monomial;

pub use groebner::{binomial_edge_generators, buchberger, is_groebner_basis, Binomial};
pub use kpoly::{k_polynomial, MonomialIdealRep};
pub use monomial::{ExpMonomial, TermOrder};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::bipoly::BiPoly;
use crate::engine::{multidegree, EngineError};
use crate::graph::Graph;
use crate::minsets::{codimension, MinSetError};

/// Default vertex limit for the oracle.
pub const ORACLE_GUARD: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle is limited to {guard} vertices, got {n}")]
    TooLarge { n: usize, guard: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("reduction produced a coefficient outside {{-1, 0, 1}}")]
    NonUnitCoefficient,
    #[error("reduction left a non-binomial remainder: {0}")]
    NonBinomialRemainder(String),
    #[error("binomial is not bihomogeneous: {0}")]
    NotBihomogeneous(String),
    #[error("terms of total degree {found} survive below the codimension {codim}")]
    SubCodimTerms { found: u32, codim: i64 },
    #[error("lowest degree {found} does not match the minimum prime height {codim}")]
    CodimMismatch { found: u32, codim: i64 },
    #[error(transparent)]
    MinSets(#[from] MinSetError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub guard: usize,
    pub order: TermOrder,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { guard: ORACLE_GUARD, order: TermOrder::Lex }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertMultidegree {
    pub poly: BiPoly,
    pub codim: i64,
    pub h_min: i64,
    pub basis_len: usize,
    pub initial_ideal: MonomialIdealRep,
    pub k_polynomial: BiPoly,
}

pub fn multidegree_via_hilbert(
    g: &Graph,
    config: &OracleConfig,
) -> Result<HilbertMultidegree, OracleError> {
    let n = g.order();
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    if n > config.guard {
        return Err(OracleError::TooLarge { n, guard: config.guard });
    }
    let gens = binomial_edge_generators(g, config.order);
    let basis = buchberger(&gens, config.order)?;
    let initial = MonomialIdealRep::new(2 * n, basis.iter().map(|b| b.lead.clone()).collect());
    let k = k_polynomial(&initial);
    let (degree, poly) = k
        .substitute_one_minus()
        .lowest_total_degree_part()
        .expect("K-polynomial of a proper ideal is nonzero");

    let codim = codimension(g)?;
    if (degree as i64) < codim {
        return Err(OracleError::SubCodimTerms { found: degree, codim });
    }
    if degree as i64 != codim {
        return Err(OracleError::CodimMismatch { found: degree, codim });
    }
    Ok(HilbertMultidegree {
        poly,
        codim,
        h_min: codim - n as i64,
        basis_len: basis.len(),
        initial_ideal: initial,
        k_polynomial: k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermDifference {
    pub i: u32,
    pub j: u32,
    pub engine: BigInt,
    pub oracle: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub engine: BiPoly,
    pub oracle: BiPoly,
    pub equal: bool,
    /// First differing term in display order.
    pub first_difference: Option<TermDifference>,
}

/// Runs the engine and the oracle on `g` and compares.
pub fn verify(g: &Graph, config: &OracleConfig) -> Result<VerifyReport, OracleError> {
    let oracle = multidegree_via_hilbert(g, config)?.poly;
    let engine = multidegree(g)?.poly;
    let diff = &engine - &oracle;
    let first_difference = diff.terms().next().map(|((i, j), _)| TermDifference {
        i,
        j,
        engine: engine.coeff(i, j),
        oracle: oracle.coeff(i, j),
    });
    Ok(VerifyReport { equal: first_difference.is_none(), engine, oracle, first_difference })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn oracle(f: Family) -> BiPoly {
        multidegree_via_hilbert(&f.build().unwrap(), &OracleConfig::default()).unwrap().poly
    }

    #[test]
    fn complete_three() {
        assert_eq!(oracle(Family::Complete(3)), BiPoly::h_poly(3).unwrap());
    }

    #[test]
    fn path_four_and_its_k_polynomial() {
        let g = Family::Path(4).build().unwrap();
        let r = multidegree_via_hilbert(&g, &OracleConfig::default()).unwrap();
        assert_eq!(r.poly, (BiPoly::t1() + BiPoly::t2()).pow(3));
        let regular = BiPoly::from_terms([(0, 0, 1), (1, 1, -1)]).pow(3);
        assert_eq!(r.k_polynomial, regular);
        assert!(r.initial_ideal.is_squarefree());
    }

    #[test]
    fn star_six() {
        assert_eq!(oracle(Family::Star(6)), BiPoly::monomial(1, 1, 1));
    }

    #[test]
    fn cycle_six_verifies() {
        let rep = verify(&Family::Cycle(6).build().unwrap(), &OracleConfig::default()).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.oracle, BiPoly::h_poly(6).unwrap());
    }

    #[test]
    fn friendship_two_verifies() {
        let rep = verify(&Family::Friendship(2).build().unwrap(), &OracleConfig::default()).unwrap();
        assert!(rep.equal, "{rep:?}");
    }

    #[test]
    fn edgeless_graph() {
        let r = multidegree_via_hilbert(&Graph::empty(3).unwrap(), &OracleConfig::default()).unwrap();
        assert_eq!((r.poly, r.codim), (BiPoly::one(), 0));
    }

    #[test]
    fn guard() {
        let g = Family::Path(9).build().unwrap();
        assert_eq!(
            multidegree_via_hilbert(&g, &OracleConfig::default()).unwrap_err(),
            OracleError::TooLarge { n: 9, guard: 8 }
        );
        let relaxed = OracleConfig { guard: 9, ..OracleConfig::default() };
        assert!(multidegree_via_hilbert(&g, &relaxed).is_ok());
    }

    #[test]
    fn mismatch_report_names_first_term() {
        let diff = &BiPoly::h_poly(3).unwrap() - &BiPoly::monomial(1, 2, 0);
        assert_eq!(diff.terms().next().map(|(e, _)| e), Some((1, 1)));
    }
}
