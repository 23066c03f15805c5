//! Buchberger completion specialised to binomials with unit coefficients.
//!
//! S-polynomials and reductions of `u ± v` by `u' ± v'` stay two-term with
//! coefficients in `{-1, 0, 1}` as long as the ideal is generated by such
//! binomials and no term merges into a `±2`. Binomial edge ideals are
//! generated by pure differences, so any other outcome is reported as an
//! arithmetic fault rather than handled.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::monomial::{ExpMonomial, TermOrder};
use super::OracleError;
use crate::graph::Graph;

/// `lead + trail_sign * trail` with `lead > trail` in the active order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: ExpMonomial,
    pub trail: ExpMonomial,
    pub trail_sign: i8,
}

impl Binomial {
    /// Orders the two terms and scales so the leading coefficient is `+1`.
    /// Returns `Ok(None)` when the terms cancel.
    pub fn new(
        a: (i8, ExpMonomial),
        b: (i8, ExpMonomial),
        order: TermOrder,
    ) -> Result<Option<Binomial>, OracleError> {
        two_terms(vec![(a.1, a.0 as i32), (b.1, b.0 as i32)], order)
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.lead.bidegree()
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.lead.bidegree() == self.trail.bidegree()
    }
}

impl std::fmt::Debug for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.trail_sign < 0 { '-' } else { '+' };
        write!(f, "{:?} {} {:?}", self.lead, sign, self.trail)
    }
}

/// `x_i y_j - x_j y_i` for every edge `{i, j}`, `i < j`, oriented for `order`.
pub fn binomial_edge_generators(g: &Graph, order: TermOrder) -> Vec<Binomial> {
    let n = g.order();
    g.edges()
        .map(|(i, j)| {
            Binomial::new((1, ExpMonomial::xy(n, i, j)), (-1, ExpMonomial::xy(n, j, i)), order)
                .expect("unit coefficients")
                .expect("distinct monomials")
        })
        .collect()
}

/// Merges like terms, sorts descending, and packs two surviving terms into a
/// normalised binomial.
fn two_terms(
    mut terms: Vec<(ExpMonomial, i32)>,
    order: TermOrder,
) -> Result<Option<Binomial>, OracleError> {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut merged: Vec<(ExpMonomial, i32)> = Vec::with_capacity(2);
    for (m, c) in terms {
        match merged.last_mut() {
            Some((last, lc)) if *last == m => *lc += c,
            _ => merged.push((m, c)),
        }
    }
    merged.retain(|(_, c)| *c != 0);
    if merged.iter().any(|(_, c)| c.abs() > 1) {
        return Err(OracleError::NonUnitCoefficient);
    }
    match merged.len() {
        0 => Ok(None),
        2 => {
            let mut it = merged.into_iter();
            let (lead, lc) = it.next().unwrap();
            let (trail, tc) = it.next().unwrap();
            let bin = Binomial { lead, trail, trail_sign: (tc * lc) as i8 };
            if !bin.is_bihomogeneous() {
                return Err(OracleError::NotBihomogeneous(format!("{bin:?}")));
            }
            Ok(Some(bin))
        }
        _ => Err(OracleError::NonBinomialRemainder(format!("{merged:?}"))),
    }
}

/// Full reduction of a two-term polynomial by `basis`.
fn reduce(
    mut terms: Vec<(ExpMonomial, i32)>,
    basis: &[&Binomial],
    order: TermOrder,
) -> Result<Option<Binomial>, OracleError> {
    'outer: loop {
        for slot in terms.iter_mut() {
            if slot.1 == 0 {
                continue;
            }
            if let Some(g) = basis.iter().find(|g| g.lead.divides(&slot.0)) {
                // c*u - c*(u/L)*(L + s*T) = -c*s*(u/L)*T
                let q = slot.0.div(&g.lead);
                *slot = (q.mul(&g.trail), -slot.1 * g.trail_sign as i32);
                continue 'outer;
            }
        }
        return two_terms(terms, order);
    }
}

fn s_polynomial(f: &Binomial, g: &Binomial) -> Vec<(ExpMonomial, i32)> {
    let l = f.lead.lcm(&g.lead);
    let uf = l.div(&f.lead);
    let ug = l.div(&g.lead);
    vec![
        (uf.mul(&f.trail), f.trail_sign as i32),
        (ug.mul(&g.trail), -(g.trail_sign as i32)),
    ]
}

#[derive(Default)]
struct Completion {
    basis: Vec<Binomial>,
    active: Vec<bool>,
    /// `done[i][j]`: the pair has been popped.
    done: Vec<Vec<bool>>,
    /// `(lcm degree, i, j)`, smallest first.
    pending: BinaryHeap<Reverse<(u32, usize, usize)>>,
}

impl Completion {
    fn insert(&mut self, h: Binomial) {
        let k = self.basis.len();
        for i in 0..k {
            if self.active[i] {
                let degree = self.basis[i].lead.lcm(&h.lead).degree();
                self.pending.push(Reverse((degree, i, k)));
                if h.lead.divides(&self.basis[i].lead) {
                    self.active[i] = false;
                }
            }
        }
        for row in self.done.iter_mut() {
            row.push(false);
        }
        self.done.push(vec![false; k + 1]);
        self.basis.push(h);
        self.active.push(true);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by descending lead.
///
/// Pairs are taken smallest lcm degree first. An element whose lead becomes
/// divisible by a newer lead is retired: it no longer reduces or forms new
/// pairs, though pairs already queued with it are still processed.
pub fn buchberger(gens: &[Binomial], order: TermOrder) -> Result<Vec<Binomial>, OracleError> {
    let mut state = Completion::default();
    for g in gens {
        let terms = vec![(g.lead.clone(), 1), (g.trail.clone(), g.trail_sign as i32)];
        if let Some(b) = two_terms(terms, order)? {
            state.insert(b);
        }
    }

    while let Some(Reverse((_, i, j))) = state.pending.pop() {
        let Completion { basis, active, done, .. } = &mut state;
        done[i][j] = true;
        done[j][i] = true;
        let (f, g) = (&basis[i], &basis[j]);
        if f.lead.is_coprime(&g.lead) {
            continue;
        }
        let l = f.lead.lcm(&g.lead);
        // chain criterion: some k with lead | lcm whose pairs with i and j are settled
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && done[i][k] && done[j][k] && basis[k].lead.divides(&l)
        });
        if chain {
            continue;
        }
        let reducers: Vec<&Binomial> =
            basis.iter().zip(active.iter()).filter(|(_, &a)| a).map(|(b, _)| b).collect();
        if let Some(h) = reduce(s_polynomial(f, g), &reducers, order)? {
            state.insert(h);
        }
    }

    let kept = state.basis.into_iter().zip(state.active).filter(|(_, a)| *a).map(|(b, _)| b).collect();
    interreduce(kept, order)
}

fn interreduce(basis: Vec<Binomial>, order: TermOrder) -> Result<Vec<Binomial>, OracleError> {
    let mut minimal: Vec<Binomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(m, h)| {
            m != k && h.lead.divides(&g.lead) && (h.lead != g.lead || m < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<Binomial> =
            minimal.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, h)| h.clone()).collect();
        let mut trail = (g.trail.clone(), g.trail_sign as i32);
        while let Some(h) = others.iter().find(|h| h.lead.divides(&trail.0)) {
            let q = trail.0.div(&h.lead);
            trail = (q.mul(&h.trail), -trail.1 * h.trail_sign as i32);
        }
        let bin = two_terms(vec![(g.lead.clone(), 1), trail], order)?
            .ok_or_else(|| OracleError::NonBinomialRemainder(format!("{g:?} collapsed")))?;
        if bin.lead != g.lead {
            return Err(OracleError::NonBinomialRemainder(format!("{g:?} lost its lead")));
        }
        reduced.push(bin);
    }
    reduced.sort_by(|a, b| order.cmp(&b.lead, &a.lead));
    Ok(reduced)
}

/// Checks that every S-pair of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Binomial], order: TermOrder) -> Result<bool, OracleError> {
    let reducers: Vec<&Binomial> = basis.iter().collect();
    for j in 0..basis.len() {
        for i in 0..j {
            if reduce(s_polynomial(&basis[i], &basis[j]), &reducers, order)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
