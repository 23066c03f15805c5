use super::monomial::ExpMonomial;
use crate::bipoly::BiPoly;

/// Monomial ideal kept as its minimal generating set, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealRep {
    generators: Vec<ExpMonomial>,
    nvars: usize,
}

impl MonomialIdealRep {
    /// Drops redundant generators. `nvars` must match every generator's length.
    pub fn new(nvars: usize, gens: Vec<ExpMonomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdealRep { generators: minimalize(gens), nvars }
    }

    pub fn generators(&self) -> &[ExpMonomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }
}

fn minimalize(mut gens: Vec<ExpMonomial>) -> Vec<ExpMonomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExpMonomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

fn weight(m: &ExpMonomial) -> BiPoly {
    let (a, b) = m.bidegree();
    BiPoly::monomial(1, a, b)
}

/// `1 - t^deg(m)`.
fn one_minus(m: &ExpMonomial) -> BiPoly {
    &BiPoly::one() - &weight(m)
}

/// Numerator of the bigraded Hilbert series of `T / I` over
/// `(1 - t1)^n (1 - t2)^n`.
///
/// Pivots on a variable `x`: `K(I) = K(I + (x)) + t^deg(x) K(I : x)`.
/// Generators whose support meets no other generator split off as
/// `1 - t^deg(g)` factors, which also covers the base cases.
pub fn k_polynomial(ideal: &MonomialIdealRep) -> BiPoly {
    kpoly(ideal.generators.clone(), ideal.nvars)
}

fn kpoly(gens: Vec<ExpMonomial>, nvars: usize) -> BiPoly {
    if gens.is_empty() {
        return BiPoly::one();
    }
    if gens.iter().any(ExpMonomial::is_one) {
        return BiPoly::zero();
    }

    let supports: Vec<u64> = gens.iter().map(ExpMonomial::support).collect();
    let mut factor = BiPoly::one();
    let mut tangled = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let alone = supports.iter().enumerate().all(|(m, s)| m == k || s & supports[k] == 0);
        if alone {
            factor = &factor * &one_minus(g);
        } else {
            tangled.push(k);
        }
    }
    if tangled.is_empty() {
        return factor;
    }

    let mut counts = vec![0usize; nvars];
    for &k in &tangled {
        for (v, &e) in gens[k].exponents().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    // most frequent variable, lowest index on ties
    let pivot = (0..nvars).fold(0, |best, v| if counts[v] > counts[best] { v } else { best });
    let x = ExpMonomial::variable(nvars, pivot);

    let rest: Vec<ExpMonomial> = tangled.iter().map(|&k| gens[k].clone()).collect();
    let without: Vec<ExpMonomial> =
        rest.iter().filter(|g| g.exponents()[pivot] == 0).cloned().collect();
    let colon = minimalize(rest.iter().map(|g| g.colon_variable(pivot)).collect());

    // I + (x) = (x) + (gens free of x), a variable-disjoint sum
    let plus = &one_minus(&x) * &kpoly(without, nvars);
    let quotient = &weight(&x) * &kpoly(colon, nvars);
    &factor * &(&plus + &quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> ExpMonomial {
        ExpMonomial::from_exponents(exps.to_vec())
    }

    fn p(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_and_principal() {
        assert_eq!(k_polynomial(&MonomialIdealRep::new(4, vec![])), BiPoly::one());
        // x1 y2 in k[x1, x2, y1, y2]
        let i = MonomialIdealRep::new(4, vec![m(&[1, 0, 0, 1])]);
        assert_eq!(k_polynomial(&i), p(&[(0, 0, 1), (1, 1, -1)]));
        assert_eq!(k_polynomial(&MonomialIdealRep::new(2, vec![m(&[0, 0])])), BiPoly::zero());
    }

    #[test]
    fn overlapping_generators_by_inclusion_exclusion() {
        // (x1 y1, x1 y2): 1 - 2 t1 t2 + t1 t2^2
        let i = MonomialIdealRep::new(4, vec![m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1])]);
        assert_eq!(k_polynomial(&i), p(&[(0, 0, 1), (1, 1, -2), (1, 2, 1)]));
        // (x1^2, x1 y1): 1 - t1^2 - t1 t2 + t1^2 t2
        let i = MonomialIdealRep::new(2, vec![m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(k_polynomial(&i), p(&[(0, 0, 1), (2, 0, -1), (1, 1, -1), (2, 1, 1)]));
    }

    #[test]
    fn minimal_generators() {
        let i = MonomialIdealRep::new(2, vec![m(&[1, 1]), m(&[1, 0]), m(&[1, 0]), m(&[2, 3])]);
        assert_eq!(i.generators(), &[m(&[1, 0])]);
        assert!(i.is_squarefree());
    }

    #[test]
    fn generator_order_is_irrelevant() {
        let gens = vec![m(&[1, 1, 0, 0, 1, 0]), m(&[0, 1, 1, 1, 0, 0]), m(&[1, 0, 0, 0, 1, 1]), m(&[0, 0, 1, 1, 1, 0])];
        let a = k_polynomial(&MonomialIdealRep::new(6, gens.clone()));
        let mut rev = gens;
        rev.reverse();
        assert_eq!(a, k_polynomial(&MonomialIdealRep::new(6, rev)));
    }
}
