//! Sparse polynomials in `t1, t2` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("component size must be positive, got {0}")]
    NonPositiveSize(i64),
    #[error("negative coefficient {coeff} on t1^{i} t2^{j} where a multidegree was expected")]
    NegativeCoefficient { i: u32, j: u32, coeff: BigInt },
    #[error("bad coefficient string {0:?}")]
    BadCoefficient(String),
}

/// `(t1-degree, t2-degree)`.
pub type Exponent = (u32, u32);

/// A polynomial in `Z[t1, t2]`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(1, 0, 0)
    }

    pub fn t1() -> Self {
        BiPoly::monomial(1, 1, 0)
    }

    pub fn t2() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    /// `c * t1^i * t2^j`.
    pub fn monomial<C: Into<BigInt>>(c: C, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term((i, j), c.into());
        p
    }

    /// Collects `(i, j, c)` triples, summing repeated exponents.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (u32, u32, C)>,
    {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), c.into());
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in display order: descending t1-degree, then descending t2-degree.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut result = BiPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `(t1^n - t2^n) / (t1 - t2) = sum_{i+j=n-1} t1^i t2^j`, the multidegree of `J_{K_n}`.
    pub fn h_poly(n: i64) -> Result<BiPoly, PolyError> {
        if n <= 0 {
            return Err(PolyError::NonPositiveSize(n));
        }
        let d = (n - 1) as u32;
        Ok(BiPoly::from_terms((0..=d).map(|i| (i, d - i, 1))))
    }

    /// `P(1 - t1, 1 - t2)`.
    pub fn substitute_one_minus(&self) -> BiPoly {
        let max_deg = self.terms.keys().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
        let rows = binomial_rows(max_deg);
        // (1 - t)^k = sum_a C(k, a) (-1)^a t^a
        let expand = |k: u32| -> Vec<BigInt> {
            rows[k as usize]
                .iter()
                .enumerate()
                .map(|(a, c)| if a % 2 == 1 { -c.clone() } else { c.clone() })
                .collect()
        };
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let xs = expand(i);
            let ys = expand(j);
            for (a, xa) in xs.iter().enumerate() {
                let cx = c * xa;
                for (b, yb) in ys.iter().enumerate() {
                    out.add_term((a as u32, b as u32), &cx * yb);
                }
            }
        }
        out
    }

    /// Smallest total degree present and the homogeneous part at that degree.
    pub fn lowest_total_degree_part(&self) -> Result<(u32, BiPoly), PolyError> {
        let d = self.terms.keys().map(|&(i, j)| i + j).min().ok_or(PolyError::ZeroPolynomial)?;
        let part = BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        };
        Ok((d, part))
    }

    /// Total degree if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(i, j)| i + j);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(i, j), c)| self.terms.get(&(j, i)) == Some(c))
    }

    /// True iff every coefficient is 1. Negative coefficients are an error:
    /// multidegrees have nonnegative coefficients.
    pub fn is_multiplicity_free(&self) -> Result<bool, PolyError> {
        self.check_nonnegative()?;
        Ok(self.terms.values().all(One::is_one))
    }

    pub fn check_nonnegative(&self) -> Result<(), PolyError> {
        match self.terms.iter().find(|(_, c)| c.is_negative()) {
            Some((&(i, j), c)) => Err(PolyError::NegativeCoefficient { i, j, coeff: c.clone() }),
            None => Ok(()),
        }
    }

    /// Coefficient of the term with the largest t1-degree.
    pub fn leading_coefficient(&self) -> Result<BigInt, PolyError> {
        self.terms.values().next_back().cloned().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn eval(&self, a: i64, b: i64) -> BigInt {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(a.clone(), i as usize) * num_traits::pow(b.clone(), j as usize))
            .sum()
    }

    /// Swaps `t1` and `t2`.
    pub fn swapped(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    /// LaTeX rendering, e.g. `t_1^2 + 2t_1t_2 + t_2^2`.
    pub fn to_latex(&self) -> String {
        self.render(|v, e| match e {
            1 => format!("t_{v}"),
            e if e < 10 => format!("t_{v}^{e}"),
            e => format!("t_{v}^{{{e}}}"),
        })
    }

    fn render(&self, var: impl Fn(u32, u32) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, ((i, j), c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mut body = String::new();
            if i > 0 {
                body.push_str(&var(1, i));
            }
            if j > 0 {
                body.push_str(&var(2, j));
            }
            if body.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&body);
        }
        out
    }
}

/// Rows `0..=n` of Pascal's triangle.
pub(crate) fn binomial_rows(n: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=n as usize {
        let prev = &rows[k - 1];
        let mut row = vec![BigInt::one(); k + 1];
        for a in 1..k {
            row[a] = &prev[a - 1] + &prev[a];
        }
        rows.push(row);
    }
    rows
}

/// Exact `C(n, k)`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, a| acc * (n - a) / (a + 1))
}

impl fmt::Display for BiPoly {
    /// Plain text, e.g. `t1^2 + 2t1t2 + t2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|v, e| if e == 1 { format!("t{v}") } else { format!("t{v}^{e}") }))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * &p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    i: u32,
    j: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

/// `{"terms":[{"i":2,"j":0,"c":"1"}, ..]}` in display order; coefficients are decimal strings.
impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self.terms().map(|((i, j), c)| TermRepr { i, j, c: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut p = BiPoly::zero();
        for t in repr.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| serde::de::Error::custom(PolyError::BadCoefficient(t.c.clone())))?;
            p.add_term((t.i, t.j), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn binomial_square() {
        let s = (&BiPoly::t1() + &BiPoly::t2()).pow(2);
        assert_eq!(s, p(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)]));
        assert_eq!(&s * &BiPoly::one(), s);
        assert_eq!(s.pow(0), BiPoly::one());
    }

    #[test]
    fn path_power_has_binomial_coefficients() {
        let s = BiPoly::t1() + BiPoly::t2();
        for n in 1..15u32 {
            let q = s.pow(n - 1);
            for i in 0..n {
                assert_eq!(q.coeff(i, n - 1 - i), binomial(n - 1, i));
            }
        }
    }

    #[test]
    fn h_poly_values() {
        assert_eq!(BiPoly::h_poly(1).unwrap(), BiPoly::one());
        assert_eq!(BiPoly::h_poly(3).unwrap(), p(&[(2, 0, 1), (1, 1, 1), (0, 2, 1)]));
        assert_eq!(BiPoly::h_poly(0), Err(PolyError::NonPositiveSize(0)));
        assert!(BiPoly::h_poly(-2).is_err());
        for n in 1..20 {
            let h = BiPoly::h_poly(n).unwrap();
            assert_eq!(h.eval(1, 1), BigInt::from(n));
            assert_eq!(h.homogeneous_degree(), Some(n as u32 - 1));
            assert_eq!(h.len(), n as usize);
            assert!(h.is_symmetric());
        }
    }

    #[test]
    fn substitution() {
        assert_eq!(BiPoly::one().substitute_one_minus(), BiPoly::one());
        let k = p(&[(0, 0, 1), (1, 1, -1)]);
        assert_eq!(k.substitute_one_minus(), p(&[(1, 0, 1), (0, 1, 1), (1, 1, -1)]));
        for n in 1..8u32 {
            let (d, low) = k.pow(n - 1).substitute_one_minus().lowest_total_degree_part().unwrap();
            assert_eq!(d, n - 1);
            assert_eq!(low, (BiPoly::t1() + BiPoly::t2()).pow(n - 1));
        }
    }

    #[test]
    fn lowest_part() {
        let q = p(&[(1, 0, 1), (0, 1, 1), (1, 1, -1)]);
        assert_eq!(q.lowest_total_degree_part().unwrap(), (1, p(&[(1, 0, 1), (0, 1, 1)])));
        let h = BiPoly::h_poly(4).unwrap();
        assert_eq!(h.lowest_total_degree_part().unwrap(), (3, h.clone()));
        assert_eq!(BiPoly::zero().lowest_total_degree_part(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn flags() {
        let h5 = BiPoly::h_poly(5).unwrap();
        assert_eq!(h5.is_multiplicity_free(), Ok(true));
        assert_eq!(h5.leading_coefficient(), Ok(BigInt::one()));
        for n in 1..7u32 {
            let horned = p(&[(n + 1, n - 1, n as i64), (n, n, n as i64 + 1), (n - 1, n + 1, n as i64)]);
            assert_eq!(horned.leading_coefficient(), Ok(BigInt::from(n)));
        }
        assert_eq!(BiPoly::zero().leading_coefficient(), Err(PolyError::ZeroPolynomial));
        assert!(matches!(
            p(&[(1, 0, -1)]).is_multiplicity_free(),
            Err(PolyError::NegativeCoefficient { .. })
        ));
        assert_eq!(p(&[(1, 0, 2)]).is_multiplicity_free(), Ok(false));
        assert!(!p(&[(1, 0, 2), (0, 1, 1)]).is_symmetric());
    }

    #[test]
    fn barbell_three_evaluates_to_eighteen() {
        let b3 = p(&[(5, 0, 1), (4, 1, 3), (3, 2, 5), (2, 3, 5), (1, 4, 3), (0, 5, 1)]);
        assert_eq!(b3.eval(1, 1), BigInt::from(18));
        assert_eq!(b3.eval(2, -1), BigInt::from(32 - 48 + 40 - 20 + 6 - 1));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(4, 1, 3)]).to_latex(), "3t_1^4t_2");
        assert_eq!(p(&[(1, 1, 1)]).to_latex(), "t_1t_2");
        assert_eq!(p(&[(12, 0, 1)]).to_latex(), "t_1^{12}");
        let s = (BiPoly::t1() + BiPoly::t2()).pow(2);
        assert_eq!(s.to_string(), "t1^2 + 2t1t2 + t2^2");
        assert_eq!(s.to_latex(), "t_1^2 + 2t_1t_2 + t_2^2");
        assert_eq!(p(&[(0, 0, 1), (1, 1, -1)]).to_string(), "-t1t2 + 1");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let q = p(&[(1, 0, 3), (0, 1, -2)]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"terms":[{"i":1,"j":0,"c":"3"},{"i":0,"j":1,"c":"-2"}]}"#);
        assert_eq!(serde_json::from_str::<BiPoly>(&s).unwrap(), q);
        assert!(serde_json::from_str::<BiPoly>(r#"{"terms":[{"i":0,"j":0,"c":"x"}]}"#).is_err());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = (BiPoly::t1() + BiPoly::t2()).pow(80);
        assert_eq!(big.coeff(40, 40), binomial(80, 40));
        assert!(big.coeff(40, 40) > BigInt::from(u64::MAX));
    }
}
