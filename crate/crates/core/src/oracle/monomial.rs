use std::cmp::Ordering;
use std::fmt;

/// Monomial in `x_1..x_n, y_1..y_n`, stored as `2n` exponents with the
/// `x` block first. Under the bigrading every `x` has degree `(1, 0)` and
/// every `y` degree `(0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpMonomial {
    exps: Vec<u16>,
}

impl ExpMonomial {
    pub fn one(nvars: usize) -> Self {
        ExpMonomial { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        debug_assert!(exps.len().is_multiple_of(2), "variables come in x/y pairs");
        ExpMonomial { exps }
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = ExpMonomial::one(nvars);
        m.exps[var] = 1;
        m
    }

    /// `x_i * y_j` (0-indexed vertices) in a ring over `n` vertices.
    pub fn xy(n: usize, i: usize, j: usize) -> Self {
        let mut m = ExpMonomial::one(2 * n);
        m.exps[i] += 1;
        m.exps[n + j] += 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// `(x-degree, y-degree)`.
    pub fn bidegree(&self) -> (u32, u32) {
        let half = self.exps.len() / 2;
        let sum = |s: &[u16]| s.iter().map(|&e| e as u32).sum();
        (sum(&self.exps[..half]), sum(&self.exps[half..]))
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of variables with positive exponent; `nvars <= 64`.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (v, _)| m | 1u64 << v)
    }

    pub fn divides(&self, other: &ExpMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExpMonomial) -> ExpMonomial {
        ExpMonomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &ExpMonomial) -> ExpMonomial {
        debug_assert!(other.divides(self));
        ExpMonomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &ExpMonomial) -> ExpMonomial {
        ExpMonomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &ExpMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self : x_var`, lowering that exponent by one if positive.
    pub fn colon_variable(&self, var: usize) -> ExpMonomial {
        let mut m = self.clone();
        m.exps[var] = m.exps[var].saturating_sub(1);
        m
    }
}

impl fmt::Debug for ExpMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.exps.len() / 2;
        let mut wrote = false;
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (name, idx) = if v < half { ('x', v + 1) } else { ('y', v - half + 1) };
            write!(f, "{name}{idx}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Monomial orders with variables ranked `x_1 > .. > x_n > y_1 > .. > y_n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TermOrder {
    #[default]
    Lex,
    DegRevLex,
}

impl TermOrder {
    pub fn cmp(self, a: &ExpMonomial, b: &ExpMonomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // smaller exponent on the last differing variable is larger
                a.exps
                    .iter()
                    .zip(&b.exps)
                    .rev()
                    .find(|(x, y)| x != y)
                    .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_binomial_leads() {
        let n = 3;
        // x1 y2 vs x2 y1
        let a = ExpMonomial::xy(n, 0, 1);
        let b = ExpMonomial::xy(n, 1, 0);
        assert_eq!(TermOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // y2 is the last variable where they differ and only `a` uses it
        assert_eq!(TermOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(a.bidegree(), (1, 1));
        assert_eq!(format!("{a:?}"), "x1y2");
    }

    #[test]
    fn drl_prefers_degree() {
        let x3 = ExpMonomial::variable(6, 2);
        let x1x1 = ExpMonomial::from_exponents(vec![2, 0, 0, 0, 0, 0]);
        assert_eq!(TermOrder::DegRevLex.cmp(&x1x1, &x3), Ordering::Greater);
        assert_eq!(TermOrder::Lex.cmp(&x1x1, &x3), Ordering::Greater);
        let x3x3x3 = ExpMonomial::from_exponents(vec![0, 0, 3, 0, 0, 0]);
        assert_eq!(TermOrder::DegRevLex.cmp(&x3x3x3, &x1x1), Ordering::Greater);
        assert_eq!(TermOrder::Lex.cmp(&x3x3x3, &x1x1), Ordering::Less);
    }

    #[test]
    fn arithmetic() {
        let a = ExpMonomial::from_exponents(vec![1, 2, 0, 1]);
        let b = ExpMonomial::from_exponents(vec![0, 1, 1, 0]);
        assert_eq!(a.lcm(&b).exponents(), &[1, 2, 1, 1]);
        assert!(b.colon_variable(2).divides(&a));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.mul(&b).div(&b), a);
        assert_eq!(a.support(), 0b1011);
    }
}
