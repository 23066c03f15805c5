//! Named graph families with fixed vertex labellings.
//!
//! | family | order | labelling |
//! |---|---|---|
//! | `path:n` | n | `0-1-..-(n-1)` |
//! | `cycle:n` | n | path plus `(n-1)-0` |
//! | `complete:n` | n | |
//! | `star:n` | n | hub `0`, leaves `1..n` |
//! | `wheel:n` | n | hub `0`, rim cycle on `1..n` |
//! | `barbell:n` | 2n | bells `0..n` and `n..2n`, bridge `0-n` |
//! | `horned:n` | 3n | clique `0..n`, horns `n+2i`, `n+2i+1` on `i` |
//! | `friendship:n` | 2n+1 | hub `0`, triangle `{0, 2i+1, 2i+2}` |
//! | `windmill:n,m` | m(n-1)+1 | hub `0`, `m` copies of `K_n` through it |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}; expected one of {names}", names = Family::NAMES.join(", "))]
    UnknownName(String),
    #[error("family {name} takes {expected} parameter(s), got {found}")]
    ParamCount { name: &'static str, expected: usize, found: usize },
    #[error("bad parameter {0:?}")]
    BadParam(String),
    #[error("{family} requires {requirement}")]
    OutOfRange { family: String, requirement: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    Barbell(usize),
    HornedComplete(usize),
    Friendship(usize),
    Windmill(usize, usize),
}

impl Family {
    pub const NAMES: [&'static str; 9] = [
        "path",
        "cycle",
        "complete",
        "star",
        "wheel",
        "barbell",
        "horned",
        "friendship",
        "windmill",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::Barbell(_) => "barbell",
            Family::HornedComplete(_) => "horned",
            Family::Friendship(_) => "friendship",
            Family::Windmill(..) => "windmill",
        }
    }

    /// Builds from a name and parameter list, checking parameter ranges.
    pub fn new(name: &str, params: &[usize]) -> Result<Self, FamilyError> {
        let one = |name: &'static str| -> Result<usize, FamilyError> {
            match params {
                [p] => Ok(*p),
                _ => Err(FamilyError::ParamCount { name, expected: 1, found: params.len() }),
            }
        };
        let family = match name {
            "path" => Family::Path(one("path")?),
            "cycle" => Family::Cycle(one("cycle")?),
            "complete" => Family::Complete(one("complete")?),
            "star" => Family::Star(one("star")?),
            "wheel" => Family::Wheel(one("wheel")?),
            "barbell" => Family::Barbell(one("barbell")?),
            "horned" | "horned_complete" => Family::HornedComplete(one("horned")?),
            "friendship" => Family::Friendship(one("friendship")?),
            "windmill" => match params {
                [n, m] => Family::Windmill(*n, *m),
                _ => {
                    return Err(FamilyError::ParamCount {
                        name: "windmill",
                        expected: 2,
                        found: params.len(),
                    })
                }
            },
            other => return Err(FamilyError::UnknownName(other.to_string())),
        };
        family.check()?;
        Ok(family)
    }

    fn check(&self) -> Result<(), FamilyError> {
        let requirement = match *self {
            Family::Path(n) | Family::Complete(n) | Family::Star(n) if n < 1 => "n >= 1",
            Family::HornedComplete(n) | Family::Friendship(n) if n < 1 => "n >= 1",
            Family::Cycle(n) if n < 3 => "n >= 3",
            Family::Wheel(n) if n < 4 => "n >= 4",
            Family::Barbell(n) if n < 3 => "n >= 3",
            Family::Windmill(n, m) if n < 2 || m < 1 => "n >= 2 and m >= 1",
            _ => return Ok(()),
        };
        Err(FamilyError::OutOfRange { family: self.to_string(), requirement })
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Wheel(n) => n,
            Family::Barbell(n) => 2 * n,
            Family::HornedComplete(n) => 3 * n,
            Family::Friendship(n) => 2 * n + 1,
            Family::Windmill(n, m) => m * (n - 1) + 1,
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.check()?;
        let mut g = Graph::empty(self.order())?;
        let clique = |g: &mut Graph, verts: &[usize]| -> Result<(), GraphError> {
            for (k, &u) in verts.iter().enumerate() {
                for &v in &verts[k + 1..] {
                    g.add_edge(u, v)?;
                }
            }
            Ok(())
        };
        match *self {
            Family::Path(n) => {
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
            }
            Family::Cycle(n) => {
                for v in 0..n {
                    g.add_edge(v, (v + 1) % n)?;
                }
            }
            Family::Complete(n) => clique(&mut g, &(0..n).collect::<Vec<_>>())?,
            Family::Star(n) => {
                for v in 1..n {
                    g.add_edge(0, v)?;
                }
            }
            Family::Wheel(n) => {
                let rim = n - 1;
                for k in 0..rim {
                    g.add_edge(0, k + 1)?;
                    g.add_edge(k + 1, (k + 1) % rim + 1)?;
                }
            }
            Family::Barbell(n) => {
                clique(&mut g, &(0..n).collect::<Vec<_>>())?;
                clique(&mut g, &(n..2 * n).collect::<Vec<_>>())?;
                g.add_edge(0, n)?;
            }
            Family::HornedComplete(n) => {
                clique(&mut g, &(0..n).collect::<Vec<_>>())?;
                for i in 0..n {
                    g.add_edge(i, n + 2 * i)?;
                    g.add_edge(i, n + 2 * i + 1)?;
                }
            }
            Family::Friendship(n) => {
                for i in 0..n {
                    clique(&mut g, &[0, 2 * i + 1, 2 * i + 2])?;
                }
            }
            Family::Windmill(n, m) => {
                for b in 0..m {
                    let mut blade = vec![0];
                    blade.extend(1 + b * (n - 1)..1 + (b + 1) * (n - 1));
                    clique(&mut g, &blade)?;
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Wheel(n)
            | Family::Barbell(n)
            | Family::HornedComplete(n)
            | Family::Friendship(n) => write!(f, "{}:{}", self.name(), n),
            Family::Windmill(n, m) => write!(f, "windmill:{n},{m}"),
        }
    }
}

/// Parses `name:p1[,p2]`, e.g. `star:6` or `windmill:4,3`.
impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| FamilyError::BadParam(p.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Family::new(name, &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    #[test]
    fn sizes_follow_conventions() {
        let s6 = Family::Star(6).build().unwrap();
        assert_eq!((s6.order(), s6.edge_count(), s6.degree(0)), (6, 5, 5));
        let b5 = Family::Barbell(5).build().unwrap();
        assert_eq!((b5.order(), b5.edge_count()), (10, 2 * binom2(5) + 1));
        let h4 = Family::HornedComplete(4).build().unwrap();
        assert_eq!((h4.order(), h4.edge_count()), (12, binom2(4) + 8));
        let w6 = Family::Wheel(6).build().unwrap();
        assert_eq!((w6.order(), w6.edge_count()), (6, 10));
        let f4 = Family::Friendship(4).build().unwrap();
        assert_eq!((f4.order(), f4.edge_count()), (9, 12));
        let wm = Family::Windmill(4, 3).build().unwrap();
        assert_eq!((wm.order(), wm.edge_count()), (10, 3 * binom2(4)));
        assert_eq!(Family::Windmill(3, 4).build().unwrap(), Family::Friendship(4).build().unwrap());
    }

    #[test]
    fn every_family_member_is_connected() {
        let all = [
            Family::Path(5),
            Family::Cycle(5),
            Family::Complete(5),
            Family::Star(5),
            Family::Wheel(5),
            Family::Barbell(3),
            Family::HornedComplete(3),
            Family::Friendship(3),
            Family::Windmill(3, 2),
        ];
        for f in all {
            assert!(f.build().unwrap().is_connected(), "{f}");
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("star:6".parse::<Family>(), Ok(Family::Star(6)));
        assert_eq!("windmill:4,3".parse::<Family>(), Ok(Family::Windmill(4, 3)));
        assert_eq!("horned_complete:2".parse::<Family>(), Ok(Family::HornedComplete(2)));
        assert_eq!(Family::Windmill(4, 3).to_string(), "windmill:4,3");
        assert!(matches!("kite:3".parse::<Family>(), Err(FamilyError::UnknownName(_))));
        assert!(matches!("star".parse::<Family>(), Err(FamilyError::ParamCount { .. })));
        assert!(matches!("star:x".parse::<Family>(), Err(FamilyError::BadParam(_))));
    }

    #[test]
    fn range_checks() {
        for bad in ["wheel:3", "barbell:2", "cycle:2", "star:0", "windmill:1,3", "windmill:3,0"] {
            assert!(
                matches!(bad.parse::<Family>(), Err(FamilyError::OutOfRange { .. })),
                "{bad}"
            );
        }
    }
}
