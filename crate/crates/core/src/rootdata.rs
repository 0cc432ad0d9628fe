//! Simply laced root data: Dynkin diagrams of types A, D and E.
//!
//! Node numbering:
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `D_n`: node 2 is the fork when `n = 4` (adjacent to 1, 3 and 4). For
//!   larger ranks the path `1 - 2 - ... - (n-2)` carries the fork at its
//!   high end, with `n-1` and `n` both attached to `n-2`. This agrees with
//!   the `D_4` labelling.
//! * `E_n` (`n` = 6, 7, 8): the path `1 - ... - (n-1)` with node `n`
//!   attached to node 3. For `E_6` this is the path `1..5` with 6 hanging
//!   off the middle.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised while building or querying a [`RootDatum`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("unsupported Dynkin type {family}{rank}")]
    UnsupportedType { family: String, rank: usize },
    #[error("node {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
}

/// Dynkin family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simply laced Dynkin diagram with 1-based node labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    // index 0 unused so that adjacency[i] is node i
    adjacency: Vec<Vec<usize>>,
}

impl RootDatum {
    /// Builds the datum for `(family, rank)`.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let unsupported = || RootDataError::UnsupportedType {
            family: family.letter().to_string(),
            rank,
        };
        let mut edges = Vec::new();
        match family {
            Family::A => {
                if rank < 1 {
                    return Err(unsupported());
                }
                edges.extend((1..rank).map(|i| (i, i + 1)));
            }
            Family::D => {
                if rank < 4 {
                    return Err(unsupported());
                }
                if rank == 4 {
                    edges.extend([(1, 2), (2, 3), (2, 4)]);
                } else {
                    edges.extend((1..rank - 2).map(|i| (i, i + 1)));
                    edges.push((rank - 2, rank - 1));
                    edges.push((rank - 2, rank));
                }
            }
            Family::E => {
                if !(6..=8).contains(&rank) {
                    return Err(unsupported());
                }
                edges.extend((1..rank - 1).map(|i| (i, i + 1)));
                edges.push((3, rank));
            }
        }

        let mut adjacency = vec![Vec::new(); rank + 1];
        let mut cartan = vec![vec![0; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(RootDatum {
            family,
            rank,
            cartan,
            adjacency,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix, 0-based rows and columns.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Cartan entry for 1-based nodes.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i32, RootDataError> {
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(self.cartan[i - 1][j - 1])
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn check_node(&self, i: usize) -> Result<(), RootDataError> {
        if i == 0 || i > self.rank {
            Err(RootDataError::NodeOutOfRange {
                node: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Neighbours of node `i` in ascending order.
    pub fn neighbors(&self, i: usize) -> Result<&[usize], RootDataError> {
        self.check_node(i)?;
        Ok(&self.adjacency[i])
    }

    /// Unchecked neighbour lookup for hot loops; `i` must be a valid node.
    pub(crate) fn adj(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.rank && self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Short name such as `D4`.
    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootDatum {
    type Err = RootDataError;

    /// Parses names like `A2`, `D4`, `e6` (case-insensitive family letter).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unsupported = || RootDataError::UnsupportedType {
            family: s.chars().next().map(String::from).unwrap_or_default(),
            rank: 0,
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(unsupported)?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            _ => {
                return Err(RootDataError::UnsupportedType {
                    family: letter.to_string(),
                    rank: chars.as_str().parse().unwrap_or(0),
                })
            }
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        RootDatum::new(family, rank)
    }
}
