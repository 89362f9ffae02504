use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when their Young diagrams coincide. The empty partition
/// labels the trivial representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-column partition (1^k).
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(rows: usize, width: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row `i` (zero-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.first_row())
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)` in row-major order, zero-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook lengths, in the same order as [`Partition::cells`].
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| (self.parts[i] - j) + (conj.parts[j] - i) - 1)
            .collect()
    }

    /// Drop every full column of height `n`.
    ///
    /// Tensoring with the determinant is trivial on SL_n, so γ_n^λ and the
    /// reduced partition label the same representation.
    pub fn determinant_reduced(&self, n: usize) -> Partition {
        if n == 0 || self.len() < n {
            return self.clone();
        }
        let shift = self.parts[n - 1];
        let parts = self.parts.iter().map(|&p| p - shift).collect();
        Partition::new(parts).expect("subtracting a constant keeps parts decreasing")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `2,2,2`, optionally wrapped in parentheses. An empty string or
/// `()` gives the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::PartitionSyntax {
                        input: s.to_string(),
                        reason: format!("{tok:?}: {e}"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::PartitionSyntax {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2, 2]).conjugate(), p(&[3, 3]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[0]), Partition::empty());
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn parses_cli_syntax() {
        assert_eq!("2,2,2".parse::<Partition>().unwrap(), p(&[2, 2, 2]));
        assert_eq!("(2, 1,1)".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
    }

    #[test]
    fn hooks_of_staircase() {
        // (3,2,1): hooks 5 3 1 / 3 1 / 1
        assert_eq!(p(&[3, 2, 1]).hooks(), vec![5, 3, 1, 3, 1, 1]);
    }

    #[test]
    fn determinant_reduction() {
        assert_eq!(p(&[3, 2, 2]).determinant_reduced(3), p(&[1]));
        assert_eq!(p(&[1, 1, 1]).determinant_reduced(3), Partition::empty());
        assert_eq!(p(&[3, 3]).determinant_reduced(9), p(&[3, 3]));
    }

    #[test]
    fn display_matches_table_notation() {
        assert_eq!(p(&[2, 1, 1]).to_string(), "(2,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }
}
