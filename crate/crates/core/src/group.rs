//! Finite groups given by multiplication tables.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is {rows}x? but there are {labels} labels")]
    Shape { rows: usize, labels: usize },
    #[error("row {row} of the table has length {len}, expected {order}")]
    RowLength { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({row},{col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("table is not a Latin square (row or column {0} repeats an element)")]
    NotLatin(usize),
    #[error("associativity fails at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("the group is empty")]
    Empty,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
}

/// A finite group on the elements `0..order`, with `table[i][j]` the index of `g_i·g_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table (Latin square, associativity, identity) and derives inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if let Some(dup) = labels.iter().duplicates().next() {
            return Err(GroupError::DuplicateLabel(dup.clone()));
        }
        if table.len() != n {
            return Err(GroupError::Shape { rows: table.len(), labels: n });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::RowLength { row: r, len: row.len(), order: n });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
        for i in 0..n {
            if !table[i].iter().all_unique() || !(0..n).map(|r| table[r][i]).all_unique() {
                return Err(GroupError::NotLatin(i));
            }
        }
        for (a, b, c) in itertools::iproduct!(0..n, 0..n, 0..n) {
            if table[table[a][b]][c] != table[a][table[b][c]] {
                return Err(GroupError::NotAssociative(a, b, c));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        // Latin rows guarantee a unique right inverse, which is two-sided by associativity.
        let inverses = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == identity).expect("Latin row contains identity"))
            .collect();
        Ok(FiniteGroup { labels, table, identity, inverses })
    }

    /// Cyclic group `{1, g, g², …}`; labels are `1`, `g`, `g2`, ….
    pub fn cyclic(n: usize, generator: &str) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::new(labels, table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        FiniteGroup::new(vec!["1".into()], vec![vec![0]]).expect("trivial group")
    }

    /// Symmetric group on `n` points, elements in lexicographic order of their one-line notation.
    ///
    /// Composition is `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Self {
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let labels = perms
            .iter()
            .map(|p| {
                if p.iter().enumerate().all(|(i, &x)| i == x) {
                    "1".to_string()
                } else {
                    format!("[{}]", p.iter().map(|x| x + 1).join(""))
                }
            })
            .collect();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&x| s[x]).collect()))
                    .collect()
            })
            .collect();
        FiniteGroup::new(labels, table).expect("symmetric group table")
    }

    /// Direct product with pairing `(i, j) ↦ i·|K| + j`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.order();
        let labels = iproduct_labels(&self.labels, &other.labels);
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::new(labels, table).expect("direct product of groups")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        itertools::iproduct!(0..self.order(), 0..self.order()).all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    /// All bijections `φ` with `φ(ab) = φ(a)φ(b)`, found by brute force; the first is returned.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let n = self.order();
        (0..n).permutations(n).find(|phi| {
            itertools::iproduct!(0..n, 0..n).all(|(a, b)| phi[self.mul(a, b)] == other.mul(phi[a], phi[b]))
        })
    }
}

fn iproduct_labels(a: &[String], b: &[String]) -> Vec<String> {
    itertools::iproduct!(a, b).map(|(x, y)| format!("({x},{y})")).collect()
}
