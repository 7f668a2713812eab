//! Strict avalanche criterion and bit independence criterion.

use serde::{Deserialize, Serialize};

use super::walsh::{nonlinearity, BooleanFunction};
use super::table_bits;
use crate::rational::{self, Rational};

/// Dependency matrix: `entries[i][j]` is the probability that output bit `j`
/// flips when input bit `i` is complemented, over all inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SacMatrix {
    #[serde(with = "rational::serde_exact_matrix")]
    pub entries: Vec<Vec<Rational>>,
    #[serde(with = "rational::serde_exact")]
    pub mean: Rational,
}

impl SacMatrix {
    pub fn from_table(table: &[u8]) -> Self {
        let n = table_bits(table);
        let size = table.len() as u64;
        let mut counts = vec![vec![0u64; n]; n];
        for (i, row) in counts.iter_mut().enumerate() {
            for x in 0..table.len() {
                let diff = table[x] ^ table[x ^ (1 << i)];
                for (j, c) in row.iter_mut().enumerate() {
                    *c += ((diff >> j) & 1) as u64;
                }
            }
        }
        let total: u64 = counts.iter().flatten().sum();
        let entries = counts
            .iter()
            .map(|row| row.iter().map(|&c| Rational::new(c, size)).collect())
            .collect();
        SacMatrix {
            entries,
            mean: Rational::new(total, size * (n * n) as u64),
        }
    }

    /// Smallest and largest entry.
    pub fn range(&self) -> (Rational, Rational) {
        let flat = self.entries.iter().flatten();
        let min = *flat.clone().min().expect("non-empty matrix");
        let max = *flat.max().expect("non-empty matrix");
        (min, max)
    }
}

/// BIC nonlinearity matrix: cell `(j, k)` is the nonlinearity of `f_j ⊕ f_k`, diagonal 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicNonlinearity {
    pub matrix: Vec<Vec<u32>>,
    #[serde(with = "rational::serde_exact")]
    pub average: Rational,
    pub min: u32,
}

impl BicNonlinearity {
    #[allow(clippy::needless_range_loop)]
    pub fn from_table(table: &[u8]) -> Self {
        let n = table_bits(table);
        let mut matrix = vec![vec![0u32; n]; n];
        for j in 0..n {
            for k in (j + 1)..n {
                let g = BooleanFunction::component(table, (1u8 << j) | (1u8 << k));
                let nl = nonlinearity(&g);
                matrix[j][k] = nl;
                matrix[k][j] = nl;
            }
        }
        let off_diagonal = || {
            matrix
                .iter()
                .enumerate()
                .flat_map(|(j, row)| row.iter().enumerate().filter(move |(k, _)| *k != j))
                .map(|(_, &v)| v)
        };
        let cells = (n * (n - 1)) as u64;
        let sum: u64 = off_diagonal().map(u64::from).sum();
        let min = off_diagonal().min().unwrap_or(0);
        BicNonlinearity {
            matrix,
            average: Rational::new(sum, cells.max(1)),
            min,
        }
    }

    /// The off-diagonal values, row-major.
    pub fn off_diagonal(&self) -> Vec<u32> {
        self.matrix
            .iter()
            .enumerate()
            .flat_map(|(j, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |(k, _)| *k != j)
                    .map(|(_, &v)| v)
            })
            .collect()
    }
}

/// Avalanche mean of one Boolean function: average over input bits of its flip probability.
pub fn boolean_sac_mean(g: &BooleanFunction) -> Rational {
    let n = g.vars() as usize;
    let flips: u64 = (0..n)
        .map(|i| (0..g.len()).filter(|&x| g.eval(x) != g.eval(x ^ (1 << i))).count() as u64)
        .sum();
    Rational::new(flips, (n * g.len()) as u64)
}

/// BIC avalanche matrix: cell `(j, k)` is the SAC mean of `f_j ⊕ f_k`, diagonal 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicSac {
    #[serde(with = "rational::serde_exact_matrix")]
    pub matrix: Vec<Vec<Rational>>,
}

impl BicSac {
    #[allow(clippy::needless_range_loop)]
    pub fn from_table(table: &[u8]) -> Self {
        let n = table_bits(table);
        let mut matrix = vec![vec![Rational::from_integer(0); n]; n];
        for j in 0..n {
            for k in (j + 1)..n {
                let g = BooleanFunction::component(table, (1u8 << j) | (1u8 << k));
                let v = boolean_sac_mean(&g);
                matrix[j][k] = v;
                matrix[k][j] = v;
            }
        }
        BicSac { matrix }
    }
}
