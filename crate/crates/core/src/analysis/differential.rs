use super::table_bits;
use crate::rational::Rational;

/// Difference distribution table: `counts[dx][dy] = #{x : S(x) ⊕ S(x ⊕ dx) = dy}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceDistributionTable {
    counts: Vec<Vec<u32>>,
    max_du: u32,
}

impl DifferenceDistributionTable {
    pub fn from_table(table: &[u8]) -> Self {
        table_bits(table);
        let size = table.len();
        let mut counts = vec![vec![0u32; size]; size];
        for (dx, row) in counts.iter_mut().enumerate() {
            for x in 0..size {
                row[(table[x] ^ table[x ^ dx]) as usize] += 1;
            }
        }
        let max_du = counts[1..]
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0);
        DifferenceDistributionTable { counts, max_du }
    }

    pub fn counts(&self) -> &[Vec<u32>] {
        &self.counts
    }

    pub fn get(&self, dx: usize, dy: usize) -> u32 {
        self.counts[dx][dy]
    }

    /// Largest count over nonzero input differences.
    pub fn max_du(&self) -> u32 {
        self.max_du
    }

    /// `max_du / 2^n`.
    pub fn max_probability(&self) -> Rational {
        Rational::new(self.max_du as u64, self.counts.len() as u64)
    }

    /// Every `(dx, dy)` with `dx != 0` attaining [`Self::max_du`].
    pub fn argmax(&self) -> Vec<(usize, usize)> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .flat_map(|(dx, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c == self.max_du)
                    .map(move |(dy, _)| (dx, dy))
            })
            .collect()
    }
}
