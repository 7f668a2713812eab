use super::table_bits;
use super::walsh::fwht;
use crate::rational::Rational;

/// Linear approximation table: `counts[a][b] = #{x : x·a = S(x)·b}`.
///
/// Each column `b` is derived from the Walsh spectrum of the component
/// `x -> S(x)·b`: `count = (2^n + W(a)) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearApproximationTable {
    counts: Vec<Vec<u32>>,
    max_deviation: u32,
}

impl LinearApproximationTable {
    #[allow(clippy::needless_range_loop)]
    pub fn from_table(table: &[u8]) -> Self {
        table_bits(table);
        let size = table.len();
        let mut counts = vec![vec![0u32; size]; size];
        let mut spectrum = vec![0i32; size];
        for out_mask in 0..size {
            for (s, &y) in spectrum.iter_mut().zip(table) {
                *s = if (y as usize & out_mask).count_ones() & 1 == 1 { -1 } else { 1 };
            }
            fwht(&mut spectrum);
            for (in_mask, &w) in spectrum.iter().enumerate() {
                counts[in_mask][out_mask] = ((size as i32 + w) / 2) as u32;
            }
        }
        let half = (size / 2) as u32;
        let max_deviation = counts
            .iter()
            .flat_map(|row| row[1..].iter())
            .map(|&c| c.abs_diff(half))
            .max()
            .unwrap_or(0);
        LinearApproximationTable {
            counts,
            max_deviation,
        }
    }

    pub fn counts(&self) -> &[Vec<u32>] {
        &self.counts
    }

    pub fn get(&self, in_mask: usize, out_mask: usize) -> u32 {
        self.counts[in_mask][out_mask]
    }

    /// `max |count − 2^(n−1)|` over all input masks and nonzero output masks.
    pub fn max_deviation(&self) -> u32 {
        self.max_deviation
    }

    /// Nonlinearity over all nonzero component functions, `2^(n−1) − max_deviation`.
    /// Unlike the per-coordinate minimum, this is invariant under affine maps on
    /// either side.
    pub fn nonlinearity(&self) -> u32 {
        (self.counts.len() / 2) as u32 - self.max_deviation
    }

    /// Largest raw count over nonzero output masks.
    pub fn max_count(&self) -> u32 {
        self.counts
            .iter()
            .flat_map(|row| row[1..].iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// `max |count / 2^n − 1/2|`, the reported linear approximation probability.
    pub fn max_bias(&self) -> Rational {
        Rational::new(self.max_deviation as u64, self.counts.len() as u64)
    }

    /// Every `(a, b)` with `b != 0` attaining [`Self::max_deviation`].
    pub fn argmax(&self) -> Vec<(usize, usize)> {
        let half = (self.counts.len() / 2) as u32;
        let mut out = Vec::new();
        for (a, row) in self.counts.iter().enumerate() {
            for (b, &c) in row.iter().enumerate().skip(1) {
                if c.abs_diff(half) == self.max_deviation {
                    out.push((a, b));
                }
            }
        }
        out
    }
}
