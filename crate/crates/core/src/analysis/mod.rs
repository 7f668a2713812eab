//! Statistical criteria for S-boxes: nonlinearity, SAC, BIC, differential
//! uniformity and linear approximation probability.
//!
//! The table-level constructors (`from_table`) accept any `n`-bit to `n`-bit
//! lookup table with `1 <= n <= 8`; the free functions take an [`SBox`].

mod avalanche;
mod differential;
mod linear;
mod walsh;

use serde::{Deserialize, Serialize};

pub use avalanche::{boolean_sac_mean, BicNonlinearity, BicSac, SacMatrix};
pub use differential::DifferenceDistributionTable;
pub use linear::LinearApproximationTable;
pub use walsh::{nonlinearity, walsh_spectrum, BooleanFunction, WalshSpectrum};

use crate::algebraic::algebraic_complexity;
use crate::rational::{self, Rational};
use crate::sbox::SBox;

/// Input bit count of a lookup table; panics unless the length is `2^n`, `1 <= n <= 8`,
/// and every entry is below `2^n`.
pub(crate) fn table_bits(table: &[u8]) -> usize {
    let len = table.len();
    assert!(
        len.is_power_of_two() && (2..=256).contains(&len),
        "table length {len} is not 2^n for 1 <= n <= 8"
    );
    assert!(
        table.iter().all(|&v| (v as usize) < len),
        "table values exceed the output width"
    );
    len.trailing_zeros() as usize
}

/// Per-coordinate nonlinearities `g_1 … g_n` with their minimum and mean.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateNonlinearities {
    pub values: Vec<u32>,
    pub min: u32,
    #[serde(with = "rational::serde_exact")]
    pub average: Rational,
}

impl CoordinateNonlinearities {
    pub fn from_table(table: &[u8]) -> Self {
        let n = table_bits(table);
        let values: Vec<u32> = (0..n)
            .map(|i| nonlinearity(&BooleanFunction::component(table, 1 << i)))
            .collect();
        let min = *values.iter().min().expect("at least one coordinate");
        let sum: u64 = values.iter().map(|&v| v as u64).sum();
        CoordinateNonlinearities {
            values,
            min,
            average: Rational::new(sum, n as u64),
        }
    }
}

/// Coordinate function `i` (bit `i` of the output) of an S-box.
pub fn coordinate(s: &SBox, i: u32) -> BooleanFunction {
    BooleanFunction::component(&s.bytes(), 1 << i)
}

pub fn sbox_nonlinearities(s: &SBox) -> CoordinateNonlinearities {
    CoordinateNonlinearities::from_table(&s.bytes())
}

pub fn sac_matrix(s: &SBox) -> SacMatrix {
    SacMatrix::from_table(&s.bytes())
}

pub fn bic_nl_matrix(s: &SBox) -> BicNonlinearity {
    BicNonlinearity::from_table(&s.bytes())
}

pub fn bic_sac_matrix(s: &SBox) -> BicSac {
    BicSac::from_table(&s.bytes())
}

pub fn ddt(s: &SBox) -> DifferenceDistributionTable {
    DifferenceDistributionTable::from_table(&s.bytes())
}

pub fn lat(s: &SBox) -> LinearApproximationTable {
    LinearApproximationTable::from_table(&s.bytes())
}

/// All criteria for one S-box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub label: String,
    pub bijective: bool,
    pub nonlinearity: CoordinateNonlinearities,
    pub sac: SacMatrix,
    pub bic_nl: BicNonlinearity,
    pub bic_sac: BicSac,
    pub max_du: u32,
    #[serde(with = "rational::serde_exact")]
    pub max_dp: Rational,
    /// `max |count − 128|` in the LAT, over nonzero output masks.
    pub lat_max_deviation: u32,
    /// `lat_max_deviation / 256`.
    #[serde(with = "rational::serde_exact")]
    pub lap: Rational,
    pub algebraic_complexity: u32,
}

impl AnalysisReport {
    /// SAC mean truncated to four decimals, the precision used in comparison tables.
    pub fn sac_display(&self) -> String {
        rational::truncated_decimal(&self.sac.mean, 4)
    }

    /// One-line summary: SAC, max DU, average BIC-NN, max LP and complexity.
    pub fn summary_line(&self) -> String {
        format!(
            "SAC {}, Max DU {}, BIC-NN {}, Max LP {}, complexity {}",
            self.sac_display(),
            self.max_du,
            display_trimmed(&self.bic_nl.average, 4),
            display_trimmed(&self.lap, 4),
            self.algebraic_complexity
        )
    }
}

/// Truncated decimal without trailing zeros (`112`, `0.0625`, `104.1428` → `104.1428`).
pub fn display_trimmed(r: &Rational, places: usize) -> String {
    let s = rational::truncated_decimal(r, places);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn analyze(s: &SBox) -> AnalysisReport {
    let table = s.bytes();
    let ddt = DifferenceDistributionTable::from_table(&table);
    let lat = LinearApproximationTable::from_table(&table);
    AnalysisReport {
        label: s.label().to_string(),
        bijective: s.is_bijective(),
        nonlinearity: CoordinateNonlinearities::from_table(&table),
        sac: SacMatrix::from_table(&table),
        bic_nl: BicNonlinearity::from_table(&table),
        bic_sac: BicSac::from_table(&table),
        max_du: ddt.max_du(),
        max_dp: ddt.max_probability(),
        lat_max_deviation: lat.max_deviation(),
        lap: lat.max_bias(),
        algebraic_complexity: algebraic_complexity(s),
    }
}
