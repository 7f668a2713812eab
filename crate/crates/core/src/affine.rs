//! Affine maps `x -> M·x ⊕ c` on 8-bit vectors over GF(2).

use crate::error::SboxError;
use crate::gf256::FieldElement;

/// Invertible 8×8 binary matrix plus constant vector.
///
/// Row `r` of the matrix produces output bit `r`; within a row byte, bit `c`
/// is the entry in column `c` and multiplies input bit `x_c`. Bytes are
/// packed LSB-first, so `x_0` is the least significant bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    rows: [u8; 8],
    constant: u8,
    inverse_rows: [u8; 8],
}

/// The affine transform printed for the AES S-box, one array per row, columns
/// left to right multiplying `x_0 … x_7`.
const AES_MATRIX: [[u8; 8]; 8] = [
    [1, 0, 0, 0, 1, 1, 1, 1],
    [1, 1, 0, 0, 0, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 1],
    [1, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1, 1],
];

/// Constant column vector, top entry is bit 0.
const AES_CONSTANT: [u8; 8] = [1, 1, 0, 0, 0, 1, 1, 0];

// Affine pair of the published APA S-box. Recovered by decomposing the
// rotation-3 reference table as outer ∘ P ∘ inner (see tests/reference.rs);
// these are the minimal-weight members of the family related by the
// self-equivalences x -> a·x^(2^j) of P.
const APA_INNER_ROWS: [u8; 8] = [0x04, 0xc9, 0xab, 0xc1, 0x20, 0x02, 0x63, 0x50];
const APA_INNER_CONSTANT: u8 = 0x4a;
const APA_OUTER_ROWS: [u8; 8] = [0xa1, 0x63, 0xe8, 0x18, 0xd7, 0x74, 0x40, 0x90];
const APA_OUTER_CONSTANT: u8 = 0x8d;

#[inline]
fn mat_vec(rows: &[u8; 8], x: u8) -> u8 {
    rows.iter()
        .enumerate()
        .fold(0u8, |acc, (r, &row)| acc | ((((row & x).count_ones() & 1) as u8) << r))
}

/// Gauss–Jordan elimination over GF(2). Returns `None` for a singular matrix.
fn invert_matrix(rows: &[u8; 8]) -> Option<[u8; 8]> {
    let mut work = *rows;
    let mut inv: [u8; 8] = std::array::from_fn(|r| 1u8 << r);
    for col in 0..8 {
        let pivot = (col..8).find(|&r| (work[r] >> col) & 1 == 1)?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..8 {
            if r != col && (work[r] >> col) & 1 == 1 {
                work[r] ^= work[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

impl AffineMap {
    /// Build from packed row bytes. Fails if the matrix is singular.
    pub fn new(rows: [u8; 8], constant: u8) -> Result<Self, SboxError> {
        let inverse_rows = invert_matrix(&rows).ok_or(SboxError::SingularMatrix)?;
        Ok(AffineMap {
            rows,
            constant,
            inverse_rows,
        })
    }

    /// Build from an explicit 0/1 matrix (`matrix[row][col]`) and constant column.
    pub fn from_bits(matrix: &[[u8; 8]; 8], constant: &[u8; 8]) -> Result<Self, SboxError> {
        let pack = |bits: &[u8; 8]| {
            bits.iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b & 1) << i))
        };
        let rows = std::array::from_fn(|r| pack(&matrix[r]));
        Self::new(rows, pack(constant))
    }

    /// The AES affine transform (constant `0x63`).
    pub fn aes() -> Self {
        Self::from_bits(&AES_MATRIX, &AES_CONSTANT).expect("AES matrix is invertible")
    }

    /// Inner (input-side) affine map of the published APA S-box.
    pub fn apa_inner() -> Self {
        Self::new(APA_INNER_ROWS, APA_INNER_CONSTANT).expect("APA inner matrix is invertible")
    }

    /// Outer (output-side) affine map of the published APA S-box.
    pub fn apa_outer() -> Self {
        Self::new(APA_OUTER_ROWS, APA_OUTER_CONSTANT).expect("APA outer matrix is invertible")
    }

    pub fn rows(&self) -> [u8; 8] {
        self.rows
    }

    pub fn constant(&self) -> u8 {
        self.constant
    }

    /// Matrix entry at (`row`, `col`).
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        (self.rows[row] >> col) & 1
    }

    /// `M·x ⊕ c`.
    #[inline]
    pub fn apply(&self, x: FieldElement) -> FieldElement {
        FieldElement(mat_vec(&self.rows, x.0) ^ self.constant)
    }

    /// The unique `x` with `apply(x) == y`.
    #[inline]
    pub fn invert(&self, y: FieldElement) -> FieldElement {
        FieldElement(mat_vec(&self.inverse_rows, y.0 ^ self.constant))
    }
}

pub fn affine_apply(m: &AffineMap, x: FieldElement) -> FieldElement {
    m.apply(x)
}

pub fn affine_invert(m: &AffineMap, y: FieldElement) -> FieldElement {
    m.invert(y)
}
