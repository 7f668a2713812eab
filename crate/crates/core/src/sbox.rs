//! The 8×8 S-box type and the AES, APA and rotation-k constructions.

use std::fmt;

use crate::affine::AffineMap;
use crate::error::SboxError;
use crate::gf256::{gf_inv, FieldElement};

pub const SBOX_SIZE: usize = 256;

/// A lookup table of 256 field elements indexed by input byte.
///
/// Tables are not required to be bijective; whether they are is computed once
/// at construction and exposed through [`SBox::is_bijective`].
#[derive(Clone, PartialEq, Eq)]
pub struct SBox {
    table: [FieldElement; SBOX_SIZE],
    label: String,
    bijective: bool,
}

impl SBox {
    pub fn new(table: [FieldElement; SBOX_SIZE], label: impl Into<String>) -> Self {
        let bijective = is_permutation(&table);
        SBox {
            table,
            label: label.into(),
            bijective,
        }
    }

    /// Tabulate `f` over all 256 inputs.
    pub fn from_fn(label: impl Into<String>, f: impl Fn(FieldElement) -> FieldElement) -> Self {
        Self::new(std::array::from_fn(|x| f(FieldElement(x as u8))), label)
    }

    pub fn table(&self) -> &[FieldElement; SBOX_SIZE] {
        &self.table
    }

    pub fn bytes(&self) -> [u8; SBOX_SIZE] {
        self.table.map(u8::from)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn apply(&self, x: FieldElement) -> FieldElement {
        self.table[x.0 as usize]
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    /// Inverse permutation, or `None` when the table is not bijective.
    pub fn inverse(&self) -> Option<SBox> {
        if !self.bijective {
            return None;
        }
        let mut inv = [FieldElement::ZERO; SBOX_SIZE];
        for (x, y) in self.table.iter().enumerate() {
            inv[y.0 as usize] = FieldElement(x as u8);
        }
        Some(SBox::new(inv, format!("{} (inverse)", self.label)))
    }
}

impl std::ops::Index<u8> for SBox {
    type Output = FieldElement;

    fn index(&self, index: u8) -> &FieldElement {
        &self.table[index as usize]
    }
}

impl fmt::Debug for SBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SBox")
            .field("label", &self.label)
            .field("bijective", &self.bijective)
            .finish_non_exhaustive()
    }
}

fn is_permutation(table: &[FieldElement; SBOX_SIZE]) -> bool {
    let mut seen = [false; SBOX_SIZE];
    for v in table {
        if std::mem::replace(&mut seen[v.0 as usize], true) {
            return false;
        }
    }
    true
}

pub fn is_bijective(s: &SBox) -> bool {
    s.is_bijective()
}

/// `S = A ∘ P`: field inversion followed by the AES affine transform.
pub fn build_aes_sbox() -> SBox {
    let a = AffineMap::aes();
    SBox::from_fn("AES", |x| a.apply(gf_inv(x)))
}

/// `S = outer ∘ P ∘ inner`.
pub fn build_apa_sbox_with(outer: &AffineMap, inner: &AffineMap) -> SBox {
    SBox::from_fn("APA", |x| outer.apply(gf_inv(inner.apply(x))))
}

/// The affine-power-affine S-box, built from the affine pair of the published box.
pub fn build_apa_sbox() -> SBox {
    build_apa_sbox_with(&AffineMap::apa_outer(), &AffineMap::apa_inner())
}

/// `A ∘ P ∘ A` with the AES affine transform on both sides.
pub fn build_apa_aes_affine_sbox() -> SBox {
    let a = AffineMap::aes();
    build_apa_sbox_with(&a, &a).with_label("APA (AES affine)")
}

fn check_rotation(k: u32) -> Result<u32, SboxError> {
    if (1..=7).contains(&k) {
        Ok(k)
    } else {
        Err(SboxError::InvalidRotation(k))
    }
}

/// Circular left rotation of the 8-bit pattern by `k` positions (bit `i` moves to `i + k mod 8`).
pub fn rotate_byte(v: FieldElement, k: u32) -> Result<FieldElement, SboxError> {
    let k = check_rotation(k)?;
    Ok(FieldElement(v.0.rotate_left(k)))
}

/// Rotate every output of `base` by `k`.
pub fn rotate_sbox(base: &SBox, k: u32) -> Result<SBox, SboxError> {
    let k = check_rotation(k)?;
    let table = base.table.map(|v| FieldElement(v.0.rotate_left(k)));
    Ok(SBox::new(table, format!("rotation-{k} {}", base.label)))
}

/// The rotation-k APA S-box for `k` in `1..=7`.
pub fn build_rotation_sbox(k: u32) -> Result<SBox, SboxError> {
    rotate_sbox(&build_apa_sbox(), k)
}

/// Wrap a raw table. Non-bijective tables are accepted and flagged.
pub fn sbox_from_bytes(raw: &[u8], label: impl Into<String>) -> Result<SBox, SboxError> {
    let table: [u8; SBOX_SIZE] = raw.try_into().map_err(|_| SboxError::Length {
        expected: SBOX_SIZE,
        actual: raw.len(),
    })?;
    Ok(SBox::new(table.map(FieldElement), label))
}

/// Names accepted by [`builtin`], in display order.
pub const BUILTIN_NAMES: [&str; 10] = [
    "rotation-1",
    "rotation-2",
    "rotation-3",
    "rotation-4",
    "rotation-5",
    "rotation-6",
    "rotation-7",
    "apa",
    "aes",
    "apa-aes-affine",
];

/// Look up a built-in S-box by name.
pub fn builtin(name: &str) -> Option<SBox> {
    match name {
        "aes" => Some(build_aes_sbox()),
        "apa" => Some(build_apa_sbox()),
        "apa-aes-affine" => Some(build_apa_aes_affine_sbox()),
        _ => {
            let k: u32 = name.strip_prefix("rotation-")?.parse().ok()?;
            build_rotation_sbox(k).ok()
        }
    }
}
