//! Arithmetic in GF(2^8) modulo the Rijndael polynomial x^8 + x^4 + x^3 + x + 1.
//!
//! Bit `i` of the byte is the coefficient of `x^i`. Multiplication goes through
//! log/antilog tables over the generator `0x03`; both tables are built at
//! compile time.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use serde::{Deserialize, Serialize};

/// Reduction polynomial, including the implicit `x^8` term.
pub const REDUCTION_POLY: u16 = 0x11B;

const GENERATOR: u8 = 0x03;

/// Multiply by `x` and reduce. Used only for table generation.
const fn xtime(a: u8) -> u8 {
    let shifted = (a as u16) << 1;
    if shifted & 0x100 != 0 {
        (shifted ^ REDUCTION_POLY) as u8
    } else {
        shifted as u8
    }
}

const fn mul_slow(mut a: u8, mut b: u8) -> u8 {
    let mut acc = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        a = xtime(a);
        b >>= 1;
    }
    acc
}

/// `EXP[i] = g^i` for `i` in `0..510`; doubled so `EXP[log a + log b]` needs no modulo.
static EXP: [u8; 510] = {
    let mut table = [0u8; 510];
    let mut value = 1u8;
    let mut i = 0;
    while i < 255 {
        table[i] = value;
        table[i + 255] = value;
        value = mul_slow(value, GENERATOR);
        i += 1;
    }
    table
};

/// `LOG[a]` for `a != 0`; `LOG[0]` is unused.
static LOG: [u8; 256] = {
    let mut table = [0u8; 256];
    let mut value = 1u8;
    let mut i = 0;
    while i < 255 {
        table[value as usize] = i as u8;
        value = mul_slow(value, GENERATOR);
        i += 1;
    }
    table
};

/// An element of GF(2^8).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub const fn new(value: u8) -> Self {
        FieldElement(value)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse, with `0` mapped to `0`.
    #[inline]
    pub fn inv(self) -> Self {
        gf_inv(self)
    }

    /// `self^exponent`, with `0^0 = 1`.
    #[inline]
    pub fn pow(self, exponent: u32) -> Self {
        gf_pow(self, exponent)
    }

    /// Iterator over all 256 field elements in byte order.
    pub fn all() -> impl Iterator<Item = FieldElement> + Clone {
        (0..=255u8).map(FieldElement)
    }
}

impl From<u8> for FieldElement {
    fn from(value: u8) -> Self {
        FieldElement(value)
    }
}

impl From<FieldElement> for u8 {
    fn from(value: FieldElement) -> Self {
        value.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement(0x{:02x})", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02x}", self.0)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        gf_add(self, rhs)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = gf_add(*self, rhs);
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn mul(self, rhs: FieldElement) -> FieldElement {
        gf_mul(self, rhs)
    }
}

impl MulAssign for FieldElement {
    #[inline]
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = gf_mul(*self, rhs);
    }
}

/// Addition in characteristic 2 is XOR.
#[inline]
pub fn gf_add(a: FieldElement, b: FieldElement) -> FieldElement {
    FieldElement(a.0 ^ b.0)
}

#[inline]
pub fn gf_mul(a: FieldElement, b: FieldElement) -> FieldElement {
    if a.0 == 0 || b.0 == 0 {
        return FieldElement::ZERO;
    }
    let idx = LOG[a.0 as usize] as usize + LOG[b.0 as usize] as usize;
    FieldElement(EXP[idx])
}

/// Inverse for nonzero `a`; `gf_inv(0) = 0`, matching the power map `P`.
#[inline]
pub fn gf_inv(a: FieldElement) -> FieldElement {
    if a.0 == 0 {
        return FieldElement::ZERO;
    }
    FieldElement(EXP[255 - LOG[a.0 as usize] as usize])
}

/// Repeated multiplication. `gf_pow(a, 0) = 1` for every `a`, including zero;
/// interpolation relies on this so the constant term contributes at `x = 0`.
#[inline]
pub fn gf_pow(a: FieldElement, exponent: u32) -> FieldElement {
    if exponent == 0 {
        return FieldElement::ONE;
    }
    if a.0 == 0 {
        return FieldElement::ZERO;
    }
    let log = LOG[a.0 as usize] as u64 * exponent as u64 % 255;
    FieldElement(EXP[log as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook carry-less product followed by bitwise long division by 0x11B.
    fn mul_long_division(a: u8, b: u8) -> u8 {
        let mut product = 0u16;
        for i in 0..8 {
            if (b >> i) & 1 == 1 {
                product ^= (a as u16) << i;
            }
        }
        for shift in (0..=7).rev() {
            if product & (1 << (shift + 8)) != 0 {
                product ^= REDUCTION_POLY << shift;
            }
        }
        product as u8
    }

    fn fe(v: u8) -> FieldElement {
        FieldElement(v)
    }

    #[test]
    fn add_examples() {
        assert_eq!(gf_add(fe(0x00), fe(0x5A)), fe(0x5A));
        assert_eq!(gf_add(fe(0xFF), fe(0xFF)), fe(0x00));
        assert_eq!(gf_add(fe(0x53), fe(0xCA)), fe(0x99));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul_long_division(0x02, 0x80), 0x1B);
        for b in FieldElement::all() {
            assert_eq!(gf_mul(fe(0), b), fe(0));
            assert_eq!(gf_mul(fe(1), b), b);
        }
        assert_eq!(gf_mul(fe(0x02), fe(0x80)), fe(0x1B));
    }

    #[test]
    fn mul_matches_long_division_oracle() {
        for a in 0..=255u8 {
            for b in 0..=255u8 {
                assert_eq!(gf_mul(fe(a), fe(b)).0, mul_long_division(a, b), "{a:#x} * {b:#x}");
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let brute = (1..=255u8).find(|&b| mul_long_division(0x53, b) == 1).unwrap();
        assert_eq!(brute, 0xCA);
        assert_eq!(gf_inv(fe(0x00)), fe(0x00));
        assert_eq!(gf_inv(fe(0x01)), fe(0x01));
        assert_eq!(gf_inv(fe(0x53)), fe(0xCA));
    }

    #[test]
    fn inverse_is_inverse() {
        for a in 1..=255u8 {
            assert_eq!(gf_mul(fe(a), gf_inv(fe(a))), FieldElement::ONE);
        }
    }

    #[test]
    fn pow_examples() {
        for a in FieldElement::all() {
            assert_eq!(gf_pow(a, 1), a);
            assert_eq!(gf_pow(a, 0), FieldElement::ONE);
            assert_eq!(gf_pow(a, 254), gf_inv(a));
            if !a.is_zero() {
                assert_eq!(gf_pow(a, 255), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        for a in FieldElement::all() {
            let mut acc = FieldElement::ONE;
            for e in 0..600u32 {
                assert_eq!(gf_pow(a, e), acc, "{a:?}^{e}");
                acc *= a;
            }
        }
    }

    #[test]
    fn ring_laws_exhaustive() {
        for a in FieldElement::all() {
            for b in FieldElement::all() {
                assert_eq!(a * b, b * a);
            }
        }
        for a in FieldElement::all() {
            for b in FieldElement::all() {
                for c in FieldElement::all() {
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn associativity_sample() {
        for a in (1..=255u8).step_by(7).map(fe) {
            for b in FieldElement::all() {
                for c in (0..=255u8).step_by(13).map(fe) {
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }
}
