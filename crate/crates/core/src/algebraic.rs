//! Univariate polynomial form of an S-box over GF(2^8) and its term count.
//!
//! Every map `GF(2^8) -> GF(2^8)` equals a unique polynomial of degree at most
//! 255. Expanding `f(X) = Σ_a S(a)·(1 + (X + a)^255)` (all binomial
//! coefficients of the exponent 255 are odd) gives the coefficients directly:
//!
//! * `c_0 = S(0)`
//! * `c_d = Σ_{a≠0} S(a)·a^(255−d)` for `1 <= d <= 254`
//! * `c_255 = Σ_a S(a)`

use std::fmt;

use crate::gf256::{gf_pow, FieldElement};
use crate::sbox::{SBox, SBOX_SIZE};

/// Dense coefficient vector; `coefficients[d]` multiplies `X^d`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPolynomial {
    coefficients: [FieldElement; SBOX_SIZE],
}

impl FieldPolynomial {
    pub fn zero() -> Self {
        FieldPolynomial {
            coefficients: [FieldElement::ZERO; SBOX_SIZE],
        }
    }

    pub fn from_coefficients(coefficients: [FieldElement; SBOX_SIZE]) -> Self {
        FieldPolynomial { coefficients }
    }

    /// Single term `c·X^degree`.
    pub fn monomial(degree: usize, c: FieldElement) -> Self {
        let mut p = Self::zero();
        p.coefficients[degree] = c;
        p
    }

    pub fn coefficients(&self) -> &[FieldElement; SBOX_SIZE] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> FieldElement {
        self.coefficients[degree]
    }

    /// Nonzero terms as `(exponent, coefficient)`, highest exponent first.
    pub fn terms(&self) -> Vec<(u32, FieldElement)> {
        self.coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, &c)| (d as u32, c))
            .collect()
    }

    pub fn term_count(&self) -> u32 {
        self.coefficients.iter().filter(|c| !c.is_zero()).count() as u32
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|d| d as u32)
    }

    /// Horner evaluation; the constant term is returned at `x = 0`.
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        self.coefficients
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| acc * x + c)
    }

    /// The 256 values `p(0) … p(255)`.
    pub fn evaluation_table(&self) -> [FieldElement; SBOX_SIZE] {
        std::array::from_fn(|x| self.evaluate(FieldElement(x as u8)))
    }

    pub fn add(&self, other: &Self) -> Self {
        FieldPolynomial {
            coefficients: std::array::from_fn(|d| self.coefficients[d] + other.coefficients[d]),
        }
    }
}

impl fmt::Debug for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms()).finish()
    }
}

impl fmt::Display for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·X^{d}")?;
        }
        Ok(())
    }
}

/// Interpolate an arbitrary table of 256 field elements.
pub fn interpolate_table(table: &[FieldElement; SBOX_SIZE]) -> FieldPolynomial {
    let mut coefficients = [FieldElement::ZERO; SBOX_SIZE];
    coefficients[0] = table[0];
    for (a, &value) in table.iter().enumerate().skip(1) {
        if value.is_zero() {
            continue;
        }
        let a = FieldElement(a as u8);
        for (d, c) in coefficients.iter_mut().enumerate().take(255).skip(1) {
            *c += value * gf_pow(a, 255 - d as u32);
        }
    }
    coefficients[255] = table.iter().fold(FieldElement::ZERO, |acc, &v| acc + v);
    FieldPolynomial { coefficients }
}

pub fn interpolate(s: &SBox) -> FieldPolynomial {
    interpolate_table(s.table())
}

pub fn evaluate(p: &FieldPolynomial, x: FieldElement) -> FieldElement {
    p.evaluate(x)
}

/// Number of nonzero terms of the interpolating polynomial.
pub fn algebraic_complexity(s: &SBox) -> u32 {
    interpolate(s).term_count()
}
