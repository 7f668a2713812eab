//! Exact rationals for metric values, and their decimal renderings.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

pub type Rational = Ratio<u64>;

/// Terminating decimal expansion when the reduced denominator is `2^a·5^b`,
/// otherwise `"p/q"`. Either form parses back exactly with [`parse_rational`].
pub fn to_exact_string(r: &Rational) -> String {
    let mut d = *r.denom();
    let (mut twos, mut fives) = (0u32, 0u32);
    while d.is_multiple_of(2) {
        d /= 2;
        twos += 1;
    }
    while d.is_multiple_of(5) {
        d /= 5;
        fives += 1;
    }
    if d != 1 {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives) as usize;
    let scale = 10u128.pow(places as u32);
    let scaled = *r.numer() as u128 * scale / *r.denom() as u128;
    let int = scaled / scale;
    if places == 0 {
        return int.to_string();
    }
    let frac = scaled % scale;
    format!("{int}.{frac:0places$}")
}

/// Parse `"12"`, `"0.50073"` or `"517/1024"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let d: u64 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(Rational::new(n.trim().parse().ok()?, d));
    }
    match s.split_once('.') {
        None => Some(Rational::from_integer(s.parse().ok()?)),
        Some((int, frac)) => {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
                return None;
            }
            let scale = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
            let frac: u64 = frac.parse().ok()?;
            Some(Rational::new(int.checked_mul(scale)?.checked_add(frac)?, scale))
        }
    }
}

/// Decimal rendering truncated (not rounded) to `places` digits.
pub fn truncated_decimal(r: &Rational, places: usize) -> String {
    let scale = 10u128.pow(places as u32);
    let scaled = *r.numer() as u128 * scale / *r.denom() as u128;
    if places == 0 {
        return scaled.to_string();
    }
    format!("{}.{:0places$}", scaled / scale, scaled % scale)
}

pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serde adapter writing rationals via [`to_exact_string`].
pub mod serde_exact {
    use super::*;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_exact_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
    }
}

/// Serde adapter for a square matrix of rationals.
pub mod serde_exact_matrix {
    use super::*;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(m.len()))?;
        for row in m {
            let row: Vec<String> = row.iter().map(to_exact_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        raw.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| {
                        parse_rational(&s)
                            .ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
                    })
                    .collect()
            })
            .collect()
    }
}
