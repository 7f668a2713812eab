//! Boolean functions, their Walsh spectra and nonlinearity.

/// Truth table of a Boolean function on `n` input bits (`2^n` entries).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanFunction {
    vars: u32,
    values: Vec<bool>,
}

impl BooleanFunction {
    /// Panics unless `values.len()` is a power of two no larger than `2^16`.
    pub fn new(values: Vec<bool>) -> Self {
        let len = values.len();
        assert!(len.is_power_of_two() && len <= 1 << 16, "truth table length {len}");
        BooleanFunction {
            vars: len.trailing_zeros(),
            values,
        }
    }

    pub fn from_fn(vars: u32, f: impl Fn(usize) -> bool) -> Self {
        Self::new((0..1usize << vars).map(f).collect())
    }

    /// Component `x -> mask · S(x)` of a lookup table; `mask = 1 << i` gives coordinate `i`.
    pub fn component(table: &[u8], mask: u8) -> Self {
        Self::new(table.iter().map(|&y| (y & mask).count_ones() & 1 == 1).collect())
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    #[inline]
    pub fn eval(&self, x: usize) -> bool {
        self.values[x]
    }

    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        Self::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a ^ b)
                .collect(),
        )
    }
}

/// `values[ω] = Σ_x (−1)^{g(x) ⊕ x·ω}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    pub values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn max_abs(&self) -> u32 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// Σ_ω values[ω]², equal to `4^n` for any Boolean function.
    pub fn energy(&self) -> u64 {
        self.values.iter().map(|&v| (v as i64 * v as i64) as u64).sum()
    }
}

/// In-place fast Walsh–Hadamard transform (natural order, unnormalized).
pub(crate) fn fwht(data: &mut [i32]) {
    let n = data.len();
    let mut h = 1;
    while h < n {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        h *= 2;
    }
}

pub fn walsh_spectrum(g: &BooleanFunction) -> WalshSpectrum {
    let mut values: Vec<i32> = g.values.iter().map(|&b| if b { -1 } else { 1 }).collect();
    fwht(&mut values);
    WalshSpectrum { values }
}

/// `2^(n−1) − max_ω |W(ω)| / 2`.
pub fn nonlinearity(g: &BooleanFunction) -> u32 {
    let half = (g.len() / 2) as u32;
    half - walsh_spectrum(g).max_abs() / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dot(a: usize, b: usize) -> bool {
        (a & b).count_ones() & 1 == 1
    }

    fn walsh_direct(g: &BooleanFunction) -> Vec<i32> {
        (0..g.len())
            .map(|w| {
                (0..g.len())
                    .map(|x| if g.eval(x) ^ dot(x, w) { -1 } else { 1 })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn constant_function() {
        let g = BooleanFunction::from_fn(8, |_| false);
        let w = walsh_spectrum(&g);
        assert_eq!(w.values[0], 256);
        assert!(w.values[1..].iter().all(|&v| v == 0));
        assert_eq!(nonlinearity(&g), 0);
        assert_eq!(nonlinearity(&BooleanFunction::from_fn(8, |_| true)), 0);
    }

    #[test]
    fn linear_function_is_a_character() {
        for lambda in [1usize, 0x53, 0xFF, 0x80] {
            let g = BooleanFunction::from_fn(8, |x| dot(x, lambda));
            let w = walsh_spectrum(&g);
            for (omega, &v) in w.values.iter().enumerate() {
                if omega == lambda {
                    assert_eq!(v.abs(), 256);
                } else {
                    assert_eq!(v, 0);
                }
            }
            assert_eq!(nonlinearity(&g), 0);
        }
    }

    #[test]
    fn bent_function_nonlinearity() {
        // x0x1 ⊕ x2x3 ⊕ x4x5 ⊕ x6x7 is bent: NL = 2^7 − 2^3
        let g = BooleanFunction::from_fn(8, |x| {
            let b = |i: usize| (x >> i) & 1 == 1;
            (b(0) & b(1)) ^ (b(2) & b(3)) ^ (b(4) & b(5)) ^ (b(6) & b(7))
        });
        assert_eq!(nonlinearity(&g), 120);
        assert!(walsh_spectrum(&g).values.iter().all(|v| v.abs() == 16));
    }

    proptest! {
        #[test]
        fn parseval_holds(bits in proptest::collection::vec(any::<bool>(), 256)) {
            let g = BooleanFunction::new(bits);
            prop_assert_eq!(walsh_spectrum(&g).energy(), 65536);
        }

        #[test]
        fn fast_matches_direct(bits in proptest::collection::vec(any::<bool>(), 64)) {
            let g = BooleanFunction::new(bits);
            prop_assert_eq!(walsh_spectrum(&g).values, walsh_direct(&g));
        }
    }
}
