//! Ties the built-in APA S-box to the reference rotation-3 table.
//!
//! The reference table is affine equivalent to field inversion. These tests
//! recover that equivalence from the table alone, check that the embedded
//! affine pair belongs to the recovered family, and record that the AES
//! affine transform does not.

mod common;

use apa_sbox::analysis::{sac_matrix, DifferenceDistributionTable};
use apa_sbox::{
    algebraic_complexity, build_apa_sbox, gf_inv, gf_mul, gf_pow, AffineMap, FieldElement,
    Rational, SBox,
};
use common::REFERENCE_ROTATION_3;

type Table = [u8; 256];

fn inv(x: u8) -> u8 {
    gf_inv(FieldElement(x)).0
}

/// For inversion every nonzero DDT row has exactly one entry equal to 4, at
/// `dy = dx^-1`. For `T = L2 ∘ P ∘ L1` the position of that entry is the
/// linear map `dx -> M2·P(M1·dx)`.
fn four_map(t: &Table) -> Table {
    let ddt = DifferenceDistributionTable::from_table(t);
    let mut map = [0u8; 256];
    for (dx, slot) in map.iter_mut().enumerate().skip(1) {
        let hits: Vec<usize> = (0..256).filter(|&dy| ddt.get(dx, dy) == 4).collect();
        assert_eq!(hits.len(), 1, "row {dx}");
        *slot = hits[0] as u8;
    }
    map
}

/// Extend a partial linear map to its span. Returns `None` on contradiction.
fn span(partial: &[Option<u8>; 256]) -> Option<[Option<u8>; 256]> {
    let mut out = [None; 256];
    out[0] = Some(0);
    for x in 1..256 {
        let Some(y) = partial[x] else { continue };
        match out[x] {
            Some(existing) if existing != y => return None,
            Some(_) => continue,
            None => {}
        }
        let known: Vec<(usize, u8)> = (0..256).filter_map(|a| out[a].map(|b| (a, b))).collect();
        for (a, b) in known {
            let (nx, ny) = (a ^ x, b ^ y);
            match out[nx] {
                Some(existing) if existing != ny => return None,
                _ => out[nx] = Some(ny),
            }
        }
    }
    Some(out)
}

/// All linear `(L1, L2)` with `f = L2 ∘ P ∘ L1` and `L1(1) = 1`.
fn linear_equivalences_to_inverse(f: &Table) -> Vec<(Table, Table)> {
    let mut f_inv = [0u8; 256];
    for x in 0..256 {
        f_inv[f[x] as usize] = x as u8;
    }
    let mut found = Vec::new();
    'guess: for g in 2..=255u8 {
        let mut l1 = [None; 256];
        l1[1] = Some(1u8);
        l1[2] = Some(g);
        let mut l2_inv = [None; 256];
        loop {
            let Some(closed) = span(&l1) else { continue 'guess };
            l1 = closed;
            // L2^{-1}(f(x)) = P(L1(x))
            for x in 0..256 {
                if let Some(v) = l1[x] {
                    let (y, z) = (f[x] as usize, inv(v));
                    match l2_inv[y] {
                        Some(e) if e != z => continue 'guess,
                        _ => l2_inv[y] = Some(z),
                    }
                }
            }
            let Some(closed) = span(&l2_inv) else { continue 'guess };
            l2_inv = closed;
            let mut grew = false;
            for y in 0..256 {
                if let Some(z) = l2_inv[y] {
                    let (x, v) = (f_inv[y] as usize, inv(z));
                    match l1[x] {
                        Some(e) if e != v => continue 'guess,
                        Some(_) => {}
                        None => {
                            l1[x] = Some(v);
                            grew = true;
                        }
                    }
                }
            }
            if l1.iter().all(Option::is_some) && l2_inv.iter().all(Option::is_some) {
                break;
            }
            if !grew {
                continue 'guess;
            }
        }
        let l1: Table = l1.map(Option::unwrap);
        let mut l2 = [0u8; 256];
        for (y, z) in l2_inv.iter().enumerate() {
            l2[z.unwrap() as usize] = y as u8;
        }
        found.push((l1, l2));
    }
    found
}

/// `(inner, outer)` affine tables with `t = outer ∘ P ∘ inner`.
fn decompose(t: &Table) -> (Table, Table) {
    let f = four_map(t);
    let sols = linear_equivalences_to_inverse(&f);
    assert!(!sols.is_empty(), "table is not affine equivalent to inversion");
    let (m1, m2) = sols[0];
    for c1 in 0..=255u8 {
        let c2 = t[0] ^ m2[inv(m1[0] ^ c1) as usize];
        if (0..256).all(|x| t[x] == m2[inv(m1[x] ^ c1) as usize] ^ c2) {
            let inner: Table = std::array::from_fn(|x| m1[x] ^ c1);
            let outer: Table = std::array::from_fn(|y| m2[y] ^ c2);
            return (inner, outer);
        }
    }
    panic!("no affine constants found");
}

fn affine_table(m: &AffineMap) -> Table {
    std::array::from_fn(|x| m.apply(FieldElement(x as u8)).0)
}

/// `y -> a·y^(2^j)`, the linear self-equivalences of inversion.
fn self_equivalence(a: u8, j: u32, y: u8) -> u8 {
    gf_mul(FieldElement(a), gf_pow(FieldElement(y), 1 << j)).0
}

/// Every inner map of the form `s ∘ inner` for a self-equivalence `s`.
fn inner_family(inner: &Table) -> Vec<Table> {
    let mut out = Vec::new();
    for a in 1..=255u8 {
        for j in 0..8 {
            out.push(std::array::from_fn(|x| self_equivalence(a, j, inner[x])));
        }
    }
    out
}

fn unrotated_reference() -> Table {
    REFERENCE_ROTATION_3.map(|v| v.rotate_right(3))
}

#[test]
fn solver_recovers_aes_affine_from_synthetic_box() {
    let a = AffineMap::aes();
    let synthetic: Table =
        std::array::from_fn(|x| a.apply(gf_inv(a.apply(FieldElement(x as u8)))).0.rotate_left(3));
    let (inner, _) = decompose(&synthetic);
    assert!(inner_family(&inner).contains(&affine_table(&a)));
}

#[test]
fn reference_table_is_affine_equivalent_to_inversion() {
    let (inner, outer) = decompose(&REFERENCE_ROTATION_3);
    for x in 0..256 {
        assert_eq!(outer[inv(inner[x]) as usize], REFERENCE_ROTATION_3[x]);
    }
}

#[test]
fn embedded_affine_pair_is_in_recovered_family() {
    let (inner, _) = decompose(&REFERENCE_ROTATION_3);
    let family = inner_family(&inner);
    assert!(family.contains(&affine_table(&AffineMap::apa_inner())));

    let apa = build_apa_sbox();
    assert_eq!(apa.bytes(), unrotated_reference());
}

#[test]
fn aes_affine_does_not_generate_reference_table() {
    let aes = affine_table(&AffineMap::aes());
    let (inner, outer) = decompose(&REFERENCE_ROTATION_3);
    assert!(!inner_family(&inner).contains(&aes));

    // nor on the output side, for any rotation of the output bits
    for k in 0..8 {
        let unrotated: Table = std::array::from_fn(|y| outer[y].rotate_right(k));
        for a in 1..=255u8 {
            for j in 0..8u32 {
                // outer' = unrotated ∘ s'^-1 with s'^-1(w) = (a·w)^(2^(8−j))
                let candidate: Table = std::array::from_fn(|w| {
                    let back = self_equivalence(1, (8 - j) % 8, gf_mul(FieldElement(a), FieldElement(w as u8)).0);
                    unrotated[back as usize]
                });
                assert_ne!(candidate, aes, "k={k} a={a} j={j}");
            }
        }
    }

    // A ∘ P ∘ A itself is a different box
    let literal = apa_sbox::sbox::build_apa_aes_affine_sbox();
    assert_eq!(literal[0], FieldElement(0xFB));
    assert_ne!(literal.bytes(), unrotated_reference());
}

#[test]
fn literal_aes_affine_composition_metrics() {
    let literal = apa_sbox::sbox::build_apa_aes_affine_sbox();
    assert_eq!(sac_matrix(&literal).mean, Rational::new(8240, 16384));
    assert_eq!(algebraic_complexity(&literal), 255);

    let reference = SBox::new(unrotated_reference().map(FieldElement), "reference APA");
    assert_eq!(sac_matrix(&reference).mean, Rational::new(8204, 16384));
    assert_eq!(algebraic_complexity(&reference), 253);
}
