//! Map-codes: GF(4)-linear spans of the eta-rotations of chosen generators
//! inside GF(4^k)^n, and their DNA images.
//!
//! eta is GF(4)-linear but not GF(4^k)-linear, so the span is taken over
//! GF(4) by expanding each word into k*n quaternary coordinates. DNA reversal
//! corresponds to the GF(4)-linear map "reverse entries, then phi each", and
//! DNA complementation to adding the all-ones word; closure under either is
//! therefore a basis membership question, no enumeration required.

use serde::Serialize;

use crate::dna::basis::{gf4_inv, gf4_mul, DnaBasis};
use crate::dna::DnaWord;
use crate::error::DnaError;
use crate::field::Field;
use crate::wordops::{check_variant_preconditions, shift_family, Codeword, SetVariant};

/// Default bound on full codeword enumeration (2^20 words).
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

/// A GF(4)-linear subcode of GF(4^k)^n spanned by eta-rotations.
pub struct MapCode {
    basis: DnaBasis,
    n: usize,
    generators: Vec<Codeword>,
    f4_basis: Vec<Codeword>,
    /// Echelon rows of the k*n-coordinate expansions, sorted by pivot.
    elim: Vec<(usize, Vec<u8>)>,
}

/// GF(4)-span of {eta^j(g) : g in gens, 0 <= j < k}.
pub fn map_code(gens: &[Codeword], basis: &DnaBasis) -> Result<MapCode, DnaError> {
    let first = gens.first().ok_or(DnaError::Empty)?;
    let n = first.len();
    for g in gens {
        if !Field::same_field(g.field(), basis.field()) {
            return Err(DnaError::Validation(
                "generators belong to a different field than the basis".into(),
            ));
        }
        if g.len() != n {
            return Err(DnaError::Validation("generators have mixed lengths".into()));
        }
    }
    let mut code = MapCode {
        basis: basis.clone(),
        n,
        generators: Vec::new(),
        f4_basis: Vec::new(),
        elim: Vec::new(),
    };
    for g in gens {
        for j in 0..basis.k() {
            let w = basis.eta_pow_word(g, j);
            let reduced = code.reduce(&code.expand(&w));
            if let Some(row) = nonzero_echelon_row(reduced) {
                let pos = code.elim.partition_point(|(p, _)| *p < row.0);
                code.elim.insert(pos, row);
                code.f4_basis.push(w.clone());
            }
            code.generators.push(w);
        }
    }
    Ok(code)
}

fn nonzero_echelon_row(mut v: Vec<u8>) -> Option<(usize, Vec<u8>)> {
    let pivot = v.iter().position(|&x| x != 0)?;
    let inv = gf4_inv(v[pivot]);
    for x in v.iter_mut() {
        *x = gf4_mul(inv, *x);
    }
    Some((pivot, v))
}

impl MapCode {
    /// k*n quaternary coordinates of a word (the DNA-basis coordinates of
    /// each entry, a GF(4)-linear bijection — fine for rank work).
    fn expand(&self, w: &Codeword) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.n * self.basis.k());
        for &e in w.indices() {
            out.extend_from_slice(self.basis.coords_of(e));
        }
        out
    }

    fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for (p, row) in &self.elim {
            let c = v[*p];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x ^= gf4_mul(c, y);
                }
            }
        }
        v
    }

    pub fn dna_basis(&self) -> &DnaBasis {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn k(&self) -> usize {
        self.basis.k()
    }

    /// GF(4)-dimension of the span.
    pub fn dim4(&self) -> usize {
        self.elim.len()
    }

    /// Number of codewords, 4^dim4.
    pub fn size(&self) -> u128 {
        1u128 << (2 * self.dim4() as u32)
    }

    /// The full eta-rotation family, in generator order.
    pub fn generators(&self) -> &[Codeword] {
        &self.generators
    }

    /// A GF(4)-independent subset of the family spanning the code.
    pub fn f4_basis(&self) -> &[Codeword] {
        &self.f4_basis
    }

    pub fn contains(&self, w: &Codeword) -> Result<bool, DnaError> {
        if !Field::same_field(w.field(), self.basis.field()) || w.len() != self.n {
            return Err(DnaError::Validation(
                "word outside the ambient space".into(),
            ));
        }
        Ok(self.reduce(&self.expand(w)).iter().all(|&x| x == 0))
    }

    /// Closure under DNA reversal, decided on the basis.
    pub fn is_dna_reversible(&self) -> bool {
        self.f4_basis.iter().all(|b| {
            self.contains(&self.basis.phi_reverse_word(b))
                .expect("same space")
        })
    }

    /// Closure under DNA complementation, equivalent to containing the
    /// all-ones word.
    pub fn is_complement_closed(&self) -> bool {
        self.contains(&Codeword::all_ones(self.basis.field(), self.n))
            .expect("same space")
    }

    /// All codewords in lexicographic coefficient order (first basis word is
    /// the most significant digit). Fails above `cap`.
    pub fn enumerate(&self, cap: u128) -> Result<Vec<Codeword>, DnaError> {
        if self.size() > cap {
            return Err(DnaError::TooLarge {
                size: self.size(),
                cap,
            });
        }
        let field = self.basis.field();
        let scaled = self.scaled_basis();
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut acc = vec![vec![0u16; self.n]; self.dim4() + 1];
        enumerate_rec(&scaled, 0, &mut acc, &mut |word| {
            out.push(Codeword::from_indices(field, word.to_vec()));
        });
        Ok(out)
    }

    /// DNA images of all codewords, in the same order as [`Self::enumerate`].
    pub fn dna_words(&self, cap: u128) -> Result<Vec<DnaWord>, DnaError> {
        Ok(self
            .enumerate(cap)?
            .iter()
            .map(|c| self.basis.zeta_bar_inv(c))
            .collect())
    }

    fn scaled_basis(&self) -> Vec<[Vec<u16>; 4]> {
        let field = self.basis.field();
        self.f4_basis
            .iter()
            .map(|b| {
                let row = b.indices();
                [0u16, 1, 2, 3].map(|s| row.iter().map(|&x| field.mul_idx(s, x)).collect())
            })
            .collect()
    }

    /// Minimum distance at GF(4^k)-symbol granularity (projective
    /// enumeration over GF(4) scalar classes). Fails above `cap`.
    pub fn min_f4_distance(&self, cap: u128) -> Result<u32, DnaError> {
        self.min_distance_by(cap, |word| word.iter().filter(|&&x| x != 0).count() as u32)
    }

    /// Minimum distance at DNA-symbol granularity (length k*n words).
    pub fn min_dna_distance(&self, cap: u128) -> Result<u32, DnaError> {
        self.min_distance_by(cap, |word| {
            word.iter().map(|&x| self.basis.dna_weight_of(x)).sum()
        })
    }

    fn min_distance_by(&self, cap: u128, weight: impl Fn(&[u16]) -> u32) -> Result<u32, DnaError> {
        if self.dim4() == 0 {
            return Err(DnaError::Validation(
                "the zero code has no minimum distance".into(),
            ));
        }
        if self.size() > cap {
            return Err(DnaError::TooLarge {
                size: self.size(),
                cap,
            });
        }
        let scaled = self.scaled_basis();
        let dim = self.dim4();
        let mut best = u32::MAX;
        let mut acc = vec![vec![0u16; self.n]; dim + 1];
        // first nonzero coefficient fixed to 1
        for j in 0..dim {
            acc[0].copy_from_slice(&scaled[j][1]);
            enumerate_partial(&scaled[j + 1..], 0, 0, &mut acc, &mut |word| {
                let w = weight(word);
                if w < best {
                    best = w;
                }
            });
        }
        Ok(best)
    }

    /// Analysis record; distance fields stay empty above the cap.
    pub fn report(&self, cap: u128) -> MapCodeReport {
        MapCodeReport {
            q: self.basis.field().order(),
            n: self.n,
            k: self.basis.k(),
            dim4: self.dim4(),
            d: self.min_f4_distance(cap).ok(),
            dna_distance: self.min_dna_distance(cap).ok(),
            reversible: self.is_dna_reversible(),
            complement_closed: self.is_complement_closed(),
            generators: self.generators.iter().map(|g| g.tokens()).collect(),
        }
    }
}

/// DFS over all GF(4)-coefficient vectors of the scaled rows.
fn enumerate_rec(
    scaled: &[[Vec<u16>; 4]],
    depth: usize,
    acc: &mut [Vec<u16>],
    visit: &mut impl FnMut(&[u16]),
) {
    if scaled.is_empty() {
        visit(&acc[depth]);
        return;
    }
    for s in 0..4usize {
        if s == 0 {
            enumerate_rec(&scaled[1..], depth, acc, visit);
        } else {
            let (lo, hi) = acc.split_at_mut(depth + 1);
            for ((o, &x), &y) in hi[0].iter_mut().zip(&lo[depth]).zip(&scaled[0][s]) {
                *o = x ^ y;
            }
            enumerate_rec(&scaled[1..], depth + 1, acc, visit);
        }
    }
}

/// DFS like [`enumerate_rec`] but skipping the leading-zero prefix handling
/// (used after the leading coefficient has been pinned to 1).
fn enumerate_partial(
    scaled: &[[Vec<u16>; 4]],
    lvl: usize,
    depth: usize,
    acc: &mut [Vec<u16>],
    visit: &mut impl FnMut(&[u16]),
) {
    if lvl == scaled.len() {
        visit(&acc[depth]);
        return;
    }
    enumerate_partial(scaled, lvl + 1, depth, acc, visit);
    for s in 1..4usize {
        let (lo, hi) = acc.split_at_mut(depth + 1);
        for ((o, &x), &y) in hi[0].iter_mut().zip(&lo[depth]).zip(&scaled[lvl][s]) {
            *o = x ^ y;
        }
        enumerate_partial(scaled, lvl + 1, depth + 1, acc, visit);
    }
}

/// Build the map-code of the shift family of a DNA-m-quasi-reciprocal word;
/// its DNA image is closed under reversal.
pub fn reversible_dna_code(
    c: &Codeword,
    m: usize,
    t: usize,
    variant: SetVariant,
    basis: &DnaBasis,
) -> Result<MapCode, DnaError> {
    if !basis.is_dna_quasi_reciprocal_word(c, m)? {
        return Err(DnaError::NotDnaQuasiReciprocal { m });
    }
    check_variant_preconditions(variant, c.len(), m)?;
    let gens = shift_family(c, m, t, variant);
    map_code(&gens, basis)
}

/// Like [`reversible_dna_code`] with the all-ones word adjoined; the DNA
/// image is closed under reversal and complementation.
pub fn reversible_complement_dna_code(
    c: &Codeword,
    m: usize,
    t: usize,
    variant: SetVariant,
    basis: &DnaBasis,
) -> Result<MapCode, DnaError> {
    if !basis.is_dna_quasi_reciprocal_word(c, m)? {
        return Err(DnaError::NotDnaQuasiReciprocal { m });
    }
    check_variant_preconditions(variant, c.len(), m)?;
    let mut gens = shift_family(c, m, t, variant);
    let ones = Codeword::all_ones(basis.field(), c.len());
    if !gens.contains(&ones) {
        gens.push(ones);
    }
    map_code(&gens, basis)
}

/// Analysis record for a map-code.
#[derive(Debug, Clone, Serialize)]
pub struct MapCodeReport {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub dim4: usize,
    pub d: Option<u32>,
    pub dna_distance: Option<u32>,
    pub reversible: bool,
    pub complement_closed: bool,
    pub generators: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dna::is_dna_m_quasi_reciprocal;
    use std::collections::HashSet;

    fn basis3() -> DnaBasis {
        DnaBasis::new(3, &Field::gf(64).unwrap()).unwrap()
    }

    fn block_word(b: &DnaBasis) -> Codeword {
        b.zeta_bar(&"TTTAAATTTTAAATAATAAAT".parse().unwrap())
            .unwrap()
    }

    /// GF(4)-combination of the eta family rows of a code.
    fn combine(code: &MapCode, coeffs: &[u8]) -> Codeword {
        let field = code.dna_basis().field();
        let mut acc = Codeword::zero(field, code.len());
        for (&s, g) in coeffs.iter().zip(code.generators()) {
            let term = g.scale(&crate::field::Felt::new(field, s as u16)).unwrap();
            acc = acc.add(&term).unwrap();
        }
        acc
    }

    #[test]
    fn block_code_has_dimension_six() {
        let b = basis3();
        let c = block_word(&b);
        let code = reversible_dna_code(&c, 3, 0, SetVariant::S, &b).unwrap();
        assert_eq!(code.dim4(), 6);
        // oracle: distinct-codeword count over all 4^6 combinations
        let mut seen = HashSet::new();
        let mut coeffs = vec![0u8; 6];
        loop {
            seen.insert(combine(&code, &coeffs).indices().to_vec());
            let mut i = 0;
            while i < 6 {
                coeffs[i] += 1;
                if coeffs[i] < 4 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == 6 {
                break;
            }
        }
        assert_eq!(seen.len(), 4096);
        assert_eq!(code.size(), 4096);
        let enumerated = code.enumerate(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(enumerated.len(), 4096);
        let listed: HashSet<Vec<u16>> = enumerated.iter().map(|w| w.indices().to_vec()).collect();
        assert_eq!(listed, seen);
    }

    #[test]
    fn published_codewords_and_reversal_pairs() {
        let b = basis3();
        let c = block_word(&b);
        let code = reversible_dna_code(&c, 3, 0, SetVariant::S, &b).unwrap();
        // family order: eta^j(pi^0) for j = 0..2, then eta^j(pi^-3)
        let c1 = combine(&code, &[0, 2, 0, 0, 0, 0]);
        let c2 = combine(&code, &[0, 0, 0, 0, 0, 2]);
        let c3 = combine(&code, &[1, 0, 0, 0, 2, 0]);
        let c4 = combine(&code, &[0, 0, 2, 1, 0, 0]);
        let d: Vec<String> = [&c1, &c2, &c3, &c4]
            .iter()
            .map(|w| b.zeta_bar_inv(w).to_string())
            .collect();
        assert_eq!(d[0], "CCCAAACCCAACCAACAAACA");
        assert_eq!(d[1], "ACAAACAACCAACCCAAACCC");
        assert_eq!(d[2], "TTGCAAGTTTCACGCATACCG");
        assert_eq!(d[3], "GCCATACGCACTTTGAACGTT");
        assert_eq!(d[0].chars().rev().collect::<String>(), d[1]);
        assert_eq!(d[2].chars().rev().collect::<String>(), d[3]);
        for w in [&c1, &c2, &c3, &c4] {
            assert!(code.contains(w).unwrap());
        }
        assert!(code.is_dna_reversible());
        // full-set closure for this enumerable size
        let words: HashSet<DnaWord> = code
            .dna_words(DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(words.len(), 4096);
        assert!(words.iter().all(|w| words.contains(&w.reverse())));
        assert!(is_dna_m_quasi_reciprocal(&b.zeta_bar_inv(&c), 3, 3).unwrap());
    }

    #[test]
    fn complement_construction_adds_the_all_ones_word() {
        let b = basis3();
        let c = block_word(&b);
        let code = reversible_complement_dna_code(&c, 3, 0, SetVariant::S, &b).unwrap();
        assert_eq!(code.dim4(), 7);
        assert!(code.is_complement_closed());
        assert!(code.is_dna_reversible());

        // coefficient layout: 6 family rows, then 3 eta-copies of r
        let c5 = combine(&code, &[0, 2, 0, 0, 0, 0, 3, 0, 0]);
        let c6 = combine(&code, &[0, 0, 0, 0, 0, 2, 3, 0, 0]);
        let c7 = combine(&code, &[0, 0, 0, 0, 0, 2, 2, 0, 0]);
        let d5 = b.zeta_bar_inv(&c5).to_string();
        let d6 = b.zeta_bar_inv(&c6).to_string();
        let d7 = b.zeta_bar_inv(&c7).to_string();
        assert_eq!(d5, "TTTGGGTTTGGTTGGTGGGTG");
        assert_eq!(d6, "GTGGGTGGTTGGTTTGGGTTT");
        assert_eq!(d7, "CACCCACCAACCAAACCCAAA");
        assert_eq!(d5.chars().rev().collect::<String>(), d6);
        assert_eq!(
            d6.chars()
                .map(|ch| match ch {
                    'A' => 'T',
                    'T' => 'A',
                    'C' => 'G',
                    _ => 'C',
                })
                .collect::<String>(),
            d7
        );

        let words: HashSet<DnaWord> = code
            .dna_words(DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(words.len(), 16384);
        assert!(words.iter().all(|w| words.contains(&w.reverse())));
        assert!(words.iter().all(|w| words.contains(&w.complement())));
    }

    #[test]
    fn zero_generator_spans_zero_code() {
        let b = basis3();
        let zero = Codeword::zero(b.field(), 4);
        let code = map_code(&[zero], &b).unwrap();
        assert_eq!(code.dim4(), 0);
        assert_eq!(code.enumerate(16).unwrap().len(), 1);
        assert!(code.min_f4_distance(16).is_err());
    }

    #[test]
    fn enumeration_cap_enforced() {
        let b = basis3();
        let c = block_word(&b);
        let code = reversible_dna_code(&c, 3, 0, SetVariant::S, &b).unwrap();
        assert!(matches!(
            code.enumerate(100),
            Err(DnaError::TooLarge {
                size: 4096,
                cap: 100
            })
        ));
    }

    #[test]
    fn non_reciprocal_input_rejected() {
        let b = basis3();
        let c = b.zeta_bar(&"ACGTTTAAA".parse().unwrap()).unwrap();
        assert!(matches!(
            reversible_dna_code(&c, 0, 0, SetVariant::S, &b),
            Err(DnaError::NotDnaQuasiReciprocal { m: 0 })
        ));
    }

    #[test]
    fn field_side_and_block_side_predicates_agree() {
        let b = basis3();
        for (word, m) in [("TTTAAATTTTAAATAATAAAT", 3usize), ("ACGGCATTT", 2)] {
            let dna: DnaWord = word.parse().unwrap();
            let c = b.zeta_bar(&dna).unwrap();
            for probe in 0..c.len() {
                assert_eq!(
                    b.is_dna_quasi_reciprocal_word(&c, probe).unwrap(),
                    is_dna_m_quasi_reciprocal(&dna, 3, probe).unwrap(),
                    "word={word} m={probe} (constructed for m={m})"
                );
            }
        }
    }
}
