//! The correspondence between DNA k-bases and GF(4^k).
//!
//! With w the field's primitive element and m_exp the exponent satisfying
//! w^m_exp = 1 + w + ... + w^(k-1), the tuple (w, w^2, ..., w^(k-1), w^m_exp)
//! is a GF(4)-basis of GF(4^k). A k-base b_1..b_k maps to
//! w*z(b_1) + w^2*z(b_2) + ... + w^m_exp*z(b_k). Reversing those coordinates
//! (phi) reverses the k-base; rotating them left (eta) rotates the k-base.
//! Both maps are GF(4)-linear, so they are tabulated once per field.

use crate::dna::{zeta, zeta_inv, Base, DnaWord};
use crate::error::DnaError;
use crate::field::{Felt, Field, FieldRef};
use crate::wordops::Codeword;

/// GF(4) multiplication on canonical indices 0..3.
const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

/// GF(4) multiplicative inverses (index 0 unused).
const GF4_INV: [u8; 4] = [0, 1, 3, 2];

pub(crate) fn gf4_mul(a: u8, b: u8) -> u8 {
    GF4_MUL[a as usize][b as usize]
}

pub(crate) fn gf4_inv(a: u8) -> u8 {
    GF4_INV[a as usize]
}

/// The k-base <-> GF(4^k) correspondence for one field, with the reversal
/// and rotation maps tabulated over all field elements.
#[derive(Clone)]
pub struct DnaBasis {
    field: FieldRef,
    k: usize,
    m_exp: u32,
    elements: Vec<u16>,
    /// DNA-basis coordinates of every element, k GF(4) digits each.
    coords: Vec<u8>,
    phi_tbl: Vec<u16>,
    eta_tbl: Vec<u16>,
    /// Nonzero-coordinate count of every element (DNA-symbol weight).
    dna_wt: Vec<u8>,
}

impl DnaBasis {
    /// Build the basis for GF(4^k). The field must be the canonical GF(4)
    /// (k = 1) or a tower over it, and its primitive element must power down
    /// onto the quaternary generator: w^((4^k-1)/3) = a.
    pub fn new(k: usize, field: &FieldRef) -> Result<DnaBasis, DnaError> {
        let q = field.order();
        if k == 0 || 4usize.checked_pow(k as u32) != Some(q) {
            return Err(DnaError::Validation(format!(
                "field order {q} is not 4^{k}"
            )));
        }
        let tower_ok = match field.base() {
            _ if k == 1 => q == 4 && field.mul_idx(2, 2) == 3,
            Some(b) => b.order() == 4 && b.mul_idx(2, 2) == 3,
            None => false,
        };
        if !tower_ok {
            return Err(DnaError::Validation(
                "field must be a tower over the canonical GF(4)".into(),
            ));
        }
        let omega = field.primitive_idx();
        let alpha = field
            .pow_idx(omega, ((q - 1) / 3) as i64)
            .expect("primitive element is nonzero");
        if alpha != 2 {
            return Err(DnaError::Validation(
                "primitive element does not satisfy w^((4^k-1)/3) = a".into(),
            ));
        }

        // s = 1 + w + ... + w^(k-1)
        let mut s = 0u16;
        let mut pw = 1u16;
        for _ in 0..k {
            s = field.add_idx(s, pw);
            pw = field.mul_idx(pw, omega);
        }
        let m_exp = field
            .dlog_idx(s)
            .map_err(|_| DnaError::Validation("1 + w + ... + w^(k-1) vanished".into()))?;

        let mut elements: Vec<u16> = (1..k)
            .map(|i| field.pow_idx(omega, i as i64).expect("nonzero"))
            .collect();
        elements.push(s);

        // Quaternary digits of an element: the element itself for k = 1,
        // otherwise the tower digits over the GF(4) base.
        let gf4_digits = |z: u16| -> Vec<u8> {
            if k == 1 {
                vec![z as u8]
            } else {
                field.digits(z).iter().map(|&d| d as u8).collect()
            }
        };

        // Independence over GF(4): invert the k x k matrix whose columns are
        // the basis elements' polynomial digits.
        let cols: Vec<Vec<u8>> = elements.iter().map(|&e| gf4_digits(e)).collect();
        let inv = invert_gf4(&cols).ok_or_else(|| {
            DnaError::Validation("internal inconsistency: basis elements are dependent".into())
        })?;

        // coords(z) = inv * digits(z)
        let mut coords = vec![0u8; q * k];
        let mut dna_wt = vec![0u8; q];
        for z in 0..q {
            let digits = gf4_digits(z as u16);
            for (r, row) in inv.iter().enumerate() {
                let mut acc = 0u8;
                for (c, &d) in digits.iter().enumerate() {
                    acc ^= gf4_mul(row[c], d);
                }
                coords[z * k + r] = acc;
            }
            dna_wt[z] = coords[z * k..(z + 1) * k]
                .iter()
                .filter(|&&c| c != 0)
                .count() as u8;
        }

        let from_coords = |cs: &[u8]| -> u16 {
            let mut acc = 0u16;
            for (&e, &c) in elements.iter().zip(cs) {
                acc = field.add_idx(acc, field.mul_idx(e, c as u16));
            }
            acc
        };

        let mut phi_tbl = vec![0u16; q];
        let mut eta_tbl = vec![0u16; q];
        for z in 0..q {
            let cs = &coords[z * k..(z + 1) * k];
            let rev: Vec<u8> = cs.iter().rev().copied().collect();
            let mut rot: Vec<u8> = cs[1..].to_vec();
            rot.push(cs[0]);
            phi_tbl[z] = from_coords(&rev);
            eta_tbl[z] = from_coords(&rot);
        }

        Ok(DnaBasis {
            field: field.clone(),
            k,
            m_exp,
            elements,
            coords,
            phi_tbl,
            eta_tbl,
            dna_wt,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Exponent with w^m_exp = 1 + w + ... + w^(k-1).
    pub fn m_exp(&self) -> u32 {
        self.m_exp
    }

    /// The basis elements (w, w^2, ..., w^(k-1), w^m_exp).
    pub fn elements(&self) -> Vec<Felt> {
        self.elements
            .iter()
            .map(|&e| Felt::new(&self.field, e))
            .collect()
    }

    /// DNA-basis coordinates of an element, as GF(4) indices.
    pub(crate) fn coords_of(&self, idx: u16) -> &[u8] {
        &self.coords[idx as usize * self.k..(idx as usize + 1) * self.k]
    }

    pub(crate) fn dna_weight_of(&self, idx: u16) -> u32 {
        self.dna_wt[idx as usize] as u32
    }

    pub(crate) fn phi_idx(&self, idx: u16) -> u16 {
        self.phi_tbl[idx as usize]
    }

    pub(crate) fn eta_idx(&self, idx: u16) -> u16 {
        self.eta_tbl[idx as usize]
    }

    fn check_field(&self, f: &FieldRef) {
        assert!(
            Field::same_field(f, &self.field),
            "value belongs to a different field than the basis"
        );
    }

    /// Reverse the DNA-basis coordinates: (z_1, ..., z_k) -> (z_k, ..., z_1).
    pub fn phi(&self, z: &Felt) -> Felt {
        self.check_field(z.field());
        Felt::new(&self.field, self.phi_idx(z.idx()))
    }

    /// Rotate the DNA-basis coordinates left: (z_1, ..., z_k) -> (z_2, ..., z_k, z_1).
    pub fn eta(&self, z: &Felt) -> Felt {
        self.check_field(z.field());
        Felt::new(&self.field, self.eta_idx(z.idx()))
    }

    pub fn eta_pow(&self, z: &Felt, l: usize) -> Felt {
        self.check_field(z.field());
        let mut idx = z.idx();
        for _ in 0..l % self.k {
            idx = self.eta_idx(idx);
        }
        Felt::new(&self.field, idx)
    }

    /// Entrywise eta^l on a codeword.
    pub fn eta_pow_word(&self, c: &Codeword, l: usize) -> Codeword {
        self.check_field(c.field());
        let mut entries = c.indices().to_vec();
        for _ in 0..l % self.k {
            for e in entries.iter_mut() {
                *e = self.eta_idx(*e);
            }
        }
        Codeword::from_indices(&self.field, entries)
    }

    /// Reverse a codeword and apply phi entrywise. This is the field-side
    /// image of DNA reversal on the corresponding k-base tuple.
    pub fn phi_reverse_word(&self, c: &Codeword) -> Codeword {
        self.check_field(c.field());
        let entries = c.indices().iter().rev().map(|&e| self.phi_idx(e)).collect();
        Codeword::from_indices(&self.field, entries)
    }

    /// Blockwise image of a DNA word of length k*n in GF(4^k)^n.
    pub fn zeta_bar(&self, word: &DnaWord) -> Result<Codeword, DnaError> {
        if word.is_empty() || !word.len().is_multiple_of(self.k) {
            return Err(DnaError::BadLength {
                len: word.len(),
                k: self.k,
            });
        }
        let entries = word
            .symbols()
            .chunks(self.k)
            .map(|block| {
                let mut acc = 0u16;
                for (&e, &b) in self.elements.iter().zip(block) {
                    acc = self.field.add_idx(acc, self.field.mul_idx(e, zeta(b)));
                }
                acc
            })
            .collect();
        Ok(Codeword::from_indices(&self.field, entries))
    }

    /// Inverse of [`Self::zeta_bar`]: one k-base per codeword entry.
    pub fn zeta_bar_inv(&self, c: &Codeword) -> DnaWord {
        self.check_field(c.field());
        let mut symbols: Vec<Base> = Vec::with_capacity(c.len() * self.k);
        for &e in c.indices() {
            for &coord in self.coords_of(e) {
                symbols.push(zeta_inv(coord as u16).expect("coordinates are GF(4) digits"));
            }
        }
        DnaWord::new(symbols)
    }

    /// Field-side check that zeta_bar_inv(c) is a DNA-m-quasi-reciprocal
    /// tuple: entries mirror under phi-twisted reversal.
    pub fn is_dna_quasi_reciprocal_word(&self, c: &Codeword, m: usize) -> Result<bool, DnaError> {
        self.check_field(c.field());
        let n = c.len();
        if m >= n {
            return Err(DnaError::Validation(format!(
                "m={m} out of range for {n} blocks (require 0 <= m <= n-1)"
            )));
        }
        let v = c.indices();
        let prefix = (0..m).all(|i| v[i] == self.phi_idx(v[m - 1 - i]));
        let suffix = (m..n).all(|j| v[j] == self.phi_idx(v[m + n - 1 - j]));
        Ok(prefix && suffix)
    }
}

/// Invert a k x k GF(4) matrix given by columns; None when singular.
fn invert_gf4(cols: &[Vec<u8>]) -> Option<Vec<Vec<u8>>> {
    let k = cols.len();
    // rows of [M | I]
    let mut aug: Vec<Vec<u8>> = (0..k)
        .map(|r| {
            let mut row: Vec<u8> = (0..k).map(|c| cols[c][r]).collect();
            row.extend((0..k).map(|c| u8::from(c == r)));
            row
        })
        .collect();
    for col in 0..k {
        let p = (col..k).find(|&r| aug[r][col] != 0)?;
        aug.swap(col, p);
        let inv = gf4_inv(aug[col][col]);
        for x in aug[col].iter_mut() {
            *x = gf4_mul(*x, inv);
        }
        for r in 0..k {
            if r != col && aug[r][col] != 0 {
                let f = aug[r][col];
                let (row_c, row_r) = if r < col {
                    let (lo, hi) = aug.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = aug.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, &y) in row_r.iter_mut().zip(row_c) {
                    *x ^= gf4_mul(f, y);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}
