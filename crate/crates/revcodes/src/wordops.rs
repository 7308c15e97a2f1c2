//! Codeword machinery: cyclic shifts, reversal, the m-quasi-reciprocal
//! predicate, and the shift families that generate reversible codes.
//!
//! A coefficient vector (c_0, ..., c_{n-1}) is m-quasi-reciprocal when its
//! first m entries and its last n-m entries are each palindromic. For such a
//! vector the key identity (pi^i(c))^r = pi^(-i-m)(c) holds for every shift
//! exponent i, which is what makes the families below reversal-closed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::WordError;
use crate::field::{Felt, Field, FieldRef};

/// A length-n vector over one field, entry i matching the coefficient of x^i.
#[derive(Clone, PartialEq, Eq)]
pub struct Codeword {
    field: FieldRef,
    entries: Vec<u16>,
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_token_string())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_token_string())
    }
}

impl Codeword {
    pub fn from_felts(entries: &[Felt]) -> Result<Codeword, WordError> {
        let first = entries.first().ok_or(WordError::Empty)?;
        let field = first.field().clone();
        if !entries.iter().all(|e| Field::same_field(e.field(), &field)) {
            return Err(WordError::MixedFields);
        }
        Ok(Codeword {
            field,
            entries: entries.iter().map(|e| e.idx()).collect(),
        })
    }

    pub(crate) fn from_indices(field: &FieldRef, entries: Vec<u16>) -> Codeword {
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.iter().all(|&e| (e as usize) < field.order()));
        Codeword {
            field: field.clone(),
            entries,
        }
    }

    /// Parse a comma-separated token list in the given field.
    pub fn parse(field: &FieldRef, line: &str) -> Result<Codeword, WordError> {
        let mut entries = Vec::new();
        for tok in line.split(',') {
            entries.push(field.parse_idx(tok)?);
        }
        if entries.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(Codeword {
            field: field.clone(),
            entries,
        })
    }

    pub fn to_token_string(&self) -> String {
        self.tokens().join(",")
    }

    pub fn tokens(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|&e| self.field.format_idx(e))
            .collect()
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Felt {
        Felt::new(&self.field, self.entries[i])
    }

    pub(crate) fn indices(&self) -> &[u16] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn zero(field: &FieldRef, n: usize) -> Codeword {
        Codeword::from_indices(field, vec![0; n])
    }

    pub fn all_ones(field: &FieldRef, n: usize) -> Codeword {
        Codeword::from_indices(field, vec![1; n])
    }

    /// pi^i: entry j of the result is c_{(j-i) mod n}. Negative i shifts left;
    /// exponents reduce modulo n.
    pub fn cyclic_shift(&self, i: i64) -> Codeword {
        let n = self.entries.len();
        let s = i.rem_euclid(n as i64) as usize;
        let entries = (0..n).map(|j| self.entries[(j + n - s) % n]).collect();
        Codeword {
            field: self.field.clone(),
            entries,
        }
    }

    pub fn reverse(&self) -> Codeword {
        let mut entries = self.entries.clone();
        entries.reverse();
        Codeword {
            field: self.field.clone(),
            entries,
        }
    }

    pub fn add(&self, other: &Codeword) -> Result<Codeword, WordError> {
        if !Field::same_field(&self.field, &other.field) {
            return Err(WordError::MixedFields);
        }
        if self.len() != other.len() {
            return Err(WordError::MixedLengths);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.add_idx(a, b))
            .collect();
        Ok(Codeword {
            field: self.field.clone(),
            entries,
        })
    }

    pub fn scale(&self, s: &Felt) -> Result<Codeword, WordError> {
        if !Field::same_field(&self.field, s.field()) {
            return Err(WordError::MixedFields);
        }
        let entries = self
            .entries
            .iter()
            .map(|&a| self.field.mul_idx(s.idx(), a))
            .collect();
        Ok(Codeword {
            field: self.field.clone(),
            entries,
        })
    }

    /// Both index conditions of the m-quasi-reciprocal definition: the prefix
    /// (c_0..c_{m-1}) and the suffix (c_m..c_{n-1}) are self-reversible.
    pub fn is_m_quasi_reciprocal(&self, m: usize) -> Result<bool, WordError> {
        let n = self.entries.len();
        if m >= n {
            return Err(WordError::MOutOfRange { m, n });
        }
        let palindrome = |s: &[u16]| s.iter().eq(s.iter().rev());
        Ok(palindrome(&self.entries[..m]) && palindrome(&self.entries[m..]))
    }
}

/// Which generating family to build: the base shift set S_t or one of the
/// fixed-point-extended variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetVariant {
    S,
    E,
    E1,
    E2,
    E3,
}

impl fmt::Display for SetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SetVariant::S => "S",
            SetVariant::E => "E",
            SetVariant::E1 => "E1",
            SetVariant::E2 => "E2",
            SetVariant::E3 => "E3",
        };
        f.write_str(s)
    }
}

impl FromStr for SetVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "S" => Ok(SetVariant::S),
            "E" => Ok(SetVariant::E),
            "E1" => Ok(SetVariant::E1),
            "E2" => Ok(SetVariant::E2),
            "E3" => Ok(SetVariant::E3),
            other => Err(format!(
                "unknown variant `{other}` (expected S, E, E1, E2 or E3)"
            )),
        }
    }
}

/// Check the variant's (n, m) precondition, naming the failed clause.
pub fn check_variant_preconditions(
    variant: SetVariant,
    n: usize,
    m: usize,
) -> Result<(), WordError> {
    let fail = |clause: &str| {
        Err(WordError::VariantPrecondition {
            variant: variant.to_string(),
            clause: clause.to_string(),
        })
    };
    match variant {
        SetVariant::S => Ok(()),
        SetVariant::E => {
            if m != 0 {
                return fail("m must be 0");
            }
            if !n.is_multiple_of(2) {
                return fail("n must be even");
            }
            Ok(())
        }
        SetVariant::E1 => {
            if m < 1 || m > n - 2 {
                return fail("m must satisfy 1 <= m <= n-2");
            }
            if !m.is_multiple_of(2) {
                return fail("m must be even");
            }
            Ok(())
        }
        SetVariant::E2 => {
            if m < 1 || m > n - 2 {
                return fail("m must satisfy 1 <= m <= n-2");
            }
            if !(n - m).is_multiple_of(2) {
                return fail("n-m must be even");
            }
            Ok(())
        }
        SetVariant::E3 => {
            if m < 1 || m > n - 2 {
                return fail("m must satisfy 1 <= m <= n-2");
            }
            if !m.is_multiple_of(2) {
                return fail("m must be even");
            }
            if !(n - m).is_multiple_of(2) {
                return fail("n-m must be even");
            }
            Ok(())
        }
    }
}

/// Shift exponents for a family, in canonical order:
/// t, t-1, ..., 0, -m, -m-1, ..., -m-t, then the variant's extra fixed points.
fn shift_exponents(variant: SetVariant, n: usize, m: usize, t: usize) -> Vec<i64> {
    let t = t.min(n); // further shifts only cycle
    let m = m as i64;
    let n = n as i64;
    let t = t as i64;
    let mut exps: Vec<i64> = (0..=t).rev().collect();
    exps.extend((m..=m + t).map(|e| -e));
    match variant {
        SetVariant::S => {}
        SetVariant::E => exps.push(n / 2),
        SetVariant::E1 => exps.push(-m / 2),
        SetVariant::E2 => exps.push((n - m) / 2),
        SetVariant::E3 => {
            exps.push(-m / 2);
            exps.push((n - m) / 2);
        }
    }
    exps
}

/// The shift family of `c` with exact duplicates removed, order preserved.
/// No quasi-reciprocity check is performed here; use [`build_generating_set`]
/// for the validated entry point.
pub(crate) fn shift_family(c: &Codeword, m: usize, t: usize, variant: SetVariant) -> Vec<Codeword> {
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut out = Vec::new();
    for e in shift_exponents(variant, c.len(), m, t) {
        let w = c.cyclic_shift(e);
        if seen.insert(w.indices().to_vec()) {
            out.push(w);
        }
    }
    out
}

/// Build the generating set S_t / E_t / E_t^(1) / E_t^(2) / E_t^(3) of an
/// m-quasi-reciprocal codeword, validating every precondition.
pub fn build_generating_set(
    c: &Codeword,
    m: usize,
    t: usize,
    variant: SetVariant,
) -> Result<Vec<Codeword>, WordError> {
    if !c.is_m_quasi_reciprocal(m)? {
        return Err(WordError::NotQuasiReciprocal { m });
    }
    check_variant_preconditions(variant, c.len(), m)?;
    Ok(shift_family(c, m, t, variant))
}
