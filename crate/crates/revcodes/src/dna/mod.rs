//! DNA-side machinery: the quaternary correspondence between k-bases and
//! GF(4^k), the coordinate reversal and rotation maps, map-codes, and the
//! classic DNA-code constraint checkers.
//!
//! Symbols pair A with T and C with G under the Watson-Crick complement. The
//! base map sends A to 0, T to 1, C to a and G to 1+a in GF(4), so that
//! complementing a symbol adds 1 to its image.

mod basis;
mod constraints;
mod mapcode;

pub use basis::DnaBasis;
pub use constraints::{check_constraints, ConstraintReport, ConstraintVerdict, Violation};
pub use mapcode::{
    map_code, reversible_complement_dna_code, reversible_dna_code, MapCode, MapCodeReport,
    DEFAULT_ENUMERATION_CAP,
};

use std::fmt;

use crate::error::DnaError;

/// One nucleotide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    T,
    C,
    G,
}

impl Base {
    pub fn from_char(c: char) -> Result<Base, DnaError> {
        match c {
            'A' => Ok(Base::A),
            'T' => Ok(Base::T),
            'C' => Ok(Base::C),
            'G' => Ok(Base::G),
            other => Err(DnaError::BadSymbol(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::T => 'T',
            Base::C => 'C',
            Base::G => 'G',
        }
    }

    /// Watson-Crick complement: A <-> T, C <-> G.
    pub fn complement(self) -> Base {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }
}

/// The fixed bijection onto GF(4): A -> 0, T -> 1, C -> a, G -> 1+a
/// (as canonical element indices 0, 1, 2, 3).
pub fn zeta(b: Base) -> u16 {
    match b {
        Base::A => 0,
        Base::T => 1,
        Base::C => 2,
        Base::G => 3,
    }
}

pub fn zeta_inv(idx: u16) -> Result<Base, DnaError> {
    match idx {
        0 => Ok(Base::A),
        1 => Ok(Base::T),
        2 => Ok(Base::C),
        3 => Ok(Base::G),
        other => Err(DnaError::Validation(format!(
            "index {other} is not a GF(4) element"
        ))),
    }
}

/// A word over {A, T, C, G}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnaWord {
    symbols: Vec<Base>,
}

impl fmt::Display for DnaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.symbols {
            write!(f, "{}", b.to_char())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for DnaWord {
    type Err = DnaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s.chars().map(Base::from_char).collect::<Result<_, _>>()?;
        Ok(DnaWord { symbols })
    }
}

impl DnaWord {
    pub fn new(symbols: Vec<Base>) -> DnaWord {
        DnaWord { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Base] {
        &self.symbols
    }

    pub fn reverse(&self) -> DnaWord {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        DnaWord { symbols }
    }

    pub fn complement(&self) -> DnaWord {
        DnaWord {
            symbols: self.symbols.iter().map(|b| b.complement()).collect(),
        }
    }

    pub fn reverse_complement(&self) -> DnaWord {
        self.reverse().complement()
    }

    /// Number of G and C symbols.
    pub fn gc_count(&self) -> usize {
        self.symbols
            .iter()
            .filter(|b| matches!(b, Base::G | Base::C))
            .count()
    }

    pub fn hamming_distance(&self, other: &DnaWord) -> Result<u32, DnaError> {
        if self.len() != other.len() {
            return Err(DnaError::MixedLengths);
        }
        Ok(self
            .symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a != b)
            .count() as u32)
    }
}

/// Parse one-word-per-line text; lines starting with `>` (FASTA headers) and
/// blank lines are ignored.
pub fn parse_word_lines(text: &str) -> Result<Vec<DnaWord>, DnaError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('>') {
            continue;
        }
        out.push(line.parse()?);
    }
    Ok(out)
}

/// The DNA-side quasi-reciprocity predicate on an n-tuple of k-bases: the
/// first m blocks mirror each other reversed, as do the last n-m blocks.
pub fn is_dna_m_quasi_reciprocal(word: &DnaWord, k: usize, m: usize) -> Result<bool, DnaError> {
    if k == 0 || !word.len().is_multiple_of(k) || word.is_empty() {
        return Err(DnaError::BadLength {
            len: word.len(),
            k: k.max(1),
        });
    }
    let n = word.len() / k;
    if m >= n {
        return Err(DnaError::Validation(format!(
            "m={m} out of range for {n} blocks (require 0 <= m <= n-1)"
        )));
    }
    let block = |i: usize| &word.symbols[i * k..(i + 1) * k];
    let mirrored = |i: usize, j: usize| block(i).iter().eq(block(j).iter().rev());
    let prefix = (0..m).all(|i| mirrored(i, m - 1 - i));
    let suffix = (m..n).all(|j| mirrored(j, m + n - 1 - j));
    Ok(prefix && suffix)
}
