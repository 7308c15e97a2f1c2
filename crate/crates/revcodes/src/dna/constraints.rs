//! The four classic DNA-code constraints: pairwise Hamming distance, the
//! reverse and reverse-complement variants (which include x = y), and fixed
//! GC content. Each check is independent and reports every violating pair.

use serde::Serialize;

use crate::dna::DnaWord;
use crate::error::DnaError;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub x: String,
    pub y: String,
    pub distance: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstraintVerdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstraintReport {
    pub d: u32,
    pub word_count: usize,
    pub hamming: ConstraintVerdict,
    pub reverse: ConstraintVerdict,
    pub reverse_complement: ConstraintVerdict,
    pub fixed_gc: ConstraintVerdict,
}

impl ConstraintReport {
    pub fn all_ok(&self) -> bool {
        self.hamming.ok && self.reverse.ok && self.reverse_complement.ok && self.fixed_gc.ok
    }
}

/// Check a word set against prescribed minimum distance `d`.
///
/// Hamming runs over distinct pairs; the reverse and reverse-complement
/// checks also compare each word against itself. Fixed GC content requires a
/// single shared G+C count (violations list words off the majority count,
/// with the count in the distance slot).
pub fn check_constraints(words: &[DnaWord], d: u32) -> Result<ConstraintReport, DnaError> {
    let first = words.first().ok_or(DnaError::Empty)?;
    let n = first.len();
    if words.iter().any(|w| w.len() != n) {
        return Err(DnaError::MixedLengths);
    }

    let mut hamming = Vec::new();
    let mut reverse = Vec::new();
    let mut reverse_complement = Vec::new();
    for (i, x) in words.iter().enumerate() {
        let xr = x.reverse();
        let xrc = x.reverse_complement();
        for (j, y) in words.iter().enumerate().skip(i) {
            if i != j {
                let dist = x.hamming_distance(y)?;
                if dist < d {
                    hamming.push(Violation {
                        x: x.to_string(),
                        y: y.to_string(),
                        distance: dist,
                    });
                }
            }
            // d(x^r, y) = d(x, y^r), so unordered pairs with i <= j cover all
            let dist = xr.hamming_distance(y)?;
            if dist < d {
                reverse.push(Violation {
                    x: x.to_string(),
                    y: y.to_string(),
                    distance: dist,
                });
            }
            let dist = xrc.hamming_distance(y)?;
            if dist < d {
                reverse_complement.push(Violation {
                    x: x.to_string(),
                    y: y.to_string(),
                    distance: dist,
                });
            }
        }
    }

    let counts: Vec<usize> = words.iter().map(|w| w.gc_count()).collect();
    let shared = counts.iter().all(|&c| c == counts[0]);
    let gc_violations = if shared {
        Vec::new()
    } else {
        // flag words off the most common count
        let mut hist = std::collections::BTreeMap::new();
        for &c in &counts {
            *hist.entry(c).or_insert(0usize) += 1;
        }
        let majority = *hist.iter().max_by_key(|(_, &n)| n).map(|(c, _)| c).unwrap();
        words
            .iter()
            .zip(&counts)
            .filter(|(_, &c)| c != majority)
            .map(|(w, &c)| Violation {
                x: w.to_string(),
                y: format!("expected GC count {majority}"),
                distance: c as u32,
            })
            .collect()
    };

    Ok(ConstraintReport {
        d,
        word_count: words.len(),
        hamming: ConstraintVerdict {
            ok: hamming.is_empty(),
            violations: hamming,
        },
        reverse: ConstraintVerdict {
            ok: reverse.is_empty(),
            violations: reverse,
        },
        reverse_complement: ConstraintVerdict {
            ok: reverse_complement.is_empty(),
            violations: reverse_complement,
        },
        fixed_gc: ConstraintVerdict {
            ok: shared,
            violations: gc_violations,
        },
    })
}
