//! F_q-linear code analysis: span and rank, exact minimum distance,
//! reversibility, the Griesmer bound and MDS classification.
//!
//! Minimum distance is found by enumerating one message per scalar class
//! (first nonzero message coordinate fixed to 1), i.e. (q^k-1)/(q-1)
//! encodings; Hamming weight is invariant under nonzero scaling, so the
//! minimum over representatives is the true minimum weight. The message
//! space is walked depth-first with shared partial sums and the top level
//! is split across rayon workers with a min-reduction, so the result does
//! not depend on the worker count.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::CodeError;
use crate::field::{Field, FieldRef};
use crate::wordops::Codeword;

/// An F_q-linear code given by a generator list, with a canonical reduced
/// row-echelon basis.
pub struct LinearCode {
    field: FieldRef,
    n: usize,
    generators: Vec<Codeword>,
    basis: Vec<Vec<u16>>,
    pivots: Vec<usize>,
    dist: OnceLock<u32>,
}

impl LinearCode {
    /// The span of a nonempty generating set (rows need not be independent).
    pub fn span(gens: &[Codeword]) -> Result<LinearCode, CodeError> {
        let first = gens
            .first()
            .ok_or_else(|| CodeError::Validation("empty generating set".into()))?;
        let field = first.field().clone();
        let n = first.len();
        for g in gens {
            if !Field::same_field(g.field(), &field) {
                return Err(CodeError::Validation(
                    "generators belong to different fields".into(),
                ));
            }
            if g.len() != n {
                return Err(CodeError::Validation(
                    "generators have mixed lengths".into(),
                ));
            }
        }
        let mut rows: Vec<Vec<u16>> = gens.iter().map(|g| g.indices().to_vec()).collect();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = field.inv_idx(rows[r][col]).expect("pivot is nonzero");
            for x in rows[r].iter_mut() {
                *x = field.mul_idx(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[col] != 0 {
                    let c = row[col];
                    for (x, &p) in row.iter_mut().zip(&pivot_row) {
                        *x = field.sub_idx(*x, field.mul_idx(c, p));
                    }
                }
            }
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        let pivots = rows
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).expect("basis row nonzero"))
            .collect();
        Ok(LinearCode {
            field,
            n,
            generators: gens.to_vec(),
            basis: rows,
            pivots,
            dist: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Dimension k = rank of the generating set.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[Codeword] {
        &self.generators
    }

    /// Reduced row-echelon basis (canonical for the row space).
    pub fn basis(&self) -> Vec<Codeword> {
        self.basis
            .iter()
            .map(|r| Codeword::from_indices(&self.field, r.clone()))
            .collect()
    }

    /// Membership by elimination against the echelon basis.
    pub fn contains(&self, w: &Codeword) -> Result<bool, CodeError> {
        if !Field::same_field(w.field(), &self.field) {
            return Err(CodeError::Validation("word from a different field".into()));
        }
        if w.len() != self.n {
            return Err(CodeError::Validation("word of mismatched length".into()));
        }
        let mut v = w.indices().to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let c = v[p];
                for j in 0..self.n {
                    let s = self.field.mul_idx(c, row[j]);
                    v[j] = self.field.sub_idx(v[j], s);
                }
            }
        }
        Ok(v.iter().all(|&x| x == 0))
    }

    /// True iff the reverse of every basis row lies back in the span
    /// (sufficient by linearity of reversal).
    pub fn is_reversible(&self) -> bool {
        self.basis().iter().all(|row| {
            self.contains(&row.reverse())
                .expect("basis rows share field and length")
        })
    }

    /// Exact minimum Hamming distance; cached after the first call.
    pub fn min_distance(&self) -> Result<u32, CodeError> {
        if self.basis.is_empty() {
            return Err(CodeError::ZeroCode);
        }
        if let Some(&d) = self.dist.get() {
            return Ok(d);
        }
        let d = min_weight_projective(&self.field, &self.basis);
        let _ = self.dist.set(d);
        Ok(d)
    }

    /// Full analysis record; computes the distance if needed.
    pub fn report(&self) -> Result<CodeReport, CodeError> {
        let k = self.dimension();
        let d = self.min_distance()?;
        let q = self.field.order();
        let griesmer = griesmer_check(self.n, k, d, q)?;
        Ok(CodeReport {
            q,
            n: self.n,
            k,
            d,
            reversible: self.is_reversible(),
            griesmer: griesmer.as_str().to_string(),
            class: mds_class(self.n, k, d).as_str().to_string(),
            generators: self.generators.iter().map(|g| g.tokens()).collect(),
        })
    }
}

/// Analysis record as emitted by the CLI (`--json` mode prints it verbatim).
#[derive(Debug, Clone, Serialize)]
pub struct CodeReport {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub reversible: bool,
    pub griesmer: String,
    pub class: String,
    pub generators: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GriesmerStatus {
    MetExactly,
    SatisfiedStrictly,
}

impl GriesmerStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            GriesmerStatus::MetExactly => "met",
            GriesmerStatus::SatisfiedStrictly => "strict",
        }
    }
}

/// Evaluate n >= sum_{i=0}^{k-1} ceil(d / q^i) with exact ceilings. A
/// violation is reported as an internal-inconsistency error since genuine
/// codes always satisfy the bound.
pub fn griesmer_check(n: usize, k: usize, d: u32, q: usize) -> Result<GriesmerStatus, CodeError> {
    if k == 0 || d == 0 {
        return Err(CodeError::Validation(
            "griesmer_check needs k >= 1 and d >= 1".into(),
        ));
    }
    let mut sum: usize = 0;
    let mut qpow: u128 = 1;
    for _ in 0..k {
        sum += (d as u128).div_ceil(qpow) as usize;
        qpow = qpow.saturating_mul(q as u128);
    }
    if sum > n {
        return Err(CodeError::GriesmerViolated {
            n,
            k,
            d,
            q,
            bound: sum,
        });
    }
    Ok(if sum == n {
        GriesmerStatus::MetExactly
    } else {
        GriesmerStatus::SatisfiedStrictly
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsClass {
    Mds,
    AlmostMds,
    Neither,
}

impl MdsClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            MdsClass::Mds => "MDS",
            MdsClass::AlmostMds => "almost-MDS",
            MdsClass::Neither => "-",
        }
    }
}

/// d = n-k+1 is MDS; d = n-k is almost MDS.
pub fn mds_class(n: usize, k: usize, d: u32) -> MdsClass {
    if d as usize + k == n + 1 {
        MdsClass::Mds
    } else if d as usize + k == n {
        MdsClass::AlmostMds
    } else {
        MdsClass::Neither
    }
}

// ---------------------------------------------------------------------------
// Projective minimum-weight enumeration
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum Adder<'a> {
    Xor,
    Table { tbl: &'a [u16], q: usize },
    Slow(&'a Field),
}

impl Adder<'_> {
    #[inline]
    fn add_into(&self, out: &mut [u16], a: &[u16], b: &[u16]) {
        match self {
            Adder::Xor => {
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = x ^ y;
                }
            }
            Adder::Table { tbl, q } => {
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = tbl[x as usize * q + y as usize];
                }
            }
            Adder::Slow(f) => {
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = f.add_idx(x, y);
                }
            }
        }
    }
}

struct WeightSearch<'a> {
    scaled: &'a [Vec<Vec<u16>>],
    adder: Adder<'a>,
    q: usize,
    k: usize,
    bufs: Vec<Vec<u16>>,
    best: u32,
}

impl WeightSearch<'_> {
    fn leaf(&mut self, depth: usize) {
        let w = self.bufs[depth].iter().filter(|&&x| x != 0).count() as u32;
        if w < self.best {
            self.best = w;
        }
    }

    /// Enumerate scalars for rows `lvl..k` on top of the partial sum held in
    /// `bufs[depth]`; scalar 0 reuses the buffer in place.
    fn descend(&mut self, lvl: usize, depth: usize) {
        if lvl == self.k {
            self.leaf(depth);
            return;
        }
        self.descend(lvl + 1, depth);
        for s in 1..self.q {
            let (lo, hi) = self.bufs.split_at_mut(depth + 1);
            self.adder
                .add_into(&mut hi[0], &lo[depth], &self.scaled[lvl][s]);
            self.descend(lvl + 1, depth + 1);
        }
    }
}

fn make_adder(field: &Field) -> Adder<'_> {
    if field.characteristic() == 2 {
        Adder::Xor
    } else if !field.add_table().is_empty() {
        Adder::Table {
            tbl: field.add_table(),
            q: field.order(),
        }
    } else {
        Adder::Slow(field)
    }
}

fn min_weight_projective(field: &Field, basis: &[Vec<u16>]) -> u32 {
    let k = basis.len();
    let n = basis[0].len();
    let q = field.order();
    // scaled[i][s] = s * basis[i]
    let scaled: Vec<Vec<Vec<u16>>> = basis
        .iter()
        .map(|row| {
            (0..q as u16)
                .map(|s| row.iter().map(|&x| field.mul_idx(s, x)).collect())
                .collect()
        })
        .collect();

    // Top-level tasks: pivot coordinate j (coefficient fixed to 1), and when
    // further free coordinates exist, the scalar of the first one.
    let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
    for j in 0..k {
        if j + 1 == k {
            tasks.push((j, None));
        } else {
            for s in 0..q {
                tasks.push((j, Some(s)));
            }
        }
    }

    tasks
        .into_par_iter()
        .map(|(j, s)| {
            let mut search = WeightSearch {
                scaled: &scaled,
                adder: make_adder(field),
                q,
                k,
                bufs: vec![vec![0u16; n]; k + 1],
                best: u32::MAX,
            };
            search.bufs[0].copy_from_slice(&scaled[j][1]);
            match s {
                None => search.leaf(0),
                Some(0) => search.descend(j + 2, 0),
                Some(s) => {
                    let (lo, hi) = search.bufs.split_at_mut(1);
                    search.adder.add_into(&mut hi[0], &lo[0], &scaled[j + 1][s]);
                    search.descend(j + 2, 1);
                }
            }
            search.best
        })
        .reduce(|| u32::MAX, u32::min)
}
