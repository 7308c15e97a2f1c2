//! Reversible linear codes over small finite fields, built from
//! quasi-reciprocal coefficient vectors, and their images as reversible and
//! reversible-complement DNA codes over GF(4^k).
//!
//! The crate is organised around the pipeline:
//!
//! * [`field`] — exact arithmetic in GF(p^e) for p in {2, 3, 5}, including
//!   GF(4)-tower constructions of GF(4^k), with exhaustive power tables.
//! * [`wordops`] — cyclic shifts, reversal, the m-quasi-reciprocal predicate
//!   and the reversal-closed generating families S_t, E_t, E_t^(1..3).
//! * [`lincode`] — span/rank over F_q, exact minimum distance, reversibility,
//!   the Griesmer bound and MDS classification.
//! * [`dna`] — the k-base <-> GF(4^k) correspondence, coordinate reversal and
//!   rotation maps, map-codes, reversible(-complement) DNA codes and the
//!   classic DNA constraint checkers.
//! * [`golden`] — a verification harness that recomputes every fact in the
//!   bundled reference dataset.

pub mod dna;
pub mod error;
pub mod field;
pub mod golden;
pub mod lincode;
pub mod wordops;

pub use error::{CodeError, DnaError, FieldError, GoldenError, WordError};
pub use field::{Felt, Field, FieldRef};
pub use lincode::LinearCode;
pub use wordops::{Codeword, SetVariant};
