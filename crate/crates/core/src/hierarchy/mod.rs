//! Hierarchy filling factors in exact rational arithmetic.
//!
//! Nothing in this module touches floating point: filling factors, continued
//! fraction values and Blok–Wen sequences are all `BigRational`.

mod blokwen;
mod cf;
mod family;
mod filling;

pub use blokwen::{blok_wen_sequence, BlokWenSeq};
pub use cf::{decompose, decompose_positive, decompose_standard, eval_positive_cf, eval_standard_cf, CfForm, ContinuedFraction, PositiveCf, StandardCf, MAX_DEPTH};
pub use family::{basis_index, family, partition_sum};
pub use filling::{FillingFactor, Rational};
