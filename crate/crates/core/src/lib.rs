//! Cyclic representations of `U_q(sl(2))` at roots of unity and the
//! quantum Hall filling-factor states they act on.
//!
//! The crate is split along the lines of the computation:
//!
//! - [`root`] and [`matrix`]: primitive roots of unity, q-numbers and the dense
//!   complex matrices every representation is realized on.
//! - [`relations`]: a residual-based verifier for the defining relations.
//! - [`cyclic`] and [`ladder`]: the generic `(λ, g_m, f_m)` cyclic representation,
//!   the filling-factor ladder representation, their coefficient solvers and the
//!   permutation intertwiner between the two.
//! - [`hierarchy`]: exact-rational hierarchy continued fractions, Blok–Wen
//!   sequences and the `ν = i/(2p+1)` state family.
//! - [`wavefn`]: Laughlin and level-1 hierarchy trial wavefunctions, exact
//!   Gaussian-moment overlaps and a reproducible Monte Carlo estimator.

pub mod cyclic;
pub mod error;
pub mod hierarchy;
pub mod ladder;
pub mod matrix;
pub mod relations;
pub mod rep;
pub mod root;
pub mod serial;
pub mod wavefn;

pub use cyclic::GenericCyclicRep;
pub use error::{Error, Result};
pub use ladder::{LadderRep, MagnitudeSolution};
pub use matrix::ComplexMatrix;
pub use relations::{verify_relations, ConjugationSign, RelationReport};
pub use rep::{cyclicity_check, CyclicityReport, Representation};
pub use root::{q_number, PrimitiveRoot};

/// Default Frobenius tolerance for relation checks, before dimension scaling.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
