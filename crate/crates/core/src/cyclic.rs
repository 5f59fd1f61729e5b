//! The generic cyclic representation on `{v_0, …, v_2p}`:
//!
//! ```text
//! K v_m  = λ q^(−2m) v_m
//! E+ v_m = g_m v_(m+1)
//! E− v_m = f_m v_(m−1)        (indices mod 2p+1)
//! ```
//!
//! With `f_(m+1) = conj(g_m)` and `|λ| = 1` the representation is unitary and
//! the commutator relation reduces to
//! `|g_(m−1)|² − |g_m|² = Im(λ q^(−2m)) / sin θ`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::rep::{RepDocument, RepKind, RepMatrices, Representation};
use crate::root::PrimitiveRoot;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "RepDocument", try_from = "RepDocument")]
pub struct GenericCyclicRep {
    q: PrimitiveRoot,
    lambda: Complex64,
    g: Vec<Complex64>,
    f: Vec<Complex64>,
    k: ComplexMatrix,
    ep: ComplexMatrix,
    em: ComplexMatrix,
}

/// Offsets `|g_m|² − |g_0|²` implied by the commutator relation, and the
/// smallest base keeping every `|g_m|²` positive.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericMagnitudes {
    pub offsets: Vec<f64>,
    pub infimum_base: f64,
}

pub fn generic_magnitude_offsets(q: &PrimitiveRoot, lambda: Complex64) -> Result<GenericMagnitudes> {
    let n = q.dim();
    let sin = q.angle().sin();
    let step = |m: usize| (lambda * q.pow(-2 * m as i64)).im / sin;
    let mut offsets = vec![0.0; n];
    let mut scale = step(0).abs();
    for m in 1..n {
        offsets[m] = offsets[m - 1] - step(m);
        scale += step(m).abs();
    }
    // relation at m = 0 closes the cycle: |g_2p|² − |g_0|² = Im(λ)/sin θ
    let closure = (offsets[n - 1] - step(0)).abs();
    if closure > 1e-12 * scale.max(1.0) {
        return Err(Error::ClosureInconsistency(closure));
    }
    let min = offsets.iter().copied().fold(0.0, f64::min);
    Ok(GenericMagnitudes { offsets, infimum_base: -min })
}

/// Solves the unitary constraint system for `g_m`, `f_m` and realizes the
/// matrices.
///
/// `base` is `|g_0|²` (default: infimum + 1); `phases` are the arguments of
/// `g_m` (default: all zero).
pub fn solve_generic_coefficients(
    q: &PrimitiveRoot,
    lambda: Complex64,
    base: Option<f64>,
    phases: Option<&[f64]>,
) -> Result<GenericCyclicRep> {
    let n = q.dim();
    if (lambda.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitLambda(lambda.norm()));
    }
    let mags = generic_magnitude_offsets(q, lambda)?;
    let base = base.unwrap_or(mags.infimum_base + 1.0);
    if !(base > mags.infimum_base) {
        return Err(Error::InfeasibleBase { base, infimum: mags.infimum_base });
    }
    let zeros = vec![0.0; n];
    let phases = phases.unwrap_or(&zeros);
    if phases.len() != n {
        return Err(Error::PhaseLength { expected: n, got: phases.len() });
    }
    let g: Vec<Complex64> = mags
        .offsets
        .iter()
        .zip(phases)
        .map(|(off, phase)| Complex64::from_polar((base + off).sqrt(), *phase))
        .collect();
    let mut f = vec![Complex64::default(); n];
    for m in 0..n {
        f[(m + 1) % n] = g[m].conj();
    }
    GenericCyclicRep::from_coefficients(*q, lambda, g, f)
}

impl GenericCyclicRep {
    /// Realizes the matrices from arbitrary nonzero `λ`, `g_m`, `f_m`.
    pub fn from_coefficients(
        q: PrimitiveRoot,
        lambda: Complex64,
        g: Vec<Complex64>,
        f: Vec<Complex64>,
    ) -> Result<Self> {
        let n = q.dim();
        for (name, v) in [("g", &g), ("f", &f)] {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!("{name} has {} entries, expected {n}", v.len())));
            }
        }
        if lambda.norm() == 0.0 {
            return Err(Error::Malformed("lambda must be nonzero".into()));
        }
        let diag: Vec<Complex64> = (0..n).map(|m| lambda * q.pow(-2 * m as i64)).collect();
        let k = ComplexMatrix::from_diagonal(&diag);
        let mut ep = ComplexMatrix::zeros(n);
        let mut em = ComplexMatrix::zeros(n);
        for m in 0..n {
            ep.set((m + 1) % n, m, g[m]);
            em.set((m + n - 1) % n, m, f[m]);
        }
        Ok(GenericCyclicRep { q, lambda, g, f, k, ep, em })
    }

    pub fn q(&self) -> &PrimitiveRoot {
        &self.q
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn g(&self) -> &[Complex64] {
        &self.g
    }

    pub fn f(&self) -> &[Complex64] {
        &self.f
    }

    /// `|λ| = 1` and `f_(m+1) = conj(g_m)` for every `m`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let n = self.q.dim();
        (self.lambda.norm() - 1.0).abs() <= tol
            && (0..n).all(|m| (self.f[(m + 1) % n] - self.g[m].conj()).norm() <= tol)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl Representation for GenericCyclicRep {
    fn root(&self) -> &PrimitiveRoot {
        &self.q
    }
    fn k_matrix(&self) -> &ComplexMatrix {
        &self.k
    }
    fn raising(&self) -> &ComplexMatrix {
        &self.ep
    }
    fn lowering(&self) -> &ComplexMatrix {
        &self.em
    }
    fn raising_coefficients(&self) -> Vec<Complex64> {
        self.g.clone()
    }
    fn lowering_coefficients(&self) -> Vec<Complex64> {
        self.f.clone()
    }
}

impl From<GenericCyclicRep> for RepDocument {
    fn from(rep: GenericCyclicRep) -> Self {
        RepDocument {
            kind: RepKind::Generic,
            p: rep.q.p(),
            k: rep.q.k(),
            lambda: rep.lambda,
            coefficients: rep.g,
            lowering_coefficients: rep.f,
            matrices: RepMatrices { k: rep.k, ep: rep.ep, em: rep.em },
        }
    }
}

/// Keeps the stored matrices as they are, so a tampered document is still
/// loadable and fails verification instead of being silently repaired.
impl TryFrom<RepDocument> for GenericCyclicRep {
    type Error = Error;

    fn try_from(doc: RepDocument) -> Result<Self> {
        let q = doc.checked_root(RepKind::Generic)?;
        Ok(GenericCyclicRep {
            q,
            lambda: doc.lambda,
            g: doc.coefficients,
            f: doc.lowering_coefficients,
            k: doc.matrices.k,
            ep: doc.matrices.ep,
            em: doc.matrices.em,
        })
    }
}
