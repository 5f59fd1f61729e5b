//! Residual checks for the defining relations of `U_q(sl(2))`:
//!
//! ```text
//! [E+, E−] = (K − K⁻¹)/(q − q⁻¹)
//! K E± K⁻¹ = q^(±2s) E±      (s = +1 or −1, reported separately)
//! K† = K⁻¹,  E−† = E+        (unitarity)
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::root::PrimitiveRoot;
use crate::serial;

/// Which sign convention of the conjugation relation the matrices realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjugationSign {
    /// `K E± K⁻¹ = q^(±2) E±`.
    #[serde(rename = "+2")]
    Plus2,
    /// `K E± K⁻¹ = q^(∓2) E±`.
    #[serde(rename = "-2")]
    Minus2,
    /// Both or neither convention holds (e.g. `E± = 0`).
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    #[serde(with = "serial::real")]
    pub commutator_residual: f64,
    /// Residual of the `q^(±2)` convention, combined over `E+` and `E−`.
    #[serde(with = "serial::real")]
    pub conjugation_residual_plus: f64,
    /// Residual of the `q^(∓2)` convention, combined over `E+` and `E−`.
    #[serde(with = "serial::real")]
    pub conjugation_residual_minus: f64,
    pub detected_conjugation_sign: ConjugationSign,
    /// `(‖K†K − I‖_F, ‖E−† − E+‖_F)`.
    #[serde(with = "serial::real_vec")]
    pub unitarity_residuals: Vec<f64>,
    /// Tolerance actually applied: the requested one times the dimension.
    #[serde(with = "serial::real")]
    pub tolerance: f64,
    pub pass: bool,
}

impl RelationReport {
    pub fn conjugation_residual(&self, sign: ConjugationSign) -> f64 {
        match sign {
            ConjugationSign::Plus2 => self.conjugation_residual_plus,
            ConjugationSign::Minus2 => self.conjugation_residual_minus,
            ConjugationSign::Indeterminate => {
                self.conjugation_residual_plus.min(self.conjugation_residual_minus)
            }
        }
    }

    pub fn worst_residual(&self) -> f64 {
        let conj = self.conjugation_residual_plus.min(self.conjugation_residual_minus);
        self.unitarity_residuals.iter().copied().fold(self.commutator_residual.max(conj), f64::max)
    }
}

/// Evaluates every relation residual for the triple `(K, E+, E−)`.
///
/// `tol` is a Frobenius tolerance per unit of dimension. `K⁻¹` is the LU
/// inverse; a singular `K` falls back to `K†`, which the unitarity residual
/// then flags.
pub fn verify_relations(
    k: &ComplexMatrix,
    ep: &ComplexMatrix,
    em: &ComplexMatrix,
    q: &PrimitiveRoot,
    tol: f64,
) -> Result<RelationReport> {
    let n = k.dim();
    if ep.dim() != n || em.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "K is {n}x{n}, E+ is {0}x{0}, E- is {1}x{1}",
            ep.dim(),
            em.dim()
        )));
    }
    let k_inv = k.inverse().unwrap_or_else(|| k.adjoint());
    let qv = q.value();

    let rhs = (k - &k_inv).scale(Complex64::new(1.0, 0.0) / (qv - qv.inv()));
    let commutator_residual = (&ep.commutator(em) - &rhs).frobenius_norm();

    let conj_plus = &(k * ep) * &k_inv;
    let conj_minus = &(k * em) * &k_inv;
    let residual_for = |s: i64| {
        let r_plus = (&conj_plus - &ep.scale(q.pow(2 * s))).frobenius_norm();
        let r_minus = (&conj_minus - &em.scale(q.pow(-2 * s))).frobenius_norm();
        r_plus.hypot(r_minus)
    };
    let conjugation_residual_plus = residual_for(1);
    let conjugation_residual_minus = residual_for(-1);

    let k_unitarity = (&(&k.adjoint() * k) - &ComplexMatrix::identity(n)).frobenius_norm();
    let e_adjoint = (&em.adjoint() - ep).frobenius_norm();

    let tolerance = tol * n as f64;
    let plus_ok = conjugation_residual_plus <= tolerance;
    let minus_ok = conjugation_residual_minus <= tolerance;
    let detected_conjugation_sign = match (plus_ok, minus_ok) {
        (true, false) => ConjugationSign::Plus2,
        (false, true) => ConjugationSign::Minus2,
        _ => ConjugationSign::Indeterminate,
    };
    let pass = commutator_residual <= tolerance
        && (plus_ok || minus_ok)
        && k_unitarity <= tolerance
        && e_adjoint <= tolerance;

    Ok(RelationReport {
        commutator_residual,
        conjugation_residual_plus,
        conjugation_residual_minus,
        detected_conjugation_sign,
        unitarity_residuals: vec![k_unitarity, e_adjoint],
        tolerance,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_operators() {
        let q = PrimitiveRoot::principal(1).unwrap();
        let k = ComplexMatrix::identity(3);
        let z = ComplexMatrix::zeros(3);
        let report = verify_relations(&k, &z, &z, &q, 1e-10).unwrap();
        assert_eq!(report.commutator_residual, 0.0);
        assert_eq!(report.detected_conjugation_sign, ConjugationSign::Indeterminate);
        assert!(report.pass);
    }

    #[test]
    fn dimension_mismatch() {
        let q = PrimitiveRoot::principal(1).unwrap();
        let err = verify_relations(
            &ComplexMatrix::identity(3),
            &ComplexMatrix::zeros(2),
            &ComplexMatrix::zeros(3),
            &q,
            1e-10,
        );
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn report_serializes_decimal_strings() {
        let q = PrimitiveRoot::principal(1).unwrap();
        let k = ComplexMatrix::identity(3);
        let z = ComplexMatrix::zeros(3);
        let report = verify_relations(&k, &z, &z, &q, 1e-10).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["commutator_residual"], "0.0000000000000000e0");
        assert_eq!(v["detected_conjugation_sign"], "indeterminate");
        let back: RelationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, report);
    }
}
