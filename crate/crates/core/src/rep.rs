//! Behaviour shared by the generic and ladder cyclic representations.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::relations::{verify_relations, RelationReport};
use crate::root::PrimitiveRoot;
use crate::serial;

/// Relative tolerance on `‖E^(2p+1) − c·I‖_F / (|c|·√dim)`.
pub const CYCLICITY_TOLERANCE: f64 = 1e-9;

/// A `(2p+1)`-dimensional realization of `K`, `E+`, `E−`.
pub trait Representation {
    fn root(&self) -> &PrimitiveRoot;
    fn k_matrix(&self) -> &ComplexMatrix;
    fn raising(&self) -> &ComplexMatrix;
    fn lowering(&self) -> &ComplexMatrix;
    /// The nonzero entries of `E+`, one per basis vector.
    fn raising_coefficients(&self) -> Vec<Complex64>;
    /// The nonzero entries of `E−`, one per basis vector.
    fn lowering_coefficients(&self) -> Vec<Complex64>;

    fn dim(&self) -> usize {
        self.k_matrix().dim()
    }

    fn verify(&self, tol: f64) -> Result<RelationReport> {
        verify_relations(self.k_matrix(), self.raising(), self.lowering(), self.root(), tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclicityReport {
    pub is_cyclic: bool,
    /// `c` in `E+^(2p+1) = c·I`: the product of the raising coefficients.
    #[serde(with = "serial::complex")]
    pub epow_scalar: Complex64,
    /// The same for `E−`.
    #[serde(with = "serial::complex")]
    pub emin_scalar: Complex64,
    #[serde(with = "serial::real")]
    pub raising_residual: f64,
    #[serde(with = "serial::real")]
    pub lowering_residual: f64,
    /// Columns of `E+` (`"+"`) or `E−` (`"-"`) that vanish, i.e. states annihilated.
    pub zero_columns: Vec<(String, usize)>,
}

fn power_residual(e: &ComplexMatrix, scalar: Complex64, order: u64) -> f64 {
    let n = e.dim();
    let diff = &e.pow(order) - &ComplexMatrix::identity(n).scale(scalar);
    let scale = scalar.norm() * (n as f64).sqrt();
    if scale > 0.0 {
        diff.frobenius_norm() / scale
    } else {
        diff.frobenius_norm()
    }
}

/// Checks that no state is annihilated by `E±` and that `E±^(2p+1)` is a
/// nonzero multiple of the identity.
pub fn cyclicity_check<R: Representation + ?Sized>(rep: &R) -> CyclicityReport {
    let order = rep.root().order();
    let (ep, em) = (rep.raising(), rep.lowering());
    let mut zero_columns = Vec::new();
    for (label, m) in [("+", ep), ("-", em)] {
        let floor = f64::EPSILON * m.frobenius_norm();
        for col in 0..m.dim() {
            if m.column_norm(col) <= floor {
                zero_columns.push((label.to_string(), col));
            }
        }
    }
    let epow_scalar: Complex64 = rep.raising_coefficients().iter().product();
    let emin_scalar: Complex64 = rep.lowering_coefficients().iter().product();
    let raising_residual = power_residual(ep, epow_scalar, order);
    let lowering_residual = power_residual(em, emin_scalar, order);
    let is_cyclic = zero_columns.is_empty()
        && epow_scalar.norm() > 0.0
        && emin_scalar.norm() > 0.0
        && raising_residual <= CYCLICITY_TOLERANCE
        && lowering_residual <= CYCLICITY_TOLERANCE;
    CyclicityReport {
        is_cyclic,
        epow_scalar,
        emin_scalar,
        raising_residual,
        lowering_residual,
        zero_columns,
    }
}

/// Which of the two representation forms a document holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Generic,
    Ladder,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepMatrices {
    #[serde(rename = "K")]
    pub k: ComplexMatrix,
    #[serde(rename = "Ep")]
    pub ep: ComplexMatrix,
    #[serde(rename = "Em")]
    pub em: ComplexMatrix,
}

/// On-disk form of either representation. Floats in `lambda` and the
/// coefficient lists are 17-digit decimal strings; matrices use the
/// [`ComplexMatrix`] layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepDocument {
    pub kind: RepKind,
    pub p: u64,
    pub k: u64,
    #[serde(with = "serial::complex")]
    pub lambda: Complex64,
    /// `g_m` (generic) or `a_i` (ladder), in basis order.
    #[serde(with = "serial::complex_vec")]
    pub coefficients: Vec<Complex64>,
    /// `f_m` (generic) or `conj(a_i)` (ladder).
    #[serde(with = "serial::complex_vec")]
    pub lowering_coefficients: Vec<Complex64>,
    pub matrices: RepMatrices,
}

impl RepDocument {
    pub(crate) fn checked_root(&self, kind: RepKind) -> Result<PrimitiveRoot> {
        use crate::error::Error;
        if self.kind != kind {
            return Err(Error::Malformed(format!("expected a {kind:?} document, found {:?}", self.kind)));
        }
        let q = PrimitiveRoot::new(self.p as i64, self.k as i64)?;
        let n = q.dim();
        if self.coefficients.len() != n || self.lowering_coefficients.len() != n {
            return Err(Error::Malformed(format!("coefficient lists must have length {n}")));
        }
        for m in [&self.matrices.k, &self.matrices.ep, &self.matrices.em] {
            if m.dim() != n {
                return Err(Error::DimensionMismatch(format!("matrix is {0}x{0}, expected {n}x{n}", m.dim())));
            }
        }
        Ok(q)
    }
}

/// Either representation, as read back from a document.
#[derive(Debug, Clone)]
pub enum AnyRep {
    Generic(crate::cyclic::GenericCyclicRep),
    Ladder(crate::ladder::LadderRep),
}

impl AnyRep {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RepDocument = serde_json::from_str(text)?;
        Ok(match doc.kind {
            RepKind::Generic => AnyRep::Generic(doc.try_into()?),
            RepKind::Ladder => AnyRep::Ladder(doc.try_into()?),
        })
    }

    pub fn as_rep(&self) -> &dyn Representation {
        match self {
            AnyRep::Generic(r) => r,
            AnyRep::Ladder(r) => r,
        }
    }
}
