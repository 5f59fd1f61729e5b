//! The ladder representation on the filling-factor states `|i, p⟩`,
//! `i = 1..=2p+1`:
//!
//! ```text
//! K̃  = Σ q^i |i⟩⟨i|
//! Ẽ+ = Σ a_i |i⟩⟨i+2|
//! Ẽ− = Σ conj(a_i) |i+2⟩⟨i|     (labels mod 2p+1, representatives 1..=2p+1)
//! ```
//!
//! The commutator relation holds exactly when `|a_i|² − |a_(i−2)|² = [i]_q`
//! for every `i`. Stepping by two visits every label once (the order is odd),
//! so fixing `c = |a_(2p+1)|²` determines all magnitudes.
//!
//! Labels are 1-based throughout the public API; storage is 0-based with
//! label `i` at offset `i − 1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cyclic::GenericCyclicRep;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::rep::{RepDocument, RepKind, RepMatrices, Representation};
use crate::root::{q_number, q_number_by_division, PrimitiveRoot};
use crate::serial;

/// Maps any integer label onto its representative in `1..=n`.
pub fn wrap_label(i: i64, n: usize) -> usize {
    (i - 1).rem_euclid(n as i64) as usize + 1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MagnitudeSolution {
    pub p: u64,
    pub k: u64,
    /// `c = |a_(2p+1)|²`.
    #[serde(with = "serial::real")]
    pub base: f64,
    /// `|a_i|²` for `i = 1..=2p+1` (entry `i − 1`).
    #[serde(with = "serial::real_vec")]
    pub magnitudes: Vec<f64>,
    /// Smallest `c` for which every magnitude is strictly positive is any `c`
    /// above this value.
    #[serde(with = "serial::real")]
    pub infimum_base: f64,
}

impl MagnitudeSolution {
    /// `|a_i|²` for any integer label.
    pub fn magnitude(&self, i: i64) -> f64 {
        self.magnitudes[wrap_label(i, self.magnitudes.len()) - 1]
    }

    /// `|a_i|² − |a_(i−2)|² − [i]_q` for `i = 1..=2p+1`.
    pub fn consolidated_residuals(&self, q: &PrimitiveRoot) -> Vec<f64> {
        let n = self.magnitudes.len() as i64;
        (1..=n)
            .map(|i| self.magnitude(i) - self.magnitude(i - 2) - q_number(i, q))
            .collect()
    }

    /// Residuals of the three-block form of the same system:
    ///
    /// ```text
    /// |a_(2p+1)|² − |a_(2p−1)|² = 0
    /// |a_2p|²     − |a_(2p−2)|² = −1
    /// |a_(l+2)|²  − |a_l|²      = (q^(l+2) − q^(−l−2))/(q − q^(−1)),  l = −1..=2p−3
    /// ```
    ///
    /// The right-hand sides here come from literal complex division, not from
    /// [`q_number`], so the two layers check each other.
    pub fn block_residuals(&self, q: &PrimitiveRoot) -> Vec<f64> {
        let p = self.p as i64;
        let mut out = vec![
            self.magnitude(2 * p + 1) - self.magnitude(2 * p - 1),
            self.magnitude(2 * p) - self.magnitude(2 * p - 2) + 1.0,
        ];
        for l in -1..=(2 * p - 3) {
            let rhs = q_number_by_division(l + 2, q);
            out.push(self.magnitude(l + 2) - self.magnitude(l) - rhs.re);
        }
        out
    }
}

/// Propagates `|a_i|² = |a_(i−2)|² + [i]_q` from `|a_(2p+1)|² = c` around the
/// step-two cycle. `base = None` picks `infimum_base + 1`.
pub fn solve_ladder_magnitudes(q: &PrimitiveRoot, base: Option<f64>) -> Result<MagnitudeSolution> {
    let n = q.dim();
    let mut offsets = vec![0.0; n];
    let mut label = n;
    for _ in 1..n {
        let next = wrap_label(label as i64 + 2, n);
        offsets[next - 1] = offsets[label - 1] + q_number(next as i64, q);
        label = next;
    }
    let infimum_base = -offsets.iter().copied().fold(0.0, f64::min);
    let base = base.unwrap_or(infimum_base + 1.0);
    if !(base > infimum_base) {
        return Err(Error::InfeasibleBase { base, infimum: infimum_base });
    }
    Ok(MagnitudeSolution {
        p: q.p(),
        k: q.k(),
        base,
        magnitudes: offsets.iter().map(|off| base + off).collect(),
        infimum_base,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "RepDocument", try_from = "RepDocument")]
pub struct LadderRep {
    q: PrimitiveRoot,
    /// `a_i` at offset `i − 1`.
    a: Vec<Complex64>,
    k: ComplexMatrix,
    ep: ComplexMatrix,
    em: ComplexMatrix,
}

/// Builds `K̃`, `Ẽ±` from solved magnitudes with `a_i = |a_i| e^(i·phase_i)`.
pub fn build_ladder(q: &PrimitiveRoot, magnitudes: &MagnitudeSolution, phases: Option<&[f64]>) -> Result<LadderRep> {
    let n = q.dim();
    if magnitudes.p != q.p() || magnitudes.k != q.k() || magnitudes.magnitudes.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "magnitudes solved for (p={}, k={}) used with (p={}, k={})",
            magnitudes.p,
            magnitudes.k,
            q.p(),
            q.k()
        )));
    }
    let zeros = vec![0.0; n];
    let phases = phases.unwrap_or(&zeros);
    if phases.len() != n {
        return Err(Error::PhaseLength { expected: n, got: phases.len() });
    }
    if let Some(i) = magnitudes.magnitudes.iter().position(|m| !(*m > 0.0)) {
        return Err(Error::ZeroCoefficient(i + 1));
    }
    let a = magnitudes
        .magnitudes
        .iter()
        .zip(phases)
        .map(|(m, phase)| Complex64::from_polar(m.sqrt(), *phase))
        .collect();
    let rep = LadderRep::from_coefficients(*q, a)?;

    let k_inv = rep.k.inverse().expect("K̃ is diagonal with unit entries");
    assert!((&k_inv - &rep.k.adjoint()).frobenius_norm() <= 1e-12 * n as f64);
    assert_eq!(rep.em, rep.ep.adjoint());
    Ok(rep)
}

impl LadderRep {
    /// Realizes the matrices for arbitrary coefficients `a_1..a_(2p+1)`.
    ///
    /// Zero coefficients are accepted so that non-cyclic variants can be
    /// constructed and checked; [`build_ladder`] never produces them.
    pub fn from_coefficients(q: PrimitiveRoot, a: Vec<Complex64>) -> Result<Self> {
        let n = q.dim();
        if a.len() != n {
            return Err(Error::DimensionMismatch(format!("{} coefficients, expected {n}", a.len())));
        }
        let diag: Vec<Complex64> = (1..=n).map(|i| q.pow(i as i64)).collect();
        let k = ComplexMatrix::from_diagonal(&diag);
        let mut ep = ComplexMatrix::zeros(n);
        let mut em = ComplexMatrix::zeros(n);
        for i in 1..=n {
            let j = wrap_label(i as i64 + 2, n);
            ep.set(i - 1, j - 1, a[i - 1]);
            em.set(j - 1, i - 1, a[i - 1].conj());
        }
        Ok(LadderRep { q, a, k, ep, em })
    }

    /// Rebuilds the ladder representation that a generic representation with
    /// `λ = q^s` is permutation-equivalent to: `a_(σ(m)−2) = g_m`.
    pub fn from_generic(rep: &GenericCyclicRep, s: i64) -> Result<Self> {
        let q = *rep.q();
        let n = q.dim();
        if (rep.lambda() - q.pow(s)).norm() > 1e-12 {
            return Err(Error::Malformed(format!("lambda {} is not q^{s}", rep.lambda())));
        }
        let mut a = vec![Complex64::default(); n];
        for (m, g) in rep.g().iter().enumerate() {
            a[wrap_label(s - 2 * m as i64 - 2, n) - 1] = *g;
        }
        Self::from_coefficients(q, a)
    }

    pub fn q(&self) -> &PrimitiveRoot {
        &self.q
    }

    pub fn p(&self) -> u64 {
        self.q.p()
    }

    /// `a_i` for any integer label.
    pub fn coefficient(&self, i: i64) -> Complex64 {
        self.a[wrap_label(i, self.a.len()) - 1]
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.a
    }

    /// Copy with `a_i` replaced.
    pub fn with_coefficient(&self, i: i64, value: Complex64) -> Result<Self> {
        let mut a = self.a.clone();
        let n = a.len();
        a[wrap_label(i, n) - 1] = value;
        Self::from_coefficients(self.q, a)
    }

    /// Basis vector `|i, p⟩` as a column.
    pub fn basis_state(&self, i: i64) -> Vec<Complex64> {
        let n = self.a.len();
        let mut v = vec![Complex64::default(); n];
        v[wrap_label(i, n) - 1] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl Representation for LadderRep {
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
        self.a.clone()
    }
    fn lowering_coefficients(&self) -> Vec<Complex64> {
        self.a.iter().map(|z| z.conj()).collect()
    }
}

/// `lambda` in a ladder document is the `K̃` eigenvalue on `|2p+1, p⟩`, i.e. 1.
impl From<LadderRep> for RepDocument {
    fn from(rep: LadderRep) -> Self {
        let lowering = rep.lowering_coefficients();
        RepDocument {
            kind: RepKind::Ladder,
            p: rep.q.p(),
            k: rep.q.k(),
            lambda: Complex64::new(1.0, 0.0),
            coefficients: rep.a,
            lowering_coefficients: lowering,
            matrices: RepMatrices { k: rep.k, ep: rep.ep, em: rep.em },
        }
    }
}

impl TryFrom<RepDocument> for LadderRep {
    type Error = Error;

    fn try_from(doc: RepDocument) -> Result<Self> {
        let q = doc.checked_root(RepKind::Ladder)?;
        Ok(LadderRep {
            q,
            a: doc.coefficients,
            k: doc.matrices.k,
            ep: doc.matrices.ep,
            em: doc.matrices.em,
        })
    }
}

/// The relabeling `v_m := |σ(m), p⟩` that puts a ladder representation in
/// generic form with `λ = q^s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Intertwiner {
    pub s: i64,
    /// `σ(m)` as a label in `1..=2p+1`, indexed by `m = 0..=2p`.
    pub sigma: Vec<usize>,
    #[serde(with = "serial::complex")]
    pub lambda: Complex64,
    /// Frobenius distance between the permuted ladder matrices and the generic
    /// realization with `g_m = a_(σ(m)−2)`, `f_m = conj(a_σ(m))`.
    #[serde(with = "serial::real")]
    pub residual: f64,
    #[serde(skip)]
    pub generic: GenericCyclicRep,
}

/// `σ(m) = (s − 2m) mod (2p+1)`, representatives in `1..=2p+1`.
pub fn intertwiner(rep: &LadderRep, s: i64) -> Result<Intertwiner> {
    let q = *rep.q();
    let n = q.dim();
    let sigma: Vec<usize> = (0..n as i64).map(|m| wrap_label(s - 2 * m, n)).collect();
    let perm: Vec<usize> = sigma.iter().map(|l| l - 1).collect();

    let lambda = q.pow(s);
    let g = sigma.iter().map(|&l| rep.coefficient(l as i64 - 2)).collect();
    let f = sigma.iter().map(|&l| rep.coefficient(l as i64).conj()).collect();
    let generic = GenericCyclicRep::from_coefficients(q, lambda, g, f)?;

    let residual = [
        (rep.k_matrix(), generic.k_matrix()),
        (rep.raising(), generic.raising()),
        (rep.lowering(), generic.lowering()),
    ]
    .iter()
    .map(|(ladder, target)| (&ladder.permute(&perm) - target).frobenius_norm().powi(2))
    .sum::<f64>()
    .sqrt();

    Ok(Intertwiner { s, sigma, lambda, residual, generic })
}
