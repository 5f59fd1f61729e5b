//! Trial wavefunctions at small particle number and their overlaps.
//!
//! Convention: a wavefunction value includes the Gaussian factor
//! `exp(−½ Σ|z_k|²)` and the scalar product is the bare integral
//! `⟨A, B⟩ = ∫ Π d²z_k conj(ψ_A) ψ_B`. Both overlap routes therefore integrate
//! the Gaussian-stripped amplitudes against `e^(−Σ|z_k|²)`.

mod exact;
mod gram;
mod mc;
mod poly;
pub mod quadrature;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hierarchy::{blok_wen_sequence, eval_standard_cf, FillingFactor, StandardCf};
use quadrature::GaussHermite;

pub use exact::{inner_product_exact, moment, EXACT_DEGREE_BOUND};
pub use gram::{gram_matrix, GramEntry, GramMatrix, GramParams, InnerProductResult, Method as GramMethod};
pub use mc::{inner_product_mc, mc_moments, SampleStream, CHUNK_SAMPLES, MIN_MC_SAMPLES};
pub use poly::{jastrow_polynomial, Polynomial};

/// Smallest accepted quadrature order for the quasiparticle integral.
pub const MIN_QUAD_ORDER: usize = 8;
pub const DEFAULT_QUAD_ORDER: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Variant {
    /// `Π (z_i − z_j)^m`, `m` odd.
    Laughlin { m: u32 },
    /// Level-one hierarchy state with `N_1` quasiparticles coupled to the
    /// electrons through `(w − z_j)^b`.
    HierarchyR1 { a0: u32, a1: i64, b: i8, n1: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WavefunctionSpec {
    pub n0: usize,
    #[serde(flatten)]
    pub variant: Variant,
}

impl WavefunctionSpec {
    pub fn laughlin(m: u32, n0: usize) -> Result<Self> {
        let spec = WavefunctionSpec { n0, variant: Variant::Laughlin { m } };
        spec.validate()?;
        Ok(spec)
    }

    pub fn hierarchy_r1(a0: u32, a1: i64, b: i8, n1: u32, n0: usize) -> Result<Self> {
        let spec = WavefunctionSpec { n0, variant: Variant::HierarchyR1 { a0, a1, b, n1 } };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidWavefunction(msg));
        if self.n0 < 2 {
            return bad(format!("need at least two electrons, got {}", self.n0));
        }
        match self.variant {
            Variant::Laughlin { m } if m % 2 == 0 => bad(format!("Laughlin exponent must be odd, got {m}")),
            Variant::HierarchyR1 { a0, .. } if a0 % 2 == 0 => bad(format!("a_0 must be odd and positive, got {a0}")),
            Variant::HierarchyR1 { a1, .. } if a1 == 0 || a1 % 2 != 0 => {
                bad(format!("a_1 must be even and nonzero, got {a1}"))
            }
            Variant::HierarchyR1 { b, .. } if b != 1 && b != -1 => bad(format!("b must be +1 or -1, got {b}")),
            Variant::HierarchyR1 { n1: 0, .. } => bad("need at least one quasiparticle".into()),
            _ => Ok(()),
        }
    }

    /// `1/m`, or `1/(a_0 − 1/a_1)` for the level-one state.
    pub fn filling_factor(&self) -> Result<FillingFactor> {
        match self.variant {
            Variant::Laughlin { m } => FillingFactor::from_ints(1, m as i64),
            Variant::HierarchyR1 { a0, a1, .. } => eval_standard_cf(&StandardCf::new(vec![a0 as i64, a1])?),
        }
    }

    /// Total degree of the electron Jastrow polynomial.
    pub fn jastrow_degree(&self) -> u64 {
        let pairs = (self.n0 * (self.n0 - 1) / 2) as u64;
        match self.variant {
            Variant::Laughlin { m } => m as u64 * pairs,
            Variant::HierarchyR1 { a0, .. } => a0 as u64 * pairs,
        }
    }
}

/// Electron coordinates in magnetic-length units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaneConfig(pub Vec<Complex64>);

impl PlaneConfig {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check(&self, n0: usize) -> Result<()> {
        if self.0.len() != n0 {
            return Err(Error::InvalidWavefunction(format!("{} coordinates for {n0} electrons", self.0.len())));
        }
        Ok(())
    }
}

pub(crate) fn jastrow(m: u32, z: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            acc *= (z[i] - z[j]).powu(m);
        }
    }
    acc
}

fn gaussian(z: &[Complex64]) -> f64 {
    (-0.5 * z.iter().map(|w| w.norm_sqr()).sum::<f64>()).exp()
}

/// `Π_(i<j) (z_i − z_j)^m · exp(−½ Σ|z_k|²)`.
pub fn laughlin_eval(m: u32, config: &PlaneConfig) -> Result<Complex64> {
    let spec = WavefunctionSpec::laughlin(m, config.len())?;
    spec.validate()?;
    Ok(jastrow(m, &config.0) * gaussian(&config.0))
}

/// Level-one hierarchy wavefunction with a single quasiparticle `w`:
///
/// ```text
/// ψ(z) = e^(−½Σ|z|²) Π (z_i − z_j)^(a_0) ∫ d²w e^(−|q_1||w|²) Π_j F(w, z_j)
/// ```
///
/// with `F = w − z_j` for `b = +1` and `F = conj(w − z_j)` for `b = −1` (the
/// negative power traded for its conjugate). The weight `|q_1|` comes from the
/// Blok–Wen sequence of `[a_0, −a_1]`.
#[derive(Debug, Clone)]
pub struct HierarchyEvaluator {
    a0: u32,
    b: i8,
    n0: usize,
    weight: f64,
    rule: GaussHermite,
}

impl HierarchyEvaluator {
    pub fn new(spec: &WavefunctionSpec, quad_order: usize) -> Result<Self> {
        spec.validate()?;
        let Variant::HierarchyR1 { a0, a1, b, n1 } = spec.variant else {
            return Err(Error::Unsupported("quadrature evaluation applies to level-one hierarchy states".into()));
        };
        if n1 != 1 {
            return Err(Error::Unsupported(format!("N_1 = {n1}; only a single quasiparticle is integrated")));
        }
        if quad_order < MIN_QUAD_ORDER {
            return Err(Error::QuadratureOrder { min: MIN_QUAD_ORDER, got: quad_order });
        }
        let cf = StandardCf::new(vec![a0 as i64, a1])?.to_positive();
        let seq = blok_wen_sequence(&cf)?;
        let weight = seq.gaussian_weight(1).expect("level-one sequence").to_f64().expect("finite weight");
        Ok(HierarchyEvaluator { a0, b, n0: spec.n0, weight, rule: GaussHermite::new(quad_order) })
    }

    /// `|q_1|`.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// The amplitude without the electron Gaussian factor.
    pub fn stripped(&self, z: &[Complex64]) -> Complex64 {
        let b = self.b;
        let integral = self.rule.integrate_plane(self.weight, |w| {
            z.iter()
                .map(|zj| if b > 0 { w - zj } else { (w - zj).conj() })
                .product()
        });
        jastrow(self.a0, z) * integral
    }

    pub fn eval(&self, config: &PlaneConfig) -> Result<Complex64> {
        config.check(self.n0)?;
        Ok(self.stripped(&config.0) * gaussian(&config.0))
    }
}

pub fn hierarchy_r1_eval(spec: &WavefunctionSpec, config: &PlaneConfig, quad_order: usize) -> Result<Complex64> {
    HierarchyEvaluator::new(spec, quad_order)?.eval(config)
}

/// Evaluates the full wavefunction (Gaussian factor included) for any variant.
pub fn eval(spec: &WavefunctionSpec, config: &PlaneConfig, quad_order: usize) -> Result<Complex64> {
    match spec.variant {
        Variant::Laughlin { m } => {
            config.check(spec.n0)?;
            laughlin_eval(m, config)
        }
        Variant::HierarchyR1 { .. } => hierarchy_r1_eval(spec, config, quad_order),
    }
}

/// Gaussian-stripped amplitude shared by the Monte Carlo estimator.
pub(crate) enum Amplitude {
    Laughlin(u32),
    Hierarchy(HierarchyEvaluator),
}

impl Amplitude {
    pub(crate) fn new(spec: &WavefunctionSpec, quad_order: usize) -> Result<Self> {
        spec.validate()?;
        Ok(match spec.variant {
            Variant::Laughlin { m } => Amplitude::Laughlin(m),
            Variant::HierarchyR1 { .. } => Amplitude::Hierarchy(HierarchyEvaluator::new(spec, quad_order)?),
        })
    }

    pub(crate) fn eval(&self, z: &[Complex64]) -> Complex64 {
        match self {
            Amplitude::Laughlin(m) => jastrow(*m, z),
            Amplitude::Hierarchy(h) => h.stripped(z),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn laughlin_two_points() {
        let cfg = PlaneConfig(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        let v = laughlin_eval(1, &cfg).unwrap();
        assert!((v - c((-0.5f64).exp(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn laughlin_rejects_even_exponent_and_single_electron() {
        let cfg = PlaneConfig(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(laughlin_eval(2, &cfg), Err(Error::InvalidWavefunction(_))));
        assert!(laughlin_eval(3, &PlaneConfig(vec![c(1.0, 0.0)])).is_err());
    }

    #[test]
    fn laughlin_vanishes_on_coincidence_and_is_antisymmetric() {
        let z = vec![c(0.3, -0.2), c(-0.7, 0.4), c(0.3, -0.2)];
        assert_eq!(laughlin_eval(3, &PlaneConfig(z)).unwrap(), Complex64::default());
        let z = vec![c(0.3, -0.2), c(-0.7, 0.4), c(1.1, 0.5)];
        let swapped = vec![z[1], z[0], z[2]];
        let a = laughlin_eval(5, &PlaneConfig(z)).unwrap();
        let b = laughlin_eval(5, &PlaneConfig(swapped)).unwrap();
        assert!((a + b).norm() < 1e-14 * a.norm());
    }

    #[test]
    fn hierarchy_matches_closed_form() {
        // ∫ d²w e^(−a|w|²) Π(w − z_j) keeps only the w⁰ term: (π/a) Π(−z_j)
        let z = vec![c(0.4, 0.1), c(-0.3, 0.8)];
        for (a0, a1, b) in [(3, 2, 1i8), (3, -2, -1), (1, 2, 1), (5, 4, -1)] {
            let spec = WavefunctionSpec::hierarchy_r1(a0, a1, b, 1, 2).unwrap();
            let ev = HierarchyEvaluator::new(&spec, 16).unwrap();
            assert!((ev.weight() - 1.0 / a0 as f64).abs() < 1e-15);
            let got = ev.eval(&PlaneConfig(z.clone())).unwrap();
            let prod: Complex64 = z.iter().map(|zj| if b > 0 { -zj } else { -zj.conj() }).product();
            let want = jastrow(a0, &z) * gaussian(&z) * prod * (PI * a0 as f64);
            assert!((got - want).norm() < 1e-12 * want.norm(), "{a0} {a1} {b}: {got} vs {want}");
        }
    }

    #[test]
    fn hierarchy_preconditions() {
        let z = PlaneConfig(vec![c(0.4, 0.1), c(-0.3, 0.8)]);
        let spec = WavefunctionSpec::hierarchy_r1(3, 2, 1, 2, 2).unwrap();
        assert!(matches!(hierarchy_r1_eval(&spec, &z, 16), Err(Error::Unsupported(_))));
        let spec = WavefunctionSpec::hierarchy_r1(3, 2, 1, 1, 2).unwrap();
        assert!(matches!(hierarchy_r1_eval(&spec, &z, 4), Err(Error::QuadratureOrder { .. })));
        assert!(WavefunctionSpec::hierarchy_r1(3, 3, 1, 1, 2).is_err());
        assert!(WavefunctionSpec::hierarchy_r1(3, 2, 0, 1, 2).is_err());
        assert!(WavefunctionSpec::hierarchy_r1(2, 2, 1, 1, 2).is_err());
    }

    #[test]
    fn filling_factors() {
        assert_eq!(WavefunctionSpec::laughlin(3, 2).unwrap().filling_factor().unwrap().to_string(), "1/3");
        let spec = WavefunctionSpec::hierarchy_r1(3, 2, 1, 1, 2).unwrap();
        assert_eq!(spec.filling_factor().unwrap().to_string(), "2/5");
    }

    #[test]
    fn spec_json_shape() {
        let spec = WavefunctionSpec::laughlin(3, 2).unwrap();
        let v = serde_json::to_value(spec).unwrap();
        assert_eq!(v, serde_json::json!({"n0": 2, "variant": "laughlin", "m": 3}));
        let back: WavefunctionSpec = serde_json::from_value(v).unwrap();
        assert_eq!(back, spec);
    }
}
