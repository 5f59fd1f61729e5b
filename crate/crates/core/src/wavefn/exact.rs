use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::gram::{InnerProductResult, Method};
use super::poly::{jastrow_polynomial, Polynomial};
use super::{Variant, WavefunctionSpec};
use crate::error::{Error, Result};

/// Largest Jastrow degree the exact path will expand.
pub const EXACT_DEGREE_BOUND: u64 = 60;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `∫ z^a conj(z)^b e^(−|z|²) d²z / π = a! δ_ab`.
pub fn moment(a: u32, b: u32) -> BigInt {
    if a == b {
        factorial(a)
    } else {
        BigInt::zero()
    }
}

/// `Σ_(α,β) conj(c_α) d_β Π_k moment(β_k, α_k)`, i.e. the overlap in units of
/// `π^n`. The moment vanishes unless `α = β`, so only shared monomials are
/// visited. Coefficients are integers and conjugation is the identity.
fn pair(a: &Polynomial, b: &Polynomial) -> BigInt {
    let mut total = BigInt::zero();
    for (exp, c_a) in a.terms() {
        let c_b = b.coefficient(exp);
        if c_b.is_zero() {
            continue;
        }
        let weight = exp.iter().fold(BigInt::from(1), |acc, e| acc * moment(*e, *e));
        total += c_a * c_b * weight;
    }
    total
}

pub(crate) fn laughlin_exponent(spec: &WavefunctionSpec) -> Result<u32> {
    spec.validate()?;
    match spec.variant {
        Variant::Laughlin { m } => {
            let degree = spec.jastrow_degree();
            if degree > EXACT_DEGREE_BOUND {
                return Err(Error::DegreeBound { degree, bound: EXACT_DEGREE_BOUND });
            }
            Ok(m)
        }
        Variant::HierarchyR1 { .. } => {
            Err(Error::Unsupported("the exact overlap is available for Laughlin states only".into()))
        }
    }
}

pub(crate) fn exact_result(coefficient: BigInt, n0: usize) -> InnerProductResult {
    let scale = std::f64::consts::PI.powi(n0 as i32);
    let value = coefficient.to_f64().expect("finite") * scale;
    InnerProductResult {
        value: Complex64::new(value, 0.0),
        method: Method::Exact,
        stderr: 0.0,
        samples: 0,
        seed: None,
        pi_multiple: Some(coefficient.to_string()),
        pi_power: n0 as u32,
    }
}

pub(crate) fn pair_polynomials(a: &Polynomial, b: &Polynomial) -> BigInt {
    pair(a, b)
}

pub(crate) fn expand(spec: &WavefunctionSpec) -> Result<Polynomial> {
    let m = laughlin_exponent(spec)?;
    Ok(jastrow_polynomial(m, spec.n0))
}

/// Exact `⟨A, B⟩` for Laughlin states: both Jastrow factors are expanded and
/// paired monomial by monomial with the Gaussian moment identity. The result
/// is an integer multiple of `π^(N_0)`.
pub fn inner_product_exact(a: &WavefunctionSpec, b: &WavefunctionSpec) -> Result<InnerProductResult> {
    if a.n0 != b.n0 {
        return Err(Error::InvalidWavefunction(format!("electron counts differ: {} vs {}", a.n0, b.n0)));
    }
    let (pa, pb) = (expand(a)?, expand(b)?);
    Ok(exact_result(pair(&pa, &pb), a.n0))
}
