use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::cf::PositiveCf;
use super::filling::Rational;
use crate::error::{Error, Result};

/// `θ_α` and `q_α` for `α = 0..=r`:
///
/// ```text
/// θ_0 = 0,  θ_α = (−1)^α / (p_(α−1) − (−1)^α θ_(α−1))
/// q_0 = −1, q_α = (−1)^(α+1) q_(α−1) θ_α
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlokWenSeq {
    pub thetas: Vec<Rational>,
    pub qs: Vec<Rational>,
}

fn alternating(alpha: usize) -> BigRational {
    if alpha % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

pub fn blok_wen_sequence(cf: &PositiveCf) -> Result<BlokWenSeq> {
    let p = cf.coefficients();
    let mut thetas = vec![BigRational::zero()];
    let mut qs = vec![-BigRational::one()];
    for alpha in 1..p.len() {
        let sign = alternating(alpha);
        let denom = BigRational::from_integer(p[alpha - 1].into()) - &sign * &thetas[alpha - 1];
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(alpha));
        }
        let theta = &sign / denom;
        let q = -&sign * &qs[alpha - 1] * &theta;
        thetas.push(theta);
        qs.push(q);
    }
    Ok(BlokWenSeq {
        thetas: thetas.into_iter().map(Rational).collect(),
        qs: qs.into_iter().map(Rational).collect(),
    })
}

impl BlokWenSeq {
    /// Re-checks every term against the recursion, exactly.
    pub fn satisfies_recursion(&self, cf: &PositiveCf) -> bool {
        let p = cf.coefficients();
        if self.thetas.len() != p.len() || self.qs.len() != p.len() {
            return false;
        }
        if !self.thetas[0].0.is_zero() || self.qs[0].0 != -BigRational::one() {
            return false;
        }
        (1..p.len()).all(|alpha| {
            let sign = alternating(alpha);
            let (theta, prev) = (&self.thetas[alpha].0, &self.thetas[alpha - 1].0);
            let denom = BigRational::from_integer(p[alpha - 1].into()) - &sign * prev;
            theta * denom == sign && self.qs[alpha].0 == -&sign * &self.qs[alpha - 1].0 * theta
        })
    }

    /// `|q_α|`, the Gaussian weight of level-`α` quasiparticle coordinates.
    pub fn gaussian_weight(&self, alpha: usize) -> Option<BigRational> {
        self.qs.get(alpha).map(|q| num_traits::Signed::abs(&q.0))
    }
}
