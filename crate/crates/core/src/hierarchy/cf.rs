//! The two continued-fraction forms of the hierarchy filling factor:
//!
//! ```text
//! standard:  ν = 1/(a_0 − 1/(a_1 − … − 1/a_r))   a_0 odd > 0, a_α even ≠ 0
//! Blok–Wen:  ν = 1/(p_0 + 1/(p_1 + … + 1/p_r))   p_0 odd > 0, p_α even ≠ 0
//! ```
//!
//! The two are related by `p_α = (−1)^α a_α`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::filling::FillingFactor;
use crate::error::{Error, Result};

/// Depth bound for [`decompose`].
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CfForm {
    Standard,
    /// The plus-sign (Blok–Wen) form.
    Positive,
}

impl CfForm {
    fn sign(self) -> i64 {
        match self {
            CfForm::Standard => -1,
            CfForm::Positive => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            CfForm::Standard => "standard",
            CfForm::Positive => "positive",
        }
    }
}

fn check_parity(coeffs: &[i64]) -> Result<()> {
    let Some(&first) = coeffs.first() else {
        return Err(Error::EmptyContinuedFraction);
    };
    if first <= 0 || first % 2 == 0 {
        return Err(Error::Parity { index: 0, value: first.to_string(), rule: "a_0 odd and positive" });
    }
    for (index, &c) in coeffs.iter().enumerate().skip(1) {
        if c == 0 || c % 2 != 0 {
            return Err(Error::Parity { index, value: c.to_string(), rule: "later coefficients even and nonzero" });
        }
    }
    Ok(())
}

/// Coefficients `a_0..a_r` of the standard (minus-sign) form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct StandardCf(Vec<i64>);

/// Coefficients `p_0..p_r` of the plus-sign form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct PositiveCf(Vec<i64>);

macro_rules! cf_common {
    ($ty:ident) => {
        impl $ty {
            pub fn new(coeffs: Vec<i64>) -> Result<Self> {
                check_parity(&coeffs)?;
                Ok($ty(coeffs))
            }

            pub fn coefficients(&self) -> &[i64] {
                &self.0
            }

            /// `r`, the index of the last coefficient.
            pub fn depth(&self) -> usize {
                self.0.len() - 1
            }
        }

        impl TryFrom<Vec<i64>> for $ty {
            type Error = Error;
            fn try_from(v: Vec<i64>) -> Result<Self> {
                $ty::new(v)
            }
        }

        impl From<$ty> for Vec<i64> {
            fn from(cf: $ty) -> Vec<i64> {
                cf.0
            }
        }
    };
}

cf_common!(StandardCf);
cf_common!(PositiveCf);

impl StandardCf {
    /// The same filling factor in plus-sign form.
    pub fn to_positive(&self) -> PositiveCf {
        PositiveCf(self.0.iter().enumerate().map(|(i, a)| if i % 2 == 1 { -a } else { *a }).collect())
    }
}

impl PositiveCf {
    pub fn to_standard(&self) -> StandardCf {
        StandardCf(self.0.iter().enumerate().map(|(i, p)| if i % 2 == 1 { -p } else { *p }).collect())
    }

    /// Whether every `p_α` is positive, as in the textbook Blok–Wen sequences.
    pub fn is_all_positive(&self) -> bool {
        self.0.iter().all(|p| *p > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ContinuedFraction {
    Standard(StandardCf),
    Positive(PositiveCf),
}

impl ContinuedFraction {
    pub fn coefficients(&self) -> &[i64] {
        match self {
            ContinuedFraction::Standard(cf) => cf.coefficients(),
            ContinuedFraction::Positive(cf) => cf.coefficients(),
        }
    }

    pub fn eval(&self) -> Result<FillingFactor> {
        match self {
            ContinuedFraction::Standard(cf) => eval_standard_cf(cf),
            ContinuedFraction::Positive(cf) => eval_positive_cf(cf),
        }
    }
}

/// `1/(c_0 + s/(c_1 + s/(… + s/c_r)))` evaluated from the tail.
fn eval_signed(coeffs: &[i64], sign: i64) -> Result<BigRational> {
    let sign = BigRational::from_integer(sign.into());
    let mut x = BigRational::from_integer(BigInt::from(*coeffs.last().expect("nonempty")));
    for (depth, c) in coeffs.iter().enumerate().rev().skip(1) {
        if x.is_zero() {
            return Err(Error::ZeroDenominator(depth + 1));
        }
        x = BigRational::from_integer((*c).into()) + &sign / x;
    }
    if x.is_zero() {
        return Err(Error::ZeroDenominator(0));
    }
    Ok(x.recip())
}

pub fn eval_standard_cf(cf: &StandardCf) -> Result<FillingFactor> {
    FillingFactor::new(eval_signed(cf.coefficients(), -1)?)
}

pub fn eval_positive_cf(cf: &PositiveCf) -> Result<FillingFactor> {
    FillingFactor::new(eval_signed(cf.coefficients(), 1)?)
}

/// Parity-constrained Euclid expansion of `1/ν`.
///
/// At each depth the coefficient is the unique integer of the required parity
/// within distance 1 of the current value. Any other choice leaves a
/// remainder with `|x| ≤ 1`, from which no even nonzero coefficient can
/// terminate the expansion, so the nearest candidate is the only branch that
/// can succeed and no backtracking is needed. The expansion fails when it
/// lands on an integer of the wrong parity, or exceeds [`MAX_DEPTH`].
fn expand(nu: &FillingFactor, form: CfForm) -> Result<Vec<i64>> {
    let fail = |reason: String| Error::DecomposeFailed { nu: nu.to_string(), form: form.name(), reason };
    let sign = form.sign();
    let mut x = nu.value().recip();
    let mut coeffs = Vec::new();
    for depth in 0..MAX_DEPTH {
        let want_odd = depth == 0;
        if x.is_integer() {
            let c = x.to_integer();
            if c.is_odd() == want_odd {
                coeffs.push(c.to_i64().ok_or_else(|| fail(format!("coefficient {c} overflows")))?);
                return Ok(coeffs);
            }
            return Err(fail(format!("reached integer {c} of the wrong parity at depth {depth}")));
        }
        let floor = x.floor().to_integer();
        let c = if floor.is_odd() == want_odd { floor } else { floor + 1 };
        let c_rat = BigRational::from_integer(c.clone());
        coeffs.push(c.to_i64().ok_or_else(|| fail(format!("coefficient {c} overflows")))?);
        // standard: x = c − 1/x';  plus-sign: x = c + 1/x'
        let remainder = if sign < 0 { &c_rat - &x } else { &x - &c_rat };
        debug_assert!(remainder.abs() < BigRational::one() && !remainder.is_zero());
        x = remainder.recip();
    }
    Err(fail(format!("no termination within depth {MAX_DEPTH}")))
}

pub fn decompose_standard(nu: &FillingFactor) -> Result<StandardCf> {
    let cf = StandardCf::new(expand(nu, CfForm::Standard)?)?;
    debug_assert_eq!(eval_standard_cf(&cf)?.value(), nu.value());
    Ok(cf)
}

pub fn decompose_positive(nu: &FillingFactor) -> Result<PositiveCf> {
    let cf = PositiveCf::new(expand(nu, CfForm::Positive)?)?;
    debug_assert_eq!(eval_positive_cf(&cf)?.value(), nu.value());
    Ok(cf)
}

pub fn decompose(nu: &FillingFactor, form: CfForm) -> Result<ContinuedFraction> {
    Ok(match form {
        CfForm::Standard => ContinuedFraction::Standard(decompose_standard(nu)?),
        CfForm::Positive => ContinuedFraction::Positive(decompose_positive(nu)?),
    })
}
