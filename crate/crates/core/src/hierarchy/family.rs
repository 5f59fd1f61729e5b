use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::filling::{FillingFactor, Rational};
use crate::error::{Error, Result};

/// `[1/(2p+1), 2/(2p+1), …, 2p/(2p+1), 1]`, each member tagged with its basis
/// address `(i, p)`.
pub fn family(p: u64) -> Result<Vec<FillingFactor>> {
    if p == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let order = 2 * p + 1;
    (1..=order)
        .map(|i| {
            let value = BigRational::new(BigInt::from(i), BigInt::from(order));
            Ok(FillingFactor::new(value)?.with_address(i, p))
        })
        .collect()
}

/// `Σ_i ν_i / (p+1)` over the `p` family.
pub fn partition_sum(p: u64) -> Result<Rational> {
    let weight = BigRational::new(BigInt::one(), BigInt::from(p + 1));
    let total = family(p)?.iter().fold(BigRational::zero(), |acc, nu| acc + nu.value() * &weight);
    Ok(Rational(total))
}

/// Basis address `(i, p)` of a filling factor.
///
/// With `family = Some(p)`, `ν` is located in that family (`i = ν·(2p+1)`).
/// Without it, a family member's own address is used, otherwise `p = (Q−1)/2`
/// and `i = P`; `ν = 1` sits in every family and requires `family`.
pub fn basis_index(nu: &FillingFactor, family: Option<u64>) -> Result<(u64, u64)> {
    if nu.denom().is_even() {
        return Err(Error::EvenDenominator(nu.to_string()));
    }
    if let Some(p) = family {
        if p == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let scaled = nu.value() * BigRational::from_integer(BigInt::from(2 * p + 1));
        if !scaled.is_integer() {
            return Err(Error::NotInFamily { nu: nu.to_string(), p });
        }
        let i = scaled.to_integer().to_u64().expect("0 < i <= 2p+1");
        return Ok((i, p));
    }
    if let Some(address) = nu.address() {
        return Ok(address);
    }
    if nu.is_one() {
        return Err(Error::MissingFamily);
    }
    let q = nu.denom().to_u64().ok_or_else(|| Error::OutOfRange(nu.to_string()))?;
    let i = nu.numer().to_u64().ok_or_else(|| Error::OutOfRange(nu.to_string()))?;
    Ok((i, (q - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: u64) -> Vec<String> {
        family(p).unwrap().iter().map(|nu| nu.to_string()).collect()
    }

    #[test]
    fn small_families() {
        assert_eq!(names(1), ["1/3", "2/3", "1"]);
        assert_eq!(names(2), ["1/5", "2/5", "3/5", "4/5", "1"]);
        assert_eq!(names(3), ["1/7", "2/7", "3/7", "4/7", "5/7", "6/7", "1"]);
    }

    #[test]
    fn partition_of_unity() {
        for p in 1..=100 {
            assert_eq!(partition_sum(p).unwrap().to_string(), "1");
        }
    }

    #[test]
    fn strictly_increasing_and_ends_at_one() {
        for p in 1..30 {
            let fam = family(p).unwrap();
            assert!(fam.windows(2).all(|w| w[0].value() < w[1].value()));
            assert!(fam.last().unwrap().is_one());
        }
    }

    #[test]
    fn addresses() {
        let nu = FillingFactor::from_ints(2, 5).unwrap();
        assert_eq!(basis_index(&nu, None).unwrap(), (2, 2));
        let nu = FillingFactor::from_ints(1, 3).unwrap();
        assert_eq!(basis_index(&nu, None).unwrap(), (1, 1));
        assert_eq!(basis_index(&nu, Some(4)).unwrap(), (3, 4));
        let one = FillingFactor::from_ints(1, 1).unwrap();
        assert_eq!(basis_index(&one, Some(3)).unwrap(), (7, 3));
        assert!(matches!(basis_index(&one, None), Err(Error::MissingFamily)));
        assert!(matches!(basis_index(&nu, Some(2)), Err(Error::NotInFamily { .. })));
    }

    #[test]
    fn family_members_keep_their_address() {
        for p in 1..20 {
            for (pos, nu) in family(p).unwrap().iter().enumerate() {
                assert_eq!(basis_index(nu, None).unwrap(), (pos as u64 + 1, p));
            }
        }
    }
}
