use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial in `z_1..z_n`, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], BigInt::one());
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Multiplies in place by `(z_i − z_j)`.
    pub fn mul_difference(&mut self, i: usize, j: usize) {
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut up_i = exp.clone();
            up_i[i] += 1;
            *out.entry(up_i).or_default() += c;
            let mut up_j = exp.clone();
            up_j[j] += 1;
            *out.entry(up_j).or_default() -= c;
        }
        out.retain(|_, c| !c.is_zero());
        self.terms = out;
    }
}

/// Expands `Π_(i<j) (z_i − z_j)^m` by repeated convolution.
pub fn jastrow_polynomial(m: u32, n: usize) -> Polynomial {
    let mut poly = Polynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            for _ in 0..m {
                poly.mul_difference(i, j);
            }
        }
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_expansion() {
        let p = jastrow_polynomial(3, 2);
        assert_eq!(p.len(), 4);
        assert_eq!(p.coefficient(&[3, 0]), BigInt::from(1));
        assert_eq!(p.coefficient(&[2, 1]), BigInt::from(-3));
        assert_eq!(p.coefficient(&[1, 2]), BigInt::from(3));
        assert_eq!(p.coefficient(&[0, 3]), BigInt::from(-1));
    }

    #[test]
    fn vandermonde() {
        // Π_(i<j)(z_i − z_j) for n = 3 has 6 terms with coefficients ±1
        let p = jastrow_polynomial(1, 3);
        assert_eq!(p.len(), 6);
        assert!(p.terms().all(|(_, c)| c == &BigInt::from(1) || c == &BigInt::from(-1)));
        assert!(p.terms().all(|(e, _)| e.iter().sum::<u32>() == 3));
    }
}
