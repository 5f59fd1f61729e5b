//! Primitive roots of unity of odd order `2p+1` and the q-numbers built on them.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A primitive `(2p+1)`-th root of unity `q = exp(2πik/(2p+1))`.
///
/// `k` is stored reduced into `1..=2p`. All powers are taken by reducing the
/// exponent modulo the order first, so `q^(2p+1)` is exactly `1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RootLabel", into = "RootLabel")]
pub struct PrimitiveRoot {
    p: u64,
    k: u64,
    value: Complex64,
}

#[derive(Serialize, Deserialize)]
struct RootLabel {
    p: i64,
    k: i64,
}

impl TryFrom<RootLabel> for PrimitiveRoot {
    type Error = Error;

    fn try_from(label: RootLabel) -> Result<Self> {
        PrimitiveRoot::new(label.p, label.k)
    }
}

impl From<PrimitiveRoot> for RootLabel {
    fn from(q: PrimitiveRoot) -> Self {
        RootLabel { p: q.p as i64, k: q.k as i64 }
    }
}

impl PrimitiveRoot {
    /// Builds `exp(2πik/(2p+1))`, rejecting `p < 1` and labels sharing a factor
    /// with the order.
    pub fn new(p: i64, k: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidOrder(p));
        }
        let order = 2 * p as u64 + 1;
        let reduced = k.rem_euclid(order as i64) as u64;
        if reduced.gcd(&order) != 1 {
            return Err(Error::NonCoprimeLabel { k, order });
        }
        let root = PrimitiveRoot {
            p: p as u64,
            k: reduced,
            value: Complex64::from_polar(1.0, TAU * reduced as f64 / order as f64),
        };
        debug_assert!(root.is_primitive());
        Ok(root)
    }

    /// The default root `exp(2πi/(2p+1))`.
    pub fn principal(p: i64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduced label in `1..=2p`.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// `2p + 1`.
    pub fn order(&self) -> u64 {
        2 * self.p + 1
    }

    pub fn dim(&self) -> usize {
        self.order() as usize
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    /// `θ = 2πk/(2p+1)`.
    pub fn angle(&self) -> f64 {
        TAU * self.k as f64 / self.order() as f64
    }

    /// Residue of `k·n` modulo the order; `q^n = exp(2πi·residue/(2p+1))`.
    fn residue(&self, n: i64) -> u64 {
        let order = self.order() as i128;
        ((self.k as i128 * n as i128).rem_euclid(order)) as u64
    }

    /// `q^n` for any integer `n`, including negative powers.
    pub fn pow(&self, n: i64) -> Complex64 {
        let r = self.residue(n);
        if r == 0 {
            return Complex64::new(1.0, 0.0);
        }
        Complex64::from_polar(1.0, TAU * r as f64 / self.order() as f64)
    }

    /// `sin(nθ)` evaluated on the reduced residue.
    /// `sin(nθ)` evaluated on the reduced residue, folded so that
    /// `sin(−nθ) = −sin(nθ)` holds bit for bit.
    pub(crate) fn sin_multiple(&self, n: i64) -> f64 {
        let order = self.order();
        let r = self.residue(n);
        if r == 0 {
            0.0
        } else if 2 * r > order {
            -(TAU * (order - r) as f64 / order as f64).sin()
        } else {
            (TAU * r as f64 / order as f64).sin()
        }
    }

    /// Checks `q^n ≠ 1` for `1 ≤ n ≤ 2p` by direct complex evaluation.
    pub fn is_primitive(&self) -> bool {
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 1..self.order() {
            acc *= self.value;
            if (acc - 1.0).norm() < 1e-8 {
                return false;
            }
        }
        true
    }
}

/// The q-number `[n]_q = (q^n − q^(−n))/(q − q^(−1)) = sin(nθ)/sin(θ)`.
///
/// Computed through the sine form, which is real by construction. The complex
/// division is kept as [`q_number_by_division`].
pub fn q_number(n: i64, q: &PrimitiveRoot) -> f64 {
    q.sin_multiple(n) / q.sin_multiple(1)
}

/// `(q^n − q^(−n))/(q − q^(−1))` by literal complex division.
pub fn q_number_by_division(n: i64, q: &PrimitiveRoot) -> Complex64 {
    let z = q.value();
    let zn = q.pow(n);
    (zn - zn.inv()) / (z - z.inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cube_root() {
        let q = PrimitiveRoot::new(1, 1).unwrap();
        assert_abs_diff_eq!(q.value().re, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(q.value().im, 3f64.sqrt() / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn fifth_root() {
        let q = PrimitiveRoot::new(2, 1).unwrap();
        let expected = Complex64::from_polar(1.0, TAU / 5.0);
        assert!((q.value() - expected).norm() < 1e-15);
    }

    #[test]
    fn rejects_degenerate_labels() {
        assert!(matches!(PrimitiveRoot::new(2, 5), Err(Error::NonCoprimeLabel { .. })));
        assert!(matches!(PrimitiveRoot::new(2, 0), Err(Error::NonCoprimeLabel { .. })));
        assert!(matches!(PrimitiveRoot::new(4, 3), Err(Error::NonCoprimeLabel { .. })));
        assert!(matches!(PrimitiveRoot::new(0, 1), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn labels_are_reduced() {
        let q = PrimitiveRoot::new(2, -1).unwrap();
        assert_eq!(q.k(), 4);
        let q = PrimitiveRoot::new(2, 7).unwrap();
        assert_eq!(q.k(), 2);
    }

    #[test]
    fn q_number_values() {
        for p in 1..6 {
            for k in 1..=2 * p {
                let Ok(q) = PrimitiveRoot::new(p, k) else { continue };
                assert_abs_diff_eq!(q_number(1, &q), 1.0, epsilon = 1e-14);
                assert_abs_diff_eq!(q_number(2 * p + 1, &q), 0.0, epsilon = 1e-14);
                let oracle = q_number_by_division(2 * p + 1, &q);
                assert!(oracle.norm() < 1e-13);
            }
        }
        let q = PrimitiveRoot::new(1, 1).unwrap();
        assert_abs_diff_eq!(q_number(2, &q), -1.0, epsilon = 1e-14);
        let oracle = q_number_by_division(2, &q);
        assert_abs_diff_eq!(oracle.re, -1.0, epsilon = 1e-14);
        assert!(oracle.im.abs() < 1e-14);
    }

    #[test]
    fn primitivity_sweep() {
        for p in 1..=50i64 {
            for k in 1..=2 * p {
                let order = 2 * p + 1;
                match PrimitiveRoot::new(p, k) {
                    Ok(q) => {
                        assert_eq!(k.gcd(&order), 1);
                        assert!(q.is_primitive());
                        assert!((q.value().norm() - 1.0).abs() < 1e-14);
                        assert!((q.pow(order) - 1.0).norm() < 1e-14);
                        assert!((q.value().powu(order as u32) - 1.0).norm() < 1e-12);
                    }
                    Err(_) => assert_ne!(k.gcd(&order), 1),
                }
            }
        }
    }
}
