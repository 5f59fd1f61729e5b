//! Gauss–Hermite rules via the Golub–Welsch eigenvalue method.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

/// Nodes and weights for `∫ e^(−x²) f(x) dx ≈ Σ w_i f(x_i)`.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        // Jacobi matrix of the Hermite recurrence: off-diagonal sqrt(k/2)
        let mut jacobi = DMatrix::<f64>::zeros(order, order);
        for k in 1..order {
            let b = (k as f64 / 2.0).sqrt();
            jacobi[(k - 1, k)] = b;
            jacobi[(k, k - 1)] = b;
        }
        let eig = SymmetricEigen::new(jacobi);
        let mut pairs: Vec<(f64, f64)> = (0..order)
            .map(|i| {
                let v0 = eig.eigenvectors[(0, i)];
                (eig.eigenvalues[i], std::f64::consts::PI.sqrt() * v0 * v0)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (nodes, weights) = pairs.into_iter().unzip();
        GaussHermite { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `∫ d²w e^(−a|w|²) f(w)` over the plane by the tensor-product rule.
    pub fn integrate_plane<F: FnMut(Complex64) -> Complex64>(&self, a: f64, mut f: F) -> Complex64 {
        let scale = a.sqrt().recip();
        let mut total = Complex64::default();
        for (x, wx) in self.nodes.iter().zip(&self.weights) {
            for (y, wy) in self.nodes.iter().zip(&self.weights) {
                total += f(Complex64::new(*x, *y) * scale) * (wx * wy);
            }
        }
        total / a
    }
}
