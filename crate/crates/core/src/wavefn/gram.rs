use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::exact::{exact_result, expand, pair_polynomials};
use super::mc::mc_moments;
use super::{WavefunctionSpec, DEFAULT_QUAD_ORDER};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Mc,
    Quadrature,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InnerProductResult {
    pub value: Complex64,
    pub method: Method,
    /// Zero for exact results.
    pub stderr: f64,
    pub samples: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Exact results only: the value as an integer multiple of `π^pi_power`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi_multiple: Option<String>,
    pub pi_power: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramParams {
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub quad_order: usize,
    pub normalize: bool,
}

impl Default for GramParams {
    fn default() -> Self {
        GramParams { samples: 1_000_000, seed: 0, workers: 1, quad_order: DEFAULT_QUAD_ORDER, normalize: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramEntry {
    pub re: f64,
    pub im: f64,
    pub stderr: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi_multiple: Option<String>,
}

impl GramEntry {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Pairwise overlaps `entries[i][j] = ⟨A_i, A_j⟩`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramMatrix {
    pub specs: Vec<WavefunctionSpec>,
    pub method: Method,
    pub entries: Vec<Vec<GramEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub samples: u64,
    pub normalized: bool,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn value(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i][j].value()
    }

    /// `row,col,re,im,stderr` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,re,im,stderr\n");
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out.push_str(&format!("{i},{j},{:e},{:e},{:e}\n", e.re, e.im, e.stderr));
            }
        }
        out
    }
}

fn entry(value: Complex64, stderr: f64, pi_multiple: Option<String>) -> GramEntry {
    GramEntry { re: value.re, im: value.im, stderr, pi_multiple }
}

/// Hermitian matrix of overlaps by the exact moment route (Laughlin states
/// only) or by Monte Carlo. With `normalize`, entries are divided by
/// `sqrt(⟨A_i,A_i⟩⟨A_j,A_j⟩)`.
pub fn gram_matrix(specs: &[WavefunctionSpec], method: Method, params: &GramParams) -> Result<GramMatrix> {
    if let Some(first) = specs.first() {
        if let Some(bad) = specs.iter().find(|s| s.n0 != first.n0) {
            return Err(Error::InvalidWavefunction(format!("electron counts differ: {} vs {}", first.n0, bad.n0)));
        }
    }
    let k = specs.len();
    let mut entries = vec![vec![entry(Complex64::default(), 0.0, None); k]; k];
    let (seed, samples) = match method {
        Method::Exact => {
            let polys = specs.iter().map(expand).collect::<Result<Vec<_>>>()?;
            let mut coeffs = vec![vec![BigInt::default(); k]; k];
            for i in 0..k {
                for j in i..k {
                    let c = pair_polynomials(&polys[i], &polys[j]);
                    let r = exact_result(c.clone(), specs[i].n0);
                    entries[i][j] = entry(r.value, 0.0, r.pi_multiple.clone());
                    entries[j][i] = entry(r.value.conj(), 0.0, r.pi_multiple);
                    coeffs[i][j] = c.clone();
                    coeffs[j][i] = c;
                }
            }
            if params.normalize {
                for i in 0..k {
                    for j in 0..k {
                        let value = if i == j {
                            1.0
                        } else {
                            let norm = (coeffs[i][i].to_f64().unwrap() * coeffs[j][j].to_f64().unwrap()).sqrt();
                            coeffs[i][j].to_f64().unwrap() / norm
                        };
                        entries[i][j] = entry(Complex64::new(value, 0.0), 0.0, None);
                    }
                }
            }
            (None, 0)
        }
        Method::Mc => {
            let table = mc_moments(specs, params.samples, params.seed, params.workers, params.quad_order)?;
            for i in 0..k {
                for j in 0..k {
                    let (v, se) = table[i][j];
                    entries[i][j] = if params.normalize {
                        let norm = (table[i][i].0.re * table[j][j].0.re).sqrt();
                        entry(v / norm, se / norm, None)
                    } else {
                        entry(v, se, None)
                    };
                }
            }
            (Some(params.seed), params.samples)
        }
        Method::Quadrature => {
            return Err(Error::Unsupported("Gram matrices are computed by the exact or mc method".into()));
        }
    };
    Ok(GramMatrix { specs: specs.to_vec(), method, entries, seed, samples, normalized: params.normalize })
}
