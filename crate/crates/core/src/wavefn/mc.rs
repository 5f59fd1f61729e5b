//! Monte Carlo overlaps with a reproducible sample stream.
//!
//! Samples are drawn in fixed-size chunks. Chunk `c` is generated by a
//! ChaCha8 stream keyed by `(seed, c)`, so its draws do not depend on which
//! worker handles it, and per-chunk statistics are merged in chunk order.
//! The result is bit-identical for any worker count.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gram::{InnerProductResult, Method};
use super::{Amplitude, WavefunctionSpec};
use crate::error::{Error, Result};

pub const CHUNK_SAMPLES: u64 = 8192;
pub const MIN_MC_SAMPLES: u64 = 1000;

/// Standard complex Gaussian draws (density `e^(−|z|²)/π`) for one chunk.
pub struct SampleStream {
    rng: ChaCha8Rng,
}

impl SampleStream {
    pub fn new(seed: u64, chunk: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(chunk);
        SampleStream { rng }
    }

    fn unit_open(&mut self) -> f64 {
        // (0, 1]
        ((self.rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn unit_half_open(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Box–Muller in polar form: `|z|² = −ln u` is Exp(1), the phase uniform.
    pub fn next_gaussian(&mut self) -> Complex64 {
        let r = (-self.unit_open().ln()).sqrt();
        Complex64::from_polar(r, TAU * self.unit_half_open())
    }

    pub fn fill(&mut self, z: &mut [Complex64]) {
        for w in z.iter_mut() {
            *w = self.next_gaussian();
        }
    }
}

/// Running count, mean and `Σ|x − mean|²` of a complex sample.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Moments {
    n: u64,
    mean: Complex64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: Complex64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += (delta * (x - self.mean).conj()).re;
    }

    fn merge(&mut self, other: &Moments) {
        if other.n == 0 {
            return;
        }
        if self.n == 0 {
            *self = *other;
            return;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        self.mean += delta * (other.n as f64 / n as f64);
        self.m2 += other.m2 + delta.norm_sqr() * (self.n as f64 * other.n as f64 / n as f64);
        self.n = n;
    }

    fn stderr(&self) -> f64 {
        if self.n < 2 {
            return f64::INFINITY;
        }
        (self.m2 / (self.n - 1) as f64 / self.n as f64).sqrt()
    }
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    // upper triangle, row-major, i <= j
    i * n - i * (i + 1) / 2 + j
}

fn run_chunk(amps: &[Amplitude], n0: usize, seed: u64, chunk: u64, count: u64) -> Vec<Moments> {
    let k = amps.len();
    let mut acc = vec![Moments::default(); k * (k + 1) / 2];
    let mut stream = SampleStream::new(seed, chunk);
    let mut z = vec![Complex64::default(); n0];
    let mut values = vec![Complex64::default(); k];
    for _ in 0..count {
        stream.fill(&mut z);
        for (v, amp) in values.iter_mut().zip(amps) {
            *v = amp.eval(&z);
        }
        for i in 0..k {
            for j in i..k {
                acc[pair_index(i, j, k)].push(values[i].conj() * values[j]);
            }
        }
    }
    acc
}

/// Monte Carlo estimates of every `⟨A_i, A_j⟩` (`i ≤ j`) from one shared
/// sample set. Entry `[i][j]` is `(mean, stderr)` scaled by `π^(N_0)`; the lower
/// triangle is the conjugate of the upper one.
pub fn mc_moments(
    specs: &[WavefunctionSpec],
    samples: u64,
    seed: u64,
    workers: usize,
    quad_order: usize,
) -> Result<Vec<Vec<(Complex64, f64)>>> {
    if samples < MIN_MC_SAMPLES {
        return Err(Error::TooFewSamples { min: MIN_MC_SAMPLES, got: samples });
    }
    let Some(first) = specs.first() else {
        return Ok(Vec::new());
    };
    let n0 = first.n0;
    if let Some(bad) = specs.iter().find(|s| s.n0 != n0) {
        return Err(Error::InvalidWavefunction(format!("electron counts differ: {} vs {}", n0, bad.n0)));
    }
    let amps = specs.iter().map(|s| Amplitude::new(s, quad_order)).collect::<Result<Vec<_>>>()?;

    let chunks = samples.div_ceil(CHUNK_SAMPLES);
    let count = |c: u64| CHUNK_SAMPLES.min(samples - c * CHUNK_SAMPLES);
    let workers = workers.clamp(1, chunks as usize);
    let per_chunk: Vec<Vec<Moments>> = if workers == 1 {
        (0..chunks).map(|c| run_chunk(&amps, n0, seed, c, count(c))).collect()
    } else {
        let mut slots: Vec<Option<Vec<Moments>>> = vec![None; chunks as usize];
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let amps = &amps;
                    scope.spawn(move || {
                        (w as u64..chunks)
                            .step_by(workers)
                            .map(|c| (c, run_chunk(amps, n0, seed, c, count(c))))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                for (c, m) in h.join().expect("worker panicked") {
                    slots[c as usize] = Some(m);
                }
            }
        });
        slots.into_iter().map(|s| s.expect("every chunk assigned")).collect()
    };

    let k = specs.len();
    let mut total = vec![Moments::default(); k * (k + 1) / 2];
    for chunk in &per_chunk {
        for (t, m) in total.iter_mut().zip(chunk) {
            t.merge(m);
        }
    }
    let scale = PI.powi(n0 as i32);
    let mut out = vec![vec![(Complex64::default(), 0.0); k]; k];
    for i in 0..k {
        for j in i..k {
            let m = &total[pair_index(i, j, k)];
            let entry = (m.mean * scale, m.stderr() * scale);
            out[i][j] = entry;
            out[j][i] = (entry.0.conj(), entry.1);
        }
    }
    Ok(out)
}

/// Importance-sampled `⟨A, B⟩`: coordinates drawn from `e^(−|z|²)/π`, the
/// stripped integrand averaged and scaled by `π^(N_0)`.
pub fn inner_product_mc(
    a: &WavefunctionSpec,
    b: &WavefunctionSpec,
    samples: u64,
    seed: u64,
    workers: usize,
    quad_order: usize,
) -> Result<InnerProductResult> {
    let table = mc_moments(&[*a, *b], samples, seed, workers, quad_order)?;
    let (value, stderr) = table[0][1];
    Ok(InnerProductResult {
        value,
        method: Method::Mc,
        stderr,
        samples,
        seed: Some(seed),
        pi_multiple: None,
        pi_power: a.n0 as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_moments() {
        let mut s = SampleStream::new(7, 0);
        let mut m = Moments::default();
        let mut mod4 = 0.0;
        let n = 200_000;
        for _ in 0..n {
            let z = s.next_gaussian();
            m.push(Complex64::new(z.norm_sqr(), 0.0));
            mod4 += z.norm_sqr().powi(2);
        }
        // E|z|² = 1, E|z|⁴ = 2
        assert!((m.mean.re - 1.0).abs() < 5.0 * m.stderr());
        assert!((mod4 / n as f64 - 2.0).abs() < 0.05);
    }

    #[test]
    fn merge_matches_sequential() {
        let xs: Vec<Complex64> = (0..1000).map(|i| Complex64::new((i as f64).sin(), (i as f64 * 0.3).cos())).collect();
        let mut whole = Moments::default();
        xs.iter().for_each(|x| whole.push(*x));
        let (mut a, mut b) = (Moments::default(), Moments::default());
        xs[..377].iter().for_each(|x| a.push(*x));
        xs[377..].iter().for_each(|x| b.push(*x));
        a.merge(&b);
        assert_eq!(a.n, whole.n);
        assert!((a.mean - whole.mean).norm() < 1e-14);
        assert!((a.m2 - whole.m2).abs() < 1e-10);
    }

    #[test]
    fn streams_differ_by_chunk_and_seed() {
        let a = SampleStream::new(1, 0).next_gaussian();
        let b = SampleStream::new(1, 1).next_gaussian();
        let c = SampleStream::new(2, 0).next_gaussian();
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, SampleStream::new(1, 0).next_gaussian());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let specs = [WavefunctionSpec::laughlin(1, 2).unwrap(), WavefunctionSpec::laughlin(3, 2).unwrap()];
        let one = mc_moments(&specs, 50_000, 11, 1, 16).unwrap();
        for w in [2, 3, 8] {
            assert_eq!(mc_moments(&specs, 50_000, 11, w, 16).unwrap(), one);
        }
    }

    #[test]
    fn too_few_samples() {
        let l = WavefunctionSpec::laughlin(1, 2).unwrap();
        assert!(matches!(inner_product_mc(&l, &l, 10, 0, 1, 16), Err(Error::TooFewSamples { .. })));
    }
}
