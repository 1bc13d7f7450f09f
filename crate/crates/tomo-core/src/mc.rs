//! Haar sampling and Monte Carlo integration over projective Hilbert space.
//!
//! The integration measure is the Fubini-Study volume scaled to total mass
//! N, so that `integral |psi><psi| dmu = I`. [`fs_integrate`] therefore
//! returns N times the sample mean over Haar-distributed states. This is
//! the single most error-prone convention in the whole model and it is
//! centralized here.
//!
//! Samples are processed in fixed-size chunks; chunk i draws from stream i
//! of a ChaCha8 generator keyed by the caller's seed, and partial sums are
//! reduced in chunk order. Results are bitwise identical for a given seed
//! no matter how many threads run, and identical between the rayon-backed
//! and sequential drivers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::state::{DensityMatrix, PureState};
use crate::{C64, CMatrix, CVector, Error, RMatrix, Result};

/// Samples per RNG substream chunk.
pub const CHUNK_SAMPLES: u64 = 8192;

/// A scalar Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// A matrix-valued Monte Carlo estimate with entrywise standard errors.
#[derive(Debug, Clone, PartialEq)]
pub struct McMatrixEstimate {
    pub value: CMatrix,
    /// Per-entry standard error of the complex entry (total over real and
    /// imaginary parts).
    pub std_error: RMatrix,
    pub samples: u64,
}

impl McMatrixEstimate {
    /// Largest entrywise deviation from `expected` in units of the entry's
    /// standard error. Entries with zero standard error must match to `atol`.
    pub fn max_sigma_deviation(&self, expected: &CMatrix, atol: f64) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, z) in self.value.iter().enumerate() {
            let diff = (z - expected[i]).norm();
            let se = self.std_error[i];
            if se > 0.0 {
                worst = worst.max(diff / se);
            } else if diff > atol {
                worst = f64::INFINITY;
            }
        }
        worst
    }
}

/// Deterministic substream generator: stream `stream` of the seed's keyspace.
pub fn substream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A pure state distributed uniformly w.r.t. the unitarily invariant
/// (Fubini-Study) measure: 2N independent standard Gaussians read as N
/// complex amplitudes, then normalized.
pub fn haar_sample<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> PureState {
    loop {
        let amps = CVector::from_fn(dim, |_, _| {
            C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        if let Ok(psi) = PureState::from_unnormalized(amps) {
            return psi;
        }
    }
}

/// A matrix of independent standard complex Gaussian entries.
pub fn rand_complex<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(dim, dim, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// A random Hermitian matrix, `(G + G†)/2` with Gaussian `G`.
pub fn rand_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    let g = rand_complex(dim, rng);
    (&g + g.adjoint()) * C64::new(0.5, 0.0)
}

/// A Haar-distributed unitary via phase-fixed QR of a Gaussian matrix.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    let qr = rand_complex(dim, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// A full-rank random mixed state, `G G† / tr(G G†)` with Gaussian `G`
/// (Hilbert-Schmidt ensemble).
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = rand_complex(dim, rng);
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.map(|z| z / tr)).expect("Gram matrix is a valid state")
}

fn chunk_list(samples: u64) -> Vec<(u64, u64)> {
    let n_chunks = samples.div_ceil(CHUNK_SAMPLES);
    (0..n_chunks)
        .map(|i| {
            let count = if i + 1 == n_chunks {
                samples - i * CHUNK_SAMPLES
            } else {
                CHUNK_SAMPLES
            };
            (i, count)
        })
        .collect()
}

/// Evaluate one closure per chunk, in parallel when requested and the
/// `parallel` feature is enabled. The returned partials are in chunk order
/// either way.
fn run_chunks<T, F>(samples: u64, eval: F, parallel: bool) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync,
{
    let list = chunk_list(samples);
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return list.into_par_iter().map(|(i, c)| eval(i, c)).collect();
        }
    }
    let _ = parallel;
    list.into_iter().map(|(i, c)| eval(i, c)).collect()
}

fn check_mc_args(dim: usize, samples: u64) -> Result<()> {
    if dim < 2 {
        return Err(Error::InvalidDimension(dim));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: "must be at least 1".into(),
        });
    }
    Ok(())
}

fn fs_scalar<F>(f: &F, dim: usize, samples: u64, seed: u64, parallel: bool) -> Result<McEstimate>
where
    F: Fn(&PureState) -> f64 + Sync,
{
    check_mc_args(dim, samples)?;
    let partials = run_chunks(
        samples,
        |idx, count| {
            let mut rng = substream_rng(seed, idx);
            let mut sum = 0.0;
            let mut sumsq = 0.0;
            for _ in 0..count {
                let v = f(&haar_sample(dim, &mut rng));
                sum += v;
                sumsq += v * v;
            }
            (sum, sumsq)
        },
        parallel,
    );
    let (sum, sumsq) = partials
        .into_iter()
        .fold((0.0, 0.0), |(a, b), (s, q)| (a + s, b + q));
    let n = samples as f64;
    let mean = sum / n;
    let scale = dim as f64;
    let std_error = if samples > 1 {
        scale * ((sumsq / n - mean * mean).max(0.0) / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(McEstimate {
        value: scale * mean,
        std_error,
        samples,
    })
}

fn fs_matrix<F>(
    f: &F,
    dim: usize,
    samples: u64,
    seed: u64,
    parallel: bool,
) -> Result<McMatrixEstimate>
where
    F: Fn(&PureState) -> CMatrix + Sync,
{
    check_mc_args(dim, samples)?;
    let partials = run_chunks(
        samples,
        |idx, count| {
            let mut rng = substream_rng(seed, idx);
            let mut sum = CMatrix::zeros(dim, dim);
            let mut sumsq = RMatrix::zeros(dim, dim);
            for _ in 0..count {
                let v = f(&haar_sample(dim, &mut rng));
                for (e, (s, q)) in v.iter().zip(sum.iter_mut().zip(sumsq.iter_mut())) {
                    *s += e;
                    *q += e.norm_sqr();
                }
            }
            (sum, sumsq)
        },
        parallel,
    );
    let mut sum = CMatrix::zeros(dim, dim);
    let mut sumsq = RMatrix::zeros(dim, dim);
    for (s, q) in partials {
        sum += s;
        sumsq += q;
    }
    let n = samples as f64;
    let scale = dim as f64;
    let value = sum.map(|z| z * (scale / n));
    let std_error = if samples > 1 {
        RMatrix::from_fn(dim, dim, |i, j| {
            let mean_sq = (sum[(i, j)] / C64::new(n, 0.0)).norm_sqr();
            scale * ((sumsq[(i, j)] / n - mean_sq).max(0.0) / (n - 1.0)).sqrt()
        })
    } else {
        RMatrix::zeros(dim, dim)
    };
    Ok(McMatrixEstimate {
        value,
        std_error,
        samples,
    })
}

/// Estimate `integral f(psi) dmu` for a real integrand, as N times the
/// Haar-sample mean. Parallel over chunks under the `parallel` feature.
pub fn fs_integrate<F>(f: F, dim: usize, samples: u64, seed: u64) -> Result<McEstimate>
where
    F: Fn(&PureState) -> f64 + Sync,
{
    fs_scalar(&f, dim, samples, seed, true)
}

/// Sequential twin of [`fs_integrate`]; bitwise-identical output.
pub fn fs_integrate_seq<F>(f: F, dim: usize, samples: u64, seed: u64) -> Result<McEstimate>
where
    F: Fn(&PureState) -> f64 + Sync,
{
    fs_scalar(&f, dim, samples, seed, false)
}

/// Estimate `integral f(psi) dmu` for a matrix integrand.
pub fn fs_integrate_matrix<F>(f: F, dim: usize, samples: u64, seed: u64) -> Result<McMatrixEstimate>
where
    F: Fn(&PureState) -> CMatrix + Sync,
{
    fs_matrix(&f, dim, samples, seed, true)
}

/// Sequential twin of [`fs_integrate_matrix`]; bitwise-identical output.
pub fn fs_integrate_matrix_seq<F>(
    f: F,
    dim: usize,
    samples: u64,
    seed: u64,
) -> Result<McMatrixEstimate>
where
    F: Fn(&PureState) -> CMatrix + Sync,
{
    fs_matrix(&f, dim, samples, seed, false)
}
