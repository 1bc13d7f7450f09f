//! The universal tomographic POVM channel.
//!
//! A nonselective measurement whose outcomes are the pure states themselves
//! updates the density matrix as `rho -> (I + rho) / (N + 1)`: the identity
//! component is invariant and the Bloch vector contracts by `1/(N + 1)`.
//! The analytic map is the primary implementation; the Monte Carlo channel
//! exists to falsify convention errors, never as the default path.

use rand::Rng;

use crate::mc::{self, McMatrixEstimate};
use crate::state::{DensityMatrix, PureState, husimi};
use crate::{C64, CMatrix, Error, Result};

/// Cap on the iteration count; far beyond ~50 ln(10)/ln(N+1) iterations the
/// state is numerically the fixed point anyway.
pub const MAX_ITERATIONS: u64 = 1_000_000;

/// The state after k applications of the channel.
#[derive(Debug, Clone)]
pub struct ChannelIterate {
    pub k: u64,
    pub state: DensityMatrix,
}

/// One nonselective tomographic measurement: `(I + rho) / (N + 1)`.
///
/// Trace-preserving and positivity-improving; the maximally mixed state is
/// the unique fixed point.
pub fn tomographic_step(rho: &DensityMatrix) -> DensityMatrix {
    let n = rho.dim();
    let m = (CMatrix::identity(n, n) + rho.matrix()) / C64::new(n as f64 + 1.0, 0.0);
    DensityMatrix::new(m).expect("channel output is a valid state")
}

/// k measurements in closed form:
/// `I/N (1 - (N+1)^-k) + (N+1)^-k rho`.
pub fn tomographic_iterate(rho: &DensityMatrix, k: u64) -> Result<ChannelIterate> {
    if k > MAX_ITERATIONS {
        return Err(Error::IterationCap(k));
    }
    let n = rho.dim();
    // (N+1)^-k underflows to zero long before the cap; the formula then
    // returns the fixed point exactly.
    let damp = (1.0 / (n as f64 + 1.0)).powi(k.min(i32::MAX as u64) as i32);
    let mixed = CMatrix::identity(n, n) * C64::new((1.0 - damp) / n as f64, 0.0);
    let m = mixed + rho.matrix() * C64::new(damp, 0.0);
    Ok(ChannelIterate {
        k,
        state: DensityMatrix::new(m).expect("channel output is a valid state"),
    })
}

/// Monte Carlo realization of one step: estimates
/// `integral |psi><psi| Q(psi) dmu`, whose expectation is
/// [`tomographic_step`].
pub fn tomographic_step_mc(
    rho: &DensityMatrix,
    samples: u64,
    seed: u64,
) -> Result<McMatrixEstimate> {
    let dim = rho.dim();
    let rho = rho.clone();
    mc::fs_integrate_matrix(
        move |psi| {
            let q = husimi(&rho, psi).expect("dimensions match by construction");
            psi.projector() * C64::new(q, 0.0)
        },
        dim,
        samples,
        seed,
    )
}

/// Expected acceptance rate of [`sample_outcome`]'s rejection sampler,
/// `1 / (N lambda_max)`.
pub fn outcome_acceptance_rate(rho: &DensityMatrix) -> f64 {
    1.0 / (rho.dim() as f64 * rho.max_eigenvalue())
}

/// Draw one measurement outcome, distributed with density `Q(psi)` w.r.t.
/// the scaled Fubini-Study measure: propose Haar, accept with probability
/// `Q(psi) / lambda_max(rho)`. Always terminates; see
/// [`outcome_acceptance_rate`] for the expected cost.
pub fn sample_outcome<R: Rng + ?Sized>(rho: &DensityMatrix, rng: &mut R) -> PureState {
    let lam_max = rho.max_eigenvalue();
    loop {
        let psi = mc::haar_sample(rho.dim(), rng);
        let accept = husimi(rho, &psi).expect("dimensions match") / lam_max;
        if accept >= 1.0 || rng.random::<f64>() < accept {
            return psi;
        }
    }
}

/// Draw `count` independent outcomes; outcome i uses RNG substream i of the
/// seed, so the batch is deterministic and order-stable under parallelism.
pub fn sample_outcomes(rho: &DensityMatrix, count: u64, seed: u64) -> Vec<PureState> {
    sample_outcomes_impl(rho, count, seed, true)
}

/// Sequential twin of [`sample_outcomes`]; identical output.
pub fn sample_outcomes_seq(rho: &DensityMatrix, count: u64, seed: u64) -> Vec<PureState> {
    sample_outcomes_impl(rho, count, seed, false)
}

fn sample_outcomes_impl(
    rho: &DensityMatrix,
    count: u64,
    seed: u64,
    parallel: bool,
) -> Vec<PureState> {
    let draw = |i: u64| {
        let mut rng = mc::substream_rng(seed, i);
        sample_outcome(rho, &mut rng)
    };
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return (0..count).into_par_iter().map(draw).collect();
        }
    }
    let _ = parallel;
    (0..count).map(draw).collect()
}
