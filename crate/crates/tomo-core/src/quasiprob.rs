//! Stratonovich-Weyl quasiprobability distributions on projective Hilbert
//! space.
//!
//! The sigma-parametrised kernel is
//! `w(psi) = I/N + (1/2)(N+1)^((1+sigma)/2) sum_a <psi|g_a|psi> g_a`, and
//! `W(psi) = tr(rho w(psi))`. sigma = -1 is the Husimi case (nonnegative),
//! sigma = 0 the Wigner-type distribution, sigma = +1 the P-representation;
//! sigma is treated as a continuous real parameter throughout.
//!
//! Evaluation routes through the scalar relation
//! `W(psi) = 1/N + (N+1)^((sigma+1)/2) (Q(psi) - 1/N)` — O(N^2) instead of
//! materializing the kernel — and the kernel path is retained as an
//! independent cross-check of that reduction.

use crate::channel::tomographic_iterate;
use crate::state::{DensityMatrix, PureState, husimi, min_husimi};
use crate::su::GeneratorSet;
use crate::{C64, CMatrix, Error, Result};

/// Identifies a member of the Stratonovich-Weyl family: the order parameter
/// sigma and the Hilbert space dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiprobSpec {
    sigma: f64,
    dim: usize,
}

impl QuasiprobSpec {
    pub fn new(sigma: f64, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        if !sigma.is_finite() {
            return Err(Error::InvalidParameter {
                name: "sigma",
                reason: format!("must be finite, got {sigma}"),
            });
        }
        Ok(Self { sigma, dim })
    }

    /// The Husimi member, sigma = -1.
    pub fn husimi(dim: usize) -> Result<Self> {
        Self::new(-1.0, dim)
    }

    /// The Wigner-type member, sigma = 0.
    pub fn wigner(dim: usize) -> Result<Self> {
        Self::new(0.0, dim)
    }

    /// The P-representation member, sigma = +1.
    pub fn p_rep(dim: usize) -> Result<Self> {
        Self::new(1.0, dim)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The prefactor `(N+1)^((sigma+1)/2)` shared by kernel and W.
    pub fn scale(&self) -> f64 {
        ((self.dim + 1) as f64).powf((self.sigma + 1.0) / 2.0)
    }

    /// The member at order `sigma - 2k`, as produced by k channel steps.
    pub fn shifted(&self, k: u64) -> Self {
        Self {
            sigma: self.sigma - 2.0 * k as f64,
            dim: self.dim,
        }
    }
}

/// A quasiprobability density value tagged with the family member it came
/// from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiprobValue {
    pub value: f64,
    pub spec: QuasiprobSpec,
}

/// The kernel matrix `w(psi)`; Hermitian with unit trace.
pub fn sw_kernel(psi: &PureState, spec: &QuasiprobSpec, g: &GeneratorSet) -> Result<CMatrix> {
    if psi.dim() != spec.dim() || g.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            actual: if psi.dim() != spec.dim() { psi.dim() } else { g.dim() },
        });
    }
    let n = spec.dim();
    let half_scale = 0.5 * spec.scale();
    let mut m = CMatrix::identity(n, n) * C64::new(1.0 / n as f64, 0.0);
    for gen in g.matrices() {
        let exp = psi.expectation(gen).re;
        m += gen * C64::new(half_scale * exp, 0.0);
    }
    Ok(m)
}

/// Evaluate `W(psi) = tr(rho w(psi))` through the Q-relation.
pub fn evaluate_w(
    rho: &DensityMatrix,
    psi: &PureState,
    spec: &QuasiprobSpec,
) -> Result<QuasiprobValue> {
    if rho.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            actual: rho.dim(),
        });
    }
    let q = husimi(rho, psi)?;
    let inv_n = 1.0 / spec.dim() as f64;
    Ok(QuasiprobValue {
        value: inv_n + spec.scale() * (q - inv_n),
        spec: *spec,
    })
}

/// The sharp lower bound `(1 - (N+1)^((sigma+1)/2)) / N`, attained by pure
/// states.
pub fn w_min_formula(spec: &QuasiprobSpec) -> f64 {
    (1.0 - spec.scale()) / spec.dim() as f64
}

/// The minimum of `W` over pure states for a given state: the Q-relation
/// evaluated at the smallest Husimi value, i.e. the smallest eigenvalue.
pub fn min_w(rho: &DensityMatrix, spec: &QuasiprobSpec) -> Result<f64> {
    if rho.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            actual: rho.dim(),
        });
    }
    let inv_n = 1.0 / spec.dim() as f64;
    Ok(inv_n + spec.scale() * (min_husimi(rho) - inv_n))
}

/// `W` of the k-step channel iterate. Equals the initial state's `W` at
/// order `sigma - 2k`: each nonselective measurement shifts the order
/// parameter by two.
pub fn w_after_k_steps(
    rho: &DensityMatrix,
    psi: &PureState,
    spec: &QuasiprobSpec,
    k: u64,
) -> Result<QuasiprobValue> {
    let iterate = tomographic_iterate(rho, k)?;
    evaluate_w(&iterate.state, psi, spec)
}
