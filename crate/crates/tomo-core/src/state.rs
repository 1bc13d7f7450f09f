//! Density matrices, the generalized Bloch representation, pure states, and
//! the state-space Husimi function.

use crate::su::GeneratorSet;
use crate::{C64, CMatrix, CVector, Error, RVector, Result};

/// Maximum entrywise deviation from Hermiticity accepted by [`DensityMatrix::new`].
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Maximum deviation of the trace from one accepted by [`DensityMatrix::new`].
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues down to this floor count as zero; RK4 and Monte Carlo noise
/// produce harmless negative dust of this size.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;

/// An N x N Hermitian, unit-trace, positive-semidefinite state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    m: CMatrix,
}

impl DensityMatrix {
    /// Validate and wrap a matrix: Hermitian and unit trace to 1e-12,
    /// eigenvalues above the `-1e-10` floor.
    pub fn new(m: CMatrix) -> Result<Self> {
        Self::with_tolerances(m, HERMITICITY_TOL, TRACE_TOL)
    }

    /// Validation with caller-supplied Hermiticity/trace tolerances.
    /// Numerical trajectories accumulate roundoff slightly above the
    /// constructor defaults; the eigenvalue floor is not negotiable.
    pub fn with_tolerances(m: CMatrix, herm_tol: f64, trace_tol: f64) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::InvalidState(format!(
                "matrix is {}x{}, not square",
                m.nrows(),
                m.ncols()
            )));
        }
        let dim = m.nrows();
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let herm_dev = (&m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm_dev > herm_tol {
            return Err(Error::InvalidState(format!(
                "Hermiticity violated by {herm_dev:e}"
            )));
        }
        let tr = m.trace();
        let tr_dev = (tr - C64::new(1.0, 0.0)).norm();
        if tr_dev > trace_tol {
            return Err(Error::InvalidState(format!("trace deviates by {tr_dev:e}")));
        }
        let min_eig = min_hermitian_eigenvalue(&m);
        if min_eig < EIGENVALUE_FLOOR {
            return Err(Error::InvalidState(format!(
                "minimum eigenvalue {min_eig:e} below floor"
            )));
        }
        Ok(Self { dim, m })
    }

    /// The maximally mixed state `I / N`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let m = CMatrix::identity(dim, dim) * C64::new(1.0 / dim as f64, 0.0);
        Ok(Self { dim, m })
    }

    /// The projector `|psi><psi|` as a state.
    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            dim: psi.dim(),
            m: psi.projector(),
        }
    }

    /// Basis state `|j><j|`.
    pub fn basis_state(dim: usize, j: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        if j >= dim {
            return Err(Error::InvalidParameter {
                name: "basis index",
                reason: format!("{j} out of range for dimension {dim}"),
            });
        }
        let mut m = CMatrix::zeros(dim, dim);
        m[(j, j)] = C64::new(1.0, 0.0);
        Ok(Self { dim, m })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    /// `tr(rho^2)`; equals the squared Frobenius norm for Hermitian input.
    pub fn purity(&self) -> f64 {
        self.m.norm_squared()
    }

    /// Smallest eigenvalue of the (Hermitian) matrix.
    pub fn min_eigenvalue(&self) -> f64 {
        min_hermitian_eigenvalue(&self.m)
    }

    /// Largest eigenvalue of the (Hermitian) matrix.
    pub fn max_eigenvalue(&self) -> f64 {
        self.m
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Bloch coefficients `r_a = tr(rho g_a)`.
    pub fn bloch(&self, g: &GeneratorSet) -> Result<BlochVector> {
        bloch_encode(self, g)
    }
}

fn min_hermitian_eigenvalue(m: &CMatrix) -> f64 {
    m.symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// The real coefficient vector of a state in the su(N) generator basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    dim: usize,
    r: RVector,
}

impl BlochVector {
    /// Wrap a coefficient vector of length N^2 - 1.
    pub fn new(dim: usize, r: RVector) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let expected = dim * dim - 1;
        if r.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: r.len(),
            });
        }
        Ok(Self { dim, r })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(dim, RVector::zeros(dim * dim - 1))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &RVector {
        &self.r
    }

    pub fn norm(&self) -> f64 {
        self.r.norm()
    }
}

/// Encode a state as its generalized Bloch vector, `r_a = tr(rho g_a)`.
pub fn bloch_encode(rho: &DensityMatrix, g: &GeneratorSet) -> Result<BlochVector> {
    if rho.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            actual: rho.dim(),
        });
    }
    let r = RVector::from_iterator(
        g.len(),
        g.matrices().iter().map(|m| {
            let t = (rho.matrix() * m).trace();
            debug_assert!(t.im.abs() <= 1e-12);
            t.re
        }),
    );
    Ok(BlochVector { dim: rho.dim(), r })
}

/// Decode a Bloch vector to `I/N + (1/2) sum_a r_a g_a`. Hermitian and
/// unit-trace by construction; positivity is NOT guaranteed — the caller
/// checks it (e.g. through [`DensityMatrix::new`]).
pub fn bloch_decode(r: &BlochVector, g: &GeneratorSet) -> Result<CMatrix> {
    if r.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            actual: r.dim(),
        });
    }
    let n = g.dim();
    let mut m = CMatrix::identity(n, n) * C64::new(1.0 / n as f64, 0.0);
    for (a, gen) in g.matrices().iter().enumerate() {
        m += gen * C64::new(0.5 * r.coeffs()[a], 0.0);
    }
    Ok(m)
}

/// A unit vector in C^N; the global phase is unobservable (every operation
/// depends only on the projector).
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amps: CVector,
}

impl PureState {
    /// Validate a unit-norm amplitude vector (tolerance 1e-12).
    pub fn new(amps: CVector) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::InvalidDimension(amps.len()));
        }
        let dev = (amps.norm() - 1.0).abs();
        if dev > 1e-12 {
            return Err(Error::NotNormalized(dev));
        }
        Ok(Self { amps })
    }

    /// Normalize an arbitrary nonzero vector.
    pub fn from_unnormalized(amps: CVector) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::InvalidDimension(amps.len()));
        }
        let n = amps.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized(f64::INFINITY));
        }
        Ok(Self {
            amps: amps / C64::new(n, 0.0),
        })
    }

    /// Basis vector `|j>`.
    pub fn basis(dim: usize, j: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        if j >= dim {
            return Err(Error::InvalidParameter {
                name: "basis index",
                reason: format!("{j} out of range for dimension {dim}"),
            });
        }
        let mut amps = CVector::zeros(dim);
        amps[j] = C64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amps
    }

    /// The projector `|psi><psi|`.
    pub fn projector(&self) -> CMatrix {
        &self.amps * self.amps.adjoint()
    }

    /// `<psi| A |psi>` for a square matrix of matching dimension.
    pub fn expectation(&self, a: &CMatrix) -> C64 {
        (self.amps.adjoint() * a * &self.amps)[(0, 0)]
    }
}

/// The state-space Husimi function `Q(psi) = <psi|rho|psi>`, clamped to [0, 1].
pub fn husimi(rho: &DensityMatrix, psi: &PureState) -> Result<f64> {
    if rho.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: psi.dim(),
        });
    }
    Ok(psi.expectation(rho.matrix()).re.clamp(0.0, 1.0))
}

/// The global minimum of the Husimi function over pure states.
///
/// Q is a Rayleigh quotient, so the minimum is exactly the smallest
/// eigenvalue of rho; negative dust within the validation floor is clamped
/// to zero.
pub fn min_husimi(rho: &DensityMatrix) -> f64 {
    rho.min_eigenvalue().max(0.0)
}
