//! The su(N) generator basis, its structure constants, and the completeness
//! map used to reduce the master equation.
//!
//! Generators are the generalized Gell-Mann matrices: trace-free Hermitian
//! N x N matrices normalized by `tr(g_a g_b) = 2 delta_ab`. The ordering is
//! fixed so structure-constant indices are reproducible: symmetric
//! off-diagonal pairs first (lexicographic in (j, k), j < k), then the
//! antisymmetric pairs, then the N - 1 diagonal generators. For N = 2 this
//! is exactly (sigma_x, sigma_y, sigma_z).

use crate::{C64, CMatrix, Error, Result};

/// The N^2 - 1 generalized Gell-Mann matrices for a given dimension.
///
/// Immutable after construction; all operations on it are pure.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    dim: usize,
    matrices: Vec<CMatrix>,
}

impl GeneratorSet {
    /// Build the basis in the canonical ordering. Fails for `dim < 2`.
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let mut matrices = Vec::with_capacity(dim * dim - 1);
        // Symmetric pairs: E_jk + E_kj.
        for j in 0..dim {
            for k in (j + 1)..dim {
                let mut m = CMatrix::zeros(dim, dim);
                m[(j, k)] = C64::new(1.0, 0.0);
                m[(k, j)] = C64::new(1.0, 0.0);
                matrices.push(m);
            }
        }
        // Antisymmetric pairs: -i (E_jk - E_kj).
        for j in 0..dim {
            for k in (j + 1)..dim {
                let mut m = CMatrix::zeros(dim, dim);
                m[(j, k)] = C64::new(0.0, -1.0);
                m[(k, j)] = C64::new(0.0, 1.0);
                matrices.push(m);
            }
        }
        // Diagonal: sqrt(2 / (l (l+1))) (sum_{j<l} E_jj - l E_ll).
        for l in 1..dim {
            let norm = (2.0 / (l as f64 * (l as f64 + 1.0))).sqrt();
            let mut m = CMatrix::zeros(dim, dim);
            for j in 0..l {
                m[(j, j)] = C64::new(norm, 0.0);
            }
            m[(l, l)] = C64::new(-(l as f64) * norm, 0.0);
            matrices.push(m);
        }
        Ok(Self { dim, matrices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of generators, N^2 - 1.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, a: usize) -> &CMatrix {
        &self.matrices[a]
    }

    /// Expectation values `<psi| g_a |psi>` for every generator, as reals.
    pub fn expectations(&self, psi: &crate::state::PureState) -> Result<Vec<f64>> {
        if psi.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: psi.dim(),
            });
        }
        Ok(self
            .matrices
            .iter()
            .map(|g| psi.expectation(g).re)
            .collect())
    }

    /// Antisymmetric and symmetric structure constants by the trace formulas
    /// `f_abc = tr([g_a, g_b] g_c) / (4i)` and
    /// `d_abc = tr({g_a, g_b} g_c) / 4`.
    pub fn structure_constants(&self) -> StructureConstants {
        let n = self.len();
        let mut f = vec![0.0; n * n * n];
        let mut d = vec![0.0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = self.matrix(a) * self.matrix(b);
                for c in 0..n {
                    // For Hermitian generators tr(g_b g_a g_c) is the
                    // conjugate of tr(g_a g_b g_c), so
                    //   tr([g_a, g_b] g_c) = 2i Im tr(g_a g_b g_c),
                    //   tr({g_a, g_b} g_c) = 2 Re tr(g_a g_b g_c).
                    let t = (&prod * self.matrix(c)).trace();
                    let idx = (a * n + b) * n + c;
                    f[idx] = t.im / 2.0;
                    d[idx] = t.re / 2.0;
                }
            }
        }
        StructureConstants { n_gen: n, f, d }
    }
}

/// Dense rank-3 structure constants; small at desk scale (N <= 8).
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n_gen: usize,
    f: Vec<f64>,
    d: Vec<f64>,
}

impl StructureConstants {
    pub fn n_generators(&self) -> usize {
        self.n_gen
    }

    #[inline]
    pub fn f(&self, a: usize, b: usize, c: usize) -> f64 {
        self.f[(a * self.n_gen + b) * self.n_gen + c]
    }

    #[inline]
    pub fn d(&self, a: usize, b: usize, c: usize) -> f64 {
        self.d[(a * self.n_gen + b) * self.n_gen + c]
    }
}

/// The completeness map `X -> sum_a g_a X g_a`, evaluated by explicit
/// summation. Algebraically this equals `2 (tr(X) I - X / N)`; that closed
/// form is an invariant check, not the implementation.
pub fn completeness_map(x: &CMatrix, g: &GeneratorSet) -> Result<CMatrix> {
    if x.nrows() != g.dim() || x.ncols() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            actual: x.nrows().max(x.ncols()),
        });
    }
    let mut acc = CMatrix::zeros(g.dim(), g.dim());
    for m in g.matrices() {
        acc += m * x * m;
    }
    Ok(acc)
}
