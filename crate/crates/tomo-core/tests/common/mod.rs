//! Shared helpers for the integration suites: an independent Hermitian
//! eigensolver and seeded random inputs.

use rand::Rng;
use tomo_core::state::{DensityMatrix, PureState};
use tomo_core::{C64, CMatrix, mc};

/// Smallest eigenvalue of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Deliberately independent of the linear algebra backing the
/// library so it can serve as an oracle for eigenvalue-based results.
pub fn jacobi_min_eigenvalue(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut a = m.clone();
    for _ in 0..200 {
        // Largest off-diagonal element.
        let (mut p, mut q, mut biggest) = (0, 0, 0.0);
        for i in 0..n {
            for j in (i + 1)..n {
                let mag = a[(i, j)].norm();
                if mag > biggest {
                    biggest = mag;
                    p = i;
                    q = j;
                }
            }
        }
        if biggest <= 1e-14 {
            break;
        }
        let alpha = a[(p, p)].re;
        let delta = a[(q, q)].re;
        let beta = a[(p, q)];
        let b = beta.norm();
        let phase = beta / C64::new(b, 0.0);
        let theta = 0.5 * (2.0 * b).atan2(delta - alpha);
        let (c, s) = (theta.cos(), theta.sin());
        // Unitary rotation in the (p, q) plane with the phase of a_pq.
        let mut j_rot = CMatrix::identity(n, n);
        j_rot[(p, p)] = C64::new(c, 0.0);
        j_rot[(p, q)] = phase * C64::new(s, 0.0);
        j_rot[(q, p)] = -phase.conj() * C64::new(s, 0.0);
        j_rot[(q, q)] = C64::new(c, 0.0);
        a = j_rot.adjoint() * a * j_rot;
    }
    (0..n).map(|i| a[(i, i)].re).fold(f64::INFINITY, f64::min)
}

/// A random pure state as a density matrix.
pub fn random_pure_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    DensityMatrix::from_pure(&mc::haar_sample(dim, rng))
}

/// A random pure state together with its projector form.
#[allow(dead_code)]
pub fn random_pure<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> (PureState, DensityMatrix) {
    let psi = mc::haar_sample(dim, rng);
    let rho = DensityMatrix::from_pure(&psi);
    (psi, rho)
}

#[allow(dead_code)]
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
