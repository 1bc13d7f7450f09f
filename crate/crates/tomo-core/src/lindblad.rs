//! Continuous-time unravelling of the tomographic channel: a Lindblad
//! equation with every su(N) generator acting as an independent jump
//! operator.
//!
//! By the completeness relation the full generator collapses to
//! `L(X) = 2 gamma (tr(X) I - N X)`, so all trace-free components decay at
//! the uniform rate `2 gamma N` and the flow interpolates the discrete
//! channel iterates at times `t_k = k ln(N+1) / (2 gamma N)`. The full
//! N^2 - 1 term summation is kept as the validation path; the reduced form
//! is what sweeps use.

use crate::quasiprob::QuasiprobValue;
use crate::state::DensityMatrix;
use crate::su::GeneratorSet;
use crate::{C64, CMatrix, Error, Result};

/// Stability guard for the fixed-step RK4 integrator: `dt * 2 gamma N` may
/// not exceed this.
pub const RK4_STABILITY_LIMIT: f64 = 0.1;

/// Hermiticity/trace tolerance applied to states recorded along a numerical
/// trajectory; roundoff accumulates slightly above the constructor default.
pub const TRAJECTORY_TOL: f64 = 1e-11;

/// Coupling strength and dimension of the monitored system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LindbladParams {
    gamma: f64,
    dim: usize,
}

impl LindbladParams {
    pub fn new(gamma: f64, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                reason: format!("must be positive and finite, got {gamma}"),
            });
        }
        Ok(Self { gamma, dim })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Uniform decay rate of the Bloch components, `2 gamma N`.
    pub fn decay_rate(&self) -> f64 {
        2.0 * self.gamma * self.dim as f64
    }
}

/// Which right-hand side backs a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhsKind {
    /// Explicit sum over all N^2 - 1 jump operators; O(N^5) per evaluation.
    Full,
    /// The closed-form reduction `2 gamma (tr(X) I - N X)`.
    Reduced,
}

/// The full Lindblad right-hand side
/// `gamma sum_i (g_i X g_i - (1/2){g_i^2, X})`, by explicit summation.
///
/// Defined for any square matrix so the generator can act on kernels; the
/// result is trace-free.
pub fn rhs_full(x: &CMatrix, p: &LindbladParams, g: &GeneratorSet) -> Result<CMatrix> {
    if g.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: g.dim(),
        });
    }
    if x.nrows() != p.dim() || x.ncols() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: x.nrows().max(x.ncols()),
        });
    }
    let n = p.dim();
    let mut acc = CMatrix::zeros(n, n);
    let half = C64::new(0.5, 0.0);
    for gi in g.matrices() {
        let gi2 = gi * gi;
        acc += gi * x * gi - (&gi2 * x + x * &gi2) * half;
    }
    Ok(acc * C64::new(p.gamma(), 0.0))
}

/// The reduced right-hand side `2 gamma (tr(X) I - N X)`; equals
/// `2 gamma (I - N rho)` on unit-trace input.
pub fn rhs_reduced(x: &CMatrix, p: &LindbladParams) -> Result<CMatrix> {
    if x.nrows() != p.dim() || x.ncols() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: x.nrows().max(x.ncols()),
        });
    }
    let n = p.dim();
    let m = CMatrix::identity(n, n) * x.trace() - x * C64::new(n as f64, 0.0);
    Ok(m * C64::new(2.0 * p.gamma(), 0.0))
}

/// Exact solution `rho(t) = I/N + e^(-2 gamma N t) (rho0 - I/N)`.
pub fn evolve_closed_form(rho0: &DensityMatrix, t: f64, p: &LindbladParams) -> Result<DensityMatrix> {
    if rho0.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: rho0.dim(),
        });
    }
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    let n = p.dim();
    let damp = (-p.decay_rate() * t).exp();
    let mixed = CMatrix::identity(n, n) * C64::new(1.0 / n as f64, 0.0);
    let m = &mixed + (rho0.matrix() - &mixed) * C64::new(damp, 0.0);
    DensityMatrix::new(m)
}

/// The time at which the flow matches the k-th discrete channel iterate,
/// `t_k = k ln(N+1) / (2 gamma N)`. The integer multiplies a precomputed
/// per-step time so that thresholds at even order shifts reproduce these
/// times exactly.
pub fn interpolation_time(k: u64, p: &LindbladParams) -> f64 {
    k as f64 * (((p.dim() + 1) as f64).ln() / p.decay_rate())
}

/// A fixed-step RK4 trajectory: states recorded at every step, times
/// ascending, final time exactly `t`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityMatrix>,
}

impl Trajectory {
    pub fn last(&self) -> &DensityMatrix {
        self.states.last().expect("trajectory holds at least rho0")
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Classical fixed-step RK4 integration of the master equation from 0 to
/// `t`. The dynamics is a uniform linear contraction, so fixed stepping has
/// analytically known error behavior — which is what makes this a usable
/// oracle for the closed form.
pub fn evolve_rk4(
    rho0: &DensityMatrix,
    t: f64,
    p: &LindbladParams,
    dt: f64,
    kind: RhsKind,
) -> Result<Trajectory> {
    if rho0.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: rho0.dim(),
        });
    }
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    if !(dt > 0.0) {
        return Err(Error::InvalidParameter {
            name: "dt",
            reason: format!("must be positive, got {dt}"),
        });
    }
    if t > 0.0 && dt > t {
        return Err(Error::InvalidParameter {
            name: "dt",
            reason: format!("step {dt} exceeds total time {t}"),
        });
    }
    let stiffness = dt * p.decay_rate();
    if stiffness > RK4_STABILITY_LIMIT {
        return Err(Error::StabilityGuard(stiffness));
    }

    let generators = match kind {
        RhsKind::Full => Some(GeneratorSet::new(p.dim())?),
        RhsKind::Reduced => None,
    };
    let rhs = |x: &CMatrix| -> Result<CMatrix> {
        match &generators {
            Some(g) => rhs_full(x, p, g),
            None => rhs_reduced(x, p),
        }
    };

    let mut times = Vec::new();
    let mut states = Vec::new();
    times.push(0.0);
    states.push(rho0.clone());

    let mut y = rho0.matrix().clone();
    let n_full = (t / dt).floor() as u64;
    let step_to = |y: &CMatrix, h: f64| -> Result<CMatrix> {
        let half = C64::new(h / 2.0, 0.0);
        let k1 = rhs(y)?;
        let k2 = rhs(&(y + &k1 * half))?;
        let k3 = rhs(&(y + &k2 * half))?;
        let k4 = rhs(&(y + &k3 * C64::new(h, 0.0)))?;
        Ok(y + (k1 + k2 * C64::new(2.0, 0.0) + k3 * C64::new(2.0, 0.0) + k4)
            * C64::new(h / 6.0, 0.0))
    };

    let record = |times: &mut Vec<f64>, states: &mut Vec<DensityMatrix>, time: f64, y: &CMatrix| -> Result<()> {
        if y.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite(time));
        }
        times.push(time);
        states.push(DensityMatrix::with_tolerances(
            y.clone(),
            TRAJECTORY_TOL,
            TRAJECTORY_TOL,
        )?);
        Ok(())
    };

    for i in 1..=n_full {
        y = step_to(&y, dt)?;
        record(&mut times, &mut states, i as f64 * dt, &y)?;
    }
    let covered = n_full as f64 * dt;
    let remainder = t - covered;
    if remainder > dt * 1e-9 {
        y = step_to(&y, remainder)?;
        record(&mut times, &mut states, t, &y)?;
    } else if let Some(last) = times.last_mut() {
        // Land the bookkeeping exactly on t when the grid already reached it.
        if t > 0.0 {
            *last = t;
        }
    }
    Ok(Trajectory { times, states })
}

/// Exact scalar evolution of a quasiprobability value:
/// `W_t = 1/N + (W_0 - 1/N) e^(-2 gamma N t)`, the solution of
/// `dW/dt = 2 gamma (1 - N W)`.
pub fn evolve_w(w0: &QuasiprobValue, t: f64, p: &LindbladParams) -> Result<QuasiprobValue> {
    if w0.spec.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: w0.spec.dim(),
        });
    }
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    let inv_n = 1.0 / p.dim() as f64;
    Ok(QuasiprobValue {
        value: inv_n + (w0.value - inv_n) * (-p.decay_rate() * t).exp(),
        spec: w0.spec,
    })
}

/// Evolve the sharp lower bound of the order-sigma distribution; the
/// quantity whose zero crossing defines the decoherence timescale.
pub fn evolve_w_min(sigma: f64, t: f64, p: &LindbladParams) -> Result<f64> {
    let spec = crate::quasiprob::QuasiprobSpec::new(sigma, p.dim())?;
    let w0 = QuasiprobValue {
        value: crate::quasiprob::w_min_formula(&spec),
        spec,
    };
    Ok(evolve_w(&w0, t, p)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::tomographic_iterate;
    use crate::mc::{self, substream_rng};
    use crate::quasiprob::{QuasiprobSpec, evaluate_w, sw_kernel};

    fn max_abs(m: &CMatrix) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn params_are_validated() {
        assert!(LindbladParams::new(1.0, 1).is_err());
        assert!(LindbladParams::new(0.0, 3).is_err());
        assert!(LindbladParams::new(-1.0, 3).is_err());
        assert!(LindbladParams::new(f64::NAN, 3).is_err());
        let p = LindbladParams::new(0.5, 4).unwrap();
        assert_eq!(p.decay_rate(), 4.0);
    }

    #[test]
    fn mixed_state_is_stationary() {
        let p = LindbladParams::new(1.0, 3).unwrap();
        let g = GeneratorSet::new(3).unwrap();
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(max_abs(&rhs_full(rho.matrix(), &p, &g).unwrap()) <= 1e-13);
        assert!(max_abs(&rhs_reduced(rho.matrix(), &p).unwrap()) <= 1e-15);
    }

    #[test]
    fn full_rhs_on_qubit_ground_state() {
        // 2 (I - 2 rho) = diag(-2, 2) at gamma = 1.
        let p = LindbladParams::new(1.0, 2).unwrap();
        let g = GeneratorSet::new(2).unwrap();
        let rho = DensityMatrix::basis_state(2, 0).unwrap();
        let out = rhs_full(rho.matrix(), &p, &g).unwrap();
        assert!((out[(0, 0)].re + 2.0).abs() <= 1e-13);
        assert!((out[(1, 1)].re - 2.0).abs() <= 1e-13);
        assert!(out[(0, 1)].norm() <= 1e-13);
    }

    #[test]
    fn full_reduces_to_simple_form() {
        let mut rng = substream_rng(3, 0);
        for n in 2..=6 {
            let p = LindbladParams::new(0.8, n).unwrap();
            let g = GeneratorSet::new(n).unwrap();
            for _ in 0..50 {
                let rho = mc::random_density(n, &mut rng);
                let full = rhs_full(rho.matrix(), &p, &g).unwrap();
                let reduced = rhs_reduced(rho.matrix(), &p).unwrap();
                assert!(max_abs(&(&full - &reduced)) <= 1e-11, "N={n}");
            }
        }
    }

    #[test]
    fn rhs_is_trace_free() {
        let mut rng = substream_rng(5, 0);
        let p = LindbladParams::new(1.3, 4).unwrap();
        let g = GeneratorSet::new(4).unwrap();
        let rho = mc::random_density(4, &mut rng);
        assert!(rhs_full(rho.matrix(), &p, &g).unwrap().trace().norm() <= 1e-13);
        assert!(rhs_reduced(rho.matrix(), &p).unwrap().trace().norm() <= 1e-13);
    }

    #[test]
    fn closed_form_at_zero_is_initial_state() {
        let mut rng = substream_rng(7, 0);
        let p = LindbladParams::new(1.0, 3).unwrap();
        let rho = mc::random_density(3, &mut rng);
        let out = evolve_closed_form(&rho, 0.0, &p).unwrap();
        assert!(max_abs(&(out.matrix() - rho.matrix())) <= 1e-15);
    }

    #[test]
    fn long_time_limit_is_maximally_mixed() {
        let mut rng = substream_rng(11, 0);
        let p = LindbladParams::new(1.0, 3).unwrap();
        let rho = mc::random_density(3, &mut rng);
        let t = 100.0 / p.decay_rate();
        let out = evolve_closed_form(&rho, t, &p).unwrap();
        let mixed = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(max_abs(&(out.matrix() - mixed.matrix())) <= 1e-15);
    }

    #[test]
    fn negative_time_is_rejected() {
        let p = LindbladParams::new(1.0, 2).unwrap();
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(matches!(
            evolve_closed_form(&rho, -0.1, &p),
            Err(Error::NegativeTime(_))
        ));
    }

    #[test]
    fn flow_interpolates_the_discrete_channel() {
        let mut rng = substream_rng(13, 0);
        for n in [2usize, 3, 4] {
            let p = LindbladParams::new(1.0, n).unwrap();
            let rho = mc::random_density(n, &mut rng);
            for k in 0..=10u64 {
                let tk = interpolation_time(k, &p);
                let continuous = evolve_closed_form(&rho, tk, &p).unwrap();
                let discrete = tomographic_iterate(&rho, k).unwrap();
                let err = max_abs(&(continuous.matrix() - discrete.state.matrix()));
                assert!(err <= 1e-13, "N={n} k={k} err={err:e}");
            }
        }
    }

    #[test]
    fn interpolation_time_values() {
        let p = LindbladParams::new(1.0, 2).unwrap();
        assert_eq!(interpolation_time(0, &p), 0.0);
        assert!((interpolation_time(1, &p) - 3.0_f64.ln() / 4.0).abs() <= 1e-15);
        assert!((interpolation_time(1, &p) - 0.2746531).abs() <= 1e-7);
        // e^(-2 gamma N t_k) = (N+1)^(-k).
        for k in 0..=20u64 {
            let lhs = (-p.decay_rate() * interpolation_time(k, &p)).exp();
            let rhs = 3.0_f64.powi(-(k as i32));
            assert!((lhs - rhs).abs() <= 1e-15 * rhs.max(1.0));
        }
    }

    #[test]
    fn bloch_norm_decays_exponentially() {
        let mut rng = substream_rng(17, 0);
        let n = 3;
        let p = LindbladParams::new(0.7, n).unwrap();
        let g = GeneratorSet::new(n).unwrap();
        let rho = mc::random_density(n, &mut rng);
        let (t1, t2) = (0.11, 0.37);
        let r1 = evolve_closed_form(&rho, t1, &p).unwrap().bloch(&g).unwrap();
        let r2 = evolve_closed_form(&rho, t2, &p).unwrap().bloch(&g).unwrap();
        let measured = r2.norm() / r1.norm();
        let expected = (-p.decay_rate() * (t2 - t1)).exp();
        assert!(((measured - expected) / expected).abs() <= 1e-10);
    }

    #[test]
    fn rk4_keeps_mixed_state_constant() {
        let p = LindbladParams::new(1.0, 3).unwrap();
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        let traj = evolve_rk4(&rho, 0.5, &p, 0.01, RhsKind::Reduced).unwrap();
        for s in &traj.states {
            assert!(max_abs(&(s.matrix() - rho.matrix())) <= 1e-13);
        }
    }

    #[test]
    fn rk4_matches_closed_form() {
        let mut rng = substream_rng(19, 0);
        let p = LindbladParams::new(1.0, 3).unwrap();
        let rho = mc::random_density(3, &mut rng);
        let t = 0.4;
        let dt = 1e-3 / p.decay_rate();
        let exact = evolve_closed_form(&rho, t, &p).unwrap();
        for kind in [RhsKind::Full, RhsKind::Reduced] {
            let traj = evolve_rk4(&rho, t, &p, dt, kind).unwrap();
            assert!((traj.times.last().unwrap() - t).abs() <= 1e-12);
            let err = (traj.last().matrix() - exact.matrix()).norm();
            assert!(err <= 1e-10, "{kind:?} err={err:e}");
        }
    }

    #[test]
    fn rk4_is_fourth_order() {
        let mut rng = substream_rng(23, 0);
        let p = LindbladParams::new(1.0, 2).unwrap();
        let rho = mc::random_density(2, &mut rng);
        let t = 0.5;
        let exact = evolve_closed_form(&rho, t, &p).unwrap();
        let err = |dt: f64| {
            let traj = evolve_rk4(&rho, t, &p, dt, RhsKind::Reduced).unwrap();
            (traj.last().matrix() - exact.matrix()).norm()
        };
        let ratio = err(0.02) / err(0.01);
        assert!((13.0..=19.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn rk4_full_and_reduced_agree() {
        let mut rng = substream_rng(29, 0);
        let p = LindbladParams::new(1.0, 4).unwrap();
        let rho = mc::random_density(4, &mut rng);
        let dt = 1e-2 / p.decay_rate();
        let a = evolve_rk4(&rho, 1.0, &p, dt, RhsKind::Full).unwrap();
        let b = evolve_rk4(&rho, 1.0, &p, dt, RhsKind::Reduced).unwrap();
        let err = (a.last().matrix() - b.last().matrix()).norm();
        assert!(err <= 1e-10, "err={err:e}");
    }

    #[test]
    fn rk4_guards() {
        let p = LindbladParams::new(1.0, 2).unwrap();
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        // Stability guard: dt * 2 gamma N > 0.1.
        assert!(matches!(
            evolve_rk4(&rho, 1.0, &p, 0.05, RhsKind::Reduced),
            Err(Error::StabilityGuard(_))
        ));
        // dt greater than t.
        assert!(evolve_rk4(&rho, 0.001, &p, 0.01, RhsKind::Reduced).is_err());
        // t = 0 is fine regardless of dt.
        let traj = evolve_rk4(&rho, 0.0, &p, 0.01, RhsKind::Reduced).unwrap();
        assert_eq!(traj.len(), 1);
        // Negative dt.
        assert!(evolve_rk4(&rho, 1.0, &p, -0.01, RhsKind::Reduced).is_err());
    }

    #[test]
    fn trajectory_stays_physical() {
        let mut rng = substream_rng(31, 0);
        let p = LindbladParams::new(1.0, 3).unwrap();
        let g = GeneratorSet::new(3).unwrap();
        let psi = mc::haar_sample(3, &mut rng);
        let rho = DensityMatrix::from_pure(&psi);
        let dt = 5e-3 / p.decay_rate();
        let traj = evolve_rk4(&rho, 0.6, &p, dt, RhsKind::Reduced).unwrap();
        let mut prev_norm = f64::INFINITY;
        for (time, s) in traj.times.iter().zip(&traj.states) {
            let herm = max_abs(&(s.matrix() - s.matrix().adjoint()));
            let tr_dev = (s.matrix().trace().re - 1.0).abs();
            assert!(herm <= 1e-11 && tr_dev <= 1e-11, "t={time}");
            let norm = s.bloch(&g).unwrap().norm();
            assert!(norm <= prev_norm + 1e-12, "Bloch norm grew at t={time}");
            prev_norm = norm;
        }
        assert!(traj.times.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn generator_is_selfadjoint_in_the_pairing() {
        // tr(L(rho) w) = tr(rho L(w)).
        let mut rng = substream_rng(37, 0);
        let n = 3;
        let p = LindbladParams::new(1.1, n).unwrap();
        let g = GeneratorSet::new(n).unwrap();
        for sigma in [-1.0, 0.0, 1.4] {
            let spec = QuasiprobSpec::new(sigma, n).unwrap();
            let rho = mc::random_density(n, &mut rng);
            let psi = mc::haar_sample(n, &mut rng);
            let kernel = sw_kernel(&psi, &spec, &g).unwrap();
            let lhs = (rhs_full(rho.matrix(), &p, &g).unwrap() * &kernel).trace().re;
            let rhs_val = (rho.matrix() * rhs_full(&kernel, &p, &g).unwrap()).trace().re;
            assert!((lhs - rhs_val).abs() <= 1e-11, "sigma={sigma}");
        }
    }

    #[test]
    fn generator_acts_affinely_on_kernels() {
        // L(w) = 2 gamma (I - N w).
        let mut rng = substream_rng(41, 0);
        let n = 3;
        let p = LindbladParams::new(0.9, n).unwrap();
        let g = GeneratorSet::new(n).unwrap();
        let spec = QuasiprobSpec::new(0.6, n).unwrap();
        let psi = mc::haar_sample(n, &mut rng);
        let kernel = sw_kernel(&psi, &spec, &g).unwrap();
        let lhs = rhs_full(&kernel, &p, &g).unwrap();
        let rhs_val = (CMatrix::identity(n, n) - &kernel * C64::new(n as f64, 0.0))
            * C64::new(2.0 * p.gamma(), 0.0);
        assert!(max_abs(&(&lhs - &rhs_val)) <= 1e-11);
    }

    #[test]
    fn scalar_flow_is_consistent_with_matrix_flow() {
        // evaluate_w after evolving the state equals evolve_w of the value.
        let mut rng = substream_rng(43, 0);
        let n = 3;
        let p = LindbladParams::new(1.0, n).unwrap();
        let rho = mc::random_density(n, &mut rng);
        let psi = mc::haar_sample(n, &mut rng);
        for sigma in [-1.0, 0.2, 1.0] {
            let spec = QuasiprobSpec::new(sigma, n).unwrap();
            for t in [0.0, 0.07, 0.31, 1.5] {
                let evolved_state = evolve_closed_form(&rho, t, &p).unwrap();
                let lhs = evaluate_w(&evolved_state, &psi, &spec).unwrap().value;
                let w0 = evaluate_w(&rho, &psi, &spec).unwrap();
                let rhs_val = evolve_w(&w0, t, &p).unwrap().value;
                assert!((lhs - rhs_val).abs() <= 1e-12, "sigma={sigma} t={t}");
            }
        }
    }

    #[test]
    fn scalar_flow_fixed_point_and_limit() {
        let p = LindbladParams::new(1.0, 4).unwrap();
        let spec = QuasiprobSpec::wigner(4).unwrap();
        let w0 = QuasiprobValue { value: 0.25, spec };
        let out = evolve_w(&w0, 2.3, &p).unwrap();
        assert_eq!(out.value, 0.25);
        let neg = QuasiprobValue { value: -0.8, spec };
        let late = evolve_w(&neg, 100.0 / p.decay_rate(), &p).unwrap();
        assert!((late.value - 0.25).abs() <= 1e-15);
        assert!(evolve_w(&neg, -1.0, &p).is_err());
    }

    #[test]
    fn scalar_flow_satisfies_its_ode() {
        // Finite-difference check of dW/dt = 2 gamma (1 - N W).
        let p = LindbladParams::new(0.8, 3).unwrap();
        let spec = QuasiprobSpec::p_rep(3).unwrap();
        let w0 = QuasiprobValue {
            value: crate::quasiprob::w_min_formula(&spec),
            spec,
        };
        let t = 0.2;
        let h = 1e-6;
        let wm = evolve_w(&w0, t - h, &p).unwrap().value;
        let wp = evolve_w(&w0, t + h, &p).unwrap().value;
        let wc = evolve_w(&w0, t, &p).unwrap().value;
        let deriv = (wp - wm) / (2.0 * h);
        let expected = 2.0 * p.gamma() * (1.0 - 3.0 * wc);
        assert!((deriv - expected).abs() <= 1e-6);
    }
}
