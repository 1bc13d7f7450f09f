//! Classicality thresholds and figure datasets.
//!
//! A distribution of order sigma is nonnegative for every state once the
//! order has been driven at or below -1, the Husimi case. Discretely that
//! takes `k* = max(0, ceil((sigma+1)/2))` measurements — independent of the
//! dimension — and continuously it takes
//! `t* = (sigma+1) ln(N+1) / (4 N gamma)`, which decays like `ln(N)/N` at
//! fixed coupling: larger systems classicalize faster.
//!
//! The worst case over initial states is realized by pure states, whose
//! smallest Husimi value is exactly zero. The minimization is restricted to
//! genuine density matrices: admitting trace-one matrices with negative
//! eigenvalues would overstate the attainable negativity and inflate the
//! threshold time.

use crate::lindblad::{LindbladParams, evolve_w_min};
use crate::{Error, Result};

/// Threshold data for one (sigma, N, gamma) point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub sigma: f64,
    pub dim: usize,
    pub gamma: f64,
    pub k_star: u64,
    pub t_star: f64,
}

/// Minimal number of measurements after which the order-sigma distribution
/// of every state is nonnegative: `max(0, ceil((sigma+1)/2))`. Independent
/// of the Hilbert space dimension.
pub fn k_star(sigma: f64) -> u64 {
    let c = ((sigma + 1.0) / 2.0).ceil();
    if c <= 0.0 { 0 } else { c as u64 }
}

/// The physical time per two units of order-parameter shift is
/// `2 * order_shift_time_unit`; one unit is `ln(N+1) / (4 N gamma)`.
///
/// [`t_star`] and [`sigma_eff`] both route through this constant so that
/// the substitution `sigma_eff(t_star) = -1` cancels exactly in floating
/// point whenever `sigma + 1` is a power of two (in particular for the
/// reference orders 0, 1, and 3).
pub fn order_shift_time_unit(p: &LindbladParams) -> f64 {
    ((p.dim() + 1) as f64).ln() / (2.0 * p.decay_rate())
}

/// Time-to-classicality `max(0, (sigma+1) ln(N+1) / (4 N gamma))`: the
/// first time the evolved sharp minimum reaches zero, and zero already for
/// sigma <= -1.
pub fn t_star(sigma: f64, p: &LindbladParams) -> f64 {
    let s = sigma + 1.0;
    if s <= 0.0 {
        0.0
    } else {
        s * order_shift_time_unit(p)
    }
}

/// Effective order parameter after evolving for time t:
/// `sigma - 4 gamma N t / ln(N+1)`. Satisfies `W_t^(sigma) = W_0^(sigma_eff)`
/// pointwise.
pub fn sigma_eff(sigma: f64, t: f64, p: &LindbladParams) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    Ok(sigma - t / order_shift_time_unit(p))
}

/// Both thresholds for one parameter point.
pub fn threshold(sigma: f64, p: &LindbladParams) -> ThresholdResult {
    ThresholdResult {
        sigma,
        dim: p.dim(),
        gamma: p.gamma(),
        k_star: k_star(sigma),
        t_star: t_star(sigma, p),
    }
}

/// Locate the zero of the evolved sharp minimum by bisection, to absolute
/// tolerance `tol` in t. This is an oracle for [`t_star`], deliberately
/// independent of its closed form.
pub fn bisect_time_to_nonnegative(sigma: f64, p: &LindbladParams, tol: f64) -> Result<f64> {
    let g = |t: f64| evolve_w_min(sigma, t, p);
    if g(0.0)? >= 0.0 {
        return Ok(0.0);
    }
    let mut hi = 1.0 / p.decay_rate();
    while g(hi)? < 0.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if g(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// A named coordinate grid of a figure dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: String,
    pub values: Vec<f64>,
}

/// Metadata carried alongside figure values.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureMeta {
    pub dims: Vec<usize>,
    pub gamma: Option<f64>,
    pub seed: Option<u64>,
}

/// A dense table of values over the outer product of two axes, row-major in
/// the first axis.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub axes: [Axis; 2],
    pub value_name: String,
    pub values: Vec<f64>,
    pub meta: FigureMeta,
}

impl FigureTable {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.axes[1].values.len() + j]
    }
}

/// Sharp minimum `w_min` over a sigma grid for several dimensions; every
/// row crosses zero at sigma = -1. Axes: (N, sigma).
pub fn figure1a_data(dims: &[usize], sigma_grid: &[f64]) -> Result<FigureTable> {
    if dims.is_empty() || sigma_grid.is_empty() {
        return Err(Error::InvalidParameter {
            name: "grid",
            reason: "dims and sigma grid must be nonempty".into(),
        });
    }
    let mut values = Vec::with_capacity(dims.len() * sigma_grid.len());
    for &n in dims {
        for &sigma in sigma_grid {
            let spec = crate::quasiprob::QuasiprobSpec::new(sigma, n)?;
            values.push(crate::quasiprob::w_min_formula(&spec));
        }
    }
    Ok(FigureTable {
        axes: [
            Axis {
                name: "N".into(),
                values: dims.iter().map(|&n| n as f64).collect(),
            },
            Axis {
                name: "sigma".into(),
                values: sigma_grid.to_vec(),
            },
        ],
        value_name: "w_min".into(),
        values,
        meta: FigureMeta {
            dims: dims.to_vec(),
            gamma: None,
            seed: None,
        },
    })
}

/// The evolved sharp minimum over a (sigma, t) grid for one dimension; the
/// zero-level set lies on the line `sigma - 4 gamma N t / ln(N+1) = -1`.
/// Axes: (sigma, t).
pub fn figure1b_data(
    p: &LindbladParams,
    sigma_grid: &[f64],
    t_grid: &[f64],
) -> Result<FigureTable> {
    if sigma_grid.is_empty() || t_grid.is_empty() {
        return Err(Error::InvalidParameter {
            name: "grid",
            reason: "sigma and t grids must be nonempty".into(),
        });
    }
    if let Some(&t) = t_grid.iter().find(|&&t| !(t >= 0.0)) {
        return Err(Error::NegativeTime(t));
    }
    let mut values = Vec::with_capacity(sigma_grid.len() * t_grid.len());
    for &sigma in sigma_grid {
        for &t in t_grid {
            values.push(evolve_w_min(sigma, t, p)?);
        }
    }
    Ok(FigureTable {
        axes: [
            Axis {
                name: "sigma".into(),
                values: sigma_grid.to_vec(),
            },
            Axis {
                name: "t".into(),
                values: t_grid.to_vec(),
            },
        ],
        value_name: "min_w".into(),
        values,
        meta: FigureMeta {
            dims: vec![p.dim()],
            gamma: Some(p.gamma()),
            seed: None,
        },
    })
}

/// Inclusive grid `min, min + step, ...` snapped to step multiples, ending
/// at the multiple nearest to `max`.
pub fn linspace_step(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidParameter {
            name: "step",
            reason: format!("must be positive and finite, got {step}"),
        });
    }
    if !(max >= min) {
        return Err(Error::InvalidParameter {
            name: "range",
            reason: format!("max {max} below min {min}"),
        });
    }
    let count = ((max - min) / step).round() as usize;
    Ok((0..=count).map(|i| min + i as f64 * step).collect())
}
