//! Floating evaluation of truncated q-series, used to check the `W4` transformation law
//! `(W4 f)(tau) = (-2 i tau)^(-r/2) f(-1/(4 tau))` independently of the ring substitution.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::qexp::QExpansion;
use super::space::{w4_coords, Ambient, HalfIntForm};
use crate::error::{Error, Result};

fn nome(tau: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * tau).exp()
}

/// Horner evaluation of the truncated series at `tau`.
pub fn evaluate(f: &QExpansion, tau: Complex64) -> Complex64 {
    let qn = nome(tau);
    f.coeffs.iter().rev().fold(Complex64::zero(), |acc, c| acc * qn + c.to_f64().unwrap_or(f64::NAN))
}

/// Heuristic tail bound `A (N+1)^w |q|^(N+1)` with `A = max |a_n| / n^w`.
pub fn tail_bound(f: &QExpansion, tau: Complex64, w: f64) -> f64 {
    let n = f.precision as f64;
    let a = f
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.to_f64().unwrap_or(f64::INFINITY).abs() / (k as f64).powf(w))
        .fold(0.0, f64::max);
    a * (n + 1.0).powf(w) * nome(tau).norm().powf(n + 1.0)
}

/// `|(-2 i tau)^(-r/2) f(-1/(4 tau)) - (W4 f)(tau)|`, both sides summed from the truncated series.
pub fn analytic_oracle(f: &HalfIntForm, tau: Complex64, tol: f64) -> Result<f64> {
    if f.monomial_coords.iter().all(Zero::is_zero) {
        return Ok(0.0);
    }
    let amb = Ambient::new(f.r, f.precision())?;
    let w4f = amb.expand(&w4_coords(&f.monomial_coords));
    let image = -(Complex64::new(4.0, 0.0) * tau).inv();
    let w = f.r as f64;
    let bound = tail_bound(&f.qexp, image, w).max(tail_bound(&w4f, tau, w));
    if !(bound <= tol / 10.0) {
        return Err(Error::TailBound(bound));
    }
    let factor = (Complex64::new(0.0, -2.0) * tau).powc(Complex64::new(-w / 2.0, 0.0));
    Ok((factor * evaluate(&f.qexp, image) - evaluate(&w4f, tau)).norm())
}
