//! Truncated q-expansions with exact rational coefficients.
//!
//! Products clear denominators and convolve big integers, one output coefficient per task.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::par::Exec;
use crate::scalars::rational::{vec_as_string, Q};

/// `a_0 + a_1 q + ... + a_N q^N + O(q^(N+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QExpansion {
    pub precision: usize,
    #[serde(with = "vec_as_string")]
    pub coeffs: Vec<Q>,
}

impl QExpansion {
    /// Pads or truncates `coeffs` to length `precision + 1`.
    pub fn new(mut coeffs: Vec<Q>, precision: usize) -> Self {
        coeffs.resize(precision + 1, Q::zero());
        QExpansion { precision, coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        QExpansion::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        QExpansion::new(vec![Q::one()], precision)
    }

    pub fn from_ints(coeffs: &[i64], precision: usize) -> Self {
        QExpansion::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect(), precision)
    }

    pub fn coeff(&self, n: usize) -> &Q {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision, "cannot extend precision");
        QExpansion::new(self.coeffs[..=precision].to_vec(), precision)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.precision.min(o.precision);
        QExpansion::new((0..=p).map(|n| &self.coeffs[n] + &o.coeffs[n]).collect(), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.precision.min(o.precision);
        QExpansion::new((0..=p).map(|n| &self.coeffs[n] - &o.coeffs[n]).collect(), p)
    }

    pub fn scale(&self, c: &Q) -> Self {
        QExpansion::new(self.coeffs.iter().map(|x| x * c).collect(), self.precision)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_with(o, Exec::default())
    }

    pub fn mul_with(&self, o: &Self, exec: Exec) -> Self {
        let p = self.precision.min(o.precision);
        let (a, da) = clear_denominators(&self.coeffs[..=p]);
        let (b, db) = clear_denominators(&o.coeffs[..=p]);
        let lo_a = a.iter().position(|x| !x.is_zero()).unwrap_or(p + 1);
        let lo_b = b.iter().position(|x| !x.is_zero()).unwrap_or(p + 1);
        let c = exec.map_range(p + 1, |n| {
            let mut acc = BigInt::zero();
            if n >= lo_a + lo_b {
                for i in lo_a..=n - lo_b {
                    if !a[i].is_zero() && !b[n - i].is_zero() {
                        acc += &a[i] * &b[n - i];
                    }
                }
            }
            acc
        });
        let den = da * db;
        QExpansion::new(c.into_iter().map(|x| Q::new(x, den.clone())).collect(), p)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = QExpansion::one(self.precision);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// `f(q^d)`.
    pub fn dilate(&self, d: usize) -> Self {
        let mut c = vec![Q::zero(); self.precision + 1];
        for n in (0..=self.precision / d).map(|n| n * d) {
            c[n] = self.coeffs[n / d].clone();
        }
        QExpansion::new(c, self.precision)
    }

    /// Index of the first nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

fn clear_denominators(xs: &[Q]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints = xs.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (ints, den)
}
