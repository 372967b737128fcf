//! Classical q-expansions: the generators `theta` and `F` of the ring of forms on `Gamma0(4)`,
//! level-one Eisenstein series, eta products and the one-dimensional level-one cusp eigenforms.

use num_bigint::BigInt;
use num_traits::Zero;

use super::qexp::QExpansion;
use crate::error::{Error, Result};
use crate::scalars::rational::{q, Q};

/// `sum of d^k over d | n`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            s += BigInt::from(d).pow(k);
            if d * d != n {
                s += BigInt::from(n / d).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// `theta = sum over n in Z of q^(n^2)`, weight 1/2.
pub fn theta(n: usize) -> QExpansion {
    let mut c = vec![Q::zero(); n + 1];
    c[0] = q(1);
    let mut k = 1;
    while k * k <= n {
        c[k * k] = q(2);
        k += 1;
    }
    QExpansion::new(c, n)
}

/// `F = sum over odd n of sigma_1(n) q^n`, weight 2.
pub fn gen_f(n: usize) -> QExpansion {
    let c = (0..=n).map(|k| if k % 2 == 1 { Q::from_integer(sigma(1, k as u64)) } else { Q::zero() }).collect();
    QExpansion::new(c, n)
}

fn eisenstein(k: u32, scale: i64, n: usize) -> QExpansion {
    let mut c: Vec<Q> = (0..=n).map(|m| Q::from_integer(sigma(k - 1, m as u64) * scale)).collect();
    c[0] = q(1);
    QExpansion::new(c, n)
}

pub fn e4(n: usize) -> QExpansion {
    eisenstein(4, 240, n)
}

pub fn e6(n: usize) -> QExpansion {
    eisenstein(6, -504, n)
}

/// `Delta = (E4^3 - E6^2) / 1728`.
pub fn delta(n: usize) -> QExpansion {
    e4(n).pow(3).sub(&e6(n).pow(2)).scale(&Q::new(1.into(), 1728.into()))
}

/// `q^(sum d e / 24) prod over (d, e) of prod over m >= 1 of (1 - q^(d m))^e`, for products whose
/// leading exponent is a nonnegative integer.
pub fn eta_product(factors: &[(usize, i32)], n: usize) -> Result<QExpansion> {
    let lead: i64 = factors.iter().map(|&(d, e)| d as i64 * e as i64).sum();
    if lead < 0 || lead % 24 != 0 {
        return Err(Error::InvalidIndex(lead));
    }
    let shift = (lead / 24) as usize;
    let mut acc = QExpansion::one(n);
    for &(d, e) in factors {
        // prod (1 - q^(dm)) to precision n, then raise to |e|, inverting for negative e.
        let mut base = QExpansion::one(n).coeffs;
        for k in (1..=n / d).map(|m| m * d) {
            for i in (k..=n).rev() {
                let t = base[i - k].clone();
                base[i] -= t;
            }
        }
        let mut p = QExpansion::new(base, n).pow(e.unsigned_abs());
        if e < 0 {
            p = series_inverse(&p);
        }
        acc = acc.mul(&p);
    }
    let mut c = vec![Q::zero(); shift];
    c.extend(acc.coeffs.into_iter().take(n + 1 - shift.min(n + 1)));
    Ok(QExpansion::new(c, n))
}

/// Inverse of a series with constant term 1.
fn series_inverse(f: &QExpansion) -> QExpansion {
    let n = f.precision;
    let mut g = vec![Q::zero(); n + 1];
    g[0] = Q::from_integer(1.into()) / &f.coeffs[0];
    for k in 1..=n {
        let s: Q = (1..=k).map(|i| &f.coeffs[i] * &g[k - i]).sum();
        g[k] = -s * &g[0];
    }
    QExpansion::new(g, n)
}

pub const EIGENFORM_WEIGHTS: [i64; 6] = [12, 16, 18, 20, 22, 26];

/// The normalized level-one cusp eigenform of weight `k` for the weights where the space is a line.
pub fn integral_weight_eigenform(k: i64, n: usize) -> Result<QExpansion> {
    let (a, b) = match k {
        12 => (0, 0),
        16 => (1, 0),
        18 => (0, 1),
        20 => (2, 0),
        22 => (1, 1),
        26 => (2, 1),
        _ => return Err(Error::UnsupportedWeight(k)),
    };
    Ok(delta(n).mul(&e4(n).pow(a)).mul(&e6(n).pow(b)))
}
