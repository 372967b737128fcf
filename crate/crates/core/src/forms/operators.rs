//! Coefficientwise operators on q-expansions of weight `r/2`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::qexp::QExpansion;
use crate::error::{Error, Result};
use crate::scalars::hilbert::jacobi;
use crate::scalars::rational::{pow2, q, Q};

/// `kappa = (r - 1) / 2`.
pub fn kappa(r: i64) -> i64 {
    (r - 1).div_euclid(2)
}

/// `(-1)^((r^2 - 1) / 8)` for odd `r`.
pub fn sign_r(r: i64) -> i64 {
    match r.rem_euclid(8) {
        1 | 7 => 1,
        _ => -1,
    }
}

/// Kronecker symbol `(d / 2)`: 0 for even `d`, 1 for `d = +-1 mod 8`, -1 for `d = +-3 mod 8`.
pub fn kronecker2(d: i64) -> i64 {
    match d.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

/// Legendre symbol `(d / p)` for an odd prime `p`.
pub fn legendre(d: i64, p: u64) -> i64 {
    jacobi(&BigInt::from(d), &BigInt::from(p)) as i64
}

/// `a_n -> a_4n`.
pub fn t4(f: &QExpansion) -> QExpansion {
    let p = f.precision / 4;
    QExpansion::new((0..=p).map(|n| f.coeff(4 * n).clone()).collect(), p)
}

/// First `n` with `(-1)^kappa n = 2, 3 mod 4` and `a_n != 0`.
pub fn plus_violation(f: &QExpansion, r: i64) -> Option<usize> {
    let s = if kappa(r) % 2 == 0 { 1 } else { -1 };
    (0..=f.precision).find(|&n| matches!((s * n as i64).rem_euclid(4), 2 | 3) && !f.coeff(n).is_zero())
}

pub fn plus_condition_check(f: &QExpansion, r: i64) -> bool {
    plus_violation(f, r).is_none()
}

/// `b_n = a_{p^2 n} + ((-1)^kappa n / p) p^(kappa-1) a_n + p^(r-2) a_{n/p^2}`, with `p = 2`
/// using the Kronecker symbol. With `plus_support` the sum runs only over `n` allowed by the
/// plus condition and the other `b_n` are 0.
fn hecke_p2(f: &QExpansion, r: i64, p: u64, plus_support: bool) -> QExpansion {
    let k = kappa(r);
    let sgn = if k % 2 == 0 { 1 } else { -1 };
    let p2 = (p * p) as usize;
    let pq = q(p as i64);
    let pk = if k >= 1 { pq.pow((k - 1) as i32) } else { Q::new(1.into(), (p as i64).into()) };
    let pr = pq.pow((r - 2) as i32);
    let prec = f.precision / p2;
    let c = (0..=prec)
        .map(|n| {
            let d = sgn * n as i64;
            if plus_support && matches!(d.rem_euclid(4), 2 | 3) {
                return Q::zero();
            }
            let chi = if p == 2 { kronecker2(d) } else { legendre(d, p) };
            let mut b = f.coeff(p2 * n).clone();
            if chi != 0 {
                b += &pk * f.coeff(n) * q(chi);
            }
            if n % p2 == 0 {
                b += &pr * f.coeff(n / p2);
            }
            b
        })
        .collect();
    QExpansion::new(c, prec)
}

/// The plus-space Hecke operator at 2; defined on forms satisfying the plus condition, whose
/// image it keeps in the plus space.
pub fn t4plus(f: &QExpansion, r: i64) -> Result<QExpansion> {
    if let Some(n) = plus_violation(f, r) {
        return Err(Error::PlusConditionViolated(n));
    }
    Ok(hecke_p2(f, r, 2, true))
}

/// The classical `T_{p^2}` for an odd prime `p`.
pub fn tp2(f: &QExpansion, r: i64, p: u64) -> Result<QExpansion> {
    if p == 2 || !crate::scalars::rational::is_prime(&BigInt::from(p)) {
        return Err(Error::InvalidPlace(BigInt::from(p)));
    }
    Ok(hecke_p2(f, r, p, false))
}

/// Coefficient sequence `2^(4-r) a_16n + 4 a_n`.
pub fn lemma_sequence(f: &QExpansion, r: i64) -> QExpansion {
    let p = f.precision / 16;
    let c = pow2(4 - r);
    QExpansion::new((0..=p).map(|n| &c * f.coeff(16 * n) + q(4) * f.coeff(n)).collect(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::generators::theta;

    #[test]
    fn symbols() {
        assert_eq!([1, 3, 5, 7, 2, -1].map(kronecker2), [1, -1, -1, 1, 0, 1]);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(-1, 3), -1);
        assert_eq!([1, 3, 5, 7, 9, 13].map(sign_r), [1, -1, -1, 1, 1, -1]);
    }

    #[test]
    fn t4_fixes_theta() {
        assert_eq!(t4(&theta(400)), theta(100));
    }

    #[test]
    fn plus_condition_on_theta_power() {
        let t13 = theta(40).pow(13);
        assert!(!t13.coeff(2).is_zero());
        assert!(!plus_condition_check(&t13, 13));
        assert!(plus_condition_check(&QExpansion::zero(10), 13));
        assert!(plus_condition_check(&theta(40), 1));
    }

    #[test]
    fn t4plus_first_coefficient() {
        // kappa = 6: b_1 = a_4 + 2^5 a_1, and b_2 lies outside the plus support.
        let f = QExpansion::from_ints(&[0, 1, 0, 0, -56, 120, 0, 0, -240, 9], 36);
        let g = t4plus(&f, 13).unwrap();
        assert_eq!(g.coeff(1), &q(-56 + 32));
        assert!(g.coeff(2).is_zero());
    }

    #[test]
    fn hecke_rejects_bad_primes() {
        assert!(tp2(&theta(10), 1, 2).is_err());
        assert!(tp2(&theta(10), 1, 9).is_err());
        assert_eq!(t4plus(&theta(40).pow(13), 13), Err(Error::PlusConditionViolated(2)));
    }
}
