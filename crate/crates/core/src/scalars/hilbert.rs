//! Hilbert symbols over the completions of Q.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{int_valuation, is_prime, prime_factors, square_class_rep, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Place {
    Infinite,
    Finite(BigInt),
}

impl Place {
    pub fn two() -> Self {
        Place::Finite(BigInt::from(2))
    }

    pub fn prime(p: u64) -> Self {
        Place::Finite(BigInt::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    assert!(n.is_positive() && n.is_odd());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1;
    let low = |x: &BigInt, m: u32| (x % m).to_u32().unwrap();
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            if matches!(low(&n, 8), 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if low(&a, 4) == 3 && low(&n, 4) == 3 {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

fn sign_of_parity(e: &BigInt) -> i32 {
    if e.is_even() {
        1
    } else {
        -1
    }
}

/// `(u-1)/2 mod 2` for an odd integer `u`.
fn eps(u: &BigInt) -> BigInt {
    ((u - 1u32) / 2u32).mod_floor(&BigInt::from(2))
}

/// `(u^2-1)/8 mod 2` for an odd integer `u`.
fn omega(u: &BigInt) -> BigInt {
    ((u * u - 1u32) / 8u32).mod_floor(&BigInt::from(2))
}

fn hilbert_int(a: &BigInt, b: &BigInt, place: &Place) -> i32 {
    match place {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) => {
            let al = int_valuation(a, p);
            let be = int_valuation(b, p);
            let pa = num_traits::pow(p.clone(), al as usize);
            let pb = num_traits::pow(p.clone(), be as usize);
            let u = a / pa;
            let v = b / pb;
            let (al, be) = (BigInt::from(al), BigInt::from(be));
            if p == &BigInt::from(2) {
                let e = eps(&u) * eps(&v) + &al * omega(&v) + &be * omega(&u);
                sign_of_parity(&e)
            } else {
                let ep = (p - 1u32) / 2u32;
                let s = sign_of_parity(&(&al * &be * ep));
                let ju = if be.is_even() { 1 } else { jacobi(&u, p) };
                let jv = if al.is_even() { 1 } else { jacobi(&v, p) };
                s * ju * jv
            }
        }
    }
}

/// The Hilbert symbol `(a, b)_v` of two nonzero rationals.
pub fn hilbert(a: &Q, b: &Q, place: &Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Place::Finite(p) = place {
        if !is_prime(p) {
            return Err(Error::InvalidPlace(p.clone()));
        }
    }
    Ok(hilbert_int(&square_class_rep(a), &square_class_rep(b), place))
}

/// `(a, b)_2`, the symbol used throughout the 2-adic group.
pub fn hilbert2(a: &Q, b: &Q) -> i32 {
    hilbert(a, b, &Place::two()).expect("nonzero arguments")
}

/// Places where `(a, b)_v` can be nontrivial: infinity, 2 and the primes dividing `a` or `b`.
pub fn relevant_places<'a>(xs: impl IntoIterator<Item = &'a Q>) -> Vec<Place> {
    let mut primes: Vec<BigInt> = vec![BigInt::from(2)];
    for x in xs {
        for n in [x.numer(), x.denom()] {
            for p in prime_factors(n) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    primes.sort();
    let mut out = vec![Place::Infinite];
    out.extend(primes.into_iter().map(Place::Finite));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{q, qf};

    /// Decides `(a, b)_2` for small integers by searching for a
    /// primitive solution of `z^2 = a x^2 + b y^2` modulo a high power of 2.
    fn hilbert2_bruteforce(a: i64, b: i64) -> i32 {
        let m: i64 = 1 << 7;
        let squares: Vec<i64> = (0..m).map(|z| (z * z) % m).collect();
        for x in 0..m {
            for y in 0..m {
                let t = (a * x * x + b * y * y).rem_euclid(m);
                for z in 0..m {
                    if (x % 2 == 1 || y % 2 == 1 || z % 2 == 1) && squares[z as usize] == t {
                        return 1;
                    }
                }
            }
        }
        -1
    }

    #[test]
    fn examples() {
        assert_eq!(hilbert(&q(-1), &q(-1), &Place::two()).unwrap(), -1);
        assert_eq!(hilbert(&q(-1), &q(-1), &Place::Infinite).unwrap(), -1);
        assert_eq!(hilbert(&q(2), &q(3), &Place::prime(3)).unwrap(), -1);
        assert_eq!(hilbert(&q(2), &q(7), &Place::two()).unwrap(), 1);
        assert_eq!(hilbert(&q(0), &q(3), &Place::two()), Err(Error::ZeroInput));
        assert!(matches!(hilbert(&q(2), &q(3), &Place::prime(4)), Err(Error::InvalidPlace(_))));
    }

    #[test]
    fn two_adic_matches_search() {
        let vals = [-15i64, -12, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 12, 14];
        for &a in &vals {
            for &b in &vals {
                assert_eq!(hilbert(&q(a), &q(b), &Place::two()).unwrap(), hilbert2_bruteforce(a, b), "({a},{b})_2");
            }
        }
    }

    #[test]
    fn rational_arguments_use_square_class() {
        assert_eq!(hilbert2(&qf(1, 3), &qf(-1, 1)), hilbert2(&q(3), &q(-1)));
        assert_eq!(hilbert2(&qf(2, 5), &qf(3, 7)), hilbert2(&q(10), &q(21)));
    }

    #[test]
    fn jacobi_small() {
        let n = BigInt::from(7);
        let res: Vec<i32> = (0..7).map(|a| jacobi(&BigInt::from(a), &n)).collect();
        assert_eq!(res, vec![0, 1, 1, -1, 1, -1, -1]);
    }
}
