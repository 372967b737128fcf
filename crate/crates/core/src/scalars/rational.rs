//! Exact rationals and the 2-adic and p-adic helpers built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Q::new(n, d))
}

/// Reduced form with the sign on the numerator; integers print without a denominator.
pub fn format_q(x: &Q) -> String {
    x.to_string()
}

/// Power of 2 as an exact rational, negative exponents allowed.
pub fn pow2(n: i64) -> Q {
    let m = BigInt::one() << n.unsigned_abs();
    if n >= 0 {
        Q::from_integer(m)
    } else {
        Q::new(BigInt::one(), m)
    }
}

pub fn int_valuation(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (quo, rem) = n.div_rem(p);
        if !rem.is_zero() {
            return v;
        }
        n = quo;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(x: &Q, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let p = BigInt::from(p);
    Ok(int_valuation(x.numer(), &p) as i64 - int_valuation(x.denom(), &p) as i64)
}

/// 2-adic valuation, `None` for zero.
pub fn v2(x: &Q) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let t = |n: &BigInt| n.trailing_zeros().unwrap_or(0) as i64;
    Some(t(x.numer()) - t(x.denom()))
}

/// Writes `x = 2^n * u` with `u` a 2-adic unit.
pub fn dyadic_decompose(x: &Q) -> Result<(i64, Q)> {
    let n = v2(x).ok_or(Error::ZeroInput)?;
    Ok((n, x / pow2(n)))
}

/// True when `x` lies in the 2-adic integers.
pub fn is_2_integral(x: &Q) -> bool {
    x.is_zero() || v2(x).unwrap() >= 0
}

/// Residue of a 2-adic integer modulo `2^k`, as an integer in `[0, 2^k)`.
pub fn residue_mod_2k(x: &Q, k: u32) -> Result<u64> {
    if !is_2_integral(x) {
        return Err(Error::NotAUnit);
    }
    let m = BigInt::one() << k;
    let d = x.denom().mod_floor(&m);
    let inv = modinv(&d, &m).ok_or(Error::NotAUnit)?;
    Ok((x.numer() * inv).mod_floor(&m).to_u64().unwrap())
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Distinct prime factors of `|n|` by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            out.push(p.clone());
            while n.is_multiple_of(&p) {
                n /= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    prime_factors(n).len() == 1 && &prime_factors(n)[0] == n
}

/// The integer `numer * denom`, which lies in the same square class as `x`.
pub fn square_class_rep(x: &Q) -> BigInt {
    x.numer() * x.denom()
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Serde adapter writing rationals as canonical `"p/q"` strings.
pub mod as_string {
    use super::{format_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for vectors of rationals as string arrays.
pub mod vec_as_string {
    use super::{format_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        x.iter().map(format_q).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_q(s).map_err(serde::de::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_examples() {
        assert_eq!(dyadic_decompose(&qf(12, 5)).unwrap(), (2, qf(3, 5)));
        assert_eq!(dyadic_decompose(&qf(-1, 8)).unwrap(), (-3, q(-1)));
        assert_eq!(dyadic_decompose(&q(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7", "0", "-5/12"] {
            assert_eq!(format_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(format_q(&parse_q("6/-8").unwrap()), "-3/4");
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(residue_mod_2k(&qf(1, 3), 3).unwrap(), 3);
        assert_eq!(residue_mod_2k(&q(-1), 2).unwrap(), 3);
        assert!(residue_mod_2k(&qf(1, 2), 2).is_err());
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(&BigInt::from(360)), vec![2, 3, 5].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert!(is_prime(&BigInt::from(97)));
        assert!(!is_prime(&BigInt::from(91)));
    }
}
