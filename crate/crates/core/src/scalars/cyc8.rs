//! Elements of Q(zeta_8), stored in the power basis 1, z, z^2, z^3 with z^4 = -1.
//!
//! `sqrt2 = z - z^3` and `i = z^2`. Every constant the rest of the crate needs
//! (square roots of 2, fourth roots of unity, the Weil index) lives here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_q, parse_q, q, Q};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyc8 {
    c: [Q; 4],
}

impl Cyc8 {
    pub fn new(c0: Q, c1: Q, c2: Q, c3: Q) -> Self {
        Cyc8 { c: [c0, c1, c2, c3] }
    }

    pub fn from_q(x: Q) -> Self {
        Cyc8::new(x, q(0), q(0), q(0))
    }

    pub fn from_int(n: i64) -> Self {
        Cyc8::from_q(q(n))
    }

    pub fn coords(&self) -> &[Q; 4] {
        &self.c
    }

    pub fn zero() -> Self {
        Cyc8::from_int(0)
    }

    pub fn one() -> Self {
        Cyc8::from_int(1)
    }

    /// The primitive eighth root of unity `exp(pi i / 4)`.
    pub fn zeta8() -> Self {
        Cyc8::new(q(0), q(1), q(0), q(0))
    }

    pub fn i() -> Self {
        Cyc8::new(q(0), q(0), q(1), q(0))
    }

    pub fn sqrt2() -> Self {
        Cyc8::new(q(0), q(1), q(0), q(-1))
    }

    pub fn inv_sqrt2() -> Self {
        Cyc8::sqrt2().scale(&super::rational::qf(1, 2))
    }

    /// `zeta8^k` for any integer `k`.
    pub fn zeta8_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [q(0), q(0), q(0), q(0)];
        if k < 4 {
            c[k] = q(1);
        } else {
            c[k - 4] = q(-1);
        }
        Cyc8 { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.c[0].clone())
    }

    pub fn scale(&self, k: &Q) -> Self {
        Cyc8 { c: self.c.clone().map(|x| x * k) }
    }

    /// Galois action `z -> z^k` for odd `k`.
    pub fn galois(&self, k: i64) -> Self {
        let mut out = Cyc8::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                out = &out + &Cyc8::zeta8_pow(j as i64 * k).scale(cj);
            }
        }
        out
    }

    /// Complex conjugation, `z -> z^7`.
    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = &self.c;
        Cyc8::new(c0.clone(), -c3.clone(), -c2.clone(), -c1.clone())
    }

    /// Absolute norm to Q.
    pub fn norm(&self) -> Q {
        let p = &(&(self * &self.galois(3)) * &self.galois(5)) * &self.galois(7);
        debug_assert!(p.is_rational());
        p.c[0].clone()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let others = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        let n = (self * &others).c[0].clone();
        Some(others.scale(&num_traits::Inv::inv(n)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyc8::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|x| x.pow(e.unsigned_abs() as u32))
        }
    }

    /// `|x|^2 = x * conj(x)`, which lies in Q(sqrt 2).
    pub fn abs2(&self) -> Self {
        self * &self.conj()
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (k, ck) in self.c.iter().enumerate() {
            let angle = std::f64::consts::FRAC_PI_4 * k as f64;
            z += Complex64::from_polar(ck.to_f64().unwrap_or(f64::NAN), angle);
        }
        z
    }

    /// Square root of a rational `r` inside Q(zeta_8), when one exists.
    pub fn sqrt_of_rational(r: &Q) -> Option<Self> {
        if r.is_zero() {
            return Some(Cyc8::zero());
        }
        let a = r.abs();
        let (unit, rest) = if rational_sqrt(&a).is_some() {
            (Cyc8::one(), a.clone())
        } else {
            (Cyc8::sqrt2(), &a / q(2))
        };
        let root = rational_sqrt(&rest)?;
        let base = unit.scale(&root);
        Some(if r.is_negative() { &base * &Cyc8::i() } else { base })
    }

    pub fn to_strings(&self) -> [String; 4] {
        self.c.clone().map(|x| format_q(&x))
    }

    pub fn from_strings(s: &[String]) -> crate::error::Result<Self> {
        if s.len() != 4 {
            return Err(crate::error::Error::Parse("expected 4 coordinates".into()));
        }
        Ok(Cyc8::new(parse_q(&s[0])?, parse_q(&s[1])?, parse_q(&s[2])?, parse_q(&s[3])?))
    }
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Q::new(n, d))
}

impl<'a> Add<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn add(self, o: &Cyc8) -> Cyc8 {
        Cyc8 { c: std::array::from_fn(|k| &self.c[k] + &o.c[k]) }
    }
}

impl<'a> Sub<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn sub(self, o: &Cyc8) -> Cyc8 {
        Cyc8 { c: std::array::from_fn(|k| &self.c[k] - &o.c[k]) }
    }
}

impl<'a> Mul<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn mul(self, o: &Cyc8) -> Cyc8 {
        let mut c = [q(0), q(0), q(0), q(0)];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                if i + j < 4 {
                    c[i + j] += p;
                } else {
                    c[i + j - 4] -= p;
                }
            }
        }
        Cyc8 { c }
    }
}

impl Neg for &Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        Cyc8 { c: self.c.clone().map(|x| -x) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyc8> for Cyc8 {
            type Output = Cyc8;
            fn $m(self, o: Cyc8) -> Cyc8 {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        -&self
    }
}

impl super::field::Field for Cyc8 {
    fn zero() -> Self {
        Cyc8::zero()
    }
    fn one() -> Self {
        Cyc8::one()
    }
    fn is_zero(&self) -> bool {
        Cyc8::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        self.inv()
    }
    fn from_q(x: &Q) -> Self {
        Cyc8::from_q(x.clone())
    }
}

impl fmt::Debug for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let sign = if ck.is_negative() { "-" } else if first { "" } else { "+" };
            let a = ck.abs();
            let coef = if k > 0 && a == q(1) { String::new() } else { format_q(&a) };
            let sep = if k > 0 && !coef.is_empty() { "*" } else { "" };
            write!(f, "{}{}{}{}{}", if first { "" } else { " " }, sign, coef, sep, names[k])?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyc8 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyc8 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        Cyc8::from_strings(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::qf;

    #[test]
    fn basic_identities() {
        let s = Cyc8::sqrt2();
        assert_eq!(&s * &s, Cyc8::from_int(2));
        assert_eq!(&Cyc8::i() * &Cyc8::i(), Cyc8::from_int(-1));
        assert_eq!(Cyc8::zeta8().pow(8), Cyc8::one());
        assert_eq!(&Cyc8::zeta8() * &Cyc8::zeta8().conj(), Cyc8::one());
        assert_eq!(Cyc8::inv_sqrt2(), s.inv().unwrap());
    }

    #[test]
    fn inverse_and_norm() {
        let a = Cyc8::new(q(1), q(2), qf(-1, 3), q(5));
        assert_eq!(&a * &a.inv().unwrap(), Cyc8::one());
        assert!(Cyc8::zero().inv().is_none());
        assert_eq!(Cyc8::sqrt2().norm(), q(4));
    }

    #[test]
    fn complex_embedding() {
        let z = Cyc8::zeta8().to_complex();
        assert!((z - Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)).norm() < 1e-15);
        assert!((Cyc8::sqrt2().to_complex().re - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn square_roots() {
        for r in [q(2), qf(1, 2), q(-1), q(9), qf(-8, 9)] {
            let s = Cyc8::sqrt_of_rational(&r).unwrap();
            assert_eq!(&s * &s, Cyc8::from_q(r));
        }
        assert!(Cyc8::sqrt_of_rational(&q(3)).is_none());
    }

    #[test]
    fn json_round_trip() {
        let a = Cyc8::new(qf(1, 2), q(0), q(-3), qf(7, 5));
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"["1/2","0","-3","7/5"]"#);
        assert_eq!(serde_json::from_str::<Cyc8>(&js).unwrap(), a);
    }
}
