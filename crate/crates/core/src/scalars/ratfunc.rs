//! Polynomials and rational functions in one variable over Q(zeta_8).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyc8::Cyc8;
use super::rational::Q;
use crate::error::{Error, Result};

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<Cyc8>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Cyc8>) -> Self {
        while coeffs.last().is_some_and(Cyc8::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Cyc8) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![Cyc8::zero(), Cyc8::one()])
    }

    /// `c * X^k`.
    pub fn monomial(c: Cyc8, k: usize) -> Self {
        let mut v = vec![Cyc8::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Cyc8] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Cyc8 {
        self.coeffs.get(k).cloned().unwrap_or_else(Cyc8::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Cyc8 {
        self.coeffs.last().cloned().unwrap_or_else(Cyc8::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Cyc8::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Cyc8) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division, `self = q * d + r`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().inv().unwrap();
        let mut r = self.coeffs.clone();
        let mut qv = vec![Cyc8::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &inv;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            qv[k] = c;
            r.pop();
            while r.last().is_some_and(Cyc8::is_zero) {
                r.pop();
            }
        }
        Ok((Poly::new(qv), Poly::new(r)))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().unwrap())
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).unwrap().1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Cyc8) -> Cyc8 {
        self.coeffs.iter().rev().fold(Cyc8::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `X^deg * p(1/X)`.
    pub fn reversed(&self, deg: usize) -> Poly {
        let mut v = vec![Cyc8::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[deg - k] = c.clone();
        }
        Poly::new(v)
    }

    /// `p(X^2)`.
    pub fn in_square(&self) -> Poly {
        let mut v = vec![Cyc8::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[2 * k] = c.clone();
        }
        Poly::new(v)
    }
}

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::constant(Cyc8::one()) });
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g)?;
        let (d, _) = den.divrem(&g)?;
        let l = d.lead().inv().unwrap();
        Ok(RatFunc { num: n.scale(&l), den: d.scale(&l) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::constant(Cyc8::one()) }
    }

    pub fn constant(c: Cyc8) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den)).unwrap()
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Cyc8) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &Cyc8) -> Option<Cyc8> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(x) * &d.inv().unwrap())
    }

    /// Taylor coefficients at 0 through `X^order`.
    pub fn series(&self, order: usize) -> Result<Vec<Cyc8>> {
        let d0 = self.den.coeff(0);
        let inv0 = d0.inv().ok_or(Error::PoleAtZero)?;
        let mut out: Vec<Cyc8> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for k in 1..=n.min(self.den.degree().unwrap_or(0)) {
                acc = &acc - &(&self.den.coeff(k) * &out[n - k]);
            }
            out.push(&acc * &inv0);
        }
        Ok(out)
    }

    /// `f(1/X)`.
    pub fn at_inverse(&self) -> RatFunc {
        let n = self.num.degree().unwrap_or(0);
        let d = self.den.degree().unwrap_or(0);
        let m = n.max(d);
        RatFunc::new(self.num.reversed(n).mul(&Poly::monomial(Cyc8::one(), m - n)), self.den.reversed(d).mul(&Poly::monomial(Cyc8::one(), m - d)))
            .unwrap()
    }

    /// `f(X^2)`.
    pub fn in_square(&self) -> RatFunc {
        RatFunc::new(self.num.in_square(), self.den.in_square()).unwrap()
    }
}

impl super::field::Field for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Cyc8::zero())
    }
    fn one() -> Self {
        RatFunc::constant(Cyc8::one())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.scale(&Cyc8::from_int(-1))
    }
    fn recip(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_q(x: &Q) -> Self {
        RatFunc::constant(Cyc8::from_q(x.clone()))
    }
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        match k {
            0 => write!(f, "({c})")?,
            1 => write!(f, "({c})*X")?,
            _ => write!(f, "({c})*X^{k}")?,
        }
        first = false;
    }
    Ok(())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        fmt_poly(&self.num, f)?;
        write!(f, "] / [")?;
        fmt_poly(&self.den, f)?;
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{q, qf};
    use crate::scalars::field::Field as _;

    fn c(n: i64) -> Cyc8 {
        Cyc8::from_int(n)
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        // (X^2 - 1) / (2X - 2) = (X + 1) / 2
        let f = RatFunc::new(Poly::new(vec![c(-1), c(0), c(1)]), Poly::new(vec![c(-2), c(2)])).unwrap();
        assert_eq!(f.den(), &Poly::constant(c(1)));
        assert_eq!(f.num(), &Poly::new(vec![Cyc8::from_q(qf(1, 2)), Cyc8::from_q(qf(1, 2))]));
    }

    #[test]
    fn geometric_series() {
        let f = RatFunc::new(Poly::constant(c(1)), Poly::new(vec![c(1), c(-1)])).unwrap();
        let s = f.series(5).unwrap();
        assert!(s.iter().all(|a| *a == c(1)));
        let g = RatFunc::x().inv().unwrap();
        assert_eq!(g.series(3), Err(Error::PoleAtZero));
    }

    #[test]
    fn evaluation_and_inverse_argument() {
        let f = RatFunc::new(Poly::new(vec![c(1), c(0), Cyc8::from_q(qf(-1, 2))]), Poly::new(vec![c(1), c(0), c(-1)])).unwrap();
        assert_eq!(f.eval(&c(1)), None);
        assert_eq!(f.eval(&c(0)), Some(c(1)));
        let g = f.at_inverse();
        assert_eq!(g.eval(&c(2)), f.eval(&Cyc8::from_q(qf(1, 2))));
        assert_eq!(f.mul(&f.inv().unwrap()), RatFunc::one());
        assert_eq!(f.sub(&f), RatFunc::zero());
        let _ = q(0);
    }
}
