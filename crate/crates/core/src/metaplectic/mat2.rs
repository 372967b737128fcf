use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::rational::{format_q, parse_q, is_2_integral, residue_mod_2k, v2, Q};

/// A 2x2 rational matrix `[[a, b], [c, d]]`, serialized as `["a", "b", "c", "d"]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[String; 4]", try_from = "[String; 4]")]
pub struct Mat2 {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
}

impl Mat2 {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Builds a matrix and checks that it lies in SL2.
    pub fn sl2(a: Q, b: Q, c: Q, d: Q) -> Result<Self> {
        let m = Mat2 { a, b, c, d };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::NotSpecialLinear(format_q(&det)));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Mat2::new(Q::one(), Q::zero(), Q::zero(), Q::one())
    }

    pub fn upper(u: Q) -> Self {
        Mat2::new(Q::one(), u, Q::zero(), Q::one())
    }

    pub fn lower(u: Q) -> Self {
        Mat2::new(Q::one(), Q::zero(), u, Q::one())
    }

    /// `[[0, t], [-1/t, 0]]`.
    pub fn weyl(t: Q) -> Self {
        let ti = num_traits::Inv::inv(t.clone());
        Mat2::new(Q::zero(), t, -ti, Q::zero())
    }

    /// `diag(t, 1/t)`.
    pub fn torus(t: Q) -> Self {
        let ti = num_traits::Inv::inv(t.clone());
        Mat2::new(t, Q::zero(), Q::zero(), ti)
    }

    pub fn det(&self) -> Q {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv(&self) -> Mat2 {
        Mat2::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn entries(&self) -> [&Q; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_2_integral(&self) -> bool {
        self.entries().into_iter().all(is_2_integral)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    /// `v2(x) >= k`, with zero counting as infinitely divisible.
    pub fn divisible(x: &Q, k: i64) -> bool {
        v2(x).is_none_or(|v| v >= k)
    }

    /// Entries reduced into `[0, 2^k)`, for 2-integral matrices.
    pub fn residues(&self, k: u32) -> Option<[u64; 4]> {
        let r = |x: &Q| residue_mod_2k(x, k).ok();
        Some([r(&self.a)?, r(&self.b)?, r(&self.c)?, r(&self.d)?])
    }

    pub fn congruent_identity_mod4(&self) -> bool {
        self.residues(2) == Some([1, 0, 0, 1])
    }
}

impl From<Mat2> for [String; 4] {
    fn from(m: Mat2) -> Self {
        m.entries().map(format_q)
    }
}

impl TryFrom<[String; 4]> for Mat2 {
    type Error = Error;

    fn try_from(v: [String; 4]) -> Result<Self> {
        let [a, b, c, d] = v;
        Ok(Mat2::new(parse_q(&a)?, parse_q(&b)?, parse_q(&c)?, parse_q(&d)?))
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", format_q(&self.a), format_q(&self.b), format_q(&self.c), format_q(&self.d))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
