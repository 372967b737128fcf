//! The genuine character `gamma` of the torus, extended to `K0` and to the
//! normalizer of the torus.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::group::{subgroup_member, MetaplecticElt, Subgroup};
use super::mat2::Mat2;
use crate::error::{Error, Result};
use crate::scalars::hilbert::hilbert2;
use crate::scalars::rational::{dyadic_decompose, pow2, q, residue_mod_2k, Q};
use crate::scalars::Cyc8;

/// Which of the two genuine characters trivial on `T ∩ K1`: `gamma(-1) = +i` or `-i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaChar {
    #[serde(rename = "i")]
    PlusI,
    #[serde(rename = "-i")]
    MinusI,
}

impl Default for GammaChar {
    fn default() -> Self {
        GammaChar::PlusI
    }
}

impl GammaChar {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "i" | "+i" => Ok(GammaChar::PlusI),
            "-i" => Ok(GammaChar::MinusI),
            other => Err(Error::Parse(format!("gamma must be i or -i, got {other:?}"))),
        }
    }

    /// `gamma(-1) = -i^r`, the character attached to weight `r/2`.
    pub fn for_weight(r: i64) -> Self {
        match r.rem_euclid(4) {
            1 => GammaChar::MinusI,
            3 => GammaChar::PlusI,
            _ => panic!("weight parameter must be odd"),
        }
    }

    pub fn minus_one(self) -> Cyc8 {
        match self {
            GammaChar::PlusI => Cyc8::i(),
            GammaChar::MinusI => -Cyc8::i(),
        }
    }

    /// `zeta = (1 + gamma(-1)) / sqrt 2`, the value on `w(1)`.
    pub fn zeta(self) -> Cyc8 {
        &(&Cyc8::one() + &self.minus_one()) * &Cyc8::inv_sqrt2()
    }

    /// `gamma(h(t))` for the distinguished lift of `diag(t, 1/t)`.
    pub fn torus(self, t: &Q) -> Result<Cyc8> {
        let (n, v) = dyadic_decompose(t)?;
        let base = if residue_mod_2k(&v, 2)? == 1 {
            Cyc8::one()
        } else {
            self.minus_one().scale(&q(hilbert2(&q(-1), &-v.clone()) as i64))
        };
        Ok(base.scale(&q(hilbert2(&pow2(n), &v) as i64)))
    }

    /// `gamma` on an element of `K0` or of the normalizer of the torus.
    pub fn eval(self, g: &MetaplecticElt) -> Result<Cyc8> {
        let m = &g.mat;
        let sign = Cyc8::from_int(g.sign as i64);
        if m.b.is_zero() && m.c.is_zero() {
            return Ok(&sign * &self.torus(&m.a)?);
        }
        if m.a.is_zero() && m.d.is_zero() {
            // (w(t), e) = e * s * h(t) w(1), where h(t) w(1) = (w(t), s).
            let p = MetaplecticElt::h(m.b.clone()).mul(&MetaplecticElt::w(Q::one()));
            let e = Cyc8::from_int((g.sign * p.sign) as i64);
            return Ok(&(&e * &self.torus(&m.b)?) * &self.zeta());
        }
        if subgroup_member(g, Subgroup::K0) {
            return self.on_k0(g);
        }
        Err(Error::NotInK0)
    }

    /// `gamma` on `K0 = M x K1`, trivial on `K1`.
    pub fn on_k0(self, g: &MetaplecticElt) -> Result<Cyc8> {
        if !subgroup_member(g, Subgroup::K0) {
            return Err(Error::NotInK0);
        }
        if residue_mod_2k(&g.mat.a, 2)? == 1 {
            return Ok(Cyc8::from_int(g.sign as i64));
        }
        let hm = MetaplecticElt::h(q(-1));
        let k1 = hm.inv().mul(g);
        debug_assert_eq!(residue_mod_2k(&k1.mat.a, 2).unwrap(), 1);
        Ok(self.torus(&q(-1))?.scale(&q(k1.sign as i64)))
    }

    pub fn conj_eval(self, g: &MetaplecticElt) -> Result<Cyc8> {
        self.eval(g).map(|c| c.conj())
    }
}

/// True when `m` is diagonal or antidiagonal.
pub fn in_torus_normalizer(m: &Mat2) -> bool {
    (m.b.is_zero() && m.c.is_zero()) || (m.a.is_zero() && m.d.is_zero())
}

/// `gamma` at the matrix `diag(t, 1/t)` with the distinguished lift, as a convenience.
pub fn gamma_eval(t: &Q, gamma: GammaChar) -> Result<Cyc8> {
    gamma.torus(t)
}

impl GammaChar {
    pub fn is_plus(self) -> bool {
        self == GammaChar::PlusI
    }

    pub fn sign(self) -> i64 {
        if self.is_plus() {
            1
        } else {
            -1
        }
    }
}
