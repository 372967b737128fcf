//! The two-fold cover of SL2 over Q_v as pairs `(matrix, sign)`.
//!
//! Multiplication at the place 2 is `(g1, e1)(g2, e2) = (g1 g2, e1 e2 sigma_2(g1, g2))`
//! where `sigma_v` is the normalized cocycle below. The pair `(g, 1)` is the
//! distinguished lift of `g`; the named elements `x, y, w, h` are such lifts.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::mat2::Mat2;
use crate::error::{Error, Result};
use crate::scalars::hilbert::{hilbert, relevant_places, Place};
use crate::scalars::rational::{valuation, Q};

/// `c` if `c != 0`, otherwise `d`.
pub fn x_invariant(g: &Mat2) -> Q {
    if g.c.is_zero() {
        g.d.clone()
    } else {
        g.c.clone()
    }
}

/// Local correction `s_v(g)`: `(c, d)_v` when `v` is finite, `cd != 0` and `ord_v(c)` is odd.
pub fn s_factor(g: &Mat2, place: &Place) -> Result<i32> {
    let Place::Finite(p) = place else { return Ok(1) };
    if g.c.is_zero() || g.d.is_zero() {
        return Ok(1);
    }
    let p64 = u64::try_from(p).map_err(|_| Error::InvalidPlace(p.clone()))?;
    if valuation(&g.c, p64)? % 2 == 0 {
        return Ok(1);
    }
    hilbert(&g.c, &g.d, place)
}

/// The cocycle `sigma_v(g1, g2)` in `{+1, -1}`.
pub fn cocycle(g1: &Mat2, g2: &Mat2, place: &Place) -> Result<i32> {
    let g12 = g1.mul(g2);
    let x1 = x_invariant(g1);
    let x2 = x_invariant(g2);
    let x12 = x_invariant(&g12);
    let h = hilbert(&(&x12 * &x1), &(&x12 * &x2), place)?;
    Ok(h * s_factor(g1, place)? * s_factor(g2, place)? * s_factor(&g12, place)?)
}

pub fn cocycle2(g1: &Mat2, g2: &Mat2) -> i32 {
    cocycle(g1, g2, &Place::two()).expect("matrices in SL2(Q)")
}

/// Product over all places of `s_v(g)`; only finitely many factors differ from 1.
pub fn s_adelic(g: &Mat2) -> Result<i32> {
    let mut out = 1;
    for place in relevant_places([&g.c, &g.d]) {
        out *= s_factor(g, &place)?;
    }
    Ok(out)
}

/// Product over all places of `sigma_v(g1, g2)`.
pub fn cocycle_product(g1: &Mat2, g2: &Mat2) -> Result<i32> {
    let g12 = g1.mul(g2);
    let xs = [x_invariant(g1), x_invariant(g2), x_invariant(&g12), g1.d.clone(), g2.d.clone(), g12.d.clone()];
    let mut out = 1;
    for place in relevant_places(xs.iter()) {
        out *= cocycle(g1, g2, &place)?;
    }
    Ok(out)
}

/// Checks that the cover splits over SL2(Q): the product of all local cocycles is the
/// coboundary of the global correction `s_A`.
pub fn rational_splitting_check(g1: &Mat2, g2: &Mat2) -> Result<bool> {
    let lhs = cocycle_product(g1, g2)?;
    let rhs = s_adelic(g1)? * s_adelic(g2)? * s_adelic(&g1.mul(g2))?;
    Ok(lhs == rhs)
}

/// Element of the 2-adic metaplectic group.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetaplecticElt {
    pub mat: Mat2,
    pub sign: i8,
}

impl MetaplecticElt {
    pub fn new(mat: Mat2, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        MetaplecticElt { mat, sign }
    }

    pub fn lift(mat: Mat2) -> Self {
        MetaplecticElt { mat, sign: 1 }
    }

    pub fn identity() -> Self {
        MetaplecticElt::lift(Mat2::identity())
    }

    /// The nontrivial central element `(1, -1)`.
    pub fn minus_one() -> Self {
        MetaplecticElt::new(Mat2::identity(), -1)
    }

    pub fn x(u: Q) -> Self {
        MetaplecticElt::lift(Mat2::upper(u))
    }

    pub fn y(u: Q) -> Self {
        MetaplecticElt::lift(Mat2::lower(u))
    }

    pub fn w(t: Q) -> Self {
        MetaplecticElt::lift(Mat2::weyl(t))
    }

    pub fn h(t: Q) -> Self {
        MetaplecticElt::lift(Mat2::torus(t))
    }

    pub fn mul(&self, o: &MetaplecticElt) -> MetaplecticElt {
        let s = self.sign * o.sign * cocycle2(&self.mat, &o.mat) as i8;
        MetaplecticElt::new(self.mat.mul(&o.mat), s)
    }

    pub fn inv(&self) -> MetaplecticElt {
        let mi = self.mat.inv();
        let s = self.sign * cocycle2(&self.mat, &mi) as i8;
        MetaplecticElt::new(mi, s)
    }

    /// Multiplies by the central element `(1, e)`.
    pub fn with_central(&self, e: i8) -> MetaplecticElt {
        MetaplecticElt::new(self.mat.clone(), self.sign * e)
    }

    pub fn product<'a>(elts: impl IntoIterator<Item = &'a MetaplecticElt>) -> MetaplecticElt {
        elts.into_iter().fold(MetaplecticElt::identity(), |acc, g| acc.mul(g))
    }

    pub fn commutator(&self, o: &MetaplecticElt) -> MetaplecticElt {
        MetaplecticElt::product([self, o, &self.inv(), &o.inv()])
    }
}

impl fmt::Debug for MetaplecticElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.mat, self.sign)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subgroup {
    K,
    K0,
    K1,
    K4,
}

/// Membership in `K ⊃ K0 ⊃ K1 ⊃ K(4)`.
pub fn subgroup_member(g: &MetaplecticElt, which: Subgroup) -> bool {
    let m = &g.mat;
    if !m.is_2_integral() {
        return false;
    }
    let k0 = Mat2::divisible(&m.c, 2);
    match which {
        Subgroup::K => true,
        Subgroup::K0 => k0,
        Subgroup::K1 => k0 && g.sign == 1 && Mat2::divisible(&(&m.a - Q::one()), 2),
        Subgroup::K4 => g.sign == 1 && m.congruent_identity_mod4(),
    }
}

/// For `g` whose matrix is congruent to 1 modulo 4, the sign `e` with `g ∈ (1, e) K(4)`.
pub fn mu2_part_mod_k4(g: &MetaplecticElt) -> Result<i8> {
    if !g.mat.congruent_identity_mod4() {
        return Err(Error::NotInK4);
    }
    Ok(g.sign)
}
