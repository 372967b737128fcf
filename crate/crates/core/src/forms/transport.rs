//! Cusp forms as a module over the Hecke algebra: `U1` acts by a signed `W4` and `T(1)` by a
//! multiple of `T4`; every other element acts through its word in `U0 = T(1) U1` and `U1`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::operators::{kappa, sign_r};
use super::space::{restrict, Ambient, HalfIntForm, Spaces};
use crate::error::Result;
use crate::hecke::algebra::center;
use crate::hecke::elt::{word_of, HeckeElt, Letter};
use crate::linalg::Matrix;
use crate::report::Check;
use crate::scalars::rational::{pow2, q, Q};
use crate::scalars::Cyc8;

fn lift_q(m: &Matrix<Q>) -> Matrix<Cyc8> {
    m.map(|x| Cyc8::from_q(x.clone()))
}

/// The transported generators on a space of forms, in the coordinates of a chosen basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransportedModule {
    pub r: i64,
    pub u1: Matrix<Cyc8>,
    pub t1: Matrix<Cyc8>,
    pub u0: Matrix<Cyc8>,
}

impl TransportedModule {
    /// From the `W4` and `T4` matrices, which must be expressed in the same basis.
    pub fn from_operators(r: i64, w4: &Matrix<Q>, t4: &Matrix<Q>) -> Self {
        let u1 = lift_q(&w4.scale(&q(sign_r(r))));
        // 2^(3/2 - kappa) = sqrt2 2^(1 - kappa)
        let t1 = lift_q(&t4.scale(&pow2(1 - kappa(r)))).scale(&Cyc8::sqrt2());
        let u0 = t1.mul(&u1);
        TransportedModule { r, u1, t1, u0 }
    }

    /// The module on the cusp forms, in the coordinates of the cusp basis.
    pub fn on_cusp_forms(s: &Spaces) -> Result<Self> {
        Ok(Self::from_operators(s.ambient.r, &restrict(&s.w4, &s.cusp)?, &restrict(&s.t4, &s.cusp)?))
    }

    pub fn dim(&self) -> usize {
        self.u1.rows()
    }

    pub fn t_w(&self) -> Matrix<Cyc8> {
        self.u0.scale(&Cyc8::inv_sqrt2())
    }

    pub fn action(&self, e: &HeckeElt) -> Matrix<Cyc8> {
        let n = self.dim();
        let mut acc = Matrix::zeros(n, n);
        for (l, c) in e.terms() {
            let m = word_of(*l).into_iter().fold(Matrix::identity(n), |m, x| match x {
                Letter::U0 => m.mul(&self.u0),
                Letter::U1 => m.mul(&self.u1),
            });
            acc = acc.add(&m.scale(c));
        }
        acc
    }

    pub fn z(&self) -> Matrix<Cyc8> {
        self.action(&center())
    }

    pub fn checks(&self) -> Vec<Check> {
        let n = self.dim();
        let id = Matrix::<Cyc8>::identity(n);
        let c = |k: i64| Matrix::scalar(n, &Cyc8::from_int(k));
        let tw = self.t_w();
        let z = self.z();
        let comm = |a: &Matrix<Cyc8>, b: &Matrix<Cyc8>| a.mul(b).sub(&b.mul(a)).is_zero();
        let t_minus1 = self.u1.mul(&self.t1).mul(&self.u1);
        let z_direct = self.t1.add(&t_minus1).sub(&self.u1.scale(&Cyc8::sqrt2())).scale(&Cyc8::from_q(crate::scalars::qf(1, 2)));
        let d = format!("dim {n}, r = {}", self.r);
        vec![
            Check::new("q(U1)^2 = 1", self.u1.mul(&self.u1) == id, d.clone()),
            Check::new("q(U0)^2 = sqrt2 q(U0) + 4", self.u0.mul(&self.u0) == self.u0.scale(&Cyc8::sqrt2()).add(&c(4)), d.clone()),
            Check::new("(q(T_w) + 1)(q(T_w) - 2) = 0", tw.add(&id).mul(&tw.sub(&c(2))).is_zero(), d.clone()),
            Check::new("q(T(1)) agrees with its word", self.action(&HeckeElt::t(1)) == self.t1, d.clone()),
            Check::new("q(T(-1)) = q(U1) q(T(1)) q(U1)", self.action(&HeckeElt::t(-1)) == t_minus1, d.clone()),
            Check::new("q(Z) = (q(T1) + q(T-1) - sqrt2 q(U1)) / 2", z == z_direct, d.clone()),
            Check::new("[q(Z), q(U1)] = 0", comm(&z, &self.u1), d.clone()),
            Check::new("[q(Z), q(T1)] = 0", comm(&z, &self.t1), d),
        ]
    }
}

/// Which transported generator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    U1,
    T1,
    Tw,
}

/// `q(which) f = scale * g`, returned as `(scale, g)`: `scale` is `sqrt2` for `T1` and 1 otherwise,
/// so that `g` keeps rational coordinates.
pub fn q_transport(f: &HalfIntForm, which: Generator) -> Result<(Cyc8, HalfIntForm)> {
    let amb = Ambient::new(f.r, f.precision())?;
    let w4 = amb.w4_matrix();
    let t4 = amb.t4_matrix()?;
    let s = q(sign_r(f.r));
    let c = pow2(1 - kappa(f.r));
    let (scale, m) = match which {
        Generator::U1 => (Cyc8::one(), w4.scale(&s)),
        Generator::T1 => (Cyc8::sqrt2(), t4.scale(&c)),
        // T_w = T1 U1 / sqrt2
        Generator::Tw => (Cyc8::one(), t4.mul(&w4).scale(&(c * s))),
    };
    Ok((scale, amb.form(m.apply(&f.monomial_coords))))
}

/// `q(T_w) W4 = W4 W`: the transported `T_w` is the `W4`-conjugate of `W`.
pub fn tw_conjugate_to_w(s: &Spaces) -> Result<bool> {
    let m = TransportedModule::from_operators(s.ambient.r, &s.w4, &s.t4);
    let w4 = lift_q(&s.w4);
    let w = lift_q(&s.w);
    let lhs = restrict(&m.t_w().mul(&w4), &cusp_cyc(s))?;
    let rhs = restrict(&w4.mul(&w), &cusp_cyc(s))?;
    Ok(lhs == rhs && !s.cusp.iter().all(|v| v.iter().all(Zero::is_zero)))
}

fn cusp_cyc(s: &Spaces) -> Vec<Vec<Cyc8>> {
    s.cusp.iter().map(|v| v.iter().map(|x| Cyc8::from_q(x.clone())).collect()).collect()
}
