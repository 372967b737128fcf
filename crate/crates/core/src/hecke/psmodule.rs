//! The two-dimensional modules attached to unramified principal series.
//!
//! With `z = x + 1/x`, `T_w = diag(2, -1)` and
//! `U1 = [[sqrt2 z / 3, 1], [1 - 2 z^2 / 9, -sqrt2 z / 3]]`, the center acts by `z`.

use serde::{Deserialize, Serialize};

use super::elt::{word_of, HeckeElt, Letter};
use crate::linalg::Matrix;
use crate::scalars::field::Field;
use crate::scalars::rational::{q, qf};
use crate::scalars::{Cyc8, RatFunc};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PSModule {
    pub x: RatFunc,
    pub z: RatFunc,
    pub t_w: Matrix<RatFunc>,
    pub u0: Matrix<RatFunc>,
    pub u1: Matrix<RatFunc>,
    pub center: Matrix<RatFunc>,
}

fn c(v: Cyc8) -> RatFunc {
    RatFunc::constant(v)
}

/// The module's value of `z = x + 1/x`.
pub fn shimura_parameter(x: &RatFunc) -> RatFunc {
    x.add(&x.inv().expect("x must be nonzero"))
}

impl PSModule {
    pub fn new(x: RatFunc) -> Self {
        let z = shimura_parameter(&x);
        let s2 = c(Cyc8::sqrt2());
        let p = z.mul(&s2).scale(&Cyc8::from_q(qf(1, 3)));
        let r = RatFunc::one().sub(&z.mul(&z).scale(&Cyc8::from_q(qf(2, 9))));
        let t_w = Matrix::from_rows(vec![vec![c(Cyc8::from_int(2)), RatFunc::zero()], vec![RatFunc::zero(), c(Cyc8::from_int(-1))]]);
        let u1 = Matrix::from_rows(vec![vec![p.clone(), RatFunc::one()], vec![r, p.negate()]]);
        let u0 = t_w.scale(&s2);
        let center = Matrix::scalar(2, &z);
        PSModule { x, z, t_w, u0, u1, center }
    }

    pub fn numeric(x: Cyc8) -> Self {
        PSModule::new(c(x))
    }

    pub fn symbolic() -> Self {
        PSModule::new(RatFunc::x())
    }

    /// Matrix of an arbitrary Hecke element.
    pub fn action(&self, e: &HeckeElt) -> Matrix<RatFunc> {
        let mut acc = Matrix::zeros(2, 2);
        for (l, coef) in e.terms() {
            let m = word_of(*l).into_iter().fold(Matrix::identity(2), |m, x| match x {
                Letter::U0 => m.mul(&self.u0),
                Letter::U1 => m.mul(&self.u1),
            });
            acc = acc.add(&m.scale(&c(coef.clone())));
        }
        acc
    }

    /// Checks the defining relations and that the center acts by `z`.
    pub fn relations_hold(&self) -> bool {
        let id = Matrix::<RatFunc>::identity(2);
        let s2 = c(Cyc8::sqrt2());
        let quad0 = self.u0.mul(&self.u0) == self.u0.scale(&s2).add(&Matrix::scalar(2, &c(Cyc8::from_int(4))));
        let quad1 = self.u1.mul(&self.u1) == id;
        let z = self.action(&super::algebra::center());
        quad0 && quad1 && z == self.center
    }

    /// A line stable under the whole algebra, if any. Such a line must be a `T_w`-eigenline.
    pub fn invariant_line(&self) -> Option<(usize, RatFunc)> {
        if self.u1.get(1, 0).is_zero() {
            return Some((0, self.u1.get(0, 0).clone()));
        }
        if self.u1.get(0, 1).is_zero() {
            return Some((1, self.u1.get(1, 1).clone()));
        }
        None
    }

    pub fn is_reducible(&self) -> bool {
        self.invariant_line().is_some()
    }

    /// Transposed matrices: the same algebra acting on the dual basis, where the
    /// stable line at a reducible point becomes the `T_w = -1` eigenline.
    pub fn dual(&self) -> PSModule {
        PSModule {
            x: self.x.clone(),
            z: self.z.clone(),
            t_w: self.t_w.transpose(),
            u0: self.u0.transpose(),
            u1: self.u1.transpose(),
            center: self.center.clone(),
        }
    }
}

/// The two values `z = eps (sqrt2 + 1/sqrt2)` at which the module is reducible.
pub fn reducibility_points() -> [Cyc8; 2] {
    let z = Cyc8::sqrt2().scale(&qf(3, 2));
    [z.clone(), z.scale(&q(-1))]
}
