//! Eigenvalues of the intertwining operator `M(s)` on the two `K0`-eigenvectors `phi_2`, `phi_-1`
//! of the unramified principal series, as rational functions of `X = 2^-s`.
//!
//! Two computations are provided. The closed forms
//! `c_2 = (zeta/sqrt2) (1 - X^2/2) / (1 - X^2)` and
//! `c_-1 = -(zeta/(2 sqrt2)) (1 - 2X^2) / (1 - X^2)`, and a shell-by-shell evaluation of
//! `M(s) phi_j (1) = int phi_j(w(1) x(u)) du` that decomposes `w(1) x(u)` exactly in the cover.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metaplectic::coset::{classify_double_coset, CosetLabel};
use crate::metaplectic::group::{subgroup_member, Subgroup};
use crate::metaplectic::{GammaChar, MetaplecticElt};
use crate::par::Exec;
use crate::scalars::hilbert2;
use crate::scalars::rational::{pow2, q, qf};
use crate::scalars::{Cyc8, Poly, RatFunc};

/// The two `T_w`-eigenvalues labelling `phi_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Eigen {
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "-1")]
    MinusOne,
}

impl Eigen {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "2" => Ok(Eigen::Two),
            "-1" => Ok(Eigen::MinusOne),
            other => Err(Error::Parse(format!("eigenvalue must be 2 or -1, got {other:?}"))),
        }
    }

    /// Normalization `d_j` of `phi_j` on `K0`.
    pub fn d(self) -> i64 {
        match self {
            Eigen::Two => 1,
            Eigen::MinusOne => -2,
        }
    }
}

const UNITS_MOD_8: [i64; 4] = [1, 3, 5, 7];

/// `sum over v in (Z/8)^x of (2, v)^m (-1, v) gamma(v)`, evaluated term by term.
pub fn character_sum(m: u32, gamma: GammaChar) -> Result<Cyc8> {
    let mut acc = Cyc8::zero();
    for v in UNITS_MOD_8 {
        let v = q(v);
        let sign = hilbert2(&q(2), &v).pow(m) * hilbert2(&q(-1), &v);
        acc = &acc + &gamma.torus(&v)?.scale(&q(sign as i64));
    }
    Ok(acc)
}

/// `phi_j` on `K`: `d_j gamma(k)` on `K0`, `2^-1/2 zeta gamma(k0 k0')` on `K0 w(1) K0`, zero elsewhere.
pub fn phi_on_k(j: Eigen, g: &MetaplecticElt, gamma: GammaChar) -> Result<Cyc8> {
    if !subgroup_member(g, Subgroup::K) {
        return Err(Error::NotInK0);
    }
    if subgroup_member(g, Subgroup::K0) {
        return Ok(gamma.on_k0(g)?.scale(&q(j.d())));
    }
    let d = classify_double_coset(g)?;
    if d.label != CosetLabel::W(0) {
        return Ok(Cyc8::zero());
    }
    let k = &gamma.on_k0(&d.left)? * &gamma.on_k0(&d.right)?;
    Ok(&(&k * &gamma.zeta()) * &Cyc8::inv_sqrt2())
}

/// `int over Z2 of phi_j(w(1) x(u)) du`, evaluated at `u mod 8` after checking
/// that the integrand only depends on that residue.
pub fn inner_integral(j: Eigen, gamma: GammaChar) -> Result<Cyc8> {
    let w1 = MetaplecticElt::w(q(1));
    let mut vals = Vec::new();
    for u in 0..8 {
        vals.push(phi_on_k(j, &w1.mul(&MetaplecticElt::x(q(u))), gamma)?);
    }
    if vals.iter().any(|v| *v != vals[0]) {
        return Err(Error::ReexpressionFailed);
    }
    Ok(vals[0].clone())
}

/// `sum over v in (Z/8)^x` of the integrand on the shell `u^-1 = 2^m v`, with the
/// sign of `w(1) x(u) = e x(-1/u) h(-1/u) y(1/u)` computed in the cover.
pub fn shell_sum(j: Eigen, m: u32, gamma: GammaChar) -> Result<Cyc8> {
    let w1 = MetaplecticElt::w(q(1));
    let mut acc = Cyc8::zero();
    for v in UNITS_MOD_8 {
        let t = &pow2(m as i64) * &q(v);
        let u = num_traits::Inv::inv(t.clone());
        let lhs = w1.mul(&MetaplecticElt::x(u));
        let nt = -t.clone();
        let rhs = MetaplecticElt::product([&MetaplecticElt::x(nt.clone()), &MetaplecticElt::h(nt.clone()), &MetaplecticElt::y(t.clone())]);
        debug_assert_eq!(lhs.mat, rhs.mat);
        let e = (lhs.sign * rhs.sign) as i64;
        let val = &gamma.torus(&nt)? * &phi_on_k(j, &MetaplecticElt::y(t), gamma)?;
        acc = &acc + &val.scale(&q(e));
    }
    Ok(acc)
}

/// `M(s) phi_j (1)` through the shell `|u| = 2^M`, as a polynomial in `X`.
///
/// The shell `|u| = 2^m` has measure `2^(m-1)` and contributes `|1/u|^(s+1) = 2^-m X^m`, so its
/// coefficient is `shell_sum / 8`.
pub fn m_series_partial(j: Eigen, order: u32, gamma: GammaChar, exec: Exec) -> Result<Poly> {
    let shells = exec.map((1..=order).collect(), |m| shell_sum(j, m, gamma));
    let mut coeffs = vec![inner_integral(j, gamma)?];
    for s in shells {
        coeffs.push(s?.scale(&qf(1, 8)));
    }
    Ok(Poly::new(coeffs))
}

/// The same partial sum with every shell taken from [`character_sum`] times `d_j`.
pub fn m_series_literal(j: Eigen, order: u32, gamma: GammaChar) -> Result<Poly> {
    let mut coeffs = vec![&gamma.zeta() * &Cyc8::inv_sqrt2()];
    for m in 1..=order {
        let c = if m >= 2 { character_sum(m, gamma)?.scale(&qf(j.d(), 8)) } else { Cyc8::zero() };
        coeffs.push(c);
    }
    Ok(Poly::new(coeffs))
}

/// The eigenvalue `c_j(X)` with `M(s) phi_j = c_j phi_j`.
pub fn m_closed_form(j: Eigen, gamma: GammaChar) -> RatFunc {
    let z = gamma.zeta();
    let (lead, a2) = match j {
        Eigen::Two => (&z * &Cyc8::inv_sqrt2(), qf(-1, 2)),
        Eigen::MinusOne => ((&z * &Cyc8::inv_sqrt2()).scale(&qf(-1, 2)), q(-2)),
    };
    let num = Poly::new(vec![Cyc8::one(), Cyc8::zero(), Cyc8::from_q(a2)]).scale(&lead);
    let den = Poly::new(vec![Cyc8::one(), Cyc8::zero(), Cyc8::from_int(-1)]);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// Zeros of `c_j` with `|X| < 1`.
pub fn kernel_points(j: Eigen, gamma: GammaChar) -> Vec<Cyc8> {
    let c = m_closed_form(j, gamma);
    // The numerator is `a + b X^2`.
    let (a, b) = (c.num().coeff(0), c.num().coeff(2));
    let x2 = -(&a * &b.inv().expect("quadratic numerator"));
    let Some(r) = x2.as_rational().and_then(|x2| Cyc8::sqrt_of_rational(&x2)) else { return Vec::new() };
    [r.clone(), -r]
        .into_iter()
        .filter(|x| x.to_complex().norm() < 1.0 && c.eval(x).is_some_and(|v| v.is_zero()))
        .collect()
}

/// Outcome of comparing the shell series with the closed forms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntertwinerReport {
    pub gamma: GammaChar,
    pub order: u32,
    pub series_matches_closed_form: [bool; 2],
    pub literal_matches_closed_form: [bool; 2],
    pub shell_even: Cyc8,
    pub character_sum_even: Cyc8,
    pub minus_one_vanishes_at_half: bool,
    pub two_vanishes_at_half: bool,
    pub kernel_minus_one: Vec<Cyc8>,
    pub kernel_two: Vec<Cyc8>,
}

fn taylor_matches(series: &Poly, j: Eigen, order: u32, gamma: GammaChar) -> Result<bool> {
    let taylor = m_closed_form(j, gamma).series(order as usize)?;
    let dj = qf(1, j.d());
    Ok((0..=order as usize).all(|k| series.coeff(k).scale(&dj) == taylor[k]))
}

pub fn verify(order: u32, gamma: GammaChar, exec: Exec) -> Result<IntertwinerReport> {
    if order < 2 {
        return Err(Error::OrderTooSmall(order as usize));
    }
    let mut series = [false; 2];
    let mut literal = [false; 2];
    for (i, j) in [Eigen::Two, Eigen::MinusOne].into_iter().enumerate() {
        series[i] = taylor_matches(&m_series_partial(j, order, gamma, exec)?, j, order, gamma)?;
        literal[i] = taylor_matches(&m_series_literal(j, order, gamma)?, j, order, gamma)?;
    }
    let half = Cyc8::inv_sqrt2();
    let vanishes = |j| m_closed_form(j, gamma).eval(&half).is_some_and(|v| v.is_zero());
    Ok(IntertwinerReport {
        gamma,
        order,
        series_matches_closed_form: series,
        literal_matches_closed_form: literal,
        shell_even: shell_sum(Eigen::Two, 2, gamma)?,
        character_sum_even: character_sum(2, gamma)?,
        minus_one_vanishes_at_half: vanishes(Eigen::MinusOne),
        two_vanishes_at_half: vanishes(Eigen::Two),
        kernel_minus_one: kernel_points(Eigen::MinusOne, gamma),
        kernel_two: kernel_points(Eigen::Two, gamma),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMAS: [GammaChar; 2] = [GammaChar::PlusI, GammaChar::MinusI];

    #[test]
    fn character_sum_values() {
        for g in GAMMAS {
            let direct = &(&Cyc8::one() - &g.minus_one()) * &Cyc8::from_int(2);
            assert_eq!(character_sum(3, g).unwrap(), Cyc8::zero());
            assert_eq!(character_sum(2, g).unwrap(), direct);
            assert_eq!(character_sum(0, g).unwrap(), direct);
            assert_eq!(direct, &g.zeta().conj().scale(&q(2)) * &Cyc8::sqrt2());
            for m in 0..=20 {
                assert_eq!(character_sum(m, g).unwrap(), character_sum(m % 2, g).unwrap());
            }
        }
    }

    #[test]
    fn shells_give_twice_root2_zeta() {
        for g in GAMMAS {
            let expect = &g.zeta().scale(&q(2)) * &Cyc8::sqrt2();
            for m in 2..8 {
                let s = shell_sum(Eigen::Two, m, g).unwrap();
                assert_eq!(s, if m % 2 == 0 { expect.clone() } else { Cyc8::zero() }, "m = {m}");
                assert_eq!(shell_sum(Eigen::MinusOne, m, g).unwrap(), s.scale(&q(-2)));
            }
            assert!(shell_sum(Eigen::Two, 1, g).unwrap().is_zero());
            assert_eq!(inner_integral(Eigen::Two, g).unwrap(), &g.zeta() * &Cyc8::inv_sqrt2());
        }
    }

    #[test]
    fn series_examples() {
        let g = GammaChar::PlusI;
        let z = g.zeta();
        let c0 = &z * &Cyc8::inv_sqrt2();
        let p = m_series_partial(Eigen::Two, 3, g, Exec::Seq).unwrap();
        assert_eq!(p, Poly::new(vec![c0.clone(), Cyc8::zero(), (&z * &Cyc8::sqrt2()).scale(&qf(1, 4))]));
        let p = m_series_partial(Eigen::MinusOne, 2, g, Exec::Seq).unwrap();
        assert_eq!(p, Poly::new(vec![c0.clone(), Cyc8::zero(), (&z * &Cyc8::sqrt2()).scale(&qf(-1, 2))]));
        assert_eq!(m_series_partial(Eigen::Two, 1, g, Exec::Seq).unwrap(), Poly::new(vec![c0]));
    }

    #[test]
    fn closed_forms_match_shells_through_order_40() {
        for g in GAMMAS {
            let r = verify(40, g, Exec::default()).unwrap();
            assert_eq!(r.series_matches_closed_form, [true, true]);
            assert_eq!(r.literal_matches_closed_form, [false, false]);
            assert!(r.minus_one_vanishes_at_half && !r.two_vanishes_at_half);
        }
    }

    #[test]
    fn poles_and_kernel() {
        for g in GAMMAS {
            for j in [Eigen::Two, Eigen::MinusOne] {
                let c = m_closed_form(j, g);
                assert_eq!(c.den(), &Poly::new(vec![Cyc8::from_int(-1), Cyc8::zero(), Cyc8::one()]));
                assert!(c.eval(&Cyc8::one()).is_none());
                assert!(c.eval(&Cyc8::inv_sqrt2()).is_some());
                let sym = c.mul(&c.at_inverse());
                assert_eq!(sym, sym.at_inverse());
            }
            let h = Cyc8::inv_sqrt2();
            assert_eq!(kernel_points(Eigen::MinusOne, g), vec![h.clone(), h.scale(&q(-1))]);
            assert!(kernel_points(Eigen::Two, g).is_empty());
            assert_eq!(m_closed_form(Eigen::Two, g).eval(&Cyc8::zero()).unwrap(), &g.zeta() * &Cyc8::inv_sqrt2());
        }
    }
}
