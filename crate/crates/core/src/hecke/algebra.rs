//! Named elements, the structure relations, inverses and one-dimensional characters.

use serde::{Deserialize, Serialize};

use super::elt::{word_of, BasisLabel, HeckeElt, Letter};
use crate::error::{Error, Result};
use crate::scalars::rational::{q, qf};
use crate::scalars::Cyc8;

pub fn u0() -> HeckeElt {
    HeckeElt::u(0)
}

pub fn u1() -> HeckeElt {
    HeckeElt::u(1)
}

/// `T_w = U0 / sqrt 2`, satisfying `(T_w + 1)(T_w - 2) = 0`.
pub fn t_w() -> HeckeElt {
    u0().scale(&Cyc8::inv_sqrt2())
}

/// The central element `Z = (T(1) + T(-1) - sqrt2 U1) / 2`.
pub fn center() -> HeckeElt {
    HeckeElt::t(1).add(&HeckeElt::t(-1)).sub(&u1().scale(&Cyc8::sqrt2())).scale(&Cyc8::from_q(qf(1, 2)))
}

/// Idempotents of the finite subalgebra spanned by `1, T_w`, for eigenvalues 2 and -1.
pub fn idempotents() -> (HeckeElt, HeckeElt) {
    let third = Cyc8::from_q(qf(1, 3));
    let f2 = t_w().add(&HeckeElt::one()).scale(&third);
    let fm1 = HeckeElt::scalar(Cyc8::from_int(2)).sub(&t_w()).scale(&third);
    (f2, fm1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

fn check(out: &mut Vec<RelationCheck>, name: String, passed: bool) {
    out.push(RelationCheck { name, passed });
}

/// Checks the defining relations and the basis multiplication rules for `|m|, |n| <= range`.
pub fn verify_relations(range: i64) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    let s2 = Cyc8::sqrt2();
    let tw = t_w();
    let one = HeckeElt::one();
    check(&mut out, "U1^2 = 1".into(), u1().mul(&u1()) == one);
    check(&mut out, "U0^2 = sqrt2 U0 + 4".into(), u0().mul(&u0()) == u0().scale(&s2).add(&HeckeElt::scalar(Cyc8::from_int(4))));
    check(
        &mut out,
        "(T_w + 1)(T_w - 2) = 0".into(),
        tw.add(&one).mul(&tw.sub(&HeckeElt::scalar(Cyc8::from_int(2)))).is_zero(),
    );
    let two_z = u0().mul(&u1()).add(&u1().mul(&u0())).sub(&u1().scale(&s2));
    check(&mut out, "2Z = U0 U1 + U1 U0 - sqrt2 U1".into(), center().scale(&Cyc8::from_int(2)) == two_z);
    for m in -range..=range {
        for n in -range..=range {
            if m.signum() * n.signum() >= 0 {
                check(&mut out, format!("T({m}) T({n}) = T({})", m + n), HeckeElt::t(m).mul(&HeckeElt::t(n)) == HeckeElt::t(m + n));
            }
        }
        check(&mut out, format!("U1 T({m}) = U({})", m + 1), u1().mul(&HeckeElt::t(m)) == HeckeElt::u(m + 1));
        check(&mut out, format!("T({m}) U1 = U({})", 1 - m), HeckeElt::t(m).mul(&u1()) == HeckeElt::u(1 - m));
        check(&mut out, format!("U1 U({m}) = T({})", m - 1), u1().mul(&HeckeElt::u(m)) == HeckeElt::t(m - 1));
        check(&mut out, format!("U({m}) U1 = T({})", 1 - m), HeckeElt::u(m).mul(&u1()) == HeckeElt::t(1 - m));
        check(&mut out, format!("U1 T({m}) U1 = T({})", -m), u1().mul(&HeckeElt::t(m)).mul(&u1()) == HeckeElt::t(-m));
    }
    out
}

fn letter_inverse(l: Letter) -> HeckeElt {
    match l {
        Letter::U1 => u1(),
        Letter::U0 => u0().sub(&HeckeElt::scalar(Cyc8::sqrt2())).scale(&Cyc8::from_q(qf(1, 4))),
    }
}

/// Inverse of basis elements (up to scalars) and of elements of `span{1, T_w}` or `span{1, U1}`.
pub fn invert(e: &HeckeElt) -> Result<HeckeElt> {
    let support = e.support();
    if support.len() == 1 {
        let l = support[0];
        let c = e.coeff(l).inv().ok_or(Error::NotInvertible)?;
        let inv = word_of(l).into_iter().rev().fold(HeckeElt::one(), |acc, x| acc.mul(&letter_inverse(x)));
        return Ok(inv.scale(&c));
    }
    let a = e.coeff(BasisLabel::T(0));
    if support.iter().all(|l| matches!(l, BasisLabel::T(0) | BasisLabel::U(0))) {
        // e = a + b T_w with T_w = U0 / sqrt2; split along the idempotents.
        let b = &e.coeff(BasisLabel::U(0)) * &Cyc8::sqrt2();
        let at2 = &a + &b.scale(&q(2));
        let atm1 = &a - &b;
        let (f2, fm1) = idempotents();
        let i2 = at2.inv().ok_or(Error::NotInvertible)?;
        let im1 = atm1.inv().ok_or(Error::NotInvertible)?;
        return Ok(f2.scale(&i2).add(&fm1.scale(&im1)));
    }
    if support.iter().all(|l| matches!(l, BasisLabel::T(0) | BasisLabel::U(1))) {
        // (a + b U1)(a - b U1) = a^2 - b^2.
        let b = e.coeff(BasisLabel::U(1));
        let det = &(&a * &a) - &(&b * &b);
        let di = det.inv().ok_or(Error::NotInvertible)?;
        return Ok(HeckeElt::scalar(a).sub(&HeckeElt::term(BasisLabel::U(1), b)).scale(&di));
    }
    Err(Error::NotInvertible)
}

/// A one-dimensional character, given by its values on `T_w` and `U1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub t_w: i8,
    pub u1: i8,
}

impl Character {
    /// The Steinberg-type character `St(eps)`: `T_w = -1`, `U1 = -eps`.
    pub fn steinberg(eps: i8) -> Self {
        Character { t_w: -1, u1: -eps }
    }

    pub fn eval(&self, e: &HeckeElt) -> Cyc8 {
        let v0 = Cyc8::sqrt2().scale(&q(self.t_w as i64));
        let v1 = Cyc8::from_int(self.u1 as i64);
        let mut acc = Cyc8::zero();
        for (l, c) in e.terms() {
            let v = word_of(*l).into_iter().fold(Cyc8::one(), |p, x| match x {
                Letter::U0 => &p * &v0,
                Letter::U1 => &p * &v1,
            });
            acc = &acc + &(c * &v);
        }
        acc
    }
}

/// The four characters `T_w ∈ {2, -1}`, `U1 ∈ {1, -1}`.
pub fn one_dim_characters() -> Vec<Character> {
    let mut out = Vec::new();
    for t_w in [2, -1] {
        for u1 in [1, -1] {
            out.push(Character { t_w, u1 });
        }
    }
    out
}

fn parse_atom(s: &str) -> Result<HeckeElt> {
    let bad = || Error::Parse(format!("unknown Hecke term {s:?}"));
    let index = |body: &str| body.strip_suffix(')').and_then(|b| b.trim().parse::<i64>().ok()).ok_or_else(bad);
    match s {
        "1" => Ok(HeckeElt::one()),
        "Tw" | "T_w" => Ok(t_w()),
        "Z" => Ok(center()),
        _ if s.starts_with("T(") => Ok(HeckeElt::t(index(&s[2..])?)),
        _ if s.starts_with("U(") => Ok(HeckeElt::u(index(&s[2..])?)),
        _ => Err(bad()),
    }
}

fn parse_coefficient(f: &str) -> Result<Cyc8> {
    if f == "sqrt2" {
        Ok(Cyc8::sqrt2())
    } else {
        Ok(Cyc8::from_q(crate::scalars::parse_q(f)?))
    }
}

/// Parses sums of terms `c*X`, where `X` is `T(n)`, `U(n)`, `Tw`, `Z` or `1` and the optional
/// coefficient `c` is a product of rationals `p/q` and `sqrt2`, e.g. `3/2*sqrt2*T(1) - U(0) + Z`.
/// A term without `X` is a multiple of the identity.
pub fn parse_element(s: &str) -> Result<HeckeElt> {
    let mut terms = Vec::new();
    let (mut depth, mut start, mut neg) = (0, 0, false);
    let bytes: Vec<char> = s.chars().collect();
    for (i, ch) in bytes.iter().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let t: String = bytes[start..i].iter().collect();
                if !t.trim().is_empty() {
                    terms.push((neg, t));
                } else if *ch == '-' && neg {
                    return Err(Error::Parse(format!("malformed Hecke element {s:?}")));
                }
                neg = *ch == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    terms.push((neg, bytes[start..].iter().collect()));
    let mut acc = HeckeElt::zero();
    for (neg, t) in terms {
        let factors: Vec<&str> = t.split('*').map(str::trim).collect();
        let (atom, coefs) = factors.split_last().filter(|(a, _)| !a.is_empty()).ok_or_else(|| Error::Parse(format!("empty term in {s:?}")))?;
        let mut c = Cyc8::from_int(if neg { -1 } else { 1 });
        for f in coefs {
            c = &c * &parse_coefficient(f)?;
        }
        let x = match parse_atom(atom) {
            Ok(x) => x,
            Err(e) => HeckeElt::scalar(parse_coefficient(atom).map_err(|_| e)?),
        };
        acc = acc.add(&x.scale(&c));
    }
    Ok(acc)
}
