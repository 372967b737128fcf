//! Double cosets `K0 \ G / K0` and their left-coset decompositions.
//!
//! Conjugating by `diag(1, 2)` turns `K0` into the principal congruence subgroup
//! of level 2. Pivoting on the entry of least weighted valuation reduces any
//! matrix modulo the lower Iwahori subgroup to `h(2^n)` or `w(2^k)`; the leftover
//! `y(1)` factors on either side then pick out one of at most four classes.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::group::{subgroup_member, MetaplecticElt, Subgroup};
use super::mat2::Mat2;
use crate::error::{Error, Result};
use crate::scalars::rational::{dyadic_decompose, pow2, q, v2, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n")]
pub enum CosetLabel {
    /// `K0 h(2^n) K0`.
    T(i64),
    /// `K0 w(2^-n) K0`.
    W(i64),
    /// `K0 y(2) K0`.
    Y,
    /// `K0 h(2^n) y(2) K0`, `n >= 1`.
    HY(u32),
    /// `K0 y(2) h(2^-n) K0`, `n >= 1`.
    YH(u32),
    /// `K0 y(2) w(2^-n) K0`, `n >= 1`.
    YW(u32),
    /// `K0 w(2^-n) y(2) K0`, `n >= 1`.
    WY(u32),
    /// `K0 y(2) w(2^-n) y(2) K0`, `n >= 1`.
    YWY(u32),
}

impl CosetLabel {
    /// True for the classes that carry nonzero Hecke functions.
    pub fn is_supported(self) -> bool {
        matches!(self, CosetLabel::T(_) | CosetLabel::W(_))
    }

    pub fn representative(self) -> MetaplecticElt {
        let h = |n: i64| MetaplecticElt::h(pow2(n));
        let w = |n: i64| MetaplecticElt::w(pow2(-n));
        let y = MetaplecticElt::y(q(2));
        match self {
            CosetLabel::T(n) => h(n),
            CosetLabel::W(n) => w(n),
            CosetLabel::Y => y,
            CosetLabel::HY(n) => h(n as i64).mul(&y),
            CosetLabel::YH(n) => y.mul(&h(-(n as i64))),
            CosetLabel::YW(n) => y.mul(&w(n as i64)),
            CosetLabel::WY(n) => w(n as i64).mul(&y),
            CosetLabel::YWY(n) => MetaplecticElt::product([&y, &w(n as i64), &y]),
        }
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetLabel::T(n) => write!(f, "T({n})"),
            CosetLabel::W(n) => write!(f, "W({n})"),
            CosetLabel::Y => write!(f, "Y"),
            CosetLabel::HY(n) => write!(f, "HY({n})"),
            CosetLabel::YH(n) => write!(f, "YH({n})"),
            CosetLabel::YW(n) => write!(f, "YW({n})"),
            CosetLabel::WY(n) => write!(f, "WY({n})"),
            CosetLabel::YWY(n) => write!(f, "YWY({n})"),
        }
    }
}

/// `g = left * rep * right` with `left, right` in `K0` and `rep` the label's representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCosetDecomposition {
    pub label: CosetLabel,
    pub left: MetaplecticElt,
    pub rep: MetaplecticElt,
    pub right: MetaplecticElt,
}

fn star(m: &Mat2) -> Mat2 {
    Mat2::new(m.a.clone(), &m.b * q(2), &m.c / q(2), m.d.clone())
}

fn unstar(m: &Mat2) -> Mat2 {
    Mat2::new(m.a.clone(), &m.b / q(2), &m.c * q(2), m.d.clone())
}

fn wval(x: &Q, shift: i64) -> Option<i64> {
    v2(x).map(|v| 2 * v + shift)
}

/// Level-2 principal congruence membership in the conjugated picture.
fn in_gamma2(m: &Mat2) -> bool {
    m.is_2_integral() && Mat2::divisible(&m.b, 1) && Mat2::divisible(&m.c, 1)
}

/// Reduction modulo the lower Iwahori subgroup: returns `(l, core, r)` with `m = l core r`.
fn iwahori_reduce(m: &Mat2) -> (Mat2, Mat2, Mat2) {
    let mut cur = m.clone();
    let mut linv = Mat2::identity();
    let mut rinv = Mat2::identity();
    let left = |cur: &mut Mat2, linv: &mut Mat2, e: Mat2| {
        *cur = e.mul(cur);
        *linv = linv.mul(&e.inv());
    };
    let right = |cur: &mut Mat2, rinv: &mut Mat2, e: Mat2| {
        *cur = cur.mul(&e);
        *rinv = e.inv().mul(rinv);
    };
    let weights = [wval(&cur.a, 0), wval(&cur.b, -1), wval(&cur.c, 1), wval(&cur.d, 0)];
    let pivot = (0..4).filter(|&k| weights[k].is_some()).min_by_key(|&k| (weights[k].unwrap(), k)).unwrap();
    match pivot {
        0 => {
            let s = -(&cur.b / &cur.a);
            right(&mut cur, &mut rinv, Mat2::upper(s));
            let t = -(&cur.c / &cur.a);
            left(&mut cur, &mut linv, Mat2::lower(t));
        }
        3 => {
            let s = -(&cur.b / &cur.d);
            left(&mut cur, &mut linv, Mat2::upper(s));
            let t = -(&cur.c / &cur.d);
            right(&mut cur, &mut rinv, Mat2::lower(t));
        }
        1 => {
            let t = -(&cur.a / &cur.b);
            right(&mut cur, &mut rinv, Mat2::lower(t));
            let t2 = -(&cur.d / &cur.b);
            left(&mut cur, &mut linv, Mat2::lower(t2));
        }
        _ => {
            let s = -(&cur.a / &cur.c);
            left(&mut cur, &mut linv, Mat2::upper(s));
            let t = -(&cur.d / &cur.c);
            right(&mut cur, &mut rinv, Mat2::upper(t));
        }
    }
    let lead = if cur.a.is_zero() { cur.b.clone() } else { cur.a.clone() };
    let (_, unit) = dyadic_decompose(&lead).unwrap();
    left(&mut cur, &mut linv, Mat2::torus(num_traits::Inv::inv(unit)));
    (linv, cur, rinv)
}

/// Classifies `K0 g K0` and returns an explicit factorization through the representative.
pub fn classify_double_coset(g: &MetaplecticElt) -> Result<DoubleCosetDecomposition> {
    if !g.mat.det().is_one() {
        return Err(Error::NotSpecialLinear(g.mat.det().to_string()));
    }
    let ms = star(&g.mat);
    let (l, core, r) = iwahori_reduce(&ms);
    let y1 = Mat2::lower(Q::one());
    let odd = |m: &Mat2| !Mat2::divisible(&m.c, 1);
    let e1 = odd(&l);
    let e2 = odd(&r);
    let l1 = if e1 { l.mul(&y1.inv()) } else { l.clone() };
    let r1 = if e2 { y1.inv().mul(&r) } else { r.clone() };
    let mut middle = core.clone();
    if e1 {
        middle = y1.mul(&middle);
    }
    if e2 {
        middle = middle.mul(&y1);
    }
    let label = if core.b.is_zero() {
        let n = v2(&core.a).unwrap();
        match (n.signum(), e1, e2) {
            (0, a, b) if a != b => CosetLabel::Y,
            (0, _, _) => CosetLabel::T(0),
            (1, _, true) => CosetLabel::HY(n as u32),
            (1, _, false) => CosetLabel::T(n),
            (_, true, _) => CosetLabel::YH((-n) as u32),
            (_, false, _) => CosetLabel::T(n),
        }
    } else {
        let k = v2(&core.b).unwrap();
        let n = 1 - k;
        if n <= 0 {
            CosetLabel::W(n)
        } else {
            let n = n as u32;
            match (e1, e2) {
                (false, false) => CosetLabel::W(n as i64),
                (true, false) => CosetLabel::YW(n),
                (false, true) => CosetLabel::WY(n),
                (true, true) => CosetLabel::YWY(n),
            }
        }
    };
    let rep = label.representative();
    let rep_star = star(&rep.mat);
    // middle = rep * g_r or g_l * rep with the correction in the congruence subgroup.
    let (gl, gr) = {
        let right_fix = rep_star.inv().mul(&middle);
        if in_gamma2(&right_fix) {
            (Mat2::identity(), right_fix)
        } else {
            let left_fix = middle.mul(&rep_star.inv());
            debug_assert!(in_gamma2(&left_fix), "no congruence correction for {label}");
            (left_fix, Mat2::identity())
        }
    };
    let left_m = unstar(&l1.mul(&gl));
    let right_m = unstar(&gr.mul(&r1));
    let mut left = MetaplecticElt::lift(left_m);
    let right = MetaplecticElt::lift(right_m);
    let prod = MetaplecticElt::product([&left, &rep, &right]);
    debug_assert_eq!(prod.mat, g.mat);
    if prod.sign != g.sign {
        left = left.with_central(-1);
    }
    debug_assert!(subgroup_member(&left, Subgroup::K0) && subgroup_member(&right, Subgroup::K0));
    Ok(DoubleCosetDecomposition { label, left, rep, right })
}

/// Left coset representatives `r_i` with `K0 g K0 = ⊔ r_i K0` for the supported labels.
pub fn coset_decomposition(label: CosetLabel) -> Result<Vec<MetaplecticElt>> {
    let range = |k: u32| (0..(1u64 << k)).map(|u| q(u as i64));
    let out: Vec<MetaplecticElt> = match label {
        CosetLabel::T(n) if n >= 0 => {
            let h = MetaplecticElt::h(pow2(n));
            range(2 * n as u32).map(|u| MetaplecticElt::x(u).mul(&h)).collect()
        }
        CosetLabel::T(n) => {
            let h = MetaplecticElt::h(pow2(n));
            range(2 * (-n) as u32).map(|u| MetaplecticElt::y(u * q(4)).mul(&h)).collect()
        }
        CosetLabel::W(n) if n <= 0 => {
            let m = -n;
            let w = MetaplecticElt::w(pow2(m));
            range(2 * m as u32 + 2).map(|u| MetaplecticElt::x(u).mul(&w)).collect()
        }
        CosetLabel::W(n) => {
            let w = MetaplecticElt::w(pow2(-n));
            range(2 * n as u32 - 2).map(|u| MetaplecticElt::y(u * q(4)).mul(&w)).collect()
        }
        other => return Err(Error::UnsupportedLabel(other.to_string())),
    };
    Ok(out)
}

/// Length function: `log2` of the number of left `K0`-cosets in the double coset.
pub fn ell(label: CosetLabel) -> Result<u32> {
    match label {
        CosetLabel::T(n) => Ok(2 * n.unsigned_abs() as u32),
        CosetLabel::W(n) => Ok(2 * (1 - n).unsigned_abs() as u32),
        other => Err(Error::UnsupportedLabel(other.to_string())),
    }
}

/// Length together with the alternative value 1 sometimes quoted for `W(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub label: CosetLabel,
    pub ell: u32,
    pub alternative: Option<u32>,
    pub note: Option<String>,
}

pub fn ell_report(label: CosetLabel) -> Result<LengthReport> {
    let ell = ell(label)?;
    let (alternative, note) = if label == CosetLabel::W(1) {
        (
            Some(1),
            Some("w(2^-1) normalizes K0, so the double coset is a single left coset and ell = 0; the value 1 is not consistent with the length-additivity products used by the Hecke relations".to_string()),
        )
    } else {
        (None, None)
    };
    Ok(LengthReport { label, ell, alternative, note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::qf;

    fn check(g: &MetaplecticElt, expected: CosetLabel) {
        let d = classify_double_coset(g).unwrap();
        assert_eq!(d.label, expected, "{g:?}");
        assert_eq!(MetaplecticElt::product([&d.left, &d.rep, &d.right]), *g);
    }

    #[test]
    fn representatives_classify_to_themselves() {
        let mut labels = vec![CosetLabel::Y];
        for n in -4..=4 {
            labels.push(CosetLabel::T(n));
            labels.push(CosetLabel::W(n));
        }
        for n in 1..=4 {
            labels.extend([CosetLabel::HY(n), CosetLabel::YH(n), CosetLabel::YW(n), CosetLabel::WY(n), CosetLabel::YWY(n)]);
        }
        for l in labels {
            check(&l.representative(), l);
            check(&l.representative().with_central(-1), l);
        }
    }

    #[test]
    fn examples() {
        let g = MetaplecticElt::product([&MetaplecticElt::x(q(3)), &MetaplecticElt::h(q(4)), &MetaplecticElt::y(q(4))]);
        check(&g, CosetLabel::T(2));
        let g = MetaplecticElt::y(q(2)).mul(&MetaplecticElt::w(qf(1, 2)));
        check(&g, CosetLabel::YW(1));
        check(&MetaplecticElt::w(q(1)), CosetLabel::W(0));
        check(&MetaplecticElt::x(qf(1, 2)), CosetLabel::YWY(1));
    }

    #[test]
    fn coset_counts_match_length() {
        for n in -3..=3 {
            for l in [CosetLabel::T(n), CosetLabel::W(n)] {
                let reps = coset_decomposition(l).unwrap();
                assert_eq!(reps.len(), 1 << ell(l).unwrap(), "{l}");
                for r in &reps {
                    assert_eq!(classify_double_coset(r).unwrap().label, l);
                }
                for (i, a) in reps.iter().enumerate() {
                    for b in &reps[i + 1..] {
                        assert!(!subgroup_member(&a.inv().mul(b), Subgroup::K0));
                    }
                }
            }
        }
        assert_eq!(ell_report(CosetLabel::W(1)).unwrap().alternative, Some(1));
        assert!(coset_decomposition(CosetLabel::Y).is_err());
    }
}
