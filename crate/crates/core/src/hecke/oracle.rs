//! Hecke elements as functions on the group, and their convolution computed
//! directly from the coset decompositions.

use super::elt::{BasisLabel, HeckeElt};
use crate::error::Result;
use crate::metaplectic::coset::{classify_double_coset, coset_decomposition, CosetLabel};
use crate::metaplectic::{GammaChar, MetaplecticElt};
use crate::scalars::Cyc8;

fn basis_for(label: CosetLabel) -> Option<BasisLabel> {
    match label {
        CosetLabel::T(n) => Some(BasisLabel::T(n)),
        CosetLabel::W(n) => Some(BasisLabel::U(n)),
        _ => None,
    }
}

fn support_label(b: BasisLabel) -> CosetLabel {
    match b {
        BasisLabel::T(n) => CosetLabel::T(n),
        BasisLabel::U(n) => CosetLabel::W(n),
    }
}

/// Value of the function `f` at `g`, using `f(k g k') = conj(gamma(k)) f(g) conj(gamma(k'))`.
pub fn evaluate(f: &HeckeElt, g: &MetaplecticElt, gamma: GammaChar) -> Result<Cyc8> {
    let d = classify_double_coset(g)?;
    let Some(b) = basis_for(d.label) else { return Ok(Cyc8::zero()) };
    let c = f.coeff(b);
    if c.is_zero() {
        return Ok(c);
    }
    let v = &(&gamma.conj_eval(&d.left)? * &gamma.conj_eval(&d.rep)?) * &gamma.conj_eval(&d.right)?;
    Ok(&c * &v)
}

/// `(f1 * f2)(g) = sum_i f1(r_i) f2(r_i^-1 g)` over left coset representatives of the support of `f1`.
pub fn convolve(f1: &HeckeElt, f2: &HeckeElt, g: &MetaplecticElt, gamma: GammaChar) -> Result<Cyc8> {
    let mut acc = Cyc8::zero();
    for b in f1.support() {
        for r in coset_decomposition(support_label(b))? {
            let a = evaluate(f1, &r, gamma)?;
            if a.is_zero() {
                continue;
            }
            let v = evaluate(f2, &r.inv().mul(g), gamma)?;
            acc = &acc + &(&a * &v);
        }
    }
    Ok(acc)
}

/// Compares `convolve(f1, f2, g)` with the algebraic product evaluated at `g`.
pub fn oracle_agrees(f1: &HeckeElt, f2: &HeckeElt, g: &MetaplecticElt, gamma: GammaChar) -> Result<bool> {
    Ok(convolve(f1, f2, g, gamma)? == evaluate(&f1.mul(f2), g, gamma)?)
}

/// Group points at which products are compared: representatives of every supported class
/// with `|n| <= range`, and those points twisted by a few elements of `K0`.
pub fn probe_points(range: i64) -> Vec<MetaplecticElt> {
    use crate::scalars::rational::{q, qf};
    let twists = [
        MetaplecticElt::identity(),
        MetaplecticElt::x(q(1)),
        MetaplecticElt::y(q(4)).mul(&MetaplecticElt::h(q(-1))),
        MetaplecticElt::h(q(3)).mul(&MetaplecticElt::x(qf(1, 3))),
    ];
    let mut out = Vec::new();
    for n in -range..=range {
        for label in [CosetLabel::T(n), CosetLabel::W(n)] {
            let rep = label.representative();
            for (i, k) in twists.iter().enumerate() {
                let k2 = &twists[(i + 1) % twists.len()];
                out.push(MetaplecticElt::product([k, &rep, k2]));
            }
        }
    }
    out.push(CosetLabel::Y.representative());
    out.push(CosetLabel::HY(1).representative());
    out.push(CosetLabel::YW(2).representative());
    out
}
