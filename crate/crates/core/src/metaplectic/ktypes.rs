//! The finite quotient `K / K(4)` and the six-dimensional induced module `Ind_{K0}^K gamma`.
//!
//! Elements of the quotient are pairs (canonical integral lift of a class in `SL2(Z/4)`, sign).
//! Products are taken exactly in the cover and reduced back to a canonical lift, with the
//! sign read off from the `K(4)` part.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::coset::{classify_double_coset, CosetLabel};
use super::gamma::GammaChar;
use super::group::{mu2_part_mod_k4, subgroup_member, MetaplecticElt, Subgroup};
use super::mat2::Mat2;
use crate::error::Result;
use crate::hecke::{algebra::t_w, oracle::evaluate};
use crate::linalg::Matrix;
use crate::par::Exec;
use crate::scalars::rational::{q, qf};
use crate::scalars::Cyc8;

const LIFT_BOUND: i64 = 8;

/// Multiplication table of `K / K(4)`, indexed by `2 * class + (sign == -1)`.
#[derive(Clone, Debug)]
pub struct FiniteQuotient {
    lifts: Vec<Mat2>,
    class_of: HashMap<[u64; 4], usize>,
    table: Vec<Vec<usize>>,
}

fn canonical_lifts() -> Vec<Mat2> {
    let mut cands: Vec<[i64; 4]> = Vec::new();
    let r = -LIFT_BOUND..=LIFT_BOUND;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if a * d - b * c == 1 {
                        cands.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    cands.sort_by_key(|e| (e.iter().map(|x| x.abs()).max().unwrap(), e.iter().map(|x| x.abs()).sum::<i64>(), *e));
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for e in cands {
        let key = e.map(|x| x.rem_euclid(4) as u64);
        if let std::collections::hash_map::Entry::Vacant(v) = seen.entry(key) {
            v.insert(());
            out.push(Mat2::new(q(e[0]), q(e[1]), q(e[2]), q(e[3])));
        }
    }
    out
}

impl FiniteQuotient {
    pub fn build(exec: Exec) -> Result<Self> {
        let lifts = canonical_lifts();
        let class_of: HashMap<[u64; 4], usize> =
            lifts.iter().enumerate().map(|(i, m)| (m.residues(2).expect("integral lift"), i)).collect();
        let mut fq = FiniteQuotient { lifts, class_of, table: Vec::new() };
        let n = fq.order();
        let rows = exec.map_range(n, |i| (0..n).map(|j| fq.reduce(&fq.element(i).mul(&fq.element(j)))).collect::<Result<Vec<_>>>());
        fq.table = rows.into_iter().collect::<Result<_>>()?;
        Ok(fq)
    }

    pub fn order(&self) -> usize {
        2 * self.lifts.len()
    }

    pub fn element(&self, i: usize) -> MetaplecticElt {
        MetaplecticElt::new(self.lifts[i / 2].clone(), if i % 2 == 0 { 1 } else { -1 })
    }

    /// Index of the class of an element of `K`.
    pub fn reduce(&self, g: &MetaplecticElt) -> Result<usize> {
        let key = g.mat.residues(2).ok_or(crate::error::Error::NotInK0)?;
        let c = self.class_of[&key];
        let rep = MetaplecticElt::lift(self.lifts[c].clone());
        let e = mu2_part_mod_k4(&rep.inv().mul(g))?;
        Ok(2 * c + usize::from(e == -1))
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn identity(&self) -> usize {
        self.class_of[&[1, 0, 0, 1]] * 2
    }

    pub fn inv(&self, i: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&j| self.mul(i, j) == e).expect("group inverse")
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn in_k0(&self, i: usize) -> bool {
        subgroup_member(&self.element(i), Subgroup::K0)
    }

    /// One representative from each right coset `K0 k`.
    pub fn right_coset_reps(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = Vec::new();
        for k in 0..self.order() {
            if !reps.iter().any(|&s| self.in_k0(self.mul(k, self.inv(s)))) {
                reps.push(k);
            }
        }
        reps
    }
}

/// Result of the pseudo-spherical K-type computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KTypeReport {
    pub gamma: GammaChar,
    pub order: usize,
    pub index: usize,
    pub t_w_matrix: Matrix<Cyc8>,
    pub trace: Cyc8,
    pub mult_2: usize,
    pub mult_minus1: usize,
    pub quadratic_relation: bool,
    /// Dimension of the `gamma-bar` bi-equivariant functions on `K`.
    pub hecke_k_dim: usize,
    /// Double-coset labels of `K0\K/K0` that carry such functions.
    pub supported: Vec<CosetLabel>,
    pub unsupported: Vec<CosetLabel>,
}

/// Builds the matrix of the left action of `T_w` (via `f -> f(g^-1)`) on `Ind_{K0}^K gamma`
/// in the basis of functions supported on single cosets `K0 s`.
pub fn finite_quotient_ktypes(gamma: GammaChar, exec: Exec) -> Result<KTypeReport> {
    let fq = FiniteQuotient::build(exec)?;
    let n = fq.order();
    let reps = fq.right_coset_reps();
    let tw = t_w();
    let tw_vals = exec.map_range(n, |h| evaluate(&tw, &fq.element(h), gamma)).into_iter().collect::<Result<Vec<_>>>()?;
    let gamma_k0: Vec<Option<Cyc8>> =
        (0..n).map(|i| if fq.in_k0(i) { gamma.on_k0(&fq.element(i)).ok() } else { None }).collect();
    let inv_reps: Vec<usize> = reps.iter().map(|&s| fq.inv(s)).collect();
    // phi_s(x) = gamma(x s^-1) when x s^-1 lies in K0.
    let phi = |si: usize, x: usize| gamma_k0[fq.mul(x, inv_reps[si])].clone();
    let vol = Cyc8::from_q(qf(1, 16));
    let d = reps.len();
    let mut m = Matrix::<Cyc8>::zeros(d, d);
    for (si, _) in reps.iter().enumerate() {
        for (ti, &t) in reps.iter().enumerate() {
            let mut acc = Cyc8::zero();
            for (h, v) in tw_vals.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                if let Some(p) = phi(si, fq.mul(h, t)) {
                    acc = &acc + &(v * &p);
                }
            }
            m.set(ti, si, &acc * &vol);
        }
    }
    let two = Cyc8::from_int(2);
    let quadratic_relation = m.mul(&m) == m.add(&Matrix::scalar(d, &two));
    let (supported, unsupported, hecke_k_dim) = bi_equivariant_classes(&fq, gamma)?;
    Ok(KTypeReport {
        gamma,
        order: n,
        index: d,
        trace: m.trace(),
        mult_2: m.eigenspace_dim(&two),
        mult_minus1: m.eigenspace_dim(&Cyc8::from_int(-1)),
        t_w_matrix: m,
        quadratic_relation,
        hecke_k_dim,
        supported,
        unsupported,
    })
}

/// Orbits of `K0 x K0` on the quotient; an orbit supports a function with
/// `f(k g k') = conj(gamma(k)) f(g) conj(gamma(k'))` iff the propagated values never conflict.
fn bi_equivariant_classes(fq: &FiniteQuotient, gamma: GammaChar) -> Result<(Vec<CosetLabel>, Vec<CosetLabel>, usize)> {
    let n = fq.order();
    let k0: Vec<usize> = (0..n).filter(|&i| fq.in_k0(i)).collect();
    let gbar: HashMap<usize, Cyc8> = k0.iter().map(|&i| Ok((i, gamma.on_k0(&fq.element(i))?.conj()))).collect::<Result<_>>()?;
    let mut value: Vec<Option<Cyc8>> = vec![None; n];
    let (mut sup, mut unsup) = (Vec::new(), Vec::new());
    for g in 0..n {
        if value[g].is_some() {
            continue;
        }
        let mut consistent = true;
        value[g] = Some(Cyc8::one());
        for &a in &k0 {
            for &b in &k0 {
                let x = fq.mul(fq.mul(a, g), b);
                let v = &gbar[&a] * &gbar[&b];
                match &value[x] {
                    Some(old) if *old != v => consistent = false,
                    Some(_) => {}
                    None => value[x] = Some(v),
                }
            }
        }
        let label = classify_double_coset(&fq.element(g))?.label;
        if consistent {
            sup.push(label);
        } else {
            unsup.push(label);
        }
    }
    let dim = sup.len();
    Ok((sup, unsup, dim))
}

/// A pair `(k, k')` in `K0` with `k g k' = e g` and `conj(gamma(k) gamma(k')) != e`,
/// which forces every `gamma-bar` bi-equivariant function to vanish at `g`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VanishingWitness {
    pub left: MetaplecticElt,
    pub right: MetaplecticElt,
    pub central: i8,
}

pub fn vanishing_witness(g: &MetaplecticElt, gamma: GammaChar) -> Result<Option<VanishingWitness>> {
    // x(a) y(4b) h(s) and y(4b) x(a) h(s), with a, b small or a power of 2, tried on either side.
    let params: Vec<i64> = (0..4).chain((2..=6).map(|k| 1 << k)).collect();
    let mut cands = Vec::new();
    for &a in &params {
        for &b in &params {
            for s in [1, -1] {
                let (x, y, h) = (MetaplecticElt::x(q(a)), MetaplecticElt::y(q(4 * b)), MetaplecticElt::h(q(s)));
                cands.push(MetaplecticElt::product([&x, &y, &h]));
                cands.push(MetaplecticElt::product([&y, &x, &h]));
            }
        }
    }
    let gi = g.inv();
    for c in &cands {
        for e in [1i8, -1] {
            // k g k' = e g with either k = c or k' = c.
            for (left, right) in [
                (c.clone(), gi.mul(&c.inv()).mul(g).with_central(e)),
                (g.mul(&c.inv()).mul(&gi).with_central(e), c.clone()),
            ] {
                if !subgroup_member(&left, Subgroup::K0) || !subgroup_member(&right, Subgroup::K0) {
                    continue;
                }
                debug_assert_eq!(left.mul(g).mul(&right), g.with_central(e));
                let v = &gamma.on_k0(&left)?.conj() * &gamma.on_k0(&right)?.conj();
                if v != Cyc8::from_int(e as i64) {
                    return Ok(Some(VanishingWitness { left, right, central: e }));
                }
            }
        }
    }
    Ok(None)
}
