//! Eigenvalue comparisons with integral weight: the plus space against level one, and the
//! `W4`-eigenlines of the minus space against level two.

use serde::{Deserialize, Serialize};

use super::generators::{eta_product, integral_weight_eigenform};
use super::operators::{lemma_sequence, sign_r, t4, t4plus, tp2};
use super::qexp::QExpansion;
use super::space::{lift, restrict, HalfIntForm, SpaceKind, Spaces};
use super::transport::TransportedModule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Check;
use crate::scalars::rational::{format_q, pow2, q, Q};
use crate::scalars::Cyc8;

/// The scalar `c` with `g = c f` on every coefficient both know, if any.
fn eigenvalue_of(f: &QExpansion, g: &QExpansion) -> Option<Q> {
    let n0 = f.order()?;
    if n0 > g.precision {
        return None;
    }
    let c = g.coeff(n0) / f.coeff(n0);
    (0..=g.precision.min(f.precision)).all(|n| *g.coeff(n) == &c * f.coeff(n)).then_some(c)
}

/// Eigenvalue of `T_{p^2}` on a form, with the comparison `a_p` of the integral weight side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEigenvalue {
    pub p: u64,
    #[serde(with = "crate::scalars::rational::as_string")]
    pub half_integral: Q,
    #[serde(with = "crate::scalars::rational::as_string")]
    pub integral: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShimuraReport {
    pub r: i64,
    pub precision: usize,
    pub dim_plus: usize,
    pub note: Option<String>,
    pub eigenform: Option<HalfIntForm>,
    pub lambda2: Option<String>,
    pub a2_integral: Option<String>,
    pub z_eigenvalue: Option<Cyc8>,
    pub odd_primes: Vec<PrimeEigenvalue>,
    pub checks: Vec<Check>,
}

/// Odd primes `p` whose `T_{p^2}` image still determines a form at precision `n`.
fn usable_primes(n: usize, dim: usize) -> Vec<u64> {
    [3u64, 5, 7].into_iter().filter(|p| n / (p * p) as usize >= dim + 2).collect()
}

pub fn shimura_check(r: i64, precision: usize) -> Result<ShimuraReport> {
    let s = Spaces::new(r, precision)?;
    let plus = s.space(SpaceKind::SPlus)?;
    let mut rep = ShimuraReport {
        r,
        precision,
        dim_plus: plus.dim(),
        note: None,
        eigenform: None,
        lambda2: None,
        a2_integral: None,
        z_eigenvalue: None,
        odd_primes: Vec::new(),
        checks: Vec::new(),
    };
    match plus.dim() {
        0 => {
            rep.note = Some("S+ = 0, nothing to check".into());
            return Ok(rep);
        }
        1 => {}
        d => return Err(Error::EigenspaceDimension(d)),
    }
    let f = plus.basis[0].clone();
    let weight = r - 1;
    let g = integral_weight_eigenform(weight, precision)?;

    // T4+ eigenvalue against a_2 of the integral weight eigenform.
    let tf = t4plus(&f.qexp, r)?;
    let lambda = eigenvalue_of(&f.qexp, &tf).ok_or(Error::ReexpressionFailed)?;
    let a2 = g.coeff(2).clone();
    rep.checks.push(Check::new(
        "T4+ preserves the plus eigenline",
        true,
        format!("T4+ f = {} f to O(q^{})", format_q(&lambda), tf.precision + 1),
    ));
    rep.checks.push(Check::new(
        format!("lambda_2 = {} both sides", format_q(&a2)),
        lambda == a2,
        format!("half-integral {}, weight {weight} a_2 {}", format_q(&lambda), format_q(&a2)),
    ));

    // Operator identity T4+ = 2^(r/2 - 1) q(Z) on S+, and the eigenvalue bridge.
    let m = TransportedModule::from_operators(r, &s.w4, &s.t4);
    let z = m.z();
    let basis_c: Vec<Vec<Cyc8>> = s.plus.iter().map(|v| v.iter().map(|x| Cyc8::from_q(x.clone())).collect()).collect();
    let z_plus = restrict(&z, &basis_c)?;
    let t4p = {
        let cols = s
            .plus
            .iter()
            .map(|v| {
                let img = s.ambient.coords_of(&t4plus(&s.ambient.expand(v), r)?)?;
                Matrix::from_cols(&s.plus).solve(&img).ok_or(Error::ReexpressionFailed)
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_cols(&cols)
    };
    // 2^(r/2 - 1) = 2^kappa / sqrt2
    let half_power = &Cyc8::from_q(pow2((r - 1) / 2)) * &Cyc8::inv_sqrt2();
    rep.checks.push(Check::new(
        "T4+ = 2^(r/2-1) q(Z) on S+",
        z_plus.scale(&half_power) == t4p.map(|x| Cyc8::from_q(x.clone())),
        format!("dim S+ = {}", plus.dim()),
    ));
    let zf = z.apply(&f.monomial_coords.iter().map(|x| Cyc8::from_q(x.clone())).collect::<Vec<_>>());
    let bridge = &Cyc8::from_q(pow2(1 - (r - 1) / 2) * &lambda) * &Cyc8::inv_sqrt2();
    let fc: Vec<Cyc8> = f.monomial_coords.iter().map(|x| &bridge * &Cyc8::from_q(x.clone())).collect();
    rep.checks.push(Check::new(
        "eigenvalue(q(Z)) = 2^(1-r/2) lambda_2",
        zf == fc,
        format!("q(Z) eigenvalue {bridge}"),
    ));
    rep.z_eigenvalue = Some(bridge);

    // Coefficient identity sum (2^(4-r) a_16n + 4 a_n) q^n = 2^(4-r) T4 T4+ f.
    let lhs = lemma_sequence(&f.qexp, r);
    let rhs = t4(&tf).scale(&pow2(4 - r));
    let p = lhs.precision.min(rhs.precision);
    rep.checks.push(Check::new(
        "2^(4-r) a_16n + 4 a_n = 2^(2-r/2) q(T1) T4+ f",
        lhs.truncate(p) == rhs.truncate(p),
        format!("compared through q^{p}"),
    ));

    // Odd primes: T_{p^2} eigenvalue against a_p.
    for pr in usable_primes(precision, s.ambient.dim()) {
        let tpf = tp2(&f.qexp, r, pr)?;
        let ev = eigenvalue_of(&f.qexp, &tpf).ok_or(Error::ReexpressionFailed)?;
        let ap = g.coeff(pr as usize).clone();
        rep.checks.push(Check::new(
            format!("T_{{{pr}^2}} eigenvalue = a_{pr}"),
            ev == ap,
            format!("half-integral {}, integral {}", format_q(&ev), format_q(&ap)),
        ));
        rep.odd_primes.push(PrimeEigenvalue { p: pr, half_integral: ev, integral: ap });
    }
    rep.lambda2 = Some(format_q(&lambda));
    rep.a2_integral = Some(format_q(&a2));
    rep.eigenform = Some(f);
    Ok(rep)
}

/// The part of the minus space on which `W4` acts by a sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergPiece {
    /// `W4` eigenvalue.
    pub w4: i64,
    /// The sign `eps` of `St(eps)`, from `W4 = -eps (-1)^((r^2-1)/8)`.
    pub eps: i64,
    pub dim: usize,
    /// Characteristic polynomial of `T_9`, lowest degree first.
    pub t9_charpoly: Vec<String>,
    pub forms: Vec<HalfIntForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergReport {
    pub r: i64,
    pub precision: usize,
    pub dim_cusp: usize,
    pub dim_minus: usize,
    pub steinberg: Vec<SteinbergPiece>,
    /// Dimension of the part of the minus space that is not `W4`-stable.
    pub principal_dim: usize,
    /// Whether every form of the minus space is a `W4`-eigenvector.
    pub minus_is_w4_stable: bool,
    pub checks: Vec<Check>,
}

/// `W4`-eigenvectors inside the minus space, split by eigenvalue.
pub fn steinberg_detect(r: i64, precision: usize) -> Result<SteinbergReport> {
    let s = Spaces::new(r, precision)?;
    let d = s.ambient.dim();
    let sr = sign_r(r);
    let mut checks = Vec::new();
    checks.push(Check::new("W4^2 = 1", s.w4.mul(&s.w4) == Matrix::identity(d), format!("dim M = {d}")));

    let t9 = if precision / 9 > d { Some(s.ambient.tp2_matrix(3)?) } else { None };
    if let Some(t9) = &t9 {
        if !s.cusp.is_empty() {
            let a = restrict(t9, &s.cusp)?;
            let b = restrict(&s.w4, &s.cusp)?;
            checks.push(Check::new("[T_9, W4] = 0 on S", a.mul(&b) == b.mul(&a), format!("dim S = {}", s.cusp.len())));
        }
    }

    let mut pieces = Vec::new();
    for mu in [1i64, -1] {
        let vecs = if s.minus.is_empty() {
            Vec::new()
        } else {
            // x with (W4 - mu) B x = 0 for the minus basis B.
            let b = Matrix::from_cols(&s.minus);
            let k = s.w4.sub(&Matrix::scalar(d, &q(mu))).mul(&b).nullspace();
            lift(&s.minus, &k)
        };
        if vecs.is_empty() {
            continue;
        }
        let t9_charpoly = match &t9 {
            Some(t9) => restrict(t9, &vecs)?.charpoly().iter().map(format_q).collect(),
            None => Vec::new(),
        };
        let forms = vecs.iter().map(|v| s.ambient.form(v.clone())).collect();
        pieces.push(SteinbergPiece { w4: mu, eps: -mu * sr, dim: vecs.len(), t9_charpoly, forms });
    }
    let st_dim: usize = pieces.iter().map(|p| p.dim).sum();

    // On a Steinberg line T_w = -1 and U1 = -eps.
    let m = TransportedModule::from_operators(r, &s.w4, &s.t4);
    for p in &pieces {
        let basis: Vec<Vec<Cyc8>> = p.forms.iter().map(|f| f.monomial_coords.iter().map(|x| Cyc8::from_q(x.clone())).collect()).collect();
        let n = basis.len();
        let tw = restrict(&m.t_w(), &basis)?;
        let u1 = restrict(&m.u1, &basis)?;
        checks.push(Check::new(
            format!("St({}): q(T_w) = -1, q(U1) = -eps", p.eps),
            tw == Matrix::scalar(n, &Cyc8::from_int(-1)) && u1 == Matrix::scalar(n, &Cyc8::from_int(-p.eps)),
            format!("dim {n}"),
        ));
    }

    // At r = 9 compare with the level-two weight-eight eigenform eta(z)^8 eta(2z)^8.
    if r == 9 {
        let g = eta_product(&[(1, 8), (2, 8)], 10)?;
        let a3 = g.coeff(3).clone();
        let ok = pieces.len() == 1 && pieces[0].dim == 1 && pieces[0].t9_charpoly.len() == 2 && {
            let c0 = crate::scalars::parse_q(&pieces[0].t9_charpoly[0])?;
            -c0 == a3
        };
        checks.push(Check::new(
            "T_9 eigenvalue = a_3 of eta(z)^8 eta(2z)^8",
            ok,
            format!("a_3 = {}, T_9 charpoly {:?}", format_q(&a3), pieces.first().map(|p| &p.t9_charpoly)),
        ));
    }

    Ok(SteinbergReport {
        r,
        precision,
        dim_cusp: s.cusp.len(),
        dim_minus: s.minus.len(),
        principal_dim: s.minus.len() - st_dim,
        minus_is_w4_stable: st_dim == s.minus.len(),
        steinberg: pieces,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn shimura_eigenvalues() {
        for (r, l) in [(13, "-24"), (17, "216"), (21, "456")] {
            let rep = shimura_check(r, 100).unwrap();
            assert_eq!(rep.lambda2.as_deref(), Some(l));
            assert!(all_pass(&rep.checks), "r = {r}: {:?}", rep.checks);
        }
        assert_eq!(shimura_check(13, 100).unwrap().odd_primes[0].half_integral, q(252));
    }

    #[test]
    fn shimura_r15_is_empty() {
        let rep = shimura_check(15, 100).unwrap();
        assert_eq!(rep.dim_plus, 0);
        assert!(rep.checks.is_empty() && rep.note.is_some());
    }

    #[test]
    fn steinberg_r9_and_r13() {
        let rep = steinberg_detect(9, 100).unwrap();
        assert!(all_pass(&rep.checks), "{:?}", rep.checks);
        assert_eq!((rep.dim_minus, rep.principal_dim), (1, 0));
        assert!(rep.minus_is_w4_stable);
        let rep = steinberg_detect(13, 100).unwrap();
        assert!(all_pass(&rep.checks), "{:?}", rep.checks);
        assert_eq!((rep.dim_minus, rep.principal_dim), (1, 1));
        assert!(!rep.minus_is_w4_stable);
    }

    #[test]
    fn eigenvalue_helper() {
        let f = QExpansion::from_ints(&[0, 1, 2], 2);
        assert_eq!(eigenvalue_of(&f, &f.scale(&q(3))), Some(q(3)));
        assert_eq!(eigenvalue_of(&f, &QExpansion::from_ints(&[0, 1, 3], 2)), None);
        assert_eq!(eigenvalue_of(&QExpansion::zero(2), &f), None);
    }
}
