//! Spaces of weight `r/2` on `Gamma0(4)` in the monomial basis `theta^(r-4b) F^b`.
//!
//! The monomial of index `b` has q-order `b` and leading coefficient 1, so coordinates are read
//! off by back-substitution and the remaining coefficients are then checked.

use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::generators::{gen_f, theta};
use super::operators::{kappa, sign_r, t4, tp2};
use super::qexp::QExpansion;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::rational::{pow2, q, vec_as_string, Q};

/// `r/4 + 1` monomials of weight `r/2`.
pub fn monomial_count(r: i64) -> usize {
    (r / 4 + 1) as usize
}

/// `max(100, 8 dim M)`.
pub fn default_precision(r: i64) -> usize {
    100.max(8 * monomial_count(r.max(0)))
}

fn check_odd_weight(r: i64) -> Result<()> {
    if r < 1 || r % 2 == 0 {
        return Err(Error::InvalidWeight(r));
    }
    Ok(())
}

/// Image of monomial coordinates under `theta -> theta`, `F -> theta^4/16 - F`.
pub fn w4_coords(coords: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); coords.len()];
    for (b, c) in coords.iter().enumerate().filter(|(_, c)| !Zero::is_zero(*c)) {
        for (k, o) in out.iter_mut().enumerate().take(b + 1) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let t = Q::from_integer(binomial(b as i64, k as i64).into()) * pow2(-4 * (b - k) as i64) * q(sign);
            *o += c * t;
        }
    }
    out
}

/// A form of weight `r/2` with its q-expansion and monomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfIntForm {
    pub r: i64,
    #[serde(flatten)]
    pub qexp: QExpansion,
    #[serde(with = "vec_as_string")]
    pub monomial_coords: Vec<Q>,
}

impl HalfIntForm {
    pub fn kappa(&self) -> i64 {
        kappa(self.r)
    }

    pub fn precision(&self) -> usize {
        self.qexp.precision
    }
}

/// The monomials of weight `r/2` to a fixed precision. `r` may be any nonnegative integer here;
/// the half-integral spaces require it odd.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub r: i64,
    pub precision: usize,
    monomials: Vec<QExpansion>,
}

impl Ambient {
    pub fn new(r: i64, precision: usize) -> Result<Self> {
        if r < 0 {
            return Err(Error::InvalidWeight(r));
        }
        let dim = monomial_count(r);
        if precision + 1 < dim {
            return Err(Error::PrecisionTooLow { needed: dim - 1, got: precision });
        }
        let th4 = theta(precision).pow(4);
        let f = gen_f(precision);
        // theta^(r - 4b) F^b, built from the top b down.
        let mut monomials = vec![QExpansion::zero(precision); dim];
        let mut th_pow = theta(precision).pow((r % 4) as u32);
        for b in (0..dim).rev() {
            monomials[b] = th_pow.mul(&f.pow(b as u32));
            th_pow = th_pow.mul(&th4);
        }
        Ok(Ambient { r, precision, monomials })
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomial(&self, b: usize) -> &QExpansion {
        &self.monomials[b]
    }

    pub fn monomial_form(&self, b: usize) -> HalfIntForm {
        let mut c = vec![Q::zero(); self.dim()];
        c[b] = Q::one();
        self.form(c)
    }

    pub fn expand(&self, coords: &[Q]) -> QExpansion {
        let mut acc = vec![Q::zero(); self.precision + 1];
        for (c, m) in coords.iter().zip(&self.monomials).filter(|(c, _)| !Zero::is_zero(*c)) {
            for (a, x) in acc.iter_mut().zip(&m.coeffs) {
                *a += c * x;
            }
        }
        QExpansion::new(acc, self.precision)
    }

    pub fn form(&self, coords: Vec<Q>) -> HalfIntForm {
        HalfIntForm { r: self.r, qexp: self.expand(&coords), monomial_coords: coords }
    }

    /// Coordinates of `f`, verified on every coefficient both expansions know.
    pub fn coords_of(&self, f: &QExpansion) -> Result<Vec<Q>> {
        let d = self.dim();
        if f.precision + 1 < d {
            return Err(Error::PrecisionTooLow { needed: d - 1, got: f.precision });
        }
        let p = f.precision.min(self.precision);
        let mut res = f.coeffs[..=p].to_vec();
        let mut coords = vec![Q::zero(); d];
        for b in 0..d {
            let c = res[b].clone();
            if !Zero::is_zero(&c) {
                for (x, m) in res.iter_mut().zip(&self.monomials[b].coeffs).skip(b) {
                    *x -= &c * m;
                }
            }
            coords[b] = c;
        }
        if res.iter().any(|x| !Zero::is_zero(x)) {
            return Err(Error::ReexpressionFailed);
        }
        Ok(coords)
    }

    /// Columns are the images of the monomials.
    fn operator_matrix(&self, op: impl Fn(&QExpansion) -> Result<QExpansion>) -> Result<Matrix<Q>> {
        let cols = self.monomials.iter().map(|m| self.coords_of(&op(m)?)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(&cols))
    }

    pub fn w4_matrix(&self) -> Matrix<Q> {
        let d = self.dim();
        let cols: Vec<Vec<Q>> = (0..d).map(|b| w4_coords(&self.monomial_form(b).monomial_coords)).collect();
        Matrix::from_cols(&cols)
    }

    /// `a_n -> a_4n`, re-expressed from precision `N/4`.
    pub fn t4_matrix(&self) -> Result<Matrix<Q>> {
        self.operator_matrix(|m| Ok(t4(m)))
    }

    pub fn tp2_matrix(&self, p: u64) -> Result<Matrix<Q>> {
        self.operator_matrix(|m| tp2(m, self.r, p))
    }

    /// `W = (-1)^((r^2-1)/8) 2^(1-kappa) W4 T4`.
    pub fn w_matrix(&self) -> Result<Matrix<Q>> {
        let c = pow2(1 - kappa(self.r)) * q(sign_r(self.r));
        Ok(self.w4_matrix().mul(&self.t4_matrix()?).scale(&c))
    }

    /// Coordinates of the cusp forms: `a_0 = 0` and the constant term of the `W4` image is 0.
    pub fn cusp_coords(&self) -> Vec<Vec<Q>> {
        let d = self.dim();
        let mut at_zero = vec![Q::zero(); d];
        for (b, x) in at_zero.iter_mut().enumerate() {
            *x = pow2(-4 * b as i64);
        }
        let mut at_inf = vec![Q::zero(); d];
        at_inf[0] = Q::one();
        Matrix::from_rows(vec![at_inf, at_zero]).nullspace()
    }
}

pub fn fricke_w4(f: &HalfIntForm) -> Result<HalfIntForm> {
    Ok(Ambient::new(f.r, f.precision())?.form(w4_coords(&f.monomial_coords)))
}

/// `a_n -> a_4n`, re-expressed in monomial coordinates at the input precision.
pub fn op_t4(f: &HalfIntForm) -> Result<HalfIntForm> {
    let amb = Ambient::new(f.r, f.precision())?;
    Ok(amb.form(amb.coords_of(&t4(&f.qexp))?))
}

pub fn op_w(f: &HalfIntForm) -> Result<HalfIntForm> {
    let c = pow2(1 - f.kappa()) * q(sign_r(f.r));
    let g = fricke_w4(&op_t4(f)?)?;
    let amb = Ambient::new(f.r, f.precision())?;
    Ok(amb.form(g.monomial_coords.iter().map(|x| x * &c).collect()))
}

pub fn op_tp2(f: &HalfIntForm, p: u64) -> Result<HalfIntForm> {
    let amb = Ambient::new(f.r, f.precision())?;
    Ok(amb.form(amb.coords_of(&tp2(&f.qexp, f.r, p)?)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceKind {
    M,
    S,
    #[serde(rename = "S+")]
    SPlus,
    #[serde(rename = "S-")]
    SMinus,
}

impl SpaceKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(SpaceKind::M),
            "S" => Ok(SpaceKind::S),
            "S+" => Ok(SpaceKind::SPlus),
            "S-" => Ok(SpaceKind::SMinus),
            _ => Err(Error::Parse(format!("unknown space kind {s:?}, expected M, S, S+ or S-"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfIntSpace {
    pub kind: SpaceKind,
    pub r: i64,
    pub basis: Vec<HalfIntForm>,
}

impl HalfIntSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Monomial coordinates of the basis as columns.
    pub fn coord_cols(&self) -> Vec<Vec<Q>> {
        self.basis.iter().map(|f| f.monomial_coords.clone()).collect()
    }

    /// Rank of the coefficient matrix equals the number of basis forms.
    pub fn independent(&self) -> bool {
        self.basis.is_empty() || Matrix::from_rows(self.basis.iter().map(|f| f.qexp.coeffs.clone()).collect()).rank() == self.dim()
    }
}

/// Matrix of `a` on the span of `basis`, which must be `a`-stable.
pub fn restrict<F: crate::scalars::Field>(a: &Matrix<F>, basis: &[Vec<F>]) -> Result<Matrix<F>> {
    if basis.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    let b = Matrix::from_cols(basis);
    let cols = basis.iter().map(|v| b.solve(&a.apply(v)).ok_or(Error::ReexpressionFailed)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(&cols))
}

/// Coordinates in the ambient basis of `sub` vectors expressed in the basis `basis`.
pub fn lift(basis: &[Vec<Q>], sub: &[Vec<Q>]) -> Vec<Vec<Q>> {
    sub.iter()
        .map(|v| {
            let mut out = vec![Q::zero(); basis[0].len()];
            for (c, b) in v.iter().zip(basis) {
                for (o, x) in out.iter_mut().zip(b) {
                    *o += c * x;
                }
            }
            out
        })
        .collect()
}

/// The ambient space with its cusp subspace and the `W`-eigenspaces inside it.
#[derive(Clone, Debug)]
pub struct Spaces {
    pub ambient: Ambient,
    pub w4: Matrix<Q>,
    pub t4: Matrix<Q>,
    pub w: Matrix<Q>,
    pub cusp: Vec<Vec<Q>>,
    pub plus: Vec<Vec<Q>>,
    pub minus: Vec<Vec<Q>>,
}

impl Spaces {
    pub fn new(r: i64, precision: usize) -> Result<Self> {
        check_odd_weight(r)?;
        let ambient = Ambient::new(r, precision)?;
        let needed = 4 * (ambient.dim() + 1);
        if precision < needed {
            return Err(Error::PrecisionTooLow { needed, got: precision });
        }
        let w4 = ambient.w4_matrix();
        let t4 = ambient.t4_matrix()?;
        let w = w4.mul(&t4).scale(&(pow2(1 - kappa(r)) * q(sign_r(r))));
        let cusp = ambient.cusp_coords();
        let (plus, minus) = if cusp.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let ws = restrict(&w, &cusp)?;
            (lift(&cusp, &ws.eigenspace(&q(2))), lift(&cusp, &ws.eigenspace(&q(-1))))
        };
        Ok(Spaces { ambient, w4, t4, w, cusp, plus, minus })
    }

    pub fn coords(&self, kind: SpaceKind) -> Vec<Vec<Q>> {
        match kind {
            SpaceKind::M => (0..self.ambient.dim()).map(|b| self.ambient.monomial_form(b).monomial_coords).collect(),
            SpaceKind::S => self.cusp.clone(),
            SpaceKind::SPlus => self.plus.clone(),
            SpaceKind::SMinus => self.minus.clone(),
        }
    }

    /// The space with the monomials as basis for `M`, otherwise the echelon basis of the
    /// q-expansions.
    pub fn space(&self, kind: SpaceKind) -> Result<HalfIntSpace> {
        let r = self.ambient.r;
        let coords = self.coords(kind);
        let basis = if kind == SpaceKind::M || coords.is_empty() {
            coords.into_iter().map(|c| self.ambient.form(c)).collect()
        } else {
            let rows = coords.iter().map(|c| self.ambient.expand(c).coeffs).collect();
            let (e, pivots) = Matrix::<Q>::from_rows(rows).rref();
            (0..pivots.len())
                .map(|i| {
                    let f = QExpansion::new(e.row(i), self.ambient.precision);
                    Ok(self.ambient.form(self.ambient.coords_of(&f)?))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(HalfIntSpace { kind, r, basis })
    }
}

pub fn space_basis(kind: SpaceKind, r: i64, precision: usize) -> Result<HalfIntSpace> {
    Spaces::new(r, precision)?.space(kind)
}
