//! Seeded random sweeps over the group: the cocycle identity, the rational splitting,
//! closure of `K1`, `K0`-invariance of the double-coset classifier and the
//! multiplicativity of `gamma` on the torus.
//!
//! Samples are drawn sequentially from a seeded generator, so the result does not
//! depend on the execution policy; only the checks are spread over threads.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::coset::{classify_double_coset, CosetLabel};
use super::gamma::GammaChar;
use super::group::{cocycle2, rational_splitting_check, subgroup_member, MetaplecticElt, Subgroup};
use super::mat2::Mat2;
use crate::par::Exec;
use crate::scalars::hilbert2;
use crate::scalars::rational::{q, qf, residue_mod_2k, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
}

impl SweepReport {
    fn new(name: &str, results: &[bool]) -> Self {
        SweepReport { name: name.into(), samples: results.len(), failures: results.iter().filter(|ok| !**ok).count() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational with numerator and denominator bounded by `height`.
pub fn random_rational(r: &mut impl Rng, height: i64) -> Q {
    loop {
        let n = r.gen_range(-height..=height);
        if n != 0 {
            return qf(n, r.gen_range(1..=height));
        }
    }
}

/// A determinant-one matrix whose free entries `a, b, c` have height at most `height`.
pub fn random_sl2(r: &mut impl Rng, height: i64) -> Mat2 {
    match r.gen_range(0..8) {
        0 => {
            let b = random_rational(r, height);
            Mat2::new(Q::zero(), b.clone(), -num_traits::Inv::inv(b), random_rational(r, height))
        }
        _ => {
            let a = random_rational(r, height);
            let b = random_rational(r, height);
            let c = random_rational(r, height);
            let d = (Q::one() + &b * &c) / &a;
            Mat2::new(a, b, c, d)
        }
    }
}

fn random_unit(r: &mut impl Rng) -> Q {
    let odd = |r: &mut dyn rand::RngCore| 2 * r.gen_range(-6i64..6) + 1;
    qf(odd(r), odd(r).abs())
}

/// A random element of `K0`, as a product of generators `x(u)`, `y(4u)`, `h(unit)` and a sign.
pub fn random_k0(r: &mut impl Rng) -> MetaplecticElt {
    let mut g = MetaplecticElt::identity();
    for _ in 0..r.gen_range(1..5) {
        let u = &q(r.gen_range(-8..=8)) * &random_unit(r);
        let k = match r.gen_range(0..3) {
            0 => MetaplecticElt::x(u),
            1 => MetaplecticElt::y(u * q(4)),
            _ => MetaplecticElt::h(random_unit(r)),
        };
        g = g.mul(&k);
    }
    g.with_central(if r.gen_bool(0.5) { 1 } else { -1 })
}

/// A random matrix in `K1` paired with the sign `+1`.
pub fn random_k1(r: &mut impl Rng) -> MetaplecticElt {
    let g = random_k0(r);
    let m = if residue_mod_2k(&g.mat.a, 2).expect("2-integral") == 1 { g.mat } else { g.mat.neg() };
    MetaplecticElt::lift(m)
}

/// `sigma(g1, g2) sigma(g1 g2, g3) = sigma(g2, g3) sigma(g1, g2 g3)` at the place 2.
pub fn cocycle_sweep(samples: usize, seed: u64, exec: Exec) -> SweepReport {
    let mut r = rng(seed);
    let triples: Vec<[Mat2; 3]> = (0..samples).map(|_| [random_sl2(&mut r, 50), random_sl2(&mut r, 50), random_sl2(&mut r, 50)]).collect();
    let res = exec.map(triples, |[a, b, c]| {
        cocycle2(&a, &b) * cocycle2(&a.mul(&b), &c) == cocycle2(&b, &c) * cocycle2(&a, &b.mul(&c))
    });
    SweepReport::new("cocycle identity", &res)
}

pub fn splitting_sweep(samples: usize, seed: u64, exec: Exec) -> SweepReport {
    let mut r = rng(seed);
    let pairs: Vec<[Mat2; 2]> = (0..samples).map(|_| [random_sl2(&mut r, 50), random_sl2(&mut r, 50)]).collect();
    let res = exec.map(pairs, |[a, b]| rational_splitting_check(&a, &b).unwrap_or(false));
    SweepReport::new("rational splitting", &res)
}

pub fn k1_closure_sweep(samples: usize, seed: u64, exec: Exec) -> SweepReport {
    let mut r = rng(seed);
    let pairs: Vec<[MetaplecticElt; 2]> = (0..samples).map(|_| [random_k1(&mut r), random_k1(&mut r)]).collect();
    let res = exec.map(pairs, |[a, b]| {
        subgroup_member(&a.mul(&b), Subgroup::K1) && subgroup_member(&a.inv(), Subgroup::K1)
    });
    SweepReport::new("K1 closure", &res)
}

/// `classify(k rep k') = label` for random `k, k'` in `K0` and every label with `|n| <= range`.
pub fn classify_invariance_sweep(samples: usize, range: i64, seed: u64, exec: Exec) -> SweepReport {
    let mut labels = vec![CosetLabel::Y];
    for n in -range..=range {
        labels.extend([CosetLabel::T(n), CosetLabel::W(n)]);
    }
    for n in 1..=range as u32 {
        labels.extend([CosetLabel::HY(n), CosetLabel::YH(n), CosetLabel::YW(n), CosetLabel::WY(n), CosetLabel::YWY(n)]);
    }
    labels.retain(|l| classify_double_coset(&l.representative()).map(|d| d.label == *l).unwrap_or(false));
    let mut r = rng(seed);
    let mut jobs = Vec::new();
    for _ in 0..samples {
        for l in &labels {
            jobs.push((*l, random_k0(&mut r), random_k0(&mut r)));
        }
    }
    let res = exec.map(jobs, |(l, k, k2)| {
        let g = MetaplecticElt::product([&k, &l.representative(), &k2]);
        classify_double_coset(&g).map(|d| d.label == l).unwrap_or(false)
    });
    SweepReport::new("classifier K0-invariance", &res)
}

/// `gamma(t) gamma(s) = gamma(ts) (t, s)_2`.
pub fn gamma_sweep(samples: usize, seed: u64, gamma: GammaChar, exec: Exec) -> SweepReport {
    let mut r = rng(seed);
    let pairs: Vec<[Q; 2]> = (0..samples).map(|_| [random_rational(&mut r, 100), random_rational(&mut r, 100)]).collect();
    let res = exec.map(pairs, |[t, s]| {
        let lhs = &gamma.torus(&t).unwrap() * &gamma.torus(&s).unwrap();
        lhs == gamma.torus(&(&t * &s)).unwrap().scale(&q(hilbert2(&t, &s) as i64))
    });
    SweepReport::new("gamma multiplicativity", &res)
}
