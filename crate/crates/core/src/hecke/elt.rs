//! Elements of the Hecke algebra in the `T(n), U(n)` basis and their product.
//!
//! Every basis element is an alternating word in the generators `U0, U1`:
//! `T(n) = (U0 U1)^n`, `T(-n) = (U1 U0)^n`, `U(n) = U1 (U0 U1)^(n-1)` for `n >= 1`
//! and `U(-k) = (U0 U1)^k U0` for `k >= 0`. Products concatenate words and
//! resolve collisions with `U0^2 = sqrt2 U0 + 4` and `U1^2 = 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::rational::q;
use crate::scalars::Cyc8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n")]
pub enum BasisLabel {
    T(i64),
    U(i64),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::T(n) => write!(f, "T({n})"),
            BasisLabel::U(n) => write!(f, "U({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    U0,
    U1,
}

impl Letter {
    fn other(self) -> Letter {
        match self {
            Letter::U0 => Letter::U1,
            Letter::U1 => Letter::U0,
        }
    }
}

fn alternating(first: Letter, len: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(len);
    let mut l = first;
    for _ in 0..len {
        out.push(l);
        l = l.other();
    }
    out
}

/// The reduced word of a basis element.
pub fn word_of(label: BasisLabel) -> Vec<Letter> {
    match label {
        BasisLabel::T(n) if n >= 0 => alternating(Letter::U0, 2 * n as usize),
        BasisLabel::T(n) => alternating(Letter::U1, 2 * n.unsigned_abs() as usize),
        BasisLabel::U(n) if n >= 1 => alternating(Letter::U1, 2 * n as usize - 1),
        BasisLabel::U(n) => alternating(Letter::U0, 2 * n.unsigned_abs() as usize + 1),
    }
}

/// Inverse of [`word_of`]; `None` if the word is not alternating.
pub fn label_of_word(word: &[Letter]) -> Option<BasisLabel> {
    if word.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let len = word.len() as i64;
    Some(match (word.first(), len % 2) {
        (None, _) => BasisLabel::T(0),
        (Some(Letter::U0), 0) => BasisLabel::T(len / 2),
        (Some(Letter::U1), 0) => BasisLabel::T(-len / 2),
        (Some(Letter::U1), _) => BasisLabel::U((len + 1) / 2),
        (Some(Letter::U0), _) => BasisLabel::U(-(len - 1) / 2),
    })
}

/// Finite linear combination of basis elements with coefficients in Q(zeta_8).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<BasisLabel, Cyc8>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        HeckeElt::default()
    }

    pub fn one() -> Self {
        HeckeElt::basis(BasisLabel::T(0))
    }

    pub fn basis(l: BasisLabel) -> Self {
        HeckeElt::term(l, Cyc8::one())
    }

    pub fn term(l: BasisLabel, c: Cyc8) -> Self {
        let mut e = HeckeElt::zero();
        e.add_term(l, c);
        e
    }

    pub fn t(n: i64) -> Self {
        HeckeElt::basis(BasisLabel::T(n))
    }

    pub fn u(n: i64) -> Self {
        HeckeElt::basis(BasisLabel::U(n))
    }

    pub fn scalar(c: Cyc8) -> Self {
        HeckeElt::term(BasisLabel::T(0), c)
    }

    pub fn add_term(&mut self, l: BasisLabel, c: Cyc8) {
        let v = self.terms.get(&l).map_or_else(|| c.clone(), |x| x + &c);
        if v.is_zero() {
            self.terms.remove(&l);
        } else {
            self.terms.insert(l, v);
        }
    }

    pub fn coeff(&self, l: BasisLabel) -> Cyc8 {
        self.terms.get(&l).cloned().unwrap_or_else(Cyc8::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, &Cyc8)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<BasisLabel> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(*l, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &HeckeElt) -> HeckeElt {
        self.add(&o.scale(&Cyc8::from_int(-1)))
    }

    pub fn scale(&self, c: &Cyc8) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (l, x) in &self.terms {
            out.add_term(*l, x * c);
        }
        out
    }

    pub fn mul(&self, o: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (la, ca) in &self.terms {
            let wa = word_of(*la);
            for (lb, cb) in &o.terms {
                let c = ca * cb;
                for (k, w) in mul_words(&wa, &word_of(*lb)) {
                    out.add_term(label_of_word(&w).expect("reduced product"), &c * &k);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> HeckeElt {
        (0..e).fold(HeckeElt::one(), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, o: &HeckeElt) -> HeckeElt {
        self.mul(o).sub(&o.mul(self))
    }

    /// Largest `|n|` in the support.
    pub fn height(&self) -> i64 {
        self.terms
            .keys()
            .map(|l| match l {
                BasisLabel::T(n) | BasisLabel::U(n) => n.abs(),
            })
            .max()
            .unwrap_or(0)
    }
}

/// Product of two reduced words as a combination of reduced words.
pub fn mul_words(a: &[Letter], b: &[Letter]) -> Vec<(Cyc8, Vec<Letter>)> {
    match (a.last(), b.first()) {
        (Some(&s), Some(&t)) if s == t => {
            let (a1, b1) = (&a[..a.len() - 1], &b[1..]);
            match s {
                Letter::U1 => mul_words(a1, b1),
                Letter::U0 => {
                    let mut out = vec![(Cyc8::sqrt2(), [a, b1].concat())];
                    for (c, w) in mul_words(a1, b1) {
                        out.push((c.scale(&q(4)), w));
                    }
                    out
                }
            }
        }
        _ => vec![(Cyc8::one(), [a, b].concat())],
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c})*{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    label: BasisLabel,
    coef: Cyc8,
}

#[derive(Serialize, Deserialize)]
struct Terms {
    terms: Vec<Term>,
}

impl Serialize for HeckeElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(l, c)| Term { label: *l, coef: c.clone() }).collect();
        Terms { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut e = HeckeElt::zero();
        for t in Terms::deserialize(d)?.terms {
            e.add_term(t.label, t.coef);
        }
        Ok(e)
    }
}
