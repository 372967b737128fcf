use metahecke::hecke::{center, parse_element, HeckeElt, PSModule};
use metahecke::intertwiner::{character_sum, kernel_points, m_closed_form, Eigen};
use metahecke::metaplectic::GammaChar;
use metahecke::scalars::{Cyc8, Poly, RatFunc, Q};
use num_bigint::BigInt;
use proptest::prelude::*;

fn labels(range: i64) -> Vec<HeckeElt> {
    (-range..=range).flat_map(|n| [HeckeElt::t(n), HeckeElt::u(n)]).collect()
}

#[test]
fn multiplication_is_associative() {
    let ls = labels(3);
    for a in &ls {
        for b in &ls {
            let ab = a.mul(b);
            for c in &ls {
                assert_eq!(ab.mul(c), a.mul(&b.mul(c)), "({a})({b})({c})");
            }
        }
    }
}

#[test]
fn center_is_central() {
    let z = center();
    for e in labels(5) {
        assert_eq!(z.mul(&e), e.mul(&z), "{e}");
    }
}

#[test]
fn principal_series_trace_and_determinant_symbolically() {
    let m = PSModule::symbolic();
    let u = &m.u1;
    assert!(u.trace().is_zero());
    let det = u.get(0, 0).mul(u.get(1, 1)).sub(&u.get(0, 1).mul(u.get(1, 0)));
    assert_eq!(det, RatFunc::constant(Cyc8::from_int(-1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn principal_series_trace_and_determinant(n in -50i64..=50, d in 1i64..=50, root2 in any::<bool>()) {
        prop_assume!(n != 0);
        let mut x = Cyc8::from_q(Q::new(BigInt::from(n), BigInt::from(d)));
        if root2 {
            x = &x * &Cyc8::sqrt2();
        }
        let m = PSModule::numeric(x);
        prop_assert!(m.relations_hold());
        let u = &m.u1;
        prop_assert!(u.trace().is_zero());
        let det = u.get(0, 0).mul(u.get(1, 1)).sub(&u.get(0, 1).mul(u.get(1, 0)));
        prop_assert_eq!(det, RatFunc::constant(Cyc8::from_int(-1)));
    }

    #[test]
    fn parsed_sums_are_linear(a in -20i64..=20, b in -20i64..=20, m in -4i64..=4, n in -4i64..=4) {
        let s = format!("{a}*T({m}) + {b}*U({n})");
        let expected = HeckeElt::t(m).scale(&Cyc8::from_int(a)).add(&HeckeElt::u(n).scale(&Cyc8::from_int(b)));
        prop_assert_eq!(parse_element(&s).unwrap(), expected);
    }
}

#[test]
fn character_sum_depends_on_parity() {
    for gamma in [GammaChar::PlusI, GammaChar::MinusI] {
        let even = character_sum(0, gamma).unwrap();
        let odd = character_sum(1, gamma).unwrap();
        for m in 0..=20 {
            assert_eq!(character_sum(m, gamma).unwrap(), if m % 2 == 0 { even.clone() } else { odd.clone() });
        }
    }
}

#[test]
fn closed_forms_have_only_the_pole_at_x_squared_one() {
    let x2_minus_1 = Poly::new(vec![Cyc8::from_int(-1), Cyc8::from_int(0), Cyc8::from_int(1)]);
    let half = Cyc8::inv_sqrt2();
    for gamma in [GammaChar::PlusI, GammaChar::MinusI] {
        for j in [Eigen::Two, Eigen::MinusOne] {
            let c = m_closed_form(j, gamma);
            assert_eq!(c.den(), &x2_minus_1);
            assert!(c.eval(&half).is_some());
            assert!(c.eval(&Cyc8::from_int(1)).is_none());
        }
    }
}

#[test]
fn product_with_inverse_argument_is_symmetric() {
    for gamma in [GammaChar::PlusI, GammaChar::MinusI] {
        for j in [Eigen::Two, Eigen::MinusOne] {
            let c = m_closed_form(j, gamma);
            let p = c.mul(&c.at_inverse());
            assert_eq!(p.at_inverse(), p);
        }
        assert_eq!(kernel_points(Eigen::MinusOne, gamma).len(), 2);
        assert!(kernel_points(Eigen::Two, gamma).is_empty());
    }
}
