use metahecke::forms::operators::{t4plus, tp2};
use metahecke::forms::space::{restrict, w4_coords, Ambient, SpaceKind, Spaces};
use metahecke::forms::{space_basis, QExpansion};
use metahecke::linalg::Matrix;
use metahecke::par::Exec;
use metahecke::scalars::Q;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rationals(len: usize) -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec((-30i64..=30, 1i64..=12), len).prop_map(|v| v.into_iter().map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn coordinates_round_trip(c in rationals(4)) {
        let amb = Ambient::new(13, 40).unwrap();
        prop_assert_eq!(amb.coords_of(&amb.expand(&c)).unwrap(), c);
    }

    #[test]
    fn fricke_substitution_is_an_involution(c in rationals(6)) {
        prop_assert_eq!(w4_coords(&w4_coords(&c)), c);
    }

    #[test]
    fn series_product_is_commutative_and_associative(a in rationals(12), b in rationals(12), c in rationals(12)) {
        let (a, b, c) = (QExpansion::new(a, 11), QExpansion::new(b, 11), QExpansion::new(c, 11));
        prop_assert_eq!(a.mul_with(&b, Exec::Seq), b.mul_with(&a, Exec::Par));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}

#[test]
fn monomials_have_full_rank() {
    for r in (9..=25).step_by(2) {
        assert!(space_basis(SpaceKind::M, r, 100).unwrap().independent(), "r = {r}");
    }
}

#[test]
fn odd_hecke_operators_commute_with_w() {
    for r in [13, 17] {
        let s = Spaces::new(r, 200).unwrap();
        let w = restrict(&s.w, &s.cusp).unwrap();
        for p in [3, 5] {
            let t = restrict(&s.ambient.tp2_matrix(p).unwrap(), &s.cusp).unwrap();
            assert_eq!(t.mul(&w), w.mul(&t), "r = {r}, p = {p}");
        }
    }
}

#[test]
fn odd_hecke_operators_commute_with_t4plus_on_the_plus_space() {
    for r in [13, 17] {
        let s = Spaces::new(r, 400).unwrap();
        for f in s.space(SpaceKind::SPlus).unwrap().basis {
            for p in [3, 5] {
                let a = t4plus(&tp2(&f.qexp, r, p).unwrap(), r).unwrap();
                let b = tp2(&t4plus(&f.qexp, r).unwrap(), r, p).unwrap();
                let n = a.precision.min(b.precision);
                assert_eq!(a.truncate(n), b.truncate(n), "r = {r}, p = {p}");
            }
        }
    }
}

#[test]
fn fricke_squares_to_one_and_w_is_quadratic() {
    for r in [9, 13, 17, 21] {
        let s = Spaces::new(r, 100).unwrap();
        let d = s.ambient.dim();
        assert_eq!(s.w4.mul(&s.w4), Matrix::identity(d));
        let w = restrict(&s.w, &s.cusp).unwrap();
        let n = w.rows();
        let two = Matrix::scalar(n, &Q::from_integer(2.into()));
        assert!(w.add(&Matrix::identity(n)).mul(&w.sub(&two)).is_zero(), "r = {r}");
    }
}

#[test]
fn subspaces_nest() {
    let s = Spaces::new(17, 100).unwrap();
    let cusp = Matrix::from_cols(&s.cusp);
    for v in s.plus.iter().chain(&s.minus) {
        assert!(cusp.solve(v).is_some());
    }
    let at_infinity = Matrix::from_rows(vec![s.ambient.expand(&s.cusp[0]).coeffs[..1].to_vec()]);
    assert!(at_infinity.is_zero());
}
