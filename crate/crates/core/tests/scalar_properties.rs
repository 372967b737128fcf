use metahecke::scalars::hilbert::relevant_places;
use metahecke::scalars::{hilbert, Cyc8, Place, Poly, RatFunc, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational(height: i64) -> impl Strategy<Value = Q> {
    ((-height..=height).prop_filter("nonzero", |n| *n != 0), 1..=height).prop_map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d)))
}

fn cyc8(height: i64) -> impl Strategy<Value = Cyc8> {
    proptest::array::uniform4((-height..=height, 1..=height)).prop_map(|c| {
        let [a, b, e, f] = c.map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d)));
        Cyc8::new(a, b, e, f)
    })
}

fn places() -> [Place; 4] {
    [Place::two(), Place::prime(3), Place::prime(5), Place::Infinite]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn hilbert_is_bimultiplicative(a in rational(100), a2 in rational(100), b in rational(100)) {
        for v in places() {
            let lhs = hilbert(&(&a * &a2), &b, &v).unwrap();
            prop_assert_eq!(lhs, hilbert(&a, &b, &v).unwrap() * hilbert(&a2, &b, &v).unwrap());
        }
    }

    #[test]
    fn product_formula(a in rational(100), b in rational(100)) {
        let places = relevant_places([&a, &b]);
        prop_assert!(places.contains(&Place::Infinite));
        let prod: i32 = places.iter().map(|v| hilbert(&a, &b, v).unwrap()).product();
        prop_assert_eq!(prod, 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn steinberg_relations(a in rational(100)) {
        for v in places() {
            prop_assert_eq!(hilbert(&a, &-a.clone(), &v).unwrap(), 1);
            if a != Q::one() {
                prop_assert_eq!(hilbert(&a, &(Q::one() - &a), &v).unwrap(), 1);
            }
        }
    }

    #[test]
    fn cyc8_inverse(x in cyc8(20)) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.inv().unwrap(), Cyc8::one());
    }

    #[test]
    fn cyc8_ring_axioms(x in cyc8(10), y in cyc8(10), z in cyc8(10)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }
}

/// Power series quotient by the recursion `num = den * s`, independent of `RatFunc::series`.
fn series_by_convolution(num: &Poly, den: &Poly, order: usize) -> Vec<Cyc8> {
    let d0 = den.coeff(0).inv().unwrap();
    let mut s: Vec<Cyc8> = Vec::new();
    for k in 0..=order {
        let mut acc = num.coeff(k);
        for i in 1..=k {
            acc = &acc - &(&den.coeff(i) * &s[k - i]);
        }
        s.push(&acc * &d0);
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn ratfunc_series_is_the_convolution_quotient(
        num in proptest::collection::vec(cyc8(5), 1..4),
        den_tail in proptest::collection::vec(cyc8(5), 0..3),
        d0 in cyc8(5),
    ) {
        prop_assume!(!d0.is_zero());
        let mut den = vec![d0];
        den.extend(den_tail);
        let (num, den) = (Poly::new(num), Poly::new(den));
        prop_assume!(!num.is_zero());
        let f = RatFunc::new(num.clone(), den.clone()).unwrap();
        prop_assert_eq!(f.series(30).unwrap(), series_by_convolution(&num, &den, 30));
    }
}

#[test]
fn zero_arguments_are_rejected() {
    assert!(hilbert(&Q::zero(), &Q::one(), &Place::two()).is_err());
}
