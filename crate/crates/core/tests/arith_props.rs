mod common;

use common::{gaussian, nonzero_gaussian};
use proptest::prelude::*;
use supm::arith::GR;

proptest! {
    #[test]
    fn addition_is_an_abelian_group(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &GR::zero(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn multiplication_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &GR::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_gaussian(), b in gaussian()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!(&(&b / &a) * &a, b);
    }

    #[test]
    fn conjugation_and_norm(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(GR::from_rational(a.norm()), &a * &a.conj());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn text_round_trip(a in gaussian()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<GR>().unwrap(), a.clone());
        prop_assert_eq!(supm::parser::parse_constant(&text).unwrap(), a);
    }

    #[test]
    fn square_roots_are_exact(a in gaussian()) {
        let sq = &a * &a;
        let r = sq.sqrt().expect("perfect square");
        prop_assert_eq!(&r * &r, sq);
    }
}

#[test]
fn zero_has_no_inverse() {
    assert!(GR::zero().inv().is_err());
    assert!(GR::one().checked_div(&GR::zero()).is_err());
}
