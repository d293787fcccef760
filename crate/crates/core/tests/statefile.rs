use fermislocc::fock::{Sector, StateVector};
use fermislocc::statefile::{parse_state_file, write_state_file};
use num_complex::Complex64;
use proptest::prelude::*;

fn sector() -> impl Strategy<Value = Sector> {
    prop_oneof![Just((2, 2)), Just((3, 3)), Just((3, 2)), Just((2, 1)), Just((4, 4))]
        .prop_map(|(n, m)| Sector::new(n, m).unwrap())
}

fn state() -> impl Strategy<Value = StateVector> {
    sector().prop_flat_map(|s| {
        let dim = s.dim();
        let amp = prop_oneof![
            1 => Just(Complex64::new(0.0, 0.0)),
            4 => (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(re, im)| Complex64::new(re, im)),
            1 => (-1e-200f64..1e-200).prop_map(|re| Complex64::new(re, -0.0)),
        ];
        prop::collection::vec(amp, dim).prop_map(move |a| StateVector::from_vec(&s, a).unwrap())
    })
}

proptest! {
    #[test]
    fn write_then_parse_is_exact(psi in state()) {
        prop_assume!(psi.norm_sqr() > 0.0);
        let back = parse_state_file(&write_state_file(&psi), false).unwrap();
        prop_assert_eq!(back.sector(), psi.sector());
        prop_assert_eq!(back.amplitudes(), psi.amplitudes());
    }

    #[test]
    fn normalized_parse_has_unit_norm(psi in state()) {
        prop_assume!(psi.norm_sqr() > 1e-100);
        let back = parse_state_file(&write_state_file(&psi), true).unwrap();
        prop_assert!((back.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn zero_state_keeps_its_sector() {
    let s = Sector::new(3, 2).unwrap();
    let text = write_state_file(&StateVector::zero(&s));
    let back = parse_state_file(&text, false).unwrap();
    assert_eq!(back.sector(), &s);
    assert!(parse_state_file(&text, true).is_err());
}

#[test]
fn complex_amplitudes_against_a_direct_reading() {
    let psi = parse_state_file("uu 0.5 0\nud 0 0.5", false).unwrap();
    // Hand reading of the two lines, in basis order uu, ud, du, dd, 0D, D0.
    let expected = [
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ];
    assert_eq!(psi.amplitudes(), expected);
}
