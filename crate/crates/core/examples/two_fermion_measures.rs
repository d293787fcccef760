//! Two fermions in two modes: the degree-4 invariant, fermionic concurrence
//! and subsystem entropy, and a local unitary that changes the Slater rank.

use std::f64::consts::FRAC_PI_4;

use fermislocc::fock::StateVector;
use fermislocc::invariants::{fermionic_concurrence, i0, reduced_density_matrix};
use fermislocc::maxent::two_fermion_max;
use fermislocc::slocc::{apply, exponentiate, Generator, GeneratorCoefficients, GroupElement};
use num_complex::Complex64;

fn report(name: &str, psi: &StateVector) -> fermislocc::Result<()> {
    let inv = i0(psi)?;
    println!(
        "{name:>5}: I0 = {:+.4}, |I0|^(1/2) = {:.4}, concurrence = {:.4}, entropy = {:.4}",
        inv.value.re,
        inv.monotone(),
        fermionic_concurrence(psi)?,
        reduced_density_matrix(psi, 0)?.entropy()
    );
    Ok(())
}

fn main() -> fermislocc::Result<()> {
    let r = |x: f64| Complex64::new(x, 0.0);
    let psi1 = StateVector::from_labels(
        &[("du", r(0.5)), ("ud", r(-0.5)), ("D0", r(-0.5)), ("0D", r(-0.5))],
        false,
    )?;
    let psi3 = StateVector::from_labels(&[("ud", r(1.0)), ("du", r(1.0))], true)?;
    let psi4 = StateVector::from_labels(&[("D0", r(1.0)), ("0D", r(1.0))], true)?;

    // exp(iπ/4 λ15) on mode A, up to a global phase, flips the sign of |◇⟩
    // there: an allowed local unitary that turns Slater rank 1 into 2.
    let c = GeneratorCoefficients::single(Generator::L15, Complex64::new(0.0, FRAC_PI_4));
    let u = GroupElement::single(2, 0, exponentiate(&c));
    let psi2 = apply(&u, &psi1)?.scaled(Complex64::from_polar(1.0, -FRAC_PI_4));

    report("max", &two_fermion_max())?;
    report("psi1", &psi1)?;
    report("psi2", &psi2)?;
    report("psi3", &psi3)?;
    report("psi4", &psi4)?;
    Ok(())
}
