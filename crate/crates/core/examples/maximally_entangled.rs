//! Maximally entangled states: every single-mode reduced density matrix is
//! I/4. Includes the cyclic construction on four and eight modes and a
//! six-term state that cannot be made maximal.

use fermislocc::fock::StateVector;
use fermislocc::invariants::reduced_density_matrix;
use fermislocc::maxent::{
    cyclic_max_state, example_state, is_maximally_entangled, odd_attractive_state, two_fermion_max, CyclicSpec,
    ExampleKind,
};

fn show(name: &str, psi: &StateVector) -> fermislocc::Result<()> {
    let s = psi.sector();
    let spectrum = reduced_density_matrix(psi, 0)?.eigenvalues();
    println!(
        "{name:<14} {} modes, {} fermions, maximal: {:<5}  mode-0 spectrum {spectrum:.3?}",
        s.n_modes(),
        s.n_particles(),
        is_maximally_entangled(psi, 1e-12)
    );
    Ok(())
}

fn main() -> fermislocc::Result<()> {
    show("two_fermion", &two_fermion_max())?;
    for kind in ExampleKind::ALL {
        show(kind.name(), &example_state(kind))?;
    }
    for r in [1, 2] {
        let spec = CyclicSpec::new(1, r)?;
        show(&format!("cyclic r={r}"), &cyclic_max_state(spec)?)?;
    }
    show("odd_attractive", &odd_attractive_state())?;

    match cyclic_max_state(CyclicSpec::new(1, 3)?) {
        Ok(_) => println!("r = 3 built"),
        Err(e) => println!("r = 3: {e}"),
    }
    Ok(())
}
