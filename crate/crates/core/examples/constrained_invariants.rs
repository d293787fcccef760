//! Invariants that exist only under constraints on the support, such as
//! strong repulsion (no double occupancy) or a localized particle in mode A.

use fermislocc::checks::{bell_local_state, random_state_for};
use fermislocc::invariants::{Family, InvariantId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fermislocc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for family in [
        Family::Repulsive,
        Family::AttractivePair,
        Family::Attractive4,
        Family::LocalizedA,
    ] {
        println!("{family:?}:");
        for id in family.members() {
            // Members of one family can differ in their support constraint.
            let psi = random_state_for(id, &mut rng)?;
            let v = id.evaluate(&psi)?;
            println!(
                "  {:<7} degree {:>2}  monotone {:.5}",
                id.name(),
                v.degree,
                v.monotone()
            );
        }
    }

    // A hardcore state that is Bell-local on mode B has no repulsive invariant.
    let local = bell_local_state(3, 2, 1, false, &mut rng)?;
    for id in Family::Repulsive.members() {
        println!(
            "Bell-local on B: {} = {:.1e}",
            id.name(),
            id.evaluate(&local)?.value.norm()
        );
    }
    // Off-support states are rejected rather than silently evaluated.
    let full = random_state_for(InvariantId::from_name("I1").unwrap(), &mut rng)?;
    if let Err(e) = InvariantId::from_name("IAL").unwrap().evaluate(&full) {
        println!("IAL on a generic state: {e}");
    }
    Ok(())
}
