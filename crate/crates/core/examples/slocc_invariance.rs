//! Apply random determinant-one local operators and watch the invariants stay
//! put while the amplitudes and the norm move.

use fermislocc::checks::{random_group_for, random_state_for};
use fermislocc::invariants::InvariantId;
use fermislocc::slocc::{apply, DEFAULT_SCALE};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fermislocc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    println!(
        "{:<7} {:>12} {:>12} {:>10}",
        "inv", "|I(psi)|", "|I(g psi)|", "norm(g psi)"
    );
    for id in InvariantId::ALL {
        let psi = random_state_for(id, &mut rng)?;
        let g = random_group_for(id, DEFAULT_SCALE, &mut rng);
        let moved = apply(&g, &psi)?;
        println!(
            "{:<7} {:>12.6e} {:>12.6e} {:>10.4}",
            id.name(),
            id.evaluate(&psi)?.value.norm(),
            id.evaluate(&moved)?.value.norm(),
            moved.norm()
        );
    }
    Ok(())
}
