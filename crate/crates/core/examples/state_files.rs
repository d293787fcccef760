//! Reading and writing the plain-text state format, and the error a
//! malformed file produces.

use fermislocc::invariants::InvariantId;
use fermislocc::statefile::{parse_state_file, write_state_file};

const GHZ_LIKE: &str = "\
# aligned spins, equal weights
uuu 1 0
ddd 0 1
";

fn main() -> fermislocc::Result<()> {
    let psi = parse_state_file(GHZ_LIKE, true)?;
    print!("{}", write_state_file(&psi));
    for name in ["I1", "I2", "IABC1"] {
        let id = InvariantId::from_name(name).unwrap();
        println!("{name} = {:.4}", id.evaluate(&psi)?.value);
    }
    let tau = fermislocc::invariants::three_tangle(&psi)?;
    println!("2|tau|^(1/2) = {:.4}", 2.0 * tau.value.norm().sqrt());

    for bad in ["uu 1 0\nuud 1 0", "uu 1 0\nux 0 1", "uu 1"] {
        match parse_state_file(bad, true) {
            Ok(_) => println!("accepted {bad:?}"),
            Err(e) => println!("rejected: {e}"),
        }
    }
    Ok(())
}
