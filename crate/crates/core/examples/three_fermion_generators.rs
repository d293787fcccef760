//! The seven generators on three fermions in three modes, evaluated on the
//! states that isolate each one.

use fermislocc::invariants::{three_tangle, InvariantId};
use fermislocc::maxent::{example_state, ExampleKind};

fn main() -> fermislocc::Result<()> {
    print!("{:<12}", "state");
    for id in InvariantId::GENERATORS {
        print!("{:>11}", id.name());
    }
    println!("{:>11}", "tau");
    for kind in ExampleKind::ALL {
        let psi = example_state(kind);
        print!("{:<12}", kind.name());
        for id in InvariantId::GENERATORS {
            print!("{:>11.2e}", id.evaluate(&psi)?.value.norm());
        }
        println!("{:>11.2e}", three_tangle(&psi)?.value.norm());
    }
    Ok(())
}
