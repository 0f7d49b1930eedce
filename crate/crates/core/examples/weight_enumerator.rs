//! Builds the linear code attached to a graph and checks the Potts partition
//! function against its weight enumerator.

use homred::arith::rat;
use homred::code::{build_potts_code, verify_with, weight_enumerator};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let g = Graph::cycle(4)?;
    let mut ok = true;
    for (p, k) in [(3, 1), (2, 2)] {
        let sys = build_potts_code(&g, p, k)?;
        let code = sys.code();
        println!("p={p} k={k}: code length {}, rank {}", code.len(), code.rank());
        println!("  weights {:?}", code.weight_distribution()?);
        for lambda in [rat(1, 2), rat(1, 3)] {
            let rep = verify_with(&sys, &lambda)?;
            println!("  lambda={lambda}: W = {}, Z = {}, pass {}", weight_enumerator(&code, &lambda)?, rep.potts, rep.pass);
            ok &= rep.pass;
        }
        ok &= sys.check_q_to_one()?;
    }
    Ok(ok)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
