//! Proper colourings of a 2-stretch against the Potts partition function
//! at `gamma = 1/(q-2)`.

use homred::arith::{fmt_rational, uint_to_rat};
use homred::potts::{bqcol_gamma, count_proper_colourings, potts_graph, reduce_potts_to_bqcol, PottsParams};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let g = Graph::complete(4);
    let mut ok = true;
    for q in 3..=5 {
        let (stretched, scale) = reduce_potts_to_bqcol(&g, q)?;
        let cols = count_proper_colourings(&stretched, q)?;
        let z = potts_graph(&g, &PottsParams::new(q, bqcol_gamma(q))?);
        println!("K4 q={q}: colourings {cols}, scale {scale}, Z = {}", fmt_rational(&z));
        ok &= uint_to_rat(&cols) == uint_to_rat(&scale) * z;
    }
    Ok(ok)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
