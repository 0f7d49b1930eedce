//! Evaluates the Potts partition function two ways: by summing over spin
//! assignments and by the random-cluster expansion over edge subsets.

use homred::arith::{fmt_rational, rat};
use homred::potts::{potts_graph, potts_hypergraph, random_cluster_oracle, PottsParams};
use homred::{Graph, Hypergraph};

pub fn run_example() -> homred::Result<bool> {
    let g = Graph::cycle(5)?;
    let mut ok = true;
    for q in 1..=4 {
        for gamma in [rat(1, 2), rat(1, 1), rat(3, 1)] {
            let p = PottsParams::new(q, gamma.clone())?;
            let z = potts_graph(&g, &p);
            let rc = random_cluster_oracle(&g, &p)?;
            println!("C5 q={q} gamma={:<4} Z = {}", fmt_rational(&gamma), fmt_rational(&z));
            ok &= z == rc;
        }
    }
    let hg = Hypergraph::new(4, [vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]])?;
    let z = potts_hypergraph(&hg, &PottsParams::new(2, rat(1, 1))?)?;
    println!("hypergraph q=2 gamma=1 Z = {}", fmt_rational(&z));
    Ok(ok)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
