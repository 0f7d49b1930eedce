//! Turns a bipartite graph into a hypergraph whose Potts partition function
//! equals a side-restricted count into `J_q`, then makes it uniform.

use homred::arith::rat;
use homred::convex::Side;
use homred::formats::write_hypergraph;
use homred::hardness::{build_jq_to_hyperpotts, jq_to_hyperpotts, uniformize};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let b = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?;
    let hg = build_jq_to_hyperpotts(&b, Side::Left)?;
    print!("{}", write_hypergraph(&hg));
    let mut ok = true;
    for q in [2, 3] {
        let (cert, report) = jq_to_hyperpotts(&b, q, Side::Left)?.verify()?;
        println!("q={q}: Z = {}, equal: {}", cert.value, report.pass);
        ok &= report.pass;
    }
    let red = uniformize(&hg, 2, &rat(1, 2))?;
    let (_, report) = red.verify()?;
    println!(
        "uniform: t = {}, s = {}, sandwich: {}",
        red.constant("t").unwrap(),
        red.constant("s").unwrap(),
        report.pass
    );
    Ok(ok && report.pass)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
