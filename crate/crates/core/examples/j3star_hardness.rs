//! Counts homomorphisms from the unweighted cut gadget into `J3*` and reads
//! the number of minimum multiterminal cuts back off the result.

use std::time::Instant;

use homred::hardness::{build_cut_to_j3star, multiterminal_cuts, recovered};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let g = Graph::star(3);
    let cut = multiterminal_cuts(&g, 1, 2, 3)?;
    let red = build_cut_to_j3star(&cut)?;
    println!("b = {}, N = {}", cut.b, cut.count);
    println!("s = {}, r = {}", red.constant("s").unwrap(), red.constant("r").unwrap());
    println!("instance: {} vertices, {} edges", red.shape().vertices, red.shape().edges);

    let start = Instant::now();
    let (cert, report) = red.verify()?;
    println!("Z has {} bits", cert.value.0.numer().bits());
    println!("sandwich holds: {}", report.pass);
    println!("floor(Z/Z*) = {}", recovered(&cert));
    println!("typical share: {} of {} bits", cert.counters["Z^t"].0.numer().bits(), cert.value.0.numer().bits());
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(report.pass)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
