//! Homomorphisms into `P4` count independent sets of a bipartite graph
//! twice over; this checks that on a few graphs by brute force.

use homred::hom::count_hom;
use homred::Graph;
use num_bigint::BigUint;

fn independent_sets(g: &Graph) -> u64 {
    (0u64..1 << g.n())
        .filter(|s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .count() as u64
}

pub fn run_example() -> homred::Result<bool> {
    let p4 = Graph::path(4);
    let mut ok = true;
    for (name, g) in [
        ("K2", Graph::path(2)),
        ("C6", Graph::cycle(6)?),
        ("K_{3,3}", Graph::complete_bipartite(3, 3)),
        ("P5", Graph::path(5)),
    ] {
        let hom = count_hom(&g, &p4);
        let is = independent_sets(&g);
        println!("{name:<8} hom(G, P4) = {hom:<6} independent sets = {is}");
        ok &= hom == BigUint::from(2 * is);
    }
    Ok(ok)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
