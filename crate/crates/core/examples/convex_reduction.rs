//! Weighted homomorphisms to a `J3`-free tree, computed through a convex
//! ordering of the target and a weighted implication CSP per side.

use homred::arith::{fmt_rational, rat};
use homred::convex::{convex_order, whom_via_csp};
use homred::hom::{count_whom, WeightTable};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let h = Graph::path(6);
    let ord = convex_order(&h)?;
    println!("U = {:?}, U' = {:?}", ord.u, ord.u_prime);
    println!("m = {:?}, M = {:?}, m' = {:?}, M' = {:?}", ord.m, ord.big_m, ord.m_prime, ord.big_m_prime);

    let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)])?;
    let rows = (0..g.n())
        .map(|v| (0..h.n()).map(|c| rat(1 + ((v + 2 * c) % 3) as i64, 2)).collect())
        .collect();
    let w = WeightTable::new(h.n(), rows)?;
    let direct = count_whom(&g, &h, &w)?;
    let via = whom_via_csp(&g, &w, &h)?;
    println!("direct {} via CSP {}", fmt_rational(&direct), fmt_rational(&via));
    Ok(direct == via)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
