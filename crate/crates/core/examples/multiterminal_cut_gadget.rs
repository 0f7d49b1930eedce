//! Counts minimum multiterminal cuts of a small graph, then recovers the
//! count from a weighted homomorphism sum into `J3`.

use homred::hardness::{build_cut_to_whom, multiterminal_cuts, recovered};
use homred::pattern::find_induced_j3;
use homred::target::{build_target_tree, TreeKind};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let g = Graph::star(3);
    let cut = multiterminal_cuts(&g, 1, 2, 3)?;
    println!("b = {}, N = {}, cuts = {:?}", cut.b, cut.count, cut.cuts);
    let mut ok = true;
    for q in [3, 4] {
        let h = build_target_tree(TreeKind::Junction(q))?.graph;
        let red = build_cut_to_whom(&cut, &h, &find_induced_j3(&h)?)?;
        let (cert, report) = red.verify()?;
        println!(
            "J{q}: s = {}, Z/Z* in [{}, {}]: {}, floor = {}",
            red.constant("s").unwrap(),
            report.lower,
            report.upper,
            report.pass,
            recovered(&cert)
        );
        ok &= report.pass && recovered(&cert) == 3.into();
    }
    Ok(ok)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
