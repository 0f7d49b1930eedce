//! Sorts a handful of small trees into the three complexity classes and
//! shows the induced `J3` that witnesses hardness.

use homred::pattern::{classify_tree, find_induced_j3, TreeClass};
use homred::target::{build_target_tree, TreeKind};
use homred::Graph;

pub fn run_example() -> homred::Result<bool> {
    let trees = [
        ("K_{1,4}", Graph::star(4)),
        ("P4", Graph::path(4)),
        ("P7", Graph::path(7)),
        ("J3", build_target_tree(TreeKind::Junction(3))?.graph),
        ("J3*", build_target_tree(TreeKind::J3Star)?.graph),
    ];
    let mut ok = true;
    for (name, h) in &trees {
        let class = classify_tree(h)?;
        print!("{name:<8} {:?}", class);
        if class == TreeClass::ContainsJ3 {
            print!("  J3 at {:?}", find_induced_j3(h)?.vertices());
        }
        println!();
        ok &= (class == TreeClass::ContainsJ3) == find_induced_j3(h).is_ok();
    }
    Ok(ok)
}

fn main() -> homred::Result<()> {
    run_example()?;
    Ok(())
}
