//! Runs every example through its `run_example` entry point.

#[allow(dead_code)]
#[path = "../examples/bqcol.rs"]
mod bqcol;
#[allow(dead_code)]
#[path = "../examples/classify_trees.rs"]
mod classify_trees;
#[allow(dead_code)]
#[path = "../examples/convex_reduction.rs"]
mod convex_reduction;
#[allow(dead_code)]
#[path = "../examples/count_homomorphisms.rs"]
mod count_homomorphisms;
#[allow(dead_code)]
#[path = "../examples/csp_weight_gadget.rs"]
mod csp_weight_gadget;
#[allow(dead_code)]
#[path = "../examples/j3star_hardness.rs"]
mod j3star_hardness;
#[allow(dead_code)]
#[path = "../examples/junction_to_hyperpotts.rs"]
mod junction_to_hyperpotts;
#[allow(dead_code)]
#[path = "../examples/multiterminal_cut_gadget.rs"]
mod multiterminal_cut_gadget;
#[allow(dead_code)]
#[path = "../examples/potts_and_random_cluster.rs"]
mod potts_and_random_cluster;
#[allow(dead_code)]
#[path = "../examples/potts_to_junction.rs"]
mod potts_to_junction;
#[allow(dead_code)]
#[path = "../examples/walk_table.rs"]
mod walk_table;
#[allow(dead_code)]
#[path = "../examples/weight_enumerator.rs"]
mod weight_enumerator;

#[test]
fn bqcol_runs() {
    assert!(bqcol::run_example().unwrap());
}

#[test]
fn classify_trees_runs() {
    assert!(classify_trees::run_example().unwrap());
}

#[test]
fn convex_reduction_runs() {
    assert!(convex_reduction::run_example().unwrap());
}

#[test]
fn count_homomorphisms_runs() {
    assert!(count_homomorphisms::run_example().unwrap());
}

#[test]
fn csp_weight_gadget_runs() {
    assert!(csp_weight_gadget::run_example().unwrap());
}

#[test]
fn j3star_hardness_runs() {
    assert!(j3star_hardness::run_example().unwrap());
}

#[test]
fn junction_to_hyperpotts_runs() {
    assert!(junction_to_hyperpotts::run_example().unwrap());
}

#[test]
fn multiterminal_cut_gadget_runs() {
    assert!(multiterminal_cut_gadget::run_example().unwrap());
}

#[test]
fn potts_and_random_cluster_runs() {
    assert!(potts_and_random_cluster::run_example().unwrap());
}

#[test]
fn potts_to_junction_runs() {
    assert!(potts_to_junction::run_example().unwrap());
}

#[test]
fn walk_table_runs() {
    assert!(walk_table::run_example().unwrap());
}

#[test]
fn weight_enumerator_runs() {
    assert!(weight_enumerator::run_example().unwrap());
}
