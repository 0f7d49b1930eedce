use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::certificate::InstanceShape;
use super::{Gadget, GraphData, Materialised, Reduction, Source};
use crate::arith::{rat, uint_to_rat};
use crate::error::{Error, Result};
use crate::graph::{two_stretch, Graph};
use crate::hom::{adjacency_table, EdgeWeightedInstance};
use crate::target::{build_target_tree, TreeKind};

/// Smallest `s` with `8 q (q+1)^(n+m) <= (q/2)^s`, compared as
/// `8 q (q+1)^(n+m) 2^s <= q^s`.
pub fn tocol_s(q: usize, n: usize, m: usize) -> u64 {
    let lhs = BigUint::from(8 * q) * BigUint::from(q + 1).pow((n + m) as u32);
    let q = BigUint::from(q);
    let mut s = 0u64;
    let mut two_s = BigUint::from(1u32);
    let mut q_s = BigUint::from(1u32);
    while &lhs * &two_s > q_s {
        s += 1;
        two_s <<= 1;
        q_s *= &q;
    }
    s
}

/// `G''`: the 2-stretch of `G`, a vertex `v0` joined to vertex 0 of `G`, and
/// `s` leaves at `v0`. Typical homomorphisms send `v0` to `w`.
pub fn build_potts_to_jq(g: &Graph, q: usize) -> Result<Reduction> {
    if q <= 2 {
        return Err(Error::Gadget("junction gadget needs q > 2".into()));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Gadget("potts instance must be connected and nonempty".into()));
    }
    let jq = build_target_tree(TreeKind::Junction(q))?;
    let s = tocol_s(q, g.n(), g.m());
    let (stretched, _) = two_stretch(g);
    let adj = adjacency_table::<BigUint>(&jq.graph);
    let mut inst = EdgeWeightedInstance::<BigUint>::homomorphisms(&stretched, &jq.graph);
    let v0 = inst.add_vertex();
    inst.add_edge(v0, 0, adj.clone(), 1)?;
    inst.add_pendant_path(v0, 1, adj, s)?;
    let (n, m) = (g.n() as u64, g.m() as u64);
    Ok(Reduction {
        source: Source::PottsToJq {
            graph: GraphData::from(g),
            q,
        },
        constants: BTreeMap::from([("s".to_string(), s)]),
        scale: uint_to_rat(&BigUint::from(q).pow(s as u32)),
        slack: rat(1, 4),
        shape: InstanceShape {
            vertices: n + m + 1 + s,
            edges: 2 * m + 1 + s,
        },
        gadget: Gadget::Counting {
            inst,
            typical: Some((vec![(v0, jq.v("w"))], "Z^t", "Z^a")),
        },
        output: None,
        materialiser: materialise,
    })
}

fn materialise(source: &Source, constants: &BTreeMap<String, u64>) -> Result<Materialised> {
    let Source::PottsToJq { graph, .. } = source else {
        return Err(Error::Gadget("wrong source for the junction gadget".into()));
    };
    let (stretched, _) = two_stretch(&graph.to_graph()?);
    let s = constants["s"] as usize;
    let v0 = stretched.n();
    let mut edges = stretched.edges().to_vec();
    edges.push((0, v0));
    edges.extend((1..=s).map(|i| (v0, v0 + i)));
    Ok(Materialised::Graph(Graph::new(v0 + 1 + s, edges)?))
}
