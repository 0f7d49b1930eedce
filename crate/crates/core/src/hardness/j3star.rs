use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::certificate::InstanceShape;
use super::{common_neighbours, pow2, CutInstance, Gadget, GraphData, Materialised, Reduction, Source};
use crate::arith::{rat, uint_to_rat};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{adjacency_table, pair_table, EdgeWeightedInstance};
use crate::target::{build_target_tree, TreeKind};

/// Per-repetition factor of the three pendant gadgets in a typical
/// homomorphism: `6 * 18 * 46`.
pub const J3STAR_GOOD_FACTOR: u64 = 4968;

/// `s = 3 + |E| + 2|V|`.
pub fn j3star_s(g: &Graph) -> u64 {
    (3 + g.m() + 2 * g.n()) as u64
}

/// Smallest `r` with `46^r >= 8 * 58^(n + s m + 7) * 40^r`.
pub fn j3star_r(n: usize, m: usize, s: u64) -> u64 {
    let exp = n as u64 + s * m as u64 + 7;
    let rhs = BigUint::from(8u32) * BigUint::from(58u32).pow(exp as u32);
    let mut r = 0u64;
    let mut lhs = BigUint::from(1u32);
    let mut forty = BigUint::from(1u32);
    while lhs < &rhs * &forty {
        r += 1;
        lhs *= 46u32;
        forty *= 40u32;
    }
    r
}

const APEX: [&str; 7] = ["w", "x0", "y0", "z0", "x1", "y1", "z1"];

/// The unweighted cut gadget for `J3*` with minimal `s` and `r`.
pub fn build_cut_to_j3star(cut: &CutInstance) -> Result<Reduction> {
    let s = j3star_s(&cut.graph);
    let r = j3star_r(cut.graph.n(), cut.graph.m(), s);
    build_cut_to_j3star_with(cut, s, r)
}

/// The `J3*` gadget with explicit `s` and `r`.
///
/// Core vertices are `V(G)` followed by `v_w, v_x0, v_y0, v_z0, v_x1, v_y1,
/// v_z1`. Each edge of `G` stands for its `s` midpoints through a table of
/// common-neighbour counts raised to the power `s`; the three gadgets are
/// pendant paths of lengths 1, 2 and 3 with `r` copies each.
pub fn build_cut_to_j3star_with(cut: &CutInstance, s: u64, r: u64) -> Result<Reduction> {
    if s == 0 {
        return Err(Error::Gadget("s must be positive".into()));
    }
    let g = &cut.graph;
    let t = build_target_tree(TreeKind::J3Star)?;
    let h = &t.graph;
    let all = vec![true; h.n()];
    let mid = pair_table(h.n(), |a, b| BigUint::from(common_neighbours(h, &all, a, b)));
    let adj = adjacency_table::<BigUint>(h);
    let n = g.n();
    let mut inst = EdgeWeightedInstance::<BigUint>::new(n + APEX.len(), h.n());
    let apex = |label: &str| n + APEX.iter().position(|&l| l == label).expect("apex label");
    for &(u, v) in g.edges() {
        inst.add_edge(u, v, mid.clone(), s)?;
    }
    for v in 0..n {
        inst.add_edge(apex("w"), v, adj.clone(), 1)?;
    }
    for (a, b) in apex_edges() {
        inst.add_edge(apex(a), apex(b), adj.clone(), 1)?;
    }
    let [alpha, beta, gamma] = cut.terminals;
    inst.add_edge(apex("x1"), alpha, adj.clone(), 1)?;
    inst.add_edge(apex("y1"), beta, adj.clone(), 1)?;
    inst.add_edge(apex("z1"), gamma, adj.clone(), 1)?;
    inst.add_pendant_path(apex("x1"), 1, adj.clone(), r)?;
    inst.add_pendant_path(apex("y1"), 2, adj.clone(), r)?;
    inst.add_pendant_path(apex("z1"), 3, adj, r)?;
    let pins = ["x1", "y1", "z1"].iter().map(|&l| (apex(l), t.v(l))).collect();

    let scale = pow2(s as usize * (g.m() - cut.b)) * BigUint::from(J3STAR_GOOD_FACTOR).pow(r as u32);
    let (nn, m) = (n as u64, g.m() as u64);
    Ok(Reduction {
        source: Source::CutToJ3star {
            graph: GraphData::from(g),
            terminals: cut.terminals,
        },
        constants: BTreeMap::from([("s".to_string(), s), ("r".to_string(), r)]),
        scale: uint_to_rat(&scale),
        slack: rat(1, 4),
        shape: InstanceShape {
            vertices: nn + m * s + 7 + 6 * r,
            edges: 2 * m * s + nn + 9 + 6 * r,
        },
        gadget: Gadget::Counting {
            inst,
            typical: Some((pins, "Z^t", "Z^-")),
        },
        output: None,
        materialiser: materialise,
    })
}

fn apex_edges() -> [(&'static str, &'static str); 6] {
    [("w", "x0"), ("w", "y0"), ("w", "z0"), ("x0", "x1"), ("y0", "y1"), ("z0", "z1")]
}

/// `G''` with midpoints at `n + e*s + i`, then the seven apex vertices, then
/// the gadget paths.
fn materialise(source: &Source, constants: &BTreeMap<String, u64>) -> Result<Materialised> {
    let Source::CutToJ3star { graph, terminals } = source else {
        return Err(Error::Gadget("wrong source for the J3* gadget".into()));
    };
    let g = graph.to_graph()?;
    let (s, r) = (constants["s"] as usize, constants["r"] as usize);
    let n = g.n();
    let mut edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for i in 0..s {
            edges.push((u, n + e * s + i));
            edges.push((v, n + e * s + i));
        }
    }
    let base = n + g.m() * s;
    let apex = |label: &str| base + APEX.iter().position(|&l| l == label).expect("apex label");
    edges.extend((0..n).map(|v| (apex("w"), v)));
    edges.extend(apex_edges().iter().map(|&(a, b)| (apex(a), apex(b))));
    edges.push((apex("x1"), terminals[0]));
    edges.push((apex("y1"), terminals[1]));
    edges.push((apex("z1"), terminals[2]));
    let mut next = base + APEX.len();
    for (anchor, len) in [("x1", 1), ("y1", 2), ("z1", 3)] {
        for _ in 0..r {
            let mut prev = apex(anchor);
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    Ok(Materialised::Graph(Graph::new(next, edges)?))
}
