use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{common_neighbours, pow2, CutInstance, GraphData, Materialised, Reduction, Source};
use crate::arith::{rat, uint_to_rat, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{pair_table, EdgeWeightedInstance, WeightTable};
use crate::pattern::{J3Embedding, Pattern};

use super::certificate::InstanceShape;
use super::Gadget;

/// `s = 2 + |E| + 2|V|`.
pub fn hardweighted_s(g: &Graph) -> u64 {
    (2 + g.m() + 2 * g.n()) as u64
}

fn check_embedding(h: &Graph, emb: &J3Embedding) -> Result<()> {
    if !h.is_tree() {
        return Err(Error::Gadget("target must be a tree".into()));
    }
    let vs = emb.vertices();
    if vs.iter().any(|&v| v >= h.n()) {
        return Err(Error::Gadget("embedding names a vertex outside the target".into()));
    }
    let pat = Pattern::J3.graph();
    for a in 0..7 {
        for b in 0..7 {
            if a != b && (vs[a] == vs[b] || pat.has_edge(a, b) != h.has_edge(vs[a], vs[b])) {
                return Err(Error::Gadget("embedding is not an induced J3".into()));
            }
        }
    }
    Ok(())
}

/// Allowed colours: `alpha -> x0`, `beta -> y0`, `gamma -> z0`, other
/// vertices of `G` in `{x0, y0, z0}`.
fn vertex_mask(h: &Graph, emb: &J3Embedding, terminals: [usize; 3], v: usize) -> Vec<bool> {
    let mut mask = vec![false; h.n()];
    match terminals.iter().position(|&t| t == v) {
        Some(0) => mask[emb.x0] = true,
        Some(1) => mask[emb.y0] = true,
        Some(2) => mask[emb.z0] = true,
        _ => {
            for c in [emb.x0, emb.y0, emb.z0] {
                mask[c] = true;
            }
        }
    }
    mask
}

fn midpoint_mask(h: &Graph, emb: &J3Embedding) -> Vec<bool> {
    let mut mask = vec![false; h.n()];
    for c in [emb.w, emb.x1, emb.y1, emb.z1] {
        mask[c] = true;
    }
    mask
}

fn to_weights(mask: &[bool]) -> Vec<BigUint> {
    mask.iter().map(|&b| if b { BigUint::one() } else { BigUint::zero() }).collect()
}

/// The weighted cut gadget with the standard `s`.
pub fn build_cut_to_whom(cut: &CutInstance, h: &Graph, emb: &J3Embedding) -> Result<Reduction> {
    build_cut_to_whom_with(cut, h, emb, hardweighted_s(&cut.graph))
}

/// The weighted cut gadget with `s` midpoint copies per edge. The `s` copies
/// of an edge are folded into one edge table raised to the power `s`.
pub fn build_cut_to_whom_with(cut: &CutInstance, h: &Graph, emb: &J3Embedding, s: u64) -> Result<Reduction> {
    check_embedding(h, emb)?;
    if s == 0 {
        return Err(Error::Gadget("s must be positive".into()));
    }
    let g = &cut.graph;
    let mid = midpoint_mask(h, emb);
    let table = pair_table(h.n(), |a, b| BigUint::from(common_neighbours(h, &mid, a, b)));
    let mut inst = EdgeWeightedInstance::<BigUint>::new(g.n(), h.n());
    for v in 0..g.n() {
        inst.set_weight(v, to_weights(&vertex_mask(h, emb, cut.terminals, v)))?;
    }
    for &(u, v) in g.edges() {
        inst.add_edge(u, v, table.clone(), s)?;
    }
    let exp = s as usize * (g.m() - cut.b);
    let (n, m) = (g.n() as u64, g.m() as u64);
    Ok(Reduction {
        source: Source::CutToWhom {
            graph: GraphData::from(g),
            terminals: cut.terminals,
            target: GraphData::from(h),
            embedding: emb.vertices(),
        },
        constants: BTreeMap::from([("s".to_string(), s)]),
        scale: uint_to_rat(&pow2(exp)),
        slack: rat(1, 4),
        shape: InstanceShape {
            vertices: n + m * s,
            edges: 2 * m * s,
        },
        gadget: Gadget::Counting { inst, typical: None },
        output: None,
        materialiser: materialise,
    })
}

/// `G'` with midpoint `(e, i)` at `n + e*s + i`, and its 0/1 weight table.
fn materialise(source: &Source, constants: &BTreeMap<String, u64>) -> Result<Materialised> {
    let Source::CutToWhom {
        graph,
        terminals,
        target,
        embedding,
    } = source
    else {
        return Err(Error::Gadget("wrong source for the weighted cut gadget".into()));
    };
    let g = graph.to_graph()?;
    let h = target.to_graph()?;
    let [w, x0, x1, y0, y1, z0, z1] = *embedding;
    let emb = J3Embedding {
        w,
        x0,
        x1,
        y0,
        y1,
        z0,
        z1,
    };
    let s = constants["s"] as usize;
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m() * s);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for i in 0..s {
            let x = n + e * s + i;
            edges.push((u, x));
            edges.push((v, x));
        }
    }
    let gp = Graph::new(n + g.m() * s, edges)?;
    let indicator = |mask: Vec<bool>| -> Vec<Rational> {
        mask.into_iter().map(|b| if b { rat(1, 1) } else { rat(0, 1) }).collect()
    };
    let mut rows: Vec<Vec<Rational>> = (0..n).map(|v| indicator(vertex_mask(&h, &emb, *terminals, v))).collect();
    let mid = indicator(midpoint_mask(&h, &emb));
    rows.extend(std::iter::repeat_n(mid, g.m() * s));
    Ok(Materialised::WeightedGraph(gp, WeightTable::new(h.n(), rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::floor;
    use crate::hardness::multiterminal_cuts;
    use crate::hom::count_whom;
    use crate::pattern::find_induced_j3;
    use crate::target::{build_target_tree, TreeKind};

    #[test]
    fn star_instance_recovers_three() {
        let cut = multiterminal_cuts(&Graph::star(3), 1, 2, 3).unwrap();
        let h = build_target_tree(TreeKind::Junction(3)).unwrap().graph;
        let emb = find_induced_j3(&h).unwrap();
        let red = build_cut_to_whom(&cut, &h, &emb).unwrap();
        assert_eq!(red.constant("s"), Some(13));
        let (cert, report) = red.verify().unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(floor(&cert.ratio()), 3.into());
    }

    #[test]
    fn materialised_matches_compressed() {
        let cut = multiterminal_cuts(&Graph::path(3), 0, 1, 2).unwrap();
        let h = build_target_tree(TreeKind::Junction(4)).unwrap().graph;
        let emb = find_induced_j3(&h).unwrap();
        let red = build_cut_to_whom_with(&cut, &h, &emb, 2).unwrap();
        let Materialised::WeightedGraph(gp, w) = red.materialise().unwrap() else {
            panic!("expected a weighted graph");
        };
        assert_eq!((gp.n() as u64, gp.m() as u64), (red.shape().vertices, red.shape().edges));
        assert_eq!(count_whom(&gp, &h, &w).unwrap(), red.value().unwrap());
    }

    #[test]
    fn rejects_non_induced_embedding() {
        let cut = multiterminal_cuts(&Graph::star(3), 1, 2, 3).unwrap();
        let h = build_target_tree(TreeKind::Junction(3)).unwrap().graph;
        let mut emb = find_induced_j3(&h).unwrap();
        emb.z1 = emb.x1;
        assert!(build_cut_to_whom(&cut, &h, &emb).is_err());
    }
}
