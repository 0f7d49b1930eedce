use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::certificate::InstanceShape;
use super::{Gadget, GraphData, HypergraphData, Materialised, Reduction, Source};
use crate::arith::{rat, Exact, Rational};
use crate::convex::Side;
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::hom::EdgeWeightedInstance;
use crate::potts::PottsParams;
use crate::target::{build_target_tree, TreeKind};

/// The colour class `U` of `b` picked by `side`, sorted.
fn side_vertices(b: &Graph, side: Side) -> Result<Vec<usize>> {
    let bp = b
        .bipartition()
        .ok_or_else(|| Error::Gadget("junction instance must be bipartite".into()))?;
    if !b.is_connected() {
        return Err(Error::Gadget("junction instance must be connected".into()));
    }
    Ok(match side {
        Side::Left => bp.left.clone(),
        Side::Right => bp.right.clone(),
    })
}

/// The hypergraph on `U` (renumbered in increasing order) whose hyperedges
/// are the neighbourhoods of the vertices on the other side, kept as a
/// multiset.
pub fn build_jq_to_hyperpotts(b: &Graph, side: Side) -> Result<Hypergraph> {
    let u = side_vertices(b, side)?;
    let mut index = vec![usize::MAX; b.n()];
    for (i, &x) in u.iter().enumerate() {
        index[x] = i;
    }
    let mut edges = Vec::new();
    for v in 0..b.n() {
        if index[v] != usize::MAX {
            continue;
        }
        if b.degree(v) == 0 {
            return Err(Error::Gadget(format!("vertex {v} has no neighbours")));
        }
        edges.push(b.neighbours(v).iter().map(|&x| index[x]).collect());
    }
    Hypergraph::new(u.len(), edges)
}

/// Homomorphisms `b -> J_q` with `U` coloured inside `{c'_1, .., c'_q}`,
/// paired with the hypergraph Potts value at `gamma = 1`. Exact identity.
pub fn jq_to_hyperpotts(b: &Graph, q: usize, side: Side) -> Result<Reduction> {
    let hg = build_jq_to_hyperpotts(b, side)?;
    let jq = build_target_tree(TreeKind::Junction(q))?;
    let restrict: Vec<BigUint> = (0..jq.graph.n())
        .map(|c| {
            if jq.label_of(c).is_some_and(|l| l.starts_with("c'")) {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        })
        .collect();
    let mut inst = EdgeWeightedInstance::<BigUint>::homomorphisms(b, &jq.graph);
    for u in side_vertices(b, side)? {
        inst.set_weight(u, restrict.clone())?;
    }
    Ok(Reduction {
        source: Source::JqToHyperpotts {
            graph: GraphData::from(b),
            q,
            side,
        },
        constants: BTreeMap::new(),
        scale: rat(1, 1),
        slack: rat(0, 1),
        shape: InstanceShape {
            vertices: hg.n() as u64,
            edges: hg.m() as u64,
        },
        gadget: Gadget::Counting { inst, typical: None },
        output: Some(Materialised::Hypergraph(hg)),
        materialiser: |_, _| Err(Error::Gadget("hypergraph is stored with the reduction".into())),
    })
}

/// Smallest positive `s` with `(1+gamma)^s >= 4 q^(n + m(t-1)) (1+gamma)^m`.
pub fn uniformize_s(n: usize, m: usize, t: usize, q: usize, gamma: &Rational) -> Result<u64> {
    if gamma <= &Rational::zero() {
        return Err(Error::Gadget("gamma must be positive".into()));
    }
    let base = Rational::one() + gamma;
    let exp = n + m * t.saturating_sub(1);
    let rhs = Rational::from_integer(4.into())
        * Rational::from_integer(BigUint::from(q).pow(exp as u32).into())
        * num_traits::pow(base.clone(), m);
    let mut s = 1u64;
    let mut lhs = base.clone();
    while lhs < rhs {
        s += 1;
        lhs *= &base;
    }
    Ok(s)
}

/// Pads every hyperedge to the maximum size `t` with private vertices and
/// adds `s` copies of the padding hyperedge anchored at the smallest vertex
/// of the original.
pub fn uniformize(hg: &Hypergraph, q: usize, gamma: &Rational) -> Result<Reduction> {
    let params = PottsParams::new(q, gamma.clone())?;
    let (n, m, t) = (hg.n(), hg.m(), hg.rank());
    let s = uniformize_s(n, m, t, q, gamma)?;
    let pad = t.saturating_sub(1);
    let u = |f: usize, i: usize| n + f * pad + (i - 1);
    let mut edges = Vec::with_capacity(m * (s as usize + 1));
    for (fi, f) in hg.edges().iter().enumerate() {
        let mut e = f.clone();
        e.extend((1..=t - f.len()).map(|i| u(fi, i)));
        edges.push(e);
    }
    for (fi, f) in hg.edges().iter().enumerate() {
        let mut e = vec![f[0]];
        e.extend((1..=pad).map(|i| u(fi, i)));
        for _ in 0..s {
            edges.push(e.clone());
        }
    }
    let out = Hypergraph::new(n + m * pad, edges)?;
    let scale = num_traits::pow(Rational::one() + gamma, s as usize * m);
    Ok(Reduction {
        source: Source::Uniformize {
            hypergraph: HypergraphData::from(hg),
            q,
            gamma: Exact(gamma.clone()),
        },
        constants: BTreeMap::from([("s".to_string(), s), ("t".to_string(), t as u64)]),
        scale,
        slack: rat(1, 4),
        shape: InstanceShape {
            vertices: out.n() as u64,
            edges: out.m() as u64,
        },
        gadget: Gadget::Hyper {
            hg: out.clone(),
            params,
        },
        output: Some(Materialised::Hypergraph(out)),
        materialiser: |_, _| Err(Error::Gadget("hypergraph is stored with the reduction".into())),
    })
}
