//! Potts partition functions on graphs and hypergraphs, proper colourings
//! and the 2-stretch colouring identity.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{enum_cap, ensure_within_cap, rat, rat_int, uint_to_rat, Rational};
use crate::error::{Error, Result};
use crate::graph::{two_stretch, Graph, Hypergraph};
use crate::hom::{pair_table, EdgeWeightedInstance};

/// Default bound on `q^n` for assignment enumeration.
pub const DEFAULT_ASSIGNMENT_CAP: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct PottsParams {
    pub q: usize,
    pub gamma: Rational,
}

impl PottsParams {
    pub fn new(q: usize, gamma: Rational) -> Result<Self> {
        if q == 0 {
            return Err(Error::Potts("q must be at least 1".into()));
        }
        if gamma < rat(-1, 1) {
            return Err(Error::Potts("gamma must be at least -1".into()));
        }
        Ok(PottsParams { q, gamma })
    }
}

/// `sum_sigma prod_{uv in E} (1 + gamma [sigma(u) = sigma(v)])`.
pub fn potts_graph(g: &Graph, p: &PottsParams) -> Rational {
    let q = p.q;
    let one_plus = Rational::one() + &p.gamma;
    let table = pair_table(q, |a, b| if a == b { one_plus.clone() } else { Rational::one() });
    let mut inst = EdgeWeightedInstance::<Rational>::new(g.n(), q);
    for &(u, v) in g.edges() {
        inst.add_edge(u, v, table.clone(), 1).expect("graph edges are simple");
    }
    inst.evaluate()
}

/// `sum_{A subset E} gamma^|A| q^{c(A)}`, by subset enumeration.
pub fn random_cluster_oracle(g: &Graph, p: &PottsParams) -> Result<Rational> {
    let m = g.m();
    ensure_within_cap("edge subsets", 2, m, enum_cap(1 << 24))?;
    let q = rat_int(p.q as u64);
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << m) {
        let mut parent: Vec<usize> = (0..g.n()).collect();
        let mut comps = g.n();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
        let k = mask.count_ones() as usize;
        total += num_traits::pow(p.gamma.clone(), k) * num_traits::pow(q.clone(), comps);
    }
    Ok(total)
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of assignments with each count of monochromatic hyperedges.
pub fn mono_distribution(hg: &Hypergraph, q: usize) -> Result<BTreeMap<usize, BigUint>> {
    if q == 0 {
        return Err(Error::Potts("q must be at least 1".into()));
    }
    let n = hg.n();
    let total = ensure_within_cap("hypergraph assignments", q as u128, n, enum_cap(DEFAULT_ASSIGNMENT_CAP))?;
    let total = total as u64;
    let chunk = 1u64 << 16;
    let parts: Vec<BTreeMap<usize, u64>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut hist = BTreeMap::new();
            let mut sigma = vec![0usize; n];
            for idx in c * chunk..((c + 1) * chunk).min(total) {
                let mut rem = idx;
                for s in sigma.iter_mut() {
                    *s = (rem % q as u64) as usize;
                    rem /= q as u64;
                }
                let mono = hg
                    .edges()
                    .iter()
                    .filter(|f| f.iter().all(|&v| sigma[v] == sigma[f[0]]))
                    .count();
                *hist.entry(mono).or_insert(0u64) += 1;
            }
            hist
        })
        .collect();
    let mut out = BTreeMap::new();
    for part in parts {
        for (k, c) in part {
            *out.entry(k).or_insert_with(BigUint::zero) += c;
        }
    }
    Ok(out)
}

/// `sum_sigma prod_f (1 + gamma [f monochromatic])`.
pub fn potts_hypergraph(hg: &Hypergraph, p: &PottsParams) -> Result<Rational> {
    let one_plus = Rational::one() + &p.gamma;
    Ok(mono_distribution(hg, p.q)?
        .into_iter()
        .map(|(k, c)| uint_to_rat(&c) * num_traits::pow(one_plus.clone(), k))
        .sum())
}

/// Proper `q`-colourings of a bipartite graph.
pub fn count_proper_colourings(g: &Graph, q: usize) -> Result<BigUint> {
    if !g.is_bipartite() {
        return Err(Error::Potts("proper colouring count needs a bipartite graph".into()));
    }
    Ok(crate::hom::count_hom(g, &Graph::complete(q)))
}

/// The 2-stretch of `g` and the scale `(q-2)^|E|` such that its proper
/// `q`-colourings number `scale * Z_Potts(g; q, 1/(q-2))`.
pub fn reduce_potts_to_bqcol(g: &Graph, q: usize) -> Result<(Graph, BigUint)> {
    if q <= 2 {
        return Err(Error::Potts("colouring reduction needs q > 2".into()));
    }
    let (stretched, _) = two_stretch(g);
    Ok((stretched, BigUint::from(q - 2).pow(g.m() as u32)))
}

/// The edge interaction `gamma = 1/(q-2)` used with [`reduce_potts_to_bqcol`].
pub fn bqcol_gamma(q: usize) -> Rational {
    rat(1, q as i64 - 2)
}
