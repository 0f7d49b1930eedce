//! Homomorphism counts, weighted sums and walk statistics.

pub mod eval;
mod walks;

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use eval::{adjacency_table, ChainLink, EdgeWeightedInstance, PendantChain, Weight, WeightedEdge};
pub use walks::{format_walk_table, walk_profile, walk_table, WalkProfile, WalkRow};

/// Per-vertex colour weights `w_v(c)` for an instance with `n` vertices and a
/// target with `h` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable {
    h: usize,
    rows: Vec<Vec<Rational>>,
}

impl WeightTable {
    pub fn new(h: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        for (v, r) in rows.iter().enumerate() {
            if r.len() != h {
                return Err(Error::Hom(format!(
                    "weight vector of vertex {v} has length {}, expected {h}",
                    r.len()
                )));
            }
            if r.iter().any(|x| x < &Rational::zero()) {
                return Err(Error::Hom(format!("negative weight on vertex {v}")));
            }
        }
        Ok(WeightTable { h, rows })
    }

    pub fn uniform(n: usize, h: usize) -> Self {
        WeightTable {
            h,
            rows: vec![vec![Rational::one(); h]; n],
        }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, v: usize) -> &[Rational] {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Rows for `vertices`, in that order.
    pub fn restrict(&self, vertices: &[usize]) -> WeightTable {
        WeightTable {
            h: self.h,
            rows: vertices.iter().map(|&v| self.rows[v].clone()).collect(),
        }
    }

    fn check_dims(&self, g: &Graph, target: &Graph) -> Result<()> {
        if self.h != target.n() || self.rows.len() != g.n() {
            return Err(Error::Hom(format!(
                "weight table is {}x{}, expected {}x{}",
                self.rows.len(),
                self.h,
                g.n(),
                target.n()
            )));
        }
        Ok(())
    }
}

/// `|Hom(G, H)|`.
pub fn count_hom(g: &Graph, target: &Graph) -> BigUint {
    EdgeWeightedInstance::<BigUint>::homomorphisms(g, target).evaluate()
}

/// `Z_H(G, W)`: the sum over homomorphisms of the product of vertex weights.
pub fn count_whom(g: &Graph, target: &Graph, w: &WeightTable) -> Result<Rational> {
    w.check_dims(g, target)?;
    let mut inst = EdgeWeightedInstance::<Rational>::homomorphisms(g, target);
    for v in 0..g.n() {
        inst.set_weight(v, w.row(v).to_vec())?;
    }
    Ok(inst.evaluate())
}

/// Evaluates an edge- and vertex-weighted instance.
pub fn count_ewhom<T: Weight>(inst: &EdgeWeightedInstance<T>) -> T {
    inst.evaluate()
}

/// Homomorphisms `G -> H` with `sigma(v) = c` for every pin `(v, c)`.
pub fn count_hom_pinned(g: &Graph, target: &Graph, pins: &[(usize, usize)]) -> Result<BigUint> {
    let mut inst = EdgeWeightedInstance::<BigUint>::homomorphisms(g, target);
    for &(v, c) in pins {
        if v >= g.n() {
            return Err(Error::Hom(format!("pinned vertex {v} out of range")));
        }
        inst.pin(v, c)?;
    }
    Ok(inst.evaluate())
}

/// Closed-form `Z_H(G, W)` for complete bipartite `H`, evaluated per
/// component of `G`.
pub fn complete_bipartite_whom(g: &Graph, target: &Graph, w: &WeightTable) -> Result<Rational> {
    if !target.is_complete_bipartite() {
        return Err(Error::Hom("target is not complete bipartite".into()));
    }
    w.check_dims(g, target)?;
    let sides = target.bipartition().expect("complete bipartite graphs are bipartite");
    let side_sum = |v: usize, side: &[usize]| -> Rational {
        side.iter().map(|&c| w.row(v)[c].clone()).sum()
    };
    let mut total = Rational::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let Some(bp) = sub.bipartition() else {
            return Ok(Rational::zero());
        };
        let prod = |part: &[usize], side: &[usize]| -> Rational {
            part.iter().map(|&i| side_sum(comp[i], side)).product()
        };
        let straight = prod(&bp.left, &sides.left) * prod(&bp.right, &sides.right);
        let flipped = prod(&bp.right, &sides.left) * prod(&bp.left, &sides.right);
        total *= straight + flipped;
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

/// Weight tables are shared across many edges; this builds one from a
/// closure over colour pairs.
pub fn pair_table<T: Weight>(h: usize, f: impl Fn(usize, usize) -> T) -> Arc<Vec<T>> {
    let mut t = Vec::with_capacity(h * h);
    for a in 0..h {
        for b in 0..h {
            t.push(f(a, b));
        }
    }
    Arc::new(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::target::{build_target_tree, TreeKind};

    fn j3() -> Graph {
        build_target_tree(TreeKind::Junction(3)).unwrap().graph
    }

    #[test]
    fn basic_hom_counts() {
        assert_eq!(count_hom(&Graph::path(1), &j3()), BigUint::from(7u32));
        assert_eq!(count_hom(&Graph::path(2), &Graph::path(4)), BigUint::from(6u32));
        assert_eq!(count_hom(&Graph::cycle(5).unwrap(), &j3()), BigUint::zero());
    }

    #[test]
    fn single_vertex_weighted() {
        let w = WeightTable::new(3, vec![vec![rat(1, 2), rat(2, 3), rat(5, 1)]]).unwrap();
        assert_eq!(count_whom(&Graph::path(1), &Graph::path(3), &w).unwrap(), rat(37, 6));
    }

    #[test]
    fn unit_weights_agree_with_hom() {
        let g = Graph::cycle(4).unwrap();
        let h = Graph::path(4);
        let w = WeightTable::uniform(4, 4);
        let expect = Rational::from_integer(count_hom(&g, &h).into());
        assert_eq!(count_whom(&g, &h, &w).unwrap(), expect);
    }

    #[test]
    fn whom_rejects_bad_dims() {
        let w = WeightTable::uniform(2, 3);
        assert!(count_whom(&Graph::path(2), &Graph::path(4), &w).is_err());
        assert!(WeightTable::new(2, vec![vec![rat(1, 1)]]).is_err());
        assert!(WeightTable::new(1, vec![vec![rat(-1, 1)]]).is_err());
    }

    #[test]
    fn pinned_counts() {
        let h = Graph::path(4);
        let g = Graph::path(2);
        assert_eq!(count_hom_pinned(&g, &h, &[(0, 1), (1, 2)]).unwrap(), BigUint::one());
        assert_eq!(count_hom_pinned(&g, &h, &[(0, 0), (1, 3)]).unwrap(), BigUint::zero());
        assert_eq!(count_hom_pinned(&g, &h, &[(0, 1)]).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn complete_bipartite_examples() {
        let k11 = Graph::complete_bipartite(1, 1);
        let v = complete_bipartite_whom(&Graph::path(2), &k11, &WeightTable::uniform(2, 2)).unwrap();
        assert_eq!(v, rat(2, 1));
        let k13 = Graph::complete_bipartite(1, 3);
        let v = complete_bipartite_whom(&Graph::path(3), &k13, &WeightTable::uniform(3, 4)).unwrap();
        assert_eq!(v, rat(12, 1));
        let tri = Graph::complete(3);
        let v = complete_bipartite_whom(&tri, &k13, &WeightTable::uniform(3, 4)).unwrap();
        assert!(v.is_zero());
        assert!(complete_bipartite_whom(&Graph::path(2), &Graph::path(4), &WeightTable::uniform(2, 4)).is_err());
    }
}
