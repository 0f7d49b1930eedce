//! Convex orderings of `J3`-free trees and the reduction of weighted tree
//! homomorphism counting to weighted implication CSPs.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::csp::{count_wcsp, Constraint, CspInstance, WeightedCspInstance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::WeightTable;
use crate::pattern::{contains_induced, Pattern};

/// Orderings of the two sides of a bipartite graph under which every
/// neighbourhood is an interval. Positions are 1-based as in `[h]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexOrder {
    /// `u[i - 1]` is the vertex at position `i` of `U`.
    pub u: Vec<usize>,
    pub u_prime: Vec<usize>,
    pub m: Vec<usize>,
    pub big_m: Vec<usize>,
    pub m_prime: Vec<usize>,
    pub big_m_prime: Vec<usize>,
}

impl ConvexOrder {
    /// Derives `m, M, m', M'` from the two orderings, failing if some
    /// neighbourhood is not an interval or an endpoint map decreases.
    pub fn from_orders(h: &Graph, u: Vec<usize>, u_prime: Vec<usize>) -> Result<Self> {
        let mut pos = vec![usize::MAX; h.n()];
        for (i, &x) in u.iter().chain(&u_prime).enumerate() {
            let p = if i < u.len() { i + 1 } else { i - u.len() + 1 };
            if x >= h.n() || pos[x] != usize::MAX {
                return Err(Error::Convex("orderings must partition the vertices".into()));
            }
            pos[x] = p;
        }
        if pos.contains(&usize::MAX) {
            return Err(Error::Convex("orderings must cover every vertex".into()));
        }
        let intervals = |side: &[usize], other_len: usize| -> Result<(Vec<usize>, Vec<usize>)> {
            let mut lo = Vec::with_capacity(side.len());
            let mut hi = Vec::with_capacity(side.len());
            for &x in side {
                let ps: BTreeSet<usize> = h.neighbours(x).iter().map(|&y| pos[y]).collect();
                let (a, b) = match (ps.first(), ps.last()) {
                    (Some(&a), Some(&b)) => (a, b),
                    _ => return Err(Error::Convex(format!("vertex {x} is isolated"))),
                };
                if b - a + 1 != ps.len() || b > other_len {
                    return Err(Error::Convex(format!("neighbourhood of vertex {x} is not an interval")));
                }
                lo.push(a);
                hi.push(b);
            }
            if lo.windows(2).any(|w| w[0] > w[1]) || hi.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Convex("interval endpoints are not monotone".into()));
            }
            Ok((lo, hi))
        };
        for &x in &u {
            if h.neighbours(x).iter().any(|y| u.contains(y)) {
                return Err(Error::Convex("an edge lies inside one side".into()));
            }
        }
        let (m, big_m) = intervals(&u, u_prime.len())?;
        let (m_prime, big_m_prime) = intervals(&u_prime, u.len())?;
        Ok(ConvexOrder {
            u,
            u_prime,
            m,
            big_m,
            m_prime,
            big_m_prime,
        })
    }

    pub fn h(&self) -> usize {
        self.u.len()
    }

    pub fn h_prime(&self) -> usize {
        self.u_prime.len()
    }

    /// The same ordering with the roles of the two sides exchanged.
    pub fn swapped(&self) -> ConvexOrder {
        ConvexOrder {
            u: self.u_prime.clone(),
            u_prime: self.u.clone(),
            m: self.m_prime.clone(),
            big_m: self.big_m_prime.clone(),
            m_prime: self.m.clone(),
            big_m_prime: self.big_m.clone(),
        }
    }
}

fn is_leaf(h: &Graph, alive: &[bool], v: usize) -> bool {
    h.neighbours(v).iter().filter(|&&x| alive[x]).count() == 1
}

fn qualifies(h: &Graph, alive: &[bool], leaf: usize) -> Option<usize> {
    if !alive[leaf] || !is_leaf(h, alive, leaf) {
        return None;
    }
    let parent = *h.neighbours(leaf).iter().find(|&&x| alive[x])?;
    let non_leaves = h
        .neighbours(parent)
        .iter()
        .filter(|&&x| alive[x] && !is_leaf(h, alive, x))
        .count();
    (non_leaves <= 1).then_some(parent)
}

/// Returns `(side of leaf, side of parent)`, each ordered with the leaf or
/// parent last.
fn order_from(h: &Graph, alive: &mut [bool], leaf: usize, parent: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let nbrs: Vec<usize> = h.neighbours(parent).iter().copied().filter(|&x| alive[x]).collect();
    let inner: Vec<usize> = nbrs.iter().copied().filter(|&x| !is_leaf(h, alive, x)).collect();
    match inner.as_slice() {
        [] => {
            let mut side: Vec<usize> = nbrs.into_iter().filter(|&x| x != leaf).collect();
            side.push(leaf);
            Ok((side, vec![parent]))
        }
        [next] => {
            let removed: Vec<usize> = nbrs.iter().copied().filter(|x| x != next).collect();
            for &x in &removed {
                alive[x] = false;
            }
            if qualifies(h, alive, parent) != Some(*next) {
                return Err(Error::Convex("tree contains an induced J3".into()));
            }
            let (parent_side, mut leaf_side) = order_from(h, alive, parent, *next)?;
            leaf_side.extend(removed.iter().copied().filter(|&x| x != leaf));
            leaf_side.push(leaf);
            Ok((leaf_side, parent_side))
        }
        _ => Err(Error::Convex("distinguished leaf does not qualify".into())),
    }
}

/// A convex ordering of the tree `h` whose sides are `(left, right)` of its
/// bipartition. The recursion starts from the smallest qualifying leaf.
pub fn convex_order(h: &Graph) -> Result<ConvexOrder> {
    if !h.is_tree() {
        return Err(Error::Convex("convex ordering needs a tree".into()));
    }
    if h.n() < 2 {
        return Err(Error::Convex("convex ordering needs at least one edge".into()));
    }
    if contains_induced(h, Pattern::J3) {
        return Err(Error::Convex("tree contains an induced J3".into()));
    }
    let bp = h.bipartition().expect("trees are bipartite");
    let mut alive = vec![true; h.n()];
    let (leaf, parent) = (0..h.n())
        .find_map(|v| qualifies(h, &alive, v).map(|p| (v, p)))
        .ok_or_else(|| Error::Convex("no qualifying leaf".into()))?;
    let (a, b) = order_from(h, &mut alive, leaf, parent)?;
    let (u, u_prime) = if bp.left.contains(&leaf) { (a, b) } else { (b, a) };
    ConvexOrder::from_orders(h, u, u_prime)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The left side of `G` is coloured from the first side of the ordering.
    Left,
    Right,
}

/// A weighted CSP whose value is the side-restricted weighted homomorphism
/// sum, plus the bookkeeping needed to decode assignments.
#[derive(Clone, Debug)]
pub struct SideReduction {
    pub wcsp: WeightedCspInstance,
    /// First CSP variable of each vertex of `G`; the vertex owns `len + 1`
    /// variables `v_0..v_len`.
    pub first_var: Vec<usize>,
    /// Ordered target vertices available to each vertex of `G`.
    pub colours: Vec<Vec<usize>>,
}

impl SideReduction {
    /// The colouring `sigma(v) = min { i : tau(v_i) = 1 }` encoded by `tau`.
    pub fn decode(&self, tau: &[bool]) -> Option<Vec<usize>> {
        self.colours
            .iter()
            .zip(&self.first_var)
            .map(|(cols, &start)| {
                (1..=cols.len())
                    .find(|&i| tau[start + i])
                    .map(|i| cols[i - 1])
            })
            .collect()
    }
}

/// Builds the weighted CSP for one side of a connected bipartite `g`.
pub fn reduce_whom_side(g: &Graph, w: &WeightTable, h: &Graph, ord: &ConvexOrder, side: Side) -> Result<SideReduction> {
    if !g.is_connected() {
        return Err(Error::Convex("instance must be connected".into()));
    }
    let bp = g
        .bipartition()
        .ok_or_else(|| Error::Convex("instance must be bipartite".into()))?;
    if w.n() != g.n() || w.h() != h.n() {
        return Err(Error::Convex("weight table dimensions do not match".into()));
    }
    let ord = match side {
        Side::Left => ord.clone(),
        Side::Right => ord.swapped(),
    };
    let on_left: Vec<bool> = (0..g.n()).map(|v| bp.left.contains(&v)).collect();
    let mut first_var = Vec::with_capacity(g.n());
    let mut colours = Vec::with_capacity(g.n());
    let mut next = 0;
    for &l in &on_left {
        let cols = if l { ord.u.clone() } else { ord.u_prime.clone() };
        first_var.push(next);
        next += cols.len() + 1;
        colours.push(cols);
    }
    let var = |v: usize, i: usize| first_var[v] + i;
    let mut cs = Vec::new();
    let mut weights = vec![[Rational::one(), Rational::one()]; next];
    for v in 0..g.n() {
        let hv = colours[v].len();
        cs.push(Constraint::Pin0(var(v, 0)));
        cs.push(Constraint::Pin1(var(v, hv)));
        for i in 1..=hv {
            cs.push(Constraint::Imp(var(v, i - 1), var(v, i)));
        }
        let wv: Vec<Rational> = colours[v].iter().map(|&c| w.row(v)[c].clone()).collect();
        for (i, x) in wv.iter().enumerate() {
            if x.is_zero() {
                cs.push(Constraint::Imp(var(v, i + 1), var(v, i)));
            }
        }
        let wp: Vec<Rational> = wv
            .iter()
            .map(|x| if x.is_zero() { Rational::one() } else { x.clone() })
            .collect();
        weights[var(v, hv)][1] = wp[hv - 1].clone();
        for i in 1..hv {
            weights[var(v, i)][1] = &wp[i - 1] / &wp[i];
        }
    }
    for &(a, b) in g.edges() {
        let (v, vp) = if on_left[a] { (a, b) } else { (b, a) };
        for i in 1..=ord.h() {
            cs.push(Constraint::Imp(var(v, i), var(vp, ord.big_m[i - 1])));
            cs.push(Constraint::Imp(var(vp, ord.m[i - 1] - 1), var(v, i - 1)));
        }
        for ip in 1..=ord.h_prime() {
            cs.push(Constraint::Imp(var(vp, ip), var(v, ord.big_m_prime[ip - 1])));
            cs.push(Constraint::Imp(var(v, ord.m_prime[ip - 1] - 1), var(vp, ip - 1)));
        }
    }
    let wcsp = WeightedCspInstance::new(CspInstance::new(next, cs)?, weights)?;
    Ok(SideReduction {
        wcsp,
        first_var,
        colours,
    })
}

/// `Z_H(G, W)` for a `J3`-free tree `H`, computed as the product over
/// components of the two side-restricted CSP values.
pub fn whom_via_csp(g: &Graph, w: &WeightTable, h: &Graph) -> Result<Rational> {
    if !h.is_tree() {
        return Err(Error::Convex("target must be a tree".into()));
    }
    if w.n() != g.n() || w.h() != h.n() {
        return Err(Error::Convex("weight table dimensions do not match".into()));
    }
    if h.n() == 1 {
        if g.m() > 0 {
            return Ok(Rational::zero());
        }
        return Ok((0..g.n()).map(|v| w.row(v)[0].clone()).product());
    }
    let ord = convex_order(h)?;
    let mut total = Rational::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        if !sub.is_bipartite() {
            return Ok(Rational::zero());
        }
        let sw = w.restrict(&comp);
        let left = count_wcsp(&reduce_whom_side(&sub, &sw, h, &ord, Side::Left)?.wcsp);
        let right = count_wcsp(&reduce_whom_side(&sub, &sw, h, &ord, Side::Right)?.wcsp);
        total *= left + right;
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}
