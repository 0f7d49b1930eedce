use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{enum_cap, ensure_within_cap};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::potts::find;

/// Default limit on the number of edge subsets examined.
pub const DEFAULT_CUT_ENUM_CAP: u128 = 1 << 24;

/// A three-terminal cut problem together with its minimum cut size `b` and
/// the number of cuts of that size.
#[derive(Clone, Debug)]
pub struct CutInstance {
    pub graph: Graph,
    pub terminals: [usize; 3],
    pub b: usize,
    pub count: BigUint,
    /// Every minimum cut, as sorted edge indices into `graph.edges()`.
    pub cuts: Vec<Vec<usize>>,
}

fn check_terminals(g: &Graph, t: [usize; 3]) -> Result<()> {
    if t.iter().any(|&v| v >= g.n()) {
        return Err(Error::Gadget("terminal out of range".into()));
    }
    if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        return Err(Error::Gadget("terminals must be distinct".into()));
    }
    if !g.is_connected() {
        return Err(Error::Gadget("cut instance must be connected".into()));
    }
    Ok(())
}

/// Number of components of `g` after deleting the edges flagged in `removed`,
/// and whether the three terminals end up in different components.
pub fn split_by(g: &Graph, removed: &[bool], t: [usize; 3]) -> (usize, bool) {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    let mut comps = g.n();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if removed[i] {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    let r: Vec<usize> = t.iter().map(|&v| find(&mut parent, v)).collect();
    (comps, r[0] != r[1] && r[1] != r[2] && r[0] != r[2])
}

/// Whether deleting the edges `cut` separates all three terminals.
pub fn is_multiterminal_cut(g: &Graph, t: [usize; 3], cut: &[usize]) -> bool {
    let mut removed = vec![false; g.m()];
    for &e in cut {
        removed[e] = true;
    }
    split_by(g, &removed, t).1
}

/// Minimum multiterminal cuts by enumerating edge subsets in increasing size.
pub fn multiterminal_cuts(g: &Graph, alpha: usize, beta: usize, gamma: usize) -> Result<CutInstance> {
    let t = [alpha, beta, gamma];
    check_terminals(g, t)?;
    let m = g.m();
    ensure_within_cap("edge subsets", 2, m, enum_cap(DEFAULT_CUT_ENUM_CAP))?;
    for k in 0..=m {
        let mut cuts = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if is_multiterminal_cut(g, t, &idx) {
                cuts.push(idx.clone());
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
        if !cuts.is_empty() {
            return Ok(CutInstance {
                graph: g.clone(),
                terminals: t,
                b: k,
                count: BigUint::from(cuts.len()),
                cuts,
            });
        }
    }
    // Deleting every edge isolates every vertex, so the loop always returns.
    Ok(CutInstance {
        graph: g.clone(),
        terminals: t,
        b: m,
        count: BigUint::zero(),
        cuts: Vec::new(),
    })
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
