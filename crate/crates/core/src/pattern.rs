//! Induced-subgraph detection for the small patterns `P4` and `J3`, and the
//! star / BIS / #SAT classification of trees that follows from it.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    P4,
    J3,
}

impl Pattern {
    /// The pattern graph. For `J3` the vertices are `w, x0, x1, y0, y1, z0, z1`
    /// in that order.
    pub fn graph(self) -> Graph {
        match self {
            Pattern::P4 => Graph::path(4),
            Pattern::J3 => Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
                .expect("J3 is simple"),
        }
    }
}

/// Searches for an induced copy of the connected graph `pattern` in `host`.
///
/// Pattern vertices are placed in BFS order, each next to the image of its
/// BFS parent; every placement is checked for adjacency and non-adjacency
/// against all previously placed vertices. Host vertices are tried in
/// increasing order, so the first embedding found is deterministic.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > host.n() {
        return None;
    }
    let (order, parent) = bfs_order(pattern)?;
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];
    if extend(host, pattern, &order, &parent, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn bfs_order(g: &Graph) -> Option<(Vec<usize>, Vec<Option<usize>>)> {
    let mut order = vec![0];
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbours(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    (order.len() == g.n()).then_some((order, parent))
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    parent: &[Option<usize>],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let candidates: Vec<usize> = match parent[p] {
        None => (0..host.n()).collect(),
        Some(par) => host.neighbours(image[par]).to_vec(),
    };
    for c in candidates {
        if used[c] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(c, image[q]));
        if !consistent {
            continue;
        }
        image[p] = c;
        used[c] = true;
        if extend(host, pattern, order, parent, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
        image[p] = usize::MAX;
    }
    false
}

pub fn contains_induced(h: &Graph, pattern: Pattern) -> bool {
    find_induced(h, &pattern.graph()).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeClass {
    /// `#Hom(H)` and `wHom(H)` are exactly solvable in polynomial time.
    Star,
    /// Not a star and no induced `J3`: interreducible with `#BIS`.
    BisEquivalent,
    /// Contains an induced `J3`: the weighted problem is `#SAT`-hard.
    ContainsJ3,
}

pub fn is_star(h: &Graph) -> bool {
    h.n() <= 2 || (0..h.n()).any(|v| h.degree(v) == h.n() - 1 && h.m() == h.n() - 1)
}

pub fn classify_tree(h: &Graph) -> Result<TreeClass> {
    if !h.is_tree() {
        return Err(Error::Graph("classify: input is not a tree".into()));
    }
    Ok(if is_star(h) {
        TreeClass::Star
    } else if contains_induced(h, Pattern::J3) {
        TreeClass::ContainsJ3
    } else {
        TreeClass::BisEquivalent
    })
}

/// Role-labelled vertices of an induced `J3` inside a host tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct J3Embedding {
    pub w: usize,
    pub x0: usize,
    pub x1: usize,
    pub y0: usize,
    pub y1: usize,
    pub z0: usize,
    pub z1: usize,
}

impl J3Embedding {
    pub fn vertices(&self) -> [usize; 7] {
        [self.w, self.x0, self.x1, self.y0, self.y1, self.z0, self.z1]
    }
}

pub fn find_induced_j3(h: &Graph) -> Result<J3Embedding> {
    let img = find_induced(h, &Pattern::J3.graph())
        .ok_or_else(|| Error::Graph("target has no induced J3".into()))?;
    Ok(J3Embedding {
        w: img[0],
        x0: img[1],
        x1: img[2],
        y0: img[3],
        y1: img[4],
        z0: img[5],
        z1: img[6],
    })
}
