//! Simple undirected graphs and hypergraphs.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph on the dense vertex set `0..n`.
///
/// Edges are stored with `u < v` in insertion order. The bipartition, when the
/// graph is bipartite, is computed once at construction by BFS 2-colouring;
/// in every component the smallest vertex lands on the left side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    bipartition: Option<Bipartition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Graph(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::Graph(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Graph(format!("duplicate edge ({},{})", e.0, e.1)));
            }
            list.push(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let bipartition = two_colour(n, &adj);
        Ok(Graph {
            n,
            edges: list,
            adj,
            bipartition,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).expect("edgeless graph is valid")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Graph(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// `K_{a,b}` with left side `0..a` and right side `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
        Graph::new(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// The star `K_{1,n}` with centre 0.
    pub fn star(n: usize) -> Graph {
        Graph::new(n + 1, (1..=n).map(|i| (0, i))).expect("star is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("disjoint union is simple")
    }

    /// Whether the graph is complete bipartite with both sides nonempty.
    pub fn is_complete_bipartite(&self) -> bool {
        match &self.bipartition {
            Some(b) if !b.left.is_empty() && !b.right.is_empty() => {
                self.m() == b.left.len() * b.right.len()
            }
            _ => false,
        }
    }

    /// Adjacency as a dense 0/1 matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = true;
            a[v][u] = true;
        }
        a
    }
}

fn two_colour(n: usize, adj: &[Vec<usize>]) -> Option<Bipartition> {
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = colour[v].expect("queued vertices are coloured");
            for &u in &adj[v] {
                match colour[u] {
                    None => {
                        colour[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, c) in colour.into_iter().enumerate() {
        if c == Some(false) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some(Bipartition { left, right })
}

/// The 2-stretch of `g`: every edge `e = (u,v)` is subdivided by a midpoint
/// vertex `n + e`. Returns the stretched graph and the midpoint of each edge.
pub fn two_stretch(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    let mids: Vec<usize> = (0..g.m()).map(|i| n + i).collect();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    let out = Graph::new(n + g.m(), edges).expect("2-stretch of a simple graph is simple");
    (out, mids)
}

/// A hypergraph with a multiset of nonempty hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Each hyperedge is stored sorted; vertices inside a hyperedge must be
    /// distinct. Repeated hyperedges are kept.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Hypergraph> {
        let mut out = Vec::new();
        for mut f in edges {
            if f.is_empty() {
                return Err(Error::Graph("empty hyperedge".into()));
            }
            f.sort_unstable();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::Graph(format!(
                    "hyperedge vertex {v} outside 0..{n}"
                )));
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Graph(format!("repeated vertex in hyperedge {f:?}")));
            }
            out.push(f);
        }
        Ok(Hypergraph { n, edges: out })
    }

    /// A graph viewed as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Hypergraph {
        Hypergraph {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Largest hyperedge size, 0 for no hyperedges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }
}
