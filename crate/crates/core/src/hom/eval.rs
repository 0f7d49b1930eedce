//! Edge- and vertex-weighted partition functions over a colour set `[h]`.
//!
//! The value of an [`EdgeWeightedInstance`] is
//!
//! ```text
//! sum over sigma: V -> [h] of  prod_v w_v(sigma(v))
//!                            * prod_e t_e(sigma(u), sigma(v))^mult(e)
//!                            * prod_pendants (chain factor at anchor)^copies
//! ```
//!
//! Evaluation first folds pendant chains and degree-<=1 vertices into their
//! neighbours (to a fixed point) and then runs bucket elimination over a
//! greedy minimum-degree order. Everything is exact.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Debug;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact commutative semiring values the evaluator can sum and multiply.
pub trait Weight: Clone + Debug + PartialEq + Zero + One + Send + Sync + 'static {
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;

    fn mul_assign_ref(&mut self, other: &Self) {
        *self = self.mul_ref(other);
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn from_u64(n: u64) -> Self;
}

impl Weight for BigUint {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_u64(n: u64) -> Self {
        BigUint::from(n)
    }
}

impl Weight for Rational {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_u64(n: u64) -> Self {
        Rational::from_integer(n.into())
    }
}

/// A dense `h x h` table, indexed `[a * h + b]`.
pub type PairTable<T> = Arc<Vec<T>>;

type OrientedTable<T> = (usize, usize, PairTable<T>);

/// The 0/1 adjacency table of `target`.
pub fn adjacency_table<T: Weight>(target: &Graph) -> PairTable<T> {
    let h = target.n();
    let mut t = vec![T::zero(); h * h];
    for &(a, b) in target.edges() {
        t[a * h + b] = T::one();
        t[b * h + a] = T::one();
    }
    Arc::new(t)
}

#[derive(Clone, Debug)]
pub struct WeightedEdge<T> {
    pub u: usize,
    pub v: usize,
    /// `table[a * h + b]` is the factor for `sigma(u) = a, sigma(v) = b`.
    pub table: PairTable<T>,
    pub multiplicity: u64,
}

/// One vertex of a pendant chain: its colour weights and the table linking it
/// to the previous chain vertex (or to the anchor for the first link).
#[derive(Clone, Debug)]
pub struct ChainLink<T> {
    pub table: PairTable<T>,
    pub weight: Vec<T>,
}

/// `copies` disjoint paths hanging off `anchor`, each realising `links`.
#[derive(Clone, Debug)]
pub struct PendantChain<T> {
    pub anchor: usize,
    pub links: Vec<ChainLink<T>>,
    pub copies: u64,
}

#[derive(Clone, Debug)]
pub struct EdgeWeightedInstance<T> {
    h: usize,
    vertex_weights: Vec<Vec<T>>,
    edges: Vec<WeightedEdge<T>>,
    pendants: Vec<PendantChain<T>>,
    pairs: BTreeSet<(usize, usize)>,
}

impl<T: Weight> EdgeWeightedInstance<T> {
    /// `n` core vertices with unit weights over `h` colours and no edges.
    pub fn new(n: usize, h: usize) -> Self {
        EdgeWeightedInstance {
            h,
            vertex_weights: vec![vec![T::one(); h]; n],
            edges: Vec::new(),
            pendants: Vec::new(),
            pairs: BTreeSet::new(),
        }
    }

    /// Homomorphisms from `g` to `target` with unit weights.
    pub fn homomorphisms(g: &Graph, target: &Graph) -> Self {
        let mut inst = Self::new(g.n(), target.n());
        let adj = adjacency_table::<T>(target);
        for &(u, v) in g.edges() {
            inst.add_edge(u, v, adj.clone(), 1)
                .expect("edges of a simple graph are valid");
        }
        inst
    }

    pub fn n(&self) -> usize {
        self.vertex_weights.len()
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn edges(&self) -> &[WeightedEdge<T>] {
        &self.edges
    }

    pub fn pendants(&self) -> &[PendantChain<T>] {
        &self.pendants
    }

    pub fn vertex_weight(&self, v: usize) -> &[T] {
        &self.vertex_weights[v]
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_weights.push(vec![T::one(); self.h]);
        self.vertex_weights.len() - 1
    }

    pub fn set_weight(&mut self, v: usize, weight: Vec<T>) -> Result<()> {
        if weight.len() != self.h {
            return Err(Error::Hom(format!(
                "weight vector of vertex {v} has length {}, expected {}",
                weight.len(),
                self.h
            )));
        }
        *self
            .vertex_weights
            .get_mut(v)
            .ok_or_else(|| Error::Hom(format!("vertex {v} out of range")))? = weight;
        Ok(())
    }

    /// Multiplies the weight of `v` pointwise by `factor`.
    pub fn scale_weight(&mut self, v: usize, factor: &[T]) -> Result<()> {
        if factor.len() != self.h || v >= self.n() {
            return Err(Error::Hom(format!("bad weight factor for vertex {v}")));
        }
        for (w, f) in self.vertex_weights[v].iter_mut().zip(factor) {
            w.mul_assign_ref(f);
        }
        Ok(())
    }

    /// Restricts `v` to colour `c` (0/1 pin).
    pub fn pin(&mut self, v: usize, c: usize) -> Result<()> {
        if c >= self.h {
            return Err(Error::Hom(format!("pin colour {c} outside 0..{}", self.h)));
        }
        let mut ind = vec![T::zero(); self.h];
        ind[c] = T::one();
        self.scale_weight(v, &ind)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, table: PairTable<T>, multiplicity: u64) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n || u == v {
            return Err(Error::Hom(format!("bad core edge ({u},{v})")));
        }
        if table.len() != self.h * self.h {
            return Err(Error::Hom(format!(
                "edge table for ({u},{v}) has {} entries, expected {}",
                table.len(),
                self.h * self.h
            )));
        }
        if multiplicity == 0 {
            return Err(Error::Hom("edge multiplicity must be >= 1".into()));
        }
        if !self.pairs.insert((u.min(v), u.max(v))) {
            return Err(Error::Hom(format!("parallel core edge ({u},{v})")));
        }
        self.edges.push(WeightedEdge {
            u,
            v,
            table,
            multiplicity,
        });
        Ok(())
    }

    pub fn add_pendant(&mut self, anchor: usize, links: Vec<ChainLink<T>>, copies: u64) -> Result<()> {
        if anchor >= self.n() {
            return Err(Error::Hom(format!("pendant anchor {anchor} out of range")));
        }
        for l in &links {
            if l.table.len() != self.h * self.h || l.weight.len() != self.h {
                return Err(Error::Hom("pendant link dimensioned wrongly".into()));
            }
        }
        if !links.is_empty() && copies > 0 {
            self.pendants.push(PendantChain {
                anchor,
                links,
                copies,
            });
        }
        Ok(())
    }

    /// Adds `copies` pendant paths of `len` vertices at `anchor`, all edges
    /// given by `table` and all path vertices unweighted.
    pub fn add_pendant_path(&mut self, anchor: usize, len: usize, table: PairTable<T>, copies: u64) -> Result<()> {
        let links = (0..len)
            .map(|_| ChainLink {
                table: table.clone(),
                weight: vec![T::one(); self.h],
            })
            .collect();
        self.add_pendant(anchor, links, copies)
    }

    /// Expands every pendant chain into explicit core vertices and edges. The
    /// value is unchanged; the instance may become very large.
    pub fn materialise_pendants(&self) -> Self {
        let mut out = EdgeWeightedInstance {
            h: self.h,
            vertex_weights: self.vertex_weights.clone(),
            edges: self.edges.clone(),
            pendants: Vec::new(),
            pairs: self.pairs.clone(),
        };
        for p in &self.pendants {
            for _ in 0..p.copies {
                let mut prev = p.anchor;
                for link in &p.links {
                    let v = out.add_vertex();
                    out.vertex_weights[v] = link.weight.clone();
                    out.add_edge(prev, v, link.table.clone(), 1)
                        .expect("fresh vertex gives a fresh edge");
                    prev = v;
                }
            }
        }
        out
    }

    /// The underlying core graph (pendants excluded).
    pub fn core_graph(&self) -> Graph {
        Graph::new(self.n(), self.edges.iter().map(|e| (e.u, e.v)))
            .expect("core edges are simple by construction")
    }

    pub fn evaluate(&self) -> T {
        Evaluator::new(self).run()
    }
}

/// A factor over an ordered scope of vertices, dense row-major in `h`.
#[derive(Clone, Debug)]
struct Factor<T> {
    scope: Vec<usize>,
    table: Vec<T>,
}

struct Evaluator<T> {
    h: usize,
    weights: Vec<Vec<T>>,
    alive: Vec<bool>,
    /// per vertex: (neighbour, edge id)
    incident: Vec<Vec<(usize, usize)>>,
    /// edge tables already raised to their multiplicity, oriented (u, v)
    edge_tables: Vec<Option<OrientedTable<T>>>,
    scalar: T,
}

impl<T: Weight> Evaluator<T> {
    fn new(inst: &EdgeWeightedInstance<T>) -> Self {
        let n = inst.n();
        let mut powered: HashMap<(usize, u64), Arc<Vec<T>>> = HashMap::new();
        let mut incident = vec![Vec::new(); n];
        let mut edge_tables = Vec::with_capacity(inst.edges.len());
        for (id, e) in inst.edges.iter().enumerate() {
            let key = (Arc::as_ptr(&e.table) as usize, e.multiplicity);
            let table = powered
                .entry(key)
                .or_insert_with(|| {
                    if e.multiplicity == 1 {
                        e.table.clone()
                    } else {
                        Arc::new(e.table.iter().map(|x| x.pow(e.multiplicity)).collect())
                    }
                })
                .clone();
            incident[e.u].push((e.v, id));
            incident[e.v].push((e.u, id));
            edge_tables.push(Some((e.u, e.v, table)));
        }
        let mut ev = Evaluator {
            h: inst.h,
            weights: inst.vertex_weights.clone(),
            alive: vec![true; n],
            incident,
            edge_tables,
            scalar: T::one(),
        };
        for p in &inst.pendants {
            let msg = chain_message(inst.h, &p.links);
            let factor: Vec<T> = msg.iter().map(|x| x.pow(p.copies)).collect();
            for (w, f) in ev.weights[p.anchor].iter_mut().zip(&factor) {
                w.mul_assign_ref(f);
            }
        }
        ev
    }

    /// Table entry for edge `id` with `a` the colour of `from`.
    fn entry(&self, id: usize, from: usize, a: usize, b: usize) -> &T {
        let (u, _, t) = self.edge_tables[id].as_ref().expect("live edge");
        if *u == from {
            &t[a * self.h + b]
        } else {
            &t[b * self.h + a]
        }
    }

    fn live_incident(&self, v: usize) -> Vec<(usize, usize)> {
        self.incident[v]
            .iter()
            .copied()
            .filter(|&(u, id)| self.alive[u] && self.edge_tables[id].is_some())
            .collect()
    }

    /// Folds degree-0 and degree-1 vertices away until none remain.
    fn absorb_pendants(&mut self) {
        let n = self.weights.len();
        let mut stack: Vec<usize> = (0..n).rev().collect();
        while let Some(v) = stack.pop() {
            if !self.alive[v] {
                continue;
            }
            let inc = self.live_incident(v);
            match inc.len() {
                0 => {
                    let mut total = T::zero();
                    for w in &self.weights[v] {
                        total.add_assign_ref(w);
                    }
                    self.scalar.mul_assign_ref(&total);
                    self.alive[v] = false;
                }
                1 => {
                    let (u, id) = inc[0];
                    let h = self.h;
                    let msg: Vec<T> = (0..h)
                        .map(|a| {
                            let mut s = T::zero();
                            for b in 0..h {
                                let wb = &self.weights[v][b];
                                if wb.is_zero() {
                                    continue;
                                }
                                let t = self.entry(id, u, a, b);
                                if !t.is_zero() {
                                    s.add_assign_ref(&t.mul_ref(wb));
                                }
                            }
                            s
                        })
                        .collect();
                    for (w, m) in self.weights[u].iter_mut().zip(&msg) {
                        if !w.is_zero() {
                            w.mul_assign_ref(m);
                        }
                    }
                    self.edge_tables[id] = None;
                    self.alive[v] = false;
                    stack.push(u);
                }
                _ => {}
            }
        }
    }

    fn run(mut self) -> T {
        self.absorb_pendants();
        if self.scalar.is_zero() {
            return T::zero();
        }
        let h = self.h;
        let n = self.weights.len();
        let mut factors: Vec<Option<Factor<T>>> = Vec::new();
        let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for v in (0..n).filter(|&v| self.alive[v]) {
            factors.push(Some(Factor {
                scope: vec![v],
                table: self.weights[v].clone(),
            }));
        }
        for slot in self.edge_tables.iter_mut() {
            if let Some((u, v, t)) = slot.take() {
                nbrs[u].insert(v);
                nbrs[v].insert(u);
                let table = if u < v {
                    t.as_ref().clone()
                } else {
                    let mut tr = vec![T::zero(); h * h];
                    for a in 0..h {
                        for b in 0..h {
                            tr[b * h + a] = t[a * h + b].clone();
                        }
                    }
                    tr
                };
                factors.push(Some(Factor {
                    scope: vec![u.min(v), u.max(v)],
                    table,
                }));
            }
        }

        let mut remaining: BTreeSet<usize> = (0..n).filter(|&v| self.alive[v]).collect();
        while !remaining.is_empty() {
            let v = *remaining
                .iter()
                .min_by_key(|&&v| (nbrs[v].len(), v))
                .expect("nonempty");
            remaining.remove(&v);
            let involved: Vec<Factor<T>> = factors
                .iter_mut()
                .filter(|f| f.as_ref().is_some_and(|f| f.scope.contains(&v)))
                .map(|f| f.take().expect("checked"))
                .collect();
            let new = eliminate(h, v, &involved);
            let nb: Vec<usize> = nbrs[v].iter().copied().collect();
            for &a in &nb {
                nbrs[a].remove(&v);
                for &b in &nb {
                    if a != b {
                        nbrs[a].insert(b);
                    }
                }
            }
            nbrs[v].clear();
            if new.scope.is_empty() {
                self.scalar.mul_assign_ref(&new.table[0]);
                if self.scalar.is_zero() {
                    return T::zero();
                }
            } else {
                factors.push(Some(new));
            }
        }
        for f in factors.into_iter().flatten() {
            debug_assert!(f.scope.is_empty());
            self.scalar.mul_assign_ref(&f.table[0]);
        }
        self.scalar
    }
}

/// Message a pendant chain sends to its anchor: `msg[a]` is the weighted
/// number of ways to colour the chain given the anchor has colour `a`.
fn chain_message<T: Weight>(h: usize, links: &[ChainLink<T>]) -> Vec<T> {
    let mut below: Vec<T> = vec![T::one(); h];
    for link in links.iter().rev() {
        let here: Vec<T> = link
            .weight
            .iter()
            .zip(&below)
            .map(|(w, b)| w.mul_ref(b))
            .collect();
        below = (0..h)
            .map(|a| {
                let mut s = T::zero();
                for (b, hb) in here.iter().enumerate() {
                    let t = &link.table[a * h + b];
                    if !t.is_zero() && !hb.is_zero() {
                        s.add_assign_ref(&t.mul_ref(hb));
                    }
                }
                s
            })
            .collect();
    }
    below
}

/// Multiplies `factors` (all containing `v`) and sums out `v`.
fn eliminate<T: Weight>(h: usize, v: usize, factors: &[Factor<T>]) -> Factor<T> {
    let scope: Vec<usize> = factors
        .iter()
        .flat_map(|f| f.scope.iter().copied())
        .filter(|&u| u != v)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // For each factor, the stride of every variable in the joint scope and of v.
    let strides: Vec<(Vec<usize>, usize)> = factors
        .iter()
        .map(|f| {
            let k = f.scope.len();
            let stride_of = |x: usize| {
                f.scope
                    .iter()
                    .position(|&s| s == x)
                    .map(|p| h.pow((k - 1 - p) as u32))
                    .unwrap_or(0)
            };
            (scope.iter().map(|&u| stride_of(u)).collect(), stride_of(v))
        })
        .collect();
    let size = h.pow(scope.len() as u32);
    let compute = |idx: usize| -> T {
        // decode idx into colours of scope (row-major)
        let mut base = vec![0usize; factors.len()];
        let mut rem = idx;
        for pos in (0..scope.len()).rev() {
            let c = rem % h;
            rem /= h;
            for (fi, (st, _)) in strides.iter().enumerate() {
                base[fi] += st[pos] * c;
            }
        }
        let mut total = T::zero();
        'colour: for c in 0..h {
            let mut prod: Option<T> = None;
            for (fi, f) in factors.iter().enumerate() {
                let x = &f.table[base[fi] + strides[fi].1 * c];
                if x.is_zero() {
                    continue 'colour;
                }
                prod = Some(match prod {
                    None => x.clone(),
                    Some(p) => p.mul_ref(x),
                });
            }
            if let Some(p) = prod {
                total.add_assign_ref(&p);
            }
        }
        total
    };
    let table: Vec<T> = if size * h >= 4096 {
        (0..size).into_par_iter().map(compute).collect()
    } else {
        (0..size).map(compute).collect()
    };
    Factor { scope, table }
}
