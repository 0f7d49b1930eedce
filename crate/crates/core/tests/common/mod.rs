//! Brute-force oracles and instance generators shared by the integration
//! tests. Nothing here calls into the library's counting code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use homred::arith::Rational;
use homred::csp::{Constraint, CspInstance};
use homred::hom::{EdgeWeightedInstance, Weight, WeightTable};
use homred::{Graph, Hypergraph};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;

/// Calls `f` on every map `[n] -> [h]`.
pub fn for_each_map(n: usize, h: usize, mut f: impl FnMut(&[usize])) {
    if h == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut sigma = vec![0usize; n];
    loop {
        f(&sigma);
        let mut i = 0;
        while i < n && sigma[i] + 1 == h {
            sigma[i] = 0;
            i += 1;
        }
        if i == n {
            return;
        }
        sigma[i] += 1;
    }
}

pub fn naive_hom(g: &Graph, h: &Graph) -> BigUint {
    let mut count = BigUint::zero();
    for_each_map(g.n(), h.n(), |s| {
        if g.edges().iter().all(|&(u, v)| h.has_edge(s[u], s[v])) {
            count += 1u32;
        }
    });
    count
}

pub fn naive_whom(g: &Graph, h: &Graph, w: &WeightTable) -> Rational {
    let mut total = Rational::zero();
    for_each_map(g.n(), h.n(), |s| {
        if g.edges().iter().all(|&(u, v)| h.has_edge(s[u], s[v])) {
            total += (0..g.n()).map(|v| w.row(v)[s[v]].clone()).product::<Rational>();
        }
    });
    total
}

/// Enumerates core colourings and folds each pendant chain by summing over
/// its own colourings.
pub fn naive_ewhom<T: Weight>(inst: &EdgeWeightedInstance<T>) -> T {
    let h = inst.h();
    let chain_factor = |links: &[homred::hom::ChainLink<T>], a: usize| -> T {
        let mut total = T::zero();
        for_each_map(links.len(), h, |cs| {
            let mut prev = a;
            let mut term = T::one();
            for (link, &c) in links.iter().zip(cs) {
                term = term.mul_ref(&link.table[prev * h + c]).mul_ref(&link.weight[c]);
                prev = c;
            }
            total.add_assign_ref(&term);
        });
        total
    };
    let mut total = T::zero();
    for_each_map(inst.n(), h, |s| {
        let mut term = T::one();
        for (v, &c) in s.iter().enumerate() {
            term = term.mul_ref(&inst.vertex_weight(v)[c]);
        }
        for e in inst.edges() {
            term = term.mul_ref(&e.table[s[e.u] * h + s[e.v]].pow(e.multiplicity));
        }
        for p in inst.pendants() {
            term = term.mul_ref(&chain_factor(&p.links, s[p.anchor]).pow(p.copies));
        }
        total.add_assign_ref(&term);
    });
    total
}

pub fn independent_sets(g: &Graph) -> u64 {
    (0u64..1 << g.n())
        .filter(|s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .count() as u64
}

pub fn naive_potts(g: &Graph, q: usize, gamma: &Rational) -> Rational {
    let one = Rational::one();
    let mut total = Rational::zero();
    for_each_map(g.n(), q, |s| {
        let mono = g.edges().iter().filter(|&&(u, v)| s[u] == s[v]).count();
        total += num_traits::pow(&one + gamma, mono);
    });
    total
}

pub fn naive_hyperpotts(hg: &Hypergraph, q: usize, gamma: &Rational) -> Rational {
    let one = Rational::one();
    let mut total = Rational::zero();
    for_each_map(hg.n(), q, |s| {
        let mono = hg.edges().iter().filter(|f| f.iter().all(|&v| s[v] == s[f[0]])).count();
        total += num_traits::pow(&one + gamma, mono);
    });
    total
}

fn holds(c: &Constraint, sigma: &[bool]) -> bool {
    match *c {
        Constraint::Imp(x, y) => !sigma[x] || sigma[y],
        Constraint::Pin0(x) => !sigma[x],
        Constraint::Pin1(x) => sigma[x],
    }
}

/// All satisfying assignments, by exhaustive search.
pub fn satisfying(csp: &CspInstance) -> Vec<Vec<bool>> {
    let n = csp.nvars();
    assert!(n <= 24, "too many variables for the oracle");
    (0u64..1 << n)
        .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|s| csp.constraints().iter().all(|c| holds(c, s)))
        .collect()
}

pub fn naive_wcsp(csp: &CspInstance, weights: &[[Rational; 2]]) -> Rational {
    satisfying(csp)
        .iter()
        .map(|s| {
            s.iter()
                .enumerate()
                .map(|(x, &b)| weights[x][b as usize].clone())
                .product::<Rational>()
        })
        .sum()
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn is_bipartite(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut colour = vec![usize::MAX; n];
    for s in 0..n {
        if colour[s] != usize::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &(a, b) in edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == u {
                        if colour[y] == usize::MAX {
                            colour[y] = 1 - colour[u];
                            stack.push(y);
                        } else if colour[y] == colour[u] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut es: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            es.sort_unstable();
            es
        })
        .min()
        .unwrap_or_default()
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices satisfying `keep`.
pub fn graphs_up_to_iso(n: usize, keep: impl Fn(usize, &[(usize, usize)]) -> bool) -> Vec<Graph> {
    graphs_up_to_iso_with(n, usize::MAX, keep)
}

/// As [`graphs_up_to_iso`], skipping edge sets larger than `max_m` early.
fn graphs_up_to_iso_with(n: usize, max_m: usize, keep: impl Fn(usize, &[(usize, usize)]) -> bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        if mask.count_ones() as usize > max_m {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if !keep(n, &edges) {
            continue;
        }
        if seen.insert(canonical(&edges, &perms)) {
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n, is_connected)
}

pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n, |n, e| is_connected(n, e) && is_bipartite(n, e))
}

/// All graphs up to isomorphism on at most `max_n` vertices with at most
/// `max_m` edges.
pub fn small_graphs(max_n: usize, max_m: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| graphs_up_to_iso(n, |_, e| e.len() <= max_m))
        .collect()
}

/// A uniformly random labelled tree via a Pruefer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::path(2);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Induced-subgraph containment by trying every vertex subset of the
/// pattern's size and every bijection onto it.
pub fn brute_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    let n = host.n();
    if k > n {
        return false;
    }
    let perms = permutations(k);
    let mut pdeg: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();
    pdeg.sort_unstable();
    (0u64..1 << n).filter(|s| s.count_ones() as usize == k).any(|s| {
        let vs: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
        let mut deg: Vec<usize> = vs
            .iter()
            .map(|&a| vs.iter().filter(|&&b| host.has_edge(a, b)).count())
            .collect();
        deg.sort_unstable();
        deg == pdeg
            && perms.iter().any(|p| {
                (0..k).all(|a| (0..k).all(|b| a == b || pattern.has_edge(a, b) == host.has_edge(vs[p[a]], vs[p[b]])))
            })
    })
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn urat(n: &BigUint) -> Rational {
    Rational::from_integer(n.clone().into())
}

/// Connected graphs with between 1 and `max_m` edges, one per isomorphism
/// class, grown one edge at a time from `K2`.
pub fn connected_by_edges(max_m: usize) -> Vec<Graph> {
    let mut perms = vec![Vec::new(); max_m + 2];
    for (n, slot) in perms.iter_mut().enumerate() {
        *slot = permutations(n);
    }
    let mut level: Vec<(usize, Vec<(usize, usize)>)> = vec![(2, vec![(0, 1)])];
    let mut out = Vec::new();
    for _ in 1..=max_m {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for (n, edges) in &level {
            out.push(Graph::new(*n, edges.clone()).unwrap());
            let mut cands: Vec<(usize, (usize, usize))> = (0..*n).map(|u| (n + 1, (u, *n))).collect();
            for u in 0..*n {
                for v in u + 1..*n {
                    if !edges.contains(&(u, v)) {
                        cands.push((*n, (u, v)));
                    }
                }
            }
            for (n2, e) in cands {
                let mut es = edges.clone();
                es.push(e);
                if n2 < perms.len() && seen.insert((n2, canonical(&es, &perms[n2]))) {
                    next.push((n2, es));
                }
            }
        }
        level = next;
    }
    out
}

/// Every graph with at most `max_m` edges, up to isomorphism, built as a
/// multiset of connected components with at least one edge, optionally with
/// one extra isolated vertex.
pub fn graphs_with_few_edges(max_m: usize) -> Vec<Graph> {
    let comps = connected_by_edges(max_m);
    let mut out = Vec::new();
    fn extend(comps: &[Graph], start: usize, budget: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chosen.clone());
        for i in start..comps.len() {
            if comps[i].m() <= budget {
                chosen.push(i);
                extend(comps, i, budget - comps[i].m(), chosen, out);
                chosen.pop();
            }
        }
    }
    let mut picks = Vec::new();
    extend(&comps, 0, max_m, &mut Vec::new(), &mut picks);
    for pick in picks {
        let g = pick
            .iter()
            .fold(Graph::empty(0), |acc, &i| acc.disjoint_union(&comps[i]));
        out.push(g.disjoint_union(&Graph::empty(1)));
        if g.n() > 0 {
            out.push(g);
        }
    }
    out
}

/// Connected bipartite graphs on exactly `n` vertices, one per isomorphism
/// class, generated from a side split and the edges across it.
pub fn connected_bipartite_by_split(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let cross: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << cross.len() {
            let edges: Vec<(usize, usize)> =
                (0..cross.len()).filter(|i| mask >> i & 1 == 1).map(|i| cross[i]).collect();
            if is_connected(n, &edges) && seen.insert(canonical(&edges, &perms)) {
                out.push(Graph::new(n, edges).unwrap());
            }
        }
    }
    out
}
