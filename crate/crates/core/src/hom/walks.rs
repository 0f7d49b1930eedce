//! Simple-path and walk counts out of a vertex.

use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::target::{build_target_tree, TreeKind, J3_STAR_REPRESENTATIVES};

/// `d[k-1]` simple paths and `w[k-1]` walks of length `k` starting at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkProfile {
    pub d: Vec<BigUint>,
    pub w: Vec<BigUint>,
}

pub fn walk_profile(h: &Graph, v: usize, kmax: usize) -> Result<WalkProfile> {
    if kmax == 0 {
        return Err(Error::Hom("walk profile needs kmax >= 1".into()));
    }
    if v >= h.n() {
        return Err(Error::Hom(format!("vertex {v} out of range")));
    }
    let mut d = vec![BigUint::zero(); kmax];
    let mut visited = vec![false; h.n()];
    visited[v] = true;
    simple_paths(h, v, 0, kmax, &mut visited, &mut d);

    // row vector e_v * A^k
    let mut row = vec![BigUint::zero(); h.n()];
    row[v] = BigUint::one();
    let mut w = Vec::with_capacity(kmax);
    for _ in 0..kmax {
        let mut next = vec![BigUint::zero(); h.n()];
        for (u, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &t in h.neighbours(u) {
                next[t] += x;
            }
        }
        row = next;
        w.push(row.iter().sum());
    }
    Ok(WalkProfile { d, w })
}

fn simple_paths(h: &Graph, at: usize, len: usize, kmax: usize, visited: &mut [bool], d: &mut [BigUint]) {
    if len == kmax {
        return;
    }
    for &u in h.neighbours(at) {
        if visited[u] {
            continue;
        }
        d[len] += 1u32;
        visited[u] = true;
        simple_paths(h, u, len + 1, kmax, visited, d);
        visited[u] = false;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkRow {
    pub label: &'static str,
    pub profile: WalkProfile,
}

/// `d_1..d_3, w_1..w_3` for the orbit representatives of `J3*`.
pub fn walk_table() -> Vec<WalkRow> {
    let t = build_target_tree(TreeKind::J3Star).expect("J3* is well formed");
    J3_STAR_REPRESENTATIVES
        .iter()
        .map(|&label| WalkRow {
            label,
            profile: walk_profile(&t.graph, t.v(label), 3).expect("kmax is positive"),
        })
        .collect()
}

/// Fixed-width text rendering used by the CLI and the golden file.
pub fn format_walk_table(rows: &[WalkRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{:<10}{:>4}{:>4}{:>4}{:>4}{:>4}{:>4}", "h", "d1", "d2", "d3", "w1", "w2", "w3").unwrap();
    for r in rows {
        write!(out, "{:<10}", r.label).unwrap();
        for x in r.profile.d.iter().chain(&r.profile.w) {
            write!(out, "{:>4}", x.to_string()).unwrap();
        }
        out.push('\n');
    }
    out
}
