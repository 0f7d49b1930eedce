//! Linear codes over prime fields, weight enumerators and the Potts
//! construction that maps a graph to a generating matrix.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{enum_cap, ensure_within_cap, rat_int, rat_pow, uint_to_rat, Exact, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::potts::{potts_graph, PottsParams};

/// Default bound on the number of codewords or assignments enumerated.
pub const DEFAULT_CODEWORD_CAP: u128 = 1 << 24;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inverse(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// A code given by a generating matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    p: u64,
    len: usize,
    rows: Vec<Vec<u64>>,
}

impl LinearCode {
    pub fn new(p: u64, len: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Code(format!("{p} is not prime")));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != len {
                return Err(Error::Code(format!("row {i} has {} entries, expected {len}", r.len())));
            }
            if let Some(x) = r.iter().find(|&&x| x >= p) {
                return Err(Error::Code(format!("entry {x} in row {i} is not below {p}")));
            }
        }
        Ok(LinearCode { p, len, rows })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Codeword length.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn basis(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.len {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = inverse(m[rank][col], p);
            for x in m[rank].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    let pivot = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot) {
                        *x = (*x + (p - f) * y) % p;
                    }
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        m
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    /// `A_i`, the number of codewords of Hamming weight `i`, for `i = 0..=len`.
    pub fn weight_distribution(&self) -> Result<Vec<BigUint>> {
        let basis = self.basis();
        let total = ensure_within_cap("codewords", self.p as u128, basis.len(), enum_cap(DEFAULT_CODEWORD_CAP))?;
        let (p, len) = (self.p, self.len);
        let chunk = 1u64 << 14;
        let parts: Vec<Vec<u64>> = (0..(total as u64).div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut hist = vec![0u64; len + 1];
                let mut word = vec![0u64; len];
                for idx in c * chunk..((c + 1) * chunk).min(total as u64) {
                    word.iter_mut().for_each(|x| *x = 0);
                    let mut rem = idx;
                    for row in &basis {
                        let coeff = rem % p;
                        rem /= p;
                        if coeff != 0 {
                            for (w, &x) in word.iter_mut().zip(row) {
                                *w = (*w + coeff * x) % p;
                            }
                        }
                    }
                    hist[word.iter().filter(|&&x| x != 0).count()] += 1;
                }
                hist
            })
            .collect();
        let mut out = vec![BigUint::zero(); len + 1];
        for part in parts {
            for (o, c) in out.iter_mut().zip(part) {
                *o += c;
            }
        }
        Ok(out)
    }
}

/// `W(lambda) = sum over distinct codewords of lambda^weight`.
pub fn weight_enumerator(code: &LinearCode, lambda: &Rational) -> Result<Rational> {
    let dist = code.weight_distribution()?;
    let mut total = Rational::zero();
    let mut power = Rational::one();
    for a in dist {
        total += uint_to_rat(&a) * &power;
        power *= lambda;
    }
    Ok(total)
}

/// The equation system of the Potts construction for `q = p^k`.
#[derive(Clone, Debug)]
pub struct PottsCodeSystem {
    pub graph: Graph,
    /// Each edge as `(u, v)`; its rows read `l_j(sigma(v) - sigma(u)) = 0`.
    pub orientation: Vec<(usize, usize)>,
    pub p: u64,
    pub k: usize,
    pub q: usize,
    /// Coefficient vectors of the forms, form `j` being the base-`p` digits
    /// of `j` (least significant first). Form 0 is the zero form.
    pub forms: Vec<Vec<u64>>,
    /// `qm x kn`; row `e*q + j`, column `i*n + v`.
    pub matrix: Vec<Vec<u64>>,
}

fn digits(mut x: usize, p: u64, k: usize) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = x as u64 % p;
            x /= p as usize;
            d
        })
        .collect()
}

/// Edges oriented from the lower to the higher index.
pub fn build_potts_code(g: &Graph, p: u64, k: usize) -> Result<PottsCodeSystem> {
    build_potts_code_oriented(g, p, k, false)
}

/// As [`build_potts_code`]; `reversed` orients every edge high to low.
pub fn build_potts_code_oriented(g: &Graph, p: u64, k: usize, reversed: bool) -> Result<PottsCodeSystem> {
    if !is_prime(p) {
        return Err(Error::Code(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::Code("k must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Code("graph must be connected".into()));
    }
    let q = (p as usize)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::Code("p^k overflows".into()))?;
    let n = g.n();
    let forms: Vec<Vec<u64>> = (0..q).map(|j| digits(j, p, k)).collect();
    let orientation: Vec<(usize, usize)> =
        g.edges().iter().map(|&(a, b)| if reversed { (b, a) } else { (a, b) }).collect();
    let mut matrix = vec![vec![0u64; k * n]; q * g.m()];
    for (e, &(u, v)) in orientation.iter().enumerate() {
        for (j, alpha) in forms.iter().enumerate() {
            let row = &mut matrix[e * q + j];
            for (i, &a) in alpha.iter().enumerate() {
                row[i * n + v] = (row[i * n + v] + a) % p;
                row[i * n + u] = (row[i * n + u] + p - a) % p;
            }
        }
    }
    Ok(PottsCodeSystem {
        graph: g.clone(),
        orientation,
        p,
        k,
        q,
        forms,
        matrix,
    })
}

impl PottsCodeSystem {
    /// `phi(c)`: the base-`p` digits of the 0-based colour `c`.
    pub fn phi(&self, c: usize) -> Vec<u64> {
        digits(c, self.p, self.k)
    }

    /// `sigma_hat` for a colouring `sigma: V -> 0..q`, indexed `i*n + v`.
    pub fn lift(&self, sigma: &[usize]) -> Vec<u64> {
        let n = self.graph.n();
        let mut out = vec![0; self.k * n];
        for (v, &c) in sigma.iter().enumerate() {
            for (i, d) in self.phi(c).into_iter().enumerate() {
                out[i * n + v] = d;
            }
        }
        out
    }

    /// `b(sigma_hat) = A sigma_hat`.
    pub fn encode(&self, sigma_hat: &[u64]) -> Vec<u64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(sigma_hat).map(|(a, x)| a * x).sum::<u64>() % self.p)
            .collect()
    }

    /// Number of unsatisfied equations, which is the weight of the encoding.
    pub fn unsat(&self, sigma_hat: &[u64]) -> usize {
        self.encode(sigma_hat).iter().filter(|&&x| x != 0).count()
    }

    /// The code spanned by the columns of `A`: one generator per column.
    pub fn code(&self) -> LinearCode {
        let cols = self.matrix.first().map_or(self.k * self.graph.n(), Vec::len);
        let rows = (0..cols).map(|c| self.matrix.iter().map(|r| r[c]).collect()).collect();
        LinearCode::new(self.p, self.matrix.len(), rows).expect("entries reduced mod p")
    }

    /// Checks that every codeword is the image of exactly `q` assignments
    /// and that every codeword is hit.
    pub fn check_q_to_one(&self) -> Result<bool> {
        let vars = self.k * self.graph.n();
        let total = ensure_within_cap("assignments", self.p as u128, vars, enum_cap(DEFAULT_CODEWORD_CAP))?;
        let mut hits: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut x = vec![0u64; vars];
        for idx in 0..total as u64 {
            let mut rem = idx;
            for d in x.iter_mut() {
                *d = rem % self.p;
                rem /= self.p;
            }
            *hits.entry(self.encode(&x)).or_default() += 1;
        }
        let rank = self.code().rank();
        Ok(hits.len() as u128 == (self.p as u128).pow(rank as u32) && hits.values().all(|&c| c == self.q))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PottsWeReport {
    pub q: usize,
    pub gamma: Exact,
    pub potts: Exact,
    pub enumerator: Exact,
    /// `q * lambda^(-(p-1) p^(k-1) m)`.
    pub factor: Exact,
    pub rhs: Exact,
    pub pass: bool,
}

/// `gamma = lambda^(-(p-1) p^(k-1)) - 1`.
pub fn potts_we_gamma(p: u64, k: usize, lambda: &Rational) -> Rational {
    let e = (p - 1) * p.pow(k as u32 - 1);
    rat_pow(lambda, -(e as i64)) - Rational::one()
}

/// Checks `Z_Potts(G; q, gamma) = q lambda^(-(p-1) p^(k-1) m) W(lambda)`.
pub fn verify_potts_we(g: &Graph, p: u64, k: usize, lambda: &Rational) -> Result<PottsWeReport> {
    verify_with(&build_potts_code(g, p, k)?, lambda)
}

/// [`verify_potts_we`] on an already built system.
pub fn verify_with(sys: &PottsCodeSystem, lambda: &Rational) -> Result<PottsWeReport> {
    if lambda <= &Rational::zero() || lambda >= &Rational::one() {
        return Err(Error::Code("lambda must lie in (0, 1)".into()));
    }
    let (p, k, q) = (sys.p, sys.k, sys.q);
    let gamma = potts_we_gamma(p, k, lambda);
    let potts = potts_graph(&sys.graph, &PottsParams::new(q, gamma.clone())?);
    let enumerator = weight_enumerator(&sys.code(), lambda)?;
    let e = (p - 1) * p.pow(k as u32 - 1) * sys.graph.m() as u64;
    let factor = rat_int(q as u64) * rat_pow(lambda, -(e as i64));
    let rhs = &factor * &enumerator;
    Ok(PottsWeReport {
        q,
        pass: potts == rhs,
        gamma: Exact(gamma),
        potts: Exact(potts),
        enumerator: Exact(enumerator),
        factor: Exact(factor),
        rhs: Exact(rhs),
    })
}
