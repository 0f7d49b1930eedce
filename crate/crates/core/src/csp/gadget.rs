//! Simulating integer variable weights with unweighted implication gadgets.
//!
//! For a variable `x` and branch `b`, `gamma_x(1 ^ b)` is written in binary.
//! Each set bit `i` gets a block of `i` free variables squeezed between a
//! left end `L` and a right end `R`; consecutive blocks are glued `R_i = L_j`.
//! Branch 0 is anchored with `L = 0` at its lowest block, branch 1 with
//! `R = 1` at its highest, and `x` is tied to `R` of the top block of branch 0
//! and to `L` of the bottom block of branch 1.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use super::{Constraint, CspInstance, WeightedCspInstance};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitExpansion {
    pub k: usize,
    /// `bits[b][i]` is the coefficient of `2^i` in `gamma(1 ^ b)`, for `i` in `0..=k`.
    pub bits: [Vec<bool>; 2],
}

impl BitExpansion {
    pub fn new(gamma0: &BigUint, gamma1: &BigUint) -> Result<Self> {
        let zero = BigUint::from(0u32);
        if *gamma0 == zero || *gamma1 == zero {
            return Err(Error::Csp("gadget weights must be positive".into()));
        }
        let ceil_lg = |g: &BigUint| (g - 1u32).bits() as usize;
        let k = ceil_lg(gamma0).max(ceil_lg(gamma1));
        let expand = |g: &BigUint| (0..=k).map(|i| g.bit(i as u64)).collect::<Vec<_>>();
        Ok(BitExpansion {
            k,
            bits: [expand(gamma1), expand(gamma0)],
        })
    }

    pub fn a(&self, b: usize, i: usize) -> bool {
        self.bits[b].get(i).copied().unwrap_or(false)
    }

    pub fn ones(&self, b: usize) -> Vec<usize> {
        (0..=self.k).filter(|&i| self.a(b, i)).collect()
    }

    pub fn min(&self, b: usize) -> usize {
        self.ones(b)[0]
    }

    pub fn max(&self, b: usize) -> usize {
        *self.ones(b).last().expect("positive weight has a set bit")
    }

    pub fn next(&self, b: usize, i: usize) -> Option<usize> {
        self.ones(b).into_iter().find(|&j| j > i)
    }

    pub fn prev(&self, b: usize, i: usize) -> Option<usize> {
        self.ones(b).into_iter().rev().find(|&j| j < i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarRole {
    Original(usize),
    Left { x: usize, b: usize, i: usize },
    Right { x: usize, b: usize, i: usize },
    /// `x_{b,i,j}`, `j` in `1..=i`
    Inner { x: usize, b: usize, i: usize, j: usize },
}

impl fmt::Display for VarRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarRole::Original(x) => write!(f, "original x={x}"),
            VarRole::Left { x, b, i } => write!(f, "L x={x} b={b} i={i}"),
            VarRole::Right { x, b, i } => write!(f, "R x={x} b={b} i={i}"),
            VarRole::Inner { x, b, i, j } => write!(f, "inner x={x} b={b} i={i} j={j}"),
        }
    }
}

/// One block `A_{x,b,i}` with its constraints `C_{x,b,i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetBlock {
    pub x: usize,
    pub b: usize,
    pub i: usize,
    pub left: usize,
    pub right: usize,
    pub inner: Vec<usize>,
    pub constraints: Vec<Constraint>,
}

impl GadgetBlock {
    pub fn vars(&self) -> Vec<usize> {
        let mut v = vec![self.left];
        v.extend(&self.inner);
        v.push(self.right);
        v
    }

    /// The block alone, renumbered `L, inner.., R`.
    pub fn sub_instance(&self) -> CspInstance {
        restrict(&self.vars(), &self.constraints)
    }
}

fn restrict(vars: &[usize], constraints: &[Constraint]) -> CspInstance {
    let local: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let cs = constraints
        .iter()
        .map(|c| match *c {
            Constraint::Imp(a, b) => Constraint::Imp(local[&a], local[&b]),
            Constraint::Pin0(a) => Constraint::Pin0(local[&a]),
            Constraint::Pin1(a) => Constraint::Pin1(local[&a]),
        })
        .collect();
    CspInstance::new(vars.len(), cs).expect("restricted constraints stay in range")
}

#[derive(Clone, Debug)]
pub struct CompiledCsp {
    pub csp: CspInstance,
    pub roles: Vec<VarRole>,
    pub expansions: Vec<BitExpansion>,
    pub blocks: Vec<GadgetBlock>,
    /// `C''_{x,b}`: the gluing constraints plus the anchoring pin.
    pub glue: BTreeMap<(usize, usize), Vec<Constraint>>,
}

impl CompiledCsp {
    pub fn block(&self, x: usize, b: usize, i: usize) -> Option<&GadgetBlock> {
        self.blocks.iter().find(|g| (g.x, g.b, g.i) == (x, b, i))
    }

    /// `(A_{x,b}, C_{x,b})` renumbered, together with the local index of the
    /// endpoint tied to `x` (`R` of the top block for `b = 0`, `L` of the
    /// bottom block for `b = 1`).
    pub fn branch_instance(&self, x: usize, b: usize) -> (CspInstance, usize) {
        let blocks: Vec<&GadgetBlock> = self.blocks.iter().filter(|g| g.x == x && g.b == b).collect();
        let vars: Vec<usize> = blocks.iter().flat_map(|g| g.vars()).collect();
        let mut cs: Vec<Constraint> = blocks.iter().flat_map(|g| g.constraints.iter().copied()).collect();
        cs.extend(self.glue[&(x, b)].iter().copied());
        let endpoint = if b == 0 {
            blocks.last().expect("branch has a block").right
        } else {
            blocks[0].left
        };
        let local = vars.iter().position(|&v| v == endpoint).expect("endpoint is a block variable");
        (restrict(&vars, &cs), local)
    }
}

/// Replaces every weight of an integer-weighted instance by an unweighted
/// gadget with the same number of solutions per value of the variable.
pub fn compile_weight_gadget(inst: &WeightedCspInstance) -> Result<CompiledCsp> {
    let n = inst.csp().nvars();
    let mut roles: Vec<VarRole> = (0..n).map(VarRole::Original).collect();
    let mut constraints = inst.csp().constraints().to_vec();
    let mut expansions = Vec::with_capacity(n);
    let mut blocks = Vec::new();
    let mut glue = BTreeMap::new();

    for x in 0..n {
        let [g0, g1] = inst.weight(x);
        let as_int = |g: &crate::arith::Rational| -> Result<BigUint> {
            if !g.is_integer() {
                return Err(Error::Csp(format!("weight {g} of variable {x} is not an integer")));
            }
            g.to_integer()
                .to_biguint()
                .ok_or_else(|| Error::Csp(format!("weight of variable {x} is negative")))
        };
        let exp = BitExpansion::new(&as_int(g0)?, &as_int(g1)?)?;
        let mut ends: [BTreeMap<usize, (usize, usize)>; 2] = Default::default();
        for b in 0..2 {
            for i in exp.ones(b) {
                let left = roles.len();
                roles.push(VarRole::Left { x, b, i });
                let inner: Vec<usize> = (1..=i)
                    .map(|j| {
                        roles.push(VarRole::Inner { x, b, i, j });
                        roles.len() - 1
                    })
                    .collect();
                let right = roles.len();
                roles.push(VarRole::Right { x, b, i });
                let cs = if i == 0 {
                    vec![Constraint::Imp(left, right)]
                } else {
                    inner
                        .iter()
                        .flat_map(|&v| [Constraint::Imp(left, v), Constraint::Imp(v, right)])
                        .collect()
                };
                constraints.extend(cs.iter().copied());
                ends[b].insert(i, (left, right));
                blocks.push(GadgetBlock {
                    x,
                    b,
                    i,
                    left,
                    right,
                    inner,
                    constraints: cs,
                });
            }
            let mut c2 = Vec::new();
            for i in exp.ones(b) {
                if let Some(j) = exp.next(b, i) {
                    let (r_i, l_j) = (ends[b][&i].1, ends[b][&j].0);
                    c2.push(Constraint::Imp(r_i, l_j));
                    c2.push(Constraint::Imp(l_j, r_i));
                }
            }
            c2.push(if b == 0 {
                Constraint::Pin0(ends[0][&exp.min(0)].0)
            } else {
                Constraint::Pin1(ends[1][&exp.max(1)].1)
            });
            constraints.extend(c2.iter().copied());
            glue.insert((x, b), c2);
        }
        let r0 = ends[0][&exp.max(0)].1;
        let l1 = ends[1][&exp.min(1)].0;
        constraints.extend([
            Constraint::Imp(x, r0),
            Constraint::Imp(r0, x),
            Constraint::Imp(x, l1),
            Constraint::Imp(l1, x),
        ]);
        expansions.push(exp);
    }
    Ok(CompiledCsp {
        csp: CspInstance::new(roles.len(), constraints)?,
        roles,
        expansions,
        blocks,
        glue,
    })
}
