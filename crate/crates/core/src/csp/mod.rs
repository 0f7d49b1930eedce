//! Boolean CSPs over implications and constant pins, weighted and unweighted.

mod gadget;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{enum_cap, ensure_within_cap, Rational};
use crate::error::{Error, Result};
use crate::hom::{EdgeWeightedInstance, Weight};

pub use gadget::{compile_weight_gadget, BitExpansion, CompiledCsp, GadgetBlock, VarRole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    /// `x = 1` implies `y = 1`.
    Imp(usize, usize),
    Pin0(usize),
    Pin1(usize),
}

impl Constraint {
    fn vars(&self) -> (usize, Option<usize>) {
        match *self {
            Constraint::Imp(x, y) => (x, Some(y)),
            Constraint::Pin0(x) | Constraint::Pin1(x) => (x, None),
        }
    }

    pub fn holds(&self, sigma: &[bool]) -> bool {
        match *self {
            Constraint::Imp(x, y) => !sigma[x] || sigma[y],
            Constraint::Pin0(x) => !sigma[x],
            Constraint::Pin1(x) => sigma[x],
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Imp(x, y) => write!(f, "imp {x} {y}"),
            Constraint::Pin0(x) => write!(f, "pin0 {x}"),
            Constraint::Pin1(x) => write!(f, "pin1 {x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspInstance {
    nvars: usize,
    constraints: Vec<Constraint>,
}

impl CspInstance {
    pub fn new(nvars: usize, constraints: Vec<Constraint>) -> Result<Self> {
        for c in &constraints {
            let (x, y) = c.vars();
            if x >= nvars || y.is_some_and(|y| y >= nvars) {
                return Err(Error::Csp(format!("constraint `{c}` names a variable outside 0..{nvars}")));
            }
        }
        Ok(CspInstance { nvars, constraints })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn satisfied_by(&self, sigma: &[bool]) -> bool {
        self.constraints.iter().all(|c| c.holds(sigma))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedCspInstance {
    csp: CspInstance,
    /// `weights[x] = [gamma_x(0), gamma_x(1)]`
    weights: Vec<[Rational; 2]>,
}

impl WeightedCspInstance {
    pub fn new(csp: CspInstance, weights: Vec<[Rational; 2]>) -> Result<Self> {
        if weights.len() != csp.nvars {
            return Err(Error::Csp(format!(
                "{} weight pairs for {} variables",
                weights.len(),
                csp.nvars
            )));
        }
        for (x, w) in weights.iter().enumerate() {
            if w.iter().any(|g| g <= &Rational::zero()) {
                return Err(Error::Csp(format!("weights of variable {x} must be positive")));
            }
        }
        Ok(WeightedCspInstance { csp, weights })
    }

    /// Every variable weighted `(1, 1)`.
    pub fn unweighted(csp: CspInstance) -> Self {
        let weights = vec![[Rational::one(), Rational::one()]; csp.nvars];
        WeightedCspInstance { csp, weights }
    }

    pub fn csp(&self) -> &CspInstance {
        &self.csp
    }

    pub fn weights(&self) -> &[[Rational; 2]] {
        &self.weights
    }

    pub fn weight(&self, x: usize) -> &[Rational; 2] {
        &self.weights[x]
    }
}

/// Number of satisfying assignments.
pub fn count_csp(inst: &CspInstance) -> BigUint {
    evaluate(inst, |_| [BigUint::one(), BigUint::one()])
}

/// `sum over satisfying sigma of prod_x gamma_x(sigma(x))`.
pub fn count_wcsp(inst: &WeightedCspInstance) -> Rational {
    evaluate(&inst.csp, |x| inst.weights[x].clone())
}

/// Runs the instance through the pairwise evaluator with two colours.
/// Pins become 0/1 vertex weights and all constraints on one pair of
/// variables are merged into a single table.
fn evaluate<T: Weight>(inst: &CspInstance, weight: impl Fn(usize) -> [T; 2]) -> T {
    let mut vertex: Vec<[T; 2]> = (0..inst.nvars).map(&weight).collect();
    let mut pairs: BTreeMap<(usize, usize), [bool; 4]> = BTreeMap::new();
    for c in &inst.constraints {
        match *c {
            Constraint::Pin0(x) => vertex[x][1] = T::zero(),
            Constraint::Pin1(x) => vertex[x][0] = T::zero(),
            Constraint::Imp(x, y) if x == y => {}
            Constraint::Imp(x, y) => {
                let (a, b) = (x.min(y), x.max(y));
                let t = pairs.entry((a, b)).or_insert([true; 4]);
                // index [sa * 2 + sb]; forbid sigma(x)=1, sigma(y)=0
                if x == a {
                    t[2] = false;
                } else {
                    t[1] = false;
                }
            }
        }
    }
    let mut ev = EdgeWeightedInstance::<T>::new(inst.nvars, 2);
    for (x, w) in vertex.into_iter().enumerate() {
        ev.set_weight(x, w.to_vec()).expect("two colours");
    }
    let mut tables: BTreeMap<[bool; 4], Arc<Vec<T>>> = BTreeMap::new();
    for ((a, b), mask) in pairs {
        let t = tables
            .entry(mask)
            .or_insert_with(|| Arc::new(mask.iter().map(|&ok| if ok { T::one() } else { T::zero() }).collect()))
            .clone();
        ev.add_edge(a, b, t, 1).expect("distinct merged pair");
    }
    ev.evaluate()
}

/// Default limit on `2^nvars` for [`count_csp_exhaustive`].
pub const DEFAULT_CSP_ENUM_CAP: u128 = 1 << 26;

/// Reference counter: tries all `2^n` assignments.
pub fn count_csp_exhaustive(inst: &CspInstance) -> Result<BigUint> {
    ensure_within_cap("csp assignments", 2, inst.nvars, enum_cap(DEFAULT_CSP_ENUM_CAP))?;
    let mut count = BigUint::zero();
    let mut sigma = vec![false; inst.nvars];
    for mask in 0u64..(1u64 << inst.nvars) {
        for (i, s) in sigma.iter_mut().enumerate() {
            *s = mask >> i & 1 == 1;
        }
        if inst.satisfied_by(&sigma) {
            count += 1u32;
        }
    }
    Ok(count)
}

/// Multiplies the weights of each variable by the LCM of their two
/// denominators. Returns the integral instance and the product `scale` of the
/// multipliers, so that `count_wcsp(out) = scale * count_wcsp(inst)`.
pub fn clear_denominators(inst: &WeightedCspInstance) -> (WeightedCspInstance, BigUint) {
    let mut scale = BigUint::one();
    let weights = inst
        .weights
        .iter()
        .map(|[g0, g1]| {
            let l = g0.denom().lcm(g1.denom());
            let f = Rational::from_integer(l.clone());
            scale *= l.to_biguint().expect("denominators are positive");
            [g0 * &f, g1 * &f]
        })
        .collect();
    (
        WeightedCspInstance {
            csp: inst.csp.clone(),
            weights,
        },
        scale,
    )
}
