//! Hardness-direction gadgets: multiterminal cuts, the weighted and
//! unweighted cut gadgets, the Potts/junction gadgets and hypergraph
//! uniformisation, each with an exact certificate check.

mod certificate;
mod cuts;
mod hyper;
mod j3star;
mod junction;
mod whom;

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::arith::{uint_to_rat, Exact, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::hom::{EdgeWeightedInstance, WeightTable};
use crate::pattern::J3Embedding;
use crate::potts::{potts_graph, potts_hypergraph, PottsParams};

pub use certificate::{
    recovered, verify_certificate, GraphData, HypergraphData, InstanceShape, ReductionCertificate, ReductionKind,
    SandwichReport, Source,
};
pub use cuts::{is_multiterminal_cut, multiterminal_cuts, split_by, CutInstance, DEFAULT_CUT_ENUM_CAP};
pub use hyper::{build_jq_to_hyperpotts, jq_to_hyperpotts, uniformize, uniformize_s};
pub use j3star::{build_cut_to_j3star, build_cut_to_j3star_with, j3star_r, j3star_s, J3STAR_GOOD_FACTOR};
pub use junction::{build_potts_to_jq, tocol_s};
pub use whom::{build_cut_to_whom, build_cut_to_whom_with, hardweighted_s};

/// An explicit gadget output.
#[derive(Clone, Debug)]
pub enum Materialised {
    Graph(Graph),
    WeightedGraph(Graph, WeightTable),
    Hypergraph(Hypergraph),
}

/// Pins for the typical part, plus the names of the typical and remaining
/// counters.
type Typical = (Vec<(usize, usize)>, &'static str, &'static str);

#[derive(Clone, Debug)]
enum Gadget {
    /// A compressed homomorphism count, optionally split by pinning the
    /// listed vertices to the listed colours.
    Counting {
        inst: EdgeWeightedInstance<BigUint>,
        typical: Option<Typical>,
    },
    Hyper {
        hg: Hypergraph,
        params: PottsParams,
    },
}

/// A built gadget: the structured instance, its constants and the scale and
/// slack of the identity or sandwich it satisfies.
#[derive(Clone, Debug)]
pub struct Reduction {
    source: Source,
    constants: BTreeMap<String, u64>,
    scale: Rational,
    slack: Rational,
    shape: InstanceShape,
    gadget: Gadget,
    output: Option<Materialised>,
    /// Builds the explicit instance on demand.
    materialiser: fn(&Source, &BTreeMap<String, u64>) -> Result<Materialised>,
}

impl Reduction {
    pub fn kind(&self) -> ReductionKind {
        self.source.kind()
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn constants(&self) -> &BTreeMap<String, u64> {
        &self.constants
    }

    pub fn constant(&self, name: &str) -> Option<u64> {
        self.constants.get(name).copied()
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn slack(&self) -> &Rational {
        &self.slack
    }

    pub fn shape(&self) -> InstanceShape {
        self.shape
    }

    /// The compressed instance, for counting gadgets.
    pub fn instance(&self) -> Option<&EdgeWeightedInstance<BigUint>> {
        match &self.gadget {
            Gadget::Counting { inst, .. } => Some(inst),
            Gadget::Hyper { .. } => None,
        }
    }

    /// The gadget value `Z`.
    pub fn value(&self) -> Result<Rational> {
        match &self.gadget {
            Gadget::Counting { inst, .. } => Ok(uint_to_rat(&inst.evaluate())),
            Gadget::Hyper { hg, params } => potts_hypergraph(hg, params),
        }
    }

    /// Evaluates the gadget and packages the result.
    pub fn certify(&self) -> Result<ReductionCertificate> {
        let mut counters = BTreeMap::new();
        let value = match &self.gadget {
            Gadget::Counting {
                inst,
                typical: Some((pins, t_name, a_name)),
            } => {
                let mut pinned = inst.clone();
                for &(v, c) in pins {
                    pinned.pin(v, c)?;
                }
                let (z, zt) = rayon::join(|| inst.evaluate(), || pinned.evaluate());
                let za = &z - &zt;
                counters.insert(t_name.to_string(), Exact::from(&zt));
                counters.insert(a_name.to_string(), Exact::from(&za));
                uint_to_rat(&z)
            }
            _ => self.value()?,
        };
        Ok(ReductionCertificate {
            source: self.source.clone(),
            instance: self.shape,
            constants: self.constants.clone(),
            scale: Exact(self.scale.clone()),
            slack: Exact(self.slack.clone()),
            value: Exact(value),
            counters,
        })
    }

    /// The quantity the gadget encodes, computed without the gadget.
    pub fn oracle(&self) -> Result<Rational> {
        oracle(&self.source, self.output.as_ref())
    }

    /// Certifies the gadget and checks it against the oracle, running the two
    /// sides concurrently.
    pub fn verify(&self) -> Result<(ReductionCertificate, SandwichReport)> {
        let (cert, oracle) = rayon::join(|| self.certify(), || self.oracle());
        let cert = cert?;
        let report = verify_certificate(&cert, &oracle?);
        Ok((cert, report))
    }

    /// The explicit output instance with every multiplicity expanded.
    pub fn materialise(&self) -> Result<Materialised> {
        match &self.output {
            Some(m) => Ok(m.clone()),
            None => (self.materialiser)(&self.source, &self.constants),
        }
    }

    /// Rebuilds a reduction with minimal constants from its source.
    pub fn from_source(source: &Source) -> Result<Reduction> {
        match source {
            Source::CutToWhom {
                graph,
                terminals,
                target,
                embedding,
            } => {
                let g = graph.to_graph()?;
                let cut = multiterminal_cuts(&g, terminals[0], terminals[1], terminals[2])?;
                let [w, x0, x1, y0, y1, z0, z1] = *embedding;
                let emb = J3Embedding {
                    w,
                    x0,
                    x1,
                    y0,
                    y1,
                    z0,
                    z1,
                };
                build_cut_to_whom(&cut, &target.to_graph()?, &emb)
            }
            Source::PottsToJq { graph, q } => build_potts_to_jq(&graph.to_graph()?, *q),
            Source::JqToHyperpotts { graph, q, side } => jq_to_hyperpotts(&graph.to_graph()?, *q, *side),
            Source::Uniformize { hypergraph, q, gamma } => uniformize(&hypergraph.to_hypergraph()?, *q, &gamma.0),
            Source::CutToJ3star { graph, terminals } => {
                let g = graph.to_graph()?;
                build_cut_to_j3star(&multiterminal_cuts(&g, terminals[0], terminals[1], terminals[2])?)
            }
        }
    }
}

fn oracle(source: &Source, output: Option<&Materialised>) -> Result<Rational> {
    match source {
        Source::CutToWhom { graph, terminals, .. } | Source::CutToJ3star { graph, terminals } => {
            let g = graph.to_graph()?;
            let cut = multiterminal_cuts(&g, terminals[0], terminals[1], terminals[2])?;
            Ok(uint_to_rat(&cut.count))
        }
        Source::PottsToJq { graph, q } => Ok(potts_graph(&graph.to_graph()?, &PottsParams::new(*q, Rational::from_integer(1.into()))?)),
        Source::JqToHyperpotts { q, .. } => match output {
            Some(Materialised::Hypergraph(hg)) => {
                potts_hypergraph(hg, &PottsParams::new(*q, Rational::from_integer(1.into()))?)
            }
            _ => Err(Error::Gadget("junction reduction lost its hypergraph".into())),
        },
        Source::Uniformize { hypergraph, q, gamma } => {
            potts_hypergraph(&hypergraph.to_hypergraph()?, &PottsParams::new(*q, gamma.0.clone())?)
        }
    }
}

/// Common neighbours of `a` and `b` in `target` that lie in `allowed`.
fn common_neighbours(target: &Graph, allowed: &[bool], a: usize, b: usize) -> u64 {
    target
        .neighbours(a)
        .iter()
        .filter(|&&c| allowed[c] && target.has_edge(c, b))
        .count() as u64
}

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u32) << e
}
