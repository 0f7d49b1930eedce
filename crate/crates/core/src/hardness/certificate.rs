use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{floor, Exact, Rational};
use crate::convex::Side;
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    CutToWhom,
    PottsToJq,
    JqToHyperpotts,
    Uniformize,
    CutToJ3star,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 5] = [
        ReductionKind::CutToWhom,
        ReductionKind::PottsToJq,
        ReductionKind::JqToHyperpotts,
        ReductionKind::Uniformize,
        ReductionKind::CutToJ3star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::CutToWhom => "cut-to-whom",
            ReductionKind::PottsToJq => "potts-to-jq",
            ReductionKind::JqToHyperpotts => "jq-to-hyperpotts",
            ReductionKind::Uniformize => "uniformize",
            ReductionKind::CutToJ3star => "cut-to-j3star",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Gadget(format!("unknown reduction `{s}`")))
    }
}

/// Plain edge-list form of a graph for certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphData {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphData {
    fn from(g: &Graph) -> Self {
        GraphData {
            n: g.n(),
            edges: g.edges().to_vec(),
        }
    }
}

impl GraphData {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphData {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphData {
    fn from(h: &Hypergraph) -> Self {
        HypergraphData {
            n: h.n(),
            edges: h.edges().to_vec(),
        }
    }
}

impl HypergraphData {
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.n, self.edges.iter().cloned())
    }
}

/// The input a reduction was built from; enough to rebuild it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    CutToWhom {
        graph: GraphData,
        terminals: [usize; 3],
        target: GraphData,
        /// Target vertices playing `w, x0, x1, y0, y1, z0, z1`.
        embedding: [usize; 7],
    },
    PottsToJq {
        graph: GraphData,
        q: usize,
    },
    JqToHyperpotts {
        graph: GraphData,
        q: usize,
        side: Side,
    },
    Uniformize {
        hypergraph: HypergraphData,
        q: usize,
        gamma: Exact,
    },
    CutToJ3star {
        graph: GraphData,
        terminals: [usize; 3],
    },
}

impl Source {
    pub fn kind(&self) -> ReductionKind {
        match self {
            Source::CutToWhom { .. } => ReductionKind::CutToWhom,
            Source::PottsToJq { .. } => ReductionKind::PottsToJq,
            Source::JqToHyperpotts { .. } => ReductionKind::JqToHyperpotts,
            Source::Uniformize { .. } => ReductionKind::Uniformize,
            Source::CutToJ3star { .. } => ReductionKind::CutToJ3star,
        }
    }
}

/// Size of the explicit (materialised) output instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceShape {
    pub vertices: u64,
    /// Edges, or hyperedges counted with multiplicity.
    pub edges: u64,
}

/// Everything a gadget produced: constants, the scale `Z*`, the additive
/// slack, the gadget value `Z` and any split of `Z` into typical and
/// atypical parts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub source: Source,
    pub instance: InstanceShape,
    pub constants: BTreeMap<String, u64>,
    pub scale: Exact,
    pub slack: Exact,
    pub value: Exact,
    pub counters: BTreeMap<String, Exact>,
}

impl ReductionCertificate {
    pub fn kind(&self) -> ReductionKind {
        self.source.kind()
    }

    pub fn ratio(&self) -> Rational {
        &self.value.0 / &self.scale.0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Gadget(format!("bad certificate: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichReport {
    pub lower: Exact,
    pub ratio: Exact,
    pub upper: Exact,
    pub pass: bool,
    /// `floor(Z / Z*)` for sandwich certificates.
    pub floor: Option<Exact>,
}

/// Checks `oracle <= Z / Z* <= oracle + slack`.
pub fn verify_certificate(cert: &ReductionCertificate, oracle: &Rational) -> SandwichReport {
    let ratio = cert.ratio();
    let upper = oracle + &cert.slack.0;
    let pass = oracle <= &ratio && ratio <= upper;
    let floor = (!cert.slack.0.is_zero()).then(|| Exact(Rational::from_integer(floor(&ratio))));
    SandwichReport {
        lower: Exact(oracle.clone()),
        ratio: Exact(ratio),
        upper: Exact(upper),
        pass,
        floor,
    }
}

/// `floor(Z / Z*)` as an integer.
pub fn recovered(cert: &ReductionCertificate) -> BigInt {
    floor(&cert.ratio())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn cert(value: Rational, slack: Rational) -> ReductionCertificate {
        ReductionCertificate {
            source: Source::PottsToJq {
                graph: GraphData { n: 1, edges: vec![] },
                q: 3,
            },
            instance: InstanceShape { vertices: 1, edges: 0 },
            constants: BTreeMap::new(),
            scale: Exact(rat(1, 1)),
            slack: Exact(slack),
            value: Exact(value),
            counters: BTreeMap::new(),
        }
    }

    #[test]
    fn exact_identity_passes() {
        let r = verify_certificate(&cert(rat(7, 1), rat(0, 1)), &rat(7, 1));
        assert!(r.pass);
        assert_eq!(r.floor, None);
        assert!(!verify_certificate(&cert(rat(7, 1), rat(0, 1)), &rat(6, 1)).pass);
    }

    #[test]
    fn sandwich_within_slack() {
        let r = verify_certificate(&cert(rat(25, 8), rat(1, 4)), &rat(3, 1));
        assert!(r.pass);
        assert_eq!(r.floor, Some(Exact(rat(3, 1))));
        assert!(!verify_certificate(&cert(rat(10, 3), rat(1, 4)), &rat(3, 1)).pass);
    }

    #[test]
    fn json_round_trip() {
        let c = cert(rat(5, 2), rat(1, 4));
        assert_eq!(ReductionCertificate::from_json(&c.to_json()).unwrap(), c);
        assert_eq!("cut-to-j3star".parse::<ReductionKind>().unwrap(), ReductionKind::CutToJ3star);
        assert!("nope".parse::<ReductionKind>().is_err());
    }
}
