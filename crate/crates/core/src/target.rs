//! Named target trees: paths, stars, junctions `J_q` and the decorated `J3*`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeKind {
    Path(usize),
    Star(usize),
    Junction(usize),
    J3Star,
    Custom(Graph),
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeKind::Path(n) => write!(f, "path:{n}"),
            TreeKind::Star(n) => write!(f, "star:{n}"),
            TreeKind::Junction(q) => write!(f, "jq:{q}"),
            TreeKind::J3Star => f.write_str("j3star"),
            TreeKind::Custom(g) => write!(f, "custom({} vertices)", g.n()),
        }
    }
}

/// A realised target tree with a label for every named vertex.
///
/// Labels: `J_q` uses `w`, `c{i}`, `c'{i}`; `J3*` uses `w`, `x0`, `x1`,
/// `x2.{i}`, `y0`, `y1`, `y2.{i}`, `y3.{i}.{j}`, `z0`, `z1`, `z2.{i}`,
/// `z3.{i}.{j}`, `z4.{i}.{j}.{k}` (1-based indices); paths use `p{i}` and
/// stars `centre`, `leaf{i}`.
#[derive(Clone, Debug)]
pub struct TargetTree {
    pub kind: TreeKind,
    pub graph: Graph,
    labels: BTreeMap<String, usize>,
}

impl TargetTree {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    /// Like [`TargetTree::vertex`] but panics on an unknown label; for use
    /// with labels guaranteed by the constructor.
    pub fn v(&self, label: &str) -> usize {
        self.vertex(label)
            .unwrap_or_else(|| panic!("target {} has no vertex `{label}`", self.kind))
    }

    pub fn labels(&self) -> &BTreeMap<String, usize> {
        &self.labels
    }

    pub fn label_of(&self, v: usize) -> Option<&str> {
        self.labels
            .iter()
            .find(|(_, &id)| id == v)
            .map(|(l, _)| l.as_str())
    }
}

struct Builder {
    labels: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: BTreeMap::new(),
            edges: Vec::new(),
        }
    }

    fn add(&mut self, label: String) -> usize {
        let id = self.labels.len();
        self.labels.insert(label, id);
        id
    }

    fn edge(&mut self, a: &str, b: &str) {
        self.edges.push((self.labels[a], self.labels[b]));
    }

    fn finish(self, kind: TreeKind) -> TargetTree {
        let graph = Graph::new(self.labels.len(), self.edges).expect("constructed tree is simple");
        debug_assert!(graph.is_tree());
        TargetTree {
            kind,
            graph,
            labels: self.labels,
        }
    }
}

pub fn build_target_tree(kind: TreeKind) -> Result<TargetTree> {
    match kind {
        TreeKind::Path(n) => {
            if n == 0 {
                return Err(Error::Graph("path needs n >= 1".into()));
            }
            let mut b = Builder::new();
            for i in 1..=n {
                b.add(format!("p{i}"));
            }
            for i in 2..=n {
                b.edge(&format!("p{}", i - 1), &format!("p{i}"));
            }
            Ok(b.finish(kind))
        }
        TreeKind::Star(n) => {
            if n == 0 {
                return Err(Error::Graph("star needs n >= 1".into()));
            }
            let mut b = Builder::new();
            b.add("centre".into());
            for i in 1..=n {
                b.add(format!("leaf{i}"));
                b.edge("centre", &format!("leaf{i}"));
            }
            Ok(b.finish(kind))
        }
        TreeKind::Junction(q) => {
            if q == 0 {
                return Err(Error::Graph("junction needs q >= 1".into()));
            }
            let mut b = Builder::new();
            b.add("w".into());
            for i in 1..=q {
                b.add(format!("c'{i}"));
            }
            for i in 1..=q {
                b.add(format!("c{i}"));
            }
            for i in 1..=q {
                b.edge(&format!("c{i}"), &format!("c'{i}"));
                b.edge(&format!("c'{i}"), "w");
            }
            Ok(b.finish(kind))
        }
        TreeKind::J3Star => Ok(j3_star()),
        TreeKind::Custom(g) => {
            if !g.is_tree() {
                return Err(Error::Graph("custom target is not a tree".into()));
            }
            let mut labels = BTreeMap::new();
            for v in 0..g.n() {
                labels.insert(format!("v{v}"), v);
            }
            Ok(TargetTree {
                graph: g.clone(),
                kind: TreeKind::Custom(g),
                labels,
            })
        }
    }
}

fn j3_star() -> TargetTree {
    let mut b = Builder::new();
    b.add("w".into());

    b.add("x0".into());
    b.add("x1".into());
    for i in 1..=5 {
        b.add(format!("x2.{i}"));
    }

    b.add("y0".into());
    b.add("y1".into());
    for i in 1..=4 {
        b.add(format!("y2.{i}"));
    }
    for i in 1..=4 {
        for j in 1..=3 {
            b.add(format!("y3.{i}.{j}"));
        }
    }

    b.add("z0".into());
    b.add("z1".into());
    for i in 1..=3 {
        b.add(format!("z2.{i}"));
    }
    for i in 1..=3 {
        for j in 1..=3 {
            b.add(format!("z3.{i}.{j}"));
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=2 {
                b.add(format!("z4.{i}.{j}.{k}"));
            }
        }
    }

    b.edge("w", "x0");
    b.edge("w", "y0");
    b.edge("w", "z0");

    b.edge("x0", "x1");
    for i in 1..=5 {
        b.edge("x1", &format!("x2.{i}"));
    }

    b.edge("y0", "y1");
    for i in 1..=4 {
        b.edge("y1", &format!("y2.{i}"));
        for j in 1..=3 {
            b.edge(&format!("y2.{i}"), &format!("y3.{i}.{j}"));
        }
    }

    b.edge("z0", "z1");
    for i in 1..=3 {
        b.edge("z1", &format!("z2.{i}"));
        for j in 1..=3 {
            b.edge(&format!("z2.{i}"), &format!("z3.{i}.{j}"));
            for k in 1..=2 {
                b.edge(&format!("z3.{i}.{j}"), &format!("z4.{i}.{j}.{k}"));
            }
        }
    }
    b.finish(TreeKind::J3Star)
}

/// The canonical orbit representatives of `J3*`, in table order.
pub const J3_STAR_REPRESENTATIVES: [&str; 13] = [
    "w", "x0", "x1", "x2.1", "y0", "y1", "y2.1", "y3.1.1", "z0", "z1", "z2.1", "z3.1.1", "z4.1.1.1",
];

/// Parses a target specification: `p4`, `path:N`, `star:N`, `jq:Q`, `j3`,
/// `j3star`. File targets are resolved by the caller.
pub fn parse_target_kind(spec: &str) -> Result<TreeKind> {
    let spec = spec.trim();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Graph(format!("bad target parameter in `{spec}`")))
    };
    match spec.split_once(':') {
        None => match spec {
            "p4" => Ok(TreeKind::Path(4)),
            "j3" => Ok(TreeKind::Junction(3)),
            "j3star" => Ok(TreeKind::J3Star),
            _ => Err(Error::Graph(format!("unknown target `{spec}`"))),
        },
        Some(("path", n)) => Ok(TreeKind::Path(num(n)?)),
        Some(("star", n)) => Ok(TreeKind::Star(num(n)?)),
        Some(("jq", q)) => Ok(TreeKind::Junction(num(q)?)),
        Some(_) => Err(Error::Graph(format!("unknown target `{spec}`"))),
    }
}
