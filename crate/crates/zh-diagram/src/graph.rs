//! The generic open-graph container shared by the ZH and ΔZX front ends.
//!
//! A [`Diagram`] is an undirected multigraph whose nodes are generator
//! vertices and boundary points.  Boundary points are wire ends of degree one
//! listed in `inputs` and `outputs`; a bare wire, cup or cap is simply an edge
//! between two boundary points.  Closed loops that contain no vertex at all are
//! kept as a counter, since they carry the scalar of a traced identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

/// Identifier of a vertex or a boundary point.  Both live in one namespace.
pub type NodeId = u32;

/// A generator kind usable as vertex data.
pub trait Generator: Clone + Debug + PartialEq + Eq + Hash + PartialOrd + Ord {
    /// Whether a vertex of this kind may have `arity` legs.
    fn arity_ok(&self, arity: usize) -> bool;
    /// Oriented kinds have two distinguishable legs (ports 0 and 1).
    fn oriented(&self) -> bool;
    /// Stable textual tag, used for colouring and reporting.
    fn tag(&self) -> String;
}

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    /// A boundary point.
    Point(NodeId),
    /// A leg of a vertex.  The port is 0 for symmetric kinds and 0/1 for
    /// oriented kinds (0 = tail, 1 = tip).
    Leg(NodeId, u8),
}

impl End {
    /// The node this end is attached to.
    pub fn node(self) -> NodeId {
        match self {
            End::Point(p) => p,
            End::Leg(v, _) => v,
        }
    }

    fn renumber(self, offset: NodeId) -> End {
        match self {
            End::Point(p) => End::Point(p + offset),
            End::Leg(v, port) => End::Leg(v + offset, port),
        }
    }
}

/// An undirected edge; the order of the two ends carries no meaning.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub End, pub End);

impl Edge {
    /// Given one end of the edge, returns the other.
    pub fn other(&self, end: End) -> End {
        if self.0 == end {
            self.1
        } else {
            self.0
        }
    }
}

/// Validation failures for diagram construction and composition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("vertex {vertex} of kind {kind} cannot have {arity} legs")]
    ArityViolation { vertex: NodeId, kind: String, arity: usize },
    #[error("boundary point {0} is not attached to exactly one wire")]
    DanglingBoundary(NodeId),
    #[error("boundary point {0} is used more than once")]
    DuplicateBoundaryUse(NodeId),
    #[error("node id {0} is declared twice")]
    DuplicateId(NodeId),
    #[error("edge end refers to unknown node {0}")]
    UnknownNode(NodeId),
    #[error("vertex {vertex} has an invalid port assignment ({detail})")]
    BadPort { vertex: NodeId, detail: String },
    #[error("cannot compose: {outputs} outputs against {inputs} inputs")]
    BoundaryMismatch { outputs: usize, inputs: usize },
}

/// An open string diagram over generator kind `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram<K> {
    pub(crate) vertices: BTreeMap<NodeId, K>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) inputs: Vec<NodeId>,
    pub(crate) outputs: Vec<NodeId>,
    pub(crate) loops: u32,
}

impl<K: Generator> Default for Diagram<K> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<K: Generator> Diagram<K> {
    /// The empty diagram (the unit of the tensor product).
    pub fn empty() -> Self {
        Diagram {
            vertices: BTreeMap::new(),
            edges: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            loops: 0,
        }
    }

    /// Builds and validates a diagram.
    pub fn build(
        vertices: impl IntoIterator<Item = (NodeId, K)>,
        edges: impl IntoIterator<Item = Edge>,
        inputs: Vec<NodeId>,
        outputs: Vec<NodeId>,
    ) -> Result<Self, DiagramError> {
        Self::build_with_loops(vertices, edges, inputs, outputs, 0)
    }

    /// As [`Diagram::build`], with a number of free closed loops.
    pub fn build_with_loops(
        vertices: impl IntoIterator<Item = (NodeId, K)>,
        edges: impl IntoIterator<Item = Edge>,
        inputs: Vec<NodeId>,
        outputs: Vec<NodeId>,
        loops: u32,
    ) -> Result<Self, DiagramError> {
        let mut map = BTreeMap::new();
        for (id, kind) in vertices {
            if map.insert(id, kind).is_some() {
                return Err(DiagramError::DuplicateId(id));
            }
        }
        let d = Diagram { vertices: map, edges: edges.into_iter().collect(), inputs, outputs, loops };
        d.validate()?;
        Ok(d)
    }

    /// Checks every structural invariant.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut boundary: HashMap<NodeId, usize> = HashMap::new();
        for &p in self.inputs.iter().chain(self.outputs.iter()) {
            if self.vertices.contains_key(&p) {
                return Err(DiagramError::DuplicateId(p));
            }
            if boundary.insert(p, 0).is_some() {
                return Err(DiagramError::DuplicateBoundaryUse(p));
            }
        }
        let mut ports: BTreeMap<NodeId, Vec<u8>> = self.vertices.keys().map(|&v| (v, Vec::new())).collect();
        for e in &self.edges {
            for end in [e.0, e.1] {
                match end {
                    End::Point(p) => match boundary.get_mut(&p) {
                        Some(c) => *c += 1,
                        None if self.vertices.contains_key(&p) => return Err(DiagramError::UnknownNode(p)),
                        None => return Err(DiagramError::DanglingBoundary(p)),
                    },
                    End::Leg(v, port) => match ports.get_mut(&v) {
                        Some(list) => list.push(port),
                        None => return Err(DiagramError::UnknownNode(v)),
                    },
                }
            }
        }
        for &p in self.inputs.iter().chain(self.outputs.iter()) {
            match boundary[&p] {
                0 => return Err(DiagramError::DanglingBoundary(p)),
                1 => {}
                _ => return Err(DiagramError::DuplicateBoundaryUse(p)),
            }
        }
        for (v, kind) in &self.vertices {
            let list = &ports[v];
            if !kind.arity_ok(list.len()) {
                return Err(DiagramError::ArityViolation { vertex: *v, kind: kind.tag(), arity: list.len() });
            }
            if kind.oriented() {
                let mut sorted = list.clone();
                sorted.sort_unstable();
                if sorted != [0, 1] {
                    return Err(DiagramError::BadPort { vertex: *v, detail: format!("ports {sorted:?}, expected [0, 1]") });
                }
            } else if list.iter().any(|&p| p != 0) {
                return Err(DiagramError::BadPort { vertex: *v, detail: "symmetric kinds only use port 0".into() });
            }
        }
        Ok(())
    }

    /// Vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = (NodeId, &K)> + '_ {
        self.vertices.iter().map(|(&v, k)| (v, k))
    }

    /// The kind of vertex `v`, if it exists.
    pub fn kind(&self, v: NodeId) -> Option<&K> {
        self.vertices.get(&v)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges in stored order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Input boundary points, in order.
    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    /// Output boundary points, in order.
    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    /// Inputs followed by outputs.
    pub fn boundary(&self) -> Vec<NodeId> {
        self.inputs.iter().chain(self.outputs.iter()).copied().collect()
    }

    /// Number of vertex-free closed loops.
    pub fn loops(&self) -> u32 {
        self.loops
    }

    /// Number of legs of vertex `v` (a self-loop counts twice).
    pub fn degree(&self, v: NodeId) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.0.node() == v && matches!(e.0, End::Leg(..))) + usize::from(e.1.node() == v && matches!(e.1, End::Leg(..))))
            .sum()
    }

    /// Indices of edges incident to vertex or point `n` (a self-loop appears twice).
    pub fn incident(&self, n: NodeId) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.0.node() == n {
                out.push(i);
            }
            if e.1.node() == n {
                out.push(i);
            }
        }
        out
    }

    /// Largest id in use, or `None` for a diagram with no nodes.
    pub fn max_id(&self) -> Option<NodeId> {
        let v = self.vertices.keys().next_back().copied();
        let b = self.inputs.iter().chain(self.outputs.iter()).max().copied();
        v.max(b)
    }

    /// A fresh id strictly larger than all ids in use.
    pub fn fresh_id(&self) -> NodeId {
        self.max_id().map_or(0, |m| m + 1)
    }

    /// Whether any vertex satisfies `pred`.
    pub fn any_vertex(&self, pred: impl Fn(&K) -> bool) -> bool {
        self.vertices.values().any(pred)
    }

    /// Shifts every id by `offset`.
    pub fn renumbered(&self, offset: NodeId) -> Self {
        Diagram {
            vertices: self.vertices.iter().map(|(&v, k)| (v + offset, k.clone())).collect(),
            edges: self.edges.iter().map(|e| Edge(e.0.renumber(offset), e.1.renumber(offset))).collect(),
            inputs: self.inputs.iter().map(|p| p + offset).collect(),
            outputs: self.outputs.iter().map(|p| p + offset).collect(),
            loops: self.loops,
        }
    }

    /// Relabels ids densely (vertices first, in id order, then boundary points
    /// in boundary order, then any remaining points).
    pub fn compacted(&self) -> Self {
        let mut map: HashMap<NodeId, NodeId> = HashMap::new();
        let mut next = 0;
        for &v in self.vertices.keys() {
            map.insert(v, next);
            next += 1;
        }
        for &p in self.inputs.iter().chain(self.outputs.iter()) {
            map.insert(p, next);
            next += 1;
        }
        let re = |e: End| match e {
            End::Point(p) => End::Point(map[&p]),
            End::Leg(v, port) => End::Leg(map[&v], port),
        };
        Diagram {
            vertices: self.vertices.iter().map(|(v, k)| (map[v], k.clone())).collect(),
            edges: self.edges.iter().map(|e| Edge(re(e.0), re(e.1))).collect(),
            inputs: self.inputs.iter().map(|p| map[p]).collect(),
            outputs: self.outputs.iter().map(|p| map[p]).collect(),
            loops: self.loops,
        }
    }

    /// Sequential composition: outputs of `self` are plugged into inputs of `next`.
    pub fn compose(&self, next: &Self) -> Result<Self, DiagramError> {
        if self.outputs.len() != next.inputs.len() {
            return Err(DiagramError::BoundaryMismatch { outputs: self.outputs.len(), inputs: next.inputs.len() });
        }
        let offset = self.fresh_id();
        let second = next.renumbered(offset);
        let fuse: HashMap<NodeId, NodeId> = second.inputs.iter().copied().zip(self.outputs.iter().copied()).collect();
        let mut edges = self.edges.clone();
        for e in &second.edges {
            let map = |end: End| match end {
                End::Point(p) => End::Point(*fuse.get(&p).unwrap_or(&p)),
                other => other,
            };
            edges.push(Edge(map(e.0), map(e.1)));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(second.vertices);
        let raw = Diagram {
            vertices,
            edges,
            inputs: self.inputs.clone(),
            outputs: second.outputs,
            loops: self.loops + next.loops,
        };
        Ok(raw.contract_points(&self.outputs))
    }

    /// Parallel composition (disjoint union); boundaries are concatenated.
    pub fn tensor(&self, other: &Self) -> Self {
        let second = other.renumbered(self.fresh_id());
        let mut vertices = self.vertices.clone();
        vertices.extend(second.vertices);
        let mut edges = self.edges.clone();
        edges.extend(second.edges);
        let mut inputs = self.inputs.clone();
        inputs.extend(second.inputs);
        let mut outputs = self.outputs.clone();
        outputs.extend(second.outputs);
        Diagram { vertices, edges, inputs, outputs, loops: self.loops + other.loops }
    }

    /// The same diagram with its boundary re-split: the concatenation
    /// `inputs ++ outputs` is kept and cut after `n_inputs` points.
    pub fn with_split(&self, n_inputs: usize) -> Self {
        let all = self.boundary();
        let mut d = self.clone();
        d.inputs = all[..n_inputs].to_vec();
        d.outputs = all[n_inputs..].to_vec();
        d
    }

    /// The transpose: inputs and outputs are exchanged.
    pub fn transpose(&self) -> Self {
        let mut d = self.clone();
        std::mem::swap(&mut d.inputs, &mut d.outputs);
        d
    }

    /// Assembles a diagram from raw parts, then splices out the given interior
    /// points, each of which must be incident to exactly two edge ends.
    pub fn from_parts(
        vertices: BTreeMap<NodeId, K>,
        edges: Vec<Edge>,
        inputs: Vec<NodeId>,
        outputs: Vec<NodeId>,
        loops: u32,
        interior_points: &[NodeId],
    ) -> Self {
        Diagram { vertices, edges, inputs, outputs, loops }.contract_points(interior_points)
    }

    /// Splices out interior points of degree two, joining their two edges.
    /// A cycle made only of such points becomes a free loop.
    fn contract_points(mut self, interior: &[NodeId]) -> Self {
        let mut slots: Vec<Option<Edge>> = self.edges.into_iter().map(Some).collect();
        let mut inc: HashMap<NodeId, Vec<usize>> = interior.iter().map(|&p| (p, Vec::new())).collect();
        for (i, e) in slots.iter().enumerate() {
            let e = e.expect("fresh slot");
            for end in [e.0, e.1] {
                if let End::Point(p) = end {
                    if let Some(list) = inc.get_mut(&p) {
                        list.push(i);
                    }
                }
            }
        }
        let mut order: Vec<NodeId> = interior.to_vec();
        order.sort_unstable();
        order.dedup();
        for p in order {
            let list = inc.remove(&p).expect("interior point");
            assert_eq!(list.len(), 2, "interior point {p} must have degree two");
            let (i, j) = (list[0], list[1]);
            if i == j {
                slots[i] = None;
                self.loops += 1;
                continue;
            }
            let ei = slots[i].take().expect("live edge");
            let ej = slots[j].take().expect("live edge");
            let a = ei.other(End::Point(p));
            let b = ej.other(End::Point(p));
            let k = i.min(j);
            slots[k] = Some(Edge(a, b));
            for end in [a, b] {
                if let End::Point(q) = end {
                    if let Some(list) = inc.get_mut(&q) {
                        for x in list.iter_mut() {
                            if *x == i || *x == j {
                                *x = k;
                            }
                        }
                    }
                }
            }
        }
        self.edges = slots.into_iter().flatten().collect();
        self
    }

    /// Replaces every vertex for which `expansion` returns a diagram.  The
    /// returned diagram's boundary (inputs then outputs) is glued to the
    /// vertex legs in leg order: by port for oriented kinds, by incidence order
    /// otherwise.
    pub fn substitute_vertices(&self, expansion: impl Fn(&K, usize) -> Option<Self>) -> Self {
        let mut out = self.clone();
        let ids: Vec<NodeId> = self.vertices.keys().copied().collect();
        for v in ids {
            let kind = out.vertices[&v].clone();
            let arity = out.degree(v);
            if let Some(sub) = expansion(&kind, arity) {
                out = out.replace_vertex(v, &sub);
            }
        }
        out
    }

    /// Replaces vertex `v` by diagram `sub`, whose boundary lists the legs of `v`.
    pub fn replace_vertex(&self, v: NodeId, sub: &Self) -> Self {
        let oriented = self.vertices[&v].oriented();
        let mut next = self.fresh_id();
        let mut edges = self.edges.clone();
        // Collect the legs of v in leg order, giving each a fresh cut point.
        let mut legs: Vec<(u8, usize, bool)> = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if let End::Leg(w, port) = e.0 {
                if w == v {
                    legs.push((port, i, false));
                }
            }
            if let End::Leg(w, port) = e.1 {
                if w == v {
                    legs.push((port, i, true));
                }
            }
        }
        if oriented {
            legs.sort_by_key(|l| l.0);
        }
        let mut cut = Vec::with_capacity(legs.len());
        for &(_, i, second) in &legs {
            let p = next;
            next += 1;
            if second {
                edges[i].1 = End::Point(p);
            } else {
                edges[i].0 = End::Point(p);
            }
            cut.push(p);
        }
        let mut vertices = self.vertices.clone();
        vertices.remove(&v);
        let glued = sub.renumbered(next);
        let bmap: HashMap<NodeId, NodeId> = glued.boundary().into_iter().zip(cut.iter().copied()).collect();
        assert_eq!(bmap.len(), cut.len(), "substitution arity mismatch");
        for e in &glued.edges {
            let m = |end: End| match end {
                End::Point(p) => End::Point(*bmap.get(&p).unwrap_or(&p)),
                other => other,
            };
            edges.push(Edge(m(e.0), m(e.1)));
        }
        vertices.extend(glued.vertices.clone());
        Diagram::from_parts(vertices, edges, self.inputs.clone(), self.outputs.clone(), self.loops + sub.loops, &cut)
    }

    /// Converts every vertex kind, keeping the topology.
    pub fn map_kinds<L: Generator>(&self, f: impl Fn(&K) -> L) -> Diagram<L> {
        Diagram {
            vertices: self.vertices.iter().map(|(&v, k)| (v, f(k))).collect(),
            edges: self.edges.clone(),
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
            loops: self.loops,
        }
    }
}
