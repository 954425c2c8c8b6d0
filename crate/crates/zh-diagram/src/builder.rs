//! Incremental construction of diagrams.
//!
//! ```
//! use zh_diagram::{Builder, GeneratorKind::*};
//!
//! // A CZ gate: two wire spiders joined by a 2-ary H-box.
//! let mut b = Builder::new();
//! let (z0, z1, h) = (b.add(ZSpider), b.add(ZSpider), b.add(HBox));
//! b.input(z0);
//! b.input(z1);
//! b.link(z0, h);
//! b.link(h, z1);
//! b.output(z0);
//! b.output(z1);
//! let cz = b.build().unwrap();
//! assert_eq!(cz.vertex_count(), 3);
//! ```

use std::collections::BTreeMap;

use crate::graph::{Diagram, DiagramError, Edge, End, Generator, NodeId};

/// Something that can be turned into an edge end: a vertex id (port 0) or an
/// explicit [`End`].
pub trait IntoEnd {
    fn into_end(self) -> End;
}

impl IntoEnd for NodeId {
    fn into_end(self) -> End {
        End::Leg(self, 0)
    }
}

impl IntoEnd for End {
    fn into_end(self) -> End {
        self
    }
}

/// Port 0 (tail / input leg) of an oriented vertex.
pub fn tail(v: NodeId) -> End {
    End::Leg(v, 0)
}

/// Port 1 (tip / output leg) of an oriented vertex.
pub fn tip(v: NodeId) -> End {
    End::Leg(v, 1)
}

/// Mutable diagram under construction.
#[derive(Clone, Debug)]
pub struct Builder<K> {
    next: NodeId,
    vertices: BTreeMap<NodeId, K>,
    edges: Vec<Edge>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    loops: u32,
}

impl<K: Generator> Default for Builder<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Generator> Builder<K> {
    pub fn new() -> Self {
        Builder { next: 0, vertices: BTreeMap::new(), edges: Vec::new(), inputs: Vec::new(), outputs: Vec::new(), loops: 0 }
    }

    fn fresh(&mut self) -> NodeId {
        let id = self.next;
        self.next += 1;
        id
    }

    /// Adds a vertex and returns its id.
    pub fn add(&mut self, kind: K) -> NodeId {
        let id = self.fresh();
        self.vertices.insert(id, kind);
        id
    }

    /// Adds `count` vertices of the same kind.
    pub fn add_many(&mut self, kind: K, count: usize) -> Vec<NodeId> {
        (0..count).map(|_| self.add(kind.clone())).collect()
    }

    /// Connects two vertex legs.
    pub fn link(&mut self, a: impl IntoEnd, b: impl IntoEnd) {
        self.edges.push(Edge(a.into_end(), b.into_end()));
    }

    /// Connects two vertex legs `count` times.
    pub fn link_n(&mut self, a: NodeId, b: NodeId, count: usize) {
        for _ in 0..count {
            self.link(a, b);
        }
    }

    /// Adds an input boundary point wired to `end`.
    pub fn input(&mut self, end: impl IntoEnd) -> NodeId {
        let p = self.fresh();
        self.edges.push(Edge(End::Point(p), end.into_end()));
        self.inputs.push(p);
        p
    }

    /// Adds an output boundary point wired to `end`.
    pub fn output(&mut self, end: impl IntoEnd) -> NodeId {
        let p = self.fresh();
        self.edges.push(Edge(End::Point(p), end.into_end()));
        self.outputs.push(p);
        p
    }

    /// Adds an identity wire from a new input to a new output.
    pub fn wire(&mut self) -> (NodeId, NodeId) {
        let a = self.fresh();
        let b = self.fresh();
        self.edges.push(Edge(End::Point(a), End::Point(b)));
        self.inputs.push(a);
        self.outputs.push(b);
        (a, b)
    }

    /// Adds a cup: two new outputs joined by a wire.
    pub fn cup(&mut self) -> (NodeId, NodeId) {
        let a = self.fresh();
        let b = self.fresh();
        self.edges.push(Edge(End::Point(a), End::Point(b)));
        self.outputs.push(a);
        self.outputs.push(b);
        (a, b)
    }

    /// Adds a cap: two new inputs joined by a wire.
    pub fn cap(&mut self) -> (NodeId, NodeId) {
        let a = self.fresh();
        let b = self.fresh();
        self.edges.push(Edge(End::Point(a), End::Point(b)));
        self.inputs.push(a);
        self.inputs.push(b);
        (a, b)
    }

    /// Adds a free closed loop.
    pub fn closed_loop(&mut self) {
        self.loops += 1;
    }

    /// Validates and returns the diagram.
    pub fn build(self) -> Result<Diagram<K>, DiagramError> {
        let d = Diagram { vertices: self.vertices, edges: self.edges, inputs: self.inputs, outputs: self.outputs, loops: self.loops };
        d.validate()?;
        Ok(d)
    }

    /// Validates and returns the diagram, panicking on a construction bug.
    /// Intended for the engine's own fixed constructions.
    pub fn finish(self) -> Diagram<K> {
        self.build().expect("internal diagram construction is valid")
    }
}
