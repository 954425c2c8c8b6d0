//! Seeded random diagrams for property tests and benchmarks.
//!
//! Vertices are drawn first, then all leg stubs and boundary points are
//! paired by a uniformly random perfect matching, so self-loops, parallel
//! edges, bare wires, cups and caps all occur naturally.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Diagram, Edge, End, Generator, NodeId};
use crate::kind::GeneratorKind;

/// Source of random vertex kinds.
pub trait KindSampler<K> {
    /// A kind and a legal arity for it.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (K, usize);
    /// A kind that admits arity 1, used to fix stub parity.
    fn filler(&self) -> K;
}

/// Bounds for random diagrams.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_vertices: usize,
    pub max_open: usize,
}

/// Draws a random valid diagram.
pub fn random_diagram<K: Generator, S: KindSampler<K>, R: Rng + ?Sized>(rng: &mut R, sampler: &S, shape: Shape) -> Diagram<K> {
    let nv = rng.gen_range(0..=shape.max_vertices);
    let mut kinds: Vec<(K, usize)> = (0..nv).map(|_| sampler.sample(rng)).collect();
    let mut open = rng.gen_range(0..=shape.max_open);
    let stubs: usize = kinds.iter().map(|k| k.1).sum::<usize>() + open;
    if stubs % 2 == 1 {
        if open > 0 {
            open -= 1;
        } else {
            kinds.push((sampler.filler(), 1));
        }
    }
    let mut ends: Vec<End> = Vec::new();
    let mut vertices = Vec::new();
    for (id, (k, arity)) in kinds.into_iter().enumerate() {
        let id = id as NodeId;
        for leg in 0..arity {
            ends.push(End::Leg(id, if k.oriented() { leg as u8 } else { 0 }));
        }
        vertices.push((id, k));
    }
    let base = vertices.len() as NodeId;
    let points: Vec<NodeId> = (0..open as NodeId).map(|i| base + i).collect();
    ends.extend(points.iter().map(|&p| End::Point(p)));
    ends.shuffle(rng);
    let edges: Vec<Edge> = ends.chunks(2).map(|c| Edge(c[0], c[1])).collect();
    let mut boundary = points;
    boundary.shuffle(rng);
    let n_in = rng.gen_range(0..=boundary.len());
    let outputs = boundary.split_off(n_in);
    Diagram::build(vertices, edges, boundary, outputs).expect("random construction is valid")
}

/// Sampler over ZH kinds.
#[derive(Clone, Copy, Debug)]
pub struct ZhSampler {
    /// Whether derived kinds may appear.
    pub derived: bool,
    /// Largest arity for spiders and H-boxes.
    pub max_arity: usize,
}

impl KindSampler<GeneratorKind> for ZhSampler {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (GeneratorKind, usize) {
        let pool: &[GeneratorKind] = if self.derived { &GeneratorKind::ALL } else { &GeneratorKind::ALL[..3] };
        let k = *pool.choose(rng).expect("non-empty pool");
        let arity = match k {
            GeneratorKind::Star => 0,
            GeneratorKind::ZSpider | GeneratorKind::HBox | GeneratorKind::XSpider => rng.gen_range(0..=self.max_arity),
            _ => 2,
        };
        (k, arity)
    }

    fn filler(&self) -> GeneratorKind {
        GeneratorKind::ZSpider
    }
}

/// The same diagram with ids permuted, edges shuffled and edge ends swapped
/// at random; boundary order is kept.  The result is isomorphic to `d`.
pub fn random_relabel<K: Generator, R: Rng + ?Sized>(d: &Diagram<K>, rng: &mut R) -> Diagram<K> {
    let mut ids: Vec<NodeId> = d.vertices().map(|(v, _)| v).chain(d.boundary()).collect();
    let mut fresh: Vec<NodeId> = (0..ids.len() as NodeId).map(|i| i * 3 + 7).collect();
    fresh.shuffle(rng);
    ids.sort_unstable();
    let map: std::collections::HashMap<NodeId, NodeId> = ids.into_iter().zip(fresh).collect();
    let re = |e: End| match e {
        End::Point(p) => End::Point(map[&p]),
        End::Leg(v, port) => End::Leg(map[&v], port),
    };
    let mut edges: Vec<Edge> = d.edges().iter().map(|e| if rng.gen_bool(0.5) { Edge(re(e.0), re(e.1)) } else { Edge(re(e.1), re(e.0)) }).collect();
    edges.shuffle(rng);
    Diagram::build_with_loops(
        d.vertices().map(|(v, k)| (map[&v], k.clone())),
        edges,
        d.inputs().iter().map(|p| map[p]).collect(),
        d.outputs().iter().map(|p| map[p]).collect(),
        d.loops(),
    )
    .expect("relabelling preserves validity")
}
