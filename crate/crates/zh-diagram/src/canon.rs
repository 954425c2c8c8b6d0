//! Canonical certificates and isomorphism of diagrams.
//!
//! A diagram is encoded as a coloured graph with weighted (multi-)edges:
//! every vertex becomes a node coloured by its kind, every boundary point a
//! node coloured by its boundary position, and an oriented vertex becomes a
//! three-node gadget (a body plus one node per port) so that leg orientation
//! is respected.  Each connected component is canonically labelled by colour
//! refinement followed by individualisation with backtracking, taking the
//! lexicographically least certificate; nodes with identical neighbourhoods
//! are explored only once.  The diagram certificate is the sorted multiset of
//! component certificates plus the free-loop count.

use std::collections::{BTreeMap, HashMap};

use crate::graph::{Diagram, End, Generator, NodeId};

/// Certificate of one connected component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentCert {
    colours: Vec<String>,
    self_loops: Vec<u32>,
    edges: Vec<(u32, u32, u32)>,
}

/// Canonical certificate of a diagram: equal iff the diagrams are isomorphic
/// respecting kinds, boundary order and triangle orientation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    inputs: usize,
    outputs: usize,
    loops: u32,
    components: Vec<ComponentCert>,
}

struct Coloured {
    colours: Vec<String>,
    self_loops: Vec<u32>,
    adj: Vec<BTreeMap<usize, u32>>,
}

fn encode<K: Generator>(d: &Diagram<K>) -> Coloured {
    let mut index: HashMap<End, usize> = HashMap::new();
    let mut colours = Vec::new();
    let mut gadget_edges = Vec::new();
    for (v, k) in d.vertices() {
        let body = colours.len();
        colours.push(format!("v:{}", k.tag()));
        if k.oriented() {
            for port in 0..2u8 {
                let n = colours.len();
                colours.push(format!("port:{port}"));
                index.insert(End::Leg(v, port), n);
                gadget_edges.push((body, n));
            }
        } else {
            index.insert(End::Leg(v, 0), body);
        }
    }
    for (i, &p) in d.inputs().iter().enumerate() {
        index.insert(End::Point(p), colours.len());
        colours.push(format!("in:{i}"));
    }
    for (i, &p) in d.outputs().iter().enumerate() {
        index.insert(End::Point(p), colours.len());
        colours.push(format!("out:{i}"));
    }
    let n = colours.len();
    let mut adj = vec![BTreeMap::new(); n];
    let mut self_loops = vec![0u32; n];
    let mut add = |a: usize, b: usize| {
        if a == b {
            self_loops[a] += 1;
        } else {
            *adj[a].entry(b).or_insert(0) += 1;
            *adj[b].entry(a).or_insert(0) += 1;
        }
    };
    for (a, b) in gadget_edges {
        add(a, b);
    }
    for e in d.edges() {
        add(index[&e.0], index[&e.1]);
    }
    Coloured { colours, self_loops, adj }
}

fn components(g: &Coloured) -> Vec<Vec<usize>> {
    let n = g.colours.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.adj[u].keys() {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A component re-indexed locally.
struct Local<'a> {
    colours: Vec<&'a str>,
    self_loops: Vec<u32>,
    adj: Vec<Vec<(usize, u32)>>,
}

impl<'a> Local<'a> {
    fn new(g: &'a Coloured, comp: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        Local {
            colours: comp.iter().map(|&u| g.colours[u].as_str()).collect(),
            self_loops: comp.iter().map(|&u| g.self_loops[u]).collect(),
            adj: comp.iter().map(|&u| g.adj[u].iter().map(|(w, c)| (pos[w], *c)).collect()).collect(),
        }
    }

    fn initial_cells(&self) -> Vec<u32> {
        let keys: Vec<(&str, u32)> = self.colours.iter().copied().zip(self.self_loops.iter().copied()).collect();
        rank(&keys)
    }

    /// Iterated colour refinement until the partition is stable.
    fn refine(&self, mut cells: Vec<u32>) -> Vec<u32> {
        let mut count = distinct(&cells);
        loop {
            let keys: Vec<(u32, Vec<(u32, u32)>)> = (0..cells.len())
                .map(|u| {
                    let mut sig: Vec<(u32, u32)> = self.adj[u].iter().map(|&(w, c)| (cells[w], c)).collect();
                    sig.sort_unstable();
                    (cells[u], sig)
                })
                .collect();
            let next = rank(&keys);
            let c = distinct(&next);
            cells = next;
            if c == count {
                return cells;
            }
            count = c;
        }
    }

    fn certificate(&self, cells: &[u32]) -> ComponentCert {
        let n = cells.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| cells[u]);
        let mut pos = vec![0u32; n];
        for (i, &u) in order.iter().enumerate() {
            pos[u] = i as u32;
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for &(w, c) in &self.adj[u] {
                if u < w {
                    let (a, b) = (pos[u].min(pos[w]), pos[u].max(pos[w]));
                    edges.push((a, b, c));
                }
            }
        }
        edges.sort_unstable();
        ComponentCert {
            colours: order.iter().map(|&u| self.colours[u].to_string()).collect(),
            self_loops: order.iter().map(|&u| self.self_loops[u]).collect(),
            edges,
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        if self.self_loops[u] != self.self_loops[v] {
            return false;
        }
        let strip = |x: usize, other: usize| -> Vec<(usize, u32)> { self.adj[x].iter().copied().filter(|&(w, _)| w != other).collect() };
        strip(u, v) == strip(v, u)
    }

    fn search(&self, cells: Vec<u32>) -> ComponentCert {
        let cells = self.refine(cells);
        let n = cells.len();
        if distinct(&cells) == n {
            return self.certificate(&cells);
        }
        // Target cell: the smallest non-singleton cell, lowest rank first.
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &cells {
            *sizes.entry(c).or_insert(0) += 1;
        }
        let target = sizes
            .iter()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|(&c, &s)| (s, c))
            .map(|(&c, _)| c)
            .expect("non-discrete partition has a non-singleton cell");
        let members: Vec<usize> = (0..n).filter(|&u| cells[u] == target).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &u in &members {
            if !reps.iter().any(|&r| self.twins(r, u)) {
                reps.push(u);
            }
        }
        let mut best: Option<ComponentCert> = None;
        for u in reps {
            // Individualise u: it keeps the cell rank, every other node moves up.
            let split: Vec<u32> = (0..n).map(|w| cells[w] * 2 + u32::from(cells[w] > target || (cells[w] == target && w != u))).collect();
            let cert = self.search(split);
            if best.as_ref().is_none_or(|b| cert < *b) {
                best = Some(cert);
            }
        }
        best.expect("at least one branch")
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("present") as u32).collect()
}

fn distinct(cells: &[u32]) -> usize {
    let mut v = cells.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

impl<K: Generator> Diagram<K> {
    /// Canonical certificate of the diagram.
    pub fn canonical_form(&self) -> CanonicalForm {
        let g = encode(self);
        let mut certs: Vec<ComponentCert> = components(&g)
            .iter()
            .map(|comp| {
                let local = Local::new(&g, comp);
                let cells = local.initial_cells();
                local.search(cells)
            })
            .collect();
        certs.sort();
        CanonicalForm { inputs: self.inputs().len(), outputs: self.outputs().len(), loops: self.loops(), components: certs }
    }

    /// Isomorphism respecting kinds, boundary order and triangle orientation.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edges().len() == other.edges().len()
            && self.loops() == other.loops()
            && self.inputs().len() == other.inputs().len()
            && self.outputs().len() == other.outputs().len()
            && self.canonical_form() == other.canonical_form()
    }
}

/// Ids of the vertices of `d` grouped into connected components (boundary
/// points excluded), in increasing order of smallest id.
pub fn vertex_components<K: Generator>(d: &Diagram<K>) -> Vec<Vec<NodeId>> {
    let mut parent: HashMap<NodeId, NodeId> = HashMap::new();
    fn find(parent: &mut HashMap<NodeId, NodeId>, x: NodeId) -> NodeId {
        let p = *parent.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let r = find(parent, p);
        parent.insert(x, r);
        r
    }
    for e in d.edges() {
        let (a, b) = (find(&mut parent, e.0.node()), find(&mut parent, e.1.node()));
        if a != b {
            parent.insert(a.max(b), a.min(b));
        }
    }
    let mut groups: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
    for (v, _) in d.vertices() {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<NodeId>> = groups.into_values().collect();
    out.sort();
    out
}
