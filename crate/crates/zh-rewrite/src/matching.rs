//! Subdiagram matching and rule application.
//!
//! A match embeds the pattern side of an equation into a host diagram:
//!
//! - pattern vertices map injectively to host vertices of the same kind and
//!   arity, so every leg of an image vertex is accounted for (no hidden
//!   connections);
//! - edges between pattern vertices map to distinct host edges between the
//!   images, with matching ports;
//! - every boundary edge of the pattern claims one half of a host edge at its
//!   image vertex; the other half is the *outer end* of that interface
//!   position.  A host edge may be claimed from both sides, in which case
//!   each side is the other's outer end;
//! - a bare wire of the pattern claims a whole host edge that touches no
//!   image vertex, which is cut in two.
//!
//! Applying a match removes the image, opens a fresh point for every
//! interface position, and glues the replacement side onto those points.
//! Matches are deduplicated up to the symmetries of the equation: interface
//! permutations realised by automorphisms of the pattern that are also
//! automorphisms of the replacement.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;
use zh_diagram::{Diagram, Edge, End, Generator, NodeId, ZhDiagram};

use crate::rules::{Direction, Equation, RewriteRule};

/// Pattern `(edge, position)` slots and the host half-edges they may take.
type HalfGroup = (Vec<(usize, usize)>, Vec<(usize, bool)>);

/// Rule application failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("match for {rule} is stale: the host diagram has changed")]
    StaleMatch { rule: String },
}

/// How an interface position attaches to the host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Claim {
    /// Half of host edge `edge`; `second` tells which end (`.1` if true).
    Half { edge: usize, second: bool },
    /// A whole host edge cut in two; `forward` means this position takes
    /// the `.0` side.
    Bare { edge: usize, forward: bool },
}

/// An embedding of one side of an equation into a host diagram.
#[derive(Clone, Debug)]
pub struct Match {
    /// The equation being applied.
    pub equation: Arc<Equation>,
    /// Which side is the pattern.
    pub direction: Direction,
    /// Pattern vertex → host vertex.
    pub vertex_map: BTreeMap<NodeId, NodeId>,
    /// Pattern edge index → host edge index, for every pattern edge.
    pub edge_map: Vec<(usize, usize)>,
    /// Host end just outside each interface position.
    pub boundary: Vec<End>,
    claims: Vec<Claim>,
    symmetries: Arc<Vec<Vec<usize>>>,
    host_digest: u64,
}

impl Match {
    /// Host vertices covered by the match, in increasing order.
    pub fn image(&self) -> Vec<NodeId> {
        let mut v: Vec<NodeId> = self.vertex_map.values().copied().collect();
        v.sort_unstable();
        v
    }

    /// Node ids of the outer ends, per interface position.
    pub fn boundary_nodes(&self) -> Vec<NodeId> {
        self.boundary.iter().map(|e| e.node()).collect()
    }

    /// Whether the outer ends agree with `nodes` position by position, up to
    /// a symmetry of the equation.
    pub fn fits_boundary(&self, nodes: &[NodeId]) -> bool {
        nodes.len() == self.boundary.len()
            && self.symmetries.iter().any(|perm| perm.iter().zip(nodes).all(|(&j, &n)| self.boundary[j].node() == n))
    }

    /// Label of the equation and direction, e.g. `ZS1(1,1) L2R`.
    pub fn describe(&self) -> String {
        format!("{} {}", self.equation.label, self.direction)
    }

    /// Position claiming the other half of the same host edge, if any.
    fn partners(&self) -> Vec<Option<usize>> {
        let at: HashMap<(usize, bool), usize> = self
            .claims
            .iter()
            .enumerate()
            .filter_map(|(pos, c)| match *c {
                Claim::Half { edge, second } => Some(((edge, second), pos)),
                Claim::Bare { .. } => None,
            })
            .collect();
        self.claims
            .iter()
            .map(|c| match *c {
                Claim::Half { edge, second } => at.get(&(edge, !second)).copied(),
                Claim::Bare { .. } => None,
            })
            .collect()
    }

    /// Image and outer ends, minimised over the symmetries.  A position cut
    /// against another position is recorded by that position, since the
    /// two halves of one host edge may carry equal end labels.
    fn signature(&self) -> (Vec<NodeId>, Vec<Outer>) {
        let partners = self.partners();
        let best = self
            .symmetries
            .iter()
            .map(|perm| {
                let mut inverse = vec![0; perm.len()];
                for (i, &j) in perm.iter().enumerate() {
                    inverse[j] = i;
                }
                perm.iter()
                    .map(|&j| match partners[j] {
                        Some(p) => Outer::Position(inverse[p]),
                        None => Outer::End(self.boundary[j]),
                    })
                    .collect::<Vec<Outer>>()
            })
            .min()
            .expect("the identity is always a symmetry");
        (self.image(), best)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Outer {
    End(End),
    Position(usize),
}

/// Hash of a diagram's exact representation, used to detect stale matches.
pub fn diagram_digest<K: Generator>(d: &Diagram<K>) -> u64 {
    let mut h = DefaultHasher::new();
    for (v, k) in d.vertices() {
        v.hash(&mut h);
        k.hash(&mut h);
    }
    d.edges().hash(&mut h);
    d.inputs().hash(&mut h);
    d.outputs().hash(&mut h);
    d.loops().hash(&mut h);
    h.finish()
}

/// A raw embedding, before it is tied to an equation.
#[derive(Clone, Debug)]
struct Embedding {
    vertex_map: BTreeMap<NodeId, NodeId>,
    edge_map: Vec<(usize, usize)>,
    outer: Vec<End>,
    claims: Vec<Claim>,
}

/// The pattern side, preprocessed.
struct Pattern<'a, K> {
    d: &'a Diagram<K>,
    order: Vec<NodeId>,
    /// Edges between two legs: (pattern edge, end a, end b).
    internal: Vec<(usize, End, End)>,
    /// Leg–point edges: (pattern edge, leg, interface position).
    boundary: Vec<(usize, End, usize)>,
    /// Point–point edges: (pattern edge, position of `.0`, position of `.1`).
    bare: Vec<(usize, usize, usize)>,
}

impl<'a, K: Generator> Pattern<'a, K> {
    fn new(d: &'a Diagram<K>) -> Self {
        let pos: HashMap<NodeId, usize> = d.boundary().into_iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut internal = Vec::new();
        let mut boundary = Vec::new();
        let mut bare = Vec::new();
        for (i, e) in d.edges().iter().enumerate() {
            match (e.0, e.1) {
                (End::Leg(..), End::Leg(..)) => internal.push((i, e.0, e.1)),
                (End::Leg(..), End::Point(p)) => boundary.push((i, e.0, pos[&p])),
                (End::Point(p), End::Leg(..)) => boundary.push((i, e.1, pos[&p])),
                (End::Point(p), End::Point(q)) => bare.push((i, pos[&p], pos[&q])),
            }
        }
        // Search order: breadth-first within components, each component
        // started from its highest-arity vertex.
        let mut adj: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
        for &(_, a, b) in &internal {
            adj.entry(a.node()).or_default().push(b.node());
            adj.entry(b.node()).or_default().push(a.node());
        }
        let mut starts: Vec<NodeId> = d.vertices().map(|(v, _)| v).collect();
        starts.sort_by_key(|&v| (std::cmp::Reverse(d.degree(v)), v));
        let mut order = Vec::new();
        let mut seen = HashSet::new();
        for s in starts {
            if !seen.insert(s) {
                continue;
            }
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                let mut next: Vec<NodeId> = adj.get(&v).cloned().unwrap_or_default();
                next.sort_unstable();
                for u in next {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
        }
        Pattern { d, order, internal, boundary, bare }
    }
}

fn norm(a: End, b: End) -> (End, End) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn end_at(e: &Edge, second: bool) -> End {
    if second {
        e.1
    } else {
        e.0
    }
}

/// The host side, preprocessed.
struct Host<'a, K> {
    d: &'a Diagram<K>,
    /// Half-edges at each vertex: (edge, is `.1`).
    halves: HashMap<NodeId, Vec<(usize, bool)>>,
    /// Leg–leg edges keyed by their normalised ends.
    by_key: HashMap<(End, End), Vec<usize>>,
    neighbours: HashMap<NodeId, BTreeSet<NodeId>>,
}

impl<'a, K: Generator> Host<'a, K> {
    fn new(d: &'a Diagram<K>) -> Self {
        let mut halves: HashMap<NodeId, Vec<(usize, bool)>> = HashMap::new();
        let mut by_key: HashMap<(End, End), Vec<usize>> = HashMap::new();
        let mut neighbours: HashMap<NodeId, BTreeSet<NodeId>> = HashMap::new();
        for (i, e) in d.edges().iter().enumerate() {
            for (second, end) in [(false, e.0), (true, e.1)] {
                if let End::Leg(v, _) = end {
                    halves.entry(v).or_default().push((i, second));
                }
            }
            if let (End::Leg(a, _), End::Leg(b, _)) = (e.0, e.1) {
                by_key.entry(norm(e.0, e.1)).or_default().push(i);
                neighbours.entry(a).or_default().insert(b);
                neighbours.entry(b).or_default().insert(a);
            }
        }
        Host { d, halves, by_key, neighbours }
    }
}

fn map_end(end: End, map: &HashMap<NodeId, NodeId>) -> End {
    match end {
        End::Leg(v, p) => End::Leg(map[&v], p),
        other => other,
    }
}

struct Search<'p, 'h, 'a, K> {
    p: &'p Pattern<'a, K>,
    h: &'h Host<'a, K>,
    anchors: Option<&'h BTreeSet<NodeId>>,
    assign: HashMap<NodeId, NodeId>,
    used: HashSet<NodeId>,
    out: Vec<Embedding>,
}

impl<K: Generator> Search<'_, '_, '_, K> {
    fn run(&mut self, depth: usize) {
        if depth == self.p.order.len() {
            self.complete();
            return;
        }
        let v = self.p.order[depth];
        let kind = self.p.d.kind(v).expect("pattern vertex");
        let arity = self.p.d.degree(v);
        // Candidates: neighbours of an already-mapped neighbour, or everything.
        let anchor_nb = self.p.internal.iter().find_map(|&(_, a, b)| {
            let (x, y) = (a.node(), b.node());
            if x == v && y != v && self.assign.contains_key(&y) {
                Some(self.assign[&y])
            } else if y == v && x != v && self.assign.contains_key(&x) {
                Some(self.assign[&x])
            } else {
                None
            }
        });
        let candidates: Vec<NodeId> = match anchor_nb {
            Some(w) => self.h.neighbours.get(&w).map(|s| s.iter().copied().collect()).unwrap_or_default(),
            None => self.h.d.vertices().map(|(w, _)| w).collect(),
        };
        for w in candidates {
            if self.used.contains(&w) || self.h.d.kind(w) != Some(kind) || self.h.d.degree(w) != arity {
                continue;
            }
            if let Some(a) = self.anchors {
                if !a.contains(&w) {
                    continue;
                }
            }
            self.assign.insert(v, w);
            if self.edges_fit(v) {
                self.used.insert(w);
                self.run(depth + 1);
                self.used.remove(&w);
            }
            self.assign.remove(&v);
        }
    }

    /// Checks that the host has enough edges for every pattern edge between
    /// `v` and an already-mapped vertex.
    fn edges_fit(&self, v: NodeId) -> bool {
        let mut need: HashMap<(End, End), usize> = HashMap::new();
        for &(_, a, b) in &self.p.internal {
            let (x, y) = (a.node(), b.node());
            if (x == v || y == v) && self.assign.contains_key(&x) && self.assign.contains_key(&y) {
                *need.entry(norm(map_end(a, &self.assign), map_end(b, &self.assign))).or_default() += 1;
            }
        }
        need.iter().all(|(key, &c)| self.h.by_key.get(key).map_or(0, |l| l.len()) >= c)
    }

    fn complete(&mut self) {
        let hd = self.h.d;
        let k = self.p.d.boundary().len();
        let mut claimed: HashSet<(usize, bool)> = HashSet::new();
        let mut edge_map = Vec::new();
        // Internal pattern edges take the first free host edges of their key.
        let mut taken: HashMap<(End, End), usize> = HashMap::new();
        for &(pe, a, b) in &self.p.internal {
            let (ha, hb) = (map_end(a, &self.assign), map_end(b, &self.assign));
            let key = norm(ha, hb);
            let slot = taken.entry(key).or_default();
            let he = self.h.by_key[&key][*slot];
            *slot += 1;
            edge_map.push((pe, he));
            claimed.insert((he, false));
            claimed.insert((he, true));
        }
        // Boundary half-edges: per (vertex, port), biject free host halves
        // with pattern positions in every possible way.
        let mut groups: Vec<HalfGroup> = Vec::new();
        let mut per: BTreeMap<(NodeId, u8), Vec<(usize, usize)>> = BTreeMap::new();
        for &(pe, leg, pos) in &self.p.boundary {
            if let End::Leg(v, port) = leg {
                per.entry((v, port)).or_default().push((pe, pos));
            }
        }
        for ((v, port), positions) in per {
            let w = self.assign[&v];
            let free: Vec<(usize, bool)> = self.h.halves[&w]
                .iter()
                .copied()
                .filter(|&(e, s)| !claimed.contains(&(e, s)) && matches!(end_at(&hd.edges()[e], s), End::Leg(_, q) if q == port))
                .collect();
            if free.len() != positions.len() {
                return;
            }
            groups.push((positions, free));
        }
        let mut choices: Vec<Vec<(usize, usize, usize, bool)>> = vec![Vec::new()];
        for (positions, free) in &groups {
            let mut next = Vec::new();
            for perm in permutations(free.len()) {
                for base in &choices {
                    let mut c = base.clone();
                    for (i, &(pe, pos)) in positions.iter().enumerate() {
                        let (e, s) = free[perm[i]];
                        c.push((pe, pos, e, s));
                    }
                    next.push(c);
                }
            }
            choices = next;
        }
        for choice in choices {
            let mut outer = vec![End::Point(NodeId::MAX); k];
            let mut claims = vec![Claim::Half { edge: 0, second: false }; k];
            let mut em = edge_map.clone();
            let mut busy: HashSet<usize> = claimed.iter().map(|c| c.0).collect();
            for &(pe, pos, e, s) in &choice {
                outer[pos] = end_at(&hd.edges()[e], !s);
                claims[pos] = Claim::Half { edge: e, second: s };
                em.push((pe, e));
                busy.insert(e);
            }
            self.bare_wires(0, &mut outer, &mut claims, &mut em, &mut busy);
        }
    }

    fn bare_wires(&mut self, i: usize, outer: &mut Vec<End>, claims: &mut Vec<Claim>, em: &mut Vec<(usize, usize)>, busy: &mut HashSet<usize>) {
        if i == self.p.bare.len() {
            let mut edge_map = em.clone();
            edge_map.sort_unstable();
            self.out.push(Embedding {
                vertex_map: self.assign.iter().map(|(&a, &b)| (a, b)).collect(),
                edge_map,
                outer: outer.clone(),
                claims: claims.clone(),
            });
            return;
        }
        let (pe, pa, pb) = self.p.bare[i];
        for (e, edge) in self.h.d.edges().iter().enumerate() {
            if busy.contains(&e) {
                continue;
            }
            let touches_image = [edge.0, edge.1].iter().any(|x| matches!(x, End::Leg(v, _) if self.used.contains(v)));
            if touches_image {
                continue;
            }
            busy.insert(e);
            em.push((pe, e));
            for forward in [true, false] {
                let (x, y) = if forward { (edge.0, edge.1) } else { (edge.1, edge.0) };
                outer[pa] = x;
                outer[pb] = y;
                claims[pa] = Claim::Bare { edge: e, forward };
                claims[pb] = Claim::Bare { edge: e, forward: !forward };
                self.bare_wires(i + 1, outer, claims, em, busy);
            }
            em.pop();
            busy.remove(&e);
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

fn embeddings<K: Generator>(pattern: &Diagram<K>, host: &Diagram<K>, anchors: Option<&BTreeSet<NodeId>>) -> Vec<Embedding> {
    if pattern.loops() > host.loops() {
        return Vec::new();
    }
    if let Some(a) = anchors {
        if a.len() != pattern.vertex_count() {
            return Vec::new();
        }
    }
    let p = Pattern::new(pattern);
    let h = Host::new(host);
    let mut s = Search { p: &p, h: &h, anchors, assign: HashMap::new(), used: HashSet::new(), out: Vec::new() };
    s.run(0);
    s.out
}

/// Interface permutations induced by automorphisms of `pattern` that are
/// also automorphisms of `other`.  Always contains the identity.
fn symmetries<K: Generator>(pattern: &Diagram<K>, other: &Diagram<K>) -> Vec<Vec<usize>> {
    let pos: HashMap<NodeId, usize> = pattern.boundary().into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    let flat_other = other.with_split(0);
    let reference = flat_other.canonical_form();
    let points = other.boundary();
    let mut perms: BTreeSet<Vec<usize>> = BTreeSet::new();
    for e in embeddings(pattern, pattern, None) {
        let perm: Vec<usize> = e.outer.iter().map(|end| pos[&end.node()]).collect();
        perms.insert(perm);
    }
    perms
        .into_iter()
        .filter(|perm| {
            // Reorder the other side's boundary by the permutation and compare.
            let mut permuted = flat_other.clone();
            let reordered: Vec<NodeId> = perm.iter().map(|&j| points[j]).collect();
            permuted = relist_outputs(&permuted, reordered);
            permuted.canonical_form() == reference
        })
        .collect()
}

fn relist_outputs<K: Generator>(d: &Diagram<K>, outputs: Vec<NodeId>) -> Diagram<K> {
    Diagram::build_with_loops(d.vertices().map(|(v, k)| (v, k.clone())), d.edges().to_vec(), Vec::new(), outputs, d.loops())
        .expect("reordering the boundary keeps the diagram valid")
}

type SymmetryCache = Mutex<HashMap<u64, Arc<Vec<Vec<usize>>>>>;

fn cached_symmetries(eq: &Equation, dir: Direction) -> Arc<Vec<Vec<usize>>> {
    static CACHE: OnceLock<SymmetryCache> = OnceLock::new();
    let (pattern, other) = eq.sides(dir);
    let key = {
        let mut h = DefaultHasher::new();
        diagram_digest(pattern).hash(&mut h);
        diagram_digest(other).hash(&mut h);
        h.finish()
    };
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("cache lock").get(&key) {
        return s.clone();
    }
    let s = Arc::new(symmetries(pattern, other));
    cache.lock().expect("cache lock").insert(key, s.clone());
    s
}

/// All matches of a rule instance in `host`, deduplicated, in a
/// deterministic order.
pub fn find_matches(host: &ZhDiagram, rule: &RewriteRule, dir: Direction) -> Vec<Match> {
    find_equation_matches(host, &Arc::new(rule.equation.clone()), dir, None)
}

/// All matches of an equation, optionally restricted to those whose image is
/// exactly the `anchors` vertex set.
pub fn find_equation_matches(host: &ZhDiagram, eq: &Arc<Equation>, dir: Direction, anchors: Option<&BTreeSet<NodeId>>) -> Vec<Match> {
    let (pattern, _) = eq.sides(dir);
    let raw = embeddings(pattern, host, anchors);
    if raw.is_empty() {
        return Vec::new();
    }
    let symmetries = if raw.len() > 1 { cached_symmetries(eq, dir) } else { Arc::new(vec![(0..eq.interface_len()).collect()]) };
    let digest = diagram_digest(host);
    let mut seen: BTreeMap<(Vec<NodeId>, Vec<Outer>), Match> = BTreeMap::new();
    for e in raw {
        let m = Match {
            equation: eq.clone(),
            direction: dir,
            vertex_map: e.vertex_map,
            edge_map: e.edge_map,
            boundary: e.outer,
            claims: e.claims,
            symmetries: symmetries.clone(),
            host_digest: digest,
        };
        seen.entry(m.signature()).or_insert(m);
    }
    seen.into_values().collect()
}

/// The result of a rewrite, with the ids of the vertices it created.
#[derive(Clone, Debug)]
pub struct Rewritten {
    pub diagram: ZhDiagram,
    pub created: Vec<NodeId>,
}

/// Applies a match: removes the image of the pattern and glues in the
/// replacement side along the interface.
pub fn apply(host: &ZhDiagram, m: &Match) -> Result<ZhDiagram, RewriteError> {
    apply_traced(host, m).map(|r| r.diagram)
}

/// As [`apply`], also reporting the vertices created by the replacement.
pub fn apply_traced(host: &ZhDiagram, m: &Match) -> Result<Rewritten, RewriteError> {
    if diagram_digest(host) != m.host_digest {
        return Err(RewriteError::StaleMatch { rule: m.describe() });
    }
    let (pattern, replacement) = m.equation.sides(m.direction);
    let k = m.claims.len();
    let base = host.fresh_id();
    // Fresh replacement vertices come first so that their ids are predictable.
    let nv = replacement.vertex_count() as NodeId;
    let glued = replacement.compacted().renumbered(base);
    let q0 = base + nv + k as NodeId;
    let q: Vec<NodeId> = (0..k as NodeId).map(|i| q0 + i).collect();
    let image: HashSet<NodeId> = m.vertex_map.values().copied().collect();
    let removed: HashSet<usize> = m.edge_map.iter().map(|&(_, h)| h).collect();
    let mut edges: Vec<Edge> = host.edges().iter().enumerate().filter(|(i, _)| !removed.contains(i)).map(|(_, e)| *e).collect();
    let half_at: HashMap<(usize, bool), usize> = m
        .claims
        .iter()
        .enumerate()
        .filter_map(|(pos, c)| match *c {
            Claim::Half { edge, second } => Some(((edge, second), pos)),
            Claim::Bare { .. } => None,
        })
        .collect();
    for (pos, c) in m.claims.iter().enumerate() {
        match *c {
            Claim::Half { edge, second } => {
                let e = host.edges()[edge];
                match half_at.get(&(edge, !second)) {
                    Some(&other) if other > pos => edges.push(Edge(End::Point(q[pos]), End::Point(q[other]))),
                    Some(_) => {}
                    None => edges.push(Edge(end_at(&e, !second), End::Point(q[pos]))),
                }
            }
            Claim::Bare { edge, forward } => {
                let e = host.edges()[edge];
                let outside = if forward { e.0 } else { e.1 };
                edges.push(Edge(outside, End::Point(q[pos])));
            }
        }
    }
    let r_points = glued.boundary();
    edges.extend(glued.edges().iter().copied());
    for (i, &r) in r_points.iter().enumerate() {
        edges.push(Edge(End::Point(r), End::Point(q[i])));
    }
    let mut vertices: BTreeMap<NodeId, _> = host.vertices().filter(|(v, _)| !image.contains(v)).map(|(v, kd)| (v, *kd)).collect();
    vertices.extend(glued.vertices().map(|(v, kd)| (v, *kd)));
    let mut interior = q.clone();
    interior.extend(&r_points);
    let loops = host.loops() - pattern.loops() + replacement.loops();
    let diagram = Diagram::from_parts(vertices, edges, host.inputs().to_vec(), host.outputs().to_vec(), loops, &interior);
    debug_assert!(diagram.validate().is_ok(), "rewrite produced an invalid diagram");
    Ok(Rewritten { diagram, created: glued.vertices().map(|(v, _)| v).collect() })
}
