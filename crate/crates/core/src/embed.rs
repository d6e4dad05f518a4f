//! Combinatorial embeddings: rotation systems, face extraction and
//! planarity testing.
//!
//! A rotation system fixes the cyclic order of neighbors around each vertex.
//! Faces are recovered by next-edge traversal: after walking the directed
//! edge `(u, v)`, the walk continues to `(v, w)` where `w` is the successor
//! of `u` in the rotation at `v`. Every directed edge lies on exactly one
//! face boundary, so face lengths sum to `2|E|`.
//!
//! `compute_embedding` builds a planar rotation system (or reports
//! non-planarity) by the incremental face-splitting method of Demoucron,
//! Malgrange and Pertuiset, run per biconnected block and merged at cut
//! vertices. Every embedding produced here passes `check_planar_embedding`;
//! externally supplied rotations are validated through the same checks and
//! never trusted.

use crate::graph::Graph;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("rotation at vertex {vertex} is not a permutation of its adjacency list")]
    InconsistentRotation { vertex: usize },
}

/// Cyclic neighbor order around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that each vertex's rotation is a permutation of its
    /// adjacency list in `g`.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<RotationSystem, EmbedError> {
        if order.len() != g.vertex_count() {
            return Err(EmbedError::InconsistentRotation { vertex: order.len().min(g.vertex_count()) });
        }
        for v in g.vertices() {
            let mut sorted = order[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(EmbedError::InconsistentRotation { vertex: v });
            }
        }
        Ok(RotationSystem { order })
    }

    /// The adjacency order at `v`.
    pub fn at(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    /// Successor of neighbor `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let ring = &self.order[v];
        let i = ring.iter().position(|&x| x == u).expect("u must be a neighbor of v");
        ring[(i + 1) % ring.len()]
    }

    /// The mirror image (every rotation reversed) — a valid embedding of the
    /// same graph with the same face structure, traversed backwards.
    pub fn mirrored(&self) -> RotationSystem {
        RotationSystem {
            order: self.order.iter().map(|r| r.iter().rev().copied().collect()).collect(),
        }
    }

    /// Stable FNV-1a fingerprint of the rotation contents.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        for ring in &self.order {
            eat(ring.len() as u64);
            for &w in ring {
                eat(w as u64);
            }
            eat(u64::MAX);
        }
        h
    }
}

/// One face of an embedding: a closed boundary walk. The walk stores the
/// vertex sequence; directed edge `i` runs from `walk[i]` to `walk[i+1]`
/// (cyclically). A vertex or edge may appear more than once on the walk of
/// a single face (cut structures), and every such incidence counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    walk: Vec<usize>,
}

impl Face {
    /// Face degree `l(f)`: the number of edge steps on the boundary walk.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Boundary walk as a vertex sequence.
    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.walk.contains(&v)
    }

    /// Number of times `v` occurs on the boundary walk.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.walk.iter().filter(|&&x| x == v).count()
    }

    /// Number of boundary occurrences of vertices satisfying `pred`.
    pub fn count_occurrences(&self, mut pred: impl FnMut(usize) -> bool) -> usize {
        self.walk.iter().filter(|&&x| pred(x)).count()
    }

    /// Whether the undirected edge `uv` lies on the boundary.
    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let n = self.walk.len();
        (0..n).any(|i| {
            let (a, b) = (self.walk[i], self.walk[(i + 1) % n]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }

    /// True when the boundary walk is a simple cycle (no repeated vertex).
    pub fn is_simple_cycle(&self) -> bool {
        let set: BTreeSet<_> = self.walk.iter().collect();
        set.len() == self.walk.len() && self.walk.len() >= 3
    }

    fn canonicalize(&mut self) {
        if self.walk.is_empty() {
            return;
        }
        let n = self.walk.len();
        let start = (0..n)
            .min_by_key(|&i| (self.walk[i], self.walk[(i + 1) % n]))
            .unwrap();
        self.walk.rotate_left(start);
    }
}

/// A graph together with a rotation system and its derived faces.
#[derive(Debug, Clone)]
pub struct PlanarEmbedding {
    graph: Graph,
    rotation: RotationSystem,
    faces: Vec<Face>,
    face_of: BTreeMap<(usize, usize), usize>,
}

impl PlanarEmbedding {
    /// Builds the embedding defined by `rotation`, validating consistency
    /// with `g`. Planarity (Euler's formula) is *not* enforced here; use
    /// [`check_planar_embedding`].
    pub fn new(graph: Graph, rotation: RotationSystem) -> Result<PlanarEmbedding, EmbedError> {
        let rotation = RotationSystem::new(&graph, rotation.order)?;
        let faces = faces_of(&rotation, &graph)?;
        let mut face_of = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            let n = face.walk.len();
            for i in 0..n {
                face_of.insert((face.walk[i], face.walk[(i + 1) % n]), fi);
            }
        }
        Ok(PlanarEmbedding { graph, rotation, faces, face_of })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, fi: usize) -> &Face {
        &self.faces[fi]
    }

    /// Index of the face whose boundary contains the directed edge `(u, v)`.
    pub fn face_of_directed(&self, u: usize, v: usize) -> usize {
        self.face_of[&(u, v)]
    }

    /// Distinct faces incident to `v`, sorted.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.graph.neighbors(v).iter().map(|&u| self.face_of[&(u, v)]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Face indices at each corner of `v`, one per incidence: entry `i` is
    /// the face containing the directed edge from the `i`-th rotation
    /// neighbor into `v`.
    pub fn corner_faces(&self, v: usize) -> Vec<usize> {
        self.rotation.at(v).iter().map(|&u| self.face_of[&(u, v)]).collect()
    }

    /// The face lying between consecutive rotation neighbors `a = rot[i]`
    /// and `rot[i+1]` of `v`: the face containing the corner walk
    /// `a -> v -> rot[i+1]`.
    pub fn corner_face_after(&self, v: usize, a: usize) -> usize {
        self.face_of[&(a, v)]
    }

    pub fn mirrored(&self) -> PlanarEmbedding {
        PlanarEmbedding::new(self.graph.clone(), self.rotation.mirrored())
            .expect("mirror of a valid rotation is valid")
    }

    /// True when the embedding satisfies Euler's formula for the sphere.
    pub fn is_planar(&self) -> bool {
        check_planar_embedding(self).passed
    }
}

/// Face extraction by next-edge traversal. Every directed edge is covered
/// exactly once. A connected edgeless graph (a single vertex) yields one
/// empty face.
pub fn faces_of(rotation: &RotationSystem, g: &Graph) -> Result<Vec<Face>, EmbedError> {
    // Validate before traversing; an inconsistent rotation would loop.
    let rotation = RotationSystem::new(g, rotation.order.clone())?;
    if g.edge_count() == 0 {
        return Ok(vec![Face { walk: Vec::new() }]);
    }
    let mut darts: Vec<(usize, usize)> = Vec::with_capacity(2 * g.edge_count());
    for u in g.vertices() {
        for &v in g.neighbors(u) {
            darts.push((u, v));
        }
    }
    darts.sort_unstable();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for &start in &darts {
        if seen.contains(&start) {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            seen.insert(cur);
            walk.push(cur.0);
            let (u, v) = cur;
            cur = (v, rotation.successor(v, u));
            if cur == start {
                break;
            }
        }
        let mut face = Face { walk };
        face.canonicalize();
        faces.push(face);
    }
    faces.sort_by(|a, b| a.walk.cmp(&b.walk));
    Ok(faces)
}

/// One named check inside an embedding validation report.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Validation report for an embedding: rotation consistency, edge coverage,
/// the face-length sum and Euler's formula.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl std::fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        writeln!(f, "overall: {}", if self.passed { "pass" } else { "FAIL" })
    }
}

/// Checks that `e` is a valid spherical embedding of a connected graph:
/// rotation consistency, each directed edge on exactly one face,
/// `sum l(f) = 2|E|` and `|V| - |E| + |F| = 2`.
pub fn check_planar_embedding(e: &PlanarEmbedding) -> EmbeddingReport {
    let g = e.graph();
    let mut checks = Vec::new();

    let connected = g.is_connected();
    checks.push(Check {
        name: "connected",
        passed: connected,
        detail: format!("{} component(s)", g.components().len()),
    });

    let rot_ok = RotationSystem::new(g, e.rotation.order.clone()).is_ok();
    checks.push(Check {
        name: "rotation-consistent",
        passed: rot_ok,
        detail: "each rotation is a permutation of the adjacency list".into(),
    });

    let covered: usize = e.faces.iter().map(Face::len).sum();
    let cover_ok = covered == 2 * g.edge_count();
    checks.push(Check {
        name: "edge-coverage",
        passed: cover_ok,
        detail: format!("face lengths sum to {covered}, expected {}", 2 * g.edge_count()),
    });

    let (v, ed, f) = (g.vertex_count() as i64, g.edge_count() as i64, e.faces.len() as i64);
    let euler = v - ed + f;
    let euler_ok = euler == 2;
    checks.push(Check {
        name: "euler",
        passed: euler_ok,
        detail: format!("{v} - {ed} + {f} = {euler}, expected 2"),
    });

    let passed = checks.iter().all(|c| c.passed);
    EmbeddingReport { checks, passed }
}

/// Computes a planar embedding of a connected graph, or reports that none
/// exists. The rotation is produced per biconnected block by incremental
/// face splitting, then blocks are merged at cut vertices.
pub fn compute_embedding(g: &Graph) -> Result<PlanarEmbedding, EmbedError> {
    if g.vertex_count() == 0 {
        return Err(EmbedError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(EmbedError::NotConnected);
    }
    // Fast Euler bound: a simple planar graph has at most 3n - 6 edges.
    if g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6 {
        return Err(EmbedError::NonPlanar);
    }

    // rotation segments per vertex, one segment per block containing it
    let mut segments: Vec<Vec<Vec<usize>>> = vec![Vec::new(); g.vertex_count()];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            segments[u].push(vec![v]);
            segments[v].push(vec![u]);
            continue;
        }
        let rot = embed_biconnected(&block)?;
        for (v, ring) in rot {
            segments[v].push(ring);
        }
    }
    let order: Vec<Vec<usize>> = segments.into_iter().map(|s| s.concat()).collect();
    let rotation = RotationSystem::new(g, order).expect("merged rotation covers adjacency");
    let embedding = PlanarEmbedding::new(g.clone(), rotation)?;
    let report = check_planar_embedding(&embedding);
    assert!(report.passed, "computed embedding failed validation:\n{report}");
    Ok(embedding)
}

/// Biconnected blocks as edge lists (canonical `(min, max)` pairs), via the
/// classic DFS lowpoint algorithm with an edge stack. Blocks are returned
/// sorted by their smallest edge for deterministic downstream output.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for &v in s.g.neighbors(u) {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    s.blocks.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let mut st = State {
        g,
        disc: vec![0; g.vertex_count()],
        low: vec![0; g.vertex_count()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in g.vertices() {
        if st.disc[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.blocks.sort();
    st.blocks
}

/// Embeds one biconnected block (>= 3 vertices) by incremental face
/// splitting. Returns the rotation ring at each block vertex, or
/// `NonPlanar` when some bridge fragment admits no face.
fn embed_biconnected(block: &[(usize, usize)]) -> Result<BTreeMap<usize, Vec<usize>>, EmbedError> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in block {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for ring in adj.values_mut() {
        ring.sort_unstable();
    }

    let cycle = find_cycle(&adj);
    let mut in_h: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_edges.insert((a.min(b), a.max(b)));
    }
    // faces as directed simple vertex cycles; together they cover each
    // embedded directed edge exactly once
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), {
        let mut r = cycle.clone();
        r.reverse();
        r
    }];

    loop {
        let fragments = find_fragments(&adj, &in_h, &h_edges);
        if fragments.is_empty() {
            break;
        }
        // admissible faces per fragment; a fragment with none kills planarity
        let mut chosen: Option<(usize, Vec<usize>)> = None; // (fragment idx, admissible)
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(fi, _)| fi)
                .collect();
            if admissible.is_empty() {
                return Err(EmbedError::NonPlanar);
            }
            let better = match &chosen {
                None => true,
                Some((best, adm)) => {
                    (admissible.len(), &fragments[i].attachments)
                        < (adm.len(), &fragments[*best].attachments)
                }
            };
            if better {
                chosen = Some((i, admissible));
            }
        }
        let (fi, admissible) = chosen.expect("nonempty fragment list");
        let frag = &fragments[fi];
        let path = fragment_path(&adj, frag, &in_h);
        split_face(&mut faces, admissible[0], &path);
        for w in &path {
            in_h.insert(*w);
        }
        for pair in path.windows(2) {
            h_edges.insert((pair[0].min(pair[1]), pair[0].max(pair[1])));
        }
    }

    // rotation at v from the face walks: walk u -> v -> w fixes succ_v(u) = w
    let mut succ: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for face in &faces {
        let n = face.len();
        for i in 0..n {
            let (u, v, w) = (face[i], face[(i + 1) % n], face[(i + 2) % n]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    let mut rotation = BTreeMap::new();
    for (&v, map) in &succ {
        let degree = adj[&v].len();
        let start = adj[&v][0];
        let mut ring = vec![start];
        let mut cur = start;
        for _ in 1..degree {
            cur = map[&cur];
            ring.push(cur);
        }
        debug_assert_eq!(map[&cur], start, "rotation at {v} is not a single cycle");
        rotation.insert(v, ring);
    }
    Ok(rotation)
}

/// Some cycle in a biconnected block, as a vertex list (deterministic: DFS
/// from the smallest vertex over sorted adjacency, first back edge wins).
fn find_cycle(adj: &BTreeMap<usize, Vec<usize>>) -> Vec<usize> {
    fn dfs(
        adj: &BTreeMap<usize, Vec<usize>>,
        u: usize,
        parent: usize,
        path: &mut Vec<usize>,
        on_path: &mut BTreeMap<usize, usize>,
        visited: &mut BTreeSet<usize>,
    ) -> Option<Vec<usize>> {
        visited.insert(u);
        on_path.insert(u, path.len());
        path.push(u);
        for &v in &adj[&u] {
            if v == parent {
                continue;
            }
            if let Some(&pos) = on_path.get(&v) {
                return Some(path[pos..].to_vec());
            }
            if !visited.contains(&v) {
                if let Some(c) = dfs(adj, v, u, path, on_path, visited) {
                    return Some(c);
                }
            }
        }
        path.pop();
        on_path.remove(&u);
        None
    }
    let start = *adj.keys().next().unwrap();
    let mut path = Vec::new();
    let mut on_path = BTreeMap::new();
    let mut visited = BTreeSet::new();
    dfs(adj, start, usize::MAX, &mut path, &mut on_path, &mut visited)
        .expect("biconnected block with >= 3 vertices contains a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// interior vertices (empty for a chord)
    interior: BTreeSet<usize>,
    /// chord edge when the fragment is a single H-H edge
    chord: Option<(usize, usize)>,
}

fn find_fragments(
    adj: &BTreeMap<usize, Vec<usize>>,
    in_h: &BTreeSet<usize>,
    h_edges: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    // chords: block edges between two H vertices not yet embedded
    for (&u, nbrs) in adj {
        for &v in nbrs {
            if u < v
                && in_h.contains(&u)
                && in_h.contains(&v)
                && !h_edges.contains(&(u, v))
            {
                fragments.push(Fragment {
                    attachments: vec![u, v],
                    interior: BTreeSet::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    // components of the block minus H, with their attachment vertices
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &s in adj.keys() {
        if in_h.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut interior = BTreeSet::from([s]);
        let mut attach = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[&u] {
                if in_h.contains(&v) {
                    attach.insert(v);
                } else if seen.insert(v) {
                    interior.insert(v);
                    queue.push_back(v);
                }
            }
        }
        fragments.push(Fragment {
            attachments: attach.into_iter().collect(),
            interior,
            chord: None,
        });
    }
    fragments.sort_by(|a, b| a.attachments.cmp(&b.attachments).then(a.chord.cmp(&b.chord)));
    fragments
}

/// A path through the fragment between two distinct attachment vertices,
/// interior vertices outside H.
fn fragment_path(
    adj: &BTreeMap<usize, Vec<usize>>,
    frag: &Fragment,
    in_h: &BTreeSet<usize>,
) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments[0];
    let mut prev: BTreeMap<usize, usize> = BTreeMap::from([(start, usize::MAX)]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u != start && in_h.contains(&u) {
            let mut path = vec![u];
            let mut cur = u;
            while cur != start {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for &v in &adj[&u] {
            // only edges belonging to this fragment: at least one endpoint interior
            let fragment_edge = frag.interior.contains(&u) || frag.interior.contains(&v);
            if fragment_edge && !prev.contains_key(&v) {
                prev.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    unreachable!("fragment of a biconnected block reaches a second attachment")
}

/// Splits face `fi` along `path` (whose endpoints lie on the face cycle).
fn split_face(faces: &mut Vec<Vec<usize>>, fi: usize, path: &[usize]) {
    let face = faces[fi].clone();
    let a = path[0];
    let b = *path.last().unwrap();
    let pa = face.iter().position(|&x| x == a).expect("path start on face");
    let pb = face.iter().position(|&x| x == b).expect("path end on face");
    let n = face.len();
    let seg = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % n;
        }
        out
    };
    let s1 = seg(pa, pb); // a .. b along the face
    let s2 = seg(pb, pa); // b .. a along the face
    let interior: Vec<usize> = path[1..path.len() - 1].to_vec();

    let mut f1 = s1;
    f1.extend(interior.iter().rev());
    let mut f2 = s2;
    f2.extend(interior.iter());

    faces[fi] = f1;
    faces.push(f2);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    fn embed(g: &Graph) -> PlanarEmbedding {
        compute_embedding(g).expect("planar")
    }

    #[test]
    fn c5_has_two_pentagonal_faces() {
        let e = embed(&graphs::cycle(5));
        assert_eq!(e.faces().len(), 2);
        assert!(e.faces().iter().all(|f| f.len() == 5));
        assert!(check_planar_embedding(&e).passed);
    }

    #[test]
    fn cube_has_six_quadrilateral_faces() {
        let e = embed(&graphs::cube_q3());
        assert_eq!(e.faces().len(), 6);
        assert!(e.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn k4_has_four_triangles() {
        let e = embed(&graphs::complete(4));
        assert_eq!(e.faces().len(), 4);
        assert!(e.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn dodecahedron_has_twelve_pentagons() {
        let e = embed(&graphs::dodecahedron());
        assert_eq!(e.faces().len(), 12);
        assert!(e.faces().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn single_edge_one_face_of_length_two() {
        let e = embed(&graphs::path(2));
        assert_eq!(e.faces().len(), 1);
        assert_eq!(e.faces()[0].len(), 2);
        assert_eq!(e.faces()[0].multiplicity(0), 1);
        assert_eq!(e.faces()[0].multiplicity(1), 1);
    }

    #[test]
    fn single_vertex_one_empty_face() {
        let e = embed(&Graph::build(1, &[]).unwrap());
        assert_eq!(e.faces().len(), 1);
        assert_eq!(e.faces()[0].len(), 0);
        assert!(check_planar_embedding(&e).passed);
    }

    #[test]
    fn tree_has_one_face() {
        let e = embed(&graphs::star(6));
        assert_eq!(e.faces().len(), 1);
        assert_eq!(e.faces()[0].len(), 12);
        // each leaf once, the center with multiplicity 6
        assert_eq!(e.faces()[0].multiplicity(0), 6);
    }

    #[test]
    fn k5_and_k33_are_nonplanar() {
        assert_eq!(compute_embedding(&graphs::complete(5)), err_nonplanar());
        assert_eq!(compute_embedding(&graphs::complete_bipartite(3, 3)), err_nonplanar());
        assert_eq!(compute_embedding(&graphs::petersen()), err_nonplanar());
    }

    fn err_nonplanar() -> Result<PlanarEmbedding, EmbedError> {
        Err(EmbedError::NonPlanar)
    }

    impl PartialEq for PlanarEmbedding {
        fn eq(&self, other: &Self) -> bool {
            self.rotation == other.rotation && self.graph == other.graph
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(compute_embedding(&g), Err(EmbedError::NotConnected));
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        for g in [
            graphs::cycle(5),
            graphs::cube_q3(),
            graphs::dodecahedron(),
            graphs::theta(3, 4, 5),
            graphs::star(4),
            graphs::path(7),
            graphs::complete(4),
        ] {
            let e = embed(&g);
            let total: usize = e.faces().iter().map(Face::len).sum();
            assert_eq!(total, 2 * g.edge_count());
            assert!(check_planar_embedding(&e).passed);
        }
    }

    #[test]
    fn euler_fails_for_forced_bad_rotation() {
        // K5 has no planar rotation at all; any rotation must fail Euler.
        let g = graphs::complete(5);
        let rot = RotationSystem::new(&g, g.vertices().map(|v| g.neighbors(v).to_vec()).collect())
            .unwrap();
        let e = PlanarEmbedding::new(g, rot).unwrap();
        let report = check_planar_embedding(&e);
        assert!(!report.passed);
        assert!(report.checks.iter().any(|c| c.name == "euler" && !c.passed));
    }

    #[test]
    fn inconsistent_rotation_rejected() {
        let g = graphs::cycle(4);
        let bad = vec![vec![1, 2], vec![0, 2], vec![1, 3], vec![2, 0]];
        assert!(matches!(
            RotationSystem::new(&g, bad),
            Err(EmbedError::InconsistentRotation { vertex: 0 })
        ));
    }

    #[test]
    fn blocks_split_at_cut_vertices() {
        // two triangles sharing vertex 2, plus a pendant edge at 4
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let bl = blocks(&g);
        assert_eq!(bl.len(), 3);
        let e = embed(&g);
        assert!(check_planar_embedding(&e).passed);
    }

    #[test]
    fn mirrored_embedding_is_valid_and_distinct() {
        let e = embed(&graphs::cube_q3());
        let m = e.mirrored();
        assert!(check_planar_embedding(&m).passed);
        assert_ne!(e.rotation().fingerprint(), m.rotation().fingerprint());
        assert_eq!(e.faces().len(), m.faces().len());
    }

    #[test]
    fn faces_deterministic() {
        let g = graphs::dodecahedron();
        let a = embed(&g);
        let b = embed(&g);
        assert_eq!(a.faces(), b.faces());
        assert_eq!(a.rotation(), b.rotation());
    }
}
