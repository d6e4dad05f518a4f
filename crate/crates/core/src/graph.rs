//! Immutable simple undirected graphs with the degree-class and girth queries
//! every other module builds on.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are sorted and deduplicated
//! at construction, so iteration order (and everything derived from it) is
//! canonical.

use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { endpoint: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Girth of a graph: length of its shortest cycle, infinite for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// True when the girth is at least `bound` (infinite girth passes every bound).
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

/// Degree-class queries: `S_i`, `S_{i+}`, `S_{i-}` and the two-neighbor
/// refinements `S(i,j)`, `S(i,j+)`, `S(i+,j+)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeClass {
    /// Vertices of degree exactly `i`.
    Exact(usize),
    /// Vertices of degree at least `i`.
    AtLeast(usize),
    /// Vertices of degree at most `i`.
    AtMost(usize),
    /// `S(i,j)`: degree exactly `i` with exactly `j` neighbors of degree 2.
    TwoNbrs { degree: usize, two_neighbors: usize },
    /// `S(i,j+)`: degree exactly `i` with at least `j` neighbors of degree 2.
    TwoNbrsAtLeast { degree: usize, two_neighbors: usize },
    /// `S(i+,j+)`: degree at least `i` with at least `j` neighbors of degree 2.
    BothAtLeast { degree: usize, two_neighbors: usize },
}

/// A finite simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered endpoint pairs.
    /// Duplicate edges are dropped; self-loops and out-of-range endpoints are errors.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: u, vertex_count: n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: v, vertex_count: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of degree-2 neighbors of `v`, i.e. `|N(v) ∩ S_2|`.
    pub fn two_neighbor_count(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&w| self.degree(w) == 2).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally). Returns the
    /// subgraph and the map from new ids to original ids.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut ids: Vec<usize> = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut back = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in ids.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for &u in &ids {
            for &v in &self.adj[u] {
                if u < v && back[v] != usize::MAX {
                    edges.push((back[u], back[v]));
                }
            }
        }
        (Graph::build(ids.len(), &edges).expect("induced subgraph is simple"), ids)
    }

    /// The graph with the edges in `removed` deleted. Edges not present are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if let Ok(i) = adj[u].binary_search(&v) {
                adj[u].remove(i);
            }
            if let Ok(i) = adj[v].binary_search(&u) {
                adj[v].remove(i);
            }
        }
        Graph { adj }
    }

    /// Girth by BFS from every vertex: for each root, the minimum
    /// `dist(u) + dist(w) + 1` over non-tree edges `uw` bounds the shortest
    /// cycle, and the bound is attained for roots on a shortest cycle.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Vertices matching a degree class, sorted.
    pub fn degree_class(&self, q: DegreeClass) -> Vec<usize> {
        if let DegreeClass::TwoNbrs { degree, two_neighbors } = q {
            assert!(two_neighbors <= degree, "S(i,j) requires j <= i");
        }
        self.vertices()
            .filter(|&v| {
                let d = self.degree(v);
                match q {
                    DegreeClass::Exact(i) => d == i,
                    DegreeClass::AtLeast(i) => d >= i,
                    DegreeClass::AtMost(i) => d <= i,
                    DegreeClass::TwoNbrs { degree, two_neighbors } => {
                        d == degree && self.two_neighbor_count(v) == two_neighbors
                    }
                    DegreeClass::TwoNbrsAtLeast { degree, two_neighbors } => {
                        d == degree && self.two_neighbor_count(v) >= two_neighbors
                    }
                    DegreeClass::BothAtLeast { degree, two_neighbors } => {
                        d >= degree && self.two_neighbor_count(v) >= two_neighbors
                    }
                }
            })
            .collect()
    }

    /// Edges `xy` with `d(x) = a` and `d(y) = b` (or `d(y) <= b` when
    /// `b_is_upper`), in either orientation. Sorted pairs `(u, v)`, `u < v`.
    pub fn edge_weight_class(&self, a: usize, b: usize, b_is_upper: bool) -> Vec<(usize, usize)> {
        let matches = |x: usize, y: usize| {
            let (dx, dy) = (self.degree(x), self.degree(y));
            dx == a && if b_is_upper { dy <= b } else { dy == b }
        };
        self.edges()
            .into_iter()
            .filter(|&(u, v)| matches(u, v) || matches(v, u))
            .collect()
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.adj[u].iter().filter(|w| self.adj[v].binary_search(w).is_ok()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn build_c5() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.min_degree(), 0);
        assert_eq!(g.max_degree(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn duplicate_edges_dropped() {
        let g = Graph::build(4, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let h = Graph::build(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn build_rejects_self_loop_and_range() {
        assert_eq!(Graph::build(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::build(2, &[(0, 5)]),
            Err(GraphError::EndpointOutOfRange { endpoint: 5, vertex_count: 2 })
        );
    }

    #[test]
    fn degree_classes_on_c5() {
        let g = graphs::cycle(5);
        assert_eq!(g.degree_class(DegreeClass::Exact(2)), vec![0, 1, 2, 3, 4]);
        assert_eq!(
            g.degree_class(DegreeClass::TwoNbrs { degree: 2, two_neighbors: 2 }),
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn degree_classes_on_star() {
        // K_{1,4}: leaves have degree 1, so the center has no 2-neighbors.
        let g = graphs::star(4);
        assert!(g.degree_class(DegreeClass::TwoNbrs { degree: 4, two_neighbors: 4 }).is_empty());
        assert_eq!(g.degree_class(DegreeClass::TwoNbrs { degree: 4, two_neighbors: 0 }), vec![0]);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(graphs::cycle(5).girth(), Girth::Finite(5));
        assert_eq!(graphs::path(6).girth(), Girth::Infinite);
        assert_eq!(graphs::star(7).girth(), Girth::Infinite);
        assert_eq!(graphs::theta(5, 5, 6).girth(), Girth::Finite(10));
        assert_eq!(graphs::complete(4).girth(), Girth::Finite(3));
        assert_eq!(graphs::cube_q3().girth(), Girth::Finite(4));
        assert_eq!(graphs::dodecahedron().girth(), Girth::Finite(5));
    }

    #[test]
    fn edge_weight_classes() {
        let c5 = graphs::cycle(5);
        assert_eq!(c5.edge_weight_class(2, 4, true).len(), 5);
        assert!(c5.edge_weight_class(3, 3, true).is_empty());
        let dodec = graphs::dodecahedron();
        assert_eq!(dodec.edge_weight_class(3, 3, true).len(), 30);
    }

    #[test]
    fn handshake() {
        for g in [graphs::cycle(7), graphs::cube_q3(), graphs::dodecahedron(), graphs::star(5)] {
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn degree_classes_partition_vertices() {
        let g = graphs::theta(3, 4, 5);
        let mut count = 0;
        for i in 0..=g.max_degree() {
            count += g.degree_class(DegreeClass::Exact(i)).len();
        }
        assert_eq!(count, g.vertex_count());
    }

    /// Independent girth oracle: for each edge, shortest path between its
    /// endpoints after deleting it, plus one.
    pub fn girth_by_edge_deletion(g: &Graph) -> Girth {
        let mut best = usize::MAX;
        for (u, v) in g.edges() {
            let h = g.without_edges(&[(u, v)]);
            let mut dist = vec![usize::MAX; h.vertex_count()];
            dist[u] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in h.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                best = best.min(dist[v] + 1);
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    #[test]
    fn girth_matches_edge_deletion_oracle_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            assert_eq!(g.girth(), girth_by_edge_deletion(&g));
        }
    }
}
