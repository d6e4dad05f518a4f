//! Small named graphs used as fixtures and CLI demo inputs.

use crate::graph::Graph;

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges).unwrap()
}

/// Path P_n on n vertices (n - 1 edges).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).unwrap()
}

/// Star K_{1,k}: center 0, leaves 1..=k.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::build(k + 1, &edges).unwrap()
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Complete bipartite graph K_{a,b}; part A is 0..a, part B is a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..(a + b) {
            edges.push((u, v));
        }
    }
    Graph::build(a + b, &edges).unwrap()
}

/// The 3-cube Q3 (vertices are 3-bit strings, edges flip one bit).
pub fn cube_q3() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::build(8, &edges).unwrap()
}

/// The dodecahedron graph: 20 vertices, 3-regular, planar, girth 5.
/// Built from its LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
pub fn dodecahedron() -> Graph {
    const LCF: [i64; 10] = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4];
    let n = 20i64;
    let mut edges = Vec::new();
    for i in 0..20i64 {
        edges.push((i as usize, ((i + 1) % n) as usize));
        let j = (i + LCF[(i % 10) as usize]).rem_euclid(n);
        let (a, b) = (i.min(j) as usize, i.max(j) as usize);
        edges.push((a, b));
    }
    Graph::build(20, &edges).unwrap()
}

/// Theta graph: hubs 0 and 1 joined by three internally disjoint paths of
/// lengths a, b, c (each >= 2, so the graph stays simple).
/// Girth is the sum of the two smallest lengths.
pub fn theta(a: usize, b: usize, c: usize) -> Graph {
    assert!(a >= 2 && b >= 2 && c >= 2);
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..(len - 1) {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::build(next, &edges).unwrap()
}

/// The Petersen graph: 3-regular, girth 5, not planar.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::build(10, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn fixture_sizes() {
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(cube_q3().edge_count(), 12);
        let d = dodecahedron();
        assert_eq!(d.vertex_count(), 20);
        assert_eq!(d.edge_count(), 30);
        assert!(d.vertices().all(|v| d.degree(v) == 3));
        let t = theta(5, 5, 5);
        assert_eq!(t.vertex_count(), 14);
        assert_eq!(t.edge_count(), 15);
        assert_eq!(t.girth(), Girth::Finite(10));
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.girth(), Girth::Finite(5));
    }
}
