//! Text formats: edge lists (`.el`), graph6 (`.g6`) and rotation systems
//! (`.rot`). Serializers emit byte-stable output: sorted, `\n` line endings.

use crate::embed::RotationSystem;
use crate::graph::Graph;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: malformed input: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("line {line}: bad graph6 data: {reason}")]
    Graph6 { line: usize, reason: String },
    #[error("rotation file: vertex {vertex} missing or repeated")]
    RotationVertex { vertex: usize },
    #[error("rotation at vertex {vertex} is not symmetric or lists a non-neighbor")]
    RotationInconsistent { vertex: usize },
    #[error("graph too large for graph6 (max 258047 vertices)")]
    TooLarge,
}

/// Parses an edge list: one `u v` pair per line, `#` comments and blank
/// lines ignored. Labels are mapped to dense ids by first appearance.
/// Returns the graph and the label table (index = dense id).
pub fn parse_edgelist(text: &str) -> Result<(Graph, Vec<String>), IoError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(IoError::MalformedLine { line, content: raw.to_string() }),
        };
        let mut id_of = |label: &str| -> usize {
            *index.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id_of(a), id_of(b));
        if u == v {
            return Err(IoError::SelfLoop { line });
        }
        edges.push((u, v));
    }
    let g = Graph::build(labels.len(), &edges).expect("ids are dense and loop-free");
    Ok((g, labels))
}

/// Edge list with dense ids, one sorted `u v` pair per line.
pub fn serialize_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses graph6 text: one graph per line, optional `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Vec<Graph>, IoError> {
    let mut graphs = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let mut s = raw.trim();
        if let Some(rest) = s.strip_prefix(">>graph6<<") {
            s = rest.trim();
        }
        if s.is_empty() {
            continue;
        }
        graphs.push(parse_graph6_line(s, line)?);
    }
    Ok(graphs)
}

fn parse_graph6_line(s: &str, line: usize) -> Result<Graph, IoError> {
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(IoError::Graph6 { line, reason: "character out of printable range".into() });
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(IoError::Graph6 { line, reason: "truncated vertex count".into() });
        }
        if bytes[1] == b'~' {
            return Err(IoError::Graph6 { line, reason: "8-byte vertex counts unsupported".into() });
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let bits_needed = n * (n.saturating_sub(1)) / 2;
    let groups = bits_needed.div_ceil(6);
    if bytes.len() != pos + groups {
        return Err(IoError::Graph6 {
            line,
            reason: format!("expected {} data characters, found {}", groups, bytes.len() - pos),
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit_index % 6 == 0 {
                current = bytes[pos] - 63;
                pos += 1;
            }
            let bit = current >> (5 - (bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::build(n, &edges).expect("graph6 bits encode a simple graph"))
}

/// graph6 encoding of `g` (no header, no trailing newline).
pub fn graph6_string(g: &Graph) -> Result<String, IoError> {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258047 {
        bytes.push(b'~');
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    } else {
        return Err(IoError::TooLarge);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        bytes.push(group + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

/// Parses a rotation file: one line per vertex, `v: n1 n2 n3 ...` in cyclic
/// order. Every vertex 0..n-1 must appear exactly once. Returns the graph
/// implied by the rotations (adjacency must be symmetric) together with the
/// rotation system.
pub fn parse_rotation(text: &str) -> Result<(Graph, RotationSystem), IoError> {
    let mut entries: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, tail) = content
            .split_once(':')
            .ok_or_else(|| IoError::MalformedLine { line, content: raw.to_string() })?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| IoError::MalformedLine { line, content: raw.to_string() })?;
        let mut ring = Vec::new();
        for tok in tail.split_whitespace() {
            let w: usize =
                tok.parse().map_err(|_| IoError::MalformedLine { line, content: raw.to_string() })?;
            if w == v {
                return Err(IoError::SelfLoop { line });
            }
            ring.push(w);
        }
        if entries.insert(v, ring).is_some() {
            return Err(IoError::RotationVertex { vertex: v });
        }
    }
    let n = entries.len();
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        match entries.remove(&v) {
            Some(ring) => order.push(ring),
            None => return Err(IoError::RotationVertex { vertex: v }),
        }
    }
    // adjacency implied by the rotations must be symmetric and simple
    let mut edges = Vec::new();
    for (v, ring) in order.iter().enumerate() {
        let mut sorted = ring.clone();
        sorted.sort_unstable();
        let dedup_len = {
            let mut s = sorted.clone();
            s.dedup();
            s.len()
        };
        if dedup_len != ring.len() {
            return Err(IoError::RotationInconsistent { vertex: v });
        }
        for &w in ring {
            if w >= n {
                return Err(IoError::RotationInconsistent { vertex: v });
            }
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let g = Graph::build(n, &edges).expect("validated above");
    for (v, ring) in order.iter().enumerate() {
        let mut sorted = ring.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(IoError::RotationInconsistent { vertex: v });
        }
    }
    let rotation = RotationSystem::new(&g, order)
        .map_err(|_| IoError::RotationInconsistent { vertex: 0 })?;
    Ok((g, rotation))
}

/// Rotation file text for an existing rotation system.
pub fn serialize_rotation(rot: &RotationSystem) -> String {
    let mut out = String::new();
    for v in 0..rot.vertex_count() {
        let ring: Vec<String> = rot.at(v).iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", ring.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{check_planar_embedding, faces_of, PlanarEmbedding};
    use crate::graphs;

    #[test]
    fn edgelist_round_trip() {
        let (g, labels) = parse_edgelist("0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, graphs::cycle(3));
        assert_eq!(labels, vec!["0", "1", "2"]);
        assert_eq!(serialize_edgelist(&g), "0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edgelist_labels_by_first_appearance() {
        let (g, labels) = parse_edgelist("a b\nb c\n").unwrap();
        assert_eq!(labels, vec!["a", "b", "c"]);
        assert_eq!(g, graphs::path(3));
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(parse_edgelist("0 0\n"), Err(IoError::SelfLoop { line: 1 }));
        assert!(matches!(
            parse_edgelist("0 1 2\n"),
            Err(IoError::MalformedLine { line: 1, .. })
        ));
    }

    #[test]
    fn edgelist_comments_and_blanks() {
        let (g, _) = parse_edgelist("# a triangle\n\n0 1\n1 2 # last\n2 0\n").unwrap();
        assert_eq!(g, graphs::cycle(3));
    }

    #[test]
    fn graph6_goldens_from_reference_encoder() {
        // strings produced by the networkx graph6 encoder
        assert_eq!(graph6_string(&graphs::cycle(5)).unwrap(), "Dhc");
        assert_eq!(graph6_string(&graphs::complete(4)).unwrap(), "C~");
        assert_eq!(graph6_string(&graphs::star(4)).unwrap(), "Ds_");
        assert_eq!(graph6_string(&graphs::cycle(10)).unwrap(), "IhCGGC@_G");
        assert_eq!(graph6_string(&graphs::petersen()).unwrap(), "IheA@GUAo");
        assert_eq!(graph6_string(&Graph::build(1, &[]).unwrap()).unwrap(), "@");
        assert_eq!(graph6_string(&graphs::path(2)).unwrap(), "A_");

        assert_eq!(parse_graph6("Dhc").unwrap()[0], graphs::cycle(5));
        assert_eq!(parse_graph6("C~").unwrap()[0], graphs::complete(4));
        assert_eq!(parse_graph6(">>graph6<<IheA@GUAo").unwrap()[0], graphs::petersen());
    }

    #[test]
    fn graph6_long_form() {
        let c70 = graphs::cycle(70);
        let s = graph6_string(&c70).unwrap();
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse_graph6(&s).unwrap()[0], c70);
    }

    #[test]
    fn graph6_malformed() {
        assert!(matches!(parse_graph6("Dh"), Err(IoError::Graph6 { line: 1, .. })));
        assert!(matches!(parse_graph6("D\u{7f}aa"), Err(IoError::Graph6 { .. })));
    }

    #[test]
    fn graph6_round_trip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(0..=20);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let s = graph6_string(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap()[0], g);
        }
    }

    #[test]
    fn rotation_round_trip_c5() {
        let text = "0: 1 4\n1: 2 0\n2: 3 1\n3: 4 2\n4: 0 3\n";
        let (g, rot) = parse_rotation(text).unwrap();
        assert_eq!(g, graphs::cycle(5));
        let faces = faces_of(&rot, &g).unwrap();
        assert_eq!(faces.len(), 2);
        assert_eq!(serialize_rotation(&rot), text);
        let e = PlanarEmbedding::new(g, rot).unwrap();
        assert!(check_planar_embedding(&e).passed);
    }

    #[test]
    fn rotation_rejects_non_neighbor() {
        // vertex 2 lists 0, but 0 does not list 2
        let text = "0: 1\n1: 0 2\n2: 1 0\n";
        assert!(matches!(parse_rotation(text), Err(IoError::RotationInconsistent { .. })));
    }

    #[test]
    fn rotation_rejects_missing_vertex() {
        let text = "0: 1\n2: 1\n";
        assert!(matches!(parse_rotation(text), Err(IoError::RotationVertex { .. })));
    }
}
