//! Exact computation of the independent domination number `gamma_i`.
//!
//! The solver branches on an undominated vertex of minimum residual degree;
//! each child picks one vertex of its closed neighborhood that is still
//! available under the independence constraint. A greedy maximal independent
//! set seeds the upper bound. Once the optimum value is known, the witness is
//! rebuilt lexicographically smallest (as a sorted id sequence) by a chain of
//! restricted feasibility searches, so results are reproducible.

use crate::graph::Graph;

/// Exact minimum together with the witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma_i: usize,
    /// Lexicographically least optimal independent dominating set, sorted.
    pub witness: Vec<usize>,
}

/// True iff `s` is independent and dominating in `g`.
pub fn is_independent_dominating(g: &Graph, s: &[usize]) -> bool {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    let mut covered = vec![false; g.vertex_count()];
    for &u in &set {
        covered[u] = true;
        for &w in g.neighbors(u) {
            covered[w] = true;
        }
    }
    covered.iter().all(|&c| c)
}

#[derive(Clone)]
struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn empty(len: usize) -> Bits {
        Bits { words: vec![0; len.div_ceil(64).max(1)], len }
    }
    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 != 0
    }
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn all_set(&self) -> bool {
        self.count() == self.len
    }
}

struct Solver<'a> {
    g: &'a Graph,
    /// closed neighborhood of each vertex
    closed: Vec<Bits>,
    /// picks must have id >= this bound (used by the lexicographic rebuild)
    min_pick: usize,
    best: usize,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, min_pick: usize) -> Solver<'a> {
        let n = g.vertex_count();
        let closed = (0..n)
            .map(|v| {
                let mut b = Bits::empty(n);
                b.set(v);
                for &w in g.neighbors(v) {
                    b.set(w);
                }
                b
            })
            .collect();
        Solver { g, closed, min_pick, best: usize::MAX }
    }

    /// Depth-first branch and bound; lowers `self.best` to the minimum number
    /// of picks that dominate everything, starting from the given partial
    /// solution. Branches that cannot beat `self.best` are cut.
    fn search(&mut self, chosen: usize, dominated: &Bits, excluded: &Bits) {
        if dominated.all_set() {
            self.best = self.best.min(chosen);
            return;
        }
        let undominated = dominated.len - dominated.count();
        let lower = undominated.div_ceil(self.g.max_degree() + 1);
        if chosen + lower >= self.best {
            return;
        }
        // undominated vertex with fewest available dominators
        let mut branch: Option<(usize, usize)> = None; // (residual, vertex)
        for v in self.g.vertices() {
            if dominated.get(v) {
                continue;
            }
            let residual = std::iter::once(v)
                .chain(self.g.neighbors(v).iter().copied())
                .filter(|&w| !excluded.get(w) && w >= self.min_pick)
                .count();
            if residual == 0 {
                return; // v can never be dominated on this branch
            }
            if branch.map_or(true, |(r, _)| residual < r) {
                branch = Some((residual, v));
            }
        }
        let (_, v) = branch.expect("some vertex is undominated");
        let mut candidates: Vec<usize> = std::iter::once(v)
            .chain(self.g.neighbors(v).iter().copied())
            .filter(|&w| !excluded.get(w) && w >= self.min_pick)
            .collect();
        candidates.sort_unstable();
        for w in candidates {
            let mut dom = dominated.clone();
            dom.or_assign(&self.closed[w]);
            let mut exc = excluded.clone();
            exc.or_assign(&self.closed[w]); // w and its neighbors become unavailable
            self.search(chosen + 1, &dom, &exc);
        }
    }
}

/// Minimum size of an independent dominating set containing `prefix`, where
/// every additional pick has id >= `min_pick`. Only values strictly below
/// `cap` are sought; returns `None` when none exists in that range.
fn constrained_minimum(g: &Graph, prefix: &[usize], min_pick: usize, cap: usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut dominated = Bits::empty(n);
    let mut excluded = Bits::empty(n);
    let mut solver = Solver::new(g, min_pick);
    for &p in prefix {
        let closed = solver.closed[p].clone();
        dominated.or_assign(&closed);
        excluded.or_assign(&closed);
    }
    solver.best = cap;
    solver.search(prefix.len(), &dominated, &excluded);
    (solver.best < cap).then_some(solver.best)
}

/// Exact independent domination number with a deterministic witness.
///
/// Every graph has one: any maximal independent set is independent
/// dominating, and the greedy one seeds the bound.
pub fn gamma_i(g: &Graph) -> DominationResult {
    let n = g.vertex_count();
    if n == 0 {
        return DominationResult { gamma_i: 0, witness: Vec::new() };
    }
    // greedy maximal independent set by increasing id
    let mut greedy = Vec::new();
    let mut blocked = vec![false; n];
    for v in 0..n {
        if !blocked[v] {
            greedy.push(v);
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    let upper = greedy.len();
    let value = constrained_minimum(g, &[], 0, upper).unwrap_or(upper);

    // lexicographically least witness of that size
    let mut witness: Vec<usize> = Vec::with_capacity(value);
    let mut from = 0;
    while witness.len() < value {
        let mut placed = false;
        for v in from..n {
            if witness.iter().any(|&p| p == v || g.has_edge(p, v)) {
                continue;
            }
            witness.push(v);
            let feasible = if witness.len() == value {
                dominates_all(g, &witness)
            } else {
                constrained_minimum(g, &witness, v + 1, value + 1) == Some(value)
            };
            if feasible {
                from = v + 1;
                placed = true;
                break;
            }
            witness.pop();
        }
        assert!(placed, "lexicographic completion must succeed at the optimum");
    }
    debug_assert!(is_independent_dominating(g, &witness));
    DominationResult { gamma_i: value, witness }
}

fn dominates_all(g: &Graph, set: &[usize]) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for &u in set {
        covered[u] = true;
        for &w in g.neighbors(u) {
            covered[w] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// Full-enumeration oracle: tries subsets in size order, lexicographically
/// within each size, and returns the first independent dominating set found.
/// Exponential; intended for cross-checking the solver on small graphs.
pub fn gamma_i_brute_force(g: &Graph) -> DominationResult {
    let n = g.vertex_count();
    assert!(n <= 25, "brute-force oracle is for small graphs");
    if is_independent_dominating(g, &[]) {
        return DominationResult { gamma_i: 0, witness: Vec::new() };
    }
    for size in 1..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        'subsets: loop {
            if is_independent_dominating(g, &subset) {
                return DominationResult { gamma_i: size, witness: subset };
            }
            // advance to the next lexicographic size-subset of 0..n
            let mut i = size;
            while i > 0 {
                i -= 1;
                if subset[i] < i + n - size {
                    subset[i] += 1;
                    for j in i + 1..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    continue 'subsets;
                }
            }
            break;
        }
    }
    unreachable!("every graph has an independent dominating set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn examples_on_cycles_and_stars() {
        assert!(is_independent_dominating(&graphs::cycle(5), &[0, 2]));
        assert!(!is_independent_dominating(&graphs::cycle(5), &[0, 1]));
        assert!(!is_independent_dominating(&graphs::cycle(5), &[0]));

        let star = graphs::star(4);
        let r = gamma_i(&star);
        assert_eq!(r.gamma_i, 1);
        assert_eq!(r.witness, vec![0]);
    }

    #[test]
    fn c5_needs_two_and_c10_needs_four() {
        // frozen from the brute-force oracle
        let c5 = graphs::cycle(5);
        assert_eq!(gamma_i_brute_force(&c5).gamma_i, 2);
        assert_eq!(gamma_i(&c5).gamma_i, 2);

        let c10 = graphs::cycle(10);
        assert_eq!(gamma_i_brute_force(&c10).gamma_i, 4);
        assert_eq!(gamma_i(&c10).gamma_i, 4);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let c5 = graphs::cycle(5);
        let r = gamma_i(&c5);
        assert_eq!(r.witness, vec![0, 2]);
        let c10 = graphs::cycle(10);
        assert_eq!(gamma_i(&c10).witness, gamma_i_brute_force(&c10).witness);
    }

    #[test]
    fn isolated_vertices_are_forced() {
        let g = Graph::build(4, &[(1, 2)]).unwrap();
        let r = gamma_i(&g);
        assert_eq!(r.gamma_i, 3);
        assert!(r.witness.contains(&0));
        assert!(r.witness.contains(&3));
    }

    #[test]
    fn additive_over_components() {
        let g = Graph::build(8, &[(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
        let r = gamma_i(&g);
        let parts: usize = g
            .components()
            .iter()
            .map(|c| gamma_i(&g.induced(c).0).gamma_i)
            .sum();
        assert_eq!(r.gamma_i, parts);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..120 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let fast = gamma_i(&g);
            let slow = gamma_i_brute_force(&g);
            assert_eq!(fast.gamma_i, slow.gamma_i, "value mismatch on {g:?}");
            assert_eq!(fast.witness, slow.witness, "witness mismatch on {g:?}");
            assert!(is_independent_dominating(&g, &fast.witness));
        }
    }
}
