//! Undirected simple graphs, per-edge structure and an exhaustive Max-Cut oracle.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::MAX_ENUMERATION_VERTICES;

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are stored normalized as `(j, k)` with `j < k`, sorted and
/// deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either order;
    /// duplicates collapse. Self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self {
            n,
            edges: normalized,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(j, k)` with `j < k`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Whether `{a, b}` is an edge.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Per-vertex neighbour lists, each sorted ascending.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.n];
        for &(j, k) in &self.edges {
            adj[j].push(k);
            adj[k].push(j);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of edges crossing the bipartition encoded by `assignment`
    /// (bit `j` set means vertex `j` is in `V_1`).
    pub fn cut_value(&self, assignment: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(j, k)| ((assignment >> j) ^ (assignment >> k)) & 1 == 1)
            .count()
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = alloc::vec![false; self.n];
        for &p in perm {
            if p >= self.n || core::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        Self::new(self.n, self.edges.iter().map(|&(j, k)| (perm[j], perm[k])))
    }
}

/// Vertex degrees and, for every edge, the number of common neighbours of
/// its endpoints (triangles through the edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeStructure {
    /// `degrees[j]` is the degree of vertex `j`.
    pub degrees: Vec<usize>,
    /// `(edge, shared)` pairs in the graph's edge order.
    pub shared: Vec<((usize, usize), usize)>,
}

impl EdgeStructure {
    /// Common-neighbour count of edge `{a, b}`, if it is an edge.
    pub fn shared_for(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.shared
            .binary_search_by(|(e, _)| e.cmp(&key))
            .ok()
            .map(|i| self.shared[i].1)
    }
}

/// Degrees and shared-neighbour counts of `g`.
pub fn edge_structure(g: &Graph) -> EdgeStructure {
    let adj = g.neighbours();
    let degrees = adj.iter().map(Vec::len).collect();
    let shared = g
        .edges()
        .iter()
        .map(|&(j, k)| ((j, k), sorted_intersection_len(&adj[j], &adj[k])))
        .collect();
    EdgeStructure { degrees, shared }
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Maximum cut and every assignment attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    /// Size of the maximum cut.
    pub best_value: usize,
    /// All optimal assignments as bit masks (bit `j` = `x_j`), ascending.
    /// Complements of optima are optima too, so both members of each pair
    /// appear.
    pub best_assignments: Vec<u64>,
}

pub(crate) fn check_enumerable(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Capacity {
            what,
            size: n,
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(())
}

/// Exhaustive Max-Cut over all `2^n` assignments.
pub fn brute_force_maxcut(g: &Graph) -> Result<CutResult> {
    check_enumerable("brute-force max-cut", g.vertex_count())?;
    let mut best_value = 0;
    let mut best_assignments = Vec::new();
    for x in 0..(1u64 << g.vertex_count()) {
        let value = g.cut_value(x);
        if value > best_value {
            best_value = value;
            best_assignments.clear();
        }
        if value == best_value {
            best_assignments.push(x);
        }
    }
    Ok(CutResult {
        best_value,
        best_assignments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture_graph, FIXTURE_IDS};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn triangles_by_enumeration(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    #[test]
    fn rejects_self_loops_and_out_of_range() {
        assert!(matches!(
            Graph::new(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn structure_of_single_edge() {
        let s = edge_structure(&fixture_graph(1).unwrap());
        assert_eq!(s.degrees, [1, 0, 0, 0, 1]);
        assert_eq!(s.shared_for(0, 4), Some(0));
    }

    #[test]
    fn structure_of_complete_graph() {
        let g = fixture_graph(33).unwrap();
        let s = edge_structure(&g);
        assert!(s.degrees.iter().all(|&d| d == 4));
        assert!(s.shared.iter().all(|&(_, f)| f == 3));
        assert_eq!(triangles_by_enumeration(&g), 10);
    }

    #[test]
    fn structure_of_triangle_fixture() {
        let s = edge_structure(&fixture_graph(7).unwrap());
        assert_eq!(s.degrees, [2, 0, 0, 2, 2]);
        for e in [(0, 3), (0, 4), (3, 4)] {
            assert_eq!(s.shared_for(e.0, e.1), Some(1));
        }
        assert_eq!(s.shared_for(1, 2), None);
    }

    #[test]
    fn maxcut_on_fixtures() {
        let r = brute_force_maxcut(&fixture_graph(1).unwrap()).unwrap();
        assert_eq!(r.best_value, 1);

        let r = brute_force_maxcut(&fixture_graph(33).unwrap()).unwrap();
        assert_eq!(r.best_value, 6); // floor(25 / 4)

        let r = brute_force_maxcut(&fixture_graph(13).unwrap()).unwrap();
        assert_eq!(r.best_value, 4);
        // {0,1} on one side, {3,4} on the other; vertex 2 is free.
        assert!(r.best_assignments.contains(&0b00011));
        assert!(r.best_assignments.contains(&0b11000));
        assert!(r.best_assignments.contains(&0b00111));
        assert_eq!(r.best_assignments.len(), 4);
    }

    #[test]
    fn maxcut_capacity_guard() {
        let g = Graph::empty(MAX_ENUMERATION_VERTICES + 1).unwrap();
        assert!(matches!(
            brute_force_maxcut(&g),
            Err(Error::Capacity { size: 25, .. })
        ));
    }

    #[test]
    fn fixture_optima_bounded_by_edge_count() {
        for id in FIXTURE_IDS {
            let g = fixture_graph(id).unwrap();
            let r = brute_force_maxcut(&g).unwrap();
            assert!(r.best_value <= g.edge_count());
            for &x in &r.best_assignments {
                assert_eq!(g.cut_value(x), r.best_value);
            }
        }
    }

    proptest! {
        #[test]
        fn degree_and_triangle_sums(g in arb_graph(9)) {
            let s = edge_structure(&g);
            prop_assert_eq!(s.degrees.iter().sum::<usize>(), 2 * g.edge_count());
            let shared: usize = s.shared.iter().map(|&(_, f)| f).sum();
            prop_assert_eq!(shared, 3 * triangles_by_enumeration(&g));
            for &((j, k), f) in &s.shared {
                prop_assert!(f < s.degrees[j].min(s.degrees[k]));
            }
        }

        #[test]
        fn maxcut_invariant_under_relabeling(g in arb_graph(8), seed in any::<u64>()) {
            let n = g.vertex_count();
            let mut perm: Vec<usize> = (0..n).collect();
            // Fisher-Yates with a small LCG; the permutation only needs to vary.
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (state >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(
                brute_force_maxcut(&g).unwrap().best_value,
                brute_force_maxcut(&h).unwrap().best_value
            );
        }

        #[test]
        fn complement_of_optimum_is_optimal(g in arb_graph(8)) {
            let r = brute_force_maxcut(&g).unwrap();
            let all = (1u64 << g.vertex_count()) - 1;
            for &x in &r.best_assignments {
                prop_assert!(r.best_assignments.binary_search(&(x ^ all)).is_ok());
            }
        }
    }
}
