//! The eight five-vertex experiment graphs.
//!
//! Edge lists are transcribed from the published drawings of the experiment
//! graphs (vertices labelled 0-4). They are not fetched from the graph
//! atlas; use [`crate::graph6::parse_graph6`] to load dataset files.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Experiment ids, in the order they are reported.
pub const FIXTURE_IDS: [u32; 8] = [1, 2, 3, 7, 13, 18, 23, 33];

/// Vertex count shared by all fixtures.
pub const FIXTURE_VERTICES: usize = 5;

const EXP_1: &[(usize, usize)] = &[(0, 4)];
const EXP_2: &[(usize, usize)] = &[(0, 4), (1, 4)];
const EXP_3: &[(usize, usize)] = &[(0, 4), (1, 4), (2, 4)];
const EXP_7: &[(usize, usize)] = &[(0, 3), (0, 4), (3, 4)];
const EXP_13: &[(usize, usize)] = &[(0, 3), (0, 4), (1, 3), (1, 4)];
const EXP_18: &[(usize, usize)] = &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
const EXP_23: &[(usize, usize)] = &[(0, 2), (0, 3), (0, 4), (2, 3), (2, 4), (3, 4)];
const EXP_33: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Raw edge list of a fixture.
pub fn fixture_edges(id: u32) -> Option<&'static [(usize, usize)]> {
    Some(match id {
        1 => EXP_1,
        2 => EXP_2,
        3 => EXP_3,
        7 => EXP_7,
        13 => EXP_13,
        18 => EXP_18,
        23 => EXP_23,
        33 => EXP_33,
        _ => return None,
    })
}

/// The five-vertex graph of experiment `id`.
pub fn fixture_graph(id: u32) -> Result<Graph> {
    let edges = fixture_edges(id).ok_or(Error::UnknownFixture(id))?;
    Graph::new(FIXTURE_VERTICES, edges.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts() {
        let counts: alloc::vec::Vec<usize> = FIXTURE_IDS
            .iter()
            .map(|&id| fixture_graph(id).unwrap().edge_count())
            .collect();
        assert_eq!(counts, [1, 2, 3, 3, 4, 7, 6, 10]);
    }

    #[test]
    fn four_cycle_with_isolated_vertex() {
        let g = fixture_graph(13).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (0, 4), (1, 3), (1, 4)]);
        assert!(g.neighbours()[2].is_empty());
    }

    #[test]
    fn unknown_id() {
        assert_eq!(fixture_graph(4), Err(Error::UnknownFixture(4)));
    }
}
