use alloc::vec::Vec;

use proptest::prelude::*;

use crate::graph::Graph;

/// Random simple graphs on `1..=max_n` vertices.
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|k| (0..k).map(move |j| (j, k))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(mask)
                .filter_map(|(&e, keep)| keep.then_some(e));
            Graph::new(n, edges).unwrap()
        })
    })
}
