#![allow(dead_code)]

use proptest::prelude::*;
use semnet::{ConceptNode, SemanticNetwork, WeightedEdge};

pub fn build(n: usize, edges: &[(usize, usize, f64)]) -> SemanticNetwork {
    SemanticNetwork::new(
        (0..n as u32).map(|i| ConceptNode::new(i, format!("t{i}"))).collect(),
        edges
            .iter()
            .map(|&(a, b, w)| WeightedEdge::new(a as u32, b as u32, w))
            .collect(),
    )
    .unwrap()
}

/// Edge list over `n` nodes: each pair linked with probability ~1/2,
/// weights drawn from `weights`.
pub fn edge_lists(
    n: usize,
    weights: impl Strategy<Value = f64> + Clone,
) -> impl Strategy<Value = Vec<(usize, usize, f64)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    proptest::collection::vec(proptest::option::of(weights), pairs.len()).prop_map(move |choice| {
        pairs
            .iter()
            .zip(choice)
            .filter_map(|(&(a, b), w)| w.map(|w| (a, b, w)))
            .collect()
    })
}

/// Random network with 2..=max_n nodes and weights in [0, 1].
pub fn networks(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize, f64)>)> {
    (2..=max_n).prop_flat_map(|n| (Just(n), edge_lists(n, 0.0..=1.0f64)))
}

/// Connected network: a path through all nodes plus random extra edges.
pub fn connected_networks(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize, f64)>)> {
    networks(max_n).prop_flat_map(|(n, edges)| {
        proptest::collection::vec(0.05..=1.0f64, n - 1).prop_map(move |path| {
            let mut edges = edges.clone();
            for (k, w) in path.into_iter().enumerate() {
                if !edges.iter().any(|&(a, b, _)| a == k && b == k + 1) {
                    edges.push((k, k + 1, w));
                }
            }
            (n, edges)
        })
    })
}

pub fn reachable(net: &SemanticNetwork, from: usize) -> Vec<bool> {
    let mut seen = vec![false; net.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(x) = stack.pop() {
        for &(y, _) in net.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}
