//! Seeded synthetic networks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::{ConceptNode, SemanticNetwork, WeightedEdge};

/// Random connected network on `n` nodes labelled `n0, n1, ...`.
///
/// A random spanning tree comes first (each node in a shuffled order attaches
/// to an earlier one), then every remaining pair gets an edge with
/// probability `edge_prob`. Weights are uniform in (0, 1].
pub fn generate_network(n: usize, edge_prob: f64, seed: u64) -> Result<SemanticNetwork> {
    if n < 2 {
        return Err(Error::param("nodes", "need at least 2 nodes"));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::param("edge_prob", format!("{edge_prob} outside (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(&mut rng);

    let mut adjacent = vec![false; n * n];
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.random_range(0..k)];
        let (a, b) = (order[k].min(parent), order[k].max(parent));
        adjacent[a as usize * n + b as usize] = true;
        edges.push(WeightedEdge::new(a, b, 1.0 - rng.random::<f64>()));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !adjacent[a * n + b] && rng.random::<f64>() < edge_prob {
                edges.push(WeightedEdge::new(a as u32, b as u32, 1.0 - rng.random::<f64>()));
            }
        }
    }
    let nodes = (0..n as u32).map(|i| ConceptNode::new(i, format!("n{i}"))).collect();
    SemanticNetwork::new(nodes, edges)
}
