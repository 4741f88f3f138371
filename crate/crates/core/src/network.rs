//! Weighted, undirected concept graphs and their JSON file format.
//!
//! Nodes are kept sorted by id, so a node's index doubles as its rank in id
//! order. Activation states and other per-node vectors are indexed the same
//! way.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for NodeId {
    fn from(id: u32) -> Self {
        NodeId(id)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConceptNode {
    pub id: NodeId,
    pub label: String,
    /// Activation-energy threshold used when screening game participants.
    pub threshold: f64,
    /// Past activation timestamps, ascending.
    pub history: Vec<f64>,
}

impl ConceptNode {
    pub fn new(id: impl Into<NodeId>, label: impl Into<String>) -> Self {
        ConceptNode {
            id: id.into(),
            label: label.into(),
            threshold: 0.0,
            history: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedEdge {
    pub a: NodeId,
    pub b: NodeId,
    pub weight: f64,
}

impl WeightedEdge {
    pub fn new(a: impl Into<NodeId>, b: impl Into<NodeId>, weight: f64) -> Self {
        WeightedEdge {
            a: a.into(),
            b: b.into(),
            weight,
        }
    }
}

/// Validated semantic network. Immutable once built.
#[derive(Debug, Clone)]
pub struct SemanticNetwork {
    nodes: Vec<ConceptNode>,
    edges: Vec<WeightedEdge>,
    /// Neighbour lists back to back; node `i` owns
    /// `adjacency[offsets[i]..offsets[i + 1]]`.
    offsets: Vec<usize>,
    adjacency: Vec<(usize, f64)>,
}

impl PartialEq for SemanticNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.edges == other.edges
    }
}

impl SemanticNetwork {
    /// Builds a network, checking every node and edge invariant. Errors name
    /// the offending element by its position in the input lists.
    pub fn new(mut nodes: Vec<ConceptNode>, edges: Vec<WeightedEdge>) -> Result<Self> {
        for (pos, node) in nodes.iter().enumerate() {
            validate_node(node, pos)?;
        }
        if !nodes.windows(2).all(|w| w[0].id < w[1].id) {
            let mut order: Vec<(NodeId, usize)> = nodes.iter().enumerate().map(|(p, n)| (n.id, p)).collect();
            order.sort_unstable();
            // Report the earliest position at which an id repeats.
            let repeat = order.windows(2).filter(|w| w[0].0 == w[1].0).map(|w| w[1].1).min();
            if let Some(pos) = repeat {
                return Err(Error::DuplicateNode {
                    context: format!("nodes[{pos}]"),
                    id: nodes[pos].id,
                });
            }
            nodes.sort_by_key(|n| n.id);
        }

        let locate = |id: NodeId| nodes.binary_search_by_key(&id, |n| n.id).ok();
        // (from, to, position in `edges`, weight), both directions.
        let mut links = Vec::with_capacity(2 * edges.len());
        for (pos, edge) in edges.iter().enumerate() {
            let context = || format!("edges[{pos}]");
            if edge.a == edge.b {
                return Err(Error::SelfLoop {
                    context: context(),
                    id: edge.a,
                });
            }
            if !edge.weight.is_finite() || !(0.0..=1.0).contains(&edge.weight) {
                return Err(Error::WeightOutOfRange {
                    context: context(),
                    weight: edge.weight,
                });
            }
            let endpoint = |id| locate(id).ok_or_else(|| Error::DanglingEndpoint { context: context(), id });
            let ia = endpoint(edge.a)?;
            let ib = endpoint(edge.b)?;
            links.push((ia, ib, pos, edge.weight));
            links.push((ib, ia, pos, edge.weight));
        }
        links.sort_unstable_by_key(|&(i, j, pos, _)| (i, j, pos));
        let repeat = links
            .windows(2)
            .filter(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
            .map(|w| w[1].2)
            .min();
        if let Some(pos) = repeat {
            return Err(Error::DuplicateEdge {
                context: format!("edges[{pos}]"),
                a: edges[pos].a,
                b: edges[pos].b,
            });
        }
        let mut offsets = vec![0; nodes.len() + 1];
        for &(i, ..) in &links {
            offsets[i + 1] += 1;
        }
        for i in 0..nodes.len() {
            offsets[i + 1] += offsets[i];
        }
        let adjacency = links.into_iter().map(|(_, j, _, w)| (j, w)).collect();

        Ok(SemanticNetwork {
            nodes,
            edges,
            offsets,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes in ascending id order.
    pub fn nodes(&self) -> &[ConceptNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn node(&self, index: usize) -> &ConceptNode {
        &self.nodes[index]
    }

    pub fn id_of(&self, index: usize) -> NodeId {
        self.nodes[index].id
    }

    pub fn index_of(&self, id: NodeId) -> Result<usize> {
        self.nodes
            .binary_search_by_key(&id, |n| n.id)
            .map_err(|_| Error::UnknownNode(id))
    }

    pub fn index_by_label(&self, label: &str) -> Result<usize> {
        let mut found = self.nodes.iter().enumerate().filter(|(_, n)| n.label == label);
        match (found.next(), found.next()) {
            (Some((i, _)), None) => Ok(i),
            (Some(_), Some(_)) => Err(Error::AmbiguousLabel(label.to_string())),
            (None, _) => Err(Error::UnknownLabel(label.to_string())),
        }
    }

    /// Neighbours of the node at `index` as `(neighbour index, weight)`,
    /// ascending by neighbour index.
    pub fn neighbors(&self, index: usize) -> &[(usize, f64)] {
        &self.adjacency[self.offsets[index]..self.offsets[index + 1]]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.offsets[index + 1] - self.offsets[index]
    }

    /// Sum of weights on edges incident to the node at `index`.
    pub fn weight_mass(&self, index: usize) -> f64 {
        self.neighbors(index).iter().map(|&(_, w)| w).sum()
    }

    pub fn neighbor_weight_sum(&self, id: NodeId) -> Result<f64> {
        self.index_of(id).map(|i| self.weight_mass(i))
    }

    /// Sum of all edge weights, each unordered edge counted once.
    pub fn total_weight_sum(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: NetworkFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        file.into_network()
    }

    pub fn to_json_string(&self) -> String {
        let file = NetworkFile::from(self);
        serde_json::to_string_pretty(&file).expect("network serialization cannot fail")
    }
}

fn validate_node(node: &ConceptNode, pos: usize) -> Result<()> {
    let invalid = |message: String| Error::InvalidNode {
        context: format!("nodes[{pos}]"),
        message,
    };
    if node.label.is_empty() {
        return Err(invalid("empty label".into()));
    }
    if !node.threshold.is_finite() || node.threshold < 0.0 {
        return Err(invalid(format!("threshold {} must be >= 0", node.threshold)));
    }
    if let Some(t) = node.history.iter().find(|t| !t.is_finite() || **t < 0.0) {
        return Err(invalid(format!("history timestamp {t} must be >= 0")));
    }
    if node.history.windows(2).any(|w| w[1] < w[0]) {
        return Err(invalid("history timestamps not ascending".into()));
    }
    Ok(())
}

pub fn load_network(path: impl AsRef<Path>) -> Result<SemanticNetwork> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    SemanticNetwork::from_json_str(&text)
}

pub fn save_network(net: &SemanticNetwork, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, net.to_json_string()).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkFile {
    nodes: Vec<NodeRecord>,
    #[serde(default)]
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeRecord {
    id: NodeId,
    label: String,
    #[serde(default)]
    threshold: f64,
    #[serde(default)]
    history: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    a: NodeId,
    b: NodeId,
    w: f64,
}

impl NetworkFile {
    fn into_network(self) -> Result<SemanticNetwork> {
        let nodes = self
            .nodes
            .into_iter()
            .map(|n| ConceptNode {
                id: n.id,
                label: n.label,
                threshold: n.threshold,
                history: n.history,
            })
            .collect();
        let edges = self
            .edges
            .into_iter()
            .map(|e| WeightedEdge::new(e.a, e.b, e.w))
            .collect();
        SemanticNetwork::new(nodes, edges)
    }
}

impl From<&SemanticNetwork> for NetworkFile {
    fn from(net: &SemanticNetwork) -> Self {
        NetworkFile {
            nodes: net
                .nodes
                .iter()
                .map(|n| NodeRecord {
                    id: n.id,
                    label: n.label.clone(),
                    threshold: n.threshold,
                    history: n.history.clone(),
                })
                .collect(),
            edges: net
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    a: e.a,
                    b: e.b,
                    w: e.weight,
                })
                .collect(),
        }
    }
}
