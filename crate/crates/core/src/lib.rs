//! Semantic-network model of concept relatedness.
//!
//! Activation spreads over a weighted, undirected concept graph with per-hop
//! attenuation; an attention game then redistributes a fixed energy budget
//! until no node wants to change its allocation. Baseline models (a cobweb
//! allocator and spreading alone) and an evaluation harness scored by rank
//! correlation sit alongside.
//!
//! ```
//! use semnet::{run_spread, ConceptNode, NodeId, SemanticNetwork, SpreadParams, WeightedEdge};
//!
//! let net = SemanticNetwork::new(
//!     vec![ConceptNode::new(0, "cat"), ConceptNode::new(1, "dog")],
//!     vec![WeightedEdge::new(0, 1, 0.5)],
//! )
//! .unwrap();
//! let params = SpreadParams { delta: 0.0, max_steps: 1, ..SpreadParams::new(1.0) };
//! let state = run_spread(&net, &[(NodeId(0), 1.0)], &params).unwrap();
//! assert_eq!(state.held, vec![1.0, 0.5]);
//! ```

pub mod baselines;
pub mod error;
pub mod eval;
pub mod experiments;
pub mod game;
pub mod generate;
pub mod network;
pub mod pairs;
pub mod spreading;
pub mod trace;

pub use baselines::{cobweb_step, run_cobweb, run_traditional, CobwebParams, CobwebResult, CobwebState};
pub use error::{Error, Result};
pub use eval::{
    cycles_to_equilibrium, evaluate_pairs, load_balance, relatedness, spearman, utilization, Cycles, EvalReport,
    Spearman,
};
pub use game::{
    best_response_round, cost, gain, rank_nodes, run_game, screen, utility, verify_nash, GameOutcome, GameParams,
    Strategy,
};
pub use generate::generate_network;
pub use network::{load_network, save_network, ConceptNode, NodeId, SemanticNetwork, WeightedEdge};
pub use pairs::{load_pairs, PairJudgment, Scale};
pub use spreading::{attention, edge_spread, initial_activation, run_spread, step, ActivationState, SpreadParams};
