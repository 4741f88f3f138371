//! Comparison scenarios shared by the CLI and the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::baselines::{run_cobweb, run_traditional, CobwebParams};
use crate::error::Result;
use crate::eval::{cycles_to_equilibrium, load_balance, utilization};
use crate::game::{run_game, GameOutcome, GameParams};
use crate::generate::generate_network;
use crate::network::{ConceptNode, NodeId, SemanticNetwork, WeightedEdge};
use crate::spreading::{ActivationState, SpreadParams};

/// Two six-node clusters joined by a single weak bridge (node 5 to node 6).
/// Inside each cluster, pairs whose ids sum to a multiple of 3 are left
/// unlinked; the rest get weights stepping from 0.5 towards 0.95.
pub fn two_cluster_network() -> SemanticNetwork {
    let mut edges = Vec::new();
    let mut k = 0;
    for base in [0u32, 6] {
        for a in base..base + 6 {
            for b in a + 1..base + 6 {
                if (a + b) % 3 != 0 {
                    let w = 0.5 + 0.45 * k as f64 / 39.0;
                    edges.push(WeightedEdge::new(a, b, (w * 1000.0).round() / 1000.0));
                    k += 1;
                }
            }
        }
    }
    edges.push(WeightedEdge::new(5, 6, 0.1));
    let nodes = (0..12).map(|i| ConceptNode::new(i, format!("c{i}"))).collect();
    SemanticNetwork::new(nodes, edges).expect("valid by construction")
}

/// Complete graph on `n` nodes with unit weights.
pub fn complete_network(n: u32) -> SemanticNetwork {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push(WeightedEdge::new(a, b, 1.0));
        }
    }
    let nodes = (0..n).map(|i| ConceptNode::new(i, format!("k{i}"))).collect();
    SemanticNetwork::new(nodes, edges).expect("valid by construction")
}

/// Spreads from node 0 with the full budget and plays the game from the
/// spread state rescaled to the budget. Returns (traditional, game).
pub fn spread_then_game(
    net: &SemanticNetwork,
    sp: &SpreadParams,
    gp: &GameParams,
) -> Result<(ActivationState, GameOutcome)> {
    let traditional = run_traditional(net, &[(NodeId(0), sp.budget)], sp)?;
    let start = traditional.rescaled(gp.budget)?;
    let outcome = run_game(net, &start, gp)?;
    Ok((traditional, outcome))
}

#[derive(Debug, Clone, Serialize)]
pub struct LoadBalanceRow {
    pub seed: u64,
    pub snm_stddev: f64,
    pub traditional_stddev: f64,
    pub rounds: usize,
    pub converged: bool,
}

/// Game against spreading alone on a generated network; both final states
/// are measured at the same total energy.
pub fn load_balance_run(
    seed: u64,
    nodes: usize,
    edge_prob: f64,
    sp: &SpreadParams,
    gp: &GameParams,
) -> Result<LoadBalanceRow> {
    let net = generate_network(nodes, edge_prob, seed)?;
    let (traditional, outcome) = spread_then_game(&net, sp, gp)?;
    Ok(LoadBalanceRow {
        seed,
        snm_stddev: load_balance(&outcome.final_state)?,
        traditional_stddev: load_balance(&traditional.rescaled(gp.budget)?)?,
        rounds: outcome.rounds,
        converged: outcome.converged,
    })
}

/// Adjustment rates and slopes swept for the cobweb baseline.
pub const COBWEB_RATES: [f64; 3] = [0.2, 0.5, 0.9];
pub const COBWEB_SLOPES: [f64; 3] = [0.5, 1.0, 2.0];

/// Every (r, demand slope, supply slope) combination, centered on
/// `equilibrium`.
pub fn cobweb_grid(equilibrium: f64) -> Vec<CobwebParams> {
    let mut grid = Vec::new();
    for r in COBWEB_RATES {
        for d in COBWEB_SLOPES {
            for s in COBWEB_SLOPES {
                grid.push(CobwebParams::centered(r, d, s, equilibrium));
            }
        }
    }
    grid
}

/// Starting values for the allocation scenario: uniform in [5, 40], rescaled
/// to `budget`.
pub fn allocation_start(seed: u64, nodes: usize, budget: f64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<f64> = (0..nodes).map(|_| rng.random_range(5.0..=40.0)).collect();
    let total: f64 = values.iter().sum();
    for v in &mut values {
        *v *= budget / total;
    }
    values
}

/// Relative shortfall tolerated when asking whether a node's demand is met.
pub const DEMAND_TOLERANCE: f64 = 1e-2;

pub fn meets_demands(allocations: &[f64], demands: &[f64]) -> bool {
    allocations
        .iter()
        .zip(demands)
        .all(|(a, d)| *a >= d * (1.0 - DEMAND_TOLERANCE))
}

#[derive(Debug, Clone, Serialize)]
pub struct AllocationRow {
    pub seed: u64,
    pub budget: f64,
    pub r: f64,
    pub demand_slope: f64,
    pub supply_slope: f64,
    pub snm_utilization: f64,
    pub cobweb_utilization: f64,
    pub snm_cycles: usize,
    pub snm_converged: bool,
    pub cobweb_cycles: usize,
    pub cobweb_converged: bool,
    pub snm_meets_demand: bool,
    pub cobweb_meets_demand: bool,
}

/// Game on the complete graph against the cobweb allocator, every node
/// demanding `demand`, one row per cobweb setting.
pub fn allocation_runs(
    seed: u64,
    nodes: u32,
    demand: f64,
    budget: f64,
    delta: f64,
    grid: &[CobwebParams],
) -> Result<Vec<AllocationRow>> {
    let net = complete_network(nodes);
    let start = allocation_start(seed, nodes as usize, budget);
    let demands = vec![demand; nodes as usize];
    let gp = GameParams {
        delta,
        ..GameParams::new(budget)
    };
    let game = run_game(&net, &ActivationState::from_held(start.clone()), &gp)?;
    let snm_alloc = &game.final_state.held;
    let snm_cycles = cycles_to_equilibrium(&game);
    let snm_utilization = utilization(snm_alloc, &demands, budget)?;
    let snm_meets_demand = meets_demands(snm_alloc, &demands);

    let cobweb_nodes: Vec<(f64, f64)> = start.iter().map(|&o| (o, demand)).collect();
    let mut rows = Vec::with_capacity(grid.len());
    for params in grid {
        let cob = run_cobweb(&cobweb_nodes, params, budget)?;
        let cycles = cycles_to_equilibrium(&cob);
        rows.push(AllocationRow {
            seed,
            budget,
            r: params.r,
            demand_slope: params.demand_slope,
            supply_slope: params.supply_slope,
            snm_utilization,
            cobweb_utilization: utilization(&cob.allocations, &demands, budget)?,
            snm_cycles: snm_cycles.count,
            snm_converged: snm_cycles.converged,
            cobweb_cycles: cycles.count,
            cobweb_converged: cycles.converged,
            snm_meets_demand,
            cobweb_meets_demand: meets_demands(&cob.allocations, &demands),
        });
    }
    Ok(rows)
}
