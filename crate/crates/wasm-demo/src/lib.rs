//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function returns JSON for the page to draw. The plain
//! functions behind them are usable (and tested) natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use semnet::experiments::{allocation_start, complete_network};
use semnet::spreading::run_spread_trace;
use semnet::{
    generate_network, load_balance, run_cobweb, run_game, ActivationState, CobwebParams, GameParams, NodeId,
    SemanticNetwork, SpreadParams,
};

const BUDGET: f64 = 100.0;

#[derive(Debug, Serialize)]
pub struct Graph {
    pub labels: Vec<String>,
    /// (a, b, weight) by node index.
    pub edges: Vec<(usize, usize, f64)>,
}

impl Graph {
    fn of(net: &SemanticNetwork) -> Self {
        Graph {
            labels: net.nodes().iter().map(|n| n.label.clone()).collect(),
            edges: net
                .edges()
                .iter()
                .map(|e| (net.index_of(e.a).unwrap(), net.index_of(e.b).unwrap(), e.weight))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpreadView {
    pub graph: Graph,
    /// Held energy per node, one frame per step.
    pub frames: Vec<Vec<f64>>,
}

/// Spreads the budget from node 0 of a seeded random network.
pub fn spread_view(
    nodes: usize,
    edge_prob: f64,
    seed: u64,
    delta: f64,
    max_steps: usize,
) -> semnet::Result<SpreadView> {
    let net = generate_network(nodes, edge_prob, seed)?;
    let sp = SpreadParams {
        delta,
        max_steps,
        ..SpreadParams::new(BUDGET)
    };
    let states = run_spread_trace(&net, &[(NodeId(0), BUDGET)], &sp)?;
    Ok(SpreadView {
        graph: Graph::of(&net),
        frames: states.into_iter().map(|s| s.held).collect(),
    })
}

#[derive(Debug, Serialize)]
pub struct GameView {
    pub graph: Graph,
    /// Round 0 is the rescaled spread; then one frame per round.
    pub frames: Vec<Vec<f64>>,
    /// Per round, per node: "accept", "reject" or null.
    pub strategies: Vec<Vec<Option<semnet::Strategy>>>,
    pub round_costs: Vec<f64>,
    pub converged: bool,
    pub stddev_before: f64,
    pub stddev_after: f64,
}

/// Spreads from node 0, then lets the nodes play the attention game.
pub fn game_view(nodes: usize, edge_prob: f64, seed: u64, delta: f64) -> semnet::Result<GameView> {
    let net = generate_network(nodes, edge_prob, seed)?;
    let sp = SpreadParams {
        delta,
        ..SpreadParams::new(BUDGET)
    };
    let gp = GameParams {
        delta,
        ..GameParams::new(BUDGET)
    };
    let start = semnet::run_spread(&net, &[(NodeId(0), BUDGET)], &sp)?.rescaled(BUDGET)?;
    let outcome = run_game(&net, &start, &gp)?;
    let mut frames = vec![start.held.clone()];
    frames.extend(outcome.history.iter().map(|r| r.held.clone()));
    Ok(GameView {
        graph: Graph::of(&net),
        strategies: outcome.history.iter().map(|r| r.profile.clone()).collect(),
        round_costs: outcome.round_costs.clone(),
        converged: outcome.converged,
        stddev_before: load_balance(&start)?,
        stddev_after: load_balance(&outcome.final_state)?,
        frames,
    })
}

#[derive(Debug, Serialize)]
pub struct AllocationView {
    pub demand: f64,
    pub budget: f64,
    pub stability: f64,
    /// Game allocations per round, round 0 being the shared start.
    pub game: Vec<Vec<f64>>,
    /// Cobweb allocations per iteration.
    pub cobweb: Vec<Vec<f64>>,
    pub game_converged: bool,
    pub cobweb_converged: bool,
}

/// Six nodes each demanding 20 units: the game on the complete graph
/// against a cobweb allocator with the given rate and slopes.
pub fn allocation_view(
    seed: u64,
    budget: f64,
    r: f64,
    demand_slope: f64,
    supply_slope: f64,
) -> semnet::Result<AllocationView> {
    const NODES: usize = 6;
    const DEMAND: f64 = 20.0;
    let start = allocation_start(seed, NODES, budget);
    let outcome = run_game(
        &complete_network(NODES as u32),
        &ActivationState::from_held(start.clone()),
        &GameParams::new(budget),
    )?;
    let mut game = vec![start.clone()];
    game.extend(outcome.history.iter().map(|r| r.held.clone()));

    let params = CobwebParams::centered(r, demand_slope, supply_slope, DEMAND);
    let nodes: Vec<(f64, f64)> = start.iter().map(|&o| (o, DEMAND)).collect();
    let result = run_cobweb(&nodes, &params, budget)?;
    let mut cobweb = vec![start];
    for chunk in result.trace.chunks(NODES) {
        cobweb.push(chunk.iter().map(|row| row.allocated).collect());
    }
    Ok(AllocationView {
        demand: DEMAND,
        budget,
        stability: params.stability(),
        game,
        cobweb,
        game_converged: outcome.converged,
        cobweb_converged: result.converged,
    })
}

fn to_js<T: Serialize>(value: semnet::Result<T>) -> Result<String, JsValue> {
    let value = value.map_err(|e| JsValue::from_str(&e.to_string()))?;
    serde_json::to_string(&value).map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn spread(nodes: usize, edge_prob: f64, seed: u64, delta: f64, max_steps: usize) -> Result<String, JsValue> {
    to_js(spread_view(nodes, edge_prob, seed, delta, max_steps))
}

#[wasm_bindgen]
pub fn game(nodes: usize, edge_prob: f64, seed: u64, delta: f64) -> Result<String, JsValue> {
    to_js(game_view(nodes, edge_prob, seed, delta))
}

#[wasm_bindgen]
pub fn allocation(seed: u64, budget: f64, r: f64, demand_slope: f64, supply_slope: f64) -> Result<String, JsValue> {
    to_js(allocation_view(seed, budget, r, demand_slope, supply_slope))
}
