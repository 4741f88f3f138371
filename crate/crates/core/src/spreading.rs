//! Spreading activation with per-hop attenuation.
//!
//! A step is synchronous: every node reads the frozen previous state. Node
//! `z` accumulates `held(x) * weight(x, z) * (1 - delta)` from each activated
//! neighbour `x` and keeps what it already held. A node is activated for the
//! next step when its held energy reaches the firing threshold and changed
//! during this step.

use crate::error::{Error, Result};
use crate::network::{NodeId, SemanticNetwork};

#[derive(Debug, Clone, PartialEq)]
pub struct ActivationState {
    pub t: usize,
    /// Energy received during the step that produced this state.
    pub incoming: Vec<f64>,
    pub held: Vec<f64>,
    pub activated: Vec<bool>,
}

impl ActivationState {
    pub fn zeros(n: usize) -> Self {
        ActivationState {
            t: 0,
            incoming: vec![0.0; n],
            held: vec![0.0; n],
            activated: vec![false; n],
        }
    }

    /// A state at t = 0 holding `held`, with nothing activated.
    pub fn from_held(held: Vec<f64>) -> Self {
        let n = held.len();
        ActivationState {
            t: 0,
            incoming: vec![0.0; n],
            held,
            activated: vec![false; n],
        }
    }

    pub fn len(&self) -> usize {
        self.held.len()
    }

    pub fn is_empty(&self) -> bool {
        self.held.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.held.iter().sum()
    }

    pub fn held_of(&self, net: &SemanticNetwork, id: NodeId) -> Result<f64> {
        Ok(self.held[net.index_of(id)?])
    }

    pub fn activated_ids(&self, net: &SemanticNetwork) -> Vec<NodeId> {
        self.activated
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| net.id_of(i))
            .collect()
    }

    /// Checks the state against `net`: matching size, finite non-negative
    /// energies.
    pub fn validate(&self, net: &SemanticNetwork) -> Result<()> {
        let n = net.len();
        for len in [self.held.len(), self.incoming.len(), self.activated.len()] {
            if len != n {
                return Err(Error::StateMismatch { expected: n, got: len });
            }
        }
        let bad = self
            .held
            .iter()
            .chain(&self.incoming)
            .find(|v| !v.is_finite() || **v < 0.0);
        match bad {
            Some(v) => Err(Error::InvalidState(format!("energy {v} is not a finite value >= 0"))),
            None => Ok(()),
        }
    }

    /// Copy with held energies scaled so they sum to `budget`.
    pub fn rescaled(&self, budget: f64) -> Result<Self> {
        let total = self.total();
        if !(total > 0.0) {
            return Err(Error::InvalidState("state carries no energy".into()));
        }
        let mut out = self.clone();
        rescale_in_place(&mut out.held, budget);
        Ok(out)
    }
}

pub(crate) fn rescale_in_place(values: &mut [f64], budget: f64) {
    let total: f64 = values.iter().sum();
    if total > 0.0 {
        let factor = budget / total;
        for v in values {
            *v *= factor;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadParams {
    /// Attenuation factor in [0, 1].
    pub delta: f64,
    /// Minimum held energy for a node to fire.
    pub fire_threshold: f64,
    pub max_steps: usize,
    /// Fixed total activation energy.
    pub budget: f64,
}

pub const DEFAULT_DELTA: f64 = 0.2;
pub const DEFAULT_MAX_STEPS: usize = 20;
pub const DEFAULT_BUDGET: f64 = 100.0;

impl SpreadParams {
    pub fn new(budget: f64) -> Self {
        SpreadParams {
            delta: DEFAULT_DELTA,
            fire_threshold: 1e-6 * budget,
            max_steps: DEFAULT_MAX_STEPS,
            budget,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.delta) {
            return Err(Error::param("delta", format!("{} outside [0, 1]", self.delta)));
        }
        if !self.fire_threshold.is_finite() || self.fire_threshold < 0.0 {
            return Err(Error::param("fire_threshold", "must be >= 0"));
        }
        if self.max_steps == 0 {
            return Err(Error::param("max_steps", "must be positive"));
        }
        if !self.budget.is_finite() || self.budget <= 0.0 {
            return Err(Error::param("budget", "must be > 0"));
        }
        Ok(())
    }
}

impl Default for SpreadParams {
    fn default() -> Self {
        SpreadParams::new(DEFAULT_BUDGET)
    }
}

/// Energy delivered across one edge: `o_x * weight * (1 - delta)`.
#[inline]
pub fn edge_spread(o_x: f64, weight: f64, delta: f64) -> f64 {
    o_x * weight * (1.0 - delta)
}

/// One synchronous spreading step.
///
/// # Panics
/// If `state` does not cover exactly the nodes of `net`.
pub fn step(net: &SemanticNetwork, state: &ActivationState, params: &SpreadParams) -> ActivationState {
    let n = net.len();
    assert_eq!(state.len(), n, "state does not match network");
    let mut incoming = vec![0.0; n];
    for (z, slot) in incoming.iter_mut().enumerate() {
        for &(x, w) in net.neighbors(z) {
            if state.activated[x] {
                *slot += edge_spread(state.held[x], w, params.delta);
            }
        }
    }
    let held: Vec<f64> = state.held.iter().zip(&incoming).map(|(o, i)| o + i).collect();
    let activated = held
        .iter()
        .zip(&state.held)
        .map(|(&new, &old)| new >= params.fire_threshold && new != old)
        .collect();
    ActivationState {
        t: state.t + 1,
        incoming,
        held,
        activated,
    }
}

/// Seeds `sources`, then steps until nothing fires or `max_steps` is reached.
pub fn run_spread(net: &SemanticNetwork, sources: &[(NodeId, f64)], params: &SpreadParams) -> Result<ActivationState> {
    let mut last = None;
    spread_with(net, sources, params, |s| last = Some(s.clone()))?;
    Ok(last.expect("spread visits at least the seeded state"))
}

/// Like [`run_spread`], returning every state from the seeded one (t = 0)
/// to the final one.
pub fn run_spread_trace(
    net: &SemanticNetwork,
    sources: &[(NodeId, f64)],
    params: &SpreadParams,
) -> Result<Vec<ActivationState>> {
    let mut states = Vec::new();
    spread_with(net, sources, params, |s| states.push(s.clone()))?;
    Ok(states)
}

fn spread_with(
    net: &SemanticNetwork,
    sources: &[(NodeId, f64)],
    params: &SpreadParams,
    mut visit: impl FnMut(&ActivationState),
) -> Result<()> {
    let mut state = seed(net, sources, params)?;
    visit(&state);
    while state.t < params.max_steps && state.activated.iter().any(|&a| a) {
        state = step(net, &state, params);
        visit(&state);
    }
    Ok(())
}

fn seed(net: &SemanticNetwork, sources: &[(NodeId, f64)], params: &SpreadParams) -> Result<ActivationState> {
    params.validate()?;
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    let mut state = ActivationState::zeros(net.len());
    let mut total = 0.0;
    for &(id, energy) in sources {
        let i = net.index_of(id)?;
        if !energy.is_finite() || energy < 0.0 {
            return Err(Error::param(
                "sources",
                format!("energy {energy} for node {id} must be >= 0"),
            ));
        }
        if state.activated[i] {
            return Err(Error::param("sources", format!("node {id} seeded twice")));
        }
        state.held[i] = energy;
        state.activated[i] = true;
        total += energy;
    }
    if total > params.budget * (1.0 + 1e-12) {
        return Err(Error::BudgetExceeded {
            total,
            budget: params.budget,
        });
    }
    Ok(state)
}

/// Attention share of node `id`: its incident weight mass over the network's
/// total weight, times its held energy.
pub fn attention(net: &SemanticNetwork, state: &ActivationState, id: NodeId) -> Result<f64> {
    let i = net.index_of(id)?;
    let total = net.total_weight_sum();
    if !(total > 0.0) {
        return Err(Error::EdgelessNetwork);
    }
    Ok(net.weight_mass(i) / total * state.held[i])
}

pub const DEFAULT_DECAY: f64 = 0.5;

/// Base-level activation from past use: `max(0, ln sum (now - t_j)^-decay)`
/// over entries strictly older than `now`. An empty history yields 0.
pub fn initial_activation(history: &[f64], now: f64, decay: f64) -> Result<f64> {
    if !decay.is_finite() || decay <= 0.0 {
        return Err(Error::param("decay", "must be > 0"));
    }
    if let Some(&t) = history.iter().find(|&&t| t > now) {
        return Err(Error::FutureTimestamp { timestamp: t, now });
    }
    let trace: f64 = history
        .iter()
        .map(|&t| now - t)
        .filter(|&age| age > 0.0)
        .map(|age| age.powf(-decay))
        .sum();
    if trace > 0.0 {
        Ok(trace.ln().max(0.0))
    } else {
        Ok(0.0)
    }
}

/// Sources derived from node histories: every node with positive
/// base-level activation at `now`.
pub fn history_sources(net: &SemanticNetwork, now: f64, decay: f64) -> Result<Vec<(NodeId, f64)>> {
    let mut sources = Vec::new();
    for node in net.nodes() {
        let energy = initial_activation(&node.history, now, decay)?;
        if energy > 0.0 {
            sources.push((node.id, energy));
        }
    }
    Ok(sources)
}
