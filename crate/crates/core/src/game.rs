//! Attention game: nodes above the screening threshold decide whether to
//! accept a proposed redistribution of activation energy.
//!
//! Each round:
//!
//! 1. Screen participants (held energy at or above the threshold).
//! 2. Propose new values. A participant `z` takes the spreading inflow from
//!    higher-valued participant neighbours (`edge_spread(O_x, w, delta)`)
//!    and divides the accumulated value by its incoming link mass
//!    `1 + sum w (1 - delta)`, so the proposal pulls `z` toward its stronger
//!    neighbours without creating energy.
//! 3. Play the stage game. Accepting earns the neighbourhood gain and pays
//!    the share of the RMS distribution change that the node's own move adds
//!    given everyone else's choices. Rejecting earns 0. The marginal RMS cost
//!    falls as more nodes accept, so the game has increasing differences, and
//!    best responses iterated from the all-Accept profile settle on its
//!    greatest pure equilibrium. Ties go to Reject.
//! 4. Commit accepted proposals and rescale everything back to the budget.
//!
//! Stage utilities are computed on budget shares (held / budget) so that
//! decisions do not depend on the energy unit. Round costs and the
//! convergence test use absolute energies.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{NodeId, SemanticNetwork};
use crate::spreading::{edge_spread, rescale_in_place, ActivationState, DEFAULT_BUDGET, DEFAULT_DELTA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Accept,
    Reject,
}

impl Strategy {
    pub fn flipped(self) -> Self {
        match self {
            Strategy::Accept => Strategy::Reject,
            Strategy::Reject => Strategy::Accept,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Accept => "accept",
            Strategy::Reject => "reject",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameParams {
    /// Convergence threshold on the per-round distribution change.
    pub epsilon: f64,
    pub max_rounds: usize,
    /// Uniform screening threshold. `None` screens each node by its own
    /// threshold.
    pub screen_threshold: Option<f64>,
    pub delta: f64,
    pub budget: f64,
}

pub const DEFAULT_MAX_ROUNDS: usize = 100;

impl GameParams {
    pub fn new(budget: f64) -> Self {
        GameParams {
            epsilon: 1e-3 * budget,
            max_rounds: DEFAULT_MAX_ROUNDS,
            screen_threshold: None,
            delta: DEFAULT_DELTA,
            budget,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::param("epsilon", "must be > 0"));
        }
        if self.max_rounds == 0 {
            return Err(Error::param("max_rounds", "must be >= 1"));
        }
        if let Some(t) = self.screen_threshold {
            if !t.is_finite() || t < 0.0 {
                return Err(Error::param("screen_threshold", "must be >= 0"));
            }
        }
        if !(0.0..=1.0).contains(&self.delta) {
            return Err(Error::param("delta", format!("{} outside [0, 1]", self.delta)));
        }
        if !self.budget.is_finite() || self.budget <= 0.0 {
            return Err(Error::param("budget", "must be > 0"));
        }
        Ok(())
    }
}

impl Default for GameParams {
    fn default() -> Self {
        GameParams::new(DEFAULT_BUDGET)
    }
}

/// Indices of nodes whose held energy is at least `threshold`.
pub fn screen(state: &ActivationState, threshold: f64) -> Vec<usize> {
    state
        .held
        .iter()
        .enumerate()
        .filter(|(_, &h)| h >= threshold)
        .map(|(i, _)| i)
        .collect()
}

/// Participants for a round: the uniform threshold when set, otherwise each
/// node's own threshold.
pub fn participants(net: &SemanticNetwork, state: &ActivationState, params: &GameParams) -> Vec<usize> {
    match params.screen_threshold {
        Some(t) => screen(state, t),
        None => (0..net.len())
            .filter(|&i| state.held[i] >= net.node(i).threshold)
            .collect(),
    }
}

/// Root-mean-square difference between the held values of two states.
pub fn cost(current: &ActivationState, proposal: &ActivationState) -> Result<f64> {
    rms_change(&current.held, &proposal.held)
}

fn rms_change(current: &[f64], proposal: &[f64]) -> Result<f64> {
    if current.len() != proposal.len() {
        return Err(Error::StateMismatch {
            expected: current.len(),
            got: proposal.len(),
        });
    }
    if current.is_empty() {
        return Ok(0.0);
    }
    let sum: f64 = current.iter().zip(proposal).map(|(o, i)| (i - o) * (i - o)).sum();
    Ok((sum / current.len() as f64).sqrt())
}

fn signed_pow(x: f64, exponent: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.signum() * x.abs().powf(exponent)
    }
}

/// Neighbourhood gain of node `i`: the signed `(1 - delta)` power of the
/// total change over its neighbours, divided by the neighbour count.
pub fn gain(
    net: &SemanticNetwork,
    i: NodeId,
    current: &ActivationState,
    proposal: &ActivationState,
    delta: f64,
) -> Result<f64> {
    let idx = net.index_of(i)?;
    for len in [current.len(), proposal.len()] {
        if len != net.len() {
            return Err(Error::StateMismatch {
                expected: net.len(),
                got: len,
            });
        }
    }
    gain_at(net, idx, &current.held, &proposal.held, delta).ok_or(Error::DegenerateNode(i))
}

fn gain_at(net: &SemanticNetwork, i: usize, current: &[f64], proposal: &[f64], delta: f64) -> Option<f64> {
    let neighbors = net.neighbors(i);
    if neighbors.is_empty() {
        return None;
    }
    let change: f64 = neighbors.iter().map(|&(x, _)| proposal[x] - current[x]).sum();
    Some(signed_pow(change, 1.0 - delta) / neighbors.len() as f64)
}

pub fn utility(gain: f64, cost: f64) -> f64 {
    gain - cost
}

/// Proposed values for one round. Non-participants keep their values.
pub fn propose(net: &SemanticNetwork, held: &[f64], is_participant: &[bool], delta: f64) -> Vec<f64> {
    (0..net.len())
        .map(|z| {
            if !is_participant[z] {
                return held[z];
            }
            let mut value = held[z];
            let mut mass = 1.0;
            for &(x, w) in net.neighbors(z) {
                if is_participant[x] && held[x] > held[z] {
                    value += edge_spread(held[x], w, delta);
                    mass += w * (1.0 - delta);
                }
            }
            value / mass
        })
        .collect()
}

/// One round's frozen decision problem.
#[derive(Debug, Clone)]
pub struct StageGame {
    n: usize,
    participants: Vec<usize>,
    /// Gain from accepting, `None` for nodes without neighbours.
    gains: Vec<Option<f64>>,
    /// Squared share change each node's acceptance would add.
    squared_change: Vec<f64>,
    proposal: Vec<f64>,
}

/// Per-node strategy, `None` for screened-out nodes.
pub type Profile = Vec<Option<Strategy>>;

impl StageGame {
    pub fn build(net: &SemanticNetwork, state: &ActivationState, params: &GameParams) -> Self {
        let n = net.len();
        let participants = participants(net, state, params);
        let mut is_participant = vec![false; n];
        for &i in &participants {
            is_participant[i] = true;
        }
        let proposal = propose(net, &state.held, &is_participant, params.delta);
        let current_share: Vec<f64> = state.held.iter().map(|h| h / params.budget).collect();
        let proposal_share: Vec<f64> = proposal.iter().map(|p| p / params.budget).collect();
        let gains = (0..n)
            .map(|i| {
                if is_participant[i] {
                    gain_at(net, i, &current_share, &proposal_share, params.delta)
                } else {
                    None
                }
            })
            .collect();
        let squared_change = current_share
            .iter()
            .zip(&proposal_share)
            .map(|(o, p)| (p - o) * (p - o))
            .collect();
        StageGame {
            n,
            participants,
            gains,
            squared_change,
            proposal,
        }
    }

    pub fn participants(&self) -> &[usize] {
        &self.participants
    }

    pub fn proposal(&self) -> &[f64] {
        &self.proposal
    }

    /// Whether node `i` can accept at all.
    pub fn can_accept(&self, i: usize) -> bool {
        self.gains[i].is_some()
    }

    /// Cost share attributable to `i` accepting while everyone else plays
    /// `profile`.
    pub fn marginal_cost(&self, i: usize, profile: &[Option<Strategy>]) -> f64 {
        let others: f64 = (0..self.n)
            .filter(|&j| j != i && profile[j] == Some(Strategy::Accept))
            .map(|j| self.squared_change[j])
            .sum();
        let n = self.n as f64;
        ((others + self.squared_change[i]) / n).sqrt() - (others / n).sqrt()
    }

    /// Utility of node `i` if it plays `choice` and everyone else keeps
    /// `profile`. `None` if `choice` is unavailable to `i`.
    pub fn utility_of(&self, i: usize, choice: Strategy, profile: &[Option<Strategy>]) -> Option<f64> {
        match choice {
            Strategy::Reject => Some(0.0),
            Strategy::Accept => self.gains[i].map(|g| utility(g, self.marginal_cost(i, profile))),
        }
    }

    pub fn best_response(&self, i: usize, profile: &[Option<Strategy>]) -> Strategy {
        match self.utility_of(i, Strategy::Accept, profile) {
            Some(u) if u > 0.0 => Strategy::Accept,
            _ => Strategy::Reject,
        }
    }

    /// Greatest pure equilibrium, reached by synchronous best responses from
    /// the all-Accept profile.
    pub fn equilibrium(&self) -> Profile {
        let mut profile: Profile = vec![None; self.n];
        for &i in &self.participants {
            profile[i] = Some(if self.can_accept(i) {
                Strategy::Accept
            } else {
                Strategy::Reject
            });
        }
        // Each sweep can only turn Accepts into Rejects.
        for _ in 0..=self.participants.len() {
            let next: Profile = (0..self.n)
                .map(|i| profile[i].map(|_| self.best_response(i, &profile)))
                .collect();
            if next == profile {
                break;
            }
            profile = next;
        }
        profile
    }

    pub fn is_nash(&self, profile: &[Option<Strategy>]) -> bool {
        self.participants.iter().all(|&i| {
            let Some(current) = profile[i] else {
                return false;
            };
            let here = self.utility_of(i, current, profile);
            let there = self.utility_of(i, current.flipped(), profile);
            match (here, there) {
                (Some(h), Some(t)) => h >= t,
                (Some(_), None) => true,
                (None, _) => false,
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct Round {
    pub state: ActivationState,
    pub profile: Profile,
    pub utilities: Vec<Option<f64>>,
}

/// Plays one round from `state`. With no participants the energies are left
/// unchanged and the profile is empty.
pub fn best_response_round(net: &SemanticNetwork, state: &ActivationState, params: &GameParams) -> Result<Round> {
    params.validate()?;
    state.validate(net)?;
    let stage = StageGame::build(net, state, params);
    if stage.participants().is_empty() {
        let mut next = state.clone();
        next.t += 1;
        next.incoming = vec![0.0; net.len()];
        next.activated = vec![false; net.len()];
        return Ok(Round {
            state: next,
            profile: vec![None; net.len()],
            utilities: vec![None; net.len()],
        });
    }
    let profile = stage.equilibrium();
    let utilities: Vec<Option<f64>> = (0..net.len())
        .map(|i| profile[i].and_then(|s| stage.utility_of(i, s, &profile)))
        .collect();

    let proposal = stage.proposal();
    let mut held = state.held.clone();
    let mut incoming = vec![0.0; net.len()];
    let mut activated = vec![false; net.len()];
    for i in 0..net.len() {
        if profile[i] == Some(Strategy::Accept) {
            incoming[i] = proposal[i];
            held[i] = proposal[i];
            activated[i] = true;
        }
    }
    rescale_in_place(&mut held, params.budget);
    Ok(Round {
        state: ActivationState {
            t: state.t + 1,
            incoming,
            held,
            activated,
        },
        profile,
        utilities,
    })
}

#[derive(Debug, Clone)]
pub struct RoundRecord {
    pub round: usize,
    pub held: Vec<f64>,
    pub profile: Profile,
    pub utilities: Vec<Option<f64>>,
    pub cost: f64,
}

#[derive(Debug, Clone)]
pub struct GameOutcome {
    pub final_state: ActivationState,
    pub strategies: BTreeMap<NodeId, Strategy>,
    pub utilities: BTreeMap<NodeId, f64>,
    pub rounds: usize,
    pub converged: bool,
    pub round_costs: Vec<f64>,
    /// State the last round started from.
    pub last_round_start: ActivationState,
    pub history: Vec<RoundRecord>,
}

/// Repeats rounds until the distribution change of a round drops below
/// `epsilon`, or `max_rounds` is spent.
pub fn run_game(net: &SemanticNetwork, initial: &ActivationState, params: &GameParams) -> Result<GameOutcome> {
    params.validate()?;
    initial.validate(net)?;
    let total = initial.total();
    if total > params.budget * (1.0 + 1e-9) {
        return Err(Error::BudgetExceeded {
            total,
            budget: params.budget,
        });
    }
    if !(total > 0.0) {
        return Err(Error::InvalidState("initial state carries no energy".into()));
    }

    let mut state = initial.clone();
    let mut history = Vec::new();
    let mut round_costs = Vec::new();
    let mut converged = false;
    let mut last_round_start = state.clone();
    let mut last_round = None;
    for r in 1..=params.max_rounds {
        let round = best_response_round(net, &state, params)?;
        let c = cost(&state, &round.state)?;
        round_costs.push(c);
        history.push(RoundRecord {
            round: r,
            held: round.state.held.clone(),
            profile: round.profile.clone(),
            utilities: round.utilities.clone(),
            cost: c,
        });
        last_round_start = std::mem::replace(&mut state, round.state.clone());
        last_round = Some(round);
        if c < params.epsilon {
            converged = true;
            break;
        }
    }
    let last = last_round.expect("max_rounds >= 1");
    let mut strategies = BTreeMap::new();
    let mut utilities = BTreeMap::new();
    for i in 0..net.len() {
        if let Some(s) = last.profile[i] {
            strategies.insert(net.id_of(i), s);
            utilities.insert(net.id_of(i), last.utilities[i].unwrap_or(0.0));
        }
    }
    Ok(GameOutcome {
        rounds: round_costs.len(),
        final_state: state,
        strategies,
        utilities,
        converged,
        round_costs,
        last_round_start,
        history,
    })
}

/// Checks that no participant of the outcome's last round gains strictly by
/// switching strategy alone.
pub fn verify_nash(net: &SemanticNetwork, outcome: &GameOutcome, params: &GameParams) -> bool {
    if outcome.last_round_start.validate(net).is_err() {
        return false;
    }
    let stage = StageGame::build(net, &outcome.last_round_start, params);
    let mut profile: Profile = vec![None; net.len()];
    for (&id, &s) in &outcome.strategies {
        match net.index_of(id) {
            Ok(i) => profile[i] = Some(s),
            Err(_) => return false,
        }
    }
    let keyed: Vec<usize> = (0..net.len()).filter(|&i| profile[i].is_some()).collect();
    keyed == stage.participants() && stage.is_nash(&profile)
}

/// Top `k` nodes by held energy, descending, ties by ascending id.
pub fn rank_nodes(net: &SemanticNetwork, state: &ActivationState, k: usize) -> Vec<(NodeId, f64)> {
    let mut order: Vec<usize> = (0..state.len()).collect();
    // Node index order is id order.
    order.sort_by(|&a, &b| state.held[b].total_cmp(&state.held[a]).then(a.cmp(&b)));
    order
        .into_iter()
        .take(k)
        .map(|i| (net.id_of(i), state.held[i]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{ConceptNode, WeightedEdge};

    fn net(n: u32, edges: &[(u32, u32, f64)]) -> SemanticNetwork {
        SemanticNetwork::new(
            (0..n).map(|i| ConceptNode::new(i, format!("g{i}"))).collect(),
            edges.iter().map(|&(a, b, w)| WeightedEdge::new(a, b, w)).collect(),
        )
        .unwrap()
    }

    fn held(values: &[f64]) -> ActivationState {
        ActivationState::from_held(values.to_vec())
    }

    #[test]
    fn screening_boundaries() {
        assert_eq!(screen(&held(&[5.0, 5.0, 5.0]), 1.0), vec![0, 1, 2]);
        assert!(screen(&held(&[0.0, 0.0]), 1.0).is_empty());
        assert_eq!(screen(&held(&[2.0, 0.5, 1.0]), 1.0), vec![0, 2]);
    }

    #[test]
    fn per_node_thresholds_screen_when_no_override() {
        let mut nodes: Vec<_> = (0..3).map(|i| ConceptNode::new(i, format!("p{i}"))).collect();
        nodes[1].threshold = 3.0;
        let g = SemanticNetwork::new(nodes, vec![]).unwrap();
        let state = held(&[1.0, 2.0, 0.0]);
        assert_eq!(participants(&g, &state, &GameParams::default()), vec![0, 2]);
        let uniform = GameParams {
            screen_threshold: Some(0.5),
            ..Default::default()
        };
        assert_eq!(participants(&g, &state, &uniform), vec![0, 1]);
    }

    #[test]
    fn cost_cases() {
        let a = held(&[1.0; 9]);
        assert_eq!(cost(&a, &a).unwrap(), 0.0);
        let mut b = a.clone();
        b.held[4] += 3.0;
        assert_eq!(cost(&a, &b).unwrap(), 1.0);
        assert_eq!(cost(&b, &a).unwrap(), 1.0);
        assert!(matches!(cost(&a, &held(&[1.0])), Err(Error::StateMismatch { .. })));
    }

    #[test]
    fn gain_cases() {
        let g = net(4, &[(0, 1, 0.5), (0, 2, 0.5), (0, 3, 0.5)]);
        let current = held(&[1.0, 1.0, 1.0, 1.0]);
        assert_eq!(gain(&g, NodeId(0), &current, &current, 0.3).unwrap(), 0.0);

        let two = net(3, &[(0, 1, 0.5), (0, 2, 0.5)]);
        let cur = held(&[0.0, 1.0, 1.0]);
        let prop = held(&[0.0, 1.25, 1.75]);
        assert_eq!(gain(&two, NodeId(0), &cur, &prop, 0.0).unwrap(), 0.5);

        // Delta 4 over three neighbours at delta = 0.5: 4^0.5 / 3.
        let prop3 = held(&[1.0, 2.0, 2.0, 3.0]);
        let base = held(&[1.0, 1.0, 1.0, 1.0]);
        let got = gain(&g, NodeId(0), &base, &prop3, 0.5).unwrap();
        assert!((got - 2.0 / 3.0).abs() < 1e-15);

        // Negative change keeps its sign.
        let down = gain(&g, NodeId(0), &prop3, &base, 0.5).unwrap();
        assert!((down + 2.0 / 3.0).abs() < 1e-15);

        let lonely = net(2, &[]);
        assert!(matches!(
            gain(&lonely, NodeId(1), &held(&[0.0, 0.0]), &held(&[0.0, 0.0]), 0.2),
            Err(Error::DegenerateNode(NodeId(1)))
        ));
    }

    #[test]
    fn utility_is_difference() {
        assert!((utility(0.5, 0.2) - 0.3).abs() < 1e-15);
        assert_eq!(utility(0.0, 0.0), 0.0);
        assert!((utility(-0.1, 0.4) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn proposal_pulls_toward_higher_neighbours() {
        let g = net(3, &[(0, 1, 1.0), (1, 2, 0.5)]);
        let everyone = [true, true, true];
        let p = propose(&g, &[4.0, 2.0, 1.0], &everyone, 0.0);
        // The maximum has no higher neighbour.
        assert_eq!(p[0], 4.0);
        assert_eq!(p[1], (2.0 + 4.0) / 2.0);
        assert_eq!(p[2], (1.0 + 0.5 * 2.0) / 1.5);
        // Screened-out senders do not pull.
        let p = propose(&g, &[4.0, 2.0, 1.0], &[false, true, true], 0.0);
        assert_eq!(p[0], 4.0);
        assert_eq!(p[1], 2.0);
    }

    #[test]
    fn single_node_rejects() {
        let g = net(1, &[]);
        let state = held(&[100.0]);
        let round = best_response_round(&g, &state, &GameParams::default()).unwrap();
        assert_eq!(round.profile, vec![Some(Strategy::Reject)]);
        assert_eq!(round.state.held, vec![100.0]);
    }

    #[test]
    fn empty_participant_set_leaves_state() {
        let g = net(2, &[(0, 1, 1.0)]);
        let state = held(&[1.0, 2.0]);
        let params = GameParams {
            screen_threshold: Some(10.0),
            ..Default::default()
        };
        let round = best_response_round(&g, &state, &params).unwrap();
        assert!(round.profile.iter().all(Option::is_none));
        assert_eq!(round.state.held, state.held);
    }

    #[test]
    fn uniform_state_is_a_fixed_point() {
        let g = net(4, &[(0, 1, 0.5), (1, 2, 0.5), (2, 3, 0.5), (3, 0, 0.5)]);
        let state = held(&[25.0; 4]);
        let out = run_game(&g, &state, &GameParams::default()).unwrap();
        assert!(out.converged);
        assert_eq!(out.rounds, 1);
        assert_eq!(out.round_costs, vec![0.0]);
        assert!(verify_nash(&g, &out, &GameParams::default()));
    }

    #[test]
    fn run_game_rejects_bad_initial_states() {
        let g = net(2, &[(0, 1, 1.0)]);
        let p = GameParams::default();
        assert!(matches!(
            run_game(&g, &held(&[80.0, 30.0]), &p),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(run_game(&g, &held(&[0.0, 0.0]), &p).is_err());
        assert!(run_game(&g, &held(&[1.0]), &p).is_err());
    }

    #[test]
    fn flipped_strategy_breaks_equilibrium() {
        let g = net(4, &[(0, 1, 0.9), (1, 2, 0.6), (2, 3, 0.3), (0, 2, 0.2)]);
        let p = GameParams::default();
        let start = held(&[70.0, 20.0, 8.0, 2.0]);
        let stage = StageGame::build(&g, &start, &p);
        let eq = stage.equilibrium();
        assert!(stage.is_nash(&eq));
        // Find a node with a strict preference and flip it.
        let strict = (0..4)
            .find(|&i| {
                let a = stage.utility_of(i, Strategy::Accept, &eq).unwrap();
                a.abs() > 1e-9
            })
            .expect("some node has a strict preference");
        let mut bad = eq.clone();
        bad[strict] = bad[strict].map(Strategy::flipped);
        assert!(!stage.is_nash(&bad));
    }

    #[test]
    fn verify_nash_detects_tampered_outcome() {
        let g = net(4, &[(0, 1, 0.9), (1, 2, 0.6), (2, 3, 0.3), (0, 2, 0.2)]);
        let p = GameParams::default();
        let out = run_game(&g, &held(&[70.0, 20.0, 8.0, 2.0]), &p).unwrap();
        assert!(verify_nash(&g, &out, &p));
        let stage = StageGame::build(&g, &out.last_round_start, &p);
        let mut tampered = out.clone();
        let mut flipped_any = false;
        for (&id, s) in tampered.strategies.iter_mut() {
            let i = g.index_of(id).unwrap();
            let mut profile: Profile = vec![None; 4];
            for (&jd, &js) in &out.strategies {
                profile[g.index_of(jd).unwrap()] = Some(js);
            }
            let accept = stage.utility_of(i, Strategy::Accept, &profile);
            if accept.is_some_and(|u| u.abs() > 1e-12) {
                *s = s.flipped();
                flipped_any = true;
                break;
            }
        }
        assert!(flipped_any);
        assert!(!verify_nash(&g, &tampered, &p));
    }

    #[test]
    fn round_conserves_budget() {
        let g = net(5, &[(0, 1, 0.9), (1, 2, 0.4), (2, 3, 1.0), (3, 4, 0.1), (4, 0, 0.7)]);
        let p = GameParams::default();
        let mut state = held(&[60.0, 10.0, 5.0, 20.0, 5.0]);
        for _ in 0..5 {
            state = best_response_round(&g, &state, &p).unwrap().state;
            assert!((state.total() - 100.0).abs() <= 1e-9 * 100.0);
        }
    }

    #[test]
    fn ranking_order_and_ties() {
        let g = net(3, &[]);
        let ranked = rank_nodes(&g, &held(&[3.0, 1.0, 2.0]), 2);
        assert_eq!(ranked, vec![(NodeId(0), 3.0), (NodeId(2), 2.0)]);
        let tied = rank_nodes(&net(2, &[]), &held(&[2.0, 2.0]), 2);
        assert_eq!(tied, vec![(NodeId(0), 2.0), (NodeId(1), 2.0)]);
        assert_eq!(rank_nodes(&g, &held(&[1.0, 1.0, 1.0]), 10).len(), 3);
    }

    #[test]
    fn params_validation() {
        assert!(GameParams::default().validate().is_ok());
        assert_eq!(GameParams::default().epsilon, 0.1);
        assert!(GameParams {
            epsilon: 0.0,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(GameParams {
            max_rounds: 0,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(GameParams {
            screen_threshold: Some(-1.0),
            ..Default::default()
        }
        .validate()
        .is_err());
    }
}
