//! Comparison models: a cobweb-style supply/demand allocator and plain
//! spreading without the game phase.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{NodeId, SemanticNetwork};
use crate::spreading::{run_spread, ActivationState, SpreadParams};

/// Linear demand `D(o) = demand_intercept - demand_slope * o` and supply
/// `S(o') = supply_intercept + supply_slope * o'`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CobwebParams {
    pub r: f64,
    pub demand_intercept: f64,
    pub demand_slope: f64,
    pub supply_intercept: f64,
    pub supply_slope: f64,
    pub max_iters: usize,
    pub tol: f64,
}

impl CobwebParams {
    /// Parameters whose demand and supply curves cross at `equilibrium`.
    pub fn centered(r: f64, demand_slope: f64, supply_slope: f64, equilibrium: f64) -> Self {
        CobwebParams {
            r,
            demand_intercept: equilibrium * (demand_slope + supply_slope),
            demand_slope,
            supply_intercept: 0.0,
            supply_slope,
            max_iters: 100,
            tol: 1e-3,
        }
    }

    pub fn demand(&self, o: f64) -> f64 {
        self.demand_intercept - self.demand_slope * o
    }

    pub fn supply(&self, expected: f64) -> f64 {
        self.supply_intercept + self.supply_slope * expected
    }

    /// `|r| * (demand_slope + supply_slope)`; below 1 the recurrence is
    /// stable.
    pub fn stability(&self) -> f64 {
        self.r.abs() * (self.demand_slope + self.supply_slope)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.r,
            self.demand_intercept,
            self.demand_slope,
            self.supply_intercept,
            self.supply_slope,
        ];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err(Error::param("cobweb", "coefficients must be finite"));
        }
        if self.demand_slope < 0.0 || self.supply_slope < 0.0 {
            return Err(Error::param("cobweb", "slopes must be >= 0"));
        }
        if self.max_iters == 0 {
            return Err(Error::param("max_iters", "must be >= 1"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::param("tol", "must be > 0"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CobwebState {
    pub o: f64,
    pub expected: f64,
    pub incoming: f64,
}

/// `o <- incoming + r * (D(o) - S(expected))`, with naive expectations.
pub fn cobweb_step(state: CobwebState, params: &CobwebParams) -> CobwebState {
    let excess = params.demand(state.o) - params.supply(state.expected);
    CobwebState {
        o: state.incoming + params.r * excess,
        expected: state.o,
        incoming: state.incoming,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CobwebRow {
    pub iter: usize,
    pub node: usize,
    pub o: f64,
    pub excess_demand: f64,
    pub allocated: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CobwebResult {
    pub allocations: Vec<f64>,
    pub iters: usize,
    pub converged: bool,
    #[serde(skip)]
    pub trace: Vec<CobwebRow>,
}

/// Runs one cobweb recurrence per node, starting from `(initial o, demand)`
/// with the demand as the node's incoming value. Each cycle the budget is
/// handed out in node order, each node taking `min(max(o, 0), remaining)`.
/// Stops once every node moved less than `tol`.
pub fn run_cobweb(nodes: &[(f64, f64)], params: &CobwebParams, budget: f64) -> Result<CobwebResult> {
    params.validate()?;
    if !budget.is_finite() || budget <= 0.0 {
        return Err(Error::param("budget", "must be > 0"));
    }
    let mut states: Vec<CobwebState> = nodes
        .iter()
        .map(|&(o, demand)| CobwebState {
            o,
            expected: o,
            incoming: demand,
        })
        .collect();
    let mut allocations = vec![0.0; nodes.len()];
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iters = 0;
    while iters < params.max_iters {
        iters += 1;
        let mut remaining = budget;
        let mut settled = true;
        for (node, state) in states.iter_mut().enumerate() {
            let excess = params.demand(state.o) - params.supply(state.expected);
            let next = cobweb_step(*state, params);
            settled &= (next.o - state.o).abs() < params.tol;
            *state = next;
            let take = next.o.max(0.0).min(remaining);
            remaining -= take;
            allocations[node] = take;
            trace.push(CobwebRow {
                iter: iters,
                node,
                o: next.o,
                excess_demand: excess,
                allocated: take,
            });
        }
        if settled {
            converged = true;
            break;
        }
    }
    Ok(CobwebResult {
        allocations,
        iters,
        converged,
        trace,
    })
}

/// Spreading alone: activation values are not enhanced or suppressed
/// afterwards.
pub fn run_traditional(
    net: &SemanticNetwork,
    sources: &[(NodeId, f64)],
    params: &SpreadParams,
) -> Result<ActivationState> {
    run_spread(net, sources, params)
}
