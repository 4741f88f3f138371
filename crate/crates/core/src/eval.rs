//! Rank correlation, relatedness scoring and the comparison metrics.

use serde::Serialize;

use crate::baselines::CobwebResult;
use crate::error::{Error, Result};
use crate::game::{run_game, GameOutcome, GameParams};
use crate::network::{NodeId, SemanticNetwork};
use crate::pairs::PairJudgment;
use crate::spreading::{run_spread, ActivationState, SpreadParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spearman {
    pub rho: f64,
    /// Ties were present, so rho is the Pearson correlation of average ranks.
    pub ties: bool,
}

/// 1-based ranks, tied values sharing the mean of their positions.
pub fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut ranks = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Spearman's rho: `1 - 6 sum d^2 / (n (n^2 - 1))` on tie-free data,
/// Pearson correlation of the average ranks otherwise.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<Spearman> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::TooFewSamples {
            required: 2,
            got: xs.len(),
        });
    }
    if let Some(v) = xs.iter().chain(ys).find(|v| !v.is_finite()) {
        return Err(Error::param("spearman", format!("non-finite sample {v}")));
    }
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);
    let ties = has_ties(&rx) || has_ties(&ry);
    let rho = if ties {
        pearson(&rx, &ry)?
    } else {
        let n = xs.len() as f64;
        let d2: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - b) * (a - b)).sum();
        1.0 - 6.0 * d2 / (n * (n * n - 1.0))
    };
    Ok(Spearman {
        rho: rho.clamp(-1.0, 1.0),
        ties,
    })
}

fn has_ties(ranks: &[f64]) -> bool {
    // Tied values share a rank.
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Score of `b` after seeding `a` with the full budget, spreading, rescaling
/// to the budget and (optionally) playing the game: `held(b) / max held`.
fn directed_relatedness(
    net: &SemanticNetwork,
    a: NodeId,
    b: usize,
    sp: &SpreadParams,
    gp: &GameParams,
    use_game: bool,
) -> Result<f64> {
    let spread = run_spread(net, &[(a, sp.budget)], sp)?;
    let mut state = spread.rescaled(gp.budget)?;
    if use_game {
        state = run_game(net, &state, gp)?.final_state;
    }
    let max = state.held.iter().copied().fold(0.0, f64::max);
    Ok(if max > 0.0 {
        (state.held[b] / max).clamp(0.0, 1.0)
    } else {
        0.0
    })
}

/// Symmetric relatedness of two nodes in [0, 1]: the mean of both seeding
/// directions. A node is fully related to itself.
pub fn relatedness(
    net: &SemanticNetwork,
    a: NodeId,
    b: NodeId,
    sp: &SpreadParams,
    gp: &GameParams,
    use_game: bool,
) -> Result<f64> {
    let ia = net.index_of(a)?;
    let ib = net.index_of(b)?;
    if !(net.total_weight_sum() > 0.0) {
        return Err(Error::EdgelessNetwork);
    }
    if a == b {
        return Ok(1.0);
    }
    let forward = directed_relatedness(net, a, ib, sp, gp, use_game)?;
    let backward = directed_relatedness(net, b, ia, sp, gp, use_game)?;
    Ok((forward + backward) / 2.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoredPair {
    pub label_a: String,
    pub label_b: String,
    pub human_score: f64,
    pub model_score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub rho: f64,
    pub pairs: Vec<ScoredPair>,
    pub n_pairs: usize,
    pub tie_warning: bool,
}

/// Scores every pair with [`relatedness`] and correlates the model scores
/// with the human ones.
pub fn evaluate_pairs(
    net: &SemanticNetwork,
    pairs: &[PairJudgment],
    sp: &SpreadParams,
    gp: &GameParams,
    use_game: bool,
) -> Result<EvalReport> {
    if pairs.len() < 2 {
        return Err(Error::TooFewSamples {
            required: 2,
            got: pairs.len(),
        });
    }
    let mut scored = Vec::with_capacity(pairs.len());
    for p in pairs {
        let a = net.id_of(net.index_by_label(&p.label_a)?);
        let b = net.id_of(net.index_by_label(&p.label_b)?);
        scored.push(ScoredPair {
            label_a: p.label_a.clone(),
            label_b: p.label_b.clone(),
            human_score: p.human_score,
            model_score: relatedness(net, a, b, sp, gp, use_game)?,
        });
    }
    let human: Vec<f64> = scored.iter().map(|p| p.human_score).collect();
    let model: Vec<f64> = scored.iter().map(|p| p.model_score).collect();
    let s = spearman(&human, &model)?;
    Ok(EvalReport {
        rho: s.rho,
        n_pairs: scored.len(),
        pairs: scored,
        tie_warning: s.ties,
    })
}

/// Population standard deviation of held energies.
pub fn load_balance(state: &ActivationState) -> Result<f64> {
    let n = state.len();
    if n < 2 {
        return Err(Error::TooFewSamples { required: 2, got: n });
    }
    let mean = state.total() / n as f64;
    let var = state.held.iter().map(|h| (h - mean) * (h - mean)).sum::<f64>() / n as f64;
    Ok(var.sqrt())
}

/// `sum min(allocation, demand) / budget`, clamped to [0, 1].
pub fn utilization(allocations: &[f64], demands: &[f64], budget: f64) -> Result<f64> {
    if allocations.len() != demands.len() {
        return Err(Error::LengthMismatch {
            left: allocations.len(),
            right: demands.len(),
        });
    }
    if !budget.is_finite() || budget <= 0.0 {
        return Err(Error::param("budget", "must be > 0"));
    }
    let used: f64 = allocations.iter().zip(demands).map(|(a, d)| a.min(*d)).sum();
    Ok((used / budget).clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cycles {
    pub count: usize,
    pub converged: bool,
}

/// A finished iterative run.
pub trait Equilibrating {
    fn cycles(&self) -> Cycles;
}

impl Equilibrating for GameOutcome {
    fn cycles(&self) -> Cycles {
        Cycles {
            count: self.rounds,
            converged: self.converged,
        }
    }
}

impl Equilibrating for CobwebResult {
    fn cycles(&self) -> Cycles {
        Cycles {
            count: self.iters,
            converged: self.converged,
        }
    }
}

/// Rounds or iterations a run needed; a capped run reports the cap with
/// `converged = false`.
pub fn cycles_to_equilibrium(run: &impl Equilibrating) -> Cycles {
    run.cycles()
}
