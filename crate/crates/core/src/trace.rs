//! Plot-ready CSV output.

use std::io::Write;

use serde::Serialize;

use crate::baselines::CobwebRow;
use crate::error::Result;
use crate::eval::ScoredPair;
use crate::game::{GameOutcome, Strategy};
use crate::network::SemanticNetwork;
use crate::spreading::ActivationState;

/// Writes `rows` as CSV with a header taken from the row type.
pub fn write_rows<W: Write, T: Serialize>(out: W, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[derive(Serialize)]
struct SpreadRow {
    step: usize,
    node: u32,
    held: f64,
}

/// `step,node,held` for every state of a spreading run.
pub fn write_spread_trace<W: Write>(out: W, net: &SemanticNetwork, states: &[ActivationState]) -> Result<()> {
    let rows: Vec<SpreadRow> = states
        .iter()
        .flat_map(|s| {
            s.held.iter().enumerate().map(move |(i, &held)| SpreadRow {
                step: s.t,
                node: net.id_of(i).0,
                held,
            })
        })
        .collect();
    write_rows(out, &rows)
}

#[derive(Serialize)]
struct GameRow {
    round: usize,
    node: u32,
    held: f64,
    strategy: Option<Strategy>,
    utility: Option<f64>,
    round_cost: Option<f64>,
}

/// `round,node,held,strategy,utility,round_cost`. Round 0 is the starting
/// state; screened-out nodes have empty strategy and utility cells.
pub fn write_game_trace<W: Write>(
    out: W,
    net: &SemanticNetwork,
    initial: &ActivationState,
    outcome: &GameOutcome,
) -> Result<()> {
    let mut rows = Vec::new();
    for (i, &held) in initial.held.iter().enumerate() {
        rows.push(GameRow {
            round: 0,
            node: net.id_of(i).0,
            held,
            strategy: None,
            utility: None,
            round_cost: None,
        });
    }
    for record in &outcome.history {
        for (i, &held) in record.held.iter().enumerate() {
            rows.push(GameRow {
                round: record.round,
                node: net.id_of(i).0,
                held,
                strategy: record.profile[i],
                utility: record.utilities[i],
                round_cost: Some(record.cost),
            });
        }
    }
    write_rows(out, &rows)
}

/// `iter,node,o,excess_demand,allocated`.
pub fn write_cobweb_trace<W: Write>(out: W, rows: &[CobwebRow]) -> Result<()> {
    write_rows(out, rows)
}

/// `label_a,label_b,human_score,model_score`.
pub fn write_pairs<W: Write>(out: W, pairs: &[ScoredPair]) -> Result<()> {
    write_rows(out, pairs)
}
